//! The rational difference operator `R^s(y)` of a node.

use crate::algebra::shift::Shift;
use crate::algebra::{Field, RatFunc};
use crate::diffop::{FactorWitness, FactoredRatOp};
use crate::model::{t_polys, BetheNode, WeightData};

/// Witness `g_i` of factor `i`: `T_i y_{i−1}[−1] / y_i` for `s_i = 1`, `y_i[−1] / (T_i[−1] y_{i−1})`
/// for `s_i = −1`.
pub fn factor_witness<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> RatFunc<F> {
    let h = &w.h;
    let t = RatFunc::from_poly(t_polys(w, &node.parity)[i - 1].clone());
    let yp = RatFunc::from_poly(node.yy(i - 1));
    let y = RatFunc::from_poly(node.yy(i));
    if node.parity.s(i) == 1 {
        t * yp.sh(-1, h) / &y
    } else {
        y.sh(-1, h) / &(t.sh(-1, h) * &yp)
    }
}

/// `∏_i (1 − q_i ln'(g_i) τ)^{s_i}` in the order `i = 1, …, m+n`.
pub fn build_operator<F: Field>(node: &BetheNode<F>, w: &WeightData<F>) -> FactoredRatOp<F> {
    let factors = (1..=node.parity.len())
        .map(|i| FactorWitness::twisted(factor_witness(node, w, i), node.q(i), node.parity.s(i)))
        .collect();
    FactoredRatOp::new(factors, w.h.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::shift::dlog;
    use crate::algebra::{Poly, Quad};
    use crate::diffop::DiffOp;
    use crate::model::ParitySeq;

    #[test]
    fn coefficients_match_definition() {
        let w = WeightData::new(2, 1, vec![vec![2, 1, 1], vec![1, 0, 0]], vec![Quad::zero(), Quad::frac(1, 3)], None, Quad::one())
            .unwrap();
        let h = Quad::one();
        for s in ParitySeq::all(2, 1) {
            let node = BetheNode::new(s.clone(), vec![Poly::from_ints(&[7, 1]), Poly::from_ints(&[-5, 0, 1])], None).unwrap();
            let t = t_polys(&w, &s);
            for i in 1..=3 {
                let si = s.s(i) as i64;
                let r = |p: Poly<Quad>| RatFunc::from_poly(p);
                let (ti, yp, y) = (r(t[i - 1].clone()), r(node.yy(i - 1)), r(node.yy(i)));
                let expect = ti.clone() * yp.sh(-si, &h) * y.sh(si, &h) / &(ti.sh(si, &h) * &yp * &y);
                assert_eq!(dlog(&factor_witness(&node, &w, i), &h), expect);
            }
        }
    }

    #[test]
    fn worked_example_seed_witnesses() {
        let r = Quad::sqrt_of(2);
        let w = WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::zero(), r.clone(), -r], None, Quad::one()).unwrap();
        let node = BetheNode::trivial(ParitySeq::standard(2, 1), None);
        let op = build_operator(&node, &w);
        let t1 = RatFunc::from_poly(Poly::from_ints(&[-1, 1, 3, 1]));
        let gs: Vec<_> = op.factors.iter().map(|f| f.g.clone()).collect();
        assert_eq!(gs, vec![t1.clone(), t1, RatFunc::one()]);
        assert!(op.witness_kernel());
    }

    #[test]
    fn atypical_gl11_is_identity() {
        let w = WeightData::new(1, 1, vec![vec![0, 0], vec![0, 0]], vec![Quad::zero(), Quad::frac(1, 2)], None, Quad::one())
            .unwrap();
        let node = BetheNode::trivial(ParitySeq::standard(1, 1), None);
        let f = build_operator(&node, &w).to_minimal_fraction().unwrap();
        assert_eq!(f.d0, DiffOp::one(Quad::one()));
        assert_eq!(f.d1, DiffOp::one(Quad::one()));
    }
}

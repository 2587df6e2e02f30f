//! Bosonic and fermionic reproduction, periodic and twisted.

use crate::algebra::param::{embed_poly, Param};
use crate::algebra::shift::Shift;
use crate::algebra::{solve_skew_linear, Field, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::model::{phi_psi, t_polys, t_ratio, BetheNode, WeightData};

/// Right side `T_i (T_{i+1})^{-1} y_{i−1}[−s_i] y_{i+1}` of the bosonic equation.
pub fn bosonic_rhs<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> Poly<F> {
    let s = &node.parity;
    let t = t_polys(w, s);
    t_ratio(&t, s, i) * node.yy(i - 1).sh(-(s.s(i) as i64), &w.h) * &node.yy(i + 1)
}

/// Right side of the fermionic equation, `q_i φ y_{i−1}[−s_i] y_{i+1} − q_{i+1} ψ y_{i−1} y_{i+1}[−s_i]`.
pub fn fermionic_rhs<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> Poly<F> {
    let s = &node.parity;
    let si = s.s(i) as i64;
    let (phi, psi) = phi_psi(w, s, i);
    let (yp, yn) = (node.yy(i - 1), node.yy(i + 1));
    let a = (phi * yp.sh(-si, &w.h) * &yn).scale(&node.q(i));
    let b = (psi * &yp * yn.sh(-si, &w.h)).scale(&node.q(i + 1));
    a - &b
}

/// `q = q_i / q_{i+1}`, one when untwisted.
fn twist_ratio<F: Field>(node: &BetheNode<F>, i: usize) -> F {
    node.q(i) / &node.q(i + 1)
}

/// Solutions of the bosonic equation in direction `i`: `ỹ = particular + span(homogeneous)`.
///
/// Untwisted, the homogeneous part is spanned by `y_i` and the family is `particular − c·y_i`;
/// twisted, it is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BosonicFamily<F: Field> {
    pub direction: usize,
    pub particular: Poly<F>,
    pub homogeneous: Vec<Poly<F>>,
}

impl<F: Field> BosonicFamily<F> {
    /// `particular − c·y_i`; `c = ∞` gives `y_i`.
    pub fn member(&self, at: &Param<F>) -> Poly<F> {
        match (at, self.homogeneous.first()) {
            (_, None) => self.particular.clone(),
            (Param::Infinity, Some(y)) => y.clone(),
            (Param::At(c), Some(y)) => self.particular.clone() - &y.scale(c),
        }
    }
    /// The member over `F(c)` with `c` the fresh outermost parameter.
    pub fn generic_member(&self) -> Poly<RatFunc<F>> {
        let p = embed_poly(&self.particular);
        match self.homogeneous.first() {
            None => p,
            Some(y) => p - &embed_poly(y).scale(&RatFunc::x()),
        }
    }
}

/// Solves `q y_i ỹ[−s_i] − ỹ y_i[−s_i] = RHS` with `q = q_i / q_{i+1}` for either sign of `s_i`;
/// this is the form under which the eigenvalue and the operator are invariant.
pub fn bosonic_solve<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> Result<BosonicFamily<F>> {
    let s = &node.parity;
    if !s.is_bosonic(i) {
        return Err(Error::NotApplicable { direction: i, reason: "direction is fermionic".into() });
    }
    let si = s.s(i);
    let y = node.yy(i);
    let c = bosonic_rhs(node, w, i);
    let q = twist_ratio(node, i);
    let a = y.scale(&q);
    let b = -y.sh(-(si as i64), &w.h);
    let dy = y.deg();
    let bound = (c.deg() - dy + 1).max(dy).max(0) as usize;
    let sol = solve_skew_linear(&a, &b, &c, si, bound, &w.h).ok_or(Error::NoSolution { direction: i })?;
    if sol.particular.is_zero() && sol.homogeneous.is_empty() {
        return Err(Error::NoSolution { direction: i });
    }
    Ok(BosonicFamily { direction: i, particular: sol.particular, homogeneous: sol.homogeneous })
}

/// Bosonic reproduction at a point of the family; twisted data ignores `at`.
pub fn bosonic_reproduce<F: Field>(
    node: &BetheNode<F>,
    w: &WeightData<F>,
    i: usize,
    at: &Param<F>,
) -> Result<BetheNode<F>> {
    let fam = bosonic_solve(node, w, i)?;
    let p = fam.member(at);
    if p.is_zero() {
        return Err(Error::NoSolution { direction: i });
    }
    Ok(moved(node, i, p, false))
}

/// Fermionic reproduction: `ỹ_i = (RHS / y_i)[s_i]`, parity `s^{[i]}`.
pub fn fermionic_reproduce<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> Result<BetheNode<F>> {
    let s = &node.parity;
    if s.is_bosonic(i) {
        return Err(Error::NotApplicable { direction: i, reason: "direction is bosonic".into() });
    }
    let r = fermionic_rhs(node, w, i);
    if r.is_zero() {
        return Err(Error::NotApplicable { direction: i, reason: "fermionic right side vanishes".into() });
    }
    let quo = r.div_exact(&node.yy(i)).ok_or_else(|| Error::NotApplicable {
        direction: i,
        reason: "y_i does not divide the fermionic right side".into(),
    })?;
    Ok(moved(node, i, quo.sh(s.s(i) as i64, &w.h), true))
}

/// The unique reproduction in direction `i` when it involves no parameter: fermionic moves and
/// twisted bosonic moves. `None` for an untwisted bosonic direction.
pub fn rigid_reproduce<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> Option<Result<BetheNode<F>>> {
    if !node.parity.is_bosonic(i) {
        return Some(fermionic_reproduce(node, w, i));
    }
    if node.twist.is_some() {
        return Some(twisted_bosonic(node, w, i));
    }
    None
}

fn twisted_bosonic<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> Result<BetheNode<F>> {
    let fam = bosonic_solve(node, w, i)?;
    if !fam.homogeneous.is_empty() {
        return Err(Error::Verification(format!("twisted solution in direction {i} is not unique")));
    }
    if fam.particular.is_zero() {
        return Err(Error::NoSolution { direction: i });
    }
    Ok(moved(node, i, fam.particular, false))
}

/// Either kind, dispatching on the parity; `at` selects the bosonic family member.
pub fn reproduce<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize, at: &Param<F>) -> Result<BetheNode<F>> {
    if i == 0 || i >= node.parity.len() {
        return Err(Error::Invalid(format!("direction {i} out of range")));
    }
    match rigid_reproduce(node, w, i) {
        Some(r) => r,
        None => bosonic_reproduce(node, w, i, at),
    }
}

pub(crate) fn moved<F: Field>(node: &BetheNode<F>, i: usize, p: Poly<F>, fermionic: bool) -> BetheNode<F> {
    let mut n = node.with_y(i, p);
    if fermionic {
        n.parity = n.parity.swapped(i);
    }
    if let Some(t) = n.twist.as_mut() {
        t.swap(i - 1, i);
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quad, Q1};
    use crate::model::{bae_holds, ParitySeq};

    fn q(v: i64) -> Quad {
        Quad::from_int(v)
    }
    fn p(c: &[i64]) -> Poly<Quad> {
        Poly::from_ints(c)
    }
    fn sqrt2() -> WeightData<Quad> {
        let r = Quad::sqrt_of(2);
        WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::zero(), r.clone(), -r], None, Quad::one()).unwrap()
    }

    #[test]
    fn gl2_family() {
        let w = WeightData::new(2, 0, vec![vec![1, 0], vec![1, 0]], vec![q(0), q(5)], None, q(1)).unwrap();
        let n = BetheNode::new(ParitySeq::standard(2, 0), vec![p(&[-2, 1])], None).unwrap();
        let f = bosonic_solve(&n, &w, 1).unwrap();
        assert_eq!(f.particular, p(&[2, 0, 1]));
        assert_eq!(f.homogeneous, vec![p(&[-2, 1])]);
        assert_eq!(bosonic_reproduce(&n, &w, 1, &Param::Infinity).unwrap(), n);
    }

    #[test]
    fn worked_example_steps() {
        let w = sqrt2();
        let seed = BetheNode::trivial(ParitySeq::standard(2, 1), None);
        let f = bosonic_solve(&seed, &w, 1).unwrap();
        assert_eq!(f.particular, p(&[0, 1]));
        assert_eq!(f.member(&Param::Infinity), Poly::one());
        // over Q(√2)(c)
        let wc = w.map(|v| Q1::constant(v.clone()));
        let c = Q1::x();
        let fam = BetheNode::new(seed.parity.clone(), vec![f.generic_member(), Poly::one()], None).unwrap();
        assert_eq!(fam.y[0], Poly::new(vec![-c.clone(), Q1::one()]));
        let n1 = fermionic_reproduce(&fam, &wc, 2).unwrap();
        let k = |v: i64| Q1::from_int(v);
        let y2 = Poly::new(vec![c.clone() + &k(1), c.clone() * &k(3), -(c.clone() * &k(3)) - &k(6), k(4)]);
        assert_eq!(n1.parity.signs(), &[1, -1, 1]);
        assert_eq!(n1.y[1], y2.monic());
        let n2 = fermionic_reproduce(&n1, &wc, 1).unwrap();
        // 6(x−1)^4 − 9(x−1)^2 + 1
        let u = p(&[-1, 1]);
        let y1 = u.pow(4).scale(&q(6)) - &u.pow(2).scale(&q(9)) + &p(&[1]);
        assert_eq!(n2.parity.signs(), &[-1, 1, 1]);
        assert_eq!(n2.y[0], embed_poly(&y1).monic());
        assert_eq!(fermionic_reproduce(&n1, &wc, 2).unwrap(), fam);
    }

    #[test]
    fn fermionic_involution_and_bae() {
        let w = sqrt2();
        let seed = BetheNode::trivial(ParitySeq::standard(2, 1), None);
        let a = bosonic_reproduce(&seed, &w, 1, &Param::At(q(3))).unwrap();
        assert!(bae_holds(&a, &w));
        let b = fermionic_reproduce(&a, &w, 2).unwrap();
        assert!(bae_holds(&b, &w));
        assert_eq!(fermionic_reproduce(&b, &w, 2).unwrap(), a);
    }

    #[test]
    fn twisted_examples() {
        let qq = q(3);
        let w = WeightData::new(2, 0, vec![vec![1, 0]], vec![q(0)], Some(vec![qq.clone(), q(1)]), q(1)).unwrap();
        let n = BetheNode::trivial(ParitySeq::standard(2, 0), w.twist.clone());
        let f = bosonic_solve(&n, &w, 1).unwrap();
        assert!(f.homogeneous.is_empty());
        // α = 1/(q−1), β = −1/(q−1)^2
        let qm = qq.clone() - &q(1);
        assert_eq!(f.particular, Poly::new(vec![-(qm.clone() * &qm).inv().unwrap(), qm.inv().unwrap()]));
        let m = reproduce(&n, &w, 1, &Param::Infinity).unwrap();
        assert_eq!(m.y[0], Poly::new(vec![-qm.inv().unwrap(), q(1)]));
        assert_eq!(m.twist, Some(vec![q(1), qq]));

        let (q1, q2) = (q(5), q(2));
        let w = WeightData::new(1, 1, vec![vec![1, 0]], vec![q(0)], Some(vec![q1.clone(), q2.clone()]), q(1)).unwrap();
        let n = BetheNode::trivial(ParitySeq::standard(1, 1), w.twist.clone());
        let m = fermionic_reproduce(&n, &w, 1).unwrap();
        let d = q1.clone() - &q2;
        let expect = Poly::new(vec![q1.clone() - &d, d]);
        assert_eq!(m.y[0], expect.monic());
        assert_eq!(m.parity.signs(), &[-1, 1]);
    }

    #[test]
    fn twisted_odd_odd_direction() {
        use crate::diffop::rat_equal;
        use crate::model::eigenvalue;
        use crate::population::build_operator;
        let w = WeightData::new(1, 2, vec![vec![1, 0, 0], vec![2, 1, 0]], vec![Quad::frac(1, 3), Quad::frac(-5, 2)], Some(vec![q(7), q(-1), q(4)]), q(1))
            .unwrap();
        let n = BetheNode::trivial(ParitySeq::standard(1, 2), w.twist.clone());
        let m = reproduce(&n, &w, 2, &Param::Infinity).unwrap();
        assert_eq!(m.twist, Some(vec![q(7), q(4), q(-1)]));
        assert!(bae_holds(&m, &w));
        assert_eq!(eigenvalue(&m, &w), eigenvalue(&n, &w));
        assert!(rat_equal(&build_operator(&m, &w), &build_operator(&n, &w)).unwrap());
        // ỹ = x + 17/10 solves q·ỹ[1] − ỹ = −1 with q = −1/4
        assert_eq!(m.y[1], Poly::new(vec![Quad::frac(17, 10), q(1)]));
    }

    #[test]
    fn atypical_has_no_move() {
        let w = WeightData::new(1, 1, vec![vec![0, 0]], vec![q(0)], None, q(1)).unwrap();
        let n = BetheNode::trivial(ParitySeq::standard(1, 1), None);
        assert!(matches!(fermionic_reproduce(&n, &w, 1), Err(Error::NotApplicable { .. })));
    }
}

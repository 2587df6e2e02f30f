//! The Bethe ansatz equations, genericity of `y`, and the transfer-matrix eigenvalue.

use serde::Serialize;

use crate::algebra::shift::Shift;
use crate::algebra::{Field, Poly, RatFunc};
use crate::error::{Error, Result};

use super::node::BetheNode;
use super::tpoly::{t_polys, t_ratio, weight_transform};
use super::weights::WeightData;

/// Left sides of the BAE at the given roots, one list per color. A solution gives all ones.
pub fn bae_residuals<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, t: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let s = &node.parity;
    let r = s.len();
    if t.len() + 1 != r {
        return Err(Error::Invalid(format!("expected {} root lists, got {}", r - 1, t.len())));
    }
    let tw: Vec<Vec<u32>> = w.weights.iter().map(|l| weight_transform(l, s)).collect();
    let h = &w.h;
    let empty = Vec::new();
    let roots = |i: usize| if i == 0 || i == r { &empty } else { &t[i - 1] };
    let mut out = Vec::with_capacity(r - 1);
    for i in 1..r {
        let (si, sj) = (s.s(i) as i64, s.s(i + 1) as i64);
        let hs = |k: i64| h.clone() * &F::from_int(k);
        let mut res = Vec::with_capacity(t[i - 1].len());
        for (j, tj) in t[i - 1].iter().enumerate() {
            let mut num = node.q(i);
            let mut den = node.q(i + 1);
            for (l, z) in tw.iter().zip(&w.z) {
                let (a, b) = (si * l[i - 1] as i64, sj * l[i] as i64);
                if a != b {
                    num = num * (tj.clone() - z + &hs(a));
                    den = den * (tj.clone() - z + &hs(b));
                }
            }
            for u in roots(i - 1) {
                num = num * (tj.clone() - u + &hs(si));
                den = den * (tj.clone() - u);
            }
            if si != -sj {
                for (k, u) in t[i - 1].iter().enumerate() {
                    if k != j {
                        num = num * (tj.clone() - u - &hs(si));
                        den = den * (tj.clone() - u + &hs(sj));
                    }
                }
            }
            for u in roots(i + 1) {
                num = num * (tj.clone() - u);
                den = den * (tj.clone() - u - &hs(sj));
            }
            let inv = den.inv().ok_or_else(|| {
                Error::Pole(format!("denominator vanishes at root {} of color {i}", j + 1))
            })?;
            res.push(num * &inv);
        }
        out.push(res);
    }
    Ok(out)
}

/// The BAE of color `i` cleared of denominators: at every simple root `t` of `y_i` the equation
/// reads `N(t) = D(t)`.
pub fn bae_polys<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, i: usize) -> (Poly<F>, Poly<F>) {
    let s = &node.parity;
    let (si, sj) = (s.s(i) as i64, s.s(i + 1) as i64);
    let h = &w.h;
    let hs = |k: i64| h.clone() * &F::from_int(k);
    let mut num = Poly::constant(node.q(i));
    let mut den = Poly::constant(node.q(i + 1));
    for (l, z) in w.weights.iter().zip(&w.z) {
        let l = weight_transform(l, s);
        let (a, b) = (si * l[i - 1] as i64, sj * l[i] as i64);
        if a != b {
            num = num * Poly::linear(&(z.clone() - &hs(a)));
            den = den * Poly::linear(&(z.clone() - &hs(b)));
        }
    }
    let (yp, y, yn) = (node.yy(i - 1), node.yy(i), node.yy(i + 1));
    num = num * yp.sh(-si, h) * &yn;
    den = den * &yp * yn.sh(sj, h);
    if si != -sj {
        num = num * y.sh(si, h).scale(&hs(-si).inv().unwrap());
        den = den * y.sh(-sj, h).scale(&hs(sj).inv().unwrap());
    }
    (num, den)
}

/// Outcome of the root-free BAE test in one direction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ColorCheck {
    pub direction: usize,
    pub ok: bool,
    pub reason: Option<String>,
}

/// Checks every color without computing roots: `y_i | N − D` and `gcd(y_i, D) = 1`. In bosonic
/// directions `y_i` must also be squarefree.
pub fn bae_check<F: Field>(node: &BetheNode<F>, w: &WeightData<F>) -> Vec<ColorCheck> {
    (1..node.parity.len())
        .map(|i| {
            let y = node.yy(i);
            let (n, d) = bae_polys(node, w, i);
            let reason = if node.parity.is_bosonic(i) && !y.is_squarefree() {
                Some("repeated root in a bosonic direction".to_string())
            } else if !y.coprime(&d) {
                Some("a root of y meets a remaining denominator".to_string())
            } else if !y.divides(&(n - &d)) {
                Some("y does not divide the cleared equation".to_string())
            } else {
                None
            };
            ColorCheck { direction: i, ok: reason.is_none(), reason }
        })
        .collect()
}

pub fn bae_holds<F: Field>(node: &BetheNode<F>, w: &WeightData<F>) -> bool {
    bae_check(node, w).iter().all(|c| c.ok)
}

/// Result of the genericity test; `violations` names the clause and direction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Genericity {
    pub generic: bool,
    pub violations: Vec<String>,
}

pub fn is_generic<F: Field>(node: &BetheNode<F>, w: &WeightData<F>) -> Genericity {
    let s = &node.parity;
    let h = &w.h;
    let t = t_polys(w, s);
    let mut v = Vec::new();
    for i in 1..s.len() {
        let (si, sj) = (s.s(i) as i64, s.s(i + 1) as i64);
        let y = node.yy(i);
        if si == sj && (!y.is_squarefree() || !y.coprime(&y.sh(1, h))) {
            v.push(format!("(i) direction {i}: y_{i} has a repeated root or shares a root with y_{i}[1]"));
        }
        let (yp, yn) = (node.yy(i - 1), node.yy(i + 1));
        if !y.coprime(&yp) || !y.coprime(&yp.sh(-si, h)) || !y.coprime(&yn.sh(sj, h)) {
            v.push(format!("(ii) direction {i}: y_{i} shares a root with a neighbour"));
        }
        if !y.coprime(&t_ratio(&t, s, i)) {
            v.push(format!("(iii) direction {i}: y_{i} shares a root with the T ratio"));
        }
    }
    Genericity { generic: v.is_empty(), violations: v }
}

/// `E(x) = Σ_a s_a q_a (T_a / T_a[s_a]) (y_{a−1}[−s_a] / y_{a−1}) (y_a[s_a] / y_a)`.
pub fn eigenvalue<F: Field>(node: &BetheNode<F>, w: &WeightData<F>) -> RatFunc<F> {
    let s = &node.parity;
    let h = &w.h;
    let t = t_polys(w, s);
    let mut e = RatFunc::zero();
    for a in 1..=s.len() {
        let sa = s.s(a) as i64;
        let ta = RatFunc::from_poly(t[a - 1].clone());
        let yp = RatFunc::from_poly(node.yy(a - 1));
        let y = RatFunc::from_poly(node.yy(a));
        let term = ta.clone() / &ta.sh(sa, h) * (yp.sh(-sa, h) / &yp) * (y.sh(sa, h) / &y);
        e = e + &(term * &RatFunc::constant(node.q(a) * &F::from_int(sa)));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quad;
    use crate::model::ParitySeq;

    fn q(v: i64) -> Quad {
        Quad::from_int(v)
    }
    fn p(c: &[i64]) -> Poly<Quad> {
        Poly::from_ints(c)
    }
    fn gl2() -> WeightData<Quad> {
        WeightData::new(2, 0, vec![vec![1, 0], vec![1, 0]], vec![q(0), q(5)], None, q(1)).unwrap()
    }

    #[test]
    fn gl2_residual() {
        let w = gl2();
        let n = BetheNode::new(ParitySeq::standard(2, 0), vec![p(&[-2, 1])], None).unwrap();
        assert_eq!(bae_residuals(&n, &w, &[vec![q(2)]]).unwrap(), vec![vec![q(1)]]);
        assert!(bae_holds(&n, &w));
        let bad = BetheNode::new(ParitySeq::standard(2, 0), vec![p(&[-3, 1])], None).unwrap();
        assert_ne!(bae_residuals(&bad, &w, &[vec![q(3)]]).unwrap(), vec![vec![q(1)]]);
        assert!(!bae_holds(&bad, &w));
        assert_eq!(bae_residuals(&n, &w, &[vec![]]).unwrap(), vec![Vec::<Quad>::new()]);
    }

    #[test]
    fn gl11_residual() {
        let w = WeightData::new(1, 1, vec![vec![1, 0], vec![1, 1]], vec![q(0), q(4)], None, q(1)).unwrap();
        let n = BetheNode::new(ParitySeq::standard(1, 1), vec![p(&[-1, 1])], None).unwrap();
        assert_eq!(bae_residuals(&n, &w, &[vec![q(1)]]).unwrap(), vec![vec![q(1)]]);
        assert!(bae_holds(&n, &w));
    }

    #[test]
    fn genericity_examples() {
        let w = gl2();
        let s = ParitySeq::standard(2, 0);
        let y = |c: &[i64]| BetheNode::new(s.clone(), vec![p(c)], None).unwrap();
        assert!(!is_generic(&y(&[0, -1, 1]), &w).generic);
        let g = is_generic(&y(&[1, 1]), &w);
        assert!(!g.generic && g.violations[0].starts_with("(iii)"));
        assert!(is_generic(&y(&[-2, 1]), &w).generic);
    }

    #[test]
    fn eigenvalues() {
        let w = WeightData::new(1, 1, vec![vec![1, 0]], vec![q(0)], None, q(1)).unwrap();
        let n = BetheNode::trivial(ParitySeq::standard(1, 1), None);
        assert_eq!(eigenvalue(&n, &w), RatFunc::new(p(&[1]), p(&[0, 1])));
        let n = BetheNode::new(ParitySeq::standard(2, 0), vec![p(&[-2, 1])], None).unwrap();
        let r = |a: &[i64], b: &[i64]| RatFunc::new(p(a), p(b));
        let expect = r(&[1, 1], &[0, 1]) * r(&[-4, 1], &[-5, 1]) * r(&[-3, 1], &[-2, 1]) + r(&[-1, 1], &[-2, 1]);
        assert_eq!(eigenvalue(&n, &gl2()), expect);
    }
}

//! The skew polynomial ring `K[τ]` over rational functions, with `τ·f = f[1]·τ`.

use crate::algebra::shift::Shift;
use crate::algebra::{Field, RatFunc};

/// `Σ a_j τ^j`; coefficient `j` multiplies `τ^j` on the left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiffOp<F: Field> {
    c: Vec<RatFunc<F>>,
    h: F,
}

impl<F: Field> DiffOp<F> {
    pub fn new(mut c: Vec<RatFunc<F>>, h: F) -> Self {
        while c.last().is_some_and(RatFunc::is_zero) {
            c.pop();
        }
        DiffOp { c, h }
    }
    pub fn zero(h: F) -> Self {
        Self::new(vec![], h)
    }
    pub fn one(h: F) -> Self {
        Self::new(vec![RatFunc::one()], h)
    }
    /// Multiplication by a function.
    pub fn scalar(f: RatFunc<F>, h: F) -> Self {
        Self::new(vec![f], h)
    }
    /// `1 − f·τ`.
    pub fn first_order(f: RatFunc<F>, h: F) -> Self {
        Self::new(vec![RatFunc::one(), -f], h)
    }
    pub fn coeffs(&self) -> &[RatFunc<F>] {
        &self.c
    }
    pub fn coeff(&self, j: usize) -> RatFunc<F> {
        self.c.get(j).cloned().unwrap_or_else(RatFunc::zero)
    }
    pub fn step(&self) -> &F {
        &self.h
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn order(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn lead(&self) -> RatFunc<F> {
        self.c.last().cloned().unwrap_or_else(RatFunc::zero)
    }

    fn check_step(&self, o: &Self) {
        assert!(self.h == o.h, "operators with different shift steps");
    }
    pub fn add(&self, o: &Self) -> Self {
        self.check_step(o);
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|j| self.coeff(j) + o.coeff(j)).collect(), self.h.clone())
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn neg(&self) -> Self {
        Self::new(self.c.iter().map(|v| -v.clone()).collect(), self.h.clone())
    }
    /// `(Σ a_i τ^i)(Σ b_j τ^j) = Σ a_i b_j[i] τ^{i+j}`.
    pub fn mul(&self, o: &Self) -> Self {
        self.check_step(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.h.clone());
        }
        let mut out = vec![RatFunc::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + &(a.clone() * &b.sh(i as i64, &self.h));
            }
        }
        Self::new(out, self.h.clone())
    }
    /// `self · u` for a function `u`.
    pub fn mul_fn(&self, u: &RatFunc<F>) -> Self {
        Self::new(
            self.c.iter().enumerate().map(|(j, a)| a.clone() * &u.sh(j as i64, &self.h)).collect(),
            self.h.clone(),
        )
    }
    /// `q·τ^k·self`.
    fn left_monomial(&self, q: &RatFunc<F>, k: usize) -> Self {
        let mut out = vec![RatFunc::zero(); k];
        out.extend(self.c.iter().map(|b| q.clone() * &b.sh(k as i64, &self.h)));
        Self::new(out, self.h.clone())
    }
    /// `self·q·τ^k`.
    fn right_monomial(&self, q: &RatFunc<F>, k: usize) -> Self {
        let mut out = vec![RatFunc::zero(); k];
        out.extend(self.c.iter().enumerate().map(|(j, b)| b.clone() * &q.sh(j as i64, &self.h)));
        Self::new(out, self.h.clone())
    }
    /// Action on a function: `Σ a_j f[j]`.
    pub fn apply(&self, f: &RatFunc<F>) -> RatFunc<F> {
        self.c
            .iter()
            .enumerate()
            .fold(RatFunc::zero(), |acc, (j, a)| acc + &(a.clone() * &f.sh(j as i64, &self.h)))
    }

    /// `(Q, R)` with `self = Q·d + R` and `ord R < ord d`.
    pub fn right_divmod(&self, d: &Self) -> (Self, Self) {
        self.check_step(d);
        let s = d.order().expect("division by the zero operator");
        let bs = d.lead();
        let mut r = self.clone();
        let mut q = vec![RatFunc::zero(); self.c.len().saturating_sub(s)];
        while let Some(ro) = r.order().filter(|&o| o >= s) {
            let k = ro - s;
            let t = r.lead() / &bs.sh(k as i64, &self.h);
            r = r.sub(&d.left_monomial(&t, k));
            q[k] = q[k].clone() + &t;
        }
        (Self::new(q, self.h.clone()), r)
    }
    /// `(Q, R)` with `self = d·Q + R` and `ord R < ord d`.
    pub(crate) fn left_divmod(&self, d: &Self) -> (Self, Self) {
        self.check_step(d);
        let s = d.order().expect("division by the zero operator");
        let bs = d.lead();
        let mut r = self.clone();
        let mut q = vec![RatFunc::zero(); self.c.len().saturating_sub(s)];
        while let Some(ro) = r.order().filter(|&o| o >= s) {
            let k = ro - s;
            let t = (r.lead() / &bs).sh(-(s as i64), &self.h);
            r = r.sub(&d.right_monomial(&t, k));
            q[k] = q[k].clone() + &t;
        }
        (Self::new(q, self.h.clone()), r)
    }
    /// Greatest common right divisor, normalized to constant term one when possible.
    pub fn gcrd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.right_divmod(&b).1;
            a = b;
            b = r;
        }
        let c0 = a.coeff(0);
        if c0.is_zero() {
            let l = a.lead();
            return Self::scalar(l.inv().unwrap(), a.h.clone()).mul(&a);
        }
        Self::scalar(c0.inv().unwrap(), a.h.clone()).mul(&a)
    }
    /// `(U, V)` with `self·U = o·V`, from the left Euclidean algorithm.
    pub(crate) fn lcrm_cofactors(&self, o: &Self) -> (Self, Self) {
        let h = self.h.clone();
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(h.clone()), Self::zero(h.clone()));
        let (mut t0, mut t1) = (Self::zero(h.clone()), Self::one(h.clone()));
        while !r1.is_zero() {
            let (q, r2) = r0.left_divmod(&r1);
            let s2 = s0.sub(&s1.mul(&q));
            let t2 = t0.sub(&t1.mul(&q));
            (r0, r1) = (r1, r2);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        (s1, t1.neg())
    }
    /// Right multiplication by the function making the constant term one.
    pub fn normalize_constant(&self) -> Option<(Self, RatFunc<F>)> {
        let u = self.coeff(0).inv()?;
        Some((self.mul_fn(&u), u))
    }
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (j, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let s = a.render_in("x", names);
            parts.push(match j {
                0 => s,
                1 => format!("({s})*tau"),
                _ => format!("({s})*tau^{j}"),
            });
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, Quad};

    type R = RatFunc<Quad>;

    fn p(c: &[i64]) -> R {
        R::from_poly(Poly::from_ints(c))
    }
    fn h() -> Quad {
        Quad::one()
    }

    #[test]
    fn tau_times_x() {
        let tau = DiffOp::new(vec![R::zero(), R::one()], h());
        let x = DiffOp::scalar(R::x(), h());
        assert_eq!(tau.mul(&x), DiffOp::new(vec![R::zero(), p(&[-1, 1])], h()));
    }

    #[test]
    fn product_of_first_order() {
        let a = DiffOp::first_order(R::x(), h());
        let b = DiffOp::first_order(R::one(), h());
        let expect = DiffOp::new(vec![R::one(), p(&[-1, -1]), p(&[0, 1])], h());
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn divisions_roundtrip() {
        let a = DiffOp::new(vec![p(&[1, 2]), p(&[0, 0, 1]), p(&[3]), R::new(Poly::one(), Poly::from_ints(&[1, 1]))], h());
        let d = DiffOp::new(vec![p(&[2]), p(&[1, 1])], h());
        let (q, r) = a.right_divmod(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.order().unwrap_or(0) < 1);
        let (q, r) = a.left_divmod(&d);
        assert_eq!(d.mul(&q).add(&r), a);
        let (u, v) = a.lcrm_cofactors(&d);
        assert_eq!(a.mul(&u), d.mul(&v));
        assert!(!u.is_zero());
    }
}

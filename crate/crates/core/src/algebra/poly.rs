//! Dense univariate polynomials over a [`Field`], coefficients in ascending order.

use std::ops::{Add, Mul, Neg, Sub};

use super::field::{atom, Field};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F: Field> {
    c: Vec<F>,
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        Poly { c }
    }
    pub fn zero() -> Self {
        Poly { c: vec![] }
    }
    pub fn one() -> Self {
        Self::constant(F::one())
    }
    pub fn constant(v: F) -> Self {
        Self::new(vec![v])
    }
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }
    /// `x − a`.
    pub fn linear(a: &F) -> Self {
        Self::new(vec![-a.clone(), F::one()])
    }
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| F::from_int(v)).collect())
    }
    pub fn product<'a, I: IntoIterator<Item = &'a Poly<F>>>(it: I) -> Self {
        it.into_iter().fold(Self::one(), |acc, p| acc * p)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }
    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> F {
        self.c.get(k).cloned().unwrap_or_else(F::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    /// Degree with `−1` for the zero polynomial.
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }
    pub fn lead(&self) -> F {
        self.c.last().cloned().unwrap_or_else(F::zero)
    }
    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly { c: self.c.iter().map(|v| v.clone() * k).collect() }
    }
    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero lead")),
        }
    }
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for v in self.c.iter().rev() {
            acc = acc * x + v;
        }
        acc
    }
    /// `p(x + a)` by repeated synthetic division.
    pub fn translate(&self, a: &F) -> Self {
        if a.is_zero() || self.c.len() <= 1 {
            return self.clone();
        }
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = c[j + 1].clone() * a;
                c[j] = c[j].clone() + &t;
            }
        }
        Self::new(c)
    }
    /// `p(k·x)`.
    pub fn dilate(&self, k: &F) -> Self {
        let mut pw = F::one();
        let mut out = Vec::with_capacity(self.c.len());
        for v in &self.c {
            out.push(v.clone() * &pw);
            pw = pw * k;
        }
        Self::new(out)
    }
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }
    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, v)| v.clone() * &F::from_int(k as i64))
                .collect(),
        )
    }
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self)
    }
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.c.iter().map(f).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = r[k + dd].clone() * &inv;
            if !t.is_zero() {
                for (j, dj) in d.c.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - &(t.clone() * dj);
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }
    /// Exact quotient, `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }
    pub fn divides(&self, other: &Self) -> bool {
        other.divrem(self).1.is_zero()
    }
    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        let (mut a, mut b) = if self.c.len() >= other.c.len() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            let r = a.divrem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self.div_exact(&g).unwrap() * other).monic()
    }
    pub fn coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_constant()
    }
    /// True when the polynomial has no repeated roots.
    pub fn is_squarefree(&self) -> bool {
        self.is_constant() || self.gcd(&self.derivative()).is_constant()
    }

    /// Rendering in the variable `var`; coefficients rendered with `names`.
    pub fn render_in(&self, var: &str, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, v) in self.c.iter().enumerate().rev() {
            if v.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let cs = v.render(names);
            let term = if k == 0 {
                atom_if_needed(&cs, !out.is_empty())
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{}*{mono}", atom(&cs))
            };
            if out.is_empty() {
                out = term;
            } else if let Some(t) = term.strip_prefix('-') {
                out.push('-');
                out.push_str(t);
            } else {
                out.push('+');
                out.push_str(&term);
            }
        }
        out
    }
}

fn atom_if_needed(s: &str, trailing: bool) -> String {
    if trailing {
        atom(s)
    } else {
        s.to_string()
    }
}

impl<F: Field> Add<&Poly<F>> for Poly<F> {
    type Output = Poly<F>;
    fn add(self, o: &Poly<F>) -> Poly<F> {
        let (mut long, short) = if self.c.len() >= o.c.len() { (self.c, &o.c[..]) } else { (o.c.clone(), &self.c[..]) };
        for (i, v) in short.iter().enumerate() {
            long[i] = long[i].clone() + v;
        }
        Poly::new(long)
    }
}
impl<F: Field> Sub<&Poly<F>> for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, o: &Poly<F>) -> Poly<F> {
        self + &(-o.clone())
    }
}
impl<F: Field> Mul<&Poly<F>> for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, o: &Poly<F>) -> Poly<F> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        let mut c = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(c)
    }
}
impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly { c: self.c.into_iter().map(|v| -v).collect() }
    }
}
super::forward_owned_ops!(ring [F: Field] Poly<F>);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quad;

    type P = Poly<Quad>;

    #[test]
    fn divrem_roundtrip() {
        let a = P::from_ints(&[1, 2, 3, 4, 5]);
        let b = P::from_ints(&[-1, 0, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q * &b + &r, a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn translate_matches_eval() {
        let p = P::from_ints(&[3, -1, 0, 2]);
        let a = Quad::frac(5, 3);
        let t = p.translate(&a);
        for v in -3..4 {
            let x = Quad::from_int(v);
            assert_eq!(t.eval(&x), p.eval(&(x.clone() + &a)));
        }
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = P::from_ints(&[-2, 1]);
        let a = f.clone() * P::from_ints(&[1, 1]);
        let b = f.clone() * P::from_ints(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn render_descending() {
        let p = P::from_ints(&[-1, 1, 3, 1]);
        assert_eq!(p.render_in("x", &[]), "x^3+3*x^2+x-1");
        let q = P::new(vec![Quad::sqrt_of(2), Quad::from_int(-1)]);
        assert_eq!(q.render_in("x", &[]), "-x+r");
    }
}

//! Elements `a + b·√d` of a quadratic field with rational `a`, `b`.
//!
//! The radicand travels with each element. Purely rational elements carry `d = 0` and mix
//! with any radicand; mixing two different nonzero radicands is a programming error.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quad {
    a: BigRational,
    b: BigRational,
    d: i64,
}

fn join(d1: i64, d2: i64) -> i64 {
    match (d1, d2) {
        (0, d) | (d, 0) => d,
        (x, y) if x == y => x,
        (x, y) => panic!("incompatible radicals √{x} and √{y}"),
    }
}

/// True when `d` is squarefree and not 0 or 1.
pub fn valid_radicand(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Square root of a nonnegative rational, when rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let m = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&m * &m) == r.denom() {
        Some(BigRational::new(n, m))
    } else {
        None
    }
}

/// Squarefree part of a nonzero rational, as an integer radicand.
pub fn squarefree_part(r: &BigRational) -> i64 {
    // r = p/q ~ p·q up to squares
    let mut n: BigInt = r.numer() * r.denom();
    let sign = if n.is_negative() { -1 } else { 1 };
    n = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= n;
    let v: i64 = out.try_into().expect("radicand out of range");
    sign * v
}

impl Quad {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() {
            Quad { a, b, d: 0 }
        } else {
            assert!(valid_radicand(d), "radicand {d} is not squarefree");
            Quad { a, b, d }
        }
    }
    pub fn rational(a: BigRational) -> Self {
        Quad { a, b: BigRational::zero(), d: 0 }
    }
    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }
    pub fn frac(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(p.into(), q.into()))
    }
    /// `√d`.
    pub fn sqrt_of(d: i64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }
    pub fn re(&self) -> &BigRational {
        &self.a
    }
    pub fn im(&self) -> &BigRational {
        &self.b
    }
    pub fn radicand(&self) -> i64 {
        self.d
    }
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
    pub fn conj(&self) -> Self {
        Quad { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }
    /// `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.d.into()) * &self.b * &self.b
    }

    /// Square root inside `Q(√d)`, where `d` is this element's radicand or `hint` if rational.
    pub fn sqrt(&self, hint: i64) -> Option<Quad> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.b.is_zero() {
            if let Some(s) = rational_sqrt(&self.a) {
                return Some(Quad::rational(s));
            }
            if hint != 0 && valid_radicand(hint) {
                let dq = BigRational::from_integer(hint.into());
                if let Some(s) = rational_sqrt(&(&self.a / &dq)) {
                    return Some(Quad::new(BigRational::zero(), s, hint));
                }
            }
            return None;
        }
        // (u + v√d)² = a + b√d  ⇒  u² = (a ± √(a² − d b²)) / 2, v = b / 2u
        let n = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
            if let Some(u) = rational_sqrt(&cand) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.b / (&two * &u);
                let r = Quad::new(u, v, self.d);
                if &(r.clone() * &r) == self {
                    return Some(r);
                }
            }
        }
        None
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

fn rat_str(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Add<&Quad> for Quad {
    type Output = Quad;
    fn add(self, o: &Quad) -> Quad {
        let d = join(self.d, o.d);
        Quad::new(self.a + &o.a, self.b + &o.b, d)
    }
}
impl Sub<&Quad> for Quad {
    type Output = Quad;
    fn sub(self, o: &Quad) -> Quad {
        let d = join(self.d, o.d);
        Quad::new(self.a - &o.a, self.b - &o.b, d)
    }
}
impl Mul<&Quad> for Quad {
    type Output = Quad;
    fn mul(self, o: &Quad) -> Quad {
        let d = join(self.d, o.d);
        let dq = BigRational::from_integer(d.into());
        let a = &self.a * &o.a + dq * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        Quad::new(a, b, d)
    }
}
impl Div<&Quad> for Quad {
    type Output = Quad;
    fn div(self, o: &Quad) -> Quad {
        self * &o.inv().expect("division by zero")
    }
}
impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad { a: -self.a, b: -self.b, d: self.d }
    }
}
super::forward_owned_ops!(Quad);

impl Field for Quad {
    const LEVELS: usize = 0;
    fn zero() -> Self {
        Quad::from_int(0)
    }
    fn one() -> Self {
        Quad::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Quad::new(&self.a / &n, -(&self.b / &n), self.d))
    }
    fn from_quad(q: &Quad) -> Self {
        q.clone()
    }
    fn generator(_level: usize) -> Option<Self> {
        None
    }
    fn as_quad(&self) -> Option<Quad> {
        Some(self.clone())
    }
    fn render(&self, _names: &[String]) -> String {
        let rad = |b: &BigRational| -> String {
            if b.is_one() {
                "r".into()
            } else if (-b).is_one() {
                "-r".into()
            } else {
                format!("{}*r", rat_str(b))
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => rat_str(&self.a),
            (true, false) => rad(&self.b),
            (false, false) => {
                let r = rad(&self.b);
                if r.starts_with('-') {
                    format!("{}{}", rat_str(&self.a), r)
                } else {
                    format!("{}+{}", rat_str(&self.a), r)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let r = Quad::sqrt_of(2);
        assert_eq!(r.clone() * &r, Quad::from_int(2));
    }

    #[test]
    fn inverse_of_one_plus_root() {
        let x = Quad::from_int(1) + Quad::sqrt_of(2);
        let y = x.inv().unwrap();
        assert_eq!(x * y, Quad::one());
    }

    #[test]
    fn render_half_radical() {
        let x = Quad::new(BigRational::zero(), BigRational::new(1.into(), 2.into()), 2);
        assert_eq!(x.render(&[]), "1/2*r");
        let y = Quad::frac(-3, 4) - Quad::sqrt_of(-3);
        assert_eq!(y.render(&[]), "-3/4-r");
    }

    #[test]
    fn sqrt_in_field() {
        // (1 + √2)² = 3 + 2√2
        let t = Quad::new(BigRational::from_integer(3.into()), BigRational::from_integer(2.into()), 2);
        let s = t.sqrt(0).unwrap();
        assert_eq!(s.clone() * &s, t);
        assert_eq!(Quad::from_int(-3).sqrt(-3), Some(Quad::sqrt_of(-3)));
        assert_eq!(Quad::from_int(-4).sqrt(-1).unwrap().render(&[]), "2*r");
        assert!(Quad::from_int(3).sqrt(2).is_none());
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&BigRational::from_integer((-12).into())), -3);
        assert_eq!(squarefree_part(&BigRational::new(8.into(), 9.into())), 2);
        assert!(valid_radicand(-1));
        assert!(!valid_radicand(12));
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn zero_division_panics() {
        let _ = Quad::one() / Quad::zero();
    }
}

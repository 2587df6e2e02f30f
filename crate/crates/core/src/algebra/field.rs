//! The exact scalar tower: Q, Q(√d), and up to two rational-function parameters on top.

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use super::quad::Quad;

/// A commutative field with exact arithmetic.
///
/// Every field in the tower is built over [`Quad`]; `LEVELS` counts the rational-function
/// parameters stacked on it.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    const LEVELS: usize;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_quad(q: &Quad) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_quad(&Quad::from_int(n))
    }
    fn from_ratio(r: &BigRational) -> Self {
        Self::from_quad(&Quad::rational(r.clone()))
    }
    /// The transcendental generator of the given parameter level, if this field has it.
    fn generator(level: usize) -> Option<Self>;
    /// `Some(q)` when the element lies in the base field.
    fn as_quad(&self) -> Option<Quad>;
    /// Parseable rendering; `names[k]` names parameter level `k`.
    fn render(&self, names: &[String]) -> String;

    fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 {
            self.inv().expect("division by zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            base = base.clone() * &base;
            e >>= 1;
        }
        acc
    }
}

/// Wraps a rendered expression in parentheses unless it is a single signed atom.
pub(crate) fn atom(s: &str) -> String {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.contains(['+', '-', '/', '*']) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

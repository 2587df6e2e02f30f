//! Sequences of polynomials `y = (y_1, …, y_{m+n−1})` attached to a parity sequence.

use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};

use super::parity::ParitySeq;

/// A point of a population: parity, projective polynomials, and the current twist order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BetheNode<F: Field> {
    pub parity: ParitySeq,
    pub y: Vec<Poly<F>>,
    pub twist: Option<Vec<F>>,
}

impl<F: Field> BetheNode<F> {
    pub fn new(parity: ParitySeq, y: Vec<Poly<F>>, twist: Option<Vec<F>>) -> Result<Self> {
        if y.len() + 1 != parity.len() {
            return Err(Error::Invalid(format!("expected {} polynomials, got {}", parity.len() - 1, y.len())));
        }
        if y.iter().any(Poly::is_zero) {
            return Err(Error::Invalid("zero polynomial in y".into()));
        }
        if twist.as_ref().is_some_and(|q| q.len() != parity.len()) {
            return Err(Error::Invalid("twist length differs from m+n".into()));
        }
        Ok(BetheNode { parity, y: y.iter().map(Poly::monic).collect(), twist })
    }
    /// `y = (1, …, 1)`.
    pub fn trivial(parity: ParitySeq, twist: Option<Vec<F>>) -> Self {
        let y = vec![Poly::one(); parity.len() - 1];
        BetheNode { parity, y, twist }
    }
    /// `y_i` for `0 ≤ i ≤ m+n`, with `y_0 = y_{m+n} = 1`.
    pub fn yy(&self, i: usize) -> Poly<F> {
        if i == 0 || i > self.y.len() {
            Poly::one()
        } else {
            self.y[i - 1].clone()
        }
    }
    /// Degrees `l_i`.
    pub fn degrees(&self) -> Vec<usize> {
        self.y.iter().map(|p| p.degree().unwrap_or(0)).collect()
    }
    /// `q_i`, one when untwisted.
    pub fn q(&self, i: usize) -> F {
        self.twist.as_ref().map_or_else(F::one, |t| t[i - 1].clone())
    }
    /// Same node with `y_i` replaced, parity and twist updated by the caller.
    pub fn with_y(&self, i: usize, p: Poly<F>) -> Self {
        let mut n = self.clone();
        n.y[i - 1] = p.monic();
        n
    }
    pub fn render(&self, names: &[String]) -> String {
        let ys: Vec<String> = self.y.iter().map(|p| p.render_in("x", names)).collect();
        format!("{} ({})", self.parity, ys.join(", "))
    }
}

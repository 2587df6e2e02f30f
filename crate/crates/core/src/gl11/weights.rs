//! Weights `(a_k, b_k)` and evaluation points of a `gl(1|1)` chain, with `h = 1`.

use serde::Serialize;

use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl11Weights<F: Field> {
    pub a: Vec<F>,
    pub b: Vec<F>,
    pub z: Vec<F>,
}

/// The two ways irreducibility of the tensor product can be read off.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Irreducibility {
    /// `gcd(φ, ψ) = 1`.
    pub coprime: bool,
    /// `z_i − z_j − a_i − b_j ≠ 0` for all `i ≠ j`.
    pub pairwise: bool,
}

impl<F: Field> Gl11Weights<F> {
    pub fn new(a: Vec<F>, b: Vec<F>, z: Vec<F>) -> Result<Self> {
        if a.len() != b.len() || a.len() != z.len() {
            return Err(Error::Invalid(format!(
                "gl(1|1) data: {} a's, {} b's and {} points",
                a.len(),
                b.len(),
                z.len()
            )));
        }
        if let Some(k) = (0..a.len()).find(|&k| (a[k].clone() + &b[k]).is_zero()) {
            return Err(Error::Invalid(format!("weight {} is degenerate: a + b = 0", k + 1)));
        }
        Ok(Gl11Weights { a, b, z })
    }

    /// `p` copies of `(1, 0)` at `0`.
    pub fn homogeneous(p: usize) -> Self {
        Gl11Weights { a: vec![F::one(); p], b: vec![F::zero(); p], z: vec![F::zero(); p] }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }
    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
    pub fn dim(&self) -> usize {
        1 << self.len()
    }

    /// `∏ (x − z_k + a_k)`.
    pub fn phi(&self) -> Poly<F> {
        let mut p = Poly::one();
        for (a, z) in self.a.iter().zip(&self.z) {
            p = p * Poly::linear(&(z.clone() - a));
        }
        p
    }
    /// `∏ (x − z_k − b_k)`.
    pub fn psi(&self) -> Poly<F> {
        let mut p = Poly::one();
        for (b, z) in self.b.iter().zip(&self.z) {
            p = p * Poly::linear(&(z.clone() + b));
        }
        p
    }
    /// `∏ (x − z_k)`.
    pub fn base(&self) -> Poly<F> {
        let mut p = Poly::one();
        for z in &self.z {
            p = p * Poly::linear(z);
        }
        p
    }

    /// `a + b`.
    pub fn total(&self) -> F {
        self.a.iter().chain(&self.b).fold(F::zero(), |s, v| s + v)
    }
    pub fn is_typical(&self) -> bool {
        !self.total().is_zero()
    }

    pub fn irreducibility(&self) -> Irreducibility {
        let p = self.len();
        let pairwise = (0..p).all(|i| {
            (0..p).all(|j| i == j || !(self.z[i].clone() - &self.z[j] - &self.a[i] - &self.b[j]).is_zero())
        });
        Irreducibility { coprime: self.phi().coprime(&self.psi()), pairwise }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Gl11Weights<G> {
        Gl11Weights {
            a: self.a.iter().map(&f).collect(),
            b: self.b.iter().map(&f).collect(),
            z: self.z.iter().map(&f).collect(),
        }
    }
}

//! Polynomial weights, evaluation points and twists.

use crate::algebra::{Field, Quad};
use crate::error::{Error, Result};

use super::parity::ParitySeq;

/// `λ^{(1)}, …, λ^{(p)}` in standard coordinates, points `z_k`, optional twist multipliers
/// `q_i = e^{hκ_i}`, and the shift step `h`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightData<F: Field> {
    pub m: usize,
    pub n: usize,
    pub weights: Vec<Vec<u32>>,
    pub z: Vec<F>,
    pub twist: Option<Vec<F>>,
    pub h: F,
}

/// Checks that `λ` is a polynomial `gl(m|n)` weight.
pub fn check_polynomial_weight(lambda: &[u32], m: usize, n: usize) -> Result<()> {
    if lambda.len() != m + n {
        return Err(Error::Invalid(format!("weight {lambda:?} should have {} entries", m + n)));
    }
    let (even, odd) = lambda.split_at(m);
    if even.windows(2).any(|w| w[0] < w[1]) || odd.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invalid(format!("weight {lambda:?} is not weakly decreasing")));
    }
    if m > 0 {
        let lm = even[m - 1] as usize;
        if let Some(j) = odd.iter().rposition(|&v| v > 0) {
            if j + 1 > lm {
                return Err(Error::Invalid(format!("weight {lambda:?} violates the hook condition")));
            }
        }
    }
    Ok(())
}

/// True when `(a − b)/h` is not an integer.
pub fn h_apart<F: Field>(a: &F, b: &F, h: &F) -> bool {
    let r = (a.clone() - b) / h;
    match r.as_quad() {
        Some(q) => !is_integer(&q),
        None => true,
    }
}

pub(crate) fn is_integer(q: &Quad) -> bool {
    q.is_rational() && q.re().is_integer()
}

impl<F: Field> WeightData<F> {
    pub fn new(m: usize, n: usize, weights: Vec<Vec<u32>>, z: Vec<F>, twist: Option<Vec<F>>, h: F) -> Result<Self> {
        let w = WeightData { m, n, weights, z, twist, h };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m + self.n < 1 {
            return Err(Error::Invalid("m + n must be positive".into()));
        }
        if self.h.is_zero() {
            return Err(Error::Invalid("h must be nonzero".into()));
        }
        if self.weights.len() != self.z.len() {
            return Err(Error::Invalid(format!("{} weights but {} points", self.weights.len(), self.z.len())));
        }
        for l in &self.weights {
            check_polynomial_weight(l, self.m, self.n)?;
        }
        if let Some(q) = &self.twist {
            if q.len() != self.m + self.n {
                return Err(Error::Invalid(format!("twist should have {} entries", self.m + self.n)));
            }
            if q.iter().any(Field::is_zero) {
                return Err(Error::Invalid("twist entries must be nonzero".into()));
            }
            for i in 0..q.len() {
                if q[i + 1..].contains(&q[i]) {
                    return Err(Error::Invalid("twist entries must be pairwise distinct".into()));
                }
            }
        }
        Ok(())
    }

    pub fn require_h_generic(&self) -> Result<()> {
        if self.is_h_generic() {
            Ok(())
        } else {
            Err(Error::Invalid("points z are not h-generic".into()))
        }
    }

    /// `z_i − z_j ∉ hZ` for all `i < j`.
    pub fn is_h_generic(&self) -> bool {
        (0..self.z.len()).all(|i| (i + 1..self.z.len()).all(|j| h_apart(&self.z[i], &self.z[j], &self.h)))
    }

    pub fn rank(&self) -> usize {
        self.m + self.n
    }
    pub fn standard_parity(&self) -> ParitySeq {
        ParitySeq::standard(self.m, self.n)
    }
    /// Some point carries a weight with `λ_m ≥ n`.
    pub fn is_typical(&self) -> bool {
        self.m > 0 && self.weights.iter().any(|l| l[self.m - 1] as usize >= self.n)
    }
    /// Replaces the field, e.g. to adjoin a parameter.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> WeightData<G> {
        WeightData {
            m: self.m,
            n: self.n,
            weights: self.weights.clone(),
            z: self.z.iter().map(&f).collect(),
            twist: self.twist.as_ref().map(|q| q.iter().map(&f).collect()),
            h: f(&self.h),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Quad {
        Quad::from_int(v)
    }

    #[test]
    fn hook_condition() {
        assert!(check_polynomial_weight(&[1, 1, 0], 2, 1).is_ok());
        assert!(check_polynomial_weight(&[2, 2, 1, 1], 2, 2).is_ok());
        assert!(check_polynomial_weight(&[2, 1, 1, 1], 2, 2).is_err());
        assert!(check_polynomial_weight(&[2, 1, 1, 1, 1], 2, 3).is_err());
        assert!(check_polynomial_weight(&[1, 0, 1], 2, 1).is_err());
        assert!(check_polynomial_weight(&[0, 1], 2, 0).is_err());
        assert!(check_polynomial_weight(&[1, 0], 1, 0).is_err());
    }

    #[test]
    fn genericity_of_points() {
        let w = |z: Vec<Quad>, h| WeightData::new(2, 0, vec![vec![1, 0], vec![1, 0]], z, None, h).unwrap();
        assert!(w(vec![q(0), Quad::frac(1, 2)], q(1)).is_h_generic());
        assert!(!w(vec![q(0), q(5)], q(1)).is_h_generic());
        assert!(w(vec![q(0), q(5)], q(2)).require_h_generic().is_ok());
        let tw = WeightData::new(1, 1, vec![vec![1, 0]], vec![q(0)], Some(vec![q(2), q(2)]), q(1));
        assert!(tw.is_err());
    }
}

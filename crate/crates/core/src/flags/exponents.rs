//! Partitions, dominants, spaces of functions and their discrete exponents.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{rank_over_constants, Field, Matrix, Poly, RatFunc};
use crate::error::{Error, Result};

/// A weakly increasing sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl From<Vec<u32>> for Partition {
    fn from(v: Vec<u32>) -> Self {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Sorts the parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable();
        Partition(parts)
    }
    pub fn parts(&self) -> &[u32] {
        &self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
    /// `self_i ≥ other_i` for all `i`; false for different lengths.
    pub fn dominates(&self, other: &Partition) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(&other.0).copied().collect())
    }
    /// The smallest partition with distinct parts dominating `self`.
    pub fn dominant(&self) -> Partition {
        let mut out: Vec<u32> = Vec::with_capacity(self.len());
        for &a in &self.0 {
            let next = match out.last() {
                Some(&p) => a.max(p + 1),
                None => a,
            };
            out.push(next);
        }
        Partition(out)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn dominant(a: &Partition) -> Partition {
    a.dominant()
}

/// A finite-dimensional space of rational functions given by a basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionSpace<F: Field> {
    basis: Vec<RatFunc<F>>,
}

impl<F: Field> FunctionSpace<F> {
    /// Fails unless the functions are independent over constants.
    pub fn new(basis: Vec<RatFunc<F>>) -> Result<Self> {
        if rank_over_constants(&basis) != basis.len() {
            return Err(Error::Invalid("basis is linearly dependent".into()));
        }
        Ok(FunctionSpace { basis })
    }
    pub fn from_polys(basis: Vec<Poly<F>>) -> Result<Self> {
        Self::new(basis.into_iter().map(RatFunc::from_poly).collect())
    }
    pub fn basis(&self) -> &[RatFunc<F>] {
        &self.basis
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    /// `f · V`.
    pub fn scaled(&self, f: &RatFunc<F>) -> Self {
        assert!(!f.is_zero(), "scaling by zero");
        FunctionSpace { basis: self.basis.iter().map(|b| b.clone() * f).collect() }
    }
    pub fn is_polynomial(&self) -> bool {
        self.basis.iter().all(RatFunc::is_poly)
    }
    pub fn contains(&self, f: &RatFunc<F>) -> bool {
        let mut all = self.basis.clone();
        all.push(f.clone());
        rank_over_constants(&all) == self.dim()
    }
    pub fn same_span(&self, o: &Self) -> bool {
        self.dim() == o.dim() && o.basis.iter().all(|f| self.contains(f))
    }
    /// True when `self ∩ o = 0`.
    pub fn meets_trivially(&self, o: &Self) -> bool {
        let all: Vec<_> = self.basis.iter().chain(&o.basis).cloned().collect();
        rank_over_constants(&all) == self.dim() + o.dim()
    }
    /// `V ⊕ W`; fails when the sum is not direct.
    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        Self::new(self.basis.iter().chain(&o.basis).cloned().collect())
    }
    /// `Σ coeffs[j] basis[j]`.
    pub fn combine(&self, coeffs: &[F]) -> RatFunc<F> {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count");
        self.basis
            .iter()
            .zip(coeffs)
            .fold(RatFunc::zero(), |acc, (b, c)| acc + &(b.clone() * &RatFunc::constant(c.clone())))
    }
}

/// `E_z(V)`: the strictly increasing orders of vanishing at `z − h, z − 2h, …` realized by a
/// triangular basis.
///
/// The probe window is one more point than the largest numerator degree over a common
/// denominator, enough for every nonzero member to show a nonzero value.
pub fn discrete_exponents<F: Field>(v: &FunctionSpace<F>, z: &F, h: &F) -> Result<Partition> {
    let r = v.dim();
    if r == 0 {
        return Ok(Partition::default());
    }
    let den = v.basis.iter().fold(Poly::one(), |acc, f| acc.lcm(f.den()));
    let nums: Vec<Poly<F>> = v.basis.iter().map(|f| f.num().clone() * &den.div_exact(f.den()).unwrap()).collect();
    let depth = nums.iter().map(|p| p.deg()).max().unwrap_or(0).max(0) as usize + 1;
    let mut rows = vec![Vec::with_capacity(depth); r];
    for j in 1..=depth as i64 {
        let pt = z.clone() - &(h.clone() * &F::from_int(j));
        for (row, f) in rows.iter_mut().zip(&v.basis) {
            let val = f.eval(&pt).ok_or_else(|| Error::Pole(format!("pole at z − {j}h")))?;
            row.push(val);
        }
    }
    let mut m = Matrix::from_rows(rows);
    let mut used = vec![false; r];
    let mut out = Vec::with_capacity(r);
    for col in 0..depth {
        let Some(p) = (0..r).find(|&i| !used[i] && !m.get(i, col).is_zero()) else { continue };
        used[p] = true;
        out.push(col as u32);
        let inv = m.get(p, col).inv().unwrap();
        for i in 0..r {
            if !used[i] && !m.get(i, col).is_zero() {
                let f = m.get(i, col).clone() * &inv;
                for c in col..depth {
                    let v = m.get(i, c).clone() - &(f.clone() * m.get(p, c));
                    m.set(i, c, v);
                }
            }
        }
        if out.len() == r {
            break;
        }
    }
    debug_assert_eq!(out.len(), r, "probe window too short");
    Ok(Partition(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quad;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn dominants() {
        assert_eq!(part(&[0, 0, 1]).dominant(), part(&[0, 1, 2]));
        assert_eq!(part(&[1, 3, 4]).dominant(), part(&[1, 3, 4]));
        assert_eq!(part(&[2, 2, 2, 0]).dominant(), part(&[0, 2, 3, 4]));
        assert!(part(&[0, 1, 2]).dominates(&part(&[0, 0, 1])));
        assert!(!part(&[0, 1]).dominates(&part(&[0, 2])));
    }

    #[test]
    fn exponents_of_small_spaces() {
        let q = Quad::from_int;
        let v = FunctionSpace::from_polys(vec![Poly::one(), Poly::from_ints(&[1, 1])]).unwrap();
        assert_eq!(discrete_exponents(&v, &q(0), &q(1)).unwrap(), part(&[0, 1]));
        let one = FunctionSpace::from_polys(vec![Poly::one()]).unwrap();
        assert_eq!(discrete_exponents(&one, &q(7), &q(1)).unwrap(), part(&[0]));
        // x(x+1)(x+2) vanishes at −1, −2; x+1 only at −1
        let v = FunctionSpace::from_polys(vec![Poly::from_ints(&[0, 2, 3, 1]), Poly::from_ints(&[1, 1])]).unwrap();
        assert_eq!(discrete_exponents(&v, &q(0), &q(1)).unwrap(), part(&[1, 2]));
    }

    #[test]
    fn pole_in_window() {
        let q = Quad::from_int;
        let f = RatFunc::new(Poly::one(), Poly::from_ints(&[1, 1]));
        let v = FunctionSpace::new(vec![f]).unwrap();
        assert!(matches!(discrete_exponents(&v, &q(0), &q(1)), Err(Error::Pole(_))));
    }

    #[test]
    fn spans() {
        let p = |c: &[i64]| RatFunc::<Quad>::from_poly(Poly::from_ints(c));
        let a = FunctionSpace::new(vec![p(&[1]), p(&[0, 1])]).unwrap();
        let b = FunctionSpace::new(vec![p(&[2, 1]), p(&[1, -1])]).unwrap();
        assert!(a.same_span(&b));
        assert!(!a.meets_trivially(&b));
        assert!(FunctionSpace::new(vec![p(&[1]), p(&[2])]).is_err());
    }
}

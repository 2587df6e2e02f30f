//! Parity sequences `s ∈ S_{m|n}` and their counting data.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence of `m` entries `+1` and `n` entries `−1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<i8>", into = "Vec<i8>")]
pub struct ParitySeq(Vec<i8>);

/// `σ_s(i)` and `s_i^±`, indexed from zero, values as in the one-based definitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParityData {
    pub sigma: Vec<usize>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl ParitySeq {
    pub fn new(s: Vec<i8>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Invalid("empty parity sequence".into()));
        }
        if let Some(v) = s.iter().find(|&&v| v != 1 && v != -1) {
            return Err(Error::Invalid(format!("parity entries must be ±1, got {v}")));
        }
        Ok(ParitySeq(s))
    }
    /// `(1, …, 1, −1, …, −1)`.
    pub fn standard(m: usize, n: usize) -> Self {
        ParitySeq(std::iter::repeat(1).take(m).chain(std::iter::repeat(-1).take(n)).collect())
    }
    /// All of `S_{m|n}`, sorted.
    pub fn all(m: usize, n: usize) -> Vec<Self> {
        let len = m + n;
        let mut out: Vec<Self> = (0u32..1 << len)
            .filter(|mask| mask.count_ones() as usize == n)
            .map(|mask| ParitySeq((0..len).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect()))
            .collect();
        out.sort();
        out
    }
    pub fn signs(&self) -> &[i8] {
        &self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn m(&self) -> usize {
        self.0.iter().filter(|&&v| v == 1).count()
    }
    pub fn n(&self) -> usize {
        self.len() - self.m()
    }
    /// `s_i`, one-based.
    pub fn s(&self, i: usize) -> i8 {
        self.0[i - 1]
    }
    pub fn is_standard(&self) -> bool {
        *self == Self::standard(self.m(), self.n())
    }
    /// True when direction `i` (one-based, `1 ≤ i < m+n`) is bosonic.
    pub fn is_bosonic(&self, i: usize) -> bool {
        self.s(i) == self.s(i + 1)
    }
    /// `s^{[i]}`: entries `i` and `i+1` exchanged.
    pub fn swapped(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        ParitySeq(v)
    }

    pub fn data(&self) -> ParityData {
        let m = self.m();
        let len = self.len();
        let mut sigma = Vec::with_capacity(len);
        let (mut np, mut nm) = (0, 0);
        for &v in &self.0 {
            if v == 1 {
                np += 1;
                sigma.push(np);
            } else {
                nm += 1;
                sigma.push(m + nm);
            }
        }
        let plus = (0..len).map(|i| self.0[i + 1..].iter().filter(|&&v| v == 1).count()).collect();
        let minus = (0..len).map(|i| self.0[..i].iter().filter(|&&v| v == -1).count()).collect();
        ParityData { sigma, plus, minus }
    }
}

impl TryFrom<Vec<i8>> for ParitySeq {
    type Error = Error;
    fn try_from(v: Vec<i8>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ParitySeq> for Vec<i8> {
    fn from(p: ParitySeq) -> Vec<i8> {
        p.0
    }
}

impl fmt::Display for ParitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = ParitySeq::new(vec![1, -1, 1]).unwrap();
        let d = s.data();
        assert_eq!(d.sigma, vec![1, 3, 2]);
        assert_eq!(d.plus, vec![1, 1, 0]);
        assert_eq!(d.minus, vec![0, 0, 1]);
        let st = ParitySeq::standard(2, 1).data();
        assert_eq!(st.sigma, vec![1, 2, 3]);
        assert!(ParitySeq::standard(4, 0).data().minus.iter().all(|&v| v == 0));
    }

    #[test]
    fn identities_exhaustive() {
        for len in 1..=6 {
            for n in 0..=len {
                let m = len - n;
                let all = ParitySeq::all(m, n);
                assert_eq!(all.len(), (0..n).fold(1, |acc, k| acc * (len - k) / (k + 1)));
                for s in all {
                    let d = s.data();
                    let mut perm = d.sigma.clone();
                    perm.sort();
                    assert_eq!(perm, (1..=len).collect::<Vec<_>>());
                    for i in 0..len {
                        let (sg, i1) = (d.sigma[i] as i64, i as i64 + 1);
                        let (p, q) = (d.plus[i] as i64, d.minus[i] as i64);
                        if s.signs()[i] == 1 {
                            assert_eq!(p, m as i64 - sg);
                            assert_eq!(q, i1 - sg);
                        } else {
                            assert_eq!(p, sg - i1);
                            assert_eq!(q, sg - m as i64 - 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(ParitySeq::new(vec![1, 0]).is_err());
        assert!(ParitySeq::new(vec![]).is_err());
        assert!(serde_json::from_str::<ParitySeq>("[1,2]").is_err());
        assert_eq!(serde_json::from_str::<ParitySeq>("[1,-1]").unwrap().swapped(1).signs(), &[-1, 1]);
    }
}

//! Ordered products of first-order factors `(1 − q·ln'(g)·τ)^{±1}` and their fractional forms.

use super::op::DiffOp;
use crate::algebra::shift::{dlog, Shift};
use crate::algebra::{Field, RatFunc};
use crate::error::{Error, Result};

/// One factor `(1 − q·ln'(g)·τ)^{sign}`; `g` is the witness and `q` the twist multiplier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorWitness<F: Field> {
    pub g: RatFunc<F>,
    pub q: F,
    pub sign: i8,
}

impl<F: Field> FactorWitness<F> {
    pub fn new(g: RatFunc<F>, sign: i8) -> Self {
        Self::twisted(g, F::one(), sign)
    }
    pub fn twisted(g: RatFunc<F>, q: F, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        assert!(!g.is_zero(), "zero witness");
        assert!(!q.is_zero(), "zero twist");
        FactorWitness { g, q, sign }
    }
    pub fn coefficient(&self, h: &F) -> RatFunc<F> {
        dlog(&self.g, h) * &RatFunc::constant(self.q.clone())
    }
}

/// Which side of the swap lemma is given.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// `(1 − aτ)(1 − bτ)^{-1}` to `(1 − cτ)^{-1}(1 − dτ)`.
    Forward,
    /// `(1 − cτ)^{-1}(1 − dτ)` to `(1 − aτ)(1 − bτ)^{-1}`.
    Backward,
}

/// The swap lemma on coefficients.
///
/// Forward: `c = b[1]·ln'(a − b)`, `d = a[1]·ln'(a − b)`.
/// Backward: `a[1] = d / ln'(c − d)`, `b[1] = c / ln'(c − d)`.
pub fn odd_even_swap<F: Field>(
    a: &RatFunc<F>,
    b: &RatFunc<F>,
    orientation: Orientation,
    h: &F,
) -> Result<(RatFunc<F>, RatFunc<F>)> {
    let diff = a.clone() - b;
    if diff.is_zero() {
        return Err(Error::DegenerateSwap { position: 0 });
    }
    let l = dlog(&diff, h);
    Ok(match orientation {
        Orientation::Forward => (b.sh(1, h) * &l, a.sh(1, h) * &l),
        Orientation::Backward => ((b.clone() / &l).sh(-1, h), (a.clone() / &l).sh(-1, h)),
    })
}

/// A rational difference operator as an ordered product of witnessed first-order factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredRatOp<F: Field> {
    pub factors: Vec<FactorWitness<F>>,
    pub h: F,
}

/// `D0 · D1^{-1}` with `D1` of constant term one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FractionalForm<F: Field> {
    pub d0: DiffOp<F>,
    pub d1: DiffOp<F>,
}

impl<F: Field> FactoredRatOp<F> {
    pub fn new(factors: Vec<FactorWitness<F>>, h: F) -> Self {
        FactoredRatOp { factors, h }
    }
    pub fn coefficients(&self) -> Vec<RatFunc<F>> {
        self.factors.iter().map(|w| w.coefficient(&self.h)).collect()
    }
    pub fn signs(&self) -> Vec<i8> {
        self.factors.iter().map(|w| w.sign).collect()
    }

    /// Applies the swap lemma to factors `i`, `i+1` (0-based), which must have opposite signs.
    pub fn swap_adjacent(&self, i: usize) -> Result<Self> {
        let (u, v) = (&self.factors[i], &self.factors[i + 1]);
        if u.sign == v.sign {
            return Err(Error::Invalid(format!("factors {i} and {} have the same sign", i + 1)));
        }
        let h = &self.h;
        let (cu, cv) = (u.coefficient(h), v.coefficient(h));
        let diff = cu.clone() - &cv;
        if diff.is_zero() {
            return Err(Error::DegenerateSwap { position: i });
        }
        let (nu, nv) = if u.sign == 1 {
            // (a,+),(b,−) → (c,−),(d,+)
            (
                FactorWitness::twisted(v.g.sh(1, h) * &diff, v.q.clone(), -1),
                FactorWitness::twisted(u.g.sh(1, h) * &diff, u.q.clone(), 1),
            )
        } else {
            // (c,−),(d,+) → (a,+),(b,−)
            (
                FactorWitness::twisted((v.g.clone() / &diff).sh(-1, h), v.q.clone(), 1),
                FactorWitness::twisted((u.g.clone() / &diff).sh(-1, h), u.q.clone(), -1),
            )
        };
        let mut f = self.factors.clone();
        f[i] = nu;
        f[i + 1] = nv;
        Ok(FactoredRatOp { factors: f, h: self.h.clone() })
    }

    /// Commutes inverse factors to the right, cancels, and reduces to the minimal fraction.
    pub fn to_minimal_fraction(&self) -> Result<FractionalForm<F>> {
        let h = self.h.clone();
        let mut cur: Vec<(RatFunc<F>, i8)> =
            self.factors.iter().map(|w| (w.coefficient(&h), w.sign)).collect();
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < cur.len() {
                let (s, t) = (cur[i].1, cur[i + 1].1);
                if s != t && cur[i].0 == cur[i + 1].0 {
                    cur.drain(i..i + 2);
                    changed = true;
                    i = i.saturating_sub(1);
                    continue;
                }
                if s == -1 && t == 1 {
                    let (a, b) = odd_even_swap(&cur[i].0, &cur[i + 1].0, Orientation::Backward, &h)
                        .map_err(|_| Error::DegenerateSwap { position: i })?;
                    cur[i] = (a, 1);
                    cur[i + 1] = (b, -1);
                    changed = true;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        let one = DiffOp::one(h.clone());
        let d0 = cur.iter().filter(|f| f.1 == 1).fold(one.clone(), |acc, f| acc.mul(&DiffOp::first_order(f.0.clone(), h.clone())));
        let d1 = cur.iter().filter(|f| f.1 == -1).fold(one, |acc, f| DiffOp::first_order(f.0.clone(), h.clone()).mul(&acc));
        Ok(reduce(d0, d1))
    }

    /// Checks each factor's witness lies in its kernel: `(1 − ln'(g)τ) g = 0`. Twisted factors
    /// have no rational kernel and are skipped.
    pub fn witness_kernel(&self) -> bool {
        self.factors.iter().all(|w| {
            !w.q.is_one() || DiffOp::first_order(w.coefficient(&self.h), self.h.clone()).apply(&w.g).is_zero()
        })
    }
}

/// Removes the greatest common right divisor and normalizes `d1` to constant term one.
pub fn reduce<F: Field>(d0: DiffOp<F>, d1: DiffOp<F>) -> FractionalForm<F> {
    let g = d0.gcrd(&d1);
    let (d0, d1) = if g.order().unwrap_or(0) > 0 {
        let (q0, r0) = d0.right_divmod(&g);
        let (q1, r1) = d1.right_divmod(&g);
        debug_assert!(r0.is_zero() && r1.is_zero());
        (q0, q1)
    } else {
        (d0, d1)
    };
    let (d1, u) = d1.normalize_constant().expect("denominator with zero constant term");
    FractionalForm { d0: d0.mul_fn(&u), d1 }
}

impl<F: Field> FractionalForm<F> {
    /// Equality of `A B^{-1}` and `C D^{-1}` through a common right multiple `B U = D V`.
    pub fn rat_equal(&self, o: &Self) -> bool {
        let (u, v) = self.d1.lcrm_cofactors(&o.d1);
        self.d0.mul(&u) == o.d0.mul(&v)
    }
}

pub fn rat_equal<F: Field>(a: &FactoredRatOp<F>, b: &FactoredRatOp<F>) -> Result<bool> {
    Ok(a.to_minimal_fraction()?.rat_equal(&b.to_minimal_fraction()?))
}

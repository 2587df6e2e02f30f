//! Superflags in `W = V ⊕ U`, their factorizations, and the generating map.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::param::locate_param;
use crate::algebra::shift::{casorati, Shift};
use crate::algebra::{rank_over_constants, Field, Poly, RatFunc};
use crate::diffop::{FactorWitness, FactoredRatOp};
use crate::error::{Error, Result};
use crate::model::{bae_holds, is_generic, t_polys, BetheNode, ParitySeq, WeightData};
use crate::population::{build_operator, SymbolicPopulation};

use super::kernel::KernelSpaces;
use super::pi::{pi_ab, t_std};

/// A full superflag, kept as the bases `v_1, …, v_m` of `V` and `u_1, …, u_n` of `U` together
/// with a parity sequence. The homogeneous basis is `w_i = v_{s_i^+ + 1}` for `s_i = 1` and
/// `w_i = u_{s_i^- + 1}` for `s_i = −1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperFlag<F: Field> {
    pub v: Vec<RatFunc<F>>,
    pub u: Vec<RatFunc<F>>,
    pub parity: ParitySeq,
}

impl<F: Field> SuperFlag<F> {
    pub fn new(v: Vec<RatFunc<F>>, u: Vec<RatFunc<F>>, parity: ParitySeq) -> Result<Self> {
        if v.len() != parity.m() || u.len() != parity.n() {
            return Err(Error::Invalid(format!(
                "flag of parity {parity} needs {} even and {} odd vectors",
                parity.m(),
                parity.n()
            )));
        }
        let all: Vec<_> = v.iter().chain(&u).cloned().collect();
        if rank_over_constants(&all) != all.len() {
            return Err(Error::Invalid("flag basis is linearly dependent".into()));
        }
        Ok(SuperFlag { v, u, parity })
    }

    /// From an ordered homogeneous basis; `true` marks an odd vector.
    pub fn from_homogeneous(basis: Vec<(RatFunc<F>, bool)>) -> Result<Self> {
        let signs: Vec<i8> = basis.iter().map(|(_, odd)| if *odd { -1 } else { 1 }).collect();
        let parity = ParitySeq::new(signs)?;
        let d = parity.data();
        let mut v = vec![RatFunc::zero(); parity.m()];
        let mut u = vec![RatFunc::zero(); parity.n()];
        for (k, (f, odd)) in basis.into_iter().enumerate() {
            if odd {
                u[d.minus[k]] = f;
            } else {
                v[d.plus[k]] = f;
            }
        }
        Self::new(v, u, parity)
    }

    /// The ordered homogeneous basis generating the flag.
    pub fn homogeneous(&self) -> Vec<(RatFunc<F>, bool)> {
        let d = self.parity.data();
        (0..self.parity.len())
            .map(|k| {
                if self.parity.signs()[k] == 1 {
                    (self.v[d.plus[k]].clone(), false)
                } else {
                    (self.u[d.minus[k]].clone(), true)
                }
            })
            .collect()
    }

    pub fn with_parity(&self, parity: ParitySeq) -> Result<Self> {
        Self::new(self.v.clone(), self.u.clone(), parity)
    }

    /// Same parity and the same nested spans in `V` and in `U`.
    pub fn same_flag(&self, o: &Self) -> bool {
        let nested = |a: &[RatFunc<F>], b: &[RatFunc<F>]| {
            (1..=a.len()).all(|k| {
                let both: Vec<_> = a[..k].iter().chain(&b[..k]).cloned().collect();
                rank_over_constants(&both) == k
            })
        };
        self.parity == o.parity && nested(&self.v, &o.v) && nested(&self.u, &o.u)
    }
}

/// The coordinate flag of the kernel bases.
pub fn coordinate_flag<F: Field>(k: &KernelSpaces<F>, parity: ParitySeq) -> Result<SuperFlag<F>> {
    SuperFlag::new(k.v.basis().to_vec(), k.u.basis().to_vec(), parity)
}

/// A flag from random integer combinations of the kernel bases.
pub fn random_flag<F: Field>(k: &KernelSpaces<F>, parity: ParitySeq, rng: &mut ChaCha8Rng, pool: i64) -> Result<SuperFlag<F>> {
    let mix = |basis: &[RatFunc<F>], rng: &mut ChaCha8Rng| -> Vec<RatFunc<F>> {
        loop {
            let out: Vec<RatFunc<F>> = (0..basis.len())
                .map(|_| {
                    basis.iter().fold(RatFunc::zero(), |acc, b| {
                        acc + &(b.clone() * &RatFunc::constant(F::from_int(rng.gen_range(-pool..=pool))))
                    })
                })
                .collect();
            if rank_over_constants(&out) == out.len() {
                return out;
            }
        }
    };
    let v = mix(k.v.basis(), rng);
    let u = mix(k.u.basis(), rng);
    SuperFlag::new(v, u, parity)
}

struct Wronskians<'a, F: Field> {
    v: &'a [RatFunc<F>],
    u: &'a [RatFunc<F>],
    h: &'a F,
    memo: HashMap<(usize, usize), RatFunc<F>>,
}

impl<'a, F: Field> Wronskians<'a, F> {
    fn new(v: &'a [RatFunc<F>], u: &'a [RatFunc<F>], h: &'a F) -> Self {
        Wronskians { v, u, h, memo: HashMap::new() }
    }
    /// `Wr(v_1, …, v_a, u_1, …, u_b)`.
    fn get(&mut self, a: usize, b: usize) -> RatFunc<F> {
        if let Some(w) = self.memo.get(&(a, b)) {
            return w.clone();
        }
        let gs: Vec<_> = self.v[..a].iter().chain(&self.u[..b]).cloned().collect();
        let w = casorati(-1, &gs, self.h);
        self.memo.insert((a, b), w.clone());
        w
    }
}

/// The complete factorization `d_1^{s_1} ⋯ d_{m+n}^{s_{m+n}}` attached to a flag, each factor
/// witnessed by a ratio of Wronskians.
pub fn flag_factorization<F: Field>(f: &SuperFlag<F>, h: &F) -> Result<FactoredRatOp<F>> {
    let d = f.parity.data();
    let mut wr = Wronskians::new(&f.v, &f.u, h);
    let mut factors = Vec::with_capacity(f.parity.len());
    for k in 0..f.parity.len() {
        let (sp, sm) = (d.plus[k], d.minus[k]);
        let sign = f.parity.signs()[k];
        let num = if sign == 1 { wr.get(sp + 1, sm) } else { wr.get(sp, sm + 1) };
        let den = wr.get(sp, sm);
        if num.is_zero() || den.is_zero() {
            return Err(Error::SingularFactor(format!("vanishing Wronskian at factor {}", k + 1)));
        }
        factors.push(FactorWitness::new(num / &den.sh(1, h), sign));
    }
    Ok(FactoredRatOp::new(factors, h.clone()))
}

/// `y_{a,b} = Wr(v, u)[1] π_{a,b} y_m[a+b] ∏_{j ≤ b} T_{m+j}[a+b−j] / ∏_{i ≤ a} T_{m−i+1}[a+b+1−i]`,
/// normalized to be monic.
pub fn y_ab<F: Field>(v: &[RatFunc<F>], u: &[RatFunc<F>], w: &WeightData<F>, y_m: &Poly<F>) -> Result<Poly<F>> {
    let (a, b) = (v.len(), u.len());
    let h = &w.h;
    let t = t_polys(w, &w.standard_parity());
    let gs: Vec<_> = v.iter().chain(u).cloned().collect();
    let wr = casorati(-1, &gs, h);
    if wr.is_zero() {
        return Err(Error::NonGeneric(format!("degenerate flag: Wronskian of y_{{{a},{b}}} vanishes")));
    }
    let mut num = pi_ab(w, a, b) * &y_m.sh((a + b) as i64, h);
    for j in 1..=b {
        num = num * &t_std(&t, w.m + j).sh((a + b - j) as i64, h);
    }
    let mut den = Poly::one();
    for i in 1..=a {
        den = den * &t_std(&t, w.m - i + 1).sh((a + b + 1 - i) as i64, h);
    }
    let val = wr.sh(1, h) * &RatFunc::new(num, den);
    match val.as_poly() {
        Some(p) => Ok(p.monic()),
        None => Err(Error::Verification(format!("y_{{{a},{b}}} is not a polynomial"))),
    }
}

/// `β^s(F)`: `y_i = y_{s_i^+, s_i^-}` for `s_i = 1` and `y_{s_i^+, s_i^- + 1}` for `s_i = −1`.
pub fn generating_map<F: Field>(f: &SuperFlag<F>, w: &WeightData<F>, y_m: &Poly<F>) -> Result<BetheNode<F>> {
    let d = f.parity.data();
    let ys = (0..f.parity.len() - 1)
        .map(|k| {
            let (a, b) = if f.parity.signs()[k] == 1 { (d.plus[k], d.minus[k]) } else { (d.plus[k], d.minus[k] + 1) };
            y_ab(&f.v[..a], &f.u[..b], w, y_m)
        })
        .collect::<Result<Vec<_>>>()?;
    BetheNode::new(f.parity.clone(), ys, None)
}

/// True when a family node of the same parity specializes to `node`, or an anchor equals it.
pub fn in_symbolic_population<B: Field>(pop: &SymbolicPopulation<B>, node: &BetheNode<B>) -> bool {
    if node.twist.is_some() {
        return false;
    }
    pop.anchors.iter().any(|a| &a.node == node)
        || pop.unanchored.iter().any(|n| n == node)
        || pop.graph.nodes.iter().any(|g| g.parity == node.parity && g.twist.is_none() && locate_param(&g.y, &node.y).is_some())
}

/// Outcome of the generating map on one flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagCheck {
    pub parity: ParitySeq,
    pub y: Vec<String>,
    pub bae: bool,
    pub generic: bool,
    /// The flag factorization equals `R^s(β^s(F))` factor by factor.
    pub factorization: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_population: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl FlagCheck {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.bae && self.factorization && self.in_population != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub entries: Vec<FlagCheck>,
    /// Distinct flags of one parity have distinct images, equal flags equal images.
    pub injective: bool,
    pub all_pass: bool,
}

/// Runs the generating map over `flags` and checks each image against the Bethe equations, the
/// operator, and (when given) the explored population.
pub fn bijection_check<F: Field>(
    k: &KernelSpaces<F>,
    w: &WeightData<F>,
    flags: &[SuperFlag<F>],
    pop: Option<&SymbolicPopulation<F>>,
    names: &[String],
) -> BijectionReport {
    let mut images: Vec<Option<BetheNode<F>>> = Vec::with_capacity(flags.len());
    let mut entries = Vec::with_capacity(flags.len());
    for f in flags {
        let mut e = FlagCheck {
            parity: f.parity.clone(),
            y: Vec::new(),
            bae: false,
            generic: false,
            factorization: false,
            in_population: None,
            error: None,
        };
        let node = generating_map(f, w, &k.y_m).and_then(|n| Ok((flag_factorization(f, &w.h)?, n)));
        match node {
            Ok((fact, n)) => {
                e.y = n.y.iter().map(|p| p.render_in("x", names)).collect();
                e.bae = bae_holds(&n, w);
                e.generic = is_generic(&n, w).generic;
                e.factorization = fact.coefficients() == build_operator(&n, w).coefficients();
                e.in_population = pop.map(|p| in_symbolic_population(p, &n));
                images.push(Some(n));
            }
            Err(err) => {
                e.error = Some(err.to_string());
                images.push(None);
            }
        }
        entries.push(e);
    }
    let mut injective = true;
    for i in 0..flags.len() {
        for j in i + 1..flags.len() {
            if flags[i].parity != flags[j].parity {
                continue;
            }
            if let (Some(a), Some(b)) = (&images[i], &images[j]) {
                injective &= flags[i].same_flag(&flags[j]) == (a == b);
            }
        }
    }
    let all_pass = injective && entries.iter().all(FlagCheck::pass);
    BijectionReport { entries, injective, all_pass }
}

/// The coordinate flag and `extra` random flags for every parity sequence.
pub fn sample_flags<F: Field>(k: &KernelSpaces<F>, m: usize, n: usize, extra: usize, seed: u64) -> Result<Vec<SuperFlag<F>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for s in ParitySeq::all(m, n) {
        out.push(coordinate_flag(k, s.clone())?);
        for _ in 0..extra {
            out.push(random_flag(k, s.clone(), &mut rng, 9)?);
        }
    }
    Ok(out)
}

//! The spaces `V_y = ker D_0(y)` and `U_y = ker D_1(y)` of a standard-parity solution.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::param::Param;
use crate::algebra::shift::{casorati, Shift};
use crate::algebra::{rank_over_constants, Field, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::model::{is_generic, t_polys, BetheNode, WeightData};
use crate::population::{bosonic_reproduce, factor_witness};

use super::exponents::FunctionSpace;
use super::pi::t_std;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelOptions {
    pub seed: u64,
    /// Parameters are drawn from `−pool..=pool`.
    pub pool: i64,
    /// Reproduction attempts per space; `None` means `8·(m+n)`.
    pub cap: Option<usize>,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { seed: 0, pool: 20, cap: None }
    }
}

/// Bounded check of the conditions on `y_m` used for the generating map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TechnicalConditions {
    pub simple_roots: bool,
    /// `y_m` coprime to `y_m[k]` for `1 ≤ k ≤ window`.
    pub shift_coprime: bool,
    /// `y_m(z_i + kh) ≠ 0` for `|k| ≤ window`.
    pub avoids_points: bool,
    pub window: i64,
}

impl TechnicalConditions {
    pub fn all(&self) -> bool {
        self.simple_roots && self.shift_coprime && self.avoids_points
    }
}

pub fn technical_conditions<F: Field>(y: &Poly<F>, w: &WeightData<F>, window: i64) -> TechnicalConditions {
    let h = &w.h;
    let avoids_points = w.z.iter().all(|z| {
        (-window..=window).all(|k| !y.eval(&(z.clone() + &(h.clone() * &F::from_int(k)))).is_zero())
    });
    TechnicalConditions {
        simple_roots: y.is_squarefree(),
        shift_coprime: (1..=window).all(|k| y.coprime(&y.sh(k, h))),
        avoids_points,
        window,
    }
}

#[derive(Clone, Debug)]
pub struct KernelSpaces<F: Field> {
    pub v: FunctionSpace<F>,
    pub u: FunctionSpace<F>,
    pub y_m: Poly<F>,
    pub attempts: usize,
    pub technical: TechnicalConditions,
}

impl<F: Field> KernelSpaces<F> {
    /// `T_{m+1} y_m[1] Wr(v, u)` is a polynomial for all basis pairs.
    pub fn skip_lemma_holds(&self, w: &WeightData<F>) -> bool {
        let h = &w.h;
        let t = t_polys(w, &w.standard_parity());
        let pre = RatFunc::from_poly(t_std(&t, w.m + 1) * &self.y_m.sh(1, h));
        self.v.basis().iter().all(|v| {
            self.u
                .basis()
                .iter()
                .all(|u| (casorati(-1, &[v.clone(), u.clone()], h) * &pre).is_poly())
        })
    }
}

/// Collects `V_y` and `U_y` from the witnesses `T_m y_{m−1}[−1]/y_m` and
/// `y_{m+1}[−1]/(T_{m+1}[−1] y_m)` along random bosonic reproductions in directions `1..m−1`
/// and `m+1..m+n−1`.
pub fn kernel_spaces<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, opts: &KernelOptions) -> Result<KernelSpaces<F>> {
    if !node.parity.is_standard() || node.parity.m() != w.m || node.parity.n() != w.n {
        return Err(Error::Invalid("kernel spaces need a node of standard parity".into()));
    }
    if node.twist.is_some() || w.twist.is_some() {
        return Err(Error::Invalid("kernel spaces need untwisted data".into()));
    }
    let g = is_generic(node, w);
    if !g.generic {
        return Err(Error::NonGeneric(g.violations.join("; ")));
    }
    let (m, n) = (w.m, w.n);
    let cap = opts.cap.unwrap_or(8 * (m + n));
    let (vb, av) = collect(node, w, m, 1..m.max(1), m, cap, opts, 0)?;
    let (ub, au) = collect(node, w, n, m + 1..m + n, m + 1, cap, opts, 1)?;
    let v = FunctionSpace::new(vb)?;
    let u = FunctionSpace::new(ub)?;
    let y_m = node.yy(m);
    let ym = RatFunc::from_poly(y_m.clone());
    if !v.scaled(&ym).is_polynomial() {
        return Err(Error::Verification("y_m·V is not a space of polynomials".into()));
    }
    let t = t_polys(w, &w.standard_parity());
    let tu = RatFunc::from_poly(t_std(&t, m + 1).sh(-1, &w.h)) * &ym;
    if !u.scaled(&tu).is_polynomial() {
        return Err(Error::Verification("T_{m+1}[−1]·y_m·U is not a space of polynomials".into()));
    }
    if w.is_typical() && !v.meets_trivially(&u) {
        return Err(Error::Verification("V ∩ U ≠ 0 for typical weights".into()));
    }
    let top = w.weights.iter().flatten().copied().max().unwrap_or(0) as i64;
    let window = y_m.deg().max(0) as i64 + top + (m + n) as i64 + 2;
    let technical = technical_conditions(&y_m, w, window);
    Ok(KernelSpaces { v, u, y_m, attempts: av + au, technical })
}

#[allow(clippy::too_many_arguments)]
fn collect<F: Field>(
    node: &BetheNode<F>,
    w: &WeightData<F>,
    dim: usize,
    dirs: Range<usize>,
    idx: usize,
    cap: usize,
    opts: &KernelOptions,
    stream: u64,
) -> Result<(Vec<RatFunc<F>>, usize)> {
    if dim == 0 {
        return Ok((Vec::new(), 0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(stream);
    let mut basis = vec![factor_witness(node, w, idx)];
    let mut cur = node.clone();
    let mut attempts = 0;
    while basis.len() < dim {
        if attempts >= cap || dirs.is_empty() {
            return Err(Error::Verification(format!(
                "kernel collection stopped after {attempts} attempts at dimension {} of {dim}",
                basis.len()
            )));
        }
        attempts += 1;
        let i = rng.gen_range(dirs.clone());
        let c = F::from_int(rng.gen_range(-opts.pool..=opts.pool));
        let Ok(next) = bosonic_reproduce(&cur, w, i, &Param::At(c)) else { continue };
        if !is_generic(&next, w).generic {
            continue;
        }
        cur = next;
        let cand = factor_witness(&cur, w, idx);
        basis.push(cand);
        if rank_over_constants(&basis) < basis.len() {
            basis.pop();
        }
    }
    Ok((basis, attempts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quad;
    use crate::model::ParitySeq;

    fn r(c: &[i64]) -> RatFunc<Quad> {
        RatFunc::from_poly(Poly::from_ints(c))
    }

    #[test]
    fn gl2_kernel() {
        let q = Quad::from_int;
        let w = WeightData::new(2, 0, vec![vec![1, 0], vec![1, 0]], vec![q(0), q(5)], None, q(1)).unwrap();
        let node = BetheNode::new(ParitySeq::standard(2, 0), vec![Poly::from_ints(&[-2, 1])], None).unwrap();
        let k = kernel_spaces(&node, &w, &KernelOptions::default()).unwrap();
        // y[−1] and ỹ[−1] with ỹ = x² + 2
        let expect = FunctionSpace::new(vec![r(&[-1, 1]), r(&[3, 2, 1])]).unwrap();
        assert!(k.v.same_span(&expect));
        assert_eq!(k.u.dim(), 0);
        let op = crate::population::build_operator(&node, &w);
        let d0 = op.to_minimal_fraction().unwrap().d0;
        for f in k.v.basis() {
            assert!(d0.apply(f).is_zero());
        }
    }

    #[test]
    fn worked_example_kernel() {
        let rt = Quad::sqrt_of(2);
        let w = WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::zero(), rt.clone(), -rt], None, Quad::one())
            .unwrap();
        let node = BetheNode::trivial(ParitySeq::standard(2, 1), None);
        let k = kernel_spaces(&node, &w, &KernelOptions::default()).unwrap();
        assert_eq!((k.v.dim(), k.u.dim()), (2, 1));
        assert!(k.v.meets_trivially(&k.u));
        let t1 = Poly::from_ints(&[-1, 1, 3, 1]);
        let expect = FunctionSpace::from_polys(vec![t1.clone(), t1.mul_xk(1)]).unwrap();
        assert!(k.v.same_span(&expect));
        assert!(k.u.same_span(&FunctionSpace::new(vec![r(&[1])]).unwrap()));
        assert!(k.technical.all());
        assert!(k.skip_lemma_holds(&w));
        let ex = super::super::discrete_exponents(&k.v.scaled(&RatFunc::from_poly(k.y_m.clone())), &Quad::zero(), &Quad::one())
            .unwrap();
        assert_eq!(ex.parts(), &[1, 2]);
    }

    #[test]
    fn atypical_vector_case_may_intersect() {
        // gl(2|1), one vector representation, y = (1, 1): both kernels contain the constants
        let q = Quad::from_int;
        let w = WeightData::new(2, 1, vec![vec![1, 0, 0]], vec![q(0)], None, q(1)).unwrap();
        assert!(!w.is_typical());
        let node = BetheNode::trivial(ParitySeq::standard(2, 1), None);
        let k = kernel_spaces(&node, &w, &KernelOptions::default()).unwrap();
        assert_eq!((k.v.dim(), k.u.dim()), (2, 1));
        assert!(k.v.contains(&r(&[1])));
        assert!(!k.v.meets_trivially(&k.u));
    }
}

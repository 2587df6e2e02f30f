//! Bethe vectors, the form `B_{λ,z}`, the norm formula and completeness.

use num_rational::BigRational;

use crate::algebra::quad::squarefree_part;
use crate::algebra::roots::roots_in_field;
use crate::algebra::shift::Shift;
use crate::algebra::{Field, Matrix, Poly, Quad, RatFunc};
use crate::error::{Error, Result};

use super::tensor::{embed, grading, Local, StateVector, TensorOperator};
use super::weights::{Gl11Weights, Irreducibility};

/// Roots of every monic divisor of `φ − ψ`, the trivial divisor first.
pub fn solution_roots(w: &Gl11Weights<Quad>) -> Result<Vec<Vec<Quad>>> {
    if !w.is_typical() {
        return Err(Error::Invalid("a + b = 0: the chain is atypical".into()));
    }
    let d = w.phi() - w.psi();
    if d.is_zero() {
        return Err(Error::Invalid("φ = ψ".into()));
    }
    let roots = split(&d)?;
    let mut out: Vec<Vec<Quad>> = vec![Vec::new()];
    for (r, mult) in roots {
        let mut next = Vec::new();
        for base in &out {
            for e in 0..=mult {
                let mut v = base.clone();
                v.extend(std::iter::repeat(r.clone()).take(e));
                next.push(v);
            }
        }
        out = next;
    }
    out.sort_by_key(Vec::len);
    Ok(out)
}

fn split(p: &Poly<Quad>) -> Result<Vec<(Quad, usize)>> {
    let (roots, rest) = roots_in_field(p, 0);
    if rest.deg() <= 0 {
        return Ok(roots);
    }
    if rest.deg() == 2 && rest.coeffs().iter().all(Quad::is_rational) {
        let (a, b, c) = (rest.coeff(2), rest.coeff(1), rest.coeff(0));
        let disc = b.clone() * &b - &(Quad::from_int(4) * &a * &c);
        let hint = squarefree_part(disc.re());
        let (roots, rest) = roots_in_field(p, hint);
        if rest.deg() <= 0 {
            return Ok(roots);
        }
    }
    Err(Error::NeedsExtension { degree: rest.deg() as usize })
}

/// Monic divisors of `φ − ψ`; each one solves the Bethe ansatz equation.
pub fn divisor_solutions(w: &Gl11Weights<Quad>) -> Result<Vec<Poly<Quad>>> {
    Ok(solution_roots(w)?.iter().map(|t| poly_of_roots(t)).collect())
}

pub fn poly_of_roots<F: Field>(t: &[F]) -> Poly<F> {
    t.iter().fold(Poly::one(), |p, r| p * Poly::linear(r))
}

/// `w̃(t, z) = c_0 (−1)^l L_12(t_1) ⋯ L_12(t_l) |0⟩`, `c_0 = ∏_{i,k} (t_i − z_k)`.
pub fn bethe_vector<F: Field>(t: &[F], w: &Gl11Weights<F>) -> StateVector<F> {
    let mut v = StateVector::vacuum(w.len());
    for ti in t.iter().rev() {
        v = w.creation_hat(ti).apply(&v);
    }
    if t.len() % 2 == 1 {
        v = v.scale(&-F::one());
    }
    v
}

/// `E(x) = (y[1]/y)(φ − ψ) ∏ (x − z_k)^{−1}`.
pub fn eigenvalue_formula<F: Field>(y: &Poly<F>, w: &Gl11Weights<F>) -> RatFunc<F> {
    let ys = y.sh(1, &F::one());
    RatFunc::new(ys * &(w.phi() - w.psi()), y.clone() * &w.base())
}

/// `E(x)` with `T(x) v = E(x) v`, if `v` is a nonzero eigenvector.
pub fn transfer_eigenvalue<F: Field>(w: &Gl11Weights<F>, v: &StateVector<F>) -> Option<RatFunc<F>> {
    eigen_of(&w.transfer(), v)
}

fn eigen_of<F: Field>(t: &TensorOperator<RatFunc<F>>, v: &StateVector<F>) -> Option<RatFunc<F>> {
    let lifted = v.map(|c| RatFunc::constant(c.clone()));
    let tv = t.apply(&lifted);
    let i = v.amps.iter().position(|c| !c.is_zero())?;
    let e = tv.amps[i].clone() / &lifted.amps[i];
    (tv == lifted.scale(&e)).then_some(e)
}

/// Diagonal of `B_λ = ⊗ B_{λ^{(k)}}`: `B(v_2, v_2) = −(a_k + b_k)` per site, times
/// `(−1)^{n(n−1)/2}` for `n` factors `v_2`.
pub fn tensor_form<F: Field>(w: &Gl11Weights<F>) -> Vec<F> {
    let p = w.len();
    (0..w.dim())
        .map(|idx| {
            let mut v = F::one();
            for k in 0..p {
                if idx >> (p - 1 - k) & 1 == 1 {
                    v = v * &(-(w.a[k].clone() + &w.b[k]));
                }
            }
            let n = idx.count_ones();
            if (n * n.saturating_sub(1) / 2) % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect()
}

fn unit<F: Field>(r: usize, c: usize, v: F) -> Local<F> {
    let mut m = [[F::zero(), F::zero()], [F::zero(), F::zero()]];
    m[r][c] = v;
    m
}

/// `R^{(i,j)}(x)` acting on sites `i < j` (0-based).
pub fn r_matrix<F: Field>(w: &Gl11Weights<F>, i: usize, j: usize, x: &F) -> Result<TensorOperator<F>> {
    let p = w.len();
    let (ai, bi, aj, bj) = (&w.a[i], &w.b[i], &w.a[j], &w.b[j]);
    let den = ai.clone() + bj - x;
    let inv = den.inv().ok_or_else(|| Error::Pole(format!("R^({},{}) at x = {}", i + 1, j + 1, x.render(&[]))))?;
    let one = F::one;
    // (coefficient, E_ab at i, parity, E_cd at j)
    let terms: [(F, (usize, usize), u8, (usize, usize)); 6] = [
        (one(), (0, 0), 0, (0, 0)),
        (-(bi.clone() + aj + x) * &inv, (1, 1), 0, (1, 1)),
        ((bj.clone() - bi - x) * &inv, (0, 0), 0, (1, 1)),
        ((ai.clone() - aj - x) * &inv, (1, 1), 0, (0, 0)),
        (-(ai.clone() + bi) * &inv, (0, 1), 1, (1, 0)),
        ((aj.clone() + bj) * &inv, (1, 0), 1, (0, 1)),
    ];
    let mut out = TensorOperator { mat: Matrix::zeros(1 << p, 1 << p), parity: 0 };
    for (c, (ra, ca), par, (rc, cc)) in terms {
        let xi = embed(p, i, &unit(ra, ca, c), par);
        let xj = embed(p, j, &unit(rc, cc, one()), par);
        out = out.plus(&xi.compose(&xj));
    }
    Ok(out)
}

/// `R_{λ,z} = →∏_i →∏_{j>i} R^{(i,j)}(z_i − z_j)`.
pub fn r_product<F: Field>(w: &Gl11Weights<F>) -> Result<TensorOperator<F>> {
    let p = w.len();
    let mut out = TensorOperator::identity(p);
    for i in 0..p {
        for j in i + 1..p {
            out = out.compose(&r_matrix(w, i, j, &(w.z[i].clone() - &w.z[j]))?);
        }
    }
    Ok(out)
}

/// Gram matrix `G` of `B_{λ,z}(w_1, w_2) = B_λ(w_1, R_{λ,z} w_2) = w_1ᵀ G w_2`.
pub fn shapovalov<F: Field>(w: &Gl11Weights<F>) -> Result<Matrix<F>> {
    let r = r_product(w)?;
    let d = tensor_form(w);
    let n = w.dim();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, d[i].clone() * r.mat.get(i, j));
        }
    }
    Ok(g)
}

pub fn form<F: Field>(g: &Matrix<F>, v1: &StateVector<F>, v2: &StateVector<F>) -> F {
    let gv = g.apply(&v2.amps);
    v1.amps.iter().zip(&gv).fold(F::zero(), |s, (a, b)| s + &(a.clone() * b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormCheck<F: Field> {
    pub lhs: F,
    pub rhs: F,
    pub equal: bool,
    /// `Some(±1)` when `lhs = ±rhs`.
    pub sign: Option<i8>,
}

/// `(−1)^{l(l−1)/2} ∏_{i<j} ((t_i − t_j − 1)/(t_i − t_j))² ∏_{i,k} P_{ik} ∏_i Σ_k (a_k + b_k)/P_{ik}`,
/// `P_{ik} = (t_i − z_k + a_k)(t_i − z_k − b_k)`.
pub fn norm_formula<F: Field>(t: &[F], w: &Gl11Weights<F>) -> Result<F> {
    let l = t.len();
    let mut v = if (l * l.saturating_sub(1) / 2) % 2 == 1 { -F::one() } else { F::one() };
    for i in 0..l {
        for j in i + 1..l {
            let d = t[i].clone() - &t[j];
            let inv = d.inv().ok_or_else(|| Error::Pole("repeated Bethe root".into()))?;
            let r = (d - &F::one()) * &inv;
            v = v * &(r.clone() * &r);
        }
    }
    let p = w.len();
    for ti in t {
        let pk: Vec<F> = (0..p)
            .map(|k| {
                let u = ti.clone() - &w.z[k];
                (u.clone() + &w.a[k]) * &(u - &w.b[k])
            })
            .collect();
        // ∏_k P_k · Σ_k c_k / P_k without dividing
        let mut s = F::zero();
        for k in 0..p {
            let mut term = w.a[k].clone() + &w.b[k];
            for (kk, q) in pk.iter().enumerate() {
                if kk != k {
                    term = term * q;
                }
            }
            s = s + &term;
        }
        v = v * &s;
    }
    Ok(v)
}

pub fn norm_check<F: Field>(t: &[F], w: &Gl11Weights<F>) -> Result<NormCheck<F>> {
    let g = shapovalov(w)?;
    let v = bethe_vector(t, w);
    let lhs = form(&g, &v, &v);
    let rhs = norm_formula(t, w)?;
    let equal = lhs == rhs;
    let sign = if equal {
        Some(1)
    } else if lhs == -rhs.clone() {
        Some(-1)
    } else {
        None
    };
    Ok(NormCheck { lhs, rhs, equal, sign })
}

/// Basis of `ker e_12`.
pub fn singular_subspace<F: Field>(w: &Gl11Weights<F>) -> Vec<StateVector<F>> {
    w.raising().mat.kernel().into_iter().map(|amps| StateVector { amps }).collect()
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub p: usize,
    pub expected: usize,
    pub solutions: Vec<Poly<Quad>>,
    pub vectors: Vec<StateVector<Quad>>,
    pub irreducibility: Irreducibility,
    pub nonzero: bool,
    pub singular: bool,
    /// `T(x) w̃ = E(x) w̃` with `E` from the closed formula.
    pub eigen: bool,
    pub orthogonal: bool,
    pub rank: usize,
    pub singular_dim: usize,
    pub norms: Vec<NormCheck<Quad>>,
}

impl CompletenessReport {
    /// Count, nonvanishing, singularity, eigenvectors, orthogonality and spanning.
    pub fn pass(&self) -> bool {
        self.solutions.len() == self.expected
            && self.nonzero
            && self.singular
            && self.eigen
            && self.orthogonal
            && self.rank == self.expected
            && self.singular_dim == self.expected
    }
    /// Exact equality with the displayed norm formula for every solution.
    pub fn norms_equal(&self) -> bool {
        self.norms.iter().all(|n| n.equal)
    }
}

pub fn completeness_report(w: &Gl11Weights<Quad>) -> Result<CompletenessReport> {
    let p = w.len();
    if p == 0 {
        return Err(Error::Invalid("empty chain".into()));
    }
    let roots = solution_roots(w)?;
    let solutions: Vec<Poly<Quad>> = roots.iter().map(|t| poly_of_roots(t)).collect();
    let vectors: Vec<StateVector<Quad>> = roots.iter().map(|t| bethe_vector(t, w)).collect();
    let g = shapovalov(w)?;
    let e = w.raising();
    let t = w.transfer();
    let nonzero = vectors.iter().all(|v| !v.is_zero());
    let singular = vectors.iter().all(|v| e.apply(v).is_zero());
    let eigen = vectors
        .iter()
        .zip(&solutions)
        .all(|(v, y)| eigen_of(&t, v) == Some(eigenvalue_formula(y, w)));
    let orthogonal = (0..vectors.len())
        .all(|i| (0..vectors.len()).all(|j| i == j || form(&g, &vectors[i], &vectors[j]).is_zero()));
    let rank = if vectors.is_empty() {
        0
    } else {
        Matrix::from_rows(vectors.iter().map(|v| v.amps.clone()).collect()).rank()
    };
    let singular_dim = singular_subspace(w).len();
    let norms = roots.iter().map(|t| norm_check(t, w)).collect::<Result<Vec<_>>>()?;
    Ok(CompletenessReport {
        p,
        expected: 1 << (p - 1),
        solutions,
        vectors,
        irreducibility: w.irreducibility(),
        nonzero,
        singular,
        eigen,
        orthogonal,
        rank,
        singular_dim,
        norms,
    })
}

/// A primitive `p`-th root of unity in some `Q(√d)`.
pub fn primitive_root(p: usize) -> Result<Quad> {
    let half = |a: i64, b: i64, d: i64| Quad::new(BigRational::new(a.into(), 2.into()), BigRational::new(b.into(), 2.into()), d);
    match p {
        1 => Ok(Quad::one()),
        2 => Ok(-Quad::one()),
        3 => Ok(half(-1, 1, -3)),
        4 => Ok(Quad::sqrt_of(-1)),
        6 => Ok(half(1, 1, -3)),
        _ => Err(Error::NeedsExtension { degree: p }),
    }
}

#[derive(Clone, Debug)]
pub struct HomogeneousSpectrum {
    pub p: usize,
    /// `∏_{i ∈ I} (x − ϑ_i − 1)/(x − ϑ_i) · ((x + 1)^p − x^p)/x^p` over subsets `I`.
    pub closed_form: Vec<RatFunc<Quad>>,
    /// Eigenvalues of `T(x)` on the Bethe vectors.
    pub from_transfer: Vec<RatFunc<Quad>>,
    pub matches: bool,
    pub simple: bool,
    pub report: CompletenessReport,
}

impl HomogeneousSpectrum {
    pub fn pass(&self) -> bool {
        self.matches && self.simple && self.report.pass()
    }
}

/// The spectrum of `T(x)` on the singular vectors of `(C^{1|1}(0))^{⊗p}`, `p ∈ {1, 2, 3, 4, 6}`.
pub fn homogeneous_spectrum(p: usize) -> Result<HomogeneousSpectrum> {
    if p == 0 {
        return Err(Error::Invalid("empty chain".into()));
    }
    let theta = primitive_root(p)?;
    let thetas: Vec<Quad> = (1..p).map(|i| (theta.pow(i as i64) - &Quad::one()).inv().unwrap()).collect();
    let x = Poly::<Quad>::x();
    let xp1 = Poly::from_ints(&[1, 1]);
    let base = RatFunc::new(xp1.pow(p as u32) - &x.pow(p as u32), x.pow(p as u32));
    let mut closed_form = Vec::new();
    for mask in 0usize..1 << (p - 1) {
        let mut e = base.clone();
        for (i, th) in thetas.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let sh = th.clone() + &Quad::one();
                e = e * RatFunc::new(Poly::linear(&sh), Poly::linear(th));
            }
        }
        closed_form.push(e);
    }
    let w = Gl11Weights::<Quad>::homogeneous(p);
    let report = completeness_report(&w)?;
    let t = w.transfer();
    let from_transfer: Vec<RatFunc<Quad>> = report
        .vectors
        .iter()
        .map(|v| eigen_of(&t, v).ok_or_else(|| Error::Verification("Bethe vector is not an eigenvector".into())))
        .collect::<Result<_>>()?;
    let simple = (0..from_transfer.len()).all(|i| (0..i).all(|j| from_transfer[i] != from_transfer[j]));
    let matches = from_transfer.len() == closed_form.len()
        && closed_form.iter().all(|c| from_transfer.contains(c))
        && from_transfer.iter().all(|c| closed_form.contains(c));
    Ok(HomogeneousSpectrum { p, closed_form, from_transfer, matches, simple, report })
}

/// `(−1)^{|X| |α|}` on the diagonal.
pub fn grading_sign<F: Field>(p: usize, parity: u8) -> Vec<F> {
    (0..1usize << p)
        .map(|i| if parity * grading(i) == 1 { -F::one() } else { F::one() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Quad {
        Quad::from_int(v)
    }
    fn fr(a: i64, b: i64) -> Quad {
        Quad::frac(a, b)
    }
    fn generic(p: usize) -> Gl11Weights<Quad> {
        let a = [fr(3, 2), q(2), fr(-1, 3)];
        let b = [fr(1, 5), q(-3), fr(2, 7)];
        let z = [q(0), fr(7, 3), fr(-5, 2)];
        Gl11Weights::new(a[..p].to_vec(), b[..p].to_vec(), z[..p].to_vec()).unwrap()
    }

    #[test]
    fn divisors_of_small_chains() {
        let w = Gl11Weights::<Quad>::homogeneous(2);
        let d = divisor_solutions(&w).unwrap();
        assert_eq!(d, vec![Poly::one(), Poly::linear(&fr(-1, 2))]);
        let w = Gl11Weights::new(vec![q(1)], vec![q(0)], vec![q(0)]).unwrap();
        assert_eq!(divisor_solutions(&w).unwrap(), vec![Poly::one()]);
        assert_eq!(divisor_solutions(&generic(3)).unwrap().len(), 4);
    }

    #[test]
    fn irreducible_quadratic_needs_its_field() {
        // φ − ψ = 3x² + 3x + 1 for the homogeneous p = 3 chain
        let w = Gl11Weights::<Quad>::homogeneous(3);
        let roots = solution_roots(&w).unwrap();
        assert_eq!(roots.len(), 4);
        assert!(roots[1][0].radicand() == -3);
    }

    #[test]
    fn one_site_form() {
        let w = Gl11Weights::new(vec![fr(5, 2)], vec![fr(1, 3)], vec![q(4)]).unwrap();
        let g = shapovalov(&w).unwrap();
        assert_eq!(*g.get(0, 0), q(1));
        assert_eq!(*g.get(1, 1), -fr(17, 6));
        assert!(g.get(0, 1).is_zero() && g.get(1, 0).is_zero());
    }

    #[test]
    fn vacuum_has_unit_norm() {
        for p in 1..=3 {
            let w = generic(p);
            let g = shapovalov(&w).unwrap();
            let v = StateVector::vacuum(p);
            assert_eq!(form(&g, &v, &v), Quad::one());
        }
    }

    #[test]
    fn contravariance() {
        // B(X w_1, w_2) = (−1)^{|X||w_1|} B(w_1, ι(X) w_2), ι(L_ij) = (−1)^{|i||j|+|i|} L_ji
        for p in 1..=3 {
            let w = generic(p);
            let g = shapovalov(&w).unwrap();
            let gt = g.transpose();
            for x in [fr(13, 3), fr(-9, 7)] {
                let m = w.monodromy_at(&x).unwrap();
                for i in 0..2 {
                    for j in 0..2 {
                        let xo = &m[i][j];
                        let mut io = m[j][i].clone();
                        if (i * j + i) % 2 == 1 {
                            io = io.scale(&-Quad::one());
                        }
                        // (X^T G)[α][β] = s_α (G ι(X))[α][β]
                        let lhs = xo.mat.transpose().mul(&g);
                        let rhs = g.mul(&io.mat);
                        let s = grading_sign::<Quad>(p, xo.parity);
                        for a in 0..w.dim() {
                            for b in 0..w.dim() {
                                assert_eq!(*lhs.get(a, b), s[a].clone() * rhs.get(a, b), "p={p} L{}{}", i + 1, j + 1);
                            }
                        }
                        let _ = &gt;
                    }
                }
            }
        }
    }

    #[test]
    fn homogeneous_two_sites() {
        let w = Gl11Weights::<Quad>::homogeneous(2);
        let v = bethe_vector(&[fr(-1, 2)], &w);
        let e = transfer_eigenvalue(&w, &v).unwrap();
        assert_eq!(e, RatFunc::new(Poly::from_ints(&[-1, 2]), Poly::from_ints(&[0, 0, 1])));
        // by hand: w̃ = ½ v_1⊗v_2 − ½ v_2⊗v_1, R(0) swaps the two, both diagonal entries of B_λ are −1
        let half = fr(1, 2);
        assert_eq!(v.amps, vec![Quad::zero(), half.clone(), -half.clone(), Quad::zero()]);
        let g = shapovalov(&w).unwrap();
        assert_eq!(form(&g, &v, &v), half.clone());
        assert_eq!(norm_formula(&[fr(-1, 2)], &w).unwrap(), -half);
    }

    #[test]
    fn norm_formula_up_to_sign() {
        // the form fixed by B(v_2, v_2) = −(a + b) and contravariance gives (−1)^l times the
        // displayed product
        for p in 1..=3 {
            let w = generic(p);
            for t in solution_roots(&w).unwrap() {
                let n = norm_check(&t, &w).unwrap();
                let expect = if t.len() % 2 == 0 { 1 } else { -1 };
                assert_eq!(n.sign, Some(expect), "p={p} t={t:?}: {n:?}");
                assert_eq!(n.equal, expect == 1);
            }
        }
        for p in 2..=4 {
            let w = Gl11Weights::<Quad>::homogeneous(p);
            for t in solution_roots(&w).unwrap() {
                let n = norm_check(&t, &w).unwrap();
                assert_eq!(n.sign, Some(if t.len() % 2 == 0 { 1 } else { -1 }));
            }
        }
    }

    #[test]
    fn completeness_on_generic_data() {
        for p in 1..=3 {
            let r = completeness_report(&generic(p)).unwrap();
            assert!(r.pass(), "p={p}: {r:?}");
        }
    }

    #[test]
    fn homogeneous_spectra() {
        for p in [1, 2, 3, 4] {
            let s = homogeneous_spectrum(p).unwrap();
            assert_eq!(s.from_transfer.len(), 1 << (p - 1));
            assert!(s.pass(), "p={p}: {s:?}");
        }
        assert!(matches!(homogeneous_spectrum(5), Err(Error::NeedsExtension { .. })));
    }

    #[test]
    fn binary_property() {
        // gcd(φ, ψ) = 1 iff every R(z_i − z_j) is defined and invertible
        let cases = [
            (vec![q(1), q(2)], vec![q(0), q(1)], vec![q(0), q(3)]),
            (vec![q(1), q(2)], vec![q(0), q(1)], vec![q(0), q(1)]),
            (vec![q(1), q(2)], vec![q(0), q(1)], vec![q(0), q(-2)]),
            (vec![fr(1, 2), q(2), q(1)], vec![q(1), q(1), q(0)], vec![q(0), fr(5, 2), q(4)]),
        ];
        for (a, b, z) in cases {
            let w = Gl11Weights::new(a, b, z).unwrap();
            let irr = w.irreducibility();
            let mut pairs = true;
            for i in 0..w.len() {
                for j in 0..w.len() {
                    if i != j {
                        let (lo, hi) = (i.min(j), i.max(j));
                        let mut ww = w.clone();
                        if i > j {
                            ww.a.swap(lo, hi);
                            ww.b.swap(lo, hi);
                            ww.z.swap(lo, hi);
                        }
                        pairs &= match r_matrix(&ww, lo, hi, &(w.z[i].clone() - &w.z[j])) {
                            Ok(r) => r.mat.det() != Quad::zero(),
                            Err(_) => false,
                        };
                    }
                }
            }
            assert_eq!(irr.coprime, irr.pairwise);
            assert_eq!(irr.coprime, pairs);
        }
    }

    #[test]
    fn eigenvalue_matches_model() {
        use crate::model::{eigenvalue, BetheNode, ParitySeq, WeightData};
        let z = vec![q(0), fr(1, 3), fr(5, 2)];
        let lam = vec![vec![2u32, 1], vec![1, 0], vec![1, 1]];
        let w = Gl11Weights::new(
            lam.iter().map(|l| q(l[0] as i64)).collect(),
            lam.iter().map(|l| q(l[1] as i64)).collect(),
            z.clone(),
        )
        .unwrap();
        let wd = WeightData::new(1, 1, lam, z, None, q(1)).unwrap();
        for t in solution_roots(&w).unwrap() {
            let y = poly_of_roots(&t);
            let node = BetheNode::new(ParitySeq::standard(1, 1), vec![y.clone()], None).unwrap();
            let e = eigenvalue_formula(&y, &w);
            assert_eq!(eigenvalue(&node, &wd), e);
            assert_eq!(transfer_eigenvalue(&w, &bethe_vector(&t, &w)), Some(e));
        }
    }
}

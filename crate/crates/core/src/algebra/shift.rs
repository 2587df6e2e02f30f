//! The shift calculus with step `h`: `f[k] = f(x − k h)`, `ln'(f) = f / f[1]`, Casorati
//! determinants, and linear equations in `w` and `w[−s]`.

use super::field::Field;
use super::linalg::Matrix;
use super::poly::Poly;
use super::ratfunc::RatFunc;

/// Functions of `x` that can be shifted.
pub trait Shift<F: Field>: Sized {
    /// `f[k] = f(x − k h)`.
    fn sh(&self, k: i64, h: &F) -> Self;
}

impl<F: Field> Shift<F> for Poly<F> {
    fn sh(&self, k: i64, h: &F) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.translate(&(h.clone() * &F::from_int(-k)))
    }
}

impl<F: Field> Shift<F> for RatFunc<F> {
    fn sh(&self, k: i64, h: &F) -> Self {
        if k == 0 {
            return self.clone();
        }
        self.translate(&(h.clone() * &F::from_int(-k)))
    }
}

/// `ln'(f) = f / f[1]`; `f` must be nonzero.
pub fn dlog<F: Field>(f: &RatFunc<F>, h: &F) -> RatFunc<F> {
    assert!(!f.is_zero(), "ln' of zero");
    f.clone() / f.sh(1, h)
}

/// `Wr^±(g_1, …, g_r) = det(g_j(x ± (i−1)h))`; the default Casorati determinant is `sign = −1`.
pub fn casorati<F: Field>(sign: i8, gs: &[RatFunc<F>], h: &F) -> RatFunc<F> {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let r = gs.len();
    if r == 0 {
        return RatFunc::one();
    }
    let rows = (0..r)
        .map(|i| gs.iter().map(|g| g.sh(-(sign as i64) * i as i64, h)).collect())
        .collect();
    Matrix::from_rows(rows).det()
}

/// `Wr^s(g1, g2) = g1·g2[−s] − g2·g1[−s]`.
pub fn wr_pair<F: Field>(s: i8, g1: &RatFunc<F>, g2: &RatFunc<F>, h: &F) -> RatFunc<F> {
    let k = -(s as i64);
    g1.clone() * &g2.sh(k, h) - &(g2.clone() * &g1.sh(k, h))
}

/// Solutions `w = particular + Σ c_j homogeneous[j]` of `A·w[−s] + B·w = C`, `deg w ≤ bound`.
///
/// The homogeneous basis is in echelon form by leading degree and the particular solution has
/// zero coefficient at every leading degree of the basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewSolution<F: Field> {
    pub particular: Poly<F>,
    pub homogeneous: Vec<Poly<F>>,
}

pub fn solve_skew_linear<F: Field>(
    a: &Poly<F>,
    b: &Poly<F>,
    c: &Poly<F>,
    s: i8,
    bound: usize,
    h: &F,
) -> Option<SkewSolution<F>> {
    let k = -(s as i64);
    let cols: Vec<Poly<F>> = (0..=bound)
        .map(|j| {
            let xj = Poly::<F>::one().mul_xk(j);
            a.clone() * &xj.sh(k, h) + &(b.clone() * &xj)
        })
        .collect();
    let rows = cols.iter().map(|p| p.coeffs().len()).chain([c.coeffs().len(), 1]).max().unwrap();
    let mat = Matrix::from_rows((0..rows).map(|i| cols.iter().map(|p| p.coeff(i)).collect()).collect());
    let rhs: Vec<F> = (0..rows).map(|i| c.coeff(i)).collect();
    let sol = mat.solve(&rhs)?;
    let mut hom: Vec<Vec<F>> = sol.kernel;
    // echelon by highest coefficient
    let mut leads = Vec::new();
    for i in 0..hom.len() {
        let Some(p) = (0..hom.len()).skip(i).max_by_key(|&j| lead_index(&hom[j])) else { break };
        hom.swap(i, p);
        let li = lead_index(&hom[i]).expect("nonzero kernel vector");
        let inv = hom[i][li].inv().unwrap();
        hom[i] = hom[i].iter().map(|v| v.clone() * &inv).collect();
        for j in 0..hom.len() {
            if j != i && !hom[j][li].is_zero() {
                let f = hom[j][li].clone();
                hom[j] = hom[j].iter().zip(&hom[i]).map(|(x, y)| x.clone() - &(f.clone() * y)).collect();
            }
        }
        leads.push(li);
    }
    let mut part = sol.particular;
    for (v, &li) in hom.iter().zip(&leads) {
        if !part[li].is_zero() {
            let f = part[li].clone();
            part = part.iter().zip(v).map(|(x, y)| x.clone() - &(f.clone() * y)).collect();
        }
    }
    Some(SkewSolution { particular: Poly::new(part), homogeneous: hom.into_iter().map(Poly::new).collect() })
}

fn lead_index<F: Field>(v: &[F]) -> Option<usize> {
    v.iter().rposition(|x| !x.is_zero())
}

/// True when the functions are linearly independent over constants.
pub fn indep_over_constants<F: Field>(fs: &[RatFunc<F>]) -> bool {
    rank_over_constants(fs) == fs.len()
}

/// Dimension of the span of `fs` over the constants.
pub fn rank_over_constants<F: Field>(fs: &[RatFunc<F>]) -> usize {
    let fs: Vec<&RatFunc<F>> = fs.iter().filter(|f| !f.is_zero()).collect();
    if fs.is_empty() {
        return 0;
    }
    let den = fs.iter().fold(Poly::one(), |acc, f| acc.lcm(f.den()));
    let polys: Vec<Poly<F>> = fs.iter().map(|f| f.num().clone() * &den.div_exact(f.den()).unwrap()).collect();
    let n = polys.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    Matrix::from_rows((0..n).map(|i| polys.iter().map(|p| p.coeff(i)).collect()).collect()).rank()
}

//! Graded operators on `L_{λ^{(1)}} ⊗ … ⊗ L_{λ^{(p)}}` and the monodromy entries `L_ij(x)`.
//!
//! Basis states `v_{ε_1} ⊗ … ⊗ v_{ε_p}` are ordered lexicographically with site 1 most
//! significant; bit `p − k` of the index is set when `ε_k = 2`. The grading of a state is the
//! number of `v_2` factors mod 2. An operator `X` of parity `|X|` placed at site `k` picks up
//! `(−1)^{|X|·(|ε_1| + … + |ε_{k−1}|)}`.

use crate::algebra::{Field, Matrix, Poly, RatFunc};
use crate::error::{Error, Result};

use super::weights::Gl11Weights;

pub fn grading(idx: usize) -> u8 {
    (idx.count_ones() % 2) as u8
}

fn sign<T: Field>(odd: bool, v: T) -> T {
    if odd {
        -v
    } else {
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator<T: Field> {
    pub mat: Matrix<T>,
    /// 0 even, 1 odd.
    pub parity: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVector<T: Field> {
    pub amps: Vec<T>,
}

impl<T: Field> StateVector<T> {
    /// `|0⟩ = v_1 ⊗ … ⊗ v_1`.
    pub fn vacuum(p: usize) -> Self {
        let mut amps = vec![T::zero(); 1 << p];
        amps[0] = T::one();
        StateVector { amps }
    }
    pub fn basis(p: usize, idx: usize) -> Self {
        let mut amps = vec![T::zero(); 1 << p];
        amps[idx] = T::one();
        StateVector { amps }
    }
    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(T::is_zero)
    }
    pub fn scale(&self, k: &T) -> Self {
        StateVector { amps: self.amps.iter().map(|a| a.clone() * k).collect() }
    }
    /// `Some(g)` when all nonzero amplitudes have grading `g`.
    pub fn grading(&self) -> Option<u8> {
        let mut g = None;
        for (i, a) in self.amps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match g {
                None => g = Some(grading(i)),
                Some(h) if h != grading(i) => return None,
                _ => {}
            }
        }
        g
    }
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> StateVector<U> {
        StateVector { amps: self.amps.iter().map(f).collect() }
    }
}

impl<T: Field> TensorOperator<T> {
    pub fn identity(p: usize) -> Self {
        TensorOperator { mat: Matrix::identity(1 << p), parity: 0 }
    }
    pub fn dim(&self) -> usize {
        self.mat.rows()
    }
    pub fn apply(&self, v: &StateVector<T>) -> StateVector<T> {
        StateVector { amps: self.mat.apply(&v.amps) }
    }
    pub fn compose(&self, o: &Self) -> Self {
        TensorOperator { mat: self.mat.mul(&o.mat), parity: (self.parity + o.parity) % 2 }
    }
    pub fn scale(&self, k: &T) -> Self {
        TensorOperator { mat: self.mat.scale(k), parity: self.parity }
    }
    /// Sum of two operators of the same parity.
    pub fn plus(&self, o: &Self) -> Self {
        assert_eq!(self.parity, o.parity, "sum of operators of different parity");
        TensorOperator { mat: self.mat.add(&o.mat), parity: self.parity }
    }
    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.scale(&-T::one()))
    }
    /// `[A, B] = AB − (−1)^{|A||B|} BA`.
    pub fn supercommutator(&self, o: &Self) -> Self {
        let ab = self.compose(o);
        let ba = o.compose(self);
        let s = if self.parity * o.parity == 1 { T::one() } else { -T::one() };
        TensorOperator { mat: ab.mat.add(&ba.mat.scale(&s)), parity: ab.parity }
    }
    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> TensorOperator<U> {
        TensorOperator { mat: self.mat.map(f), parity: self.parity }
    }
}

impl<F: Field> TensorOperator<RatFunc<F>> {
    pub fn eval(&self, x: &F) -> Result<TensorOperator<F>> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.mat.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let e = v.eval(x).ok_or_else(|| Error::Pole(format!("operator entry at x = {}", x.render(&[]))))?;
                m.set(i, j, e);
            }
        }
        Ok(TensorOperator { mat: m, parity: self.parity })
    }
}

/// A `2 × 2` operator on one site, `m[r'][r]` the coefficient of `v_{r'}` in the image of `v_r`.
pub type Local<T> = [[T; 2]; 2];

/// `X` acting at site `k` (0-based) of `p`, with the Koszul sign.
pub fn embed<T: Field>(p: usize, k: usize, x: &Local<T>, parity: u8) -> TensorOperator<T> {
    let n = 1usize << p;
    let shift = p - 1 - k;
    let mut m = Matrix::zeros(n, n);
    for beta in 0..n {
        let r = (beta >> shift) & 1;
        let before = (beta >> (shift + 1)).count_ones() % 2 == 1;
        for (rr, row) in x.iter().enumerate() {
            let v = &row[r];
            if v.is_zero() {
                continue;
            }
            let alpha = (beta & !(1 << shift)) | (rr << shift);
            m.set(alpha, beta, sign(parity == 1 && before, v.clone()));
        }
    }
    TensorOperator { mat: m, parity }
}

/// `A ⊗ B` with `B` a single-site operator of parity `pb`: `(A ⊗ B)(v ⊗ w) = (−1)^{|B||v|} Av ⊗ Bw`.
fn super_kron<T: Field>(a: &Matrix<T>, b: &Local<T>, pb: u8) -> Matrix<T> {
    let n = a.rows();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for ip in 0..n {
            let av = a.get(ip, i);
            if av.is_zero() {
                continue;
            }
            let odd = pb == 1 && grading(i) == 1;
            for j in 0..2 {
                for jp in 0..2 {
                    if b[jp][j].is_zero() {
                        continue;
                    }
                    m.set(2 * ip + jp, 2 * i + j, sign(odd, av.clone() * &b[jp][j]));
                }
            }
        }
    }
    m
}

/// `(x − z) L(x)` on one site with `u = x − z`:
/// `L̂_11 = u + e_11`, `L̂_22 = u − e_22`, `L̂_12 = −e_21`, `L̂_21 = e_12`.
pub fn local_hat<T: Field>(a: &T, b: &T, u: &T) -> [[Local<T>; 2]; 2] {
    let z = T::zero;
    let one = T::one();
    let l11 = [[u.clone() + a, z()], [z(), u.clone() + a - &one]];
    let l22 = [[u.clone() - b, z()], [z(), u.clone() - b - &one]];
    let l12 = [[z(), z()], [-one.clone(), z()]];
    let l21 = [[z(), a.clone() + b], [z(), z()]];
    [[l11, l12], [l21, l22]]
}

/// `∏_k (x − z_k) · L_ij(x)` from the coproduct
/// `Δ L_ij = Σ_k (−1)^{(|k|+|i|)(|k|+|j|)} L_ik ⊗ L_kj`; `sites` holds `(a_k, b_k, x − z_k)`.
pub fn monodromy_hat<T: Field>(sites: &[(T, T, T)]) -> [[TensorOperator<T>; 2]; 2] {
    let mut m: [[Matrix<T>; 2]; 2] = [
        [Matrix::identity(1), Matrix::zeros(1, 1)],
        [Matrix::zeros(1, 1), Matrix::identity(1)],
    ];
    for (a, b, u) in sites {
        let l = local_hat(a, b, u);
        let n = m[0][0].rows() * 2;
        let mut next: [[Matrix<T>; 2]; 2] =
            [[Matrix::zeros(n, n), Matrix::zeros(n, n)], [Matrix::zeros(n, n), Matrix::zeros(n, n)]];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let s = ((k + i) % 2) * ((k + j) % 2) == 1;
                    let term = super_kron(&m[i][k], &l[k][j], ((k + j) % 2) as u8);
                    next[i][j] = if s { next[i][j].add(&term.scale(&-T::one())) } else { next[i][j].add(&term) };
                }
            }
        }
        m = next;
    }
    let [[m11, m12], [m21, m22]] = m;
    [
        [TensorOperator { mat: m11, parity: 0 }, TensorOperator { mat: m12, parity: 1 }],
        [TensorOperator { mat: m21, parity: 1 }, TensorOperator { mat: m22, parity: 0 }],
    ]
}

impl<F: Field> Gl11Weights<F> {
    fn sites<T: Field>(&self, x: &T, lift: impl Fn(&F) -> T) -> Vec<(T, T, T)> {
        (0..self.len()).map(|k| (lift(&self.a[k]), lift(&self.b[k]), x.clone() - &lift(&self.z[k]))).collect()
    }

    /// `L_ij(x)` with entries in `F(x)`.
    pub fn monodromy(&self) -> [[TensorOperator<RatFunc<F>>; 2]; 2] {
        let sites = self.sites(&RatFunc::x(), |v| RatFunc::constant(v.clone()));
        let inv = RatFunc::new(Poly::one(), self.base());
        monodromy_hat(&sites).map(|row| row.map(|op| op.scale(&inv)))
    }

    /// `L_ij(x_0)`.
    pub fn monodromy_at(&self, x: &F) -> Result<[[TensorOperator<F>; 2]; 2]> {
        let d = self.base().eval(x);
        let inv = d.inv().ok_or_else(|| Error::Pole(format!("L(x) at an evaluation point x = {}", x.render(&[]))))?;
        Ok(monodromy_hat(&self.sites(x, F::clone)).map(|row| row.map(|op| op.scale(&inv))))
    }

    /// `∏_k (t − z_k) L_12(t)`, defined for every `t`.
    pub fn creation_hat(&self, t: &F) -> TensorOperator<F> {
        let [[_, l12], _] = monodromy_hat(&self.sites(t, F::clone));
        l12
    }

    /// `T(x) = L_11(x) − L_22(x)`.
    pub fn transfer(&self) -> TensorOperator<RatFunc<F>> {
        self.twisted_transfer(&F::one(), &F::one())
    }
    /// `q_1 L_11(x) − q_2 L_22(x)`.
    pub fn twisted_transfer(&self, q1: &F, q2: &F) -> TensorOperator<RatFunc<F>> {
        let [[l11, _], [_, l22]] = self.monodromy();
        l11.scale(&RatFunc::constant(q1.clone())).minus(&l22.scale(&RatFunc::constant(q2.clone())))
    }
    pub fn transfer_at(&self, x: &F) -> Result<TensorOperator<F>> {
        self.twisted_transfer_at(&F::one(), &F::one(), x)
    }
    pub fn twisted_transfer_at(&self, q1: &F, q2: &F, x: &F) -> Result<TensorOperator<F>> {
        let [[l11, _], [_, l22]] = self.monodromy_at(x)?;
        Ok(l11.scale(q1).minus(&l22.scale(q2)))
    }

    /// `Σ_k X^{(k)}` for the one-site matrix `X(a_k, b_k)`.
    fn site_sum(&self, x: impl Fn(&F, &F) -> Local<F>, parity: u8) -> TensorOperator<F> {
        let p = self.len();
        let mut out = TensorOperator { mat: Matrix::zeros(1 << p, 1 << p), parity };
        for k in 0..p {
            out = out.plus(&embed(p, k, &x(&self.a[k], &self.b[k]), parity));
        }
        out
    }
    /// `e_12 = L_21^{(1)}`, the raising generator.
    pub fn raising(&self) -> TensorOperator<F> {
        self.site_sum(|a, b| [[F::zero(), a.clone() + b], [F::zero(), F::zero()]], 1)
    }
    /// `e_21 = −L_12^{(1)}`.
    pub fn lowering(&self) -> TensorOperator<F> {
        self.site_sum(|_, _| [[F::zero(), F::zero()], [F::one(), F::zero()]], 1)
    }
    /// `e_11` and `e_22`.
    pub fn cartan(&self) -> [TensorOperator<F>; 2] {
        [
            self.site_sum(|a, _| [[a.clone(), F::zero()], [F::zero(), a.clone() - &F::one()]], 0),
            self.site_sum(|_, b| [[b.clone(), F::zero()], [F::zero(), b.clone() + &F::one()]], 0),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quad;

    fn q(v: i64) -> Quad {
        Quad::from_int(v)
    }
    fn fr(a: i64, b: i64) -> Quad {
        Quad::frac(a, b)
    }

    fn data(p: usize) -> Gl11Weights<Quad> {
        let a = [fr(3, 2), q(2), fr(-1, 3)];
        let b = [fr(1, 5), q(-3), fr(2, 7)];
        let z = [q(0), fr(7, 3), fr(-5, 2)];
        Gl11Weights::new(a[..p].to_vec(), b[..p].to_vec(), z[..p].to_vec()).unwrap()
    }

    fn samples() -> Vec<Quad> {
        vec![fr(11, 3), fr(-17, 5), fr(29, 7), q(13)]
    }

    #[test]
    fn one_site_vacuum() {
        let w = Gl11Weights::new(vec![q(1)], vec![q(0)], vec![q(0)]).unwrap();
        let [[l11, _], [_, l22]] = w.monodromy();
        let vac = StateVector::vacuum(1).map(|v: &Quad| RatFunc::constant(v.clone()));
        let x = RatFunc::<Quad>::x();
        assert_eq!(l11.apply(&vac).amps[0], (x.clone() + RatFunc::one()) / x.clone());
        assert_eq!(l22.apply(&vac).amps[0], RatFunc::one());
        assert_eq!(w.transfer().apply(&vac).amps[0], RatFunc::one() / x);
    }

    #[test]
    fn vacuum_eigenvalue() {
        for p in 1..=3 {
            let w = data(p);
            let vac = StateVector::vacuum(p).map(|v: &Quad| RatFunc::constant(v.clone()));
            let e = RatFunc::new(w.phi() - w.psi(), w.base());
            assert_eq!(w.transfer().apply(&vac), vac.scale(&e));
        }
    }

    #[test]
    fn embedded_generators_form_gl11() {
        let w = data(3);
        let (e, f) = (w.raising(), w.lowering());
        let [h1, h2] = w.cartan();
        assert_eq!(e.supercommutator(&f), h1.plus(&h2));
        assert!(e.compose(&e).is_zero());
        assert!(f.compose(&f).is_zero());
    }

    #[test]
    fn rtt_relations() {
        // (x1 − x2)[L_ij(x1), L_kl(x2)] = (−1)^{|i||k|+|l||i|+|l||k|} (L_kj(x2) L_il(x1) − L_kj(x1) L_il(x2))
        for p in 1..=3 {
            let w = data(p);
            let s = samples();
            for (x1, x2) in [(&s[0], &s[1]), (&s[2], &s[3]), (&s[1], &s[2])] {
                let m1 = w.monodromy_at(x1).unwrap();
                let m2 = w.monodromy_at(x2).unwrap();
                for i in 0..2 {
                    for j in 0..2 {
                        for k in 0..2 {
                            for l in 0..2 {
                                let lhs = m1[i][j].supercommutator(&m2[k][l]).scale(&(x1.clone() - x2));
                                let mut rhs = m2[k][j].compose(&m1[i][l]).minus(&m1[k][j].compose(&m2[i][l]));
                                if (i * k + l * i + l * k) % 2 == 1 {
                                    rhs = rhs.scale(&-Quad::one());
                                }
                                assert_eq!(lhs.mat, rhs.mat, "p={p} ({i}{j},{k}{l})");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn displayed_exchange_relations() {
        let w = data(3);
        let s = samples();
        let (x1, x2) = (&s[0], &s[1]);
        let d = x1.clone() - x2;
        let m1 = w.monodromy_at(x1).unwrap();
        let m2 = w.monodromy_at(x2).unwrap();
        for i in 0..2 {
            let j = 1 - i;
            let si = if i == 0 { Quad::one() } else { -Quad::one() };
            assert!(m1[i][i].supercommutator(&m2[i][i]).is_zero());
            // L_ij(x1) L_ij(x2) = (x1 − x2 − s)/(x2 − x1 − s) L_ij(x2) L_ij(x1)
            let c = (d.clone() - &si) / (-d.clone() - &si);
            assert_eq!(m1[i][j].compose(&m2[i][j]).mat, m2[i][j].compose(&m1[i][j]).scale(&c).mat);
            for k in 0..2 {
                // L_kk(x1) L_ij(x2) = (x1 − x2 − s)/(x1 − x2) L_ij(x2) L_kk(x1) + s/(x1 − x2) L_ij(x1) L_kk(x2)
                let lhs = m1[k][k].compose(&m2[i][j]);
                let rhs = m2[i][j]
                    .compose(&m1[k][k])
                    .scale(&((d.clone() - &si) / &d))
                    .plus(&m1[i][j].compose(&m2[k][k]).scale(&(si.clone() / &d)));
                assert_eq!(lhs.mat, rhs.mat, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn transfer_matrices_commute() {
        let s = samples();
        for p in 1..=3 {
            let w = data(p);
            for (x1, x2) in [(&s[0], &s[1]), (&s[2], &s[3]), (&s[1], &s[2])] {
                for (q1, q2) in [(q(1), q(1)), (q(3), fr(-2, 5))] {
                    let t1 = w.twisted_transfer_at(&q1, &q2, x1).unwrap();
                    let t2 = w.twisted_transfer_at(&q1, &q2, x2).unwrap();
                    assert_eq!(t1.compose(&t2), t2.compose(&t1));
                }
            }
        }
    }

    #[test]
    fn transfer_commutes_with_gl11() {
        let w = data(3);
        let t = w.transfer_at(&fr(5, 11)).unwrap();
        let [h1, h2] = w.cartan();
        for g in [w.raising(), w.lowering(), h1, h2] {
            assert_eq!(t.compose(&g), g.compose(&t));
        }
        // the twisted one only keeps the Cartan part
        let tq = w.twisted_transfer_at(&q(2), &q(3), &fr(5, 11)).unwrap();
        let [h1, _] = w.cartan();
        assert_eq!(tq.compose(&h1), h1.compose(&tq));
    }

    #[test]
    fn pole_at_evaluation_point() {
        let w = data(2);
        assert!(matches!(w.monodromy_at(&fr(7, 3)), Err(Error::Pole(_))));
    }
}

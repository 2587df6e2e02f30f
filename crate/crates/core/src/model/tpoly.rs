//! Weights with respect to a parity sequence and the polynomials `T^s_i`, `φ^s_i`, `ψ^s_i`.

use crate::algebra::{Field, Poly};

use super::parity::ParitySeq;
use super::weights::WeightData;

/// `(λ^{(s)}_1, …, λ^{(s)}_{m+n})` for a polynomial weight `λ` in standard coordinates.
pub fn weight_transform(lambda: &[u32], s: &ParitySeq) -> Vec<u32> {
    let m = s.m();
    let d = s.data();
    (0..s.len())
        .map(|i| {
            let l = lambda[d.sigma[i] - 1];
            if s.signs()[i] == 1 {
                l - l.min(d.minus[i] as u32)
            } else {
                let extra = (1..=d.plus[i]).filter(|&j| lambda[m - j] as usize > d.minus[i]).count();
                l + extra as u32
            }
        })
        .collect()
}

/// `(x − z + s·h)(x − z + 2s·h)…(x − z + k s·h)`.
fn ladder<F: Field>(z: &F, s: i8, k: u32, h: &F) -> Poly<F> {
    let mut p = Poly::one();
    for j in 1..=k as i64 {
        let root = z.clone() - &(h.clone() * &F::from_int(s as i64 * j));
        p = p * Poly::linear(&root);
    }
    p
}

/// `T^s_1, …, T^s_{m+n}`.
pub fn t_polys<F: Field>(w: &WeightData<F>, s: &ParitySeq) -> Vec<Poly<F>> {
    let tw: Vec<Vec<u32>> = w.weights.iter().map(|l| weight_transform(l, s)).collect();
    (0..s.len())
        .map(|i| {
            let si = s.signs()[i];
            tw.iter().zip(&w.z).fold(Poly::one(), |acc, (l, z)| acc * ladder(z, si, l[i], &w.h))
        })
        .collect()
}

/// `T^s_i (T^s_{i+1})^{−s_i s_{i+1}}` for `i` one-based; a polynomial for polynomial weights.
pub fn t_ratio<F: Field>(t: &[Poly<F>], s: &ParitySeq, i: usize) -> Poly<F> {
    let (a, b) = (&t[i - 1], &t[i]);
    if s.s(i) == s.s(i + 1) {
        a.div_exact(b).expect("T_i / T_{i+1} is not a polynomial")
    } else {
        a.clone() * b
    }
}

/// `(φ^s_i, ψ^s_i)`, products over the points with `λ_i + λ_{i+1} ≠ 0`.
pub fn phi_psi<F: Field>(w: &WeightData<F>, s: &ParitySeq, i: usize) -> (Poly<F>, Poly<F>) {
    let (si, sj) = (s.s(i) as i64, s.s(i + 1) as i64);
    let mut phi = Poly::one();
    let mut psi = Poly::one();
    for (l, z) in w.weights.iter().zip(&w.z) {
        let l = weight_transform(l, s);
        let (a, b) = (l[i - 1] as i64, l[i] as i64);
        if a + b == 0 {
            continue;
        }
        phi = phi * Poly::linear(&(z.clone() - &(w.h.clone() * &F::from_int(si * a))));
        psi = psi * Poly::linear(&(z.clone() - &(w.h.clone() * &F::from_int(sj * b))));
    }
    (phi, psi)
}

/// `Σ_k λ^{(k,s)} − Σ_i l_i α^s_i` with `α^s_i = e_i − e_{i+1}`.
pub fn weight_at_infinity<F: Field>(w: &WeightData<F>, s: &ParitySeq, l: &[usize]) -> Vec<i64> {
    let r = s.len();
    let mut out = vec![0i64; r];
    for lam in &w.weights {
        for (o, v) in out.iter_mut().zip(weight_transform(lam, s)) {
            *o += v as i64;
        }
    }
    for j in 0..r {
        let lj = if j < r - 1 { l[j] as i64 } else { 0 };
        let lprev = if j > 0 { l[j - 1] as i64 } else { 0 };
        out[j] += lprev - lj;
    }
    out
}

//! The polynomials `π_{a,b}` and their relations to `T^s` and to dominants.

use crate::algebra::shift::Shift;
use crate::algebra::{Field, Poly};
use crate::model::{t_polys, ParitySeq, WeightData};

use super::exponents::Partition;

fn lam(l: &[u32], i: usize) -> u32 {
    // 1-based, zero past the end
    if i == 0 {
        0
    } else {
        l.get(i - 1).copied().unwrap_or(0)
    }
}

/// `π_{a,b} = ∏_k ∏_{i ≤ a} ∏_{j ≤ min(b, λ^{(k)}_{m−i+1})} (x − z_k + (i+j−a−b−1)h)`.
pub fn pi_ab<F: Field>(w: &WeightData<F>, a: usize, b: usize) -> Poly<F> {
    assert!(a <= w.m && b <= w.n, "pi_ab: (a, b) = ({a}, {b}) out of range");
    let mut p = Poly::one();
    for (l, z) in w.weights.iter().zip(&w.z) {
        for i in 1..=a {
            let top = (b as u32).min(lam(l, w.m - i + 1));
            for j in 1..=top as i64 {
                let k = i as i64 + j - a as i64 - b as i64 - 1;
                p = p * Poly::linear(&(z.clone() - &(w.h.clone() * &F::from_int(k))));
            }
        }
    }
    p
}

/// `T_i` of the standard parity, one past the end.
pub(crate) fn t_std<F: Field>(t: &[Poly<F>], i: usize) -> Poly<F> {
    if i == 0 {
        return Poly::one();
    }
    t.get(i - 1).cloned().unwrap_or_else(Poly::one)
}

/// Checks `T^s_i = T_{σ(i)}[s_i^−] π_{s⁺,s⁻} / π_{s⁺+1,s⁻}[−1]` for `s_i = 1` and
/// `T^s_i = T_{σ(i)}[s_i^+] π_{s⁺,s⁻+1} / π_{s⁺,s⁻}[1]` for `s_i = −1`, for every `i`.
pub fn t_relation_holds<F: Field>(w: &WeightData<F>, s: &ParitySeq) -> bool {
    let h = &w.h;
    let t0 = t_polys(w, &w.standard_parity());
    let ts = t_polys(w, s);
    let d = s.data();
    (0..s.len()).all(|k| {
        let (sp, sm) = (d.plus[k], d.minus[k]);
        let base = t_std(&t0, d.sigma[k]);
        let (lhs, rhs) = if s.signs()[k] == 1 {
            (ts[k].clone() * &pi_ab(w, sp + 1, sm).sh(-1, h), base.sh(sm as i64, h) * &pi_ab(w, sp, sm))
        } else {
            (ts[k].clone() * &pi_ab(w, sp, sm).sh(1, h), base.sh(sp as i64, h) * &pi_ab(w, sp, sm + 1))
        };
        lhs == rhs
    })
}

/// `A_k ⊔ B_k` for point `k`: `λ_{m−i+1} + λ_{m+1} + i − 1` for `i ≤ a` and
/// `λ_{m+1} − λ_{m+j} + j − 1` for `j ≤ b`.
pub fn exponent_union(lambda: &[u32], m: usize, a: usize, b: usize) -> Partition {
    let l1 = lam(lambda, m + 1);
    let av = (1..=a).map(|i| lam(lambda, m - i + 1) + l1 + i as u32 - 1);
    let bv = (1..=b).map(|j| l1 - lam(lambda, m + j) + j as u32 - 1);
    Partition::new(av.chain(bv).collect())
}

/// `𝒯_1, …, 𝒯_{a+b}` built from the dominants of `A_k ⊔ B_k`, written
/// `c_{a+b} < c_{a+b−1} + 1 < … < c_1 + a + b − 1`, at the points `z_k + λ^{(k)}_{m+1} h`.
pub fn script_t<F: Field>(w: &WeightData<F>, a: usize, b: usize) -> Vec<Poly<F>> {
    let r = a + b;
    let mut out = vec![Poly::one(); r];
    for (l, z) in w.weights.iter().zip(&w.z) {
        let dom = exponent_union(l, w.m, a, b).dominant();
        let zt = z.clone() + &(w.h.clone() * &F::from_int(lam(l, w.m + 1) as i64));
        for (j, t) in out.iter_mut().enumerate() {
            // c_{j+1} = d_{r−j−1} − (r − j − 1)
            let idx = r - j - 1;
            let c = dom.parts()[idx] - idx as u32;
            for q in 1..=c as i64 {
                *t = t.clone() * Poly::linear(&(zt.clone() - &(w.h.clone() * &F::from_int(q))));
            }
        }
    }
    out
}

/// Checks `π_{a,b} ∏_{j ≤ a} 𝒯_j[j] = ∏_{i ≤ a} T_{m−a+i}[b+i] T_{m+1}[i−1]`.
pub fn pi_identity_holds<F: Field>(w: &WeightData<F>, a: usize, b: usize) -> bool {
    let h = &w.h;
    let t0 = t_polys(w, &w.standard_parity());
    let st = script_t(w, a, b);
    let mut lhs = pi_ab(w, a, b);
    for j in 1..=a {
        lhs = lhs * st[j - 1].sh(j as i64, h);
    }
    let mut rhs = Poly::one();
    for i in 1..=a {
        rhs = rhs * t_std(&t0, w.m - a + i).sh((b + i) as i64, h);
        if w.n > 0 {
            rhs = rhs * t_std(&t0, w.m + 1).sh(i as i64 - 1, h);
        }
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quad;

    fn worked() -> WeightData<Quad> {
        let r = Quad::sqrt_of(2);
        WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::zero(), r.clone(), -r], None, Quad::one()).unwrap()
    }

    #[test]
    fn pi_on_worked_example() {
        let w = worked();
        assert_eq!(pi_ab(&w, 0, 1), Poly::one());
        assert_eq!(pi_ab(&w, 2, 0), Poly::one());
        let p11 = pi_ab(&w, 1, 1);
        assert_eq!(p11, Poly::from_ints(&[1, 1, -3, 1]));
        let t1 = Poly::<Quad>::from_ints(&[-1, 1, 3, 1]);
        assert_eq!(p11, t1.sh(2, &Quad::one()));
    }

    #[test]
    fn t_relation_on_worked_example() {
        let w = worked();
        for s in ParitySeq::all(2, 1) {
            assert!(t_relation_holds(&w, &s), "{s}");
        }
    }

    #[test]
    fn dominant_cases() {
        // b ≤ λ_m: sorted concatenation
        let l = [3, 2, 1, 0];
        let u = exponent_union(&l, 2, 2, 1);
        assert_eq!(u.dominant(), u);
        // λ_m < b ≤ λ_{m−1}
        let u = exponent_union(&[2, 1, 1, 0], 2, 2, 2);
        assert_eq!(u.parts(), &[0, 2, 2, 4]);
        assert_eq!(u.dominant().parts(), &[0, 2, 3, 4]);
        // λ_{m−a+1} < b
        let u = exponent_union(&[1, 1, 1, 0], 2, 2, 2);
        assert_eq!(u.parts(), &[0, 2, 2, 3]);
        assert_eq!(u.dominant().parts(), &[0, 2, 3, 4]);
    }

    #[test]
    fn pi_identity_on_worked_example() {
        let w = worked();
        for a in 0..=2 {
            for b in 0..=1 {
                assert!(pi_identity_holds(&w, a, b), "({a},{b})");
            }
        }
    }
}

use glmn_bethe::algebra::shift::{casorati, Shift};
use glmn_bethe::algebra::{Field, Poly, Quad, RatFunc};
use glmn_bethe::flags::{discrete_exponents, pi_identity_holds, t_relation_holds, FunctionSpace, Partition};
use glmn_bethe::model::{check_polynomial_weight, ParitySeq, WeightData};
use proptest::prelude::*;

fn brute_dominant(a: &Partition) -> Option<Partition> {
    // all strict partitions with the same length and parts ≤ max + r that dominate a
    let r = a.len();
    let top = a.parts().last().copied().unwrap_or(0) + r as u32;
    let mut best: Option<Partition> = None;
    let mut cands = Vec::new();
    fn rec(cur: &mut Vec<u32>, r: usize, top: u32, out: &mut Vec<Vec<u32>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().map(|&v| v + 1).unwrap_or(0);
        for v in lo..=top {
            cur.push(v);
            rec(cur, r, top, out);
            cur.pop();
        }
    }
    rec(&mut Vec::new(), r, top, &mut cands);
    let doms: Vec<Partition> = cands.into_iter().map(Partition::new).filter(|c| c.dominates(a)).collect();
    for c in &doms {
        if doms.iter().all(|d| d.dominates(c)) {
            best = Some(c.clone());
        }
    }
    best
}

fn weights_strategy() -> impl Strategy<Value = (usize, usize, Vec<Vec<u32>>, Vec<i64>)> {
    (1usize..=3, 0usize..=3, 1usize..=2).prop_flat_map(|(m, n, p)| {
        let one = (prop::collection::vec(0u32..=3, m), prop::collection::vec(0u32..=3, n));
        (Just(m), Just(n), prop::collection::vec(one, p), prop::collection::vec(-30i64..30, p))
    })
    .prop_map(|(m, n, raw, zs)| {
        let ws = raw
            .into_iter()
            .map(|(mut e, mut o)| {
                e.sort_unstable_by(|a, b| b.cmp(a));
                o.sort_unstable_by(|a, b| b.cmp(a));
                let lm = e[m - 1] as usize;
                for (j, v) in o.iter_mut().enumerate() {
                    if j >= lm {
                        *v = 0;
                    }
                }
                e.extend(o);
                e
            })
            .collect();
        (m, n, ws, zs)
    })
}

fn weight_data(m: usize, n: usize, ws: Vec<Vec<u32>>, zs: &[i64]) -> WeightData<Quad> {
    for l in &ws {
        check_polynomial_weight(l, m, n).unwrap();
    }
    let z = zs.iter().enumerate().map(|(k, &v)| Quad::frac(7 * v + k as i64, 7)).collect();
    WeightData::new(m, n, ws, z, None, Quad::one()).unwrap()
}

/// `∏_{l ≤ e} (x − z + l h) · g`, vanishing at `z − h, …, z − e h`.
fn vanishing(e: u32, g: &[i64], z: i64) -> RatFunc<Quad> {
    let mut p = Poly::from_ints(g);
    for l in 1..=e as i64 {
        p = p * Poly::from_ints(&[l - z, 1]);
    }
    RatFunc::from_poly(p)
}

fn space_strategy() -> impl Strategy<Value = Vec<(u32, Vec<i64>)>> {
    prop::collection::vec((0u32..4, prop::collection::vec(-4i64..=4, 1..=3)), 1..=3)
}

fn build_space(spec: &[(u32, Vec<i64>)], z: i64) -> Option<FunctionSpace<Quad>> {
    if spec.iter().any(|(_, g)| g.iter().all(|&c| c == 0)) {
        return None;
    }
    FunctionSpace::new(spec.iter().map(|(e, g)| vanishing(*e, g, z)).collect()).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominant_is_minimal(parts in prop::collection::vec(0u32..=6, 1..=5)) {
        let a = Partition::new(parts);
        let d = a.dominant();
        prop_assert!(d.is_strict());
        prop_assert!(d.dominates(&a));
        prop_assert_eq!(d.dominant(), d.clone());
        prop_assert_eq!(Some(d), brute_dominant(&a));
    }

    #[test]
    fn dominant_is_monotone(parts in prop::collection::vec(0u32..=6, 1..=5), bump in prop::collection::vec(0u32..=2, 5)) {
        let a = Partition::new(parts.clone());
        let b = Partition::new(a.parts().iter().zip(&bump).map(|(x, y)| x + y).collect());
        prop_assert!(b.dominates(&a));
        prop_assert!(b.dominant().dominates(&a.dominant()));
    }

    #[test]
    fn pi_identity((m, n, ws, zs) in weights_strategy()) {
        let w = weight_data(m, n, ws, &zs);
        for a in 0..=m {
            for b in 0..=n {
                prop_assert!(pi_identity_holds(&w, a, b), "a={} b={} weights={:?}", a, b, w.weights);
            }
        }
    }

    #[test]
    fn t_relation((m, n, ws, zs) in weights_strategy()) {
        let w = weight_data(m, n, ws, &zs);
        for s in ParitySeq::all(m, n) {
            prop_assert!(t_relation_holds(&w, &s), "s={} weights={:?}", s, w.weights);
        }
    }

    #[test]
    fn wronskian_divisibility(spec in space_strategy(), z in -5i64..5, mix in prop::collection::vec(-3i64..=3, 9)) {
        let Some(v) = build_space(&spec, z) else { return Ok(()) };
        let h = Quad::one();
        let zq = Quad::from_int(z);
        let e = discrete_exponents(&v, &zq, &h).unwrap();
        let r = v.dim();
        // c_j = E_{r−j} − (r − j)
        let c = |j: usize| e.parts()[r - j] - (r - j) as u32;
        let script = |j: usize| {
            let mut p = Poly::<Quad>::one();
            for l in 1..=c(j) as i64 {
                p = p * Poly::from_ints(&[l - z, 1]);
            }
            p
        };
        let members: Vec<RatFunc<Quad>> = (0..r)
            .map(|i| v.combine(&(0..r).map(|j| Quad::from_int(mix[(3 * i + j) % 9])).collect::<Vec<_>>()))
            .collect();
        for i in 1..=r {
            let wr = casorati(-1, &members[..i], &h);
            if wr.is_zero() {
                continue;
            }
            let mut d = Poly::one();
            for j in 1..=i {
                d = d * script(r + 1 - j).sh((i - j) as i64, &h);
            }
            prop_assert!(d.divides(wr.as_poly().unwrap()), "i={} E={}", i, e);
        }
    }

    #[test]
    fn exponents_of_direct_sums(s1 in space_strategy(), s2 in space_strategy(), z in -5i64..5) {
        let (Some(v1), Some(v2)) = (build_space(&s1, z), build_space(&s2, z)) else { return Ok(()) };
        let Ok(sum) = v1.direct_sum(&v2) else { return Ok(()) };
        let (zq, h) = (Quad::from_int(z), Quad::one());
        let e1 = discrete_exponents(&v1, &zq, &h).unwrap();
        let e2 = discrete_exponents(&v2, &zq, &h).unwrap();
        let e = discrete_exponents(&sum, &zq, &h).unwrap();
        prop_assert!(e.is_strict());
        prop_assert!(e.dominates(&e1.union(&e2).dominant()), "{} vs {} ⊔ {}", e, e1, e2);
    }
}

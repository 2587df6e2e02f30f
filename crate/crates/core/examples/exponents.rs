//! Discrete exponents, their dominant partitions and the identities for π_{a,b}.

use glmn_bethe::algebra::{Poly, Quad, RatFunc};
use glmn_bethe::flags::{discrete_exponents, pi_ab, pi_identity_holds, t_relation_holds, FunctionSpace, Partition};
use glmn_bethe::model::{ParitySeq, WeightData};

fn main() {
    let a = Partition::new(vec![0, 0, 2, 2]);
    println!("dominant of {a} is {}", a.dominant());

    // span{1, x(x+1), x(x+1)(x+2)} near 0 with h = 1
    let p = |c: &[i64]| RatFunc::from_poly(Poly::<Quad>::from_ints(c));
    let v = FunctionSpace::new(vec![p(&[1]), p(&[0, 1, 1]), p(&[0, 2, 3, 1])]).unwrap();
    println!("exponents: {}", discrete_exponents(&v, &Quad::from_int(0), &Quad::from_int(1)).unwrap());

    let w = WeightData::new(2, 1, vec![vec![2, 1, 1], vec![1, 0, 0]], vec![Quad::from_int(0), Quad::frac(5, 3)], None, Quad::from_int(1))
        .unwrap();
    for (a, b) in [(1, 0), (1, 1), (2, 1)] {
        println!("π_{a},{b} = {}  identity: {}", pi_ab(&w, a, b).render_in("x", &[]), pi_identity_holds(&w, a, b));
    }
    for s in ParitySeq::all(2, 1) {
        println!("T-relation at {s}: {}", t_relation_holds(&w, &s));
    }
}

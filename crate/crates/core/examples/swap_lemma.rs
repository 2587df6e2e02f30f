//! Rational difference operators: the swap lemma and minimal fractions.

use glmn_bethe::algebra::{Field, Poly, Quad, RatFunc};
use glmn_bethe::diffop::{odd_even_swap, rat_equal, DiffOp, FactorWitness, FactoredRatOp, Orientation};

fn r(c: &[i64]) -> RatFunc<Quad> {
    RatFunc::from_poly(Poly::from_ints(c))
}

fn main() {
    let h = Quad::one();
    let (a, b) = (r(&[1, 2]), r(&[-3, 0, 1]));
    let (c, d) = odd_even_swap(&a, &b, Orientation::Forward, &h).unwrap();
    println!("(1 - aτ)(1 - bτ)^-1 = (1 - cτ)^-1 (1 - dτ)");
    println!("  c = {}", c.render_in("x", &[]));
    println!("  d = {}", d.render_in("x", &[]));
    let (a2, b2) = odd_even_swap(&c, &d, Orientation::Backward, &h).unwrap();
    assert_eq!((a2, b2), (a, b));

    // (1 − ln'(x)τ)(1 − ln'(x+2)τ)^{-1}(1 − ln'(x^2+1)τ)
    let op = FactoredRatOp::new(
        vec![
            FactorWitness::new(r(&[0, 1]), 1),
            FactorWitness::new(r(&[2, 1]), -1),
            FactorWitness::new(r(&[1, 0, 1]), 1),
        ],
        h.clone(),
    );
    let f = op.to_minimal_fraction().unwrap();
    println!("D0 = {}", f.d0.render(&[]));
    println!("D1 = {}", f.d1.render(&[]));
    let moved = op.swap_adjacent(1).unwrap();
    println!("after one swap the fraction is unchanged: {}", rat_equal(&op, &moved).unwrap());

    let (q, rem) = f.d0.right_divmod(&DiffOp::first_order(r(&[1, 1]), h));
    println!("D0 = Q·(1 - (x+1)τ) + R with ord R = {:?}, ord Q = {:?}", rem.order(), q.order());
}

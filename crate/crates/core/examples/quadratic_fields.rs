//! Exact scalars: Q(√d), one parameter over it, and polynomial gcds.

use glmn_bethe::algebra::parse::FieldSpec;
use glmn_bethe::algebra::{Field, Poly, Quad, RatFunc, Q1};

fn main() {
    let r = Quad::sqrt_of(2);
    let u = Quad::one() + &r;
    println!("(1+r)^-1 = {}", u.inv().unwrap().render(&[]));
    println!("(1+r)^3  = {}", u.pow(3).render(&[]));

    // (x − r)(x + r) and (x − r)(x − 1) share x − r
    let a = Poly::linear(&r) * Poly::linear(&-r.clone());
    let b = Poly::linear(&r) * Poly::linear(&Quad::one());
    println!("gcd = {}", a.gcd(&b).render_in("x", &[]));

    let spec = FieldSpec::quadratic(2).with_params(&["c"]);
    let names = spec.names();
    let f: Q1 = spec.parse("(c - r)/(c^2 - 2)").unwrap();
    println!("(c - r)/(c^2 - 2) = {}", f.render(&names));
    let p: Poly<Q1> = spec.parse_poly("4*x^3 - (6 + 3*c)*x^2 + 3*c*x + c + 1").unwrap();
    println!("monic: {}", p.monic().render_in("x", &names));
    let at3 = p.map(|v| v.eval(&Quad::from_int(3)).unwrap());
    println!("at c = 3: {}", at3.render_in("x", &[]));
    let _: RatFunc<Quad> = RatFunc::from_poly(at3);
}

//! The Bethe ansatz equations without roots, genericity and the eigenvalue.

use glmn_bethe::algebra::parse::FieldSpec;
use glmn_bethe::algebra::{Poly, Quad};
use glmn_bethe::model::{bae_check, eigenvalue, is_generic, t_polys, BetheNode, ParitySeq, WeightData};

fn main() {
    let r = Quad::sqrt_of(2);
    let w = WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::from_int(0), r.clone(), -r], None, Quad::from_int(1))
        .unwrap();
    let spec = FieldSpec::quadratic(2);
    for s in ParitySeq::all(2, 1) {
        let t: Vec<String> = t_polys(&w, &s).iter().map(|p| p.render_in("x", &[])).collect();
        println!("T^{s} = ({})", t.join(", "));
    }

    let good: Vec<Poly<Quad>> = ["x - 3", "4*x^3 - 15*x^2 + 9*x + 4"].iter().map(|s| spec.parse_poly(s).unwrap()).collect();
    let bad: Vec<Poly<Quad>> = ["x - 3", "x^3 + 1"].iter().map(|s| spec.parse_poly(s).unwrap()).collect();
    for y in [good, bad] {
        let n = BetheNode::new(ParitySeq::new(vec![1, -1, 1]).unwrap(), y, None).unwrap();
        println!("{}", n.render(&[]));
        for c in bae_check(&n, &w) {
            println!("  direction {}: {}", c.direction, c.reason.as_deref().unwrap_or("ok"));
        }
        println!("  generic: {}", is_generic(&n, &w).generic);
        if bae_check(&n, &w).iter().all(|c| c.ok) {
            println!("  E(x) = {}", eigenvalue(&n, &w).render_in("x", &[]));
        }
    }
}

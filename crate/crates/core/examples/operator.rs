//! The difference operator of a node as witnessed factors and as a minimal fraction.

use glmn_bethe::algebra::Quad;
use glmn_bethe::model::{BetheNode, ParitySeq, WeightData};
use glmn_bethe::population::{build_operator, fermionic_reproduce};

fn main() {
    let r = Quad::sqrt_of(2);
    let w = WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::from_int(0), r.clone(), -r], None, Quad::from_int(1))
        .unwrap();
    let seed = BetheNode::trivial(ParitySeq::standard(2, 1), None);
    let next = fermionic_reproduce(&seed, &w, 2).unwrap();
    for n in [&seed, &next] {
        let op = build_operator(n, &w);
        println!("{}", n.render(&[]));
        for f in &op.factors {
            println!("  (1 - ln'({})τ)^{}", f.g.render_in("x", &[]), f.sign);
        }
        let frac = op.to_minimal_fraction().unwrap();
        println!("  D0 = {}", frac.d0.render(&[]));
        println!("  D1 = {}", frac.d1.render(&[]));
    }
    let (a, b) = (build_operator(&seed, &w), build_operator(&next, &w));
    println!("same operator: {}", glmn_bethe::diffop::rat_equal(&a, &b).unwrap());
}

//! The symbolic population of y = (1, 1) for gl(2|1), three sites at 0, ±√2.

use glmn_bethe::algebra::Quad;
use glmn_bethe::model::WeightData;
use glmn_bethe::population::{default_values, explore_symbolic, specialized_report, trivial_seed};

fn main() {
    let r = Quad::sqrt_of(2);
    let w = WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::from_int(0), r.clone(), -r], None, Quad::from_int(1))
        .unwrap();
    let pop = explore_symbolic(&trivial_seed(&w), &w, &[], "c").unwrap();
    let g = &pop.graph;
    for n in &g.nodes {
        println!("{}", n.render(&g.names));
    }
    for a in &pop.anchors {
        println!("{} lies on family {} at c = {}", a.node.render(&[]), a.family, a.at.render(&[]));
    }
    let rep = specialized_report(g, &w, &default_values(&[2, -3]), &g.names);
    println!("invariance at 0, 1, ∞, 2, −3: {}", rep.all_pass);
    print!("{}", g.to_graphviz());
}

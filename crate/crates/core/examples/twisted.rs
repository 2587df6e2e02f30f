//! Twisted chains: finite populations in bijection with permutations of the twist.

use glmn_bethe::algebra::Quad;
use glmn_bethe::model::WeightData;
use glmn_bethe::population::{explore_sampled, invariance_report, trivial_seed, SampleOptions};

fn main() {
    let q = Quad::from_int;
    let cases = [
        (2, 0, vec![vec![1, 0], vec![1, 0]], vec![q(2), q(-1)]),
        (1, 1, vec![vec![1, 0], vec![1, 0]], vec![q(3), q(-2)]),
        (2, 1, vec![vec![1, 1, 0], vec![1, 0, 0]], vec![q(2), q(5), q(-3)]),
        (1, 2, vec![vec![1, 0, 0], vec![2, 1, 0]], vec![q(7), q(-1), q(4)]),
    ];
    for (m, n, weights, twist) in cases {
        let w = WeightData::new(m, n, weights, vec![Quad::frac(1, 3), Quad::frac(-5, 2)], Some(twist), q(1)).unwrap();
        let g = explore_sampled(&trivial_seed(&w), &w, &SampleOptions::default(), &[]).unwrap();
        let rep = invariance_report(&g, &w);
        println!("gl({m}|{n}): {} nodes, invariant: {}", g.nodes.len(), rep.all_pass);
        for node in &g.nodes {
            println!("  {}", node.render(&[]));
        }
    }
}

//! Sampled populations of random gl(2|1) and gl(1|2) chains with operator invariance per edge.

use glmn_bethe::algebra::Quad;
use glmn_bethe::model::WeightData;
use glmn_bethe::population::{explore_sampled, invariance_report, trivial_seed, SampleOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (m, n, weight) in [(2, 1, vec![1, 1, 0]), (2, 1, vec![2, 1, 1]), (1, 2, vec![1, 0, 0]), (1, 2, vec![2, 1, 0])] {
        let z: Vec<Quad> = (0..2).map(|k| Quad::frac(rng.gen_range(-40..40) * 2 + 1, 7 + k)).collect();
        let w = WeightData::new(m, n, vec![weight.clone(); 2], z, None, Quad::from_int(1)).unwrap();
        let opts = SampleOptions { seed: 3, ..SampleOptions::default() };
        let g = explore_sampled(&trivial_seed(&w), &w, &opts, &[]).unwrap();
        let rep = invariance_report(&g, &w);
        println!(
            "gl({m}|{n}) weight {weight:?}: {} nodes, {} parities, {} edges, invariant: {}",
            g.nodes.len(),
            g.parity_count(),
            g.edges.len(),
            rep.all_pass
        );
    }
}

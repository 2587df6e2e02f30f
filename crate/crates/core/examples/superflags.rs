//! Kernel spaces of a solution, random superflags and the generating map back to the population.

use glmn_bethe::algebra::Quad;
use glmn_bethe::flags::{bijection_check, kernel_spaces, sample_flags, KernelOptions};
use glmn_bethe::model::{BetheNode, ParitySeq, WeightData};
use glmn_bethe::population::explore_symbolic;

fn main() {
    let r = Quad::sqrt_of(2);
    let w = WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::from_int(0), r.clone(), -r], None, Quad::from_int(1))
        .unwrap();
    let seed = BetheNode::trivial(ParitySeq::standard(2, 1), None);
    let k = kernel_spaces(&seed, &w, &KernelOptions::default()).unwrap();
    println!("dim V = {}, dim U = {}, y_m = {}", k.v.dim(), k.u.dim(), k.y_m.render_in("x", &[]));
    println!("technical conditions: {}", k.technical.all());

    let pop = explore_symbolic(&seed, &w, &[], "c").unwrap();
    let flags = sample_flags(&k, 2, 1, 3, 17).unwrap();
    let rep = bijection_check(&k, &w, &flags, Some(&pop), &[]);
    for e in &rep.entries {
        println!("{} ({})  bae {} factorization {} in population {:?}", e.parity, e.y.join(", "), e.bae, e.factorization, e.in_population);
    }
    println!("injective: {}, all pass: {}", rep.injective, rep.all_pass);
}

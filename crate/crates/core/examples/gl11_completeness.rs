//! Bethe vectors of a generic gl(1|1) chain: singular, orthogonal and complete.

use glmn_bethe::algebra::{Field, Quad};
use glmn_bethe::gl11::{completeness_report, Gl11Weights};

fn main() {
    let q = Quad::frac;
    let w = Gl11Weights::new(vec![q(1, 2), q(3, 1), q(-2, 3)], vec![q(1, 3), q(-1, 4), q(2, 1)], vec![q(0, 1), q(5, 2), q(-7, 3)])
        .unwrap();
    let r = completeness_report(&w).unwrap();
    println!("irreducible: {:?}", r.irreducibility);
    for (y, n) in r.solutions.iter().zip(&r.norms) {
        println!("y = {:<40} B(w,w) = {:<12} formula = {:<12} sign {:?}", y.render_in("x", &[]), n.lhs.render(&[]), n.rhs.render(&[]), n.sign);
    }
    println!(
        "solutions {}/{}, nonzero {}, singular {}, eigen {}, orthogonal {}, rank {} of {}",
        r.solutions.len(),
        r.expected,
        r.nonzero,
        r.singular,
        r.eigen,
        r.orthogonal,
        r.rank,
        r.singular_dim
    );
}

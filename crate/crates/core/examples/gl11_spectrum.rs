//! Transfer-matrix spectrum of p copies of C^{1|1}(0) against the closed form.

use glmn_bethe::gl11::homogeneous_spectrum;

fn main() {
    for p in [2, 3, 4] {
        let s = homogeneous_spectrum(p).unwrap();
        println!("p = {p}: matches {}, simple {}", s.matches, s.simple);
        for e in &s.closed_form {
            println!("  {}", e.render_in("x", &[]));
        }
    }
    match homogeneous_spectrum(5) {
        Ok(_) => println!("p = 5 computed"),
        Err(e) => println!("p = 5: {e}"),
    }
}

//! The four-variable structure with two quadratic Casimirs.
//!
//!     cargo run --example sklyanin -- 2

use hjps::classify::sklyanin_casimirs;
use hjps::heisenberg::{check_h_invariance, tau_degree};
use hjps::jps::{bracket_table, check_casimir, check_jacobi};
use hjps::polyring::parse_rational;

fn main() -> hjps::Result<()> {
    let k = parse_rational(&std::env::args().nth(1).unwrap_or_else(|| "1".into()))?;
    let c = sklyanin_casimirs(&k);
    print!("{c}");
    let t = bracket_table(&c)?;
    for (i, j, e) in t.pairs() {
        println!("{{x{i}, x{j}}} = {e}");
    }
    let h = check_h_invariance(&t);
    println!(
        "sigma {} / tau {} / degree signature {} / Jacobi {} / Casimir {}",
        h.sigma_ok,
        h.tau_ok,
        h.degree_signature_ok,
        check_jacobi(&t).ok,
        check_casimir(&c, &t)
    );
    println!("tau-degree of q1*q2: {:?}", tau_degree(&c.product()));
    Ok(())
}

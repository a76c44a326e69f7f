//! Five-variable Jacobian structure from a linear and two quadratic Casimirs.

use hjps::classify::brieskorn_pham_5;
use hjps::heisenberg::check_h_invariance;
use hjps::jps::{bracket_table, check_casimir, check_jacobi};
use hjps::polyring::{rat, Rational};

fn main() -> hjps::Result<()> {
    let v = |xs: [i64; 5]| -> [Rational; 5] { xs.map(rat) };
    let c = brieskorn_pham_5(&v([1, 0, 0, 0, 0]), &v([0, 1, 0, 0, 1]), &v([0, 0, 1, 1, 0]));
    print!("{c}");
    let t = bracket_table(&c)?;
    for (i, j, e) in t.pairs().filter(|(_, _, e)| !e.is_zero()) {
        println!("{{x{i}, x{j}}} = {e}");
    }
    println!("Jacobi {} / Casimir {}", check_jacobi(&t).ok, check_casimir(&c, &t));
    let h = check_h_invariance(&t);
    println!("H-invariant: {}", h.is_invariant());
    for f in h.failures.iter().take(3) {
        println!("  ({}, {}) {:?}: {}", f.i, f.j, f.reason, f.witness);
    }
    Ok(())
}

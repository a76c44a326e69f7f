//! Brackets of the cubic `x0³ + x1³ + x2³ + γ x0x1x2` and their invariance.
//!
//!     cargo run --example ast_cubic -- 5/2

use hjps::classify::ast_cubic;
use hjps::heisenberg::{check_h_invariance, tau_degree};
use hjps::jps::{check_jacobi, jps3_table};
use hjps::polyring::parse_rational;

fn main() -> hjps::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1".into());
    let gamma = parse_rational(&arg)?;
    let p = ast_cubic(&gamma);
    println!("P = {p}");
    println!("tau-degree of P: {:?}", tau_degree(&p));
    let t = jps3_table(&p)?;
    for (i, j, e) in t.pairs() {
        println!("{{x{i}, x{j}}} = {e}");
    }
    let rep = check_h_invariance(&t);
    println!("H-invariant: {}", rep.is_invariant());
    println!("Jacobi: {}", check_jacobi(&t).ok);
    Ok(())
}

//! Tangent lines of the cubic fitted inside the four-parameter sextic family.
//!
//!     cargo run --example dual_sextic -- 0 2 1/2

use hjps::classify::ast_cubic;
use hjps::dualcurve::{bordered_hessian, fit_dual_sextic, perturb_samples, sample_tangents};
use hjps::polyring::{parse_rational, rational_to_f64, rat};

fn main() -> hjps::Result<()> {
    let mut gammas: Vec<String> = std::env::args().skip(1).collect();
    if gammas.is_empty() {
        gammas = vec!["0".into(), "1".into(), "2".into(), "1/2".into()];
    }
    println!("bordered Hessian of the Fermat cubic: {}", bordered_hessian(&ast_cubic(&rat(0)))?);
    for g in gammas {
        let gamma = parse_rational(&g)?;
        let samples = sample_tangents(rational_to_f64(&gamma), 24, 1)?;
        let fit = fit_dual_sextic(&samples)?;
        let noisy = fit_dual_sextic(&perturb_samples(&samples, 1e-3, 2))?;
        println!(
            "gamma = {g:>4}: (a,b,c,d) = [{:+.6}, {:+.6}, {:+.6}, {:+.6}]  residual {:.1e}  noisy {:.1e}",
            fit.coeffs[0], fit.coeffs[1], fit.coeffs[2], fit.coeffs[3], fit.residual, noisy.residual
        );
    }
    Ok(())
}

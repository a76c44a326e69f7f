//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a checker ran and said no, 2 bad usage or input.
//! Every subcommand except text-mode `basis` prints one pretty JSON document.
//! Rationals and polynomials appear as strings.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::h_basis;
use crate::dualcurve::{fit_dual_sextic, rationalize, sample_tangents, FIT_TOL};
use crate::enumeration::{
    constraint_system, count, dim_h3, enumerate_compositions, poincare_coeffs,
    triangle_lattice_points, CountMethod, MAX_FILTER_DEGREE, POINCARE_SERIES,
};
use crate::error::{Error, Result};
use crate::heisenberg::check_h_invariance;
use crate::jps::{bracket_table, check_casimir, check_jacobi, CasimirSet};
use crate::plot::plot_polytope;
use crate::polyring::{parse_rational, rat, rational_to_f64, Monomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn json(ok: bool, payload: Value) -> Self {
        let mut stdout = serde_json::to_string_pretty(&payload).expect("values serialize");
        stdout.push('\n');
        CommandResult { exit_code: if ok { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Self {
        CommandResult { exit_code: 2, stdout: String::new(), stderr: msg }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hjps", about = "Heisenberg-invariant Jacobian Poisson structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Admissible monomials of degree n*r and their sigma-orbits
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        orbits: bool,
    },
    /// Dimension count by one method, cross-checked by another
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
        #[arg(long, value_parser = parse_method)]
        method: CountMethod,
    },
    /// Coefficients of the Poincare series up to t^(3 max_r)
    Poincare {
        #[arg(long)]
        max_r: usize,
    },
    /// Bracket table of a Casimir file
    Bracket {
        #[arg(long)]
        casimirs: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
    },
    /// Invariance, Jacobi and Casimir checks
    Check {
        #[arg(long)]
        casimirs: PathBuf,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true, value_parser = parse_sign)]
        sign: i64,
    },
    /// Fit the dual of the cubic with parameter gamma in the sextic family
    Dual {
        #[arg(long, allow_negative_numbers = true)]
        gamma: String,
        #[arg(long, default_value_t = 24)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = FIT_TOL)]
        tol: f64,
    },
    /// Lattice points and constraints, optionally drawn as SVG
    Polytope {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        plot: Option<PathBuf>,
    },
}

fn parse_method(s: &str) -> std::result::Result<CountMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_sign(s: &str) -> std::result::Result<i64, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("sign must be 1 or -1, got {s:?}")),
    }
}

/// Runs the CLI on `argv` (without the program name).
pub fn run(argv: &[String]) -> CommandResult {
    let args = std::iter::once("hjps".to_string()).chain(argv.iter().cloned());
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult { exit_code: 0, stdout: text, stderr: String::new() }
                }
                _ => CommandResult::usage(text),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(r) => r,
        Err(e) => CommandResult::usage(format!("error: {e}\n")),
    }
}

fn dispatch(cmd: Command) -> Result<CommandResult> {
    match cmd {
        Command::Basis { n, r, json, orbits } => basis(n, r, json, orbits),
        Command::Count { n, r, method } => count_cmd(n, r, method),
        Command::Poincare { max_r } => Ok(poincare(max_r)),
        Command::Bracket { casimirs, pair } => bracket(&casimirs, pair),
        Command::Check { casimirs, sign } => check(&casimirs, sign),
        Command::Dual { gamma, samples, seed, tol } => dual(&gamma, samples, seed, tol),
        Command::Polytope { n, r, plot } => polytope(n, r, plot),
    }
}

fn exps(m: &Monomial) -> Value {
    json!(m.exponents())
}

fn basis(n: usize, r: u64, as_json: bool, with_orbits: bool) -> Result<CommandResult> {
    let b = h_basis(n, r)?;
    if !as_json {
        let mut s = format!(
            "n = {n}, r = {r}, degree = {}\ndimension = {}\ninvariant_dimension = {}\n",
            b.degree, b.monomial_dimension, b.orbit_dimension
        );
        for m in &b.monomials {
            s.push_str(&format!("{m}\n"));
        }
        if with_orbits {
            s.push_str("orbit sums:\n");
            for p in b.orbit_sums() {
                s.push_str(&format!("{p}\n"));
            }
        }
        return Ok(CommandResult { exit_code: 0, stdout: s, stderr: String::new() });
    }
    let mut v = json!({
        "n": n,
        "r": r,
        "degree": b.degree,
        "dimension": b.monomial_dimension,
        "invariant_dimension": b.orbit_dimension,
        "monomials": b.monomials.iter().map(exps).collect::<Vec<_>>(),
    });
    if with_orbits {
        v["orbits"] = json!(b
            .orbits
            .iter()
            .map(|o| o.iter().map(exps).collect::<Vec<_>>())
            .collect::<Vec<_>>());
        v["orbit_sums"] = json!(b.orbit_sums().iter().map(|p| p.to_string()).collect::<Vec<_>>());
    }
    Ok(CommandResult::json(true, v))
}

fn cross_method(n: usize, r: u64, m: CountMethod) -> Option<CountMethod> {
    use CountMethod::*;
    match m {
        ClosedForm => Some(TriangleBrute),
        TriangleBrute => Some(ClosedForm),
        Compositions if n as u64 * r <= MAX_FILTER_DEGREE => Some(MonomialFilter),
        Compositions if n == 3 => Some(ClosedForm),
        Compositions => None,
        MonomialFilter => Some(Compositions),
    }
}

fn count_cmd(n: usize, r: u64, method: CountMethod) -> Result<CommandResult> {
    let primary = count(n, r, method)?;
    let (cross, agree) = match cross_method(n, r, method) {
        Some(m) => {
            let c = count(n, r, m)?;
            let agree = c.count == primary.count;
            (json!({ "method": m.to_string(), "count": c.count }), agree)
        }
        None => (Value::Null, true),
    };
    Ok(CommandResult::json(
        agree,
        json!({
            "n": n,
            "r": r,
            "method": method.to_string(),
            "count": primary.count,
            "cross_check": cross,
            "agree": agree,
        }),
    ))
}

fn poincare(max_r: usize) -> CommandResult {
    let coeffs = poincare_coeffs(max_r);
    let closed: Vec<u64> = (0..=max_r as i64)
        .map(|r| dim_h3(r - 1).expect("s >= -1"))
        .collect();
    let agree = coeffs == closed;
    CommandResult::json(
        agree,
        json!({
            "max_r": max_r,
            "series": POINCARE_SERIES,
            "coefficients": coeffs,
            "closed_form": closed,
            "agree": agree,
        }),
    )
}

fn read_casimirs(path: &PathBuf) -> Result<CasimirSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    CasimirSet::parse(&text)
}

fn bracket(path: &PathBuf, pair: Option<Vec<usize>>) -> Result<CommandResult> {
    let c = read_casimirs(path)?;
    let t = bracket_table(&c)?;
    let n = c.n();
    let entries: Vec<Value> = match pair {
        Some(p) => {
            let (i, j) = (p[0], p[1]);
            if let Some(&bad) = [i, j].iter().find(|&&k| k >= n) {
                return Err(Error::IndexOutOfRange { index: bad, bound: n });
            }
            vec![json!({ "i": i, "j": j, "bracket": t.get(i, j).to_string() })]
        }
        None => t
            .pairs()
            .map(|(i, j, e)| json!({ "i": i, "j": j, "bracket": e.to_string() }))
            .collect(),
    };
    Ok(CommandResult::json(
        true,
        json!({
            "n": n,
            "casimirs": c.casimirs().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            "entries": entries,
        }),
    ))
}

fn check(path: &PathBuf, sign: i64) -> Result<CommandResult> {
    let c = read_casimirs(path)?;
    let t = bracket_table(&c)?.scaled(&rat(sign));
    let h = check_h_invariance(&t);
    let jac = check_jacobi(&t);
    let cas = check_casimir(&c, &t);
    let failures: Vec<Value> = h
        .failures
        .iter()
        .map(|f| {
            json!({
                "i": f.i,
                "j": f.j,
                "reason": f.reason,
                "witness": f.witness.to_string(),
            })
        })
        .collect();
    let jacobi_witness = match &jac.witness {
        Some((i, j, k, p)) => json!({ "triple": [i, j, k], "sum": p.to_string() }),
        None => Value::Null,
    };
    let ok = h.is_invariant() && jac.ok && cas;
    Ok(CommandResult::json(
        ok,
        json!({
            "n": c.n(),
            "sign": sign,
            "sigma_ok": h.sigma_ok,
            "tau_ok": h.tau_ok,
            "degree_signature_ok": h.degree_signature_ok,
            "jacobi_ok": jac.ok,
            "casimir_ok": cas,
            "failures": failures,
            "jacobi_witness": jacobi_witness,
        }),
    ))
}

fn dual(gamma: &str, samples: usize, seed: u64, tol: f64) -> Result<CommandResult> {
    let g = parse_rational(gamma)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tol must be positive, got {tol}")));
    }
    let pts = sample_tangents(rational_to_f64(&g), samples, seed)?;
    let fit = fit_dual_sextic(&pts)?;
    let ok = fit.residual < tol;
    let snapped = rationalize(&fit.coeffs, 64, 1e-9)
        .map(|c| json!(c.iter().map(|v| v.to_string()).collect::<Vec<_>>()))
        .unwrap_or(Value::Null);
    Ok(CommandResult::json(
        ok,
        json!({
            "gamma": g.to_string(),
            "samples": samples,
            "seed": seed,
            "tol": tol,
            "coeffs": fit.coeffs,
            "rational_direction": snapped,
            "residual": fit.residual,
            "singular_values": fit.singular_values,
            "ok": ok,
        }),
    ))
}

fn polytope(n: usize, r: u64, plot: Option<PathBuf>) -> Result<CommandResult> {
    let sys = constraint_system(n, r)?;
    let points: Vec<Vec<u64>> = if n == 3 {
        triangle_lattice_points(r)?.into_iter().map(|p| p.0).collect()
    } else {
        enumerate_compositions(n, r)?.into_iter().map(|p| p.0).collect()
    };
    let plotted = match &plot {
        Some(path) => {
            let c = plot_polytope(n, r, path)?;
            debug_assert_eq!(c, points.len());
            json!(path.display().to_string())
        }
        None => Value::Null,
    };
    Ok(CommandResult::json(
        true,
        json!({
            "n": n,
            "r": r,
            "coordinates": if n == 3 { "triangle" } else { "compositions" },
            "count": points.len(),
            "points": points,
            "constraints": sys.rows(),
            "weight": sys.weight(),
            "plot": plotted,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(s: &str) -> CommandResult {
        let argv: Vec<String> = s.split_whitespace().map(String::from).collect();
        run(&argv)
    }

    #[test]
    fn basis_json() {
        let r = go("basis --n 3 --r 2 --json");
        assert_eq!(r.exit_code, 0);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["dimension"], 10);
        assert_eq!(v["invariant_dimension"], 4);
        assert_eq!(v["monomials"].as_array().unwrap().len(), 10);
        assert!(v.get("orbits").is_none());
    }

    #[test]
    fn poincare_small() {
        let r = go("poincare --max-r 4");
        assert_eq!(r.exit_code, 0);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["coefficients"], json!([1, 4, 10, 19, 31]));
        assert_eq!(v["series"], "(1+t^3+t^6)/(1-t^3)^3");
    }

    #[test]
    fn usage_errors() {
        for bad in ["", "frobnicate", "basis --n 3", "count --n 3 --r 1 --method nope", "check --casimirs x --sign 2"] {
            let r = go(bad);
            assert_eq!(r.exit_code, 2, "{bad}");
            assert!(r.stdout.is_empty());
            assert!(!r.stderr.is_empty());
        }
        assert_eq!(go("count --n 4 --r 1 --method closed-form").exit_code, 2);
        assert_eq!(go("dual --gamma -3 --samples 24 --seed 1 --tol 1e-8").exit_code, 2);
    }

    #[test]
    fn count_cross_checks() {
        let r = go("count --n 4 --r 2 --method compositions");
        assert_eq!(r.exit_code, 0);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["cross_check"]["method"], "monomial-filter");
        assert_eq!(v["agree"], true);
    }
}

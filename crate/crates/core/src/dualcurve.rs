//! Numeric check that the dual of the cubic `x0³ + x1³ + x2³ + γ x0x1x2`
//! lies in the four-parameter invariant sextic family.
//!
//! The dual curve is the closure of the tangent lines. We sample real points
//! of the cubic, take their normalized gradients as line coordinates
//! `(p0 : p1 : p2)`, and fit a null vector of the matrix whose rows are the
//! four orbit sextics evaluated at each line.
//!
//! This is the only module that uses floating point.

use nalgebra::{DMatrix, Matrix3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{rational_to_f64, PolyMatrix, Polynomial};

/// Refinement target for `|P(point)|`.
pub const POINT_TOL: f64 = 1e-12;
/// Default acceptance threshold for the fit residual.
pub const FIT_TOL: f64 = 1e-8;
/// Minimum number of samples for a fit.
pub const MIN_SAMPLES: usize = 8;

const MAX_NEWTON: usize = 60;
const MAX_ATTEMPTS: usize = 200;

/// Determinant of the Hessian of `p` bordered by `(0, p0, p1, p2)`, as a
/// polynomial in `(x0, x1, x2, p0, p1, p2)` = `x0 .. x5`.
pub fn bordered_hessian(p: &Polynomial) -> Result<Polynomial> {
    if p.n() != 3 {
        return Err(Error::AmbientMismatch { expected: 3, found: p.n() });
    }
    let grad = p.gradient();
    let mut rows = vec![vec![Polynomial::zero(6)]];
    rows[0].extend((0..3).map(|i| Polynomial::var(6, 3 + i)));
    for i in 0..3 {
        let mut row = vec![Polynomial::var(6, 3 + i)];
        for j in 0..3 {
            row.push(grad[i].partial_derivative(j)?.embed(6, 0)?);
        }
        rows.push(row);
    }
    PolyMatrix::from_rows(rows)?.det()
}

pub fn eval_f64(p: &Polynomial, point: &[f64]) -> Result<f64> {
    if point.len() != p.n() {
        return Err(Error::AmbientMismatch { expected: p.n(), found: point.len() });
    }
    Ok(p.terms()
        .map(|(m, c)| {
            m.exponents()
                .iter()
                .zip(point)
                .fold(rational_to_f64(c), |acc, (&e, x)| acc * x.powi(e as i32))
        })
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangentSample {
    /// Point of the cubic in the chart `x0² + x1² = 1`.
    pub point: [f64; 3],
    /// Unit gradient at `point`: the tangent line `Σ p_i x_i = 0`.
    pub line: [f64; 3],
}

fn cubic_value(gamma: f64, x: &[f64; 3]) -> f64 {
    x[0].powi(3) + x[1].powi(3) + x[2].powi(3) + gamma * x[0] * x[1] * x[2]
}

fn cubic_gradient(gamma: f64, x: &[f64; 3]) -> [f64; 3] {
    [
        3.0 * x[0] * x[0] + gamma * x[1] * x[2],
        3.0 * x[1] * x[1] + gamma * x[0] * x[2],
        3.0 * x[2] * x[2] + gamma * x[0] * x[1],
    ]
}

/// Real roots of `t³ + a2 t² + a1 t + a0` from the companion matrix.
fn real_cubic_roots(a2: f64, a1: f64, a0: f64) -> Vec<f64> {
    let companion = Matrix3::new(0.0, 0.0, -a0, 1.0, 0.0, -a1, 0.0, 1.0, -a2);
    let scale = 1.0 + a0.abs().max(a1.abs()).max(a2.abs());
    companion
        .complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() <= 1e-7 * scale)
        .map(|z| z.re)
        .collect()
}

fn try_sample(gamma: f64, rng: &mut ChaCha8Rng) -> Option<TangentSample> {
    let theta = rng.gen_range(0.0..std::f64::consts::PI);
    let (c, s) = (theta.cos(), theta.sin());
    // x2³ + γcs·x2 + (c³ + s³) = 0
    let roots = real_cubic_roots(0.0, gamma * c * s, c.powi(3) + s.powi(3));
    if roots.is_empty() {
        return None;
    }
    let mut x = [c, s, roots[rng.gen_range(0..roots.len())]];
    for _ in 0..MAX_NEWTON {
        let f = cubic_value(gamma, &x);
        if f.abs() < POINT_TOL {
            break;
        }
        let df = cubic_gradient(gamma, &x)[2];
        if df.abs() < 1e-8 {
            return None;
        }
        let step = f / df;
        // safeguard against runaway steps near a vertical tangent
        if step.abs() > 1.0 {
            return None;
        }
        x[2] -= step;
    }
    if cubic_value(gamma, &x).abs() >= POINT_TOL {
        return None;
    }
    let g = cubic_gradient(gamma, &x);
    let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
    if !(norm > 1e-9) {
        return None;
    }
    Some(TangentSample { point: x, line: [g[0] / norm, g[1] / norm, g[2] / norm] })
}

/// `count` tangent samples of the real cubic with parameter `gamma`.
pub fn sample_tangents(gamma: f64, count: usize, seed: u64) -> Result<Vec<TangentSample>> {
    if !gamma.is_finite() || (gamma.powi(3) + 27.0).abs() < 1e-9 {
        return Err(Error::SingularCurve(format!("gamma = {gamma} (gamma³ = -27)")));
    }
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        // per-sample stream derived from the master seed
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        let sample = (0..MAX_ATTEMPTS).find_map(|_| try_sample(gamma, &mut rng));
        match sample {
            Some(s) => out.push(s),
            None => {
                return Err(Error::RootFinding(format!(
                    "no refined point after {MAX_ATTEMPTS} attempts (sample {k})"
                )))
            }
        }
    }
    Ok(out)
}

/// Adds uniform noise in `[-noise, noise]` to every line coordinate and
/// renormalizes.
pub fn perturb_samples(samples: &[TangentSample], noise: f64, seed: u64) -> Vec<TangentSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    samples
        .iter()
        .map(|s| {
            let mut l = s.line;
            for v in &mut l {
                *v += rng.gen_range(-noise..=noise);
            }
            let norm = l.iter().map(|v| v * v).sum::<f64>().sqrt();
            TangentSample { point: s.point, line: [l[0] / norm, l[1] / norm, l[2] / norm] }
        })
        .collect()
}

/// The four orbit sextics `(Σp⁶/6, Σp_i³p_j³/3, Σp_i⁴p_jp_k, p0²p1²p2²/2)` at a line.
pub fn sextic_basis_values(p: &[f64; 3]) -> [f64; 4] {
    let [a, b, c] = *p;
    [
        (a.powi(6) + b.powi(6) + c.powi(6)) / 6.0,
        (a.powi(3) * b.powi(3) + a.powi(3) * c.powi(3) + b.powi(3) * c.powi(3)) / 3.0,
        a * b * c * (a.powi(3) + b.powi(3) + c.powi(3)),
        (a * b * c).powi(2) / 2.0,
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SexticFit {
    /// Unit-norm `(a, b, c, d)`; the first component of magnitude above
    /// `1e-9` is positive.
    pub coeffs: [f64; 4],
    /// `max |P∨(line)|` over the unit-norm sample lines.
    pub residual: f64,
    pub singular_values: [f64; 4],
}

pub fn fit_dual_sextic(samples: &[TangentSample]) -> Result<SexticFit> {
    if samples.len() < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_SAMPLES} samples, got {}",
            samples.len()
        )));
    }
    let rows: Vec<[f64; 4]> = samples.iter().map(|s| sextic_basis_values(&s.line)).collect();
    let a = DMatrix::from_fn(rows.len(), 4, |i, j| rows[i][j]);
    let svd = a.clone().svd(false, true);
    let v_t = svd.v_t.as_ref().expect("requested V^T");
    let sv = &svd.singular_values;
    let (min_idx, _) = sv
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .expect("four singular values");
    let largest = sv.max();
    let rank = sv.iter().filter(|&&s| s > 1e-10 * largest).count();
    if rank < 3 {
        return Err(Error::DegenerateSamples { rank });
    }
    let mut coeffs = [0.0; 4];
    for (j, c) in coeffs.iter_mut().enumerate() {
        *c = v_t[(min_idx, j)];
    }
    let norm = coeffs.iter().map(|v| v * v).sum::<f64>().sqrt();
    let lead = coeffs.iter().find(|v| v.abs() > 1e-9).copied().unwrap_or(1.0);
    let sign = if lead < 0.0 { -1.0 } else { 1.0 };
    for c in &mut coeffs {
        *c *= sign / norm;
    }
    let residual = rows
        .iter()
        .map(|r| r.iter().zip(&coeffs).map(|(x, c)| x * c).sum::<f64>().abs())
        .fold(0.0, f64::max);
    let mut singular_values = [0.0; 4];
    let mut sorted: Vec<f64> = sv.iter().copied().collect();
    sorted.sort_by(|x, y| y.total_cmp(x));
    singular_values.copy_from_slice(&sorted);
    Ok(SexticFit { coeffs, residual, singular_values })
}

/// Rescales `coeffs` so the largest magnitude is 1 and snaps each entry to a
/// fraction with denominator at most `max_den`, if every entry is within
/// `tol` of one.
pub fn rationalize(coeffs: &[f64; 4], max_den: i64, tol: f64) -> Option<[crate::polyring::Rational; 4]> {
    let top = coeffs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if top == 0.0 {
        return None;
    }
    let mut out: [crate::polyring::Rational; 4] = Default::default();
    for (o, &c) in out.iter_mut().zip(coeffs) {
        let x = c / top;
        let (num, den) = (1..=max_den)
            .map(|d| ((x * d as f64).round() as i64, d))
            .find(|&(n, d)| (x - n as f64 / d as f64).abs() < tol)?;
        *o = crate::polyring::ratio(num, den);
    }
    Some(out)
}

//! The finite Heisenberg group acting on `Q[x_0, ..., x_{n-1}]`.
//!
//! `σ` shifts indices `x_i -> x_{i+1 mod n}`; `τ` scales `x_i` by `ε^i` for a
//! primitive n-th root of unity `ε`. Since `τ` acts on a monomial `x^α` by
//! `ε^{Σ i·α_i}`, every `τ`-condition reduces to a congruence on the
//! τ-degree `Σ i·α_i mod n` and no root of unity is ever materialized.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jps::BracketTable;
use crate::polyring::{Monomial, Polynomial};

/// τ-degree of a polynomial: a residue mod n, or `Bottom` for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TauDegree {
    Bottom,
    Value(usize),
}

impl fmt::Display for TauDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauDegree::Bottom => write!(f, "-inf"),
            TauDegree::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Applies `σ` to every monomial: the exponent of `x_i` moves to `x_{i+1}`.
pub fn sigma_poly(p: &Polynomial) -> Polynomial {
    p.map_monomials(Monomial::rotate)
}

/// `σ^k`.
pub fn sigma_pow(p: &Polynomial, k: usize) -> Polynomial {
    let n = p.n().max(1);
    (0..k % n).fold(p.clone(), |acc, _| sigma_poly(&acc))
}

/// `Σ i·α_i mod n`.
pub fn monomial_tau(m: &Monomial) -> usize {
    let n = m.n() as u64;
    let raw: u64 = m
        .exponents()
        .iter()
        .enumerate()
        .map(|(i, &a)| i as u64 * a as u64)
        .sum();
    (raw % n) as usize
}

/// Highest τ-degree among the monomials, with representatives `0 < 1 < ... < n-1`.
pub fn tau_degree(p: &Polynomial) -> TauDegree {
    p.monomials()
        .map(|m| TauDegree::Value(monomial_tau(m)))
        .max()
        .unwrap_or(TauDegree::Bottom)
}

/// True iff all monomials share one τ-degree. Vacuously true for zero.
pub fn is_tau_homogeneous(p: &Polynomial) -> bool {
    let mut it = p.monomials().map(monomial_tau);
    match it.next() {
        None => true,
        Some(t) => it.all(|u| u == t),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    /// `{x_{i+1}, x_{j+1}} != σ·{x_i, x_j}`; witness is the difference.
    SigmaEquivariance,
    /// a monomial of `{x_i, x_j}` has τ-degree `!= i + j mod n`; witness is that term.
    TauCongruence,
    /// a monomial of `{x_i, x_j}` has total degree `!= 2 mod n`; witness is that term.
    DegreeSignature,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceFailure {
    pub i: usize,
    pub j: usize,
    pub reason: FailureReason,
    pub witness: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub sigma_ok: bool,
    pub tau_ok: bool,
    pub degree_signature_ok: bool,
    pub failures: Vec<InvarianceFailure>,
}

impl InvarianceReport {
    pub fn is_invariant(&self) -> bool {
        self.sigma_ok && self.tau_ok && self.degree_signature_ok
    }
}

/// Checks `{x_{i+1}, x_{j+1}} = σ·{x_i, x_j}` and `τ·{x_i, x_j} = ε^{i+j}{x_i, x_j}`
/// for all pairs, plus the degree signature `2 + sn`.
pub fn check_h_invariance(t: &BracketTable) -> InvarianceReport {
    let n = t.n();
    let mut failures = Vec::new();
    for (i, j, entry) in t.pairs() {
        let shifted = t.get((i + 1) % n, (j + 1) % n);
        let diff = &shifted - &sigma_poly(entry);
        if !diff.is_zero() {
            failures.push(InvarianceFailure {
                i,
                j,
                reason: FailureReason::SigmaEquivariance,
                witness: diff,
            });
        }
        for (m, c) in entry.terms() {
            if monomial_tau(m) != (i + j) % n {
                failures.push(InvarianceFailure {
                    i,
                    j,
                    reason: FailureReason::TauCongruence,
                    witness: Polynomial::monomial(m.clone(), c.clone()),
                });
            }
        }
    }
    for (i, j, m, c) in degree_signature_violations(t) {
        failures.push(InvarianceFailure {
            i,
            j,
            reason: FailureReason::DegreeSignature,
            witness: Polynomial::monomial(m, c),
        });
    }
    let has = |r| failures.iter().any(|f| f.reason == r);
    InvarianceReport {
        sigma_ok: !has(FailureReason::SigmaEquivariance),
        tau_ok: !has(FailureReason::TauCongruence),
        degree_signature_ok: !has(FailureReason::DegreeSignature),
        failures,
    }
}

fn degree_signature_violations(
    t: &BracketTable,
) -> Vec<(usize, usize, Monomial, crate::polyring::Rational)> {
    let n = t.n() as u32;
    let mut out = Vec::new();
    for (i, j, entry) in t.pairs() {
        for (m, c) in entry.terms() {
            if m.degree() % n != 2 % n {
                out.push((i, j, m.clone(), c.clone()));
            }
        }
    }
    out
}

/// Every monomial of every entry has total degree `≡ 2 (mod n)`.
pub fn check_degree_signature(t: &BracketTable) -> bool {
    degree_signature_violations(t).is_empty()
}

/// Positive integer weights `(w_0, ..., w_{n-1})` of a torus action
/// `λ·x_i = λ^{w_i} x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "weights must be positive, got {weights:?}"
            )));
        }
        Ok(WeightVector(weights))
    }

    pub fn weights(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).sum()
    }

    pub fn degree_of(&self, m: &Monomial) -> u64 {
        m.exponents()
            .iter()
            .zip(&self.0)
            .map(|(&a, &w)| a as u64 * w as u64)
            .sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    Degree(u64),
}

/// Weighted degree if `p` is weighted-homogeneous under `w`, else `None`.
///
/// Panics if `w` does not have one weight per variable.
pub fn is_weighted_homogeneous(p: &Polynomial, w: &WeightVector) -> Option<WeightedDegree> {
    assert_eq!(w.len(), p.n(), "one weight per variable");
    let mut degs = p.monomials().map(|m| w.degree_of(m));
    match degs.next() {
        None => Some(WeightedDegree::Any),
        Some(d) => degs.all(|e| e == d).then_some(WeightedDegree::Degree(d)),
    }
}

/// The bracket is torus-invariant: every nonzero `{x_i, x_j}` is
/// weighted-homogeneous of weighted degree `w_i + w_j`.
pub fn check_toric_invariance(t: &BracketTable, w: &WeightVector) -> bool {
    t.pairs().all(|(i, j, entry)| match is_weighted_homogeneous(entry, w) {
        Some(WeightedDegree::Any) => true,
        Some(WeightedDegree::Degree(d)) => d == (w.weights()[i] + w.weights()[j]) as u64,
        None => false,
    })
}

/// `σ·∂p/∂x_i == ∂(σ·p)/∂x_{i+1}`.
pub fn sigma_derivative_commutation(p: &Polynomial, i: usize) -> Result<bool> {
    let n = p.n();
    let lhs = sigma_poly(&p.partial_derivative(i)?);
    let rhs = sigma_poly(p).partial_derivative((i + 1) % n)?;
    Ok(lhs == rhs)
}

//! Lattice-point counting for the invariant Casimir spaces.
//!
//! In three variables the admissible exponents of degree `3r` are the integer
//! points of the triangle `T_r` with vertices `(0, r)`, `(r, 2r)`, `(2r, 0)`.
//! In `n` variables they correspond to compositions `(s_0, ..., s_{n-1})` of
//! `N = n(n-1)r/2 - l` (with `l = n/2` for even `n`, `0` for odd `n`) subject
//! to the cyclic difference constraints `s_{n-i-1} - s_{n-i} + r >= 0`, via
//! `α_i = s_{n-i-1} - s_{n-i} + r`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::heisenberg::monomial_tau;
use crate::polyring::{Monomial, Rational};

/// Largest `n·r` accepted by the direct monomial filter.
pub const MAX_FILTER_DEGREE: u64 = 24;

/// Largest number of weak compositions the generic counter will scan.
pub const MAX_SCAN: u128 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<u64>);

impl LatticePoint {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

fn require_r(r: u64) -> Result<()> {
    if r < 1 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    Ok(())
}

fn require_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// three variables

/// `(x, y)` lies in `T_r`.
pub fn triangle_contains(r: u64, x: i64, y: i64) -> bool {
    let r = r as i64;
    x + y <= 3 * r && 2 * x + y <= 4 * r && x + 2 * y >= 2 * r && -x + y <= r
}

/// All integer points of `T_r`, sorted lexicographically, by scanning the
/// bounding box `[0, 3r]²`.
pub fn triangle_lattice_points(r: u64) -> Result<Vec<LatticePoint>> {
    require_r(r)?;
    let b = 3 * r as i64;
    Ok((0..=b)
        .cartesian_product(0..=b)
        .filter(|&(x, y)| triangle_contains(r, x, y))
        .map(|(x, y)| LatticePoint(vec![x as u64, y as u64]))
        .collect())
}

/// Exponents `(4r-2s'-s'', -2r+s'+2s'', r+s'-s'')` of the triangle point `(s', s'')`.
pub fn triangle_to_exponents(r: u64, x: u64, y: u64) -> Result<Monomial> {
    let (r, x, y) = (r as i64, x as i64, y as i64);
    let a = [4 * r - 2 * x - y, -2 * r + x + 2 * y, r + x - y];
    if a.iter().any(|&v| v < 0) {
        return Err(Error::InvalidArgument(format!("({x}, {y}) is outside T_{r}")));
    }
    Ok(Monomial::new(a.iter().map(|&v| v as u32).collect()))
}

/// Points of `T_r` with `0 <= x <= r`.
pub fn card_s1(r: u64) -> Result<u64> {
    require_r(r)?;
    Ok(if r % 2 == 0 { (3 * r * r + 6 * r + 4) / 4 } else { (3 * r * r + 6 * r + 3) / 4 })
}

/// Points of `T_r` with `r < x <= 2r`.
pub fn card_s2(r: u64) -> Result<u64> {
    require_r(r)?;
    Ok(if r % 2 == 0 { 3 * r * r / 4 } else { (3 * r * r + 1) / 4 })
}

/// Closed-form size of the column `x = alpha` of `T_r`.
pub fn triangle_column_count(r: u64, alpha: u64) -> u64 {
    if alpha <= r {
        alpha + 1 + alpha / 2
    } else if alpha <= 2 * r {
        3 * r + 1 + alpha / 2 - 2 * alpha
    } else {
        0
    }
}

/// Dimension of the degree-`3(1+s)` piece: `(3/2)s² + (9/2)s + 4`, and 1 at `s = -1`.
pub fn dim_h3(s: i64) -> Result<u64> {
    match s {
        s if s < -1 => Err(Error::InvalidArgument(format!("s must be >= -1, got {s}"))),
        -1 => Ok(1),
        s => Ok(((3 * s * s + 9 * s + 8) / 2) as u64),
    }
}

/// Coefficients of `t^0 .. t^max_degree` of `(1 + t³ + t⁶) / (1 - t³)³`, by
/// power-series division.
pub fn poincare_series(max_degree: usize) -> Vec<i128> {
    let num = |d: usize| -> i128 { i128::from(d == 0 || d == 3 || d == 6) };
    // (1 - t³)³ = 1 - 3t³ + 3t⁶ - t⁹
    let den: [(usize, i128); 3] = [(3, -3), (6, 3), (9, -1)];
    let mut c = vec![0i128; max_degree + 1];
    for d in 0..=max_degree {
        let mut v = num(d);
        for &(k, a) in &den {
            if d >= k {
                v -= a * c[d - k];
            }
        }
        c[d] = v;
    }
    c
}

/// Coefficients of `t^{3r}` for `r = 0 ..= max_r`.
pub fn poincare_coeffs(max_r: usize) -> Vec<u64> {
    poincare_series(3 * max_r)
        .into_iter()
        .step_by(3)
        .map(|v| v as u64)
        .collect()
}

pub const POINCARE_SERIES: &str = "(1+t^3+t^6)/(1-t^3)^3";

// ---------------------------------------------------------------------------
// n variables

/// `n/2` for even `n`, `0` for odd `n`.
pub fn l_value(n: usize) -> u64 {
    if n % 2 == 0 {
        n as u64 / 2
    } else {
        0
    }
}

/// Composition weight `N = n(n-1)r/2 - l`.
pub fn weight_target(n: usize, r: u64) -> u64 {
    let n64 = n as u64;
    n64 * (n64 - 1) / 2 * r - l_value(n)
}

/// Rows `(c_{-1}, c_0, ..., c_{n-1})` meaning `c_{-1} + Σ c_j λ_j >= 0`,
/// and an optional weight equation `Σ λ_j = N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintSystem {
    n: usize,
    rows: Vec<Vec<i64>>,
    weight: Option<u64>,
}

impl ConstraintSystem {
    pub fn new(n: usize, rows: Vec<Vec<i64>>, weight: Option<u64>) -> Result<Self> {
        if let Some(row) = rows.iter().find(|r| r.len() != n + 1) {
            return Err(Error::InvalidArgument(format!(
                "constraint row of length {} in {n} variables",
                row.len()
            )));
        }
        Ok(ConstraintSystem { n, rows, weight })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn weight(&self) -> Option<u64> {
        self.weight
    }

    pub fn row_value(&self, row: usize, point: &[i64]) -> i64 {
        let c = &self.rows[row];
        c[0] + c[1..].iter().zip(point).map(|(a, b)| a * b).sum::<i64>()
    }

    /// Index of the first violated inequality.
    pub fn first_violation(&self, point: &[i64]) -> Option<usize> {
        (0..self.rows.len()).find(|&k| self.row_value(k, point) < 0)
    }

    pub fn satisfies(&self, point: &[i64]) -> bool {
        self.first_violation(point).is_none()
    }
}

/// The cyclic system `c_i : s_{n-i-1} - s_{n-i} + r >= 0` (indices mod n), in
/// row order `i = 0 .. n-1`, with weight `N = n(n-1)r/2 - l`.
pub fn constraint_system(n: usize, r: u64) -> Result<ConstraintSystem> {
    require_n(n)?;
    require_r(r)?;
    let rows = (0..n)
        .map(|i| {
            let mut row = vec![0i64; n + 1];
            row[0] = r as i64;
            row[1 + (n - i - 1)] += 1;
            row[1 + (n - i) % n] -= 1;
            row
        })
        .collect();
    ConstraintSystem::new(n, rows, Some(weight_target(n, r)))
}

/// Eliminated form: `s_{n-1} = N - (s_0 + ... + s_{n-2})` substituted into the
/// cyclic system, plus the row `s_{n-1} >= 0`. Variables `s_0 .. s_{n-2}`.
pub fn eliminated_system(n: usize, r: u64) -> Result<ConstraintSystem> {
    let full = constraint_system(n, r)?;
    let big_n = weight_target(n, r) as i64;
    let m = n - 1;
    let mut rows = Vec::with_capacity(n + 1);
    let mut top = vec![-1i64; m + 1];
    top[0] = big_n;
    rows.push(top);
    for row in full.rows() {
        let last = row[n];
        let mut e = vec![0i64; m + 1];
        e[0] = row[0] + last * big_n;
        for j in 0..m {
            e[1 + j] = row[1 + j] - last;
        }
        rows.push(e);
    }
    ConstraintSystem::new(m, rows, None)
}

/// All compositions satisfying [`constraint_system`], by a search that uses
/// `s_{j+1} <= s_j + r` directly. Lexicographic order.
pub fn enumerate_compositions(n: usize, r: u64) -> Result<Vec<LatticePoint>> {
    require_n(n)?;
    require_r(r)?;
    let total = weight_target(n, r);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, r: u64, remaining: u64, cur: &mut Vec<u64>, out: &mut Vec<LatticePoint>) {
        if cur.len() == n - 1 {
            let last = remaining;
            if last <= cur[n - 2] + r && cur[0] <= last + r {
                let mut p = cur.clone();
                p.push(last);
                out.push(LatticePoint(p));
            }
            return;
        }
        let hi = match cur.last() {
            Some(&prev) => remaining.min(prev + r),
            None => remaining,
        };
        for v in 0..=hi {
            cur.push(v);
            go(n, r, remaining - v, cur, out);
            cur.pop();
        }
    }
    go(n, r, total, &mut cur, &mut out);
    Ok(out)
}

/// `α_i = s_{n-i-1} - s_{n-i} + r`, indices mod n.
pub fn compositions_to_exponents(n: usize, r: u64, s: &LatticePoint) -> Result<Monomial> {
    if s.0.len() != n {
        return Err(Error::AmbientMismatch { expected: n, found: s.0.len() });
    }
    let mut a = Vec::with_capacity(n);
    for i in 0..n {
        let v = s.0[n - i - 1] as i64 - s.0[(n - i) % n] as i64 + r as i64;
        if v < 0 {
            return Err(Error::ConstraintViolation { row: i });
        }
        a.push(v as u32);
    }
    Ok(Monomial::new(a))
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Calls `f` on every weak composition of `total` into `parts` parts.
fn for_each_weak_composition(parts: usize, total: u64, mut f: impl FnMut(&[u64])) {
    let mut cur = vec![0u64; parts];
    fn go(k: usize, remaining: u64, cur: &mut [u64], f: &mut dyn FnMut(&[u64])) {
        if k + 1 == cur.len() {
            cur[k] = remaining;
            f(cur);
            return;
        }
        for v in (0..=remaining).rev() {
            cur[k] = v;
            go(k + 1, remaining - v, cur, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&cur);
        }
        return;
    }
    go(0, total, &mut cur, &mut f);
}

/// Brute force: every exponent vector of degree `nr` whose cyclic rows
/// `Σ_i ((i + k) mod n)·α_i` are all `≡ l (mod n)`. Sorted ascending.
pub fn monomial_filter_oracle(n: usize, r: u64) -> Result<Vec<Monomial>> {
    require_n(n)?;
    require_r(r)?;
    let degree = n as u64 * r;
    if degree > MAX_FILTER_DEGREE {
        return Err(Error::SizeGuard(format!(
            "monomial filter limited to degree {MAX_FILTER_DEGREE}, asked for {degree}"
        )));
    }
    let l = l_value(n);
    let mut out = Vec::new();
    for_each_weak_composition(n, degree, |a| {
        let ok = (0..n).all(|k| {
            let row: u64 = a
                .iter()
                .enumerate()
                .map(|(i, &e)| ((i + k) % n) as u64 * e)
                .sum();
            row % n as u64 == l
        });
        if ok {
            out.push(Monomial::new(a.iter().map(|&e| e as u32).collect()));
        }
    });
    out.sort();
    debug_assert!(out.iter().all(|m| monomial_tau(m) as u64 == l));
    Ok(out)
}

/// Number of nonnegative solutions of weight `weight` satisfying every row
/// of `c`: the coefficient of `q^weight` in `F_C(q, ..., q)`.
pub fn generating_coefficient(c: &ConstraintSystem, weight: u64) -> Result<u64> {
    let n = c.n();
    let size = binomial(weight as u128 + n as u128 - 1, n.saturating_sub(1) as u128);
    if size > MAX_SCAN {
        return Err(Error::SizeGuard(format!(
            "{size} compositions of {weight} into {n} parts exceeds the scan limit"
        )));
    }
    let mut count = 0u64;
    let mut point = vec![0i64; n];
    for_each_weak_composition(n, weight, |s| {
        for (p, &v) in point.iter_mut().zip(s) {
            *p = v as i64;
        }
        if c.satisfies(&point) {
            count += 1;
        }
    });
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCheck {
    pub ok: bool,
    /// Coordinate order `q_k = p[perm[k]]` under which every point is a vertex.
    pub permutation: Option<Vec<usize>>,
}

/// Checks that every point satisfies the eliminated system for `(n, r)`
/// with at least `n-1` active inequalities, trying every reordering of the
/// coordinates (identity first).
pub fn check_polytope_vertices(n: usize, r: u64, vertices: &[Vec<Rational>]) -> Result<VertexCheck> {
    let sys = eliminated_system(n, r)?;
    let m = n - 1;
    if let Some(v) = vertices.iter().find(|v| v.len() != m) {
        return Err(Error::AmbientMismatch { expected: m, found: v.len() });
    }
    let value = |row: &[i64], q: &[Rational]| -> Rational {
        q.iter()
            .zip(&row[1..])
            .fold(Rational::from_integer(row[0].into()), |acc, (x, &c)| {
                acc + x * Rational::from_integer(c.into())
            })
    };
    let is_vertex = |q: &[Rational]| {
        let vals: Vec<Rational> = sys.rows().iter().map(|row| value(row, q)).collect();
        vals.iter().all(|v| !v.is_negative()) && vals.iter().filter(|v| v.is_zero()).count() >= m
    };
    for perm in (0..m).permutations(m) {
        let all = vertices.iter().all(|p| {
            let q: Vec<Rational> = perm.iter().map(|&k| p[k].clone()).collect();
            is_vertex(&q)
        });
        if all {
            return Ok(VertexCheck { ok: true, permutation: Some(perm) });
        }
    }
    Ok(VertexCheck { ok: false, permutation: None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    ClosedForm,
    TriangleBrute,
    Compositions,
    MonomialFilter,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::ClosedForm => "closed-form",
            CountMethod::TriangleBrute => "triangle",
            CountMethod::Compositions => "compositions",
            CountMethod::MonomialFilter => "monomial-filter",
        })
    }
}

impl FromStr for CountMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-form" => Ok(CountMethod::ClosedForm),
            "triangle" | "triangle-brute" => Ok(CountMethod::TriangleBrute),
            "compositions" => Ok(CountMethod::Compositions),
            "monomial-filter" => Ok(CountMethod::MonomialFilter),
            other => Err(Error::InvalidArgument(format!("unknown count method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub r: u64,
    pub method: CountMethod,
    pub count: u64,
}

/// Dimension of the degree-`nr` piece by the chosen route. The closed form
/// and the triangle exist only for `n = 3`.
pub fn count(n: usize, r: u64, method: CountMethod) -> Result<CountReport> {
    require_n(n)?;
    require_r(r)?;
    let three_only = |m: CountMethod| {
        if n != 3 {
            Err(Error::InvalidArgument(format!("method {m} requires n = 3")))
        } else {
            Ok(())
        }
    };
    let count = match method {
        CountMethod::ClosedForm => {
            three_only(method)?;
            card_s1(r)? + card_s2(r)?
        }
        CountMethod::TriangleBrute => {
            three_only(method)?;
            triangle_lattice_points(r)?.len() as u64
        }
        CountMethod::Compositions => enumerate_compositions(n, r)?.len() as u64,
        CountMethod::MonomialFilter => monomial_filter_oracle(n, r)?.len() as u64,
    };
    Ok(CountReport { n, r, method, count })
}

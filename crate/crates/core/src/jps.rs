//! Jacobian Poisson structures.
//!
//! Given Casimirs `Q_1, ..., Q_{n-2}`, the bracket of `f` and `g` is the
//! determinant of the matrix with rows `∇f, ∇g, ∇Q_1, ..., ∇Q_{n-2}` (in this
//! order, variables `x_0 .. x_{n-1}` as columns).

use crate::error::{Error, Result};
use crate::polyring::{parse_poly, PolyMatrix, Polynomial, Rational};

/// Ordered Casimir set; the order fixes the sign of the bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirSet {
    n: usize,
    casimirs: Vec<Polynomial>,
}

impl CasimirSet {
    pub fn new(n: usize, casimirs: Vec<Polynomial>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("need at least 3 variables, got {n}")));
        }
        if casimirs.len() != n - 2 {
            return Err(Error::InvalidArgument(format!(
                "{n} variables need {} Casimirs, got {}",
                n - 2,
                casimirs.len()
            )));
        }
        if let Some(q) = casimirs.iter().find(|q| q.n() != n) {
            return Err(Error::AmbientMismatch { expected: n, found: q.n() });
        }
        Ok(CasimirSet { n, casimirs })
    }

    /// Reads the Casimir file format: a first line `n=<int>` followed by
    /// `n-2` polynomial lines. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty Casimir file".into()))?;
        let n: usize = header
            .strip_prefix("n=")
            .or_else(|| header.strip_prefix("n ="))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("bad header line {header:?}")))?;
        let casimirs = lines.map(|l| parse_poly(l, n)).collect::<Result<Vec<_>>>()?;
        Self::new(n, casimirs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn casimirs(&self) -> &[Polynomial] {
        &self.casimirs
    }

    /// `Q_1 · Q_2 ⋯ Q_{n-2}`.
    pub fn product(&self) -> Polynomial {
        self.casimirs
            .iter()
            .fold(Polynomial::one(self.n), |acc, q| &acc * q)
    }
}

impl std::fmt::Display for CasimirSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for q in &self.casimirs {
            writeln!(f, "{q}")?;
        }
        Ok(())
    }
}

/// Antisymmetric table of generator brackets `{x_i, x_j}`; only `i < j` is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    n: usize,
    upper: Vec<Polynomial>,
}

impl BracketTable {
    /// Builds the table from `f(i, j)` for `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let e = f(i, j);
                assert_eq!(e.n(), n, "bracket entries share the ambient ring");
                upper.push(e);
            }
        }
        BracketTable { n, upper }
    }

    pub fn try_from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<Polynomial>,
    ) -> Result<Self> {
        let mut upper = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                upper.push(f(i, j)?);
            }
        }
        Ok(BracketTable { n, upper })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// Stored entry for `i < j`.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.upper[self.index(i, j)]
    }

    /// `{x_i, x_j}` for any pair, using antisymmetry.
    pub fn get(&self, i: usize, j: usize) -> Polynomial {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.entry(i, j).clone(),
            Greater => -self.entry(j, i),
            Equal => Polynomial::zero(self.n),
        }
    }

    /// `(i, j, {x_i, x_j})` for `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(&self.upper)
            .map(|((i, j), e)| (i, j, e))
    }

    pub fn scaled(&self, c: &Rational) -> BracketTable {
        BracketTable {
            n: self.n,
            upper: self.upper.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.upper.iter().all(Polynomial::is_zero)
    }

    /// `{x_i, q}` by the biderivation rule `Σ_m ∂q/∂x_m · {x_i, x_m}`.
    pub fn bracket_with_generator(&self, i: usize, q: &Polynomial) -> Result<Polynomial> {
        if q.n() != self.n {
            return Err(Error::AmbientMismatch { expected: self.n, found: q.n() });
        }
        let mut acc = Polynomial::zero(self.n);
        for m in 0..self.n {
            if m == i {
                continue;
            }
            let d = q.partial_derivative(m)?;
            if d.is_zero() {
                continue;
            }
            acc = &acc + &(&d * &self.get(i, m));
        }
        Ok(acc)
    }
}

/// `{f, g}` for the Jacobian structure of `c`.
pub fn jacobian_bracket(c: &CasimirSet, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    for p in [f, g] {
        if p.n() != c.n() {
            return Err(Error::AmbientMismatch { expected: c.n(), found: p.n() });
        }
    }
    let rows: Vec<Vec<Polynomial>> = [f, g]
        .into_iter()
        .chain(c.casimirs())
        .map(Polynomial::gradient)
        .collect();
    PolyMatrix::from_rows(rows)?.det()
}

pub fn bracket_table(c: &CasimirSet) -> Result<BracketTable> {
    let n = c.n();
    BracketTable::try_from_fn(n, |i, j| {
        jacobian_bracket(c, &Polynomial::var(n, i), &Polynomial::var(n, j))
    })
}

/// The three-variable structure `{x_i, x_j} = ∂P/∂x_k` for cyclic `(i, j, k)`.
pub fn jps3_table(p: &Polynomial) -> Result<BracketTable> {
    if p.n() != 3 {
        return Err(Error::AmbientMismatch { expected: 3, found: p.n() });
    }
    let d = p.gradient();
    Ok(BracketTable::from_fn(3, |i, j| match (i, j) {
        (0, 1) => d[2].clone(),
        (1, 2) => d[0].clone(),
        (0, 2) => -&d[1],
        _ => unreachable!(),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiOutcome {
    pub ok: bool,
    /// First failing triple `(i, j, k)` and its nonzero cyclic sum.
    pub witness: Option<(usize, usize, usize, Polynomial)>,
}

/// Jacobi identity on every generator triple `i < j < k`; enough because the
/// bracket is a biderivation.
pub fn check_jacobi(t: &BracketTable) -> JacobiOutcome {
    let n = t.n();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let sum = jacobiator(t, i, j, k);
                if !sum.is_zero() {
                    return JacobiOutcome { ok: false, witness: Some((i, j, k, sum)) };
                }
            }
        }
    }
    JacobiOutcome { ok: true, witness: None }
}

/// `{x_i, {x_j, x_k}} + {x_j, {x_k, x_i}} + {x_k, {x_i, x_j}}`.
pub fn jacobiator(t: &BracketTable, i: usize, j: usize, k: usize) -> Polynomial {
    let term = |a: usize, b: usize, c: usize| {
        t.bracket_with_generator(a, &t.get(b, c))
            .expect("table entries share the ambient ring")
    };
    &(&term(i, j, k) + &term(j, k, i)) + &term(k, i, j)
}

/// Every Casimir brackets to zero with every generator:
/// `{Q_m, x_j} = Σ_i ∂Q_m/∂x_i · {x_i, x_j} = 0`.
pub fn check_casimir(c: &CasimirSet, t: &BracketTable) -> bool {
    if c.n() != t.n() {
        return false;
    }
    let n = c.n();
    c.casimirs().iter().all(|q| {
        let grad = q.gradient();
        (0..n).all(|j| {
            let mut acc = Polynomial::zero(n);
            for (i, d) in grad.iter().enumerate() {
                if !d.is_zero() && i != j {
                    acc = &acc + &(d * &t.get(i, j));
                }
            }
            acc.is_zero()
        })
    })
}

/// `{x_i, x_j}_{PQ} = P {x_i, x_j}_Q + Q {x_i, x_j}_P` for the 3-variable structures.
pub fn product_rule_check(p: &Polynomial, q: &Polynomial) -> Result<bool> {
    let tp = jps3_table(p)?;
    let tq = jps3_table(q)?;
    let tpq = jps3_table(&(p * q))?;
    let ok = tpq
        .pairs()
        .all(|(i, j, e)| *e == &(p * tq.entry(i, j)) + &(q * tp.entry(i, j)));
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_poly(s, n).unwrap()
    }

    fn sklyanin(k: &str) -> CasimirSet {
        CasimirSet::new(
            4,
            vec![
                p(&format!("1/2*x0^2 + 1/2*x2^2 + {k}*x1*x3"), 4),
                p(&format!("1/2*x1^2 + 1/2*x3^2 + {k}*x0*x2"), 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sklyanin_generator_bracket() {
        let c = sklyanin("1");
        let b = jacobian_bracket(&c, &Polynomial::var(4, 0), &Polynomial::var(4, 1)).unwrap();
        assert_eq!(b, p("x2*x3 - x0*x1", 4));
    }

    #[test]
    fn bracket_of_equal_arguments_vanishes() {
        let c = sklyanin("3");
        let f = p("x0*x1 + x3^2", 4);
        assert!(jacobian_bracket(&c, &f, &f).unwrap().is_zero());
    }

    #[test]
    fn identity_jacobian() {
        let c = CasimirSet::new(3, vec![p("x2", 3)]).unwrap();
        let b = jacobian_bracket(&c, &p("x0", 3), &p("x1", 3)).unwrap();
        assert_eq!(b, Polynomial::one(3));
    }

    #[test]
    fn ambient_mismatch() {
        let c = CasimirSet::new(3, vec![p("x2", 3)]).unwrap();
        assert!(jacobian_bracket(&c, &p("x0", 4), &p("x1", 3)).is_err());
        assert!(CasimirSet::new(4, vec![p("x0", 4)]).is_err());
        assert!(CasimirSet::new(2, vec![]).is_err());
        assert!(jps3_table(&p("x0", 4)).is_err());
    }

    #[test]
    fn constant_casimir_gives_zero_table() {
        let c = CasimirSet::new(3, vec![p("5", 3)]).unwrap();
        assert!(bracket_table(&c).unwrap().is_zero());
        assert!(jps3_table(&p("5", 3)).unwrap().is_zero());
    }

    #[test]
    fn jps3_matches_general_construction() {
        let cubic = p("x0^3 + x1^3 + x2^3 + 7*x0*x1*x2 - x0*x2^2", 3);
        let c = CasimirSet::new(3, vec![cubic.clone()]).unwrap();
        assert_eq!(jps3_table(&cubic).unwrap(), bracket_table(&c).unwrap());
    }

    #[test]
    fn ast_bracket_display() {
        let t = jps3_table(&p("x0^3 + x1^3 + x2^3 + 2*x0*x1*x2", 3)).unwrap();
        assert_eq!(t.get(0, 1), p("3*x2^2 + 2*x0*x1", 3));
        assert_eq!(t.get(1, 2), p("3*x0^2 + 2*x1*x2", 3));
        assert_eq!(t.get(2, 0), p("3*x1^2 + 2*x0*x2", 3));
    }

    #[test]
    fn jacobi_holds_for_jacobian_structures() {
        let ast = jps3_table(&p("x0^3 + x1^3 + x2^3 + 7*x0*x1*x2", 3)).unwrap();
        assert!(check_jacobi(&ast).ok);
        let sk = bracket_table(&sklyanin("2")).unwrap();
        assert!(check_jacobi(&sk).ok);
    }

    #[test]
    fn jacobi_fails_on_hand_built_table() {
        let t = BracketTable::from_fn(3, |i, j| match (i, j) {
            (0, 1) => p("x0", 3),
            (1, 2) => p("x1", 3),
            _ => Polynomial::zero(3),
        });
        let out = check_jacobi(&t);
        assert!(!out.ok);
        let (i, j, k, w) = out.witness.unwrap();
        assert_eq!((i, j, k), (0, 1, 2));
        assert_eq!(w, p("x0", 3));
    }

    #[test]
    fn casimirs_are_central() {
        let c = sklyanin("3");
        let t = bracket_table(&c).unwrap();
        assert!(check_casimir(&c, &t));
        let ast = p("x0^3 + x1^3 + x2^3 + x0*x1*x2", 3);
        let c3 = CasimirSet::new(3, vec![ast.clone()]).unwrap();
        assert!(check_casimir(&c3, &jps3_table(&ast).unwrap()));
    }

    #[test]
    fn perturbed_table_breaks_casimir_property() {
        let c = sklyanin("1");
        let t = bracket_table(&c).unwrap();
        let perturbed = BracketTable::from_fn(4, |i, j| {
            let e = t.entry(i, j).clone();
            if (i, j) == (0, 1) {
                &e + &p("x0", 4)
            } else {
                e
            }
        });
        assert!(!check_casimir(&c, &perturbed));
    }

    #[test]
    fn biderivation_matches_determinant_route() {
        let c = sklyanin("2");
        let t = bracket_table(&c).unwrap();
        let q = p("x0*x1^2 - 3*x2*x3 + x1", 4);
        for i in 0..4 {
            let via_det = jacobian_bracket(&c, &Polynomial::var(4, i), &q).unwrap();
            assert_eq!(t.bracket_with_generator(i, &q).unwrap(), via_det);
        }
    }

    #[test]
    fn product_rule_examples() {
        let ast = p("x0^3 + x1^3 + x2^3 + x0*x1*x2", 3);
        assert!(product_rule_check(&ast, &p("x0*x1*x2", 3)).unwrap());
        assert!(product_rule_check(&ast, &Polynomial::one(3)).unwrap());
    }

    #[test]
    fn casimir_file_round_trip() {
        let c = sklyanin("1/3");
        let parsed = CasimirSet::parse(&c.to_string()).unwrap();
        assert_eq!(parsed, c);
        assert!(CasimirSet::parse("n=4\nx0\n").is_err());
        assert!(CasimirSet::parse("four\nx0\nx1\n").is_err());
        assert!(CasimirSet::parse("").is_err());
        let with_comments = CasimirSet::parse("# cubic\nn=3\n\nx0^3 + x1^3\n").unwrap();
        assert_eq!(with_comments.n(), 3);
    }

    #[test]
    fn table_indexing() {
        let t = BracketTable::from_fn(5, |i, j| p(&format!("{}*x0", 10 * i + j), 5));
        for (i, j, e) in t.pairs() {
            assert_eq!(*e, p(&format!("{}*x0", 10 * i + j), 5));
            assert_eq!(t.get(j, i), -e);
        }
        assert!(t.get(3, 3).is_zero());
        assert_eq!(t.pairs().count(), 10);
    }
}

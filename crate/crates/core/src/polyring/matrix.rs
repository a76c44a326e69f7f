use super::Polynomial;
use crate::error::{Error, Result};

/// Dense row-major matrix of polynomials over one ambient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    n: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let n = entries[0].n();
        if let Some(bad) = entries.iter().find(|e| e.n() != n) {
            return Err(Error::AmbientMismatch { expected: n, found: bad.n() });
        }
        Ok(PolyMatrix { rows, cols, n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    /// Determinant: cofactor expansion up to 4x4, fraction-free Bareiss
    /// elimination above that.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let grid: Vec<Vec<Polynomial>> = self
            .entries
            .chunks(self.cols)
            .map(<[Polynomial]>::to_vec)
            .collect();
        if self.rows <= 4 {
            let idx: Vec<usize> = (0..self.rows).collect();
            Ok(cofactor(&grid, &idx, 0, self.n))
        } else {
            Ok(bareiss(grid, self.n))
        }
    }
}

/// Laplace expansion along row `row` over the remaining columns `cols`.
fn cofactor(m: &[Vec<Polynomial>], cols: &[usize], row: usize, n: usize) -> Polynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = Polynomial::zero(n);
    for (k, &c) in cols.iter().enumerate() {
        let e = &m[row][c];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor(m, &rest, row + 1, n);
        let term = e * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn bareiss(mut m: Vec<Vec<Polynomial>>, n: usize) -> Polynomial {
    let size = m.len();
    let mut negate = false;
    let mut prev = Polynomial::one(n);
    for k in 0..size - 1 {
        // smallest nonzero pivot keeps intermediate entries small
        let pivot = (k..size)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].num_terms());
        let Some(p) = pivot else {
            return Polynomial::zero(n);
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly");
            }
            m[i][k] = Polynomial::zero(n);
        }
        prev = m[k][k].clone();
    }
    let d = m[size - 1][size - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn m(rows: &[&[&str]], n: usize) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse_poly(s, n).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn two_by_two() {
        let a = m(&[&["x0", "1"], &["1", "x0"]], 1);
        assert_eq!(a.det().unwrap(), parse_poly("x0^2 - 1", 1).unwrap());
    }

    #[test]
    fn repeated_rows_vanish() {
        let a = m(
            &[&["x0", "x1", "2"], &["x1^2", "1", "x0*x1"], &["x0", "x1", "2"]],
            2,
        );
        assert!(a.det().unwrap().is_zero());
    }

    #[test]
    fn not_square() {
        let a = m(&[&["x0", "1", "0"], &["1", "x0", "0"]], 1);
        assert_eq!(a.det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn bareiss_matches_cofactor_on_5x5() {
        let rows: Vec<Vec<&str>> = vec![
            vec!["x0", "1", "0", "x1", "2"],
            vec!["x1", "x0*x1", "3", "0", "1"],
            vec!["0", "x1^2", "x0", "1", "x1"],
            vec!["1", "0", "x1", "x0", "0"],
            vec!["2*x0", "x1", "1", "0", "x0^2"],
        ];
        let grid: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly(s, 2).unwrap()).collect())
            .collect();
        let idx: Vec<usize> = (0..5).collect();
        let expect = cofactor(&grid, &idx, 0, 2);
        let got = PolyMatrix::from_rows(grid).unwrap().det().unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        // permutation-like matrix forces row swaps
        let rows: Vec<Vec<Polynomial>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        if (i + 1) % 6 == j {
                            parse_poly("x0", 1).unwrap()
                        } else {
                            Polynomial::zero(1)
                        }
                    })
                    .collect()
            })
            .collect();
        // a 6-cycle has sign -1
        let d = PolyMatrix::from_rows(rows).unwrap().det().unwrap();
        assert_eq!(d, parse_poly("-x0^6", 1).unwrap());
    }
}

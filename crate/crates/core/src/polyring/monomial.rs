use std::cmp::Ordering;
use std::fmt;

/// Dense exponent vector `[a0, a1, ...]` standing for `x0^a0 * x1^a1 * ...`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors compared lexicographically (so `x0 > x1 > x2` in degree one).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every exponent of `other` is covered.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.n(), other.n());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Moves the exponent of `x_i` onto `x_{i+1 mod n}`.
    pub fn rotate(&self) -> Monomial {
        let mut e = self.0.clone();
        e.rotate_right(1);
        Monomial(e)
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.n()];
        for (i, &a) in self.0.iter().enumerate() {
            e[perm[i]] += a;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let a = Monomial::new(vec![3, 0, 0]);
        let b = Monomial::new(vec![1, 1, 1]);
        let c = Monomial::new(vec![0, 0, 3]);
        let d = Monomial::new(vec![0, 4, 0]);
        assert!(a > b && b > c);
        assert!(d > a);
    }

    #[test]
    fn rotate_moves_exponents_up() {
        assert_eq!(Monomial::new(vec![2, 1, 0]).rotate(), Monomial::new(vec![0, 2, 1]));
        assert_eq!(Monomial::new(vec![0, 0, 5]).rotate(), Monomial::new(vec![5, 0, 0]));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(vec![2, 0, 1]).to_string(), "x0^2*x2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}

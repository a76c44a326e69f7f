//! Exact sparse multivariate polynomials over the rationals.

mod matrix;
mod monomial;
mod parse;
mod polynomial;

pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use polynomial::Polynomial;

use num_traits::ToPrimitive;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `p` or `p/q`.
pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    let t = text.trim();
    let bad = || crate::Error::InvalidArgument(format!("not a rational number: {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&den) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn matrix_det(m: &PolyMatrix) -> crate::Result<Polynomial> {
    m.det()
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> crate::Result<Polynomial> {
    a.checked_mul(b)
}

pub fn partial_derivative(p: &Polynomial, i: usize) -> crate::Result<Polynomial> {
    p.partial_derivative(i)
}

pub fn evaluate(p: &Polynomial, point: &[Rational]) -> crate::Result<Rational> {
    p.evaluate(point)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("4").unwrap(), rat(4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}

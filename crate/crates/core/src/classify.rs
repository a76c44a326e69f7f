//! Bases of the invariant Casimir spaces and the named families.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::enumeration::monomial_filter_oracle;
use crate::error::Result;
use crate::heisenberg::WeightVector;
use crate::jps::CasimirSet;
use crate::polyring::{parse_poly, rat, ratio, Monomial, Polynomial, Rational};

/// Admissible exponents of degree `n·r` and their σ-orbits.
///
/// `monomial_dimension` counts admissible monomials; `orbit_dimension` counts
/// the σ-invariant orbit sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBasisReport {
    pub n: usize,
    pub r: u64,
    pub degree: u64,
    pub monomials: Vec<Monomial>,
    pub orbits: Vec<Vec<Monomial>>,
    pub monomial_dimension: usize,
    pub orbit_dimension: usize,
}

impl HBasisReport {
    /// One polynomial per orbit, coefficient 1 on every member.
    pub fn orbit_sums(&self) -> Vec<Polynomial> {
        self.orbits.iter().map(|o| orbit_sum(self.n, o)).collect()
    }

    /// Coordinates of `p` in the orbit-sum basis, or `None` if `p` is not in
    /// their span.
    pub fn orbit_coordinates(&self, p: &Polynomial) -> Option<Vec<Rational>> {
        if p.n() != self.n {
            return None;
        }
        let known: BTreeSet<&Monomial> = self.monomials.iter().collect();
        if p.monomials().any(|m| !known.contains(m)) {
            return None;
        }
        let mut coords = Vec::with_capacity(self.orbits.len());
        for orbit in &self.orbits {
            let c = p.coeff(&orbit[0]);
            if orbit.iter().any(|m| p.coeff(m) != c) {
                return None;
            }
            coords.push(c);
        }
        Some(coords)
    }
}

pub fn orbit_sum(n: usize, orbit: &[Monomial]) -> Polynomial {
    Polynomial::from_terms(n, orbit.iter().map(|m| (m.exponents().to_vec(), rat(1))))
        .expect("orbit members share n")
}

/// σ-orbit of `m`, ascending.
pub fn sigma_orbit(m: &Monomial) -> Vec<Monomial> {
    let mut seen = BTreeSet::new();
    let mut cur = m.clone();
    while seen.insert(cur.clone()) {
        cur = cur.rotate();
    }
    seen.into_iter().collect()
}

pub fn h_basis(n: usize, r: u64) -> Result<HBasisReport> {
    let monomials = monomial_filter_oracle(n, r)?;
    let mut assigned = BTreeSet::new();
    let mut orbits = Vec::new();
    // largest monomial first, so x0^{nr} leads
    for m in monomials.iter().rev() {
        if assigned.contains(m) {
            continue;
        }
        let mut orbit = sigma_orbit(m);
        orbit.reverse();
        assigned.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    Ok(HBasisReport {
        n,
        r,
        degree: n as u64 * r,
        monomial_dimension: monomials.len(),
        orbit_dimension: orbits.len(),
        monomials,
        orbits,
    })
}

/// `(x0³ + x1³ + x2³) + γ x0x1x2`.
pub fn ast_cubic(gamma: &Rational) -> Polynomial {
    let base = parse_poly("x0^3 + x1^3 + x2^3", 3).expect("literal");
    &base + &Polynomial::monomial(Monomial::new(vec![1, 1, 1]), gamma.clone())
}

/// `a/6 Σ x_i⁶ + b/3 Σ x_i³x_j³ + c Σ x_i⁴x_jx_k + d/2 x0²x1²x2²`.
pub fn dual_sextic(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Polynomial {
    let groups: [(&str, Rational); 4] = [
        ("x0^6 + x1^6 + x2^6", a * ratio(1, 6)),
        ("x0^3*x1^3 + x0^3*x2^3 + x1^3*x2^3", b * ratio(1, 3)),
        ("x0^4*x1*x2 + x0*x1^4*x2 + x0*x1*x2^4", c.clone()),
        ("x0^2*x1^2*x2^2", d * ratio(1, 2)),
    ];
    groups.iter().fold(Polynomial::zero(3), |acc, (s, k)| {
        &acc + &parse_poly(s, 3).expect("literal").scale(k)
    })
}

/// `q1 = ½(x0² + x2²) + k x1x3`, `q2 = ½(x1² + x3²) + k x0x2`.
pub fn sklyanin_casimirs(k: &Rational) -> CasimirSet {
    let half = ratio(1, 2);
    let q = |a: usize, b: usize, c: usize, d: usize| {
        let mut p = Polynomial::var(4, a).pow(2).scale(&half);
        p = &p + &Polynomial::var(4, b).pow(2).scale(&half);
        &p + &(&Polynomial::var(4, c) * &Polynomial::var(4, d)).scale(k)
    };
    CasimirSet::new(4, vec![q(0, 2, 1, 3), q(1, 3, 0, 2)]).expect("four variables, two Casimirs")
}

/// `P1 = Σ α_i x_i`, `P2 = Σ β_i x_i²`, `P3 = Σ γ_i x_i²` in five variables.
pub fn brieskorn_pham_5(alpha: &[Rational; 5], beta: &[Rational; 5], gamma: &[Rational; 5]) -> CasimirSet {
    let build = |coeffs: &[Rational; 5], power: u32| {
        Polynomial::from_terms(
            5,
            coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
                let mut e = vec![0; 5];
                e[i] = power;
                (e, c.clone())
            }),
        )
        .expect("five exponents")
    };
    CasimirSet::new(5, vec![build(alpha, 1), build(beta, 2), build(gamma, 2)])
        .expect("five variables, three Casimirs")
}

/// `y0³ + y1³y2 + y2² + γ y0y1y2`, weighted-homogeneous under `(2, 1, 3)`.
pub fn weighted_art6(gamma: &Rational) -> Polynomial {
    let base = parse_poly("x0^3 + x1^3*x2 + x2^2", 3).expect("literal");
    &base + &Polynomial::monomial(Monomial::new(vec![1, 1, 1]), gamma.clone())
}

/// `⅓(z2² + z0²z2 + z0z1³) + k z0z1z2`, weighted-homogeneous under `(1, 1, 2)`.
pub fn weighted_wp112_curve(k: &Rational) -> Polynomial {
    let base = parse_poly("1/3*x2^2 + 1/3*x0^2*x2 + 1/3*x0*x1^3", 3).expect("literal");
    &base + &Polynomial::monomial(Monomial::new(vec![1, 1, 1]), k.clone())
}

/// The two weighted-projective curves with their weight vectors.
pub fn weighted_examples(gamma: &Rational, k: &Rational) -> Vec<(Polynomial, WeightVector)> {
    vec![
        (weighted_art6(gamma), WeightVector::new(vec![2, 1, 3]).expect("positive")),
        (weighted_wp112_curve(k), WeightVector::new(vec![1, 1, 2]).expect("positive")),
    ]
}

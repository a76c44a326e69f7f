//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use hjps::classify::{ast_cubic, h_basis, sklyanin_casimirs, weighted_art6, weighted_wp112_curve};
use hjps::dualcurve::{fit_dual_sextic, perturb_samples, sample_tangents};
use hjps::enumeration::{
    card_s1, card_s2, compositions_to_exponents, dim_h3, enumerate_compositions,
    monomial_filter_oracle, poincare_series, triangle_lattice_points, triangle_to_exponents,
};
use hjps::heisenberg::{
    check_h_invariance, check_toric_invariance, is_weighted_homogeneous, tau_degree, TauDegree,
    WeightVector, WeightedDegree,
};
use hjps::jps::{
    bracket_table, check_casimir, check_jacobi, jacobian_bracket, jps3_table, product_rule_check,
    BracketTable, CasimirSet,
};
use hjps::polyring::{parse_poly, rat, ratio, Monomial, Polynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dimension_formula() -> Outcome {
    for r in 1..=50u64 {
        let brute = triangle_lattice_points(r).unwrap().len() as u64;
        let closed = card_s1(r).unwrap() + card_s2(r).unwrap();
        let s = r as i64 - 1;
        let poly = dim_h3(s).unwrap();
        // (3/2)s² + (9/2)s + 4, evaluated exactly
        let direct = Rational::from_integer(3.into()) * ratio(s * s, 2) + ratio(9 * s, 2) + rat(4);
        ensure(
            brute == closed && closed == poly && direct == rat(poly as i64),
            || format!("r = {r}: brute {brute}, closed {closed}, formula {poly}, direct {direct}"),
        )?;
    }
    Ok("r = 1..50 agree".into())
}

fn poincare() -> Outcome {
    let c = poincare_series(150);
    for (d, &v) in c.iter().enumerate() {
        let want = if d % 3 == 0 { dim_h3(d as i64 / 3 - 1).unwrap() as i128 } else { 0 };
        ensure(v == want, || format!("t^{d}: series {v}, formula {want}"))?;
    }
    Ok("t^0..t^150 exact".into())
}

fn parametrizations() -> Outcome {
    for r in 1..=6u64 {
        let tri: BTreeSet<Monomial> = triangle_lattice_points(r)
            .unwrap()
            .iter()
            .map(|p| triangle_to_exponents(r, p.0[0], p.0[1]).unwrap())
            .collect();
        let comp: BTreeSet<Monomial> = enumerate_compositions(3, r)
            .unwrap()
            .iter()
            .map(|s| compositions_to_exponents(3, r, s).unwrap())
            .collect();
        let filt: BTreeSet<Monomial> = monomial_filter_oracle(3, r).unwrap().into_iter().collect();
        ensure(tri == comp && comp == filt, || {
            format!("r = {r}: sizes {} / {} / {}", tri.len(), comp.len(), filt.len())
        })?;
    }
    Ok("n = 3, r <= 6: triangle = compositions = filter".into())
}

fn general_n() -> Outcome {
    let mut sizes = Vec::new();
    for (n, r) in [(4usize, 1u64), (4, 2), (5, 1), (6, 1)] {
        let comps = enumerate_compositions(n, r).unwrap();
        let mapped: Vec<Monomial> = comps
            .iter()
            .map(|s| compositions_to_exponents(n, r, s).unwrap())
            .collect();
        let set: BTreeSet<Monomial> = mapped.iter().cloned().collect();
        let filt = monomial_filter_oracle(n, r).unwrap();
        let fset: BTreeSet<Monomial> = filt.iter().cloned().collect();
        ensure(set.len() == mapped.len(), || format!("({n},{r}): composition map not injective"))?;
        ensure(set == fset && mapped.len() == filt.len(), || {
            format!("({n},{r}): compositions {} vs filter {}", mapped.len(), filt.len())
        })?;
        sizes.push(format!("({n},{r})={}", filt.len()));
    }
    Ok(sizes.join(" "))
}

/// The displayed Sklyanin brackets, indices mod 4.
fn sklyanin_display(k: &Rational) -> BracketTable {
    let x = |i: usize| Polynomial::var(4, i % 4);
    let k2 = k * k;
    let adj = |i: usize| &(&x(i) * &x(i + 1)).scale(&k2) - &(&x(i + 2) * &x(i + 3));
    let opp = |i: usize| (&x(i + 3).pow(2) - &x(i + 1).pow(2)).scale(k);
    BracketTable::from_fn(4, |i, j| match (i, j) {
        (0, 1) => adj(0),
        (1, 2) => adj(1),
        (2, 3) => adj(2),
        (0, 3) => -adj(3),
        (0, 2) => opp(0),
        (1, 3) => opp(1),
        _ => unreachable!(),
    })
}

fn golden_sklyanin() -> Outcome {
    let mut signs = Vec::new();
    for k in [0i64, 1, 2] {
        let k = rat(k);
        let t = bracket_table(&sklyanin_casimirs(&k)).unwrap();
        let shown = sklyanin_display(&k);
        let sign = [1i64, -1]
            .into_iter()
            .find(|&s| t == shown.scaled(&rat(s)))
            .ok_or_else(|| format!("k = {k}: no global sign matches"))?;
        signs.push(format!("k={k}:{sign:+}"));
    }
    Ok(format!("sign per table {}", signs.join(" ")))
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, degs: std::ops::RangeInclusive<u32>, terms: usize) -> Polynomial {
    loop {
        let p = Polynomial::from_terms(
            n,
            (0..terms).map(|_| {
                let deg = rng.gen_range(degs.clone());
                let mut e = vec![0u32; n];
                for _ in 0..deg {
                    e[rng.gen_range(0..n)] += 1;
                }
                (e, ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
            }),
        )
        .unwrap();
        if !p.is_constant() {
            return p;
        }
    }
}

fn structural_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sets = 0;
    for case in 0..27 {
        let n = 3 + case % 3;
        let qs = (0..n - 2).map(|_| random_poly(&mut rng, n, 1..=3, 3)).collect();
        let c = CasimirSet::new(n, qs).unwrap();
        let t = bracket_table(&c).unwrap();
        let f = random_poly(&mut rng, n, 1..=2, 2);
        let g = random_poly(&mut rng, n, 1..=2, 2);
        let h = random_poly(&mut rng, n, 1..=2, 2);
        let fg = jacobian_bracket(&c, &f, &g).unwrap();
        let gf = jacobian_bracket(&c, &g, &f).unwrap();
        ensure(fg == -gf, || format!("case {case}: antisymmetry"))?;
        let lhs = jacobian_bracket(&c, &f, &(&g * &h)).unwrap();
        let rhs = &(&g * &jacobian_bracket(&c, &f, &h).unwrap()) + &(&h * &fg);
        ensure(lhs == rhs, || format!("case {case}: Leibniz"))?;
        let jac = check_jacobi(&t);
        ensure(jac.ok, || format!("case {case}: Jacobi fails at {:?}", jac.witness))?;
        ensure(check_casimir(&c, &t), || format!("case {case}: Casimir"))?;
        for q in c.casimirs() {
            ensure(jacobian_bracket(&c, q, &f).unwrap().is_zero(), || {
                format!("case {case}: Casimir against f")
            })?;
        }
        sets += 1;
    }
    let mut pairs = 0;
    for _ in 0..22 {
        let p = random_poly(&mut rng, 3, 3..=3, 4);
        let q = random_poly(&mut rng, 3, 3..=3, 4);
        ensure(product_rule_check(&p, &q).unwrap(), || format!("product rule: {p} / {q}"))?;
        pairs += 1;
    }
    Ok(format!("{sets} Casimir sets, {pairs} product-rule pairs"))
}

fn h_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for r in 1..=4u64 {
        let b = h_basis(3, r).unwrap();
        let sums = b.orbit_sums();
        let mut candidates = sums.clone();
        for _ in 0..3 {
            let combo = sums.iter().fold(Polynomial::zero(3), |acc, s| {
                &acc + &s.scale(&ratio(rng.gen_range(-7..=7), rng.gen_range(1..=4)))
            });
            candidates.push(combo);
        }
        for p in candidates {
            if p.is_zero() {
                continue;
            }
            let rep = check_h_invariance(&jps3_table(&p).unwrap());
            ensure(rep.is_invariant(), || format!("r = {r}: {p} fails: {:?}", rep.failures))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} tables invariant"))
}

fn weighted() -> Outcome {
    let g = ratio(3, 2);
    let art = weighted_art6(&g);
    let wp = weighted_wp112_curve(&rat(2));
    let w1 = WeightVector::new(vec![2, 1, 3]).unwrap();
    let w2 = WeightVector::new(vec![1, 1, 2]).unwrap();
    ensure(is_weighted_homogeneous(&art, &w1) == Some(WeightedDegree::Degree(6)), || {
        "art6 not of weighted degree 6".into()
    })?;
    ensure(is_weighted_homogeneous(&wp, &w2) == Some(WeightedDegree::Degree(4)), || {
        "WP(1,1,2) curve not of weighted degree 4".into()
    })?;
    for (p, w, name) in [(&art, &w1, "art6"), (&wp, &w2, "WP(1,1,2)")] {
        let t = jps3_table(p).unwrap();
        ensure(check_toric_invariance(&t, w), || format!("{name}: toric invariance fails"))?;
        ensure(!check_h_invariance(&t).is_invariant(), || format!("{name}: unexpectedly H-invariant"))?;
    }
    Ok("toric yes, Heisenberg no".into())
}

fn dual_curve() -> Outcome {
    let s = sample_tangents(0.0, 24, 11).map_err(|e| e.to_string())?;
    let fit = fit_dual_sextic(&s).map_err(|e| e.to_string())?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let want = [h, -h, 0.0, 0.0];
    let dist = fit.coeffs.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    ensure(dist < 1e-6 && fit.residual < 1e-8, || {
        format!("gamma = 0: {:?}, residual {:e}", fit.coeffs, fit.residual)
    })?;
    let mut worst = fit.residual;
    for g in [1.0, 2.0, 0.5] {
        let s = sample_tangents(g, 24, 5).map_err(|e| e.to_string())?;
        let fit = fit_dual_sextic(&s).map_err(|e| e.to_string())?;
        ensure(fit.residual < 1e-8, || format!("gamma = {g}: residual {:e}", fit.residual))?;
        worst = worst.max(fit.residual);
    }
    let s = sample_tangents(1.0, 24, 5).map_err(|e| e.to_string())?;
    let noisy = fit_dual_sextic(&perturb_samples(&s, 1e-2, 99)).map_err(|e| e.to_string())?;
    ensure(noisy.residual > 1e-4, || format!("noisy residual only {:e}", noisy.residual))?;
    Ok(format!("max clean residual {worst:.1e}, noisy {:.1e}", noisy.residual))
}

fn tau_of_products() -> Outcome {
    for k in [0i64, 1, 3] {
        let p = sklyanin_casimirs(&rat(k)).product();
        ensure(tau_degree(&p) == TauDegree::Value(2), || {
            format!("Sklyanin k = {k}: tau {:?}", tau_degree(&p))
        })?;
    }
    let mut n3 = vec![ast_cubic(&rat(0)), ast_cubic(&ratio(-5, 2))];
    for r in 1..=3 {
        n3.extend(h_basis(3, r).unwrap().orbit_sums());
    }
    for p in &n3 {
        ensure(tau_degree(p) == TauDegree::Value(0), || format!("n = 3: {p}"))?;
    }
    let mut n5 = 0;
    for r in 1..=2 {
        let sums = h_basis(5, r).unwrap().orbit_sums();
        for p in &sums {
            ensure(tau_degree(p) == TauDegree::Value(0), || format!("n = 5: {p}"))?;
        }
        n5 += sums.len();
    }
    // a product of two invariant quintics
    let b = h_basis(5, 1).unwrap().orbit_sums();
    let prod = &b[0] * &b[b.len() - 1];
    ensure(tau_degree(&prod) == TauDegree::Value(0), || "n = 5 product".into())?;
    for p in h_basis(4, 1).unwrap().orbit_sums() {
        ensure(tau_degree(&p) == TauDegree::Value(2), || format!("n = 4: {p}"))?;
    }
    let x = parse_poly("x0*x1*x2*x3", 4).unwrap();
    ensure(tau_degree(&x) == TauDegree::Value(2), || "n = 4 monomial".into())?;
    Ok(format!("Sklyanin 2, {} cubic-family and {n5} quintic-family Casimirs at 0", n3.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("dimension formula", dimension_formula),
        ("Poincare series", poincare),
        ("parametrization equivalence", parametrizations),
        ("general-n oracle agreement", general_n),
        ("golden Sklyanin brackets", golden_sklyanin),
        ("structural identities", structural_identities),
        ("H-invariance certification", h_invariance),
        ("weighted-projective checks", weighted),
        ("dual-curve membership", dual_curve),
        ("tau-degree of Casimir products", tau_of_products),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

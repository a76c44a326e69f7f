//! Dimensions of the invariant cubic-family Casimirs: triangle points,
//! closed forms and the Poincare series side by side.
//!
//!     cargo run --example dimension_count -- 12

use hjps::enumeration::{card_s1, card_s2, dim_h3, poincare_coeffs, triangle_lattice_points, POINCARE_SERIES};

fn main() -> hjps::Result<()> {
    let max_r: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let series = poincare_coeffs(max_r as usize);
    println!("series {POINCARE_SERIES}");
    println!("{:>4} {:>8} {:>8} {:>8} {:>8}", "r", "points", "S1+S2", "formula", "series");
    for r in 1..=max_r {
        println!(
            "{:>4} {:>8} {:>8} {:>8} {:>8}",
            r,
            triangle_lattice_points(r)?.len(),
            card_s1(r)? + card_s2(r)?,
            dim_h3(r as i64 - 1)?,
            series[r as usize]
        );
    }
    Ok(())
}

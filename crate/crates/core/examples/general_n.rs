//! Invariant Casimirs in n variables: compositions, the cyclic constraint
//! system, and the brute-force monomial filter.
//!
//!     cargo run --example general_n -- 4 2

use std::collections::BTreeSet;

use hjps::classify::h_basis;
use hjps::enumeration::{
    compositions_to_exponents, constraint_system, enumerate_compositions, l_value, monomial_filter_oracle,
};

fn main() -> hjps::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(4) as usize;
    let r = args.next().flatten().unwrap_or(1);
    let sys = constraint_system(n, r)?;
    println!("n = {n}, r = {r}, l = {}, N = {:?}", l_value(n), sys.weight());
    for row in sys.rows() {
        println!("  row {row:?}");
    }
    let comps = enumerate_compositions(n, r)?;
    let mapped: BTreeSet<_> = comps
        .iter()
        .map(|s| compositions_to_exponents(n, r, s))
        .collect::<hjps::Result<_>>()?;
    let filtered: BTreeSet<_> = monomial_filter_oracle(n, r)?.into_iter().collect();
    println!("compositions: {}  filter: {}  equal: {}", comps.len(), filtered.len(), mapped == filtered);
    let b = h_basis(n, r)?;
    println!("sigma-orbit sums: {}", b.orbit_dimension);
    for p in b.orbit_sums().iter().take(8) {
        println!("  {p}");
    }
    Ok(())
}

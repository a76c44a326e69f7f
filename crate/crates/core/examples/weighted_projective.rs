//! Weighted-homogeneous curves: toric invariance holds, Heisenberg
//! invariance does not.

use hjps::classify::weighted_examples;
use hjps::heisenberg::{check_h_invariance, check_toric_invariance, is_weighted_homogeneous};
use hjps::jps::jps3_table;
use hjps::polyring::rat;

fn main() -> hjps::Result<()> {
    for (p, w) in weighted_examples(&rat(1), &rat(1)) {
        let t = jps3_table(&p)?;
        println!("P = {p}");
        println!("  weights {:?}, degree {:?}", w.weights(), is_weighted_homogeneous(&p, &w));
        println!("  toric invariant: {}", check_toric_invariance(&t, &w));
        let h = check_h_invariance(&t);
        println!("  H-invariant: {} ({} failures)", h.is_invariant(), h.failures.len());
    }
    Ok(())
}

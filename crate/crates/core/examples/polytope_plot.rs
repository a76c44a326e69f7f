//! Writes SVG pictures of T_r and of the four-variable polytope.
//!
//!     cargo run --example polytope_plot -- 2 /tmp

use std::path::PathBuf;

use hjps::plot::plot_polytope;

fn main() -> hjps::Result<()> {
    let mut args = std::env::args().skip(1);
    let r: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| ".".into()));
    for n in [3, 4] {
        let path = dir.join(format!("polytope_n{n}_r{r}.svg"));
        let count = plot_polytope(n, r, &path)?;
        println!("{}: {count} lattice points", path.display());
    }
    Ok(())
}

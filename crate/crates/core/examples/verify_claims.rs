//! Runs every check on the constructed basis: chain relations, per-rank
//! independence, orthogonality, and uniform ratio profiles.
//!
//! ```bash
//! cargo run --release -p sjb --example verify_claims -- 8
//! ```

use sjb::{build_sjb, check_orthogonality, check_ratio_uniformity, verify_sjb, GroundSize};

fn main() -> sjb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let basis = build_sjb(GroundSize::new(n)?)?;
    let reports = [
        verify_sjb(&basis),
        check_orthogonality(&basis),
        check_ratio_uniformity(&basis),
    ];
    for r in &reports {
        println!("{r}\n");
    }
    if reports.iter().all(|r| r.passed()) {
        println!("all checks passed for n = {n}");
        Ok(())
    } else {
        std::process::exit(1);
    }
}

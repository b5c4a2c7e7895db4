//! Builds the symmetric Jordan basis for a small `n` and prints every chain.
//!
//! ```bash
//! cargo run -p sjb --example build_basis -- 3
//! ```

use sjb::{build_sjb, GroundSize};

fn main() -> sjb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let basis = build_sjb(GroundSize::new(n)?)?;
    println!(
        "n = {n}: {} chains, {} vectors",
        basis.chains().len(),
        basis.vector_count()
    );
    for (i, chain) in basis.chains().iter().enumerate() {
        println!(
            "chain {i} (ranks {}..{}):",
            chain.start_rank(),
            chain.end_rank()
        );
        for v in chain.vectors() {
            println!("    {v}");
        }
    }
    Ok(())
}

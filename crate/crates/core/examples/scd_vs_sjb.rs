//! Places the subset chain decomposition next to the Jordan basis: both have
//! the same chains, start ranks and lengths, in the same order.
//!
//! ```bash
//! cargo run -p sjb --example scd_vs_sjb -- 4
//! ```

use sjb::{build_scd, build_sjb, chain_length_profile, verify_scd, GroundSize};

fn main() -> sjb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let ground = GroundSize::new(n)?;
    let scd = build_scd(ground)?;
    let basis = build_sjb(ground)?;

    for (chain, jordan) in scd.chains().iter().zip(basis.chains()) {
        let subsets: Vec<String> = chain.subsets().iter().map(|x| x.to_string()).collect();
        println!(
            "{:<40} | starts with {}",
            subsets.join(" ⊂ "),
            jordan.vectors()[0]
        );
    }
    println!();
    println!("{}", verify_scd(&scd));
    let same = chain_length_profile(&scd) == chain_length_profile(&basis);
    println!("length profiles agree chain by chain: {same}");
    Ok(())
}

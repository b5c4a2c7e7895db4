//! Tabulates the squared-norm ratio profile shared by all chains with the same
//! start rank, for every `n` up to the argument.
//!
//! ```bash
//! cargo run --release -p sjb --example ratio_profiles -- 8
//! ```

use sjb::sjb::build_sjb_levels;
use sjb::verify::profiles_by_start_rank;
use sjb::{check_ratio_uniformity, GroundSize};

fn main() -> sjb::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    for basis in build_sjb_levels(GroundSize::new(max)?)? {
        let uniform = check_ratio_uniformity(&basis).passed();
        println!("n = {} (uniform: {uniform})", basis.ground());
        for (profile, count) in profiles_by_start_rank(&basis)? {
            println!("    {profile}  x{count}");
        }
    }
    Ok(())
}

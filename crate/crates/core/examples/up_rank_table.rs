//! Exact rank of the up operator between consecutive levels, and the
//! unimodality of the binomial row that follows from it.
//!
//! ```bash
//! cargo run --release -p sjb --example up_rank_table -- 9
//! ```

use sjb::{binomial, unimodality_report, up_rank_check, GroundSize};

fn main() -> sjb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    let ground = GroundSize::new(n)?;
    println!(
        "{:>3} {:>8} {:>8} {:>6}  injective  surjective",
        "k", "C(n,k)", "C(n,k+1)", "rank"
    );
    for k in 0..n {
        let r = up_rank_check(ground, k)?;
        println!(
            "{k:>3} {:>8} {:>8} {:>6}  {:<9}  {}",
            binomial(n as i64, k as i64),
            binomial(n as i64, k as i64 + 1),
            r.computed_rank,
            r.injective,
            r.surjective
        );
    }
    println!();
    println!("{}", unimodality_report(ground)?);
    Ok(())
}

//! Walks one induction step by hand: each chain over `[n]` is extended either
//! to a single longer chain (middle-rank singletons) or to a `y` chain and a
//! `z` chain over `[n+1]`.
//!
//! ```bash
//! cargo run -p sjb --example induction_step -- 3
//! ```

use sjb::sjb::{case_b_determinant, extend_case_a, extend_case_b};
use sjb::{build_sjb, verify_sjc, GroundSize, SymJordanChain};

fn show(label: &str, chain: &SymJordanChain) {
    let ok = if verify_sjc(chain).passed() {
        "valid"
    } else {
        "INVALID"
    };
    println!("  {label} [{ok}]");
    for v in chain.vectors() {
        println!("      {v}");
    }
}

fn main() -> sjb::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    let basis = build_sjb(GroundSize::new(n)?)?;
    for (i, parent) in basis.chains().iter().enumerate() {
        let k = parent.start_rank();
        println!("parent chain {i}, ranks {k}..{}", parent.end_rank());
        if 2 * k == n {
            show("case (a)", &extend_case_a(parent)?);
        } else {
            let det = case_b_determinant(n as i64, k as i64, k as i64 + 1)?;
            println!("  case (b), mixing determinant {det}");
            let (y, z) = extend_case_b(parent)?;
            show("y", &y);
            show("z", &z);
        }
    }
    Ok(())
}

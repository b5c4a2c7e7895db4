//! Writes the canonical JSON documents for both decompositions and the CSV
//! matrix of `U` on the lowest level, then reads the basis back.
//!
//! ```bash
//! cargo run -p sjb --example export_documents -- 3 /tmp/sjb-out
//! ```

use std::path::PathBuf;

use sjb::document::{
    export_up_matrix_csv, read_document, serialize_scd, serialize_sjb, write_document, Decoded,
};
use sjb::lattice::DEFAULT_CAP;
use sjb::{build_scd, build_sjb, verify_sjb, GroundSize};

fn main() -> sjb::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let dir = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    let ground = GroundSize::new(n)?;

    let sjb_path = dir.join(format!("sjb_n{n}.json"));
    write_document(&sjb_path, &serialize_sjb(&build_sjb(ground)?))?;
    let scd_path = dir.join(format!("scd_n{n}.json"));
    write_document(&scd_path, &serialize_scd(&build_scd(ground)?))?;
    println!("wrote {} and {}", sjb_path.display(), scd_path.display());

    if n > 0 {
        let csv_path = dir.join(format!("up_n{n}_k0.csv"));
        export_up_matrix_csv(ground, 0, &csv_path)?;
        println!("wrote {}", csv_path.display());
    }

    if let Decoded::Sjb(basis) = read_document(&sjb_path, DEFAULT_CAP)? {
        println!(
            "read back: {}",
            if verify_sjb(&basis).passed() {
                "valid"
            } else {
                "INVALID"
            }
        );
    }
    Ok(())
}

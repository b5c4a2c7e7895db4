//! Command-line front end. `cli_main` is the whole program; the `sjb` binary
//! only forwards process arguments and streams to it.
//!
//! Exit codes: 0 when every check passes, 1 when a verification fails, 2 on
//! usage errors and on input that cannot be read or decoded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::document::{
    export_up_matrix_csv, read_document, serialize_scd, serialize_sjb, write_document, Decoded,
};
use crate::error::{Error, Result};
use crate::lattice::{binomial, GroundSize, DEFAULT_CAP, HARD_CAP};
use crate::scd::{build_scd, chain_length_profile, ChainShape};
use crate::sjb::{build_sjb, build_sjb_levels, SymJordanBasis};
use crate::verify::{
    check_orthogonality, check_ratio_uniformity, profiles_by_start_rank, up_rank_check, verify_scd,
    verify_sjb_with, BasisCheckOptions, VerificationReport,
};

/// Environment variable that overrides the default cap on `n`.
pub const CAP_ENV: &str = "SJB_MAX_N";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sjb",
    version,
    about = "Symmetric Jordan bases of the Boolean lattice"
)]
struct Cli {
    /// Worker threads for building and checking
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Largest accepted n (default 24, or $SJB_MAX_N; at most 63)
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Sjb,
    Scd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Sjc,
    Basis,
    Ortho,
    Ratios,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a basis or decomposition and write its document
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "sjb")]
        kind: KindArg,
        #[arg(long)]
        out: PathBuf,
        /// Also write every intermediate level as <out-stem>.n<i>.<ext>
        #[arg(long)]
        all_levels: bool,
    },
    /// Check a document
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Option<Vec<CheckArg>>,
    },
    /// Rank of the up operator between consecutive levels
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Squared-norm ratio profiles per start rank
    Profile { file: PathBuf },
    /// Chain length profiles of the Jordan basis and the subset decomposition
    Compare {
        #[arg(long)]
        n: usize,
    },
    /// Level dimensions and chain counts
    Stats {
        #[arg(long)]
        n: usize,
    },
    /// Write the 0/1 matrix of U on level k as CSV
    ExportMatrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub command: String,
    pub output: Option<PathBuf>,
    pub keep_levels: bool,
    pub jobs: usize,
    pub cap: usize,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> std::result::Result<Self, String> {
        let env_cap = match std::env::var(CAP_ENV) {
            Ok(text) => Some(
                text.parse::<usize>()
                    .map_err(|_| format!("{CAP_ENV}={text:?} is not a number"))?,
            ),
            Err(_) => None,
        };
        let cap = cli.cap.or(env_cap).unwrap_or(DEFAULT_CAP);
        if cap > HARD_CAP {
            return Err(format!("cap {cap} exceeds the hard limit {HARD_CAP}"));
        }
        if cli.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        let (name, n, output, keep_levels) = match &cli.command {
            Command::Build {
                n, out, all_levels, ..
            } => ("build", Some(*n), Some(out.clone()), *all_levels),
            Command::Verify { .. } => ("verify", None, None, false),
            Command::Rank { n, .. } => ("rank", Some(*n), None, false),
            Command::Profile { .. } => ("profile", None, None, false),
            Command::Compare { n } => ("compare", Some(*n), None, false),
            Command::Stats { n } => ("stats", Some(*n), None, false),
            Command::ExportMatrix { n, out, .. } => {
                ("export-matrix", Some(*n), Some(out.clone()), false)
            }
        };
        if let Some(n) = n {
            if n > cap {
                return Err(format!("n = {n} exceeds the cap of {cap}"));
            }
        }
        Ok(RunConfig {
            n,
            command: name.into(),
            output,
            keep_levels,
            jobs: cli.jobs,
            cap,
        })
    }

    fn ground(&self) -> Result<GroundSize> {
        GroundSize::with_cap(self.n.unwrap_or(0), self.cap)
    }
}

/// Runs the command line `args` (program name first). Returns the exit code.
pub fn cli_main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_PASS
            };
            return code;
        }
    };
    let config = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buffer = Vec::new();
    let outcome = pool.install(|| run(&cli.command, &config, &mut buffer));
    let _ = out.write_all(&buffer);
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn status(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn level_path(out: &Path, i: usize) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("basis");
    let name = match out.extension().and_then(|s| s.to_str()) {
        Some(ext) => format!("{stem}.n{i}.{ext}"),
        None => format!("{stem}.n{i}"),
    };
    out.with_file_name(name)
}

fn run(command: &Command, config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Build {
            kind, out: path, ..
        } => {
            let n = config.ground()?;
            match kind {
                KindArg::Sjb if config.keep_levels => {
                    let levels = build_sjb_levels(n)?;
                    for (i, basis) in levels.iter().enumerate() {
                        write_document(&level_path(path, i), &serialize_sjb(basis))?;
                    }
                    let last = levels.last().expect("level 0 always exists");
                    write_document(path, &serialize_sjb(last))?;
                    writeln!(out, "wrote {} levels and {}", levels.len(), path.display())?;
                }
                KindArg::Sjb => {
                    let basis = build_sjb(n)?;
                    write_document(path, &serialize_sjb(&basis))?;
                    writeln!(
                        out,
                        "wrote sjb n={} ({} chains) to {}",
                        n,
                        basis.chains().len(),
                        path.display()
                    )?;
                }
                KindArg::Scd => {
                    if config.keep_levels {
                        for i in 0..n.get() {
                            let d = build_scd(GroundSize::with_cap(i, config.cap)?)?;
                            write_document(&level_path(path, i), &serialize_scd(&d))?;
                        }
                    }
                    let d = build_scd(n)?;
                    write_document(path, &serialize_scd(&d))?;
                    writeln!(
                        out,
                        "wrote scd n={} ({} chains) to {}",
                        n,
                        d.chains().len(),
                        path.display()
                    )?;
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Verify { file, checks } => {
            let reports = match read_document(file, config.cap)? {
                Decoded::Sjb(basis) => {
                    let wanted = checks.clone().unwrap_or_else(|| {
                        vec![
                            CheckArg::Sjc,
                            CheckArg::Basis,
                            CheckArg::Ortho,
                            CheckArg::Ratios,
                        ]
                    });
                    verify_basis(&basis, &wanted)
                }
                Decoded::Scd(d) => vec![verify_scd(&d)],
            };
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            Ok(status(reports.iter().all(VerificationReport::passed)))
        }
        Command::Rank { k, .. } => {
            let n = config.ground()?;
            let levels: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..n.get()).collect(),
            };
            writeln!(out, "n\tk\tC(n,k)\tC(n,k+1)\trank\tinjective\tsurjective")?;
            let mut ok = true;
            for k in levels {
                let r = up_rank_check(n, k)?;
                let (a, b) = (
                    binomial(n.get() as i64, k as i64),
                    binomial(n.get() as i64, k as i64 + 1),
                );
                ok &= num_bigint::BigUint::from(r.computed_rank) == a.clone().min(b.clone());
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.n, r.k, a, b, r.computed_rank, r.injective, r.surjective
                )?;
            }
            Ok(status(ok))
        }
        Command::Profile { file } => {
            let basis = match read_document(file, config.cap)? {
                Decoded::Sjb(b) => b,
                Decoded::Scd(_) => {
                    return Err(Error::Format("profile needs an sjb document".into()))
                }
            };
            let uniform = check_ratio_uniformity(&basis);
            if uniform.passed() {
                for (p, count) in profiles_by_start_rank(&basis)? {
                    writeln!(out, "{p} ({count} chains)")?;
                }
            }
            writeln!(out, "{uniform}")?;
            Ok(status(uniform.passed()))
        }
        Command::Compare { .. } => {
            let n = config.ground()?;
            let jordan = chain_length_profile(&build_sjb(n)?);
            let subsets = chain_length_profile(&build_scd(n)?);
            writeln!(out, "start_rank\tlength\tsjb\tscd")?;
            let (a, b) = (jordan.multiset(), subsets.multiset());
            let keys: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).collect();
            for key in keys {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    key.0,
                    key.1,
                    a.get(key).unwrap_or(&0),
                    b.get(key).unwrap_or(&0)
                )?;
            }
            let same_multiset = a == b;
            let same_order = jordan == subsets;
            writeln!(
                out,
                "multiset: {}",
                if same_multiset { "equal" } else { "DIFFERENT" }
            )?;
            writeln!(
                out,
                "chain-by-chain: {}",
                if same_order { "equal" } else { "DIFFERENT" }
            )?;
            Ok(status(same_multiset && same_order))
        }
        Command::Stats { .. } => {
            let n = config.ground()?;
            let basis = build_sjb(n)?;
            let size = n.get() as i64;
            writeln!(
                out,
                "n = {n}, dim V(B(n)) = {}",
                num_bigint::BigUint::from(1u8) << n.get()
            )?;
            writeln!(
                out,
                "chains = {} (C(n, n/2) = {})",
                basis.chains().len(),
                binomial(size, size / 2)
            )?;
            writeln!(out, "rank\tdim\tchains_starting")?;
            let shapes = basis.chain_shapes();
            for r in 0..=n.get() {
                let starting = shapes.iter().filter(|(k, _)| *k == r).count();
                writeln!(out, "{r}\t{}\t{starting}", binomial(size, r as i64))?;
            }
            Ok(EXIT_PASS)
        }
        Command::ExportMatrix { k, out: path, .. } => {
            let n = config.ground()?;
            export_up_matrix_csv(n, *k, path)?;
            writeln!(out, "wrote U[n={n},k={k}] to {}", path.display())?;
            Ok(EXIT_PASS)
        }
    }
}

fn verify_basis(basis: &SymJordanBasis, wanted: &[CheckArg]) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    let sjc = wanted.contains(&CheckArg::Sjc);
    let full = wanted.contains(&CheckArg::Basis);
    if sjc || full {
        let mut report = verify_sjb_with(basis, BasisCheckOptions { independence: full });
        if !full {
            report.checks.retain(|c| c.name == "chains");
        }
        reports.push(report);
    }
    if wanted.contains(&CheckArg::Ortho) {
        reports.push(check_orthogonality(basis));
    }
    if wanted.contains(&CheckArg::Ratios) {
        reports.push(check_ratio_uniformity(basis));
    }
    reports
}

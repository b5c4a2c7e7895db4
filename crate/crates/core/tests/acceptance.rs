//! Exit criteria for the crate, one line per criterion.
//!
//! Runs as a plain binary under `cargo test --test acceptance`. Every check is
//! exact; the only thresholds are the wall-clock budgets below.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sjb::elimination::{modular_rank, LARGE_PRIME};
use sjb::lattice::binomial_usize;
use sjb::operators::embed;
use sjb::verify::{verify_sjb_with, BasisCheckOptions};
use sjb::{
    build_scd, build_sjb, chain_length_profile, check_orthogonality, check_ratio_uniformity, lift,
    up, up_matrix, up_rank_check, verify_scd, ExactVector, GroundSize, Subset, SymJordanBasis,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn g(n: usize) -> GroundSize {
    GroundSize::new(n).unwrap()
}

fn v(n: usize, terms: &[(&[usize], i64)]) -> ExactVector {
    ExactVector::from_terms(
        g(n),
        terms
            .iter()
            .map(|(els, c)| (Subset::from_elements(els, g(n)).unwrap(), *c)),
    )
    .unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_n2() -> Outcome {
    let basis = build_sjb(g(2)).map_err(|e| e.to_string())?;
    let expected: Vec<(usize, Vec<ExactVector>)> = vec![
        (
            0,
            vec![
                v(2, &[(&[], 1)]),
                v(2, &[(&[1], 1), (&[2], 1)]),
                v(2, &[(&[1, 2], 2)]),
            ],
        ),
        (1, vec![v(2, &[(&[2], 1), (&[1], -1)])]),
    ];
    let found: Vec<(usize, Vec<ExactVector>)> = basis
        .chains()
        .iter()
        .map(|c| (c.start_rank(), c.vectors().to_vec()))
        .collect();
    ensure(found == expected, || format!("got {found:?}"))
}

fn structural_suite() -> Outcome {
    let mut basis = SymJordanBasis::base();
    for n in 0..=12 {
        if n > 0 {
            basis = sjb::sjb::extend_basis(&basis).map_err(|e| e.to_string())?;
        }
        let report = verify_sjb_with(
            &basis,
            BasisCheckOptions {
                independence: n <= 10,
            },
        );
        ensure(report.passed(), || format!("n={n}: {report}"))?;
        let expected_checks = if n <= 10 { 4 } else { 3 };
        ensure(report.checks.len() == expected_checks, || {
            format!("n={n}: missing checks")
        })?;
    }
    Ok(())
}

fn orthogonality() -> Outcome {
    for n in 0..=10 {
        let report = check_orthogonality(&build_sjb(g(n)).unwrap());
        ensure(report.passed(), || format!("n={n}: {report}"))?;
    }
    Ok(())
}

fn ratio_uniformity() -> Outcome {
    for n in 0..=10 {
        let basis = build_sjb(g(n)).unwrap();
        let report = check_ratio_uniformity(&basis);
        ensure(report.passed(), || format!("n={n}: {report}"))?;
        for i in [0, basis.chains().len() / 2, basis.chains().len() - 1] {
            let mut chains = basis.clone().into_chains();
            chains[i] = chains[i].scaled(&BigInt::from(7));
            let scaled = SymJordanBasis::new(g(n), chains).unwrap();
            let report = check_ratio_uniformity(&scaled);
            ensure(report.passed(), || {
                format!("n={n}, chain {i} scaled by 7: {report}")
            })?;
        }
    }
    Ok(())
}

fn up_operator_rank() -> Outcome {
    for n in 1..=12 {
        for k in 0..n {
            let r = up_rank_check(g(n), k).map_err(|e| e.to_string())?;
            let (lo, hi) = (binomial_usize(n, k), binomial_usize(n, k + 1));
            ensure(r.computed_rank == lo.min(hi), || {
                format!("n={n} k={k}: rank {}", r.computed_rank)
            })?;
            ensure(r.injective == (lo <= hi), || {
                format!("n={n} k={k}: injectivity")
            })?;
            ensure(r.surjective == (hi <= lo), || {
                format!("n={n} k={k}: surjectivity")
            })?;
            ensure(!(2 * k < n) || r.injective, || {
                format!("n={n} k={k}: lower half")
            })?;
            // independent route: rank mod p is a lower bound for the rational rank
            let bound = modular_rank(&up_matrix(g(n), k).unwrap().to_dense(), LARGE_PRIME);
            ensure(bound == r.computed_rank, || {
                format!("n={n} k={k}: modular rank {bound}")
            })?;
        }
    }
    Ok(())
}

fn scd_partition() -> Outcome {
    for n in 0..=16 {
        let report = verify_scd(&build_scd(g(n)).unwrap());
        ensure(report.passed(), || format!("n={n}: {report}"))?;
    }
    Ok(())
}

fn linear_analog() -> Outcome {
    for n in 0..=12 {
        let a = chain_length_profile(&build_sjb(g(n)).unwrap());
        let b = chain_length_profile(&build_scd(g(n)).unwrap());
        ensure(a.multiset() == b.multiset(), || {
            format!("n={n}: multisets differ")
        })?;
        ensure(a.ordered == b.ordered, || {
            format!("n={n}: chain order differs")
        })?;
        let expected_len = |k: usize| n - 2 * k + 1;
        ensure(a.ordered.iter().all(|&(k, l)| l == expected_len(k)), || {
            format!("n={n}: lengths")
        })?;
    }
    Ok(())
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> ExactVector {
    let terms = rng.gen_range(0..=12);
    let raw: Vec<(Subset, i64)> = (0..terms)
        .map(|_| {
            let mask = rng.gen_range(0..(1u64 << n));
            (Subset::new(mask, g(n)).unwrap(), rng.gen_range(-50i64..=50))
        })
        .collect();
    ExactVector::from_terms(g(n), raw).unwrap()
}

fn recurrence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 0..=10 {
        for i in 0..200 {
            let x = random_vector(&mut rng, n);
            let lhs = up(&embed(&x).unwrap());
            let rhs = &embed(&up(&x)).unwrap() + &lift(&x).unwrap();
            ensure(lhs == rhs, || {
                format!("n={n} sample {i}: U(v) split fails for {x}")
            })?;
            let lifted = up(&lift(&x).unwrap());
            ensure(lifted == lift(&up(&x)).unwrap(), || {
                format!("n={n} sample {i}: U(lift v)")
            })?;
        }
    }
    Ok(())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for name in ["first.json", "second.json"] {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_sjb"))
            .args(["build", "--n", "10", "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("build exited with {status}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || "documents differ".into())?;
    let parallel = dir.path().join("parallel.json");
    let status = Command::new(env!("CARGO_BIN_EXE_sjb"))
        .args(["--jobs", "4", "build", "--n", "10", "--out"])
        .arg(&parallel)
        .status()
        .map_err(|e| e.to_string())?;
    ensure(status.success(), || "parallel build failed".into())?;
    let third = std::fs::read(&parallel).map_err(|e| e.to_string())?;
    ensure(third == outputs[0], || "--jobs 4 output differs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 golden n=2 basis", Duration::from_secs(1), golden_n2),
        (
            "2 basis structure and independence, n<=12",
            Duration::from_secs(300),
            structural_suite,
        ),
        (
            "3 orthogonality, n<=10",
            Duration::from_secs(120),
            orthogonality,
        ),
        (
            "4 ratio uniformity + rescale by 7, n<=10",
            Duration::from_secs(300),
            ratio_uniformity,
        ),
        (
            "5 up operator full rank, n<=12",
            Duration::from_secs(300),
            up_operator_rank,
        ),
        (
            "6 scd partition, n<=16",
            Duration::from_secs(60),
            scd_partition,
        ),
        (
            "7 sjb/scd length profiles, n<=12",
            Duration::from_secs(300),
            linear_analog,
        ),
        (
            "8 up recurrence on 200 random vectors, n<=10",
            Duration::from_secs(300),
            recurrence,
        ),
        (
            "9 byte-identical build --n 10",
            Duration::from_secs(300),
            determinism,
        ),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= budget, || {
                format!("took {elapsed:?}, budget {budget:?}")
            })
        });
        match outcome {
            Ok(()) => println!("PASS  criterion {name}  ({:.2?})", elapsed),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}  ({:.2?}): {msg}", elapsed);
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

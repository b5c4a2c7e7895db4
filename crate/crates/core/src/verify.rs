//! Exact checks of the claims made about constructed bases and
//! decompositions. Nothing here uses a tolerance.
//!
//! Every check records a [`Witness`] on failure that points back into the
//! input (chain index, position, rank level or pair of chains), so the
//! failure can be re-examined directly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::elimination::bareiss_rank;
use crate::error::{Error, Result};
use crate::lattice::{binomial, binomial_usize, rank_position, GroundSize};
use crate::operators::{up, up_matrix};
use crate::scd::ChainDecomposition;
use crate::sjb::{SymJordanBasis, SymJordanChain};
use crate::vector::ExactVector;

/// Where a failed check went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Vector at `position` within chain `chain`.
    Vector {
        chain: usize,
        position: usize,
        detail: String,
    },
    /// A whole chain.
    Chain { chain: usize, detail: String },
    /// Two chains whose rank-`rank` vectors disagree.
    Pair {
        rank: usize,
        first: usize,
        second: usize,
        detail: String,
    },
    /// A rank level of the lattice.
    Level { rank: usize, detail: String },
    /// A global count.
    Count { expected: String, found: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vector {
                chain,
                position,
                detail,
            } => write!(f, "chain {chain}, vector {position}: {detail}"),
            Witness::Chain { chain, detail } => write!(f, "chain {chain}: {detail}"),
            Witness::Pair {
                rank,
                first,
                second,
                detail,
            } => write!(f, "rank {rank}, chains {first} and {second}: {detail}"),
            Witness::Level { rank, detail } => write!(f, "rank {rank}: {detail}"),
            Witness::Count { expected, found } => write!(f, "expected {expected}, found {found}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl Check {
    fn from_first_failure(name: impl Into<String>, failure: Option<Witness>) -> Self {
        Check {
            name: name.into(),
            passed: failure.is_none(),
            witness: failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, failure: Option<Witness>) {
        self.checks.push(Check::from_first_failure(name, failure));
    }

    /// Conjunction of all checks.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Appends another report's checks.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            write!(f, "  [{mark}] {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " -- {w}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "overall: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Checks of a single chain; `index` labels witnesses.
fn chain_failures(chain: &SymJordanChain, index: usize) -> Vec<(&'static str, Option<Witness>)> {
    let n = chain.ground().get();
    let at = |position: usize, detail: String| Witness::Vector {
        chain: index,
        position,
        detail,
    };
    let vs = chain.vectors();

    let nonzero = vs
        .iter()
        .position(ExactVector::is_zero)
        .map(|p| at(p, "zero vector".into()));

    let homogeneous = vs.iter().enumerate().find_map(|(p, v)| {
        let declared = chain.start_rank() + p;
        match v.as_homogeneous() {
            Err(e) => Some(at(p, e.to_string())),
            Ok(h) => match h.rank() {
                Some(r) if r != declared => {
                    Some(at(p, format!("has rank {r}, declared {declared}")))
                }
                _ => None,
            },
        }
    });

    let links = vs.windows(2).enumerate().find_map(|(p, w)| {
        (up(&w[0]) != w[1]).then(|| at(p, format!("U(v) differs from vector {}", p + 1)))
    });

    let last = vs.len() - 1;
    let annihilated = (!up(&vs[last]).is_zero()).then(|| at(last, "U(last) is nonzero".into()));

    let (first, end) = (chain.start_rank(), chain.end_rank());
    let symmetric = (first + end != n).then(|| Witness::Chain {
        chain: index,
        detail: format!("ranks {first}..{end} are not symmetric about {n}/2"),
    });

    vec![
        ("nonzero", nonzero),
        ("homogeneous", homogeneous),
        ("up-links", links),
        ("annihilated", annihilated),
        ("rank-symmetry", symmetric),
    ]
}

/// Chain relations: nonzero homogeneous vectors of the declared ranks,
/// `U(v_l) = v_{l+1}`, `U(last) = 0`, and first rank + last rank = `n`.
pub fn verify_sjc(chain: &SymJordanChain) -> VerificationReport {
    let mut report = VerificationReport::new(format!(
        "chain over n={} from rank {} ({} vectors)",
        chain.ground(),
        chain.start_rank(),
        chain.len()
    ));
    for (name, failure) in chain_failures(chain, 0) {
        report.push(name, failure);
    }
    report
}

/// Options for [`verify_sjb_with`].
#[derive(Clone, Copy, Debug)]
pub struct BasisCheckOptions {
    /// Run the per-rank exact rank computation.
    pub independence: bool,
}

impl Default for BasisCheckOptions {
    fn default() -> Self {
        BasisCheckOptions { independence: true }
    }
}

pub fn verify_sjb(basis: &SymJordanBasis) -> VerificationReport {
    verify_sjb_with(basis, BasisCheckOptions::default())
}

/// Stacks the declared rank-`r` vectors as rows over the rank-`r` subsets.
/// `None` when some vector has support outside rank `r`.
fn level_matrix(n: usize, r: usize, vectors: &[(usize, &ExactVector)]) -> Option<Vec<Vec<BigInt>>> {
    let width = binomial_usize(n, r);
    vectors
        .iter()
        .map(|(_, v)| {
            let mut row = vec![BigInt::zero(); width];
            for (x, c) in v.terms() {
                if x.rank() != r {
                    return None;
                }
                row[rank_position(x)] = c.clone();
            }
            Some(row)
        })
        .collect()
}

pub fn verify_sjb_with(basis: &SymJordanBasis, options: BasisCheckOptions) -> VerificationReport {
    let n = basis.ground().get();
    let mut report = VerificationReport::new(format!(
        "symmetric Jordan basis over n={n} ({} chains)",
        basis.chains().len()
    ));

    let chain_failure = basis
        .chains()
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            chain_failures(c, i)
                .into_iter()
                .find_map(|(name, w)| w.map(|w| (name, w)))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    report.push(
        "chains",
        chain_failure.map(|(name, w)| match w {
            Witness::Vector {
                chain,
                position,
                detail,
            } => Witness::Vector {
                chain,
                position,
                detail: format!("{name}: {detail}"),
            },
            Witness::Chain { chain, detail } => Witness::Chain {
                chain,
                detail: format!("{name}: {detail}"),
            },
            other => other,
        }),
    );

    let total = basis.vector_count();
    let expected_total = BigUint::from(1u8) << n;
    report.push(
        "vector-count",
        (BigUint::from(total) != expected_total).then(|| Witness::Count {
            expected: expected_total.to_string(),
            found: total.to_string(),
        }),
    );

    let levels: Vec<Vec<(usize, &ExactVector)>> =
        (0..=n).map(|r| basis.vectors_of_rank(r)).collect();
    let stray = basis
        .chains()
        .iter()
        .enumerate()
        .find(|(_, c)| c.end_rank() > n)
        .map(|(i, c)| Witness::Chain {
            chain: i,
            detail: format!("declares rank {} beyond n={n}", c.end_rank()),
        });
    let count_failure = stray.or_else(|| {
        levels.iter().enumerate().find_map(|(r, vs)| {
            let expected = binomial_usize(n, r);
            (vs.len() != expected).then(|| Witness::Level {
                rank: r,
                detail: format!("{} vectors, dimension {expected}", vs.len()),
            })
        })
    });
    report.push("rank-counts", count_failure);

    if options.independence {
        let failure = levels
            .par_iter()
            .enumerate()
            .map(|(r, vs)| {
                let dim = binomial_usize(n, r);
                let Some(rows) = level_matrix(n, r, vs) else {
                    return Some(Witness::Level {
                        rank: r,
                        detail: "a vector has support outside this rank".into(),
                    });
                };
                if rows.is_empty() {
                    return (dim != 0).then(|| Witness::Level {
                        rank: r,
                        detail: format!("no vectors, dimension {dim}"),
                    });
                }
                let found = bareiss_rank(rows);
                (found != dim || vs.len() != dim).then(|| Witness::Level {
                    rank: r,
                    detail: format!("{} vectors span rank {found}, dimension {dim}", vs.len()),
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        report.push("rank-independence", failure);
    }
    report
}

/// Pairwise orthogonality of distinct basis vectors within each rank.
/// Vectors of different ranks have disjoint supports once every vector is
/// known to sit in its declared rank, which is checked first.
pub fn check_orthogonality(basis: &SymJordanBasis) -> VerificationReport {
    let n = basis.ground().get();
    let mut report = VerificationReport::new(format!("orthogonality over n={n}"));

    let impure = basis.chains().iter().enumerate().find_map(|(i, c)| {
        c.vectors().iter().enumerate().find_map(|(p, v)| {
            let declared = c.start_rank() + p;
            v.terms()
                .any(|(x, _)| x.rank() != declared)
                .then(|| Witness::Vector {
                    chain: i,
                    position: p,
                    detail: format!("support leaves rank {declared}"),
                })
        })
    });
    report.push("rank-pure-supports", impure);

    let failure = (0..=n)
        .into_par_iter()
        .map(|r| {
            let vs = basis.vectors_of_rank(r);
            (0..vs.len()).find_map(|i| {
                (i + 1..vs.len()).find_map(|j| {
                    let value = vs[i].1.dot(vs[j].1);
                    (!value.is_zero()).then(|| Witness::Pair {
                        rank: r,
                        first: vs[i].0,
                        second: vs[j].0,
                        detail: format!("inner product {value}"),
                    })
                })
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    report.push("pairwise-orthogonal", failure);
    report
}

/// Squared-norm ratios `‖v_{l+1}‖² / ‖v_l‖²` along a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioProfile {
    pub start_rank: usize,
    pub ratios: Vec<BigRational>,
}

impl RatioProfile {
    /// Exact equality by cross-multiplication.
    pub fn same_as(&self, other: &RatioProfile) -> bool {
        self.start_rank == other.start_rank
            && self.ratios.len() == other.ratios.len()
            && self
                .ratios
                .iter()
                .zip(&other.ratios)
                .all(|(a, b)| a.numer() * b.denom() == b.numer() * a.denom())
    }
}

impl fmt::Display for RatioProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}: [", self.start_rank)?;
        for (i, r) in self.ratios.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

pub fn ratio_profile(chain: &SymJordanChain) -> Result<RatioProfile> {
    let norms: Vec<BigInt> = chain
        .vectors()
        .iter()
        .map(ExactVector::norm_squared)
        .collect();
    if let Some(p) = norms.iter().position(|q| !q.is_positive()) {
        return Err(Error::InvalidChain(format!("vector {p} has zero norm")));
    }
    Ok(RatioProfile {
        start_rank: chain.start_rank(),
        ratios: norms
            .windows(2)
            .map(|w| BigRational::new(w[1].clone(), w[0].clone()))
            .collect(),
    })
}

/// All chains sharing a start rank must share a ratio profile.
pub fn check_ratio_uniformity(basis: &SymJordanBasis) -> VerificationReport {
    let mut report = VerificationReport::new(format!("ratio uniformity over n={}", basis.ground()));
    let profiles: Vec<Result<RatioProfile>> =
        basis.chains().par_iter().map(ratio_profile).collect();

    let invalid = profiles.iter().enumerate().find_map(|(i, p)| {
        p.as_ref().err().map(|e| Witness::Chain {
            chain: i,
            detail: e.to_string(),
        })
    });
    report.push("profiles-defined", invalid);

    let mut representative: BTreeMap<usize, (usize, &RatioProfile)> = BTreeMap::new();
    let mut mismatch = None;
    for (i, p) in profiles.iter().enumerate() {
        let Ok(p) = p else { continue };
        match representative.get(&p.start_rank) {
            None => {
                representative.insert(p.start_rank, (i, p));
            }
            Some((j, q)) if !p.same_as(q) => {
                mismatch = Some(Witness::Pair {
                    rank: p.start_rank,
                    first: *j,
                    second: i,
                    detail: format!("profiles {q} and {p}"),
                });
                break;
            }
            _ => {}
        }
    }
    report.push("uniform-per-start-rank", mismatch);
    report
}

/// One representative profile per start rank, in rank order.
pub fn profiles_by_start_rank(basis: &SymJordanBasis) -> Result<Vec<(RatioProfile, usize)>> {
    let mut out: BTreeMap<usize, (RatioProfile, usize)> = BTreeMap::new();
    for chain in basis.chains() {
        let p = ratio_profile(chain)?;
        out.entry(p.start_rank).or_insert((p, 0)).1 += 1;
    }
    Ok(out.into_values().collect())
}

/// Rank of `U` on one level and what it says about injectivity and
/// surjectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpRank {
    pub n: usize,
    pub k: usize,
    pub computed_rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

pub fn up_rank_check(n: GroundSize, k: usize) -> Result<UpRank> {
    let m = up_matrix(n, k)?;
    let (rows, cols) = (m.rows(), m.cols());
    let rank = bareiss_rank(m.to_dense());
    Ok(UpRank {
        n: n.get(),
        k,
        computed_rank: rank,
        injective: rank == cols,
        surjective: rank == rows,
    })
}

/// `C(n,0) ≤ ... ≤ C(n,⌊n/2⌋)`, symmetry of the binomial row, and injectivity
/// of `U` on every level below the middle.
pub fn unimodality_report(n: GroundSize) -> Result<VerificationReport> {
    let size = n.get();
    let row: Vec<BigUint> = (0..=size as i64)
        .map(|k| binomial(size as i64, k))
        .collect();
    let lower: Vec<String> = row[..=size / 2].iter().map(ToString::to_string).collect();
    let mut report =
        VerificationReport::new(format!("unimodality over n={size}: {}", lower.join(",")));

    let asymmetric = (0..=size)
        .find(|&k| row[k] != row[size - k])
        .map(|k| Witness::Level {
            rank: k,
            detail: format!(
                "C(n,{k}) = {} but C(n,{}) = {}",
                row[k],
                size - k,
                row[size - k]
            ),
        });
    report.push("symmetric", asymmetric);

    for k in (0..size).filter(|&k| 2 * k < size) {
        report.push(
            format!("nondecreasing k={k}"),
            (row[k] > row[k + 1]).then(|| Witness::Level {
                rank: k,
                detail: format!("C(n,{k}) = {} > C(n,{}) = {}", row[k], k + 1, row[k + 1]),
            }),
        );
        let check = up_rank_check(n, k)?;
        report.push(
            format!("injective k={k}"),
            (!check.injective).then(|| Witness::Level {
                rank: k,
                detail: format!("rank {} < C(n,{k})", check.computed_rank),
            }),
        );
    }
    Ok(report)
}

/// Partition, saturation, symmetry and per-start-rank counts of a subset
/// chain decomposition.
pub fn verify_scd(d: &ChainDecomposition) -> VerificationReport {
    let n = d.ground().get();
    let mut report = VerificationReport::new(format!("symmetric chain decomposition over n={n}"));

    let mut owner: Vec<Option<usize>> = vec![None; 1usize << n];
    let mut overlap = None;
    for (i, c) in d.chains().iter().enumerate() {
        for x in c.subsets() {
            let slot = &mut owner[x.mask() as usize];
            if let Some(j) = *slot {
                overlap.get_or_insert(Witness::Pair {
                    rank: x.rank(),
                    first: j,
                    second: i,
                    detail: format!("both contain {x}"),
                });
            }
            *slot = Some(i);
        }
    }
    let missing = owner
        .iter()
        .position(Option::is_none)
        .map(|m| Witness::Count {
            expected: format!("subset mask {m:#b} covered"),
            found: "uncovered".into(),
        });
    report.push("partition", overlap.or(missing));

    let unsaturated = d.chains().iter().enumerate().find_map(|(i, c)| {
        c.subsets()
            .windows(2)
            .position(|w| {
                w[1].rank() != w[0].rank() + 1 || w[0].mask() & w[1].mask() != w[0].mask()
            })
            .map(|p| Witness::Chain {
                chain: i,
                detail: format!("member {} is not covered by member {}", p, p + 1),
            })
    });
    report.push("saturated", unsaturated);

    let asymmetric = d.chains().iter().enumerate().find_map(|(i, c)| {
        let s = c.subsets();
        let (a, b) = (s[0].rank(), s[s.len() - 1].rank());
        (a + b != n).then(|| Witness::Chain {
            chain: i,
            detail: format!("ranks {a}..{b} are not symmetric about {n}/2"),
        })
    });
    report.push("symmetric", asymmetric);

    let counts = (0..=n / 2).find_map(|k| {
        let found = d.chains().iter().filter(|c| c.start_rank() == k).count();
        let expected = binomial_usize(n, k) - if k > 0 { binomial_usize(n, k - 1) } else { 0 };
        (found != expected).then(|| Witness::Level {
            rank: k,
            detail: format!("{found} chains start here, expected {expected}"),
        })
    });
    report.push("start-rank-counts", counts);
    report
}

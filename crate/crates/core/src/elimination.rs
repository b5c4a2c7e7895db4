//! Exact matrix rank over the rationals.
//!
//! [`bareiss_rank`] is fraction-free elimination on big integers and is the
//! route the verifier uses. [`modular_rank`] works over `Z/p`; it never exceeds
//! the rational rank, which makes it a cheap independent lower bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

/// Mersenne prime `2^61 - 1`.
pub const LARGE_PRIME: u64 = (1 << 61) - 1;

/// Rank of a row-major integer matrix by fraction-free elimination.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let m = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        let divisor = &prev;
        tail.par_iter_mut().for_each(|row| {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let mut t = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    t -= &factor * &pivot_row[j];
                }
                // Sylvester's identity makes this division exact.
                row[j] = t / divisor;
            }
        });
        prev = rows[r][c].clone();
        r += 1;
    }
    r
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank of the matrix reduced modulo the prime `p`.
pub fn modular_rank(rows: &[Vec<BigInt>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(|x| reduce(x, p)).collect())
        .collect();
    let m = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(piv) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            row[c] = 0;
            for j in c + 1..ncols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    /// Plain Gauss-Jordan over the rationals; the independent oracle.
    #[allow(clippy::needless_range_loop)]
    fn rational_rank(rows: &[Vec<BigInt>]) -> usize {
        let mut a: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let m = a.len();
        let n = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let pivot = a[r][c].clone();
            for i in 0..m {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &pivot;
                    for j in 0..n {
                        let d = &f * &a[r][j];
                        a[i][j] -= d;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn known_ranks() {
        assert_eq!(bareiss_rank(mat(&[&[1], &[1]])), 1);
        assert_eq!(bareiss_rank(mat(&[&[1, 1]])), 1);
        assert_eq!(bareiss_rank(mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(mat(&[&[0, 1, 2], &[0, 2, 5], &[0, 0, 0]])), 2);
        assert_eq!(bareiss_rank(mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(Vec::new()), 0);
        assert_eq!(
            bareiss_rank(mat(&[&[2, 3, 5], &[7, 11, 13], &[17, 19, 23]])),
            3
        );
    }

    #[test]
    fn modular_rank_handles_negatives_and_deficiency() {
        assert_eq!(
            modular_rank(&mat(&[&[1, 2, 3], &[2, 4, 6]]), LARGE_PRIME),
            1
        );
        assert_eq!(modular_rank(&mat(&[&[-1, 1], &[1, 1]]), LARGE_PRIME), 2);
        assert_eq!(modular_rank(&mat(&[&[-1, 1], &[1, 1]]), 2), 1);
    }

    #[test]
    fn a_prime_multiple_fools_only_the_modular_route() {
        let p = BigInt::from(LARGE_PRIME);
        let m = vec![
            vec![p.clone(), BigInt::zero()],
            vec![BigInt::zero(), BigInt::one()],
        ];
        assert_eq!(modular_rank(&m, LARGE_PRIME), 1);
        assert_eq!(bareiss_rank(m), 2);
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<BigInt>>> {
        (1usize..7, 1usize..7, 1usize..4).prop_flat_map(|(r, c, k)| {
            // product of random r×k and k×c factors gives rank ≤ k
            (
                prop::collection::vec(prop::collection::vec(-4i64..5, k), r),
                prop::collection::vec(prop::collection::vec(-4i64..5, c), k),
            )
                .prop_map(move |(a, b)| {
                    (0..r)
                        .map(|i| {
                            (0..c)
                                .map(|j| {
                                    BigInt::from((0..k).map(|t| a[i][t] * b[t][j]).sum::<i64>())
                                })
                                .collect()
                        })
                        .collect()
                })
        })
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_rational_elimination(m in arb_matrix()) {
            let expected = rational_rank(&m);
            prop_assert_eq!(bareiss_rank(m.clone()), expected);
            prop_assert!(modular_rank(&m, LARGE_PRIME) <= expected);
        }
    }
}

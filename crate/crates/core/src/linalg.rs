//! Exact linear algebra: fraction-free rank over ℤ and rational solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Rank by Bareiss fraction-free elimination. Every intermediate entry is a
/// minor of the input, so the division is always exact.
pub fn rank_fraction_free(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let v = &pivot * &rows[r][c] - &factor * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank by ordinary Gaussian elimination over ℚ.
pub fn rank_rational(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let factor = &rows[r][col] / &pivot;
            if factor.is_zero() {
                continue;
            }
            for c in col..ncols {
                let v = &rows[rank][c] * &factor;
                rows[r][c] -= v;
            }
        }
        rank += 1;
    }
    rank
}

/// Clears denominators row by row.
pub fn integer_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect()
        })
        .collect()
}

/// One solution of `a · x = b`, or `None` when inconsistent. Free variables
/// are set to zero.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.len(), b.len());
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for c in col..=ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..m.len() {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=ncols {
                let v = &m[rank][c] * &factor;
                m[r][c] -= v;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = m[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use proptest::prelude::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank_fraction_free(big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_fraction_free(big(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank_fraction_free(big(&[&[0, 0, 0]])), 0);
        assert_eq!(rank_fraction_free(Vec::new()), 0);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let x = solve(&a, &[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        let a = vec![vec![int(1)], vec![int(2)]];
        assert!(solve(&a, &[int(1), int(3)]).is_none());
        let a = vec![vec![ratio(1, 2), int(0)]];
        assert_eq!(solve(&a, &[int(1)]).unwrap(), vec![int(2), int(0)]);
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_rational_elimination(
            rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 0..6)
        ) {
            let q: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
            let z = integer_rows(&q);
            prop_assert_eq!(rank_fraction_free(z), rank_rational(q));
        }
    }
}

//! Exact rank computation.
//!
//! Rank questions here (self-stresses, affine span) are yes/no algebraic
//! properties of highly non-generic configurations, so ranks are computed by
//! fraction-free (Bareiss) elimination over the integers after clearing
//! denominators row by row.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::rational::Rational;

/// Rank of a rational matrix, exactly.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    integer_rank(cleared)
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        l = l.lcm(x.denom());
    }
    row.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

/// Fraction-free Gaussian elimination; every intermediate entry is a minor of
/// the input, so divisions below are exact.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        // pivot: first row with a nonzero entry in this column
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in row + 1..nrows {
            for c in col + 1..ncols {
                let v = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = &v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Affine rank of a point list: rank of the difference matrix to the first
/// point. An empty or single-point list has affine rank 0.
pub fn affine_rank(points: &[Vec<Rational>]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rational_rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Determinant-based rank oracle: largest k with a nonsingular k x k minor.
    fn rank_by_minors(rows: &[&[i64]]) -> usize {
        let nr = rows.len();
        let nc = rows[0].len();
        let det = |ri: &[usize], ci: &[usize]| -> i128 {
            // Laplace expansion; minors stay tiny in tests.
            fn go(rows: &[&[i64]], ri: &[usize], ci: &[usize]) -> i128 {
                if ri.is_empty() {
                    return 1;
                }
                let mut acc: i128 = 0;
                for (pos, &c) in ci.iter().enumerate() {
                    let sub_r: Vec<usize> = ri[1..].to_vec();
                    let sub_c: Vec<usize> = ci
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != pos)
                        .map(|(_, &x)| x)
                        .collect();
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    acc += sign * rows[ri[0]][c] as i128 * go(rows, &sub_r, &sub_c);
                }
                acc
            }
            go(rows, ri, ci)
        };
        for k in (1..=nr.min(nc)).rev() {
            for ri in crate::combin::k_subsets(nr, k) {
                for ci in crate::combin::k_subsets(nc, k) {
                    let rl = crate::combin::mask_elements(ri);
                    let cl = crate::combin::mask_elements(ci);
                    if det(&rl, &cl) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn integer_rank_matches_minor_oracle() {
        let cases: Vec<Vec<&[i64]>> = vec![
            vec![&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]],
            vec![&[1, 0], &[0, 1], &[1, 1]],
            vec![&[0, 0], &[0, 0]],
            vec![&[2, 3, 5], &[7, 11, 13], &[17, 19, 23]],
            vec![&[1, 2, 3, 4], &[5, 6, 7, 8], &[9, 10, 11, 12]],
        ];
        for rows in cases {
            assert_eq!(integer_rank(int_matrix(&rows)), rank_by_minors(&rows));
        }
    }

    #[test]
    fn rational_rank_clears_denominators() {
        // all three rows are rational multiples of (1/2, 1/3)
        let dep3 = vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat_i(1)],
            vec![rat_i(3), rat_i(2)],
        ];
        assert_eq!(rational_rank(&dep3), 1);
        let full = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), rat_i(5)]];
        assert_eq!(rational_rank(&full), 2);
        let dep = vec![vec![rat(1, 2), rat(1, 4)], vec![rat_i(2), rat_i(1)]];
        assert_eq!(rational_rank(&dep), 1);
    }

    #[test]
    fn affine_rank_basics() {
        let tri = vec![
            vec![rat_i(1), rat_i(0), rat_i(0)],
            vec![rat_i(0), rat_i(1), rat_i(0)],
            vec![rat_i(0), rat_i(0), rat_i(1)],
        ];
        assert_eq!(affine_rank(&tri), 2);
        let seg = vec![vec![rat_i(0)], vec![rat_i(5)]];
        assert_eq!(affine_rank(&seg), 1);
    }
}

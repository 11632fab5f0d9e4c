//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact_poly::ExactRational;

/// Brings `rows` to row echelon form in place (Bareiss). Pivots are the
/// first nonzero entry in column order. Returns the pivot column of each
/// nonzero row.
pub(crate) fn bareiss_echelon(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A basis of the null space of the matrix given by `rows` (`cols` columns),
/// one vector per free column with that column's entry equal to one.
pub(crate) fn kernel_basis(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<ExactRational>> {
    let mut work = rows.to_vec();
    let pivots = bareiss_echelon(&mut work, cols);
    let is_pivot = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![ExactRational::zero(); cols];
        x[free] = ExactRational::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = ExactRational::zero();
            for j in pc + 1..cols {
                if !work[r][j].is_zero() && !x[j].is_zero() {
                    acc += ExactRational::from_integer(work[r][j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / ExactRational::from_integer(work[r][pc].clone());
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn apply(rows: &[Vec<BigInt>], x: &[ExactRational]) -> Vec<ExactRational> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .zip(x)
                    .map(|(a, b)| ExactRational::from_integer(a.clone()) * b)
                    .sum()
            })
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = kernel_basis(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(apply(&a, &k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert!(kernel_basis(&a, 2).is_empty());
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(kernel_basis(&[], 3).len(), 3);
    }

    #[test]
    fn skipped_pivot_columns() {
        let a = m(&[&[0, 2, 4, 1], &[0, 1, 2, 0], &[0, 3, 6, 5]]);
        let k = kernel_basis(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&a, v).iter().all(Zero::is_zero));
        }
    }
}

//! Rational elimination helpers: kernel bases of integer matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SparseMatrix;

/// Sparse matrix over `Q`, used internally for reduced row echelon form.
#[derive(Clone, Debug)]
pub struct RatMatrix {
    rows: Vec<BTreeMap<usize, BigRational>>,
    cols: usize,
}

impl RatMatrix {
    pub fn from_integer(m: &SparseMatrix) -> Self {
        let mut rows: Vec<BTreeMap<usize, BigRational>> = alloc::vec![BTreeMap::new(); m.rows()];
        for (r, c, v) in m.entries() {
            let slot = rows[*r]
                .entry(*c)
                .or_insert_with(BigRational::zero);
            *slot += BigRational::from_integer(v.clone());
        }
        for row in rows.iter_mut() {
            row.retain(|_, v| !v.is_zero());
        }
        Self { rows, cols: m.cols() }
    }

    /// Reduced row echelon form; returns the pivot column of each
    /// nonzero row, in order.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(pr) = (next_row..self.rows.len())
                .find(|&r| self.rows[r].get(&col).map_or(false, |v| !v.is_zero()))
            else {
                continue;
            };
            self.rows.swap(next_row, pr);
            let inv = self.rows[next_row][&col].recip();
            let scaled: BTreeMap<usize, BigRational> =
                self.rows[next_row].iter().map(|(c, v)| (*c, v * &inv)).collect();
            self.rows[next_row] = scaled;
            for r in 0..self.rows.len() {
                if r == next_row {
                    continue;
                }
                let Some(f) = self.rows[r].get(&col).cloned() else { continue };
                if f.is_zero() {
                    continue;
                }
                let pivot_row = self.rows[next_row].clone();
                let row = &mut self.rows[r];
                for (c, v) in pivot_row {
                    let slot = row.entry(c).or_insert_with(BigRational::zero);
                    *slot -= &f * &v;
                    if slot.is_zero() {
                        row.remove(&c);
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows.len() {
                break;
            }
        }
        pivots
    }
}

/// Basis of `ker(m)` over `Q`, scaled to primitive integer columns.
/// The result has `m.cols()` rows and `nullity` columns.
pub fn kernel_basis_q(m: &SparseMatrix) -> SparseMatrix {
    let mut rm = RatMatrix::from_integer(m);
    let pivots = rm.rref();
    let mut is_pivot = alloc::vec![false; m.cols()];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out_cols: Vec<Vec<(usize, BigInt)>> = Vec::new();
    for free in 0..m.cols() {
        if is_pivot[free] {
            continue;
        }
        // x_free = 1, pivot variables read off the reduced rows.
        let mut entries: Vec<(usize, BigRational)> = alloc::vec![(free, BigRational::one())];
        for (row, &pc) in pivots.iter().enumerate() {
            if let Some(v) = rm.rows[row].get(&free) {
                if !v.is_zero() {
                    entries.push((pc, -v.clone()));
                }
            }
        }
        let mut denom = BigInt::one();
        for (_, v) in &entries {
            denom = num_integer::Integer::lcm(&denom, v.denom());
        }
        let mut col: Vec<(usize, BigInt)> = entries
            .into_iter()
            .map(|(r, v)| (r, v.numer() * (&denom / v.denom())))
            .collect();
        let mut g = BigInt::zero();
        for (_, v) in &col {
            g = num_integer::Integer::gcd(&g, v);
        }
        if !g.is_zero() && !g.is_one() {
            for (_, v) in col.iter_mut() {
                *v = &*v / &g;
            }
        }
        col.sort_by_key(|(r, _)| *r);
        out_cols.push(col);
    }
    let mut out = SparseMatrix::new(m.cols(), out_cols.len());
    for (c, col) in out_cols.into_iter().enumerate() {
        for (r, v) in col {
            if !v.is_zero() {
                out.push(r, c, v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank, Field};

    #[test]
    fn kernel_of_sum_map() {
        // [[1, 1, 1]] has a 2-dimensional kernel.
        let m = SparseMatrix::from_entries(1, 3, [(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
        let k = kernel_basis_q(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.multiply(&k).is_zero_matrix());
        assert_eq!(rank(&k, Field::Q), 2);
    }

    #[test]
    fn kernel_with_denominators() {
        // [[2, 3]] -> kernel generated by (3, -2), primitive.
        let m = SparseMatrix::from_entries(1, 2, [(0, 0, 2), (0, 1, 3)]);
        let k = kernel_basis_q(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.multiply(&k).is_zero_matrix());
        let vals: Vec<i64> = k
            .entries()
            .iter()
            .map(|(_, _, v)| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(vals.iter().map(|v| v.abs()).max(), Some(3));
    }
}

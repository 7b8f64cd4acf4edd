//! Unimodular diagonalization of sparse integer matrices.
//!
//! Pivots are chosen to minimise `|value|` first and projected fill-in
//! second; non-divisible entries are handled with Bezout row/column
//! combinations, which keeps coefficient growth in check.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SparseMatrix;

struct Work {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_index: Vec<BTreeSet<usize>>,
    active_rows: BTreeSet<usize>,
    active_cols: BTreeSet<usize>,
}

impl Work {
    fn new(m: &SparseMatrix) -> Self {
        let mut rows: Vec<BTreeMap<usize, BigInt>> = alloc::vec![BTreeMap::new(); m.rows()];
        let mut col_index: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.entries() {
            let slot = rows[*r].entry(*c).or_insert_with(BigInt::zero);
            *slot += v;
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row.retain(|_, v| !v.is_zero());
            for c in row.keys() {
                col_index[*c].insert(r);
            }
        }
        let active_rows = (0..m.rows()).collect();
        let active_cols = (0..m.cols()).collect();
        Self { rows, col_index, active_rows, active_cols }
    }

    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            if self.rows[r].remove(&c).is_some() {
                self.col_index[c].remove(&r);
            }
        } else {
            if self.rows[r].insert(c, v).is_none() {
                self.col_index[c].insert(r);
            }
        }
    }

    fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r].get(&c).cloned().unwrap_or_else(BigInt::zero)
    }

    /// row_a <- x * row_a + y * row_b ; row_b <- z * row_a + w * row_b
    fn row_combine(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
        let cols: BTreeSet<usize> =
            self.rows[a].keys().chain(self.rows[b].keys()).copied().collect();
        for c in cols {
            let va = self.get(a, c);
            let vb = self.get(b, c);
            self.set(a, c, x * &va + y * &vb);
            self.set(b, c, z * &va + w * &vb);
        }
    }

    fn col_combine(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
        let rows: BTreeSet<usize> =
            self.col_index[a].iter().chain(self.col_index[b].iter()).copied().collect();
        for r in rows {
            let va = self.get(r, a);
            let vb = self.get(r, b);
            self.set(r, a, x * &va + y * &vb);
            self.set(r, b, z * &va + w * &vb);
        }
    }

    fn pick_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(u64, usize, usize, usize)> = None;
        for &r in &self.active_rows {
            for (&c, v) in &self.rows[r] {
                if !self.active_cols.contains(&c) {
                    continue;
                }
                let bits = v.magnitude().bits();
                let fill = (self.rows[r].len() - 1) * (self.col_index[c].len() - 1);
                let key = (bits, fill, r, c);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                    if bits == 1 && fill == 0 {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, _, r, c)| (r, c))
    }

    /// Clear column `pc` against the pivot at `(pr, pc)`. Returns true
    /// when something changed.
    fn clear_column(&mut self, pr: usize, pc: usize) -> bool {
        let mut changed = false;
        loop {
            let Some(&r) = self.col_index[pc].iter().find(|&&r| r != pr) else {
                return changed;
            };
            changed = true;
            let p = self.get(pr, pc);
            let x = self.get(r, pc);
            if (&x % &p).is_zero() {
                let q = -(&x / &p);
                self.row_combine(pr, r, &BigInt::one(), &BigInt::zero(), &q, &BigInt::one());
            } else {
                let e = p.extended_gcd(&x);
                let (g, alpha, beta) = (e.gcd, e.x, e.y);
                let mz = -(&x / &g);
                let mw = &p / &g;
                self.row_combine(pr, r, &alpha, &beta, &mz, &mw);
            }
        }
    }

    fn clear_row(&mut self, pr: usize, pc: usize) -> bool {
        let mut changed = false;
        loop {
            let Some(&c) = self.rows[pr].keys().find(|&&c| c != pc) else {
                return changed;
            };
            changed = true;
            let p = self.get(pr, pc);
            let x = self.get(pr, c);
            if (&x % &p).is_zero() {
                let q = -(&x / &p);
                self.col_combine(pc, c, &BigInt::one(), &BigInt::zero(), &q, &BigInt::one());
            } else {
                let e = p.extended_gcd(&x);
                let (g, alpha, beta) = (e.gcd, e.x, e.y);
                let mz = -(&x / &g);
                let mw = &p / &g;
                self.col_combine(pc, c, &alpha, &beta, &mz, &mw);
            }
        }
    }
}

/// Diagonalize by unimodular row/column operations; returns the nonzero
/// diagonal values (made positive, in elimination order).
pub(super) fn diagonalize(m: &SparseMatrix) -> Vec<BigInt> {
    let mut w = Work::new(m);
    let mut diag = Vec::new();
    while let Some((pr, pc)) = w.pick_pivot() {
        loop {
            let a = w.clear_column(pr, pc);
            let b = w.clear_row(pr, pc);
            if !a && !b {
                break;
            }
        }
        diag.push(w.get(pr, pc).abs());
        w.active_rows.remove(&pr);
        w.active_cols.remove(&pc);
    }
    diag
}

/// Smooth a diagonal into the invariant-factor chain using
/// `diag(a, b) ~ diag(gcd(a, b), lcm(a, b))`.
pub(super) fn divisibility_chain(diag: &mut Vec<BigInt>) {
    diag.sort();
    let n = diag.len();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                if (&diag[j] % &diag[i]).is_zero() {
                    continue;
                }
                let g = diag[i].gcd(&diag[j]);
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_heavy_matrix() {
        // 4x4 example with known invariant factors (1, 3, 21, 0).
        let m = SparseMatrix::from_entries(
            4,
            4,
            [
                (0, 0, -6),
                (0, 1, 111),
                (0, 2, -36),
                (0, 3, 6),
                (1, 0, 5),
                (1, 1, -672),
                (1, 2, 210),
                (1, 3, 74),
                (2, 1, -255),
                (2, 2, 81),
                (2, 3, 24),
                (3, 0, -7),
                (3, 1, 255),
                (3, 2, -81),
                (3, 3, -10),
            ],
        );
        let f = super::super::smith_normal_form(&m);
        let expect: Vec<BigInt> =
            [1, 3, 21, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(f, expect);
    }

    #[test]
    fn chain_smoothing() {
        let mut d: Vec<BigInt> = [4, 6].iter().map(|&v| BigInt::from(v)).collect();
        divisibility_chain(&mut d);
        assert_eq!(d, alloc::vec![BigInt::from(2), BigInt::from(12)]);
    }
}

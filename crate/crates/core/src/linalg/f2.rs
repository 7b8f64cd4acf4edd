//! Bit-packed matrices over `Z/2`.

use alloc::vec::Vec;

const WORD: usize = 64;

/// Dense bit matrix; rows are `u64` words.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD).max(1);
        Self { rows, cols, words_per_row, data: alloc::vec![0; rows * words_per_row] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn flip(&mut self, row: usize, col: usize) {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.words_per_row + col / WORD] ^= 1 << (col % WORD);
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.data[row * self.words_per_row + col / WORD] >> (col % WORD) & 1 == 1
    }

    fn row_xor(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words_per_row, src * self.words_per_row);
        for k in 0..self.words_per_row {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    /// Rank by in-place Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.clone().eliminate()
    }

    fn eliminate(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            if pivot != rank {
                for k in 0..self.words_per_row {
                    self.data.swap(rank * self.words_per_row + k, pivot * self.words_per_row + k);
                }
            }
            for r in 0..self.rows {
                if r != rank && self.get(r, col) {
                    self.row_xor(r, rank);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Basis of the right kernel, one bit-vector of length `cols` per
    /// basis element.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut is_pivot = alloc::vec![false; m.cols];
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            if pivot != rank {
                for k in 0..m.words_per_row {
                    m.data.swap(rank * m.words_per_row + k, pivot * m.words_per_row + k);
                }
            }
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.row_xor(r, rank);
                }
            }
            pivot_col_of_row.push(col);
            is_pivot[col] = true;
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        let words = m.cols.div_ceil(WORD).max(1);
        let mut basis = Vec::new();
        for free_col in 0..m.cols {
            if is_pivot[free_col] {
                continue;
            }
            let mut v = alloc::vec![0u64; words];
            v[free_col / WORD] |= 1 << (free_col % WORD);
            for (row, &pc) in pivot_col_of_row.iter().enumerate() {
                if m.get(row, free_col) {
                    v[pc / WORD] |= 1 << (pc % WORD);
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let mut m = BitMatrix::new(2, 3);
        // rows: (1,1,0), (0,1,1)
        m.flip(0, 0);
        m.flip(0, 1);
        m.flip(1, 1);
        m.flip(1, 2);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // kernel generated by (1,1,1)
        assert_eq!(k[0][0] & 0b111, 0b111);
    }

    #[test]
    fn wide_matrix() {
        let mut m = BitMatrix::new(1, 130);
        m.flip(0, 0);
        m.flip(0, 129);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis().len(), 129);
    }
}

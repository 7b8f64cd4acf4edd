//! Exact sparse linear algebra over `Z`, `Q` and `Z/2`.
//!
//! One integer matrix type carries every boundary map; the coefficient
//! ring is chosen per computation. Ranks and kernels over `Q` reuse the
//! unimodular integer elimination, `Z/2` work is bit-packed, torsion
//! comes from the Smith normal form of the incoming differential.

mod f2;
mod rat;
mod snf;

pub use f2::BitMatrix;
pub use rat::RatMatrix;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficient choice for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Ring {
    Z,
    Q,
    F2,
}

impl Ring {
    pub fn label(self) -> &'static str {
        match self {
            Ring::Z => "Z",
            Ring::Q => "Q",
            Ring::F2 => "F2",
        }
    }
}

/// Fields available for rank computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Q,
    F2,
}

/// Coordinate-format sparse matrix with integer entries.
///
/// `rows` is the target dimension and `cols` the source dimension, so a
/// matrix acts on column vectors from the left.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, BigInt)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: Vec::new() }
    }

    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut m = Self::new(rows, cols);
        for (r, c, v) in entries {
            m.push(r, c, BigInt::from(v));
        }
        m
    }

    pub fn push(&mut self, row: usize, col: usize, value: BigInt) {
        assert!(row < self.rows && col < self.cols, "entry out of range");
        if !value.is_zero() {
            self.entries.push((row, col, value));
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, BigInt)] {
        &self.entries
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.cols, self.rows);
        for (r, c, v) in &self.entries {
            t.entries.push((*c, *r, v.clone()));
        }
        t
    }

    /// Matrix product `self * rhs`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut row_major: Vec<Vec<(usize, BigInt)>> = alloc::vec![Vec::new(); rhs.rows];
        for (r, c, v) in &rhs.entries {
            row_major[*r].push((*c, v.clone()));
        }
        let mut acc: Vec<alloc::collections::BTreeMap<usize, BigInt>> =
            alloc::vec![Default::default(); self.rows];
        for (r, c, v) in &self.entries {
            for (cc, vv) in &row_major[*c] {
                let slot = acc[*r].entry(*cc).or_insert_with(BigInt::zero);
                *slot += v * vv;
            }
        }
        let mut out = Self::new(self.rows, rhs.cols);
        for (r, row) in acc.into_iter().enumerate() {
            for (c, v) in row {
                if !v.is_zero() {
                    out.entries.push((r, c, v));
                }
            }
        }
        out
    }

    pub fn to_bit_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::new(self.rows, self.cols);
        for (r, c, v) in &self.entries {
            if v.bit(0) {
                m.flip(*r, *c);
            }
        }
        m
    }
}

/// Rank over the requested field.
pub fn rank(m: &SparseMatrix, field: Field) -> usize {
    match field {
        Field::F2 => m.to_bit_matrix().rank(),
        Field::Q => snf::diagonalize(m).len(),
    }
}

/// Invariant factors `d1 | d2 | ...` padded with trailing zeros to
/// `min(rows, cols)`.
pub fn smith_normal_form(m: &SparseMatrix) -> Vec<BigInt> {
    let mut diag = snf::diagonalize(m);
    snf::divisibility_chain(&mut diag);
    let n = core::cmp::min(m.rows(), m.cols());
    while diag.len() < n {
        diag.push(BigInt::zero());
    }
    diag
}

/// Homology at the middle term of `d_in : A -> C`, `d_out : C -> B`.
///
/// Returns the free rank and the multiset of torsion coefficients
/// (empty over a field). Fails when `d_out . d_in != 0`, which signals
/// a bug in complex construction.
pub fn homology(
    d_in: &SparseMatrix,
    d_out: &SparseMatrix,
    ring: Ring,
) -> Result<(usize, Vec<BigInt>), String> {
    if d_in.rows() != d_out.cols() {
        return Err(String::from("middle dimensions disagree"));
    }
    if !d_out.multiply(d_in).is_zero_matrix() {
        return Err(String::from("d_out . d_in != 0"));
    }
    let dim = d_out.cols();
    match ring {
        Ring::F2 => {
            let r_in = rank(d_in, Field::F2);
            let r_out = rank(d_out, Field::F2);
            Ok((dim - r_out - r_in, Vec::new()))
        }
        Ring::Q => {
            let r_in = rank(d_in, Field::Q);
            let r_out = rank(d_out, Field::Q);
            Ok((dim - r_out - r_in, Vec::new()))
        }
        Ring::Z => {
            // im(d_in) <= ker(d_out) and Z^dim / ker(d_out) is free, so
            // the torsion of ker/im equals the torsion of Z^dim / im.
            let factors = smith_normal_form(d_in);
            let r_in = factors.iter().filter(|d| !d.is_zero()).count();
            let r_out = rank(d_out, Field::Q);
            let torsion: Vec<BigInt> = factors
                .into_iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .collect();
            Ok((dim - r_out - r_in, torsion))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rank_examples() {
        let m = SparseMatrix::from_entries(2, 2, [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
        assert_eq!(rank(&m, Field::F2), 1);
        assert_eq!(rank(&m, Field::Q), 1);

        let id3 = SparseMatrix::from_entries(3, 3, [(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
        assert_eq!(rank(&id3, Field::Q), 3);

        let m = SparseMatrix::from_entries(2, 2, [(0, 0, 2), (0, 1, 4), (1, 0, 6), (1, 1, 8)]);
        assert_eq!(rank(&m, Field::Q), 2);
    }

    #[test]
    fn snf_examples() {
        let id2 = SparseMatrix::from_entries(2, 2, [(0, 0, 1), (1, 1, 1)]);
        assert_eq!(smith_normal_form(&id2), alloc::vec![big(1), big(1)]);

        let m = SparseMatrix::from_entries(2, 2, [(0, 0, 2), (0, 1, 4), (1, 0, 6), (1, 1, 8)]);
        assert_eq!(smith_normal_form(&m), alloc::vec![big(2), big(4)]);

        let z = SparseMatrix::new(2, 3);
        assert_eq!(smith_normal_form(&z), alloc::vec![big(0), big(0)]);
    }

    #[test]
    fn homology_examples() {
        // d_in = 0, d_out = 0 on a rank 3 middle group over Q.
        let d_in = SparseMatrix::new(3, 0);
        let d_out = SparseMatrix::new(0, 3);
        assert_eq!(homology(&d_in, &d_out, Ring::Q).unwrap(), (3, alloc::vec![]));

        // d_in = (x2) : Z -> Z, d_out = 0.
        let d_in = SparseMatrix::from_entries(1, 1, [(0, 0, 2)]);
        let d_out = SparseMatrix::new(0, 1);
        assert_eq!(homology(&d_in, &d_out, Ring::Z).unwrap(), (0, alloc::vec![big(2)]));

        // d_in = 0, d_out = [[1,1]] over Z/2 on middle rank 2.
        let d_in = SparseMatrix::new(2, 0);
        let d_out = SparseMatrix::from_entries(1, 2, [(0, 0, 1), (0, 1, 1)]);
        assert_eq!(homology(&d_in, &d_out, Ring::F2).unwrap(), (1, alloc::vec![]));
    }

    #[test]
    fn homology_rejects_bad_composition() {
        let d_in = SparseMatrix::from_entries(1, 1, [(0, 0, 1)]);
        let d_out = SparseMatrix::from_entries(1, 1, [(0, 0, 1)]);
        assert!(homology(&d_in, &d_out, Ring::Q).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..7, r * c).prop_map(move |vals| {
                let mut m = SparseMatrix::new(r, c);
                for (idx, v) in vals.into_iter().enumerate() {
                    if v != 0 {
                        m.push(idx / c, idx % c, BigInt::from(v));
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn snf_chain_divides(m in arb_matrix()) {
            let f = smith_normal_form(&m);
            for w in f.windows(2) {
                if !w[0].is_zero() {
                    if w[1].is_zero() {
                        continue;
                    }
                    prop_assert!((&w[1] % &w[0]).is_zero());
                } else {
                    prop_assert!(w[1].is_zero());
                }
            }
        }

        #[test]
        fn rank_q_counts_nonzero_factors(m in arb_matrix()) {
            let f = smith_normal_form(&m);
            let nonzero = f.iter().filter(|d| !d.is_zero()).count();
            prop_assert_eq!(rank(&m, Field::Q), nonzero);
        }

        #[test]
        fn f2_rank_at_most_q_rank(m in arb_matrix()) {
            prop_assert!(rank(&m, Field::F2) <= rank(&m, Field::Q));
        }
    }
}

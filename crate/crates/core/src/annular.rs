//! Triply graded annular Khovanov homology and its companions: the
//! induced `dm2` map on homology, the `sl2` character decomposition,
//! the distinguished braid class at the bottom annular grading, and the
//! annular Jones state sum.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::diagram::PlanarDiagram;
use crate::khovanov::{build_cube, CubeError, GradedComplex, Group, HomologyTable, Ring};
use crate::linalg::{self, Field, SparseMatrix};
use crate::poly::Laurent2;

/// Homology of the annular-grading-preserving differential, bucketed
/// by `(i, j, k)`.
pub fn akh(d: &PlanarDiagram, ring: Ring) -> Result<HomologyTable, CubeError> {
    let complex = build_cube(d, None)?;
    akh_of_complex(&complex, ring)
}

pub fn akh_of_complex(complex: &GradedComplex, ring: Ring) -> Result<HomologyTable, CubeError> {
    let mut keys: Vec<(i32, i32)> = complex.bucket_keys().map(|(_, j, k)| (j, k)).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut table = HomologyTable::new(ring);
    for (j, k) in keys {
        let chain = complex.akh_chain(j, k);
        for (&i, (src, d_out)) in &chain {
            let dim = src.len();
            let d_in = match chain.get(&(i - 1)) {
                Some((_, m)) => m.clone(),
                None => SparseMatrix::new(dim, 0),
            };
            let (free, torsion) =
                linalg::homology(&d_in, d_out, ring).map_err(CubeError::Internal)?;
            table.insert(i, j, Some(k), Group { free, torsion });
        }
    }
    Ok(table)
}

/// Annular Jones polynomial by direct state sum: the graded Euler
/// characteristic of the annular chain groups, no homology involved.
pub fn annular_jones(d: &PlanarDiagram) -> Laurent2 {
    let c = d.crossing_count();
    let (n_plus, n_minus) = d.signed_crossing_counts();
    // essential circles contribute q t + q^-1 t^-1, inessential q + q^-1
    let essential_factor = {
        let mut p = Laurent2::zero();
        p.add_term(1, 1, BigInt::from(1));
        p.add_term(-1, -1, BigInt::from(1));
        p
    };
    let trivial_factor = {
        let mut p = Laurent2::zero();
        p.add_term(1, 0, BigInt::from(1));
        p.add_term(-1, 0, BigInt::from(1));
        p
    };
    let mut total = Laurent2::zero();
    for s in 0..1u64 << c {
        let r = d.resolve(s);
        let weight = s.count_ones() as i32;
        let sign = if (weight - n_minus as i32) % 2 == 0 { 1 } else { -1 };
        let mut term = Laurent2::monomial(
            weight + n_plus as i32 - 2 * n_minus as i32,
            0,
            BigInt::from(sign),
        );
        for circle in 0..r.circle_count() {
            term = &term * if r.essential(circle) { &essential_factor } else { &trivial_factor };
        }
        total = &total + &term;
    }
    total
}

/// Graded Euler characteristic of an annular table in `(q, t)`.
pub fn euler_qt(table: &HomologyTable) -> Laurent2 {
    let mut p = Laurent2::zero();
    for (&(i, j, k), g) in &table.groups {
        let k = k.expect("annular table required");
        let sign = if i % 2 == 0 { 1i64 } else { -1 };
        p.add_term(j, k, BigInt::from(sign * g.free as i64));
    }
    p
}

/// Ranks of the map induced by `dm2` on the `d0`-homology, keyed by the
/// source grading `(i, j, k)` (target `(i+1, j, k-2)`).
pub fn d2_induced(
    d: &PlanarDiagram,
    field: Field,
) -> Result<BTreeMap<(i32, i32, i32), usize>, CubeError> {
    let complex = build_cube(d, None)?;
    d2_induced_of_complex(&complex, field)
}

pub fn d2_induced_of_complex(
    complex: &GradedComplex,
    field: Field,
) -> Result<BTreeMap<(i32, i32, i32), usize>, CubeError> {
    let mut out = BTreeMap::new();
    let mut keys: Vec<(i32, i32)> = complex.bucket_keys().map(|(_, j, k)| (j, k)).collect();
    keys.sort_unstable();
    keys.dedup();
    for (j, k) in keys {
        let chain = complex.akh_chain(j, k);
        let target_chain = complex.akh_chain(j, k - 2);
        for (&i, (_, d_out)) in &chain {
            // cycles at (i, j, k)
            let kernel = kernel_basis(d_out, field);
            if kernel.cols() == 0 {
                continue;
            }
            let lifted = complex.dm2_matrix(i, j, k).multiply(&kernel);
            // boundaries at (i+1, j, k-2)
            let boundary = match target_chain.get(&i) {
                Some((_, m)) => m.clone(),
                None => SparseMatrix::new(lifted.rows(), 0),
            };
            let stacked = linalg_hstack(&lifted, &boundary);
            let rank = linalg::rank(&stacked, field) - linalg::rank(&boundary, field);
            if rank > 0 {
                out.insert((i, j, k), rank);
            }
        }
    }
    Ok(out)
}

fn kernel_basis(m: &SparseMatrix, field: Field) -> SparseMatrix {
    match field {
        Field::Q => linalg::rat::kernel_basis_q(m),
        Field::F2 => {
            let bm = m.to_bit_matrix();
            let basis = bm.kernel_basis();
            let mut out = SparseMatrix::new(m.cols(), basis.len());
            for (c, vec) in basis.iter().enumerate() {
                for r in 0..m.cols() {
                    if vec[r / 64] >> (r % 64) & 1 == 1 {
                        out.push(r, c, BigInt::from(1));
                    }
                }
            }
            out
        }
    }
}

fn linalg_hstack(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    debug_assert_eq!(a.rows(), b.rows());
    let mut out = SparseMatrix::new(a.rows(), a.cols() + b.cols());
    for (r, c, v) in a.entries() {
        out.push(*r, *c, v.clone());
    }
    for (r, c, v) in b.entries() {
        out.push(*r, c + a.cols(), v.clone());
    }
    out
}

/// One irreducible character summand `V_n^i {a}`: rank `multiplicity`
/// at `(i, a - n + 2p, -n + 2p)` for `0 <= p <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sl2Summand {
    pub n: u32,
    pub i: i32,
    pub a: i32,
    pub multiplicity: usize,
}

impl Sl2Summand {
    pub fn gradings(&self) -> impl Iterator<Item = (i32, i32, i32)> + '_ {
        (0..=self.n as i32).map(move |p| (self.i, self.a - self.n as i32 + 2 * p, -(self.n as i32) + 2 * p))
    }
}

/// Expand a summand list into graded ranks.
pub fn summand_ranks(summands: &[Sl2Summand]) -> BTreeMap<(i32, i32, i32), usize> {
    let mut out = BTreeMap::new();
    for s in summands {
        for g in s.gradings() {
            *out.entry(g).or_insert(0) += s.multiplicity;
        }
    }
    out.retain(|_, m| *m > 0);
    out
}

/// Greedy character-level decomposition into `V_n` summands, peeling
/// from the lowest annular grading upwards. A residue that fits no
/// summand signals a computation bug and is an error.
pub fn sl2_decompose(table: &HomologyTable) -> Result<Vec<Sl2Summand>, String> {
    decompose_ranks(table.graded_ranks())
}

pub fn decompose_ranks(
    mut ranks: BTreeMap<(i32, i32, i32), usize>,
) -> Result<Vec<Sl2Summand>, String> {
    let mut out: Vec<Sl2Summand> = Vec::new();
    while let Some(n_max) = ranks.keys().map(|&(_, _, k)| k.unsigned_abs()).max() {
        let n = n_max as i32;
        let bottom: Vec<((i32, i32), usize)> = ranks
            .iter()
            .filter(|&(&(_, _, k), _)| k == -n)
            .map(|(&(i, j, _), &m)| ((i, j), m))
            .collect();
        if bottom.is_empty() {
            return Err(String::from("rank pattern fits no V_n summand"));
        }
        for ((i, j), mult) in bottom {
            let summand = Sl2Summand { n: n_max, i, a: j + n, multiplicity: mult };
            for g in summand.gradings() {
                let slot = ranks.get_mut(&g).ok_or_else(|| {
                    String::from("rank pattern fits no V_n summand")
                })?;
                if *slot < mult {
                    return Err(String::from("rank pattern fits no V_n summand"));
                }
                *slot -= mult;
                if *slot == 0 {
                    ranks.remove(&g);
                }
            }
            out.push(summand);
        }
        if ranks.keys().any(|&(_, _, k)| k.unsigned_abs() >= n_max && n_max > 0) {
            return Err(String::from("rank pattern fits no V_n summand"));
        }
    }
    out.sort();
    Ok(out)
}

/// Grading `(0, sl(w), -n)` of the distinguished class generating the
/// bottom annular grading of the braid closure.
pub fn transverse_class_grading(w: &BraidWord) -> (i32, i32, i32) {
    (0, w.self_linking() as i32, -(w.strand_count() as i32))
}

/// Check that the braid-closure table has rank exactly one at `k = -n`,
/// concentrated at the distinguished grading.
pub fn transverse_class_verified(w: &BraidWord, table: &HomologyTable) -> bool {
    let (i0, j0, k0) = transverse_class_grading(w);
    let at_bottom: Vec<((i32, i32, i32), usize)> = table
        .graded_ranks()
        .into_iter()
        .filter(|&((_, _, k), _)| k == k0)
        .collect();
    at_bottom == alloc::vec![((i0, j0, k0), 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::ClosureKind;

    fn closure(text: &str, n: usize, kind: ClosureKind) -> PlanarDiagram {
        PlanarDiagram::closure(&BraidWord::parse(text, n).unwrap(), kind, true).unwrap()
    }

    fn ranks(table: &HomologyTable) -> BTreeMap<(i32, i32, i32), usize> {
        table.graded_ranks()
    }

    #[test]
    fn identity_one_braid() {
        let d = closure("", 1, ClosureKind::Braid);
        let t = akh(&d, Ring::Q).unwrap();
        let mut expect = BTreeMap::new();
        expect.insert((0, 1, 1), 1);
        expect.insert((0, -1, -1), 1);
        assert_eq!(ranks(&t), expect);
    }

    #[test]
    fn euler_matches_annular_jones() {
        for (text, n, kind) in [
            ("s1", 3, ClosureKind::Braid),
            ("s1 s2^-1", 3, ClosureKind::Braid),
            ("s1^-1", 3, ClosureKind::Clasp),
            ("s1^-1", 2, ClosureKind::AugmentedBraid),
        ] {
            let d = closure(text, n, kind);
            let t = akh(&d, Ring::Q).unwrap();
            assert_eq!(euler_qt(&t), annular_jones(&d), "{} {:?}", text, kind);
        }
    }

    #[test]
    fn split_unknot_state_sum() {
        // S = b(1_1) with an extra split unknot
        let d = closure("", 1, ClosureKind::Braid).with_extra_loop(0);
        let j = annular_jones(&d);
        let mut expect = Laurent2::zero();
        for (q, t) in [(0, -1), (-2, -1), (0, 1), (2, 1)] {
            expect.add_term(q, t, BigInt::from(1));
        }
        assert_eq!(j, expect);
    }

    #[test]
    fn decompose_simple_tables() {
        // V_1^0 alone
        let mut r = BTreeMap::new();
        r.insert((0, 1, 1), 1);
        r.insert((0, -1, -1), 1);
        let s = decompose_ranks(r).unwrap();
        assert_eq!(s, alloc::vec![Sl2Summand { n: 1, i: 0, a: 0, multiplicity: 1 }]);

        // asymmetric pattern is rejected
        let mut r = BTreeMap::new();
        r.insert((0, 3, 3), 1);
        assert!(decompose_ranks(r).is_err());
    }

    #[test]
    fn transverse_grading() {
        let w = BraidWord::parse("s1", 3).unwrap();
        assert_eq!(transverse_class_grading(&w), (0, -2, -3));
        let w = BraidWord::parse("s1^-1", 3).unwrap();
        assert_eq!(transverse_class_grading(&w), (0, -4, -3));
        let w = BraidWord::parse("", 1).unwrap();
        assert_eq!(transverse_class_grading(&w), (0, -1, -1));
    }

    #[test]
    fn d2_vanishes_without_crossings() {
        let d = closure("", 3, ClosureKind::Braid);
        let r = d2_induced(&d, Field::Q).unwrap();
        assert!(r.is_empty());
    }
}

//! Cube of resolutions and bigraded Khovanov homology.
//!
//! Generators are pairs (state, labelling); each circle of a resolved
//! state carries `1` or `X`. Gradings: `i = |s| - n_minus`,
//! `j = (#1 - #X) + |s| + n_plus - 2 n_minus`, and the annular grading
//! `k` counts essential circles labelled `1` minus those labelled `X`.
//! Edge maps are the Frobenius merge/split with the cube sign
//! `(-1)^(number of 1-bits below the flipped crossing)`; the part that
//! preserves `k` is stored as `d0`, the part dropping `k` by two as
//! `dm2`. No other drop occurs.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::diagram::PlanarDiagram;
use crate::linalg::{self, SparseMatrix};
use crate::poly::LaurentPoly;

pub use crate::linalg::Ring;

/// Where the reduced-theory base point sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basepoint {
    Edge(usize),
    Loop(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubeError {
    TooManyCrossings(usize),
    BadBasepoint,
    Internal(String),
}

impl core::fmt::Display for CubeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CubeError::TooManyCrossings(c) => write!(f, "{} crossings exceed the cube limit", c),
            CubeError::BadBasepoint => write!(f, "base point not in diagram"),
            CubeError::Internal(m) => write!(f, "internal error: {}", m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    pub state: u32,
    /// Bit per circle of the state, set = labelled `X`.
    pub labels: u32,
    pub i: i32,
    pub j: i32,
    pub k: i32,
}

/// Triply graded chain groups with the split differential.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub n_plus: usize,
    pub n_minus: usize,
    gens: Vec<Generator>,
    buckets: BTreeMap<(i32, i32, i32), (usize, usize)>,
    d0: Vec<(u32, u32, i8)>,
    dm2: Vec<(u32, u32, i8)>,
}

/// Free rank plus torsion coefficients of one homology group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Group {
    pub free: usize,
    pub torsion: Vec<BigInt>,
}

/// Homology bucketed by grading; `k` is `None` for ordinary Khovanov
/// homology and `Some` for annular tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub ring: Ring,
    pub groups: BTreeMap<(i32, i32, Option<i32>), Group>,
}

impl HomologyTable {
    pub fn new(ring: Ring) -> Self {
        Self { ring, groups: BTreeMap::new() }
    }

    pub fn insert(&mut self, i: i32, j: i32, k: Option<i32>, group: Group) {
        if group.free > 0 || !group.torsion.is_empty() {
            self.groups.insert((i, j, k), group);
        }
    }

    pub fn free_rank(&self) -> usize {
        self.groups.values().map(|g| g.free).sum()
    }

    /// Rank over `Z/2` implied by a `Z` table through universal
    /// coefficients: free rank plus twice the number of 2-power
    /// torsion summands.
    pub fn implied_f2_rank(&self) -> usize {
        let two = BigInt::from(2);
        self.groups
            .values()
            .map(|g| {
                g.free
                    + 2 * g
                        .torsion
                        .iter()
                        .filter(|t| (*t % &two) == BigInt::from(0))
                        .count()
            })
            .sum()
    }

    pub fn rank_at_k(&self, k: i32) -> usize {
        self.groups
            .iter()
            .filter(|((_, _, kk), _)| *kk == Some(k))
            .map(|(_, g)| g.free)
            .sum()
    }

    /// Graded free ranks as `(i, j, k) -> rank` (annular tables).
    pub fn graded_ranks(&self) -> BTreeMap<(i32, i32, i32), usize> {
        self.groups
            .iter()
            .filter_map(|(&(i, j, k), g)| k.map(|k| ((i, j, k), g.free)))
            .filter(|&(_, r)| r > 0)
            .collect()
    }

    /// Graded Euler characteristic in `q` (ignores `k`).
    pub fn euler_q(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(i, j, _), g) in &self.groups {
            let sign = if i % 2 == 0 { 1i64 } else { -1 };
            p.add_term(j, BigInt::from(sign * g.free as i64));
        }
        p
    }

    pub fn map_gradings(&self, f: impl Fn(i32, i32, Option<i32>) -> (i32, i32, Option<i32>)) -> Self {
        let mut out = HomologyTable::new(self.ring);
        for (&(i, j, k), g) in &self.groups {
            let (i2, j2, k2) = f(i, j, k);
            out.groups.insert((i2, j2, k2), g.clone());
        }
        out
    }
}

impl GradedComplex {
    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn d0_entries(&self) -> &[(u32, u32, i8)] {
        &self.d0
    }

    pub fn dm2_entries(&self) -> &[(u32, u32, i8)] {
        &self.dm2
    }

    pub fn bucket(&self, i: i32, j: i32, k: i32) -> (usize, usize) {
        self.buckets.get(&(i, j, k)).copied().unwrap_or((0, 0))
    }

    pub fn bucket_keys(&self) -> impl Iterator<Item = (i32, i32, i32)> + '_ {
        self.buckets.keys().copied()
    }

    /// Quantum gradings present, merged over `i` and `k`.
    pub fn j_values(&self) -> Vec<i32> {
        let mut js: Vec<i32> = self.buckets.keys().map(|&(_, j, _)| j).collect();
        js.sort_unstable();
        js.dedup();
        js
    }

    fn gens_with(&self, pred: impl Fn(&Generator) -> bool) -> Vec<usize> {
        (0..self.gens.len()).filter(|&g| pred(&self.gens[g])).collect()
    }

    /// Matrix of the given entries between two generator index sets.
    fn matrix_between(
        &self,
        entries: &[(u32, u32, i8)],
        source: &[usize],
        target: &[usize],
    ) -> SparseMatrix {
        let mut src_pos: BTreeMap<usize, usize> = BTreeMap::new();
        for (p, &g) in source.iter().enumerate() {
            src_pos.insert(g, p);
        }
        let mut tgt_pos: BTreeMap<usize, usize> = BTreeMap::new();
        for (p, &g) in target.iter().enumerate() {
            tgt_pos.insert(g, p);
        }
        let mut m = SparseMatrix::new(target.len(), source.len());
        for &(from, to, c) in entries {
            if let (Some(&col), Some(&row)) = (src_pos.get(&(from as usize)), tgt_pos.get(&(to as usize)))
            {
                m.push(row, col, BigInt::from(c));
            }
        }
        m
    }

    /// Chain `i -> matrix` of the full differential restricted to one
    /// quantum grading.
    pub fn kh_chain(&self, j: i32) -> BTreeMap<i32, (Vec<usize>, SparseMatrix)> {
        let mut is: Vec<i32> =
            self.buckets.keys().filter(|&&(_, jj, _)| jj == j).map(|&(i, _, _)| i).collect();
        is.sort_unstable();
        is.dedup();
        let mut all: Vec<(u32, u32, i8)> = self.d0.clone();
        all.extend_from_slice(&self.dm2);
        let mut out = BTreeMap::new();
        for &i in &is {
            let src = self.gens_with(|g| g.i == i && g.j == j);
            let tgt = self.gens_with(|g| g.i == i + 1 && g.j == j);
            let m = self.matrix_between(&all, &src, &tgt);
            out.insert(i, (src, m));
        }
        out
    }

    /// Chain of the annular differential restricted to one `(j, k)`.
    pub fn akh_chain(&self, j: i32, k: i32) -> BTreeMap<i32, (Vec<usize>, SparseMatrix)> {
        let mut is: Vec<i32> = self
            .buckets
            .keys()
            .filter(|&&(_, jj, kk)| jj == j && kk == k)
            .map(|&(i, _, _)| i)
            .collect();
        is.sort_unstable();
        is.dedup();
        let mut out = BTreeMap::new();
        for &i in &is {
            let src = self.gens_with(|g| g.i == i && g.j == j && g.k == k);
            let tgt = self.gens_with(|g| g.i == i + 1 && g.j == j && g.k == k);
            let m = self.matrix_between(&self.d0, &src, &tgt);
            out.insert(i, (src, m));
        }
        out
    }

    /// The `dm2` map from bucket `(i, j, k)` to `(i+1, j, k-2)`.
    pub fn dm2_matrix(&self, i: i32, j: i32, k: i32) -> SparseMatrix {
        let src = self.gens_with(|g| g.i == i && g.j == j && g.k == k);
        let tgt = self.gens_with(|g| g.i == i + 1 && g.j == j && g.k == k - 2);
        self.matrix_between(&self.dm2, &src, &tgt)
    }

    /// Check `d^2 = 0` for the total differential and both pieces.
    pub fn verify_d_squared(&self) -> Result<(), CubeError> {
        let n = self.gens.len();
        let mut out: Vec<Vec<(u32, i32, bool)>> = alloc::vec![Vec::new(); n];
        for &(f, t, c) in self.d0.iter() {
            out[f as usize].push((t, c as i32, false));
        }
        for &(f, t, c) in self.dm2.iter() {
            out[f as usize].push((t, c as i32, true));
        }
        let mut acc: BTreeMap<(u32, bool, bool), i32> = BTreeMap::new();
        for a in 0..n {
            acc.clear();
            for &(b, c1, drop1) in &out[a] {
                for &(t, c2, drop2) in &out[b as usize] {
                    *acc.entry((t, drop1, drop2)).or_insert(0) += c1 * c2;
                }
            }
            // d0 then d0; dm2 then dm2; and the mixed anticommutator
            let mut sums: BTreeMap<(u32, u8), i32> = BTreeMap::new();
            for (&(t, drop1, drop2), &v) in &acc {
                let kind = match (drop1, drop2) {
                    (false, false) => 0,
                    (true, true) => 2,
                    _ => 1,
                };
                *sums.entry((t, kind)).or_insert(0) += v;
            }
            if sums.values().any(|&v| v != 0) {
                return Err(CubeError::Internal(String::from("d^2 != 0")));
            }
        }
        Ok(())
    }
}

/// Build the cube of resolutions. With a base point the complex is the
/// reduced one: the base-point circle is labelled `X` everywhere and
/// the quantum grading is shifted up by one.
pub fn build_cube(
    d: &PlanarDiagram,
    basepoint: Option<Basepoint>,
) -> Result<GradedComplex, CubeError> {
    let c = d.crossing_count();
    if c > 28 {
        return Err(CubeError::TooManyCrossings(c));
    }
    let (n_plus, n_minus) = d.signed_crossing_counts();
    let traced = |state: u64| d.resolve(state);
    let base_circle = |r: &crate::diagram::ResolvedState| -> Result<Option<usize>, CubeError> {
        match basepoint {
            None => Ok(None),
            Some(Basepoint::Edge(e)) => {
                if e >= d.edge_count() {
                    return Err(CubeError::BadBasepoint);
                }
                Ok(Some(r.edge_circle[e]))
            }
            Some(Basepoint::Loop(l)) => {
                if l >= d.free_loops().len() {
                    return Err(CubeError::BadBasepoint);
                }
                Ok(Some(r.circle_count() - d.free_loops().len() + l))
            }
        }
    };

    // resolve all states once
    let states: Vec<crate::diagram::ResolvedState> =
        (0..1u64 << c).map(traced).collect();

    // enumerate generators state by state
    let reduced_shift = if basepoint.is_some() { 1 } else { 0 };
    let mut gens: Vec<Generator> = Vec::new();
    let mut state_offset: Vec<usize> = Vec::with_capacity(states.len());
    for (s, r) in states.iter().enumerate() {
        state_offset.push(gens.len());
        let m = r.circle_count();
        let bp = base_circle(r)?;
        let weight = (s as u64).count_ones() as i32;
        let i = weight - n_minus as i32;
        let j0 = weight + n_plus as i32 - 2 * n_minus as i32 + reduced_shift;
        for labels in 0..1u32 << m {
            if let Some(bp) = bp {
                if labels >> bp & 1 == 0 {
                    continue;
                }
            }
            let xs = labels.count_ones() as i32;
            let ones = m as i32 - xs;
            let mut k = 0i32;
            for circle in 0..m {
                if r.essential(circle) {
                    k += if labels >> circle & 1 == 1 { -1 } else { 1 };
                }
            }
            gens.push(Generator { state: s as u32, labels, i, j: j0 + ones - xs, k });
        }
    }

    // local rank of a labelling within its state block
    let local_rank = |r: &crate::diagram::ResolvedState, labels: u32| -> u32 {
        match base_circle(r).unwrap() {
            None => labels,
            Some(bp) => {
                let low = labels & ((1 << bp) - 1);
                let high = labels >> (bp + 1);
                low | (high << bp)
            }
        }
    };

    // cube edges
    let mut d0: Vec<(u32, u32, i8)> = Vec::new();
    let mut dm2: Vec<(u32, u32, i8)> = Vec::new();
    for (s, r) in states.iter().enumerate() {
        let m = r.circle_count();
        for bit in 0..c {
            if s >> bit & 1 == 1 {
                continue;
            }
            let s2 = s | (1 << bit);
            let r2 = &states[s2];
            let sign: i8 = if ((s as u32) & ((1u32 << bit) - 1)).count_ones() % 2 == 0 {
                1
            } else {
                -1
            };
            // circle correspondence via representative edges
            let mut rep = alloc::vec![usize::MAX; m];
            for (e, &circ) in r.edge_circle.iter().enumerate() {
                if rep[circ] == usize::MAX {
                    rep[circ] = e;
                }
            }
            let traced_count = r.circle_count() - d.free_loops().len();
            let traced_count2 = r2.circle_count() - d.free_loops().len();
            let map_circle = |circ: usize| -> usize {
                if circ < traced_count {
                    r2.edge_circle[rep[circ]]
                } else {
                    traced_count2 + (circ - traced_count)
                }
            };
            let merged = r2.circle_count() + 1 == r.circle_count();
            debug_assert!(
                merged || r2.circle_count() == r.circle_count() + 1,
                "bit flip must merge or split"
            );
            // the circles of r touching the flipped crossing
            let cr = &d.crossings()[bit];
            let ca = r.edge_circle[cr.slot_edge[0]];
            let cb = if merged {
                // two distinct circles merge
                let mut other = usize::MAX;
                for &e in &cr.slot_edge {
                    let c2 = r.edge_circle[e];
                    if c2 != ca {
                        other = c2;
                        break;
                    }
                }
                debug_assert_ne!(other, usize::MAX);
                other
            } else {
                ca
            };
            let gen_end =
                if s + 1 < states.len() { state_offset[s + 1] } else { gens.len() };
            for g in state_offset[s]..gen_end {
                let gen = gens[g];
                let labels = gen.labels;
                let target_of =
                    |labels2: u32| state_offset[s2] + local_rank(r2, labels2) as usize;
                if merged {
                    let la = labels >> ca & 1;
                    let lb = labels >> cb & 1;
                    // m(1,1)=1 ; m(1,X)=m(X,1)=X ; m(X,X)=0
                    let lx = match (la, lb) {
                        (0, 0) => Some(0u32),
                        (0, 1) | (1, 0) => Some(1),
                        (1, 1) => None,
                    };
                    let Some(lx) = lx else { continue };
                    let mut labels2 = 0u32;
                    for circle in 0..m {
                        if circle == ca || circle == cb {
                            continue;
                        }
                        if labels >> circle & 1 == 1 {
                            labels2 |= 1 << map_circle(circle);
                        }
                    }
                    let target_circle = map_circle(ca);
                    debug_assert_eq!(target_circle, map_circle(cb));
                    if lx == 1 {
                        labels2 |= 1 << target_circle;
                    }
                    if let Some(bp) = base_circle(r2)? {
                        if labels2 >> bp & 1 == 0 {
                            continue;
                        }
                    }
                    let to = target_of(labels2);
                    let target = &gens[to];
                    debug_assert_eq!(target.state, s2 as u32);
                    debug_assert_eq!(target.labels, labels2);
                    let drop = gen.k - target.k;
                    debug_assert!(drop == 0 || drop == 2, "k must drop by 0 or 2");
                    if drop == 0 {
                        d0.push((g as u32, to as u32, sign));
                    } else {
                        dm2.push((g as u32, to as u32, sign));
                    }
                } else {
                    // split: ca of r becomes two circles of r2
                    let mut labels_base = 0u32;
                    for circle in 0..m {
                        if circle == ca {
                            continue;
                        }
                        if labels >> circle & 1 == 1 {
                            labels_base |= 1 << map_circle(circle);
                        }
                    }
                    // the two descendants: circles of r2 at the crossing
                    let mut x = r2.edge_circle[cr.slot_edge[0]];
                    let mut y = x;
                    for &e in &cr.slot_edge {
                        let c2 = r2.edge_circle[e];
                        if c2 != x {
                            y = c2;
                            break;
                        }
                    }
                    debug_assert_ne!(x, y, "split must produce two circles");
                    if x > y {
                        core::mem::swap(&mut x, &mut y);
                    }
                    let la = labels >> ca & 1;
                    let targets: &[(u32, u32)] = if la == 0 {
                        // Delta(1) = 1 (x) X + X (x) 1
                        &[(0, 1), (1, 0)]
                    } else {
                        // Delta(X) = X (x) X
                        &[(1, 1)]
                    };
                    for &(lx, ly) in targets {
                        let mut labels2 = labels_base;
                        if lx == 1 {
                            labels2 |= 1 << x;
                        }
                        if ly == 1 {
                            labels2 |= 1 << y;
                        }
                        if let Some(bp) = base_circle(r2)? {
                            if labels2 >> bp & 1 == 0 {
                                continue;
                            }
                        }
                        let to = target_of(labels2);
                        let target = &gens[to];
                        debug_assert_eq!(target.state, s2 as u32);
                        debug_assert_eq!(target.labels, labels2);
                        let drop = gen.k - target.k;
                        debug_assert!(drop == 0 || drop == 2, "k must drop by 0 or 2");
                        if drop == 0 {
                            d0.push((g as u32, to as u32, sign));
                        } else {
                            dm2.push((g as u32, to as u32, sign));
                        }
                    }
                }
            }
        }
    }

    // sort generators into grading buckets, remapping the differential
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&g| {
        let gen = &gens[g];
        (gen.i, gen.j, gen.k, gen.state, gen.labels)
    });
    let mut new_index = alloc::vec![0u32; gens.len()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new as u32;
    }
    let gens: Vec<Generator> = order.iter().map(|&g| gens[g]).collect();
    let remap = |entries: &mut Vec<(u32, u32, i8)>| {
        for e in entries.iter_mut() {
            e.0 = new_index[e.0 as usize];
            e.1 = new_index[e.1 as usize];
        }
        entries.sort_unstable_by_key(|&(f, t, _)| (f, t));
    };
    let mut d0 = d0;
    let mut dm2 = dm2;
    remap(&mut d0);
    remap(&mut dm2);

    let mut buckets: BTreeMap<(i32, i32, i32), (usize, usize)> = BTreeMap::new();
    for (idx, g) in gens.iter().enumerate() {
        let entry = buckets.entry((g.i, g.j, g.k)).or_insert((idx, 0));
        entry.1 += 1;
    }

    let complex = GradedComplex { n_plus, n_minus, gens, buckets, d0, dm2 };
    if complex.generator_count() <= 1 << 16 {
        complex.verify_d_squared()?;
    }
    Ok(complex)
}

/// Khovanov homology of the underlying link, bucketed by `(i, j)`.
pub fn kh(d: &PlanarDiagram, ring: Ring) -> Result<HomologyTable, CubeError> {
    let complex = build_cube(d, None)?;
    kh_of_complex(&complex, ring)
}

pub fn kh_of_complex(complex: &GradedComplex, ring: Ring) -> Result<HomologyTable, CubeError> {
    let mut table = HomologyTable::new(ring);
    for j in complex.j_values() {
        let chain = complex.kh_chain(j);
        homology_of_chain(&chain, ring, |i| (i, j, None), &mut table)?;
    }
    Ok(table)
}

/// Reduced Khovanov homology at the given base point.
pub fn kh_reduced(
    d: &PlanarDiagram,
    ring: Ring,
    basepoint: Basepoint,
) -> Result<HomologyTable, CubeError> {
    let complex = build_cube(d, Some(basepoint))?;
    kh_of_complex(&complex, ring)
}

/// Shared: run homology over a chain of matrices indexed by `i`.
fn homology_of_chain(
    chain: &BTreeMap<i32, (Vec<usize>, SparseMatrix)>,
    ring: Ring,
    key: impl Fn(i32) -> (i32, i32, Option<i32>),
    table: &mut HomologyTable,
) -> Result<(), CubeError> {
    for (&i, (src, d_out)) in chain {
        let dim = src.len();
        let d_in = match chain.get(&(i - 1)) {
            Some((_, m)) => m.clone(),
            None => SparseMatrix::new(dim, 0),
        };
        let (free, torsion) =
            linalg::homology(&d_in, d_out, ring).map_err(CubeError::Internal)?;
        let (i2, j2, k2) = key(i);
        table.insert(i2, j2, k2, Group { free, torsion });
    }
    Ok(())
}

/// Jones polynomial by direct state sum: no homology involved.
pub fn jones(d: &PlanarDiagram) -> LaurentPoly {
    let c = d.crossing_count();
    let (n_plus, n_minus) = d.signed_crossing_counts();
    let loop_factor = {
        let mut p = LaurentPoly::zero();
        p.add_term(1, BigInt::from(1));
        p.add_term(-1, BigInt::from(1));
        p
    };
    let mut total = LaurentPoly::zero();
    for s in 0..1u64 << c {
        let r = d.resolve(s);
        let weight = s.count_ones() as i32;
        let sign = if (weight - n_minus as i32) % 2 == 0 { 1 } else { -1 };
        let mut term = LaurentPoly::monomial(
            weight + n_plus as i32 - 2 * n_minus as i32,
            BigInt::from(sign),
        );
        for _ in 0..r.circle_count() {
            term = &term * &loop_factor;
        }
        total = &total + &term;
    }
    total
}

/// Multiset of Lee homological gradings `2 lk(E, L \ E)` over all
/// orientation changes `E` of the components.
pub fn lee_homological_gradings(d: &PlanarDiagram) -> Vec<i64> {
    let m = d.component_count();
    let lk = d.linking_matrix();
    let mut out = Vec::with_capacity(1 << m);
    for subset in 0..1u32 << m {
        let mut total = 0i64;
        for a in 0..m {
            if subset >> a & 1 == 0 {
                continue;
            }
            for b in 0..m {
                if subset >> b & 1 == 1 {
                    continue;
                }
                total += lk[a][b];
            }
        }
        out.push(2 * total);
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::ClosureKind;

    fn closure(text: &str, n: usize, kind: ClosureKind) -> PlanarDiagram {
        PlanarDiagram::closure(&BraidWord::parse(text, n).unwrap(), kind, true).unwrap()
    }

    fn kh_q(d: &PlanarDiagram) -> HomologyTable {
        kh(d, Ring::Q).unwrap()
    }

    #[test]
    fn unknot_table() {
        let d = closure("", 1, ClosureKind::Braid);
        let t = kh(&d, Ring::Z).unwrap();
        assert_eq!(t.groups.len(), 2);
        assert_eq!(t.groups[&(0, 1, None)].free, 1);
        assert_eq!(t.groups[&(0, -1, None)].free, 1);
    }

    #[test]
    fn cube_sizes() {
        let d = closure("s1", 2, ClosureKind::Braid);
        let complex = build_cube(&d, None).unwrap();
        // state 0 has two circles, state 1 has one
        assert_eq!(complex.generator_count(), 6);
    }

    #[test]
    fn positive_trefoil_table() {
        let d = closure("s1^3", 2, ClosureKind::Braid);
        let t = kh(&d, Ring::Z).unwrap();
        let expect: &[((i32, i32), (usize, &[i64]))] = &[
            ((0, 1), (1, &[])),
            ((0, 3), (1, &[])),
            ((2, 5), (1, &[])),
            ((3, 7), (0, &[2])),
            ((3, 9), (1, &[])),
        ];
        assert_eq!(t.groups.len(), expect.len());
        for &((i, j), (free, tors)) in expect {
            let g = &t.groups[&(i, j, None)];
            assert_eq!(g.free, free, "free rank at ({}, {})", i, j);
            let tors: Vec<BigInt> = tors.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(g.torsion, tors, "torsion at ({}, {})", i, j);
        }
    }

    #[test]
    fn hopf_link_table() {
        let d = closure("s1^2", 2, ClosureKind::Braid);
        let t = kh(&d, Ring::Z).unwrap();
        assert_eq!(t.groups[&(0, 0, None)].free, 1);
        assert_eq!(t.groups[&(0, 2, None)].free, 1);
        assert_eq!(t.groups[&(2, 4, None)].free, 1);
        assert_eq!(t.groups[&(2, 6, None)].free, 1);
    }

    #[test]
    fn jones_examples() {
        let d = closure("", 1, ClosureKind::Braid);
        let mut expect = LaurentPoly::zero();
        expect.add_term(1, BigInt::from(1));
        expect.add_term(-1, BigInt::from(1));
        assert_eq!(jones(&d), expect);

        // two-component unlink: (q + q^-1)^2
        let d = closure("", 2, ClosureKind::Braid);
        let sq = &expect * &expect;
        assert_eq!(jones(&d), sq);

        // trefoil: q + q^3 + q^5 - q^9
        let d = closure("s1^3", 2, ClosureKind::Braid);
        let mut tref = LaurentPoly::zero();
        tref.add_term(1, BigInt::from(1));
        tref.add_term(3, BigInt::from(1));
        tref.add_term(5, BigInt::from(1));
        tref.add_term(9, BigInt::from(-1));
        assert_eq!(jones(&d), tref);
    }

    #[test]
    fn jones_equals_euler_characteristic() {
        for (text, n, kind) in [
            ("s1 s2^-1", 3, ClosureKind::Braid),
            ("s1^-1", 3, ClosureKind::Clasp),
            ("s1^2 s2", 3, ClosureKind::Braid),
            ("s1^-1", 2, ClosureKind::AugmentedBraid),
        ] {
            let d = closure(text, n, kind);
            assert_eq!(jones(&d), kh_q(&d).euler_q(), "{} {:?}", text, kind);
        }
    }

    #[test]
    fn mirror_flips_gradings_over_q() {
        let d = closure("s1 s1 s2^-1", 3, ClosureKind::Braid);
        let t = kh_q(&d);
        let tm = kh_q(&d.mirror());
        let flipped = tm.map_gradings(|i, j, k| (-i, -j, k));
        assert_eq!(t, flipped);
    }

    #[test]
    fn reduced_unknot() {
        let d = closure("", 1, ClosureKind::Braid);
        let t = kh_reduced(&d, Ring::Z, Basepoint::Loop(0)).unwrap();
        assert_eq!(t.groups.len(), 1);
        assert_eq!(t.groups[&(0, 0, None)].free, 1);
    }

    #[test]
    fn shumakovitch_halving_small() {
        for (text, n, kind) in [
            ("s1^3", 2, ClosureKind::Braid),
            ("s1 s2^-1", 3, ClosureKind::Braid),
            ("s1^-1", 3, ClosureKind::Clasp),
        ] {
            let d = closure(text, n, kind);
            let full = kh(&d, Ring::F2).unwrap().free_rank();
            let bp = if d.edge_count() > 0 { Basepoint::Edge(0) } else { Basepoint::Loop(0) };
            let red = kh_reduced(&d, Ring::F2, bp).unwrap().free_rank();
            assert_eq!(full, 2 * red, "{} {:?}", text, kind);
        }
    }

    #[test]
    fn quantum_parity_matches_components() {
        for (text, n, kind) in [
            ("s1", 3, ClosureKind::Braid),
            ("s1 s2", 3, ClosureKind::Braid),
            ("s2^-1 s1 s2", 3, ClosureKind::Clasp),
        ] {
            let d = closure(text, n, kind);
            let t = kh_q(&d);
            let comp_parity = (d.component_count() % 2) as i32;
            for &(_, j, _) in t.groups.keys() {
                assert_eq!(j.rem_euclid(2), comp_parity, "{} {:?}", text, kind);
            }
        }
    }

    #[test]
    fn lee_gradings() {
        // two-component link with lk = -3
        let d = closure("s1 s2^-1", 3, ClosureKind::AugmentedBraid);
        assert_eq!(lee_homological_gradings(&d), alloc::vec![-6, -6, 0, 0]);
        // knot
        let d = closure("s1^3", 2, ClosureKind::Braid);
        assert_eq!(lee_homological_gradings(&d), alloc::vec![0, 0]);
        // three-component unlink
        let d = closure("", 3, ClosureKind::Braid);
        assert_eq!(lee_homological_gradings(&d), alloc::vec![0; 8]);
    }

    #[test]
    fn universal_coefficients_spot_check() {
        let d = closure("s1^3", 2, ClosureKind::Braid);
        let tz = kh(&d, Ring::Z).unwrap();
        let tq = kh_q(&d);
        assert_eq!(tz.free_rank(), tq.free_rank());
        let tf = kh(&d, Ring::F2).unwrap();
        assert_eq!(tf.free_rank(), tz.implied_f2_rank());
    }
}

//! One-variable Alexander polynomial via the Wirtinger presentation
//! and Fox calculus.
//!
//! Generators are the over-arcs of the diagram, one relation per
//! crossing (`w = o^e u o^-e` with `o` the over-arc, `u`/`w` the
//! incoming and outgoing under-arcs, `e` the crossing sign). Fox
//! derivatives are specialised at every generator `-> t`, one column is
//! deleted, and the gcd of the maximal minors is the polynomial up to
//! units.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::diagram::PlanarDiagram;
use crate::poly::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlexanderError {
    SplitDiagram,
    Degenerate(String),
}

impl core::fmt::Display for AlexanderError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AlexanderError::SplitDiagram => write!(f, "split diagrams have no Wirtinger matrix"),
            AlexanderError::Degenerate(m) => write!(f, "degenerate presentation: {}", m),
        }
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

/// Alexander polynomial up to units `+-t^k`, in canonical form
/// (lowest exponent zero, positive leading coefficient). The deleted
/// generator column defaults to the last one.
pub fn alexander_polynomial(d: &PlanarDiagram) -> Result<LaurentPoly, AlexanderError> {
    alexander_polynomial_del(d, None)
}

/// Same, deleting the given generator column (for invariance tests).
pub fn alexander_polynomial_del(
    d: &PlanarDiagram,
    delete: Option<usize>,
) -> Result<LaurentPoly, AlexanderError> {
    let c = d.crossing_count();
    if c == 0 {
        // a crossingless diagram is a split union unless it is one loop
        return if d.free_loops().len() == 1 {
            Ok(LaurentPoly::one())
        } else {
            Err(AlexanderError::SplitDiagram)
        };
    }
    if !d.free_loops().is_empty() {
        return Err(AlexanderError::SplitDiagram);
    }
    // connectivity of the 4-valent graph
    let mut dsu = Dsu::new(c);
    for e in d.edges() {
        dsu.union(e.from.crossing, e.to.crossing);
    }
    let root = dsu.find(0);
    for x in 1..c {
        if dsu.find(x) != root {
            return Err(AlexanderError::SplitDiagram);
        }
    }

    // over-arcs: edges glued along the over-strand at each crossing
    let mut arcs = Dsu::new(d.edge_count());
    for cr in d.crossings() {
        arcs.union(cr.slot_edge[1], cr.slot_edge[3]);
    }
    let mut arc_index: Vec<Option<usize>> = alloc::vec![None; d.edge_count()];
    let mut generators = 0usize;
    for e in 0..d.edge_count() {
        let r = arcs.find(e);
        if arc_index[r].is_none() {
            arc_index[r] = Some(generators);
            generators += 1;
        }
    }
    let arc_of = |arcs: &mut Dsu, e: usize| arc_index[arcs.find(e)].unwrap();
    if generators != c {
        return Err(AlexanderError::Degenerate(String::from(
            "over-arc count must equal crossing count",
        )));
    }

    // Fox rows: relation o^e u o^-e w^-1 per crossing
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(c);
    for (ci, cr) in d.crossings().iter().enumerate() {
        let sign = d.crossing_sign(ci);
        let over = arc_of(&mut arcs, cr.slot_edge[1]);
        // the under edge entering the crossing: head here and the
        // component not reversed, or tail here and reversed
        let enters = |e: usize, slot: u8| {
            let edge = &d.edges()[e];
            let here = crate::diagram::SlotRef { crossing: ci, slot };
            let reversed = d.components()[edge.component].orientation < 0;
            (edge.to == here) != reversed
        };
        let e0 = cr.slot_edge[0];
        let e2 = cr.slot_edge[2];
        let (u_in, u_out) = if enters(e0, 0) {
            (arc_of(&mut arcs, e0), arc_of(&mut arcs, e2))
        } else {
            (arc_of(&mut arcs, e2), arc_of(&mut arcs, e0))
        };
        // word [(over, sign), (u_in, +1), (over, -sign), (u_out, -1)]
        let mut row = alloc::vec![LaurentPoly::zero(); generators];
        let mut acc = 0i32;
        for (gen, e) in [
            (over, sign as i32),
            (u_in, 1),
            (over, -(sign as i32)),
            (u_out, -1),
        ] {
            if e > 0 {
                row[gen].add_term(acc, BigInt::from(1));
                acc += 1;
            } else {
                acc -= 1;
                row[gen].add_term(acc, BigInt::from(-1));
            }
        }
        rows.push(row);
    }

    // delete one column, take the gcd of the maximal minors
    let deleted = delete.unwrap_or(generators - 1);
    if deleted >= generators {
        return Err(AlexanderError::Degenerate(String::from("no such generator")));
    }
    let mut gcd = LaurentPoly::zero();
    for skip_row in 0..c {
        let minor: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .enumerate()
            .filter(|&(r, _)| r != skip_row)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(col, _)| col != deleted)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let det = determinant(minor)
            .ok_or_else(|| AlexanderError::Degenerate(String::from("minor division failed")))?;
        gcd = gcd.gcd(&det);
    }
    Ok(gcd.unit_normalized())
}

/// Fraction-free (Bareiss) determinant over Laurent polynomials. Rows
/// are unit-normalised first so the entries live in `Z[t]`; the result
/// is only meaningful up to units, which is all the caller needs.
fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> Option<LaurentPoly> {
    let n = m.len();
    if n == 0 {
        return Some(LaurentPoly::one());
    }
    for row in m.iter_mut() {
        let min_exp = row.iter().filter_map(|p| p.min_exp()).min();
        if let Some(shift) = min_exp {
            if shift != 0 {
                for p in row.iter_mut() {
                    *p = p.mul_term(-shift, &BigInt::from(1));
                }
            }
        }
    }
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        // pivot search
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(pr) = pivot else {
            return Some(LaurentPoly::zero());
        };
        if pr != k {
            m.swap(pr, k);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev)?;
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign_flip {
        det = -&det;
    }
    Some(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::ClosureKind;

    fn closure(text: &str, n: usize, kind: ClosureKind) -> PlanarDiagram {
        PlanarDiagram::closure(&BraidWord::parse(text, n).unwrap(), kind, true).unwrap()
    }

    #[test]
    fn unknot_and_split() {
        let d = closure("", 1, ClosureKind::Braid);
        assert_eq!(alexander_polynomial(&d).unwrap(), LaurentPoly::one());
        let d = closure("", 2, ClosureKind::Braid);
        assert_eq!(alexander_polynomial(&d), Err(AlexanderError::SplitDiagram));
        let d = closure("s1", 3, ClosureKind::Braid);
        assert_eq!(alexander_polynomial(&d), Err(AlexanderError::SplitDiagram));
    }

    #[test]
    fn trefoil() {
        let d = closure("s1^3", 2, ClosureKind::Braid);
        let p = alexander_polynomial(&d).unwrap();
        assert_eq!(p, LaurentPoly::from_coeffs(&[1, -1, 1]));
    }

    #[test]
    fn figure_eight_like_twist_knot() {
        // closure of (s1 s2^-1)^2 is the figure-eight knot
        let d = closure("s1 s2^-1 s1 s2^-1", 3, ClosureKind::Braid);
        let p = alexander_polynomial(&d).unwrap();
        assert_eq!(p, LaurentPoly::from_coeffs(&[1, -3, 1]));
    }

    #[test]
    fn hopf_link() {
        let d = closure("", 1, ClosureKind::AugmentedBraid);
        let p = alexander_polynomial(&d).unwrap();
        assert_eq!(p, LaurentPoly::from_coeffs(&[-1, 1]).unit_normalized());
    }

    #[test]
    fn mirror_invariance() {
        for (text, n, kind) in [
            ("s1^3", 2, ClosureKind::Braid),
            ("s1^-1", 3, ClosureKind::AugmentedClasp),
        ] {
            let d = closure(text, n, kind);
            let p = alexander_polynomial(&d).unwrap();
            let q = alexander_polynomial(&d.mirror()).unwrap();
            assert_eq!(p, q, "{} {:?}", text, kind);
        }
    }

    #[test]
    fn column_choice_invariance() {
        let d = closure("s1^3", 2, ClosureKind::Braid);
        let base = alexander_polynomial(&d).unwrap();
        for col in 0..d.crossing_count() {
            assert_eq!(alexander_polynomial_del(&d, Some(col)).unwrap(), base);
        }
    }
}

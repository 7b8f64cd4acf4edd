//! Independent order oracle for braid words, used to cross-check handle
//! reduction.
//!
//! A braid acts on the curve diagram of the punctured disk: the arcs
//! running from the base point to each puncture. The image of arc `j`
//! is encoded by the reduced free-group word `u_j` and target puncture
//! `k_j` with `phi(x_j) = u_j x_{k_j} u_j^-1`, where `phi` is the Artin
//! action on the fundamental group. From that data we read off integer
//! lamination coordinates (intersection counts of the image diagram
//! with the vertical lines between punctures and the rays above them).
//! A braid is trivial iff the coordinates equal the base coordinates,
//! and the order sign is read from the first arc that departs from the
//! trivial diagram.
//!
//! None of this shares any machinery with handle reduction: the only
//! input is the braid group acting on the free group, which is exact.

use alloc::vec::Vec;

use crate::braid::{BraidWord, SigmaSign};

/// Reduced word in the free group on punctures `1..=n`; letters are
/// `+j` / `-j` for `x_j` / `x_j^-1`.
type FreeWord = Vec<i32>;

fn push_reduced(word: &mut FreeWord, letter: i32) {
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

/// Artin action of one braid letter: substitute generators in `word`.
///
/// sigma_i   : x_i -> x_i x_{i+1} x_i^-1 , x_{i+1} -> x_i
/// sigma_i^-1: x_i -> x_{i+1}            , x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
fn apply_letter(word: &FreeWord, index: usize, sign: i8) -> FreeWord {
    let i = index as i32;
    let mut out = Vec::with_capacity(word.len() * 2);
    for &letter in word {
        let gen = letter.abs();
        let pos = letter > 0;
        let image: &[i32] = if sign > 0 {
            if gen == i {
                if pos { &[i, i + 1, -i] } else { &[i, -(i + 1), -i] }
            } else if gen == i + 1 {
                if pos { &[i] } else { &[-i] }
            } else {
                core::slice::from_ref(&letter)
            }
        } else if gen == i {
            if pos { &[i + 1] } else { &[-(i + 1)] }
        } else if gen == i + 1 {
            if pos { &[-(i + 1), i, i + 1] } else { &[-(i + 1), -i, i + 1] }
        } else {
            core::slice::from_ref(&letter)
        };
        for &l in image {
            push_reduced(&mut out, l);
        }
    }
    out
}

/// Image of one curve-diagram arc: conjugator and target puncture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcImage {
    pub conjugator: FreeWord,
    pub target: usize,
}

/// Image of the whole curve diagram under a braid word.
pub fn curve_diagram(w: &BraidWord) -> Vec<ArcImage> {
    let n = w.strand_count();
    (1..=n)
        .map(|j| {
            let mut word: FreeWord = alloc::vec![j as i32];
            for &(index, sign) in w.letters() {
                word = apply_letter(&word, index, sign);
            }
            // word = u x_k u^-1 reduced; peel the conjugator.
            let mut lo = 0;
            let mut hi = word.len();
            while hi - lo > 1 && word[lo] == -word[hi - 1] {
                lo += 1;
                hi -= 1;
            }
            debug_assert_eq!(hi - lo, 1, "arc image must be a conjugated generator");
            debug_assert!(word[lo] > 0, "arc image must preserve puncture orientation");
            ArcImage { conjugator: word[..lo].to_vec(), target: word[lo] as usize }
        })
        .collect()
}

/// Integer lamination coordinates of the image curve diagram: for each
/// arc, crossings with the ray above each puncture followed by
/// crossings with the vertical line between consecutive punctures.
pub fn lamination_coords(w: &BraidWord) -> Vec<i64> {
    let n = w.strand_count();
    let mut coords = Vec::with_capacity(n * (2 * n - 1));
    for arc in curve_diagram(w) {
        let mut ray = alloc::vec![0i64; n];
        let mut line = alloc::vec![0i64; n.saturating_sub(1)];
        let mut pos = 1usize; // base point sits left of puncture 1
        for &letter in &arc.conjugator {
            let c = letter.unsigned_abs() as usize;
            ray[c - 1] += 1;
            for k in pos.min(c)..pos.max(c) {
                line[k - 1] += 1;
            }
            pos = c;
        }
        for k in pos.min(arc.target)..pos.max(arc.target) {
            line[k - 1] += 1;
        }
        coords.extend(ray);
        coords.extend(line);
    }
    coords
}

/// Coordinates of the trivial diagram.
pub fn base_coords(n: usize) -> Vec<i64> {
    let mut coords = Vec::new();
    for j in 1..=n {
        coords.extend(core::iter::repeat(0).take(n));
        for k in 1..n {
            coords.push(if k < j { 1 } else { 0 });
        }
    }
    coords
}

/// A braid is trivial iff it fixes the base lamination coordinates.
pub fn is_trivial(w: &BraidWord) -> bool {
    lamination_coords(w) == base_coords(w.strand_count())
}

/// Order sign read from the first arc that departs from the trivial
/// diagram. When arcs `1..j` are fixed the image of arc `j` lives in
/// the sub-disk around punctures `j..=n`, so its first divergence from
/// the straight arc happens at puncture `j`: a loop around `j` departs
/// with the sign of the loop, anything else passes below and is
/// negative.
pub fn order_sign(w: &BraidWord) -> SigmaSign {
    let arcs = curve_diagram(w);
    for (idx, arc) in arcs.iter().enumerate() {
        let j = idx + 1;
        if arc.conjugator.is_empty() && arc.target == j {
            continue;
        }
        if let Some(&first) = arc.conjugator.first() {
            let c = first.unsigned_abs() as usize;
            debug_assert!(c >= j, "conjugator must avoid fixed sub-diagram");
            if c == j {
                return if first > 0 { SigmaSign::SigmaPositive } else { SigmaSign::SigmaNegative };
            }
            return SigmaSign::SigmaNegative;
        }
        debug_assert!(arc.target > j);
        return SigmaSign::SigmaNegative;
    }
    SigmaSign::Trivial
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn word(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<(usize, i8)> = (0..len)
            .map(|_| (rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        BraidWord::new(n, letters).unwrap()
    }

    #[test]
    fn braid_relations_hold_on_coordinates() {
        // sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
        let lhs = word("s1 s2 s1", 4);
        let rhs = word("s2 s1 s2", 4);
        assert_eq!(lamination_coords(&lhs), lamination_coords(&rhs));
        let lhs = word("s2 s3 s2", 4);
        let rhs = word("s3 s2 s3", 4);
        assert_eq!(lamination_coords(&lhs), lamination_coords(&rhs));
        // far commutation
        let lhs = word("s1 s3^-1", 4);
        let rhs = word("s3^-1 s1", 4);
        assert_eq!(lamination_coords(&lhs), lamination_coords(&rhs));
    }

    #[test]
    fn inverse_acts_trivially() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..=4);
            let w = random_word(&mut rng, n, 8);
            assert!(is_trivial(&w.concat(&w.inverse())));
            assert!(is_trivial(&w.inverse().concat(&w)));
        }
    }

    #[test]
    fn nontrivial_words_move_coordinates() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen_nontrivial = 0;
        for _ in 0..200 {
            let n = rng.gen_range(2..=4);
            let w = random_word(&mut rng, n, 8);
            // Ground truth for non-triviality: permutation or definite sign.
            if w.permutation().iter().enumerate().any(|(i, &p)| i != p) {
                assert!(!is_trivial(&w));
                seen_nontrivial += 1;
            }
        }
        assert!(seen_nontrivial > 50);
    }

    /// Random sigma-definite words: the lowest-index generator present
    /// occurs with a single sign, which is the ground-truth order sign.
    #[test]
    fn definite_words_have_correct_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..3000 {
            let n = rng.gen_range(2..=4);
            let low = rng.gen_range(1..n);
            let positive = rng.gen_bool(0.5);
            let len = rng.gen_range(1..=9);
            let mut letters = Vec::new();
            let mut has_low = false;
            for _ in 0..len {
                let index = rng.gen_range(low..n);
                let sign = if index == low {
                    has_low = true;
                    if positive { 1 } else { -1 }
                } else if rng.gen_bool(0.5) {
                    1
                } else {
                    -1
                };
                letters.push((index, sign));
            }
            if !has_low {
                letters.push((low, if positive { 1 } else { -1 }));
            }
            let w = BraidWord::new(n, letters).unwrap();
            let expect =
                if positive { SigmaSign::SigmaPositive } else { SigmaSign::SigmaNegative };
            assert_eq!(order_sign(&w), expect, "definite word {:?}", w);
        }
    }

    #[test]
    fn oracle_matches_handle_reduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..1500 {
            let n = rng.gen_range(2..=4);
            let w = random_word(&mut rng, n, 10);
            let fast = w.dehornoy_sign().unwrap();
            assert_eq!(order_sign(&w), fast, "word {:?}", w);
        }
    }

    #[test]
    fn antisymmetry_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..500 {
            let n = rng.gen_range(2..=4);
            let w = random_word(&mut rng, n, 8);
            match order_sign(&w) {
                SigmaSign::SigmaPositive => {
                    assert_eq!(order_sign(&w.inverse()), SigmaSign::SigmaNegative)
                }
                SigmaSign::SigmaNegative => {
                    assert_eq!(order_sign(&w.inverse()), SigmaSign::SigmaPositive)
                }
                SigmaSign::Trivial => assert_eq!(order_sign(&w.inverse()), SigmaSign::Trivial),
            }
        }
    }
}

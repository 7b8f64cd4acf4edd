//! Braid words, their numeric invariants, and the sigma-sign of a word
//! computed by handle reduction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// An element of the braid group `B_n`, stored as a fully expanded word
/// in the Artin generators. Letters are `(index, sign)` with
/// `1 <= index <= n-1` and `sign` either `+1` or `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<(usize, i8)>,
}

/// Position of a braid in the left order: definite words have their
/// lowest-index generator occurring with a single sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaSign {
    SigmaPositive,
    SigmaNegative,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidError {
    StrandCountTooSmall,
    IndexOutOfRange { index: usize, strands: usize },
    MalformedToken(String),
    ReductionCapExceeded { steps: usize },
}

impl core::fmt::Display for BraidError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BraidError::StrandCountTooSmall => write!(f, "strand count must be at least 1"),
            BraidError::IndexOutOfRange { index, strands } => {
                write!(f, "generator s{} out of range for B_{}", index, strands)
            }
            BraidError::MalformedToken(t) => write!(f, "malformed braid token `{}`", t),
            BraidError::ReductionCapExceeded { steps } => {
                write!(f, "handle reduction exceeded {} steps", steps)
            }
        }
    }
}

/// Safety cap for handle reduction. Termination is a theorem, the cap
/// only turns a hypothetical bug into a diagnostic.
const REDUCTION_CAP: usize = 1_000_000;

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<(usize, i8)>) -> Result<Self, BraidError> {
        if strand_count < 1 {
            return Err(BraidError::StrandCountTooSmall);
        }
        for &(index, sign) in &letters {
            if index < 1 || index >= strand_count {
                return Err(BraidError::IndexOutOfRange { index, strands: strand_count });
            }
            assert!(sign == 1 || sign == -1, "letter sign must be +-1");
        }
        Ok(Self { strand_count, letters })
    }

    pub fn identity(strand_count: usize) -> Self {
        Self { strand_count, letters: Vec::new() }
    }

    /// Parse a generator word such as `"s1 s2^-1 s1^3"`. Powers are
    /// expanded into repeated letters.
    pub fn parse(text: &str, strand_count: usize) -> Result<Self, BraidError> {
        if strand_count < 1 {
            return Err(BraidError::StrandCountTooSmall);
        }
        let mut letters = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(&ch) = chars.peek() {
            if ch.is_whitespace() {
                chars.next();
                continue;
            }
            if ch != 's' {
                return Err(BraidError::MalformedToken(format!("{}", ch)));
            }
            chars.next();
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            if digits.is_empty() {
                return Err(BraidError::MalformedToken(String::from("s")));
            }
            let index: usize = digits
                .parse()
                .map_err(|_| BraidError::MalformedToken(digits.clone()))?;
            let mut power: i64 = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut ptext = String::new();
                if chars.peek() == Some(&'-') {
                    ptext.push('-');
                    chars.next();
                }
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        ptext.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                power = ptext
                    .parse()
                    .map_err(|_| BraidError::MalformedToken(format!("s{}^{}", digits, ptext)))?;
            }
            if index < 1 || index >= strand_count {
                return Err(BraidError::IndexOutOfRange { index, strands: strand_count });
            }
            let sign = if power < 0 { -1 } else { 1 };
            for _ in 0..power.unsigned_abs() {
                letters.push((index, sign));
            }
        }
        Ok(Self { strand_count, letters })
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, s)| s as i64).sum()
    }

    /// `e(w) - n`, the self-linking number of the braid closure.
    pub fn self_linking(&self) -> i64 {
        self.exponent_sum() - self.strand_count as i64
    }

    /// Permutation of strand positions, top to bottom: `perm[p]` is the
    /// bottom position reached by the strand entering at top position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let n = self.strand_count;
        let mut positions: Vec<usize> = (0..n).collect(); // positions[slot] = strand label
        for &(index, _) in &self.letters {
            positions.swap(index - 1, index);
        }
        // positions[slot] = label at bottom slot; invert to label -> slot
        let mut perm = alloc::vec![0; n];
        for (slot, &label) in positions.iter().enumerate() {
            perm[label] = slot;
        }
        perm
    }

    /// Number of components of the braid closure.
    pub fn component_count(&self) -> usize {
        let perm = self.permutation();
        let n = self.strand_count;
        let mut seen = alloc::vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    pub fn mirror(&self) -> Self {
        Self {
            strand_count: self.strand_count,
            letters: self.letters.iter().map(|&(i, s)| (i, -s)).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Self {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strand_count, other.strand_count);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { strand_count: self.strand_count, letters }
    }

    /// Handle-reduce the word to a handle-free representative.
    pub fn handle_reduce(&self) -> Result<Vec<(usize, i8)>, BraidError> {
        let mut word = self.letters.clone();
        let mut steps = 0usize;
        while let Some((q, p)) = leftmost_handle(&word) {
            steps += 1;
            if steps > REDUCTION_CAP {
                return Err(BraidError::ReductionCapExceeded { steps });
            }
            let (index, opening_sign) = word[q];
            let mut replacement: Vec<(usize, i8)> = Vec::with_capacity((p - q) * 3);
            for &(j, d) in &word[q + 1..p] {
                if j == index + 1 {
                    replacement.push((index + 1, -opening_sign));
                    replacement.push((index, d));
                    replacement.push((index + 1, opening_sign));
                } else {
                    replacement.push((j, d));
                }
            }
            word.splice(q..=p, replacement);
        }
        Ok(word)
    }

    /// Dehornoy sigma-sign via handle reduction. The reduced word is
    /// empty exactly for the identity braid; otherwise its lowest-index
    /// generator occurs with a single sign.
    pub fn dehornoy_sign(&self) -> Result<SigmaSign, BraidError> {
        let reduced = self.handle_reduce()?;
        if reduced.is_empty() {
            return Ok(SigmaSign::Trivial);
        }
        let lowest = reduced.iter().map(|&(i, _)| i).min().unwrap();
        let signs: Vec<i8> = reduced
            .iter()
            .filter(|&&(i, _)| i == lowest)
            .map(|&(_, s)| s)
            .collect();
        debug_assert!(
            signs.windows(2).all(|w| w[0] == w[1]),
            "handle-free word must be sigma-definite"
        );
        Ok(if signs[0] > 0 { SigmaSign::SigmaPositive } else { SigmaSign::SigmaNegative })
    }
}

/// Leftmost-closing handle `(open, close)`: positions with inverse
/// letters of the same index and only higher indices in between. The
/// earliest-closing handle is automatically innermost.
fn leftmost_handle(word: &[(usize, i8)]) -> Option<(usize, usize)> {
    // last_low[i] = most recent position whose index is <= i
    for (p, &(index, sign)) in word.iter().enumerate() {
        let mut q = p;
        while q > 0 {
            q -= 1;
            let (j, s) = word[q];
            if j > index {
                continue;
            }
            if j == index && s == -sign {
                return Some((q, p));
            }
            break;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use SigmaSign::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("s1 s2^-1", 3).letters(), &[(1, 1), (2, -1)]);
        assert_eq!(w("s1^3", 2).letters(), &[(1, 1), (1, 1), (1, 1)]);
        assert!(matches!(
            BraidWord::parse("s3", 3),
            Err(BraidError::IndexOutOfRange { index: 3, strands: 3 })
        ));
        assert!(matches!(BraidWord::parse("x1", 3), Err(BraidError::MalformedToken(_))));
        assert!(matches!(BraidWord::parse("s1", 0), Err(BraidError::StrandCountTooSmall)));
        assert_eq!(w("s1^0", 2).len(), 0);
        assert_eq!(w("s1^-2", 3).letters(), &[(1, -1), (1, -1)]);
    }

    #[test]
    fn numeric_invariants() {
        let b = w("s1", 3);
        assert_eq!(b.exponent_sum(), 1);
        assert_eq!(b.self_linking(), -2);
        assert_eq!(b.component_count(), 2);

        let b = w("s1 s2", 3);
        assert_eq!(b.exponent_sum(), 2);
        assert_eq!(b.self_linking(), -1);
        assert_eq!(b.component_count(), 1);

        let b = w("s1^-1", 3);
        assert_eq!(b.exponent_sum(), -1);
        assert_eq!(b.self_linking(), -4);
        assert_eq!(b.component_count(), 2);
    }

    #[test]
    fn transforms() {
        let b = w("s1 s2^-1", 3);
        assert_eq!(b.mirror().letters(), &[(1, -1), (2, 1)]);
        assert_eq!(b.reverse().letters(), &[(2, -1), (1, 1)]);
        assert_eq!(w("s1 s2", 3).inverse().letters(), &[(2, -1), (1, -1)]);
    }

    #[test]
    fn sigma_sign_examples() {
        assert_eq!(w("s1 s2^-1", 3).dehornoy_sign().unwrap(), SigmaPositive);
        assert_eq!(w("s2 s1^-1", 3).dehornoy_sign().unwrap(), SigmaNegative);
        // s1^-1 s2 s1 equals s2 s1 s2^-1 by the braid relation.
        assert_eq!(w("s1^-1 s2 s1", 3).dehornoy_sign().unwrap(), SigmaPositive);
        assert_eq!(w("", 4).dehornoy_sign().unwrap(), Trivial);
        assert_eq!(w("s1 s1^-1", 2).dehornoy_sign().unwrap(), Trivial);
    }

    #[test]
    fn sigma_sign_word_times_inverse_is_trivial() {
        for text in ["s1 s2 s1", "s2^-1 s1 s2 s1^-1", "s1 s3^-1 s2 s2 s1^-1", "s2 s2 s2"] {
            let b = w(text, 4);
            let prod = b.concat(&b.inverse());
            assert_eq!(prod.dehornoy_sign().unwrap(), Trivial, "word {}", text);
        }
    }

    #[test]
    fn positive_words_are_sigma_positive() {
        for text in ["s1", "s2 s3", "s1 s2 s1", "s3 s3 s1"] {
            assert_eq!(w(text, 4).dehornoy_sign().unwrap(), SigmaPositive);
        }
    }

    #[test]
    fn component_count_invariant_under_mirror_and_inverse() {
        for text in ["s1 s2", "s1 s2^-1 s1", "s2 s2", ""] {
            let b = w(text, 3);
            assert_eq!(b.component_count(), b.mirror().component_count());
            assert_eq!(b.component_count(), b.inverse().component_count());
        }
    }
}

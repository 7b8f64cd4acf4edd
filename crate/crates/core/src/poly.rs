//! Integer Laurent polynomials in one variable (`t` or `q`) and in the
//! pair `(q, t)`. Coefficients are arbitrary precision.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in a single variable with `BigInt` coefficients.
///
/// Stored as exponent -> coefficient with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn variable() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(exp: i32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff.into());
        p
    }

    /// Polynomial `c0 + c1 t + c2 t^2 + ...` from the coefficient list.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::default();
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(e as i32, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, exp: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn degree_span(&self) -> i32 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    /// Multiply by `c * t^e`.
    pub fn mul_term(&self, exp: i32, coeff: &BigInt) -> Self {
        let mut p = Self::default();
        if coeff.is_zero() {
            return p;
        }
        for (e, c) in &self.coeffs {
            p.coeffs.insert(e + exp, c * coeff);
        }
        p
    }

    /// Substitute `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        let mut p = Self::default();
        for (e, c) in &self.coeffs {
            p.coeffs.insert(-e, c.clone());
        }
        p
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: i64) -> Option<BigInt> {
        // Only valid when no negative exponents are present (or x = +-1).
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            if *e < 0 {
                if x.abs().is_one() {
                    let inv = if x.is_negative() && e % 2 != 0 { -c } else { c.clone() };
                    acc += inv;
                    continue;
                }
                return None;
            }
            acc += c * x.pow(*e as u32);
        }
        Some(acc)
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let (dexp, dcoef) = {
            let e = rhs.max_exp().unwrap();
            (e, rhs.coeff(e))
        };
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap();
            let c = rem.coeff(e);
            if &c % &dcoef != BigInt::zero() {
                return None;
            }
            let q = &c / &dcoef;
            let qe = e - dexp;
            quot.add_term(qe, q.clone());
            let sub = rhs.mul_term(qe, &q);
            rem = &rem - &sub;
        }
        Some(quot)
    }

    /// Content: gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs.values() {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// Gcd in Z[t, t^-1] via content and primitive-part pseudo-remainders.
    /// The result is only canonical up to units.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let content = num_integer::Integer::gcd(&self.content(), &other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.mul_term(0, &content)
    }

    /// Shift so the lowest exponent is 0 and divide by the content.
    fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let shift = -self.min_exp().unwrap();
        let mut p = Self::default();
        for (e, v) in &self.coeffs {
            p.coeffs.insert(e + shift, v / &c);
        }
        p
    }

    /// Pseudo-remainder of `self` by `rhs` (both treated in Z[t] after
    /// shifting out negative exponents).
    fn pseudo_rem(&self, rhs: &Self) -> Self {
        let mut a = self.primitive_part();
        let b = rhs.primitive_part();
        let db = b.max_exp().unwrap();
        let lb = b.coeff(db);
        while let Some(da) = a.max_exp() {
            if a.is_zero() || da < db {
                break;
            }
            let la = a.coeff(da);
            a = a.mul_term(0, &lb);
            let sub = b.mul_term(da - db, &la);
            a = &a - &sub;
        }
        a
    }

    /// Canonical representative up to units: lowest exponent 0,
    /// leading (highest-degree) coefficient positive.
    pub fn unit_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let shift = -self.min_exp().unwrap();
        let flip = self.coeff(self.max_exp().unwrap()).is_negative();
        let mut p = Self::default();
        for (e, c) in &self.coeffs {
            p.coeffs.insert(e + shift, if flip { -c } else { c.clone() });
        }
        p
    }

    pub fn to_string_var(&self, var: char) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                let _ = write!(s, "{}", mag);
            }
            if *e != 0 {
                if show_coeff {
                    s.push('*');
                }
                s.push(var);
                if *e != 1 {
                    let _ = write!(s, "^{}", e);
                }
            }
        }
        s
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e, c) in &self.coeffs {
            out.coeffs.insert(*e, -c);
        }
        out
    }
}

/// Laurent polynomial in `(q, t)`, exponents `(q_exp, t_exp)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent2 {
    coeffs: BTreeMap<(i32, i32), BigInt>,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(q: i32, t: i32, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(q, t, coeff.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, q: i32, t: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((q, t)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&(q, t));
        }
    }

    pub fn coeff(&self, q: i32, t: i32) -> BigInt {
        self.coeffs.get(&(q, t)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms sorted by `(t_exp, q_exp)`.
    pub fn terms_t_major(&self) -> Vec<(i32, i32, BigInt)> {
        let mut v: Vec<(i32, i32, BigInt)> = self
            .coeffs
            .iter()
            .map(|(&(q, t), c)| (t, q, c.clone()))
            .collect();
        v.sort_by_key(|&(t, q, _)| (t, q));
        v
    }

    pub fn mul_term(&self, q: i32, t: i32, coeff: &BigInt) -> Self {
        let mut p = Self::default();
        if coeff.is_zero() {
            return p;
        }
        for (&(eq, et), c) in &self.coeffs {
            p.coeffs.insert((eq + q, et + t), c * coeff);
        }
        p
    }

    /// Forget the annular variable: substitute `t = 1`.
    pub fn collapse_t(&self) -> LaurentPoly {
        let mut p = LaurentPoly::default();
        for (&(q, _), c) in &self.coeffs {
            p.add_term(q, c.clone());
        }
        p
    }

    /// `(q, t) -> (q^-1, t^-1)`, the effect of mirroring on state sums.
    pub fn invert_variables(&self) -> Self {
        let mut p = Self::default();
        for (&(q, t), c) in &self.coeffs {
            p.coeffs.insert((-q, -t), c.clone());
        }
        p
    }

    /// Canonical single-line form, terms sorted by `(t, q)`.
    pub fn to_string_qt(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (idx, (t, q, c)) in self.terms_t_major().into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let unit_exp = q == 0 && t == 0;
            let show_coeff = !mag.is_one() || unit_exp;
            if show_coeff {
                let _ = write!(s, "{}", mag);
            }
            let mut first = !show_coeff;
            for (var, e) in [('q', q), ('t', t)] {
                if e != 0 {
                    if !first {
                        s.push('*');
                    }
                    first = false;
                    s.push(var);
                    if e != 1 {
                        let _ = write!(s, "^{}", e);
                    }
                }
            }
        }
        s
    }
}

impl Add for &Laurent2 {
    type Output = Laurent2;
    fn add(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(q, t), c) in &rhs.coeffs {
            out.add_term(q, t, c.clone());
        }
        out
    }
}

impl Sub for &Laurent2 {
    type Output = Laurent2;
    fn sub(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(q, t), c) in &rhs.coeffs {
            out.add_term(q, t, -c.clone());
        }
        out
    }
}

impl Mul for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::default();
        for (&(q1, t1), c1) in &self.coeffs {
            for (&(q2, t2), c2) in &rhs.coeffs {
                out.add_term(q1 + q2, t1 + t2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_exact_roundtrip() {
        let a = LaurentPoly::from_coeffs(&[2, -5, 5, -2]);
        let b = LaurentPoly::from_coeffs(&[-1, 1]); // t - 1
        let q = a.div_exact(&b).unwrap();
        assert_eq!(&(&q * &b), &a);
        assert!(a.div_exact(&LaurentPoly::from_coeffs(&[1, 1])).is_none());
    }

    #[test]
    fn gcd_of_scaled_polys() {
        let p = LaurentPoly::from_coeffs(&[1, 2, 1]);
        let a = &p * &LaurentPoly::from_coeffs(&[3, 1]);
        let b = &p * &LaurentPoly::from_coeffs(&[0, -2, 2]);
        let g = a.gcd(&b).unit_normalized();
        assert_eq!(g, p.unit_normalized());
    }

    #[test]
    fn unit_normalization() {
        // -2t^-1 + 5 - 5t + 2t^2 normalizes to 2 - 5t + 5t^2 - 2t^3 .. times -1
        let mut p = LaurentPoly::default();
        p.add_term(-1, BigInt::from(-2));
        p.add_term(0, BigInt::from(5));
        p.add_term(1, BigInt::from(-5));
        p.add_term(2, BigInt::from(2));
        let n = p.unit_normalized();
        assert_eq!(n.min_exp(), Some(0));
        assert!(n.coeff(n.max_exp().unwrap()) > BigInt::zero());
        let m = p.mul_term(3, &BigInt::from(-7)).unit_normalized();
        assert_eq!(n, m);
    }

    #[test]
    fn two_variable_string() {
        let mut j = Laurent2::zero();
        j.add_term(0, -1, BigInt::from(1));
        j.add_term(-2, -1, BigInt::from(1));
        j.add_term(0, 1, BigInt::from(1));
        j.add_term(2, 1, BigInt::from(1));
        assert_eq!(j.to_string_qt(), "q^-2*t^-1 + t^-1 + t + q^2*t");
    }
}

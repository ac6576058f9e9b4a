//! Laurent polynomials in `q` with integer coefficients.
//!
//! Coefficients are `i128` with checked arithmetic; an overflow panics with a
//! diagnostic instead of wrapping silently.

use std::cmp::Ordering;
use std::fmt;

/// `sum_i coeffs[i] * q^(low + i)`; the zero polynomial has no coefficients,
/// otherwise the first and last coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i128>,
}

#[inline]
fn ck_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer coefficient overflow in Laurent addition")
}

#[inline]
fn ck_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer coefficient overflow in Laurent product")
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: i128, e: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent { low: e, coeffs: vec![c] }
    }

    /// Builds `sum_i coeffs[i] q^(low+i)` and normalizes.
    pub fn from_coeffs(low: i32, coeffs: Vec<i128>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i32, i128)>>(terms: I) -> Self {
        let terms: Vec<(i32, i128)> = terms.into_iter().filter(|t| t.1 != 0).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = ck_add(*slot, c);
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        let lead_zeros = self.coeffs.iter().take_while(|c| **c == 0).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i32;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent present (0 for the zero polynomial).
    pub fn high(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i32 - 1
        }
    }

    /// Raw coefficient slice starting at [`Laurent::low`].
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i32) -> i128 {
        let idx = e - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[idx as usize]
        }
    }

    /// Iterates nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(move |(i, c)| (self.low + i as i32, *c))
    }

    /// The constant value, if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<i128> {
        match self.coeffs.len() {
            0 => Some(0),
            1 if self.low == 0 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    /// If this is a single monomial `c q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(i128, i32)> {
        if self.coeffs.len() == 1 {
            Some((self.coeffs[0], self.low))
        } else {
            None
        }
    }

    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| ck_mul(*x, c)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, -1);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, 1);
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: i128) {
        if other.is_zero() || c == 0 {
            return;
        }
        if self.is_zero() {
            *self = other.scale(c);
            return;
        }
        let lo = self.low.min(other.low);
        let hi = self.high().max(other.high());
        if lo < self.low || hi > self.high() {
            let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
            let off = (self.low - lo) as usize;
            coeffs[off..off + self.coeffs.len()].copy_from_slice(&self.coeffs);
            self.coeffs = coeffs;
            self.low = lo;
        }
        let off = (other.low - self.low) as usize;
        for (i, x) in other.coeffs.iter().enumerate() {
            let slot = &mut self.coeffs[off + i];
            *slot = ck_add(*slot, ck_mul(*x, c));
        }
        self.trim();
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let slot = &mut coeffs[i + j];
                *slot = ck_add(*slot, ck_mul(*a, *b));
            }
        }
        Self::from_coeffs(self.low + other.low, coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `q -> q^k` for `k >= 1`.
    pub fn compose_power(&self, k: i32) -> Self {
        assert!(k >= 1);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> i128 {
        self.coeffs.iter().fold(0i128, |g, c| num_integer::Integer::gcd(&g, c))
    }

    /// Exact division by an integer that divides every coefficient.
    pub fn div_int_exact(&self, d: i128) -> Self {
        Laurent {
            low: self.low,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    debug_assert_eq!(c % d, 0);
                    c / d
                })
                .collect(),
        }
    }

    /// Divides by `divisor`, which must have a unit (±1) leading coefficient.
    /// Returns `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        let lead = *divisor.coeffs.last().unwrap();
        assert!(lead == 1 || lead == -1, "divisor must have unit leading coefficient");
        if self.coeffs.len() < dlen {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![0i128; qlen];
        for i in (0..qlen).rev() {
            let c = rem[i + dlen - 1];
            if c == 0 {
                continue;
            }
            let f = c * lead;
            quot[i] = f;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= ck_mul(f, *d);
            }
        }
        if rem.iter().any(|c| *c != 0) {
            return None;
        }
        Some(Self::from_coeffs(self.low - divisor.low, quot))
    }

    pub fn eval(&self, q: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * q + *c as f64;
        }
        acc * q.powi(self.low)
    }

    /// Formal derivative in `q`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e - 1, ck_mul(c, e as i128))))
    }
}

impl fmt::Display for Laurent {
    /// Renders as a sum in decreasing-exponent order, e.g. `q^4 - 2*q + 3 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            match (mag, e) {
                (m, 0) => write!(f, "{}", m)?,
                (1, 1) => write!(f, "q")?,
                (1, e) => write!(f, "q^{}", e)?,
                (m, 1) => write!(f, "{}*q", m)?,
                (m, e) => write!(f, "{}*q^{}", m, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({})", self)
    }
}

impl PartialOrd for Laurent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Laurent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.low, &self.coeffs).cmp(&(other.low, &other.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_division() {
        // (1 - q^2) = (1 - q)(1 + q)
        let a = Laurent::from_terms([(0, 1), (1, -1)]);
        let b = Laurent::from_terms([(0, 1), (1, 1)]);
        let p = a.mul(&b);
        assert_eq!(p, Laurent::from_terms([(0, 1), (2, -1)]));
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(Laurent::from_terms([(0, 1), (2, 1)]).div_exact(&b), None);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn laurent_shift_and_eval() {
        let p = Laurent::from_terms([(-2, 3), (1, 1)]);
        assert_eq!(p.low(), -2);
        assert_eq!(p.high(), 1);
        assert!((p.eval(0.5) - (12.0 + 0.5)).abs() < 1e-12);
        assert_eq!(p.to_string(), "q + 3*q^-2");
        assert_eq!(p.derivative(), Laurent::from_terms([(-3, -6), (0, 1)]));
    }
}

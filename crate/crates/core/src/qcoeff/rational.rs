//! Rational functions of `q` whose denominators are products of cyclotomic
//! factors and a positive integer.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::cyclotomic::{self, cyclo};
use super::laurent::Laurent;
use super::QError;

/// `num / (den_int * prod_d P_d^{e_d})` in lowest terms.
///
/// Invariants: `den_int > 0`; every stored exponent is positive; no `P_d` in
/// the denominator divides `num`; `gcd(content(num), den_int) = 1`; zero is
/// `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QRational {
    num: Laurent,
    den_int: i128,
    den: BTreeMap<u32, u32>,
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QRational {
    pub fn zero() -> Self {
        QRational { num: Laurent::zero(), den_int: 1, den: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }

    pub fn from_int(c: i128) -> Self {
        Self::from_laurent(Laurent::constant(c))
    }

    pub fn from_laurent(num: Laurent) -> Self {
        QRational { num, den_int: 1, den: BTreeMap::new() }
    }

    /// `c q^e`.
    pub fn monomial(c: i128, e: i32) -> Self {
        Self::from_laurent(Laurent::monomial(c, e))
    }

    /// Builds and normalizes `num / (den_int * prod P_d^{e_d})`.
    pub fn new(num: Laurent, den_int: i128, den: BTreeMap<u32, u32>) -> Self {
        assert!(den_int != 0, "zero integer denominator");
        let (num, den_int) = if den_int < 0 { (num.neg(), -den_int) } else { (num, den_int) };
        let mut r = QRational { num, den_int, den };
        r.normalize();
        r
    }

    /// Rational `a / b` with integer parts.
    pub fn ratio(a: i128, b: i128) -> Self {
        Self::new(Laurent::constant(a), b, BTreeMap::new())
    }

    fn normalize(&mut self) {
        self.den.retain(|_, e| *e > 0);
        if self.num.is_zero() {
            *self = Self::zero();
            return;
        }
        let keys: Vec<u32> = self.den.keys().copied().collect();
        for d in keys {
            let f = cyclo(d);
            loop {
                let e = self.den[&d];
                if e == 0 {
                    break;
                }
                match self.num.div_exact(&f) {
                    Some(quot) => {
                        self.num = quot;
                        *self.den.get_mut(&d).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, e| *e > 0);
        if self.den_int != 1 {
            let g = self.num.content().gcd(&self.den_int);
            if g > 1 {
                self.num = self.num.div_int_exact(g);
                self.den_int /= g;
            }
        }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn den_int(&self) -> i128 {
        self.den_int
    }

    pub fn den_factors(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    /// Expanded denominator `den_int * prod P_d^{e_d}`.
    pub fn denominator(&self) -> Laurent {
        cyclotomic::expand(&self.den).scale(self.den_int)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den_int == 1 && self.den.is_empty() && self.num.is_one()
    }

    /// True if there is no denominator at all (a Laurent polynomial over Z).
    pub fn is_laurent(&self) -> bool {
        self.den_int == 1 && self.den.is_empty()
    }

    /// The value as a rational constant `(a, b)` if it does not depend on `q`.
    pub fn as_rational_constant(&self) -> Option<(i128, i128)> {
        if !self.den.is_empty() {
            return None;
        }
        self.num.as_constant().map(|a| (a, self.den_int))
    }

    /// Integer value if this is a `q`-independent integer.
    pub fn as_integer(&self) -> Option<i128> {
        match self.as_rational_constant() {
            Some((a, 1)) => Some(a),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        QRational { num: self.num.neg(), den_int: self.den_int, den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den && self.den_int == other.den_int {
            let mut r = QRational { num: self.num.add(&other.num), den_int: self.den_int, den: self.den.clone() };
            r.normalize();
            return r;
        }
        let lcm_int = self.den_int.lcm(&other.den_int);
        let mut den = self.den.clone();
        for (d, e) in &other.den {
            let slot = den.entry(*d).or_insert(0);
            *slot = (*slot).max(*e);
        }
        let lift = |r: &QRational| -> Laurent {
            let mut n = r.num.scale(lcm_int / r.den_int);
            for (d, e) in &den {
                let have = r.den.get(d).copied().unwrap_or(0);
                for _ in have..*e {
                    n = n.mul(&cyclo(*d));
                }
            }
            n
        };
        let num = lift(self).add(&lift(other));
        let mut r = QRational { num, den_int: lcm_int, den };
        r.normalize();
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (d, e) in &other.den {
            *den.entry(*d).or_insert(0) += e;
        }
        let den_int = self.den_int.checked_mul(other.den_int).expect("integer denominator overflow");
        let mut r = QRational { num: self.num.mul(&other.num), den_int, den };
        r.normalize();
        r
    }

    /// Multiplies by a Laurent polynomial.
    pub fn mul_laurent(&self, l: &Laurent) -> Self {
        let mut r = QRational { num: self.num.mul(l), den_int: self.den_int, den: self.den.clone() };
        r.normalize();
        r
    }

    /// Multiplies by `prod_d P_d^{e_d}`, cancelling against the denominator first.
    pub fn mul_cyclo(&self, factors: &BTreeMap<u32, u32>) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        let mut num = self.num.clone();
        for (d, e) in factors {
            for _ in 0..*e {
                match den.get_mut(d) {
                    Some(k) if *k > 0 => *k -= 1,
                    _ => num = num.mul(&cyclo(*d)),
                }
            }
        }
        let mut r = QRational { num, den_int: self.den_int, den };
        r.normalize();
        r
    }

    /// Divides by `prod_d P_d^{e_d}`.
    pub fn div_cyclo(&self, factors: &BTreeMap<u32, u32>) -> Self {
        let mut den = self.den.clone();
        for (d, e) in factors {
            *den.entry(*d).or_insert(0) += e;
        }
        let mut r = QRational { num: self.num.clone(), den_int: self.den_int, den };
        r.normalize();
        r
    }

    /// Multiplicative inverse. The numerator must factor completely into
    /// cyclotomic factors, a power of `q` and an integer.
    pub fn inv(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        let fac = cyclotomic::factor(&self.num).ok_or_else(|| {
            QError::Unsupported(format!("inverse of non-cyclotomic numerator {}", self.num))
        })?;
        // 1/(c q^k prod P^e) * den_int * prod P^f
        let num = cyclotomic::expand(&self.den).scale(self.den_int).shift(-fac.q_power);
        Ok(QRational::new(num, fac.constant, fac.factors))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, q: f64) -> f64 {
        let mut den = self.den_int as f64;
        for (d, e) in &self.den {
            den *= cyclo(*d).eval(q).powi(*e as i32);
        }
        self.num.eval(q) / den
    }

    /// Derivative numerator test: true iff the function is constant in `q`.
    pub fn is_q_independent(&self) -> bool {
        self.den.is_empty() && self.num.as_constant().is_some()
    }
}

impl fmt::Display for QRational {
    /// `N` when the denominator is 1, `(N)/(D)` otherwise, with `D` expanded.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.denominator())
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({})", self)
    }
}

//! Exact scalars: rational functions of `q` extended by principal square
//! roots of products of positive cyclotomic factors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;

use super::cyclotomic::{self, cyclo};
use super::laurent::Laurent;
use super::rational::QRational;
use super::QError;

/// `sqrt(prod_{d in factors} P_d)`; each cyclotomic index appears at most once.
/// The empty radical is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Radical {
    factors: SmallVec<[u32; 4]>,
}

impl Radical {
    pub fn one() -> Self {
        Radical { factors: SmallVec::new() }
    }

    /// Builds from odd-parity indices (duplicates are rejected).
    pub fn from_indices<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut factors: SmallVec<[u32; 4]> = iter.into_iter().collect();
        factors.sort_unstable();
        let len = factors.len();
        factors.dedup();
        assert_eq!(len, factors.len(), "radical indices must be distinct");
        Radical { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn indices(&self) -> &[u32] {
        &self.factors
    }

    /// Product of two radicals: the symmetric difference stays under the root,
    /// shared factors leave it squared.
    pub fn mul(&self, other: &Self) -> (Radical, BTreeMap<u32, u32>) {
        let mut out = SmallVec::new();
        let mut squared = BTreeMap::new();
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                out.push(b[j]);
                j += 1;
            } else {
                squared.insert(a[i], 1);
                i += 1;
                j += 1;
            }
        }
        (Radical { factors: out }, squared)
    }

    /// The radicand as an expanded polynomial.
    pub fn radicand(&self) -> Laurent {
        let mut p = Laurent::one();
        for d in &self.factors {
            p = p.mul(&cyclo(*d));
        }
        p
    }

    pub fn radicand_factors(&self) -> BTreeMap<u32, u32> {
        self.factors.iter().map(|d| (*d, 1)).collect()
    }

    pub fn eval(&self, q: f64) -> f64 {
        self.radicand().eval(q).sqrt()
    }
}

impl fmt::Debug for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt{:?}", self.factors.as_slice())
    }
}

/// A finite sum `sum_r c_r * sqrt(r)` with no zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QScalar {
    terms: BTreeMap<Radical, QRational>,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(QRational::one())
    }

    pub fn from_int(c: i128) -> Self {
        Self::from_rational(QRational::from_int(c))
    }

    /// `c q^e`.
    pub fn monomial(c: i128, e: i32) -> Self {
        Self::from_rational(QRational::monomial(c, e))
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_laurent(l: Laurent) -> Self {
        Self::from_rational(QRational::from_laurent(l))
    }

    pub fn from_rational(r: QRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Radical::one(), r);
        }
        QScalar { terms }
    }

    /// `r * sqrt(rad)`.
    pub fn from_term(rad: Radical, r: QRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(rad, r);
        }
        QScalar { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Radical, &QRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Radical::one()).is_some_and(|r| r.is_one())
    }

    /// The radical-free part.
    pub fn rational_part(&self) -> QRational {
        self.terms.get(&Radical::one()).cloned().unwrap_or_else(QRational::zero)
    }

    /// The value as an element of Q(q), if it has no radical terms.
    pub fn as_rational(&self) -> Option<QRational> {
        match self.terms.len() {
            0 => Some(QRational::zero()),
            1 => self.terms.get(&Radical::one()).cloned(),
            _ => None,
        }
    }

    /// The value as a Laurent polynomial over Z, if it is one.
    pub fn as_laurent(&self) -> Option<Laurent> {
        self.as_rational().filter(|r| r.is_laurent()).map(|r| r.numerator().clone())
    }

    /// Integer value if `q`-independent, radical-free and integral.
    pub fn as_integer(&self) -> Option<i128> {
        self.as_rational().and_then(|r| r.as_integer())
    }

    pub fn neg(&self) -> Self {
        QScalar { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect() }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (rad, r) in &other.terms {
            match self.terms.get_mut(rad) {
                Some(slot) => {
                    let s = slot.add(r);
                    if s.is_zero() {
                        self.terms.remove(rad);
                    } else {
                        *slot = s;
                    }
                }
                None => {
                    self.terms.insert(rad.clone(), r.clone());
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (ra, ca) in &self.terms {
            for (rb, cb) in &other.terms {
                let (rad, squared) = ra.mul(rb);
                let mut c = ca.mul(cb);
                if !squared.is_empty() {
                    c = c.mul_cyclo(&squared);
                }
                out.add_assign(&QScalar::from_term(rad, c));
            }
        }
        out
    }

    pub fn mul_laurent(&self, l: &Laurent) -> Self {
        if l.is_zero() {
            return Self::zero();
        }
        QScalar { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul_laurent(l))).collect() }
    }

    pub fn mul_rational(&self, r: &QRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        QScalar { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul(r))).collect() }
    }

    /// Inverse of a single-term scalar: `1/(c sqrt(r)) = sqrt(r) / (c r)`.
    pub fn inv(&self) -> Result<Self, QError> {
        match self.terms.len() {
            0 => Err(QError::DivisionByZero),
            1 => {
                let (rad, c) = self.terms.iter().next().unwrap();
                let inv = c.inv()?.div_cyclo(&rad.radicand_factors());
                Ok(QScalar::from_term(rad.clone(), inv))
            }
            _ => Err(QError::Unsupported("inverse of a multi-term scalar".into())),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, QError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Principal square root of a radical-free single term whose numerator
    /// and denominator factor into a positive rational square, an even power
    /// of `q` and positive cyclotomic factors.
    pub fn sqrt(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let r = self.as_rational().ok_or_else(|| {
            QError::NotAPerfectRadicand(format!("radicand has radical or several terms: {}", self))
        })?;
        let fac = cyclotomic::factor(r.numerator())
            .ok_or_else(|| QError::NotAPerfectRadicand(format!("non-cyclotomic factor in {}", r)))?;
        if fac.q_power % 2 != 0 {
            return Err(QError::NotAPerfectRadicand(format!("odd power of q in {}", r)));
        }
        // constant / den_int must be a positive rational square
        let (c, d) = (fac.constant, r.den_int());
        if c <= 0 {
            return Err(QError::NotAPerfectRadicand(format!("non-positive constant in {}", r)));
        }
        let (sc, sd) = match (isqrt_exact(c), isqrt_exact(d)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                // c/d = (c*d)/d^2
                match isqrt_exact(c.checked_mul(d).expect("overflow in sqrt")) {
                    Some(a) => (a, d),
                    None => {
                        return Err(QError::NotAPerfectRadicand(format!(
                            "rational constant {}/{} is not a square",
                            c, d
                        )))
                    }
                }
            }
        };
        // net cyclotomic exponents: numerator minus denominator
        let mut net: BTreeMap<u32, i64> = BTreeMap::new();
        for (k, e) in &fac.factors {
            *net.entry(*k).or_insert(0) += *e as i64;
        }
        for (k, e) in r.den_factors() {
            *net.entry(*k).or_insert(0) -= *e as i64;
        }
        let mut num_f = BTreeMap::new();
        let mut den_f = BTreeMap::new();
        let mut rad = Vec::new();
        for (k, e) in net {
            let half = e.div_euclid(2);
            if e.rem_euclid(2) == 1 {
                rad.push(k);
            }
            if half > 0 {
                num_f.insert(k, half as u32);
            } else if half < 0 {
                den_f.insert(k, (-half) as u32);
            }
        }
        let num = cyclotomic::expand(&num_f).scale(sc).shift(fac.q_power / 2);
        let rat = QRational::new(num, sd, den_f);
        Ok(QScalar::from_term(Radical::from_indices(rad), rat))
    }

    /// Numeric value at `0 < q < 1`; radicals are principal real roots.
    pub fn eval(&self, q: f64) -> f64 {
        self.terms.iter().map(|(rad, c)| c.eval(q) * rad.eval(q)).sum()
    }

    /// Text form in the scalar grammar (see [`crate::qcoeff::parse`]).
    pub fn render(&self) -> String {
        self.to_string()
    }

    fn fmt_rational_atom(r: &QRational) -> String {
        if r.is_laurent() {
            let s = r.numerator().to_string();
            if r.numerator().terms().count() > 1 {
                format!("({})", s)
            } else {
                s
            }
        } else {
            format!("({})/({})", r.numerator(), r.denominator())
        }
    }
}

fn isqrt_exact(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

impl fmt::Display for QScalar {
    /// Sums of `coeff*sqrt(radicand)`; a lone radical-free term prints bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(rad, c)| {
                if rad.is_one() {
                    if self.terms.len() == 1 {
                        c.to_string()
                    } else {
                        QScalar::fmt_rational_atom(c)
                    }
                } else {
                    format!("{}*sqrt({})", QScalar::fmt_rational_atom(c), rad.radicand())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({})", self)
    }
}

/// `[n] = (1 - q^{2n}) / (1 - q^2) = 1 + q^2 + ... + q^{2(n-1)}`.
pub fn qnum(n: u32) -> QScalar {
    QScalar::from_laurent(Laurent::from_terms((0..n as i32).map(|i| (2 * i, 1))))
}

/// Rescaled q-binomial `prod_{i=k+1}^n (1-q^{2i}) / prod_{j=1}^{n-k} (1-q^{2j})`.
pub fn qbinom(n: u32, k: u32) -> Result<QScalar, QError> {
    if k > n {
        return Err(QError::Domain(format!("qbinom({}, {}) needs 0 <= k <= n", n, k)));
    }
    let mut num = BTreeMap::new();
    for i in k + 1..=n {
        for (d, e) in cyclotomic::one_minus_q_pow(2 * i) {
            *num.entry(d).or_insert(0) += e;
        }
    }
    let mut den = BTreeMap::new();
    for j in 1..=n - k {
        for (d, e) in cyclotomic::one_minus_q_pow(2 * j) {
            *den.entry(d).or_insert(0) += e;
        }
    }
    let r = QRational::new(cyclotomic::expand(&num), 1, den);
    debug_assert!(r.is_laurent(), "q-binomial must be a polynomial");
    Ok(QScalar::from_rational(r))
}

/// `[n]^{1/2}`.
pub fn qnum_sqrt(n: u32) -> QScalar {
    qnum(n).sqrt().expect("q-numbers are cyclotomic products")
}

/// `[n]^{-1/2}` for `n >= 1`.
pub fn qnum_inv_sqrt(n: u32) -> QScalar {
    qnum_sqrt(n).inv().expect("q-number is nonzero for n >= 1")
}

/// Accumulates `sum_i c_i * L_i` with scalar `c_i` and Laurent `L_i`, deferring
/// normalization until [`ScalarAcc::finish`]. Terms sharing a radical and a
/// denominator are combined by plain Laurent addition.
#[derive(Default, Clone)]
pub struct ScalarAcc {
    buckets: HashMap<(Radical, i128, BTreeMap<u32, u32>), Laurent>,
}

impl ScalarAcc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_scaled(&mut self, c: &QScalar, l: &Laurent) {
        for (rad, r) in c.terms() {
            let key = (rad.clone(), r.den_int(), r.den_factors().clone());
            let prod = r.numerator().mul(l);
            self.buckets.entry(key).or_default().add_assign(&prod);
        }
    }

    pub fn add(&mut self, c: &QScalar) {
        self.add_scaled(c, &Laurent::one());
    }

    pub fn finish(self) -> QScalar {
        let mut out = QScalar::zero();
        for ((rad, den_int, den), num) in self.buckets {
            if num.is_zero() {
                continue;
            }
            out.add_assign(&QScalar::from_term(rad, QRational::new(num, den_int, den)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i32, i128)]) -> QScalar {
        QScalar::from_laurent(Laurent::from_terms(terms.iter().copied()))
    }

    #[test]
    fn qnum_values() {
        assert!(qnum(0).is_zero());
        assert!(qnum(1).is_one());
        assert_eq!(qnum(2), poly(&[(0, 1), (2, 1)]));
        assert!((qnum(2).eval(0.5) - 1.25).abs() < 1e-15);
    }

    #[test]
    fn qbinom_values() {
        for n in 0..6 {
            assert!(qbinom(n, 0).unwrap().is_one());
        }
        assert_eq!(qbinom(2, 1).unwrap(), poly(&[(0, 1), (2, 1)]));
        assert_eq!(qbinom(3, 1).unwrap(), poly(&[(0, 1), (2, 1), (4, 1)]));
        assert!(matches!(qbinom(2, 3), Err(QError::Domain(_))));
    }

    #[test]
    fn sqrt_of_qnum2_is_radical_phi4() {
        let s = qnum(2).sqrt().unwrap();
        assert_eq!(s, QScalar::from_term(Radical::from_indices([4]), QRational::one()));
        assert_eq!(s.mul(&s), qnum(2));
        assert!(QScalar::one().sqrt().unwrap().is_one());
    }

    #[test]
    fn sqrt_rejections() {
        assert!(matches!(poly(&[(1, 1)]).sqrt(), Err(QError::NotAPerfectRadicand(_))));
        assert!(matches!(QScalar::from_int(2).sqrt(), Err(QError::NotAPerfectRadicand(_))));
        assert!(matches!(QScalar::from_int(-1).sqrt(), Err(QError::NotAPerfectRadicand(_))));
        let two_terms = qnum_sqrt(2).add(&QScalar::one());
        assert!(matches!(two_terms.sqrt(), Err(QError::NotAPerfectRadicand(_))));
        let ok = QScalar::from_rational(QRational::ratio(9, 4)).mul(&qnum(3)).mul(&poly(&[(4, 1)]));
        let r = ok.sqrt().unwrap();
        assert_eq!(r.mul(&r), ok);
    }

    #[test]
    fn inverse_of_radical_term() {
        let s = qnum_inv_sqrt(3);
        assert_eq!(s.mul(&qnum_sqrt(3)), QScalar::one());
        assert!(matches!(QScalar::zero().inv(), Err(QError::DivisionByZero)));
        assert!(matches!(qnum_sqrt(2).add(&QScalar::one()).inv(), Err(QError::Unsupported(_))));
    }

    #[test]
    fn qqn_identity_for_3_1() {
        // q^{2k}[n-k] + [k] = [n] at (n, k) = (3, 1)
        let lhs = QScalar::q_pow(2).mul(&qnum(2)).add(&qnum(1));
        assert_eq!(lhs, qnum(3));
    }

    #[test]
    fn accumulator_matches_direct_sum() {
        let a = qnum_inv_sqrt(2);
        let b = qnum_inv_sqrt(3).mul(&QScalar::q_pow(-1));
        let la = Laurent::from_terms([(0, 1), (2, 1)]);
        let lb = Laurent::from_terms([(1, -2)]);
        let mut acc = ScalarAcc::new();
        acc.add_scaled(&a, &la);
        acc.add_scaled(&b, &lb);
        acc.add_scaled(&a, &la);
        let direct = a.mul_laurent(&la).add(&b.mul_laurent(&lb)).add(&a.mul_laurent(&la));
        assert_eq!(acc.finish(), direct);
    }
}

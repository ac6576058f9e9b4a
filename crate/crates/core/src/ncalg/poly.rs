//! Normal-ordered noncommutative polynomials with exact scalar coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use super::presentation::{Presentation, Word};
use super::AlgebraError;
use crate::qcoeff::parse::{parse_with, ParseContext};
use crate::qcoeff::{QError, QScalar, ScalarAcc};

/// A polynomial whose words are all in normal form for its presentation.
#[derive(Clone)]
pub struct NCPoly {
    pres: Arc<Presentation>,
    terms: BTreeMap<Word, QScalar>,
}

impl NCPoly {
    pub fn zero(pres: &Arc<Presentation>) -> Self {
        NCPoly { pres: pres.clone(), terms: BTreeMap::new() }
    }

    pub fn one(pres: &Arc<Presentation>) -> Self {
        Self::constant(pres, QScalar::one())
    }

    pub fn constant(pres: &Arc<Presentation>, c: QScalar) -> Self {
        Self::term(pres, &[], c)
    }

    pub fn generator(pres: &Arc<Presentation>, g: u8) -> Self {
        assert!((g as usize) < pres.num_generators(), "generator index out of range");
        Self::term(pres, &[g], QScalar::one())
    }

    /// Looks a generator up by its display name, e.g. `x2*` or `alpha`.
    pub fn named(pres: &Arc<Presentation>, name: &str) -> Option<Self> {
        pres.generator_index(name).map(|g| Self::generator(pres, g))
    }

    /// `c * w`, reducing the word to normal form.
    pub fn term(pres: &Arc<Presentation>, word: &[u8], c: QScalar) -> Self {
        Self::normal_form(pres, [(SmallVec::from_slice(word), c)])
    }

    /// Normal form of an arbitrary linear combination of words.
    pub fn normal_form<I: IntoIterator<Item = (Word, QScalar)>>(pres: &Arc<Presentation>, terms: I) -> Self {
        let mut acc: HashMap<Word, ScalarAcc> = HashMap::new();
        for (w, c) in terms {
            if c.is_zero() {
                continue;
            }
            if pres.is_normal(&w) {
                acc.entry(w).or_default().add(&c);
                continue;
            }
            for (u, l) in pres.reduce(&w).iter() {
                acc.entry(u.clone()).or_default().add_scaled(&c, l);
            }
        }
        Self::from_acc(pres, acc)
    }

    /// Like [`NCPoly::normal_form`] but reports a diagnostic instead of
    /// panicking when the step budget runs out.
    pub fn try_normal_form<I: IntoIterator<Item = (Word, QScalar)>>(
        pres: &Arc<Presentation>,
        terms: I,
        budget: usize,
    ) -> Result<Self, AlgebraError> {
        let mut acc: HashMap<Word, ScalarAcc> = HashMap::new();
        for (w, c) in terms {
            for (u, l) in pres.reduce_word(&w, budget)? {
                acc.entry(u).or_default().add_scaled(&c, &l);
            }
        }
        Ok(Self::from_acc(pres, acc))
    }

    fn from_acc(pres: &Arc<Presentation>, acc: HashMap<Word, ScalarAcc>) -> Self {
        let terms = acc
            .into_iter()
            .filter_map(|(w, a)| {
                let c = a.finish();
                (!c.is_zero()).then_some((w, c))
            })
            .collect();
        NCPoly { pres: pres.clone(), terms }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &[u8]) -> QScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> QScalar {
        self.coeff(&[])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if the polynomial is a scalar multiple of the unit.
    pub fn as_constant(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => self.terms.get(&[] as &[u8]).cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    fn check_same(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.pres, &other.pres),
            "{}",
            AlgebraError::AlgebraMismatch(self.pres.name().into(), other.pres.name().into())
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            match terms.get_mut(w) {
                Some(slot) => {
                    slot.add_assign(c);
                    if slot.is_zero() {
                        terms.remove(w);
                    }
                }
                None => {
                    terms.insert(w.clone(), c.clone());
                }
            }
        }
        NCPoly { pres: self.pres.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NCPoly { pres: self.pres.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.pres);
        }
        NCPoly { pres: self.pres.clone(), terms: self.terms.iter().map(|(w, d)| (w.clone(), d.mul(c))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.pres);
        }
        let mut acc: HashMap<Word, ScalarAcc> = HashMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let c = ca.mul(cb);
                for (u, l) in self.pres.mul_words(wa, wb).iter() {
                    acc.entry(u.clone()).or_default().add_scaled(&c, l);
                }
            }
        }
        Self::from_acc(&self.pres, acc)
    }

    /// `sum_i a_i b_i`, accumulated before normalizing coefficients.
    pub fn dot<'a, I>(pres: &Arc<Presentation>, pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a NCPoly, &'a NCPoly)>,
    {
        let mut acc: HashMap<Word, ScalarAcc> = HashMap::new();
        for (a, b) in pairs {
            a.check_same(b);
            for (wa, ca) in &a.terms {
                for (wb, cb) in &b.terms {
                    let c = ca.mul(cb);
                    for (u, l) in pres.mul_words(wa, wb).iter() {
                        acc.entry(u.clone()).or_default().add_scaled(&c, l);
                    }
                }
            }
        }
        Self::from_acc(pres, acc)
    }

    /// Sum of many polynomials with a single normalization pass.
    pub fn sum<'a, I: IntoIterator<Item = &'a NCPoly>>(pres: &Arc<Presentation>, items: I) -> Self {
        let mut acc: HashMap<Word, ScalarAcc> = HashMap::new();
        for p in items {
            for (w, c) in &p.terms {
                acc.entry(w.clone()).or_default().add(c);
            }
        }
        Self::from_acc(pres, acc)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.pres);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The involution: reverses words, stars letters, keeps coefficients
    /// (`q` is real) and renormalizes.
    pub fn star(&self) -> Self {
        Self::normal_form(&self.pres, self.terms.iter().map(|(w, c)| (self.pres.star_word(w), c.clone())))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F: Fn(&QScalar) -> QScalar>(&self, f: F) -> Self {
        NCPoly {
            pres: self.pres.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(w, c)| {
                    let d = f(c);
                    (!d.is_zero()).then(|| (w.clone(), d))
                })
                .collect(),
        }
    }

    pub fn eval_coeffs(&self, q: f64) -> Vec<(Word, f64)> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.eval(q))).collect()
    }

    /// Text form, e.g. `(q^-1) x1 x2* + x3`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("({})", c.render())
                } else if c.is_one() {
                    self.pres.word_name(w)
                } else {
                    format!("({}) {}", c.render(), self.pres.word_name(w))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the text grammar of the algebra; any word is accepted and
    /// brought to normal form.
    pub fn parse(pres: &Arc<Presentation>, src: &str) -> Result<Self, QError> {
        parse_with(&PolyGrammar { pres: pres.clone() }, src)
    }
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]({})", self.pres.name(), self.render())
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::add(self, rhs)
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::sub(self, rhs)
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        NCPoly::mul(self, rhs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly::neg(self)
    }
}

struct PolyGrammar {
    pres: Arc<Presentation>,
}

impl ParseContext for PolyGrammar {
    type Value = NCPoly;

    fn int(&self, c: i128) -> NCPoly {
        NCPoly::constant(&self.pres, QScalar::from_int(c))
    }
    fn q(&self) -> NCPoly {
        NCPoly::constant(&self.pres, QScalar::q_pow(1))
    }
    fn add(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a.add(b)
    }
    fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        a.mul(b)
    }
    fn neg(&self, a: &NCPoly) -> NCPoly {
        a.neg()
    }
    fn div(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, QError> {
        let c = b.as_constant().ok_or_else(|| QError::Unsupported("division by a non-scalar".into()))?;
        Ok(a.scale(&c.inv()?))
    }
    fn sqrt(&self, a: &NCPoly) -> Result<NCPoly, QError> {
        let c = a.as_constant().ok_or_else(|| QError::Unsupported("square root of a non-scalar".into()))?;
        Ok(NCPoly::constant(&self.pres, c.sqrt()?))
    }
    fn generator(&self, name: &str, starred: bool) -> Result<NCPoly, QError> {
        let full = if starred { format!("{}*", name) } else { name.to_string() };
        NCPoly::named(&self.pres, &full)
            .ok_or_else(|| QError::Parse(format!("unknown generator {} in {}", full, self.pres.name())))
    }
}

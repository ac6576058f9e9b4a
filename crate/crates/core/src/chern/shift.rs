//! The representation `π` on `ℓ²(ℕ²)` as symbolic weighted shifts, and the
//! exact trace of diagonal symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;
use rayon::prelude::*;

use super::ChernError;
use crate::ncalg::{presentation_s7q, s7, NCPoly, Word};
use crate::qcoeff::{cyclotomic::one_minus_q_pow, Laurent, QRational, QScalar, ScalarAcc};

/// Radicand families: `1 - q^{2(k₁+i)}` and `1 - q^{4(k₂+j)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Radicand {
    K1,
    K2,
}

/// `|k₁,k₂⟩ ↦ c q^{αk₁+βk₂} ∏ (radicand at offset)^{h/2} |k₁+a, k₂+b⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTerm {
    pub shift: (i32, i32),
    pub exps: (i32, i32),
    pub coeff: QScalar,
    pub radicals: BTreeMap<(Radicand, i32), u32>,
}

impl ShiftTerm {
    pub fn identity() -> Self {
        ShiftTerm { shift: (0, 0), exps: (0, 0), coeff: QScalar::one(), radicals: BTreeMap::new() }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &ShiftTerm) -> ShiftTerm {
        let (s1, s2) = other.shift;
        let coeff = self.coeff.mul(&other.coeff).mul(&QScalar::q_pow(self.exps.0 * s1 + self.exps.1 * s2));
        let mut radicals = other.radicals.clone();
        for ((kind, off), h) in &self.radicals {
            let moved = off + if *kind == Radicand::K1 { s1 } else { s2 };
            *radicals.entry((*kind, moved)).or_insert(0) += h;
        }
        ShiftTerm {
            shift: (self.shift.0 + s1, self.shift.1 + s2),
            exps: (self.exps.0 + other.exps.0, self.exps.1 + other.exps.1),
            coeff,
            radicals,
        }
    }

    /// Numeric matrix element `⟨k+shift| · |k⟩` at `q = q0`.
    pub fn eval(&self, k1: i64, k2: i64, q0: f64) -> f64 {
        let mut v = self.coeff.eval(q0) * q0.powf((self.exps.0 as i64 * k1 + self.exps.1 as i64 * k2) as f64);
        for ((kind, off), h) in &self.radicals {
            let r = match kind {
                Radicand::K1 => 1.0 - q0.powf(2.0 * (k1 + *off as i64) as f64),
                Radicand::K2 => 1.0 - q0.powf(4.0 * (k2 + *off as i64) as f64),
            };
            v *= r.max(0.0).powf(*h as f64 / 2.0);
        }
        v
    }
}

/// The shift term of a single generator, or `None` for `x₁`, `x₁*`.
pub fn generator_term(g: u8) -> Option<ShiftTerm> {
    use s7::*;
    let mut t = ShiftTerm::identity();
    match g {
        X1 | X1S => return None,
        X2 | X2S => t.exps = (1, 2),
        X3 => {
            t.shift = (0, 1);
            t.exps = (1, 0);
            t.radicals.insert((Radicand::K2, 1), 1);
        }
        X3S => {
            t.shift = (0, -1);
            t.exps = (1, 0);
            t.radicals.insert((Radicand::K2, 0), 1);
        }
        X4 => {
            t.shift = (1, 0);
            t.radicals.insert((Radicand::K1, 1), 1);
        }
        X4S => {
            t.shift = (-1, 0);
            t.radicals.insert((Radicand::K1, 0), 1);
        }
        _ => unreachable!("S7 has eight generators"),
    }
    Some(t)
}

/// `π(w)` for a word, or `None` if it vanishes identically.
pub fn word_term(w: &[u8]) -> Option<ShiftTerm> {
    let mut t = ShiftTerm::identity();
    for g in w.iter().rev() {
        t = generator_term(*g)?.compose(&t);
    }
    Some(t)
}

/// `π(p)` as a list of shift terms, one per surviving word.
pub fn rep_pi(p: &NCPoly) -> Vec<ShiftTerm> {
    p.terms()
        .filter_map(|(w, c)| {
            word_term(w).map(|mut t| {
                t.coeff = t.coeff.mul(c);
                t
            })
        })
        .collect()
}

/// A function on `ℕ²` written as `Σ c q^{αk₁+βk₂}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagSymbol {
    terms: BTreeMap<(i32, i32), QScalar>,
}

impl DiagSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: QScalar) -> Self {
        let mut d = Self::zero();
        d.add_term((0, 0), &c);
        d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &QScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: (i32, i32)) -> QScalar {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: (i32, i32), c: &QScalar) {
        let slot = self.terms.entry(exps).or_default();
        slot.add_assign(c);
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &DiagSymbol) -> DiagSymbol {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> DiagSymbol {
        let mut out = DiagSymbol::zero();
        for (k, d) in &self.terms {
            out.add_term(*k, &d.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &DiagSymbol) -> DiagSymbol {
        let mut out = DiagSymbol::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), &c1.mul(c2));
            }
        }
        out
    }

    /// Value at `(k₁, k₂)` for `q = q0`.
    pub fn eval(&self, k1: i64, k2: i64, q0: f64) -> f64 {
        self.terms.iter().map(|((a, b), c)| c.eval(q0) * q0.powf((*a as i64 * k1 + *b as i64 * k2) as f64)).sum()
    }
}

impl fmt::Display for DiagSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("({}) q^({}k1 + {}k2)", c.render(), a, b)).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `(1 - q^{step·offset} X^{step})^m` as a symbol, `X` standing for `q^{k₁}` or `q^{k₂}`.
fn radicand_power(kind: Radicand, offset: i32, m: u32) -> DiagSymbol {
    let step = if kind == Radicand::K1 { 2 } else { 4 };
    let mut out = DiagSymbol::zero();
    let mut binom: i128 = 1;
    for j in 0..=m as i32 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = QScalar::monomial(sign * binom, step * offset * j);
        let exps = if kind == Radicand::K1 { (step * j, 0) } else { (0, step * j) };
        out.add_term(exps, &c);
        binom = binom * (m as i128 - j as i128) / (j as i128 + 1);
    }
    out
}

fn term_diagonal(t: &ShiftTerm) -> Result<DiagSymbol, ChernError> {
    let mut out = DiagSymbol::zero();
    out.add_term(t.exps, &t.coeff);
    for ((kind, off), h) in &t.radicals {
        if h % 2 != 0 {
            return Err(ChernError::UnpairedRadical(format!("{:?} offset {} with half-exponent {}", kind, off, h)));
        }
        out = out.mul(&radicand_power(*kind, *off, h / 2));
    }
    Ok(out)
}

/// The diagonal of a shift-term sum, with radicals expanded.
pub fn diagonal_part(ops: &[ShiftTerm]) -> Result<DiagSymbol, ChernError> {
    let mut out = DiagSymbol::zero();
    for t in ops.iter().filter(|t| t.shift == (0, 0)) {
        out = out.add(&term_diagonal(t)?);
    }
    Ok(out)
}

fn word_diagonal(w: &Word) -> Result<DiagSymbol, ChernError> {
    static CACHE: OnceLock<DashMap<Word, DiagSymbol>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(hit) = cache.get(w) {
        return Ok(hit.clone());
    }
    let d = match word_term(w) {
        Some(t) if t.shift == (0, 0) => term_diagonal(&t)?,
        _ => DiagSymbol::zero(),
    };
    cache.insert(w.clone(), d.clone());
    Ok(d)
}

/// Diagonal symbol of `π(p)`, computed word by word.
pub fn diagonal_of(p: &NCPoly) -> Result<DiagSymbol, ChernError> {
    assert!(std::sync::Arc::ptr_eq(p.presentation(), &presentation_s7q()), "π is defined on the 7-sphere");
    let terms: Vec<(&Word, &QScalar)> = p.terms().collect();
    let parts: Result<Vec<DiagSymbol>, ChernError> =
        terms.par_iter().map(|(w, c)| word_diagonal(w).map(|d| d.scale(c))).collect();
    let mut acc: BTreeMap<(i32, i32), ScalarAcc> = BTreeMap::new();
    for d in parts? {
        for (k, c) in d.terms {
            acc.entry(k).or_default().add(&c);
        }
    }
    let mut out = DiagSymbol::zero();
    for (k, a) in acc {
        out.add_term(k, &a.finish());
    }
    Ok(out)
}

/// Exact `Σ_{k₁,k₂ ≥ 0}` of a diagonal symbol, with its unreduced pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSum {
    pub pieces: Vec<((i32, i32), QScalar)>,
    pub value: QScalar,
}

fn fmt_denominator(a: i32, b: i32) -> String {
    format!("(1 - q^{})(1 - q^{})", a, b)
}

impl TraceSum {
    /// `c₁/((1-q^α₁)(1-q^β₁)) + ...` before reduction.
    pub fn render_unreduced(&self) -> String {
        if self.pieces.is_empty() {
            return "0".into();
        }
        self.pieces
            .iter()
            .map(|((a, b), c)| match c.as_laurent() {
                Some(l) => format!("({})/({})", l, fmt_denominator(*a, *b)),
                None => format!("({})/({})", c.render(), fmt_denominator(*a, *b)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Numerator over the common denominator `∏ (1-q^α)(1-q^β)` when there is a single piece.
    pub fn single_piece(&self) -> Option<(Laurent, (i32, i32))> {
        match self.pieces.as_slice() {
            [(exps, c)] => c.as_laurent().map(|l| (l, *exps)),
            _ => None,
        }
    }
}

/// `Σ c q^{γ}/((1-q^α)(1-q^β))`; every surviving term must have `α, β > 0`.
pub fn trace_sum(d: &DiagSymbol) -> Result<TraceSum, ChernError> {
    let mut acc = ScalarAcc::new();
    let mut pieces = Vec::new();
    for ((a, b), c) in d.terms() {
        if *a <= 0 || *b <= 0 {
            return Err(ChernError::NotTraceClass(format!("surviving term ({}) q^({}k1 + {}k2)", c.render(), a, b)));
        }
        let mut den = one_minus_q_pow(*a as u32);
        for (f, e) in one_minus_q_pow(*b as u32) {
            *den.entry(f).or_insert(0) += e;
        }
        acc.add(&c.mul_rational(&QRational::new(Laurent::one(), 1, den)));
        pieces.push(((*a, *b), c.clone()));
    }
    Ok(TraceSum { pieces, value: acc.finish() })
}

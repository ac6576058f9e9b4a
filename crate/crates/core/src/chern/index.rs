//! The index pair `(ch₀, ch₁)` and the relations it satisfies.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use super::shift::{diagonal_of, trace_sum, DiagSymbol, TraceSum};
use super::ChernError;
use crate::bundles::{p_n, p_n1, q_n, tensor_projection, tensor_trace, u1, u_n, Projection};
use crate::hopf::counit;
use crate::ncalg::NCPoly;
use crate::qcoeff::QScalar;

/// `c₀ + c₁ t` in `ℤ[t]/(t²)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DualNumber {
    pub c0: i64,
    pub c1: i64,
}

impl DualNumber {
    pub const ONE: DualNumber = DualNumber { c0: 1, c1: 0 };

    pub fn new(c0: i64, c1: i64) -> Self {
        DualNumber { c0, c1 }
    }

    pub fn constant(c0: i64) -> Self {
        DualNumber { c0, c1: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn pow(self, k: u32) -> Self {
        (0..k).fold(Self::ONE, |acc, _| acc * self)
    }
}

impl Add for DualNumber {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        DualNumber::new(self.c0 + o.c0, self.c1 + o.c1)
    }
}

impl Sub for DualNumber {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        DualNumber::new(self.c0 - o.c0, self.c1 - o.c1)
    }
}

impl Neg for DualNumber {
    type Output = Self;
    fn neg(self) -> Self {
        DualNumber::new(-self.c0, -self.c1)
    }
}

impl Mul for DualNumber {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        DualNumber::new(self.c0 * o.c0, self.c0 * o.c1 + self.c1 * o.c0)
    }
}

impl Mul<DualNumber> for i64 {
    type Output = DualNumber;
    fn mul(self, o: DualNumber) -> DualNumber {
        DualNumber::new(self * o.c0, self * o.c1)
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c0, self.c1)
    }
}

/// Exact characters of one projection.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterReport {
    pub module_label: String,
    pub n: Option<usize>,
    pub ch0: i64,
    pub ch1: i64,
    pub exact_intermediate: String,
    pub status: String,
}

impl CharacterReport {
    pub fn ch(&self) -> DualNumber {
        DualNumber::new(self.ch0, self.ch1)
    }
}

fn integer(s: &QScalar, what: &str) -> Result<i64, ChernError> {
    s.as_integer()
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| ChernError::NonIntegerIndex(format!("{what} = {}", s.render())))
}

/// `Tr_H(π(b) - ε(b))` as an unreduced sum and its exact value.
pub fn regularized_trace(b: &NCPoly) -> Result<TraceSum, ChernError> {
    let d = diagonal_of(b)?.add(&DiagSymbol::constant(counit(b).neg()));
    trace_sum(&d)
}

/// `η(b) = Tr_H(π(b) - ε(b))`.
pub fn eta(b: &NCPoly) -> Result<QScalar, ChernError> {
    Ok(regularized_trace(b)?.value)
}

/// `(ε(Tr P), Tr_H(π(Tr P) - ε(Tr P)))` from the matrix trace alone.
pub fn ch_of_trace(label: &str, n: Option<usize>, trace: &NCPoly, rank: usize) -> Result<CharacterReport, ChernError> {
    let ch0 = integer(&counit(trace), "ch0")?;
    if ch0 != rank as i64 {
        return Err(ChernError::RankMismatch { ch0, rank });
    }
    let sum = regularized_trace(trace)?;
    let ch1 = integer(&sum.value, "ch1")?;
    Ok(CharacterReport {
        module_label: label.to_string(),
        n,
        ch0,
        ch1,
        exact_intermediate: sum.render_unreduced(),
        status: "pass".into(),
    })
}

pub fn ch(label: &str, n: Option<usize>, p: &Projection) -> Result<CharacterReport, ChernError> {
    ch_of_trace(label, n, &p.trace(), p.rank())
}

/// `ch(p⁽ⁿ⁾)` from `Tr p⁽ⁿ⁾`.
pub fn ch_p(n: usize) -> Result<CharacterReport, ChernError> {
    ch(&format!("E{n}"), Some(n), &*p_n(n)?)
}

/// `ch(q⁽ⁿ⁾)` from `Tr q⁽ⁿ⁾`.
pub fn ch_q(n: usize) -> Result<CharacterReport, ChernError> {
    ch(&format!("Q{n}"), Some(n), &*q_n(n)?)
}

/// `ch(E₁ ⊗ Eₙ)` from the trace `Σ u (Tr p⁽ⁿ⁾) u*`.
pub fn ch_e1_tensor(n: usize) -> Result<CharacterReport, ChernError> {
    let p = p_n(n)?;
    let tr = tensor_trace(&p.trace(), &*u1()?);
    ch_of_trace(&format!("E1 x E{n}"), Some(n), &tr, 2 * (n + 1))
}

/// `-n(n+1)(n+2)/6`.
pub fn expected_ch1(n: usize) -> i64 {
    let n = n as i64;
    -n * (n + 1) * (n + 2) / 6
}

/// `ch₁(Eₙ)` for `n = 0..=n_max` obtained through `E₁ ⊗ Eₙ ≅ Eₙ₊₁ ⊕ Eₙ₋₁`:
/// `ch₁(Eₙ₊₁) = ch₁(E₁ ⊗ Eₙ) - ch₁(q⁽ⁿ⁻¹⁾)`.
pub fn ch1_via_decomposition(n_max: usize) -> Result<Vec<i64>, ChernError> {
    let mut out = vec![0];
    if n_max == 0 {
        return Ok(out);
    }
    out.push(ch_p(1)?.ch1);
    for n in 1..n_max {
        let tensor = ch_e1_tensor(n)?.ch1;
        out.push(tensor - ch_q(n - 1)?.ch1);
    }
    Ok(out)
}

/// Outcome of a relation check in `ℤ[t]/(t²)`.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub name: String,
    pub values: Vec<(String, DualNumber)>,
    pub result: DualNumber,
    pub expected: DualNumber,
    pub pass: bool,
}

impl RelationReport {
    fn new(name: &str, values: Vec<(String, DualNumber)>, result: DualNumber, expected: DualNumber) -> Self {
        RelationReport { name: name.into(), values, result, expected, pass: result == expected }
    }
}

/// `4 - 4 ch(E) + ch(E ⊗ E) = 0`, with `ch(E ⊗ E)` from the full tensor projection.
pub fn k_relation_check() -> Result<RelationReport, ChernError> {
    let pair = u1()?;
    let p = p_n(1)?;
    let e = ch("E", Some(1), &p)?.ch();
    let big = tensor_projection(&p, &pair)?;
    let ee = ch("E x E", Some(1), &big)?.ch();
    let result = 4 * DualNumber::ONE - 4 * e + ee;
    Ok(RelationReport::new(
        "4 - 4[E] + [E x E]",
        vec![("ch(E)".into(), e), ("ch(E x E)".into(), ee)],
        result,
        DualNumber::default(),
    ))
}

/// `(2 - ch(E))² = 0`.
pub fn euler_square_check() -> Result<RelationReport, ChernError> {
    let e = ch_p(1)?.ch();
    let chi = 2 * DualNumber::ONE - e;
    Ok(RelationReport::new("(2 - [E])^2", vec![("chi(E)".into(), chi)], chi * chi, DualNumber::default()))
}

/// `ch(E^{⊗k}) = (2^k, -k 2^{k-1})`, each power traced through `Σ u (Tr P) u*`.
pub fn tensor_power_check(k: u32) -> Result<RelationReport, ChernError> {
    let pair = u1()?;
    let mut tr = NCPoly::one(pair.u().presentation());
    let mut rank = 1;
    for _ in 0..k {
        tr = tensor_trace(&tr, &pair);
        rank *= 2;
    }
    let got = ch_of_trace(&format!("E^{k}"), None, &tr, rank)?.ch();
    let expected = DualNumber::new(2, -1).pow(k);
    Ok(RelationReport::new(&format!("ch(E^{k})"), vec![], got, expected))
}

/// `ch(E ⊗ Ẽ) = ch(E) ch(Ẽ)` for `E = E₁` and `Ẽ = Eₙ`.
pub fn multiplicativity_check(n: usize) -> Result<RelationReport, ChernError> {
    let e1 = ch_p(1)?.ch();
    let en = ch_p(n)?.ch();
    let prod = ch_e1_tensor(n)?.ch();
    Ok(RelationReport::new(&format!("ch(E1 x E{n})"), vec![("ch(E1)".into(), e1), (format!("ch(E{n})"), en)], prod, e1 * en))
}

/// `ch(p⁽ⁿ⁺¹⁾ ⊕ q⁽ⁿ⁻¹⁾) = ch(p⁽ⁿ⁺¹⁾) + ch(q⁽ⁿ⁻¹⁾) = ch(P⁽ⁿ,¹⁾)`.
pub fn additivity_check(n: usize) -> Result<RelationReport, ChernError> {
    let p = p_n(n + 1)?;
    let q = q_n(n - 1)?;
    let sum = p.direct_sum(&q);
    let block = ch("block sum", Some(n), &sum)?.ch();
    let parts = ch("p", Some(n + 1), &p)?.ch() + ch("q", Some(n - 1), &q)?.ch();
    let big = ch("P(n,1)", Some(n), &p_n1(n)?)?.ch();
    let pass = block == parts && block == big;
    let mut r = RelationReport::new(
        &format!("ch(p{} + q{})", n + 1, n - 1),
        vec![("components".into(), parts), ("P(n,1)".into(), big)],
        block,
        parts,
    );
    r.pass = pass;
    Ok(r)
}

/// `|det m| = 1`.
pub fn basis_check(m: [[i64; 2]; 2]) -> bool {
    (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1
}

/// `ch₀(E) = ε(Tr u u*)` equals the column count of `u` for `U⁽ⁿ⁾`.
pub fn rank_check(n: usize) -> Result<bool, ChernError> {
    let pair = u_n(n)?;
    let tr = p_n(n)?.trace();
    Ok(counit(&tr).as_integer() == Some(pair.rank() as i128))
}

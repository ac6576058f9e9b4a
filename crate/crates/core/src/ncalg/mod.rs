//! Presented *-algebras, normal forms and the two concrete algebras used
//! throughout: the quantum 7-sphere and the quantum group `SU_q(2)`.

mod confluence;
mod matrix;
mod poly;
mod presentation;
mod suite;

use std::sync::{Arc, OnceLock};

use smallvec::SmallVec;
use thiserror::Error;

use crate::qcoeff::{Laurent, QError};

pub use confluence::{check_local_confluence, ConfluenceReport, OverlapFailure};
pub use matrix::{bullet, PolyMatrix};
pub use poly::NCPoly;
pub use presentation::{Generator, LinComb, Presentation, Word, DEFAULT_STEP_BUDGET};
pub use suite::{random_sample_checks, s4_relation_checks, s7_relation_checks, suq2_relation_checks, RelationCheck};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("rewriting step budget exhausted while reducing {0}")]
    StepBudget(String),
    #[error("polynomials belong to different algebras: {0} and {1}")]
    AlgebraMismatch(String, String),
    #[error(transparent)]
    Scalar(#[from] QError),
}

/// Generator indices of the 7-sphere in increasing order.
pub mod s7 {
    pub const X1: u8 = 0;
    pub const X2: u8 = 1;
    pub const X3: u8 = 2;
    pub const X4: u8 = 3;
    pub const X4S: u8 = 4;
    pub const X3S: u8 = 5;
    pub const X2S: u8 = 6;
    pub const X1S: u8 = 7;
}

/// Generator indices of `SU_q(2)` in increasing order.
pub mod su2 {
    pub const ALPHA: u8 = 0;
    pub const ALPHA_S: u8 = 1;
    pub const GAMMA: u8 = 2;
    pub const GAMMA_S: u8 = 3;
}

fn starred_family(bases: &[&str], weights: &[u32]) -> Vec<Generator> {
    let n = bases.len();
    let mut gens = Vec::with_capacity(2 * n);
    for (i, b) in bases.iter().enumerate() {
        gens.push(Generator { base: b.to_string(), starred: false, star: (2 * n - 1 - i) as u8, weight: weights[i] });
    }
    for i in (0..n).rev() {
        gens.push(Generator { base: bases[i].to_string(), starred: true, star: i as u8, weight: weights[i] });
    }
    gens
}

fn w(letters: &[u8]) -> Word {
    SmallVec::from_slice(letters)
}

fn lp(terms: &[(i32, i128)]) -> Laurent {
    Laurent::from_terms(terms.iter().copied())
}

fn build_s7() -> Presentation {
    use s7::*;
    let gens = starred_family(&["x1", "x2", "x3", "x4"], &[0, 0, 0, 0]);
    let m = |c: i128, e: i32| Laurent::monomial(c, e);
    let rules = vec![
        (X2, X1, vec![(w(&[X1, X2]), m(1, -1))]),
        (X3, X1, vec![(w(&[X1, X3]), m(1, -1))]),
        (X4, X1, vec![(w(&[X1, X4]), m(1, -2))]),
        (X3, X2, vec![(w(&[X2, X3]), m(1, -2)), (w(&[X1, X4]), lp(&[(-1, -1), (-3, 1)]))]),
        (X4, X2, vec![(w(&[X2, X4]), m(1, -1))]),
        (X4, X3, vec![(w(&[X3, X4]), m(1, -1))]),
        (X1S, X1, vec![(w(&[X1, X1S]), m(1, 0))]),
        (X1S, X2, vec![(w(&[X2, X1S]), m(1, 1))]),
        (X1S, X3, vec![(w(&[X3, X1S]), m(1, 1))]),
        (X1S, X4, vec![(w(&[X4, X1S]), m(1, 2))]),
        (X2S, X2, vec![(w(&[X2, X2S]), m(1, 0)), (w(&[X1, X1S]), lp(&[(0, 1), (2, -1)]))]),
        (X2S, X3, vec![(w(&[X3, X2S]), m(1, 2))]),
        (X2S, X4, vec![(w(&[X4, X2S]), m(1, 1)), (w(&[X3, X1S]), lp(&[(3, 1), (1, -1)]))]),
        (
            X3S,
            X3,
            vec![
                (w(&[X3, X3S]), m(1, 0)),
                (w(&[X2, X2S]), lp(&[(0, 1), (4, -1)])),
                (w(&[X1, X1S]), lp(&[(0, 1), (2, -1)])),
            ],
        ),
        (X3S, X4, vec![(w(&[X4, X3S]), m(1, 1)), (w(&[X2, X1S]), lp(&[(5, -1), (3, 1)]))]),
        (
            X4S,
            X4,
            vec![
                (w(&[]), m(1, 0)),
                (w(&[X3, X3S]), m(-1, 2)),
                (w(&[X2, X2S]), m(-1, 2)),
                (w(&[X1, X1S]), lp(&[(6, -1), (4, 1), (2, -1)])),
            ],
        ),
        (
            X4,
            X4S,
            vec![(w(&[]), m(1, 0)), (w(&[X1, X1S]), m(-1, 0)), (w(&[X2, X2S]), m(-1, 0)), (w(&[X3, X3S]), m(-1, 0))],
        ),
    ];
    Presentation::new("S7q", gens, rules).expect("7-sphere presentation is well formed")
}

fn build_suq2() -> Presentation {
    use su2::*;
    let g = |base: &str, starred: bool, star: u8, weight: u32| Generator { base: base.into(), starred, star, weight };
    let gens = vec![
        g("alpha", false, ALPHA_S, 1),
        g("alpha", true, ALPHA, 1),
        g("gamma", false, GAMMA_S, 0),
        g("gamma", true, GAMMA, 0),
    ];
    let m = |c: i128, e: i32| Laurent::monomial(c, e);
    let rules = vec![
        (GAMMA, ALPHA, vec![(w(&[ALPHA, GAMMA]), m(1, -1))]),
        (GAMMA_S, ALPHA, vec![(w(&[ALPHA, GAMMA_S]), m(1, -1))]),
        (GAMMA, ALPHA_S, vec![(w(&[ALPHA_S, GAMMA]), m(1, 1))]),
        (GAMMA_S, ALPHA_S, vec![(w(&[ALPHA_S, GAMMA_S]), m(1, 1))]),
        (GAMMA_S, GAMMA, vec![(w(&[GAMMA, GAMMA_S]), m(1, 0))]),
        (ALPHA_S, ALPHA, vec![(w(&[]), m(1, 0)), (w(&[GAMMA, GAMMA_S]), m(-1, 0))]),
        (ALPHA, ALPHA_S, vec![(w(&[]), m(1, 0)), (w(&[GAMMA, GAMMA_S]), m(-1, 2))]),
    ];
    Presentation::new("SUq2", gens, rules).expect("SU_q(2) presentation is well formed")
}

/// The algebra of the quantum 7-sphere, generators `x1..x4` and their adjoints.
pub fn presentation_s7q() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    P.get_or_init(|| Arc::new(build_s7())).clone()
}

/// The Hopf *-algebra `SU_q(2)`, generators `alpha`, `gamma` and their adjoints.
pub fn presentation_suq2() -> Arc<Presentation> {
    static P: OnceLock<Arc<Presentation>> = OnceLock::new();
    P.get_or_init(|| Arc::new(build_suq2())).clone()
}

/// Generator of the 7-sphere by index.
pub fn x(g: u8) -> NCPoly {
    NCPoly::generator(&presentation_s7q(), g)
}

/// The generators `y0, y1, y2` of the quantum 4-sphere inside the 7-sphere.
pub fn y_generators() -> [NCPoly; 3] {
    use s7::*;
    let s7 = presentation_s7q();
    let t = |c: i128, e: i32, word: &[u8]| NCPoly::term(&s7, word, crate::qcoeff::QScalar::monomial(c, e));
    let y0 = t(1, 4, &[X1, X1S]).add(&t(1, 4, &[X2, X2S]));
    let y1 = t(-1, 1, &[X1, X3S]).add(&t(1, 1, &[X2, X4S]));
    let y2 = t(1, 1, &[X1, X4]).add(&t(1, 2, &[X2, X3]));
    [y0, y1, y2]
}

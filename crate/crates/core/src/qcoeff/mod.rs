//! Exact scalar arithmetic in `q`.
//!
//! Values live in Q(q) extended by principal square roots of products of
//! cyclotomic polynomials. Radicands are always factored, so radical equality
//! is a comparison of index sets.

pub mod cyclotomic;
pub mod laurent;
pub mod parse;
pub mod rational;
pub mod scalar;

use thiserror::Error;

pub use laurent::Laurent;
pub use rational::QRational;
pub use scalar::{qbinom, qnum, qnum_inv_sqrt, qnum_sqrt, QScalar, Radical, ScalarAcc};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("not a perfect radicand: {0}")]
    NotAPerfectRadicand(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

struct ScalarGrammar;

impl parse::ParseContext for ScalarGrammar {
    type Value = QScalar;

    fn int(&self, c: i128) -> QScalar {
        QScalar::from_int(c)
    }
    fn q(&self) -> QScalar {
        QScalar::q_pow(1)
    }
    fn add(&self, a: &QScalar, b: &QScalar) -> QScalar {
        a.add(b)
    }
    fn mul(&self, a: &QScalar, b: &QScalar) -> QScalar {
        a.mul(b)
    }
    fn neg(&self, a: &QScalar) -> QScalar {
        a.neg()
    }
    fn div(&self, a: &QScalar, b: &QScalar) -> Result<QScalar, QError> {
        a.div(b)
    }
    fn sqrt(&self, a: &QScalar) -> Result<QScalar, QError> {
        a.sqrt()
    }
    fn generator(&self, name: &str, _starred: bool) -> Result<QScalar, QError> {
        Err(QError::Parse(format!("unknown symbol {} in scalar expression", name)))
    }
}

/// Parses a scalar in the text grammar; inverse of [`QScalar::render`].
pub fn parse_scalar(src: &str) -> Result<QScalar, QError> {
    parse::parse_with(&ScalarGrammar, src)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_roundtrip_samples() {
        let samples = [
            QScalar::zero(),
            QScalar::one(),
            qnum(3),
            qnum_inv_sqrt(2).mul(&QScalar::monomial(-3, -2)),
            qnum_sqrt(3).add(&qnum_inv_sqrt(4)).add(&QScalar::from_rational(QRational::ratio(1, 6))),
            qbinom(5, 2).unwrap().inv().unwrap(),
        ];
        for s in samples {
            let text = s.render();
            assert_eq!(parse_scalar(&text).unwrap(), s, "round trip of {}", text);
        }
    }

    #[test]
    fn parse_expressions() {
        let v = parse_scalar("(1 - q^4)/(1 - q^2)").unwrap();
        assert_eq!(v, qnum(2));
        let s = parse_scalar("sqrt(1 + q^2) * sqrt(1+q^2)").unwrap();
        assert_eq!(s, qnum(2));
        assert_eq!(parse_scalar("2 q^-1 q").unwrap(), QScalar::from_int(2));
        assert!(parse_scalar("x1").is_err());
        assert!(parse_scalar("sqrt(q)").is_err());
        assert!(parse_scalar("(1 + q").is_err());
    }
}

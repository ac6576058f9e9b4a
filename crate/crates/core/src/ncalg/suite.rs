//! Named relation identities checked as normal-form equalities.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::{presentation_s7q, presentation_suq2, y_generators, NCPoly, Presentation, Word};
use crate::qcoeff::QScalar;

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

const S7_RELATIONS: [&str; 18] = [
    "x1 x2 - q x2 x1",
    "x1 x3 - q x3 x1",
    "x1 x4 - q^2 x4 x1",
    "x2 x3 - q^2 x3 x2 - q^2 (q - q^-1) x4 x1",
    "x2 x4 - q x4 x2",
    "x3 x4 - q x4 x3",
    "x1* x1 - x1 x1*",
    "x1* x4 - q^2 x4 x1*",
    "x2* x4 - q x4 x2* - q^2 (q - q^-1) x3 x1*",
    "x1* x2 - q x2 x1*",
    "x2* x2 - x2 x2* - (1 - q^2) x1 x1*",
    "x3* x3 - x3 x3* - (1 - q^4) x2 x2* - (1 - q^2) x1 x1*",
    "x1* x3 - q x3 x1*",
    "x2* x3 - q^2 x3 x2*",
    "x3* x4 - q x4 x3* + q^4 (q - q^-1) x2 x1*",
    "x1 x1* + x2 x2* + x3 x3* + x4 x4* - 1",
    "q^8 x1* x1 + q^6 x2* x2 + q^2 x3* x3 + x4* x4 - 1",
    "x4* x1 - q^2 x1 x4*",
];

const SUQ2_RELATIONS: [(&str, &str); 6] = [
    ("alpha alpha* + q^2 gamma* gamma", "1"),
    ("alpha* alpha + gamma* gamma", "1"),
    ("gamma gamma*", "gamma* gamma"),
    ("alpha gamma", "q gamma alpha"),
    ("alpha gamma*", "q gamma* alpha"),
    ("alpha gamma alpha*", "q gamma - q^3 gamma gamma gamma*"),
];

fn check(name: impl Into<String>, holds: bool) -> RelationCheck {
    RelationCheck { name: name.into(), holds }
}

/// The defining relations of the 7-sphere, each reducing to zero together with its adjoint.
pub fn s7_relation_checks() -> Vec<RelationCheck> {
    let a = presentation_s7q();
    S7_RELATIONS
        .iter()
        .map(|r| {
            let holds = NCPoly::parse(&a, r).map(|p| p.is_zero() && p.star().is_zero()).unwrap_or(false);
            check(format!("S7: {r} = 0"), holds)
        })
        .collect()
}

pub fn suq2_relation_checks() -> Vec<RelationCheck> {
    let h = presentation_suq2();
    SUQ2_RELATIONS
        .iter()
        .map(|(l, r)| {
            let holds = matches!((NCPoly::parse(&h, l), NCPoly::parse(&h, r)), (Ok(a), Ok(b)) if a == b);
            check(format!("SU_q(2): {l} = {r}"), holds)
        })
        .collect()
}

/// Commutation relations of `y₀, y₁, y₂` and both sphere relations of the 4-sphere.
pub fn s4_relation_checks() -> Vec<RelationCheck> {
    let [y0, y1, y2] = y_generators();
    let one = NCPoly::one(&presentation_s7q());
    let c = QScalar::q_pow;
    let (y1s, y2s) = (y1.star(), y2.star());
    vec![
        check("y1 y2 = q^4 y2 y1", y1.mul(&y2) == y2.mul(&y1).scale(&c(4))),
        check("y1* y2 = y2 y1*", y1s.mul(&y2) == y2.mul(&y1s)),
        check("y0 y1 = q^-2 y1 y0", y0.mul(&y1) == y1.mul(&y0).scale(&c(-2))),
        check("y0 y2 = q^4 y2 y0", y0.mul(&y2) == y2.mul(&y0).scale(&c(4))),
        check(
            "y1 y1* - q^4 y1* y1 = (q^-2 - 1) y0",
            y1.mul(&y1s).sub(&y1s.mul(&y1).scale(&c(4))) == y0.scale(&c(-2).sub(&QScalar::one())),
        ),
        check(
            "y2 y2* - q^-4 y2* y2 = (1 - q^-4) y0^2",
            y2.mul(&y2s).sub(&y2s.mul(&y2).scale(&c(-4))) == y0.mul(&y0).scale(&QScalar::one().sub(&c(-4))),
        ),
        check(
            "q^4 y1* y1 + q^-4 y2* y2 = y0 (1 - y0)",
            y1s.mul(&y1).scale(&c(4)).add(&y2s.mul(&y2).scale(&c(-4))) == y0.mul(&one.sub(&y0)),
        ),
        check(
            "y1 y1* + y2 y2* = q^-2 y0 (1 - q^-2 y0)",
            y1.mul(&y1s).add(&y2.mul(&y2s)) == y0.mul(&one.sub(&y0.scale(&c(-2)))).scale(&c(-2)),
        ),
    ]
}

fn random_word(rng: &mut StdRng, pres: &Presentation, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..pres.num_generators() as u8)).collect()
}

/// Associativity and the anti-multiplicative involution on seeded random samples.
pub fn random_sample_checks(seed: u64, samples: usize) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    for pres in [presentation_s7q(), presentation_suq2()] {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut assoc = true;
        let mut star = true;
        for _ in 0..samples {
            let [a, b, c] = [0, 1, 2].map(|_| {
                let w = random_word(&mut rng, &pres, 3);
                NCPoly::term(&pres, &w, QScalar::monomial(rng.gen_range(1..=3), rng.gen_range(-2..=2)))
            });
            assoc &= a.mul(&b).mul(&c) == a.mul(&b.mul(&c));
            star &= a.star().star() == a && a.mul(&b).star() == b.star().mul(&a.star());
        }
        out.push(check(format!("{}: associativity on {samples} seeded samples", pres.name()), assoc));
        out.push(check(format!("{}: (ab)* = b* a* on {samples} seeded samples", pres.name()), star));
    }
    out
}

use qsphere::ncalg::{
    check_local_confluence, presentation_s7q, random_sample_checks, s4_relation_checks, s7_relation_checks,
    suq2_relation_checks, presentation_suq2, s7, y_generators, NCPoly, Presentation, Word,
};
use qsphere::qcoeff::QScalar;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::sync::Arc;

fn s7(src: &str) -> NCPoly {
    NCPoly::parse(&presentation_s7q(), src).unwrap()
}

fn su(src: &str) -> NCPoly {
    NCPoly::parse(&presentation_suq2(), src).unwrap()
}

#[test]
fn s7_relations_as_written() {
    let relations = [
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
    for r in relations {
        let p = s7(r);
        assert!(p.is_zero(), "{} reduces to {}", r, p);
        assert!(p.star().is_zero());
    }
}

#[test]
fn s7_normal_form_examples() {
    assert_eq!(s7("x4 x4*"), s7("1 - x1 x1* - x2 x2* - x3 x3*"));
    assert!(s7("1").is_one());
    let star = s7("x1 x3").star();
    assert_eq!(star, s7("x3* x1*"));
    assert_eq!(s7("x1* x3*"), s7("q^-1 x3* x1*"));
    let word: Vec<u8> = star.terms().next().unwrap().0.to_vec();
    assert_eq!(word, vec![s7::X3S, s7::X1S]);
    assert_eq!(s7("x2").star(), s7("x2*"));
}

#[test]
fn suq2_unitarity_relations() {
    assert!(su("alpha alpha* + q^2 gamma* gamma").is_one());
    assert!(su("alpha* alpha + gamma* gamma").is_one());
    assert!(su("gamma gamma* - gamma* gamma").is_zero());
    assert!(su("alpha gamma - q gamma alpha").is_zero());
    assert!(su("alpha gamma* - q gamma* alpha").is_zero());
    let a_gamma_astar = su("alpha gamma alpha*");
    assert_eq!(a_gamma_astar, su("q gamma - q^3 gamma gamma gamma*"));
}

#[test]
fn suq2_normal_words_are_pbw_basis() {
    let p = presentation_suq2();
    for k in 0..3u8 {
        for m in 0..3 {
            for l in 0..3 {
                for first in [0u8, 1u8] {
                    if first == 1 && k == 0 {
                        continue;
                    }
                    let mut w: Vec<u8> = vec![first; k as usize];
                    w.extend(std::iter::repeat_n(2, m));
                    w.extend(std::iter::repeat_n(3, l));
                    assert!(p.is_normal(&w), "{}", p.word_name(&w));
                }
            }
        }
    }
}

#[test]
fn s4_commutation_and_sphere_relations() {
    let [y0, y1, y2] = y_generators();
    let pres = presentation_s7q();
    let c = |e: i32| QScalar::q_pow(e);
    let y1s = y1.star();
    let y2s = y2.star();
    assert!((&(&y1 * &y2) - &(&y2 * &y1).scale(&c(4))).is_zero());
    assert!((&(&y1s * &y2) - &(&y2 * &y1s)).is_zero());
    assert!((&(&y0 * &y1) - &(&y1 * &y0).scale(&c(-2))).is_zero());
    assert!((&(&y0 * &y2) - &(&y2 * &y0).scale(&c(4))).is_zero());
    let lhs = &(&y1 * &y1s) - &(&y1s * &y1).scale(&c(4));
    let rhs = y0.scale(&QScalar::q_pow(-2).sub(&QScalar::one()));
    assert_eq!(lhs, rhs);
    let lhs = &(&y2 * &y2s) - &(&y2s * &y2).scale(&c(-4));
    let rhs = (&y0 * &y0).scale(&QScalar::one().sub(&c(-4)));
    assert_eq!(lhs, rhs);
    let one = NCPoly::one(&pres);
    let sphere = &(&y1s * &y1).scale(&c(4)) + &(&y2s * &y2).scale(&c(-4));
    assert_eq!(sphere, &y0 * &(&one - &y0));
    let sphere2 = &(&y1 * &y1s) + &(&y2 * &y2s);
    assert_eq!(sphere2, (&y0 * &(&one - &y0.scale(&c(-2)))).scale(&c(-2)));
}

#[test]
fn diagonal_projection_entries() {
    let [y0, _, _] = y_generators();
    let one = NCPoly::one(&presentation_s7q());
    assert_eq!(s7("x3 x3* + x4 x4*"), &one - &y0.scale(&QScalar::q_pow(-4)));
    assert_eq!(s7("x4* x4 + q^2 x3* x3"), &one - &y0.scale(&QScalar::q_pow(2)));
}

fn random_word(rng: &mut StdRng, pres: &Presentation) -> Word {
    let len = rng.gen_range(0..=3);
    (0..len).map(|_| rng.gen_range(0..pres.num_generators() as u8)).collect()
}

fn random_poly(rng: &mut StdRng, pres: &Arc<Presentation>) -> NCPoly {
    let terms: Vec<(Word, QScalar)> = (0..3)
        .map(|_| (random_word(rng, pres), QScalar::monomial(rng.gen_range(-3..=3), rng.gen_range(-2..=2))))
        .collect();
    NCPoly::normal_form(pres, terms)
}

#[test]
fn associativity_and_star_on_random_samples() {
    for pres in [presentation_s7q(), presentation_suq2()] {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let a = NCPoly::term(&pres, &random_word(&mut rng, &pres), QScalar::one());
            let b = NCPoly::term(&pres, &random_word(&mut rng, &pres), QScalar::one());
            let c = NCPoly::term(&pres, &random_word(&mut rng, &pres), QScalar::one());
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
        for _ in 0..50 {
            let a = random_poly(&mut rng, &pres);
            let b = random_poly(&mut rng, &pres);
            assert_eq!(a.star().star(), a);
            assert_eq!((&a * &b).star(), &b.star() * &a.star());
        }
    }
}

#[test]
fn render_parse_roundtrip() {
    let mut rng = StdRng::seed_from_u64(11);
    for pres in [presentation_s7q(), presentation_suq2()] {
        for _ in 0..30 {
            let a = random_poly(&mut rng, &pres).scale(&qsphere::qcoeff::qnum_inv_sqrt(2));
            assert_eq!(NCPoly::parse(&pres, &a.render()).unwrap(), a);
        }
    }
}

#[test]
fn both_presentations_locally_confluent() {
    for pres in [presentation_s7q(), presentation_suq2()] {
        let r = check_local_confluence(&pres, 4);
        assert!(r.is_confluent(), "{:?}", r);
        assert_eq!(r.joinable, r.critical_pairs);
    }
}

#[test]
fn step_budget_reports_instead_of_looping() {
    let pres = presentation_s7q();
    let w: Word = [s7::X1S, s7::X2S, s7::X1S, s7::X4, s7::X3, s7::X4, s7::X2, s7::X4].into_iter().collect();
    assert!(NCPoly::try_normal_form(&pres, [(w, QScalar::one())], 1).is_err());
}

#[test]
fn named_relation_suites() {
    let all: Vec<_> = s7_relation_checks()
        .into_iter()
        .chain(suq2_relation_checks())
        .chain(s4_relation_checks())
        .chain(random_sample_checks(5, 40))
        .collect();
    assert_eq!(all.len(), 18 + 6 + 8 + 4);
    for r in &all {
        assert!(r.holds, "{}", r.name);
    }
}

use qsphere::bundles::{p_n, q_n};
use qsphere::chern::{
    additivity_check, basis_check, ch1_via_decomposition, ch_p, ch_q, diagonal_of, diagonal_part, eta,
    euler_square_check, expected_ch1, k_relation_check, multiplicativity_check, rank_check, regularized_trace,
    rep_pi, tensor_power_check, trace_sum, word_term, ChernError, DiagSymbol, DualNumber,
};
use qsphere::ncalg::{presentation_s7q, s7, y_generators, NCPoly};
use qsphere::qcoeff::{parse_scalar, Laurent, QScalar};

fn s7p(src: &str) -> NCPoly {
    NCPoly::parse(&presentation_s7q(), src).unwrap()
}

fn sym(terms: &[((i32, i32), &str)]) -> DiagSymbol {
    let mut d = DiagSymbol::zero();
    for (k, c) in terms {
        d.add_term(*k, &parse_scalar(c).unwrap());
    }
    d
}

#[test]
fn representation_on_generators() {
    assert!(rep_pi(&s7p("x1 x4 x2")).is_empty());
    assert_eq!(diagonal_of(&s7p("x2")).unwrap(), sym(&[((1, 2), "1")]));
    assert_eq!(diagonal_of(&s7p("x4* x4")).unwrap(), sym(&[((0, 0), "1"), ((2, 0), "-q^2")]));
    assert_eq!(diagonal_of(&s7p("x3* x3")).unwrap(), sym(&[((2, 0), "1"), ((2, 4), "-q^4")]));
    let [y0, y1, y2] = y_generators();
    assert_eq!(diagonal_of(&y0).unwrap(), sym(&[((2, 4), "q^4")]));
    assert!(diagonal_of(&y1).unwrap().is_zero());
    assert!(diagonal_of(&y2).unwrap().is_zero());
    let y1_terms = rep_pi(&y1);
    assert!(y1_terms.iter().all(|t| t.shift == (-1, 0)));
}

#[test]
fn representation_respects_relations() {
    for (lhs, rhs) in [
        ("x4 x4*", "1 - x2 x2* - x3 x3*"),
        ("x4* x4", "1 - q^6 x2* x2 - q^2 x3* x3"),
        ("x3 x3*", "x3* x3 - (1 - q^4) x2 x2*"),
    ] {
        let a = diagonal_of(&NCPoly::parse(&presentation_s7q(), lhs).unwrap()).unwrap();
        let b = diagonal_of(&s7p(rhs)).unwrap();
        assert_eq!(a, b, "{lhs}");
    }
    let t = word_term(&[s7::X4S, s7::X4]).unwrap();
    assert!((t.eval(3, 1, 0.5) - (1.0 - 0.5f64.powi(8))).abs() < 1e-14);
}

#[test]
fn diagonal_part_rejects_off_diagonal_and_keeps_pairs() {
    let [_, y1, _] = y_generators();
    let prod = s7p("x4 x4*");
    let ops = rep_pi(&prod);
    assert_eq!(diagonal_part(&ops).unwrap(), diagonal_of(&prod).unwrap());
    let y1y1 = y1.star().mul(&y1);
    assert!(!diagonal_of(&y1y1).unwrap().is_zero());
}

#[test]
fn trace_sums() {
    let t = trace_sum(&sym(&[((2, 4), "1")])).unwrap();
    assert_eq!(t.value, parse_scalar("1/((1 - q^2)(1 - q^4))").unwrap());
    assert!(trace_sum(&DiagSymbol::zero()).unwrap().value.is_zero());
    assert!(matches!(trace_sum(&sym(&[((1, 0), "1")])), Err(ChernError::NotTraceClass(_))));
}

#[test]
fn instanton_index_and_intermediate() {
    let r = ch_p(1).unwrap();
    assert_eq!((r.ch0, r.ch1), (2, -1));
    let p = p_n(1).unwrap();
    let sum = regularized_trace(&p.trace()).unwrap();
    let (num, exps) = sum.single_piece().unwrap();
    assert_eq!(exps, (2, 4));
    assert_eq!(num, Laurent::from_terms([(2, 1), (4, 1), (0, -1), (6, -1)]));
    assert_eq!(sum.value, QScalar::from_int(-1));
    assert_eq!(r.exact_intermediate, "(q^2 + q^4 - 1 - q^6)/((1 - q^2)(1 - q^4))".replace("q^2 + q^4 - 1 - q^6", &num.to_string()));
}

#[test]
fn higher_indices_two_ways() {
    let recursive = ch1_via_decomposition(3).unwrap();
    for n in 1..=3 {
        let direct = ch_p(n).unwrap();
        assert_eq!(direct.ch0, n as i64 + 1);
        assert_eq!(direct.ch1, expected_ch1(n), "n = {n}");
        assert_eq!(recursive[n], expected_ch1(n), "recursive n = {n}");
        assert!(rank_check(n).unwrap());
    }
}

#[test]
fn k_relations() {
    let r = k_relation_check().unwrap();
    assert!(r.pass, "{:?}", r);
    assert_eq!(r.values[1].1, DualNumber::new(4, -4));
    assert!(euler_square_check().unwrap().pass);
    for k in 1..=3 {
        let t = tensor_power_check(k).unwrap();
        assert!(t.pass, "{:?}", t);
    }
    assert!(basis_check([[1, 0], [2, -1]]));
    assert!(!basis_check([[2, 0], [0, 1]]));
}

#[test]
fn additivity_and_multiplicativity() {
    for n in 1..=2 {
        assert!(additivity_check(n).unwrap().pass);
        assert!(multiplicativity_check(n).unwrap().pass);
    }
}

#[test]
fn trivial_determinant_bundle() {
    let r = ch_q(0).unwrap();
    assert_eq!((r.ch0, r.ch1), (1, 0));
    let tr = q_n(0).unwrap().trace();
    let [y0, y1, y2] = y_generators();
    let c = |s: &str| parse_scalar(s).unwrap();
    let one = NCPoly::one(&presentation_s7q());
    let lhs = tr.scale(&c("1 + q^2"));
    let rhs = NCPoly::sum(
        &presentation_s7q(),
        [
            &one.scale(&c("1 + q^2")),
            &y0.scale(&c("-2 (q^2 + q^-2)")),
            &y0.mul(&y0).scale(&c("1 + q^-2 + q^-6 + q^4")),
            &y1.mul(&y1.star()).scale(&c("2 q^2")),
            &y1.star().mul(&y1).scale(&c("2 q^4")),
            &y2.mul(&y2.star()).scale(&c("1 + q^-6")),
            &y2.star().mul(&y2).scale(&c("q^-2 + q^4")),
        ],
    );
    assert_eq!(lhs, rhs);
}

#[test]
fn eta_identities() {
    let [y0, y1, y2] = y_generators();
    let c = |s: &str| parse_scalar(s).unwrap();
    let e00 = eta(&y0.mul(&y0)).unwrap();
    assert_eq!(e00, c("q^8/((1 - q^4)(1 - q^8))"));
    assert_eq!(eta(&y0).unwrap(), e00.mul(&c("(1 + q^-4)(1 + q^2)")));
    let e11 = c("q^-6 (1 + q^4)").mul(&e00);
    assert_eq!(eta(&y1.star().mul(&y1)).unwrap(), e11);
    assert_eq!(eta(&y1.mul(&y1.star())).unwrap(), e11);
    assert_eq!(eta(&y2.star().mul(&y2)).unwrap(), e00);
    assert_eq!(eta(&y2.mul(&y2.star())).unwrap(), e00);
    let bracket = NCPoly::sum(
        &presentation_s7q(),
        [
            &y0.scale(&c("-2 (q^2 - 1)")),
            &y0.mul(&y0).scale(&c("(1 - q^-8)(q^4 - q^2 - 1)")),
            &y2.star().mul(&y2).scale(&c("(1 - q^-8)(q^4 + q^2 + 1)")),
        ],
    );
    assert!(eta(&bracket).unwrap().is_zero());
}

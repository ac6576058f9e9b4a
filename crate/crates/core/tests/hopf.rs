use qsphere::hopf::{
    antipode, coaction_s7, contract_right_counit, coproduct, corep_matrix, counit, is_coinvariant, map_left, map_right,
    t1, TensorPoly,
};
use qsphere::ncalg::{presentation_s7q, presentation_suq2, s7, su2, y_generators, NCPoly, Word};
use qsphere::qcoeff::{qnum_sqrt, QScalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn su(src: &str) -> NCPoly {
    NCPoly::parse(&presentation_suq2(), src).unwrap()
}

fn s7p(src: &str) -> NCPoly {
    NCPoly::parse(&presentation_s7q(), src).unwrap()
}

fn random_s7(rng: &mut StdRng, max_len: usize) -> NCPoly {
    let pres = presentation_s7q();
    let terms: Vec<(Word, QScalar)> = (0..3)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let w: Word = (0..len).map(|_| rng.gen_range(0..8u8)).collect();
            (w, QScalar::monomial(rng.gen_range(-2..=2), rng.gen_range(-2..=2)))
        })
        .collect();
    NCPoly::normal_form(&pres, terms)
}

#[test]
fn coproduct_basics() {
    let h = presentation_suq2();
    assert_eq!(coproduct(&NCPoly::one(&h)), TensorPoly::one(&h, &h));
    let expected = TensorPoly::pure(&su("alpha"), &su("alpha")).sub(&TensorPoly::pure(&su("q gamma*"), &su("gamma")));
    assert_eq!(coproduct(&su("alpha")), expected);
    for g in 0..4u8 {
        let x = NCPoly::generator(&h, g);
        let d = coproduct(&x);
        assert_eq!(map_left(&d, coproduct), map_right(&d, coproduct), "coassociativity at {}", x);
    }
    let a = su("alpha gamma* + q^2 gamma alpha*");
    let d = coproduct(&a);
    assert_eq!(map_left(&d, coproduct), map_right(&d, coproduct));
}

#[test]
fn coproduct_is_multiplicative() {
    let a = su("alpha gamma");
    let b = su("gamma* alpha* + 2");
    assert_eq!(coproduct(&a.mul(&b)), coproduct(&a).mul(&coproduct(&b)));
}

#[test]
fn counit_and_antipode_values() {
    assert!(counit(&su("alpha")).is_one());
    assert!(counit(&su("gamma")).is_zero());
    assert!(counit(&s7p("x4")).is_one());
    assert!(counit(&s7p("x1")).is_zero());
    assert_eq!(counit(&s7p("x4 x4* + q x3")), QScalar::one());
    assert_eq!(antipode(&su("alpha")), su("alpha*"));
    assert_eq!(antipode(&su("gamma")), su("-q gamma"));
    assert_eq!(antipode(&su("gamma*")), su("-q^-1 gamma*"));
    assert_eq!(antipode(&su("alpha gamma")), su("-q gamma alpha*"));
}

#[test]
fn antipode_axiom_on_generators() {
    let h = presentation_suq2();
    for g in 0..4u8 {
        let x = NCPoly::generator(&h, g);
        let d = coproduct(&x);
        let parts: Vec<NCPoly> = d
            .terms()
            .map(|((l, r), c)| {
                antipode(&NCPoly::term(&h, l, c.clone())).mul(&NCPoly::term(&h, r, QScalar::one()))
            })
            .collect();
        let lhs = NCPoly::sum(&h, parts.iter());
        assert_eq!(lhs, NCPoly::constant(&h, counit(&x)));
    }
}

#[test]
fn coaction_values() {
    let a7 = presentation_s7q();
    let h = presentation_suq2();
    assert_eq!(coaction_s7(&NCPoly::one(&a7)), TensorPoly::one(&a7, &h));
    let expected = TensorPoly::pure(&s7p("q x1"), &su("alpha")).add(&TensorPoly::pure(&s7p("q x2"), &su("gamma")));
    assert_eq!(coaction_s7(&s7p("q x1")), expected);
}

#[test]
fn coaction_is_multiplicative_and_counital() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let a = random_s7(&mut rng, 2);
        let b = random_s7(&mut rng, 2);
        assert_eq!(coaction_s7(&a.mul(&b)), coaction_s7(&a).mul(&coaction_s7(&b)));
    }
    for _ in 0..50 {
        let a = random_s7(&mut rng, 3);
        assert_eq!(contract_right_counit(&coaction_s7(&a)), a);
    }
}

#[test]
fn coaction_is_coassociative_on_generators() {
    let a7 = presentation_s7q();
    for g in 0..8u8 {
        let d = coaction_s7(&NCPoly::generator(&a7, g));
        assert_eq!(map_left(&d, coaction_s7), map_right(&d, coproduct));
    }
}

#[test]
fn coinvariants() {
    for y in y_generators() {
        assert!(is_coinvariant(&y), "{}", y);
        assert!(is_coinvariant(&y.star()));
    }
    assert!(!is_coinvariant(&NCPoly::generator(&presentation_s7q(), s7::X1)));
    assert!(is_coinvariant(&NCPoly::one(&presentation_s7q())));
}

#[test]
fn corep_low_degrees() {
    let t0 = corep_matrix(0).unwrap();
    assert!(t0.matrix().is_identity());
    assert_eq!(*corep_matrix(1).unwrap().matrix(), t1());
    let t3 = corep_matrix(3).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let want = if i == j { QScalar::one() } else { QScalar::zero() };
            assert_eq!(counit(t3.get(i, j)), want);
        }
    }
}

#[test]
fn corep_t2_matches_display() {
    let t = corep_matrix(2).unwrap();
    let r = qnum_sqrt(2);
    let display = [
        [su("alpha alpha"), su("-1 alpha gamma*").scale(&r), su("q^2 gamma* gamma*")],
        [su("gamma alpha").scale(&r), su("1 - (1 + q^2) gamma gamma*"), su("-q alpha* gamma*").scale(&r)],
        [su("gamma gamma"), su("q^-1 gamma alpha*").scale(&r), su("alpha* alpha*")],
    ];
    for (i, row) in display.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert_eq!(t.get(i, j), want, "entry ({i},{j})");
        }
    }
}

#[test]
fn corep_invariants_up_to_four() {
    for n in 0..=4 {
        let t = corep_matrix(n).unwrap();
        assert!(t.checks().all_pass(), "{:?}", t.checks());
        assert_eq!(t.matrix().rows(), n + 1);
    }
    let a = NCPoly::generator(&presentation_suq2(), su2::ALPHA);
    assert_eq!(*corep_matrix(4).unwrap().get(0, 0), a.pow(4));
}

use std::time::Instant;

use qsphere::bundles::{
    check_decomposition, equivalence_witness, orthogonality_holds, p_n, projection, q_minors, q_n, tensor_pair,
    tensor_projection, tensor_trace, u1, u1_matrix, u_n, w_n, Projection, TrivPair,
};
use qsphere::hopf::{coaction_s7, is_coinvariant, TensorPoly};
use qsphere::ncalg::{presentation_s7q, presentation_suq2, y_generators, NCPoly, PolyMatrix};
use qsphere::qcoeff::{qnum_inv_sqrt, QScalar};

fn c(e: i32) -> QScalar {
    QScalar::q_pow(e)
}

#[test]
fn instanton_projection_matches_y_form() {
    let pair = u1().unwrap();
    assert!(pair.v().mul(pair.u()).is_identity());
    let p = projection(&pair).unwrap();
    let [y0, y1, y2] = y_generators();
    let a = presentation_s7q();
    let one = NCPoly::one(&a);
    let z = NCPoly::zero(&a);
    let expected = [
        [y0.scale(&c(-2)), z.clone(), y1.clone(), y2.clone()],
        [z.clone(), y0.clone(), y2.star().scale(&c(-2)), y1.star().scale(&QScalar::monomial(-1, 2))],
        [y1.star(), y2.scale(&c(-2)), one.sub(&y0.scale(&c(-4))), z.clone()],
        [y2.star(), y1.scale(&QScalar::monomial(-1, 2)), z.clone(), one.sub(&y0.scale(&c(2)))],
    ];
    for (i, row) in expected.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert_eq!(p.get(i, j), want, "entry ({i},{j})");
        }
    }
    assert_eq!(p.rank(), 2);
}

#[test]
fn u2_matches_explicit_rows() {
    let u = u1_matrix();
    let u2 = u_n(2).unwrap();
    let r = qnum_inv_sqrt(2);
    for i in 0..4 {
        for j in 0..4 {
            let row = 4 * i + j;
            assert_eq!(*u2.u().get(row, 0), u.get(i, 0).mul(u.get(j, 0)));
            let mid = u.get(i, 0).mul(u.get(j, 1)).scale(&c(1)).add(&u.get(i, 1).mul(u.get(j, 0))).scale(&r);
            assert_eq!(*u2.u().get(row, 1), mid);
            assert_eq!(*u2.u().get(row, 2), u.get(i, 1).mul(u.get(j, 1)));
        }
    }
}

#[test]
fn q_minors_and_w0() {
    let m = q_minors();
    let w0 = w_n(0).unwrap();
    let r = qnum_inv_sqrt(2);
    for i in 0..4 {
        assert!(m.get(i, i).is_zero());
        for j in 0..4 {
            assert!(is_coinvariant(m.get(i, j)), "m_{i}{j}");
            assert_eq!(*w0.u().get(4 * i + j, 0), m.get(i, j).scale(&r));
        }
    }
    assert!(orthogonality_holds(0).unwrap());
    let p2 = p_n(2).unwrap();
    let q0 = q_n(0).unwrap();
    assert!(p2.matrix().mul(q0.matrix()).is_zero());
}

#[test]
fn trivial_pair_cases() {
    let t = TrivPair::trivial();
    assert!(projection(&t).unwrap().matrix().is_identity());
    let u = u1().unwrap();
    let tp = tensor_pair(&u, &t).unwrap();
    assert_eq!(tp.u(), u.u());
    let a = presentation_s7q();
    let id = projection(&t).unwrap();
    assert_eq!(tensor_projection(&id, &u).unwrap().matrix(), projection(&u).unwrap().matrix());
    assert!(is_coinvariant(&NCPoly::one(&a)));
}

#[test]
fn instanton_tensor_square() {
    let u = u1().unwrap();
    let pair = tensor_pair(&u, &u).unwrap();
    assert_eq!((pair.size(), pair.rank()), (16, 4));
    assert!(pair.v().mul(pair.u()).is_identity());
    let p = projection(&u).unwrap();
    let big = tensor_projection(&p, &u).unwrap();
    assert_eq!(big.size(), 16);
    assert_eq!(big.rank(), 4);
    assert_eq!(big.trace(), tensor_trace(&p.trace(), &u));
    assert_eq!(big.matrix(), projection(&pair).unwrap().matrix());
}

#[test]
fn structural_identities_up_to_three() {
    for n in 0..=3 {
        let t = Instant::now();
        let un = u_n(n).unwrap();
        assert_eq!((un.size(), un.rank()), (4usize.pow(n as u32), n + 1));
        let p = p_n(n).unwrap();
        assert_eq!(p.rank(), n + 1);
        eprintln!("U({n}), p({n}): {:?}", t.elapsed());
    }
    for n in 0..=2 {
        let t = Instant::now();
        let w = w_n(n).unwrap();
        assert_eq!((w.size(), w.rank()), (4usize.pow(n as u32 + 2), n + 1));
        assert!(orthogonality_holds(n).unwrap());
        eprintln!("W({n}): {:?}", t.elapsed());
    }
}

#[test]
fn equivalence_witness_is_coinvariant() {
    for n in 0..=1 {
        let v = equivalence_witness(n).unwrap();
        assert!(v.entries().iter().all(is_coinvariant));
    }
}

#[test]
fn coaction_commutes_with_star() {
    let u = u1_matrix();
    let h = presentation_suq2();
    let a = presentation_s7q();
    for e in u.entries() {
        let d = coaction_s7(e);
        let starred: Vec<TensorPoly> = d
            .terms()
            .map(|((l, r), k)| {
                TensorPoly::pure(&NCPoly::term(&a, l, k.clone()).star(), &NCPoly::term(&h, r, QScalar::one()).star())
            })
            .collect();
        assert_eq!(coaction_s7(&e.star()), TensorPoly::sum(&a, &h, starred.iter()));
    }
}

#[test]
fn decomposition_n1_n2() {
    for n in 1..=2 {
        let t = Instant::now();
        let r = check_decomposition(n).unwrap();
        assert!(r.holds(), "{:?}", r);
        eprintln!("decomposition({n}): {:?}", t.elapsed());
    }
    let sum: Projection = p_n(2).unwrap().direct_sum(&q_n(0).unwrap());
    assert_eq!(sum.rank(), 4);
    let _: PolyMatrix = sum.matrix().clone();
}

#[test]
fn w3_isometry() {
    let t = Instant::now();
    let w = w_n(3).unwrap();
    assert_eq!((w.size(), w.rank()), (4usize.pow(5), 4));
    eprintln!("W(3): {:?}", t.elapsed());
}

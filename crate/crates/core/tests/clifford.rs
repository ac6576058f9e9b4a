use qsphere::clifford::{
    brute_force_form_trace, chern_chain, chern_number, classical_report, clifford_relations_hold, gamma,
    gamma_product_trace, gaussian, rank_check, repeated_index_trace, symbolic_idempotence, CliffordError,
    GaussianMatrix,
};

#[test]
fn pauli_matrices_for_n_one() {
    let i = gaussian(0, 1);
    let (o, z) = (gaussian(1, 0), gaussian(0, 0));
    let expected = [
        vec![vec![z, o], vec![o, z]],
        vec![vec![z, -i], vec![i, z]],
        vec![vec![o, z], vec![z, -o]],
    ];
    for (k, rows) in expected.into_iter().enumerate() {
        assert_eq!(gamma(1, k + 1).unwrap(), GaussianMatrix::from_rows(rows));
    }
    assert!(matches!(gamma(1, 4), Err(CliffordError::IndexOutOfRange { i: 4, max: 3 })));
    assert!(gamma(2, 0).is_err());
}

#[test]
fn clifford_relations_up_to_four() {
    for n in 1..=4 {
        assert!(clifford_relations_hold(n), "n = {n}");
        assert_eq!(gamma(n, 1).unwrap().dim(), 1 << n);
    }
}

#[test]
fn product_traces() {
    assert_eq!(gamma_product_trace(1), gaussian(0, 2));
    assert_eq!(gamma_product_trace(2), gaussian(-4, 0));
    assert_eq!(gamma_product_trace(3), gaussian(0, -8));
    assert_eq!(gamma_product_trace(4), gaussian(16, 0));
}

#[test]
fn brute_force_oracle() {
    for n in 1..=2 {
        assert_eq!(brute_force_form_trace(n).unwrap(), gamma_product_trace(n));
    }
    assert!(brute_force_form_trace(3).is_err());
    for idx in [[1, 1, 2], [2, 3, 3], [1, 2, 1]] {
        assert_eq!(repeated_index_trace(1, &idx).unwrap(), gaussian(0, 0), "{idx:?}");
    }
    assert_eq!(repeated_index_trace(2, &[1, 2, 3, 4, 4]).unwrap(), gaussian(0, 0));
}

#[test]
fn chern_numbers_alternate() {
    for n in 1..=4 {
        let want = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(chern_number(n).unwrap(), want, "n = {n}");
    }
    let chain = chern_chain(2).unwrap();
    assert_eq!(chain.gamma_trace, "-4");
    assert!(chain.factors.iter().any(|(_, f)| f.contains("pi^")));
    assert!(chern_number(0).is_err());
}

#[test]
fn rank_and_idempotence() {
    assert_eq!(rank_check(1).unwrap(), 1);
    assert_eq!(rank_check(3).unwrap(), 4);
    for n in 1..=3 {
        assert!(symbolic_idempotence(n), "n = {n}");
    }
    let r = classical_report(2).unwrap();
    assert!(r.pass(), "{r:?}");
    assert_eq!(r.brute_force_agrees, Some(true));
    assert!(classical_report(4).unwrap().pass());
}

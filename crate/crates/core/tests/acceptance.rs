//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use qsphere::bundles::{check_decomposition, is_covariant, orthogonality_holds, p_n, u_n, w_n};
use qsphere::chern::{
    ch1_via_decomposition, ch_p, ch_q, eta, euler_square_check, expected_ch1, k_relation_check, regularized_trace,
    tensor_power_check, DualNumber,
};
use qsphere::clifford::{brute_force_form_trace, chern_number, gamma_product_trace};
use qsphere::hopf::corep_matrix;
use qsphere::ncalg::{
    check_local_confluence, presentation_s7q, presentation_suq2, s4_relation_checks, s7_relation_checks,
    y_generators, NCPoly,
};
use qsphere::numcheck::{convergence_table, is_geometric, numeric_ch1};
use qsphere::qcoeff::{parse_scalar, qnum_sqrt, Laurent, QScalar};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn instanton_index() -> Outcome {
    let r = ch_p(1).map_err(|e| e.to_string())?;
    ensure((r.ch0, r.ch1) == (2, -1), format!("ch(p) = ({}, {})", r.ch0, r.ch1))?;
    let sum = regularized_trace(&p_n(1).map_err(|e| e.to_string())?.trace()).map_err(|e| e.to_string())?;
    let (num, exps) = sum.single_piece().ok_or("trace is not a single fraction")?;
    ensure(exps == (2, 4), format!("denominator exponents {exps:?}"))?;
    ensure(num == Laurent::from_terms([(2, 1), (4, 1), (0, -1), (6, -1)]), format!("numerator {num}"))?;
    ensure(sum.value == QScalar::from_int(-1), "intermediate does not reduce to -1")?;
    Ok(format!("ch(p) = (2, -1), {}", r.exact_intermediate))
}

fn higher_indices() -> Outcome {
    let recursive = ch1_via_decomposition(3).map_err(|e| e.to_string())?;
    let mut direct = Vec::new();
    for n in 1..=3 {
        let r = ch_p(n).map_err(|e| e.to_string())?;
        ensure(r.ch1 == expected_ch1(n), format!("direct ch1(E{n}) = {}", r.ch1))?;
        ensure(recursive[n] == expected_ch1(n), format!("recursive ch1(E{n}) = {}", recursive[n]))?;
        direct.push(r.ch1);
    }
    Ok(format!("direct {direct:?}, recursive {:?}", &recursive[1..]))
}

fn k_relation() -> Outcome {
    let r = k_relation_check().map_err(|e| e.to_string())?;
    ensure(r.pass, format!("{r:?}"))?;
    ensure(r.values[1].1 == DualNumber::new(4, -4), format!("ch(E x E) = {}", r.values[1].1))?;
    ensure(euler_square_check().map_err(|e| e.to_string())?.pass, "Euler class square")?;
    for k in 1..=3 {
        ensure(tensor_power_check(k).map_err(|e| e.to_string())?.pass, format!("ch(E^{k})"))?;
    }
    Ok("ch(E x E) = (4, -4), 4 - 4[E] + [E x E] = 0, (2 - [E])^2 = 0".into())
}

fn structural() -> Outcome {
    let e = |x: qsphere::bundles::BundleError| x.to_string();
    for n in 0..=3 {
        let u = u_n(n).map_err(e)?;
        ensure(u.v().mul(u.u()).is_identity(), format!("U({n})* U({n}) = 1"))?;
        ensure(is_covariant(u.u(), n).map_err(e)?, format!("U({n}) covariance"))?;
        p_n(n).map_err(e)?;
    }
    for n in 0..=3 {
        let w = w_n(n).map_err(e)?;
        ensure(w.v().mul(w.u()).is_identity(), format!("W({n})* W({n}) = 1"))?;
        ensure(is_covariant(w.u(), n).map_err(e)?, format!("W({n}) covariance"))?;
    }
    for n in 0..=2 {
        ensure(orthogonality_holds(n).map_err(e)?, format!("W({n})* U({}) = 0", n + 2))?;
    }
    for n in 1..=2 {
        ensure(check_decomposition(n).map_err(e)?.holds(), format!("decomposition n = {n}"))?;
    }
    Ok("U, W isometric and covariant for n <= 3; orthogonality; p(n) projections; decomposition n = 1, 2".into())
}

fn hopf_suite() -> Outcome {
    let h = presentation_suq2();
    let su = |s: &str| NCPoly::parse(&h, s).map_err(|e| e.to_string());
    let t = corep_matrix(2).map_err(|e| e.to_string())?;
    let r = qnum_sqrt(2);
    let display = [
        [su("alpha alpha")?, su("-1 alpha gamma*")?.scale(&r), su("q^2 gamma* gamma*")?],
        [su("gamma alpha")?.scale(&r), su("1 - (1 + q^2) gamma gamma*")?, su("-q alpha* gamma*")?.scale(&r)],
        [su("gamma gamma")?, su("q^-1 gamma alpha*")?.scale(&r), su("alpha* alpha*")?],
    ];
    for (i, row) in display.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            ensure(t.get(i, j) == want, format!("t(2) entry ({i},{j})"))?;
        }
    }
    for n in 0..=4 {
        let c = corep_matrix(n).map_err(|e| e.to_string())?;
        ensure(c.checks().all_pass(), format!("t({n}) invariants {:?}", c.checks()))?;
    }
    Ok("t(2) matches entry for entry; invariants hold for n <= 4".into())
}

fn q0_triviality() -> Outcome {
    let r = ch_q(0).map_err(|e| e.to_string())?;
    ensure((r.ch0, r.ch1) == (1, 0), format!("ch(Q0) = ({}, {})", r.ch0, r.ch1))?;
    let [y0, y1, y2] = y_generators();
    let c = |s: &str| parse_scalar(s).map_err(|e| e.to_string());
    let eta = |p: &NCPoly| eta(p).map_err(|e| e.to_string());
    let e00 = eta(&y0.mul(&y0))?;
    ensure(e00 == c("q^8/((1 - q^4)(1 - q^8))")?, "eta(y0^2)")?;
    ensure(eta(&y0)? == e00.mul(&c("(1 + q^-4)(1 + q^2)")?), "eta(y0)")?;
    let e11 = c("q^-6 (1 + q^4)")?.mul(&e00);
    ensure(eta(&y1.star().mul(&y1))? == e11 && eta(&y1.mul(&y1.star()))? == e11, "eta(y1 y1*)")?;
    ensure(eta(&y2.star().mul(&y2))? == e00 && eta(&y2.mul(&y2.star()))? == e00, "eta(y2 y2*)")?;
    Ok(format!("ch(Q0) = (1, 0), eta(y0^2) = {}", e00.render()))
}

fn classical() -> Outcome {
    let start = Instant::now();
    let mut values = Vec::new();
    for n in 1..=4 {
        let c = chern_number(n).map_err(|e| e.to_string())?;
        ensure(c == if n % 2 == 0 { 1 } else { -1 }, format!("chern_number({n}) = {c}"))?;
        values.push(c);
    }
    for n in 1..=2 {
        ensure(brute_force_form_trace(n).map_err(|e| e.to_string())? == gamma_product_trace(n), "brute force")?;
    }
    Ok(format!("chern numbers {values:?} in {:?}", start.elapsed()))
}

fn rewriting() -> Outcome {
    for pres in [presentation_s7q(), presentation_suq2()] {
        let r = check_local_confluence(&pres, 4);
        ensure(r.is_confluent(), format!("{} not confluent: {:?}", pres.name(), r.failures))?;
    }
    let rels: Vec<_> = s7_relation_checks().into_iter().chain(s4_relation_checks()).collect();
    if let Some(bad) = rels.iter().find(|r| !r.holds) {
        return Err(bad.name.clone());
    }
    Ok(format!("both presentations confluent to degree 4; {} relations verified", rels.len()))
}

fn numeric() -> Outcome {
    let p1 = p_n(1).map_err(|e| e.to_string())?;
    let p2 = p_n(2).map_err(|e| e.to_string())?;
    let e1 = (numeric_ch1(&p1, 30, 0.5) + 1.0).abs();
    let e2 = (numeric_ch1(&p2, 30, 0.5) + 4.0).abs();
    ensure(e1 <= 1e-8 && e2 <= 1e-8, format!("errors {e1:e}, {e2:e}"))?;
    let rows = convergence_table(&[("E1", &p1, -1), ("E2", &p2, -4)], &[4, 8, 16, 32], &[0.5]);
    for chunk in rows.chunks(4) {
        let errs: Vec<f64> = chunk.iter().map(|r| r.abs_error).collect();
        ensure(is_geometric(&errs, 1e-13), format!("non-geometric convergence {errs:?}"))?;
    }
    Ok(format!("|error| = {e1:.1e}, {e2:.1e} at K = 30, q0 = 0.5"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("exact instanton index", instanton_index),
        ("higher corepresentation indices, two ways", higher_indices),
        ("K-relation and Euler-class square", k_relation),
        ("structural identities for n <= 3", structural),
        ("Hopf suite", hopf_suite),
        ("Q(0) triviality and eta identities", q0_triviality),
        ("classical spheres", classical),
        ("rewriting soundness", rewriting),
        ("numeric cross-check", numeric),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.1} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

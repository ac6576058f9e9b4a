use qsphere::bundles::{check_decomposition, orthogonality_holds, p_n, projection, u1, u_n, w_n};
use qsphere::chern::{
    additivity_check, basis_check, ch1_via_decomposition, ch_p, ch_q, eta, euler_square_check, expected_ch1,
    k_relation_check, multiplicativity_check, tensor_power_check, RelationReport,
};
use qsphere::clifford::classical_report;
use qsphere::hopf::corep_matrix;
use qsphere::ncalg::{
    check_local_confluence, presentation_s7q, presentation_suq2, random_sample_checks, s4_relation_checks,
    s7_relation_checks, suq2_relation_checks, y_generators, RelationCheck,
};
use qsphere::numcheck::{convergence_table, is_geometric, numeric_ch1, numeric_idempotence, ConvergenceRow};
use qsphere::qcoeff::parse_scalar;

use crate::report::{run_check, Check, Outcome};
use crate::RunConfig;

fn relation_rows(prefix: &str, anchor: &str, rows: Vec<RelationCheck>, out: &mut Vec<Check>) {
    for (i, r) in rows.into_iter().enumerate() {
        out.push(run_check(&format!("{prefix}.{i}"), anchor, || Ok(Outcome::exact(r.holds, &r.name))));
    }
}

pub fn algebra(cfg: &RunConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for (label, pres) in [("s7", presentation_s7q()), ("suq2", presentation_suq2())] {
        out.push(run_check(&format!("algebra.confluence.{label}"), "local confluence of the rewriting system", || {
            let r = check_local_confluence(&pres, cfg.degree_bound);
            let summary = format!(
                "{}/{} critical pairs joinable, {} words cross-checked",
                r.joinable, r.critical_pairs, r.words_cross_checked
            );
            Ok(Outcome::exact(r.is_confluent(), summary))
        }));
    }
    relation_rows("algebra.s7", "7-sphere relations", s7_relation_checks(), &mut out);
    relation_rows("algebra.suq2", "SU_q(2) relations", suq2_relation_checks(), &mut out);
    relation_rows("algebra.s4", "4-sphere commutation and sphere relations", s4_relation_checks(), &mut out);
    relation_rows("algebra.random", "seeded associativity and involution", random_sample_checks(cfg.seed, 100), &mut out);
    out
}

pub fn hopf(cfg: &RunConfig) -> Vec<Check> {
    (1..=cfg.n.max(1))
        .map(|n| {
            run_check(&format!("hopf.t{n}"), "corepresentation invariants", || {
                let t = corep_matrix(n).map_err(|e| e.to_string())?;
                let c = t.checks();
                let summary = format!(
                    "unitary={} comultiplicative={} counital={} antipode_star={} first_column={}",
                    c.unitary, c.comultiplicative, c.counital, c.antipode_star, c.first_column
                );
                Ok(Outcome::exact(c.all_pass(), summary))
            })
        })
        .collect()
}

pub fn bundles(cfg: &RunConfig) -> Vec<Check> {
    let n = cfg.n;
    let mut out = Vec::new();
    for k in 0..=n {
        out.push(run_check(&format!("bundles.U{k}"), "isometry and covariance of U(n)", || {
            let u = u_n(k).map_err(|e| e.to_string())?;
            Ok(Outcome::exact(u.rank() == k + 1, format!("{}x{}", u.size(), u.rank())))
        }));
        out.push(run_check(&format!("bundles.p{k}"), "projection p(n): self-adjoint, idempotent, coinvariant", || {
            let p = p_n(k).map_err(|e| e.to_string())?;
            Ok(Outcome::exact(p.rank() == k + 1, format!("rank {}", p.rank())))
        }));
    }
    for k in 0..n {
        out.push(run_check(&format!("bundles.W{k}"), "isometry, covariance and recursion of W(n)", || {
            let w = w_n(k).map_err(|e| e.to_string())?;
            Ok(Outcome::exact(w.rank() == k + 1, format!("{}x{}", w.size(), w.rank())))
        }));
        out.push(run_check(&format!("bundles.orthogonality{k}"), "W(n)* U(n+2) = 0", || {
            Ok(Outcome::flag(orthogonality_holds(k).map_err(|e| e.to_string())?))
        }));
    }
    for k in 1..n {
        out.push(run_check(&format!("bundles.decomposition{k}"), "P(n,1) = p(n+1) + q(n-1)", || {
            let r = check_decomposition(k).map_err(|e| e.to_string())?;
            Ok(Outcome::exact(r.holds(), format!("{} mismatched entries of {}", r.mismatched_entries.len(), r.size * r.size)))
        }));
    }
    out
}

fn relation_check(id: &str, anchor: &str, f: impl FnOnce() -> Result<RelationReport, String>) -> Check {
    run_check(id, anchor, || {
        let r = f()?;
        Ok(Outcome::exact(r.pass, format!("{} = {} (expected {})", r.name, r.result, r.expected)))
    })
}

pub fn chern(cfg: &RunConfig) -> Vec<Check> {
    let n = cfg.n;
    let mut out = Vec::new();
    for k in 1..=n {
        out.push(run_check(&format!("chern.E{k}"), "ch1(E_n) = -n(n+1)(n+2)/6", || {
            let r = ch_p(k).map_err(|e| e.to_string())?;
            let pass = r.ch0 == k as i64 + 1 && r.ch1 == expected_ch1(k);
            Ok(Outcome::exact(pass, format!("({}, {}, {})  {}", k, r.ch0, r.ch1, r.exact_intermediate)))
        }));
    }
    if n >= 2 {
        out.push(run_check("chern.recursion", "ch1 through the tensor decomposition", || {
            let values = ch1_via_decomposition(n).map_err(|e| e.to_string())?;
            let pass = (1..=n).all(|k| values[k] == expected_ch1(k));
            Ok(Outcome::exact(pass, format!("{:?}", &values[1..])))
        }));
    }
    out.push(run_check("chern.Q0", "ch(Q(0)) = (1, 0)", || {
        let r = ch_q(0).map_err(|e| e.to_string())?;
        Ok(Outcome::exact((r.ch0, r.ch1) == (1, 0), format!("({}, {})", r.ch0, r.ch1)))
    }));
    out.push(run_check("chern.eta_y0_squared", "eta(y0^2) = q^8/((1-q^4)(1-q^8))", || {
        let [y0, _, _] = y_generators();
        let got = eta(&y0.mul(&y0)).map_err(|e| e.to_string())?;
        let want = parse_scalar("q^8/((1 - q^4)(1 - q^8))").map_err(|e| e.to_string())?;
        Ok(Outcome::exact(got == want, got.render()))
    }));
    out
}

pub fn k_relations(cfg: &RunConfig) -> Vec<Check> {
    let mut out = vec![
        relation_check("k.tensor_square", "4 - 4[E] + [E x E] = 0", || k_relation_check().map_err(|e| e.to_string())),
        relation_check("k.euler_square", "(2 - [E])^2 = 0", || euler_square_check().map_err(|e| e.to_string())),
    ];
    for k in 1..=3 {
        out.push(relation_check(&format!("k.tensor_power{k}"), "ch(E^k) = ch(E)^k", || {
            tensor_power_check(k).map_err(|e| e.to_string())
        }));
    }
    for k in 1..=cfg.n.clamp(1, 2) {
        out.push(relation_check(&format!("k.multiplicativity{k}"), "ch(E1 x En) = ch(E1) ch(En)", || {
            multiplicativity_check(k).map_err(|e| e.to_string())
        }));
        out.push(relation_check(&format!("k.additivity{k}"), "ch additive on P(n,1)", || {
            additivity_check(k).map_err(|e| e.to_string())
        }));
    }
    out.push(run_check("k.basis", "{1, [E]} is a basis of K0", || {
        Ok(Outcome::exact(basis_check([[1, 0], [2, -1]]), "det [[1, 0], [2, -1]] = -1"))
    }));
    out
}

pub fn classical(cfg: &RunConfig) -> Vec<Check> {
    (1..=cfg.n.max(1))
        .map(|k| {
            run_check(&format!("classical.S{}", 2 * k), "top Chern number of the even sphere is (-1)^n", || {
                let r = classical_report(k).map_err(|e| e.to_string())?;
                Ok(Outcome::exact(r.pass(), r.chern_number))
            })
        })
        .collect()
}

pub fn numeric(cfg: &RunConfig) -> (Vec<Check>, Vec<ConvergenceRow>) {
    let mut out = Vec::new();
    let loaded = u1().and_then(|u| projection(&u)).and_then(|p1| Ok((p1, p_n(2)?)));
    let (p1, p2) = match loaded {
        Ok(v) => v,
        Err(e) => {
            out.push(run_check("numcheck.setup", "numeric cross-check", || Err(e.to_string())));
            return (out, Vec::new());
        }
    };
    let p2 = (*p2).clone();
    let cases = [("E1", &p1, -1i64), ("E2", &p2, -4i64)];
    for &q0 in &cfg.q {
        for (label, p, exact) in cases {
            out.push(run_check(&format!("numcheck.{label}.q{q0}"), "truncated trace of the index", || {
                let err = (numeric_ch1(p, cfg.trunc, q0) - exact as f64).abs();
                Ok(Outcome::float(err <= 1e-8, err))
            }));
        }
    }
    let ks: Vec<usize> = [8, 4, 2, 1].iter().map(|d| (cfg.trunc / d).max(1)).collect();
    let table = convergence_table(&cases, &ks, &cfg.q);
    for chunk in table.chunks(ks.len()) {
        let id = format!("numcheck.convergence.{}.q{}", chunk[0].check, chunk[0].q0);
        let errs: Vec<f64> = chunk.iter().map(|r| r.abs_error).collect();
        out.push(run_check(&id, "geometric convergence in K", || {
            Ok(Outcome::float(is_geometric(&errs, 1e-13), errs[errs.len() - 1]))
        }));
    }
    out.push(run_check("numcheck.idempotence.E1", "numeric image of p is idempotent", || {
        let d = numeric_idempotence(&p1, 6, cfg.q[0]);
        Ok(Outcome::float(d < 1e-12, d))
    }));
    (out, table)
}

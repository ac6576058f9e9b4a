//! Irreducible corepresentation matrices of `SU_q(2)`.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use super::maps::{antipode, coproduct, counit};
use super::tensor::TensorPoly;
use super::HopfError;
use crate::ncalg::{bullet, presentation_suq2, su2, NCPoly, PolyMatrix, Presentation};
use crate::qcoeff::{qbinom, qnum_inv_sqrt, qnum_sqrt, QScalar};

/// Runs the q-symmetrization recursion on an `N×2` matrix `u = (u⁰, u¹)`:
/// `U(0) = (1)` and
/// `U(n)^k = [n]^{-1/2} (q^k [n-k]^{1/2} u⁰•U(n-1)^k + [k]^{1/2} u¹•U(n-1)^{k-1})`.
/// The result is `N^n × (n+1)`.
pub fn q_symmetric_power(u: &PolyMatrix, n: usize) -> PolyMatrix {
    let pres = u.presentation();
    assert_eq!(u.cols(), 2, "q-symmetrization needs a two-column matrix");
    let (u0, u1) = (u.column(0), u.column(1));
    let mut cols = vec![vec![NCPoly::one(pres)]];
    for m in 1..=n {
        let inv = qnum_inv_sqrt(m as u32);
        cols = (0..=m)
            .into_par_iter()
            .map(|k| {
                let mut parts = Vec::with_capacity(2);
                if k < m {
                    let c = QScalar::q_pow(k as i32).mul(&qnum_sqrt((m - k) as u32)).mul(&inv);
                    parts.push(scaled(bullet(pres, &u0, &cols[k]), &c));
                }
                if k > 0 {
                    let c = qnum_sqrt(k as u32).mul(&inv);
                    parts.push(scaled(bullet(pres, &u1, &cols[k - 1]), &c));
                }
                add_vecs(pres, parts)
            })
            .collect();
    }
    PolyMatrix::from_columns(pres, &cols)
}

fn scaled(v: Vec<NCPoly>, c: &QScalar) -> Vec<NCPoly> {
    v.into_iter().map(|p| p.scale(c)).collect()
}

fn add_vecs(pres: &Arc<Presentation>, parts: Vec<Vec<NCPoly>>) -> Vec<NCPoly> {
    let len = parts[0].len();
    (0..len).map(|i| NCPoly::sum(pres, parts.iter().map(|v| &v[i]))).collect()
}

/// The fundamental corepresentation `[[α, -qγ*], [γ, α*]]`.
pub fn t1() -> PolyMatrix {
    use su2::*;
    let h = presentation_suq2();
    let g = |i| NCPoly::generator(&h, i);
    let mut t = PolyMatrix::zeros(&h, 2, 2);
    t.set(0, 0, g(ALPHA));
    t.set(0, 1, g(GAMMA_S).scale(&QScalar::monomial(-1, 1)));
    t.set(1, 0, g(GAMMA));
    t.set(1, 1, g(ALPHA_S));
    t
}

/// The scalar `2ⁿ × (n+1)` isometry obtained from the recursion with `u = 1₂`.
pub fn scalar_intertwiner(n: usize) -> PolyMatrix {
    q_symmetric_power(&PolyMatrix::identity(&presentation_suq2(), 2), n)
}

/// `(a ⊗̇ b)_i^j = Σ_k a_i^k ⊗ b_k^j`, row-major.
pub fn dotted_tensor(a: &PolyMatrix, b: &PolyMatrix) -> Vec<TensorPoly> {
    assert_eq!(a.cols(), b.rows());
    let (l, r) = (a.presentation().clone(), b.presentation().clone());
    (0..a.rows() * b.cols())
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / b.cols(), idx % b.cols());
            let parts: Vec<TensorPoly> = (0..a.cols()).map(|k| TensorPoly::pure(a.get(i, k), b.get(k, j))).collect();
            TensorPoly::sum(&l, &r, parts.iter())
        })
        .collect()
}

/// Invariant flags of a corepresentation matrix.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CorepChecks {
    pub n: usize,
    pub unitary: bool,
    pub comultiplicative: bool,
    pub counital: bool,
    pub antipode_star: bool,
    pub first_column: bool,
}

impl CorepChecks {
    pub fn all_pass(&self) -> bool {
        self.unitary && self.comultiplicative && self.counital && self.antipode_star && self.first_column
    }
}

/// The `(n+1)×(n+1)` matrix `t⁽ⁿ⁾`, validated at construction.
#[derive(Clone, Debug)]
pub struct CorepMatrix {
    n: usize,
    matrix: PolyMatrix,
    checks: CorepChecks,
}

impl CorepMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        self.matrix.get(i, j)
    }

    pub fn checks(&self) -> &CorepChecks {
        &self.checks
    }
}

/// Evaluates every corepresentation invariant of `t`.
pub fn corep_checks(t: &PolyMatrix) -> CorepChecks {
    let n = t.rows() - 1;
    let ts = t.star();
    let unitary = t.mul(&ts).is_identity() && ts.mul(t).is_identity();
    let lhs: Vec<TensorPoly> = t.entries().par_iter().map(coproduct).collect();
    let comultiplicative = lhs == dotted_tensor(t, t);
    let counital = (0..=n).all(|i| (0..=n).all(|j| counit(t.get(i, j)) == if i == j { QScalar::one() } else { QScalar::zero() }));
    let antipode_star = (0..=n).into_par_iter().all(|i| (0..=n).all(|j| antipode(t.get(i, j)) == t.get(j, i).star()));
    let h = presentation_suq2();
    let first_column = (0..=n).all(|k| {
        let coeff = qbinom(n as u32, k as u32).and_then(|b| b.sqrt());
        let Ok(coeff) = coeff else { return false };
        let g = NCPoly::generator(&h, su2::GAMMA).pow(k as u32);
        let a = NCPoly::generator(&h, su2::ALPHA).pow((n - k) as u32);
        *t.get(k, 0) == g.mul(&a).scale(&coeff)
    });
    CorepChecks { n, unitary, comultiplicative, counital, antipode_star, first_column }
}

fn build(n: usize) -> Result<CorepMatrix, HopfError> {
    let h = presentation_suq2();
    let matrix = match n {
        0 => PolyMatrix::identity(&h, 1),
        1 => t1(),
        _ => {
            let s = q_symmetric_power(&t1(), n);
            let c = scalar_intertwiner(n);
            let t = c.transpose().mul(&s);
            if c.mul(&t) != s {
                return Err(HopfError::Invariant(format!("t({n}): symmetrized matrix is not intertwined by the scalar isometry")));
            }
            t
        }
    };
    let checks = corep_checks(&matrix);
    if !checks.all_pass() {
        return Err(HopfError::Invariant(format!("t({n}) fails {:?}", checks)));
    }
    Ok(CorepMatrix { n, matrix, checks })
}

/// `t⁽ⁿ⁾`, built once per `n` and cached.
pub fn corep_matrix(n: usize) -> Result<Arc<CorepMatrix>, HopfError> {
    static CACHE: OnceLock<DashMap<usize, Arc<CorepMatrix>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(hit) = cache.get(&n) {
        return Ok(hit.clone());
    }
    let t = Arc::new(build(n)?);
    cache.insert(n, t.clone());
    Ok(t)
}

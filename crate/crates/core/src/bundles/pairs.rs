//! Trivializing pairs and the partial isometries `U⁽ⁿ⁾`, `W⁽ⁿ⁾`.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rayon::prelude::*;

use super::BundleError;
use crate::hopf::{coaction_s7, corep_matrix, dotted_tensor, q_symmetric_power};
use crate::ncalg::{bullet, presentation_s7q, s7, NCPoly, PolyMatrix};
use crate::qcoeff::{qnum_inv_sqrt, qnum_sqrt, QScalar};

/// A pair `(u, v)` with `v u = 1_r`; here always `v = u*`.
#[derive(Clone, Debug)]
pub struct TrivPair {
    u: PolyMatrix,
    v: PolyMatrix,
    corep: Option<usize>,
}

impl TrivPair {
    /// Builds `(u, u*)` and checks `u* u = 1`.
    pub fn from_isometry(u: PolyMatrix, corep: Option<usize>) -> Result<Self, BundleError> {
        let v = u.star();
        if !v.mul(&u).is_identity() {
            return Err(BundleError::Isometry(format!("{}x{} matrix", u.rows(), u.cols())));
        }
        Ok(TrivPair { u, v, corep })
    }

    /// The `1×1` pair `(1, 1)`.
    pub fn trivial() -> Self {
        let one = PolyMatrix::identity(&presentation_s7q(), 1);
        TrivPair { u: one.clone(), v: one, corep: Some(0) }
    }

    pub fn u(&self) -> &PolyMatrix {
        &self.u
    }

    pub fn v(&self) -> &PolyMatrix {
        &self.v
    }

    pub fn corep(&self) -> Option<usize> {
        self.corep
    }

    /// Number of rows `N`.
    pub fn size(&self) -> usize {
        self.u.rows()
    }

    /// Number of columns `r`.
    pub fn rank(&self) -> usize {
        self.u.cols()
    }

    pub fn column(&self, k: usize) -> Vec<NCPoly> {
        self.u.column(k)
    }
}

/// True iff `δ(u) = u ⊗̇ t⁽ⁿ⁾` entrywise.
pub fn is_covariant(u: &PolyMatrix, n: usize) -> Result<bool, BundleError> {
    let t = corep_matrix(n)?;
    let rhs = dotted_tensor(u, t.matrix());
    Ok(u.entries().par_iter().zip(rhs.par_iter()).all(|(e, r)| coaction_s7(e) == *r))
}

/// The instanton matrix, rows `(qx1, qx2)`, `(-q²x2*, q³x1*)`, `(-x3, x4)`, `(x4*, qx3*)`.
pub fn u1_matrix() -> PolyMatrix {
    use s7::*;
    let a = presentation_s7q();
    let x = |g: u8, c: i128, e: i32| NCPoly::generator(&a, g).scale(&QScalar::monomial(c, e));
    let rows = [
        [x(X1, 1, 1), x(X2, 1, 1)],
        [x(X2S, -1, 2), x(X1S, 1, 3)],
        [x(X3, -1, 0), x(X4, 1, 0)],
        [x(X4S, 1, 0), x(X3S, 1, 1)],
    ];
    PolyMatrix::from_fn(&a, 4, 2, |i, j| rows[i][j].clone())
}

fn cached<F>(cache: &'static OnceLock<DashMap<usize, Arc<TrivPair>>>, n: usize, f: F) -> Result<Arc<TrivPair>, BundleError>
where
    F: FnOnce() -> Result<TrivPair, BundleError>,
{
    let map = cache.get_or_init(DashMap::new);
    if let Some(hit) = map.get(&n) {
        return Ok(hit.clone());
    }
    let p = Arc::new(f()?);
    map.insert(n, p.clone());
    Ok(p)
}

/// The instanton pair, checked to be an isometry covariant under `t⁽¹⁾`.
pub fn u1() -> Result<Arc<TrivPair>, BundleError> {
    u_n(1)
}

/// `U⁽ⁿ⁾`, the `4ⁿ×(n+1)` q-symmetrization of the instanton matrix.
pub fn u_n(n: usize) -> Result<Arc<TrivPair>, BundleError> {
    static CACHE: OnceLock<DashMap<usize, Arc<TrivPair>>> = OnceLock::new();
    cached(&CACHE, n, || {
        let u = q_symmetric_power(&u1_matrix(), n);
        let pair = TrivPair::from_isometry(u, Some(n))?;
        if !is_covariant(pair.u(), n)? {
            return Err(BundleError::Covariance(format!("U({n})")));
        }
        Ok(pair)
    })
}

fn w_columns(n: usize) -> Result<Vec<Vec<NCPoly>>, BundleError> {
    let a = presentation_s7q();
    let u = u1_matrix();
    let (u0, u1) = (u.column(0), u.column(1));
    let big = u_n(n + 1)?;
    let inv = qnum_inv_sqrt(n as u32 + 2);
    Ok((0..=n)
        .into_par_iter()
        .map(|k| {
            let c0 = qnum_sqrt(k as u32 + 1).mul(&inv);
            let c1 = QScalar::q_pow(k as i32 + 1).mul(&qnum_sqrt((n + 1 - k) as u32)).mul(&inv);
            let left = bullet(&a, &u0, &big.column(k + 1));
            let right = bullet(&a, &u1, &big.column(k));
            left.iter().zip(&right).map(|(l, r)| l.scale(&c0).sub(&r.scale(&c1))).collect()
        })
        .collect())
}

/// Checks the recursion expressing `W⁽ⁿ⁾` through `W⁽ⁿ⁻¹⁾`, `W⁽⁰⁾` and `U⁽ⁿ⁾`.
fn w_recursion_holds(n: usize, w: &PolyMatrix) -> Result<bool, BundleError> {
    let a = presentation_s7q();
    let u = u1_matrix();
    let (u0, u1) = (u.column(0), u.column(1));
    let prev = w_n(n - 1)?;
    let w0 = w_n(0)?.column(0);
    let un = u_n(n)?;
    let lead = qnum_sqrt(n as u32 + 2);
    let mix = qnum_sqrt(n as u32 + 1).mul(&qnum_sqrt(2));
    Ok((0..=n).into_par_iter().all(|k| {
        let mut parts: Vec<Vec<NCPoly>> = Vec::new();
        if k < n {
            let c = QScalar::q_pow(k as i32 + 1).mul(&qnum_sqrt((n - k) as u32));
            parts.push(bullet(&a, &u0, &prev.column(k)).into_iter().map(|p| p.scale(&c)).collect());
        }
        if k > 0 {
            let c = QScalar::q_pow(1).mul(&qnum_sqrt(k as u32));
            parts.push(bullet(&a, &u1, &prev.column(k - 1)).into_iter().map(|p| p.scale(&c)).collect());
        }
        parts.push(bullet(&a, &w0, &un.column(k)).into_iter().map(|p| p.scale(&mix)).collect());
        (0..w.rows()).all(|i| {
            let rhs = NCPoly::sum(&a, parts.iter().map(|v| &v[i]));
            w.get(i, k).scale(&lead) == rhs
        })
    }))
}

/// `W⁽ⁿ⁾`, the `4^{n+2}×(n+1)` partial q-antisymmetrization. Construction
/// checks `W*W = 1`, covariance under `t⁽ⁿ⁾` and the recursion in `n`.
pub fn w_n(n: usize) -> Result<Arc<TrivPair>, BundleError> {
    static CACHE: OnceLock<DashMap<usize, Arc<TrivPair>>> = OnceLock::new();
    cached(&CACHE, n, || {
        let a = presentation_s7q();
        let w = PolyMatrix::from_columns(&a, &w_columns(n)?);
        let pair = TrivPair::from_isometry(w, Some(n))?;
        if !is_covariant(pair.u(), n)? {
            return Err(BundleError::Covariance(format!("W({n})")));
        }
        if n >= 1 && !w_recursion_holds(n, pair.u())? {
            return Err(BundleError::Recursion(format!("W({n})")));
        }
        Ok(pair)
    })
}

/// `(W⁽ⁿ⁾)* U⁽ⁿ⁺²⁾ = 0`.
pub fn orthogonality_holds(n: usize) -> Result<bool, BundleError> {
    Ok(w_n(n)?.v().mul(u_n(n + 2)?.u()).is_zero())
}

/// `m_ij = u_i⁰ u_j¹ - q u_i¹ u_j⁰`, row-major `4×4`.
pub fn q_minors() -> PolyMatrix {
    let u = u1_matrix();
    let q = QScalar::q_pow(1);
    PolyMatrix::from_fn(u.presentation(), 4, 4, |i, j| u.get(i, 0).mul(u.get(j, 1)).sub(&u.get(i, 1).mul(u.get(j, 0)).scale(&q)))
}

/// The pair for a tensor product: entry `((i, J), (k, K))` is `a_i^k b_J^K`,
/// with the indices of `a` most significant.
pub fn tensor_pair(a: &TrivPair, b: &TrivPair) -> Result<TrivPair, BundleError> {
    let (au, bu) = (a.u(), b.u());
    let (nb, rb) = (bu.rows(), bu.cols());
    let u = PolyMatrix::from_fn(au.presentation(), au.rows() * nb, au.cols() * rb, |row, col| {
        let (i, jj) = (row / nb, row % nb);
        let (k, kk) = (col / rb, col % rb);
        au.get(i, k).mul(bu.get(jj, kk))
    });
    TrivPair::from_isometry(u, None)
}

/// The partial isometry `U⁽ⁿ⁾ (W⁽ⁿ⁾)*` realizing `p⁽ⁿ⁾ ~ q⁽ⁿ⁾`.
pub fn equivalence_witness(n: usize) -> Result<PolyMatrix, BundleError> {
    Ok(u_n(n)?.u().mul(w_n(n)?.v()))
}

//! Coinvariant projections `u u*` and their tensor products.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rayon::prelude::*;
use serde::Serialize;

use super::pairs::{orthogonality_holds, tensor_pair, u1, u_n, w_n, TrivPair};
use super::BundleError;
use crate::hopf::is_coinvariant;
use crate::ncalg::{NCPoly, PolyMatrix};

/// A self-adjoint idempotent with coinvariant entries.
#[derive(Clone, Debug)]
pub struct Projection {
    matrix: PolyMatrix,
    rank: usize,
}

impl Projection {
    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// Column count of the pair it came from.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn trace(&self) -> NCPoly {
        self.matrix.trace()
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        self.matrix.get(i, j)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Projection) -> Projection {
        Projection { matrix: self.matrix.direct_sum(&other.matrix), rank: self.rank + other.rank }
    }
}

/// Entrywise coinvariance; the lower triangle follows from self-adjointness.
fn coinvariant_entries(m: &PolyMatrix) -> bool {
    let n = m.rows();
    (0..n * n).into_par_iter().filter(|k| k / n <= k % n).all(|k| is_coinvariant(m.get(k / n, k % n)))
}

fn validate(matrix: PolyMatrix, rank: usize, square: PolyMatrix) -> Result<Projection, BundleError> {
    let size = matrix.rows();
    if matrix.star() != matrix {
        return Err(BundleError::Projection(format!("{size}x{size} matrix is not self-adjoint")));
    }
    if square != matrix {
        return Err(BundleError::Projection(format!("{size}x{size} matrix is not idempotent")));
    }
    if !coinvariant_entries(&matrix) {
        return Err(BundleError::Projection(format!("{size}x{size} matrix has non-coinvariant entries")));
    }
    Ok(Projection { matrix, rank })
}

/// `P = u u*`. The square is evaluated as `u (u* P)`.
pub fn projection(pair: &TrivPair) -> Result<Projection, BundleError> {
    let p = pair.u().mul(pair.v());
    let square = pair.u().mul(&pair.v().mul(&p));
    validate(p, pair.rank(), square)
}

/// The projection of the tensor product of the module of `p` with the
/// module of `b`: entry `((j₂, j₁), (k₂, k₁))` is `Σ_i b.u_{j₂}^i p_{j₁}^{k₁} b.v_i^{k₂}`.
pub fn tensor_projection(p: &Projection, b: &TrivPair) -> Result<Projection, BundleError> {
    let (bu, bv) = (b.u(), b.v());
    let n = p.size();
    let pres = p.matrix().presentation();
    let matrix = PolyMatrix::from_fn(pres, bu.rows() * n, bu.rows() * n, |row, col| {
        let (j2, j1) = (row / n, row % n);
        let (k2, k1) = (col / n, col % n);
        let centre = p.get(j1, k1);
        if centre.is_zero() {
            return NCPoly::zero(pres);
        }
        let terms: Vec<NCPoly> = (0..bu.cols()).map(|i| bu.get(j2, i).mul(centre).mul(bv.get(i, k2))).collect();
        NCPoly::sum(pres, terms.iter())
    });
    let square = matrix.mul(&matrix);
    validate(matrix, p.rank() * b.rank(), square)
}

/// `Σ_{i,j} b.u_j^i (Tr p) b.v_i^j`.
pub fn tensor_trace(trace: &NCPoly, b: &TrivPair) -> NCPoly {
    let (bu, bv) = (b.u(), b.v());
    let terms: Vec<NCPoly> = (0..bu.rows())
        .into_par_iter()
        .flat_map_iter(|j| (0..bu.cols()).map(move |i| (i, j)))
        .map(|(i, j)| bu.get(j, i).mul(trace).mul(bv.get(i, j)))
        .collect();
    NCPoly::sum(trace.presentation(), terms.iter())
}

fn cached(cache: &'static OnceLock<DashMap<usize, Arc<Projection>>>, n: usize, pair: Arc<TrivPair>) -> Result<Arc<Projection>, BundleError> {
    let map = cache.get_or_init(DashMap::new);
    if let Some(hit) = map.get(&n) {
        return Ok(hit.clone());
    }
    let p = Arc::new(projection(&pair)?);
    map.insert(n, p.clone());
    Ok(p)
}

/// `p⁽ⁿ⁾ = U⁽ⁿ⁾ (U⁽ⁿ⁾)*`.
pub fn p_n(n: usize) -> Result<Arc<Projection>, BundleError> {
    static CACHE: OnceLock<DashMap<usize, Arc<Projection>>> = OnceLock::new();
    cached(&CACHE, n, u_n(n)?)
}

/// `q⁽ⁿ⁾ = W⁽ⁿ⁾ (W⁽ⁿ⁾)*`.
pub fn q_n(n: usize) -> Result<Arc<Projection>, BundleError> {
    static CACHE: OnceLock<DashMap<usize, Arc<Projection>>> = OnceLock::new();
    cached(&CACHE, n, w_n(n)?)
}

/// Outcome of comparing `P⁽ⁿ,¹⁾` with `p⁽ⁿ⁺¹⁾ + q⁽ⁿ⁻¹⁾`.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub size: usize,
    pub mismatched_entries: Vec<(usize, usize)>,
    pub orthogonal: bool,
    pub product_vanishes: bool,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.mismatched_entries.is_empty() && self.orthogonal && self.product_vanishes
    }
}

/// `P⁽ⁿ,¹⁾`, the projection of the pair `(u⁰•U⁽ⁿ⁾, u¹•U⁽ⁿ⁾)`.
pub fn p_n1(n: usize) -> Result<Projection, BundleError> {
    projection(&tensor_pair(&*u1()?, &*u_n(n)?)?)
}

/// Entrywise check of `P⁽ⁿ,¹⁾ = p⁽ⁿ⁺¹⁾ + q⁽ⁿ⁻¹⁾` with `p⁽ⁿ⁺¹⁾ q⁽ⁿ⁻¹⁾ = 0`.
pub fn check_decomposition(n: usize) -> Result<DecompositionReport, BundleError> {
    if n == 0 {
        return Err(BundleError::Domain("decomposition needs n >= 1".into()));
    }
    let big = p_n1(n)?;
    let p = p_n(n + 1)?;
    let q = q_n(n - 1)?;
    let sum = p.matrix().add(q.matrix());
    let (u, w) = (u_n(n + 1)?, w_n(n - 1)?);
    let product = u.u().mul(&u.v().mul(w.u())).mul(w.v());
    Ok(DecompositionReport {
        n,
        size: big.size(),
        mismatched_entries: big.matrix().differences(&sum),
        orthogonal: orthogonality_holds(n - 1)?,
        product_vanishes: product.is_zero(),
    })
}

//! Floating-point cross-check: the representation on `ℓ²(ℕ²)` truncated to
//! `k₁, k₂ ≤ K`, with the basis ordered lexicographically in `(k₁, k₂)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::bundles::Projection;
use crate::chern::generator_term;
use crate::hopf::counit;
use crate::ncalg::{s7, NCPoly};

/// Sparse operator on the truncated space, stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedOp {
    k: usize,
    q0: f64,
    cols: Vec<Vec<(usize, f64)>>,
}

impl TruncatedOp {
    pub fn zero(k: usize, q0: f64) -> Self {
        TruncatedOp { k, q0, cols: vec![Vec::new(); (k + 1) * (k + 1)] }
    }

    pub fn identity(k: usize, q0: f64) -> Self {
        let dim = (k + 1) * (k + 1);
        TruncatedOp { k, q0, cols: (0..dim).map(|i| vec![(i, 1.0)]).collect() }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn truncation(&self) -> usize {
        self.k
    }

    pub fn index(&self, k1: usize, k2: usize) -> usize {
        k1 * (self.k + 1) + k2
    }

    pub fn coords(&self, i: usize) -> (usize, usize) {
        (i / (self.k + 1), i % (self.k + 1))
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.cols[col].iter().filter(|(r, _)| *r == row).map(|(_, v)| v).sum()
    }

    /// Image of the basis vector `col` as a sparse vector.
    pub fn column(&self, col: usize) -> &[(usize, f64)] {
        &self.cols[col]
    }

    fn apply_sparse(&self, v: &[(usize, f64)], acc: &mut HashMap<usize, f64>, scale: f64) {
        for &(i, x) in v {
            for &(r, w) in &self.cols[i] {
                *acc.entry(r).or_insert(0.0) += scale * x * w;
            }
        }
    }

    fn from_accumulators(k: usize, q0: f64, accs: Vec<HashMap<usize, f64>>) -> Self {
        let cols = accs
            .into_iter()
            .map(|m| {
                let mut c: Vec<(usize, f64)> = m.into_iter().filter(|(_, v)| *v != 0.0).collect();
                c.sort_by_key(|(r, _)| *r);
                c
            })
            .collect();
        TruncatedOp { k, q0, cols }
    }

    /// `self ∘ other`.
    pub fn mul(&self, other: &Self) -> Self {
        let accs = other
            .cols
            .iter()
            .map(|c| {
                let mut acc = HashMap::new();
                self.apply_sparse(c, &mut acc, 1.0);
                acc
            })
            .collect();
        Self::from_accumulators(self.k, self.q0, accs)
    }

    pub fn add_scaled(&self, other: &Self, c: f64) -> Self {
        let accs = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: HashMap<usize, f64> = a.iter().copied().collect();
                for &(r, v) in b {
                    *acc.entry(r).or_insert(0.0) += c * v;
                }
                acc
            })
            .collect();
        Self::from_accumulators(self.k, self.q0, accs)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.cols.iter().flatten().fold(0.0, |m, (_, v)| m.max(v.abs()))
    }
}

/// `π(g)` truncated; shifts leaving the window are dropped.
pub fn build_truncated(g: u8, k: usize, q0: f64) -> TruncatedOp {
    let mut op = TruncatedOp::zero(k, q0);
    let Some(term) = generator_term(g) else {
        return op;
    };
    for i in 0..op.dim() {
        let (k1, k2) = op.coords(i);
        let (t1, t2) = (k1 as i64 + term.shift.0 as i64, k2 as i64 + term.shift.1 as i64);
        if t1 < 0 || t2 < 0 || t1 > k as i64 || t2 > k as i64 {
            continue;
        }
        let w = term.eval(k1 as i64, k2 as i64, q0);
        if w != 0.0 {
            let target = op.index(t1 as usize, t2 as usize);
            op.cols[i].push((target, w));
        }
    }
    op
}

/// Truncated image of a polynomial, each word composed from truncated generators.
pub struct Evaluator {
    k: usize,
    q0: f64,
    gens: Vec<TruncatedOp>,
}

impl Evaluator {
    pub fn new(k: usize, q0: f64) -> Self {
        let gens = (0..8).map(|g| build_truncated(g, k, q0)).collect();
        Evaluator { k, q0, gens }
    }

    pub fn image(&self, p: &NCPoly) -> TruncatedOp {
        let dim = (self.k + 1) * (self.k + 1);
        let mut accs: Vec<HashMap<usize, f64>> = vec![HashMap::new(); dim];
        for (w, c) in p.terms() {
            if w.iter().any(|g| matches!(*g, s7::X1 | s7::X1S)) {
                continue;
            }
            let c = c.eval(self.q0);
            for (col, acc) in accs.iter_mut().enumerate() {
                let mut v = vec![(col, c)];
                for g in w.iter().rev() {
                    v = v
                        .iter()
                        .flat_map(|&(i, x)| self.gens[*g as usize].cols[i].iter().map(move |&(r, y)| (r, x * y)))
                        .collect();
                    if v.is_empty() {
                        break;
                    }
                }
                for (r, x) in v {
                    *acc.entry(r).or_insert(0.0) += x;
                }
            }
        }
        TruncatedOp::from_accumulators(self.k, self.q0, accs)
    }
}

/// `Tr(π_K(Tr P) - ε(Tr P))` over the truncated space.
pub fn numeric_ch1(p: &Projection, k: usize, q0: f64) -> f64 {
    let tr = p.trace();
    let eps = counit(&tr).eval(q0);
    let m = Evaluator::new(k, q0).image(&tr);
    m.trace() - eps * m.dim() as f64
}

/// `max |M² - M|` over matrix elements between basis vectors with `k₁, k₂ ≤ K`,
/// where `M` is the image of `P` on a window wide enough that no word started
/// inside the inner window reaches the edge.
pub fn numeric_idempotence(p: &Projection, k: usize, q0: f64) -> f64 {
    let deg = p.matrix().entries().iter().map(NCPoly::degree).max().unwrap_or(0);
    let outer = k + 2 * deg;
    let ev = Evaluator::new(outer, q0);
    let size = p.size();
    let m: Vec<TruncatedOp> = p.matrix().entries().iter().map(|e| ev.image(e)).collect();
    let probe = TruncatedOp::zero(outer, q0);
    let mut worst: f64 = 0.0;
    for k1 in 0..=k {
        for k2 in 0..=k {
            let b = probe.index(k1, k2);
            for j in 0..size {
                let mut sq: Vec<HashMap<usize, f64>> = vec![HashMap::new(); size];
                for l in 0..size {
                    let v = m[l * size + j].column(b);
                    if v.is_empty() {
                        continue;
                    }
                    for (i, acc) in sq.iter_mut().enumerate() {
                        m[i * size + l].apply_sparse(v, acc, 1.0);
                    }
                }
                for (i, mut acc) in sq.into_iter().enumerate() {
                    for &(r, x) in m[i * size + j].column(b) {
                        *acc.entry(r).or_insert(0.0) -= x;
                    }
                    for (r, x) in acc {
                        let (r1, r2) = probe.coords(r);
                        if r1 <= k && r2 <= k {
                            worst = worst.max(x.abs());
                        }
                    }
                }
            }
        }
    }
    worst
}

/// One row of a convergence table.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRow {
    pub check: String,
    #[serde(rename = "K")]
    pub k: usize,
    pub q0: f64,
    pub value: f64,
    pub abs_error: f64,
}

/// `numeric_ch1` of each labelled projection against its exact value, over a grid.
pub fn convergence_table(cases: &[(&str, &Projection, i64)], ks: &[usize], q0s: &[f64]) -> Vec<ConvergenceRow> {
    let mut rows = Vec::new();
    for &(label, p, exact) in cases {
        for &q0 in q0s {
            for &k in ks {
                let value = numeric_ch1(p, k, q0);
                rows.push(ConvergenceRow { check: label.into(), k, q0, value, abs_error: (value - exact as f64).abs() });
            }
        }
    }
    rows
}

/// Errors along increasing `K` decrease until they reach `floor`.
pub fn is_geometric(errors: &[f64], floor: f64) -> bool {
    errors.windows(2).all(|w| w[1] <= floor || w[1] < w[0])
}

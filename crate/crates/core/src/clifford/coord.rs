use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

use super::{gammas, gaussian, GaussianMatrix, GaussianRational};

/// Polynomial in commuting coordinates `x₁..x_m` with matrix coefficients,
/// keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordPoly {
    vars: usize,
    dim: usize,
    terms: BTreeMap<Vec<u32>, GaussianMatrix>,
}

impl CoordPoly {
    pub fn zero(vars: usize, dim: usize) -> Self {
        CoordPoly { vars, dim, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, m: GaussianMatrix) -> Self {
        let mut p = Self::zero(vars, m.dim());
        p.add_term(vec![0; vars], m);
        p
    }

    /// `xᵢ · m`, with `i` counted from 0.
    pub fn linear(vars: usize, i: usize, m: GaussianMatrix) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars, m.dim());
        p.add_term(e, m);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianMatrix)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<u32>, m: GaussianMatrix) {
        let entry = self.terms.entry(e).or_insert_with(|| GaussianMatrix::zeros(m.dim()));
        *entry = entry.add(&m);
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, m) in &o.terms {
            out.add_term(e.clone(), m.clone());
        }
        out
    }

    pub fn scale(&self, c: GaussianRational) -> Self {
        let mut out = Self::zero(self.vars, self.dim);
        for (e, m) in &self.terms {
            out.add_term(e.clone(), m.scale(c));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.vars, self.dim);
        for (ea, ma) in &self.terms {
            for (eb, mb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ma.mul(mb));
            }
        }
        out
    }

    /// Eliminates `x_m²` through `x_m² = 1 - Σ_{i<m} xᵢ²` until every exponent
    /// of the last coordinate is at most 1.
    pub fn reduce_sphere(&self) -> Self {
        let last = self.vars - 1;
        let mut out = Self::zero(self.vars, self.dim);
        let mut work: Vec<(Vec<u32>, GaussianMatrix)> = self.terms.iter().map(|(e, m)| (e.clone(), m.clone())).collect();
        while let Some((e, m)) = work.pop() {
            if e[last] < 2 {
                out.add_term(e, m);
                continue;
            }
            let mut base = e.clone();
            base[last] -= 2;
            work.push((base.clone(), m.clone()));
            for i in 0..last {
                let mut t = base.clone();
                t[i] += 2;
                work.push((t, m.scale(gaussian(-1, 0))));
            }
        }
        out
    }
}

/// `p = ½(1 + Σ xᵢγᵢ)` on `S²ⁿ`.
pub fn sphere_projection(n: usize) -> CoordPoly {
    let g = gammas(n);
    let vars = g.len();
    let dim = g[0].dim();
    let half = GaussianRational::new(Ratio::new(1, 2), Ratio::zero());
    let sum = g
        .iter()
        .enumerate()
        .fold(CoordPoly::constant(vars, GaussianMatrix::identity(dim)), |acc, (i, gi)| {
            acc.add(&CoordPoly::linear(vars, i, gi.clone()))
        });
    sum.scale(half)
}

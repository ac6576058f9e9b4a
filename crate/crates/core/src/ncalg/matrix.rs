//! Dense matrices with noncommutative polynomial entries.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::{NCPoly, Presentation};
use crate::qcoeff::QScalar;

#[derive(Clone)]
pub struct PolyMatrix {
    pres: Arc<Presentation>,
    rows: usize,
    cols: usize,
    entries: Vec<NCPoly>,
}

impl PolyMatrix {
    pub fn zeros(pres: &Arc<Presentation>, rows: usize, cols: usize) -> Self {
        PolyMatrix { pres: pres.clone(), rows, cols, entries: vec![NCPoly::zero(pres); rows * cols] }
    }

    pub fn identity(pres: &Arc<Presentation>, n: usize) -> Self {
        let mut m = Self::zeros(pres, n, n);
        for i in 0..n {
            m.set(i, i, NCPoly::one(pres));
        }
        m
    }

    pub fn from_fn<F>(pres: &Arc<Presentation>, rows: usize, cols: usize, f: F) -> Self
    where
        F: Fn(usize, usize) -> NCPoly + Sync,
    {
        let entries = (0..rows * cols).into_par_iter().map(|k| f(k / cols, k % cols)).collect();
        PolyMatrix { pres: pres.clone(), rows, cols, entries }
    }

    /// Scalar matrix embedded in the algebra.
    pub fn from_scalars(pres: &Arc<Presentation>, rows: usize, cols: usize, s: &[QScalar]) -> Self {
        assert_eq!(s.len(), rows * cols);
        PolyMatrix {
            pres: pres.clone(),
            rows,
            cols,
            entries: s.iter().map(|c| NCPoly::constant(pres, c.clone())).collect(),
        }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: NCPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<NCPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(pres: &Arc<Presentation>, cols: &[Vec<NCPoly>]) -> Self {
        let rows = cols.first().map_or(0, |c| c.len());
        assert!(cols.iter().all(|c| c.len() == rows), "ragged columns");
        Self::from_fn(pres, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let m = self.cols;
        Self::from_fn(&self.pres, self.rows, other.cols, |i, j| {
            NCPoly::dot(
                &self.pres,
                (0..m).map(|k| (self.get(i, k), other.get(k, j))).filter(|(a, b)| !a.is_zero() && !b.is_zero()),
            )
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(&self.pres, self.rows, self.cols, |i, j| self.get(i, j).add(other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(&self.pres, self.rows, self.cols, |i, j| self.get(i, j).sub(other.get(i, j)))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        Self::from_fn(&self.pres, self.rows, self.cols, |i, j| self.get(i, j).scale(c))
    }

    /// Conjugate transpose.
    pub fn star(&self) -> Self {
        Self::from_fn(&self.pres, self.cols, self.rows, |i, j| self.get(j, i).star())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.pres, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    /// Matrix trace.
    pub fn trace(&self) -> NCPoly {
        NCPoly::sum(&self.pres, (0..self.rows.min(self.cols)).map(|i| self.get(i, i)))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(&self.pres, r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                NCPoly::zero(&self.pres)
            }
        })
    }

    /// Positions of the entries where two matrices differ.
    pub fn differences(&self, other: &Self) -> Vec<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.rows * self.cols)
            .filter(|k| self.entries[*k] != other.entries[*k])
            .map(|k| (k / self.cols, k % self.cols))
            .collect()
    }

    /// Largest number of terms in any entry.
    pub fn max_terms(&self) -> usize {
        self.entries.iter().map(|e| e.num_terms()).max().unwrap_or(0)
    }
}

impl PartialEq for PolyMatrix {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) && self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for PolyMatrix {}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix[{}]({}x{})", self.pres.name(), self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
            writeln!(f, "  [{}]", row.join(" | "))?;
        }
        Ok(())
    }
}

/// `(v • w)_{(i,j)} = v_i w_j`, with the left index most significant.
pub fn bullet(pres: &Arc<Presentation>, v: &[NCPoly], w: &[NCPoly]) -> Vec<NCPoly> {
    let pairs: Vec<(usize, usize)> = (0..v.len()).flat_map(|i| (0..w.len()).map(move |j| (i, j))).collect();
    pairs
        .into_par_iter()
        .map(|(i, j)| if v[i].is_zero() || w[j].is_zero() { NCPoly::zero(pres) } else { v[i].mul(&w[j]) })
        .collect()
}

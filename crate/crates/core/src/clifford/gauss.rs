use num_complex::Complex;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// `a + b i` with `a, b ∈ ℚ`.
pub type GaussianRational = Complex<Rational64>;

pub fn gaussian(re: i64, im: i64) -> GaussianRational {
    Complex::new(Rational64::from_integer(re), Rational64::from_integer(im))
}

/// Square matrix over the Gaussian rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianMatrix {
    dim: usize,
    data: Vec<GaussianRational>,
}

impl GaussianMatrix {
    pub fn zeros(dim: usize) -> Self {
        GaussianMatrix { dim, data: vec![GaussianRational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        GaussianMatrix { dim, data: rows.into_iter().flatten().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> GaussianRational {
        self.data[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        GaussianMatrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        GaussianMatrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: GaussianRational) -> Self {
        GaussianMatrix { dim: self.dim, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim);
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = o.data[k * d + j];
                    if !b.is_zero() {
                        out.data[i * d + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn kron(&self, o: &Self) -> Self {
        let (a, b) = (self.dim, o.dim);
        let d = a * b;
        let mut out = Self::zeros(d);
        for i in 0..a {
            for j in 0..a {
                let c = self.data[i * a + j];
                if c.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out.data[(i * b + k) * d + j * b + l] = c * o.data[k * b + l];
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }
}

//! The classical even sphere `S²ⁿ`: Clifford generators, the linear projection
//! `p = ½(1 + Σ xᵢγᵢ)` and the exact top Chern number.

mod coord;
mod gauss;

use std::ops::Mul;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

pub use coord::{sphere_projection, CoordPoly};
pub use gauss::{gaussian, GaussianMatrix, GaussianRational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("gamma index {i} out of range 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("pi exponent {0} left after cancellation")]
    ResidualTranscendental(i32),
    #[error("result {0} is not an integer")]
    NonInteger(String),
    #[error("{0}")]
    Domain(String),
}

fn pauli(j: usize) -> GaussianMatrix {
    let z = GaussianRational::zero();
    let one = GaussianRational::one();
    let i = gaussian(0, 1);
    let rows = match j {
        0 => [[one, z], [z, one]],
        1 => [[z, one], [one, z]],
        2 => [[z, -i], [i, z]],
        _ => [[one, z], [z, -one]],
    };
    GaussianMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

/// `γ_{2i+j} = σ₃^{⊗i} ⊗ σⱼ ⊗ 1^{⊗(n-i-1)}` and `γ_{2n+1} = σ₃^{⊗n}`, indexed from 1.
pub fn gamma(n: usize, i: usize) -> Result<GaussianMatrix, CliffordError> {
    let max = 2 * n + 1;
    if i == 0 || i > max {
        return Err(CliffordError::IndexOutOfRange { i, max });
    }
    let factors: Vec<usize> = if i == max {
        vec![3; n]
    } else {
        let (block, j) = ((i - 1) / 2, (i - 1) % 2 + 1);
        (0..n).map(|k| if k < block { 3 } else if k == block { j } else { 0 }).collect()
    };
    Ok(factors.iter().fold(GaussianMatrix::identity(1), |acc, &f| acc.kron(&pauli(f))))
}

pub fn gammas(n: usize) -> Vec<GaussianMatrix> {
    (1..=2 * n + 1).map(|i| gamma(n, i).expect("index in range")).collect()
}

/// `γᵢγⱼ + γⱼγᵢ = 2δᵢⱼ`, `γᵢ* = γᵢ` and `Tr γᵢ = 0` for all indices.
pub fn clifford_relations_hold(n: usize) -> bool {
    let g = gammas(n);
    let dim = 1usize << n;
    let two = GaussianMatrix::identity(dim).scale(gaussian(2, 0));
    let zero = GaussianMatrix::zeros(dim);
    g.iter().enumerate().all(|(a, ga)| {
        ga.adjoint() == *ga
            && ga.trace().is_zero()
            && g.iter().enumerate().all(|(b, gb)| {
                let anti = ga.mul(gb).add(&gb.mul(ga));
                anti == if a == b { two.clone() } else { zero.clone() }
            })
    })
}

fn ordered_product(g: &[GaussianMatrix], order: &[usize]) -> GaussianMatrix {
    let dim = g[0].dim();
    order.iter().fold(GaussianMatrix::identity(dim), |acc, &k| acc.mul(&g[k]))
}

/// `Tr(γ₁γ₂⋯γ_{2n+1})`.
pub fn gamma_product_trace(n: usize) -> GaussianRational {
    let g = gammas(n);
    let order: Vec<usize> = (0..g.len()).collect();
    ordered_product(&g, &order).trace()
}

fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    if m == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(m - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, m - 1);
            let moved = (perm.len() - pos) as i64;
            out.push((p, if moved % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

/// `Σ_σ sign(σ) Tr(γ_{σ(1)}⋯γ_{σ(2n+1)}) / (2n+1)!` by enumeration.
pub fn brute_force_form_trace(n: usize) -> Result<GaussianRational, CliffordError> {
    if n > 2 {
        return Err(CliffordError::Domain(format!("brute force limited to n <= 2, got {n}")));
    }
    let g = gammas(n);
    let perms = permutations(g.len());
    let count = perms.len() as i64;
    let total = perms.iter().fold(GaussianRational::zero(), |acc, (p, sign)| {
        acc + ordered_product(&g, p).trace() * gaussian(*sign, 0)
    });
    Ok(total / gaussian(count, 0))
}

/// `Tr(γ_{i₁}⋯γ_{i_m})` for a tuple with a repeated index.
pub fn repeated_index_trace(n: usize, indices: &[usize]) -> Result<GaussianRational, CliffordError> {
    let g = indices.iter().map(|&i| gamma(n, i)).collect::<Result<Vec<_>, _>>()?;
    let order: Vec<usize> = (0..g.len()).collect();
    Ok(ordered_product(&g, &order).trace())
}

/// A Gaussian rational times `πᵉ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PiMonomial {
    pub coeff: GaussianRational,
    pub pi_exp: i32,
}

impl PiMonomial {
    pub fn rational(coeff: GaussianRational) -> Self {
        PiMonomial { coeff, pi_exp: 0 }
    }

    pub fn pi_power(e: i32) -> Self {
        PiMonomial { coeff: GaussianRational::one(), pi_exp: e }
    }

    pub fn inv(self) -> Self {
        PiMonomial { coeff: GaussianRational::one() / self.coeff, pi_exp: -self.pi_exp }
    }

    pub fn pow(self, k: u32) -> Self {
        (0..k).fold(PiMonomial::rational(GaussianRational::one()), |acc, _| acc * self)
    }
}

impl Mul for PiMonomial {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        PiMonomial { coeff: self.coeff * o.coeff, pi_exp: self.pi_exp + o.pi_exp }
    }
}

fn factorial(m: usize) -> i64 {
    (1..=m as i64).product()
}

fn int(c: i64) -> PiMonomial {
    PiMonomial::rational(gaussian(c, 0))
}

/// Factors of `∫ chₙ(E)` in the order they are multiplied.
#[derive(Clone, Debug, Serialize)]
pub struct ChernChain {
    pub n: usize,
    pub gamma_trace: String,
    pub factors: Vec<(String, String)>,
    pub result: i64,
}

fn render_pi(m: &PiMonomial) -> String {
    let c = m.coeff;
    let base = if c.im.is_zero() {
        c.re.to_string()
    } else if c.re.is_zero() {
        format!("{}i", c.im)
    } else {
        format!("{} + {}i", c.re, c.im)
    };
    if m.pi_exp == 0 {
        base
    } else {
        format!("{base} pi^{}", m.pi_exp)
    }
}

/// `∫ chₙ(E)` assembled exactly, with `Vol(B^{2n+1})` replaced through
/// `(2n+1)!/(2^{2n+1} n!) = πⁿ/Vol(B^{2n+1})`.
pub fn chern_chain(n: usize) -> Result<ChernChain, CliffordError> {
    if n == 0 {
        return Err(CliffordError::Domain("n must be at least 1".into()));
    }
    let m = 2 * n + 1;
    let two_m = 1i64 << m;
    let trace = gamma_product_trace(n);
    let vol = PiMonomial::pi_power(n as i32) * int(two_m * factorial(n)) * int(factorial(m)).inv();
    let factors = [
        ("1/n!", int(factorial(n)).inv()),
        ("(i/2pi)^n", PiMonomial { coeff: gaussian(0, 1) / gaussian(2, 0), pi_exp: -1 }.pow(n as u32)),
        ("(2n+1)!/2^(2n+1)", int(factorial(m)) * int(two_m).inv()),
        ("Tr(gamma_1...gamma_(2n+1))", PiMonomial::rational(trace)),
        ("integral of dx_1...dx_(2n+1) over B^(2n+1)", vol),
    ];
    let total = factors.iter().fold(int(1), |acc, (_, f)| acc * *f);
    if total.pi_exp != 0 {
        return Err(CliffordError::ResidualTranscendental(total.pi_exp));
    }
    let c = total.coeff;
    if !c.im.is_zero() || !c.re.is_integer() {
        return Err(CliffordError::NonInteger(render_pi(&total)));
    }
    Ok(ChernChain {
        n,
        gamma_trace: render_pi(&PiMonomial::rational(trace)),
        factors: factors.iter().map(|(name, f)| (name.to_string(), render_pi(f))).collect(),
        result: c.re.to_integer(),
    })
}

/// The top Chern number of `p` on `S²ⁿ`.
pub fn chern_number(n: usize) -> Result<i64, CliffordError> {
    Ok(chern_chain(n)?.result)
}

/// `Tr p` at the north pole, after checking that `p(e_{2n+1})` is idempotent.
pub fn rank_check(n: usize) -> Result<i64, CliffordError> {
    let g = gammas(n);
    let dim = 1usize << n;
    let p = GaussianMatrix::identity(dim).add(&g[2 * n]).scale(GaussianRational::new(Ratio::new(1, 2), Ratio::zero()));
    if p.mul(&p) != p {
        return Err(CliffordError::Domain("p(north pole) is not idempotent".into()));
    }
    let tr = p.trace();
    if !tr.im.is_zero() || !tr.re.is_integer() {
        return Err(CliffordError::NonInteger(render_pi(&PiMonomial::rational(tr))));
    }
    Ok(tr.re.to_integer())
}

/// `p² = p` modulo `Σ xᵢ² = 1`, computed in the commuting coordinates.
pub fn symbolic_idempotence(n: usize) -> bool {
    let p = sphere_projection(n);
    p.mul(&p).reduce_sphere() == p.reduce_sphere()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalReport {
    pub n: usize,
    pub clifford_relations: bool,
    pub gamma_product_trace: String,
    pub chern_number: i64,
    pub brute_force_agrees: Option<bool>,
    pub rank: i64,
    pub idempotent: Option<bool>,
}

impl ClassicalReport {
    pub fn pass(&self) -> bool {
        let sign = if self.n.is_multiple_of(2) { 1 } else { -1 };
        self.clifford_relations
            && self.chern_number == sign
            && self.brute_force_agrees != Some(false)
            && self.rank == 1 << (self.n - 1)
            && self.idempotent != Some(false)
    }
}

/// Full classical suite for one `n ≥ 1`; the brute-force oracle runs for `n ≤ 2`
/// and the symbolic idempotence for `n ≤ 3`.
pub fn classical_report(n: usize) -> Result<ClassicalReport, CliffordError> {
    let trace = gamma_product_trace(n);
    let brute = if n <= 2 { Some(brute_force_form_trace(n)? == trace) } else { None };
    Ok(ClassicalReport {
        n,
        clifford_relations: clifford_relations_hold(n),
        gamma_product_trace: render_pi(&PiMonomial::rational(trace)),
        chern_number: chern_number(n)?,
        brute_force_agrees: brute,
        rank: rank_check(n)?,
        idempotent: (n <= 3).then(|| symbolic_idempotence(n)),
    })
}

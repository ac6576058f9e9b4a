//! Cyclotomic polynomials, normalized to be positive on `0 < q < 1`.
//!
//! `cyclo(1) = 1 - q` and `cyclo(d) = Φ_d(q)` for `d >= 2`. With this choice
//! `1 - q^m = prod_{d | m} cyclo(d)` holds exactly and every factor is a
//! positive function on the open unit interval.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use super::laurent::Laurent;

fn cache() -> &'static DashMap<u32, Arc<Laurent>> {
    static CACHE: OnceLock<DashMap<u32, Arc<Laurent>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// The classical (monic) cyclotomic polynomial Φ_d.
fn phi_monic(d: u32) -> Laurent {
    assert!(d >= 1);
    // q^d - 1 divided by every Φ_e with e | d, e < d.
    let mut p = Laurent::from_terms([(0, -1), (d as i32, 1)]);
    for e in 1..d {
        if d.is_multiple_of(e) {
            let f = phi_monic_cached(e);
            p = p.div_exact(&f).expect("cyclotomic recursion must divide exactly");
        }
    }
    p
}

fn phi_monic_cached(d: u32) -> Laurent {
    if d == 1 {
        return Laurent::from_terms([(0, -1), (1, 1)]);
    }
    cyclo(d).as_ref().clone()
}

/// Positive-normalized cyclotomic factor `P_d` (see module docs).
pub fn cyclo(d: u32) -> Arc<Laurent> {
    if let Some(p) = cache().get(&d) {
        return p.clone();
    }
    let p = if d == 1 { Laurent::from_terms([(0, 1), (1, -1)]) } else { phi_monic(d) };
    // Idempotent fill: a racing writer stores the same value.
    let p = Arc::new(p);
    cache().entry(d).or_insert(p).clone()
}

/// Euler's totient, the degree of `P_d`.
pub fn totient(d: u32) -> u32 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divisors of `m` in increasing order.
pub fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// Exponent map of `1 - q^m = prod_{d | m} P_d`.
pub fn one_minus_q_pow(m: u32) -> BTreeMap<u32, u32> {
    assert!(m >= 1);
    divisors(m).into_iter().map(|d| (d, 1)).collect()
}

/// Expands `prod_d P_d^{e_d}`.
pub fn expand(factors: &BTreeMap<u32, u32>) -> Laurent {
    let mut p = Laurent::one();
    for (d, e) in factors {
        for _ in 0..*e {
            p = p.mul(&cyclo(*d));
        }
    }
    p
}

/// A complete factorization `c * q^k * prod_d P_d^{e_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    pub constant: i128,
    pub q_power: i32,
    pub factors: BTreeMap<u32, u32>,
}

/// Factors a nonzero Laurent polynomial completely into positive cyclotomic
/// factors, a power of `q` and an integer constant. Returns `None` if some
/// irreducible factor is not cyclotomic.
pub fn factor(p: &Laurent) -> Option<CycloFactorization> {
    if p.is_zero() {
        return None;
    }
    let q_power = p.low();
    let mut rest = p.shift(-q_power);
    let mut factors = BTreeMap::new();
    let mut d = 1u32;
    while rest.high() > 0 {
        let deg = rest.high() as u32;
        // totient(d) >= sqrt(d / 2), so no factor of degree <= deg exists past this bound.
        if d > 2 * deg * deg + 2 {
            return None;
        }
        if totient(d) <= deg {
            let f = cyclo(d);
            while let Some(quot) = rest.div_exact(&f) {
                rest = quot;
                *factors.entry(d).or_insert(0) += 1;
            }
        }
        d += 1;
    }
    let constant = rest.as_constant().expect("degree-0 remainder is a constant");
    Some(CycloFactorization { constant, q_power, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclo(1), Laurent::from_terms([(0, 1), (1, -1)]));
        assert_eq!(*cyclo(2), Laurent::from_terms([(0, 1), (1, 1)]));
        assert_eq!(*cyclo(4), Laurent::from_terms([(0, 1), (2, 1)]));
        assert_eq!(*cyclo(3), Laurent::from_terms([(0, 1), (1, 1), (2, 1)]));
        assert_eq!(*cyclo(6), Laurent::from_terms([(0, 1), (1, -1), (2, 1)]));
        assert_eq!(cyclo(12).high() as u32, totient(12));
    }

    #[test]
    fn one_minus_q4_factors_into_phi1_phi2_phi4() {
        let f = one_minus_q_pow(4);
        assert_eq!(f.keys().copied().collect::<Vec<_>>(), vec![1, 2, 4]);
        // Multiply the factors back and compare.
        assert_eq!(expand(&f), Laurent::from_terms([(0, 1), (4, -1)]));
    }

    #[test]
    fn factor_roundtrip() {
        for m in 1..=16 {
            let p = Laurent::from_terms([(0, 1), (m, -1)]).scale(-3).shift(5);
            let fac = factor(&p).unwrap();
            assert_eq!(fac.constant, -3);
            assert_eq!(fac.q_power, 5);
            assert_eq!(fac.factors, one_minus_q_pow(m as u32));
        }
        // 1 + q + q^3 is not a product of cyclotomics.
        assert!(factor(&Laurent::from_terms([(0, 1), (1, 1), (3, 1)])).is_none());
    }
}

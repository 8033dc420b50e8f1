//! Integer machinery: factorization, extended gcd, multi-term Bezout
//! certificates.

use alloc::vec::Vec;

use crate::error::GroupError;

/// Ordered prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub value: u64,
    /// (prime, exponent) with primes strictly increasing; empty for 1.
    pub factors: Vec<(u64, u32)>,
}

/// Integers λᵢ with Σ λᵢqᵢ = gcd(q₁,…,q_k), witnessing the gcd
/// constructively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub inputs: Vec<u64>,
    pub gcd: u64,
    pub coefficients: Vec<i64>,
}

impl BezoutCertificate {
    /// Re-checks Σ λᵢqᵢ = gcd and divisibility from scratch.
    pub fn verify(&self) -> bool {
        let sum: i128 = self
            .inputs
            .iter()
            .zip(&self.coefficients)
            .map(|(&q, &l)| q as i128 * l as i128)
            .sum();
        sum == self.gcd as i128 && self.inputs.iter().all(|&q| q % self.gcd == 0)
    }
}

/// Complete factorization by trial division. Inputs are bounded by the
/// group-order caps, so nothing faster is needed.
pub fn factorize(r: u64) -> PrimeFactorization {
    assert!(r >= 1, "factorize needs a positive integer");
    let mut factors = Vec::new();
    let mut rest = r;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut a = 0u32;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            factors.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    PrimeFactorization { value: r, factors }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && factorize(p).factors == [(p, 1)]
}

/// Extended Euclid: returns (g, u, v) with u·a + v·b = g = gcd(a, b) > 0.
pub fn ext_gcd(a: i64, b: i64) -> Result<(u64, i64, i64), GroupError> {
    if a == 0 && b == 0 {
        return Err(GroupError::BothZero);
    }
    // Invariants: r0 = u0·a + v0·b, r1 = u1·a + v1·b.
    let (mut r0, mut u0, mut v0) = (a, 1i64, 0i64);
    let (mut r1, mut u1, mut v1) = (b, 0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (u0, u1) = (u1, u0 - q * u1);
        (v0, v1) = (v1, v0 - q * v1);
    }
    if r0 < 0 {
        (r0, u0, v0) = (-r0, -u0, -v0);
    }
    Ok((r0 as u64, u0, v0))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn coprime(m: u64, n: u64) -> bool {
    gcd(m, n) == 1
}

/// Bezout coefficients for a list of positive integers, by folding
/// `ext_gcd` left to right and back-substituting.
///
/// The coefficients are whatever the fold produces; any valid certificate
/// is acceptable, but the result is deterministic.
pub fn multi_bezout(q: &[u64]) -> BezoutCertificate {
    assert!(!q.is_empty(), "multi_bezout needs a nonempty list");
    assert!(q.iter().all(|&x| x >= 1));
    let mut g = q[0];
    let mut coeffs: Vec<i64> = alloc::vec![1];
    for &next in &q[1..] {
        let (g2, u, v) = ext_gcd(g as i64, next as i64).expect("inputs positive");
        for c in coeffs.iter_mut() {
            *c *= u;
        }
        coeffs.push(v);
        g = g2;
    }
    let cert = BezoutCertificate { inputs: q.to_vec(), gcd: g, coefficients: coeffs };
    debug_assert!(cert.verify());
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(12).factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(1).factors, vec![]);
        let f = factorize(360);
        assert_eq!(f.factors, vec![(2, 3), (3, 2), (5, 1)]);
        let back: u64 = f.factors.iter().map(|&(p, a)| p.pow(a)).product();
        assert_eq!(back, 360);
    }

    #[test]
    fn ext_gcd_certificates() {
        assert_eq!(ext_gcd(3, 4).unwrap(), (1, -1, 1));
        let (g, u, v) = ext_gcd(7, 1).unwrap();
        assert_eq!(g, 1);
        assert_eq!(u * 7 + v, 1);
        let (g, u, v) = ext_gcd(6, 10).unwrap();
        assert_eq!(g, 2);
        assert_eq!(u * 6 + v * 10, 2);
        assert_eq!(ext_gcd(0, 0), Err(GroupError::BothZero));
    }

    #[test]
    fn multi_bezout_certificates() {
        let c = multi_bezout(&[3, 4]);
        assert_eq!(c.gcd, 1);
        assert_eq!(c.coefficients, vec![-1, 1]);
        let c = multi_bezout(&[6, 10, 15]);
        assert_eq!(c.gcd, 1);
        assert!(c.verify());
        let c = multi_bezout(&[5]);
        assert_eq!((c.gcd, c.coefficients.clone()), (5, vec![1]));
    }

    #[test]
    fn coprimality() {
        assert!(coprime(2, 3));
        assert!(coprime(1, 99));
        assert!(!coprime(6, 10));
    }

    #[test]
    fn cofactors_of_multi_prime_orders_are_coprime() {
        // q_i = r / p_i^{a_i} for r with at least two prime factors.
        for r in 2..=5040u64 {
            let f = factorize(r);
            if f.factors.len() < 2 {
                continue;
            }
            let qs: Vec<u64> = f.factors.iter().map(|&(p, a)| r / p.pow(a)).collect();
            let c = multi_bezout(&qs);
            assert_eq!(c.gcd, 1, "r = {r}");
            assert!(c.verify());
        }
    }
}

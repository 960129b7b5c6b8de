//! Arithmetic in the prime field `F_p` and its multiplicative group:
//! canonical residues, square-and-multiply exponentiation, extended-Euclid
//! inverses and primitive-element tests.
//!
//! Values are `u64` residues with `u128` intermediates, so moduli up to
//! 64 bits never overflow. Nothing here is constant-time; this crate
//! targets desk-scale parameters, not production key sizes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// Witness set that makes Miller-Rabin deterministic for all 64-bit inputs.
const MILLER_RABIN_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// Deterministic Miller-Rabin primality test, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &MILLER_RABIN_WITNESSES {
        let mut x = mod_pow(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime modulus `p >= 3`, verified at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `base^exponent mod modulus` by square-and-multiply; exponent 0 gives 1.
pub fn mod_pow(base: u64, mut exponent: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut base = base % modulus;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = mul_mod(result, base, modulus);
        }
        exponent >>= 1;
        base = mul_mod(base, base, modulus);
    }
    result
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128) {
    // returns (g, x) with a*x = g (mod b)
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r, old_s)
}

pub(crate) fn inverse_mod_u64(a: u64, m: u64) -> Result<u64, Error> {
    if m == 1 {
        return Ok(0);
    }
    let a = (a % m) as i128;
    let (g, x) = extended_gcd(a, m as i128);
    if g != 1 {
        return Err(Error::NotInvertible {
            value: a as u64,
            modulus: m,
        });
    }
    Ok(x.rem_euclid(m as i128) as u64)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
/// `a` may be negative or exceed `m`; it is reduced first.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64, Error> {
    inverse_mod_u64((a as i128).rem_euclid(m as i128) as u64, m)
}

/// Distinct prime factors by trial division, smallest first.
pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d as u128 * d as u128 <= n as u128 {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// An element of `F_p`, stored as its canonical residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    pub fn new(value: u64, modulus: PrimeModulus) -> Self {
        FieldElement {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus.get()
    }

    /// `self^exponent` by square-and-multiply.
    pub fn pow(self, exponent: u64) -> Self {
        FieldElement {
            value: mod_pow(self.value, exponent, self.modulus.get()),
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Result<Self, Error> {
        let value = inverse_mod_u64(self.value, self.modulus.get())?;
        Ok(FieldElement {
            value,
            modulus: self.modulus,
        })
    }

    /// True iff this element generates the whole multiplicative group of `F_p`.
    ///
    /// Factors `p - 1` by trial division and checks
    /// `self^((p-1)/q) != 1` for every prime factor `q`.
    pub fn is_primitive(self) -> bool {
        if self.value == 0 {
            return false;
        }
        let p = self.modulus.get();
        distinct_prime_factors(p - 1)
            .into_iter()
            .all(|q| mod_pow(self.value, (p - 1) / q, p) != 1)
    }
}

/// Smallest primitive element of `F_p` (always >= 2).
pub fn find_primitive_element(p: PrimeModulus) -> FieldElement {
    for beta in 2..p.get() {
        let candidate = FieldElement::new(beta, p);
        if candidate.is_primitive() {
            return candidate;
        }
    }
    unreachable!("every prime field has a primitive element");
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        let p = self.modulus.get();
        FieldElement {
            value: ((self.value as u128 + rhs.value as u128) % p as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        let p = self.modulus.get();
        FieldElement {
            value: ((self.value as u128 + (p - rhs.value) as u128) % p as u128) as u64,
            modulus: self.modulus,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        FieldElement {
            value: mul_mod(self.value, rhs.value, self.modulus.get()),
            modulus: self.modulus,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.modulus.get();
        FieldElement {
            value: (p - self.value) % p,
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: u64, p: u64) -> FieldElement {
        FieldElement::new(v, PrimeModulus::new(p).unwrap())
    }

    #[test]
    fn prime_modulus_rejects_composites_and_small_values() {
        assert!(PrimeModulus::new(47).is_ok());
        assert!(matches!(PrimeModulus::new(46), Err(Error::NotPrime(46))));
        assert!(matches!(PrimeModulus::new(2), Err(Error::NotPrime(2))));
        assert!(matches!(PrimeModulus::new(0), Err(Error::NotPrime(0))));
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division_below_10000() {
        let naive = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..10_000 {
            assert_eq!(is_prime(n), naive(n), "n = {n}");
        }
    }

    #[test]
    fn mod_pow_key_exchange_values() {
        assert_eq!(mod_pow(31, 14, 47), 37);
        assert_eq!(mod_pow(31, 21, 47), 38);
        assert_eq!(mod_pow(37, 21, 47), 8);
        assert_eq!(mod_pow(38, 14, 47), 8);
    }

    #[test]
    fn mod_pow_zero_exponent_is_one() {
        for x in [1u64, 2, 17, 46] {
            assert_eq!(mod_pow(x, 0, 47), 1);
        }
    }

    #[test]
    fn mod_pow_matches_naive_products() {
        let p = 101;
        for base in [2u64, 3, 57, 99] {
            let mut acc = 1u64;
            for e in 0..=64u64 {
                assert_eq!(mod_pow(base, e, p), acc, "base {base} exp {e}");
                acc = acc * base % p;
            }
        }
    }

    #[test]
    fn mod_pow_exponent_additivity() {
        let p = 1009;
        for a in [2u64, 5, 700] {
            for e1 in [0u64, 1, 13, 50] {
                for e2 in [0u64, 3, 29, 64] {
                    assert_eq!(
                        mod_pow(a, e1 + e2, p),
                        mul_mod(mod_pow(a, e1, p), mod_pow(a, e2, p), p)
                    );
                }
            }
        }
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(1, 47).unwrap(), 1);
        assert_eq!(mod_inverse(2, 47).unwrap(), 24);
        assert_eq!(2 * 24 % 47, 1);
        assert!(matches!(
            mod_inverse(4, 8),
            Err(Error::NotInvertible {
                value: 4,
                modulus: 8
            })
        ));
    }

    #[test]
    fn mod_inverse_handles_negative_and_large_inputs() {
        assert_eq!(mod_inverse(-2, 47).unwrap(), 47 - 24);
        assert_eq!(mod_inverse(49, 47).unwrap(), 24);
        for a in 1..47i64 {
            let inv = mod_inverse(a, 47).unwrap();
            assert_eq!(a as u64 * inv % 47, 1);
        }
    }

    #[test]
    fn primitive_element_31_mod_47() {
        assert!(fe(31, 47).is_primitive());
        assert!(!fe(1, 47).is_primitive());
        assert!(!fe(0, 47).is_primitive());
    }

    #[test]
    fn primitive_count_mod_47_is_phi_46() {
        // brute-force multiplicative order of every residue
        let order = |x: u64| {
            let mut v = x;
            let mut o = 1;
            while v != 1 {
                v = v * x % 47;
                o += 1;
            }
            o
        };
        let brute: Vec<u64> = (1..47).filter(|&x| order(x) == 46).collect();
        assert_eq!(brute.len(), 22);
        for x in 1..47 {
            assert_eq!(fe(x, 47).is_primitive(), brute.contains(&x), "x = {x}");
        }
    }

    #[test]
    fn primitive_element_powers_cover_the_group() {
        for p in [5u64, 7, 11, 47, 97] {
            let pm = PrimeModulus::new(p).unwrap();
            let beta = find_primitive_element(pm);
            let mut seen: Vec<u64> = (0..p - 1).map(|i| beta.pow(i).value()).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len() as u64, p - 1);
        }
    }

    #[test]
    fn smallest_primitive_elements() {
        assert_eq!(
            find_primitive_element(PrimeModulus::new(3).unwrap()).value(),
            2
        );
        assert_eq!(
            find_primitive_element(PrimeModulus::new(7).unwrap()).value(),
            3
        );
        let beta = find_primitive_element(PrimeModulus::new(47).unwrap());
        assert!(beta.is_primitive());
        for smaller in 2..beta.value() {
            assert!(!fe(smaller, 47).is_primitive());
        }
    }

    #[test]
    fn field_element_ops_are_canonical() {
        let p = PrimeModulus::new(47).unwrap();
        let a = FieldElement::new(40, p);
        let b = FieldElement::new(30, p);
        assert_eq!((a + b).value(), 23);
        assert_eq!((a - b).value(), 10);
        assert_eq!((b - a).value(), 37);
        assert_eq!((a * b).value(), 40 * 30 % 47);
        assert_eq!((-a).value(), 7);
        assert_eq!((a * a.inverse().unwrap()).value(), 1);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(fe(0, 47).inverse().is_err());
    }
}

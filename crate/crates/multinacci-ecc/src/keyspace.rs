//! Key-space analysis: the exact order of `GL_n(F_p)` and the
//! brute-force probability `1 / |GL_n(F_p)|` of guessing a key matrix,
//! with scientific-notation renderings computed by exact digit
//! extraction (no floating point anywhere, so the printed digits are
//! trustworthy down to the last place).
//!
//! The probability model is deliberately generous to the attacker's
//! target: it counts all invertible matrices, although the matrices
//! actually used as keys form a far smaller one-parameter family. The
//! figures here bound that family's size from above; the true count is
//! not computed.

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::error::Error;
use crate::field::is_prime;

/// `|GL_n(F_p)| = (p^n - p^(n-1)) (p^n - p^(n-2)) ... (p^n - 1)`,
/// computed exactly.
pub fn gl_order(n: usize, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let pn = p.pow(n as u32);
    let mut out = BigUint::from(1u32);
    for i in 0..n {
        out *= &pn - p.pow(i as u32);
    }
    out
}

/// `1 / |GL_n(F_p)|` as an exact rational.
pub fn retrieval_probability(n: usize, p: u64) -> BigRational {
    BigRational::new(1.into(), gl_order(n, p).into())
}

/// One `(p, n)` cell of the analysis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KeyspaceReport {
    pub p: u64,
    pub n: usize,
    pub gl_order: BigUint,
}

impl KeyspaceReport {
    pub fn new(p: u64, n: usize) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(KeyspaceReport {
            p,
            n,
            gl_order: gl_order(n, p),
        })
    }

    /// Exact `1 / gl_order`.
    pub fn probability(&self) -> BigRational {
        BigRational::new(1.into(), self.gl_order.clone().into())
    }

    /// Key-space size with `sig` significant digits, truncated.
    pub fn gl_order_sci(&self, sig: usize) -> String {
        sci_truncated(&self.gl_order, sig)
    }

    /// Probability with `sig` significant digits, truncated.
    pub fn probability_sci(&self, sig: usize) -> String {
        reciprocal_sci_truncated(&self.gl_order, sig)
    }

    /// Probability rendered with 5 significant digits.
    pub fn probability_decimal(&self) -> String {
        self.probability_sci(5)
    }
}

/// Reports for every `(p, n)` in the cartesian product, ordered by `(p, n)`.
pub fn build_tables(primes: &[u64], dims: &[usize]) -> Result<Vec<KeyspaceReport>, Error> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let mut dims = dims.to_vec();
    dims.sort_unstable();
    dims.dedup();
    let mut out = Vec::with_capacity(primes.len() * dims.len());
    for &p in &primes {
        for &n in &dims {
            out.push(KeyspaceReport::new(p, n)?);
        }
    }
    Ok(out)
}

fn split_mantissa(digits: &str, sig: usize) -> String {
    let mantissa: String = digits.chars().take(sig).collect();
    let padded = format!("{mantissa:0<sig$}");
    if sig == 1 {
        padded
    } else {
        format!("{}.{}", &padded[..1], &padded[1..])
    }
}

/// `value` in scientific notation, mantissa truncated to `sig` digits
/// (e.g. `1.3989e13`).
pub fn sci_truncated(value: &BigUint, sig: usize) -> String {
    assert!(
        sig >= 1 && *value > BigUint::from(0u32),
        "need a positive value"
    );
    let digits = value.to_string();
    format!("{}e{}", split_mantissa(&digits, sig), digits.len() - 1)
}

/// `value` in scientific notation, mantissa rounded half-up to `sig` digits.
pub fn sci_rounded(value: &BigUint, sig: usize) -> String {
    assert!(
        sig >= 1 && *value > BigUint::from(0u32),
        "need a positive value"
    );
    let digits = value.to_string();
    let mut exponent = digits.len() as i64 - 1;
    let mut mantissa: u128 = if digits.len() <= sig {
        digits.parse::<u128>().unwrap() * 10u128.pow((sig - digits.len()) as u32)
    } else {
        let head: u128 = digits[..sig].parse().unwrap();
        let next = digits.as_bytes()[sig] - b'0';
        head + u128::from(next >= 5)
    };
    if mantissa >= 10u128.pow(sig as u32) {
        mantissa /= 10;
        exponent += 1;
    }
    format!(
        "{}e{}",
        split_mantissa(&mantissa.to_string(), sig),
        exponent
    )
}

fn reciprocal_parts(denom: &BigUint, sig: usize, round: bool) -> (BigUint, i64) {
    // 1/denom = mantissa * 10^exponent with sig mantissa digits
    let d = denom.to_string().len() as i64; // 10^(d-1) <= denom < 10^d
    let scale = BigUint::from(10u32).pow((d as usize + sig - 1) as u32);
    let mut q = if round {
        // round half up: floor((2*scale + denom) / (2*denom))
        (BigUint::from(2u32) * &scale + denom) / (BigUint::from(2u32) * denom)
    } else {
        &scale / denom
    };
    let mut exponent = -d;
    let bound = BigUint::from(10u32).pow(sig as u32);
    if q >= bound {
        // happens when denom is an exact power of ten or rounding carries over
        q /= BigUint::from(10u32);
        exponent += 1;
    }
    (q, exponent)
}

/// `1/denom` in scientific notation, mantissa truncated to `sig` digits
/// (e.g. `9.13e-16`).
pub fn reciprocal_sci_truncated(denom: &BigUint, sig: usize) -> String {
    assert!(
        sig >= 1 && *denom > BigUint::from(0u32),
        "need a positive denominator"
    );
    let (q, exponent) = reciprocal_parts(denom, sig, false);
    format!("{}e{}", split_mantissa(&q.to_string(), sig), exponent)
}

/// `1/denom` in scientific notation, mantissa rounded half-up.
pub fn reciprocal_sci_rounded(denom: &BigUint, sig: usize) -> String {
    assert!(
        sig >= 1 && *denom > BigUint::from(0u32),
        "need a positive denominator"
    );
    let (q, exponent) = reciprocal_parts(denom, sig, true);
    format!("{}e{}", split_mantissa(&q.to_string(), sig), exponent)
}

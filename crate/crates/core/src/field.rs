//! Prime-field scalars for the mock pairing backend.
//!
//! Moduli are primes below 2^64; products are reduced through `u128` so no
//! intermediate ever overflows.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};

pub(crate) fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 + b as u128) % q as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, q);
        }
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
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

/// An element of Z_q. Arithmetic between scalars of different moduli is a
/// programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    q: u64,
    value: u64,
}

impl Scalar {
    /// Reduces `value` mod `q`.
    pub fn new(q: u64, value: u64) -> Self {
        Self {
            q,
            value: value % q,
        }
    }

    pub fn zero(q: u64) -> Self {
        Self::new(q, 0)
    }

    pub fn one(q: u64) -> Self {
        Self::new(q, 1)
    }

    /// Uniform draw from Z*_q.
    pub fn random_nonzero<R: Rng + ?Sized>(q: u64, rng: &mut R) -> Self {
        Self::new(q, rng.gen_range(1..q))
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Self::new(self.q, pow_mod(self.value, self.q - 2, self.q)))
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self::new(self.q, pow_mod(self.value, exp, self.q))
    }

    /// `<suite-id>:S:<decimal>`
    pub fn encode(&self) -> String {
        format!("mock{}:S:{}", self.q, self.value)
    }

    pub fn decode(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let (Some(suite), Some(tag), Some(value), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(Error::MalformedEncoding(format!(
                "`{s}` is not suite:S:value"
            )));
        };
        if tag != "S" {
            return Err(Error::MalformedEncoding(format!("`{s}` is not a scalar")));
        }
        let q = crate::pairing::parse_suite_id(suite)
            .map_err(|e| Error::MalformedEncoding(e.to_string()))?;
        let value = parse_canonical_decimal(value)?;
        if value >= q {
            return Err(Error::MalformedEncoding(format!(
                "scalar {value} is not below {q}"
            )));
        }
        Ok(Self { q, value })
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.q, other.q, "scalar moduli differ");
    }
}

/// Decimal without sign or leading zeros, so every value has one spelling.
pub(crate) fn parse_canonical_decimal(s: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return Err(Error::MalformedEncoding(format!(
            "`{s}` is not a canonical decimal"
        )));
    }
    s.parse()
        .map_err(|_| Error::MalformedEncoding(format!("`{s}` is out of range")))
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.check(&rhs);
        Scalar::new(self.q, add_mod(self.value, rhs.value, self.q))
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(self.q, (self.q - self.value) % self.q)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.check(&rhs);
        Scalar::new(self.q, mul_mod(self.value, rhs.value, self.q))
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.encode())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Scalar::decode(&s).map_err(serde::de::Error::custom)
    }
}

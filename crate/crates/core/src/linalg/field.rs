use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::FieldSpecError;

/// The default prime, 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Half-width of the integer range random rational coefficients are drawn from.
const RATIONAL_SAMPLE_RANGE: i64 = 1 << 8;

/// Exact scalar domain selected at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind", content = "p")]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, FieldSpecError> {
        if !is_prime(p) {
            return Err(FieldSpecError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    /// Whether random draws from this field emulate a generic choice.
    /// Prime fields smaller than the default prime `2^31 - 1` are too small.
    pub fn is_large(&self) -> bool {
        match self {
            FieldSpec::Prime(p) => *p >= DEFAULT_PRIME,
            FieldSpec::Rationals => true,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "p:{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldSpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("p:")
            .or_else(|| s.strip_prefix("P:"))
            .ok_or_else(|| FieldSpecError::Syntax(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| FieldSpecError::Syntax(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut k = 3u64;
    while k.saturating_mul(k) <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}

/// Arithmetic context for an exact field. Elements carry no reference to the
/// field; every operation goes through the context.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// A uniformly drawn element, possibly zero.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// `a - c * b`, the row-operation kernel.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }

    /// Draws until a nonzero element comes up.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// The prime field F_p with elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldSpecError> {
        if !is_prime(p) {
            return Err(FieldSpecError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn reduce_wide(&self, x: u128) -> u64 {
        (x % self.p as u128) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    #[inline]
    fn zero(&self) -> u64 {
        0
    }

    #[inline]
    fn one(&self) -> u64 {
        1 % self.p
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        if s >= self.p as u128 {
            (s - self.p as u128) as u64
        } else {
            s as u64
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            (self.p - b) + a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if self.p <= u32::MAX as u64 {
            (a * b) % self.p
        } else {
            self.reduce_wide(*a as u128 * *b as u128)
        }
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on signed wide integers
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        t0.rem_euclid(self.p as i128) as u64
    }

    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// The rationals, backed by arbitrary-precision fractions in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_RANGE..=RATIONAL_SAMPLE_RANGE))
    }

    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        if c.is_zero() || b.is_zero() {
            return a.clone();
        }
        if c.is_integer() && b.is_integer() && a.is_integer() {
            return BigRational::from_integer(a.numer() - c.numer() * b.numer());
        }
        a - c * b
    }
}

/// Signed small-integer view used when printing matrices in tests.
pub fn rational_to_string(a: &BigRational) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom().abs())
    }
}

/// Runs `$body` with `$f` bound to the concrete field selected by `$spec`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {{
        match $spec {
            $crate::linalg::FieldSpec::Prime(p) => {
                let $f = $crate::linalg::PrimeField::new(p).expect("validated prime");
                $body
            }
            $crate::linalg::FieldSpec::Rationals => {
                let $f = $crate::linalg::Rationals;
                $body
            }
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parse_field_specs() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "p:2147483647".parse::<FieldSpec>().unwrap(),
            FieldSpec::Prime(DEFAULT_PRIME)
        );
        assert_eq!("p:2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert!("p:15".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "p:7");
    }

    #[test]
    fn prime_field_inverse_and_wrapping() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        for a in [1u64, 2, 12345, DEFAULT_PRIME - 1] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), DEFAULT_PRIME - 1);
        assert_eq!(f.add(&(DEFAULT_PRIME - 1), &1), 0);
        assert_eq!(f.sub(&0, &1), DEFAULT_PRIME - 1);
    }

    #[test]
    fn wide_prime_multiplication() {
        // 2^61 - 1 needs 128-bit products
        let p = (1u64 << 61) - 1;
        let f = PrimeField::new(p).unwrap();
        let a = p - 2;
        assert_eq!(f.mul(&a, &a), 4);
        assert_eq!(f.mul(&a, &f.inv(&a)), 1);
    }

    #[test]
    fn zero_draws_are_redrawn() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            assert_eq!(f.random_nonzero(&mut rng), 1);
        }
    }
}

//! The coefficient-ring abstraction shared by every evaluator.
//!
//! All engines in this crate are generic over a commutative ring with
//! unity. Instantiations used in practice: [`BigIntVal`] (integer
//! matrices), [`crate::algebra::MultiPoly`] (symbolic-entry matrices),
//! and the polynomial rings built on top of either.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::hash::Hash;

/// Exact arbitrary-precision integer scalar (sign + magnitude).
pub type BigIntVal = BigInt;

/// A commutative ring with unity, element-centric.
///
/// `zero()`/`one()` construct ring-neutral constants; for rings whose
/// identity carries extra context (e.g. an indeterminate set), constants
/// are context-free and unify with any instance of the ring on use.
/// Binary operations require both operands to live in the same ring;
/// engines uphold this by validating inputs at their boundaries.
pub trait Ring: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Exponentiation by squaring.
    fn pow(&self, exp: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Embeds an arbitrary-precision integer into the ring.
    fn from_bigint(v: &BigIntVal) -> Self {
        // Default: repeated doubling on top of from_int digits would be
        // wasteful; decompose via i64 chunks in base 2^62.
        if let Some(small) = to_i64(v) {
            return Self::from_int(small);
        }
        let base = Self::from_int(1i64 << 62);
        let mut acc = Self::zero();
        let mut digits = Vec::new();
        let mut rest = v.abs();
        let modulus = BigInt::from(1i64 << 62);
        while !Zero::is_zero(&rest) {
            let digit = &rest % &modulus;
            digits.push(to_i64(&digit).expect("digit fits"));
            rest /= &modulus;
        }
        for &d in digits.iter().rev() {
            acc = acc.mul(&base).add(&Self::from_int(d));
        }
        if v.is_negative() {
            acc = acc.neg();
        }
        acc
    }
}

fn to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

impl Ring for BigIntVal {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn from_bigint(v: &BigIntVal) -> Self {
        v.clone()
    }
}

/// k! as an exact integer.
pub fn factorial(k: u64) -> BigIntVal {
    let mut acc: BigIntVal = One::one();
    for i in 2..=k {
        acc *= BigIntVal::from(i);
    }
    acc
}

/// Binomial coefficient with the usual vanishing conventions:
/// `binomial(a, b) = 0` when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigIntVal {
    if b > a {
        return Zero::zero();
    }
    num_integer::binomial(BigIntVal::from(a), BigIntVal::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigIntVal::from(1));
        assert_eq!(factorial(5), BigIntVal::from(120));
        assert_eq!(factorial(10), BigIntVal::from(3628800));
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigIntVal::from(10));
        assert_eq!(binomial(3, 0), BigIntVal::from(1));
        assert_eq!(binomial(2, 5), BigIntVal::from(0));
    }

    #[test]
    fn pow_matches_naive() {
        let three = BigIntVal::from(3);
        assert_eq!(Ring::pow(&three, 0), BigIntVal::from(1));
        assert_eq!(Ring::pow(&three, 7), BigIntVal::from(2187));
    }

    #[test]
    fn from_bigint_roundtrips_large_values() {
        let huge: BigIntVal = BigIntVal::from(7).pow(100u32);
        assert_eq!(<BigIntVal as Ring>::from_bigint(&huge), huge);
        let neg = -&huge;
        assert_eq!(<BigIntVal as Ring>::from_bigint(&neg), neg);
    }
}

//! Dense univariate polynomials with exact coefficients.
//!
//! [`DensePoly<R>`] is the workhorse for everything univariate: `ZPoly`
//! (integer coefficients in the cycle-weight variable z) and, through
//! generic instantiation, z-polynomials over symbolic coefficient rings.
//! Coefficients are stored by ascending power with trailing zeros
//! trimmed, so structural equality is canonical equality.

use super::ring::{BigIntVal, Ring};
use std::fmt;

/// Dense univariate polynomial over a ring, canonical form.
///
/// The zero polynomial is the empty coefficient vector; `degree()` then
/// returns `None` as the distinguished sentinel.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DensePoly<R: Ring> {
    coeffs: Vec<R>,
}

/// Exact integer polynomial in z.
pub type ZPoly = DensePoly<BigIntVal>;

impl<R: Ring> DensePoly<R> {
    /// Builds from ascending-power coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut p = DensePoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `v` (the ring variable itself).
    pub fn var() -> Self {
        Self::from_coeffs(vec![R::zero(), R::one()])
    }

    /// Monomial c·v^k.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Ascending-power coefficient slice (canonical: no trailing zeros).
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of v^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> DensePoly<S> {
        DensePoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scalar_mul(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Full evaluation at a point of the coefficient ring (Horner).
    pub fn evaluate(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Sum of all coefficients, i.e. evaluation at 1.
    pub fn eval_at_one(&self) -> R {
        let mut acc = R::zero();
        for c in &self.coeffs {
            acc = acc.add(c);
        }
        acc
    }
}

impl<R: Ring> Ring for DensePoly<R> {
    fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_int(v: i64) -> Self {
        Self::constant(R::from_int(v))
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(coeffs)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(coeffs)
    }
    fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_bigint(v: &BigIntVal) -> Self {
        Self::constant(R::from_bigint(v))
    }
}

/// Rising factorial ∏_{i=0}^{k−1} (v + c + i) over an arbitrary ring,
/// with `v` given as a ring element. Returns 1 for k = 0.
pub fn rising_factorial_in<R: Ring>(v: &R, c: i64, k: usize) -> R {
    let mut acc = R::one();
    for i in 0..k {
        acc = acc.mul(&v.add(&R::from_int(c + i as i64)));
    }
    acc
}

/// Rising factorial (z + c)(z + c + 1)⋯(z + c + k − 1) as a `ZPoly`.
/// Returns the constant 1 when k = 0.
pub fn rising_factorial(c: i64, k: usize) -> ZPoly {
    rising_factorial_in(&ZPoly::var(), c, k)
}

/// Renders a univariate polynomial in human-readable form, descending
/// powers, e.g. `z^2 + 7*z + 12` or `0`.
pub fn render_univariate(p: &ZPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigIntVal::from(0);
        let mag = if neg { c.neg() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !Ring::is_one(&mag) || k == 0;
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if k > 0 {
            if show_coeff {
                out.push('*');
            }
            out.push_str(var);
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    out
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_univariate(self, "z"))
    }
}

/// Machine format: ascending-power list of decimal strings.
pub fn zpoly_to_strings(p: &ZPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Parses the machine format back; inverse of [`zpoly_to_strings`].
pub fn zpoly_from_strings(items: &[String]) -> crate::error::Result<ZPoly> {
    let mut coeffs = Vec::with_capacity(items.len());
    for s in items {
        let v: BigIntVal = s
            .parse()
            .map_err(|_| crate::error::Error::input(format!("bad integer literal: {s:?}")))?;
        coeffs.push(v);
    }
    Ok(ZPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> ZPoly {
        ZPoly::var()
    }

    fn c(v: i64) -> ZPoly {
        ZPoly::from_int(v)
    }

    #[test]
    fn binomial_square() {
        // (z+1)·(z+1) = z² + 2z + 1
        let p = z().add(&c(1));
        let sq = p.mul(&p);
        assert_eq!(
            sq,
            ZPoly::from_coeffs(vec![1.into(), 2.into(), 1.into()])
        );
    }

    #[test]
    fn zero_absorbs() {
        let p = z().mul(&z()).add(&c(7));
        assert!(p.mul(&ZPoly::zero()).is_zero());
        assert!(ZPoly::zero().mul(&p).is_zero());
    }

    #[test]
    fn hand_expansion_matches_rising_factorial_split() {
        // (z² + z)(z + 2) = z³ + 3z² + 2z, i.e. (z)^(2)·(z+2) = (z)^(3)
        let lhs = rising_factorial(0, 2).mul(&z().add(&c(2)));
        assert_eq!(
            lhs,
            ZPoly::from_coeffs(vec![0.into(), 2.into(), 3.into(), 1.into()])
        );
        assert_eq!(lhs, rising_factorial(0, 3));
    }

    #[test]
    fn rising_factorial_base_cases() {
        assert_eq!(rising_factorial(0, 0), ZPoly::one());
        // (z)^(2) = z(z+1) = z² + z
        assert_eq!(
            rising_factorial(0, 2),
            ZPoly::from_coeffs(vec![0.into(), 1.into(), 1.into()])
        );
        // offset 3, length 2: (z+3)(z+4) = z² + 7z + 12
        assert_eq!(
            rising_factorial(3, 2),
            ZPoly::from_coeffs(vec![12.into(), 7.into(), 1.into()])
        );
    }

    #[test]
    fn rising_factorial_at_one_is_factorial() {
        for k in 0..=10usize {
            let got = rising_factorial(0, k).evaluate(&BigIntVal::from(1));
            assert_eq!(got, super::super::ring::factorial(k as u64), "k={k}");
        }
    }

    #[test]
    fn rising_factorial_splits_multiplicatively() {
        for c0 in -2..=2i64 {
            for k in 0..=6usize {
                for j in 0..=k {
                    let whole = rising_factorial(c0, k);
                    let split =
                        rising_factorial(c0, j).mul(&rising_factorial(c0 + j as i64, k - j));
                    assert_eq!(whole, split, "c={c0} k={k} j={j}");
                }
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        let p = rising_factorial(0, 2); // z² + z
        assert_eq!(p.evaluate(&1.into()), BigIntVal::from(2));
        assert_eq!(p.evaluate(&0.into()), BigIntVal::from(0));
    }

    #[test]
    fn renders_descending_with_signs() {
        let p = ZPoly::from_coeffs(vec![3.into(), (-4).into(), 1.into()]);
        assert_eq!(render_univariate(&p, "z"), "z^2 - 4*z + 3");
        assert_eq!(render_univariate(&ZPoly::zero(), "z"), "0");
        assert_eq!(render_univariate(&c(10), "z"), "10");
        assert_eq!(
            render_univariate(&rising_factorial(0, 2), "z"),
            "z^2 + z"
        );
    }

    #[test]
    fn machine_format_roundtrip() {
        let p = ZPoly::from_coeffs(vec![BigIntVal::from(-7), 0.into(), 123456789012345678i64.into()]);
        let s = zpoly_to_strings(&p);
        assert_eq!(zpoly_from_strings(&s).unwrap(), p);
    }

    #[test]
    fn canonical_trim_idempotent() {
        let p = ZPoly::from_coeffs(vec![1.into(), 2.into(), 0.into(), 0.into()]);
        let again = ZPoly::from_coeffs(p.coeffs().to_vec());
        assert_eq!(p, again);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(ZPoly::zero().degree(), None);
    }
}

//! Bivariate polynomials in (x, z): the natural habitat of the cyclic
//! rook polynomial Σ_l r_l(z;A)·x^l.

use super::dense::{render_univariate, DensePoly};
use super::ring::{BigIntVal, Ring};
use std::fmt;

/// Polynomial in x whose coefficients are z-polynomials over `R`.
///
/// `XZPoly<BigIntVal>` (the default) is the concrete (x, z) polynomial;
/// symbolic-entry computations use `XZPoly<MultiPoly>`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XZPoly<R: Ring = BigIntVal> {
    x_coeffs: Vec<DensePoly<R>>,
}

impl<R: Ring> XZPoly<R> {
    pub fn from_x_coeffs(x_coeffs: Vec<DensePoly<R>>) -> Self {
        let mut p = XZPoly { x_coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.x_coeffs.last().map_or(false, |c| c.is_zero()) {
            self.x_coeffs.pop();
        }
    }

    pub fn constant(c: DensePoly<R>) -> Self {
        Self::from_x_coeffs(vec![c])
    }

    /// Monomial p(z)·x^k.
    pub fn monomial(p: DensePoly<R>, k: usize) -> Self {
        let mut coeffs = vec![DensePoly::zero(); k];
        coeffs.push(p);
        Self::from_x_coeffs(coeffs)
    }

    /// x-degree, `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<usize> {
        if self.x_coeffs.is_empty() {
            None
        } else {
            Some(self.x_coeffs.len() - 1)
        }
    }

    /// Coefficient of x^l as a z-polynomial (zero beyond the degree).
    pub fn x_coeff(&self, l: usize) -> DensePoly<R> {
        self.x_coeffs.get(l).cloned().unwrap_or_else(DensePoly::zero)
    }

    pub fn x_coeffs(&self) -> &[DensePoly<R>] {
        &self.x_coeffs
    }

    /// Multiplies by x^k (shifts every x-power up by k).
    pub fn shift_x(&self, k: usize) -> Self {
        if self.x_coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![DensePoly::zero(); k];
        coeffs.extend(self.x_coeffs.iter().cloned());
        Self::from_x_coeffs(coeffs)
    }

    /// Multiplies every coefficient by a z-polynomial scalar.
    pub fn scale(&self, p: &DensePoly<R>) -> Self {
        Self::from_x_coeffs(self.x_coeffs.iter().map(|c| c.mul(p)).collect())
    }

    /// Substitutes z := at, leaving a polynomial in x (ascending coeffs).
    pub fn bind_z(&self, at: &R) -> DensePoly<R> {
        DensePoly::from_coeffs(self.x_coeffs.iter().map(|c| c.evaluate(at)).collect())
    }

    /// Substitutes z := 1 (the classical specialization).
    pub fn classic(&self) -> DensePoly<R> {
        DensePoly::from_coeffs(self.x_coeffs.iter().map(|c| c.eval_at_one()).collect())
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> XZPoly<S> {
        XZPoly::from_x_coeffs(
            self.x_coeffs
                .iter()
                .map(|zc| zc.map_coeffs(|c| f(c)))
                .collect(),
        )
    }
}

impl<R: Ring> Ring for XZPoly<R> {
    fn zero() -> Self {
        XZPoly { x_coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(DensePoly::one())
    }
    fn from_int(v: i64) -> Self {
        Self::constant(DensePoly::from_int(v))
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.x_coeffs.len().max(other.x_coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.x_coeffs.get(i).cloned().unwrap_or_else(DensePoly::zero);
            let b = other.x_coeffs.get(i).cloned().unwrap_or_else(DensePoly::zero);
            coeffs.push(a.add(&b));
        }
        Self::from_x_coeffs(coeffs)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.x_coeffs.is_empty() || other.x_coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs =
            vec![DensePoly::zero(); self.x_coeffs.len() + other.x_coeffs.len() - 1];
        for (i, a) in self.x_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.x_coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_x_coeffs(coeffs)
    }
    fn neg(&self) -> Self {
        XZPoly {
            x_coeffs: self.x_coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.x_coeffs.is_empty()
    }
    fn from_bigint(v: &BigIntVal) -> Self {
        Self::constant(DensePoly::from_bigint(v))
    }
}

/// Human-readable rendering, ascending x powers with z-coefficients in
/// parentheses, e.g. `1 + (2*z + 3)*x^1`.
pub fn render_xz(p: &XZPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (l, c) in p.x_coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if l == 0 {
            parts.push(render_univariate(c, "z"));
            continue;
        }
        let inner = render_univariate(c, "z");
        let is_plain_constant = c.degree() == Some(0);
        let coeff_part = if is_plain_constant {
            if Ring::is_one(c) {
                String::new()
            } else {
                format!("{inner}*")
            }
        } else {
            format!("({inner})*")
        };
        parts.push(format!("{coeff_part}x^{l}"));
    }
    parts.join(" + ")
}

impl fmt::Display for XZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_xz(self))
    }
}

/// Machine format: list (ascending x) of lists (ascending z) of decimal
/// integer strings.
pub fn xzpoly_to_strings(p: &XZPoly) -> Vec<Vec<String>> {
    p.x_coeffs()
        .iter()
        .map(|zc| zc.coeffs().iter().map(|c| c.to_string()).collect())
        .collect()
}

/// Parses the machine format; bit-exact inverse of [`xzpoly_to_strings`].
pub fn xzpoly_from_strings(items: &[Vec<String>]) -> crate::error::Result<XZPoly> {
    let mut x_coeffs = Vec::with_capacity(items.len());
    for row in items {
        x_coeffs.push(super::dense::zpoly_from_strings(row)?);
    }
    Ok(XZPoly::from_x_coeffs(x_coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ZPoly;

    #[test]
    fn renders_like_the_interface_example() {
        // 1 + (2z + 3)x
        let p = XZPoly::from_x_coeffs(vec![
            ZPoly::one(),
            ZPoly::from_coeffs(vec![3.into(), 2.into()]),
        ]);
        assert_eq!(render_xz(&p), "1 + (2*z + 3)*x^1");
    }

    #[test]
    fn bind_z_example() {
        // 1 + (2z + 3)x at z = 1 -> 1 + 5x
        let p = XZPoly::from_x_coeffs(vec![
            ZPoly::one(),
            ZPoly::from_coeffs(vec![3.into(), 2.into()]),
        ]);
        let bound = p.bind_z(&1.into());
        assert_eq!(bound, DensePoly::from_coeffs(vec![1.into(), 5.into()]));
    }

    #[test]
    fn machine_roundtrip_is_bit_exact() {
        let p = XZPoly::from_x_coeffs(vec![
            ZPoly::one(),
            ZPoly::from_coeffs(vec![(-3).into(), 2.into()]),
            ZPoly::from_coeffs(vec![0.into(), 0.into(), 99.into()]),
        ]);
        let enc = xzpoly_to_strings(&p);
        let dec = xzpoly_from_strings(&enc).unwrap();
        assert_eq!(dec, p);
        assert_eq!(xzpoly_to_strings(&dec), enc);
    }

    #[test]
    fn ring_ops_trim_canonically() {
        let p = XZPoly::monomial(ZPoly::var(), 2);
        let q = p.neg();
        assert!(p.add(&q).is_zero());
        assert_eq!(p.x_degree(), Some(2));
    }
}

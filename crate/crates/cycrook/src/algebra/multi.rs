//! Sparse multivariate polynomials over named indeterminates.
//!
//! Used for symbolic-entry verification: a generic m×n matrix gets one
//! indeterminate per entry, and every identity is then checked as exact
//! polynomial equality. The indeterminate set of an instance never
//! changes; constants (empty indeterminate set) unify with any ring.

use super::ring::{BigIntVal, Ring};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Sparse exact multivariate polynomial.
///
/// Terms map exponent vectors (aligned with `vars`) to nonzero
/// coefficients. The variable list is ordered and shared via `Arc`.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Arc<Vec<String>>,
    terms: BTreeMap<Vec<u32>, BigIntVal>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        // Constants compare equal across rings; otherwise the variable
        // sets must agree and the term maps must match.
        match (self.as_constant(), other.as_constant()) {
            (Some(a), Some(b)) => a == b,
            (None, None) => self.vars == other.vars && self.terms == other.terms,
            _ => false,
        }
    }
}
impl Eq for MultiPoly {}

impl std::hash::Hash for MultiPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Hash compatibly with the constant-unification equality: pure
        // constants hash by value alone.
        if let Some(c) = self.as_constant() {
            c.hash(state);
        } else {
            self.vars.hash(state);
            self.terms.hash(state);
        }
    }
}

impl MultiPoly {
    /// A fresh ring with the given ordered indeterminates.
    pub fn ring(vars: Vec<String>) -> Arc<Vec<String>> {
        Arc::new(vars)
    }

    pub fn zero_in(vars: &Arc<Vec<String>>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(vars: &Arc<Vec<String>>, c: BigIntVal) -> Self {
        let mut p = Self::zero_in(vars);
        if !Ring::is_zero(&c) {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The indeterminate `name` as an element of the ring `vars`.
    pub fn var_in(vars: &Arc<Vec<String>>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::structural(format!("unknown indeterminate {name:?}")))?;
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero_in(vars);
        p.terms.insert(exps, BigIntVal::from(1));
        Ok(p)
    }

    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn is_constant(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().all(|&x| x == 0))
    }

    /// The value when the polynomial is a pure constant.
    pub fn as_constant(&self) -> Option<BigIntVal> {
        if self.terms.is_empty() {
            return Some(<BigIntVal as Ring>::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: BigIntVal) {
        if Ring::is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if Ring::is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Aligns two operands onto a common ring; constants lift into the
    /// other side's ring, genuinely different variable sets are an error.
    fn align(&self, other: &Self) -> Result<(Self, Self)> {
        if self.vars == other.vars {
            return Ok((self.clone(), other.clone()));
        }
        if let Some(c) = self.as_constant() {
            return Ok((Self::constant_in(&other.vars, c), other.clone()));
        }
        if let Some(c) = other.as_constant() {
            return Ok((self.clone(), Self::constant_in(&self.vars, c)));
        }
        Err(Error::structural(format!(
            "mismatched indeterminate sets: {:?} vs {:?}",
            self.vars, other.vars
        )))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.align(other)?;
        for (e, c) in &b.terms {
            a.insert_term(e.clone(), c.clone());
        }
        Ok(a)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        let mut out = Self::zero_in(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigIntVal) -> Self {
        let mut out = Self::zero_in(&self.vars);
        if Ring::is_zero(c) {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    /// Substitutes integer values for a subset of the indeterminates.
    /// Bindings naming indeterminates absent from this ring are ignored.
    pub fn bind(&self, bindings: &BTreeMap<String, BigIntVal>) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            let mut new_exps = exps.clone();
            for (i, name) in self.vars.iter().enumerate() {
                if let Some(v) = bindings.get(name) {
                    if new_exps[i] > 0 {
                        coeff *= num_traits::pow::pow(v.clone(), new_exps[i] as usize);
                        new_exps[i] = 0;
                    }
                }
            }
            out.insert_term(new_exps, coeff);
        }
        out
    }

    /// Total degree of the highest-degree term, `None` if zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (exps, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars[i], e));
                }
            }
            let is_neg = c < &<BigIntVal as Ring>::zero();
            let mag = if is_neg { -c } else { c.clone() };
            let coeff_str = if num_traits::One::is_one(&mag) && !factors.is_empty() {
                String::new()
            } else {
                mag.to_string()
            };
            let body = if factors.is_empty() {
                coeff_str
            } else if coeff_str.is_empty() {
                factors.join("*")
            } else {
                format!("{}*{}", coeff_str, factors.join("*"))
            };
            if parts.is_empty() {
                parts.push(if is_neg { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if is_neg { "-" } else { "+" }, body));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly {
            vars: Arc::new(Vec::new()),
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn from_int(v: i64) -> Self {
        let mut p = Self::zero();
        if v != 0 {
            p.terms.insert(Vec::new(), BigIntVal::from(v));
        }
        p
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("ring mismatch in add")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("ring mismatch in sub")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("ring mismatch in mul")
    }
    fn neg(&self) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_bigint(v: &BigIntVal) -> Self {
        let mut p = Self::zero();
        if !Ring::is_zero(v) {
            p.terms.insert(Vec::new(), v.clone());
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab_ring() -> Arc<Vec<String>> {
        MultiPoly::ring(vec!["a".into(), "b".into()])
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let r = ab_ring();
        let a = MultiPoly::var_in(&r, "a").unwrap();
        let b = MultiPoly::var_in(&r, "b").unwrap();
        let s = a.add(&b);
        let p = s.mul(&s); // (a+b)² = a² + 2ab + b²
        let expect = a
            .mul(&a)
            .add(&a.mul(&b).scalar_mul(&2.into()))
            .add(&b.mul(&b));
        assert_eq!(p, expect);
        // cancellation drops terms entirely
        assert!(p.sub(&expect).is_zero());
    }

    #[test]
    fn constants_unify_across_rings() {
        let r = ab_ring();
        let c5 = MultiPoly::from_int(5);
        let a = MultiPoly::var_in(&r, "a").unwrap();
        let got = a.mul(&c5);
        assert_eq!(got, a.scalar_mul(&5.into()));
        assert_eq!(MultiPoly::from_int(3), MultiPoly::constant_in(&r, 3.into()));
    }

    #[test]
    fn mismatched_rings_error() {
        let r1 = ab_ring();
        let r2 = MultiPoly::ring(vec!["c".into()]);
        let a = MultiPoly::var_in(&r1, "a").unwrap();
        let c = MultiPoly::var_in(&r2, "c").unwrap();
        assert!(a.try_add(&c).is_err());
    }

    #[test]
    fn binding_substitutes_and_ignores_unknowns() {
        let r = ab_ring();
        let a = MultiPoly::var_in(&r, "a").unwrap();
        let b = MultiPoly::var_in(&r, "b").unwrap();
        let p = a.mul(&a).add(&b.scalar_mul(&3.into())); // a² + 3b
        let mut binds = BTreeMap::new();
        binds.insert("a".to_string(), BigIntVal::from(2));
        binds.insert("nope".to_string(), BigIntVal::from(9));
        let q = p.bind(&binds); // 4 + 3b
        let expect = MultiPoly::constant_in(&r, 4.into()).add(&b.scalar_mul(&3.into()));
        assert_eq!(q, expect);
        binds.insert("b".to_string(), BigIntVal::from(1));
        assert_eq!(p.bind(&binds).as_constant(), Some(BigIntVal::from(7)));
    }

    #[test]
    fn renders_sorted_terms() {
        let r = ab_ring();
        let a = MultiPoly::var_in(&r, "a").unwrap();
        let b = MultiPoly::var_in(&r, "b").unwrap();
        let p = a.mul(&b).sub(&MultiPoly::from_int(2)).add(&b.mul(&b));
        assert_eq!(p.render(), "a*b + b^2 - 2");
    }
}

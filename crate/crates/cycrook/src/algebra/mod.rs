//! Exact arbitrary-precision scalars and polynomial rings.
//!
//! Everything downstream asserts identities as exact equality in these
//! rings; there is no floating point anywhere in the crate.

mod dense;
mod multi;
mod ring;
mod xz;

pub use dense::{
    rising_factorial, rising_factorial_in, render_univariate, zpoly_from_strings,
    zpoly_to_strings, DensePoly, ZPoly,
};
pub use multi::MultiPoly;
pub use ring::{binomial, factorial, BigIntVal, Ring};
pub use xz::{render_xz, xzpoly_from_strings, xzpoly_to_strings, XZPoly};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_zpoly() -> impl Strategy<Value = ZPoly> {
        prop::collection::vec(-20i64..=20, 0..6)
            .prop_map(|cs| ZPoly::from_coeffs(cs.into_iter().map(BigIntVal::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms_hold_on_random_triples(
            a in arb_zpoly(), b in arb_zpoly(), c in arb_zpoly()
        ) {
            // associativity
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            // commutativity
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            // distributivity
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            // identities
            prop_assert_eq!(a.add(&ZPoly::zero()), a.clone());
            prop_assert_eq!(a.mul(&ZPoly::one()), a.clone());
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn canonical_form_idempotent(a in arb_zpoly()) {
            let renorm = ZPoly::from_coeffs(a.coeffs().to_vec());
            prop_assert_eq!(renorm, a);
        }
    }
}

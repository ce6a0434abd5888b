//! Exact arithmetic in GF(3^(2k)), polynomial basis.
//!
//! Elements are bit-sliced trit vectors ([`FieldElement`]); a [`FieldCtx`]
//! carries the modulus and everything derived from it (Frobenius basis,
//! primitive element, factorization of the group order). Elements are
//! encoded as base-3 integers with the constant term as the least
//! significant digit, and every tie between candidate roots or generators
//! is broken by the smallest encoding.

mod ctx;
mod element;
mod prime_poly;

pub(crate) use ctx::divides_group;
pub use ctx::{format_trits, parse_trits, FieldCtx, SpecialConstants, DEFAULT_MAX_K, HARD_MAX_K};
pub use element::FieldElement;

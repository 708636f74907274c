//! Exact coefficient layer: rationals, polynomials, vector fields, free modules.

mod derivation;
mod module;
pub(crate) mod parse;
mod poly;
pub mod rational;
mod ring;
mod vector_field;

pub use derivation::DerivationPair;
pub use module::{Element, FreeModule, LinearMap};
pub use poly::{Monomial, Poly};
pub use rational::{int, parse_rational, rat, Rational};
pub(crate) use ring::ensure_same_ring;
pub use ring::{Ring, RingRef};
pub use vector_field::VectorField;

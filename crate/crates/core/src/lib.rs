//! Exact analysis of symmetries and reversing symmetries of area-preserving
//! polynomial maps of the plane in generalised standard form
//! `x' = x + p1(y), y' = y + p2(x')`.

pub mod classifier;
pub mod corpus;
pub mod dynamics;
pub mod error;
pub mod functional_eq;
pub mod map_algebra;
pub mod par;
pub mod parse;
pub mod poly;
pub mod verifier;

pub use error::{Error, Result};

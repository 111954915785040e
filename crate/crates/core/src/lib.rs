//! Classification of wreath-product representations that extend to symplectic
//! reflection algebras with `x_i = y_i = 0`, together with an independent
//! matrix-level verifier.

pub mod arith;
pub mod classify;
pub mod error;
pub mod groups;
pub mod mckay;
pub mod partitions;
pub mod verifier;

pub use error::{Error, Result};

//! Exact scalar and linear algebra: cyclotomic numbers, dense matrices over
//! them, and affine system solving.

mod affine;
mod cyclo;
mod matrix;
mod rational;

pub use affine::{
    parameter_names, solve_affine, solve_affine_named, AffineSolution, EquationAccumulator,
};
pub use cyclo::{field, CycloNumber, CyclotomicField};
pub use matrix::CycloMatrix;
pub use rational::Rational;

/// Canonical residue of a rational polynomial in `ζ_m` modulo `Φ_m`.
pub fn cyclo_reduce(raw: &[Rational], m: u32) -> crate::error::Result<CycloNumber> {
    if m == 0 {
        return Err(crate::error::Error::InvalidInput(
            "conductor must be >= 1".into(),
        ));
    }
    Ok(CycloNumber::reduce(raw, m))
}

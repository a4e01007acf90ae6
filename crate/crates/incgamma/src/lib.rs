//! Arbitrary-precision asymptotics of the incomplete gamma function.
//!
//! The crate evaluates the large-parameter expansions of `Γ(a, λa)` and
//! `Γ(z, z)`, computes their remainders through resurgence integrals of the
//! scaled gamma function, certifies them with explicit error bounds, and
//! re-expands the remainders in terms of terminant functions.
//!
//! Every numeric routine takes a [`PrecisionContext`] which fixes the binary
//! working precision and the quadrature tolerances.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod coefficients;
pub mod error;
pub mod expansions;
pub mod gamma;
pub mod hyper;
pub mod late;
pub mod numerics;
pub mod terminant;

pub use error::{Error, Result};
pub use numerics::{ApproxValue, Complex, PrecisionContext, Real};

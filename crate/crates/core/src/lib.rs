//! Bicomplex and quaternion numerics.
//!
//! Bicomplex numbers `p = (a, b)` carry a commutative product with zero
//! divisors; quaternions share the pair representation but multiply
//! non-commutatively. On top of the algebra the crate provides elementary
//! functions, numerical differentiation, contour and surface integration and
//! the harmonic-operator checks used to classify bicomplex maps.

pub mod algebra;
pub mod calculus;
pub mod elementary;
pub mod error;
pub mod exec;
pub mod function;
pub mod harmonic;
pub mod integration;
pub mod registry;
pub mod sampling;

pub use algebra::{Bicomplex, Complex, Quaternion};
pub use error::{Error, Result};
pub use exec::Exec;
pub use function::{ArgClass, BicomplexFn};

//! Number systems: quaternions, bicomplex numbers and their doublings.
//!
//! Both quaternions and bicomplex numbers are stored as pairs of complex
//! numbers `(a, b)`. They differ only in how the pair multiplies.

mod bicomplex;
mod octonion;
mod quaternion;
mod tricomplex;

pub use bicomplex::{Bicomplex, SINGULAR_TOL};
pub use octonion::Octonion;
pub use quaternion::{DivisionSide, Quaternion};
pub use tricomplex::Tricomplex;

pub use num_complex::Complex64 as Complex;

pub(crate) const I: Complex = Complex::new(0.0, 1.0);

#[cfg(test)]
pub(crate) fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

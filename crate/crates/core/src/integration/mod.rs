//! Quadrature, curves, surfaces and the integral theorems built on them.

pub mod contour;
pub mod curve;
pub mod quadrature;
pub mod surface;
pub mod taylor;

pub use contour::{
    cauchy_integral_formula, cauchy_theorem_check, complex_line_integral, curve_length, green_theorem_check,
    line_integral, ml_bound, norm_line_integral, path_independence_check, twining_number, CauchyFormula,
    CauchyTheorem, ComponentGreen, GreenCheck, MlBound, PathIndependence, SurfaceConditions, TwiningNumber,
};
pub use curve::Curve;
pub use quadrature::{QuadOptions, Quadrature};
pub use surface::{complex_surface_integral, Surface};
pub use taylor::{taylor_expand, taylor_expand_with, TaylorExpansion, TaylorOptions};

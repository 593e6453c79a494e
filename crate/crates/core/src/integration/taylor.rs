//! Taylor expansion with a sampled remainder bound.

use crate::algebra::Bicomplex;
use crate::calculus::{derivative_n, regular_derivative, HolomorphyOptions};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::function::BicomplexFn;
use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaylorOptions {
    /// Radius of the ball on which `sup ‖ψ⁽ⁿ⁾‖` is sampled.
    pub radius: f64,
    pub interior_samples: usize,
    pub boundary_samples: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for TaylorOptions {
    fn default() -> Self {
        TaylorOptions { radius: 1.0, interior_samples: 256, boundary_samples: 256, seed: 0x7a71, exec: Exec::default() }
    }
}

/// `Σₖ₌₀ⁿ⁻¹ ψ⁽ᵏ⁾(p₀)/k! ⊙ (p − p₀)ᵏ` plus data for the remainder bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorExpansion {
    pub center: Bicomplex,
    /// `ψ⁽ᵏ⁾(p₀)/k!` for `k = 0, …, n − 1`.
    pub coeffs: Vec<Bicomplex>,
    /// Largest sampled `‖ψ⁽ⁿ⁾‖` on the ball of `radius` about the centre.
    pub derivative_sup: f64,
    pub radius: f64,
}

impl TaylorExpansion {
    /// Number of terms `n`.
    pub fn terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn partial_sum(&self, p: Bicomplex) -> Bicomplex {
        crate::elementary::poly_eval(&self.coeffs, p - self.center)
    }

    /// `M·L·(2‖p − p₀‖)ⁿ⁻¹/(n − 1)!` with `L = ‖p − p₀‖` (straight path).
    /// Infinite outside the sampled ball.
    pub fn remainder_bound(&self, p: Bicomplex) -> f64 {
        let r = (p - self.center).norm();
        if r > self.radius {
            return f64::INFINITY;
        }
        let n = self.terms() as i32;
        let fact: f64 = (1..n).map(f64::from).product();
        self.derivative_sup * r * (2.0 * r).powi(n - 1) / fact
    }
}

pub fn taylor_expand(f: &BicomplexFn, p0: Bicomplex, n: usize) -> Result<TaylorExpansion> {
    taylor_expand_with(f, p0, n, &TaylorOptions::default())
}

pub fn taylor_expand_with(f: &BicomplexFn, p0: Bicomplex, n: usize, opts: &TaylorOptions) -> Result<TaylorExpansion> {
    if n == 0 {
        return Err(Error::InvalidInput("a Taylor expansion needs at least one term".into()));
    }
    if !f.has_analytic_derivative() {
        let r = regular_derivative(f, f.class(), p0, HolomorphyOptions::default())?;
        if !r.is_holomorphic {
            return Err(Error::NotDifferentiable(format!(
                "{} is not holomorphic near {p0} (sampled residual {:.3e})",
                f.name(),
                r.certification_residual
            )));
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    let mut fact = 1.0;
    for k in 0..n {
        if k > 0 {
            fact *= k as f64;
        }
        coeffs.push(derivative_n(f, p0, k as u32)? * (1.0 / fact));
    }
    let mut pts = vec![p0];
    pts.extend(sampling::ball(p0, opts.radius, opts.interior_samples, opts.seed));
    pts.extend(sampling::sphere(p0, opts.radius, opts.boundary_samples, opts.seed ^ 1));
    let norms = opts.exec.map(&pts, |&q| derivative_n(f, q, n as u32).map(Bicomplex::norm));
    let mut sup: f64 = 0.0;
    for v in norms {
        sup = sup.max(v?);
    }
    Ok(TaylorExpansion { center: p0, coeffs, derivative_sup: sup, radius: opts.radius })
}

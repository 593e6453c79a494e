//! Parametrised surfaces `p(h, t)` over a rectangle and integrals of
//! `da ∧ db`.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use super::curve::Curve;
use super::quadrature::{integrate_2d, QuadOptions, Quadrature};
use crate::algebra::{Bicomplex, Complex};
use crate::error::{Error, Result};

pub type PatchFn = Arc<dyn Fn(f64, f64) -> Bicomplex + Send + Sync>;

/// A surface patch over `[h₀, h₁] × [t₀, t₁]`.
#[derive(Clone)]
pub struct Surface {
    name: String,
    patch: PatchFn,
    h: (f64, f64),
    t: (f64, f64),
}

impl fmt::Debug for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Surface").field("name", &self.name).field("h", &self.h).field("t", &self.t).finish()
    }
}

/// `(∂p/∂h, ∂p/∂t)`
pub type Jacobian = (Bicomplex, Bicomplex);

impl Surface {
    pub fn new<F>(name: impl Into<String>, patch: F, h: (f64, f64), t: (f64, f64)) -> Result<Self>
    where
        F: Fn(f64, f64) -> Bicomplex + Send + Sync + 'static,
    {
        if !(h.0 < h.1 && t.0 < t.1) {
            return Err(Error::InvalidInput("surface parameter rectangle is empty".into()));
        }
        Ok(Surface { name: name.into(), patch: Arc::new(patch), h, t })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ranges(&self) -> ((f64, f64), (f64, f64)) {
        (self.h, self.t)
    }

    pub fn point(&self, h: f64, t: f64) -> Bicomplex {
        (self.patch)(h, t)
    }

    /// Partial derivatives of the patch by fourth-order differences.
    pub fn jacobian(&self, h: f64, t: f64) -> Jacobian {
        let dh = 1e-4 * (self.h.1 - self.h.0);
        let dt = 1e-4 * (self.t.1 - self.t.0);
        let d = |g: &dyn Fn(f64) -> Bicomplex, s: f64| {
            (g(-2.0 * s) - g(2.0 * s) + (g(s) - g(-s)) * 8.0) * (1.0 / (12.0 * s))
        };
        (d(&|e| self.point(h + e, t), dh), d(&|e| self.point(h, t + e), dt))
    }

    /// Rectangle boundary traversed counterclockwise in `(h, t)`:
    /// bottom, right, top, left, with parameter `s ∈ [0, 4]`.
    pub fn boundary(&self) -> Curve {
        let s = self.clone();
        let ((h0, h1), (t0, t1)) = (self.h, self.t);
        let at = move |u: f64| -> (f64, f64) {
            let k = (u.floor() as i64).clamp(0, 3);
            let f = u - k as f64;
            match k {
                0 => (h0 + (h1 - h0) * f, t0),
                1 => (h1, t0 + (t1 - t0) * f),
                2 => (h1 - (h1 - h0) * f, t1),
                _ => (h0, t1 - (t1 - t0) * f),
            }
        };
        let s2 = self.clone();
        Curve::new(format!("boundary of {}", self.name), move |u| {
            let (h, t) = at(u);
            s.point(h, t)
        }, 0.0, 4.0)
        .expect("valid range")
        .with_tangent(move |u| {
            let k = (u.floor() as i64).clamp(0, 3);
            let (h, t) = at(u);
            let (ph, pt) = s2.jacobian(h, t);
            match k {
                0 => ph * (h1 - h0),
                1 => pt * (t1 - t0),
                2 => ph * -(h1 - h0),
                _ => pt * -(t1 - t0),
            }
        })
        .with_breakpoints(vec![1.0, 2.0, 3.0])
        .expect("interior breakpoints")
    }

    /// `origin + h·e_h + t·e_t` over the given rectangle.
    pub fn flat_patch(origin: Bicomplex, e_h: Bicomplex, e_t: Bicomplex, h: (f64, f64), t: (f64, f64)) -> Result<Surface> {
        Surface::new("flat-patch", move |hh, tt| origin + e_h * hh + e_t * tt, h, t)
    }

    /// `center + h (e^{it} cos t, e^{it} sin t)`, `h ∈ [0, R]`. Its outer edge
    /// is the twist curve and `p − center` is non-singular off the centre.
    pub fn twist_disk(center: Bicomplex, radius: f64) -> Surface {
        Surface::new(
            "disk-surface",
            move |h, t| center + Bicomplex::new(Complex::from_polar(h * t.cos(), t), Complex::from_polar(h * t.sin(), t)),
            (0.0, radius),
            (0.0, TAU),
        )
        .expect("valid ranges")
    }

    /// `center + h (e^{it}, e^{it})`, `h ∈ [0, R]`, bounded by the double circle.
    pub fn double_disk(center: Bicomplex, radius: f64) -> Surface {
        Surface::new(
            "double-disk",
            move |h, t| center + Bicomplex::new(Complex::from_polar(h, t), Complex::from_polar(h, t)),
            (0.0, radius),
            (0.0, TAU),
        )
        .expect("valid ranges")
    }

    /// Disk in the first complex plane, bounded by the complex circle.
    pub fn complex_disk(center: Bicomplex, radius: f64) -> Surface {
        Surface::new(
            "complex-disk",
            move |h, t| center + Bicomplex::from_complex(Complex::from_polar(h, t)),
            (0.0, radius),
            (0.0, TAU),
        )
        .expect("valid ranges")
    }

    /// Evenly spread sample points `(h, t, p)` on the patch.
    pub fn grid(&self, n: usize) -> Vec<(f64, f64, Bicomplex)> {
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                let h = self.h.0 + (self.h.1 - self.h.0) * (i as f64 + 0.5) / n as f64;
                let t = self.t.0 + (self.t.1 - self.t.0) * (k as f64 + 0.5) / n as f64;
                out.push((h, t, self.point(h, t)));
            }
        }
        out
    }
}

/// Pulled-back real two-forms `dxᵢ ∧ dxⱼ` for `(x, y, z, u)`.
pub fn wedge(j: &Jacobian, i: usize, k: usize) -> f64 {
    let (ph, pt) = (j.0.to_quadruple(), j.1.to_quadruple());
    ph[i] * pt[k] - pt[i] * ph[k]
}

/// `∫∫ φ da ∧ db` with `φ = ξ₁ + iξ₂`, expanded over the real two-forms:
/// real part `ξ₁(dx∧dz − dy∧du) − ξ₂(dx∧du + dy∧dz)`, imaginary part
/// `ξ₁(dx∧du + dy∧dz) + ξ₂(dx∧dz − dy∧du)`.
pub fn complex_surface_integral<F>(phi: &F, s: &Surface, opts: &QuadOptions) -> Result<Quadrature<Complex>>
where
    F: Fn(Complex, Complex) -> Result<Complex> + Sync + ?Sized,
{
    let integrand = |h: f64, t: f64| -> Result<Complex> {
        let p = s.point(h, t);
        let v = phi(p.a, p.b)?;
        let j = s.jacobian(h, t);
        let (xz, yu, xu, yz) = (wedge(&j, 0, 2), wedge(&j, 1, 3), wedge(&j, 0, 3), wedge(&j, 1, 2));
        let (x1, x2) = (v.re, v.im);
        Ok(Complex::new(x1 * (xz - yu) - x2 * (xu + yz), x1 * (xu + yz) + x2 * (xz - yu)))
    };
    let (h, t) = s.ranges();
    integrate_2d(&integrand, h, t, opts)
}

/// `∫∫ Σᵢ<ⱼ Fᵢⱼ dxᵢ ∧ dxⱼ` for a real two-form given by its six coefficients
/// in the order `xy, xz, xu, yz, yu, zu`.
pub fn real_two_form_integral<F>(form: &F, s: &Surface, opts: &QuadOptions) -> Result<Quadrature<f64>>
where
    F: Fn(Bicomplex) -> Result<[f64; 6]> + Sync + ?Sized,
{
    const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let integrand = |h: f64, t: f64| -> Result<f64> {
        let c = form(s.point(h, t))?;
        let j = s.jacobian(h, t);
        Ok(PAIRS.iter().zip(c).map(|(&(i, k), ck)| ck * wedge(&j, i, k)).sum())
    };
    let (h, t) = s.ranges();
    integrate_2d(&integrand, h, t, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_flat_patch_has_unit_measure() {
        let s = Surface::flat_patch(Bicomplex::zero(), Bicomplex::one(), Bicomplex::j(), (0.0, 1.0), (0.0, 1.0)).unwrap();
        let q = complex_surface_integral(&|_, _| Ok(Complex::new(1.0, 0.0)), &s, &QuadOptions::default()).unwrap();
        assert!((q.value - Complex::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn matches_complex_jacobian() {
        // da ∧ db pulls back to a_h b_t − a_t b_h.
        let s = Surface::twist_disk(Bicomplex::from_quadruple([0.1, 0.0, -0.2, 0.3]), 1.0);
        let phi = |a: Complex, b: Complex| Ok(a * b.exp() + b);
        let got = complex_surface_integral(&phi, &s, &QuadOptions::default()).unwrap().value;
        let oracle = |h: f64, t: f64| -> Result<Complex> {
            let p = s.point(h, t);
            let (ph, pt) = s.jacobian(h, t);
            Ok(phi(p.a, p.b)? * (ph.a * pt.b - pt.a * ph.b))
        };
        let want = integrate_2d(&oracle, (0.0, 1.0), (0.0, TAU), &QuadOptions::default()).unwrap().value;
        assert!((got - want).norm() < 1e-9 * want.norm().max(1.0));
    }

    #[test]
    fn boundary_is_closed_and_follows_edges() {
        let s = Surface::twist_disk(Bicomplex::zero(), 1.0);
        let b = s.boundary();
        assert!(b.is_closed());
        let twist = Curve::twist(Bicomplex::zero());
        for f in [0.1, 0.5, 0.9] {
            assert!((b.point(1.0 + f) - twist.point(TAU * f)).norm() < 1e-14);
        }
    }
}

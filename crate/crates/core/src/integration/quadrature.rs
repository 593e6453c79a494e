//! Adaptive composite Gauss–Legendre quadrature.

use std::sync::OnceLock;

use crate::algebra::{Bicomplex, Complex};
use crate::calculus::Vector;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Points per Gauss–Legendre panel.
pub const ORDER: usize = 15;

/// Default absolute and relative tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Values the quadrature can accumulate.
pub trait Integrand: Vector + Send + Sync {
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Integrand for Complex {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl Integrand for Bicomplex {
    fn zero() -> Self {
        Bicomplex::zero()
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Nodes and weights on `[-1, 1]` by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { z } else { p1 };
            let pn1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (z * pn - pn1) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

/// One panel of the fixed rule.
pub fn panel<T: Integrand>(f: &(impl Fn(f64) -> Result<T> + ?Sized), lo: f64, hi: f64) -> Result<T> {
    let (x, w) = rule();
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    let mut s = T::zero();
    for (xi, wi) in x.iter().zip(w) {
        s = s + f(mid + half * xi)? * *wi;
    }
    Ok(s * half)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub atol: f64,
    pub rtol: f64,
    pub max_depth: u32,
    /// Panels per breakpoint interval before refinement.
    pub initial_panels: usize,
    pub exec: Exec,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            atol: DEFAULT_TOL,
            rtol: DEFAULT_TOL,
            max_depth: 40,
            initial_panels: 8,
            exec: Exec::default(),
        }
    }
}

impl QuadOptions {
    pub fn with_tol(tol: f64) -> Self {
        QuadOptions { atol: tol, rtol: tol, ..Default::default() }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: T,
    pub error_estimate: f64,
    pub panels: usize,
}

struct Accum<T> {
    value: T,
    err: f64,
    panels: usize,
}

// Rounding noise allowed per unit of `Σ ‖panel‖`, below which bisection
// cannot improve an estimate.
const NOISE: f64 = 64.0 * f64::EPSILON;

fn refine<T, F>(f: &F, lo: f64, hi: f64, whole: T, tol: f64, depth: u32, opts: &QuadOptions) -> Result<Accum<T>>
where
    T: Integrand,
    F: Fn(f64) -> Result<T> + Sync + ?Sized,
{
    let mid = 0.5 * (lo + hi);
    let left = panel(f, lo, mid)?;
    let right = panel(f, mid, hi)?;
    let both = left + right;
    let err = (whole - both).magnitude();
    if err <= tol {
        return Ok(Accum { value: both, err, panels: 2 });
    }
    if depth >= opts.max_depth || mid <= lo || mid >= hi {
        return Err(Error::QuadratureFailure(format!(
            "no convergence on [{lo}, {hi}] (estimate {err:.3e}, target {tol:.3e})"
        )));
    }
    let l = refine(f, lo, mid, left, 0.5 * tol, depth + 1, opts)?;
    let r = refine(f, mid, hi, right, 0.5 * tol, depth + 1, opts)?;
    Ok(Accum { value: l.value + r.value, err: l.err + r.err, panels: l.panels + r.panels })
}

/// `∫ f` over `[knots₀, knotsₙ]`. Interior knots always split panels, so
/// integrands that are only piecewise smooth should list their kinks there.
pub fn integrate<T, F>(f: &F, knots: &[f64], opts: &QuadOptions) -> Result<Quadrature<T>>
where
    T: Integrand,
    F: Fn(f64) -> Result<T> + Sync + ?Sized,
{
    if knots.len() < 2 || knots.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidInput("integration knots must be strictly increasing".into()));
    }
    let total = knots[knots.len() - 1] - knots[0];
    let mut panels = Vec::new();
    for w in knots.windows(2) {
        let n = opts.initial_panels.max(1);
        let width = (w[1] - w[0]) / n as f64;
        for k in 0..n {
            let lo = w[0] + width * k as f64;
            let hi = if k + 1 == n { w[1] } else { lo + width };
            panels.push((lo, hi));
        }
    }
    let first: Vec<Result<T>> = opts.exec.map(&panels, |&(lo, hi)| panel(f, lo, hi));
    let first: Vec<T> = first.into_iter().collect::<Result<_>>()?;
    let estimate = first.iter().fold(T::zero(), |s, v| s + *v);
    let noise = NOISE * first.iter().map(Integrand::magnitude).sum::<f64>();
    let tol = opts.atol.max(opts.rtol * estimate.magnitude()).max(noise);
    let jobs: Vec<(usize, (f64, f64))> = panels.iter().copied().enumerate().collect();
    let refined = opts.exec.map(&jobs, |&(i, (lo, hi))| {
        refine(f, lo, hi, first[i], tol * (hi - lo) / total, 0, opts)
    });
    let mut value = T::zero();
    let mut err = 0.0;
    let mut count = 0;
    for r in refined {
        let a = r?;
        value = value + a.value;
        err += a.err;
        count += a.panels;
    }
    Ok(Quadrature { value, error_estimate: err, panels: count })
}

/// `∫∫ f(h, t) dh dt` over a rectangle with a tensor-product rule, doubling
/// the panel grid until two successive grids agree.
pub fn integrate_2d<T, F>(f: &F, h: (f64, f64), t: (f64, f64), opts: &QuadOptions) -> Result<Quadrature<T>>
where
    T: Integrand,
    F: Fn(f64, f64) -> Result<T> + Sync + ?Sized,
{
    let (x, w) = rule();
    let grid = |n: usize| -> Result<T> {
        let (dh, dt) = ((h.1 - h.0) / n as f64, (t.1 - t.0) / n as f64);
        let rows = opts.exec.map_range(n * ORDER, |r| -> Result<T> {
            let (pi, ni) = (r / ORDER, r % ORDER);
            let hh = h.0 + dh * (pi as f64 + 0.5 + 0.5 * x[ni]);
            let mut s = T::zero();
            for pj in 0..n {
                for nj in 0..ORDER {
                    let tt = t.0 + dt * (pj as f64 + 0.5 + 0.5 * x[nj]);
                    s = s + f(hh, tt)? * w[nj];
                }
            }
            Ok(s * w[ni])
        });
        let mut s = T::zero();
        for r in rows {
            s = s + r?;
        }
        Ok(s * (0.25 * dh * dt))
    };
    let mut n = 2;
    let mut prev = grid(1)?;
    loop {
        let cur = grid(n)?;
        let err = (cur - prev).magnitude();
        let tol = opts.atol.max(opts.rtol * cur.magnitude());
        if err <= tol {
            return Ok(Quadrature { value: cur, error_estimate: err, panels: n * n });
        }
        if n >= 64 {
            return Err(Error::QuadratureFailure(format!(
                "surface rule did not settle at {n}x{n} panels (change {err:.3e})"
            )));
        }
        prev = cur;
        n *= 2;
    }
}

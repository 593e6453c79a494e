//! Parametrised curves `p(t)`, `t ∈ [t₀, t₁]`.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{Bicomplex, Complex, I};
use crate::error::{Error, Result};

pub type PathFn = Arc<dyn Fn(f64) -> Bicomplex + Send + Sync>;

/// Closure tolerance on `‖p(t₁) − p(t₀)‖`.
pub const CLOSURE_TOL: f64 = 1e-12;

/// A piecewise-smooth curve. Breakpoints mark parameter values where the
/// tangent may jump.
#[derive(Clone)]
pub struct Curve {
    name: String,
    path: PathFn,
    tangent: Option<PathFn>,
    t0: f64,
    t1: f64,
    breakpoints: Vec<f64>,
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Curve")
            .field("name", &self.name)
            .field("t0", &self.t0)
            .field("t1", &self.t1)
            .field("breakpoints", &self.breakpoints)
            .finish()
    }
}

impl Curve {
    pub fn new<F>(name: impl Into<String>, path: F, t0: f64, t1: f64) -> Result<Self>
    where
        F: Fn(f64) -> Bicomplex + Send + Sync + 'static,
    {
        if !(t0 < t1) || !t0.is_finite() || !t1.is_finite() {
            return Err(Error::InvalidInput(format!("curve parameter range [{t0}, {t1}] is empty")));
        }
        Ok(Curve {
            name: name.into(),
            path: Arc::new(path),
            tangent: None,
            t0,
            t1,
            breakpoints: Vec::new(),
        })
    }

    /// Supplies `p′(t)` instead of differencing.
    pub fn with_tangent<F>(mut self, tangent: F) -> Self
    where
        F: Fn(f64) -> Bicomplex + Send + Sync + 'static,
    {
        self.tangent = Some(Arc::new(tangent));
        self
    }

    pub fn with_breakpoints(mut self, mut points: Vec<f64>) -> Result<Self> {
        points.sort_by(f64::total_cmp);
        points.dedup();
        if points.iter().any(|&b| b <= self.t0 || b >= self.t1) {
            return Err(Error::InvalidInput("breakpoints must lie strictly inside the range".into()));
        }
        self.breakpoints = points;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn range(&self) -> (f64, f64) {
        (self.t0, self.t1)
    }

    /// `t₀`, the breakpoints, `t₁`.
    pub fn knots(&self) -> Vec<f64> {
        let mut k = vec![self.t0];
        k.extend(&self.breakpoints);
        k.push(self.t1);
        k
    }

    pub fn point(&self, t: f64) -> Bicomplex {
        (self.path)(t)
    }

    pub fn start(&self) -> Bicomplex {
        self.point(self.t0)
    }

    pub fn end(&self) -> Bicomplex {
        self.point(self.t1)
    }

    pub fn is_closed(&self) -> bool {
        (self.end() - self.start()).norm() <= CLOSURE_TOL * self.start().norm().max(1.0)
    }

    /// `p′(t)`. Without an analytic tangent this is a central difference with
    /// step `10⁻⁶ (t₁ − t₀)`, switching to a one-sided second-order stencil
    /// when the stencil would cross a knot.
    pub fn tangent(&self, t: f64) -> Bicomplex {
        if let Some(d) = &self.tangent {
            return d(t);
        }
        let h = 1e-6 * (self.t1 - self.t0);
        let knots = self.knots();
        let lo = knots.iter().copied().filter(|&k| k <= t).fold(self.t0, f64::max);
        let hi = knots.iter().copied().filter(|&k| k > t).fold(self.t1, f64::min);
        let p = |s: f64| self.point(s);
        if t - h < lo {
            (p(t) * -3.0 + p(t + h) * 4.0 - p(t + 2.0 * h)) * (0.5 / h)
        } else if t + h > hi {
            (p(t) * 3.0 - p(t - h) * 4.0 + p(t - 2.0 * h)) * (0.5 / h)
        } else {
            (p(t + h) - p(t - h)) * (0.5 / h)
        }
    }

    /// The same trace run backwards.
    pub fn reversed(&self) -> Curve {
        let (t0, t1) = (self.t0, self.t1);
        let path = self.path.clone();
        let tangent = self.tangent.clone();
        Curve {
            name: format!("{} (reversed)", self.name),
            path: Arc::new(move |t| path(t0 + t1 - t)),
            tangent: tangent.map(|d| Arc::new(move |t| -d(t0 + t1 - t)) as PathFn),
            t0,
            t1,
            breakpoints: self.breakpoints.iter().rev().map(|b| t0 + t1 - b).collect(),
        }
    }

    /// `center + (R e^{it}, R e^{it})`, `t ∈ [0, 2π]`.
    pub fn double_circle(center: Bicomplex, radius: f64) -> Curve {
        Curve::new(
            format!("double-circle(R={radius})"),
            move |t| center + Bicomplex::new(Complex::from_polar(radius, t), Complex::from_polar(radius, t)),
            0.0,
            TAU,
        )
        .expect("valid range")
        .with_tangent(move |t| {
            let d = I * Complex::from_polar(radius, t);
            Bicomplex::new(d, d)
        })
    }

    /// `center + (e^{it} cos t, e^{it} sin t) = center + e^{(it, t)}`, `t ∈ [0, 2π]`.
    pub fn twist(center: Bicomplex) -> Curve {
        Curve::new(
            "twist",
            move |t| center + Bicomplex::new(Complex::from_polar(t.cos(), t), Complex::from_polar(t.sin(), t)),
            0.0,
            TAU,
        )
        .expect("valid range")
        .with_tangent(|t| {
            let e = Complex::from_polar(1.0, t);
            Bicomplex::new(e * (I * t.cos() - t.sin()), e * (I * t.sin() + t.cos()))
        })
    }

    /// Circle in the first complex plane, `center + (R e^{it}, 0)`.
    pub fn complex_circle(center: Bicomplex, radius: f64) -> Curve {
        Curve::new(
            format!("complex-circle(R={radius})"),
            move |t| center + Bicomplex::from_complex(Complex::from_polar(radius, t)),
            0.0,
            TAU,
        )
        .expect("valid range")
        .with_tangent(move |t| Bicomplex::from_complex(I * Complex::from_polar(radius, t)))
    }

    /// Straight segment from `p` to `q`, `t ∈ [0, 1]`.
    pub fn segment(p: Bicomplex, q: Bicomplex) -> Curve {
        Curve::new("segment", move |t| p + (q - p) * t, 0.0, 1.0)
            .expect("valid range")
            .with_tangent(move |_| q - p)
    }

    /// Polygon through `points`, one unit of parameter per edge.
    pub fn polyline(points: Vec<Bicomplex>) -> Result<Curve> {
        if points.len() < 2 {
            return Err(Error::InvalidInput("a polyline needs at least two points".into()));
        }
        let n = points.len() - 1;
        let pts = Arc::new(points);
        let (p1, p2) = (pts.clone(), pts.clone());
        let edge = move |t: f64| (t.floor() as usize).min(n - 1);
        Curve::new(
            "polyline",
            move |t| {
                let k = edge(t);
                p1[k] + (p1[k + 1] - p1[k]) * (t - k as f64)
            },
            0.0,
            n as f64,
        )?
        .with_tangent(move |t| {
            let k = edge(t);
            p2[k + 1] - p2[k]
        })
        .with_breakpoints((1..n).map(|k| k as f64).collect())
    }
}

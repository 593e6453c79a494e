//! Numerical differentiation of bicomplex maps.
//!
//! Partials with respect to `a, a*, b, b*` are Wirtinger derivatives built
//! from fourth-order central differences in the real coordinates
//! `p = x + yi + zj + uk`: `∂/∂a = ½(∂x − i∂y)`, `∂/∂a* = ½(∂x + i∂y)` and
//! likewise for `b` with `z, u`.

use std::ops::{Add, Mul, Sub};

use crate::algebra::{Bicomplex, Complex, I};
use crate::error::{Error, Result};
use crate::function::{ArgClass, BicomplexFn};
use crate::sampling;

/// Relative step for first derivatives.
pub const FIRST_STEP: f64 = 1e-4;
/// Relative step for second derivatives.
pub const SECOND_STEP: f64 = 2e-3;
/// Highest order served by finite differences.
pub const MAX_FD_ORDER: u32 = 6;
/// Highest order served by analytic derivatives.
pub const MAX_ANALYTIC_ORDER: u32 = 20;

pub fn default_step(p: Bicomplex) -> f64 {
    FIRST_STEP * p.norm().max(1.0)
}

pub fn second_step(p: Bicomplex) -> f64 {
    SECOND_STEP * p.norm().max(1.0)
}

/// Values a stencil can combine.
pub trait Vector: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {}
impl<T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>> Vector for T {}

/// `g'(0)` to fourth order.
pub fn d1<T: Vector>(g: impl Fn(f64) -> Result<T>, h: f64) -> Result<T> {
    let s = (g(-2.0 * h)? - g(2.0 * h)?) + (g(h)? - g(-h)?) * 8.0;
    Ok(s * (1.0 / (12.0 * h)))
}

/// `g''(0)` to fourth order.
pub fn d2<T: Vector>(g: impl Fn(f64) -> Result<T>, h: f64) -> Result<T> {
    let g0 = g(0.0)?;
    let s = (g(h)? + g(-h)?) * 16.0 - (g(2.0 * h)? + g(-2.0 * h)?) - g0 * 30.0;
    Ok(s * (1.0 / (12.0 * h * h)))
}

/// Real coordinate directions of `p = x + yi + zj + uk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
    U,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::X, Axis::Y, Axis::Z, Axis::U];

    pub fn unit(self) -> Bicomplex {
        match self {
            Axis::X => Bicomplex::one(),
            Axis::Y => Bicomplex::i(),
            Axis::Z => Bicomplex::j(),
            Axis::U => Bicomplex::k(),
        }
    }
}

fn evaluate(f: &BicomplexFn, p: Bicomplex) -> Result<Bicomplex> {
    f.eval(p)
        .map_err(|e| Error::EvaluationFailure(format!("{} at {p}: {e}", f.name())))
}

/// `∂ψ/∂axis` at `p`, component-wise.
pub fn real_partial(f: &BicomplexFn, p: Bicomplex, axis: Axis, h: f64) -> Result<Bicomplex> {
    let e = axis.unit();
    d1(|t| evaluate(f, p + e * t), h)
}

/// `∂²ψ/∂axis₁∂axis₂` at `p`.
pub fn real_second(f: &BicomplexFn, p: Bicomplex, a1: Axis, a2: Axis, h: f64) -> Result<Bicomplex> {
    let (e1, e2) = (a1.unit(), a2.unit());
    if a1 == a2 {
        d2(|t| evaluate(f, p + e1 * t), h)
    } else {
        d1(|s| d1(|t| evaluate(f, p + e1 * s + e2 * t), h), h)
    }
}

/// The four real partials of `ψ` at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gradient {
    pub x: Bicomplex,
    pub y: Bicomplex,
    pub z: Bicomplex,
    pub u: Bicomplex,
}

/// Wirtinger derivative selectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wirtinger {
    A,
    AConj,
    B,
    BConj,
}

impl Gradient {
    pub fn along(&self, axis: Axis) -> Bicomplex {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
            Axis::U => self.u,
        }
    }

    pub fn wirtinger(&self, w: Wirtinger) -> Bicomplex {
        let (re, im, sign) = match w {
            Wirtinger::A => (self.x, self.y, -1.0),
            Wirtinger::AConj => (self.x, self.y, 1.0),
            Wirtinger::B => (self.z, self.u, -1.0),
            Wirtinger::BConj => (self.z, self.u, 1.0),
        };
        (re + im.scale_complex(I * sign)) * 0.5
    }

    pub fn scale(&self) -> f64 {
        [self.x, self.y, self.z, self.u].iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

pub fn gradient(f: &BicomplexFn, p: Bicomplex, h: f64) -> Result<Gradient> {
    Ok(Gradient {
        x: real_partial(f, p, Axis::X, h)?,
        y: real_partial(f, p, Axis::Y, h)?,
        z: real_partial(f, p, Axis::Z, h)?,
        u: real_partial(f, p, Axis::U, h)?,
    })
}

/// Wirtinger partial of a complex-valued map of `(a, b)`.
pub fn partial<F>(f: F, w: Wirtinger, a: Complex, b: Complex, h: f64) -> Result<Complex>
where
    F: Fn(Complex, Complex) -> Result<Complex>,
{
    let along = |da: Complex, db: Complex| d1(|t| f(a + da * t, b + db * t), h);
    let one = Complex::new(1.0, 0.0);
    let zero = Complex::new(0.0, 0.0);
    let (re, im, sign) = match w {
        Wirtinger::A => (along(one, zero)?, along(I, zero)?, -1.0),
        Wirtinger::AConj => (along(one, zero)?, along(I, zero)?, 1.0),
        Wirtinger::B => (along(zero, one)?, along(zero, I)?, -1.0),
        Wirtinger::BConj => (along(zero, one)?, along(zero, I)?, 1.0),
    };
    Ok((re + im * I * sign) * 0.5)
}

pub fn partial_a<F: Fn(Complex, Complex) -> Result<Complex>>(f: F, a: Complex, b: Complex, h: f64) -> Result<Complex> {
    partial(f, Wirtinger::A, a, b, h)
}

pub fn partial_a_conj<F: Fn(Complex, Complex) -> Result<Complex>>(f: F, a: Complex, b: Complex, h: f64) -> Result<Complex> {
    partial(f, Wirtinger::AConj, a, b, h)
}

pub fn partial_b<F: Fn(Complex, Complex) -> Result<Complex>>(f: F, a: Complex, b: Complex, h: f64) -> Result<Complex> {
    partial(f, Wirtinger::B, a, b, h)
}

pub fn partial_b_conj<F: Fn(Complex, Complex) -> Result<Complex>>(f: F, a: Complex, b: Complex, h: f64) -> Result<Complex> {
    partial(f, Wirtinger::BConj, a, b, h)
}

/// Wirtinger partial of `f*`, which equals the conjugate of the partial of
/// `f` with respect to the conjugate variable.
pub fn partial_of_conj<F>(f: F, w: Wirtinger, a: Complex, b: Complex, h: f64) -> Result<Complex>
where
    F: Fn(Complex, Complex) -> Result<Complex>,
{
    partial(|a, b| Ok(f(a, b)?.conj()), w, a, b, h)
}

/// Residuals of the Cauchy–Riemann system of an argument class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassCrReport {
    pub class: ArgClass,
    /// `max(|φ₁_{a□} − s φ₂_{b◇}|, |φ₂_{a□} + s φ₁_{b◇}|)`, `s = ±1` by type.
    pub cr_residual: f64,
    /// Size of the derivatives with respect to the opposite conjugates, which
    /// vanish when each component is (anti)holomorphic as the class requires.
    pub holomorphy_residual: f64,
    pub residual: f64,
    /// Largest real partial, for scaling tolerances.
    pub scale: f64,
}

fn class_wirtinger(class: ArgClass) -> (Wirtinger, Wirtinger, Wirtinger, Wirtinger) {
    let (wa, wa_bar) = if class.conj_a { (Wirtinger::AConj, Wirtinger::A) } else { (Wirtinger::A, Wirtinger::AConj) };
    let (wb, wb_bar) = if class.conj_b { (Wirtinger::BConj, Wirtinger::B) } else { (Wirtinger::B, Wirtinger::BConj) };
    (wa, wb, wa_bar, wb_bar)
}

pub fn class_cr_from_gradient(g: &Gradient, class: ArgClass) -> ClassCrReport {
    let (wa, wb, wa_bar, wb_bar) = class_wirtinger(class);
    let s = class.sign();
    let da = g.wirtinger(wa);
    let db = g.wirtinger(wb);
    let cr = (da.a - db.b * s).norm().max((da.b + db.a * s).norm());
    let hol = g.wirtinger(wa_bar).norm().max(g.wirtinger(wb_bar).norm());
    ClassCrReport {
        class,
        cr_residual: cr,
        holomorphy_residual: hol,
        residual: cr.max(hol),
        scale: g.scale(),
    }
}

/// Class Cauchy–Riemann check at `p`.
pub fn check_class_cr(f: &BicomplexFn, class: ArgClass, p: Bicomplex, h: f64) -> Result<ClassCrReport> {
    Ok(class_cr_from_gradient(&gradient(f, p, h)?, class))
}

/// Bicomplex Cauchy–Riemann check: `cr_residual` is `‖∂ψ/∂a + j ⊙ ∂ψ/∂b‖`.
pub fn check_bicomplex_cr(f: &BicomplexFn, p: Bicomplex) -> Result<ClassCrReport> {
    let g = gradient(f, p, default_step(p))?;
    let mut r = class_cr_from_gradient(&g, ArgClass::P);
    r.cr_residual = (g.wirtinger(Wirtinger::A) + g.wirtinger(Wirtinger::B).mul_j()).norm();
    r.residual = r.cr_residual.max(r.holomorphy_residual);
    Ok(r)
}

/// Settings for sampled holomorphy certification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolomorphyOptions {
    pub radius: f64,
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Default for HolomorphyOptions {
    fn default() -> Self {
        HolomorphyOptions { radius: 0.1, samples: 20, tol: 1e-6, seed: 0x5eed }
    }
}

/// A first derivative computed several ways.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeReport {
    pub class: ArgClass,
    pub value: Bicomplex,
    /// Named representations: Wirtinger in `a`, Wirtinger in `b`, and the four
    /// real-partial forms along `x, y, z, u`.
    pub representations: Vec<(&'static str, Bicomplex)>,
    pub max_disagreement: f64,
    pub cr_residual: f64,
    /// True when the class Cauchy–Riemann system held at every sampled point
    /// of a small ball. This is sampled evidence, not a proof.
    pub is_holomorphic: bool,
    pub certification_residual: f64,
    pub certification_samples: usize,
}

fn representations(g: &Gradient, class: ArgClass) -> Vec<(&'static str, Bicomplex)> {
    let (wa, wb, _, _) = class_wirtinger(class);
    let s = class.sign();
    let da = g.wirtinger(wa);
    let db = g.wirtinger(wb);
    let swap = |v: Bicomplex| Bicomplex::new(v.b, -v.a) * s;
    let iy = if class.conj_a { I } else { -I };
    let iu = if class.conj_b { I } else { -I };
    vec![
        ("a", da),
        ("b", swap(db)),
        ("x", g.x),
        ("y", g.y.scale_complex(iy)),
        ("z", swap(g.z)),
        ("u", swap(g.u.scale_complex(iu))),
    ]
}

/// First class derivative of `ψ` at `p`. For class `p` this is the ordinary
/// bicomplex derivative.
pub fn regular_derivative(f: &BicomplexFn, class: ArgClass, p: Bicomplex, opts: HolomorphyOptions) -> Result<DerivativeReport> {
    let h = default_step(p);
    let g = gradient(f, p, h)?;
    let cr = class_cr_from_gradient(&g, class);
    let tol = opts.tol * cr.scale.max(1.0);
    if cr.residual > tol {
        return Err(Error::NotDifferentiable(format!(
            "class {class} Cauchy-Riemann residual {:.3e} at {p}",
            cr.residual
        )));
    }
    let reps = representations(&g, class);
    let mut worst: f64 = 0.0;
    for (i, (_, u)) in reps.iter().enumerate() {
        for (_, v) in &reps[i + 1..] {
            worst = worst.max((*u - *v).norm());
        }
    }
    let mut cert: f64 = cr.residual;
    let mut ok = true;
    for q in sampling::ball(p, opts.radius, opts.samples, opts.seed) {
        match check_class_cr(f, class, q, default_step(q)) {
            Ok(r) => {
                cert = cert.max(r.residual);
                ok &= r.residual <= opts.tol * r.scale.max(1.0);
            }
            Err(_) => ok = false,
        }
    }
    Ok(DerivativeReport {
        class,
        value: reps[0].1,
        representations: reps,
        max_disagreement: worst,
        cr_residual: cr.residual,
        is_holomorphic: ok,
        certification_residual: cert,
        certification_samples: opts.samples,
    })
}

/// Bicomplex derivative `dψ/dp` with all six representations.
pub fn derivative_c2(f: &BicomplexFn, p: Bicomplex) -> Result<DerivativeReport> {
    regular_derivative(f, ArgClass::P, p, HolomorphyOptions::default())
}

/// Derivative as the limit of `(ψ(p + Δ) − ψ(p)) ⊘ Δ` along `Δ = h`, `hi`,
/// `hj` and `hk`, each Richardson-extrapolated.
/// Disagreeing directional limits mean `ψ` is not differentiable at `p`.
pub fn derivative_limit(f: &BicomplexFn, p: Bicomplex, h: f64) -> Result<Bicomplex> {
    let dirs = Axis::ALL.map(Axis::unit);
    let f0 = evaluate(f, p)?;
    let mut limits = Vec::with_capacity(dirs.len());
    for d in dirs {
        const LEVELS: usize = 6;
        let mut table: Vec<Vec<Bicomplex>> = Vec::with_capacity(LEVELS);
        for k in 0..LEVELS {
            let step = d * (h / f64::powi(2.0, k as i32));
            let q = (evaluate(f, p + step)? - f0).div(step)?;
            let mut row = vec![q];
            for m in 1..=k {
                let w = f64::powi(2.0, m as i32);
                let v = (row[m - 1] * w - table[k - 1][m - 1]) * (1.0 / (w - 1.0));
                row.push(v);
            }
            table.push(row);
        }
        limits.push(table[LEVELS - 1][LEVELS - 1]);
    }
    let base = limits[0];
    let tol = 1e-6 * base.norm().max(1.0);
    for (d, l) in dirs.iter().zip(&limits).skip(1) {
        if (*l - base).norm() > tol {
            return Err(Error::NotDifferentiable(format!(
                "difference quotients along {d} and 1 disagree by {:.3e} at {p}",
                (*l - base).norm()
            )));
        }
    }
    Ok(base)
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

// Richardson-extrapolated central difference for `gⁿ(0)` from base step `h0`.
fn nth_richardson(g: &impl Fn(f64) -> Result<Bicomplex>, n: u32, h0: f64) -> Result<Bicomplex> {
    let raw = |h: f64| -> Result<Bicomplex> {
        let mut s = Bicomplex::zero();
        for k in 0..=n {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            s = s + g((n as f64 / 2.0 - k as f64) * h)? * (sign * binomial(n, k));
        }
        Ok(s * (1.0 / h.powi(n as i32)))
    };
    const LEVELS: usize = 4;
    let mut prev: Vec<Bicomplex> = Vec::new();
    for k in 0..LEVELS {
        let mut row = vec![raw(h0 / f64::powi(2.0, k as i32))?];
        for m in 1..=k {
            let w = f64::powi(4.0, m as i32);
            row.push((row[m - 1] * w - prev[m - 1]) * (1.0 / (w - 1.0)));
        }
        prev = row;
    }
    Ok(prev[LEVELS - 1])
}

/// `gⁿ(0)`: Richardson tables at base steps `h0, h0/4, h0/16, …`. A step
/// is accepted once the next finer table agrees with it to within that
/// table's rounding noise. Otherwise the finer estimate of the best-agreeing
/// neighbouring pair is kept, which is what poles and branch cuts need.
fn nth_central(g: impl Fn(f64) -> Result<Bicomplex>, n: u32, h0: f64) -> Result<Bicomplex> {
    const TRIES: i32 = 5;
    // Finest step of a table is h/2³; extrapolation roughly doubles the noise.
    let scale = g(0.0)?.norm().max(1.0);
    let noise = |h: f64| 4.0 * f64::EPSILON * f64::powi(2.0, n as i32) * scale / (h / 8.0).powi(n as i32);
    let mut best: Option<(f64, Bicomplex)> = None;
    let mut last = nth_richardson(&g, n, h0)?;
    for k in 1..TRIES {
        let h = h0 / f64::powi(4.0, k);
        let next = nth_richardson(&g, n, h)?;
        let gap = (next - last).norm();
        if gap <= noise(h) {
            return Ok(last);
        }
        if best.is_none_or(|(b, _)| gap < b) {
            best = Some((gap, next));
        }
        last = next;
    }
    Ok(best.expect("at least one comparison").1)
}

fn fd_step(n: u32) -> f64 {
    [0.0, 0.05, 0.1, 0.3, 0.5, 0.7, 0.9][n as usize]
}

/// `ψ⁽ⁿ⁾(p)`. Uses the analytic derivative when supplied (`n ≤ 20`), otherwise
/// finite differences along `x` (`n ≤ 6`).
pub fn derivative_n(f: &BicomplexFn, p: Bicomplex, n: u32) -> Result<Bicomplex> {
    if n == 0 {
        return evaluate(f, p);
    }
    if let Some(d) = f.analytic_derivative(p, n) {
        if n > MAX_ANALYTIC_ORDER {
            return Err(Error::OrderTooHigh { order: n, max: MAX_ANALYTIC_ORDER });
        }
        return d;
    }
    derivative_n_fd(f, p, n)
}

/// `ψ⁽ⁿ⁾(p)` by finite differences along `x`, ignoring any analytic derivative.
pub fn derivative_n_fd(f: &BicomplexFn, p: Bicomplex, n: u32) -> Result<Bicomplex> {
    if n > MAX_FD_ORDER {
        return Err(Error::OrderTooHigh { order: n, max: MAX_FD_ORDER });
    }
    if n == 0 {
        return evaluate(f, p);
    }
    nth_central(|t| evaluate(f, p + Bicomplex::from_real(t)), n, fd_step(n))
}

/// `ψ⁽ⁿ⁾(p)` from derivatives along `z`: `(±j)⁻ⁿ ⊙ ∂ⁿψ/∂zⁿ`, the sign
/// following the class type.
pub fn derivative_n_b(f: &BicomplexFn, p: Bicomplex, n: u32) -> Result<Bicomplex> {
    if n > MAX_FD_ORDER {
        return Err(Error::OrderTooHigh { order: n, max: MAX_FD_ORDER });
    }
    if n == 0 {
        return evaluate(f, p);
    }
    let dz = nth_central(|t| evaluate(f, p + Bicomplex::j() * t), n, fd_step(n))?;
    let unit = Bicomplex::j() * f.class().sign();
    Ok(dz * unit.powi(-(n as i32))?)
}

/// Derivative of the principal logarithm, `1 ⊘ q`.
pub fn derivative_blog(q: Bicomplex) -> Result<Bicomplex> {
    q.inverse()
}

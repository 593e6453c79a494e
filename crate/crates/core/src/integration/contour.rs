//! Line integrals, twining numbers, Cauchy's theorem and integral formula,
//! and Green's theorem in the `(a, b)` variables.

use std::f64::consts::{SQRT_2, TAU};

use super::curve::Curve;
use super::quadrature::{integrate, QuadOptions, Quadrature};
use super::surface::{complex_surface_integral, real_two_form_integral, Surface};
use crate::algebra::{Bicomplex, Complex, I};
use crate::calculus::{class_cr_from_gradient, d1, default_step, Gradient};
use crate::error::{Error, Result};
use crate::function::{ArgClass, BicomplexFn};

fn eval(f: &BicomplexFn, p: Bicomplex) -> Result<Bicomplex> {
    f.eval(p)
}

/// `∫_Γ ψ(p) ⊙ dp = ∫ ψ(p(t)) ⊙ p′(t) dt`
pub fn line_integral(f: &BicomplexFn, curve: &Curve, opts: &QuadOptions) -> Result<Quadrature<Bicomplex>> {
    let g = |t: f64| Ok(eval(f, curve.point(t))? * curve.tangent(t));
    integrate(&g, &curve.knots(), opts)
}

/// `∫_Γ ψ(p) ‖dp‖`
pub fn norm_line_integral(f: &BicomplexFn, curve: &Curve, opts: &QuadOptions) -> Result<Quadrature<Bicomplex>> {
    let g = |t: f64| Ok(eval(f, curve.point(t))? * curve.tangent(t).norm());
    integrate(&g, &curve.knots(), opts)
}

pub fn curve_length(curve: &Curve, opts: &QuadOptions) -> Result<f64> {
    let g = |t: f64| Ok(curve.tangent(t).norm());
    Ok(integrate(&g, &curve.knots(), opts)?.value)
}

/// Size estimates for `‖∫_Γ ψ ⊙ dp‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlBound {
    /// Largest sampled `‖ψ‖` on the curve.
    pub max_norm: f64,
    pub length: f64,
    /// `M·L`.
    pub bound: f64,
    /// `√2·M·L`. The bicomplex norm satisfies `‖x ⊙ y‖ ≤ √2 ‖x‖ ‖y‖` and no
    /// better, so only this bound holds for every integrand.
    pub strict_bound: f64,
}

pub fn ml_bound(f: &BicomplexFn, curve: &Curve, samples: usize, opts: &QuadOptions) -> Result<MlBound> {
    let (t0, t1) = curve.range();
    let norms = opts.exec.map_range(samples + 1, |k| {
        let t = t0 + (t1 - t0) * k as f64 / samples as f64;
        eval(f, curve.point(t)).map(Bicomplex::norm)
    });
    let mut m: f64 = 0.0;
    for n in norms {
        m = m.max(n?);
    }
    let length = curve_length(curve, opts)?;
    Ok(MlBound { max_norm: m, length, bound: m * length, strict_bound: SQRT_2 * m * length })
}

/// `∫_Γ φ₁ da + φ₂ db`, assembled from the real one-forms
/// `ξ₁dx − ξ₂dy + η₁dz − η₂du + i(ξ₂dx + ξ₁dy + η₂dz + η₁du)`.
pub fn complex_line_integral<F1, F2>(phi1: &F1, phi2: &F2, curve: &Curve, opts: &QuadOptions) -> Result<Quadrature<Complex>>
where
    F1: Fn(Complex, Complex) -> Result<Complex> + Sync + ?Sized,
    F2: Fn(Complex, Complex) -> Result<Complex> + Sync + ?Sized,
{
    let g = |t: f64| -> Result<Complex> {
        let p = curve.point(t);
        let [dx, dy, dz, du] = curve.tangent(t).to_quadruple();
        let (x1, x2) = (phi1(p.a, p.b)?.re, phi1(p.a, p.b)?.im);
        let (e1, e2) = (phi2(p.a, p.b)?.re, phi2(p.a, p.b)?.im);
        Ok(Complex::new(
            x1 * dx - x2 * dy + e1 * dz - e2 * du,
            x2 * dx + x1 * dy + e2 * dz + e1 * du,
        ))
    };
    integrate(&g, &curve.knots(), opts)
}

/// Integrals of one map along several curves with common end points.
#[derive(Debug, Clone, PartialEq)]
pub struct PathIndependence {
    pub values: Vec<Bicomplex>,
    pub max_deviation: f64,
    pub independent: bool,
}

pub fn path_independence_check(f: &BicomplexFn, curves: &[Curve], tol: f64, opts: &QuadOptions) -> Result<PathIndependence> {
    let first = curves.first().ok_or_else(|| Error::InvalidInput("no curves given".into()))?;
    for c in curves {
        let scale = first.start().norm().max(first.end().norm()).max(1.0);
        if (c.start() - first.start()).norm() > 1e-12 * scale || (c.end() - first.end()).norm() > 1e-12 * scale {
            return Err(Error::InvalidInput(format!("{} does not share end points with {}", c.name(), first.name())));
        }
    }
    let mut values = Vec::with_capacity(curves.len());
    for c in curves {
        values.push(line_integral(f, c, opts)?.value);
    }
    let max_deviation = values.iter().map(|v| (*v - values[0]).norm()).fold(0.0, f64::max);
    Ok(PathIndependence { independent: max_deviation <= tol, values, max_deviation })
}

/// Tolerance for snapping a twining number to integers.
pub const SNAP_TOL: f64 = 1e-6;

/// Samples checked for `p(t) − p₀` singular before integrating.
pub const SINGULARITY_SAMPLES: usize = 1024;

/// `v = (1 ⊘ 2πj) ⊙ ∮ dp ⊘ (p − p₀)`, snapped to `(m, −in)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwiningNumber {
    pub m: i64,
    pub n: i64,
    /// `(m, −in)`
    pub value: Bicomplex,
    pub raw: Bicomplex,
    pub residual: f64,
    /// `∮ dp ⊘ (p − p₀)` itself.
    pub integral: Bicomplex,
}

impl TwiningNumber {
    /// Winding of the projection onto the `a`-plane, `(1 ⊘ 2πi) ⊙ ∮`.
    pub fn complex_winding(&self) -> Bicomplex {
        self.integral.scale_complex(Complex::new(0.0, -1.0 / TAU))
    }
}

fn inv_two_pi_j() -> Bicomplex {
    Bicomplex::j() * (-1.0 / TAU)
}

fn closed(curve: &Curve) -> Result<()> {
    if curve.is_closed() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{} is not closed", curve.name())))
    }
}

fn scan_singular(curve: &Curve, p0: Bicomplex, opts: &QuadOptions) -> Result<()> {
    let (t0, t1) = curve.range();
    let hits = opts.exec.map_range(SINGULARITY_SAMPLES, |k| {
        let t = t0 + (t1 - t0) * k as f64 / SINGULARITY_SAMPLES as f64;
        (curve.point(t) - p0).is_singular().then_some(t)
    });
    match hits.into_iter().flatten().next() {
        Some(t) => Err(Error::SingularOnCurve { t }),
        None => Ok(()),
    }
}

fn weighted_contour(f: &BicomplexFn, curve: &Curve, p0: Bicomplex, opts: &QuadOptions) -> Result<Bicomplex> {
    let g = |t: f64| -> Result<Bicomplex> {
        let d = curve.point(t) - p0;
        let inv = d.inverse().map_err(|_| Error::SingularOnCurve { t })?;
        Ok(eval(f, curve.point(t))? * inv * curve.tangent(t))
    };
    Ok(integrate(&g, &curve.knots(), opts)?.value)
}

pub fn twining_number(curve: &Curve, p0: Bicomplex, opts: &QuadOptions) -> Result<TwiningNumber> {
    closed(curve)?;
    scan_singular(curve, p0, opts)?;
    let one = BicomplexFn::total("one", |_| Bicomplex::one());
    let integral = weighted_contour(&one, curve, p0, opts)?;
    let raw = inv_two_pi_j() * integral;
    let m = raw.a.re.round();
    let n = (-raw.b.im).round();
    let value = Bicomplex::new(Complex::new(m, 0.0), Complex::new(0.0, -n));
    let residual = (raw - value).norm();
    if residual > SNAP_TOL {
        return Err(Error::NonIntegerResult { residual, raw: raw.to_quadruple() });
    }
    Ok(TwiningNumber { m: m as i64, n: n as i64, value, raw, residual, integral })
}

/// Sampled evidence that a surface meets the hypotheses of Cauchy's theorem:
/// `ψ` holomorphic in `p` and, for the integral formula, `p − p₀` invertible
/// away from `p₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceConditions {
    pub samples: usize,
    pub max_cr_residual: f64,
    /// Smallest `|CN(p − p₀)| / ‖p − p₀‖²` over samples away from `p₀`, when
    /// a point was given.
    pub min_relative_cn: Option<f64>,
}

const SURFACE_GRID: usize = 31;
const SURFACE_CR_TOL: f64 = 1e-6;

fn check_surface(f: &BicomplexFn, s: &Surface, p0: Option<Bicomplex>, opts: &QuadOptions) -> Result<SurfaceConditions> {
    let ((h0, h1), (t0, t1)) = s.ranges();
    let n = SURFACE_GRID;
    let pts: Vec<Bicomplex> = (0..=n)
        .flat_map(|i| (0..=n).map(move |k| (i, k)))
        .map(|(i, k)| s.point(h0 + (h1 - h0) * i as f64 / n as f64, t0 + (t1 - t0) * k as f64 / n as f64))
        .collect();
    let results = opts.exec.map(&pts, |&p| -> Result<(f64, Option<f64>)> {
        let g = crate::calculus::gradient(f, p, default_step(p))
            .map_err(|e| Error::PreconditionUnverified(format!("{} is not defined on the surface: {e}", f.name())))?;
        let cr = class_cr_from_gradient(&g, ArgClass::P);
        if cr.residual > SURFACE_CR_TOL * cr.scale.max(1.0) {
            return Err(Error::PreconditionUnverified(format!(
                "{} fails its Cauchy-Riemann system on the surface at {p} (residual {:.3e})",
                f.name(),
                cr.residual
            )));
        }
        let rel = p0.and_then(|c| {
            let d = p - c;
            (d.norm() > 1e-9).then(|| d.cn().norm() / d.norm_sqr())
        });
        Ok((cr.residual, rel))
    });
    let mut out = SurfaceConditions { samples: pts.len(), max_cr_residual: 0.0, min_relative_cn: None };
    for r in results {
        let (cr, rel) = r?;
        out.max_cr_residual = out.max_cr_residual.max(cr);
        if let Some(v) = rel {
            out.min_relative_cn = Some(out.min_relative_cn.map_or(v, |m: f64| m.min(v)));
        }
    }
    if let Some(m) = out.min_relative_cn {
        if m <= crate::algebra::SINGULAR_TOL {
            return Err(Error::PreconditionUnverified("p − p₀ is singular somewhere on the surface".into()));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyTheorem {
    pub integral: Bicomplex,
    /// `‖∮ ψ ⊙ dp‖`
    pub residual: f64,
    pub surface: Option<SurfaceConditions>,
}

/// `∮_Γ ψ ⊙ dp`, expected to vanish for `ψ` holomorphic on a surface bounded
/// by `Γ`. The surface, when given, is sampled for the hypotheses.
pub fn cauchy_theorem_check(f: &BicomplexFn, curve: &Curve, surface: Option<&Surface>, opts: &QuadOptions) -> Result<CauchyTheorem> {
    closed(curve)?;
    let conditions = surface.map(|s| check_surface(f, s, None, opts)).transpose()?;
    let integral = line_integral(f, curve, opts)?.value;
    Ok(CauchyTheorem { integral, residual: integral.norm(), surface: conditions })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyFormula {
    /// `(1 ⊘ 2πj) ⊙ ∮ ψ(p) ⊘ (p − p₀) ⊙ dp`, predicted to equal `ψ(p₀) ⊙ v`.
    pub raw: Bicomplex,
    /// `(1 ⊘ 2πi) ⊙ ∮ …`, predicted to equal `ψ(p₀) ⊙ v ⊙ (−k)`. For a curve
    /// with `v = (0, −i)` this is `ψ(p₀)` itself.
    pub reduced: Bicomplex,
    pub twining: TwiningNumber,
    pub value_at_center: Bicomplex,
    pub residual: f64,
    pub reduced_residual: f64,
    pub surface: Option<SurfaceConditions>,
}

pub fn cauchy_integral_formula(
    f: &BicomplexFn,
    curve: &Curve,
    p0: Bicomplex,
    surface: Option<&Surface>,
    opts: &QuadOptions,
) -> Result<CauchyFormula> {
    let twining = twining_number(curve, p0, opts)?;
    let conditions = surface.map(|s| check_surface(f, s, Some(p0), opts)).transpose()?;
    let integral = weighted_contour(f, curve, p0, opts)?;
    let raw = inv_two_pi_j() * integral;
    let reduced = integral.scale_complex(Complex::new(0.0, -1.0 / TAU));
    let center = eval(f, p0)?;
    let predicted = center * twining.value;
    let predicted_reduced = predicted * -Bicomplex::k();
    Ok(CauchyFormula {
        raw,
        reduced,
        twining,
        value_at_center: center,
        residual: (raw - predicted).norm(),
        reduced_residual: (reduced - predicted_reduced).norm(),
        surface: conditions,
    })
}

/// Both sides of `∮ φ₁da + φ₂db = ∫∫ (∂φ₂/∂a − ∂φ₁/∂b) da ∧ db`, which holds
/// when `φ₁, φ₂` are holomorphic in `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenCheck {
    pub line: Complex,
    pub surface: Complex,
    pub residual: f64,
    /// Real and imaginary parts checked through their real component
    /// identities.
    pub components: [ComponentGreen; 2],
}

/// One real component: the boundary integral of a real one-form, the
/// surface integral of its reduced exterior derivative, and the surface
/// integral of the full exterior derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentGreen {
    pub line: f64,
    pub identity: f64,
    pub stokes: f64,
}

fn pair_gradient<F1, F2>(phi1: &F1, phi2: &F2, p: Bicomplex) -> Result<Gradient>
where
    F1: Fn(Complex, Complex) -> Result<Complex> + ?Sized,
    F2: Fn(Complex, Complex) -> Result<Complex> + ?Sized,
{
    let h = default_step(p);
    let along = |e: Bicomplex| {
        d1(
            |t| {
                let q = p + e * t;
                Ok(Bicomplex::new(phi1(q.a, q.b)?, phi2(q.a, q.b)?))
            },
            h,
        )
    };
    Ok(Gradient {
        x: along(Bicomplex::one())?,
        y: along(Bicomplex::i())?,
        z: along(Bicomplex::j())?,
        u: along(Bicomplex::k())?,
    })
}

// Real partials ∂ᵢψₖ as a 4×4 table: row i = x, y, z, u; column k = ψ1..ψ4.
fn real_table(g: &Gradient) -> [[f64; 4]; 4] {
    [g.x.to_quadruple(), g.y.to_quadruple(), g.z.to_quadruple(), g.u.to_quadruple()]
}

pub fn green_theorem_check<F1, F2>(phi1: &F1, phi2: &F2, s: &Surface, opts: &QuadOptions) -> Result<GreenCheck>
where
    F1: Fn(Complex, Complex) -> Result<Complex> + Sync + ?Sized,
    F2: Fn(Complex, Complex) -> Result<Complex> + Sync + ?Sized,
{
    let boundary = s.boundary();
    let line = complex_line_integral(phi1, phi2, &boundary, opts)?.value;
    let rhs = |a: Complex, b: Complex| -> Result<Complex> {
        let g = pair_gradient(phi1, phi2, Bicomplex::new(a, b))?;
        let da = (g.x - g.y.scale_complex(I)) * 0.5;
        let db = (g.z - g.u.scale_complex(I)) * 0.5;
        Ok(da.b - db.a)
    };
    let surface = complex_surface_integral(&rhs, s, opts)?.value;

    // Real one-forms A = Re and Im of φ₁da + φ₂db over (dx, dy, dz, du).
    let forms: [fn([f64; 4]) -> [f64; 4]; 2] = [
        |[p1, p2, p3, p4]| [p1, -p2, p3, -p4],
        |[p1, p2, p3, p4]| [p2, p1, p4, p3],
    ];
    let mut components = [ComponentGreen { line: 0.0, identity: 0.0, stokes: 0.0 }; 2];
    for (idx, form) in forms.iter().enumerate() {
        let a_of = |p: Bicomplex| -> Result<[f64; 4]> {
            Ok(form(Bicomplex::new(phi1(p.a, p.b)?, phi2(p.a, p.b)?).to_quadruple()))
        };
        let g = |t: f64| -> Result<f64> {
            let a = a_of(boundary.point(t))?;
            let d = boundary.tangent(t).to_quadruple();
            Ok((0..4).map(|k| a[k] * d[k]).sum())
        };
        let line = integrate(&g, &boundary.knots(), opts)?.value;
        let identity_form = |p: Bicomplex| -> Result<[f64; 6]> {
            let d = real_table(&pair_gradient(phi1, phi2, p)?);
            let c1 = d[0][2] - d[2][0];
            let c2 = d[0][3] - d[2][1];
            // order: xy, xz, xu, yz, yu, zu
            Ok(if idx == 0 {
                [0.0, c1, -c2, -c2, -c1, 0.0]
            } else {
                [0.0, c2, c1, c1, -c2, 0.0]
            })
        };
        let stokes_form = |p: Bicomplex| -> Result<[f64; 6]> {
            let d = real_table(&pair_gradient(phi1, phi2, p)?);
            // ∂ᵢAⱼ through the linear map from ψ to A.
            let da: Vec<[f64; 4]> = d.iter().map(|row| form(*row)).collect();
            let c = |i: usize, j: usize| da[i][j] - da[j][i];
            Ok([c(0, 1), c(0, 2), c(0, 3), c(1, 2), c(1, 3), c(2, 3)])
        };
        components[idx] = ComponentGreen {
            line,
            identity: real_two_form_integral(&identity_form, s, opts)?.value,
            stokes: real_two_form_integral(&stokes_form, s, opts)?.value,
        };
    }
    Ok(GreenCheck { line, surface, residual: (line - surface).norm(), components })
}

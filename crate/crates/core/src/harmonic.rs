//! Differential operators on bicomplex maps, Fueter equations, Laplacians
//! and sampled classification into argument classes.
//!
//! With `p = x + yi + zj + uk`: `D_a = ∂x + i∂y`, `D_a* = ∂x − i∂y`,
//! `D_b = ∂z + i∂u`, `D_b* = ∂z − i∂u`. An operator pair `(A, B)` acts on
//! `ψ = (φ₁, φ₂)` as `(Aφ₁ − Bφ₂*, Bφ₁* + Aφ₂)`; `L_q = (D_a, D_b)` and
//! `L_q* = (D_a*, −D_b)` multiply to the four-dimensional Laplacian `Δ₄`.

use crate::algebra::{Bicomplex, Complex, I};
use crate::calculus::{class_cr_from_gradient, d1, d2, default_step, second_step, Axis, Gradient};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::function::{ArgClass, BicomplexFn};
use crate::sampling;

pub use crate::calculus::{check_bicomplex_cr, check_class_cr, regular_derivative, ClassCrReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Da,
    DaConj,
    Db,
    DbConj,
    Lq,
    LqConj,
    /// `∂x² + ∂y²`
    Laplace2,
    /// `∂x² + ∂y² + ∂z² + ∂u²`
    Laplace4,
}

type Eval<'a> = dyn Fn(Bicomplex) -> Result<Bicomplex> + Sync + 'a;

fn grad(f: &Eval<'_>, p: Bicomplex, h: f64) -> Result<Gradient> {
    let along = |e: Bicomplex| d1(|t| f(p + e * t), h);
    Ok(Gradient {
        x: along(Axis::X.unit())?,
        y: along(Axis::Y.unit())?,
        z: along(Axis::Z.unit())?,
        u: along(Axis::U.unit())?,
    })
}

fn second(f: &Eval<'_>, p: Bicomplex, axis: Axis, h: f64) -> Result<Bicomplex> {
    let e = axis.unit();
    d2(|t| f(p + e * t), h)
}

fn d_ops(g: &Gradient) -> (Bicomplex, Bicomplex, Bicomplex, Bicomplex) {
    let da = g.x + g.y.scale_complex(I);
    let da_bar = g.x - g.y.scale_complex(I);
    let db = g.z + g.u.scale_complex(I);
    let db_bar = g.z - g.u.scale_complex(I);
    (da, da_bar, db, db_bar)
}

// D_b applied to the conjugates φ₁*, φ₂*: ∂z φ* + i ∂u φ*.
fn db_of_conj(g: &Gradient) -> Bicomplex {
    g.z.conj_components() + g.u.conj_components().scale_complex(I)
}

fn lq(g: &Gradient) -> Bicomplex {
    let (da, _, _, _) = d_ops(g);
    let dbc = db_of_conj(g);
    Bicomplex::new(da.a - dbc.b, dbc.a + da.b)
}

fn lq_conj(g: &Gradient) -> Bicomplex {
    let (_, da_bar, _, _) = d_ops(g);
    let dbc = db_of_conj(g);
    Bicomplex::new(da_bar.a + dbc.b, -dbc.a + da_bar.b)
}

fn apply_eval(kind: OperatorKind, f: &Eval<'_>, p: Bicomplex) -> Result<Bicomplex> {
    let h = default_step(p);
    match kind {
        OperatorKind::Laplace2 => {
            let h = second_step(p);
            Ok(second(f, p, Axis::X, h)? + second(f, p, Axis::Y, h)?)
        }
        OperatorKind::Laplace4 => {
            let h = second_step(p);
            let mut s = Bicomplex::zero();
            for a in Axis::ALL {
                s = s + second(f, p, a, h)?;
            }
            Ok(s)
        }
        _ => {
            let g = grad(f, p, h)?;
            let (da, da_bar, db, db_bar) = d_ops(&g);
            Ok(match kind {
                OperatorKind::Da => da,
                OperatorKind::DaConj => da_bar,
                OperatorKind::Db => db,
                OperatorKind::DbConj => db_bar,
                OperatorKind::Lq => lq(&g),
                OperatorKind::LqConj => lq_conj(&g),
                OperatorKind::Laplace2 | OperatorKind::Laplace4 => unreachable!(),
            })
        }
    }
}

/// Applies an operator to `ψ` at `p`. The `D` operators and Laplacians act
/// component-wise; `L_q` and `L_q*` act as operator pairs.
pub fn apply_operator(kind: OperatorKind, f: &BicomplexFn, p: Bicomplex) -> Result<Bicomplex> {
    apply_eval(kind, &|q| f.eval(q), p)
}

/// Applies a component-wise operator to a complex-valued map of `(a, b)`.
pub fn apply_operator_complex<F>(kind: OperatorKind, f: &F, a: Complex, b: Complex) -> Result<Complex>
where
    F: Fn(Complex, Complex) -> Result<Complex> + Sync + ?Sized,
{
    if matches!(kind, OperatorKind::Lq | OperatorKind::LqConj) {
        return Err(Error::InvalidInput("operator pairs act on bicomplex maps, not complex ones".into()));
    }
    let lifted = |q: Bicomplex| Ok(Bicomplex::from_complex(f(q.a, q.b)?));
    Ok(apply_eval(kind, &lifted, Bicomplex::new(a, b))?.a)
}

/// `‖Δ₄ψ − L_q × (L_q* × ψ)‖` with nested differences.
pub fn laplace_factorization_residual(f: &BicomplexFn, p: Bicomplex) -> Result<f64> {
    let h = second_step(p);
    let inner = |q: Bicomplex| -> Result<Bicomplex> { Ok(lq_conj(&grad(&|r| f.eval(r), q, h)?)) };
    let outer = lq(&grad(&inner, p, h)?);
    Ok((apply_operator(OperatorKind::Laplace4, f, p)? - outer).norm())
}

/// Fueter or conjugate Fueter residuals in both forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FueterReport {
    /// The two complex equations.
    pub c2: [Complex; 2],
    /// The four real equations; `c2[0] = r4[0] + i r4[1]`, `c2[1] = r4[2] + i r4[3]`.
    pub r4: [f64; 4],
    pub residual: f64,
    pub r4_residual: f64,
    /// Largest real partial, for scaling tolerances.
    pub scale: f64,
}

fn real_partials(g: &Gradient) -> [[f64; 4]; 4] {
    [g.x.to_quadruple(), g.y.to_quadruple(), g.z.to_quadruple(), g.u.to_quadruple()]
}

fn report(c2: [Complex; 2], r4: [f64; 4], g: &Gradient) -> FueterReport {
    FueterReport {
        c2,
        r4,
        residual: c2[0].norm().max(c2[1].norm()),
        r4_residual: r4.iter().fold(0.0, |m: f64, v| m.max(v.abs())),
        scale: g.scale(),
    }
}

/// `D_aφ₁ = D_bφ₂*` and `D_bφ₁* = −D_aφ₂`.
pub fn check_fueter(f: &BicomplexFn, p: Bicomplex) -> Result<FueterReport> {
    let g = grad(&|q| f.eval(q), p, default_step(p))?;
    Ok(fueter_from(&g))
}

fn fueter_from(g: &Gradient) -> FueterReport {
    let (da, _, _, _) = d_ops(g);
    let dbc = db_of_conj(g);
    let c2 = [da.a - dbc.b, dbc.a + da.b];
    let [x, y, z, u] = real_partials(g);
    let r4 = [
        x[0] - y[1] - z[2] - u[3],
        x[1] + y[0] + z[3] - u[2],
        x[2] - y[3] + z[0] + u[1],
        x[3] + y[2] - z[1] + u[0],
    ];
    report(c2, r4, g)
}

/// `D_a*φ₁ = −D_bφ₂*` and `D_bφ₁* = D_a*φ₂`.
pub fn check_conjugate_fueter(f: &BicomplexFn, p: Bicomplex) -> Result<FueterReport> {
    let g = grad(&|q| f.eval(q), p, default_step(p))?;
    Ok(conjugate_fueter_from(&g))
}

fn conjugate_fueter_from(g: &Gradient) -> FueterReport {
    let (_, da_bar, _, _) = d_ops(g);
    let dbc = db_of_conj(g);
    let c2 = [da_bar.a + dbc.b, da_bar.b - dbc.a];
    let [x, y, z, u] = real_partials(g);
    let r4 = [
        x[0] + y[1] + z[2] + u[3],
        x[1] - y[0] - z[3] + u[2],
        x[2] + y[3] - z[0] - u[1],
        x[3] - y[2] + z[1] - u[0],
    ];
    report(c2, r4, g)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceReport {
    /// `Δ₄ψ`
    pub value: Bicomplex,
    pub residual: f64,
    /// `max_k |(∂²/∂a□² + ∂²/∂b◇²) φ_k|` in the class variables of `ψ`.
    pub complexified_residual: f64,
}

pub fn check_laplace4(f: &BicomplexFn, p: Bicomplex) -> Result<LaplaceReport> {
    let eval = |q: Bicomplex| f.eval(q);
    let value = apply_eval(OperatorKind::Laplace4, &eval, p)?;
    let h = second_step(p);
    let class = f.class();
    let mixed = |e1: Bicomplex, e2: Bicomplex| d1(|s| d1(|t| eval(p + e1 * s + e2 * t), h), h);
    let wirtinger2 = |a1: Axis, a2: Axis, conj: bool| -> Result<Bicomplex> {
        let xx = second(&eval, p, a1, h)?;
        let yy = second(&eval, p, a2, h)?;
        let xy = mixed(a1.unit(), a2.unit())?;
        let s = if conj { 2.0 } else { -2.0 };
        Ok((xx - yy + xy.scale_complex(I * s)) * 0.25)
    };
    let sum = wirtinger2(Axis::X, Axis::Y, class.conj_a)? + wirtinger2(Axis::Z, Axis::U, class.conj_b)?;
    Ok(LaplaceReport {
        value,
        residual: value.norm(),
        complexified_residual: sum.a.norm().max(sum.b.norm()),
    })
}

/// `E(p) = (e^a cos b*, e^a sin b*)`, the exponential in class `q`.
pub fn e_function() -> BicomplexFn {
    crate::registry::lookup("exp@q").expect("registered")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    pub center: Bicomplex,
    pub radius: f64,
    pub samples: usize,
    pub seed: u64,
    /// Membership threshold on residuals divided by `max(1, scale)`.
    pub tol: f64,
    pub exec: Exec,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            center: Bicomplex::zero(),
            radius: 1.0,
            samples: 64,
            seed: 0xc1a55,
            tol: 1e-6,
            exec: Exec::default(),
        }
    }
}

/// Sampled class membership. Residuals are maxima over the sample of
/// residual / max(1, largest real partial).
#[derive(Debug, Clone, PartialEq)]
pub struct ClassReport {
    pub function: String,
    pub samples: usize,
    /// Points dropped because `ψ` could not be evaluated there.
    pub skipped: usize,
    pub class_residuals: Vec<(ArgClass, f64)>,
    pub members: Vec<ArgClass>,
    pub fueter_residual: f64,
    pub conjugate_fueter_residual: f64,
    pub laplace4_residual: f64,
    pub fueter_regular: bool,
    pub conjugate_fueter_regular: bool,
    pub harmonic: bool,
}

struct PointResiduals {
    classes: [f64; 8],
    fueter: f64,
    conj_fueter: f64,
    laplace: f64,
}

fn residuals_at(f: &BicomplexFn, p: Bicomplex) -> Result<PointResiduals> {
    let g = grad(&|q| f.eval(q), p, default_step(p))?;
    let scale = g.scale().max(1.0);
    let classes = ArgClass::ALL.map(|c| class_cr_from_gradient(&g, c).residual / scale);
    let lap = check_laplace4(f, p)?;
    let f_scale = f.eval(p)?.norm().max(scale);
    Ok(PointResiduals {
        classes,
        fueter: fueter_from(&g).residual / scale,
        conj_fueter: conjugate_fueter_from(&g).residual / scale,
        laplace: lap.residual / f_scale,
    })
}

pub fn classify(f: &BicomplexFn, opts: &ClassifyOptions) -> Result<ClassReport> {
    let pts = sampling::ball(opts.center, opts.radius, opts.samples, opts.seed);
    let results = opts.exec.map(&pts, |&p| residuals_at(f, p));
    let mut classes = [0.0f64; 8];
    let (mut fu, mut cf, mut lap) = (0.0f64, 0.0f64, 0.0f64);
    let mut used = 0;
    for r in results {
        let Ok(r) = r else { continue };
        used += 1;
        for (c, v) in classes.iter_mut().zip(r.classes) {
            *c = c.max(v);
        }
        fu = fu.max(r.fueter);
        cf = cf.max(r.conj_fueter);
        lap = lap.max(r.laplace);
    }
    if used == 0 {
        return Err(Error::EvaluationFailure(format!("{} could not be evaluated at any sample point", f.name())));
    }
    let class_residuals: Vec<(ArgClass, f64)> = ArgClass::ALL.into_iter().zip(classes).collect();
    let members = class_residuals.iter().filter(|(_, r)| *r <= opts.tol).map(|(c, _)| *c).collect();
    Ok(ClassReport {
        function: f.name(),
        samples: used,
        skipped: opts.samples - used,
        class_residuals,
        members,
        fueter_residual: fu,
        conjugate_fueter_residual: cf,
        laplace4_residual: lap,
        fueter_regular: fu <= opts.tol,
        conjugate_fueter_regular: cf <= opts.tol,
        harmonic: lap <= opts.tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::lookup;

    fn pt() -> Bicomplex {
        Bicomplex::from_quadruple([0.3, -0.2, 0.5, 0.4])
    }

    #[test]
    fn d_operators_on_exp_of_a() {
        let f = |a: Complex, _b: Complex| Ok(a.exp());
        let (a, b) = (Complex::new(0.2, 0.4), Complex::new(0.1, 0.0));
        assert!(apply_operator_complex(OperatorKind::Da, &f, a, b).unwrap().norm() < 1e-8);
        let dbar = apply_operator_complex(OperatorKind::DaConj, &f, a, b).unwrap();
        assert!((dbar - a.exp() * 2.0).norm() < 1e-10);
        assert!(apply_operator_complex(OperatorKind::Laplace2, &f, a, b).unwrap().norm() < 1e-6);
        assert!(apply_operator_complex(OperatorKind::Lq, &f, a, b).is_err());
    }

    #[test]
    fn laplace2_factors_through_d_operators() {
        // D_a(D_a* g) = Δ₂ g for g = |a|² + x y, Δ₂ g = 4.
        let g = |a: Complex, _b: Complex| Ok(Complex::new(a.norm_sqr() + a.re * a.im, 0.0));
        let (a, b) = (Complex::new(0.7, -0.3), Complex::new(0.0, 0.0));
        let inner = |a: Complex, b: Complex| apply_operator_complex(OperatorKind::DaConj, &g, a, b);
        let outer = apply_operator_complex(OperatorKind::Da, &inner, a, b).unwrap();
        let lap = apply_operator_complex(OperatorKind::Laplace2, &g, a, b).unwrap();
        assert!((outer - 4.0).norm() < 1e-6 && (lap - 4.0).norm() < 1e-6);
    }

    #[test]
    fn e_is_fueter_regular_and_harmonic() {
        let e = e_function();
        let r = check_fueter(&e, pt()).unwrap();
        assert!(r.residual < 1e-8 && r.r4_residual < 1e-8);
        assert!(check_laplace4(&e, pt()).unwrap().residual < 1e-6);
        assert!(check_conjugate_fueter(&e, pt()).unwrap().residual > 1e-2);
    }

    #[test]
    fn conjugate_fueter_for_conjugate_class() {
        let f = lookup("cos@s∪").unwrap();
        assert!(check_conjugate_fueter(&f, pt()).unwrap().residual < 1e-7);
        assert!(check_fueter(&f, pt()).unwrap().residual > 1e-2);
    }

    #[test]
    fn c2_and_r4_forms_agree() {
        let f = lookup("theta").unwrap();
        for r in [check_fueter(&f, pt()).unwrap(), check_conjugate_fueter(&f, pt()).unwrap()] {
            assert!((r.c2[0] - Complex::new(r.r4[0], r.r4[1])).norm() < 1e-12);
            assert!((r.c2[1] - Complex::new(r.r4[2], r.r4[3])).norm() < 1e-12);
        }
    }

    #[test]
    fn laplacian_of_norm_square_is_eight() {
        let f = lookup("normsq").unwrap();
        let r = check_laplace4(&f, pt()).unwrap();
        assert!((r.value - Bicomplex::from_real(8.0)).norm() < 1e-5);
    }

    #[test]
    fn laplacian_factorises() {
        for name in ["exp", "normsq", "theta", "E"] {
            let f = lookup(name).unwrap();
            assert!(laplace_factorization_residual(&f, pt()).unwrap() < 1e-5, "{name}");
        }
    }

    #[test]
    fn complexified_laplacian_vanishes_in_class() {
        for c in ArgClass::ALL {
            let f = lookup("sin").unwrap().to_argument_class(c);
            assert!(check_laplace4(&f, pt()).unwrap().complexified_residual < 1e-6, "{c}");
        }
    }

    #[test]
    fn classify_exp_and_e() {
        let opts = ClassifyOptions { samples: 24, ..Default::default() };
        let exp = classify(&lookup("exp").unwrap(), &opts).unwrap();
        assert_eq!(exp.members, vec![ArgClass::P]);
        assert!(exp.harmonic);
        let e = classify(&e_function(), &opts).unwrap();
        assert_eq!(e.members, vec![ArgClass::Q]);
        assert!(e.fueter_regular && !e.conjugate_fueter_regular);
        let zero = classify(&lookup("zero").unwrap(), &opts).unwrap();
        assert_eq!(zero.members.len(), 8);
        let theta = classify(&lookup("theta").unwrap(), &opts).unwrap();
        assert!(theta.members.is_empty());
    }
}

//! Command-line front end: argument handling, dispatch and the versioned
//! JSON envelope.

pub mod families;
pub mod json;
pub mod parse;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperplex::calculus::{default_step, derivative_n, regular_derivative, HolomorphyOptions};
use hyperplex::harmonic::{classify, ClassifyOptions};
use hyperplex::integration::quadrature::DEFAULT_TOL;
use hyperplex::integration::{
    cauchy_integral_formula, curve_length, green_theorem_check, line_integral, ml_bound, taylor_expand_with,
    twining_number, Curve, QuadOptions, Surface, TaylorOptions,
};
use hyperplex::registry;
use hyperplex::{Bicomplex, BicomplexFn, Error};
use serde_json::{json, Map, Value};

use families::{Param, Values};
use json::{bicomplex, complex, num};
pub use parse::{parse_bicomplex, ParseError};

pub const SCHEMA: &str = "hyperplex.v1";

/// Environment variable overriding the default quadrature tolerance.
pub const TOL_ENV: &str = "HYPERPLEX_TOL";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hyperplex", version, about = "Bicomplex evaluation, calculus and contour integration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Name {
    Eval,
    Diff,
    Integrate,
    Twine,
    Cauchy,
    Taylor,
    Classify,
    Green,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a function at a point
    Eval(Flags),
    /// Derivative of a function with all of its representations
    Diff(Flags),
    /// Line integral of a function along a curve
    Integrate(Flags),
    /// Twining number of a closed curve about a point
    Twine(Flags),
    /// Cauchy integral formula on a closed curve
    Cauchy(Flags),
    /// Taylor coefficients and remainder bound
    Taylor(Flags),
    /// Sampled argument-class, Fueter and Laplace classification
    Classify(Flags),
    /// Green's theorem check for the two components of a function
    Green(Flags),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct Flags {
    /// Registry function, optionally with an argument class: exp, cos@q, sin@r∪
    #[arg(long = "fn", value_name = "NAME")]
    function: Option<String>,
    /// Bicomplex literal: "(x+yi),(z+ui)", "x,y,z,u" or a real
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Expansion or sampling centre (bicomplex literal)
    #[arg(long, allow_hyphen_values = true)]
    center: Option<String>,
    /// Curve family: double-circle, twist, complex-circle
    #[arg(long)]
    curve: Option<String>,
    /// Radius parameter
    #[arg(long = "R", allow_hyphen_values = true)]
    r: Option<f64>,
    /// Base point (bicomplex literal)
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<String>,
    /// Surface family: disk-surface, double-disk, flat-patch
    #[arg(long)]
    surface: Option<String>,
    /// Derivative order (diff) or number of Taylor terms (taylor)
    #[arg(long)]
    order: Option<u32>,
    /// Sample count for certification, bounds or classification
    #[arg(long)]
    samples: Option<usize>,
    /// Tolerance: quadrature target, or membership threshold for classify
    #[arg(long, allow_hyphen_values = true)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Flag {
    Fn,
    Point,
    Center,
    Curve,
    R,
    P0,
    Surface,
    Order,
    Samples,
    Tol,
}

impl Flag {
    const ALL: [Flag; 10] = [
        Flag::Fn,
        Flag::Point,
        Flag::Center,
        Flag::Curve,
        Flag::R,
        Flag::P0,
        Flag::Surface,
        Flag::Order,
        Flag::Samples,
        Flag::Tol,
    ];

    fn name(self) -> &'static str {
        match self {
            Flag::Fn => "--fn",
            Flag::Point => "--point",
            Flag::Center => "--center",
            Flag::Curve => "--curve",
            Flag::R => "--R",
            Flag::P0 => "--p0",
            Flag::Surface => "--surface",
            Flag::Order => "--order",
            Flag::Samples => "--samples",
            Flag::Tol => "--tol",
        }
    }

    fn of(p: Param) -> Flag {
        match p {
            Param::R => Flag::R,
            Param::P0 => Flag::P0,
            Param::Center => Flag::Center,
        }
    }
}

impl Flags {
    fn raw(&self, f: Flag) -> Option<String> {
        match f {
            Flag::Fn => self.function.clone(),
            Flag::Point => self.point.clone(),
            Flag::Center => self.center.clone(),
            Flag::Curve => self.curve.clone(),
            Flag::R => self.r.map(|v| v.to_string()),
            Flag::P0 => self.p0.clone(),
            Flag::Surface => self.surface.clone(),
            Flag::Order => self.order.map(|v| v.to_string()),
            Flag::Samples => self.samples.map(|v| v.to_string()),
            Flag::Tol => self.tol.map(|v| v.to_string()),
        }
    }
}

/// Flags a command needs and flags it merely accepts. Curve and surface
/// parameters are accepted on top of these when the chosen family declares
/// them.
fn signature(cmd: Name) -> (&'static [Flag], &'static [Flag]) {
    match cmd {
        Name::Eval => (&[Flag::Fn, Flag::Point], &[]),
        Name::Diff => (&[Flag::Fn, Flag::Point], &[Flag::Order, Flag::Samples]),
        Name::Integrate => (&[Flag::Fn, Flag::Curve], &[Flag::Tol, Flag::Samples]),
        Name::Twine => (&[Flag::Curve, Flag::P0], &[Flag::Tol]),
        Name::Cauchy => (&[Flag::Fn, Flag::Curve, Flag::P0], &[Flag::Surface, Flag::Tol]),
        Name::Taylor => (&[Flag::Fn, Flag::Order], &[Flag::Center, Flag::Point, Flag::Samples]),
        Name::Classify => (&[Flag::Fn], &[Flag::Center, Flag::R, Flag::Samples, Flag::Tol]),
        Name::Green => (&[Flag::Fn, Flag::Surface], &[Flag::Tol]),
    }
}

fn command_name(c: Name) -> &'static str {
    match c {
        Name::Eval => "eval",
        Name::Diff => "diff",
        Name::Integrate => "integrate",
        Name::Twine => "twine",
        Name::Cauchy => "cauchy",
        Name::Taylor => "taylor",
        Name::Classify => "classify",
        Name::Green => "green",
    }
}

/// What a finished invocation writes and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Parse { flag: &'static str, err: ParseError },
    Domain(Error),
}

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "UsageError",
            Failure::Parse { .. } => "ParseError",
            Failure::Domain(e) => e.code(),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Parse { flag, err } => format!("{flag}: {err}"),
            Failure::Domain(e) => e.to_string(),
        }
    }

    fn exit(&self) -> i32 {
        match self {
            Failure::Domain(_) => EXIT_DOMAIN,
            _ => EXIT_USAGE,
        }
    }

    fn details(&self) -> Value {
        match self {
            Failure::Parse { err, .. } => json!({ "position": err.position }),
            Failure::Domain(Error::NonIntegerResult { residual, raw }) => {
                json!({ "raw": bicomplex(Bicomplex::from_quadruple(*raw)), "residual": num(*residual) })
            }
            Failure::Domain(Error::SingularOnCurve { t }) => json!({ "t": num(*t) }),
            _ => Value::Null,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

#[derive(Default)]
struct Report {
    result: Map<String, Value>,
    residuals: Map<String, Value>,
    diagnostics: Map<String, Value>,
}

impl Report {
    fn result(&mut self, k: &str, v: Value) {
        self.result.insert(k.into(), v);
    }
    fn residual(&mut self, k: &str, v: f64) {
        self.residuals.insert(k.into(), num(v));
    }
    fn diag(&mut self, k: &str, v: Value) {
        self.diagnostics.insert(k.into(), v);
    }
}

/// Fully resolved inputs. Every name has been looked up before any of
/// these exist, so unknown names never reach a computation.
struct Inputs {
    function: Option<BicomplexFn>,
    curve: Option<(&'static str, Curve)>,
    surface: Option<(&'static str, Surface)>,
    point: Option<Bicomplex>,
    center: Option<Bicomplex>,
    p0: Option<Bicomplex>,
    r: Option<f64>,
    order: Option<u32>,
    samples: Option<usize>,
    tol: Option<f64>,
    env_tol: Option<f64>,
}

impl Inputs {
    fn function(&self) -> &BicomplexFn {
        self.function.as_ref().expect("validated")
    }

    fn quad(&self) -> QuadOptions {
        QuadOptions::with_tol(self.tol.or(self.env_tol).unwrap_or(DEFAULT_TOL))
    }
}

fn resolve(cmd: Name, flags: &Flags, env_tol: Option<&str>) -> Result<Inputs, Failure> {
    let (required, optional) = signature(cmd);
    let name = command_name(cmd);
    for f in required {
        if flags.raw(*f).is_none() {
            return Err(Failure::Usage(format!("{name} requires {}", f.name())));
        }
    }
    // Names first: functions, curves and surfaces.
    let function = match &flags.function {
        Some(n) => Some(resolve_function(n)?),
        None => None,
    };
    let curve_family = match &flags.curve {
        Some(n) => Some(families::curve(n).ok_or_else(|| {
            let known: Vec<_> = families::CURVES.iter().map(|c| c.name).collect();
            Failure::Usage(format!("unknown curve {n:?}; known curves: {}", known.join(", ")))
        })?),
        None => None,
    };
    let surface_family = match &flags.surface {
        Some(n) => Some(families::surface(n).ok_or_else(|| {
            let known: Vec<_> = families::SURFACES.iter().map(|c| c.name).collect();
            Failure::Usage(format!("unknown surface {n:?}; known surfaces: {}", known.join(", ")))
        })?),
        None => None,
    };
    let declared = |f: Flag| {
        curve_family.is_some_and(|c| [Param::R, Param::P0, Param::Center].iter().any(|p| Flag::of(*p) == f && c.accepts(*p)))
            || surface_family
                .is_some_and(|s| [Param::R, Param::P0, Param::Center].iter().any(|p| Flag::of(*p) == f && s.accepts(*p)))
    };
    for f in Flag::ALL {
        if flags.raw(f).is_some() && !required.contains(&f) && !optional.contains(&f) && !declared(f) {
            return Err(Failure::Usage(format!("{} is not a parameter of {name} with the chosen curve or surface", f.name())));
        }
    }
    let env_tol = match env_tol {
        Some(s) => Some(parse_tol(s).map_err(|m| Failure::Usage(format!("{TOL_ENV}: {m}")))?),
        None => None,
    };
    if let Some(t) = flags.tol {
        parse_tol(&t.to_string()).map_err(|m| Failure::Usage(format!("--tol: {m}")))?;
    }
    let lit = |flag: &'static str, s: &Option<String>| -> Result<Option<Bicomplex>, Failure> {
        s.as_deref().map(parse_bicomplex).transpose().map_err(|err| Failure::Parse { flag, err })
    };
    let values = Values { r: flags.r, p0: lit("--p0", &flags.p0)?, center: lit("--center", &flags.center)? };
    if let Some(r) = flags.r {
        if !(r.is_finite() && r > 0.0) {
            return Err(Failure::Usage(format!("--R must be a positive number, got {r}")));
        }
    }
    let check = |family: &'static str, required: &[Param]| -> Result<(), Failure> {
        for p in required {
            if !values.given(*p) {
                return Err(Failure::Usage(format!("{family} requires {}", p.flag())));
            }
        }
        Ok(())
    };
    if let Some(c) = curve_family {
        check(c.name, c.required)?;
    }
    if let Some(s) = surface_family {
        check(s.name, s.required)?;
    }
    if let Some(0) = flags.samples {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    Ok(Inputs {
        function,
        curve: curve_family.map(|c| (c.name, c.build(&values))),
        surface: surface_family.map(|s| (s.name, s.build(&values))),
        point: lit("--point", &flags.point)?,
        center: values.center,
        p0: values.p0,
        r: flags.r,
        order: flags.order,
        samples: flags.samples,
        tol: flags.tol,
        env_tol,
    })
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}

fn resolve_function(name: &str) -> Result<BicomplexFn, Failure> {
    let base = name.split_once('@').map_or(name, |(b, _)| b);
    if !registry::NAMES.contains(&base) {
        return Err(Failure::Usage(format!(
            "unknown function {base:?}; known functions: {}",
            registry::NAMES.join(", ")
        )));
    }
    registry::lookup(name).map_err(|e| Failure::Usage(e.to_string()))
}

fn singular_inputs(inp: &Inputs) -> Vec<Value> {
    [("--point", inp.point), ("--center", inp.center), ("--p0", inp.p0)]
        .into_iter()
        .filter_map(|(k, v)| v.filter(|p| p.is_singular()).map(|_| Value::from(k)))
        .collect()
}

fn describe_function(rep: &mut Report, f: &BicomplexFn) {
    rep.diag("function", json!({ "name": f.name(), "class": f.class().name() }));
}

fn eval(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let f = inp.function();
    let p = inp.point.expect("validated");
    describe_function(rep, f);
    rep.result("value", bicomplex(f.eval(p)?));
    Ok(())
}

fn diff(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let f = inp.function();
    let p = inp.point.expect("validated");
    describe_function(rep, f);
    let order = inp.order.unwrap_or(1);
    rep.diag("order", json!(order));
    rep.diag("stencil_step", num(default_step(p)));
    if order != 1 {
        rep.result("value", bicomplex(derivative_n(f, p, order)?));
        rep.diag(
            "method",
            json!(if f.has_analytic_derivative() { "analytic" } else { "finite differences along x" }),
        );
        return Ok(());
    }
    let opts = HolomorphyOptions { samples: inp.samples.unwrap_or(HolomorphyOptions::default().samples), ..Default::default() };
    let d = regular_derivative(f, f.class(), p, opts)?;
    rep.result("value", bicomplex(d.value));
    let reps: Map<String, Value> = d.representations.iter().map(|(k, v)| ((*k).to_string(), bicomplex(*v))).collect();
    rep.result("representations", Value::Object(reps));
    rep.residual("cr", d.cr_residual);
    rep.residual("max_disagreement", d.max_disagreement);
    rep.residual("certification", d.certification_residual);
    rep.result("is_holomorphic", json!(d.is_holomorphic));
    rep.diag(
        "certification",
        json!({
            "samples": d.certification_samples,
            "radius": num(opts.radius),
            "tol": num(opts.tol),
            "note": "sampled, not proven",
        }),
    );
    Ok(())
}

fn describe_curve(rep: &mut Report, name: &str, c: &Curve) {
    let (t0, t1) = c.range();
    rep.diag("curve", json!({ "family": name, "t": [num(t0), num(t1)], "closed": c.is_closed() }));
}

fn integrate(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let f = inp.function();
    let (name, c) = inp.curve.as_ref().expect("validated");
    let opts = inp.quad();
    describe_function(rep, f);
    describe_curve(rep, name, c);
    let q = line_integral(f, c, &opts)?;
    let ml = ml_bound(f, c, inp.samples.unwrap_or(1024), &opts)?;
    rep.result("value", bicomplex(q.value));
    rep.result("length", num(curve_length(c, &opts)?));
    rep.result(
        "ml_bound",
        json!({ "max_norm": num(ml.max_norm), "bound": num(ml.bound), "strict_bound": num(ml.strict_bound) }),
    );
    rep.residual("quadrature_error_estimate", q.error_estimate);
    rep.diag("quadrature", json!({ "panels": q.panels, "tol": num(opts.atol) }));
    Ok(())
}

fn twine(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let (name, c) = inp.curve.as_ref().expect("validated");
    let p0 = inp.p0.expect("validated");
    let opts = inp.quad();
    describe_curve(rep, name, c);
    let v = twining_number(c, p0, &opts)?;
    rep.result("m", json!(v.m));
    rep.result("n", json!(v.n));
    rep.result("value", bicomplex(v.value));
    rep.result("raw", bicomplex(v.raw));
    rep.result("complex_winding", bicomplex(v.complex_winding()));
    rep.residual("snap", v.residual);
    rep.diag(
        "singularity_scan",
        json!({ "samples": hyperplex::integration::contour::SINGULARITY_SAMPLES, "note": "verified at samples only" }),
    );
    rep.diag("quadrature", json!({ "tol": num(opts.atol) }));
    Ok(())
}

fn cauchy(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let f = inp.function();
    let (name, c) = inp.curve.as_ref().expect("validated");
    let p0 = inp.p0.expect("validated");
    let opts = inp.quad();
    describe_function(rep, f);
    describe_curve(rep, name, c);
    let surface = inp.surface.as_ref();
    let r = cauchy_integral_formula(f, c, p0, surface.map(|(_, s)| s), &opts)?;
    rep.result("value", bicomplex(r.reduced));
    rep.result("raw", bicomplex(r.raw));
    rep.result("value_at_p0", bicomplex(r.value_at_center));
    rep.result("twining", json!({ "m": r.twining.m, "n": r.twining.n, "value": bicomplex(r.twining.value) }));
    rep.residual("formula", r.reduced_residual);
    rep.residual("raw_formula", r.residual);
    rep.residual("twining_snap", r.twining.residual);
    rep.diag(
        "normalisation",
        json!("value = (1/2 pi i) * integral, which equals psi(p0) when v = (0,-i); raw = (1/2 pi j) * integral = psi(p0) v"),
    );
    match (surface, r.surface) {
        (Some((sname, _)), Some(cond)) => {
            rep.residual("surface_cr", cond.max_cr_residual);
            rep.diag(
                "surface",
                json!({
                    "family": sname,
                    "samples": cond.samples,
                    "min_relative_cn": cond.min_relative_cn.map_or(Value::Null, num),
                    "note": "verified at samples only",
                }),
            );
        }
        _ => rep.diag("surface", json!({ "family": null, "note": "no surface supplied; holomorphy on S is not checked" })),
    }
    Ok(())
}

fn taylor(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let f = inp.function();
    let center = inp.center.unwrap_or_default();
    let n = inp.order.expect("validated") as usize;
    describe_function(rep, f);
    let defaults = TaylorOptions::default();
    let samples = inp.samples.unwrap_or(defaults.interior_samples);
    let opts = TaylorOptions { interior_samples: samples, boundary_samples: samples, ..defaults };
    let t = taylor_expand_with(f, center, n, &opts)?;
    rep.result("center", bicomplex(t.center));
    rep.result("coefficients", Value::Array(t.coeffs.iter().map(|c| bicomplex(*c)).collect()));
    rep.result("derivative_sup", num(t.derivative_sup));
    if let Some(p) = inp.point {
        let exact = f.eval(p)?;
        let sum = t.partial_sum(p);
        rep.result("partial_sum", bicomplex(sum));
        rep.result("value", bicomplex(exact));
        rep.result("remainder_bound", num(t.remainder_bound(p)));
        rep.residual("error", (sum - exact).norm());
    }
    rep.diag(
        "sup_sampling",
        json!({ "radius": num(t.radius), "interior": opts.interior_samples, "boundary": opts.boundary_samples }),
    );
    rep.diag("terms", json!(t.terms()));
    Ok(())
}

fn classify_cmd(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let f = inp.function();
    describe_function(rep, f);
    let d = ClassifyOptions::default();
    let opts = ClassifyOptions {
        center: inp.center.unwrap_or(d.center),
        radius: inp.r.unwrap_or(d.radius),
        samples: inp.samples.unwrap_or(d.samples),
        tol: inp.tol.unwrap_or(d.tol),
        ..d
    };
    let r = classify(f, &opts)?;
    let classes: Map<String, Value> = r.class_residuals.iter().map(|(c, v)| (c.name().to_string(), num(*v))).collect();
    rep.result("members", json!(r.members.iter().map(|c| c.name()).collect::<Vec<_>>()));
    rep.result("fueter_regular", json!(r.fueter_regular));
    rep.result("conjugate_fueter_regular", json!(r.conjugate_fueter_regular));
    rep.result("harmonic", json!(r.harmonic));
    rep.residuals.insert("classes".into(), Value::Object(classes));
    rep.residual("fueter", r.fueter_residual);
    rep.residual("conjugate_fueter", r.conjugate_fueter_residual);
    rep.residual("laplace4", r.laplace4_residual);
    rep.diag(
        "sampling",
        json!({
            "center": bicomplex(opts.center),
            "radius": num(opts.radius),
            "samples": r.samples,
            "skipped": r.skipped,
            "tol": num(opts.tol),
            "note": "sampled, not proven",
        }),
    );
    Ok(())
}

fn green(inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    let f = inp.function();
    let (name, s) = inp.surface.as_ref().expect("validated");
    let opts = inp.quad();
    describe_function(rep, f);
    let phi1 = |a, b| f.phi1(a, b);
    let phi2 = |a, b| f.phi2(a, b);
    let g = green_theorem_check(&phi1, &phi2, s, &opts)?;
    rep.result("line", complex(g.line));
    rep.result("surface", complex(g.surface));
    rep.residual("green", g.residual);
    let comps: Vec<Value> = g
        .components
        .iter()
        .map(|c| json!({ "line": num(c.line), "identity": num(c.identity), "stokes": num(c.stokes) }))
        .collect();
    rep.result("components", Value::Array(comps));
    rep.diag("surface", json!({ "family": name }));
    rep.diag("quadrature", json!({ "tol": num(opts.atol) }));
    Ok(())
}

fn dispatch(cmd: Name, inp: &Inputs, rep: &mut Report) -> Result<(), Failure> {
    match cmd {
        Name::Eval => eval(inp, rep),
        Name::Diff => diff(inp, rep),
        Name::Integrate => integrate(inp, rep),
        Name::Twine => twine(inp, rep),
        Name::Cauchy => cauchy(inp, rep),
        Name::Taylor => taylor(inp, rep),
        Name::Classify => classify_cmd(inp, rep),
        Name::Green => green(inp, rep),
    }
}

fn split(c: Command) -> (Name, Flags) {
    match c {
        Command::Eval(f) => (Name::Eval, f),
        Command::Diff(f) => (Name::Diff, f),
        Command::Integrate(f) => (Name::Integrate, f),
        Command::Twine(f) => (Name::Twine, f),
        Command::Cauchy(f) => (Name::Cauchy, f),
        Command::Taylor(f) => (Name::Taylor, f),
        Command::Classify(f) => (Name::Classify, f),
        Command::Green(f) => (Name::Green, f),
    }
}

fn envelope(command: Value, outcome: Result<Report, Failure>) -> (Value, i32) {
    let (status, error, report, code) = match outcome {
        Ok(r) => ("ok", Value::Null, r, EXIT_OK),
        Err(f) => {
            let err = json!({ "code": f.code(), "message": f.message(), "details": f.details() });
            ("error", err, Report::default(), f.exit())
        }
    };
    let v = json!({
        "schema": SCHEMA,
        "command": command,
        "status": status,
        "error": error,
        "result": if report.result.is_empty() { Value::Null } else { Value::Object(report.result) },
        "residuals": Value::Object(report.residuals),
        "diagnostics": Value::Object(report.diagnostics),
    });
    (v, code)
}

fn render_text(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(m) if m.contains_key("quadruple") => {
            let q: Vec<f64> = m["quadruple"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap_or(f64::NAN)).collect();
            out.push_str(&format!("{prefix}: {}\n", Bicomplex::from_quadruple([q[0], q[1], q[2], q[3]])));
        }
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                render_text(x, &p, out);
            }
        }
        Value::Array(a) if a.iter().all(Value::is_number) => {
            let parts: Vec<String> = a.iter().map(|x| format!("{:?}", x.as_f64().unwrap_or(f64::NAN))).collect();
            out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                render_text(x, &format!("{prefix}[{i}]"), out);
            }
        }
        Value::Null => {}
        Value::Number(n) if n.is_f64() => out.push_str(&format!("{prefix}: {:?}\n", n.as_f64().unwrap())),
        other => out.push_str(&format!("{prefix}: {}\n", other.as_str().map_or_else(|| other.to_string(), String::from))),
    }
}

/// Runs one invocation. `argv[0]` is the program name. `env_tol` is the
/// value of [`TOL_ENV`], if set.
pub fn run_with_env<I, S>(argv: I, env_tol: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let args: Vec<String> = argv.iter().skip(1).cloned().collect();
    let text_requested = args.windows(2).any(|w| w[0] == "--output" && w[1] == "text") || args.iter().any(|a| a == "--output=text");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { stdout: rendered, stderr: String::new(), code: EXIT_OK };
            }
            let command = json!({ "name": args.first().cloned().unwrap_or_default(), "argv": args });
            let (v, code) = envelope(command, Err(Failure::Usage(rendered.trim_end().to_string())));
            return finish(v, code, text_requested, rendered);
        }
    };
    let (cmd, flags) = split(cli.command);
    let mut echo = Map::new();
    for f in Flag::ALL {
        if let Some(raw) = flags.raw(f) {
            echo.insert(f.name().trim_start_matches("--").to_string(), Value::from(raw));
        }
    }
    let command = json!({ "name": command_name(cmd), "argv": args, "flags": Value::Object(echo) });
    let outcome = resolve(cmd, &flags, env_tol).and_then(|inp| {
        let mut rep = Report::default();
        rep.diag("singular_inputs", Value::Array(singular_inputs(&inp)));
        if let Some(t) = inp.env_tol {
            rep.diag("env_tol", num(t));
        }
        dispatch(cmd, &inp, &mut rep).map(|_| rep)
    });
    let stderr = match &outcome {
        Err(f) => format!("hyperplex {}: {}\n", f.code(), f.message()),
        Ok(_) => String::new(),
    };
    let (v, code) = envelope(command, outcome);
    finish(v, code, flags.output == Output::Text, stderr)
}

fn finish(v: Value, code: i32, text: bool, stderr: String) -> Outcome {
    let stdout = if text {
        let mut s = String::new();
        render_text(&v, "", &mut s);
        s
    } else {
        let mut s = json::to_string(&v);
        s.push('\n');
        s
    };
    Outcome { stdout, stderr, code }
}

/// Runs one invocation, reading [`TOL_ENV`] from the process environment.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let env = std::env::var(TOL_ENV).ok();
    run_with_env(argv, env.as_deref())
}

//! Bicomplex maps and argument classes.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Bicomplex, Complex};
use crate::error::{Error, Result};

pub type EvalFn = Arc<dyn Fn(Bicomplex) -> Result<Bicomplex> + Send + Sync>;
pub type DerivativeFn = Arc<dyn Fn(Bicomplex, u32) -> Result<Bicomplex> + Send + Sync>;

/// One of the eight argument substitutions `(a, b) ↦ (a□, ±b◇)` where `□` and
/// `◇` are either nothing or complex conjugation.
///
/// The first row `p, q, r, s` keeps the sign of `b` (type 1); the second row
/// `p∪, q∪, r∪, s∪` negates it (type 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ArgClass {
    pub conj_a: bool,
    pub conj_b: bool,
    pub negate_b: bool,
}

impl ArgClass {
    pub const P: ArgClass = ArgClass::new(false, false, false);
    pub const Q: ArgClass = ArgClass::new(false, true, false);
    pub const R: ArgClass = ArgClass::new(true, false, false);
    pub const S: ArgClass = ArgClass::new(true, true, false);
    pub const P_CUP: ArgClass = ArgClass::new(false, false, true);
    pub const Q_CUP: ArgClass = ArgClass::new(false, true, true);
    pub const R_CUP: ArgClass = ArgClass::new(true, false, true);
    pub const S_CUP: ArgClass = ArgClass::new(true, true, true);

    pub const ALL: [ArgClass; 8] = [
        ArgClass::P,
        ArgClass::Q,
        ArgClass::R,
        ArgClass::S,
        ArgClass::P_CUP,
        ArgClass::Q_CUP,
        ArgClass::R_CUP,
        ArgClass::S_CUP,
    ];

    pub const fn new(conj_a: bool, conj_b: bool, negate_b: bool) -> Self {
        ArgClass { conj_a, conj_b, negate_b }
    }

    /// `(a, b) ↦ (a□, ±b◇)`
    pub fn map(self, p: Bicomplex) -> Bicomplex {
        let a = if self.conj_a { p.a.conj() } else { p.a };
        let mut b = if self.conj_b { p.b.conj() } else { p.b };
        if self.negate_b {
            b = -b;
        }
        Bicomplex::new(a, b)
    }

    /// `+1` for type 1, `−1` for type 2.
    pub fn sign(self) -> f64 {
        if self.negate_b {
            -1.0
        } else {
            1.0
        }
    }

    pub fn name(self) -> &'static str {
        match (self.conj_a, self.conj_b, self.negate_b) {
            (false, false, false) => "p",
            (false, true, false) => "q",
            (true, false, false) => "r",
            (true, true, false) => "s",
            (false, false, true) => "p∪",
            (false, true, true) => "q∪",
            (true, false, true) => "r∪",
            (true, true, true) => "s∪",
        }
    }
}

impl fmt::Display for ArgClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ArgClass {
    type Err = Error;

    /// Accepts `p`, `q∪`, and the ASCII spelling `qu`.
    fn from_str(s: &str) -> Result<Self> {
        let (base, cup) = match s.strip_suffix('∪').or_else(|| s.strip_suffix('u')) {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (conj_a, conj_b) = match base {
            "p" => (false, false),
            "q" => (false, true),
            "r" => (true, false),
            "s" => (true, true),
            _ => return Err(Error::InvalidInput(format!("unknown argument class {s:?}"))),
        };
        Ok(ArgClass::new(conj_a, conj_b, cup))
    }
}

/// A map `ψ(p) = (φ₁(a, b), φ₂(a, b))`, optionally with analytic derivatives.
///
/// The map is a base function evaluated after an argument-class substitution.
/// When the base is holomorphic, `derivative(p, n)` returns the class
/// derivative `f⁽ⁿ⁾(class(p))`.
#[derive(Clone)]
pub struct BicomplexFn {
    name: String,
    base: EvalFn,
    derivative: Option<DerivativeFn>,
    class: ArgClass,
    holomorphic: bool,
}

impl fmt::Debug for BicomplexFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BicomplexFn")
            .field("name", &self.name)
            .field("class", &self.class)
            .field("analytic_derivative", &self.derivative.is_some())
            .finish()
    }
}

impl BicomplexFn {
    /// Wraps an arbitrary map. No holomorphy is assumed.
    pub fn new<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(Bicomplex) -> Result<Bicomplex> + Send + Sync + 'static,
    {
        BicomplexFn {
            name: name.into(),
            base: Arc::new(f),
            derivative: None,
            class: ArgClass::P,
            holomorphic: false,
        }
    }

    /// Wraps a map that cannot fail.
    pub fn total<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(Bicomplex) -> Bicomplex + Send + Sync + 'static,
    {
        BicomplexFn::new(name, move |p| Ok(f(p)))
    }

    /// Builds a map from its two complex components.
    pub fn from_components<F1, F2>(name: impl Into<String>, phi1: F1, phi2: F2) -> Self
    where
        F1: Fn(Complex, Complex) -> Complex + Send + Sync + 'static,
        F2: Fn(Complex, Complex) -> Complex + Send + Sync + 'static,
    {
        BicomplexFn::total(name, move |p| Bicomplex::new(phi1(p.a, p.b), phi2(p.a, p.b)))
    }

    /// Marks the base as holomorphic in `p`.
    pub fn holomorphic(mut self) -> Self {
        self.holomorphic = true;
        self
    }

    /// Attaches `dⁿf/dpⁿ` for the base. Implies holomorphy.
    pub fn with_derivative<D>(mut self, d: D) -> Self
    where
        D: Fn(Bicomplex, u32) -> Result<Bicomplex> + Send + Sync + 'static,
    {
        self.derivative = Some(Arc::new(d));
        self.holomorphic = true;
        self
    }

    /// The same base evaluated in argument class `class`.
    pub fn to_argument_class(&self, class: ArgClass) -> Self {
        let mut f = self.clone();
        f.class = class;
        f
    }

    pub fn name(&self) -> String {
        if self.class == ArgClass::P {
            self.name.clone()
        } else {
            format!("{}@{}", self.name, self.class)
        }
    }

    pub fn class(&self) -> ArgClass {
        self.class
    }

    /// True when the base was declared holomorphic, so the map is regular in
    /// its class.
    pub fn is_declared_holomorphic(&self) -> bool {
        self.holomorphic
    }

    pub fn has_analytic_derivative(&self) -> bool {
        self.derivative.is_some()
    }

    pub fn eval(&self, p: Bicomplex) -> Result<Bicomplex> {
        (self.base)(self.class.map(p))
    }

    pub fn phi1(&self, a: Complex, b: Complex) -> Result<Complex> {
        Ok(self.eval(Bicomplex::new(a, b))?.a)
    }

    pub fn phi2(&self, a: Complex, b: Complex) -> Result<Complex> {
        Ok(self.eval(Bicomplex::new(a, b))?.b)
    }

    /// Analytic class derivative of order `n`, if one was supplied.
    pub fn analytic_derivative(&self, p: Bicomplex, n: u32) -> Option<Result<Bicomplex>> {
        self.derivative.as_ref().map(|d| d(self.class.map(p), n))
    }

    /// `p ↦ self_base(inner(p))`: the base of `self` applied to the values of
    /// `inner`, which keeps the argument class of `inner`.
    pub fn compose(&self, inner: &BicomplexFn) -> BicomplexFn {
        let (outer, g) = (self.base.clone(), inner.clone());
        let mut f = BicomplexFn::new(format!("{}∘{}", self.name, inner.name()), move |p| outer(g.eval(p)?));
        f.holomorphic = self.holomorphic && inner.holomorphic && inner.class == ArgClass::P;
        f
    }

    fn combine(&self, other: &BicomplexFn, op: &'static str, k: fn(Bicomplex, Bicomplex) -> Result<Bicomplex>) -> BicomplexFn {
        let (f, g) = (self.clone(), other.clone());
        let mut h = BicomplexFn::new(format!("({} {op} {})", self.name(), other.name()), move |p| k(f.eval(p)?, g.eval(p)?));
        h.holomorphic = self.holomorphic && other.holomorphic && self.class == ArgClass::P && other.class == ArgClass::P;
        h
    }

    /// Point-wise sum.
    pub fn add(&self, other: &BicomplexFn) -> BicomplexFn {
        self.combine(other, "+", |x, y| Ok(x + y))
    }

    /// Point-wise product `⊙`.
    pub fn mul(&self, other: &BicomplexFn) -> BicomplexFn {
        self.combine(other, "⊙", |x, y| Ok(x * y))
    }

    /// Point-wise quotient; fails where the divisor is singular.
    pub fn div(&self, other: &BicomplexFn) -> BicomplexFn {
        self.combine(other, "⊘", |x, y| x.div(y))
    }
}

//! Named functions available to the command line and to sweeps.
//!
//! Names may carry an argument-class suffix, for example `exp@q` or `cos@s∪`
//! (`cos@su` also works).

use crate::algebra::Bicomplex;
use crate::elementary as el;
use crate::error::{Error, Result};
use crate::function::{ArgClass, BicomplexFn};

/// Base names recognised by [`lookup`].
pub const NAMES: [&str; 17] = [
    "exp", "cosh", "sinh", "tanh", "cos", "sin", "tan", "blog", "identity", "square", "cube",
    "inv", "one", "zero", "theta", "normsq", "E",
];

/// Base names declared holomorphic.
pub const HOLOMORPHIC: [&str; 14] = [
    "exp", "cosh", "sinh", "tanh", "cos", "sin", "tan", "blog", "identity", "square", "cube",
    "inv", "one", "zero",
];

fn falling(n: u32, k: u32) -> f64 {
    (0..k).map(|i| (n - i) as f64).product()
}

fn power(name: &str, m: u32) -> BicomplexFn {
    BicomplexFn::total(name, move |p| p.powi(m as i32).expect("non-negative power"))
        .with_derivative(move |p, k| {
            if k > m {
                Ok(Bicomplex::zero())
            } else {
                Ok(p.powi((m - k) as i32)? * falling(m, k))
            }
        })
}

fn constant(name: &str, c: Bicomplex) -> BicomplexFn {
    BicomplexFn::total(name, move |_| c)
        .with_derivative(move |_, k| Ok(if k == 0 { c } else { Bicomplex::zero() }))
}

fn base(name: &str) -> Option<BicomplexFn> {
    let f = match name {
        "exp" => BicomplexFn::total("exp", el::exp).with_derivative(|p, _| Ok(el::exp(p))),
        "cosh" => BicomplexFn::total("cosh", el::cosh)
            .with_derivative(|p, k| Ok(if k % 2 == 0 { el::cosh(p) } else { el::sinh(p) })),
        "sinh" => BicomplexFn::total("sinh", el::sinh)
            .with_derivative(|p, k| Ok(if k % 2 == 0 { el::sinh(p) } else { el::cosh(p) })),
        "cos" => BicomplexFn::total("cos", el::cos).with_derivative(|p, k| {
            Ok(match k % 4 {
                0 => el::cos(p),
                1 => -el::sin(p),
                2 => -el::cos(p),
                _ => el::sin(p),
            })
        }),
        "sin" => BicomplexFn::total("sin", el::sin).with_derivative(|p, k| {
            Ok(match k % 4 {
                0 => el::sin(p),
                1 => el::cos(p),
                2 => -el::sin(p),
                _ => -el::cos(p),
            })
        }),
        "tanh" => BicomplexFn::new("tanh", el::tanh).holomorphic(),
        "tan" => BicomplexFn::new("tan", el::tan).holomorphic(),
        "blog" => BicomplexFn::new("blog", el::blog_principal).with_derivative(|p, k| {
            if k == 0 {
                return el::blog_principal(p);
            }
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let fact: f64 = (1..k).map(f64::from).product();
            Ok(p.powi(-(k as i32))? * (sign * fact))
        }),
        "identity" => power("identity", 1),
        "square" => power("square", 2),
        "cube" => power("cube", 3),
        "inv" => BicomplexFn::new("inv", |p: Bicomplex| p.inverse()).with_derivative(|p, k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let fact: f64 = (1..=k).map(f64::from).product();
            Ok(p.powi(-(k as i32) - 1)? * (sign * fact))
        }),
        "one" => constant("one", Bicomplex::one()),
        "zero" => constant("zero", Bicomplex::zero()),
        "theta" => BicomplexFn::from_components("theta", |a, _| a * a, |_, b| b * b),
        "normsq" => BicomplexFn::total("normsq", |p| Bicomplex::from_real(p.norm_sqr())),
        "E" => {
            let e = base("exp")?.to_argument_class(ArgClass::Q);
            return Some(e);
        }
        _ => return None,
    };
    Some(f)
}

/// Resolves `name` or `name@class`.
pub fn lookup(spec: &str) -> Result<BicomplexFn> {
    let (name, class) = match spec.split_once('@') {
        Some((n, c)) => (n, Some(c.parse::<ArgClass>()?)),
        None => (spec, None),
    };
    let f = base(name).ok_or_else(|| Error::InvalidInput(format!("unknown function {name:?}")))?;
    Ok(match class {
        Some(c) => f.to_argument_class(c),
        None => f,
    })
}

//! Named curve and surface families and the flat flags they accept.

use hyperplex::integration::{Curve, Surface};
use hyperplex::Bicomplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    R,
    P0,
    Center,
}

impl Param {
    pub fn flag(self) -> &'static str {
        match self {
            Param::R => "--R",
            Param::P0 => "--p0",
            Param::Center => "--center",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Values {
    pub r: Option<f64>,
    pub p0: Option<Bicomplex>,
    pub center: Option<Bicomplex>,
}

impl Values {
    pub fn given(&self, p: Param) -> bool {
        match p {
            Param::R => self.r.is_some(),
            Param::P0 => self.p0.is_some(),
            Param::Center => self.center.is_some(),
        }
    }
}

pub struct Family<T> {
    pub name: &'static str,
    pub required: &'static [Param],
    pub optional: &'static [Param],
    pub describe: &'static str,
    build: fn(&Values) -> T,
}

impl<T> Family<T> {
    pub fn accepts(&self, p: Param) -> bool {
        self.required.contains(&p) || self.optional.contains(&p)
    }

    /// Builds the member; the caller has checked the required parameters.
    pub fn build(&self, v: &Values) -> T {
        (self.build)(v)
    }
}

fn radius(v: &Values) -> f64 {
    v.r.expect("required parameter R")
}

fn p0(v: &Values) -> Bicomplex {
    v.p0.expect("required parameter p0")
}

pub const CURVES: [Family<Curve>; 3] = [
    Family {
        name: "double-circle",
        required: &[Param::R],
        optional: &[],
        describe: "(R e^{it}, R e^{it}), t in [0, 2pi]",
        build: |v| Curve::double_circle(Bicomplex::zero(), radius(v)),
    },
    Family {
        name: "twist",
        required: &[Param::P0],
        optional: &[],
        describe: "p0 + (e^{it} cos t, e^{it} sin t), t in [0, 2pi]",
        build: |v| Curve::twist(p0(v)),
    },
    Family {
        name: "complex-circle",
        required: &[Param::R],
        optional: &[],
        describe: "(R e^{it}, 0), t in [0, 2pi]",
        build: |v| Curve::complex_circle(Bicomplex::zero(), radius(v)),
    },
];

pub const SURFACES: [Family<Surface>; 3] = [
    Family {
        name: "disk-surface",
        required: &[Param::P0],
        optional: &[],
        describe: "p0 + h (e^{it} cos t, e^{it} sin t), h in [0, 1], bounded by twist(p0)",
        build: |v| Surface::twist_disk(p0(v), 1.0),
    },
    Family {
        name: "double-disk",
        required: &[Param::R],
        optional: &[],
        describe: "h (e^{it}, e^{it}), h in [0, R], bounded by double-circle(R)",
        build: |v| Surface::double_disk(Bicomplex::zero(), radius(v)),
    },
    Family {
        name: "flat-patch",
        required: &[],
        optional: &[Param::Center],
        describe: "center + (h, t) with a = h, b = t real, h, t in [0, 1]",
        build: |v| {
            let origin = v.center.unwrap_or_default();
            Surface::flat_patch(origin, Bicomplex::one(), Bicomplex::j(), (0.0, 1.0), (0.0, 1.0)).expect("unit square")
        },
    },
];

pub fn curve(name: &str) -> Option<&'static Family<Curve>> {
    CURVES.iter().find(|f| f.name == name)
}

pub fn surface(name: &str) -> Option<&'static Family<Surface>> {
    SURFACES.iter().find(|f| f.name == name)
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Complex;
use crate::error::{Error, Result};

/// Quaternion `x + yi + zj + uk` held as the complex pair `(x + iy, z + iu)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub a: Complex,
    pub b: Complex,
}

/// Which side the inverse multiplies from in a quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisionSide {
    /// `q⁻¹ × r`
    Left,
    /// `r × q⁻¹`
    Right,
}

impl Quaternion {
    pub const fn new(a: Complex, b: Complex) -> Self {
        Quaternion { a, b }
    }

    pub fn from_quadruple([x, y, z, u]: [f64; 4]) -> Self {
        Quaternion::new(Complex::new(x, y), Complex::new(z, u))
    }

    pub fn to_quadruple(self) -> [f64; 4] {
        [self.a.re, self.a.im, self.b.re, self.b.im]
    }

    pub fn one() -> Self {
        Quaternion::from_quadruple([1.0, 0.0, 0.0, 0.0])
    }

    pub fn i() -> Self {
        Quaternion::from_quadruple([0.0, 1.0, 0.0, 0.0])
    }

    pub fn j() -> Self {
        Quaternion::from_quadruple([0.0, 0.0, 1.0, 0.0])
    }

    pub fn k() -> Self {
        Quaternion::from_quadruple([0.0, 0.0, 0.0, 1.0])
    }

    /// `(a*, -b)`
    pub fn conj(self) -> Self {
        Quaternion::new(self.a.conj(), -self.b)
    }

    /// `|a|² + |b|²`
    pub fn square_norm(self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.square_norm().sqrt()
    }

    pub fn inverse(self) -> Result<Self> {
        let n = self.square_norm();
        if n == 0.0 {
            return Err(Error::ZeroNorm);
        }
        let c = self.conj();
        Ok(Quaternion::new(c.a / n, c.b / n))
    }

    pub fn div(self, divisor: Quaternion, side: DivisionSide) -> Result<Self> {
        let inv = divisor.inverse()?;
        Ok(match side {
            DivisionSide::Left => inv * self,
            DivisionSide::Right => self * inv,
        })
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.a * s, self.b * s)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    /// `(a, b) × (c, d) = (ac − b d*, b c* + a d)`
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a * o.a - self.b * o.b.conj(),
            self.b * o.a.conj() + self.a * o.b,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, u] = self.to_quadruple();
        write!(f, "{x}{y:+}i{z:+}j{u:+}k")
    }
}

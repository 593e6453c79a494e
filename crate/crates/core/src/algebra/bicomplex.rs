use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{Complex, I};
use crate::error::{Error, Result};

/// Default relative tolerance for the singularity test.
pub const SINGULAR_TOL: f64 = 1e-12;

/// Bicomplex number `x + yi + zj + uk` held as `(x + iy, z + iu)`.
///
/// Here `j² = −1` and `k = ij` with `k² = 1`, so multiplication commutes.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bicomplex {
    pub a: Complex,
    pub b: Complex,
}

impl Bicomplex {
    pub const fn new(a: Complex, b: Complex) -> Self {
        Bicomplex { a, b }
    }

    pub fn from_quadruple([x, y, z, u]: [f64; 4]) -> Self {
        Bicomplex::new(Complex::new(x, y), Complex::new(z, u))
    }

    pub fn to_quadruple(self) -> [f64; 4] {
        [self.a.re, self.a.im, self.b.re, self.b.im]
    }

    pub fn from_real(x: f64) -> Self {
        Bicomplex::new(Complex::new(x, 0.0), Complex::new(0.0, 0.0))
    }

    pub fn from_complex(a: Complex) -> Self {
        Bicomplex::new(a, Complex::new(0.0, 0.0))
    }

    pub fn zero() -> Self {
        Bicomplex::default()
    }

    pub fn one() -> Self {
        Bicomplex::from_real(1.0)
    }

    pub fn i() -> Self {
        Bicomplex::from_quadruple([0.0, 1.0, 0.0, 0.0])
    }

    pub fn j() -> Self {
        Bicomplex::from_quadruple([0.0, 0.0, 1.0, 0.0])
    }

    pub fn k() -> Self {
        Bicomplex::from_quadruple([0.0, 0.0, 0.0, 1.0])
    }

    /// `(a, −b)`
    pub fn conj(self) -> Self {
        Bicomplex::new(self.a, -self.b)
    }

    /// Complex norm `a² + b²`, i.e. `p ⊙ p∪`.
    pub fn cn(self) -> Complex {
        self.a * self.a + self.b * self.b
    }

    /// `|a|² + |b|²`
    pub fn norm_sqr(self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(self) -> bool {
        self.a == Complex::new(0.0, 0.0) && self.b == Complex::new(0.0, 0.0)
    }

    /// True when `|a² + b²| ≤ tol · max(1, |a|² + |b|²)`.
    pub fn is_singular_tol(self, tol: f64) -> bool {
        self.cn().norm() <= tol * self.norm_sqr().max(1.0)
    }

    pub fn is_singular(self) -> bool {
        self.is_singular_tol(SINGULAR_TOL)
    }

    pub fn inverse(self) -> Result<Self> {
        if self.is_singular() {
            return Err(Error::SingularNumber);
        }
        let cn = self.cn();
        Ok(Bicomplex::new(self.a / cn, -self.b / cn))
    }

    /// `self ⊘ q`
    pub fn div(self, q: Bicomplex) -> Result<Self> {
        if q.is_singular() {
            return Err(Error::SingularNumber);
        }
        let cn = q.cn();
        let (a, b, c, d) = (q.a, q.b, self.a, self.b);
        Ok(Bicomplex::new((c * a + d * b) / cn, (d * a - c * b) / cn))
    }

    /// Integer power by repeated squaring; negative exponents go through the inverse.
    pub fn powi(self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Bicomplex::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq;
            }
            sq = sq * sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(self, s: f64) -> Self {
        Bicomplex::new(self.a * s, self.b * s)
    }

    /// Multiplication by the complex scalar `(λ, 0)`.
    pub fn scale_complex(self, s: Complex) -> Self {
        Bicomplex::new(self.a * s, self.b * s)
    }

    /// `j ⊙ self = (−b, a)`
    pub fn mul_j(self) -> Self {
        Bicomplex::new(-self.b, self.a)
    }

    /// Component-wise complex conjugate `(a*, b*)`.
    pub fn conj_components(self) -> Self {
        Bicomplex::new(self.a.conj(), self.b.conj())
    }

    /// Idempotent components `(a − ib, a + ib)`. Multiplication acts on each
    /// independently.
    pub fn idempotent(self) -> (Complex, Complex) {
        (self.a - I * self.b, self.a + I * self.b)
    }

    pub fn from_idempotent(z1: Complex, z2: Complex) -> Self {
        Bicomplex::new((z1 + z2) * 0.5, (z1 - z2) * I * 0.5)
    }

    pub fn is_finite(self) -> bool {
        self.to_quadruple().iter().all(|v| v.is_finite())
    }
}

impl Mul for Bicomplex {
    type Output = Bicomplex;
    /// `(a, b) ⊙ (c, d) = (ac − bd, bc + ad)`
    fn mul(self, o: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.a * o.a - self.b * o.b, self.b * o.a + self.a * o.b)
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Bicomplex;
    fn mul(self, s: f64) -> Bicomplex {
        self.scale(s)
    }
}

impl Add for Bicomplex {
    type Output = Bicomplex;
    fn add(self, o: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Bicomplex {
    type Output = Bicomplex;
    fn sub(self, o: Bicomplex) -> Bicomplex {
        Bicomplex::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Bicomplex {
    type Output = Bicomplex;
    fn neg(self) -> Bicomplex {
        Bicomplex::new(-self.a, -self.b)
    }
}

impl std::iter::Sum for Bicomplex {
    fn sum<I: Iterator<Item = Bicomplex>>(iter: I) -> Bicomplex {
        iter.fold(Bicomplex::zero(), |s, x| s + x)
    }
}

/// Vector form `x+yi+zj+uk`. Uses shortest round-trip float formatting.
impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, u] = self.to_quadruple();
        write!(f, "{x:?}{}i{}j{}k", signed(y), signed(z), signed(u))
    }
}

fn signed(v: f64) -> String {
    if v.is_sign_negative() {
        format!("{v:?}")
    } else {
        format!("+{v:?}")
    }
}

impl FromStr for Bicomplex {
    type Err = Error;

    /// Parses the vector form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("not a vector-form bicomplex: {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = [0.0; 4];
        let mut seen = [false; 4];
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let start = pos;
            pos += 1;
            while pos < bytes.len() {
                let ch = bytes[pos];
                let prev = bytes[pos - 1];
                let in_exp = (ch == b'+' || ch == b'-') && (prev == b'e' || prev == b'E');
                if (ch == b'+' || ch == b'-') && !in_exp {
                    break;
                }
                pos += 1;
            }
            let term = &s[start..pos];
            let (num, slot) = match term.as_bytes().last() {
                Some(b'i') => (&term[..term.len() - 1], 1),
                Some(b'j') => (&term[..term.len() - 1], 2),
                Some(b'k') => (&term[..term.len() - 1], 3),
                _ => (term, 0),
            };
            let v = match num {
                "" | "+" => 1.0,
                "-" => -1.0,
                n => n.parse::<f64>().map_err(|_| bad())?,
            };
            if seen[slot] {
                return Err(bad());
            }
            seen[slot] = true;
            out[slot] = v;
        }
        if !seen.iter().any(|&x| x) {
            return Err(bad());
        }
        Ok(Bicomplex::from_quadruple(out))
    }
}

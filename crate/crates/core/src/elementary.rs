//! Elementary bicomplex functions, polar form and logarithm branches.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::algebra::{Bicomplex, Complex, I};
use crate::error::{Error, Result};

/// `e^p = (e^a cos b, e^a sin b)`
pub fn exp(p: Bicomplex) -> Bicomplex {
    let ea = p.a.exp();
    Bicomplex::new(ea * p.b.cos(), ea * p.b.sin())
}

pub fn cosh(p: Bicomplex) -> Bicomplex {
    Bicomplex::new(p.a.cosh() * p.b.cos(), p.a.sinh() * p.b.sin())
}

pub fn sinh(p: Bicomplex) -> Bicomplex {
    Bicomplex::new(p.a.sinh() * p.b.cos(), p.a.cosh() * p.b.sin())
}

pub fn tanh(p: Bicomplex) -> Result<Bicomplex> {
    sinh(p).div(cosh(p))
}

pub fn cos(p: Bicomplex) -> Bicomplex {
    Bicomplex::new(p.a.cos() * p.b.cosh(), -p.a.sin() * p.b.sinh())
}

pub fn sin(p: Bicomplex) -> Bicomplex {
    Bicomplex::new(p.a.sin() * p.b.cosh(), p.a.cos() * p.b.sinh())
}

pub fn tan(p: Bicomplex) -> Result<Bicomplex> {
    sin(p).div(cos(p))
}

/// Period `(im, n)·2π` of the exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodLattice {
    pub m: i64,
    pub n: i64,
}

impl PeriodLattice {
    pub fn period(self) -> Bicomplex {
        Bicomplex::new(Complex::new(0.0, TAU * self.m as f64), Complex::new(TAU * self.n as f64, 0.0))
    }
}

/// Horner evaluation of `Σ cₖ pᵏ` with bicomplex coefficients.
pub fn poly_eval(coeffs: &[Bicomplex], p: Bicomplex) -> Bicomplex {
    coeffs.iter().rev().fold(Bicomplex::zero(), |acc, &c| acc * p + c)
}

/// `P(p) ⊘ Q(p)`
pub fn rational_eval(num: &[Bicomplex], den: &[Bicomplex], p: Bicomplex) -> Result<Bicomplex> {
    poly_eval(num, p).div(poly_eval(den, p))
}

/// Components of `pⁿ = (Gₙ(a, b), Hₙ(a, b))`.
///
/// Both are homogeneous of degree `n`; `g[k]` and `h[k]` are the integer
/// coefficients of `aⁿ⁻ᵏ bᵏ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicPolynomialPair {
    pub degree: usize,
    pub g: Vec<i128>,
    pub h: Vec<i128>,
}

impl HarmonicPolynomialPair {
    pub fn eval(&self, a: Complex, b: Complex) -> (Complex, Complex) {
        let n = self.degree;
        let mut g = Complex::new(0.0, 0.0);
        let mut h = Complex::new(0.0, 0.0);
        for k in 0..=n {
            let mono = a.powu((n - k) as u32) * b.powu(k as u32);
            g += mono * self.g[k] as f64;
            h += mono * self.h[k] as f64;
        }
        (g, h)
    }
}

/// Builds `Gₙ, Hₙ` from `G₀ = 1, H₀ = 0`,
/// `Gₙ₊₁ = a Gₙ − b Hₙ`, `Hₙ₊₁ = a Hₙ + b Gₙ`.
///
/// Coefficients are exact up to degree 120.
pub fn harmonic_polys(n: usize) -> HarmonicPolynomialPair {
    let mut g = vec![1i128];
    let mut h = vec![0i128];
    for _ in 0..n {
        let d = g.len();
        let mut ng = vec![0i128; d + 1];
        let mut nh = vec![0i128; d + 1];
        for k in 0..d {
            ng[k] += g[k];
            ng[k + 1] -= h[k];
            nh[k] += h[k];
            nh[k + 1] += g[k];
        }
        g = ng;
        h = nh;
    }
    HarmonicPolynomialPair { degree: n, g, h }
}

/// `p = v ⊙ (cos w, sin w)` with scale factor `v` and complex argument `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    pub scale_factor: Complex,
    pub complex_argument: Complex,
    /// Set when an arctangent denominator vanished and the angle came from
    /// the quadrant rule rather than a quotient.
    pub degenerate_angle: bool,
}

impl PolarForm {
    pub fn reconstruct(&self) -> Bicomplex {
        let w = self.complex_argument;
        Bicomplex::new(self.scale_factor * w.cos(), self.scale_factor * w.sin())
    }
}

// Angle of (den, num) in (−π/2, 3π/2].
fn branch_angle(num: f64, den: f64) -> f64 {
    let t = num.atan2(den);
    if t <= -FRAC_PI_2 {
        t + TAU
    } else {
        t
    }
}

/// Principal polar form: `Re w ∈ [0, 2π)`.
pub fn polar_form(q: Bicomplex) -> Result<PolarForm> {
    polar_form_with_offset(q, 0.0)
}

/// Polar form with `Re w` reduced into `[offset, offset + 2π)`.
pub fn polar_form_with_offset(q: Bicomplex, offset: f64) -> Result<PolarForm> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    if q.is_singular() {
        return Err(Error::SingularNumber);
    }
    let (g, d, e, h) = (q.a.re, q.a.im, q.b.re, q.b.im);
    let k = (g + h).powi(2) + (d - e).powi(2);
    let l = (g - h).powi(2) + (d + e).powi(2);
    let r = (k * l).sqrt().sqrt();
    let m = branch_angle(d - e, g + h);
    let n = branch_angle(d + e, g - h);
    let y = 0.5 * (m + n);
    let z = 0.5 * (n - m);
    let u = 0.25 * (k / l).ln();
    let z = z - TAU * ((z - offset) / TAU).floor();
    Ok(PolarForm {
        scale_factor: Complex::from_polar(r, y),
        complex_argument: Complex::new(z, u),
        degenerate_angle: g + h == 0.0 || g - h == 0.0,
    })
}

/// Logarithm on branch `(m, n)`: `(Log v + 2πim, w + 2πn)`.
pub fn blog(q: Bicomplex, branch: (i64, i64)) -> Result<Bicomplex> {
    let pf = polar_form(q)?;
    Ok(Bicomplex::new(
        pf.scale_factor.ln() + I * (TAU * branch.0 as f64),
        pf.complex_argument + TAU * branch.1 as f64,
    ))
}

/// Principal logarithm, branch `(0, 0)`.
pub fn blog_principal(q: Bicomplex) -> Result<Bicomplex> {
    blog(q, (0, 0))
}

pub fn bic_pow_int(q: Bicomplex, n: i32) -> Result<Bicomplex> {
    q.powi(n)
}

fn as_nonnegative_integer(r: Bicomplex) -> Option<i32> {
    let x = r.a.re;
    let exact = r.a.im == 0.0 && r.b == Complex::new(0.0, 0.0) && x.fract() == 0.0;
    (exact && (0.0..=i32::MAX as f64).contains(&x)).then_some(x as i32)
}

/// `q^r = e^{r ⊙ Blog q}`. Singular bases are only accepted for
/// non-negative integer exponents, which use repeated multiplication.
pub fn bic_pow(q: Bicomplex, r: Bicomplex) -> Result<Bicomplex> {
    if q.is_singular() {
        return match as_nonnegative_integer(r) {
            Some(n) => bic_pow_int(q, n),
            None if q.is_zero() => Err(Error::ZeroInput),
            None => Err(Error::SingularNumber),
        };
    }
    Ok(exp(r * blog_principal(q)?))
}

/// Sign choice in `arccos q = −j ⊙ Blog(q ± √(q² − 1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSign {
    Plus,
    Minus,
}

pub fn arccos(q: Bicomplex, sign: RootSign) -> Result<Bicomplex> {
    let d = q * q - Bicomplex::one();
    let root = if d.is_zero() {
        Bicomplex::zero()
    } else {
        bic_pow(d, Bicomplex::from_real(0.5))?
    };
    let w = match sign {
        RootSign::Plus => q + root,
        RootSign::Minus => q - root,
    };
    Ok(-blog_principal(w)?.mul_j())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::c;
    use std::f64::consts::PI;

    fn close(p: Bicomplex, q: Bicomplex, tol: f64) -> bool {
        (p - q).norm() <= tol * (1.0 + q.norm())
    }

    fn series_exp(p: Bicomplex) -> Bicomplex {
        let mut term = Bicomplex::one();
        let mut sum = Bicomplex::one();
        for k in 1..60 {
            term = term * p * (1.0 / k as f64);
            sum = sum + term;
        }
        sum
    }

    #[test]
    fn exp_matches_power_series() {
        for q in [[0.3, -0.2, 0.7, 0.1], [1.0, 1.0, -1.0, 0.5], [-0.4, 2.0, 0.0, -1.2]] {
            let p = Bicomplex::from_quadruple(q);
            assert!(close(exp(p), series_exp(p), 1e-13));
        }
    }

    #[test]
    fn exp_of_i_pi_and_j_pi() {
        assert!(close(exp(Bicomplex::i() * PI), -Bicomplex::one(), 1e-15));
        assert!(close(exp(Bicomplex::j() * PI), -Bicomplex::one(), 1e-15));
        assert!(close(exp(Bicomplex::k() * 0.0), Bicomplex::one(), 0.0));
    }

    #[test]
    fn trig_and_hyperbolic_via_exp() {
        let p = Bicomplex::from_quadruple([0.4, -0.3, 0.9, 0.2]);
        let jp = p.mul_j();
        let two_cos = exp(jp) + exp(-jp);
        assert!(close(cos(p) * 2.0, two_cos, 1e-14));
        let two_cosh = exp(p) + exp(-p);
        assert!(close(cosh(p) * 2.0, two_cosh, 1e-14));
        let two_sinh = exp(p) - exp(-p);
        assert!(close(sinh(p) * 2.0, two_sinh, 1e-14));
        // sin p = −j ⊙ sinh(j ⊙ p)
        assert!(close(sin(p), -sinh(jp).mul_j(), 1e-14));
        let s = sin(p);
        let co = cos(p);
        assert!(close(s * s + co * co, Bicomplex::one(), 1e-13));
    }

    #[test]
    fn tanh_matches_component_formula() {
        let p = Bicomplex::from_quadruple([0.4, -0.3, 0.9, 0.2]);
        let (a, b) = (p.a, p.b);
        let ta = a.tanh();
        let tb = b.tan();
        let first = ta / (b.cos().powu(2) + (ta * b.sin()).powu(2));
        let second = tb / (a.cosh().powu(2) + (a.sinh() * tb).powu(2));
        assert!(close(tanh(p).unwrap(), Bicomplex::new(first, second), 1e-13));
        assert!(close(tan(p).unwrap() * cos(p), sin(p), 1e-13));
    }

    #[test]
    fn harmonic_polys_agree_with_powers() {
        let p = Bicomplex::from_quadruple([0.6, -0.3, 0.4, 0.8]);
        for n in 0..15 {
            let hp = harmonic_polys(n);
            let (g, h) = hp.eval(p.a, p.b);
            let pn = p.powi(n as i32).unwrap();
            assert!((g - pn.a).norm() < 1e-12 && (h - pn.b).norm() < 1e-12, "n = {n}");
        }
        let h3 = harmonic_polys(3);
        assert_eq!(h3.g, vec![1, 0, -3, 0]);
        assert_eq!(h3.h, vec![0, 3, 0, -1]);
    }

    #[test]
    fn polar_form_of_j() {
        let pf = polar_form(Bicomplex::j()).unwrap();
        assert!((pf.scale_factor - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((pf.complex_argument - c(3.0 * FRAC_PI_2, 0.0)).norm() < 1e-15);
        let pf = polar_form(Bicomplex::new(c(0.0, 0.0), c(0.0, 1.0))).unwrap();
        assert!((pf.scale_factor - I).norm() < 1e-15);
        assert!((pf.complex_argument - c(FRAC_PI_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn polar_form_reconstructs() {
        let samples = [
            [1.0, 0.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
            [0.3, -2.0, 0.5, 1.0],
            [-0.7, 0.1, -1.3, -0.4],
            [0.0, 0.0, -2.0, 0.0],
            [2.0, 1.0, -1.0, 2.5],
        ];
        for q in samples {
            let p = Bicomplex::from_quadruple(q);
            let pf = polar_form(p).unwrap();
            assert!(close(pf.reconstruct(), p, 1e-13), "{p}");
            assert!((0.0..TAU).contains(&pf.complex_argument.re));
            let shifted = polar_form_with_offset(p, -PI).unwrap();
            assert!(close(shifted.reconstruct(), p, 1e-13));
            assert!((-PI..PI).contains(&shifted.complex_argument.re));
        }
        assert_eq!(polar_form(Bicomplex::zero()), Err(Error::ZeroInput));
        assert_eq!(
            polar_form(Bicomplex::new(c(1.0, 0.0), c(0.0, 1.0))),
            Err(Error::SingularNumber)
        );
    }

    #[test]
    fn principal_log_of_j() {
        let l = blog_principal(Bicomplex::j()).unwrap();
        assert!(close(l, Bicomplex::new(c(0.0, PI), c(3.0 * FRAC_PI_2, 0.0)), 1e-15));
        let l = blog_principal(Bicomplex::new(c(0.0, 0.0), c(0.0, 1.0))).unwrap();
        assert!(close(l, Bicomplex::new(c(0.0, FRAC_PI_2), c(FRAC_PI_2, 0.0)), 1e-15));
    }

    #[test]
    fn every_branch_inverts_exp() {
        let p = Bicomplex::from_quadruple([0.3, -2.0, 0.5, 1.0]);
        for m in -2..=2 {
            for n in -2..=2 {
                assert!(close(exp(blog(p, (m, n)).unwrap()), p, 1e-12));
            }
        }
    }

    #[test]
    fn powers() {
        let q = Bicomplex::from_quadruple([0.8, 0.3, -0.5, 0.2]);
        for n in 0..6 {
            let via_log = bic_pow(q, Bicomplex::from_real(n as f64)).unwrap();
            assert!(close(via_log, q.powi(n).unwrap(), 1e-10));
        }
        let s = Bicomplex::new(c(1.0, 0.0), c(0.0, 1.0));
        assert!(close(bic_pow(s, Bicomplex::from_real(3.0)).unwrap(), s * s * s, 0.0));
        assert_eq!(bic_pow(s, Bicomplex::from_real(0.5)), Err(Error::SingularNumber));
        let half = bic_pow(q, Bicomplex::from_real(0.5)).unwrap();
        assert!(close(half * half, q, 1e-13));
    }

    #[test]
    fn arccos_inverts_cos() {
        assert!(close(arccos(Bicomplex::one(), RootSign::Plus).unwrap(), Bicomplex::zero(), 1e-15));
        for q in [[0.3, -0.2, 0.4, 0.1], [1.5, 0.5, -0.7, 0.3], [-0.2, 1.0, 0.0, 2.0]] {
            let p = Bicomplex::from_quadruple(q);
            for s in [RootSign::Plus, RootSign::Minus] {
                assert!(close(cos(arccos(p, s).unwrap()), p, 1e-11), "{p}");
            }
        }
    }

    #[test]
    fn arccos_rejects_singular_radicand() {
        // Small Gaussian-integer search for q with q² − 1 singular but non-zero.
        let mut found = None;
        'search: for x in -2..=2 {
            for y in -2..=2 {
                for z in -2..=2 {
                    for u in -2..=2 {
                        let q = Bicomplex::from_quadruple([x as f64, y as f64, z as f64, u as f64]);
                        let d = q * q - Bicomplex::one();
                        if d.is_singular() && !d.is_zero() {
                            found = Some(q);
                            break 'search;
                        }
                    }
                }
            }
        }
        let q = found.expect("search finds a singular radicand");
        assert_eq!(arccos(q, RootSign::Plus), Err(Error::SingularNumber));
    }
}

use hyperplex::algebra::{Octonion, Tricomplex};
use hyperplex::elementary::{self, harmonic_polys, polar_form, PeriodLattice};
use hyperplex::{Bicomplex, Complex, Quaternion};
use proptest::prelude::*;

const CASES: u32 = 10_000;

fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

fn quad(r: f64) -> impl Strategy<Value = [f64; 4]> {
    [-r..r, -r..r, -r..r, -r..r]
}

fn bic(r: f64) -> impl Strategy<Value = Bicomplex> {
    quad(r).prop_map(Bicomplex::from_quadruple)
}

fn qua(r: f64) -> impl Strategy<Value = Quaternion> {
    quad(r).prop_map(Quaternion::from_quadruple)
}

fn small_ints() -> impl Strategy<Value = [f64; 8]> {
    prop::array::uniform8(-4i32..=4).prop_map(|a| a.map(f64::from))
}

fn dist(p: Bicomplex, q: Bicomplex) -> f64 {
    (p - q).norm()
}

fn qdist(p: Quaternion, q: Quaternion) -> f64 {
    (p - q).norm()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn product_commutes(p in bic(1e3), q in bic(1e3)) {
        prop_assert_eq!(p * q, q * p);
    }

    #[test]
    fn product_associates(p in bic(1e2), q in bic(1e2), r in bic(1e2)) {
        let scale = (p.norm() * q.norm() * r.norm()).max(1.0);
        prop_assert!(dist((p * q) * r, p * (q * r)) <= 1e-12 * scale * 4.0);
    }

    #[test]
    fn product_distributes(p in bic(1e2), q in bic(1e2), r in bic(1e2)) {
        let scale = (p.norm() * (q.norm() + r.norm())).max(1.0);
        prop_assert!(dist(p * (q + r), p * q + p * r) <= 1e-12 * scale * 4.0);
    }

    #[test]
    fn idempotent_zero_divisors_vanish(s in quad(1e3), t in quad(1e3)) {
        let x = Complex::new(s[0], s[1]);
        let y = Complex::new(t[0], t[1]);
        let i = Complex::new(0.0, 1.0);
        let prod = Bicomplex::new(x, i * x) * Bicomplex::new(y, -i * y);
        prop_assert_eq!(prod, Bicomplex::zero());
    }

    #[test]
    fn cn_is_multiplicative(p in bic(10.0), q in bic(10.0)) {
        let lhs = (p * q).cn();
        let rhs = p.cn() * q.cn();
        let scale = (p.norm_sqr() * q.norm_sqr()).max(1.0);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale * 4.0);
    }

    #[test]
    fn cn_from_conjugate_product(p in bic(1e3)) {
        let prod = p * p.conj();
        prop_assert!((prod.a - p.cn()).norm() <= 1e-12 * p.norm_sqr().max(1.0));
        prop_assert!(prod.b.norm() <= 1e-12 * p.norm_sqr().max(1.0));
    }

    #[test]
    fn conjugation_is_an_automorphism(p in bic(1e2), q in bic(1e2)) {
        prop_assert_eq!((p + q).conj(), p.conj() + q.conj());
        prop_assert_eq!((p * q).conj(), p.conj() * q.conj());
        prop_assert_eq!(p.conj().conj(), p);
    }

    #[test]
    fn quaternion_norm_is_multiplicative(p in qua(10.0), q in qua(10.0)) {
        let lhs = (p * q).square_norm();
        let rhs = p.square_norm() * q.square_norm();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0) * 4.0);
    }

    #[test]
    fn quaternion_product_associates(p in qua(1e2), q in qua(1e2), r in qua(1e2)) {
        let scale = (p.norm() * q.norm() * r.norm()).max(1.0);
        prop_assert!(qdist((p * q) * r, p * (q * r)) <= 1e-12 * scale * 4.0);
    }

    #[test]
    fn quaternion_reals_are_central(s in -1e3..1e3f64, q in qua(1e3)) {
        let r = Quaternion::from_quadruple([s, 0.0, 0.0, 0.0]);
        prop_assert_eq!(r * q, q * r);
    }

    #[test]
    fn quaternion_conjugate_reverses_products(p in qua(1e2), q in qua(1e2)) {
        let scale = (p.norm() * q.norm()).max(1.0);
        prop_assert!(qdist((p * q).conj(), q.conj() * p.conj()) <= 1e-12 * scale * 4.0);
    }

    #[test]
    fn octonions_are_alternative(x in small_ints(), y in small_ints()) {
        let x = Octonion::from_components(x);
        let y = Octonion::from_components(y);
        prop_assert_eq!((x * x) * y, x * (x * y));
        prop_assert_eq!((y * x) * x, y * (x * x));
        prop_assert_eq!(&(x * x.conj()).to_components()[1..], &[0.0; 7][..]);
    }

    #[test]
    fn tricomplex_is_commutative_and_associative(x in small_ints(), y in small_ints(), z in small_ints()) {
        let (x, y, z) = (Tricomplex::from_components(x), Tricomplex::from_components(y), Tricomplex::from_components(z));
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x * y) * z, x * (y * z));
    }

    #[test]
    fn representations_round_trip(q in quad(1e6)) {
        let p = Bicomplex::from_quadruple(q);
        prop_assert_eq!(p.to_quadruple(), q);
        prop_assert_eq!(Bicomplex::new(p.a, p.b), p);
        let back: Bicomplex = p.to_string().parse().unwrap();
        prop_assert_eq!(back.to_quadruple().map(f64::to_bits), q.map(f64::to_bits));
        let (z1, z2) = p.idempotent();
        prop_assert!(dist(Bicomplex::from_idempotent(z1, z2), p) <= 1e-15 * p.norm().max(1.0) * 4.0);
    }

    #[test]
    fn exp_adds(p in bic(2.0), q in bic(2.0)) {
        let lhs = elementary::exp(p + q);
        let rhs = elementary::exp(p) * elementary::exp(q);
        prop_assert!(dist(lhs, rhs) <= 1e-12 * lhs.norm().max(1.0) * 8.0);
    }

    #[test]
    fn exp_inverts_and_is_nonsingular(p in bic(5.0)) {
        let e = elementary::exp(p);
        prop_assert!(!e.is_singular());
        prop_assert!(dist(e * elementary::exp(-p), Bicomplex::one()) <= 1e-11);
    }

    #[test]
    fn exp_is_periodic(p in bic(2.0), m in -5i64..=5, n in -5i64..=5) {
        let period = PeriodLattice { m, n }.period();
        let e = elementary::exp(p);
        let tol = 1e-13 * e.norm().max(1.0) * (1.0 + period.norm()) * 8.0;
        prop_assert!(dist(elementary::exp(p + period), e) <= tol);
    }

    #[test]
    fn cos_sin_are_periodic(p in bic(2.0), m in -5i64..=5, n in -5i64..=5) {
        let tau = std::f64::consts::TAU;
        let period = Bicomplex::new(Complex::new(tau * m as f64, 0.0), Complex::new(0.0, tau * n as f64));
        let tol = |x: Bicomplex| 1e-13 * x.norm().max(1.0) * (1.0 + period.norm()) * 8.0;
        let (c, s) = (elementary::cos(p), elementary::sin(p));
        prop_assert!(dist(elementary::cos(p + period), c) <= tol(c));
        prop_assert!(dist(elementary::sin(p + period), s) <= tol(s));
    }

    #[test]
    fn addition_formulas(p in bic(1.5), q in bic(1.5)) {
        use elementary::{cos, cosh, sin, sinh};
        let check = |lhs: Bicomplex, rhs: Bicomplex| dist(lhs, rhs) <= 1e-12 * lhs.norm().max(rhs.norm()).max(1.0) * 16.0;
        prop_assert!(check(cos(p + q), cos(p) * cos(q) - sin(p) * sin(q)));
        prop_assert!(check(sin(p + q), sin(p) * cos(q) + cos(p) * sin(q)));
        prop_assert!(check(cosh(p + q), cosh(p) * cosh(q) + sinh(p) * sinh(q)));
        prop_assert!(check(sinh(p + q), sinh(p) * cosh(q) + cosh(p) * sinh(q)));
    }

    #[test]
    fn polar_form_reconstructs(p in bic(1e2)) {
        prop_assume!(!p.is_singular_tol(1e-6));
        let polar = polar_form(p).unwrap();
        let w = polar.complex_argument.re;
        prop_assert!((0.0..std::f64::consts::TAU).contains(&w));
        let back = polar.reconstruct();
        let cond = p.norm() / p.cn().norm().sqrt();
        prop_assert!(dist(back, p) <= 1e-13 * p.norm().max(1.0) * cond * 8.0);
    }

    #[test]
    fn harmonic_pairs_are_powers(p in bic(1.5), n in 0usize..=12) {
        let pair = harmonic_polys(n);
        let (g, h) = pair.eval(p.a, p.b);
        let pn = p.powi(n as i32).unwrap();
        let scale = p.norm().powi(n as i32).max(1.0) * (1u64 << n.min(40)) as f64;
        prop_assert!(dist(Bicomplex::new(g, h), pn) <= 1e-14 * scale * 8.0);
    }
}

#[test]
fn harmonic_pairs_follow_recursion() {
    for n in 0..60 {
        let cur = harmonic_polys(n);
        let next = harmonic_polys(n + 1);
        for k in 0..=n + 1 {
            let g = |k: usize| if k <= n { cur.g[k] } else { 0 };
            let h = |k: usize| if k <= n { cur.h[k] } else { 0 };
            let prev = |f: &dyn Fn(usize) -> i128| if k == 0 { 0 } else { f(k - 1) };
            assert_eq!(next.g[k], g(k) - prev(&h));
            assert_eq!(next.h[k], h(k) + prev(&g));
        }
    }
}

#[test]
fn period_lattice_is_exp_kernel() {
    for m in -3..=3 {
        for n in -3..=3 {
            let e = elementary::exp(PeriodLattice { m, n }.period());
            assert!(dist(e, Bicomplex::one()) < 1e-12, "({m}, {n})");
        }
    }
}

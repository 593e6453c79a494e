use hyperplex::elementary as el;
use hyperplex::harmonic::*;
use hyperplex::registry::{lookup, HOLOMORPHIC};
use hyperplex::sampling::{admissible_ball, ball};
use hyperplex::{ArgClass, Bicomplex, BicomplexFn, Complex, Exec};

fn scaled(residual: f64, scale: f64) -> f64 {
    residual / scale.max(1.0)
}

#[test]
fn laplacian_factors_through_lq() {
    for name in ["exp", "sin", "cube", "normsq", "theta", "exp@q", "cos@r∪"] {
        let f = lookup(name).unwrap();
        for p in ball(Bicomplex::zero(), 1.0, 20, 31) {
            let r = laplace_factorization_residual(&f, p).unwrap();
            let size = f.eval(p).unwrap().norm().max(1.0);
            assert!(r <= 1e-5 * size, "{name} at {p}: {r:.3e}");
        }
    }
}

#[test]
fn fueter_regular_functions_are_harmonic() {
    for name in HOLOMORPHIC {
        let f = lookup(name).unwrap().to_argument_class(ArgClass::Q);
        for p in admissible_ball(&f, Bicomplex::zero(), 1.0, 20, 32) {
            let fu = check_fueter(&f, p).unwrap();
            let eps = scaled(fu.residual, fu.scale);
            assert!(eps <= 1e-7, "{} at {p}: fueter {eps:.3e}", f.name());
            let lap = check_laplace4(&f, p).unwrap();
            let size = f.eval(p).unwrap().norm().max(fu.scale).max(1.0);
            assert!(lap.residual / size <= 1e3 * eps + 1e-4, "{} at {p}: Δ₄ {:.3e}", f.name(), lap.residual);
        }
    }
}

#[test]
fn fueter_forms_agree() {
    for name in ["exp@q", "sin", "theta", "normsq", "cube@s∪"] {
        let f = lookup(name).unwrap();
        for p in ball(Bicomplex::zero(), 1.0, 20, 33) {
            for r in [check_fueter(&f, p).unwrap(), check_conjugate_fueter(&f, p).unwrap()] {
                assert!((r.c2[0] - Complex::new(r.r4[0], r.r4[1])).norm() < 1e-12);
                assert!((r.c2[1] - Complex::new(r.r4[2], r.r4[3])).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn regular_functions_form_an_algebra() {
    let names = ["exp@q", "sin@q", "cube@q", "cosh@q"];
    let fns: Vec<BicomplexFn> = names.iter().map(|n| lookup(n).unwrap()).collect();
    let mut built = Vec::new();
    for (i, f) in fns.iter().enumerate() {
        for g in &fns[i + 1..] {
            built.push(f.add(g));
            built.push(f.mul(g));
            built.push(f.div(g));
            built.push(lookup(&f.name().replace("@q", "")).unwrap().compose(g));
        }
    }
    for f in &built {
        for p in admissible_ball(f, Bicomplex::zero(), 0.8, 20, 34) {
            let cr = check_class_cr(f, ArgClass::Q, p, hyperplex::calculus::default_step(p)).unwrap();
            assert!(scaled(cr.residual, cr.scale) <= 1e-6, "{} at {p}: cr {:.3e}", f.name(), cr.residual);
            let fu = check_fueter(f, p).unwrap();
            assert!(scaled(fu.residual, fu.scale) <= 1e-6, "{} at {p}: fueter {:.3e}", f.name(), fu.residual);
        }
    }
}

#[test]
fn conjugate_regular_functions_pass_lanczos() {
    let f = lookup("cos@s∪").unwrap();
    for p in ball(Bicomplex::zero(), 1.0, 20, 35) {
        let r = check_conjugate_fueter(&f, p).unwrap();
        assert!(r.residual <= 1e-7, "{p}: {:.3e}", r.residual);
        assert!(check_fueter(&f, p).unwrap().residual > 1e-3);
    }
}

#[test]
fn two_dimensional_cauchy_riemann_and_laplace() {
    let f = |a: Complex, _b: Complex| Ok(a.exp());
    let g = |a: Complex, b: Complex| Ok(Complex::new(f(a, b)?.re, 0.0));
    let h = |a: Complex, b: Complex| Ok(Complex::new(f(a, b)?.im, 0.0));
    for p in ball(Bicomplex::zero(), 1.0, 20, 36) {
        assert!(apply_operator_complex(OperatorKind::Da, &f, p.a, p.b).unwrap().norm() <= 1e-8);
        assert!(apply_operator_complex(OperatorKind::Laplace2, &g, p.a, p.b).unwrap().norm() <= 1e-6);
        assert!(apply_operator_complex(OperatorKind::Laplace2, &h, p.a, p.b).unwrap().norm() <= 1e-6);
    }
    let conj = |a: Complex, _b: Complex| Ok(a.conj());
    let a = Complex::new(0.3, -0.2);
    assert!(apply_operator_complex(OperatorKind::DaConj, &conj, a, a).unwrap().norm() <= 1e-10);
    assert!((apply_operator_complex(OperatorKind::Da, &conj, a, a).unwrap() - 2.0).norm() <= 1e-10);
}

#[test]
fn operator_pairs_reject_complex_maps() {
    let f = |a: Complex, _b: Complex| Ok(a);
    let z = Complex::new(0.0, 0.0);
    assert!(apply_operator_complex(OperatorKind::Lq, &f, z, z).is_err());
}

#[test]
fn classification_examples() {
    let opts = ClassifyOptions { samples: 24, ..ClassifyOptions::default() };
    let exp = classify(&lookup("exp").unwrap(), &opts).unwrap();
    assert_eq!(exp.members, vec![ArgClass::P]);
    assert!(!exp.fueter_regular && exp.harmonic);
    let e = classify(&e_function(), &opts).unwrap();
    assert_eq!(e.members, vec![ArgClass::Q]);
    assert!(e.fueter_regular && e.harmonic);
    let zero = classify(&lookup("zero").unwrap(), &opts).unwrap();
    assert_eq!(zero.members.len(), 8);
    assert!(zero.class_residuals.iter().all(|(_, r)| *r == 0.0));
    assert_eq!(zero.fueter_residual, 0.0);
    let normsq = classify(&lookup("normsq").unwrap(), &opts).unwrap();
    assert!(normsq.members.is_empty() && !normsq.harmonic);
}

#[test]
fn class_membership_implies_harmonic() {
    let opts = ClassifyOptions { samples: 16, ..ClassifyOptions::default() };
    for name in ["sin@r", "exp@s∪", "cube@q∪", "cosh@p∪"] {
        let r = classify(&lookup(name).unwrap(), &opts).unwrap();
        let best = r.class_residuals.iter().map(|(_, v)| *v).fold(f64::INFINITY, f64::min);
        assert!(!r.members.is_empty(), "{name}");
        assert!(r.laplace4_residual <= best + 1e-5, "{name}: {:.3e}", r.laplace4_residual);
    }
}

#[test]
fn classification_is_independent_of_execution() {
    let f = lookup("tan@q").unwrap();
    let seq = classify(&f, &ClassifyOptions { samples: 24, exec: Exec::Sequential, ..ClassifyOptions::default() }).unwrap();
    let par = classify(&f, &ClassifyOptions { samples: 24, exec: Exec::Parallel, ..ClassifyOptions::default() }).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn quadruple_squares_laplacian_is_eight() {
    let f = lookup("normsq").unwrap();
    for p in ball(Bicomplex::zero(), 2.0, 20, 37) {
        let r = check_laplace4(&f, p).unwrap();
        assert!((r.value - Bicomplex::from_real(8.0)).norm() <= 1e-5, "{p}");
    }
}

#[test]
fn e_is_regular_and_harmonic() {
    let e = e_function();
    for p in ball(Bicomplex::zero(), 1.0, 20, 38) {
        assert!(check_fueter(&e, p).unwrap().residual <= 1e-7);
        assert!(check_laplace4(&e, p).unwrap().residual <= 1e-5);
        let d = regular_derivative(&e, ArgClass::Q, p, Default::default()).unwrap();
        let expected = el::exp(ArgClass::Q.map(p));
        assert!((d.value - expected).norm() <= 1e-7);
        assert!(d.max_disagreement <= 1e-6);
    }
}

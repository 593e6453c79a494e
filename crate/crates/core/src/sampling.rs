//! Deterministic point sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Bicomplex;
use crate::function::BicomplexFn;

/// Probe distance of [`is_admissible`].
pub const ADMISSIBLE_PROBE: f64 = 1e-2;

/// `n` points uniformly distributed in the closed ball of `radius` about
/// `center`, reproducible from `seed`.
pub fn ball(center: Bicomplex, radius: f64, n: usize, seed: u64) -> Vec<Bicomplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        let r2: f64 = v.iter().map(|x| x * x).sum();
        if r2 <= 1.0 {
            out.push(center + Bicomplex::from_quadruple(v) * radius);
        }
    }
    out
}

/// `n` points on the sphere of `radius` about `center`.
pub fn sphere(center: Bicomplex, radius: f64, n: usize, seed: u64) -> Vec<Bicomplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        let r2: f64 = v.iter().map(|x| x * x).sum();
        if r2 <= 1.0 && r2 > 1e-6 {
            out.push(center + Bicomplex::from_quadruple(v) * (radius / r2.sqrt()));
        }
    }
    out
}

/// True when `ψ` evaluates near `p` and its second differences at scale
/// [`ADMISSIBLE_PROBE`] stay below 1% of its size along every axis. This
/// rejects points near poles, singular cones and branch cuts.
pub fn is_admissible(f: &BicomplexFn, p: Bicomplex) -> bool {
    let Ok(f0) = f.eval(p) else { return false };
    if !f0.is_finite() {
        return false;
    }
    let scale = f0.norm().max(1.0);
    let units = [Bicomplex::one(), Bicomplex::i(), Bicomplex::j(), Bicomplex::k()];
    units.iter().all(|&e| {
        let d = e * ADMISSIBLE_PROBE;
        match (f.eval(p + d), f.eval(p - d)) {
            (Ok(fp), Ok(fm)) => (fp + fm - f0 * 2.0).norm() <= 1e-2 * scale,
            _ => false,
        }
    })
}

/// `n` admissible points for `ψ` drawn from the ball, in draw order.
/// Gives up after `100 n` draws and returns what it has.
pub fn admissible_ball(f: &BicomplexFn, center: Bicomplex, radius: f64, n: usize, seed: u64) -> Vec<Bicomplex> {
    ball(center, radius, 100 * n, seed).into_iter().filter(|&p| is_admissible(f, p)).take(n).collect()
}

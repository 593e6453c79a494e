use std::ops::{Add, Mul, Sub};

use super::Quaternion;

/// Octonion as a pair of quaternions, multiplied by the Cayley–Dickson rule
/// `(q, r) ⊗ (s, t) = (q×s − t*×r, r×s* + t×q)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    pub q: Quaternion,
    pub r: Quaternion,
}

impl Octonion {
    pub const fn new(q: Quaternion, r: Quaternion) -> Self {
        Octonion { q, r }
    }

    pub fn from_components(x: [f64; 8]) -> Self {
        Octonion::new(
            Quaternion::from_quadruple([x[0], x[1], x[2], x[3]]),
            Quaternion::from_quadruple([x[4], x[5], x[6], x[7]]),
        )
    }

    pub fn to_components(self) -> [f64; 8] {
        let [a, b, c, d] = self.q.to_quadruple();
        let [e, f, g, h] = self.r.to_quadruple();
        [a, b, c, d, e, f, g, h]
    }

    pub fn conj(self) -> Self {
        Octonion::new(self.q.conj(), -self.r)
    }

    pub fn norm_sqr(self) -> f64 {
        self.q.square_norm() + self.r.square_norm()
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, o: Octonion) -> Octonion {
        let (q, r, s, t) = (self.q, self.r, o.q, o.r);
        Octonion::new(q * s - t.conj() * r, r * s.conj() + t * q)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, o: Octonion) -> Octonion {
        Octonion::new(self.q + o.q, self.r + o.r)
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, o: Octonion) -> Octonion {
        Octonion::new(self.q - o.q, self.r - o.r)
    }
}

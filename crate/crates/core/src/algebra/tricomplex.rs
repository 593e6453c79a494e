use std::ops::{Add, Mul, Sub};

use super::Bicomplex;

/// Tricomplex number as a pair of bicomplex numbers, multiplied by
/// `(q, r) ⊙ (s, t) = (q⊙s − t⊙r, r⊙s + t⊙q)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tricomplex {
    pub q: Bicomplex,
    pub r: Bicomplex,
}

impl Tricomplex {
    pub const fn new(q: Bicomplex, r: Bicomplex) -> Self {
        Tricomplex { q, r }
    }

    pub fn from_components(x: [f64; 8]) -> Self {
        Tricomplex::new(
            Bicomplex::from_quadruple([x[0], x[1], x[2], x[3]]),
            Bicomplex::from_quadruple([x[4], x[5], x[6], x[7]]),
        )
    }

    pub fn to_components(self) -> [f64; 8] {
        let [a, b, c, d] = self.q.to_quadruple();
        let [e, f, g, h] = self.r.to_quadruple();
        [a, b, c, d, e, f, g, h]
    }

    pub fn norm_sqr(self) -> f64 {
        self.q.norm_sqr() + self.r.norm_sqr()
    }
}

impl Mul for Tricomplex {
    type Output = Tricomplex;
    fn mul(self, o: Tricomplex) -> Tricomplex {
        let (q, r, s, t) = (self.q, self.r, o.q, o.r);
        Tricomplex::new(q * s - t * r, r * s + t * q)
    }
}

impl Add for Tricomplex {
    type Output = Tricomplex;
    fn add(self, o: Tricomplex) -> Tricomplex {
        Tricomplex::new(self.q + o.q, self.r + o.r)
    }
}

impl Sub for Tricomplex {
    type Output = Tricomplex;
    fn sub(self, o: Tricomplex) -> Tricomplex {
        Tricomplex::new(self.q - o.q, self.r - o.r)
    }
}

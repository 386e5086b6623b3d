use std::ops::{Add, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Minkowski metric `diag(+1, -1, -1, -1)`, diagonal entries only.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// `g_μν` (equal to `g^μν` for this metric).
pub fn metric(mu: usize, nu: usize) -> f64 {
    if mu == nu {
        METRIC[mu]
    } else {
        0.0
    }
}

/// A real four-vector with contravariant components `(x⁰, x¹, x², x³)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: Self = Self([0.0; 4]);

    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self([t, x, y, z])
    }

    /// Timelike vector with mass `m` and spatial momentum `(px, py, pz)`.
    pub fn on_shell(m: f64, px: f64, py: f64, pz: f64) -> Self {
        let e = (m * m + px * px + py * py + pz * pz).sqrt();
        Self::new(e, px, py, pz)
    }

    pub fn components(&self) -> [f64; 4] {
        self.0
    }

    /// Covariant components `x_μ = g_μν x^ν`.
    pub fn lower(&self) -> [f64; 4] {
        let c = self.0;
        [c[0], -c[1], -c[2], -c[3]]
    }

    pub fn dot(&self, other: &Self) -> f64 {
        let (a, b) = (self.0, other.0);
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
    }

    pub fn minkowski_square(&self) -> f64 {
        self.dot(self)
    }

    pub fn spatial_norm_sqr(&self) -> f64 {
        let c = self.0;
        c[1] * c[1] + c[2] * c[2] + c[3] * c[3]
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// Pure boost with velocity `beta` (|beta| < 1, units of c).
    pub fn boost(&self, beta: [f64; 3]) -> Self {
        let b2 = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
        if b2 == 0.0 {
            return *self;
        }
        let gamma = 1.0 / (1.0 - b2).sqrt();
        let [t, x, y, z] = self.0;
        let bx = beta[0] * x + beta[1] * y + beta[2] * z;
        let k = (gamma - 1.0) * bx / b2;
        Self::new(
            gamma * (t - bx),
            x + k * beta[0] - gamma * t * beta[0],
            y + k * beta[1] - gamma * t * beta[1],
            z + k * beta[2] - gamma * t * beta[2],
        )
    }

    /// Spatial rotation by `angle` about `axis` (Rodrigues formula).
    pub fn rotate(&self, axis: [f64; 3], angle: f64) -> Self {
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        let k = [axis[0] / n, axis[1] / n, axis[2] / n];
        let v = [self.0[1], self.0[2], self.0[3]];
        let (s, c) = angle.sin_cos();
        let kv = k[0] * v[0] + k[1] * v[1] + k[2] * v[2];
        let cross = [
            k[1] * v[2] - k[2] * v[1],
            k[2] * v[0] - k[0] * v[2],
            k[0] * v[1] - k[1] * v[0],
        ];
        let r = |i: usize| v[i] * c + cross[i] * s + k[i] * kv * (1.0 - c);
        Self::new(self.0[0], r(0), r(1), r(2))
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, mu: usize) -> &f64 {
        &self.0[mu]
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|c| -c))
    }
}

impl Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self(self.0.map(|c| c * s))
    }
}

impl From<[f64; 4]> for FourVector {
    fn from(c: [f64; 4]) -> Self {
        Self(c)
    }
}

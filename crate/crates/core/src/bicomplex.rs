//! Commutative four-unit scalars `a + b·i + c·j + d·ij`.
//!
//! The complex unit squares to `-1`, the hyperbolic unit to `+1`, and the two
//! commute. The ring has zero divisors (`(1 + j)(1 - j) = 0`), so there is no
//! general inverse; only division by nonzero reals is offered.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A bicomplex scalar. Serializes as `[re, im_i, im_j, im_ij]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Bicomplex {
    pub re: f64,
    /// Coefficient of `i`.
    pub im_i: f64,
    /// Coefficient of `j`.
    pub im_j: f64,
    /// Coefficient of `ij`.
    pub im_ij: f64,
}

impl Bicomplex {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const IJ: Self = Self::new(0.0, 0.0, 0.0, 1.0);
    /// The pseudoscalar of the spatial algebra, `-ij`. It squares to `-1` and
    /// commutes with every element.
    pub const IOTA: Self = Self::new(0.0, 0.0, 0.0, -1.0);

    pub const fn new(re: f64, im_i: f64, im_j: f64, im_ij: f64) -> Self {
        Self {
            re,
            im_i,
            im_j,
            im_ij,
        }
    }

    pub const fn real(re: f64) -> Self {
        Self::new(re, 0.0, 0.0, 0.0)
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.re, self.im_i, self.im_j, self.im_ij]
    }

    /// Flips the sign of the complex unit.
    pub fn conj_i(self) -> Self {
        Self::new(self.re, -self.im_i, self.im_j, -self.im_ij)
    }

    /// Flips the sign of the hyperbolic unit.
    pub fn conj_j(self) -> Self {
        Self::new(self.re, self.im_i, -self.im_j, -self.im_ij)
    }

    /// Flips both units; `ij` is left unchanged.
    pub fn conj_ij(self) -> Self {
        Self::new(self.re, -self.im_i, -self.im_j, self.im_ij)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.re * s, self.im_i * s, self.im_j * s, self.im_ij * s)
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.to_array().iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// `true` iff the largest componentwise difference is at most
    /// `tol * (1 + largest component magnitude of either operand)`.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        let diff = (self - other).max_abs();
        diff <= tol * (1.0 + self.max_abs().max(other.max_abs()))
    }

    /// `true` when every non-real component is zero.
    pub fn is_real(self) -> bool {
        self.im_i == 0.0 && self.im_j == 0.0 && self.im_ij == 0.0
    }
}

impl From<[f64; 4]> for Bicomplex {
    fn from(c: [f64; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

impl From<Bicomplex> for [f64; 4] {
    fn from(b: Bicomplex) -> Self {
        b.to_array()
    }
}

impl From<f64> for Bicomplex {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl Add for Bicomplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.re + o.re,
            self.im_i + o.im_i,
            self.im_j + o.im_j,
            self.im_ij + o.im_ij,
        )
    }
}

impl Sub for Bicomplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.re - o.re,
            self.im_i - o.im_i,
            self.im_j - o.im_j,
            self.im_ij - o.im_ij,
        )
    }
}

impl Neg for Bicomplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im_i, -self.im_j, -self.im_ij)
    }
}

impl Mul for Bicomplex {
    type Output = Self;
    // i² = -1, j² = +1, (ij)² = -1, i·ij = -j, j·ij = i
    fn mul(self, o: Self) -> Self {
        let (a0, a1, a2, a3) = (self.re, self.im_i, self.im_j, self.im_ij);
        let (b0, b1, b2, b3) = (o.re, o.im_i, o.im_j, o.im_ij);
        Self::new(
            a0 * b0 - a1 * b1 + a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 + a3 * b2,
            a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )
    }
}

impl Mul<f64> for Bicomplex {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Bicomplex> for f64 {
    type Output = Bicomplex;
    fn mul(self, b: Bicomplex) -> Bicomplex {
        b.scale(self)
    }
}

impl Div<f64> for Bicomplex {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        self.scale(1.0 / s)
    }
}

impl AddAssign for Bicomplex {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl SubAssign for Bicomplex {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl MulAssign for Bicomplex {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl Sum for Bicomplex {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:+}i {:+}j {:+}ij",
            self.re, self.im_i, self.im_j, self.im_ij
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    fn unit(k: usize) -> Bicomplex {
        let mut c = [0.0; 4];
        c[k] = 1.0;
        c.into()
    }

    /// Multiplies by expanding the sixteen unit products from the basic rules
    /// i·i = -1, j·j = 1, ij = ji, read off bit by bit.
    fn brute_mul(a: Bicomplex, b: Bicomplex) -> Bicomplex {
        // unit k has bit0 = i-power, bit1 = j-power (0:1, 1:i, 2:j, 3:ij)
        let ac = a.to_array();
        let bc = b.to_array();
        let mut out = [0.0; 4];
        for (ka, &x) in ac.iter().enumerate() {
            for (kb, &y) in bc.iter().enumerate() {
                let i_pow = (ka & 1) + (kb & 1);
                let sign = if i_pow == 2 { -1.0 } else { 1.0 };
                out[ka ^ kb] += sign * x * y;
            }
        }
        out.into()
    }

    #[test]
    fn unit_table() {
        let (i, j, ij) = (Bicomplex::I, Bicomplex::J, Bicomplex::IJ);
        assert_eq!(i * i, -Bicomplex::ONE);
        assert_eq!(j * j, Bicomplex::ONE);
        assert_eq!(ij * ij, -Bicomplex::ONE);
        assert_eq!(i * j, ij);
        assert_eq!(j * i, ij);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(unit(a) * unit(b), brute_mul(unit(a), unit(b)));
            }
        }
    }

    #[test]
    fn worked_products() {
        let one_i = Bicomplex::ONE + Bicomplex::I;
        let one_j = Bicomplex::ONE + Bicomplex::J;
        assert_eq!(one_i * one_j, Bicomplex::new(1.0, 1.0, 1.0, 1.0));
        assert_eq!(Bicomplex::IOTA * Bicomplex::IOTA, -Bicomplex::ONE);
        assert_eq!(brute_mul(Bicomplex::IOTA, Bicomplex::IOTA), -Bicomplex::ONE);
    }

    #[test]
    fn zero_divisors() {
        let a = Bicomplex::ONE + Bicomplex::J;
        let b = Bicomplex::ONE - Bicomplex::J;
        assert_eq!(a * b, Bicomplex::ZERO);
    }

    #[test]
    fn conjugations() {
        let x = Bicomplex::new(1.0, 1.0, 1.0, 1.0);
        assert_eq!(x.conj_i(), Bicomplex::new(1.0, -1.0, 1.0, -1.0));
        assert_eq!(Bicomplex::J.conj_j(), -Bicomplex::J);
        assert_eq!(Bicomplex::IJ.conj_ij(), Bicomplex::IJ);
    }

    #[test]
    fn approx_eq_cases() {
        let x = Bicomplex::new(0.3, -2.0, 1.5, 7.0);
        assert!(x.approx_eq(x, 0.0));
        assert!(Bicomplex::ONE.approx_eq(Bicomplex::real(1.0 + 1e-15), 1e-12));
        assert!(!Bicomplex::J.approx_eq(-Bicomplex::J, 1e-12));
    }

    #[test]
    fn serializes_as_array() {
        let x = Bicomplex::new(1.0, 2.0, 3.0, 4.0);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[1.0,2.0,3.0,4.0]");
        let back: Bicomplex = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    fn arb() -> impl Strategy<Value = Bicomplex> {
        prop::array::uniform4(-10.0..10.0f64).prop_map(Bicomplex::from)
    }

    fn close(a: Bicomplex, b: Bicomplex) -> bool {
        a.approx_eq(b, TOL)
    }

    proptest! {
        #[test]
        fn mul_matches_brute_expansion(a in arb(), b in arb()) {
            prop_assert!(close(a * b, brute_mul(a, b)));
        }

        #[test]
        fn ring_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert!(close(a + b, b + a));
            prop_assert!(close(a * b, b * a));
            prop_assert!(close((a + b) + c, a + (b + c)));
            prop_assert!(close((a * b) * c, a * (b * c)));
            prop_assert!(close(a * (b + c), a * b + a * c));
            prop_assert!(close(a - a, Bicomplex::ZERO));
            prop_assert!(close(a * Bicomplex::ONE, a));
        }

        #[test]
        fn conjugations_are_involutive_homomorphisms(a in arb(), b in arb()) {
            let maps: [fn(Bicomplex) -> Bicomplex; 3] =
                [Bicomplex::conj_i, Bicomplex::conj_j, Bicomplex::conj_ij];
            for f in maps {
                prop_assert_eq!(f(f(a)), a);
                prop_assert!(close(f(a * b), f(a) * f(b)));
                prop_assert!(close(f(a + b), f(a) + f(b)));
            }
            prop_assert_eq!(a.conj_ij(), a.conj_i().conj_j());
        }
    }
}

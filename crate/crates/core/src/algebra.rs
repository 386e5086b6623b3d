//! The hyperbolic Pauli algebra as 2×2 matrices over [`Bicomplex`].
//!
//! Basis paravectors are `e₀ = 1` and `e_k = j·σ_k`. The three involutions
//! are realized on the matrix representation directly:
//!
//! * Clifford conjugation [`Element::bar`]: transpose, then flip `i` and `j`.
//! * Reversion: transpose, then flip `i`.
//! * Grade involution: flip `j`, no transpose.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};

/// A member of the algebra. Serializes as a row-major `[[b00, b01], [b10, b11]]`
/// with each entry a four-element array.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element {
    pub entries: [[Bicomplex; 2]; 2],
}

impl Element {
    pub const ZERO: Self = Self {
        entries: [[Bicomplex::ZERO; 2]; 2],
    };
    pub const IDENTITY: Self = Self {
        entries: [
            [Bicomplex::ONE, Bicomplex::ZERO],
            [Bicomplex::ZERO, Bicomplex::ONE],
        ],
    };

    pub const fn new(entries: [[Bicomplex; 2]; 2]) -> Self {
        Self { entries }
    }

    /// `s·1`.
    pub fn scalar(s: Bicomplex) -> Self {
        Self::IDENTITY.scale(s)
    }

    pub fn get(&self, row: usize, col: usize) -> Bicomplex {
        self.entries[row][col]
    }

    pub fn map(self, f: impl Fn(Bicomplex) -> Bicomplex) -> Self {
        let e = self.entries;
        Self::new([[f(e[0][0]), f(e[0][1])], [f(e[1][0]), f(e[1][1])]])
    }

    pub fn transpose(self) -> Self {
        let e = self.entries;
        Self::new([[e[0][0], e[1][0]], [e[0][1], e[1][1]]])
    }

    pub fn scale(self, s: Bicomplex) -> Self {
        self.map(|x| x * s)
    }

    pub fn scale_real(self, s: f64) -> Self {
        self.map(|x| x.scale(s))
    }

    pub fn trace(&self) -> Bicomplex {
        self.entries[0][0] + self.entries[1][1]
    }

    /// Clifford conjugation.
    pub fn bar(self) -> Self {
        self.transpose().map(Bicomplex::conj_ij)
    }

    pub fn reversion(self) -> Self {
        self.transpose().map(Bicomplex::conj_i)
    }

    pub fn grade_involution(self) -> Self {
        self.map(Bicomplex::conj_j)
    }

    /// Returns the scalar `s` if `self == s·1` exactly.
    pub fn as_scalar(&self) -> Option<Bicomplex> {
        let e = self.entries;
        (e[0][1] == Bicomplex::ZERO && e[1][0] == Bicomplex::ZERO && e[0][0] == e[1][1])
            .then_some(e[0][0])
    }

    /// Returns the scalar `s` if `self` is within `tol` of `s·1`.
    pub fn as_scalar_approx(&self, tol: f64) -> Option<Bicomplex> {
        let s = self.trace().scale(0.5);
        self.approx_eq(&Self::scalar(s), tol).then_some(s)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .fold(0.0_f64, |m, b| m.max(b.max_abs()))
    }

    /// Entrywise [`Bicomplex::approx_eq`] with a shared magnitude scale.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let diff = (*self - *other).max_abs();
        diff <= tol * (1.0 + self.max_abs().max(other.max_abs()))
    }
}

/// Standard Pauli matrix `σ_k`, `k ∈ 1..=3`.
pub fn pauli(k: usize) -> Result<Element> {
    let (o, z, i) = (Bicomplex::ONE, Bicomplex::ZERO, Bicomplex::I);
    match k {
        1 => Ok(Element::new([[z, o], [o, z]])),
        2 => Ok(Element::new([[z, -i], [i, z]])),
        3 => Ok(Element::new([[o, z], [z, -o]])),
        _ => Err(Error::IndexOutOfRange {
            index: k,
            min: 1,
            max: 3,
        }),
    }
}

/// Basis paravector `e_μ`: `e₀ = 1`, `e_k = j·σ_k`.
pub fn basis(mu: usize) -> Result<Element> {
    match mu {
        0 => Ok(Element::IDENTITY),
        1..=3 => Ok(pauli(mu)?.scale(Bicomplex::J)),
        _ => Err(Error::IndexOutOfRange {
            index: mu,
            min: 0,
            max: 3,
        }),
    }
}

/// All four basis paravectors.
pub fn basis_all() -> [Element; 4] {
    let j = Bicomplex::J;
    let (o, z, i) = (Bicomplex::ONE, Bicomplex::ZERO, Bicomplex::I);
    [
        Element::IDENTITY,
        Element::new([[z, o], [o, z]]).scale(j),
        Element::new([[z, -i], [i, z]]).scale(j),
        Element::new([[o, z], [z, -o]]).scale(j),
    ]
}

/// The pseudoscalar `e₁·ē₂·e₃`, checked to be a multiple of the identity.
pub fn pseudoscalar() -> Result<Bicomplex> {
    let [_, e1, e2, e3] = basis_all();
    let product = e1 * e2.bar() * e3;
    product
        .as_scalar()
        .ok_or_else(|| Error::Consistency(format!("e1·bar(e2)·e3 is not a scalar: {product}")))
}

/// `½·Tr(x̄·y)`.
pub fn scalar_product(x: &Element, y: &Element) -> Bicomplex {
    (x.bar() * *y).trace().scale(0.5)
}

impl Add for Element {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = (self.entries, o.entries);
        Self::new([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl AddAssign for Element {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Element {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Element {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(Neg::neg)
    }
}

impl Mul for Element {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (self.entries, o.entries);
        let mut out = [[Bicomplex::ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Self::new(out)
    }
}

impl Mul<Bicomplex> for Element {
    type Output = Self;
    fn mul(self, s: Bicomplex) -> Self {
        self.scale(s)
    }
}

impl Mul<Element> for Bicomplex {
    type Output = Element;
    fn mul(self, e: Element) -> Element {
        e.scale(self)
    }
}

impl Mul<f64> for Element {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale_real(s)
    }
}

impl Mul<Element> for f64 {
    type Output = Element;
    fn mul(self, e: Element) -> Element {
        e.scale_real(self)
    }
}

impl std::iter::Sum for Element {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, Add::add)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.entries;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            e[0][0], e[0][1], e[1][0], e[1][1]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::levi_civita3;
    use proptest::prelude::*;

    fn e(mu: usize) -> Element {
        basis(mu).unwrap()
    }

    #[test]
    fn basis_and_pauli() {
        assert_eq!(e(0), Element::IDENTITY);
        assert!(basis(4).is_err());
        assert!(pauli(0).is_err());
        assert!(pauli(4).is_err());
        for k in 1..=3 {
            assert_eq!(e(k), basis_all()[k]);
            assert_eq!(pauli(k).unwrap().trace(), Bicomplex::ZERO);
            assert_eq!(e(k) * e(k), Element::IDENTITY);
        }
        assert_eq!(Element::IDENTITY.trace(), Bicomplex::real(2.0));
        assert_eq!(e(1) * e(2), e(3).scale(Bicomplex::IJ));
    }

    #[test]
    fn multiplication_rules_all_pairs() {
        // e_k e_l = δ_kl + ij ε_klm e_m
        for k in 1..=3 {
            for l in 1..=3 {
                let mut expected = if k == l {
                    Element::IDENTITY
                } else {
                    Element::ZERO
                };
                for m in 1..=3 {
                    let eps = levi_civita3(k, l, m);
                    if eps != 0.0 {
                        expected += e(m).scale(Bicomplex::IJ.scale(eps));
                    }
                }
                assert_eq!(e(k) * e(l), expected, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn involutions_on_basis() {
        assert_eq!(e(0).bar(), e(0));
        for k in 1..=3 {
            assert_eq!(e(k).bar(), -e(k));
            assert_eq!(e(k).reversion(), e(k));
            assert_eq!(e(k).grade_involution(), -e(k));
        }
    }

    #[test]
    fn pseudoscalar_value() {
        let iota = pseudoscalar().unwrap();
        assert_eq!(iota, -Bicomplex::IJ);
        assert_eq!(iota, Bicomplex::IOTA);
        assert_eq!(iota * iota, -Bicomplex::ONE);
    }

    #[test]
    fn conjugated_products_in_terms_of_pseudoscalar() {
        // e_k ē_l = -δ_kl + ı ε_klm e_m
        let iota = pseudoscalar().unwrap();
        for k in 1..=3 {
            for l in 1..=3 {
                let mut expected = if k == l {
                    -Element::IDENTITY
                } else {
                    Element::ZERO
                };
                for m in 1..=3 {
                    let eps = levi_civita3(k, l, m);
                    if eps != 0.0 {
                        expected += e(m).scale(iota.scale(eps));
                    }
                }
                assert_eq!(e(k) * e(l).bar(), expected);
            }
        }
    }

    #[test]
    fn metric_from_trace() {
        for mu in 0..4 {
            for nu in 0..4 {
                let g = match (mu, nu) {
                    (0, 0) => 1.0,
                    (a, b) if a == b => -1.0,
                    _ => 0.0,
                };
                assert_eq!(scalar_product(&e(mu), &e(nu)), Bicomplex::real(g));
            }
        }
    }

    #[test]
    fn pseudoscalar_product_is_not_scalar_for_wrong_order() {
        let [_, e1, e2, _] = basis_all();
        assert!((e1 * e2).as_scalar().is_none());
    }

    #[test]
    fn serializes_nested() {
        let s = serde_json::to_string(&Element::IDENTITY).unwrap();
        assert_eq!(
            s,
            "[[[1.0,0.0,0.0,0.0],[0.0,0.0,0.0,0.0]],[[0.0,0.0,0.0,0.0],[1.0,0.0,0.0,0.0]]]"
        );
    }

    fn arb_element() -> impl Strategy<Value = Element> {
        prop::array::uniform16(-3.0..3.0f64).prop_map(|c| {
            let b = |k: usize| Bicomplex::new(c[k], c[k + 1], c[k + 2], c[k + 3]);
            Element::new([[b(0), b(4)], [b(8), b(12)]])
        })
    }

    proptest! {
        #[test]
        fn anti_automorphisms(a in arb_element(), b in arb_element()) {
            prop_assert!((a * b).bar().approx_eq(&(b.bar() * a.bar()), 1e-12));
            prop_assert!((a * b).reversion().approx_eq(&(b.reversion() * a.reversion()), 1e-12));
            prop_assert!((a * b).grade_involution()
                .approx_eq(&(a.grade_involution() * b.grade_involution()), 1e-12));
        }

        #[test]
        fn involutive(a in arb_element()) {
            prop_assert_eq!(a.bar().bar(), a);
            prop_assert_eq!(a.reversion().reversion(), a);
            prop_assert_eq!(a.grade_involution().grade_involution(), a);
            prop_assert_eq!(a.grade_involution(), a.bar().reversion());
            prop_assert_eq!(a.grade_involution(), a.reversion().bar());
        }

        #[test]
        fn associative(a in arb_element(), b in arb_element(), c in arb_element()) {
            prop_assert!(((a * b) * c).approx_eq(&(a * (b * c)), 1e-12));
        }
    }
}

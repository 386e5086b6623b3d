//! Relativistic structure on top of the hyperbolic Pauli algebra: paravector
//! embedding of four-vectors, the dot/wedge/≀ products, spin tensors in both
//! conventions, the spin trace table and the Pauli-Lubanski vector.

mod four_vector;
mod trace;

pub use four_vector::{metric, FourVector, METRIC};
pub use trace::{
    compare_reference, epsilon4, eta_closed_form, eta_tensor, trace_table, trace_table_cached,
    ReferenceComparison, TableEntry, Tensor4, TraceTable, REFERENCE_TABLE,
};

use serde::{Deserialize, Serialize};

use crate::algebra::{basis_all, scalar_product, Element};
use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};

/// `Σ v^μ e_μ`.
pub fn paravector(v: &FourVector) -> Element {
    basis_all()
        .iter()
        .zip(v.0)
        .map(|(e, c)| e.scale_real(c))
        .sum()
}

/// Left inverse of [`paravector`]. Fails unless `a` is a real combination
/// of the four basis paravectors.
pub fn coords(a: &Element) -> Result<FourVector> {
    let basis = basis_all();
    let mut v = [0.0; 4];
    for (mu, e) in basis.iter().enumerate() {
        let c = scalar_product(e, a).scale(METRIC[mu]);
        if !c.approx_eq(Bicomplex::real(c.re), 1e-12 * (1.0 + a.max_abs())) {
            return Err(Error::NotParavector(format!(
                "coefficient {mu} is not real: {c}"
            )));
        }
        v[mu] = c.re;
    }
    let v = FourVector(v);
    if !paravector(&v).approx_eq(a, 1e-12) {
        return Err(Error::NotParavector(format!("{a}")));
    }
    Ok(v)
}

/// `½(x ȳ + y x̄)`; a multiple of the identity for paravectors.
pub fn dot(x: &Element, y: &Element) -> Element {
    (*x * y.bar() + *y * x.bar()).scale_real(0.5)
}

/// `½(x ȳ - y x̄)`.
pub fn wedge(x: &Element, y: &Element) -> Element {
    (*x * y.bar() - *y * x.bar()).scale_real(0.5)
}

/// `½(x ȳ - x̄ y)`, the product whose sign flips when the bar changes side.
pub fn wr(x: &Element, y: &Element) -> Element {
    (*x * y.bar() - x.bar() * *y).scale_real(0.5)
}

/// Which of the two printed forms of the spin tensor to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Entries built from the Pauli matrices `σ_k`; `e_μ∧e_ν = -i σ_μν`.
    Old,
    /// Entries built from `e_k = jσ_k` and `ı`; `e_μ∧e_ν = ı σ_μν`.
    New,
}

/// Antisymmetric 4×4 array of algebra elements.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinTensor {
    pub convention: Convention,
    pub sigma: [[Element; 4]; 4],
}

impl SpinTensor {
    pub fn get(&self, mu: usize, nu: usize) -> Element {
        self.sigma[mu][nu]
    }
}

fn levi_civita3(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

/// The spin tensor exactly as tabulated for each convention.
pub fn spin_tensor(convention: Convention) -> SpinTensor {
    let e = basis_all();
    // spatial unit in the chosen convention, and the time-space prefactor
    let (unit, time_space): ([Element; 4], Bicomplex) = match convention {
        Convention::Old => {
            let s = e.map(|x| x.scale(Bicomplex::J));
            (s, -Bicomplex::IJ)
        }
        Convention::New => (e, Bicomplex::IOTA),
    };
    let mut sigma = [[Element::ZERO; 4]; 4];
    for k in 1..4 {
        sigma[0][k] = unit[k].scale(time_space);
        sigma[k][0] = -sigma[0][k];
        for l in 1..4 {
            for m in 1..4 {
                let eps = levi_civita3(k, l, m);
                if eps != 0.0 {
                    sigma[k][l] = unit[m].scale_real(eps);
                }
            }
        }
    }
    SpinTensor { convention, sigma }
}

/// Spin angular-momentum generators `s_μν = σ_μν / 2` (new convention).
pub fn spin_generators() -> [[Element; 4]; 4] {
    spin_tensor(Convention::New)
        .sigma
        .map(|row| row.map(|s| s.scale_real(0.5)))
}

/// Pauli-Lubanski components `w_μ = ı σ_μν p^ν`, i.e. `e_μ ∧ p`.
pub fn pauli_lubanski(p: &FourVector) -> [Element; 4] {
    let sigma = spin_tensor(Convention::New);
    std::array::from_fn(|mu| {
        (0..4)
            .map(|nu| sigma.get(mu, nu).scale_real(p[nu]))
            .sum::<Element>()
            .scale(Bicomplex::IOTA)
    })
}

/// `p^μ w_μ`, which vanishes identically for the Pauli-Lubanski vector of `p`.
pub fn lubanski_momentum_contraction(p: &FourVector) -> Element {
    pauli_lubanski(p)
        .iter()
        .enumerate()
        .map(|(mu, w)| w.scale_real(p[mu]))
        .sum()
}

/// `w² = g^μν ½Tr(w_μ w_ν)`.
///
/// The first factor carries no explicit bar: `w̄_μ = -w_μ` is already
/// absorbed, which is what makes `p² - w² = 4m²` hold for spin one half.
pub fn pauli_lubanski_square(p: &FourVector) -> Bicomplex {
    pauli_lubanski(p)
        .iter()
        .enumerate()
        .map(|(mu, w)| (*w * *w).trace().scale(0.5 * METRIC[mu]))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis;

    fn e(mu: usize) -> Element {
        basis(mu).unwrap()
    }

    #[test]
    fn paravector_round_trip() {
        assert_eq!(
            paravector(&FourVector::new(1.0, 0.0, 0.0, 0.0)),
            Element::IDENTITY
        );
        let v = FourVector::new(0.4, -1.2, 3.3, 0.7);
        assert_eq!(coords(&paravector(&v)).unwrap(), v);
        let u = FourVector::new(2.0, 0.1, 0.2, -0.3);
        let sp = scalar_product(&paravector(&u), &paravector(&v));
        assert!(sp.approx_eq(Bicomplex::real(u.dot(&v)), 1e-14));
    }

    #[test]
    fn coords_rejects_non_paravectors() {
        let bivector = e(1) * e(2);
        assert!(matches!(coords(&bivector), Err(Error::NotParavector(_))));
        let complex_coeff = e(1).scale(Bicomplex::I);
        assert!(coords(&complex_coeff).is_err());
    }

    #[test]
    fn dot_is_metric_and_wedge_matches_spin_tensor() {
        let new = spin_tensor(Convention::New);
        let old = spin_tensor(Convention::Old);
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(
                    dot(&e(mu), &e(nu)),
                    Element::scalar(Bicomplex::real(metric(mu, nu)))
                );
                let w = wedge(&e(mu), &e(nu));
                assert_eq!(w, new.get(mu, nu).scale(Bicomplex::IOTA));
                assert_eq!(w, old.get(mu, nu).scale(-Bicomplex::I));
                assert_eq!(new.get(mu, nu), old.get(mu, nu).scale(Bicomplex::J));
                assert_eq!(new.get(mu, nu), -new.get(nu, mu));
            }
        }
    }

    #[test]
    fn printed_spin_tensor_entries() {
        let new = spin_tensor(Convention::New);
        assert_eq!(new.get(2, 3), e(1));
        assert_eq!(new.get(1, 3), -e(2));
        assert_eq!(new.get(0, 1), e(1).scale(Bicomplex::IOTA));
        let minus_i_sigma1 = crate::algebra::pauli(1).unwrap().scale(-Bicomplex::I);
        assert_eq!(new.get(0, 1), minus_i_sigma1);
        let old = spin_tensor(Convention::Old);
        let s = |k| crate::algebra::pauli(k).unwrap();
        assert_eq!(old.get(1, 0), s(1).scale(Bicomplex::IJ));
        assert_eq!(old.get(3, 1), s(2));
    }

    #[test]
    fn generators_are_half_spin_tensor() {
        let s = spin_generators();
        let sigma = spin_tensor(Convention::New);
        assert_eq!(s[2][3], e(1).scale_real(0.5));
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(s[mu][nu], -s[nu][mu]);
                assert_eq!(s[mu][nu].scale_real(2.0), sigma.get(mu, nu));
            }
        }
    }

    #[test]
    fn wedge_of_paravector_with_itself_vanishes() {
        let x = paravector(&FourVector::new(0.3, 1.1, -0.4, 2.0));
        assert!(wedge(&x, &x).max_abs() < 1e-15);
        assert!(dot(&x, &x).as_scalar_approx(1e-15).is_some());
    }

    #[test]
    fn lubanski_rest_frame() {
        let m = 1.7;
        let w = pauli_lubanski(&FourVector::new(m, 0.0, 0.0, 0.0));
        assert_eq!(w[0], Element::ZERO);
        for k in 1..4 {
            assert!(w[k].approx_eq(&e(k).scale_real(m), 1e-15));
        }
        let sq = pauli_lubanski_square(&FourVector::new(m, 0.0, 0.0, 0.0));
        assert!(sq.approx_eq(Bicomplex::real(-3.0 * m * m), 1e-14));
    }

    #[test]
    fn lubanski_is_wedge_and_anti_self_conjugate() {
        let p = FourVector::on_shell(0.8, 0.3, -1.1, 0.6);
        let pp = paravector(&p);
        for (mu, w) in pauli_lubanski(&p).iter().enumerate() {
            assert!(w.approx_eq(&wedge(&e(mu), &pp), 1e-14));
            assert_eq!(w.bar(), -*w);
        }
        assert!(lubanski_momentum_contraction(&p).max_abs() < 1e-14);
    }
}

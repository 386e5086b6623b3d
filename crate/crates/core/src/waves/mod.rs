//! Quaternion plane waves `ψ = exp(−ı x p̄)`, the polarizable-field operator
//! `(p + w)·(p + w)`, the finite-difference Klein-Gordon diagnostic and the
//! three discrete exponent transformations.

mod expm;
mod group;

pub use expm::mat_exp;
pub use group::{discrete_group_check, ExponentForm, Flags, GroupReport};

use serde::{Deserialize, Serialize};

use crate::algebra::Element;
use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::relativity::{
    paravector, pauli_lubanski_square, spin_generators, wedge, FourVector, METRIC,
};

/// A spin `s ∈ {0, ½, 1, 3/2, …}`, stored as `2s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub const ZERO: Self = Self { twice: 0 };
    pub const HALF: Self = Self { twice: 1 };

    pub const fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    /// Rejects negative values and values that are not multiples of ½.
    pub fn new(s: f64) -> Result<Self> {
        let twice = 2.0 * s;
        if !s.is_finite() || s < 0.0 || twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(Error::InvalidInput(format!(
                "spin must be a non-negative multiple of 1/2: {s}"
            )));
        }
        Ok(Self {
            twice: twice as u32,
        })
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn twice(self) -> u32 {
        self.twice
    }
}

/// `n = 2s + 1`.
pub fn polarization_count(s: Spin) -> u32 {
    s.twice + 1
}

/// `κ = n m / 2`.
pub fn kappa(n: u32, m: f64) -> f64 {
    n as f64 * m / 2.0
}

/// `m = κ / (s + ½)`.
pub fn mass_spin(s: Spin, kappa: f64) -> Result<f64> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "kappa must be positive: {kappa}"
        )));
    }
    Ok(kappa / (s.value() + 0.5))
}

/// `m² + 4m² s(s+1)`, equal to `((2s+1) m)²`.
pub fn casimir_value(m: f64, s: Spin) -> f64 {
    let s = s.value();
    m * m + 4.0 * m * m * s * (s + 1.0)
}

/// `O = (p + w)·(p + w) = p² − w²`.
///
/// Spin 0 has `w ≡ 0`. Spin ½ evaluates `w²` from the Pauli-Lubanski matrices
/// of `p`. Higher spins have no matrix representation here and return the
/// arithmetic value `m² + 4m² s(s+1)`.
pub fn polarizable_operator(p: &FourVector, s: Spin) -> Result<f64> {
    let m2 = p.minkowski_square();
    if m2.is_nan() || m2 <= 0.0 || m2.is_infinite() {
        return Err(Error::OffShell {
            found: m2,
            expected: f64::NAN,
        });
    }
    match s.twice {
        0 => Ok(m2),
        1 => {
            let w2 = pauli_lubanski_square(p);
            let scale = p[0] * p[0] + p.spatial_norm_sqr();
            if Bicomplex::new(0.0, w2.im_i, w2.im_j, w2.im_ij).max_abs() > 1e-10 * scale {
                return Err(Error::Consistency(format!("w² is not real: {w2}")));
            }
            Ok(m2 - w2.re)
        }
        _ => Ok(casimir_value(m2.sqrt(), s)),
    }
}

/// State label `|m, n, p⟩` plus the three discrete flags.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WaveSpec {
    pub mass: f64,
    pub n: u32,
    pub momentum: FourVector,
    pub flags: Flags,
}

impl WaveSpec {
    pub fn new(mass: f64, n: u32, momentum: FourVector, flags: Flags) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "mass must be positive: {mass}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidInput(
                "polarization count must be at least 1".into(),
            ));
        }
        let found = momentum.minkowski_square();
        let scale = momentum[0] * momentum[0] + momentum.spatial_norm_sqr();
        if (found - mass * mass).abs() > 1e-10 * scale.max(mass * mass) {
            return Err(Error::OffShell {
                found,
                expected: mass * mass,
            });
        }
        Ok(Self {
            mass,
            n,
            momentum,
            flags,
        })
    }

    /// Derives the mass from `p`, which must be timelike.
    pub fn from_momentum(momentum: FourVector, n: u32, flags: Flags) -> Result<Self> {
        let m2 = momentum.minkowski_square();
        if m2.is_nan() || m2 <= 0.0 {
            return Err(Error::OffShell {
                found: m2,
                expected: f64::NAN,
            });
        }
        Self::new(m2.sqrt(), n, momentum, flags)
    }

    pub fn spin(&self) -> Spin {
        Spin::from_twice(self.n - 1)
    }
}

/// A wave evaluated at one spacetime point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuaternionWave {
    pub value: Element,
    pub exponent: Element,
    pub x: FourVector,
    pub spec: WaveSpec,
}

/// `exp(∓ı …)` for the exponent selected by the spec's flags.
///
/// With `n = 1` only the scalar `x·p` survives and the wave reduces to the
/// ordinary plane wave `exp(−ı x·p)`, on which order and bar swaps act
/// trivially.
pub fn quaternion_wave(x: &FourVector, spec: &WaveSpec) -> QuaternionWave {
    let exponent = if spec.n == 1 {
        let sign = if spec.flags.sign_flip { -1.0 } else { 1.0 };
        Element::scalar(Bicomplex::IOTA.scale(-sign * x.dot(&spec.momentum)))
    } else {
        ExponentForm::base(*x, spec.momentum)
            .apply(spec.flags)
            .exponent()
    };
    QuaternionWave {
        value: mat_exp(&exponent),
        exponent,
        x: *x,
        spec: *spec,
    }
}

/// `exp(−ı x·p) · exp(−ı x∧p)`.
pub fn wave_factorized(x: &FourVector, p: &FourVector) -> Element {
    let translation = Element::scalar(Bicomplex::IOTA.scale(-x.dot(p)));
    let l = wedge(&paravector(x), &paravector(p));
    mat_exp(&translation) * mat_exp(&l.scale(-Bicomplex::IOTA))
}

/// `exp(−ı x_μ p^μ + s_μν l^μν)` with `l^μν = x^μ p^ν − x^ν p^μ`.
pub fn wave_tensor_form(x: &FourVector, p: &FourVector) -> Element {
    let s = spin_generators();
    let mut exponent = Element::scalar(Bicomplex::IOTA.scale(-x.dot(p)));
    for mu in 0..4 {
        for nu in 0..4 {
            let l = x[mu] * p[nu] - x[nu] * p[mu];
            exponent += s[mu][nu].scale_real(l);
        }
    }
    mat_exp(&exponent)
}

/// Max-component magnitude of `[□ + (nm)²] ψ` at `x`, with `□ = ∂·∂`
/// approximated by second central differences of step `h`: the centre plus
/// `±h` along each axis, nine evaluations in all.
///
/// This is a measurement; only the `n = 1` wave is expected to make it
/// vanish (to `O(h²)`).
pub fn kg_residual(spec: &WaveSpec, x: &FourVector, h: f64) -> f64 {
    let psi = |y: &FourVector| quaternion_wave(y, spec).value;
    let centre = psi(x);
    let mut box_psi = Element::ZERO;
    for mu in 0..4 {
        let mut step = [0.0; 4];
        step[mu] = h;
        let step = FourVector(step);
        let second = (psi(&(*x + step)) + psi(&(*x - step)) - centre.scale_real(2.0))
            .scale_real(1.0 / (h * h));
        box_psi += second.scale_real(METRIC[mu]);
    }
    let nm = spec.n as f64 * spec.mass;
    (box_psi + centre.scale_real(nm * nm)).max_abs()
}

/// Residuals at `h` and `h/2`, and the observed convergence order
/// `log₂(r_h / r_{h/2})`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KgConvergence {
    pub h: f64,
    pub residual_h: f64,
    pub residual_half: f64,
    pub order: f64,
}

pub fn kg_convergence(spec: &WaveSpec, x: &FourVector, h: f64) -> KgConvergence {
    let residual_h = kg_residual(spec, x, h);
    let residual_half = kg_residual(spec, x, h / 2.0);
    KgConvergence {
        h,
        residual_h,
        residual_half,
        order: (residual_h / residual_half).log2(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;

    #[test]
    fn spin_parsing() {
        assert_eq!(Spin::new(0.5).unwrap(), Spin::HALF);
        assert_eq!(Spin::new(3.0).unwrap().twice(), 6);
        assert!(Spin::new(-0.5).is_err());
        assert!(Spin::new(0.25).is_err());
        assert!(Spin::new(f64::NAN).is_err());
    }

    #[test]
    fn polarization_and_mass_spin() {
        assert_eq!(polarization_count(Spin::HALF), 2);
        assert_eq!(polarization_count(Spin::ZERO), 1);
        let s1 = Spin::new(1.0).unwrap();
        let k = kappa(polarization_count(s1), 3.0);
        assert_eq!(k, 4.5);
        assert_eq!(mass_spin(s1, k).unwrap(), 3.0);
        assert_eq!(mass_spin(Spin::ZERO, 1.0).unwrap(), 2.0);
        assert!(mass_spin(Spin::ZERO, 0.0).is_err());
    }

    #[test]
    fn casimir_arithmetic_identity() {
        for twice in 0..=10 {
            let s = Spin::from_twice(twice);
            let m = 1.25;
            let n = polarization_count(s) as f64;
            assert_eq!(casimir_value(m, s), (n * m) * (n * m));
        }
    }

    #[test]
    fn operator_rest_frame_and_boosts() {
        let m = 0.7;
        let rest = FourVector::new(m, 0.0, 0.0, 0.0);
        assert!((polarizable_operator(&rest, Spin::HALF).unwrap() - 4.0 * m * m).abs() < 1e-14);
        assert_eq!(polarizable_operator(&rest, Spin::ZERO).unwrap(), m * m);
        let mut rng = sample::rng(5);
        for _ in 0..20 {
            let p = sample::boosted_rest(&mut rng, m, 0.9);
            let o = polarizable_operator(&p, Spin::HALF).unwrap();
            assert!((o - 4.0 * m * m).abs() < 1e-10 * 4.0 * m * m);
        }
        let s2 = Spin::new(2.0).unwrap();
        assert!((polarizable_operator(&rest, s2).unwrap() - 25.0 * m * m).abs() < 1e-14);
        assert!(polarizable_operator(&FourVector::new(0.0, 1.0, 0.0, 0.0), Spin::HALF).is_err());
    }

    #[test]
    fn wave_spec_validation() {
        let p = FourVector::on_shell(1.0, 0.3, 0.0, 0.0);
        assert!(WaveSpec::new(1.0, 2, p, Flags::NONE).is_ok());
        assert!(WaveSpec::new(2.0, 2, p, Flags::NONE).is_err());
        assert!(WaveSpec::new(1.0, 0, p, Flags::NONE).is_err());
        assert!(WaveSpec::new(-1.0, 2, p, Flags::NONE).is_err());
        let spec = WaveSpec::from_momentum(p, 2, Flags::NONE).unwrap();
        assert!((spec.mass - 1.0).abs() < 1e-15);
        assert_eq!(spec.spin(), Spin::HALF);
    }

    #[test]
    fn wave_is_identity_at_origin() {
        let p = FourVector::on_shell(1.0, 0.2, -0.4, 0.1);
        for n in [1, 2] {
            for flags in Flags::all() {
                let spec = WaveSpec::new(1.0, n, p, flags).unwrap();
                assert_eq!(
                    quaternion_wave(&FourVector::ZERO, &spec).value,
                    Element::IDENTITY
                );
            }
        }
    }

    #[test]
    fn three_forms_agree() {
        let mut rng = sample::rng(6);
        for _ in 0..30 {
            let x = sample::four_vector(&mut rng, 1.0);
            let p = sample::on_shell(&mut rng, 1.0, 0.8);
            let spec = WaveSpec::new(1.0, 2, p, Flags::NONE).unwrap();
            let base = quaternion_wave(&x, &spec).value;
            assert!(base.approx_eq(&wave_factorized(&x, &p), 1e-8));
            assert!(base.approx_eq(&wave_tensor_form(&x, &p), 1e-8));
        }
    }

    #[test]
    fn scalar_wave_solves_klein_gordon() {
        let p = FourVector::on_shell(1.0, 0.3, -0.2, 0.5);
        let spec = WaveSpec::new(1.0, 1, p, Flags::NONE).unwrap();
        let x = FourVector::new(0.4, -0.3, 0.8, 0.1);
        let conv = kg_convergence(&spec, &x, 1e-3);
        assert!(conv.residual_h < 1e-5, "{conv:?}");
        assert!((conv.order - 2.0).abs() < 0.3, "{conv:?}");
    }

    #[test]
    fn spin_half_residual_is_finite() {
        let p = FourVector::on_shell(1.0, 0.3, -0.2, 0.5);
        let spec = WaveSpec::new(1.0, 2, p, Flags::NONE).unwrap();
        let r = kg_residual(&spec, &FourVector::new(0.4, -0.3, 0.8, 0.1), 1e-3);
        assert!(r.is_finite());
    }
}

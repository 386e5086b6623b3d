//! Squared amplitude of the one-boson-exchange diagram between two spin-½
//! currents, evaluated from the spin trace and from its closed form, plus the
//! heavy-target (Mott) kinematics and its leading-order expressions.
//!
//! All tensors carry lower indices; contractions raise them with
//! `g = diag(1, -1, -1, -1)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Element;
use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::relativity::{
    eta_tensor, paravector, spin_tensor, wedge, Convention, FourVector, METRIC,
};

pub type Tensor2 = [[f64; 4]; 4];

const TOL_KINEMATICS: f64 = 1e-10;
const TOL_AGREEMENT: f64 = 1e-10;

/// Four legs of a 2→2 elastic process.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Kinematics {
    pub p1i: FourVector,
    pub p2i: FourVector,
    pub p1f: FourVector,
    pub p2f: FourVector,
    pub m1: f64,
    pub m2: f64,
    /// Set when the outgoing leg 2 is only on shell up to `O(p²/M²)`.
    pub approximate_recoil: bool,
}

fn check_on_shell(p: &FourVector, m: f64, slack: f64) -> Result<()> {
    let found = p.minkowski_square();
    let scale = p[0] * p[0] + p.spatial_norm_sqr();
    if (found - m * m).abs() > TOL_KINEMATICS * scale.max(1.0) + slack {
        return Err(Error::OffShell {
            found,
            expected: m * m,
        });
    }
    Ok(())
}

impl Kinematics {
    /// Validates four-momentum conservation and that every leg is on shell
    /// to its declared mass.
    pub fn new(
        p1i: FourVector,
        p2i: FourVector,
        p1f: FourVector,
        p2f: FourVector,
        m1: f64,
        m2: f64,
    ) -> Result<Self> {
        Self::build(p1i, p2i, p1f, p2f, m1, m2, false)
    }

    fn build(
        p1i: FourVector,
        p2i: FourVector,
        p1f: FourVector,
        p2f: FourVector,
        m1: f64,
        m2: f64,
        approximate_recoil: bool,
    ) -> Result<Self> {
        let imbalance = (p1i + p2i) - (p1f + p2f);
        let scale = [p1i, p2i, p1f, p2f]
            .iter()
            .map(FourVector::max_abs)
            .fold(1.0_f64, f64::max);
        if imbalance.max_abs() > TOL_KINEMATICS * scale {
            return Err(Error::InvalidInput(format!(
                "four-momentum not conserved: imbalance {:?}",
                imbalance.0
            )));
        }
        check_on_shell(&p1i, m1, 0.0)?;
        check_on_shell(&p2i, m2, 0.0)?;
        check_on_shell(&p1f, m1, 0.0)?;
        // with the electron energy held fixed the recoiling leg misses its
        // mass shell by at most 4|p|²
        let slack = if approximate_recoil {
            4.0 * p1i.spatial_norm_sqr().max(p1f.spatial_norm_sqr())
        } else {
            0.0
        };
        check_on_shell(&p2f, m2, slack)?;
        Ok(Self {
            p1i,
            p2i,
            p1f,
            p2f,
            m1,
            m2,
            approximate_recoil,
        })
    }

    pub fn d1(&self) -> FourVector {
        self.p1f + self.p1i
    }

    pub fn d2(&self) -> FourVector {
        self.p2f + self.p2i
    }

    /// Momentum transfer at vertex 1, `p1f − p1i`.
    pub fn q(&self) -> FourVector {
        self.p1f - self.p1i
    }

    /// Same rotation applied to all four legs.
    pub fn rotate(&self, axis: [f64; 3], angle: f64) -> Self {
        Self {
            p1i: self.p1i.rotate(axis, angle),
            p2i: self.p2i.rotate(axis, angle),
            p1f: self.p1f.rotate(axis, angle),
            p2f: self.p2f.rotate(axis, angle),
            ..*self
        }
    }
}

/// Spin-averaged current tensor `⟨Ñ⟩_μν` of one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurrentTensor {
    pub n: [[Bicomplex; 4]; 4],
    pub d: FourVector,
    pub q: FourVector,
}

impl CurrentTensor {
    pub fn real_part(&self) -> Tensor2 {
        self.n.map(|row| row.map(|b| b.re))
    }

    /// Largest non-real component over all entries.
    pub fn max_imaginary(&self) -> f64 {
        self.n
            .iter()
            .flatten()
            .map(|b| Bicomplex::new(0.0, b.im_i, b.im_j, b.im_ij).max_abs())
            .fold(0.0, f64::max)
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0_f64;
        for mu in 0..4 {
            for nu in 0..4 {
                worst = worst.max((self.n[mu][nu] - self.n[nu][mu]).max_abs());
            }
        }
        worst
    }
}

/// `½Tr[(d_μ + i q^ρ σ_ρμ)(d_ν + i σ_νσ q^σ)]` with the Pauli-matrix spin
/// tensor, evaluated by direct matrix multiplication.
pub fn current_tensor_trace(pi: &FourVector, pf: &FourVector) -> CurrentTensor {
    let sigma = spin_tensor(Convention::Old).sigma;
    let d = *pf + *pi;
    let q = *pf - *pi;
    let dl = d.lower();
    let left: [Element; 4] = std::array::from_fn(|mu| {
        let spin: Element = (0..4).map(|rho| sigma[rho][mu].scale_real(q[rho])).sum();
        Element::scalar(Bicomplex::real(dl[mu])) + spin.scale(Bicomplex::I)
    });
    let right: [Element; 4] = std::array::from_fn(|nu| {
        let spin: Element = (0..4).map(|s| sigma[nu][s].scale_real(q[s])).sum();
        Element::scalar(Bicomplex::real(dl[nu])) + spin.scale(Bicomplex::I)
    });
    let n = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| (left[mu] * right[nu]).trace().scale(0.5))
    });
    CurrentTensor { n, d, q }
}

/// `b_μν = η_ρμνσ q^ρ q^σ`.
pub fn b_tensor(q: &FourVector) -> Tensor2 {
    let eta = eta_tensor();
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let mut acc = 0.0;
            for rho in 0..4 {
                for s in 0..4 {
                    acc += eta[rho][mu][nu][s] * q[rho] * q[s];
                }
            }
            acc
        })
    })
}

/// `⟨Ñ⟩_μν = d_μ d_ν − b_μν`.
pub fn current_tensor_closed(pi: &FourVector, pf: &FourVector) -> CurrentTensor {
    let d = *pf + *pi;
    let q = *pf - *pi;
    let dl = d.lower();
    let b = b_tensor(&q);
    let n = std::array::from_fn(|mu| {
        std::array::from_fn(|nu| Bicomplex::real(dl[mu] * dl[nu] - b[mu][nu]))
    });
    CurrentTensor { n, d, q }
}

/// `b_μν = (e_μ∧q)·(e_ν∧q)` evaluated through wedge products.
///
/// The biparavector product is taken as `½Tr(A B)`: since `Ā = −A` for any
/// biparavector, the conjugation of the first factor is already accounted
/// for. Using `½Tr(Ā B)` literally gives `−b`.
pub fn b_tensor_geometric(q: &FourVector) -> [[Bicomplex; 4]; 4] {
    let qq = paravector(q);
    let planes: [Element; 4] = crate::algebra::basis_all().map(|e| wedge(&e, &qq));
    std::array::from_fn(|mu| std::array::from_fn(|nu| (planes[mu] * planes[nu]).trace().scale(0.5)))
}

/// `Σ a_μν b^μν`.
pub fn contract(a: &Tensor2, b: &Tensor2) -> f64 {
    let mut acc = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            acc += a[mu][nu] * b[mu][nu] * METRIC[mu] * METRIC[nu];
        }
    }
    acc
}

/// `b_μν u^μ v^ν` for contravariant `u`, `v`.
fn sandwich(b: &Tensor2, u: &FourVector, v: &FourVector) -> f64 {
    let mut acc = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            acc += b[mu][nu] * u[mu] * v[nu];
        }
    }
    acc
}

/// Individual terms of the expanded squared amplitude.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeTerms {
    /// `(d₁·d₂)²`
    pub d1d2_sq: f64,
    /// `d₁d₁·b`
    pub d1d1_b: f64,
    /// `d₂d₂·b`
    pub d2d2_b: f64,
    /// `b·b`
    pub bb: f64,
    /// `(d₁·d₂)² − (d₁d₁ + d₂d₂)·b + b·b`
    pub expanded: f64,
    /// `N₁_μν N₂^μν` from the two trace-form current tensors.
    pub contraction: f64,
}

/// Evaluates the current contraction both from the per-vertex trace tensors
/// and from the expanded form with the shared `b` tensor, and checks that
/// they agree to `1e-10` relative.
pub fn amplitude_terms(k: &Kinematics) -> Result<AmplitudeTerms> {
    let n1 = current_tensor_trace(&k.p1i, &k.p1f);
    let n2 = current_tensor_trace(&k.p2i, &k.p2f);
    let contraction = contract(&n1.real_part(), &n2.real_part());

    let (d1, d2) = (k.d1(), k.d2());
    let b = b_tensor(&k.q());
    let d1d2_sq = d1.dot(&d2).powi(2);
    let d1d1_b = sandwich(&b, &d1, &d1);
    let d2d2_b = sandwich(&b, &d2, &d2);
    let bb = contract(&b, &b);
    let expanded = d1d2_sq - (d1d1_b + d2d2_b) + bb;

    let scale = d1d2_sq.abs() + d1d1_b.abs() + d2d2_b.abs() + bb.abs();
    let imag = n1.max_imaginary().max(n2.max_imaginary());
    if (contraction - expanded).abs() > TOL_AGREEMENT * scale.max(f64::MIN_POSITIVE)
        || imag > TOL_AGREEMENT * scale.sqrt().max(1.0)
    {
        return Err(Error::Consistency(format!(
            "raw contraction {contraction} vs expanded {expanded} (imaginary residue {imag})"
        )));
    }
    Ok(AmplitudeTerms {
        d1d2_sq,
        d1d1_b,
        d2d2_b,
        bb,
        expanded,
        contraction,
    })
}

/// `|D|² · N₁_μν N₂^μν`.
pub fn amplitude_squared(k: &Kinematics, propagator_sq: f64) -> Result<f64> {
    Ok(propagator_sq * amplitude_terms(k)?.contraction)
}

/// `1 / (q·q)²` with unit coupling.
pub fn propagator_sq(q: &FourVector) -> Result<f64> {
    let q2 = q.minkowski_square();
    let scale = q[0] * q[0] + q.spatial_norm_sqr();
    if q2 == 0.0 || q2.abs() <= f64::EPSILON * scale {
        return Err(Error::Singular(q2));
    }
    Ok(1.0 / (q2 * q2))
}

/// How the recoiling heavy leg is determined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Recoil {
    /// Scattered electron keeps its energy; the heavy leg takes the rest of
    /// the momentum balance and is on shell only as `M → ∞`.
    #[default]
    #[serde(rename = "paper", alias = "fixed-energy")]
    FixedEnergy,
    /// Elastic two-body kinematics solved exactly.
    Exact,
}

fn validate_mott(m: f64, heavy: f64, p: f64, theta: f64) -> Result<()> {
    let finite = [m, heavy, p, theta].iter().all(|x| x.is_finite());
    if !finite || m <= 0.0 || heavy <= 0.0 || p <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "masses and momentum must be positive: m={m}, M={heavy}, p={p}"
        )));
    }
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::InvalidInput(format!(
            "theta must lie in (0, π): {theta}"
        )));
    }
    Ok(())
}

/// Electron of mass `m` and momentum `p` along z scattering at angle `theta`
/// in the y-z plane off a target of mass `heavy` at rest.
pub fn mott_kinematics(
    m: f64,
    heavy: f64,
    p: f64,
    theta: f64,
    recoil: Recoil,
) -> Result<Kinematics> {
    validate_mott(m, heavy, p, theta)?;
    let e = (m * m + p * p).sqrt();
    let p1i = FourVector::new(e, 0.0, 0.0, p);
    let p2i = FourVector::new(heavy, 0.0, 0.0, 0.0);
    let (s, c) = theta.sin_cos();
    let p1f = match recoil {
        Recoil::FixedEnergy => FourVector::new(e, 0.0, p * s, p * c),
        Recoil::Exact => {
            // W E' = B + p cosθ p',  E'² = m² + p'²
            let w = e + heavy;
            let b = m * m + e * heavy;
            let a = w * w - p * p * c * c;
            let disc = b * b * p * p * c * c - a * (w * w * m * m - b * b);
            let pf = (b * p * c + disc.max(0.0).sqrt()) / a;
            FourVector::on_shell(m, 0.0, pf * s, pf * c)
        }
    };
    let p2f = p1i + p2i - p1f;
    Kinematics::build(p1i, p2i, p1f, p2f, m, heavy, recoil == Recoil::FixedEnergy)
}

/// `16 |D|² M² (m² + p² cos²(θ/2))`.
pub fn mott_leading(m: f64, heavy: f64, p: f64, theta: f64, propagator_sq: f64) -> f64 {
    16.0 * dirac_reference(m, heavy, p, theta, propagator_sq)
}

/// `|D|² M² (m² + p² cos²(θ/2))`, the Dirac-theory value.
pub fn dirac_reference(m: f64, heavy: f64, p: f64, theta: f64, propagator_sq: f64) -> f64 {
    let c = (theta / 2.0).cos();
    propagator_sq * heavy * heavy * (m * m + p * p * c * c)
}

/// Leading heavy-mass value of `(d₁·d₂)²`: `(4EM)² = 16M²(m² + p²)`.
pub fn mott_d1d2_leading(m: f64, heavy: f64, p: f64) -> f64 {
    16.0 * heavy * heavy * (m * m + p * p)
}

/// Leading heavy-mass value of `d₂d₂·b`: `16 M² p² sin²(θ/2)`.
pub fn mott_d2d2_b_leading(heavy: f64, p: f64, theta: f64) -> f64 {
    let s = (theta / 2.0).sin();
    16.0 * heavy * heavy * p * p * s * s
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MottInputs {
    pub m: f64,
    #[serde(rename = "M")]
    pub heavy: f64,
    pub p: f64,
    pub theta: f64,
    pub recoil: Recoil,
}

/// One evaluated scattering angle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MottPoint {
    pub inputs: MottInputs,
    pub terms: AmplitudeTerms,
    pub propagator_sq: f64,
    /// Full pipeline `|D|² N₁·N₂`.
    pub amplitude_sq: f64,
    pub leading: f64,
    pub dirac: f64,
    /// `amplitude_sq / dirac`.
    pub ratio_to_dirac: f64,
}

pub fn evaluate_mott(m: f64, heavy: f64, p: f64, theta: f64, recoil: Recoil) -> Result<MottPoint> {
    let k = mott_kinematics(m, heavy, p, theta, recoil)?;
    let prop = propagator_sq(&k.q())?;
    let terms = amplitude_terms(&k)?;
    let amplitude_sq = prop * terms.contraction;
    let dirac = dirac_reference(m, heavy, p, theta, prop);
    Ok(MottPoint {
        inputs: MottInputs {
            m,
            heavy,
            p,
            theta,
            recoil,
        },
        terms,
        propagator_sq: prop,
        amplitude_sq,
        leading: mott_leading(m, heavy, p, theta, prop),
        dirac,
        ratio_to_dirac: amplitude_sq / dirac,
    })
}

/// Evenly spaced angles from `theta_min` to `theta_max` inclusive, evaluated
/// in parallel and returned sorted by angle.
pub fn mott_scan(
    m: f64,
    heavy: f64,
    p: f64,
    theta_min: f64,
    theta_max: f64,
    steps: usize,
    recoil: Recoil,
) -> Result<Vec<MottPoint>> {
    if steps == 0 {
        return Err(Error::InvalidInput("steps must be at least 1".into()));
    }
    if theta_max < theta_min {
        return Err(Error::InvalidInput(format!(
            "theta range is empty: {theta_min} > {theta_max}"
        )));
    }
    let step = if steps > 1 {
        (theta_max - theta_min) / (steps - 1) as f64
    } else {
        0.0
    };
    let mut points = (0..steps)
        .into_par_iter()
        .map(|k| evaluate_mott(m, heavy, p, theta_min + step * k as f64, recoil))
        .collect::<Result<Vec<_>>>()?;
    points.sort_by(|a, b| a.inputs.theta.total_cmp(&b.inputs.theta));
    Ok(points)
}

//! Numerics for the hyperbolic Pauli algebra `ℝ₃,₀` represented as 2×2
//! matrices over bicomplex numbers.
//!
//! Layers, bottom up:
//!
//! * [`bicomplex`]: the commutative scalar ring with units `i`, `j`, `ij`.
//! * [`algebra`]: matrix elements, involutions, trace scalar product.
//! * [`relativity`]: paravectors, wedge products, spin tensors, the spin
//!   trace table and the Pauli-Lubanski vector.
//! * [`scattering`]: one-boson-exchange squared amplitudes and Mott kinematics.
//! * [`waves`]: quaternion plane waves, the polarizable-field operator and
//!   the discrete `ℤ₂³` transformation group.
//! * [`verify`]: seeded invariant suites producing machine-readable reports.

// tensor code indexes several arrays with the same index
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bicomplex;
pub mod error;
pub mod relativity;
pub mod sample;
pub mod scattering;
pub mod verify;
pub mod waves;

#[cfg(test)]
pub(crate) mod testing;

pub use algebra::{basis, pauli, pseudoscalar, scalar_product, Element};
pub use bicomplex::Bicomplex;
pub use error::{Error, Result};
pub use relativity::{Convention, FourVector};
pub use scattering::{Kinematics, Recoil};
pub use waves::{Flags, Spin, WaveSpec};

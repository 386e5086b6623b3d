//! Fixed inputs for the benchmarks.

use hyperwave::relativity::FourVector;
use hyperwave::sample;
use hyperwave::scattering::Kinematics;
use hyperwave::waves::WaveSpec;
use hyperwave::{Element, Flags};

pub const SEED: u64 = 7;

pub fn kinematics() -> Kinematics {
    sample::elastic_kinematics(&mut sample::rng(SEED))
}

pub fn exponent() -> Element {
    let x = FourVector::new(0.4, -0.3, 0.8, 0.1);
    hyperwave::waves::ExponentForm::base(x, momentum()).exponent()
}

pub fn momentum() -> FourVector {
    FourVector::on_shell(1.0, 0.3, -0.2, 0.5)
}

pub fn wave_spec(n: u32) -> WaveSpec {
    WaveSpec::new(1.0, n, momentum(), Flags::NONE).expect("valid spec")
}

//! Seeded random fixtures shared by the verification suites, tests and
//! benchmarks. Magnitudes are kept O(1) so finite differences and series
//! stay well conditioned.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::relativity::FourVector;
use crate::scattering::Kinematics;

pub use rand::SeedableRng;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn four_vector(rng: &mut SampleRng, scale: f64) -> FourVector {
    FourVector(std::array::from_fn(|_| rng.gen_range(-scale..scale)))
}

pub fn unit_vector(rng: &mut SampleRng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        if (1e-4..=1.0).contains(&n2) {
            let n = n2.sqrt();
            return v.map(|c| c / n);
        }
    }
}

/// Velocity with a random direction and speed below `max_beta`.
pub fn velocity(rng: &mut SampleRng, max_beta: f64) -> [f64; 3] {
    let speed = rng.gen_range(0.0..max_beta);
    unit_vector(rng).map(|c| c * speed)
}

/// On-shell momentum of mass `m` with spatial components below `pmax`.
pub fn on_shell(rng: &mut SampleRng, m: f64, pmax: f64) -> FourVector {
    FourVector::on_shell(
        m,
        rng.gen_range(-pmax..pmax),
        rng.gen_range(-pmax..pmax),
        rng.gen_range(-pmax..pmax),
    )
}

/// Rest-frame momentum of mass `m` boosted with a random velocity.
pub fn boosted_rest(rng: &mut SampleRng, m: f64, max_beta: f64) -> FourVector {
    FourVector::new(m, 0.0, 0.0, 0.0).boost(velocity(rng, max_beta))
}

/// Elastic two-body kinematics built in the centre-of-momentum frame and
/// boosted to a random frame.
pub fn elastic_kinematics(rng: &mut SampleRng) -> Kinematics {
    let m1 = rng.gen_range(0.2..2.0);
    let m2 = rng.gen_range(0.2..2.0);
    let k = rng.gen_range(0.1..2.0);
    let n_in = unit_vector(rng).map(|c| c * k);
    let n_out = unit_vector(rng).map(|c| c * k);
    let beta = velocity(rng, 0.8);
    let leg = |m: f64, v: [f64; 3]| FourVector::on_shell(m, v[0], v[1], v[2]).boost(beta);
    let neg = |v: [f64; 3]| v.map(|c| -c);
    Kinematics::new(
        leg(m1, n_in),
        leg(m2, neg(n_in)),
        leg(m1, n_out),
        leg(m2, neg(n_out)),
        m1,
        m2,
    )
    .expect("centre-of-momentum construction conserves momentum")
}

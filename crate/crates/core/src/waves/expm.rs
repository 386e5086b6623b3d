//! Matrix exponential over the bicomplex 2×2 algebra.
//!
//! Scaling and squaring around a truncated Taylor series. There is no
//! eigendecomposition to lean on (the scalar ring has zero divisors), but the
//! series converges for every element.

use crate::algebra::Element;

/// Scaled argument magnitude bound.
const SCALED_NORM: f64 = 0.5;
/// A term stops the series once it is below this fraction of the running sum.
const TERM_TOL: f64 = 1e-16;
const MAX_TERMS: usize = 64;

/// `exp(a)`, with magnitudes measured as the largest absolute bicomplex
/// component over the four entries.
pub fn mat_exp(a: &Element) -> Element {
    let norm = a.max_abs();
    if norm == 0.0 {
        return Element::IDENTITY;
    }
    let mut squarings = 0u32;
    while norm / 2f64.powi(squarings as i32) > SCALED_NORM {
        squarings += 1;
    }
    let scaled = a.scale_real(2f64.powi(-(squarings as i32)));

    let mut sum = Element::IDENTITY;
    let mut term = Element::IDENTITY;
    for k in 1..=MAX_TERMS {
        term = (term * scaled).scale_real(1.0 / k as f64);
        sum += term;
        if term.max_abs() < TERM_TOL * sum.max_abs() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

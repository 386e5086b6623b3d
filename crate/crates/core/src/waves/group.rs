//! The three discrete transformations of the wave exponent `−ı x p̄`:
//! overall sign, operand order, and the side carrying the bar.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::mat_exp;
use crate::algebra::Element;
use crate::bicomplex::Bicomplex;
use crate::error::Error;
use crate::relativity::{paravector, wedge, wr, FourVector};

/// Which discrete transformations are applied to the base exponent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flags {
    pub sign_flip: bool,
    pub order_swap: bool,
    pub bar_swap: bool,
}

impl Flags {
    pub const NONE: Self = Self::from_bits(0);
    pub const SIGN: Self = Self::from_bits(1);
    pub const ORDER: Self = Self::from_bits(2);
    pub const BAR: Self = Self::from_bits(4);
    pub const GENERATORS: [Self; 3] = [Self::SIGN, Self::ORDER, Self::BAR];

    pub const fn from_bits(bits: u8) -> Self {
        Self {
            sign_flip: bits & 1 != 0,
            order_swap: bits & 2 != 0,
            bar_swap: bits & 4 != 0,
        }
    }

    pub const fn bits(self) -> u8 {
        self.sign_flip as u8 | (self.order_swap as u8) << 1 | (self.bar_swap as u8) << 2
    }

    /// The eight combinations in bit order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..8).map(Self::from_bits)
    }
}

impl fmt::Display for Flags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [
            (self.sign_flip, "s"),
            (self.order_swap, "o"),
            (self.bar_swap, "b"),
        ]
        .into_iter()
        .filter_map(|(on, n)| on.then_some(n))
        .collect();
        f.write_str(&names.join(","))
    }
}

/// Parses a comma-separated subset of `s`, `o`, `b` (or `sign`, `order`,
/// `bar`). The empty string means no flags.
impl FromStr for Flags {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut flags = Flags::NONE;
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match token {
                "s" | "sign" => flags.sign_flip = true,
                "o" | "order" => flags.order_swap = true,
                "b" | "bar" => flags.bar_swap = true,
                other => return Err(Error::InvalidInput(format!("unknown flag {other:?}"))),
            }
        }
        Ok(flags)
    }
}

/// The exponent `± (−ı) a b̄` or `± (−ı) ā b` as a structure, so the three
/// transformations can act on it directly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExponentForm {
    pub left: FourVector,
    pub right: FourVector,
    pub bar_on_left: bool,
    pub negated: bool,
}

impl ExponentForm {
    /// `−ı x p̄`.
    pub fn base(x: FourVector, p: FourVector) -> Self {
        Self {
            left: x,
            right: p,
            bar_on_left: false,
            negated: false,
        }
    }

    pub fn flip_sign(self) -> Self {
        Self {
            negated: !self.negated,
            ..self
        }
    }

    pub fn swap_order(self) -> Self {
        Self {
            left: self.right,
            right: self.left,
            ..self
        }
    }

    pub fn swap_bar(self) -> Self {
        Self {
            bar_on_left: !self.bar_on_left,
            ..self
        }
    }

    pub fn apply(self, flags: Flags) -> Self {
        let mut form = self;
        if flags.sign_flip {
            form = form.flip_sign();
        }
        if flags.order_swap {
            form = form.swap_order();
        }
        if flags.bar_swap {
            form = form.swap_bar();
        }
        form
    }

    /// `a b̄` or `ā b`.
    pub fn product(&self) -> Element {
        let (a, b) = (paravector(&self.left), paravector(&self.right));
        if self.bar_on_left {
            a.bar() * b
        } else {
            a * b.bar()
        }
    }

    pub fn exponent(&self) -> Element {
        let sign = if self.negated { 1.0 } else { -1.0 };
        self.product().scale(Bicomplex::IOTA.scale(sign))
    }

    pub fn wave(&self) -> Element {
        mat_exp(&self.exponent())
    }
}

/// Result of checking the group axioms on one `(x, p)` pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupReport {
    pub involutive: bool,
    pub commuting: bool,
    pub distinct: usize,
    /// Smallest max-component separation between two of the eight waves.
    pub min_separation: f64,
    /// Every product of two elements lands on the wave labelled by the XOR of
    /// their flag bits.
    pub table_matches: bool,
    /// Order swap negates the wedge part; bar swap negates the ≀ part.
    pub part_signs: bool,
    pub failures: Vec<String>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Order of the group as observed, 8 for `ℤ₂³`.
    pub fn order(&self) -> usize {
        self.distinct
    }
}

const SAME: f64 = 1e-10;
const DISTINCT: f64 = 1e-6;

fn separation(a: &Element, b: &Element) -> f64 {
    (*a - *b).max_abs()
}

pub fn discrete_group_check(x: &FourVector, p: &FourVector) -> GroupReport {
    let base = ExponentForm::base(*x, *p);
    let states: Vec<ExponentForm> = Flags::all().map(|f| base.apply(f)).collect();
    let waves: Vec<Element> = states.iter().map(ExponentForm::wave).collect();
    let ops: [fn(ExponentForm) -> ExponentForm; 3] = [
        ExponentForm::flip_sign,
        ExponentForm::swap_order,
        ExponentForm::swap_bar,
    ];
    let mut failures = Vec::new();

    let mut involutive = true;
    let mut commuting = true;
    for (si, state) in states.iter().enumerate() {
        for (gi, g) in ops.iter().enumerate() {
            if !g(g(*state)).wave().approx_eq(&waves[si], SAME) {
                involutive = false;
                failures.push(format!("generator {gi} is not involutive on state {si}"));
            }
            for (hi, h) in ops.iter().enumerate().skip(gi + 1) {
                if !g(h(*state)).wave().approx_eq(&h(g(*state)).wave(), SAME) {
                    commuting = false;
                    failures.push(format!(
                        "generators {gi} and {hi} do not commute on state {si}"
                    ));
                }
            }
        }
    }

    let mut min_separation = f64::INFINITY;
    let mut representatives: Vec<usize> = Vec::new();
    for a in 0..waves.len() {
        for b in a + 1..waves.len() {
            let d = separation(&waves[a], &waves[b]);
            min_separation = min_separation.min(d);
            if d <= DISTINCT {
                failures.push(format!("states {a} and {b} coincide (separation {d:e})"));
            }
        }
        if representatives
            .iter()
            .all(|&r| separation(&waves[r], &waves[a]) > DISTINCT)
        {
            representatives.push(a);
        }
    }
    let distinct = representatives.len();

    // identify each product by its value, then compare with the XOR label
    let mut table_matches = true;
    for a in Flags::all() {
        for b in Flags::all() {
            let value = base.apply(b).apply(a).wave();
            let hit = waves
                .iter()
                .position(|w| separation(w, &value) <= SAME * (1.0 + w.max_abs()));
            let expected = (a.bits() ^ b.bits()) as usize;
            if hit != Some(expected) {
                table_matches = false;
                failures.push(format!(
                    "{a:?}∘{b:?} landed on {hit:?}, expected state {expected}"
                ));
            }
        }
    }

    let (xx, pp) = (paravector(x), paravector(p));
    let base_product = base.product();
    let order_product = base.swap_order().product();
    let bar_product = base.swap_bar().product();
    let wedge_ok = order_product.approx_eq(&(base_product - wedge(&xx, &pp).scale_real(2.0)), SAME);
    let wr_ok = bar_product.approx_eq(&(base_product - wr(&xx, &pp).scale_real(2.0)), SAME);
    if !wedge_ok {
        failures.push("order swap does not negate the wedge part".into());
    }
    if !wr_ok {
        failures.push("bar swap does not negate the ≀ part".into());
    }

    GroupReport {
        involutive,
        commuting,
        distinct,
        min_separation,
        table_matches,
        part_signs: wedge_ok && wr_ok,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relativity::dot;
    use crate::sample;

    #[test]
    fn flag_parsing() {
        assert_eq!("".parse::<Flags>().unwrap(), Flags::NONE);
        assert_eq!("s,o,b".parse::<Flags>().unwrap(), Flags::from_bits(7));
        assert_eq!("order".parse::<Flags>().unwrap(), Flags::ORDER);
        assert!("x".parse::<Flags>().is_err());
        assert_eq!(Flags::from_bits(5).to_string(), "s,b");
        for f in Flags::all() {
            assert_eq!(Flags::from_bits(f.bits()), f);
        }
    }

    #[test]
    fn order_swap_exponent() {
        // p x̄ = x·p − x∧p
        let x = FourVector::new(0.3, -0.7, 0.2, 0.9);
        let p = FourVector::on_shell(1.0, 0.4, 0.1, -0.6);
        let (xx, pp) = (paravector(&x), paravector(&p));
        let swapped = ExponentForm::base(x, p).swap_order().exponent();
        let expected = (dot(&xx, &pp) - wedge(&xx, &pp)).scale(-Bicomplex::IOTA);
        assert!(swapped.approx_eq(&expected, 1e-14));
    }

    #[test]
    fn identity_composed_with_identity() {
        let f = ExponentForm::base(FourVector::new(1.0, 0.0, 0.5, 0.0), FourVector::ZERO);
        assert_eq!(f.apply(Flags::NONE).apply(Flags::NONE), f);
    }

    #[test]
    fn group_axioms_on_generic_inputs() {
        let mut rng = sample::rng(21);
        for _ in 0..5 {
            let x = sample::four_vector(&mut rng, 1.0);
            let p = sample::on_shell(&mut rng, 1.0, 0.8);
            let report = discrete_group_check(&x, &p);
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.order(), 8);
        }
    }

    #[test]
    fn degenerate_inputs_collapse() {
        // x parallel to p: no wedge part, order swap becomes trivial
        let p = FourVector::on_shell(1.0, 0.2, 0.0, 0.0);
        let report = discrete_group_check(&(p * 0.5), &p);
        assert!(report.distinct < 8);
        assert!(!report.passed());
    }
}

//! `½·Tr(σ_ρμ σ_νσ)` over all 256 index combinations, its split into the
//! real `η` part and the `ij·ε` part, and the reference table of non-zero
//! entries used as a cross-check.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use super::{metric, spin_tensor, Convention};
use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};

pub type Tensor4 = [[[[f64; 4]; 4]; 4]; 4];

/// `t[ρ][μ][ν][σ] = ½·Tr(σ_ρμ σ_νσ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceTable {
    pub t: [[[[Bicomplex; 4]; 4]; 4]; 4],
}

fn indices() -> impl Iterator<Item = [usize; 4]> {
    (0..256).map(|n| [n >> 6, (n >> 4) & 3, (n >> 2) & 3, n & 3])
}

impl TraceTable {
    pub fn get(&self, [r, m, n, s]: [usize; 4]) -> Bicomplex {
        self.t[r][m][n][s]
    }

    /// All entries in `ρ, μ, ν, σ` lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = TableEntry> + '_ {
        indices().map(|idx| TableEntry {
            indices: idx,
            value: self.get(idx),
        })
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries()
            .filter(|e| e.value != Bicomplex::ZERO)
            .count()
    }

    /// Lists every violated symmetry or value constraint; empty when the
    /// table is antisymmetric in each index pair, symmetric under pair
    /// exchange and valued in `{0, ±1, ±ij}`.
    pub fn symmetry_violations(&self) -> Vec<String> {
        let allowed = [
            Bicomplex::ZERO,
            Bicomplex::ONE,
            -Bicomplex::ONE,
            Bicomplex::IJ,
            -Bicomplex::IJ,
        ];
        let mut out = Vec::new();
        for [r, m, n, s] in indices() {
            let v = self.t[r][m][n][s];
            if v != -self.t[m][r][n][s] {
                out.push(format!("{r}{m}{n}{s}: not antisymmetric in the first pair"));
            }
            if v != -self.t[r][m][s][n] {
                out.push(format!(
                    "{r}{m}{n}{s}: not antisymmetric in the second pair"
                ));
            }
            if v != self.t[n][s][r][m] {
                out.push(format!("{r}{m}{n}{s}: not symmetric under pair exchange"));
            }
            if !allowed.contains(&v) {
                out.push(format!("{r}{m}{n}{s}: value {v} outside {{0, ±1, ±ij}}"));
            }
        }
        out
    }
}

/// Computes every entry by direct multiplication and trace.
pub fn trace_table(convention: Convention) -> TraceTable {
    let sigma = spin_tensor(convention).sigma;
    let mut t = [[[[Bicomplex::ZERO; 4]; 4]; 4]; 4];
    for [r, m, n, s] in indices() {
        t[r][m][n][s] = (sigma[r][m] * sigma[n][s]).trace().scale(0.5);
    }
    TraceTable { t }
}

/// The table is convention independent; this is computed once and shared.
pub fn trace_table_cached() -> &'static TraceTable {
    static TABLE: OnceLock<TraceTable> = OnceLock::new();
    TABLE.get_or_init(|| trace_table(Convention::New))
}

/// Real part of the trace table. Non-zero exactly where `{ρ,μ} = {ν,σ}`.
pub fn eta_tensor() -> Tensor4 {
    let table = trace_table_cached();
    let mut eta = [[[[0.0; 4]; 4]; 4]; 4];
    for [r, m, n, s] in indices() {
        eta[r][m][n][s] = table.t[r][m][n][s].re;
    }
    eta
}

/// Sign of the permutation `idx` of `0..4`, or 0 when an index repeats.
fn permutation_sign(idx: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    for a in 0..4 {
        for b in a + 1..4 {
            if idx[a] == idx[b] {
                return 0.0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Totally antisymmetric symbol whose sign is read off the trace table, such
/// that `½Tr(σ_ρμ σ_νσ) = η_ρμνσ + ij·ε_μνρσ` holds entry by entry.
///
/// Fails if the table does not decompose this way.
pub fn epsilon4() -> Result<Tensor4> {
    let table = trace_table_cached();
    // t[0][1][3][2] carries ε_{1302}
    let anchor = table.t[0][1][3][2].im_ij;
    let sign = anchor * permutation_sign([1, 3, 0, 2]);
    if sign.abs() != 1.0 {
        return Err(Error::Consistency(format!(
            "anchor entry 0132 has ij coefficient {anchor}"
        )));
    }
    let mut eps = [[[[0.0; 4]; 4]; 4]; 4];
    for idx @ [a, b, c, d] in indices() {
        eps[a][b][c][d] = sign * permutation_sign(idx);
    }
    let eta = eta_tensor();
    for [r, m, n, s] in indices() {
        let rebuilt = Bicomplex::new(eta[r][m][n][s], 0.0, 0.0, eps[m][n][r][s]);
        if rebuilt != table.t[r][m][n][s] {
            return Err(Error::Consistency(format!(
                "entry {r}{m}{n}{s}: table {} but η + ij·ε gives {rebuilt}",
                table.t[r][m][n][s]
            )));
        }
    }
    Ok(eps)
}

/// Closed form `g_ρν g_μσ − g_ρσ g_μν` of the real part.
pub fn eta_closed_form([r, m, n, s]: [usize; 4]) -> f64 {
    metric(r, n) * metric(m, s) - metric(r, s) * metric(m, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TableEntry {
    pub indices: [usize; 4],
    pub value: Bicomplex,
}

/// Reference non-zero entries, one row per value, indices written `ρμνσ`.
pub const REFERENCE_TABLE: [(Bicomplex, [&str; 6]); 6] = [
    (
        Bicomplex::ONE,
        ["0110", "1001", "0220", "2002", "0330", "3003"],
    ),
    (
        Bicomplex::real(-1.0),
        ["1221", "2112", "2332", "3223", "1331", "3113"],
    ),
    (
        Bicomplex::IJ,
        ["0132", "3201", "0213", "1302", "0321", "2103"],
    ),
    (
        Bicomplex::IJ,
        ["1023", "2310", "2031", "3120", "3012", "1230"],
    ),
    (
        Bicomplex::new(0.0, 0.0, 0.0, -1.0),
        ["0123", "2301", "0231", "3102", "0312", "1203"],
    ),
    (
        Bicomplex::new(0.0, 0.0, 0.0, -1.0),
        ["1032", "3210", "2013", "1320", "3021", "2130"],
    ),
];

fn parse_indices(s: &str) -> [usize; 4] {
    let b = s.as_bytes();
    std::array::from_fn(|k| (b[k] - b'0') as usize)
}

fn printed_entries() -> Vec<TableEntry> {
    REFERENCE_TABLE
        .iter()
        .flat_map(|(value, row)| {
            row.iter().map(move |s| TableEntry {
                indices: parse_indices(s),
                value: *value,
            })
        })
        .collect()
}

/// Outcome of checking a trace table against [`REFERENCE_TABLE`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReferenceComparison {
    /// Printed entries, and how many the computed table reproduces.
    pub printed_total: usize,
    pub printed_matched: usize,
    /// Entries generated from the printed ones by the two index-pair
    /// antisymmetries and pair exchange.
    pub listed_total: usize,
    pub listed_matched: usize,
    /// Non-zero entries of the computed table.
    pub nonzero_total: usize,
    /// Computed non-zero entries that the generated set does not account for.
    pub unlisted_nonzero: usize,
    pub mismatches: Vec<String>,
}

impl ReferenceComparison {
    pub fn passed(&self) -> bool {
        self.printed_matched == self.printed_total
            && self.listed_matched == self.listed_total
            && self.listed_total == self.nonzero_total
            && self.unlisted_nonzero == 0
            && self.mismatches.is_empty()
    }
}

pub fn compare_reference(table: &TraceTable) -> ReferenceComparison {
    let printed = printed_entries();
    let mut mismatches = Vec::new();

    let printed_matched = printed
        .iter()
        .filter(|e| {
            let ok = table.get(e.indices) == e.value;
            if !ok {
                mismatches.push(format!(
                    "printed {:?}: expected {}, computed {}",
                    e.indices,
                    e.value,
                    table.get(e.indices)
                ));
            }
            ok
        })
        .count();

    let mut listed: BTreeMap<[usize; 4], Bicomplex> =
        printed.iter().map(|e| (e.indices, e.value)).collect();
    loop {
        let mut added = Vec::new();
        for (&[r, m, n, s], &v) in &listed {
            for (idx, val) in [([m, r, n, s], -v), ([r, m, s, n], -v), ([n, s, r, m], v)] {
                match listed.get(&idx) {
                    Some(&existing) if existing != val => mismatches.push(format!(
                        "reference table inconsistent at {idx:?}: {existing} vs {val}"
                    )),
                    Some(_) => {}
                    None => added.push((idx, val)),
                }
            }
        }
        if added.is_empty() {
            break;
        }
        listed.extend(added);
    }

    let listed_matched = listed
        .iter()
        .filter(|(idx, v)| table.get(**idx) == **v)
        .count();
    let nonzero_total = table.nonzero_count();
    let unlisted_nonzero = table
        .entries()
        .filter(|e| e.value != Bicomplex::ZERO && !listed.contains_key(&e.indices))
        .count();

    ReferenceComparison {
        printed_total: printed.len(),
        printed_matched,
        listed_total: listed.len(),
        listed_matched,
        nonzero_total,
        unlisted_nonzero,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_entries() {
        let t = trace_table(Convention::New);
        assert_eq!(t.get([0, 1, 1, 0]), Bicomplex::ONE);
        assert_eq!(t.get([1, 2, 2, 1]), -Bicomplex::ONE);
        assert_eq!(t.get([0, 1, 3, 2]), Bicomplex::IJ);
        assert_eq!(t.get([0, 1, 0, 1]), -Bicomplex::ONE);
    }

    #[test]
    fn conventions_agree() {
        assert_eq!(trace_table(Convention::Old), trace_table(Convention::New));
    }

    #[test]
    fn symmetries_hold() {
        let t = trace_table_cached();
        assert!(t.symmetry_violations().is_empty());
        assert_eq!(t.nonzero_count(), 48);
    }

    #[test]
    fn eta_matches_metric_closed_form() {
        let eta = eta_tensor();
        for idx @ [r, m, n, s] in indices() {
            assert_eq!(eta[r][m][n][s], eta_closed_form(idx), "{idx:?}");
        }
    }

    #[test]
    fn epsilon_is_antisymmetric_and_reconstructs_table() {
        let eps = epsilon4().unwrap();
        let mut nonzero = 0;
        for [a, b, c, d] in indices() {
            let v = eps[a][b][c][d];
            assert_eq!(v, -eps[b][a][c][d]);
            assert_eq!(v, -eps[a][c][b][d]);
            assert_eq!(v, -eps[a][b][d][c]);
            if v != 0.0 {
                assert_eq!(v.abs(), 1.0);
                nonzero += 1;
            }
        }
        assert_eq!(nonzero, 24);
        // sign read off the table: ε_{1302} = +1 means ε_{0123} = -1
        assert_eq!(eps[1][3][0][2], 1.0);
        assert_eq!(eps[0][1][2][3], -1.0);
    }

    #[test]
    fn reference_table_comparison() {
        let cmp = compare_reference(trace_table_cached());
        assert!(cmp.passed(), "{cmp:?}");
        assert_eq!(cmp.printed_total, 36);
        assert_eq!(cmp.listed_total, 48);
    }

    #[test]
    fn comparison_detects_a_corrupted_entry() {
        let mut t = trace_table(Convention::New);
        t.t[0][2][2][0] = -Bicomplex::ONE;
        let cmp = compare_reference(&t);
        assert!(!cmp.passed());
        assert_eq!(cmp.printed_matched, 35);
        assert!(!t.symmetry_violations().is_empty());
    }
}

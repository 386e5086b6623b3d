//! One handler per subcommand. Each returns the document to emit and whether
//! its checks passed; diagnostics go to stderr.

use std::collections::BTreeMap;
use std::io;

use hyperwave::relativity::{compare_reference, trace_table_cached};
use hyperwave::scattering::{evaluate_mott, mott_scan, MottPoint, Recoil};
use hyperwave::verify::{self, CheckRecord, Tolerances};
use hyperwave::waves::quaternion_wave;
use hyperwave::{Element, Error, WaveSpec};
use serde::Serialize;

use crate::config::{CommandConfig, Format, Masses, Mode, RunConfig};
use crate::output::Document;

#[derive(Debug)]
pub enum Failure {
    /// Inputs rejected by the library after parsing.
    Usage(String),
    /// An internal consistency check failed.
    Check(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::Singular(_) => Self::Check(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

pub struct Outcome {
    pub document: Document,
    pub passed: bool,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, Failure> {
    match &cfg.command {
        CommandConfig::TraceTable { compare } => trace_table(*compare, cfg.format),
        CommandConfig::Mott {
            masses,
            theta,
            mode,
        } => mott(masses, *theta, *mode, cfg.format),
        CommandConfig::MottScan {
            masses,
            theta_min,
            theta_max,
            steps,
        } => scan(masses, *theta_min, *theta_max, *steps, cfg.format),
        CommandConfig::Wave { x, p, n, flags } => {
            let spec = WaveSpec::from_momentum(*p, *n, *flags)?;
            wave(&quaternion_wave(x, &spec), cfg.format)
        }
        CommandConfig::Verify { seed } => verify_all(*seed, cfg.tolerances, cfg.format),
    }
}

#[derive(Serialize)]
struct TableRow {
    rho: usize,
    mu: usize,
    nu: usize,
    sigma: usize,
    re: f64,
    im_i: f64,
    im_j: f64,
    im_ij: f64,
}

fn trace_table(compare: bool, format: Format) -> Result<Outcome, Failure> {
    let table = trace_table_cached();
    let rows: Vec<TableRow> = table
        .entries()
        .map(|e| {
            let [rho, mu, nu, sigma] = e.indices;
            let [re, im_i, im_j, im_ij] = e.value.to_array();
            TableRow {
                rho,
                mu,
                nu,
                sigma,
                re,
                im_i,
                im_j,
                im_ij,
            }
        })
        .collect();
    let comparison = compare.then(|| compare_reference(table));
    let passed = comparison.as_ref().is_none_or(|c| c.passed());
    if let Some(c) = &comparison {
        eprintln!(
            "{}/{} listed reference entries matched ({}/{} printed, {} non-zero computed, {} unaccounted)",
            c.listed_matched,
            c.listed_total,
            c.printed_matched,
            c.printed_total,
            c.nonzero_total,
            c.unlisted_nonzero
        );
        for m in &c.mismatches {
            eprintln!("  mismatch: {m}");
        }
    }
    let document = match format {
        Format::Csv => Document::csv(&rows)?,
        Format::Json => {
            #[derive(Serialize)]
            struct Dump<'a, C> {
                entries: &'a [TableRow],
                comparison: Option<C>,
            }
            Document::json(&Dump {
                entries: &rows,
                comparison,
            })?
        }
    };
    Ok(Outcome { document, passed })
}

const HALF_ANGLE_NOTE: &str = "leading-order and Dirac expressions use cos^2(theta/2); \
     ratio_to_dirac is always the full trace pipeline over the Dirac reference";
const FIXED_ENERGY_NOTE: &str = "recoil=paper keeps the electron energy fixed, so the heavy \
     final leg is on shell only up to O(p^2/M)";

#[derive(Serialize)]
struct MottRow {
    theta: f64,
    m: f64,
    #[serde(rename = "M")]
    heavy: f64,
    p: f64,
    recoil: Recoil,
    mode: &'static str,
    d1d2_sq: f64,
    d1d1_b: f64,
    d2d2_b: f64,
    bb: f64,
    contraction: f64,
    propagator_sq: f64,
    amplitude_sq: f64,
    leading: f64,
    dirac: f64,
    ratio_to_dirac: f64,
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Exact => "exact",
        Mode::Leading => "leading",
        Mode::Dirac => "dirac",
    }
}

impl MottRow {
    fn new(pt: &MottPoint, mode: Mode) -> Self {
        let amplitude_sq = match mode {
            Mode::Exact => pt.amplitude_sq,
            Mode::Leading => pt.leading,
            Mode::Dirac => pt.dirac,
        };
        Self {
            theta: pt.inputs.theta,
            m: pt.inputs.m,
            heavy: pt.inputs.heavy,
            p: pt.inputs.p,
            recoil: pt.inputs.recoil,
            mode: mode_name(mode),
            d1d2_sq: pt.terms.d1d2_sq,
            d1d1_b: pt.terms.d1d1_b,
            d2d2_b: pt.terms.d2d2_b,
            bb: pt.terms.bb,
            contraction: pt.terms.contraction,
            propagator_sq: pt.propagator_sq,
            amplitude_sq,
            leading: pt.leading,
            dirac: pt.dirac,
            ratio_to_dirac: pt.ratio_to_dirac,
        }
    }
}

#[derive(Serialize)]
struct MottInputsOut {
    m: f64,
    #[serde(rename = "M")]
    heavy: f64,
    p: f64,
    theta: f64,
    recoil: Recoil,
    mode: &'static str,
}

#[derive(Serialize)]
struct MottRecord {
    inputs: MottInputsOut,
    d1d2_sq: f64,
    d1d1_b: f64,
    d2d2_b: f64,
    bb: f64,
    contraction: f64,
    propagator_sq: f64,
    amplitude_sq: f64,
    leading: f64,
    dirac: f64,
    ratio_to_dirac: f64,
    notes: Vec<&'static str>,
}

fn notes(recoil: Recoil) -> Vec<&'static str> {
    let mut notes = vec![HALF_ANGLE_NOTE];
    if recoil == Recoil::FixedEnergy {
        notes.push(FIXED_ENERGY_NOTE);
    }
    notes
}

fn mott(masses: &Masses, theta: f64, mode: Mode, format: Format) -> Result<Outcome, Failure> {
    let recoil = Recoil::from(masses.recoil);
    let pt = evaluate_mott(masses.m, masses.heavy, masses.p, theta, recoil)?;
    let row = MottRow::new(&pt, mode);
    for n in notes(recoil) {
        eprintln!("note: {n}");
    }
    let document = match format {
        Format::Csv => Document::csv(&[row])?,
        Format::Json => Document::json(&MottRecord {
            inputs: MottInputsOut {
                m: row.m,
                heavy: row.heavy,
                p: row.p,
                theta: row.theta,
                recoil: row.recoil,
                mode: row.mode,
            },
            d1d2_sq: row.d1d2_sq,
            d1d1_b: row.d1d1_b,
            d2d2_b: row.d2d2_b,
            bb: row.bb,
            contraction: row.contraction,
            propagator_sq: row.propagator_sq,
            amplitude_sq: row.amplitude_sq,
            leading: row.leading,
            dirac: row.dirac,
            ratio_to_dirac: row.ratio_to_dirac,
            notes: notes(recoil),
        })?,
    };
    Ok(Outcome {
        document,
        passed: true,
    })
}

fn scan(
    masses: &Masses,
    theta_min: f64,
    theta_max: f64,
    steps: usize,
    format: Format,
) -> Result<Outcome, Failure> {
    let recoil = Recoil::from(masses.recoil);
    let points = mott_scan(
        masses.m,
        masses.heavy,
        masses.p,
        theta_min,
        theta_max,
        steps,
        recoil,
    )?;
    let rows: Vec<MottRow> = points
        .iter()
        .map(|pt| MottRow::new(pt, Mode::Exact))
        .collect();
    for n in notes(recoil) {
        eprintln!("note: {n}");
    }
    let document = match format {
        Format::Csv => Document::csv(&rows)?,
        Format::Json => Document::json(&rows)?,
    };
    Ok(Outcome {
        document,
        passed: true,
    })
}

#[derive(Serialize)]
struct CellRow {
    row: usize,
    col: usize,
    re: f64,
    im_i: f64,
    im_j: f64,
    im_ij: f64,
}

fn cells(e: &Element) -> Vec<CellRow> {
    let mut out = Vec::with_capacity(4);
    for (row, r) in e.entries.iter().enumerate() {
        for (col, c) in r.iter().enumerate() {
            let [re, im_i, im_j, im_ij] = c.to_array();
            out.push(CellRow {
                row,
                col,
                re,
                im_i,
                im_j,
                im_ij,
            });
        }
    }
    out
}

fn wave(w: &hyperwave::waves::QuaternionWave, format: Format) -> Result<Outcome, Failure> {
    #[derive(Serialize)]
    struct WaveRecord<'a> {
        x: [f64; 4],
        p: [f64; 4],
        n: u32,
        spin: f64,
        mass: f64,
        flags: String,
        exponent: &'a Element,
        value: &'a Element,
        #[serde(skip_serializing_if = "Option::is_none")]
        note: Option<&'static str>,
    }
    let note = (w.spec.n == 1)
        .then_some("n = 1 is the scalar plane wave exp(-i x.p); order and bar swaps act trivially");
    let document = match format {
        Format::Csv => Document::csv(&cells(&w.value))?,
        Format::Json => Document::json(&WaveRecord {
            x: w.x.0,
            p: w.spec.momentum.0,
            n: w.spec.n,
            spin: w.spec.spin().value(),
            mass: w.spec.mass,
            flags: w.spec.flags.to_string(),
            exponent: &w.exponent,
            value: &w.value,
            note,
        })?,
    };
    Ok(Outcome {
        document,
        passed: true,
    })
}

#[derive(Serialize)]
struct SuiteSummary {
    suite: String,
    passed: bool,
    checks: usize,
    failed: usize,
}

fn summarize(records: &[CheckRecord]) -> Vec<SuiteSummary> {
    // keep suites in the order they ran
    let mut order: Vec<String> = Vec::new();
    let mut counts: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for r in records {
        if !counts.contains_key(&r.suite) {
            order.push(r.suite.clone());
        }
        let c = counts.entry(r.suite.clone()).or_default();
        c.0 += 1;
        c.1 += !r.passed as usize;
    }
    order
        .into_iter()
        .map(|suite| {
            let (checks, failed) = counts[&suite];
            SuiteSummary {
                suite,
                passed: failed == 0,
                checks,
                failed,
            }
        })
        .collect()
}

fn verify_all(seed: u64, tol: Tolerances, format: Format) -> Result<Outcome, Failure> {
    let report = verify::run_all(seed, tol);
    let passed = report.passed();
    for r in &report.records {
        eprintln!(
            "{} {:<15} {}: measured {:e}, target {:e}, tolerance {:e}",
            if r.passed { "PASS" } else { "FAIL" },
            r.suite,
            r.check,
            r.measured,
            r.target,
            r.tolerance
        );
    }
    let failed = report.failures().count();
    eprintln!(
        "seed {seed}: {} of {} checks passed",
        report.records.len() - failed,
        report.records.len()
    );
    let document = match format {
        Format::Csv => Document::csv(&report.records)?,
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                seed: u64,
                passed: bool,
                tolerances: Tolerances,
                suites: Vec<SuiteSummary>,
                records: &'a [CheckRecord],
            }
            Document::json(&Out {
                seed,
                passed,
                tolerances: tol,
                suites: summarize(&report.records),
                records: &report.records,
            })?
        }
    };
    Ok(Outcome { document, passed })
}

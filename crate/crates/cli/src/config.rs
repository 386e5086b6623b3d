//! Parsed command line and its range checks.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hyperwave::relativity::FourVector;
use hyperwave::scattering::Recoil;
use hyperwave::verify::Tolerances;
use hyperwave::Flags;

pub const SEED_ENV: &str = "HYPERWAVE_SEED";

#[derive(Parser, Debug)]
#[command(
    name = "hyperwave",
    version,
    about = "Hyperbolic Pauli algebra: traces, Mott scattering, quaternion waves"
)]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Tolerance for algebraic identities.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol_identity: f64,

    /// Tolerance for heavy-target asymptotics.
    #[arg(long, global = true, default_value_t = 1e-3)]
    pub tol_asymptotic: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Full trace pipeline.
    Exact,
    /// Leading heavy-target expression.
    Leading,
    /// Dirac-theory reference.
    Dirac,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RecoilArg {
    Exact,
    /// Electron energy held fixed.
    #[value(name = "paper", alias = "fixed-energy")]
    FixedEnergy,
}

impl From<RecoilArg> for Recoil {
    fn from(r: RecoilArg) -> Self {
        match r {
            RecoilArg::Exact => Recoil::Exact,
            RecoilArg::FixedEnergy => Recoil::FixedEnergy,
        }
    }
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct Masses {
    /// Light (electron) mass.
    #[arg(long = "m", default_value_t = 1.0)]
    pub m: f64,
    /// Heavy (target) mass.
    #[arg(long = "M", default_value_t = 1e4)]
    pub heavy: f64,
    /// Incoming light momentum.
    #[arg(long = "p", default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, value_enum, default_value_t = RecoilArg::FixedEnergy)]
    pub recoil: RecoilArg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the 256 entries of ½Tr(σ_ρμ σ_νσ).
    TraceTable {
        /// Compare against the reference table and report on stderr.
        #[arg(long)]
        compare: bool,
    },
    /// Evaluate the squared amplitude at one angle.
    Mott {
        #[command(flatten)]
        masses: Masses,
        /// Scattering angle in radians.
        #[arg(long)]
        theta: f64,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Evaluate an evenly spaced range of angles, endpoints included.
    MottScan {
        #[command(flatten)]
        masses: Masses,
        #[arg(long)]
        theta_min: f64,
        #[arg(long)]
        theta_max: f64,
        #[arg(long, default_value_t = 19)]
        steps: usize,
    },
    /// Evaluate a quaternion wave at one point.
    Wave {
        /// Spacetime point, `x0,x1,x2,x3`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_four_vector)]
        x: FourVector,
        /// On-shell momentum, `p0,p1,p2,p3`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_four_vector)]
        p: FourVector,
        /// Polarization count 2s+1.
        #[arg(long)]
        n: u32,
        /// Discrete transformations, a subset of `s,o,b`.
        #[arg(long, default_value = "", value_parser = parse_flags)]
        flags: Flags,
    },
    /// Run every invariant suite.
    Verify {
        /// Overrides the HYPERWAVE_SEED environment variable.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_four_vector(s: &str) -> Result<FourVector, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected 4 comma-separated components, got {}",
            parts.len()
        ));
    }
    let mut v = [0.0_f64; 4];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part.parse().map_err(|e| format!("{part:?}: {e}"))?;
    }
    if v.iter().any(|c| !c.is_finite()) {
        return Err("components must be finite".into());
    }
    Ok(FourVector(v))
}

fn parse_flags(s: &str) -> Result<Flags, String> {
    s.parse().map_err(|e: hyperwave::Error| e.to_string())
}

/// Everything a run needs, after validation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandConfig,
    pub tolerances: Tolerances,
    pub format: Format,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub enum CommandConfig {
    TraceTable {
        compare: bool,
    },
    Mott {
        masses: Masses,
        theta: f64,
        mode: Mode,
    },
    MottScan {
        masses: Masses,
        theta_min: f64,
        theta_max: f64,
        steps: usize,
    },
    Wave {
        x: FourVector,
        p: FourVector,
        n: u32,
        flags: Flags,
    },
    Verify {
        seed: u64,
    },
}

impl CommandConfig {
    pub fn name(&self) -> &'static str {
        match self {
            Self::TraceTable { .. } => "trace-table",
            Self::Mott { .. } => "mott",
            Self::MottScan { .. } => "mott-scan",
            Self::Wave { .. } => "wave",
            Self::Verify { .. } => "verify",
        }
    }
}

fn check_angle(name: &str, theta: f64) -> Result<(), String> {
    if theta > 0.0 && theta < std::f64::consts::PI {
        Ok(())
    } else {
        Err(format!("{name} must lie in (0, pi), got {theta}"))
    }
}

fn check_positive(name: &str, v: f64) -> Result<(), String> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(format!("{name} must be positive and finite, got {v}"))
    }
}

fn check_masses(m: &Masses) -> Result<(), String> {
    check_positive("--m", m.m)?;
    check_positive("--M", m.heavy)?;
    check_positive("--p", m.p)
}

impl RunConfig {
    /// `env_seed` is the raw value of [`SEED_ENV`], if set.
    pub fn from_cli(cli: Cli, env_seed: Option<String>) -> Result<Self, String> {
        check_positive("--tol-identity", cli.tol_identity)?;
        check_positive("--tol-asymptotic", cli.tol_asymptotic)?;
        let (command, default_format) = match cli.command {
            Command::TraceTable { compare } => (CommandConfig::TraceTable { compare }, Format::Csv),
            Command::Mott {
                masses,
                theta,
                mode,
            } => {
                check_masses(&masses)?;
                check_angle("--theta", theta)?;
                (
                    CommandConfig::Mott {
                        masses,
                        theta,
                        mode,
                    },
                    Format::Json,
                )
            }
            Command::MottScan {
                masses,
                theta_min,
                theta_max,
                steps,
            } => {
                check_masses(&masses)?;
                check_angle("--theta-min", theta_min)?;
                check_angle("--theta-max", theta_max)?;
                if theta_max < theta_min {
                    return Err(format!(
                        "--theta-max {theta_max} is below --theta-min {theta_min}"
                    ));
                }
                if steps < 1 {
                    return Err("--steps must be at least 1".into());
                }
                (
                    CommandConfig::MottScan {
                        masses,
                        theta_min,
                        theta_max,
                        steps,
                    },
                    Format::Csv,
                )
            }
            Command::Wave { x, p, n, flags } => {
                if n < 1 {
                    return Err("--n must be at least 1".into());
                }
                (CommandConfig::Wave { x, p, n, flags }, Format::Json)
            }
            Command::Verify { seed } => {
                let seed = match (seed, env_seed) {
                    (Some(s), _) => s,
                    (None, Some(raw)) => raw
                        .trim()
                        .parse()
                        .map_err(|e| format!("{SEED_ENV}={raw:?}: {e}"))?,
                    (None, None) => hyperwave::verify::DEFAULT_SEED,
                };
                (CommandConfig::Verify { seed }, Format::Json)
            }
        };
        Ok(Self {
            command,
            tolerances: Tolerances {
                identity: cli.tol_identity,
                asymptotic: cli.tol_asymptotic,
            },
            format: cli.format.unwrap_or(default_format),
            output: cli.output,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig, String> {
        let cli = Cli::try_parse_from(std::iter::once("hyperwave").chain(args.iter().copied()))
            .map_err(|e| e.to_string())?;
        RunConfig::from_cli(cli, None)
    }

    #[test]
    fn defaults_per_subcommand() {
        let c = config(&["trace-table"]).unwrap();
        assert_eq!(c.format, Format::Csv);
        let c = config(&["mott", "--theta", "1"]).unwrap();
        assert_eq!(c.format, Format::Json);
        assert_eq!(c.tolerances, Tolerances::default());
        let CommandConfig::Mott { masses, .. } = c.command else {
            panic!()
        };
        assert_eq!((masses.m, masses.heavy, masses.p), (1.0, 1e4, 1.0));
    }

    #[test]
    fn range_violations() {
        assert!(config(&["mott", "--theta", "0"]).is_err());
        assert!(config(&["mott", "--theta", "3.2"]).is_err());
        assert!(config(&["mott", "--theta", "1", "--M", "-1"]).is_err());
        assert!(config(&["mott-scan", "--theta-min", "0.5", "--theta-max", "0.4"]).is_err());
        assert!(config(&[
            "mott-scan",
            "--theta-min",
            "0.5",
            "--theta-max",
            "1",
            "--steps",
            "0"
        ])
        .is_err());
        assert!(config(&["verify", "--tol-identity", "0"]).is_err());
        assert!(config(&["wave", "--x", "0,0,0", "--p", "1,0,0,0", "--n", "1"]).is_err());
        assert!(config(&["wave", "--x", "0,0,0,0", "--p", "1,0,0,0", "--n", "0"]).is_err());
        assert!(
            config(&["wave", "--x", "0,0,0,0", "--p", "1,0,0,0", "--n", "1", "--flags", "q"])
                .is_err()
        );
    }

    #[test]
    fn negative_components_and_flags() {
        let c = config(&[
            "wave",
            "--x",
            "-0.5,0,1,2",
            "--p",
            "1,0,0,0",
            "--n",
            "2",
            "--flags",
            "s,b",
        ])
        .unwrap();
        let CommandConfig::Wave { x, flags, .. } = c.command else {
            panic!()
        };
        assert_eq!(x, FourVector::new(-0.5, 0.0, 1.0, 2.0));
        assert_eq!(flags, Flags::from_bits(5));
    }

    #[test]
    fn seed_precedence() {
        let parse = |args: &[&str], env: Option<&str>| {
            let cli = Cli::try_parse_from(std::iter::once("hyperwave").chain(args.iter().copied()))
                .unwrap();
            match RunConfig::from_cli(cli, env.map(String::from)).map(|c| c.command) {
                Ok(CommandConfig::Verify { seed }) => Ok(seed),
                Ok(_) => unreachable!(),
                Err(e) => Err(e),
            }
        };
        assert_eq!(
            parse(&["verify"], None),
            Ok(hyperwave::verify::DEFAULT_SEED)
        );
        assert_eq!(parse(&["verify"], Some("12")), Ok(12));
        assert_eq!(parse(&["verify", "--seed", "3"], Some("12")), Ok(3));
        assert!(parse(&["verify"], Some("abc")).is_err());
    }
}

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use eigenwell_core::{Family, Scheme};

use crate::error::{CliError, CliResult};
use crate::units::Units;

#[derive(Debug, Parser)]
#[command(name = "eigenwell", version, about = "Stationary states of canonical quantum wells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum CommandKind {
    Eigenstate,
    Spectrum,
    Bic,
    Oldquantum,
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate one analytic eigenstate on a grid
    Eigenstate(Flags),
    /// Compare closed-form and Numerov energies
    Spectrum(Flags),
    /// Tabulate a bound state in the continuum and its potential
    Bic(Flags),
    /// Bohr orbits, Wilson-Sommerfeld levels and transition wavelengths
    Oldquantum(Flags),
    /// Run the verification suite
    Verify(Flags),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Box,
    Ho1d,
    Hydrogen,
    IsoHo,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Box => Family::Box,
            FamilyArg::Ho1d => Family::Ho1d,
            FamilyArg::Hydrogen => Family::Hydrogen,
            FamilyArg::IsoHo => Family::IsoHo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    #[value(alias = "sh")]
    StillingerHerrick,
    #[value(alias = "d")]
    Darboux,
    #[value(alias = "vnw")]
    VonNeumannWigner,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::StillingerHerrick => Scheme::StillingerHerrick,
            SchemeArg::Darboux => Scheme::Darboux,
            SchemeArg::VonNeumannWigner => Scheme::VonNeumannWigner,
        }
    }
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Flags {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeArg>,
    /// Principal (or 1D / radial) quantum number
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i32>,
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Grid as start:end:points
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long, value_enum)]
    pub units: Option<Units>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Tolerance override as key=value, repeatable
    #[arg(long)]
    pub tolerance: Vec<String>,
    /// Restrict verify to one criterion group or id
    #[arg(long)]
    pub only: Option<String>,
    /// Box width
    #[arg(long)]
    pub width: Option<f64>,
    /// Oscillator frequency
    #[arg(long)]
    pub omega: Option<f64>,
    /// Number of levels for spectrum
    #[arg(long)]
    pub count: Option<usize>,
    /// Highest principal number for oldquantum
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Time at which the dynamical phase is applied
    #[arg(long, allow_hyphen_values = true)]
    pub time: Option<f64>,
    /// Worker threads for grid evaluation
    #[arg(long)]
    pub threads: Option<usize>,
}

/// A uniform grid request, parsed strictly from `start:end:points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridArg {
    pub start: f64,
    pub end: f64,
    pub points: usize,
}

impl GridArg {
    pub fn step(&self) -> f64 {
        (self.end - self.start) / (self.points - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.points {
            self.end
        } else {
            self.start + i as f64 * self.step()
        }
    }
}

impl FromStr for GridArg {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let bad = |why: &str| CliError::BadArguments(format!("grid {s:?}: {why}"));
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(bad("expected start:end:points"));
        }
        let num = |t: &str| -> CliResult<f64> {
            if t.is_empty() || t != t.trim() {
                return Err(bad("empty or padded field"));
            }
            let v: f64 = t.parse().map_err(|_| bad("not a number"))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad("non-finite bound"))
            }
        };
        let start = num(parts[0])?;
        let end = num(parts[1])?;
        if !parts[2].bytes().all(|b| b.is_ascii_digit()) || parts[2].is_empty() {
            return Err(bad("points must be a plain integer"));
        }
        let points: usize = parts[2].parse().map_err(|_| bad("points out of range"))?;
        if points < 2 {
            return Err(bad("need at least 2 points"));
        }
        if !(end > start) {
            return Err(bad("end must exceed start"));
        }
        Ok(Self { start, end, points })
    }
}

/// Verification thresholds; every field can be overridden by name.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerances {
    pub energy: f64,
    pub energy_radial: f64,
    pub norm: f64,
    pub residual: f64,
    pub shrink: f64,
    pub commutator: f64,
    pub fock: f64,
    pub raise: f64,
    pub argmax: f64,
    pub moment: f64,
    pub action: f64,
    pub wavelength: f64,
    pub bic_formula: f64,
    pub bic_residual: f64,
    pub bic_tail: f64,
    pub asymptote: f64,
    pub identity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            energy: 1e-6,
            energy_radial: 1e-5,
            norm: 1e-8,
            residual: 1e-5,
            shrink: 3.5,
            commutator: 1e-12,
            fock: 1e-10,
            raise: 1e-5,
            argmax: 1e-4,
            moment: 1e-6,
            action: 1e-8,
            wavelength: 2.0,
            bic_formula: 1e-9,
            bic_residual: 1e-5,
            bic_tail: 1e-3,
            asymptote: 0.05,
            identity: 1e-12,
        }
    }
}

impl Tolerances {
    pub fn set(&mut self, spec: &str) -> CliResult<()> {
        let bad = |why: String| CliError::BadArguments(format!("tolerance {spec:?}: {why}"));
        let (key, value) = spec
            .split_once('=')
            .ok_or_else(|| bad("expected key=value".into()))?;
        let value: f64 = value.parse().map_err(|_| bad("value is not a number".into()))?;
        if !(value > 0.0 && value.is_finite()) {
            return Err(bad("value must be positive".into()));
        }
        let slot = match key {
            "energy" => &mut self.energy,
            "energy_radial" => &mut self.energy_radial,
            "norm" => &mut self.norm,
            "residual" => &mut self.residual,
            "shrink" => &mut self.shrink,
            "commutator" => &mut self.commutator,
            "fock" => &mut self.fock,
            "raise" => &mut self.raise,
            "argmax" => &mut self.argmax,
            "moment" => &mut self.moment,
            "action" => &mut self.action,
            "wavelength" => &mut self.wavelength,
            "bic_formula" => &mut self.bic_formula,
            "bic_residual" => &mut self.bic_residual,
            "bic_tail" => &mut self.bic_tail,
            "asymptote" => &mut self.asymptote,
            "identity" => &mut self.identity,
            other => return Err(bad(format!("unknown key {other:?}"))),
        };
        *slot = value;
        Ok(())
    }
}

/// Fully validated settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub family: Option<Family>,
    pub scheme: Option<Scheme>,
    pub n: Option<u32>,
    pub l: u32,
    pub m: i32,
    pub k: f64,
    pub lambda: f64,
    pub grid: Option<GridArg>,
    pub units: Option<Units>,
    pub out: Option<PathBuf>,
    pub tolerances: Tolerances,
    pub only: Option<String>,
    pub width: f64,
    pub omega: f64,
    pub count: usize,
    pub n_max: u32,
    pub time: f64,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        Self {
            command,
            family: None,
            scheme: None,
            n: None,
            l: 0,
            m: 0,
            k: 1.0,
            lambda: 1.0,
            grid: None,
            units: None,
            out: None,
            tolerances: Tolerances::default(),
            only: None,
            width: 1.0,
            omega: 1.0,
            count: 5,
            n_max: 5,
            time: 0.0,
            threads: None,
        }
    }

    pub fn from_command(command: Command) -> CliResult<Self> {
        let (kind, flags) = match command {
            Command::Eigenstate(f) => (CommandKind::Eigenstate, f),
            Command::Spectrum(f) => (CommandKind::Spectrum, f),
            Command::Bic(f) => (CommandKind::Bic, f),
            Command::Oldquantum(f) => (CommandKind::Oldquantum, f),
            Command::Verify(f) => (CommandKind::Verify, f),
        };
        Self::from_flags(kind, flags)
    }

    pub fn from_flags(kind: CommandKind, f: Flags) -> CliResult<Self> {
        let mut cfg = Self::new(kind);
        cfg.family = f.family.map(Family::from);
        cfg.scheme = f.scheme.map(Scheme::from);
        cfg.n = f.n;
        cfg.l = f.l.unwrap_or(0);
        cfg.m = f.m.unwrap_or(0);
        cfg.k = f.k.unwrap_or(1.0);
        cfg.lambda = f.lambda.unwrap_or(1.0);
        cfg.grid = f.grid.as_deref().map(str::parse).transpose()?;
        cfg.units = f.units;
        cfg.out = f.out;
        for t in &f.tolerance {
            cfg.tolerances.set(t)?;
        }
        cfg.only = f.only;
        cfg.width = f.width.unwrap_or(1.0);
        cfg.omega = f.omega.unwrap_or(1.0);
        cfg.count = f.count.unwrap_or(5);
        cfg.n_max = f.n_max.unwrap_or(5);
        cfg.time = f.time.unwrap_or(0.0);
        cfg.threads = f.threads;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> CliResult<()> {
        let bad = |s: &str| Err(CliError::BadArguments(s.to_string()));
        if matches!(self.command, CommandKind::Eigenstate | CommandKind::Spectrum) && self.family.is_none() {
            return bad("--family is required");
        }
        if self.command == CommandKind::Bic && self.scheme.is_none() {
            return bad("--scheme is required");
        }
        if self.command == CommandKind::Spectrum && (self.count == 0 || self.count > 10) {
            return bad("--count must be between 1 and 10");
        }
        if self.command == CommandKind::Oldquantum && (self.n_max == 0 || self.n_max > 20) {
            return bad("--n-max must be between 1 and 20");
        }
        if !(self.width > 0.0 && self.width.is_finite()) {
            return bad("--width must be positive");
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return bad("--omega must be positive");
        }
        if !(self.k > 0.0 && self.k.is_finite()) || !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return bad("--k and --lambda must be positive");
        }
        if !self.time.is_finite() {
            return bad("--time must be finite");
        }
        if self.threads == Some(0) {
            return bad("--threads must be at least 1");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing_is_strict() {
        let g: GridArg = "-5:5:1001".parse().unwrap();
        assert_eq!((g.start, g.end, g.points), (-5.0, 5.0, 1001));
        assert_eq!(g.x(1000), 5.0);
        assert!((g.step() - 0.01).abs() < 1e-15);
        for bad in ["", "1:2", "1:2:3:4", "0:1:1", "1:0:10", "0:1:10.0", "0:1:+10", "0: 1:10", "a:1:10", "0:inf:10", "0:1:-3"] {
            assert!(bad.parse::<GridArg>().is_err(), "{bad}");
        }
    }

    #[test]
    fn tolerance_overrides() {
        let mut t = Tolerances::default();
        t.set("energy=1e-12").unwrap();
        assert_eq!(t.energy, 1e-12);
        assert!(t.set("energy").is_err());
        assert!(t.set("nope=1").is_err());
        assert!(t.set("norm=-1").is_err());
    }

    #[test]
    fn required_selectors() {
        assert!(RunConfig::from_flags(CommandKind::Eigenstate, Flags::default()).is_err());
        assert!(RunConfig::from_flags(CommandKind::Bic, Flags::default()).is_err());
        let f = Flags {
            family: Some(FamilyArg::Box),
            count: Some(11),
            ..Flags::default()
        };
        assert!(RunConfig::from_flags(CommandKind::Spectrum, f).is_err());
        assert!(RunConfig::from_flags(CommandKind::Verify, Flags::default()).is_ok());
    }
}

use std::fmt::Write as _;
use std::path::Path;

use eigenwell_core::bic::{self, BICPotential, BICSpec};
use eigenwell_core::old_quantum::{bohr_energy_ev, bohr_radius, transition_wavelength, ws_quantize};
use eigenwell_core::sturm_liouville::{find_eigenvalue, SLProblem};
use eigenwell_core::wells::{ho_energy, iso_ho_energy};
use eigenwell_core::{
    BoxSpec, Family, GridSpec, HydrogenQN, IsoOscQN, OscSpec, QuantumNumbers, StationaryState,
};
use rayon::prelude::*;

use crate::config::{CommandKind, GridArg, RunConfig};
use crate::error::{CliError, CliResult};
use crate::format::{row, sci};
use crate::units::{EnergyBase, Scale, Units};
use crate::verify;

/// Result of one command: the rendered text and the exit status it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub failure: Option<FailureKind>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FailureKind {
    Verification(usize),
    BicResidual { residual: f64, tolerance: f64 },
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, failure: None }
    }
}

/// Runs the configured command, writes its output, and maps failures to
/// [`CliError`].
pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let outcome = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::BadArguments(e.to_string()))?
            .install(|| render(cfg))?,
        None => render(cfg)?,
    };
    match &cfg.out {
        Some(path) => write_file(path, &outcome.text)?,
        None => print!("{}", outcome.text),
    }
    match outcome.failure {
        None => Ok(()),
        Some(FailureKind::Verification(n)) => Err(CliError::Verification(n)),
        Some(FailureKind::BicResidual { residual, tolerance }) => {
            Err(CliError::BicResidual { residual, tolerance })
        }
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Produces the command output without touching the filesystem.
pub fn render(cfg: &RunConfig) -> CliResult<Outcome> {
    match cfg.command {
        CommandKind::Eigenstate => eigenstate(cfg).map(Outcome::ok),
        CommandKind::Spectrum => spectrum(cfg).map(Outcome::ok),
        CommandKind::Bic => bic_table(cfg),
        CommandKind::Oldquantum => oldquantum(cfg).map(Outcome::ok),
        CommandKind::Verify => Ok(verify_report(cfg)),
    }
}

fn energy_base(family: Family) -> EnergyBase {
    match family {
        Family::Hydrogen => EnergyBase::Rydberg,
        _ => EnergyBase::Hartree,
    }
}

fn units_for(cfg: &RunConfig, family: Option<Family>) -> Units {
    cfg.units.unwrap_or(match family {
        Some(Family::Hydrogen) => Units::Rydberg,
        _ => Units::Natural,
    })
}

fn family(cfg: &RunConfig) -> CliResult<Family> {
    cfg.family
        .ok_or_else(|| CliError::BadArguments("--family is required".into()))
}

/// The stationary state selected by `--family` and the quantum numbers.
pub fn selected_state(cfg: &RunConfig) -> CliResult<StationaryState> {
    let qn = match family(cfg)? {
        Family::Box => QuantumNumbers::Box {
            n: cfg.n.unwrap_or(1),
            spec: BoxSpec::new(cfg.width)?,
        },
        Family::Ho1d => QuantumNumbers::Ho1d {
            n: cfg.n.unwrap_or(0),
            spec: OscSpec::new(cfg.omega)?,
        },
        Family::Hydrogen => QuantumNumbers::Hydrogen(HydrogenQN::new(cfg.n.unwrap_or(1), cfg.l, cfg.m)?),
        Family::IsoHo => QuantumNumbers::IsoHo {
            qn: IsoOscQN::new(cfg.n.unwrap_or(0), cfg.l, cfg.m)?,
            spec: OscSpec::new(cfg.omega)?,
        },
    };
    Ok(StationaryState::new(qn)?)
}

fn default_grid(cfg: &RunConfig, state: &StationaryState) -> GridArg {
    let length = cfg.omega.sqrt().recip();
    match state.quantum_numbers() {
        QuantumNumbers::Box { spec, .. } => GridArg {
            start: -0.5 * spec.width(),
            end: 0.5 * spec.width(),
            points: 1001,
        },
        QuantumNumbers::Ho1d { .. } => GridArg {
            start: -10.0 * length,
            end: 10.0 * length,
            points: 2001,
        },
        QuantumNumbers::Hydrogen(h) => {
            let n = f64::from(h.n());
            GridArg {
                start: 0.0,
                end: 10.0 * n * n + 10.0,
                points: 2001,
            }
        }
        QuantumNumbers::IsoHo { .. } => GridArg {
            start: 0.0,
            end: 8.0 * length,
            points: 2001,
        },
    }
}

fn eigenstate(cfg: &RunConfig) -> CliResult<String> {
    let state = selected_state(cfg)?;
    let fam = state.family();
    let grid = cfg.grid.unwrap_or_else(|| default_grid(cfg, &state));
    if fam.is_radial() && grid.start < 0.0 {
        return Err(CliError::BadArguments("radial grids must start at r ≥ 0".into()));
    }
    let Scale { length, .. } = units_for(cfg, Some(fam)).scale(energy_base(fam));
    let psi_scale = if fam.is_radial() { length.powf(-1.5) } else { length.powf(-0.5) };
    let phase = eigenwell_core::wells::dynamical_phase(state.energy(), cfg.time);
    let rows: Vec<String> = (0..grid.points)
        .into_par_iter()
        .map(|i| {
            let x = grid.x(i);
            let profile = state.profile(x);
            let psi = phase * profile;
            let density = if fam.is_radial() { x * x * profile * profile } else { profile * profile };
            row(&[x * length, psi.re * psi_scale, psi.im * psi_scale, density / length])
        })
        .collect();
    let mut out = String::from("x,psi_re,psi_im,prob_density\n");
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    Ok(out)
}

/// Numerov problem and node target for row `index` of a spectrum table,
/// together with the level label and closed-form energy.
struct Level {
    label: u32,
    analytic: f64,
    node_target: usize,
}

fn spectrum_levels(cfg: &RunConfig, fam: Family) -> CliResult<(SLProblem, Vec<Level>)> {
    let count = cfg.count as u32;
    match fam {
        Family::Box => {
            let spec = BoxSpec::new(cfg.width)?;
            let levels = (1..=count)
                .map(|n| {
                    Ok(Level {
                        label: n,
                        analytic: eigenwell_core::wells::box_energy(n, spec)?,
                        node_target: (n - 1) as usize,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            Ok((SLProblem::box_well(spec, 4001)?, levels))
        }
        Family::Ho1d => {
            let spec = OscSpec::new(cfg.omega)?;
            let levels: Vec<Level> = (0..count)
                .map(|n| Level {
                    label: n,
                    analytic: ho_energy(n, spec),
                    node_target: n as usize,
                })
                .collect();
            let top = ho_energy(count, spec);
            Ok((SLProblem::harmonic(spec, top, 1e-3 / cfg.omega.sqrt())?, levels))
        }
        Family::Hydrogen => {
            let l = cfg.l;
            let levels = (l + 1..=l + count)
                .map(|n| {
                    Ok(Level {
                        label: n,
                        analytic: eigenwell_core::wells::hydrogen_energy(n)?,
                        node_target: (n - l - 1) as usize,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            let top = f64::from(l + count);
            Ok((SLProblem::hydrogen(l, -0.9 / (top * top), 1e-3)?, levels))
        }
        Family::IsoHo => {
            let spec = OscSpec::new(cfg.omega)?;
            let l = cfg.l;
            let levels = (0..count)
                .map(|n_r| {
                    Ok(Level {
                        label: n_r,
                        analytic: iso_ho_energy(IsoOscQN::new(n_r, l, 0)?, spec),
                        node_target: n_r as usize,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?;
            let top = iso_ho_energy(IsoOscQN::new(count, l, 0)?, spec);
            Ok((SLProblem::iso_harmonic(l, spec, top, 1e-3 / cfg.omega.sqrt())?, levels))
        }
    }
}

fn spectrum(cfg: &RunConfig) -> CliResult<String> {
    let fam = family(cfg)?;
    let scale = units_for(cfg, Some(fam)).scale(energy_base(fam));
    let (problem, levels) = spectrum_levels(cfg, fam)?;
    let solved: Vec<CliResult<String>> = levels
        .par_iter()
        .map(|lv| {
            let r = find_eigenvalue(&problem, lv.node_target)?;
            if !r.converged {
                return Err(CliError::NonConvergence(format!("level {}", lv.label)));
            }
            let a = lv.analytic * scale.energy;
            let e = r.energy * scale.energy;
            Ok(format!("{},{},{},{},{}", lv.label, sci(a), sci(e), sci((a - e).abs()), r.node_count))
        })
        .collect();
    let mut out = String::from("n,analytic_E,numerov_E,abs_err,node_count\n");
    for line in solved {
        out.push_str(&line?);
        out.push('\n');
    }
    Ok(out)
}

fn bic_table(cfg: &RunConfig) -> CliResult<Outcome> {
    let scheme = cfg
        .scheme
        .ok_or_else(|| CliError::BadArguments("--scheme is required".into()))?;
    let spec = BICSpec::new(scheme, cfg.k, cfg.lambda)?;
    let pot = BICPotential::new(spec);
    let grid = cfg.grid.unwrap_or_else(|| {
        let h = 5e-4 / cfg.k;
        GridArg {
            start: h,
            end: h * 100_000.0,
            points: 100_000,
        }
    });
    if grid.start < 0.0 {
        return Err(CliError::BadArguments("BIC grids must start at r ≥ 0".into()));
    }
    let scale = units_for(cfg, None).scale(EnergyBase::Hartree);
    let h = grid.step();
    let e0 = pot.energy();
    let u: Vec<f64> = (0..grid.points).into_par_iter().map(|i| pot.u(grid.x(i))).collect();
    let peak = u.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let rows: Vec<(String, f64)> = (0..grid.points)
        .into_par_iter()
        .map(|i| {
            let r = grid.x(i);
            let (um, up) = (pot.u(r - h), pot.u(r + h));
            let lap = (up - 2.0 * u[i] + um) / (h * h);
            let v = pot.potential(r);
            let res = (-0.5 * lap + (v - e0) * u[i]).abs() / peak;
            let line = row(&[
                r * scale.length,
                pot.s(r),
                pot.f(r),
                v * scale.energy,
                pot.psi(r) * scale.length.powf(-1.5),
                res * scale.energy,
            ]);
            (line, res)
        })
        .collect();
    let max_res = rows.iter().fold(0.0f64, |a, (_, r)| a.max(*r));
    let tolerance = cfg.tolerances.bic_residual;
    let convergent = GridSpec::new(grid.start, grid.end, grid.points)
        .ok()
        .map(|g| bic::verify_eigen_residual(&spec, &g).is_ok())
        .unwrap_or(false);
    let failed = max_res > tolerance || !convergent;
    let mut out = String::from("r,s,f,V,psi,u_residual\n");
    for (line, _) in &rows {
        out.push_str(line);
        out.push('\n');
    }
    let _ = write!(
        out,
        "# E0={} max_residual={}",
        sci(e0 * scale.energy),
        sci(max_res * scale.energy)
    );
    if failed {
        out.push_str(" FAILED");
    }
    out.push('\n');
    Ok(Outcome {
        text: out,
        failure: failed.then_some(FailureKind::BicResidual {
            residual: max_res,
            tolerance,
        }),
    })
}

fn oldquantum(cfg: &RunConfig) -> CliResult<String> {
    let scale = units_for(cfg, None).scale(EnergyBase::Hartree);
    let omega = cfg.omega;
    let potential: eigenwell_core::sturm_liouville::RealFn =
        std::sync::Arc::new(move |x: f64| 0.5 * omega * omega * x * x);
    let rows: Vec<CliResult<String>> = (1..=cfg.n_max)
        .into_par_iter()
        .map(|n| {
            let ws = ws_quantize(potential.clone(), 0.0, n)?;
            Ok(format!(
                "{n},{},{},{}",
                sci(bohr_radius(n)?),
                sci(bohr_energy_ev(n)?),
                sci(ws * scale.energy)
            ))
        })
        .collect();
    let mut out = String::from("n,bohr_radius_aB,bohr_energy_eV,ws_ho_E\n");
    for r in rows {
        out.push_str(&r?);
        out.push('\n');
    }
    out.push_str("# transitions\nn_upper,n_lower,lambda_angstrom\n");
    for upper in 2..=cfg.n_max {
        for lower in 1..upper {
            let lambda = transition_wavelength(bohr_energy_ev(upper)?, bohr_energy_ev(lower)?)?;
            let _ = writeln!(out, "{upper},{lower},{}", sci(lambda));
        }
    }
    let _ = writeln!(out, "# photon 4.89 eV lambda_angstrom={}", sci(transition_wavelength(4.89, 0.0)?));
    Ok(out)
}

fn verify_report(cfg: &RunConfig) -> Outcome {
    let checks = verify::run_selected(&cfg.tolerances, cfg.only.as_deref());
    let failures = checks.iter().filter(|c| !c.pass).count();
    let mut text: String = checks.iter().map(|c| format!("{}\n", c.line())).collect();
    let _ = writeln!(
        text,
        "{} of {} checks passed",
        checks.len() - failures,
        checks.len()
    );
    Outcome {
        text,
        failure: (failures > 0).then_some(FailureKind::Verification(failures)),
    }
}

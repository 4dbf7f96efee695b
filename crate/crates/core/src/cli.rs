// SPDX-License-Identifier: Apache-2.0

//! `nri` command line: `sweep`, `point` and `validate`.
//!
//! Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 solver
//! failure in `point` mode.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::config::{load_config, Config};
use crate::constants::Constants;
use crate::error::Error;
use crate::response::{evaluate_point, Branch};
use crate::svg::{write_svg, Quantity};
use crate::sweep::{run_sweep_with, Execution};
use crate::table::write_csv;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "nri",
    version,
    about = "Steady-state EM response of a pumped four-level medium"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep Δ_p for every Ω_c in the config and write CSV (and optional SVG charts).
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_csv: PathBuf,
        #[arg(long)]
        out_svg_dir: Option<PathBuf>,
        #[arg(long)]
        branch: Option<Branch>,
        /// Propagate every point in time as an independent check of the direct solve.
        #[arg(long)]
        cross_check: bool,
        /// Evaluate points on one thread.
        #[arg(long)]
        serial: bool,
    },
    /// Evaluate and print a single grid point.
    Point {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        delta_p: f64,
        #[arg(long, allow_hyphen_values = true)]
        omega_c: f64,
        #[arg(long)]
        branch: Option<Branch>,
    },
    /// Parse the config and check parameter invariants.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::Io { .. } => EXIT_IO,
        Error::Config { .. } | Error::InvalidParams(_) => EXIT_CONFIG,
        _ => EXIT_SOLVER,
    }
}

fn load_valid(path: &Path) -> Result<Config, Error> {
    let cfg = load_config(path)?;
    cfg.spec.validate()?;
    Ok(cfg)
}

/// Runs the CLI on `argv` (including the program name).
pub fn cli_main<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_CONFIG
                }
            };
        }
    };
    match run(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), Error> {
    match command {
        Command::Validate { config } => {
            let cfg = load_valid(&config)?;
            if !Constants::<f64>::si().is_consistent() {
                return Err(Error::InvalidParams(
                    "physical constants inconsistent".into(),
                ));
            }
            let _ = writeln!(
                out,
                "ok: {} grid points x {} coupling strengths",
                cfg.spec.delta_p_steps,
                cfg.spec.omega_c_list.len()
            );
            Ok(())
        }
        Command::Sweep {
            config,
            out_csv,
            out_svg_dir,
            branch,
            cross_check,
            serial,
        } => {
            let mut cfg = load_valid(&config)?;
            if let Some(b) = branch {
                cfg.spec.branch = b;
            }
            cfg.spec.cross_check |= cross_check;
            let k = Constants::si();
            let opts = cfg.spec.point_options();
            let exec = if serial {
                Execution::Serial
            } else {
                Execution::Parallel
            };
            let result = run_sweep_with(&cfg.spec, exec, |p| evaluate_point(p, &k, opts))?;
            write_csv(&result, &out_csv)?;
            if let Some(dir) = out_svg_dir {
                fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
                for q in Quantity::ALL {
                    let path = dir.join(format!("{}.svg", q.name()));
                    match write_svg(&result, q, &path) {
                        Err(Error::EmptySelection(name)) => {
                            let _ = writeln!(out, "skipped {name}.svg: no plottable values");
                        }
                        other => other?,
                    }
                }
            }
            let _ = writeln!(
                out,
                "wrote {} points ({} failures) to {}",
                result.points.len(),
                result.failures.len(),
                out_csv.display()
            );
            Ok(())
        }
        Command::Point {
            config,
            delta_p,
            omega_c,
            branch,
        } => {
            let cfg = load_valid(&config)?;
            let params = cfg.params_at(delta_p, omega_c);
            params.validate()?;
            let mut opts = cfg.spec.point_options();
            if let Some(b) = branch {
                opts.branch = b;
            }
            let p = evaluate_point(&params, &Constants::si(), opts)?;
            let pops = p.solve.rho_ss.populations();
            let lines = [
                ("delta_p", p.delta_p),
                ("omega_c", p.omega_c),
                ("re_alpha_e", p.alpha_e.re),
                ("im_alpha_e", p.alpha_e.im),
                ("re_alpha_m", p.alpha_m.re),
                ("im_alpha_m", p.alpha_m.im),
                ("re_eps", p.eps_r.re),
                ("im_eps", p.eps_r.im),
                ("re_mu", p.mu_r.re),
                ("im_mu", p.mu_r.im),
                ("re_n", p.n.re),
                ("im_n", p.n.im),
                ("fom", p.fom),
                ("rho11", pops[0]),
                ("rho22", pops[1]),
                ("rho33", pops[2]),
                ("rho44", pops[3]),
                ("residual_inf", p.solve.residual_inf),
            ];
            for (key, v) in lines {
                let _ = writeln!(out, "{key} = {}", crate::table::fmt_num(v));
            }
            Ok(())
        }
    }
}

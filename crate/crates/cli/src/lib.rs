//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards `std::env::args` and exits with its return value.
//!
//! Exit codes: 0 success, 1 invalid input or usage, 2 a cap was exceeded,
//! 3 a theorem-violation assertion fired.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use hurwitz_weyl::hurwitz::{
    self, nielsen_reduce, normal_form_with_cap, replay, BraidMove, MoveLog, SystemRepr,
};
use hurwitz_weyl::orbits::{braid_orbit, verify_irreducibility, Caps, OrbitConfig};
use hurwitz_weyl::weyl::DEFAULT_SUBGROUP_CAP;
use hurwitz_weyl::{BranchingData, Error, HurwitzSystem, RootSystem, RootSystemSpec};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_THEOREM: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hurwitz-weyl", version, about = "Hurwitz systems of reflections in Weyl groups")]
struct Cli {
    /// Write the JSON result here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a root system: roots, Cartan and Gram matrices, λ
    Roots {
        /// e.g. `G2` or `A1+B3`
        spec: String,
    },
    /// Check that a system file is a Hurwitz system and describe it
    Validate {
        /// System JSON `{rootsystem, axes}`; `-` reads stdin
        input: PathBuf,
    },
    /// Apply braid moves, or replay a move log
    Move {
        input: PathBuf,
        /// Comma-separated moves: `3` is σ_3, `-3` its inverse
        #[arg(long, conflicts_with = "replay", allow_hyphen_values = true)]
        moves: Option<String>,
        /// Move log JSON to replay (hashes are checked at both ends)
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Reduce a generating system to normal form; ships the move log
    NormalForm {
        input: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Nielsen-reduce the entries of a file `{rootsystem, axes}` (no product
    /// condition)
    NielsenReduce {
        input: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Braid orbit of a system
    Orbit {
        input: PathBuf,
        /// Print only the size and hashes, not every member
        #[arg(long)]
        summary: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Enumerate, split into orbits and check the single-orbit statement
    Verify {
        #[arg(long)]
        spec: String,
        /// `n=4`, `ns=2,nl=2`, or `A2:n=4;G2:ns=2,nl=2`
        #[arg(long)]
        branching: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run `verify` for every cell of a manifest, one JSON report per line
    Matrix {
        /// JSON list of `{"spec": .., "branching": ..}`
        #[arg(long)]
        manifest: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct CapArgs {
    /// Largest subgroup or reachability closure
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_CAP, value_parser = positive)]
    subgroup_cap: usize,
    /// Largest braid orbit explored when pairing entries
    #[arg(long, default_value_t = hurwitz::DEFAULT_SEARCH_CAP, value_parser = positive)]
    search_cap: usize,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    /// Worker threads (output does not depend on it)
    #[arg(long, default_value_t = 1, value_parser = positive)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_CAP, value_parser = positive)]
    subgroup_cap: usize,
    /// Largest braid orbit
    #[arg(long, default_value_t = Caps::default().orbit_nodes, value_parser = positive)]
    orbit_cap: usize,
    /// Largest enumerated family
    #[arg(long, default_value_t = Caps::default().systems, value_parser = positive)]
    systems_cap: usize,
    /// Check conservation laws on every k-th explored edge (0 disables)
    #[arg(long, default_value_t = 100)]
    check_every: u64,
    /// Add `elapsed_ms` to reports (makes them run-dependent)
    #[arg(long)]
    timing: bool,
}

impl RunArgs {
    fn config(&self) -> OrbitConfig {
        OrbitConfig {
            caps: Caps {
                subgroup: self.subgroup_cap,
                orbit_nodes: self.orbit_cap,
                systems: self.systems_cap,
            },
            jobs: self.jobs,
            check_every: self.check_every,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ManifestCell {
    pub spec: String,
    pub branching: String,
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_DOMAIN;
        }
    };
    let mut buf = Vec::new();
    let code = match execute(&cli.command, &mut buf, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code(&e)
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &buf).with_context(|| format!("writing {}", path.display())),
        None => out.write_all(&buf).map_err(Into::into),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e:#}");
        return code.max(EXIT_DOMAIN);
    }
    code
}

fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(e) if e.is_cap() => EXIT_CAP,
        Some(e) if e.is_theorem_violation() => EXIT_THEOREM,
        _ => EXIT_DOMAIN,
    }
}

fn emit(out: &mut Vec<u8>, v: &impl Serialize) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    out.push(b'\n');
    Ok(())
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_repr(path: &Path) -> anyhow::Result<SystemRepr> {
    let text = read_input(path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing system {}", path.display()))
}

fn read_system(path: &Path) -> anyhow::Result<HurwitzSystem> {
    let repr = read_repr(path)?;
    let rs = repr.build_root_system()?;
    Ok(repr.into_system(&rs)?)
}

fn parse_moves(s: &str) -> anyhow::Result<Vec<BraidMove>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BraidMove>().map_err(anyhow::Error::from))
        .collect()
}

fn describe(sys: &HurwitzSystem) -> Value {
    let spec = sys.root_system().spec();
    json!({
        "system": sys.to_repr(),
        "length": sys.len(),
        "branching": sys.branching_signature().format(spec),
        "generates_weyl_group": sys.generates_weyl_group(),
        "hash": format!("{:016x}", sys.canonical_hash()),
    })
}

fn execute(cmd: &Command, out: &mut Vec<u8>, err: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Roots { spec } => {
            let spec: RootSystemSpec = spec.parse()?;
            emit(out, &RootSystem::build(&spec)?.summary())?;
        }
        Command::Validate { input } => {
            let sys = read_system(input)?;
            emit(out, &describe(&sys))?;
        }
        Command::Move { input, moves, replay: log_path } => {
            let sys = read_system(input)?;
            let (target, log) = match (moves, log_path) {
                (Some(m), None) => MoveLog::record(&sys, parse_moves(m)?)?,
                (None, Some(p)) => {
                    let log: MoveLog = serde_json::from_str(&read_input(p)?)
                        .with_context(|| format!("parsing move log {}", p.display()))?;
                    (replay(&sys, &log)?, log)
                }
                _ => bail!(Error::InvalidInput("give exactly one of --moves or --replay".into())),
            };
            emit(out, &json!({ "system": target.to_repr(), "log": log }))?;
        }
        Command::NormalForm { input, caps } => {
            let sys = read_system(input)?;
            let (nf, log) = normal_form_with_cap(&sys, caps.search_cap)?;
            emit(
                out,
                &json!({
                    "source": sys.to_repr(),
                    "normal_form": nf.to_repr(),
                    "branching": sys.branching_signature().format(sys.root_system().spec()),
                    "log": log,
                }),
            )?;
        }
        Command::NielsenReduce { input, caps } => {
            let repr = read_repr(input)?;
            let rs = repr.build_root_system()?;
            let set = repr.reflections(&rs)?;
            let red = nielsen_reduce(&rs, &set)?;
            let axes = |ts: &[hurwitz_weyl::Reflection]| {
                ts.iter().map(|t| t.axis(&rs).clone()).collect::<Vec<_>>()
            };
            let base = red.base();
            let generated =
                hurwitz_weyl::weyl::reflection_subgroup(&rs, &base, caps.subgroup_cap)?.len();
            let trace: Vec<Value> = red
                .trace
                .iter()
                .map(|s| {
                    json!({
                        "source": s.source,
                        "target": s.target,
                        "height_before": s.height_before,
                        "height_after": s.height_after,
                        "collision": s.collision,
                    })
                })
                .collect();
            emit(
                out,
                &json!({
                    "rootsystem": rs.spec().to_string(),
                    "input": axes(&set),
                    "reduced": axes(&red.reduced),
                    "base": axes(&base),
                    "subgroup_order": generated,
                    "generates_weyl_group": base.len() == rs.rank()
                        && base.iter().enumerate().all(|(i, t)| t.axis_index() == i),
                    "trace": trace,
                }),
            )?;
        }
        Command::Orbit { input, summary, run } => {
            let sys = read_system(input)?;
            let started = Instant::now();
            let orbit = braid_orbit(&sys, &run.config())?;
            let mut report = json!({
                "source": sys.to_repr(),
                "orbit_size": orbit.len(),
                "generates_weyl_group": sys.generates_weyl_group(),
            });
            if *summary {
                let hashes: Vec<String> =
                    orbit.iter().map(|s| format!("{:016x}", s.canonical_hash())).collect();
                report["member_hashes"] = json!(hashes);
            } else {
                report["members"] = json!(orbit.iter().map(HurwitzSystem::axes).collect::<Vec<_>>());
            }
            if run.timing {
                report["elapsed_ms"] = json!(started.elapsed().as_millis() as u64);
            }
            emit(out, &report)?;
        }
        Command::Verify { spec, branching, run } => {
            let report = verify_cell(spec, branching, run)?;
            emit(out, &report)?;
        }
        Command::Matrix { manifest, run } => {
            let cells: Vec<ManifestCell> = serde_json::from_str(&read_input(manifest)?)
                .with_context(|| format!("parsing manifest {}", manifest.display()))?;
            let mut worst = EXIT_OK;
            for cell in &cells {
                let line = match verify_cell(&cell.spec, &cell.branching, run) {
                    Ok(report) => serde_json::to_value(report)?,
                    Err(e) => {
                        let code = exit_code(&e);
                        worst = worst.max(code);
                        let _ = writeln!(err, "{} {}: {e:#}", cell.spec, cell.branching);
                        json!({
                            "spec": cell.spec,
                            "branching": cell.branching,
                            "error": format!("{e:#}"),
                            "exit_code": code,
                        })
                    }
                };
                serde_json::to_writer(&mut *out, &line)?;
                out.push(b'\n');
            }
            return Ok(worst);
        }
    }
    Ok(EXIT_OK)
}

fn verify_cell(spec: &str, branching: &str, run: &RunArgs) -> anyhow::Result<hurwitz_weyl::orbits::OrbitReport> {
    let spec: RootSystemSpec = spec.parse()?;
    let branching = BranchingData::parse(&spec, branching)?;
    let started = Instant::now();
    let mut report = verify_irreducibility(&spec, &branching, &run.config())?;
    if run.timing {
        report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    }
    Ok(report)
}

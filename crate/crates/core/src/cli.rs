//! The `bnq` command-line tool.
//!
//! Every option may come from a TOML file given with `--config`; flags on
//! the command line take precedence over the file. Exit codes: 0 success,
//! 1 failed check or I/O error, 2 usage error, 3 enumeration budget
//! exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cut_project::{
    edge_directions, generate_icosahedral_patch, tile_census, tile_edges, PatchConfig, Pattern,
    ShiftSpec, WindowMode,
};
use crate::frame::{b6_h3_frame, Frame, FrameKind};
use crate::render::{off, orbit_csv, pattern_csv, pattern_svg, run_checks};
use crate::tol;
use crate::voronoi::{named_solids, Polyhedron};
use crate::weyl::{orbit, RootDatum};

#[derive(Debug, Parser)]
#[command(name = "bnq", version, about = "W(B_n) orbits, cube shadows and cut-and-project patterns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Weyl orbit of a highest weight.
    Orbit,
    /// OFF meshes of the named 3D cube shadows plus a JSON report.
    Solids,
    /// Planar cut-and-project patch: CSV, JSON metadata and SVG.
    Patch,
    /// Rank 6 icosahedral patch: CSV, JSON metadata and OFF point cloud.
    IcosaPatch,
    /// Invariant suite with a JSON pass/fail report.
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
    Off,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
            Format::Off => "off",
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Opts {
    /// Rank n of B_n.
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Highest weight, e.g. `0001` or `1,0,2,0`.
    #[arg(long, global = true)]
    pub weight: Option<String>,
    /// Projection frame: coxeter, fivefold, h3 or tbasis.
    #[arg(long, global = true)]
    pub frame: Option<FrameKind>,
    /// Window mode: hull or disc.
    #[arg(long, global = true)]
    pub window: Option<WindowMode>,
    /// Window shift: omega, zero, or a comma-separated vector.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub shift: Option<ShiftSpec>,
    /// Parallel-space radius of the patch.
    #[arg(long, global = true)]
    pub radius: Option<f64>,
    /// Cap on enumerated candidate tuples.
    #[arg(long, global = true)]
    pub budget: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file (orbit, check) or directory (solids, patch, icosa-patch).
    /// Without it the selected format goes to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML file with any of the options above plus `command`.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Reserved; accepted and ignored.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Listed<T> {
    Text(String),
    List(Vec<T>),
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    command: Option<Command>,
    rank: Option<usize>,
    weight: Option<Listed<u32>>,
    frame: Option<String>,
    window: Option<String>,
    shift: Option<Listed<f64>>,
    radius: Option<f64>,
    budget: Option<f64>,
    format: Option<Format>,
    out: Option<PathBuf>,
    seed: Option<u64>,
}

/// Fully merged options for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub rank: Option<usize>,
    pub weight: Option<Vec<u32>>,
    pub frame: Option<FrameKind>,
    pub window: Option<WindowMode>,
    pub shift: Option<ShiftSpec>,
    pub radius: Option<f64>,
    pub budget: f64,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Budget(crate::Error),
    #[error(transparent)]
    Library(crate::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) | CliError::Io { .. } => 1,
            CliError::Usage(_) | CliError::Library(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::BudgetExceeded { .. } => CliError::Budget(e),
            other => CliError::Library(other),
        }
    }
}

fn usage(msg: impl fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

fn parse_weight(s: &str) -> Result<Vec<u32>, CliError> {
    let s = s.trim();
    let parts: Vec<&str> = if s.contains(',') {
        s.split(',').map(str::trim).collect()
    } else {
        s.split("").filter(|c| !c.is_empty()).collect()
    };
    parts
        .iter()
        .map(|p| p.parse::<u32>().map_err(|_| usage(format!("invalid weight `{s}`"))))
        .collect()
}

fn parse_field<T: FromStr<Err = String>>(s: &str) -> Result<T, CliError> {
    s.parse().map_err(usage)
}

impl RunConfig {
    /// Merge parsed flags over an optional config file.
    pub fn resolve(cli: Cli) -> Result<Self, CliError> {
        let file = match &cli.opts.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                toml::from_str::<FileConfig>(&text)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?
            }
            None => FileConfig::default(),
        };
        let o = cli.opts;
        let command = cli
            .command
            .or(file.command)
            .ok_or_else(|| usage("no subcommand given (try `bnq --help`)"))?;

        let weight = match (o.weight, file.weight) {
            (Some(s), _) | (None, Some(Listed::Text(s))) => Some(parse_weight(&s)?),
            (None, Some(Listed::List(v))) => Some(v),
            (None, None) => None,
        };
        let shift = match (o.shift, file.shift) {
            (Some(s), _) => Some(s),
            (None, Some(Listed::Text(s))) => Some(parse_field(&s)?),
            (None, Some(Listed::List(v))) => Some(ShiftSpec::Custom(v)),
            (None, None) => None,
        };
        let frame = match o.frame {
            Some(f) => Some(f),
            None => file.frame.as_deref().map(parse_field).transpose()?,
        };
        let window = match o.window {
            Some(w) => Some(w),
            None => file.window.as_deref().map(parse_field).transpose()?,
        };
        let radius = o.radius.or(file.radius);
        if let Some(r) = radius {
            if !(r > 0.0 && r.is_finite()) {
                return Err(usage(format!("radius must be positive, got {r}")));
            }
        }
        let budget = o.budget.or(file.budget).unwrap_or(tol::DEFAULT_BUDGET);
        if !(budget > 0.0) {
            return Err(usage(format!("budget must be positive, got {budget}")));
        }
        Ok(RunConfig {
            command,
            rank: o.rank.or(file.rank),
            weight,
            frame,
            window,
            shift,
            radius,
            budget,
            format: o.format.or(file.format),
            out: o.out.or(file.out),
            seed: o.seed.or(file.seed),
        })
    }

    fn require_rank(&self) -> Result<usize, CliError> {
        let n = self.rank.ok_or_else(|| usage("--rank is required"))?;
        RootDatum::new(n)?;
        Ok(n)
    }
}

/// Where the output of a run goes.
pub enum Sink<'a> {
    Stdout(&'a mut dyn Write),
    Dir(PathBuf),
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(stdout: &mut dyn Write, body: &str) -> Result<(), CliError> {
    stdout.write_all(body.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })
}

fn cmd_orbit(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let weight = cfg.weight.as_ref().ok_or_else(|| usage("--weight is required"))?;
    if let Some(n) = cfg.rank {
        if n != weight.len() {
            return Err(usage(format!("weight has {} entries but --rank is {n}", weight.len())));
        }
    }
    let datum = RootDatum::new(weight.len()).map_err(|e| usage(e.to_string()))?;
    let o = orbit(&datum, weight)?;
    let body = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => orbit_csv(&o),
        Format::Json => to_json(&serde_json::json!({
            "label": o.label(),
            "rank": weight.len(),
            "size": o.len(),
            "points": o.points_f64(),
        })),
        f => return Err(usage(format!("orbit output cannot be {}", f.ext()))),
    };
    match &cfg.out {
        Some(path) => write_file(path, &body),
        None => emit(stdout, &body),
    }
}

#[derive(Serialize)]
struct SolidEntry<'a> {
    name: &'a str,
    file: String,
    faces: usize,
    edges: usize,
    #[serde(flatten)]
    report: &'a crate::voronoi::SolidReport,
}

fn cmd_solids(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let n = cfg.require_rank()?;
    let solids = named_solids(n).map_err(|e| match e {
        crate::Error::RankOutOfRange { .. } => usage(format!("solids are defined for ranks 4, 5, 6, not {n}")),
        other => other.into(),
    })?;
    let frame = match n {
        4 => FrameKind::TBasis,
        5 => FrameKind::Fivefold,
        _ => FrameKind::H3,
    };
    let entries: Vec<SolidEntry> = solids
        .iter()
        .map(|s| SolidEntry {
            name: &s.name,
            file: format!("{}.off", s.name),
            faces: s.mesh.faces.len(),
            edges: s.mesh.edge_count(),
            report: &s.report,
        })
        .collect();
    let report = to_json(&serde_json::json!({ "rank": n, "frame": frame, "solids": entries }));
    match (&cfg.out, cfg.format.unwrap_or(Format::Json)) {
        (Some(dir), _) => {
            ensure_dir(dir)?;
            for s in &solids {
                write_file(&dir.join(format!("{}.off", s.name)), &off(&s.mesh))?;
            }
            write_file(&dir.join("solids.json"), &report)
        }
        (None, Format::Json) => emit(stdout, &report),
        (None, Format::Off) => {
            let body: String = solids.iter().map(|s| off(&s.mesh)).collect();
            emit(stdout, &body)
        }
        (None, f) => Err(usage(format!("solids output cannot be {}", f.ext()))),
    }
}

#[derive(Serialize)]
struct WindowMeta<'a> {
    mode: WindowMode,
    dimension: usize,
    shift: &'a [f64],
    radius: f64,
    facets: usize,
}

#[derive(Serialize)]
struct CensusMeta {
    triangles: usize,
    squares: usize,
    rhombi: usize,
    irregular: usize,
    classes: BTreeMap<String, usize>,
}

/// Summary written next to a patch.
#[derive(Serialize)]
struct PatchMeta<'a> {
    rank: usize,
    frame: FrameKind,
    window: WindowMeta<'a>,
    par_radius: f64,
    bound: i64,
    candidates: u64,
    points: usize,
    merged: usize,
    edges: usize,
    edge_length: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_directions_deg: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tile_census: Option<CensusMeta>,
}

fn patch_meta(pattern: &Pattern, frame: &Frame, window: &crate::cut_project::Window) -> String {
    let planar = pattern.par_dimension() == 2;
    let census = planar.then(|| {
        let c = tile_census(pattern, &tile_edges(pattern, frame));
        CensusMeta {
            triangles: c.triangles,
            squares: c.squares(),
            rhombi: c.rhombi(),
            irregular: c.irregular,
            classes: c.classes(),
        }
    });
    let round = |x: f64| (x * 1e9).round() / 1e9;
    to_json(&PatchMeta {
        rank: pattern.rank,
        frame: pattern.frame,
        window: WindowMeta {
            mode: window.mode,
            dimension: window.dimension,
            shift: &window.lattice_shift,
            radius: window.radius,
            facets: window.facets.len(),
        },
        par_radius: pattern.par_radius,
        bound: pattern.bound,
        candidates: pattern.candidates,
        points: pattern.len(),
        merged: pattern.merged,
        edges: pattern.edges.len(),
        edge_length: pattern.edge_length,
        edge_directions_deg: planar
            .then(|| edge_directions(pattern).into_iter().map(|a| round(a.to_degrees())).collect()),
        tile_census: census,
    })
}

fn point_cloud(pattern: &Pattern) -> Polyhedron {
    Polyhedron {
        vertices: pattern
            .points
            .iter()
            .map(|p| [p.par[0], p.par[1], p.par.get(2).copied().unwrap_or(0.0)])
            .collect(),
        faces: Vec::new(),
    }
}

fn write_pattern(
    cfg: &RunConfig,
    stdout: &mut dyn Write,
    pattern: &Pattern,
    frame: &Frame,
    window: &crate::cut_project::Window,
    picture: Format,
) -> Result<(), CliError> {
    let render = |f: Format| -> Result<String, CliError> {
        match f {
            Format::Csv => Ok(pattern_csv(pattern)),
            Format::Json => Ok(patch_meta(pattern, frame, window)),
            Format::Svg if picture == Format::Svg => Ok(pattern_svg(pattern)?),
            Format::Off if picture == Format::Off => Ok(off(&point_cloud(pattern))),
            other => Err(usage(format!(
                "{}D patch output cannot be {}",
                pattern.par_dimension(),
                other.ext()
            ))),
        }
    };
    match &cfg.out {
        Some(dir) => {
            ensure_dir(dir)?;
            for f in [Format::Csv, Format::Json, picture] {
                write_file(&dir.join(format!("patch.{}", f.ext())), &render(f)?)?;
            }
            Ok(())
        }
        None => emit(stdout, &render(cfg.format.unwrap_or(Format::Csv))?),
    }
}

fn cmd_patch(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let n = cfg.require_rank()?;
    let mut pc = PatchConfig::new(n, cfg.radius.unwrap_or(8.0));
    if let Some(f) = cfg.frame {
        pc.frame = f;
    }
    if let Some(w) = cfg.window {
        pc.window = w;
    }
    if let Some(s) = &cfg.shift {
        pc.shift = s.clone();
    }
    pc.budget = cfg.budget;
    let frame = pc.frame().map_err(|e| usage(e.to_string()))?;
    if frame.par_indices().len() != 2 {
        return Err(usage(format!(
            "frame {} is not planar for rank {n}; use icosa-patch",
            pc.frame
        )));
    }
    let window = pc.build_window(&frame).map_err(|e| usage(e.to_string()))?;
    let pattern = crate::cut_project::generate_patch(&frame, &window, pc.radius, pc.budget)?;
    write_pattern(cfg, stdout, &pattern, &frame, &window, Format::Svg)
}

fn cmd_icosa_patch(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    if cfg.rank.is_some_and(|n| n != 6) {
        return Err(usage("icosa-patch is defined for rank 6 only"));
    }
    if cfg.frame.is_some_and(|f| f != FrameKind::H3) {
        return Err(usage("icosa-patch uses the h3 frame"));
    }
    let shift = cfg.shift.clone().unwrap_or(ShiftSpec::Zero);
    let (frame, _) = b6_h3_frame();
    let mode = cfg.window.unwrap_or(WindowMode::Hull);
    let window = crate::cut_project::Window::build(&frame, mode, &shift.vector(6).map_err(|e| usage(e.to_string()))?)?;
    let radius = cfg.radius.unwrap_or(3.0);
    let pattern = if mode == WindowMode::Hull {
        generate_icosahedral_patch(radius, &shift, cfg.budget)?
    } else {
        crate::cut_project::generate_patch(&frame, &window, radius, cfg.budget)?
    };
    write_pattern(cfg, stdout, &pattern, &frame, &window, Format::Off)
}

fn cmd_check(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let report = run_checks();
    let body = to_json(&report);
    match &cfg.out {
        Some(path) => write_file(path, &body)?,
        None => emit(stdout, &body)?,
    }
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(failed.join(", ")))
    }
}

/// Execute a resolved configuration.
pub fn execute(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cfg.command {
        Command::Orbit => cmd_orbit(cfg, stdout),
        Command::Solids => cmd_solids(cfg, stdout),
        Command::Patch => cmd_patch(cfg, stdout),
        Command::IcosaPatch => cmd_icosa_patch(cfg, stdout),
        Command::Check => cmd_check(cfg, stdout),
    }
}

/// Parse `args` (program name first), run, and report errors on `stderr`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = RunConfig::resolve(cli).and_then(|cfg| execute(&cfg, stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "bnq: {e}");
            if let CliError::Budget(crate::Error::BudgetExceeded { bound, .. }) = &e {
                let _ = writeln!(stderr, "bnq: reduce --radius or raise --budget (box bound {bound})");
            }
            e.exit_code()
        }
    }
}

/// Entry point used by the `bnq` binary.
pub fn main() -> ExitCode {
    let code = run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("bnq").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn weight_forms() {
        assert_eq!(parse_weight("0001").unwrap(), vec![0, 0, 0, 1]);
        assert_eq!(parse_weight("1, 0, 12").unwrap(), vec![1, 0, 12]);
        assert!(parse_weight("00x1").is_err());
        assert!(parse_weight("0,-1").is_err());
    }

    #[test]
    fn orbit_row_counts() {
        for (w, rows) in [("0001", 16), ("000001", 64), ("0000", 1), ("1000", 8)] {
            let (code, out, _) = run_args(&["orbit", "--weight", w]);
            assert_eq!(code, 0);
            assert_eq!(out.lines().count(), rows + 1, "{w}");
        }
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["orbit", "--weight", "00a1"]).0, 2);
        assert_eq!(run_args(&["orbit"]).0, 2);
        assert_eq!(run_args(&["orbit", "--weight", "0001", "--rank", "5"]).0, 2);
        assert_eq!(run_args(&["solids", "--rank", "7"]).0, 2);
        assert_eq!(run_args(&["patch"]).0, 2);
        assert_eq!(run_args(&["patch", "--rank", "4", "--radius", "-1"]).0, 2);
        assert_eq!(run_args(&["patch", "--rank", "4", "--frame", "h3"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&[]).0, 2);
    }

    #[test]
    fn budget_exit() {
        let (code, _, err) = run_args(&["patch", "--rank", "6", "--radius", "50", "--budget", "1000"]);
        assert_eq!(code, 3);
        assert!(err.contains("budget"));
    }

    #[test]
    fn help_is_success() {
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn negative_shift_vector() {
        let (code, out, _) = run_args(&[
            "patch", "--rank", "4", "--radius", "2", "--shift", "-0.1,0.2,0.3,0.05",
        ]);
        assert_eq!(code, 0, "{out}");
    }
}

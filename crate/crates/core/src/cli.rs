//! Command-line front end.
//!
//! Results go to a CSV file (one row per frequency) plus a sidecar JSON at
//! `<out>.json`. Failures print one JSON record on stderr and map to exit
//! codes 2 (parse), 3 (validation), 4 (solver), 5 (I/O).

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use faer::Mat;
use num_complex::Complex64 as c64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{read_cross_section, CrossSection, GeometryError};
use crate::green::{assemble_green, cache_key, read_cache, write_cache, GreenError, GreenMatrix};
use crate::oracles::{two_wire_hf, two_wire_wide, OracleError, TwoWireSpec};
use crate::solver::{
    polar_grid, reduce_grounded, reference_reduce, sequence_impedances, sweep_with_green, DensityField,
    FrequencyGrid, Orders, PulResult, SolveError, SolveSettings,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Partial,
    Loop,
    GroundedReduce,
    Sequence,
    DensityMap,
    OracleTwoWire,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Units {
    Si,
    PerKm,
}

impl Units {
    fn scale(self) -> f64 {
        match self {
            Units::Si => 1.0,
            Units::PerKm => 1e3,
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "pulcalc", version, about = "Per-unit-length R and L of round-conductor systems")]
pub struct Args {
    /// Cross-section JSON file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "partial")]
    pub mode: Mode,
    /// Lowest frequency of a log grid [Hz].
    #[arg(long, requires_all = ["fmax", "ppd"], conflicts_with = "freqs")]
    pub fmin: Option<f64>,
    #[arg(long, requires = "fmin")]
    pub fmax: Option<f64>,
    /// Points per decade of the log grid.
    #[arg(long, requires = "fmin")]
    pub ppd: Option<usize>,
    /// Explicit comma-separated frequencies [Hz]; `--freqs=` gives an empty grid.
    #[arg(long, value_parser = parse_freqs)]
    pub freqs: Option<FreqList>,
    /// Truncation order for every conductor.
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    /// JSON file with per-conductor orders: an array in file order, or an
    /// object mapping conductor id to order (others use --order).
    #[arg(long)]
    pub orders_file: Option<PathBuf>,
    /// Reference conductor id for loop mode.
    #[arg(long = "ref")]
    pub reference: Option<i64>,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "si")]
    pub units: Units,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Green-matrix cache file, read when it matches and written otherwise.
    #[arg(long)]
    pub cache_green: Option<PathBuf>,
    /// Density map: drive currents [A] per conductor, comma separated.
    /// Default is +1 A on the first conductor and -1 A on the second.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub drive: Option<Vec<f64>>,
    /// Density map: radial samples per conductor.
    #[arg(long, default_value_t = 10)]
    pub rings: usize,
    /// Density map: angular samples per ring.
    #[arg(long, default_value_t = 36)]
    pub sectors: usize,
}

/// Parsed `--freqs` value.
#[derive(Debug, Clone, PartialEq)]
pub struct FreqList(pub Vec<f64>);

fn parse_freqs(s: &str) -> Result<FreqList, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(FreqList)
}

/// Validated run description, echoed into the sidecar JSON.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub input: PathBuf,
    pub mode: Mode,
    pub frequencies: Vec<f64>,
    pub orders: Vec<usize>,
    pub reference: Option<i64>,
    pub out: PathBuf,
    pub units: Units,
    pub cache_green: Option<PathBuf>,
    pub drive: Vec<f64>,
    pub rings: usize,
    pub sectors: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Solver(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Solver(_) => 4,
            CliError::Io(_) => 5,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Validation(_) => "validation",
            CliError::Solver(_) => "solver",
            CliError::Io(_) => "io",
        }
    }

    /// One-line JSON error record.
    pub fn record(&self) -> String {
        serde_json::json!({
            "error": self.kind(),
            "exit_code": self.exit_code(),
            "message": self.to_string(),
        })
        .to_string()
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Parse { .. } | GeometryError::Unit(_) => CliError::Parse(e.to_string()),
            GeometryError::Io(_) => CliError::Io(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Settings(_) | SolveError::Geometry(_) => CliError::Validation(e.to_string()),
            _ => CliError::Solver(e.to_string()),
        }
    }
}

impl From<GreenError> for CliError {
    fn from(e: GreenError) -> Self {
        match e {
            GreenError::Io(_) | GreenError::Cache(_) => CliError::Io(e.to_string()),
            _ => CliError::Solver(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::InvalidSpec(_) => CliError::Validation(e.to_string()),
            _ => CliError::Solver(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OrdersFile {
    List(Vec<usize>),
    ById(BTreeMap<String, usize>),
}

fn load_orders(path: &Path, cs: &CrossSection, default: usize) -> Result<Vec<usize>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let parsed: OrdersFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column())))?;
    match parsed {
        OrdersFile::List(v) if v.len() == cs.len() => Ok(v),
        OrdersFile::List(v) => Err(CliError::Validation(format!(
            "orders file lists {} orders for {} conductors",
            v.len(),
            cs.len()
        ))),
        OrdersFile::ById(map) => {
            let mut out = vec![default; cs.len()];
            for (key, order) in map {
                let id: i64 = key
                    .parse()
                    .map_err(|_| CliError::Parse(format!("orders file: {key:?} is not a conductor id")))?;
                out[cs.index_of(id)?] = order;
            }
            Ok(out)
        }
    }
}

impl RunConfig {
    /// Checks mode-specific requirements against the loaded cross-section.
    pub fn from_args(args: &Args, cs: &CrossSection) -> Result<Self, CliError> {
        let grid = match (&args.freqs, args.fmin) {
            (Some(f), _) => FrequencyGrid::Explicit(f.0.clone()),
            (None, Some(f_min)) => FrequencyGrid::LogPerDecade {
                f_min,
                f_max: args.fmax.unwrap_or(f_min),
                per_decade: args.ppd.unwrap_or(10),
            },
            (None, None) => FrequencyGrid::Explicit(vec![]),
        };
        let frequencies = grid.frequencies().map_err(CliError::from)?;
        let orders = match &args.orders_file {
            Some(path) => load_orders(path, cs, args.order)?,
            None => vec![args.order; cs.len()],
        };
        match args.mode {
            Mode::Loop => {
                let id = args
                    .reference
                    .ok_or_else(|| CliError::Validation("loop mode requires --ref <conductor id>".into()))?;
                cs.index_of(id)?;
                if cs.len() < 2 {
                    return Err(CliError::Validation("loop mode needs at least two conductors".into()));
                }
            }
            Mode::Sequence => {
                let kept = cs.indices_with(crate::geometry::Connection::Kept).len();
                if kept != 3 {
                    return Err(CliError::Validation(format!(
                        "sequence mode needs exactly 3 kept conductors, found {kept}"
                    )));
                }
            }
            Mode::OracleTwoWire => {
                two_wire_spec(cs, 1.0)?;
            }
            _ => {}
        }
        let drive = match (&args.drive, args.mode) {
            (Some(d), _) => d.clone(),
            (None, Mode::DensityMap) => (0..cs.len())
                .map(|i| match i {
                    0 => 1.0,
                    1 => -1.0,
                    _ => 0.0,
                })
                .collect(),
            (None, _) => vec![],
        };
        if args.mode == Mode::DensityMap && drive.len() != cs.len() {
            return Err(CliError::Validation(format!(
                "--drive lists {} currents for {} conductors",
                drive.len(),
                cs.len()
            )));
        }
        if args.mode == Mode::DensityMap && (args.rings == 0 || args.sectors == 0) {
            return Err(CliError::Validation("--rings and --sectors must be positive".into()));
        }
        Ok(Self {
            input: args.input.clone(),
            mode: args.mode,
            frequencies,
            orders,
            reference: args.reference,
            out: args.out.clone(),
            units: args.units,
            cache_green: args.cache_green.clone(),
            drive,
            rings: args.rings,
            sectors: args.sectors,
        })
    }
}

fn two_wire_spec(cs: &CrossSection, frequency: f64) -> Result<TwoWireSpec, CliError> {
    let [a, b] = cs.conductors.as_slice() else {
        return Err(CliError::Validation(format!(
            "oracle-two-wire needs exactly two conductors, found {}",
            cs.len()
        )));
    };
    let same = a.radius == b.radius && a.conductivity == b.conductivity && a.rel_permeability == b.rel_permeability;
    if !same {
        return Err(CliError::Validation(
            "oracle-two-wire needs two identical wires (radius, sigma, mu_r)".into(),
        ));
    }
    Ok(TwoWireSpec {
        radius: a.radius,
        separation: (a.center_x - b.center_x).hypot(a.center_y - b.center_y),
        conductivity: a.conductivity,
        rel_permeability: a.rel_permeability,
        frequency,
    })
}

#[derive(Serialize)]
struct Sidecar<'a> {
    tool: &'static str,
    version: &'static str,
    config: &'a RunConfig,
    geometry_hash: String,
    columns: &'a [String],
    /// Row/column conductor ids of the reported matrices.
    conductor_ids: Vec<i64>,
    condition_estimates: Vec<f64>,
}

/// Values printed with 17 significant digits so the CSV round-trips exactly.
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn matrix_columns(prefix: &str, ids: &[i64]) -> Vec<String> {
    let mut out = Vec::with_capacity(ids.len() * ids.len());
    for i in ids {
        for j in ids {
            out.push(format!("{prefix}_{i}_{j}"));
        }
    }
    out
}

struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
    ids: Vec<i64>,
    conditions: Vec<f64>,
}

fn rl_row(frequency: f64, z: &Mat<c64>, scale: f64) -> Vec<f64> {
    let w = 2.0 * PI * frequency;
    let n = z.nrows();
    let mut row = Vec::with_capacity(1 + 2 * n * n);
    row.push(frequency);
    for i in 0..n {
        for j in 0..n {
            row.push(z[(i, j)].re * scale);
        }
    }
    for i in 0..n {
        for j in 0..n {
            row.push(z[(i, j)].im / w * scale);
        }
    }
    row
}

fn green_for(cs: &CrossSection, config: &RunConfig) -> Result<GreenMatrix, CliError> {
    let layout = Orders::PerConductor(config.orders.clone()).layout(cs)?;
    let Some(path) = &config.cache_green else {
        return Ok(assemble_green(cs, &layout)?);
    };
    let key = cache_key(cs, &layout);
    if path.exists() {
        match read_cache(path, &layout, &key, &cs.geometry_hash()) {
            Ok(Some(g)) => {
                log::info!("Green matrix loaded from {}", path.display());
                return Ok(g);
            }
            Ok(None) => log::info!("cache {} is stale, rebuilding", path.display()),
            Err(e) => log::warn!("ignoring unreadable cache {}: {e}", path.display()),
        }
    }
    let g = assemble_green(cs, &layout)?;
    write_cache(path, &g, &key)?;
    Ok(g)
}

fn solve_table(cs: &CrossSection, config: &RunConfig) -> Result<Table, CliError> {
    let scale = config.units.scale();
    let ids_all: Vec<i64> = cs.conductors.iter().map(|c| c.id).collect();
    let settings = SolveSettings {
        orders: Orders::PerConductor(config.orders.clone()),
        grid: FrequencyGrid::Explicit(config.frequencies.clone()),
    };
    let results: Vec<PulResult> = if config.frequencies.is_empty() {
        vec![]
    } else {
        let green = green_for(cs, config)?;
        sweep_with_green(cs, &settings, &config.frequencies, &green)?.results
    };
    let conditions = results.iter().map(|r| r.condition).collect();
    let table = match config.mode {
        Mode::Partial => Table {
            columns: [vec!["f_hz".to_string()], matrix_columns("R", &ids_all), matrix_columns("L", &ids_all)].concat(),
            rows: results.iter().map(|r| rl_row(r.frequency, &r.impedance(), scale)).collect(),
            ids: ids_all,
            conditions,
        },
        Mode::Loop => {
            let reference = cs.index_of(config.reference.expect("checked in from_args"))?;
            let ids: Vec<i64> = ids_all
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != reference)
                .map(|(_, &id)| id)
                .collect();
            let rows = results
                .iter()
                .map(|r| Ok(rl_row(r.frequency, &reference_reduce(&r.impedance(), reference)?, scale)))
                .collect::<Result<_, SolveError>>()?;
            Table {
                columns: [vec!["f_hz".to_string()], matrix_columns("R", &ids), matrix_columns("L", &ids)].concat(),
                rows,
                ids,
                conditions,
            }
        }
        Mode::GroundedReduce => {
            let kept = cs.indices_with(crate::geometry::Connection::Kept);
            let ids: Vec<i64> = kept.iter().map(|&i| ids_all[i]).collect();
            let rows = results
                .iter()
                .map(|r| Ok(rl_row(r.frequency, &reduce_grounded(&r.impedance(), cs)?.z, scale)))
                .collect::<Result<_, SolveError>>()?;
            Table {
                columns: [vec!["f_hz".to_string()], matrix_columns("R", &ids), matrix_columns("L", &ids)].concat(),
                rows,
                ids,
                conditions,
            }
        }
        Mode::Sequence => {
            let kept = cs.indices_with(crate::geometry::Connection::Kept);
            let rows = results
                .iter()
                .map(|r| {
                    let red = reduce_grounded(&r.impedance(), cs)?;
                    let (zp, z0) = sequence_impedances(&red.z)?;
                    Ok(vec![
                        r.frequency,
                        zp.re * scale,
                        zp.im * scale,
                        z0.re * scale,
                        z0.im * scale,
                    ])
                })
                .collect::<Result<_, SolveError>>()?;
            Table {
                columns: ["f_hz", "R_plus", "X_plus", "R_zero", "X_zero"].map(String::from).to_vec(),
                rows,
                ids: kept.iter().map(|&i| ids_all[i]).collect(),
                conditions,
            }
        }
        Mode::DensityMap | Mode::OracleTwoWire => unreachable!("handled separately"),
    };
    Ok(table)
}

fn density_table(cs: &CrossSection, config: &RunConfig) -> Result<Table, CliError> {
    let layout = Orders::PerConductor(config.orders.clone()).layout(cs)?;
    let drive: Vec<c64> = config.drive.iter().map(|&d| c64::new(d, 0.0)).collect();
    let mut rows = Vec::new();
    let mut conditions = Vec::new();
    if !config.frequencies.is_empty() {
        let green = green_for(cs, config)?;
        for &f in &config.frequencies {
            let field: DensityField = crate::solver::density_field(cs, &layout, 2.0 * PI * f, &green, &drive)
                .map_err(|e| SolveError::AtFrequency {
                    frequency: f,
                    source: Box::new(e),
                })?;
            conditions.push(field.condition);
            for p in 0..cs.len() {
                if cs.conductors[p].conductivity == 0.0 {
                    continue;
                }
                for (x, y) in polar_grid(cs, p, config.rings, config.sectors) {
                    let j = field.at(x, y)?;
                    rows.push(vec![f, cs.conductors[p].id as f64, x, y, j.norm(), j.arg()]);
                }
            }
        }
    }
    Ok(Table {
        columns: ["f_hz", "conductor", "x_m", "y_m", "abs_j", "arg_j"].map(String::from).to_vec(),
        rows,
        ids: cs.conductors.iter().map(|c| c.id).collect(),
        conditions,
    })
}

fn oracle_table(cs: &CrossSection, config: &RunConfig) -> Result<Table, CliError> {
    let scale = config.units.scale();
    let mut rows = Vec::with_capacity(config.frequencies.len());
    for &f in &config.frequencies {
        let spec = two_wire_spec(cs, f)?;
        let (r_hf, l_hf) = two_wire_hf(&spec)?;
        let z = two_wire_wide(&spec)?;
        let w = 2.0 * PI * f;
        rows.push(vec![f, r_hf * scale, l_hf * scale, z.re * scale, z.im / w * scale]);
    }
    Ok(Table {
        columns: ["f_hz", "R_hf", "L_hf", "R_wide", "L_wide"].map(String::from).to_vec(),
        rows,
        ids: cs.conductors.iter().map(|c| c.id).collect(),
        conditions: vec![],
    })
}

fn write_outputs(cs: &CrossSection, config: &RunConfig, table: &Table) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", config.out.display()));
    let mut w = csv::Writer::from_path(&config.out).map_err(|e| CliError::Io(format!("{}: {e}", config.out.display())))?;
    w.write_record(&table.columns)?;
    for row in &table.rows {
        if config.mode == Mode::DensityMap {
            // conductor ids are integers
            let mut rec: Vec<String> = row.iter().map(|&v| fmt(v)).collect();
            rec[1] = (row[1] as i64).to_string();
            w.write_record(&rec)?;
        } else {
            w.write_record(row.iter().map(|&v| fmt(v)))?;
        }
    }
    w.flush().map_err(io)?;
    let sidecar = Sidecar {
        tool: "pulcalc",
        version: env!("CARGO_PKG_VERSION"),
        config,
        geometry_hash: cs.geometry_hash(),
        columns: &table.columns,
        conductor_ids: table.ids.clone(),
        condition_estimates: table.conditions.clone(),
    };
    let path = sidecar_path(&config.out);
    let mut f = std::fs::File::create(&path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let text = serde_json::to_string_pretty(&sidecar).expect("serializable");
    f.write_all(text.as_bytes()).map_err(io)?;
    f.write_all(b"\n").map_err(io)?;
    Ok(())
}

/// `<out>.json`.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

/// Loads, validates and solves; writes the CSV and its sidecar.
pub fn run(args: &Args) -> Result<RunConfig, CliError> {
    let cs = read_cross_section(&args.input).map_err(|e| match e {
        GeometryError::Io(io) => CliError::Io(format!("{}: {io}", args.input.display())),
        other => CliError::from(other),
    })?;
    let violations = cs.validate();
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Validation(list.join("; ")));
    }
    let config = RunConfig::from_args(args, &cs)?;
    let table = match config.mode {
        Mode::DensityMap => density_table(&cs, &config)?,
        Mode::OracleTwoWire => oracle_table(&cs, &config)?,
        _ => solve_table(&cs, &config)?,
    };
    write_outputs(&cs, &config, &table)?;
    Ok(config)
}

/// Entry point shared by the binary: parses `argv`, runs, returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let err = CliError::Parse(e.to_string().trim().to_string());
            eprintln!("{}", err.record());
            return err.exit_code();
        }
    };
    if let Some(n) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::warn!("thread pool already initialised: {e}");
        }
    }
    match run(&args) {
        Ok(_) => 0,
        Err(e) => {
            eprintln!("{}", e.record());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_are_distinct() {
        let codes = [
            CliError::Parse(String::new()).exit_code(),
            CliError::Validation(String::new()).exit_code(),
            CliError::Solver(String::new()).exit_code(),
            CliError::Io(String::new()).exit_code(),
        ];
        assert_eq!(codes, [2, 3, 4, 5]);
        let rec: serde_json::Value = serde_json::from_str(&CliError::Solver("x".into()).record()).unwrap();
        assert_eq!(rec["error"], "solver");
        assert_eq!(rec["exit_code"], 4);
    }

    #[test]
    fn printed_values_round_trip() {
        for v in [0.1, 1.0 / 3.0, 8.48e-3, -2.5e-9, 1e6] {
            assert_eq!(fmt(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(matrix_columns("R", &[4, 7]), vec!["R_4_4", "R_4_7", "R_7_4", "R_7_7"]);
        assert_eq!(sidecar_path(Path::new("a/b.csv")), PathBuf::from("a/b.csv.json"));
    }
}

//! Susceptibility-data ingestion and entanglement-series production.
//!
//! Input files are UTF-8 CSV with a header row naming the columns
//! `T_K` (temperature, Kelvin) and `chi` (susceptibility); extra
//! columns are ignored and lines starting with `#` are skipped. Raw
//! susceptibility is either already reduced (dimensionless
//! χ̂ = χ·k_B·T/(gμ_B)²) or converted with a user-supplied scale and
//! g-factor. Rows are sorted by temperature and duplicate temperatures
//! averaged, as measured sweeps commonly produce.

use crate::render::sig9;
use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use thiserror::Error;
use trimer_core::{measure_from_chi, van_vleck_chi_reduced, EntanglementPoint, TrimerModel};

/// Boltzmann constant, J/K.
pub const BOLTZMANN_KB: f64 = 1.380_649e-23;
/// Bohr magneton, J/T.
pub const BOHR_MAGNETON: f64 = 9.274_010_078_3e-24;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },
    #[error("missing required column '{0}' in CSV header")]
    MissingColumn(&'static str),
    #[error("line {line}: {msg}")]
    Parse { line: u64, msg: String },
    #[error("line {line}: non-positive temperature {value} K")]
    NonPositiveTemperature { line: u64, value: f64 },
    #[error("line {line}: negative reduced susceptibility {value}")]
    NegativeChi { line: u64, value: f64 },
    #[error("invalid series point (T = {temperature} K, chi = {chi_reduced}): {reason}")]
    InvalidPoint { temperature: f64, chi_reduced: f64, reason: &'static str },
    #[error("series contains no points")]
    EmptySeries,
    #[error("need at least 2 points to estimate a decoherence temperature, got {0}")]
    TooFewPoints(usize),
    #[error("temperatures not strictly increasing at index {0}")]
    Unordered(usize),
    #[error(transparent)]
    Core(#[from] trimer_core::CoreError),
}

impl PipelineError {
    /// Process exit code category: 4 for I/O, 3 for data.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Read { .. } | PipelineError::Write { .. } => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, PipelineError>;

/// Where a series came from, carried into output metadata.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesSource {
    /// Generated from the Van Vleck closed form.
    Synthetic { j_over_kb: f64 },
    /// Loaded from a file.
    File(String),
}

impl std::fmt::Display for SeriesSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesSource::Synthetic { j_over_kb } => {
                write!(f, "synthetic van-vleck j_over_kb_K={}", sig9(*j_over_kb))
            }
            SeriesSource::File(path) => write!(f, "file {path}"),
        }
    }
}

/// One (temperature, reduced susceptibility) sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiPoint {
    pub temperature: f64,
    pub chi_reduced: f64,
}

/// Ordered susceptibility-versus-temperature series.
#[derive(Debug, Clone)]
pub struct SusceptibilitySeries {
    points: Vec<ChiPoint>,
    source: SeriesSource,
}

impl SusceptibilitySeries {
    /// Normalize raw points: validate, sort by temperature, average
    /// duplicates. Input order is irrelevant.
    pub fn from_points(points: Vec<ChiPoint>, source: SeriesSource) -> Result<Self> {
        for p in &points {
            if p.temperature.is_nan() || p.temperature <= 0.0 {
                return Err(PipelineError::InvalidPoint {
                    temperature: p.temperature,
                    chi_reduced: p.chi_reduced,
                    reason: "temperature must be > 0 K",
                });
            }
            if p.chi_reduced.is_nan() || p.chi_reduced < 0.0 {
                return Err(PipelineError::InvalidPoint {
                    temperature: p.temperature,
                    chi_reduced: p.chi_reduced,
                    reason: "reduced susceptibility must be >= 0",
                });
            }
        }
        let mut points = points;
        points.sort_by(|a, b| a.temperature.partial_cmp(&b.temperature).unwrap());
        let mut merged: Vec<ChiPoint> = Vec::with_capacity(points.len());
        let mut run = 0usize;
        for p in points {
            match merged.last_mut() {
                Some(last) if last.temperature == p.temperature => {
                    run += 1;
                    // Running mean keeps averaging exact for any count.
                    last.chi_reduced += (p.chi_reduced - last.chi_reduced) / (run + 1) as f64;
                }
                _ => {
                    run = 0;
                    merged.push(p);
                }
            }
        }
        Ok(SusceptibilitySeries { points: merged, source })
    }

    pub fn points(&self) -> &[ChiPoint] {
        &self.points
    }

    pub fn source(&self) -> &SeriesSource {
        &self.source
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// How raw susceptibility values are interpreted on load.
#[derive(Debug, Clone, Copy)]
pub struct ChiLoadOptions {
    /// Raw values are already reduced; no conversion applied.
    pub reduced: bool,
    /// Multiplicative scale bringing raw values to SI before reduction.
    pub chi_scale: f64,
    /// g-factor used in the reduction.
    pub g_factor: f64,
}

impl Default for ChiLoadOptions {
    fn default() -> Self {
        ChiLoadOptions { reduced: true, chi_scale: 1.0, g_factor: 2.0 }
    }
}

/// Load a susceptibility CSV file into a normalized series.
pub fn load_chi_series(path: &Path, opts: ChiLoadOptions) -> Result<SusceptibilitySeries> {
    let file = File::open(path).map_err(|source| PipelineError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(file);

    let headers = reader.headers().map_err(csv_error)?.clone();
    let t_col = headers
        .iter()
        .position(|h| h == "T_K")
        .ok_or(PipelineError::MissingColumn("T_K"))?;
    let chi_col = headers
        .iter()
        .position(|h| h == "chi")
        .ok_or(PipelineError::MissingColumn("chi"))?;

    let mut points = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let temperature = parse_field(&record, t_col, "T_K", line)?;
        let raw_chi = parse_field(&record, chi_col, "chi", line)?;
        if temperature.is_nan() || temperature <= 0.0 {
            return Err(PipelineError::NonPositiveTemperature { line, value: temperature });
        }
        let chi_reduced = if opts.reduced {
            raw_chi
        } else {
            raw_chi * opts.chi_scale * BOLTZMANN_KB * temperature
                / (opts.g_factor * BOHR_MAGNETON).powi(2)
        };
        if chi_reduced.is_nan() || chi_reduced < 0.0 {
            return Err(PipelineError::NegativeChi { line, value: chi_reduced });
        }
        points.push(ChiPoint { temperature, chi_reduced });
    }
    SusceptibilitySeries::from_points(points, SeriesSource::File(path.display().to_string()))
}

fn parse_field(record: &csv::StringRecord, col: usize, name: &str, line: u64) -> Result<f64> {
    let field = record.get(col).ok_or(PipelineError::Parse {
        line,
        msg: format!("row has no column '{name}'"),
    })?;
    field.parse::<f64>().map_err(|_| PipelineError::Parse {
        line,
        msg: format!("cannot parse '{field}' as a number in column '{name}'"),
    })
}

fn csv_error(e: csv::Error) -> PipelineError {
    let line = match e.position() {
        Some(p) => p.line(),
        None => 0,
    };
    PipelineError::Parse { line, msg: e.to_string() }
}

/// Apply the susceptibility → measure map pointwise.
pub fn entanglement_series(series: &SusceptibilitySeries) -> Result<Vec<EntanglementPoint>> {
    if series.is_empty() {
        return Err(PipelineError::EmptySeries);
    }
    series
        .points()
        .iter()
        .map(|p| Ok(EntanglementPoint::new(p.temperature, measure_from_chi(p.chi_reduced)?)))
        .collect()
}

/// Estimate the decoherence temperature from an entanglement series:
/// the measure is linearly interpolated to zero between the last
/// entangled point and the first separable point after it. `None` when
/// the series never reaches zero, or never leaves it.
pub fn estimate_tc_from_data(points: &[EntanglementPoint]) -> Result<Option<f64>> {
    if points.len() < 2 {
        return Err(PipelineError::TooFewPoints(points.len()));
    }
    for (k, pair) in points.windows(2).enumerate() {
        if pair[1].temperature <= pair[0].temperature {
            return Err(PipelineError::Unordered(k + 1));
        }
    }
    let last_positive = match points.iter().rposition(|p| p.measure > 0.0) {
        Some(k) => k,
        None => return Ok(None), // zero everywhere
    };
    if last_positive + 1 >= points.len() {
        return Ok(None); // still entangled at the top of the range
    }
    let a = &points[last_positive];
    let b = &points[last_positive + 1];
    Ok(Some(
        a.temperature + a.measure * (b.temperature - a.temperature) / (a.measure - b.measure),
    ))
}

/// Synthesize a Van Vleck susceptibility series on a linear grid.
pub fn synthetic_van_vleck_series(
    model: &TrimerModel,
    t_min: f64,
    t_max: f64,
    steps: usize,
) -> Result<SusceptibilitySeries> {
    let points = linear_grid(t_min, t_max, steps)
        .into_iter()
        .map(|t| {
            Ok(ChiPoint { temperature: t, chi_reduced: van_vleck_chi_reduced(model, t)? })
        })
        .collect::<Result<Vec<_>>>()?;
    SusceptibilitySeries::from_points(
        points,
        SeriesSource::Synthetic { j_over_kb: model.j_over_kb() },
    )
}

/// Inclusive linear grid with `steps` points (callers enforce
/// steps ≥ 2 and t_max > t_min).
pub fn linear_grid(t_min: f64, t_max: f64, steps: usize) -> Vec<f64> {
    let dt = (t_max - t_min) / (steps - 1) as f64;
    (0..steps)
        .map(|k| if k + 1 == steps { t_max } else { t_min + k as f64 * dt })
        .collect()
}

/// Serializable record mirroring the output CSV columns.
#[derive(Debug, Serialize, Deserialize)]
pub struct EntanglementRecord {
    #[serde(rename = "temperature_K")]
    pub temperature_k: f64,
    pub measure: f64,
    pub entangled: bool,
}

impl From<&EntanglementPoint> for EntanglementRecord {
    fn from(p: &EntanglementPoint) -> Self {
        EntanglementRecord {
            temperature_k: sig9(p.temperature),
            measure: sig9(p.measure),
            entangled: p.entangled,
        }
    }
}

/// Output serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Write an entanglement series as `temperature_K,measure,entangled`
/// CSV rows (numbers at 9 significant digits).
pub fn write_entanglement_csv(points: &[EntanglementPoint], w: &mut impl Write) -> io::Result<()> {
    writeln!(w, "temperature_K,measure,entangled")?;
    for p in points {
        writeln!(w, "{},{},{}", sig9(p.temperature), sig9(p.measure), p.entangled)?;
    }
    Ok(())
}

/// Write an entanglement series as a JSON array of records.
pub fn write_entanglement_json(points: &[EntanglementPoint], w: &mut impl Write) -> io::Result<()> {
    let records: Vec<EntanglementRecord> = points.iter().map(EntanglementRecord::from).collect();
    serde_json::to_writer_pretty(&mut *w, &records)?;
    writeln!(w)
}

/// Write an entanglement series to `path` in the chosen format.
pub fn export_series(
    points: &[EntanglementPoint],
    path: &Path,
    format: OutputFormat,
) -> Result<()> {
    let to_write_err = |source| PipelineError::Write { path: path.display().to_string(), source };
    let mut file = File::create(path).map_err(to_write_err)?;
    match format {
        OutputFormat::Csv => write_entanglement_csv(points, &mut file),
        OutputFormat::Json => write_entanglement_json(points, &mut file),
    }
    .map_err(to_write_err)
}

/// Write a susceptibility series as `T_K,chi` CSV (with a source
/// comment), the same schema [`load_chi_series`] ingests. Values keep
/// full round-trip precision so a load-after-write is bit-exact.
pub fn write_chi_csv(series: &SusceptibilitySeries, w: &mut impl Write) -> io::Result<()> {
    writeln!(w, "# source = {}", series.source())?;
    writeln!(w, "T_K,chi")?;
    for p in series.points() {
        writeln!(w, "{},{}", p.temperature, p.chi_reduced)?;
    }
    Ok(())
}

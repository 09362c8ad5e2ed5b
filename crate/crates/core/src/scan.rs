//! Angle scans over `(0, pi/2]` and their CSV/JSON serialization.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::amplitudes::{
    normalize, AmplitudeProvider, Angle, ConstantAmplitudes, Coulomb, NormalizedAmplitudePair,
};
use crate::bell::{self, BellGeometry};
use crate::entanglement::entropy_of_state;
use crate::error::{Error, Result};
use crate::spin_states::{
    outgoing_state, slater_decomposition, slater_rank, ExchangeStatistics, DEFAULT_RANK_EPS,
};

pub const CSV_HEADER: &str = "theta,f_plus,f_minus,entropy,F,violated,slater_rank";
pub const DEFAULT_THETA_MIN: f64 = 0.01;
pub const DEFAULT_STEPS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Interaction {
    Coulomb,
    /// Angle-independent `f_plus`, with `f_minus = sqrt(1 - f_plus^2)`.
    Constant(f64),
}

impl Interaction {
    pub fn provider(&self) -> Result<Box<dyn AmplitudeProvider + Send + Sync>> {
        Ok(match *self {
            Self::Coulomb => Box::new(Coulomb::default()),
            Self::Constant(f_plus) => Box::new(ConstantAmplitudes::from_f_plus(f_plus)?),
        })
    }
}

impl FromStr for Interaction {
    type Err = Error;

    /// Accepts `coulomb` or `constant:<f_plus>`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "coulomb" {
            return Ok(Self::Coulomb);
        }
        if let Some(value) = lower.strip_prefix("constant:") {
            let f_plus: f64 = value
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad constant amplitude '{value}'")))?;
            ConstantAmplitudes::from_f_plus(f_plus)?;
            return Ok(Self::Constant(f_plus));
        }
        Err(Error::InvalidConfig(format!(
            "unknown interaction '{s}' (expected 'coulomb' or 'constant:<f_plus>')"
        )))
    }
}

impl fmt::Display for Interaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Coulomb => write!(f, "coulomb"),
            Self::Constant(v) => write!(f, "constant:{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidConfig(format!("unknown format '{other}'"))),
        }
    }
}

/// One sampled scattering angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub theta: f64,
    pub f_plus: f64,
    pub f_minus: f64,
    pub entropy: f64,
    #[serde(rename = "F")]
    pub f: f64,
    pub violated: bool,
    pub slater_rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub theta_min: f64,
    pub theta_max: f64,
    pub steps: usize,
    pub interaction: Interaction,
    pub statistics: ExchangeStatistics,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            theta_min: DEFAULT_THETA_MIN,
            theta_max: FRAC_PI_2,
            steps: DEFAULT_STEPS,
            interaction: Interaction::Coulomb,
            statistics: ExchangeStatistics::Fermion,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.theta_min > 0.0 && self.theta_min < self.theta_max && self.theta_max <= FRAC_PI_2)
        {
            return Err(Error::InvalidConfig(format!(
                "need 0 < theta_min < theta_max <= pi/2, got [{}, {}]",
                self.theta_min, self.theta_max
            )));
        }
        if self.steps < 2 {
            return Err(Error::InvalidConfig(format!(
                "steps must be at least 2, got {}",
                self.steps
            )));
        }
        Ok(())
    }

    /// Evenly spaced angles including both endpoints.
    pub fn thetas(&self) -> Vec<f64> {
        let span = self.theta_max - self.theta_min;
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.theta_max
                } else {
                    self.theta_min + span * i as f64 / last as f64
                }
            })
            .collect()
    }
}

/// `1 + E(b, c)` in the standard geometry. Fermions use the closed form;
/// bosons flip the exchange sign, which the closed form does not cover, so
/// they go through the operator expectation.
fn bell_value(amps: &NormalizedAmplitudePair, stats: ExchangeStatistics) -> Result<f64> {
    match stats {
        ExchangeStatistics::Fermion => bell::bell_f(amps),
        ExchangeStatistics::Boson => {
            let g = BellGeometry::standard();
            let state = outgoing_state(amps, stats);
            Ok(1.0 + bell::correlator_oracle(&state, &g.b_hat, &g.c_hat)?)
        }
    }
}

pub fn evaluate(
    theta: f64,
    provider: &(impl AmplitudeProvider + ?Sized),
    stats: ExchangeStatistics,
) -> Result<ScanRecord> {
    let angle = Angle::new(theta)?;
    let amps = normalize(provider.amplitudes(angle))?;
    let (f_plus, f_minus) = amps.as_real()?;
    let f = bell_value(&amps, stats)?;
    Ok(ScanRecord {
        theta,
        f_plus,
        f_minus,
        entropy: entropy_of_state(&outgoing_state(&amps, stats)),
        f,
        violated: f < 1.0 - bell::VIOLATION_MARGIN,
        slater_rank: slater_rank(&slater_decomposition(&amps), DEFAULT_RANK_EPS),
    })
}

/// Single-angle evaluation for `theta` in `(0, pi/2]`.
pub fn point(
    theta: f64,
    interaction: Interaction,
    stats: ExchangeStatistics,
) -> Result<ScanRecord> {
    if !(theta > 0.0 && theta <= FRAC_PI_2) {
        return Err(Error::InvalidConfig(format!(
            "theta {theta} must lie in (0, pi/2]"
        )));
    }
    evaluate(theta, interaction.provider()?.as_ref(), stats)
}

pub fn run_scan(config: &ScanConfig) -> Result<Vec<ScanRecord>> {
    config.validate()?;
    let provider = config.interaction.provider()?;
    config
        .thetas()
        .into_iter()
        .map(|theta| evaluate(theta, provider.as_ref(), config.statistics))
        .collect()
}

fn fixed(value: f64) -> String {
    // avoid printing "-0.000000000000"
    let s = format!("{value:.12}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

pub fn csv_row(r: &ScanRecord) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        fixed(r.theta),
        fixed(r.f_plus),
        fixed(r.f_minus),
        fixed(r.entropy),
        fixed(r.f),
        r.violated,
        r.slater_rank
    )
}

pub fn write_csv<W: Write>(records: &[ScanRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", csv_row(r))?;
    }
    Ok(())
}

pub fn write_json<W: Write>(records: &[ScanRecord], mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)
}

pub fn write_records<W: Write>(
    records: &[ScanRecord],
    format: OutputFormat,
    out: W,
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(records, out),
        OutputFormat::Json => write_json(records, out),
    }
}

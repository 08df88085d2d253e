use crate::embodiment::DEFAULT_MATERIALIZATION_CAP;
use crate::error::{Error, Result};
use crate::oracle::DEFAULT_ORACLE_CAP;

pub const ENV_ORACLE_CAP: &str = "CHROMABLEND_ORACLE_CAP";
pub const ENV_MATERIALIZATION_CAP: &str = "CHROMABLEND_MATERIALIZATION_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Dot,
}

/// Sweep ranges: ℓ in `2..=max_l`, every weight in `1..=max_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_l: usize,
    pub max_r: u32,
}

impl SweepBounds {
    pub fn new(max_l: usize, max_r: u32) -> Result<Self> {
        if max_l < 2 {
            return Err(Error::validation("sweep bound for l must be >= 2"));
        }
        if max_r < 1 {
            return Err(Error::validation("sweep bound for weights must be >= 1"));
        }
        Ok(SweepBounds { max_l, max_r })
    }

    /// Largest vertex count of any cluster in the sweep.
    pub fn max_vertices(&self) -> usize {
        self.max_l * self.max_r as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub materialization_cap: usize,
    pub oracle_vertex_cap: usize,
    pub output_format: OutputFormat,
    pub sweep: SweepBounds,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            materialization_cap: DEFAULT_MATERIALIZATION_CAP,
            oracle_vertex_cap: DEFAULT_ORACLE_CAP,
            output_format: OutputFormat::Text,
            sweep: SweepBounds { max_l: 5, max_r: 3 },
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.materialization_cap < 1 || self.oracle_vertex_cap < 1 {
            return Err(Error::validation("caps must be >= 1"));
        }
        SweepBounds::new(self.sweep.max_l, self.sweep.max_r).map(|_| ())
    }
}

//! Design files: support, weights and optional provenance of the computation.

use crate::config::ProblemSummary;
use crate::CliError;
use copula_design::DesignMeasure;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignMetadata {
    pub problem_hash: String,
    pub problem: ProblemSummary,
    pub log_det: f64,
    pub max_sensitivity: f64,
    pub certified: bool,
    pub converged: bool,
    pub cert_grid: usize,
    pub cert_tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignFile {
    pub points: Vec<f64>,
    pub weights: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<DesignMetadata>,
}

impl DesignFile {
    pub fn new(design: &DesignMeasure, metadata: Option<DesignMetadata>) -> Self {
        Self {
            points: design.points().to_vec(),
            weights: design.weights().to_vec(),
            metadata,
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(self).expect("design file serializes");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
    }

    /// The validated design measure.
    pub fn design(&self) -> Result<DesignMeasure, CliError> {
        Ok(DesignMeasure::new(self.points.clone(), self.weights.clone())?)
    }
}

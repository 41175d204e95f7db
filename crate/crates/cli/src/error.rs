use thiserror::Error;

use crtc_dessins::analysis::AnalysisError;
use crtc_dessins::combinatorics::CombinatoricsError;
use crtc_dessins::curve::CurveError;
use crtc_dessins::dessin::DessinError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {path}{}: {message}", location(.line, .column))]
    Parse {
        path: String,
        line: Option<usize>,
        column: Option<usize>,
        message: String,
    },
    #[error("invalid curve: {0}")]
    Validation(#[from] CurveError),
    #[error("{0}")]
    Dessin(#[from] DessinError),
    #[error("{0}")]
    Analysis(#[from] AnalysisError),
    #[error("{0}")]
    Combinatorics(#[from] CombinatoricsError),
    #[error("no projection centre keeps 0.1 rad from every vertex")]
    ProjectionClash,
    #[error("{0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn location(line: &Option<usize>, column: &Option<usize>) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!(" (line {l}, column {c})"),
        (Some(l), None) => format!(" (line {l})"),
        _ => String::new(),
    }
}

impl CliError {
    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Parse {
            path: path.into(),
            line: None,
            column: None,
            message: message.into(),
        }
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse_error",
            CliError::Validation(_) => "validation_error",
            CliError::Dessin(DessinError::TraceAmbiguity { .. }) => "trace_ambiguity",
            CliError::Dessin(DessinError::InvalidResolution(_)) => "invalid_resolution",
            CliError::Dessin(_) => "pipeline_error",
            CliError::Analysis(AnalysisError::NotMergeable(_)) => "not_mergeable",
            CliError::Analysis(AnalysisError::NoSameColorPair) => "no_same_color_pair",
            CliError::Analysis(_) => "pipeline_error",
            CliError::Combinatorics(CombinatoricsError::SizeGuard { .. }) => "size_guard",
            CliError::Combinatorics(_) => "invalid_argument",
            CliError::ProjectionClash => "projection_clash",
            CliError::Usage(_) => "usage_error",
            CliError::Io(_) => "io_error",
            CliError::Json(_) => "json_error",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse { .. } | CliError::Validation(_) => 3,
            _ => 1,
        }
    }
}

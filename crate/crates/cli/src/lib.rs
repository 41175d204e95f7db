//! Command-line front end: input documents, JSON reports and SVG figures.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;
pub mod svg;

pub use commands::{cmd_deform, cmd_dessin, cmd_enumerate, cmd_render, EnumerateMode, RunOptions};
pub use error::CliError;
pub use report::{DeformReport, DessinReport};
pub use spec::{parse_spec, CurveSpec};
pub use svg::{render_dessin, render_locus, RenderStyle};

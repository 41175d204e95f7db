use serde_json::{json, Value};

use crtc_dessins::analysis::{discriminant_locus, sweep_family};
use crtc_dessins::combinatorics::{
    bound_formula, count_simple, enumerate_pretypes, known_nonrealizable, realizability_known,
    simple_asymptotic,
};
use crtc_dessins::dessin::{build_dessin_with, BuildOptions, Dessin};
use crtc_dessins::RootOptions;

use crate::error::CliError;
use crate::report::{DeformReport, DessinReport};
use crate::spec::CurveSpec;
use crate::svg::{render_dessin, render_locus, RenderStyle};

pub const DEFAULT_LOCUS_TOLERANCE: f64 = 0.02;

#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    pub resolution: usize,
    pub seed: Option<u64>,
    pub tolerance: f64,
    pub style: RenderStyle,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            resolution: crtc_dessins::dessin::DEFAULT_RESOLUTION,
            seed: None,
            tolerance: DEFAULT_LOCUS_TOLERANCE,
            style: RenderStyle::default(),
        }
    }
}

impl RunOptions {
    fn build_options(&self) -> BuildOptions {
        let roots = match self.seed {
            Some(s) => RootOptions::with_seed(RootOptions::default().tol, s),
            None => RootOptions::default(),
        };
        BuildOptions {
            resolution: self.resolution,
            roots,
        }
    }
}

pub fn build(spec: &CurveSpec, opts: &RunOptions) -> Result<Dessin, CliError> {
    let c = spec.curve()?;
    Ok(build_dessin_with(&c, &opts.build_options())?)
}

pub fn cmd_dessin(
    spec: &CurveSpec,
    opts: &RunOptions,
    svg: bool,
) -> Result<(DessinReport, Option<String>), CliError> {
    let d = build(spec, opts)?;
    let picture = if svg {
        Some(render_dessin(&d, &opts.style)?)
    } else {
        None
    };
    Ok((DessinReport::of(&d), picture))
}

pub fn cmd_render(spec: &CurveSpec, opts: &RunOptions) -> Result<String, CliError> {
    render_dessin(&build(spec, opts)?, &opts.style)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerateMode {
    Bound,
    Pretypes,
    SimpleCount,
}

pub fn cmd_enumerate(n: usize, mode: EnumerateMode) -> Result<Value, CliError> {
    Ok(match mode {
        EnumerateMode::Bound => {
            let formula = bound_formula(n);
            let oracle = enumerate_pretypes(n)?.merged.len();
            json!({
                "mode": "bound",
                "n": n,
                "formula": formula,
                "oracle": oracle,
                "agree": formula == oracle as i128,
            })
        }
        EnumerateMode::Pretypes => {
            let cat = enumerate_pretypes(n)?;
            let bad = known_nonrealizable(n);
            let known = realizability_known(n);
            let rows: Vec<Value> = cat
                .merged
                .iter()
                .rev()
                .map(|t| {
                    let realizable = if bad.contains(t) {
                        Value::Bool(false)
                    } else if known {
                        Value::Bool(true)
                    } else {
                        Value::Null
                    };
                    json!({"type": t.sizes, "realizable": realizable})
                })
                .collect();
            json!({"mode": "pretypes", "n": n, "count": rows.len(), "rows": rows})
        }
        EnumerateMode::SimpleCount => {
            let count = count_simple(n)?;
            let asymptotic = simple_asymptotic(n);
            json!({
                "mode": "simple-count",
                "n": n,
                "count": count,
                "asymptotic": asymptotic,
                "ratio": count as f64 / asymptotic,
            })
        }
    })
}

pub fn cmd_deform(spec: &CurveSpec, opts: &RunOptions) -> Result<(DeformReport, String), CliError> {
    let f = spec
        .family
        .as_ref()
        .ok_or_else(|| CliError::Usage("deform needs a family block".into()))?;
    let sweep = if f.family.samples.len() >= 2 {
        sweep_family(&f.family, opts.resolution)
    } else {
        Default::default()
    };
    let locus = discriminant_locus(&f.family, &f.grid, opts.tolerance);
    let report = DeformReport::of(&f.family.param, opts.tolerance, &sweep, &locus);
    let picture = render_locus(&locus, &opts.style);
    Ok((report, picture))
}

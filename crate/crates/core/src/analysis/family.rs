//! One-parameter families of curves: sweeps with move detection and sampling
//! of the discriminant locus.
//!
//! A move happens where a critical value of `j` crosses `[0, 1]`. Between two
//! samples whose dessins differ, the parameter interval is bisected until the
//! change is pinned to a window of width `1e-6`, and the critical values there
//! decide which move it was.

use rayon::prelude::*;

use crate::algebra::{Complex, Poly, RootOptions};
use crate::combinatorics::{combinatorial_type, CombinatorialType};
use crate::curve::{make_curve, CurveError, TrigonalCurve};
use crate::dessin::paths::distance_to_g0;
use crate::dessin::{
    build_dessin_with, class_code, BuildOptions, Dessin, DessinSummary, SpherePoint,
};
use crate::jmap::{lambda_critical_points, BlackColor, JValue, LambdaCritical, WhiteColor};

use super::AnalysisError;

/// Width below which a parameter window is no longer bisected.
pub const WINDOW: f64 = 1e-6;
/// Distance of a critical value from `[0, 1]` that counts as lying on it at a wall.
pub const WALL_TOL: f64 = 1e-4;

#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    pub param: String,
    /// Coefficient `k` of component `i` is the polynomial `coeffs[i][k]` in the parameter.
    pub coeffs: [Vec<Poly>; 3],
    pub samples: Vec<Complex>,
}

impl Family {
    pub fn components_at(&self, a: Complex) -> [Poly; 3] {
        let eval = |table: &Vec<Poly>| Poly::new(table.iter().map(|p| p.eval(a)).collect());
        [
            eval(&self.coeffs[0]),
            eval(&self.coeffs[1]),
            eval(&self.coeffs[2]),
        ]
    }

    pub fn member(&self, a: Complex) -> Result<TrigonalCurve, CurveError> {
        let [y1, y2, y3] = self.components_at(a);
        make_curve(y1, y2, y3)
    }

    /// Evenly spaced real samples from `lo` to `hi`.
    pub fn real_grid(lo: f64, hi: f64, count: usize) -> Vec<Complex> {
        let steps = count.max(2) - 1;
        (0..=steps)
            .map(|k| Complex::new(lo + (hi - lo) * k as f64 / steps as f64, 0.0))
            .collect()
    }

    /// A `count x count` grid over the rectangle with corners `lo` and `hi`.
    pub fn rect_grid(lo: Complex, hi: Complex, count: usize) -> Vec<Complex> {
        let steps = count.max(2) - 1;
        let mut g = Vec::with_capacity((steps + 1) * (steps + 1));
        for i in 0..=steps {
            for k in 0..=steps {
                g.push(Complex::new(
                    lo.re + (hi.re - lo.re) * k as f64 / steps as f64,
                    lo.im + (hi.im - lo.im) * i as f64 / steps as f64,
                ));
            }
        }
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    MonochromeModification,
    MergeBlack,
    MergeWhite,
    MergeBlackMonochrome,
    Compound,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::MonochromeModification => "monochrome_modification",
            MoveKind::MergeBlack => "merge_black",
            MoveKind::MergeWhite => "merge_white",
            MoveKind::MergeBlackMonochrome => "merge_black_monochrome",
            MoveKind::Compound => "compound",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MoveEvent {
    pub kind: MoveKind,
    pub parameter_window: (Complex, Complex),
    /// Vertices of the dessin at the low end of the window next to the critical point.
    pub witness: Vec<usize>,
    /// Critical value of `j` responsible for the move, when a single one is.
    pub critical_value: Option<Complex>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Snapshot {
    pub a: Complex,
    pub summary: Option<DessinSummary>,
    pub combinatorial_type: Option<CombinatorialType>,
    /// Why the sample has no dessin.
    pub flag: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SweepResult {
    pub snapshots: Vec<Snapshot>,
    pub events: Vec<MoveEvent>,
}

/// Finite critical values of `j` at the critical points of `lambda`, with the points.
pub fn critical_values(c: &TrigonalCurve) -> Result<Vec<(LambdaCritical, Complex)>, AnalysisError> {
    let cps = lambda_critical_points(c, &RootOptions::default())
        .map_err(crate::dessin::DessinError::from)?;
    Ok(cps
        .into_iter()
        .filter_map(|cp| match cp.j() {
            JValue::Finite(j) => Some((cp, j)),
            JValue::Pole => None,
        })
        .collect())
}

fn distance_to_unit(j: Complex) -> f64 {
    let re = j.re.clamp(0.0, 1.0);
    (j - Complex::new(re, 0.0)).norm()
}

struct Built {
    dessin: Dessin,
    code: Vec<usize>,
}

fn build(f: &Family, a: Complex, opts: &BuildOptions) -> Result<Built, AnalysisError> {
    let c = f.member(a)?;
    let dessin = build_dessin_with(&c, opts)?;
    let code = class_code(&dessin);
    Ok(Built { dessin, code })
}

fn lerp(a: Complex, b: Complex, t: f64) -> Complex {
    a + (b - a) * t
}

fn classify(f: &Family, lo: Complex, hi: Complex, low: &Dessin, high: &Dessin) -> MoveEvent {
    let mid = lerp(lo, hi, 0.5);
    let near: Vec<(LambdaCritical, Complex)> = f
        .member(mid)
        .ok()
        .and_then(|c| critical_values(&c).ok())
        .unwrap_or_default()
        .into_iter()
        .filter(|(_, j)| distance_to_unit(*j) <= WALL_TOL * (1.0 + j.norm()))
        .collect();
    let mut event = MoveEvent {
        kind: MoveKind::Compound,
        parameter_window: (lo, hi),
        witness: Vec::new(),
        critical_value: None,
    };
    let [(cp, j)] = near.as_slice() else {
        return event;
    };
    let at_black = cp.lambda.is_some_and(|l| {
        BlackColor::ALL
            .iter()
            .any(|b| (l - b.lambda()).norm() < 1e-2)
    });
    let at_white = cp.lambda.is_some_and(|l| {
        WhiteColor::ALL
            .iter()
            .any(|w| (l - w.lambda()).norm() < 1e-2)
    });
    let has_mono = low.monochrome_count() > 0 || high.monochrome_count() > 0;
    event.kind = if j.norm() <= WALL_TOL && at_black {
        if has_mono {
            MoveKind::MergeBlackMonochrome
        } else {
            MoveKind::MergeBlack
        }
    } else if (j - Complex::new(1.0, 0.0)).norm() <= WALL_TOL * 2.0 && at_white {
        MoveKind::MergeWhite
    } else {
        MoveKind::MonochromeModification
    };
    event.critical_value = Some(*j);
    let x = SpherePoint::from_option(cp.x);
    let mut by_distance: Vec<(f64, usize)> = low
        .vertices
        .iter()
        .filter(|v| !v.kind.is_cross())
        .map(|v| (v.position.chordal(&x), v.id))
        .collect();
    by_distance.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
    event.witness = by_distance.iter().take(cp.index).map(|p| p.1).collect();
    event
}

/// Bisect `[lo, hi]` until every class change is isolated in a window of width `WINDOW`.
fn locate_moves(
    f: &Family,
    opts: &BuildOptions,
    lo: (Complex, &Built),
    hi: (Complex, &Built),
    out: &mut Vec<MoveEvent>,
) {
    if lo.1.code == hi.1.code {
        return;
    }
    if (hi.0 - lo.0).norm() <= WINDOW {
        out.push(classify(f, lo.0, hi.0, &lo.1.dessin, &hi.1.dessin));
        return;
    }
    let mut mid = None;
    for t in [0.5, 0.45, 0.55, 0.4, 0.6] {
        let a = lerp(lo.0, hi.0, t);
        if let Ok(b) = build(f, a, opts) {
            mid = Some((a, b));
            break;
        }
    }
    let Some((a, b)) = mid else {
        out.push(classify(f, lo.0, hi.0, &lo.1.dessin, &hi.1.dessin));
        return;
    };
    locate_moves(f, opts, lo, (a, &b), out);
    locate_moves(f, opts, (a, &b), hi, out);
}

/// Join adjacent windows of the same move: a sample landing exactly on a wall
/// shows the degenerate dessin, splitting one move into two halves.
fn coalesce(events: Vec<MoveEvent>) -> Vec<MoveEvent> {
    let mut out: Vec<MoveEvent> = Vec::new();
    for e in events {
        if let Some(last) = out.last_mut() {
            let touching = (last.parameter_window.1 - e.parameter_window.0).norm() <= WINDOW;
            let same = last.kind == e.kind
                && match (last.critical_value, e.critical_value) {
                    (Some(p), Some(q)) => (p - q).norm() <= WALL_TOL,
                    _ => false,
                };
            if touching && same {
                last.parameter_window.1 = e.parameter_window.1;
                continue;
            }
        }
        out.push(e);
    }
    out
}

/// Dessins at every sample and the moves between consecutive valid samples.
pub fn sweep_family(f: &Family, resolution: usize) -> SweepResult {
    let opts = BuildOptions {
        resolution,
        ..BuildOptions::default()
    };
    let built: Vec<Result<Built, AnalysisError>> =
        f.samples.par_iter().map(|&a| build(f, a, &opts)).collect();
    let snapshots = f
        .samples
        .iter()
        .zip(&built)
        .map(|(&a, b)| match b {
            Ok(b) => Snapshot {
                a,
                summary: Some(DessinSummary::of(&b.dessin)),
                combinatorial_type: Some(combinatorial_type(&b.dessin)),
                flag: None,
            },
            Err(e) => Snapshot {
                a,
                summary: None,
                combinatorial_type: None,
                flag: Some(e.to_string()),
            },
        })
        .collect();
    let pairs: Vec<usize> = (1..f.samples.len())
        .filter(|&k| matches!((&built[k - 1], &built[k]), (Ok(x), Ok(y)) if x.code != y.code))
        .collect();
    let events: Vec<Vec<MoveEvent>> = pairs
        .par_iter()
        .map(|&k| {
            let mut out = Vec::new();
            if let (Ok(x), Ok(y)) = (&built[k - 1], &built[k]) {
                locate_moves(f, &opts, (f.samples[k - 1], x), (f.samples[k], y), &mut out);
            }
            coalesce(out)
        })
        .collect();
    SweepResult {
        snapshots,
        events: events.into_iter().flatten().collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocusPoint {
    pub a: Complex,
    pub flagged: bool,
    /// The member curve is invalid at this parameter.
    pub degenerate: bool,
}

/// Flag each parameter where some critical value of `j` lies on `[0, 1]`, measured
/// as the distance of the critical cross-ratio to `G0` being at most `tol`.
pub fn discriminant_locus(f: &Family, grid: &[Complex], tol: f64) -> Vec<LocusPoint> {
    grid.par_iter()
        .map(|&a| {
            let values = f
                .member(a)
                .map_err(AnalysisError::from)
                .and_then(|c| critical_values(&c));
            match values {
                Ok(v) => LocusPoint {
                    a,
                    flagged: v
                        .iter()
                        .any(|(cp, _)| cp.lambda.is_some_and(|l| distance_to_g0(l) <= tol)),
                    degenerate: false,
                },
                Err(_) => LocusPoint {
                    a,
                    flagged: true,
                    degenerate: true,
                },
            }
        })
        .collect()
}

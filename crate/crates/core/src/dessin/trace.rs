//! Continuation of the `n` lifts of a cross-ratio path.
//!
//! At each parameter the `n` preimages are the roots of `beta*P - alpha*Q`,
//! with roots at infinity filling the degree deficit. Consecutive root sets are
//! linked by a minimum-cost assignment on chordal distance; an interval is
//! bisected until every point moves less than a third of the gap separating
//! distinct strands.

use crate::algebra::{raw_roots, RootOptions};
use crate::curve::TrigonalCurve;

use super::paths::LambdaPath;
use super::sphere::SpherePoint;
use super::DessinError;

pub const MIN_STEP: f64 = 1e-9;
/// Longest chord allowed between consecutive samples of a strand.
const MAX_CHORD: f64 = 0.1;
/// Extra parameters close to the ends and to pinned interior points.
const END_REFINE: [f64; 4] = [1e-8, 1e-6, 1e-4, 1e-3];
const SNAP_REFINE: [f64; 2] = [1e-6, 1e-4];

/// A known point with multiplicity at a fixed parameter (vertex, cross or critical point).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Anchor {
    pub point: SpherePoint,
    pub id: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Snap {
    pub t: f64,
    pub anchors: Vec<Anchor>,
}

/// One continuous lift, with the anchors it passes through.
#[derive(Clone, Debug, PartialEq)]
pub struct Sheet {
    pub samples: Vec<(f64, SpherePoint)>,
    /// `(sample index, anchor id)` in parameter order.
    pub nodes: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
struct Level {
    t: f64,
    points: Vec<SpherePoint>,
    /// Anchor id per point when pinned.
    cluster: Vec<Option<usize>>,
}

/// Roots of `beta*P - alpha*Q` on the sphere, exactly `n` of them.
pub fn lift_points(
    c: &TrigonalCurve,
    path: &LambdaPath,
    t: f64,
    opts: &RootOptions,
) -> Result<Vec<SpherePoint>, DessinError> {
    let pr = path.at(t);
    let f = c.pencil(pr.alpha, pr.beta);
    let mut pts = Vec::with_capacity(c.n);
    if f.degree() > 0 {
        let roots = raw_roots(&f, opts).or_else(|_| {
            // retry from a rotated start before giving up
            let mut o = *opts;
            o.phase += 1.234;
            raw_roots(&f, &o)
        })?;
        pts.extend(roots.into_iter().map(SpherePoint::from_x));
    }
    while pts.len() < c.n {
        pts.push(SpherePoint::INFINITY);
    }
    pts.truncate(c.n);
    Ok(pts)
}

fn pinned(anchors: &[Anchor], t: f64) -> Level {
    let mut points = Vec::new();
    let mut cluster = Vec::new();
    for a in anchors {
        for _ in 0..a.count {
            points.push(a.point);
            cluster.push(Some(a.id));
        }
    }
    Level { t, points, cluster }
}

/// Replace the `count` free points nearest each anchor by the anchor itself.
fn snap_level(mut level: Level, anchors: &[Anchor]) -> Level {
    for a in anchors {
        let mut free: Vec<(f64, usize)> = level
            .points
            .iter()
            .enumerate()
            .filter(|(i, _)| level.cluster[*i].is_none())
            .map(|(i, p)| (p.chordal(&a.point), i))
            .collect();
        free.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        for &(_, i) in free.iter().take(a.count) {
            level.points[i] = a.point;
            level.cluster[i] = Some(a.id);
        }
    }
    level
}

/// Minimum-cost perfect assignment (Hungarian method); `result[i]` is the column for row `i`.
pub fn min_cost_assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    if n == 0 {
        return Vec::new();
    }
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut ans = vec![0; n];
    for j in 1..=n {
        if p[j] > 0 {
            ans[p[j] - 1] = j - 1;
        }
    }
    ans
}

/// Assignment from `a` to `b`, or `None` when it is not unambiguous.
fn link(a: &Level, b: &Level) -> Option<Vec<usize>> {
    let n = a.points.len();
    let cost: Vec<Vec<f64>> = a
        .points
        .iter()
        .map(|p| b.points.iter().map(|q| p.chordal(q)).collect())
        .collect();
    let sigma = min_cost_assignment(&cost);
    let disp = (0..n).map(|i| cost[i][sigma[i]]).fold(0.0, f64::max);
    if disp > MAX_CHORD {
        return None;
    }
    let mut gap = f64::INFINITY;
    for i in 0..n {
        for k in i + 1..n {
            let same_a = a.cluster[i].is_some() && a.cluster[i] == a.cluster[k];
            let same_b =
                b.cluster[sigma[i]].is_some() && b.cluster[sigma[i]] == b.cluster[sigma[k]];
            if same_a || same_b {
                continue;
            }
            let g = a.points[i]
                .chordal(&a.points[k])
                .min(b.points[sigma[i]].chordal(&b.points[sigma[k]]));
            gap = gap.min(g);
        }
    }
    if disp < gap / 3.0 {
        Some(sigma)
    } else {
        None
    }
}

fn parameter_grid(resolution: usize, snaps: &[Snap]) -> Vec<f64> {
    let mut ts: Vec<f64> = (0..=resolution)
        .map(|k| k as f64 / resolution as f64)
        .collect();
    for &d in &END_REFINE {
        ts.push(d);
        ts.push(1.0 - d);
    }
    for s in snaps {
        ts.push(s.t);
        for &d in &SNAP_REFINE {
            ts.push(s.t - d);
            ts.push(s.t + d);
        }
    }
    ts.retain(|t| (0.0..=1.0).contains(t));
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // keep snap parameters exact and drop near-duplicates around them
    let mut out: Vec<f64> = Vec::with_capacity(ts.len());
    for t in ts {
        if let Some(&last) = out.last() {
            if t - last < 1e-12 {
                let t_is_snap = snaps.iter().any(|s| s.t == t) || t == 1.0;
                if t_is_snap {
                    *out.last_mut().unwrap() = t;
                }
                continue;
            }
        }
        out.push(t);
    }
    out
}

pub struct TraceJob<'a> {
    pub curve: &'a TrigonalCurve,
    pub path: LambdaPath,
    pub start: Vec<Anchor>,
    pub end: Vec<Anchor>,
    pub snaps: Vec<Snap>,
    pub resolution: usize,
    pub opts: RootOptions,
}

impl TraceJob<'_> {
    fn level_at(&self, t: f64) -> Result<Level, DessinError> {
        if t == 0.0 {
            return Ok(pinned(&self.start, 0.0));
        }
        if t == 1.0 {
            return Ok(pinned(&self.end, 1.0));
        }
        let points = lift_points(self.curve, &self.path, t, &self.opts)?;
        let n = points.len();
        let level = Level {
            t,
            points,
            cluster: vec![None; n],
        };
        match self.snaps.iter().find(|s| s.t == t) {
            Some(s) => Ok(snap_level(level, &s.anchors)),
            None => Ok(level),
        }
    }

    pub fn run(&self) -> Result<Vec<Sheet>, DessinError> {
        let n = self.curve.n;
        let count = |a: &[Anchor]| a.iter().map(|x| x.count).sum::<usize>();
        if count(&self.start) != n || count(&self.end) != n {
            return Err(DessinError::InconsistentEmbedding(format!(
                "{:?}: endpoint sets have {} and {} points, expected {n}",
                self.path,
                count(&self.start),
                count(&self.end)
            )));
        }
        let grid = parameter_grid(self.resolution, &self.snaps);
        let first = self.level_at(grid[0])?;
        let mut sheets: Vec<Sheet> = (0..n)
            .map(|i| Sheet {
                samples: vec![(first.t, first.points[i])],
                nodes: first.cluster[i].map(|id| (0, id)).into_iter().collect(),
            })
            .collect();
        // position of each sheet in the current level
        let mut slot: Vec<usize> = (0..n).collect();
        let mut current = first;
        for &t in &grid[1..] {
            let target = self.level_at(t)?;
            let mut stack = vec![target];
            while let Some(next) = stack.pop() {
                match link(&current, &next) {
                    Some(sigma) => {
                        for (k, sheet) in sheets.iter_mut().enumerate() {
                            let j = sigma[slot[k]];
                            slot[k] = j;
                            sheet.samples.push((next.t, next.points[j]));
                            if let Some(id) = next.cluster[j] {
                                let idx = sheet.samples.len() - 1;
                                sheet.nodes.push((idx, id));
                            }
                        }
                        current = next;
                    }
                    None => {
                        if next.t - current.t <= MIN_STEP {
                            return Err(DessinError::TraceAmbiguity {
                                path: format!("{:?}", self.path),
                                t: current.t,
                            });
                        }
                        let mid = self.level_at(0.5 * (current.t + next.t))?;
                        stack.push(next);
                        stack.push(mid);
                    }
                }
            }
        }
        Ok(sheets)
    }
}

//! The preimage `D` of the real line under `j`.
//!
//! Each face of `G0` contains one value of `lambda` in `{0, 1, oo}` (where `j = oo`)
//! and is split by four star arcs: two along the real axis to its white vertices
//! (`j > 1`) and two to the black vertices (`j < 0`). Lifting the star arcs adds
//! the rest of `D` to the dessin; critical points of `lambda` on a star arc become
//! extra vertices of `D`.

use rayon::prelude::*;

use crate::curve::TrigonalCurve;
use crate::dessin::paths::{LambdaPath, StarArc, Target};
use crate::dessin::trace::{Anchor, Sheet, TraceJob};
use crate::dessin::{
    build_dessin_with, group_snaps, sheet_segments, BuildOptions, ColorPair, Dessin, DessinError,
    DessinVertex, SpherePoint, VertexKind, VertexTable,
};
use crate::jmap::special_points_with;

use super::AnalysisError;

/// Which part of the real line an edge of `D` lies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealRange {
    /// `0 <= j <= 1`: an edge of the dessin.
    Unit,
    /// `j >= 1`, from a cross to a white vertex.
    AboveOne,
    /// `j <= 0`, from a cross to a black vertex.
    Negative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealEdge {
    pub endpoints: (usize, usize),
    pub strand: Vec<SpherePoint>,
    pub range: RealRange,
    /// Face of `G0` the edge lies over, for the two unbounded ranges.
    pub face: Option<ColorPair>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealPreimageGraph {
    /// The dessin `D` restricts to on `[0, 1]`; vertex ids are shared.
    pub dessin: Dessin,
    /// Dessin vertices followed by the critical points on star arcs.
    pub vertices: Vec<DessinVertex>,
    pub edges: Vec<RealEdge>,
    /// Ids of the critical vertices off the dessin.
    pub critical: Vec<usize>,
}

impl RealPreimageGraph {
    pub fn edges_in(&self, range: RealRange) -> impl Iterator<Item = &RealEdge> {
        self.edges.iter().filter(move |e| e.range == range)
    }
}

pub fn real_preimage(
    c: &TrigonalCurve,
    resolution: usize,
) -> Result<RealPreimageGraph, AnalysisError> {
    let opts = BuildOptions {
        resolution,
        ..BuildOptions::default()
    };
    let dessin = build_dessin_with(c, &opts)?;
    let sp = special_points_with(c, &opts.roots).map_err(DessinError::from)?;
    let table = VertexTable::new(&sp);
    if table
        .vertices
        .iter()
        .zip(&dessin.vertices)
        .any(|(a, b)| a.position != b.position)
    {
        return Err(AnalysisError::Precondition("vertex tables disagree".into()));
    }

    let mut vertices = dessin.vertices.clone();
    let mut critical = Vec::new();
    let mut on_arc: Vec<((ColorPair, StarArc), f64, Anchor)> = Vec::new();
    for cp in &sp.lambda_critical {
        for face in ColorPair::ALL {
            for arc in StarArc::ALL {
                let Some(t) = LambdaPath::locate_on_star(face, arc, cp.lambda, 1e-7) else {
                    continue;
                };
                let id = vertices.len();
                let position = SpherePoint::from_option(cp.x);
                vertices.push(DessinVertex {
                    id,
                    kind: VertexKind::Monochrome,
                    position,
                    degree: 0,
                    multiplicity: cp.index,
                });
                critical.push(id);
                on_arc.push((
                    (face, arc),
                    t,
                    Anchor {
                        point: position,
                        id,
                        count: cp.index,
                    },
                ));
            }
        }
    }

    let mut arcs = Vec::new();
    for face in ColorPair::ALL {
        for arc in StarArc::ALL {
            let snaps = group_snaps(
                on_arc
                    .iter()
                    .filter(|(k, _, _)| *k == (face, arc))
                    .map(|(_, t, a)| (*t, *a))
                    .collect(),
            );
            let path = LambdaPath::Star(face, arc);
            arcs.push((
                face,
                path.target(),
                TraceJob {
                    curve: c,
                    path,
                    start: table.cross_anchors(face.cross_label()),
                    end: table.anchors_for(path.target()),
                    snaps,
                    resolution,
                    opts: opts.roots,
                },
            ));
        }
    }
    let traced: Vec<Result<Vec<Sheet>, DessinError>> =
        arcs.par_iter().map(|(_, _, j)| j.run()).collect();

    let mut edges: Vec<RealEdge> = dessin
        .edges
        .iter()
        .map(|e| RealEdge {
            endpoints: e.endpoints,
            strand: e.strand.clone(),
            range: RealRange::Unit,
            face: None,
        })
        .collect();
    for ((face, target, _), sheets) in arcs.iter().zip(traced) {
        let range = match target {
            Target::White(_) => RealRange::AboveOne,
            Target::Black(_) => RealRange::Negative,
        };
        for sheet in sheets? {
            for (a, b, strand) in sheet_segments(&sheet) {
                edges.push(RealEdge {
                    endpoints: (a, b),
                    strand,
                    range,
                    face: Some(*face),
                });
            }
        }
    }
    for v in vertices.iter_mut() {
        v.degree = edges
            .iter()
            .map(|e| (e.endpoints.0 == v.id) as usize + (e.endpoints.1 == v.id) as usize)
            .sum();
    }
    Ok(RealPreimageGraph {
        dessin,
        vertices,
        edges,
        critical,
    })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Union-find roots of the graph formed by crosses and critical vertices of `D`
/// joined by the strands of `D` running between them.
fn interior_roots(g: &RealPreimageGraph) -> Vec<usize> {
    let interior = |v: usize| g.vertices[v].kind.is_cross() || g.critical.contains(&v);
    let mut parent: Vec<usize> = (0..g.vertices.len()).collect();
    for e in &g.edges {
        let (a, b) = e.endpoints;
        if e.range == RealRange::Unit || !interior(a) || !interior(b) {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    (0..g.vertices.len())
        .map(|v| find(&mut parent, v))
        .collect()
}

/// The vertex of `g` at the place of vertex `v` of `d`; ids differ once `d` has been modified.
pub(crate) fn vertex_in(g: &RealPreimageGraph, d: &Dessin, v: usize) -> Option<usize> {
    let target = &d.vertices[v];
    g.vertices
        .iter()
        .filter(|w| w.kind == target.kind)
        .map(|w| (w.position.chordal(&target.position), w.id))
        .filter(|x| x.0 < 1e-9)
        .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap())
        .map(|x| x.1)
}

/// Whether all crosses of a region are joined inside it through strands of `D`.
pub fn mergeable_region(
    d: &Dessin,
    g: &RealPreimageGraph,
    region: usize,
) -> Result<bool, AnalysisError> {
    let r = d
        .regions
        .get(region)
        .ok_or_else(|| AnalysisError::Precondition(format!("no region {region}")))?;
    if r.crosses_inside.len() < 2 {
        return Err(AnalysisError::Precondition(format!(
            "region {region} has {} crosses",
            r.crosses_inside.len()
        )));
    }
    let mut ids = Vec::with_capacity(r.crosses_inside.len());
    for &c in &r.crosses_inside {
        ids.push(vertex_in(g, d, c).ok_or_else(|| {
            AnalysisError::Precondition(format!("cross {c} is not a vertex of the preimage graph"))
        })?);
    }
    let roots = interior_roots(g);
    Ok(ids.iter().all(|&c| roots[c] == roots[ids[0]]))
}

/// The critical vertex of `D` joining the crosses of a mergeable region.
pub(crate) fn linking_vertex(
    g: &RealPreimageGraph,
    d: &Dessin,
    crosses: &[usize],
) -> Option<usize> {
    let roots = interior_roots(g);
    let root = roots[vertex_in(g, d, *crosses.first()?)?];
    g.critical.iter().copied().find(|&v| roots[v] == root)
}

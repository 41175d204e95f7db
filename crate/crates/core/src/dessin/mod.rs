//! The dessin `j^{-1}([0,1])` of a curve as an embedded graph on the sphere.
//!
//! Each of the six edges of the cross-ratio graph `G0` lifts to `n` strands
//! running from black to white vertices, broken at monochrome vertices.
//! Angles of the strands at each vertex give the rotation system, face
//! walks give the regions, and lifts of an auxiliary path inside each face of
//! `G0` carry every cross to a corner of a white vertex, which places it in a
//! region without any point-in-polygon test.

pub mod canon;
pub mod faces;
pub mod paths;
pub mod report;
pub mod sphere;
pub mod trace;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraError, RootOptions, RootSet};
use crate::curve::{PairLabel, TrigonalCurve};
use crate::jmap::{special_points_with, BlackColor, SpecialPoints, WhiteColor};

pub use canon::{class_code, DessinSummary};
pub use faces::regions_of;
pub use paths::{ColorPair, G0Edge, LambdaPath};
pub use report::{structural_report, Check, StructuralReport};
pub use sphere::SpherePoint;
use trace::{Anchor, Sheet, Snap, TraceJob};

pub const MIN_RESOLUTION: usize = 16;
pub const DEFAULT_RESOLUTION: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DessinError {
    #[error("strand tracking stayed ambiguous on {path} near t = {t:.6}")]
    TraceAmbiguity { path: String, t: f64 },
    #[error("inconsistent embedding: {0}")]
    InconsistentEmbedding(String),
    #[error("resolution {0} is below the minimum of 16")]
    InvalidResolution(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Black(BlackColor),
    White(WhiteColor),
    Cross(PairLabel),
    Monochrome,
}

impl VertexKind {
    pub fn name(&self) -> String {
        match self {
            VertexKind::Black(c) => format!("black:{}", c.name()),
            VertexKind::White(c) => format!("white:{}", c.name()),
            VertexKind::Cross(l) => format!("cross:{}", l.name()),
            VertexKind::Monochrome => "monochrome".to_string(),
        }
    }

    pub fn is_black(&self) -> bool {
        matches!(self, VertexKind::Black(_))
    }

    pub fn is_white(&self) -> bool {
        matches!(self, VertexKind::White(_))
    }

    pub fn is_cross(&self) -> bool {
        matches!(self, VertexKind::Cross(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DessinVertex {
    pub id: usize,
    pub kind: VertexKind,
    pub position: SpherePoint,
    pub degree: usize,
    pub multiplicity: usize,
}

/// A strand between two graph vertices, lying over one edge of `G0`.
#[derive(Clone, Debug, PartialEq)]
pub struct DessinEdge {
    pub id: usize,
    pub endpoints: (usize, usize),
    pub strand: Vec<SpherePoint>,
    pub g0_edge: usize,
}

/// Half-edge `2e` leaves `edges[e].endpoints.0`, half-edge `2e + 1` leaves the other end.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfEdge {
    pub origin: usize,
    pub edge: usize,
    pub twin: usize,
    /// Departure direction in the local chart at the origin.
    pub angle: f64,
}

/// A cross reached through the corner that follows half-edge `corner`
/// counterclockwise at a white vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CrossAnchor {
    pub cross: usize,
    pub corner: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Region {
    pub id: usize,
    /// Indices into `Dessin::walks`; more than one when the region touches several components.
    pub walks: Vec<usize>,
    pub white_colors: Vec<WhiteColor>,
    pub color_pair: Option<ColorPair>,
    /// White-vertex incidences along the boundary.
    pub size: usize,
    pub crosses_inside: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dessin {
    pub n: usize,
    pub vertices: Vec<DessinVertex>,
    pub edges: Vec<DessinEdge>,
    pub half_edges: Vec<HalfEdge>,
    /// Counterclockwise order of outgoing half-edges at each vertex.
    pub rotation: Vec<Vec<usize>>,
    pub cross_anchors: Vec<CrossAnchor>,
    /// Closed face walks; each half-edge appears in exactly one.
    pub walks: Vec<Vec<usize>>,
    /// Region of the face to the left of each half-edge.
    pub face_of: Vec<usize>,
    pub regions: Vec<Region>,
    /// Connected component of each non-cross vertex.
    pub component_of: Vec<Option<usize>>,
    pub component_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BuildOptions {
    pub resolution: usize,
    pub roots: RootOptions,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            resolution: DEFAULT_RESOLUTION,
            roots: RootOptions::default(),
        }
    }
}

impl Dessin {
    pub fn polyline(&self, h: usize) -> Vec<SpherePoint> {
        let strand = &self.edges[h / 2].strand;
        if h.is_multiple_of(2) {
            strand.clone()
        } else {
            strand.iter().rev().copied().collect()
        }
    }

    pub fn target(&self, h: usize) -> usize {
        self.half_edges[self.half_edges[h].twin].origin
    }

    pub fn count_kind(&self, f: impl Fn(&VertexKind) -> bool) -> usize {
        self.vertices.iter().filter(|v| f(&v.kind)).count()
    }

    pub fn black_count(&self) -> usize {
        self.count_kind(VertexKind::is_black)
    }

    pub fn white_count(&self) -> usize {
        self.count_kind(VertexKind::is_white)
    }

    pub fn monochrome_count(&self) -> usize {
        self.count_kind(|k| *k == VertexKind::Monochrome)
    }

    /// Edges with every chain through monochrome vertices counted once.
    pub fn merged_edge_count(&self) -> usize {
        let through: usize = self
            .vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Monochrome)
            .map(|v| v.degree / 2)
            .sum();
        self.edges.len() - through
    }

    /// Vertices of the graph itself, crosses excluded.
    pub fn graph_vertex_count(&self) -> usize {
        self.vertices.iter().filter(|v| !v.kind.is_cross()).count()
    }

    pub fn combinatorial_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.regions.iter().map(|r| r.size).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

/// True iff black degrees are 3, white degrees 2 and there is no monochrome vertex.
pub fn is_simple(d: &Dessin) -> bool {
    d.vertices.iter().all(|v| match v.kind {
        VertexKind::Black(_) => v.degree == 3,
        VertexKind::White(_) => v.degree == 2,
        VertexKind::Monochrome => false,
        VertexKind::Cross(_) => true,
    })
}

pub fn build_dessin(c: &TrigonalCurve, resolution: usize) -> Result<Dessin, DessinError> {
    build_dessin_with(
        c,
        &BuildOptions {
            resolution,
            ..BuildOptions::default()
        },
    )
}

/// Vertex bookkeeping shared by the dessin and its real-preimage extension.
pub(crate) struct VertexTable {
    pub vertices: Vec<DessinVertex>,
    pub black: [Vec<Anchor>; 2],
    pub white: [Vec<Anchor>; 3],
    pub crosses: [Vec<Anchor>; 3],
}

fn push_set(vertices: &mut Vec<DessinVertex>, kind: VertexKind, set: &RootSet) -> Vec<Anchor> {
    let mut anchors = Vec::new();
    let mut add = |position: SpherePoint, count: usize| {
        let id = vertices.len();
        vertices.push(DessinVertex {
            id,
            kind,
            position,
            degree: 0,
            multiplicity: count,
        });
        anchors.push(Anchor {
            point: position,
            id,
            count,
        });
    };
    for r in &set.roots {
        add(SpherePoint::from_x(r.value), r.multiplicity);
    }
    if set.degree_deficit > 0 {
        add(SpherePoint::INFINITY, set.degree_deficit);
    }
    anchors
}

pub(crate) fn label_index(label: PairLabel) -> usize {
    match label {
        PairLabel::S12 => 0,
        PairLabel::S23 => 1,
        PairLabel::S13 => 2,
    }
}

impl VertexTable {
    pub fn new(sp: &SpecialPoints) -> Self {
        let mut vertices = Vec::new();
        let black = [
            push_set(
                &mut vertices,
                VertexKind::Black(BlackColor::Cyan),
                &sp.black[0],
            ),
            push_set(
                &mut vertices,
                VertexKind::Black(BlackColor::Yellow),
                &sp.black[1],
            ),
        ];
        let white = [
            push_set(
                &mut vertices,
                VertexKind::White(WhiteColor::Red),
                &sp.white[0],
            ),
            push_set(
                &mut vertices,
                VertexKind::White(WhiteColor::Blue),
                &sp.white[1],
            ),
            push_set(
                &mut vertices,
                VertexKind::White(WhiteColor::Green),
                &sp.white[2],
            ),
        ];
        let crosses = [
            push_set(
                &mut vertices,
                VertexKind::Cross(PairLabel::S12),
                &sp.crosses.s12,
            ),
            push_set(
                &mut vertices,
                VertexKind::Cross(PairLabel::S23),
                &sp.crosses.s23,
            ),
            push_set(
                &mut vertices,
                VertexKind::Cross(PairLabel::S13),
                &sp.crosses.s13,
            ),
        ];
        VertexTable {
            vertices,
            black,
            white,
            crosses,
        }
    }

    pub fn anchors_for(&self, target: paths::Target) -> Vec<Anchor> {
        match target {
            paths::Target::Black(b) => self.black[b as usize].clone(),
            paths::Target::White(w) => self.white[w as usize].clone(),
        }
    }

    pub fn cross_anchors(&self, label: PairLabel) -> Vec<Anchor> {
        self.crosses[label_index(label)].clone()
    }
}

/// Group points with (nearly) equal parameters into one snap.
pub(crate) fn group_snaps(mut items: Vec<(f64, Anchor)>) -> Vec<Snap> {
    items.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut snaps: Vec<Snap> = Vec::new();
    for (t, a) in items {
        match snaps.last_mut() {
            Some(s) if (t - s.t).abs() < 1e-9 => s.anchors.push(a),
            _ => snaps.push(Snap {
                t,
                anchors: vec![a],
            }),
        }
    }
    snaps
}

/// Split a traced sheet at its anchors into consecutive `(from, to, strand)` pieces.
pub(crate) fn sheet_segments(sheet: &Sheet) -> Vec<(usize, usize, Vec<SpherePoint>)> {
    sheet
        .nodes
        .windows(2)
        .map(|w| {
            let (i, a) = w[0];
            let (j, b) = w[1];
            (a, b, sheet.samples[i..=j].iter().map(|s| s.1).collect())
        })
        .collect()
}

fn departure_angle(strand: &[SpherePoint]) -> f64 {
    let base = strand[0];
    let next = strand
        .iter()
        .skip(1)
        .find(|p| p.chordal(&base) > 0.0)
        .copied()
        .unwrap_or(strand[strand.len() - 1]);
    next.angle_from(&base)
}

/// Position of `angle` among the sorted half-edge angles at a vertex: the half-edge whose
/// counterclockwise corner contains it.
pub(crate) fn corner_at(d: &Dessin, vertex: usize, angle: f64) -> Option<usize> {
    let rot = &d.rotation[vertex];
    if rot.is_empty() {
        return None;
    }
    let mut best: Option<(f64, usize)> = None;
    for &h in rot {
        let mut diff = angle - d.half_edges[h].angle;
        while diff < 0.0 {
            diff += std::f64::consts::TAU;
        }
        while diff >= std::f64::consts::TAU {
            diff -= std::f64::consts::TAU;
        }
        if best.is_none_or(|b| diff < b.0) {
            best = Some((diff, h));
        }
    }
    best.map(|b| b.1)
}

/// Build the embedded graph from its vertices and traced segments, then regions.
pub(crate) fn assemble_graph(
    n: usize,
    mut vertices: Vec<DessinVertex>,
    segments: Vec<(usize, usize, Vec<SpherePoint>, usize)>,
) -> Dessin {
    let mut edges = Vec::with_capacity(segments.len());
    let mut half_edges = Vec::with_capacity(2 * segments.len());
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (from, to, strand, g0) in segments {
        let id = edges.len();
        let rev: Vec<SpherePoint> = strand.iter().rev().copied().collect();
        half_edges.push(HalfEdge {
            origin: from,
            edge: id,
            twin: 2 * id + 1,
            angle: departure_angle(&strand),
        });
        half_edges.push(HalfEdge {
            origin: to,
            edge: id,
            twin: 2 * id,
            angle: departure_angle(&rev),
        });
        rotation[from].push(2 * id);
        rotation[to].push(2 * id + 1);
        edges.push(DessinEdge {
            id,
            endpoints: (from, to),
            strand,
            g0_edge: g0,
        });
    }
    for rot in rotation.iter_mut() {
        rot.sort_by(|&a, &b| {
            half_edges[a]
                .angle
                .partial_cmp(&half_edges[b].angle)
                .unwrap()
        });
    }
    for (v, rot) in vertices.iter_mut().zip(&rotation) {
        v.degree = rot.len();
    }
    Dessin {
        n,
        vertices,
        edges,
        half_edges,
        rotation,
        cross_anchors: Vec::new(),
        walks: Vec::new(),
        face_of: Vec::new(),
        regions: Vec::new(),
        component_of: Vec::new(),
        component_count: 0,
    }
}

pub fn build_dessin_with(c: &TrigonalCurve, opts: &BuildOptions) -> Result<Dessin, DessinError> {
    if opts.resolution < MIN_RESOLUTION {
        return Err(DessinError::InvalidResolution(opts.resolution));
    }
    let sp = special_points_with(c, &opts.roots)?;
    let mut table = VertexTable::new(&sp);

    // monochrome vertices, each pinned on the G0 edge its critical value lies on
    let mut mono_on_edge: Vec<Vec<(f64, Anchor)>> = vec![Vec::new(); 6];
    for m in &sp.monochrome {
        let best = G0Edge::all()
            .into_iter()
            .filter_map(|e| e.locate(m.lambda, 1e-6).map(|(t, miss)| (miss, t, e)))
            .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let Some((_, t, e)) = best else {
            return Err(DessinError::InconsistentEmbedding(format!(
                "monochrome value {} is off the cross-ratio graph",
                m.lambda
            )));
        };
        let id = table.vertices.len();
        let position = SpherePoint::from_option(m.x);
        if table
            .vertices
            .iter()
            .any(|v| v.kind.is_cross() && v.position.chordal(&position) < 1e-9)
        {
            return Err(DessinError::TraceAmbiguity {
                path: "monochrome vertex on a cross".into(),
                t,
            });
        }
        table.vertices.push(DessinVertex {
            id,
            kind: VertexKind::Monochrome,
            position,
            degree: 0,
            multiplicity: m.index,
        });
        mono_on_edge[e.0].push((
            t,
            Anchor {
                point: position,
                id,
                count: m.index,
            },
        ));
    }

    let jobs: Vec<TraceJob> = G0Edge::all()
        .into_iter()
        .map(|e| TraceJob {
            curve: c,
            path: LambdaPath::Edge(e),
            start: table.black[e.black() as usize].clone(),
            end: table.white[e.white() as usize].clone(),
            snaps: group_snaps(mono_on_edge[e.0].clone()),
            resolution: opts.resolution,
            opts: opts.roots,
        })
        .collect();
    let traced: Vec<Result<Vec<Sheet>, DessinError>> = jobs.par_iter().map(|j| j.run()).collect();
    let mut segments = Vec::new();
    for (k, sheets) in traced.into_iter().enumerate() {
        for sheet in sheets? {
            for (a, b, strand) in sheet_segments(&sheet) {
                segments.push((a, b, strand, k));
            }
        }
    }
    let mut d = assemble_graph(c.n, table.vertices.clone(), segments);

    // crosses: lift a path from each face centre to a white vertex
    let aux_jobs: Vec<TraceJob> = ColorPair::ALL
        .into_iter()
        .map(|face| {
            let path = LambdaPath::Aux(face);
            TraceJob {
                curve: c,
                path,
                start: table.cross_anchors(face.cross_label()),
                end: table.anchors_for(path.target()),
                snaps: Vec::new(),
                resolution: opts.resolution,
                opts: opts.roots,
            }
        })
        .collect();
    let traced: Vec<Result<Vec<Sheet>, DessinError>> =
        aux_jobs.par_iter().map(|j| j.run()).collect();
    for sheets in traced {
        for sheet in sheets? {
            let (_, cross) = sheet.nodes[0];
            let (_, white) = *sheet.nodes.last().unwrap();
            let k = sheet.samples.len();
            let wpos = d.vertices[white].position;
            let arrival = sheet.samples[..k - 1]
                .iter()
                .rev()
                .find(|s| s.1.chordal(&wpos) > 0.0)
                .map(|s| s.1.angle_from(&wpos))
                .unwrap_or(0.0);
            let corner = corner_at(&d, white, arrival).ok_or_else(|| {
                DessinError::InconsistentEmbedding(format!("white vertex {white} has no edges"))
            })?;
            if !d.cross_anchors.iter().any(|a| a.cross == cross) {
                d.cross_anchors.push(CrossAnchor { cross, corner });
            }
        }
    }
    table.vertices.clear();
    faces::assemble(&mut d, None)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::curve::make_curve;

    fn curve(a: &[f64], b: &[f64], c: &[f64]) -> TrigonalCurve {
        make_curve(Poly::from_real(a), Poly::from_real(b), Poly::from_real(c)).unwrap()
    }

    #[test]
    fn linear_curve_dessin() {
        let c = curve(&[0.0, 1.0], &[0.0, -1.0], &[1.0]);
        let d = build_dessin(&c, 100).unwrap();
        assert_eq!(d.black_count(), 2);
        assert_eq!(d.white_count(), 3);
        assert!(d
            .vertices
            .iter()
            .any(|v| v.kind.is_white() && v.position.is_infinity()));
        assert_eq!(d.merged_edge_count(), 6);
        assert_eq!(d.regions.len(), 3);
        assert_eq!(d.combinatorial_sizes(), vec![2, 2, 2]);
        assert!(is_simple(&d));
        for r in &d.regions {
            assert_eq!(r.crosses_inside.len(), 1);
            let cross = &d.vertices[r.crosses_inside[0]];
            match cross.kind {
                VertexKind::Cross(l) => assert_eq!(Some(ColorPair::of_label(l)), r.color_pair),
                _ => panic!("not a cross"),
            }
        }
    }

    #[test]
    fn cubic_example_has_expected_type() {
        let c = curve(&[0.0, 0.0, 0.0, 1.0], &[0.0, 0.0, -1.0], &[1.0]);
        let d = build_dessin(&c, 100).unwrap();
        assert_eq!(d.merged_edge_count(), 18);
        assert_eq!(d.combinatorial_sizes(), vec![6, 6, 2, 2, 2]);
    }

    #[test]
    fn resolution_guard() {
        let c = curve(&[0.0, 1.0], &[0.0, -1.0], &[1.0]);
        assert_eq!(build_dessin(&c, 8), Err(DessinError::InvalidResolution(8)));
    }
}

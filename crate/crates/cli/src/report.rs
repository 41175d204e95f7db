//! JSON reports. Complex numbers are `[re, im]`; `null` stands for the point at infinity.

use serde::{Deserialize, Serialize};

use crtc_dessins::analysis::{is_maximal, LocusPoint, MoveEvent, SweepResult};
use crtc_dessins::combinatorics::combinatorial_type;
use crtc_dessins::dessin::{is_simple, structural_report, Dessin, SpherePoint, VertexKind};
use crtc_dessins::Complex;

pub type Pair = [f64; 2];

pub fn pair(z: Complex) -> Pair {
    [z.re, z.im]
}

fn point(p: &SpherePoint) -> Option<Pair> {
    p.x().map(pair)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexReport {
    pub id: usize,
    pub kind: String,
    pub color: Option<String>,
    pub position: Option<Pair>,
    pub degree: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeReport {
    pub id: usize,
    pub endpoints: [usize; 2],
    pub g0_edge: usize,
    pub strand: Vec<Option<Pair>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub id: usize,
    pub color_pair: Option<String>,
    pub size: usize,
    pub crosses: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DessinReport {
    pub n: usize,
    /// Edges with chains through monochrome vertices counted once.
    pub edges: usize,
    pub components: usize,
    #[serde(rename = "type")]
    pub combinatorial_type: Vec<usize>,
    pub is_simple: bool,
    pub maximal: bool,
    pub maximal_reasons: Vec<String>,
    pub structural_report: Vec<CheckReport>,
    pub vertices: Vec<VertexReport>,
    pub edge_list: Vec<EdgeReport>,
    pub regions: Vec<RegionReport>,
}

fn kind_fields(k: &VertexKind) -> (String, Option<String>) {
    match k {
        VertexKind::Black(c) => ("black".into(), Some(c.name().into())),
        VertexKind::White(c) => ("white".into(), Some(c.name().into())),
        VertexKind::Cross(l) => ("cross".into(), Some(l.name().into())),
        VertexKind::Monochrome => ("monochrome".into(), None),
    }
}

impl DessinReport {
    pub fn of(d: &Dessin) -> Self {
        let m = is_maximal(d);
        DessinReport {
            n: d.n,
            edges: d.merged_edge_count(),
            components: d.component_count,
            combinatorial_type: combinatorial_type(d).sizes,
            is_simple: is_simple(d),
            maximal: m.maximal,
            maximal_reasons: m.reasons,
            structural_report: structural_report(d)
                .checks
                .into_iter()
                .map(|c| CheckReport {
                    name: c.name.into(),
                    passed: c.passed,
                    detail: c.detail,
                })
                .collect(),
            vertices: d
                .vertices
                .iter()
                .map(|v| {
                    let (kind, color) = kind_fields(&v.kind);
                    VertexReport {
                        id: v.id,
                        kind,
                        color,
                        position: point(&v.position),
                        degree: v.degree,
                        multiplicity: v.multiplicity,
                    }
                })
                .collect(),
            edge_list: d
                .edges
                .iter()
                .map(|e| EdgeReport {
                    id: e.id,
                    endpoints: [e.endpoints.0, e.endpoints.1],
                    g0_edge: e.g0_edge,
                    strand: e.strand.iter().map(point).collect(),
                })
                .collect(),
            regions: d
                .regions
                .iter()
                .map(|r| RegionReport {
                    id: r.id,
                    color_pair: r.color_pair.map(|p| p.name().to_string()),
                    size: r.size,
                    crosses: r.crosses_inside.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SnapshotReport {
    pub a: Pair,
    #[serde(rename = "type")]
    pub combinatorial_type: Option<Vec<usize>>,
    pub black_degrees: Option<Vec<usize>>,
    pub white_degrees: Option<Vec<usize>>,
    pub monochrome: Option<usize>,
    pub components: Option<usize>,
    pub flag: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EventReport {
    pub kind: String,
    pub window: [Pair; 2],
    pub witness: Vec<usize>,
    pub critical_value: Option<Pair>,
}

impl EventReport {
    pub fn of(e: &MoveEvent) -> Self {
        EventReport {
            kind: e.kind.name().into(),
            window: [pair(e.parameter_window.0), pair(e.parameter_window.1)],
            witness: e.witness.clone(),
            critical_value: e.critical_value.map(pair),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusReport {
    pub a: Pair,
    pub flagged: bool,
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeformReport {
    pub param: String,
    pub tolerance: f64,
    pub snapshots: Vec<SnapshotReport>,
    pub events: Vec<EventReport>,
    pub locus: Vec<LocusReport>,
}

impl DeformReport {
    pub fn of(param: &str, tolerance: f64, sweep: &SweepResult, locus: &[LocusPoint]) -> Self {
        DeformReport {
            param: param.to_string(),
            tolerance,
            snapshots: sweep
                .snapshots
                .iter()
                .map(|s| SnapshotReport {
                    a: pair(s.a),
                    combinatorial_type: s.combinatorial_type.as_ref().map(|t| t.sizes.clone()),
                    black_degrees: s.summary.as_ref().map(|x| x.black_degrees.clone()),
                    white_degrees: s.summary.as_ref().map(|x| x.white_degrees.clone()),
                    monochrome: s.summary.as_ref().map(|x| x.monochrome),
                    components: s.summary.as_ref().map(|x| x.components),
                    flag: s.flag.clone(),
                })
                .collect(),
            events: sweep.events.iter().map(EventReport::of).collect(),
            locus: locus
                .iter()
                .map(|p| LocusReport {
                    a: pair(p.a),
                    flagged: p.flagged,
                    degenerate: p.degenerate,
                })
                .collect(),
        }
    }
}

//! A canonical code for the embedded graph, up to orientation-preserving homeomorphism
//! respecting vertex colours and crosses.

use std::collections::VecDeque;

use super::{Dessin, VertexKind};
use crate::curve::PairLabel;
use crate::jmap::{BlackColor, WhiteColor};

fn kind_code(k: &VertexKind) -> usize {
    match k {
        VertexKind::Black(BlackColor::Cyan) => 0,
        VertexKind::Black(BlackColor::Yellow) => 1,
        VertexKind::White(WhiteColor::Red) => 2,
        VertexKind::White(WhiteColor::Blue) => 3,
        VertexKind::White(WhiteColor::Green) => 4,
        VertexKind::Monochrome => 5,
        VertexKind::Cross(PairLabel::S12) => 6,
        VertexKind::Cross(PairLabel::S23) => 7,
        VertexKind::Cross(PairLabel::S13) => 8,
    }
}

/// Code of the component containing `start`, numbering half-edges in breadth-first order.
fn code_from(d: &Dessin, start: usize, pos: &[usize], corner_crosses: &[Vec<usize>]) -> Vec<usize> {
    let m = d.half_edges.len();
    let mut label = vec![usize::MAX; m];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    label[start] = 0;
    order.push(start);
    queue.push_back(start);
    let sigma = |h: usize| {
        let rot = &d.rotation[d.half_edges[h].origin];
        rot[(pos[h] + 1) % rot.len()]
    };
    while let Some(h) = queue.pop_front() {
        for g in [sigma(h), d.half_edges[h].twin] {
            if label[g] == usize::MAX {
                label[g] = order.len();
                order.push(g);
                queue.push_back(g);
            }
        }
    }
    let mut code = Vec::with_capacity(order.len() * 4);
    for &h in &order {
        code.push(kind_code(&d.vertices[d.half_edges[h].origin].kind));
        code.push(label[sigma(h)]);
        code.push(label[d.half_edges[h].twin]);
        code.push(corner_crosses[h].len());
        code.extend_from_slice(&corner_crosses[h]);
    }
    code
}

/// Canonical code of the whole dessin: the sorted list of minimal component codes,
/// preceded by the crosses lying in each region when the graph is disconnected.
pub fn class_code(d: &Dessin) -> Vec<usize> {
    let m = d.half_edges.len();
    let mut pos = vec![0; m];
    for rot in &d.rotation {
        for (k, &h) in rot.iter().enumerate() {
            pos[h] = k;
        }
    }
    // crosses are recorded per face, not per corner: the corner an auxiliary lift reaches is not an invariant
    let region_crosses: Vec<Vec<usize>> = d
        .regions
        .iter()
        .map(|r| {
            let mut v: Vec<usize> = r
                .crosses_inside
                .iter()
                .map(|&c| kind_code(&d.vertices[c].kind) * 64 + d.vertices[c].multiplicity)
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    let corner_crosses: Vec<Vec<usize>> = (0..m)
        .map(|h| region_crosses[d.face_of[h]].clone())
        .collect();
    let mut best: Vec<Option<Vec<usize>>> = vec![None; d.component_count];
    for (h, he) in d.half_edges.iter().enumerate() {
        if !d.vertices[he.origin].kind.is_black() {
            continue;
        }
        let Some(comp) = d.component_of[he.origin] else {
            continue;
        };
        let code = code_from(d, h, &pos, &corner_crosses);
        if best[comp].as_ref().is_none_or(|b| code < *b) {
            best[comp] = Some(code);
        }
    }
    let mut parts: Vec<Vec<usize>> = best.into_iter().flatten().collect();
    parts.sort();
    let mut out = vec![d.component_count];
    for p in parts {
        out.push(p.len());
        out.extend(p);
    }
    if d.component_count > 1 {
        let mut nest: Vec<Vec<usize>> = d
            .regions
            .iter()
            .map(|r| {
                let mut v: Vec<usize> = r.walks.iter().map(|&w| d.walks[w].len()).collect();
                v.sort_unstable();
                v.push(r.size);
                v
            })
            .collect();
        nest.sort();
        for v in nest {
            out.push(v.len());
            out.extend(v);
        }
    }
    out
}

/// Coarse invariants of a dessin, convenient for comparing classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DessinSummary {
    pub sizes: Vec<usize>,
    pub black_degrees: Vec<usize>,
    pub white_degrees: Vec<usize>,
    pub monochrome: usize,
    pub components: usize,
}

impl DessinSummary {
    pub fn of(d: &Dessin) -> Self {
        let degrees = |f: fn(&VertexKind) -> bool| {
            let mut v: Vec<usize> = d
                .vertices
                .iter()
                .filter(|x| f(&x.kind))
                .map(|x| x.degree)
                .collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        };
        DessinSummary {
            sizes: d.combinatorial_sizes(),
            black_degrees: degrees(VertexKind::is_black),
            white_degrees: degrees(VertexKind::is_white),
            monochrome: d.monochrome_count(),
            components: d.component_count,
        }
    }
}

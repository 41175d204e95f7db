//! Face walks, connected components and regions of an embedded dessin.
//!
//! Walks follow `next(h) = rotation^{-1}(twin(h))`, keeping the face on the left.
//! When the graph is disconnected a region can be bounded by walks of several
//! components; walks are grouped by recording, for every other component, which
//! of its faces contains them.

use std::collections::BTreeMap;

use crate::algebra::Complex;

use super::paths::ColorPair;
use super::sphere::{fibonacci_sphere, RotatedChart, SpherePoint};
use super::{Dessin, DessinError, Region, VertexKind};

/// Face walks as lists of half-edges, with the walk index of every half-edge.
pub fn face_walks(d: &Dessin) -> Result<(Vec<Vec<usize>>, Vec<usize>), DessinError> {
    let m = d.half_edges.len();
    let mut pos = vec![usize::MAX; m];
    for rot in &d.rotation {
        for (k, &h) in rot.iter().enumerate() {
            pos[h] = k;
        }
    }
    if pos.contains(&usize::MAX) {
        return Err(DessinError::InconsistentEmbedding(
            "half-edge missing from rotation".into(),
        ));
    }
    let mut walk_of = vec![usize::MAX; m];
    let mut walks = Vec::new();
    for start in 0..m {
        if walk_of[start] != usize::MAX {
            continue;
        }
        let id = walks.len();
        let mut walk = Vec::new();
        let mut h = start;
        loop {
            if walk_of[h] != usize::MAX {
                if h != start {
                    return Err(DessinError::InconsistentEmbedding(format!(
                        "walk from {start} re-enters {h}"
                    )));
                }
                break;
            }
            walk_of[h] = id;
            walk.push(h);
            let t = d.half_edges[h].twin;
            let v = d.half_edges[t].origin;
            let rot = &d.rotation[v];
            let k = pos[t];
            h = rot[(k + rot.len() - 1) % rot.len()];
        }
        walks.push(walk);
    }
    Ok((walks, walk_of))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Component index per vertex (`None` for vertices without edges) and the component count.
pub fn components(d: &Dessin) -> (Vec<Option<usize>>, usize) {
    let nv = d.vertices.len();
    let mut parent: Vec<usize> = (0..nv).collect();
    for e in &d.edges {
        let a = find(&mut parent, e.endpoints.0);
        let b = find(&mut parent, e.endpoints.1);
        if a != b {
            parent[a] = b;
        }
    }
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out = vec![None; nv];
    for v in 0..nv {
        if d.rotation[v].is_empty() {
            continue;
        }
        let r = find(&mut parent, v);
        let next = label.len();
        out[v] = Some(*label.entry(r).or_insert(next));
    }
    (out, label.len())
}

fn walk_polyline(d: &Dessin, walk: &[usize]) -> Vec<SpherePoint> {
    let mut pts = Vec::new();
    for &h in walk {
        let line = d.polyline(h);
        pts.extend_from_slice(&line[..line.len() - 1]);
    }
    pts
}

fn winding(chart: &RotatedChart, poly: &[SpherePoint], p: Complex) -> f64 {
    let mut total = 0.0;
    let k = poly.len();
    for i in 0..k {
        let a = chart.project(&poly[i]) - p;
        let b = chart.project(&poly[(i + 1) % k]) - p;
        total += (b * a.conj()).arg();
    }
    total / std::f64::consts::TAU
}

fn signed_area(chart: &RotatedChart, poly: &[SpherePoint]) -> f64 {
    let k = poly.len();
    let mut s = 0.0;
    for i in 0..k {
        let a = chart.project(&poly[i]);
        let b = chart.project(&poly[(i + 1) % k]);
        s += a.re * b.im - a.im * b.re;
    }
    0.5 * s
}

/// For each ordered pair of components `(a, b)`, the walk of `b` bounding the face that contains `a`.
fn containing_faces(
    d: &Dessin,
    walks: &[Vec<usize>],
    walk_component: &[usize],
    component_of: &[Option<usize>],
    count: usize,
) -> Vec<Vec<usize>> {
    let polys: Vec<Vec<SpherePoint>> = walks.iter().map(|w| walk_polyline(d, w)).collect();
    let all: Vec<SpherePoint> = polys.iter().flatten().copied().collect();
    let pole = fibonacci_sphere(96)
        .into_iter()
        .map(|c| {
            (
                all.iter()
                    .map(|p| p.chordal(&c))
                    .fold(f64::INFINITY, f64::min),
                c,
            )
        })
        .max_by(|a, b| a.0.partial_cmp(&b.0).unwrap())
        .map(|x| x.1)
        .unwrap_or(SpherePoint::INFINITY);
    let chart = RotatedChart::new(pole);

    let mut out = vec![vec![usize::MAX; count]; count];
    for b in 0..count {
        let b_walks: Vec<usize> = (0..walks.len())
            .filter(|&w| walk_component[w] == b)
            .collect();
        let b_points: Vec<SpherePoint> = b_walks
            .iter()
            .flat_map(|&w| polys[w].iter().copied())
            .collect();
        let outer = b_walks
            .iter()
            .copied()
            .min_by(|&x, &y| {
                signed_area(&chart, &polys[x])
                    .partial_cmp(&signed_area(&chart, &polys[y]))
                    .unwrap()
            })
            .unwrap();
        for a in 0..count {
            if a == b {
                continue;
            }
            // the vertex of a farthest from b
            let probe = d
                .vertices
                .iter()
                .filter(|v| component_of[v.id] == Some(a))
                .map(|v| {
                    let dist = b_points
                        .iter()
                        .map(|q| q.chordal(&v.position))
                        .fold(f64::INFINITY, f64::min);
                    (dist, v.position)
                })
                .max_by(|x, y| x.0.partial_cmp(&y.0).unwrap())
                .unwrap()
                .1;
            let p = chart.project(&probe);
            out[a][b] = b_walks
                .iter()
                .copied()
                .find(|&w| winding(&chart, &polys[w], p) > 0.5)
                .unwrap_or(outer);
        }
    }
    out
}

/// Fill walks, components and regions of `d`. With `hint`, half-edges keep the
/// region labels they carry in it instead of being located geometrically.
pub fn assemble(d: &mut Dessin, hint: Option<&[usize]>) -> Result<(), DessinError> {
    let (walks, _) = face_walks(d)?;
    let (component_of, count) = components(d);
    if d.vertices
        .iter()
        .any(|v| !v.kind.is_cross() && d.rotation[v.id].is_empty())
    {
        return Err(DessinError::InconsistentEmbedding(
            "graph vertex without edges".into(),
        ));
    }
    let walk_component: Vec<usize> = walks
        .iter()
        .map(|w| component_of[d.half_edges[w[0]].origin].unwrap())
        .collect();

    let keys: Vec<Vec<usize>> = match hint {
        Some(h) => walks.iter().map(|w| vec![h[w[0]]]).collect(),
        None if count <= 1 => (0..walks.len()).map(|w| vec![w]).collect(),
        None => {
            let inside = containing_faces(d, &walks, &walk_component, &component_of, count);
            (0..walks.len())
                .map(|w| {
                    let a = walk_component[w];
                    (0..count)
                        .map(|b| if b == a { w } else { inside[a][b] })
                        .collect()
                })
                .collect()
        }
    };
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (w, k) in keys.into_iter().enumerate() {
        groups.entry(k).or_default().push(w);
    }
    if hint.is_none() && count > 1 {
        // each component bounds a region with at most one walk
        for ws in groups.values() {
            let comps: Vec<usize> = ws.iter().map(|&w| walk_component[w]).collect();
            let mut sorted = comps.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != comps.len() {
                return Err(DessinError::InconsistentEmbedding(
                    "region with two walks of one component".into(),
                ));
            }
        }
    }

    let mut regions = Vec::new();
    let mut face_of = vec![0; d.half_edges.len()];
    for ws in groups.into_values() {
        let id = regions.len();
        let mut whites = Vec::new();
        let mut size = 0;
        for &w in &ws {
            for &h in &walks[w] {
                face_of[h] = id;
                if let VertexKind::White(c) = d.vertices[d.half_edges[h].origin].kind {
                    size += 1;
                    whites.push(c);
                }
            }
        }
        whites.sort();
        whites.dedup();
        let color_pair = if whites.len() == 2 {
            ColorPair::from_whites(whites[0], whites[1])
        } else {
            None
        };
        regions.push(Region {
            id,
            walks: ws,
            white_colors: whites,
            color_pair,
            size,
            crosses_inside: Vec::new(),
        });
    }
    for a in &d.cross_anchors {
        regions[face_of[a.corner]].crosses_inside.push(a.cross);
    }
    for r in regions.iter_mut() {
        r.crosses_inside.sort_unstable();
    }
    d.walks = walks;
    d.face_of = face_of;
    d.regions = regions;
    d.component_of = component_of;
    d.component_count = count;
    Ok(())
}

/// Regions of `d` recomputed from its embedding.
pub fn regions_of(d: &Dessin) -> Result<Vec<Region>, DessinError> {
    let mut e = d.clone();
    assemble(&mut e, None)?;
    Ok(e.regions)
}

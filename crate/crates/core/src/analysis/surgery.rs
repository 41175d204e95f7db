//! Graph-level degenerations: collapsing the crosses of a region and joining
//! components at white vertices.

use crate::dessin::faces::assemble;
use crate::dessin::{Dessin, VertexKind};

use super::preimage::{linking_vertex, mergeable_region, RealPreimageGraph};
use super::AnalysisError;

/// Delete vertices that no half-edge leaves, renumbering the rest.
fn remove_isolated(d: &mut Dessin, remove: &[usize]) {
    let nv = d.vertices.len();
    let mut map = vec![usize::MAX; nv];
    let mut next = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if !remove.contains(&v) {
            *slot = next;
            next += 1;
        }
    }
    d.vertices.retain(|v| !remove.contains(&v.id));
    for v in d.vertices.iter_mut() {
        v.id = map[v.id];
    }
    let rotation = std::mem::take(&mut d.rotation);
    d.rotation = rotation
        .into_iter()
        .enumerate()
        .filter(|(v, _)| !remove.contains(v))
        .map(|(_, r)| r)
        .collect();
    for h in d.half_edges.iter_mut() {
        h.origin = map[h.origin];
    }
    for e in d.edges.iter_mut() {
        e.endpoints = (map[e.endpoints.0], map[e.endpoints.1]);
    }
    d.cross_anchors.retain(|a| !remove.contains(&a.cross));
    for a in d.cross_anchors.iter_mut() {
        a.cross = map[a.cross];
    }
}

fn region_sizes(d: &Dessin) -> Vec<usize> {
    d.regions.iter().map(|r| r.size).collect()
}

/// Collapse the crosses of a region into one cross carrying their total multiplicity.
pub fn merge_crosses(
    d: &Dessin,
    g: &RealPreimageGraph,
    region: usize,
) -> Result<Dessin, AnalysisError> {
    if !mergeable_region(d, g, region)? {
        return Err(AnalysisError::NotMergeable(region));
    }
    let crosses = d.regions[region].crosses_inside.clone();
    let keep = crosses[0];
    let mut out = d.clone();
    out.vertices[keep].multiplicity = crosses.iter().map(|&c| d.vertices[c].multiplicity).sum();
    if let Some(v) = linking_vertex(g, d, &crosses) {
        out.vertices[keep].position = g.vertices[v].position;
    }
    remove_isolated(&mut out, &crosses[1..]);
    let hint = d.face_of.clone();
    assemble(&mut out, Some(&hint))?;
    Ok(out)
}

/// Faces incident to a vertex, by region id.
fn incident_regions(d: &Dessin, v: usize) -> Vec<usize> {
    let mut r: Vec<usize> = d.rotation[v].iter().map(|&h| d.face_of[h]).collect();
    r.sort_unstable();
    r.dedup();
    r
}

/// Nearest pair of same-coloured white vertices in different components with a common region.
fn nearest_pair(d: &Dessin) -> Option<(usize, usize, usize)> {
    let whites: Vec<usize> = d
        .vertices
        .iter()
        .filter(|v| v.kind.is_white())
        .map(|v| v.id)
        .collect();
    let mut best: Option<(f64, usize, usize, usize)> = None;
    for (i, &u) in whites.iter().enumerate() {
        for &v in &whites[i + 1..] {
            if d.vertices[u].kind != d.vertices[v].kind || d.component_of[u] == d.component_of[v] {
                continue;
            }
            let ru = incident_regions(d, u);
            let Some(&shared) = incident_regions(d, v).iter().find(|r| ru.contains(r)) else {
                continue;
            };
            let dist = d.vertices[u].position.chordal(&d.vertices[v].position);
            if best.is_none_or(|b| dist < b.0) {
                best = Some((dist, u, v, shared));
            }
        }
    }
    best.map(|b| (b.1, b.2, b.3))
}

/// Identify white vertex `v` with `u` inside the corners of `region` at both.
fn merge_whites(d: &mut Dessin, u: usize, v: usize, region: usize) {
    let ru = d.rotation[u].clone();
    let rv = d.rotation[v].clone();
    let ia = ru.iter().position(|&h| d.face_of[h] == region).unwrap();
    let ib = rv.iter().position(|&h| d.face_of[h] == region).unwrap();
    let mut merged = Vec::with_capacity(ru.len() + rv.len());
    merged.extend_from_slice(&ru[..=ia]);
    for k in 1..=rv.len() {
        merged.push(rv[(ib + k) % rv.len()]);
    }
    merged.extend_from_slice(&ru[ia + 1..]);

    let target = d.vertices[u].position;
    for &h in &rv {
        d.half_edges[h].origin = u;
        let e = &mut d.edges[d.half_edges[h].edge];
        if h % 2 == 0 {
            e.endpoints.0 = u;
            e.strand[0] = target;
        } else {
            e.endpoints.1 = u;
            *e.strand.last_mut().unwrap() = target;
        }
    }
    d.rotation[u] = merged;
    d.rotation[v].clear();
    d.vertices[u].degree += d.vertices[v].degree;
    d.vertices[u].multiplicity += d.vertices[v].multiplicity;
}

/// Join components by merging the nearest same-coloured white vertices until connected.
pub fn connect_components(d: &Dessin) -> Result<Dessin, AnalysisError> {
    let mut out = d.clone();
    let sizes = region_sizes(d);
    while out.component_count > 1 {
        let before = out.component_count;
        let (u, v, region) = nearest_pair(&out).ok_or(AnalysisError::NoSameColorPair)?;
        debug_assert!(matches!(out.vertices[u].kind, VertexKind::White(_)));
        merge_whites(&mut out, u, v, region);
        remove_isolated(&mut out, &[v]);
        let hint = out.face_of.clone();
        assemble(&mut out, Some(&hint))?;
        if out.component_count + 1 != before {
            return Err(AnalysisError::RegionsChanged(format!(
                "components went from {before} to {}",
                out.component_count
            )));
        }
        if region_sizes(&out) != sizes {
            return Err(AnalysisError::RegionsChanged(format!(
                "sizes {:?} became {:?}",
                sizes,
                region_sizes(&out)
            )));
        }
    }
    Ok(out)
}

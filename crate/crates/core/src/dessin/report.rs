//! Pass/fail evaluation of the structural invariants of a dessin.

use std::fmt;

use super::paths::ColorPair;
use super::{Dessin, VertexKind};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct StructuralReport {
    pub checks: Vec<Check>,
}

impl StructuralReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }
}

impl fmt::Display for StructuralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

fn pair_of_cross(kind: &VertexKind) -> Option<ColorPair> {
    match kind {
        VertexKind::Cross(l) => Some(ColorPair::of_label(*l)),
        _ => None,
    }
}

/// Evaluate every vertex, edge and region invariant. Never fails.
pub fn structural_report(d: &Dessin) -> StructuralReport {
    let mut r = StructuralReport::default();
    let n = d.n;

    let merged = d.merged_edge_count();
    r.push(
        "edge_count",
        merged == 6 * n,
        format!("{merged} edges, expected {}", 6 * n),
    );

    let (b, w) = (d.black_count(), d.white_count());
    r.push(
        "vertex_bounds",
        b <= 2 * n && w <= 3 * n && b >= 1 && w >= 1,
        format!(
            "{b} black (at most {}), {w} white (at most {})",
            2 * n,
            3 * n
        ),
    );

    let mut degree_ok = true;
    let mut bad = Vec::new();
    for v in &d.vertices {
        let expected = match v.kind {
            VertexKind::Black(_) => 3 * v.multiplicity,
            VertexKind::White(_) | VertexKind::Monochrome => 2 * v.multiplicity,
            VertexKind::Cross(_) => 0,
        };
        if v.degree != expected {
            degree_ok = false;
            bad.push(format!(
                "{}#{} has degree {} not {expected}",
                v.kind.name(),
                v.id,
                v.degree
            ));
        }
    }
    r.push(
        "vertex_degrees",
        degree_ok,
        if bad.is_empty() {
            "ok".into()
        } else {
            bad.join("; ")
        },
    );

    let mut bipartite = true;
    for e in &d.edges {
        let (a, c) = (
            &d.vertices[e.endpoints.0].kind,
            &d.vertices[e.endpoints.1].kind,
        );
        let ok = match (a, c) {
            (VertexKind::Monochrome, _) | (_, VertexKind::Monochrome) => true,
            _ => a.is_black() != c.is_black() && !a.is_cross() && !c.is_cross(),
        };
        bipartite &= ok;
    }
    r.push(
        "bipartite",
        bipartite,
        format!("{} segments", d.edges.len()),
    );

    let regions = d.regions.len();
    r.push(
        "region_count",
        regions >= n + 2 && regions <= 3 * n,
        format!("{regions} regions, expected within [{}, {}]", n + 2, 3 * n),
    );

    let v = d.graph_vertex_count();
    let e = d.edges.len();
    let euler = regions as isize == d.component_count as isize + e as isize - v as isize + 1;
    r.push(
        "euler",
        euler,
        format!(
            "R = {regions}, components = {}, E = {e}, V = {v}",
            d.component_count
        ),
    );

    let mut colors_ok = true;
    let mut sums = [0usize; 3];
    for reg in &d.regions {
        match reg.color_pair {
            Some(p) => sums[p as usize] += reg.size,
            None => colors_ok = false,
        }
    }
    r.push(
        "region_colors",
        colors_ok,
        format!(
            "{} regions with two white colours",
            d.regions.iter().filter(|x| x.color_pair.is_some()).count()
        ),
    );
    let even = d.regions.iter().all(|x| x.size % 2 == 0);
    r.push(
        "pair_sums",
        even && sums.iter().all(|&s| s == 2 * n),
        format!(
            "RB {}, BG {}, RG {}; expected {} each",
            sums[0],
            sums[1],
            sums[2],
            2 * n
        ),
    );

    let mut cross_ok = true;
    let mut label_ok = true;
    for reg in &d.regions {
        let weight: usize = reg
            .crosses_inside
            .iter()
            .map(|&c| d.vertices[c].multiplicity)
            .sum();
        if reg.crosses_inside.is_empty() || 2 * weight > reg.size {
            cross_ok = false;
        }
        for &c in &reg.crosses_inside {
            if pair_of_cross(&d.vertices[c].kind) != reg.color_pair {
                label_ok = false;
            }
        }
    }
    r.push(
        "crosses_per_region",
        cross_ok,
        "at least one, at most size/2 with multiplicity".into(),
    );
    r.push(
        "cross_labels",
        label_ok,
        "12 in BG, 23 in RG, 13 in RB".into(),
    );

    let placed: usize = d.regions.iter().map(|x| x.crosses_inside.len()).sum();
    let crosses = d.count_kind(VertexKind::is_cross);
    r.push(
        "crosses_placed",
        placed == crosses,
        format!("{placed} of {crosses} crosses located"),
    );

    let singular: usize = d
        .vertices
        .iter()
        .filter(|v| v.kind.is_cross())
        .map(|v| v.multiplicity)
        .sum();
    r.push(
        "singular_fibres",
        singular == 3 * n,
        format!("{singular} crosses with multiplicity, expected {}", 3 * n),
    );
    r
}

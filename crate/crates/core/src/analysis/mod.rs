//! Maximality, the real preimage graph, graph surgery towards maximal dessins,
//! and deformation families.

pub mod family;
pub mod preimage;
pub mod surgery;

use thiserror::Error;

use crate::curve::CurveError;
use crate::dessin::{Dessin, DessinError};

pub use family::{
    critical_values, discriminant_locus, sweep_family, Family, LocusPoint, MoveEvent, MoveKind,
    Snapshot, SweepResult,
};
pub use preimage::{mergeable_region, real_preimage, RealEdge, RealPreimageGraph, RealRange};
pub use surgery::{connect_components, merge_crosses};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("region {0} is not mergeable")]
    NotMergeable(usize),
    #[error("no same-colour white pair joins two components")]
    NoSameColorPair,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("surgery changed the regions: {0}")]
    RegionsChanged(String),
    #[error(transparent)]
    Dessin(#[from] DessinError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Maximality {
    pub maximal: bool,
    pub reasons: Vec<String>,
}

/// Connected, free of monochrome vertices, and one cross vertex in every region;
/// a merged cross of higher multiplicity counts once.
pub fn is_maximal(d: &Dessin) -> Maximality {
    let mut reasons = Vec::new();
    if d.component_count != 1 {
        reasons.push(format!("disconnected ({} components)", d.component_count));
    }
    let mono = d.monochrome_count();
    if mono > 0 {
        reasons.push(format!("{mono} monochrome vertices"));
    }
    for r in &d.regions {
        if r.crosses_inside.len() != 1 {
            reasons.push(format!(
                "region {} has {} crosses",
                r.id,
                r.crosses_inside.len()
            ));
        }
    }
    Maximality {
        maximal: reasons.is_empty(),
        reasons,
    }
}

/// Regions holding more than one cross.
pub fn multi_cross_regions(d: &Dessin) -> Vec<usize> {
    d.regions
        .iter()
        .filter(|r| r.crosses_inside.len() > 1)
        .map(|r| r.id)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use crate::curve::make_curve;
    use crate::dessin::build_dessin;

    #[test]
    fn linear_curve_is_maximal() {
        let c = make_curve(
            Poly::from_real(&[0.0, 1.0]),
            Poly::from_real(&[0.0, -1.0]),
            Poly::from_real(&[1.0]),
        )
        .unwrap();
        let d = build_dessin(&c, 100).unwrap();
        let m = is_maximal(&d);
        assert!(m.maximal, "{:?}", m.reasons);
    }

    #[test]
    fn two_component_dessin_is_not_maximal() {
        let c = make_curve(
            Poly::from_real(&[-1.0, 0.0, 1.0]),
            Poly::from_real(&[0.0, -1.0]),
            Poly::from_real(&[0.0, 1.0]),
        )
        .unwrap();
        let d = build_dessin(&c, 100).unwrap();
        let m = is_maximal(&d);
        assert!(!m.maximal);
        assert!(m.reasons.iter().any(|r| r.starts_with("disconnected")));
        assert!(m.reasons.iter().any(|r| r.contains("has 2 crosses")));
    }
}

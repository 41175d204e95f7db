//! Dessins d'enfants of completely reducible trigonal curves.
//!
//! A curve `(y - y1)(y - y2)(y - y3) = 0` with polynomial components defines the
//! cross-ratio `lambda = (y1 - y3)/(y2 - y3)` and the j-invariant
//! `j = 4(lambda^2 - lambda + 1)^3 / (27 lambda^2 (lambda - 1)^2)`. The dessin is
//! the preimage of `[0, 1]` under `j`, embedded on the Riemann sphere.

pub mod algebra;
pub mod analysis;
pub mod combinatorics;
pub mod curve;
pub mod dessin;
pub mod jmap;

pub use algebra::{Complex, Poly, RationalMap, Root, RootOptions, RootSet};
pub use curve::TrigonalCurve;

//! Paths in the cross-ratio plane whose lifts make up the dessin and its companions.
//!
//! The graph `G0 = j^{-1}([0,1])` in the cross-ratio plane has black vertices
//! `e^{+-i pi/3}`, white vertices `-1, 1/2, 2` and six edges, each the image of
//! the upper unit-circle arc from `e^{i pi/3}` to `-1` under one of the six
//! anharmonic maps. Its three faces contain `0`, `1` and `infinity`.

use std::f64::consts::PI;

use crate::algebra::Complex;
use crate::curve::PairLabel;
use crate::jmap::{BlackColor, WhiteColor};

/// Colour pair of a face of `G0`, and of the regions lying over it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorPair {
    RB,
    BG,
    RG,
}

impl ColorPair {
    pub const ALL: [ColorPair; 3] = [ColorPair::RB, ColorPair::BG, ColorPair::RG];

    pub fn whites(self) -> [WhiteColor; 2] {
        match self {
            ColorPair::RB => [WhiteColor::Red, WhiteColor::Blue],
            ColorPair::BG => [WhiteColor::Blue, WhiteColor::Green],
            ColorPair::RG => [WhiteColor::Red, WhiteColor::Green],
        }
    }

    pub fn from_whites(a: WhiteColor, b: WhiteColor) -> Option<ColorPair> {
        ColorPair::ALL.into_iter().find(|p| {
            let w = p.whites();
            (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a)
        })
    }

    /// Singular fibres over this face: `lambda = 0` in RB, `1` in BG, infinity in RG.
    pub fn cross_label(self) -> PairLabel {
        match self {
            ColorPair::RB => PairLabel::S13,
            ColorPair::BG => PairLabel::S12,
            ColorPair::RG => PairLabel::S23,
        }
    }

    pub fn of_label(label: PairLabel) -> ColorPair {
        match label {
            PairLabel::S13 => ColorPair::RB,
            PairLabel::S12 => ColorPair::BG,
            PairLabel::S23 => ColorPair::RG,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ColorPair::RB => "RB",
            ColorPair::BG => "BG",
            ColorPair::RG => "RG",
        }
    }
}

/// A cross-ratio value as a projective pair `alpha/beta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Proj {
    pub alpha: Complex,
    pub beta: Complex,
}

impl Proj {
    pub fn finite(l: Complex) -> Self {
        Proj {
            alpha: l,
            beta: Complex::new(1.0, 0.0),
        }
    }

    pub fn value(&self) -> Option<Complex> {
        if self.beta.norm() == 0.0 {
            None
        } else {
            Some(self.alpha / self.beta)
        }
    }
}

/// One of the six edges of `G0`, numbered by the anharmonic map applied to the master arc:
/// `l`, `1/l`, `1-l`, `1/(1-l)`, `1-1/l`, `l/(l-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct G0Edge(pub usize);

impl G0Edge {
    pub fn all() -> [G0Edge; 6] {
        [
            G0Edge(0),
            G0Edge(1),
            G0Edge(2),
            G0Edge(3),
            G0Edge(4),
            G0Edge(5),
        ]
    }

    fn apply(self, l: Complex) -> Complex {
        let one = Complex::new(1.0, 0.0);
        match self.0 {
            0 => l,
            1 => l.inv(),
            2 => one - l,
            3 => (one - l).inv(),
            4 => one - l.inv(),
            _ => l / (l - one),
        }
    }

    fn inverse(self, l: Complex) -> Complex {
        match self.0 {
            3 => G0Edge(4).apply(l),
            4 => G0Edge(3).apply(l),
            _ => self.apply(l),
        }
    }

    /// Master arc `e^{i theta}`, `theta` from `pi/3` to `pi`.
    fn master(t: f64) -> Complex {
        Complex::from_polar(1.0, PI / 3.0 + t * 2.0 * PI / 3.0)
    }

    pub fn lambda(self, t: f64) -> Complex {
        self.apply(Self::master(t))
    }

    pub fn black(self) -> BlackColor {
        match self.0 {
            0 | 3 | 4 => BlackColor::Cyan,
            _ => BlackColor::Yellow,
        }
    }

    pub fn white(self) -> WhiteColor {
        match self.0 {
            0 | 1 => WhiteColor::Red,
            2 | 4 => WhiteColor::Green,
            _ => WhiteColor::Blue,
        }
    }

    /// Parameter of `l` on this edge when `l` lies on it within `tol`.
    pub fn locate(self, l: Complex, tol: f64) -> Option<(f64, f64)> {
        let m = self.inverse(l);
        if !(m.re.is_finite() && m.im.is_finite()) {
            return None;
        }
        let theta = m.arg();
        let radial = (m.norm() - 1.0).abs();
        let lo = PI / 3.0;
        let hi = PI;
        let off = if theta < lo {
            lo - theta
        } else if theta > hi {
            theta - hi
        } else {
            0.0
        };
        let miss = radial + off;
        if miss <= tol {
            Some((((theta - lo) / (hi - lo)).clamp(0.0, 1.0), miss))
        } else {
            None
        }
    }

    /// `j` along the edge as a function of the parameter; real, from 0 to 1.
    pub fn r(t: f64) -> f64 {
        let c = (PI / 3.0 + t * 2.0 * PI / 3.0).cos();
        2.0 * (2.0 * c - 1.0).powi(3) / (27.0 * (c - 1.0))
    }
}

/// Euclidean distance from `l` to `G0 = j^{-1}([0, 1])`: the arcs `|l| = 1` with
/// `Re l <= 1/2` and `|l - 1| = 1` with `Re l >= 1/2`, and the segment of
/// `Re l = 1/2` between the two black values.
pub fn distance_to_g0(l: Complex) -> f64 {
    let s3 = 3f64.sqrt() / 2.0;
    let blacks = [Complex::new(0.5, s3), Complex::new(0.5, -s3)];
    let to_blacks = blacks
        .iter()
        .map(|b| (l - b).norm())
        .fold(f64::INFINITY, f64::min);
    let arc = |centre: Complex, keep: &dyn Fn(Complex) -> bool| {
        let v = l - centre;
        if v.norm() == 0.0 {
            return 1.0;
        }
        let foot = centre + v / v.norm();
        if keep(foot) {
            (v.norm() - 1.0).abs()
        } else {
            to_blacks
        }
    };
    let left = arc(Complex::new(0.0, 0.0), &|z| z.re <= 0.5);
    let right = arc(Complex::new(1.0, 0.0), &|z| z.re >= 0.5);
    let segment = (l - Complex::new(0.5, l.im.clamp(-s3, s3))).norm();
    left.min(right).min(segment)
}

/// Where a lift ends: a vertex class of the dessin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Black(BlackColor),
    White(WhiteColor),
}

/// Arc from a face centre to one of its four boundary vertices, through `j > 1` or `j < 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StarArc {
    FirstWhite,
    SecondWhite,
    Cyan,
    Yellow,
}

impl StarArc {
    pub const ALL: [StarArc; 4] = [
        StarArc::FirstWhite,
        StarArc::SecondWhite,
        StarArc::Cyan,
        StarArc::Yellow,
    ];
}

/// Bulge of the auxiliary paths off the real axis.
const AUX_BULGE: f64 = 0.173;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaPath {
    /// A `G0` edge from its black end (`t = 0`) to its white end.
    Edge(G0Edge),
    /// Curved path inside a face from the centre to a white vertex, used to place crosses.
    Aux(ColorPair),
    /// Star arc from a face centre to a boundary vertex.
    Star(ColorPair, StarArc),
}

impl LambdaPath {
    pub fn at(&self, t: f64) -> Proj {
        let one = Complex::new(1.0, 0.0);
        let i = Complex::new(0.0, 1.0);
        let s3 = 3f64.sqrt() / 2.0;
        match *self {
            LambdaPath::Edge(e) => Proj::finite(e.lambda(t)),
            LambdaPath::Aux(face) => {
                let bump = i * AUX_BULGE * t * (1.0 - t);
                match face {
                    ColorPair::RB => Proj::finite(Complex::new(t / 2.0, 0.0) + bump),
                    ColorPair::BG => Proj::finite(Complex::new(1.0 - t / 2.0, 0.0) + bump),
                    ColorPair::RG => Proj {
                        alpha: one,
                        beta: Complex::new(t / 2.0, 0.0) + bump,
                    },
                }
            }
            LambdaPath::Star(face, arc) => match (face, arc) {
                (ColorPair::RB, StarArc::FirstWhite) => Proj::finite(Complex::new(-t, 0.0)),
                (ColorPair::RB, StarArc::SecondWhite) => Proj::finite(Complex::new(t / 2.0, 0.0)),
                (ColorPair::RB, StarArc::Cyan) => {
                    Proj::finite(one + Complex::from_polar(1.0, PI - t * PI / 3.0))
                }
                (ColorPair::RB, StarArc::Yellow) => {
                    Proj::finite(one + Complex::from_polar(1.0, -(PI - t * PI / 3.0)))
                }
                (ColorPair::BG, StarArc::FirstWhite) => {
                    Proj::finite(Complex::new(1.0 - t / 2.0, 0.0))
                }
                (ColorPair::BG, StarArc::SecondWhite) => Proj::finite(Complex::new(1.0 + t, 0.0)),
                (ColorPair::BG, StarArc::Cyan) => {
                    Proj::finite(Complex::from_polar(1.0, t * PI / 3.0))
                }
                (ColorPair::BG, StarArc::Yellow) => {
                    Proj::finite(Complex::from_polar(1.0, -t * PI / 3.0))
                }
                (ColorPair::RG, StarArc::FirstWhite) => Proj {
                    alpha: one,
                    beta: Complex::new(-t, 0.0),
                },
                (ColorPair::RG, StarArc::SecondWhite) => Proj {
                    alpha: one,
                    beta: Complex::new(t / 2.0, 0.0),
                },
                (ColorPair::RG, StarArc::Cyan) => Proj {
                    alpha: Complex::new(t / 2.0, s3),
                    beta: Complex::new(t, 0.0),
                },
                (ColorPair::RG, StarArc::Yellow) => Proj {
                    alpha: Complex::new(t / 2.0, -s3),
                    beta: Complex::new(t, 0.0),
                },
            },
        }
    }

    /// Vertex class reached at `t = 1`.
    pub fn target(&self) -> Target {
        match *self {
            LambdaPath::Edge(e) => Target::White(e.white()),
            LambdaPath::Aux(face) => match face {
                ColorPair::RB | ColorPair::BG => Target::White(WhiteColor::Blue),
                ColorPair::RG => Target::White(WhiteColor::Green),
            },
            LambdaPath::Star(face, arc) => match arc {
                StarArc::FirstWhite => Target::White(face.whites()[0]),
                StarArc::SecondWhite => Target::White(face.whites()[1]),
                StarArc::Cyan => Target::Black(BlackColor::Cyan),
                StarArc::Yellow => Target::Black(BlackColor::Yellow),
            },
        }
    }

    /// Parameter of a cross-ratio value lying on this star arc, if it does within `tol`.
    pub fn locate_on_star(
        face: ColorPair,
        arc: StarArc,
        l: Option<Complex>,
        tol: f64,
    ) -> Option<f64> {
        let l = l?;
        let path = LambdaPath::Star(face, arc);
        // the arcs are simple curves of bounded length; a dense scan followed by
        // golden-section refinement is plenty for the handful of critical values
        let dist = |t: f64| -> f64 {
            match path.at(t).value() {
                Some(v) => chord(v, l),
                None => chord_inf(l),
            }
        };
        let samples = 400;
        let (mut best_t, mut best_d) = (0.0, f64::INFINITY);
        for k in 0..=samples {
            let t = k as f64 / samples as f64;
            let d = dist(t);
            if d < best_d {
                best_d = d;
                best_t = t;
            }
        }
        let (mut a, mut b) = (
            (best_t - 1.0 / samples as f64).max(0.0),
            (best_t + 1.0 / samples as f64).min(1.0),
        );
        let g = (5f64.sqrt() - 1.0) / 2.0;
        for _ in 0..80 {
            let c = b - g * (b - a);
            let d = a + g * (b - a);
            if dist(c) < dist(d) {
                b = d;
            } else {
                a = c;
            }
        }
        let t = 0.5 * (a + b);
        // endpoints are vertices or crosses, shared between arcs
        if dist(t) <= tol && t > 1e-6 && t < 1.0 - 1e-6 {
            Some(t)
        } else {
            None
        }
    }
}

/// Chordal distance between two finite values on the sphere.
fn chord(a: Complex, b: Complex) -> f64 {
    2.0 * (a - b).norm() / ((1.0 + a.norm_sqr()).sqrt() * (1.0 + b.norm_sqr()).sqrt())
}

fn chord_inf(a: Complex) -> f64 {
    2.0 / (1.0 + a.norm_sqr()).sqrt()
}

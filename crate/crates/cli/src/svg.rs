//! Deterministic SVG drawings of dessins and discriminant loci.
//!
//! The sphere is seen from a projection centre: a rotation brings the centre
//! to `0`, and `z -> z / (1 + |z|)` squeezes the plane into the unit disk so the
//! antipode of the centre lands on the boundary circle. With the default centre
//! `x = 0`, the point at infinity is the boundary circle.

use std::fmt::Write;

use crtc_dessins::analysis::LocusPoint;
use crtc_dessins::dessin::sphere::{fibonacci_sphere, RotatedChart};
use crtc_dessins::dessin::{Dessin, SpherePoint, VertexKind};
use crtc_dessins::jmap::{BlackColor, WhiteColor};
use crtc_dessins::Complex;

use crate::error::CliError;

pub const MIN_CENTRE_DISTANCE: f64 = 0.1;
const CENTRE_CANDIDATES: usize = 512;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle {
    pub size: f64,
    pub margin: f64,
    pub edge_width: f64,
    pub marker_radius: f64,
    /// Preferred projection centre; `None` is `x = 0`.
    pub centre: Option<SpherePoint>,
    pub suppress_bivalent: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            size: 600.0,
            margin: 20.0,
            edge_width: 1.2,
            marker_radius: 5.0,
            centre: None,
            suppress_bivalent: false,
        }
    }
}

fn black_fill(c: BlackColor) -> &'static str {
    match c {
        BlackColor::Cyan => "#00b7eb",
        BlackColor::Yellow => "#e6b800",
    }
}

fn white_stroke(c: WhiteColor) -> &'static str {
    match c {
        WhiteColor::Red => "#d62728",
        WhiteColor::Blue => "#1f77b4",
        WhiteColor::Green => "#2ca02c",
    }
}

const CROSS: &str = "#d62728";

enum Chart {
    Plane,
    Rotated(RotatedChart),
}

struct Projection {
    chart: Chart,
    cx: f64,
    cy: f64,
    radius: f64,
}

impl Projection {
    fn disk(&self, p: &SpherePoint) -> Complex {
        let z = match &self.chart {
            Chart::Plane => match p.x() {
                Some(z) => z,
                None => return Complex::new(1.0, 0.0),
            },
            Chart::Rotated(c) => c.project(p),
        };
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > 1e12 {
            let dir = if z.norm() > 0.0 && z.re.is_finite() && z.im.is_finite() {
                z / z.norm()
            } else {
                Complex::new(1.0, 0.0)
            };
            return dir;
        }
        z / (1.0 + z.norm())
    }

    fn canvas(&self, p: &SpherePoint) -> (f64, f64) {
        let w = self.disk(p);
        (self.cx + self.radius * w.re, self.cy - self.radius * w.im)
    }
}

/// Projection centre: the preferred one, else the nearest candidate on a
/// rotated grid that keeps `MIN_CENTRE_DISTANCE` from every vertex.
fn choose_centre(points: &[SpherePoint], preferred: SpherePoint) -> Result<SpherePoint, CliError> {
    let clear = |c: &SpherePoint| points.iter().all(|p| p.angle_to(c) >= MIN_CENTRE_DISTANCE);
    if clear(&preferred) {
        return Ok(preferred);
    }
    let mut candidates: Vec<(f64, usize, SpherePoint)> = fibonacci_sphere(CENTRE_CANDIDATES)
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c.angle_to(&preferred), i, c))
        .collect();
    candidates.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
    candidates
        .into_iter()
        .map(|c| c.2)
        .find(clear)
        .ok_or(CliError::ProjectionClash)
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn header(out: &mut String, size: f64) {
    let s = fmt(size);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<rect class="background" x="0" y="0" width="{s}" height="{s}" fill="white"/>"#
    )
    .unwrap();
}

pub fn render_dessin(d: &Dessin, style: &RenderStyle) -> Result<String, CliError> {
    let positions: Vec<SpherePoint> = d.vertices.iter().map(|v| v.position).collect();
    let preferred = style
        .centre
        .unwrap_or_else(|| SpherePoint::from_x(Complex::default()));
    let centre = choose_centre(&positions, preferred)?;
    let origin = SpherePoint::from_x(Complex::default());
    let chart = if centre == origin {
        Chart::Plane
    } else {
        Chart::Rotated(RotatedChart::new(centre.antipode()))
    };
    let half = style.size / 2.0;
    let proj = Projection {
        chart,
        cx: half,
        cy: half,
        radius: half - style.margin,
    };

    let mut out = String::new();
    header(&mut out, style.size);
    writeln!(
        out,
        r##"<circle class="boundary" cx="{}" cy="{}" r="{}" fill="none" stroke="#bbbbbb" stroke-width="1"/>"##,
        fmt(proj.cx),
        fmt(proj.cy),
        fmt(proj.radius)
    )
    .unwrap();

    writeln!(
        out,
        r#"<g class="edges" fill="none" stroke="black" stroke-width="{}">"#,
        fmt(style.edge_width)
    )
    .unwrap();
    for e in &d.edges {
        let mut pts = String::new();
        for (k, p) in e.strand.iter().enumerate() {
            let (x, y) = proj.canvas(p);
            if k > 0 {
                pts.push(' ');
            }
            write!(pts, "{},{}", fmt(x), fmt(y)).unwrap();
        }
        writeln!(
            out,
            r#"<polyline class="edge" data-edge="{}" points="{pts}"/>"#,
            e.id
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    let r = style.marker_radius;
    writeln!(out, r#"<g class="vertices">"#).unwrap();
    for v in &d.vertices {
        let (x, y) = proj.canvas(&v.position);
        let (xs, ys) = (fmt(x), fmt(y));
        match v.kind {
            VertexKind::Black(c) => writeln!(
                out,
                r#"<circle class="black" data-vertex="{}" cx="{xs}" cy="{ys}" r="{}" fill="{}" stroke="black" stroke-width="0.8"/>"#,
                v.id,
                fmt(r),
                black_fill(c)
            )
            .unwrap(),
            VertexKind::White(c) => {
                if style.suppress_bivalent && v.degree == 2 {
                    continue;
                }
                writeln!(
                    out,
                    r#"<circle class="white" data-vertex="{}" cx="{xs}" cy="{ys}" r="{}" fill="white" stroke="{}" stroke-width="2"/>"#,
                    v.id,
                    fmt(r),
                    white_stroke(c)
                )
                .unwrap()
            }
            VertexKind::Cross(_) => writeln!(
                out,
                r#"<path class="cross" data-vertex="{}" d="M{} {} L{} {} M{} {} L{} {}" stroke="{CROSS}" stroke-width="2"/>"#,
                v.id,
                fmt(x - r),
                fmt(y - r),
                fmt(x + r),
                fmt(y + r),
                fmt(x - r),
                fmt(y + r),
                fmt(x + r),
                fmt(y - r)
            )
            .unwrap(),
            VertexKind::Monochrome => writeln!(
                out,
                r##"<rect class="monochrome" data-vertex="{}" x="{}" y="{}" width="{}" height="{}" fill="#777777"/>"##,
                v.id,
                fmt(x - r * 0.7),
                fmt(y - r * 0.7),
                fmt(r * 1.4),
                fmt(r * 1.4)
            )
            .unwrap(),
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

/// Scatter of the flagged parameters in the complex plane, with axes.
pub fn render_locus(points: &[LocusPoint], style: &RenderStyle) -> String {
    let flagged: Vec<&LocusPoint> = points.iter().filter(|p| p.flagged).collect();
    let (mut lo, mut hi) = (Complex::new(-1.0, -1.0), Complex::new(1.0, 1.0));
    if !points.is_empty() {
        lo = Complex::new(f64::INFINITY, f64::INFINITY);
        hi = Complex::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo = Complex::new(lo.re.min(p.a.re), lo.im.min(p.a.im));
            hi = Complex::new(hi.re.max(p.a.re), hi.im.max(p.a.im));
        }
    }
    let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-9);
    let inner = style.size - 2.0 * style.margin;
    let to_canvas = |a: Complex| {
        (
            style.margin + (a.re - lo.re) / span * inner,
            style.size - style.margin - (a.im - lo.im) / span * inner,
        )
    };
    let mut out = String::new();
    header(&mut out, style.size);
    let axis_re = if lo.im <= 0.0 && hi.im >= 0.0 {
        0.0
    } else {
        lo.im
    };
    let axis_im = if lo.re <= 0.0 && hi.re >= 0.0 {
        0.0
    } else {
        lo.re
    };
    let (x0, y0) = to_canvas(Complex::new(lo.re, axis_re));
    let (x1, _) = to_canvas(Complex::new(lo.re + span, axis_re));
    let (ax, ay0) = to_canvas(Complex::new(axis_im, lo.im));
    let (_, ay1) = to_canvas(Complex::new(axis_im, lo.im + span));
    writeln!(
        out,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
        fmt(x0),
        fmt(y0),
        fmt(x1),
        fmt(y0)
    )
    .unwrap();
    writeln!(
        out,
        r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
        fmt(ax),
        fmt(ay0),
        fmt(ax),
        fmt(ay1)
    )
    .unwrap();
    writeln!(out, r#"<g class="locus">"#).unwrap();
    for p in flagged {
        let (x, y) = to_canvas(p.a);
        let fill = if p.degenerate { "#999999" } else { "#1f77b4" };
        writeln!(
            out,
            r#"<circle class="{}" cx="{}" cy="{}" r="1.5" fill="{fill}"/>"#,
            if p.degenerate {
                "degenerate"
            } else {
                "flagged"
            },
            fmt(x),
            fmt(y)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

//! Points of the Riemann sphere as unit vectors, with the two standard charts.

use crate::algebra::Complex;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpherePoint {
    pub v: [f64; 3],
}

impl SpherePoint {
    pub const INFINITY: SpherePoint = SpherePoint { v: [0.0, 0.0, 1.0] };

    /// Inverse stereographic projection from the north pole.
    pub fn from_x(x: Complex) -> Self {
        let r2 = x.norm_sqr();
        if !r2.is_finite() {
            return Self::INFINITY;
        }
        if r2 > 1.0 {
            return Self::from_w(x.inv());
        }
        let d = 1.0 + r2;
        SpherePoint {
            v: [2.0 * x.re / d, 2.0 * x.im / d, (r2 - 1.0) / d],
        }
    }

    /// Point with coordinate `w = 1/x` in the chart at infinity.
    pub fn from_w(w: Complex) -> Self {
        let r2 = w.norm_sqr();
        let d = 1.0 + r2;
        SpherePoint {
            v: [2.0 * w.re / d, -2.0 * w.im / d, (1.0 - r2) / d],
        }
    }

    pub fn from_option(x: Option<Complex>) -> Self {
        x.map_or(Self::INFINITY, Self::from_x)
    }

    pub fn from_vec(v: [f64; 3]) -> Self {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        SpherePoint {
            v: [v[0] / n, v[1] / n, v[2] / n],
        }
    }

    /// Affine coordinate, `None` at infinity.
    pub fn x(&self) -> Option<Complex> {
        let [a, b, c] = self.v;
        if c <= 0.0 {
            Some(Complex::new(a, b) / (1.0 - c))
        } else {
            let w = Complex::new(a, -b) / (1.0 + c);
            if w.norm() == 0.0 {
                None
            } else {
                Some(w.inv())
            }
        }
    }

    /// Coordinate in the chart at infinity, `None` at the origin.
    pub fn w(&self) -> Option<Complex> {
        let [a, b, c] = self.v;
        if c >= 0.0 {
            Some(Complex::new(a, -b) / (1.0 + c))
        } else {
            let x = Complex::new(a, b) / (1.0 - c);
            if x.norm() == 0.0 {
                None
            } else {
                Some(x.inv())
            }
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.v[2] >= 1.0 - 1e-15
    }

    pub fn dot(&self, o: &SpherePoint) -> f64 {
        self.v[0] * o.v[0] + self.v[1] * o.v[1] + self.v[2] * o.v[2]
    }

    /// Euclidean distance in R^3.
    pub fn chordal(&self, o: &SpherePoint) -> f64 {
        let d = [self.v[0] - o.v[0], self.v[1] - o.v[1], self.v[2] - o.v[2]];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    }

    /// Great-circle distance.
    pub fn angle_to(&self, o: &SpherePoint) -> f64 {
        2.0 * (0.5 * self.chordal(o)).min(1.0).asin()
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            v: [-self.v[0], -self.v[1], -self.v[2]],
        }
    }

    /// Displacement of `self` from `base` in the holomorphic chart that keeps `base` small.
    pub fn local_offset(&self, base: &SpherePoint) -> Complex {
        if base.v[2] <= 0.0 {
            let b = base.x().unwrap_or_default();
            self.x().map_or(Complex::new(1e300, 0.0), |x| x - b)
        } else {
            let b = base.w().unwrap_or_default();
            self.w().map_or(Complex::new(1e300, 0.0), |w| w - b)
        }
    }

    /// Direction of `self` seen from `base`, in the chart used by `local_offset`.
    pub fn angle_from(&self, base: &SpherePoint) -> f64 {
        self.local_offset(base).arg()
    }
}

/// Stereographic chart centred away from a chosen pole `north`: orientation
/// preserving, sends `north` to infinity.
#[derive(Clone, Copy, Debug)]
pub struct RotatedChart {
    e1: [f64; 3],
    e2: [f64; 3],
    north: [f64; 3],
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

impl RotatedChart {
    pub fn new(north: SpherePoint) -> Self {
        let n = north.v;
        let helper = if n[2].abs() < 0.9 {
            [0.0, 0.0, 1.0]
        } else {
            [1.0, 0.0, 0.0]
        };
        let e1 = SpherePoint::from_vec(cross(helper, n)).v;
        let e2 = cross(n, e1);
        RotatedChart { e1, e2, north: n }
    }

    pub fn project(&self, p: &SpherePoint) -> Complex {
        let d = |a: [f64; 3]| a[0] * p.v[0] + a[1] * p.v[1] + a[2] * p.v[2];
        let denom = (1.0 - d(self.north)).max(1e-300);
        Complex::new(d(self.e1), d(self.e2)) / denom
    }
}

/// `count` nearly uniform points on the sphere.
pub fn fibonacci_sphere(count: usize) -> Vec<SpherePoint> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
            let r = (1.0 - z * z).sqrt();
            let phi = golden * i as f64;
            SpherePoint {
                v: [r * phi.cos(), r * phi.sin(), z],
            }
        })
        .collect()
}

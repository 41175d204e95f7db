//! Example curves with their published region-size lists.

#![allow(dead_code)]

use crtc_dessins::curve::make_curve;
use crtc_dessins::{Poly, TrigonalCurve};

pub struct Example {
    pub name: &'static str,
    pub y: [&'static [f64]; 3],
    pub sizes: &'static [usize],
}

impl Example {
    pub fn curve(&self) -> TrigonalCurve {
        make_curve(
            Poly::from_real(self.y[0]),
            Poly::from_real(self.y[1]),
            Poly::from_real(self.y[2]),
        )
        .expect("example curve is valid")
    }
}

macro_rules! ex {
    ($name:expr, $a:expr, $b:expr, $c:expr, $s:expr) => {
        Example {
            name: $name,
            y: [&$a, &$b, &$c],
            sizes: &$s,
        }
    };
}

pub const LINEAR: Example = ex!("(x, -x, 1)", [0.0, 1.0], [0.0, -1.0], [1.0], [2, 2, 2]);

pub const CUBIC_FIG5: Example = ex!(
    "(x^3, -x^2, 1)",
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0],
    [1.0],
    [6, 6, 2, 2, 2]
);

/// Quadratic examples as printed, in table order.
pub const DEGREE_TWO: [Example; 3] = [
    ex!(
        "(x^2-1, -x, x)",
        [-1.0, 0.0, 1.0],
        [0.0, -1.0],
        [0.0, 1.0],
        [4, 4, 2, 2]
    ),
    ex!(
        "(x^2-1, -x, x+4)",
        [-1.0, 0.0, 1.0],
        [0.0, -1.0],
        [4.0, 1.0],
        [4, 2, 2, 2, 2]
    ),
    ex!(
        "(x^2-1, -x-0.25, x-0.25)",
        [-1.0, 0.0, 1.0],
        [-0.25, -1.0],
        [-0.25, 1.0],
        [2, 2, 2, 2, 2, 2]
    ),
];

pub const DEGREE_THREE: [Example; 8] = [
    ex!(
        "t3-1",
        [1.0, 0.0, 1.0, 1.0],
        [-2.0, 0.0, -2.0],
        [-2.0],
        [6, 6, 2, 2, 2]
    ),
    ex!(
        "t3-2",
        [1.0, 0.0, 1.0, 1.0],
        [1.0, 0.0, -2.0],
        [-2.0],
        [6, 4, 4, 2, 2]
    ),
    ex!(
        "t3-3",
        [1.0, 0.0, 1.0, 1.0],
        [0.0, 0.0, -2.0],
        [-2.0],
        [6, 4, 2, 2, 2, 2]
    ),
    ex!(
        "t3-4",
        [0.0, 0.0, 1.0, 1.0],
        [0.0, -1.0, 2.0, 1.0],
        [-1.5],
        [6, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t3-5",
        [2.0, -6.0, -3.0, 2.0],
        [3.0, -2.0, -4.0],
        [3.5, -1.0, 3.0],
        [4, 4, 4, 2, 2, 2]
    ),
    ex!(
        "t3-6",
        [1.0, 1.0, 3.0, 1.0],
        [2.0, 1.0, -1.0],
        [2.0, -3.0, -9.0, -2.0],
        [4, 4, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t3-7",
        [1.0, 1.0, 3.0, 1.0],
        [2.0, 1.0, -1.0],
        [2.0, -3.06, -9.0, -2.0],
        [4, 2, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t3-8",
        [1.0, -3.0, 0.0, 1.0],
        [0.0, -3.0, 3.0],
        [0.0],
        [2, 2, 2, 2, 2, 2, 2, 2, 2]
    ),
];

pub const DEGREE_FOUR: [Example; 22] = [
    ex!(
        "t11-1",
        [126.0, 9.0, 1.0, 2.0, 1.0],
        [-0.5, 4.4, -4.0, -3.0, 3.0],
        [4.0, 2.0, 1.0, 3.0, -2.0],
        [8, 8, 2, 2, 2, 2]
    ),
    ex!(
        "t11-2",
        [-3.0, 3.0, -3.0, 3.0, 1.0],
        [-1.0, 2.0, 2.0, -2.0, 2.0],
        [-1.0, 1.0, -1.0, 1.0, -1.0],
        [8, 6, 4, 2, 2, 2]
    ),
    ex!(
        "t11-3",
        [-3.0, 3.0, -3.0, 3.0, 1.0],
        [-1.0, -2.0, 2.0, -2.0, 2.0],
        [-1.0, 1.0, -1.0, 1.0, -1.0],
        [8, 6, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-4",
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [-1.0, 0.0, 2.0],
        [-16.0, 0.0, 8.0],
        [8, 4, 4, 4, 2, 2]
    ),
    ex!(
        "t11-5",
        [13.0, 0.0, -6.0, -0.8, 1.0],
        [0.0, 1.0, 1.0, -1.0],
        [-5.0, 9.0, 8.0],
        [8, 4, 4, 2, 2, 2, 2]
    ),
    ex!(
        "t11-6",
        [-3.0, 3.0, -3.0, 3.0, 1.0],
        [-1.0, -0.5, 2.0, -2.0, 2.0],
        [-1.0, 1.0, -1.0, 1.0, -1.0],
        [8, 4, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-7",
        [-3.0, 3.0, 3.0, 3.0, -15.0],
        [-1.0, 2.0, 2.0, 0.0, 2.0],
        [-1.0, 1.0, 1.0, 1.0, -1.0],
        [8, 2, 2, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-8",
        [-10.0, 0.0, -6.0, -0.8, 1.0],
        [6.0, 1.0, 1.0, -1.0],
        [-16.0, 9.0, 8.0],
        [6, 6, 6, 2, 2, 2]
    ),
    ex!(
        "t11-9",
        [-2.0, -3.0, 0.0, 0.0, 1.0],
        [6.0, 0.0, 1.0, 1.5, -0.5],
        [-16.0, 0.0, 8.0, -1.0],
        [6, 6, 4, 4, 2, 2]
    ),
    ex!(
        "t11-10",
        [-3.0, 3.0, -3.0, 3.0, 1.0],
        [-1.0, 2.0, 2.0, 8.5, 2.0],
        [-1.0, 1.0, -1.0, 1.0, -1.0],
        [6, 6, 4, 2, 2, 2, 2]
    ),
    ex!(
        "t11-11",
        [-3.0, 3.0, -3.0, 3.0, 1.0],
        [-1.0, 2.0, 2.0, 10.175, 2.0],
        [-1.0, 1.0, -1.0, 1.0, -1.0],
        [6, 6, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-12",
        [-2.0, -3.0, 0.0, 0.0, 1.0],
        [6.0, 0.0, 1.0, 1.5, -0.5],
        [-16.0, 0.0, 8.0],
        [6, 4, 4, 4, 2, 2, 2]
    ),
    ex!(
        "t11-13",
        [-3.0, 3.0, -3.0, 3.0, 1.0],
        [-0.95, -3.0, 2.0, -2.0, 2.0],
        [-1.0, 1.0, -1.0, 1.0, -1.0],
        [6, 4, 4, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-14",
        [0.0, 6.63, 0.0, 0.0, 1.0],
        [-11.0, 0.35, 2.0],
        [-16.0, 0.0, 8.0],
        [6, 4, 2, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-15",
        [4.9, 9.0, 1.0, 2.0, 1.0],
        [-0.5, 4.4, -4.0, -3.0, 3.0],
        [4.0, 2.0, 1.0, 3.0, -2.0],
        [6, 2, 2, 2, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-16",
        [9.0, -1.0, -7.0, 2.0, 1.0],
        [-7.0, 4.0, 3.0, -1.0, 2.0],
        [1.0, 3.0, 1.0, 2.0, -1.0],
        [4, 4, 4, 4, 4, 4]
    ),
    ex!(
        "t11-17",
        [9.0, 2.0, -13.0, 2.0, 1.0],
        [-7.0, 3.0, 3.0, -1.0, 2.0],
        [1.0, 3.0, 1.0, 2.0, -1.0],
        [4, 4, 4, 4, 4, 2, 2]
    ),
    ex!(
        "t11-18",
        [0.0, 0.0, 0.0, 0.0, 1.0],
        [-5.0, 0.0, 2.0],
        [-16.0, 0.0, 8.0],
        [4, 4, 4, 4, 2, 2, 2, 2]
    ),
    ex!(
        "t11-19",
        [-5.5, 0.0, 0.0, 0.0, 1.0],
        [-5.0, 0.0, 2.0],
        [-16.0, 0.0, 8.0],
        [4, 4, 4, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-20",
        [-4.0, 0.0, 0.0, 0.0, 1.0],
        [-1.0, 0.0, 2.0],
        [-16.0, 0.0, 8.0],
        [4, 4, 2, 2, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-21",
        [-8.5, 0.0, 0.0, 0.0, 1.0],
        [-1.0, 0.0, 2.0],
        [-16.0, 0.0, 8.0],
        [4, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]
    ),
    ex!(
        "t11-22",
        [0.0, 4.0, -6.0, 0.0, 1.0],
        [1.0, 0.0, -6.0, 4.0],
        [0.0],
        [2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]
    ),
];

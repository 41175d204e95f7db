//! The cross-ratio, the j-invariant and the coloured special points of a curve.

use std::f64::consts::PI;

use crate::algebra::{AlgebraError, Complex, Poly, RationalMap, RootOptions, RootSet, DEFAULT_TOL};
use crate::curve::{singular_fibers_with, SingularFibers, TrigonalCurve};

/// Relative size below which `P`, `Q` or `P - Q` count as vanishing.
const POLE_REL: f64 = 1e-12;
/// Realness and interior margin for monochrome critical values.
pub const MONO_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlackColor {
    Cyan,
    Yellow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WhiteColor {
    Red,
    Blue,
    Green,
}

impl BlackColor {
    pub const ALL: [BlackColor; 2] = [BlackColor::Cyan, BlackColor::Yellow];

    /// `e^{+i pi/3}` for cyan, `e^{-i pi/3}` for yellow.
    pub fn lambda(self) -> Complex {
        match self {
            BlackColor::Cyan => Complex::from_polar(1.0, PI / 3.0),
            BlackColor::Yellow => Complex::from_polar(1.0, -PI / 3.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BlackColor::Cyan => "cyan",
            BlackColor::Yellow => "yellow",
        }
    }
}

impl WhiteColor {
    pub const ALL: [WhiteColor; 3] = [WhiteColor::Red, WhiteColor::Blue, WhiteColor::Green];

    pub fn lambda(self) -> Complex {
        match self {
            WhiteColor::Red => Complex::new(-1.0, 0.0),
            WhiteColor::Blue => Complex::new(0.5, 0.0),
            WhiteColor::Green => Complex::new(2.0, 0.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WhiteColor::Red => "red",
            WhiteColor::Blue => "blue",
            WhiteColor::Green => "green",
        }
    }
}

/// A value of `j`, with poles kept symbolic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum JValue {
    Finite(Complex),
    Pole,
}

impl JValue {
    pub fn finite(self) -> Option<Complex> {
        match self {
            JValue::Finite(z) => Some(z),
            JValue::Pole => None,
        }
    }
}

pub fn j_of_lambda(lambda: Complex) -> JValue {
    let one = Complex::new(1.0, 0.0);
    let den = lambda * lambda * (lambda - one) * (lambda - one) * 27.0;
    if den.norm() == 0.0 {
        return JValue::Pole;
    }
    let s = lambda * lambda - lambda + one;
    JValue::Finite(s * s * s * 4.0 / den)
}

/// `j` at `x`, computed through `lambda = P(x)/Q(x)`.
pub fn j_eval(c: &TrigonalCurve, x: Complex) -> JValue {
    let p = c.p.eval(x);
    let q = c.q.eval(x);
    let m = p.norm().max(q.norm());
    if m == 0.0
        || p.norm() <= POLE_REL * m
        || q.norm() <= POLE_REL * m
        || (p - q).norm() <= POLE_REL * m
    {
        return JValue::Pole;
    }
    j_of_lambda(p / q)
}

/// `j` as a rational map `4(P^2 - PQ + Q^2)^3 / (27 P^2 Q^2 (P - Q)^2)`.
pub fn j_rational(c: &TrigonalCurve) -> RationalMap {
    let (num, den) = j_parts(c);
    RationalMap { num, den }
}

fn j_parts(c: &TrigonalCurve) -> (Poly, Poly) {
    let (p, q) = (&c.p, &c.q);
    let s = &(&(p * p) - &(p * q)) + &(q * q);
    let num = s.pow(3).scale(Complex::new(4.0, 0.0));
    let pq = p - q;
    let den = (&(&(p * p) * &(q * q)) * &(&pq * &pq)).scale(Complex::new(27.0, 0.0));
    (num, den)
}

/// `4(P^2 - PQ + Q^2)^3 - 27 r P^2 Q^2 (P - Q)^2`.
pub fn level_set_polynomial(c: &TrigonalCurve, r: f64) -> Poly {
    let (num, den) = j_parts(c);
    &num - &den.scale(Complex::new(r, 0.0))
}

/// Solutions of `j = r` including those at infinity.
pub fn level_set(c: &TrigonalCurve, r: f64) -> Result<RootSet, AlgebraError> {
    let poly = level_set_polynomial(c, r);
    RootSet::of_form(
        &poly,
        6 * c.n,
        &RootOptions {
            tol: DEFAULT_TOL,
            ..RootOptions::default()
        },
    )
}

/// A ramification point of the cross-ratio.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaCritical {
    /// `None` for the point at infinity.
    pub x: Option<Complex>,
    /// `None` when the cross-ratio is infinite there.
    pub lambda: Option<Complex>,
    /// Local degree of the cross-ratio, at least 2.
    pub index: usize,
}

impl LambdaCritical {
    pub fn j(&self) -> JValue {
        match self.lambda {
            Some(l) if l.norm() > POLE_REL && (l - Complex::new(1.0, 0.0)).norm() > POLE_REL => {
                j_of_lambda(l)
            }
            _ => JValue::Pole,
        }
    }
}

/// Every ramification point of `lambda = P/Q`, including the one at infinity
/// when present. Indices satisfy `sum (index - 1) = 2n - 2`.
pub fn lambda_critical_points(
    c: &TrigonalCurve,
    opts: &RootOptions,
) -> Result<Vec<LambdaCritical>, AlgebraError> {
    let numer = c.lambda().derivative_numerator();
    let mut out = Vec::new();
    if numer.degree() > 0 {
        let set = crate::algebra::roots_with(&numer, opts)?;
        for r in set.roots {
            let p = c.p.eval(r.value);
            let q = c.q.eval(r.value);
            let lambda = if q.norm() <= POLE_REL * p.norm().max(q.norm()) {
                None
            } else {
                Some(p / q)
            };
            out.push(LambdaCritical {
                x: Some(r.value),
                lambda,
                index: r.multiplicity + 1,
            });
        }
    }
    let n = c.n as isize;
    let (dp, dq) = (c.p.degree(), c.q.degree());
    let (lambda, index) = if dp < n {
        (Some(Complex::default()), (n - dp) as usize)
    } else if dq < n {
        (None, (n - dq) as usize)
    } else {
        let l = c.p.leading() / c.q.leading();
        let rest = &c.p - &c.q.scale(l);
        (Some(l), (n - rest.degree().max(0)) as usize)
    };
    if index >= 2 {
        out.push(LambdaCritical {
            x: None,
            lambda,
            index,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonochromePoint {
    /// `None` for the point at infinity.
    pub x: Option<Complex>,
    pub lambda: Complex,
    pub jvalue: f64,
    pub index: usize,
}

/// Whether a critical value counts as monochrome: real within tolerance and strictly inside (0, 1).
pub fn is_monochrome_value(j: Complex) -> bool {
    j.im.abs() <= MONO_TOL * (1.0 + j.norm()) && j.re > MONO_TOL && j.re < 1.0 - MONO_TOL
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialPoints {
    /// Roots of `P - e^{+i pi/3} Q` and `P - e^{-i pi/3} Q`.
    pub black: [RootSet; 2],
    /// Roots of `P + Q`, `2P - Q`, `P - 2Q`.
    pub white: [RootSet; 3],
    pub crosses: SingularFibers,
    pub monochrome: Vec<MonochromePoint>,
    pub lambda_critical: Vec<LambdaCritical>,
}

impl SpecialPoints {
    pub fn black_set(&self, color: BlackColor) -> &RootSet {
        &self.black[color as usize]
    }

    pub fn white_set(&self, color: WhiteColor) -> &RootSet {
        &self.white[color as usize]
    }

    /// Number of roots at infinity per vertex class, black first.
    pub fn infinity_deficits(&self) -> [usize; 5] {
        [
            self.black[0].degree_deficit,
            self.black[1].degree_deficit,
            self.white[0].degree_deficit,
            self.white[1].degree_deficit,
            self.white[2].degree_deficit,
        ]
    }
}

/// Distance in the cross-ratio plane at which a critical value is taken to be a vertex value.
const RECONCILE_TOL: f64 = 1e-7;

/// Replace the `index` roots nearest `x` by one root of that multiplicity at `x`.
fn reconcile(set: &mut RootSet, x: Complex, index: usize) {
    let mut flat: Vec<Complex> = set
        .roots
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect();
    if flat.len() < index {
        return;
    }
    flat.sort_by(|a, b| (a - x).norm().partial_cmp(&(b - x).norm()).unwrap());
    if (flat[index - 1] - x).norm() > 1e-3 * (1.0 + x.norm()) {
        return;
    }
    let mut roots: Vec<crate::algebra::Root> = Vec::new();
    for v in flat.into_iter().skip(index) {
        match roots.iter_mut().find(|r| r.value == v) {
            Some(r) => r.multiplicity += 1,
            None => roots.push(crate::algebra::Root {
                value: v,
                multiplicity: 1,
            }),
        }
    }
    roots.push(crate::algebra::Root {
        value: x,
        multiplicity: index,
    });
    roots.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .unwrap()
    });
    set.roots = roots;
}

/// The binary form whose roots are the points where `lambda = value`.
pub fn lambda_fibre(c: &TrigonalCurve, value: Complex) -> Poly {
    c.pencil(value, Complex::new(1.0, 0.0))
}

pub fn special_points(c: &TrigonalCurve) -> Result<SpecialPoints, AlgebraError> {
    special_points_with(c, &RootOptions::default())
}

pub fn special_points_with(
    c: &TrigonalCurve,
    opts: &RootOptions,
) -> Result<SpecialPoints, AlgebraError> {
    let fibre = |l: Complex| RootSet::of_form(&lambda_fibre(c, l), c.n, opts);
    let mut black = [
        fibre(BlackColor::Cyan.lambda())?,
        fibre(BlackColor::Yellow.lambda())?,
    ];
    let mut white = [
        fibre(WhiteColor::Red.lambda())?,
        fibre(WhiteColor::Blue.lambda())?,
        fibre(WhiteColor::Green.lambda())?,
    ];
    let mut crosses = singular_fibers_with(c, opts)?;
    let lambda_critical = lambda_critical_points(c, opts)?;
    for cp in &lambda_critical {
        let Some(x) = cp.x else { continue };
        let near = |v: Complex| cp.lambda.is_some_and(|l| (l - v).norm() <= RECONCILE_TOL);
        let set = if let Some(k) = BlackColor::ALL.iter().position(|b| near(b.lambda())) {
            &mut black[k]
        } else if let Some(k) = WhiteColor::ALL.iter().position(|w| near(w.lambda())) {
            &mut white[k]
        } else if near(Complex::default()) {
            &mut crosses.s13
        } else if near(Complex::new(1.0, 0.0)) {
            &mut crosses.s12
        } else if cp.lambda.is_none() {
            &mut crosses.s23
        } else {
            continue;
        };
        reconcile(set, x, cp.index);
    }
    let monochrome = lambda_critical
        .iter()
        .filter_map(|cp| match (cp.j(), cp.lambda) {
            (JValue::Finite(j), Some(l)) if is_monochrome_value(j) => Some(MonochromePoint {
                x: cp.x,
                lambda: l,
                jvalue: j.re,
                index: cp.index,
            }),
            _ => None,
        })
        .collect();
    Ok(SpecialPoints {
        black,
        white,
        crosses,
        monochrome,
        lambda_critical,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalKind {
    /// Ramification of the cross-ratio away from the vertex values.
    CrossRatio,
    Black,
    White,
    Cross,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalPoint {
    pub x: Complex,
    pub jvalue: JValue,
    pub kind: CriticalKind,
}

/// Finite critical points of `j`: vertices (`j = 0, 1`), crosses (poles) and
/// the ramification points of the cross-ratio.
pub fn critical_points(c: &TrigonalCurve) -> Result<Vec<CriticalPoint>, AlgebraError> {
    let sp = special_points(c)?;
    let mut out: Vec<CriticalPoint> = Vec::new();
    for set in &sp.black {
        for r in &set.roots {
            out.push(CriticalPoint {
                x: r.value,
                jvalue: JValue::Finite(Complex::default()),
                kind: CriticalKind::Black,
            });
        }
    }
    for set in &sp.white {
        for r in &set.roots {
            if r.multiplicity >= 2 {
                out.push(CriticalPoint {
                    x: r.value,
                    jvalue: JValue::Finite(Complex::new(1.0, 0.0)),
                    kind: CriticalKind::White,
                });
            }
        }
    }
    for set in [&sp.crosses.s12, &sp.crosses.s23, &sp.crosses.s13] {
        for r in &set.roots {
            out.push(CriticalPoint {
                x: r.value,
                jvalue: JValue::Pole,
                kind: CriticalKind::Cross,
            });
        }
    }
    for cp in &sp.lambda_critical {
        let Some(x) = cp.x else { continue };
        let seen = out
            .iter()
            .any(|o| (o.x - x).norm() <= 1e-6 * (1.0 + x.norm()));
        if !seen {
            out.push(CriticalPoint {
                x,
                jvalue: cp.j(),
                kind: CriticalKind::CrossRatio,
            });
        }
    }
    Ok(out)
}

/// Roots of the level-set polynomial at `x` relative to its natural scale.
pub fn level_set_residual(c: &TrigonalCurve, x: Complex, r: f64) -> f64 {
    let poly = level_set_polynomial(c, r);
    poly.eval(x).norm() / poly.abs_eval(x.norm()).max(f64::MIN_POSITIVE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::make_curve;

    fn real(c: &[f64]) -> Poly {
        Poly::from_real(c)
    }

    fn linear() -> TrigonalCurve {
        make_curve(real(&[0.0, 1.0]), real(&[0.0, -1.0]), real(&[1.0])).unwrap()
    }

    #[test]
    fn j_values_at_special_points() {
        let c = linear();
        match j_eval(&c, Complex::new(-1.0 / 3.0, 0.0)) {
            JValue::Finite(j) => assert!((j - Complex::new(1.0, 0.0)).norm() < 1e-12),
            JValue::Pole => panic!("expected 1"),
        }
        assert_eq!(j_eval(&c, Complex::default()), JValue::Pole);
        let b = Complex::new(0.0, 1.0 / 3f64.sqrt());
        match j_eval(&c, b) {
            JValue::Finite(j) => assert!(j.norm() < 1e-12),
            JValue::Pole => panic!("expected 0"),
        }
    }

    #[test]
    fn level_sets_of_linear_curve() {
        let c = linear();
        let black = level_set(&c, 0.0).unwrap();
        assert_eq!(black.roots.len(), 2);
        assert!(black.roots.iter().all(|r| r.multiplicity == 3));
        assert!(black
            .roots
            .iter()
            .all(|r| (r.value.norm() - 1.0 / 3f64.sqrt()).abs() < 1e-6 && r.value.re.abs() < 1e-6));
        let white = level_set(&c, 1.0).unwrap();
        assert_eq!(white.total(), 6);
        assert_eq!(white.degree_deficit, 2);
        assert!(white.roots.iter().all(|r| r.multiplicity == 2));
    }

    #[test]
    fn special_points_of_linear_curve() {
        let c = linear();
        let sp = special_points(&c).unwrap();
        let blue = sp.white_set(WhiteColor::Blue);
        assert!((blue.roots[0].value - Complex::new(1.0 / 3.0, 0.0)).norm() < 1e-12);
        let green = sp.white_set(WhiteColor::Green);
        assert!((green.roots[0].value + Complex::new(1.0 / 3.0, 0.0)).norm() < 1e-12);
        let red = sp.white_set(WhiteColor::Red);
        assert!(red.roots.is_empty());
        assert_eq!(red.degree_deficit, 1);
        for color in BlackColor::ALL {
            let set = sp.black_set(color);
            assert_eq!(set.total(), 1);
            let x = set.roots[0].value;
            let l = c.p.eval(x) / c.q.eval(x);
            assert!((l - color.lambda()).norm() < 1e-12);
        }
        assert!(sp.monochrome.is_empty());
        assert!(sp.lambda_critical.is_empty());
    }

    #[test]
    fn critical_points_of_family_member() {
        // (x^2 + a, 2x + 1, -x + 1) at a = 3: lambda critical at +-sqrt(2)
        let a = 3.0;
        let c = make_curve(real(&[a, 0.0, 1.0]), real(&[1.0, 2.0]), real(&[1.0, -1.0])).unwrap();
        let lc = lambda_critical_points(&c, &RootOptions::default()).unwrap();
        let finite: Vec<Complex> = lc.iter().filter_map(|p| p.x).collect();
        assert_eq!(finite.len(), 2);
        for x in finite {
            assert!(((x * x) - Complex::new(a - 1.0, 0.0)).norm() < 1e-10);
        }
        let cps = critical_points(&c).unwrap();
        let sp = special_points(&c).unwrap();
        for set in &sp.black {
            for r in &set.roots {
                assert!(cps.iter().any(|p| (p.x - r.value).norm() < 1e-9
                    && p.jvalue == JValue::Finite(Complex::default())));
            }
        }
    }

    #[test]
    fn ramification_sums_to_two_n_minus_two() {
        let c = make_curve(
            real(&[1.0, 0.0, 1.0, 1.0]),
            real(&[-2.0, 0.0, -2.0]),
            real(&[-2.0]),
        )
        .unwrap();
        let lc = lambda_critical_points(&c, &RootOptions::default()).unwrap();
        let total: usize = lc.iter().map(|p| p.index - 1).sum();
        assert_eq!(total, 2 * c.n - 2);
    }

    #[test]
    fn infinity_ramification() {
        // P = x^2 - 1, Q = -2x: lambda(inf) = inf with index 1; (x^2, 1, 0): P/Q = x^2 has index 2 at infinity
        let c = make_curve(real(&[0.0, 0.0, 1.0]), real(&[1.0]), real(&[0.0])).unwrap();
        let lc = lambda_critical_points(&c, &RootOptions::default()).unwrap();
        assert!(lc
            .iter()
            .any(|p| p.x.is_none() && p.lambda.is_none() && p.index == 2));
        assert!(lc
            .iter()
            .any(|p| p.x.is_some_and(|x| x.norm() < 1e-12) && p.index == 2));
    }
}

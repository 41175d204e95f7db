//! Completely reducible trigonal curves `(y - y1)(y - y2)(y - y3) = 0` and their singular fibres.

use thiserror::Error;

use crate::algebra::{
    common_roots, AlgebraError, Complex, Poly, RationalMap, RootOptions, RootSet,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("components y{0} and y{1} coincide")]
    DegenerateComponents(usize, usize),
    #[error("all three components meet at {}", fmt_point(.at))]
    TripleIntersection { at: Option<Complex> },
    #[error("all components are constant")]
    ZeroDegree,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn fmt_point(at: &Option<Complex>) -> String {
    match at {
        Some(z) => format!("x = {z}"),
        None => "x = infinity".to_string(),
    }
}

/// Which two components meet at a singular fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairLabel {
    /// `y1 = y2`, where the cross-ratio is 1.
    S12,
    /// `y2 = y3`, where the cross-ratio is infinite.
    S23,
    /// `y1 = y3`, where the cross-ratio is 0.
    S13,
}

impl PairLabel {
    pub const ALL: [PairLabel; 3] = [PairLabel::S12, PairLabel::S23, PairLabel::S13];

    pub fn name(self) -> &'static str {
        match self {
            PairLabel::S12 => "12",
            PairLabel::S23 => "23",
            PairLabel::S13 => "13",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrigonalCurve {
    pub y: [Poly; 3],
    /// `y1 - y3`
    pub p: Poly,
    /// `y2 - y3`
    pub q: Poly,
    pub n: usize,
}

pub fn make_curve(y1: Poly, y2: Poly, y3: Poly) -> Result<TrigonalCurve, CurveError> {
    let scale = y1.max_abs().max(y2.max_abs()).max(y3.max_abs());
    let p = &y1 - &y3;
    let q = &y2 - &y3;
    let pq = &p - &q;
    let vanishes = |d: &Poly| d.max_abs() <= 1e-12 * scale;
    if vanishes(&pq) {
        return Err(CurveError::DegenerateComponents(1, 2));
    }
    if vanishes(&q) {
        return Err(CurveError::DegenerateComponents(2, 3));
    }
    if vanishes(&p) {
        return Err(CurveError::DegenerateComponents(1, 3));
    }
    let n = [&y1, &y2, &y3]
        .iter()
        .map(|y| y.degree().max(0))
        .max()
        .unwrap_or(0) as usize;
    if n == 0 {
        return Err(CurveError::ZeroDegree);
    }
    if (p.degree().max(q.degree()) as usize) < n {
        return Err(CurveError::TripleIntersection { at: None });
    }
    if let Some(&at) = common_roots(&p, &q)?.first() {
        return Err(CurveError::TripleIntersection { at: Some(at) });
    }
    Ok(TrigonalCurve {
        y: [y1, y2, y3],
        p,
        q,
        n,
    })
}

impl TrigonalCurve {
    /// The cross-ratio `P/Q`.
    pub fn lambda(&self) -> RationalMap {
        RationalMap {
            num: self.p.clone(),
            den: self.q.clone(),
        }
    }

    pub fn p_minus_q(&self) -> Poly {
        &self.p - &self.q
    }

    /// Apply `x -> alpha*x + beta` to every component.
    pub fn affine_pullback(
        &self,
        alpha: Complex,
        beta: Complex,
    ) -> Result<TrigonalCurve, CurveError> {
        let [a, b, c] = &self.y;
        make_curve(
            a.compose_affine(alpha, beta),
            b.compose_affine(alpha, beta),
            c.compose_affine(alpha, beta),
        )
    }

    /// `beta*P - alpha*Q`, the numerator of `lambda - alpha/beta` as a binary form.
    pub fn pencil(&self, alpha: Complex, beta: Complex) -> Poly {
        &self.p.scale(beta) - &self.q.scale(alpha)
    }

    /// The difference polynomial whose roots form the given singular fibre.
    pub fn fibre_polynomial(&self, label: PairLabel) -> Poly {
        match label {
            PairLabel::S12 => self.p_minus_q(),
            PairLabel::S23 => self.q.clone(),
            PairLabel::S13 => self.p.clone(),
        }
    }
}

pub fn maximal_degree(c: &TrigonalCurve) -> usize {
    c.n
}

/// Positions of the singular fibres; a fibre at infinity shows up as a degree deficit.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularFibers {
    pub s12: RootSet,
    pub s23: RootSet,
    pub s13: RootSet,
}

impl SingularFibers {
    pub fn get(&self, label: PairLabel) -> &RootSet {
        match label {
            PairLabel::S12 => &self.s12,
            PairLabel::S23 => &self.s23,
            PairLabel::S13 => &self.s13,
        }
    }

    pub fn at_infinity(&self, label: PairLabel) -> bool {
        self.get(label).degree_deficit > 0
    }
}

pub fn singular_fibers(c: &TrigonalCurve) -> Result<SingularFibers, AlgebraError> {
    singular_fibers_with(c, &RootOptions::default())
}

pub fn singular_fibers_with(
    c: &TrigonalCurve,
    opts: &RootOptions,
) -> Result<SingularFibers, AlgebraError> {
    let solve = |label| RootSet::of_form(&c.fibre_polynomial(label), c.n, opts);
    Ok(SingularFibers {
        s12: solve(PairLabel::S12)?,
        s23: solve(PairLabel::S23)?,
        s13: solve(PairLabel::S13)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(c: &[f64]) -> Poly {
        Poly::from_real(c)
    }

    #[test]
    fn linear_example() {
        let c = make_curve(real(&[0.0, 1.0]), real(&[0.0, -1.0]), real(&[1.0])).unwrap();
        assert_eq!(c.p, real(&[-1.0, 1.0]));
        assert_eq!(c.q, real(&[-1.0, -1.0]));
        assert_eq!(maximal_degree(&c), 1);
        let f = singular_fibers(&c).unwrap();
        assert!(f.s12.roots[0].value.norm() < 1e-12);
        assert!((f.s13.roots[0].value - Complex::new(1.0, 0.0)).norm() < 1e-12);
        assert!((f.s23.roots[0].value + Complex::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn rejections() {
        assert_eq!(
            make_curve(real(&[0.0, 0.0, 1.0]), real(&[0.0, 0.0, 1.0]), real(&[0.0])),
            Err(CurveError::DegenerateComponents(1, 2))
        );
        match make_curve(real(&[0.0, 1.0]), real(&[0.0, 2.0]), real(&[0.0, 3.0])) {
            Err(CurveError::TripleIntersection { at: Some(z) }) => assert!(z.norm() < 1e-9),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            make_curve(real(&[1.0]), real(&[2.0]), real(&[3.0])),
            Err(CurveError::ZeroDegree)
        );
        // equal leading terms: the three components meet over x = infinity
        assert_eq!(
            make_curve(real(&[0.0, 1.0]), real(&[1.0, 1.0]), real(&[2.0, 1.0])),
            Err(CurveError::TripleIntersection { at: None })
        );
    }

    #[test]
    fn maximal_degrees() {
        let c = make_curve(
            real(&[0.0, 0.0, 0.0, 0.0, 1.0]),
            real(&[-1.0, 0.0, 1.0]),
            real(&[-16.0, 0.0, 8.0]),
        )
        .unwrap();
        assert_eq!(maximal_degree(&c), 4);
        let c = make_curve(
            real(&[0.0, 0.0, 0.0, 1.0]),
            real(&[0.0, 0.0, -1.0]),
            real(&[1.0]),
        )
        .unwrap();
        assert_eq!(maximal_degree(&c), 3);
    }

    #[test]
    fn fibres_with_multiplicity_and_infinity() {
        let c = make_curve(
            real(&[0.0, 0.0, 0.0, 1.0]),
            real(&[0.0, 0.0, -1.0]),
            real(&[1.0]),
        )
        .unwrap();
        let f = singular_fibers(&c).unwrap();
        let mut s12 = f.s12.roots.clone();
        s12.sort_by(|a, b| a.value.re.partial_cmp(&b.value.re).unwrap());
        assert_eq!(s12.len(), 2);
        assert!((s12[0].value + Complex::new(1.0, 0.0)).norm() < 1e-10);
        assert_eq!(s12[0].multiplicity, 1);
        assert!(s12[1].value.norm() < 1e-7);
        assert_eq!(s12[1].multiplicity, 2);

        let c = make_curve(real(&[0.0, 0.0, 1.0]), real(&[1.0, 0.0, 1.0]), real(&[0.0])).unwrap();
        let f = singular_fibers(&c).unwrap();
        assert!(f.s12.roots.is_empty());
        assert!(f.at_infinity(PairLabel::S12));
        assert_eq!(f.s12.degree_deficit, 2);
    }
}

//! Complex polynomials, rational maps and a simultaneous-iteration root finder.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

pub type Complex = Complex64;

/// Trailing coefficients below this fraction of the largest one are dropped.
pub const STRIP_REL: f64 = 1e-12;
/// Roots closer than `CLUSTER_REL * (1 + |z|)` are one root.
pub const CLUSTER_REL: f64 = 1e-6;
/// Candidate radius for the residual-checked second clustering pass.
const CANDIDATE_REL: f64 = 1e-3;
/// Relative residual a cluster centroid must reach to count as a multiple root.
const MULTIPLE_RESIDUAL: f64 = 1e-11;
pub const MAX_ITER: usize = 500;
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("root finder hit the iteration cap ({iterations}) with residual {residual:.3e}")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("rational map with zero denominator")]
    ZeroDenominator,
}

/// Dense polynomial with coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Poly {
    coeffs: Vec<Complex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Poly {
    pub fn new(coeffs: Vec<Complex>) -> Self {
        normalize(&Poly { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::from_real(&[0.0, 1.0])
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Complex {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::default(), |acc, &c| acc * z + c)
    }

    /// `sum |c_k| r^k`, the natural scale for residuals at `|z| = r`.
    pub fn abs_eval(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn derivative(&self) -> Poly {
        derivative(self)
    }

    pub fn scale(&self, s: Complex) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(Complex::new(1.0, 0.0)), |acc, _| &acc * self)
    }

    /// Substitute `x -> alpha*x + beta`.
    pub fn compose_affine(&self, alpha: Complex, beta: Complex) -> Poly {
        let lin = Poly::new(vec![beta, alpha]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, &c| &(&acc * &lin) + &Poly::constant(c))
    }

    /// Coefficients of `p` padded to length `n + 1`, for use as a binary form of degree `n`.
    pub fn padded(&self, n: usize) -> Vec<Complex> {
        let mut c = self.coeffs.clone();
        c.resize(n + 1, Complex::default());
        c
    }
}

/// Strip trailing coefficients with `|c| <= 1e-12 * max |c_i|`.
pub fn normalize(p: &Poly) -> Poly {
    let max = p.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut coeffs = p.coeffs.clone();
    if max == 0.0 {
        return Poly::zero();
    }
    while let Some(last) = coeffs.last() {
        if last.norm() <= STRIP_REL * max {
            coeffs.pop();
        } else {
            break;
        }
    }
    Poly { coeffs }
}

pub fn arith(p: &Poly, q: &Poly, op: ArithOp) -> Poly {
    match op {
        ArithOp::Add | ArithOp::Sub => {
            let sign = if op == ArithOp::Add { 1.0 } else { -1.0 };
            let len = p.coeffs.len().max(q.coeffs.len());
            let coeffs = (0..len).map(|k| p.coeff(k) + q.coeff(k) * sign).collect();
            Poly::new(coeffs)
        }
        ArithOp::Mul => {
            if p.is_zero() || q.is_zero() {
                return Poly::zero();
            }
            let mut coeffs = vec![Complex::default(); p.coeffs.len() + q.coeffs.len() - 1];
            for (i, &a) in p.coeffs.iter().enumerate() {
                for (j, &b) in q.coeffs.iter().enumerate() {
                    coeffs[i + j] += a * b;
                }
            }
            Poly::new(coeffs)
        }
    }
}

pub fn derivative(p: &Poly) -> Poly {
    Poly::new(
        p.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect(),
    )
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        arith(self, rhs, ArithOp::Add)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        arith(self, rhs, ArithOp::Sub)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        arith(self, rhs, ArithOp::Mul)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(Complex::new(-1.0, 0.0))
    }
}

/// Quotient `num / den` of two polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    pub num: Poly,
    pub den: Poly,
}

impl RationalMap {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(RationalMap { num, den })
    }

    /// Value at `z`, or `None` at a pole.
    pub fn eval(&self, z: Complex) -> Option<Complex> {
        let d = self.den.eval(z);
        if d.norm() == 0.0 {
            None
        } else {
            Some(self.num.eval(z) / d)
        }
    }

    pub fn derivative_numerator(&self) -> Poly {
        rational_derivative_numerator(self)
    }
}

/// `num' * den - num * den'`; its roots are the finite critical points of `f`.
pub fn rational_derivative_numerator(f: &RationalMap) -> Poly {
    &(&f.num.derivative() * &f.den) - &(&f.num * &f.den.derivative())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: Complex,
    pub multiplicity: usize,
}

/// Clustered roots plus the number of roots sitting at infinity.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RootSet {
    pub roots: Vec<Root>,
    pub degree_deficit: usize,
}

impl RootSet {
    /// Sum of multiplicities plus the deficit.
    pub fn total(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum::<usize>() + self.degree_deficit
    }

    pub fn finite_count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn values(&self) -> Vec<Complex> {
        self.roots.iter().map(|r| r.value).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty() && self.degree_deficit == 0
    }

    /// Roots of `p` viewed as a binary form of degree `n >= deg p`.
    pub fn of_form(p: &Poly, n: usize, opts: &RootOptions) -> Result<Self, AlgebraError> {
        let mut set = if p.degree() <= 0 {
            RootSet::default()
        } else {
            roots_with(p, opts)?
        };
        set.degree_deficit = n.saturating_sub(p.degree().max(0) as usize);
        Ok(set)
    }
}

/// Tuning knobs for the root finder.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOptions {
    /// Required relative residual `|p(z)| / sum |c_k||z|^k`.
    pub tol: f64,
    pub max_iter: usize,
    /// Angular offset of the initial guesses; varying it perturbs the start.
    pub phase: f64,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            tol: DEFAULT_TOL,
            max_iter: MAX_ITER,
            phase: 0.0,
        }
    }
}

impl RootOptions {
    pub fn with_seed(tol: f64, seed: u64) -> Self {
        // Golden-angle steps keep different seeds well separated.
        let phase = (seed as f64 * 2.399_963_229_728_653) % (2.0 * PI);
        RootOptions {
            tol,
            max_iter: MAX_ITER,
            phase,
        }
    }
}

/// All roots of `p`, clustered, with the default options.
pub fn all_roots(p: &Poly, tol: f64) -> Result<RootSet, AlgebraError> {
    roots_with(
        p,
        &RootOptions {
            tol,
            ..RootOptions::default()
        },
    )
}

pub fn roots_with(p: &Poly, opts: &RootOptions) -> Result<RootSet, AlgebraError> {
    let raw = raw_roots(p, opts)?;
    Ok(RootSet {
        roots: cluster_roots(p, &raw),
        degree_deficit: 0,
    })
}

/// Newton correction `p/p'` and the relative residual at `z`, evaluated in
/// the reversed polynomial when `|z| > 1` so large roots do not overflow.
fn newton_step(c: &[Complex], z: Complex) -> (Complex, f64) {
    let d = c.len() - 1;
    if z.norm() <= 1.0 {
        let r = z.norm();
        let mut p = Complex::default();
        let mut dp = Complex::default();
        let mut s = 0.0;
        for &a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
            s = s * r + a.norm();
        }
        (p / dp, p.norm() / s.max(f64::MIN_POSITIVE))
    } else {
        let w = z.inv();
        let r = w.norm();
        let mut q = Complex::default();
        let mut dq = Complex::default();
        let mut s = 0.0;
        for &a in c.iter() {
            dq = dq * w + q;
            q = q * w + a;
            s = s * r + a.norm();
        }
        let denom = q * d as f64 - w * dq;
        (z * q / denom, q.norm() / s.max(f64::MIN_POSITIVE))
    }
}

fn relative_residual(c: &[Complex], z: Complex) -> f64 {
    newton_step(c, z).1
}

/// Initial guesses from the upper convex hull of `(k, ln|c_k|)`: one circle per hull segment.
fn initial_guesses(c: &[Complex], phase: f64) -> Vec<Complex> {
    let d = c.len() - 1;
    let pts: Vec<(usize, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 0.0)
        .map(|(k, a)| (k, a.norm().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            let cross =
                (x2 as f64 - x1 as f64) * (pt.1 - y1) - (y2 - y1) * (pt.0 as f64 - x1 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut guesses = Vec::with_capacity(d);
    for seg in hull.windows(2) {
        let (i, yi) = seg[0];
        let (j, yj) = seg[1];
        let m = j - i;
        let radius = ((yi - yj) / m as f64).exp();
        for k in 0..m {
            let angle =
                2.0 * PI * k as f64 / m as f64 + 2.0 * PI * i as f64 / d as f64 + 0.4 + phase;
            guesses.push(Complex::from_polar(radius, angle));
        }
    }
    guesses
}

/// Unclustered roots of `p`, `deg p` values with repetition.
pub fn raw_roots(p: &Poly, opts: &RootOptions) -> Result<Vec<Complex>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let zeros = p.coeffs.iter().take_while(|c| c.norm() == 0.0).count();
    let c: Vec<Complex> = p.coeffs[zeros..].to_vec();
    let mut roots = vec![Complex::default(); zeros];
    let d = c.len() - 1;
    match d {
        0 => return Ok(roots),
        1 => {
            roots.push(-c[0] / c[1]);
            return Ok(roots);
        }
        _ => {}
    }
    let mut z = initial_guesses(&c, opts.phase);
    let mut done = vec![false; d];
    let stop = 8.0 * f64::EPSILON * (d as f64 + 1.0);
    let mut iterations = 0;
    while iterations < opts.max_iter && done.iter().any(|f| !f) {
        iterations += 1;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (ratio, res) = newton_step(&c, z[i]);
            if res <= stop {
                done[i] = true;
                continue;
            }
            if !ratio.re.is_finite() || !ratio.im.is_finite() {
                // p' vanished at z: nudge off the critical point.
                let nudge = Complex::from_polar(1e-8 * (1.0 + z[i].norm()), 1.0 + i as f64);
                z[i] += nudge;
                continue;
            }
            let sum: Complex = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex::new(1.0, 0.0) - ratio * sum);
            let step = if step.re.is_finite() && step.im.is_finite() {
                step
            } else {
                ratio
            };
            z[i] -= step;
            if step.norm() <= f64::EPSILON * z[i].norm() && res <= opts.tol {
                done[i] = true;
            }
        }
    }
    for zi in z.iter_mut() {
        polish(&c, zi);
    }
    let worst = z
        .iter()
        .map(|&zi| relative_residual(&c, zi))
        .fold(0.0, f64::max);
    if !(worst <= opts.tol) {
        return Err(AlgebraError::NonConvergence {
            iterations,
            residual: worst,
        });
    }
    roots.extend(z);
    Ok(roots)
}

/// A couple of Newton steps, each kept only if it lowers the residual.
fn polish(c: &[Complex], z: &mut Complex) {
    for _ in 0..2 {
        let (ratio, res) = newton_step(c, *z);
        if !(ratio.re.is_finite() && ratio.im.is_finite()) {
            return;
        }
        let cand = *z - ratio;
        if relative_residual(c, cand) < res {
            *z = cand;
        } else {
            return;
        }
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Merge near-coincident roots. A first pass joins roots within the cluster
/// radius; a second pass joins wider groups whose centroid is itself a root
/// to working precision, which is how a k-fold root shows up after rounding.
pub fn cluster_roots(p: &Poly, raw: &[Complex]) -> Vec<Root> {
    let n = raw.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            let scale = 1.0 + raw[i].norm().max(raw[j].norm());
            if (raw[i] - raw[j]).norm() <= CLUSTER_REL * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<(Complex, usize)> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if index[r] == usize::MAX {
            index[r] = groups.len();
            groups.push((Complex::default(), 0));
        }
        let g = &mut groups[index[r]];
        g.0 += raw[i];
        g.1 += 1;
    }
    let mut clusters: Vec<(Complex, usize)> =
        groups.into_iter().map(|(s, m)| (s / m as f64, m)).collect();
    let c = p.coeffs();
    if c.len() >= 2 {
        loop {
            let mut best: Option<(f64, usize, usize, Complex)> = None;
            for i in 0..clusters.len() {
                for j in i + 1..clusters.len() {
                    let (zi, mi) = clusters[i];
                    let (zj, mj) = clusters[j];
                    let dist = (zi - zj).norm();
                    if dist > CANDIDATE_REL * (1.0 + zi.norm().max(zj.norm())) {
                        continue;
                    }
                    let centroid = (zi * mi as f64 + zj * mj as f64) / (mi + mj) as f64;
                    if relative_residual(c, centroid) > MULTIPLE_RESIDUAL {
                        continue;
                    }
                    if best.is_none_or(|b| dist < b.0) {
                        best = Some((dist, i, j, centroid));
                    }
                }
            }
            match best {
                Some((_, i, j, centroid)) => {
                    let m = clusters[i].1 + clusters[j].1;
                    clusters[i] = (centroid, m);
                    clusters.swap_remove(j);
                }
                None => break,
            }
        }
    }
    clusters
        .into_iter()
        .map(|(value, multiplicity)| Root {
            value,
            multiplicity,
        })
        .collect()
}

/// Roots of `p` that are also roots of `q` within the cluster radius.
pub fn common_roots(p: &Poly, q: &Poly) -> Result<Vec<Complex>, AlgebraError> {
    if p.degree() <= 0 || q.degree() <= 0 {
        return Ok(Vec::new());
    }
    let rp = all_roots(p, DEFAULT_TOL)?;
    let rq = all_roots(q, DEFAULT_TOL)?;
    Ok(rp
        .roots
        .iter()
        .map(|r| r.value)
        .filter(|&a| {
            rq.roots
                .iter()
                .any(|b| (a - b.value).norm() <= CLUSTER_REL * (1.0 + a.norm().max(b.value.norm())))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn sorted(mut v: Vec<Root>) -> Vec<Root> {
        v.sort_by(|a, b| {
            (a.value.re, a.value.im)
                .partial_cmp(&(b.value.re, b.value.im))
                .unwrap()
        });
        v
    }

    #[test]
    fn normalize_strips_trailing_zeros() {
        let p = Poly::from_real(&[1.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 0);
        assert_eq!(Poly::from_real(&[0.0, 0.0]).degree(), -1);
        assert_eq!(Poly::from_real(&[2.0, 3.0]).coeffs().len(), 2);
        let tiny = Poly::from_real(&[1.0, 1e-13]);
        assert_eq!(tiny.degree(), 0);
    }

    #[test]
    fn arithmetic_by_hand() {
        let a = Poly::from_real(&[-1.0, 1.0]);
        let b = Poly::from_real(&[-1.0, -1.0]);
        assert_eq!(&a + &b, Poly::from_real(&[-2.0]));
        assert_eq!(&a * &b, Poly::from_real(&[1.0, 0.0, -1.0]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            Poly::from_real(&[5.0, 1.0, 1.0]).derivative(),
            Poly::from_real(&[1.0, 2.0])
        );
        assert!(Poly::from_real(&[4.0]).derivative().is_zero());
        assert_eq!(
            Poly::from_real(&[0.0, 0.0, 0.0, 1.0]).derivative(),
            Poly::from_real(&[0.0, 0.0, 3.0])
        );
    }

    #[test]
    fn black_vertex_polynomial_roots() {
        let r = all_roots(&Poly::from_real(&[1.0, -1.0, 1.0]), DEFAULT_TOL).unwrap();
        let r = sorted(r.roots);
        assert_eq!(r.len(), 2);
        let s3 = 3f64.sqrt() / 2.0;
        assert!((r[0].value - c(0.5, -s3)).norm() < 1e-12);
        assert!((r[1].value - c(0.5, s3)).norm() < 1e-12);
        assert!(r.iter().all(|x| x.multiplicity == 1));
    }

    #[test]
    fn double_root_is_clustered() {
        // (x-2)^2 (x+1) = x^3 - 3x^2 + 4
        let r = sorted(
            all_roots(&Poly::from_real(&[4.0, 0.0, -3.0, 1.0]), DEFAULT_TOL)
                .unwrap()
                .roots,
        );
        assert_eq!(r.len(), 2);
        assert!((r[0].value - c(-1.0, 0.0)).norm() < 1e-10);
        assert_eq!(r[0].multiplicity, 1);
        assert!((r[1].value - c(2.0, 0.0)).norm() < 1e-7);
        assert_eq!(r[1].multiplicity, 2);
    }

    #[test]
    fn triple_roots_are_clustered() {
        // (3x^2 + 1)^3 has two triple roots at +-i/sqrt(3)
        let p = Poly::from_real(&[1.0, 0.0, 3.0]).pow(3);
        let mut r = all_roots(&p, DEFAULT_TOL).unwrap().roots;
        r.sort_by(|a, b| a.value.im.partial_cmp(&b.value.im).unwrap());
        assert_eq!(r.len(), 2);
        let y = 1.0 / 3f64.sqrt();
        assert!((r[0].value - c(0.0, -y)).norm() < 1e-6);
        assert!((r[1].value - c(0.0, y)).norm() < 1e-6);
        assert_eq!(r[0].multiplicity, 3);
        assert_eq!(r[1].multiplicity, 3);
    }

    #[test]
    fn close_but_distinct_roots_stay_apart() {
        let p = &Poly::from_real(&[-1.0, 1.0]) * &Poly::from_real(&[-1.001, 1.0]);
        let r = all_roots(&p, DEFAULT_TOL).unwrap();
        assert_eq!(r.roots.len(), 2);
    }

    #[test]
    fn exact_zero_roots_and_wide_scales() {
        let p = Poly::from_real(&[0.0, 0.0, 1.0, 1.0]);
        let r = all_roots(&p, DEFAULT_TOL).unwrap();
        assert_eq!(r.finite_count(), 3);
        assert!(r
            .roots
            .iter()
            .any(|x| x.value.norm() < 1e-12 && x.multiplicity == 2));
        // roots 1e-6 and 1e6
        let q = &Poly::from_real(&[-1e-6, 1.0]) * &Poly::from_real(&[-1e6, 1.0]);
        let r = all_roots(&q, DEFAULT_TOL).unwrap();
        let mut v: Vec<f64> = r.values().iter().map(|z| z.re).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((v[0] - 1e-6).abs() < 1e-15);
        assert!((v[1] - 1e6).abs() < 1e-4);
    }

    #[test]
    fn small_root_example() {
        let mut r = all_roots(&Poly::from_real(&[1.0, 0.0, 3.0]), DEFAULT_TOL)
            .unwrap()
            .roots;
        r.sort_by(|a, b| a.value.im.partial_cmp(&b.value.im).unwrap());
        let y = 1.0 / 3f64.sqrt();
        assert!((r[0].value - c(0.0, -y)).norm() < 1e-12);
        assert!((r[1].value - c(0.0, y)).norm() < 1e-12);
    }

    #[test]
    fn common_roots_examples() {
        let p = Poly::from_real(&[-1.0, 1.0]);
        let q = &p * &Poly::from_real(&[2.0, 1.0]);
        let cr = common_roots(&p, &q).unwrap();
        assert_eq!(cr.len(), 1);
        assert!((cr[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert!(common_roots(
            &Poly::from_real(&[0.0, 0.0, 1.0]),
            &Poly::from_real(&[1.0, 1.0])
        )
        .unwrap()
        .is_empty());
        let cr = common_roots(
            &Poly::from_real(&[1.0, 0.0, 1.0]),
            &Poly::new(vec![c(0.0, -1.0), c(1.0, 0.0)]),
        )
        .unwrap();
        assert_eq!(cr.len(), 1);
        assert!((cr[0] - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn derivative_numerator_examples() {
        // (x^2 + x + a - 1) / (3x) with a = 3: numerator 3(x^2 - (a-1))
        let a = 3.0;
        let f = RationalMap::new(
            Poly::from_real(&[a - 1.0, 1.0, 1.0]),
            Poly::from_real(&[0.0, 3.0]),
        )
        .unwrap();
        let d = rational_derivative_numerator(&f);
        assert_eq!(d, Poly::from_real(&[-3.0 * (a - 1.0), 0.0, 3.0]));
        let id = RationalMap::new(Poly::x(), Poly::from_real(&[1.0])).unwrap();
        assert_eq!(rational_derivative_numerator(&id), Poly::from_real(&[1.0]));
        let sq =
            RationalMap::new(Poly::from_real(&[0.0, 0.0, 1.0]), Poly::from_real(&[1.0])).unwrap();
        let r = all_roots(&rational_derivative_numerator(&sq), DEFAULT_TOL).unwrap();
        assert_eq!(r.roots.len(), 1);
        assert!(r.roots[0].value.norm() < 1e-12);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalMap::new(Poly::x(), Poly::zero()),
            Err(AlgebraError::ZeroDenominator)
        );
    }

    #[test]
    fn affine_composition() {
        let p = Poly::from_real(&[1.0, 0.0, 1.0]);
        let q = p.compose_affine(c(2.0, 0.0), c(1.0, 0.0));
        // (2x+1)^2 + 1 = 4x^2 + 4x + 2
        assert_eq!(q, Poly::from_real(&[2.0, 4.0, 4.0]));
    }
}

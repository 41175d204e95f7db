//! Curve and family input documents.
//!
//! ```json
//! {"y1": [[0,0],[1,0]], "y2": [[0,0],[-1,0]], "y3": [[1,0]]}
//! ```
//!
//! Coefficients are `[re, im]` pairs in ascending powers. A `family` block
//! replaces each coefficient by either a constant pair or a list of pairs, the
//! ascending coefficients of a polynomial in the parameter:
//!
//! ```json
//! {"family": {"param": "a",
//!             "y1": [[[0,0],[1,0]], [0,0], [1,0]],
//!             "y2": [[1,0],[2,0]], "y3": [[1,0],[-1,0]],
//!             "grid": {"re": [-1, 3], "im": [-2, 2], "count": 200},
//!             "path": {"from": [0.9, 0], "to": [1.2, 0], "count": 200}}}
//! ```
//!
//! `grid` without `im` is a real segment of `count` points. `path` gives the
//! ordered samples of a sweep; without it a real `grid` is swept.

use serde_json::Value;

use crtc_dessins::analysis::Family;
use crtc_dessins::curve::{make_curve, TrigonalCurve};
use crtc_dessins::{Complex, Poly};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    /// Points where the discriminant locus is sampled.
    pub grid: Vec<Complex>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveSpec {
    pub components: Option<[Poly; 3]>,
    pub family: Option<FamilySpec>,
}

impl CurveSpec {
    pub fn curve(&self) -> Result<TrigonalCurve, CliError> {
        let [y1, y2, y3] = self
            .components
            .clone()
            .ok_or_else(|| CliError::Usage("the document has no y1, y2, y3 curve".into()))?;
        Ok(make_curve(y1, y2, y3)?)
    }
}

const COMPONENTS: [&str; 3] = ["y1", "y2", "y3"];

fn number(v: &Value, path: &str) -> Result<f64, CliError> {
    v.as_f64()
        .ok_or_else(|| CliError::parse(path, "expected a number"))
}

fn complex(v: &Value, path: &str) -> Result<Complex, CliError> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([re, im]) => Ok(Complex::new(
            number(re, &format!("{path}[0]"))?,
            number(im, &format!("{path}[1]"))?,
        )),
        Some([re]) => Ok(Complex::new(number(re, &format!("{path}[0]"))?, 0.0)),
        _ => Err(CliError::parse(path, "expected a [re, im] pair")),
    }
}

fn is_pair(v: &Value) -> bool {
    v.as_array()
        .is_some_and(|a| !a.is_empty() && a.iter().all(Value::is_number))
}

fn poly(v: &Value, path: &str) -> Result<Poly, CliError> {
    let items = v
        .as_array()
        .ok_or_else(|| CliError::parse(path, "expected a list of [re, im] coefficients"))?;
    if items.is_empty() {
        return Err(CliError::parse(path, "coefficient list is empty"));
    }
    let coeffs = items
        .iter()
        .enumerate()
        .map(|(k, c)| complex(c, &format!("{path}[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(coeffs))
}

fn field<'a>(obj: &'a Value, key: &str, path: &str) -> Result<&'a Value, CliError> {
    obj.get(key)
        .ok_or_else(|| CliError::parse(path, "missing field"))
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn count(v: &Value, path: &str) -> Result<usize, CliError> {
    match v.as_u64() {
        Some(c) if c >= 1 => Ok(c as usize),
        _ => Err(CliError::parse(path, "expected a positive integer")),
    }
}

fn range(v: &Value, path: &str) -> Result<(f64, f64), CliError> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([lo, hi]) => Ok((
            number(lo, &format!("{path}[0]"))?,
            number(hi, &format!("{path}[1]"))?,
        )),
        _ => Err(CliError::parse(path, "expected [lo, hi]")),
    }
}

fn grid(v: &Value, path: &str) -> Result<Vec<Complex>, CliError> {
    let n = count(
        field(v, "count", &join(path, "count"))?,
        &join(path, "count"),
    )?;
    let (re_lo, re_hi) = range(field(v, "re", &join(path, "re"))?, &join(path, "re"))?;
    match v.get("im") {
        None => Ok(Family::real_grid(re_lo, re_hi, n)),
        Some(im) => {
            let (im_lo, im_hi) = range(im, &join(path, "im"))?;
            Ok(Family::rect_grid(
                Complex::new(re_lo, im_lo),
                Complex::new(re_hi, im_hi),
                n,
            ))
        }
    }
}

fn segment(v: &Value, path: &str) -> Result<Vec<Complex>, CliError> {
    let from = complex(field(v, "from", &join(path, "from"))?, &join(path, "from"))?;
    let to = complex(field(v, "to", &join(path, "to"))?, &join(path, "to"))?;
    let n = count(
        field(v, "count", &join(path, "count"))?,
        &join(path, "count"),
    )?
    .max(2);
    Ok((0..n)
        .map(|k| from + (to - from) * (k as f64 / (n - 1) as f64))
        .collect())
}

fn family(v: &Value, path: &str) -> Result<FamilySpec, CliError> {
    let param = match v.get("param") {
        Some(p) => p
            .as_str()
            .ok_or_else(|| CliError::parse(join(path, "param"), "expected a string"))?
            .to_string(),
        None => "a".to_string(),
    };
    let mut coeffs: [Vec<Poly>; 3] = Default::default();
    for (i, name) in COMPONENTS.iter().enumerate() {
        let p = join(path, name);
        let items = field(v, name, &p)?
            .as_array()
            .ok_or_else(|| CliError::parse(&p, "expected a list of coefficients"))?;
        if items.is_empty() {
            return Err(CliError::parse(&p, "coefficient list is empty"));
        }
        for (k, c) in items.iter().enumerate() {
            let cp = format!("{p}[{k}]");
            coeffs[i].push(if is_pair(c) {
                Poly::constant(complex(c, &cp)?)
            } else {
                poly(c, &cp)?
            });
        }
    }
    let grid_points = match v.get("grid") {
        Some(g) => Some(grid(g, &join(path, "grid"))?),
        None => None,
    };
    let path_points = match v.get("path") {
        Some(s) => Some(segment(s, &join(path, "path"))?),
        None => None,
    };
    let real_grid = v.get("grid").is_some_and(|g| g.get("im").is_none());
    let samples = match (&path_points, &grid_points) {
        (Some(s), _) => s.clone(),
        (None, Some(g)) if real_grid => g.clone(),
        _ => Vec::new(),
    };
    if grid_points.is_none() && path_points.is_none() {
        return Err(CliError::parse(path, "a family needs a grid or a path"));
    }
    Ok(FamilySpec {
        grid: grid_points.unwrap_or_else(|| samples.clone()),
        family: Family {
            param,
            coeffs,
            samples,
        },
    })
}

pub fn parse_spec(text: &str) -> Result<CurveSpec, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: "$".into(),
        line: Some(e.line()),
        column: Some(e.column()),
        message: e.to_string(),
    })?;
    if !doc.is_object() {
        return Err(CliError::parse("$", "expected an object"));
    }
    let fam = match doc.get("family") {
        Some(f) => Some(family(f, "family")?),
        None => None,
    };
    let has_curve = COMPONENTS.iter().any(|k| doc.get(*k).is_some());
    let components = if has_curve || fam.is_none() {
        let mut ps = Vec::with_capacity(3);
        for name in COMPONENTS {
            ps.push(poly(field(&doc, name, name)?, name)?);
        }
        let [a, b, c]: [Poly; 3] = ps.try_into().unwrap();
        Some([a, b, c])
    } else {
        None
    };
    Ok(CurveSpec {
        components,
        family: fam,
    })
}

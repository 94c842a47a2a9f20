//! JSON interchange formats.
//!
//! Rationals are strings `"n/d"` or `"n"`, never decimals. A Gaussian
//! rational is `{"re": …, "im": …}`; polynomial terms inline the two parts.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::apolarity::LinearOp;
use crate::degree::DegreeVec;
use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::poly::{BiHomPoly, ProjPoint, P1};
use crate::scalar::{format_rat, parse_rat, GaussRat, Rat};
use crate::stability::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussJson {
    pub re: String,
    #[serde(default = "zero_str")]
    pub im: String,
}

fn zero_str() -> String {
    "0".into()
}

impl From<&GaussRat> for GaussJson {
    fn from(z: &GaussRat) -> Self {
        GaussJson { re: format_rat(&z.re), im: format_rat(&z.im) }
    }
}

impl TryFrom<&GaussJson> for GaussRat {
    type Error = Error;
    fn try_from(g: &GaussJson) -> Result<Self> {
        Ok(GaussRat::new(parse_rat(&g.re)?, parse_rat(&g.im)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub mu: Vec<u32>,
    pub re: String,
    #[serde(default = "zero_str")]
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: Vec<u32>,
    pub terms: Vec<TermJson>,
}

impl From<&BiHomPoly> for PolyJson {
    fn from(p: &BiHomPoly) -> Self {
        PolyJson {
            degree: p.degree().0.clone(),
            terms: p
                .terms()
                .map(|(mu, c)| TermJson { mu: mu.to_vec(), re: format_rat(&c.re), im: format_rat(&c.im) })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for BiHomPoly {
    type Error = Error;
    fn try_from(j: &PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((t.mu.clone(), GaussRat::new(parse_rat(&t.re)?, parse_rat(&t.im)?))))
            .collect::<Result<Vec<_>>>()?;
        BiHomPoly::from_terms(DegreeVec::new(j.degree.clone()), terms)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoebiusJson {
    pub a: GaussJson,
    pub b: GaussJson,
    pub c: GaussJson,
    pub d: GaussJson,
}

impl From<&MoebiusMap> for MoebiusJson {
    fn from(m: &MoebiusMap) -> Self {
        MoebiusJson { a: (&m.a).into(), b: (&m.b).into(), c: (&m.c).into(), d: (&m.d).into() }
    }
}

impl TryFrom<&MoebiusJson> for MoebiusMap {
    type Error = Error;
    fn try_from(j: &MoebiusJson) -> Result<Self> {
        MoebiusMap::new((&j.a).try_into()?, (&j.b).try_into()?, (&j.c).try_into()?, (&j.d).try_into()?)
    }
}

/// Dense operator matrix; `data` is column-major, one column per input monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearOpJson {
    pub in_degree: Vec<u32>,
    pub out_degree: Vec<u32>,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<GaussJson>,
}

impl From<&LinearOp> for LinearOpJson {
    fn from(t: &LinearOp) -> Self {
        LinearOpJson {
            in_degree: t.in_degree().0.clone(),
            out_degree: t.out_degree().0.clone(),
            rows: t.rows(),
            cols: t.cols(),
            data: t.data().iter().map(GaussJson::from).collect(),
        }
    }
}

impl TryFrom<&LinearOpJson> for LinearOp {
    type Error = Error;
    fn try_from(j: &LinearOpJson) -> Result<Self> {
        let data = j.data.iter().map(GaussRat::try_from).collect::<Result<Vec<_>>>()?;
        let t = LinearOp::from_columns(DegreeVec::new(j.in_degree.clone()), DegreeVec::new(j.out_degree.clone()), data)?;
        if t.rows() != j.rows || t.cols() != j.cols {
            return Err(Error::Parse(format!("matrix is {}x{}, header says {}x{}", t.rows(), t.cols(), j.rows, j.cols)));
        }
        Ok(t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P1Json {
    pub a: GaussJson,
    pub b: GaussJson,
}

pub fn point_to_json(z: &ProjPoint) -> Vec<P1Json> {
    z.0.iter().map(|w| P1Json { a: (&w.a).into(), b: (&w.b).into() }).collect()
}

pub fn point_from_json(j: &[P1Json]) -> Result<ProjPoint> {
    let coords = j.iter().map(|w| P1::new((&w.a).try_into()?, (&w.b).try_into()?)).collect::<Result<Vec<_>>>()?;
    Ok(ProjPoint::new(coords))
}

fn opt_rat(r: &Option<Rat>) -> Value {
    r.as_ref().map_or(Value::Null, |r| Value::String(format_rat(r)))
}

pub fn verdict_to_json(v: &Verdict, precision: u32) -> Value {
    json!({
        "status": v.status.as_str(),
        "witness": v.witness.as_ref().map(point_to_json),
        "witness_radius": opt_rat(&v.witness_radius),
        "margin": opt_rat(&v.margin),
        "budget": v.budget,
        "leaning_stable": v.leaning_stable,
        "precision": precision,
    })
}

pub fn poly_to_string(p: &BiHomPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("plain data serializes")
}

pub fn poly_from_str(s: &str) -> Result<BiHomPoly> {
    BiHomPoly::try_from(&serde_json::from_str::<PolyJson>(s)?)
}

pub fn poly_to_value(p: &BiHomPoly) -> Value {
    serde_json::to_value(PolyJson::from(p)).expect("plain data serializes")
}

pub fn poly_from_value(v: &Value) -> Result<BiHomPoly> {
    BiHomPoly::try_from(&serde_json::from_value::<PolyJson>(v.clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_round_trip() {
        let p = BiHomPoly::from_terms(
            DegreeVec::new(vec![2, 1]),
            [(vec![2, 0], GaussRat::frac(-3, 4)), (vec![0, 1], GaussRat::ints(0, 5))],
        )
        .unwrap();
        let s = poly_to_string(&p);
        assert!(s.contains("\"-3/4\"") && !s.contains('.'));
        assert_eq!(poly_from_str(&s).unwrap(), p);
    }

    #[test]
    fn accepts_missing_imaginary_part() {
        let p = poly_from_str(r#"{"degree":[1],"terms":[{"mu":[1],"re":"1"},{"mu":[0],"re":"-2"}]}"#).unwrap();
        assert_eq!(p, BiHomPoly::univariate_ints(&[-2, 1]));
        assert!(poly_from_str(r#"{"degree":[1],"terms":[{"mu":[2],"re":"1"}]}"#).is_err());
        assert!(poly_from_str(r#"{"degree":[1],"terms":[{"mu":[1],"re":"0.5"}]}"#).is_err());
    }

    #[test]
    fn maps_and_operators() {
        let m = MoebiusMap::from_ints(1, 2, 0, 1).unwrap();
        let j = serde_json::to_string(&MoebiusJson::from(&m)).unwrap();
        assert_eq!(MoebiusMap::try_from(&serde_json::from_str::<MoebiusJson>(&j).unwrap()).unwrap(), m);
        let t = LinearOp::identity(DegreeVec::univariate(2)).unwrap();
        let j = LinearOpJson::from(&t);
        assert_eq!((j.rows, j.cols), (3, 3));
        assert_eq!(LinearOp::try_from(&j).unwrap(), t);
    }
}

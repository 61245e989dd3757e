//! Input and output documents.

use projcurve::klein::NullModel;
use projcurve::{build_w_model, FieldElem, NullCurve, ProjectiveCurve, RatFunction, SymplecticForm, UniPoly};
use serde::{Deserialize, Serialize};

use crate::Failure;

/// A coefficient as written in a document: a string such as `"3/2-1/2*i"`,
/// or a bare JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn parse(&self, at: &str) -> Result<FieldElem, Failure> {
        match self {
            Number::Int(n) => Ok(FieldElem::from_int(*n)),
            Number::Text(s) => s
                .parse()
                .map_err(|e| Failure::Input(format!("{at}: {e}"))),
        }
    }
}

impl From<&FieldElem> for Number {
    fn from(c: &FieldElem) -> Self {
        Number::Text(c.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "W")]
    W,
    #[serde(rename = "standardQuadric")]
    StandardQuadric,
}

/// A projective curve, one coefficient array per coordinate in ascending
/// powers of `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CurveDocument {
    pub ambient_dim: usize,
    pub coords: Vec<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<Model>,
}

pub fn parse_poly(cs: &[Number], at: &str) -> Result<UniPoly, Failure> {
    let coeffs = cs
        .iter()
        .enumerate()
        .map(|(j, c)| c.parse(&format!("{at}[{j}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(coeffs))
}

pub fn poly_numbers(p: &UniPoly) -> Vec<Number> {
    if p.is_zero() {
        return vec![Number::Text("0".into())];
    }
    p.coeffs().iter().map(Number::from).collect()
}

pub fn parse_beta(entries: &[Number], at: &str) -> Result<SymplecticForm, Failure> {
    if entries.len() != 6 {
        return Err(Failure::Input(format!("{at}: expected 6 entries, got {}", entries.len())));
    }
    let c: Vec<FieldElem> = entries
        .iter()
        .enumerate()
        .map(|(k, e)| e.parse(&format!("{at}[{k}]")))
        .collect::<Result<_, _>>()?;
    SymplecticForm::new(c.try_into().unwrap()).map_err(|e| Failure::Input(format!("{at}: {e}")))
}

impl CurveDocument {
    pub fn from_json(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text).map_err(|e| Failure::Input(format!("invalid curve document: {e}")))
    }

    pub fn curve(&self) -> Result<ProjectiveCurve, Failure> {
        if self.coords.len() != self.ambient_dim + 1 {
            return Err(Failure::Input(format!(
                "ambientDim is {} but {} coordinates were given",
                self.ambient_dim,
                self.coords.len()
            )));
        }
        let raw = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| parse_poly(c, &format!("coords[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        ProjectiveCurve::normalize(raw).map_err(|e| Failure::Input(e.to_string()))
    }

    pub fn beta(&self) -> Result<Option<SymplecticForm>, Failure> {
        self.beta.as_deref().map(|b| parse_beta(b, "beta")).transpose()
    }

    pub fn from_curve(f: &ProjectiveCurve) -> Self {
        CurveDocument {
            ambient_dim: f.ambient_dim(),
            coords: f.coords().iter().map(poly_numbers).collect(),
            beta: None,
            model: None,
        }
    }

    pub fn with_beta(mut self, beta: &SymplecticForm) -> Self {
        self.beta = Some(beta.coeffs().iter().map(Number::from).collect());
        self
    }

    pub fn from_null(g: &NullCurve) -> Self {
        let doc = Self::from_curve(g.curve());
        match g.model() {
            NullModel::W(w) => CurveDocument {
                model: Some(Model::W),
                ..doc.with_beta(w.beta())
            },
            NullModel::StandardQuadric => CurveDocument {
                model: Some(Model::StandardQuadric),
                ..doc
            },
        }
    }

    /// Reads the document as a null curve in its declared model.
    pub fn null_curve(&self) -> Result<NullCurve, Failure> {
        let curve = self.curve()?;
        let model = match self.model {
            None => return Err(Failure::Input("model is required (\"W\" or \"standardQuadric\")".into())),
            Some(Model::StandardQuadric) => NullModel::StandardQuadric,
            Some(Model::W) => {
                let beta = self
                    .beta()?
                    .ok_or_else(|| Failure::Input("model \"W\" needs beta".into()))?;
                NullModel::W(build_w_model(&beta).map_err(|e| Failure::Input(e.to_string()))?)
            }
        };
        NullCurve::new(curve, model).map_err(Failure::from)
    }
}

/// Numerator and denominator of one affine coordinate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RationalDoc {
    pub num: Vec<Number>,
    #[serde(default = "one")]
    pub den: Vec<Number>,
}

fn one() -> Vec<Number> {
    vec![Number::Int(1)]
}

/// An affine curve `γ = (γ1, γ2, γ3)` in `ℚ(i)³`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GammaDocument {
    pub gamma: Vec<RationalDoc>,
}

impl GammaDocument {
    pub fn from_json(text: &str) -> Result<Self, Failure> {
        serde_json::from_str(text).map_err(|e| Failure::Input(format!("invalid gamma document: {e}")))
    }

    pub fn gamma(&self) -> Result<[RatFunction; 3], Failure> {
        if self.gamma.len() != 3 {
            return Err(Failure::Input(format!("gamma needs 3 entries, got {}", self.gamma.len())));
        }
        let parts = self
            .gamma
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let num = parse_poly(&r.num, &format!("gamma[{k}].num"))?;
                let den = parse_poly(&r.den, &format!("gamma[{k}].den"))?;
                if den.is_zero() {
                    return Err(Failure::Input(format!("gamma[{k}].den is zero")));
                }
                Ok(RatFunction::new(num, den))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(parts.try_into().unwrap())
    }
}

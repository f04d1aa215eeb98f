//! JSON manifold documents: coordinates, ε and the structure tensors as
//! expression strings.

use std::path::Path;

use contactgeom::contact::{ContactStructure, Epsilon};
use contactgeom::soliton::{Potential, SolitonData};
use contactgeom::symbolic::{parse_rational, Rational, RationalFunction};
use contactgeom::tensor::{Chart, TensorField};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDocument {
    pub name: String,
    pub dimension: usize,
    pub coordinates: Vec<String>,
    pub epsilon: i64,
    pub metric: Vec<Vec<String>>,
    pub xi: Vec<String>,
    pub eta: Vec<String>,
    pub phi: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub soliton: Option<SolitonBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolitonBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub potential: Option<String>,
    pub lambda: String,
    pub mu: String,
}

/// A parsed document.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub name: String,
    pub structure: ContactStructure,
    pub soliton: Option<SolitonData>,
}

fn invalid(field: impl Into<String>, reason: impl Into<String>) -> CliError {
    CliError::Invalid {
        field: field.into(),
        reason: reason.into(),
    }
}

fn expr(chart: &Chart, field: String, src: &str) -> Result<RationalFunction, CliError> {
    chart.parse(src).map_err(|e| invalid(field, e.to_string()))
}

fn list(chart: &Chart, field: &str, items: &[String]) -> Result<Vec<RationalFunction>, CliError> {
    if items.len() != chart.dim() {
        return Err(invalid(
            field,
            format!("expected {} components, found {}", chart.dim(), items.len()),
        ));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, s)| expr(chart, format!("{field}[{i}]"), s))
        .collect()
}

fn square(
    chart: &Chart,
    field: &str,
    rows: &[Vec<String>],
) -> Result<Vec<Vec<RationalFunction>>, CliError> {
    let n = chart.dim();
    if rows.len() != n {
        return Err(invalid(
            field,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| list(chart, &format!("{field}[{i}]"), row))
        .collect()
}

pub fn rational(field: &str, src: &str) -> Result<Rational, CliError> {
    parse_rational(src).map_err(|e| invalid(field, e.to_string()))
}

impl ManifoldDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn load(&self) -> Result<Loaded, CliError> {
        if self.coordinates.len() != self.dimension {
            return Err(invalid(
                "coordinates",
                format!(
                    "{} names for dimension {}",
                    self.coordinates.len(),
                    self.dimension
                ),
            ));
        }
        let chart = Chart::new(self.coordinates.clone())
            .map_err(|e| invalid("coordinates", e.to_string()))?;
        let epsilon =
            Epsilon::from_sign(self.epsilon).map_err(|e| invalid("epsilon", e.to_string()))?;

        let metric = square(&chart, "metric", &self.metric)?;
        for i in 0..chart.dim() {
            for j in 0..i {
                if metric[i][j] != metric[j][i] {
                    return Err(invalid(
                        format!("metric[{i}][{j}]"),
                        format!(
                            "invariant violated: metric is not symmetric ({} vs {})",
                            metric[i][j], metric[j][i]
                        ),
                    ));
                }
            }
        }
        let g = TensorField::bilinear(&chart, metric).expect("square");
        let phi =
            TensorField::endomorphism(&chart, square(&chart, "phi", &self.phi)?).expect("square");
        let xi =
            TensorField::vector(&chart, list(&chart, "xi", &self.xi)?).expect("length checked");
        let eta =
            TensorField::covector(&chart, list(&chart, "eta", &self.eta)?).expect("length checked");
        let structure = ContactStructure::new(phi, xi, eta, g, epsilon)
            .map_err(|e| invalid("structure", e.to_string()))?;

        let soliton = match &self.soliton {
            None => None,
            Some(block) => Some(block.load(&chart)?),
        };
        Ok(Loaded {
            name: self.name.clone(),
            structure,
            soliton,
        })
    }

    pub fn from_structure(name: &str, s: &ContactStructure, soliton: Option<&SolitonData>) -> Self {
        let n = s.chart().dim();
        let show = |t: &TensorField, idx: &[usize]| t.get(idx).to_string();
        let matrix = |t: &TensorField| -> Vec<Vec<String>> {
            (0..n)
                .map(|i| (0..n).map(|j| show(t, &[i, j])).collect())
                .collect()
        };
        let vector = |t: &TensorField| -> Vec<String> { (0..n).map(|i| show(t, &[i])).collect() };
        ManifoldDocument {
            name: name.to_string(),
            dimension: n,
            coordinates: s.chart().coordinates().to_vec(),
            epsilon: s.epsilon().sign(),
            metric: matrix(s.metric()),
            xi: vector(s.xi()),
            eta: vector(s.eta()),
            phi: matrix(s.phi()),
            soliton: soliton.map(|d| SolitonBlock {
                vector: match &d.potential {
                    Potential::Vector(v) => Some(vector(v)),
                    Potential::Scalar(_) => None,
                },
                potential: match &d.potential {
                    Potential::Scalar(f) => Some(f.to_string()),
                    Potential::Vector(_) => None,
                },
                lambda: d.lambda.to_string(),
                mu: d.mu.to_string(),
            }),
        }
    }
}

impl SolitonBlock {
    fn load(&self, chart: &Chart) -> Result<SolitonData, CliError> {
        let lambda = rational("soliton.lambda", &self.lambda)?;
        let mu = rational("soliton.mu", &self.mu)?;
        match (&self.vector, &self.potential) {
            (Some(v), None) => {
                let comps = list(chart, "soliton.vector", v)?;
                Ok(SolitonData::vector(
                    TensorField::vector(chart, comps).expect("length checked"),
                    lambda,
                    mu,
                ))
            }
            (None, Some(f)) => Ok(SolitonData::scalar(
                expr(chart, "soliton.potential".into(), f)?,
                lambda,
                mu,
            )),
            _ => Err(invalid(
                "soliton",
                "exactly one of `vector` and `potential` is required",
            )),
        }
    }
}

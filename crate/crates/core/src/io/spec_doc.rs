use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSpec, StructureEquation, StructureTerm};
use crate::arith::ParamExpr;
use crate::error::{Error, Result};

/// A matrix entry or structure constant as written in the file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Int(n) => n.to_string(),
            Scalar::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub i: usize,
    pub j: usize,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationDocument {
    pub k: usize,
    pub terms: Vec<TermDocument>,
}

/// The on-disk JSON layout of an algebra with its hypercomplex structure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub name: String,
    pub dimension: usize,
    #[serde(default)]
    pub parameters: Vec<String>,
    #[serde(default)]
    pub structure: Vec<EquationDocument>,
    #[serde(rename = "I")]
    pub i: Vec<Vec<Scalar>>,
    #[serde(rename = "J")]
    pub j: Vec<Vec<Scalar>>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

/// Parses a JSON spec document, reporting schema errors with their path and line.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    let doc = parse_document(text)?;
    doc.to_spec()
}

pub fn parse_document(text: &str) -> Result<SpecDocument> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Schema { path: if path == "." { "document".into() } else { path }, message: inner.to_string() }
    })
}

impl SpecDocument {
    pub fn to_spec(&self) -> Result<AlgebraSpec> {
        for (a, p) in self.parameters.iter().enumerate() {
            let ok = p.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && p.chars().all(|c| c.is_alphanumeric() || c == '_')
                && p != "i";
            if !ok {
                return Err(Error::Schema {
                    path: format!("parameters[{a}]"),
                    message: format!("`{p}` is not a valid parameter name"),
                });
            }
        }
        let expr = |s: &Scalar, path: String| -> Result<ParamExpr> {
            ParamExpr::parse(&s.text(), &self.parameters).map_err(|e| match e {
                Error::CoefficientParse { input, offset, message } => {
                    Error::CoefficientParse { input, offset, message: format!("{message} (at {path})") }
                }
                Error::DivisionByZero => Error::Schema { path, message: "division by zero".into() },
                other => other,
            })
        };
        let mut structure = Vec::new();
        for (e, eq) in self.structure.iter().enumerate() {
            let mut terms = Vec::new();
            for (t, term) in eq.terms.iter().enumerate() {
                terms.push(StructureTerm {
                    i: term.i,
                    j: term.j,
                    coeff: expr(&term.coeff, format!("structure[{e}].terms[{t}].coeff"))?,
                });
            }
            structure.push(StructureEquation { k: eq.k, terms });
        }
        let matrix = |m: &Vec<Vec<Scalar>>, name: &str| -> Result<Vec<Vec<ParamExpr>>> {
            if m.len() != self.dimension {
                return Err(Error::Schema {
                    path: name.into(),
                    message: format!("expected {} rows, found {}", self.dimension, m.len()),
                });
            }
            m.iter()
                .enumerate()
                .map(|(a, row)| {
                    if row.len() != self.dimension {
                        return Err(Error::Schema {
                            path: format!("{name}[{a}]"),
                            message: format!("expected {} entries, found {}", self.dimension, row.len()),
                        });
                    }
                    row.iter().enumerate().map(|(b, x)| expr(x, format!("{name}[{a}][{b}]"))).collect()
                })
                .collect()
        };
        Ok(AlgebraSpec {
            name: self.name.clone(),
            dimension: self.dimension,
            parameters: self.parameters.clone(),
            structure,
            i_matrix: matrix(&self.i, "I")?,
            j_matrix: matrix(&self.j, "J")?,
            k_matrix: self.k.as_ref().map(|k| matrix(k, "K")).transpose()?,
            metadata: self.metadata.clone(),
        })
    }
}

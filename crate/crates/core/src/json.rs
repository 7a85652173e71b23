//! JSON file formats. Field elements are written as integer encodings: an F_q
//! element as `sum_i c_i p^i`, an F_(q^m) element as the array of its `m`
//! coordinate encodings.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::RankMetricCode;
use crate::constructions::{Construction, WitnessPlan};
use crate::error::{Error, Result};
use crate::field::{BaseElem, ExtElem, ExtField, FieldDescriptor};
use crate::geometry::QSystem;
use crate::linalg::{ExtMatrix, FqMatrix};

pub type ElemJson = Vec<u64>;

pub fn elem_to_json(field: &ExtField, a: &ExtElem) -> ElemJson {
    field.coords(a).iter().map(|c| c.0 as u64).collect()
}

pub fn elem_from_json(field: &ExtField, raw: &[u64]) -> Result<ExtElem> {
    let coords = raw
        .iter()
        .map(|&c| field.base().element(c))
        .collect::<Result<Vec<BaseElem>>>()?;
    field.from_coords(&coords)
}

fn vector_from_json(field: &ExtField, raw: &[ElemJson]) -> Result<Vec<ExtElem>> {
    raw.iter().map(|a| elem_from_json(field, a)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub weight: usize,
    pub x: Vec<ElemJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub descriptor: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "G")]
    pub g: Vec<Vec<ElemJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessJson>>,
}

impl CodeJson {
    pub fn from_code(code: &RankMetricCode) -> Self {
        let f = code.field();
        let g = code
            .generator()
            .to_rows()
            .iter()
            .map(|row| row.iter().map(|a| elem_to_json(f, a)).collect())
            .collect();
        CodeJson {
            descriptor: code.descriptor(),
            n: code.n(),
            k: code.k(),
            g,
            profile: None,
            witnesses: None,
        }
    }

    pub fn from_construction(c: &Construction, with_witnesses: bool) -> Self {
        let mut out = Self::from_code(&c.code);
        out.profile = Some(c.profile.blocks.clone());
        if with_witnesses {
            out.witnesses = Some(witnesses_to_json(c.code.field(), &c.witnesses));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_code(&self) -> Result<RankMetricCode> {
        let field = Arc::new(ExtField::from_descriptor(&self.descriptor)?);
        let rows = self
            .g
            .iter()
            .map(|r| vector_from_json(&field, r))
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != self.k || rows.iter().any(|r| r.len() != self.n) {
            return Err(Error::Parse(format!(
                "G does not have shape {}x{}",
                self.k, self.n
            )));
        }
        RankMetricCode::new(field, ExtMatrix::from_rows(&rows)?)
    }

    /// Embedded witness coefficient vectors with their claimed weights.
    pub fn witness_vectors(&self, field: &ExtField) -> Result<Vec<(usize, Vec<ExtElem>)>> {
        self.witnesses
            .iter()
            .flatten()
            .map(|w| {
                if w.x.len() != self.k {
                    return Err(Error::Parse(format!(
                        "witness of length {} for k = {}",
                        w.x.len(),
                        self.k
                    )));
                }
                Ok((w.weight, vector_from_json(field, &w.x)?))
            })
            .collect()
    }
}

pub fn witnesses_to_json(field: &ExtField, plan: &WitnessPlan) -> Vec<WitnessJson> {
    plan.targets
        .iter()
        .map(|(&weight, x)| WitnessJson {
            weight,
            x: x.iter().map(|a| elem_to_json(field, a)).collect(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u64>,
}

impl FqMatrixJson {
    pub fn from_matrix(m: &FqMatrix) -> Self {
        FqMatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|c| c.0 as u64).collect(),
        }
    }

    pub fn to_matrix(&self, q: u64) -> Result<FqMatrix> {
        if self.entries.iter().any(|&c| c >= q) {
            return Err(Error::Parse(format!("entry outside F_{q}")));
        }
        let data = self.entries.iter().map(|&c| BaseElem(c as u8)).collect();
        FqMatrix::from_flat(self.rows, self.cols, data)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSystemJson {
    pub k: usize,
    pub dim: usize,
    pub basis: FqMatrixJson,
}

impl QSystemJson {
    pub fn from_system(u: &QSystem) -> Self {
        QSystemJson {
            k: u.k(),
            dim: u.dim(),
            basis: FqMatrixJson::from_matrix(u.basis_matrix()),
        }
    }
}

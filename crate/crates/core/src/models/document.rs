// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Versioned JSON documents.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{catalog_entry, BundleTriple, ManifoldModel, ModelError, Provenance};
use crate::algebra::Partition;
use crate::forms::{IntegralLattice, Z2BilinearSpace, Z2QuadraticForm, Z4QuadraticForm};
use crate::genus::{ChernData, ChiVector, HodgeDiamond};
use crate::json::{ints, unints, JsonInt};

pub const MANIFOLD_SCHEMA: &str = "genuslab/manifold/1";
pub const TRIPLE_SCHEMA: &str = "genuslab/triple/1";
pub const LATTICE_SCHEMA: &str = "genuslab/lattice/1";
pub const Z2FORM_SCHEMA: &str = "genuslab/z2form/1";
pub const Z4FORM_SCHEMA: &str = "genuslab/z4form/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub name: String,
    pub n: usize,
    pub chi: Vec<JsonInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hodge: Option<Vec<Vec<JsonInt>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chern: Option<BTreeMap<String, JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub singular: bool,
}

/// A manifold given inline or by catalog name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ManifoldRef {
    Catalog(String),
    Inline(Box<ManifoldDoc>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleDoc {
    pub schema: String,
    #[serde(rename = "F")]
    pub f: ManifoldRef,
    #[serde(rename = "E")]
    pub e: ManifoldRef,
    #[serde(rename = "B")]
    pub b: ManifoldRef,
    pub monodromy_mod4_trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeDoc {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub gram: Vec<Vec<i64>>,
}

/// `h` lists the enhancement on the standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Z2FormDoc {
    pub schema: String,
    pub gram: Vec<Vec<i64>>,
    pub h: Vec<u8>,
}

/// `q` lists the Z/4 values on the standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Z4FormDoc {
    pub schema: String,
    pub gram: Vec<Vec<i64>>,
    pub q: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Manifold(ManifoldModel),
    Triple(BundleTriple),
    Lattice {
        name: Option<String>,
        lattice: IntegralLattice,
    },
    Z2Form(Z2QuadraticForm),
    Z4Form(Z4QuadraticForm),
}

fn parse_err(e: impl ToString) -> ModelError {
    ModelError::Parse(e.to_string())
}

impl ManifoldDoc {
    pub fn from_model(m: &ManifoldModel) -> Self {
        ManifoldDoc {
            schema: Some(MANIFOLD_SCHEMA.into()),
            name: m.name.clone(),
            n: m.dim(),
            chi: ints(m.chi.values()),
            hodge: m.hodge.as_ref().map(|h| h.rows().iter().map(|r| ints(r)).collect()),
            chern: m.chern.as_ref().map(|c| {
                c.numbers()
                    .iter()
                    .map(|(k, v)| (k.to_string(), JsonInt::from(v)))
                    .collect()
            }),
            lattice: m.lattice.as_ref().map(|l| l.gram().to_vec()),
            singular: m.singular,
        }
    }

    /// Builds the model and re-validates every invariant.
    pub fn into_model(self) -> Result<ManifoldModel, ModelError> {
        if let Some(s) = &self.schema {
            if s != MANIFOLD_SCHEMA {
                return Err(ModelError::Schema(s.clone()));
            }
        }
        if self.chi.len() != self.n + 1 {
            return Err(ModelError::invariant(
                "chi",
                format!("expected {} entries for n = {}, found {}", self.n + 1, self.n, self.chi.len()),
            ));
        }
        let chi = ChiVector::new(self.n, unints(self.chi)).map_err(|e| ModelError::invariant("chi", e))?;
        let hodge = self
            .hodge
            .map(|rows| {
                let n = rows.len().saturating_sub(1);
                HodgeDiamond::new(n, rows.into_iter().map(unints).collect())
            })
            .transpose()
            .map_err(|e| ModelError::invariant("hodge", e))?;
        let chern = self
            .chern
            .map(|map| -> Result<ChernData, ModelError> {
                let mut numbers = BTreeMap::new();
                for (k, v) in map {
                    let part: Partition = k
                        .parse()
                        .map_err(|e| ModelError::invariant(format!("chern[{k:?}]"), e))?;
                    numbers.insert(part, v.0);
                }
                ChernData::new(self.n, numbers).map_err(|e| ModelError::invariant("chern", e))
            })
            .transpose()?;
        let lattice = self
            .lattice
            .map(IntegralLattice::new)
            .transpose()
            .map_err(|e| ModelError::invariant("lattice", e))?;
        let m = ManifoldModel {
            name: self.name,
            chi,
            hodge,
            chern,
            lattice,
            singular: self.singular,
        };
        m.validate()?;
        Ok(m)
    }
}

impl ManifoldRef {
    fn resolve(self, label: &str) -> Result<ManifoldModel, ModelError> {
        let relabel = |err| match err {
            ModelError::Invariant { field, message } => {
                ModelError::invariant(format!("{label}.{field}"), message)
            }
            other => other,
        };
        match self {
            ManifoldRef::Catalog(name) => catalog_entry(&name),
            ManifoldRef::Inline(doc) => doc.into_model().map_err(relabel),
        }
    }
}

impl TripleDoc {
    pub fn from_triple(t: &BundleTriple) -> Self {
        let inline = |m: &ManifoldModel| {
            let mut d = ManifoldDoc::from_model(m);
            d.schema = None;
            ManifoldRef::Inline(Box::new(d))
        };
        TripleDoc {
            schema: TRIPLE_SCHEMA.into(),
            f: inline(&t.f),
            e: inline(&t.e),
            b: inline(&t.b),
            monodromy_mod4_trivial: t.monodromy_mod4_trivial,
            provenance: Some(t.provenance),
        }
    }

    pub fn into_triple(self) -> Result<BundleTriple, ModelError> {
        let t = BundleTriple {
            f: self.f.resolve("F")?,
            e: self.e.resolve("E")?,
            b: self.b.resolve("B")?,
            monodromy_mod4_trivial: self.monodromy_mod4_trivial,
            provenance: self.provenance.unwrap_or(Provenance::User),
        };
        t.validate()?;
        Ok(t)
    }
}

fn z2_space(gram: &[Vec<i64>]) -> Result<Z2BilinearSpace, ModelError> {
    Z2BilinearSpace::from_matrix(gram).map_err(|e| ModelError::invariant("gram", e))
}

fn int_matrix_mod2(s: &Z2BilinearSpace) -> Vec<Vec<i64>> {
    (0..s.dim())
        .map(|i| (0..s.dim()).map(|j| s.entry(i, j) as i64).collect())
        .collect()
}

impl Document {
    pub fn schema(&self) -> &'static str {
        match self {
            Document::Manifold(_) => MANIFOLD_SCHEMA,
            Document::Triple(_) => TRIPLE_SCHEMA,
            Document::Lattice { .. } => LATTICE_SCHEMA,
            Document::Z2Form(_) => Z2FORM_SCHEMA,
            Document::Z4Form(_) => Z4FORM_SCHEMA,
        }
    }

    pub fn to_value(&self) -> serde_json::Value {
        let v = match self {
            Document::Manifold(m) => serde_json::to_value(ManifoldDoc::from_model(m)),
            Document::Triple(t) => serde_json::to_value(TripleDoc::from_triple(t)),
            Document::Lattice { name, lattice } => serde_json::to_value(LatticeDoc {
                schema: LATTICE_SCHEMA.into(),
                name: name.clone(),
                gram: lattice.gram().to_vec(),
            }),
            Document::Z2Form(f) => serde_json::to_value(Z2FormDoc {
                schema: Z2FORM_SCHEMA.into(),
                gram: int_matrix_mod2(f.space()),
                h: (0..f.space().dim()).map(|i| f.eval(1 << i)).collect(),
            }),
            Document::Z4Form(f) => serde_json::to_value(Z4FormDoc {
                schema: Z4FORM_SCHEMA.into(),
                gram: int_matrix_mod2(f.space()),
                q: f.basis_values().iter().map(|&x| x as i64).collect(),
            }),
        };
        v.expect("documents serialize")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("documents serialize")
    }
}

/// Dispatches on the `schema` field and re-validates all invariants.
pub fn parse_document(text: &str) -> Result<Document, ModelError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_err)?;
    let schema = value
        .get("schema")
        .and_then(|s| s.as_str())
        .ok_or_else(|| ModelError::Parse("missing string field \"schema\"".into()))?
        .to_string();
    match schema.as_str() {
        MANIFOLD_SCHEMA => {
            let doc: ManifoldDoc = serde_json::from_value(value).map_err(parse_err)?;
            Ok(Document::Manifold(doc.into_model()?))
        }
        TRIPLE_SCHEMA => {
            let doc: TripleDoc = serde_json::from_value(value).map_err(parse_err)?;
            Ok(Document::Triple(doc.into_triple()?))
        }
        LATTICE_SCHEMA => {
            let doc: LatticeDoc = serde_json::from_value(value).map_err(parse_err)?;
            let lattice =
                IntegralLattice::new(doc.gram).map_err(|e| ModelError::invariant("gram", e))?;
            if !lattice.is_unimodular() {
                return Err(ModelError::invariant(
                    "gram",
                    format!("determinant {} is not ±1", lattice.determinant()),
                ));
            }
            Ok(Document::Lattice {
                name: doc.name,
                lattice,
            })
        }
        Z2FORM_SCHEMA => {
            let doc: Z2FormDoc = serde_json::from_value(value).map_err(parse_err)?;
            let space = z2_space(&doc.gram)?;
            let f = Z2QuadraticForm::from_values(space, &doc.h)
                .map_err(|e| ModelError::invariant("h", e))?;
            Ok(Document::Z2Form(f))
        }
        Z4FORM_SCHEMA => {
            let doc: Z4FormDoc = serde_json::from_value(value).map_err(parse_err)?;
            let space = z2_space(&doc.gram)?;
            let f = Z4QuadraticForm::new(space, &doc.q).map_err(|e| ModelError::invariant("q", e))?;
            Ok(Document::Z4Form(f))
        }
        other => Err(ModelError::Schema(other.into())),
    }
}

pub fn load_document(path: impl AsRef<Path>) -> Result<Document, ModelError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ModelError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_document(&text)
}

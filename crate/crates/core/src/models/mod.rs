// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Manifold fixtures, synthetic bundle triples and JSON ingestion.

mod catalog;
mod document;
mod generate;

pub use catalog::{builtin_catalog, catalog_entry, ChernFactor};
pub use document::{
    load_document, parse_document, Document, LatticeDoc, ManifoldDoc, ManifoldRef, TripleDoc,
    Z2FormDoc, Z4FormDoc, LATTICE_SCHEMA, MANIFOLD_SCHEMA, TRIPLE_SCHEMA, Z2FORM_SCHEMA,
    Z4FORM_SCHEMA,
};
pub use generate::{apply_move, generate_singular_triple, generate_triple, sample_triples};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::forms::{lattice_signature, FormError, IntegralLattice};
use crate::genus::{
    check_duality, chi_vector_from_hodge, genus_from_chern, specialize, ChernData, ChiVector,
    GenusError, HodgeDiamond,
};

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported schema {0:?}")]
    Schema(String),
    #[error("{field}: {message}")]
    Invariant { field: String, message: String },
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
}

impl ModelError {
    pub(crate) fn invariant(field: impl Into<String>, message: impl ToString) -> Self {
        ModelError::Invariant {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

/// A compact complex (possibly singular) variety described by its `χ^p`
/// and whatever supporting data is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldModel {
    pub name: String,
    pub chi: ChiVector,
    pub hodge: Option<HodgeDiamond>,
    pub chern: Option<ChernData>,
    /// Middle-cohomology intersection form (even complex dimension).
    pub lattice: Option<IntegralLattice>,
    pub singular: bool,
}

impl ManifoldModel {
    pub fn from_chi(name: impl Into<String>, chi: ChiVector) -> Self {
        ManifoldModel {
            name: name.into(),
            chi,
            hodge: None,
            chern: None,
            lattice: None,
            singular: false,
        }
    }

    pub fn dim(&self) -> usize {
        self.chi.dim()
    }

    pub fn signature(&self) -> BigInt {
        specialize(&self.chi.chi_y()).signature
    }

    pub fn euler(&self) -> BigInt {
        specialize(&self.chi.chi_y()).euler
    }

    /// Re-checks every invariant, naming the offending field.
    pub fn validate(&self) -> Result<(), ModelError> {
        let n = self.dim();
        if let Some(h) = &self.hodge {
            if h.dim() != n {
                return Err(ModelError::invariant(
                    "hodge",
                    format!("dimension {} does not match n = {n}", h.dim()),
                ));
            }
            let from_hodge = chi_vector_from_hodge(h);
            if let Some(p) = (0..=n).find(|&p| from_hodge.get(p) != self.chi.get(p)) {
                return Err(ModelError::invariant(
                    format!("chi[{p}]"),
                    format!(
                        "Hodge numbers give chi^{p} = {}, document has {}",
                        from_hodge.get(p),
                        self.chi.get(p)
                    ),
                ));
            }
        }
        if let Some(c) = &self.chern {
            if c.dim() != n {
                return Err(ModelError::invariant(
                    "chern",
                    format!("dimension {} does not match n = {n}", c.dim()),
                ));
            }
            let g = genus_from_chern(c).map_err(|e| ModelError::invariant("chern", e))?;
            if g != self.chi.chi_y() {
                return Err(ModelError::invariant(
                    "chern",
                    format!("Chern numbers give chi_y = {g}, chi gives {}", self.chi.chi_y()),
                ));
            }
        }
        if !self.singular && !check_duality(&self.chi) {
            return Err(ModelError::invariant(
                "chi",
                "duality chi^p = (-1)^n chi^(n-p) fails; set singular = true for singular varieties",
            ));
        }
        if let Some(l) = &self.lattice {
            if n % 2 != 0 {
                return Err(ModelError::invariant(
                    "lattice",
                    "intersection form given for odd complex dimension",
                ));
            }
            if !l.is_unimodular() {
                return Err(ModelError::invariant(
                    "lattice",
                    FormError::NotUnimodular(l.determinant().to_string()),
                ));
            }
            let sig = lattice_signature(l).map_err(|e| ModelError::invariant("lattice", e))?;
            if !self.singular && BigInt::from(sig) != self.signature() {
                return Err(ModelError::invariant(
                    "lattice",
                    format!("signature {sig} differs from chi_1 = {}", self.signature()),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Catalog,
    /// Synthesized at the chi-vector level; not known to be realized by an
    /// actual algebraic fiber bundle.
    Generated,
    User,
}

/// `F ↪ E → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleTriple {
    pub f: ManifoldModel,
    pub e: ManifoldModel,
    pub b: ManifoldModel,
    pub monodromy_mod4_trivial: bool,
    pub provenance: Provenance,
}

impl BundleTriple {
    /// Any of the three spaces is flagged singular.
    pub fn is_singular(&self) -> bool {
        self.f.singular || self.e.singular || self.b.singular
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        for (label, m) in [("F", &self.f), ("E", &self.e), ("B", &self.b)] {
            m.validate().map_err(|err| match err {
                ModelError::Invariant { field, message } => {
                    ModelError::invariant(format!("{label}.{field}"), message)
                }
                other => other,
            })?;
        }
        if self.e.dim() != self.f.dim() + self.b.dim() {
            return Err(ModelError::invariant(
                "E.n",
                format!(
                    "dim E = {} but dim F + dim B = {}",
                    self.e.dim(),
                    self.f.dim() + self.b.dim()
                ),
            ));
        }
        if self.e.euler() != self.f.euler() * self.b.euler() {
            return Err(ModelError::invariant(
                "E.chi",
                format!(
                    "Euler characteristic {} is not chi(F) chi(B) = {}",
                    self.e.euler(),
                    self.f.euler() * self.b.euler()
                ),
            ));
        }
        Ok(())
    }
}

impl From<GenusError> for ModelError {
    fn from(e: GenusError) -> Self {
        ModelError::invariant("chi", e)
    }
}

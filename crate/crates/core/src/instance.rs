//! JSON instance files. Complexes are given by facets; closures are computed on
//! load and every subcomplex is named.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "kind": "cover",
//!   "name": "s2-two-punctures",
//!   "vertices": 6,
//!   "facets": [[0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 2, 5], [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 2, 5]],
//!   "subcomplexes": { "north": [[0]], "south": [[1]] },
//!   "cover": ["north", "south"]
//! }
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{CoverError, CoverInstance};
use crate::resolution::{ResolutionError, SpacePairInstance};
use crate::simplicial::{Simplex, SimplicialComplex, SimplicialError, Subcomplex};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{invariant}: {message}")]
    Invariant { invariant: &'static str, message: String },
}

impl InstanceError {
    fn invariant(invariant: &'static str, message: impl ToString) -> Self {
        InstanceError::Invariant {
            invariant,
            message: message.to_string(),
        }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self, InstanceError::Syntax { .. })
    }
}

impl From<serde_json::Error> for InstanceError {
    fn from(e: serde_json::Error) -> Self {
        InstanceError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    SpacePair,
    Cover,
    CoverWithCompanion,
}

/// A complex with named subcomplexes and the ordered list of names that forms
/// the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub vertices: usize,
    pub facets: Vec<Simplex>,
    #[serde(default)]
    pub subcomplexes: BTreeMap<String, Vec<Simplex>>,
    pub family: Vec<String>,
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: u32,
    pub kind: InstanceKind,
    pub name: String,
    pub vertices: usize,
    pub facets: Vec<Simplex>,
    #[serde(default)]
    pub subcomplexes: BTreeMap<String, Vec<Simplex>>,
    /// Names of the members `E_i` (space pairs).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub family: Vec<String>,
    /// Names of the removed subcomplexes `A_i` (covers).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cover: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub companion: Option<PairFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Clone, Debug)]
pub enum Instance {
    Pair(SpacePairInstance),
    Cover(CoverInstance),
}

impl Instance {
    pub fn name(&self) -> &str {
        match self {
            Instance::Pair(p) => &p.name,
            Instance::Cover(c) => &c.name,
        }
    }

    /// Space pairs carried by the instance: the pair itself, or for a cover the
    /// pair formed by its removed subcomplexes and, if present, its companion.
    pub fn space_pairs(&self) -> Vec<SpacePairInstance> {
        match self {
            Instance::Pair(p) => vec![p.clone()],
            Instance::Cover(c) => {
                let mut out = vec![SpacePairInstance::new(c.name.clone(), c.base.clone(), c.removed.clone())
                    .expect("a valid cover has a nonempty family")];
                if let Some(comp) = &c.companion {
                    let mut pair = comp.pair.clone();
                    pair.name = format!("{}/companion", c.name);
                    out.push(pair);
                }
                out
            }
        }
    }
}

fn build_complex(vertices: usize, facets: &[Simplex]) -> Result<Arc<SimplicialComplex>, InstanceError> {
    SimplicialComplex::closure(vertices, facets.iter().cloned())
        .map(Arc::new)
        .map_err(|e| InstanceError::invariant("facets", e))
}

fn named(
    complex: &Arc<SimplicialComplex>,
    table: &BTreeMap<String, Vec<Simplex>>,
    names: &[String],
    field: &'static str,
) -> Result<Vec<Subcomplex>, InstanceError> {
    names
        .iter()
        .map(|n| {
            let gens = table
                .get(n)
                .ok_or_else(|| InstanceError::invariant(field, format!("unknown subcomplex {n:?}")))?;
            Subcomplex::generated(complex.clone(), gens.iter().cloned())
                .map_err(|e: SimplicialError| InstanceError::invariant("subcomplexes", format!("{n:?}: {e}")))
        })
        .collect()
}

impl PairFile {
    fn load(&self, name: &str) -> Result<SpacePairInstance, InstanceError> {
        let complex = build_complex(self.vertices, &self.facets)?;
        let family = named(&complex, &self.subcomplexes, &self.family, "companion.family")?;
        SpacePairInstance::new(name, complex, family)
            .map_err(|e: ResolutionError| InstanceError::invariant("companion.family", e))
    }
}

impl InstanceFile {
    pub fn load(&self) -> Result<Instance, InstanceError> {
        if self.schema != SCHEMA_VERSION {
            return Err(InstanceError::invariant(
                "schema",
                format!("unsupported version {}, expected {SCHEMA_VERSION}", self.schema),
            ));
        }
        let complex = build_complex(self.vertices, &self.facets)?;
        let cover_error = |e: CoverError| match e {
            CoverError::NotACover(_) => InstanceError::invariant("cover condition", e),
            CoverError::CompanionSize { .. } => InstanceError::invariant("companion", e),
            _ => InstanceError::invariant("cover", e),
        };
        match self.kind {
            InstanceKind::SpacePair => {
                if !self.cover.is_empty() || self.companion.is_some() {
                    return Err(InstanceError::invariant("kind", "a space pair has no cover or companion"));
                }
                let family = named(&complex, &self.subcomplexes, &self.family, "family")?;
                let mut pair = SpacePairInstance::new(self.name.clone(), complex, family)
                    .map_err(|e| InstanceError::invariant("family", e))?;
                pair.notes = self.notes.clone();
                Ok(Instance::Pair(pair))
            }
            InstanceKind::Cover | InstanceKind::CoverWithCompanion => {
                if !self.family.is_empty() {
                    return Err(InstanceError::invariant("kind", "a cover lists its members under \"cover\""));
                }
                let removed = named(&complex, &self.subcomplexes, &self.cover, "cover")?;
                let mut inst = CoverInstance::new(self.name.clone(), complex, removed).map_err(cover_error)?;
                inst.notes = self.notes.clone();
                match (&self.companion, self.kind) {
                    (Some(c), InstanceKind::CoverWithCompanion) => {
                        let pair = c.load(&format!("{}/companion", self.name))?;
                        inst = inst.with_companion(pair, c.shift).map_err(cover_error)?;
                    }
                    (None, InstanceKind::Cover) => {}
                    (Some(_), _) => {
                        return Err(InstanceError::invariant("kind", "a companion needs kind cover-with-companion"))
                    }
                    (None, _) => return Err(InstanceError::invariant("companion", "cover-with-companion without a companion")),
                }
                Ok(Instance::Cover(inst))
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files serialize") + "\n"
    }
}

pub fn parse_instance_file(text: &str) -> Result<InstanceFile, InstanceError> {
    Ok(serde_json::from_str(text)?)
}

/// Parses and validates: closures are computed and, for covers, the cover
/// condition is checked.
pub fn parse_instance(text: &str) -> Result<Instance, InstanceError> {
    parse_instance_file(text)?.load()
}

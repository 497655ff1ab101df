//! Resolution of a union of closed subcomplexes by the intersections of its
//! members, and the check that its totalization computes relative cohomology.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{totalize, DoubleComplex};
use crate::report::Report;
use crate::simplicial::{
    relative_cochain_complex, restriction_double_complex, Arrow, SimplicialComplex, SimplicialError, Subcomplex,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("a space pair needs at least one subcomplex")]
    EmptyFamily,
    #[error("subcomplex {0} does not live in the ambient complex")]
    ForeignSubcomplex(usize),
    #[error("intersection level {m} out of range 1..={r}")]
    LevelOutOfRange { m: usize, r: usize },
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

/// A complex `F` with an ordered family `E_1, …, E_r` of closed subcomplexes.
#[derive(Clone, Debug)]
pub struct SpacePairInstance {
    pub name: String,
    pub complex: Arc<SimplicialComplex>,
    pub family: Vec<Subcomplex>,
    pub notes: Option<String>,
}

impl SpacePairInstance {
    pub fn new(
        name: impl Into<String>,
        complex: Arc<SimplicialComplex>,
        family: Vec<Subcomplex>,
    ) -> Result<Self, ResolutionError> {
        if family.is_empty() {
            return Err(ResolutionError::EmptyFamily);
        }
        for (i, e) in family.iter().enumerate() {
            if !Arc::ptr_eq(e.parent(), &complex) && **e.parent() != *complex {
                return Err(ResolutionError::ForeignSubcomplex(i));
            }
        }
        Ok(Self {
            name: name.into(),
            complex,
            family,
            notes: None,
        })
    }

    pub fn r(&self) -> usize {
        self.family.len()
    }

    /// `E_1 ∪ ⋯ ∪ E_r`.
    pub fn union(&self) -> Subcomplex {
        self.family
            .iter()
            .try_fold(Subcomplex::empty(self.complex.clone()), |acc, e| acc.union(e))
            .expect("members share the ambient complex")
    }

    /// The same pair with the family reordered by `order`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self {
            family: order.iter().map(|&i| self.family[i].clone()).collect(),
            ..self.clone()
        }
    }
}

/// `E_J = ⋂_{j∈J} E_j` for every `J` of size `m`, in lexicographic order of `J`.
pub fn intersection_level(inst: &SpacePairInstance, m: usize) -> Result<Vec<Subcomplex>, ResolutionError> {
    let r = inst.r();
    if m == 0 || m > r {
        return Err(ResolutionError::LevelOutOfRange { m, r });
    }
    Ok((0..r)
        .combinations(m)
        .map(|j| {
            j[1..].iter().fold(inst.family[j[0]].clone(), |acc, &i| {
                acc.intersection(&inst.family[i]).expect("members share the ambient complex")
            })
        })
        .collect())
}

/// Column 0 is `C(F)`, column `m` is `⊕_{#J=m} C(E_J)`. The component
/// `J → J ∪ {j}` restricts with sign `(-1)^k`, `k` the position of `j` in the
/// sorted `J ∪ {j}`.
pub fn resolution_double_complex(inst: &SpacePairInstance) -> Result<DoubleComplex, ResolutionError> {
    let r = inst.r();
    let mut columns = vec![vec![Subcomplex::full(inst.complex.clone())]];
    let mut subsets: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for m in 1..=r {
        columns.push(intersection_level(inst, m)?);
        subsets.push((0..r).combinations(m).collect());
    }
    let mut arrows = Vec::new();
    for p in 0..r {
        let index: HashMap<&Vec<usize>, usize> = subsets[p + 1].iter().enumerate().map(|(i, j)| (j, i)).collect();
        for (from, j) in subsets[p].iter().enumerate() {
            for extra in (0..r).filter(|x| !j.contains(x)) {
                let mut bigger = j.clone();
                bigger.push(extra);
                bigger.sort_unstable();
                let position = bigger.iter().position(|&x| x == extra).unwrap();
                arrows.push(Arrow {
                    column: p,
                    from,
                    to: index[&bigger],
                    negative: position % 2 == 1,
                });
            }
        }
    }
    Ok(restriction_double_complex(&columns, &arrows)?)
}

pub const VERIFY_RESOLUTION: &str = "verify-resolution";

/// Compares the totalized resolution with the relative complex of
/// `(F, E_1 ∪ ⋯ ∪ E_r)`.
pub fn verify_resolution(inst: &SpacePairInstance) -> Report {
    let dc = match resolution_double_complex(inst) {
        Ok(dc) => dc,
        Err(e) => return Report::invalid(&inst.name, VERIFY_RESOLUTION, e.to_string()),
    };
    let left = totalize(&dc).cohomology();
    let right = match relative_cochain_complex(&inst.complex, &inst.union()) {
        Ok(c) => c.cohomology(),
        Err(e) => return Report::invalid(&inst.name, VERIFY_RESOLUTION, e.to_string()),
    };
    Report::compare(&inst.name, VERIFY_RESOLUTION, left, right)
}

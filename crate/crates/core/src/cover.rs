//! Covers of a complex by complements of closed subcomplexes and the
//! pseudo-Mayer–Vietoris complex built from them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{totalize, BettiTable, DoubleComplex};
use crate::report::Report;
use crate::resolution::SpacePairInstance;
use crate::simplicial::{
    barycentric_subdivision, relative_cochain_complex, restriction_double_complex, Arrow, SimplicialComplex,
    SimplicialError, Subcomplex, Subdivision,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("a cover needs at least one open set")]
    EmptyCover,
    #[error("removed subcomplex {0} does not live in the base complex")]
    ForeignSubcomplex(usize),
    #[error("no open set contains simplex {0:?}")]
    NotACover(Vec<usize>),
    #[error("companion has {companion} subcomplexes but the cover has {cover} open sets")]
    CompanionSize { companion: usize, cover: usize },
    #[error("index {index} out of range 1..={r}")]
    IndexOutOfRange { index: usize, r: usize },
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

/// A pair whose relative cohomology should match the deepest intersection of
/// the cover after a shift by `shift`.
#[derive(Clone, Debug)]
pub struct Companion {
    pub pair: SpacePairInstance,
    pub shift: i64,
}

/// `U_i` is the complement of `removed[i]` in `base`; the `U_i` must cover
/// `base`, i.e. no simplex lies in every `removed[i]`.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    pub name: String,
    pub base: Arc<SimplicialComplex>,
    pub removed: Vec<Subcomplex>,
    pub companion: Option<Companion>,
    pub notes: Option<String>,
    subdivision: OnceLock<Arc<Subdivision>>,
}

impl CoverInstance {
    pub fn new(
        name: impl Into<String>,
        base: Arc<SimplicialComplex>,
        removed: Vec<Subcomplex>,
    ) -> Result<Self, CoverError> {
        if removed.is_empty() {
            return Err(CoverError::EmptyCover);
        }
        for (i, a) in removed.iter().enumerate() {
            if !Arc::ptr_eq(a.parent(), &base) && **a.parent() != *base {
                return Err(CoverError::ForeignSubcomplex(i));
            }
        }
        let common = removed[1..]
            .iter()
            .try_fold(removed[0].clone(), |acc, a| acc.intersection(a))?;
        if let Some(s) = common.to_complex().iter().next() {
            return Err(CoverError::NotACover(s.clone()));
        }
        Ok(Self {
            name: name.into(),
            base,
            removed,
            companion: None,
            notes: None,
            subdivision: OnceLock::new(),
        })
    }

    pub fn with_companion(mut self, pair: SpacePairInstance, shift: i64) -> Result<Self, CoverError> {
        if pair.r() != self.r() {
            return Err(CoverError::CompanionSize {
                companion: pair.r(),
                cover: self.r(),
            });
        }
        self.companion = Some(Companion { pair, shift });
        Ok(self)
    }

    pub fn r(&self) -> usize {
        self.removed.len()
    }

    pub fn subdivision(&self) -> &Arc<Subdivision> {
        self.subdivision
            .get_or_init(|| Arc::new(barycentric_subdivision(&self.base)))
    }

    /// Model of `⋃_B ⋂_{i∈B} U_i` for blocks of 0-based indices: the full
    /// subcomplex of the subdivision away from `⋂_B ⋃_{i∈B} A_i`.
    pub fn carrier(&self, blocks: &[Vec<usize>]) -> Result<Subcomplex, CoverError> {
        let r = self.r();
        if let Some(&i) = blocks.iter().flatten().find(|&&i| i >= r) {
            return Err(CoverError::IndexOutOfRange { index: i + 1, r });
        }
        let removed = &self.removed;
        Ok(self.subdivision().full_subcomplex(|d, s| {
            blocks
                .iter()
                .any(|b| b.iter().all(|&i| !removed[i].contains_index(d, s)))
        }))
    }

    /// `U_1 ∩ ⋯ ∩ U_r`.
    pub fn deepest_intersection(&self) -> Subcomplex {
        self.carrier(&[(0..self.r()).collect()]).expect("indices in range")
    }

    /// The same cover with the removed subcomplexes reordered by `order`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self {
            removed: order.iter().map(|&i| self.removed[i].clone()).collect(),
            companion: self.companion.as_ref().map(|c| Companion {
                pair: c.pair.permuted(order),
                shift: c.shift,
            }),
            ..self.clone()
        }
    }
}

/// Column `p` (for `0 ≤ p < r`) is the sum over `#J = p` of the cochains of
/// `U_{J̄}`, the union of the `U_i` with `i ∉ J`. The component
/// `J → J ∪ {j}` restricts with sign `(-1)^k`, `k` the position of `j` in the
/// sorted `J ∪ {j}`.
pub fn pseudo_mv_double_complex(inst: &CoverInstance) -> Result<DoubleComplex, CoverError> {
    let r = inst.r();
    let subsets: Vec<Vec<Vec<usize>>> = (0..r).map(|p| (0..r).combinations(p).collect()).collect();
    let mut columns = Vec::with_capacity(r);
    for level in &subsets {
        let mut col = Vec::with_capacity(level.len());
        for j in level {
            let blocks: Vec<Vec<usize>> = (0..r).filter(|i| !j.contains(i)).map(|i| vec![i]).collect();
            col.push(inst.carrier(&blocks)?);
        }
        columns.push(col);
    }
    let mut arrows = Vec::new();
    for p in 0..r.saturating_sub(1) {
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

/// Cohomology of `U_1 ∩ ⋯ ∩ U_r`, moved up by `r - 1` degrees.
pub fn shifted_deepest_table(inst: &CoverInstance) -> BettiTable {
    let shift = inst.r() as i64 - 1;
    inst.deepest_intersection().cochain_complex().cohomology().shifted(-shift)
}

pub const VERIFY_FINAL: &str = "verify-final";
pub const VERIFY_THEOREM: &str = "verify-theorem";

/// Totalized pseudo-Mayer–Vietoris cohomology against the deepest intersection
/// moved up by `r - 1`.
pub fn verify_final(inst: &CoverInstance) -> Report {
    let dc = match pseudo_mv_double_complex(inst) {
        Ok(dc) => dc,
        Err(e) => return Report::invalid(&inst.name, VERIFY_FINAL, e.to_string()),
    };
    let left = totalize(&dc).cohomology();
    Report::compare(&inst.name, VERIFY_FINAL, left, shifted_deepest_table(inst))
}

/// Relative cohomology of the companion pair against the deepest intersection
/// moved up by the companion's shift.
pub fn verify_theorem(inst: &CoverInstance) -> Report {
    let Some(companion) = &inst.companion else {
        return Report::not_applicable(&inst.name, VERIFY_THEOREM, "no companion pair declared");
    };
    let expected_shift = inst.r() as i64 - 1;
    if companion.shift != expected_shift {
        return Report::invalid(
            &inst.name,
            VERIFY_THEOREM,
            format!("companion shift {} differs from r - 1 = {expected_shift}", companion.shift),
        );
    }
    let pair = &companion.pair;
    let left = match relative_cochain_complex(&pair.complex, &pair.union()) {
        Ok(c) => c.cohomology(),
        Err(e) => return Report::invalid(&inst.name, VERIFY_THEOREM, e.to_string()),
    };
    let right = inst
        .deepest_intersection()
        .cochain_complex()
        .cohomology()
        .shifted(-companion.shift);
    Report::compare(&inst.name, VERIFY_THEOREM, left, right)
}

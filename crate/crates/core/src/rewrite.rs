//! Formal complexes of cover terms and their reduction to a single
//! intersection term by Mayer–Vietoris eliminations.
//!
//! A term `(1,2∩3)` stands for `U_1 ∪ (U_2 ∩ U_3)`. Between adjacent degrees
//! there is an arrow `T → T'` whenever `T'` is contained in `T` for every
//! cover, realized as restriction with sign `(-1)^k` where `k` is the position
//! of the one block of `T` that lies in no block of `T'`.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{totalize, BettiTable, DoubleComplex};
use crate::cover::{shifted_deepest_table, CoverError, CoverInstance};
use crate::report::Report;
use crate::simplicial::{restriction_double_complex, Arrow};
use crate::CochainComplex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("blocks must be nonempty, disjoint and use indices from 1")]
    MalformedTerm,
    #[error("{term} is not present in degree {degree}")]
    Missing { term: CoverTerm, degree: usize },
    #[error("{term} in degree {degree} admits no elimination: {reason}")]
    NotEligible {
        term: CoverTerm,
        degree: usize,
        reason: String,
    },
    #[error("arrow {from} -> {to} has {unmatched} unmatched blocks")]
    UnsupportedArrow {
        from: CoverTerm,
        to: CoverTerm,
        unmatched: usize,
    },
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Simplicial(#[from] crate::simplicial::SimplicialError),
}

/// A union of intersections; each block lists 1-based cover indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverTerm {
    blocks: Vec<Vec<usize>>,
}

impl CoverTerm {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self, RewriteError> {
        if blocks.is_empty() || blocks.iter().any(Vec::is_empty) {
            return Err(RewriteError::MalformedTerm);
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        let all: Vec<usize> = blocks.iter().flatten().copied().sorted().collect();
        if all[0] == 0 || all.windows(2).any(|w| w[0] == w[1]) {
            return Err(RewriteError::MalformedTerm);
        }
        Ok(Self { blocks })
    }

    pub fn singletons<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Self::new(indices.into_iter().map(|i| vec![i]).collect()).expect("distinct positive indices")
    }

    /// The single block `1∩⋯∩r`.
    pub fn full_intersection(r: usize) -> Self {
        Self { blocks: vec![(1..=r).collect()] }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Containment of the modeled sets for every cover: each block of `self`
    /// contains some block of `other`.
    pub fn is_contained_in(&self, other: &CoverTerm) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|c| c.iter().all(|i| b.contains(i))))
    }

    /// Positions of the blocks of `self` that fit inside no block of `target`.
    pub fn unmatched_blocks(&self, target: &CoverTerm) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&k| {
                !target
                    .blocks
                    .iter()
                    .any(|c| self.blocks[k].iter().all(|i| c.contains(i)))
            })
            .collect()
    }

    fn zero_based(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.iter().map(|i| i - 1).collect()).collect()
    }
}

impl fmt::Display for CoverTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self.blocks.iter().map(|b| b.iter().join("∩")).join(",");
        write!(f, "({inner})")
    }
}

impl fmt::Debug for CoverTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree `p` holds a sorted multiset of terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalComplex {
    slots: Vec<Vec<CoverTerm>>,
}

impl FormalComplex {
    pub fn new(mut slots: Vec<Vec<CoverTerm>>) -> Self {
        for s in &mut slots {
            s.sort();
        }
        Self { slots }
    }

    pub fn slots(&self) -> &[Vec<CoverTerm>] {
        &self.slots
    }

    pub fn slot(&self, degree: usize) -> &[CoverTerm] {
        self.slots.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn term_count(&self) -> usize {
        self.slots.iter().map(Vec::len).sum()
    }

    /// Pairs `(degree, term)` in order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &CoverTerm)> {
        self.slots.iter().enumerate().flat_map(|(p, s)| s.iter().map(move |t| (p, t)))
    }

    fn remove(&mut self, degree: usize, term: &CoverTerm) {
        let slot = &mut self.slots[degree];
        let i = slot.iter().position(|t| t == term).expect("present");
        slot.remove(i);
    }

    fn insert(&mut self, degree: usize, term: CoverTerm) {
        if self.slots.len() <= degree {
            self.slots.resize_with(degree + 1, Vec::new);
        }
        let slot = &mut self.slots[degree];
        let i = slot.partition_point(|t| *t < term);
        slot.insert(i, term);
    }

    /// Signed arrows between adjacent degrees; `from` and `to` index into the
    /// slots.
    pub fn arrows(&self) -> Result<Vec<Arrow>, RewriteError> {
        let mut out = Vec::new();
        for p in 0..self.slots.len().saturating_sub(1) {
            for (i, t) in self.slots[p].iter().enumerate() {
                for (j, u) in self.slots[p + 1].iter().enumerate() {
                    if !u.is_contained_in(t) {
                        continue;
                    }
                    let unmatched = t.unmatched_blocks(u);
                    if unmatched.len() != 1 {
                        return Err(RewriteError::UnsupportedArrow {
                            from: t.clone(),
                            to: u.clone(),
                            unmatched: unmatched.len(),
                        });
                    }
                    out.push(Arrow {
                        column: p,
                        from: i,
                        to: j,
                        negative: unmatched[0] % 2 == 1,
                    });
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FormalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .slots
            .iter()
            .map(|s| if s.is_empty() { "0".to_string() } else { s.iter().join(" + ") })
            .join(" -> ");
        f.write_str(&text)
    }
}

impl fmt::Debug for FormalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree `p` holds, for each `J ⊆ {1..r}` of size `p < r`, the union of the
/// `U_i` with `i ∉ J`.
pub fn initial_complex(r: usize) -> FormalComplex {
    assert!(r >= 1, "a cover has at least one open set");
    let slots = (0..r)
        .map(|p| {
            (1..=r)
                .combinations(p)
                .map(|j| CoverTerm::singletons((1..=r).filter(|i| !j.contains(i))))
                .collect()
        })
        .collect();
    FormalComplex::new(slots)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RewriteKind {
    /// Removes the only term of the lowest occupied degree.
    InitialElimination,
    PairMerge,
}

impl fmt::Display for RewriteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RewriteKind::InitialElimination => "initial-elimination",
            RewriteKind::PairMerge => "pair-merge",
        })
    }
}

/// One quotient by the exact triple `T → S₁ + S₂ → I`, where `T = (a,X,Y)`,
/// `S₁ = (a,X)`, `S₂ = (a,Y)` and `I = (a,X∩Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub kind: RewriteKind,
    pub degree: usize,
    pub target: CoverTerm,
    pub summands: [CoverTerm; 2],
    pub intersection: CoverTerm,
    pub before: FormalComplex,
    pub after: FormalComplex,
}

impl RewriteStep {
    pub fn triple(&self) -> String {
        format!(
            "{} -> {} + {} -> {}",
            self.target, self.summands[0], self.summands[1], self.intersection
        )
    }
}

/// Eliminates `target` (in `degree`) against its two faces dropping one of its
/// last two blocks; the faces are replaced by the merged term.
pub fn mv_step(
    c: &FormalComplex,
    degree: usize,
    target: &CoverTerm,
) -> Result<(FormalComplex, RewriteStep), RewriteError> {
    let not_eligible = |reason: &str| RewriteError::NotEligible {
        term: target.clone(),
        degree,
        reason: reason.to_string(),
    };
    if !c.slot(degree).contains(target) {
        return Err(RewriteError::Missing {
            term: target.clone(),
            degree,
        });
    }
    let n = target.blocks.len();
    if n < 2 {
        return Err(not_eligible("a single block has no two-part split"));
    }
    let a = &target.blocks[..n - 2];
    let (x, y) = (&target.blocks[n - 2], &target.blocks[n - 1]);
    let with = |extra: Vec<Vec<usize>>| {
        CoverTerm::new(a.iter().cloned().chain(extra).collect()).expect("blocks stay disjoint")
    };
    let s1 = with(vec![x.clone()]);
    let s2 = with(vec![y.clone()]);
    let merged = with(vec![x.iter().chain(y).copied().sorted().collect()]);

    let next = c.slot(degree + 1);
    let mut faces: Vec<&CoverTerm> = next.iter().filter(|u| u.is_contained_in(target)).collect();
    faces.sort();
    let mut expected = vec![&s1, &s2];
    expected.sort();
    if faces != expected {
        return Err(not_eligible("its faces in the next degree are not exactly the two summands"));
    }
    let far = c.slot(degree + 2);
    if far
        .iter()
        .any(|w| (w.is_contained_in(&s1) || w.is_contained_in(&s2)) && !w.is_contained_in(&merged))
    {
        return Err(not_eligible("a face of a summand does not factor through the intersection"));
    }

    let leftmost = c.slots.iter().position(|s| !s.is_empty()) == Some(degree) && c.slot(degree).len() == 1;
    let kind = if leftmost {
        RewriteKind::InitialElimination
    } else {
        RewriteKind::PairMerge
    };
    let mut after = c.clone();
    after.remove(degree, target);
    after.remove(degree + 1, &s1);
    after.remove(degree + 1, &s2);
    after.insert(degree + 1, merged.clone());
    let step = RewriteStep {
        kind,
        degree,
        target: target.clone(),
        summands: [s1, s2],
        intersection: merged,
        before: c.clone(),
        after: after.clone(),
    };
    Ok((after, step))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteTrace {
    pub r: usize,
    pub initial: FormalComplex,
    pub steps: Vec<RewriteStep>,
    pub final_complex: FormalComplex,
}

impl RewriteTrace {
    /// The complexes visited, starting with the initial one.
    pub fn complexes(&self) -> impl Iterator<Item = &FormalComplex> {
        std::iter::once(&self.initial).chain(self.steps.iter().map(|s| &s.after))
    }

    pub fn render(&self) -> String {
        let mut out = format!("r = {}, {} steps\ninitial: {}\n", self.r, self.steps.len(), self.initial);
        for (i, s) in self.steps.iter().enumerate() {
            out += &format!("step {} {} at degree {}: {}\n", i + 1, s.kind, s.degree, s.triple());
            out += &format!("  before: {}\n  after:  {}\n", s.before, s.after);
        }
        out += &format!("final: {}\n", self.final_complex);
        out
    }
}

/// Upper bound on the number of steps of [`reduce`].
pub fn step_bound(r: usize) -> usize {
    (1usize << r.saturating_sub(1)) - 1
}

/// Merges the two last blocks round by round. Within a round the triples are
/// taken from the highest degree down, so every step is a quotient by an
/// acyclic subcomplex.
pub fn reduce(r: usize) -> RewriteTrace {
    let initial = initial_complex(r);
    let mut c = initial.clone();
    let mut steps = Vec::new();
    let mut letters: Vec<Vec<usize>> = (1..=r).map(|i| vec![i]).collect();
    let mut shift = 0;
    while letters.len() >= 2 {
        let n = letters.len();
        let (x, y) = (letters[n - 2].clone(), letters[n - 1].clone());
        let rest = &letters[..n - 2];
        for size in 0..=rest.len() {
            for a in rest.iter().cloned().combinations(size) {
                let target = CoverTerm::new(a.into_iter().chain([x.clone(), y.clone()]).collect())
                    .expect("letters are disjoint");
                let degree = shift + rest.len() - size;
                let (next, step) = mv_step(&c, degree, &target).expect("the reduction order keeps every triple eligible");
                c = next;
                steps.push(step);
            }
        }
        letters.truncate(n - 2);
        letters.push(x.into_iter().chain(y).collect());
        shift += 1;
    }
    RewriteTrace {
        r,
        initial,
        steps,
        final_complex: c,
    }
}

/// Cochains of the model of `t`.
pub fn realize(t: &CoverTerm, inst: &CoverInstance) -> Result<CochainComplex, RewriteError> {
    Ok(inst.carrier(&t.zero_based())?.cochain_complex())
}

/// Columns are the realized slots, horizontals the signed restrictions.
pub fn realize_complex(c: &FormalComplex, inst: &CoverInstance) -> Result<DoubleComplex, RewriteError> {
    let columns = c
        .slots
        .iter()
        .map(|s| s.iter().map(|t| inst.carrier(&t.zero_based())).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(restriction_double_complex(&columns, &c.arrows()?)?)
}

pub fn total_table(c: &FormalComplex, inst: &CoverInstance) -> Result<BettiTable, RewriteError> {
    Ok(totalize(&realize_complex(c, inst)?).cohomology())
}

pub const VERIFY_TRACE: &str = "verify-trace";

/// Realizes every complex of the trace on `inst` and checks that consecutive
/// ones have equal total cohomology and that the last one matches the deepest
/// intersection moved up by `r - 1`.
pub fn verify_trace(tr: &RewriteTrace, inst: &CoverInstance) -> Report {
    if tr.r != inst.r() {
        return Report::invalid(
            &inst.name,
            VERIFY_TRACE,
            format!("trace has r = {} but the cover has {} open sets", tr.r, inst.r()),
        );
    }
    let mut tables = Vec::new();
    for c in tr.complexes() {
        match total_table(c, inst) {
            Ok(t) => tables.push(t),
            Err(e) => return Report::invalid(&inst.name, VERIFY_TRACE, e.to_string()),
        }
    }
    let first = tables[0].clone();
    let last = tables[tables.len() - 1].clone();
    let mut report = Report::compare(&inst.name, VERIFY_TRACE, first, last.clone());
    let mut broken = Vec::new();
    for (i, pair) in tables.windows(2).enumerate() {
        let step = &tr.steps[i];
        report = report.with_detail(format!("step {} {}: {}", i + 1, step.kind, pair[1]));
        if pair[0] != pair[1] {
            broken.push(i + 1);
        }
    }
    if !broken.is_empty() {
        report = report.fail(format!("steps {broken:?} change the total cohomology"));
    }
    let deepest = shifted_deepest_table(inst);
    if last != deepest {
        report = report.fail(format!("final table differs from the shifted deepest intersection {deepest}"));
    }
    report.with_trace(tr.render())
}

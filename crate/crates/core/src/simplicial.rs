//! Finite simplicial complexes, subcomplexes, barycentric subdivision and the
//! full-subcomplex model of open complements.
//!
//! Simplices are stored as strictly increasing vertex lists; within a dimension
//! they are kept in lexicographic order and that order fixes the cochain bases.
//! Faces are oriented by dropping the vertex at position `i` with sign `(-1)^i`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use itertools::Itertools;
use num_traits::One;
use thiserror::Error;

use crate::complex::{ChainMap, CochainComplex, ComplexError, DoubleComplex};
use crate::linalg::{Rational, RationalMatrix};

pub type Simplex = Vec<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("vertex {vertex} out of range for a complex on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("simplex {0:?} must list distinct vertices in increasing order")]
    Unsorted(Simplex),
    #[error("simplex {0:?} is not in the parent complex")]
    NotInParent(Simplex),
    #[error("subcomplexes belong to different parent complexes")]
    MismatchedParent,
    #[error("{0:?} is not contained in the source subcomplex")]
    NotNested(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A face-closed set of simplices on vertices `0..vertex_count`.
pub struct SimplicialComplex {
    vertex_count: usize,
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
    coboundaries: OnceLock<Vec<RationalMatrix>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        Self::from_sorted(self.vertex_count, self.by_dim.clone())
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.by_dim == other.by_dim
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = self.by_dim.iter().map(Vec::len).collect();
        write!(f, "SimplicialComplex(vertices={}, f={:?})", self.vertex_count, counts)
    }
}

fn check_simplex(s: &[usize], vertex_count: usize) -> Result<(), SimplicialError> {
    if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SimplicialError::Unsorted(s.to_vec()));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
        return Err(SimplicialError::VertexOutOfRange {
            vertex: v,
            count: vertex_count,
        });
    }
    Ok(())
}

/// All nonempty faces of a sorted simplex, including itself.
fn faces_of(s: &[usize]) -> impl Iterator<Item = Simplex> + '_ {
    (1..=s.len()).flat_map(move |k| s.iter().copied().combinations(k))
}

impl SimplicialComplex {
    /// The smallest face-closed complex containing `generators`.
    pub fn closure<I>(vertex_count: usize, generators: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut sets: Vec<BTreeSet<Simplex>> = Vec::new();
        for g in generators {
            check_simplex(&g, vertex_count)?;
            for face in faces_of(&g) {
                let d = face.len() - 1;
                if sets.len() <= d {
                    sets.resize_with(d + 1, BTreeSet::new);
                }
                sets[d].insert(face);
            }
        }
        let by_dim = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Self::from_sorted(vertex_count, by_dim))
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted(vertex_count, Vec::new())
    }

    /// `by_dim` must already be face-closed and sorted within each dimension.
    fn from_sorted(vertex_count: usize, mut by_dim: Vec<Vec<Simplex>>) -> Self {
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        let index = by_dim
            .iter()
            .flat_map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)))
            .collect();
        Self {
            vertex_count,
            by_dim,
            index,
            coboundaries: OnceLock::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Top dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Simplex] {
        self.by_dim.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.simplices(dim).len()
    }

    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    /// Position of `s` within its dimension.
    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index.contains_key(s)
    }

    /// Maximal simplices, ordered by dimension and then lexicographically.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut out = Vec::new();
        for level in self.by_dim.iter().rev() {
            for s in level {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            for s in level {
                for i in 0..s.len() {
                    if s.len() > 1 {
                        let mut f = s.clone();
                        f.remove(i);
                        if let Some((k, _)) = self.index.get_key_value(&f) {
                            covered.insert(k);
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Coboundary matrices `δ_q : C^q → C^{q+1}` for `q = 0..dim`.
    pub fn coboundaries(&self) -> &[RationalMatrix] {
        self.coboundaries.get_or_init(|| {
            (0..self.by_dim.len().saturating_sub(1))
                .map(|q| {
                    let mut triplets = Vec::new();
                    for (r, tau) in self.by_dim[q + 1].iter().enumerate() {
                        for i in 0..tau.len() {
                            let mut face = tau.clone();
                            face.remove(i);
                            let c = self.index[&face];
                            let v = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
                            triplets.push((r, c, v));
                        }
                    }
                    RationalMatrix::from_triplets(self.count(q + 1), self.count(q), triplets)
                        .expect("faces are indexed")
                })
                .collect()
        })
    }

    /// Simplicial cochains with the alternating-face coboundary.
    pub fn cochain_complex(&self) -> CochainComplex {
        if self.is_empty() {
            return CochainComplex::zero();
        }
        let dims = self.by_dim.iter().map(Vec::len).collect();
        CochainComplex::new(0, dims, self.coboundaries().to_vec()).expect("δ∘δ = 0 for simplicial cochains")
    }
}

pub fn closure<I>(vertex_count: usize, generators: I) -> Result<SimplicialComplex, SimplicialError>
where
    I: IntoIterator<Item = Simplex>,
{
    SimplicialComplex::closure(vertex_count, generators)
}

pub fn cochain_complex(k: &SimplicialComplex) -> CochainComplex {
    k.cochain_complex()
}

/// A face-closed subset of a parent complex, stored as a membership mask per
/// dimension.
#[derive(Clone)]
pub struct Subcomplex {
    parent: Arc<SimplicialComplex>,
    mask: Vec<Vec<bool>>,
}

impl fmt::Debug for Subcomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<usize> = self.mask.iter().map(|m| m.iter().filter(|b| **b).count()).collect();
        write!(f, "Subcomplex(f={counts:?})")
    }
}

impl PartialEq for Subcomplex {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.mask == other.mask
    }
}

impl Subcomplex {
    pub fn empty(parent: Arc<SimplicialComplex>) -> Self {
        let mask = parent.by_dim.iter().map(|l| vec![false; l.len()]).collect();
        Self { parent, mask }
    }

    pub fn full(parent: Arc<SimplicialComplex>) -> Self {
        let mask = parent.by_dim.iter().map(|l| vec![true; l.len()]).collect();
        Self { parent, mask }
    }

    /// Closure of `generators` inside `parent`.
    pub fn generated<I>(parent: Arc<SimplicialComplex>, generators: I) -> Result<Self, SimplicialError>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut sub = Self::empty(parent);
        for g in generators {
            check_simplex(&g, sub.parent.vertex_count)?;
            if !sub.parent.contains(&g) {
                return Err(SimplicialError::NotInParent(g));
            }
            for face in faces_of(&g) {
                let i = sub.parent.index[&face];
                sub.mask[face.len() - 1][i] = true;
            }
        }
        Ok(sub)
    }

    /// Subcomplex from a predicate that must be closed under taking faces.
    pub(crate) fn from_predicate<F>(parent: Arc<SimplicialComplex>, mut keep: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mask = parent
            .by_dim
            .iter()
            .enumerate()
            .map(|(d, l)| (0..l.len()).map(|i| keep(d, i)).collect())
            .collect();
        Self { parent, mask }
    }

    pub fn parent(&self) -> &Arc<SimplicialComplex> {
        &self.parent
    }

    pub fn same_parent(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent
    }

    pub fn contains_index(&self, dim: usize, idx: usize) -> bool {
        self.mask.get(dim).is_some_and(|m| m[idx])
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        !s.is_empty() && self.parent.index_of(s).is_some_and(|i| self.contains_index(s.len() - 1, i))
    }

    /// Parent indices of the member simplices of dimension `dim`, ascending.
    pub fn members(&self, dim: usize) -> Vec<usize> {
        self.mask
            .get(dim)
            .map(|m| m.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect())
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.mask.iter().map(|m| m.iter().filter(|b| **b).count()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.iter().all(|m| m.iter().all(|b| !*b))
    }

    /// Highest dimension with a member.
    pub fn top_dim(&self) -> Option<usize> {
        (0..self.mask.len()).rev().find(|&d| self.mask[d].iter().any(|b| *b))
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool, SimplicialError> {
        if !self.same_parent(other) {
            return Err(SimplicialError::MismatchedParent);
        }
        Ok(self
            .mask
            .iter()
            .zip(&other.mask)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| !*x || *y)))
    }

    fn combine(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Result<Self, SimplicialError> {
        if !self.same_parent(other) {
            return Err(SimplicialError::MismatchedParent);
        }
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(*x, *y)).collect())
            .collect();
        Ok(Self {
            parent: self.parent.clone(),
            mask,
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self, SimplicialError> {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, SimplicialError> {
        self.combine(other, |a, b| a && b)
    }

    /// The members as a standalone complex on the parent's vertex set.
    pub fn to_complex(&self) -> SimplicialComplex {
        let by_dim = (0..self.mask.len())
            .map(|d| self.members(d).into_iter().map(|i| self.parent.by_dim[d][i].clone()).collect())
            .collect();
        SimplicialComplex::from_sorted(self.parent.vertex_count, by_dim)
    }

    /// Cochains of the subcomplex; bases follow the parent's order.
    pub fn cochain_complex(&self) -> CochainComplex {
        let Some(top) = self.top_dim() else {
            return CochainComplex::zero();
        };
        let members: Vec<Vec<usize>> = (0..=top).map(|d| self.members(d)).collect();
        let cob = self.parent.coboundaries();
        let diffs = (0..top).map(|q| cob[q].select(&members[q + 1], &members[q])).collect();
        CochainComplex::new(0, members.iter().map(Vec::len).collect(), diffs)
            .expect("a subcomplex inherits δ∘δ = 0")
    }
}

/// Coordinate projection from cochains on `from` to cochains on `to ⊆ from`,
/// built on already-computed cochain complexes of both.
pub(crate) fn restriction_between(
    from: &Subcomplex,
    from_cx: Arc<CochainComplex>,
    to: &Subcomplex,
    to_cx: Arc<CochainComplex>,
) -> Result<ChainMap, SimplicialError> {
    if !to.is_subset_of(from)? {
        return Err(SimplicialError::NotNested(format!("{to:?}")));
    }
    let top = from.mask.len();
    let pos: Vec<HashMap<usize, usize>> = (0..top)
        .map(|d| from.members(d).into_iter().enumerate().map(|(k, i)| (i, k)).collect())
        .collect();
    let (src, tgt) = (from_cx.clone(), to_cx.clone());
    let map = ChainMap::new(from_cx, to_cx, |q| {
        if q < 0 || q as usize >= top {
            return RationalMatrix::zeros(tgt.dim(q), src.dim(q));
        }
        let d = q as usize;
        let rows = to.members(d);
        let triplets = rows.iter().enumerate().map(|(r, i)| (r, pos[d][i], Rational::one()));
        RationalMatrix::from_triplets(rows.len(), pos[d].len(), triplets).expect("nested members")
    })?;
    Ok(map)
}

/// Restriction of cochains from `from` to a nested subcomplex `to`.
pub fn restriction(from: &Subcomplex, to: &Subcomplex) -> Result<ChainMap, SimplicialError> {
    let from_cx = Arc::new(from.cochain_complex());
    let to_cx = Arc::new(to.cochain_complex());
    restriction_between(from, from_cx, to, to_cx)
}

/// Restriction of cochains from the whole complex onto `sub`.
pub fn restriction_map(k: &Arc<SimplicialComplex>, sub: &Subcomplex) -> Result<ChainMap, SimplicialError> {
    if !Arc::ptr_eq(k, sub.parent()) && **k != **sub.parent() {
        return Err(SimplicialError::MismatchedParent);
    }
    restriction(&Subcomplex::full(k.clone()), sub)
}

/// Cochains of `k` vanishing on `sub`: the kernel of [`restriction_map`], whose
/// cohomology is the relative cohomology of the pair.
pub fn relative_cochain_complex(k: &Arc<SimplicialComplex>, sub: &Subcomplex) -> Result<CochainComplex, SimplicialError> {
    if !Arc::ptr_eq(k, sub.parent()) && **k != **sub.parent() {
        return Err(SimplicialError::MismatchedParent);
    }
    let Some(top) = k.dim() else {
        return Ok(CochainComplex::zero());
    };
    let outside: Vec<Vec<usize>> = (0..=top)
        .map(|d| (0..k.count(d)).filter(|&i| !sub.contains_index(d, i)).collect())
        .collect();
    let cob = k.coboundaries();
    let diffs = (0..top).map(|q| cob[q].select(&outside[q + 1], &outside[q])).collect();
    Ok(CochainComplex::new(0, outside.iter().map(Vec::len).collect(), diffs)?)
}

/// A signed restriction from piece `from` of column `column` to piece `to` of
/// column `column + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub column: usize,
    pub from: usize,
    pub to: usize,
    pub negative: bool,
}

/// Double complex whose column `p` is the direct sum of the cochain complexes of
/// `columns[p]` and whose horizontal maps are the listed signed restrictions.
/// All pieces must share one parent complex.
pub fn restriction_double_complex(
    columns: &[Vec<Subcomplex>],
    arrows: &[Arrow],
) -> Result<DoubleComplex, SimplicialError> {
    let pieces: Vec<Vec<Arc<CochainComplex>>> = columns
        .iter()
        .map(|col| col.iter().map(|s| Arc::new(s.cochain_complex())).collect())
        .collect();
    let sums: Vec<Arc<CochainComplex>> = pieces
        .iter()
        .map(|col| {
            let refs: Vec<&CochainComplex> = col.iter().map(|c| c.as_ref()).collect();
            Arc::new(CochainComplex::direct_sum(&refs))
        })
        .collect();
    let top = columns
        .iter()
        .flatten()
        .filter_map(Subcomplex::top_dim)
        .max()
        .map_or(0, |d| d + 1);
    // offsets[p][q][i]: first coordinate of piece i in degree q of column p
    let offsets: Vec<Vec<Vec<usize>>> = pieces
        .iter()
        .map(|col| {
            (0..top)
                .map(|q| {
                    let mut acc = 0;
                    col.iter()
                        .map(|c| {
                            let o = acc;
                            acc += c.dim(q as i64);
                            o
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut horizontals = Vec::new();
    for p in 0..columns.len().saturating_sub(1) {
        let mut triplets: Vec<Vec<(usize, usize, Rational)>> = vec![Vec::new(); top];
        for a in arrows.iter().filter(|a| a.column == p) {
            let (src, dst) = (&columns[p][a.from], &columns[p + 1][a.to]);
            if !dst.is_subset_of(src)? {
                return Err(SimplicialError::NotNested(format!("{dst:?}")));
            }
            let value = if a.negative { -Rational::one() } else { Rational::one() };
            for (q, bucket) in triplets.iter_mut().enumerate() {
                let cols: HashMap<usize, usize> =
                    src.members(q).into_iter().enumerate().map(|(k, i)| (i, k)).collect();
                let (ro, co) = (offsets[p + 1][q][a.to], offsets[p][q][a.from]);
                for (r, i) in dst.members(q).into_iter().enumerate() {
                    bucket.push((ro + r, co + cols[&i], value.clone()));
                }
            }
        }
        let (s, t) = (sums[p].clone(), sums[p + 1].clone());
        let map = ChainMap::new(s.clone(), t.clone(), |q| {
            let shape = (t.dim(q), s.dim(q));
            let entries = usize::try_from(q).ok().and_then(|q| triplets.get_mut(q)).map(std::mem::take);
            RationalMatrix::from_triplets(shape.0, shape.1, entries.unwrap_or_default())
                .expect("blocks lie inside the column sums")
        })?;
        horizontals.push(map);
    }
    Ok(DoubleComplex::new(sums, horizontals)?)
}

/// Barycentric subdivision together with the vertex ↦ parent simplex map.
#[derive(Debug)]
pub struct Subdivision {
    parent: Arc<SimplicialComplex>,
    complex: Arc<SimplicialComplex>,
    /// `barycenters[v] = (dim, index)` of the parent simplex behind vertex `v`.
    barycenters: Vec<(usize, usize)>,
}

impl Subdivision {
    pub fn parent(&self) -> &Arc<SimplicialComplex> {
        &self.parent
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn barycenters(&self) -> &[(usize, usize)] {
        &self.barycenters
    }

    pub fn barycenter_simplex(&self, v: usize) -> &Simplex {
        let (d, i) = self.barycenters[v];
        &self.parent.simplices(d)[i]
    }

    /// Full subcomplex spanned by the barycenters of parent simplices for which
    /// `allowed(dim, index)` holds.
    pub fn full_subcomplex<F>(&self, mut allowed: F) -> Subcomplex
    where
        F: FnMut(usize, usize) -> bool,
    {
        let ok: Vec<bool> = self.barycenters.iter().map(|&(d, i)| allowed(d, i)).collect();
        let cx = self.complex.clone();
        Subcomplex::from_predicate(cx.clone(), |d, i| cx.simplices(d)[i].iter().all(|&v| ok[v]))
    }

    /// Model of the complement of the union of `avoided` (subcomplexes of the
    /// parent).
    pub fn open_model(self: &Arc<Self>, avoided: &[Subcomplex]) -> Result<OpenModel, SimplicialError> {
        for a in avoided {
            if !Arc::ptr_eq(a.parent(), &self.parent) && **a.parent() != *self.parent {
                return Err(SimplicialError::MismatchedParent);
            }
        }
        let carrier = self.full_subcomplex(|d, i| !avoided.iter().any(|a| a.contains_index(d, i)));
        Ok(OpenModel {
            subdivision: self.clone(),
            carrier,
        })
    }
}

/// Vertices of the output are the simplices of `k` (by dimension, then
/// lexicographically); simplices are chains of strictly increasing faces.
pub fn barycentric_subdivision(k: &Arc<SimplicialComplex>) -> Subdivision {
    let levels = k.by_dim.len();
    let mut offsets = Vec::with_capacity(levels);
    let mut acc = 0;
    for d in 0..levels {
        offsets.push(acc);
        acc += k.count(d);
    }
    let barycenters: Vec<(usize, usize)> = (0..levels).flat_map(|d| (0..k.count(d)).map(move |i| (d, i))).collect();

    // chains_ending[v] lists every chain whose largest element is vertex v.
    let mut chains_ending: Vec<Vec<Simplex>> = Vec::with_capacity(acc);
    let mut by_len: Vec<Vec<Simplex>> = Vec::new();
    for (v, &(d, i)) in barycenters.iter().enumerate() {
        let tau = &k.by_dim[d][i];
        let mut chains = vec![vec![v]];
        if d > 0 {
            for face in (1..tau.len()).flat_map(|s| tau.iter().copied().combinations(s)) {
                let u = offsets[face.len() - 1] + k.index[&face];
                for c in &chains_ending[u] {
                    let mut ext = c.clone();
                    ext.push(v);
                    chains.push(ext);
                }
            }
        }
        for c in &chains {
            if by_len.len() < c.len() {
                by_len.resize_with(c.len(), Vec::new);
            }
            by_len[c.len() - 1].push(c.clone());
        }
        chains_ending.push(chains);
    }
    for level in &mut by_len {
        level.sort();
    }
    Subdivision {
        parent: k.clone(),
        complex: Arc::new(SimplicialComplex::from_sorted(acc, by_len)),
        barycenters,
    }
}

/// A carrier subcomplex of the barycentric subdivision standing in for an open
/// subset of the parent.
#[derive(Clone, Debug)]
pub struct OpenModel {
    pub subdivision: Arc<Subdivision>,
    pub carrier: Subcomplex,
}

impl OpenModel {
    pub fn cochain_complex(&self) -> CochainComplex {
        self.carrier.cochain_complex()
    }
}

/// Subdivides `k` once and keeps the barycenters of simplices outside every
/// avoided subcomplex.
pub fn open_model(k: &Arc<SimplicialComplex>, avoided: &[Subcomplex]) -> Result<OpenModel, SimplicialError> {
    for a in avoided {
        if !Arc::ptr_eq(a.parent(), k) && **a.parent() != **k {
            return Err(SimplicialError::MismatchedParent);
        }
    }
    Arc::new(barycentric_subdivision(k)).open_model(avoided)
}

/// Shipped test complexes.
pub mod shapes {
    use super::*;

    pub fn simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex::closure(n + 1, [(0..=n).collect()]).unwrap()
    }

    /// Boundary of the octahedron: vertex 0 north, 1 south, 2..=5 the equator.
    pub fn octahedron() -> SimplicialComplex {
        let equator = [2, 3, 4, 5];
        let mut tris = Vec::new();
        for k in 0..4 {
            let (a, b) = (equator[k], equator[(k + 1) % 4]);
            for pole in [0, 1] {
                let mut t = vec![pole, a, b];
                t.sort_unstable();
                tris.push(t);
            }
        }
        SimplicialComplex::closure(6, tris).unwrap()
    }

    /// Boundary of a triangle.
    pub fn circle() -> SimplicialComplex {
        SimplicialComplex::closure(3, [vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    /// Möbius' 7-vertex torus.
    pub fn torus7() -> SimplicialComplex {
        let mut tris = Vec::new();
        for i in 0..7 {
            for t in [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]] {
                let mut t = t.to_vec();
                t.sort_unstable();
                tris.push(t);
            }
        }
        SimplicialComplex::closure(7, tris).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::shapes::*;
    use super::*;
    use crate::complex::BettiTable;

    fn betti(pairs: &[(i64, usize)]) -> BettiTable {
        BettiTable::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn closure_counts() {
        assert_eq!(simplex(2).len(), 7);
        assert!(SimplicialComplex::closure(3, Vec::<Simplex>::new()).unwrap().is_empty());
        assert_eq!(octahedron().len(), 26);
        assert_eq!(
            SimplicialComplex::closure(2, [vec![0, 2]]).unwrap_err(),
            SimplicialError::VertexOutOfRange { vertex: 2, count: 2 }
        );
        assert!(matches!(
            SimplicialComplex::closure(3, [vec![1, 0]]),
            Err(SimplicialError::Unsorted(_))
        ));
    }

    #[test]
    fn subdivision_counts() {
        let edge = Arc::new(simplex(1));
        let sd = barycentric_subdivision(&edge);
        assert_eq!((sd.complex.count(0), sd.complex.count(1)), (3, 2));
        let tri = Arc::new(simplex(2));
        let sd = barycentric_subdivision(&tri);
        assert_eq!(sd.complex.len(), 25);
        assert_eq!((sd.complex.count(0), sd.complex.count(1), sd.complex.count(2)), (7, 12, 6));
        for k in [simplex(3), octahedron(), torus7()] {
            let k = Arc::new(k);
            let sd = barycentric_subdivision(&k);
            assert_eq!(sd.complex.euler_characteristic(), k.euler_characteristic());
            assert_eq!(sd.complex.cochain_complex().cohomology(), k.cochain_complex().cohomology());
        }
    }

    #[test]
    fn cohomology_of_standard_shapes() {
        let point = SimplicialComplex::closure(1, [vec![0]]).unwrap();
        assert_eq!(point.cochain_complex().cohomology(), betti(&[(0, 1)]));
        assert_eq!(circle().cochain_complex().cohomology(), betti(&[(0, 1), (1, 1)]));
        assert_eq!(octahedron().cochain_complex().cohomology(), betti(&[(0, 1), (2, 1)]));
        assert_eq!(torus7().cochain_complex().cohomology(), betti(&[(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn open_model_examples() {
        let oct = Arc::new(octahedron());
        let whole = open_model(&oct, &[]).unwrap();
        assert_eq!(whole.carrier.len(), whole.subdivision.complex.len());

        let north = Subcomplex::generated(oct.clone(), [vec![0]]).unwrap();
        let south = Subcomplex::generated(oct.clone(), [vec![1]]).unwrap();
        let annulus = open_model(&oct, &[north, south]).unwrap();
        assert_eq!(annulus.cochain_complex().cohomology(), betti(&[(0, 1), (1, 1)]));

        let tri = Arc::new(simplex(2));
        let boundary = Subcomplex::generated(tri.clone(), [vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let interior = open_model(&tri, &[boundary]).unwrap();
        assert_eq!(interior.carrier.len(), 1);
        assert_eq!(interior.cochain_complex().cohomology(), betti(&[(0, 1)]));
    }

    #[test]
    fn open_model_rejects_foreign_subcomplex() {
        let a = Arc::new(simplex(2));
        let b = Arc::new(octahedron());
        let foreign = Subcomplex::generated(b, [vec![0]]).unwrap();
        assert_eq!(open_model(&a, &[foreign]).unwrap_err(), SimplicialError::MismatchedParent);
    }

    #[test]
    fn restriction_examples() {
        let k = Arc::new(octahedron());
        let full = Subcomplex::full(k.clone());
        let id = restriction_map(&k, &full).unwrap();
        for q in 0..=2 {
            assert_eq!(id.component(q), RationalMatrix::identity(k.count(q as usize)));
        }
        let none = restriction_map(&k, &Subcomplex::empty(k.clone())).unwrap();
        assert!(none.is_zero());
        assert_eq!(none.target().total_dim(), 0);
    }

    #[test]
    fn relative_examples() {
        let tri = Arc::new(simplex(2));
        let boundary = Subcomplex::generated(tri.clone(), [vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let rel = relative_cochain_complex(&tri, &boundary).unwrap();
        assert_eq!(rel.cohomology(), betti(&[(2, 1)]));
        let rel = relative_cochain_complex(&tri, &Subcomplex::full(tri.clone())).unwrap();
        assert_eq!(rel.total_dim(), 0);

        let oct = Arc::new(octahedron());
        let poles = Subcomplex::generated(oct.clone(), [vec![0], vec![1]]).unwrap();
        let rel = relative_cochain_complex(&oct, &poles).unwrap();
        assert_eq!(rel.cohomology(), betti(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn relative_complex_is_the_kernel_of_restriction() {
        let oct = Arc::new(octahedron());
        let sub = Subcomplex::generated(oct.clone(), [vec![0, 2, 3], vec![1]]).unwrap();
        let res = restriction_map(&oct, &sub).unwrap();
        let rel = relative_cochain_complex(&oct, &sub).unwrap();
        for q in 0..=2 {
            let kernel = res.component(q).kernel_basis();
            assert_eq!(kernel.cols(), rel.dim(q));
        }
    }

    #[test]
    fn facets_of_closure() {
        let k = SimplicialComplex::closure(5, [vec![0, 1, 2], vec![2, 3], vec![4]]).unwrap();
        assert_eq!(k.facets(), vec![vec![4], vec![2, 3], vec![0, 1, 2]]);
    }
}

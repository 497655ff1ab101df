//! Bounded cochain complexes of finite-dimensional rational vector spaces.
//!
//! Every constructor checks its invariants exactly (`d ∘ d = 0`, chain maps
//! commute with differentials), so a value of these types is always valid.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{LinalgError, Rational, RationalMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("differential in degree {degree} has shape {got:?}, expected {expected:?}")]
    DifferentialShape {
        degree: i64,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("d∘d is nonzero starting in degree {0}")]
    NotAComplex(i64),
    #[error("expected {expected} differentials, got {got}")]
    DifferentialCount { expected: usize, got: usize },
    #[error("map component in degree {degree} has shape {got:?}, expected {expected:?}")]
    MapShape {
        degree: i64,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("map does not commute with the differentials in degree {0}")]
    NotAChainMap(i64),
    #[error("horizontal maps compose to a nonzero map out of column {0}")]
    HorizontalSquare(usize),
    #[error("horizontal map {index} does not connect columns {index} and {next}", next = index + 1)]
    HorizontalEndpoints { index: usize },
    #[error("double complex with {columns} columns needs {expected} horizontal maps, got {got}")]
    HorizontalCount {
        columns: usize,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Cohomology dimensions by degree. Only nonzero entries are stored, so two
/// tables compare equal exactly when they agree in every degree.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiTable(BTreeMap<i64, usize>);

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, usize)>>(pairs: I) -> Self {
        let mut t = Self::new();
        for (deg, dim) in pairs {
            t.set(deg, dim);
        }
        t
    }

    pub fn set(&mut self, degree: i64, dim: usize) {
        if dim == 0 {
            self.0.remove(&degree);
        } else {
            self.0.insert(degree, dim);
        }
    }

    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(d, n)| (*d, *n))
    }

    /// Table of `c[k]` given the table of `c`: the entry in degree `m` moves to
    /// degree `m - k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self(self.0.iter().map(|(d, n)| (d - k, *n)).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, n)| if d.rem_euclid(2) == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Degrees in which the two tables differ.
    pub fn mismatches(&self, other: &Self) -> Vec<i64> {
        let mut degrees: Vec<i64> = self.0.keys().chain(other.0.keys()).copied().collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees.retain(|&d| self.get(d) != other.get(d));
        degrees
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, n)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{n}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A bounded cochain complex. Degrees outside `[lo, lo + dims.len())` are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct CochainComplex {
    lo: i64,
    dims: Vec<usize>,
    /// `diffs[i]` maps degree `lo + i` to `lo + i + 1`.
    diffs: Vec<RationalMatrix>,
}

fn sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl CochainComplex {
    /// Checks shapes and `d ∘ d = 0`. `diffs` must hold one matrix per pair of
    /// adjacent degrees in the range.
    pub fn new(lo: i64, dims: Vec<usize>, diffs: Vec<RationalMatrix>) -> Result<Self, ComplexError> {
        let expected = dims.len().saturating_sub(1);
        if diffs.len() != expected {
            return Err(ComplexError::DifferentialCount {
                expected,
                got: diffs.len(),
            });
        }
        for (i, d) in diffs.iter().enumerate() {
            let want = (dims[i + 1], dims[i]);
            if d.shape() != want {
                return Err(ComplexError::DifferentialShape {
                    degree: lo + i as i64,
                    got: d.shape(),
                    expected: want,
                });
            }
        }
        for (i, pair) in diffs.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(ComplexError::NotAComplex(lo + i as i64));
            }
        }
        Ok(Self { lo, dims, diffs })
    }

    pub fn zero() -> Self {
        Self {
            lo: 0,
            dims: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// The field in a single degree.
    pub fn concentrated(degree: i64, dim: usize) -> Self {
        Self {
            lo: degree,
            dims: vec![dim],
            diffs: Vec::new(),
        }
    }

    /// Lowest stored degree; meaningful only when the range is nonempty.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest stored degree (`lo - 1` for the empty range).
    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn dim(&self, degree: i64) -> usize {
        if degree < self.lo || degree > self.hi() {
            0
        } else {
            self.dims[(degree - self.lo) as usize]
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The differential out of `degree`, as a `dim(degree+1) × dim(degree)` matrix.
    pub fn differential(&self, degree: i64) -> RationalMatrix {
        if degree >= self.lo && degree < self.hi() {
            self.diffs[(degree - self.lo) as usize].clone()
        } else {
            RationalMatrix::zeros(self.dim(degree + 1), self.dim(degree))
        }
    }

    fn differential_ref(&self, degree: i64) -> Option<&RationalMatrix> {
        if degree >= self.lo && degree < self.hi() {
            Some(&self.diffs[(degree - self.lo) as usize])
        } else {
            None
        }
    }

    /// `dim H^m = dim ker d_m - rank d_{m-1}` in every degree.
    pub fn cohomology(&self) -> BettiTable {
        let ranks: Vec<usize> = self.diffs.iter().map(RationalMatrix::rank).collect();
        let mut table = BettiTable::new();
        for (i, &dim) in self.dims.iter().enumerate() {
            let out = ranks.get(i).copied().unwrap_or(0);
            let inc = if i > 0 { ranks[i - 1] } else { 0 };
            table.set(self.lo + i as i64, dim - out - inc);
        }
        table
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|d| {
                let n = self.dim(d) as i64;
                if d.rem_euclid(2) == 0 { n } else { -n }
            })
            .sum()
    }

    /// `c[k]`: degree `m` of the result is degree `m + k` of `self`, with
    /// differentials multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Self {
        let s = sign(k);
        Self {
            lo: self.lo - k,
            dims: self.dims.clone(),
            diffs: self.diffs.iter().map(|d| d.scaled(&s)).collect(),
        }
    }

    /// Block-diagonal direct sum over a common degree range.
    pub fn direct_sum(parts: &[&CochainComplex]) -> Self {
        let nonempty: Vec<&&CochainComplex> = parts.iter().filter(|c| !c.dims.is_empty()).collect();
        if nonempty.is_empty() {
            return Self::zero();
        }
        let lo = nonempty.iter().map(|c| c.lo).min().unwrap();
        let hi = nonempty.iter().map(|c| c.hi()).max().unwrap();
        let dims: Vec<usize> = (lo..=hi).map(|d| parts.iter().map(|c| c.dim(d)).sum()).collect();
        let mut diffs = Vec::new();
        for d in lo..hi {
            let (mut row_off, mut col_off) = (0, 0);
            let mut triplets = Vec::new();
            for c in parts {
                if let Some(m) = c.differential_ref(d) {
                    for r in 0..m.rows() {
                        for (col, v) in m.row(r) {
                            triplets.push((row_off + r, col_off + col, v.clone()));
                        }
                    }
                }
                row_off += c.dim(d + 1);
                col_off += c.dim(d);
            }
            let i = (d - lo) as usize;
            diffs.push(
                RationalMatrix::from_triplets(dims[i + 1], dims[i], triplets)
                    .expect("block offsets are in range"),
            );
        }
        Self { lo, dims, diffs }
    }
}

impl fmt::Debug for CochainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CochainComplex(lo={}, dims={:?})", self.lo, self.dims)
    }
}

/// A degreewise map of cochain complexes commuting with the differentials.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: Arc<CochainComplex>,
    target: Arc<CochainComplex>,
    lo: i64,
    components: Vec<RationalMatrix>,
}

fn union_range(a: &CochainComplex, b: &CochainComplex) -> (i64, i64) {
    match (a.dims.is_empty(), b.dims.is_empty()) {
        (true, true) => (0, -1),
        (true, false) => (b.lo, b.hi()),
        (false, true) => (a.lo, a.hi()),
        (false, false) => (a.lo.min(b.lo), a.hi().max(b.hi())),
    }
}

impl ChainMap {
    /// `component(m)` must be a `target.dim(m) × source.dim(m)` matrix for every
    /// degree where either side is nonzero.
    pub fn new<F>(
        source: Arc<CochainComplex>,
        target: Arc<CochainComplex>,
        mut component: F,
    ) -> Result<Self, ComplexError>
    where
        F: FnMut(i64) -> RationalMatrix,
    {
        let (lo, hi) = union_range(&source, &target);
        let mut components = Vec::new();
        for d in lo..=hi {
            let m = component(d);
            let want = (target.dim(d), source.dim(d));
            if m.shape() != want {
                return Err(ComplexError::MapShape {
                    degree: d,
                    got: m.shape(),
                    expected: want,
                });
            }
            components.push(m);
        }
        let map = Self {
            source,
            target,
            lo,
            components,
        };
        for d in lo..hi {
            let left = map.component(d + 1).mul(&map.source.differential(d))?;
            let right = map.target.differential(d).mul(&map.component(d))?;
            if left != right {
                return Err(ComplexError::NotAChainMap(d));
            }
        }
        Ok(map)
    }

    pub fn identity(c: Arc<CochainComplex>) -> Self {
        let comps = c.dims.iter().map(|&n| RationalMatrix::identity(n)).collect();
        Self {
            lo: c.lo,
            source: c.clone(),
            target: c,
            components: comps,
        }
    }

    pub fn zero(source: Arc<CochainComplex>, target: Arc<CochainComplex>) -> Self {
        let (lo, hi) = union_range(&source, &target);
        let components = (lo..=hi)
            .map(|d| RationalMatrix::zeros(target.dim(d), source.dim(d)))
            .collect();
        Self {
            source,
            target,
            lo,
            components,
        }
    }

    pub fn source(&self) -> &Arc<CochainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CochainComplex> {
        &self.target
    }

    pub fn component(&self, degree: i64) -> RationalMatrix {
        let i = degree - self.lo;
        if i >= 0 && (i as usize) < self.components.len() {
            self.components[i as usize].clone()
        } else {
            RationalMatrix::zeros(self.target.dim(degree), self.source.dim(degree))
        }
    }

    fn component_ref(&self, degree: i64) -> Option<&RationalMatrix> {
        let i = degree - self.lo;
        (i >= 0 && (i as usize) < self.components.len()).then(|| &self.components[i as usize])
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ChainMap) -> Result<ChainMap, ComplexError> {
        let src = self.source.clone();
        let tgt = next.target.clone();
        let (lo, hi) = union_range(&src, &tgt);
        let mut table = BTreeMap::new();
        for d in lo..=hi {
            table.insert(d, next.component(d).mul(&self.component(d))?);
        }
        ChainMap::new(src, tgt, |d| table[&d].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RationalMatrix::is_zero)
    }
}

/// Standard mapping cone: `cone^n = source^{n+1} ⊕ target^n` with
/// `d(a, b) = (-d a, f a + d b)`.
pub fn cone(f: &ChainMap) -> CochainComplex {
    let a = f.source();
    let b = f.target();
    let (lo, hi) = match (a.dims.is_empty(), b.dims.is_empty()) {
        (true, true) => return CochainComplex::zero(),
        (true, false) => (b.lo, b.hi()),
        (false, true) => (a.lo - 1, a.hi() - 1),
        (false, false) => ((a.lo - 1).min(b.lo), (a.hi() - 1).max(b.hi())),
    };
    let dims: Vec<usize> = (lo..=hi).map(|n| a.dim(n + 1) + b.dim(n)).collect();
    let mut diffs = Vec::new();
    let minus = -Rational::one();
    for n in lo..hi {
        let mut triplets = Vec::new();
        // source part: -d_A from A^{n+1} to A^{n+2}
        if let Some(da) = a.differential_ref(n + 1) {
            for r in 0..da.rows() {
                for (c, v) in da.row(r) {
                    triplets.push((r, *c, v * &minus));
                }
            }
        }
        let a_next = a.dim(n + 2);
        let a_here = a.dim(n + 1);
        if let Some(fm) = f.component_ref(n + 1) {
            for r in 0..fm.rows() {
                for (c, v) in fm.row(r) {
                    triplets.push((a_next + r, *c, v.clone()));
                }
            }
        }
        if let Some(db) = b.differential_ref(n) {
            for r in 0..db.rows() {
                for (c, v) in db.row(r) {
                    triplets.push((a_next + r, a_here + c, v.clone()));
                }
            }
        }
        let i = (n - lo) as usize;
        diffs.push(RationalMatrix::from_triplets(dims[i + 1], dims[i], triplets).expect("cone blocks in range"));
    }
    CochainComplex::new(lo, dims, diffs).expect("the cone of a chain map is a complex")
}

pub fn is_quasi_iso(f: &ChainMap) -> bool {
    cone(f).cohomology().is_zero()
}

/// Columns `p = 0..columns.len()` with horizontal chain maps from column `p` to
/// column `p + 1`.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    columns: Vec<Arc<CochainComplex>>,
    horizontals: Vec<ChainMap>,
}

impl DoubleComplex {
    pub fn new(columns: Vec<Arc<CochainComplex>>, horizontals: Vec<ChainMap>) -> Result<Self, ComplexError> {
        let expected = columns.len().saturating_sub(1);
        if horizontals.len() != expected {
            return Err(ComplexError::HorizontalCount {
                columns: columns.len(),
                expected,
                got: horizontals.len(),
            });
        }
        for (p, h) in horizontals.iter().enumerate() {
            let same = |a: &Arc<CochainComplex>, b: &Arc<CochainComplex>| Arc::ptr_eq(a, b) || **a == **b;
            if !same(h.source(), &columns[p]) || !same(h.target(), &columns[p + 1]) {
                return Err(ComplexError::HorizontalEndpoints { index: p });
            }
        }
        for (p, pair) in horizontals.windows(2).enumerate() {
            let (lo, hi) = union_range(&columns[p], &columns[p + 2]);
            for q in lo..=hi {
                if let (Some(f), Some(g)) = (pair[0].component_ref(q), pair[1].component_ref(q)) {
                    if !g.mul(f)?.is_zero() {
                        return Err(ComplexError::HorizontalSquare(p));
                    }
                }
            }
        }
        Ok(Self { columns, horizontals })
    }

    pub fn single(column: Arc<CochainComplex>) -> Self {
        Self {
            columns: vec![column],
            horizontals: Vec::new(),
        }
    }

    pub fn columns(&self) -> &[Arc<CochainComplex>] {
        &self.columns
    }

    pub fn horizontals(&self) -> &[ChainMap] {
        &self.horizontals
    }

    /// Alternating sum of the columns' Euler characteristics.
    pub fn euler_characteristic(&self) -> i64 {
        self.columns
            .iter()
            .enumerate()
            .map(|(p, c)| if p % 2 == 0 { c.euler_characteristic() } else { -c.euler_characteristic() })
            .sum()
    }

    /// Reflects the double complex: column `p`, row `q` becomes column `q`, row
    /// `p`. Needs every column to live in degrees `0..`; used to check that the
    /// total cohomology does not depend on which direction carries the sign.
    pub fn transposed(&self) -> Result<Self, ComplexError> {
        let qmax = self
            .columns
            .iter()
            .filter(|c| c.total_dim() > 0)
            .map(|c| c.hi())
            .max()
            .unwrap_or(-1);
        let pcount = self.columns.len();
        let mut new_cols = Vec::new();
        for q in 0..=qmax {
            let dims: Vec<usize> = (0..pcount).map(|p| self.columns[p].dim(q)).collect();
            let diffs = (0..pcount.saturating_sub(1))
                .map(|p| self.horizontals[p].component(q))
                .collect();
            new_cols.push(Arc::new(CochainComplex::new(0, dims, diffs)?));
        }
        let mut new_h = Vec::new();
        for q in 0..qmax {
            let src = new_cols[q as usize].clone();
            let tgt = new_cols[q as usize + 1].clone();
            let cols = &self.columns;
            new_h.push(ChainMap::new(src, tgt, |p| {
                if p < 0 || p as usize >= pcount {
                    RationalMatrix::zeros(0, 0)
                } else {
                    cols[p as usize].differential(q)
                }
            })?);
        }
        DoubleComplex::new(new_cols, new_h)
    }
}

/// Total complex: degree `n` is the sum over `p + q = n`; the differential on
/// the `(p, q)` summand is `horizontal + (-1)^p vertical`.
pub fn totalize(dc: &DoubleComplex) -> CochainComplex {
    let cols = dc.columns();
    let occupied: Vec<(usize, &Arc<CochainComplex>)> =
        cols.iter().enumerate().filter(|(_, c)| c.total_dim() > 0).collect();
    if occupied.is_empty() {
        return CochainComplex::zero();
    }
    let lo = occupied.iter().map(|(p, c)| *p as i64 + c.lo()).min().unwrap();
    let hi = occupied.iter().map(|(p, c)| *p as i64 + c.hi()).max().unwrap();

    // offsets[n - lo][p] = start of the (p, n - p) block inside total degree n
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    let mut dims = Vec::new();
    for n in lo..=hi {
        let mut acc = 0;
        let mut row = Vec::with_capacity(cols.len());
        for (p, c) in cols.iter().enumerate() {
            row.push(acc);
            acc += c.dim(n - p as i64);
        }
        offsets.push(row);
        dims.push(acc);
    }

    let mut diffs = Vec::new();
    for n in lo..hi {
        let i = (n - lo) as usize;
        let mut triplets = Vec::new();
        for (p, c) in cols.iter().enumerate() {
            let q = n - p as i64;
            let src_off = offsets[i][p];
            if let Some(v) = c.differential_ref(q) {
                let s = sign(p as i64);
                let dst_off = offsets[i + 1][p];
                for r in 0..v.rows() {
                    for (k, val) in v.row(r) {
                        triplets.push((dst_off + r, src_off + k, val * &s));
                    }
                }
            }
            if p + 1 < cols.len() {
                if let Some(h) = dc.horizontals[p].component_ref(q) {
                    let dst_off = offsets[i + 1][p + 1];
                    for r in 0..h.rows() {
                        for (k, val) in h.row(r) {
                            triplets.push((dst_off + r, src_off + k, val.clone()));
                        }
                    }
                }
            }
        }
        diffs.push(RationalMatrix::from_triplets(dims[i + 1], dims[i], triplets).expect("total blocks in range"));
    }
    CochainComplex::new(lo, dims, diffs).expect("totalization of a double complex is a complex")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn zero_and_identity_differentials() {
        let c = CochainComplex::new(0, vec![1, 1], vec![int(&[vec![0]])]).unwrap();
        assert_eq!(c.cohomology(), BettiTable::from_pairs([(0, 1), (1, 1)]));
        let c = CochainComplex::new(0, vec![1, 1], vec![int(&[vec![1]])]).unwrap();
        assert!(c.cohomology().is_zero());
    }

    #[test]
    fn rejects_nonzero_square() {
        let d = int(&[vec![1]]);
        let err = CochainComplex::new(0, vec![1, 1, 1], vec![d.clone(), d]).unwrap_err();
        assert_eq!(err, ComplexError::NotAComplex(0));
        let err = CochainComplex::new(0, vec![1, 2], vec![int(&[vec![1]])]).unwrap_err();
        assert!(matches!(err, ComplexError::DifferentialShape { .. }));
    }

    #[test]
    fn shift_examples() {
        let c = CochainComplex::new(0, vec![1, 1], vec![int(&[vec![0]])]).unwrap();
        assert_eq!(c.shift(0), c);
        let s = CochainComplex::new(0, vec![1, 0, 1], vec![
            RationalMatrix::zeros(0, 1),
            RationalMatrix::zeros(1, 0),
        ])
        .unwrap();
        assert_eq!(s.shift(-1).cohomology(), BettiTable::from_pairs([(1, 1), (3, 1)]));
        assert_eq!(s.cohomology().shifted(-1), s.shift(-1).cohomology());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = Arc::new(CochainComplex::new(0, vec![2, 3], vec![int(&[vec![1, 0], vec![0, 0], vec![1, 0]])]).unwrap());
        let id = ChainMap::identity(c.clone());
        assert!(cone(&id).cohomology().is_zero());
        assert!(is_quasi_iso(&id));
    }

    #[test]
    fn cone_onto_zero_shifts_by_one() {
        let c = Arc::new(CochainComplex::new(0, vec![1, 1], vec![int(&[vec![0]])]).unwrap());
        let z = ChainMap::zero(c.clone(), Arc::new(CochainComplex::zero()));
        assert_eq!(cone(&z).cohomology(), c.cohomology().shifted(1));
        assert!(!is_quasi_iso(&z));
    }

    #[test]
    fn zero_map_between_nonacyclic_is_not_quasi_iso() {
        let c = Arc::new(CochainComplex::concentrated(0, 1));
        assert!(!is_quasi_iso(&ChainMap::zero(c.clone(), c)));
    }

    #[test]
    fn rejects_non_chain_map() {
        let a = Arc::new(CochainComplex::new(0, vec![1, 1], vec![int(&[vec![1]])]).unwrap());
        let b = Arc::new(CochainComplex::new(0, vec![1, 1], vec![int(&[vec![0]])]).unwrap());
        let err = ChainMap::new(a, b, |_| int(&[vec![1]])).unwrap_err();
        assert_eq!(err, ComplexError::NotAChainMap(0));
    }

    #[test]
    fn totalize_degenerate_cases() {
        let c = Arc::new(CochainComplex::new(0, vec![1, 2], vec![int(&[vec![1], vec![0]])]).unwrap());
        let t = totalize(&DoubleComplex::single(c.clone()));
        assert_eq!(t, *c);

        let z = Arc::new(CochainComplex::zero());
        let dc = DoubleComplex::new(vec![z.clone(), z.clone()], vec![ChainMap::zero(z.clone(), z)]).unwrap();
        assert_eq!(totalize(&dc).total_dim(), 0);
    }

    #[test]
    fn identity_column_map_totalizes_to_acyclic() {
        let c = Arc::new(CochainComplex::new(0, vec![1, 1], vec![int(&[vec![0]])]).unwrap());
        let dc = DoubleComplex::new(vec![c.clone(), c.clone()], vec![ChainMap::identity(c)]).unwrap();
        let t = totalize(&dc);
        assert!(t.cohomology().is_zero());
        assert_eq!(t.euler_characteristic(), dc.euler_characteristic());
    }

    #[test]
    fn direct_sum_of_offset_complexes() {
        let a = CochainComplex::concentrated(0, 2);
        let b = CochainComplex::new(1, vec![1, 1], vec![int(&[vec![3]])]).unwrap();
        let s = CochainComplex::direct_sum(&[&a, &b]);
        assert_eq!(s.cohomology(), BettiTable::from_pairs([(0, 2)]));
        assert_eq!(s.dim(1), 1);
    }

    #[test]
    fn betti_table_helpers() {
        let t = BettiTable::from_pairs([(0, 1), (1, 0), (2, 1)]);
        assert_eq!(t.to_string(), "{0:1, 2:1}");
        assert_eq!(t.euler_characteristic(), 2);
        assert_eq!(t.shifted(-1), BettiTable::from_pairs([(1, 1), (3, 1)]));
        assert_eq!(t.mismatches(&BettiTable::from_pairs([(0, 1)])), vec![2]);
    }
}

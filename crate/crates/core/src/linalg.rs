//! Exact linear algebra over the rationals.
//!
//! Matrices keep a dense row-major *interface* (every entry is addressable and
//! [`RationalMatrix::entries`] yields `rows * cols` values) but store only the
//! nonzero entries of each row. Coboundary and restriction matrices are almost
//! entirely zeros, so this is what keeps totalized complexes with thousands of
//! generators tractable.
//!
//! Ranks and kernels are computed by Gaussian elimination on sparse rows. The
//! elimination first runs over machine-word fractions with overflow checks and
//! silently restarts over arbitrary-precision rationals if any intermediate value
//! leaves the `i64` range, so results are always exact.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {op} of {left:?} and {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("entry ({row}, {col}) out of bounds for a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

type SparseRow<F> = Vec<(usize, F)>;

/// A matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow<Rational>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        Self {
            rows: n,
            cols: n,
            data,
        }
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        let mut data = vec![Vec::new(); rows];
        for (k, v) in entries.into_iter().enumerate() {
            if !v.is_zero() {
                data[k / cols.max(1)].push((k % cols.max(1), v));
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Convenience constructor from integer rows; all rows must have equal length.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::EntryCount {
                    expected: cols,
                    got: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| rational(v)));
        }
        Self::from_entries(rows.len(), cols, entries)
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions are
    /// summed; resulting zeros are dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::OutOfBounds {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            let slot = acc[r].entry(c).or_insert_with(Rational::zero);
            *slot += v;
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        let r = &self.data[row];
        match r.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(k) => r[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Nonzero entries of one row, sorted by column.
    pub fn row(&self, row: usize) -> &[(usize, Rational)] {
        &self.data[row]
    }

    /// All `rows * cols` entries in row-major order.
    pub fn entries(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rows * self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out[r * self.cols + c] = v.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * factor)).collect())
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Rational::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                op: "product",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = Vec::with_capacity(self.rows);
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for row in &self.data {
            acc.clear();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                }
            }
            data.push(
                std::mem::take(&mut acc)
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::Shape {
                op: "sum",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_add(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// The submatrix on the given row and column indices, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (new, &old) in cols.iter().enumerate() {
            col_pos[old] = new;
        }
        let data = rows
            .iter()
            .map(|&r| {
                let mut row: SparseRow<Rational> = self.data[r]
                    .iter()
                    .filter(|(c, _)| col_pos[*c] != usize::MAX)
                    .map(|(c, v)| (col_pos[*c], v.clone()))
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                row
            })
            .collect();
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Linear rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminating along the shorter side keeps the pivot table small.
        let rows = if self.rows <= self.cols {
            self.data.clone()
        } else {
            self.transpose().data
        };
        match to_small(&rows).and_then(echelon) {
            Some(pivots) => pivots.len(),
            None => echelon(rows).expect("big rational elimination is total").len(),
        }
    }

    /// A basis of the right kernel, one vector per column of the result.
    pub fn kernel_basis(&self) -> Self {
        let pivots = match to_small(&self.data).and_then(|small| {
            let p = echelon(small)?;
            reduce_fully(p)
        }) {
            Some(p) => p
                .into_iter()
                .map(|(c, row)| (c, row.into_iter().map(|(k, v)| (k, v.to_big())).collect()))
                .collect(),
            None => {
                let p = echelon(self.data.clone()).expect("big rational elimination is total");
                reduce_fully(p).expect("big rational elimination is total")
            }
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains_key(c)).collect();
        let mut triplets = Vec::new();
        for (k, &f) in free.iter().enumerate() {
            triplets.push((f, k, Rational::one()));
            for (&lead, row) in &pivots {
                if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    triplets.push((lead, k, -row[pos].1.clone()));
                }
            }
        }
        Self::from_triplets(self.cols, free.len(), triplets).expect("kernel indices are in range")
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for r in 0..self.rows {
                let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        } else {
            writeln!(f, "  {} nonzeros", self.nnz())?;
        }
        write!(f, "]")
    }
}

fn merge_add(a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseRow<Rational> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            let s = &a[i].1 + &b[j].1;
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Field operations used by the eliminator. `None` signals overflow.
trait Scalar: Clone {
    fn is_nil(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn recip(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn recip(&self) -> Option<Self> {
        Some(Rational::recip(self))
    }
}

/// Machine-word fraction in lowest terms with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SmallRational {
    num: i64,
    den: i64,
}

impl SmallRational {
    fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = n.checked_neg()?;
            d = d.checked_neg()?;
        }
        Some(Self { num: n, den: d })
    }

    fn to_big(self) -> Rational {
        Rational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl Scalar for SmallRational {
    fn is_nil(&self) -> bool {
        self.num == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (g1, g2) = (g1.max(1), g2.max(1));
        let n = (self.num / g1).checked_mul(other.num / g2)?;
        let d = (self.den / g2).checked_mul(other.den / g1)?;
        Self::new(n, d)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        let g = self.den.gcd(&other.den);
        let l = (self.den / g).checked_mul(other.den)?;
        let a = self.num.checked_mul(l / self.den)?;
        let b = other.num.checked_mul(l / other.den)?;
        Self::new(a.checked_sub(b)?, l)
    }
    fn recip(&self) -> Option<Self> {
        Self::new(self.den, self.num)
    }
}

fn to_small(rows: &[SparseRow<Rational>]) -> Option<Vec<SparseRow<SmallRational>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|(c, v)| {
                    let n = v.numer().to_i64()?;
                    let d = v.denom().to_i64()?;
                    // Keep headroom so the first products cannot overflow silently.
                    if n.abs() > (1 << 40) || d > (1 << 40) {
                        return None;
                    }
                    Some((*c, SmallRational::new(n, d)?))
                })
                .collect()
        })
        .collect()
}

/// `row - factor * pivot`, both sorted sparse vectors.
fn axpy<F: Scalar>(row: &[(usize, F)], factor: &F, pivot: &[(usize, F)]) -> Option<SparseRow<F>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            let v = factor.mul(&pivot[j].1)?;
            let zero = v.sub(&v)?;
            out.push((pivot[j].0, zero.sub(&v)?));
            j += 1;
        } else {
            let v = row[i].1.sub(&factor.mul(&pivot[j].1)?)?;
            if !v.is_nil() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Row echelon form keyed by leading column; pivot rows are normalized so the
/// leading coefficient is one.
fn echelon<F: Scalar>(mut rows: Vec<SparseRow<F>>) -> Option<BTreeMap<usize, SparseRow<F>>> {
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(Vec::len);
    let mut pivots: BTreeMap<usize, SparseRow<F>> = BTreeMap::new();
    for mut row in rows {
        while let Some((lead, coeff)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => row = axpy(&row, &coeff, p)?,
                None => {
                    let inv = coeff.recip()?;
                    let normalized = row
                        .iter()
                        .map(|(c, v)| Some((*c, v.mul(&inv)?)))
                        .collect::<Option<Vec<_>>>()?;
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    Some(pivots)
}

/// Turns an echelon form into reduced row echelon form.
fn reduce_fully<F: Scalar>(
    mut pivots: BTreeMap<usize, SparseRow<F>>,
) -> Option<BTreeMap<usize, SparseRow<F>>> {
    let leads: Vec<usize> = pivots.keys().copied().collect();
    for &lead in leads.iter().rev() {
        let p = pivots[&lead].clone();
        for &other in leads.iter().filter(|&&l| l < lead) {
            let row = &pivots[&other];
            if let Ok(pos) = row.binary_search_by_key(&lead, |(c, _)| *c) {
                let factor = row[pos].1.clone();
                let reduced = axpy(row, &factor, &p)?;
                pivots.insert(other, reduced);
            }
        }
    }
    Some(pivots)
}

/// Absolute value of the largest numerator or denominator; handy in tests that
/// check coefficient growth stays modest.
pub fn max_height(m: &RationalMatrix) -> BigInt {
    let mut best = BigInt::zero();
    for r in 0..m.rows() {
        for (_, v) in m.row(r) {
            best = best.max(v.numer().abs()).max(v.denom().clone());
        }
    }
    best
}

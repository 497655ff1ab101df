//! Cyclic Plücker monomials, their grouping into sections of prescribed
//! degrees, and the torus complement check in the projective case.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::complex::BettiTable;
use crate::report::Report;
use crate::simplicial::{Simplex, SimplicialComplex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("need 1 <= d <= N, got d = {d}, N = {n}")]
    BadShape { d: usize, n: usize },
    #[error("degrees sum to {sum}, expected N = {n}")]
    DegreeSum { sum: usize, n: usize },
    #[error("section degrees must be positive")]
    ZeroDegree,
    #[error("coordinate start {start} outside 1..={n}")]
    BadStart { start: usize, n: usize },
    #[error("only d = 1 with 2 <= N <= 4 is checked, got d = {d}, N = {n}")]
    Unsupported { d: usize, n: usize },
    #[error("torus dimension {0} outside 1..=3")]
    TorusDimension(usize),
}

/// The coordinate `x_{s, s+1, …, s+d-1}` with indices taken mod `N` in `1..=N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PluckerIndex {
    pub d: usize,
    pub n: usize,
    pub start: usize,
}

impl PluckerIndex {
    pub fn new(d: usize, n: usize, start: usize) -> Result<Self, GrassmannError> {
        if d == 0 || d > n {
            return Err(GrassmannError::BadShape { d, n });
        }
        if start == 0 || start > n {
            return Err(GrassmannError::BadStart { start, n });
        }
        Ok(Self { d, n, start })
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.d).map(|k| (self.start - 1 + k) % self.n + 1).collect()
    }
}

impl fmt::Display for PluckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{}]", self.indices().iter().join(","))
    }
}

/// A product of `degree` consecutive cyclic coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PluckerMonomialSection {
    pub degree: usize,
    pub factors: Vec<PluckerIndex>,
}

impl fmt::Display for PluckerMonomialSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.factors.iter().join("*"))
    }
}

/// The `i`-th section takes the next `degrees[i]` of the `N` cyclic coordinates,
/// so together they use each factor of `x_{1..d} x_{2..d+1} ⋯ x_{N,1..d-1}`
/// exactly once.
pub fn plucker_sections(d: usize, n: usize, degrees: &[usize]) -> Result<Vec<PluckerMonomialSection>, GrassmannError> {
    if d == 0 || d > n {
        return Err(GrassmannError::BadShape { d, n });
    }
    if degrees.contains(&0) {
        return Err(GrassmannError::ZeroDegree);
    }
    let sum: usize = degrees.iter().sum();
    if sum != n {
        return Err(GrassmannError::DegreeSum { sum, n });
    }
    let mut start = 1;
    let mut out = Vec::with_capacity(degrees.len());
    for &degree in degrees {
        let factors = (start..start + degree)
            .map(|s| PluckerIndex::new(d, n, s))
            .collect::<Result<_, _>>()?;
        out.push(PluckerMonomialSection { degree, factors });
        start += degree;
    }
    Ok(out)
}

/// Product of `k` triangle boundaries, triangulated by staircases: vertices are
/// words in `{0,1,2}^k` ordered lexicographically, and each product of edges
/// contributes one top simplex per order of raising the coordinates.
pub fn torus_model(k: usize) -> Result<SimplicialComplex, GrassmannError> {
    if !(1..=3).contains(&k) {
        return Err(GrassmannError::TorusDimension(k));
    }
    let edges = [(0, 1), (0, 2), (1, 2)];
    let encode = |w: &[usize]| w.iter().fold(0, |acc, &x| acc * 3 + x);
    let mut facets: Vec<Simplex> = Vec::new();
    for choice in (0..k).map(|_| edges.iter()).multi_cartesian_product() {
        for order in (0..k).permutations(k) {
            let mut word: Vec<usize> = choice.iter().map(|e| e.0).collect();
            let mut facet = vec![encode(&word)];
            for &i in &order {
                word[i] = choice[i].1;
                facet.push(encode(&word));
            }
            facets.push(facet);
        }
    }
    Ok(SimplicialComplex::closure(3usize.pow(k as u32), facets).expect("words encode in range"))
}

fn binomial_table(k: usize) -> BettiTable {
    let mut table = BettiTable::new();
    let mut c = 1usize;
    for m in 0..=k {
        table.set(m as i64, c);
        c = c * (k - m) / (m + 1);
    }
    table
}

pub const RANK_ONE: &str = "rank-one";

/// For `d = 1` the complement of the coordinate hyperplanes in `P^{N-1}` is a
/// torus; PASS iff its model has the binomial Betti table, in particular a
/// one-dimensional top group.
pub fn rank_one_check(d: usize, n: usize, degrees: &[usize]) -> Result<Report, GrassmannError> {
    if d != 1 || !(2..=4).contains(&n) {
        return Err(GrassmannError::Unsupported { d, n });
    }
    let sections = plucker_sections(d, n, degrees)?;
    let table = torus_model(n - 1)?.cochain_complex().cohomology();
    let name = format!("d={d} N={n} degrees={}", degrees.iter().join(","));
    let top = table.get(n as i64 - 1);
    let mut report = Report::compare(&name, RANK_ONE, table, binomial_table(n - 1))
        .with_detail(format!("top Betti number h^{} = {top}", n - 1));
    for (i, s) in sections.iter().enumerate() {
        report = report.with_detail(format!("b{} = {s}", i + 1));
    }
    if top != 1 {
        report = report.fail("top Betti number is not 1");
    }
    Ok(report)
}

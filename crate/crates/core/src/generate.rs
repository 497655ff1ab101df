//! Seeded random cover instances.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::instance::{InstanceFile, InstanceKind, SCHEMA_VERSION};
use crate::simplicial::{Simplex, SimplicialComplex, Subcomplex};

pub const MAX_VERTICES: usize = 12;
pub const MAX_DIMENSION: usize = 3;
pub const MAX_R: usize = 4;
const RETRIES: usize = 200;

#[derive(Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("parameter {name} = {value} outside {range}")]
    OutOfBounds {
        name: &'static str,
        value: String,
        range: &'static str,
    },
    #[error("no valid cover found after {0} attempts")]
    RetriesExhausted(usize),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub vertices: usize,
    pub dimension: usize,
    pub r: usize,
    /// Number of facets per vertex.
    pub density: f64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            vertices: 8,
            dimension: 2,
            r: 3,
            density: 0.5,
        }
    }
}

impl GenParams {
    /// Parameters of the `i`-th member of a random suite; cycles through sizes,
    /// dimensions and cover counts.
    pub fn for_suite(i: u64) -> Self {
        Self {
            vertices: 5 + (i % 8) as usize,
            dimension: 1 + (i % 3) as usize,
            r: 1 + (i % 4) as usize,
            density: 1.0,
        }
    }

    fn check(&self) -> Result<(), GenerateError> {
        let bad = |name, value: String, range| Err(GenerateError::OutOfBounds { name, value, range });
        if !(1..=MAX_VERTICES).contains(&self.vertices) {
            return bad("vertices", self.vertices.to_string(), "1..=12");
        }
        if self.dimension > MAX_DIMENSION {
            return bad("dimension", self.dimension.to_string(), "0..=3");
        }
        if !(1..=MAX_R).contains(&self.r) {
            return bad("r", self.r.to_string(), "1..=4");
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return bad("density", self.density.to_string(), "(0, 1]");
        }
        Ok(())
    }
}

/// A random complex and `r` random closed subcomplexes (each generated by up
/// to two vertices or edges) with empty common intersection. Deterministic in
/// `seed`.
pub fn generate_random(seed: u64, params: GenParams) -> Result<InstanceFile, GenerateError> {
    params.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.vertices;
    let facet_count = ((params.density * n as f64).round() as usize).max(1);
    let mut facets: Vec<Simplex> = Vec::with_capacity(facet_count);
    for _ in 0..facet_count {
        let size = rng.gen_range(1..=(params.dimension + 1).min(n));
        let mut f = sample(&mut rng, n, size).into_vec();
        f.sort_unstable();
        facets.push(f);
    }
    let complex = Arc::new(SimplicialComplex::closure(n, facets).expect("sampled vertices are in range"));
    let small: Vec<Simplex> = complex
        .simplices(0)
        .iter()
        .chain(complex.simplices(1))
        .cloned()
        .collect();

    for _ in 0..RETRIES {
        let mut removed = Vec::with_capacity(params.r);
        for _ in 0..params.r {
            let count = rng.gen_range(0..=2);
            let gens: Vec<Simplex> = (0..count).map(|_| small[rng.gen_range(0..small.len())].clone()).collect();
            removed.push(Subcomplex::generated(complex.clone(), gens).expect("generators come from the complex"));
        }
        let common = removed[1..]
            .iter()
            .fold(removed[0].clone(), |acc, a| acc.intersection(a).expect("same parent"));
        if !common.is_empty() {
            continue;
        }
        let mut subcomplexes = BTreeMap::new();
        let mut names = Vec::new();
        for (i, a) in removed.iter().enumerate() {
            let name = format!("a{}", i + 1);
            subcomplexes.insert(name.clone(), a.to_complex().facets());
            names.push(name);
        }
        return Ok(InstanceFile {
            schema: SCHEMA_VERSION,
            kind: InstanceKind::Cover,
            name: format!("random-{seed:04}"),
            vertices: n,
            facets: complex.facets(),
            subcomplexes,
            family: Vec::new(),
            cover: names,
            companion: None,
            notes: Some(format!(
                "generated: seed {seed}, vertices {n}, dimension {}, r {}, density {}",
                params.dimension, params.r, params.density
            )),
        });
    }
    Err(GenerateError::RetriesExhausted(RETRIES))
}

#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use snc_cohom::cover::CoverInstance;
use snc_cohom::generate::{generate_random, GenParams};
use snc_cohom::instance::{parse_instance, Instance};
use snc_cohom::simplicial::{SimplicialComplex, Subcomplex};
use snc_cohom::RationalMatrix;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixtures() -> Vec<Instance> {
    let mut paths: Vec<PathBuf> = fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| parse_instance(&fs::read_to_string(p).unwrap()).unwrap())
        .collect()
}

pub fn fixture(name: &str) -> Instance {
    let text = fs::read_to_string(fixture_dir().join(format!("{name}.json"))).unwrap();
    parse_instance(&text).unwrap()
}

pub fn cover_fixture(name: &str) -> CoverInstance {
    match fixture(name) {
        Instance::Cover(c) => c,
        Instance::Pair(_) => panic!("{name} is not a cover"),
    }
}

pub fn cover_fixtures() -> Vec<CoverInstance> {
    fixtures()
        .into_iter()
        .filter_map(|i| match i {
            Instance::Cover(c) => Some(c),
            Instance::Pair(_) => None,
        })
        .collect()
}

pub fn random_cover(seed: u64) -> CoverInstance {
    match generate_random(seed, GenParams::for_suite(seed)).unwrap().load().unwrap() {
        Instance::Cover(c) => c,
        Instance::Pair(_) => unreachable!(),
    }
}

/// Small random covers with arbitrary parameters.
pub fn arb_cover() -> impl Strategy<Value = CoverInstance> {
    (any::<u64>(), 2usize..=9, 1usize..=3, 1usize..=4).prop_map(|(seed, vertices, dimension, r)| {
        let params = GenParams {
            vertices,
            dimension,
            r,
            density: 1.0,
        };
        match generate_random(seed, params).unwrap().load().unwrap() {
            Instance::Cover(c) => c,
            Instance::Pair(_) => unreachable!(),
        }
    })
}

/// Random complex on up to `n` vertices given by random facets.
pub fn arb_complex(n: usize, max_dim: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0..n, 1..=max_dim + 1), 1..=n)
        .prop_map(move |facets| SimplicialComplex::closure(n, facets.into_iter().map(|f| f.into_iter().collect())).unwrap())
}

/// A complex with a subcomplex generated by a random subset of its simplices.
pub fn arb_pair(n: usize, max_dim: usize) -> impl Strategy<Value = (Arc<SimplicialComplex>, Subcomplex)> {
    (arb_complex(n, max_dim), prop::collection::vec(any::<prop::sample::Index>(), 0..4)).prop_map(|(k, picks)| {
        let k = Arc::new(k);
        let all: Vec<Vec<usize>> = k.iter().cloned().collect();
        let gens: Vec<Vec<usize>> = picks.iter().map(|i| all[i.index(all.len())].clone()).collect();
        let sub = Subcomplex::generated(k.clone(), gens).unwrap();
        (k, sub)
    })
}

/// Dense Gaussian elimination, kept independent of the library's sparse code.
pub fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        let inv = BigRational::one() / pivot[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone() * inv.clone();
                for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn int_matrix(rows: &[Vec<i64>], cols: usize) -> RationalMatrix {
    if rows.is_empty() {
        return RationalMatrix::zeros(0, cols);
    }
    RationalMatrix::from_int_rows(rows).unwrap()
}

//! Exact rational cohomology of simplicial pairs, closed covers and the
//! complexes built from them.

pub mod complex;
pub mod cover;
pub mod generate;
pub mod grassmann;
pub mod instance;
pub mod linalg;
pub mod report;
pub mod resolution;
pub mod rewrite;
pub mod simplicial;
pub mod suite;

pub use complex::{cone, is_quasi_iso, totalize, BettiTable, ChainMap, CochainComplex, ComplexError, DoubleComplex};
pub use linalg::{Rational, RationalMatrix};
pub use report::{Report, Status};

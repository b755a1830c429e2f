//! Exact Specht modules of Hecke algebras of the symmetric group (and of
//! Ariki–Koike algebras at small rank), their braid-invariant Hermitian forms
//! at roots of unity, and a checker for the classification of unitary
//! irreducible representations.
//!
//! Everything is exact: Laurent polynomials over `Z`, rational functions over
//! `Q`, and cyclotomic fields `Q(ζ_m)` with certified real-sign determination.

pub mod combinat;
pub mod exact;
pub mod hecke;
pub mod linalg;
pub mod specht;
pub mod unitarity;

mod error;

pub use combinat::{MultiPartition, Partition, Permutation, Tableau};
pub use error::Error;
pub use exact::{CycloNum, LaurentPoly, RationalC, RatFunc};
pub use hecke::{AlgebraSpec, HeckeElement};
pub use specht::{HermitianGram, JantzenReport, SpechtData};
pub use unitarity::{LocusDescription, ScanReport, Status, UnitarityVerdict};

//! Exact arithmetic for homogeneous affine monoids.
//!
//! The library builds pointed affine monoids from integer generators,
//! computes their normalizations degree by degree, and reports the
//! difference: hole sets, inferred hole families, Hilbert series numerators
//! for both the monoid and its normalization, Serre S2 verdicts, and depth
//! estimates, all in exact integer arithmetic.
//!
//! Modules are layered bottom-up:
//!
//! - [`exactlin`]: integer matrices, Hermite/Smith normal forms, kernels,
//!   lattices.
//! - [`scan`]: enumeration and counting of lattice points under linear
//!   constraints.
//! - [`cones`]: rational cones via double description, face lattices,
//!   lattice polytopes and their dilations.
//! - [`monoid`]: affine monoids, gradings, degree slices, named families.
//! - [`graphs`]: edge monoids of graphs and odd-cycle-pair generators for
//!   their normalizations.
//! - [`normalize`]: normalization slices, Hilbert bases, holes, hole
//!   families, S2 verdicts, depth estimates.
//! - [`series`]: Hilbert series numerators, degree-gap reports, join
//!   series.
//! - [`checks`]: end-to-end reproduction of the headline computations.
//!
//! # Example
//!
//! Compare a monoid's series numerator with its normalization's:
//!
//! ```
//! use monoidalg::monoid::AffineMonoid;
//! use monoidalg::series::compare_degrees;
//! use num_bigint::BigInt;
//!
//! # fn main() -> monoidalg::Result<()> {
//! let q = AffineMonoid::new(&[vec![0, 5], vec![2, 3], vec![3, 2], vec![5, 0]])?;
//! let report = compare_degrees(&q, 8)?;
//! assert_eq!(report.h.coefficients, [1, 2, 2].map(BigInt::from));
//! assert_eq!(report.h_normalization.coefficients, [1, 4].map(BigInt::from));
//! assert_eq!(report.gap, -1);
//! # Ok(())
//! # }
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod checks;
pub mod cones;
pub mod error;
pub mod exactlin;
pub mod graphs;
pub mod monoid;
pub mod normalize;
pub mod scan;
pub mod series;

pub use error::{Error, Result};

/// Coordinate type for all lattice points handled by the library.
pub type Coord = i64;

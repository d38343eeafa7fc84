//! Exact-arithmetic toolkit for the Wronskian map on flag varieties.
//!
//! Everything is computed over an exact field of characteristic zero — no
//! floats, no rounding, every identity checked to equality. The kernels
//! (polynomials, matrices, determinants, symmetric functions) are generic
//! over the [`scalar::Scalar`] trait; the aliases below pin the scalar used
//! by the CLI and the verification suites to arbitrary-precision rationals.
//!
//! The main layers:
//!
//! - [`poly`], [`multipoly`], [`ratfn`], [`mat`], [`perm`]: exact kernels
//!   (dense univariate and sparse multivariate polynomials, rational
//!   functions, matrices with fraction-free determinants, permutations).
//! - [`cells`]: balls-in-boxes combinatorics of column subsets — lengths,
//!   creation moves, path counts, partitions, hook factors, semi-infinite
//!   cells.
//! - [`wronsky`]: the Wronskian map, its factorization through Plücker
//!   coordinates, generalized Wronskians, degree vectors and Bruhat-cell
//!   classification.
//! - [`tau`]: Schur functions in the times, tau-functions of coefficient
//!   matrices, their initial values, and the stationary-KdV residual.
//! - [`reconstruct`]: inversion of the Wronskian map on unitriangular
//!   matrices via lexicographic coordinates.
//! - [`identities`]: W5, Desnanot-Jacobi, Plücker relation, and the
//!   Wronskian mutation equation with a normalized solver.
//! - [`verify`]: deterministic seeded property suites over all of the
//!   above, shared by the CLI and the acceptance tests.

pub mod cells;
pub mod error;
pub mod identities;
pub mod mat;
pub mod multipoly;
pub mod perm;
pub mod poly;
pub mod prng;
pub mod ratfn;
pub mod reconstruct;
pub mod scalar;
pub mod tau;
pub mod verify;
pub mod wronsky;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// The scalar field of the artifact: arbitrary-precision rationals, always
/// in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// Dense univariate polynomial over [`Rat`].
pub type UniPoly = poly::Poly<Rat>;

/// Sparse multivariate polynomial over [`Rat`] in the times `t_1 .. t_K`.
pub type MultiPoly = multipoly::MPoly<Rat>;

/// Reduced rational function over [`Rat`].
pub type RatFn = ratfn::RationalFn<Rat>;

/// Dense matrix over [`Rat`].
pub type MatQ = mat::Mat<Rat>;

pub use cells::{CellIndex, Partition, SemiInfiniteCell};
pub use perm::Permutation;

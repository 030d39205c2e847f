//! Exact computation of cyclic (cycle-weighted) rook polynomials
//! R(x;z;A) and z-analog permanents per(z;A) of rectangular matrices.
//!
//! A placement of non-attacking rooks on a board A is a partial
//! injection from rows into columns; its weight is
//! x^(rooks) · z^(closed cycles under row↔column identification) ·
//! ∏ entries. The crate provides:
//!
//! - exact polynomial rings (bigint, univariate, bivariate, sparse
//!   multivariate) — [`algebra`];
//! - matrices with ordered-index submatrix conventions — [`matrix`];
//! - partial injections, cycle counting, and the column rewiring that
//!   makes expansions compose — [`injection`];
//! - a brute-force oracle and expansion evaluators, each an independent
//!   route to the same polynomials — [`rook`];
//! - executable right-hand sides for the addition and complement
//!   identities, plus seeded verification drivers — [`identity`];
//! - fast exact evaluators for circulant ⊗ all-ones block matrices —
//!   [`structured`].
//!
//! Everything is exact integer/polynomial arithmetic; all values are
//! immutable after construction and safe to share across threads.

pub mod algebra;
pub mod error;
pub mod identity;
pub mod injection;
pub mod matrix;
pub mod parallel;
pub mod rook;
pub mod structured;

pub use error::{Error, Result};

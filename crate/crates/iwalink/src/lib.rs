//! Exact computation of Iwasawa invariants and torsion homology growth for
//! abelian p-power branched covers of links in integral homology 3-spheres.
//!
//! The crate is organized around five layers:
//!
//! - [`polyring`]: sparse multivariate Laurent polynomials over Z, univariate
//!   resultants (subresultant PRS with a Sylvester-determinant cross-check),
//!   and cyclotomic polynomials;
//! - [`torus`]: exact products and valuation sums of polynomial values over
//!   p-power torsion subsets of the d-torus, with subgroup parametrization by
//!   Smith normal form and an independent norm-determinant oracle;
//! - [`iwasawa`]: extraction of the mu/lambda invariants and the full growth
//!   polynomial f(U, V) with deg_V <= 1 from exact valuation-sum sequences;
//! - [`covers`]: homology growth of branched (Z/p^n Z)^d-covers via the
//!   Mayberry-Murasugi/Porti order formula, total-linking-number covers,
//!   Torres-condition validation, and p-adic limits of non-p torsion;
//! - [`families`]: a built-in catalog of links with closed-form Alexander
//!   polynomials (twisted Whitehead family and friends) plus file ingestion.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, no
//! floating point. Every public operation is a pure function of its inputs;
//! values are immutable and safe to share across threads.
//!
//! The `examples/` directory contains one runnable example per capability,
//! and the thin `iwalink` binary exposes the same operations as subcommands
//! for batch use.

pub mod covers;
pub mod error;
pub mod families;
pub mod iwasawa;
pub mod polyring;
pub mod torus;

pub use error::{Error, Result};

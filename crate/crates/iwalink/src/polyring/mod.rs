//! Exact polynomial arithmetic: sparse multivariate Laurent polynomials over
//! Z, dense univariate polynomials, resultants, and cyclotomic polynomials.

pub mod json;
pub mod laurent;
pub mod prs;
pub mod unipoly;

pub use json::{poly_from_json_str, poly_to_json_string, PolyJson};
pub use laurent::{DivideOutcome, LaurentPoly};
pub use unipoly::{
    cyclotomic_n, cyclotomic_prime_power, resultant_sylvester, resultant_uni, UniPoly,
};

//! Wire format for polynomials:
//! `{"vars": ["x","y"], "terms": [{"e": [2,2], "c": "1"}, ...]}`.
//!
//! Exponents are signed integers and coefficients decimal strings (an ASCII
//! `-` or a U+2212 minus sign is accepted on input). Output lists terms in
//! canonical order, lexicographically descending on the exponent vector, and
//! always uses the ASCII minus.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::laurent::{default_var_names, LaurentPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub c: String,
}

pub fn parse_coeff(s: &str) -> Result<BigInt> {
    let ascii = s.replace('\u{2212}', "-");
    ascii
        .trim()
        .parse::<BigInt>()
        .map_err(|e| Error::ParseError(format!("bad coefficient {:?}: {}", s, e)))
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<(LaurentPoly, Vec<String>)> {
        let d = self.vars.len();
        let mut p = LaurentPoly::zero(d);
        for t in &self.terms {
            if t.e.len() != d {
                return Err(Error::ParseError(format!(
                    "term exponent vector {:?} does not match {} variables",
                    t.e, d
                )));
            }
            let c = parse_coeff(&t.c)?;
            if c.is_zero() {
                return Err(Error::ParseError("explicit zero coefficient in term list".into()));
            }
            p.add_term(t.e.clone(), c);
        }
        Ok((p, self.vars.clone()))
    }

    pub fn from_poly(p: &LaurentPoly, vars: Option<Vec<String>>) -> Self {
        let vars = vars.unwrap_or_else(|| default_var_names(p.nvars()));
        assert_eq!(vars.len(), p.nvars());
        let mut terms: Vec<TermJson> = p
            .terms()
            .map(|(e, c)| TermJson { e: e.clone(), c: c.to_string() })
            .collect();
        terms.reverse(); // descending lex
        PolyJson { vars, terms }
    }
}

pub fn poly_from_json_str(s: &str) -> Result<(LaurentPoly, Vec<String>)> {
    let pj: PolyJson =
        serde_json::from_str(s).map_err(|e| Error::ParseError(format!("polynomial JSON: {}", e)))?;
    pj.to_poly()
}

pub fn poly_to_json_string(p: &LaurentPoly, vars: Option<Vec<String>>) -> String {
    serde_json::to_string(&PolyJson::from_poly(p, vars)).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_canonical_order() {
        let s = r#"{"vars":["x","y"],"terms":[{"e":[0,0],"c":"1"},{"e":[2,2],"c":"1"},{"e":[1,1],"c":"1"}]}"#;
        let (p, vars) = poly_from_json_str(s).unwrap();
        assert_eq!(vars, vec!["x", "y"]);
        let out = poly_to_json_string(&p, Some(vars));
        assert_eq!(
            out,
            r#"{"vars":["x","y"],"terms":[{"e":[2,2],"c":"1"},{"e":[1,1],"c":"1"},{"e":[0,0],"c":"1"}]}"#
        );
    }

    #[test]
    fn accepts_unicode_minus_and_merges_terms() {
        let s = r#"{"vars":["t"],"terms":[{"e":[1],"c":"−2"},{"e":[1],"c":"1"},{"e":[-1],"c":"5"}]}"#;
        let (p, _) = poly_from_json_str(s).unwrap();
        assert_eq!(p.coefficient(&[1]), BigInt::from(-1));
        assert_eq!(p.coefficient(&[-1]), BigInt::from(5));
    }

    #[test]
    fn rejects_ragged_exponents() {
        let s = r#"{"vars":["x","y"],"terms":[{"e":[1],"c":"1"}]}"#;
        assert!(poly_from_json_str(s).is_err());
    }
}

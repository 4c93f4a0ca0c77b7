//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! A `LaurentPoly` is a finite map from exponent vectors (signed) to nonzero
//! `BigInt` coefficients. Terms are kept in a `BTreeMap`, so the canonical
//! order is lexicographic on exponent vectors and equal polynomials compare
//! and serialize identically.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

/// Outcome of a trial division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivideOutcome {
    Quotient(LaurentPoly),
    NotDivisible,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable `t_i` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<i64>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    /// True when the polynomial is `c * t^a` for a single term.
    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Per-variable minimum exponent over all terms. Zero vector for the zero polynomial.
    pub fn min_exps(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(ei);
            }
        }
        if self.terms.is_empty() {
            m.fill(0);
        }
        m
    }

    /// Per-variable maximum exponent over all terms.
    pub fn max_exps(&self) -> Vec<i64> {
        let mut m = vec![i64::MIN; self.nvars];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).max(ei);
            }
        }
        if self.terms.is_empty() {
            m.fill(0);
        }
        m
    }

    /// Per-variable exponent span (max - min).
    pub fn spans(&self) -> Vec<i64> {
        self.min_exps()
            .iter()
            .zip(self.max_exps())
            .map(|(lo, hi)| hi - lo)
            .collect()
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Multiply by the monomial `t^shift`.
    pub fn mul_monomial(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// gcd of all coefficients (positive); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest `k` with `p^k` dividing every coefficient. This is the mu
    /// invariant of a polynomial representative.
    pub fn p_content(&self, p: u64) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = BigInt::from(p);
        let mut best: Option<u64> = None;
        for c in self.terms.values() {
            let mut v = 0u64;
            let mut c = c.clone();
            loop {
                if let Some(b) = best {
                    if v >= b {
                        break;
                    }
                }
                let (q, r) = c.div_rem(&p);
                if r.is_zero() {
                    v += 1;
                    c = q;
                } else {
                    break;
                }
            }
            best = Some(match best {
                Some(b) => b.min(v),
                None => v,
            });
            if best == Some(0) {
                break;
            }
        }
        Ok(best.unwrap())
    }

    /// Divide every coefficient by `c` (must divide exactly).
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero());
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| {
                let (q, r) = k.div_rem(c);
                assert!(r.is_zero(), "div_scalar_exact: coefficient not divisible");
                (e.clone(), q)
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Reduce all coefficients into `{0, .., p-1}`, dropping the ones that
    /// become zero.
    pub fn mod_p_reduce(&self, p: u64) -> Self {
        let p = BigInt::from(p);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let r = c.mod_floor(&p);
            if !r.is_zero() {
                out.terms.insert(e.clone(), r);
            }
        }
        out
    }

    /// The monomial exponent that clears all negative exponents.
    pub fn clearing_monomial(&self) -> Vec<i64> {
        self.min_exps().iter().map(|&m| if m < 0 { -m } else { 0 }).collect()
    }

    /// Divide out the full minimal monomial and fix the sign of the
    /// lexicographically leading coefficient, i.e. normalize within the unit
    /// class `+- t^a`.
    pub fn unit_normalize(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let min = self.min_exps();
        let shift: Vec<i64> = min.iter().map(|&m| -m).collect();
        let mut out = self.mul_monomial(&shift);
        if out.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            out = out.neg();
        }
        out
    }

    /// Equality up to multiplication by `+- t^a`.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.unit_normalize() == other.unit_normalize()
    }

    /// Substitute `t_i = 1 + T_i` after clearing denominators: returns
    /// `Q(T) = t^m * P` evaluated at `t_i = 1 + T_i`, where `t^m` is the
    /// minimal monomial making every exponent nonnegative. The clearing
    /// monomial is a unit, so valuation sums and the Iwasawa invariants of
    /// the result agree with those of `P`.
    pub fn shift_substitute(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let cleared = self.mul_monomial(&self.clearing_monomial());
        Ok(cleared.binomial_substitute(false))
    }

    /// Substitute `T_i = t_i - 1`; inverse direction of `shift_substitute`
    /// up to the clearing monomial. Requires nonnegative exponents.
    pub fn unshift_substitute(&self) -> Self {
        assert!(
            self.min_exps().iter().all(|&m| m >= 0),
            "unshift_substitute needs an ordinary polynomial"
        );
        self.binomial_substitute(true)
    }

    /// Expand each variable as `x_i + s` with `s = +1` (shift) or `-1` (unshift
    /// flips the sign pattern: `x_i - 1`).
    fn binomial_substitute(&self, minus_one: bool) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            // product over variables of (x_i +- 1)^{e_i}
            let mut acc = Self::constant(self.nvars, c.clone());
            for (i, &ei) in e.iter().enumerate() {
                debug_assert!(ei >= 0);
                let row = binomial_row(ei as u64);
                let mut factor = Self::zero(self.nvars);
                for (j, b) in row.iter().enumerate() {
                    let mut exps = vec![0; self.nvars];
                    exps[i] = j as i64;
                    let mut coef = b.clone();
                    if minus_one && (ei as usize - j) % 2 == 1 {
                        coef = -coef;
                    }
                    factor.add_term(exps, coef);
                }
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Replace variable `s_j` by the monomial `prod_k t_k^{M[j][k]}`. `M` has
    /// one row per current variable; the result lives in `M[0].len()` variables.
    pub fn substitute_monomials(&self, m: &[Vec<i64>]) -> Result<Self> {
        if m.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "substitution matrix has {} rows for a polynomial in {} variables",
                m.len(),
                self.nvars
            )));
        }
        let d = if m.is_empty() { 0 } else { m[0].len() };
        if m.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch("ragged substitution matrix".into()));
        }
        let mut out = Self::zero(d);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; d];
            for (j, &ej) in e.iter().enumerate() {
                for (k, nk) in ne.iter_mut().enumerate() {
                    *nk += ej * m[j][k];
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Substitute `t_i = 1`, dropping the variable.
    pub fn set_var_one(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut ne = Vec::with_capacity(self.nvars - 1);
            ne.extend_from_slice(&e[..i]);
            ne.extend_from_slice(&e[i + 1..]);
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Trial division `P = Q * D`, exact or `NotDivisible`. With
    /// `modulus = Some(p)` the computation runs over the prime field, otherwise
    /// over the integers. Laurent inputs are cleared to polynomials first; the
    /// quotient carries the compensating monomial.
    pub fn trial_divide(&self, divisor: &Self, modulus: Option<u64>) -> Result<DivideOutcome> {
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        assert_eq!(self.nvars, divisor.nvars);
        if self.is_zero() {
            return Ok(DivideOutcome::Quotient(Self::zero(self.nvars)));
        }
        let a = self.clearing_monomial();
        let b = divisor.clearing_monomial();
        let p0 = match modulus {
            Some(p) => self.mul_monomial(&a).mod_p_reduce(p),
            None => self.mul_monomial(&a),
        };
        let d0 = match modulus {
            Some(p) => divisor.mul_monomial(&b).mod_p_reduce(p),
            None => divisor.mul_monomial(&b),
        };
        if d0.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if p0.is_zero() {
            return Ok(DivideOutcome::Quotient(Self::zero(self.nvars)));
        }
        let q0 = match poly_divide(&p0, &d0, modulus) {
            Some(q) => q,
            None => return Ok(DivideOutcome::NotDivisible),
        };
        // quotient of the original Laurent inputs: Q = q0 * t^{b - a}
        let shift: Vec<i64> = b.iter().zip(&a).map(|(bb, aa)| bb - aa).collect();
        Ok(DivideOutcome::Quotient(q0.mul_monomial(&shift)))
    }

    /// Exact division; panics if the divisor does not divide. Used where
    /// divisibility is guaranteed by theory (subresultant chains).
    pub fn exact_div(&self, divisor: &Self) -> Self {
        match self.trial_divide(divisor, None) {
            Ok(DivideOutcome::Quotient(q)) => q,
            _ => panic!("exact_div: division was not exact"),
        }
    }

    /// Evaluate at an integer point (requires nonnegative exponents).
    pub fn eval_ints(&self, xs: &[BigInt]) -> BigInt {
        assert_eq!(xs.len(), self.nvars);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (&ei, x) in e.iter().zip(xs) {
                assert!(ei >= 0, "eval_ints needs an ordinary polynomial");
                term *= num_traits::pow::pow(x.clone(), ei as usize);
            }
            acc += term;
        }
        acc
    }
}

/// Row `e` of Pascal's triangle.
fn binomial_row(e: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(e as usize + 1);
    let mut c = BigInt::one();
    for j in 0..=e {
        row.push(c.clone());
        if j < e {
            c = c * BigInt::from(e - j) / BigInt::from(j + 1);
        }
    }
    row
}

/// Multivariate polynomial division by lex-leading-term reduction. Inputs are
/// ordinary polynomials (exponents >= 0), divisor nonzero. Returns the exact
/// quotient or None.
fn poly_divide(p: &LaurentPoly, d: &LaurentPoly, modulus: Option<u64>) -> Option<LaurentPoly> {
    let (lt_e, lt_c) = d.leading().expect("nonzero divisor");
    let lt_e = lt_e.clone();
    let lt_c = lt_c.clone();
    let inv = modulus.map(|p| mod_inverse(&lt_c, p));
    let mut rem = p.clone();
    let mut quot = LaurentPoly::zero(p.nvars());
    while !rem.is_zero() {
        let (re, rc) = rem.leading().unwrap();
        let re = re.clone();
        let rc = rc.clone();
        if re.iter().zip(&lt_e).any(|(a, b)| a < b) {
            return None;
        }
        let qe: Vec<i64> = re.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
        let qc = match (&inv, modulus) {
            (Some(inv), Some(p)) => (rc * inv).mod_floor(&BigInt::from(p)),
            _ => {
                let (q, r) = rc.div_rem(&lt_c);
                if !r.is_zero() {
                    return None;
                }
                q
            }
        };
        let qterm = LaurentPoly::monomial(p.nvars(), qe, qc);
        let mut step = rem.sub(&qterm.mul(d));
        if let Some(p) = modulus {
            step = step.mod_p_reduce(p);
        }
        quot = quot.add(&qterm);
        rem = step;
    }
    Some(quot)
}

fn mod_inverse(c: &BigInt, p: u64) -> BigInt {
    // p prime, c not divisible by p
    let p = BigInt::from(p);
    let c = c.mod_floor(&p);
    assert!(!c.is_zero(), "mod_inverse of zero");
    // extended Euclid
    let (mut r0, mut r1) = (p.clone(), c);
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
    }
    assert!(r0.is_one(), "mod_inverse: arguments not coprime");
    s0.mod_floor(&p)
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = default_var_names(self.nvars);
        let mut first = true;
        // display from lex-largest down
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const_term = e.iter().all(|&x| x == 0);
            if !abs.is_one() || is_const_term {
                write!(f, "{}", abs)?;
                if !is_const_term {
                    write!(f, "*")?;
                }
            }
            let mut firstv = true;
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                if !firstv {
                    write!(f, "*")?;
                }
                firstv = false;
                if ei == 1 {
                    write!(f, "{}", names[i])?;
                } else {
                    write!(f, "{}^{}", names[i], ei)?;
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn default_var_names(n: usize) -> Vec<String> {
    match n {
        0 => vec![],
        1 => vec!["t".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        4 => vec!["x".into(), "y".into(), "z".into(), "w".into()],
        _ => (1..=n).map(|i| format!("t{}", i)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly2(terms: &[([i64; 2], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn shift_of_product_of_t_minus_one() {
        // (t1-1)(t2-1) -> T1*T2
        let p = poly2(&[([1, 1], 1), ([1, 0], -1), ([0, 1], -1), ([0, 0], 1)]);
        let q = p.shift_substitute().unwrap();
        assert_eq!(q, poly2(&[([1, 1], 1)]));
    }

    #[test]
    fn shift_of_magen_david() {
        // x^2 y^2 + x y + 1 -> X^2Y^2 + 2X^2Y + 2XY^2 + X^2 + 5XY + Y^2 + 3X + 3Y + 3
        let p = poly2(&[([2, 2], 1), ([1, 1], 1), ([0, 0], 1)]);
        let q = p.shift_substitute().unwrap();
        let expected = poly2(&[
            ([2, 2], 1),
            ([2, 1], 2),
            ([1, 2], 2),
            ([2, 0], 1),
            ([1, 1], 5),
            ([0, 2], 1),
            ([1, 0], 3),
            ([0, 1], 3),
            ([0, 0], 3),
        ]);
        assert_eq!(q, expected);
        // and its mod-3 reduction drops 5XY -> 2XY and the 3's
        let r = q.mod_p_reduce(3);
        let expected3 = poly2(&[
            ([2, 2], 1),
            ([2, 1], 2),
            ([1, 2], 2),
            ([2, 0], 1),
            ([1, 1], 2),
            ([0, 2], 1),
        ]);
        assert_eq!(r, expected3);
    }

    #[test]
    fn shift_clears_negative_exponents() {
        // t^{-1} - 1 -> -T (after clearing by t)
        let p = LaurentPoly::from_terms(
            1,
            vec![(vec![-1], BigInt::from(1)), (vec![0], BigInt::from(-1))],
        );
        let q = p.shift_substitute().unwrap();
        let expected = LaurentPoly::monomial(1, vec![1], -1);
        assert_eq!(q, expected);
    }

    #[test]
    fn unshift_inverts_shift_up_to_clearing() {
        let p = poly2(&[([2, -1], 3), ([1, 1], -2), ([0, 0], 7)]);
        let q = p.shift_substitute().unwrap();
        let back = q.unshift_substitute();
        let cleared = p.mul_monomial(&p.clearing_monomial());
        assert_eq!(back, cleared);
    }

    #[test]
    fn substitute_identity_and_diagonal() {
        let p = poly2(&[([1, 1], 1), ([0, 0], -1)]);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(p.substitute_monomials(&id).unwrap(), p);
        // 1 + s1 s2 on the diagonal -> 1 + t^2
        let q = poly2(&[([1, 1], 1), ([0, 0], 1)]);
        let diag = vec![vec![1], vec![1]];
        let r = q.substitute_monomials(&diag).unwrap();
        let expected = LaurentPoly::from_terms(
            1,
            vec![(vec![2], BigInt::from(1)), (vec![0], BigInt::from(1))],
        );
        assert_eq!(r, expected);
    }

    #[test]
    fn substitute_dimension_mismatch() {
        let p = poly2(&[([1, 0], 1)]);
        assert!(matches!(
            p.substitute_monomials(&[vec![1, 0]]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn mod_p_examples() {
        let p = poly2(&[([1, 0], 3), ([0, 1], 1)]);
        assert_eq!(p.mod_p_reduce(3), poly2(&[([0, 1], 1)]));
        assert!(LaurentPoly::zero(2).mod_p_reduce(5).is_zero());
    }

    #[test]
    fn p_content_examples() {
        // 9 (x-1)(y-1), p = 3 -> 2
        let base = poly2(&[([1, 1], 1), ([1, 0], -1), ([0, 1], -1), ([0, 0], 1)]);
        let p = base.scale(&BigInt::from(9));
        assert_eq!(p.p_content(3).unwrap(), 2);
        let q = poly2(&[([2, 2], 1), ([1, 1], 1), ([0, 0], 1)]);
        assert_eq!(q.p_content(2).unwrap(), 0);
        assert_eq!(q.p_content(5).unwrap(), 0);
        let r = poly2(&[([1, 0], 12), ([0, 0], 4)]);
        assert_eq!(r.p_content(2).unwrap(), 2);
        assert_eq!(LaurentPoly::zero(2).p_content(2), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn trial_divide_examples() {
        let t1t2 = poly2(&[([1, 1], 1)]);
        let t1 = poly2(&[([1, 0], 1)]);
        let t2 = poly2(&[([0, 1], 1)]);
        match t1t2.trial_divide(&t1, None).unwrap() {
            DivideOutcome::Quotient(q) => assert_eq!(q, t2),
            _ => panic!("expected quotient"),
        }
        let s = poly2(&[([1, 0], 1), ([0, 1], 1)]);
        assert_eq!(s.trial_divide(&t1, None).unwrap(), DivideOutcome::NotDivisible);
        assert_eq!(s.trial_divide(&LaurentPoly::zero(2), None), Err(Error::ZeroDivisor));
    }

    #[test]
    fn trial_divide_mod_3_magen_david() {
        // shift of x^2y^2+xy+1 mod 3 is ((1+X)(1+Y)-1)^2 mod 3
        let p = poly2(&[([2, 2], 1), ([1, 1], 1), ([0, 0], 1)])
            .shift_substitute()
            .unwrap()
            .mod_p_reduce(3);
        let d = poly2(&[([1, 1], 1), ([1, 0], 1), ([0, 1], 1)]); // (1+X)(1+Y)-1
        let q1 = match p.trial_divide(&d, Some(3)).unwrap() {
            DivideOutcome::Quotient(q) => q,
            _ => panic!("should divide once"),
        };
        let q2 = match q1.trial_divide(&d, Some(3)).unwrap() {
            DivideOutcome::Quotient(q) => q,
            _ => panic!("should divide twice"),
        };
        assert!(q2.is_constant());
        assert_eq!(q2.constant_value().unwrap(), BigInt::one());
        assert_eq!(q2.trial_divide(&d, Some(3)).unwrap(), DivideOutcome::NotDivisible);
    }

    #[test]
    fn laurent_trial_divide_reattaches_monomial() {
        // (t1 t2^{-1} + 1) * t1^{-2} divided by (t1 t2^{-1} + 1)
        let d = poly2(&[([1, -1], 1), ([0, 0], 1)]);
        let q_true = poly2(&[([-2, 0], 1)]);
        let p = d.mul(&q_true);
        match p.trial_divide(&d, None).unwrap() {
            DivideOutcome::Quotient(q) => assert_eq!(q, q_true),
            _ => panic!("expected quotient"),
        }
    }

    #[test]
    fn unit_normalize_and_eq_up_to_unit() {
        let p = poly2(&[([1, 1], 1), ([0, 0], -1)]);
        let q = p.mul_monomial(&[-3, 2]).neg();
        assert!(p.eq_up_to_unit(&q));
        assert!(!p.eq_up_to_unit(&p.add(&LaurentPoly::one(2))));
    }
}

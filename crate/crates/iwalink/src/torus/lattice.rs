//! Closed-form valuation sums for binomial products.
//!
//! When a polynomial factors as `c * t^a * p^mu * prod_j (t^{w_j} - 1)^{e_j}`
//! with primitive directions `w_j`, the valuation of a value at a torsion
//! point depends only on the exact order of `zeta^{w_j}`: a point with
//! `ord(zeta^w) = p^k`, k >= 1, contributes `1/phi(p^k)` per factor. Sums
//! over constrained regions then reduce to counting solutions of congruence
//! systems, which Smith diagonalization does exactly at any level. This is
//! the path that keeps high-level and high-dimensional sums cheap.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::subgroup::count_solutions;
use super::TorusRegion;
use crate::polyring::{DivideOutcome, LaurentPoly};

/// `c * t^a * p^mu * prod_j (t^{w_j} - 1)^{e_j}` with `p` not dividing `c`;
/// directions are sign-canonical (first nonzero entry positive) but need not
/// be primitive, since the per-point valuation only sees `ord(zeta^{w_j})`.
#[derive(Debug, Clone)]
pub struct BinomialForm {
    pub nvars: usize,
    pub p: u64,
    pub mu: u64,
    pub factors: Vec<(Vec<i64>, u64)>,
}

/// Cap on the candidate-direction search; polynomials that would exceed it
/// fall through to the general engine.
const CANDIDATE_BUDGET: u64 = 200_000;

/// Try to write `g` (in the t-convention) as a binomial product times a unit.
pub fn factor_binomial_unit(g: &LaurentPoly, p: u64) -> Option<BinomialForm> {
    if g.is_zero() {
        return None;
    }
    let mu = g.p_content(p).expect("nonzero");
    let mut rest = g.div_scalar_exact(&BigInt::from(p).pow(mu as u32));
    let mut factors: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    loop {
        if rest.is_single_term() {
            // remaining unit times prime-to-p constant
            return Some(BinomialForm {
                nvars: g.nvars(),
                p,
                mu,
                factors: factors.into_iter().collect(),
            });
        }
        let mut divided = false;
        for w in candidate_directions(&rest)? {
            let binom = binomial(g.nvars(), &w);
            let mut mult = 0u64;
            loop {
                match rest.trial_divide(&binom, None).ok()? {
                    DivideOutcome::Quotient(q) => {
                        rest = q;
                        mult += 1;
                    }
                    DivideOutcome::NotDivisible => break,
                }
            }
            if mult > 0 {
                *factors.entry(w).or_insert(0) += mult;
                divided = true;
                break;
            }
        }
        if !divided {
            return None;
        }
    }
}

/// `t^w - 1`.
pub fn binomial(nvars: usize, w: &[i64]) -> LaurentPoly {
    let mut b = LaurentPoly::monomial(nvars, w.to_vec(), 1);
    b.add_term(vec![0; nvars], BigInt::from(-1));
    b
}

/// Candidate directions within the exponent span of `g`, canonical sign. A
/// binomial factor's exponent vector fits inside the span box because Newton
/// polytopes add under multiplication. Largest max-norm first: dividing out a
/// big factor like `t^2 - 1` before `t - 1` avoids stranding a non-binomial
/// cofactor such as `t + 1`.
fn candidate_directions(g: &LaurentPoly) -> Option<Vec<Vec<i64>>> {
    let spans = g.spans();
    let mut budget = 1u64;
    for &s in &spans {
        budget = budget.checked_mul(2 * s as u64 + 1)?;
        if budget > CANDIDATE_BUDGET {
            return None;
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; spans.len()];
    gen_directions(&spans, 0, &mut cur, &mut out);
    out.sort_by_key(|w| std::cmp::Reverse(w.iter().map(|&x| x.abs()).max().unwrap_or(0)));
    Some(out)
}

fn gen_directions(spans: &[i64], i: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if i == spans.len() {
        if cur.iter().any(|&x| x != 0) {
            let first = cur.iter().find(|&&x| x != 0).unwrap();
            if *first > 0 {
                out.push(cur.clone());
            }
        }
        return;
    }
    for v in -spans[i]..=spans[i] {
        cur[i] = v;
        gen_directions(spans, i + 1, cur, out);
    }
    cur[i] = 0;
}

pub(crate) fn phi(p: u64, k: u32) -> BigInt {
    if k == 0 {
        BigInt::one()
    } else {
        BigInt::from(p).pow(k - 1) * BigInt::from(p - 1)
    }
}

/// Region sums for a binomial product: returns the valuation sum with the
/// `v(0) = 0` convention together with the number of region points where the
/// product vanishes.
pub struct LatticeCounter<'a> {
    region: &'a TorusRegion,
    cache: BTreeMap<Vec<Vec<i64>>, BigInt>,
}

impl<'a> LatticeCounter<'a> {
    pub fn new(region: &'a TorusRegion) -> Self {
        LatticeCounter { region, cache: BTreeMap::new() }
    }

    fn system_count(&mut self, rows: Vec<Vec<i64>>) -> BigInt {
        let mut key = rows;
        key.sort();
        key.dedup();
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let v = count_solutions(&key, self.region.p, self.region.n, self.region.d);
        self.cache.insert(key, v.clone());
        v
    }

    /// Points of the region satisfying the extra equality rows, by
    /// inclusion-exclusion over the region's inequality constraints.
    pub fn region_count(&mut self, extra: &[Vec<i64>]) -> BigInt {
        let neq = self.region.neq.clone();
        let mut total = BigInt::zero();
        for mask in 0u32..(1 << neq.len()) {
            let mut rows = self.region.eq.clone();
            rows.extend(extra.iter().cloned());
            let mut sign = 1i32;
            for (i, w) in neq.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    rows.push(w.clone());
                    sign = -sign;
                }
            }
            let c = self.system_count(rows);
            if sign > 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        total
    }
}

pub struct LatticeSigma {
    pub sum: BigInt,
    pub zeros: BigInt,
}

pub fn sigma_lattice(form: &BinomialForm, region: &TorusRegion) -> LatticeSigma {
    assert_eq!(form.nvars, region.d);
    assert_eq!(form.p, region.p);
    let mut counter = LatticeCounter::new(region);
    let dirs: Vec<&Vec<i64>> = form.factors.iter().map(|(w, _)| w).collect();
    let j = dirs.len();
    assert!(j < 26, "unreasonably many binomial directions");

    // count(X) over the region minus the vanishing locus of all factors
    let mut nonzero_count_with = |counter: &mut LatticeCounter, extra: &[Vec<i64>]| -> BigInt {
        let mut total = BigInt::zero();
        for mask in 0u32..(1 << j) {
            let mut rows: Vec<Vec<i64>> = extra.to_vec();
            let mut sign = 1i32;
            for (i, w) in dirs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    rows.push((*w).clone());
                    sign = -sign;
                }
            }
            let c = counter.region_count(&rows);
            if sign > 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        total
    };

    let region_size = counter.region_count(&[]);
    let nonzero = nonzero_count_with(&mut counter, &[]);
    let zeros = &region_size - &nonzero;

    let mut sum = BigRational::from(BigInt::from(form.mu) * &nonzero);
    for (w, mult) in &form.factors {
        // points with ord(zeta^w) dividing p^k, within the nonvanishing part
        let mut prev = nonzero_count_with(&mut counter, &[w.clone()]);
        for k in 1..=region.n {
            let pk = BigInt::from(region.p).pow(k);
            let row: Vec<i64> = w
                .iter()
                .map(|&x| {
                    let v = BigInt::from(x) * &pk;
                    // reduce mod p^n to keep entries in i64 range
                    let pn = BigInt::from(region.p).pow(region.n);
                    let v = num_integer::Integer::mod_floor(&v, &pn);
                    num_traits::ToPrimitive::to_i64(&v).expect("entry fits i64")
                })
                .collect();
            let here = nonzero_count_with(&mut counter, &[row]);
            let strat = &here - &prev;
            sum += BigRational::new(BigInt::from(*mult) * strat, phi(region.p, k));
            prev = here;
        }
    }
    assert!(sum.is_integer(), "lattice valuation sum must be an integer");
    let sum = sum.to_integer();
    assert!(!sum.is_negative());
    assert!(!zeros.is_negative());
    LatticeSigma { sum, zeros }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly2(terms: &[([i64; 2], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn factors_whitehead_even_family() {
        // 9 (x-1)(y-1) at p=3: mu=2, factors e1, e2
        let base = poly2(&[([1, 1], 1), ([1, 0], -1), ([0, 1], -1), ([0, 0], 1)]);
        let g = base.scale(&BigInt::from(9));
        let form = factor_binomial_unit(&g, 3).expect("binomial product");
        assert_eq!(form.mu, 2);
        assert_eq!(form.factors, vec![(vec![0, 1], 1), (vec![1, 0], 1)]);
    }

    #[test]
    fn factors_diagonal_binomial() {
        // 1 - x y z: direction (1,1,1) after sign normalization
        let g = LaurentPoly::from_terms(
            3,
            vec![
                (vec![0, 0, 0], BigInt::one()),
                (vec![1, 1, 1], BigInt::from(-1)),
            ],
        );
        let form = factor_binomial_unit(&g, 5).expect("binomial");
        assert_eq!(form.mu, 0);
        assert_eq!(form.factors, vec![(vec![1, 1, 1], 1)]);
    }

    #[test]
    fn magen_david_is_not_binomial() {
        let g = poly2(&[([2, 2], 1), ([1, 1], 1), ([0, 0], 1)]);
        assert!(factor_binomial_unit(&g, 2).is_none());
    }

    #[test]
    fn non_primitive_direction_is_kept_whole() {
        // t^2 - 1 stays a single direction (2); splitting it greedily into
        // (t-1) would strand the non-binomial cofactor (t+1).
        let g = LaurentPoly::from_terms(
            1,
            vec![(vec![2], BigInt::one()), (vec![0], BigInt::from(-1))],
        );
        let form = factor_binomial_unit(&g, 3).expect("t^2 - 1 is itself a binomial");
        assert_eq!(form.factors, vec![(vec![2], 1)]);
        // t + 1 alone is not a binomial product
        let h = LaurentPoly::from_terms(
            1,
            vec![(vec![1], BigInt::one()), (vec![0], BigInt::one())],
        );
        assert!(factor_binomial_unit(&h, 3).is_none());
    }
}

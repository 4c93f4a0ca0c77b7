//! Dense univariate integer polynomials: resultants, cyclotomic polynomials,
//! exact division.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::prs::{self, DensePoly};
use crate::error::{Error, Result};

/// Coefficients lowest degree first; the leading coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<BigInt>);

impl UniPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut c = coeffs;
        while c.last().map(Zero::is_zero).unwrap_or(false) {
            c.pop();
        }
        UniPoly(c)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        UniPoly(vec![])
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = -BigInt::one();
        c[n] = BigInt::one();
        UniPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Exact division by a monic divisor; returns None when the remainder is
    /// nonzero.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree().expect("monic divisor must be nonzero");
        assert!(divisor.0[dd].is_one(), "divisor must be monic");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sd = match self.degree() {
            Some(d) if d >= dd => d,
            _ => return None,
        };
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(quot))
    }

    /// Bridge to a one-variable Laurent polynomial.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            1,
            self.0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (vec![i as i64], c.clone())),
        )
    }

    /// From a one-variable Laurent polynomial with nonnegative exponents.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        assert_eq!(p.nvars(), 1);
        let min = p.min_exps()[0];
        assert!(min >= 0, "from_laurent needs nonnegative exponents");
        let max = p.max_exps()[0];
        let mut c = vec![BigInt::zero(); (max + 1).max(1) as usize];
        for (e, k) in p.terms() {
            c[e[0] as usize] = k.clone();
        }
        UniPoly::new(c)
    }
}

/// Resultant over the integers with the convention
/// `Res(f, g) = lc(f)^{deg g} prod g(roots of f)`, computed by the
/// subresultant PRS.
pub fn resultant_uni(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    Ok(prs::resultant(
        &DensePoly::new(f.0.clone()),
        &DensePoly::new(g.0.clone()),
    ))
}

/// Resultant via the Sylvester determinant; independent route for checks.
pub fn resultant_sylvester(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    Ok(prs::resultant_sylvester(&f.0, &g.0))
}

/// Cyclotomic polynomial of prime-power order: `Phi_1 = x - 1`,
/// `Phi_{p^k}(x) = sum_{j<p} x^{j p^{k-1}}` for `k >= 1`.
pub fn cyclotomic_prime_power(p: u64, k: u32) -> UniPoly {
    if k == 0 {
        return UniPoly::from_i64(&[-1, 1]);
    }
    let step = p.pow(k - 1) as usize;
    let mut c = vec![BigInt::zero(); step * (p as usize - 1) + 1];
    for j in 0..p as usize {
        c[j * step] = BigInt::one();
    }
    UniPoly::new(c)
}

/// General cyclotomic polynomial `Phi_n`, by recursive division of `x^n - 1`
/// by `Phi_d` over the proper divisors `d` of `n`.
pub fn cyclotomic_n(n: u64) -> UniPoly {
    assert!(n >= 1);
    if n == 1 {
        return UniPoly::from_i64(&[-1, 1]);
    }
    let mut result = UniPoly::x_pow_minus_one(n as usize);
    for d in 1..n {
        if n % d == 0 {
            let phi = cyclotomic_n(d);
            result = result
                .div_exact_monic(&phi)
                .expect("cyclotomic divisibility");
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_prime_powers() {
        assert_eq!(cyclotomic_prime_power(2, 2), UniPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_prime_power(3, 1), UniPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_prime_power(5, 0), UniPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn cyclotomic_general_matches_prime_power() {
        for (p, k) in [(2u64, 1u32), (2, 3), (3, 2), (5, 1)] {
            assert_eq!(cyclotomic_n(p.pow(k)), cyclotomic_prime_power(p, k));
        }
        // Phi_6(x) = x^2 - x + 1
        assert_eq!(cyclotomic_n(6), UniPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn product_of_cyclotomics_is_x_pow_minus_one() {
        for (p, n) in [(2u64, 3u32), (3, 2), (5, 1)] {
            let mut prod = UniPoly::one();
            for k in 0..=n {
                prod = prod.mul(&cyclotomic_prime_power(p, k));
            }
            assert_eq!(prod, UniPoly::x_pow_minus_one(p.pow(n) as usize));
        }
    }

    #[test]
    fn apostol_special_case() {
        // Res(Phi_2, Phi_6) = 3, which is Phi_6(-1)
        let r = resultant_uni(&cyclotomic_n(2), &cyclotomic_n(6)).unwrap();
        assert_eq!(r, BigInt::from(3));
    }

    #[test]
    fn resultant_examples() {
        let r = resultant_uni(&UniPoly::from_i64(&[-1, 1]), &UniPoly::from_i64(&[1, 1])).unwrap();
        assert_eq!(r, BigInt::from(2));
        let r = resultant_uni(&UniPoly::x_pow_minus_one(4), &UniPoly::from_i64(&[-3, 1])).unwrap();
        assert_eq!(r, BigInt::from(80));
        assert_eq!(
            resultant_uni(&UniPoly::zero(), &UniPoly::zero()),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn prs_matches_sylvester_including_imprimitive() {
        let cases: Vec<(Vec<i64>, Vec<i64>)> = vec![
            (vec![2, 4], vec![6, 0, 2]),
            (vec![-6, 0, 3], vec![4, 2]),
            (vec![1, 2, 3, 4], vec![-2, 0, 2]),
        ];
        for (f, g) in cases {
            let f = UniPoly::from_i64(&f);
            let g = UniPoly::from_i64(&g);
            assert_eq!(
                resultant_uni(&f, &g).unwrap(),
                resultant_sylvester(&f, &g).unwrap(),
                "f={:?} g={:?}",
                f,
                g
            );
        }
    }
}

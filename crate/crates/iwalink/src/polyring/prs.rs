//! Subresultant polynomial remainder sequences over an exact coefficient ring.
//!
//! The same algorithm computes integer resultants (coefficients in Z) and the
//! elimination resultants of the torus module (coefficients in a Laurent
//! polynomial ring), so it is written once against a minimal ring trait. The
//! divisions performed on the remainders are exact by subresultant theory.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{DivideOutcome, LaurentPoly};

/// Exact-arithmetic coefficient ring for the PRS. `one_like` supplies a
/// multiplicative identity carrying the same shape parameters as `self`
/// (number of variables for polynomial coefficients).
pub trait PrsCoeff: Clone {
    fn is_zero(&self) -> bool;
    fn one_like(&self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    /// Exact division; panics when the division is not exact.
    fn exact_div_ref(&self, other: &Self) -> Self;

    fn pow_ref(&self, k: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl PrsCoeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn exact_div_ref(&self, other: &Self) -> Self {
        let (q, r) = num_integer::Integer::div_rem(self, other);
        assert!(Zero::is_zero(&r), "PRS division not exact over Z");
        q
    }
}

impl PrsCoeff for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.nvars())
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn exact_div_ref(&self, other: &Self) -> Self {
        match self.trial_divide(other, None) {
            Ok(DivideOutcome::Quotient(q)) => q,
            _ => panic!("PRS division not exact over the polynomial ring"),
        }
    }
}

/// Dense univariate polynomial over `R`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug)]
pub struct DensePoly<R>(pub Vec<R>);

impl<R: PrsCoeff> DensePoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        DensePoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.0.len() - 1
    }

    pub fn lc(&self) -> &R {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn scale(&self, c: &R) -> Self {
        DensePoly::new(self.0.iter().map(|a| a.mul_ref(c)).collect())
    }

    fn sub_shifted_scaled(&self, other: &Self, shift: usize, c: &R) -> Self {
        // self - c * x^shift * other
        let n = self.0.len().max(other.0.len() + shift);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = if i >= shift { other.0.get(i - shift) } else { None };
            let v = match (a, b) {
                (Some(a), Some(b)) => a.sub_ref(&c.mul_ref(b)),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => c.mul_ref(b).neg_ref(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        DensePoly::new(out)
    }

    fn div_coeffs_exact(&self, c: &R) -> Self {
        DensePoly::new(self.0.iter().map(|a| a.exact_div_ref(c)).collect())
    }

    /// Pseudo-remainder: returns `R` with `lc(b)^{da-db+1} a = q b + R`.
    fn prem(&self, b: &Self) -> Self {
        let da = self.degree();
        let db = b.degree();
        assert!(da >= db);
        let lcb = b.lc().clone();
        let mut r = self.clone();
        let mut steps = 0usize;
        while !r.is_zero() && r.degree() >= db {
            let k = r.degree() - db;
            let c = r.lc().clone();
            r = r.scale(&lcb).sub_shifted_scaled(b, k, &c);
            steps += 1;
        }
        // normalize to the exact pseudo-remainder definition
        let want = da - db + 1;
        if steps < want {
            let extra = lcb.pow_ref(want - steps);
            r = r.scale(&extra);
        }
        r
    }
}

/// Resultant of two univariate polynomials over `R` via the subresultant PRS.
/// Both zero is the caller's error; a single zero input gives zero. The sign
/// convention is the standard one: `Res(f, g) = lc(f)^{deg g} prod g(roots of f)`.
pub fn resultant<R: PrsCoeff>(f: &DensePoly<R>, g: &DensePoly<R>) -> R
where
    R: PrsCoeff,
{
    let one = f
        .0
        .first()
        .or_else(|| g.0.first())
        .expect("resultant of two zero polynomials")
        .one_like();
    if f.is_zero() || g.is_zero() {
        // Res with the zero polynomial: zero unless the other is a nonzero constant.
        let other = if f.is_zero() { g } else { f };
        if !other.is_zero() && other.degree() == 0 {
            return one;
        }
        return one.sub_ref(&one); // zero
    }
    if f.degree() == 0 {
        return f.lc().pow_ref(g.degree());
    }
    if g.degree() == 0 {
        return g.lc().pow_ref(f.degree());
    }

    let mut a;
    let mut b;
    let mut negate = false;
    if f.degree() >= g.degree() {
        a = f.clone();
        b = g.clone();
    } else {
        a = g.clone();
        b = f.clone();
        if f.degree() % 2 == 1 && g.degree() % 2 == 1 {
            negate = true;
        }
    }

    let mut g_coef = one.clone();
    let mut h = one.clone();
    loop {
        let da = a.degree();
        let db = b.degree();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b);
        a = b;
        let denom = g_coef.mul_ref(&h.pow_ref(delta));
        b = if r.is_zero() { r } else { r.div_coeffs_exact(&denom) };
        g_coef = a.lc().clone();
        // h = g^delta h^{1-delta}
        h = if delta == 0 {
            h
        } else {
            let num = g_coef.pow_ref(delta);
            if delta == 1 {
                num
            } else {
                num.exact_div_ref(&h.pow_ref(delta - 1))
            }
        };
        if b.is_zero() {
            return one.sub_ref(&one); // common factor: resultant zero
        }
        if b.degree() == 0 {
            let la = a.degree();
            let num = b.lc().pow_ref(la);
            let res = if la <= 1 { num } else { num.exact_div_ref(&h.pow_ref(la - 1)) };
            return if negate { res.neg_ref() } else { res };
        }
    }
}

/// Resultant via a fraction-free (Bareiss) determinant of the Sylvester
/// matrix. Exact over the integers; used as an independent check of the PRS
/// route on small degrees.
pub fn resultant_sylvester(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let f = DensePoly::new(f.to_vec());
    let g = DensePoly::new(g.to_vec());
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let m = f.degree();
    let n = g.degree();
    if m == 0 {
        return f.lc().pow_ref(n);
    }
    if n == 0 {
        return g.lc().pow_ref(m);
    }
    let size = m + n;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    // n rows of f, shifted; coefficients highest first by convention
    for r in 0..n {
        for (k, c) in f.0.iter().rev().enumerate() {
            a[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.0.iter().rev().enumerate() {
            a[n + r][r + k] = c.clone();
        }
    }
    bareiss_det(a)
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if Zero::is_zero(&a[k][k]) {
            match (k + 1..n).find(|&r| !Zero::is_zero(&a[r][k])) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn resultant_matches_sylvester_on_small_inputs() {
        let cases: Vec<(Vec<i64>, Vec<i64>)> = vec![
            (vec![-1, 1], vec![1, 1]),
            (vec![-1, 0, 0, 0, 1], vec![-3, 1]),
            (vec![2, 0, 1], vec![-1, 3, 0, 1]),
            (vec![1, 1, 1], vec![1, 0, -2, 1]),
            (vec![5, -4, 3, -2, 1], vec![-7, 0, 2]),
            (vec![1, 2], vec![3, 4, 5]),
        ];
        for (f, g) in cases {
            let fp = DensePoly::new(ints(&f));
            let gp = DensePoly::new(ints(&g));
            let r1 = resultant(&fp, &gp);
            let r2 = resultant_sylvester(&ints(&f), &ints(&g));
            assert_eq!(r1, r2, "f={:?} g={:?}", f, g);
        }
    }

    #[test]
    fn resultant_sign_convention() {
        // Res(x-1, x+1) = (x+1) at 1 = 2; swapping gives (-1)^{1*1} * 2 = -2
        let f = DensePoly::new(ints(&[-1, 1]));
        let g = DensePoly::new(ints(&[1, 1]));
        assert_eq!(resultant(&f, &g), BigInt::from(2));
        assert_eq!(resultant(&g, &f), BigInt::from(-2));
    }

    #[test]
    fn resultant_with_common_factor_is_zero() {
        // (x-1)(x+2) and (x-1)(x-5)
        let f = DensePoly::new(ints(&[-2, 1, 1])); // x^2+x-2
        let g = DensePoly::new(ints(&[5, -6, 1])); // x^2-6x+5
        assert_eq!(resultant(&f, &g), BigInt::zero());
    }

    #[test]
    fn resultant_quartic_roots_of_unity() {
        // Res(x^4 - 1, x - 3) = prod over 4th roots of unity of (z - 3) = 80
        let f = DensePoly::new(ints(&[-1, 0, 0, 0, 1]));
        let g = DensePoly::new(ints(&[-3, 1]));
        assert_eq!(resultant(&f, &g), BigInt::from(80));
    }
}

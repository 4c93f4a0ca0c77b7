//! Parametrization of p-power torsion subgroups of the d-torus cut out by
//! congruence conditions `v . x = 0 mod p^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::snf::diagonalize;
use crate::polyring::LaurentPoly;

/// Image of `prod_k W(m_k) -> W(n)^d` sending the parameter tuple `eta` to
/// `zeta_i = prod_k eta_k^{generators[k][i]}`; the map is a bijection onto the
/// solution subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupBasis {
    pub p: u64,
    pub n: u32,
    pub d: usize,
    pub generators: Vec<Vec<i64>>,
    /// Parameter orders `p^{m_k}`, each at least p.
    pub orders: Vec<u64>,
}

impl SubgroupBasis {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn order(&self) -> BigInt {
        self.orders.iter().map(|&o| BigInt::from(o)).product()
    }

    /// Exponents of the parameter orders: `m_k` with order `p^{m_k}`.
    pub fn order_exps(&self) -> Vec<u32> {
        self.orders
            .iter()
            .map(|&o| {
                let mut m = 0;
                let mut v = o;
                while v > 1 {
                    v /= self.p;
                    m += 1;
                }
                m
            })
            .collect()
    }

    /// Enumerate all subgroup elements as exponent vectors mod p^n
    /// (test oracle; intended for p^n small).
    pub fn enumerate(&self) -> Vec<Vec<u64>> {
        let pn = (self.p as u128).pow(self.n) as u64;
        let mut points = vec![vec![0u64; self.d]];
        for (g, &o) in self.generators.iter().zip(&self.orders) {
            let mut next = Vec::with_capacity(points.len() * o as usize);
            for base in &points {
                for j in 0..o {
                    let pt: Vec<u64> = base
                        .iter()
                        .zip(g)
                        .map(|(&b, &gi)| {
                            let gi = ((gi as i128).rem_euclid(pn as i128)) as u64;
                            (b + (j as u128 * gi as u128 % pn as u128) as u64) % pn
                        })
                        .collect();
                    next.push(pt);
                }
            }
            points = next;
        }
        points.sort();
        points.dedup();
        points
    }
}

/// Solve `{x in (Z/p^n Z)^d : v . x = 0 mod p^n for all rows v}` via
/// Smith-style diagonalization. An empty row list yields the full torus.
pub fn solve_subgroup(rows: &[Vec<i64>], p: u64, n: u32, d: usize) -> SubgroupBasis {
    let pn_big = BigInt::from(p).pow(n);
    if n == 0 {
        return SubgroupBasis { p, n, d, generators: vec![], orders: vec![] };
    }
    let out = diagonalize(rows, d, true);
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for j in 0..d {
        let dj = out.diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        let g = dj.abs().gcd(&pn_big); // order of the cyclic factor
        if g.is_one() {
            continue;
        }
        let scale = &pn_big / &g;
        let gen: Vec<i64> = out.col_transform[j]
            .iter()
            .map(|c| {
                let v = (c * &scale).mod_floor(&pn_big);
                v.to_i64().expect("subgroup generator entry fits i64")
            })
            .collect();
        generators.push(gen);
        orders.push(g.to_u64().expect("subgroup order fits u64"));
    }
    SubgroupBasis { p, n, d, generators, orders }
}

/// Number of solutions of the congruence system, i.e. the subgroup order.
pub fn count_solutions(rows: &[Vec<i64>], p: u64, n: u32, d: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let pn_big = BigInt::from(p).pow(n);
    let out = diagonalize(rows, d, false);
    let mut count = BigInt::one();
    for j in 0..d {
        let dj = out.diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        count *= dj.abs().gcd(&pn_big);
    }
    count
}

/// Substitute the subgroup parametrization into a polynomial on the ambient
/// torus: variable `t_i` becomes `prod_k eta_k^{generators[k][i]}`, with
/// parameter exponents reduced modulo the parameter orders.
pub fn substitute_on_subgroup(f: &LaurentPoly, basis: &SubgroupBasis) -> LaurentPoly {
    let d = basis.d;
    assert_eq!(f.nvars(), d);
    let r = basis.rank();
    let m: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..r).map(|k| basis.generators[k][i]).collect())
        .collect();
    let g = f.substitute_monomials(&m).expect("dimensions agree");
    reduce_exponents_mod(&g, &basis.orders)
}

/// Reduce each exponent modulo the multiplicative order of its variable.
pub fn reduce_exponents_mod(f: &LaurentPoly, orders: &[u64]) -> LaurentPoly {
    assert_eq!(f.nvars(), orders.len());
    LaurentPoly::from_terms(
        f.nvars(),
        f.terms().map(|(e, c)| {
            let ne: Vec<i64> = e
                .iter()
                .zip(orders)
                .map(|(&ei, &o)| (ei as i128).rem_euclid(o as i128) as i64)
                .collect();
            (ne, c.clone())
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_solutions(rows: &[Vec<i64>], p: u64, n: u32, d: usize) -> Vec<Vec<u64>> {
        let pn = p.pow(n);
        let total = (pn as u128).pow(d as u32);
        assert!(total <= 1 << 20, "oracle guard");
        let mut sols = Vec::new();
        for idx in 0..total {
            let mut x = Vec::with_capacity(d);
            let mut v = idx;
            for _ in 0..d {
                x.push((v % pn as u128) as u64);
                v /= pn as u128;
            }
            let ok = rows.iter().all(|row| {
                let s: i128 = row.iter().zip(&x).map(|(&r, &xi)| r as i128 * xi as i128).sum();
                s.rem_euclid(pn as i128) == 0
            });
            if ok {
                sols.push(x);
            }
        }
        sols.sort();
        sols
    }

    #[test]
    fn spec_examples() {
        // rows = [(1,0)], p=2, n=1, d=2: one generator (0,1) of order 2
        let b = solve_subgroup(&[vec![1, 0]], 2, 1, 2);
        assert_eq!(b.orders, vec![2]);
        assert_eq!(b.enumerate(), vec![vec![0, 0], vec![0, 1]]);

        // rows = [], p=3, n=2, d=2: full torus, two generators of order 9
        let b = solve_subgroup(&[], 3, 2, 2);
        assert_eq!(b.orders, vec![9, 9]);
        assert_eq!(b.order(), BigInt::from(81));

        // rows = [(1,1)], p=2, n=1, d=2: the diagonal {(0,0),(1,1)}
        let b = solve_subgroup(&[vec![1, 1]], 2, 1, 2);
        assert_eq!(b.orders, vec![2]);
        assert_eq!(b.enumerate(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn parametrization_is_bijective_on_small_cases() {
        let cases: Vec<(Vec<Vec<i64>>, u64, u32, usize)> = vec![
            (vec![], 2, 2, 2),
            (vec![vec![1, 0]], 3, 1, 2),
            (vec![vec![1, 1]], 3, 2, 2),
            (vec![vec![2, 1]], 2, 2, 2),
            (vec![vec![1, 2, 3]], 3, 1, 3),
            (vec![vec![2, 0]], 2, 2, 2),
            (vec![vec![1, 1], vec![1, -1]], 3, 2, 2),
            (vec![vec![4, 2]], 2, 3, 2),
        ];
        for (rows, p, n, d) in cases {
            let basis = solve_subgroup(&rows, p, n, d);
            let got = basis.enumerate();
            let want = brute_solutions(&rows, p, n, d);
            assert_eq!(got, want, "rows={:?} p={} n={} d={}", rows, p, n, d);
            assert_eq!(
                BigInt::from(want.len()),
                count_solutions(&rows, p, n, d),
                "count rows={:?}",
                rows
            );
            assert_eq!(BigInt::from(want.len()), basis.order());
        }
    }
}

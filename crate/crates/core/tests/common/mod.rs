//! Reference computations that avoid the library's series machinery.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use theta_lambda::binomial;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qb(n: BigInt) -> Q {
    Q::from_integer(n)
}

/// Eulerian polynomial from the alternating sum
/// `A(n, m) = sum_{j<=m} (-1)^j C(n+1, j) (m+1-j)^n`, coefficients of
/// `x^0..x^{n-1}` (and `P_0 = 1`).
pub fn eulerian_explicit(n: u32) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    (0..n as i64)
        .map(|m| {
            (0..=m).fold(BigInt::zero(), |acc, j| {
                let term = binomial(n as i64 + 1, j) * BigInt::from(m + 1 - j).pow(n);
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// Truncated scalar power series, `order` coefficients.
pub fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let order = a.len();
    let mut out = vec![Q::zero(); order];
    for i in 0..order {
        for j in 0..order - i {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

/// `1 / a` by long division; `a[0]` must be nonzero.
pub fn inverse(a: &[Q]) -> Vec<Q> {
    let order = a.len();
    let mut out = vec![Q::zero(); order];
    out[0] = Q::one() / &a[0];
    for n in 1..order {
        let mut s = Q::zero();
        for k in 1..=n {
            s += &a[k] * &out[n - k];
        }
        out[n] = -s / &a[0];
    }
    out
}

pub fn one_plus_x_pow(n: i64, order: usize) -> Vec<Q> {
    (0..order).map(|k| qb(binomial(n, k as i64))).collect()
}

/// `x P_{2l-1}(-x) / (1+x)^{2l}` with `P` from [`eulerian_explicit`].
pub fn kernel(l: usize, order: usize) -> Vec<Q> {
    let p = eulerian_explicit(2 * l as u32 - 1);
    let mut num = vec![Q::zero(); order];
    for (i, c) in p.iter().enumerate() {
        if i + 1 < order {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            num[i + 1] = qb(c * sign);
        }
    }
    let den: Vec<Q> = (0..order)
        .map(|k| qb(binomial(2 * l as i64, k as i64)))
        .collect();
    mul(&num, &inverse(&den))
}

/// Coefficient of `c^i x^k` in `(1+x)^n exp(sum_l f_l c_l)`, as
/// `(1+x)^n prod_l f_l^{i_l} / i_l!`.
pub fn e_coefficient_oracle(n: i64, k: usize, index: &[u32]) -> Q {
    let order = k + 1;
    let mut acc = one_plus_x_pow(n, order);
    for (pos, &e) in index.iter().enumerate() {
        let f = kernel(pos + 1, order);
        let mut fact = Q::one();
        for m in 1..=e {
            acc = mul(&acc, &f);
            fact *= q(m as i64);
        }
        acc = acc.into_iter().map(|c| c / &fact).collect();
    }
    acc[k].clone()
}

pub fn middle(k: i64) -> BigInt {
    binomial(2 * k, k)
}

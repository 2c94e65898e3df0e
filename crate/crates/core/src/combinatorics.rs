//! Arbitrary-precision binomials, factorials and Eulerian polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Generalized binomial coefficient `n (n-1) ... (n-k+1) / k!`.
///
/// Zero for `k < 0`; valid for negative `n`, so that `binomial(n, k)` is the
/// `x^k` coefficient of `(1+x)^n` for every integer `n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut k = k;
    if n >= 0 {
        if k > n {
            return BigInt::zero();
        }
        k = k.min(n - k);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        // C(n, i) * (n - i) is always divisible by i + 1.
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Middle binomial `C(2k, k)`, zero for negative `k`.
pub fn middle_binomial(k: i64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        binomial(2 * k, k)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Dense integer polynomial in `x`, index = power. Trailing zeros are
/// always stripped, so the zero polynomial has no coefficients and equality
/// is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPolynomial", into = "RawPolynomial")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct RawPolynomial {
    coeffs: Vec<String>,
}

impl TryFrom<RawPolynomial> for IntPolynomial {
    type Error = String;

    fn try_from(raw: RawPolynomial) -> Result<Self, Self::Error> {
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| format!("{c:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err("polynomial has trailing zero coefficients".into());
        }
        Ok(IntPolynomial { coeffs })
    }
}

impl From<IntPolynomial> for RawPolynomial {
    fn from(p: IntPolynomial) -> Self {
        RawPolynomial {
            coeffs: p.coeffs.iter().map(ToString::to_string).collect(),
        }
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `1 - x`
    pub fn one_minus_x() -> Self {
        Self::from_i64s(&[1, -1])
    }

    /// `x - 1`
    pub fn x_minus_one() -> Self {
        Self::from_i64s(&[-1, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn all_positive(&self) -> bool {
        self.coeffs.iter().all(Signed::is_positive)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

fn eulerian_table() -> &'static RwLock<Vec<IntPolynomial>> {
    static TABLE: OnceLock<RwLock<Vec<IntPolynomial>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![IntPolynomial::one()]))
}

/// Eulerian polynomial `P_n`, the numerator of `sum_{k>=1} k^n x^k`.
///
/// Built from `P_0 = 1` and `P_n = sum_{k<n} C(n,k) P_k (x-1)^{n-1-k}`;
/// the table is shared process-wide and grown on demand.
///
/// The sign of the `(x-1)` factor matters: with `(1-x)` instead, `P_2`
/// would come out as `3 - x`, which fails the defining identity.
pub fn eulerian_polynomial(n: usize) -> IntPolynomial {
    if let Some(p) = eulerian_table().read().unwrap().get(n) {
        return p.clone();
    }
    let mut table = eulerian_table().write().unwrap();
    while table.len() <= n {
        let m = table.len();
        // (x-1)^j for j = 0..m-1
        let mut powers = Vec::with_capacity(m);
        powers.push(IntPolynomial::one());
        for j in 1..m {
            let next = &powers[j - 1] * &IntPolynomial::x_minus_one();
            powers.push(next);
        }
        let mut acc = IntPolynomial::zero();
        for (k, pk) in table.iter().enumerate() {
            let term = (pk * &powers[m - 1 - k]).scale(&binomial(m as i64, k as i64));
            acc = &acc + &term;
        }
        table.push(acc);
    }
    table[n].clone()
}

/// Checks `sum_{k=1}^{K-1} k^n x^k == x P_n(x) / (1-x)^{n+1}` modulo `x^K`.
pub fn eulerian_defining_check(n: usize, order: usize) -> bool {
    let lhs: Vec<BigInt> = (0..order)
        .map(|k| {
            if k == 0 {
                BigInt::zero()
            } else {
                num_traits::pow(BigInt::from(k), n)
            }
        })
        .collect();

    // (1-x)^{-(n+1)} = sum_j C(n+j, j) x^j
    let p = eulerian_polynomial(n);
    let mut rhs = vec![BigInt::zero(); order];
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, slot) in rhs.iter_mut().enumerate().skip(i + 1) {
            let d = j - i - 1;
            *slot += c * binomial((n + d) as i64, d as i64);
        }
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(6, 3), b(20));
        assert_eq!(binomial(8, 4) - binomial(8, 2), b(42));
        assert_eq!(binomial(-1, 5), b(-1));
        assert_eq!(binomial(5, -1), b(0));
        assert_eq!(binomial(3, 7), b(0));
        assert_eq!(binomial(0, 0), b(1));
        assert_eq!(binomial(-2, 3), b(-4));
    }

    #[test]
    fn middle_binomial_examples() {
        assert_eq!(middle_binomial(0), b(1));
        assert_eq!(middle_binomial(3), b(20));
        // direct factorial evaluation 8! / (4! 4!)
        assert_eq!(
            middle_binomial(4),
            factorial(8) / (factorial(4) * factorial(4))
        );
        assert_eq!(middle_binomial(4), b(70));
        assert_eq!(middle_binomial(-1), b(0));
    }

    #[test]
    fn eulerian_small_cases() {
        assert_eq!(eulerian_polynomial(0), IntPolynomial::one());
        assert_eq!(eulerian_polynomial(1), IntPolynomial::one());
        assert_eq!(eulerian_polynomial(3), IntPolynomial::from_i64s(&[1, 4, 1]));
        assert_eq!(
            eulerian_polynomial(5),
            IntPolynomial::from_i64s(&[1, 26, 66, 26, 1])
        );
    }

    #[test]
    fn recurrence_with_one_minus_x_breaks_the_identity() {
        // C(2,0) P_0 (1-x) + C(2,1) P_1 = 3 - x, but sum k^2 x^k = x(1+x)/(1-x)^3
        let wrong = &IntPolynomial::one_minus_x() + &IntPolynomial::from_i64s(&[2]);
        assert_eq!(wrong, IntPolynomial::from_i64s(&[3, -1]));
        assert_eq!(eulerian_polynomial(2), IntPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn eulerian_degree_and_positivity() {
        for n in 1..=15 {
            let p = eulerian_polynomial(n);
            assert_eq!(p.degree(), Some(n - 1));
            assert!(p.all_positive());
        }
        assert_eq!(eulerian_polynomial(0).degree(), Some(0));
    }

    #[test]
    fn defining_check_examples() {
        assert!(eulerian_defining_check(0, 10));
        assert!(eulerian_defining_check(3, 20));
        assert!(eulerian_defining_check(7, 30));
        assert!(eulerian_defining_check(4, 1));
    }

    #[test]
    fn defining_check_detects_a_wrong_polynomial() {
        // Same shape of test against P_4 with a perturbed coefficient.
        let p = eulerian_polynomial(4);
        let bad = &p + &IntPolynomial::from_i64s(&[0, 1]);
        let order = 12;
        let mut rhs = vec![BigInt::zero(); order];
        for (i, c) in bad.coeffs().iter().enumerate() {
            for (j, slot) in rhs.iter_mut().enumerate().skip(i + 1) {
                let d = j - i - 1;
                *slot += c * binomial((4 + d) as i64, d as i64);
            }
        }
        let lhs: Vec<BigInt> = (0..order)
            .map(|k| {
                if k == 0 {
                    b(0)
                } else {
                    num_traits::pow(b(k as i64), 4)
                }
            })
            .collect();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn eulerian_invariants_up_to_15() {
        for n in 0..=15 {
            assert!(eulerian_defining_check(n, 40), "n = {n}");
        }
        for n in 1..=15u64 {
            let p = eulerian_polynomial(n as usize);
            assert_eq!(p.eval(&b(1)), factorial(n));
            assert!(p.is_palindromic());
        }
    }

    #[test]
    fn polynomial_canonical_form() {
        assert_eq!(IntPolynomial::from_i64s(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(IntPolynomial::from_i64s(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
        let p = IntPolynomial::from_i64s(&[1, -2, 1]);
        assert_eq!(
            &IntPolynomial::one_minus_x() * &IntPolynomial::one_minus_x(),
            p
        );
        assert_eq!(IntPolynomial::one_minus_x().pow(2), p);
        assert_eq!(p.reflect(), IntPolynomial::from_i64s(&[1, 2, 1]));
        assert_eq!(p.to_string(), "1 - 2x + x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn polynomial_json_rejects_trailing_zero() {
        let p: IntPolynomial = serde_json::from_str(r#"{"coeffs":["1","4","1"]}"#).unwrap();
        assert_eq!(p, eulerian_polynomial(3));
        assert!(serde_json::from_str::<IntPolynomial>(r#"{"coeffs":["1","0"]}"#).is_err());
    }

    proptest! {
        #[test]
        fn binomial_symmetry(n in 0i64..60, k in 0i64..60) {
            prop_assume!(k <= n);
            prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        }

        #[test]
        fn pascal_rule(n in -40i64..40, k in 1i64..40) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }

        #[test]
        fn binomial_matches_falling_factorial(n in -30i64..30, k in 0i64..15) {
            let falling = (0..k).fold(b(1), |acc, i| acc * b(n - i));
            prop_assert_eq!(binomial(n, k), falling / factorial(k as u64));
        }
    }
}

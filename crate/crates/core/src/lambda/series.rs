//! Truncated power series in `x` with [`ThetaClass`] coefficients.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{out_of_range, Error, Result};
use crate::pontryagin::ThetaClass;
use crate::rational::{self, big, Rational};

/// `sum_{k<K} a_k x^k mod x^K`, all `a_k` living in the same dimension `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSeries", into = "RawSeries")]
pub struct ThetaSeries {
    g: usize,
    coeffs: Vec<ThetaClass>,
}

#[derive(Serialize, Deserialize)]
struct RawSeries {
    g: usize,
    order: usize,
    coeffs: Vec<ThetaClass>,
}

impl TryFrom<RawSeries> for ThetaSeries {
    type Error = Error;

    fn try_from(raw: RawSeries) -> Result<Self> {
        if raw.coeffs.len() != raw.order {
            return Err(Error::Malformed(format!(
                "series of order {} carries {} coefficients",
                raw.order,
                raw.coeffs.len()
            )));
        }
        ThetaSeries::from_coeffs(raw.g, raw.coeffs)
    }
}

impl From<ThetaSeries> for RawSeries {
    fn from(s: ThetaSeries) -> Self {
        RawSeries {
            g: s.g,
            order: s.coeffs.len(),
            coeffs: s.coeffs,
        }
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(out_of_range("K", 0, "K >= 1"))
    } else {
        Ok(())
    }
}

impl ThetaSeries {
    pub fn zero(g: usize, order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(ThetaSeries {
            g,
            coeffs: vec![ThetaClass::zero(g)?; order],
        })
    }

    pub fn one(g: usize, order: usize) -> Result<Self> {
        let mut s = Self::zero(g, order)?;
        s.coeffs[0] = ThetaClass::one(g)?;
        Ok(s)
    }

    pub fn from_coeffs(g: usize, coeffs: Vec<ThetaClass>) -> Result<Self> {
        check_order(coeffs.len())?;
        if let Some(bad) = coeffs.iter().find(|c| c.g() != g) {
            return Err(Error::DimensionMismatch {
                left: g,
                right: bad.g(),
            });
        }
        Ok(ThetaSeries { g, coeffs })
    }

    /// Series with scalar coefficients `q_k w_0`, truncated or zero-padded to `order`.
    pub fn from_scalars(g: usize, order: usize, scalars: &[Rational]) -> Result<Self> {
        let mut s = Self::zero(g, order)?;
        for (slot, q) in s.coeffs.iter_mut().zip(scalars) {
            *slot = ThetaClass::scalar(g, q.clone())?;
        }
        Ok(s)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[ThetaClass] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> ThetaClass {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| ThetaClass::zero(self.g).expect("g already validated"))
    }

    fn same_shape(&self, other: &ThetaSeries) -> Result<()> {
        if self.g != other.g {
            return Err(Error::DimensionMismatch {
                left: self.g,
                right: other.g,
            });
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ThetaSeries) -> Result<ThetaSeries> {
        self.same_shape(other)?;
        Ok(ThetaSeries {
            g: self.g,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ThetaSeries) -> Result<ThetaSeries> {
        self.same_shape(other)?;
        Ok(ThetaSeries {
            g: self.g,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Multiplies every coefficient by the class `c` (Pontryagin product).
    pub fn mul_class(&self, c: &ThetaClass) -> Result<ThetaSeries> {
        if c.g() != self.g {
            return Err(Error::DimensionMismatch {
                left: self.g,
                right: c.g(),
            });
        }
        Ok(ThetaSeries {
            g: self.g,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        })
    }

    /// Cauchy product modulo `x^K`.
    pub fn mul(&self, other: &ThetaSeries) -> Result<ThetaSeries> {
        self.same_shape(other)?;
        let order = self.order();
        let mut out = ThetaSeries::zero(self.g, order)?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        Ok(out)
    }

    /// `exp(s)` by the recursion `n E_n = sum_{k=1}^n k s_k E_{n-k}`, seeded
    /// with the (terminating) exponential of the nilpotent constant term.
    pub fn exp(&self) -> Result<ThetaSeries> {
        let s0 = &self.coeffs[0];
        if !s0.is_nilpotent() {
            return Err(Error::NonNilpotentConstant(rational::format(&s0.coeff(0))));
        }
        let mut out = Vec::with_capacity(self.order());
        out.push(s0.nilpotent_exp()?);
        for n in 1..self.order() {
            let mut acc = ThetaClass::zero(self.g)?;
            for k in 1..=n {
                let sk = &self.coeffs[k];
                if sk.is_zero() {
                    continue;
                }
                acc = &acc + &(sk * &out[n - k]).scale(&rational::int(k as i64));
            }
            out.push(acc.scale(&rational::ratio(1, n as i64)));
        }
        Ok(ThetaSeries {
            g: self.g,
            coeffs: out,
        })
    }

    /// `log(f)` for `f` with constant term `1 + nilpotent`, by
    /// `n L_n f_0 = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}`.
    pub fn log(&self) -> Result<ThetaSeries> {
        let f0 = &self.coeffs[0];
        let first = f0.unipotent_log()?;
        let f0_inv = f0.inverse()?;
        let mut out = Vec::with_capacity(self.order());
        out.push(first);
        for n in 1..self.order() {
            let mut acc = self.coeffs[n].scale(&rational::int(n as i64));
            for (k, lk) in out.iter().enumerate().skip(1) {
                acc = &acc - &(lk * &self.coeffs[n - k]).scale(&rational::int(k as i64));
            }
            out.push((&acc * &f0_inv).scale(&rational::ratio(1, n as i64)));
        }
        Ok(ThetaSeries {
            g: self.g,
            coeffs: out,
        })
    }

    /// Applies the Adams operation to every coefficient.
    pub fn adams(&self, n: i64) -> ThetaSeries {
        ThetaSeries {
            g: self.g,
            coeffs: self.coeffs.iter().map(|c| c.adams(n)).collect(),
        }
    }
}

impl fmt::Display for ThetaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "x^{k}: {c}")?;
        }
        Ok(())
    }
}

pub fn series_mul(s: &ThetaSeries, t: &ThetaSeries) -> Result<ThetaSeries> {
    s.mul(t)
}

pub fn series_exp(s: &ThetaSeries) -> Result<ThetaSeries> {
    s.exp()
}

pub fn series_log(s: &ThetaSeries) -> Result<ThetaSeries> {
    s.log()
}

/// `(1+x)^n mod x^K` as a scalar series; `n` may be negative.
pub fn one_plus_x_pow(n: i64, g: usize, order: usize) -> Result<ThetaSeries> {
    let scalars: Vec<Rational> = (0..order).map(|k| big(binomial(n, k as i64))).collect();
    ThetaSeries::from_scalars(g, order, &scalars)
}

/// Chern-Mather data of a clean Lagrangian cycle: its degree `c_0` and the
/// multipliers `lambda_r` with `c_r = lambda_r w_r` for `1 <= r <= g-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawChernData", into = "RawChernData")]
pub struct LagrangianChernData {
    g: usize,
    c0: i64,
    higher: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawChernData {
    g: usize,
    c0: i64,
    #[serde(with = "rational::serde_seq")]
    higher: Vec<Rational>,
}

impl TryFrom<RawChernData> for LagrangianChernData {
    type Error = Error;

    fn try_from(raw: RawChernData) -> Result<Self> {
        LagrangianChernData::new(raw.g, raw.c0, raw.higher)
    }
}

impl From<LagrangianChernData> for RawChernData {
    fn from(d: LagrangianChernData) -> Self {
        RawChernData {
            g: d.g,
            c0: d.c0,
            higher: d.higher,
        }
    }
}

impl LagrangianChernData {
    pub fn new(g: usize, c0: i64, higher: Vec<Rational>) -> Result<Self> {
        if g == 0 {
            return Err(out_of_range("g", 0, "g >= 1"));
        }
        if higher.len() != g - 1 {
            return Err(Error::Malformed(format!(
                "dimension {g} needs {} higher multipliers, got {}",
                g - 1,
                higher.len()
            )));
        }
        Ok(LagrangianChernData { g, c0, higher })
    }

    /// Data `(c_0, lambda_1, 0, ..., 0)`, the shape of a curve's conormal cycle.
    pub fn curve_like(g: usize, c0: i64, lambda1: Rational) -> Result<Self> {
        let mut higher = vec![Rational::zero(); g.saturating_sub(1)];
        if let Some(first) = higher.first_mut() {
            *first = lambda1;
        }
        Self::new(g, c0, higher)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn c0(&self) -> i64 {
        self.c0
    }

    /// `lambda_r` for `r >= 1` (zero for `r >= g`).
    pub fn lambda(&self, r: usize) -> Rational {
        if r == 0 {
            return rational::int(self.c0);
        }
        self.higher
            .get(r - 1)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn higher(&self) -> &[Rational] {
        &self.higher
    }

    /// Total class `c_0 w_0 + sum lambda_r w_r`.
    pub fn total_class(&self) -> ThetaClass {
        let mut coeffs = Vec::with_capacity(self.g + 1);
        coeffs.push(rational::int(self.c0));
        coeffs.extend(self.higher.iter().cloned());
        coeffs.push(Rational::zero());
        ThetaClass::from_coeffs(self.g, coeffs).expect("shape checked on construction")
    }

    /// `c_r -> n^{2r} c_r`, the data of `Psi^n` of the cycle.
    pub fn adams(&self, n: i64) -> LagrangianChernData {
        let total = self.total_class().adams(n);
        LagrangianChernData {
            g: self.g,
            c0: self.c0,
            higher: total.coeffs()[1..self.g].to_vec(),
        }
    }
}

/// `x P_{2l-1}(-x) / (1+x)^{2l}` as a scalar series mod `x^K`.
pub(crate) fn adams_kernel_scalars(l: usize, order: usize) -> Vec<Rational> {
    let p = crate::combinatorics::eulerian_polynomial(2 * l - 1).reflect();
    let inv: Vec<Rational> = (0..order)
        .map(|k| big(binomial(-2 * l as i64, k as i64)))
        .collect();
    let mut out = vec![Rational::zero(); order];
    for (i, c) in p.coeffs().iter().enumerate() {
        // shifted by one for the leading x
        for (j, b) in inv.iter().enumerate() {
            let pos = i + j + 1;
            if pos >= order {
                break;
            }
            out[pos] += big(c.clone()) * b;
        }
    }
    out
}

/// Generating series `E_Λ(x) = (1+x)^{c_0} prod_l exp(x P_{2l-1}(-x)/(1+x)^{2l} c_l)`
/// modulo `x^K`; its `x^k` coefficient is the Chern-Mather class of `Alt^k`.
pub fn e_lambda(data: &LagrangianChernData, order: usize) -> Result<ThetaSeries> {
    let g = data.g();
    let mut acc = one_plus_x_pow(data.c0(), g, order)?;
    let mut exponent = ThetaSeries::zero(g, order)?;
    for l in 1..g {
        let lam = data.lambda(l);
        if lam.is_zero() {
            continue;
        }
        let kernel = ThetaSeries::from_scalars(g, order, &adams_kernel_scalars(l, order))?;
        let c_l = ThetaClass::monomial(g, l, lam)?;
        exponent = exponent.add(&kernel.mul_class(&c_l)?)?;
    }
    // The factors commute, so one exponential of the summed exponent suffices.
    if exponent.coeffs().iter().any(|c| !c.is_zero()) {
        acc = acc.mul(&exponent.exp()?)?;
    }
    Ok(acc)
}

/// Total Chern-Mather class of `Alt^k`, the `x^k` coefficient of `E_Λ`.
pub fn alt_class(data: &LagrangianChernData, k: usize) -> Result<ThetaClass> {
    Ok(e_lambda(data, k + 1)?.coeff(k))
}

/// `Alt^k` by the independent Newton route
/// `sum e_m x^m = exp(sum_m (-1)^{m+1}/m p_m x^m)`, with `p_m = Psi^m c(Λ)`.
pub fn alt_via_newton(data: &LagrangianChernData, k: usize) -> Result<ThetaClass> {
    let g = data.g();
    let order = k + 1;
    let total = data.total_class();
    let mut coeffs = vec![ThetaClass::zero(g)?];
    for m in 1..order as i64 {
        let sign = if m % 2 == 1 { 1 } else { -1 };
        coeffs.push(total.adams(m).scale(&rational::ratio(sign, m)));
    }
    let power_sums = ThetaSeries::from_coeffs(g, coeffs)?;
    Ok(power_sums.exp()?.coeff(k))
}

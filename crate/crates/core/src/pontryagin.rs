//! The theta-subalgebra of even-degree rational homology of a `g`-dimensional
//! ppav under the Pontryagin product.
//!
//! A [`ThetaClass`] is stored on the divided-power basis
//! `w_r = theta^{g-r}/(g-r)! ∩ [A]` of `H_{2r}`, for `r = 0..=g`. On that basis
//! the Pontryagin product is `w_a * w_b = C(a+b, a) w_{a+b}` with everything
//! of degree above `g` vanishing; `w_0 = [pt]` is the unit and `w_g = [A]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{out_of_range, Error, Result};
use crate::rational::{self, big, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawThetaClass", into = "RawThetaClass")]
pub struct ThetaClass {
    g: usize,
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawThetaClass {
    g: usize,
    #[serde(with = "rational::serde_seq")]
    coeffs: Vec<Rational>,
}

impl TryFrom<RawThetaClass> for ThetaClass {
    type Error = Error;

    fn try_from(raw: RawThetaClass) -> Result<Self> {
        ThetaClass::from_coeffs(raw.g, raw.coeffs)
    }
}

impl From<ThetaClass> for RawThetaClass {
    fn from(u: ThetaClass) -> Self {
        RawThetaClass {
            g: u.g,
            coeffs: u.coeffs,
        }
    }
}

fn check_g(g: usize) -> Result<()> {
    if g == 0 {
        Err(out_of_range("g", 0, "g >= 1"))
    } else {
        Ok(())
    }
}

impl ThetaClass {
    pub fn zero(g: usize) -> Result<Self> {
        check_g(g)?;
        Ok(ThetaClass {
            g,
            coeffs: vec![Rational::zero(); g + 1],
        })
    }

    /// The Pontryagin unit `w_0 = [pt]`.
    pub fn one(g: usize) -> Result<Self> {
        Self::scalar(g, Rational::one())
    }

    /// `q * w_0`
    pub fn scalar(g: usize, q: Rational) -> Result<Self> {
        let mut u = Self::zero(g)?;
        u.coeffs[0] = q;
        Ok(u)
    }

    /// The basis class `w_r`.
    pub fn basis(g: usize, r: usize) -> Result<Self> {
        Self::monomial(g, r, Rational::one())
    }

    /// `q * w_r`
    pub fn monomial(g: usize, r: usize, q: Rational) -> Result<Self> {
        let mut u = Self::zero(g)?;
        if r > g {
            return Err(out_of_range("r", r as i64, format!("0 <= r <= g = {g}")));
        }
        u.coeffs[r] = q;
        Ok(u)
    }

    pub fn from_coeffs(g: usize, coeffs: Vec<Rational>) -> Result<Self> {
        check_g(g)?;
        if coeffs.len() != g + 1 {
            return Err(Error::Malformed(format!(
                "class in dimension {g} needs {} coefficients, got {}",
                g + 1,
                coeffs.len()
            )));
        }
        Ok(ThetaClass { g, coeffs })
    }

    pub fn from_i64s(g: usize, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(g, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Multiplier of `w_r` (zero above `g`).
    pub fn coeff(&self, r: usize) -> Rational {
        self.coeffs.get(r).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the `w_0` component vanishes, i.e. the class is nilpotent.
    pub fn is_nilpotent(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    fn same_g(&self, other: &ThetaClass) -> Result<()> {
        if self.g == other.g {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.g,
                right: other.g,
            })
        }
    }

    pub fn checked_add(&self, other: &ThetaClass) -> Result<ThetaClass> {
        self.same_g(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &ThetaClass) -> Result<ThetaClass> {
        self.same_g(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &ThetaClass, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        ThetaClass {
            g: self.g,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> ThetaClass {
        ThetaClass {
            g: self.g,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Pontryagin product, truncated above degree `g`.
    pub fn pontryagin_mul(&self, other: &ThetaClass) -> Result<ThetaClass> {
        self.same_g(other)?;
        let g = self.g;
        let mut out = vec![Rational::zero(); g + 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate().take(g + 1 - a) {
                if y.is_zero() {
                    continue;
                }
                out[a + b] += x * y * big(binomial((a + b) as i64, a as i64));
            }
        }
        Ok(ThetaClass { g, coeffs: out })
    }

    /// `u^{*m}`, with `u^{*0} = w_0`.
    pub fn pontryagin_pow(&self, m: u32) -> ThetaClass {
        let mut acc = ThetaClass::one(self.g).expect("g already validated");
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    /// Adams operation `Psi^n = [n]_*`: scales `H_{2r}` by `n^{2r}`.
    pub fn adams(&self, n: i64) -> ThetaClass {
        let n2 = int(n) * int(n);
        let mut factor = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &factor);
            factor *= &n2;
        }
        ThetaClass { g: self.g, coeffs }
    }

    /// Image in the quotient `H_{<=2d}`: components of degree above `d` are zeroed.
    pub fn truncate_to(&self, d: usize) -> Result<ThetaClass> {
        if d > self.g {
            return Err(out_of_range(
                "d",
                d as i64,
                format!("0 <= d <= g = {}", self.g),
            ));
        }
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().skip(d + 1) {
            *c = Rational::zero();
        }
        Ok(out)
    }

    /// `exp(u)` for nilpotent `u`; the sum stops once powers vanish.
    pub fn nilpotent_exp(&self) -> Result<ThetaClass> {
        if !self.is_nilpotent() {
            return Err(Error::NonNilpotentConstant(rational::format(
                &self.coeffs[0],
            )));
        }
        let mut acc = ThetaClass::one(self.g)?;
        let mut term = acc.clone();
        for m in 1..=self.g as i64 {
            term = (&term * self).scale(&rational::ratio(1, m));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// `log(u)` for `u = 1 + nilpotent`.
    pub fn unipotent_log(&self) -> Result<ThetaClass> {
        if !rational::is_one(&self.coeffs[0]) {
            return Err(Error::NonUnitConstant(rational::format(&self.coeffs[0])));
        }
        let nil = self - &ThetaClass::one(self.g)?;
        let mut acc = ThetaClass::zero(self.g)?;
        let mut power = ThetaClass::one(self.g)?;
        for m in 1..=self.g as i64 {
            power = &power * &nil;
            if power.is_zero() {
                break;
            }
            let sign = if m % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale(&rational::ratio(sign, m));
        }
        Ok(acc)
    }

    /// Inverse of a class whose `w_0` component is nonzero.
    pub fn inverse(&self) -> Result<ThetaClass> {
        let lead = self.coeffs[0].clone();
        if lead.is_zero() {
            return Err(Error::VanishingCoefficient(
                "class with zero scalar part has no inverse".into(),
            ));
        }
        // u = lead (1 + n), u^{-1} = lead^{-1} sum (-n)^m
        let inv_lead = lead.recip();
        let neg_nil = &ThetaClass::one(self.g)? - &self.scale(&inv_lead);
        let mut acc = ThetaClass::one(self.g)?;
        let mut power = acc.clone();
        for _ in 1..=self.g {
            power = &power * &neg_nil;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc.scale(&inv_lead))
    }
}

// Operator forms panic on a dimension mismatch; use the `checked_*` and
// `pontryagin_mul` methods when the shapes are not already known to agree.

impl Add for &ThetaClass {
    type Output = ThetaClass;

    fn add(self, rhs: &ThetaClass) -> ThetaClass {
        self.checked_add(rhs).expect("ThetaClass addition")
    }
}

impl Sub for &ThetaClass {
    type Output = ThetaClass;

    fn sub(self, rhs: &ThetaClass) -> ThetaClass {
        self.checked_sub(rhs).expect("ThetaClass subtraction")
    }
}

impl Mul for &ThetaClass {
    type Output = ThetaClass;

    fn mul(self, rhs: &ThetaClass) -> ThetaClass {
        self.pontryagin_mul(rhs).expect("Pontryagin product")
    }
}

impl Neg for &ThetaClass {
    type Output = ThetaClass;

    fn neg(self) -> ThetaClass {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for ThetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| format!("({c})w_{r}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `theta_basis(g, r) = w_r`
pub fn theta_basis(g: usize, r: usize) -> Result<ThetaClass> {
    ThetaClass::basis(g, r)
}

pub fn pontryagin_mul(u: &ThetaClass, v: &ThetaClass) -> Result<ThetaClass> {
    u.pontryagin_mul(v)
}

pub fn adams(u: &ThetaClass, n: i64) -> ThetaClass {
    u.adams(n)
}

pub fn truncate_to(u: &ThetaClass, d: usize) -> Result<ThetaClass> {
    u.truncate_to(d)
}

/// A class on a bielliptic Prym written in the bigraded basis
/// `e_{a,b} = xi'^a/a! · xi''^b/b! ∩ [P]` with `a + b <= g`.
///
/// Only the linear structure is provided; no product is defined on this basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBiThetaClass", into = "RawBiThetaClass")]
pub struct BiThetaClass {
    g: usize,
    coeffs: BTreeMap<(usize, usize), Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawBiThetaClass {
    g: usize,
    terms: Vec<BiTerm>,
}

#[derive(Serialize, Deserialize)]
struct BiTerm {
    a: usize,
    b: usize,
    #[serde(with = "rational::serde_one")]
    coeff: Rational,
}

impl TryFrom<RawBiThetaClass> for BiThetaClass {
    type Error = Error;

    fn try_from(raw: RawBiThetaClass) -> Result<Self> {
        let mut out = BiThetaClass::zero(raw.g)?;
        for t in raw.terms {
            if out.coeffs.contains_key(&(t.a, t.b)) {
                return Err(Error::Malformed(format!(
                    "duplicate term e_({},{})",
                    t.a, t.b
                )));
            }
            out.set(t.a, t.b, t.coeff)?;
        }
        Ok(out)
    }
}

impl From<BiThetaClass> for RawBiThetaClass {
    fn from(u: BiThetaClass) -> Self {
        RawBiThetaClass {
            g: u.g,
            terms: u
                .coeffs
                .into_iter()
                .map(|((a, b), coeff)| BiTerm { a, b, coeff })
                .collect(),
        }
    }
}

impl BiThetaClass {
    pub fn zero(g: usize) -> Result<Self> {
        check_g(g)?;
        Ok(BiThetaClass {
            g,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// Sets the coefficient of `e_{a,b}`; zero removes the entry.
    pub fn set(&mut self, a: usize, b: usize, q: Rational) -> Result<()> {
        if a + b > self.g {
            return Err(out_of_range(
                "a + b",
                (a + b) as i64,
                format!("a + b <= g = {}", self.g),
            ));
        }
        if q.is_zero() {
            self.coeffs.remove(&(a, b));
        } else {
            self.coeffs.insert((a, b), q);
        }
        Ok(())
    }

    pub fn coeff(&self, a: usize, b: usize) -> Rational {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.coeffs.iter().map(|(&(a, b), q)| (a, b, q))
    }

    pub fn scale(&self, q: &Rational) -> BiThetaClass {
        let mut out = BiThetaClass::zero(self.g).expect("g already validated");
        for (&(a, b), c) in &self.coeffs {
            out.set(a, b, c * q).expect("indices already validated");
        }
        out
    }

    pub fn checked_add(&self, other: &BiThetaClass) -> Result<BiThetaClass> {
        if self.g != other.g {
            return Err(Error::DimensionMismatch {
                left: self.g,
                right: other.g,
            });
        }
        let mut out = self.clone();
        for (&(a, b), c) in &other.coeffs {
            let sum = out.coeff(a, b) + c;
            out.set(a, b, sum)?;
        }
        Ok(out)
    }
}

impl fmt::Display for BiThetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms()
            .map(|(a, b, c)| format!("({c})e_({a},{b})"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

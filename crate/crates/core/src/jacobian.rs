//! Jacobian reference classes and the Chern-Mather criterion for detecting
//! Jacobians among fake Jacobians.
//!
//! For the Jacobian of a smooth genus-`g` curve the Chern-Mather class of the
//! clean characteristic cycle of the theta divisor is
//!
//! * non-hyperelliptic: `c_{M,r} = B_{g-r-1} w_r`,
//! * hyperelliptic: `c_{M,r} = (B_{g-r-1} - C(2g-2r-2, g-r-3)) w_r`,
//!
//! for `r = 0..g-1`, where `B_k = C(2k, k)`. The criterion takes observed
//! multipliers in degrees 0, 1, 2 and reconstructs the data `(c_0, c_1, c_2)`
//! of a Lagrangian cycle `Λ_Z` with `Alt^{g-1}(Λ_Z)` (minus `Alt^{g-3}` in
//! the hyperelliptic case) matching them. A vanishing `c_2` means `Z` is a
//! curve, which makes the theta divisor a sum of curves.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, middle_binomial};
use crate::error::{out_of_range, Error, Result};
use crate::lambda::{c2_gap, e_coefficient};
use crate::pontryagin::ThetaClass;
use crate::rational::{self, big, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveCase {
    NonHyperelliptic,
    Hyperelliptic,
}

impl CurveCase {
    pub const ALL: [CurveCase; 2] = [CurveCase::NonHyperelliptic, CurveCase::Hyperelliptic];

    pub fn short_name(self) -> &'static str {
        match self {
            CurveCase::NonHyperelliptic => "nonhyp",
            CurveCase::Hyperelliptic => "hyp",
        }
    }
}

impl fmt::Display for CurveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for CurveCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonhyp" | "non-hyperelliptic" | "NonHyperelliptic" => Ok(CurveCase::NonHyperelliptic),
            "hyp" | "hyperelliptic" | "Hyperelliptic" => Ok(CurveCase::Hyperelliptic),
            other => Err(Error::Malformed(format!(
                "unknown curve case {other:?} (expected nonhyp or hyp)"
            ))),
        }
    }
}

/// Multiplier of `w_r` in the reference table.
pub fn reference_multiplier(g: usize, case: CurveCase, r: usize) -> BigInt {
    let m = g as i64 - r as i64 - 1;
    let base = middle_binomial(m);
    match case {
        CurveCase::NonHyperelliptic => base,
        CurveCase::Hyperelliptic => base - binomial(2 * m, m - 2),
    }
}

/// Chern-Mather classes `c_{M,r}(cc(IC_Θ))` of a genus-`g` Jacobian, `r = 0..g-1`.
pub fn jacobian_reference_classes(g: usize, case: CurveCase) -> Result<Vec<ThetaClass>> {
    if g < 1 {
        return Err(out_of_range("g", g as i64, "g >= 1"));
    }
    (0..g)
        .map(|r| ThetaClass::monomial(g, r, big(reference_multiplier(g, case, r))))
        .collect()
}

/// Dimension of the Tannakian representation of a (fake) Jacobian:
/// `dim Alt^n(C^{2n})`, or `dim Alt^n / Alt^{n-2}` when hyperelliptic, `n = g-1`.
pub fn dim_omega(g: usize, case: CurveCase) -> Result<BigInt> {
    if g < 2 {
        return Err(out_of_range("g", g as i64, "g >= 2"));
    }
    let n = g as i64 - 1;
    let full = binomial(2 * n, n);
    Ok(match case {
        CurveCase::NonHyperelliptic => full,
        CurveCase::Hyperelliptic => full - binomial(2 * n, n - 2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictKind {
    Jacobian,
    NotConclusive,
    Inapplicable,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Jacobian => "Jacobian",
            VerdictKind::NotConclusive => "NotConclusive",
            VerdictKind::Inapplicable => "Inapplicable",
        })
    }
}

/// Reconstructed data `(c_0, c_1, c_2)` of the cycle `Λ_Z`, with `c_1`, `c_2`
/// as multipliers of `w_1`, `w_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub c0: i64,
    #[serde(with = "rational::serde_one")]
    pub c1: Rational,
    #[serde(with = "rational::serde_one")]
    pub c2: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub verdict: VerdictKind,
    pub reconstruction: Option<Reconstruction>,
    pub reason: String,
    /// Human-readable trace of the equations solved, in order.
    pub equations: Vec<String>,
}

impl CriterionVerdict {
    fn new(verdict: VerdictKind, reason: impl Into<String>, equations: Vec<String>) -> Self {
        CriterionVerdict {
            verdict,
            reconstruction: None,
            reason: reason.into(),
            equations,
        }
    }
}

/// Observed Chern-Mather multipliers of a fake Jacobian's theta divisor,
/// together with the codimension of the problematic locus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionInput {
    pub g: usize,
    pub case: CurveCase,
    #[serde(with = "rational::serde_one")]
    pub c0: Rational,
    #[serde(with = "rational::serde_one")]
    pub c1: Rational,
    #[serde(with = "rational::serde_one")]
    pub c2: Rational,
    pub problematic_codim: i64,
}

impl CriterionInput {
    /// The reference Jacobian multipliers in degrees 0, 1, 2.
    pub fn reference(g: usize, case: CurveCase, problematic_codim: i64) -> Self {
        CriterionInput {
            g,
            case,
            c0: big(reference_multiplier(g, case, 0)),
            c1: big(reference_multiplier(g, case, 1)),
            c2: big(reference_multiplier(g, case, 2)),
            problematic_codim,
        }
    }

    /// Observations pushed forward by `[n]_*`: `c_r -> n^{2r} c_r`.
    pub fn adams_rescaled(&self, n: i64) -> Self {
        let n2 = rational::int(n * n);
        CriterionInput {
            c1: &self.c1 * &n2,
            c2: &self.c2 * &n2 * &n2,
            ..self.clone()
        }
    }

    pub fn check(&self) -> Result<CriterionVerdict> {
        criterion_check(
            self.g,
            self.case,
            &self.c0,
            &self.c1,
            &self.c2,
            self.problematic_codim,
        )
    }
}

/// `E^{c0}_{g-1}(i)`, minus `E^{c0}_{g-3}(i)` in the hyperelliptic case.
fn alt_combination_coefficient(
    g: usize,
    case: CurveCase,
    c0: i64,
    index: &[u32],
) -> Result<Rational> {
    let top = e_coefficient(c0, g, g - 1, index)?;
    Ok(match case {
        CurveCase::NonHyperelliptic => top,
        CurveCase::Hyperelliptic => top - e_coefficient(c0, g, g - 3, index)?,
    })
}

fn degree0_value(g: usize, case: CurveCase, c0: i64) -> BigInt {
    let gi = g as i64;
    let top = binomial(c0, gi - 1);
    match case {
        CurveCase::NonHyperelliptic => top,
        CurveCase::Hyperelliptic => top - binomial(c0, gi - 3),
    }
}

fn unit_index(g: usize, var: usize, power: u32) -> Vec<u32> {
    let mut i = vec![0; g - 1];
    i[var - 1] = power;
    i
}

/// Runs the criterion on observed multipliers of `w_0`, `w_1`, `w_2`.
///
/// Steps: the problematic locus must have codimension above 2; `c_0` is the
/// unique integer `>= g-1` whose exterior power has the observed degree; the
/// degree-1 equation is linear in `c_1`; the degree-2 equation, after
/// substituting `c_1 * c_1 = 2 c_1^2 w_2`, is linear in `c_2`. The verdict is
/// `Jacobian` exactly when `c_2 = 0`.
pub fn criterion_check(
    g: usize,
    case: CurveCase,
    observed_c0: &Rational,
    observed_c1: &Rational,
    observed_c2: &Rational,
    problematic_codim: i64,
) -> Result<CriterionVerdict> {
    if g < 4 {
        return Err(out_of_range("g", g as i64, "g >= 4"));
    }
    let mut eqs = Vec::new();

    if problematic_codim <= 2 {
        return Ok(CriterionVerdict::new(
            VerdictKind::Inapplicable,
            format!(
                "problematic locus has codimension {problematic_codim}; the criterion needs codimension > 2"
            ),
            eqs,
        ));
    }

    // (2) degree 0
    let Some(target) = rational::as_integer(observed_c0) else {
        return Ok(CriterionVerdict::new(
            VerdictKind::NotConclusive,
            format!("observed c_M,0 = {observed_c0} is not an integer"),
            eqs,
        ));
    };
    let c0 = match solve_degree0(g, case, &target, &mut eqs) {
        Ok(c0) => c0,
        Err(reason) => {
            return Ok(CriterionVerdict::new(
                VerdictKind::NotConclusive,
                reason,
                eqs,
            ))
        }
    };

    // (3) degree 1
    let a1 = alt_combination_coefficient(g, case, c0, &unit_index(g, 1, 1))?;
    if a1.is_zero() {
        return Err(Error::VanishingCoefficient(format!(
            "degree-1 coefficient vanishes for g = {g}, c0 = {c0}"
        )));
    }
    let c1 = observed_c1 / &a1;
    eqs.push(format!("({a1}) * c1 = {observed_c1}  =>  c1 = {c1}"));

    // (4) degree 2
    let a11 = alt_combination_coefficient(g, case, c0, &unit_index(g, 1, 2))?;
    let a2 = alt_combination_coefficient(g, case, c0, &unit_index(g, 2, 1))?;
    if a2.is_zero() {
        return Err(Error::VanishingCoefficient(format!(
            "degree-2 coefficient of c2 vanishes for g = {g}, c0 = {c0}"
        )));
    }
    if case == CurveCase::Hyperelliptic && c0 == 2 * g as i64 - 2 {
        let gap = c2_gap(g)?;
        if gap != a2 {
            return Err(Error::IdentityMismatch(format!(
                "c2 coefficient {a2} differs from the closed-form gap {gap}"
            )));
        }
        eqs.push(format!("c2 coefficient equals the closed-form gap {gap}"));
    }
    let c1_class = ThetaClass::monomial(g, 1, c1.clone())?;
    let c1_squared = (&c1_class * &c1_class).coeff(2);
    let c2 = (observed_c2 - &a11 * &c1_squared) / &a2;
    eqs.push(format!(
        "({a11}) * ({c1_squared}) + ({a2}) * c2 = {observed_c2}  =>  c2 = {c2}"
    ));

    let reconstruction = Reconstruction {
        c0,
        c1,
        c2: c2.clone(),
    };
    let (verdict, reason) = if c2.is_zero() {
        (
            VerdictKind::Jacobian,
            "c2 = 0, so Z is a curve and the theta divisor is a sum of curves".to_string(),
        )
    } else {
        (
            VerdictKind::NotConclusive,
            format!("reconstructed c2 = {c2} is nonzero"),
        )
    };
    Ok(CriterionVerdict {
        verdict,
        reconstruction: Some(reconstruction),
        reason,
        equations: eqs,
    })
}

/// Finds `c0 >= g-1` with `C(c0, g-1) [- C(c0, g-3)] = target`.
fn solve_degree0(
    g: usize,
    case: CurveCase,
    target: &BigInt,
    eqs: &mut Vec<String>,
) -> std::result::Result<i64, String> {
    let low = g as i64 - 1;
    let label = match case {
        CurveCase::NonHyperelliptic => format!("C(c0,{low})"),
        CurveCase::Hyperelliptic => format!("C(c0,{low}) - C(c0,{})", low - 2),
    };
    if target.is_negative() {
        return Err(format!(
            "{label} = {target} has no solution (negative degree)"
        ));
    }
    let cap = target
        .to_i64()
        .and_then(|t| t.checked_add(2 * g as i64))
        .ok_or_else(|| format!("observed degree {target} is too large to scan"))?;
    let mut hits = Vec::new();
    for c0 in low..=cap {
        let v = degree0_value(g, case, c0);
        if &v == target {
            hits.push(c0);
        }
        // C(c0, g-1) is increasing from c0 = g-1 on; the hyperelliptic
        // difference is increasing once c0 >= 2g-3.
        let monotone_from = match case {
            CurveCase::NonHyperelliptic => low,
            CurveCase::Hyperelliptic => 2 * g as i64 - 3,
        };
        if c0 >= monotone_from && &v > target {
            break;
        }
    }
    match hits.as_slice() {
        [c0] => {
            eqs.push(format!("{label} = {target}  =>  c0 = {c0}"));
            Ok(*c0)
        }
        [] => Err(format!(
            "{label} = {target} has no integer solution c0 in [{low}, {cap}]"
        )),
        many => Err(format!("{label} = {target} is ambiguous: c0 in {many:?}")),
    }
}

/// True when rescaling the observations by `[n]_*` leaves the verdict tag
/// unchanged for every `n` given.
pub fn verify_scale_invariance(input: &CriterionInput, factors: &[i64]) -> Result<bool> {
    let base = input.check()?.verdict;
    for &n in factors {
        if input.adams_rescaled(n).check()?.verdict != base {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Divisibility obstruction ruling out hyperelliptic-type Chern-Mather data
//! on the two remaining bielliptic Prym candidates in dimension 5.
//!
//! If `[2]_* cc(IC_Θ) = Alt^4(Λ) - Alt^2(Λ)`, then on degree one
//! `4 c_{M,1} = 14 c_{M,1}(Λ)`. Pairing with the theta class gives integers
//! `v` for each candidate, and `4 v` would have to be a multiple of 14.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};
use crate::jacobian::{dim_omega, CurveCase};
use crate::lambda::e_coefficient;
use crate::pontryagin::ThetaClass;
use crate::prym::{euler_characteristic, ChiVerdict, PrymLocus};
use crate::rational::{self, serde_bigint};

const G: usize = 5;

/// True iff `m` divides `a * v`.
pub fn divisibility_obstruction(a: i64, m: i64, v: i64) -> Result<bool> {
    if m == 0 {
        return Err(out_of_range("m", 0, "m != 0"));
    }
    Ok((BigInt::from(a) * v).is_multiple_of(&BigInt::from(m)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub partition: Vec<usize>,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub partition: Vec<usize>,
    pub divisible: bool,
    /// `v mod (m / gcd(a, m))`; zero exactly when divisible.
    pub residue: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionReport {
    #[serde(with = "serde_bigint")]
    pub dim_omega: BigInt,
    pub candidate_loci: Vec<PrymLocus>,
    pub candidate_chi: Vec<ChiVerdict>,
    pub lhs_multiplier: i64,
    pub rhs_multiplier: i64,
    pub pairing_values: Vec<Pairing>,
    pub verdicts: Vec<Verdict>,
    pub excluded: bool,
    pub sources: Vec<String>,
}

impl ExclusionReport {
    /// Exclusion holds iff no verdict is divisible.
    pub fn exclusion_holds(&self) -> bool {
        self.verdicts.iter().all(|v| !v.divisible)
    }
}

/// Candidate loci and their theta pairings; both are taken from the
/// literature on bielliptic Pryms, not recomputed here.
fn candidates() -> Result<Vec<(PrymLocus, i64)>> {
    Ok(vec![
        (PrymLocus::s_cycle(vec![1, 2, 2], 2)?, 44),
        (PrymLocus::s_cycle(vec![2, 3], 10)?, 92),
    ])
}

fn small_int(q: &rational::Rational, what: &str) -> Result<i64> {
    rational::as_integer(q)
        .and_then(|n| i64::try_from(n).ok())
        .ok_or_else(|| {
            Error::IdentityMismatch(format!(
                "{what} = {} is not a machine integer",
                rational::format(q)
            ))
        })
}

fn lhs_multiplier() -> Result<i64> {
    let w1 = ThetaClass::basis(G, 1)?;
    small_int(&w1.adams(2).coeff(1), "lhs multiplier")
}

fn rhs_multiplier() -> Result<i64> {
    let e1 = [1, 0, 0, 0];
    let n = 2 * G as i64 - 2;
    let v = e_coefficient(n, G, G - 1, &e1)? - e_coefficient(n, G, G - 3, &e1)?;
    small_int(&v, "rhs multiplier")
}

pub fn genus5_hyperelliptic_report() -> Result<ExclusionReport> {
    let lhs = lhs_multiplier()?;
    let rhs = rhs_multiplier()?;
    let modulus = rhs / lhs.gcd(&rhs);
    let mut candidate_loci = Vec::new();
    let mut candidate_chi = Vec::new();
    let mut pairing_values = Vec::new();
    let mut verdicts = Vec::new();
    for (locus, value) in candidates()? {
        let PrymLocus::SCycle { partition, .. } = &locus else {
            unreachable!("candidates are S-loci");
        };
        let divisible = divisibility_obstruction(lhs, rhs, value)?;
        let residue = value.mod_floor(&modulus);
        debug_assert_eq!(divisible, residue.is_zero());
        pairing_values.push(Pairing {
            partition: partition.clone(),
            value,
        });
        verdicts.push(Verdict {
            partition: partition.clone(),
            divisible,
            residue,
        });
        candidate_chi.push(euler_characteristic(&locus)?);
        candidate_loci.push(locus);
    }
    let excluded = verdicts.iter().all(|v| !v.divisible);
    Ok(ExclusionReport {
        dim_omega: dim_omega(G, CurveCase::Hyperelliptic)?,
        candidate_loci,
        candidate_chi,
        lhs_multiplier: lhs,
        rhs_multiplier: rhs,
        pairing_values,
        verdicts,
        excluded,
        sources: vec![
            "dim_omega: C(8,4) - C(8,2) from the hyperelliptic Jacobian table".into(),
            "candidate loci: membership taken from the literature on bielliptic Prym theta divisors".into(),
            "pairing values 44 and 92: intersection numbers from the literature, not recomputed".into(),
            "lhs multiplier: Adams operation [2]_* on degree one".into(),
            "rhs multiplier: E^8_4(e_1) - E^8_2(e_1) from the lambda generating series".into(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_examples() {
        assert!(!divisibility_obstruction(4, 14, 44).unwrap());
        assert!(divisibility_obstruction(4, 14, 7).unwrap());
        assert!(!divisibility_obstruction(4, 14, 92).unwrap());
        assert!(divisibility_obstruction(4, -14, -7).unwrap());
        assert!(divisibility_obstruction(4, 14, 0).unwrap());
        assert!(divisibility_obstruction(4, 0, 7).is_err());
    }

    #[test]
    fn report_values() {
        let r = genus5_hyperelliptic_report().unwrap();
        assert_eq!(r.dim_omega, BigInt::from(42));
        assert_eq!(r.lhs_multiplier, 4);
        assert_eq!(r.rhs_multiplier, 14);
        let pairs: Vec<_> = r
            .pairing_values
            .iter()
            .map(|p| (p.partition.clone(), p.value))
            .collect();
        assert_eq!(pairs, vec![(vec![1, 2, 2], 44), (vec![2, 3], 92)]);
        let v: Vec<_> = r
            .verdicts
            .iter()
            .map(|v| (v.divisible, v.residue))
            .collect();
        assert_eq!(v, vec![(false, 2), (false, 1)]);
        assert!(r.excluded);
        assert!(r.exclusion_holds());
        assert!(r
            .candidate_chi
            .iter()
            .all(|c| *c == ChiVerdict::ExternalReference));
    }

    #[test]
    fn report_is_byte_stable() {
        let a = serde_json::to_string(&genus5_hyperelliptic_report().unwrap()).unwrap();
        let b = serde_json::to_string(&genus5_hyperelliptic_report().unwrap()).unwrap();
        assert_eq!(a, b);
        let back: ExclusionReport = serde_json::from_str(&a).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), a);
    }
}

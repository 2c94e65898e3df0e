//! Euler characteristics and Chern-Mather classes across the bielliptic
//! Prym stratification.
//!
//! Loci are `EPrime(g, t, k)` (the strata `E'^k_{g,t}`) and `SCycle(d, k)`
//! (the strata `S^k_d` for a partition `d` of `g`). Here `k` is the number of
//! additional isolated singularities of the Prym theta divisor. The census
//! never fabricates a value it cannot derive: loci whose Euler
//! characteristic only comes from external references report
//! [`ChiVerdict::ExternalReference`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combinatorics::middle_binomial;
use crate::error::{out_of_range, Error, Result};
use crate::pontryagin::{BiThetaClass, ThetaClass};
use crate::rational::{big, serde_bigint};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum PrymLocus {
    EPrime { g: usize, t: usize, k: u64 },
    SCycle { partition: Vec<usize>, k: u64 },
}

impl PrymLocus {
    pub fn e_prime(g: usize, t: usize, k: u64) -> Result<Self> {
        let locus = PrymLocus::EPrime { g, t, k };
        locus.validate()?;
        Ok(locus)
    }

    /// Builds `S^k_d`; the partition is sorted into nondecreasing order.
    pub fn s_cycle(mut partition: Vec<usize>, k: u64) -> Result<Self> {
        partition.sort_unstable();
        let locus = PrymLocus::SCycle { partition, k };
        locus.validate()?;
        Ok(locus)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PrymLocus::EPrime { g, t, .. } => {
                if *g < 4 {
                    return Err(out_of_range("g", *g as i64, "g >= 4"));
                }
                if 2 * t > *g {
                    return Err(out_of_range(
                        "t",
                        *t as i64,
                        format!("0 <= t <= g/2 = {}", g / 2),
                    ));
                }
            }
            PrymLocus::SCycle { partition, .. } => {
                if partition.is_empty() || partition.contains(&0) {
                    return Err(Error::InvalidLocus(format!(
                        "partition {partition:?} must be a nonempty list of positive integers"
                    )));
                }
                if partition.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::InvalidLocus(format!(
                        "partition {partition:?} is not sorted"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn g(&self) -> usize {
        match self {
            PrymLocus::EPrime { g, .. } => *g,
            PrymLocus::SCycle { partition, .. } => partition.iter().sum(),
        }
    }

    pub fn k(&self) -> u64 {
        match self {
            PrymLocus::EPrime { k, .. } | PrymLocus::SCycle { k, .. } => *k,
        }
    }

    /// `t=<t>` or the partition joined with commas.
    pub fn stratum_label(&self) -> String {
        match self {
            PrymLocus::EPrime { t, .. } => format!("t={t}"),
            PrymLocus::SCycle { partition, .. } => partition
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    /// True for `E'_{g,0}`, `S_(g)` and `S_(1,g-1)`: the strata whose Euler
    /// characteristic is `B_{g-1} - 2k` (g even) or `B_{g-1} - k` (g odd).
    fn is_theta_null_like(&self) -> bool {
        match self {
            PrymLocus::EPrime { t, .. } => *t == 0,
            PrymLocus::SCycle { partition, .. } => {
                let g = self.g();
                partition.as_slice() == [g] || (g >= 2 && partition.as_slice() == [1, g - 1])
            }
        }
    }
}

impl fmt::Display for PrymLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrymLocus::EPrime { g, t, k } => write!(f, "E'^{k}_({g},{t})"),
            PrymLocus::SCycle { k, .. } => write!(f, "S^{k}_({})", self.stratum_label()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum ChiVerdict {
    Exact {
        #[serde(with = "serde_bigint")]
        value: BigInt,
    },
    GreaterThan {
        #[serde(with = "serde_bigint")]
        bound: BigInt,
    },
    ExternalReference,
}

impl ChiVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            ChiVerdict::Exact { .. } => "Exact",
            ChiVerdict::GreaterThan { .. } => "GreaterThan",
            ChiVerdict::ExternalReference => "ExternalReference",
        }
    }

    /// The exact value or the bound; `None` for external references.
    pub fn number(&self) -> Option<&BigInt> {
        match self {
            ChiVerdict::Exact { value } => Some(value),
            ChiVerdict::GreaterThan { bound } => Some(bound),
            ChiVerdict::ExternalReference => None,
        }
    }
}

impl fmt::Display for ChiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiVerdict::Exact { value } => write!(f, "= {value}"),
            ChiVerdict::GreaterThan { bound } => write!(f, "> {bound}"),
            ChiVerdict::ExternalReference => write!(f, "external reference"),
        }
    }
}

fn b(k: i64) -> BigInt {
    middle_binomial(k)
}

/// `chi(IC_Ξ)` for a general member of the locus.
pub fn euler_characteristic(locus: &PrymLocus) -> Result<ChiVerdict> {
    locus.validate()?;
    let g = locus.g() as i64;
    let k = BigInt::from(locus.k());
    if locus.is_theta_null_like() {
        let drop = if g % 2 == 0 { k * 2 } else { k };
        return Ok(ChiVerdict::Exact {
            value: b(g - 1) - drop,
        });
    }
    Ok(match locus {
        PrymLocus::EPrime { t, .. } if *t >= 2 => {
            let t = *t as i64;
            let two_pow = BigInt::one() << (g - 1) as usize;
            ChiVerdict::Exact {
                value: b(t - 1) * b(g - t) + b(t) * b(g - t - 1) - two_pow,
            }
        }
        PrymLocus::EPrime { t: 1, .. } if g >= 5 => ChiVerdict::GreaterThan { bound: b(g - 1) },
        _ => ChiVerdict::ExternalReference,
    })
}

/// Whether the locus has the Euler characteristic `B_{g-1}` of a
/// non-hyperelliptic Jacobian: exactly the three theta-null-like strata with `k = 0`.
pub fn matches_jacobian_dimension(locus: &PrymLocus) -> bool {
    locus.is_theta_null_like() && locus.k() == 0
}

/// Caveat attached to census rows where the closed form needs an extra
/// generality assumption.
pub fn census_note(locus: &PrymLocus) -> Option<&'static str> {
    match locus {
        PrymLocus::EPrime { g: 4, t: 2, .. } => {
            Some("g = 4, t = 2: value assumes a general member of the stratum")
        }
        PrymLocus::EPrime { t, .. } if *t >= 2 => {
            Some("general member; specialization only lowers chi")
        }
        _ => None,
    }
}

fn check_prym_degree(g: usize, r: usize) -> Result<()> {
    if g < 4 {
        return Err(out_of_range("g", g as i64, "g >= 4"));
    }
    if r < 1 || r >= g {
        return Err(out_of_range(
            "r",
            r as i64,
            format!("1 <= r <= g-1 = {}", g - 1),
        ));
    }
    Ok(())
}

/// `c_{M,r}(Λ_Ξ) = B_{g-r-1} w_r` on `E'_{g,0}`, for `r >= 1`.
pub fn prym_chern_mather_t0(g: usize, r: usize) -> Result<ThetaClass> {
    check_prym_degree(g, r)?;
    ThetaClass::monomial(g, r, big(b(g as i64 - r as i64 - 1)))
}

/// `c_{M,r}(Λ_Ξ)` on `E'_{g,t}` with `t >= 1`:
/// `sum_{k=0}^{g-r} (B_k B_{g-r-k-1} + B_{k-1} B_{g-r-k}) e_{k, g-r-k}`,
/// with `B_{-1} = 0` at both ends.
pub fn prym_chern_mather_t_pos(g: usize, t: usize, r: usize) -> Result<BiThetaClass> {
    check_prym_degree(g, r)?;
    if t < 1 || 2 * t > g {
        return Err(out_of_range(
            "t",
            t as i64,
            format!("1 <= t <= g/2 = {}", g / 2),
        ));
    }
    let m = (g - r) as i64;
    let mut out = BiThetaClass::zero(g)?;
    for k in 0..=m {
        let coeff = b(k) * b(m - k - 1) + b(k - 1) * b(m - k);
        out.set(k as usize, (m - k) as usize, big(coeff))?;
    }
    Ok(out)
}

/// One line of the census table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub g: usize,
    pub stratum: String,
    pub k: u64,
    pub locus: PrymLocus,
    pub chi: ChiVerdict,
    pub matches_jacobian: bool,
    pub note: Option<String>,
}

impl CensusRow {
    pub fn for_locus(locus: PrymLocus) -> Result<Self> {
        let chi = euler_characteristic(&locus)?;
        Ok(CensusRow {
            g: locus.g(),
            stratum: locus.stratum_label(),
            k: locus.k(),
            matches_jacobian: matches_jacobian_dimension(&locus),
            note: census_note(&locus).map(str::to_string),
            chi,
            locus,
        })
    }
}

/// Grid of loci for one `g`: every `E'_{g,t}` with `t <= g/2`, then
/// `S_(g)` and `S_(1,g-1)`, each for `k = 0..=k_max`, in that order.
pub fn census_loci(g: usize, k_max: u64) -> Result<Vec<PrymLocus>> {
    let mut loci = Vec::new();
    for t in 0..=g / 2 {
        for k in 0..=k_max {
            loci.push(PrymLocus::e_prime(g, t, k)?);
        }
    }
    for partition in [vec![g], vec![1, g - 1]] {
        for k in 0..=k_max {
            loci.push(PrymLocus::s_cycle(partition.clone(), k)?);
        }
    }
    Ok(loci)
}

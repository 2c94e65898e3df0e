//! Universal coefficients `E^n_k(i)` of
//! `E^n(c, x) = (1+x)^n prod_{l=1}^{g-1} exp(x P_{2l-1}(-x)/(1+x)^{2l} c_l)`
//! in formal commuting variables `c_1, ..., c_{g-1}`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::series::adams_kernel_scalars;
use crate::combinatorics::{binomial, factorial};
use crate::error::{out_of_range, Error, Result};
use crate::rational::{self, big, Rational};

/// Polynomial in `c_1..c_m` over Q, reduced modulo the monomial ideal of
/// everything that does not divide `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CappedPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl CappedPoly {
    fn zero() -> Self {
        CappedPoly {
            terms: BTreeMap::new(),
        }
    }

    fn constant(q: Rational, vars: usize) -> Self {
        let mut p = Self::zero();
        if !q.is_zero() {
            p.terms.insert(vec![0; vars], q);
        }
        p
    }

    fn add_term(&mut self, mono: Vec<u32>, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn add_assign(&mut self, other: &CappedPoly) {
        for (m, q) in &other.terms {
            self.add_term(m.clone(), q.clone());
        }
    }

    fn scale(&self, q: &Rational) -> CappedPoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * q);
        }
        out
    }

    fn mul(&self, other: &CappedPoly, cap: &[u32]) -> CappedPoly {
        let mut out = Self::zero();
        for (ma, qa) in &self.terms {
            'next: for (mb, qb) in &other.terms {
                let mut m = Vec::with_capacity(cap.len());
                for ((a, b), c) in ma.iter().zip(mb).zip(cap) {
                    if a + b > *c {
                        continue 'next;
                    }
                    m.push(a + b);
                }
                out.add_term(m, qa * qb);
            }
        }
        out
    }

    fn coeff(&self, mono: &[u32]) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }
}

fn series_mul(a: &[CappedPoly], b: &[CappedPoly], cap: &[u32]) -> Vec<CappedPoly> {
    let order = a.len();
    let mut out = vec![CappedPoly::zero(); order];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(order - i) {
            let p = x.mul(y, cap);
            out[i + j].add_assign(&p);
        }
    }
    out
}

/// `exp(s)` for a series with zero constant term.
fn series_exp(s: &[CappedPoly], cap: &[u32]) -> Vec<CappedPoly> {
    let vars = cap.len();
    let mut out = vec![CappedPoly::constant(rational::int(1), vars)];
    for n in 1..s.len() {
        let mut acc = CappedPoly::zero();
        for k in 1..=n {
            let term = s[k].mul(&out[n - k], cap).scale(&rational::int(k as i64));
            acc.add_assign(&term);
        }
        out.push(acc.scale(&rational::ratio(1, n as i64)));
    }
    out
}

/// `E^n_k(i)`: the coefficient of `c^i x^k` in `E^n(c, x)`.
///
/// `index` has one entry per variable `c_1..c_{g-1}`. The expansion is
/// purely formal; no degree bound from `g` is imposed on the monomials.
pub fn e_coefficient(n: i64, g: usize, k: usize, index: &[u32]) -> Result<Rational> {
    if g == 0 {
        return Err(out_of_range("g", 0, "g >= 1"));
    }
    if index.len() != g - 1 {
        return Err(Error::Malformed(format!(
            "multi-index for g = {g} needs {} entries, got {}",
            g - 1,
            index.len()
        )));
    }
    let vars = index.len();
    let order = k + 1;

    let mut acc: Vec<CappedPoly> = (0..order)
        .map(|j| CappedPoly::constant(big(binomial(n, j as i64)), vars))
        .collect();

    let mut exponent = vec![CappedPoly::zero(); order];
    for (pos, &cap_l) in index.iter().enumerate() {
        if cap_l == 0 {
            continue;
        }
        let mut mono = vec![0; vars];
        mono[pos] = 1;
        for (slot, q) in exponent
            .iter_mut()
            .zip(adams_kernel_scalars(pos + 1, order))
        {
            slot.add_term(mono.clone(), q);
        }
    }
    if exponent.iter().any(|p| !p.terms.is_empty()) {
        acc = series_mul(&acc, &series_exp(&exponent, index), index);
    }
    Ok(acc[k].coeff(index))
}

/// `E^{2g-2}_{g-1}(e_2) - E^{2g-2}_{g-3}(e_2)`, the divisor that forces
/// `c_2 = 0` in the hyperelliptic criterion.
///
/// Returns the closed form `-4(2g-5)(g+3)(2g-6)!/(g!(g-3)!)` after checking
/// that it agrees with the direct extraction.
pub fn c2_gap(g: usize) -> Result<Rational> {
    if g < 4 {
        return Err(out_of_range("g", g as i64, "g >= 4"));
    }
    let closed = c2_gap_closed_form(g);
    let direct = c2_gap_direct(g)?;
    if direct != closed {
        return Err(Error::IdentityMismatch(format!(
            "c2 gap at g = {g}: direct {direct} vs closed form {closed}"
        )));
    }
    Ok(closed)
}

pub(crate) fn c2_gap_closed_form(g: usize) -> Rational {
    let gi = g as i64;
    let num = big(factorial((2 * g - 6) as u64)) * rational::int(-4 * (2 * gi - 5) * (gi + 3));
    let den = big(factorial(g as u64) * factorial((g - 3) as u64));
    num / den
}

pub(crate) fn c2_gap_direct(g: usize) -> Result<Rational> {
    let mut e2 = vec![0; g - 1];
    e2[1] = 1;
    let n = 2 * g as i64 - 2;
    Ok(e_coefficient(n, g, g - 1, &e2)? - e_coefficient(n, g, g - 3, &e2)?)
}

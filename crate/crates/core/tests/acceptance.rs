//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any failure.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta_lambda::{
    alt_class, alt_via_newton, binomial, c2_gap, census_loci, criterion_check, dim_omega,
    e_coefficient, e_lambda, euler_characteristic, eulerian_defining_check, eulerian_polynomial,
    factorial, genus5_hyperelliptic_report, jacobian_reference_classes, matches_jacobian_dimension,
    prym_chern_mather_t0, ChiVerdict, CurveCase, LagrangianChernData, PrymLocus, ThetaClass,
    VerdictKind,
};

type Outcome = Result<(), String>;
type Check = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn eulerian_identities() -> Outcome {
    for n in 0..=15usize {
        ensure!(
            eulerian_defining_check(n, 40),
            "defining identity fails for n = {n}"
        );
        let p = eulerian_polynomial(n);
        ensure!(
            p.eval(&BigInt::from(1)) == factorial(n as u64),
            "P_{n}(1) != {n}!"
        );
        ensure!(
            p.coeffs() == eulerian_explicit(n as u32).as_slice(),
            "P_{n} disagrees with the alternating sum"
        );
    }
    Ok(())
}

fn jacobian_tables() -> Outcome {
    for g in 4..=12usize {
        let gi = g as i64;
        let data =
            LagrangianChernData::curve_like(g, 2 * gi - 2, q(1)).map_err(|e| e.to_string())?;
        let series = e_lambda(&data, g).map_err(|e| e.to_string())?;

        // w_g carries no term in either table
        let nonhyp: Vec<Q> = (0..=gi).map(|k| qb(middle(gi - 1 - k))).collect();
        let nonhyp = ThetaClass::from_coeffs(g, nonhyp).map_err(|e| e.to_string())?;
        ensure!(
            series.coeff(g - 1) == nonhyp,
            "g = {g}: non-hyperelliptic table mismatch"
        );

        let hyp: Vec<Q> = (0..=gi)
            .map(|k| {
                let m = gi - 1 - k;
                qb(binomial(2 * m, m) - binomial(2 * m, m - 2))
            })
            .collect();
        let hyp = ThetaClass::from_coeffs(g, hyp).map_err(|e| e.to_string())?;
        let combo = series
            .coeff(g - 1)
            .checked_sub(&series.coeff(g - 3))
            .map_err(|e| e.to_string())?;
        ensure!(combo == hyp, "g = {g}: hyperelliptic table mismatch");

        for case in CurveCase::ALL {
            let table = jacobian_reference_classes(g, case).map_err(|e| e.to_string())?;
            let target = if case == CurveCase::Hyperelliptic {
                &hyp
            } else {
                &nonhyp
            };
            for (r, class) in table.iter().enumerate() {
                ensure!(
                    class.coeff(r) == target.coeff(r),
                    "g = {g}, {case}: reference entry {r} mismatch"
                );
            }
        }
    }
    Ok(())
}

fn low_degree_coefficients() -> Outcome {
    let b = |n: i64, k: i64| qb(binomial(n, k));
    for n in 2..=20i64 {
        for k in 0..=n {
            let ku = k as usize;
            let cases = [
                ([0, 0, 0], b(n, k)),
                ([1, 0, 0], b(n - 2, k - 1)),
                (
                    [0, 1, 0],
                    b(n - 4, k - 1) - b(n - 4, k - 2) * q(4) + b(n - 4, k - 3),
                ),
                ([2, 0, 0], b(n - 4, k - 2) / q(2)),
            ];
            for (idx, expected) in cases {
                let got = e_coefficient(n, 4, ku, &idx).map_err(|e| e.to_string())?;
                ensure!(
                    got == expected,
                    "E^{n}_{k}({idx:?}) = {got}, expected {expected}"
                );
            }
        }
    }
    Ok(())
}

fn c2_gap_identity() -> Outcome {
    for g in 4..=12usize {
        let gi = g as i64;
        let mut e2 = vec![0; g - 1];
        e2[1] = 1;
        let n = 2 * gi - 2;
        let direct = e_coefficient(n, g, g - 1, &e2).map_err(|e| e.to_string())?
            - e_coefficient(n, g, g - 3, &e2).map_err(|e| e.to_string())?;
        let closed = qb(BigInt::from(-4 * (2 * gi - 5) * (gi + 3)) * factorial(2 * g as u64 - 6))
            / qb(factorial(g as u64) * factorial(g as u64 - 3));
        ensure!(
            direct == closed,
            "g = {g}: direct {direct} vs closed form {closed}"
        );
        ensure!(
            c2_gap(g).map_err(|e| e.to_string())? == closed,
            "g = {g}: c2_gap disagrees"
        );
    }
    ensure!(
        c2_gap(5).map_err(|e| e.to_string())? == q(-16),
        "g = 5 value is not -16"
    );
    Ok(())
}

fn newton_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let g = rng.random_range(1..=10usize);
        let c0 = rng.random_range(-3..=2 * g as i64 + 2);
        let higher: Vec<Q> = (1..g)
            .map(|_| {
                Q::new(
                    rng.random_range(-5i64..=5).into(),
                    rng.random_range(1i64..=4).into(),
                )
            })
            .collect();
        let k = rng.random_range(0..=g + 1);
        let data = LagrangianChernData::new(g, c0, higher).map_err(|e| e.to_string())?;
        let direct = alt_class(&data, k).map_err(|e| e.to_string())?;
        let newton = alt_via_newton(&data, k).map_err(|e| e.to_string())?;
        ensure!(
            direct == newton,
            "trial {trial}: g = {g}, c0 = {c0}, k = {k}: {direct} vs {newton}"
        );
    }
    Ok(())
}

fn criterion_round_trip() -> Outcome {
    for g in 4..=12usize {
        for case in CurveCase::ALL {
            let table = jacobian_reference_classes(g, case).map_err(|e| e.to_string())?;
            let (c0, c1, c2) = (table[0].coeff(0), table[1].coeff(1), table[2].coeff(2));
            let v = criterion_check(g, case, &c0, &c1, &c2, 3).map_err(|e| e.to_string())?;
            ensure!(
                v.verdict == VerdictKind::Jacobian,
                "g = {g}, {case}: verdict {}",
                v.verdict
            );
            let r = v
                .reconstruction
                .ok_or(format!("g = {g}, {case}: no reconstruction"))?;
            ensure!(
                r.c0 == 2 * g as i64 - 2 && r.c1 == q(1) && r.c2.is_zero(),
                "g = {g}, {case}: reconstruction ({}, {}, {})",
                r.c0,
                r.c1,
                r.c2
            );

            let bumped = &c2 + q(1);
            let v = criterion_check(g, case, &c0, &c1, &bumped, 3).map_err(|e| e.to_string())?;
            ensure!(
                v.verdict == VerdictKind::NotConclusive,
                "g = {g}, {case}: perturbed verdict {}",
                v.verdict
            );

            let v = criterion_check(g, case, &c0, &c1, &c2, 2).map_err(|e| e.to_string())?;
            ensure!(
                v.verdict == VerdictKind::Inapplicable,
                "g = {g}, {case}: codim 2 verdict {}",
                v.verdict
            );
        }
    }
    Ok(())
}

fn prym_census() -> Outcome {
    for g in 4..=12usize {
        let b_top = middle(g as i64 - 1);
        for locus in census_loci(g, 3).map_err(|e| e.to_string())? {
            let expected = match &locus {
                PrymLocus::EPrime { t, k, .. } => *t == 0 && *k == 0,
                PrymLocus::SCycle { partition, k } => {
                    *k == 0 && (partition.as_slice() == [g] || partition.as_slice() == [1, g - 1])
                }
            };
            ensure!(
                matches_jacobian_dimension(&locus) == expected,
                "{locus}: wrong classification"
            );
            let chi = euler_characteristic(&locus).map_err(|e| e.to_string())?;
            let equals_top = matches!(&chi, ChiVerdict::Exact { value } if *value == b_top);
            ensure!(
                equals_top == expected,
                "{locus}: chi {chi} inconsistent with classification"
            );
            if let (PrymLocus::EPrime { t, .. }, ChiVerdict::Exact { value }) = (&locus, &chi) {
                if *t >= 2 {
                    ensure!(*value < b_top, "{locus}: chi {value} not below B_{}", g - 1);
                }
            }
        }
    }
    Ok(())
}

fn prym_reduction() -> Outcome {
    for g in 4..=12usize {
        let table = jacobian_reference_classes(g, CurveCase::NonHyperelliptic)
            .map_err(|e| e.to_string())?;
        for (r, entry) in table.iter().enumerate().skip(1) {
            let c = prym_chern_mather_t0(g, r).map_err(|e| e.to_string())?;
            ensure!(c == *entry, "g = {g}, r = {r}: Prym class {c} vs {entry}");
        }
        let locus = PrymLocus::e_prime(g, 0, 0).map_err(|e| e.to_string())?;
        let ChiVerdict::Exact { value } =
            euler_characteristic(&locus).map_err(|e| e.to_string())?
        else {
            return Err(format!("g = {g}: E'_(g,0) has no exact chi"));
        };
        let c1 = prym_chern_mather_t0(g, 1)
            .map_err(|e| e.to_string())?
            .coeff(1);
        let c2 = prym_chern_mather_t0(g, 2)
            .map_err(|e| e.to_string())?
            .coeff(2);
        let v = criterion_check(g, CurveCase::NonHyperelliptic, &qb(value), &c1, &c2, 3)
            .map_err(|e| e.to_string())?;
        ensure!(
            v.verdict == VerdictKind::Jacobian,
            "g = {g}: verdict {}",
            v.verdict
        );
    }
    Ok(())
}

fn genus5_report() -> Outcome {
    let r = genus5_hyperelliptic_report().map_err(|e| e.to_string())?;
    ensure!(
        r.dim_omega == BigInt::from(42),
        "dim_omega = {}",
        r.dim_omega
    );
    ensure!(
        r.dim_omega == dim_omega(5, CurveCase::Hyperelliptic).map_err(|e| e.to_string())?,
        "dim_omega disagrees"
    );
    let e1 = [1, 0, 0, 0];
    let rhs = e_coefficient(8, 5, 4, &e1).map_err(|e| e.to_string())?
        - e_coefficient(8, 5, 2, &e1).map_err(|e| e.to_string())?;
    ensure!(
        rhs == q(14) && r.rhs_multiplier == 14,
        "rhs multiplier {} / {rhs}",
        r.rhs_multiplier
    );
    ensure!(r.lhs_multiplier == 4, "lhs multiplier {}", r.lhs_multiplier);
    let got: Vec<_> = r
        .pairing_values
        .iter()
        .zip(&r.verdicts)
        .map(|(p, v)| (p.value, v.divisible, v.residue))
        .collect();
    ensure!(
        got == vec![(44, false, 2), (92, false, 1)],
        "verdicts {got:?}"
    );
    ensure!(r.excluded, "report does not exclude");
    Ok(())
}

fn random_class(rng: &mut ChaCha8Rng, g: usize) -> ThetaClass {
    let coeffs = (0..=g)
        .map(|_| {
            Q::new(
                rng.random_range(-9i64..=9).into(),
                rng.random_range(1i64..=5).into(),
            )
        })
        .collect();
    ThetaClass::from_coeffs(g, coeffs).unwrap()
}

fn ring_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11);
    for trial in 0..150 {
        let g = rng.random_range(1..=12usize);
        let (u, v, w) = (
            random_class(&mut rng, g),
            random_class(&mut rng, g),
            random_class(&mut rng, g),
        );
        let mul = |a: &ThetaClass, b: &ThetaClass| a.pontryagin_mul(b).unwrap();
        ensure!(mul(&u, &v) == mul(&v, &u), "trial {trial}: not commutative");
        ensure!(
            mul(&mul(&u, &v), &w) == mul(&u, &mul(&v, &w)),
            "trial {trial}: not associative"
        );
        let one = ThetaClass::one(g).unwrap();
        ensure!(mul(&one, &u) == u, "trial {trial}: unit fails");

        let (m, n) = (rng.random_range(-4i64..=4), rng.random_range(-4i64..=4));
        ensure!(
            u.adams(m).adams(n) == u.adams(m * n),
            "trial {trial}: Adams composition fails"
        );
        ensure!(
            mul(&u, &v).adams(n) == mul(&u.adams(n), &v.adams(n)),
            "trial {trial}: Adams not multiplicative"
        );
        ensure!(
            u.checked_add(&v).unwrap().adams(n) == u.adams(n).checked_add(&v.adams(n)).unwrap(),
            "trial {trial}: Adams not additive"
        );
        ensure!(one.adams(n) == one, "trial {trial}: Adams moves the unit");
    }
    for g in 1..=12usize {
        let w1 = ThetaClass::basis(g, 1).unwrap();
        for k in 0..=g {
            let expected = ThetaClass::basis(g, k)
                .unwrap()
                .scale(&qb(factorial(k as u64)));
            ensure!(
                w1.pontryagin_pow(k as u32) == expected,
                "g = {g}: w_1^{k} != {k}! w_{k}"
            );
        }
        ensure!(
            w1.pontryagin_pow(g as u32 + 1).is_zero(),
            "g = {g}: w_1^(g+1) != 0"
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Check; 10] = [
        ("Eulerian identities, 0 <= n <= 15", eulerian_identities),
        (
            "Jacobian tables from E_Lambda, 4 <= g <= 12",
            jacobian_tables,
        ),
        (
            "closed forms for E^n_k on 0, e_1, e_2, 2e_1",
            low_degree_coefficients,
        ),
        ("c2 gap closed form, 4 <= g <= 12", c2_gap_identity),
        ("Newton route agrees on 200 random inputs", newton_oracle),
        (
            "criterion round trip, perturbation, codim 2",
            criterion_round_trip,
        ),
        ("Prym census classification and bound", prym_census),
        (
            "Prym t = 0 classes reduce to the Jacobian case",
            prym_reduction,
        ),
        ("genus-5 exclusion report", genus5_report),
        ("Pontryagin ring and Adams laws", ring_axioms),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

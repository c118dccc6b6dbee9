//! The end-to-end checks that gate a release. Each criterion exercises one
//! agreement between independent computation paths: closed forms against
//! brute-force searches, series identities at fixed truncation orders,
//! coefficient extraction against fixed-point solving, tree enumeration
//! against the count predictions, and deliberate count corruption against
//! the identity suite's ability to notice.
//!
//! Every check is exact. A criterion never panics outward; violations,
//! including panics from the structural validators, come back as a failed
//! report with the message in `detail`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use crate::closed_form::{balanced_tree_prediction, g_alpha, h_alpha};
use crate::identity::{verify, verify_from_counts, IdentityId};
use crate::lagrange::{lagrange_coeff, solve_fixed_point, Kernel};
use crate::oracle::{
    count_arbitrary_factorizations, count_transposition_factorizations, OracleBudget,
};
use crate::partition::{partitions_of, Partition};
use crate::poly::Monomial;
use crate::series::{Series, Var};
use crate::trees::{
    count_balanced, count_pseudo, enumerate_planted, validate_planted, Orientation, TreeBudget,
};

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub number: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

fn run(
    number: u32,
    name: &'static str,
    body: impl FnOnce() -> Result<String, String>,
) -> CriterionReport {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic with non-string payload".into());
        Err(format!("panicked: {msg}"))
    });
    let elapsed_ms = start.elapsed().as_millis();
    match outcome {
        Ok(detail) => CriterionReport {
            number,
            name,
            pass: true,
            detail,
            elapsed_ms,
        },
        Err(detail) => CriterionReport {
            number,
            name,
            pass: false,
            detail,
            elapsed_ms,
        },
    }
}

/// Criterion 1: the transposition closed form counts exactly what the
/// exhaustive search counts, for every class of S_n with n up to 5.
pub fn transposition_search_matches_closed_form() -> CriterionReport {
    run(1, "transposition search vs closed form", || {
        let budget = OracleBudget::default();
        let mut checked = 0u32;
        for n in 1..=5 {
            for alpha in partitions_of(n) {
                let searched = count_transposition_factorizations(&alpha, &budget)
                    .map_err(|e| e.to_string())?;
                let predicted = h_alpha(&alpha).value;
                if searched != predicted {
                    return Err(format!(
                        "alpha = {alpha}, search found {searched}, closed form says {predicted}"
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} classes agree"))
    })
}

/// Criterion 2: the m-factor closed form counts exactly what the exhaustive
/// search counts, for n up to 4 at m = 2 and n up to 3 at m = 3.
pub fn arbitrary_search_matches_closed_form() -> CriterionReport {
    run(2, "arbitrary-factor search vs closed form", || {
        let budget = OracleBudget::default();
        let mut checked = 0u32;
        for (n_max, m) in [(4u32, 2u32), (3, 3)] {
            for n in 1..=n_max {
                for alpha in partitions_of(n) {
                    let searched = count_arbitrary_factorizations(&alpha, m, &budget)
                        .map_err(|e| e.to_string())?;
                    let predicted = g_alpha(&alpha, m).map_err(|e| e.to_string())?.value;
                    if searched != predicted {
                        return Err(format!(
                            "alpha = {alpha}, m = {m}: search found {searched}, \
                             closed form says {predicted}"
                        ));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} class/m pairs agree"))
    })
}

/// Criterion 3: every identity involving the m-factor series holds
/// coefficientwise through order 6 for m in {2, 3, 4}.
pub fn g_family_identities_hold() -> CriterionReport {
    run(3, "m-factor series identities at order 6", || {
        let mut checked = 0u32;
        for m in [2u32, 3, 4] {
            for id in IdentityId::g_family() {
                let report = verify(id, Some(m), 6).map_err(|e| e.to_string())?;
                if !report.pass {
                    return Err(format!(
                        "{id} fails at m = {m}: {}",
                        report
                            .first_discrepancy
                            .map(|d| d.to_string())
                            .unwrap_or_default()
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} identity/m pairs hold"))
    })
}

/// Criterion 4: every identity involving the transposition series holds
/// coefficientwise through order 8.
pub fn h_family_identities_hold() -> CriterionReport {
    run(4, "transposition series identities at order 8", || {
        let mut checked = 0u32;
        for id in IdentityId::h_family() {
            let report = verify(id, None, 8).map_err(|e| e.to_string())?;
            if !report.pass {
                return Err(format!(
                    "{id} fails: {}",
                    report
                        .first_discrepancy
                        .map(|d| d.to_string())
                        .unwrap_or_default()
                ));
            }
            checked += 1;
        }
        Ok(format!("{checked} identities hold"))
    })
}

/// Criterion 5: the coefficient-extraction formula and the fixed-point
/// solver agree on the implicit series, through degree 8 for the
/// exponential kernel and degree 6 for the power kernels at m in {2, 3, 4}.
pub fn lagrange_extraction_matches_fixed_point() -> CriterionReport {
    run(5, "coefficient extraction vs fixed point", || {
        let mut checked = 0u32;
        let jobs = [
            (Kernel::Exp, 8usize),
            (Kernel::power(2), 6),
            (Kernel::power(3), 6),
            (Kernel::power(4), 6),
        ];
        for (kernel, order) in jobs {
            let solved = solve_fixed_point(&kernel, order);
            for n in 1..=order {
                let extracted = lagrange_coeff(&kernel, &Series::one(Var::Lambda, n - 1), n)
                    .map_err(|e| e.to_string())?;
                if solved.coeff(n).map_err(|e| e.to_string())? != &extracted {
                    return Err(format!("kernel {kernel:?} diverges at degree {n}"));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} coefficients agree"))
    })
}

/// Criterion 6: balanced tree counts match |C_alpha| G_alpha(m) / (n-1)!
/// under one fixed orientation, and every enumerated tree passes the full
/// structural validation, for n up to 4 at m = 2 and n up to 3 at m = 3.
pub fn balanced_tree_counts_match_prediction() -> CriterionReport {
    run(6, "balanced tree counts vs prediction", || {
        let orientation = Orientation::default();
        let budget = TreeBudget::default();
        let mut trees_validated = 0usize;
        let mut classes = 0u32;
        for (n_max, m) in [(4u32, 2u32), (3, 3)] {
            for n in 1..=n_max {
                for alpha in partitions_of(n) {
                    for tree in enumerate_planted(&alpha, m, &budget).map_err(|e| e.to_string())? {
                        validate_planted(&tree, &alpha, m);
                        trees_validated += 1;
                    }
                    let counted =
                        count_balanced(&alpha, m, orientation, &budget).map_err(|e| e.to_string())?;
                    let predicted =
                        balanced_tree_prediction(&alpha, m).map_err(|e| e.to_string())?.value;
                    if counted != predicted {
                        return Err(format!(
                            "alpha = {alpha}, m = {m}: counted {counted}, predicted {predicted}"
                        ));
                    }
                    classes += 1;
                }
            }
        }
        Ok(format!(
            "{classes} classes agree, {trees_validated} trees validated"
        ))
    })
}

/// Criterion 7: pseudo tree counts are exactly the coefficients of the
/// branch series evaluated at the list series, for n up to 4 at m = 2.
pub fn pseudo_tree_counts_match_branch_series() -> CriterionReport {
    run(7, "pseudo tree counts vs composed branch series", || {
        let m = 2u32;
        let order = 4usize;
        let budget = TreeBudget::default();
        let aw = crate::genseries::aw_series(m, order);
        let mut checked = 0u32;
        for n in 1..=order {
            let coeff = aw.coeff(n).map_err(|e| e.to_string())?;
            let classes = partitions_of(n as u32);
            if coeff.num_terms() != classes.len() {
                return Err(format!(
                    "degree {n} has {} terms but {} classes",
                    coeff.num_terms(),
                    classes.len()
                ));
            }
            for alpha in classes {
                let l = alpha.len();
                let x_exp = (m - 1) * alpha.n() - l + 1;
                let monomial = Monomial::from_partition(&alpha, l, x_exp);
                let from_series = coeff.coeff(&monomial);
                let counted = count_pseudo(&alpha, m, &budget).map_err(|e| e.to_string())?;
                if num_rational::BigRational::from(counted.clone()) != from_series {
                    return Err(format!(
                        "alpha = {alpha}: counted {counted}, series says {from_series}"
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} coefficients agree"))
    })
}

/// Criterion 8: all three closed forms produce positive integers for every
/// class of S_n with n up to 12 and m in {2, 3, 4, 5}. The division by
/// factorials in each formula is checked exactly, not rounded.
pub fn closed_forms_are_integral() -> CriterionReport {
    run(8, "closed forms integral through n = 12", || {
        let mut checked = 0u32;
        for n in 1..=12 {
            for alpha in partitions_of(n) {
                if h_alpha(&alpha).value < BigInt::one() {
                    return Err(format!("transposition count not positive at {alpha}"));
                }
                for m in [2u32, 3, 4, 5] {
                    let g = g_alpha(&alpha, m).map_err(|e| e.to_string())?.value;
                    let b = balanced_tree_prediction(&alpha, m)
                        .map_err(|e| e.to_string())?
                        .value;
                    if g < BigInt::one() || b < BigInt::one() {
                        return Err(format!("count not positive at {alpha}, m = {m}"));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} evaluations integral and positive"))
    })
}

/// Criterion 9: adding 1 to any single count G_alpha(m) with n up to 4 makes
/// at least one of the three quadratic/linear m-factor identities fail with
/// its first discrepancy exactly at z-degree n.
pub fn count_perturbations_are_detected() -> CriterionReport {
    run(9, "single-count perturbations are detected", || {
        let m = 2u32;
        let order = 4usize;
        let watchers = [IdentityId::RecG, IdentityId::Main1, IdentityId::Main2];
        let mut detected = 0u32;
        for n in 1..=order {
            for target in partitions_of(n as u32) {
                let counts = |alpha: &Partition| {
                    let mut v = g_alpha(alpha, m).expect("m >= 2").value;
                    if *alpha == target {
                        v += BigInt::one();
                    }
                    v
                };
                let caught = watchers.iter().any(|&id| {
                    match verify_from_counts(id, Some(m), order, &counts) {
                        Ok(report) => {
                            !report.pass
                                && report
                                    .first_discrepancy
                                    .as_ref()
                                    .is_some_and(|d| d.degree == n)
                        }
                        Err(_) => false,
                    }
                });
                if !caught {
                    return Err(format!(
                        "perturbing {target} went unnoticed at degree {n}"
                    ));
                }
                detected += 1;
            }
        }
        Ok(format!("{detected} perturbations detected at their degree"))
    })
}

/// Every criterion in order.
pub fn run_all() -> Vec<CriterionReport> {
    vec![
        transposition_search_matches_closed_form(),
        arbitrary_search_matches_closed_form(),
        g_family_identities_hold(),
        h_family_identities_hold(),
        lagrange_extraction_matches_fixed_point(),
        balanced_tree_counts_match_prediction(),
        pseudo_tree_counts_match_branch_series(),
        closed_forms_are_integral(),
        count_perturbations_are_detected(),
    ]
}

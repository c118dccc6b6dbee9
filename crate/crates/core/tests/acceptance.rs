//! Release gate: every agreement the library promises, checked end to end.
//! One test per criterion; each prints a single pass/fail line.

use minfact_core::acceptance::{self, CriterionReport};

fn check(report: CriterionReport) {
    println!(
        "criterion {} ({}): {} in {} ms; {}",
        report.number,
        report.name,
        if report.pass { "pass" } else { "FAIL" },
        report.elapsed_ms,
        report.detail
    );
    assert!(report.pass, "criterion {} failed: {}", report.number, report.detail);
}

#[test]
fn criterion_1_transposition_search_matches_closed_form() {
    check(acceptance::transposition_search_matches_closed_form());
}

#[test]
fn criterion_2_arbitrary_search_matches_closed_form() {
    check(acceptance::arbitrary_search_matches_closed_form());
}

#[test]
fn criterion_3_g_family_identities_hold() {
    check(acceptance::g_family_identities_hold());
}

#[test]
fn criterion_4_h_family_identities_hold() {
    check(acceptance::h_family_identities_hold());
}

#[test]
fn criterion_5_lagrange_extraction_matches_fixed_point() {
    check(acceptance::lagrange_extraction_matches_fixed_point());
}

#[test]
fn criterion_6_balanced_tree_counts_match_prediction() {
    check(acceptance::balanced_tree_counts_match_prediction());
}

#[test]
fn criterion_7_pseudo_tree_counts_match_branch_series() {
    check(acceptance::pseudo_tree_counts_match_branch_series());
}

#[test]
fn criterion_8_closed_forms_are_integral() {
    check(acceptance::closed_forms_are_integral());
}

#[test]
fn criterion_9_count_perturbations_are_detected() {
    check(acceptance::count_perturbations_are_detected());
}

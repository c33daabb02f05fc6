//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! report lines; `speccat selfcheck` prints the same suite.

use speccat::acceptance::*;

fn check(report: CriterionReport) {
    println!("{report}");
    assert!(report.pass, "{report}");
}

#[test]
fn criterion_1_catalog_certification_exact() {
    check(criterion_1_catalog_certification());
}

#[test]
fn criterion_2_section4_polynomial_identities() {
    check(criterion_2_section4_identities());
}

#[test]
fn criterion_3_cospectral_pairs_certified() {
    check(criterion_3_cospectral_witnesses());
}

#[test]
fn criterion_4_catalog_spectra_pairwise_distinct() {
    check(criterion_4_catalog_spectra_distinct());
}

#[test]
fn criterion_5_completeness_survey_through_n9() {
    check(criterion_5_completeness_survey(1));
}

#[test]
fn criterion_6_certificates_clean_on_sweep() {
    check(criterion_6_certificate_soundness());
}

#[test]
fn criterion_7_numeric_matches_exact() {
    check(criterion_7_numeric_exact_agreement());
}

#[test]
fn criterion_8_enumeration_counts_validated() {
    check(criterion_8_enumeration_validation());
}

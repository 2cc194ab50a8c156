//! Intertwiner identity suites: full runs at two modular configurations,
//! realization of the equal-residue correction branches, sensitivity to a
//! deliberately corrupted intertwiner, and the single-strand degenerate
//! case.

mod common;

use common::algebra;
use ybt_algcore::CheckStatus;
use ybt_yokonuma::{intertwiner_suite, intertwiner_suite_with};

#[test]
fn intertwiner_suite_passes_at_the_three_strand_configuration() {
    let y = algebra(3, 3, 7, 2, 2);
    let report = intertwiner_suite(&y).unwrap();
    let (passed, _, skipped) = report.counts();
    assert!(report.passed(), "failing checks: {:?}", report.failing_ids());
    assert!(passed > 0);
    assert_eq!(skipped, 0);

    // At quantum characteristic 3 no realized label carries equal residues
    // together with equal framings on adjacent strands, so every correction
    // branch is empty here. The configuration below exists to cover them.
    let zoo = y.content_zoo().unwrap();
    assert!(zoo.realized().iter().all(|(i, j, _)| {
        (i[0] != i[1] || j[0] != j[1]) && (i[1] != i[2] || j[1] != j[2])
    }));
}

#[test]
fn intertwiner_suite_covers_equal_residue_branches() {
    // q = -1 in F_7 has quantum characteristic 2, which makes adjacent
    // equal residues and the braid defect pattern both occur.
    let y = algebra(3, 3, 7, 6, 2);
    assert_eq!(y.cfg().quantum_char(), 2);

    let zoo = y.content_zoo().unwrap();
    assert!(
        zoo.realized()
            .iter()
            .any(|(i, j, _)| (i[0] == i[1] && j[0] == j[1])
                || (i[1] == i[2] && j[1] == j[2])),
        "an adjacent equal-residue pair should be realized"
    );
    assert!(
        zoo.realized()
            .iter()
            .any(|(i, j, _)| j[0] == j[1] && j[1] == j[2] && i[0] == i[2] && i[0] != i[1]),
        "the braid defect pattern should be realized"
    );

    let report = intertwiner_suite(&y).unwrap();
    assert!(report.passed(), "failing checks: {:?}", report.failing_ids());
}

#[test]
fn corrupted_intertwiner_is_detected_with_witnesses() {
    let y = algebra(3, 3, 7, 2, 2);
    let mut phis = y.intertwiners().unwrap();
    phis[0] = phis[0].add(&y.t(1)).unwrap();

    let report = intertwiner_suite_with(&y, &phis).unwrap();
    assert!(!report.passed(), "the corruption must be detected");

    let failing = report.failing_ids();
    assert!(
        failing.iter().all(|id| id.contains("a=1")),
        "only first-pair checks may fail: {failing:?}"
    );
    assert!(failing.iter().any(|id| id.starts_with("phi-routes@a=1")));
    assert!(failing.iter().any(|id| id.starts_with("intertwine-one@a=1")));

    for c in &report.checks {
        if c.status == CheckStatus::Fail {
            assert!(
                c.witness.as_deref().is_some_and(|w| !w.is_empty()),
                "{} failed without a witness",
                c.id
            );
        }
        if c.id.contains("a=2") {
            assert_eq!(c.status, CheckStatus::Pass, "{} should still pass", c.id);
        }
    }
}

#[test]
fn single_strand_suite_skips_as_inapplicable() {
    let y = algebra(1, 2, 5, 2, 4);
    let report = intertwiner_suite(&y).unwrap();
    assert_eq!(report.counts(), (0, 0, 1));
    assert_eq!(report.checks[0].id, "applicable");
}

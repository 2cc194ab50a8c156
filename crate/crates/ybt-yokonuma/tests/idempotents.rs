//! Runs the core verification suite at two modular configurations and one
//! generic one, and pins the spectral census of the content idempotents
//! against the standard multitableau enumeration.

mod common;

use common::algebra;
use std::collections::BTreeSet;
use ybt_algcore::CheckStatus;
use ybt_combinat::{
    enumerate_multipartitions, enumerate_std, equivalence_classes, tableau_residue_data,
    ClassKind,
};
use ybt_scalar::{qhat, FieldCtx, PrimeFieldCtx};
use ybt_yokonuma::{core_suite, YAlgebra, YConfig};

#[test]
fn core_suite_passes_at_the_three_strand_configuration() {
    let y = algebra(3, 3, 7, 2, 2);
    assert_eq!(y.cfg().quantum_char(), 3);
    let report = core_suite(&y).unwrap();
    let (passed, _, skipped) = report.counts();
    assert!(report.passed(), "failing checks: {:?}", report.failing_ids());
    assert!(passed > 0);
    assert_eq!(skipped, 0, "nothing should skip at a finite-order q");
}

#[test]
fn core_suite_passes_when_quantum_characteristic_equals_strand_count() {
    let y = algebra(3, 3, 13, 3, 3);
    assert_eq!(y.cfg().quantum_char(), 3);
    let report = core_suite(&y).unwrap();
    let (_, _, skipped) = report.counts();
    assert!(report.passed(), "failing checks: {:?}", report.failing_ids());
    assert_eq!(skipped, 0);
}

#[test]
fn spectral_census_matches_the_tableau_oracle() {
    let y = algebra(3, 3, 7, 2, 2);
    let e = y.cfg().quantum_char();
    let d = y.cfg().d();
    let zoo = y.content_zoo().unwrap();

    // The enumerator satisfies the dimension identity before it gets to
    // vote on the census.
    let shapes = enumerate_multipartitions(3, 3);
    let total: usize = shapes.iter().map(|s| enumerate_std(s).len()).sum();
    let square_sum: usize = shapes.iter().map(|s| enumerate_std(s).len().pow(2)).sum();
    assert_eq!(total, 54);
    assert_eq!(square_sum, y.dim());

    let mut predicted: BTreeSet<(Vec<u64>, Vec<u64>)> = BTreeSet::new();
    let mut predicted_i: BTreeSet<Vec<u64>> = BTreeSet::new();
    for shape in &shapes {
        for t in enumerate_std(shape) {
            let (i, _, _) = tableau_residue_data(&t, e);
            let j: Vec<u64> = t.xi_exponents().iter().map(|&c| c as u64 % d).collect();
            predicted_i.insert(i.clone());
            predicted.insert((i, j));
        }
    }

    let realized: BTreeSet<(Vec<u64>, Vec<u64>)> = zoo
        .realized()
        .iter()
        .map(|(i, j, _)| (i.clone(), j.clone()))
        .collect();
    let realized_i: BTreeSet<Vec<u64>> =
        zoo.realized_i().iter().map(|(i, _)| i.clone()).collect();

    assert_eq!(realized, predicted);
    assert_eq!(realized_i, predicted_i);
    assert_eq!(realized.len(), 48);
    assert_eq!(realized_i.len(), 7);

    // Class counts from the oracle's own grouping.
    let classes = equivalence_classes(ClassKind::Content, 3, 3, e).unwrap();
    assert_eq!(classes.len(), 48);
    assert_eq!(classes.iter().map(|c| c.members.len()).sum::<usize>(), 54);

    let frozen_i: BTreeSet<Vec<u64>> = [
        vec![0, 0, 0],
        vec![0, 0, 1],
        vec![0, 0, 2],
        vec![0, 1, 0],
        vec![0, 1, 2],
        vec![0, 2, 0],
        vec![0, 2, 1],
    ]
    .into_iter()
    .collect();
    assert_eq!(realized_i, frozen_i);
}

#[test]
fn generic_parameter_skips_the_spectral_family() {
    let base = PrimeFieldCtx::new(7).unwrap();
    let ctx = FieldCtx::Rational(base);
    let cfg = YConfig::new(2, 3, ctx, qhat(base), ctx.from_residue(2)).unwrap();
    let y = YAlgebra::new(cfg).unwrap();
    assert_eq!(y.cfg().quantum_char(), 0);

    let report = core_suite(&y).unwrap();
    assert!(report.passed(), "failing checks: {:?}", report.failing_ids());
    let (passed, _, skipped) = report.counts();
    assert!(passed > 0);
    assert!(skipped > 0, "spectral checks should skip for generic q");

    let witness = report
        .checks
        .iter()
        .find(|c| c.status == CheckStatus::Skipped)
        .and_then(|c| c.witness.clone())
        .unwrap();
    assert!(witness.contains("finite order"), "unexpected witness: {witness}");
}

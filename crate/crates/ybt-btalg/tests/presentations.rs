mod common;

use common::{bt, btord, prime_ctx, q_of};
use proptest::prelude::*;
use std::sync::OnceLock;
use ybt_algcore::{AlgebraElement, CheckStatus};
use ybt_btalg::{
    classical_presentation_suite, orthogonal_presentation_suite, presentation_suite,
    BlockFamily, BtAlgebra, BtError, BtOrdAlgebra, Ordered, PresentationKind,
};
use ybt_combinat::{Permutation, SetPartition};

fn shared_ord() -> &'static BtOrdAlgebra {
    static ORD: OnceLock<BtOrdAlgebra> = OnceLock::new();
    ORD.get_or_init(|| btord(3, 7, 2))
}

fn shared_bt() -> &'static BtAlgebra {
    static BT: OnceLock<BtAlgebra> = OnceLock::new();
    BT.get_or_init(|| bt(3, 7, 2))
}

fn assert_same(label: &str, lhs: &AlgebraElement, rhs: &AlgebraElement) {
    if let Some((b, l, r)) = lhs.first_difference(rhs) {
        panic!("{label}: differ at {}: {} vs {}", lhs.handle().basis_label(b), l, r);
    }
}

#[test]
fn classical_presentation_holds() {
    for n in [2, 3, 4] {
        let alg = bt(n, 7, 2);
        let report = classical_presentation_suite(&alg);
        let (pass, fail, skip) = report.counts();
        assert!(report.passed(), "n = {n}: {:?}", report.failing_ids());
        assert_eq!((fail, skip), (0, 0));
        assert!(pass > 0);
        if n == 4 {
            assert!(report.check("g-far-commute@a=1,b=3").is_some());
            assert!(report.check("eg-far-commute@a=3,b=1").is_some());
        }
    }
}

#[test]
fn orthogonal_presentation_holds_in_both_algebras() {
    let alg = bt(3, 7, 2);
    let report = orthogonal_presentation_suite(&alg);
    assert!(report.passed(), "{:?}", report.failing_ids());
    assert_eq!(report.name, "bt-orthogonal");
    assert_eq!(report.counts().2, 0);

    let ord = btord(3, 7, 2);
    let report = orthogonal_presentation_suite(&ord);
    assert!(report.passed(), "{:?}", report.failing_ids());
    assert_eq!(report.name, "btord-orthogonal");

    let dispatched = presentation_suite(&ord, PresentationKind::Orthogonal);
    assert_eq!(dispatched.name, "btord-orthogonal");
    assert!(dispatched.passed());
    let classical_ord = presentation_suite(&ord, PresentationKind::Classical);
    assert!(classical_ord.passed(), "{:?}", classical_ord.failing_ids());
}

#[test]
fn quadratic_on_split_idempotent() {
    let alg = bt(3, 7, 2);
    let q = alg.q().clone();
    let singletons = SetPartition::singletons(3);
    let ebar = alg.ebar(&singletons).unwrap();
    let g1 = alg.g(1);
    let lhs = g1.mul(&g1).unwrap().mul(&ebar).unwrap();
    assert_same("g_1^2 on split blocks", &lhs, &ebar.scale(&q));
}

#[test]
fn g_inverse_in_both_algebras() {
    let alg = bt(3, 7, 2);
    for a in 1..3 {
        assert_same("left inverse", &alg.g_inv(a).mul(&alg.g(a)).unwrap(), &alg.unit());
        assert_same("right inverse", &alg.g(a).mul(&alg.g_inv(a)).unwrap(), &alg.unit());
    }
    let ord = btord(3, 7, 2);
    for a in 1..3 {
        assert_same("left inverse", &ord.g_inv(a).mul(&ord.g(a)).unwrap(), &ord.unit());
        assert_same("right inverse", &ord.g(a).mul(&ord.g_inv(a)).unwrap(), &ord.unit());
    }
}

#[test]
fn element_lookup_matches_constructors() {
    let alg = bt(3, 7, 2);
    let pair = SetPartition::adjacent_pair(3, 1);
    assert_same("unit", &alg.element("1").unwrap(), &alg.unit());
    assert_same("g", &alg.element("g_2").unwrap(), &alg.g(2));
    assert_same("g inverse", &alg.element("g_2^-1").unwrap(), &alg.g_inv(2));
    assert_same("tie generator", &alg.element("e_1").unwrap(), &alg.e_adj(1));
    assert_same("block idempotent", &alg.element("ebar{1,2|3}").unwrap(), &alg.ebar(&pair).unwrap());
    assert_same("tie idempotent", &alg.element("e{1,2|3}").unwrap(), &alg.e_set(&pair).unwrap());

    for bad in ["bogus", "g_0", "g_3", "e_0", "e_7", "ebar{1,2}", "ebar{1,2|2}", "ebar({1,2},{3})"] {
        assert!(
            matches!(alg.element(bad), Err(BtError::UnknownElement(_))),
            "{bad} should be rejected"
        );
    }

    let ord = btord(3, 7, 2);
    let ordered = ord
        .parts()
        .iter()
        .find(|p| p.blocks() == [vec![3], vec![1, 2]])
        .unwrap()
        .clone();
    assert_same(
        "ordered block idempotent",
        &ord.element("ebar({3},{1,2})").unwrap(),
        &ord.ebar(&ordered).unwrap(),
    );
    for bad in ["ebar{1,2|3}", "e({3},{1,2})"] {
        assert!(
            matches!(ord.element(bad), Err(BtError::UnknownElement(_))),
            "{bad} should be rejected"
        );
    }
}

#[test]
fn corrupted_table_is_pinpointed() {
    let ctx = prime_ctx(7);
    let q = q_of(ctx, 2);
    let clean = BtAlgebra::new(3, ctx, q.clone()).unwrap();
    let sigma1 = Permutation::adjacent_transposition(3, 1);
    let factor = ctx.from_int(3);

    // Corrupt the row of an ebar letter at a key whose blocks join the
    // first two strands; such a row feeds the quadratic relation at a = 1,
    // so the corruption cannot go unnoticed. Either the build-time sample
    // already rejects the tables, or the presentation suite must blame a
    // relation at a = 1.
    let mut live_subject = None;
    let mut rejected_at_build = 0;
    for p0 in clean.parts().iter().filter(|p| p.same_block(1, 2)) {
        let generator = clean.ebar_generator_index(p0).unwrap();
        let key = clean.key_index(&sigma1, p0).unwrap();
        match BtAlgebra::new_with_scaled_row(3, ctx, q.clone(), generator, key, factor.clone()) {
            Ok(alg) => {
                live_subject = Some(alg);
                break;
            }
            Err(BtError::Algebra(_)) => rejected_at_build += 1,
            Err(other) => panic!("unexpected error: {other}"),
        }
    }

    let Some(alg) = live_subject else {
        assert!(rejected_at_build > 0, "every candidate must be noticed somewhere");
        return;
    };

    let report = orthogonal_presentation_suite(&alg);
    assert!(!report.passed(), "the corrupted row must be noticed");
    let failing = report.failing_ids();
    assert!(
        failing.iter().all(|id| id.contains("a=1") && !id.starts_with("braid@")),
        "only relations at a = 1 may be blamed: {failing:?}"
    );
    for id in &failing {
        let witness = report.check(id).unwrap().witness.as_deref().unwrap();
        assert!(witness.contains("block structure"), "{id}: {witness}");
    }
    for check in &report.checks {
        if check.id.contains("a=2") {
            assert_eq!(check.status, CheckStatus::Pass, "{} should be clean", check.id);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Any product of braid generators slides past a block idempotent by
    /// relabeling the blocks, including non-reduced products that trigger
    /// the quadratic rewrite.
    #[test]
    fn g_products_slide_past_block_idempotents(
        word in proptest::collection::vec(1usize..=2, 0..6),
        part in 0usize..13,
    ) {
        let ord = shared_ord();
        let p = &ord.parts()[part];
        let w = Permutation::from_word(3, &word);
        let mut x = ord.unit();
        for &a in &word {
            x = x.mul(&ord.g(a)).unwrap();
        }
        let lhs = x.mul(&ord.ebar(p).unwrap()).unwrap();
        let moved = Ordered::act(&w, p);
        let rhs = ord.ebar(&moved).unwrap().mul(&x).unwrap();
        prop_assert!(lhs.first_difference(&rhs).is_none());
    }

    /// Associativity over random words in the full generator alphabet.
    #[test]
    fn products_associate(
        wx in proptest::collection::vec(0usize..7, 0..4),
        wy in proptest::collection::vec(0usize..7, 0..4),
        wz in proptest::collection::vec(0usize..7, 0..4),
    ) {
        let alg = shared_bt();
        let build = |word: &[usize]| {
            let mut acc = alg.unit();
            for &letter in word {
                acc = acc.mul(&alg.handle().generator_element(letter)).unwrap();
            }
            acc
        };
        let (x, y, z) = (build(&wx), build(&wy), build(&wz));
        let left = x.mul(&y).unwrap().mul(&z).unwrap();
        let right = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert!(left.first_difference(&right).is_none());
    }
}

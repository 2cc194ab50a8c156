mod common;

use common::bt;
use ybt_btalg::BasisChange;
use ybt_combinat::SetPartition;

#[test]
fn roundtrip_is_identity_on_every_key() {
    for n in [2, 3, 4] {
        let alg = bt(n, 7, 2);
        let change = BasisChange::new(&alg);
        let one = alg.ctx().one();
        for key in 0..alg.dim() {
            let classical = change.classical_element(key);
            let back = change.to_classical(&classical);
            assert_eq!(back, vec![(key, one.clone())], "n = {n}, key {key}");

            let normal = alg.handle().basis_element(key);
            let through = change.from_classical(&change.to_classical(&normal));
            assert!(
                through.first_difference(&normal).is_none(),
                "n = {n}, key {key}: normal-form roundtrip moved"
            );
        }
    }
}

#[test]
fn singleton_tie_is_the_unit() {
    let alg = bt(3, 7, 2);
    let singletons = SetPartition::singletons(3);
    let e = alg.e_set(&singletons).unwrap();
    assert!(e.first_difference(&alg.unit()).is_none());
}

#[test]
fn pair_tie_expands_with_unit_coefficients_over_coarsenings() {
    let alg = bt(3, 7, 2);
    let pair = SetPartition::adjacent_pair(3, 1);
    let e = alg.e_set(&pair).unwrap();
    let one = alg.ctx().one();

    let mut support = vec![];
    for (key, c) in e.iter() {
        assert_eq!(*c, one, "coefficients stay 0 or 1");
        support.push(key);
    }
    let id = ybt_combinat::Permutation::identity(3);
    let mut expected: Vec<usize> = alg
        .parts()
        .iter()
        .filter(|b| pair.refines(b).unwrap())
        .map(|b| alg.key_index(&id, b).unwrap())
        .collect();
    expected.sort_unstable();
    assert_eq!(support, expected);
}

#[test]
fn tie_products_follow_the_join() {
    for n in [3, 4] {
        let alg = bt(n, 7, 2);
        for a in alg.parts() {
            for b in alg.parts() {
                let product = alg.e_set(a).unwrap().mul(&alg.e_set(b).unwrap()).unwrap();
                let join = a.join(b).unwrap();
                let direct = alg.e_set(&join).unwrap();
                assert!(
                    product.first_difference(&direct).is_none(),
                    "n = {n}: e({a}) e({b}) != e({join})"
                );
            }
        }
    }
}

#[test]
fn classical_elements_match_multiplicative_construction() {
    let alg = bt(3, 7, 2);
    let change = BasisChange::new(&alg);
    for key in 0..alg.dim() {
        let (w, p) = alg.decompose(key);
        let direct = alg.g_w(w).unwrap().mul(&alg.e_set(p).unwrap()).unwrap();
        let via_change = change.classical_element(key);
        assert!(
            direct.first_difference(&via_change).is_none(),
            "key {key}: g_w e(A) disagrees with the coordinate map"
        );
    }
}

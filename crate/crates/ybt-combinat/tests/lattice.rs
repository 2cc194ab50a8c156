//! Lattice-level checks: the Moebius function against the zeta-matrix
//! inversion oracle, enumeration counts against Bell/Fubini, and the
//! group-action laws.

use ybt_combinat::{
    bell, enumerate_ordered_set_partitions, enumerate_permutations, enumerate_set_partitions,
    fubini, mobius, SetPartition,
};

/// Inverts the zeta (refinement-containment) matrix over the rationals by
/// exact integer Gauss-Jordan elimination on an augmented matrix, exploiting
/// that zeta is unitriangular once partitions are sorted by block count.
fn mobius_matrix_by_zeta_inversion(parts: &[SetPartition]) -> Vec<Vec<i64>> {
    let m = parts.len();
    // Order by decreasing block count so that refinement is upper triangular.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(parts[i].block_count()));
    let zeta: Vec<Vec<i64>> = order
        .iter()
        .map(|&i| {
            order
                .iter()
                .map(|&j| i64::from(parts[i].refines(&parts[j]).unwrap()))
                .collect()
        })
        .collect();
    // Unitriangular integer inversion: back substitution row by row.
    let mut inv = vec![vec![0i64; m]; m];
    for i in (0..m).rev() {
        inv[i][i] = 1;
        for j in i + 1..m {
            // inv[i][j] = -(sum over k in (i, j] of zeta[i][k] * inv[k][j]).
            let mut acc = 0i64;
            for (k, inv_k) in inv.iter().enumerate().take(j + 1).skip(i + 1) {
                acc += zeta[i][k] * inv_k[j];
            }
            inv[i][j] = -acc;
        }
    }
    // Undo the sorting so entry (i, j) refers to parts[i], parts[j].
    let mut out = vec![vec![0i64; m]; m];
    for (a, &i) in order.iter().enumerate() {
        for (b, &j) in order.iter().enumerate() {
            out[i][j] = inv[a][b];
        }
    }
    out
}

#[test]
fn mobius_equals_zeta_inverse_up_to_n5() {
    for n in 0..=5 {
        let parts = enumerate_set_partitions(n).unwrap();
        let oracle = mobius_matrix_by_zeta_inversion(&parts);
        for (i, a) in parts.iter().enumerate() {
            for (j, b) in parts.iter().enumerate() {
                assert_eq!(
                    mobius(a, b).unwrap(),
                    oracle[i][j],
                    "mobius({a}, {b}) disagrees with the zeta inverse"
                );
            }
        }
    }
}

#[test]
fn mobius_frozen_examples() {
    // Values read off the zeta-inversion oracle and frozen.
    let singletons3 = SetPartition::singletons(3);
    let full3 = SetPartition::full(3);
    assert_eq!(mobius(&singletons3, &full3).unwrap(), 2);
    let a = SetPartition::new(4, vec![vec![1], vec![2], vec![3, 4]]).unwrap();
    let b = SetPartition::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
    assert_eq!(mobius(&a, &b).unwrap(), -1);
    assert_eq!(mobius(&a, &a).unwrap(), 1);
}

#[test]
fn bell_and_fubini_frozen_sequences() {
    let bells: Vec<u64> = (0..=8).map(bell).collect();
    assert_eq!(bells, vec![1, 1, 2, 5, 15, 52, 203, 877, 4140]);
    let fubinis: Vec<u64> = (0..=7).map(fubini).collect();
    assert_eq!(fubinis, vec![1, 1, 3, 13, 75, 541, 4683, 47293]);
}

#[test]
fn enumerations_match_counting_formulas() {
    for n in 0..=7 {
        assert_eq!(enumerate_set_partitions(n).unwrap().len() as u64, bell(n));
    }
    for n in 0..=6 {
        assert_eq!(enumerate_ordered_set_partitions(n).unwrap().len() as u64, fubini(n));
    }
}

#[test]
fn action_commutes_with_join_and_preserves_block_sizes() {
    let parts = enumerate_set_partitions(4).unwrap();
    for w in enumerate_permutations(4) {
        for a in &parts {
            let wa = w.act_set_partition(a).unwrap();
            let mut sizes: Vec<usize> = a.blocks().iter().map(|b| b.len()).collect();
            let mut wsizes: Vec<usize> = wa.blocks().iter().map(|b| b.len()).collect();
            sizes.sort_unstable();
            wsizes.sort_unstable();
            assert_eq!(sizes, wsizes);
            for b in &parts {
                let lhs = w.act_set_partition(&a.join(b).unwrap()).unwrap();
                let rhs = wa.join(&w.act_set_partition(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn arb_partition(n: usize) -> impl Strategy<Value = SetPartition> {
        // A restricted growth string determines a partition.
        proptest::collection::vec(0usize..n.max(1), n).prop_map(move |labels| {
            let mut blocks: Vec<Vec<usize>> = vec![];
            let mut seen: Vec<usize> = vec![];
            for (i, &l) in labels.iter().enumerate() {
                match seen.iter().position(|&s| s == l) {
                    Some(b) => blocks[b].push(i + 1),
                    None => {
                        seen.push(l);
                        blocks.push(vec![i + 1]);
                    }
                }
            }
            SetPartition::new(n, blocks).unwrap()
        })
    }

    proptest! {
        #[test]
        fn join_is_least_upper_bound(a in arb_partition(6), b in arb_partition(6)) {
            let j = a.join(&b).unwrap();
            prop_assert!(a.refines(&j).unwrap());
            prop_assert!(b.refines(&j).unwrap());
            // Any common coarsening is above the join.
            for c in enumerate_set_partitions(6).unwrap() {
                if a.refines(&c).unwrap() && b.refines(&c).unwrap() {
                    prop_assert!(j.refines(&c).unwrap());
                }
            }
        }

        #[test]
        fn mobius_row_sums_vanish(b in arb_partition(5)) {
            // Sum of mobius(A, B) over all A below a fixed non-minimal B is 0.
            let parts = enumerate_set_partitions(5).unwrap();
            let sum: i64 = parts.iter().map(|a| mobius(a, &b).unwrap()).sum();
            let expected = if b == SetPartition::singletons(5) { 1 } else { 0 };
            prop_assert_eq!(sum, expected);
        }
    }
}

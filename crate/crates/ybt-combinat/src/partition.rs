use crate::CombinatError;
use std::fmt;

/// A set partition of `{1..n}` in canonical form: blocks sorted by their
/// minimum element, elements ascending inside each block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from blocks, validating and canonicalizing.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, CombinatError> {
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for b in &blocks {
            if b.is_empty() {
                return Err(CombinatError::NotAPartition(n));
            }
            for &x in b {
                if x == 0 || x > n || seen[x] {
                    return Err(CombinatError::NotAPartition(n));
                }
                seen[x] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(CombinatError::NotAPartition(n));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// The all-singletons partition, the minimum of the refinement order.
    pub fn singletons(n: usize) -> Self {
        SetPartition { n, blocks: (1..=n).map(|x| vec![x]).collect() }
    }

    /// The one-block partition, the maximum of the refinement order.
    pub fn full(n: usize) -> Self {
        if n == 0 {
            return SetPartition { n, blocks: vec![] };
        }
        SetPartition { n, blocks: vec![(1..=n).collect()] }
    }

    /// Singletons except for the pair `{a, a+1}` (1-based, `a < n`).
    pub fn adjacent_pair(n: usize, a: usize) -> Self {
        assert!(a >= 1 && a < n, "adjacent pair index out of range");
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(n - 1);
        for x in 1..=n {
            if x == a {
                blocks.push(vec![a, a + 1]);
            } else if x != a + 1 {
                blocks.push(vec![x]);
            }
        }
        SetPartition { n, blocks }
    }

    /// Groups positions of equal values: `a ~ b` iff `values[a-1] == values[b-1]`.
    pub fn from_level_sets<T: Eq + std::hash::Hash>(values: &[T]) -> Self {
        let n = values.len();
        let mut first_pos: Vec<usize> = vec![];
        let mut blocks: Vec<Vec<usize>> = vec![];
        'outer: for (idx, v) in values.iter().enumerate() {
            for (bi, &fp) in first_pos.iter().enumerate() {
                if values[fp - 1] == *v {
                    blocks[bi].push(idx + 1);
                    continue 'outer;
                }
            }
            first_pos.push(idx + 1);
            blocks.push(vec![idx + 1]);
        }
        // Blocks are already sorted by minimum, since firsts appear in order.
        SetPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `x` (1-based element).
    pub fn block_index_of(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.n);
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("element covered by some block")
    }

    /// Whether `a` and `b` lie in one block.
    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_index_of(a) == self.block_index_of(b)
    }

    /// Refinement test: every block of `coarser` is a union of blocks of
    /// `self`. This is the partial order of the partition lattice here.
    pub fn refines(&self, coarser: &SetPartition) -> Result<bool, CombinatError> {
        if self.n != coarser.n {
            return Err(CombinatError::GroundSetMismatch(self.n, coarser.n));
        }
        Ok(self.blocks.iter().all(|b| {
            let target = coarser.block_index_of(b[0]);
            b.iter().all(|&x| coarser.block_index_of(x) == target)
        }))
    }

    /// Least upper bound in the refinement order: the transitive closure of
    /// the union of the two equivalence relations.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition, CombinatError> {
        if self.n != other.n {
            return Err(CombinatError::GroundSetMismatch(self.n, other.n));
        }
        let mut dsu = Dsu::new(self.n);
        for part in [self, other] {
            for b in &part.blocks {
                for w in b.windows(2) {
                    dsu.union(w[0] - 1, w[1] - 1);
                }
            }
        }
        Ok(dsu.into_partition())
    }

    /// Relabels elements through a 1-based image array (`x` goes to
    /// `image[x-1]`); used by the symmetric-group action.
    pub(crate) fn relabel(&self, image: &[usize]) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| image[x - 1]).collect())
            .collect();
        SetPartition::new(self.n, blocks).expect("relabeling preserves partitions")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    /// Blocks separated by `|` inside braces: `{1,2|3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "}}")
    }
}

/// A set partition whose blocks carry a linear order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Builds from ordered blocks, validating coverage and sorting elements
    /// inside each block (block order is preserved).
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, CombinatError> {
        // Reuse the unordered validation, then keep the given block order.
        SetPartition::new(n, blocks.clone())?;
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(OrderedSetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The position (0-based) of the block containing `x` in the block order.
    pub fn block_index_of(&self, x: usize) -> usize {
        assert!(x >= 1 && x <= self.n);
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("element covered by some block")
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_index_of(a) == self.block_index_of(b)
    }

    /// Forgets the block order.
    pub fn unordered(&self) -> SetPartition {
        SetPartition::new(self.n, self.blocks.clone()).expect("already a partition")
    }

    /// Relabels elements through a 1-based image array, preserving the block
    /// order (each block maps to its image as a set, staying in place).
    pub(crate) fn relabel(&self, image: &[usize]) -> OrderedSetPartition {
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&x| image[x - 1]).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        OrderedSetPartition { n: self.n, blocks }
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrderedSetPartition {
    /// Ordered blocks as a tuple: `({1,2},{3})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

/// Caps keeping the Bell/Fubini growth at desk scale.
const SET_PARTITION_CAP: usize = 12;
const ORDERED_SET_PARTITION_CAP: usize = 8;

/// All set partitions of `{1..n}` in restricted-growth-string order.
pub fn enumerate_set_partitions(n: usize) -> Result<Vec<SetPartition>, CombinatError> {
    if n > SET_PARTITION_CAP {
        return Err(CombinatError::CapExceeded { n, cap: SET_PARTITION_CAP });
    }
    if n == 0 {
        return Ok(vec![SetPartition { n: 0, blocks: vec![] }]);
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[..i]) + 1.
    let mut out = vec![];
    let mut rgs = vec![0usize; n];
    loop {
        let block_count = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![vec![]; block_count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push(SetPartition { n, blocks });
        // Advance to the next restricted growth string.
        let mut i = n;
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().max().copied().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in rgs[i + 1..].iter_mut() {
                    *r = 0;
                }
                break;
            }
        }
    }
}

/// All ordered set partitions of `{1..n}`, grouped by underlying partition
/// (in enumeration order), block orders lexicographically by block minima.
pub fn enumerate_ordered_set_partitions(
    n: usize,
) -> Result<Vec<OrderedSetPartition>, CombinatError> {
    if n > ORDERED_SET_PARTITION_CAP {
        return Err(CombinatError::CapExceeded { n, cap: ORDERED_SET_PARTITION_CAP });
    }
    let mut out = vec![];
    for part in enumerate_set_partitions(n)? {
        let k = part.block_count();
        let mut indices: Vec<usize> = (0..k).collect();
        permutations_lex(&mut indices, &mut |order| {
            let blocks = order.iter().map(|&i| part.blocks()[i].clone()).collect();
            out.push(OrderedSetPartition { n, blocks });
        });
    }
    Ok(out)
}

/// Visits all permutations of `items` in lexicographic order.
fn permutations_lex(items: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    items.sort_unstable();
    loop {
        visit(items);
        // Next permutation in lexicographic order.
        let Some(i) = (0..items.len().saturating_sub(1)).rfind(|&i| items[i] < items[i + 1])
        else {
            return;
        };
        let j = (i + 1..items.len()).rfind(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
    }
}

/// Bell number `b_n` (number of set partitions), by the triangle recurrence.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// Fubini number `f_n` (number of ordered set partitions), by summing
/// surjection counts `k! * S(n,k)` over Stirling numbers.
pub fn fubini(n: usize) -> u64 {
    // stirling[k] = S(m, k) as m grows from 0 to n.
    let mut stirling = vec![0u64; n + 1];
    stirling[0] = 1;
    for m in 1..=n {
        for k in (1..=m).rev() {
            stirling[k] = k as u64 * stirling[k] + stirling[k - 1];
        }
        stirling[0] = 0;
    }
    let mut factorial = 1u64;
    let mut total = 0u64;
    for (k, &s) in stirling.iter().enumerate() {
        if k > 0 {
            factorial *= k as u64;
        }
        total += factorial * s;
    }
    total
}

/// Moebius function of the refinement lattice: for `A.refines(B)` with `r`
/// blocks in `A` and `s` in `B`, the value is
/// `(-1)^(r-s) * prod_{i>=1} (i!)^(number of B-blocks made of i+1 A-blocks)`;
/// it vanishes unless `A` refines `B`.
pub fn mobius(a: &SetPartition, b: &SetPartition) -> Result<i64, CombinatError> {
    if !a.refines(b)? {
        return Ok(0);
    }
    let r = a.block_count() as i64;
    let s = b.block_count() as i64;
    let sign = if (r - s) % 2 == 0 { 1 } else { -1 };
    let mut value = sign;
    for block in b.blocks() {
        // Number of A-blocks merged into this B-block.
        let mut reps: Vec<usize> = block.iter().map(|&x| a.block_index_of(x)).collect();
        reps.sort_unstable();
        reps.dedup();
        let parts = reps.len() as i64;
        // Factor (parts - 1)!.
        let mut f = 1i64;
        for i in 2..parts {
            f *= i;
        }
        value *= f;
    }
    Ok(value)
}

/// Union-find over `0..n`, extracting the induced partition at the end.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
    }

    fn into_partition(mut self) -> SetPartition {
        let n = self.parent.len();
        let mut by_root: Vec<(usize, Vec<usize>)> = vec![];
        for x in 0..n {
            let r = self.find(x);
            match by_root.iter_mut().find(|(root, _)| *root == r) {
                Some((_, b)) => b.push(x + 1),
                None => by_root.push((r, vec![x + 1])),
            }
        }
        let blocks: Vec<Vec<usize>> = by_root.into_iter().map(|(_, b)| b).collect();
        SetPartition::new(n, blocks).expect("DSU classes partition the ground set")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonical_order_is_by_minimum() {
        let p = SetPartition::new(4, vec![vec![4, 3], vec![2, 1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3, 4]]);
        assert_eq!(p.to_string(), "{1,2|3,4}");
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err()); // misses 3
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err()); // overlap
        assert!(SetPartition::new(3, vec![vec![1, 2, 3], vec![]]).is_err()); // empty block
        assert!(SetPartition::new(3, vec![vec![1, 2, 4]]).is_err()); // out of range
    }

    #[test]
    fn refinement_orientation() {
        // {1|2|3} refines {1,2|3} refines {1,2,3}; never the other way.
        let fine = SetPartition::singletons(3);
        let mid = sp(3, &[&[1, 2], &[3]]);
        let coarse = SetPartition::full(3);
        assert!(fine.refines(&mid).unwrap());
        assert!(mid.refines(&coarse).unwrap());
        assert!(!coarse.refines(&mid).unwrap());
        assert!(!mid.refines(&fine).unwrap());
        assert!(mid.refines(&mid).unwrap());
    }

    #[test]
    fn ground_set_mismatch_detected() {
        let a = SetPartition::singletons(3);
        let b = SetPartition::singletons(4);
        assert_eq!(a.refines(&b), Err(CombinatError::GroundSetMismatch(3, 4)));
        assert!(a.join(&b).is_err());
        assert!(mobius(&a, &b).is_err());
    }

    #[test]
    fn join_is_transitive_closure() {
        let a = sp(3, &[&[1, 2], &[3]]);
        let b = sp(3, &[&[1], &[2, 3]]);
        assert_eq!(a.join(&b).unwrap(), SetPartition::full(3));
        assert_eq!(a.join(&a).unwrap(), a);
        assert_eq!(a.join(&SetPartition::singletons(3)).unwrap(), a);
    }

    #[test]
    fn enumeration_counts_match_bell_and_fubini() {
        for n in 0..=6 {
            assert_eq!(enumerate_set_partitions(n).unwrap().len() as u64, bell(n));
        }
        for n in 0..=5 {
            assert_eq!(
                enumerate_ordered_set_partitions(n).unwrap().len() as u64,
                fubini(n)
            );
        }
    }

    #[test]
    fn enumeration_caps() {
        assert!(matches!(
            enumerate_set_partitions(13),
            Err(CombinatError::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_ordered_set_partitions(9),
            Err(CombinatError::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_set_partitions(5).unwrap() {
            assert!(seen.insert(p.to_string()));
        }
        let mut seen = std::collections::HashSet::new();
        for p in enumerate_ordered_set_partitions(4).unwrap() {
            assert!(seen.insert(p.to_string()));
        }
    }

    #[test]
    fn mobius_base_cases() {
        let a = sp(3, &[&[1, 2], &[3]]);
        assert_eq!(mobius(&a, &a).unwrap(), 1);
        // Not comparable: neither refines the other.
        let b = sp(3, &[&[1], &[2, 3]]);
        assert_eq!(mobius(&a, &b).unwrap(), 0);
        assert_eq!(mobius(&b, &a).unwrap(), 0);
        // Reversed order also gives 0.
        assert_eq!(mobius(&SetPartition::full(3), &a).unwrap(), 0);
    }

    #[test]
    fn mobius_interval_values() {
        // singletons -> full on 3 elements merges 3 blocks into 1: 2! = 2.
        assert_eq!(mobius(&SetPartition::singletons(3), &SetPartition::full(3)).unwrap(), 2);
        // {1|2|3,4} -> {1,2|3,4}: one merge of two blocks, sign -1.
        let a = sp(4, &[&[1], &[2], &[3, 4]]);
        let b = sp(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(mobius(&a, &b).unwrap(), -1);
    }

    #[test]
    fn ordered_partition_forgets_to_unordered() {
        let o = OrderedSetPartition::new(3, vec![vec![3], vec![1, 2]]).unwrap();
        assert_eq!(o.to_string(), "({3},{1,2})");
        assert_eq!(o.unordered(), sp(3, &[&[1, 2], &[3]]));
        assert_eq!(o.block_index_of(3), 0);
        assert_eq!(o.block_index_of(1), 1);
    }

    #[test]
    fn bell_triangle_and_fubini_formula() {
        assert_eq!(bell(3), 5);
        assert_eq!(fubini(3), 13);
        assert_eq!(bell(8), 4140);
        assert_eq!(fubini(7), 47293);
    }
}

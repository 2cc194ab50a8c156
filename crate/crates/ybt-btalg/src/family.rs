use std::fmt;
use std::hash::Hash;
use ybt_combinat::{
    enumerate_ordered_set_partitions, enumerate_set_partitions, CombinatError,
    OrderedSetPartition, Permutation, SetPartition,
};

/// The tie component of a basis key: plain set partitions for the algebra
/// itself, ordered set partitions for the ordered variant. Both carry the
/// same relabeling action and the same adjacency test, which is all the
/// multiplication rules consume.
pub trait BlockFamily: Send + Sync + 'static {
    type Part: Clone + Eq + Ord + Hash + fmt::Display + Send + Sync;

    /// Tag for handle fingerprints.
    const KIND: &'static str;

    fn enumerate(n: usize) -> Result<Vec<Self::Part>, CombinatError>;

    /// Relabeling action of a permutation on the blocks.
    fn act(w: &Permutation, p: &Self::Part) -> Self::Part;

    /// Whether `a` and `a + 1` share a block.
    fn joined(p: &Self::Part, a: usize) -> bool;

    /// Parses the display form back into a block structure on `n` points.
    fn parse(s: &str, n: usize) -> Option<Self::Part>;

    /// Positions within `all` of the structures that `p` refines. `None`
    /// when the family carries no refinement order, which is the case for
    /// ordered blocks, where merging blocks gives no canonical order.
    fn coarser_than(p: &Self::Part, all: &[Self::Part]) -> Option<Vec<usize>>;
}

/// Unordered blocks: keys `g_w ebar(A)` with `A` a set partition.
pub struct Unordered;

/// Ordered blocks: keys `g_w ebar(A)` with `A` an ordered set partition.
pub struct Ordered;

impl BlockFamily for Unordered {
    type Part = SetPartition;
    const KIND: &'static str = "setpar";

    fn enumerate(n: usize) -> Result<Vec<SetPartition>, CombinatError> {
        enumerate_set_partitions(n)
    }

    fn act(w: &Permutation, p: &SetPartition) -> SetPartition {
        w.act_set_partition(p).expect("same size")
    }

    fn joined(p: &SetPartition, a: usize) -> bool {
        p.same_block(a, a + 1)
    }

    fn parse(s: &str, n: usize) -> Option<SetPartition> {
        let inner = s.strip_prefix('{')?.strip_suffix('}')?;
        let mut blocks = vec![];
        for block in inner.split('|') {
            let mut items = vec![];
            for x in block.split(',') {
                items.push(x.trim().parse::<usize>().ok()?);
            }
            blocks.push(items);
        }
        SetPartition::new(n, blocks).ok()
    }

    fn coarser_than(p: &SetPartition, all: &[SetPartition]) -> Option<Vec<usize>> {
        Some(
            all.iter()
                .enumerate()
                .filter(|(_, b)| p.refines(b).expect("same ground set"))
                .map(|(i, _)| i)
                .collect(),
        )
    }
}

impl BlockFamily for Ordered {
    type Part = OrderedSetPartition;
    const KIND: &'static str = "ordsetpar";

    fn enumerate(n: usize) -> Result<Vec<OrderedSetPartition>, CombinatError> {
        enumerate_ordered_set_partitions(n)
    }

    fn act(w: &Permutation, p: &OrderedSetPartition) -> OrderedSetPartition {
        w.act_ordered(p).expect("same size")
    }

    fn joined(p: &OrderedSetPartition, a: usize) -> bool {
        p.same_block(a, a + 1)
    }

    fn parse(s: &str, n: usize) -> Option<OrderedSetPartition> {
        let inner = s.strip_prefix('(')?.strip_suffix(')')?;
        let mut blocks = vec![];
        let mut rest = inner;
        while !rest.is_empty() {
            let rest2 = rest.strip_prefix('{')?;
            let end = rest2.find('}')?;
            let mut items = vec![];
            for x in rest2[..end].split(',') {
                items.push(x.trim().parse::<usize>().ok()?);
            }
            blocks.push(items);
            rest = rest2[end + 1..].strip_prefix(',').unwrap_or(&rest2[end + 1..]);
        }
        OrderedSetPartition::new(n, blocks).ok()
    }

    fn coarser_than(_: &OrderedSetPartition, _: &[OrderedSetPartition]) -> Option<Vec<usize>> {
        None
    }
}

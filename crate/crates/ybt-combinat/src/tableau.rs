use crate::{CombinatError, OrderedSetPartition, SetPartition};
use std::fmt;

/// A `d`-tuple of integer partitions with total size `n`. Components may be
/// empty; parts are positive and weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    comps: Vec<Vec<usize>>,
}

impl MultiPartition {
    pub fn new(comps: Vec<Vec<usize>>) -> Result<Self, CombinatError> {
        for (i, c) in comps.iter().enumerate() {
            let decreasing = c.windows(2).all(|w| w[0] >= w[1]);
            let positive = c.iter().all(|&x| x > 0);
            if !decreasing || !positive {
                return Err(CombinatError::NotAPartitionShape(i + 1));
            }
        }
        Ok(MultiPartition { comps })
    }

    pub fn d(&self) -> usize {
        self.comps.len()
    }

    pub fn total(&self) -> usize {
        self.comps.iter().map(|c| c.iter().sum::<usize>()).sum()
    }

    pub fn comps(&self) -> &[Vec<usize>] {
        &self.comps
    }

    /// Componentwise dominance: partial sums of each component compare.
    pub fn dominated_by(&self, other: &MultiPartition) -> bool {
        if self.d() != other.d() {
            return false;
        }
        self.comps.iter().zip(&other.comps).all(|(a, b)| {
            let len = a.len().max(b.len());
            let mut sa = 0usize;
            let mut sb = 0usize;
            for i in 0..len {
                sa += a.get(i).copied().unwrap_or(0);
                sb += b.get(i).copied().unwrap_or(0);
                if sa > sb {
                    return false;
                }
            }
            true
        })
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPartition {
    /// Components separated by `|`: `((2)|(1))` prints as `(2|1)`, empty
    /// components as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            if c.is_empty() {
                write!(f, "-")?;
            } else {
                for (j, x) in c.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
            }
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in lexicographically decreasing order.
fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    rec(n, n.max(1), &mut vec![], &mut out);
    out
}

/// All `d`-component multipartitions of total size `n`.
pub fn enumerate_multipartitions(d: usize, n: usize) -> Vec<MultiPartition> {
    fn rec(
        d: usize,
        n: usize,
        comps: &mut Vec<Vec<usize>>,
        out: &mut Vec<MultiPartition>,
    ) {
        if comps.len() == d {
            if n == 0 {
                out.push(MultiPartition { comps: comps.clone() });
            }
            return;
        }
        let remaining_comps = d - comps.len();
        for size in 0..=n {
            if remaining_comps == 1 && size != n {
                continue;
            }
            for p in partitions_of(size) {
                comps.push(p);
                rec(d, n - size, comps, out);
                comps.pop();
            }
        }
    }
    let mut out = vec![];
    rec(d, n, &mut vec![], &mut out);
    out
}

/// A standard multitableau: the shape filled bijectively with `1..=n`,
/// rows increasing left to right and columns top to bottom within each
/// component.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StdMultiTableau {
    shape: MultiPartition,
    // rows[p][r][c] is the entry at component p, row r, column c (0-based).
    rows: Vec<Vec<Vec<usize>>>,
}

impl StdMultiTableau {
    pub fn new(shape: MultiPartition, rows: Vec<Vec<Vec<usize>>>) -> Result<Self, CombinatError> {
        let n = shape.total();
        if rows.len() != shape.d() {
            return Err(CombinatError::NotStandard);
        }
        let mut seen = vec![false; n + 1];
        for (p, comp) in rows.iter().enumerate() {
            let expected = &shape.comps()[p];
            if comp.len() != expected.len() {
                return Err(CombinatError::NotStandard);
            }
            for (r, row) in comp.iter().enumerate() {
                if row.len() != expected[r] {
                    return Err(CombinatError::NotStandard);
                }
                for (c, &x) in row.iter().enumerate() {
                    if x == 0 || x > n || seen[x] {
                        return Err(CombinatError::NotStandard);
                    }
                    seen[x] = true;
                    if c > 0 && row[c - 1] >= x {
                        return Err(CombinatError::NotStandard);
                    }
                    if r > 0 && comp[r - 1][c] >= x {
                        return Err(CombinatError::NotStandard);
                    }
                }
            }
        }
        Ok(StdMultiTableau { shape, rows })
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.total()
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    /// Locates entry `a`, returning 1-based (component, row, column).
    pub fn position_of(&self, a: usize) -> (usize, usize, usize) {
        for (p, comp) in self.rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                if let Some(c) = row.iter().position(|&x| x == a) {
                    return (p + 1, r + 1, c + 1);
                }
            }
        }
        panic!("entry {a} not present");
    }

    /// `column - row` for the node holding entry `a` (`1 <= a <= n`): the
    /// axial distance that exponentiates `q` in the content of `a`.
    pub fn q_exponent(&self, a: usize) -> i64 {
        let (_, r, c) = self.position_of(a);
        c as i64 - r as i64
    }

    /// Component index (1-based) of the node holding entry `a`: the
    /// exponent of the root of unity in the content of `n + a`.
    pub fn xi_exponent(&self, a: usize) -> usize {
        self.position_of(a).0
    }

    pub fn q_exponents(&self) -> Vec<i64> {
        (1..=self.n()).map(|a| self.q_exponent(a)).collect()
    }

    pub fn xi_exponents(&self) -> Vec<usize> {
        (1..=self.n()).map(|a| self.xi_exponent(a)).collect()
    }

    /// Shape of the subtableau with entries `<= a`.
    pub fn restricted_shape(&self, a: usize) -> MultiPartition {
        let comps = self
            .rows
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|row| row.iter().filter(|&&x| x <= a).count())
                    .take_while(|&len| len > 0)
                    .collect()
            })
            .collect();
        MultiPartition { comps }
    }

    /// Dominance on standard multitableaux: restricted shapes dominate at
    /// every level.
    pub fn dominated_by(&self, other: &StdMultiTableau) -> bool {
        (1..=self.n()).all(|a| self.restricted_shape(a).dominated_by(&other.restricted_shape(a)))
    }

    /// The row reading of the multitableau: row `p` collects the entries of
    /// component `p` in increasing order (possibly empty). The set partition
    /// keeps the nonempty rows as unordered blocks; the ordered set
    /// partition keeps them in component order.
    pub fn row_composition(&self) -> (Vec<Vec<usize>>, SetPartition, OrderedSetPartition) {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|comp| {
                let mut all: Vec<usize> = comp.iter().flatten().copied().collect();
                all.sort_unstable();
                all
            })
            .collect();
        let nonempty: Vec<Vec<usize>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        let a = SetPartition::new(self.n(), nonempty.clone()).expect("rows partition entries");
        let a_ord = OrderedSetPartition::new(self.n(), nonempty).expect("rows partition entries");
        (rows, a, a_ord)
    }

    /// Swaps entries `a` and `a+1`, returning the new tableau when it is
    /// still standard (the entries lie in different rows and columns).
    pub fn apply_transposition(&self, a: usize) -> Option<StdMultiTableau> {
        assert!(a >= 1 && a < self.n());
        let pa = self.position_of(a);
        let pb = self.position_of(a + 1);
        if pa.0 == pb.0 && (pa.1 == pb.1 || pa.2 == pb.2) {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[pa.0 - 1][pa.1 - 1][pa.2 - 1] = a + 1;
        rows[pb.0 - 1][pb.1 - 1][pb.2 - 1] = a;
        Some(StdMultiTableau { shape: self.shape.clone(), rows })
    }

    /// Whether `a` and `a+1` share a row (same component, same row).
    pub fn same_row(&self, a: usize) -> bool {
        let pa = self.position_of(a);
        let pb = self.position_of(a + 1);
        pa.0 == pb.0 && pa.1 == pb.1
    }

    /// Whether `a` and `a+1` share a column (same component, same column).
    pub fn same_column(&self, a: usize) -> bool {
        let pa = self.position_of(a);
        let pb = self.position_of(a + 1);
        pa.0 == pb.0 && pa.2 == pb.2
    }
}

impl fmt::Debug for StdMultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for StdMultiTableau {
    /// Rows in parentheses, components separated by `|`:
    /// `((1,2)|(3))` for the two-component example.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (p, comp) in self.rows.iter().enumerate() {
            if p > 0 {
                write!(f, "|")?;
            }
            if comp.is_empty() {
                write!(f, "-")?;
            }
            for row in comp {
                write!(f, "(")?;
                for (j, x) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")?;
            }
        }
        write!(f, ")")
    }
}

/// All standard multitableaux of the given shape, built by inserting
/// `1..=n` one value at a time into every addable node of the partial
/// diagrams.
pub fn enumerate_std(shape: &MultiPartition) -> Vec<StdMultiTableau> {
    let n = shape.total();
    let d = shape.d();
    let mut out = vec![];
    // partial[p][r] = number of filled cells in row r of component p.
    let mut partial: Vec<Vec<usize>> = shape.comps().iter().map(|c| vec![0; c.len()]).collect();
    let mut rows: Vec<Vec<Vec<usize>>> = shape
        .comps()
        .iter()
        .map(|c| c.iter().map(|&len| vec![0; len]).collect())
        .collect();
    fn rec(
        value: usize,
        n: usize,
        d: usize,
        shape: &MultiPartition,
        partial: &mut Vec<Vec<usize>>,
        rows: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<StdMultiTableau>,
    ) {
        if value > n {
            out.push(StdMultiTableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for p in 0..d {
            for r in 0..partial[p].len() {
                let c = partial[p][r];
                let row_has_room = c < shape.comps()[p][r];
                let column_filled_above = r == 0 || partial[p][r - 1] > c;
                if row_has_room && column_filled_above {
                    partial[p][r] += 1;
                    rows[p][r][c] = value;
                    rec(value + 1, n, d, shape, partial, rows, out);
                    partial[p][r] -= 1;
                }
            }
        }
    }
    rec(1, n, d, shape, &mut partial, &mut rows, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(comps: &[&[usize]]) -> MultiPartition {
        MultiPartition::new(comps.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(MultiPartition::new(vec![vec![1, 2]]).is_err()); // increasing
        assert!(MultiPartition::new(vec![vec![2, 0]]).is_err()); // zero part
        assert!(MultiPartition::new(vec![vec![], vec![3, 1]]).is_ok());
    }

    #[test]
    fn std_count_single_component() {
        // Two standard tableaux of shape (2,1): hook length formula gives 2.
        assert_eq!(enumerate_std(&mp(&[&[2, 1]])).len(), 2);
        assert_eq!(enumerate_std(&mp(&[&[3]])).len(), 1);
        assert_eq!(enumerate_std(&mp(&[&[1, 1, 1]])).len(), 1);
    }

    #[test]
    fn std_squared_counts_match_group_algebra_dimension() {
        // Sum over 2-component multipartitions of n of |Std|^2 = 2^n * n!.
        for n in [2usize, 3] {
            let total: usize = enumerate_multipartitions(2, n)
                .iter()
                .map(|s| enumerate_std(s).len().pow(2))
                .sum();
            let expected = 2usize.pow(n as u32) * (1..=n).product::<usize>();
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn content_exponents_of_two_component_tableau() {
        let t = StdMultiTableau::new(
            mp(&[&[2], &[1]]),
            vec![vec![vec![1, 2]], vec![vec![3]]],
        )
        .unwrap();
        assert_eq!(t.q_exponents(), vec![0, 1, 0]);
        assert_eq!(t.xi_exponents(), vec![1, 1, 2]);
    }

    #[test]
    fn row_composition_drops_empty_rows() {
        let t = StdMultiTableau::new(
            mp(&[&[], &[3]]),
            vec![vec![], vec![vec![1, 2, 3]]],
        )
        .unwrap();
        let (rows, a, a_ord) = t.row_composition();
        assert_eq!(rows, vec![vec![], vec![1, 2, 3]]);
        assert_eq!(a, SetPartition::full(3));
        assert_eq!(a_ord.to_string(), "({1,2,3})");
    }

    #[test]
    fn row_composition_keeps_component_order() {
        let t = StdMultiTableau::new(
            mp(&[&[1], &[2]]),
            vec![vec![vec![3]], vec![vec![1, 2]]],
        )
        .unwrap();
        let (_, a, a_ord) = t.row_composition();
        assert_eq!(a.to_string(), "{1,2|3}");
        assert_eq!(a_ord.to_string(), "({3},{1,2})");
    }

    #[test]
    fn standardness_validated() {
        // Column violation: 2 above 1.
        assert!(StdMultiTableau::new(
            mp(&[&[1, 1]]),
            vec![vec![vec![2], vec![1]]],
        )
        .is_err());
        // Row violation.
        assert!(StdMultiTableau::new(mp(&[&[2]]), vec![vec![vec![2, 1]]]).is_err());
    }

    #[test]
    fn transposition_respects_standardness() {
        let t = StdMultiTableau::new(mp(&[&[2, 1]]), vec![vec![vec![1, 2], vec![3]]]).unwrap();
        // 1,2 share a row: swap is not standard.
        assert!(t.apply_transposition(1).is_none());
        // 2,3 are in different rows and columns: swap works.
        let s = t.apply_transposition(2).unwrap();
        assert_eq!(s.rows(), &[vec![vec![1, 3], vec![2]]]);
        assert!(t.same_row(1));
        assert!(!t.same_column(1));
        assert!(s.same_column(1));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        let shape = mp(&[&[2, 1]]);
        let ts = enumerate_std(&shape);
        for a in &ts {
            assert!(a.dominated_by(a));
            for b in &ts {
                for c in &ts {
                    if a.dominated_by(b) && b.dominated_by(c) {
                        assert!(a.dominated_by(c));
                    }
                }
                if a.dominated_by(b) && b.dominated_by(a) {
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn multipartition_enumeration_counts() {
        // Par_{2,2}: ((2)|-), ((1,1)|-), ((1)|(1)), (-|(2)), (-|(1,1)) = 5.
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        // Par_{1,n} = partitions of n.
        assert_eq!(enumerate_multipartitions(1, 5).len(), 7);
    }
}

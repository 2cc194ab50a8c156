use crate::{CombinatError, OrderedSetPartition, ResidueSeq, SetPartition};
use std::fmt;

/// A permutation of `{1..n}` in one-line notation: `img[i-1]` is the image
/// of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    /// Builds from a one-line image array (1-based values), validating
    /// bijectivity.
    pub fn new(img: Vec<usize>) -> Result<Self, CombinatError> {
        let n = img.len();
        let mut seen = vec![false; n + 1];
        for &x in &img {
            if x == 0 || x > n || seen[x] {
                return Err(CombinatError::NotAPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { img })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { img: (1..=n).collect() }
    }

    /// The adjacent transposition swapping `a` and `a+1` (1-based, `a < n`).
    pub fn adjacent_transposition(n: usize, a: usize) -> Self {
        assert!(a >= 1 && a < n, "transposition index out of range");
        let mut img: Vec<usize> = (1..=n).collect();
        img.swap(a - 1, a);
        Permutation { img }
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.img
    }

    /// Image of a point (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.img[x - 1]
    }

    /// Composition `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, CombinatError> {
        if self.n() != other.n() {
            return Err(CombinatError::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation {
            img: (1..=self.n()).map(|x| self.apply(other.apply(x))).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0; self.n()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x - 1] = i + 1;
        }
        Permutation { img }
    }

    /// Coxeter length: the inversion count.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.img.len() {
            for j in i + 1..self.img.len() {
                if self.img[i] > self.img[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// A reduced word in adjacent transpositions, rightmost descent first
    /// when read as `w = s_{word[0]} s_{word[1]} ...` applied right to left.
    ///
    /// Repeatedly strips a descent: if `w(a) > w(a+1)` then `w s_a` is
    /// shorter, and `w = (w s_a) s_a` appends `a` to the word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.img.clone();
        let mut word = vec![];
        loop {
            // Find a descent of the one-line word; swapping it shortens w.
            let Some(a) = (0..w.len().saturating_sub(1)).find(|&a| w[a] > w[a + 1]) else {
                word.reverse();
                return word;
            };
            w.swap(a, a + 1);
            word.push(a + 1);
        }
    }

    /// Rebuilds a permutation from a word in adjacent transpositions
    /// (`w = s_{word[0]} s_{word[1]} ...`, leftmost applied last).
    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        let mut w = Permutation::identity(n);
        for &a in word {
            let s = Permutation::adjacent_transposition(n, a);
            w = w.compose(&s).expect("same size");
        }
        w
    }

    /// The largest `a` with `w(a) > w(a+1)`, if any; `None` exactly for the
    /// identity.
    pub fn last_descent(&self) -> Option<usize> {
        (1..self.n()).rfind(|&a| self.img[a - 1] > self.img[a])
    }

    /// Left action on a set partition by relabeling elements.
    pub fn act_set_partition(&self, a: &SetPartition) -> Result<SetPartition, CombinatError> {
        if self.n() != a.n() {
            return Err(CombinatError::SizeMismatch(self.n(), a.n()));
        }
        Ok(a.relabel(&self.img))
    }

    /// Left action on an ordered set partition: elements are relabeled,
    /// each block keeping its place in the order.
    pub fn act_ordered(
        &self,
        a: &OrderedSetPartition,
    ) -> Result<OrderedSetPartition, CombinatError> {
        if self.n() != a.n() {
            return Err(CombinatError::SizeMismatch(self.n(), a.n()));
        }
        Ok(a.relabel(&self.img))
    }

    /// Left place-permutation action on residue sequences: position `a`
    /// moves to position `w(a)`.
    pub fn act_residues(&self, r: &ResidueSeq) -> Result<ResidueSeq, CombinatError> {
        if self.n() != r.n() {
            return Err(CombinatError::SizeMismatch(self.n(), r.n()));
        }
        Ok(r.place_permute(&self.img))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// One-line notation in brackets: `[2,3,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.img.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// All permutations of `{1..n}` in lexicographic one-line order.
pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    let mut out = vec![];
    let mut img: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { img: img.clone() });
        let Some(i) = (0..n.saturating_sub(1)).rfind(|&i| img[i] < img[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rfind(|&j| img[j] > img[i]).unwrap();
        img.swap(i, j);
        img[i + 1..].reverse();
    }
}

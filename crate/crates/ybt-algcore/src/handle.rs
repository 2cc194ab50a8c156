use crate::{AlgebraElement, AlgError};
use std::sync::{Arc, OnceLock};
use ybt_scalar::{FieldCtx, FieldScalar};

/// A sparse row: basis indices paired with nonzero coefficients.
pub type SparseRow = Vec<(usize, FieldScalar)>;

/// The description a concrete algebra provides: a finite basis (addressed by
/// index; the concrete crate owns the key-to-index bijection), a generator
/// alphabet, a word in that alphabet for every basis element, and the sparse
/// right action of every letter on every basis element.
pub trait AlgebraSpec: Send + Sync {
    /// Identifies the algebra and its configuration, e.g.
    /// `"yokonuma;n=3;d=3;p=7;q=2;xi=2"`. Completely determines the tables:
    /// equal fingerprints mean interchangeable handles.
    fn fingerprint(&self) -> String;

    fn dim(&self) -> usize;

    fn field(&self) -> FieldCtx;

    /// The unit as a sparse combination of basis elements.
    fn unit(&self) -> SparseRow;

    fn generator_count(&self) -> usize;

    /// Printable name of a generator letter.
    fn generator_name(&self, g: usize) -> String;

    /// `basis[b] * letter[g]` as a sparse combination.
    fn right_mul(&self, b: usize, g: usize) -> SparseRow;

    /// A word `w` in letters with `basis[b] = unit * w[0] * w[1] * ...`.
    fn word(&self, b: usize) -> Vec<usize>;

    /// Printable label of a basis element.
    fn basis_label(&self, b: usize) -> String;
}

/// A concrete algebra ready for computation: the spec plus lazily memoized
/// per-letter action rows. Rows admit concurrent reads; a miss computes the
/// row once.
pub struct AlgebraHandle {
    spec: Box<dyn AlgebraSpec>,
    tables: Vec<Vec<OnceLock<Arc<SparseRow>>>>,
}

impl AlgebraHandle {
    /// Wraps a spec and spot-checks the unit and associativity axioms on a
    /// deterministic sample of basis elements.
    pub fn new(spec: Box<dyn AlgebraSpec>) -> Result<Arc<Self>, AlgError> {
        let tables = (0..spec.generator_count())
            .map(|_| (0..spec.dim()).map(|_| OnceLock::new()).collect())
            .collect();
        let handle = Arc::new(AlgebraHandle { spec, tables });
        handle.spot_check()?;
        Ok(handle)
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn field(&self) -> FieldCtx {
        self.spec.field()
    }

    pub fn fingerprint(&self) -> String {
        self.spec.fingerprint()
    }

    pub fn basis_label(&self, b: usize) -> String {
        self.spec.basis_label(b)
    }

    pub fn generator_count(&self) -> usize {
        self.spec.generator_count()
    }

    pub fn generator_name(&self, g: usize) -> String {
        self.spec.generator_name(g)
    }

    pub(crate) fn word(&self, b: usize) -> Vec<usize> {
        self.spec.word(b)
    }

    /// The memoized action row `basis[b] * letter[g]`.
    pub(crate) fn action_row(&self, g: usize, b: usize) -> Arc<SparseRow> {
        self.tables[g][b]
            .get_or_init(|| Arc::new(self.spec.right_mul(b, g)))
            .clone()
    }

    /// Number of action rows currently materialized (cache instrumentation).
    pub fn materialized_rows(&self) -> usize {
        self.tables
            .iter()
            .map(|rows| rows.iter().filter(|r| r.get().is_some()).count())
            .sum()
    }

    pub(crate) fn prefill_row(&self, g: usize, b: usize, row: SparseRow) {
        let _ = self.tables[g][b].set(Arc::new(row));
    }

    /// The unit element.
    pub fn unit(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement::from_rows(self.clone(), self.spec.unit())
    }

    /// The zero element.
    pub fn zero(self: &Arc<Self>) -> AlgebraElement {
        AlgebraElement::from_rows(self.clone(), vec![])
    }

    /// A single basis element.
    pub fn basis_element(self: &Arc<Self>, b: usize) -> AlgebraElement {
        assert!(b < self.dim(), "basis index out of range");
        AlgebraElement::from_rows(self.clone(), vec![(b, self.field().one())])
    }

    /// An element assembled from raw basis coordinates. Entries may repeat
    /// keys and arrive in any order; zero coefficients are dropped.
    pub fn element_from_coords(self: &Arc<Self>, coords: SparseRow) -> AlgebraElement {
        for (b, _) in &coords {
            assert!(*b < self.dim(), "basis index out of range");
        }
        AlgebraElement::from_rows(self.clone(), coords)
    }

    /// The image of a generator letter: `unit * letter`.
    pub fn generator_element(self: &Arc<Self>, g: usize) -> AlgebraElement {
        self.unit().apply_letter(g)
    }

    /// Build-time sanity: `unit * b = b * unit = b` and associativity on a
    /// deterministic sample of triples. Full-depth associativity sweeps live
    /// in the verification suites; this guards against wiring mistakes.
    fn spot_check(self: &Arc<Self>) -> Result<(), AlgError> {
        let dim = self.dim();
        if dim == 0 {
            return Ok(());
        }
        let unit = self.unit();
        // A small deterministic sample of basis indices.
        let sample: Vec<usize> = if dim <= 8 {
            (0..dim).collect()
        } else {
            let mut s = 1usize;
            (0..8)
                .map(|_| {
                    s = (s.wrapping_mul(
                        6364136223846793005) .wrapping_add(1442695040888963407))
                        >> 1;
                    s % dim
                })
                .collect()
        };
        for &b in &sample {
            let x = self.basis_element(b);
            let left = unit.mul(&x)?;
            let right = x.mul(&unit)?;
            if left != x || right != x {
                return Err(AlgError::InconsistentTables(format!(
                    "unit law fails on basis element {}",
                    self.basis_label(b)
                )));
            }
        }
        for (i, &a) in sample.iter().enumerate() {
            let b = sample[(i + 1) % sample.len()];
            let c = sample[(i + 2) % sample.len()];
            let (xa, xb, xc) =
                (self.basis_element(a), self.basis_element(b), self.basis_element(c));
            let lhs = xa.mul(&xb)?.mul(&xc)?;
            let rhs = xa.mul(&xb.mul(&xc)?)?;
            if lhs != rhs {
                return Err(AlgError::InconsistentTables(format!(
                    "associativity fails on ({}, {}, {})",
                    self.basis_label(a),
                    self.basis_label(b),
                    self.basis_label(c)
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for AlgebraHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AlgebraHandle({}, dim {})", self.fingerprint(), self.dim())
    }
}

use crate::handle::AlgebraHandle;
use crate::{AlgebraElement, AlgError};
use std::sync::Arc;

/// A reduced row-echelon basis of a subspace, built incrementally. The pivot
/// of a row is its lowest nonzero basis index, pivots are pairwise distinct,
/// every pivot coefficient is one, and every other row vanishes at it, so
/// the stored rows are a canonical basis of the span regardless of insertion
/// order.
pub struct Echelon {
    rows: Vec<AlgebraElement>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[AlgebraElement] {
        &self.rows
    }

    fn pivot(x: &AlgebraElement) -> Option<usize> {
        x.iter().next().map(|(b, _)| b)
    }

    /// Residual of `x` after subtracting the pivot rows.
    pub fn reduce(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgError> {
        let mut r = x.clone();
        for row in &self.rows {
            let p = Self::pivot(row).expect("echelon rows are nonzero");
            let c = r.coeff(p);
            if !c.is_zero() {
                r = r.sub(&row.scale(&c))?;
            }
        }
        Ok(r)
    }

    pub fn contains(&self, x: &AlgebraElement) -> Result<bool, AlgError> {
        Ok(self.reduce(x)?.is_zero())
    }

    /// Inserts `x`, keeping the basis reduced. Returns whether the rank grew.
    pub fn push(&mut self, x: AlgebraElement) -> Result<bool, AlgError> {
        let r = self.reduce(&x)?;
        let Some(p) = Self::pivot(&r) else {
            return Ok(false);
        };
        let r = r.scale(&r.coeff(p).inv()?);
        for row in &mut self.rows {
            let c = row.coeff(p);
            if !c.is_zero() {
                *row = row.sub(&r.scale(&c))?;
            }
        }
        let at = self
            .rows
            .partition_point(|row| Self::pivot(row).expect("nonzero") < p);
        self.rows.insert(at, r);
        Ok(true)
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Echelon::new()
    }
}

/// The linear span of the unital subalgebra generated by `gens`: seeds the
/// unit and the generators, then closes under right multiplication by the
/// generators until the rank stabilizes. The result does not depend on the
/// order of `gens`, and running the closure on its own rows is a fixed
/// point.
pub fn span_closure(
    handle: &Arc<AlgebraHandle>,
    gens: &[AlgebraElement],
) -> Result<Echelon, AlgError> {
    let mut ech = Echelon::new();
    let mut frontier = vec![];
    let unit = handle.unit();
    if ech.push(unit.clone())? {
        frontier.push(unit);
    }
    for g in gens {
        if ech.push(g.clone())? {
            frontier.push(g.clone());
        }
    }
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g)?;
            if ech.push(y.clone())? {
                frontier.push(y);
            }
        }
    }
    Ok(ech)
}

use crate::handle::{AlgebraHandle, SparseRow};
use crate::AlgError;
use std::collections::BTreeMap;
use std::sync::Arc;
use ybt_scalar::FieldScalar;

/// An element of an algebra, stored as a sparse coefficient vector over the
/// handle's basis. Coefficients are never zero; iteration order is by basis
/// index, so equal elements print and hash identically.
#[derive(Clone)]
pub struct AlgebraElement {
    handle: Arc<AlgebraHandle>,
    coeffs: BTreeMap<usize, FieldScalar>,
}

impl AlgebraElement {
    pub(crate) fn from_rows(handle: Arc<AlgebraHandle>, rows: SparseRow) -> Self {
        let mut coeffs = BTreeMap::new();
        for (b, c) in rows {
            accumulate(&mut coeffs, b, c);
        }
        AlgebraElement { handle, coeffs }
    }

    pub fn handle(&self) -> &Arc<AlgebraHandle> {
        &self.handle
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of a basis element (zero if absent).
    pub fn coeff(&self, b: usize) -> FieldScalar {
        self.coeffs
            .get(&b)
            .cloned()
            .unwrap_or_else(|| self.handle.field().zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &FieldScalar)> {
        self.coeffs.iter().map(|(&b, c)| (b, c))
    }

    fn check_same_handle(&self, other: &Self) -> Result<(), AlgError> {
        let same = Arc::ptr_eq(&self.handle, &other.handle)
            || self.handle.fingerprint() == other.handle.fingerprint();
        if same {
            Ok(())
        } else {
            Err(AlgError::HandleMismatch(
                self.handle.fingerprint(),
                other.handle.fingerprint(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_same_handle(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&b, c) in &other.coeffs {
            accumulate(&mut coeffs, b, c.clone());
        }
        Ok(AlgebraElement { handle: self.handle.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&b, c)| (b, c.neg())).collect();
        AlgebraElement { handle: self.handle.clone(), coeffs }
    }

    pub fn scale(&self, s: &FieldScalar) -> Self {
        if s.is_zero() {
            return AlgebraElement { handle: self.handle.clone(), coeffs: BTreeMap::new() };
        }
        let coeffs = self.coeffs.iter().map(|(&b, c)| (b, c.mul(s))).collect();
        AlgebraElement { handle: self.handle.clone(), coeffs }
    }

    /// Right multiplication by one generator letter, through the memoized
    /// action rows.
    pub(crate) fn apply_letter(&self, g: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        for (&b, c) in &self.coeffs {
            let row = self.handle.action_row(g, b);
            for (b2, c2) in row.iter() {
                accumulate(&mut coeffs, *b2, c.mul(c2));
            }
        }
        AlgebraElement { handle: self.handle.clone(), coeffs }
    }

    /// Product `self * other`. The right factor is decomposed into basis
    /// elements; each contributes `coefficient * (self * word)` where the
    /// word is streamed letter by letter through the action tables. No dense
    /// `dim^2 x dim` product table is ever formed.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_same_handle(other)?;
        let mut total = AlgebraElement {
            handle: self.handle.clone(),
            coeffs: BTreeMap::new(),
        };
        if self.is_zero() || other.is_zero() {
            return Ok(total);
        }
        for (&b, c) in &other.coeffs {
            let mut term = self.clone();
            for g in self.handle.word(b) {
                term = term.apply_letter(g);
                if term.is_zero() {
                    break;
                }
            }
            total = total.add(&term.scale(c))?;
        }
        Ok(total)
    }

    /// Nonnegative integer power (with `pow(0)` the unit).
    pub fn pow(&self, k: usize) -> Result<Self, AlgError> {
        let mut acc = self.handle.unit();
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn zero_like(&self) -> Self {
        AlgebraElement { handle: self.handle.clone(), coeffs: BTreeMap::new() }
    }

    /// The smallest basis index where the coefficients differ, with both
    /// values, or `None` when the elements are equal.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, FieldScalar, FieldScalar)> {
        let mut left = self.coeffs.iter().peekable();
        let mut right = other.coeffs.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => return None,
                (Some((&b, c)), None) => return Some((b, (*c).clone(), other.coeff(b))),
                (None, Some((&b, c))) => return Some((b, self.coeff(b), (*c).clone())),
                (Some((&bl, cl)), Some((&br, cr))) => {
                    if bl < br {
                        return Some((bl, (*cl).clone(), other.coeff(bl)));
                    }
                    if br < bl {
                        return Some((br, self.coeff(br), (*cr).clone()));
                    }
                    if cl != cr {
                        return Some((bl, (*cl).clone(), (*cr).clone()));
                    }
                    left.next();
                    right.next();
                }
            }
        }
    }
}

fn accumulate(coeffs: &mut BTreeMap<usize, FieldScalar>, b: usize, c: FieldScalar) {
    if c.is_zero() {
        return;
    }
    match coeffs.remove(&b) {
        None => {
            coeffs.insert(b, c);
        }
        Some(old) => {
            let sum = old.add(&c);
            if !sum.is_zero() {
                coeffs.insert(b, sum);
            }
        }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraElement {}

impl std::fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&b, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}", c, self.handle.basis_label(b))?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

use crate::{AlgebraElement, AlgError, FPoly};
use ybt_scalar::FieldScalar;

/// The minimal polynomial of `x`: the monic generator of the ideal of
/// polynomials vanishing on `x`. Computed by a Krylov sweep: powers of `x`
/// are reduced against an echelon basis whose rows remember the polynomial
/// that produced them, so the first dependent power hands back the relation
/// directly.
pub fn minimal_polynomial(x: &AlgebraElement) -> Result<FPoly, AlgError> {
    let ctx = x.handle().field();
    let dim = x.handle().dim();
    // Rows of the echelon, each paired with c(T) such that row = c(x).
    let mut rows: Vec<(AlgebraElement, FPoly)> = vec![];
    let mut power = x.handle().unit();
    for k in 0..=dim + 1 {
        let mut resid = power.clone();
        let mut poly = FPoly::one(ctx).shift(k);
        for (row, row_poly) in &rows {
            let p = row.iter().next().expect("echelon rows are nonzero").0;
            let c = resid.coeff(p);
            if !c.is_zero() {
                resid = resid.sub(&row.scale(&c))?;
                poly = poly.sub(&row_poly.scale(&c));
            }
        }
        match resid.iter().next().map(|(b, _)| b) {
            None => {
                // The accumulated combination is monic of degree k by
                // construction, so it is the minimal polynomial.
                return Ok(poly);
            }
            Some(p) => {
                let inv = resid.coeff(p).inv()?;
                rows.push((resid.scale(&inv), poly.scale(&inv)));
                rows.sort_by_key(|(row, _)| row.iter().next().unwrap().0);
            }
        }
        power = power.mul(x)?;
    }
    unreachable!("a dependency must appear within dim+1 powers");
}

/// Splits the minimal polynomial of `x` over the supplied eigenvalue list
/// and returns the generalized eigenprojector for each entry, in order. An
/// eigenvalue that is not a root gets the zero projector. If the minimal
/// polynomial has a factor avoiding every listed eigenvalue, the list cannot
/// split `x` and the residual degree is reported.
///
/// The projectors are the standard partial-fraction idempotents: with
/// `m = prod (T - lam)^{k_lam} `, the projector for `lam` is
/// `u(x) * (m / (T - lam)^{k_lam})(x)` where `u` inverts the cofactor
/// modulo `(T - lam)^{k_lam}`. They sum to the unit, are orthogonal, and
/// `(x - lam)^{k_lam}` kills the image of the `lam` projector.
pub fn generalized_eigenprojectors(
    x: &AlgebraElement,
    eigenvalues: &[FieldScalar],
) -> Result<Vec<AlgebraElement>, AlgError> {
    let ctx = x.handle().field();
    let m = minimal_polynomial(x)?;
    // Distinct eigenvalues, keeping first positions for the output map.
    let mut distinct: Vec<FieldScalar> = vec![];
    for lam in eigenvalues {
        if !distinct.iter().any(|mu| mu == lam) {
            distinct.push(lam.clone());
        }
    }
    // Extract (T - lam)^{k} factors.
    let mut residual = m.clone();
    let mut mult = vec![0usize; distinct.len()];
    for (i, lam) in distinct.iter().enumerate() {
        let linear = FPoly::gen(ctx).sub(&FPoly::constant(lam.clone()));
        loop {
            let (q, r) = residual.divmod(&linear)?;
            if r.is_zero() {
                residual = q;
                mult[i] += 1;
            } else {
                break;
            }
        }
    }
    if residual.degree() > 0 {
        return Err(AlgError::NonSplittingMinPoly { residual_degree: residual.degree() });
    }
    let mut proj_by_distinct: Vec<AlgebraElement> = Vec::with_capacity(distinct.len());
    for (i, lam) in distinct.iter().enumerate() {
        if mult[i] == 0 {
            proj_by_distinct.push(x.zero_like());
            continue;
        }
        let linear = FPoly::gen(ctx).sub(&FPoly::constant(lam.clone()));
        let mut primary = FPoly::one(ctx);
        for _ in 0..mult[i] {
            primary = primary.mul(&linear);
        }
        let (cofactor, rem) = m.divmod(&primary)?;
        debug_assert!(rem.is_zero());
        let (g, u, _) = cofactor.xgcd(&primary)?;
        debug_assert_eq!(g.degree(), 0);
        // g is monic of degree zero, hence exactly one; u * cofactor = 1
        // modulo primary, so (u * cofactor)(x) is the projector.
        let combo = u.mul(&cofactor);
        let (_, reduced) = combo.divmod(&m)?;
        proj_by_distinct.push(reduced.eval_at(x)?);
    }
    let mut out = Vec::with_capacity(eigenvalues.len());
    for lam in eigenvalues {
        let i = distinct.iter().position(|mu| mu == lam).unwrap();
        out.push(proj_by_distinct[i].clone());
    }
    Ok(out)
}

/// The least `k` with `x^k = 0`, or an error when `x` is not nilpotent.
/// Read off the minimal polynomial: `x` is nilpotent exactly when it is a
/// power of `T`.
pub fn nilpotency_index(x: &AlgebraElement) -> Result<usize, AlgError> {
    let m = minimal_polynomial(x)?;
    match m.valuation() {
        Some(k) if k == m.degree() => Ok(k),
        _ => Err(AlgError::NotNilpotent),
    }
}

/// Solves `(c + nilp) * z = localizer` by the finite Neumann series
/// `z = c^{-1} * sum_m (-c^{-1} nilp)^m * localizer`, truncated where the
/// terms vanish. The caller guarantees that `nilp` acts nilpotently on the
/// image of `localizer` and commutes with it; a zero `c` has no inverse and
/// is rejected, and a series that fails to terminate within the algebra
/// dimension reports the operand as not nilpotent.
pub fn invert_unit_plus_nilpotent(
    c: &FieldScalar,
    nilp: &AlgebraElement,
    localizer: &AlgebraElement,
) -> Result<AlgebraElement, AlgError> {
    if c.is_zero() {
        return Err(AlgError::ZeroScalar);
    }
    let cinv = c.inv()?;
    let step = cinv.neg();
    let mut term = localizer.scale(&cinv);
    let mut acc = term.clone();
    for _ in 0..=nilp.handle().dim() {
        term = nilp.mul(&term)?.scale(&step);
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.add(&term)?;
    }
    Err(AlgError::NotNilpotent)
}

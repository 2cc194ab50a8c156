//! Exercises the algebra engine on three small hand-checkable algebras: the
//! group algebra of the symmetric group on three letters, the group algebra
//! of a cyclic group, and a truncated polynomial ring.

use proptest::prelude::*;
use std::sync::Arc;
use ybt_algcore::{
    generalized_eigenprojectors, invert_unit_plus_nilpotent, load_cached_tables,
    minimal_polynomial, nilpotency_index, save_tables, span_closure, AlgError, AlgebraHandle,
    AlgebraSpec, Echelon, FPoly, SparseRow,
};
use ybt_scalar::{FieldCtx, FieldScalar, PrimeFieldCtx};

/// Permutations of three letters, identity first, with reduced words below.
const PERMS: [[usize; 3]; 6] = [
    [1, 2, 3],
    [2, 1, 3],
    [1, 3, 2],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];
const WORDS: [&[usize]; 6] = [&[], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]];

/// Composition with the right factor applied first.
fn compose(a: usize, b: usize) -> usize {
    let w = PERMS[a];
    let s = PERMS[b];
    let p = [w[s[0] - 1], w[s[1] - 1], w[s[2] - 1]];
    PERMS.iter().position(|q| *q == p).unwrap()
}

struct Sym3Spec {
    ctx: FieldCtx,
}

impl AlgebraSpec for Sym3Spec {
    fn fingerprint(&self) -> String {
        format!("test-sym3;{}", self.ctx)
    }
    fn dim(&self) -> usize {
        6
    }
    fn field(&self) -> FieldCtx {
        self.ctx
    }
    fn unit(&self) -> SparseRow {
        vec![(0, self.ctx.one())]
    }
    fn generator_count(&self) -> usize {
        2
    }
    fn generator_name(&self, g: usize) -> String {
        format!("s{}", g + 1)
    }
    fn right_mul(&self, b: usize, g: usize) -> SparseRow {
        let s = if g == 0 { 1 } else { 2 };
        vec![(compose(b, s), self.ctx.one())]
    }
    fn word(&self, b: usize) -> Vec<usize> {
        WORDS[b].to_vec()
    }
    fn basis_label(&self, b: usize) -> String {
        format!("[{}{}{}]", PERMS[b][0], PERMS[b][1], PERMS[b][2])
    }
}

/// Group algebra of a cyclic group of order `d`, generated by `t`.
struct CyclicSpec {
    ctx: FieldCtx,
    d: usize,
}

impl AlgebraSpec for CyclicSpec {
    fn fingerprint(&self) -> String {
        format!("test-cyclic;d={};{}", self.d, self.ctx)
    }
    fn dim(&self) -> usize {
        self.d
    }
    fn field(&self) -> FieldCtx {
        self.ctx
    }
    fn unit(&self) -> SparseRow {
        vec![(0, self.ctx.one())]
    }
    fn generator_count(&self) -> usize {
        1
    }
    fn generator_name(&self, _g: usize) -> String {
        "t".into()
    }
    fn right_mul(&self, b: usize, _g: usize) -> SparseRow {
        vec![((b + 1) % self.d, self.ctx.one())]
    }
    fn word(&self, b: usize) -> Vec<usize> {
        vec![0; b]
    }
    fn basis_label(&self, b: usize) -> String {
        format!("t^{}", b)
    }
}

/// Truncated polynomial ring on a nilpotent generator `u` with `u^k = 0`.
struct TruncSpec {
    ctx: FieldCtx,
    k: usize,
}

impl AlgebraSpec for TruncSpec {
    fn fingerprint(&self) -> String {
        format!("test-trunc;k={};{}", self.k, self.ctx)
    }
    fn dim(&self) -> usize {
        self.k
    }
    fn field(&self) -> FieldCtx {
        self.ctx
    }
    fn unit(&self) -> SparseRow {
        vec![(0, self.ctx.one())]
    }
    fn generator_count(&self) -> usize {
        1
    }
    fn generator_name(&self, _g: usize) -> String {
        "u".into()
    }
    fn right_mul(&self, b: usize, _g: usize) -> SparseRow {
        if b + 1 < self.k {
            vec![(b + 1, self.ctx.one())]
        } else {
            vec![]
        }
    }
    fn word(&self, b: usize) -> Vec<usize> {
        vec![0; b]
    }
    fn basis_label(&self, b: usize) -> String {
        format!("u^{}", b)
    }
}

fn f(p: u64) -> FieldCtx {
    FieldCtx::Prime(PrimeFieldCtx::new(p).unwrap())
}

fn sym3(p: u64) -> Arc<AlgebraHandle> {
    AlgebraHandle::new(Box::new(Sym3Spec { ctx: f(p) })).unwrap()
}

fn cyclic(p: u64, d: usize) -> Arc<AlgebraHandle> {
    AlgebraHandle::new(Box::new(CyclicSpec { ctx: f(p), d })).unwrap()
}

fn trunc(p: u64, k: usize) -> Arc<AlgebraHandle> {
    AlgebraHandle::new(Box::new(TruncSpec { ctx: f(p), k })).unwrap()
}

#[test]
fn products_match_group_composition() {
    let h = sym3(7);
    for a in 0..6 {
        for b in 0..6 {
            let prod = h.basis_element(a).mul(&h.basis_element(b)).unwrap();
            assert_eq!(prod, h.basis_element(compose(a, b)), "{a} * {b}");
        }
    }
}

#[test]
fn associativity_exhaustive_on_basis() {
    let h = sym3(7);
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                let (xa, xb, xc) =
                    (h.basis_element(a), h.basis_element(b), h.basis_element(c));
                let lhs = xa.mul(&xb).unwrap().mul(&xc).unwrap();
                let rhs = xa.mul(&xb.mul(&xc).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn mixing_handles_is_reported() {
    let h7 = cyclic(7, 4);
    let h5 = cyclic(5, 4);
    let err = h7.unit().mul(&h5.unit()).unwrap_err();
    assert!(matches!(err, AlgError::HandleMismatch(_, _)));
    assert!(h7.unit().add(&h5.unit()).is_err());
}

#[test]
fn equal_fingerprints_are_interchangeable() {
    let h1 = cyclic(7, 4);
    let h2 = cyclic(7, 4);
    let t1 = h1.generator_element(0);
    let t2 = h2.generator_element(0);
    assert_eq!(t1.mul(&t2).unwrap(), h1.basis_element(2));
}

#[test]
fn minimal_polynomials() {
    let h = cyclic(13, 4);
    let t = h.generator_element(0);
    // t^4 = 1 and no lower power is scalar, so the minimal polynomial is
    // T^4 - 1.
    let ctx = h.field();
    let mut expect = FPoly::one(ctx).shift(4);
    expect = expect.sub(&FPoly::one(ctx));
    assert_eq!(minimal_polynomial(&t).unwrap(), expect);

    assert_eq!(minimal_polynomial(&h.unit()).unwrap().degree(), 1);
    assert_eq!(minimal_polynomial(&h.zero()).unwrap(), FPoly::gen(ctx));

    let hu = trunc(7, 3);
    let u = hu.generator_element(0);
    assert_eq!(minimal_polynomial(&u).unwrap(), FPoly::one(hu.field()).shift(3));
}

#[test]
fn eigenprojectors_split_the_unit() {
    // Over F_13 the fourth roots of unity are 1, 5, 12, 8.
    let h = cyclic(13, 4);
    let t = h.generator_element(0);
    let ctx = h.field();
    let eigen: Vec<FieldScalar> =
        [1u64, 5, 12, 8].iter().map(|&a| ctx.from_residue(a)).collect();
    let projs = generalized_eigenprojectors(&t, &eigen).unwrap();
    assert_eq!(projs.len(), 4);
    let mut sum = h.zero();
    for p in &projs {
        sum = sum.add(p).unwrap();
        assert_eq!(p.mul(p).unwrap(), *p, "idempotent");
    }
    assert_eq!(sum, h.unit(), "projectors resolve the unit");
    for (i, p) in projs.iter().enumerate() {
        for (j, q) in projs.iter().enumerate() {
            if i != j {
                assert!(p.mul(q).unwrap().is_zero(), "orthogonal");
            }
        }
        // Semisimple here, so t acts on each image as its eigenvalue.
        assert_eq!(t.mul(p).unwrap(), p.scale(&eigen[i]));
    }
}

#[test]
fn non_root_eigenvalue_gets_zero_projector() {
    let h = cyclic(13, 4);
    let t = h.generator_element(0);
    let ctx = h.field();
    let eigen: Vec<FieldScalar> =
        [1u64, 5, 12, 8, 2].iter().map(|&a| ctx.from_residue(a)).collect();
    let projs = generalized_eigenprojectors(&t, &eigen).unwrap();
    assert!(projs[4].is_zero());
}

#[test]
fn non_splitting_minimal_polynomial_is_reported() {
    // Over F_7 the polynomial T^4 - 1 factors as (T-1)(T+1)(T^2+1) with the
    // quadratic irreducible, so 1 and -1 alone cannot split t.
    let h = cyclic(7, 4);
    let t = h.generator_element(0);
    let ctx = h.field();
    let eigen = vec![ctx.one(), ctx.from_int(-1)];
    match generalized_eigenprojectors(&t, &eigen) {
        Err(AlgError::NonSplittingMinPoly { residual_degree }) => {
            assert_eq!(residual_degree, 2);
        }
        other => panic!("expected a non-splitting report, got {:?}", other),
    }
}

#[test]
fn repeated_root_projectors() {
    let h = trunc(7, 3);
    let u = h.generator_element(0);
    let one_plus_u = h.unit().add(&u).unwrap();
    // Minimal polynomial (T-1)^3: a single generalized eigenvalue.
    let ctx = h.field();
    let projs =
        generalized_eigenprojectors(&one_plus_u, &[ctx.one(), ctx.zero()]).unwrap();
    assert_eq!(projs[0], h.unit());
    assert!(projs[1].is_zero());
}

#[test]
fn nilpotency_indices() {
    let h = trunc(7, 3);
    let u = h.generator_element(0);
    assert_eq!(nilpotency_index(&u).unwrap(), 3);
    assert_eq!(nilpotency_index(&u.mul(&u).unwrap()).unwrap(), 2);
    assert_eq!(nilpotency_index(&h.zero()).unwrap(), 1);
    assert!(matches!(nilpotency_index(&h.unit()), Err(AlgError::NotNilpotent)));
}

#[test]
fn neumann_inversion() {
    let h = trunc(7, 3);
    let u = h.generator_element(0);
    let ctx = h.field();
    let c = ctx.from_residue(2);
    let z = invert_unit_plus_nilpotent(&c, &u, &h.unit()).unwrap();
    let target = h.unit().scale(&c).add(&u).unwrap();
    assert_eq!(target.mul(&z).unwrap(), h.unit());
    assert_eq!(z.mul(&target).unwrap(), h.unit());

    assert!(matches!(
        invert_unit_plus_nilpotent(&ctx.zero(), &u, &h.unit()),
        Err(AlgError::ZeroScalar)
    ));
    assert!(matches!(
        invert_unit_plus_nilpotent(&c, &h.unit(), &h.unit()),
        Err(AlgError::NotNilpotent)
    ));
}

#[test]
fn neumann_inversion_respects_localizer() {
    // Localize at an idempotent of the group algebra: on the image of
    // (1 + s1)/2 the element s1 - 1 acts as zero, so it counts as nilpotent
    // there even though it is not nilpotent globally.
    let h = sym3(7);
    let ctx = h.field();
    let s1 = h.generator_element(0);
    let half = ctx.from_residue(2).inv().unwrap();
    let idem = h.unit().add(&s1).unwrap().scale(&half);
    let nilp = s1.sub(&h.unit()).unwrap();
    let z = invert_unit_plus_nilpotent(&ctx.from_residue(3), &nilp, &idem).unwrap();
    let target = h.unit().scale(&ctx.from_residue(3)).add(&nilp).unwrap();
    assert_eq!(target.mul(&z).unwrap(), idem);
}

#[test]
fn span_closure_ranks() {
    let h = sym3(7);
    let s1 = h.generator_element(0);
    let s2 = h.generator_element(1);
    assert_eq!(span_closure(&h, &[s1.clone()]).unwrap().rank(), 2);
    assert_eq!(span_closure(&h, &[s1.clone(), s2.clone()]).unwrap().rank(), 6);
    // Monotone in the generating set.
    assert!(span_closure(&h, &[s1.clone()]).unwrap().rank() <= 6);
    // Idempotent: closing the closure's rows changes nothing.
    let first = span_closure(&h, &[s1, s2]).unwrap();
    let again = span_closure(&h, first.rows()).unwrap();
    assert_eq!(again.rank(), first.rank());
}

#[test]
fn closure_of_one_element_has_minpoly_degree() {
    let h = cyclic(13, 4);
    let t = h.generator_element(0);
    let deg = minimal_polynomial(&t).unwrap().degree();
    assert_eq!(span_closure(&h, &[t]).unwrap().rank(), deg);

    let hu = trunc(7, 3);
    let u = hu.generator_element(0);
    let x = hu.unit().add(&u).unwrap();
    let deg = minimal_polynomial(&x).unwrap().degree();
    assert_eq!(span_closure(&hu, &[x]).unwrap().rank(), deg);
}

#[test]
fn echelon_is_reduced_with_lowest_pivots() {
    let h = cyclic(7, 4);
    let b0 = h.basis_element(0);
    let b1 = h.basis_element(1);
    let mut ech = Echelon::new();
    assert!(ech.push(b0.add(&b1).unwrap()).unwrap());
    assert!(ech.push(b0.clone()).unwrap());
    assert!(!ech.push(b1.clone()).unwrap());
    // Back-substitution leaves the two unit vectors, sorted by pivot.
    assert_eq!(ech.rows().to_vec(), vec![b0, b1.clone()]);
    assert!(ech.contains(&b1.scale(&h.field().from_residue(5))).unwrap());
    assert!(!ech.contains(&h.basis_element(2)).unwrap());
}

#[test]
fn cache_round_trip_and_refusals() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let h = sym3(7);
    let saved = save_tables(&h, &path).unwrap();
    assert_eq!(saved, 12);

    let fresh = sym3(7);
    let loaded = load_cached_tables(&fresh, &path).unwrap();
    assert_eq!(loaded, 12);
    assert_eq!(fresh.materialized_rows(), 12);
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(
                fresh.basis_element(a).mul(&fresh.basis_element(b)).unwrap(),
                fresh.basis_element(compose(a, b))
            );
        }
    }

    // A handle with a different fingerprint refuses the file.
    let other = sym3(5);
    assert!(matches!(
        load_cached_tables(&other, &path),
        Err(AlgError::CacheRejected(_))
    ));

    // A tampered version is refused.
    let json = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, json.replace("\"version\":1", "\"version\":2")).unwrap();
    assert!(matches!(
        load_cached_tables(&sym3(7), &path),
        Err(AlgError::CacheRejected(_))
    ));
}

#[test]
fn cache_round_trip_over_rational_functions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    let ctx = FieldCtx::Rational(PrimeFieldCtx::new(7).unwrap());
    let h = AlgebraHandle::new(Box::new(TruncSpec { ctx, k: 3 })).unwrap();
    save_tables(&h, &path).unwrap();
    let fresh = AlgebraHandle::new(Box::new(TruncSpec { ctx, k: 3 })).unwrap();
    load_cached_tables(&fresh, &path).unwrap();
    let u = fresh.generator_element(0);
    assert_eq!(u.mul(&u).unwrap(), fresh.basis_element(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Associativity and distributivity hold for random elements, not just
    /// basis vectors.
    #[test]
    fn random_elements_associate_and_distribute(
        xs in prop::collection::vec(0u64..7, 6),
        ys in prop::collection::vec(0u64..7, 6),
        zs in prop::collection::vec(0u64..7, 6),
    ) {
        let h = sym3(7);
        let ctx = h.field();
        let build = |cs: &[u64]| {
            let mut acc = h.zero();
            for (b, &c) in cs.iter().enumerate() {
                acc = acc.add(&h.basis_element(b).scale(&ctx.from_residue(c))).unwrap();
            }
            acc
        };
        let (x, y, z) = (build(&xs), build(&ys), build(&zs));
        prop_assert_eq!(
            x.mul(&y).unwrap().mul(&z).unwrap(),
            x.mul(&y.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
    }
}

use crate::algebra::Bt;
use crate::family::BlockFamily;
use ybt_algcore::{expect_elements_equal, AlgebraElement, SuiteBuilder, SuiteReport, Verdict};
use ybt_combinat::Permutation;

/// Which defining presentation to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationKind {
    /// Generators `g_a`, `e_a` and the ten tie relations.
    Classical,
    /// Generators `g_a`, `ebar(A)` and the seven orthogonal relations.
    Orthogonal,
}

/// Instantiates every relation of the chosen presentation over all
/// admissible indices and checks it exactly.
pub fn presentation_suite<F: BlockFamily>(alg: &Bt<F>, kind: PresentationKind) -> SuiteReport {
    match kind {
        PresentationKind::Classical => classical_presentation_suite(alg),
        PresentationKind::Orthogonal => orthogonal_presentation_suite(alg),
    }
}

fn suite_prefix<F: BlockFamily>() -> &'static str {
    if F::KIND == "setpar" {
        "bt"
    } else {
        "btord"
    }
}

fn mul(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    x.mul(y).expect("same handle")
}

fn add(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    x.add(y).expect("same handle")
}

/// The presentation on the braid generators and the tie generators
/// `e_a`, realized here as sums of orthogonal block idempotents.
pub fn classical_presentation_suite<F: BlockFamily>(alg: &Bt<F>) -> SuiteReport {
    let n = alg.n();
    let q = alg.q().clone();
    let qm1 = q.sub(&alg.ctx().one());
    let unit = alg.unit();
    let g: Vec<AlgebraElement> = (1..n).map(|a| alg.g(a)).collect();
    let e: Vec<AlgebraElement> = (1..n).map(|a| alg.e_adj(a)).collect();

    let mut sb = SuiteBuilder::new(format!("{}-classical", suite_prefix::<F>()));
    for a in 1..n {
        let (ga, ea) = (&g[a - 1], &e[a - 1]);
        sb.check(format!("ge-commute@a={a}"), move || {
            expect_elements_equal(&mul(ga, ea), &mul(ea, ga))
        });
        sb.check(format!("e-idempotent@a={a}"), move || {
            expect_elements_equal(&mul(ea, ea), ea)
        });
        let (q, qm1, unit) = (&q, &qm1, &unit);
        sb.check(format!("g-quadratic@a={a}"), move || {
            let rhs = add(&unit.scale(q), &mul(ea, ga).scale(qm1));
            expect_elements_equal(&mul(ga, ga), &rhs)
        });
    }
    for a in 1..n {
        for b in 1..n {
            let (ga, gb) = (&g[a - 1], &g[b - 1]);
            let (ea, eb) = (&e[a - 1], &e[b - 1]);
            if b == a + 1 {
                sb.check(format!("braid@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(&mul(ga, gb), ga), &mul(&mul(gb, ga), gb))
                });
            }
            if a.abs_diff(b) == 1 {
                sb.check(format!("e-slide@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(&mul(ea, gb), ga), &mul(&mul(gb, ga), eb))
                });
                sb.check(format!("e-sandwich-left@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(&mul(ea, eb), gb), &mul(&mul(ea, gb), ea))
                });
                sb.check(format!("e-sandwich-right@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(&mul(ea, gb), ea), &mul(&mul(gb, ea), eb))
                });
            }
            if a < b {
                sb.check(format!("e-commute@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(ea, eb), &mul(eb, ea))
                });
            }
            if a.abs_diff(b) > 1 {
                if a < b {
                    sb.check(format!("g-far-commute@a={a},b={b}"), move || {
                        expect_elements_equal(&mul(ga, gb), &mul(gb, ga))
                    });
                }
                sb.check(format!("eg-far-commute@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(ga, eb), &mul(eb, ga))
                });
            }
        }
    }
    sb.run()
}

/// The presentation on the braid generators and the orthogonal block
/// idempotents `ebar(A)`.
pub fn orthogonal_presentation_suite<F: BlockFamily>(alg: &Bt<F>) -> SuiteReport {
    let n = alg.n();
    let q = alg.q().clone();
    let qm1 = q.sub(&alg.ctx().one());
    let unit = alg.unit();
    let zero = alg.zero();
    let parts = alg.parts();
    let ebars: Vec<AlgebraElement> =
        parts.iter().map(|p| alg.ebar(p).expect("known part")).collect();
    let g: Vec<AlgebraElement> = (1..n).map(|a| alg.g(a)).collect();
    let sigma_part: Vec<Vec<usize>> = (1..n)
        .map(|a| {
            let s = Permutation::adjacent_transposition(n, a);
            parts
                .iter()
                .map(|p| {
                    let image = F::act(&s, p);
                    parts.iter().position(|x| *x == image).expect("closed under the action")
                })
                .collect()
        })
        .collect();

    let mut sb = SuiteBuilder::new(format!("{}-orthogonal", suite_prefix::<F>()));
    {
        let (ebars, unit, zero) = (&ebars, &unit, &zero);
        sb.check("ebar-complete", move || {
            let total = ebars.iter().fold(zero.clone(), |acc, x| add(&acc, x));
            expect_elements_equal(&total, unit)
        });
    }
    for (ai, pa) in parts.iter().enumerate() {
        let (ebars, zero) = (&ebars, &zero);
        sb.check(format!("ebar-orthogonal@A={pa}"), move || {
            for (bi, other) in ebars.iter().enumerate() {
                let expected = if ai == bi { &ebars[ai] } else { zero };
                if let Verdict::Fail(w) = expect_elements_equal(&mul(&ebars[ai], other), expected)
                {
                    return Verdict::Fail(format!("against B at position {bi}: {w}"));
                }
            }
            Verdict::Pass
        });
    }
    for a in 1..n {
        let ga = &g[a - 1];
        let (ebars, sigma, q, qm1) = (&ebars, &sigma_part[a - 1], &q, &qm1);
        sb.check(format!("ebar-switch@a={a}"), move || {
            for (pi, p) in parts.iter().enumerate() {
                let lhs = mul(ga, &ebars[pi]);
                let rhs = mul(&ebars[sigma[pi]], ga);
                if let Verdict::Fail(w) = expect_elements_equal(&lhs, &rhs) {
                    return Verdict::Fail(format!("block structure {p}: {w}"));
                }
            }
            Verdict::Pass
        });
        sb.check(format!("g-quadratic-split@a={a}"), move || {
            for (pi, p) in parts.iter().enumerate() {
                if F::joined(p, a) {
                    continue;
                }
                let lhs = mul(&mul(ga, ga), &ebars[pi]);
                if let Verdict::Fail(w) = expect_elements_equal(&lhs, &ebars[pi].scale(q)) {
                    return Verdict::Fail(format!("block structure {p}: {w}"));
                }
            }
            Verdict::Pass
        });
        sb.check(format!("g-quadratic-joined@a={a}"), move || {
            for (pi, p) in parts.iter().enumerate() {
                if !F::joined(p, a) {
                    continue;
                }
                let lhs = mul(&mul(ga, ga), &ebars[pi]);
                let rhs = add(&ebars[pi].scale(q), &mul(ga, &ebars[pi]).scale(qm1));
                if let Verdict::Fail(w) = expect_elements_equal(&lhs, &rhs) {
                    return Verdict::Fail(format!("block structure {p}: {w}"));
                }
            }
            Verdict::Pass
        });
    }
    for a in 1..n {
        for b in (a + 1)..n {
            let (ga, gb) = (&g[a - 1], &g[b - 1]);
            if b == a + 1 {
                sb.check(format!("braid@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(&mul(ga, gb), ga), &mul(&mul(gb, ga), gb))
                });
            } else {
                sb.check(format!("g-far-commute@a={a},b={b}"), move || {
                    expect_elements_equal(&mul(ga, gb), &mul(gb, ga))
                });
            }
        }
    }
    sb.run()
}

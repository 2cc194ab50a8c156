use crate::idempotents::ordered_level_sets;
use crate::{YAlgebra, YError};
use std::collections::{BTreeMap, BTreeSet};
use ybt_algcore::{
    expect_element_zero, expect_elements_equal, AlgebraElement, SuiteBuilder, SuiteReport, Verdict,
};
use ybt_combinat::{
    enumerate_multipartitions, enumerate_ordered_set_partitions, enumerate_set_partitions,
    enumerate_std, tableau_residue_data, OrderedSetPartition, Permutation, SetPartition,
};

/// Runs a fallible check body, folding construction errors into a failure.
fn attempt(f: impl FnOnce() -> Result<Verdict, YError>) -> Verdict {
    match f() {
        Ok(v) => v,
        Err(e) => Verdict::Fail(format!("construction error: {e}")),
    }
}

/// Prefixes a failing verdict's witness with the loop position it arose at.
fn tag(at: String, v: Verdict) -> Verdict {
    match v {
        Verdict::Fail(w) => Verdict::Fail(format!("{at}: {w}")),
        other => other,
    }
}

fn digits(v: &[u64]) -> String {
    v.iter().map(|x| x.to_string()).collect()
}

fn sum_elements(zero: AlgebraElement, parts: &[&AlgebraElement]) -> Result<AlgebraElement, YError> {
    let mut acc = zero;
    for p in parts {
        acc = acc.add(p)?;
    }
    Ok(acc)
}

/// Verifies the defining presentation, the framing idempotent calculus, the
/// Jucys-Murphy family, and the joint spectral idempotents, one named check
/// per identity family.
pub fn core_suite(y: &YAlgebra) -> Result<SuiteReport, YError> {
    let n = y.cfg().n();
    let d = y.cfg().d();
    let e = y.cfg().quantum_char();
    let q = y.cfg().q();
    let one = y.cfg().ctx().one();

    // Warm the lazy families once so the parallel checks share them.
    for a in 1..=n {
        let _ = y.x(a);
        let _ = y.x_inv(a);
    }
    for a in 1..n {
        let _ = y.g_inv(a);
    }
    let ej = y.ej_family()?;
    let zoo = match y.content_zoo() {
        Ok(z) => Some(z),
        Err(YError::ConfigInvalid(_)) => None,
        Err(err) => return Err(err),
    };

    let partitions = enumerate_set_partitions(n)?;
    let ordered = enumerate_ordered_set_partitions(n)?;
    let esets: Vec<(SetPartition, AlgebraElement)> = partitions
        .iter()
        .map(|p| Ok((p.clone(), y.e_set(p)?)))
        .collect::<Result<_, YError>>()?;
    let ebars: Vec<(SetPartition, AlgebraElement)> = partitions
        .iter()
        .map(|p| Ok((p.clone(), y.ebar_set(p)?)))
        .collect::<Result<_, YError>>()?;
    let ebars_ord: Vec<(OrderedSetPartition, AlgebraElement)> = ordered
        .iter()
        .map(|p| Ok((p.clone(), y.ebar_ord(p)?)))
        .collect::<Result<_, YError>>()?;
    let eadjs: Vec<AlgebraElement> = (1..n).map(|a| y.e_adj(a)).collect();
    let t_pows: Vec<Vec<AlgebraElement>> = (1..=n)
        .map(|a| (0..d).map(|r| y.t(a).pow(r as usize)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;

    // Which content labels the standard multitableaux predict to occur.
    let mut content_pred: BTreeSet<(Vec<u64>, Vec<u64>)> = BTreeSet::new();
    let mut setpar_pred: BTreeSet<(Vec<u64>, SetPartition)> = BTreeSet::new();
    let mut ordpar_pred: BTreeSet<(Vec<u64>, OrderedSetPartition)> = BTreeSet::new();
    if zoo.is_some() {
        for shape in enumerate_multipartitions(d as usize, n) {
            for t in enumerate_std(&shape) {
                let (i, a, a_ord) = tableau_residue_data(&t, e);
                let j: Vec<u64> = t.xi_exponents().iter().map(|&p| p as u64 % d).collect();
                content_pred.insert((i.clone(), j));
                setpar_pred.insert((i.clone(), a));
                ordpar_pred.insert((i, a_ord));
            }
        }
    }

    let mut sb = SuiteBuilder::new("yokonuma-core");
    let esets = &esets;
    let ebars = &ebars;
    let ebars_ord = &ebars_ord;
    let eadjs = &eadjs;
    let t_pows = &t_pows;
    let content_pred = &content_pred;
    let setpar_pred = &setpar_pred;
    let ordpar_pred = &ordpar_pred;
    let q = &q;
    let one = &one;
    let skip_zoo = || Verdict::Skip("content idempotents need q of finite order".into());

    let fact: usize = (1..=n).product();
    let expected_dim = fact * (d as usize).pow(n as u32);
    sb.check("dim", move || {
        Verdict::require(
            y.dim() == expected_dim,
            format!("dimension {}, expected {}", y.dim(), expected_dim),
        )
    });

    for a in 1..=n {
        sb.check(format!("t-order@a={a}"), move || {
            attempt(|| Ok(expect_elements_equal(&y.t(a).pow(d as usize)?, &y.unit())))
        });
    }
    for a in 1..=n {
        for b in a + 1..=n {
            sb.check(format!("t-commute@a={a},b={b}"), move || {
                attempt(|| {
                    Ok(expect_elements_equal(
                        &y.t(a).mul(&y.t(b))?,
                        &y.t(b).mul(&y.t(a))?,
                    ))
                })
            });
        }
    }
    for a in 1..n {
        for b in 1..=n {
            let image = if b == a {
                a + 1
            } else if b == a + 1 {
                a
            } else {
                b
            };
            sb.check(format!("t-past-g@a={a},b={b}"), move || {
                attempt(|| {
                    Ok(expect_elements_equal(
                        &y.g(a).mul(&y.t(b))?,
                        &y.t(image).mul(&y.g(a))?,
                    ))
                })
            });
        }
    }
    for a in 1..n {
        sb.check(format!("g-quadratic@a={a}"), move || {
            attempt(|| {
                let lhs = y.g(a).mul(&y.g(a))?;
                let rhs = y
                    .unit()
                    .scale(q)
                    .add(&eadjs[a - 1].mul(&y.g(a))?.scale(&q.sub(one)))?;
                Ok(expect_elements_equal(&lhs, &rhs))
            })
        });
    }
    for a in 1..n.saturating_sub(1) {
        sb.check(format!("g-braid@a={a}"), move || {
            attempt(|| {
                let lhs = y.g(a).mul(&y.g(a + 1))?.mul(&y.g(a))?;
                let rhs = y.g(a + 1).mul(&y.g(a))?.mul(&y.g(a + 1))?;
                Ok(expect_elements_equal(&lhs, &rhs))
            })
        });
    }
    for a in 1..n {
        for b in a + 2..n {
            sb.check(format!("g-commute@a={a},b={b}"), move || {
                attempt(|| {
                    Ok(expect_elements_equal(
                        &y.g(a).mul(&y.g(b))?,
                        &y.g(b).mul(&y.g(a))?,
                    ))
                })
            });
        }
    }
    for a in 1..n {
        sb.check(format!("g-inverse@a={a}"), move || {
            attempt(|| {
                let left = expect_elements_equal(&y.g(a).mul(&y.g_inv(a))?, &y.unit());
                let right = expect_elements_equal(&y.g_inv(a).mul(&y.g(a))?, &y.unit());
                Ok(left.and(right))
            })
        });
    }
    for a in 1..n {
        sb.check(format!("eadj-g-commute@a={a}"), move || {
            attempt(|| {
                Ok(expect_elements_equal(
                    &eadjs[a - 1].mul(&y.g(a))?,
                    &y.g(a).mul(&eadjs[a - 1])?,
                ))
            })
        });
    }

    for a in 1..=n {
        for b in a + 1..=n {
            sb.check(format!("e-pair-routes@a={a},b={b}"), move || {
                expect_elements_equal(&y.e_pair_sum(a, b), &y.e_pair_conj(a, b))
            });
            sb.check(format!("e-pair-idempotent@a={a},b={b}"), move || {
                attempt(|| {
                    let p = y.e_pair_sum(a, b);
                    Ok(expect_elements_equal(&p.mul(&p)?, &p))
                })
            });
            sb.check(format!("e-pair-via-j@a={a},b={b}"), move || {
                attempt(|| {
                    let mut acc = y.zero();
                    for (j, el) in ej {
                        if j[a - 1] == j[b - 1] {
                            acc = acc.add(el)?;
                        }
                    }
                    Ok(expect_elements_equal(&y.e_pair_sum(a, b), &acc))
                })
            });
        }
    }

    sb.check("e-set-join", move || {
        attempt(|| {
            for (pa, ea) in esets {
                for (pb, eb) in esets {
                    let jn = pa.join(pb)?;
                    let expected = &esets.iter().find(|(p, _)| *p == jn).expect("join enumerated").1;
                    let v = expect_elements_equal(&ea.mul(eb)?, expected);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={pa}, B={pb}"), v));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("e-set-via-j", move || {
        attempt(|| {
            for (p, el) in esets {
                let mut acc = y.zero();
                for (j, ejel) in ej {
                    if p.refines(&SetPartition::from_level_sets(j))? {
                        acc = acc.add(ejel)?;
                    }
                }
                let v = expect_elements_equal(el, &acc);
                if v != Verdict::Pass {
                    return Ok(tag(format!("A={p}"), v));
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("e-mobius-roundtrip", move || {
        attempt(|| {
            for (p, el) in esets {
                let mut acc = y.zero();
                for (pb, eb) in ebars {
                    if p.refines(pb)? {
                        acc = acc.add(eb)?;
                    }
                }
                let v = expect_elements_equal(el, &acc);
                if v != Verdict::Pass {
                    return Ok(tag(format!("A={p}"), v));
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-orthogonal", move || {
        attempt(|| {
            for (pa, ea) in ebars {
                for (pb, eb) in ebars {
                    let prod = ea.mul(eb)?;
                    let v = if pa == pb {
                        expect_elements_equal(&prod, ea)
                    } else {
                        expect_element_zero(&prod)
                    };
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={pa}, B={pb}"), v));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-complete", move || {
        attempt(|| {
            let parts: Vec<&AlgebraElement> = ebars.iter().map(|(_, el)| el).collect();
            Ok(expect_elements_equal(&sum_elements(y.zero(), &parts)?, &y.unit()))
        })
    });

    sb.check("ebar-levelsets", move || {
        attempt(|| {
            for (p, el) in ebars {
                let v = expect_elements_equal(el, &y.ebar_via_level_sets(p)?);
                if v != Verdict::Pass {
                    return Ok(tag(format!("A={p}"), v));
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-ord-partition", move || {
        attempt(|| {
            for (p, el) in ebars {
                let mut acc = y.zero();
                for (po, eo) in ebars_ord {
                    if po.unordered() == *p {
                        acc = acc.add(eo)?;
                    }
                }
                let v = expect_elements_equal(el, &acc);
                if v != Verdict::Pass {
                    return Ok(tag(format!("A={p}"), v));
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-ord-orthogonal", move || {
        attempt(|| {
            for (pa, ea) in ebars_ord {
                for (pb, eb) in ebars_ord {
                    let prod = ea.mul(eb)?;
                    let v = if pa == pb {
                        expect_elements_equal(&prod, ea)
                    } else {
                        expect_element_zero(&prod)
                    };
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={pa}, B={pb}"), v));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ej-complete", move || {
        attempt(|| {
            let parts: Vec<&AlgebraElement> = ej.iter().map(|(_, el)| el).collect();
            Ok(expect_elements_equal(&sum_elements(y.zero(), &parts)?, &y.unit()))
        })
    });

    sb.check("ej-orthogonal", move || {
        attempt(|| {
            for (ja, ea) in ej {
                for (jb, eb) in ej {
                    let prod = ea.mul(eb)?;
                    let v = if ja == jb {
                        expect_elements_equal(&prod, ea)
                    } else {
                        expect_element_zero(&prod)
                    };
                    if v != Verdict::Pass {
                        return Ok(tag(format!("j={}, j'={}", digits(ja), digits(jb)), v));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ej-closed-form", move || {
        attempt(|| {
            let d_inv = one.div(&y.cfg().ctx().from_int(d as i64))?;
            for (j, el) in ej {
                let mut acc = y.unit();
                for a in 1..=n {
                    let mut inner = y.zero();
                    for r in 0..d {
                        let w = y.cfg().xi_pow(-(j[a - 1] as i64) * r as i64);
                        inner = inner.add(&t_pows[a - 1][r as usize].scale(&w))?;
                    }
                    acc = acc.mul(&inner.scale(&d_inv))?;
                }
                let v = expect_elements_equal(el, &acc);
                if v != Verdict::Pass {
                    return Ok(tag(format!("j={}", digits(j)), v));
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ej-census", move || {
        let missing: Vec<String> = ej
            .iter()
            .filter(|(_, el)| el.is_zero())
            .map(|(j, _)| digits(j))
            .collect();
        Verdict::require(
            ej.len() == (d as usize).pow(n as u32) && missing.is_empty(),
            format!("vanishing framing idempotents at j in {missing:?}"),
        )
    });

    // The joint spectral family, available once q has finite order.
    sb.check("ek-complete", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            let parts: Vec<&AlgebraElement> =
                zoo.realized().iter().map(|(_, _, el)| el).collect();
            Ok(expect_elements_equal(&sum_elements(y.zero(), &parts)?, &y.unit()))
        })
    });

    sb.check("ek-census", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        let got: BTreeSet<(Vec<u64>, Vec<u64>)> = zoo
            .realized()
            .iter()
            .map(|(i, j, _)| (i.clone(), j.clone()))
            .collect();
        if got == *content_pred {
            return Verdict::Pass;
        }
        let extra: Vec<String> = got
            .difference(content_pred)
            .map(|(i, j)| format!("(i={},j={})", digits(i), digits(j)))
            .collect();
        let absent: Vec<String> = content_pred
            .difference(&got)
            .map(|(i, j)| format!("(i={},j={})", digits(i), digits(j)))
            .collect();
        Verdict::Fail(format!(
            "realized labels disagree with tableau census: unexpected {extra:?}, missing {absent:?}"
        ))
    });

    if let Some(zoo) = zoo {
        for (idx, (i, j, _)) in zoo.realized().iter().enumerate() {
            let label = format!("i={},j={}", digits(i), digits(j));
            sb.check(format!("ek-idempotent@{label}"), move || {
                attempt(|| {
                    let el = &zoo.realized()[idx].2;
                    Ok(expect_elements_equal(&el.mul(el)?, el))
                })
            });
            sb.check(format!("ek-orthogonal@{label}"), move || {
                attempt(|| {
                    let el = &zoo.realized()[idx].2;
                    for (other_idx, (oi, oj, other)) in zoo.realized().iter().enumerate() {
                        if other_idx <= idx {
                            continue;
                        }
                        let v = expect_element_zero(&el.mul(other)?)
                            .and(expect_element_zero(&other.mul(el)?));
                        if v != Verdict::Pass {
                            return Ok(tag(format!("against i={},j={}", digits(oi), digits(oj)), v));
                        }
                    }
                    Ok(Verdict::Pass)
                })
            });
        }
    }

    for a in 1..=n {
        sb.check(format!("ek-commute@a={a}"), move || {
            let Some(zoo) = zoo else { return skip_zoo() };
            attempt(|| {
                for (i, j, el) in zoo.realized() {
                    let vt = expect_elements_equal(&y.t(a).mul(el)?, &el.mul(&y.t(a))?);
                    let vx = expect_elements_equal(&y.x(a).mul(el)?, &el.mul(&y.x(a))?);
                    let v = tag("framing generator".into(), vt)
                        .and(tag("Jucys-Murphy element".into(), vx));
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={},j={}", digits(i), digits(j)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
    }

    sb.check("ei-marginal", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            for (i, ei_el) in zoo.realized_i() {
                let mut acc = y.zero();
                for (ik, _, el) in zoo.realized() {
                    if ik == i {
                        acc = acc.add(el)?;
                    }
                }
                let v = expect_elements_equal(ei_el, &acc);
                if v != Verdict::Pass {
                    return Ok(tag(format!("i={}", digits(i)), v));
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ej-marginal", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            for (j, ejel) in ej {
                let mut acc = y.zero();
                for (_, jk, el) in zoo.realized() {
                    if jk == j {
                        acc = acc.add(el)?;
                    }
                }
                let v = expect_elements_equal(ejel, &acc);
                if v != Verdict::Pass {
                    return Ok(tag(format!("j={}", digits(j)), v));
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ei-orthogonal", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            for (ia, ea) in zoo.realized_i() {
                for (ib, eb) in zoo.realized_i() {
                    let prod = ea.mul(eb)?;
                    let v = if ia == ib {
                        expect_elements_equal(&prod, ea)
                    } else {
                        expect_element_zero(&prod)
                    };
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, i'={}", digits(ia), digits(ib)), v));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-ia-routes", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            for (i, ei_el) in zoo.realized_i() {
                for (p, eb) in ebars {
                    let mut acc = y.zero();
                    for (j, _) in ej {
                        if SetPartition::from_level_sets(j) == *p {
                            if let Some(el) = zoo.lookup(i, j) {
                                acc = acc.add(el)?;
                            }
                        }
                    }
                    let v = expect_elements_equal(&ei_el.mul(eb)?, &acc);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-ia-ord-routes", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            for (i, ei_el) in zoo.realized_i() {
                for (p, eb) in ebars_ord {
                    let mut acc = y.zero();
                    for (j, _) in ej {
                        if ordered_level_sets(j, d) == p.blocks() {
                            if let Some(el) = zoo.lookup(i, j) {
                                acc = acc.add(el)?;
                            }
                        }
                    }
                    let v = expect_elements_equal(&ei_el.mul(eb)?, &acc);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-ia-census", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            for (i, ei_el) in zoo.realized_i() {
                for (p, eb) in ebars {
                    let nonzero = !ei_el.mul(eb)?.is_zero();
                    let predicted = setpar_pred.contains(&(i.clone(), p.clone()));
                    if nonzero != predicted {
                        return Ok(Verdict::Fail(format!(
                            "i={}, A={p}: nonzero {nonzero} but tableau census predicts {predicted}",
                            digits(i)
                        )));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    sb.check("ebar-ia-ord-census", move || {
        let Some(zoo) = zoo else { return skip_zoo() };
        attempt(|| {
            for (i, ei_el) in zoo.realized_i() {
                for (p, eb) in ebars_ord {
                    let nonzero = !ei_el.mul(eb)?.is_zero();
                    let predicted = ordpar_pred.contains(&(i.clone(), p.clone()));
                    if nonzero != predicted {
                        return Ok(Verdict::Fail(format!(
                            "i={}, A={p}: nonzero {nonzero} but tableau census predicts {predicted}",
                            digits(i)
                        )));
                    }
                }
            }
            Ok(Verdict::Pass)
        })
    });

    for a in 1..n {
        let sigma = Permutation::adjacent_transposition(n, a);
        let s1 = sigma.clone();
        sb.check(format!("switch-e-set@a={a}"), move || {
            attempt(|| {
                for (p, el) in esets {
                    let image = s1.act_set_partition(p)?;
                    let target = &esets.iter().find(|(pp, _)| *pp == image).expect("closed").1;
                    let v = expect_elements_equal(&y.g(a).mul(el)?, &target.mul(&y.g(a))?);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={p}"), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        let s2 = sigma.clone();
        sb.check(format!("switch-ebar@a={a}"), move || {
            attempt(|| {
                for (p, el) in ebars {
                    let image = s2.act_set_partition(p)?;
                    let target = &ebars.iter().find(|(pp, _)| *pp == image).expect("closed").1;
                    let v = expect_elements_equal(&y.g(a).mul(el)?, &target.mul(&y.g(a))?);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={p}"), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        let s3 = sigma.clone();
        sb.check(format!("switch-ebar-ord@a={a}"), move || {
            attempt(|| {
                for (p, el) in ebars_ord {
                    let image = s3.act_ordered(p)?;
                    let target =
                        &ebars_ord.iter().find(|(pp, _)| *pp == image).expect("closed").1;
                    let v = expect_elements_equal(&y.g(a).mul(el)?, &target.mul(&y.g(a))?);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={p}"), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("eadj-vs-ebar@a={a}"), move || {
            attempt(|| {
                for (p, el) in ebars {
                    let prod = eadjs[a - 1].mul(el)?;
                    let v = if p.same_block(a, a + 1) {
                        expect_elements_equal(&prod, el)
                    } else {
                        expect_element_zero(&prod)
                    };
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={p}"), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("g-quadratic-ebar@a={a}"), move || {
            attempt(|| {
                for (p, el) in ebars {
                    let lhs = y.g(a).mul(&y.g(a))?.mul(el)?;
                    let rhs = if p.same_block(a, a + 1) {
                        el.scale(q).add(&y.g(a).mul(el)?.scale(&q.sub(one)))?
                    } else {
                        el.scale(q)
                    };
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("A={p}"), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
    }

    sb.check("jm-first-unit", move || {
        expect_elements_equal(&y.x(1), &y.unit())
    });
    for a in 2..=n {
        sb.check(format!("jm-closed-form@a={a}"), move || {
            attempt(|| {
                let mut left = y.unit();
                for m in (1..a).rev() {
                    left = left.mul(&y.g(m))?;
                }
                let mut right = y.unit();
                for m in 1..a {
                    right = right.mul(&y.g(m))?;
                }
                let expected = left.mul(&right)?.scale(&y.cfg().q_pow(1 - a as i64));
                Ok(expect_elements_equal(&y.x(a), &expected))
            })
        });
    }
    if n >= 2 {
        sb.check("jm-second-expansion", move || {
            attempt(|| {
                let coeff = one.sub(&y.cfg().q_pow(-1));
                let expected = y.unit().add(&eadjs[0].mul(&y.g(1))?.scale(&coeff))?;
                Ok(expect_elements_equal(&y.x(2), &expected))
            })
        });
    }
    for a in 1..=n {
        for b in a + 1..=n {
            sb.check(format!("jm-commute@a={a},b={b}"), move || {
                attempt(|| {
                    Ok(expect_elements_equal(
                        &y.x(a).mul(&y.x(b))?,
                        &y.x(b).mul(&y.x(a))?,
                    ))
                })
            });
        }
    }
    for a in 1..=n {
        sb.check(format!("jm-t-commute@a={a}"), move || {
            attempt(|| {
                for b in 1..=n {
                    let v = expect_elements_equal(&y.x(a).mul(&y.t(b))?, &y.t(b).mul(&y.x(a))?);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("b={b}"), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("jm-inverse@a={a}"), move || {
            attempt(|| {
                Ok(expect_elements_equal(&y.x(a).mul(&y.x_inv(a))?, &y.unit()))
            })
        });
    }
    for a in 1..n {
        for b in 1..=n {
            if b == a || b == a + 1 {
                continue;
            }
            sb.check(format!("g-jm-far@a={a},b={b}"), move || {
                attempt(|| {
                    Ok(expect_elements_equal(
                        &y.g(a).mul(&y.x(b))?,
                        &y.x(b).mul(&y.g(a))?,
                    ))
                })
            });
        }
        sb.check(format!("jm-product-symmetric@a={a}"), move || {
            attempt(|| {
                let prod = y.x(a).mul(&y.x(a + 1))?;
                Ok(expect_elements_equal(&y.g(a).mul(&prod)?, &prod.mul(&y.g(a))?))
            })
        });
        sb.check(format!("jm-sum-symmetric@a={a}"), move || {
            attempt(|| {
                let sum = y.x(a).add(&y.x(a + 1))?;
                Ok(expect_elements_equal(&y.g(a).mul(&sum)?, &sum.mul(&y.g(a))?))
            })
        });
    }
    for a in 1..=n {
        sb.check(format!("jm-vs-esets@a={a}"), move || {
            attempt(|| {
                for (p, el) in esets {
                    let v = expect_elements_equal(&y.x(a).mul(el)?, &el.mul(&y.x(a))?);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("e, A={p}"), v));
                    }
                }
                for (p, el) in ebars {
                    let v = expect_elements_equal(&y.x(a).mul(el)?, &el.mul(&y.x(a))?);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("ebar, A={p}"), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
    }

    Ok(sb.run())
}

/// Builds the intertwiners of the algebra and checks every exchange
/// identity they satisfy against the spectral idempotent families.
pub fn intertwiner_suite(y: &YAlgebra) -> Result<SuiteReport, YError> {
    let phis = y.intertwiners()?;
    intertwiner_suite_with(y, &phis)
}

/// Checks the intertwiner identities against a caller-supplied family, so
/// deliberately corrupted elements demonstrate the suite's sensitivity.
pub fn intertwiner_suite_with(
    y: &YAlgebra,
    phis: &[AlgebraElement],
) -> Result<SuiteReport, YError> {
    let n = y.cfg().n();
    if n < 2 {
        let mut sb = SuiteBuilder::new("yokonuma-intertwiners");
        sb.check("applicable", || {
            Verdict::Skip("no adjacent strand pairs below two strands".into())
        });
        return Ok(sb.run());
    }
    assert_eq!(phis.len(), n - 1, "one intertwiner per adjacent pair");

    let q = y.cfg().q();
    let one = y.cfg().ctx().one();
    let zoo = y.content_zoo()?;

    // Products reused across the per-label loops of each identity family.
    struct PairSeed {
        phi: AlgebraElement,
        phi_sq: AlgebraElement,
        phi_xnext: AlgebraElement,
        x_phi: AlgebraElement,
        xnext_phi: AlgebraElement,
        phi_x: AlgebraElement,
        qxnext_minus_x: AlgebraElement,
    }
    let seeds: Vec<PairSeed> = (1..n)
        .map(|a| -> Result<PairSeed, YError> {
            let phi = phis[a - 1].clone();
            Ok(PairSeed {
                phi_sq: phi.mul(&phi)?,
                phi_xnext: phi.mul(&y.x(a + 1))?,
                x_phi: y.x(a).mul(&phi)?,
                xnext_phi: y.x(a + 1).mul(&phi)?,
                phi_x: phi.mul(&y.x(a))?,
                qxnext_minus_x: y.x(a + 1).scale(&q).sub(&y.x(a))?,
                phi,
            })
        })
        .collect::<Result<_, _>>()?;
    let braid_seeds: Vec<(AlgebraElement, AlgebraElement, AlgebraElement)> = (1..n - 1)
        .map(|a| -> Result<_, YError> {
            let lo = &phis[a - 1];
            let hi = &phis[a];
            Ok((
                lo.mul(hi)?.mul(lo)?,
                hi.mul(lo)?.mul(hi)?,
                lo.sub(hi)?.scale(&q),
            ))
        })
        .collect::<Result<_, _>>()?;

    let content_map: BTreeMap<(Vec<u64>, Vec<u64>), AlgebraElement> = zoo
        .realized()
        .iter()
        .map(|(i, j, el)| ((i.clone(), j.clone()), el.clone()))
        .collect();

    let partitions = enumerate_set_partitions(n)?;
    let ordered = enumerate_ordered_set_partitions(n)?;
    let mut setpar_items: Vec<(Vec<u64>, SetPartition, AlgebraElement)> = vec![];
    let mut setpar_map: BTreeMap<(Vec<u64>, SetPartition), AlgebraElement> = BTreeMap::new();
    for (i, ei_el) in zoo.realized_i() {
        for p in &partitions {
            let el = ei_el.mul(&y.ebar_via_level_sets(p)?)?;
            if el.is_zero() {
                continue;
            }
            setpar_items.push((i.clone(), p.clone(), el.clone()));
            setpar_map.insert((i.clone(), p.clone()), el);
        }
    }
    let mut ord_items: Vec<(Vec<u64>, OrderedSetPartition, AlgebraElement)> = vec![];
    let mut ord_map: BTreeMap<(Vec<u64>, OrderedSetPartition), AlgebraElement> = BTreeMap::new();
    for (i, ei_el) in zoo.realized_i() {
        for p in &ordered {
            let el = ei_el.mul(&y.ebar_ord(p)?)?;
            if el.is_zero() {
                continue;
            }
            ord_items.push((i.clone(), p.clone(), el.clone()));
            ord_map.insert((i.clone(), p.clone()), el);
        }
    }

    let mut sb = SuiteBuilder::new("yokonuma-intertwiners");
    let seeds = &seeds;
    let braid_seeds = &braid_seeds;
    let content_map = &content_map;
    let setpar_items = &setpar_items;
    let setpar_map = &setpar_map;
    let ord_items = &ord_items;
    let ord_map = &ord_map;
    let q = &q;
    let one = &one;

    let swap = |v: &[u64], a: usize| -> Vec<u64> {
        let mut out = v.to_vec();
        out.swap(a - 1, a);
        out
    };

    for a in 1..n {
        sb.check(format!("phi-routes@a={a}"), move || {
            attempt(|| {
                let content = tag(
                    "content route".into(),
                    expect_elements_equal(&seeds[a - 1].phi, &y.intertwiner_via_content(a)?),
                );
                let setpar = tag(
                    "set partition route".into(),
                    expect_elements_equal(&seeds[a - 1].phi, &y.intertwiner_via_set_partitions(a)?),
                );
                let ord = tag(
                    "ordered route".into(),
                    expect_elements_equal(&seeds[a - 1].phi, &y.intertwiner_via_ordered(a)?),
                );
                Ok(content.and(setpar).and(ord))
            })
        });

        sb.check(format!("intertwine-one@a={a}"), move || {
            attempt(|| {
                let mut domain: BTreeSet<(Vec<u64>, Vec<u64>)> = BTreeSet::new();
                for (i, j) in content_map.keys() {
                    domain.insert((i.clone(), j.clone()));
                    domain.insert((swap(i, a), swap(j, a)));
                }
                for (i, j) in &domain {
                    let ek = content_map
                        .get(&(i.clone(), j.clone()))
                        .cloned()
                        .unwrap_or_else(|| y.zero());
                    let image = content_map
                        .get(&(swap(i, a), swap(j, a)))
                        .cloned()
                        .unwrap_or_else(|| y.zero());
                    let v = expect_elements_equal(
                        &seeds[a - 1].phi.mul(&ek)?,
                        &image.mul(&seeds[a - 1].phi)?,
                    );
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={},j={}", digits(i), digits(j)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });

        sb.check(format!("intertwine-one-setpar@a={a}"), move || {
            attempt(|| {
                let sigma = Permutation::adjacent_transposition(n, a);
                let mut domain: BTreeSet<(Vec<u64>, SetPartition)> = BTreeSet::new();
                for (i, p) in setpar_map.keys() {
                    domain.insert((i.clone(), p.clone()));
                    domain.insert((swap(i, a), sigma.act_set_partition(p)?));
                }
                for (i, p) in &domain {
                    let el = setpar_map
                        .get(&(i.clone(), p.clone()))
                        .cloned()
                        .unwrap_or_else(|| y.zero());
                    let image = setpar_map
                        .get(&(swap(i, a), sigma.act_set_partition(p)?))
                        .cloned()
                        .unwrap_or_else(|| y.zero());
                    let v = expect_elements_equal(
                        &seeds[a - 1].phi.mul(&el)?,
                        &image.mul(&seeds[a - 1].phi)?,
                    );
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });

        sb.check(format!("intertwine-one-ord@a={a}"), move || {
            attempt(|| {
                let sigma = Permutation::adjacent_transposition(n, a);
                let mut domain: BTreeSet<(Vec<u64>, OrderedSetPartition)> = BTreeSet::new();
                for (i, p) in ord_map.keys() {
                    domain.insert((i.clone(), p.clone()));
                    domain.insert((swap(i, a), sigma.act_ordered(p)?));
                }
                for (i, p) in &domain {
                    let el = ord_map
                        .get(&(i.clone(), p.clone()))
                        .cloned()
                        .unwrap_or_else(|| y.zero());
                    let image = ord_map
                        .get(&(swap(i, a), sigma.act_ordered(p)?))
                        .cloned()
                        .unwrap_or_else(|| y.zero());
                    let v = expect_elements_equal(
                        &seeds[a - 1].phi.mul(&el)?,
                        &image.mul(&seeds[a - 1].phi)?,
                    );
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });

        for b in 1..=n {
            if b == a || b == a + 1 {
                continue;
            }
            sb.check(format!("intertwine-two@a={a},b={b}"), move || {
                attempt(|| {
                    Ok(expect_elements_equal(
                        &seeds[a - 1].phi.mul(&y.x(b))?,
                        &y.x(b).mul(&seeds[a - 1].phi)?,
                    ))
                })
            });
        }
        for b in a + 2..n {
            sb.check(format!("intertwine-three@a={a},b={b}"), move || {
                attempt(|| {
                    Ok(expect_elements_equal(
                        &seeds[a - 1].phi.mul(&seeds[b - 1].phi)?,
                        &seeds[b - 1].phi.mul(&seeds[a - 1].phi)?,
                    ))
                })
            });
        }

        sb.check(format!("intertwine-four@a={a}"), move || {
            attempt(|| {
                for ((i, j), ek) in content_map {
                    let lhs = seeds[a - 1].phi_xnext.mul(ek)?;
                    let mut rhs = seeds[a - 1].x_phi.mul(ek)?;
                    if i[a - 1] == i[a] && j[a - 1] == j[a] {
                        rhs = rhs.add(&seeds[a - 1].qxnext_minus_x.mul(ek)?)?;
                    }
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={},j={}", digits(i), digits(j)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-four-setpar@a={a}"), move || {
            attempt(|| {
                for (i, p, el) in setpar_items {
                    let lhs = seeds[a - 1].phi_xnext.mul(el)?;
                    let mut rhs = seeds[a - 1].x_phi.mul(el)?;
                    if i[a - 1] == i[a] && p.same_block(a, a + 1) {
                        rhs = rhs.add(&seeds[a - 1].qxnext_minus_x.mul(el)?)?;
                    }
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-four-ord@a={a}"), move || {
            attempt(|| {
                for (i, p, el) in ord_items {
                    let lhs = seeds[a - 1].phi_xnext.mul(el)?;
                    let mut rhs = seeds[a - 1].x_phi.mul(el)?;
                    if i[a - 1] == i[a] && p.same_block(a, a + 1) {
                        rhs = rhs.add(&seeds[a - 1].qxnext_minus_x.mul(el)?)?;
                    }
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });

        sb.check(format!("intertwine-five@a={a}"), move || {
            attempt(|| {
                for ((i, j), ek) in content_map {
                    let lhs = seeds[a - 1].xnext_phi.mul(ek)?;
                    let mut rhs = seeds[a - 1].phi_x.mul(ek)?;
                    if i[a - 1] == i[a] && j[a - 1] == j[a] {
                        rhs = rhs.add(&seeds[a - 1].qxnext_minus_x.mul(ek)?)?;
                    }
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={},j={}", digits(i), digits(j)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-five-setpar@a={a}"), move || {
            attempt(|| {
                for (i, p, el) in setpar_items {
                    let lhs = seeds[a - 1].xnext_phi.mul(el)?;
                    let mut rhs = seeds[a - 1].phi_x.mul(el)?;
                    if i[a - 1] == i[a] && p.same_block(a, a + 1) {
                        rhs = rhs.add(&seeds[a - 1].qxnext_minus_x.mul(el)?)?;
                    }
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-five-ord@a={a}"), move || {
            attempt(|| {
                for (i, p, el) in ord_items {
                    let lhs = seeds[a - 1].xnext_phi.mul(el)?;
                    let mut rhs = seeds[a - 1].phi_x.mul(el)?;
                    if i[a - 1] == i[a] && p.same_block(a, a + 1) {
                        rhs = rhs.add(&seeds[a - 1].qxnext_minus_x.mul(el)?)?;
                    }
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });

        sb.check(format!("intertwine-six@a={a}"), move || {
            attempt(|| {
                for ((i, j), ek) in content_map {
                    let lhs = seeds[a - 1].phi_sq.mul(ek)?;
                    let rhs = if j[a - 1] != j[a] {
                        ek.scale(q)
                    } else if i[a - 1] != i[a] {
                        y.six_coefficient(a, i[a - 1] as i64, i[a] as i64, ek)?
                    } else {
                        seeds[a - 1].phi.mul(ek)?.scale(&q.add(one))
                    };
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={},j={}", digits(i), digits(j)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-six-setpar@a={a}"), move || {
            attempt(|| {
                for (i, p, el) in setpar_items {
                    let lhs = seeds[a - 1].phi_sq.mul(el)?;
                    let rhs = if !p.same_block(a, a + 1) {
                        el.scale(q)
                    } else if i[a - 1] != i[a] {
                        y.six_coefficient(a, i[a - 1] as i64, i[a] as i64, el)?
                    } else {
                        seeds[a - 1].phi.mul(el)?.scale(&q.add(one))
                    };
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-six-ord@a={a}"), move || {
            attempt(|| {
                for (i, p, el) in ord_items {
                    let lhs = seeds[a - 1].phi_sq.mul(el)?;
                    let rhs = if !p.same_block(a, a + 1) {
                        el.scale(q)
                    } else if i[a - 1] != i[a] {
                        y.six_coefficient(a, i[a - 1] as i64, i[a] as i64, el)?
                    } else {
                        seeds[a - 1].phi.mul(el)?.scale(&q.add(one))
                    };
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
    }

    for a in 1..n - 1 {
        sb.check(format!("intertwine-seven@a={a}"), move || {
            attempt(|| {
                let (l7, r7, d7) = &braid_seeds[a - 1];
                for ((i, j), ek) in content_map {
                    let jeq = j[a - 1] == j[a] && j[a] == j[a + 1];
                    let lhs = l7.mul(ek)?;
                    let rhs = if jeq && i[a - 1] == i[a] && i[a] == i[a + 1] {
                        r7.mul(ek)?.add(&d7.mul(ek)?)?
                    } else if jeq && i[a - 1] == i[a + 1] && i[a - 1] != i[a] {
                        r7.mul(ek)?.add(&y.braid_defect(a, i, ek)?)?
                    } else {
                        r7.mul(ek)?
                    };
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={},j={}", digits(i), digits(j)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-seven-setpar@a={a}"), move || {
            attempt(|| {
                let (l7, r7, d7) = &braid_seeds[a - 1];
                for (i, p, el) in setpar_items {
                    let jeq = p.same_block(a, a + 1) && p.same_block(a + 1, a + 2);
                    let lhs = l7.mul(el)?;
                    let rhs = if jeq && i[a - 1] == i[a] && i[a] == i[a + 1] {
                        r7.mul(el)?.add(&d7.mul(el)?)?
                    } else if jeq && i[a - 1] == i[a + 1] && i[a - 1] != i[a] {
                        r7.mul(el)?.add(&y.braid_defect(a, i, el)?)?
                    } else {
                        r7.mul(el)?
                    };
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
        sb.check(format!("intertwine-seven-ord@a={a}"), move || {
            attempt(|| {
                let (l7, r7, d7) = &braid_seeds[a - 1];
                for (i, p, el) in ord_items {
                    let jeq = p.same_block(a, a + 1) && p.same_block(a + 1, a + 2);
                    let lhs = l7.mul(el)?;
                    let rhs = if jeq && i[a - 1] == i[a] && i[a] == i[a + 1] {
                        r7.mul(el)?.add(&d7.mul(el)?)?
                    } else if jeq && i[a - 1] == i[a + 1] && i[a - 1] != i[a] {
                        r7.mul(el)?.add(&y.braid_defect(a, i, el)?)?
                    } else {
                        r7.mul(el)?
                    };
                    let v = expect_elements_equal(&lhs, &rhs);
                    if v != Verdict::Pass {
                        return Ok(tag(format!("i={}, A={p}", digits(i)), v));
                    }
                }
                Ok(Verdict::Pass)
            })
        });
    }

    Ok(sb.run())
}

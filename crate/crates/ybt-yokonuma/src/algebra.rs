use crate::spec::y_build;
use crate::{YConfig, YError};
use std::sync::{Arc, OnceLock};
use ybt_algcore::{AlgebraElement, AlgebraHandle};
use ybt_combinat::{OrderedSetPartition, SetPartition};

/// The algebra bundled with its configuration and lazily computed element
/// families: generator inverses, Jucys-Murphy elements, framing
/// eigenprojectors, content eigenprojectors, and intertwiners. All caches
/// fill at most once; the struct is shared by reference across parallel
/// verification checks.
pub struct YAlgebra {
    cfg: YConfig,
    handle: Arc<AlgebraHandle>,
    g_inv: OnceLock<Vec<AlgebraElement>>,
    jm: OnceLock<Vec<AlgebraElement>>,
    jm_inv: OnceLock<Vec<AlgebraElement>>,
    pub(crate) ej: OnceLock<Vec<(Vec<u64>, AlgebraElement)>>,
    pub(crate) zoo: OnceLock<crate::idempotents::ContentZoo>,
    pub(crate) phi: OnceLock<Vec<AlgebraElement>>,
}

impl YAlgebra {
    pub fn new(cfg: YConfig) -> Result<Self, YError> {
        let handle = y_build(&cfg)?;
        Ok(YAlgebra {
            cfg,
            handle,
            g_inv: OnceLock::new(),
            jm: OnceLock::new(),
            jm_inv: OnceLock::new(),
            ej: OnceLock::new(),
            zoo: OnceLock::new(),
            phi: OnceLock::new(),
        })
    }

    pub fn cfg(&self) -> &YConfig {
        &self.cfg
    }

    pub fn handle(&self) -> &Arc<AlgebraHandle> {
        &self.handle
    }

    pub fn dim(&self) -> usize {
        self.handle.dim()
    }

    pub fn unit(&self) -> AlgebraElement {
        self.handle.unit()
    }

    pub fn zero(&self) -> AlgebraElement {
        self.handle.zero()
    }

    fn n(&self) -> usize {
        self.cfg.n()
    }

    /// The framing generator `t_a`, 1-based.
    pub fn t(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a <= self.n(), "t index out of range");
        self.handle.generator_element(a - 1)
    }

    /// The braid generator `g_a`, 1-based, `a < n`.
    pub fn g(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a < self.n(), "g index out of range");
        self.handle.generator_element(self.n() + a - 1)
    }

    /// `g_a^{-1} = q^{-1} g_a + (q^{-1} - 1) e_a`.
    pub fn g_inv(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a < self.n(), "g index out of range");
        self.g_inv
            .get_or_init(|| {
                let q_inv = self.cfg.q_pow(-1);
                let correction = q_inv.sub(&self.cfg.ctx().one());
                (1..self.n())
                    .map(|b| {
                        self.g(b)
                            .scale(&q_inv)
                            .add(&self.e_adj(b).scale(&correction))
                            .expect("same handle")
                    })
                    .collect()
            })[a - 1]
            .clone()
    }

    /// The framing idempotent `e_a = e_{a,a+1}`.
    pub fn e_adj(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a < self.n(), "e index out of range");
        self.e_pair_sum(a, a + 1)
    }

    /// `e_{ab} = (1/d) sum_r t_a^r t_b^{-r}` computed by actual products of
    /// the framing generators.
    pub fn e_pair_sum(&self, a: usize, b: usize) -> AlgebraElement {
        assert!(a >= 1 && a < b && b <= self.n(), "pair out of range");
        let d = self.cfg.d();
        let d_inv = self.cfg.ctx().from_residue(d).inv().expect("d is invertible");
        let mut acc = self.zero();
        for r in 0..d {
            let term = self
                .t(a)
                .pow(r as usize)
                .expect("same handle")
                .mul(&self.t(b).pow((d - r) as usize % d as usize).expect("same handle"))
                .expect("same handle");
            acc = acc.add(&term).expect("same handle");
        }
        acc.scale(&d_inv)
    }

    /// `e_{ab} = g_{b-1} ... g_{a+1} e_a g_{a+1}^{-1} ... g_{b-1}^{-1}`, the
    /// conjugation route.
    pub fn e_pair_conj(&self, a: usize, b: usize) -> AlgebraElement {
        assert!(a >= 1 && a < b && b <= self.n(), "pair out of range");
        let mut acc = self.e_adj(a);
        for m in (a + 1)..b {
            acc = self
                .g(m)
                .mul(&acc)
                .and_then(|x| x.mul(&self.g_inv(m)))
                .expect("same handle");
        }
        acc
    }

    /// `e(A)`: the product of `e_{ab}` over all related pairs of `A`.
    pub fn e_set(&self, a: &SetPartition) -> Result<AlgebraElement, YError> {
        self.check_size(a.n())?;
        let mut acc = self.unit();
        for block in a.blocks() {
            for (idx, &x) in block.iter().enumerate() {
                for &y in &block[idx + 1..] {
                    acc = acc.mul(&self.e_pair_sum(x, y))?;
                }
            }
        }
        Ok(acc)
    }

    /// `ebar(A)`: the alternating refinement sum `sum_B mu(A, B) e(B)` over
    /// partitions `B` coarser than `A`.
    pub fn ebar_set(&self, a: &SetPartition) -> Result<AlgebraElement, YError> {
        self.check_size(a.n())?;
        let ctx = self.cfg.ctx();
        let mut acc = self.zero();
        for b in ybt_combinat::enumerate_set_partitions(self.n())? {
            if !a.refines(&b)? {
                continue;
            }
            let mu = ctx.from_int(ybt_combinat::mobius(a, &b)?);
            acc = acc.add(&self.e_set(&b)?.scale(&mu))?;
        }
        Ok(acc)
    }

    /// Jucys-Murphy element `X_a`: `X_1 = 1`, `X_{a+1} = q^{-1} g_a X_a g_a`.
    pub fn x(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a <= self.n(), "X index out of range");
        self.jm
            .get_or_init(|| {
                let q_inv = self.cfg.q_pow(-1);
                let mut out = vec![self.unit()];
                for b in 1..self.n() {
                    let prev = out.last().expect("nonempty");
                    let next = self
                        .g(b)
                        .mul(prev)
                        .and_then(|x| x.mul(&self.g(b)))
                        .expect("same handle")
                        .scale(&q_inv);
                    out.push(next);
                }
                out
            })[a - 1]
            .clone()
    }

    /// `X_a^{-1}`: `X_1^{-1} = 1`, `X_{a+1}^{-1} = q g_a^{-1} X_a^{-1} g_a^{-1}`.
    pub fn x_inv(&self, a: usize) -> AlgebraElement {
        assert!(a >= 1 && a <= self.n(), "X index out of range");
        self.jm_inv
            .get_or_init(|| {
                let q = self.cfg.q();
                let mut out = vec![self.unit()];
                for b in 1..self.n() {
                    let prev = out.last().expect("nonempty");
                    let next = self
                        .g_inv(b)
                        .mul(prev)
                        .and_then(|x| x.mul(&self.g_inv(b)))
                        .expect("same handle")
                        .scale(&q);
                    out.push(next);
                }
                out
            })[a - 1]
            .clone()
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<(), YError> {
        if n == self.n() {
            Ok(())
        } else {
            Err(YError::ConfigInvalid(format!(
                "partition on {n} points fed to an algebra on {} strands",
                self.n()
            )))
        }
    }

    /// Looks up an element by a printable name: "1", "t_2", "g_1",
    /// "g_1^-1", "X_3", "X_3^-1", "e_2", "e(A)@{1,2|3}", "ebar(A)@{1,2|3}",
    /// "ebar(Aord)@({3},{1,2})", "e(j)@(0,0,1)", "Phi_1".
    pub fn element(&self, name: &str) -> Result<AlgebraElement, YError> {
        let unknown = || YError::UnknownElement(name.to_string());
        let parse_idx = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        if name == "1" {
            return Ok(self.unit());
        }
        if let Some(rest) = name.strip_prefix("t_") {
            let a = parse_idx(rest)?;
            if a >= 1 && a <= self.n() {
                return Ok(self.t(a));
            }
            return Err(unknown());
        }
        if let Some(rest) = name.strip_prefix("g_") {
            let (core, inverted) = match rest.strip_suffix("^-1") {
                Some(c) => (c, true),
                None => (rest, false),
            };
            let a = parse_idx(core)?;
            if a >= 1 && a < self.n() {
                return Ok(if inverted { self.g_inv(a) } else { self.g(a) });
            }
            return Err(unknown());
        }
        if let Some(rest) = name.strip_prefix("X_") {
            let (core, inverted) = match rest.strip_suffix("^-1") {
                Some(c) => (c, true),
                None => (rest, false),
            };
            let a = parse_idx(core)?;
            if a >= 1 && a <= self.n() {
                return Ok(if inverted { self.x_inv(a) } else { self.x(a) });
            }
            return Err(unknown());
        }
        if let Some(rest) = name.strip_prefix("e_") {
            let a = parse_idx(rest)?;
            if a >= 1 && a < self.n() {
                return Ok(self.e_adj(a));
            }
            return Err(unknown());
        }
        if let Some(rest) = name.strip_prefix("Phi_") {
            let a = parse_idx(rest)?;
            if a >= 1 && a < self.n() {
                return self.intertwiner(a);
            }
            return Err(unknown());
        }
        if let Some(rest) = name.strip_prefix("e(A)@") {
            return self.e_set(&parse_set_partition(rest, self.n()).ok_or_else(unknown)?);
        }
        if let Some(rest) = name.strip_prefix("ebar(A)@") {
            return self.ebar_set(&parse_set_partition(rest, self.n()).ok_or_else(unknown)?);
        }
        if let Some(rest) = name.strip_prefix("ebar(Aord)@") {
            return self.ebar_ord(&parse_ordered_partition(rest, self.n()).ok_or_else(unknown)?);
        }
        if let Some(rest) = name.strip_prefix("e(j)@") {
            let j = parse_residue_tuple(rest, self.n(), self.cfg.d()).ok_or_else(unknown)?;
            return self.e_j(&j);
        }
        Err(unknown())
    }
}

/// Parses "{1,2|3}" into a set partition on `n` points.
fn parse_set_partition(s: &str, n: usize) -> Option<SetPartition> {
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

/// Parses "({3},{1,2})" into an ordered set partition on `n` points.
fn parse_ordered_partition(s: &str, n: usize) -> Option<OrderedSetPartition> {
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
        rest = &rest2[end + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    OrderedSetPartition::new(n, blocks).ok()
}

/// Parses "(0,0,1)" into a length-`n` residue vector mod `d`.
fn parse_residue_tuple(s: &str, n: usize, d: u64) -> Option<Vec<u64>> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let items: Vec<u64> = inner
        .split(',')
        .map(|x| x.trim().parse::<u64>().ok())
        .collect::<Option<_>>()?;
    if items.len() == n && items.iter().all(|&x| x < d) {
        Some(items)
    } else {
        None
    }
}

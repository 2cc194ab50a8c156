use crate::algebra::{BtAlgebra, BtOrdAlgebra};
use crate::BtError;
use std::collections::HashMap;
use std::sync::Arc;
use ybt_algcore::{
    expect_elements_equal, AlgebraElement, AlgebraHandle, Echelon, SuiteBuilder, SuiteReport,
    Verdict,
};
use ybt_yokonuma::YAlgebra;

/// The three algebra maps between the bt-algebras and the Yokonuma-Hecke
/// algebra, stored as images of every normal-form basis key and applied
/// by linearity:
///
/// * `iota` from the unordered algebra into the Yokonuma-Hecke algebra,
/// * `epsilon` from the ordered algebra into the Yokonuma-Hecke algebra,
/// * `epsilon_one` from the unordered algebra into the ordered one.
///
/// Construction only requires matching strand counts and deformation
/// parameters. Injectivity of the two maps into the Yokonuma-Hecke side
/// additionally needs `d >= n`; the verification suite downgrades those
/// rank checks to informational skips when `d` is smaller.
pub struct Embeddings {
    bt_handle: Arc<AlgebraHandle>,
    btord_handle: Arc<AlgebraHandle>,
    y_handle: Arc<AlgebraHandle>,
    iota_img: Vec<AlgebraElement>,
    eps_img: Vec<AlgebraElement>,
    eps1_img: Vec<AlgebraElement>,
}

impl Embeddings {
    pub fn new(bt: &BtAlgebra, btord: &BtOrdAlgebra, y: &YAlgebra) -> Result<Self, BtError> {
        let n = bt.n();
        if btord.n() != n || y.cfg().n() != n {
            return Err(BtError::HypothesisViolated(format!(
                "strand counts differ: {} / {} / {}",
                n,
                btord.n(),
                y.cfg().n()
            )));
        }
        if *bt.q() != y.cfg().q() || bt.q() != btord.q() {
            return Err(BtError::HypothesisViolated(
                "deformation parameters differ between the algebras".into(),
            ));
        }

        let gw_y: Vec<AlgebraElement> = bt
            .perms()
            .iter()
            .map(|w| {
                let mut acc = y.unit();
                for a in w.reduced_word() {
                    acc = acc.mul(&y.g(a)).expect("same handle");
                }
                acc
            })
            .collect();

        let pcount = bt.parts().len();
        let mut iota_img = Vec::with_capacity(bt.dim());
        for b in 0..bt.dim() {
            let (_, p) = bt.decompose(b);
            let image = gw_y[b / pcount].mul(&y.ebar_set(p)?).expect("same handle");
            iota_img.push(image);
        }

        let mut eps_img = Vec::with_capacity(btord.dim());
        for b in 0..btord.dim() {
            let (w, p) = btord.decompose(b);
            let w_idx = bt
                .perms()
                .iter()
                .position(|v| v == w)
                .expect("same permutation enumeration");
            let image = gw_y[w_idx].mul(&y.ebar_ord(p)?).expect("same handle");
            eps_img.push(image);
        }

        let mut lifts: HashMap<_, Vec<_>> = HashMap::new();
        for p_ord in btord.parts() {
            lifts.entry(p_ord.unordered()).or_default().push(p_ord.clone());
        }
        let one = bt.ctx().one();
        let mut eps1_img = Vec::with_capacity(bt.dim());
        for b in 0..bt.dim() {
            let (w, p) = bt.decompose(b);
            let coords = lifts[p]
                .iter()
                .map(|p_ord| {
                    let key = btord.key_index(w, p_ord).expect("enumerated part");
                    (key, one.clone())
                })
                .collect();
            eps1_img.push(btord.handle().element_from_coords(coords));
        }

        Ok(Embeddings {
            bt_handle: bt.handle().clone(),
            btord_handle: btord.handle().clone(),
            y_handle: y.handle().clone(),
            iota_img,
            eps_img,
            eps1_img,
        })
    }

    /// Image in the Yokonuma-Hecke algebra of an unordered-algebra element.
    pub fn iota(&self, x: &AlgebraElement) -> Result<AlgebraElement, BtError> {
        apply(&self.iota_img, &self.bt_handle, &self.y_handle, x)
    }

    /// Image in the Yokonuma-Hecke algebra of an ordered-algebra element.
    pub fn epsilon(&self, x: &AlgebraElement) -> Result<AlgebraElement, BtError> {
        apply(&self.eps_img, &self.btord_handle, &self.y_handle, x)
    }

    /// Image in the ordered algebra of an unordered-algebra element.
    pub fn epsilon_one(&self, x: &AlgebraElement) -> Result<AlgebraElement, BtError> {
        apply(&self.eps1_img, &self.bt_handle, &self.btord_handle, x)
    }
}

fn apply(
    images: &[AlgebraElement],
    src: &Arc<AlgebraHandle>,
    dst: &Arc<AlgebraHandle>,
    x: &AlgebraElement,
) -> Result<AlgebraElement, BtError> {
    if x.handle().fingerprint() != src.fingerprint() {
        return Err(BtError::HypothesisViolated(format!(
            "element belongs to {}, map expects {}",
            x.handle().fingerprint(),
            src.fingerprint()
        )));
    }
    let mut acc = dst.zero();
    for (b, c) in x.iter() {
        acc = acc.add(&images[b].scale(c)).expect("same handle");
    }
    Ok(acc)
}

fn check_rank(images: &[AlgebraElement], want: usize, d: u64, n: usize) -> Verdict {
    let mut ech = Echelon::new();
    for x in images {
        ech.push(x.clone()).expect("same handle");
    }
    let rank = ech.rank();
    if d >= n as u64 {
        Verdict::require(
            rank == want,
            format!("rank {rank} of {want} despite d = {d} >= n = {n}"),
        )
    } else {
        Verdict::Skip(format!(
            "d = {d} < n = {n}: injectivity not guaranteed; observed rank {rank} of {want}"
        ))
    }
}

/// Builds the three maps and verifies them: the homomorphism property on
/// every generator pair, agreement of the composite `epsilon after
/// epsilon_one` with `iota` on every basis key, preservation of the braid
/// generators and tie idempotents, image ranks, and the structural
/// invariant that `epsilon_one` keeps the permutation component.
pub fn embedding_suite(
    bt: &BtAlgebra,
    btord: &BtOrdAlgebra,
    y: &YAlgebra,
) -> Result<SuiteReport, BtError> {
    let emb = Embeddings::new(bt, btord, y)?;
    let n = bt.n();
    let d = y.cfg().d();

    let bt_gens: Vec<(String, AlgebraElement)> = (0..bt.handle().generator_count())
        .map(|i| (bt.handle().generator_name(i), bt.handle().generator_element(i)))
        .collect();
    let btord_gens: Vec<(String, AlgebraElement)> = (0..btord.handle().generator_count())
        .map(|i| (btord.handle().generator_name(i), btord.handle().generator_element(i)))
        .collect();

    let mut sb = SuiteBuilder::new("bt-embeddings");

    let hom_cases: [(&str, &Vec<(String, AlgebraElement)>); 3] =
        [("iota", &bt_gens), ("eps", &btord_gens), ("eps1", &bt_gens)];
    for (map_name, gens) in hom_cases {
        for (xname, x) in gens.iter() {
            for (yname, yv) in gens.iter() {
                let emb = &emb;
                sb.check(format!("{map_name}-hom@{xname},{yname}"), move || {
                    let product = x.mul(yv).expect("same handle");
                    let map = |v: &AlgebraElement| match map_name {
                        "iota" => emb.iota(v),
                        "eps" => emb.epsilon(v),
                        _ => emb.epsilon_one(v),
                    };
                    let lhs = map(&product).expect("element of the source algebra");
                    let rhs = map(x)
                        .expect("element of the source algebra")
                        .mul(&map(yv).expect("element of the source algebra"))
                        .expect("same handle");
                    expect_elements_equal(&lhs, &rhs)
                });
            }
        }
    }

    for b in 0..bt.dim() {
        let emb = &emb;
        let label = bt.handle().basis_label(b);
        let bt_handle = bt.handle();
        sb.check(format!("eps-after-eps1@{label}"), move || {
            let x = bt_handle.basis_element(b);
            let through = emb
                .epsilon(&emb.epsilon_one(&x).expect("bt element"))
                .expect("ordered element");
            let direct = emb.iota(&x).expect("bt element");
            expect_elements_equal(&through, &direct)
        });
    }

    for w in bt.perms() {
        let emb = &emb;
        sb.check(format!("iota-g@{w}"), move || {
            let lhs = emb.iota(&bt.g_w(w).expect("same size")).expect("bt element");
            let mut rhs = y.unit();
            for a in w.reduced_word() {
                rhs = rhs.mul(&y.g(a)).expect("same handle");
            }
            expect_elements_equal(&lhs, &rhs)
        });
    }

    for a in 1..n {
        let emb = &emb;
        sb.check(format!("iota-e@a={a}"), move || {
            let lhs = emb.iota(&bt.e_adj(a)).expect("bt element");
            expect_elements_equal(&lhs, &y.e_adj(a))
        });
        sb.check(format!("eps1-e@a={a}"), move || {
            let lhs = emb.epsilon_one(&bt.e_adj(a)).expect("bt element");
            expect_elements_equal(&lhs, &btord.e_adj(a))
        });
    }
    for p in bt.parts() {
        let emb = &emb;
        sb.check(format!("iota-e-set@A={p}"), move || {
            let lhs = emb
                .iota(&bt.e_set(p).expect("unordered part"))
                .expect("bt element");
            let rhs = y.e_set(p).expect("same size");
            expect_elements_equal(&lhs, &rhs)
        });
    }

    {
        let emb = &emb;
        sb.check("iota-rank", move || {
            check_rank(&emb.iota_img, bt.dim(), d, n)
        });
        sb.check("eps-rank", move || {
            check_rank(&emb.eps_img, btord.dim(), d, n)
        });
        sb.check("eps1-rank", move || {
            let mut ech = Echelon::new();
            for x in &emb.eps1_img {
                ech.push(x.clone()).expect("same handle");
            }
            Verdict::require(
                ech.rank() == bt.dim(),
                format!("rank {} of {}", ech.rank(), bt.dim()),
            )
        });
        let pcount_ord = btord.parts().len();
        let pcount = bt.parts().len();
        sb.check("eps1-g-part", move || {
            for (b, image) in emb.eps1_img.iter().enumerate() {
                let w_src = bt.perms()[b / pcount].clone();
                for (key, _) in image.iter() {
                    let w_dst = &btord.perms()[key / pcount_ord];
                    if *w_dst != w_src {
                        return Verdict::Fail(format!(
                            "image of {} touches permutation {}",
                            bt.handle().basis_label(b),
                            w_dst
                        ));
                    }
                }
            }
            Verdict::Pass
        });
    }

    Ok(sb.run())
}

use crate::handle::AlgebraHandle;
use crate::AlgError;
use serde::{Deserialize, Serialize};
use std::path::Path;
use std::sync::Arc;
use ybt_scalar::{FieldCtx, FieldScalar, Poly, RationalFunction};

const MAGIC: &str = "ybt-gentable";
const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Prime(u64),
    Rational { num: Vec<u64>, den: Vec<u64> },
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    magic: String,
    version: u32,
    fingerprint: String,
    /// `tables[g][b]` is the sparse row `basis[b] * letter[g]`.
    tables: Vec<Vec<Vec<(usize, ScalarRepr)>>>,
}

fn encode(s: &FieldScalar) -> ScalarRepr {
    match s.as_rational() {
        None => ScalarRepr::Prime(s.as_residue().expect("prime scalars are residues")),
        Some(r) => ScalarRepr::Rational {
            num: r.num().coeffs().to_vec(),
            den: r.den().coeffs().to_vec(),
        },
    }
}

fn decode(ctx: FieldCtx, repr: &ScalarRepr) -> Result<FieldScalar, AlgError> {
    match (ctx, repr) {
        (FieldCtx::Prime(_), ScalarRepr::Prime(a)) => Ok(ctx.from_residue(*a)),
        (FieldCtx::Rational(base), ScalarRepr::Prime(a)) => {
            // Constants serialize without a denominator.
            let _ = base;
            Ok(ctx.from_residue(*a))
        }
        (FieldCtx::Rational(base), ScalarRepr::Rational { num, den }) => {
            let num = Poly::from_coeffs(base, num);
            let den = Poly::from_coeffs(base, den);
            let r = RationalFunction::new(num, den)
                .map_err(|e| AlgError::CacheRejected(format!("bad scalar entry: {e}")))?;
            Ok(FieldScalar::rational(r))
        }
        (FieldCtx::Prime(_), ScalarRepr::Rational { .. }) => Err(AlgError::CacheRejected(
            "rational scalar entry in a prime-field table".into(),
        )),
    }
}

/// Materializes every generator action row of `handle` and writes them to
/// `path`, returning the number of rows saved. The file records the
/// handle's fingerprint so it can refuse to load elsewhere.
pub fn save_tables(handle: &Arc<AlgebraHandle>, path: &Path) -> Result<usize, AlgError> {
    let mut tables = Vec::with_capacity(handle.generator_count());
    let mut count = 0;
    for g in 0..handle.generator_count() {
        let mut rows = Vec::with_capacity(handle.dim());
        for b in 0..handle.dim() {
            let row = handle.action_row(g, b);
            rows.push(row.iter().map(|(b2, c)| (*b2, encode(c))).collect());
            count += 1;
        }
        tables.push(rows);
    }
    let file = CacheFile {
        magic: MAGIC.into(),
        version: VERSION,
        fingerprint: handle.fingerprint(),
        tables,
    };
    let json = serde_json::to_string(&file).map_err(|e| AlgError::CacheIo(e.to_string()))?;
    std::fs::write(path, json).map_err(|e| AlgError::CacheIo(e.to_string()))?;
    Ok(count)
}

/// Loads cached action rows into `handle`, returning the number of rows
/// installed. A file whose magic, version, or fingerprint disagrees with the
/// handle is refused outright rather than partially trusted; shape mismatches
/// against the handle's dimensions are refused the same way.
pub fn load_cached_tables(handle: &Arc<AlgebraHandle>, path: &Path) -> Result<usize, AlgError> {
    let json = std::fs::read_to_string(path).map_err(|e| AlgError::CacheIo(e.to_string()))?;
    let file: CacheFile =
        serde_json::from_str(&json).map_err(|e| AlgError::CacheIo(e.to_string()))?;
    if file.magic != MAGIC {
        return Err(AlgError::CacheRejected(format!(
            "magic {:?} is not {:?}",
            file.magic, MAGIC
        )));
    }
    if file.version != VERSION {
        return Err(AlgError::CacheRejected(format!(
            "version {} is not {}",
            file.version, VERSION
        )));
    }
    if file.fingerprint != handle.fingerprint() {
        return Err(AlgError::CacheRejected(format!(
            "fingerprint {:?} does not match handle {:?}",
            file.fingerprint,
            handle.fingerprint()
        )));
    }
    if file.tables.len() != handle.generator_count()
        || file.tables.iter().any(|rows| rows.len() != handle.dim())
    {
        return Err(AlgError::CacheRejected("table shape mismatch".into()));
    }
    let ctx = handle.field();
    let mut count = 0;
    for (g, rows) in file.tables.iter().enumerate() {
        for (b, row) in rows.iter().enumerate() {
            let mut decoded = Vec::with_capacity(row.len());
            for (b2, repr) in row {
                if *b2 >= handle.dim() {
                    return Err(AlgError::CacheRejected(format!(
                        "basis index {} out of range",
                        b2
                    )));
                }
                decoded.push((*b2, decode(ctx, repr)?));
            }
            handle.prefill_row(g, b, decoded);
            count += 1;
        }
    }
    Ok(count)
}

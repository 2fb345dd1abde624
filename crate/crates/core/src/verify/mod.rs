//! Identity verification: named suites of exact checks with
//! machine-readable reports.
//!
//! Every check is a finite instance (a symbolic identity at a fixed size, or
//! an exact evaluation at a seeded random point); nothing here proves
//! anything beyond the instances run.

mod combinatorial;
mod special;
mod symbolic;
mod ybe;

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::determinant::UVector;
use crate::error::{Error, Result};
use crate::exactnum::{rational, CycloNum};
use crate::icemodel::IceConfig;
use crate::laurent::IntPoly;

pub use ybe::{r_matrix, verify_ybe, verify_ybe_default};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 42;

/// Longest rendering of a polynomial kept in a witness.
const WITNESS_CHARS: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite_id: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub checks_run: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall-clock time; kept out of the default serialization so that
    /// identical runs produce identical bytes.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if with_timing {
            v["elapsedMs"] = json!(self.elapsed.as_millis() as u64);
        }
        v
    }

    /// One compact JSON line.
    pub fn to_json_line(&self, with_timing: bool) -> String {
        serde_json::to_string(&self.to_json(with_timing)).expect("report serializes")
    }

    pub fn from_json(v: &Value) -> Result<VerificationReport> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    }

    fn from_error(suite_id: &str, params: BTreeMap<String, Value>, err: &Error, elapsed: Duration) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite_id: suite_id.to_string(),
            params,
            status: Status::Fail,
            checks_run: 0,
            witness: Some(json!({ "error": err.to_string() })),
            notes: Vec::new(),
            elapsed,
        }
    }
}

/// Collects check outcomes; keeps the first failure as witness.
#[derive(Debug, Default)]
pub(crate) struct Checker {
    checks: u64,
    witness: Option<Value>,
    notes: Vec<String>,
}

fn clip(s: String) -> String {
    if s.chars().count() <= WITNESS_CHARS {
        s
    } else {
        let head: String = s.chars().take(WITNESS_CHARS).collect();
        format!("{head} …[truncated]")
    }
}

impl Checker {
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) -> bool {
        self.checks += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    /// Symbolic identity `lhs = rhs`.
    pub fn poly_eq(&mut self, label: &str, lhs: &IntPoly, rhs: &IntPoly) -> bool {
        self.record(lhs == rhs, || {
            let diff = lhs.sub(rhs);
            json!({
                "check": label,
                "assignment": "symbolic",
                "lhs": clip(lhs.to_string()),
                "rhs": clip(rhs.to_string()),
                "differenceTerms": diff.num_terms(),
            })
        })
    }

    /// Equality of two values at an explicit assignment.
    pub fn value_eq<T: PartialEq + Display>(&mut self, label: &str, at: impl FnOnce() -> Value, lhs: &T, rhs: &T) -> bool {
        self.record(lhs == rhs, || {
            json!({
                "check": label,
                "assignment": at(),
                "lhs": clip(lhs.to_string()),
                "rhs": clip(rhs.to_string()),
            })
        })
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self, suite_id: &str, params: BTreeMap<String, Value>, elapsed: Duration) -> VerificationReport {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite_id: suite_id.to_string(),
            params,
            status: if self.witness.is_none() { Status::Pass } else { Status::Fail },
            checks_run: self.checks,
            witness: self.witness,
            notes: self.notes,
            elapsed,
        }
    }
}

/// Size and sampling overrides. Unset fields take per-suite defaults.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteParams {
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub points: Option<usize>,
    pub seed: u64,
    pub ice: IceConfig,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { n_max: None, m_max: None, points: None, seed: DEFAULT_SEED, ice: IceConfig::default() }
    }
}

impl SuiteParams {
    pub fn with_seed(seed: u64) -> Self {
        SuiteParams { seed, ..Self::default() }
    }
}

/// Effective parameters of one suite run, echoed in the report.
#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    pub suite_id: &'static str,
    pub seed: u64,
    pub ice: IceConfig,
    pub n_max: usize,
    pub m_max: usize,
    pub points: usize,
    uses: Uses,
}

#[derive(Clone, Copy, Debug, Default)]
struct Uses {
    n: bool,
    m: bool,
    points: bool,
}

impl Ctx {
    fn params_json(&self) -> BTreeMap<String, Value> {
        let mut p = BTreeMap::new();
        if self.uses.n {
            p.insert("nMax".to_string(), json!(self.n_max));
        }
        if self.uses.m {
            p.insert("mMax".to_string(), json!(self.m_max));
        }
        if self.uses.points {
            p.insert("points".to_string(), json!(self.points));
        }
        p.insert("seed".to_string(), json!(self.seed));
        p
    }

    /// Deterministic generator for this suite: the run seed mixed with a hash
    /// of the suite name, so suites can run in any order or in parallel.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.suite_id.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    pub fn ms(&self) -> Vec<usize> {
        (1..=self.m_max).collect()
    }
}

/// Random vector of `dim` pairwise distinct positive rationals `p/q`,
/// `1 ≤ p, q ≤ 50`.
pub fn random_uvector(rng: &mut ChaCha8Rng, dim: usize) -> UVector {
    let mut coords: Vec<CycloNum> = Vec::with_capacity(dim);
    while coords.len() < dim {
        let p: i64 = rng.random_range(1..=50);
        let q: i64 = rng.random_range(1..=50);
        let c = CycloNum::from_rational(rational(p, q));
        if !coords.contains(&c) {
            coords.push(c);
        }
    }
    UVector::new(coords).expect("positive coordinates")
}

/// `count` random vectors from a generator seeded with `seed` alone.
pub fn random_points(seed: u64, dim: usize, count: usize) -> Vec<UVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_uvector(&mut rng, dim)).collect()
}

pub(crate) fn u_json(u: &UVector) -> Value {
    json!({ "a": "zeta", "u": u.to_json() })
}

type SuiteFn = fn(&Ctx, &mut Checker) -> Result<()>;

struct SuiteDef {
    id: &'static str,
    description: &'static str,
    n: Option<usize>,
    m: Option<usize>,
    points: Option<usize>,
    run: SuiteFn,
}

macro_rules! suite {
    ($id:expr, $desc:expr, n = $n:expr, m = $m:expr, points = $p:expr, $f:path) => {
        SuiteDef { id: $id, description: $desc, n: $n, m: $m, points: $p, run: $f }
    };
}

fn catalog() -> Vec<SuiteDef> {
    vec![
        suite!("ybe", "Yang-Baxter relation for the R-matrix, z = a·x̄·ȳ", n = None, m = None, points = None, ybe::suite),
        suite!("dwbc-recursion", "domain-wall recursion at y_n = a·x_n", n = Some(4), m = None, points = None, symbolic::dwbc_recursion),
        suite!("dwbc-symmetry", "symmetry and degree profile of the modified domain-wall function", n = Some(4), m = None, points = None, symbolic::dwbc_symmetry),
        suite!("leading-C-S", "leading coefficients of the modified domain-wall function", n = Some(3), m = None, points = None, symbolic::leading_c_s),
        suite!("lemma2-counts", "vertex-type counts of permutation states", n = Some(5), m = None, points = None, combinatorial::lemma2_counts),
        suite!("lemma7-12-counts", "vertex-type counts of half-turn permutation states", n = Some(7), m = None, points = None, combinatorial::lemma7_12_counts),
        suite!("genfunc", "inversion generating functions, brute force vs product form", n = Some(8), m = None, points = None, combinatorial::genfunc),
        suite!("ht-even-recursion", "even half-turn recursion and symmetry, with the degree profile", n = None, m = Some(2), points = None, symbolic::ht_even_recursion),
        suite!("ht-even-leading", "leading coefficients of the even half-turn functions", n = None, m = Some(2), points = None, symbolic::ht_even_leading),
        suite!("factorization", "exact divisibility of Z_HT(2m) by Z(m)", n = None, m = Some(3), points = None, symbolic::factorization),
        suite!("ht2-recursion", "recursion and degree profile of the quotient Z_HT^(2)", n = None, m = Some(3), points = None, symbolic::ht2_recursion),
        suite!("ht-odd-recursion", "odd half-turn recursions and symmetry", n = None, m = Some(2), points = None, symbolic::ht_odd_recursion),
        suite!("ht-odd-inversion", "odd half-turn invariance under x, y inversion", n = None, m = Some(2), points = None, symbolic::ht_odd_inversion),
        suite!("ht-odd-leading", "leading coefficients of the odd half-turn function", n = None, m = Some(2), points = None, symbolic::ht_odd_leading),
        suite!("theorem1", "odd half-turn function from Z and Z_HT^(2)", n = None, m = Some(2), points = None, symbolic::theorem1),
        suite!("theorem2", "central-entry split of the odd half-turn function", n = None, m = Some(2), points = None, symbolic::theorem2),
        suite!("theorem3", "odd half-turn determinant form at a = ζ", n = None, m = Some(2), points = Some(20), special::theorem3),
        suite!("parity", "behaviour under a → −a", n = Some(4), m = Some(2), points = None, symbolic::parity),
        suite!("special-recursion", "recursions at a = ζ, u_2n = a·u_2n−1", n = Some(4), m = Some(2), points = Some(10), special::special_recursion),
        suite!("three-term", "three-term relations at a = ζ", n = Some(2), m = Some(2), points = Some(10), special::three_term),
        suite!("det-oracle", "determinant forms of Z and Z_HT^(2) at a = ζ", n = Some(3), m = Some(2), points = Some(20), special::det_oracle),
        suite!("wronskian", "Wronskian relations behind the odd determinant form", n = None, m = Some(2), points = Some(10), special::wronskian),
        suite!("counts-closed", "brute-force totals vs product formulas", n = Some(6), m = Some(3), points = None, combinatorial::counts_closed),
        suite!("refined-1", "refined 1-enumerations vs brute force", n = Some(6), m = Some(3), points = None, combinatorial::refined_1),
        suite!("xenum", "x-enumerations as specialised partition functions", n = Some(4), m = Some(2), points = None, combinatorial::xenum),
        suite!("refined-split", "refined central-entry split of odd orders", n = None, m = Some(3), points = None, combinatorial::refined_split),
        suite!("four-enum", "4-enumeration of even half-turn matrices", n = None, m = Some(3), points = None, combinatorial::four_enum),
    ]
}

/// Suite ids in catalog order.
pub fn suite_ids() -> Vec<&'static str> {
    catalog().iter().map(|s| s.id).collect()
}

/// `(id, description)` pairs.
pub fn suite_descriptions() -> Vec<(&'static str, &'static str)> {
    catalog().iter().map(|s| (s.id, s.description)).collect()
}

fn run_def(def: &SuiteDef, params: &SuiteParams) -> VerificationReport {
    let ctx = Ctx {
        suite_id: def.id,
        seed: params.seed,
        ice: params.ice,
        n_max: params.n_max.or(def.n).unwrap_or(0),
        m_max: params.m_max.or(def.m).unwrap_or(0),
        points: params.points.or(def.points).unwrap_or(0),
        uses: Uses { n: def.n.is_some(), m: def.m.is_some(), points: def.points.is_some() },
    };
    let start = Instant::now();
    let mut ck = Checker::default();
    match (def.run)(&ctx, &mut ck) {
        Ok(()) => ck.finish(def.id, ctx.params_json(), start.elapsed()),
        Err(e) => {
            let mut r = VerificationReport::from_error(def.id, ctx.params_json(), &e, start.elapsed());
            r.checks_run = ck.checks;
            r.notes = ck.notes;
            r
        }
    }
}

/// Runs one suite. Computation errors (e.g. the state guard) are reported as
/// a failing report with the error as witness.
pub fn run_suite(suite_id: &str, params: &SuiteParams) -> Result<VerificationReport> {
    let cat = catalog();
    let def = cat
        .iter()
        .find(|d| d.id == suite_id)
        .ok_or_else(|| Error::UnknownSuite(suite_id.to_string()))?;
    Ok(run_def(def, params))
}

/// Runs the whole catalog in parallel; reports come back in catalog order.
pub fn run_all(params: &SuiteParams) -> Vec<VerificationReport> {
    catalog().par_iter().map(|d| run_def(d, params)).collect()
}

/// Runs the theorem suites at a single size `m`.
pub fn verify_theorem(which: u8, m: usize, points: usize, seed: u64) -> Result<VerificationReport> {
    let id = match which {
        1 => "theorem1",
        2 => "theorem2",
        3 => "theorem3",
        _ => return Err(Error::UnknownSuite(format!("theorem{which}"))),
    };
    let ctx = Ctx {
        suite_id: id,
        seed,
        ice: IceConfig::default(),
        n_max: 0,
        m_max: m,
        points,
        uses: Uses { n: false, m: true, points: which == 3 },
    };
    let start = Instant::now();
    let mut ck = Checker::default();
    let res = match which {
        1 => symbolic::theorem1_at(&ctx, &mut ck, &[m]),
        2 => symbolic::theorem2_at(&ctx, &mut ck, &[m]),
        _ => special::theorem3_at(&ctx, &mut ck, &[m]),
    };
    let mut params = ctx.params_json();
    params.insert("m".into(), json!(m));
    params.remove("mMax");
    match res {
        Ok(()) => Ok(ck.finish(id, params, start.elapsed())),
        Err(e @ Error::SizeTooLarge { .. }) => Err(e),
        Err(e) => Ok(VerificationReport::from_error(id, params, &e, start.elapsed())),
    }
}

/// Merges JSON-lines report streams: one report per suite id (the last one
/// wins), sorted by catalog order, unknown ids last.
pub fn merge_reports(lines: &[String]) -> Result<Vec<VerificationReport>> {
    let mut by_id: BTreeMap<String, VerificationReport> = BTreeMap::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: Value = serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
        let r = VerificationReport::from_json(&v)?;
        by_id.insert(r.suite_id.clone(), r);
    }
    let order = suite_ids();
    let mut out: Vec<VerificationReport> = by_id.into_values().collect();
    out.sort_by_key(|r| order.iter().position(|id| *id == r.suite_id).unwrap_or(usize::MAX));
    Ok(out)
}

pub(crate) fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

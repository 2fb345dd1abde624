//! Square-ice partition functions for the domain-wall model and the two
//! half-turn symmetric models.
//!
//! Vertex weights: with spectral parameter `w = x_i·ȳ_j` at the crossing of
//! the horizontal line `x_i` and the vertical line `y_j`,
//! `T1, T2 ↦ σ(a²)`, `T3, T4 ↦ σ(a·w)`, `T5, T6 ↦ σ(a·w̄)`.
//!
//! Half-turn models weigh only a fundamental domain of the full state:
//!
//! * even order `2m`: columns `1..m` of every row; rows `i` and `2m+1−i`
//!   both carry `x_i` (`i ≤ m`).
//! * odd order `2m+1`: columns `1..m` of every row, rows `i` and `2m+2−i`
//!   carrying `x_i` and the middle row `x_{m+1}`, plus column `m+1` below the
//!   centre carrying `y_{m+1}`. The centre itself has weight 1.
//!
//! Sums are computed by a row-transfer recursion over column partial sums
//! (exact, and equal to the state-by-state sum, which is kept as
//! [`state_sum_reference`] for testing). A half-turn symmetric matrix is
//! determined by its top half, and a vertex in the lower half has the same
//! weight class and spectral parameter as its rotated partner, so only the
//! top half needs to be walked.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::asm::{Asm, VertexType};
use crate::enumerate::{admissible_rows, apply_row, gen_asms, AsmClass};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloNum};
use crate::laurent::{sigma, IntPoly, LaurentPoly, VarAssignment};

pub const DEFAULT_MAX_STATES: u128 = 10_000_000;
pub const MAX_STATES_ENV: &str = "HALFTURN_ICE_MAX_STATES";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ModelKind {
    Dwbc,
    HtEven,
    HtOdd,
}

impl std::str::FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dwbc" => Ok(ModelKind::Dwbc),
            "ht-even" | "htEven" => Ok(ModelKind::HtEven),
            "ht-odd" | "htOdd" => Ok(ModelKind::HtOdd),
            _ => Err(Error::Parse(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Normalization {
    Standard,
    Modified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ModelSpec {
    pub kind: ModelKind,
    /// `n` for the domain-wall model, `m` for the half-turn models.
    pub size_param: usize,
    pub normalization: Normalization,
    pub x_vars: Vec<String>,
    pub y_vars: Vec<String>,
}

/// A weighted vertex: 0-based position in the full state and the indices of
/// its horizontal and vertical spectral lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Site {
    pub row: usize,
    pub col: usize,
    pub x_line: usize,
    pub y_line: usize,
}

fn default_names(prefix: char, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{prefix}{i}")).collect()
}

impl ModelSpec {
    fn new(kind: ModelKind, size_param: usize) -> ModelSpec {
        let mut s = ModelSpec {
            kind,
            size_param,
            normalization: Normalization::Standard,
            x_vars: Vec::new(),
            y_vars: Vec::new(),
        };
        s.x_vars = default_names('x', s.lines());
        s.y_vars = default_names('y', s.lines());
        s
    }

    pub fn dwbc(n: usize) -> ModelSpec {
        Self::new(ModelKind::Dwbc, n)
    }

    pub fn ht_even(m: usize) -> ModelSpec {
        Self::new(ModelKind::HtEven, m)
    }

    pub fn ht_odd(m: usize) -> ModelSpec {
        Self::new(ModelKind::HtOdd, m)
    }

    pub fn modified(mut self) -> ModelSpec {
        self.normalization = Normalization::Modified;
        self
    }

    /// Uses custom spectral variable names (one per line).
    pub fn with_vars(mut self, xs: &[&str], ys: &[&str]) -> Result<ModelSpec> {
        let k = self.lines();
        for v in [xs, ys] {
            if v.len() != k {
                return Err(Error::DimensionMismatch { expected: k, got: v.len() });
            }
        }
        self.x_vars = xs.iter().map(|s| s.to_string()).collect();
        self.y_vars = ys.iter().map(|s| s.to_string()).collect();
        Ok(self)
    }

    /// Order of the underlying matrices.
    pub fn order(&self) -> usize {
        match self.kind {
            ModelKind::Dwbc => self.size_param,
            ModelKind::HtEven => 2 * self.size_param,
            ModelKind::HtOdd => 2 * self.size_param + 1,
        }
    }

    /// Number of distinct horizontal (and vertical) spectral parameters.
    pub fn lines(&self) -> usize {
        match self.kind {
            ModelKind::HtOdd => self.size_param + 1,
            _ => self.size_param,
        }
    }

    pub fn class(&self) -> AsmClass {
        match self.kind {
            ModelKind::Dwbc => AsmClass::All,
            _ => AsmClass::HalfTurn,
        }
    }

    pub fn fundamental_sites(&self) -> Vec<Site> {
        let n = self.order();
        let m = self.size_param;
        let mut sites = Vec::new();
        match self.kind {
            ModelKind::Dwbc => {
                for row in 0..n {
                    for col in 0..n {
                        sites.push(Site { row, col, x_line: row, y_line: col });
                    }
                }
            }
            ModelKind::HtEven => {
                for row in 0..n {
                    for col in 0..m {
                        sites.push(Site { row, col, x_line: row.min(n - 1 - row), y_line: col });
                    }
                }
            }
            ModelKind::HtOdd => {
                for row in 0..n {
                    for col in 0..m {
                        sites.push(Site { row, col, x_line: row.min(2 * m - row), y_line: col });
                    }
                }
                for row in m + 1..n {
                    sites.push(Site { row, col: m, x_line: 2 * m - row, y_line: m });
                }
            }
        }
        sites
    }

    /// Exponent `e_i` such that the modified function is `∏ x_i^{e_i} y_i^{e_i} · Z`.
    pub fn multiplier_exponents(&self) -> Vec<i32> {
        let m = self.size_param as i32;
        match self.kind {
            ModelKind::Dwbc => vec![m - 1; self.lines()],
            ModelKind::HtEven => vec![2 * m - 1; self.lines()],
            ModelKind::HtOdd => {
                let mut e = vec![2 * m; self.size_param];
                e.push(m);
                e
            }
        }
    }

    pub fn multiplier(&self) -> IntPoly {
        let e = self.multiplier_exponents();
        let mut powers: Vec<(&str, i32)> = Vec::new();
        for (k, &ek) in e.iter().enumerate() {
            powers.push((&self.x_vars[k], ek));
            powers.push((&self.y_vars[k], ek));
        }
        IntPoly::monomial(BigInt::from(1), &powers)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WeightClass {
    Cross,
    Same,
    Opposite,
}

fn class_of(t: VertexType) -> WeightClass {
    match t {
        VertexType::T1 | VertexType::T2 => WeightClass::Cross,
        VertexType::T3 | VertexType::T4 => WeightClass::Same,
        VertexType::T5 | VertexType::T6 => WeightClass::Opposite,
    }
}

/// Weight of a vertex of type `t` on lines `x`, `y`.
pub fn vertex_weight(t: VertexType, x: &str, y: &str, normalization: Normalization) -> IntPoly {
    match (class_of(t), normalization) {
        (WeightClass::Cross, _) => sigma(&[("a", 2)]),
        (WeightClass::Same, Normalization::Standard) => sigma(&[("a", 1), (x, 1), (y, -1)]),
        (WeightClass::Opposite, Normalization::Standard) => sigma(&[("a", 1), (x, -1), (y, 1)]),
        (WeightClass::Same, Normalization::Modified) => IntPoly::monomial(BigInt::from(1), &[("a", 1), (x, 2)])
            .sub(&IntPoly::monomial(BigInt::from(1), &[("a", -1), (y, 2)])),
        (WeightClass::Opposite, Normalization::Modified) => IntPoly::monomial(BigInt::from(1), &[("a", 1), (y, 2)])
            .sub(&IntPoly::monomial(BigInt::from(1), &[("a", -1), (x, 2)])),
    }
}

/// Limits for the state sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IceConfig {
    pub max_states: u128,
}

impl Default for IceConfig {
    /// Reads the bound from `HALFTURN_ICE_MAX_STATES` when set.
    fn default() -> Self {
        let max_states = std::env::var(MAX_STATES_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_STATES);
        IceConfig { max_states }
    }
}

// ---------------------------------------------------------------------------
// accumulators

trait Semiring: Clone + Send + Sync {
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
}

#[derive(Clone)]
struct Scalar<C>(C);

impl<C: Coeff> Semiring for Scalar<C> {
    fn add_assign(&mut self, other: &Self) {
        self.0.add_assign_ref(&other.0);
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar(self.0.mul_ref(&other.0))
    }
}

const FIELD_BITS: u32 = 11;
const FIELD_BIAS: i64 = 1 << (FIELD_BITS - 1);
const MAX_PACKED_VARS: usize = (128 / FIELD_BITS) as usize;

/// Sparse integer polynomial with exponent vectors packed into a `u128`
/// (biased fields), used for the symbolic state sums. `bias` is the key of
/// the unit monomial.
#[derive(Clone)]
struct Packed {
    terms: HashMap<u128, i128>,
    bias: u128,
}

fn bias_all(nvars: usize) -> u128 {
    (0..nvars).fold(0u128, |acc, k| acc | ((FIELD_BIAS as u128) << (k as u32 * FIELD_BITS)))
}

fn pack(exps: &[i32]) -> u128 {
    exps.iter().enumerate().fold(0u128, |acc, (k, &e)| {
        let f = (e as i64 + FIELD_BIAS) as u128;
        acc | (f << (k as u32 * FIELD_BITS))
    })
}

fn unpack(key: u128, nvars: usize) -> Vec<i32> {
    let mask = (1u128 << FIELD_BITS) - 1;
    (0..nvars)
        .map(|k| (((key >> (k as u32 * FIELD_BITS)) & mask) as i64 - FIELD_BIAS) as i32)
        .collect()
}

impl Packed {
    fn zero(bias: u128) -> Self {
        Packed { terms: HashMap::new(), bias }
    }

    fn one(bias: u128) -> Self {
        let mut p = Packed::zero(bias);
        p.terms.insert(bias, 1);
        p
    }
}

impl Semiring for Packed {
    fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            let e = self.terms.entry(*k).or_insert(0);
            *e = e.checked_add(*c).expect("coefficient overflow");
            if *e == 0 {
                self.terms.remove(k);
            }
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let bias = self.bias;
        let mut terms: HashMap<u128, i128> = HashMap::with_capacity(self.terms.len() * other.terms.len().min(8));
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let k = k1 + k2 - bias;
                let p = c1.checked_mul(*c2).expect("coefficient overflow");
                let e = terms.entry(k).or_insert(0);
                *e = e.checked_add(p).expect("coefficient overflow");
            }
        }
        terms.retain(|_, c| *c != 0);
        Packed { terms, bias }
    }
}

// ---------------------------------------------------------------------------
// row transfer

/// Weighted columns of one processed row: `(x_line, y_line)` or `None` when
/// the vertex is outside the fundamental domain.
type RowSites = Vec<Option<(usize, usize)>>;

struct Layout {
    kind: ModelKind,
    n: usize,
    m: usize,
    top: Vec<RowSites>,
    middle: Option<RowSites>,
}

fn layout(spec: &ModelSpec) -> Layout {
    let n = spec.order();
    let m = spec.size_param;
    match spec.kind {
        ModelKind::Dwbc => Layout {
            kind: spec.kind,
            n,
            m,
            top: (0..n).map(|i| (0..n).map(|j| Some((i, j))).collect()).collect(),
            middle: None,
        },
        ModelKind::HtEven => Layout {
            kind: spec.kind,
            n,
            m,
            top: (0..m)
                .map(|i| (0..n).map(|j| Some((i, j.min(n - 1 - j)))).collect())
                .collect(),
            middle: None,
        },
        ModelKind::HtOdd => {
            let y_of = |j: usize| if j <= m { j } else { 2 * m - j };
            Layout {
                kind: spec.kind,
                n,
                m,
                top: (0..m).map(|i| (0..n).map(|j| Some((i, y_of(j)))).collect()).collect(),
                middle: Some((0..n).map(|j| (j < m).then_some((m, j))).collect()),
            }
        }
    }
}

/// `table[class][x_line][y_line]`, with the ring's unit and zero.
struct WeightTable<T> {
    table: [Vec<Vec<T>>; 3],
    one: T,
    zero: T,
}

impl<T: Semiring> WeightTable<T> {
    fn get(&self, t: VertexType, x: usize, y: usize) -> &T {
        let c = match class_of(t) {
            WeightClass::Cross => 0,
            WeightClass::Same => 1,
            WeightClass::Opposite => 2,
        };
        &self.table[c][x][y]
    }

    fn build(lines: usize, one: T, zero: T, f: impl Fn(WeightClass, usize, usize) -> T) -> Self {
        let mk = |c: WeightClass| (0..lines).map(|x| (0..lines).map(|y| f(c, x, y)).collect()).collect();
        WeightTable {
            table: [mk(WeightClass::Cross), mk(WeightClass::Same), mk(WeightClass::Opposite)],
            one,
            zero,
        }
    }
}

fn row_weight<T: Semiring>(sites: &RowSites, cols: u32, row: &[i8], w: &WeightTable<T>) -> T {
    let mut acc = w.one.clone();
    let mut h = 0i8;
    for (j, &e) in row.iter().enumerate() {
        if let Some((x, y)) = sites[j] {
            let v = ((cols >> j) & 1) as u8;
            let t = VertexType::from_edges(h as u8, v, e);
            acc = acc.mul(w.get(t, x, y));
        }
        h += e;
    }
    acc
}

/// Sum split by central entry: `(+1 or no centre, −1)`.
struct Sums<T> {
    plus: T,
    minus: T,
}

fn bit(c: u32, j: usize) -> u32 {
    (c >> j) & 1
}

fn transfer<T: Semiring>(lay: &Layout, w: &WeightTable<T>) -> Sums<T> {
    let n = lay.n;
    let mut layer: BTreeMap<u32, T> = BTreeMap::new();
    layer.insert(0, w.one.clone());
    for sites in &lay.top {
        let parts: Vec<Vec<(u32, T)>> = layer
            .par_iter()
            .map(|(&cols, val)| {
                admissible_rows(n, cols)
                    .into_iter()
                    .map(|row| (apply_row(cols, &row), val.mul(&row_weight(sites, cols, &row, w))))
                    .collect()
            })
            .collect();
        let mut next: BTreeMap<u32, T> = BTreeMap::new();
        for (c, v) in parts.into_iter().flatten() {
            next.entry(c).or_insert_with(|| w.zero.clone()).add_assign(&v);
        }
        layer = next;
    }
    let mut sums = Sums { plus: w.zero.clone(), minus: w.zero.clone() };
    match lay.kind {
        ModelKind::Dwbc => {
            let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
            if let Some(v) = layer.get(&full) {
                sums.plus = v.clone();
            }
        }
        ModelKind::HtEven => {
            for (c, v) in &layer {
                if (0..n).all(|j| bit(*c, j) + bit(*c, n - 1 - j) == 1) {
                    sums.plus.add_assign(v);
                }
            }
        }
        ModelKind::HtOdd => {
            let sites = lay.middle.as_ref().expect("odd layout has a middle row");
            for (&before, v) in &layer {
                for row in admissible_rows(n, before) {
                    if (0..n).any(|j| row[j] != row[n - 1 - j]) {
                        continue;
                    }
                    let after = apply_row(before, &row);
                    if !(0..n).all(|j| bit(after, j) + bit(before, n - 1 - j) == 1) {
                        continue;
                    }
                    let term = v.mul(&row_weight(sites, before, &row, w));
                    if row[lay.m] == 1 {
                        sums.plus.add_assign(&term);
                    } else {
                        sums.minus.add_assign(&term);
                    }
                }
            }
        }
    }
    sums
}

/// Number of states of the model, split by central entry.
pub fn state_counts(spec: &ModelSpec) -> (BigInt, BigInt) {
    let lay = layout(spec);
    let one = Scalar(BigInt::from(1));
    let w = WeightTable::build(spec.lines(), one.clone(), Scalar(BigInt::from(0)), |_, _, _| one.clone());
    let s = transfer(&lay, &w);
    (s.plus.0, s.minus.0)
}

fn check_guard(spec: &ModelSpec, cfg: &IceConfig) -> Result<BigInt> {
    let (p, q) = state_counts(spec);
    let total = p + q;
    let count = total.to_u128().unwrap_or(u128::MAX);
    if count > cfg.max_states {
        return Err(Error::SizeTooLarge { count, bound: cfg.max_states });
    }
    Ok(total)
}

/// Symbolic sums `(Z⁺, Z⁻)` over the standard variables `a, x1.., y1..`.
#[derive(Clone, Debug)]
struct SymbolicSums {
    plus: IntPoly,
    minus: IntPoly,
    counts: (BigInt, BigInt),
}

type Cache = Mutex<HashMap<(ModelKind, usize), Arc<SymbolicSums>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn symbolic_sums(kind: ModelKind, size: usize, cfg: &IceConfig) -> Result<Arc<SymbolicSums>> {
    let spec = ModelSpec::new(kind, size);
    check_guard(&spec, cfg)?;
    if let Some(hit) = cache().lock().expect("cache lock").get(&(kind, size)) {
        return Ok(hit.clone());
    }
    let lines = spec.lines();
    let nvars = 1 + 2 * lines;
    if nvars > MAX_PACKED_VARS {
        return Err(Error::UnsupportedSize(format!(
            "symbolic sums support at most {} spectral lines",
            (MAX_PACKED_VARS - 1) / 2
        )));
    }
    let mut names = vec!["a".to_string()];
    names.extend(spec.x_vars.iter().cloned());
    names.extend(spec.y_vars.iter().cloned());
    let lay = layout(&spec);

    let bias = bias_all(nvars);
    let sums = {
        let mono = |a: i32, x: usize, xe: i32, y: usize, ye: i32| {
            let mut e = vec![0; nvars];
            e[0] = a;
            e[1 + x] += xe;
            e[1 + lines + y] += ye;
            pack(&e)
        };
        let w = WeightTable::build(lines, Packed::one(bias), Packed::zero(bias), |c, x, y| {
            let (hi, lo) = match c {
                WeightClass::Cross => (mono(2, x, 0, y, 0), mono(-2, x, 0, y, 0)),
                WeightClass::Same => (mono(1, x, 1, y, -1), mono(-1, x, -1, y, 1)),
                WeightClass::Opposite => (mono(1, x, -1, y, 1), mono(-1, x, 1, y, -1)),
            };
            let mut p = Packed::zero(bias);
            p.terms.insert(hi, 1);
            p.terms.insert(lo, -1);
            p
        });
        transfer(&lay, &w)
    };
    let to_poly = |p: &Packed| {
        let terms = p
            .terms
            .iter()
            .map(|(k, c)| (unpack(*k, nvars), BigInt::from(*c)))
            .collect();
        IntPoly::from_terms(names.clone(), terms)
    };
    let out = Arc::new(SymbolicSums {
        plus: to_poly(&sums.plus),
        minus: to_poly(&sums.minus),
        counts: state_counts(&spec),
    });
    cache().lock().expect("cache lock").insert((kind, size), out.clone());
    Ok(out)
}

fn rename_to_spec(p: &IntPoly, spec: &ModelSpec) -> IntPoly {
    let std = ModelSpec::new(spec.kind, spec.size_param);
    let map: Vec<(&str, &str)> = std
        .x_vars
        .iter()
        .zip(&spec.x_vars)
        .chain(std.y_vars.iter().zip(&spec.y_vars))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    if map.is_empty() {
        p.clone()
    } else {
        p.rename(&map)
    }
}

fn normalize(p: IntPoly, spec: &ModelSpec) -> IntPoly {
    match spec.normalization {
        Normalization::Standard => p,
        Normalization::Modified => p.mul(&spec.multiplier()),
    }
}

/// Evaluated or symbolic value of a partition function.
#[derive(Clone, Debug, PartialEq)]
pub enum PartitionValue {
    Symbolic(IntPoly),
    Evaluated(CycloNum),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PartitionResult {
    pub model: ModelSpec,
    pub state_count: BigInt,
    pub value: PartitionValue,
}

impl PartitionResult {
    pub fn symbolic(&self) -> Option<&IntPoly> {
        match &self.value {
            PartitionValue::Symbolic(p) => Some(p),
            PartitionValue::Evaluated(_) => None,
        }
    }

    pub fn evaluated(&self) -> Option<&CycloNum> {
        match &self.value {
            PartitionValue::Evaluated(v) => Some(v),
            PartitionValue::Symbolic(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let value = match &self.value {
            PartitionValue::Symbolic(p) => p.to_json(),
            PartitionValue::Evaluated(v) => v.to_json(),
        };
        json!({
            "model": {
                "kind": self.model.kind,
                "sizeParam": self.model.size_param,
                "normalization": self.model.normalization,
                "stateCount": self.state_count.to_string(),
                "xVars": self.model.x_vars,
                "yVars": self.model.y_vars,
            },
            "value": value,
        })
    }
}

/// Symbolic partition function of `spec`, honouring its variable names and
/// normalization.
pub fn symbolic_z(spec: &ModelSpec) -> Result<IntPoly> {
    symbolic_z_with(spec, &IceConfig::default())
}

pub fn symbolic_z_with(spec: &ModelSpec, cfg: &IceConfig) -> Result<IntPoly> {
    let s = symbolic_sums(spec.kind, spec.size_param, cfg)?;
    let z = s.plus.add(&s.minus);
    Ok(normalize(rename_to_spec(&z, spec), spec))
}

/// `Z` for the model; symbolic when `at` is `None`, otherwise evaluated
/// directly in Q(ζ) at the assignment (which must cover `a` and every
/// spectral variable).
pub fn partition_function(
    spec: &ModelSpec,
    at: Option<&VarAssignment<CycloNum>>,
    cfg: &IceConfig,
) -> Result<PartitionResult> {
    let (value, state_count) = match at {
        None => {
            let s = symbolic_sums(spec.kind, spec.size_param, cfg)?;
            let z = s.plus.add(&s.minus);
            (
                PartitionValue::Symbolic(normalize(rename_to_spec(&z, spec), spec)),
                &s.counts.0 + &s.counts.1,
            )
        }
        Some(at) => {
            let count = check_guard(spec, cfg)?;
            let (p, q) = evaluate_sums(spec, at)?;
            let mut v = p.add_ref(&q);
            if spec.normalization == Normalization::Modified {
                v = v.mul_ref(&spec.multiplier().map_coeffs(|c| CycloNum::from(c)).eval(at)?);
            }
            (PartitionValue::Evaluated(v), count)
        }
    };
    Ok(PartitionResult { model: spec.clone(), state_count, value })
}

fn lookup(at: &VarAssignment<CycloNum>, var: &str) -> Result<CycloNum> {
    at.get(var)
        .cloned()
        .ok_or_else(|| Error::UnassignedVariable { var: var.to_string() })
}

/// `(Z⁺, Z⁻)` evaluated at a point, weights computed directly in Q(ζ).
pub fn evaluate_sums(spec: &ModelSpec, at: &VarAssignment<CycloNum>) -> Result<(CycloNum, CycloNum)> {
    let a = lookup(at, "a")?;
    let xs: Vec<CycloNum> = spec.x_vars.iter().map(|v| lookup(at, v)).collect::<Result<_>>()?;
    let ys: Vec<CycloNum> = spec.y_vars.iter().map(|v| lookup(at, v)).collect::<Result<_>>()?;
    let inv = |v: &CycloNum, name: &str| {
        v.inverse().ok_or_else(|| Error::NonInvertibleValue { var: name.to_string() })
    };
    let sig = |w: CycloNum| -> Result<CycloNum> { Ok(w.sub_ref(&inv(&w, "a")?)) };
    let cross = sig(a.mul_ref(&a))?;
    let lines = spec.lines();
    let mut same = vec![vec![CycloNum::zero(); lines]; lines];
    let mut opp = vec![vec![CycloNum::zero(); lines]; lines];
    for x in 0..lines {
        for y in 0..lines {
            let w = xs[x].mul_ref(&inv(&ys[y], &spec.y_vars[y])?);
            inv(&xs[x], &spec.x_vars[x])?;
            same[x][y] = sig(a.mul_ref(&w))?;
            opp[x][y] = sig(a.mul_ref(&inv(&w, &spec.x_vars[x])?))?;
        }
    }
    let w = WeightTable::build(lines, Scalar(CycloNum::one()), Scalar(CycloNum::zero()), |c, x, y| {
        Scalar(match c {
            WeightClass::Cross => cross.clone(),
            WeightClass::Same => same[x][y].clone(),
            WeightClass::Opposite => opp[x][y].clone(),
        })
    });
    let s = transfer(&layout(spec), &w);
    Ok((s.plus.0, s.minus.0))
}

/// Weight of one full state under the model, as a product over the
/// fundamental domain (standard normalization).
pub fn state_weight(asm: &Asm, spec: &ModelSpec) -> Result<IntPoly> {
    if asm.order() != spec.order() {
        return Err(Error::DimensionMismatch { expected: spec.order(), got: asm.order() });
    }
    let state = asm.to_state();
    let factors: Vec<IntPoly> = spec
        .fundamental_sites()
        .iter()
        .map(|s| {
            vertex_weight(
                state.at(s.row, s.col),
                &spec.x_vars[s.x_line],
                &spec.y_vars[s.y_line],
                Normalization::Standard,
            )
        })
        .collect();
    Ok(IntPoly::product(&factors))
}

/// `Z` as a sum over explicitly generated states; the slow reference for the
/// transfer computation.
pub fn state_sum_reference(spec: &ModelSpec) -> Result<IntPoly> {
    if spec.order() == 0 {
        return Ok(normalize(IntPoly::one(), spec));
    }
    let states: Vec<Asm> = gen_asms(spec.order(), spec.class())?
        .into_iter()
        .filter(|a| spec.kind == ModelKind::Dwbc || a.is_half_turn_symmetric())
        .collect();
    let parts: Vec<IntPoly> = states
        .par_iter()
        .map(|a| state_weight(a, spec))
        .collect::<Result<_>>()?;
    let z = parts.iter().fold(IntPoly::zero(), |acc, p| acc.add(p));
    Ok(normalize(z, spec))
}

/// `Z_HT^{(2)}(2m) = Z_HT(2m) / Z(m)`, over `x1..xm, y1..ym`.
pub fn z_ht2(m: usize) -> Result<IntPoly> {
    z_ht2_with(m, &IceConfig::default())
}

pub fn z_ht2_with(m: usize, cfg: &IceConfig) -> Result<IntPoly> {
    let key = (ModelKind::HtEven, usize::MAX - m);
    if let Some(hit) = cache().lock().expect("cache lock").get(&key) {
        return Ok(hit.plus.clone());
    }
    let zht = symbolic_z_with(&ModelSpec::ht_even(m), cfg)?;
    let z = symbolic_z_with(&ModelSpec::dwbc(m), cfg)?;
    let q = zht.exact_div(&z).map_err(|e| match e {
        Error::NotDivisible { context } => Error::NotDivisible {
            context: format!("Z_HT({}) by Z({m}): {context}", 2 * m),
        },
        other => other,
    })?;
    let entry = Arc::new(SymbolicSums {
        plus: q.clone(),
        minus: IntPoly::zero(),
        counts: (BigInt::from(0), BigInt::from(0)),
    });
    cache().lock().expect("cache lock").insert(key, entry);
    Ok(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitMethod {
    Parity,
    Direct,
}

/// Contributions `(Z⁺, Z⁻)` to `Z_HT(2m+1)` of states with central entry
/// +1 and −1.
pub fn z_split_odd(m: usize, method: SplitMethod) -> Result<(PartitionResult, PartitionResult)> {
    z_split_odd_with(m, method, &IceConfig::default())
}

pub fn z_split_odd_with(
    m: usize,
    method: SplitMethod,
    cfg: &IceConfig,
) -> Result<(PartitionResult, PartitionResult)> {
    let spec = ModelSpec::ht_odd(m);
    let s = symbolic_sums(ModelKind::HtOdd, m, cfg)?;
    let (plus, minus) = match method {
        SplitMethod::Direct => (s.plus.clone(), s.minus.clone()),
        SplitMethod::Parity => {
            let z = s.plus.add(&s.minus);
            let flipped = z.negate_a();
            let flipped = if m.is_multiple_of(2) { flipped } else { flipped.neg() };
            let half = |p: IntPoly| -> Result<IntPoly> { p.exact_div(&IntPoly::from_int(2)) };
            (half(z.add(&flipped))?, half(z.sub(&flipped))?)
        }
    };
    let wrap = |p: IntPoly, count: &BigInt| PartitionResult {
        model: spec.clone(),
        state_count: count.clone(),
        value: PartitionValue::Symbolic(p),
    };
    Ok((wrap(plus, &s.counts.0), wrap(minus, &s.counts.1)))
}

/// Convenience wrapper for symbolic `Z(n)`, `Z_HT(2m)` and `Z_HT(2m+1)` with
/// custom variable names.
pub fn z_named(kind: ModelKind, size: usize, xs: &[&str], ys: &[&str]) -> Result<IntPoly> {
    symbolic_z(&ModelSpec::new(kind, size).with_vars(xs, ys)?)
}

/// `Z_HT^{(2)}(2m)` over custom variable names.
pub fn z_ht2_named(m: usize, xs: &[&str], ys: &[&str]) -> Result<IntPoly> {
    let q = z_ht2(m)?;
    let spec = ModelSpec::ht_even(m).with_vars(xs, ys)?;
    Ok(rename_to_spec(&q, &spec))
}

/// Evaluates an integer polynomial in Q(ζ).
pub fn eval_int(p: &IntPoly, at: &VarAssignment<CycloNum>) -> Result<CycloNum> {
    p.map_coeffs(|c| CycloNum::from(c)).eval(at)
}

/// Lifts an integer polynomial to any coefficient ring containing Z.
pub fn lift<C: Coeff>(p: &IntPoly, f: impl Fn(&BigInt) -> C) -> LaurentPoly<C> {
    p.map_coeffs(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    fn at_all(names: &[String], a: CycloNum, v: CycloNum) -> VarAssignment<CycloNum> {
        let mut at = VarAssignment::new();
        at.insert("a".into(), a);
        for n in names {
            at.insert(n.clone(), v.clone());
        }
        at
    }

    #[test]
    fn weight_examples() {
        use VertexType::*;
        assert_eq!(vertex_weight(T1, "x1", "y1", Normalization::Standard).to_string(), "a^2 - a^-2");
        assert_eq!(
            vertex_weight(T3, "x1", "y2", Normalization::Standard),
            sigma(&[("a", 1), ("x1", 1), ("y2", -1)])
        );
        let m = vertex_weight(T5, "x1", "y2", Normalization::Modified);
        let expect = IntPoly::monomial(1.into(), &[("a", 1), ("y2", 2)])
            .sub(&IntPoly::monomial(1.into(), &[("a", -1), ("x1", 2)]));
        assert_eq!(m, expect);
    }

    #[test]
    fn transfer_matches_state_sums() {
        for spec in [
            ModelSpec::dwbc(1),
            ModelSpec::dwbc(2),
            ModelSpec::dwbc(3),
            ModelSpec::ht_even(1),
            ModelSpec::ht_even(2),
            ModelSpec::ht_odd(0),
            ModelSpec::ht_odd(1),
            ModelSpec::ht_odd(2),
        ] {
            assert_eq!(symbolic_z(&spec).unwrap(), state_sum_reference(&spec).unwrap(), "{spec:?}");
        }
    }

    #[test]
    fn dwbc_one_is_sigma_a_squared() {
        assert_eq!(symbolic_z(&ModelSpec::dwbc(1)).unwrap(), sigma(&[("a", 2)]));
        assert_eq!(symbolic_z(&ModelSpec::dwbc(1).modified()).unwrap(), sigma(&[("a", 2)]));
    }

    #[test]
    fn evaluated_examples() {
        let cfg = IceConfig::default();
        let spec = ModelSpec::dwbc(3);
        let mut names = spec.x_vars.clone();
        names.extend(spec.y_vars.clone());
        let at = at_all(&names, CycloNum::zeta(), CycloNum::one());
        let r = partition_function(&spec, Some(&at), &cfg).unwrap();
        assert_eq!(r.evaluated().unwrap().to_string(), "1134*zeta - 567");
        assert_eq!(r.state_count, BigInt::from(7));

        let spec = ModelSpec::ht_odd(1);
        let mut names = spec.x_vars.clone();
        names.extend(spec.y_vars.clone());
        let at = at_all(&names, CycloNum::zeta(), CycloNum::one());
        let r = partition_function(&spec, Some(&at), &cfg).unwrap();
        assert_eq!(r.evaluated().unwrap(), &CycloNum::from_int(27));
    }

    #[test]
    fn evaluated_agrees_with_symbolic() {
        let spec = ModelSpec::ht_even(2);
        let z = symbolic_z(&spec).unwrap();
        let mut at = VarAssignment::new();
        at.insert("a".into(), CycloNum::new(rational(2, 3), rational(1, 5)));
        for (k, v) in spec.x_vars.iter().chain(&spec.y_vars).enumerate() {
            at.insert(v.clone(), CycloNum::from_rational(rational(k as i64 + 2, 3)));
        }
        let direct = partition_function(&spec, Some(&at), &IceConfig::default()).unwrap();
        assert_eq!(direct.evaluated().unwrap(), &eval_int(&z, &at).unwrap());
    }

    #[test]
    fn modified_functions_are_polynomial_in_spectral_vars() {
        let spectral_nonneg = |z: &IntPoly| {
            z.terms().all(|(mono, _)| {
                z.vars().iter().filter(|v| *v != "a").all(|v| z.exponent_of(mono, v) >= 0)
            })
        };
        assert!(spectral_nonneg(&symbolic_z(&ModelSpec::dwbc(3).modified()).unwrap()));
        assert!(spectral_nonneg(&symbolic_z(&ModelSpec::ht_even(2).modified()).unwrap()));
        let z = symbolic_z(&ModelSpec::ht_odd(1).modified()).unwrap();
        assert!(spectral_nonneg(&z));
        for (mono, _) in z.terms() {
            let spectral = mono.degree() - z.exponent_of(mono, "a") as i64;
            assert_eq!(spectral, 6);
        }
    }

    #[test]
    fn state_guard() {
        let cfg = IceConfig { max_states: 5 };
        let err = partition_function(&ModelSpec::dwbc(3), None, &cfg);
        assert!(matches!(err, Err(Error::SizeTooLarge { count: 7, bound: 5 })));
    }

    #[test]
    fn ht2_factor_at_one() {
        let q = z_ht2(1).unwrap();
        let (lo, hi) = q.degree_range("y1").unwrap();
        assert!(hi - lo >= 1);
        assert!(z_ht2(2).is_ok());
    }

    #[test]
    fn odd_split_small() {
        let (p, q) = z_split_odd(1, SplitMethod::Direct).unwrap();
        assert_eq!(p.state_count, BigInt::from(2));
        assert_eq!(q.state_count, BigInt::from(1));
        let (pp, qq) = z_split_odd(1, SplitMethod::Parity).unwrap();
        assert_eq!(p.value, pp.value);
        assert_eq!(q.value, qq.value);
        let (p0, q0) = z_split_odd(0, SplitMethod::Direct).unwrap();
        assert_eq!(p0.symbolic().unwrap(), &IntPoly::one());
        assert!(q0.symbolic().unwrap().is_zero());
    }
}

//! Exhaustive generation of alternating-sign matrices and the weighted
//! censuses built from them.
//!
//! Matrices are produced row by row. A row is admissible when every partial
//! row sum and every updated partial column sum stays in {0, 1}; this is the
//! alternating condition checked incrementally. Rows are tried in
//! lexicographic order with −1 < 0 < 1, so the output stream is row-major
//! lexicographic. Half-turn symmetric matrices are generated from their top
//! half and completed by rotation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::asm::{inversions, Asm};
use crate::error::{Error, Result};
use crate::laurent::IntPoly;

/// Polynomial with nonnegative integer coefficients used for counts.
pub type CountPoly = IntPoly;

/// Orders above this cannot be represented by the bitmask generators.
pub const MAX_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AsmClass {
    All,
    #[serde(rename = "ht")]
    HalfTurn,
}

impl std::str::FromStr for AsmClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(AsmClass::All),
            "ht" => Ok(AsmClass::HalfTurn),
            _ => Err(Error::Parse(format!("unknown class {s:?}"))),
        }
    }
}

/// All rows compatible with the column partial sums in `cols` (bit j set
/// means column j currently sums to 1), in lexicographic order.
pub(crate) fn admissible_rows(n: usize, cols: u32) -> Vec<Vec<i8>> {
    fn go(n: usize, cols: u32, j: usize, h: i8, cur: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
        if j == n {
            if h == 1 {
                out.push(cur.clone());
            }
            return;
        }
        let v = ((cols >> j) & 1) as i8;
        for e in [-1i8, 0, 1] {
            if (0..=1).contains(&(h + e)) && (0..=1).contains(&(v + e)) {
                cur.push(e);
                go(n, cols, j + 1, h + e, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, cols, 0, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

pub(crate) fn apply_row(cols: u32, row: &[i8]) -> u32 {
    let mut c = cols;
    for (j, &e) in row.iter().enumerate() {
        match e {
            1 => c |= 1 << j,
            -1 => c &= !(1 << j),
            _ => {}
        }
    }
    c
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::UnsupportedSize(format!("order must be in 1..={MAX_ORDER}, got {n}")));
    }
    Ok(())
}

/// Every matrix of the class, in row-major lexicographic order.
pub fn gen_asms(n: usize, class: AsmClass) -> Result<Vec<Asm>> {
    check_order(n)?;
    let first_rows = admissible_rows(n, 0);
    let chunks: Vec<Vec<Asm>> = first_rows
        .par_iter()
        .map(|row| {
            let mut out = Vec::new();
            let mut prefix = row.clone();
            let cols = apply_row(0, row);
            match class {
                AsmClass::All => extend_all(n, 1, cols, &mut prefix, &mut out),
                AsmClass::HalfTurn => extend_ht(n, 1, cols, &mut prefix, &mut out),
            }
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Number of matrices in the class.
pub fn count_asms(n: usize, class: AsmClass) -> Result<u64> {
    Ok(gen_asms(n, class)?.len() as u64)
}

fn extend_all(n: usize, i: usize, cols: u32, prefix: &mut Vec<i8>, out: &mut Vec<Asm>) {
    if i == n {
        if cols == (1u32 << n) - 1 {
            out.push(Asm::from_entries_unchecked(n, prefix.clone()));
        }
        return;
    }
    // the remaining n - i rows must raise the column count to n
    if (n - i) as u32 + cols.count_ones() < n as u32 {
        return;
    }
    for row in admissible_rows(n, cols) {
        prefix.extend_from_slice(&row);
        extend_all(n, i + 1, apply_row(cols, &row), prefix, out);
        prefix.truncate(prefix.len() - n);
    }
}

fn extend_ht(n: usize, i: usize, cols: u32, prefix: &mut Vec<i8>, out: &mut Vec<Asm>) {
    let half = n.div_ceil(2);
    if n == 1 {
        out.push(Asm::from_entries_unchecked(1, vec![1]));
        return;
    }
    if i == half {
        let mut entries = prefix.clone();
        let top = n / 2 * n;
        for k in (0..top).rev() {
            entries.push(prefix[k]);
        }
        // the rotated lower half completes the columns; a final check covers the seam
        if let Ok(a) = Asm::from_entries(n, entries) {
            out.push(a);
        }
        return;
    }
    for row in admissible_rows(n, cols) {
        let middle = n % 2 == 1 && i == n / 2;
        if middle && (0..n).any(|j| row[j] != row[n - 1 - j]) {
            continue;
        }
        prefix.extend_from_slice(&row);
        extend_ht(n, i + 1, apply_row(cols, &row), prefix, out);
        prefix.truncate(prefix.len() - n);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenfuncMode {
    Brute,
    Closed,
}

/// Lexicographic successor of a permutation word; false at the last one.
fn next_permutation(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Sum of `z^inv(s)` over permutations whose matrices lie in the class.
fn inversion_genfunc_brute(n: usize, class: AsmClass) -> IntPoly {
    let mut counts: BTreeMap<i32, u64> = BTreeMap::new();
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        let keep = match class {
            AsmClass::All => true,
            AsmClass::HalfTurn => Asm::permutation_matrix(&w)
                .expect("valid permutation")
                .is_half_turn_symmetric(),
        };
        if keep {
            *counts.entry(inversions(&w) as i32).or_insert(0) += 1;
        }
        if !next_permutation(&mut w) {
            break;
        }
    }
    poly_in("z", counts.into_iter().map(|(k, c)| (k, BigInt::from(c))))
}

fn poly_in(var: &str, terms: impl IntoIterator<Item = (i32, BigInt)>) -> IntPoly {
    IntPoly::from_terms(
        vec![var.to_string()],
        terms.into_iter().map(|(e, c)| (vec![e], c)).collect(),
    )
}

/// `1 + z + … + z^(k-1)` in the variable `z^step`.
fn geometric(k: usize, step: i32) -> IntPoly {
    poly_in("z", (0..k as i32).map(|e| (e * step, BigInt::one())))
}

/// The product formula `∏_{k=1}^{n} (1 + z + … + z^(k-1))`, evaluated in `z^step`.
fn phi_closed(n: usize, step: i32) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, k| acc.mul(&geometric(k, step)))
}

fn phi_ht_closed(n: usize) -> IntPoly {
    let m = n / 2;
    let offset = if n % 2 == 1 { 1 } else { -1 };
    let mut p = phi_closed(m, 2);
    for i in 1..=m as i32 {
        p = p.mul(&poly_in("z", [(0, BigInt::one()), (2 * i + offset, BigInt::one())]));
    }
    p
}

/// Inversion generating function `Φ(n; z)` (class all) or `Φ_HT(n; z)`.
pub fn inversion_genfunc(n: usize, class: AsmClass, mode: GenfuncMode) -> Result<IntPoly> {
    check_order(n)?;
    Ok(match (mode, class) {
        (GenfuncMode::Brute, _) => inversion_genfunc_brute(n, class),
        (GenfuncMode::Closed, AsmClass::All) => phi_closed(n, 1),
        (GenfuncMode::Closed, AsmClass::HalfTurn) => phi_ht_closed(n),
    })
}

/// Refined census: for every first-column position `r` and (odd half-turn
/// orders) central entry, the number of matrices with `k` entries equal to −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub order: usize,
    pub class: AsmClass,
    /// `(r, central) → k → count`
    pub rows: BTreeMap<(usize, Option<i8>), BTreeMap<usize, BigInt>>,
}

pub fn census(n: usize, class: AsmClass) -> Result<CensusTable> {
    let split = class == AsmClass::HalfTurn && n % 2 == 1;
    let mut rows: BTreeMap<(usize, Option<i8>), BTreeMap<usize, BigInt>> = BTreeMap::new();
    for a in gen_asms(n, class)? {
        let central = if split { a.central_entry() } else { None };
        let slot = rows
            .entry((a.first_column_one_pos(), central))
            .or_default()
            .entry(a.minus_ones())
            .or_insert_with(BigInt::zero);
        *slot += 1;
    }
    Ok(CensusTable { order: n, class, rows })
}

impl CensusTable {
    pub fn total(&self) -> BigInt {
        self.rows.values().flat_map(|m| m.values()).sum()
    }

    /// Counts split by central entry `(+1, −1)`; for tables without a split
    /// everything lands in the first slot.
    pub fn central_totals(&self) -> (BigInt, BigInt) {
        let mut plus = BigInt::zero();
        let mut minus = BigInt::zero();
        for ((_, c), m) in &self.rows {
            let s: BigInt = m.values().sum();
            if *c == Some(-1) {
                minus += s;
            } else {
                plus += s;
            }
        }
        (plus, minus)
    }

    /// Counts by first-column position, `r = 1..n`.
    pub fn refined_counts(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.order];
        for ((r, _), m) in &self.rows {
            for c in m.values() {
                out[r - 1] += c;
            }
        }
        out
    }

    fn poly_with(&self, var: &str, filter: impl Fn(Option<i8>) -> bool, weight: impl Fn(usize) -> i32) -> IntPoly {
        let mut terms = Vec::new();
        for ((r, c), m) in &self.rows {
            if !filter(*c) {
                continue;
            }
            for (k, cnt) in m {
                terms.push((vec![*r as i32 - 1, weight(*k)], cnt.clone()));
            }
        }
        IntPoly::from_terms(vec!["t".into(), var.into()], terms)
    }

    /// `Σ_r Σ_k count · t^(r−1) x^k`: the refined x-enumeration for class all.
    pub fn poly_tx(&self) -> IntPoly {
        self.poly_with("x", |_| true, |k| k as i32)
    }

    /// `Σ t^(r−1) s^k` with `s = √x`; for half-turn classes this is the
    /// refined enumeration with weight `x^(k/2)`.
    pub fn poly_ts(&self) -> IntPoly {
        self.poly_with("s", |_| true, |k| k as i32)
    }

    /// For even half-turn orders, `Σ t^(r−1) x^(k/2)`.
    pub fn ht_even_poly(&self) -> Result<IntPoly> {
        if self.class != AsmClass::HalfTurn || self.order % 2 == 1 {
            return Err(Error::UnsupportedSize("ht_even_poly needs an even half-turn census".into()));
        }
        Ok(self.poly_with("x", |_| true, |k| k as i32 / 2))
    }

    /// For odd half-turn orders, the central-entry parts
    /// `(𝒜⁺, 𝒜⁻, 𝒜^R = 𝒜⁺ + x·𝒜⁻)` as polynomials in `t, x`.
    pub fn split_odd(&self) -> Result<(IntPoly, IntPoly, IntPoly)> {
        if self.class != AsmClass::HalfTurn || self.order.is_multiple_of(2) {
            return Err(Error::UnsupportedSize("split_odd needs an odd half-turn census".into()));
        }
        let plus = self.poly_with("x", |c| c == Some(1), |k| k as i32 / 2);
        let minus = self.poly_with("x", |c| c == Some(-1), |k| (k as i32 - 1) / 2);
        let robbins = plus.add(&minus.shift(&[("x", 1)]));
        Ok((plus, minus, robbins))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|((r, c), m)| {
                json!({
                    "r": r,
                    "central": c,
                    "counts": m.iter().map(|(k, v)| json!({"k": k, "count": v.to_string()})).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "order": self.order,
            "class": self.class,
            "total": self.total().to_string(),
            "rows": rows,
        })
    }

    /// One line per `(r, central, k)` cell.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("r,central,k,count\n");
        for ((r, c), m) in &self.rows {
            let c = c.map_or(String::new(), |c| c.to_string());
            for (k, v) in m {
                let _ = writeln!(s, "{r},{c},{k},{v}");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_generations() {
        let one = gen_asms(1, AsmClass::All).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rows(), vec![vec![1]]);
        assert_eq!(gen_asms(3, AsmClass::All).unwrap().len(), 7);
        let ht3 = gen_asms(3, AsmClass::HalfTurn).unwrap();
        assert_eq!(ht3.len(), 3);
        assert_eq!(ht3.iter().filter(|a| a.minus_ones() == 1).count(), 1);
        assert!(gen_asms(0, AsmClass::All).is_err());
    }

    #[test]
    fn stream_is_lexicographic_and_deterministic() {
        let a = gen_asms(4, AsmClass::All).unwrap();
        assert!(a.windows(2).all(|w| w[0].entries() < w[1].entries()));
        assert_eq!(a, gen_asms(4, AsmClass::All).unwrap());
    }

    #[test]
    fn genfunc_examples() {
        let z = |cs: &[i64]| poly_in("z", cs.iter().enumerate().map(|(e, &c)| (e as i32, BigInt::from(c))));
        assert_eq!(inversion_genfunc(3, AsmClass::All, GenfuncMode::Closed).unwrap(), z(&[1, 2, 2, 1]));
        assert_eq!(inversion_genfunc(3, AsmClass::HalfTurn, GenfuncMode::Brute).unwrap(), z(&[1, 0, 0, 1]));
        assert_eq!(inversion_genfunc(2, AsmClass::HalfTurn, GenfuncMode::Closed).unwrap(), z(&[1, 1]));
    }

    #[test]
    fn census_examples() {
        let c = census(3, AsmClass::All).unwrap();
        let refined: Vec<i64> = c.refined_counts().iter().map(|v| v.try_into().unwrap()).collect();
        assert_eq!(refined, vec![2, 3, 2]);
        let at_x = c.poly_tx().coeff(&[("t", 1)]);
        assert_eq!(at_x.to_string(), "x + 2");

        let h = census(3, AsmClass::HalfTurn).unwrap();
        let (plus, minus, _) = h.split_odd().unwrap();
        assert_eq!(plus.to_string(), "t^2 + 1");
        assert_eq!(minus.to_string(), "t");
        assert_eq!(h.poly_ts().to_string(), "t^2 + t*s + 1");

        let h2 = census(2, AsmClass::HalfTurn).unwrap();
        assert_eq!(h2.ht_even_poly().unwrap().to_string(), "t + 1");
    }
}

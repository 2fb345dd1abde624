//! Alternating-sign matrices and their six-vertex (square ice) states.
//!
//! Public indices are 1-based. Internally an edge orientation is stored as a
//! bit: a horizontal edge carries the partial row sum to its left (0 = arrow
//! points right, 1 = left) and a vertical edge carries the partial column sum
//! above it (0 = arrow points up, 1 = down). The domain-wall boundary is then
//! 0 on the left and top, 1 on the right and bottom.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// Validates a square grid with entries in {−1, 0, 1}.
    pub fn validate(grid: &[Vec<i64>]) -> Result<Asm> {
        let n = grid.len();
        if n == 0 {
            return Err(Error::Malformed("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in grid.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for &e in row {
                if !(-1..=1).contains(&e) {
                    return Err(Error::Malformed(format!("entry {e} is not in {{-1, 0, 1}}")));
                }
                entries.push(e as i8);
            }
        }
        Self::from_entries(n, entries)
    }

    pub(crate) fn from_entries(n: usize, entries: Vec<i8>) -> Result<Asm> {
        assert_eq!(entries.len(), n * n);
        for i in 0..n {
            check_line((0..n).map(|j| entries[i * n + j]), "row", i + 1)?;
        }
        for j in 0..n {
            check_line((0..n).map(|i| entries[i * n + j]), "column", j + 1)?;
        }
        Ok(Asm { n, entries })
    }

    /// Skips validation; callers guarantee the alternating property.
    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Asm {
        Asm { n, entries }
    }

    /// The permutation matrix whose column `j` has its 1 in row `word[j-1]`.
    pub fn permutation_matrix(word: &[usize]) -> Result<Asm> {
        let n = word.len();
        let mut seen = vec![false; n];
        let mut entries = vec![0i8; n * n];
        for (j, &r) in word.iter().enumerate() {
            if r == 0 || r > n || seen[r - 1] {
                return Err(Error::Malformed(format!("{word:?} is not a permutation")));
            }
            seen[r - 1] = true;
            entries[(r - 1) * n + j] = 1;
        }
        Ok(Asm { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// Rotation by 180°: `(i, j) ↦ (n+1−i, n+1−j)`.
    pub fn half_turn(&self) -> Asm {
        let mut entries = self.entries.clone();
        entries.reverse();
        Asm { n: self.n, entries }
    }

    pub fn is_half_turn_symmetric(&self) -> bool {
        let len = self.entries.len();
        (0..len / 2).all(|k| self.entries[k] == self.entries[len - 1 - k])
    }

    pub fn minus_ones(&self) -> usize {
        self.entries.iter().filter(|&&e| e == -1).count()
    }

    /// 1-based row of the unique 1 in the first column.
    pub fn first_column_one_pos(&self) -> usize {
        (0..self.n)
            .find(|&i| self.at(i, 0) == 1)
            .expect("an ASM has a 1 in its first column")
            + 1
    }

    pub fn central_entry(&self) -> Option<i8> {
        (self.n % 2 == 1).then(|| self.at(self.n / 2, self.n / 2))
    }

    /// For a permutation matrix, the word `s` with `s(j)` the row of the 1 in column `j`.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        if self.entries.contains(&-1) {
            return None;
        }
        Some(
            (0..self.n)
                .map(|j| (0..self.n).find(|&i| self.at(i, j) == 1).expect("column sum 1") + 1)
                .collect(),
        )
    }

    pub fn stats(&self) -> AsmStats {
        let permutation = self.permutation();
        let inversions = permutation.as_deref().map(inversions);
        AsmStats {
            order: self.n,
            minus_ones: self.minus_ones(),
            first_column_one_pos: self.first_column_one_pos(),
            ht_symmetric: self.is_half_turn_symmetric(),
            central_entry: self.central_entry(),
            permutation,
            inversions,
        }
    }

    /// The six-vertex state of this matrix under the domain-wall boundary.
    pub fn to_state(&self) -> SixVertexState {
        let n = self.n;
        let mut types = Vec::with_capacity(n * n);
        let mut col = vec![0u8; n];
        for i in 0..n {
            let mut h = 0u8;
            for (j, v) in col.iter_mut().enumerate() {
                let e = self.at(i, j);
                types.push(VertexType::from_edges(h, *v, e));
                h = (h as i8 + e) as u8;
                *v = (*v as i8 + e) as u8;
            }
        }
        SixVertexState { n, types }
    }

    pub fn to_text(&self) -> String {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows()
                .into_iter()
                .map(|r| Value::Array(r.into_iter().map(|e| Value::from(e as i64)).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Asm> {
        let grid: Vec<Vec<i64>> = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("ASM JSON: {e}")))?;
        Self::validate(&grid)
    }
}

fn check_line(line: impl Iterator<Item = i8>, kind: &'static str, index: usize) -> Result<()> {
    let mut s = 0i8;
    for e in line {
        s += e;
        if !(0..=1).contains(&s) {
            return Err(Error::NotAlternating { line: kind, index });
        }
    }
    if s != 1 {
        return Err(Error::NotAlternating { line: kind, index });
    }
    Ok(())
}

pub fn inversions(word: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

/// Parses whitespace-separated rows, one matrix row per line.
impl FromStr for Asm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Asm> {
        let grid: Vec<Vec<i64>> = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Asm::validate(&grid)
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Asm{:?}", self.rows())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AsmStats {
    pub order: usize,
    pub minus_ones: usize,
    pub first_column_one_pos: usize,
    pub ht_symmetric: bool,
    pub central_entry: Option<i8>,
    pub permutation: Option<Vec<usize>>,
    pub inversions: Option<usize>,
}

/// The six vertex configurations. `T1`/`T2` sit at the +1/−1 entries; the four
/// zero-entry types are: `T3` all arrows right and up, `T4` left and down,
/// `T5` left and up, `T6` right and down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexType {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl VertexType {
    pub const ALL: [VertexType; 6] = [
        VertexType::T1,
        VertexType::T2,
        VertexType::T3,
        VertexType::T4,
        VertexType::T5,
        VertexType::T6,
    ];

    /// Type from the left horizontal bit, the top vertical bit and the entry.
    pub fn from_edges(h_left: u8, v_top: u8, entry: i8) -> VertexType {
        match (entry, h_left, v_top) {
            (1, _, _) => VertexType::T1,
            (-1, _, _) => VertexType::T2,
            (_, 0, 0) => VertexType::T3,
            (_, 1, 1) => VertexType::T4,
            (_, 1, 0) => VertexType::T5,
            _ => VertexType::T6,
        }
    }

    /// Edge bits `(h_left, h_right, v_top, v_bottom)`.
    pub fn edges(self) -> (u8, u8, u8, u8) {
        match self {
            VertexType::T1 => (0, 1, 0, 1),
            VertexType::T2 => (1, 0, 1, 0),
            VertexType::T3 => (0, 0, 0, 0),
            VertexType::T4 => (1, 1, 1, 1),
            VertexType::T5 => (1, 1, 0, 0),
            VertexType::T6 => (0, 0, 1, 1),
        }
    }

    pub fn entry(self) -> i8 {
        let (l, r, _, _) = self.edges();
        r as i8 - l as i8
    }

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn from_number(k: usize) -> Result<VertexType> {
        VertexType::ALL
            .get(k.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::Parse(format!("vertex type {k} is not in 1..6")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SixVertexState {
    n: usize,
    types: Vec<VertexType>,
}

impl SixVertexState {
    /// Checks that neighbouring vertices agree on every shared edge and that
    /// the boundary is domain-wall.
    pub fn from_types(n: usize, types: Vec<VertexType>) -> Result<SixVertexState> {
        if types.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: types.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let (l, r, t, b) = types[i * n + j].edges();
                let left = if j == 0 { 0 } else { types[i * n + j - 1].edges().1 };
                let top = if i == 0 { 0 } else { types[(i - 1) * n + j].edges().3 };
                let bad = l != left
                    || t != top
                    || (j == n - 1 && r != 1)
                    || (i == n - 1 && b != 1);
                if bad {
                    return Err(Error::InconsistentOrientation { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(SixVertexState { n, types })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Vertex type at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> VertexType {
        self.types[(i - 1) * self.n + (j - 1)]
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> VertexType {
        self.types[i * self.n + j]
    }

    pub fn types(&self) -> &[VertexType] {
        &self.types
    }

    /// Number of vertices of each type, indexed `T1..T6`.
    pub fn counts(&self) -> [usize; 6] {
        let mut c = [0; 6];
        for t in &self.types {
            c[*t as usize] += 1;
        }
        c
    }

    pub fn to_asm(&self) -> Asm {
        // consistency was checked on construction, so the result is alternating
        Asm::from_entries_unchecked(self.n, self.types.iter().map(|t| t.entry()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn validation_examples() {
        assert!(Asm::validate(&m(&[&[1]])).is_ok());
        assert!(Asm::validate(&m(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]])).is_ok());
        assert_eq!(
            Asm::validate(&m(&[&[1, -1], &[0, 1]])),
            Err(Error::NotAlternating { line: "row", index: 1 })
        );
        assert!(matches!(Asm::validate(&m(&[&[1, 0]])), Err(Error::Malformed(_))));
        assert!(matches!(Asm::validate(&m(&[&[2]])), Err(Error::Malformed(_))));
    }

    #[test]
    fn bijection_examples() {
        let one = Asm::validate(&m(&[&[1]])).unwrap();
        assert_eq!(one.to_state().types(), &[VertexType::T1]);

        let a = Asm::validate(&m(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]])).unwrap();
        let s = a.to_state();
        assert_eq!(s.get(2, 2), VertexType::T2);
        for (i, j) in [(1, 2), (2, 1), (2, 3), (3, 2)] {
            assert_eq!(s.get(i, j), VertexType::T1);
        }
        assert_eq!(s.to_asm(), a);

        let id = Asm::permutation_matrix(&[1, 2, 3]).unwrap();
        let c = id.to_state().counts();
        assert_eq!(c[4] + c[5], 6);
    }

    #[test]
    fn inconsistent_state_is_rejected() {
        let err = SixVertexState::from_types(1, vec![VertexType::T3]);
        assert!(matches!(err, Err(Error::InconsistentOrientation { row: 1, col: 1 })));
    }

    #[test]
    fn stats_examples() {
        let a = Asm::validate(&m(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]])).unwrap();
        let s = a.stats();
        assert_eq!(s.minus_ones, 1);
        assert_eq!(s.first_column_one_pos, 2);
        assert!(s.ht_symmetric);
        assert_eq!(s.central_entry, Some(-1));
        assert_eq!(s.permutation, None);

        let id = Asm::permutation_matrix(&[1, 2, 3]).unwrap().stats();
        assert_eq!(id.central_entry, Some(1));
        assert_eq!(id.permutation, Some(vec![1, 2, 3]));
        assert_eq!(id.inversions, Some(0));

        assert_eq!(inversions(&[2, 4, 1, 3]), 3);
    }

    #[test]
    fn text_and_json_formats() {
        let a: Asm = "0 1 0\n1 -1 1\n0 1 0\n".parse().unwrap();
        assert_eq!(a.to_text().parse::<Asm>().unwrap(), a);
        assert_eq!(Asm::from_json(&a.to_json()).unwrap(), a);
        assert!("1 -1\n0 1".parse::<Asm>().is_err());
    }
}

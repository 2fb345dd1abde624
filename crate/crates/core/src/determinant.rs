//! Determinant representations of the partition functions at `a = ζ`
//! (`ζ = e^{iπ/3}`).
//!
//! The spectral parameters are packed into one vector `u` by interleaving,
//! `u_{2i−1} = x_i`, `u_{2i} = y_i`. The matrices have entries `u_c^{e_r}`
//! with fixed exponent sequences; see [`exponents`].

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloNum};
use crate::icemodel::{self, IceConfig, ModelSpec};
use crate::laurent::VarAssignment;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    P,
    Q,
    PPrime,
    QPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialModel {
    Dwbc,
    Ht2,
    HtOdd,
}

impl std::str::FromStr for SpecialModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dwbc" => Ok(SpecialModel::Dwbc),
            "ht2" | "ht-even" => Ok(SpecialModel::Ht2),
            "ht-odd" | "htOdd" => Ok(SpecialModel::HtOdd),
            _ => Err(Error::Parse(format!("unknown determinant model {s:?}"))),
        }
    }
}

impl SpecialModel {
    /// Length of `u` for the given size index.
    pub fn dimension(self, size: usize) -> usize {
        match self {
            SpecialModel::Dwbc | SpecialModel::Ht2 => 2 * size,
            SpecialModel::HtOdd => 2 * size + 1,
        }
    }
}

/// Exponent sequence: integers `e` with `|e| ≤ top`, `3 ∤ e` and
/// `e ≡ top (mod 2)`, in descending order.
pub fn exponents(top: i32) -> Vec<i32> {
    (-top..=top)
        .rev()
        .filter(|e| e % 3 != 0 && (e - top) % 2 == 0)
        .collect()
}

fn kind_exponents(kind: MatrixKind, size: usize) -> Vec<i32> {
    let s = size as i32;
    match kind {
        MatrixKind::P | MatrixKind::PPrime => exponents(3 * s - 2),
        MatrixKind::Q | MatrixKind::QPrime => exponents(3 * s - 1),
    }
}

/// A vector of nonzero spectral values.
#[derive(Clone, Debug, PartialEq)]
pub struct UVector {
    coords: Vec<CycloNum>,
}

impl UVector {
    pub fn new(coords: Vec<CycloNum>) -> Result<UVector> {
        if let Some(k) = coords.iter().position(|c| c.is_zero()) {
            return Err(Error::NonInvertibleValue { var: format!("u{}", k + 1) });
        }
        Ok(UVector { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[CycloNum] {
        &self.coords
    }

    /// 1-based access.
    pub fn get(&self, mu: usize) -> &CycloNum {
        &self.coords[mu - 1]
    }

    /// Componentwise inverse `ū`.
    pub fn inverse(&self) -> UVector {
        UVector {
            coords: self.coords.iter().map(|c| c.inverse().expect("nonzero")).collect(),
        }
    }

    /// Replaces the 1-based coordinate `mu`.
    pub fn with(&self, mu: usize, value: CycloNum) -> Result<UVector> {
        let mut coords = self.coords.clone();
        coords[mu - 1] = value;
        UVector::new(coords)
    }

    pub fn truncate(&self, len: usize) -> UVector {
        UVector { coords: self.coords[..len].to_vec() }
    }

    pub fn push(&self, value: CycloNum) -> Result<UVector> {
        let mut coords = self.coords.clone();
        coords.push(value);
        UVector::new(coords)
    }

    /// Fails when `σ(u_μ ū_ν) = 0` for some `μ < ν`, i.e. `u_μ = ±u_ν`.
    pub fn check_distinct(&self) -> Result<()> {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if self.coords[i] == self.coords[j] || self.coords[i] == self.coords[j].neg_ref() {
                    return Err(Error::CoincidentPoints { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(())
    }

    /// `∏_{μ<ν} σ(u_μ ū_ν)`.
    pub fn sigma_product(&self) -> CycloNum {
        let mut acc = CycloNum::one();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                acc = acc.mul_ref(&sig(&self.coords[i].checked_div(&self.coords[j]).expect("nonzero")));
            }
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coords.iter().map(|c| Value::String(c.to_string())).collect())
    }
}

fn sig(w: &CycloNum) -> CycloNum {
    w.sigma().expect("nonzero spectral value")
}

/// Square matrix over Q(ζ).
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    n: usize,
    data: Vec<CycloNum>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<CycloNum>>) -> Result<ExactMatrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: r.len() });
            }
            data.extend(r);
        }
        Ok(ExactMatrix { n, data })
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut data = vec![CycloNum::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = CycloNum::one();
        }
        ExactMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloNum {
        &self.data[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<CycloNum>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows()
                .iter()
                .map(|r| Value::Array(r.iter().map(|c| Value::String(c.to_string())).collect()))
                .collect(),
        )
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `P(n; u)`, `Q(m; u)` and their primed truncations (last row and column
/// removed). `u` has length `2·size` for the unprimed and `2·size − 1` for
/// the primed kinds.
pub fn build_matrix(kind: MatrixKind, size: usize, u: &UVector) -> Result<ExactMatrix> {
    let full = 2 * size;
    let dim = match kind {
        MatrixKind::P | MatrixKind::Q => full,
        MatrixKind::PPrime | MatrixKind::QPrime => full.saturating_sub(1),
    };
    if size == 0 || u.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: u.dim() });
    }
    let exps = kind_exponents(kind, size);
    debug_assert_eq!(exps.len(), full);
    let rows = exps[..dim]
        .iter()
        .map(|&e| u.coords.iter().map(|c| c.pow_i(e).expect("nonzero")).collect())
        .collect();
    ExactMatrix::from_rows(rows)
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_exact(mat: &ExactMatrix) -> CycloNum {
    let n = mat.n;
    if n == 0 {
        return CycloNum::one();
    }
    let mut a = mat.rows();
    let mut sign = false;
    let mut prev = CycloNum::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return CycloNum::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].mul_ref(&a[k][k]).sub_ref(&a[i][k].mul_ref(&a[k][j]));
                a[i][j] = t.checked_div(&prev).expect("Bareiss pivot is nonzero");
            }
            a[i][k] = CycloNum::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.neg_ref()
    } else {
        d
    }
}

fn sigma_zeta() -> CycloNum {
    sig(&CycloNum::zeta())
}

/// Partition function at `a = ζ` from its determinant representation.
///
/// * `Dwbc`, `n`: `(−1)^{n(n−1)/2} σ(ζ)^n / ∏_{μ<ν} σ(u_μ ū_ν) · det P(n; u)`
/// * `Ht2`, `m`: the same with `m` and `Q(m; u)`
/// * `HtOdd`, `m` (`u` of length `2m+1`):
///   `σ(ζ)^{2m} / ∏ σ²(u_μ ū_ν) · det P′(m+1; u) · det P′(m+1; ū)`
pub fn special_z(model: SpecialModel, size: usize, u: &UVector) -> Result<CycloNum> {
    let dim = model.dimension(size);
    if u.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: u.dim() });
    }
    u.check_distinct()?;
    if size == 0 {
        return Ok(CycloNum::one());
    }
    let s = sigma_zeta();
    let den = u.sigma_product();
    match model {
        SpecialModel::Dwbc | SpecialModel::Ht2 => {
            let kind = if model == SpecialModel::Dwbc { MatrixKind::P } else { MatrixKind::Q };
            let d = det_exact(&build_matrix(kind, size, u)?);
            let mut v = s.pow_i(size as i32).expect("nonzero").mul_ref(&d).checked_div(&den)?;
            if (size * (size - 1) / 2) % 2 == 1 {
                v = v.neg_ref();
            }
            Ok(v)
        }
        SpecialModel::HtOdd => {
            let d1 = det_exact(&build_matrix(MatrixKind::PPrime, size + 1, u)?);
            let d2 = det_exact(&build_matrix(MatrixKind::PPrime, size + 1, &u.inverse())?);
            s.pow_i(2 * size as i32)
                .expect("nonzero")
                .mul_ref(&d1)
                .mul_ref(&d2)
                .checked_div(&den.mul_ref(&den))
        }
    }
}

/// `w(k; u)` for `u` of length `2k − 1`:
/// `(−1)^k σ(ζ)^{2k+1} / ∏ σ²(u_μ ū_ν) · det P′(k; u) · det P′(k; ū)`.
pub fn wronskian_w(k: usize, u: &UVector) -> Result<CycloNum> {
    if k == 0 || u.dim() != 2 * k - 1 {
        return Err(Error::DimensionMismatch { expected: (2 * k).saturating_sub(1), got: u.dim() });
    }
    u.check_distinct()?;
    let z = special_z(SpecialModel::HtOdd, k - 1, u)?;
    let s = sigma_zeta();
    let v = z.mul_ref(&s.pow_i(3).expect("nonzero"));
    Ok(if k % 2 == 1 { v.neg_ref() } else { v })
}

/// Splits an interleaved vector into `(x, y)` for the given model:
/// `x = (u1, u3, …)`, `y = (u2, u4, …)`; for `HtOdd` the last coordinate is
/// shared, `x_{m+1} = y_{m+1} = u_{2m+1}`.
pub fn split_xy(model: SpecialModel, u: &UVector) -> (Vec<CycloNum>, Vec<CycloNum>) {
    let c = &u.coords;
    let mut xs: Vec<CycloNum> = c.iter().step_by(2).cloned().collect();
    let mut ys: Vec<CycloNum> = c.iter().skip(1).step_by(2).cloned().collect();
    if model == SpecialModel::HtOdd {
        let last = c.last().cloned().expect("odd length");
        xs.truncate(ys.len());
        xs.push(last.clone());
        ys.push(last);
    }
    (xs, ys)
}

fn assignment(spec: &ModelSpec, xs: &[CycloNum], ys: &[CycloNum]) -> VarAssignment<CycloNum> {
    let mut at = VarAssignment::new();
    at.insert("a".to_string(), CycloNum::zeta());
    for (n, v) in spec.x_vars.iter().zip(xs) {
        at.insert(n.clone(), v.clone());
    }
    for (n, v) in spec.y_vars.iter().zip(ys) {
        at.insert(n.clone(), v.clone());
    }
    at
}

/// The same value as [`special_z`] computed from the state sums.
pub fn state_sum_at_zeta(model: SpecialModel, size: usize, u: &UVector, cfg: &IceConfig) -> Result<CycloNum> {
    let dim = model.dimension(size);
    if u.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: u.dim() });
    }
    let (xs, ys) = split_xy(model, u);
    match model {
        SpecialModel::Dwbc => {
            let spec = ModelSpec::dwbc(size);
            let (p, q) = icemodel::evaluate_sums(&spec, &assignment(&spec, &xs, &ys))?;
            Ok(p.add_ref(&q))
        }
        SpecialModel::HtOdd => {
            let spec = ModelSpec::ht_odd(size);
            let (p, q) = icemodel::evaluate_sums(&spec, &assignment(&spec, &xs, &ys))?;
            Ok(p.add_ref(&q))
        }
        SpecialModel::Ht2 => {
            let spec = ModelSpec::ht_even(size);
            let q = icemodel::z_ht2_with(size, cfg)?;
            icemodel::eval_int(&q, &assignment(&spec, &xs, &ys))
        }
    }
}

/// Both sides of the determinant representation at one point.
pub fn compare_at(model: SpecialModel, size: usize, u: &UVector, cfg: &IceConfig) -> Result<(CycloNum, CycloNum)> {
    Ok((special_z(model, size, u)?, state_sum_at_zeta(model, size, u, cfg)?))
}

pub fn comparison_json(model: SpecialModel, size: usize, u: &UVector, cfg: &IceConfig) -> Result<Value> {
    let (det, oracle) = compare_at(model, size, u, cfg)?;
    Ok(json!({
        "model": format!("{model:?}"),
        "sizeParam": size,
        "u": u.to_json(),
        "determinant": det.to_json(),
        "stateSum": oracle.to_json(),
        "equal": det == oracle,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    fn uvec(v: &[i64]) -> UVector {
        UVector::new(v.iter().map(|&k| CycloNum::from_int(k)).collect()).unwrap()
    }

    #[test]
    fn exponent_rows() {
        assert_eq!(kind_exponents(MatrixKind::P, 1), vec![1, -1]);
        assert_eq!(kind_exponents(MatrixKind::P, 2), vec![4, 2, -2, -4]);
        assert_eq!(kind_exponents(MatrixKind::Q, 2), vec![5, 1, -1, -5]);
        for n in 1..6 {
            assert_eq!(kind_exponents(MatrixKind::P, n).len(), 2 * n);
            assert_eq!(kind_exponents(MatrixKind::Q, n).len(), 2 * n);
        }
    }

    #[test]
    fn p1_matrix_and_det() {
        let u = uvec(&[2, 3]);
        let p = build_matrix(MatrixKind::P, 1, &u).unwrap();
        assert_eq!(p.get(1, 0), &CycloNum::from_rational(rational(1, 2)));
        assert_eq!(det_exact(&p), CycloNum::from_rational(rational(-5, 6)));
        assert_eq!(det_exact(&ExactMatrix::identity(3)), CycloNum::one());
        let twin = ExactMatrix::from_rows(vec![
            vec![CycloNum::from_int(1), CycloNum::from_int(1), CycloNum::zeta()],
            vec![CycloNum::from_int(4), CycloNum::from_int(4), CycloNum::from_int(2)],
            vec![CycloNum::zeta(), CycloNum::zeta(), CycloNum::from_int(7)],
        ])
        .unwrap();
        assert!(det_exact(&twin).is_zero());
    }

    #[test]
    fn det_needs_pivoting() {
        let m = ExactMatrix::from_rows(vec![
            vec![CycloNum::zero(), CycloNum::from_int(1)],
            vec![CycloNum::from_int(1), CycloNum::zero()],
        ])
        .unwrap();
        assert_eq!(det_exact(&m), CycloNum::from_int(-1));
    }

    #[test]
    fn dwbc_one_is_constant() {
        for u in [[2, 3], [5, 7], [3, 11]] {
            assert_eq!(special_z(SpecialModel::Dwbc, 1, &uvec(&u)).unwrap(), sigma_zeta());
        }
    }

    #[test]
    fn coincident_points_rejected() {
        assert!(matches!(
            special_z(SpecialModel::Dwbc, 1, &uvec(&[2, 2])),
            Err(Error::CoincidentPoints { i: 1, j: 2 })
        ));
        assert!(matches!(
            special_z(SpecialModel::HtOdd, 1, &uvec(&[2, 3, -2])),
            Err(Error::CoincidentPoints { i: 1, j: 3 })
        ));
    }

    #[test]
    fn matches_state_sums_small() {
        let cfg = IceConfig::default();
        for (model, size, u) in [
            (SpecialModel::Dwbc, 2, uvec(&[2, 3, 5, 7])),
            (SpecialModel::Ht2, 1, uvec(&[2, 3])),
            (SpecialModel::Ht2, 2, uvec(&[2, 3, 5, 7])),
            (SpecialModel::HtOdd, 1, uvec(&[2, 3, 5])),
        ] {
            let (d, s) = compare_at(model, size, &u, &cfg).unwrap();
            assert_eq!(d, s, "{model:?} {size}");
        }
    }
}

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::json;

use super::{Checker, Ctx};
use crate::error::Result;
use crate::laurent::{sigma, IntPoly};

use super::VerificationReport;

type Mat = Vec<Vec<IntPoly>>;

fn zeros(n: usize) -> Mat {
    vec![vec![IntPoly::zero(); n]; n]
}

/// The 4×4 R-matrix with spectral parameter `w`, indexed by
/// `2·left + bottom → 2·right + top` (0 = "+", 1 = "−"):
/// unchanged equal pairs weigh `σ(a w)`, unchanged unequal pairs `σ(a w̄)`
/// and exchanged pairs `σ(a²)`.
pub fn r_matrix(w: &IntPoly) -> Result<Vec<Vec<IntPoly>>> {
    let a = IntPoly::var("a");
    let same = a.mul(w).sigma_of()?;
    let opp = a.mul(&w.monomial_inverse()?).sigma_of()?;
    let cross = sigma(&[("a", 2)]);
    let mut m = zeros(4);
    m[0][0] = same.clone();
    m[3][3] = same;
    m[1][1] = opp.clone();
    m[2][2] = opp;
    m[2][1] = cross.clone();
    m[1][2] = cross;
    Ok(m)
}

/// Embeds a 4×4 matrix acting on factors `i < j` of a threefold tensor
/// product of two-dimensional spaces.
fn embed(m: &Mat, i: usize, j: usize) -> Mat {
    let mut out = zeros(8);
    let bit = |s: usize, k: usize| (s >> (2 - k)) & 1;
    for s in 0..8 {
        for t in 0..8 {
            if (0..3).any(|k| k != i && k != j && bit(s, k) != bit(t, k)) {
                continue;
            }
            out[t][s] = m[2 * bit(t, i) + bit(t, j)][2 * bit(s, i) + bit(s, j)].clone();
        }
    }
    out
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    out
}

fn check_into(ck: &mut Checker, x: &IntPoly, y: &IntPoly, z: &IntPoly) -> Result<()> {
    let zbar = z.monomial_inverse()?;
    let r12 = embed(&r_matrix(x)?, 0, 1);
    let r13 = embed(&r_matrix(&zbar)?, 0, 2);
    let r23 = embed(&r_matrix(y)?, 1, 2);
    let left = matmul(&matmul(&r12, &r13), &r23);
    let right = matmul(&matmul(&r23, &r13), &r12);
    for t in 0..8 {
        for s in 0..8 {
            let label = format!("component in={s:03b} out={t:03b}");
            ck.poly_eq(&label, &left[t][s], &right[t][s]);
        }
    }
    Ok(())
}

/// Checks `R12(x)·R13(z̄)·R23(y) = R23(y)·R13(z̄)·R12(x)` componentwise (all
/// 64 boundary orientations). `x`, `y`, `z` must be monomials.
pub fn verify_ybe(x: &IntPoly, y: &IntPoly, z: &IntPoly) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut ck = Checker::default();
    check_into(&mut ck, x, y, z)?;
    let mut params = BTreeMap::new();
    params.insert("x".to_string(), json!(x.to_string()));
    params.insert("y".to_string(), json!(y.to_string()));
    params.insert("z".to_string(), json!(z.to_string()));
    Ok(ck.finish("ybe", params, start.elapsed()))
}

/// Symbolic `x`, `y` with `z = a·x̄·ȳ`.
pub fn verify_ybe_default() -> VerificationReport {
    let z = IntPoly::monomial(1.into(), &[("a", 1), ("x", -1), ("y", -1)]);
    verify_ybe(&IntPoly::var("x"), &IntPoly::var("y"), &z).expect("monomial parameters")
}

pub(super) fn suite(_ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    let z = IntPoly::monomial(1.into(), &[("a", 1), ("x", -1), ("y", -1)]);
    check_into(ck, &IntPoly::var("x"), &IntPoly::var("y"), &z)?;
    // the special case x = y = 1 forces z = a
    check_into(ck, &IntPoly::one(), &IntPoly::one(), &IntPoly::var("a"))
}

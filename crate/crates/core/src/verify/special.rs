//! Checks at `a = ζ` on seeded random rational points.

use serde_json::json;

use super::{random_uvector, u_json, Checker, Ctx};
use crate::determinant::{self, SpecialModel, UVector};
use crate::error::Result;
use crate::exactnum::{Coeff, CycloNum};

fn zeta() -> CycloNum {
    CycloNum::zeta()
}

fn sig(w: &CycloNum) -> CycloNum {
    w.sigma().expect("nonzero argument")
}

fn inv(w: &CycloNum) -> CycloNum {
    w.inverse().expect("nonzero argument")
}

/// State sum at `a = ζ`; the two-line functions take `u` interleaved.
fn zs(ctx: &Ctx, model: SpecialModel, size: usize, u: &UVector) -> Result<CycloNum> {
    determinant::state_sum_at_zeta(model, size, u, &ctx.ice)
}

/// `∏_{ν≠μ} σ(u_ν · ū_μ · k)`.
fn prod_except(u: &UVector, mu: usize, k: &CycloNum) -> CycloNum {
    let um = inv(u.get(mu));
    (1..=u.dim())
        .filter(|&nu| nu != mu)
        .fold(CycloNum::one(), |acc, nu| acc.mul_ref(&sig(&u.get(nu).mul_ref(&um).mul_ref(k))))
}

/// `∏_{μ≤len} σ(a · u_μ · ū_j)`.
fn prod_a_over(u: &UVector, len: usize, j: usize) -> CycloNum {
    let uj = inv(u.get(j));
    (1..=len).fold(CycloNum::one(), |acc, mu| acc.mul_ref(&sig(&zeta().mul_ref(u.get(mu)).mul_ref(&uj))))
}

fn rotate(u: &UVector) -> UVector {
    let mut c = u.coords().to_vec();
    c.rotate_left(1);
    UVector::new(c).expect("nonzero")
}

pub(super) fn theorem3(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    theorem3_at(ctx, ck, &ctx.ms())
}

pub(super) fn theorem3_at(ctx: &Ctx, ck: &mut Checker, ms: &[usize]) -> Result<()> {
    for &m in ms {
        let mut rng = ctx.rng(m as u64);
        for _ in 0..ctx.points {
            let u = random_uvector(&mut rng, 2 * m + 1);
            let (det, oracle) = determinant::compare_at(SpecialModel::HtOdd, m, &u, &ctx.ice)?;
            ck.value_eq(&format!("Z'_HT({}) determinant form", 2 * m + 1), || u_json(&u), &det, &oracle);
            let rot = rotate(&u);
            let other = zs(ctx, SpecialModel::HtOdd, m, &rot)?;
            ck.value_eq(&format!("Z'_HT({}) symmetric in u", 2 * m + 1), || u_json(&rot), &other, &oracle);
        }
    }
    Ok(())
}

/// Points with `u_{2k} = a·u_{2k−1}`.
fn special_point(rng: &mut rand_chacha::ChaCha8Rng, dim: usize) -> Result<UVector> {
    let u = random_uvector(rng, dim);
    let v = zeta().mul_ref(u.get(dim - 1));
    u.with(dim, v)
}

pub(super) fn special_recursion(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    let s = sig(&zeta());
    let cases = (1..=ctx.n_max)
        .map(|n| (SpecialModel::Dwbc, n, "Z"))
        .chain((1..=ctx.m_max).map(|m| (SpecialModel::Ht2, m, "Z_HT^(2)")));
    for (model, size, name) in cases {
        let mut rng = ctx.rng(size as u64 + if model == SpecialModel::Ht2 { 100 } else { 0 });
        let dim = 2 * size;
        for _ in 0..ctx.points {
            let u = special_point(&mut rng, dim)?;
            let lhs = zs(ctx, model, size, &u)?;
            let rest = zs(ctx, model, size - 1, &u.truncate(dim - 2))?;
            let rhs = s.mul_ref(&prod_a_over(&u, dim - 2, dim - 1)).mul_ref(&rest);
            ck.value_eq(&format!("{name}({dim}-dim) at u_{dim} = a·u_{}", dim - 1), || u_json(&u), &lhs, &rhs);
        }
    }
    Ok(())
}

pub(super) fn three_term(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    let a2 = zeta().mul_ref(&zeta());
    let a2bar = inv(&a2);
    let cases = (1..=ctx.n_max)
        .map(|n| (SpecialModel::Dwbc, n, "Z"))
        .chain((1..=ctx.m_max).map(|m| (SpecialModel::Ht2, m, "Z_HT^(2)")));
    for (model, size, name) in cases {
        let mut rng = ctx.rng(size as u64 + if model == SpecialModel::Ht2 { 100 } else { 0 });
        let dim = 2 * size;
        for _ in 0..ctx.points {
            let u = random_uvector(&mut rng, dim);
            for mu in 1..=dim {
                let up = u.with(mu, a2.mul_ref(u.get(mu)))?;
                let um = u.with(mu, a2bar.mul_ref(u.get(mu)))?;
                let total = zs(ctx, model, size, &u)?
                    .mul_ref(&prod_except(&u, mu, &CycloNum::one()))
                    .add_ref(&zs(ctx, model, size, &up)?.mul_ref(&prod_except(&u, mu, &a2bar)))
                    .add_ref(&zs(ctx, model, size, &um)?.mul_ref(&prod_except(&u, mu, &a2)));
                ck.value_eq(
                    &format!("{name} three-term relation, size {size}, μ = {mu}"),
                    || u_json(&u),
                    &total,
                    &CycloNum::zero(),
                );
            }
        }
    }
    Ok(())
}

pub(super) fn det_oracle(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    let cases = (1..=ctx.n_max)
        .map(|n| (SpecialModel::Dwbc, n, "Z"))
        .chain((1..=ctx.m_max).map(|m| (SpecialModel::Ht2, m, "Z_HT^(2)")));
    for (model, size, name) in cases {
        let mut rng = ctx.rng(size as u64 + if model == SpecialModel::Ht2 { 100 } else { 0 });
        for p in 0..ctx.points {
            let u = random_uvector(&mut rng, 2 * size);
            let (det, oracle) = determinant::compare_at(model, size, &u, &ctx.ice)?;
            ck.value_eq(&format!("{name}, size {size}, determinant form"), || u_json(&u), &det, &oracle);
            // spot-check symmetry in the union of x and y
            if p < 3 {
                let rot = rotate(&u);
                let other = zs(ctx, model, size, &rot)?;
                ck.value_eq(&format!("{name}, size {size}, symmetric in u"), || u_json(&rot), &other, &oracle);
            }
        }
    }
    Ok(())
}

/// `W(m; u)` from state sums, `u` of length `2m`.
fn wronskian_big_w(ctx: &Ctx, m: usize, u: &UVector) -> Result<CycloNum> {
    let a2 = zeta().mul_ref(&zeta());
    let last = u.get(2 * m).clone();
    let up = u.with(2 * m, a2.mul_ref(&last))?;
    let um = u.with(2 * m, inv(&a2).mul_ref(&last))?;
    let z = |v: &UVector| zs(ctx, SpecialModel::Dwbc, m, v);
    let q = |v: &UVector| zs(ctx, SpecialModel::Ht2, m, v);
    Ok(z(&um)?.mul_ref(&q(&up)?).sub_ref(&q(&um)?.mul_ref(&z(&up)?)))
}

/// `∏_{μ<2m} σ(u_μ ū_{2m} k)` for `u` of length `2m`.
fn prod_last(u: &UVector, k: &CycloNum) -> CycloNum {
    let dim = u.dim();
    let ul = inv(u.get(dim)).mul_ref(k);
    (1..dim).fold(CycloNum::one(), |acc, mu| acc.mul_ref(&sig(&u.get(mu).mul_ref(&ul))))
}

/// `Z'_HT(2m+1)` with the last coordinate doubled, from the two-line
/// functions.
fn z_odd_from_pair(ctx: &Ctx, m: usize, u: &UVector) -> Result<CycloNum> {
    let last = u.get(2 * m + 1).clone();
    let doubled = u.push(last)?;
    let head = u.truncate(2 * m);
    let s3 = sig(&zeta()).pow_i(3).expect("nonzero");
    let sum = zs(ctx, SpecialModel::Dwbc, m + 1, &doubled)?
        .mul_ref(&zs(ctx, SpecialModel::Ht2, m, &head)?)
        .add_ref(&zs(ctx, SpecialModel::Ht2, m + 1, &doubled)?.mul_ref(&zs(ctx, SpecialModel::Dwbc, m, &head)?));
    Ok(sum.checked_div(&s3)?.neg_ref())
}

pub(super) fn wronskian(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    let s = sig(&zeta());
    let a2 = zeta().mul_ref(&zeta());
    for m in 1..=ctx.m_max {
        let mut rng = ctx.rng(m as u64);
        for _ in 0..ctx.points {
            // odd function from the pair of two-line functions
            let u = random_uvector(&mut rng, 2 * m + 1);
            let direct = zs(ctx, SpecialModel::HtOdd, m, &u)?;
            ck.value_eq(
                &format!("Z'_HT({}) from Z and Z_HT^(2) at a doubled point", 2 * m + 1),
                || u_json(&u),
                &z_odd_from_pair(ctx, m, &u)?,
                &direct,
            );

            // the ratio W/∏σ is unchanged by u_2m → a²·u_2m
            let v = random_uvector(&mut rng, 2 * m);
            let w = wronskian_big_w(ctx, m, &v)?;
            let last = v.get(2 * m).clone();
            let shifted = v.with(2 * m, a2.mul_ref(&last))?;
            let lhs = w.checked_div(&prod_last(&v, &CycloNum::one()))?;
            let rhs = wronskian_big_w(ctx, m, &shifted)?.checked_div(&prod_last(&shifted, &CycloNum::one()))?;
            ck.value_eq(&format!("W({m}) ratio under u_{} → a²·u_{}", 2 * m, 2 * m), || u_json(&v), &lhs, &rhs);

            // the same ratio at an unrelated second value of u_2m
            let other = random_uvector(&mut rng, 2 * m).get(2 * m).clone();
            if !v.coords()[..2 * m - 1].iter().any(|c| *c == other || *c == other.neg_ref()) {
                let v2 = v.with(2 * m, other)?;
                let r2 = wronskian_big_w(ctx, m, &v2)?.checked_div(&prod_last(&v2, &CycloNum::one()))?;
                ck.value_eq(&format!("W({m}) ratio at two values of u_{}", 2 * m), || u_json(&v2), &lhs, &r2);
            }

            // W factorises with w independent of u_2m
            let small = v.truncate(2 * m - 1);
            let wsmall = determinant::wronskian_w(m, &small)?;
            let factored = wsmall.mul_ref(&prod_last(&v, &CycloNum::one()));
            ck.value_eq(&format!("W({m}) = w·∏σ"), || u_json(&v), &w, &factored);

            // the same w computed from state sums of the odd function
            let sign = if m % 2 == 1 { CycloNum::one().neg_ref() } else { CycloNum::one() };
            let w_state = if m == 1 {
                sign.mul_ref(&s.pow_i(3).expect("nonzero"))
            } else {
                sign.mul_ref(&s.pow_i(3).expect("nonzero")).mul_ref(&zs(ctx, SpecialModel::HtOdd, m - 1, &small)?)
            };
            ck.value_eq(&format!("w({m}) determinant vs state sum"), || u_json(&small), &wsmall, &w_state);

            // W at u_2m = a²·u_2m−1
            let tail = small.get(2 * m - 1).clone();
            let special = small.push(a2.mul_ref(&tail))?;
            let lhs = wronskian_big_w(ctx, m, &special)?;
            let pre = s.mul_ref(&prod_a_over(&special, 2 * m - 2, 2 * m - 1));
            ck.value_eq(
                &format!("W({m}) at u_{} = a²·u_{}", 2 * m, 2 * m - 1),
                || u_json(&special),
                &lhs,
                &pre.mul_ref(&wsmall).neg_ref(),
            );

            // odd function as a Wronskian one size up
            let big = determinant::wronskian_w(m + 1, &u)?;
            let k = if (m + 1) % 2 == 0 { CycloNum::one() } else { CycloNum::one().neg_ref() };
            let rhs = k.mul_ref(&big).checked_div(&s.pow_i(3).expect("nonzero"))?;
            ck.value_eq(&format!("Z'_HT({}) = ±w({})/σ³", 2 * m + 1, m + 1), || u_json(&u), &direct, &rhs);

            // and with w({m+1}) taken from W by state sums alone
            let extra = u.push(CycloNum::from_rational(crate::exactnum::rational(97, 89)))?;
            let w_from_sums =
                wronskian_big_w(ctx, m + 1, &extra)?.checked_div(&prod_last(&extra, &CycloNum::one()))?;
            let rhs = k.mul_ref(&w_from_sums).checked_div(&s.pow_i(3).expect("nonzero"))?;
            ck.value_eq(
                &format!("Z'_HT({}) from W({}) by state sums", 2 * m + 1, m + 1),
                || json!({ "point": u_json(&extra) }),
                &direct,
                &rhs,
            );
        }
    }
    Ok(())
}

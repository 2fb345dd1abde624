//! Exact symbolic identities between state sums.

use super::{Checker, Ctx};
use crate::error::Result;
use crate::icemodel::{self, ModelSpec, SplitMethod};
use crate::laurent::{sigma, IntPoly};

fn x(i: usize) -> String {
    format!("x{i}")
}

fn y(i: usize) -> String {
    format!("y{i}")
}

fn mono(powers: &[(&str, i32)]) -> IntPoly {
    IntPoly::monomial(1.into(), powers)
}

/// `σ(a^k)`.
fn sa(k: i32) -> IntPoly {
    sigma(&[("a", k)])
}

/// `σ(a·x̄_i·y_j)`, written with explicit names.
fn s_xbar_y(xi: &str, yj: &str) -> IntPoly {
    sigma(&[("a", 1), (xi, -1), (yj, 1)])
}

/// `a·y² − ā·x²`.
fn mw(yv: &str, xv: &str) -> IntPoly {
    mono(&[("a", 1), (yv, 2)]).sub(&mono(&[("a", -1), (xv, 2)]))
}

/// `p` with `yv ↦ a·xv`.
fn at_line(p: &IntPoly, yv: &str, xv: &str) -> Result<IntPoly> {
    p.substitute(yv, &mono(&[("a", 1), (xv, 1)]))
}

fn names(prefix: fn(usize) -> String, idx: impl IntoIterator<Item = usize>) -> Vec<String> {
    idx.into_iter().map(prefix).collect()
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn z(ctx: &Ctx, spec: &ModelSpec) -> Result<IntPoly> {
    icemodel::symbolic_z_with(spec, &ctx.ice)
}

/// Modified `Z_HT^{(2)}(2m) · ∏ x_i^m y_i^m`.
fn zt2(ctx: &Ctx, m: usize) -> Result<IntPoly> {
    let q = icemodel::z_ht2_with(m, &ctx.ice)?;
    let mut powers: Vec<(String, i32)> = Vec::new();
    for i in 1..=m {
        powers.push((x(i), m as i32));
        powers.push((y(i), m as i32));
    }
    let p: Vec<(&str, i32)> = powers.iter().map(|(n, e)| (n.as_str(), *e)).collect();
    Ok(q.shift(&p))
}

fn z2(ctx: &Ctx, m: usize) -> Result<IntPoly> {
    icemodel::z_ht2_with(m, &ctx.ice)
}

/// Symmetry under adjacent transpositions of the listed variables.
fn check_symmetric(ck: &mut Checker, label: &str, p: &IntPoly, vars: &[String]) {
    for w in vars.windows(2) {
        let swapped = p.rename(&[(w[0].as_str(), w[1].as_str()), (w[1].as_str(), w[0].as_str())]);
        ck.poly_eq(&format!("{label}: symmetric in {} ↔ {}", w[0], w[1]), &swapped, p);
    }
}

/// Degree profile of a modified function: homogeneous of the given total
/// degree in the spectral variables, and for each listed variable the
/// exponents lie in `0..=max` (even when `even`) with `max` attained.
fn check_profile(ck: &mut Checker, label: &str, p: &IntPoly, total: i64, per_var: &[(String, i32, bool)]) {
    let spectral: Vec<&String> = p.vars().iter().filter(|v| *v != "a").collect();
    let mut degs: Vec<i64> = p
        .terms()
        .map(|(m, _)| spectral.iter().map(|v| p.exponent_of(m, v) as i64).sum())
        .collect();
    degs.sort_unstable();
    degs.dedup();
    ck.record(degs == vec![total], || {
        serde_json::json!({ "check": format!("{label}: homogeneous of degree {total}"), "degrees": degs })
    });
    for (v, max, even) in per_var {
        let exps: Vec<i32> = p.terms().map(|(m, _)| p.exponent_of(m, v)).collect();
        let lo = exps.iter().copied().min().unwrap_or(0);
        let hi = exps.iter().copied().max().unwrap_or(0);
        let parity_ok = !even || exps.iter().all(|e| e % 2 == 0);
        ck.record(lo >= 0 && hi == *max && parity_ok, || {
            serde_json::json!({
                "check": format!("{label}: degree profile in {v}"),
                "expected": { "max": max, "even": even },
                "found": { "min": lo, "max": hi, "even": exps.iter().all(|e| e % 2 == 0) },
            })
        });
    }
}

pub(super) fn dwbc_recursion(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for n in 1..=ctx.n_max {
        let (xn, yn) = (x(n), y(n));
        let zn = z(ctx, &ModelSpec::dwbc(n))?;
        let zprev = z(ctx, &ModelSpec::dwbc(n - 1))?;
        let mut rhs = sa(2);
        for i in 1..n {
            rhs = rhs.mul(&s_xbar_y(&xn, &y(i))).mul(&s_xbar_y(&x(i), &yn));
        }
        let rhs = at_line(&rhs.mul(&zprev), &yn, &xn)?;
        ck.poly_eq(&format!("Z({n}) at y{n} = a·x{n}"), &at_line(&zn, &yn, &xn)?, &rhs);

        let zt = z(ctx, &ModelSpec::dwbc(n).modified())?;
        let ztprev = z(ctx, &ModelSpec::dwbc(n - 1).modified())?;
        let mut rhs = sa(2);
        for i in 1..n {
            rhs = rhs.mul(&mw(&y(i), &xn)).mul(&mw(&yn, &x(i)));
        }
        let rhs = at_line(&rhs.mul(&ztprev), &yn, &xn)?;
        ck.poly_eq(&format!("modified Z({n}) at y{n} = a·x{n}"), &at_line(&zt, &yn, &xn)?, &rhs);
    }
    Ok(())
}

pub(super) fn dwbc_symmetry(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for n in 1..=ctx.n_max {
        let zt = z(ctx, &ModelSpec::dwbc(n).modified())?;
        let label = format!("modified Z({n})");
        check_symmetric(ck, &label, &zt, &names(x, 1..=n));
        check_symmetric(ck, &label, &zt, &names(y, 1..=n));
        let d = 2 * (n as i32 - 1);
        let per: Vec<(String, i32, bool)> = (1..=n).flat_map(|i| [(x(i), d, true), (y(i), d, true)]).collect();
        check_profile(ck, &label, &zt, 2 * n as i64 * (n as i64 - 1), &per);
    }
    Ok(())
}

pub(super) fn leading_c_s(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for n in 1..=ctx.n_max {
        let zt = z(ctx, &ModelSpec::dwbc(n).modified())?;
        let d = 2 * (n as i32 - 1);
        let xs = names(x, 1..=n);
        let ys = names(y, 1..=n);
        let all_x: Vec<(&str, i32)> = xs.iter().map(|v| (v.as_str(), d)).collect();
        let c = IntPoly::product(&(1..=n as i32).map(|i| sa(2 * i)).collect::<Vec<_>>());
        ck.poly_eq(&format!("C({n})"), &zt.coeff(&all_x), &c);

        let mut cons: Vec<(&str, i32)> = Vec::new();
        for i in 0..n - 1 {
            cons.push((xs[i].as_str(), d));
            cons.push((ys[i].as_str(), 0));
        }
        let pre = IntPoly::product(&(1..n as i32).map(|i| sa(2 * i)).collect::<Vec<_>>());
        let (xn, yn) = (xs[n - 1].as_str(), ys[n - 1].as_str());
        let k = n as i32;
        let tail = sa(2 * k)
            .mul(&mono(&[(xn, d)]))
            .sub(&sa(2 * (k - 1)).mul(&mono(&[(xn, 2 * (k - 2)), (yn, 2)])));
        ck.poly_eq(&format!("S({n})"), &zt.coeff(&cons), &pre.mul(&tail));
    }
    Ok(())
}

pub(super) fn ht_even_recursion(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for m in 1..=ctx.m_max {
        let zt = z(ctx, &ModelSpec::ht_even(m).modified())?;
        let prev = z(ctx, &ModelSpec::ht_even(m - 1).modified())?;
        let (xm, ym) = (x(m), y(m));
        let mut rhs = sa(2).pow(2).mul(&mono(&[(&xm, 1), (&ym, 1)]));
        for i in 1..m {
            rhs = rhs.mul(&mw(&y(i), &xm).pow(2)).mul(&mw(&ym, &x(i)).pow(2));
        }
        let rhs = at_line(&rhs.mul(&prev), &ym, &xm)?;
        let label = format!("modified Z_HT({})", 2 * m);
        ck.poly_eq(&format!("{label} at y{m} = a·x{m}"), &at_line(&zt, &ym, &xm)?, &rhs);
        check_symmetric(ck, &label, &zt, &names(x, 1..=m));
        check_symmetric(ck, &label, &zt, &names(y, 1..=m));
        let d = 2 * (2 * m as i32 - 1);
        let per: Vec<(String, i32, bool)> = (1..=m).flat_map(|i| [(x(i), d, true), (y(i), d, true)]).collect();
        check_profile(ck, &label, &zt, 2 * m as i64 * (2 * m as i64 - 1), &per);
    }
    Ok(())
}

fn s_poly(n: usize) -> IntPoly {
    let k = n as i32;
    let (xn, yn) = (x(n), y(n));
    let pre = IntPoly::product(&(1..k).map(|i| sa(2 * i)).collect::<Vec<_>>());
    pre.mul(
        &sa(2 * k)
            .mul(&mono(&[(&xn, 2 * (k - 1))]))
            .sub(&sa(2 * (k - 1)).mul(&mono(&[(&xn, 2 * (k - 2)), (&yn, 2)]))),
    )
}

/// Leading polynomial of the quotient. The `y²` term enters with a minus
/// sign, as in the domain-wall case; with a plus sign the identity already
/// fails at `m = 1`, where the two states give `σ(a)·(x1² + y1²)`.
fn s2_poly(m: usize) -> IntPoly {
    s2_poly_signed(m, true)
}

fn s2_poly_signed(m: usize, minus: bool) -> IntPoly {
    let k = m as i32;
    let (xm, ym) = (x(m), y(m));
    let pre = IntPoly::product(&(1..k).map(|i| sa(2 * i - 1)).collect::<Vec<_>>());
    pre.mul(
        &sa(2 * k - 1)
            .mul(&mono(&[(&xm, 2 * k)]))
            .add(&sa(2 * k - 3).mul(&mono(&[(&xm, 2 * (k - 1)), (&ym, 2)])).scale(&if minus { -1 } else { 1 }.into())),
    )
}

pub(super) fn ht_even_leading(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for m in 1..=ctx.m_max {
        let zt = z(ctx, &ModelSpec::ht_even(m).modified())?;
        let q = zt2(ctx, m)?;
        let xs = names(x, 1..=m);
        let ys = names(y, 1..=m);
        let k = m as i32;

        let d = 2 * (2 * k - 1);
        let all: Vec<(&str, i32)> = xs.iter().map(|v| (v.as_str(), d)).collect();
        let c = IntPoly::product(&(1..=2 * k).map(sa).collect::<Vec<_>>());
        ck.poly_eq(&format!("C_HT({})", 2 * m), &zt.coeff(&all), &c);

        let mut cons: Vec<(&str, i32)> = Vec::new();
        for i in 0..m - 1 {
            cons.push((xs[i].as_str(), d));
            cons.push((ys[i].as_str(), 0));
        }
        ck.poly_eq(&format!("S_HT({}) = S·S^(2)", 2 * m), &zt.coeff(&cons), &s_poly(m).mul(&s2_poly(m)));

        let mut cons2: Vec<(&str, i32)> = Vec::new();
        for i in 0..m - 1 {
            cons2.push((xs[i].as_str(), 2 * k));
            cons2.push((ys[i].as_str(), 0));
        }
        ck.poly_eq(&format!("S^(2)({})", 2 * m), &q.coeff(&cons2), &s2_poly(m));
        let plus_sign = s2_poly_signed(m, false);
        ck.note(format!(
            "m = {m}: leading polynomial of the quotient with +σ(a^(2m−3)) {}",
            if q.coeff(&cons2) == plus_sign { "also holds" } else { "fails" }
        ));

        let all2: Vec<(&str, i32)> = xs.iter().map(|v| (v.as_str(), 2 * k)).collect();
        let c2 = IntPoly::product(&(1..=k).map(|i| sa(2 * i - 1)).collect::<Vec<_>>());
        ck.poly_eq(&format!("C^(2)({})", 2 * m), &q.coeff(&all2), &c2);
    }
    Ok(())
}

pub(super) fn factorization(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for m in 1..=ctx.m_max {
        let q = z2(ctx, m)?;
        let zm = z(ctx, &ModelSpec::dwbc(m))?;
        let zht = z(ctx, &ModelSpec::ht_even(m))?;
        ck.poly_eq(&format!("Z_HT({}) = Z({m})·Z_HT^(2)({})", 2 * m, 2 * m), &q.mul(&zm), &zht);
    }
    Ok(())
}

pub(super) fn ht2_recursion(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for m in 1..=ctx.m_max {
        let q = zt2(ctx, m)?;
        let prev = zt2(ctx, m - 1)?;
        let (xm, ym) = (x(m), y(m));
        let mut rhs = sa(2).mul(&mono(&[(&xm, 1), (&ym, 1)]));
        for i in 1..m {
            rhs = rhs.mul(&mw(&y(i), &xm)).mul(&mw(&ym, &x(i)));
        }
        let rhs = at_line(&rhs.mul(&prev), &ym, &xm)?;
        let label = format!("modified Z_HT^(2)({})", 2 * m);
        ck.poly_eq(&format!("{label} at y{m} = a·x{m}"), &at_line(&q, &ym, &xm)?, &rhs);
        let d = 2 * m as i32;
        let per: Vec<(String, i32, bool)> = (1..=m).flat_map(|i| [(x(i), d, true), (y(i), d, true)]).collect();
        check_profile(ck, &label, &q, 2 * (m * m) as i64, &per);
    }
    Ok(())
}

fn ht_odd_named(ctx: &Ctx, m: usize, xs: &[String], ys: &[String], modified: bool) -> Result<IntPoly> {
    let mut spec = ModelSpec::ht_odd(m).with_vars(&strs(xs), &strs(ys))?;
    if modified {
        spec = spec.modified();
    }
    z(ctx, &spec)
}

pub(super) fn ht_odd_recursion(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for m in 1..=ctx.m_max {
        let zo = z(ctx, &ModelSpec::ht_odd(m))?;
        let zto = z(ctx, &ModelSpec::ht_odd(m).modified())?;
        let label = format!("Z_HT({})", 2 * m + 1);
        check_symmetric(ck, &label, &zo, &names(x, 1..=m));
        check_symmetric(ck, &label, &zo, &names(y, 1..=m));

        // first line specialised
        let (x1, y1) = (x(1), y(1));
        let (xc, yc) = (x(m + 1), y(m + 1));
        let mut rhs = sa(2).pow(2).mul(&s_xbar_y(&x1, &yc)).mul(&s_xbar_y(&xc, &y1));
        for i in 2..=m {
            rhs = rhs.mul(&s_xbar_y(&x1, &y(i)).pow(2)).mul(&s_xbar_y(&x(i), &y1).pow(2));
        }
        let rest = ht_odd_named(ctx, m - 1, &names(x, 2..=m + 1), &names(y, 2..=m + 1), false)?;
        let rhs = at_line(&rhs.mul(&rest), &y1, &x1)?;
        ck.poly_eq(&format!("{label} at y1 = a·x1"), &at_line(&zo, &y1, &x1)?, &rhs);

        // last non-central line specialised, modified normalisation
        let (xm, ym) = (x(m), y(m));
        let mut rhs = sa(2)
            .pow(2)
            .mul(&mw(&yc, &xm))
            .mul(&mw(&ym, &xc))
            .mul(&mono(&[(&xm, 1), (&ym, 1)]));
        for i in 1..m {
            rhs = rhs.mul(&mw(&y(i), &xm).pow(2)).mul(&mw(&ym, &x(i)).pow(2));
        }
        let keep: Vec<usize> = (1..m).chain([m + 1]).collect();
        let rest = ht_odd_named(ctx, m - 1, &names(x, keep.clone()), &names(y, keep), true)?;
        let rhs = at_line(&rhs.mul(&rest), &ym, &xm)?;
        ck.poly_eq(&format!("modified {label} at y{m} = a·x{m}"), &at_line(&zto, &ym, &xm)?, &rhs);

        // central line specialised
        let zeven = z(ctx, &ModelSpec::ht_even(m))?;
        let zteven = z(ctx, &ModelSpec::ht_even(m).modified())?;
        let mut rhs = IntPoly::one();
        let mut rhs_mod = IntPoly::one();
        for i in 1..=m {
            rhs = rhs.mul(&s_xbar_y(&x(i), &yc)).mul(&s_xbar_y(&xc, &y(i)));
            rhs_mod = rhs_mod.mul(&mw(&yc, &x(i))).mul(&mw(&y(i), &xc));
        }
        let rhs = at_line(&rhs.mul(&zeven), &yc, &xc)?;
        let rhs_mod = at_line(&rhs_mod.mul(&zteven), &yc, &xc)?;
        ck.poly_eq(&format!("{label} at y{} = a·x{}", m + 1, m + 1), &at_line(&zo, &yc, &xc)?, &rhs);
        ck.poly_eq(
            &format!("modified {label} at y{} = a·x{}", m + 1, m + 1),
            &at_line(&zto, &yc, &xc)?,
            &rhs_mod,
        );

        // degree profile of the modified function
        let d = 4 * m as i32;
        let mut per: Vec<(String, i32, bool)> = (1..=m).flat_map(|i| [(x(i), d, true), (y(i), d, true)]).collect();
        per.push((xc.clone(), 2 * m as i32, false));
        per.push((yc.clone(), 2 * m as i32, false));
        let mlabel = format!("modified {label}");
        check_symmetric(ck, &mlabel, &zto, &names(x, 1..=m));
        check_profile(ck, &mlabel, &zto, 2 * m as i64 * (2 * m as i64 + 1), &per);
    }
    Ok(())
}

pub(super) fn ht_odd_inversion(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for m in 1..=ctx.m_max {
        let all: Vec<String> = names(x, 1..=m + 1).into_iter().chain(names(y, 1..=m + 1)).collect();
        let all = strs(&all);
        let zo = z(ctx, &ModelSpec::ht_odd(m))?;
        ck.poly_eq(&format!("Z_HT({}) under x, y → x̄, ȳ", 2 * m + 1), &zo.invert_vars(&all), &zo);
        let zt = z(ctx, &ModelSpec::ht_odd(m).modified())?;
        let mut shift: Vec<(String, i32)> = Vec::new();
        for i in 1..=m {
            shift.push((x(i), -4 * m as i32));
            shift.push((y(i), -4 * m as i32));
        }
        shift.push((x(m + 1), -2 * m as i32));
        shift.push((y(m + 1), -2 * m as i32));
        let sh: Vec<(&str, i32)> = shift.iter().map(|(n, e)| (n.as_str(), *e)).collect();
        ck.poly_eq(
            &format!("modified Z_HT({}) under x, y → x̄, ȳ", 2 * m + 1),
            &zt.invert_vars(&all),
            &zt.shift(&sh),
        );
    }
    Ok(())
}

pub(super) fn ht_odd_leading(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    for m in 1..=ctx.m_max {
        let zt = z(ctx, &ModelSpec::ht_odd(m).modified())?;
        let k = m as i32;
        let xs = names(x, 1..=m + 1);
        let ys = names(y, 1..=m + 1);
        let mut all: Vec<(&str, i32)> = xs[..m].iter().map(|v| (v.as_str(), 4 * k)).collect();
        all.push((xs[m].as_str(), 2 * k));
        let c = IntPoly::product(&(2..=2 * k + 1).map(sa).collect::<Vec<_>>());
        ck.poly_eq(&format!("C_HT({})", 2 * m + 1), &zt.coeff(&all), &c);

        let mut cons: Vec<(&str, i32)> = Vec::new();
        for i in 0..m {
            cons.push((xs[i].as_str(), 4 * k));
            cons.push((ys[i].as_str(), 0));
        }
        let (xc, yc) = (xs[m].as_str(), ys[m].as_str());
        let pre = IntPoly::product(&(2..=2 * k).map(sa).collect::<Vec<_>>());
        let s = pre.mul(
            &sa(2 * k + 1)
                .mul(&mono(&[(xc, 2 * k)]))
                .sub(&sa(2 * k).mul(&mono(&[(xc, 2 * k - 1), (yc, 1)]))),
        );
        ck.poly_eq(&format!("S_HT({})", 2 * m + 1), &zt.coeff(&cons), &s);
    }
    Ok(())
}

pub(super) fn theorem1(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    theorem1_at(ctx, ck, &ctx.ms())
}

pub(super) fn theorem1_at(ctx: &Ctx, ck: &mut Checker, ms: &[usize]) -> Result<()> {
    for &m in ms {
        let (xc, yc) = (x(m + 1), y(m + 1));
        let zo = z(ctx, &ModelSpec::ht_odd(m))?;
        let left = zo
            .mul(&sa(1))
            .mul(&mono(&[("a", 1), (&xc, 1)]).add(&mono(&[(&yc, 1)])))
            .mul(&mono(&[("a", 1), (&yc, 1)]).add(&mono(&[(&xc, 1)])));
        let bracket = z(ctx, &ModelSpec::dwbc(m + 1))?
            .mul(&z2(ctx, m)?)
            .add(&z(ctx, &ModelSpec::dwbc(m))?.mul(&z2(ctx, m + 1)?));
        let right = mono(&[("a", 1), (&xc, 1), (&yc, 1)]).mul(&bracket);
        ck.poly_eq(&format!("Z_HT({}) cross-multiplied, m = {m}", 2 * m + 1), &left, &right);
    }
    Ok(())
}

pub(super) fn theorem2(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    theorem2_at(ctx, ck, &ctx.ms())
}

pub(super) fn theorem2_at(ctx: &Ctx, ck: &mut Checker, ms: &[usize]) -> Result<()> {
    for &m in ms {
        let (direct_p, direct_m) = icemodel::z_split_odd_with(m, SplitMethod::Direct, &ctx.ice)?;
        let (parity_p, parity_m) = icemodel::z_split_odd_with(m, SplitMethod::Parity, &ctx.ice)?;
        let zp = direct_p.symbolic().cloned().expect("symbolic");
        let zm = direct_m.symbolic().cloned().expect("symbolic");
        let size = 2 * m + 1;
        ck.poly_eq(&format!("Z+({size}) direct = parity"), &zp, parity_p.symbolic().expect("symbolic"));
        ck.poly_eq(&format!("Z-({size}) direct = parity"), &zm, parity_m.symbolic().expect("symbolic"));

        let (xc, yc) = (x(m + 1), y(m + 1));
        let den = sa(1)
            .mul(&sigma(&[("a", 1), (&xc, 1), (&yc, -1)]))
            .mul(&sigma(&[("a", 1), (&xc, -1), (&yc, 1)]));
        let c = mono(&[(&xc, 1), (&yc, -1)]).add(&mono(&[(&xc, -1), (&yc, 1)]));
        let s = mono(&[("a", 1)]).add(&mono(&[("a", -1)]));
        let p1 = z(ctx, &ModelSpec::dwbc(m + 1))?.mul(&z2(ctx, m)?);
        let p2 = z(ctx, &ModelSpec::dwbc(m))?.mul(&z2(ctx, m + 1)?);
        ck.poly_eq(
            &format!("Z+({size}) cross-multiplied"),
            &zp.mul(&den),
            &s.mul(&p1).sub(&c.mul(&p2)),
        );
        let minus_rhs = c.neg().mul(&p1).add(&s.mul(&p2));
        let holds = ck.poly_eq(&format!("Z-({size}) cross-multiplied"), &zm.mul(&den), &minus_rhs);
        let alt = c
            .neg()
            .mul(&p1)
            .add(&s.mul(&z(ctx, &ModelSpec::dwbc(m))?.mul(&z2(ctx, m)?)));
        let alt_holds = zm.mul(&den) == alt;
        ck.note(format!(
            "m = {m}: minus-part relation with last factor Z_HT^(2)({}) {}; with Z_HT^(2)({}) instead {}",
            2 * m + 2,
            if holds { "holds" } else { "fails" },
            2 * m,
            if alt_holds { "holds" } else { "fails" },
        ));
    }
    Ok(())
}

pub(super) fn parity(ctx: &Ctx, ck: &mut Checker) -> Result<()> {
    let sign = |p: &IntPoly, odd: bool| if odd { p.neg() } else { p.clone() };
    for n in 1..=ctx.n_max {
        let zn = z(ctx, &ModelSpec::dwbc(n))?;
        ck.poly_eq(&format!("Z({n}) under a → −a"), &zn.negate_a(), &zn);
    }
    for m in 1..=ctx.m_max {
        let zh = z(ctx, &ModelSpec::ht_even(m))?;
        ck.poly_eq(&format!("Z_HT({}) under a → −a", 2 * m), &zh.negate_a(), &sign(&zh, m % 2 == 1));
        let q = z2(ctx, m)?;
        ck.poly_eq(&format!("Z_HT^(2)({}) under a → −a", 2 * m), &q.negate_a(), &sign(&q, m % 2 == 1));
    }
    for m in 0..=ctx.m_max {
        let (p, q) = icemodel::z_split_odd_with(m, SplitMethod::Direct, &ctx.ice)?;
        let (p, q) = (p.symbolic().cloned().expect("symbolic"), q.symbolic().cloned().expect("symbolic"));
        ck.poly_eq(&format!("Z+({}) under a → −a", 2 * m + 1), &p.negate_a(), &sign(&p, m % 2 == 1));
        ck.poly_eq(&format!("Z-({}) under a → −a", 2 * m + 1), &q.negate_a(), &sign(&q, m % 2 == 0));
    }
    Ok(())
}

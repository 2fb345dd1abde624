//! Closed-form enumerations: product formulas for the totals, the refined
//! 1-enumerations, the central-entry split of odd half-turn symmetric
//! matrices and the x-enumeration specialisations of the partition functions.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::enumerate::{census, AsmClass};
use crate::error::{Error, Result};
use crate::exactnum::{Coeff, CycloNum, Rational};
use crate::icemodel::{self, ModelSpec};
use crate::laurent::{sigma, IntPoly, LaurentPoly, VarAssignment};

pub type RatPoly = LaurentPoly<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumFamily {
    Asm,
    HtEven,
    HtOdd,
    HtOddPlus,
    HtOddMinus,
    Robbins,
}

impl FromStr for EnumFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "asm" => EnumFamily::Asm,
            "ht-even" | "htEven" => EnumFamily::HtEven,
            "ht-odd" | "htOdd" => EnumFamily::HtOdd,
            "ht-odd-plus" | "htOddPlus" => EnumFamily::HtOddPlus,
            "ht-odd-minus" | "htOddMinus" => EnumFamily::HtOddMinus,
            "robbins" | "htOddRobbins" => EnumFamily::Robbins,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

impl EnumFamily {
    pub fn name(self) -> &'static str {
        match self {
            EnumFamily::Asm => "asm",
            EnumFamily::HtEven => "ht-even",
            EnumFamily::HtOdd => "ht-odd",
            EnumFamily::HtOddPlus => "ht-odd-plus",
            EnumFamily::HtOddMinus => "ht-odd-minus",
            EnumFamily::Robbins => "robbins",
        }
    }

    fn check_order(self, order: usize) -> Result<()> {
        let ok = match self {
            EnumFamily::Asm => order >= 1,
            EnumFamily::HtEven => order >= 2 && order.is_multiple_of(2),
            _ => order % 2 == 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedSize(format!("family {} has no order {order}", self.name())))
        }
    }
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

fn fact(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of a negative integer");
    factorial(n as u64)
}

fn to_integer(r: Rational, what: &str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NotIntegral(format!("{what} = {r}")))
    }
}

/// `A(n) = ∏_{i<n} (3i+1)!/(n+i)!`.
pub fn asm_count(n: usize) -> BigInt {
    let n = n as i64;
    let r = (0..n).fold(Rational::from_integer(1.into()), |acc, i| {
        acc * Rational::new(fact(3 * i + 1), fact(n + i))
    });
    to_integer(r, "A(n)").expect("the product formula is integral")
}

/// `A_HT(2m) = ∏_{i<m} (3i)!(3i+2)!/((m+i)!)²`.
pub fn ht_even_count(m: usize) -> BigInt {
    let m = m as i64;
    let r = (0..m).fold(Rational::from_integer(1.into()), |acc, i| {
        let d = fact(m + i);
        acc * Rational::new(fact(3 * i) * fact(3 * i + 2), &d * &d)
    });
    to_integer(r, "A_HT(2m)").expect("the product formula is integral")
}

/// `A_HT(2m+1) = m!(3m)!/((2m)!)² · A_HT(2m)`.
pub fn ht_odd_count(m: usize) -> Result<BigInt> {
    let m = m as i64;
    let d = fact(2 * m);
    let r = Rational::new(fact(m) * fact(3 * m), &d * &d) * Rational::from(ht_even_count(m as usize));
    to_integer(r, "A_HT(2m+1)")
}

/// `A_HT(2m)/A(m)`.
pub fn ht2_count(m: usize) -> Result<BigInt> {
    to_integer(Rational::new(ht_even_count(m), asm_count(m)), "A_HT(2m)/A(m)")
}

/// Closed-form total for the family at the given matrix order.
pub fn count_closed(family: EnumFamily, order: usize) -> Result<BigInt> {
    family.check_order(order)?;
    let m = order / 2;
    let odd_split = |num: usize| -> Result<BigInt> {
        let r = Rational::new(BigInt::from(num), BigInt::from(2 * m + 1)) * Rational::from(ht_odd_count(m)?);
        to_integer(r, "central-entry split")
    };
    match family {
        EnumFamily::Asm => Ok(asm_count(order)),
        EnumFamily::HtEven => Ok(ht_even_count(m)),
        EnumFamily::HtOdd | EnumFamily::Robbins => ht_odd_count(m),
        EnumFamily::HtOddPlus => odd_split(m + 1),
        EnumFamily::HtOddMinus => odd_split(m),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RefinedFamily {
    Asm,
    Ht2,
}

/// How to read the factor `(2m−r−1)` in the half-turn refined sum: as a
/// factorial (matching the ASM sum) or literally as a linear factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HtReading {
    Factorial,
    Linear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RefinedOptions {
    pub reading: HtReading,
    /// Return `1 + t` for the half-turn factor at `m = 1`, where the sum
    /// itself is undefined.
    pub base_case: bool,
}

impl Default for RefinedOptions {
    fn default() -> Self {
        RefinedOptions { reading: HtReading::Factorial, base_case: false }
    }
}

fn t_poly(coeffs: Vec<BigInt>) -> IntPoly {
    let terms = coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| (vec![k as i32], c))
        .collect();
    IntPoly::from_terms(vec!["t".into()], terms)
}

/// Refined 1-enumeration `𝒜(n; t)` or `𝒜_HT^{(2)}(2m; t)`.
pub fn refined_closed(family: RefinedFamily, size: usize, opts: RefinedOptions) -> Result<IntPoly> {
    let s = size as i64;
    match family {
        RefinedFamily::Asm => {
            if size == 0 {
                return Ok(IntPoly::one());
            }
            let n = s;
            let pre = Rational::new(fact(2 * n - 1), fact(n - 1) * fact(3 * n - 2)) * Rational::from(asm_count(size));
            let coeffs = (1..=n)
                .map(|r| {
                    let c = pre.clone()
                        * Rational::new(fact(n + r - 2) * fact(2 * n - r - 1), fact(r - 1) * fact(n - r));
                    to_integer(c, "A(n, r)")
                })
                .collect::<Result<_>>()?;
            Ok(t_poly(coeffs))
        }
        RefinedFamily::Ht2 => {
            if size == 0 {
                return Ok(IntPoly::one());
            }
            if size == 1 {
                return if opts.base_case {
                    Ok(t_poly(vec![BigInt::from(1), BigInt::from(1)]))
                } else {
                    Err(Error::UnsupportedSize(
                        "the half-turn refined sum is undefined at m = 1; use the base case 1 + t".into(),
                    ))
                };
            }
            let m = s;
            let pre = Rational::new(
                BigInt::from(3 * m - 2) * fact(2 * m - 1),
                fact(m - 1) * fact(3 * m - 1),
            ) * Rational::from(ht2_count(size)?);
            let coeffs = (1..=m + 1)
                .map(|r| {
                    let lin = BigInt::from(m * m - m * r + (r - 1) * (r - 1));
                    let f = match opts.reading {
                        HtReading::Factorial => fact(2 * m - r - 1),
                        HtReading::Linear => BigInt::from(2 * m - r - 1),
                    };
                    let c = pre.clone() * Rational::new(lin * fact(m + r - 3) * f, fact(r - 1) * fact(m - r + 1));
                    to_integer(c, "A_HT^(2)(2m, r)")
                })
                .collect::<Result<_>>()?;
            Ok(t_poly(coeffs))
        }
    }
}

/// Refined x-enumeration `𝒜(n; t, x)` of all ASMs, from the census.
pub fn asm_tx(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Ok(IntPoly::one());
    }
    Ok(census(n, AsmClass::All)?.poly_tx())
}

/// `𝒜_HT(2m; t, x)` with weight `x^{k/2}`, from the census.
pub fn ht_even_tx(m: usize) -> Result<IntPoly> {
    if m == 0 {
        return Ok(IntPoly::one());
    }
    census(2 * m, AsmClass::HalfTurn)?.ht_even_poly()
}

/// `𝒜_HT^{(2)}(2m; t, x) = 𝒜_HT(2m; t, x)/𝒜(m; t, x)`.
pub fn ht2_tx(m: usize) -> Result<IntPoly> {
    ht_even_tx(m)?.exact_div(&asm_tx(m)?)
}

/// `𝒜_HT(2m+1; t, s)` with `s = √x`, weight `s^k`.
pub fn ht_odd_ts(m: usize) -> Result<IntPoly> {
    Ok(census(2 * m + 1, AsmClass::HalfTurn)?.poly_ts())
}

fn at_x1(p: &IntPoly) -> Result<IntPoly> {
    let mut at = VarAssignment::new();
    at.insert("x".to_string(), BigInt::from(1));
    p.partial_eval(&at)
}

/// Outcome of matching both readings of the half-turn refined sum against
/// brute force.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReadingResolution {
    /// The reading that matched at every size, if exactly one did.
    pub reading: Option<HtReading>,
    pub checks: Vec<ReadingCheck>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReadingCheck {
    pub reading: HtReading,
    pub m: usize,
    pub matches: bool,
    pub detail: String,
}

pub fn resolve_ht_reading(ms: &[usize]) -> Result<ReadingResolution> {
    let mut checks = Vec::new();
    for &m in ms {
        let brute = at_x1(&ht_even_tx(m)?)?;
        let am = at_x1(&asm_tx(m)?)?;
        for reading in [HtReading::Factorial, HtReading::Linear] {
            let opts = RefinedOptions { reading, base_case: true };
            let (matches, detail) = match refined_closed(RefinedFamily::Ht2, m, opts) {
                Ok(p) => {
                    let ok = p.mul(&am) == brute;
                    (ok, p.to_string())
                }
                Err(e) => (false, e.to_string()),
            };
            checks.push(ReadingCheck { reading, m, matches, detail });
        }
    }
    let passing: Vec<HtReading> = [HtReading::Factorial, HtReading::Linear]
        .into_iter()
        .filter(|r| checks.iter().filter(|c| c.reading == *r).all(|c| c.matches))
        .collect();
    Ok(ReadingResolution {
        reading: (passing.len() == 1).then(|| passing[0]),
        checks,
    })
}

/// The x parameter of the refined odd split.
#[derive(Clone, Debug, PartialEq)]
pub enum XArg {
    Symbolic,
    Value(Rational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputSource {
    /// 𝒜 and 𝒜_HT^{(2)} from brute-force census tables (any x).
    Census,
    /// 𝒜 and 𝒜_HT^{(2)} from the refined product formulas (x = 1 only).
    Closed,
}

/// `(𝒜⁺, 𝒜⁻, 𝒜^R)` for order `2m+1`, polynomials in `t` (and `x` when
/// symbolic).
#[derive(Clone, Debug, PartialEq)]
pub struct RefinedSplit {
    pub plus: RatPoly,
    pub minus: RatPoly,
    pub robbins: RatPoly,
}

fn to_rat(p: &IntPoly) -> RatPoly {
    p.map_coeffs(|c| Rational::from(c.clone()))
}

pub fn refined_ht_odd(m: usize, x: &XArg, source: InputSource) -> Result<RefinedSplit> {
    if m == 0 {
        return Err(Error::UnsupportedSize("the odd split needs m ≥ 1".into()));
    }
    if let XArg::Value(v) = x {
        if *v == Rational::from_integer(4.into()) {
            return Err(Error::SingularAtFour);
        }
    }
    let (a_m, a_m1, h_m, h_m1) = match source {
        InputSource::Census => (asm_tx(m)?, asm_tx(m + 1)?, ht2_tx(m)?, ht2_tx(m + 1)?),
        InputSource::Closed => {
            if *x != XArg::Value(Rational::from_integer(1.into())) {
                return Err(Error::UnsupportedSize("closed-form inputs exist only at x = 1".into()));
            }
            let opts = RefinedOptions { reading: HtReading::Factorial, base_case: true };
            (
                refined_closed(RefinedFamily::Asm, m, opts)?,
                refined_closed(RefinedFamily::Asm, m + 1, opts)?,
                refined_closed(RefinedFamily::Ht2, m, opts)?,
                refined_closed(RefinedFamily::Ht2, m + 1, opts)?,
            )
        }
    };
    let xv = IntPoly::var("x");
    let two = IntPoly::from_int(2);
    let p1 = a_m1.mul(&h_m);
    let p2 = a_m.mul(&h_m1);
    let plus_num = xv.neg().mul(&p1).add(&two.mul(&p2));
    let minus_num = two.mul(&p1).sub(&p2);
    match x {
        XArg::Symbolic => {
            let den = IntPoly::from_int(4).sub(&xv);
            let plus = plus_num.exact_div(&den)?;
            let minus = minus_num.exact_div(&den)?;
            let robbins = plus.add(&xv.mul(&minus));
            Ok(RefinedSplit { plus: to_rat(&plus), minus: to_rat(&minus), robbins: to_rat(&robbins) })
        }
        XArg::Value(v) => {
            let mut at = VarAssignment::new();
            at.insert("x".to_string(), v.clone());
            let k = (Rational::from_integer(4.into()) - v).recip();
            let plus = to_rat(&plus_num).partial_eval(&at)?.scale(&k);
            let minus = to_rat(&minus_num).partial_eval(&at)?.scale(&k);
            let robbins = plus.add(&minus.scale(v));
            Ok(RefinedSplit { plus, minus, robbins })
        }
    }
}

/// `(x, t)` as Laurent polynomials in `a, v`: `x = (a + ā)²` and
/// `t = t_num / t_den = σ(a v̄)/σ(a v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct XenumSymbolic {
    pub x: IntPoly,
    pub t_num: IntPoly,
    pub t_den: IntPoly,
}

pub fn xenum_map_symbolic() -> XenumSymbolic {
    let s = IntPoly::var("a").add(&IntPoly::monomial(BigInt::from(1), &[("a", -1)]));
    XenumSymbolic {
        x: s.pow(2),
        t_num: sigma(&[("a", 1), ("v", -1)]),
        t_den: sigma(&[("a", 1), ("v", 1)]),
    }
}

/// `(x, t)` at a point.
pub fn xenum_map_at(a: &CycloNum, v: &CycloNum) -> Result<(CycloNum, CycloNum)> {
    let ainv = a.inverse().ok_or(Error::NonInvertibleValue { var: "a".into() })?;
    let vinv = v.inverse().ok_or(Error::NonInvertibleValue { var: "v".into() })?;
    let s = a.add_ref(&ainv);
    let den = a.mul_ref(v).sigma()?;
    if den.is_zero() {
        return Err(Error::PoleAtSigmaZero);
    }
    let num = a.mul_ref(&vinv).sigma()?;
    Ok((s.mul_ref(&s), num.checked_div(&den)?))
}

/// `𝒜_HT(2m; t, 4)` from `2^{m−1}(1+t)·𝒜(m; t, 4)²`.
pub fn four_enum_identity(m: usize) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::UnsupportedSize("m must be positive".into()));
    }
    let a = at_x(&asm_tx(m)?, 4)?;
    let k = IntPoly::from_int(1i64 << (m - 1));
    Ok(k.mul(&t_poly(vec![BigInt::from(1), BigInt::from(1)])).mul(&a.mul(&a)))
}

/// `𝒜_HT(2m; t, 4)` by brute force.
pub fn four_enum_brute(m: usize) -> Result<IntPoly> {
    at_x(&ht_even_tx(m)?, 4)
}

fn at_x(p: &IntPoly, x: i64) -> Result<IntPoly> {
    let mut at = VarAssignment::new();
    at.insert("x".to_string(), BigInt::from(x));
    p.partial_eval(&at)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XenumKind {
    Asm,
    Ht2,
    HtEven,
    HtOdd,
}

/// Replaces `t` by `num/den` and clears denominators: returns
/// `Σ c · num^j · den^{deg−j} · (rest)` for `p = Σ c t^j (rest)`.
fn homogenize_t(p: &IntPoly, deg: u32, num: &IntPoly, den: &IntPoly) -> Result<IntPoly> {
    let mut out = IntPoly::zero();
    for j in 0..=deg as i32 {
        let part = p.coeff(&[("t", j)]);
        if part.is_zero() {
            continue;
        }
        let w = num.pow(j as u32).mul(&den.pow(deg - j as u32));
        out = out.add(&part.mul(&w));
    }
    if let Some((_, hi)) = p.degree_range("t") {
        if hi > deg as i32 {
            return Err(Error::UnsupportedSize(format!("t-degree {hi} exceeds {deg}")));
        }
    }
    Ok(out)
}

/// Both sides of the x-enumeration specialisation of a partition function,
/// cross-multiplied into Laurent polynomials in `a, v`:
/// left = census polynomial with `x → (a+ā)²` (or `s → a+ā`),
/// `t → σ(a v̄)/σ(a v)`, times the normaliser; right = the partition function
/// at unit spectral parameters except `y₁ = v`. Both carry `σ(a v)^{deg}`.
pub fn xenum_sides(kind: XenumKind, size: usize) -> Result<(IntPoly, IntPoly)> {
    let map = xenum_map_symbolic();
    let s = IntPoly::var("a").add(&IntPoly::monomial(BigInt::from(1), &[("a", -1)]));
    let sa = |k: i64| sigma::<BigInt>(&[("a", 1)]).pow(k as u32);
    let sa2 = |k: usize| sigma::<BigInt>(&[("a", 2)]).pow(k as u32);
    let sav = |k: usize| map.t_den.pow(k as u32);
    let n = size as i64;
    let (census_poly, deg, norm, spec, ht2) = match kind {
        XenumKind::Asm => (
            asm_tx(size)?.substitute("x", &map.x)?,
            size.saturating_sub(1),
            sa((n - 1) * (n - 1)).mul(&sa2(size)).mul(&sav(size.saturating_sub(1))),
            ModelSpec::dwbc(size),
            false,
        ),
        XenumKind::Ht2 => (
            ht2_tx(size)?.substitute("x", &map.x)?,
            size,
            sa(n * n - n).mul(&sav(size)),
            ModelSpec::ht_even(size),
            true,
        ),
        XenumKind::HtEven => (
            ht_even_tx(size)?.substitute("x", &map.x)?,
            (2 * size).saturating_sub(1),
            sa(2 * n * n - 3 * n + 1).mul(&sa2(size)).mul(&sav((2 * size).saturating_sub(1))),
            ModelSpec::ht_even(size),
            false,
        ),
        XenumKind::HtOdd => (
            ht_odd_ts(size)?.substitute("s", &s)?,
            2 * size,
            sa(2 * n * n - n).mul(&sa2(size)).mul(&sav(2 * size)),
            ModelSpec::ht_odd(size),
            false,
        ),
    };
    let left = homogenize_t(&census_poly, deg as u32, &map.t_num, &map.t_den)?.mul(&norm);
    let z = if ht2 { icemodel::z_ht2(size)? } else { icemodel::symbolic_z(&spec)? };
    let mut at = VarAssignment::new();
    for (k, name) in spec.x_vars.iter().chain(&spec.y_vars).enumerate() {
        if k != spec.lines() {
            at.insert(name.clone(), BigInt::from(1));
        }
    }
    let mut right = z.partial_eval(&at)?;
    if let Some(y1) = spec.y_vars.first() {
        right = right.rename(&[(y1.as_str(), "v")]);
    }
    Ok((left, right.mul(&sav(deg))))
}

/// Both sides of the odd-order relation in `(t, s)`, `s = √x`, multiplied
/// through by `𝒜(m)𝒜(m+1)`:
/// `(s+2)·𝒜_HT(2m+1)·𝒜(m)·𝒜(m+1)` and
/// `s·𝒜(m+1)²·𝒜_HT(2m) + 𝒜(m)²·𝒜_HT(2m+2)`.
pub fn odd_relation_sides(m: usize) -> Result<(IntPoly, IntPoly)> {
    let s = IntPoly::var("s");
    let x_to_s2 = |p: IntPoly| p.substitute("x", &s.pow(2));
    let a_m = x_to_s2(asm_tx(m)?)?;
    let a_m1 = x_to_s2(asm_tx(m + 1)?)?;
    let h_m = x_to_s2(ht_even_tx(m)?)?;
    let h_m1 = x_to_s2(ht_even_tx(m + 1)?)?;
    let odd = ht_odd_ts(m)?;
    let left = s.add(&IntPoly::from_int(2)).mul(&odd).mul(&a_m).mul(&a_m1);
    let right = s.mul(&a_m1.pow(2)).mul(&h_m).add(&a_m.pow(2).mul(&h_m1));
    Ok((left, right))
}

/// Integer value of a constant polynomial, if it has one.
pub fn constant_int(p: &IntPoly) -> Option<BigInt> {
    if p.is_zero() {
        Some(BigInt::from(0))
    } else {
        p.constant_value()
    }
}

/// Sum of the coefficients (value at `t = 1`, `x = 1`).
pub fn total_at_one(p: &RatPoly) -> Rational {
    p.terms().fold(Rational::from_integer(0.into()), |acc, (_, c)| acc + c)
}

/// Coefficients of a polynomial in `t` alone, lowest degree first.
pub fn t_coefficients(p: &IntPoly) -> Vec<BigInt> {
    let Some((_, hi)) = p.degree_range("t") else {
        return p.constant_value().into_iter().collect();
    };
    (0..=hi)
        .map(|j| constant_int(&p.coeff(&[("t", j)])).unwrap_or_default())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    #[test]
    fn closed_counts() {
        let asm: Vec<BigInt> = (1..=6).map(asm_count).collect();
        assert_eq!(asm, ints(&[1, 2, 7, 42, 429, 7436]));
        assert_eq!(count_closed(EnumFamily::HtEven, 6).unwrap(), BigInt::from(140));
        assert_eq!(count_closed(EnumFamily::HtOdd, 7).unwrap(), BigInt::from(588));
        assert_eq!(count_closed(EnumFamily::HtOddPlus, 7).unwrap(), BigInt::from(336));
        assert_eq!(count_closed(EnumFamily::HtOddMinus, 7).unwrap(), BigInt::from(252));
        assert_eq!(count_closed(EnumFamily::HtOdd, 1).unwrap(), BigInt::from(1));
        assert!(count_closed(EnumFamily::HtEven, 5).is_err());
    }

    #[test]
    fn refined_asm() {
        let o = RefinedOptions::default();
        assert_eq!(t_coefficients(&refined_closed(RefinedFamily::Asm, 3, o).unwrap()), ints(&[2, 3, 2]));
        assert_eq!(t_coefficients(&refined_closed(RefinedFamily::Asm, 4, o).unwrap()), ints(&[7, 14, 14, 7]));
    }

    #[test]
    fn refined_ht2_readings() {
        let o = RefinedOptions::default();
        assert_eq!(t_coefficients(&refined_closed(RefinedFamily::Ht2, 2, o).unwrap()), ints(&[2, 1, 2]));
        assert!(matches!(refined_closed(RefinedFamily::Ht2, 1, o), Err(Error::UnsupportedSize(_))));
        let base = RefinedOptions { base_case: true, ..o };
        assert_eq!(t_coefficients(&refined_closed(RefinedFamily::Ht2, 1, base).unwrap()), ints(&[1, 1]));
        let res = resolve_ht_reading(&[2, 3]).unwrap();
        assert_eq!(res.reading, Some(HtReading::Factorial));
    }

    #[test]
    fn odd_split_small() {
        let s = refined_ht_odd(1, &XArg::Value(Rational::from_integer(1.into())), InputSource::Census).unwrap();
        assert_eq!(s.plus.to_string(), "t^2 + 1");
        assert_eq!(s.minus.to_string(), "t");
        let s = refined_ht_odd(2, &XArg::Value(Rational::from_integer(1.into())), InputSource::Closed).unwrap();
        assert_eq!(total_at_one(&s.plus), rational(15, 1));
        assert_eq!(total_at_one(&s.minus), rational(10, 1));
        assert!(matches!(
            refined_ht_odd(1, &XArg::Value(rational(4, 1)), InputSource::Census),
            Err(Error::SingularAtFour)
        ));
        let sym = refined_ht_odd(1, &XArg::Symbolic, InputSource::Census).unwrap();
        assert_eq!(sym.robbins.to_string(), "t^2 + t*x + 1");
    }

    #[test]
    fn xenum_map_values() {
        let (x, t) = xenum_map_at(&CycloNum::zeta(), &CycloNum::one()).unwrap();
        assert_eq!(x, CycloNum::one());
        assert_eq!(t, CycloNum::one());
        let (_, t) = xenum_map_at(&CycloNum::zeta(), &CycloNum::zeta()).unwrap();
        assert!(t.is_zero());
        let m = xenum_map_symbolic();
        assert_eq!(m.x.to_string(), "a^2 + 2 + a^-2");
    }

    #[test]
    fn four_enumeration() {
        assert_eq!(t_coefficients(&four_enum_identity(1).unwrap()), ints(&[1, 1]));
        assert_eq!(t_coefficients(&four_enum_identity(2).unwrap()), ints(&[2, 6, 6, 2]));
        assert_eq!(four_enum_identity(2).unwrap(), four_enum_brute(2).unwrap());
    }

    #[test]
    fn xenum_small_sides() {
        for (k, s) in [(XenumKind::Asm, 2), (XenumKind::Ht2, 1), (XenumKind::HtEven, 1), (XenumKind::HtOdd, 1)] {
            let (l, r) = xenum_sides(k, s).unwrap();
            assert_eq!(l, r, "{k:?} {s}");
        }
        let (l, r) = odd_relation_sides(1).unwrap();
        assert_eq!(l, r);
    }
}

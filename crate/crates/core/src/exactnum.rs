//! Exact coefficient rings.
//!
//! Everything in this crate is computed exactly. Polynomials are generic over a
//! [`Coeff`] ring; the three rings used in practice are big integers, big
//! rationals and [`CycloNum`], the quadratic field Q(ζ) with ζ² = ζ − 1
//! (ζ = e^{iπ/3}).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// An exact commutative ring usable as polynomial coefficients.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    /// `self / rhs` when the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn inverse(&self) -> Option<Self> {
        Self::one().exact_div(self)
    }

    /// Integer power; negative exponents need an invertible base.
    fn pow_i(&self, exp: i32) -> Option<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Some(acc)
    }

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Parse(format!("expected integer string, got {v}")))?;
        BigInt::from_str(s).map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Parse(format!("expected rational string, got {v}")))?;
        parse_rational(s)
    }
}

/// Parses `"3"`, `"-7/4"` and similar into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |e: String| Error::Parse(format!("bad rational {s:?}: {e}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|e| bad(e.to_string()))?;
            let d = BigInt::from_str(d.trim()).map_err(|e| bad(e.to_string()))?;
            if Zero::is_zero(&d) {
                return Err(bad("zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        }
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|e| bad(e.to_string())),
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element `p + q·ζ` of Q(ζ), where ζ² = ζ − 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    p: Rational,
    q: Rational,
}

impl CycloNum {
    pub fn new(p: Rational, q: Rational) -> Self {
        CycloNum { p, q }
    }

    pub fn from_rational(p: Rational) -> Self {
        CycloNum { p, q: Zero::zero() }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(rational(v, 1))
    }

    /// The primitive sixth root of unity e^{iπ/3}.
    pub fn zeta() -> Self {
        CycloNum {
            p: Zero::zero(),
            q: One::one(),
        }
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.q)
    }

    /// Complex conjugation, ζ ↦ ζ̄ = 1 − ζ.
    pub fn conj(&self) -> Self {
        CycloNum {
            p: &self.p + &self.q,
            q: -&self.q,
        }
    }

    /// `x · conj(x) = p² + pq + q²`, which is zero only at zero.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p + &self.p * &self.q + &self.q * &self.q
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.exact_div(rhs).ok_or(Error::DivisionByZero)
    }

    /// σ(x) = x − x⁻¹.
    pub fn sigma(&self) -> Result<Self> {
        let inv = self.inverse().ok_or(Error::DivisionByZero)?;
        Ok(self.sub_ref(&inv))
    }
}

impl Coeff for CycloNum {
    fn zero() -> Self {
        CycloNum::from_int(0)
    }
    fn one() -> Self {
        CycloNum::from_int(1)
    }
    fn from_i64(v: i64) -> Self {
        CycloNum::from_int(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.p) && Zero::is_zero(&self.q)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        CycloNum {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        CycloNum {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        // (p1 + q1ζ)(p2 + q2ζ) with ζ² = ζ − 1
        let qq = &self.q * &rhs.q;
        CycloNum {
            p: &self.p * &rhs.p - &qq,
            q: &self.p * &rhs.q + &self.q * &rhs.p + qq,
        }
    }
    fn neg_ref(&self) -> Self {
        CycloNum {
            p: -&self.p,
            q: -&self.q,
        }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let n = rhs.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let num = self.mul_ref(&rhs.conj());
        Some(CycloNum {
            p: num.p / &n,
            q: num.q / &n,
        })
    }
    fn to_json(&self) -> Value {
        json!({ "p": self.p.to_string(), "q": self.q.to_string() })
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Object(map) => {
                let get = |k: &str| -> Result<Rational> {
                    let s = map
                        .get(k)
                        .and_then(Value::as_str)
                        .ok_or_else(|| Error::Parse(format!("missing field {k:?} in {v}")))?;
                    parse_rational(s)
                };
                Ok(CycloNum::new(get("p")?, get("q")?))
            }
            Value::String(s) => s.parse(),
            _ => Err(Error::Parse(format!("expected cyclotomic number, got {v}"))),
        }
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q_zero = Zero::is_zero(&self.q);
        if q_zero {
            return write!(f, "{}", self.p);
        }
        let q_str = if One::is_one(&self.q) {
            "zeta".to_string()
        } else if One::is_one(&-&self.q) {
            "-zeta".to_string()
        } else {
            format!("{}*zeta", self.q)
        };
        if Zero::is_zero(&self.p) {
            write!(f, "{q_str}")
        } else if self.p.is_negative() {
            write!(f, "{q_str} - {}", -&self.p)
        } else {
            write!(f, "{q_str} + {}", self.p)
        }
    }
}

impl From<Rational> for CycloNum {
    fn from(p: Rational) -> Self {
        CycloNum::from_rational(p)
    }
}

impl From<&BigInt> for CycloNum {
    fn from(v: &BigInt) -> Self {
        CycloNum::from_rational(BigRational::from_integer(v.clone()))
    }
}

/// Parses sums of terms `c`, `c*zeta`, `c*zeta^k`, `zeta^k` with rational `c`
/// and integer `k`, e.g. `"2*zeta - 1"` or `"-3/2 + zeta^-1"`.
impl FromStr for CycloNum {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty cyclotomic expression".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            // split on a sign that is not an exponent sign
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);

        let mut acc = CycloNum::zero();
        for term in terms {
            acc = acc.add_ref(&parse_cyclo_term(term, src)?);
        }
        Ok(acc)
    }
}

fn parse_cyclo_term(term: &str, src: &str) -> Result<CycloNum> {
    let bad = || Error::Parse(format!("bad cyclotomic expression {src:?}"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'+') => (1, &term[1..]),
        Some(b'-') => (-1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let value = match body.find("zeta") {
        None => CycloNum::from_rational(parse_rational(body)?),
        Some(pos) => {
            let coef_part = body[..pos].trim_end_matches('*');
            let coef = if coef_part.is_empty() {
                rational(1, 1)
            } else {
                parse_rational(coef_part)?
            };
            let rest = &body[pos + 4..];
            let exp: i32 = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|e| e.parse().ok())
                    .ok_or_else(bad)?
            };
            let z = CycloNum::zeta().pow_i(exp).ok_or_else(bad)?;
            z.mul_ref(&CycloNum::from_rational(coef))
        }
    };
    Ok(if sign < 0 { value.neg_ref() } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z() -> CycloNum {
        CycloNum::zeta()
    }

    fn c(p: i64, q: i64) -> CycloNum {
        CycloNum::new(rational(p, 1), rational(q, 1))
    }

    #[test]
    fn zeta_squared_is_zeta_minus_one() {
        assert_eq!(z().mul_ref(&z()), c(-1, 1));
    }

    #[test]
    fn inverse_of_zeta() {
        let inv = CycloNum::one().checked_div(&z()).unwrap();
        assert_eq!(inv, c(1, -1));
        assert_eq!(inv, z().conj());
    }

    #[test]
    fn sigma_zeta_squared_is_minus_three() {
        let s = c(-1, 2);
        assert_eq!(s.mul_ref(&s), CycloNum::from_int(-3));
        assert_eq!(z().sigma().unwrap(), s);
        // σ(ζ²) = σ(ζ) at the special point
        assert_eq!(z().mul_ref(&z()).sigma().unwrap(), s);
    }

    #[test]
    fn division_by_zero_errors() {
        assert!(matches!(
            CycloNum::one().checked_div(&CycloNum::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn zeta_has_order_six() {
        assert_eq!(z().pow_i(6).unwrap(), CycloNum::one());
        assert_eq!(z().pow_i(3).unwrap(), CycloNum::from_int(-1));
        assert_eq!(z().pow_i(-2).unwrap(), c(0, -1));
    }

    #[test]
    fn parse_and_display() {
        let x: CycloNum = "2*zeta - 1".parse().unwrap();
        assert_eq!(x, c(-1, 2));
        assert_eq!(x.to_string(), "2*zeta - 1");
        assert_eq!("zeta^2".parse::<CycloNum>().unwrap(), c(-1, 1));
        assert_eq!("-3/2".parse::<CycloNum>().unwrap().p(), &rational(-3, 2));
        assert_eq!("zeta^-1 + 1/2".parse::<CycloNum>().unwrap(), CycloNum::new(rational(3, 2), rational(-1, 1)));
        assert!("zeta^".parse::<CycloNum>().is_err());
        assert!("".parse::<CycloNum>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = CycloNum::new(rational(3, 4), rational(-5, 2));
        assert_eq!(CycloNum::from_json(&x.to_json()).unwrap(), x);
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rational(n, d))
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloNum> {
        (arb_rat(), arb_rat()).prop_map(|(p, q)| CycloNum::new(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(x in arb_cyclo(), y in arb_cyclo(), w in arb_cyclo()) {
            prop_assert_eq!(x.mul_ref(&y).mul_ref(&w), x.mul_ref(&y.mul_ref(&w)));
            prop_assert_eq!(x.add_ref(&y).add_ref(&w), x.add_ref(&y.add_ref(&w)));
            prop_assert_eq!(x.mul_ref(&y.add_ref(&w)), x.mul_ref(&y).add_ref(&x.mul_ref(&w)));
            prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
            if !x.is_zero() {
                prop_assert_eq!(x.inverse().unwrap().mul_ref(&x), CycloNum::one());
                prop_assert_eq!(y.checked_div(&x).unwrap().mul_ref(&x), y.clone());
            }
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(x in arb_cyclo(), y in arb_cyclo()) {
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!(x.mul_ref(&y).conj(), x.conj().mul_ref(&y.conj()));
            prop_assert_eq!(x.add_ref(&y).conj(), x.conj().add_ref(&y.conj()));
            let n = x.mul_ref(&x.conj());
            prop_assert!(n.is_rational());
            prop_assert_eq!(n.p(), &x.norm());
        }
    }
}

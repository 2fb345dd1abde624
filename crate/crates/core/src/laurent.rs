//! Multivariate Laurent polynomials with exact coefficients.
//!
//! A [`LaurentPoly`] keeps its variables in a fixed canonical order and its
//! terms in a `BTreeMap` keyed by exponent vectors under graded-lex order, with
//! no zero coefficients and no variable that never occurs. Two polynomials are
//! therefore equal exactly when their canonical forms are equal.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::Coeff;

/// Exponent vector, one slot per variable of the owning polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sort key giving the canonical variable order
/// `a, x1.., y1.., z, t, v, u1..`, then everything else alphabetically.
fn var_key(name: &str) -> (u8, u64, String) {
    let indexed = |prefix: char| -> Option<u64> {
        let rest = name.strip_prefix(prefix)?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok()
    };
    if name == "a" {
        return (0, 0, String::new());
    }
    if let Some(i) = indexed('x') {
        return (1, i, String::new());
    }
    if let Some(i) = indexed('y') {
        return (2, i, String::new());
    }
    match name {
        "z" => return (3, 0, String::new()),
        "t" => return (4, 0, String::new()),
        "v" => return (5, 0, String::new()),
        _ => {}
    }
    if let Some(i) = indexed('u') {
        return (6, i, String::new());
    }
    (7, 0, name.to_string())
}

pub fn cmp_vars(a: &str, b: &str) -> Ordering {
    var_key(a).cmp(&var_key(b))
}

/// Values for the variables of a polynomial, used by [`LaurentPoly::eval`].
pub type VarAssignment<C> = BTreeMap<String, C>;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<C: Coeff> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, C>,
}

pub type IntPoly = LaurentPoly<BigInt>;

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        LaurentPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(C::from_i64(v))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(C::one(), &[(name, 1)])
    }

    /// `c · ∏ var^exp`. Repeated names accumulate.
    pub fn monomial(c: C, powers: &[(&str, i32)]) -> Self {
        let mut map: BTreeMap<&str, i32> = BTreeMap::new();
        for &(v, e) in powers {
            *map.entry(v).or_insert(0) += e;
        }
        let mut names: Vec<&str> = map.keys().copied().collect();
        names.sort_by(|a, b| cmp_vars(a, b));
        let exps = names.iter().map(|n| map[n]).collect();
        Self::from_terms(
            names.into_iter().map(String::from).collect(),
            vec![(exps, c)],
        )
    }

    /// Builds a polynomial from raw terms over the given variables, summing
    /// repeated exponent vectors. Variables may be in any order.
    pub fn from_terms(vars: Vec<String>, terms: Vec<(Vec<i32>, C)>) -> Self {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&i, &j| cmp_vars(&vars[i], &vars[j]));
        for w in order.windows(2) {
            assert_ne!(vars[w[0]], vars[w[1]], "duplicate variable name");
        }
        let sorted_vars: Vec<String> = order.iter().map(|&i| vars[i].clone()).collect();
        let mut map: BTreeMap<Monomial, C> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length");
            let m = Monomial(order.iter().map(|&i| exps[i]).collect());
            accumulate(&mut map, m, c);
        }
        LaurentPoly {
            vars: sorted_vars,
            terms: map,
        }
        .pruned()
    }

    /// Removes variables that occur in no term.
    fn pruned(mut self) -> Self {
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        LaurentPoly { vars, terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<C> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(C::zero))
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Exponent of `name` in `m`, a monomial of this polynomial.
    pub fn exponent_of(&self, m: &Monomial, name: &str) -> i32 {
        self.var_index(name).map_or(0, |i| m.0[i])
    }

    /// Lowest and highest exponent of `name`, or `None` for the zero polynomial.
    pub fn degree_range(&self, name: &str) -> Option<(i32, i32)> {
        if self.is_zero() {
            return None;
        }
        let Some(i) = self.var_index(name) else {
            return Some((0, 0));
        };
        let lo = self.terms.keys().map(|m| m.0[i]).min()?;
        let hi = self.terms.keys().map(|m| m.0[i]).max()?;
        Some((lo, hi))
    }

    /// Re-expresses this polynomial over a superset of its variables.
    fn embed(&self, target: &[String]) -> Vec<(Monomial, C)> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; target.len()];
                for (k, &slot) in map.iter().enumerate() {
                    e[slot] = m.0[k];
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut v: Vec<String> = self.vars.clone();
        for name in &other.vars {
            if !v.contains(name) {
                v.push(name.clone());
            }
        }
        v.sort_by(|a, b| cmp_vars(a, b));
        v
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let vars = self.union_vars(other);
        let mut terms: BTreeMap<Monomial, C> = if vars == self.vars {
            self.terms.clone()
        } else {
            self.embed(&vars).into_iter().collect()
        };
        let rhs = if vars == other.vars {
            other.terms.clone().into_iter().collect()
        } else {
            other.embed(&vars)
        };
        for (m, c) in rhs {
            let c = if negate { c.neg_ref() } else { c };
            accumulate(&mut terms, m, c);
        }
        LaurentPoly { vars, terms }.pruned()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|c| c.mul_ref(k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = self.union_vars(other);
        let lhs = self.embed(&vars);
        let rhs = other.embed(&vars);
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(lhs.len() * rhs.len() / 2 + 1);
        for (m1, c1) in &lhs {
            for (m2, c2) in &rhs {
                let m = Monomial(m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect());
                let prod = c1.mul_ref(c2);
                match acc.get_mut(&m) {
                    Some(c) => c.add_assign_ref(&prod),
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LaurentPoly { vars, terms }.pruned()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Product of a sequence of polynomials.
    pub fn product<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        items.into_iter().fold(Self::one(), |acc, p| acc.mul(p))
    }

    /// Multiplies by `∏ var^exp`.
    pub fn shift(&self, powers: &[(&str, i32)]) -> Self {
        self.mul(&Self::monomial(C::one(), powers))
    }

    /// For a single-term polynomial `c·m`, returns `m⁻¹/c`.
    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotAMonomial {
                terms: self.terms.len(),
            });
        }
        let (m, c) = self.terms.iter().next().expect("one term");
        let inv = c.inverse().ok_or(Error::DivisionByZero)?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(m.0.iter().map(|e| -e).collect()), inv);
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// σ(m) = m − m⁻¹ for a single monomial `m`.
    pub fn sigma_of(&self) -> Result<Self> {
        Ok(self.sub(&self.monomial_inverse()?))
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> LaurentPoly<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (m.clone(), d))
            })
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
        .pruned()
    }

    /// Multiplies each coefficient by `(-1)^(exponent of var)`, i.e. `var ↦ -var`.
    pub fn negate_var(&self, var: &str) -> Self {
        let Some(i) = self.var_index(var) else {
            return self.clone();
        };
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let c = if m.0[i] % 2 != 0 { c.neg_ref() } else { c.clone() };
                (m.clone(), c)
            })
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// The substitution `a ↦ -a`.
    pub fn negate_a(&self) -> Self {
        self.negate_var("a")
    }

    /// Renames variables; names absent from `map` are kept.
    pub fn rename(&self, map: &[(&str, &str)]) -> Self {
        let vars: Vec<String> = self
            .vars
            .iter()
            .map(|v| {
                map.iter()
                    .find(|(from, _)| from == v)
                    .map_or_else(|| v.clone(), |(_, to)| to.to_string())
            })
            .collect();
        let terms = self.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())).collect();
        Self::from_terms(vars, terms)
    }

    /// Substitutes `var ↦ var⁻¹` for each listed variable.
    pub fn invert_vars(&self, names: &[&str]) -> Self {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.var_index(n)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                for &i in &idx {
                    e[i] = -e[i];
                }
                (e, c.clone())
            })
            .collect();
        Self::from_terms(self.vars.clone(), terms)
    }

    /// Replaces `var` by the polynomial `value`. Negative powers of `var` need
    /// `value` to be a monomial with invertible coefficient.
    pub fn substitute(&self, var: &str, value: &Self) -> Result<Self> {
        let Some(i) = self.var_index(var) else {
            return Ok(self.clone());
        };
        let (lo, hi) = self.degree_range(var).expect("nonzero");
        let inverse = if lo < 0 {
            Some(value.monomial_inverse()?)
        } else {
            None
        };
        let mut powers: HashMap<i32, Self> = HashMap::new();
        for e in lo..=hi {
            let base = if e < 0 { inverse.as_ref().expect("checked") } else { value };
            powers.insert(e, base.pow(e.unsigned_abs()));
        }
        let mut rest_vars = self.vars.clone();
        rest_vars.remove(i);
        let mut groups: BTreeMap<i32, Vec<(Vec<i32>, C)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(i);
            groups.entry(k).or_default().push((e, c.clone()));
        }
        let mut acc = Self::zero();
        for (k, terms) in groups {
            let part = Self::from_terms(rest_vars.clone(), terms);
            acc = acc.add(&part.mul(&powers[&k]));
        }
        Ok(acc)
    }

    /// Substitutes several variables simultaneously.
    pub fn substitute_all(&self, subs: &[(&str, Self)]) -> Result<Self> {
        // rename targets first so that the substitutions do not interfere
        let tmp: Vec<String> = (0..subs.len()).map(|k| format!("__sub{k}")).collect();
        let renames: Vec<(&str, &str)> = subs
            .iter()
            .zip(&tmp)
            .map(|((v, _), t)| (*v, t.as_str()))
            .collect();
        let mut p = self.rename(&renames);
        for ((_, value), t) in subs.iter().zip(&tmp) {
            p = p.substitute(t, value)?;
        }
        Ok(p)
    }

    /// Evaluates at a total assignment.
    pub fn eval(&self, at: &VarAssignment<C>) -> Result<C> {
        let mut values = Vec::with_capacity(self.vars.len());
        let mut inverses = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let val = at
                .get(v)
                .ok_or_else(|| Error::UnassignedVariable { var: v.clone() })?;
            let needs_inverse = self.terms.keys().any(|m| m.0[i] < 0);
            let inv = if needs_inverse {
                Some(
                    val.inverse()
                        .ok_or_else(|| Error::NonInvertibleValue { var: v.clone() })?,
                )
            } else {
                None
            };
            values.push(val.clone());
            inverses.push(inv);
        }
        let mut cache: HashMap<(usize, i32), C> = HashMap::new();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache.entry((i, e)).or_insert_with(|| {
                    let base = if e < 0 {
                        inverses[i].as_ref().expect("checked")
                    } else {
                        &values[i]
                    };
                    base.pow_i(e.abs()).expect("nonnegative power")
                });
                term = term.mul_ref(p);
            }
            acc.add_assign_ref(&term);
        }
        Ok(acc)
    }

    /// Evaluates some variables, leaving a polynomial in the rest.
    pub fn partial_eval(&self, at: &VarAssignment<C>) -> Result<Self> {
        let mut p = self.clone();
        for (v, val) in at {
            if p.var_index(v).is_some() {
                p = p.substitute(v, &Self::constant(val.clone()))?;
            }
        }
        Ok(p)
    }

    /// Coefficient of the given partial exponent pattern, as a polynomial in
    /// the remaining variables.
    pub fn coeff(&self, constraints: &[(&str, i32)]) -> Self {
        let mut fixed = Vec::new();
        for &(name, e) in constraints {
            match self.var_index(name) {
                Some(i) => fixed.push((i, e)),
                None if e == 0 => {}
                None => return Self::zero(),
            }
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| fixed.iter().all(|&(i, e)| m.0[i] == e))
            .map(|(m, c)| {
                let mut e = m.0.clone();
                for &(i, _) in &fixed {
                    e[i] = 0;
                }
                (e, c.clone())
            })
            .collect();
        Self::from_terms(self.vars.clone(), terms)
    }

    /// The monomial `∏ var^min_exponent` over all variables, with unit coefficient.
    fn min_shift(&self) -> Vec<i32> {
        (0..self.vars.len())
            .map(|i| self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0))
            .collect()
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Both operands are shifted into the polynomial ring (the divisor with all
    /// monomial content removed), then reduced by leading terms under
    /// graded-lex order. A nonzero remainder means no Laurent quotient exists.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let vars = self.union_vars(den);
        let num_terms = self.embed(&vars);
        let den_terms = den.embed(&vars);
        let n = vars.len();
        let lo = |ts: &[(Monomial, C)]| -> Vec<i32> {
            (0..n).map(|i| ts.iter().map(|(m, _)| m.0[i]).min().unwrap_or(0)).collect()
        };
        let num_shift = lo(&num_terms);
        let den_shift = lo(&den_terms);
        let shift_down = |ts: Vec<(Monomial, C)>, s: &[i32]| -> BTreeMap<Monomial, C> {
            ts.into_iter()
                .map(|(m, c)| (Monomial(m.0.iter().zip(s).map(|(a, b)| a - b).collect()), c))
                .collect()
        };
        let mut rem = shift_down(num_terms, &num_shift);
        let divisor: Vec<(Monomial, C)> = shift_down(den_terms, &den_shift).into_iter().rev().collect();
        let (lead_m, lead_c) = divisor[0].clone();

        let mut quotient: Vec<(Vec<i32>, C)> = Vec::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let not_divisible = || Error::NotDivisible {
                context: format!("{} terms remain", rem.len()),
            };
            if !lead_m.divides(&m) {
                return Err(not_divisible());
            }
            let qc = c.exact_div(&lead_c).ok_or_else(not_divisible)?;
            let qm: Vec<i32> = m.0.iter().zip(&lead_m.0).map(|(a, b)| a - b).collect();
            for (dm, dc) in &divisor {
                let key = Monomial(dm.0.iter().zip(&qm).map(|(a, b)| a + b).collect());
                let sub = dc.mul_ref(&qc).neg_ref();
                accumulate(&mut rem, key, sub);
            }
            debug_assert!(!rem.contains_key(&m));
            quotient.push((qm, qc));
        }
        let q_shift: Vec<i32> = num_shift.iter().zip(&den_shift).map(|(a, b)| a - b).collect();
        let terms = quotient
            .into_iter()
            .map(|(m, c)| (m.iter().zip(&q_shift).map(|(a, b)| a + b).collect(), c))
            .collect();
        Ok(Self::from_terms(vars, terms))
    }

    /// Whether no variable occurs with a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.min_shift().iter().all(|&e| e >= 0)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| json!({ "exps": m.0, "coef": c.to_json() }))
            .collect();
        json!({ "vars": self.vars, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("polynomial JSON: {msg}"));
        let vars: Vec<String> = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing vars"))?
            .iter()
            .map(|s| s.as_str().map(String::from).ok_or_else(|| bad("var is not a string")))
            .collect::<Result<_>>()?;
        let mut terms = Vec::new();
        for t in v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?
        {
            let exps: Vec<i32> = t
                .get("exps")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing exps"))?
                .iter()
                .map(|e| {
                    e.as_i64()
                        .and_then(|e| i32::try_from(e).ok())
                        .ok_or_else(|| bad("exponent is not an integer"))
                })
                .collect::<Result<_>>()?;
            if exps.len() != vars.len() {
                return Err(bad("exponent vector length differs from vars"));
            }
            let c = C::from_json(t.get("coef").ok_or_else(|| bad("missing coef"))?)?;
            terms.push((exps, c));
        }
        Ok(Self::from_terms(vars, terms))
    }
}

fn accumulate<C: Coeff>(map: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(existing) => {
            existing.add_assign_ref(&c);
            if existing.is_zero() {
                map.remove(&m);
            }
        }
        None => {
            map.insert(m, c);
        }
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            let cs = c.to_string();
            let compound = cs.contains(' ');
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            let mag = if compound { format!("({mag})") } else { mag };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        LaurentPoly::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        LaurentPoly::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        LaurentPoly::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly::neg(self)
    }
}

/// σ(c·∏ var^exp) built directly from a monomial description.
pub fn sigma<C: Coeff>(powers: &[(&str, i32)]) -> LaurentPoly<C> {
    LaurentPoly::monomial(C::one(), powers)
        .sigma_of()
        .expect("unit monomial")
}

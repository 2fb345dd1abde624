use halfturn_ice::enumerate::{census, AsmClass};
use halfturn_ice::exactnum::rational;
use halfturn_ice::formulas::{
    count_closed, factorial, refined_closed, refined_ht_odd, t_coefficients, EnumFamily, InputSource, RefinedFamily, RefinedOptions,
    XArg,
};
use halfturn_ice::Rational;
use proptest::prelude::*;

fn opts() -> RefinedOptions {
    RefinedOptions { base_case: true, ..RefinedOptions::default() }
}

proptest! {
    #[test]
    fn odd_split_adds_up(m in 1usize..=20) {
        let n = 2 * m + 1;
        let plus = count_closed(EnumFamily::HtOddPlus, n).unwrap();
        let minus = count_closed(EnumFamily::HtOddMinus, n).unwrap();
        prop_assert_eq!(&plus + &minus, count_closed(EnumFamily::HtOdd, n).unwrap());
        let ratio = Rational::new(plus, minus);
        prop_assert_eq!(ratio, rational(m as i64 + 1, m as i64));
    }

    #[test]
    fn refined_asm_sums_and_symmetry(n in 1usize..=10) {
        let c = t_coefficients(&refined_closed(RefinedFamily::Asm, n, opts()).unwrap());
        prop_assert_eq!(c.len(), n);
        let total: num_bigint::BigInt = c.iter().sum();
        prop_assert_eq!(total, count_closed(EnumFamily::Asm, n).unwrap());
        let rev: Vec<_> = c.iter().rev().cloned().collect();
        prop_assert_eq!(rev, c);
    }
}

#[test]
fn even_refined_reassembles_census() {
    for m in 2..=3 {
        let asm = refined_closed(RefinedFamily::Asm, m, opts()).unwrap();
        let ht2 = refined_closed(RefinedFamily::Ht2, m, opts()).unwrap();
        let product = t_coefficients(&asm.mul(&ht2));
        assert_eq!(product, census(2 * m, AsmClass::HalfTurn).unwrap().refined_counts(), "m = {m}");
    }
}

#[test]
fn odd_refined_split_at_one_matches_census() {
    for m in 1..=3 {
        let split = refined_ht_odd(m, &XArg::Value(rational(1, 1)), InputSource::Closed).unwrap();
        let (plus, minus) = census(2 * m + 1, AsmClass::HalfTurn).unwrap().central_totals();
        let total = |p: &halfturn_ice::formulas::RatPoly| halfturn_ice::formulas::total_at_one(p);
        assert_eq!(total(&split.plus), Rational::from(plus), "m = {m}");
        assert_eq!(total(&split.minus), Rational::from(minus), "m = {m}");
    }
}

#[test]
fn asm_counts_follow_the_ratio_recurrence() {
    // A(n+1)/A(n) = (3n+1)! n! / ((2n)! (2n+1)!)
    for n in 1..20u64 {
        let f = |k: u64| factorial(k);
        let lhs = Rational::new(count_closed(EnumFamily::Asm, n as usize + 1).unwrap(), count_closed(EnumFamily::Asm, n as usize).unwrap());
        let rhs = Rational::new(f(3 * n + 1) * f(n), f(2 * n) * f(2 * n + 1));
        assert_eq!(lhs, rhs, "n = {n}");
    }
    assert_eq!(count_closed(EnumFamily::Robbins, 7).unwrap(), 588.into());
}

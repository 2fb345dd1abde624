use halfturn_ice::exactnum::rational;
use halfturn_ice::{Coeff, CycloNum};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = halfturn_ice::Rational> {
    (-30i64..=30, 1i64..=30).prop_map(|(n, d)| rational(n, d))
}

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (rat(), rat()).prop_map(|(p, q)| CycloNum::new(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(x in cyclo(), y in cyclo(), z in cyclo()) {
        prop_assert_eq!(x.add_ref(&y).add_ref(&z), x.add_ref(&y.add_ref(&z)));
        prop_assert_eq!(x.mul_ref(&y).mul_ref(&z), x.mul_ref(&y.mul_ref(&z)));
        prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
        prop_assert_eq!(x.mul_ref(&y.add_ref(&z)), x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
        prop_assert_eq!(x.sub_ref(&x), CycloNum::zero());
        if !y.is_zero() {
            let q = x.checked_div(&y).unwrap();
            prop_assert_eq!(q.mul_ref(&y), x.clone());
            prop_assert_eq!(y.inverse().unwrap().mul_ref(&y), CycloNum::one());
        }
    }

    #[test]
    fn conjugation(x in cyclo(), y in cyclo()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.mul_ref(&y).conj(), x.conj().mul_ref(&y.conj()));
        let n = x.mul_ref(&x.conj());
        prop_assert!(n.is_rational());
        prop_assert_eq!(n, CycloNum::from_rational(x.norm()));
    }

    #[test]
    fn display_parses_back(x in cyclo()) {
        let back: CycloNum = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x.clone());
        prop_assert_eq!(CycloNum::from_json(&x.to_json()).unwrap(), x);
    }
}

#[test]
fn zeta_is_a_primitive_sixth_root() {
    let z = CycloNum::zeta();
    // ζ² − ζ + 1 = 0
    assert!(z.mul_ref(&z).sub_ref(&z).add_ref(&CycloNum::one()).is_zero());
    assert_eq!(z.pow_i(6), Some(CycloNum::one()));
    assert_ne!(z.pow_i(3), Some(CycloNum::one()));
    assert_eq!(z.pow_i(-1), Some(z.conj()));
}

#[test]
fn rationals_are_canonical() {
    assert_eq!(rational(2, -4), rational(-1, 2));
    assert_eq!(*rational(6, 4).denom(), 2.into());
}

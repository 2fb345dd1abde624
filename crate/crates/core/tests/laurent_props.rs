use halfturn_ice::icemodel::lift;
use halfturn_ice::{Coeff, CycloNum, IntPoly, VarAssignment};
use proptest::prelude::*;

const VARS: [&str; 3] = ["a", "x1", "y1"];

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=3, 3), -5i64..=5), 0..6).prop_map(|terms| {
        IntPoly::from_terms(
            VARS.iter().map(|v| v.to_string()).collect(),
            terms.into_iter().map(|(e, c)| (e, Coeff::from_i64(c))).collect(),
        )
    })
}

fn point() -> impl Strategy<Value = VarAssignment<CycloNum>> {
    prop::collection::vec((1i64..=9, 1i64..=9, -3i64..=3), 3).prop_map(|vals| {
        VARS.iter()
            .zip(vals)
            .map(|(v, (p, d, q))| {
                let c = CycloNum::new(halfturn_ice::exactnum::rational(p, d), halfturn_ice::exactnum::rational(q, 1));
                (v.to_string(), c)
            })
            .collect()
    })
}

fn at(p: &IntPoly, pt: &VarAssignment<CycloNum>) -> CycloNum {
    lift(p, |c| CycloNum::from_rational(c.clone().into())).eval(pt).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), pt in point()) {
        prop_assert_eq!(at(&p.add(&q), &pt), at(&p, &pt).add_ref(&at(&q, &pt)));
        prop_assert_eq!(at(&p.mul(&q), &pt), at(&p, &pt).mul_ref(&at(&q, &pt)));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!(p.mul(&q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn serialization_round_trips(p in poly()) {
        let s = p.to_json().to_string();
        let back = IntPoly::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        prop_assert_eq!(back.to_json().to_string(), s);
        prop_assert_eq!(back, p);
    }
}

#[test]
fn indivisible_quotient_is_rejected() {
    let x = IntPoly::var("x1");
    let p = x.add(&IntPoly::one());
    let q = x.sub(&IntPoly::one());
    assert!(matches!(p.exact_div(&q), Err(halfturn_ice::Error::NotDivisible { .. })));
}

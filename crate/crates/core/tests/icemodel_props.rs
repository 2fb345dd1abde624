use halfturn_ice::exactnum::rational;
use halfturn_ice::icemodel::{eval_int, partition_function, state_sum_reference, symbolic_z, IceConfig, ModelSpec};
use halfturn_ice::{CycloNum, Error, IntPoly, VarAssignment};
use proptest::prelude::*;

fn models() -> Vec<ModelSpec> {
    vec![
        ModelSpec::dwbc(3),
        ModelSpec::ht_even(1),
        ModelSpec::ht_even(2),
        ModelSpec::ht_odd(1),
        ModelSpec::ht_odd(2).modified(),
    ]
}

fn assignment(spec: &ModelSpec, vals: &[(i64, i64)], a_is_zeta: bool) -> VarAssignment<CycloNum> {
    let mut at = VarAssignment::new();
    let names = spec.x_vars.iter().chain(&spec.y_vars);
    for (name, &(p, q)) in names.zip(vals) {
        at.insert(name.clone(), CycloNum::from_rational(rational(p, q)));
    }
    let a = if a_is_zeta { CycloNum::zeta() } else { CycloNum::from_rational(rational(vals[vals.len() - 1].0, 7)) };
    at.insert("a".to_string(), a);
    at
}

fn swap(p: &IntPoly, u: &str, v: &str) -> IntPoly {
    p.rename(&[(u, "tmp"), (v, u)]).rename(&[("tmp", v)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symbolic_agrees_with_direct_evaluation(
        vals in prop::collection::vec((1i64..=12, 1i64..=12), 7),
        a_is_zeta in any::<bool>(),
    ) {
        let cfg = IceConfig::default();
        for spec in models() {
            let at = assignment(&spec, &vals, a_is_zeta);
            let sym = symbolic_z(&spec).unwrap();
            let direct = partition_function(&spec, Some(&at), &cfg).unwrap();
            prop_assert_eq!(&eval_int(&sym, &at).unwrap(), direct.evaluated().unwrap());
        }
    }
}

#[test]
fn transfer_matches_per_state_sum() {
    for spec in [ModelSpec::dwbc(3), ModelSpec::ht_even(2), ModelSpec::ht_odd(1), ModelSpec::dwbc(3).modified()] {
        assert_eq!(symbolic_z(&spec).unwrap(), state_sum_reference(&spec).unwrap(), "{spec:?}");
    }
}

#[test]
fn symmetric_in_spectral_parameters() {
    let z = symbolic_z(&ModelSpec::dwbc(4)).unwrap();
    for (u, v) in [("x1", "x2"), ("x2", "x4"), ("y1", "y3"), ("y3", "y4")] {
        assert_eq!(swap(&z, u, v), z, "{u} <-> {v}");
    }
    let zh = symbolic_z(&ModelSpec::ht_even(2)).unwrap();
    assert_eq!(swap(&zh, "x1", "x2"), zh);
    assert_eq!(swap(&zh, "y1", "y2"), zh);
}

#[test]
fn parity_in_a() {
    for n in 1..=4 {
        let z = symbolic_z(&ModelSpec::dwbc(n)).unwrap();
        assert_eq!(z.negate_a(), z, "n = {n}");
    }
    for m in 1..=2 {
        let z = symbolic_z(&ModelSpec::ht_even(m)).unwrap();
        let sign = if m % 2 == 0 { z.clone() } else { z.neg() };
        assert_eq!(z.negate_a(), sign, "m = {m}");
    }
}

#[test]
fn odd_function_is_inversion_invariant() {
    for m in 1..=2 {
        let spec = ModelSpec::ht_odd(m);
        let z = symbolic_z(&spec).unwrap();
        let names: Vec<&str> = spec.x_vars.iter().chain(&spec.y_vars).map(String::as_str).collect();
        assert_eq!(z.invert_vars(&names), z, "m = {m}");
    }
}

#[test]
fn state_guard_refuses_large_sums() {
    let cfg = IceConfig { max_states: 10 };
    let err = partition_function(&ModelSpec::dwbc(4), None, &cfg).unwrap_err();
    assert!(matches!(err, Error::SizeTooLarge { count: 42, bound: 10 }), "{err:?}");
}

#[test]
fn missing_variables_are_reported() {
    let mut at = VarAssignment::new();
    at.insert("a".to_string(), CycloNum::zeta());
    let err = partition_function(&ModelSpec::dwbc(2), Some(&at), &IceConfig::default()).unwrap_err();
    assert!(matches!(err, Error::UnassignedVariable { .. }), "{err:?}");
}

use halfturn_ice::determinant::{compare_at, special_z, SpecialModel, UVector};
use halfturn_ice::exactnum::rational;
use halfturn_ice::icemodel::IceConfig;
use halfturn_ice::verify::random_points;
use halfturn_ice::{CycloNum, Error};
use proptest::prelude::*;

const CASES: [(SpecialModel, usize); 5] = [
    (SpecialModel::Dwbc, 2),
    (SpecialModel::Dwbc, 3),
    (SpecialModel::Ht2, 1),
    (SpecialModel::Ht2, 2),
    (SpecialModel::HtOdd, 2),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn determinant_matches_state_sum(seed in any::<u64>(), case in 0usize..CASES.len()) {
        let (model, size) = CASES[case];
        let u = &random_points(seed, model.dimension(size), 1)[0];
        let (d, z) = compare_at(model, size, u, &IceConfig::default()).unwrap();
        prop_assert_eq!(d, z);
    }

    #[test]
    fn symmetric_in_coordinates(seed in any::<u64>(), case in 0usize..CASES.len(), i in 0usize..8, j in 0usize..8) {
        let (model, size) = CASES[case];
        let dim = model.dimension(size);
        let u = random_points(seed, dim, 1).remove(0);
        let mut coords = u.coords().to_vec();
        coords.swap(i % dim, j % dim);
        let v = UVector::new(coords).unwrap();
        prop_assert_eq!(special_z(model, size, &u).unwrap(), special_z(model, size, &v).unwrap());
    }
}

#[test]
fn coincident_coordinates_are_rejected() {
    let c = |p, q| CycloNum::from_rational(rational(p, q));
    let u = UVector::new(vec![c(1, 2), c(3, 1), c(1, 2), c(5, 1)]).unwrap();
    let err = special_z(SpecialModel::Dwbc, 2, &u).unwrap_err();
    assert!(matches!(err, Error::CoincidentPoints { .. }), "{err:?}");
}

#[test]
fn wrong_dimension_is_rejected() {
    let u = random_points(1, 3, 1).remove(0);
    let err = special_z(SpecialModel::Dwbc, 2, &u).unwrap_err();
    assert!(matches!(err, Error::DimensionMismatch { expected: 4, got: 3 }), "{err:?}");
}

use halfturn_ice::asm::{inversions, Asm};
use halfturn_ice::enumerate::{census, gen_asms, AsmClass};
use proptest::prelude::*;

#[test]
fn state_bijection_round_trips() {
    for n in 1..=5 {
        for a in gen_asms(n, AsmClass::All).unwrap() {
            let s = a.to_state();
            assert_eq!(s.to_asm(), a);
            let c = s.counts();
            // each row sums to 1
            assert_eq!(c[0] as i64 - c[1] as i64, n as i64);
        }
    }
}

#[test]
fn half_turn_flag_matches_rotation() {
    for n in 1..=5 {
        let all = gen_asms(n, AsmClass::All).unwrap();
        let ht: Vec<Asm> = gen_asms(n, AsmClass::HalfTurn).unwrap();
        let filtered: Vec<Asm> = all.iter().filter(|a| **a == a.half_turn()).cloned().collect();
        assert_eq!(ht, filtered);
        for a in &all {
            assert_eq!(a.is_half_turn_symmetric(), *a == a.half_turn());
            assert_eq!(a.central_entry().is_some(), n % 2 == 1);
        }
    }
}

#[test]
fn generation_is_deterministic() {
    let a = gen_asms(6, AsmClass::All).unwrap();
    let b = gen_asms(6, AsmClass::All).unwrap();
    assert_eq!(a, b);
    let t1 = census(7, AsmClass::HalfTurn).unwrap().to_json().to_string();
    let t2 = census(7, AsmClass::HalfTurn).unwrap().to_json().to_string();
    assert_eq!(t1, t2);
}

#[test]
fn census_totals() {
    let all: Vec<String> = (1..=6).map(|n| census(n, AsmClass::All).unwrap().total().to_string()).collect();
    assert_eq!(all, ["1", "2", "7", "42", "429", "7436"]);
    let ht: Vec<String> = (1..=7).map(|n| census(n, AsmClass::HalfTurn).unwrap().total().to_string()).collect();
    assert_eq!(ht, ["1", "2", "3", "10", "25", "140", "588"]);
}

#[test]
fn malformed_matrices_are_rejected() {
    assert!(Asm::validate(&[vec![1, 1], vec![0, 0]]).is_err());
    assert!(Asm::validate(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 0, 0]]).is_err());
    assert!(Asm::validate(&[vec![1, 0], vec![0]]).is_err());
    assert!(Asm::permutation_matrix(&[1, 1]).is_err());
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    (1usize..=8).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn permutation_vertex_counts(word in permutation()) {
        let n = word.len();
        let a = Asm::permutation_matrix(&word).unwrap();
        prop_assert_eq!(a.permutation(), Some(word.clone()));
        let inv = inversions(&word);
        let c = a.to_state().counts();
        let pairs = n * (n - 1) / 2;
        prop_assert_eq!(c, [n, 0, inv, inv, pairs - inv, pairs - inv]);
    }

    #[test]
    fn half_turn_is_an_involution(word in permutation()) {
        let a = Asm::permutation_matrix(&word).unwrap();
        prop_assert_eq!(a.half_turn().half_turn(), a.clone());
        let json = a.to_json();
        prop_assert_eq!(Asm::from_json(&json).unwrap(), a);
    }
}

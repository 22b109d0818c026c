//! Cross-module invariants on random machines.

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use counting_automata::constructions::*;
use counting_automata::machines::format::{parse_machine, serialize_machine};
use counting_automata::machines::random::*;
use counting_automata::machines::{Machine, Nfa};
use counting_automata::semantics::count_paths;

fn machine(seed: u64) -> (Nfa, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_nfa(&mut rng, &NfaShape::default());
    let x = random_word(&mut rng, m.alphabet(), 5);
    (m, x)
}

fn gap(m: &Nfa, x: &str) -> BigInt {
    count_paths(m, x).unwrap().gap()
}

proptest! {
    #[test]
    fn flip_negates_and_is_involutive(seed in any::<u64>()) {
        let (m, x) = machine(seed);
        prop_assert_eq!(gap(&flip(&m), &x), -gap(&m, &x));
        prop_assert_eq!(flip(&flip(&m)), m);
    }

    #[test]
    fn completion_keeps_all_counts(seed in any::<u64>()) {
        let (m, x) = machine(seed);
        prop_assert_eq!(count_paths(&complete_paths(&m), &x).unwrap(), count_paths(&m, &x).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent_on_counts(seed in any::<u64>()) {
        let (m, x) = machine(seed);
        let nf = branching_normal_form(&m);
        let again = with_degree(&nf.machine, nf.degree).unwrap();
        prop_assert_eq!(count_paths(&again.machine, &x).unwrap(), count_paths(&nf.machine, &x).unwrap());
        prop_assert_eq!(nf.machine.normal_form_degree().unwrap(), nf.degree);
    }

    #[test]
    fn gap_normal_form_scales_the_gap(seed in any::<u64>()) {
        let (m, x) = machine(seed);
        let g = gap_normal_form(&m);
        prop_assert_eq!(gap(&g.machine, &x), gap(&m, &x) * BigInt::from(2).pow(x.len() as u32 + 2));
    }

    #[test]
    fn sums_commute(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_alphabet(&mut rng, 3);
        let m = random_nfa_over(&mut rng, &NfaShape::default(), a.clone());
        let n = random_nfa_over(&mut rng, &NfaShape::default(), a.clone());
        let x = random_word(&mut rng, &a, 4);
        let ab = count_paths(&disjoint_sum(&m, &n).unwrap(), &x).unwrap();
        let ba = count_paths(&disjoint_sum(&n, &m).unwrap(), &x).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert_eq!(gap(&gap_of_difference(&m, &m).unwrap(), &x), BigInt::from(0));
    }

    #[test]
    fn constructed_machines_survive_the_file_format(seed in any::<u64>()) {
        let (m, x) = machine(seed);
        let built: Machine = square_gap(&m).into();
        let back = parse_machine(&serialize_machine(&built)).unwrap();
        prop_assert_eq!(gap(back.as_nfa().unwrap(), &x), gap(&m, &x).pow(2));
    }
}

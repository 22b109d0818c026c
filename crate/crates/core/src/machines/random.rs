//! Seeded random machines and inputs for property suites.

use rand::seq::index::sample;
use rand::Rng;

use super::{Alphabet, Dft, Nfa, StateKind, Symbol};
use crate::constructions::Homomorphism;

const LETTERS: &[char] = &['a', 'b', 'c', 'd', 'e', 'f'];

/// Size limits for [`random_nfa`].
#[derive(Debug, Clone)]
pub struct NfaShape {
    pub max_states: usize,
    pub max_letters: usize,
    pub max_branching: usize,
    /// Probability that a non-start state halts.
    pub halting: f64,
    /// Probability that the start state itself halts.
    pub halting_start: f64,
}

impl Default for NfaShape {
    fn default() -> Self {
        NfaShape { max_states: 6, max_letters: 3, max_branching: 3, halting: 0.35, halting_start: 0.03 }
    }
}

pub fn random_alphabet<R: Rng>(rng: &mut R, max_letters: usize) -> Alphabet {
    let k = rng.gen_range(1..=max_letters.clamp(1, LETTERS.len()));
    Alphabet::new(LETTERS[..k].iter().copied()).expect("distinct letters")
}

pub fn random_nfa<R: Rng>(rng: &mut R, shape: &NfaShape) -> Nfa {
    let alphabet = random_alphabet(rng, shape.max_letters);
    random_nfa_over(rng, shape, alphabet)
}

pub fn random_nfa_over<R: Rng>(rng: &mut R, shape: &NfaShape, alphabet: Alphabet) -> Nfa {
    let n = rng.gen_range(1..=shape.max_states.max(1));
    let kinds: Vec<StateKind> = (0..n)
        .map(|q| {
            let p = if q == 0 { shape.halting_start } else { shape.halting };
            if rng.gen_bool(p) {
                StateKind::Halting(if rng.gen_bool(0.5) { super::Verdict::Accept } else { super::Verdict::Reject })
            } else {
                StateKind::Live
            }
        })
        .collect();
    let delta = (0..n)
        .map(|q| {
            (0..alphabet.tape_size())
                .map(|_| {
                    if kinds[q] != StateKind::Live {
                        return Vec::new();
                    }
                    let b = rng.gen_range(0..=shape.max_branching.min(n));
                    sample(rng, n, b).into_vec()
                })
                .collect()
        })
        .collect();
    Nfa::from_table(alphabet, 0, kinds, delta).expect("random machine is well formed")
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, alphabet, len)
}

pub fn random_word_of_len<R: Rng>(rng: &mut R, alphabet: &Alphabet, len: usize) -> String {
    let ls = alphabet.letters();
    if ls.is_empty() {
        return String::new();
    }
    (0..len).map(|_| ls[rng.gen_range(0..ls.len())]).collect()
}

/// A total deterministic transducer with `states` states emitting words of
/// length at most `max_emit` over `outputs`.
pub fn random_dft<R: Rng>(rng: &mut R, alphabet: Alphabet, states: usize, outputs: &[char], max_emit: usize) -> Dft {
    let mut edges = Vec::new();
    for q in 0..states {
        for s in alphabet.tape_symbols().collect::<Vec<Symbol>>() {
            let len = rng.gen_range(0..=max_emit);
            let out: String = (0..len).map(|_| outputs[rng.gen_range(0..outputs.len())]).collect();
            edges.push((q, s, rng.gen_range(0..states), out));
        }
    }
    Dft::from_parts(alphabet, states, 0, edges).expect("random transducer is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes_are_respected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let shape = NfaShape::default();
        for _ in 0..200 {
            let m = random_nfa(&mut rng, &shape);
            assert!(m.num_states() <= 6);
            assert!(m.alphabet().letters().len() <= 3);
            assert!(m.max_branching() <= 3);
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_nfa(&mut ChaCha8Rng::seed_from_u64(9), &NfaShape::default());
        let b = random_nfa(&mut ChaCha8Rng::seed_from_u64(9), &NfaShape::default());
        assert_eq!(a, b);
    }
}

/// Images of length at most `max_len` over `target`; may be erasing.
pub fn random_homomorphism<R: Rng>(rng: &mut R, domain: &Alphabet, target: &[char], max_len: usize) -> Homomorphism {
    Homomorphism::new(domain.letters().iter().map(|&c| {
        let len = rng.gen_range(0..=max_len);
        (c, (0..len).map(|_| target[rng.gen_range(0..target.len())]).collect::<String>())
    }))
    .expect("letters of an alphabet are distinct")
}

/// A prefix-free non-erasing code over `{0,1}`, read off the leaves of a
/// random binary tree.
pub fn random_prefix_code<R: Rng>(rng: &mut R, domain: &Alphabet) -> Homomorphism {
    let mut words = vec![String::new()];
    while words.len() < domain.letters().len().max(2) {
        let i = rng.gen_range(0..words.len());
        let w = words.remove(i);
        words.push(format!("{w}0"));
        words.push(format!("{w}1"));
    }
    Homomorphism::new(domain.letters().iter().copied().zip(words)).expect("letters of an alphabet are distinct")
}

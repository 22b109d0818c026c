//! Machine-to-machine transformations with exact path-count contracts.

mod bridge;
mod closure;
mod homomorphism;
mod normal;
mod transducer;

pub use bridge::nfa_to_pfa;
pub use closure::{
    complement_gapwise, disjoint_sum, flip, gap_of_difference, gap_product, gap_sum, meet_cequal, split_rejecting,
    square_gap, sync_product,
};
pub use homomorphism::{hom_image, hom_inverse, Homomorphism};
pub use normal::{branching_normal_form, complete_paths, gap_normal_form, with_degree, NormalFormResult};
pub use transducer::{counter_from_transducer, gap_from_transducer, identity_transducer};

use crate::machines::{Alphabet, Nfa, Symbol, Verdict};

/// Deterministic machine that reads the whole input and halts with `v` at `◁`.
pub fn constant(alphabet: &Alphabet, v: Verdict) -> Nfa {
    let (accept, reject) = match v {
        Verdict::Accept => (vec![1], vec![]),
        Verdict::Reject => (vec![], vec![1]),
    };
    let edges = alphabet
        .tape_symbols()
        .map(|s| (0, s, if s == Symbol::RightEnd { 1 } else { 0 }))
        .collect::<Vec<_>>();
    Nfa::from_parts(alphabet.clone(), 2, 0, accept, reject, edges).expect("constant machine is well formed")
}

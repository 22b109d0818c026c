//! Accepting, rejecting and improper path counts, checked against explicit
//! path enumeration.

use counting_automata::machines::{Alphabet, Nfa, Symbol};
use counting_automata::semantics::{count_paths, enumerate_paths, PathOutcome};

fn main() -> counting_automata::Result<()> {
    let l = Symbol::Letter;
    // guesses an `a` and accepts there, or rejects at the end
    let m = Nfa::from_parts(Alphabet::of("ab")?, 3, 0, [1], [2], [
        (0, Symbol::LeftEnd, 0),
        (0, l('a'), 0),
        (0, l('a'), 1),
        (0, l('b'), 0),
        (0, Symbol::RightEnd, 2),
    ])?;
    for x in ["", "a", "aba", "aab"] {
        let c = count_paths(&m, x)?;
        println!("{x:>4}: {c}  gap={}", c.gap());
    }
    for p in enumerate_paths(&m, "aba", 100)? {
        let outcome = match p.outcome {
            PathOutcome::Accepting => "accept",
            PathOutcome::Rejecting => "reject",
            PathOutcome::Improper => "improper",
        };
        println!("{:?} -> {outcome}", p.states);
    }
    Ok(())
}

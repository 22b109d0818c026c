//! Branching normal form: every input gets exactly `c^{|x|+2}` paths while
//! the accepting count stays put.

use counting_automata::constructions::{branching_normal_form, gap_normal_form};
use counting_automata::machines::random::{random_nfa, NfaShape};
use counting_automata::semantics::count_paths;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> counting_automata::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let m = random_nfa(&mut rng, &NfaShape::default());
    let nf = branching_normal_form(&m);
    println!("sc {} -> {} with degree {}", m.num_states(), nf.machine.num_states(), nf.degree);
    for x in m.alphabet().strings_up_to(2) {
        println!("{x:>3}: before {}  after {}", count_paths(&m, &x)?, count_paths(&nf.machine, &x)?);
    }
    let g = gap_normal_form(&m);
    let x = m.alphabet().strings_of_len(2).pop().unwrap_or_default();
    println!("gap {} on {x:?} becomes {} at degree {}", count_paths(&m, &x)?.gap(), count_paths(&g.machine, &x)?.gap(), g.degree);
    Ok(())
}

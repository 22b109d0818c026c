//! Compiling a transducer that writes `trans(f(x))` into counting and gap
//! machines.

use counting_automata::constructions::{counter_from_transducer, gap_from_transducer, identity_transducer};
use counting_automata::encodings::trans_value;
use counting_automata::machines::Alphabet;
use counting_automata::semantics::count_paths;

fn main() -> counting_automata::Result<()> {
    let t = identity_transducer(&Alphabet::of("01")?);
    let counter = counter_from_transducer(&t)?;
    let gap = gap_from_transducer(&t)?;
    println!("counter sc = {}, gap sc = {}", counter.num_states(), gap.num_states());
    for x in ["1", "10", "1101", "011", "0"] {
        let value = trans_value(x)?;
        let acc = count_paths(&counter, x)?.accepting;
        println!("{x:>5} encodes {value:>3}: accepting {acc}, gap {}", count_paths(&gap, x)?.gap());
    }
    Ok(())
}

//! Every catalog family: sample instances, classes and the witness machine's
//! value next to the combinatorial oracle.

use counting_automata::families::{Contract, Family};
use counting_automata::machines::state_complexity;
use counting_automata::semantics::{count_paths, dpda_run, DEFAULT_STEP_CAP};

fn main() -> counting_automata::Result<()> {
    let n = 2;
    for f in Family::ALL {
        println!("== {f} over {:?}", f.alphabet().letters());
        let machine = f.build_machine(n).ok();
        if let Some(m) = &machine {
            println!("sc = {} at n = {n}", state_complexity(m));
        }
        for x in f.enumerate(n, 9).take(4) {
            let value = match (&machine, f.contract()) {
                (Some(m), Contract::Accepting) => count_paths(m.as_nfa()?, &x)?.accepting.to_string(),
                (Some(m), Contract::Gap) => count_paths(m.as_nfa()?, &x)?.gap().to_string(),
                (Some(m), Contract::Verdict) => format!("{:?}", dpda_run(m.as_dpda()?, &x, DEFAULT_STEP_CAP)?.verdict),
                _ => "-".into(),
            };
            let want = f.contract_value(n, &x).map_or("-".into(), |v| v.to_string());
            println!("  {x:<24} {:?}  machine={value} oracle={want}", f.classify(n, &x));
        }
    }
    Ok(())
}

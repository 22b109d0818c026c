//! The one-turn pushdown machine for `u^R#v`: verdicts, turns and stack-state
//! complexity.

use counting_automata::families::machines::ldot;
use counting_automata::families::Family;
use counting_automata::machines::stack_state_complexity;
use counting_automata::semantics::{dpda_run_observed, DEFAULT_STEP_CAP};

fn main() -> counting_automata::Result<()> {
    let d = ldot();
    println!("ssc = {}", stack_state_complexity(&d));
    for x in Family::Ldot.enumerate(2, usize::MAX).step_by(5) {
        let mut heights = Vec::new();
        let out = dpda_run_observed(&d, &x, DEFAULT_STEP_CAP, |_, stack| heights.push(stack.len()))?;
        println!("{x}: {:?} turns={:?} heights={heights:?} ({:?})", out.verdict, out.turns, Family::Ldot.classify(2, &x));
    }
    Ok(())
}

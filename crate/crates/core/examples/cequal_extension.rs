//! Spanning prefix sets and the extension property, with a broken machine
//! for contrast.

use counting_automata::analysis::{affine_decomposition, check_cequal_extension, spanning_prefix_set};
use counting_automata::constructions::{gap_normal_form, nfa_to_pfa};
use counting_automata::families::machines::lsp_cequal;
use counting_automata::families::Family;

fn main() -> counting_automata::Result<()> {
    let p = nfa_to_pfa(&gap_normal_form(&lsp_cequal()))?;
    let prefixes = Family::Lsp.alphabet().strings_up_to(3);
    let s = spanning_prefix_set(&p, &prefixes)?;
    println!("{} prefixes span a space of dimension {} (|Q| = {})", prefixes.len(), s.len(), p.num_states());
    let d = affine_decomposition(&p, &s, "0#1")?;
    println!("alpha for 0#1: sum {} min {}", d.sum, d.min);

    println!("{}", check_cequal_extension(&p, Family::Lsp, 1, 6, 3, "0#0")?);
    // the same machine says nothing about LN, so the implication breaks
    let r = check_cequal_extension(&p, Family::LN, 2, 19, 9, "110001100")?;
    println!("LN control: {} violations, first {:?}", r.violation_count, r.violations.first());
    Ok(())
}

//! From a normal-form nfa to an exact-rational probabilistic machine, and the
//! `1/2` threshold on the `L_sp` gap machine.

use counting_automata::constructions::{branching_normal_form, gap_normal_form, nfa_to_pfa};
use counting_automata::families::machines::lsp_cequal;
use counting_automata::families::Family;
use counting_automata::semantics::{count_paths, pfa_probabilities};

fn main() -> counting_automata::Result<()> {
    let g = lsp_cequal();
    let nf = branching_normal_form(&g);
    let p = nfa_to_pfa(&nf)?;
    for x in ["0#", "00#0", "0#0"] {
        let c = count_paths(&g, x)?;
        println!("{x:>5}: accepting {} of {}^{} paths, p_acc = {}", c.accepting, nf.degree, x.len() + 2, pfa_probabilities(&p, x)?.accept);
    }
    let half = nfa_to_pfa(&gap_normal_form(&g))?;
    for x in Family::Lsp.enumerate(1, 4) {
        println!("{x:>5}: {:?} p_acc = {}", Family::Lsp.classify(1, &x), pfa_probabilities(&half, &x)?.accept);
    }
    Ok(())
}

//! Images and inverse images under letter homomorphisms.

use counting_automata::constructions::{hom_image, hom_inverse, Homomorphism};
use counting_automata::families::Family;
use counting_automata::semantics::count_paths;

fn main() -> counting_automata::Result<()> {
    let m = Family::Lsp.build_machine(1)?;
    let m = m.as_nfa()?;
    // x stands for "00", y for "1", s for the separator
    let h = Homomorphism::new([('x', "00"), ('y', "1"), ('s', "#")])?;
    let image = hom_image(m, &h)?;
    for x in ["xs", "xysx", "ys"] {
        let hx = h.apply(x)?;
        println!("{x} -> {hx}: gap {} vs {}", count_paths(&image, x)?.gap(), count_paths(m, &hx)?.gap());
    }
    let code = Homomorphism::new([('0', "0"), ('1', "10"), ('#', "11")])?;
    let inv = hom_inverse(m, &code)?;
    println!("inverse sc = {} (bound {})", inv.num_states(), m.num_states() * code.total_length());
    for x in ["00#0", "0#"] {
        let y = code.apply(x)?;
        println!("{y}: accepting {} vs {}", count_paths(&inv, &y)?.accepting, count_paths(m, x)?.accepting);
    }
    Ok(())
}

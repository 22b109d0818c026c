//! Reading and writing the line-based machine format.

use counting_automata::families::Family;
use counting_automata::machines::format::{parse_machines, serialize_machines};
use counting_automata::machines::Machine;

const TEXT: &str = "\
# ends in a one
machine ends-in-one
kind nfa
alphabet 0 1
states 4
start 0
accept 2
reject 3
trans 0 LEND 1
trans 1 0 1
trans 1 1 1 3
trans 1 REND 2
end
";

fn main() -> counting_automata::Result<()> {
    let mut machines = parse_machines(TEXT)?;
    machines.push(("ldot".into(), Family::Ldot.build_machine(1)?));
    for (name, m) in &machines {
        println!("{name}: {} over {:?}", m.kind_name(), m.alphabet().letters());
    }
    let refs: Vec<(&str, &Machine)> = machines.iter().map(|(n, m)| (n.as_str(), m)).collect();
    print!("{}", serialize_machines(refs));
    Ok(())
}

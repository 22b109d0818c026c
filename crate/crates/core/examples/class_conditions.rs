//! Class predicates on witness machines and a seeded verification suite.

use counting_automata::constructions::split_rejecting;
use counting_automata::families::Family;
use counting_automata::harness::{check_class_condition, run_suite, ClassCondition, ClassKind, Scale};

fn main() -> counting_automata::Result<()> {
    let lu = Family::LU.build_machine(2)?;
    let split = split_rejecting(lu.as_nfa()?).into();
    for (cond, m, f) in [
        (ClassCondition::new(ClassKind::OneU), &lu, Family::LU),
        (ClassCondition::new(ClassKind::OneSP), &split, Family::LU),
        (ClassCondition::new(ClassKind::OneN), &Family::LN.build_machine(2)?, Family::LN),
        (ClassCondition::new(ClassKind::OneParity), &Family::Lparity.build_machine(2)?, Family::Lparity),
        (ClassCondition::new(ClassKind::OneU), &Family::LN.build_machine(2)?, Family::LN),
    ] {
        for line in check_class_condition(cond, m, f, 2, usize::MAX)?.checks {
            println!("{line}");
        }
    }
    println!("{}", run_suite("semantics", 42, Scale::Small)?);
    Ok(())
}

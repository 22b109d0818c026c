//! Value-level operations with exact big integers.

use counting_automata::analysis::{funop_apply, FunOp};
use num_bigint::BigInt;

fn main() -> counting_automata::Result<()> {
    let a: BigInt = "123456789012345678901234567890".parse().expect("literal");
    let b = BigInt::from(-7);
    for op in FunOp::ALL {
        println!("{op:>9}: {}", funop_apply(op, &a, Some(&b))?);
    }
    println!("7 intdiv 0: {:?}", funop_apply(FunOp::IntDiv, &7.into(), Some(&0.into())));
    Ok(())
}

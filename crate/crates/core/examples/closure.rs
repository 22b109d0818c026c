//! Sums, products and gap arithmetic on machines.

use counting_automata::constructions::*;
use counting_automata::machines::random::{random_alphabet, random_nfa_over, random_word, NfaShape};
use counting_automata::semantics::count_paths;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> counting_automata::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let shape = NfaShape::default();
    let a = random_alphabet(&mut rng, 2);
    let (m, n) = (random_nfa_over(&mut rng, &shape, a.clone()), random_nfa_over(&mut rng, &shape, a.clone()));
    let x = random_word(&mut rng, &a, 4);
    let (cm, cn) = (count_paths(&m, &x)?, count_paths(&n, &x)?);
    println!("x={x:?}\nM: {cm}\nN: {cn}");
    println!("sum      {}", count_paths(&disjoint_sum(&m, &n)?, &x)?);
    println!("product  accepting={}", count_paths(&sync_product(&m, &n)?, &x)?.accepting);
    println!("gap sum  {}", count_paths(&gap_sum(&m, &n)?, &x)?.gap());
    println!("gap prod {}", count_paths(&gap_product(&m, &n)?, &x)?.gap());
    println!("square   {}", count_paths(&square_gap(&m), &x)?.gap());
    println!("1 - gap  {}", count_paths(&complement_gapwise(&m), &x)?.gap());
    println!("split    {}", count_paths(&split_rejecting(&m), &x)?.gap());
    Ok(())
}

//! Exact execution semantics: path counting, gaps, PFA probabilities,
//! transduction and deterministic pushdown runs.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::machines::{Dft, Dpda, Move, Nfa, PathCounts, Pfa, StateId, Verdict};

fn tally(counts: &mut PathCounts, v: Verdict, by: &BigUint) {
    match v {
        Verdict::Accept => counts.accepting += by,
        Verdict::Reject => counts.rejecting += by,
    }
}

/// Counts accepting, rejecting and improper paths of `m` on `▷x◁`.
///
/// A path freezes with a verdict as soon as it enters a halting state. Paths
/// that hit an empty successor set, or are still live after `◁`, are improper.
pub fn count_paths(m: &Nfa, x: &str) -> Result<PathCounts> {
    let tape = m.alphabet().tape(x)?;
    let mut counts = PathCounts::default();
    if let Some(v) = m.verdict(m.start()) {
        tally(&mut counts, v, &BigUint::one());
        return Ok(counts);
    }
    let n = m.num_states();
    let mut cur = vec![BigUint::zero(); n];
    cur[m.start()] = BigUint::one();
    for &s in &tape {
        let mut next = vec![BigUint::zero(); n];
        for (q, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let succ = m.successors(q, s);
            if succ.is_empty() {
                counts.improper += c;
            }
            for &p in succ {
                match m.verdict(p) {
                    Some(v) => tally(&mut counts, v, c),
                    None => next[p] += c,
                }
            }
        }
        cur = next;
    }
    counts.improper += cur.iter().sum::<BigUint>();
    Ok(counts)
}

/// `#M(x) - #M̄(x)`.
pub fn gap_value(m: &Nfa, x: &str) -> Result<BigInt> {
    Ok(count_paths(m, x)?.gap())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathOutcome {
    Accepting,
    Rejecting,
    Improper,
}

/// One explicit computation path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub states: Vec<StateId>,
    pub outcome: PathOutcome,
}

/// Lists every computation path. Brute-force oracle for [`count_paths`].
pub fn enumerate_paths(m: &Nfa, x: &str, limit: usize) -> Result<Vec<Path>> {
    let tape = m.alphabet().tape(x)?;
    let mut out = Vec::new();
    let mut states = vec![m.start()];
    walk(m, &tape, 0, &mut states, &mut out, limit)?;
    Ok(out)
}

fn walk(m: &Nfa, tape: &[usize], pos: usize, states: &mut Vec<StateId>, out: &mut Vec<Path>, limit: usize) -> Result<()> {
    let q = *states.last().expect("path is never empty");
    let done = |outcome| Path { states: states.clone(), outcome };
    let finished = match m.verdict(q) {
        Some(Verdict::Accept) => Some(done(PathOutcome::Accepting)),
        Some(Verdict::Reject) => Some(done(PathOutcome::Rejecting)),
        None if pos == tape.len() || m.successors(q, tape[pos]).is_empty() => Some(done(PathOutcome::Improper)),
        None => None,
    };
    if let Some(path) = finished {
        if out.len() == limit {
            return Err(Error::CapExceeded(limit as u64));
        }
        out.push(path);
        return Ok(());
    }
    for &p in m.successors(q, tape[pos]) {
        states.push(p);
        walk(m, tape, pos + 1, states, out, limit)?;
        states.pop();
    }
    Ok(())
}

/// Tallies explicit paths into counts.
pub fn tally_paths(paths: &[Path]) -> PathCounts {
    let mut c = PathCounts::default();
    for p in paths {
        match p.outcome {
            PathOutcome::Accepting => c.accepting += 1u32,
            PathOutcome::Rejecting => c.rejecting += 1u32,
            PathOutcome::Improper => c.improper += 1u32,
        }
    }
    c
}

/// Exact acceptance, rejection and leftover probabilities; they sum to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfaProbabilities {
    pub accept: BigRational,
    pub reject: BigRational,
    pub other: BigRational,
}

/// `ν · M_▷ · M_x · M_◁` against the accept and reject indicators.
pub fn pfa_probabilities(p: &Pfa, x: &str) -> Result<PfaProbabilities> {
    let tape = p.alphabet().tape(x)?;
    let mut v = p.initial().to_vec();
    for &s in &tape {
        v = p.apply(&v, s);
    }
    let mut probs = PfaProbabilities { accept: BigRational::zero(), reject: BigRational::zero(), other: BigRational::zero() };
    for (q, mass) in v.into_iter().enumerate() {
        match p.verdict(q) {
            Some(Verdict::Accept) => probs.accept += mass,
            Some(Verdict::Reject) => probs.reject += mass,
            None => probs.other += mass,
        }
    }
    Ok(probs)
}

/// Concatenated output of `t` over `▷x◁`.
pub fn transduce(t: &Dft, x: &str) -> Result<String> {
    let tape = t.alphabet().tape(x)?;
    let mut q = t.start();
    let mut out = String::new();
    for &s in &tape {
        let (p, w) = t
            .step(q, s)
            .ok_or_else(|| Error::NoTransition(format!("state {q} on {}", t.alphabet().symbol(s))))?;
        out.push_str(w);
        q = p;
    }
    Ok(out)
}

pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DpdaVerdict {
    Accept,
    Reject,
    Improper,
    CapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpdaOutcome {
    pub verdict: DpdaVerdict,
    pub steps: u64,
    /// Switches from a height-increasing phase to a decreasing one; `None`
    /// when the step cap cut the run short.
    pub turns: Option<u64>,
    pub max_height: usize,
}

/// Runs `d` on `▷x◁`. See [`dpda_run_observed`].
pub fn dpda_run(d: &Dpda, x: &str, step_cap: u64) -> Result<DpdaOutcome> {
    dpda_run_observed(d, x, step_cap, |_, _| {})
}

/// Runs `d`, calling `observe(state, stack)` on every configuration with the
/// stack listed bottom first. A λ-move on the current top is taken whenever
/// defined; otherwise the next tape symbol is read. A run that is stuck, or has
/// consumed `◁` with no λ-move left, halts improperly.
pub fn dpda_run_observed(
    d: &Dpda,
    x: &str,
    step_cap: u64,
    mut observe: impl FnMut(StateId, &[char]),
) -> Result<DpdaOutcome> {
    let tape = d.alphabet().tape(x)?;
    let mut q = d.start();
    let mut stack = vec![d.bottom()];
    let mut pos = 0;
    let mut steps = 0u64;
    let mut turns = 0u64;
    let mut rising = false;
    let mut max_height = 1;
    let finish = |verdict, steps, turns, max_height| Ok(DpdaOutcome { verdict, steps, turns, max_height });
    loop {
        observe(q, &stack);
        match d.verdict(q) {
            Some(Verdict::Accept) => return finish(DpdaVerdict::Accept, steps, Some(turns), max_height),
            Some(Verdict::Reject) => return finish(DpdaVerdict::Reject, steps, Some(turns), max_height),
            None => {}
        }
        let top = *stack.last().ok_or_else(|| Error::Stack("stack emptied below the bottom marker".into()))?;
        let (p, push, read) = match d.rule(q, Move::Lambda, top) {
            Some((p, push)) => (p, push, false),
            None if pos < tape.len() => match d.rule(q, Move::Read(tape[pos]), top) {
                Some((p, push)) => (p, push, true),
                None => return finish(DpdaVerdict::Improper, steps, Some(turns), max_height),
            },
            None => return finish(DpdaVerdict::Improper, steps, Some(turns), max_height),
        };
        if steps == step_cap {
            return finish(DpdaVerdict::CapExceeded, steps, None, max_height);
        }
        let before = stack.len();
        stack.pop();
        stack.extend(push.chars().rev());
        if stack.is_empty() {
            return Err(Error::Stack(format!("state {q} popped the bottom marker")));
        }
        if stack.len() > before {
            rising = true;
        } else if stack.len() < before && rising {
            rising = false;
            turns += 1;
        }
        max_height = max_height.max(stack.len());
        steps += 1;
        if read {
            pos += 1;
        }
        q = p;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::random::{random_nfa, random_word, NfaShape};
    use crate::machines::{Alphabet, Symbol};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bin() -> Alphabet {
        Alphabet::of("01").unwrap()
    }

    fn loop_accept() -> Nfa {
        Nfa::from_parts(bin(), 2, 0, [1], [], [
            (0, Symbol::LeftEnd, 0),
            (0, Symbol::Letter('0'), 0),
            (0, Symbol::Letter('1'), 0),
            (0, Symbol::RightEnd, 1),
        ])
        .unwrap()
    }

    #[test]
    fn deterministic_machine_has_one_path() {
        assert_eq!(count_paths(&loop_accept(), "01").unwrap(), PathCounts::new(1, 0, 0));
        assert_eq!(enumerate_paths(&loop_accept(), "01", 10).unwrap().len(), 1);
    }

    #[test]
    fn dead_branches_and_leftovers_are_improper() {
        // reads ▷ then dies on any letter
        let m = Nfa::from_parts(bin(), 2, 0, [], [1], [(0, Symbol::LeftEnd, 0), (0, Symbol::LeftEnd, 1)]).unwrap();
        assert_eq!(count_paths(&m, "0").unwrap(), PathCounts::new(0, 1, 1));
        // live forever, never halts
        let m = Nfa::from_parts(bin(), 1, 0, [], [], bin().tape_symbols().map(|s| (0, s, 0))).unwrap();
        assert_eq!(count_paths(&m, "").unwrap(), PathCounts::new(0, 0, 1));
    }

    #[test]
    fn halting_start() {
        let m = Nfa::from_parts(bin(), 1, 0, [0], [], []).unwrap();
        assert_eq!(count_paths(&m, "11").unwrap(), PathCounts::new(1, 0, 0));
        assert_eq!(tally_paths(&enumerate_paths(&m, "11", 1).unwrap()), PathCounts::new(1, 0, 0));
    }

    #[test]
    fn alphabet_errors() {
        assert_eq!(count_paths(&loop_accept(), "012"), Err(Error::Alphabet('2')));
    }

    #[test]
    fn enumeration_cap() {
        let mut edges = vec![];
        for s in bin().tape_symbols() {
            edges.push((0, s, 0));
            edges.push((0, s, 1));
        }
        let m = Nfa::from_parts(bin(), 2, 0, [], [], edges).unwrap();
        assert_eq!(enumerate_paths(&m, "000", 3), Err(Error::CapExceeded(3)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn dp_matches_enumeration(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_nfa(&mut rng, &NfaShape::default());
            let x = random_word(&mut rng, m.alphabet(), 4);
            let counts = count_paths(&m, &x).unwrap();
            let paths = enumerate_paths(&m, &x, 100_000).unwrap();
            prop_assert_eq!(tally_paths(&paths), counts.clone());
            prop_assert_eq!(gap_value(&m.flipped(), &x).unwrap(), -counts.gap());
        }

        #[test]
        fn deterministic_machines_total_one(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let shape = NfaShape { max_branching: 1, ..NfaShape::default() };
            let m = random_nfa(&mut rng, &shape);
            let x = random_word(&mut rng, m.alphabet(), 6);
            prop_assert_eq!(count_paths(&m, &x).unwrap().total(), BigUint::one());
        }
    }
}

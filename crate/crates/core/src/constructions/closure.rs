use crate::error::{Error, Result};
use crate::machines::{explore, Nfa, Symbol, Verdict};

use super::{complete_paths, constant};

/// Swaps accepting and rejecting states.
pub fn flip(m: &Nfa) -> Nfa {
    m.flipped()
}

fn same_alphabet(a: &Nfa, b: &Nfa) -> Result<()> {
    if a.alphabet() == b.alphabet() {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}

/// Makes the start state live so it can branch on `▷`.
fn live_start(m: &Nfa) -> Nfa {
    if m.is_halting(m.start()) {
        complete_paths(m)
    } else {
        m.clone()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Split {
    Orig(usize),
    Extra(usize),
}

/// Every move into a rejecting state also branches into a fresh accepting
/// copy: `#N = #M + #M̄`, `#N̄ = #M̄`, so `gap(N) = #M`.
pub fn split_rejecting(m: &Nfa) -> Nfa {
    let m = live_start(m);
    explore(
        m.alphabet(),
        Split::Orig(m.start()),
        |k| match *k {
            Split::Orig(q) => m.verdict(q),
            Split::Extra(_) => Some(Verdict::Accept),
        },
        |k, s| {
            let Split::Orig(q) = *k else { unreachable!("extra copies halt") };
            let mut out = Vec::new();
            for &p in m.successors_on(q, s) {
                out.push((Split::Orig(p), 1));
                if m.verdict(p) == Some(Verdict::Reject) {
                    out.push((Split::Extra(p), 1));
                }
            }
            out
        },
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Sum {
    Start,
    Left(usize),
    Right(usize),
    // a start state with no move on ▷; dies on the next symbol
    Dead,
}

/// Branches on `▷` into both machines: all three counts add up.
pub fn disjoint_sum(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    same_alphabet(a, b)?;
    let (a, b) = (live_start(a), live_start(b));
    Ok(explore(
        a.alphabet(),
        Sum::Start,
        |k| match *k {
            Sum::Left(q) => a.verdict(q),
            Sum::Right(q) => b.verdict(q),
            Sum::Start | Sum::Dead => None,
        },
        |k, s| match *k {
            Sum::Start if s == Symbol::LeftEnd => {
                let lane = |m: &Nfa, tag: fn(usize) -> Sum| -> Vec<(Sum, usize)> {
                    let succ = m.successors_on(m.start(), s);
                    if succ.is_empty() {
                        vec![(Sum::Dead, 1)]
                    } else {
                        succ.iter().map(|&p| (tag(p), 1)).collect()
                    }
                };
                let mut out = lane(&a, Sum::Left);
                out.extend(lane(&b, Sum::Right));
                out
            }
            Sum::Start | Sum::Dead => vec![],
            Sum::Left(q) => a.successors_on(q, s).iter().map(|&p| (Sum::Left(p), 1)).collect(),
            Sum::Right(q) => b.successors_on(q, s).iter().map(|&p| (Sum::Right(p), 1)).collect(),
        },
    ))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Pair {
    Run(usize, usize),
    // one lane halted at ◁ while the other was still running
    Stray,
    Halt(Verdict),
    Mixed(Verdict),
}

fn pair_machine(m: &Nfa, n: &Nfa, meet: bool) -> Result<Nfa> {
    same_alphabet(m, n)?;
    let (m, n) = (complete_paths(m), complete_paths(n));
    Ok(explore(
        m.alphabet(),
        Pair::Run(m.start(), n.start()),
        |k| match *k {
            Pair::Halt(v) | Pair::Mixed(v) => Some(v),
            _ => None,
        },
        |k, s| {
            let Pair::Run(p, q) = *k else { return vec![] };
            let mut out = Vec::new();
            for &p2 in m.successors_on(p, s) {
                for &q2 in n.successors_on(q, s) {
                    match (m.verdict(p2), n.verdict(q2)) {
                        (None, None) => out.push((Pair::Run(p2, q2), 1)),
                        (Some(u), Some(v)) if u == v && (meet || u == Verdict::Accept) => out.push((Pair::Halt(u), 1)),
                        (Some(_), Some(_)) if meet => {
                            out.push((Pair::Mixed(Verdict::Accept), 1));
                            out.push((Pair::Mixed(Verdict::Reject), 1));
                        }
                        (Some(_), Some(_)) => out.push((Pair::Halt(Verdict::Reject), 1)),
                        _ => out.push((Pair::Stray, 1)),
                    }
                }
            }
            out
        },
    ))
}

/// Synchronous product: `#K = #M · #N`; every other proper pair rejects.
pub fn sync_product(m: &Nfa, n: &Nfa) -> Result<Nfa> {
    pair_machine(m, n, false)
}

/// Product with `#P = #M#N + m(x)` and `#P̄ = #M̄#N̄ + m(x)` where
/// `m(x) = #M#N̄ + #M̄#N`. Mixed pairs branch into one accept and one reject.
pub fn meet_cequal(m: &Nfa, n: &Nfa) -> Result<Nfa> {
    pair_machine(m, n, true)
}

/// Two copies of `m` run in lockstep; a lane that halts stays frozen until
/// the other halts too. Equal verdicts accept, mixed ones reject, so
/// `gap(N) = gap(M)^2` with at most `sc(M)^2` states.
pub fn square_gap(m: &Nfa) -> Nfa {
    explore(
        m.alphabet(),
        (m.start(), m.start()),
        |&(p, q)| match (m.verdict(p), m.verdict(q)) {
            (Some(u), Some(v)) => Some(if u == v { Verdict::Accept } else { Verdict::Reject }),
            _ => None,
        },
        |&(p, q), s| {
            let lane = |r: usize| if m.is_halting(r) { vec![r] } else { m.successors_on(r, s).to_vec() };
            let (ps, qs) = (lane(p), lane(q));
            ps.iter().flat_map(|&p2| qs.iter().map(move |&q2| ((p2, q2), 1))).collect()
        },
    )
}

/// `#N = #M̄ + 1` and `#N̄ = #M`, so `gap(N) = 1 - gap(M)`.
pub fn complement_gapwise(m: &Nfa) -> Nfa {
    disjoint_sum(&flip(m), &constant(m.alphabet(), Verdict::Accept)).expect("same alphabet")
}

/// `gap(N) = #A - #B`.
pub fn gap_of_difference(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    disjoint_sum(&split_rejecting(a), &flip(&split_rejecting(b)))
}

/// `gap(H) = gap(M) + gap(N)`.
pub fn gap_sum(m: &Nfa, n: &Nfa) -> Result<Nfa> {
    disjoint_sum(m, n)
}

/// `gap(K) = gap(M) · gap(N)`, as `k - h` with
/// `k = #M#N + #M̄#N̄` and `h = #M#N̄ + #M̄#N`.
pub fn gap_product(m: &Nfa, n: &Nfa) -> Result<Nfa> {
    let (fm, fnn) = (flip(m), flip(n));
    let k = disjoint_sum(&sync_product(m, n)?, &sync_product(&fm, &fnn)?)?;
    let h = disjoint_sum(&sync_product(m, &fnn)?, &sync_product(&fm, n)?)?;
    gap_of_difference(&k, &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::testing::{binary, pair_samples, samples};
    use crate::machines::random::NfaShape;
    use crate::machines::PathCounts;
    use crate::semantics::count_paths;
    use num_bigint::BigUint;

    fn counts(m: &Nfa, x: &str) -> PathCounts {
        count_paths(m, x).unwrap()
    }

    /// Machine with the given numbers of accepting and rejecting paths on
    /// every input, all branching at `▷`.
    fn fixed(acc: usize, rej: usize) -> Nfa {
        let n = 1 + acc + rej;
        let mut edges: Vec<_> = (1..n).map(|p| (0, Symbol::LeftEnd, p)).collect();
        edges.sort();
        Nfa::from_parts(binary(), n, 0, 1..=acc, acc + 1..n, edges).unwrap()
    }

    #[test]
    fn flip_and_split() {
        for (m, x) in samples(21, 300, 5) {
            let c = counts(&m, &x);
            let f = counts(&flip(&m), &x);
            assert_eq!((f.accepting, f.rejecting, f.improper), (c.rejecting.clone(), c.accepting.clone(), c.improper.clone()));
            assert_eq!(flip(&flip(&m)), m);
            let s = counts(&split_rejecting(&m), &x);
            assert_eq!(s.accepting, &c.accepting + &c.rejecting);
            assert_eq!(s.rejecting, c.rejecting);
            assert_eq!(s.improper, c.improper);
            assert_eq!(s.gap(), c.accepting.into());
        }
    }

    #[test]
    fn sums_and_products() {
        for (m, n, x) in pair_samples(22, 200, 4, &NfaShape::default()) {
            let (a, b) = (counts(&m, &x), counts(&n, &x));
            let sum = counts(&disjoint_sum(&m, &n).unwrap(), &x);
            assert_eq!(sum.accepting, &a.accepting + &b.accepting);
            assert_eq!(sum.rejecting, &a.rejecting + &b.rejecting);
            assert_eq!(sum.improper, &a.improper + &b.improper);
            assert_eq!(counts(&sync_product(&m, &n).unwrap(), &x).accepting, &a.accepting * &b.accepting);
            let meet = counts(&meet_cequal(&m, &n).unwrap(), &x);
            let mixed = &a.accepting * &b.rejecting + &a.rejecting * &b.accepting;
            assert_eq!(meet.accepting, &a.accepting * &b.accepting + &mixed);
            assert_eq!(meet.rejecting, &a.rejecting * &b.rejecting + &mixed);
        }
    }

    #[test]
    fn gap_ring_laws() {
        let shape = NfaShape { max_states: 4, ..NfaShape::default() };
        for (m, n, x) in pair_samples(23, 150, 3, &shape) {
            let (gm, gn) = (counts(&m, &x).gap(), counts(&n, &x).gap());
            assert_eq!(counts(&gap_sum(&m, &n).unwrap(), &x).gap(), &gm + &gn);
            assert_eq!(counts(&gap_product(&m, &n).unwrap(), &x).gap(), &gm * &gn);
            let (am, an) = (counts(&m, &x).accepting, counts(&n, &x).accepting);
            let diff = counts(&gap_of_difference(&m, &n).unwrap(), &x).gap();
            assert_eq!(diff, num_bigint::BigInt::from(am) - num_bigint::BigInt::from(an));
        }
    }

    #[test]
    fn squares() {
        for (m, x) in samples(24, 300, 5) {
            let g = counts(&m, &x).gap();
            let sq = square_gap(&m);
            assert_eq!(counts(&sq, &x).gap(), &g * &g);
            assert!(sq.num_states() <= m.num_states().pow(2) + 2);
        }
        assert_eq!(counts(&square_gap(&fixed(1, 3)), "01").gap(), 4.into());
    }

    #[test]
    fn meet_worked_example() {
        let p = meet_cequal(&fixed(2, 1), &fixed(3, 2)).unwrap();
        let c = counts(&p, "10");
        assert_eq!((c.accepting, c.rejecting), (BigUint::from(13u32), BigUint::from(9u32)));
        assert_eq!(counts(&meet_cequal(&fixed(1, 0), &fixed(1, 0)).unwrap(), "").accepting, 1u32.into());
    }

    #[test]
    fn gapwise_complement() {
        for (m, x) in samples(25, 200, 5) {
            let c = counts(&m, &x);
            let n = counts(&complement_gapwise(&m), &x);
            assert_eq!(n.accepting, &c.rejecting + 1u32);
            assert_eq!(n.rejecting, c.accepting);
            assert_eq!(n.gap(), 1 - c.gap());
        }
    }

    #[test]
    fn worked_gaps() {
        let three = fixed(3, 0);
        let minus_two = fixed(0, 2);
        assert_eq!(counts(&gap_product(&three, &minus_two).unwrap(), "1").gap(), (-6).into());
        assert_eq!(counts(&gap_product(&three, &fixed(1, 1)).unwrap(), "1").gap(), 0.into());
        assert!(matches!(disjoint_sum(&three, &constant(&crate::Alphabet::of("a").unwrap(), Verdict::Accept)), Err(Error::AlphabetMismatch)));
    }
}

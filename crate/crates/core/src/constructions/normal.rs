use crate::error::{Error, Result};
use crate::machines::{explore, Nfa, Symbol, Verdict};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Lane {
    Live(usize),
    Carry(Verdict),
    Final(Verdict),
    Dead,
}

/// Postpones every halt to `◁`. Accepting, rejecting and improper counts are
/// all preserved; a path that halts early is carried along until `◁`, and a
/// dead branch becomes a live sink that is still running after `◁`.
pub fn complete_paths(m: &Nfa) -> Nfa {
    let start = match m.verdict(m.start()) {
        Some(v) => Lane::Carry(v),
        None => Lane::Live(m.start()),
    };
    explore(
        m.alphabet(),
        start,
        |k| match k {
            Lane::Final(v) => Some(*v),
            _ => None,
        },
        |k, s| {
            let end = s == Symbol::RightEnd;
            match *k {
                Lane::Live(q) => {
                    let succ = m.successors_on(q, s);
                    if succ.is_empty() {
                        return if end { vec![] } else { vec![(Lane::Dead, 1)] };
                    }
                    succ.iter()
                        .map(|&p| {
                            let lane = match (m.verdict(p), end) {
                                (Some(v), false) => Lane::Carry(v),
                                (Some(v), true) => Lane::Final(v),
                                (None, false) => Lane::Live(p),
                                (None, true) => Lane::Dead,
                            };
                            (lane, 1)
                        })
                        .collect()
                }
                Lane::Carry(v) if end => vec![(Lane::Final(v), 1)],
                Lane::Carry(v) => vec![(Lane::Carry(v), 1)],
                Lane::Dead if end => vec![],
                Lane::Dead => vec![(Lane::Dead, 1)],
                Lane::Final(_) => unreachable!("halting states are not expanded"),
            }
        },
    )
}

/// A machine in branching normal form with its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    pub machine: Nfa,
    pub degree: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Padded {
    Live(usize),
    // accepted early, waiting for ◁
    Carry,
    // every descendant rejects: rejected early, dead branch, or padding
    Sink,
    Accept,
    Reject,
}

/// Branching normal form of degree `max(2, max branching)`. See [`with_degree`].
pub fn branching_normal_form(m: &Nfa) -> NormalFormResult {
    with_degree(m, m.max_branching().max(2)).expect("degree covers the branching")
}

/// Branching normal form of degree `c`: every live state has exactly `c`
/// successors on every symbol and halting happens exactly at `◁`, so every
/// input has `c^{|x|+2}` paths, none improper. Accepting counts are preserved;
/// every padding path rejects.
pub fn with_degree(m: &Nfa, c: usize) -> Result<NormalFormResult> {
    if c < m.max_branching().max(2) {
        return Err(Error::NotNormalForm(format!("degree {c} is below the branching {}", m.max_branching())));
    }
    let start = match m.verdict(m.start()) {
        Some(Verdict::Accept) => Padded::Carry,
        Some(Verdict::Reject) => Padded::Sink,
        None => Padded::Live(m.start()),
    };
    let machine = explore(
        m.alphabet(),
        start,
        |k| match k {
            Padded::Accept => Some(Verdict::Accept),
            Padded::Reject => Some(Verdict::Reject),
            _ => None,
        },
        |k, s| {
            let end = s == Symbol::RightEnd;
            let mut out: Vec<(Padded, usize)> = match *k {
                Padded::Live(q) => m
                    .successors_on(q, s)
                    .iter()
                    .map(|&p| {
                        let next = match (m.verdict(p), end) {
                            (Some(Verdict::Accept), false) => Padded::Carry,
                            (Some(Verdict::Accept), true) => Padded::Accept,
                            (None, false) => Padded::Live(p),
                            (_, false) => Padded::Sink,
                            (_, true) => Padded::Reject,
                        };
                        (next, 1)
                    })
                    .collect(),
                Padded::Carry => vec![(if end { Padded::Accept } else { Padded::Carry }, 1)],
                Padded::Sink => vec![],
                Padded::Accept | Padded::Reject => unreachable!("halting states are not expanded"),
            };
            let filled: usize = out.iter().map(|(_, k)| k).sum();
            out.push((if end { Padded::Reject } else { Padded::Sink }, c - filled));
            out
        },
    );
    Ok(NormalFormResult { machine, degree: c })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Twin {
    Start,
    X(usize),
    Y(usize),
}

/// Normal form of degree `2c` whose gap is `2^{|x|+2} · gap(g, x)`.
///
/// One lane runs the normal form of `g`, the other the flipped normal form of
/// `flip g`; every step after `▷` doubles both lanes. The resulting acceptance
/// probability under uniform branching is `1/2 + gap(g,x) / (2 c^{|x|+2})`, so
/// it equals `1/2` exactly when the gap vanishes.
pub fn gap_normal_form(g: &Nfa) -> NormalFormResult {
    let c = g.max_branching().max(2);
    let nx = with_degree(g, c).expect("degree covers the branching").machine;
    let ny = with_degree(&g.flipped(), c).expect("degree covers the branching").machine;
    let machine = explore(
        g.alphabet(),
        Twin::Start,
        |k| match *k {
            Twin::Start => None,
            Twin::X(p) => nx.verdict(p),
            Twin::Y(p) => ny.verdict(p).map(Verdict::flipped),
        },
        |k, s| match *k {
            Twin::Start => {
                let xs = nx.successors_on(nx.start(), s).iter().map(|&p| (Twin::X(p), 1));
                let ys = ny.successors_on(ny.start(), s).iter().map(|&p| (Twin::Y(p), 1));
                xs.chain(ys).collect()
            }
            Twin::X(q) => nx.successors_on(q, s).iter().map(|&p| (Twin::X(p), 2)).collect(),
            Twin::Y(q) => ny.successors_on(q, s).iter().map(|&p| (Twin::Y(p), 2)).collect(),
        },
    );
    NormalFormResult { machine, degree: 2 * c }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::testing::{binary, samples};
    use crate::machines::PathCounts;
    use crate::semantics::count_paths;
    use num_bigint::{BigInt, BigUint};

    #[test]
    fn completion_preserves_all_counts() {
        for (m, x) in samples(11, 300, 5) {
            let done = complete_paths(&m);
            assert_eq!(count_paths(&done, &x).unwrap(), count_paths(&m, &x).unwrap());
            for q in 0..done.num_states() {
                for s in 0..done.alphabet().right_end() {
                    assert!(done.successors(q, s).iter().all(|&p| !done.is_halting(p)));
                }
            }
        }
    }

    #[test]
    fn normal_form_contract() {
        for (m, x) in samples(12, 300, 4) {
            let nf = branching_normal_form(&m);
            assert_eq!(nf.machine.normal_form_degree(), Ok(nf.degree));
            let before = count_paths(&m, &x).unwrap();
            let after = count_paths(&nf.machine, &x).unwrap();
            assert_eq!(after.accepting, before.accepting);
            assert_eq!(after.improper, BigUint::from(0u32));
            assert_eq!(after.total(), BigUint::from(nf.degree).pow(x.len() as u32 + 2));
            assert!(nf.machine.num_states() <= 3 * m.num_states() + nf.degree + 2);
        }
    }

    #[test]
    fn already_normal_machine_keeps_counts() {
        for (m, x) in samples(13, 50, 4) {
            let once = branching_normal_form(&m);
            let twice = branching_normal_form(&once.machine);
            assert_eq!(twice.degree, once.degree);
            assert_eq!(count_paths(&twice.machine, &x).unwrap(), count_paths(&once.machine, &x).unwrap());
        }
    }

    #[test]
    fn degree_below_branching_is_refused() {
        let m = crate::machines::Nfa::from_parts(binary(), 3, 0, [1], [2], [
            (0, Symbol::LeftEnd, 1),
            (0, Symbol::LeftEnd, 2),
        ])
        .unwrap();
        assert!(with_degree(&m, 1).is_err());
        let nf = with_degree(&m, 5).unwrap();
        assert_eq!(count_paths(&nf.machine, "").unwrap(), PathCounts::new(1, 24, 0));
    }

    #[test]
    fn gap_normal_form_scales_the_gap() {
        for (m, x) in samples(14, 200, 4) {
            let nf = gap_normal_form(&m);
            assert_eq!(nf.machine.normal_form_degree(), Ok(nf.degree));
            let scale = BigInt::from(2u32).pow(x.len() as u32 + 2);
            assert_eq!(count_paths(&nf.machine, &x).unwrap().gap(), scale * count_paths(&m, &x).unwrap().gap());
        }
    }
}

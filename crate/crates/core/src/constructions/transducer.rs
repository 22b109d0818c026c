use crate::error::{Error, Result};
use crate::machines::{explore, Alphabet, Dft, Nfa, Symbol, Verdict};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Status {
    // sign bit not yet emitted
    Pre,
    // no 1 read after the sign yet (one path)
    Low(bool),
    // one of the paths counting the value read so far
    High(bool),
    // negative value in counting mode, never accepts
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Run(usize, Status),
    Halt(Verdict),
}

/// Feeds `bits` to one path in status `s`, returning the resulting statuses
/// with multiplicities. A path in `Low` on `1` spawns a `High` path; every
/// `High` path doubles on each bit, so `High` counts track the binary value.
fn feed(s: Status, bits: &str) -> Vec<(Status, usize)> {
    let mut low: Option<(bool, usize)> = None;
    let mut high = 0usize;
    let mut sign = None;
    match s {
        Status::Pre => {}
        Status::Low(p) => {
            sign = Some(p);
            low = Some((p, 1));
        }
        Status::High(p) => {
            sign = Some(p);
            high = 1;
        }
        Status::Negative => return vec![(Status::Negative, 1)],
    }
    for b in bits.chars() {
        match sign {
            None => {
                let p = b == '1';
                sign = Some(p);
                low = Some((p, 1));
            }
            Some(_) => {
                high *= 2;
                if b == '1' && low.is_some() {
                    high += 1;
                }
            }
        }
    }
    let Some(p) = sign else { return vec![(Status::Pre, 1)] };
    let mut out = Vec::new();
    if let Some((_, k)) = low {
        out.push((Status::Low(p), k));
    }
    if high > 0 {
        out.push((Status::High(p), high));
    }
    out
}

fn binary_outputs(t: &Dft) -> Result<()> {
    match t.output_alphabet().into_iter().find(|&c| c != '0' && c != '1') {
        Some(c) => Err(Error::OutputAlphabet(c)),
        None => Ok(()),
    }
}

fn compile(t: &Dft, signed: bool, verdicts: impl Fn(Status) -> Vec<Verdict>) -> Result<Nfa> {
    binary_outputs(t)?;
    Ok(explore(
        t.alphabet(),
        Key::Run(t.start(), Status::Pre),
        |k| match *k {
            Key::Halt(v) => Some(v),
            Key::Run(..) => None,
        },
        |k, s| {
            let Key::Run(q, status) = *k else { unreachable!("halting keys are not expanded") };
            let Some((p, out)) = t.alphabet().index(s).and_then(|i| t.step(q, i)) else { return vec![] };
            let mut next = feed(status, out);
            if !signed && next.iter().any(|(st, _)| matches!(st, Status::Low(false) | Status::High(false))) {
                next = vec![(Status::Negative, 1)];
            }
            if s != Symbol::RightEnd {
                return next.into_iter().map(|(st, m)| (Key::Run(p, st), m)).collect();
            }
            next.into_iter()
                .flat_map(|(st, m)| verdicts(st).into_iter().map(move |v| (Key::Halt(v), m)))
                .collect()
        },
    ))
}

/// 1nfa with exactly `f(x)` accepting paths, where `t` writes `trans(f(x))`
/// with `f(x) ≥ 0`. The leading sign bit is skipped; an empty output rejects,
/// and so does a negative code. At most `sc(T)(2^E + 3) + 2^E + 1` states for
/// per-step emissions of length at most `E`.
pub fn counter_from_transducer(t: &Dft) -> Result<Nfa> {
    compile(t, false, |s| match s {
        Status::High(true) => vec![Verdict::Accept],
        _ => vec![Verdict::Reject],
    })
}

/// Copies every letter to the output and emits nothing on the endmarkers.
pub fn identity_transducer(alphabet: &Alphabet) -> Dft {
    let edges = alphabet.tape_symbols().map(|s| {
        let out = match s {
            Symbol::Letter(c) => c.to_string(),
            _ => String::new(),
        };
        (0, s, 0, out)
    });
    Dft::from_parts(alphabet.clone(), 1, 0, edges).expect("one state covers every symbol")
}

/// 1nfa with gap `f(x)` for signed `f` written as `trans(f(x))`. Paths that
/// carry no value end in one accept and one reject.
pub fn gap_from_transducer(t: &Dft) -> Result<Nfa> {
    compile(t, true, |s| match s {
        Status::High(true) => vec![Verdict::Accept],
        Status::High(false) => vec![Verdict::Reject],
        Status::Pre | Status::Low(_) | Status::Negative => vec![Verdict::Accept, Verdict::Reject],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::{encode_trans, trans_value};
    use crate::machines::random::random_dft;
    use crate::machines::Alphabet;
    use crate::semantics::{count_paths, transduce};
    use num_bigint::{BigInt, BigUint};
    use num_traits::Signed;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn identity() -> Dft {
        identity_transducer(&Alphabet::of("01").unwrap())
    }

    fn emitting(code: &str) -> Dft {
        let a = Alphabet::of("a").unwrap();
        let edges = vec![
            (0, Symbol::LeftEnd, 0, code.to_string()),
            (0, Symbol::Letter('a'), 0, String::new()),
            (0, Symbol::RightEnd, 0, String::new()),
        ];
        Dft::from_parts(a, 1, 0, edges).unwrap()
    }

    #[test]
    fn worked_codes() {
        let acc = |code: &str| count_paths(&counter_from_transducer(&emitting(code)).unwrap(), "a").unwrap().accepting;
        assert_eq!(acc(""), BigUint::from(0u32));
        assert_eq!(acc("110"), BigUint::from(2u32));
        assert_eq!(acc(&encode_trans(&BigInt::from(3))), BigUint::from(3u32));
        let gap = |code: &str| count_paths(&gap_from_transducer(&emitting(code)).unwrap(), "aa").unwrap().gap();
        assert_eq!(gap(""), BigInt::from(0));
        assert_eq!(gap("011"), BigInt::from(-3));
        assert_eq!(gap("1"), BigInt::from(0));
    }

    #[test]
    fn identity_transducer_counts_its_input() {
        let counter = counter_from_transducer(&identity()).unwrap();
        let gap = gap_from_transducer(&identity()).unwrap();
        let a = Alphabet::of("01").unwrap();
        for w in a.strings_up_to(6) {
            let x = format!("1{w}");
            let v = trans_value(&x).unwrap();
            assert_eq!(BigInt::from(count_paths(&counter, &x).unwrap().accepting), v);
            assert_eq!(count_paths(&gap, &x).unwrap().gap(), v);
            let neg = format!("0{w}");
            assert_eq!(count_paths(&gap, &neg).unwrap().gap(), trans_value(&neg).unwrap());
        }
    }

    #[test]
    fn random_transducers() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = Alphabet::of("ab").unwrap();
        for _ in 0..100 {
            let t = random_dft(&mut rng, a.clone(), 3, &['0', '1'], 2);
            let counter = counter_from_transducer(&t).unwrap();
            let gap = gap_from_transducer(&t).unwrap();
            let bound = t.num_states() * ((1 << t.max_emission()) + 3) + (1 << t.max_emission()) + 1;
            assert!(counter.num_states() <= bound);
            for x in a.strings_up_to(3) {
                let v = trans_value(&transduce(&t, &x).unwrap()).unwrap();
                assert_eq!(count_paths(&gap, &x).unwrap().gap(), v);
                if !v.is_negative() {
                    assert_eq!(BigInt::from(count_paths(&counter, &x).unwrap().accepting), v);
                }
            }
        }
    }

    #[test]
    fn non_binary_output_is_refused() {
        assert_eq!(counter_from_transducer(&emitting("12")), Err(Error::OutputAlphabet('2')));
    }
}

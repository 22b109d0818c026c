//! Frozen values worked out by hand from the defining formulas.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use counting_automata::analysis::{funop_apply, FunOp};
use counting_automata::constructions::*;
use counting_automata::encodings::*;
use counting_automata::families::{Class, Family};
use counting_automata::machines::format::parse_machine;
use counting_automata::machines::{stack_state_complexity, state_complexity, Alphabet, Nfa, Symbol};
use counting_automata::semantics::*;
use counting_automata::{Error, PathCounts, Verdict};

fn nfa(text: &str) -> Nfa {
    parse_machine(text).unwrap().as_nfa().unwrap().clone()
}

/// Branches `▷` into `a` accepting and `r` rejecting halts.
fn counts(alphabet: &str, a: usize, r: usize) -> Nfa {
    let alpha = Alphabet::of(alphabet).unwrap();
    let n = 1 + a + r;
    let mut t = vec![];
    for q in 1..n {
        t.push((0, Symbol::LeftEnd, q));
    }
    Nfa::from_parts(alpha, n, 0, 1..=a, a + 1..n, t).unwrap()
}

#[test]
fn codes() {
    assert_eq!(encode_trans(&BigInt::from(0)), "");
    assert_eq!(encode_trans(&BigInt::from(5)), "1101");
    assert_eq!(encode_trans(&BigInt::from(-3)), "011");
    assert!(matches!(decode_trans("1"), Err(Error::MalformedCode(_))));
    assert_eq!(bracket_encode(&[2, 1]).unwrap(), "11010");
    assert_eq!(bracket_encode(&[1]).unwrap(), "10");
    assert_eq!(padded_encode(&[1, 2], 2, 2).unwrap(), "10011");
    assert_eq!(padded_encode(&[0], 3, 3).unwrap(), "000");
    assert_eq!(bitwise_dot("1101", "1011").unwrap(), 2);
}

#[test]
fn counting_examples() {
    let dfa = nfa("kind dfa\nalphabet 0 1\nstates 2\nstart 0\naccept 1\ntrans 0 LEND 0\ntrans 0 0 0\ntrans 0 1 0\ntrans 0 REND 1\n");
    assert_eq!(count_paths(&dfa, "01").unwrap(), PathCounts::new(1, 0, 0));
    assert_eq!(enumerate_paths(&dfa, "0110", 10).unwrap().len(), 1);

    let lp = Family::Lparity.build_machine(2).unwrap();
    assert_eq!(count_paths(lp.as_nfa().unwrap(), "0$1#1$1").unwrap().accepting, BigUint::from(1u32));
    let lsp = Family::Lsp.build_machine(1).unwrap();
    assert_eq!(gap_value(lsp.as_nfa().unwrap(), "00#0").unwrap(), BigInt::from(1));

    let nf = with_degree(&dfa, 2).unwrap();
    assert_eq!(enumerate_paths(&nf.machine, "01", 100).unwrap().len(), 16);
}

#[test]
fn sizes() {
    let four = counts("a", 2, 1);
    assert_eq!(state_complexity(&four.into()), 4);
    let d = parse_machine(
        "kind dpda\nalphabet a\nstates 3\nstack Z a\nbottom Z\npushsize 1\nstart 0\naccept 1\nreject 2\ntrans 0 LEND Z 0 Z\ntrans 0 REND Z 1 Z\n",
    )
    .unwrap();
    assert_eq!(stack_state_complexity(d.as_dpda().unwrap()), BigUint::from(9u32));
    let ldot = Family::Ldot.build_machine(2).unwrap();
    assert_eq!(stack_state_complexity(ldot.as_dpda().unwrap()), BigUint::from(155u32));
}

#[test]
fn probabilistic_examples() {
    let fair = parse_machine(
        "kind pfa\nalphabet a\nstates 3\ninit 0:1\naccept 1\nreject 2\nmatrix LEND 0 0 1\nmatrix a 0 0 1\nmatrix REND 0 1 1/2\nmatrix REND 0 2 1/2\nmatrix LEND 1 1 1\nmatrix a 1 1 1\nmatrix REND 1 1 1\nmatrix LEND 2 2 1\nmatrix a 2 2 1\nmatrix REND 2 2 1\n",
    )
    .unwrap();
    let p = pfa_probabilities(fair.as_pfa().unwrap(), "aaa").unwrap();
    assert_eq!(p.accept, BigRational::new(1.into(), 2.into()));
    let all = nfa_to_pfa(&branching_normal_form(&constant(&Alphabet::of("a").unwrap(), Verdict::Accept))).unwrap();
    // one accepting path among 2^4, padding paths reject
    assert_eq!(pfa_probabilities(&all, "aa").unwrap().accept, BigRational::new(1.into(), 16.into()));
}

#[test]
fn construction_examples() {
    // (acc, rej) = (2,1) and (3,2)
    let (m, n) = (counts("a", 2, 1), counts("a", 3, 2));
    let p = count_paths(&meet_cequal(&m, &n).unwrap(), "a").unwrap();
    assert_eq!((p.accepting, p.rejecting), (BigUint::from(13u32), BigUint::from(9u32)));

    // gaps 3 and -2
    let (g3, gm2) = (counts("a", 3, 0), counts("a", 0, 2));
    assert_eq!(gap_value(&gap_product(&g3, &gm2).unwrap(), "aa").unwrap(), BigInt::from(-6));
    assert_eq!(gap_value(&square_gap(&gm2), "").unwrap(), BigInt::from(4));

    let one = counts("a", 1, 0);
    assert_eq!(gap_value(&complement_gapwise(&one), "a").unwrap(), BigInt::from(0));
    let c = count_paths(&complement_gapwise(&m), "").unwrap();
    assert_eq!(c.accepting, count_paths(&m, "").unwrap().rejecting + 1u32);

    assert_eq!(gap_value(&split_rejecting(&counts("a", 1, 4)), "a").unwrap(), BigInt::from(1));
}

fn emitting(code: &str) -> counting_automata::machines::Dft {
    let text = format!(
        "kind dft\nalphabet a\nstates 1\nstart 0\ntrans 0 LEND 0 {}\ntrans 0 a 0 EPS\ntrans 0 REND 0 EPS\n",
        if code.is_empty() { "EPS" } else { code }
    );
    parse_machine(&text).unwrap().as_dft().unwrap().clone()
}

#[test]
fn transducer_examples() {
    assert_eq!(transduce(&emitting("111"), "aaa").unwrap(), encode_trans(&BigInt::from(3)));
    for (code, acc) in [("", 0u32), ("110", 2), ("111", 3)] {
        let m = counter_from_transducer(&emitting(code)).unwrap();
        assert_eq!(count_paths(&m, "aa").unwrap().accepting, BigUint::from(acc));
    }
    let g = gap_from_transducer(&emitting("011")).unwrap();
    assert_eq!(gap_value(&g, "a").unwrap(), BigInt::from(-3));
    let bad = parse_machine("kind dft\nalphabet a\nstates 1\nstart 0\ntrans 0 LEND 0 2\ntrans 0 a 0 EPS\ntrans 0 REND 0 EPS\n")
        .unwrap();
    assert!(matches!(counter_from_transducer(bad.as_dft().unwrap()), Err(Error::OutputAlphabet('2'))));
}

#[test]
fn family_examples() {
    assert_eq!(Family::Lsp.classify(2, "00#0"), Class::Positive);
    assert_eq!(Family::Lsp.classify(2, "0#0"), Class::Negative);
    assert_eq!(Family::Lsp.classify(2, "01"), Class::Invalid);
    assert_eq!(Family::LN.enumerate(2, usize::MAX).count(), 625);
    let e = Family::Example31.build_machine(3).unwrap();
    // [1][2]#[2]
    let x = format!("{}#{}", bracket_encode(&[1, 2]).unwrap(), bracket_encode(&[2]).unwrap());
    assert_eq!(count_paths(e.as_nfa().unwrap(), &x).unwrap().accepting, BigUint::from(1u32));
    assert_eq!(Family::LU.instance_length(3), Some(2 * 3 * 4 - 1));
    assert_eq!(Family::Lparity.instance_length(4), Some(2 * 4 * 3 - 1));
}

#[test]
fn funop_examples() {
    let ap = |op, a: i64, b: i64| funop_apply(op, &a.into(), Some(&b.into())).unwrap();
    assert_eq!(ap(FunOp::IntDiv, 7, 2), BigInt::from(3));
    assert_eq!(ap(FunOp::ProperSub, 3, 5), BigInt::from(0));
    assert_eq!(ap(FunOp::Max, 2, 5), BigInt::from(5));
}

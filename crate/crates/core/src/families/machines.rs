//! Witness machines for the catalog families.

use crate::constructions::{constant, disjoint_sum};
use crate::machines::{explore, Alphabet, Dpda, Nfa, Symbol, Verdict};

use super::instances::floor_log2;

fn tri() -> Alphabet {
    Alphabet::of("01#").expect("static alphabet")
}

fn sep() -> Alphabet {
    Alphabet::of("01$#").expect("static alphabet")
}

/// Gap machine for `L_sp`: on `x#y` the gap is `#0(x) - #0(y)`.
///
/// A `0` in the first block spawns one accepting path, a `0` in the second one
/// a rejecting path, and `◁` ends the main path in one accept and one reject.
pub fn lsp() -> Nfa {
    const X: usize = 0;
    const Y: usize = 1;
    const ACC: usize = 2;
    const REJ: usize = 3;
    let l = |c| Symbol::Letter(c);
    Nfa::from_parts(tri(), 4, X, [ACC], [REJ], [
        (X, Symbol::LeftEnd, X),
        (X, l('0'), X),
        (X, l('0'), ACC),
        (X, l('1'), X),
        (X, l('#'), Y),
        (Y, l('0'), Y),
        (Y, l('0'), REJ),
        (Y, l('1'), Y),
        (Y, Symbol::RightEnd, ACC),
        (Y, Symbol::RightEnd, REJ),
    ])
    .expect("static machine")
}

/// `L_sp` machine with one extra rejecting path: gap 0 on positive instances
/// and -1 on negative ones.
pub fn lsp_cequal() -> Nfa {
    disjoint_sum(&lsp(), &constant(&tri(), Verdict::Reject)).expect("same alphabet")
}

fn halt(ok: bool) -> Verdict {
    if ok {
        Verdict::Accept
    } else {
        Verdict::Reject
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Lu {
    Start,
    Run { e: usize, v_side: bool, j: usize, pos: usize, ones: usize, stored: Option<usize>, differs: Option<bool> },
    Halt(Verdict),
}

/// Guesses a field `e`, counts its ones in `u` and in `v` and accepts iff they
/// differ: one accepting path per differing entry.
pub fn lu(n: usize) -> Nfa {
    explore(
        &tri(),
        Lu::Start,
        |k| match k {
            Lu::Halt(v) => Some(*v),
            _ => None,
        },
        |k, s| {
            let Lu::Run { e, v_side, j, pos, ones, stored, differs } = *k else {
                return match s {
                    Symbol::LeftEnd => (1..=n)
                        .map(|e| (Lu::Run { e, v_side: false, j: 1, pos: 0, ones: 0, stored: None, differs: None }, 1))
                        .collect(),
                    _ => vec![],
                };
            };
            // leaving field j: remember or compare the guessed entry
            let close = |v_side: bool| {
                if j != e {
                    (stored, differs)
                } else if v_side {
                    (None, Some(Some(ones) != stored))
                } else {
                    (Some(ones), differs)
                }
            };
            let run = |v_side, j, pos, ones, stored, differs| vec![(Lu::Run { e, v_side, j, pos, ones, stored, differs }, 1)];
            match s {
                Symbol::Letter(c @ ('0' | '1')) if pos < n => {
                    let ones = if j == e { ones + usize::from(c == '1') } else { 0 };
                    run(v_side, j, pos + 1, ones, stored, differs)
                }
                Symbol::Letter('0') if pos == n && j < n => {
                    let (stored, differs) = close(v_side);
                    run(v_side, j + 1, 0, 0, stored, differs)
                }
                Symbol::Letter('#') if pos == n && j == n && !v_side => {
                    let (stored, differs) = close(false);
                    run(true, 1, 0, 0, stored, differs)
                }
                Symbol::RightEnd if pos == n && j == n && v_side => {
                    let (_, differs) = close(true);
                    vec![(Lu::Halt(halt(differs == Some(true))), 1)]
                }
                _ => vec![],
            }
        },
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Ln {
    Start,
    Run { i: usize, from_v: bool, v_side: bool, pos: usize, cand: bool, in_u: bool, in_v: bool },
    Halt(Verdict),
}

/// Guesses a value `i ∈ [0, n²]` and a side, then checks deterministically
/// that `i` occurs on that side only. A field `1^k 0^{m-k}` equals `i ≥ 1`
/// iff its `i`-th bit is 1 and its `(i+1)`-th bit (if any) is 0. Accepting
/// paths number `|Set(u) Δ Set(v)|`.
pub fn ln(n: usize) -> Nfa {
    let m = n * n;
    explore(
        &tri(),
        Ln::Start,
        |k| match k {
            Ln::Halt(v) => Some(*v),
            _ => None,
        },
        |k, s| {
            let Ln::Run { i, from_v, v_side, pos, cand, in_u, in_v } = *k else {
                return match s {
                    Symbol::LeftEnd => (0..=m)
                        .flat_map(|i| {
                            [false, true].map(|from_v| {
                                (Ln::Run { i, from_v, v_side: false, pos: 0, cand: false, in_u: false, in_v: false }, 1)
                            })
                        })
                        .collect(),
                    _ => vec![],
                };
            };
            let run = |v_side, pos, cand, in_u, in_v| vec![(Ln::Run { i, from_v, v_side, pos, cand, in_u, in_v }, 1)];
            match s {
                Symbol::Letter(c @ ('0' | '1')) if pos < m => {
                    let p = pos + 1;
                    let one = c == '1';
                    let mut hit = false;
                    let mut cand = cand;
                    if i == 0 && p == 1 {
                        hit = !one;
                    } else if p == i {
                        cand = one;
                        hit = one && i == m;
                    } else if i >= 1 && p == i + 1 {
                        hit = cand && !one;
                    }
                    let (in_u, in_v) = if v_side { (in_u, in_v || hit) } else { (in_u || hit, in_v) };
                    run(v_side, p, cand, in_u, in_v)
                }
                Symbol::Letter('0') if pos == m => run(v_side, 0, false, in_u, in_v),
                Symbol::Letter('#') if pos == m && !v_side => run(true, 0, false, in_u, in_v),
                Symbol::RightEnd if pos == m && v_side => {
                    let ok = if from_v { in_v && !in_u } else { in_u && !in_v };
                    vec![(Ln::Halt(halt(ok)), 1)]
                }
                _ => vec![],
            }
        },
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Par {
    Start,
    Run { i: usize, v_side: bool, j: usize, pos: usize, stored: u32, odd: bool },
    Halt(Verdict),
}

/// Guesses a block `i`, stores `u_i` in the state and accepts iff
/// `u_i ⊙ v_i` is odd.
pub fn lparity(n: usize) -> Nfa {
    let w = floor_log2(n);
    explore(
        &sep(),
        Par::Start,
        |k| match k {
            Par::Halt(v) => Some(*v),
            _ => None,
        },
        |k, s| {
            let Par::Run { i, v_side, j, pos, stored, odd } = *k else {
                return match s {
                    Symbol::LeftEnd => (1..=n)
                        .map(|i| (Par::Run { i, v_side: false, j: 1, pos: 0, stored: 0, odd: false }, 1))
                        .collect(),
                    _ => vec![],
                };
            };
            let run = |v_side, j, pos, stored, odd| vec![(Par::Run { i, v_side, j, pos, stored, odd }, 1)];
            match s {
                Symbol::Letter(c @ ('0' | '1')) if pos < w => {
                    let bit = u32::from(c == '1');
                    let (mut stored, mut odd) = (stored, odd);
                    if j == i && !v_side {
                        stored = stored * 2 + bit;
                    } else if j == i {
                        odd ^= (bit & (stored >> (w - 1 - pos)) & 1) == 1;
                    }
                    run(v_side, j, pos + 1, stored, odd)
                }
                Symbol::Letter('$') if pos == w && j < n => {
                    let stored = if v_side && j == i { 0 } else { stored };
                    run(v_side, j + 1, 0, stored, odd)
                }
                Symbol::Letter('#') if pos == w && j == n && !v_side => run(true, 1, 0, stored, odd),
                Symbol::RightEnd if pos == w && j == n && v_side => vec![(Par::Halt(halt(odd)), 1)],
                _ => vec![],
            }
        },
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Ex {
    Scan { at_start: bool },
    Count(usize),
    Held(usize),
    Second { v: usize, run: usize, found: bool },
    NoPick,
    Halt(Verdict),
}

/// On `r1#r2` each entry of `r1` may be picked on its own path; the picked
/// value is then looked up in `r2` with a flag, so accepting paths number
/// `|{e : (r1)_e ∈ Set(r2)}|`.
pub fn example31(n: usize) -> Nfa {
    explore(
        &tri(),
        Ex::Scan { at_start: true },
        |k| match k {
            Ex::Halt(v) => Some(*v),
            _ => None,
        },
        |k, s| {
            let one = |k| vec![(k, 1)];
            match (*k, s) {
                (Ex::Scan { .. }, Symbol::LeftEnd) => one(Ex::Scan { at_start: true }),
                (Ex::Scan { at_start: true }, Symbol::Letter('1')) => {
                    vec![(Ex::Count(1), 1), (Ex::Scan { at_start: false }, 1)]
                }
                (Ex::Scan { at_start: false }, Symbol::Letter('1')) => one(Ex::Scan { at_start: false }),
                (Ex::Scan { at_start: false }, Symbol::Letter('0')) => one(Ex::Scan { at_start: true }),
                (Ex::Scan { at_start: true }, Symbol::Letter('#')) => one(Ex::NoPick),
                (Ex::Count(v), Symbol::Letter('1')) if v < n => one(Ex::Count(v + 1)),
                (Ex::Count(v), Symbol::Letter('0')) => one(Ex::Held(v)),
                (Ex::Held(v), Symbol::Letter('0' | '1')) => one(Ex::Held(v)),
                (Ex::Held(v), Symbol::Letter('#')) => one(Ex::Second { v, run: 0, found: false }),
                (Ex::Second { v, run, found }, Symbol::Letter('1')) if run < n => {
                    one(Ex::Second { v, run: run + 1, found })
                }
                (Ex::Second { v, run, found }, Symbol::Letter('0')) if run > 0 => {
                    one(Ex::Second { v, run: 0, found: found || run == v })
                }
                (Ex::Second { run: 0, found, .. }, Symbol::RightEnd) => one(Ex::Halt(halt(found))),
                (Ex::NoPick, Symbol::Letter('0' | '1')) => one(Ex::NoPick),
                (Ex::NoPick, Symbol::RightEnd) => one(Ex::Halt(Verdict::Reject)),
                _ => vec![],
            }
        },
    )
}

/// One-turn deterministic pushdown machine for `u^R#v`.
///
/// `▷` pushes a sentinel `S`; the first block pushes every symbol, so after
/// `#` the stack pops `u` front to back in step with `v`. The parity of
/// `Σ u_i ⊙ v_i` lives in the state and `◁` pops the sentinel. The machine
/// does not depend on `n`.
pub fn ldot() -> Dpda {
    const PUSH: usize = 0;
    const EVEN: usize = 1;
    const ODD: usize = 2;
    const ACC: usize = 3;
    const REJ: usize = 4;
    let l = |c| Some(Symbol::Letter(c));
    let mut rules = vec![(PUSH, Some(Symbol::LeftEnd), 'Z', PUSH, "SZ".to_string())];
    for top in ['S', '0', '1', '$'] {
        for c in ['0', '1', '$'] {
            rules.push((PUSH, l(c), top, PUSH, format!("{c}{top}")));
        }
        rules.push((PUSH, l('#'), top, EVEN, top.to_string()));
    }
    for (q, parity) in [(EVEN, 0u8), (ODD, 1u8)] {
        for a in [0u8, 1] {
            for b in [0u8, 1] {
                let next = if parity ^ (a & b) == 1 { ODD } else { EVEN };
                rules.push((q, l(char::from(b'0' + b)), char::from(b'0' + a), next, String::new()));
            }
        }
        rules.push((q, l('$'), '$', q, String::new()));
        rules.push((q, Some(Symbol::RightEnd), 'S', if parity == 1 { ACC } else { REJ }, String::new()));
    }
    Dpda::from_parts(sep(), 5, vec!['0', '1', '$', 'S', 'Z'], 'Z', 2, PUSH, [ACC], [REJ], rules).expect("static machine")
}

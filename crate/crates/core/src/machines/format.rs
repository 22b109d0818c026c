//! Line-oriented interchange format.
//!
//! ```text
//! # lines starting with '#' are comments
//! machine ends-in-one
//! kind nfa
//! alphabet 0 1
//! states 4
//! start 0
//! accept 2
//! reject 3
//! trans 0 LEND 1
//! trans 1 0 1
//! trans 1 1 1 3
//! trans 1 REND 2
//! end
//! ```
//!
//! `#` is also an ordinary tape symbol, so it only opens a comment as the
//! first non-blank character of a line. A file may hold one bare machine or
//! any number of `machine <name>` … `end` blocks.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Alphabet, Dfa, Dft, Dpda, Machine, Move, Nfa, Pfa, StateId, Symbol, Verdict};
use crate::error::{Error, Result};

const LEND: &str = "LEND";
const REND: &str = "REND";
const EPS: &str = "EPS";

#[derive(Clone, Copy)]
struct Line<'a> {
    no: usize,
    words: &'a [&'a str],
}

fn err(no: usize, message: impl Into<String>) -> Error {
    Error::Parse { line: no, message: message.into() }
}

/// Parses text holding exactly one machine.
pub fn parse_machine(text: &str) -> Result<Machine> {
    let mut all = parse_machines(text)?;
    match all.len() {
        1 => Ok(all.pop().expect("one machine").1),
        0 => Err(err(0, "no machine found")),
        n => Err(err(0, format!("expected one machine, found {n}"))),
    }
}

/// Parses every machine in `text` with its block name (empty for a bare machine).
pub fn parse_machines(text: &str) -> Result<Vec<(String, Machine)>> {
    let tokenized: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(no, l)| (no, l.split_whitespace().collect()))
        .collect();

    let mut out = Vec::new();
    let mut bare: Vec<Line> = Vec::new();
    let mut block: Option<(String, usize, Vec<Line>)> = None;
    for (no, words) in &tokenized {
        let line = Line { no: *no, words };
        match (words[0], &mut block) {
            ("machine", Some(_)) => return Err(err(*no, "nested machine block")),
            ("machine", None) => {
                if !bare.is_empty() {
                    return Err(err(*no, "directives outside a machine block"));
                }
                let name = words.get(1..).map(|w| w.join(" ")).unwrap_or_default();
                if name.is_empty() {
                    return Err(err(*no, "machine block needs a name"));
                }
                block = Some((name, *no, Vec::new()));
            }
            ("end", Some(_)) => {
                let (name, start, lines) = block.take().expect("open block");
                out.push((name, build(&lines, start)?));
            }
            ("end", None) => return Err(err(*no, "end without machine")),
            (_, Some((_, _, lines))) => lines.push(line),
            (_, None) => {
                if !out.is_empty() {
                    return Err(err(*no, "directives outside a machine block"));
                }
                bare.push(line);
            }
        }
    }
    if let Some((_, start, _)) = block {
        return Err(err(start, "machine block is not closed"));
    }
    if !bare.is_empty() {
        out.push((String::new(), build(&bare, bare[0].no)?));
    }
    Ok(out)
}

#[derive(Default)]
struct Header<'a> {
    kind: Option<(usize, &'a str)>,
    alphabet: Option<Alphabet>,
    states: Option<HashMap<String, StateId>>,
    num_states: usize,
    start: Option<(usize, &'a str)>,
    accept: Vec<(usize, &'a str)>,
    reject: Vec<(usize, &'a str)>,
    stack: Option<Vec<char>>,
    bottom: Option<char>,
    pushsize: Option<usize>,
}

fn single_char(no: usize, w: &str) -> Result<char> {
    let mut cs = w.chars();
    match (cs.next(), cs.next()) {
        (Some(c), None) if super::is_symbol_char(c) => Ok(c),
        _ => Err(err(no, format!("{w:?} is not a single visible ASCII symbol"))),
    }
}

fn parse_usize(no: usize, w: &str) -> Result<usize> {
    w.parse().map_err(|_| err(no, format!("{w:?} is not a natural number")))
}

fn parse_rational(no: usize, w: &str) -> Result<BigRational> {
    let bad = || err(no, format!("{w:?} is not a rational p/q"));
    let (p, q) = match w.split_once('/') {
        Some((p, q)) => (p, q),
        None => (w, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl<'a> Header<'a> {
    fn state(&self, no: usize, w: &str) -> Result<StateId> {
        let names = self.states.as_ref().ok_or_else(|| err(no, "states must be declared"))?;
        names.get(w).copied().ok_or_else(|| err(no, format!("unknown state {w:?}")))
    }

    fn alphabet(&self, no: usize) -> Result<&Alphabet> {
        self.alphabet.as_ref().ok_or_else(|| err(no, "alphabet must be declared"))
    }

    fn symbol(&self, no: usize, w: &str) -> Result<Symbol> {
        match w {
            LEND => Ok(Symbol::LeftEnd),
            REND => Ok(Symbol::RightEnd),
            _ => {
                let c = single_char(no, w)?;
                if !self.alphabet(no)?.contains(c) {
                    return Err(err(no, format!("symbol {c:?} is not in the alphabet")));
                }
                Ok(Symbol::Letter(c))
            }
        }
    }

    fn word(no: usize, w: &str) -> Result<String> {
        if w == EPS {
            return Ok(String::new());
        }
        for c in w.chars() {
            if !super::is_symbol_char(c) {
                return Err(err(no, format!("{c:?} is not a visible ASCII symbol")));
            }
        }
        Ok(w.to_string())
    }

    fn start(&self, no: usize) -> Result<StateId> {
        let (l, w) = self.start.ok_or_else(|| err(no, "start state must be declared"))?;
        self.state(l, w)
    }

    fn halting(&self, set: &[(usize, &str)]) -> Result<Vec<StateId>> {
        set.iter().map(|&(l, w)| self.state(l, w)).collect()
    }
}

fn build(lines: &[Line], first: usize) -> Result<Machine> {
    let mut h = Header::default();
    let mut trans = Vec::new();
    let mut init = Vec::new();
    let mut matrix = Vec::new();
    for &line in lines {
        let (no, w) = (line.no, line.words);
        let args = &w[1..];
        let once = |seen: bool| if seen { Err(err(no, format!("duplicate {}", w[0]))) } else { Ok(()) };
        match w[0] {
            "kind" => {
                once(h.kind.is_some())?;
                match args {
                    [k @ ("nfa" | "dfa" | "dft" | "pfa" | "dpda")] => h.kind = Some((no, k)),
                    _ => return Err(err(no, "kind must be one of nfa dfa dft pfa dpda")),
                }
            }
            "alphabet" => {
                once(h.alphabet.is_some())?;
                let cs = args.iter().map(|a| single_char(no, a)).collect::<Result<Vec<_>>>()?;
                h.alphabet = Some(Alphabet::new(cs).map_err(|e| err(no, e.to_string()))?);
            }
            "states" => {
                once(h.states.is_some())?;
                let names: Vec<String> = match args {
                    [] => return Err(err(no, "states needs a count or names")),
                    [n] if n.chars().all(|c| c.is_ascii_digit()) => {
                        (0..parse_usize(no, n)?).map(|i| i.to_string()).collect()
                    }
                    _ => args.iter().map(|s| s.to_string()).collect(),
                };
                let mut map = HashMap::new();
                for (i, name) in names.iter().enumerate() {
                    if map.insert(name.clone(), i).is_some() {
                        return Err(err(no, format!("state {name:?} declared twice")));
                    }
                }
                h.num_states = names.len();
                h.states = Some(map);
            }
            "start" => {
                once(h.start.is_some())?;
                match args {
                    [q] => h.start = Some((no, q)),
                    _ => return Err(err(no, "start takes one state")),
                }
            }
            "accept" => h.accept.extend(args.iter().map(|a| (no, *a))),
            "reject" => h.reject.extend(args.iter().map(|a| (no, *a))),
            "stack" => {
                once(h.stack.is_some())?;
                h.stack = Some(args.iter().map(|a| single_char(no, a)).collect::<Result<_>>()?);
            }
            "bottom" => {
                once(h.bottom.is_some())?;
                match args {
                    [b] => h.bottom = Some(single_char(no, b)?),
                    _ => return Err(err(no, "bottom takes one symbol")),
                }
            }
            "pushsize" => {
                once(h.pushsize.is_some())?;
                match args {
                    [e] => h.pushsize = Some(parse_usize(no, e)?),
                    _ => return Err(err(no, "pushsize takes one natural number")),
                }
            }
            "trans" => trans.push(line),
            "init" => init.push(line),
            "matrix" => matrix.push(line),
            other => return Err(err(no, format!("unknown directive {other:?}"))),
        }
    }
    let (kind_line, kind) = h.kind.ok_or_else(|| err(first, "kind must be declared"))?;
    let alphabet = h.alphabet(kind_line)?.clone();
    if h.states.is_none() {
        return Err(err(kind_line, "states must be declared"));
    }
    let stray = |ls: &[Line], what: &str| match ls.first() {
        Some(l) => Err(err(l.no, format!("{what} is not allowed in a {kind}"))),
        None => Ok(()),
    };
    let n = h.num_states;
    match kind {
        "nfa" | "dfa" => {
            stray(&init, "init")?;
            stray(&matrix, "matrix")?;
            let mut edges = Vec::new();
            for l in &trans {
                let [q, s, rest @ ..] = &l.words[1..] else {
                    return Err(err(l.no, "trans needs a state and a symbol"));
                };
                let (q, s) = (h.state(l.no, q)?, h.symbol(l.no, s)?);
                for p in rest {
                    edges.push((q, s, h.state(l.no, p)?));
                }
            }
            let nfa = Nfa::from_parts(alphabet, n, h.start(first)?, h.halting(&h.accept)?, h.halting(&h.reject)?, edges)?;
            if kind == "dfa" {
                Ok(Machine::Dfa(Dfa::new(nfa)?))
            } else {
                Ok(Machine::Nfa(nfa))
            }
        }
        "dft" => {
            stray(&init, "init")?;
            stray(&matrix, "matrix")?;
            if let Some(&(l, _)) = h.accept.first().or(h.reject.first()) {
                return Err(err(l, "a transducer has no halting states"));
            }
            let mut edges = Vec::new();
            for l in &trans {
                let [q, s, p, out] = l.words[1..] else {
                    return Err(err(l.no, "trans takes <q> <sym> <q'> <output|EPS>"));
                };
                edges.push((h.state(l.no, q)?, h.symbol(l.no, s)?, h.state(l.no, p)?, Header::word(l.no, out)?));
            }
            Ok(Machine::Dft(Dft::from_parts(alphabet, n, h.start(first)?, edges)?))
        }
        "pfa" => {
            stray(&trans, "trans")?;
            let mut initial = vec![BigRational::zero(); n];
            for l in &init {
                for item in &l.words[1..] {
                    let (q, p) = item.split_once(':').ok_or_else(|| err(l.no, "init entries look like <q>:<p/q>"))?;
                    initial[h.state(l.no, q)?] = parse_rational(l.no, p)?;
                }
            }
            let mut ms = vec![vec![vec![BigRational::zero(); n]; n]; alphabet.tape_size()];
            for l in &matrix {
                let [s, r, c, p] = l.words[1..] else {
                    return Err(err(l.no, "matrix takes <sym> <row> <col> <p/q>"));
                };
                let sym = alphabet.index(h.symbol(l.no, s)?).expect("checked symbol");
                ms[sym][h.state(l.no, r)?][h.state(l.no, c)?] = parse_rational(l.no, p)?;
            }
            Ok(Machine::Pfa(Pfa::new(alphabet, initial, ms, h.halting(&h.accept)?, h.halting(&h.reject)?)?))
        }
        "dpda" => {
            stray(&init, "init")?;
            stray(&matrix, "matrix")?;
            let stack = h.stack.clone().ok_or_else(|| err(kind_line, "stack must be declared"))?;
            let bottom = h.bottom.ok_or_else(|| err(kind_line, "bottom must be declared"))?;
            let e = h.pushsize.ok_or_else(|| err(kind_line, "pushsize must be declared"))?;
            let mut rules = Vec::new();
            for l in &trans {
                let [q, s, top, p, push] = l.words[1..] else {
                    return Err(err(l.no, "trans takes <q> <sym|EPS> <top> <q'> <push|EPS>"));
                };
                let s = if s == EPS { None } else { Some(h.symbol(l.no, s)?) };
                rules.push((h.state(l.no, q)?, s, single_char(l.no, top)?, h.state(l.no, p)?, Header::word(l.no, push)?));
            }
            let start = h.start(first)?;
            Ok(Machine::Dpda(Dpda::from_parts(
                alphabet,
                n,
                stack,
                bottom,
                e,
                start,
                h.halting(&h.accept)?,
                h.halting(&h.reject)?,
                rules,
            )?))
        }
        _ => unreachable!("kind checked when read"),
    }
}

fn sym_token(a: &Alphabet, i: usize) -> String {
    match a.symbol(i) {
        Symbol::LeftEnd => LEND.into(),
        Symbol::RightEnd => REND.into(),
        Symbol::Letter(c) => c.to_string(),
    }
}

fn word_token(w: &str) -> &str {
    if w.is_empty() {
        EPS
    } else {
        w
    }
}

fn rational_token(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn header(out: &mut String, kind: &str, a: &Alphabet, n: usize) {
    let letters: Vec<String> = a.letters().iter().map(char::to_string).collect();
    let _ = writeln!(out, "kind {kind}");
    if letters.is_empty() {
        out.push_str("alphabet\n");
    } else {
        let _ = writeln!(out, "alphabet {}", letters.join(" "));
    }
    let _ = writeln!(out, "states {n}");
}

fn halting_lines(out: &mut String, states: impl Fn(Verdict) -> Vec<StateId>) {
    for (word, v) in [("accept", Verdict::Accept), ("reject", Verdict::Reject)] {
        let qs = states(v);
        if !qs.is_empty() {
            let qs: Vec<String> = qs.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{word} {}", qs.join(" "));
        }
    }
}

/// Canonical text form: states ascending, symbols in declared order.
pub fn serialize_machine(m: &Machine) -> String {
    let mut out = String::new();
    match m {
        Machine::Nfa(_) | Machine::Dfa(_) => {
            let nfa = m.as_nfa().expect("nfa kinds");
            let a = nfa.alphabet();
            header(&mut out, m.kind_name(), a, nfa.num_states());
            let _ = writeln!(out, "start {}", nfa.start());
            halting_lines(&mut out, |v| nfa.states_with(v).collect());
            for q in 0..nfa.num_states() {
                for s in 0..a.tape_size() {
                    let succ = nfa.successors(q, s);
                    if !succ.is_empty() {
                        let ps: Vec<String> = succ.iter().map(usize::to_string).collect();
                        let _ = writeln!(out, "trans {q} {} {}", sym_token(a, s), ps.join(" "));
                    }
                }
            }
        }
        Machine::Dft(t) => {
            let a = t.alphabet();
            header(&mut out, "dft", a, t.num_states());
            let _ = writeln!(out, "start {}", t.start());
            for q in 0..t.num_states() {
                for s in 0..a.tape_size() {
                    if let Some((p, w)) = t.step(q, s) {
                        let _ = writeln!(out, "trans {q} {} {p} {}", sym_token(a, s), word_token(w));
                    }
                }
            }
        }
        Machine::Pfa(p) => {
            let a = p.alphabet();
            header(&mut out, "pfa", a, p.num_states());
            let init: Vec<String> = p
                .initial()
                .iter()
                .enumerate()
                .filter(|(_, r)| !r.is_zero())
                .map(|(q, r)| format!("{q}:{}", rational_token(r)))
                .collect();
            let _ = writeln!(out, "init {}", init.join(" "));
            halting_lines(&mut out, |v| (0..p.num_states()).filter(|&q| p.verdict(q) == Some(v)).collect());
            for s in 0..a.tape_size() {
                for (r, row) in p.matrix(s).iter().enumerate() {
                    for (c, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            let _ = writeln!(out, "matrix {} {r} {c} {}", sym_token(a, s), rational_token(x));
                        }
                    }
                }
            }
        }
        Machine::Dpda(d) => {
            let a = d.alphabet();
            header(&mut out, "dpda", a, d.num_states());
            let stack: Vec<String> = d.stack_alphabet().iter().map(char::to_string).collect();
            let _ = writeln!(out, "stack {}", stack.join(" "));
            let _ = writeln!(out, "bottom {}", d.bottom());
            let _ = writeln!(out, "pushsize {}", d.push_size());
            let _ = writeln!(out, "start {}", d.start());
            halting_lines(&mut out, |v| (0..d.num_states()).filter(|&q| d.verdict(q) == Some(v)).collect());
            let mut rules: Vec<_> = d.rules().collect();
            let stack_pos = |c: char| d.stack_alphabet().iter().position(|&s| s == c);
            rules.sort_by_key(|((q, mv, top), _)| (*q, *mv, stack_pos(*top)));
            for ((q, mv, top), (p, push)) in rules {
                let s = match mv {
                    Move::Read(i) => sym_token(a, *i),
                    Move::Lambda => EPS.into(),
                };
                let _ = writeln!(out, "trans {q} {s} {top} {p} {}", word_token(push));
            }
        }
    }
    out
}

/// Several machines as named blocks.
pub fn serialize_machines<'a>(machines: impl IntoIterator<Item = (&'a str, &'a Machine)>) -> String {
    let mut out = String::new();
    for (name, m) in machines {
        let _ = writeln!(out, "machine {name}");
        out.push_str(&serialize_machine(m));
        out.push_str("end\n");
    }
    out
}

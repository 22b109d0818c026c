//! Machine data model: one-way NFAs/DFAs with endmarkers, deterministic
//! transducers, exact-rational PFAs and deterministic pushdown automata.
//!
//! States are dense ids `0..n`. Tape symbols are indexed with the left
//! endmarker at 0, the declared letters in order, and the right endmarker last.

mod build;
pub mod format;
pub mod random;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use build::explore;

pub type StateId = usize;

/// A symbol on the input tape, endmarkers included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    LeftEnd,
    Letter(char),
    RightEnd,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::LeftEnd => f.write_str("LEND"),
            Symbol::RightEnd => f.write_str("REND"),
            Symbol::Letter(c) => write!(f, "{c}"),
        }
    }
}

/// Input alphabet in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

pub(crate) fn is_symbol_char(c: char) -> bool {
    c.is_ascii_graphic()
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        let mut seen = BTreeSet::new();
        for &c in &letters {
            if !is_symbol_char(c) {
                return Err(Error::InvariantViolation(format!("{c:?} is not a visible ASCII symbol")));
            }
            if !seen.insert(c) {
                return Err(Error::InvariantViolation(format!("symbol {c:?} declared twice")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn of(letters: &str) -> Result<Self> {
        Alphabet::new(letters.chars())
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    /// Number of tape symbols, endmarkers included.
    pub fn tape_size(&self) -> usize {
        self.letters.len() + 2
    }

    pub fn index(&self, sym: Symbol) -> Option<usize> {
        match sym {
            Symbol::LeftEnd => Some(0),
            Symbol::RightEnd => Some(self.letters.len() + 1),
            Symbol::Letter(c) => self.letters.iter().position(|&l| l == c).map(|i| i + 1),
        }
    }

    pub fn symbol(&self, idx: usize) -> Symbol {
        if idx == 0 {
            Symbol::LeftEnd
        } else if idx == self.letters.len() + 1 {
            Symbol::RightEnd
        } else {
            Symbol::Letter(self.letters[idx - 1])
        }
    }

    pub fn right_end(&self) -> usize {
        self.letters.len() + 1
    }

    pub fn tape_symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.tape_size()).map(move |i| self.symbol(i))
    }

    /// Symbol indices of `▷ x ◁`.
    pub fn tape(&self, x: &str) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(x.len() + 2);
        out.push(0);
        for c in x.chars() {
            out.push(self.index(Symbol::Letter(c)).ok_or(Error::Alphabet(c))?);
        }
        out.push(self.right_end());
        Ok(out)
    }

    /// Every string of length at most `max_len`, length-then-lexicographic
    /// in declaration order.
    pub fn strings_up_to(&self, max_len: usize) -> Vec<String> {
        let mut out = vec![String::new()];
        let mut layer = vec![String::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.letters.len());
            for w in &layer {
                for &c in &self.letters {
                    let mut s = w.clone();
                    s.push(c);
                    next.push(s);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Lazily yields every string of length `len` in lexicographic order.
    pub fn words(&self, len: usize) -> Words {
        Words { letters: self.letters.clone(), digits: (!self.letters.is_empty() || len == 0).then(|| vec![0; len]) }
    }

    /// Every string of length exactly `len`.
    pub fn strings_of_len(&self, len: usize) -> Vec<String> {
        let mut layer = vec![String::new()];
        for _ in 0..len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    self.letters.iter().map(move |&c| {
                        let mut s = w.clone();
                        s.push(c);
                        s
                    })
                })
                .collect();
        }
        layer
    }
}

/// Odometer over `Σ^len`; see [`Alphabet::words`].
#[derive(Debug, Clone)]
pub struct Words {
    letters: Vec<char>,
    digits: Option<Vec<usize>>,
}

impl Iterator for Words {
    type Item = String;

    fn next(&mut self) -> Option<String> {
        let digits = self.digits.as_mut()?;
        let word = digits.iter().map(|&d| self.letters[d]).collect();
        let mut i = digits.len();
        loop {
            if i == 0 {
                self.digits = None;
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < self.letters.len() {
                break;
            }
            digits[i] = 0;
        }
        Some(word)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Accept,
    Reject,
}

impl Verdict {
    pub fn flipped(self) -> Verdict {
        match self {
            Verdict::Accept => Verdict::Reject,
            Verdict::Reject => Verdict::Accept,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateKind {
    Live,
    Halting(Verdict),
}

impl StateKind {
    pub fn verdict(self) -> Option<Verdict> {
        match self {
            StateKind::Live => None,
            StateKind::Halting(v) => Some(v),
        }
    }
}

fn kinds_from_sets(num_states: usize, accept: &BTreeSet<StateId>, reject: &BTreeSet<StateId>) -> Result<Vec<StateKind>> {
    if let Some(q) = accept.intersection(reject).next() {
        return Err(Error::InvariantViolation(format!("state {q} is both accepting and rejecting")));
    }
    let mut kinds = vec![StateKind::Live; num_states];
    for (set, v) in [(accept, Verdict::Accept), (reject, Verdict::Reject)] {
        for &q in set {
            *kinds
                .get_mut(q)
                .ok_or_else(|| Error::InvariantViolation(format!("halting state {q} out of range")))? = StateKind::Halting(v);
        }
    }
    Ok(kinds)
}

fn check_state(q: StateId, num_states: usize) -> Result<()> {
    if q >= num_states {
        Err(Error::InvariantViolation(format!("state {q} out of range 0..{num_states}")))
    } else {
        Ok(())
    }
}

/// Accepting, rejecting and improper computation-path counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PathCounts {
    pub accepting: BigUint,
    pub rejecting: BigUint,
    pub improper: BigUint,
}

impl PathCounts {
    pub fn new(accepting: u64, rejecting: u64, improper: u64) -> Self {
        PathCounts { accepting: accepting.into(), rejecting: rejecting.into(), improper: improper.into() }
    }

    /// `#M(x) - #M̄(x)`.
    pub fn gap(&self) -> BigInt {
        BigInt::from(self.accepting.clone()) - BigInt::from(self.rejecting.clone())
    }

    pub fn total(&self) -> BigUint {
        &self.accepting + &self.rejecting + &self.improper
    }
}

impl fmt::Display for PathCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "accepting={} rejecting={} improper={}", self.accepting, self.rejecting, self.improper)
    }
}

/// One-way nondeterministic finite automaton with endmarkers and no λ-moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    start: StateId,
    kinds: Vec<StateKind>,
    // delta[q][symbol index], sorted and deduplicated
    delta: Vec<Vec<Vec<StateId>>>,
}

impl Nfa {
    pub fn from_parts<T>(
        alphabet: Alphabet,
        num_states: usize,
        start: StateId,
        accept: impl IntoIterator<Item = StateId>,
        reject: impl IntoIterator<Item = StateId>,
        transitions: T,
    ) -> Result<Self>
    where
        T: IntoIterator<Item = (StateId, Symbol, StateId)>,
    {
        let accept: BTreeSet<_> = accept.into_iter().collect();
        let reject: BTreeSet<_> = reject.into_iter().collect();
        let kinds = kinds_from_sets(num_states, &accept, &reject)?;
        check_state(start, num_states)?;
        let mut delta = vec![vec![Vec::new(); alphabet.tape_size()]; num_states];
        for (q, sym, p) in transitions {
            check_state(q, num_states)?;
            check_state(p, num_states)?;
            let idx = match sym {
                Symbol::Letter(c) => alphabet.index(sym).ok_or(Error::Alphabet(c))?,
                _ => alphabet.index(sym).expect("endmarkers always index"),
            };
            delta[q][idx].push(p);
        }
        Nfa::from_table(alphabet, start, kinds, delta)
    }

    pub(crate) fn from_table(
        alphabet: Alphabet,
        start: StateId,
        kinds: Vec<StateKind>,
        mut delta: Vec<Vec<Vec<StateId>>>,
    ) -> Result<Self> {
        let n = kinds.len();
        check_state(start, n)?;
        for (q, row) in delta.iter_mut().enumerate() {
            for succ in row.iter_mut() {
                succ.sort_unstable();
                succ.dedup();
                if let Some(&p) = succ.last() {
                    check_state(p, n)?;
                    if kinds[q] != StateKind::Live {
                        return Err(Error::InvariantViolation(format!("halting state {q} has outgoing transitions")));
                    }
                }
            }
        }
        Ok(Nfa { alphabet, start, kinds, delta })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.kinds.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn kind(&self, q: StateId) -> StateKind {
        self.kinds[q]
    }

    pub fn verdict(&self, q: StateId) -> Option<Verdict> {
        self.kinds[q].verdict()
    }

    pub fn is_halting(&self, q: StateId) -> bool {
        self.kinds[q] != StateKind::Live
    }

    pub fn states_with(&self, v: Verdict) -> impl Iterator<Item = StateId> + '_ {
        (0..self.num_states()).filter(move |&q| self.verdict(q) == Some(v))
    }

    /// Successors by symbol index.
    pub fn successors(&self, q: StateId, sym: usize) -> &[StateId] {
        &self.delta[q][sym]
    }

    pub fn successors_on(&self, q: StateId, sym: Symbol) -> &[StateId] {
        match self.alphabet.index(sym) {
            Some(i) => &self.delta[q][i],
            None => &[],
        }
    }

    pub fn max_branching(&self) -> usize {
        self.delta.iter().flat_map(|row| row.iter().map(Vec::len)).max().unwrap_or(0)
    }

    pub fn is_deterministic(&self) -> bool {
        self.max_branching() <= 1
    }

    /// Same machine with accepting and rejecting states swapped.
    pub fn flipped(&self) -> Nfa {
        let kinds = self
            .kinds
            .iter()
            .map(|k| match k {
                StateKind::Live => StateKind::Live,
                StateKind::Halting(v) => StateKind::Halting(v.flipped()),
            })
            .collect();
        Nfa { alphabet: self.alphabet.clone(), start: self.start, kinds, delta: self.delta.clone() }
    }

    /// The degree `c` if every live state has exactly `c` successors on every
    /// symbol, successors before `◁` are live and successors on `◁` halt.
    pub fn normal_form_degree(&self) -> Result<usize> {
        let right = self.alphabet.right_end();
        let mut degree = None;
        for q in 0..self.num_states() {
            if self.is_halting(q) {
                if q == self.start {
                    return Err(Error::NotNormalForm("start state halts".into()));
                }
                continue;
            }
            for sym in 0..self.alphabet.tape_size() {
                let succ = &self.delta[q][sym];
                let c = *degree.get_or_insert(succ.len());
                if succ.len() != c {
                    return Err(Error::NotNormalForm(format!(
                        "state {q} on {} has {} successors, expected {c}",
                        self.alphabet.symbol(sym),
                        succ.len()
                    )));
                }
                let want_halting = sym == right;
                if succ.iter().any(|&p| self.is_halting(p) != want_halting) {
                    return Err(Error::NotNormalForm(format!(
                        "state {q} on {} does not halt exactly at the right endmarker",
                        self.alphabet.symbol(sym)
                    )));
                }
            }
        }
        match degree {
            Some(c) if c >= 1 => Ok(c),
            _ => Err(Error::NotNormalForm("no branching".into())),
        }
    }
}

/// A 1nfa whose every transition has at most one successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa(Nfa);

impl Dfa {
    pub fn new(nfa: Nfa) -> Result<Self> {
        if !nfa.is_deterministic() {
            return Err(Error::InvariantViolation("a dfa transition has more than one successor".into()));
        }
        Ok(Dfa(nfa))
    }

    pub fn as_nfa(&self) -> &Nfa {
        &self.0
    }

    pub fn into_nfa(self) -> Nfa {
        self.0
    }
}

/// One-way deterministic finite transducer with a write-once output tape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dft {
    alphabet: Alphabet,
    start: StateId,
    delta: Vec<Vec<Option<(StateId, String)>>>,
}

impl Dft {
    pub fn from_parts<T>(alphabet: Alphabet, num_states: usize, start: StateId, transitions: T) -> Result<Self>
    where
        T: IntoIterator<Item = (StateId, Symbol, StateId, String)>,
    {
        check_state(start, num_states)?;
        let mut delta = vec![vec![None; alphabet.tape_size()]; num_states];
        for (q, sym, p, out) in transitions {
            check_state(q, num_states)?;
            check_state(p, num_states)?;
            if let Some(c) = out.chars().find(|&c| !is_symbol_char(c)) {
                return Err(Error::InvariantViolation(format!("output symbol {c:?} is not visible ASCII")));
            }
            let idx = match sym {
                Symbol::Letter(c) => alphabet.index(sym).ok_or(Error::Alphabet(c))?,
                _ => alphabet.index(sym).expect("endmarker"),
            };
            let slot: &mut Option<(StateId, String)> = &mut delta[q][idx];
            if slot.is_some() {
                return Err(Error::InvariantViolation(format!("dft has two moves for state {q} on {sym}")));
            }
            *slot = Some((p, out));
        }
        Ok(Dft { alphabet, start, delta })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn step(&self, q: StateId, sym: usize) -> Option<(StateId, &str)> {
        self.delta[q][sym].as_ref().map(|(p, out)| (*p, out.as_str()))
    }

    pub fn output_alphabet(&self) -> BTreeSet<char> {
        self.delta.iter().flatten().flatten().flat_map(|(_, out)| out.chars()).collect()
    }

    /// Longest single-step emission.
    pub fn max_emission(&self) -> usize {
        self.delta.iter().flatten().flatten().map(|(_, out)| out.len()).max().unwrap_or(0)
    }
}

/// One-way probabilistic finite automaton with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pfa {
    alphabet: Alphabet,
    initial: Vec<BigRational>,
    // matrices[symbol index][row][col]
    matrices: Vec<Vec<Vec<BigRational>>>,
    kinds: Vec<StateKind>,
}

impl Pfa {
    pub fn new(
        alphabet: Alphabet,
        initial: Vec<BigRational>,
        matrices: Vec<Vec<Vec<BigRational>>>,
        accept: impl IntoIterator<Item = StateId>,
        reject: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        let n = initial.len();
        let kinds = kinds_from_sets(n, &accept.into_iter().collect(), &reject.into_iter().collect())?;
        let stochastic = |row: &[BigRational]| {
            row.len() == n && row.iter().all(|p| !p.is_negative()) && row.iter().sum::<BigRational>().is_one()
        };
        if !stochastic(&initial) {
            return Err(Error::InvariantViolation("initial distribution must be nonnegative and sum to 1".into()));
        }
        if matrices.len() != alphabet.tape_size() {
            return Err(Error::InvariantViolation("one matrix per tape symbol is required".into()));
        }
        for (sym, m) in matrices.iter().enumerate() {
            if m.len() != n {
                return Err(Error::InvariantViolation(format!("matrix for {} is not square", alphabet.symbol(sym))));
            }
            for (r, row) in m.iter().enumerate() {
                if !stochastic(row) {
                    return Err(Error::InvariantViolation(format!(
                        "row {r} of the matrix for {} is not stochastic",
                        alphabet.symbol(sym)
                    )));
                }
            }
        }
        Ok(Pfa { alphabet, initial, matrices, kinds })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.initial.len()
    }

    pub fn initial(&self) -> &[BigRational] {
        &self.initial
    }

    pub fn matrix(&self, sym: usize) -> &[Vec<BigRational>] {
        &self.matrices[sym]
    }

    pub fn verdict(&self, q: StateId) -> Option<Verdict> {
        self.kinds[q].verdict()
    }

    /// `v · M_sym`, skipping zero entries of `v`.
    pub fn apply(&self, v: &[BigRational], sym: usize) -> Vec<BigRational> {
        let n = self.num_states();
        let mut out = vec![BigRational::zero(); n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, mij) in self.matrices[sym][i].iter().enumerate() {
                if !mij.is_zero() {
                    out[j] += vi * mij;
                }
            }
        }
        out
    }
}

/// Read or λ component of a pushdown transition key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Read(usize),
    Lambda,
}

/// One-way deterministic pushdown automaton. A transition replaces the top
/// stack symbol with a push string whose first character becomes the new top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dpda {
    alphabet: Alphabet,
    stack: Vec<char>,
    bottom: char,
    push_size: usize,
    start: StateId,
    kinds: Vec<StateKind>,
    delta: BTreeMap<(StateId, Move, char), (StateId, String)>,
}

/// Transition of a [`Dpda`] as supplied to [`Dpda::from_parts`]; `None` read
/// symbol is a λ-move.
pub type DpdaRule = (StateId, Option<Symbol>, char, StateId, String);

impl Dpda {
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        alphabet: Alphabet,
        num_states: usize,
        stack: Vec<char>,
        bottom: char,
        push_size: usize,
        start: StateId,
        accept: impl IntoIterator<Item = StateId>,
        reject: impl IntoIterator<Item = StateId>,
        rules: impl IntoIterator<Item = DpdaRule>,
    ) -> Result<Self> {
        let kinds = kinds_from_sets(num_states, &accept.into_iter().collect(), &reject.into_iter().collect())?;
        check_state(start, num_states)?;
        if !stack.contains(&bottom) {
            return Err(Error::InvariantViolation(format!("bottom marker {bottom:?} is not a stack symbol")));
        }
        let mut delta = BTreeMap::new();
        for (q, sym, top, p, push) in rules {
            check_state(q, num_states)?;
            check_state(p, num_states)?;
            if kinds[q] != StateKind::Live {
                return Err(Error::InvariantViolation(format!("halting state {q} has outgoing transitions")));
            }
            if !stack.contains(&top) {
                return Err(Error::InvariantViolation(format!("top {top:?} is not a stack symbol")));
            }
            if let Some(c) = push.chars().find(|c| !stack.contains(c)) {
                return Err(Error::InvariantViolation(format!("pushed {c:?} is not a stack symbol")));
            }
            if push.chars().count() > push_size {
                return Err(Error::InvariantViolation(format!("push {push:?} is longer than the push size {push_size}")));
            }
            let bottoms = push.chars().filter(|&c| c == bottom).count();
            if top == bottom {
                if bottoms != 1 || !push.ends_with(bottom) {
                    return Err(Error::InvariantViolation(format!(
                        "a move on the bottom marker must push a string ending in it, got {push:?}"
                    )));
                }
            } else if bottoms > 0 {
                return Err(Error::InvariantViolation(format!("bottom marker pushed above the bottom in {push:?}")));
            }
            let mv = match sym {
                None => Move::Lambda,
                Some(Symbol::Letter(c)) => Move::Read(alphabet.index(Symbol::Letter(c)).ok_or(Error::Alphabet(c))?),
                Some(s) => Move::Read(alphabet.index(s).expect("endmarker")),
            };
            if delta.insert((q, mv, top), (p, push)).is_some() {
                return Err(Error::InvariantViolation(format!("duplicate move for state {q} on top {top:?}")));
            }
        }
        for &(q, mv, top) in delta.keys() {
            if mv != Move::Lambda && delta.contains_key(&(q, Move::Lambda, top)) {
                return Err(Error::InvariantViolation(format!(
                    "state {q} with top {top:?} has both a λ-move and a reading move"
                )));
            }
        }
        Ok(Dpda { alphabet, stack, bottom, push_size, start, kinds, delta })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.kinds.len()
    }

    pub fn stack_alphabet(&self) -> &[char] {
        &self.stack
    }

    pub fn bottom(&self) -> char {
        self.bottom
    }

    pub fn push_size(&self) -> usize {
        self.push_size
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn verdict(&self, q: StateId) -> Option<Verdict> {
        self.kinds[q].verdict()
    }

    pub fn rule(&self, q: StateId, mv: Move, top: char) -> Option<(StateId, &str)> {
        self.delta.get(&(q, mv, top)).map(|(p, s)| (*p, s.as_str()))
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(StateId, Move, char), &(StateId, String))> {
        self.delta.iter()
    }
}

/// Any machine the interchange format can carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Machine {
    Nfa(Nfa),
    Dfa(Dfa),
    Dft(Dft),
    Pfa(Pfa),
    Dpda(Dpda),
}

impl Machine {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Machine::Nfa(_) => "nfa",
            Machine::Dfa(_) => "dfa",
            Machine::Dft(_) => "dft",
            Machine::Pfa(_) => "pfa",
            Machine::Dpda(_) => "dpda",
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Machine::Nfa(m) => m.alphabet(),
            Machine::Dfa(m) => m.as_nfa().alphabet(),
            Machine::Dft(m) => m.alphabet(),
            Machine::Pfa(m) => m.alphabet(),
            Machine::Dpda(m) => m.alphabet(),
        }
    }

    /// The machine as a 1nfa, when it is one (dfas included).
    pub fn as_nfa(&self) -> Result<&Nfa> {
        match self {
            Machine::Nfa(m) => Ok(m),
            Machine::Dfa(m) => Ok(m.as_nfa()),
            other => Err(Error::WrongKind { expected: "nfa", found: other.kind_name() }),
        }
    }

    pub fn as_pfa(&self) -> Result<&Pfa> {
        match self {
            Machine::Pfa(m) => Ok(m),
            other => Err(Error::WrongKind { expected: "pfa", found: other.kind_name() }),
        }
    }

    pub fn as_dft(&self) -> Result<&Dft> {
        match self {
            Machine::Dft(m) => Ok(m),
            other => Err(Error::WrongKind { expected: "dft", found: other.kind_name() }),
        }
    }

    pub fn as_dpda(&self) -> Result<&Dpda> {
        match self {
            Machine::Dpda(m) => Ok(m),
            other => Err(Error::WrongKind { expected: "dpda", found: other.kind_name() }),
        }
    }
}

impl From<Nfa> for Machine {
    fn from(m: Nfa) -> Self {
        Machine::Nfa(m)
    }
}

impl From<Pfa> for Machine {
    fn from(m: Pfa) -> Self {
        Machine::Pfa(m)
    }
}

impl From<Dft> for Machine {
    fn from(m: Dft) -> Self {
        Machine::Dft(m)
    }
}

impl From<Dpda> for Machine {
    fn from(m: Dpda) -> Self {
        Machine::Dpda(m)
    }
}

/// `sc(M) = |Q|`.
pub fn state_complexity(m: &Machine) -> usize {
    match m {
        Machine::Nfa(m) => m.num_states(),
        Machine::Dfa(m) => m.as_nfa().num_states(),
        Machine::Dft(m) => m.num_states(),
        Machine::Pfa(m) => m.num_states(),
        Machine::Dpda(m) => m.num_states(),
    }
}

/// `ssc(M) = |Q| · |Γ^{≤e}| = |Q| · Σ_{j=0}^{e} |Γ|^j`.
pub fn stack_state_complexity(m: &Dpda) -> BigUint {
    let gamma = BigUint::from(m.stack_alphabet().len());
    let mut power = BigUint::one();
    let mut strings = BigUint::zero();
    for _ in 0..=m.push_size() {
        strings += &power;
        power *= &gamma;
    }
    strings * BigUint::from(m.num_states())
}

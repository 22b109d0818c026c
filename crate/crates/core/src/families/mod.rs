//! Catalog of promise families: classifiers, enumerators and witness machines.

use std::fmt;
use std::rc::Rc;

use num_bigint::BigInt;

use crate::encodings::padded_encode;
use crate::machines::{Alphabet, Machine};
use crate::{Error, Result};

pub mod instances;
pub mod machines;

use instances::*;

/// Membership of a string in the promise pair of a family at index `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Positive,
    Negative,
    Invalid,
}

/// What the value of a witness machine means on valid strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Contract {
    /// Number of accepting paths equals the value.
    Accepting,
    /// Gap equals the value.
    Gap,
    /// Deterministic verdict: accept iff the value is 1.
    Verdict,
    /// No machine ships for this family.
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Example31,
    Lsp,
    LU,
    LN,
    Lparity,
    Ldot,
    LblockU,
}

pub type Strings = Box<dyn Iterator<Item = String>>;

impl Family {
    pub const ALL: [Family; 7] =
        [Family::Example31, Family::Lsp, Family::LU, Family::LN, Family::Lparity, Family::Ldot, Family::LblockU];

    pub fn by_name(name: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Example31 => "example31",
            Family::Lsp => "Lsp",
            Family::LU => "LU",
            Family::LN => "LN",
            Family::Lparity => "Lparity",
            Family::Ldot => "Ldot",
            Family::LblockU => "LblockU",
        }
    }

    pub fn alphabet(self) -> Alphabet {
        let letters = match self {
            Family::Lparity | Family::Ldot => "01$#",
            _ => "01#",
        };
        Alphabet::of(letters).expect("static alphabet")
    }

    pub fn classify(self, n: usize, x: &str) -> Class {
        let by = |v: Option<bool>| match v {
            Some(true) => Class::Positive,
            Some(false) => Class::Negative,
            None => Class::Invalid,
        };
        match self {
            Family::Example31 => by(example31_value(x, n).map(|f| f > 0)),
            Family::Lsp => match sp_blocks(x) {
                Some((a, b)) if a == b + 1 => Class::Positive,
                Some((a, b)) if a == b => Class::Negative,
                _ => Class::Invalid,
            },
            Family::LU | Family::LblockU => {
                let d = if self == Family::LU { lu_differences(x, n) } else { block_differences(x, n) };
                match d {
                    Some(1) => Class::Positive,
                    Some(0) => Class::Negative,
                    _ => Class::Invalid,
                }
            }
            Family::LN => by(ln_sets(x, n).map(|(u, v)| u != v)),
            Family::Lparity => by(lparity_odd_blocks(x, n).map(|k| k % 2 == 1)),
            Family::Ldot => by(ldot_odd_blocks(x, n).map(|k| k % 2 == 1)),
        }
    }

    pub fn contract(self) -> Contract {
        match self {
            Family::Example31 | Family::LU | Family::LN | Family::Lparity => Contract::Accepting,
            Family::Lsp => Contract::Gap,
            Family::Ldot => Contract::Verdict,
            Family::LblockU => Contract::None,
        }
    }

    /// The value the witness machine must produce on `x`, or `None` when `x`
    /// is outside the domain of the contract.
    pub fn contract_value(self, n: usize, x: &str) -> Option<BigInt> {
        let v = match self {
            Family::Example31 => example31_value(x, n)?,
            Family::Lsp => {
                let (a, b) = sp_blocks(x)?;
                return Some(BigInt::from(a) - BigInt::from(b));
            }
            Family::LU => lu_differences(x, n)?,
            Family::LN => {
                let (u, v) = ln_sets(x, n)?;
                u.symmetric_difference(&v).count()
            }
            Family::Lparity => lparity_odd_blocks(x, n)?,
            Family::Ldot => ldot_odd_blocks(x, n)? % 2,
            Family::LblockU => return None,
        };
        Some(BigInt::from(v))
    }

    pub fn has_machine(self) -> bool {
        self != Family::LblockU
    }

    pub fn build_machine(self, n: usize) -> Result<Machine> {
        if n == 0 {
            return Err(Error::Range("family index must be at least 1".into()));
        }
        Ok(match self {
            Family::Example31 => machines::example31(n).into(),
            Family::Lsp => machines::lsp().into(),
            Family::LU => machines::lu(n).into(),
            Family::LN => machines::ln(n).into(),
            Family::Lparity => machines::lparity(n).into(),
            Family::Ldot => machines::ldot().into(),
            Family::LblockU => return Err(Error::NoMachine(self.name().into())),
        })
    }

    /// `(C, k)` with `sc(build_machine(n)) ≤ C·n^k` for `n ≥ 1`.
    pub fn size_bound(self) -> Option<(usize, u32)> {
        match self {
            Family::Example31 => Some((11, 2)),
            Family::Lsp | Family::Ldot => Some((5, 0)),
            Family::LU => Some((12, 4)),
            Family::LN => Some((57, 4)),
            Family::Lparity => Some((8, 4)),
            Family::LblockU => None,
        }
    }

    /// Every valid string of length at most `max_len`, length first and then
    /// lexicographic in alphabet order.
    ///
    /// `Lsp` and `example31` filter all strings, so `max_len` must stay small
    /// for them; the other families generate their instances directly.
    pub fn enumerate(self, n: usize, max_len: usize) -> Strings {
        if n == 0 {
            return Box::new(std::iter::empty());
        }
        match self {
            Family::Lsp | Family::Example31 => {
                let alphabet = self.alphabet();
                Box::new(
                    (0..=max_len)
                        .flat_map(move |len| alphabet.words(len))
                        .filter(move |x| self.classify(n, x) != Class::Invalid),
                )
            }
            _ if self.instance_length(n).is_some_and(|len| len <= max_len) => {
                Box::new(self.domain(n).filter(move |x| self.classify(n, x) != Class::Invalid))
            }
            _ => Box::new(std::iter::empty()),
        }
    }

    /// Every well-formed instance of the fixed-length families, whether or not
    /// it satisfies the promise, in the order of [`Family::enumerate`]. Empty
    /// for `Lsp` and `example31`.
    pub fn domain(self, n: usize) -> Strings {
        if n == 0 {
            return Box::new(std::iter::empty());
        }
        match self {
            Family::LU => pairs(fields(n, n, n)),
            Family::LN => pairs(fields(n * n, n * n, n)),
            Family::Lparity => pairs(blocked(n)),
            Family::Ldot => {
                let blocks = blocked(n);
                let mut rev: Vec<String> = blocks.iter().map(|u| u.chars().rev().collect()).collect();
                sort_by_alphabet(&mut rev, &self.alphabet());
                product(rev, blocks)
            }
            Family::LblockU => {
                let bits = Alphabet::of("01").expect("static alphabet");
                pairs(bits.words(n * n).collect())
            }
            Family::Lsp | Family::Example31 => Box::new(std::iter::empty()),
        }
    }

    /// Length of every valid string, for families whose instances have one.
    pub fn instance_length(self, n: usize) -> Option<usize> {
        match self {
            Family::LU => Some(2 * n * (n + 1) - 1),
            Family::LN => Some(2 * n * (n * n + 1) - 1),
            Family::Lparity | Family::Ldot => Some(2 * n * (floor_log2(n) + 1) - 1),
            Family::LblockU => Some(2 * n * n + 1),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn sort_by_alphabet(v: &mut [String], alphabet: &Alphabet) {
    v.sort_by_cached_key(|s| (s.len(), alphabet.tape(s).expect("letters of the alphabet")));
}

/// Padded encodings of every tuple in `[0, bound]^count`, in `01#` order.
fn fields(bound: usize, width: usize, count: usize) -> Vec<String> {
    let mut out: Vec<String> =
        tuples(bound, count).iter().map(|t| padded_encode(t, width, bound).expect("entries in range")).collect();
    sort_by_alphabet(&mut out, &Alphabet::of("01#").expect("static alphabet"));
    out
}

/// Every `J_n` string, sorted in `01$#` order.
fn blocked(n: usize) -> Vec<String> {
    let w = floor_log2(n);
    let bits = Alphabet::of("01").expect("static alphabet");
    let block: Vec<String> = bits.words(w).collect();
    let mut out = vec![String::new()];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| block.iter().map(move |b| if i == 0 { b.clone() } else { format!("{p}${b}") }))
            .collect();
    }
    sort_by_alphabet(&mut out, &Alphabet::of("01$#").expect("static alphabet"));
    out
}

fn pairs(sides: Vec<String>) -> Strings {
    product(sides.clone(), sides)
}

fn product(left: Vec<String>, right: Vec<String>) -> Strings {
    let right = Rc::new(right);
    Box::new(left.into_iter().flat_map(move |u| {
        let right = Rc::clone(&right);
        (0..right.len()).map(move |i| format!("{u}#{}", right[i]))
    }))
}

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::prefix::{affine_decomposition, spanning_prefix_set};
use crate::families::{Class, Family};
use crate::machines::Pfa;
use crate::{Error, Result};

/// Largest number of prefixes or suffixes an extension check will enumerate.
pub const EXTENSION_CAP: usize = 1 << 20;

/// `a(y)`: bit `i` is 1 iff `w_i y` is positive, 0 iff negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignPattern {
    Bits(String),
    Undefined,
}

pub fn sign_pattern(classify: impl Fn(&str) -> Class, s: &[String], y: &str) -> SignPattern {
    let mut bits = String::with_capacity(s.len());
    for w in s {
        match classify(&format!("{w}{y}")) {
            Class::Positive => bits.push('1'),
            Class::Negative => bits.push('0'),
            Class::Invalid => return SignPattern::Undefined,
        }
    }
    SignPattern::Bits(bits)
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignPattern::Bits(b) => f.write_str(b),
            SignPattern::Undefined => f.write_str("undefined"),
        }
    }
}

/// A suffix `y` whose premise held but `xy` is not positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub y: String,
    pub x: String,
    pub class: Class,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub m: usize,
    pub l: usize,
    pub z: String,
    pub states: usize,
    /// `|A|` with `A = {x ∈ Σ^{m-l} : xz positive}`.
    pub a_size: usize,
    pub spanning: Vec<String>,
    pub suffixes: usize,
    /// Suffixes `y` with `wy` positive for every `w ∈ S`.
    pub premise_held: usize,
    pub violation_count: usize,
    /// The first few violations, in enumeration order.
    pub violations: Vec<Violation>,
    /// Whether every `x ∈ A` decomposed with `Σα = 1`.
    pub alpha_sums_one: bool,
    /// Members of `A` whose decomposition has a negative coefficient.
    pub negative_alpha: usize,
}

impl ExtensionReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0 && self.spanning.len() <= self.states
    }
}

impl fmt::Display for ExtensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m={} l={} z={:?} states={}", self.m, self.l, self.z, self.states)?;
        writeln!(f, "A={} S={} {:?}", self.a_size, self.spanning.len(), self.spanning)?;
        writeln!(f, "alpha_sum_one={} negative_alpha={}", self.alpha_sums_one, self.negative_alpha)?;
        writeln!(f, "suffixes={} premise_held={} violations={}", self.suffixes, self.premise_held, self.violation_count)?;
        for v in &self.violations {
            writeln!(f, "violation y={:?} x={:?} class={:?}", v.y, v.x, v.class)?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

const KEPT_VIOLATIONS: usize = 16;

fn count_words(k: usize, len: usize) -> Option<usize> {
    k.checked_pow(u32::try_from(len).ok()?)
}

/// Builds `S` from the prefix vectors of `A` and checks, for every
/// `y ∈ Σ^l`, that `{wy : w ∈ S} ⊆ L⁺` implies `{xy : x ∈ A} ⊆ L⁺`.
pub fn check_extension_with(
    p: &Pfa,
    classify: impl Fn(&str) -> Class,
    m: usize,
    l: usize,
    z: &str,
) -> Result<ExtensionReport> {
    if l >= m {
        return Err(Error::Range(format!("suffix length {l} must be below m = {m}")));
    }
    if z.chars().count() != l {
        return Err(Error::Length { left: z.chars().count(), right: l });
    }
    p.alphabet().tape(z)?;
    let alphabet = p.alphabet();
    let k = alphabet.letters().len();
    for len in [m - l, l] {
        if count_words(k, len).is_none_or(|c| c > EXTENSION_CAP) {
            return Err(Error::Scale(format!("{k}^{len} strings exceed the cap of {EXTENSION_CAP}")));
        }
    }
    let a: Vec<String> = alphabet.words(m - l).filter(|x| classify(&format!("{x}{z}")) == Class::Positive).collect();
    let spanning = spanning_prefix_set(p, &a)?;
    let mut alpha_sums_one = true;
    let mut negative_alpha = 0;
    for x in &a {
        let d = affine_decomposition(p, &spanning, x)?;
        alpha_sums_one &= d.sum.is_one();
        negative_alpha += usize::from(d.min < BigRational::from_integer(0.into()) || d.coefficients.iter().any(Signed::is_negative));
    }
    let s: Vec<String> = spanning.iter().map(|pv| pv.prefix.clone()).collect();
    let mut report = ExtensionReport {
        m,
        l,
        z: z.to_string(),
        states: p.num_states(),
        a_size: a.len(),
        spanning: s.clone(),
        suffixes: 0,
        premise_held: 0,
        violation_count: 0,
        violations: Vec::new(),
        alpha_sums_one,
        negative_alpha,
    };
    for y in alphabet.words(l) {
        report.suffixes += 1;
        if sign_pattern(&classify, &s, &y) != SignPattern::Bits("1".repeat(s.len())) {
            continue;
        }
        report.premise_held += 1;
        for x in &a {
            let class = classify(&format!("{x}{y}"));
            if class != Class::Positive {
                report.violation_count += 1;
                if report.violations.len() < KEPT_VIOLATIONS {
                    report.violations.push(Violation { y: y.clone(), x: x.clone(), class });
                }
            }
        }
    }
    Ok(report)
}

/// [`check_extension_with`] against the classifier of `family` at index `n`.
pub fn check_cequal_extension(p: &Pfa, family: Family, n: usize, m: usize, l: usize, z: &str) -> Result<ExtensionReport> {
    if *p.alphabet() != family.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    check_extension_with(p, |x| family.classify(n, x), m, l, z)
}

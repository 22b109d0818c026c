//! Class-condition predicates, verification suites and their reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::families::{Class, Family};
use crate::machines::Machine;
use crate::semantics::count_paths;
use crate::{Error, Result};

mod suites;

pub use suites::{run_suite, run_suite_with, SuiteOptions, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    OneN,
    OneU,
    OneParity,
    OneCeq,
    OneSP,
    OneP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semantics {
    Counting,
    Gap,
}

impl ClassKind {
    pub const ALL: [ClassKind; 6] =
        [ClassKind::OneN, ClassKind::OneU, ClassKind::OneParity, ClassKind::OneCeq, ClassKind::OneSP, ClassKind::OneP];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::OneN => "1N",
            ClassKind::OneU => "1U",
            ClassKind::OneParity => "1parity",
            ClassKind::OneCeq => "1Ceq",
            ClassKind::OneSP => "1SP",
            ClassKind::OneP => "1P",
        }
    }

    pub fn semantics(self) -> Semantics {
        match self {
            ClassKind::OneN | ClassKind::OneU | ClassKind::OneParity => Semantics::Counting,
            ClassKind::OneCeq | ClassKind::OneSP | ClassKind::OneP => Semantics::Gap,
        }
    }

    /// Whether `f` is acceptable on a string of class `class`.
    pub fn holds(self, class: Class, f: &BigInt) -> bool {
        let positive = match class {
            Class::Positive => true,
            Class::Negative => false,
            Class::Invalid => return true,
        };
        match (self, positive) {
            (ClassKind::OneN, true) => f.is_positive(),
            (ClassKind::OneN | ClassKind::OneSP, false) => f.is_zero(),
            (ClassKind::OneU | ClassKind::OneSP, true) => f.is_one(),
            (ClassKind::OneU, false) => f.is_zero(),
            (ClassKind::OneParity, p) => f.is_odd() == p,
            (ClassKind::OneCeq, p) => f.is_zero() == p,
            (ClassKind::OneP, p) => f.is_positive() == p,
        }
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassKind::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Range(format!("unknown class {s:?}")))
    }
}

/// A class predicate, optionally for the complementary pair (`co`): then the
/// roles of positive and negative instances are swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassCondition {
    pub class: ClassKind,
    pub semantics: Semantics,
    pub co: bool,
}

impl ClassCondition {
    pub fn new(class: ClassKind) -> Self {
        ClassCondition { class, semantics: class.semantics(), co: false }
    }

    pub fn co(class: ClassKind) -> Self {
        ClassCondition { co: true, ..ClassCondition::new(class) }
    }

    pub fn name(&self) -> String {
        format!("{}{}", if self.co { "co-" } else { "" }, self.class.name())
    }

    pub fn holds(&self, class: Class, f: &BigInt) -> bool {
        let class = match (self.co, class) {
            (true, Class::Positive) => Class::Negative,
            (true, Class::Negative) => Class::Positive,
            (_, c) => c,
        };
        self.class.holds(class, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scale {
    Small,
    Full,
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Scale::Small),
            "full" => Ok(Scale::Full),
            _ => Err(Error::Range(format!("unknown scale {s:?}"))),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Small => "small",
            Scale::Full => "full",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub id: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

impl CheckLine {
    pub fn new(id: impl Into<String>, passed: bool, cases: usize, detail: impl Into<String>) -> Self {
        CheckLine { id: id.into(), passed, cases, detail: detail.into() }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} cases={}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.cases)?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        SuiteReport { suite: suite.into(), seed, checks: Vec::new() }
    }

    pub fn push(&mut self, line: CheckLine) {
        self.checks.push(line);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    /// Sorts checks by id so the report is independent of execution order.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} seed {}", self.suite, self.seed)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "{} checks={} failed={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len(),
            self.failures()
        )
    }
}

/// Largest number of strings a class-condition check will evaluate.
pub const CONDITION_CAP: usize = 2_000_000;

/// Evaluates the counting or gap value of an nfa on every enumerated valid
/// string of `family` and checks the predicate of `cond`.
pub fn check_class_condition(
    cond: ClassCondition,
    machine: &Machine,
    family: Family,
    n: usize,
    max_len: usize,
) -> Result<SuiteReport> {
    let m = machine.as_nfa()?;
    if *m.alphabet() != family.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let mut cases = 0;
    let mut bad = Vec::new();
    for x in family.enumerate(n, max_len) {
        cases += 1;
        if cases > CONDITION_CAP {
            return Err(Error::Scale(format!("more than {CONDITION_CAP} instances")));
        }
        let counts = count_paths(m, &x)?;
        let f = match cond.semantics {
            Semantics::Counting => BigInt::from(counts.accepting),
            Semantics::Gap => counts.gap(),
        };
        let class = family.classify(n, &x);
        if !cond.holds(class, &f) {
            bad.push(format!("{x}:{class:?}:{f}"));
        }
    }
    let id = format!("{}.{} n={n}", cond.name(), family.name());
    let detail = bad.iter().take(3).cloned().collect::<Vec<_>>().join(" ");
    let mut report = SuiteReport::new(id.clone(), 0);
    report.push(CheckLine::new(id, bad.is_empty(), cases, if bad.is_empty() { String::new() } else { format!("violations={} {detail}", bad.len()) }));
    Ok(report)
}

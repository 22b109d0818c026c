use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer operations from which functional classes are closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunOp {
    Add,
    Mul,
    /// `a ⊖ b`: subtraction clamped at 0.
    ProperSub,
    /// `a ⊘ b = ⌊a/b⌋`.
    IntDiv,
    /// `a ⊖ 1`.
    Dec1,
    /// `⌊a/2⌋`.
    Half,
    Max,
    Min,
}

impl FunOp {
    pub const ALL: [FunOp; 8] =
        [FunOp::Add, FunOp::Mul, FunOp::ProperSub, FunOp::IntDiv, FunOp::Dec1, FunOp::Half, FunOp::Max, FunOp::Min];

    pub fn name(self) -> &'static str {
        match self {
            FunOp::Add => "add",
            FunOp::Mul => "mul",
            FunOp::ProperSub => "propersub",
            FunOp::IntDiv => "intdiv",
            FunOp::Dec1 => "dec1",
            FunOp::Half => "half",
            FunOp::Max => "max",
            FunOp::Min => "min",
        }
    }

    pub fn is_binary(self) -> bool {
        !matches!(self, FunOp::Dec1 | FunOp::Half)
    }
}

impl fmt::Display for FunOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown operation {s:?}")))
    }
}

fn proper_sub(a: &BigInt, b: &BigInt) -> BigInt {
    let d = a - b;
    if d.is_negative() {
        BigInt::zero()
    } else {
        d
    }
}

/// Applies `op`; unary operations ignore `b`, binary ones require it.
pub fn funop_apply(op: FunOp, a: &BigInt, b: Option<&BigInt>) -> Result<BigInt> {
    let rhs = || b.ok_or_else(|| Error::Range(format!("{op} needs two operands")));
    Ok(match op {
        FunOp::Add => a + rhs()?,
        FunOp::Mul => a * rhs()?,
        FunOp::ProperSub => proper_sub(a, rhs()?),
        FunOp::IntDiv => {
            let b = rhs()?;
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a.div_floor(b)
        }
        FunOp::Dec1 => proper_sub(a, &BigInt::one()),
        FunOp::Half => a.div_floor(&BigInt::from(2)),
        FunOp::Max => a.max(rhs()?).clone(),
        FunOp::Min => a.min(rhs()?).clone(),
    })
}

//! Integer and string codecs shared by the promise-problem families.
//!
//! * `trans`: signed integers as binary strings (`""` for 0, `1·bin(k)` for
//!   `k > 0`, `0·bin(k)` for `-k`).
//! * bracket form `[i1,...,ik]` = `1^i1 0 1^i2 0 ... 1^ik 0`.
//! * padded form `[[i1,...,ik]]_m` = `1^i1 0^(m-i1) 0 ... 0 1^ik 0^(m-ik)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Most-significant-bit-first binary with no leading zeros; `bin(0)` is empty.
pub fn bin(k: &BigUint) -> String {
    if k.is_zero() {
        String::new()
    } else {
        k.to_str_radix(2)
    }
}

fn parse_bin(bits: &str) -> Result<BigUint> {
    if bits.is_empty() || !bits.starts_with('1') || bits.chars().any(|c| c != '0' && c != '1') {
        return Err(Error::MalformedCode(bits.to_string()));
    }
    BigUint::parse_bytes(bits.as_bytes(), 2).ok_or_else(|| Error::MalformedCode(bits.to_string()))
}

pub fn encode_trans(v: &BigInt) -> String {
    match v.sign() {
        Sign::NoSign => String::new(),
        Sign::Plus => format!("1{}", bin(v.magnitude())),
        Sign::Minus => format!("0{}", bin(v.magnitude())),
    }
}

pub fn decode_trans(code: &str) -> Result<BigInt> {
    let mut chars = code.chars();
    match chars.next() {
        None => Ok(BigInt::zero()),
        Some('1') => Ok(BigInt::from_biguint(Sign::Plus, parse_bin(chars.as_str())?)),
        Some('0') => Ok(BigInt::from_biguint(Sign::Minus, parse_bin(chars.as_str())?)),
        Some(_) => Err(Error::MalformedCode(code.to_string())),
    }
}

/// Value of a sign-prefixed bit string that may carry leading zeros:
/// `"1"` and `""` are 0, `"1011"` is 3, `"0011"` is -3.
pub fn trans_value(code: &str) -> Result<BigInt> {
    let mut chars = code.chars();
    let sign = match chars.next() {
        None => return Ok(BigInt::zero()),
        Some('1') => Sign::Plus,
        Some('0') => Sign::Minus,
        Some(_) => return Err(Error::MalformedCode(code.to_string())),
    };
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok(BigInt::zero());
    }
    Ok(BigInt::from_biguint(sign, binary_value(rest)?))
}

/// A decoded bracket sequence `[i1,...,ik]` with positive entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketSeq {
    entries: Vec<usize>,
}

impl BracketSeq {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Range("a bracket sequence needs at least one entry".into()));
        }
        if let Some(bad) = entries.iter().find(|&&i| i == 0) {
            return Err(Error::Range(format!("bracket entries must be positive, got {bad}")));
        }
        Ok(BracketSeq { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `(r)_(e)` with 1-based `e`.
    pub fn entry(&self, e: usize) -> Option<usize> {
        e.checked_sub(1).and_then(|i| self.entries.get(i)).copied()
    }

    pub fn set(&self) -> BTreeSet<usize> {
        self.entries.iter().copied().collect()
    }

    /// Multiset as a sorted vector.
    pub fn multiset(&self) -> Vec<usize> {
        let mut m = self.entries.clone();
        m.sort_unstable();
        m
    }

    pub fn encoded_len(&self) -> usize {
        self.entries.iter().sum::<usize>() + self.entries.len()
    }
}

pub fn bracket_encode(entries: &[usize]) -> Result<String> {
    let seq = BracketSeq::new(entries.to_vec())?;
    let mut out = String::with_capacity(seq.encoded_len());
    for &i in seq.entries() {
        out.extend(std::iter::repeat('1').take(i));
        out.push('0');
    }
    Ok(out)
}

pub fn bracket_decode(s: &str) -> Result<BracketSeq> {
    let malformed = || Error::MalformedCode(s.to_string());
    if s.is_empty() || !s.ends_with('0') {
        return Err(malformed());
    }
    let mut entries = Vec::new();
    let mut run = 0usize;
    for c in s.chars() {
        match c {
            '1' => run += 1,
            '0' if run > 0 => {
                entries.push(run);
                run = 0;
            }
            _ => return Err(malformed()),
        }
    }
    BracketSeq::new(entries)
}

/// `[[i1,...,ik]]_m`; every entry must lie in `[0, n]` and `n <= m`.
pub fn padded_encode(entries: &[usize], m: usize, n: usize) -> Result<String> {
    if n > m {
        return Err(Error::Range(format!("bound n={n} exceeds pad width m={m}")));
    }
    if entries.is_empty() {
        return Err(Error::Range("a padded sequence needs at least one entry".into()));
    }
    if let Some(bad) = entries.iter().find(|&&i| i > n) {
        return Err(Error::Range(format!("entry {bad} outside [0, {n}]")));
    }
    let mut out = String::with_capacity(entries.len() * (m + 1) - 1);
    for (idx, &i) in entries.iter().enumerate() {
        if idx > 0 {
            out.push('0');
        }
        out.extend(std::iter::repeat('1').take(i));
        out.extend(std::iter::repeat('0').take(m - i));
    }
    Ok(out)
}

/// Strict inverse of [`padded_encode`] for pad width `m`; the entry count is
/// recovered from the length `k*m + k - 1`.
pub fn padded_decode(s: &str, m: usize) -> Result<Vec<usize>> {
    let malformed = || Error::MalformedCode(s.to_string());
    let bytes = s.as_bytes();
    if (bytes.len() + 1) % (m + 1) != 0 {
        return Err(malformed());
    }
    let k = (bytes.len() + 1) / (m + 1);
    if k == 0 {
        return Err(malformed());
    }
    let mut entries = Vec::with_capacity(k);
    for e in 0..k {
        let start = e * (m + 1);
        if e > 0 && bytes[start - 1] != b'0' {
            return Err(malformed());
        }
        let field = &bytes[start..start + m];
        let ones = field.iter().take_while(|&&b| b == b'1').count();
        if field[ones..].iter().any(|&b| b != b'0') {
            return Err(malformed());
        }
        entries.push(ones);
    }
    Ok(entries)
}

/// `#_sigma(w)`.
pub fn count_symbol(w: &str, sigma: char) -> usize {
    w.chars().filter(|&c| c == sigma).count()
}

/// Bitwise inner product `x ⊙ y = Σ x_i y_i` over binary strings of equal length.
pub fn bitwise_dot(x: &str, y: &str) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::Length { left: x.len(), right: y.len() });
    }
    let mut total = 0;
    for (a, b) in x.chars().zip(y.chars()) {
        let bit = |c: char| match c {
            '0' => Ok(0usize),
            '1' => Ok(1usize),
            other => Err(Error::MalformedCode(format!("non-binary symbol {other:?}"))),
        };
        total += bit(a)? * bit(b)?;
    }
    Ok(total)
}

/// Binary value of an arbitrary bit string, leading zeros allowed.
pub fn binary_value(bits: &str) -> Result<BigUint> {
    let mut v = BigUint::zero();
    for c in bits.chars() {
        v <<= 1usize;
        match c {
            '0' => {}
            '1' => v += BigUint::one(),
            _ => return Err(Error::MalformedCode(bits.to_string())),
        }
    }
    Ok(v)
}

//! Parsers for the structured instance formats and the combinatorial oracles
//! behind every classifier.

use std::collections::BTreeSet;

use crate::encodings::{bitwise_dot, bracket_decode, count_symbol, padded_decode};

/// `⌊log2 n⌋`, with 0 for `n ≤ 1`.
pub fn floor_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        n.ilog2() as usize
    }
}

/// Splits `x` at its only `sep`.
pub fn split_once_exact(x: &str, sep: char) -> Option<(&str, &str)> {
    let (a, b) = x.split_once(sep)?;
    (!b.contains(sep)).then_some((a, b))
}

fn is_binary(w: &str) -> bool {
    w.chars().all(|c| c == '0' || c == '1')
}

/// `(#0(x), #0(y))` for `x#y` with binary blocks.
pub fn sp_blocks(x: &str) -> Option<(usize, usize)> {
    let (a, b) = split_once_exact(x, '#')?;
    (is_binary(a) && is_binary(b)).then(|| (count_symbol(a, '0'), count_symbol(b, '0')))
}

/// Entries of `r ∈ A_n`.
pub fn a_n(r: &str, n: usize) -> Option<Vec<usize>> {
    let seq = bracket_decode(r).ok()?;
    seq.entries().iter().all(|&i| i <= n).then(|| seq.entries().to_vec())
}

/// Entries of `u ∈ B_bound(width, count)`.
pub fn b_n(u: &str, bound: usize, width: usize, count: usize) -> Option<Vec<usize>> {
    if width == 0 {
        return None;
    }
    let entries = padded_decode(u, width).ok()?;
    (entries.len() == count && entries.iter().all(|&i| i <= bound)).then_some(entries)
}

/// Blocks of `u ∈ J_n`: `n` binary blocks of width `⌊log2 n⌋` joined by `$`.
pub fn j_n(u: &str, n: usize) -> Option<Vec<&str>> {
    let w = floor_log2(n);
    let blocks: Vec<&str> = u.split('$').collect();
    (n >= 1 && blocks.len() == n && blocks.iter().all(|b| b.len() == w && is_binary(b))).then_some(blocks)
}

/// `|{e : (r1)_e ∈ Set(r2)}|` for `r1#r2 ∈ D_n`.
pub fn example31_value(x: &str, n: usize) -> Option<usize> {
    let (a, b) = split_once_exact(x, '#')?;
    let (r1, r2) = (a_n(a, n)?, a_n(b, n)?);
    let set: BTreeSet<usize> = r2.into_iter().collect();
    Some(r1.iter().filter(|i| set.contains(i)).count())
}

/// Number of differing entries of `u#v` with `u, v ∈ B_n(n,n)`.
pub fn lu_differences(x: &str, n: usize) -> Option<usize> {
    let (a, b) = split_once_exact(x, '#')?;
    let (u, v) = (b_n(a, n, n, n)?, b_n(b, n, n, n)?);
    Some(u.iter().zip(&v).filter(|(p, q)| p != q).count())
}

/// `(Set(u), Set(v))` for `u#v` with `u, v ∈ I_n = B_{n²}(n², n)`.
pub fn ln_sets(x: &str, n: usize) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    let (a, b) = split_once_exact(x, '#')?;
    let m = n * n;
    let (u, v) = (b_n(a, m, m, n)?, b_n(b, m, m, n)?);
    Some((u.into_iter().collect(), v.into_iter().collect()))
}

/// `|{i : u_i ⊙ v_i odd}|` for `u#v` with `u, v ∈ J_n`.
pub fn parity_odd_blocks(u: &str, v: &str, n: usize) -> Option<usize> {
    let (us, vs) = (j_n(u, n)?, j_n(v, n)?);
    Some(us.iter().zip(&vs).filter(|(a, b)| bitwise_dot(a, b).expect("equal widths") % 2 == 1).count())
}

pub fn lparity_odd_blocks(x: &str, n: usize) -> Option<usize> {
    let (u, v) = split_once_exact(x, '#')?;
    parity_odd_blocks(u, v, n)
}

/// As [`lparity_odd_blocks`] for `u^R#v`.
pub fn ldot_odd_blocks(x: &str, n: usize) -> Option<usize> {
    let (ur, v) = split_once_exact(x, '#')?;
    let u: String = ur.chars().rev().collect();
    parity_odd_blocks(&u, v, n)
}

/// Number of differing `n`-bit blocks of `u#v` with `u, v ∈ {0,1}^{n²}`.
pub fn block_differences(x: &str, n: usize) -> Option<usize> {
    let (u, v) = split_once_exact(x, '#')?;
    if n == 0 || u.len() != n * n || v.len() != n * n || !is_binary(u) || !is_binary(v) {
        return None;
    }
    Some((0..n).filter(|&e| u[e * n..(e + 1) * n] != v[e * n..(e + 1) * n]).count())
}

/// Every tuple in `[0, bound]^count`, lexicographic.
pub fn tuples(bound: usize, count: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..count {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=bound).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

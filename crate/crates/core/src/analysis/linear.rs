//! Exact-rational elimination.

use num_rational::BigRational;
use num_traits::{One, Zero};

type Row = Vec<BigRational>;

/// Incremental echelon basis that remembers how each stored row was built
/// from the accepted input vectors.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    // (pivot column, reduced row, combination of accepted inputs)
    rows: Vec<(usize, Row, Row)>,
    accepted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.accepted
    }

    fn reduce(&self, v: &[BigRational]) -> (Row, Row) {
        let mut r = v.to_vec();
        let mut combo = vec![BigRational::zero(); self.accepted];
        for (pivot, row, expr) in &self.rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let f = &r[*pivot] / &row[*pivot];
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &f * y;
            }
            for (c, e) in combo.iter_mut().zip(expr) {
                *c += &f * e;
            }
        }
        (r, combo)
    }

    /// Adds `v` if it is independent of the rows so far; returns whether it was.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let (r, combo) = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // r = v - Σ combo·inputs, so the new row is the new input minus combo
        let mut expr: Row = combo.into_iter().map(|c| -c).collect();
        expr.push(BigRational::one());
        for (_, _, e) in &mut self.rows {
            e.push(BigRational::zero());
        }
        self.rows.push((pivot, r, expr));
        self.accepted += 1;
        true
    }

    /// Coefficients `α` with `v = Σ α_i · input_i` over the accepted inputs.
    pub fn express(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        let (r, combo) = self.reduce(v);
        r.iter().all(Zero::is_zero).then_some(combo)
    }
}

/// Rank by column-pivoted row reduction, independent of [`Echelon`].
pub fn rank(vectors: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Row> = vectors.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in (0..cols).rev() {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

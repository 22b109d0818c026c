use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::machines::Pfa;

use super::NormalFormResult;

/// Uniform `1/c` on each of the `c` choices; halting states absorb. Then
/// `p_acc(x) = #M(x) / c^{|x|+2}` exactly.
pub fn nfa_to_pfa(nf: &NormalFormResult) -> Result<Pfa> {
    let m = &nf.machine;
    let c = m.normal_form_degree()?;
    if c != nf.degree {
        return Err(Error::NotNormalForm(format!("declared degree {} but every state branches {c} ways", nf.degree)));
    }
    let n = m.num_states();
    let share = BigRational::new(BigInt::one(), BigInt::from(c));
    let mut initial = vec![BigRational::zero(); n];
    initial[m.start()] = BigRational::one();
    let matrices = (0..m.alphabet().tape_size())
        .map(|s| {
            (0..n)
                .map(|q| {
                    let mut row = vec![BigRational::zero(); n];
                    if m.is_halting(q) {
                        row[q] = BigRational::one();
                    } else {
                        for &p in m.successors(q, s) {
                            row[p] = share.clone();
                        }
                    }
                    row
                })
                .collect()
        })
        .collect();
    let accept: Vec<_> = m.states_with(crate::machines::Verdict::Accept).collect();
    let reject: Vec<_> = m.states_with(crate::machines::Verdict::Reject).collect();
    Pfa::new(m.alphabet().clone(), initial, matrices, accept, reject)
}

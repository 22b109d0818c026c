use num_rational::BigRational;
use num_traits::Zero;

use super::linear::Echelon;
use crate::machines::{Pfa, Symbol};
use crate::{Error, Result};

/// `ν_ini · M_{▷w}`: the state distribution after reading `▷w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixVector {
    pub prefix: String,
    pub vector: Vec<BigRational>,
}

pub fn prefix_vector(p: &Pfa, w: &str) -> Result<PrefixVector> {
    let start = p.apply(p.initial(), 0);
    extend(p, PrefixVector { prefix: String::new(), vector: start }, w)
}

/// `vector(w·v) = vector(w) · M_v`.
pub fn extend(p: &Pfa, pv: PrefixVector, v: &str) -> Result<PrefixVector> {
    let mut vector = pv.vector;
    for idx in letters(p, v)? {
        vector = p.apply(&vector, idx);
    }
    Ok(PrefixVector { prefix: pv.prefix + v, vector })
}

fn letters(p: &Pfa, w: &str) -> Result<Vec<usize>> {
    w.chars().map(|c| p.alphabet().index(Symbol::Letter(c)).ok_or(Error::Alphabet(c))).collect()
}

/// Greedy exact elimination in input order: keeps each prefix whose vector is
/// independent of those kept before it.
pub fn spanning_prefix_set(p: &Pfa, prefixes: &[String]) -> Result<Vec<PrefixVector>> {
    let mut basis = Echelon::new();
    let mut out = Vec::new();
    for w in prefixes {
        let pv = prefix_vector(p, w)?;
        if basis.insert(&pv.vector) {
            out.push(pv);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDecomposition {
    /// `α_w` in the order of the spanning set.
    pub coefficients: Vec<BigRational>,
    pub sum: BigRational,
    pub min: BigRational,
}

/// Solves `vector(x) = Σ_{w∈S} α_w · vector(w)` exactly.
///
/// Every prefix vector has total mass 1, so `Σα = 1` whenever a solution
/// exists; the coefficients may still be negative.
pub fn affine_decomposition(p: &Pfa, spanning: &[PrefixVector], x: &str) -> Result<AffineDecomposition> {
    let mut basis = Echelon::new();
    for pv in spanning {
        if !basis.insert(&pv.vector) {
            return Err(Error::InvariantViolation(format!("prefix {:?} is dependent on earlier ones", pv.prefix)));
        }
    }
    let target = prefix_vector(p, x)?;
    let coefficients = basis.express(&target.vector).ok_or(Error::NotInSpan)?;
    let sum = coefficients.iter().sum();
    let min = coefficients.iter().min().cloned().unwrap_or_else(BigRational::zero);
    Ok(AffineDecomposition { coefficients, sum, min })
}

/// Exact `Σ α_w · vector(w)`.
pub fn recombine(spanning: &[PrefixVector], alpha: &[BigRational]) -> Vec<BigRational> {
    let dim = spanning.first().map_or(0, |pv| pv.vector.len());
    let mut out = vec![BigRational::zero(); dim];
    for (a, pv) in alpha.iter().zip(spanning) {
        for (o, v) in out.iter_mut().zip(&pv.vector) {
            *o += a * v;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::super::linear::rank;
    use super::*;
    use crate::constructions::{branching_normal_form, nfa_to_pfa};
    use crate::machines::random::{random_nfa, random_word, NfaShape};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn left_tape(p: &Pfa, w: &str) -> Result<Vec<usize>> {
        let mut t = vec![p.alphabet().index(Symbol::LeftEnd).expect("endmarker")];
        t.extend(letters(p, w)?);
        Ok(t)
    }

    fn random_pfa(rng: &mut ChaCha8Rng) -> Pfa {
        let m = random_nfa(rng, &NfaShape::default());
        nfa_to_pfa(&branching_normal_form(&m)).unwrap()
    }

    #[test]
    fn empty_prefix_is_left_marker_step() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_pfa(&mut rng);
        assert_eq!(prefix_vector(&p, "").unwrap().vector, p.apply(p.initial(), 0));
    }

    #[test]
    fn stepwise_and_concatenation() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let p = random_pfa(&mut rng);
            let w = random_word(&mut rng, p.alphabet(), 4);
            let v = random_word(&mut rng, p.alphabet(), 3);
            let mut by_hand = p.initial().to_vec();
            for idx in left_tape(&p, &w).unwrap() {
                by_hand = p.apply(&by_hand, idx);
            }
            let pw = prefix_vector(&p, &w).unwrap();
            assert_eq!(pw.vector, by_hand);
            assert_eq!(pw.vector.iter().sum::<BigRational>(), BigRational::one());
            let joined = extend(&p, pw, &v).unwrap();
            assert_eq!(joined, prefix_vector(&p, &format!("{w}{v}")).unwrap());
        }
    }

    #[test]
    fn spanning_sets_are_bases() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let p = random_pfa(&mut rng);
            let prefixes = p.alphabet().strings_up_to(3);
            let s = spanning_prefix_set(&p, &prefixes).unwrap();
            let all: Vec<_> = prefixes.iter().map(|w| prefix_vector(&p, w).unwrap().vector).collect();
            assert_eq!(s.len(), rank(&all));
            assert!(s.len() <= p.num_states());
            for w in &prefixes {
                let d = affine_decomposition(&p, &s, w).unwrap();
                assert_eq!(recombine(&s, &d.coefficients), prefix_vector(&p, w).unwrap().vector);
                assert_eq!(d.sum, BigRational::one());
            }
            let d = affine_decomposition(&p, &s, &s[0].prefix).unwrap();
            assert!(d.coefficients[0].is_one() && d.coefficients[1..].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn equal_vectors_span_once() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let p = random_pfa(&mut rng);
        let same = vec![String::new(); 5];
        assert_eq!(spanning_prefix_set(&p, &same).unwrap().len(), 1);
    }
}

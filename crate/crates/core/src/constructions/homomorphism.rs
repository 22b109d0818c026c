use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::machines::{explore, Alphabet, Nfa, Symbol};

use super::complete_paths;

/// A letter-to-string map `h : Σ → Δ*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    images: Vec<(char, String)>,
}

impl Homomorphism {
    pub fn new<I, S>(images: I) -> Result<Self>
    where
        I: IntoIterator<Item = (char, S)>,
        S: Into<String>,
    {
        let images: Vec<(char, String)> = images.into_iter().map(|(c, s)| (c, s.into())).collect();
        for (i, (c, _)) in images.iter().enumerate() {
            if images[..i].iter().any(|(d, _)| d == c) {
                return Err(Error::Homomorphism(format!("letter {c:?} mapped twice")));
            }
        }
        Ok(Homomorphism { images })
    }

    pub fn image_of(&self, c: char) -> Option<&str> {
        self.images.iter().find(|(d, _)| *d == c).map(|(_, s)| s.as_str())
    }

    pub fn apply(&self, x: &str) -> Result<String> {
        x.chars().map(|c| self.image_of(c).ok_or(Error::Alphabet(c))).collect()
    }

    /// The domain, in declaration order.
    pub fn domain(&self) -> Alphabet {
        Alphabet::new(self.images.iter().map(|(c, _)| *c)).expect("letters are distinct")
    }

    /// Letters used by the images, in order of first appearance.
    pub fn codomain(&self) -> Result<Alphabet> {
        let mut seen = Vec::new();
        for c in self.images.iter().flat_map(|(_, s)| s.chars()) {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        Alphabet::new(seen)
    }

    /// `Σ_σ |h(σ)|`.
    pub fn total_length(&self) -> usize {
        self.images.iter().map(|(_, s)| s.len()).sum()
    }

    /// Errors unless no image is empty and none is a prefix of another.
    pub fn check_prefix_code(&self) -> Result<()> {
        for (i, (c, s)) in self.images.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::Homomorphism(format!("h({c}) is empty")));
            }
            for (j, (d, t)) in self.images.iter().enumerate() {
                if i != j && t.starts_with(s.as_str()) {
                    return Err(Error::Homomorphism(format!("h({c}) = {s:?} is a prefix of h({d}) = {t:?}")));
                }
            }
        }
        Ok(())
    }
}

/// 1nfa over the domain of `h` with `#N(x) = #M(h(x))`.
///
/// Each letter `a` runs `M` (with halting postponed to `◁`) over `h(a)` in one
/// step; the number of runs reaching each state becomes that many copies.
pub fn hom_image(m: &Nfa, h: &Homomorphism) -> Result<Nfa> {
    for (_, s) in &h.images {
        if let Some(c) = s.chars().find(|&c| !m.alphabet().contains(c)) {
            return Err(Error::Alphabet(c));
        }
    }
    let m = complete_paths(m);
    let run = |from: usize, word: &str| -> Vec<(usize, usize)> {
        let mut cur = BTreeMap::from([(from, 1usize)]);
        for c in word.chars() {
            let mut next = BTreeMap::new();
            for (&q, &k) in &cur {
                for &p in m.successors_on(q, Symbol::Letter(c)) {
                    *next.entry(p).or_insert(0) += k;
                }
            }
            cur = next;
        }
        cur.into_iter().collect()
    };
    Ok(explore(&h.domain(), m.start(), |&q| m.verdict(q), |&q, s| match s {
        Symbol::Letter(a) => run(q, h.image_of(a).expect("domain letter")),
        _ => m.successors_on(q, s).iter().map(|&p| (p, 1)).collect(),
    }))
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Decode {
    Run(usize, String),
    Halt(usize),
}

/// 1nfa over the image letters of a non-erasing prefix-free `h` with
/// `#N(h(x)) = #M(x)`. `N` buffers the partial image of the current letter;
/// while `M` is still running, input outside `h(Σ*)` kills the path.
pub fn hom_inverse(m: &Nfa, h: &Homomorphism) -> Result<Nfa> {
    h.check_prefix_code()?;
    let target = h.codomain()?;
    let wrap = |p: usize| if m.is_halting(p) { Decode::Halt(p) } else { Decode::Run(p, String::new()) };
    let moves = |q: usize, sym: Symbol| m.successors_on(q, sym).iter().map(|&p| (wrap(p), 1)).collect();
    Ok(explore(
        &target,
        wrap(m.start()),
        |k| match k {
            Decode::Halt(p) => m.verdict(*p),
            Decode::Run(..) => None,
        },
        |k, s| {
            let Decode::Run(q, buf) = k else { unreachable!("halting keys are not expanded") };
            match s {
                Symbol::Letter(d) => {
                    let mut next = buf.clone();
                    next.push(d);
                    if let Some((a, _)) = h.images.iter().find(|(_, w)| *w == next) {
                        if !m.alphabet().contains(*a) {
                            return vec![];
                        }
                        moves(*q, Symbol::Letter(*a))
                    } else if h.images.iter().any(|(_, w)| w.starts_with(&next)) {
                        vec![(Decode::Run(*q, next), 1)]
                    } else {
                        vec![]
                    }
                }
                _ if !buf.is_empty() => vec![],
                _ => moves(*q, s),
            }
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::testing::samples;
    use crate::machines::random::{random_homomorphism, random_prefix_code, random_word};
    use crate::semantics::count_paths;
    use num_bigint::BigUint;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn images() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for (m, _) in samples(52, 100, 0) {
            let dom = Alphabet::of("xy").unwrap();
            let h = random_homomorphism(&mut rng, &dom, m.alphabet().letters(), 3);
            let n = hom_image(&m, &h).unwrap();
            let x = random_word(&mut rng, &dom, 3);
            let y = h.apply(&x).unwrap();
            assert_eq!(count_paths(&n, &x).unwrap().accepting, count_paths(&m, &y).unwrap().accepting);
        }
    }

    #[test]
    fn identity_and_erasing_images() {
        for (m, x) in samples(53, 50, 4) {
            let id = Homomorphism::new(m.alphabet().letters().iter().map(|&c| (c, c.to_string()))).unwrap();
            assert_eq!(count_paths(&hom_image(&m, &id).unwrap(), &x).unwrap(), count_paths(&m, &x).unwrap());
            let erase = Homomorphism::new(m.alphabet().letters().iter().map(|&c| (c, ""))).unwrap();
            let n = hom_image(&m, &erase).unwrap();
            assert_eq!(count_paths(&n, &x).unwrap().accepting, count_paths(&m, "").unwrap().accepting);
        }
    }

    #[test]
    fn inverses() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for (m, x) in samples(55, 200, 4) {
            let h = random_prefix_code(&mut rng, m.alphabet());
            let n = hom_inverse(&m, &h).unwrap();
            assert!(n.num_states() <= m.num_states() * h.total_length());
            let y = h.apply(&x).unwrap();
            assert_eq!(count_paths(&n, &y).unwrap().accepting, count_paths(&m, &x).unwrap().accepting);
        }
    }

    #[test]
    fn worked_inverse() {
        let a = Alphabet::of("ab").unwrap();
        // accepts on ◁ after any input, one extra accept when the input starts with a
        let m = Nfa::from_parts(a, 3, 0, [2], [], [
            (0, Symbol::LeftEnd, 0),
            (0, Symbol::Letter('a'), 1),
            (0, Symbol::Letter('b'), 1),
            (0, Symbol::Letter('a'), 0),
            (1, Symbol::Letter('a'), 1),
            (1, Symbol::Letter('b'), 1),
            (0, Symbol::RightEnd, 2),
            (1, Symbol::RightEnd, 2),
        ])
        .unwrap();
        let h = Homomorphism::new([('a', "10"), ('b', "11")]).unwrap();
        let n = hom_inverse(&m, &h).unwrap();
        assert_eq!(count_paths(&n, "1011").unwrap().accepting, count_paths(&m, "ab").unwrap().accepting);
        assert_eq!(count_paths(&n, "1011").unwrap().accepting, BigUint::from(2u32));
        let outside = count_paths(&n, "01").unwrap();
        assert_eq!((outside.accepting.clone(), outside.improper.clone()), (0u32.into(), 1u32.into()));
        assert!(count_paths(&n, "1").unwrap().accepting == 0u32.into());
    }

    #[test]
    fn bad_codes() {
        let m = crate::constructions::constant(&Alphabet::of("ab").unwrap(), crate::Verdict::Accept);
        let erasing = Homomorphism::new([('a', ""), ('b', "1")]).unwrap();
        assert!(matches!(hom_inverse(&m, &erasing), Err(Error::Homomorphism(_))));
        let clash = Homomorphism::new([('a', "1"), ('b', "10")]).unwrap();
        assert!(matches!(hom_inverse(&m, &clash), Err(Error::Homomorphism(_))));
        let same = Homomorphism::new([('a', "1"), ('b', "1")]).unwrap();
        assert!(matches!(hom_inverse(&m, &same), Err(Error::Homomorphism(_))));
    }
}

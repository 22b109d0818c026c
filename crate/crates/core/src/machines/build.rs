use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::{Alphabet, Nfa, StateId, StateKind, Symbol, Verdict};

struct Interner<K> {
    ids: HashMap<(K, usize), StateId>,
    logical: Vec<K>,
    kinds: Vec<StateKind>,
    queue: VecDeque<StateId>,
}

impl<K: Clone + Eq + Hash> Interner<K> {
    fn intern(&mut self, k: &K, copy: usize, verdict: &mut impl FnMut(&K) -> Option<Verdict>) -> StateId {
        if let Some(&id) = self.ids.get(&(k.clone(), copy)) {
            return id;
        }
        let id = self.logical.len();
        let kind = verdict(k).map_or(StateKind::Live, StateKind::Halting);
        self.kinds.push(kind);
        self.logical.push(k.clone());
        self.ids.insert((k.clone(), copy), id);
        if kind == StateKind::Live {
            self.queue.push_back(id);
        }
        id
    }
}

/// Builds an [`Nfa`] by breadth-first exploration of an abstract state space.
///
/// `step` returns successors with multiplicities. A successor `k` with
/// multiplicity `m` becomes `m` distinct states `(k, 0..m)` that share `k`'s
/// behaviour, so path counts survive even though δ is set-valued. Repeated
/// entries for the same key are added together.
pub fn explore<K, V, S>(alphabet: &Alphabet, start: K, mut verdict: V, mut step: S) -> Nfa
where
    K: Clone + Eq + Hash,
    V: FnMut(&K) -> Option<Verdict>,
    S: FnMut(&K, Symbol) -> Vec<(K, usize)>,
{
    let mut st = Interner { ids: HashMap::new(), logical: Vec::new(), kinds: Vec::new(), queue: VecDeque::new() };
    let start_id = st.intern(&start, 0, &mut verdict);
    let width = alphabet.tape_size();
    let mut delta: Vec<Vec<Vec<StateId>>> = Vec::new();
    // copies of one logical key share their successor lists
    let mut cache: HashMap<K, Vec<Vec<(K, usize)>>> = HashMap::new();

    while let Some(id) = st.queue.pop_front() {
        let k = st.logical[id].clone();
        if !cache.contains_key(&k) {
            let rows = (0..width)
                .map(|i| merge(step(&k, alphabet.symbol(i))))
                .collect();
            cache.insert(k.clone(), rows);
        }
        let rows = cache[&k].clone();
        let mut out = Vec::with_capacity(width);
        for row in rows {
            let mut succ = Vec::new();
            for (k2, m) in row {
                for copy in 0..m {
                    succ.push(st.intern(&k2, copy, &mut verdict));
                }
            }
            out.push(succ);
        }
        if delta.len() <= id {
            delta.resize_with(id + 1, Vec::new);
        }
        delta[id] = out;
    }
    delta.resize_with(st.kinds.len(), Vec::new);
    for row in delta.iter_mut() {
        row.resize_with(width, Vec::new);
    }
    Nfa::from_table(alphabet.clone(), start_id, st.kinds, delta).expect("explored machine is well formed")
}

fn merge<K: Clone + Eq + Hash>(succ: Vec<(K, usize)>) -> Vec<(K, usize)> {
    let mut order: Vec<(K, usize)> = Vec::with_capacity(succ.len());
    let mut pos: HashMap<K, usize> = HashMap::new();
    for (k, m) in succ {
        if m == 0 {
            continue;
        }
        match pos.get(&k) {
            Some(&i) => order[i].1 += m,
            None => {
                pos.insert(k.clone(), order.len());
                order.push((k, m));
            }
        }
    }
    order
}

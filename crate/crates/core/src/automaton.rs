//! Complete deterministic finite automata over a letter alphabet `0..k`.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::algebra::{transfer_count, CountMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: usize,
    transitions: Vec<Vec<usize>>,
    start: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// # Panics
    /// If the table is not total or refers to missing states.
    pub fn new(alphabet: usize, transitions: Vec<Vec<usize>>, start: usize, accepting: Vec<bool>) -> Self {
        let n = transitions.len();
        assert_eq!(accepting.len(), n, "one acceptance flag per state");
        assert!(start < n, "start state out of range");
        for row in &transitions {
            assert_eq!(row.len(), alphabet, "transition table must be total");
            assert!(row.iter().all(|&t| t < n), "transition target out of range");
        }
        Dfa { alphabet, transitions, start, accepting }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.transitions[state][letter]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    /// State reached after reading `word` from the start state.
    pub fn run(&self, word: &[usize]) -> usize {
        word.iter().fold(self.start, |q, &a| self.next(q, a))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.accepting[self.run(word)]
    }

    /// Non-accepting states that loop to themselves on every letter.
    pub fn dead_states(&self) -> Vec<usize> {
        (0..self.state_count())
            .filter(|&q| !self.accepting[q] && self.transitions[q].iter().all(|&t| t == q))
            .collect()
    }

    /// Restriction to the states reachable from the start, renumbered in
    /// breadth-first order.
    pub fn reachable(&self) -> Dfa {
        let mut order = vec![self.start];
        let mut index = HashMap::from([(self.start, 0usize)]);
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for &t in &self.transitions[q] {
                if !index.contains_key(&t) {
                    index.insert(t, order.len());
                    order.push(t);
                }
            }
            i += 1;
        }
        let transitions = order.iter().map(|&q| self.transitions[q].iter().map(|t| index[t]).collect()).collect();
        let accepting = order.iter().map(|&q| self.accepting[q]).collect();
        Dfa::new(self.alphabet, transitions, 0, accepting)
    }

    /// Minimal complete automaton for the same language (Moore refinement).
    pub fn minimize(&self) -> Dfa {
        let dfa = self.reachable();
        let n = dfa.state_count();
        let mut class: Vec<usize> = dfa.accepting.iter().map(|&a| a as usize).collect();
        let mut classes = if class.iter().all(|&c| c == class[0]) { 1 } else { 2 };
        if classes == 1 {
            class = vec![0; n];
        }
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = Vec::with_capacity(n);
            for q in 0..n {
                let mut sig = Vec::with_capacity(dfa.alphabet + 1);
                sig.push(class[q]);
                sig.extend(dfa.transitions[q].iter().map(|&t| class[t]));
                let fresh = ids.len();
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            let count = ids.len();
            class = next;
            if count == classes {
                break;
            }
            classes = count;
        }
        let mut transitions = vec![Vec::new(); classes];
        let mut accepting = vec![false; classes];
        for q in 0..n {
            if transitions[class[q]].is_empty() {
                transitions[class[q]] = dfa.transitions[q].iter().map(|&t| class[t]).collect();
                accepting[class[q]] = dfa.accepting[q];
            }
        }
        Dfa::new(dfa.alphabet, transitions, class[dfa.start], accepting).reachable()
    }

    /// Whether both automata accept the same language, by a breadth-first
    /// search of the product automaton for a distinguishing state pair.
    pub fn same_language(&self, other: &Dfa) -> bool {
        self.distinguishing_word(other).is_none()
    }

    /// A shortest word accepted by exactly one of the two automata.
    pub fn distinguishing_word(&self, other: &Dfa) -> Option<Vec<usize>> {
        assert_eq!(self.alphabet, other.alphabet, "alphabets differ");
        let start = (self.start, other.start);
        let mut parent: HashMap<(usize, usize), Option<((usize, usize), usize)>> = HashMap::from([(start, None)]);
        let mut queue = VecDeque::from([start]);
        while let Some(pair) = queue.pop_front() {
            if self.accepting[pair.0] != other.accepting[pair.1] {
                let mut word = Vec::new();
                let mut cur = pair;
                while let Some(Some((prev, a))) = parent.get(&cur) {
                    word.push(*a);
                    cur = *prev;
                }
                word.reverse();
                return Some(word);
            }
            for a in 0..self.alphabet {
                let succ = (self.next(pair.0, a), other.next(pair.1, a));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(succ) {
                    e.insert(Some((pair, a)));
                    queue.push_back(succ);
                }
            }
        }
        None
    }

    pub fn count_matrix(&self) -> CountMatrix {
        let n = self.state_count();
        let edges = self.transitions.iter().enumerate().flat_map(|(q, row)| row.iter().map(move |&t| (q, t)));
        CountMatrix::from_edges(n, edges, self.start, &self.accepting)
    }

    /// Number of accepted words of each length `0..=n`.
    pub fn counts(&self, n: usize) -> Vec<BigUint> {
        transfer_count(&self.count_matrix(), n)
    }

    /// Accepted words of length exactly `len`, in lexicographic order.
    /// Only for small instances.
    pub fn accepted_words(&self, len: usize) -> Vec<Vec<usize>> {
        let mut layer: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), self.start)];
        for _ in 0..len {
            let mut next = Vec::new();
            for (w, q) in &layer {
                for a in 0..self.alphabet {
                    let t = self.next(*q, a);
                    if self.is_live(t) {
                        let mut v = w.clone();
                        v.push(a);
                        next.push((v, t));
                    }
                }
            }
            layer = next;
        }
        layer.into_iter().filter(|(_, q)| self.accepting[*q]).map(|(w, _)| w).collect()
    }

    /// Rejected words of length `<= max_len` all of whose proper factors are
    /// accepted. For a factor-closed language these are exactly its minimal
    /// forbidden factors.
    pub fn minimal_rejected_words(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for a in 0..self.alphabet {
                    let mut v = w.clone();
                    v.push(a);
                    if self.accepts(&v) {
                        next.push(v);
                    } else if self.accepts(&v[1..]) {
                        out.push(v);
                    }
                }
            }
            layer = next;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn is_live(&self, q: usize) -> bool {
        self.accepting[q] || !self.transitions[q].iter().all(|&t| t == q)
    }
}

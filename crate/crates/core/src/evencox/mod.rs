//! Triangle-free even Coxeter systems.
//!
//! A word is geodesic exactly when it has no factor `s · a_{t1,s} ⋯ a_{tk,s} · s`
//! with `k >= 0` and consecutive `t_i` distinct, where `a_{t,s}` is the
//! alternating word `t s t ⋯ t` of length `m_{s,t} - 1`. These factors are the
//! forbidden words. Geodesic words are counted with a scanner automaton for
//! that factor-avoidance language, and words built by overlapping forbidden
//! words (chains) are enumerated separately.

mod chains;
mod compare;
mod scanner;

use std::fmt;

use num_bigint::BigUint;

pub use chains::{
    amalgamate, chain_from_sequence, check_r_conditions, count_r_sequences, enumerate_rigid_chains, growth_from_chains, is_rigid, Chain,
    ChainTable,
};
pub use compare::{compare_graphs, compare_systems, ComparisonReport, SystemSummary};
pub use scanner::{build_scanner, minimal_scanner};

use crate::algebra::RationalSeries;
use crate::coxgraph::CoxeterGraph;
use crate::error::{Error, Result};
use crate::racg::{series_from_counts, terms_for_bound};

/// A word over the generators, stored as vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_suffix_of(&self, w: &Word) -> bool {
        w.0.ends_with(&self.0)
    }

    pub fn is_prefix_of(&self, w: &Word) -> bool {
        w.0.starts_with(&self.0)
    }

    /// Parses letters separated by whitespace, commas, dots or dashes. Without
    /// separators, every character is a letter (all names must then be one
    /// character long).
    pub fn parse(g: &CoxeterGraph, text: &str) -> Result<Word> {
        let text = text.trim();
        let tokens: Vec<String> = if text.contains(|c: char| c.is_whitespace() || ",.-".contains(c)) {
            text.split(|c: char| c.is_whitespace() || ",.-".contains(c))
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect()
        } else if g.index_of(text).is_some() {
            vec![text.to_string()]
        } else {
            text.chars().map(|c| c.to_string()).collect()
        };
        tokens
            .iter()
            .map(|t| g.index_of(t).ok_or_else(|| Error::UnknownLetter(t.clone())))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Renders with vertex names: concatenated when all names are single
    /// characters, space separated otherwise.
    pub fn spell(&self, g: &CoxeterGraph) -> String {
        let sep = if g.names().iter().all(|n| n.chars().count() == 1) { "" } else { " " };
        self.0.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(sep)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A triangle-free even Coxeter system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenSystem {
    graph: CoxeterGraph,
}

impl EvenSystem {
    pub fn new(graph: CoxeterGraph) -> Result<Self> {
        if let Some((a, b, c)) = graph.find_triangle() {
            return Err(Error::NotTriangleFree(graph.name(a).into(), graph.name(b).into(), graph.name(c).into()));
        }
        Ok(EvenSystem { graph })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn generator_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// `m_{s,t}`, or `None` when `s` and `t` are not adjacent.
    pub fn label(&self, s: usize, t: usize) -> Option<u64> {
        self.graph.label(s, t)
    }

    /// Neighbours of `s`, i.e. the `t` with `a_{t,s}` in `A(s)`.
    pub fn link(&self, s: usize) -> Vec<usize> {
        self.graph.neighbors(s)
    }

    /// `a_{t,s} = (t, s, t, ..., t)` of length `m_{s,t} - 1`.
    pub fn a_word(&self, t: usize, s: usize) -> Result<Word> {
        let m = self
            .label(s, t)
            .ok_or_else(|| Error::NotAdjacent(self.graph.name(t).into(), self.graph.name(s).into()))?;
        Ok(Word((0..m as usize - 1).map(|i| if i % 2 == 0 { t } else { s }).collect()))
    }

    /// `A(s)`: the words `a_{t,s}` for `t` adjacent to `s`.
    pub fn a_words(&self, s: usize) -> Vec<(usize, Word)> {
        self.link(s).into_iter().map(|t| (t, self.a_word(t, s).expect("adjacent"))).collect()
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        Word::parse(&self.graph, text)
    }

    fn check_letters(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&v| v >= self.generator_count()) {
            Some(v) => Err(Error::UnknownLetter(format!("#{v}"))),
            None => Ok(()),
        }
    }

    /// Whether `w` avoids every forbidden factor.
    pub fn is_geodesic(&self, w: &Word) -> Result<bool> {
        self.check_letters(w)?;
        Ok(minimal_scanner(self).accepts(w.letters()))
    }

    /// If `w` is a forbidden word `s · a_{t1,s} ⋯ a_{tk,s} · s`, returns `s` and `(t1, ..., tk)`.
    pub fn forbidden_shape(&self, w: &Word) -> Option<(usize, Vec<usize>)> {
        let l = w.letters();
        if l.len() < 2 || l[0] != l[l.len() - 1] || l.iter().any(|&v| v >= self.generator_count()) {
            return None;
        }
        let s = l[0];
        let inner = &l[1..l.len() - 1];
        let mut blocks = Vec::new();
        let mut p = 0;
        while p < inner.len() {
            let t = inner[p];
            let a = self.a_word(t, s).ok()?;
            if blocks.last() == Some(&t) || !inner[p..].starts_with(a.letters()) {
                return None;
            }
            blocks.push(t);
            p += a.len();
        }
        Some((s, blocks))
    }

    pub fn is_forbidden(&self, w: &Word) -> bool {
        self.forbidden_shape(w).is_some()
    }

    /// Every forbidden word of length `<= max_len`, ordered by length then letters.
    pub fn forbidden_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for s in 0..self.generator_count() {
            let blocks = self.a_words(s);
            let mut stack: Vec<(Vec<usize>, Option<usize>)> = vec![(vec![s], None)];
            while let Some((prefix, last)) = stack.pop() {
                if prefix.len() < max_len {
                    let mut w = prefix.clone();
                    w.push(s);
                    out.push(Word(w));
                }
                for (t, a) in &blocks {
                    if Some(*t) != last && prefix.len() + a.len() < max_len {
                        let mut next = prefix.clone();
                        next.extend_from_slice(a.letters());
                        stack.push((next, Some(*t)));
                    }
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

/// Geodesic counts of lengths `0..=n`.
pub fn count_geodesics_even(sys: &EvenSystem, n: usize) -> Vec<BigUint> {
    minimal_scanner(sys).counts(n)
}

/// Exact geodesic growth series, fitted with the scanner's state count as bound.
pub fn growth_series_even(sys: &EvenSystem) -> Result<RationalSeries> {
    let dfa = minimal_scanner(sys);
    let bound = dfa.state_count();
    series_from_counts(&dfa.counts(terms_for_bound(bound) - 1), bound)
}

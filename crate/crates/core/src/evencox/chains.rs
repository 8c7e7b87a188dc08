//! Chains: words obtained by gluing forbidden words along overlaps.
//!
//! A chain of rank `m` is `w = (⋯(u_1 *_{z_1} u_2) ⋯) *_{z_{m-1}} u_m` with
//! forbidden `u_i`, non-empty overlaps `z_i` (suffix of `u_i`, prefix of
//! `u_{i+1}`), `z_1 != u_1` and `|z_i| + |z_{i+1}| <= |u_{i+1}|`. It is rigid
//! when the forbidden factors of `w` are exactly the staggered `u_i`: for rank
//! 2 the whole word contains only `u_1` and `u_2`, and for rank `m >= 3` the
//! prefix chain is rigid and the part of `w` after the occurrence of
//! `u_{m-2}` contains only `u_m`.
//!
//! In a triangle-free even system the rigid chains correspond one to one to
//! sequences of forbidden words satisfying three local conditions:
//!
//! * R1: consecutive words starting with the same letter `s` include `(s, s)`;
//! * R2: if `u_i` starts with `s` and `u_{i+1}` with `t != s`, then `u_i` ends
//!   with `a_{t,s} s` and `u_{i+1}` starts with `t a_{s,t}`;
//! * R3: for letters `t, s, t` of `u_{i-1}, u_i, u_{i+1}` with `s != t`,
//!   `|u_i| > 2 + 2 |a_{t,s}|`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{EvenSystem, Word};
use crate::error::{Error, Result};

/// Glues `w1` and `w2` along `z`, which must be a suffix of `w1` and a prefix of `w2`.
pub fn amalgamate(w1: &Word, z: &Word, w2: &Word) -> Result<Word> {
    if !z.is_suffix_of(w1) || !z.is_prefix_of(w2) {
        return Err(Error::InvalidOverlap { left: w1.to_string(), overlap: z.to_string(), right: w2.to_string() });
    }
    let mut letters = w1.letters().to_vec();
    letters.extend_from_slice(&w2.letters()[z.len()..]);
    Ok(Word::new(letters))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub word: Word,
    pub forbidden: Vec<Word>,
    pub overlaps: Vec<Word>,
    /// Start of each `u_i` inside `word`.
    pub positions: Vec<usize>,
}

impl Chain {
    pub fn rank(&self) -> usize {
        self.forbidden.len()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn span(&self, i: usize) -> (usize, usize) {
        (self.positions[i], self.positions[i] + self.forbidden[i].len())
    }
}

fn shapes(sys: &EvenSystem, seq: &[Word]) -> Result<Vec<(usize, Vec<usize>)>> {
    seq.iter()
        .enumerate()
        .map(|(i, w)| {
            sys.forbidden_shape(w).ok_or_else(|| Error::NotForbidden { index: i + 1, word: w.spell(sys.graph()) })
        })
        .collect()
}

/// First violated condition, if any, as `"R1 at 2"` style text (1-based).
fn r_violation(sys: &EvenSystem, seq: &[Word]) -> Result<Option<String>> {
    let shapes = shapes(sys, seq)?;
    for i in 0..seq.len().saturating_sub(1) {
        if let Some(r) = pair_violation(sys, &shapes[i], &shapes[i + 1]) {
            return Ok(Some(format!("{r} at positions {} and {}", i + 1, i + 2)));
        }
    }
    for i in 1..seq.len().saturating_sub(1) {
        if !triple_ok(sys, shapes[i - 1].0, &shapes[i], shapes[i + 1].0, seq[i].len()) {
            return Ok(Some(format!("R3 at positions {}, {} and {}", i, i + 1, i + 2)));
        }
    }
    Ok(None)
}

fn pair_violation(sys: &EvenSystem, a: &(usize, Vec<usize>), b: &(usize, Vec<usize>)) -> Option<&'static str> {
    let (s, t) = (a.0, b.0);
    if s == t {
        (!a.1.is_empty() && !b.1.is_empty()).then_some("R1")
    } else {
        let ok = sys.label(s, t).is_some() && a.1.last() == Some(&t) && b.1.first() == Some(&s);
        (!ok).then_some("R2")
    }
}

fn triple_ok(sys: &EvenSystem, prev: usize, mid: &(usize, Vec<usize>), next: usize, mid_len: usize) -> bool {
    let s = mid.0;
    if prev != next || prev == s {
        return true;
    }
    match sys.label(s, prev) {
        Some(m) => mid_len > 2 + 2 * (m as usize - 1),
        None => true,
    }
}

/// Whether consecutive words satisfy R1 and R2 and consecutive triples R3.
pub fn check_r_conditions(sys: &EvenSystem, seq: &[Word]) -> Result<bool> {
    Ok(r_violation(sys, seq)?.is_none())
}

/// The overlap forced between consecutive words of an R-valid sequence:
/// `(s)` for equal first letters, `(t, a_{s,t})` otherwise.
fn forced_overlap(sys: &EvenSystem, s: usize, t: usize) -> Word {
    if s == t {
        Word::new(vec![s])
    } else {
        Word::new(vec![t]).concat(&sys.a_word(s, t).expect("R2 forces adjacency"))
    }
}

/// Builds the unique chain with the given forbidden words, which must
/// satisfy R1–R3, and verifies it is rigid by scanning its factors.
pub fn chain_from_sequence(sys: &EvenSystem, seq: &[Word]) -> Result<Chain> {
    if seq.is_empty() {
        return Err(Error::Usage("a chain needs at least one forbidden word".into()));
    }
    if let Some(v) = r_violation(sys, seq)? {
        return Err(Error::ConditionViolated(v));
    }
    let overlaps: Vec<Word> = seq
        .windows(2)
        .map(|p| forced_overlap(sys, p[0].first().expect("non-empty"), p[1].first().expect("non-empty")))
        .collect();
    let chain = assemble(seq, &overlaps)?;
    if !is_rigid(sys, &chain) {
        return Err(Error::ChainInvariant("the chain is not rigid".into()));
    }
    Ok(chain)
}

/// Checks the chain conditions on overlaps and amalgamates.
fn assemble(seq: &[Word], overlaps: &[Word]) -> Result<Chain> {
    if overlaps.first().is_some_and(|z| z == &seq[0]) {
        return Err(Error::ChainInvariant("the first overlap is the whole first word".into()));
    }
    for i in 1..overlaps.len() {
        if overlaps[i - 1].len() + overlaps[i].len() > seq[i].len() {
            return Err(Error::ChainInvariant(format!("overlaps {} and {} cover more than word {}", i, i + 1, i + 1)));
        }
    }
    let mut word = seq[0].clone();
    let mut positions = vec![0];
    for (z, u) in overlaps.iter().zip(&seq[1..]) {
        if z.is_empty() {
            return Err(Error::ChainInvariant("empty overlap".into()));
        }
        if !z.is_suffix_of(&word) {
            return Err(Error::InvalidOverlap { left: word.to_string(), overlap: z.to_string(), right: u.to_string() });
        }
        positions.push(word.len() - z.len());
        word = amalgamate(&word, z, u)?;
    }
    Ok(Chain { word, forbidden: seq.to_vec(), overlaps: overlaps.to_vec(), positions })
}

/// Occurrences `(start, end)` of forbidden factors of `w` inside `w[lo..hi]`.
fn forbidden_occurrences(sys: &EvenSystem, w: &Word, lo: usize, hi: usize) -> BTreeSet<(usize, usize)> {
    let l = w.letters();
    let mut out = BTreeSet::new();
    for i in lo..hi {
        for j in i + 2..=hi {
            if l[j - 1] == l[i] && sys.is_forbidden(&Word::new(l[i..j].to_vec())) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Rigidity by direct factor scan.
pub fn is_rigid(sys: &EvenSystem, chain: &Chain) -> bool {
    (1..=chain.rank()).all(|k| rigid_step(sys, chain, k))
}

/// The condition added when passing from rank `k - 1` to rank `k`.
fn rigid_step(sys: &EvenSystem, chain: &Chain, k: usize) -> bool {
    match k {
        1 => sys.is_forbidden(&chain.forbidden[0]) && chain.positions[0] == 0,
        2 => {
            let end = chain.span(1).1;
            forbidden_occurrences(sys, &chain.word, 0, end) == BTreeSet::from([chain.span(0), chain.span(1)])
        }
        _ => {
            let from = chain.span(k - 3).1;
            let end = chain.span(k - 1).1;
            forbidden_occurrences(sys, &chain.word, from, end) == BTreeSet::from([chain.span(k - 1)])
        }
    }
}

/// `Q[m][n]`: number of rigid chains of rank `m` and length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainTable {
    pub max_len: usize,
    pub max_rank: usize,
    /// Row `m` (`0..=max_rank`), column `n` (`0..=max_len`); row 0 is all zero.
    pub counts: Vec<Vec<u64>>,
}

impl ChainTable {
    fn new(max_len: usize, max_rank: usize) -> Self {
        ChainTable { max_len, max_rank, counts: vec![vec![0; max_len + 1]; max_rank + 1] }
    }

    pub fn get(&self, rank: usize, len: usize) -> u64 {
        self.counts.get(rank).and_then(|r| r.get(len)).copied().unwrap_or(0)
    }

    /// Non-zero entries as `(rank, length, count)`.
    pub fn nonzero(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (m, row) in self.counts.iter().enumerate() {
            for (n, &c) in row.iter().enumerate() {
                if c > 0 {
                    out.push((m, n, c));
                }
            }
        }
        out
    }
}

/// Counts sequences of forbidden words satisfying R1–R3 by depth-first
/// extension, bounded by the length of their chain. Each such sequence has
/// exactly one chain and it is rigid, but not every rigid chain arises this
/// way: gluing `(s, ω, s)` and `(s, ω', s)` over `(s)` can be rigid when the
/// letters around the shared `s` differ, which R1 excludes.
pub fn count_r_sequences(sys: &EvenSystem, max_len: usize, max_rank: usize) -> ChainTable {
    let mut table = ChainTable::new(max_len, max_rank);
    if max_rank == 0 {
        return table;
    }
    let words: Vec<(Word, (usize, Vec<usize>))> = sys
        .forbidden_words(max_len)
        .into_iter()
        .map(|w| {
            let shape = sys.forbidden_shape(&w).expect("enumerated words are forbidden");
            (w, shape)
        })
        .collect();
    let mut path = Vec::new();
    for i in 0..words.len() {
        path.push(i);
        extend_sequence(sys, &words, &mut path, words[i].0.len(), &mut table);
        path.pop();
    }
    table
}

fn extend_sequence(
    sys: &EvenSystem,
    words: &[(Word, (usize, Vec<usize>))],
    path: &mut Vec<usize>,
    len: usize,
    table: &mut ChainTable,
) {
    table.counts[path.len()][len] += 1;
    if path.len() == table.max_rank {
        return;
    }
    let last = &words[*path.last().unwrap()];
    let before = path.len().checked_sub(2).map(|i| &words[path[i]]);
    for (j, next) in words.iter().enumerate() {
        let (s, t) = (last.1 .0, next.1 .0);
        let overlap = if s == t { 1 } else { sys.label(s, t).map_or(0, |m| m as usize) };
        if overlap == 0 || len + next.0.len() - overlap > table.max_len {
            continue;
        }
        if pair_violation(sys, &last.1, &next.1).is_some() {
            continue;
        }
        if let Some(b) = before {
            if !triple_ok(sys, b.1 .0, &last.1, t, last.0.len()) {
                continue;
            }
        }
        path.push(j);
        extend_sequence(sys, words, path, len + next.0.len() - overlap, table);
        path.pop();
    }
}

/// `Q[m][n]` straight from the definitions: every sequence of forbidden words
/// is glued along every admissible overlap and kept while each extension
/// passes the factor-scan rigidity test.
pub fn enumerate_rigid_chains(sys: &EvenSystem, max_len: usize, max_rank: usize) -> ChainTable {
    let mut table = ChainTable::new(max_len, max_rank);
    if max_rank == 0 {
        return table;
    }
    let words = sys.forbidden_words(max_len);
    let mut by_first: HashMap<usize, Vec<&Word>> = HashMap::new();
    for w in &words {
        by_first.entry(w.first().expect("non-empty")).or_default().push(w);
    }
    for u in &words {
        let chain = Chain { word: u.clone(), forbidden: vec![u.clone()], overlaps: vec![], positions: vec![0] };
        grow_chain(sys, &by_first, chain, &mut table);
    }
    table
}

fn grow_chain(sys: &EvenSystem, by_first: &HashMap<usize, Vec<&Word>>, chain: Chain, table: &mut ChainTable) {
    table.counts[chain.rank()][chain.len()] += 1;
    if chain.rank() == table.max_rank {
        return;
    }
    let last = chain.forbidden.last().unwrap();
    let start = *chain.positions.last().unwrap();
    let previous_overlap = chain.overlaps.last().map_or(0, Word::len);
    for k in 1..=last.len() {
        if chain.rank() == 1 && k == last.len() {
            continue;
        }
        if previous_overlap + k > last.len() {
            break;
        }
        let z = &last.letters()[last.len() - k..];
        for &u in by_first.get(&z[0]).into_iter().flatten() {
            if u.len() < k || &u.letters()[..k] != z || chain.len() + u.len() - k > table.max_len {
                continue;
            }
            let mut next = chain.clone();
            next.positions.push(start + last.len() - k);
            next.overlaps.push(Word::new(z.to_vec()));
            next.forbidden.push(u.clone());
            next.word = amalgamate(&chain.word, &Word::new(z.to_vec()), u).expect("overlap matches");
            if rigid_step(sys, &next, next.rank()) {
                grow_chain(sys, by_first, next, table);
            }
        }
    }
}

/// Geodesic counts `0..=n` recovered from a chain table:
/// the growth series is `1 / (1 - |S| z + Σ_m (-1)^(m+1) Q_m(z))`. Needs
/// `max_len >= n` and `max_rank >= n - 1` so that every chain of length at
/// most `n` is counted.
pub fn growth_from_chains(table: &ChainTable, generators: usize, n: usize) -> Result<Vec<BigInt>> {
    if table.max_len < n || table.max_rank + 1 < n {
        return Err(Error::Usage(format!(
            "a chain table up to length {n} and rank {} is needed",
            n.saturating_sub(1)
        )));
    }
    let mut d = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::one();
    if n >= 1 {
        d[1] -= generators;
    }
    for (m, row) in table.counts.iter().enumerate().skip(1) {
        for (len, &c) in row.iter().enumerate().take(n + 1) {
            if m % 2 == 1 {
                d[len] += c;
            } else {
                d[len] -= c;
            }
        }
    }
    let mut g: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut x = if i == 0 { BigInt::one() } else { BigInt::zero() };
        for j in 1..=i {
            x -= &d[j] * &g[i - j];
        }
        g.push(x);
    }
    Ok(g)
}

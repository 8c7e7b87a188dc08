use std::collections::{BTreeSet, HashMap};

use super::EvenSystem;
use crate::automaton::Dfa;

/// Positions of the pattern automaton for forbidden words starting with `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Item {
    /// Just read the initial `s`.
    Start(usize),
    /// Read `pos` letters of the block `a_{t,s}`: `(s, t, pos)`.
    Block(usize, usize, usize),
}

/// Accepts the words with no forbidden factor.
///
/// Each generator `s` has a pattern automaton reading `s`, then blocks
/// `a_{t,s}` with no two consecutive `t` equal, then a closing `s`. The union
/// of these patterns, restarted at every position, is determinized; any
/// subset in which a pattern completed collapses to one absorbing fail state.
pub fn build_scanner(sys: &EvenSystem) -> Dfa {
    let n = sys.generator_count();
    let block_len: HashMap<(usize, usize), usize> = (0..n)
        .flat_map(|s| sys.link(s).into_iter().map(move |t| (s, t)))
        .map(|(s, t)| ((s, t), sys.label(s, t).expect("adjacent") as usize - 1))
        .collect();

    // None means a forbidden word was completed
    let step = |items: &BTreeSet<Item>, x: usize| -> Option<BTreeSet<Item>> {
        let mut next = BTreeSet::from([Item::Start(x)]);
        for &item in items {
            match item {
                Item::Start(s) => {
                    if x == s {
                        return None;
                    }
                    if block_len.contains_key(&(s, x)) {
                        next.insert(Item::Block(s, x, 1));
                    }
                }
                Item::Block(s, t, pos) => {
                    if pos < block_len[&(s, t)] {
                        let expected = if pos % 2 == 0 { t } else { s };
                        if x == expected {
                            next.insert(Item::Block(s, t, pos + 1));
                        }
                    } else if x == s {
                        return None;
                    } else if x != t && block_len.contains_key(&(s, x)) {
                        next.insert(Item::Block(s, x, 1));
                    }
                }
            }
        }
        Some(next)
    };

    let mut states: Vec<BTreeSet<Item>> = vec![BTreeSet::new()];
    let mut index: HashMap<BTreeSet<Item>, usize> = HashMap::from([(BTreeSet::new(), 0)]);
    let mut rows: Vec<Vec<Option<usize>>> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let mut row = Vec::with_capacity(n);
        for x in 0..n {
            row.push(step(&states[i], x).map(|next| {
                *index.entry(next.clone()).or_insert_with(|| {
                    states.push(next);
                    states.len() - 1
                })
            }));
        }
        rows.push(row);
        i += 1;
    }
    let fail = states.len();
    let mut transitions: Vec<Vec<usize>> = rows.into_iter().map(|r| r.into_iter().map(|t| t.unwrap_or(fail)).collect()).collect();
    transitions.push(vec![fail; n]);
    let mut accepting = vec![true; fail];
    accepting.push(false);
    Dfa::new(n, transitions, 0, accepting)
}

/// The minimal automaton for the geodesic language.
pub fn minimal_scanner(sys: &EvenSystem) -> Dfa {
    build_scanner(sys).minimize()
}

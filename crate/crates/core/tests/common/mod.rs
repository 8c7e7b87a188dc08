#![allow(dead_code)]

use std::path::PathBuf;

use geogrowth::coxgraph::CoxeterGraph;
use geogrowth::evencox::{EvenSystem, Word};
use geogrowth::oracle;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const BUDGET: usize = 200_000;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(format!("{name}.graph"))
}

pub fn corpus(name: &str) -> CoxeterGraph {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    CoxeterGraph::parse(&text).unwrap()
}

pub const RIGHT_ANGLED: &[&str] =
    &["single", "k2", "p3", "c4", "c6", "hexagon", "c8", "two_c4", "k3k3", "petersen", "cube", "k33", "hexagon_double"];
pub const LABELLED: &[&str] = &["dihedral4", "squares24", "octagon24", "octagon42", "squares44", "octagon44"];

/// Corpus systems used by the word-level property suites.
pub const PROPERTY_SYSTEMS: &[&str] =
    &["c6", "c8", "k3k3", "petersen", "cube", "k33", "dihedral4", "squares24", "octagon24", "squares44", "octagon44"];

/// Triangle-free property systems, for statements about even systems.
pub const EVEN_SYSTEMS: &[&str] =
    &["c6", "c8", "petersen", "cube", "k33", "dihedral4", "squares24", "octagon24", "squares44", "octagon44"];

pub fn system_and_word(systems: &'static [&'static str], max_len: usize) -> impl Strategy<Value = (CoxeterGraph, Word)> {
    (0..systems.len(), prop::collection::vec(any::<u16>(), 0..=max_len)).prop_map(move |(i, raw)| {
        let g = corpus(systems[i]);
        let k = g.vertex_count();
        let w = Word::new(raw.into_iter().map(|x| x as usize % k).collect());
        (g, w)
    })
}

/// A geodesic word built letter by letter, skipping letters that would
/// break geodesicity.
pub fn geodesic_from(g: &CoxeterGraph, raw: &[u16], max_len: usize) -> Word {
    let k = g.vertex_count();
    let mut letters = Vec::new();
    for &x in raw {
        if letters.len() == max_len {
            break;
        }
        letters.push(x as usize % k);
        if !oracle::oracle_is_geodesic(g, &Word::new(letters.clone()), BUDGET).unwrap() {
            letters.pop();
        }
    }
    Word::new(letters)
}

fn parity(k: usize, w: &[usize]) -> Vec<bool> {
    let mut v = vec![false; k];
    for &x in w {
        v[x] = !v[x];
    }
    v
}

/// Braid moves keep length and the mod-2 letter counts; so does deleting a square.
pub fn braid_invariants((g, w): (CoxeterGraph, Word)) -> Result<(), TestCaseError> {
    let k = g.vertex_count();
    let p = parity(k, w.letters());
    for v in oracle::braid_neighbors(&g, w.letters()) {
        prop_assert_eq!(v.len(), w.len());
        prop_assert_eq!(parity(k, &v), p.clone());
    }
    for i in 0..w.len().saturating_sub(1) {
        if w.letters()[i] == w.letters()[i + 1] {
            let mut v = w.letters().to_vec();
            v.drain(i..i + 2);
            prop_assert_eq!(parity(k, &v), p.clone());
        }
    }
    let class = oracle::braid_class(&g, &w, BUDGET).unwrap();
    for v in &class.visited {
        prop_assert_eq!(parity(k, v.letters()), p.clone());
    }
    Ok(())
}

/// Appending a letter changes the length of the element by exactly one.
pub fn plus_minus_one((g, w, s): (CoxeterGraph, Word, usize)) -> Result<(), TestCaseError> {
    let s = s % g.vertex_count();
    let a = oracle::element_length(&g, &w, BUDGET).unwrap() as i64;
    let ws = w.concat(&Word::new(vec![s]));
    let b = oracle::element_length(&g, &ws, BUDGET).unwrap() as i64;
    prop_assert_eq!((a - b).abs(), 1, "{:?} then {}", w, s);
    Ok(())
}

/// Spelling a geodesic word over `{s} ∪ A(s)` (no two equal consecutive
/// `a`-letters, at most one `s`) gives a geodesic word over the generators.
pub fn centralizer_words((g, s, picks, with_s, at): (CoxeterGraph, usize, Vec<u16>, bool, u16)) -> Result<(), TestCaseError> {
    let sys = EvenSystem::new(g.clone()).unwrap();
    let s = s % g.vertex_count();
    let a = sys.a_words(s);
    if a.is_empty() {
        return Ok(());
    }
    let mut blocks: Vec<usize> = Vec::new();
    for p in picks {
        let i = p as usize % a.len();
        if blocks.last() != Some(&i) {
            blocks.push(i);
        }
    }
    let mut parts: Vec<Vec<usize>> = blocks.iter().map(|&i| a[i].1.letters().to_vec()).collect();
    if with_s {
        let pos = at as usize % (parts.len() + 1);
        parts.insert(pos, vec![s]);
    }
    let w = Word::new(parts.concat());
    prop_assert!(oracle::oracle_is_geodesic(&g, &w, BUDGET).unwrap(), "{}", w.spell(&g));
    Ok(())
}

/// Prefixes of geodesic words are geodesic.
pub fn prefix_closed((g, w): (CoxeterGraph, Word)) -> Result<(), TestCaseError> {
    if oracle::oracle_is_geodesic(&g, &w, BUDGET).unwrap() {
        for i in 0..w.len() {
            let p = Word::new(w.letters()[..i].to_vec());
            prop_assert!(oracle::oracle_is_geodesic(&g, &p, BUDGET).unwrap());
        }
    }
    Ok(())
}

/// If `s w` and `w t` are geodesic but `s w t` is not, then `s = t` and
/// `s w t` represents the same element as `w`. Checked for every pair `s, t`.
pub fn deletion_law((g, raw, max_len): (CoxeterGraph, Vec<u16>, usize)) -> Result<(), TestCaseError> {
    let w = geodesic_from(&g, &raw, max_len);
    let k = g.vertex_count();
    for s in 0..k {
        let sw = Word::new(vec![s]).concat(&w);
        if !oracle::oracle_is_geodesic(&g, &sw, BUDGET).unwrap() {
            continue;
        }
        for t in 0..k {
            let wt = w.concat(&Word::new(vec![t]));
            let swt = sw.concat(&Word::new(vec![t]));
            if oracle::oracle_is_geodesic(&g, &wt, BUDGET).unwrap() && !oracle::oracle_is_geodesic(&g, &swt, BUDGET).unwrap() {
                prop_assert_eq!(s, t);
                prop_assert!(oracle::same_element(&g, &swt, &w, BUDGET).unwrap());
            }
        }
    }
    Ok(())
}

pub fn letter_strategy(systems: &'static [&'static str], max_len: usize) -> impl Strategy<Value = (CoxeterGraph, Word, usize)> {
    (system_and_word(systems, max_len), any::<usize>()).prop_map(|((g, w), s)| (g, w, s))
}

pub fn centralizer_strategy() -> impl Strategy<Value = (CoxeterGraph, usize, Vec<u16>, bool, u16)> {
    (0..EVEN_SYSTEMS.len(), any::<usize>(), prop::collection::vec(any::<u16>(), 0..6), any::<bool>(), any::<u16>())
        .prop_map(|(i, s, p, b, at)| (corpus(EVEN_SYSTEMS[i]), s, p, b, at))
}

pub fn deletion_strategy() -> impl Strategy<Value = (CoxeterGraph, Vec<u16>, usize)> {
    (0..PROPERTY_SYSTEMS.len(), prop::collection::vec(any::<u16>(), 8..32), 2usize..=6)
        .prop_map(|(i, raw, n)| (corpus(PROPERTY_SYSTEMS[i]), raw, n))
}

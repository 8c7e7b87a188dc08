//! Ground truth for geodesic counts, with no automaton involved.
//!
//! * Braid moves: a word in a Coxeter group is geodesic exactly when no word
//!   reachable from it by braid moves (swapping an alternating factor
//!   `s t s ⋯` of length `m_{s,t}` for `t s t ⋯`) contains a square `s s`.
//!   Classes are explored breadth-first under a size budget.
//! * Reflection representation: `w s` is geodesic iff `w(α_s)` is a positive
//!   root. Geodesic words of length `a + b` split as `x y` with `x`, `y`
//!   geodesic and the inversion sets of `x⁻¹` and `y` disjoint, which gives
//!   an exact meet-in-the-middle count. Labels 2 and 4 only, so that all
//!   roots have coordinates in `Z[√2]`.
//! * Right-angled Artin groups: a word over `x, x⁻¹` is geodesic iff no
//!   sequence of swaps of commuting neighbours produces `x x⁻¹` or `x⁻¹ x`.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;

use crate::coxgraph::CoxeterGraph;
use crate::error::{Error, Result};
use crate::evencox::Word;

/// Default cap on the number of words explored per braid class.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Words reachable from `seed` by braid moves.
#[derive(Clone, Debug)]
pub struct BraidClass {
    pub seed: Word,
    pub visited: Vec<Word>,
    /// Some member has two equal adjacent letters.
    pub reducible: bool,
}

fn has_square(w: &[usize]) -> bool {
    w.windows(2).any(|p| p[0] == p[1])
}

/// Every word obtained from `w` by one braid move.
pub fn braid_neighbors(g: &CoxeterGraph, w: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        let (s, t) = (w[i], w[i + 1]);
        if s == t {
            continue;
        }
        let Some(m) = g.label(s, t) else { continue };
        let m = m as usize;
        if i + m > w.len() || !(0..m).all(|k| w[i + k] == if k % 2 == 0 { s } else { t }) {
            continue;
        }
        let mut v = w.to_vec();
        for k in 0..m {
            v[i + k] = if k % 2 == 0 { t } else { s };
        }
        out.push(v);
    }
    out
}

/// Breadth-first closure; stops early at the first reducible word when `stop_early`.
fn explore(g: &CoxeterGraph, w: &[usize], budget: usize, stop_early: bool) -> Result<(Vec<Vec<usize>>, bool)> {
    let mut seen: HashSet<Vec<usize>> = HashSet::from([w.to_vec()]);
    let mut order = vec![w.to_vec()];
    let mut queue = VecDeque::from([w.to_vec()]);
    let mut reducible = has_square(w);
    if reducible && stop_early {
        return Ok((order, true));
    }
    while let Some(cur) = queue.pop_front() {
        for next in braid_neighbors(g, &cur) {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= budget {
                return Err(Error::BudgetExhausted { budget });
            }
            reducible |= has_square(&next);
            seen.insert(next.clone());
            order.push(next.clone());
            if reducible && stop_early {
                return Ok((order, true));
            }
            queue.push_back(next);
        }
    }
    Ok((order, reducible))
}

pub fn braid_class(g: &CoxeterGraph, w: &Word, budget: usize) -> Result<BraidClass> {
    let (visited, reducible) = explore(g, w.letters(), budget, false)?;
    Ok(BraidClass { seed: w.clone(), visited: visited.into_iter().map(Word::new).collect(), reducible })
}

/// Whether `w` is geodesic, by braid-move closure.
pub fn oracle_is_geodesic(g: &CoxeterGraph, w: &Word, budget: usize) -> Result<bool> {
    Ok(!explore(g, w.letters(), budget, true)?.1)
}

/// A geodesic word for the element `w` represents: delete squares exposed by
/// braid moves until none remain.
pub fn reduce(g: &CoxeterGraph, w: &Word, budget: usize) -> Result<Word> {
    let mut cur = w.letters().to_vec();
    loop {
        let (class, reducible) = explore(g, &cur, budget, true)?;
        if !reducible {
            return Ok(Word::new(cur));
        }
        let witness = class.last().expect("non-empty class");
        let i = witness.windows(2).position(|p| p[0] == p[1]).expect("has a square");
        let mut next = witness.clone();
        next.drain(i..i + 2);
        cur = next;
    }
}

/// Length of the element represented by `w`.
pub fn element_length(g: &CoxeterGraph, w: &Word, budget: usize) -> Result<usize> {
    Ok(reduce(g, w, budget)?.len())
}

/// Whether `u` and `v` represent the same element. Reduced words of one
/// element are connected by braid moves, so this compares braid classes of
/// reductions.
pub fn same_element(g: &CoxeterGraph, u: &Word, v: &Word, budget: usize) -> Result<bool> {
    let (ru, rv) = (reduce(g, u, budget)?, reduce(g, v, budget)?);
    if ru.len() != rv.len() {
        return Ok(false);
    }
    let (class, _) = explore(g, ru.letters(), budget, false)?;
    Ok(class.iter().any(|x| x == rv.letters()))
}

/// Geodesic counts of lengths `0..=n` by enumerating words with prefix
/// pruning and testing each by braid-move closure.
pub fn oracle_counts(g: &CoxeterGraph, n: usize, budget: usize) -> Result<Vec<BigUint>> {
    let k = g.vertex_count();
    let mut counts = vec![BigUint::from(1u32)];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..k {
                let mut v = w.clone();
                v.push(s);
                if !explore(g, &v, budget, true)?.1 {
                    next.push(v);
                }
            }
        }
        counts.push(BigUint::from(next.len()));
        layer = next;
    }
    Ok(counts)
}

/// `a + b√2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
struct Root2 {
    a: i64,
    b: i64,
}

impl Root2 {
    fn signum(self) -> i32 {
        let s = |x: i64| x.signum() as i32;
        if self.a >= 0 && self.b >= 0 || self.a <= 0 && self.b <= 0 {
            return if s(self.a) != 0 { s(self.a) } else { s(self.b) };
        }
        let (a2, b2) = ((self.a as i128).pow(2), 2 * (self.b as i128).pow(2));
        if a2 > b2 {
            s(self.a)
        } else {
            s(self.b)
        }
    }

    fn add_scaled(self, k: Coef, x: Root2) -> Root2 {
        match k {
            Coef::Zero => self,
            Coef::Two => Root2 { a: self.a + 2 * x.a, b: self.b + 2 * x.b },
            Coef::Sqrt2 => Root2 { a: self.a + 2 * x.b, b: self.b + x.a },
        }
    }

    fn neg(self) -> Root2 {
        Root2 { a: -self.a, b: -self.b }
    }
}

/// `-2 B(α_s, α_t)` for `s != t`: 0 for `m = 2`, `√2` for `m = 4`, 2 for no edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Coef {
    Zero,
    Sqrt2,
    Two,
}

/// Depth-first walk over geodesic words, keeping the columns of the matrix of
/// the current element, so that column `s` is `w(α_s)`.
struct Reflections {
    n: usize,
    coef: Vec<Vec<Coef>>,
    cols: Vec<Root2>,
}

impl Reflections {
    fn new(g: &CoxeterGraph) -> Result<Self> {
        let n = g.vertex_count();
        let mut coef = vec![vec![Coef::Two; n]; n];
        for s in 0..n {
            for t in 0..n {
                if s != t {
                    coef[s][t] = match g.label(s, t) {
                        None => Coef::Two,
                        Some(2) => Coef::Zero,
                        Some(4) => Coef::Sqrt2,
                        Some(m) => return Err(Error::UnsupportedLabel(m)),
                    };
                }
            }
        }
        let mut cols = vec![Root2::default(); n * n];
        for s in 0..n {
            cols[s * n + s] = Root2 { a: 1, b: 0 };
        }
        Ok(Reflections { n, coef, cols })
    }

    fn column(&self, s: usize) -> &[Root2] {
        &self.cols[s * self.n..(s + 1) * self.n]
    }

    fn is_positive(&self, s: usize) -> bool {
        self.column(s).iter().map(|x| x.signum()).find(|&x| x != 0) == Some(1)
    }

    /// Right multiplication by `s`; applying it twice restores the state.
    fn apply(&mut self, s: usize) {
        let n = self.n;
        for t in 0..n {
            let k = self.coef[t][s];
            if t == s || k == Coef::Zero {
                continue;
            }
            for i in 0..n {
                self.cols[t * n + i] = self.cols[t * n + i].add_scaled(k, self.cols[s * n + i]);
            }
        }
        for i in 0..n {
            self.cols[s * n + i] = self.cols[s * n + i].neg();
        }
    }
}

/// Whether `w` is geodesic, via the reflection representation.
pub fn is_geodesic_reflection(g: &CoxeterGraph, w: &Word) -> Result<bool> {
    let mut r = Reflections::new(g)?;
    for &s in w.letters() {
        if !r.is_positive(s) {
            return Ok(false);
        }
        r.apply(s);
    }
    Ok(true)
}

const ID_BITS: u32 = 21;
const MAX_HALF: usize = 6;

/// Packs a sorted list of at most six root ids.
fn pack(ids: impl Iterator<Item = u32>) -> u128 {
    ids.enumerate().fold(0u128, |acc, (i, id)| acc | ((id as u128 + 1) << (ID_BITS as usize * i)))
}

/// Geodesic counts of lengths `0..=n` (at most 12) via the reflection
/// representation and meet in the middle. Supports labels 2 and 4.
pub fn reflection_counts(g: &CoxeterGraph, n: usize) -> Result<Vec<BigUint>> {
    let half = n.div_ceil(2);
    if half > MAX_HALF {
        return Err(Error::Usage(format!("reflection counting supports lengths up to {}", 2 * MAX_HALF)));
    }
    let mut r = Reflections::new(g)?;
    let mut interner: HashMap<Vec<Root2>, u32> = HashMap::new();
    // levels[j]: sorted inversion-set ids of every geodesic word of length j
    let mut levels: Vec<Vec<Vec<u32>>> = vec![Vec::new(); half + 1];
    let mut path = Vec::new();
    collect_inversions(&mut r, &mut interner, half, &mut path, &mut levels);
    if interner.len() >= 1 << ID_BITS {
        return Err(Error::Usage("too many roots for reflection counting".into()));
    }

    let mut counts: Vec<BigUint> = (0..=n.min(half)).map(|j| BigUint::from(levels[j].len())).collect();
    for k in half + 1..=n {
        let b = k - half;
        // containing[B] = number of words of length b whose inversion set contains B
        let mut containing: HashMap<u128, i64> = HashMap::new();
        for set in &levels[b] {
            for mask in 0u32..1 << set.len() {
                let key = pack((0..set.len()).filter(|i| mask >> i & 1 == 1).map(|i| set[i]));
                *containing.entry(key).or_default() += 1;
            }
        }
        let mut total: i128 = 0;
        for set in &levels[half] {
            for mask in 0u32..1 << set.len() {
                let key = pack((0..set.len()).filter(|i| mask >> i & 1 == 1).map(|i| set[i]));
                if let Some(&c) = containing.get(&key) {
                    let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                    total += sign * c as i128;
                }
            }
        }
        counts.push(BigUint::try_from(total).expect("counts are non-negative"));
    }
    Ok(counts)
}

fn collect_inversions(
    r: &mut Reflections,
    interner: &mut HashMap<Vec<Root2>, u32>,
    depth: usize,
    path: &mut Vec<u32>,
    levels: &mut [Vec<Vec<u32>>],
) {
    let mut sorted = path.clone();
    sorted.sort_unstable();
    levels[path.len()].push(sorted);
    if path.len() == depth {
        return;
    }
    for s in 0..r.n {
        if !r.is_positive(s) {
            continue;
        }
        let fresh = interner.len() as u32;
        let id = *interner.entry(r.column(s).to_vec()).or_insert(fresh);
        path.push(id);
        r.apply(s);
        collect_inversions(r, interner, depth, path, levels);
        r.apply(s);
        path.pop();
    }
}

/// Geodesic counts by plain depth-first search over words with the
/// reflection test, counting the last layer without descending into it.
pub fn reflection_counts_dfs(g: &CoxeterGraph, n: usize) -> Result<Vec<BigUint>> {
    let mut r = Reflections::new(g)?;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    if n > 0 {
        count_dfs(&mut r, 0, n, &mut counts);
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

fn count_dfs(r: &mut Reflections, depth: usize, n: usize, counts: &mut [u64]) {
    for s in 0..r.n {
        if !r.is_positive(s) {
            continue;
        }
        counts[depth + 1] += 1;
        if depth + 1 < n {
            r.apply(s);
            count_dfs(r, depth + 1, n, counts);
            r.apply(s);
        }
    }
}

/// Letters of a right-angled Artin group: `2v` is `v`, `2v + 1` is `v⁻¹`.
pub fn raag_letter_name(g: &CoxeterGraph, letter: usize) -> String {
    let base = g.name(letter / 2);
    if letter % 2 == 0 {
        base.to_string()
    } else {
        format!("{base}^-1")
    }
}

fn raag_reducible(g: &CoxeterGraph, w: &[usize], budget: usize) -> Result<bool> {
    let cancels = |w: &[usize]| w.windows(2).any(|p| p[0] ^ 1 == p[1]);
    if cancels(w) {
        return Ok(true);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            let (x, y) = (cur[i] / 2, cur[i + 1] / 2);
            if x == y || !g.adjacent(x, y) {
                continue;
            }
            let mut next = cur.clone();
            next.swap(i, i + 1);
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= budget {
                return Err(Error::BudgetExhausted { budget });
            }
            if cancels(&next) {
                return Ok(true);
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(false)
}

/// Whether a word over `x, x⁻¹` is geodesic in the right-angled Artin group,
/// by commutation closure.
pub fn oracle_is_geodesic_raag(g: &CoxeterGraph, w: &[usize], budget: usize) -> Result<bool> {
    Ok(!raag_reducible(g, w, budget)?)
}

/// Right-angled Artin geodesic counts by commutation closure with prefix pruning.
pub fn oracle_counts_raag(g: &CoxeterGraph, n: usize, budget: usize) -> Result<Vec<BigUint>> {
    g.require_right_angled()?;
    let letters = 2 * g.vertex_count();
    let mut counts = vec![BigUint::from(1u32)];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..letters {
                let mut v = w.clone();
                v.push(x);
                if !raag_reducible(g, &v, budget)? {
                    next.push(v);
                }
            }
        }
        counts.push(BigUint::from(next.len()));
        layer = next;
    }
    Ok(counts)
}

/// Right-angled Artin geodesic counts by depth-first search. Appending `x`
/// to a geodesic `w` fails exactly when `w` has an `x⁻¹` followed only by
/// letters commuting with `x`; the set of such `x` is updated letter by letter.
pub fn oracle_counts_raag_fast(g: &CoxeterGraph, n: usize) -> Result<Vec<BigUint>> {
    g.require_right_angled()?;
    let k = g.vertex_count();
    if 2 * k > 64 {
        return Err(Error::Usage("at most 32 generators".into()));
    }
    // letters commuting with x: both signs of every neighbour of x's base
    let commuting: Vec<u64> = (0..2 * k)
        .map(|x| g.neighbors(x / 2).iter().fold(0u64, |m, &v| m | (0b11 << (2 * v))))
        .collect();
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    if n > 0 {
        raag_dfs(&commuting, 2 * k, 0, 0, n, &mut counts);
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

fn raag_dfs(commuting: &[u64], letters: usize, blocked: u64, depth: usize, n: usize, counts: &mut [u64]) {
    let all = if letters == 64 { u64::MAX } else { (1u64 << letters) - 1 };
    let free = all & !blocked;
    counts[depth + 1] += free.count_ones() as u64;
    if depth + 1 == n {
        return;
    }
    let mut rest = free;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let next = (blocked & commuting[x]) | (1 << (x ^ 1));
        raag_dfs(commuting, letters, next, depth + 1, n, counts);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgraph::families;

    fn nums(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn braid_examples() {
        let d = families::dihedral(4);
        let w = Word::parse(&d, "ststs").unwrap();
        assert!(!oracle_is_geodesic(&d, &w, 100).unwrap());
        let c6 = families::cycle(6);
        assert!(!oracle_is_geodesic(&c6, &Word::new(vec![0, 1, 0]), 100).unwrap());
        let free = families::edgeless(3);
        assert!(oracle_is_geodesic(&free, &Word::new(vec![0, 1, 2]), 100).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = families::edgeless(4);
        let k4 = families::complete(4);
        let w = Word::new(vec![0, 1, 2, 3, 0, 1, 2, 3]);
        assert!(matches!(oracle_is_geodesic(&k4, &w, 3), Err(Error::BudgetExhausted { budget: 3 }) | Ok(false)));
        assert!(oracle_is_geodesic(&g, &w, 1).unwrap());
        let long = Word::new(vec![0, 1, 2, 3]);
        assert!(matches!(braid_class(&k4, &long, 5), Err(Error::BudgetExhausted { budget: 5 })));
    }

    #[test]
    fn braid_counts() {
        assert_eq!(oracle_counts(&families::dihedral(4), 5, 100).unwrap(), nums(&[1, 2, 2, 2, 2, 0]));
        assert_eq!(oracle_counts(&families::cycle(6), 3, 100).unwrap(), nums(&[1, 6, 30, 138]));
        assert_eq!(oracle_counts(&families::dihedral(0), 4, 100).unwrap(), nums(&[1, 2, 2, 2, 2]));
    }

    #[test]
    fn reflection_paths_agree_with_braid_moves() {
        let graphs = [
            families::cycle(6),
            families::dihedral(4),
            families::squares(2, 4),
            families::octagon(4, 4),
            families::path(4),
            families::disjoint_union(&families::complete(3), &families::complete(3)),
        ];
        for g in graphs {
            let braid = oracle_counts(&g, 5, 10_000).unwrap();
            assert_eq!(reflection_counts(&g, 5).unwrap(), braid);
            assert_eq!(reflection_counts_dfs(&g, 5).unwrap(), braid);
        }
        let c6 = families::cycle(6);
        assert_eq!(reflection_counts(&c6, 8).unwrap(), reflection_counts_dfs(&c6, 8).unwrap());
    }

    #[test]
    fn reduction_and_equality() {
        let d = families::dihedral(4);
        let w = |s: &str| Word::parse(&d, s).unwrap();
        assert_eq!(element_length(&d, &w("ststs"), 100).unwrap(), 3);
        assert!(same_element(&d, &w("ststs"), &w("tst"), 100).unwrap());
        assert!(!same_element(&d, &w("ststs"), &w("sts"), 100).unwrap());
        assert!(same_element(&d, &w("stst"), &w("tsts"), 100).unwrap());
        assert!(!same_element(&d, &w("st"), &w("ts"), 100).unwrap());
        assert_eq!(element_length(&d, &w("ss"), 100).unwrap(), 0);
    }

    #[test]
    fn raag_counts() {
        assert_eq!(oracle_counts_raag(&families::edgeless(1), 3, 100).unwrap(), nums(&[1, 2, 2, 2]));
        assert_eq!(oracle_counts_raag(&families::complete(2), 2, 100).unwrap(), nums(&[1, 4, 12]));
        for g in [families::complete(2), families::path(3), families::cycle(4), families::cycle(5)] {
            assert_eq!(oracle_counts_raag(&g, 5, 10_000).unwrap(), oracle_counts_raag_fast(&g, 5).unwrap());
        }
    }

    #[test]
    fn unsupported_labels() {
        let g = families::dihedral(6);
        assert!(matches!(reflection_counts(&g, 4), Err(Error::UnsupportedLabel(6))));
    }
}

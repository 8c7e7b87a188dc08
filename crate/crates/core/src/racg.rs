//! Geodesic growth of right-angled Coxeter groups and right-angled Artin
//! groups.
//!
//! The geodesic language of a right-angled Coxeter group is accepted by an
//! automaton whose states are the cliques of the defining graph, plus a
//! start state (the empty clique) and a fail state. Reading `v` from clique
//! `sigma` leads to `{v} ∪ (Star(v) ∩ sigma)` when `v ∉ sigma` and to the fail
//! state otherwise. A state records the generators that could still be
//! shuffled to the end of the word read so far.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{fit_recurrence, json_number, serialize_numbers, IntPolynomial, RationalSeries};
use crate::automaton::Dfa;
use crate::coxgraph::{Clique, CoxeterGraph, VertexMask};
use crate::error::{Error, Result};

/// The geodesic automaton of a right-angled Coxeter group.
#[derive(Clone, Debug)]
pub struct GeodesicDfa {
    dfa: Dfa,
    /// Clique of each non-fail state; index 0 is the empty start clique.
    cliques: Vec<Clique>,
}

impl GeodesicDfa {
    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn state_count(&self) -> usize {
        self.dfa.state_count()
    }

    pub fn start(&self) -> usize {
        0
    }

    pub fn fail(&self) -> usize {
        self.cliques.len()
    }

    /// Clique labelling `state`, or `None` for the fail state.
    pub fn clique(&self, state: usize) -> Option<&Clique> {
        self.cliques.get(state)
    }

    pub fn state_of(&self, sigma: &Clique) -> Option<usize> {
        self.cliques.iter().position(|c| c == sigma)
    }

    pub fn next(&self, state: usize, v: usize) -> usize {
        self.dfa.next(state, v)
    }

    /// Number of transitions out of `state` into each `i`-state, indexed by `i`;
    /// the fail state is not counted.
    pub fn transition_profile(&self, state: usize) -> Vec<usize> {
        let mut out = vec![0; self.max_clique_size() + 1];
        for &t in &self.dfa.transitions()[state] {
            if let Some(c) = self.clique(t) {
                out[c.len()] += 1;
            }
        }
        out
    }

    pub fn max_clique_size(&self) -> usize {
        self.cliques.iter().map(Clique::len).max().unwrap_or(0)
    }

    pub fn counts(&self, n: usize) -> Vec<BigUint> {
        self.dfa.counts(n)
    }
}

/// Builds the geodesic automaton. States: the empty clique, every clique in
/// [`CoxeterGraph::cliques`] order, then the fail state.
pub fn build_dfa(g: &CoxeterGraph) -> Result<GeodesicDfa> {
    g.require_right_angled()?;
    let mut cliques = vec![Clique::empty()];
    cliques.extend(g.cliques());
    let index: HashMap<VertexMask, usize> = cliques.iter().enumerate().map(|(i, c)| (c.mask(), i)).collect();
    let fail = cliques.len();
    let n = g.vertex_count();
    let mut transitions = Vec::with_capacity(fail + 1);
    for sigma in &cliques {
        let mask = sigma.mask();
        let row = (0..n)
            .map(|v| {
                if mask >> v & 1 == 1 {
                    fail
                } else {
                    index[&((1 << v) | (g.neighbor_mask(v) & mask))]
                }
            })
            .collect();
        transitions.push(row);
    }
    transitions.push(vec![fail; n]);
    let mut accepting = vec![true; fail];
    accepting.push(false);
    Ok(GeodesicDfa { dfa: Dfa::new(n, transitions, 0, accepting), cliques })
}

/// `deg_j(sigma)`: vertices outside `sigma` adjacent to exactly `j` members of `sigma`.
pub fn deg_j(g: &CoxeterGraph, sigma: &Clique, j: usize) -> usize {
    let mask = sigma.mask();
    (0..g.vertex_count())
        .filter(|&v| mask >> v & 1 == 0 && (g.neighbor_mask(v) & mask).count_ones() as usize == j)
        .count()
}

/// `deg_tau(sigma)`: vertices outside `sigma` whose neighbourhood inside
/// `sigma` is exactly `tau`.
pub fn deg_tau(g: &CoxeterGraph, sigma: &Clique, tau: &Clique) -> Result<usize> {
    let (s, t) = (sigma.mask(), tau.mask());
    if t & !s != 0 {
        return Err(Error::NotASubset(tau.names(g), sigma.names(g)));
    }
    Ok((0..g.vertex_count())
        .filter(|&v| s >> v & 1 == 0 && g.neighbor_mask(v) & s == t)
        .count())
}

/// `deg_tau(sigma)` through the inclusion-exclusion recursion
/// `deg_tau = |Link(tau)| - |sigma \ tau| - sum over tau ⊊ pi ⊆ sigma of deg_pi`,
/// where `Link` of the empty clique is the whole vertex set.
pub fn deg_tau_recursive(g: &CoxeterGraph, sigma: &Clique, tau: &Clique) -> Result<usize> {
    let (s, t) = (sigma.mask(), tau.mask());
    if t & !s != 0 {
        return Err(Error::NotASubset(tau.names(g), sigma.names(g)));
    }
    let mut memo = HashMap::new();
    Ok(deg_tau_rec(g, s, t, &mut memo) as usize)
}

fn deg_tau_rec(g: &CoxeterGraph, sigma: VertexMask, tau: VertexMask, memo: &mut HashMap<VertexMask, i64>) -> i64 {
    if let Some(&v) = memo.get(&tau) {
        return v;
    }
    let link = (0..g.vertex_count())
        .filter(|&v| tau >> v & 1 == 0 && g.neighbor_mask(v) & tau == tau)
        .count() as i64;
    let mut value = link - (sigma & !tau).count_ones() as i64;
    let rest = sigma & !tau;
    // proper supersets of tau inside sigma
    let mut sub = rest;
    while sub != 0 {
        value -= deg_tau_rec(g, sigma, tau | sub, memo);
        sub = (sub - 1) & rest;
    }
    memo.insert(tau, value);
    value
}

/// Checks that every state's transitions into `(j+1)`-states number
/// `deg_j(sigma)` and its transitions into the fail state number `|sigma|`.
pub fn transition_counts_match_degrees(g: &CoxeterGraph, dfa: &GeodesicDfa) -> bool {
    (0..dfa.fail()).all(|q| {
        let sigma = dfa.clique(q).expect("non-fail state");
        let profile = dfa.transition_profile(q);
        let to_fail = dfa.dfa().transitions()[q].iter().filter(|&&t| t == dfa.fail()).count();
        to_fail == sigma.len() && (0..=sigma.len()).all(|j| profile.get(j + 1).copied().unwrap_or(0) == deg_j(g, sigma, j))
    })
}

/// Whether `deg_j(sigma)` depends only on `|sigma|` and `j`.
pub fn degrees_depend_only_on_size(g: &CoxeterGraph) -> bool {
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for sigma in std::iter::once(Clique::empty()).chain(g.cliques()) {
        for j in 0..=sigma.len() {
            let d = deg_j(g, &sigma, j);
            if *seen.entry((sigma.len(), j)).or_insert(d) != d {
                return false;
            }
        }
    }
    true
}

/// `B[i][m]`: number of geodesic words of length `m` whose automaton run ends
/// in an `i`-state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeProfile {
    table: Vec<Vec<BigUint>>,
}

impl SizeProfile {
    pub fn get(&self, i: usize, m: usize) -> BigUint {
        self.table.get(i).and_then(|row| row.get(m)).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.table
    }

    /// Column sums: the geodesic counts.
    pub fn totals(&self) -> Vec<BigUint> {
        let len = self.table.first().map_or(0, Vec::len);
        (0..len).map(|m| self.table.iter().map(|row| &row[m]).sum()).collect()
    }
}

impl Serialize for SizeProfile {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let nested: Vec<Vec<serde_json::Number>> = self.table.iter().map(|r| r.iter().map(json_number).collect()).collect();
        nested.serialize(serializer)
    }
}

/// Transition counts between state sizes: `beta[i][j]` is the number of
/// letters leading from a `j`-state to an `i`-state, when this number is the
/// same for every `j`-state.
pub fn uniform_size_transitions(dfa: &GeodesicDfa) -> Option<Vec<Vec<usize>>> {
    let d = dfa.max_clique_size();
    let mut beta: Vec<Vec<Option<usize>>> = vec![vec![None; d + 1]; d + 1];
    for q in 0..dfa.fail() {
        let j = dfa.clique(q).expect("non-fail state").len();
        let profile = dfa.transition_profile(q);
        for i in 0..=d {
            match beta[i][j] {
                None => beta[i][j] = Some(profile[i]),
                Some(b) if b != profile[i] => return None,
                _ => {}
            }
        }
    }
    Some(beta.into_iter().map(|row| row.into_iter().map(Option::unwrap_or_default).collect()).collect())
}

/// Fills `B[i][m]` for `m <= n`. When every `j`-state has the same number of
/// transitions into `i`-states (link-regular graphs), this is the size
/// recursion `B_i(m) = sum_j beta_{i,j} B_j(m-1)`; otherwise counts are
/// propagated state by state and then grouped by size.
pub fn count_by_state_size(dfa: &GeodesicDfa, n: usize) -> SizeProfile {
    match uniform_size_transitions(dfa) {
        Some(beta) => size_recursion(&beta, n),
        None => per_state_profile(dfa, n),
    }
}

fn size_recursion(beta: &[Vec<usize>], n: usize) -> SizeProfile {
    let d = beta.len() - 1;
    let mut table = vec![vec![BigUint::zero(); n + 1]; d + 1];
    table[0][0] = BigUint::from(1u32);
    for m in 1..=n {
        for i in 0..=d {
            // from a j-state one only reaches i-states with i <= j + 1
            let value: BigUint = (i.saturating_sub(1)..=d).map(|j| &table[j][m - 1] * beta[i][j]).sum();
            table[i][m] = value;
        }
    }
    SizeProfile { table }
}

/// Counts propagated through the individual states, grouped by clique size.
pub fn per_state_profile(dfa: &GeodesicDfa, n: usize) -> SizeProfile {
    let d = dfa.max_clique_size();
    let mut table = vec![vec![BigUint::zero(); n + 1]; d + 1];
    let matrix = dfa.dfa().count_matrix();
    let mut v = matrix.initial().to_vec();
    for m in 0..=n {
        for (q, count) in v.iter().enumerate() {
            if let Some(c) = dfa.clique(q) {
                table[c.len()][m] += count;
            }
        }
        if m < n {
            v = matrix.step(&v);
        }
    }
    SizeProfile { table }
}

/// Geodesic counts of lengths `0..=n`.
pub fn count_geodesics_racg(g: &CoxeterGraph, n: usize) -> Result<Vec<BigUint>> {
    Ok(build_dfa(g)?.counts(n))
}

/// Fits a rational series to the accepted-word counts of an automaton with
/// `bound` states, using `2 * bound` further terms as a check.
pub(crate) fn series_from_counts(counts: &[BigUint], bound: usize) -> Result<RationalSeries> {
    let seq: Vec<BigInt> = counts.iter().map(|c| BigInt::from(c.clone())).collect();
    fit_recurrence(&seq, bound)
}

pub(crate) fn terms_for_bound(bound: usize) -> usize {
    4 * bound + 1
}

/// Exact geodesic growth series of the right-angled Coxeter group on `g`.
pub fn growth_series_racg(g: &CoxeterGraph) -> Result<RationalSeries> {
    let dfa = build_dfa(g)?;
    let bound = dfa.state_count();
    let counts = dfa.counts(terms_for_bound(bound) - 1);
    series_from_counts(&counts, bound)
}

/// Closed form for `l`-regular triangle-free graphs on `n >= 4` vertices:
/// `(1 - (l-3)z + 2z^2) / (1 + (3-n-l)z + (nl-2n+2)z^2)`.
pub fn formula_regular_trianglefree(n: usize, l: usize) -> Result<RationalSeries> {
    if n < 4 {
        return Err(Error::Hypothesis(format!("the closed formula needs at least 4 vertices, got {n}")));
    }
    let (n, l) = (n as i64, l as i64);
    RationalSeries::from_i64(&[1, -(l - 3), 2], &[1, 3 - n - l, n * l - 2 * n + 2])
}

/// Whether every vertex has exactly `l` neighbours, returning `l`.
pub fn regular_degree(g: &CoxeterGraph) -> Option<usize> {
    let l = g.degree(0);
    (0..g.vertex_count()).all(|v| g.degree(v) == l).then_some(l)
}

/// One coefficientwise identity between suffix-classified series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub passed: bool,
    #[serde(serialize_with = "serialize_numbers")]
    pub lhs: Vec<BigInt>,
    #[serde(serialize_with = "serialize_numbers")]
    pub rhs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuffixReport {
    pub vertices: usize,
    pub degree: usize,
    pub identities: Vec<IdentityCheck>,
}

impl SuffixReport {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|c| c.passed)
    }
}

/// Suffix-classified series of a right-angled Coxeter group, up to degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixSeries {
    /// Geodesic counts.
    pub growth: Vec<BigInt>,
    /// `E_u[k][v]`: geodesics of length `k` ending in `v`.
    pub ending_in: Vec<Vec<BigInt>>,
    /// `E_uv[k][(u, v)]`: geodesics of length `k` ending in `u, v`.
    pub ending_in_pair: Vec<BTreeMap<(usize, usize), BigInt>>,
    /// Geodesics of length `k` ending in any three letters.
    pub ending_in_triple: Vec<BigInt>,
}

/// Runs the automaton while remembering the last two letters read, so that
/// geodesics are counted by suffix directly.
pub fn suffix_series(g: &CoxeterGraph, n: usize) -> Result<SuffixSeries> {
    let dfa = build_dfa(g)?;
    let nv = g.vertex_count();
    // key: (state, letter before last, last letter); usize::MAX for "none"
    let none = usize::MAX;
    let mut layer: HashMap<(usize, usize, usize), BigInt> = HashMap::from([((dfa.start(), none, none), BigInt::from(1))]);
    let mut growth = Vec::with_capacity(n + 1);
    let mut ending_in = Vec::with_capacity(n + 1);
    let mut ending_in_pair = Vec::with_capacity(n + 1);
    let mut ending_in_triple = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut total = BigInt::zero();
        let mut by_last = vec![BigInt::zero(); nv];
        let mut by_pair: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(_, prev, last), count) in &layer {
            total += count;
            if last != none {
                by_last[last] += count;
            }
            if prev != none {
                *by_pair.entry((prev, last)).or_default() += count;
            }
        }
        growth.push(total.clone());
        ending_in.push(by_last);
        ending_in_pair.push(by_pair);
        ending_in_triple.push(if k >= 3 { total } else { BigInt::zero() });
        if k == n {
            break;
        }
        let mut next: HashMap<(usize, usize, usize), BigInt> = HashMap::new();
        for (&(q, _, last), count) in &layer {
            for v in 0..nv {
                let t = dfa.next(q, v);
                if t != dfa.fail() {
                    *next.entry((t, last, v)).or_default() += count;
                }
            }
        }
        layer = next;
    }
    Ok(SuffixSeries { growth, ending_in, ending_in_pair, ending_in_triple })
}

/// Verifies, coefficient by coefficient up to `z^n`, the three identities
/// that yield the closed formula for an `l`-regular triangle-free graph on
/// `|V| >= 4` vertices:
///
/// * `sum_u E_u = G - 1`,
/// * `sum_e E_e = G (1 - (n-l-1)z) - 1 - (l+1)z` over oriented edges `e`,
/// * `sum E_uvt = (n+l-3) z sum_e E_e + (n^2 - 2n - nl - l^2 + 2l + 1) z^2 sum_u E_u`.
///
/// Every series is counted directly from the automaton; `G` comes from an
/// independent transfer-matrix count.
pub fn suffix_series_check(g: &CoxeterGraph, n: usize) -> Result<SuffixReport> {
    g.require_right_angled()?;
    if let Some((a, b, c)) = g.find_triangle() {
        return Err(Error::NotTriangleFree(g.name(a).into(), g.name(b).into(), g.name(c).into()));
    }
    let nv = g.vertex_count();
    if nv < 4 {
        return Err(Error::Hypothesis(format!("need at least 4 vertices, got {nv}")));
    }
    let l = regular_degree(g).ok_or_else(|| Error::Hypothesis("graph is not regular".into()))?;
    let s = suffix_series(g, n)?;
    let growth: Vec<BigInt> = count_geodesics_racg(g, n)?.into_iter().map(BigInt::from).collect();
    let at = |v: &[BigInt], k: isize| if k < 0 { BigInt::zero() } else { v[k as usize].clone() };

    let sum_u: Vec<BigInt> = s.ending_in.iter().map(|row| row.iter().sum()).collect();
    let sum_e: Vec<BigInt> = s
        .ending_in_pair
        .iter()
        .map(|m| m.iter().filter(|((u, v), _)| g.adjacent(*u, *v)).map(|(_, c)| c).sum())
        .collect();
    let sum_uvt = s.ending_in_triple.clone();

    let (ni, li) = (nv as i64, l as i64);
    let mut checks = Vec::new();

    let rhs: Vec<BigInt> = (0..=n).map(|k| if k == 0 { &growth[0] - 1 } else { growth[k].clone() }).collect();
    checks.push(IdentityCheck { identity: "sum_u E_u = G - 1".into(), passed: sum_u == rhs, lhs: sum_u.clone(), rhs });

    let rhs: Vec<BigInt> = (0..=n as isize)
        .map(|k| {
            let mut v = at(&growth, k) - BigInt::from(ni - li - 1) * at(&growth, k - 1);
            if k == 0 {
                v -= 1;
            }
            if k == 1 {
                v -= li + 1;
            }
            v
        })
        .collect();
    checks.push(IdentityCheck {
        identity: "sum_e E_e = G(1 - (n-l-1)z) - 1 - (l+1)z".into(),
        passed: sum_e == rhs,
        lhs: sum_e.clone(),
        rhs,
    });

    let c2 = ni * ni - 2 * ni - ni * li - li * li + 2 * li + 1;
    let rhs: Vec<BigInt> = (0..=n as isize)
        .map(|k| BigInt::from(ni + li - 3) * at(&sum_e, k - 1) + BigInt::from(c2) * at(&sum_u, k - 2))
        .collect();
    checks.push(IdentityCheck {
        identity: "sum E_uvt = (n+l-3) z sum_e E_e + (n^2-2n-nl-l^2+2l+1) z^2 sum_u E_u".into(),
        passed: sum_uvt == rhs,
        lhs: sum_uvt,
        rhs,
    });

    Ok(SuffixReport { vertices: nv, degree: l, identities: checks })
}

/// Geodesic growth series of the right-angled Artin group on `g`: the
/// right-angled Coxeter growth of the double of `g`, whose Cayley graph is
/// the same undirected graph.
pub fn growth_series_raag(g: &CoxeterGraph) -> Result<RationalSeries> {
    growth_series_racg(&g.double()?)
}

pub fn count_geodesics_raag(g: &CoxeterGraph, n: usize) -> Result<Vec<BigUint>> {
    count_geodesics_racg(&g.double()?, n)
}

/// The f-polynomial evaluated at `2t`, which is the f-polynomial of the double.
pub fn doubled_f_polynomial(g: &CoxeterGraph) -> IntPolynomial {
    g.f_polynomial().substitute_scaled(&BigInt::from(2))
}

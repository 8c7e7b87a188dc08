//! Labelled Coxeter graphs: parsing, cliques, links and stars, f-polynomials,
//! regularity predicates, doubles and labelled isomorphism.
//!
//! A graph has at most 64 vertices so that vertex sets fit in a `u64` mask.
//! Vertex order is the declaration order and is used for every canonical
//! ordering (cliques, stars, automaton states).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::IntPolynomial;
use crate::error::{Error, ParseIssue, Result};

pub const MAX_VERTICES: usize = 64;

/// Set of vertex indices as a bitmask.
pub type VertexMask = u64;

fn mask_of(members: &[usize]) -> VertexMask {
    members.iter().fold(0, |m, &v| m | (1 << v))
}

fn members_of(mask: VertexMask) -> Vec<usize> {
    (0..MAX_VERTICES).filter(|&v| mask >> v & 1 == 1).collect()
}

/// A finite simplicial graph with even edge labels `m >= 2`.
///
/// A missing edge means `m = 0` (no relation between the two generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeMap<(usize, usize), u64>,
    adjacency: Vec<VertexMask>,
}

/// A vertex set spanning a complete subgraph, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique(Vec<usize>);

impl Clique {
    /// The empty clique, used as the start state of automata.
    pub fn empty() -> Self {
        Clique(Vec::new())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mask(&self) -> VertexMask {
        mask_of(&self.0)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn names(&self, g: &CoxeterGraph) -> Vec<String> {
        g.names_of(&self.0)
    }
}

/// Result of [`CoxeterGraph::link_regularity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub is_link_regular: bool,
    /// Clique size to `|Link|`; filled in only when the graph is link-regular.
    pub link_sizes: BTreeMap<usize, usize>,
    /// Two cliques of equal size whose links differ in size.
    pub witness: Option<(Vec<String>, Vec<String>)>,
}

/// Result of [`CoxeterGraph::star_regularity`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarRegularity {
    pub is_star_regular: bool,
    pub witness: Option<(String, String)>,
}

impl CoxeterGraph {
    /// Builds a graph from vertex names and `(u, v, label)` triples.
    pub fn new(names: Vec<String>, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let issue = |issue| Error::Parse { line: 0, issue };
        if names.len() > MAX_VERTICES {
            return Err(issue(ParseIssue::Syntax(format!(
                "at most {MAX_VERTICES} vertices are supported"
            ))));
        }
        let mut g = CoxeterGraph {
            index: HashMap::new(),
            names: Vec::new(),
            edges: BTreeMap::new(),
            adjacency: vec![0; names.len()],
        };
        for name in names {
            if g.index.contains_key(&name) {
                return Err(issue(ParseIssue::DuplicateVertex(name)));
            }
            g.index.insert(name.clone(), g.names.len());
            g.names.push(name);
        }
        for &(u, v, m) in edges {
            if u >= g.names.len() || v >= g.names.len() {
                return Err(issue(ParseIssue::UnknownVertex(format!("#{}", u.max(v)))));
            }
            g.insert_edge(u, v, m).map_err(issue)?;
        }
        Ok(g)
    }

    /// Convenience constructor from names, used heavily in tests.
    pub fn from_names(vertices: &[&str], edges: &[(&str, &str, u64)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let lookup: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut triples = Vec::with_capacity(edges.len());
        for &(u, v, m) in edges {
            let find = |x: &str| {
                lookup.get(x).copied().ok_or_else(|| Error::Parse {
                    line: 0,
                    issue: ParseIssue::UnknownVertex(x.to_string()),
                })
            };
            triples.push((find(u)?, find(v)?, m));
        }
        CoxeterGraph::new(names, &triples)
    }

    fn insert_edge(&mut self, u: usize, v: usize, m: u64) -> std::result::Result<(), ParseIssue> {
        if u == v {
            return Err(ParseIssue::SelfLoop(self.names[u].clone()));
        }
        if m < 2 {
            return Err(ParseIssue::LabelTooSmall(m));
        }
        if m % 2 == 1 {
            return Err(ParseIssue::OddLabel(m));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Err(ParseIssue::DuplicateEdge(
                self.names[key.0].clone(),
                self.names[key.1].clone(),
            ));
        }
        self.edges.insert(key, m);
        self.adjacency[u] |= 1 << v;
        self.adjacency[v] |= 1 << u;
        Ok(())
    }

    /// Parses the line-based graph format:
    ///
    /// ```text
    /// # comment
    /// vertex a
    /// vertex b
    /// edge a b 4
    /// ```
    ///
    /// Edge labels default to 2. Vertices may be declared anywhere in the file.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertex_lines = Vec::new();
        let mut edge_lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "vertex" if tokens.len() >= 2 => {
                    for name in &tokens[1..] {
                        vertex_lines.push((line_no, name.to_string()));
                    }
                }
                "edge" if tokens.len() == 3 || tokens.len() == 4 => {
                    edge_lines.push((line_no, tokens[1..].iter().map(|s| s.to_string()).collect::<Vec<_>>()));
                }
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        issue: ParseIssue::Syntax(format!("cannot parse `{line}` (keyword `{other}`)")),
                    })
                }
            }
        }
        if vertex_lines.len() > MAX_VERTICES {
            return Err(Error::Parse {
                line: vertex_lines[MAX_VERTICES].0,
                issue: ParseIssue::Syntax(format!("at most {MAX_VERTICES} vertices are supported")),
            });
        }
        let mut g = CoxeterGraph {
            names: Vec::new(),
            index: HashMap::new(),
            edges: BTreeMap::new(),
            adjacency: vec![0; vertex_lines.len()],
        };
        for (line, name) in vertex_lines {
            if g.index.contains_key(&name) {
                return Err(Error::Parse { line, issue: ParseIssue::DuplicateVertex(name) });
            }
            g.index.insert(name.clone(), g.names.len());
            g.names.push(name);
        }
        for (line, tokens) in edge_lines {
            let err = |issue| Error::Parse { line, issue };
            let u = *g.index.get(&tokens[0]).ok_or_else(|| err(ParseIssue::UnknownVertex(tokens[0].clone())))?;
            let v = *g.index.get(&tokens[1]).ok_or_else(|| err(ParseIssue::UnknownVertex(tokens[1].clone())))?;
            let m = match tokens.get(2) {
                None => 2,
                Some(s) => s
                    .parse::<u64>()
                    .map_err(|_| err(ParseIssue::Syntax(format!("bad label `{s}`"))))?,
            };
            g.insert_edge(u, v, m).map_err(err)?;
        }
        Ok(g)
    }

    /// Serializes back into the text format accepted by [`CoxeterGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str(&format!("vertex {name}\n"));
        }
        for (&(u, v), &m) in &self.edges {
            if m == 2 {
                out.push_str(&format!("edge {} {}\n", self.names[u], self.names[v]));
            } else {
                out.push_str(&format!("edge {} {} {m}\n", self.names[u], self.names[v]));
            }
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn names_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.names[v].clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Label `m_{u,v}`, or `None` when there is no edge.
    pub fn label(&self, u: usize, v: usize) -> Option<u64> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    pub fn neighbor_mask(&self, v: usize) -> VertexMask {
        self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        members_of(self.adjacency[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    /// Edges as `(u, v, m)` with `u < v`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn all_vertices_mask(&self) -> VertexMask {
        if self.names.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.names.len()) - 1
        }
    }

    pub fn is_right_angled(&self) -> bool {
        self.edges.values().all(|&m| m == 2)
    }

    pub fn require_right_angled(&self) -> Result<()> {
        match self.edges().find(|&(_, _, m)| m != 2) {
            Some((u, v, m)) => Err(Error::NotRightAngled(
                self.names[u].clone(),
                self.names[v].clone(),
                m,
            )),
            None => Ok(()),
        }
    }

    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (u, v, _) in self.edges() {
            let common = self.adjacency[u] & self.adjacency[v];
            if common != 0 {
                let w = common.trailing_zeros() as usize;
                return Some((u, v, w));
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn is_clique_mask(&self, mask: VertexMask) -> bool {
        members_of(mask)
            .iter()
            .all(|&v| (mask & !(1 << v)) & !self.adjacency[v] == 0)
    }

    /// Validates `members` as a clique of this graph.
    pub fn clique(&self, members: &[usize]) -> Result<Clique> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != members.len()
            || sorted.iter().any(|&v| v >= self.vertex_count())
            || !self.is_clique_mask(mask_of(&sorted))
        {
            let names = members
                .iter()
                .map(|&v| self.names.get(v).cloned().unwrap_or_else(|| format!("#{v}")))
                .collect();
            return Err(Error::NotAClique(names));
        }
        Ok(Clique(sorted))
    }

    pub fn clique_by_names(&self, members: &[&str]) -> Result<Clique> {
        let idx = members
            .iter()
            .map(|n| self.index_of(n).ok_or_else(|| Error::UnknownLetter(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        self.clique(&idx)
    }

    /// All non-empty cliques, ordered by size and then lexicographically.
    pub fn cliques(&self) -> Vec<Clique> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            self.extend_clique(vec![v], self.adjacency[v] & !((1u64 << v) | ((1u64 << v) - 1)), &mut out);
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    // candidates: vertices later than the last member and adjacent to all members
    fn extend_clique(&self, current: Vec<usize>, candidates: VertexMask, out: &mut Vec<Clique>) {
        for w in members_of(candidates) {
            let mut next = current.clone();
            next.push(w);
            let later = !((1u64 << w) | ((1u64 << w) - 1));
            self.extend_clique(next, candidates & self.adjacency[w] & later, out);
        }
        out.push(Clique(current));
    }

    /// Cliques grouped by size: entry `i` holds the cliques with `i + 1` vertices.
    pub fn cliques_by_size(&self) -> Vec<Vec<Clique>> {
        let mut groups: Vec<Vec<Clique>> = Vec::new();
        for c in self.cliques() {
            if groups.len() < c.len() {
                groups.resize(c.len(), Vec::new());
            }
            groups[c.len() - 1].push(c);
        }
        groups
    }

    pub fn clique_number(&self) -> usize {
        self.cliques().last().map_or(0, Clique::len)
    }

    fn check_clique(&self, sigma: &Clique) -> Result<()> {
        if sigma.0.iter().any(|&v| v >= self.vertex_count()) || !self.is_clique_mask(sigma.mask()) {
            return Err(Error::NotAClique(sigma.names(self)));
        }
        Ok(())
    }

    fn link_mask_unchecked(&self, sigma_mask: VertexMask) -> VertexMask {
        members_of(sigma_mask)
            .into_iter()
            .fold(self.all_vertices_mask(), |acc, v| acc & self.adjacency[v])
            & !sigma_mask
    }

    /// Vertices outside `sigma` adjacent to every member of `sigma`.
    pub fn link(&self, sigma: &Clique) -> Result<Vec<usize>> {
        self.check_clique(sigma)?;
        Ok(members_of(self.link_mask_unchecked(sigma.mask())))
    }

    /// `Link(sigma)` together with `sigma` itself.
    pub fn star(&self, sigma: &Clique) -> Result<Vec<usize>> {
        self.check_clique(sigma)?;
        Ok(members_of(self.link_mask_unchecked(sigma.mask()) | sigma.mask()))
    }

    pub fn vertex_star_mask(&self, v: usize) -> VertexMask {
        self.adjacency[v] | (1 << v)
    }

    /// Clique-count polynomial `1 + f_0 t + f_1 t^2 + ...`.
    pub fn f_polynomial(&self) -> IntPolynomial {
        let mut counts = vec![1i64];
        for group in self.cliques_by_size() {
            counts.push(group.len() as i64);
        }
        IntPolynomial::from_i64(&counts)
    }

    pub fn link_regularity(&self) -> RegularityReport {
        let mut seen: BTreeMap<usize, (Clique, usize)> = BTreeMap::new();
        for c in self.cliques() {
            let size = self.link_mask_unchecked(c.mask()).count_ones() as usize;
            match seen.get(&c.len()) {
                Some((first, first_size)) if *first_size != size => {
                    return RegularityReport {
                        is_link_regular: false,
                        link_sizes: BTreeMap::new(),
                        witness: Some((first.names(self), c.names(self))),
                    };
                }
                Some(_) => {}
                None => {
                    seen.insert(c.len(), (c, size));
                }
            }
        }
        RegularityReport {
            is_link_regular: true,
            link_sizes: seen.into_iter().map(|(k, (_, s))| (k, s)).collect(),
            witness: None,
        }
    }

    /// Labelled subgraph induced on `vertices` (kept in the given order).
    pub fn induced(&self, vertices: &[usize]) -> CoxeterGraph {
        let names = self.names_of(vertices);
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if let Some(m) = self.label(u, v) {
                    edges.push((i, j, m));
                }
            }
        }
        CoxeterGraph::new(names, &edges).expect("induced subgraph of a valid graph")
    }

    /// Labelled subgraph induced on `Star({v})`.
    pub fn star_subgraph(&self, v: usize) -> CoxeterGraph {
        self.induced(&members_of(self.vertex_star_mask(v)))
    }

    /// Decides whether the stars of all vertices are isomorphic as labelled graphs.
    pub fn star_regularity(&self) -> StarRegularity {
        let n = self.vertex_count();
        if n > 0 {
            let first = self.star_subgraph(0);
            for v in 1..n {
                if !first.is_isomorphic(&self.star_subgraph(v)) {
                    return StarRegularity {
                        is_star_regular: false,
                        witness: Some((self.names[0].clone(), self.names[v].clone())),
                    };
                }
            }
        }
        StarRegularity { is_star_regular: true, witness: None }
    }

    fn vertex_invariant(&self, v: usize) -> (usize, Vec<u64>) {
        let mut labels: Vec<u64> = self.neighbors(v).iter().filter_map(|&u| self.label(u, v)).collect();
        labels.sort_unstable();
        (labels.len(), labels)
    }

    /// Label-preserving isomorphism test by backtracking over vertex bijections,
    /// pruned on degree and incident-label multiset.
    pub fn is_isomorphic(&self, other: &CoxeterGraph) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut la: Vec<u64> = self.edges.values().copied().collect();
        let mut lb: Vec<u64> = other.edges.values().copied().collect();
        la.sort_unstable();
        lb.sort_unstable();
        if la != lb {
            return false;
        }
        let inv_a: Vec<_> = (0..n).map(|v| self.vertex_invariant(v)).collect();
        let inv_b: Vec<_> = (0..n).map(|v| other.vertex_invariant(v)).collect();
        let mut sa = inv_a.clone();
        let mut sb = inv_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_isomorphism(other, 0, &inv_a, &inv_b, &mut mapping, &mut used)
    }

    fn extend_isomorphism(
        &self,
        other: &CoxeterGraph,
        v: usize,
        inv_a: &[(usize, Vec<u64>)],
        inv_b: &[(usize, Vec<u64>)],
        mapping: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == mapping.len() {
            return true;
        }
        for cand in 0..mapping.len() {
            if used[cand] || inv_a[v] != inv_b[cand] {
                continue;
            }
            let consistent = (0..v).all(|u| self.label(u, v) == other.label(mapping[u], cand));
            if !consistent {
                continue;
            }
            mapping[v] = cand;
            used[cand] = true;
            if self.extend_isomorphism(other, v + 1, inv_a, inv_b, mapping, used) {
                return true;
            }
            used[cand] = false;
        }
        mapping[v] = usize::MAX;
        false
    }

    /// The double: vertices `v^1`, `v^2` per vertex `v`, with `u^i ~ v^j` for
    /// every edge `{u, v}` and all `i, j`. Defined for right-angled graphs only.
    pub fn double(&self) -> Result<CoxeterGraph> {
        self.require_right_angled()?;
        let names: Vec<String> = self
            .names
            .iter()
            .flat_map(|v| [format!("{v}^1"), format!("{v}^2")])
            .collect();
        let mut edges = Vec::new();
        for (u, v, _) in self.edges() {
            for i in 0..2 {
                for j in 0..2 {
                    edges.push((2 * u + i, 2 * v + j, 2));
                }
            }
        }
        CoxeterGraph::new(names, &edges)
    }

    /// For each clique size, the distinct f-polynomials of the K-links
    /// (flag complexes spanned by `Link(sigma)`) over all cliques of that size.
    pub fn klink_f_polynomials(&self) -> BTreeMap<usize, BTreeSet<IntPolynomial>> {
        let mut out: BTreeMap<usize, BTreeSet<IntPolynomial>> = BTreeMap::new();
        for c in self.cliques() {
            let link = members_of(self.link_mask_unchecked(c.mask()));
            out.entry(c.len()).or_default().insert(self.induced(&link).f_polynomial());
        }
        out
    }
}

impl FromStr for CoxeterGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CoxeterGraph::parse(s)
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Small named graphs used by tests, examples and the bundled corpus.
pub mod families {
    use super::CoxeterGraph;

    fn names(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// Cycle on `n` vertices with edge `i` (from `i` to `i+1`) labelled `labels[i % labels.len()]`.
    pub fn cycle_labelled(n: usize, labels: &[u64]) -> CoxeterGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, labels[i % labels.len()])).collect();
        CoxeterGraph::new(names("v", n), &edges).expect("valid cycle")
    }

    pub fn cycle(n: usize) -> CoxeterGraph {
        cycle_labelled(n, &[2])
    }

    pub fn path(n: usize) -> CoxeterGraph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 2)).collect();
        CoxeterGraph::new(names("v", n), &edges).expect("valid path")
    }

    pub fn complete(n: usize) -> CoxeterGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j, 2));
            }
        }
        CoxeterGraph::new(names("v", n), &edges).expect("valid complete graph")
    }

    pub fn edgeless(n: usize) -> CoxeterGraph {
        CoxeterGraph::new(names("v", n), &[]).expect("valid edgeless graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> CoxeterGraph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j, 2));
            }
        }
        CoxeterGraph::new(names("v", a + b), &edges).expect("valid bipartite graph")
    }

    pub fn disjoint_union(a: &CoxeterGraph, b: &CoxeterGraph) -> CoxeterGraph {
        let mut all: Vec<String> = a.names().iter().map(|n| format!("{n}.0")).collect();
        all.extend(b.names().iter().map(|n| format!("{n}.1")));
        let shift = a.vertex_count();
        let mut edges: Vec<_> = a.edges().collect();
        edges.extend(b.edges().map(|(u, v, m)| (u + shift, v + shift, m)));
        CoxeterGraph::new(all, &edges).expect("valid union")
    }

    pub fn petersen() -> CoxeterGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5, 2));
            edges.push((i, i + 5, 2));
            edges.push((5 + i, 5 + (i + 2) % 5, 2));
        }
        CoxeterGraph::new(names("p", 10), &edges).expect("valid Petersen graph")
    }

    pub fn cube() -> CoxeterGraph {
        let mut edges = Vec::new();
        for i in 0..8usize {
            for bit in 0..3 {
                let j = i ^ (1 << bit);
                if i < j {
                    edges.push((i, j, 2));
                }
            }
        }
        CoxeterGraph::new(names("q", 8), &edges).expect("valid cube")
    }

    /// Two disjoint squares, edges labelled alternately `p` and `q`.
    pub fn squares(p: u64, q: u64) -> CoxeterGraph {
        let c = cycle_labelled(4, &[p, q]);
        disjoint_union(&c, &c)
    }

    /// Octagon with edges labelled alternately `p` and `q`.
    pub fn octagon(p: u64, q: u64) -> CoxeterGraph {
        cycle_labelled(8, &[p, q])
    }

    /// Dihedral system on two generators `s`, `t` with `m_{s,t} = m` (0 = no edge).
    pub fn dihedral(m: u64) -> CoxeterGraph {
        let names = vec!["s".to_string(), "t".to_string()];
        if m == 0 {
            CoxeterGraph::new(names, &[]).expect("valid")
        } else {
            CoxeterGraph::new(names, &[(0, 1, m)]).expect("valid")
        }
    }
}

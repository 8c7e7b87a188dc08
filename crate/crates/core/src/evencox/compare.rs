use num_bigint::BigUint;
use serde::Serialize;

use super::{count_geodesics_even, enumerate_rigid_chains, growth_series_even, ChainTable, EvenSystem};
use crate::algebra::{serialize_numbers, RationalSeries};
use crate::coxgraph::CoxeterGraph;
use crate::error::Result;
use crate::racg;

/// Per-system part of a [`ComparisonReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemSummary {
    pub generators: usize,
    pub triangle_free: bool,
    pub star_regular: bool,
    /// Which automaton produced the counts: `"even"` (forbidden-word scanner)
    /// or `"racg"` (clique automaton, used for right-angled graphs with triangles).
    pub pipeline: &'static str,
    #[serde(serialize_with = "serialize_numbers")]
    pub counts: Vec<BigUint>,
    pub series: RationalSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub a: SystemSummary,
    pub b: SystemSummary,
    pub same_generator_count: bool,
    /// Every vertex star of either graph is isomorphic, as a labelled graph,
    /// to every other.
    pub stars_isomorphic: bool,
    /// Both triangle-free and star-regular, equal generator counts and
    /// isomorphic stars.
    pub hypotheses_hold: bool,
    pub counts_equal: bool,
    /// Smallest length at which the counts differ.
    pub first_difference: Option<usize>,
    pub series_equal: bool,
    /// Chain tables of both systems, when both are triangle-free.
    pub chain_tables: Option<(ChainTable, ChainTable)>,
    pub chain_tables_equal: Option<bool>,
}

impl ComparisonReport {
    pub fn equal(&self) -> bool {
        self.series_equal && self.counts_equal
    }
}

fn stars_all_isomorphic(a: &CoxeterGraph, b: &CoxeterGraph) -> bool {
    if a.vertex_count() == 0 || b.vertex_count() == 0 {
        return a.vertex_count() == b.vertex_count();
    }
    let reference = a.star_subgraph(0);
    (0..a.vertex_count())
        .map(|v| a.star_subgraph(v))
        .chain((0..b.vertex_count()).map(|v| b.star_subgraph(v)))
        .all(|s| s.is_isomorphic(&reference))
}

fn summarize(g: &CoxeterGraph, n: usize) -> Result<SystemSummary> {
    let (pipeline, counts, series) = match EvenSystem::new(g.clone()) {
        Ok(sys) => ("even", count_geodesics_even(&sys, n), growth_series_even(&sys)?),
        Err(_) => ("racg", racg::count_geodesics_racg(g, n)?, racg::growth_series_racg(g)?),
    };
    Ok(SystemSummary {
        generators: g.vertex_count(),
        triangle_free: g.is_triangle_free(),
        star_regular: g.star_regularity().is_star_regular,
        pipeline,
        counts,
        series,
    })
}

/// Compares two systems given by graphs. Triangle-free graphs use the
/// forbidden-word scanner; right-angled graphs with triangles fall back to
/// the clique automaton, and then no chain tables are computed.
pub fn compare_graphs(a: &CoxeterGraph, b: &CoxeterGraph, n: usize, max_len: usize, max_rank: usize) -> Result<ComparisonReport> {
    let sa = summarize(a, n)?;
    let sb = summarize(b, n)?;
    let same_generator_count = sa.generators == sb.generators;
    let stars_isomorphic = stars_all_isomorphic(a, b);
    let hypotheses_hold =
        sa.triangle_free && sb.triangle_free && sa.star_regular && sb.star_regular && same_generator_count && stars_isomorphic;
    let first_difference = sa.counts.iter().zip(&sb.counts).position(|(x, y)| x != y);
    let chain_tables = match (EvenSystem::new(a.clone()), EvenSystem::new(b.clone())) {
        (Ok(x), Ok(y)) => Some((enumerate_rigid_chains(&x, max_len, max_rank), enumerate_rigid_chains(&y, max_len, max_rank))),
        _ => None,
    };
    Ok(ComparisonReport {
        same_generator_count,
        stars_isomorphic,
        hypotheses_hold,
        counts_equal: first_difference.is_none(),
        first_difference,
        series_equal: sa.series == sb.series,
        chain_tables_equal: chain_tables.as_ref().map(|(x, y)| x == y),
        chain_tables,
        a: sa,
        b: sb,
    })
}

/// Compares two triangle-free even systems: hypotheses of the star-regularity
/// criterion, geodesic counts to `n`, growth series and rigid-chain tables.
pub fn compare_systems(a: &EvenSystem, b: &EvenSystem, n: usize, max_len: usize, max_rank: usize) -> Result<ComparisonReport> {
    compare_graphs(a.graph(), b.graph(), n, max_len, max_rank)
}

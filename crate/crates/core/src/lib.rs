//! Exact geodesic growth for right-angled Coxeter groups, right-angled Artin
//! groups and triangle-free even Coxeter groups.
//!
//! Every group is given by its defining labelled graph ([`CoxeterGraph`]).
//! Growth is computed from finite automata accepting the geodesic language
//! and turned into exact rational generating functions ([`RationalSeries`]).
//! The [`oracle`] module recomputes geodesic counts from scratch, with no
//! automaton involved, and is used throughout the tests as ground truth.

pub mod algebra;
pub mod automaton;
pub mod cli;
pub mod coxgraph;
mod error;
pub mod evencox;
pub mod oracle;
pub mod racg;

pub use algebra::{CountMatrix, IntPolynomial, RationalSeries};
pub use automaton::Dfa;
pub use coxgraph::{Clique, CoxeterGraph, RegularityReport};
pub use error::{Error, ParseIssue, Result};
pub use evencox::{EvenSystem, Word};

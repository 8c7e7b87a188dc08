mod common;

use common::*;
use geogrowth::algebra::{fit_recurrence, RationalSeries};
use geogrowth::automaton::Dfa;
use geogrowth::coxgraph::CoxeterGraph;
use geogrowth::evencox::{self, EvenSystem, Word};
use geogrowth::{oracle, racg};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

/// Random graph on up to `max_k` vertices; each pair gets a label from
/// `labels` (0 for no edge). With `triangle_free`, edges closing a
/// triangle are skipped.
fn graph(max_k: usize, labels: &'static [u64], triangle_free: bool) -> impl Strategy<Value = CoxeterGraph> {
    (1..=max_k, prop::collection::vec(0..labels.len(), 21)).prop_map(move |(k, picks)| {
        let names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        let mut adj = vec![vec![false; k]; k];
        let mut edges = Vec::new();
        let mut p = 0;
        for i in 0..k {
            for j in i + 1..k {
                let m = labels[picks[p % picks.len()]];
                p += 1;
                if m == 0 || triangle_free && (0..k).any(|x| adj[i][x] && adj[j][x]) {
                    continue;
                }
                adj[i][j] = true;
                adj[j][i] = true;
                edges.push((i, j, m));
            }
        }
        CoxeterGraph::new(names, &edges).unwrap()
    })
}

fn right_angled(max_k: usize) -> impl Strategy<Value = CoxeterGraph> {
    graph(max_k, &[0, 2], false)
}

fn big(xs: &[BigUint]) -> Vec<BigInt> {
    xs.iter().cloned().map(BigInt::from).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn star_is_link_plus_clique(g in right_angled(7)) {
        for c in g.cliques() {
            let link = g.link(&c).unwrap();
            let star = g.star(&c).unwrap();
            prop_assert_eq!(star.len(), link.len() + c.len());
            prop_assert!(link.iter().all(|v| !c.contains(*v)));
            let mut union: Vec<usize> = link.iter().copied().chain(c.members().iter().copied()).collect();
            union.sort_unstable();
            prop_assert_eq!(union, star);
        }
    }

    #[test]
    fn handshake(g in graph(7, &[0, 2, 4], false)) {
        let total: usize = (0..g.vertex_count()).map(|v| g.neighbors(v).len()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn double_f_polynomial(g in right_angled(6)) {
        let d = g.double().unwrap();
        prop_assert_eq!(d.f_polynomial(), g.f_polynomial().substitute_scaled(&BigInt::from(2)));
    }

    #[test]
    fn link_regular_graphs_have_uniform_klinks(g in right_angled(7)) {
        if g.link_regularity().is_link_regular {
            prop_assert!(g.klink_f_polynomials().values().all(|s| s.len() == 1));
        }
    }

    #[test]
    fn triangle_free_iff_no_three_clique(g in right_angled(7)) {
        prop_assert_eq!(g.is_triangle_free(), g.cliques().iter().all(|c| c.len() < 3));
    }

    #[test]
    fn text_round_trip_and_relabelling(g in graph(6, &[0, 2, 4], false), seed in any::<u64>()) {
        prop_assert_eq!(CoxeterGraph::parse(&g.to_text()).unwrap(), g.clone());
        let k = g.vertex_count();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut x = seed;
        for i in (1..k).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let names: Vec<String> = (0..k).map(|i| format!("y{i}")).collect();
        let edges: Vec<_> = g.edges().map(|(u, v, m)| (perm[u], perm[v], m)).collect();
        let h = CoxeterGraph::new(names, &edges).unwrap();
        prop_assert!(g.is_isomorphic(&h));
        if g.is_right_angled() {
            prop_assert_eq!(racg::growth_series_racg(&g).unwrap(), racg::growth_series_racg(&h).unwrap());
        }
    }

    #[test]
    fn recurrence_fit_recovers_rational_series(
        num in prop::collection::vec(-5i64..=5, 1..4),
        den_tail in prop::collection::vec(-4i64..=4, 0..4),
    ) {
        let mut den = vec![1];
        den.extend(den_tail);
        let s = RationalSeries::from_i64(&num, &den).unwrap();
        let bound = den.len().max(num.len());
        let seq = s.expand(2 * bound + 4);
        let fitted = fit_recurrence(&seq, bound).unwrap();
        prop_assert_eq!(fitted.expand(seq.len() - 1), seq);
        prop_assert_eq!(fitted, s);
    }

    #[test]
    fn normalization_is_canonical(
        num in prop::collection::vec(-6i64..=6, 1..4),
        den in prop::collection::vec(-6i64..=6, 1..4),
        scale in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 5]),
    ) {
        prop_assume!(den[0] != 0);
        if let Ok(s) = RationalSeries::from_i64(&num, &den) {
            prop_assert_eq!(s.denominator().coeff(0), BigInt::from(1));
            let again = RationalSeries::new(s.numerator().clone(), s.denominator().clone()).unwrap();
            prop_assert_eq!(&again, &s);
            let c = BigInt::from(scale);
            let scaled = RationalSeries::new(s.numerator().scale(&c), s.denominator().scale(&c)).unwrap();
            prop_assert_eq!(scaled, s);
        }
    }

    #[test]
    fn transfer_counts_match_word_enumeration(
        states in 1usize..5,
        alphabet in 1usize..4,
        table in prop::collection::vec(any::<u8>(), 16),
        accept in prop::collection::vec(any::<bool>(), 5),
    ) {
        let transitions: Vec<Vec<usize>> =
            (0..states).map(|q| (0..alphabet).map(|a| table[q * 4 + a] as usize % states).collect()).collect();
        let dfa = Dfa::new(alphabet, transitions, 0, accept[..states].to_vec());
        let counts = dfa.counts(6);
        for (n, count) in counts.iter().enumerate() {
            let mut brute = 0u64;
            for code in 0..alphabet.pow(n as u32) {
                let word: Vec<usize> = (0..n).map(|i| code / alphabet.pow(i as u32) % alphabet).collect();
                brute += dfa.accepts(&word) as u64;
            }
            prop_assert_eq!(count, &BigUint::from(brute));
        }
        let min = dfa.minimize();
        prop_assert!(min.same_language(&dfa));
        prop_assert_eq!(min.counts(6), counts);
    }

    #[test]
    fn clique_automaton_is_total_and_fail_absorbing(g in right_angled(7)) {
        let d = racg::build_dfa(&g).unwrap();
        let k = g.vertex_count();
        for q in 0..d.state_count() {
            for v in 0..k {
                prop_assert!(d.next(q, v) < d.state_count());
            }
        }
        prop_assert!((0..k).all(|v| d.next(d.fail(), v) == d.fail()));
        prop_assert!(!d.dfa().is_accepting(d.fail()));
    }

    #[test]
    fn size_profile_invariants(g in right_angled(7)) {
        let d = racg::build_dfa(&g).unwrap();
        let n = 8;
        let b = racg::count_by_state_size(&d, n);
        let counts = d.counts(n);
        prop_assert_eq!(b.totals(), counts);
        let by_size = g.cliques_by_size();
        let mut fact = BigUint::from(1u32);
        for i in 0..b.rows().len() {
            if i > 0 {
                fact *= BigUint::from(i);
            }
            for m in 0..i.min(n + 1) {
                prop_assert_eq!(b.get(i, m), BigUint::from(0u32));
            }
            if i <= n {
                let cliques = by_size.get(i.wrapping_sub(1)).map_or(0, Vec::len);
                let expected = if i == 0 { BigUint::from(1u32) } else { &fact * BigUint::from(cliques) };
                prop_assert_eq!(b.get(i, i), expected);
            }
        }
        prop_assert_eq!(racg::per_state_profile(&d, n), b);
    }

    #[test]
    fn racg_counts_match_oracle(g in right_angled(6)) {
        let n = 6;
        let counts = racg::count_geodesics_racg(&g, n).unwrap();
        prop_assert_eq!(&counts, &oracle::reflection_counts(&g, n).unwrap());
        let s = racg::growth_series_racg(&g).unwrap();
        prop_assert_eq!(s.expand(n), big(&counts));
    }

    #[test]
    fn raag_counts_match_oracle(g in right_angled(4)) {
        let counts = racg::count_geodesics_raag(&g, 6).unwrap();
        prop_assert_eq!(&counts, &oracle::oracle_counts_raag_fast(&g, 6).unwrap());
        prop_assert_eq!(&counts[..5], &oracle::oracle_counts_raag(&g, 4, BUDGET).unwrap()[..]);
    }

    #[test]
    fn even_counts_match_oracle(g in graph(6, &[0, 2, 4, 4], true)) {
        let sys = EvenSystem::new(g.clone()).unwrap();
        let counts = evencox::count_geodesics_even(&sys, 6);
        prop_assert_eq!(&counts, &oracle::reflection_counts(&g, 6).unwrap());
        prop_assert_eq!(evencox::growth_series_even(&sys).unwrap().expand(6), big(&counts));
    }

    #[test]
    fn rigid_chains_recover_growth(g in graph(4, &[0, 2, 4, 6], true)) {
        let sys = EvenSystem::new(g).unwrap();
        let n = 7;
        let table = evencox::enumerate_rigid_chains(&sys, n, n);
        let counts = big(&evencox::count_geodesics_even(&sys, n));
        prop_assert_eq!(evencox::growth_from_chains(&table, sys.generator_count(), n).unwrap(), counts);
    }

    #[test]
    fn r_sequences_give_their_chains_back(g in graph(5, &[0, 2, 4, 6], true), picks in prop::collection::vec(any::<u16>(), 1..4)) {
        let sys = EvenSystem::new(g).unwrap();
        let words = sys.forbidden_words(7);
        let seq: Vec<Word> = picks.iter().map(|&p| words[p as usize % words.len()].clone()).collect();
        if evencox::check_r_conditions(&sys, &seq).unwrap() {
            let chain = evencox::chain_from_sequence(&sys, &seq).unwrap();
            prop_assert_eq!(&chain.forbidden, &seq);
            prop_assert!(evencox::is_rigid(&sys, &chain));
            let again = evencox::chain_from_sequence(&sys, &chain.forbidden).unwrap();
            prop_assert_eq!(again, chain);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn braid_moves_keep_length_and_parity(input in system_and_word(PROPERTY_SYSTEMS, 10)) {
        braid_invariants(input)?;
    }

    #[test]
    fn appending_a_letter_changes_length_by_one(input in letter_strategy(PROPERTY_SYSTEMS, 10)) {
        plus_minus_one(input)?;
    }

    #[test]
    fn centralizer_geodesics_are_geodesic(input in centralizer_strategy()) {
        centralizer_words(input)?;
    }

    #[test]
    fn geodesics_are_prefix_closed(input in system_and_word(PROPERTY_SYSTEMS, 8)) {
        prefix_closed(input)?;
    }

    #[test]
    fn deletion_needs_equal_letters(input in deletion_strategy()) {
        deletion_law(input)?;
    }

    #[test]
    fn automata_agree_with_oracle_on_words(input in system_and_word(PROPERTY_SYSTEMS, 10)) {
        let (g, w) = input;
        let truth = oracle::oracle_is_geodesic(&g, &w, BUDGET).unwrap();
        prop_assert_eq!(oracle::is_geodesic_reflection(&g, &w).unwrap(), truth);
        if g.is_right_angled() {
            prop_assert_eq!(racg::build_dfa(&g).unwrap().dfa().accepts(w.letters()), truth);
        }
        if let Ok(sys) = EvenSystem::new(g.clone()) {
            prop_assert_eq!(evencox::build_scanner(&sys).accepts(w.letters()), truth);
        }
    }
}

#[test]
fn equal_local_data_gives_equal_profiles() {
    let (a, b) = (corpus("c8"), corpus("two_c4"));
    assert_eq!(a.f_polynomial(), b.f_polynomial());
    assert_eq!(a.link_regularity().link_sizes, b.link_regularity().link_sizes);
    let (da, db) = (racg::build_dfa(&a).unwrap(), racg::build_dfa(&b).unwrap());
    assert_eq!(racg::count_by_state_size(&da, 20), racg::count_by_state_size(&db, 20));
    assert_eq!(racg::growth_series_racg(&a).unwrap(), racg::growth_series_racg(&b).unwrap());
}

#[test]
fn a_words_have_the_right_shape() {
    let sys = EvenSystem::new(CoxeterGraph::from_names(&["s", "t", "u"], &[("s", "t", 6), ("t", "u", 2)]).unwrap()).unwrap();
    let g = sys.graph();
    let (s, t, u) = (0, 1, 2);
    assert_eq!(sys.a_word(t, s).unwrap().spell(g), "tstst");
    assert_eq!(sys.a_word(u, t).unwrap().spell(g), "u");
    assert!(sys.a_word(u, s).is_err());
}

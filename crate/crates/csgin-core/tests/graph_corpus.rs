//! Corpus checks for binomial edge ideals: every connected graph on up to
//! four vertices plus a handful of named five- and six-vertex graphs.

use csgin_core::edge::{binomial_edge_ideal, edge_ring, gin_minimal_primes, path_gin, Graph};
use csgin_core::field::PrimeField;
use csgin_core::gin::{gin, DEFAULT_SEEDS};
use csgin_core::hilbert::{g_multidegree, multidegree, LaurentPoly};
use csgin_core::homology::betti_squarefree;
use csgin_core::monideal::{BorelPrime, MonomialIdeal};
use csgin_core::order::TermOrder;
use csgin_core::rng::SplitMix64;

use std::collections::BTreeSet;

fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    let all: BTreeSet<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if g.components(&all).len() == 1 {
            out.push(g);
        }
    }
    out
}

fn corpus() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 2..=4 {
        graphs.extend(connected_graphs(n));
    }
    assert_eq!(graphs.len(), 1 + 4 + 38);
    graphs.push(Graph::path(5));
    graphs.push(Graph::path(6));
    graphs.push(Graph::cycle(5));
    graphs.push(Graph::complete_bipartite(2, 3));
    graphs.push(Graph::star(4));
    graphs
}

#[test]
fn engine_gin_matches_the_path_formula() {
    let f = PrimeField::default_prime();
    for g in corpus() {
        let expected = path_gin(&g);
        assert!(expected.is_squarefree(), "{g}");
        let ring = edge_ring(f, g.num_vertices());
        let j = binomial_edge_ideal(&ring, &g);
        let ord = TermOrder::ambient(2 * g.num_vertices());
        let got = gin(&j, &ord, &DEFAULT_SEEDS).unwrap();
        assert!(got.borel_certified, "{g}");
        assert_eq!(got.gin, expected, "{g}");
    }
}

#[test]
fn minimal_primes_cut_out_the_gin() {
    for g in corpus() {
        let expected = path_gin(&g);
        let primes = gin_minimal_primes(&g);
        assert!(!primes.is_empty(), "{g}");
        let meet = MonomialIdeal::intersect_all(expected.shape(), &primes);
        assert_eq!(meet, expected, "{g}");

        // Additivity: distinct primes carry distinct, pairwise incomparable
        // block degrees, so each contributes one unit term.
        let total = g_multidegree(&expected);
        let mut sum = LaurentPoly::zero(g.num_vertices());
        for p in &primes {
            sum = sum.add(&multidegree(p));
        }
        assert_eq!(total, sum, "{g}");
    }
}

#[test]
fn multidegree_support_names_the_minimal_primes() {
    for g in corpus() {
        let j = path_gin(&g);
        let shape = j.shape().clone();
        let mdeg = g_multidegree(&j);
        let support: BTreeSet<Vec<u32>> = mdeg
            .terms()
            .map(|(e, _)| e.iter().map(|&x| x as u32).collect())
            .collect();
        let primes: BTreeSet<Vec<u32>> = j
            .minimal_primes()
            .iter()
            .map(|vars| {
                BorelPrime::from_vars(&shape, vars)
                    .expect("minimal primes of a Borel-fixed ideal are Borel")
                    .w()
                    .to_vec()
            })
            .collect();
        assert_eq!(support, primes, "{g}");
    }
}

#[test]
fn regularity_is_at_most_the_vertex_count() {
    let f = PrimeField::default_prime();
    for g in corpus() {
        let j = path_gin(&g);
        let reg = betti_squarefree(&f, &j).regularity().unwrap();
        assert!(reg <= g.num_vertices() as i64, "{g}: reg {reg}");
    }
}

#[test]
fn random_coordinate_orders_give_squarefree_initial_ideals() {
    let f = PrimeField::default_prime();
    let mut rng = SplitMix64::new(0x9e3779b97f4a7c15);
    for g in corpus() {
        let ring = edge_ring(f, g.num_vertices());
        let j = binomial_edge_ideal(&ring, &g);
        for _ in 0..5 {
            let ord = TermOrder::random(2 * g.num_vertices(), &mut rng);
            let init = j.initial_ideal(&ord);
            assert!(init.is_squarefree(), "{g} under {ord:?}");
        }
    }
}

#[test]
fn gin_is_independent_of_the_term_order() {
    let f = PrimeField::default_prime();
    for g in [
        Graph::path(3),
        Graph::path(4),
        Graph::cycle(4),
        Graph::complete(4),
        Graph::path(5),
        Graph::star(4),
    ] {
        let n = g.num_vertices();
        let ring = edge_ring(f, n);
        let j = binomial_edge_ideal(&ring, &g);
        let by_grevlex = gin(&j, &TermOrder::ambient(2 * n), &DEFAULT_SEEDS).unwrap();
        let by_lex = gin(&j, &TermOrder::lex(2 * n), &DEFAULT_SEEDS).unwrap();
        assert_eq!(by_grevlex.gin, by_lex.gin, "{g}");
    }
}

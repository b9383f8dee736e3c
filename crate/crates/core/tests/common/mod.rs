#![allow(dead_code)]

use hcolor::bipartite::{is_bipartite, BipartiteWitness};
use hcolor::Graph;

/// Every labeled graph on `n` vertices, by edge bitmask over pairs `i < j`
/// in lexicographic order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// Graphs on 1..=max_n vertices.
pub fn graphs_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(all_graphs)
}

/// Bipartite targets used throughout the suites.
pub fn bipartite_targets() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", Graph::complete(2)),
        ("P3", Graph::path(3)),
        ("C4", Graph::cycle(4)),
        ("C6", Graph::cycle(6)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("S5", Graph::star(5)),
        ("E3", Graph::edgeless(3)),
    ]
}

pub fn named_non_bipartite() -> Vec<(&'static str, Graph)> {
    vec![
        ("C7", Graph::cycle(7)),
        ("PETERSEN", Graph::petersen()),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("W5", Graph::wheel(5)),
    ]
}

/// Fixed non-bipartite corpus on 6 and 7 vertices.
pub fn corpus_6_7() -> Vec<Graph> {
    vec![
        Graph::cycle(7),
        Graph::wheel(5),
        Graph::wheel(6),
        Graph::complete(6),
        Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap(),
        Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)]).unwrap(),
        Graph::new(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5), (5, 6), (6, 4)]).unwrap(),
        Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (0, 3)]).unwrap(),
    ]
}

pub fn is_bip(g: &Graph) -> bool {
    matches!(is_bipartite(g), BipartiteWitness::Bipartite(_))
}

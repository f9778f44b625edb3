//! Named test fixtures used throughout the suite.

use crate::graph::WeightedGraph;

/// Two 4-holes a-c1-b-c1' and a2-c2-b2-c2' joined by edges a-a2 and b-b2.
/// Ids: a=0, c1=1, b=2, c1'=3, a2=4, c2=5, b2=6, c2'=7.
///
/// Carries an X1-even connected non-path 2-join (X1 = {0,1,2,3}, A1 = {0},
/// B1 = {2}). Note the graph has star cutsets (e.g. N[c1]), so it exercises
/// split and block mechanics, not end-to-end class dispatch.
pub fn theta8() -> WeightedGraph {
    WeightedGraph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (2, 6),
        ],
    )
}

/// Two 6-holes a-c1-c2-b-c4-c3 and a'-d1-d2-b'-d4-d3 joined by edges a-a'
/// and b-b'. Ids: a=0, c1=1, c2=2, b=3, c4=4, c3=5, a'=6, d1=7, d2=8, b'=9,
/// d4=10, d3=11.
///
/// Bipartite, star-cutset-free, with X1-odd connected non-path 2-joins.
pub fn hex12() -> WeightedGraph {
    WeightedGraph::new(
        12,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (10, 11),
            (11, 6),
            (0, 6),
            (3, 9),
        ],
    )
}

/// Induced cycle on n vertices, unit weights.
pub fn cycle(n: usize) -> WeightedGraph {
    WeightedGraph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

/// Complete graph on n vertices, unit weights.
pub fn complete(n: usize) -> WeightedGraph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    WeightedGraph::new(n, &e)
}

/// Path on n vertices, unit weights.
pub fn path(n: usize) -> WeightedGraph {
    WeightedGraph::new(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
}

/// Star K_{1,k} with the center at id 0.
pub fn star(k: usize) -> WeightedGraph {
    WeightedGraph::new(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
}

/// The 8-vertex double split graph with k = l = 2 built from the defining
/// rules. Ids: a1=0, a2=1, b1=2, b2=3, c1=4, c2=5, d1=6, d2=7.
pub fn double_split_8() -> WeightedGraph {
    WeightedGraph::new(
        8,
        &[
            // matching part
            (0, 2),
            (1, 3),
            // cocktail part: all four edges between the pairs {c1,d1},{c2,d2}
            (4, 5),
            (4, 7),
            (6, 5),
            (6, 7),
            // two disjoint edges between each (ai,bi) and (cj,dj)
            (0, 4),
            (2, 6),
            (0, 5),
            (2, 7),
            (1, 4),
            (3, 6),
            (1, 7),
            (3, 5),
        ],
    )
}

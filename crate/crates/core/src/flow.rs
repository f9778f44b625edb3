//! Maximum weighted stable set on bipartite graphs via the minimum vertex
//! cover dual, computed with a standard max-flow.

use crate::error::SolveError;
use crate::graph::{wsum, Weight, WeightedGraph};

/// Exact maximum weighted stable set of a bipartite graph with a witness.
pub fn mwis_bipartite(g: &WeightedGraph) -> Result<(Weight, Vec<usize>), SolveError> {
    let colors = g.bipartition().ok_or(SolveError::NotBipartite)?;
    let n = g.n();
    // source = n, sink = n+1
    let mut net = Dinic::new(n + 2);
    let (source, sink) = (n, n + 1);
    for v in 0..n {
        if !colors[v] {
            net.add_edge(source, v, g.weight(v) as u128);
        } else {
            net.add_edge(v, sink, g.weight(v) as u128);
        }
    }
    for (u, v) in g.edges() {
        let (l, r) = if colors[u] { (v, u) } else { (u, v) };
        net.add_edge(l, r, u128::MAX / 4);
    }
    net.max_flow(source, sink);
    // min cut: left vertices unreachable from the source in the residual
    // network are in the cover, reachable right vertices too
    let reach = net.residual_reachable(source);
    let stable: Vec<usize> = (0..n)
        .filter(|&v| if !colors[v] { reach[v] } else { !reach[v] })
        .collect();
    let w = wsum(stable.iter().map(|&v| g.weight(v)));
    debug_assert!(g.is_stable_set(&stable));
    Ok((w, stable))
}

struct Edge {
    to: usize,
    cap: u128,
    rev: usize,
}

struct Dinic {
    adj: Vec<Vec<Edge>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic {
            adj: (0..n).map(|_| Vec::new()).collect(),
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u128) {
        let a = self.adj[to].len();
        let b = self.adj[from].len();
        self.adj[from].push(Edge { to, cap, rev: a });
        self.adj[to].push(Edge {
            to: from,
            cap: 0,
            rev: b,
        });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        let mut queue = std::collections::VecDeque::from([s]);
        self.level[s] = 0;
        while let Some(v) = queue.pop_front() {
            for e in &self.adj[v] {
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: u128) -> u128 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.adj[v].len() {
            let i = self.iter[v];
            let (to, cap, rev) = {
                let e = &self.adj[v][i];
                (e.to, e.cap, e.rev)
            };
            if cap > 0 && self.level[v] < self.level[to] {
                let d = self.dfs(to, t, f.min(cap));
                if d > 0 {
                    self.adj[v][i].cap -= d;
                    self.adj[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u128 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, u128::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for e in &self.adj[v] {
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    stack.push(e.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::brute_alpha;

    #[test]
    fn mwis_examples() {
        assert_eq!(mwis_bipartite(&fixtures::cycle(6)).unwrap().0, 3);
        let star = fixtures::star(3).with_weights(vec![5, 1, 1, 1]);
        assert_eq!(mwis_bipartite(&star).unwrap().0, 5);
        let p3 = fixtures::path(3).with_weights(vec![3, 5, 3]);
        assert_eq!(mwis_bipartite(&p3).unwrap().0, 6);
        assert!(matches!(
            mwis_bipartite(&fixtures::cycle(5)),
            Err(SolveError::NotBipartite)
        ));
    }

    #[test]
    fn mwis_matches_brute_on_random_bipartite() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let left = 1 + rng.gen_range(0..6);
            let right = 1 + rng.gen_range(0..6);
            let n = left + right;
            let mut edges = Vec::new();
            for u in 0..left {
                for v in 0..right {
                    if rng.gen_bool(0.4) {
                        edges.push((u, left + v));
                    }
                }
            }
            let weights: Vec<Weight> = (0..n).map(|_| rng.gen_range(0..9)).collect();
            let g = WeightedGraph::new(n, &edges).with_weights(weights);
            let (w, s) = mwis_bipartite(&g).unwrap();
            assert!(g.is_stable_set(&s));
            assert_eq!(wsum(s.iter().map(|&v| g.weight(v))), w);
            assert_eq!(w, brute_alpha(&g).unwrap().0);
        }
    }
}

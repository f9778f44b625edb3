//! Weighted simple graphs, multigraphs and flat paths.
//!
//! Graphs are immutable after construction: every transformation returns a
//! fresh value. Vertex ids are dense integers `0..n` and all iteration is in
//! ascending id order, which keeps the whole pipeline deterministic.

use crate::vset::VertSet;

/// Vertex weights. Non-negative integers per the implementation contract;
/// every summation in the crate goes through [`wadd`] so overflow is an
/// error, never a wrap.
pub type Weight = u64;

/// Checked weight addition.
pub fn wadd(a: Weight, b: Weight) -> Weight {
    a.checked_add(b).expect("vertex weight overflow")
}

/// Checked sum of the weights of a vertex set.
pub fn wsum<I: IntoIterator<Item = Weight>>(it: I) -> Weight {
    it.into_iter().fold(0, wadd)
}

/// Simple undirected graph with non-negative integer vertex weights and an
/// optional per-vertex extension mark (the channel used by gadget
/// recognition).
#[derive(Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    rows: Vec<VertSet>,
    adj: Vec<Vec<usize>>,
    weights: Vec<Weight>,
    marks: Vec<Option<u32>>,
}

impl WeightedGraph {
    /// Builds a unit-weight graph from an edge list. Panics on self-loops or
    /// out-of-range endpoints; duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = WeightedGraph {
            n,
            rows: vec![VertSet::new(n); n],
            adj: vec![Vec::new(); n],
            weights: vec![1; n],
            marks: vec![None; n],
        };
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge endpoint out of range");
            assert_ne!(u, v, "self-loop");
            if !g.rows[u].contains(v) {
                g.rows[u].insert(v);
                g.rows[v].insert(u);
                g.adj[u].push(v);
                g.adj[v].push(u);
            }
        }
        for l in &mut g.adj {
            l.sort_unstable();
        }
        g
    }

    pub fn with_weights(mut self, weights: Vec<Weight>) -> Self {
        assert_eq!(weights.len(), self.n);
        self.weights = weights;
        self
    }

    pub fn with_marks(mut self, marks: Vec<Option<u32>>) -> Self {
        assert_eq!(marks.len(), self.n);
        self.marks = marks;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn weight(&self, v: usize) -> Weight {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn mark(&self, v: usize) -> Option<u32> {
        self.marks[v]
    }

    pub fn marks(&self) -> &[Option<u32>] {
        &self.marks
    }

    pub fn has_marks(&self) -> bool {
        self.marks.iter().any(|m| m.is_some())
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn set_weight(&self, v: usize, w: Weight) -> WeightedGraph {
        let mut g = self.clone();
        g.weights[v] = w;
        g
    }

    pub fn total_weight(&self) -> Weight {
        wsum(self.weights.iter().copied())
    }

    pub fn set_weight_of(&self, vs: &[usize]) -> Weight {
        wsum(vs.iter().map(|&v| self.weights[v]))
    }

    /// Edge-complemented graph; weights and marks carry over.
    pub fn complement(&self) -> WeightedGraph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        WeightedGraph::new(self.n, &edges)
            .with_weights(self.weights.clone())
            .with_marks(self.marks.clone())
    }

    /// Same structure, weights outside `keep` zeroed. The max-weight stable
    /// set value of the result equals that of the induced subgraph on `keep`,
    /// which is how induced subproblems are fed to the solvers.
    pub fn zero_restrict(&self, keep: &VertSet) -> WeightedGraph {
        let mut g = self.clone();
        for v in 0..self.n {
            if !keep.contains(v) {
                g.weights[v] = 0;
            }
        }
        g
    }

    /// Induced subgraph on `keep` (ascending id order), plus the map from new
    /// ids back to ids of `self`.
    pub fn induced(&self, keep: &VertSet) -> (WeightedGraph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &old {
            for &w in &self.adj[v] {
                if v < w && keep.contains(w) {
                    edges.push((new_of[v], new_of[w]));
                }
            }
        }
        let g = WeightedGraph::new(old.len(), &edges)
            .with_weights(old.iter().map(|&v| self.weights[v]).collect())
            .with_marks(old.iter().map(|&v| self.marks[v]).collect());
        (g, old)
    }

    pub fn full_set(&self) -> VertSet {
        VertSet::from_iter(self.n, 0..self.n)
    }

    /// Connected components as sorted vertex lists, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-coloring, if one exists. Color of vertex 0 of each component is 0.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_stable_set(&self, vs: &[usize]) -> bool {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u == v || self.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u == v || !self.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_proper_coloring(&self, classes: &[Vec<usize>]) -> bool {
        let mut seen = vec![false; self.n];
        for cl in classes {
            if !self.is_stable_set(cl) {
                return false;
            }
            for &v in cl {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    /// All flat paths of length at least `min_len`, each reported once with
    /// its smaller end first, sorted lexicographically. The list in
    /// particular covers every maximal flat path.
    pub fn enumerate_flat_paths(&self, min_len: usize) -> Vec<FlatPath> {
        assert!(min_len >= 2, "flat paths have length at least 2");
        let mut out = Vec::new();
        for p0 in 0..self.n {
            for &p1 in &self.adj[p0] {
                let mut path = vec![p0, p1];
                loop {
                    let last = *path.last().unwrap();
                    if path.len() >= 3
                        && path.len() - 1 >= min_len
                        && p0 < last
                        && self.ends_share_no_outside_neighbor(&path)
                    {
                        out.push(FlatPath {
                            vertices: path.clone(),
                        });
                    }
                    // Interior vertices need degree exactly 2, so growth past
                    // `last` is only possible when `last` has one other edge.
                    if self.degree(last) != 2 {
                        break;
                    }
                    let prev = path[path.len() - 2];
                    let next = *self.adj[last].iter().find(|&&w| w != prev).unwrap();
                    if path.iter().any(|&p| p == next || (p != last && self.adjacent(p, next))) {
                        break;
                    }
                    path.push(next);
                }
            }
        }
        out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out
    }

    fn ends_share_no_outside_neighbor(&self, path: &[usize]) -> bool {
        let a = path[0];
        let b = *path.last().unwrap();
        let mut common = self.rows[a].intersection(&self.rows[b]);
        for &p in path {
            common.remove(p);
        }
        common.is_empty()
    }

    /// Independent checker for the flat-path invariants.
    pub fn is_flat_path(&self, path: &[usize]) -> bool {
        if path.len() < 3 {
            return false;
        }
        let mut sorted = path.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != path.len() {
            return false;
        }
        for i in 0..path.len() {
            for j in i + 1..path.len() {
                let adj = self.adjacent(path[i], path[j]);
                if adj != (j == i + 1) {
                    return false;
                }
            }
        }
        if path[1..path.len() - 1].iter().any(|&v| self.degree(v) != 2) {
            return false;
        }
        self.ends_share_no_outside_neighbor(path)
    }
}

impl std::fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WeightedGraph(n={}, m={})", self.n(), self.m())
    }
}

/// Ordered vertex sequence of an induced path whose interior has degree 2 in
/// the host graph and whose ends share no neighbor outside the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatPath {
    pub vertices: Vec<usize>,
}

impl FlatPath {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Multigraph: parallel edges are distinct entries with their own weights.
/// Loops are rejected. Arises as the root `R''` of the line-extension
/// transform, where two contracted paths may share both ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize, Weight)>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Weight) -> usize {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        assert_ne!(u, v, "multigraph loop");
        self.edges.push((u.min(v), u.max(v), w));
        self.edges.len() - 1
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, Weight)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize, Weight) {
        self.edges[i]
    }

    /// Line graph: one vertex per edge, adjacency = sharing an endpoint.
    /// Vertex i of the result carries edge i's weight.
    pub fn line_graph(&self) -> WeightedGraph {
        let m = self.edges.len();
        let mut edges = Vec::new();
        for i in 0..m {
            let (a, b, _) = self.edges[i];
            for (j, &(c, d, _)) in self.edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        WeightedGraph::new(m, &edges).with_weights(self.edges.iter().map(|e| e.2).collect())
    }

    pub fn is_acyclic(&self) -> bool {
        // Parallel edges count as a cycle.
        let mut parent = (0..self.n).collect::<Vec<_>>();
        fn find(parent: &mut Vec<usize>, v: usize) -> usize {
            if parent[v] != v {
                parent[v] = find(parent, parent[v]);
            }
            parent[v]
        }
        for &(u, v, _) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_acyclic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn cycle(n: usize) -> WeightedGraph {
        WeightedGraph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> WeightedGraph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        WeightedGraph::new(n, &e)
    }

    #[test]
    fn complement_examples() {
        // C5 and P4 are self-complementary, K3 complements to the edgeless graph.
        let c5 = cycle(5);
        assert_eq!(c5.complement().m(), 5);
        assert_eq!(complete(3).complement().m(), 0);
        let p4 = WeightedGraph::new(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.complement().m(), 3);
    }

    #[test]
    fn complement_is_involution() {
        let g = fixtures::hex12();
        assert!(g.complement().complement() == g);
    }

    #[test]
    fn zero_restrict_identity_and_structure() {
        let g = fixtures::theta8();
        let all = g.full_set();
        assert!(g.zero_restrict(&all) == g);
        let keep = VertSet::from_iter(g.n(), [0]);
        let z = g.zero_restrict(&keep);
        assert_eq!(z.m(), g.m());
        assert_eq!(z.weight(0), 1);
        assert_eq!(z.weight(1), 0);
    }

    #[test]
    fn flat_paths_on_c6() {
        let g = cycle(6);
        let paths = g.enumerate_flat_paths(2);
        assert!(paths.iter().any(|p| p.vertices == vec![0, 1, 2]));
        for p in &paths {
            assert!(g.is_flat_path(&p.vertices));
        }
        // Length-4 arcs of C6 fail the common-neighbor condition.
        assert!(paths.iter().all(|p| p.len() <= 3));
    }

    #[test]
    fn flat_paths_on_k4_empty() {
        assert!(complete(4).enumerate_flat_paths(2).is_empty());
    }

    #[test]
    fn flat_paths_on_hex12() {
        let g = fixtures::hex12();
        let paths = g.enumerate_flat_paths(3);
        // a-c1-c2-b is the fixture's canonical flat path.
        assert!(paths.iter().any(|p| p.vertices == vec![0, 1, 2, 3]));
        for p in &paths {
            assert!(g.is_flat_path(&p.vertices));
        }
    }

    #[test]
    fn line_graph_of_triangle_root() {
        let mut r = Multigraph::new(4);
        r.add_edge(0, 1, 1);
        r.add_edge(0, 2, 1);
        r.add_edge(0, 3, 1);
        let l = r.line_graph();
        assert_eq!((l.n(), l.m()), (3, 3));
        assert!(r.is_tree());
    }
}

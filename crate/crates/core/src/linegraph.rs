//! Line-graph recognition by Krausz clique partition: the edges of a line
//! graph partition into cliques with every vertex in at most two of them.
//! The reconstruction returns a root graph plus the vertex-to-root-edge map,
//! and every answer is verified by replaying L(root) against the input.

use crate::graph::{Multigraph, WeightedGraph};
use crate::vset::VertSet;

/// A root graph R with L(R) equal to the recognized graph: vertex v of the
/// graph is edge `edge_of[v]` of the root.
#[derive(Clone, Debug)]
pub struct LineCertificate {
    pub root: Multigraph,
    pub edge_of: Vec<usize>,
}

impl LineCertificate {
    /// Exact adjacency replay: u ~ v in g iff their root edges share an end.
    pub fn verify(&self, g: &WeightedGraph) -> bool {
        if self.edge_of.len() != g.n() {
            return false;
        }
        for u in 0..g.n() {
            let (a, b, _) = self.root.edge(self.edge_of[u]);
            for v in u + 1..g.n() {
                let (c, d, _) = self.root.edge(self.edge_of[v]);
                let share = a == c || a == d || b == c || b == d;
                if share != g.adjacent(u, v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn root_is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.root
            .edges()
            .iter()
            .all(|&(u, v, _)| seen.insert((u, v)))
    }

    pub fn root_is_bipartite(&self) -> bool {
        let n = self.root.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut adj = vec![Vec::new(); n];
        for &(u, v, _) in self.root.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for &w in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}

/// Recognizes g as the line graph of a (simple) root, component-wise. The
/// returned root may formally be a multigraph but parallel edges only arise
/// from constructed transforms, never from recognition.
pub fn recognize_line_graph(g: &WeightedGraph) -> Option<LineCertificate> {
    let mut root = Multigraph::new(0);
    let mut edge_of = vec![usize::MAX; g.n()];
    for comp in g.components() {
        recognize_component(g, &comp, &mut root, &mut edge_of)?;
    }
    let cert = LineCertificate { root, edge_of };
    if cert.verify(g) {
        Some(cert)
    } else {
        None
    }
}

fn recognize_component(
    g: &WeightedGraph,
    comp: &[usize],
    root: &mut Multigraph,
    edge_of: &mut [usize],
) -> Option<()> {
    if comp.len() == 1 {
        let a = root.add_vertex();
        let b = root.add_vertex();
        edge_of[comp[0]] = root.add_edge(a, b, g.weight(comp[0]));
        return Some(());
    }
    // necessary condition, and a fast reject: each neighborhood splits into
    // at most two cliques
    for &v in comp {
        if !neighborhood_two_cliques(g, v) {
            return None;
        }
    }
    let edges: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
        .collect();
    for &(x, y) in &edges {
        let mut t: Vec<usize> = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&w| g.adjacent(w, y))
            .collect();
        t.sort_unstable();
        // the cell containing xy is {x,y} plus all of T, or all but one
        let mut candidates: Vec<Vec<usize>> = vec![t.clone()];
        for &skip in &t {
            candidates.push(t.iter().copied().filter(|&w| w != skip).collect());
        }
        for extra in candidates {
            let mut cell = vec![x, y];
            cell.extend(extra);
            cell.sort_unstable();
            if !g.is_clique(&cell) {
                continue;
            }
            if let Some(cells) = propagate_partition(g, comp, &cell) {
                install_component(g, comp, &cells, root, edge_of);
                return Some(());
            }
        }
    }
    None
}

/// True if the neighborhood of v can be covered by two cliques, i.e. the
/// complement of G[N(v)] is bipartite.
fn neighborhood_two_cliques(g: &WeightedGraph, v: usize) -> bool {
    let ns = g.neighbors(v);
    let k = ns.len();
    let mut color: Vec<Option<bool>> = vec![None; k];
    for s in 0..k {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            let c = color[i].unwrap();
            for j in 0..k {
                if j != i && !g.adjacent(ns[i], ns[j]) {
                    match color[j] {
                        None => {
                            color[j] = Some(!c);
                            stack.push(j);
                        }
                        Some(cj) if cj == c => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

/// Grows the edge-clique partition from a starting cell. Any vertex already
/// in one cell with uncovered edges determines its second cell completely.
fn propagate_partition(
    g: &WeightedGraph,
    comp: &[usize],
    start: &[usize],
) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut cell_count = vec![0usize; n];
    let mut assigned: Vec<VertSet> = vec![VertSet::new(n); n];
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut add_cell = |cell: &[usize],
                        cell_count: &mut Vec<usize>,
                        assigned: &mut Vec<VertSet>|
     -> bool {
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                if assigned[u].contains(v) {
                    return false;
                }
            }
        }
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                assigned[u].insert(v);
                assigned[v].insert(u);
            }
        }
        for &u in cell {
            cell_count[u] += 1;
            if cell_count[u] > 2 {
                return false;
            }
        }
        cells.push(cell.to_vec());
        true
    };
    if !add_cell(start, &mut cell_count, &mut assigned) {
        return None;
    }
    loop {
        let next = comp.iter().copied().find(|&u| {
            cell_count[u] >= 1 && g.neighbors(u).iter().any(|&w| !assigned[u].contains(w))
        });
        let u = match next {
            Some(u) => u,
            None => break,
        };
        if cell_count[u] >= 2 {
            return None;
        }
        let mut cell: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| !assigned[u].contains(w))
            .collect();
        cell.push(u);
        cell.sort_unstable();
        if !g.is_clique(&cell) {
            return None;
        }
        if !add_cell(&cell, &mut cell_count, &mut assigned) {
            return None;
        }
    }
    // every component edge covered?
    for &u in comp {
        for &v in g.neighbors(u) {
            if v > u && !assigned[u].contains(v) {
                return None;
            }
        }
    }
    Some(cells)
}

fn install_component(
    g: &WeightedGraph,
    comp: &[usize],
    cells: &[Vec<usize>],
    root: &mut Multigraph,
    edge_of: &mut [usize],
) {
    let base: Vec<usize> = cells.iter().map(|_| root.add_vertex()).collect();
    let mut cells_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            cells_of[v].push(i);
        }
    }
    for &v in comp {
        match cells_of[v].as_slice() {
            [c1, c2] => {
                edge_of[v] = root.add_edge(base[*c1], base[*c2], g.weight(v));
            }
            [c1] => {
                let pendant = root.add_vertex();
                edge_of[v] = root.add_edge(base[*c1], pendant, g.weight(v));
            }
            _ => unreachable!("cell partition left a vertex uncovered"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k3_prefers_bipartite_root() {
        let cert = recognize_line_graph(&fixtures::complete(3)).unwrap();
        assert!(cert.root_is_bipartite());
        assert!(cert.root.is_tree());
    }

    #[test]
    fn c6_root_is_c6() {
        let cert = recognize_line_graph(&fixtures::cycle(6)).unwrap();
        assert_eq!(cert.root.n(), 6);
        assert!(cert.root_is_bipartite());
        assert!(!cert.root.is_acyclic());
    }

    #[test]
    fn claw_is_not_a_line_graph() {
        assert!(recognize_line_graph(&fixtures::star(3)).is_none());
    }

    #[test]
    fn k4_is_line_of_star() {
        let cert = recognize_line_graph(&fixtures::complete(4)).unwrap();
        assert!(cert.root.is_tree());
    }

    #[test]
    fn line_of_random_bipartite_round_trips() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..40 {
            let left = 2 + rng.gen_range(0..4);
            let right = 2 + rng.gen_range(0..4);
            let mut r = Multigraph::new(left + right);
            let mut pairs = Vec::new();
            for u in 0..left {
                for v in 0..right {
                    if rng.gen_bool(0.5) {
                        pairs.push((u, left + v));
                    }
                }
            }
            if pairs.len() < 2 {
                continue;
            }
            for &(u, v) in &pairs {
                r.add_edge(u, v, 1);
            }
            let l = r.line_graph();
            let cert = recognize_line_graph(&l)
                .unwrap_or_else(|| panic!("trial {trial}: line graph not recognized"));
            assert!(cert.verify(&l));
            assert!(cert.root_is_bipartite());
        }
    }

    #[test]
    fn line_of_tree_recognized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = 3 + rng.gen_range(0..8);
            let mut r = Multigraph::new(n);
            for v in 1..n {
                let p = rng.gen_range(0..v);
                r.add_edge(p, v, 1);
            }
            let l = r.line_graph();
            let cert = recognize_line_graph(&l).expect("line of tree");
            assert!(cert.root.is_acyclic());
        }
    }
}

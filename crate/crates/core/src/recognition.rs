//! Recognition of the basic graph classes and their extensions, with
//! replayable certificates.

use crate::graph::{Multigraph, WeightedGraph};
use crate::linegraph::{recognize_line_graph, LineCertificate};

/// Tagged recognition evidence. Complement variants carry the certificate of
/// the complement graph.
#[derive(Clone, Debug)]
pub enum BasicCertificate {
    Bipartite { colors: Vec<bool> },
    LineOfBipartite(LineCertificate),
    ComplementBipartite { colors: Vec<bool> },
    ComplementLineOfBipartite(LineCertificate),
    DoubleSplit(DoubleSplitCert),
    PathCobipartite(PathCobipCert),
    ComplementPathCobipartite(PathCobipCert),
    PathDoubleSplit(PathDoubleSplitCert),
    ComplementPathDoubleSplit(PathDoubleSplitCert),
    EhfBasic(EhfCert),
}

impl BasicCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            BasicCertificate::Bipartite { .. } => "bipartite",
            BasicCertificate::LineOfBipartite(_) => "line-of-bipartite",
            BasicCertificate::ComplementBipartite { .. } => "complement-bipartite",
            BasicCertificate::ComplementLineOfBipartite(_) => "complement-line-of-bipartite",
            BasicCertificate::DoubleSplit(_) => "double-split",
            BasicCertificate::PathCobipartite(_) => "path-cobipartite",
            BasicCertificate::ComplementPathCobipartite(_) => "complement-path-cobipartite",
            BasicCertificate::PathDoubleSplit(_) => "path-double-split",
            BasicCertificate::ComplementPathDoubleSplit(_) => "complement-path-double-split",
            BasicCertificate::EhfBasic(_) => "ehf-basic",
        }
    }
}

/// Pairs (a_i, b_i) of the matching part and (c_j, d_j) of the cocktail part.
#[derive(Clone, Debug)]
pub struct DoubleSplitCert {
    pub ab_pairs: Vec<(usize, usize)>,
    pub cd_pairs: Vec<(usize, usize)>,
}

/// Cliques A and B plus the odd paths (full vertex sequences, clique end to
/// clique end) whose interiors make up P.
#[derive(Clone, Debug)]
pub struct PathCobipCert {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

/// Matching pairs with their odd connecting paths (a_i .. b_i inclusive;
/// direct edges appear as 2-vertex paths), plus the cocktail pairs.
#[derive(Clone, Debug)]
pub struct PathDoubleSplitCert {
    pub paths: Vec<Vec<usize>>,
    pub cd_pairs: Vec<(usize, usize)>,
}

/// Deletion set of size <= 2 whose removal leaves the line graph of a tree.
#[derive(Clone, Debug)]
pub struct EhfCert {
    pub deleted: Vec<usize>,
    /// Line certificate of g minus `deleted`; `sub_ids[i]` is the g-id of
    /// vertex i of that subgraph.
    pub line: LineCertificate,
    pub sub_ids: Vec<usize>,
}

/// Recognizes the first matching basic Berge class in the fixed order:
/// bipartite, line-of-bipartite, their complements, double split,
/// path-cobipartite, its complement, path-double split, its complement.
pub fn recognize_basic_berge(g: &WeightedGraph) -> Option<BasicCertificate> {
    if let Some(colors) = g.bipartition() {
        return Some(BasicCertificate::Bipartite { colors });
    }
    if let Some(cert) = recognize_line_of_bipartite(g) {
        return Some(BasicCertificate::LineOfBipartite(cert));
    }
    let comp = g.complement();
    if let Some(colors) = comp.bipartition() {
        return Some(BasicCertificate::ComplementBipartite { colors });
    }
    if let Some(cert) = recognize_line_of_bipartite(&comp) {
        return Some(BasicCertificate::ComplementLineOfBipartite(cert));
    }
    if let Some(cert) = recognize_double_split(g) {
        return Some(BasicCertificate::DoubleSplit(cert));
    }
    if let Some(cert) = recognize_path_cobipartite(g) {
        return Some(BasicCertificate::PathCobipartite(cert));
    }
    if let Some(cert) = recognize_path_cobipartite(&comp) {
        return Some(BasicCertificate::ComplementPathCobipartite(cert));
    }
    if let Some(cert) = recognize_path_double_split(g) {
        return Some(BasicCertificate::PathDoubleSplit(cert));
    }
    if let Some(cert) = recognize_path_double_split(&comp) {
        return Some(BasicCertificate::ComplementPathDoubleSplit(cert));
    }
    None
}

fn recognize_line_of_bipartite(g: &WeightedGraph) -> Option<LineCertificate> {
    recognize_line_graph(g).filter(|c| c.root_is_simple() && c.root_is_bipartite())
}

// ---------------------------------------------------------------------------
// Double split
// ---------------------------------------------------------------------------

fn recognize_double_split(g: &WeightedGraph) -> Option<DoubleSplitCert> {
    let n = g.n();
    if n < 8 || n % 2 != 0 {
        return None;
    }
    // matching-part vertices have degree l+1, cocktail-part k+2l-2; the two
    // values always differ since k+l >= 4
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    degs.dedup();
    if degs.len() != 2 {
        return None;
    }
    let (d1, d2) = (degs[0], degs[1]);
    let p: Vec<usize> = (0..n).filter(|&v| g.degree(v) == d1).collect();
    let q: Vec<usize> = (0..n).filter(|&v| g.degree(v) == d2).collect();
    if p.len() % 2 != 0 || q.len() % 2 != 0 {
        return None;
    }
    let (k, l) = (p.len() / 2, q.len() / 2);
    if k < 2 || l < 2 || d1 != l + 1 || d2 != k + 2 * l - 2 {
        return None;
    }
    let cert = DoubleSplitCert {
        ab_pairs: pair_by_adjacency(g, &p, true)?,
        cd_pairs: pair_by_adjacency(g, &q, false)?,
    };
    if verify_double_split(g, &cert) {
        Some(cert)
    } else {
        None
    }
}

/// Pairs each vertex of `vs` with its unique neighbor (adjacent=true) or
/// unique non-neighbor (adjacent=false) within `vs`.
fn pair_by_adjacency(
    g: &WeightedGraph,
    vs: &[usize],
    adjacent: bool,
) -> Option<Vec<(usize, usize)>> {
    let mut partner = std::collections::HashMap::new();
    for &u in vs {
        let mates: Vec<usize> = vs
            .iter()
            .copied()
            .filter(|&v| v != u && g.adjacent(u, v) == adjacent)
            .collect();
        if mates.len() != 1 {
            return None;
        }
        partner.insert(u, mates[0]);
    }
    let mut out = Vec::new();
    for &u in vs {
        let v = partner[&u];
        if partner.get(&v) != Some(&u) {
            return None;
        }
        if u < v {
            out.push((u, v));
        }
    }
    Some(out)
}

fn verify_double_split(g: &WeightedGraph, cert: &DoubleSplitCert) -> bool {
    let k = cert.ab_pairs.len();
    let l = cert.cd_pairs.len();
    if k < 2 || l < 2 || 2 * k + 2 * l != g.n() {
        return false;
    }
    for (i, &(a, b)) in cert.ab_pairs.iter().enumerate() {
        if !g.adjacent(a, b) {
            return false;
        }
        for &(a2, b2) in &cert.ab_pairs[i + 1..] {
            if g.adjacent(a, a2) || g.adjacent(a, b2) || g.adjacent(b, a2) || g.adjacent(b, b2) {
                return false;
            }
        }
    }
    for (j, &(c, d)) in cert.cd_pairs.iter().enumerate() {
        if g.adjacent(c, d) {
            return false;
        }
        for &(c2, d2) in &cert.cd_pairs[j + 1..] {
            if !(g.adjacent(c, c2) && g.adjacent(c, d2) && g.adjacent(d, c2) && g.adjacent(d, d2))
            {
                return false;
            }
        }
    }
    for &(a, b) in &cert.ab_pairs {
        for &(c, d) in &cert.cd_pairs {
            let pattern1 = g.adjacent(a, c) && g.adjacent(b, d) && !g.adjacent(a, d) && !g.adjacent(b, c);
            let pattern2 = g.adjacent(a, d) && g.adjacent(b, c) && !g.adjacent(a, c) && !g.adjacent(b, d);
            if !(pattern1 || pattern2) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Path-cobipartite
// ---------------------------------------------------------------------------

/// Maximal runs of degree-2 vertices with their two attachment vertices.
/// Fails on cycle components (returned separately) and dangling runs.
struct Deg2Runs {
    /// (attach_left, run vertices, attach_right)
    runs: Vec<(usize, Vec<usize>, usize)>,
    /// components that are entirely degree-2 cycles
    cycles: Vec<Vec<usize>>,
}

fn degree2_runs(g: &WeightedGraph) -> Option<Deg2Runs> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut runs = Vec::new();
    let mut cycles = Vec::new();
    for v in 0..n {
        if seen[v] || g.degree(v) != 2 {
            continue;
        }
        // gather the run component of v within the degree-2 vertices
        let mut comp = vec![v];
        seen[v] = true;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if g.degree(w) == 2 && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        let ends: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&u| g.neighbors(u).iter().filter(|&&w| g.degree(w) == 2).count() <= 1)
            .collect();
        if ends.is_empty() {
            // closed degree-2 cycle
            comp.sort_unstable();
            cycles.push(comp);
            continue;
        }
        // order the run by walking from its smallest end
        let start = *ends.iter().min().unwrap();
        let mut run = vec![start];
        let mut prev = usize::MAX;
        loop {
            let last = *run.last().unwrap();
            match g
                .neighbors(last)
                .iter()
                .copied()
                .find(|&w| w != prev && g.degree(w) == 2)
            {
                Some(w) => {
                    prev = last;
                    run.push(w);
                }
                None => break,
            }
        }
        if run.len() != comp.len() {
            return None; // branching among degree-2 vertices cannot happen
        }
        let left = g
            .neighbors(run[0])
            .iter()
            .copied()
            .find(|&w| g.degree(w) != 2)?;
        let right = g
            .neighbors(*run.last().unwrap())
            .iter()
            .copied()
            .find(|&w| g.degree(w) != 2 && (run.len() > 1 || w != left))?;
        runs.push((left, run, right));
    }
    runs.sort_by_key(|(_, run, _)| run[0]);
    Some(Deg2Runs { runs, cycles })
}

fn recognize_path_cobipartite(g: &WeightedGraph) -> Option<PathCobipCert> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let runs = degree2_runs(g)?;
    if !runs.cycles.is_empty() {
        // a cycle component can only be the whole graph: an even cycle split
        // into two odd arcs between opposite vertices
        if runs.cycles.len() != 1 || runs.cycles[0].len() != n || n % 2 != 0 || n < 6 {
            return None;
        }
        let cyc = order_cycle(g)?;
        let a = cyc[0];
        let b = cyc[n / 2];
        let mut p1: Vec<usize> = cyc[0..=n / 2].to_vec();
        let mut p2: Vec<usize> = cyc[n / 2..].to_vec();
        p2.push(cyc[0]);
        p2.reverse();
        if p1.len() % 2 != 0 {
            return None; // arcs must be odd paths
        }
        p1[0] = a;
        let cert = PathCobipCert {
            a: vec![a],
            b: vec![b],
            paths: vec![p1, p2],
        };
        return verify_path_cobipartite(g, &cert).then_some(cert);
    }
    // trims: each run may shed up to two vertices at each end into a clique
    let trims: Vec<Vec<(usize, usize)>> = runs
        .runs
        .iter()
        .map(|(_, run, _)| {
            let mut opts = Vec::new();
            for tl in 0..=2.min(run.len()) {
                for tr in 0..=2usize.min(run.len() - tl) {
                    // remaining run must have even size (odd path length)
                    if (run.len() - tl - tr) % 2 == 0 {
                        opts.push((tl, tr));
                    }
                }
            }
            opts
        })
        .collect();
    let mut combo = vec![0usize; trims.len()];
    let mut budget = 20_000usize;
    loop {
        if budget == 0 {
            return None;
        }
        budget -= 1;
        if let Some(cert) = try_cobip_assignment(g, &runs.runs, &trims, &combo) {
            return Some(cert);
        }
        // next combination
        let mut i = 0;
        loop {
            if i == combo.len() {
                return None;
            }
            combo[i] += 1;
            if combo[i] < trims[i].len() {
                break;
            }
            combo[i] = 0;
            i += 1;
        }
        if combo.iter().all(|&c| c == 0) {
            return None;
        }
    }
}

fn order_cycle(g: &WeightedGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut out = vec![0usize];
    let mut prev = usize::MAX;
    while out.len() < n {
        let cur = *out.last().unwrap();
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
        prev = cur;
        out.push(next);
    }
    Some(out)
}

fn try_cobip_assignment(
    g: &WeightedGraph,
    runs: &[(usize, Vec<usize>, usize)],
    trims: &[Vec<(usize, usize)>],
    combo: &[usize],
) -> Option<PathCobipCert> {
    let n = g.n();
    let mut in_p = vec![false; n];
    let mut paths = Vec::new();
    for (ri, (l, run, r)) in runs.iter().enumerate() {
        let (tl, tr) = trims[ri][combo[ri]];
        let core = &run[tl..run.len() - tr];
        for &v in core {
            in_p[v] = true;
        }
        if core.is_empty() {
            continue;
        }
        let ea = if tl == 0 { *l } else { run[tl - 1] };
        let eb = if tr == 0 { *r } else { run[run.len() - tr] };
        let mut path = vec![ea];
        path.extend_from_slice(core);
        path.push(eb);
        paths.push(path);
    }
    // 2-color the clique part: non-adjacent vertices differ; a path end and
    // each of its clique neighbors agree
    let clique: Vec<usize> = (0..n).filter(|&v| !in_p[v]).collect();
    if clique.is_empty() {
        return None;
    }
    let mut dsu = ParityDsu::new(n);
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            if !g.adjacent(u, v) && !dsu.union(u, v, true) {
                return None;
            }
        }
    }
    for path in &paths {
        let (ea, eb) = (path[0], *path.last().unwrap());
        for &(e, _other) in &[(ea, eb), (eb, ea)] {
            for &w in g.neighbors(e) {
                if !in_p[w] && !dsu.union(e, w, false) {
                    return None;
                }
            }
        }
        if !dsu.union(ea, eb, true) {
            return None;
        }
    }
    // read off the sides
    let anchor = clique[0];
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &v in &clique {
        match dsu.relation(anchor, v) {
            Some(false) => a.push(v),
            Some(true) => b.push(v),
            None => {
                // unconstrained component: put it on the A side
                dsu.union(anchor, v, false);
                a.push(v);
            }
        }
    }
    // orient paths A-end first
    let mut oriented = Vec::new();
    for path in paths {
        let ea = path[0];
        if a.contains(&ea) {
            oriented.push(path);
        } else {
            let mut rev = path;
            rev.reverse();
            oriented.push(rev);
        }
    }
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let cert = PathCobipCert {
        a,
        b,
        paths: oriented,
    };
    verify_path_cobipartite(g, &cert).then_some(cert)
}

/// Union-find with parity: union(u,v,differ) merges with the given relation;
/// returns false on contradiction.
struct ParityDsu {
    parent: Vec<usize>,
    // parity to parent
    par: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            par: vec![false; n],
        }
    }

    fn find(&mut self, v: usize) -> (usize, bool) {
        if self.parent[v] == v {
            return (v, false);
        }
        let (root, p) = self.find(self.parent[v]);
        self.parent[v] = root;
        self.par[v] ^= p;
        (root, self.par[v])
    }

    fn union(&mut self, u: usize, v: usize, differ: bool) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return (pu ^ pv) == differ;
        }
        self.parent[ru] = rv;
        self.par[ru] = pu ^ pv ^ differ;
        true
    }

    fn relation(&mut self, u: usize, v: usize) -> Option<bool> {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            Some(pu ^ pv)
        } else {
            None
        }
    }
}

pub fn verify_path_cobipartite(g: &WeightedGraph, cert: &PathCobipCert) -> bool {
    let n = g.n();
    if cert.a.is_empty() || cert.b.is_empty() {
        return false;
    }
    if !g.is_clique(&cert.a) || !g.is_clique(&cert.b) {
        return false;
    }
    let mut covered = vec![0u8; n];
    for &v in &cert.a {
        covered[v] += 1;
    }
    for &v in &cert.b {
        covered[v] += 1;
    }
    let mut interior = vec![false; n];
    for path in &cert.paths {
        if path.len() < 2 || path.len() % 2 != 0 {
            return false; // odd length means an even vertex count
        }
        let (ea, eb) = (path[0], *path.last().unwrap());
        if !cert.a.contains(&ea) || !cert.b.contains(&eb) {
            return false;
        }
        for w in path.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                return false;
            }
        }
        for &v in &path[1..path.len() - 1] {
            if g.degree(v) != 2 {
                return false;
            }
            covered[v] += 1;
            interior[v] = true;
        }
        // path ends keep to their own side
        for &w in g.neighbors(ea) {
            if !interior[w] && !path.contains(&w) && !cert.a.contains(&w) {
                return false;
            }
        }
        for &w in g.neighbors(eb) {
            if !interior[w] && !path.contains(&w) && !cert.b.contains(&w) {
                return false;
            }
        }
    }
    covered.iter().all(|&c| c == 1)
}

// ---------------------------------------------------------------------------
// Path-double split
// ---------------------------------------------------------------------------

fn recognize_path_double_split(g: &WeightedGraph) -> Option<PathDoubleSplitCert> {
    let n = g.n();
    let e: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    let runs = degree2_runs(g)?;
    if !runs.cycles.is_empty() {
        return None;
    }
    let rest = n - e.len();
    if rest % 2 != 0 {
        return None;
    }
    // per run one (a_i, b_i) pair; remaining matching pairs are direct edges
    let path_pairs = runs.runs.len();
    for k in path_pairs.max(2)..=rest / 2 {
        let l = rest / 2 - k;
        if l < 2 {
            continue;
        }
        if let Some(cert) = try_path_double_split(g, &runs, k, l) {
            return Some(cert);
        }
    }
    None
}

fn try_path_double_split(
    g: &WeightedGraph,
    runs: &Deg2Runs,
    k: usize,
    l: usize,
) -> Option<PathDoubleSplitCert> {
    let n = g.n();
    let deg_ab = l + 1;
    let deg_q = k + 2 * l - 2;
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut in_ab = vec![false; n];
    for (a, run, b) in &runs.runs {
        if (run.len() + 1) % 2 != 1 {
            return None; // path length must be odd
        }
        if g.degree(*a) != deg_ab || g.degree(*b) != deg_ab {
            return None;
        }
        let mut p = vec![*a];
        p.extend_from_slice(run);
        p.push(*b);
        in_ab[*a] = true;
        in_ab[*b] = true;
        paths.push(p);
    }
    // the rest of the matching part: degree l+1 vertices not on paths
    let spare: Vec<usize> = (0..n)
        .filter(|&v| g.degree(v) == deg_ab && !in_ab[v] && g.degree(v) != 2)
        .collect();
    let direct = pair_by_adjacency(g, &spare, true)?;
    if paths.len() + direct.len() != k {
        return None;
    }
    for &(a, b) in &direct {
        in_ab[a] = true;
        in_ab[b] = true;
        paths.push(vec![a, b]);
    }
    let q: Vec<usize> = (0..n)
        .filter(|&v| !in_ab[v] && g.degree(v) != 2)
        .collect();
    if q.len() != 2 * l || q.iter().any(|&v| g.degree(v) != deg_q) {
        return None;
    }
    let cd_pairs = pair_by_adjacency(g, &q, false)?;
    paths.sort();
    let cert = PathDoubleSplitCert { paths, cd_pairs };
    verify_path_double_split(g, &cert).then_some(cert)
}

pub fn verify_path_double_split(g: &WeightedGraph, cert: &PathDoubleSplitCert) -> bool {
    let n = g.n();
    let k = cert.paths.len();
    let l = cert.cd_pairs.len();
    if k < 2 || l < 2 {
        return false;
    }
    let mut covered = vec![0u8; n];
    for path in &cert.paths {
        if path.len() % 2 != 0 {
            return false; // odd length
        }
        for w in path.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                return false;
            }
        }
        for &v in path {
            covered[v] += 1;
        }
        for &v in &path[1..path.len() - 1] {
            if g.degree(v) != 2 {
                return false;
            }
        }
        // unique path: the ends must not be adjacent unless the path is the
        // edge itself
        if path.len() > 2 && g.adjacent(path[0], *path.last().unwrap()) {
            return false;
        }
    }
    for (j, &(c, d)) in cert.cd_pairs.iter().enumerate() {
        if g.adjacent(c, d) {
            return false;
        }
        covered[c] += 1;
        covered[d] += 1;
        for &(c2, d2) in &cert.cd_pairs[j + 1..] {
            if !(g.adjacent(c, c2) && g.adjacent(c, d2) && g.adjacent(d, c2) && g.adjacent(d, d2))
            {
                return false;
            }
        }
    }
    if covered.iter().any(|&c| c != 1) {
        return false;
    }
    // no edges between different (a_i, b_i) groups
    for (i, p1) in cert.paths.iter().enumerate() {
        let ends1 = [p1[0], *p1.last().unwrap()];
        for p2 in &cert.paths[i + 1..] {
            let ends2 = [p2[0], *p2.last().unwrap()];
            for &u in &ends1 {
                for &v in &ends2 {
                    if g.adjacent(u, v) {
                        return false;
                    }
                }
            }
        }
    }
    // exactly two disjoint edges between ends and each cocktail pair
    for p in &cert.paths {
        let (a, b) = (p[0], *p.last().unwrap());
        for &(c, d) in &cert.cd_pairs {
            let pattern1 =
                g.adjacent(a, c) && g.adjacent(b, d) && !g.adjacent(a, d) && !g.adjacent(b, c);
            let pattern2 =
                g.adjacent(a, d) && g.adjacent(b, c) && !g.adjacent(a, c) && !g.adjacent(b, d);
            if !(pattern1 || pattern2) {
                return false;
            }
        }
        // interior vertices must not see the cocktail part
        for &v in &p[1..p.len() - 1] {
            for &w in g.neighbors(v) {
                if cert.cd_pairs.iter().any(|&(c, d)| c == w || d == w) {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Basic even-hole-free graphs
// ---------------------------------------------------------------------------

/// Recognizes membership in the even-hole-free basic class: some set A of at
/// most two vertices whose deletion leaves the line graph of a tree, with the
/// whole graph even-hole-free. The even-hole test only needs to look at holes
/// through A, because the line graph of a tree has no holes at all.
pub fn recognize_basic_ehf(g: &WeightedGraph) -> Option<BasicCertificate> {
    let n = g.n();
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new()];
    candidates.extend((0..n).map(|v| vec![v]));
    for u in 0..n {
        for v in u + 1..n {
            candidates.push(vec![u, v]);
        }
    }
    for deleted in candidates {
        let mut keep = g.full_set();
        for &v in &deleted {
            keep.remove(v);
        }
        let (sub, sub_ids) = g.induced(&keep);
        let line = match recognize_line_graph(&sub) {
            Some(c) if c.root.is_tree() => c,
            _ => continue,
        };
        match even_hole_through(g, &deleted, &sub, &sub_ids, &line) {
            Some(_) => return None, // a real even hole: the graph is out
            None => {
                return Some(BasicCertificate::EhfBasic(EhfCert {
                    deleted,
                    line,
                    sub_ids,
                }))
            }
        }
    }
    None
}

/// Looks for an even hole through the deleted set, using the fact that any
/// two vertices of the line graph of a tree are joined by a unique induced
/// path. Returns a witness hole if one exists.
fn even_hole_through(
    g: &WeightedGraph,
    deleted: &[usize],
    sub: &WeightedGraph,
    sub_ids: &[usize],
    line: &LineCertificate,
) -> Option<Vec<usize>> {
    let mut sub_of = vec![usize::MAX; g.n()];
    for (i, &v) in sub_ids.iter().enumerate() {
        sub_of[v] = i;
    }
    let tree = TreePaths::new(&line.root);
    let path_between = |x: usize, y: usize| -> Option<Vec<usize>> {
        tree.induced_path(sub, line, x, y)
    };
    // holes through exactly one deleted vertex
    for &a in deleted {
        let nbrs: Vec<usize> = g
            .neighbors(a)
            .iter()
            .copied()
            .filter(|&w| !deleted.contains(&w))
            .collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.adjacent(u, w) {
                    continue;
                }
                let p = match path_between(sub_of[u], sub_of[w]) {
                    Some(p) => p,
                    None => continue,
                };
                // interior must avoid N(a); hole length = |p| + 1
                if p[1..p.len() - 1]
                    .iter()
                    .any(|&v| g.adjacent(sub_ids[v], a))
                {
                    continue;
                }
                if (p.len() + 1) % 2 == 0 {
                    let mut hole: Vec<usize> = p.iter().map(|&v| sub_ids[v]).collect();
                    hole.push(a);
                    return Some(hole);
                }
            }
        }
    }
    if deleted.len() == 2 {
        let (a, b) = (deleted[0], deleted[1]);
        if let Some(h) = even_hole_through_pair(g, a, b, sub, sub_ids, &sub_of, line, &tree) {
            return Some(h);
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn even_hole_through_pair(
    g: &WeightedGraph,
    a: usize,
    b: usize,
    sub: &WeightedGraph,
    sub_ids: &[usize],
    sub_of: &[usize],
    line: &LineCertificate,
    tree: &TreePaths,
) -> Option<Vec<usize>> {
    let na: Vec<usize> = g
        .neighbors(a)
        .iter()
        .copied()
        .filter(|&w| w != b)
        .collect();
    let nb: Vec<usize> = g
        .neighbors(b)
        .iter()
        .copied()
        .filter(|&w| w != a)
        .collect();
    if g.adjacent(a, b) {
        // a and b consecutive on the hole: a-u ... w-b plus the edge ab
        for &u in &na {
            if g.adjacent(u, b) {
                continue;
            }
            for &w in &nb {
                if u == w || g.adjacent(w, a) {
                    continue;
                }
                let p = match tree.induced_path(sub, line, sub_of[u], sub_of[w]) {
                    Some(p) => p,
                    None => continue,
                };
                if p[1..p.len() - 1]
                    .iter()
                    .any(|&v| g.adjacent(sub_ids[v], a) || g.adjacent(sub_ids[v], b))
                {
                    continue;
                }
                // hole length = edges of p + 3
                if (p.len() + 2) % 2 == 0 {
                    let mut hole: Vec<usize> = p.iter().map(|&v| sub_ids[v]).collect();
                    hole.push(b);
                    hole.push(a);
                    return Some(hole);
                }
            }
        }
        return None;
    }
    // a and b opposite on the hole: a-u1..v1-b-v2..u2-a
    for (i1, &u1) in na.iter().enumerate() {
        if g.adjacent(u1, b) {
            continue;
        }
        for &v1 in &nb {
            if v1 == u1 || g.adjacent(v1, a) {
                continue;
            }
            let p1 = match tree.induced_path(sub, line, sub_of[u1], sub_of[v1]) {
                Some(p) => p,
                None => continue,
            };
            if p1[1..p1.len() - 1]
                .iter()
                .any(|&v| g.adjacent(sub_ids[v], a) || g.adjacent(sub_ids[v], b))
            {
                continue;
            }
            for &u2 in &na[i1 + 1..] {
                if g.adjacent(u2, b) || g.adjacent(u1, u2) {
                    continue;
                }
                for &v2 in &nb {
                    if v2 == v1 || v2 == u2 || g.adjacent(v2, a) || g.adjacent(v1, v2) {
                        continue;
                    }
                    let p2 = match tree.induced_path(sub, line, sub_of[u2], sub_of[v2]) {
                        Some(p) => p,
                        None => continue,
                    };
                    if p2[1..p2.len() - 1]
                        .iter()
                        .any(|&v| g.adjacent(sub_ids[v], a) || g.adjacent(sub_ids[v], b))
                    {
                        continue;
                    }
                    // disjointness and chordlessness between the two paths
                    if p1.iter().any(|v| p2.contains(v)) {
                        continue;
                    }
                    let crossing = p1
                        .iter()
                        .any(|&x| p2.iter().any(|&y| sub.adjacent(x, y)));
                    if crossing {
                        continue;
                    }
                    let len = (p1.len() - 1) + (p2.len() - 1) + 4;
                    if len % 2 == 0 {
                        let mut hole: Vec<usize> = p1.iter().map(|&v| sub_ids[v]).collect();
                        hole.push(b);
                        hole.extend(p2.iter().rev().map(|&v| sub_ids[v]));
                        hole.push(a);
                        return Some(hole);
                    }
                }
            }
        }
    }
    None
}

/// Unique induced paths in the line graph of a tree, via tree geodesics.
struct TreePaths {
    adj: Vec<Vec<(usize, usize)>>, // (neighbor, edge id)
}

impl TreePaths {
    fn new(root: &Multigraph) -> Self {
        let mut adj = vec![Vec::new(); root.n()];
        for (i, &(u, v, _)) in root.edges().iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        TreePaths { adj }
    }

    /// The unique induced path between two vertices of L(tree), as vertices
    /// of the line graph: the edges along the tree geodesic between the two
    /// root edges. None when they sit in different components.
    fn induced_path(
        &self,
        sub: &WeightedGraph,
        line: &LineCertificate,
        x: usize,
        y: usize,
    ) -> Option<Vec<usize>> {
        if x == y {
            return Some(vec![x]);
        }
        let mut vertex_of_edge = std::collections::HashMap::new();
        for (v, &e) in line.edge_of.iter().enumerate() {
            vertex_of_edge.insert(e, v);
        }
        let ex = line.edge_of[x];
        let ey = line.edge_of[y];
        let (a, b, _) = line.root.edge(ex);
        let (p, q, _) = line.root.edge(ey);
        let mut middle: Vec<usize> = Vec::new();
        if ![a, b].iter().any(|&u| u == p || u == q) {
            // BFS from the ends of ex to the ends of ey, not using ex or ey
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut seen = vec![false; self.adj.len()];
            let mut queue = std::collections::VecDeque::new();
            for start in [a, b] {
                seen[start] = true;
                queue.push_back(start);
            }
            let mut hit = None;
            'bfs: while let Some(v) = queue.pop_front() {
                for &(w, id) in &self.adj[v] {
                    if id == ex || id == ey || seen[w] {
                        continue;
                    }
                    seen[w] = true;
                    prev[w] = Some((v, id));
                    if w == p || w == q {
                        hit = Some(w);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
            let mut v = hit?;
            while let Some((u, id)) = prev[v] {
                middle.push(*vertex_of_edge.get(&id)?);
                v = u;
            }
            middle.reverse();
        }
        let mut path = vec![x];
        path.extend(middle);
        path.push(y);
        // the geodesic construction must be an induced path; verify
        for i in 0..path.len() {
            for j in i + 1..path.len() {
                if sub.adjacent(path[i], path[j]) != (j == i + 1) {
                    return None;
                }
            }
        }
        Some(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn berge_order_picks_bipartite_first() {
        let cert = recognize_basic_berge(&fixtures::cycle(6)).unwrap();
        assert!(matches!(cert, BasicCertificate::Bipartite { .. }));
    }

    #[test]
    fn k3_is_line_of_bipartite() {
        let cert = recognize_basic_berge(&fixtures::complete(3)).unwrap();
        assert!(matches!(cert, BasicCertificate::LineOfBipartite(_)));
    }

    #[test]
    fn double_split_recognized() {
        // the 8-vertex double split happens to be a line graph of a bipartite
        // graph too, so the fixed order hands it the earlier certificate;
        // the dedicated recognizer still parses the defining structure
        let g = fixtures::double_split_8();
        let cert = recognize_double_split(&g).unwrap();
        assert!(verify_double_split(&g, &cert));
        assert_eq!((cert.ab_pairs.len(), cert.cd_pairs.len()), (2, 2));
        assert!(recognize_basic_berge(&g).is_some());
    }

    /// Two triangles A = {0,1,2}, B = {3,4,5}, full cross edges except at the
    /// path ends, with the edge 0-3 subdivided into the odd path 0-6-7-3.
    fn small_path_cobipartite() -> WeightedGraph {
        WeightedGraph::new(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 6),
                (6, 7),
                (7, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
            ],
        )
    }

    #[test]
    fn path_cobipartite_recognized() {
        let g = small_path_cobipartite();
        let cert = recognize_path_cobipartite(&g).expect("structure should parse");
        assert!(verify_path_cobipartite(&g, &cert));
        assert_eq!(cert.paths.len(), 1);
        assert_eq!(cert.paths[0].len(), 4);
        // the full dispatcher also lands on a certificate for it
        assert!(recognize_basic_berge(&g).is_some());
    }

    #[test]
    fn path_double_split_recognized() {
        // double split with the edge a1-b1 subdivided twice, keeping the
        // connecting path odd: 0-8-9-2
        let base = fixtures::double_split_8();
        let mut edges: Vec<(usize, usize)> = base
            .edges()
            .into_iter()
            .filter(|&e| e != (0, 2))
            .collect();
        edges.extend_from_slice(&[(0, 8), (8, 9), (9, 2)]);
        let g = WeightedGraph::new(10, &edges);
        let cert = recognize_path_double_split(&g).expect("structure should parse");
        assert!(verify_path_double_split(&g, &cert));
        assert_eq!(cert.paths.len(), 2);
        assert!(recognize_basic_berge(&g).is_some());
    }

    #[test]
    fn ehf_basic_examples() {
        // K4 = L(K_{1,4}) with empty deletion set
        let cert = recognize_basic_ehf(&fixtures::complete(4)).unwrap();
        if let BasicCertificate::EhfBasic(c) = &cert {
            assert!(c.deleted.is_empty());
        } else {
            panic!("expected ehf certificate");
        }
        // P4 plus a dominating vertex: some single deletion works (removing
        // the dominating vertex does, and so does an interior one)
        let g = WeightedGraph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]);
        let cert = recognize_basic_ehf(&g).unwrap();
        if let BasicCertificate::EhfBasic(c) = &cert {
            assert_eq!(c.deleted.len(), 1);
            assert!(c.line.root.is_tree());
        } else {
            panic!("expected ehf certificate");
        }
        // C4 is an even hole
        assert!(recognize_basic_ehf(&fixtures::cycle(4)).is_none());
        // C5 is fine: delete two adjacent vertices to get P3
        assert!(recognize_basic_ehf(&fixtures::cycle(5)).is_some());
    }

    #[test]
    fn ehf_agrees_with_brute_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..60 {
            let n = 4 + rng.gen_range(0..4);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = WeightedGraph::new(n, &edges);
            let fast = recognize_basic_ehf(&g).is_some();
            let brute = brute_ehf_basic(&g);
            assert_eq!(fast, brute, "disagreement on {:?}", g.edges());
        }
    }

    fn brute_ehf_basic(g: &WeightedGraph) -> bool {
        if crate::oracle::brute_even_hole(g, 12).unwrap().is_some() {
            return false;
        }
        let n = g.n();
        let mut candidates: Vec<Vec<usize>> = vec![Vec::new()];
        candidates.extend((0..n).map(|v| vec![v]));
        for u in 0..n {
            for v in u + 1..n {
                candidates.push(vec![u, v]);
            }
        }
        candidates.into_iter().any(|del| {
            let mut keep = g.full_set();
            for &v in &del {
                keep.remove(v);
            }
            let (sub, _) = g.induced(&keep);
            recognize_line_graph(&sub).is_some_and(|c| c.root.is_tree())
        })
    }
}

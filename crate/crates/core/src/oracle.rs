//! Exponential-time reference implementations. Ground truth for the tests
//! and the verify mode; never on the hot path.

use crate::error::OracleError;
use crate::graph::{wadd, Weight, WeightedGraph};
use crate::twojoin::{validate_split, TwoJoinSplit};
use crate::vset::VertSet;

/// Default vertex cap for the exhaustive searches.
pub const DEFAULT_CAP: usize = 26;
/// Default cap for the exhaustive 2-join enumeration.
pub const TWO_JOIN_CAP: usize = 12;

fn check_cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Exact maximum weighted stable set by branch and bound.
pub fn brute_alpha(g: &WeightedGraph) -> Result<(Weight, Vec<usize>), OracleError> {
    brute_alpha_capped(g, DEFAULT_CAP)
}

pub fn brute_alpha_capped(
    g: &WeightedGraph,
    cap: usize,
) -> Result<(Weight, Vec<usize>), OracleError> {
    check_cap(g.n(), cap)?;
    let n = g.n();
    let suffix_weight: Vec<Weight> = {
        let mut s = vec![0; n + 1];
        for v in (0..n).rev() {
            s[v] = wadd(s[v + 1], g.weight(v));
        }
        s
    };
    let mut best: (Weight, Vec<usize>) = (0, Vec::new());
    let mut chosen = Vec::new();
    let mut blocked = VertSet::new(n);
    branch_alpha(g, 0, 0, &suffix_weight, &mut chosen, &mut blocked, &mut best);
    Ok(best)
}

fn branch_alpha(
    g: &WeightedGraph,
    v: usize,
    acc: Weight,
    suffix: &[Weight],
    chosen: &mut Vec<usize>,
    blocked: &mut VertSet,
    best: &mut (Weight, Vec<usize>),
) {
    if acc > best.0 {
        *best = (acc, chosen.clone());
    }
    if v == g.n() || wadd(acc, suffix[v]) <= best.0 {
        return;
    }
    if !blocked.contains(v) {
        let newly: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w > v && !blocked.contains(w))
            .collect();
        for &w in &newly {
            blocked.insert(w);
        }
        chosen.push(v);
        branch_alpha(g, v + 1, wadd(acc, g.weight(v)), suffix, chosen, blocked, best);
        chosen.pop();
        for &w in &newly {
            blocked.remove(w);
        }
    }
    branch_alpha(g, v + 1, acc, suffix, chosen, blocked, best);
}

/// Exact maximum weighted clique, via the complement.
pub fn brute_omega(g: &WeightedGraph) -> Result<(Weight, Vec<usize>), OracleError> {
    brute_omega_capped(g, DEFAULT_CAP)
}

pub fn brute_omega_capped(
    g: &WeightedGraph,
    cap: usize,
) -> Result<(Weight, Vec<usize>), OracleError> {
    brute_alpha_capped(&g.complement(), cap)
}

/// Exact chromatic number with a proper coloring, unit weights.
pub fn brute_chi(g: &WeightedGraph) -> Result<(usize, Vec<usize>), OracleError> {
    brute_chi_capped(g, DEFAULT_CAP)
}

pub fn brute_chi_capped(g: &WeightedGraph, cap: usize) -> Result<(usize, Vec<usize>), OracleError> {
    check_cap(g.n(), cap)?;
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    // vertex order by descending degree helps the backtracking
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if color_rec(g, &order, 0, k, &mut colors) {
            return Ok((k, colors));
        }
    }
    unreachable!("n colors always suffice");
}

fn color_rec(g: &WeightedGraph, order: &[usize], i: usize, k: usize, colors: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let used = order[..i]
        .iter()
        .map(|&w| colors[w])
        .max()
        .map_or(0, |m| m + 1);
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_rec(g, order, i + 1, k, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

/// The witness side of a failed Berge check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OddWitness {
    Hole(Vec<usize>),
    Antihole(Vec<usize>),
}

/// True iff no induced odd cycle of length >= 5 exists in g or its
/// complement; otherwise the witness.
pub fn brute_is_berge(g: &WeightedGraph) -> Result<(bool, Option<OddWitness>), OracleError> {
    brute_is_berge_capped(g, DEFAULT_CAP)
}

pub fn brute_is_berge_capped(
    g: &WeightedGraph,
    cap: usize,
) -> Result<(bool, Option<OddWitness>), OracleError> {
    check_cap(g.n(), cap)?;
    if let Some(h) = find_hole(g, |len| len >= 5 && len % 2 == 1) {
        return Ok((false, Some(OddWitness::Hole(h))));
    }
    if let Some(h) = find_hole(&g.complement(), |len| len >= 5 && len % 2 == 1) {
        return Ok((false, Some(OddWitness::Antihole(h))));
    }
    Ok((true, None))
}

/// Any even hole (induced cycle of even length >= 4), or None.
pub fn brute_even_hole(g: &WeightedGraph, cap: usize) -> Result<Option<Vec<usize>>, OracleError> {
    check_cap(g.n(), cap)?;
    Ok(find_hole(g, |len| len >= 4 && len % 2 == 0))
}

/// First induced cycle (length >= 4) whose length satisfies `want`, by DFS
/// over induced paths rooted at their minimum vertex.
pub fn find_hole(g: &WeightedGraph, want: impl Fn(usize) -> bool + Copy) -> Option<Vec<usize>> {
    let n = g.n();
    let mut path = Vec::new();
    for s in 0..n {
        path.clear();
        path.push(s);
        if let Some(h) = hole_dfs(g, s, &mut path, want) {
            return Some(h);
        }
    }
    None
}

fn hole_dfs(
    g: &WeightedGraph,
    s: usize,
    path: &mut Vec<usize>,
    want: impl Fn(usize) -> bool + Copy,
) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    let closes = path.len() >= 3 && g.adjacent(last, s);
    if closes && path.len() >= 4 && want(path.len()) && path[1] < last {
        return Some(path.clone());
    }
    if closes {
        // any longer cycle through this path would carry the chord s-last
        return None;
    }
    for &w in g.neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        // keep the path induced: w may see only its predecessor (and
        // possibly s, which the closure rule above handles)
        let interior = if path.len() >= 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        if interior.iter().any(|&p| g.adjacent(p, w)) {
            continue;
        }
        path.push(w);
        if let Some(h) = hole_dfs(g, s, path, want) {
            return Some(h);
        }
        path.pop();
    }
    None
}

/// All 2-joins by exhaustive enumeration over the side containing vertex 0,
/// canonicalized and validated. Splits are returned whether or not they are
/// connected or path 2-joins; the classification comes from validate_split.
pub fn brute_two_joins(g: &WeightedGraph) -> Result<Vec<TwoJoinSplit>, OracleError> {
    brute_two_joins_capped(g, TWO_JOIN_CAP)
}

pub fn brute_two_joins_capped(
    g: &WeightedGraph,
    cap: usize,
) -> Result<Vec<TwoJoinSplit>, OracleError> {
    check_cap(g.n(), cap)?;
    let n = g.n();
    let mut out = Vec::new();
    if n < 6 {
        return Ok(out);
    }
    // iterate subsets of 1..n joined with vertex 0 as side X1
    for mask in 0u64..(1 << (n - 1)) {
        let mut x1 = VertSet::new(n);
        x1.insert(0);
        for v in 1..n {
            if mask >> (v - 1) & 1 == 1 {
                x1.insert(v);
            }
        }
        let s1 = x1.len();
        if s1 < 3 || n - s1 < 3 {
            continue;
        }
        if let Some(split) = derive_split(g, &x1) {
            if validate_split(g, &split).is_ok() {
                out.push(split);
            }
        }
    }
    out.sort_by_key(|s| s.key());
    Ok(out)
}

/// Derives the unique candidate split of the partition (x1, V\x1): the cross
/// edges must form exactly two complete-bipartite blobs.
fn derive_split(g: &WeightedGraph, x1: &VertSet) -> Option<TwoJoinSplit> {
    let n = g.n();
    let x2 = x1.complement();
    let mut cross: Vec<(usize, usize)> = Vec::new();
    for u in x1.iter() {
        for &v in g.neighbors(u) {
            if x2.contains(v) {
                cross.push((u, v));
            }
        }
    }
    if cross.is_empty() {
        return None;
    }
    // union-find over boundary vertices to split the cross edges into blobs
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, v: usize) -> usize {
        if p[v] != v {
            p[v] = find(p, p[v]);
        }
        p[v]
    }
    for &(u, v) in &cross {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    for &(u, _) in &cross {
        let r = find(&mut parent, u);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    if roots.len() != 2 {
        return None;
    }
    let blob = |root: usize, parent: &mut Vec<usize>| {
        let mut left = VertSet::new(n);
        let mut right = VertSet::new(n);
        for &(u, v) in &cross {
            if find(parent, u) == root {
                left.insert(u);
                right.insert(v);
            }
        }
        (left, right)
    };
    let (l1, r1) = blob(roots[0], &mut parent);
    let (l2, r2) = blob(roots[1], &mut parent);
    // completeness check per blob
    for (l, r) in [(&l1, &r1), (&l2, &r2)] {
        for u in l.iter() {
            for v in r.iter() {
                if !g.adjacent(u, v) {
                    return None;
                }
            }
        }
    }
    let (a1, a2, b1, b2) = if l1.first() < l2.first() {
        (l1, r1, l2, r2)
    } else {
        (l2, r2, l1, r1)
    };
    Some(TwoJoinSplit {
        x1: x1.clone(),
        a1,
        b1,
        a2,
        b2,
    })
}

/// Minimum-weight vertex cover by subset enumeration; test cross-checks only.
pub fn brute_min_vertex_cover(g: &WeightedGraph, cap: usize) -> Result<Weight, OracleError> {
    check_cap(g.n(), cap.min(20))?;
    let n = g.n();
    let edges = g.edges();
    let mut best = g.total_weight();
    for mask in 0u64..(1 << n) {
        if edges
            .iter()
            .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
        {
            let w = crate::graph::wsum((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| g.weight(v)));
            best = best.min(w);
        }
    }
    Ok(best)
}

/// Maximum-weight matching by exhaustive search; test cross-checks only.
pub fn brute_max_matching(edges: &[(usize, usize, Weight)], cap_edges: usize) -> Weight {
    assert!(edges.len() <= cap_edges.min(20), "too many edges for brute matching");
    let m = edges.len();
    let mut best = 0;
    'outer: for mask in 0u64..(1 << m) {
        let mut used = std::collections::HashSet::new();
        let mut w: Weight = 0;
        for i in 0..m {
            if mask >> i & 1 == 1 {
                let (u, v, wt) = edges[i];
                if !used.insert(u) || !used.insert(v) {
                    continue 'outer;
                }
                w = wadd(w, wt);
            }
        }
        best = best.max(w);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn alpha_examples() {
        assert_eq!(brute_alpha(&fixtures::cycle(5)).unwrap().0, 2);
        assert_eq!(brute_alpha(&fixtures::complete(4)).unwrap().0, 1);
        let p3 = fixtures::path(3).with_weights(vec![3, 5, 3]);
        let (w, s) = brute_alpha(&p3).unwrap();
        assert_eq!((w, s), (6, vec![0, 2]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(brute_omega(&fixtures::cycle(5)).unwrap().0, 2);
        assert_eq!(brute_omega(&fixtures::complete(4)).unwrap().0, 4);
        assert_eq!(brute_omega(&fixtures::theta8()).unwrap().0, 2);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(brute_chi(&fixtures::cycle(5)).unwrap().0, 3);
        assert_eq!(brute_chi(&fixtures::hex12()).unwrap().0, 2);
        assert_eq!(brute_chi(&fixtures::complete(4)).unwrap().0, 4);
    }

    #[test]
    fn berge_examples() {
        let (ok, w) = brute_is_berge(&fixtures::cycle(5)).unwrap();
        assert!(!ok);
        assert!(matches!(w, Some(OddWitness::Hole(h)) if h.len() == 5));
        assert!(brute_is_berge(&fixtures::cycle(6)).unwrap().0);
        assert!(!brute_is_berge(&fixtures::cycle(7)).unwrap().0);
        assert!(brute_is_berge(&fixtures::hex12()).unwrap().0);
    }

    #[test]
    fn even_hole_search() {
        assert!(brute_even_hole(&fixtures::cycle(6), 26).unwrap().is_some());
        assert!(brute_even_hole(&fixtures::cycle(5), 26).unwrap().is_none());
        assert!(brute_even_hole(&fixtures::cycle(7), 26).unwrap().is_none());
    }

    #[test]
    fn two_joins_examples() {
        assert!(brute_two_joins(&fixtures::complete(4)).unwrap().is_empty());
        let c8 = brute_two_joins(&fixtures::cycle(8)).unwrap();
        assert!(c8.iter().any(|s| {
            s.x1.to_vec() == vec![0, 1, 2, 3]
                && s.a1.to_vec() == vec![0]
                && s.b1.to_vec() == vec![3]
        }));
        let t8 = brute_two_joins(&fixtures::theta8()).unwrap();
        assert!(t8.iter().any(|s| {
            s.x1.to_vec() == vec![0, 1, 2, 3]
                && s.a1.to_vec() == vec![0]
                && s.b1.to_vec() == vec![2]
        }));
    }

    #[test]
    fn two_joins_canonical_idempotent() {
        for s in brute_two_joins(&fixtures::hex12()).unwrap() {
            assert_eq!(s.canonicalize(), s.canonicalize().canonicalize());
            assert_eq!(s, s.canonicalize());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = fixtures::cycle(13);
        assert!(matches!(
            brute_two_joins(&g),
            Err(OracleError::CapExceeded { .. })
        ));
    }

    #[test]
    fn alpha_equals_omega_of_complement() {
        for g in [fixtures::theta8(), fixtures::cycle(7), fixtures::double_split_8()] {
            assert_eq!(
                brute_alpha(&g).unwrap().0,
                brute_omega(&g.complement()).unwrap().0
            );
        }
    }

    #[test]
    fn koenig_on_bipartite() {
        for g in [fixtures::hex12(), fixtures::cycle(6), fixtures::star(4)] {
            let alpha = brute_alpha(&g).unwrap().0;
            let vc = brute_min_vertex_cover(&g, 16).unwrap();
            assert_eq!(alpha + vc, g.total_weight());
        }
    }

    #[test]
    fn hex12_zero_restrict_alpha() {
        let g = fixtures::hex12();
        let keep = VertSet::from_iter(12, 0..6);
        let z = g.zero_restrict(&keep);
        assert_eq!(brute_alpha(&z).unwrap().0, 3);
    }
}

//! Extensions of graphs: replacing flat paths by marked flat claws or flat
//! vaults, and recovering the original graph from the marks.

use crate::error::RecognitionError;
use crate::graph::{Weight, WeightedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    Claw,
    Vault,
}

impl GadgetKind {
    pub fn size(self) -> usize {
        match self {
            GadgetKind::Claw => 4,
            GadgetKind::Vault => 6,
        }
    }

    /// Parity-preserving kind for a path with `len` edges: even lengths
    /// become claws, odd lengths become vaults.
    pub fn parity_preserving(len: usize) -> GadgetKind {
        if len % 2 == 0 {
            GadgetKind::Claw
        } else {
            GadgetKind::Vault
        }
    }
}

/// Internal edges of a gadget, in local vertex numbering q1..q4 / r1..r6.
pub fn gadget_internal_edges(kind: GadgetKind) -> &'static [(usize, usize)] {
    match kind {
        GadgetKind::Claw => &[(0, 1), (1, 2), (1, 3)],
        GadgetKind::Vault => &[(2, 3), (3, 4), (4, 5), (5, 2)],
    }
}

/// Local indices attached to the A-side and B-side corners.
pub fn gadget_attach(kind: GadgetKind) -> (&'static [usize], &'static [usize]) {
    match kind {
        GadgetKind::Claw => (&[0], &[2]),
        GadgetKind::Vault => (&[0, 4], &[1, 5]),
    }
}

/// Flat-claw invariant checker: only internal edges q1q2, q2q3, q2q4;
/// q4 has degree 1 and q2 degree 3 in the host; q1, q3 share no neighbor
/// besides q2.
pub fn is_flat_claw(g: &WeightedGraph, q: &[usize; 4]) -> bool {
    let [q1, q2, q3, q4] = *q;
    let distinct = {
        let mut s = *q;
        s.sort_unstable();
        s.windows(2).all(|w| w[0] != w[1])
    };
    distinct
        && g.adjacent(q1, q2)
        && g.adjacent(q2, q3)
        && g.adjacent(q2, q4)
        && !g.adjacent(q1, q3)
        && !g.adjacent(q1, q4)
        && !g.adjacent(q3, q4)
        && g.degree(q4) == 1
        && g.degree(q2) == 3
        && g.neighbors(q1)
            .iter()
            .all(|&w| w == q2 || !g.adjacent(w, q3))
}

/// Flat-vault invariant checker: internal edges exactly the 4-hole
/// r3-r4-r5-r6; r1 and r5 (resp. r2 and r6) agree outside the gadget;
/// r1, r2 share no neighbor; r3, r4 have degree 2 in the host.
pub fn is_flat_vault(g: &WeightedGraph, r: &[usize; 6]) -> bool {
    let [r1, r2, r3, r4, r5, r6] = *r;
    let mut s = *r;
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let hole = g.adjacent(r3, r4)
        && g.adjacent(r4, r5)
        && g.adjacent(r5, r6)
        && g.adjacent(r6, r3)
        && !g.adjacent(r3, r5)
        && !g.adjacent(r4, r6);
    if !hole {
        return false;
    }
    for (u, v) in [(r1, r2), (r1, r3), (r1, r4), (r1, r5), (r1, r6), (r2, r3), (r2, r4), (r2, r5), (r2, r6)] {
        if g.adjacent(u, v) {
            return false;
        }
    }
    if g.degree(r3) != 2 || g.degree(r4) != 2 {
        return false;
    }
    let outside = |v: usize, excl: &[usize]| {
        let mut ns: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|w| !excl.contains(w))
            .collect();
        ns.sort_unstable();
        ns
    };
    outside(r1, &[]) == outside(r5, &[r4, r6])
        && outside(r2, &[]) == outside(r6, &[r3, r5])
        && g.neighbors(r1).iter().all(|&w| !g.adjacent(w, r2) && w != r2)
}

/// Result of replacing one flat path by a gadget.
#[derive(Clone, Debug)]
pub struct ExtendResult {
    pub graph: WeightedGraph,
    /// Old ids of the surviving vertices; index = new id.
    pub kept: Vec<usize>,
    /// New ids of the gadget vertices, in q1..q4 / r1..r6 order.
    pub gadget: Vec<usize>,
}

/// Replaces the flat path (given as its vertex sequence) by a marked gadget
/// whose A-side is glued to the neighbors of the first path vertex and whose
/// B-side to the neighbors of the last.
pub fn extend_path(
    g: &WeightedGraph,
    path: &[usize],
    kind: GadgetKind,
    gadget_weights: &[Weight],
    mark: u32,
) -> ExtendResult {
    assert!(g.is_flat_path(path), "extension requires a flat path");
    assert_eq!(gadget_weights.len(), kind.size());
    let p1 = path[0];
    let pk = *path.last().unwrap();
    let a_att: Vec<usize> = g
        .neighbors(p1)
        .iter()
        .copied()
        .filter(|&w| w != path[1])
        .collect();
    let b_att: Vec<usize> = g
        .neighbors(pk)
        .iter()
        .copied()
        .filter(|&w| w != path[path.len() - 2])
        .collect();
    let kept: Vec<usize> = (0..g.n()).filter(|v| !path.contains(v)).collect();
    let mut new_of = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        new_of[v] = i;
    }
    let base = kept.len();
    let gadget: Vec<usize> = (0..kind.size()).map(|i| base + i).collect();
    let mut edges = Vec::new();
    for &u in &kept {
        for &v in g.neighbors(u) {
            if u < v && !path.contains(&v) {
                edges.push((new_of[u], new_of[v]));
            }
        }
    }
    for &(i, j) in gadget_internal_edges(kind) {
        edges.push((gadget[i], gadget[j]));
    }
    let (a_idx, b_idx) = gadget_attach(kind);
    for &i in a_idx {
        for &w in &a_att {
            edges.push((gadget[i], new_of[w]));
        }
    }
    for &i in b_idx {
        for &w in &b_att {
            edges.push((gadget[i], new_of[w]));
        }
    }
    let mut weights: Vec<Weight> = kept.iter().map(|&v| g.weight(v)).collect();
    weights.extend_from_slice(gadget_weights);
    let mut marks: Vec<Option<u32>> = kept.iter().map(|&v| g.mark(v)).collect();
    marks.extend(std::iter::repeat(Some(mark)).take(kind.size()));
    let graph = WeightedGraph::new(base + kind.size(), &edges)
        .with_weights(weights)
        .with_marks(marks);
    ExtendResult { graph, kept, gadget }
}

/// One recognized gadget of an extension.
#[derive(Clone, Debug)]
pub struct GadgetRecord {
    pub kind: GadgetKind,
    /// Gadget vertex ids in the extension, q1..q4 / r1..r6 order.
    pub ids: Vec<usize>,
    pub mark: u32,
}

/// The recognized gadgets of an extension together with the reconstructed
/// underlying graph.
#[derive(Clone, Debug)]
pub struct ExtensionRecord {
    pub gadgets: Vec<GadgetRecord>,
    pub underlying: WeightedGraph,
    /// Underlying ids of the surviving extension vertices: `kept[i]` is the
    /// underlying id of the i-th unmarked extension vertex (ascending).
    pub kept_ext: Vec<usize>,
    pub kept_under: Vec<usize>,
    /// Reconstructed path (underlying ids) per gadget, p1..pk order.
    pub paths: Vec<Vec<usize>>,
}

/// Identifies all marked gadgets, validates them, and rebuilds the original
/// graph with each gadget replaced by a flat path of its marked length.
/// Unmarked graphs are their own underlying graph.
pub fn strip_extension(g: &WeightedGraph) -> Result<ExtensionRecord, RecognitionError> {
    let gadgets = detect_gadgets(g)?;
    // unmarked extension vertices keep ascending order, then the paths in
    // gadget order
    let kept_ext: Vec<usize> = (0..g.n()).filter(|&v| g.mark(v).is_none()).collect();
    let mut in_gadget = vec![false; g.n()];
    for rec in &gadgets {
        for &v in &rec.ids {
            if in_gadget[v] {
                return Err(RecognitionError::MalformedMark(
                    "gadget groups overlap".into(),
                ));
            }
            in_gadget[v] = true;
        }
    }
    if (0..g.n()).any(|v| g.mark(v).is_some() && !in_gadget[v]) {
        return Err(RecognitionError::MalformedMark(
            "marked vertices left over after grouping".into(),
        ));
    }
    let mut under_of_ext = vec![usize::MAX; g.n()];
    for (i, &v) in kept_ext.iter().enumerate() {
        under_of_ext[v] = i;
    }
    let mut next = kept_ext.len();
    let mut paths = Vec::new();
    let mut under_edges: Vec<(usize, usize)> = Vec::new();
    for &v in &kept_ext {
        for &w in g.neighbors(v) {
            if w > v && g.mark(w).is_none() {
                under_edges.push((under_of_ext[v], under_of_ext[w]));
            }
        }
    }
    // per-gadget path reconstruction; attachments to other gadgets resolve to
    // those gadgets' own path ends
    let mut end_a = vec![usize::MAX; gadgets.len()]; // underlying id of p1
    let mut end_b = vec![usize::MAX; gadgets.len()];
    for (gi, rec) in gadgets.iter().enumerate() {
        let k = rec.mark as usize;
        let path: Vec<usize> = (0..k).map(|i| next + i).collect();
        next += k;
        for w in path.windows(2) {
            under_edges.push((w[0], w[1]));
        }
        end_a[gi] = path[0];
        end_b[gi] = path[k - 1];
        paths.push(path);
    }
    // map of each gadget vertex to (gadget index, role) for attachment lookup
    let mut role = vec![None; g.n()];
    for (gi, rec) in gadgets.iter().enumerate() {
        let (a_idx, b_idx) = gadget_attach(rec.kind);
        for (local, &v) in rec.ids.iter().enumerate() {
            let r = if a_idx.contains(&local) {
                Some('a')
            } else if b_idx.contains(&local) {
                Some('b')
            } else {
                None
            };
            role[v] = Some((gi, r));
        }
    }
    let resolve = |v: usize| -> Option<usize> {
        if g.mark(v).is_none() {
            Some(under_of_ext[v])
        } else {
            match role[v] {
                Some((gi, Some('a'))) => Some(end_a[gi]),
                Some((gi, Some('b'))) => Some(end_b[gi]),
                _ => None, // interior gadget vertices carry no attachments
            }
        }
    };
    for (gi, rec) in gadgets.iter().enumerate() {
        let (a_idx, b_idx) = gadget_attach(rec.kind);
        let mut push_att = |local: usize, end: usize| -> Result<(), RecognitionError> {
            let v = rec.ids[local];
            for &w in g.neighbors(v) {
                if rec.ids.contains(&w) {
                    continue;
                }
                match resolve(w) {
                    Some(u) => under_edges.push((end, u)),
                    None => {
                        return Err(RecognitionError::MalformedMark(format!(
                            "gadget attaches to an interior gadget vertex {w}"
                        )))
                    }
                }
            }
            Ok(())
        };
        push_att(a_idx[0], end_a[gi])?;
        push_att(b_idx[0], end_b[gi])?;
    }
    under_edges.sort_unstable();
    under_edges.dedup();
    let mut weights = vec![1; next];
    for &v in &kept_ext {
        weights[under_of_ext[v]] = g.weight(v);
    }
    let underlying = WeightedGraph::new(next, &under_edges).with_weights(weights);
    // sanity: each rebuilt path must be flat in the underlying graph
    for (gi, path) in paths.iter().enumerate() {
        if !underlying.is_flat_path(path) {
            return Err(RecognitionError::MalformedMark(format!(
                "gadget {gi} does not rebuild into a flat path"
            )));
        }
    }
    Ok(ExtensionRecord {
        gadgets,
        underlying,
        kept_under: (0..kept_ext.len()).collect(),
        kept_ext,
        paths,
    })
}

/// Finds the gadget groups among the marked vertices: claw centers first
/// (degree 3, one pendant neighbor), then vault 4-holes with their two
/// detached tips.
fn detect_gadgets(g: &WeightedGraph) -> Result<Vec<GadgetRecord>, RecognitionError> {
    let n = g.n();
    let marked: Vec<usize> = (0..n).filter(|&v| g.mark(v).is_some()).collect();
    let mut claimed = vec![false; n];
    let mut out = Vec::new();
    // claws
    for &q2 in &marked {
        if claimed[q2] || g.degree(q2) != 3 {
            continue;
        }
        let ns = g.neighbors(q2);
        if !ns.iter().all(|&w| g.mark(w) == g.mark(q2) && !claimed[w]) {
            continue;
        }
        let pend: Vec<usize> = ns.iter().copied().filter(|&w| g.degree(w) == 1).collect();
        if pend.len() != 1 {
            continue;
        }
        let q4 = pend[0];
        let mut rest: Vec<usize> = ns.iter().copied().filter(|&w| w != q4).collect();
        rest.sort_unstable();
        let q = [rest[0], q2, rest[1], q4];
        if !is_flat_claw(g, &q) {
            return Err(RecognitionError::MalformedMark(format!(
                "marked star at {q2} is not a flat claw"
            )));
        }
        for v in q {
            claimed[v] = true;
        }
        out.push(GadgetRecord {
            kind: GadgetKind::Claw,
            ids: q.to_vec(),
            mark: g.mark(q2).unwrap(),
        });
    }
    // vaults: adjacent degree-2 marked pairs as (r3, r4)
    for &r3 in &marked {
        if claimed[r3] || g.degree(r3) != 2 {
            continue;
        }
        let r4 = match g
            .neighbors(r3)
            .iter()
            .copied()
            .find(|&w| w > r3 && !claimed[w] && g.degree(w) == 2 && g.mark(w) == g.mark(r3))
        {
            Some(w) => w,
            None => continue,
        };
        let r6 = match g.neighbors(r3).iter().copied().find(|&w| w != r4) {
            Some(w) => w,
            None => continue,
        };
        let r5 = match g.neighbors(r4).iter().copied().find(|&w| w != r3) {
            Some(w) => w,
            None => continue,
        };
        let mk = g.mark(r3);
        if g.mark(r5) != mk || g.mark(r6) != mk || claimed[r5] || claimed[r6] || !g.adjacent(r5, r6)
        {
            continue;
        }
        // the two tips mirror r5/r6 outside the hole
        let tip = |hub: usize, excl: [usize; 2]| -> Option<usize> {
            let want: Vec<usize> = g
                .neighbors(hub)
                .iter()
                .copied()
                .filter(|w| !excl.contains(w))
                .collect();
            marked.iter().copied().find(|&v| {
                !claimed[v]
                    && g.mark(v) == mk
                    && v != hub
                    && ![r3, r4, r5, r6].contains(&v)
                    && g.neighbors(v) == want.as_slice()
            })
        };
        let r1 = tip(r5, [r4, r6]);
        let r2 = tip(r6, [r3, r5]);
        let (r1, r2) = match (r1, r2) {
            (Some(a), Some(b)) if a != b => (a, b),
            _ => {
                return Err(RecognitionError::MalformedMark(format!(
                    "marked 4-hole at {r3} has no matching vault tips"
                )))
            }
        };
        let r = [r1, r2, r3, r4, r5, r6];
        if !is_flat_vault(g, &r) {
            return Err(RecognitionError::MalformedMark(format!(
                "marked 4-hole at {r3} is not a flat vault"
            )));
        }
        for v in r {
            claimed[v] = true;
        }
        out.push(GadgetRecord {
            kind: GadgetKind::Vault,
            ids: r.to_vec(),
            mark: mk.unwrap(),
        });
    }
    out.sort_by_key(|rec| rec.ids.iter().copied().min());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn unmarked_graph_is_its_own_underlying() {
        let g = fixtures::cycle(6);
        let rec = strip_extension(&g).unwrap();
        assert!(rec.gadgets.is_empty());
        assert_eq!(rec.underlying.n(), 6);
        assert_eq!(rec.underlying.m(), 6);
    }

    #[test]
    fn vault_round_trip_on_c6() {
        let g = fixtures::cycle(6);
        let path = [0usize, 1, 2, 3];
        let ext = extend_path(&g, &path, GadgetKind::Vault, &[1; 6], 4);
        assert_eq!(ext.graph.n(), 8);
        let r: [usize; 6] = ext.gadget.clone().try_into().unwrap();
        assert!(is_flat_vault(&ext.graph, &r));
        let rec = strip_extension(&ext.graph).unwrap();
        assert_eq!(rec.gadgets.len(), 1);
        assert_eq!(rec.gadgets[0].kind, GadgetKind::Vault);
        assert_eq!(rec.gadgets[0].mark, 4);
        // underlying is a 6-cycle again
        assert_eq!(rec.underlying.n(), 6);
        assert_eq!(rec.underlying.m(), 6);
        assert!(rec.underlying.is_flat_path(&rec.paths[0]));
    }

    #[test]
    fn claw_round_trip_on_c7() {
        let g = fixtures::cycle(7);
        let path = [0usize, 1, 2, 3, 4];
        let ext = extend_path(&g, &path, GadgetKind::Claw, &[2, 1, 0, 3], 5);
        let q: [usize; 4] = ext.gadget.clone().try_into().unwrap();
        assert!(is_flat_claw(&ext.graph, &q));
        let rec = strip_extension(&ext.graph).unwrap();
        assert_eq!(rec.gadgets.len(), 1);
        assert_eq!(rec.gadgets[0].mark, 5);
        assert_eq!(rec.underlying.n(), 7);
        assert_eq!(rec.underlying.m(), 7);
    }

    #[test]
    fn stray_edge_is_malformed() {
        let g = fixtures::cycle(6);
        let ext = extend_path(&g, &[0, 1, 2, 3], GadgetKind::Claw, &[1; 4], 4);
        // add a stray edge to q4, breaking its degree-1 invariant
        let q4 = ext.gadget[3];
        let other = ext.gadget[0];
        let mut edges = ext.graph.edges();
        edges.push((q4.min(other), q4.max(other)));
        let broken = WeightedGraph::new(ext.graph.n(), &edges)
            .with_weights(ext.graph.weights().to_vec())
            .with_marks(ext.graph.marks().to_vec());
        assert!(strip_extension(&broken).is_err());
    }

    #[test]
    fn replay_reproduces_extension() {
        let g = fixtures::hex12();
        let path = [0usize, 1, 2, 3]; // a-c1-c2-b
        let ext = extend_path(&g, &path, GadgetKind::Vault, &[0, 0, 2, 2, 1, 1], 4);
        let rec = strip_extension(&ext.graph).unwrap();
        let again = extend_path(
            &rec.underlying,
            &rec.paths[0],
            rec.gadgets[0].kind,
            &rec.gadgets[0]
                .ids
                .iter()
                .map(|&v| ext.graph.weight(v))
                .collect::<Vec<_>>(),
            rec.gadgets[0].mark,
        );
        assert_eq!(again.graph.n(), ext.graph.n());
        assert_eq!(again.graph.m(), ext.graph.m());
    }
}

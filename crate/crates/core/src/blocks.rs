//! Blocks of decomposition: parity-preserving marker-path blocks, the
//! clique block, the even/odd gadget blocks and the gem block, together with
//! the lifting of block solutions back to the original graph.

use crate::error::BlockError;
use crate::extension::{gadget_attach, gadget_internal_edges, GadgetKind};
use crate::graph::{wadd, wsum, Weight, WeightedGraph};
use crate::twojoin::{Parity, SplitClass, TwoJoinSplit};
use crate::vset::VertSet;

/// Marker path of a block, in block ids: first vertex is the end complete to
/// the A-corner of the kept side, last the end complete to the B-corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkerPath {
    pub vertices: Vec<usize>,
}

impl MarkerPath {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn a_end(&self) -> usize {
        self.vertices[0]
    }

    pub fn b_end(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// A block of decomposition: the kept side plus a marker path.
#[derive(Clone, Debug)]
pub struct BlockResult {
    pub graph: WeightedGraph,
    /// Old ids of the kept side, ascending; index = block id.
    pub kept: Vec<usize>,
    pub marker: MarkerPath,
}

/// Replaces the side opposite `keep_side` by a marker path with `marker_len`
/// edges. Kept vertices keep weights and marks; marker vertices get weight 0
/// and no mark.
pub fn build_block(
    g: &WeightedGraph,
    s: &TwoJoinSplit,
    keep_side: usize,
    marker_len: usize,
) -> BlockResult {
    assert!(marker_len >= 1);
    let (x, a, b, _) = s.side(keep_side);
    let kept: Vec<usize> = x.iter().collect();
    let mut new_of = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        new_of[v] = i;
    }
    let base = kept.len();
    let marker: Vec<usize> = (0..=marker_len).map(|i| base + i).collect();
    let mut edges = Vec::new();
    for &u in &kept {
        for &v in g.neighbors(u) {
            if u < v && x.contains(v) {
                edges.push((new_of[u], new_of[v]));
            }
        }
    }
    for w in marker.windows(2) {
        edges.push((w[0], w[1]));
    }
    for u in a.iter() {
        edges.push((new_of[u], marker[0]));
    }
    for u in b.iter() {
        edges.push((new_of[u], marker[marker_len]));
    }
    let mut weights: Vec<Weight> = kept.iter().map(|&v| g.weight(v)).collect();
    weights.extend(std::iter::repeat(0).take(marker_len + 1));
    let mut marks: Vec<Option<u32>> = kept.iter().map(|&v| g.mark(v)).collect();
    marks.extend(std::iter::repeat(None).take(marker_len + 1));
    BlockResult {
        graph: WeightedGraph::new(base + marker_len + 1, &edges)
            .with_weights(weights)
            .with_marks(marks),
        kept,
        marker: MarkerPath { vertices: marker },
    }
}

/// Marker length preserving the parity of the replaced side: 3 when its
/// corner-to-corner paths are odd, 4 when they are even.
pub fn parity_marker_len(class: &SplitClass, replaced_side: usize) -> Result<usize, BlockError> {
    match class.parity_of_side(replaced_side) {
        Some(Parity::Odd) => Ok(3),
        Some(Parity::Even) => Ok(4),
        None => Err(BlockError::Split(crate::error::SplitError::MixedParity(
            replaced_side,
        ))),
    }
}

/// Parity-preserving block keeping `keep_side`.
pub fn build_parity_block(
    g: &WeightedGraph,
    s: &TwoJoinSplit,
    class: &SplitClass,
    keep_side: usize,
) -> Result<BlockResult, BlockError> {
    let replaced = 3 - keep_side;
    Ok(build_block(g, s, keep_side, parity_marker_len(class, replaced)?))
}

/// The side stable-set quadruple: a = max stable weight of G[A1 u C1],
/// b of G[B1 u C1], c of G[C1], d of G[X1].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StableStats {
    pub a: Weight,
    pub b: Weight,
    pub c: Weight,
    pub d: Weight,
}

impl StableStats {
    /// The unconditional inequalities 0 <= c <= a,b <= d <= a+b.
    pub fn check(&self) -> Result<(), BlockError> {
        let ok = self.c <= self.a
            && self.c <= self.b
            && self.a <= self.d
            && self.b <= self.d
            && self.d <= wadd(self.a, self.b);
        if ok {
            Ok(())
        } else {
            Err(BlockError::StatsInequalityViolated(format!("{self:?}")))
        }
    }
}

/// Optimal side stable sets backing the four stats, in host-graph ids.
#[derive(Clone, Debug, Default)]
pub struct SideSolutions {
    pub for_a: Vec<usize>,
    pub for_b: Vec<usize>,
    pub for_c: Vec<usize>,
    pub for_d: Vec<usize>,
}

/// Computes (a,b,c,d) with witnesses via the supplied stable-set solver.
/// The solver is called on each side subset; in the pipeline it is the
/// basic-side solver through zero-weight restriction.
pub fn compute_stable_stats<E>(
    g: &WeightedGraph,
    s: &TwoJoinSplit,
    mut alpha: impl FnMut(&VertSet) -> Result<(Weight, Vec<usize>), E>,
) -> Result<(StableStats, SideSolutions), StatsFailure<E>> {
    let c1 = s.c1();
    let mut ac = s.a1.clone();
    ac.union_with(&c1);
    let mut bc = s.b1.clone();
    bc.union_with(&c1);
    let mut solve = |set: &VertSet| -> Result<(Weight, Vec<usize>), StatsFailure<E>> {
        let (w, witness) = alpha(set).map_err(StatsFailure::Solver)?;
        let trimmed: Vec<usize> = witness.into_iter().filter(|&v| set.contains(v)).collect();
        if g.set_weight_of(&trimmed) != w || !g.is_stable_set(&trimmed) {
            return Err(StatsFailure::Block(BlockError::StatsInequalityViolated(
                "side solver returned an inconsistent witness".into(),
            )));
        }
        Ok((w, trimmed))
    };
    let (a, for_a) = solve(&ac)?;
    let (b, for_b) = solve(&bc)?;
    let (c, for_c) = solve(&c1)?;
    let (d, for_d) = solve(&s.x1)?;
    let stats = StableStats { a, b, c, d };
    stats.check().map_err(StatsFailure::Block)?;
    Ok((
        stats,
        SideSolutions {
            for_a,
            for_b,
            for_c,
            for_d,
        },
    ))
}

/// Failure of the stats computation: either the solver failed or the
/// inequalities did.
#[derive(Debug)]
pub enum StatsFailure<E> {
    Solver(E),
    Block(BlockError),
}

// ---------------------------------------------------------------------------
// Clique block
// ---------------------------------------------------------------------------

/// Weighted block for clique computations, keeping side 2: the marker takes
/// w(a1) = omega(G[A1]), w(b1) = omega(G[B1]), w(x1) = omega(G[X1]) -
/// omega(G[A1]) on its first interior vertex, 0 elsewhere.
pub fn build_clique_block(
    g: &WeightedGraph,
    s: &TwoJoinSplit,
    marker_len: usize,
    omega_a1: Weight,
    omega_b1: Weight,
    omega_x1: Weight,
) -> BlockResult {
    assert!(marker_len >= 3, "clique block needs a marker of length >= 3");
    let mut block = build_block(g, s, 2, marker_len);
    let m = &block.marker;
    let mut weights = block.graph.weights().to_vec();
    weights[m.a_end()] = omega_a1;
    weights[m.b_end()] = omega_b1;
    weights[m.vertices[1]] = omega_x1
        .checked_sub(omega_a1)
        .expect("omega(G[A1]) exceeds omega(G[X1])");
    block.graph = block.graph.with_weights(weights);
    block
}

/// Optimal side cliques used when lifting through a clique block, in
/// host-graph ids.
#[derive(Clone, Debug, Default)]
pub struct SideCliques {
    pub in_a1: Vec<usize>,
    pub in_b1: Vec<usize>,
    pub in_x1: Vec<usize>,
}

/// Lifts a clique of the clique block back to the host graph at equal weight.
pub fn lift_clique(
    block_clique: &[usize],
    block: &BlockResult,
    sides: &SideCliques,
) -> Vec<usize> {
    let m = &block.marker;
    let on_marker: Vec<usize> = block_clique
        .iter()
        .copied()
        .filter(|v| m.vertices.contains(v))
        .collect();
    let kept_part = || -> Vec<usize> {
        block_clique
            .iter()
            .copied()
            .filter(|v| !m.vertices.contains(v))
            .map(|v| block.kept[v])
            .collect()
    };
    if on_marker.is_empty() {
        kept_part()
    } else if on_marker.contains(&m.a_end()) {
        if on_marker.contains(&m.vertices[1]) {
            sides.in_x1.clone()
        } else {
            let mut out = kept_part();
            out.extend_from_slice(&sides.in_a1);
            out
        }
    } else if on_marker.contains(&m.b_end()) {
        let mut out = kept_part();
        out.extend_from_slice(&sides.in_b1);
        out
    } else {
        // interior-only cliques are dominated by the X1 optimum
        sides.in_x1.clone()
    }
}

// ---------------------------------------------------------------------------
// Even / odd / gem blocks
// ---------------------------------------------------------------------------

/// A block that replaced side 1 by a claw or vault gadget.
#[derive(Clone, Debug)]
pub struct GadgetBlock {
    pub graph: WeightedGraph,
    /// Old ids of the kept side 2, ascending; index = block id.
    pub kept: Vec<usize>,
    pub kind: GadgetKind,
    /// Block ids of the gadget, q1..q4 / r1..r6 order.
    pub gadget: Vec<usize>,
}

fn build_gadget_block(
    g: &WeightedGraph,
    s: &TwoJoinSplit,
    kind: GadgetKind,
    gadget_weights: &[Weight],
    mark: Option<u32>,
) -> GadgetBlock {
    let x2 = s.x2();
    let kept: Vec<usize> = x2.iter().collect();
    let mut new_of = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        new_of[v] = i;
    }
    let base = kept.len();
    let gadget: Vec<usize> = (0..kind.size()).map(|i| base + i).collect();
    let mut edges = Vec::new();
    for &u in &kept {
        for &v in g.neighbors(u) {
            if u < v && x2.contains(v) {
                edges.push((new_of[u], new_of[v]));
            }
        }
    }
    for &(i, j) in gadget_internal_edges(kind) {
        edges.push((gadget[i], gadget[j]));
    }
    let (a_idx, b_idx) = gadget_attach(kind);
    for &i in a_idx {
        for u in s.a2.iter() {
            edges.push((gadget[i], new_of[u]));
        }
    }
    for &i in b_idx {
        for u in s.b2.iter() {
            edges.push((gadget[i], new_of[u]));
        }
    }
    let mut weights: Vec<Weight> = kept.iter().map(|&v| g.weight(v)).collect();
    weights.extend_from_slice(gadget_weights);
    let mut marks: Vec<Option<u32>> = kept.iter().map(|&v| g.mark(v)).collect();
    marks.extend(std::iter::repeat(mark).take(kind.size()));
    GadgetBlock {
        graph: WeightedGraph::new(base + kind.size(), &edges)
            .with_weights(weights)
            .with_marks(marks),
        kept,
        kind,
        gadget,
    }
}

/// Even block: side 1 becomes a flat claw with weights (d-b, c, d-a, a+b-d).
/// Requires a+b <= c+d, which holds whenever the split is X1-even.
pub fn build_even_block(
    g: &WeightedGraph,
    s: &TwoJoinSplit,
    stats: &StableStats,
    mark: Option<u32>,
) -> Result<GadgetBlock, BlockError> {
    stats.check()?;
    let (a, b, c, d) = (stats.a, stats.b, stats.c, stats.d);
    if wadd(a, b) > wadd(c, d) {
        return Err(BlockError::PreconditionViolated(format!(
            "even block needs a+b <= c+d, got {stats:?}"
        )));
    }
    let w = [d - b, c, d - a, wadd(a, b) - d];
    Ok(build_gadget_block(g, s, GadgetKind::Claw, &w, mark))
}

/// Odd block: side 1 becomes a flat vault with weights
/// (d-b, d-a, c, c, a+b-c-d, a+b-c-d). Requires c+d <= a+b, which holds
/// whenever the split is X1-odd.
pub fn build_odd_block(
    g: &WeightedGraph,
    s: &TwoJoinSplit,
    stats: &StableStats,
    mark: Option<u32>,
) -> Result<GadgetBlock, BlockError> {
    stats.check()?;
    let (a, b, c, d) = (stats.a, stats.b, stats.c, stats.d);
    if wadd(c, d) > wadd(a, b) {
        return Err(BlockError::PreconditionViolated(format!(
            "odd block needs c+d <= a+b, got {stats:?}"
        )));
    }
    let surplus = wadd(a, b) - wadd(c, d);
    let w = [d - b, d - a, c, c, surplus, surplus];
    Ok(build_gadget_block(g, s, GadgetKind::Vault, &w, mark))
}

/// Gem block: side 1 becomes an induced path p-x-y-p' plus a vertex z
/// complete to it, with weights (a, a+b-d, d, 2d-a, c+d). Usable without any
/// parity condition; its stable-set value exceeds the host's by exactly d.
#[derive(Clone, Debug)]
pub struct GemBlock {
    pub graph: WeightedGraph,
    pub kept: Vec<usize>,
    /// Block ids of p, x, y, p', z.
    pub gem: [usize; 5],
}

pub fn build_gem_block(g: &WeightedGraph, s: &TwoJoinSplit, stats: &StableStats) -> GemBlock {
    stats.check().expect("gem block needs valid stats");
    let (a, b, c, d) = (stats.a, stats.b, stats.c, stats.d);
    let x2 = s.x2();
    let kept: Vec<usize> = x2.iter().collect();
    let mut new_of = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        new_of[v] = i;
    }
    let base = kept.len();
    let gem = [base, base + 1, base + 2, base + 3, base + 4];
    let [p, x, y, pp, z] = gem;
    let mut edges = Vec::new();
    for &u in &kept {
        for &v in g.neighbors(u) {
            if u < v && x2.contains(v) {
                edges.push((new_of[u], new_of[v]));
            }
        }
    }
    edges.extend_from_slice(&[(p, x), (x, y), (y, pp), (z, p), (z, x), (z, y), (z, pp)]);
    for u in s.a2.iter() {
        edges.push((p, new_of[u]));
    }
    for u in s.b2.iter() {
        edges.push((pp, new_of[u]));
    }
    let mut weights: Vec<Weight> = kept.iter().map(|&v| g.weight(v)).collect();
    weights.extend_from_slice(&[a, wadd(a, b) - d, d, wadd(d, d) - a, wadd(c, d)]);
    GemBlock {
        graph: WeightedGraph::new(base + 5, &edges).with_weights(weights),
        kept,
        gem,
    }
}

/// The four overlap cases of a stable set against a 2-join side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableCase {
    /// Meets A1, avoids B1; side part has weight a.
    A,
    /// Meets B1, avoids A1; weight b.
    B,
    /// Avoids both; weight c.
    C,
    /// Meets both; weight d.
    D,
}

impl StableCase {
    pub fn weight(self, stats: &StableStats) -> Weight {
        match self {
            StableCase::A => stats.a,
            StableCase::B => stats.b,
            StableCase::C => stats.c,
            StableCase::D => stats.d,
        }
    }
}

/// Reads off which case a block stable set realizes from its gadget
/// intersection.
pub fn stable_case_of(block: &GadgetBlock, sol: &[usize]) -> StableCase {
    let has = |i: usize| sol.contains(&block.gadget[i]);
    let (hits_a, hits_b) = match block.kind {
        GadgetKind::Claw => (has(0), has(2)),
        GadgetKind::Vault => (has(0) || has(4), has(1) || has(5)),
    };
    match (hits_a, hits_b) {
        (true, false) => StableCase::A,
        (false, true) => StableCase::B,
        (false, false) => StableCase::C,
        (true, true) => StableCase::D,
    }
}

/// Lifts an optimal stable set of a gadget block back to the host graph:
/// the gadget intersection is replaced by the cached side solution of the
/// realized case.
pub fn lift_stable(
    block_sol: &[usize],
    block: &GadgetBlock,
    stats: &StableStats,
    sides: &SideSolutions,
) -> Result<Vec<usize>, BlockError> {
    let case = stable_case_of(block, block_sol);
    let gadget_weight = wsum(
        block_sol
            .iter()
            .filter(|v| block.gadget.contains(v))
            .map(|&v| block.graph.weight(v)),
    );
    if gadget_weight != case.weight(stats) {
        return Err(BlockError::CaseMismatch(format!(
            "gadget carries {gadget_weight}, case {case:?} expects {}",
            case.weight(stats)
        )));
    }
    let mut out: Vec<usize> = block_sol
        .iter()
        .copied()
        .filter(|v| !block.gadget.contains(v))
        .map(|v| block.kept[v])
        .collect();
    let side = match case {
        StableCase::A => &sides.for_a,
        StableCase::B => &sides.for_b,
        StableCase::C => &sides.for_c,
        StableCase::D => &sides.for_d,
    };
    out.extend_from_slice(side);
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::{brute_alpha, brute_omega};
    use crate::twojoin::validate_split;
    use crate::vset::VertSet;

    fn set(n: usize, vs: &[usize]) -> VertSet {
        VertSet::from_iter(n, vs.iter().copied())
    }

    fn hex_split() -> TwoJoinSplit {
        TwoJoinSplit {
            x1: set(12, &[0, 1, 2, 3, 4, 5]),
            a1: set(12, &[0]),
            b1: set(12, &[3]),
            a2: set(12, &[6]),
            b2: set(12, &[9]),
        }
    }

    fn theta_split() -> TwoJoinSplit {
        TwoJoinSplit {
            x1: set(8, &[0, 1, 2, 3]),
            a1: set(8, &[0]),
            b1: set(8, &[2]),
            a2: set(8, &[4]),
            b2: set(8, &[6]),
        }
    }

    fn brute_stats(g: &WeightedGraph, s: &TwoJoinSplit) -> (StableStats, SideSolutions) {
        compute_stable_stats(g, s, |set| brute_alpha(&g.zero_restrict(set)))
            .map_err(|_: StatsFailure<crate::error::OracleError>| ())
            .unwrap()
    }

    #[test]
    fn parity_block_on_hex12() {
        let g = fixtures::hex12();
        let s = hex_split();
        let class = validate_split(&g, &s).unwrap();
        // replaced side is X2, odd paths -> marker length 3, block is a 10-hole
        let block = build_parity_block(&g, &s, &class, 1).unwrap();
        assert_eq!(block.graph.n(), 10);
        assert_eq!(block.marker.len(), 3);
        assert!(block.graph.bipartition().is_some());
        assert_eq!(crate::oracle::brute_chi(&block.graph).unwrap().0, 2);
    }

    #[test]
    fn parity_block_on_theta8() {
        let g = fixtures::theta8();
        let s = theta_split();
        let class = validate_split(&g, &s).unwrap();
        // keeping side 2 replaces the even side by a length-4 marker
        let block = build_parity_block(&g, &s, &class, 2).unwrap();
        assert_eq!(block.marker.len(), 4);
        // all-even-hole input: the block keeps that property
        assert!(crate::oracle::brute_even_hole(&block.graph, 26)
            .unwrap()
            .is_some());
        assert!(crate::oracle::find_hole(&block.graph, |l| l % 2 == 1).is_none());
        assert!(block.graph.bipartition().is_some());
    }

    #[test]
    fn parity_block_on_c8_split() {
        let g = fixtures::cycle(8);
        let s = TwoJoinSplit {
            x1: set(8, &[0, 1, 2, 3]),
            a1: set(8, &[0]),
            b1: set(8, &[3]),
            a2: set(8, &[7]),
            b2: set(8, &[4]),
        };
        let class = validate_split(&g, &s).unwrap();
        let block = build_parity_block(&g, &s, &class, 1).unwrap();
        // odd replaced side, length-3 marker: the block is an 8-hole again
        assert_eq!((block.graph.n(), block.graph.m()), (8, 8));
        assert!(block.graph.is_connected());
    }

    #[test]
    fn stats_on_fixtures() {
        let g = fixtures::hex12();
        let (stats, sides) = brute_stats(&g, &hex_split());
        assert_eq!(stats, StableStats { a: 3, b: 3, c: 2, d: 3 });
        assert!(g.is_stable_set(&sides.for_a));
        assert_eq!(g.set_weight_of(&sides.for_a), 3);

        let t = fixtures::theta8();
        let (stats, _) = brute_stats(&t, &theta_split());
        assert_eq!(stats, StableStats { a: 2, b: 2, c: 2, d: 2 });
    }

    #[test]
    fn clique_block_on_hex12() {
        let g = fixtures::hex12();
        let s = hex_split();
        let block = build_clique_block(&g, &s, 3, 1, 1, 2);
        assert_eq!(block.graph.weight(block.marker.a_end()), 1);
        assert_eq!(block.graph.weight(block.marker.vertices[1]), 1);
        assert_eq!(
            brute_omega(&block.graph).unwrap().0,
            brute_omega(&g).unwrap().0
        );
    }

    #[test]
    fn even_block_identity_on_theta8() {
        let g = fixtures::theta8();
        let s = theta_split();
        let (stats, _) = brute_stats(&g, &s);
        let block = build_even_block(&g, &s, &stats, None).unwrap();
        let w: Vec<Weight> = block.gadget.iter().map(|&v| block.graph.weight(v)).collect();
        assert_eq!(w, vec![0, 2, 0, 2]);
        assert_eq!(
            brute_alpha(&block.graph).unwrap().0,
            brute_alpha(&g).unwrap().0
        );
    }

    #[test]
    fn even_block_rejects_bad_stats() {
        let g = fixtures::hex12();
        let s = hex_split();
        let stats = StableStats { a: 3, b: 3, c: 2, d: 3 };
        assert!(matches!(
            build_even_block(&g, &s, &stats, None),
            Err(BlockError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn odd_block_identity_on_hex12() {
        let g = fixtures::hex12();
        let s = hex_split();
        let (stats, sides) = brute_stats(&g, &s);
        let block = build_odd_block(&g, &s, &stats, None).unwrap();
        let w: Vec<Weight> = block.gadget.iter().map(|&v| block.graph.weight(v)).collect();
        assert_eq!(w, vec![0, 0, 2, 2, 1, 1]);
        let (bw, bs) = brute_alpha(&block.graph).unwrap();
        assert_eq!(bw, 6);
        assert_eq!(bw, brute_alpha(&g).unwrap().0);
        // lift an optimum back to the fixture
        let lifted = lift_stable(&bs, &block, &stats, &sides).unwrap();
        assert!(g.is_stable_set(&lifted));
        assert_eq!(g.set_weight_of(&lifted), 6);
    }

    #[test]
    fn odd_block_weight_formula() {
        // stats (2,2,2,2) -> vault weights (0,0,2,2,0,0)
        let g = fixtures::theta8();
        let s = theta_split();
        let stats = StableStats { a: 2, b: 2, c: 2, d: 2 };
        let block = build_odd_block(&g, &s, &stats, None).unwrap();
        let w: Vec<Weight> = block.gadget.iter().map(|&v| block.graph.weight(v)).collect();
        assert_eq!(w, vec![0, 0, 2, 2, 0, 0]);
    }

    #[test]
    fn gem_block_identities() {
        let g = fixtures::hex12();
        let s = hex_split();
        let (stats, _) = brute_stats(&g, &s);
        let gb = build_gem_block(&g, &s, &stats);
        let w: Vec<Weight> = gb.gem.iter().map(|&v| gb.graph.weight(v)).collect();
        assert_eq!(w, vec![3, 3, 3, 3, 5]);
        assert_eq!(brute_alpha(&gb.graph).unwrap().0, 6 + stats.d);

        let t = fixtures::theta8();
        let ts = theta_split();
        let (tstats, _) = brute_stats(&t, &ts);
        let tb = build_gem_block(&t, &ts, &tstats);
        let tw: Vec<Weight> = tb.gem.iter().map(|&v| tb.graph.weight(v)).collect();
        assert_eq!(tw, vec![2, 2, 2, 2, 4]);
        assert_eq!(brute_alpha(&tb.graph).unwrap().0, 4 + tstats.d);
    }

    #[test]
    fn clique_lift_cases() {
        let g = fixtures::hex12();
        let s = hex_split();
        let block = build_clique_block(&g, &s, 3, 1, 1, 2);
        let sides = SideCliques {
            in_a1: vec![0],
            in_b1: vec![3],
            in_x1: vec![0, 1],
        };
        // K = {a1, x1} -> an edge of the kept-side optimum
        let k = vec![block.marker.a_end(), block.marker.vertices[1]];
        let lifted = lift_clique(&k, &block, &sides);
        assert!(g.is_clique(&lifted));
        assert_eq!(g.set_weight_of(&lifted), 2);
        // K inside X2 maps through unchanged
        let k2: Vec<usize> = vec![0, 1]; // block ids of two adjacent kept vertices
        let lifted2 = lift_clique(&k2, &block, &sides);
        assert_eq!(lifted2.len(), 2);
        assert!(g.is_clique(&lifted2));
    }
}

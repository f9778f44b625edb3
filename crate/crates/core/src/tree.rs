//! Decomposition trees: the plain caterpillar of parity-preserving blocks,
//! and its reprocessed clique and stable variants.

use crate::blocks::{
    build_block, build_clique_block, build_even_block, build_odd_block, compute_stable_stats,
    lift_clique, lift_stable, parity_marker_len, BlockResult, GadgetBlock, SideCliques,
    SideSolutions, StableStats, StatsFailure,
};
use crate::error::{PipelineError, SolveError};
use crate::extension::strip_extension;
use crate::graph::{FlatPath, Weight, WeightedGraph};
use crate::recognition::{recognize_basic_berge, recognize_basic_ehf, BasicCertificate};
use crate::solvers::{mwis_on_extension, mwc_basic};
use crate::twojoin::{
    find_extreme_2join, validate_split, ExtremeOutcome, ExtremePolicy, Parity, SplitClass,
    TwoJoinSplit,
};
use crate::vset::VertSet;

/// Which class promise the pipeline is working under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassMode {
    Berge,
    Ehf,
}

/// The depth measure: vertices of degree at least 3 plus branches (paths of
/// length >= 2 with degree->=3 ends and degree-2 interiors). It strictly
/// decreases along the spine, bounding the depth by n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompMeasure {
    pub nu: usize,
    pub tau: usize,
}

impl DecompMeasure {
    pub fn total(&self) -> usize {
        self.nu + self.tau
    }
}

pub fn measure(g: &WeightedGraph) -> DecompMeasure {
    let n = g.n();
    let nu = (0..n).filter(|&v| g.degree(v) >= 3).count();
    let mut tau = 0;
    let mut seen = vec![false; n];
    for v in 0..n {
        if seen[v] || g.degree(v) != 2 {
            continue;
        }
        // walk the degree-2 chain both ways
        let mut chain = vec![v];
        seen[v] = true;
        let mut grow = |chain: &mut Vec<usize>, front: bool| -> Option<usize> {
            loop {
                let (cur, prev) = if front {
                    (chain[0], chain.get(1).copied())
                } else {
                    (
                        *chain.last().unwrap(),
                        chain.len().checked_sub(2).map(|i| chain[i]),
                    )
                };
                let next = g
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&w| Some(w) != prev && (chain.len() == 1 || w != *chain.last().unwrap() || front) && (chain.len() == 1 || w != chain[0] || !front));
                let next = next?;
                if g.degree(next) != 2 {
                    return Some(next);
                }
                if chain.contains(&next) {
                    return None; // closed cycle of degree-2 vertices
                }
                seen[next] = true;
                if front {
                    chain.insert(0, next);
                } else {
                    chain.push(next);
                }
            }
        };
        let back = grow(&mut chain, false);
        let front = grow(&mut chain, true);
        if let (Some(a), Some(b)) = (front, back) {
            // a branch needs two (distinct) ends of degree >= 3
            if a != b || chain.len() >= 1 {
                // ends may coincide only when the chain plus the hub forms a
                // cycle, which is not a path
                if a != b {
                    tau += 1;
                }
            }
        }
    }
    DecompMeasure { nu, tau }
}

/// Asserts the strict decrease of the measure between consecutive spine
/// nodes.
pub fn check_measure(
    prev: &WeightedGraph,
    next: &WeightedGraph,
) -> Result<(DecompMeasure, DecompMeasure), PipelineError> {
    let (a, b) = (measure(prev), measure(next));
    if b.total() < a.total() {
        Ok((a, b))
    } else {
        Err(PipelineError::MeasureNotDecreasing)
    }
}

/// One decomposition step of the plain tree.
#[derive(Clone, Debug)]
pub struct PlainStep {
    /// The extreme split over this node's ids; X1 is the extreme side.
    pub split: TwoJoinSplit,
    pub class: SplitClass,
    /// Block keeping the extreme side (the basic child).
    pub basic: BlockResult,
    /// Paths of M landing in the basic child, in child ids.
    pub basic_m: Vec<FlatPath>,
    /// Block keeping the other side (the continuing child).
    pub cont: BlockResult,
    /// Paths of M in the continuing child plus its marker path, child ids.
    pub cont_m: Vec<FlatPath>,
    pub measure_before: DecompMeasure,
    pub measure_after: DecompMeasure,
}

/// A node of the plain tree: the graph, its flat-path collection, and the
/// decomposition step when the node is not the deepest leaf.
#[derive(Clone, Debug)]
pub struct PlainNode {
    pub graph: WeightedGraph,
    pub m: Vec<FlatPath>,
    pub step: Option<PlainStep>,
}

/// The plain decomposition tree, stored along its spine. Node i's basic
/// child is a leaf; the last node is the deepest leaf.
#[derive(Clone, Debug)]
pub struct DecompTree {
    pub nodes: Vec<PlainNode>,
}

impl DecompTree {
    pub fn depth(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn deepest(&self) -> &PlainNode {
        self.nodes.last().unwrap()
    }
}

fn map_paths_into_block(m: &[FlatPath], block: &BlockResult, side: &VertSet) -> Vec<FlatPath> {
    let mut new_of = vec![usize::MAX; side.universe()];
    for (i, &v) in block.kept.iter().enumerate() {
        new_of[v] = i;
    }
    m.iter()
        .filter(|p| p.vertices.iter().all(|&v| side.contains(v)))
        .map(|p| FlatPath {
            vertices: p.vertices.iter().map(|&v| new_of[v]).collect(),
        })
        .collect()
}

/// Builds the plain decomposition tree by iterating the extreme-2-join
/// search, producing parity-preserving blocks with marker lengths 3 or 4.
pub fn build_tree(g: &WeightedGraph, policy: ExtremePolicy) -> Result<DecompTree, PipelineError> {
    let n0 = g.n();
    let mut nodes: Vec<PlainNode> = Vec::new();
    let mut graph = g.clone();
    let mut m: Vec<FlatPath> = Vec::new();
    loop {
        if nodes.len() > n0 {
            return Err(PipelineError::DepthExceeded);
        }
        match find_extreme_2join(&graph, &m, policy)? {
            ExtremeOutcome::StarCutset(_, w) => {
                return Err(PipelineError::OutOfClass {
                    center: w.center,
                    cutset: w.cutset,
                });
            }
            ExtremeOutcome::NoNonPath2Join => {
                nodes.push(PlainNode {
                    graph,
                    m,
                    step: None,
                });
                return Ok(DecompTree { nodes });
            }
            ExtremeOutcome::Extreme(split) => {
                let class = validate_split(&graph, &split).map_err(PipelineError::Split)?;
                let basic = build_block(&graph, &split, 1, parity_marker_len(&class, 2)?);
                let cont = build_block(&graph, &split, 2, parity_marker_len(&class, 1)?);
                let measure_before = measure(&graph);
                let measure_after = check_measure(&graph, &cont.graph)?.1;
                let x2 = split.x2();
                let basic_m = map_paths_into_block(&m, &basic, &split.x1);
                let mut cont_m = map_paths_into_block(&m, &cont, &x2);
                cont_m.push(FlatPath {
                    vertices: cont.marker.vertices.clone(),
                });
                let next_graph = cont.graph.clone();
                let next_m = cont_m.clone();
                nodes.push(PlainNode {
                    graph,
                    m,
                    step: Some(PlainStep {
                        split,
                        class,
                        basic,
                        basic_m,
                        cont,
                        cont_m,
                        measure_before,
                        measure_after,
                    }),
                });
                graph = next_graph;
                m = next_m;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Clique tree
// ---------------------------------------------------------------------------

/// One spine step of the clique tree: the reweighted continuing child plus
/// the cached side cliques needed for lifting.
#[derive(Clone, Debug)]
pub struct CliqueStep {
    pub block: BlockResult,
    pub sides: SideCliques,
    pub omega_x1: Weight,
}

/// The clique-decomposition tree: spine graphs with the clique-block weights,
/// all sharing the same clique weight.
#[derive(Clone, Debug)]
pub struct CliqueTree {
    /// Reweighted spine graphs; entry 0 is the input.
    pub spine: Vec<WeightedGraph>,
    pub steps: Vec<CliqueStep>,
    pub mode: ClassMode,
}

/// Recognizes and solves a basic (possibly extended) graph for stable sets
/// under a mode-specific certificate.
pub fn solve_leaf_stable(g: &WeightedGraph, mode: ClassMode) -> Result<(Weight, Vec<usize>), PipelineError> {
    let rec = strip_extension(g)
        .map_err(|e| PipelineError::Solve(SolveError::Recognition(e)))?;
    let cert = leaf_certificate(&rec.underlying, mode)?;
    mwis_on_extension(g, &rec, &cert).map_err(PipelineError::Solve)
}

fn leaf_certificate(
    underlying: &WeightedGraph,
    mode: ClassMode,
) -> Result<BasicCertificate, PipelineError> {
    let cert = match mode {
        ClassMode::Berge => recognize_basic_berge(underlying),
        ClassMode::Ehf => recognize_basic_ehf(underlying),
    };
    cert.ok_or_else(|| {
        PipelineError::BasicRecognitionFailed(format!(
            "leaf with {} vertices fits no {:?} basic class",
            underlying.n(),
            mode
        ))
    })
}

/// Reprocesses a plain tree into the clique tree: the continuing child gets
/// the clique-block weights, computed on the basic child.
pub fn reprocess_clique_tree(
    tree: &DecompTree,
    mode: ClassMode,
) -> Result<CliqueTree, PipelineError> {
    let mut spine = vec![tree.nodes[0].graph.clone()];
    let mut steps = Vec::new();
    for node in &tree.nodes {
        let step = match &node.step {
            Some(s) => s,
            None => break,
        };
        let cur = spine.last().unwrap().clone();
        // omega on the three side subsets, through the basic child
        let basic = rebuilt_block(&cur, &s_split(step), 1, step.basic.marker.len());
        let child_omega = |set: &VertSet| -> Result<(Weight, Vec<usize>), PipelineError> {
            let mapped = VertSet::from_iter(
                basic.graph.n(),
                basic
                    .kept
                    .iter()
                    .enumerate()
                    .filter(|(_, &old)| set.contains(old))
                    .map(|(new, _)| new),
            );
            let zeroed = basic.graph.zero_restrict(&mapped);
            let (w, witness) = mwc_basic(&zeroed)
                .ok_or_else(|| {
                    PipelineError::BasicRecognitionFailed("clique-tree basic child".into())
                })?
                .map_err(PipelineError::Solve)?;
            // back to parent ids, dropping zero-weight strays
            let out: Vec<usize> = witness
                .into_iter()
                .filter(|&v| mapped.contains(v) && v < basic.kept.len())
                .map(|v| basic.kept[v])
                .collect();
            Ok((w, out))
        };
        let split = s_split(step);
        let (omega_a1, in_a1) = child_omega(&split.a1)?;
        let (omega_b1, in_b1) = child_omega(&split.b1)?;
        let (omega_x1, in_x1) = child_omega(&split.x1)?;
        let block = build_clique_block(&cur, &split, step.cont.marker.len(), omega_a1, omega_b1, omega_x1);
        spine.push(block.graph.clone());
        steps.push(CliqueStep {
            block,
            sides: SideCliques {
                in_a1,
                in_b1,
                in_x1,
            },
            omega_x1,
        });
    }
    Ok(CliqueTree { spine, steps, mode })
}

fn s_split(step: &PlainStep) -> TwoJoinSplit {
    step.split.clone()
}

/// Rebuilds a block of the (possibly reweighted) current graph along the
/// stored split.
fn rebuilt_block(cur: &WeightedGraph, split: &TwoJoinSplit, side: usize, len: usize) -> BlockResult {
    build_block(cur, split, side, len)
}

/// Solves the deepest leaf of the clique tree and lifts the clique back to
/// the input graph.
pub fn solve_clique_tree(tree: &CliqueTree) -> Result<(Weight, Vec<usize>), PipelineError> {
    let deepest = tree.spine.last().unwrap();
    let (mut value, mut clique) = solve_leaf_clique(deepest, tree.mode)?;
    for (i, step) in tree.steps.iter().enumerate().rev() {
        clique = lift_clique(&clique, &step.block, &step.sides);
        let parent = &tree.spine[i];
        if !parent.is_clique(&clique) || parent.set_weight_of(&clique) != value {
            return Err(PipelineError::Block(crate::error::BlockError::CaseMismatch(
                "clique lift lost weight or cliqueness".into(),
            )));
        }
    }
    clique.sort_unstable();
    value = tree.spine[0].set_weight_of(&clique);
    Ok((value, clique))
}

fn solve_leaf_clique(g: &WeightedGraph, mode: ClassMode) -> Result<(Weight, Vec<usize>), PipelineError> {
    match mode {
        ClassMode::Berge | ClassMode::Ehf => mwc_basic(g)
            .ok_or_else(|| PipelineError::BasicRecognitionFailed("clique-tree deepest leaf".into()))?
            .map_err(PipelineError::Solve),
    }
}

// ---------------------------------------------------------------------------
// Stable tree
// ---------------------------------------------------------------------------

/// One spine step of the stable tree.
#[derive(Clone, Debug)]
pub struct StableStep {
    /// The lifted split over the current (gadget-carrying) graph.
    pub split: TwoJoinSplit,
    pub stats: StableStats,
    pub sides: SideSolutions,
    /// The gadget block producing the next spine graph.
    pub block: GadgetBlock,
    /// The basic child (an extension of a basic graph), kept for audits.
    pub basic: BlockResult,
}

/// The stable-decomposition tree: spine graphs whose sides have been
/// replaced by weighted claw/vault gadgets, all sharing the same stable-set
/// weight.
#[derive(Clone, Debug)]
pub struct StableTree {
    pub spine: Vec<WeightedGraph>,
    pub steps: Vec<StableStep>,
    pub mode: ClassMode,
}

/// Tracks how each vertex of the plain spine node maps into the reprocessed
/// one: side representatives carry whole gadgets, corner representatives
/// only the attachment tips.
#[derive(Clone, Debug)]
struct LiftMap {
    side_of: Vec<Vec<usize>>,
    corner_of: Vec<Vec<usize>>,
}

impl LiftMap {
    fn identity(n: usize) -> Self {
        LiftMap {
            side_of: (0..n).map(|v| vec![v]).collect(),
            corner_of: (0..n).map(|v| vec![v]).collect(),
        }
    }

    fn lift_set(&self, set: &VertSet, n_cur: usize, corners: bool) -> VertSet {
        let mut out = VertSet::new(n_cur);
        for v in set.iter() {
            let reps = if corners {
                &self.corner_of[v]
            } else {
                &self.side_of[v]
            };
            for &r in reps {
                out.insert(r);
            }
        }
        out
    }

    fn lift_split(&self, split: &TwoJoinSplit, n_cur: usize) -> TwoJoinSplit {
        TwoJoinSplit {
            x1: self.lift_set(&split.x1, n_cur, false),
            a1: self.lift_set(&split.a1, n_cur, true),
            b1: self.lift_set(&split.b1, n_cur, true),
            a2: self.lift_set(&split.a2, n_cur, true),
            b2: self.lift_set(&split.b2, n_cur, true),
        }
    }
}

/// Reprocesses a plain tree into the stable tree. In Berge mode the gadget
/// choice follows the side parity (even side -> claw, odd side -> vault); in
/// even-hole-free mode it follows the a+b vs c+d comparison.
pub fn reprocess_stable_tree(
    tree: &DecompTree,
    mode: ClassMode,
) -> Result<StableTree, PipelineError> {
    let mut spine = vec![tree.nodes[0].graph.clone()];
    let mut steps: Vec<StableStep> = Vec::new();
    let mut lift = LiftMap::identity(tree.nodes[0].graph.n());
    for node in &tree.nodes {
        let step = match &node.step {
            Some(s) => s,
            None => break,
        };
        let cur = spine.last().unwrap().clone();
        let split = lift.lift_split(&step.split, cur.n());
        debug_assert!(validate_split(&cur, &split).is_ok());
        // the basic child is an extension of a basic graph; the side stats
        // are solved on it through zero-weight restriction
        let basic = build_block(&cur, &split, 1, step.basic.marker.len());
        let mut new_of = vec![usize::MAX; cur.n()];
        for (i, &v) in basic.kept.iter().enumerate() {
            new_of[v] = i;
        }
        let alpha = |set: &VertSet| -> Result<(Weight, Vec<usize>), PipelineError> {
            let mapped = VertSet::from_iter(
                basic.graph.n(),
                set.iter().map(|v| new_of[v]).filter(|&v| v != usize::MAX),
            );
            let zeroed = basic.graph.zero_restrict(&mapped);
            let (w, witness) = solve_leaf_stable(&zeroed, mode)?;
            let out: Vec<usize> = witness
                .into_iter()
                .filter(|&v| v < basic.kept.len() && mapped.contains(v))
                .map(|v| basic.kept[v])
                .collect();
            Ok((w, out))
        };
        let (stats, sides) = compute_stable_stats(&cur, &split, alpha).map_err(|e| match e {
            StatsFailure::Solver(pe) => pe,
            StatsFailure::Block(be) => PipelineError::Block(be),
        })?;
        let use_even = match mode {
            ClassMode::Berge => match step.class.parity_1 {
                Some(Parity::Even) => true,
                Some(Parity::Odd) => false,
                None => {
                    return Err(PipelineError::Split(crate::error::SplitError::MixedParity(1)))
                }
            },
            ClassMode::Ehf => stats.a + stats.b <= stats.c + stats.d,
        };
        let mark = step.cont.marker.vertices.len() as u32;
        let block = if use_even {
            build_even_block(&cur, &split, &stats, Some(mark)).map_err(PipelineError::Block)?
        } else {
            build_odd_block(&cur, &split, &stats, Some(mark)).map_err(PipelineError::Block)?
        };
        // update the lift map for the next plain node
        let mut kept_new = vec![usize::MAX; cur.n()];
        for (i, &v) in block.kept.iter().enumerate() {
            kept_new[v] = i;
        }
        let next_plain = &step.cont;
        let marker = &next_plain.marker.vertices;
        let gadget = &block.gadget;
        let (a_tips, b_tips): (Vec<usize>, Vec<usize>) = match block.kind {
            crate::extension::GadgetKind::Claw => (vec![gadget[0]], vec![gadget[2]]),
            crate::extension::GadgetKind::Vault => {
                (vec![gadget[0], gadget[4]], vec![gadget[1], gadget[5]])
            }
        };
        let n_next_plain = next_plain.graph.n();
        let mut side_of = vec![Vec::new(); n_next_plain];
        let mut corner_of = vec![Vec::new(); n_next_plain];
        for v in 0..n_next_plain {
            if let Some(pos) = marker.iter().position(|&mv| mv == v) {
                side_of[v] = gadget.clone();
                corner_of[v] = if pos == 0 {
                    a_tips.clone()
                } else if pos == marker.len() - 1 {
                    b_tips.clone()
                } else {
                    Vec::new()
                };
            } else {
                // kept from the previous plain node
                let old_plain = next_plain.kept[v];
                let map_reps = |reps: &[usize]| -> Vec<usize> {
                    reps.iter().map(|&r| kept_new[r]).collect()
                };
                side_of[v] = map_reps(&lift.side_of[old_plain]);
                corner_of[v] = map_reps(&lift.corner_of[old_plain]);
            }
        }
        spine.push(block.graph.clone());
        steps.push(StableStep {
            split,
            stats,
            sides,
            block,
            basic,
        });
        lift = LiftMap { side_of, corner_of };
    }
    Ok(StableTree { spine, steps, mode })
}

/// Solves the deepest leaf of the stable tree and lifts the stable set back
/// to the input graph, checking value preservation at every step.
pub fn solve_stable_tree(tree: &StableTree) -> Result<(Weight, Vec<usize>), PipelineError> {
    let deepest = tree.spine.last().unwrap();
    let (value, mut stable) = solve_leaf_stable(deepest, tree.mode)?;
    for (i, step) in tree.steps.iter().enumerate().rev() {
        stable = lift_stable(&stable, &step.block, &step.stats, &step.sides)
            .map_err(PipelineError::Block)?;
        let parent = &tree.spine[i];
        if !parent.is_stable_set(&stable) || parent.set_weight_of(&stable) != value {
            return Err(PipelineError::Block(crate::error::BlockError::CaseMismatch(
                "stable lift lost weight or stability".into(),
            )));
        }
    }
    stable.sort_unstable();
    Ok((value, stable))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::{brute_alpha, brute_is_berge, brute_omega};

    fn force() -> ExtremePolicy {
        ExtremePolicy {
            skip_cutset_checks: true,
        }
    }

    #[test]
    fn measure_examples() {
        let m = measure(&fixtures::theta8());
        assert_eq!((m.nu, m.tau), (4, 4));
        let m = measure(&fixtures::hex12());
        assert_eq!((m.nu, m.tau), (4, 4));
        let m = measure(&fixtures::cycle(8));
        assert_eq!((m.nu, m.tau), (0, 0));
    }

    #[test]
    fn plain_tree_on_hex12() {
        let g = fixtures::hex12();
        let tree = build_tree(&g, ExtremePolicy::default()).unwrap();
        assert!(tree.depth() >= 1 && tree.depth() <= 12);
        for node in &tree.nodes[..tree.nodes.len() - 1] {
            let step = node.step.as_ref().unwrap();
            assert!(step.measure_after.total() < step.measure_before.total());
            // non-deepest leaves are basic
            assert!(recognize_basic_berge(&step.basic.graph).is_some());
        }
    }

    #[test]
    fn plain_tree_on_theta8_forced() {
        let g = fixtures::theta8();
        let tree = build_tree(&g, force()).unwrap();
        assert!(tree.depth() >= 1);
    }

    #[test]
    fn clique_tree_spine_constant_on_fixtures() {
        for (g, force_mode) in [(fixtures::hex12(), false), (fixtures::theta8(), true)] {
            let policy = if force_mode {
                force()
            } else {
                ExtremePolicy::default()
            };
            let tree = build_tree(&g, policy).unwrap();
            let ct = reprocess_clique_tree(&tree, ClassMode::Berge).unwrap();
            let expect = brute_omega(&g).unwrap().0;
            for node in &ct.spine {
                assert_eq!(brute_omega(node).unwrap().0, expect);
            }
            let (w, k) = solve_clique_tree(&ct).unwrap();
            assert_eq!(w, expect);
            assert!(g.is_clique(&k));
        }
    }

    #[test]
    fn stable_tree_spine_constant_on_fixtures() {
        for (g, force_mode) in [(fixtures::hex12(), false), (fixtures::theta8(), true)] {
            let policy = if force_mode {
                force()
            } else {
                ExtremePolicy::default()
            };
            let tree = build_tree(&g, policy).unwrap();
            let st = reprocess_stable_tree(&tree, ClassMode::Berge).unwrap();
            let expect = brute_alpha(&g).unwrap().0;
            for node in &st.spine {
                assert_eq!(brute_alpha(node).unwrap().0, expect);
                // berge-mode spine nodes stay berge
                assert!(brute_is_berge(node).unwrap().0);
            }
            let (w, s) = solve_stable_tree(&st).unwrap();
            assert_eq!(w, expect);
            assert!(g.is_stable_set(&s));
            assert_eq!(g.set_weight_of(&s), expect);
        }
    }

    #[test]
    fn stable_tree_weighted_hex12() {
        let g = fixtures::hex12().with_weights(vec![3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8]);
        let tree = build_tree(&g, ExtremePolicy::default()).unwrap();
        let st = reprocess_stable_tree(&tree, ClassMode::Berge).unwrap();
        let (w, s) = solve_stable_tree(&st).unwrap();
        assert!(g.is_stable_set(&s));
        assert_eq!(w, brute_alpha(&g).unwrap().0);
        assert_eq!(g.set_weight_of(&s), w);
    }
}

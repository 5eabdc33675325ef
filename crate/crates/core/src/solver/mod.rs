//! Bottom-up positive-instance-driven search for minimum-depth elimination
//! trees.
//!
//! The decision problem for depth `k` builds, for `i = k` down to `1`, the
//! collection of connected sets `S` with `|N(S)| < i` that admit an
//! elimination tree of depth at most `k - i + 1`. Level `i` consists of
//! admissible singletons plus every set obtained by hanging pairwise
//! non-adjacent members of level `i + 1` below a common root. Depth `k` is
//! feasible exactly when level 1 contains the whole vertex set.

mod combine;
mod forest;
mod level;

pub use combine::{enumerate_combinations, enumerate_for_root, EnumerationStats};
pub(crate) use forest::vertex_depths;
pub use forest::{EliminationForest, ForestError};
pub use level::{Candidate, LevelCollection};

use crate::bitset::VertexSet;
use crate::domination::DominationIndex;
use crate::graph::Graph;
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Drop sets in which a member dominates a neighbour.
    pub domination: bool,
    /// Use the trie for combination queries; otherwise scan linearly.
    pub use_trie: bool,
    /// First depth tried. Above the treedepth the result is only an upper bound.
    pub start_depth: usize,
    /// Search roots and components concurrently (needs the `parallel` feature).
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            domination: true,
            use_trie: true,
            start_depth: 1,
            parallel: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub component: usize,
    pub budget: usize,
    pub level: usize,
    pub candidates: usize,
    pub queries: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub levels: Vec<LevelStats>,
}

/// Successful outcome of [`decide_depth`].
#[derive(Clone, Debug)]
pub struct Decision {
    pub budget: usize,
    /// The level-1 candidate covering the whole graph.
    pub top: Candidate,
    /// `levels[i - 1]` is the collection for level `i`.
    pub levels: Vec<LevelCollection>,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub depth: usize,
    pub forest: EliminationForest,
    pub stats: SolveStats,
}

/// Builds level `level` of the depth-`budget` problem from the completed
/// collection one level deeper (empty when `level == budget`). Returns the
/// collection and the number of index queries issued.
pub fn build_level(
    graph: &Graph,
    budget: usize,
    level: usize,
    next: &LevelCollection,
    dom: &DominationIndex,
    options: &SolveOptions,
) -> (LevelCollection, u64) {
    let n = graph.n();
    let mut out = LevelCollection::new(level, budget);
    if level <= n {
        for v in 0..n {
            if graph.degree(v) < level {
                let set = VertexSet::singleton(n, v);
                let nbhd = graph.neighbours(v).clone();
                if dom.passes_filter(&set, &nbhd) {
                    out.push(Candidate { set, nbhd, root: v });
                }
            }
        }
    }
    let stats = enumerate_combinations(
        graph,
        level,
        next,
        dom,
        options.use_trie,
        options.parallel,
        |c| {
            out.push(c);
        },
    );
    (out, stats.queries)
}

/// Builds levels `budget` down to `1` of the depth-`budget` problem, calling
/// `record` as each level completes. `result[i - 1]` is level `i`.
pub fn build_all_levels(
    graph: &Graph,
    budget: usize,
    dom: &DominationIndex,
    options: &SolveOptions,
    mut record: impl FnMut(&LevelCollection, u64),
) -> Vec<LevelCollection> {
    assert!(budget >= 1, "depth budget must be at least 1");
    let mut levels: Vec<LevelCollection> = Vec::with_capacity(budget);
    let mut next = LevelCollection::new(budget + 1, budget);
    for level in (1..=budget).rev() {
        let (current, queries) = build_level(graph, budget, level, &next, dom, options);
        record(&current, queries);
        levels.push(std::mem::replace(&mut next, current));
    }
    levels.push(next);
    // drop the empty sentinel and order by level
    levels.remove(0);
    levels.reverse();
    levels
}

fn decide_with_stats(
    graph: &Graph,
    budget: usize,
    dom: &DominationIndex,
    options: &SolveOptions,
    record: impl FnMut(&LevelCollection, u64),
) -> Option<Decision> {
    let levels = build_all_levels(graph, budget, dom, options, record);
    let whole = graph.vertex_set();
    let top_root = levels[0].root_of(&whole)?;
    let top = Candidate {
        set: whole,
        nbhd: graph.empty_set(),
        root: top_root,
    };
    Some(Decision {
        budget,
        top,
        levels,
    })
}

/// Decides whether the connected graph `graph` has an elimination tree of
/// depth at most `budget`.
pub fn decide_depth(
    graph: &Graph,
    budget: usize,
    dom: &DominationIndex,
    options: &SolveOptions,
) -> Option<Decision> {
    decide_with_stats(graph, budget, dom, options, |_, _| {})
}

/// Rebuilds the elimination tree recorded by a successful decision: the
/// children of a root `v` of set `S` at level `i` are the roots recorded at
/// level `i + 1` for the components of `S \ {v}`.
pub fn reconstruct_forest(
    graph: &Graph,
    levels: &[LevelCollection],
    top: &Candidate,
) -> EliminationForest {
    let mut parent = vec![None; graph.n()];
    let mut stack = vec![(1usize, top.set.clone(), top.root)];
    while let Some((level, set, root)) = stack.pop() {
        let mut rest = set;
        rest.remove(root);
        for component in graph.components_within(&rest) {
            let child = levels
                .get(level)
                .and_then(|next| next.root_of(&component))
                .unwrap_or_else(|| {
                    panic!("component {component:?} missing from level {}", level + 1)
                });
            parent[child] = Some(root);
            stack.push((level + 1, component, child));
        }
    }
    let forest =
        EliminationForest::from_parents(parent).expect("reconstructed parents form a forest");
    debug_assert!(forest.depth() <= levels.len());
    forest
}

fn solve_connected(
    graph: &Graph,
    component: usize,
    options: &SolveOptions,
) -> (EliminationForest, SolveStats) {
    let n = graph.n();
    let dom = if options.domination {
        DominationIndex::build(graph)
    } else {
        DominationIndex::disabled(n)
    };
    let mut stats = SolveStats::default();
    let mut budget = options.start_depth.max(1);
    loop {
        let decision = decide_with_stats(graph, budget, &dom, options, |level, queries| {
            stats.levels.push(LevelStats {
                component,
                budget,
                level: level.level(),
                candidates: level.len(),
                queries,
            });
        });
        if let Some(decision) = decision {
            return (
                reconstruct_forest(graph, &decision.levels, &decision.top),
                stats,
            );
        }
        assert!(
            budget < n,
            "no elimination tree of depth {budget} on {n} vertices"
        );
        budget += 1;
    }
}

/// Computes the treedepth of `graph` and a decomposition of that depth.
/// Components are solved independently and their trees merged.
pub fn solve_treedepth(graph: &Graph, options: &SolveOptions) -> Solution {
    let n = graph.n();
    let components = graph.components_within(&graph.vertex_set());
    let indexed: Vec<(usize, VertexSet)> = components.into_iter().enumerate().collect();
    let solved = par::map(&indexed, options.parallel, |(idx, comp)| {
        let (sub, map) = graph.induced_subgraph(comp);
        let (forest, stats) = solve_connected(&sub, *idx, options);
        (forest, map, stats)
    });
    let mut stats = SolveStats::default();
    let mut parts = Vec::with_capacity(solved.len());
    for (forest, map, part_stats) in solved {
        stats.levels.extend(part_stats.levels);
        parts.push((forest, map));
    }
    let forest = EliminationForest::merge(n, &parts);
    Solution {
        depth: forest.depth(),
        forest,
        stats,
    }
}

//! Stack-based enumeration of combinations `⋃𝒮 ∪ {v}`.
//!
//! For a root `v`, the members of `𝒮` are drawn from the candidates of the
//! next level whose neighbourhood contains `v`. Those candidates are indexed
//! per root. The search grows the union one member at a time, always taking
//! a member with a larger handle than the previous one, and asks the index
//! only for members that are disjoint from and non-adjacent to the union.

use crate::bitset::VertexSet;
use crate::domination::DominationIndex;
use crate::graph::Graph;
use crate::par;
use crate::trie::{CandidateHandle, CandidateIndex, LinearIndex, TrieIndex};

use super::level::{Candidate, LevelCollection};

/// Handles of `next` grouped by the vertices of their neighbourhoods.
pub(crate) fn handles_by_root(n: usize, next: &LevelCollection) -> Vec<Vec<CandidateHandle>> {
    let mut by_root = vec![Vec::new(); n];
    for handle in next.handles() {
        for v in &next.get(handle).nbhd {
            by_root[v].push(handle);
        }
    }
    by_root
}

fn build_index<I: CandidateIndex>(
    mut index: I,
    next: &LevelCollection,
    handles: &[CandidateHandle],
) -> I {
    for &h in handles {
        let c = next.get(h);
        index.insert(&c.set, &c.nbhd, h);
    }
    index
}

struct RootSearch<'a, I, F> {
    graph: &'a Graph,
    level: usize,
    next: &'a LevelCollection,
    index: &'a I,
    dom: &'a DominationIndex,
    root: usize,
    max_size: usize,
    queries: u64,
    emit: F,
}

impl<I: CandidateIndex, F: FnMut(Candidate)> RootSearch<'_, I, F> {
    /// `union` is a disjoint, pairwise non-adjacent union of chosen members
    /// (each adjacent to the root); `union_nbhd` is its exact neighbourhood.
    fn extend(&mut self, union: &VertexSet, union_nbhd: &VertexSet, last: Option<CandidateHandle>) {
        let mut closed = union_nbhd.clone();
        closed.insert(self.root);
        // every final neighbourhood of this branch contains closed \ {root}
        let hits = self.index.query(union, &closed, self.level + 1);
        self.queries += 1;
        for h in hits {
            if last.is_some_and(|l| h <= l) {
                continue;
            }
            let member = self.next.get(h);
            let new_union = union.union(&member.set);
            if new_union.len() + 1 > self.max_size {
                continue;
            }
            let new_nbhd = union_nbhd.union(&member.nbhd);
            let mut set = new_union.clone();
            set.insert(self.root);
            let mut nbhd = new_nbhd.union(self.graph.neighbours(self.root));
            nbhd.difference_with(&set);
            if nbhd.len() < self.level && self.dom.passes_filter(&set, &nbhd) {
                (self.emit)(Candidate {
                    set,
                    nbhd,
                    root: self.root,
                });
            }
            self.extend(&new_union, &new_nbhd, Some(h));
        }
    }
}

/// Runs the combination search for a single root vertex against a prepared
/// index of the candidates adjacent to it. Returns the number of index
/// queries issued.
pub fn enumerate_for_root<I: CandidateIndex, F: FnMut(Candidate)>(
    graph: &Graph,
    level: usize,
    next: &LevelCollection,
    index: &I,
    dom: &DominationIndex,
    root: usize,
    emit: F,
) -> u64 {
    let max_size = (graph.n() + 1).saturating_sub(level);
    let mut search = RootSearch {
        graph,
        level,
        next,
        index,
        dom,
        root,
        max_size,
        queries: 0,
        emit,
    };
    let empty = graph.empty_set();
    search.extend(&empty, &empty, None);
    search.queries
}

/// Counts reported by [`enumerate_combinations`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub queries: u64,
    pub emitted: u64,
}

/// Emits every `⋃𝒮 ∪ {v}` built from members of `next` that is admissible
/// at `level`: the members are pairwise disjoint and non-adjacent, `v` is
/// adjacent to each, the result has fewer than `level` neighbours and passes
/// the domination filter. Roots are visited in ascending order; a set may be
/// emitted once per root that produces it.
///
/// With `parallel`, roots are searched concurrently and their output is
/// replayed in root order, so `emit` sees the same sequence either way.
pub fn enumerate_combinations<F: FnMut(Candidate)>(
    graph: &Graph,
    level: usize,
    next: &LevelCollection,
    dom: &DominationIndex,
    use_trie: bool,
    parallel: bool,
    mut emit: F,
) -> EnumerationStats {
    let n = graph.n();
    let by_root = handles_by_root(n, next);
    let roots: Vec<usize> = (0..n).filter(|&v| !by_root[v].is_empty()).collect();
    let run = |&root: &usize| {
        let mut found = Vec::new();
        let queries = if use_trie {
            let index = build_index(TrieIndex::new(n), next, &by_root[root]);
            enumerate_for_root(graph, level, next, &index, dom, root, |c| found.push(c))
        } else {
            let index = build_index(LinearIndex::new(), next, &by_root[root]);
            enumerate_for_root(graph, level, next, &index, dom, root, |c| found.push(c))
        };
        (found, queries)
    };
    let per_root = par::map(&roots, parallel, run);
    let mut stats = EnumerationStats::default();
    for (found, queries) in per_root {
        stats.queries += queries;
        stats.emitted += found.len() as u64;
        found.into_iter().for_each(&mut emit);
    }
    stats
}

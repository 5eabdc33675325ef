//! Brute-force treedepth and decomposition checking.
//!
//! Evaluates the recursive definition directly: a single vertex has depth 1,
//! a disconnected set takes the maximum over its components, and a connected
//! set takes `1 + min_v td(S \ {v})`. Results are memoized per vertex set.

use std::collections::HashMap;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::solver::{vertex_depths, EliminationForest};

/// Largest set the oracle will evaluate.
pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle asked for a set of {size} vertices, above the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
}

/// Memoized treedepth evaluator bound to one graph.
pub struct Oracle<'g> {
    graph: &'g Graph,
    cap: usize,
    memo: HashMap<VertexSet, usize>,
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_cap(graph, DEFAULT_CAP)
    }

    pub fn with_cap(graph: &'g Graph, cap: usize) -> Self {
        Self {
            graph,
            cap,
            memo: HashMap::new(),
        }
    }

    /// `td(G[set])`. Panics on an empty set.
    pub fn treedepth(&mut self, set: &VertexSet) -> Result<usize, OracleError> {
        assert!(!set.is_empty(), "treedepth of the empty set is undefined");
        if set.len() > self.cap {
            return Err(OracleError::TooLarge {
                size: set.len(),
                cap: self.cap,
            });
        }
        Ok(self.td(set))
    }

    fn td(&mut self, set: &VertexSet) -> usize {
        if set.len() == 1 {
            return 1;
        }
        if let Some(&d) = self.memo.get(set) {
            return d;
        }
        let components = self.graph.components_within(set);
        let d = if components.len() > 1 {
            components.iter().map(|c| self.td(c)).max().unwrap_or(0)
        } else {
            let mut best = usize::MAX;
            for v in set {
                let mut rest = set.clone();
                rest.remove(v);
                best = best.min(1 + self.td(&rest));
                if best == 2 {
                    break;
                }
            }
            best
        };
        self.memo.insert(set.clone(), d);
        d
    }

    /// Optimal elimination forest of `G[set]`, as parent links over the full
    /// vertex range (vertices outside `set` are left as isolated roots).
    pub fn witness(&mut self, set: &VertexSet) -> Result<EliminationForest, OracleError> {
        if set.len() > self.cap {
            return Err(OracleError::TooLarge {
                size: set.len(),
                cap: self.cap,
            });
        }
        let mut parent = vec![None; self.graph.n()];
        let mut stack = vec![(set.clone(), None)];
        while let Some((s, above)) = stack.pop() {
            for comp in self.graph.components_within(&s) {
                let target = self.td(&comp);
                let root = if comp.len() == 1 {
                    comp.first().unwrap()
                } else {
                    comp.iter()
                        .find(|&v| {
                            let mut rest = comp.clone();
                            rest.remove(v);
                            1 + self.td(&rest) == target
                        })
                        .expect("some vertex attains the minimum")
                };
                parent[root] = above;
                let mut rest = comp;
                rest.remove(root);
                if !rest.is_empty() {
                    stack.push((rest, Some(root)));
                }
            }
        }
        Ok(EliminationForest::from_parents(parent).expect("oracle witness is a forest"))
    }
}

/// `td(G[set])` with a fresh memo table and the default cap.
pub fn brute_force_treedepth(graph: &Graph, set: &VertexSet) -> Result<usize, OracleError> {
    Oracle::new(graph).treedepth(set)
}

/// Checks that `forest` is a treedepth decomposition of `graph` whose stated
/// depth is its real depth.
pub fn validate_decomposition(graph: &Graph, forest: &EliminationForest) -> bool {
    if forest.len() != graph.n() {
        return false;
    }
    let Ok(depths) = vertex_depths(forest.parents()) else {
        return false;
    };
    if depths.iter().copied().max().unwrap_or(0) != forest.depth() {
        return false;
    }
    graph.edges().all(|(u, v)| {
        let (deep, shallow) = if depths[u] >= depths[v] {
            (u, v)
        } else {
            (v, u)
        };
        forest.is_ancestor(shallow, deep)
    })
}

//! Domination relation between vertices.
//!
//! `v` dominates `w` when `N(v) \ {w}` is a strict superset of `N(w) \ {v}`,
//! or the two are equal and `v` comes after `w` in the (degree, id) order.
//! Some minimum-depth elimination tree has no vertex dominating one of its
//! ancestors, so the solver may drop every set `S` in which some member
//! dominates a vertex of `N(S)`.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationIndex {
    dominators_of: Vec<VertexSet>,
}

/// Whether `v` comes after `w` in the tie-break order.
fn succeeds(g: &Graph, v: usize, w: usize) -> bool {
    (g.degree(v), v) > (g.degree(w), w)
}

impl DominationIndex {
    pub fn build(g: &Graph) -> Self {
        let n = g.n();
        let mut dominators_of = vec![VertexSet::new(n); n];
        for (w, dominators) in dominators_of.iter_mut().enumerate() {
            for v in 0..n {
                if v == w {
                    continue;
                }
                let mut nv = g.neighbours(v).clone();
                nv.remove(w);
                let mut nw = g.neighbours(w).clone();
                nw.remove(v);
                if !nw.is_subset(&nv) {
                    continue;
                }
                if nv.len() > nw.len() || succeeds(g, v, w) {
                    dominators.insert(v);
                }
            }
        }
        Self { dominators_of }
    }

    /// An index with no domination pairs, so every filter check passes.
    pub fn disabled(n: usize) -> Self {
        Self {
            dominators_of: vec![VertexSet::new(n); n],
        }
    }

    #[inline]
    pub fn dominators_of(&self, w: usize) -> &VertexSet {
        &self.dominators_of[w]
    }

    #[inline]
    pub fn dominates(&self, v: usize, w: usize) -> bool {
        self.dominators_of[w].contains(v)
    }

    /// True when no member of `set` dominates a member of `nbhd`.
    pub fn passes_filter(&self, set: &VertexSet, nbhd: &VertexSet) -> bool {
        nbhd.iter().all(|w| self.dominators_of[w].is_disjoint(set))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn star_center_dominates_leaves() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let dom = DominationIndex::build(&star);
        for leaf in 1..4 {
            assert!(dom.dominates(0, leaf));
            assert!(!dom.dominates(leaf, 0));
        }
    }

    #[test]
    fn path_endpoints_break_ties_by_id() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let dom = DominationIndex::build(&p3);
        assert!(dom.dominates(2, 0));
        assert!(!dom.dominates(0, 2));
        assert!(dom.dominates(1, 0) && dom.dominates(1, 2));
    }

    #[test]
    fn k2_higher_id_dominates() {
        let k2 = Graph::from_edges(2, [(0, 1)]);
        let dom = DominationIndex::build(&k2);
        assert!(dom.dominates(1, 0));
        assert!(!dom.dominates(0, 1));
        assert!(!dom.passes_filter(&vs(2, &[1]), &vs(2, &[0])));
        assert!(dom.passes_filter(&vs(2, &[0]), &vs(2, &[1])));
        assert!(dom.passes_filter(&k2.vertex_set(), &k2.empty_set()));
    }

    #[test]
    fn disabled_index_passes_everything() {
        let dom = DominationIndex::disabled(2);
        assert!(dom.passes_filter(&vs(2, &[1]), &vs(2, &[0])));
    }

    #[test]
    fn antisymmetric_and_irreflexive_on_all_graphs_up_to_five() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                );
                let dom = DominationIndex::build(&g);
                for v in 0..n {
                    assert!(!dom.dominates(v, v));
                    for w in 0..n {
                        assert!(
                            !(dom.dominates(v, w) && dom.dominates(w, v)),
                            "{g:?} {v} {w}"
                        );
                    }
                }
            }
        }
    }
}

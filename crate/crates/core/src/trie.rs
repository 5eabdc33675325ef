//! Trie over candidate neighbourhoods.
//!
//! Each stored pair `(S, N(S))` is keyed by the ascending members of `N(S)`.
//! A query `(Q, N(Q), budget)` returns every stored `S` with
//! `|N(S) ∪ N(Q)| < budget` and `S ∩ (Q ∪ N(Q)) = ∅`.
//!
//! Every node keeps the intersection of all keys stored below it. Any key in
//! a subtree is a superset of that intersection, so a subtree whose
//! intersection already pushes the union past the budget can be skipped.

use crate::bitset::VertexSet;

/// Index of a candidate in the level collection that owns it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateHandle(pub u32);

impl CandidateHandle {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Anything that answers the neighbourhood-budget query.
pub trait CandidateIndex {
    fn insert(&mut self, set: &VertexSet, nbhd: &VertexSet, handle: CandidateHandle);

    /// Appends matching handles to `out`.
    fn query_into(
        &self,
        q: &VertexSet,
        nbhd_q: &VertexSet,
        budget: usize,
        out: &mut Vec<CandidateHandle>,
    );

    fn query(&self, q: &VertexSet, nbhd_q: &VertexSet, budget: usize) -> Vec<CandidateHandle> {
        let mut out = Vec::new();
        self.query_into(q, nbhd_q, budget, &mut out);
        out
    }
}

#[derive(Clone, Debug)]
struct Entry {
    handle: CandidateHandle,
    set: VertexSet,
}

#[derive(Clone, Debug)]
pub struct TrieNode {
    label: Option<usize>,
    /// Child node ids, ascending by label.
    children: Vec<u32>,
    key_intersection: VertexSet,
    entries: Vec<Entry>,
}

impl TrieNode {
    /// Key element consumed on the edge into this node; `None` at the root.
    pub fn label(&self) -> Option<usize> {
        self.label
    }

    /// Intersection of every key stored in this subtree (full set while empty).
    pub fn key_intersection(&self) -> &VertexSet {
        &self.key_intersection
    }

    pub fn handles(&self) -> impl Iterator<Item = CandidateHandle> + '_ {
        self.entries.iter().map(|e| e.handle)
    }
}

#[derive(Clone, Debug)]
pub struct TrieIndex {
    nodes: Vec<TrieNode>,
    len: usize,
}

const ROOT: usize = 0;
const LINEAR_FANOUT: usize = 8;

impl TrieIndex {
    pub fn new(capacity: usize) -> Self {
        let root = TrieNode {
            label: None,
            children: Vec::new(),
            key_intersection: VertexSet::full(capacity),
            entries: Vec::new(),
        };
        Self {
            nodes: vec![root],
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> &TrieNode {
        &self.nodes[ROOT]
    }

    pub fn children<'a>(&'a self, node: &'a TrieNode) -> impl Iterator<Item = &'a TrieNode> + 'a {
        node.children.iter().map(move |&c| &self.nodes[c as usize])
    }

    fn find_child(&self, node: usize, label: usize) -> Result<usize, usize> {
        let children = &self.nodes[node].children;
        let key = |c: &u32| self.nodes[*c as usize].label.unwrap_or(0);
        if children.len() <= LINEAR_FANOUT {
            for (pos, c) in children.iter().enumerate() {
                let l = key(c);
                if l == label {
                    return Ok(*c as usize);
                }
                if l > label {
                    return Err(pos);
                }
            }
            Err(children.len())
        } else {
            children
                .binary_search_by_key(&label, key)
                .map(|pos| children[pos] as usize)
        }
    }

    /// Node reached by walking `key` from the root, if it exists.
    pub fn lookup(&self, key: &VertexSet) -> Option<&TrieNode> {
        let mut node = ROOT;
        for label in key {
            node = self.find_child(node, label).ok()?;
        }
        Some(&self.nodes[node])
    }

    pub fn insert(&mut self, set: &VertexSet, nbhd: &VertexSet, handle: CandidateHandle) {
        let mut node = ROOT;
        self.nodes[ROOT].key_intersection.intersect_with(nbhd);
        for label in nbhd {
            node = match self.find_child(node, label) {
                Ok(child) => {
                    self.nodes[child].key_intersection.intersect_with(nbhd);
                    child
                }
                Err(pos) => {
                    let id = self.nodes.len();
                    self.nodes.push(TrieNode {
                        label: Some(label),
                        children: Vec::new(),
                        key_intersection: nbhd.clone(),
                        entries: Vec::new(),
                    });
                    self.nodes[node].children.insert(pos, id as u32);
                    id
                }
            };
        }
        self.nodes[node].entries.push(Entry {
            handle,
            set: set.clone(),
        });
        self.len += 1;
    }

    pub fn query_into(
        &self,
        q: &VertexSet,
        nbhd_q: &VertexSet,
        budget: usize,
        out: &mut Vec<CandidateHandle>,
    ) {
        let base = nbhd_q.len();
        if base >= budget || self.len == 0 {
            return;
        }
        let forbidden = q.union(nbhd_q);
        // (node, number of path labels outside nbhd_q)
        let mut stack: Vec<(usize, usize)> = vec![(ROOT, 0)];
        while let Some((id, fresh)) = stack.pop() {
            let node = &self.nodes[id];
            for entry in &node.entries {
                if entry.set.is_disjoint(&forbidden) {
                    out.push(entry.handle);
                }
            }
            for &child in node.children.iter().rev() {
                let child_node = &self.nodes[child as usize];
                let label = child_node.label.expect("non-root node without label");
                let fresh_child = fresh + usize::from(!nbhd_q.contains(label));
                if base + fresh_child >= budget {
                    continue;
                }
                if base + child_node.key_intersection.difference_len(nbhd_q) >= budget {
                    continue;
                }
                stack.push((child as usize, fresh_child));
            }
        }
    }
}

impl CandidateIndex for TrieIndex {
    fn insert(&mut self, set: &VertexSet, nbhd: &VertexSet, handle: CandidateHandle) {
        TrieIndex::insert(self, set, nbhd, handle)
    }

    fn query_into(
        &self,
        q: &VertexSet,
        nbhd_q: &VertexSet,
        budget: usize,
        out: &mut Vec<CandidateHandle>,
    ) {
        TrieIndex::query_into(self, q, nbhd_q, budget, out)
    }
}

/// Reference index: stores pairs in insertion order and scans them all.
#[derive(Clone, Debug, Default)]
pub struct LinearIndex {
    entries: Vec<(CandidateHandle, VertexSet, VertexSet)>,
}

impl LinearIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl CandidateIndex for LinearIndex {
    fn insert(&mut self, set: &VertexSet, nbhd: &VertexSet, handle: CandidateHandle) {
        self.entries.push((handle, set.clone(), nbhd.clone()));
    }

    fn query_into(
        &self,
        q: &VertexSet,
        nbhd_q: &VertexSet,
        budget: usize,
        out: &mut Vec<CandidateHandle>,
    ) {
        let forbidden = q.union(nbhd_q);
        out.extend(
            self.entries
                .iter()
                .filter(|(_, set, nbhd)| {
                    nbhd.union_len(nbhd_q) < budget && set.is_disjoint(&forbidden)
                })
                .map(|(h, _, _)| *h),
        );
    }
}

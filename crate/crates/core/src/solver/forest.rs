use thiserror::Error;

/// Rooted forest given by parent links, with its depth cached.
///
/// Depth counts vertices on the longest root-to-leaf path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationForest {
    parent: Vec<Option<usize>>,
    depth: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestError {
    #[error("parent {parent} of vertex {vertex} is out of range")]
    ParentOutOfRange { vertex: usize, parent: usize },
    #[error("parent links contain a cycle through vertex {0}")]
    Cycle(usize),
}

/// Depth of every vertex (roots at depth 1), or the vertex where a cycle
/// or dangling link was found.
pub(crate) fn vertex_depths(parent: &[Option<usize>]) -> Result<Vec<usize>, ForestError> {
    let n = parent.len();
    let mut depth = vec![0usize; n];
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        let mut v = start;
        while depth[v] == 0 {
            if on_path[v] {
                return Err(ForestError::Cycle(v));
            }
            on_path[v] = true;
            path.push(v);
            match parent[v] {
                None => break,
                Some(p) if p >= n => {
                    return Err(ForestError::ParentOutOfRange {
                        vertex: v,
                        parent: p,
                    })
                }
                Some(p) => v = p,
            }
        }
        let mut d = if depth[v] == 0 { 0 } else { depth[v] };
        while let Some(u) = path.pop() {
            d += 1;
            depth[u] = d;
            on_path[u] = false;
        }
    }
    Ok(depth)
}

impl EliminationForest {
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self, ForestError> {
        let depth = vertex_depths(&parent)?.into_iter().max().unwrap_or(0);
        Ok(Self { parent, depth })
    }

    /// Forest with the given parents and a caller-supplied depth, which is
    /// not checked. Used to describe untrusted output for validation.
    pub fn with_claimed_depth(parent: Vec<Option<usize>>, depth: usize) -> Self {
        Self { parent, depth }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parent.len()).filter(|&v| self.parent[v].is_none())
    }

    /// Whether `a` is a proper ancestor of `b`.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut cur = self.parent[b];
        let mut steps = 0;
        while let Some(p) = cur {
            if p == a {
                return true;
            }
            steps += 1;
            if steps > self.parent.len() {
                return false;
            }
            cur = self.parent[p];
        }
        false
    }

    /// Disjoint union of forests over relabelled vertex sets: `parts[i].1[j]`
    /// is the vertex of the result that local vertex `j` of `parts[i].0` maps to.
    pub fn merge(n: usize, parts: &[(EliminationForest, Vec<usize>)]) -> Self {
        let mut parent = vec![None; n];
        let mut depth = 0;
        for (forest, map) in parts {
            for (local, &global) in map.iter().enumerate() {
                parent[global] = forest.parent[local].map(|p| map[p]);
            }
            depth = depth.max(forest.depth);
        }
        Self { parent, depth }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_of_path_forest() {
        let f = EliminationForest::from_parents(vec![Some(1), None, Some(1), Some(2)]).unwrap();
        assert_eq!(f.depth(), 3);
        assert!(f.is_ancestor(1, 3));
        assert!(!f.is_ancestor(3, 1));
        assert_eq!(f.roots().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn cycles_and_bad_parents_are_rejected() {
        assert_eq!(
            EliminationForest::from_parents(vec![Some(1), Some(0)]),
            Err(ForestError::Cycle(0))
        );
        assert_eq!(
            EliminationForest::from_parents(vec![Some(5)]),
            Err(ForestError::ParentOutOfRange {
                vertex: 0,
                parent: 5
            })
        );
        assert!(EliminationForest::from_parents(vec![Some(0)]).is_err());
    }

    #[test]
    fn merge_relabels_parts() {
        let a = EliminationForest::from_parents(vec![None, Some(0)]).unwrap();
        let b = EliminationForest::from_parents(vec![None]).unwrap();
        let m = EliminationForest::merge(3, &[(a, vec![0, 2]), (b, vec![1])]);
        assert_eq!(m.parents(), &[None, None, Some(0)]);
        assert_eq!(m.depth(), 2);
    }
}

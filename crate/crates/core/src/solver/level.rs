use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::trie::CandidateHandle;

/// A connected vertex set together with its neighbourhood and the root of
/// an elimination tree that witnesses its membership in a level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub set: VertexSet,
    pub nbhd: VertexSet,
    pub root: usize,
}

/// All candidates admitted at one level of one decision problem.
///
/// Sets are unique; the first root recorded for a set is kept.
#[derive(Clone, Debug)]
pub struct LevelCollection {
    level: usize,
    budget: usize,
    candidates: Vec<Candidate>,
    set_to_root: HashMap<VertexSet, usize>,
}

impl LevelCollection {
    pub fn new(level: usize, budget: usize) -> Self {
        Self {
            level,
            budget,
            candidates: Vec::new(),
            set_to_root: HashMap::new(),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn get(&self, handle: CandidateHandle) -> &Candidate {
        &self.candidates[handle.index()]
    }

    pub fn handles(&self) -> impl Iterator<Item = CandidateHandle> {
        (0..self.candidates.len() as u32).map(CandidateHandle)
    }

    pub fn root_of(&self, set: &VertexSet) -> Option<usize> {
        self.set_to_root.get(set).copied()
    }

    pub fn contains_set(&self, set: &VertexSet) -> bool {
        self.set_to_root.contains_key(set)
    }

    /// Records `candidate` unless its set is already present.
    pub fn push(&mut self, candidate: Candidate) -> bool {
        if self.set_to_root.contains_key(&candidate.set) {
            return false;
        }
        self.set_to_root
            .insert(candidate.set.clone(), candidate.root);
        self.candidates.push(candidate);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_deduplicates_by_set_and_keeps_first_root() {
        let mut level = LevelCollection::new(1, 2);
        let set = VertexSet::full(2);
        let nbhd = VertexSet::new(2);
        assert!(level.push(Candidate {
            set: set.clone(),
            nbhd: nbhd.clone(),
            root: 1
        }));
        assert!(!level.push(Candidate {
            set: set.clone(),
            nbhd,
            root: 0
        }));
        assert_eq!(level.len(), 1);
        assert_eq!(level.root_of(&set), Some(1));
    }
}

//! Depth-first enumeration of down-closed subsets of a finite poset, with an
//! optional set of pairwise conflicts.
//!
//! Elements are indexed `0..n` in a linear extension (every element's
//! predecessors carry smaller indices). The search walks indices in order and
//! tries "include" before "exclude". Excluding is always possible, so every
//! branch ends in a leaf and the iterator does no wasted work.

pub(crate) struct IdealSearch {
    /// `below[i]`: indices that must already be included before `i` can be.
    below: Vec<Vec<usize>>,
    /// `conflicts[i]`: smaller indices that may not be included together with `i`.
    conflicts: Vec<Vec<usize>>,
    /// `self_conflict[i]`: `i` can never be included.
    self_conflict: Vec<bool>,
    decisions: Vec<bool>,
    started: bool,
    done: bool,
}

impl IdealSearch {
    pub(crate) fn new(below: Vec<Vec<usize>>, conflicts: Vec<Vec<usize>>, self_conflict: Vec<bool>) -> Self {
        debug_assert_eq!(below.len(), conflicts.len());
        debug_assert_eq!(below.len(), self_conflict.len());
        Self {
            below,
            conflicts,
            self_conflict,
            decisions: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn can_include(&self, i: usize) -> bool {
        !self.self_conflict[i]
            && self.below[i].iter().all(|&j| self.decisions[j])
            && !self.conflicts[i].iter().any(|&j| self.decisions[j])
    }

    fn descend(&mut self) {
        while self.decisions.len() < self.below.len() {
            let i = self.decisions.len();
            let take = self.can_include(i);
            self.decisions.push(take);
        }
    }

    /// Moves to the next leaf; returns false when exhausted.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.descend();
            return true;
        }
        while let Some(last) = self.decisions.pop() {
            if last {
                self.decisions.push(false);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for IdealSearch {
    /// Included indices, ascending.
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        Some(
            self.decisions
                .iter()
                .enumerate()
                .filter_map(|(i, &d)| d.then_some(i))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_poset_has_one_ideal() {
        let got: Vec<_> = IdealSearch::new(vec![], vec![], vec![]).collect();
        assert_eq!(got, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn chain_and_antichain() {
        let below = vec![vec![], vec![0], vec![0, 1]];
        let none = vec![vec![]; 3];
        let free = vec![false; 3];
        let got: Vec<_> = IdealSearch::new(below, none.clone(), free.clone()).collect();
        assert_eq!(got, vec![vec![0, 1, 2], vec![0, 1], vec![0], vec![]]);

        let below = vec![vec![]; 3];
        assert_eq!(IdealSearch::new(below, none, free).count(), 8);
    }

    #[test]
    fn conflicts_are_respected() {
        let below = vec![vec![]; 3];
        let conflicts = vec![vec![], vec![0], vec![]];
        let selfc = vec![false, false, true];
        let got: Vec<_> = IdealSearch::new(below, conflicts, selfc).collect();
        assert_eq!(got, vec![vec![0], vec![1], vec![]]);
    }
}

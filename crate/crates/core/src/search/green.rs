//! Bounded depth-first search for maximal green sequences.
//!
//! States are memoised up to frozen isomorphism. Completions found below a
//! state are stored in the state's canonical (c-vector rank) labelling so
//! they can be transported to any frozen-isomorphic state.

use crate::error::Result;
use crate::quiver::{CanonicalKey, MutationState, Quiver};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Maximum sequence length explored.
    pub max_depth: usize,
    /// Maximum number of distinct states expanded.
    pub max_nodes: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_depth: 64,
            max_nodes: 100_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Want {
    First,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Maximal green sequences, sorted lexicographically.
    pub sequences: Vec<Vec<usize>>,
    /// Set when a bound cut the search short; absence of sequences is then
    /// not conclusive.
    pub truncated: bool,
    pub nodes_expanded: usize,
}

struct Memo {
    budget: usize,
    truncated: bool,
    /// Completions in rank labels (0-based).
    completions: Vec<Vec<usize>>,
}

struct Searcher {
    want: Want,
    max_nodes: usize,
    expanded: usize,
    out_of_nodes: bool,
    memo: HashMap<CanonicalKey, Memo>,
}

impl Searcher {
    /// Completions from `state` within `budget` steps, in `state`'s labels
    /// (1-based), plus a truncation flag.
    fn explore(&mut self, state: &MutationState, budget: usize) -> (Vec<Vec<usize>>, bool) {
        if state.all_red() {
            return (vec![Vec::new()], false);
        }
        if budget == 0 {
            return (Vec::new(), true);
        }
        let key = state.frozen_class_key();
        let order = state.c_vector_order();
        if let Some(m) = self.memo.get(&key) {
            if m.budget >= budget {
                let mut truncated = m.truncated;
                let mut found = Vec::new();
                for c in &m.completions {
                    if c.len() <= budget {
                        found.push(c.iter().map(|&r| order[r] + 1).collect());
                    } else {
                        truncated = true;
                    }
                }
                return (found, truncated);
            }
        }
        if self.expanded >= self.max_nodes {
            self.out_of_nodes = true;
            return (Vec::new(), true);
        }
        self.expanded += 1;

        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut truncated = false;
        for k in state.greens() {
            // An overflowing branch is left unexplored and reported as truncated.
            let Ok(child) = state.mutate(k) else {
                truncated = true;
                continue;
            };
            let (sub, t) = self.explore(&child, budget - 1);
            truncated |= t;
            for mut s in sub {
                s.insert(0, k);
                found.push(s);
            }
            if self.want == Want::First && !found.is_empty() {
                break;
            }
        }

        let mut rank = vec![0; order.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        self.memo.insert(
            key,
            Memo {
                budget,
                truncated,
                completions: found
                    .iter()
                    .map(|s| s.iter().map(|&v| rank[v - 1]).collect())
                    .collect(),
            },
        );
        (found, truncated)
    }
}

/// Maximal green sequences of `q` within `bounds`, in ascending lexicographic
/// order. With `Want::First` at most one sequence is returned.
pub fn search_green_sequences(q: &Quiver, bounds: SearchBounds, want: Want) -> Result<SearchOutcome> {
    let start = MutationState::frame(q)?;
    let mut searcher = Searcher {
        want,
        max_nodes: bounds.max_nodes.max(1),
        expanded: 0,
        out_of_nodes: false,
        memo: HashMap::new(),
    };
    let (mut sequences, truncated) = searcher.explore(&start, bounds.max_depth);
    sequences.sort();
    sequences.dedup();
    if want == Want::First {
        sequences.truncate(1);
    }
    Ok(SearchOutcome {
        sequences,
        truncated: truncated || searcher.out_of_nodes,
        nodes_expanded: searcher.expanded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(depth: usize) -> SearchBounds {
        SearchBounds {
            max_depth: depth,
            max_nodes: 100_000,
        }
    }

    #[test]
    fn a2_has_two() {
        let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
        let out = search_green_sequences(&q, bounds(10), Want::All).unwrap();
        assert_eq!(out.sequences, vec![vec![1, 2], vec![2, 1, 2]]);
        assert!(!out.truncated);
        let first = search_green_sequences(&q, bounds(10), Want::First).unwrap();
        assert_eq!(first.sequences, vec![vec![1, 2]]);
    }

    #[test]
    fn single_vertex() {
        let out = search_green_sequences(&Quiver::empty(1), bounds(5), Want::All).unwrap();
        assert_eq!(out.sequences, vec![vec![1]]);
    }

    #[test]
    fn depth_bound_truncates() {
        let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
        let out = search_green_sequences(&q, bounds(2), Want::All).unwrap();
        assert_eq!(out.sequences, vec![vec![1, 2]]);
        assert!(out.truncated);
    }

    #[test]
    fn node_bound_truncates() {
        let q = Quiver::from_arrows(3, &[(1, 2, 1), (2, 3, 1)]).unwrap();
        let out = search_green_sequences(
            &q,
            SearchBounds {
                max_depth: 20,
                max_nodes: 2,
            },
            Want::All,
        )
        .unwrap();
        assert!(out.truncated);
    }

    #[test]
    fn markov_finds_nothing_within_bounds() {
        let q = Quiver::from_arrows(3, &[(1, 2, 2), (2, 3, 2), (3, 1, 2)]).unwrap();
        let out = search_green_sequences(&q, bounds(12), Want::All).unwrap();
        assert!(out.sequences.is_empty());
        assert!(out.truncated);
    }
}

//! The oriented exchange graph: framed quivers up to frozen isomorphism,
//! with an arrow for every green mutation.

use crate::error::Result;
use crate::quiver::{CanonicalKey, MutationState, Quiver};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub struct ExchangeNode {
    pub key: CanonicalKey,
    /// The first state reached in this class; edge labels use its numbering.
    pub representative: MutationState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExchangeEdge {
    pub from: usize,
    /// Green vertex of the source node (1-based, representative's labels).
    pub vertex: usize,
    pub to: usize,
}

#[derive(Debug, Clone)]
pub struct ExchangeGraphSlice {
    pub nodes: Vec<ExchangeNode>,
    pub edges: Vec<ExchangeEdge>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub truncated: bool,
}

impl ExchangeGraphSlice {
    pub fn has_unique_source(&self) -> bool {
        self.sources.len() == 1
    }

    pub fn sink_count(&self) -> usize {
        self.sinks.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// GraphViz rendering; nodes are labelled by a key prefix, edges by vertex.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph exchange {\n");
        let hexes: Vec<String> = self.nodes.iter().map(|n| n.key.to_hex()).collect();
        // shortest prefix, at least 8 digits, that tells the nodes apart
        let longest = hexes.iter().map(String::len).max().unwrap_or(0);
        let width = (8..=longest)
            .find(|&w| {
                let labels: HashSet<&str> = hexes.iter().map(|h| &h[..h.len().min(w)]).collect();
                labels.len() == hexes.len()
            })
            .unwrap_or(longest);
        for (i, hex) in hexes.iter().enumerate() {
            let label = &hex[..hex.len().min(width)];
            let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.vertex);
        }
        out.push_str("}\n");
        out
    }

    /// Follows a sequence of green mutations from the source through the
    /// slice; returns the visited node indices, or `None` if it leaves the slice.
    pub fn walk(&self, seq: &[usize]) -> Option<Vec<usize>> {
        let source = *self.sources.first()?;
        let mut state = self.nodes[source].representative.clone();
        let mut path = vec![source];
        let index: HashMap<&CanonicalKey, usize> =
            self.nodes.iter().enumerate().map(|(i, n)| (&n.key, i)).collect();
        for &k in seq {
            let from = *path.last().unwrap();
            if !state.greens().contains(&k) {
                return None;
            }
            state = state.mutate(k).ok()?;
            let to = *index.get(&state.frozen_class_key())?;
            if !self.edges.iter().any(|e| e.from == from && e.to == to) {
                return None;
            }
            path.push(to);
        }
        Some(path)
    }
}

/// Breadth-first exploration along green mutations from the framed quiver,
/// stopping after `max_nodes` classes.
pub fn build_exchange_graph(q: &Quiver, max_nodes: usize) -> Result<ExchangeGraphSlice> {
    let max_nodes = max_nodes.max(1);
    let start = MutationState::frame(q)?;
    let mut index: HashMap<CanonicalKey, usize> = HashMap::new();
    let mut nodes = vec![ExchangeNode {
        key: start.frozen_class_key(),
        representative: start,
    }];
    index.insert(nodes[0].key.clone(), 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut truncated = false;
    let mut expanded = vec![false];

    while let Some(i) = queue.pop_front() {
        let state = nodes[i].representative.clone();
        expanded[i] = true;
        for k in state.greens() {
            let Ok(child) = state.mutate(k) else {
                truncated = true;
                continue;
            };
            let key = child.frozen_class_key();
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    if nodes.len() >= max_nodes {
                        truncated = true;
                        continue;
                    }
                    let j = nodes.len();
                    index.insert(key.clone(), j);
                    nodes.push(ExchangeNode {
                        key,
                        representative: child,
                    });
                    expanded.push(false);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(ExchangeEdge {
                from: i,
                vertex: k,
                to: j,
            });
        }
    }

    let mut indeg = vec![0usize; nodes.len()];
    let mut outdeg = vec![0usize; nodes.len()];
    for e in &edges {
        indeg[e.to] += 1;
        outdeg[e.from] += 1;
    }
    let sources = (0..nodes.len()).filter(|&i| indeg[i] == 0).collect();
    // A sink is a fully explored node without green vertices.
    let sinks = (0..nodes.len())
        .filter(|&i| expanded[i] && outdeg[i] == 0)
        .collect();
    Ok(ExchangeGraphSlice {
        nodes,
        edges,
        sources,
        sinks,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon() {
        let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
        let g = build_exchange_graph(&q, 100).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edges.len(), 5);
        assert!(g.has_unique_source());
        assert_eq!(g.sink_count(), 1);
        assert!(!g.truncated);
        for e in &g.edges {
            assert!(g.nodes[e.from].representative.greens().contains(&e.vertex));
        }
        let dot = g.to_dot();
        assert_eq!(dot.matches("->").count(), 5);
    }

    #[test]
    fn single_vertex() {
        let g = build_exchange_graph(&Quiver::empty(1), 10).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edges.len(), 1);
    }

    #[test]
    fn sequences_are_paths() {
        let q = Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap();
        let g = build_exchange_graph(&q, 100).unwrap();
        let p = g.walk(&[1, 2]).unwrap();
        let r = g.walk(&[2, 1, 2]).unwrap();
        assert_eq!(p.last(), r.last());
        assert_eq!(p.last(), g.sinks.first());
        assert_eq!(g.walk(&[1, 1]), None);
    }

    #[test]
    fn truncation_flagged() {
        let q = Quiver::from_arrows(3, &[(1, 2, 1), (2, 3, 1)]).unwrap();
        let g = build_exchange_graph(&q, 4).unwrap();
        assert!(g.truncated);
        assert_eq!(g.node_count(), 4);
    }
}

use crate::error::{Error, Result};
use crate::quiver::{canonical_form, CanonicalKey, Quiver};
use rayon::prelude::*;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationClass {
    pub count: usize,
    pub representatives: BTreeSet<CanonicalKey>,
    /// False when `max_size` stopped the closure before it was exhausted.
    pub complete: bool,
}

/// Breadth-first closure of `q` under mutation, up to isomorphism.
///
/// Each BFS layer is expanded in parallel; new classes are merged in the
/// order of the sorted frontier, so the result does not depend on scheduling.
pub fn enumerate_mutation_class(q: &Quiver, max_size: usize) -> Result<MutationClass> {
    if q.frozen() != 0 {
        return Err(Error::AlreadyFramed);
    }
    let max_size = max_size.max(1);
    let mut seen: BTreeSet<CanonicalKey> = BTreeSet::new();
    seen.insert(canonical_form(q));
    let mut frontier: Vec<Quiver> = vec![q.clone()];
    let mut complete = true;

    'bfs: while !frontier.is_empty() {
        let children: Vec<Vec<Option<(CanonicalKey, Quiver)>>> = frontier
            .par_iter()
            .map(|p| {
                (1..=p.n())
                    .map(|k| p.mutate(k).ok().map(|c| (canonical_form(&c), c)))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for child in children.into_iter().flatten() {
            // Entries past the i64 range: the class is infinite anyway.
            let Some((key, child)) = child else {
                complete = false;
                break 'bfs;
            };
            if seen.contains(&key) {
                continue;
            }
            if seen.len() >= max_size {
                complete = false;
                break 'bfs;
            }
            seen.insert(key);
            next.push(child);
        }
        frontier = next;
    }
    Ok(MutationClass {
        count: seen.len(),
        representatives: seen,
        complete,
    })
}

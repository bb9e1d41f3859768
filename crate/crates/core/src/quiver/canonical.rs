//! Canonical labelling of quivers up to arbitrary relabelling of vertices.
//!
//! Individualisation-refinement: vertex colours are refined until stable
//! using the multiset of (neighbour colour, signed multiplicity) pairs, then
//! the first non-trivial cell is split by trying each of its vertices. Every
//! leaf of the search tree yields a vertex order; the canonical form is the
//! lexicographically least upper-triangle encoding over all leaves.
//! Twins and automorphisms discovered at equal leaves prune sibling branches.

use super::Quiver;
use std::fmt;

/// Byte string identifying a quiver (or framed state) up to isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    /// Zigzag-varint encoding of `n` followed by `values`.
    pub(crate) fn encode(n: usize, values: &[i64]) -> Self {
        let mut out = Vec::with_capacity(values.len() + 2);
        push_varint(&mut out, n as u64);
        for &v in values {
            push_varint(&mut out, ((v << 1) ^ (v >> 63)) as u64);
        }
        CanonicalKey(out)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn push_varint(out: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical key of `q`, invariant under relabelling of all vertices.
pub fn canonical_form(q: &Quiver) -> CanonicalKey {
    let (order, _) = canonical_order(q);
    let d = q.dim();
    let mut values = Vec::with_capacity(d * (d.saturating_sub(1)) / 2 + 1);
    values.push(q.frozen() as i64);
    for (r, &i) in order.iter().enumerate() {
        for &j in &order[r + 1..] {
            values.push(q.b(i, j));
        }
    }
    CanonicalKey::encode(d, &values)
}

/// Canonical vertex order (`order[r]` = vertex at position `r`) and the
/// number of search-tree leaves visited.
pub(crate) fn canonical_order(q: &Quiver) -> (Vec<usize>, usize) {
    let d = q.dim();
    if d == 0 {
        return (Vec::new(), 1);
    }
    // Frozen vertices may only map to frozen vertices.
    let initial: Vec<u32> = (0..d).map(|i| u32::from(i >= q.n())).collect();
    let mut search = Search {
        q,
        best: None,
        automorphisms: Vec::new(),
        leaves: 0,
    };
    let colors = refine(q, initial);
    search.descend(colors, &mut Vec::new());
    let (_, order) = search.best.expect("search visits at least one leaf");
    (order, search.leaves)
}

struct Search<'a> {
    q: &'a Quiver,
    best: Option<(Vec<i64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    leaves: usize,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<usize>) {
        let d = self.q.dim();
        let Some(cell) = target_cell(&colors) else {
            self.leaf(&colors);
            return;
        };
        let members: Vec<usize> = (0..d).filter(|&v| colors[v] == cell).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&w| self.is_twin(v, w)) {
                continue;
            }
            if !tried.is_empty() && self.same_orbit(v, &tried, path) {
                continue;
            }
            tried.push(v);
            let mut next: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
            next[v] = 2 * cell;
            let next = refine(self.q, next);
            path.push(v);
            self.descend(next, path);
            path.pop();
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        self.leaves += 1;
        let d = self.q.dim();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by_key(|&v| colors[v]);
        let mut code = Vec::with_capacity(d * d / 2);
        for (r, &i) in order.iter().enumerate() {
            for &j in &order[r + 1..] {
                code.push(self.q.b(i, j));
            }
        }
        match &self.best {
            None => self.best = Some((code, order)),
            Some((best_code, best_order)) => match code.cmp(best_code) {
                std::cmp::Ordering::Less => self.best = Some((code, order)),
                std::cmp::Ordering::Equal => {
                    // order[r] -> best_order[r] preserves the matrix
                    let mut auto = vec![0; d];
                    for r in 0..d {
                        auto[order[r]] = best_order[r];
                    }
                    self.automorphisms.push(auto);
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Vertices with identical neighbourhoods and no arrows between them
    /// are swapped by an automorphism.
    fn is_twin(&self, v: usize, w: usize) -> bool {
        let q = self.q;
        q.b(v, w) == 0
            && (v < q.n()) == (w < q.n())
            && (0..q.dim()).all(|x| x == v || x == w || q.b(v, x) == q.b(w, x))
    }

    /// Whether `v` lies in the orbit of an already tried vertex under the
    /// known automorphisms that fix `path` pointwise.
    fn same_orbit(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        let d = self.q.dim();
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.automorphisms {
            if path.iter().all(|&p| auto[p] == p) {
                any = true;
                for x in 0..d {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, auto[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// First colour class (in colour order) with more than one member, among
/// the smallest such classes.
fn target_cell(colors: &[u32]) -> Option<u32> {
    let mut counts = std::collections::BTreeMap::new();
    for &c in colors {
        *counts.entry(c).or_insert(0usize) += 1;
    }
    let min = counts.values().copied().filter(|&k| k > 1).min()?;
    counts
        .into_iter()
        .find(|&(_, k)| k == min)
        .map(|(c, _)| c)
}

/// Refines a colouring to the coarsest stable one, renumbering colours by
/// rank of their signatures so that the result is relabelling-invariant.
fn refine(q: &Quiver, mut colors: Vec<u32>) -> Vec<u32> {
    let d = q.dim();
    let mut classes = count_classes(&colors);
    loop {
        let signatures: Vec<(u32, Vec<(u32, i64)>)> = (0..d)
            .map(|v| {
                let mut nb: Vec<(u32, i64)> = (0..d)
                    .filter(|&w| q.b(v, w) != 0)
                    .map(|w| (colors[w], q.b(v, w)))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<(u32, i64)>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap() as u32)
            .collect();
        let next_classes = distinct.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

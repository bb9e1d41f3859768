//! Framed quivers, c-matrices, green/red vertices and frozen isomorphisms.

use super::{CanonicalKey, Quiver};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Colour of a mutable vertex in a framed quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexStatus {
    Green,
    Red,
}

/// The mutable-to-frozen block of a framed quiver. Row `i` is the c-vector
/// of vertex `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        CMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// c-vector of the 0-based row `i`.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Common sign of row `i`: `1` for a row in N^n, `-1` for a row in (-N)^n.
    ///
    /// Panics if the row is zero or mixed: c-vectors are sign-coherent, so a
    /// mixed row means the mutation code is broken.
    pub fn row_sign(&self, i: usize) -> i8 {
        let row = self.row(i);
        let pos = row.iter().any(|&x| x > 0);
        let neg = row.iter().any(|&x| x < 0);
        match (pos, neg) {
            (true, false) => 1,
            (false, true) => -1,
            _ => panic!("c-vector {row:?} of vertex {} is not sign-coherent", i + 1),
        }
    }

    pub fn is_sign_coherent(&self) -> bool {
        (0..self.n).all(|i| {
            let row = self.row(i);
            let pos = row.iter().any(|&x| x > 0);
            let neg = row.iter().any(|&x| x < 0);
            pos != neg
        })
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// A bijection of the mutable vertices, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// From 0-based images; returns `None` if `images` is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of a 0-based index.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Image of a 1-based vertex label.
    pub fn apply_label(&self, v: usize) -> usize {
        self.0[v - 1] + 1
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// 1-based images, as shown to users.
    pub fn to_labels(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.to_labels())
    }
}

/// The framed quiver of `origin` after mutating along `history`.
#[derive(Clone, PartialEq, Eq)]
pub struct MutationState {
    origin: Quiver,
    quiver: Quiver,
    history: Vec<usize>,
}

impl MutationState {
    /// Adds a frozen vertex `i'` and an arrow `i -> i'` for each vertex `i`.
    pub fn frame(q: &Quiver) -> Result<Self> {
        if q.frozen() != 0 {
            return Err(Error::AlreadyFramed);
        }
        let n = q.n();
        let mut rows = vec![vec![0i64; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = q.b(i, j);
            }
            rows[i][n + i] = 1;
            rows[n + i][i] = -1;
        }
        Ok(MutationState {
            origin: q.clone(),
            quiver: Quiver::from_matrix_with_frozen(&rows, n)?,
            history: Vec::new(),
        })
    }

    /// Like [`frame`](Self::frame) but with arrows `i' -> i`, i.e. c-matrix `-Id`.
    /// Final states of reddening sequences are isomorphic to this quiver.
    pub fn coframe(q: &Quiver) -> Result<Self> {
        let mut s = Self::frame(q)?;
        let n = q.n();
        let mut rows = s.quiver.matrix();
        for i in 0..n {
            rows[i][n + i] = -1;
            rows[n + i][i] = 1;
        }
        s.quiver = Quiver::from_matrix_with_frozen(&rows, n)?;
        Ok(s)
    }

    /// Rebuilds a state by replaying `history` on the framing of `origin`.
    pub fn replay(origin: &Quiver, history: &[usize]) -> Result<Self> {
        Self::frame(origin)?.apply_sequence(history)
    }

    pub fn origin(&self) -> &Quiver {
        &self.origin
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn history(&self) -> &[usize] {
        &self.history
    }

    pub fn n(&self) -> usize {
        self.origin.n()
    }

    pub fn mutate(&self, k: usize) -> Result<Self> {
        let quiver = self.quiver.mutate(k)?;
        let mut history = self.history.clone();
        history.push(k);
        Ok(MutationState {
            origin: self.origin.clone(),
            quiver,
            history,
        })
    }

    /// Mutates along `seq`, leftmost first.
    pub fn apply_sequence(&self, seq: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        for &k in seq {
            let idx = out.quiver.check_mutable(k)?;
            out.quiver.mutate_index_in_place(idx)?;
            out.history.push(k);
        }
        Ok(out)
    }

    /// Drops the last mutation; `None` on an empty history.
    pub fn undo(&self) -> Option<Self> {
        let (&last, rest) = self.history.split_last()?;
        let quiver = self
            .quiver
            .mutate(last)
            .expect("history holds valid vertices");
        Some(MutationState {
            origin: self.origin.clone(),
            quiver,
            history: rest.to_vec(),
        })
    }

    /// The c-matrix, checked for sign coherence.
    pub fn c_matrix(&self) -> CMatrix {
        let c = self.c_matrix_unchecked();
        assert!(
            c.is_sign_coherent(),
            "c-matrix {c:?} after {:?} is not sign-coherent",
            self.history
        );
        c
    }

    pub fn c_matrix_unchecked(&self) -> CMatrix {
        let n = self.n();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.quiver.b(i, n + j));
            }
        }
        CMatrix { n, entries }
    }

    /// Green iff no arrow from a frozen vertex ends at `i`.
    pub fn vertex_status(&self, i: usize) -> Result<VertexStatus> {
        let idx = self.quiver.check_mutable(i)?;
        Ok(self.status_of_index(idx))
    }

    pub(crate) fn status_of_index(&self, idx: usize) -> VertexStatus {
        let n = self.n();
        if (0..n).any(|j| self.quiver.b(idx, n + j) < 0) {
            VertexStatus::Red
        } else {
            VertexStatus::Green
        }
    }

    pub fn statuses(&self) -> Vec<VertexStatus> {
        (0..self.n()).map(|i| self.status_of_index(i)).collect()
    }

    /// Green vertices, ascending 1-based labels.
    pub fn greens(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.status_of_index(i) == VertexStatus::Green)
            .map(|i| i + 1)
            .collect()
    }

    pub fn reds(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.status_of_index(i) == VertexStatus::Red)
            .map(|i| i + 1)
            .collect()
    }

    pub fn all_red(&self) -> bool {
        (0..self.n()).all(|i| self.status_of_index(i) == VertexStatus::Red)
    }

    /// A key identifying the state up to frozen isomorphism.
    ///
    /// Rows of a c-matrix are pairwise distinct (it is unimodular), so
    /// sorting the mutable vertices by c-vector gives a canonical order.
    pub fn frozen_class_key(&self) -> CanonicalKey {
        let order = self.c_vector_order();
        let n = self.n();
        let mut values = Vec::with_capacity(n * 2 * n);
        for &i in &order {
            for &j in &order {
                values.push(self.quiver.b(i, j));
            }
            for j in 0..n {
                values.push(self.quiver.b(i, n + j));
            }
        }
        CanonicalKey::encode(n, &values)
    }

    /// Mutable indices sorted by c-vector. `order[r]` is the vertex placed at rank `r`.
    pub(crate) fn c_vector_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            let ra = (0..n).map(|j| self.quiver.b(a, n + j));
            let rb = (0..n).map(|j| self.quiver.b(b, n + j));
            ra.cmp(rb)
        });
        order
    }
}

impl fmt::Debug for MutationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MutationState")
            .field("history", &self.history)
            .field("quiver", &self.quiver)
            .finish()
    }
}

/// Per-vertex invariant used to prune candidate images: the vertex's row to
/// the frozen block, then its sorted row and column into the mutable block.
fn vertex_signature(q: &Quiver, i: usize) -> (Vec<i64>, Vec<i64>) {
    let n = q.n();
    let frozen: Vec<i64> = (n..q.dim()).map(|j| q.b(i, j)).collect();
    let mut mutable: Vec<i64> = (0..n).map(|j| q.b(i, j)).collect();
    mutable.sort_unstable();
    (frozen, mutable)
}

/// Searches for a permutation `sigma` of the mutable vertices with
/// `a[sigma(i)][sigma(j)] = b[i][j]` and `a[sigma(i)][j'] = b[i][j']`.
pub fn frozen_isomorphism_of_quivers(a: &Quiver, b: &Quiver) -> Result<Option<Permutation>> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.frozen() != b.frozen() {
        return Ok(None);
    }
    let n = a.n();
    let sig_a: Vec<_> = (0..n).map(|i| vertex_signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| vertex_signature(b, i)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&x| sig_a[x] == sig_b[i]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    // Most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| candidates[i].len());

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        depth: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        a: &Quiver,
        b: &Quiver,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let i = order[depth];
        for &x in &candidates[i] {
            if used[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&j| {
                let y = image[j];
                a.b(x, y) == b.b(i, j)
            });
            if !consistent {
                continue;
            }
            image[i] = x;
            used[x] = true;
            if extend(depth + 1, order, candidates, a, b, image, used) {
                return true;
            }
            used[x] = false;
            image[i] = usize::MAX;
        }
        false
    }

    if extend(0, &order, &candidates, a, b, &mut image, &mut used) {
        Ok(Permutation::from_images(image))
    } else {
        Ok(None)
    }
}

/// Frozen isomorphism between the final quivers of two states.
///
/// The returned `sigma` maps vertex `i` of `b` to vertex `sigma(i)` of `a`.
pub fn frozen_isomorphism(a: &MutationState, b: &MutationState) -> Result<Option<Permutation>> {
    frozen_isomorphism_of_quivers(&a.quiver, &b.quiver)
}

/// Exhaustive reference search over all `n!` permutations.
pub fn brute_force_frozen_isomorphism(a: &Quiver, b: &Quiver) -> Option<Permutation> {
    let n = a.n();
    if n != b.n() || a.frozen() != b.frozen() {
        return None;
    }
    let d = a.dim();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let image = |i: usize| if i < n { perm[i] } else { i };
        let ok = (0..n).all(|i| (0..d).all(|j| a.b(image(i), image(j)) == b.b(i, j)));
        if ok {
            return Permutation::from_images(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_arrows(2, &[(1, 2, 1)]).unwrap()
    }

    #[test]
    fn frame_adds_frozen_arrows() {
        let s = MutationState::frame(&a2()).unwrap();
        assert_eq!(s.quiver().arrows(), vec![(1, 2, 1), (1, 3, 1), (2, 4, 1)]);
        assert!(s.history().is_empty());
        assert_eq!(s.c_matrix(), CMatrix::identity(2));

        let single = MutationState::frame(&Quiver::empty(1)).unwrap();
        assert_eq!(single.quiver().arrows(), vec![(1, 2, 1)]);
    }

    #[test]
    fn frame_rejects_framed() {
        let s = MutationState::frame(&a2()).unwrap();
        assert_eq!(
            MutationState::frame(s.quiver()),
            Err(Error::AlreadyFramed)
        );
    }

    #[test]
    fn a2_states_along_both_sequences() {
        let s = MutationState::frame(&a2()).unwrap();
        let s1 = s.apply_sequence(&[1]).unwrap();
        // 2 -> 1, 1' -> 1, 2 -> 2'
        assert_eq!(s1.quiver().arrows(), vec![(2, 1, 1), (2, 4, 1), (3, 1, 1)]);
        assert_eq!(s1.c_matrix().rows(), vec![vec![-1, 0], vec![0, 1]]);
        assert_eq!(s1.statuses(), vec![VertexStatus::Red, VertexStatus::Green]);

        let s2 = s.apply_sequence(&[2]).unwrap();
        assert_eq!(s2.c_matrix().rows(), vec![vec![1, 1], vec![0, -1]]);

        let s21 = s.apply_sequence(&[2, 1]).unwrap();
        // 1 -> 2, 2 -> 1', 1' -> 1, 2' -> 1
        assert_eq!(
            s21.quiver().arrows(),
            vec![(1, 2, 1), (2, 3, 1), (3, 1, 1), (4, 1, 1)]
        );

        let s12 = s.apply_sequence(&[1, 2]).unwrap();
        assert!(s12.all_red());
        assert_eq!(s.apply_sequence(&[]).unwrap(), s);
    }

    #[test]
    fn frozen_isomorphism_of_a2_finals() {
        let s = MutationState::frame(&a2()).unwrap();
        let x = s.apply_sequence(&[1, 2]).unwrap();
        let y = s.apply_sequence(&[2, 1, 2]).unwrap();
        let sigma = frozen_isomorphism(&x, &y).unwrap().unwrap();
        assert_eq!(sigma.to_labels(), vec![2, 1]);
        assert!(frozen_isomorphism(&x, &x).unwrap().unwrap().is_identity());

        let p = s.apply_sequence(&[1]).unwrap();
        let q = s.apply_sequence(&[2]).unwrap();
        assert_eq!(frozen_isomorphism(&p, &q).unwrap(), None);
        assert_eq!(brute_force_frozen_isomorphism(p.quiver(), q.quiver()), None);
    }

    #[test]
    fn frozen_isomorphism_size_mismatch() {
        let s = MutationState::frame(&a2()).unwrap();
        let t = MutationState::frame(&Quiver::empty(1)).unwrap();
        assert!(matches!(
            frozen_isomorphism(&s, &t),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn undo_restores() {
        let s = MutationState::frame(&a2()).unwrap();
        let t = s.mutate(1).unwrap();
        assert_eq!(t.undo().unwrap(), s);
        assert_eq!(s.undo(), None);
    }

    #[test]
    fn coframe_has_negative_identity() {
        let s = MutationState::coframe(&a2()).unwrap();
        assert_eq!(s.c_matrix().rows(), vec![vec![-1, 0], vec![0, -1]]);
        assert!(s.all_red());
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.apply_label(3), 1);
        assert_eq!(Permutation::from_images(vec![0, 0]), None);
    }

    #[test]
    #[should_panic(expected = "not sign-coherent")]
    fn mixed_row_panics() {
        let c = CMatrix {
            n: 2,
            entries: vec![1, -1, 0, 1],
        };
        c.row_sign(0);
    }
}

//! Quivers as skew-symmetric exchange matrices, and their mutation.
//!
//! A quiver on `n` mutable vertices and `f` frozen vertices is stored as a
//! dense `(n + f) x (n + f)` matrix whose `(i, j)` entry is the number of
//! arrows `i -> j` minus the number of arrows `j -> i`. Since a quiver has no
//! loops and no 2-cycles, this encoding loses nothing.
//!
//! User-facing vertex labels are 1-based. Frozen vertex `i'` sits at label
//! `n + i`. Matrix accessors take 0-based indices.

mod canonical;
mod framed;
mod json;

pub use canonical::{canonical_form, CanonicalKey};
pub use framed::{
    brute_force_frozen_isomorphism, frozen_isomorphism, frozen_isomorphism_of_quivers, CMatrix, MutationState, Permutation,
    VertexStatus,
};
pub use json::{ArrowEntry, QuiverFile};

use crate::error::{Error, Result};
use std::fmt;

/// A quiver without loops or 2-cycles, with an optional block of frozen vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    mutable: usize,
    frozen: usize,
    b: Vec<i64>,
}

impl Quiver {
    /// The quiver with `n` vertices and no arrows.
    pub fn empty(n: usize) -> Self {
        Quiver {
            mutable: n,
            frozen: 0,
            b: vec![0; n * n],
        }
    }

    /// Builds a quiver from `(source, target, multiplicity)` triples with 1-based labels.
    ///
    /// Opposite arrows between the same pair cancel.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize, u32)]) -> Result<Self> {
        let mut q = Quiver::empty(n);
        for &(s, t, m) in arrows {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if s == t {
                return Err(Error::LoopArrow { vertex: s });
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity {
                    from: s,
                    to: t,
                });
            }
            let (i, j) = (s - 1, t - 1);
            q.b[i * n + j] += i64::from(m);
            q.b[j * n + i] -= i64::from(m);
        }
        Ok(q)
    }

    /// Builds an unframed quiver from a square skew-symmetric matrix.
    pub fn from_matrix(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_matrix_with_frozen(rows, 0)
    }

    /// Builds a quiver whose last `frozen` rows/columns are frozen vertices.
    pub fn from_matrix_with_frozen(rows: &[Vec<i64>], frozen: usize) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) || frozen > dim {
            return Err(Error::NotSquare);
        }
        for i in 0..dim {
            for j in 0..dim {
                if rows[i][j] != -rows[j][i] {
                    return Err(Error::NotSkewSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        let mut q = Quiver {
            mutable: dim - frozen,
            frozen,
            b: rows.iter().flatten().copied().collect(),
        };
        q.clear_frozen_block();
        Ok(q)
    }

    /// Number of mutable vertices.
    pub fn n(&self) -> usize {
        self.mutable
    }

    /// Number of frozen vertices.
    pub fn frozen(&self) -> usize {
        self.frozen
    }

    /// Total number of vertices.
    pub fn dim(&self) -> usize {
        self.mutable + self.frozen
    }

    /// Matrix entry at 0-based indices.
    #[inline]
    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.b[i * self.dim() + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, value: i64) {
        let d = self.dim();
        self.b[i * d + j] = value;
    }

    /// Rows of the full matrix.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.b.chunks(self.dim()).map(<[i64]>::to_vec).collect()
    }

    /// The mutable block as a standalone quiver.
    pub fn mutable_part(&self) -> Quiver {
        let n = self.mutable;
        let mut q = Quiver::empty(n);
        for i in 0..n {
            for j in 0..n {
                q.b[i * n + j] = self.b(i, j);
            }
        }
        q
    }

    /// Arrows as sorted `(source, target, multiplicity)` triples with 1-based labels.
    pub fn arrows(&self) -> Vec<(usize, usize, u32)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let m = self.b(i, j);
                if m > 0 {
                    out.push((i + 1, j + 1, m as u32));
                }
            }
        }
        out
    }

    /// Number of arrows counted with multiplicity.
    pub fn arrow_count(&self) -> u64 {
        self.b.iter().filter(|&&x| x > 0).map(|&x| x as u64).sum()
    }

    /// Checks that `k` is a mutable label and converts it to an index.
    pub fn check_mutable(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.dim() {
            return Err(Error::VertexOutOfRange {
                vertex: k,
                n: self.mutable,
            });
        }
        if k > self.mutable {
            return Err(Error::FrozenVertex { vertex: k });
        }
        Ok(k - 1)
    }

    /// Mutation at the mutable vertex `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        let k = self.check_mutable(k)?;
        let mut out = self.clone();
        out.mutate_index_in_place(k)?;
        Ok(out)
    }

    /// In-place mutation at a 0-based mutable index. Frozen-frozen entries
    /// produced by the composition step are discarded. Fails with
    /// [`Error::Overflow`] if an entry leaves the `i64` range, in which case
    /// `self` is left untouched.
    pub(crate) fn mutate_index_in_place(&mut self, k: usize) -> Result<()> {
        let d = self.dim();
        let col_k: Vec<i64> = (0..d).map(|i| self.b(i, k)).collect();
        let row_k: Vec<i64> = (0..d).map(|j| self.b(k, j)).collect();
        let mut next = self.clone();
        for i in 0..d {
            let bik = col_k[i];
            if i == k || bik == 0 {
                continue;
            }
            for j in 0..d {
                if j == k {
                    continue;
                }
                if bik.signum() * row_k[j].signum() > 0 {
                    let prod = bik.checked_mul(row_k[j]).ok_or(Error::Overflow)?;
                    let cur = next.b(i, j);
                    let val = cur.checked_add(bik.signum() * prod).ok_or(Error::Overflow)?;
                    next.set(i, j, val);
                }
            }
        }
        for j in 0..d {
            next.set(k, j, row_k[j].checked_neg().ok_or(Error::Overflow)?);
            next.set(j, k, col_k[j].checked_neg().ok_or(Error::Overflow)?);
        }
        next.clear_frozen_block();
        *self = next;
        Ok(())
    }

    fn clear_frozen_block(&mut self) {
        let n = self.mutable;
        let d = self.dim();
        for i in n..d {
            for j in n..d {
                self.set(i, j, 0);
            }
        }
    }

    /// Mutates along `seq`, leftmost entry first.
    pub fn mutate_sequence(&self, seq: &[usize]) -> Result<Quiver> {
        let mut q = self.clone();
        for &k in seq {
            let idx = q.check_mutable(k)?;
            q.mutate_index_in_place(idx)?;
        }
        Ok(q)
    }

    /// Relabels the mutable vertices: vertex `i` of `self` becomes `perm[i]`
    /// (0-based images). Frozen vertices stay put.
    pub fn relabel(&self, perm: &[usize]) -> Quiver {
        assert_eq!(perm.len(), self.mutable, "permutation size");
        let d = self.dim();
        let image = |i: usize| if i < self.mutable { perm[i] } else { i };
        let mut out = self.clone();
        for i in 0..d {
            for j in 0..d {
                out.set(image(i), image(j), self.b(i, j));
            }
        }
        out
    }

    /// The opposite quiver (all arrows reversed).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            mutable: self.mutable,
            frozen: self.frozen,
            b: self.b.iter().map(|x| -x).collect(),
        }
    }

    /// Vertices (1-based) with no incoming arrows among mutable vertices.
    pub fn sources(&self) -> Vec<usize> {
        let n = self.mutable;
        (0..n)
            .filter(|&i| (0..n).all(|j| self.b(i, j) >= 0))
            .map(|i| i + 1)
            .collect()
    }

    /// Vertices (1-based) with no outgoing arrows among mutable vertices.
    pub fn sinks(&self) -> Vec<usize> {
        let n = self.mutable;
        (0..n)
            .filter(|&i| (0..n).all(|j| self.b(i, j) <= 0))
            .map(|i| i + 1)
            .collect()
    }

    /// An oriented cycle of the mutable part, if any (1-based labels).
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.mutable;
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut mark = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        fn visit(
            q: &Quiver,
            v: usize,
            mark: &mut [u8],
            stack: &mut Vec<usize>,
        ) -> Option<Vec<usize>> {
            mark[v] = 1;
            stack.push(v);
            for w in 0..q.mutable {
                if q.b(v, w) > 0 {
                    if mark[w] == 1 {
                        let pos = stack.iter().position(|&x| x == w).unwrap();
                        return Some(stack[pos..].iter().map(|x| x + 1).collect());
                    }
                    if mark[w] == 0 {
                        if let Some(c) = visit(q, w, mark, stack) {
                            return Some(c);
                        }
                    }
                }
            }
            stack.pop();
            mark[v] = 2;
            None
        }
        for v in 0..n {
            if mark[v] == 0 {
                if let Some(c) = visit(self, v, &mut mark, &mut stack) {
                    return Some(c);
                }
            }
        }
        None
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.b(i, j) == -self.b(j, i)))
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quiver")
            .field("n", &self.mutable)
            .field("frozen", &self.frozen)
            .field("arrows", &self.arrows())
            .finish()
    }
}

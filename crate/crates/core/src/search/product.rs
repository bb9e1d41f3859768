//! Square products of alternating Dynkin quivers.
//!
//! The vertex `(i, j)` of `Q1 □ Q2` gets label `(i - 1) * n2 + j`. Arrows of
//! `Q1` are copied into each column `j`, reversed when `j` is a source of
//! `Q2`; arrows of `Q2` are copied into each row `i`, reversed when `i` is a
//! sink of `Q1`. Every oriented square of the grid then becomes a cycle.

use super::dynkin::{alternate_blocks, DynkinQuiver};
use super::verify::verify_sequence;
use crate::error::{Error, Result};
use crate::quiver::Quiver;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareProduct {
    pub quiver: Quiver,
    pub n1: usize,
    pub n2: usize,
    /// Pairs of sources and pairs of sinks.
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
    pub h: usize,
    pub h_prime: usize,
}

impl SquareProduct {
    pub fn label(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n2 + j
    }
}

pub fn square_product(q1: &DynkinQuiver, q2: &DynkinQuiver) -> Result<SquareProduct> {
    let (n1, n2) = (q1.quiver.n(), q2.quiver.n());
    let label = |i: usize, j: usize| (i - 1) * n2 + j;
    let is_source1 = |i: usize| q1.sources.contains(&i);
    let is_source2 = |j: usize| q2.sources.contains(&j);

    let mut arrows = Vec::new();
    for &(a, b, m) in &q1.quiver.arrows() {
        for j in 1..=n2 {
            if is_source2(j) {
                arrows.push((label(b, j), label(a, j), m));
            } else {
                arrows.push((label(a, j), label(b, j), m));
            }
        }
    }
    for &(a, b, m) in &q2.quiver.arrows() {
        for i in 1..=n1 {
            if is_source1(i) {
                arrows.push((label(i, a), label(i, b), m));
            } else {
                arrows.push((label(i, b), label(i, a), m));
            }
        }
    }
    let quiver = Quiver::from_arrows(n1 * n2, &arrows)?;

    let mut even = Vec::new();
    let mut odd = Vec::new();
    for i in 1..=n1 {
        for j in 1..=n2 {
            if is_source1(i) == is_source2(j) {
                even.push(label(i, j));
            } else {
                odd.push(label(i, j));
            }
        }
    }
    Ok(SquareProduct {
        quiver,
        n1,
        n2,
        even,
        odd,
        h: q1.spec.coxeter_number(),
        h_prime: q2.spec.coxeter_number(),
    })
}

/// `even odd even ...` with `h` blocks and `odd even odd ...` with `h'`
/// blocks, each verified maximal green.
pub fn square_product_sequences(p: &SquareProduct) -> Result<(Vec<usize>, Vec<usize>)> {
    let seq_a = alternate_blocks(&p.even, &p.odd, p.h);
    let seq_b = alternate_blocks(&p.odd, &p.even, p.h_prime);
    for seq in [&seq_a, &seq_b] {
        let report = verify_sequence(&p.quiver, seq)?;
        if !report.is_maximal_green() {
            return Err(Error::ConstructionInvalid(format!(
                "square product block sequence {seq:?} is {:?}",
                report.verdict
            )));
        }
    }
    Ok((seq_a, seq_b))
}

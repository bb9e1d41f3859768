use super::product::{dt_product, verify_identity, DtProduct, Factor, IdentityCheck};
use crate::error::{Error, Result};
use crate::qalgebra::SeriesTerm;
use crate::quiver::{Quiver, QuiverFile};
use crate::search::{acyclic_green_sequence, search_green_sequences, verify_sequence, SearchBounds, Want};
use serde::{Deserialize, Serialize};

/// The invariant `E_Q` of `q` up to total degree `cap`.
///
/// A supplied sequence must be reddening; otherwise one is searched for
/// within `bounds`. When a second sequence is at hand (a further search
/// result, or the topological order of an acyclic quiver) the two products
/// are compared before returning.
pub fn dt_invariant(
    q: &Quiver,
    cap: u32,
    reddening: Option<&[usize]>,
    bounds: SearchBounds,
) -> Result<DtProduct> {
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    match reddening {
        Some(seq) => {
            if !verify_sequence(q, seq)?.verdict.is_reddening() {
                return Err(Error::NotReddening);
            }
            candidates.push(seq.to_vec());
            if q.find_cycle().is_none() {
                candidates.push(acyclic_green_sequence(q)?);
            }
        }
        None => {
            let found = search_green_sequences(q, bounds, Want::All)?;
            if found.sequences.is_empty() {
                return Err(Error::UnknownWithinBounds);
            }
            let mut seqs = found.sequences;
            seqs.sort_by_key(Vec::len);
            candidates.push(seqs[0].clone());
            if let Some(longest) = seqs.last().filter(|s| **s != seqs[0]) {
                candidates.push(longest.clone());
            }
        }
    }
    if let [a, b] = candidates.as_slice() {
        if a != b {
            if let IdentityCheck::Unequal(d) = verify_identity(q, a, b, cap)? {
                return Err(Error::IdentityViolated {
                    exponent: d.exponent.as_slice().to_vec(),
                });
            }
        }
    }
    dt_product(q, &candidates[0], cap)
}

/// Serialised form of a product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DtRecord {
    pub quiver: QuiverFile,
    pub sequence: Vec<usize>,
    pub degree: u32,
    pub factors: Vec<Factor>,
    pub series: Vec<SeriesTerm>,
}

impl DtProduct {
    pub fn to_record(&self) -> DtRecord {
        DtRecord {
            quiver: QuiverFile::from_quiver(&self.quiver),
            sequence: self.sequence.clone(),
            degree: self.cap,
            factors: self.factors.clone(),
            series: self.value.to_terms(),
        }
    }
}

//! Ordered products of quantum dilogarithms along mutation sequences.

use crate::error::{Error, Result};
use crate::qalgebra::{dilog_series, lambda_of, Difference, Exponent, QuantumSeries};
use crate::quiver::{MutationState, Quiver};
use serde::{Deserialize, Serialize};

/// One factor `E(y^{eps * beta})^eps` of a product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    /// The c-vector of the mutated vertex before the mutation.
    pub beta: Vec<i64>,
    pub eps: i8,
}

impl Factor {
    /// `eps * beta`, which lies in N^n.
    pub fn exponent(&self) -> Exponent {
        Exponent::new(
            self.beta
                .iter()
                .map(|&x| u32::try_from(x * i64::from(self.eps)).expect("sign-coherent c-vector"))
                .collect(),
        )
    }
}

/// The product attached to a quiver and a mutation sequence.
#[derive(Debug, Clone)]
pub struct DtProduct {
    pub quiver: Quiver,
    pub sequence: Vec<usize>,
    pub cap: u32,
    pub factors: Vec<Factor>,
    pub value: QuantumSeries,
}

/// Reads off the factors of a sequence from the c-matrices of the framed
/// quiver: the factor for step `t` is the c-vector of vertex `i_t` before
/// mutating at it, together with its sign.
pub fn factors_of(q: &Quiver, seq: &[usize]) -> Result<Vec<Factor>> {
    let mut state = MutationState::frame(q)?;
    let mut factors = Vec::with_capacity(seq.len());
    for &k in seq {
        let idx = state.quiver().check_mutable(k)?;
        let c = state.c_matrix();
        factors.push(Factor {
            beta: c.row(idx).to_vec(),
            eps: c.row_sign(idx),
        });
        state = state.mutate(k)?;
    }
    Ok(factors)
}

/// `E(y^{eps_1 beta_1})^{eps_1} ... E(y^{eps_N beta_N})^{eps_N}` truncated at
/// total degree `cap`.
pub fn dt_product(q: &Quiver, seq: &[usize], cap: u32) -> Result<DtProduct> {
    if q.frozen() != 0 {
        return Err(Error::AlreadyFramed);
    }
    let factors = factors_of(q, seq)?;
    let lambda = lambda_of(q);
    let mut value = QuantumSeries::one(&lambda, cap);
    for f in &factors {
        let e = f.exponent();
        if e.degree() > cap {
            // E(y^beta) = 1 + O(|beta|) vanishes above the cap
            continue;
        }
        let factor = dilog_series(&lambda, cap, &e, f.eps)?;
        value = value.mul(&factor)?;
    }
    Ok(DtProduct {
        quiver: q.clone(),
        sequence: seq.to_vec(),
        cap,
        factors,
        value,
    })
}

/// Outcome of comparing two products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityCheck {
    Equal,
    Unequal(Difference),
}

impl IdentityCheck {
    pub fn is_equal(&self) -> bool {
        matches!(self, IdentityCheck::Equal)
    }
}

/// Compares the products of two sequences coefficient by coefficient up to `cap`.
pub fn verify_identity(q: &Quiver, seq_a: &[usize], seq_b: &[usize], cap: u32) -> Result<IdentityCheck> {
    let a = dt_product(q, seq_a, cap)?;
    let b = dt_product(q, seq_b, cap)?;
    Ok(match a.value.first_difference(&b.value)? {
        None => IdentityCheck::Equal,
        Some(d) => IdentityCheck::Unequal(d),
    })
}

/// `E * y^alpha * E^{-1}` truncated at `cap` (which may not exceed the
/// product's own cap).
pub fn conjugate_monomial(e: &DtProduct, alpha: &[u32], cap: u32) -> Result<QuantumSeries> {
    if cap > e.cap {
        return Err(Error::SeriesMismatch("truncation degree"));
    }
    if alpha.len() != e.value.n() {
        return Err(Error::SeriesMismatch("variable count"));
    }
    let value = e.value.truncate(cap);
    let mono = QuantumSeries::monomial(
        value.lambda(),
        cap,
        Exponent::new(alpha.to_vec()),
        crate::qalgebra::QCoefficient::one(),
    );
    value.mul(&mono)?.mul(&value.inverse()?)
}

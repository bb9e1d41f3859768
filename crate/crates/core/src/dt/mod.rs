//! Combinatorial DT invariants: products of quantum dilogarithms along
//! reddening sequences, and a commutative periodicity probe.

mod invariant;
mod probe;
mod product;
mod rational;
mod yseed;

pub use invariant::{dt_invariant, DtRecord};
pub use probe::dt_order_probe;
pub use product::{
    conjugate_monomial, dt_product, factors_of, verify_identity, DtProduct, Factor, IdentityCheck,
};
pub use rational::{MPoly, RatFunc};
pub use yseed::{y_seed_mutate, SeparatedSeed, TropicalSeed, YSeed};

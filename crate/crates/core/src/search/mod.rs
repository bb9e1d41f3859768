//! Green and reddening sequences: verification, bounded search, mutation
//! classes, the oriented exchange graph, and the fixture catalog.

mod class;
mod dynkin;
mod exchange;
mod fixtures;
mod green;
mod product;
mod verify;

pub use class::{enumerate_mutation_class, MutationClass};
pub use dynkin::{
    acyclic_green_sequence, alternate_blocks, dynkin_green_sequences, dynkin_quiver,
    split_sources_sinks, DynkinFamily, DynkinQuiver, DynkinSpec, Orientation,
};
pub use exchange::{build_exchange_graph, ExchangeEdge, ExchangeGraphSlice, ExchangeNode};
pub use fixtures::{catalog, dynkin_fixture_sequences, fixture, fixture_names, Fixture};
pub use green::{search_green_sequences, SearchBounds, SearchOutcome, Want};
pub use product::{square_product, square_product_sequences, SquareProduct};
pub use verify::{verify_sequence, SequenceReport, Step, Verdict};

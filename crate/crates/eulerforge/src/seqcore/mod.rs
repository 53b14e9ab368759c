//! Weight sequences and their functional family.

pub mod functional;
pub mod sequence;

pub use functional::{
    func_d, func_finite, func_infinite, functional, functional_table, weighted_series, FunctionalKind,
    FunctionalTable,
};
pub use sequence::{seq_alt, seq_geom, seq_harmonic, seq_ones, harmonic_expansion, SeqKind, Tag, WeightSequence};

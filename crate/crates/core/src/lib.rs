//! Regular LDPC codes from the space of symmetric matrices over GF(q).
//!
//! Points of the space are the n×n symmetric matrices over GF(q); lines are
//! the maximal sets of rank 1. The line/point incidence matrix H(n,q) and its
//! transpose are parity-check matrices of two regular girth-8 code families,
//! `C(n,q)` and `Cᵀ(n,q)`. This crate builds both, computes their structural
//! and distance properties exactly where that is feasible, and decodes them.

pub mod codes;
pub mod decode;
pub mod error;
pub mod gf;
pub mod gf2;
pub mod incidence;
pub mod sim;
pub mod sparse;
pub mod symspace;

pub use codes::{gallager_random, make_code, CodeParams, CodeSpec, Family};
pub use decode::{bp_decode_awgn, peel_decode_bec, AwgnChannel, DecodeOutcome, DecodeStatus};
pub use error::{Error, Result};
pub use gf::{FieldElement, FieldTable};
pub use gf2::{
    code_dimension, min_distance, rank_gf2, stopping_distance, DistanceResult, DistanceStatus, SearchBudget,
};
pub use incidence::{build_h, BipartiteGraph, Incidence, StructureReport};
pub use sim::{run_awgn_sweep, run_bec_sweep, Channel, SimOptions, SimResult};
pub use sparse::SparseBitMatrix;
pub use symspace::{Line, Motion, SymPoint, SymSpace};

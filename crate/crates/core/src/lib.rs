//! One-vertex maps as pairs of permutations: census by automorphism group,
//! Riemann surface signatures, and classification of the strictly
//! edge-transitive maps against the classical curves with large cyclic
//! automorphism groups.

pub mod arith;
pub mod autgroup;
pub mod census;
pub mod classify;
pub mod maps;
pub mod perm;
pub mod riemann;
pub mod verify;

pub use autgroup::{aut_data, aut_period, are_equivalent, canonical_form, AutData};
pub use census::{census_table, class_count, nu, nu_bar, CensusConfig, CensusRow};
pub use maps::{DartMap, MapLiteral, MapProfile, OneVertexMap};
pub use perm::Permutation;
pub use riemann::{Signature, GenVector};

//! Planar cubic maps, face weights and non-Hamiltonicity certificates.
//!
//! A [`PlanarMap`] is a connected plane graph given by a counterclockwise
//! rotation system. Faces carry weight `length - 2`; a Hamiltonian cycle
//! splits them into two classes of equal weight, and a map whose faces
//! admit no such split with a spanning-cycle border is certified
//! non-Hamiltonian.

pub mod certificate;
pub mod connectivity;
pub mod construction;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod hamilton;
pub mod isobaric;
pub mod map;
pub mod three_h;
pub mod weights;

pub use certificate::{
    certify_non_hamiltonian, check_certificate, decide, parse_certificate, write_certificate, BorderDefect,
    Certificate, Decision,
};
pub use connectivity::{quasi_connectivity, split_by_cut, NontrivialCut, QuasiConnectivity};
pub use construction::{
    f_vector, grinberg_map, grinberg_triangulation, is_four_chromatic, ConstructionParams, FVector,
};
pub use dot::export_dot;
pub use error::{Error, Result};
pub use fixtures::fixture;
pub use format::{parse_map, write_map};
pub use hamilton::{
    enumerate_hamiltonian_cycles, find_hamiltonian_cycle, is_hamiltonian_cycle, HamiltonianCycle,
};
pub use isobaric::{enumerate_isobaric_partitions, IsobaricPartition};
pub use map::{Dart, Face, PlanarMap};
pub use three_h::{find_3h_factorization, verify_corollary, ThreeHFactorization};
pub use weights::{chord_restoration_replay, face_weights, verify_grinberg_identity};

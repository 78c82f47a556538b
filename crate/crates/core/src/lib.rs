//! Strongly regular graphs obtained by Godsil–McKay switching of quadric
//! point-graphs over GF(2), together with the exact enumeration machinery
//! used to check them: clique censuses, isomorphism and automorphism search.

pub mod bigstr;
pub mod bitset;
pub mod cliques;
pub mod error;
pub mod formulas;
pub mod gf2geom;
pub mod graph;
pub mod iso;
pub mod quadric;
pub mod switching;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use gf2geom::{count_subspaces_in, span, third_point, ProjPoint, Subspace};
pub use graph::{decode_graph6, encode_graph6, point_graph, srg_check, Graph, NotSrg, SrgParams};
pub use quadric::{standard_quadric, Family, Quadric};
pub use switching::{build_direct, classify_vertices, gm_switch, gm_validate, TypedPartition, ValidationReport, VertexType, VertexTyping};
pub use cliques::{clique_census, clique_partition_exists, classify_clique, max_clique_size, maximal_cliques, CensusReport, CliqueClass, CliqueReport, PartitionOutcome};
pub use iso::{automorphisms, fingerprint, is_isomorphic, reconstruct_point_graph, recover_typing, setwise_stabilizer_order, AutGroup, AutReport, Fingerprint};

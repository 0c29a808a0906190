//! Linear resolutions of square-free monomial ideals over GF(2), decided
//! through chordality of simplicial complexes.

pub mod catalog;
pub mod chordality;
pub mod complex;
pub mod cycles;
pub mod error;
pub mod face;
pub mod generate;
pub mod gf2;
pub mod graph;
pub mod harness;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod resolution;

pub use chordality::{
    find_chord_set_exact, is_chorded, is_d_chorded, verify_chord_set, ChordConfig, ChordSearch, ChordSetCertificate,
    ChordedVerdict, DimensionVerdict, SearchMode, Verdict,
};
pub use complex::SimplicialComplex;
pub use cycles::CycleCertificate;
pub use cycles::{enumerate_face_minimal_cycles, DEFAULT_KERNEL_CAP};
pub use error::{Error, Result};
pub use face::{Face, VertexSet, MAX_VERTICES};
pub use gf2::{BitVector, EchelonBasis, GF2Matrix};
pub use graph::{is_chordal_graph, Chordality, Graph};
pub use homology::Chain;
pub use homology::{reduced_betti_numbers, reduced_homology_dim, HomologyWitness};
pub use ideal::MonomialIdeal;
pub use io::{parse_complex, parse_ideal, write_complex, write_ideal};
pub use resolution::{
    betti_table, criterion_report, has_linear_resolution, BettiTable, LinearityCheck, ResolutionReport, Verdicts,
};

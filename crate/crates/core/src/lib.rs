//! Local cohomology of quotients of monomial ideals through degree complexes.

pub mod chain;
pub mod degree;
pub mod error;
pub mod face;
pub mod graph;
pub mod linalg;
pub mod local;
pub mod ring;
pub mod simplicial;
pub mod symbolic;

pub use chain::{relative_cohomology_dims, CochainComplex, CohomologyBasis, CohomologyDims};
pub use degree::{
    degree_complex, link_reduction_check, relative_degree_pair, DegreePair, EnumerationBox,
    Multidegree,
};
pub use error::{Error, Result};
pub use face::Face;
pub use graph::{Graph, OddCycleCensus};
pub use linalg::{Matrix, PrimeField};
pub use local::{
    depth_and_cm, dim_quotient_pair, lc_piece, CohomologyProfile, IdealQuotient, MultiplicationMap,
    ProfileEntry, ProfileOptions, SesTerms,
};
pub use ring::{Monomial, MonomialIdeal, RingContext};
pub use simplicial::{RelativePair, SimplicialComplex};
pub use symbolic::{
    cm_edge_criterion, cm_edge_report, colon_radical_identities, discrepancy_report, edge_ideal,
    gcm_discrepancy_check, locally_matroidal, perfect_stable_check, ratliff_check, stability_probe,
    symbolic_power, symbolic_quotient_report, unicyclic_stable_dim, DiscrepancyOptions,
    DiscrepancyReport,
};

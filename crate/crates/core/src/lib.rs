//! Hamiltonian paths on `n` equally spaced points of a circle: which
//! multisets of chord types they can have, and how many distinct lengths
//! they come in.

pub mod chord;
pub mod enumerate;
pub mod error;
pub mod identities;
pub mod lengths;
pub mod numeric;
pub mod rank;
pub mod realize;

pub use chord::{chord_type, is_admissible, path_multiset, sigma_d, Multiset, Path, ProblemSize};
pub use enumerate::{
    count_admissible, count_all, iter_admissible, iter_canonical, AdmissibleIter, EnumerationRange,
};
pub use error::{Error, Result};
pub use identities::{
    build_remainder_system, cyclotomic, dimension_formula, identity_basis, improper_identity,
    is_identity, is_integer_identity, same_length, IdentityBasis, IdentityOracle, IdentityVector,
    IntPolynomial, LinearSystem,
};
pub use lengths::{
    arrow, count_distinct_lengths, count_distinct_lengths_numeric, eliminates,
    enumerate_bounded_identities, essential_identities, integer_identity_lattice,
    BoundedIdentitySet,
};
pub use rank::MultisetRanker;
pub use realize::{
    brute_force_realizable, campaign, heuristic_order, hillclimb, lds_backtrack, verify,
    CampaignCheckpoint, CampaignMethod, CampaignOptions, CampaignReport, HillClimbConfig,
    HillClimbResult, LdsConfig, LdsResult,
};

//! Exact computations with monomial ideals: Betti tables through simplicial
//! homology, Alexander duality, path ideals of graphs, direct links and
//! licci decisions.
//!
//! Elimination is generic over an [`EliminationDomain`]; monomials and ideals
//! are generic over their unsigned exponent type. The aliases below fix the
//! concrete choices used throughout the crate.

pub mod betti;
pub mod corpus;
pub mod doc;
pub mod error;
pub mod exactfield;
pub mod graphs;
pub mod harness;
pub mod licci;
pub mod linkage;
pub mod monomial;
pub mod polar;
pub mod sqfree;

pub use betti::{betti_table, invariants, reg_artinian_socle, taylor_oracle, BettiTable, Invariants};
pub use corpus::DEFAULT_SEED;
pub use doc::{from_json, to_json, BettiDoc, BettiReportDoc, GraphDoc, IdealDoc, VerdictDoc};
pub use error::{Error, Result};
pub use exactfield::{rank, rank_over, EliminationDomain, FieldSpec, Integers, PrimeField, SparseMatrix};
pub use graphs::{Graph, GraphClass, GraphKind};
pub use harness::{Probe, Summary, TaskInfo, TaskOutcome};
pub use licci::{
    audit, classify, hu_decide, hu_step, licci_bound_check, obstruction_not_licci, suspension_verdict, HuStep,
    LicciVerdict, RuleEntry, RuleId, Status, TraceStep,
};
pub use linkage::{is_monomial_regular_sequence, verify_direct_link, verify_suspension_chain, Check, Report};
pub use monomial::{Exponent, Monomial, MonomialIdeal, Ring, StandardForm};
pub use polar::{depolarize_suspension, polarize, polarize_with_origin, Polarization};
pub use sqfree::{alexander_dual, minimal_primes, reduced_homology_dims, stanley_reisner, SimplicialComplex};

/// Monomial ideal with 16-bit exponents, the default throughout.
pub type Ideal = MonomialIdeal<u16>;
/// Monomial with 16-bit exponents.
pub type Mono = Monomial<u16>;
/// Compact ideal for inputs whose exponents stay below 256.
pub type SmallIdeal = MonomialIdeal<u8>;
/// Integer elimination in machine words.
pub type MachineIntegers = Integers<i64>;
/// Integer elimination in 128-bit words.
pub type WideIntegers = Integers<i128>;
/// Integer elimination with arbitrary precision.
pub type BigIntegers = Integers<num_bigint::BigInt>;

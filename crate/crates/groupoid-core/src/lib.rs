//! Finite magmas ("groupoids") given by Cayley tables, the modular families
//! Z_n(t,u) and their identity-adjoined variants, equational law checking,
//! substructure enumeration, and Smarandache-structure detection.

pub mod error;
pub mod laws;
pub mod magma;
pub mod smarandache;
pub mod subset;
pub mod substructure;
pub mod zn;

pub use error::{Error, Result};
pub use laws::{check_law, check_law_on, eval_sides, Expr, LawDomain, LawId, LawReport, ALL_LAWS};
pub use magma::{
    BasicReport, ConjugatePair, FiniteMagma, LoopDefect, LoopReport, Side, Witness, WitnessKind,
    ZeroDivisorReport,
};
pub use smarandache::{
    is_s_subgroupoid, is_smarandache, product_block_subset, qualifying_semigroup, s_commutative,
    s_conjugate, s_direct_product, s_homomorphisms, s_ideal, s_idempotent, s_inner_commutative,
    s_isomorphic, s_law, s_law_over, s_normal, s_seminormal, s_semiconjugate, s_subgroupoid_bound_check,
    s_subgroupoids, sg_divides, smarandache_witness, smarandache_witness_bounded, BoundCheck,
    ConjugacyEvidence, SLawReport, SLawStrength, SPolicy, SgWitness, MORPHISM_DOMAIN_BOUND,
};
pub use subset::SubsetMask;
pub use substructure::{
    are_conjugate_subgroupoids, conjugate_subgroupoids_report, enumerate_closed,
    enumerate_closed_bounded, enumerate_ideals, enumerate_subsemigroups, generated_closure,
    ideal_report, induced_submagma, is_closed_subset, is_ideal, is_inner_commutative,
    is_normal_groupoid, is_normal_subgroupoid, is_simple, is_subset_associative,
    is_subset_commutative, is_trivial_subset, normal_subgroupoid_report,
    subset_associativity_witness, ClosedSetFamily, EscapeWitness, IdealSide, MultiplierScope,
    NormalityDefect, NormalityScope, DEFAULT_ENUMERATION_BOUND,
};
pub use zn::{
    build_loop, build_zn, class_size, classify_pair, enumerate_class, predicted_flags, ClassTag,
    PredictedFlags, Residues, ZnSpec, CLASS_TAGS,
};

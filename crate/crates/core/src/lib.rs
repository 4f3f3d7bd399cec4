//! Exact-arithmetic construction and verification of finite-dimensional
//! nonassociative unital algebras built from twisted tensor products:
//! Cayley-Dickson doubling (both formulations), the Clifford process, and
//! a tripling construction, together with exhaustive identity checkers
//! and per-instance verification of the structural statements relating
//! them.
//!
//! All arithmetic is exact (arbitrary-precision rationals, or GF(p) for
//! odd primes); every pass/fail verdict is decided on basis tuples where
//! multilinearity makes that complete, and every failure carries a
//! concrete witness.

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod format;
pub mod linmap;
pub mod properties;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod theorems;
pub mod twisting;

pub use algebra::{
    check_involution, check_involutive_automorphism, strong_involution_data, Algebra, Element,
    Involution, StrongInvolutionData,
};
pub use constructions::{
    c_algebra, c_conjugation, catalog, cayley_dickson, cayley_dickson_underline, cd_iso,
    clifford_step, rmap_from_involution, tripling, tripling_base, ConstructionResult,
};
pub use error::{Error, Result};
pub use format::{
    algebra_from_json, algebra_to_json, sidecar_path, sigma_from_json, sigma_to_json,
    twist_from_json, twist_to_json,
};
pub use linmap::{vec_add, vec_is_zero, vec_scale, vec_sub, vec_unit, vec_zero, LinearMap};
pub use properties::{
    associator, check_homomorphism, check_isomorphism, homogeneous_alternative_laws,
    is_alternative, is_associative, is_commutative, is_flexible, norm_form,
    power_associative_bounded, strong_identities_check, NormForm,
};
pub use report::{CheckReport, Verdict, Witness};
pub use rng::{Sampler, DEFAULT_SEED};
pub use scalar::{Field, Scalar};
pub use theorems::{
    verify_associativity_prop, verify_theorem_ext, verify_theorem_main, verify_tripling_suite,
    Overall, TheoremReport,
};
pub use twisting::{
    alt_twisted_product, check_a0_stability, check_alt_twisting_axioms, check_braid,
    check_mirror_axioms, lift_involution, lift_involution_full, mirror_product, tensor_hom_check,
    LiftOutcome, MirrorMap, Stability, TwistedAlgebra, TwistingMap,
};

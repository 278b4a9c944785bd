//! Orthogonal Vectors instances and their reduction to intersection of a
//! `∘+` expression with a `∘|` expression.

mod gadgets;
mod instance;
mod normalize;
mod reduction;
mod relations;
mod verify;

pub use gadgets::{
    compact_possets, coord_gadget_a, coord_gadget_b, special_gadgets, vector_gadget_a,
    vector_gadget_b, GadgetError, GadgetSet, DOLLAR, X, Y,
};
pub use instance::{orthogonal, ov_bruteforce, random_instance, OvInstance, OvParseError, Plant};
pub use normalize::{
    normalize_instance, prepare_instance, AssumptionViolation, Normalized, NormalizedOvInstance,
};
pub use reduction::{build_reduction, Reduction, ReductionAudit};
pub use relations::{gadget_relation_suite, RelationCheck};
pub use verify::{verify_reduction, VerifyReport, VerifyStatus};

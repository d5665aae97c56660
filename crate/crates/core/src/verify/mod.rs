//! Computational checks of the branch-count, counting and classification
//! arguments, recorded as replayable claims.

pub mod claim;
pub mod classify;
pub mod ineq;
pub mod lemmas;
pub mod sporadic;

pub use claim::{
    check_inequalities, claim_key, classify_records, replay, run, sporadic_witness, verify_branch_lemmas,
    ClaimRecord, ClaimSpec, Outcome,
};
pub use classify::{exhaustive_classify, family_classify, Template};
pub use lemmas::BranchLemma;
pub use sporadic::SporadicCase;

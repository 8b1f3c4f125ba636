//! Veracity logic: claims, witnesses, actors and weighted trust.
//!
//! The kernel ([`kernel::check_proof`]) replays explicit proof trees, the
//! evaluator ([`eval`]) computes with witnesses, [`semantics`] interprets
//! claims over finite models and [`analysis`] works on trust graphs.
//! Everything here is `no_std` with `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod claim;
pub mod elaborate;
pub mod eval;
pub mod judgement;
pub mod kernel;
pub mod print;
pub mod proof;
pub mod semantics;
pub mod term;
#[cfg(feature = "testing")]
pub mod testing;
pub mod trust;
pub mod weight;

pub use claim::{Claim, ClaimFamily};
pub use eval::{def_equal, normalize, normalize_with_budget, step, EvalError, NormalForm};
pub use judgement::{Actor, Hypothesis, Judgement, Sequent};
pub use kernel::{check_proof, check_sequent, CheckEnv, CheckError, CheckErrorKind, Conclusion};
pub use proof::{NodePath, ProofTree, Rule, SourcePos, Step};
pub use term::{alpha_equal, free_vars, substitute, Provenance, WitnessTerm};
pub use trust::TrustRelation;
pub use weight::{eval_weight_expr, Weight, WeightError, WeightExpr};

//! Revealed-preference analysis of finite choice data.
//!
//! Given a choice correspondence (or a partial set of observed choices) the
//! crate extracts the revealed preference, checks the tau, rho, WARP,
//! V-axiom and delta conditions with witnesses, and exhaustively verifies
//! how these conditions relate on small universes.
//!
//! ```
//! use revpref::{check_rho, check_tau, generators::fixtures, Status};
//!
//! let fruit = fixtures::example1().dataset;
//! assert_eq!(check_tau(&fruit).status, Status::Satisfied);
//! assert_eq!(check_rho(&fruit).status, Status::Violated);
//! ```
//!
//! The guide in `book/` walks through the concepts; its code listings are
//! compiled and run as doc tests of this crate.

pub mod analysis;
pub mod axioms;
pub mod correspondence;
pub mod dataset;
pub mod error;
pub mod generators;
pub mod menu;
pub mod relations;
pub mod universe;
pub mod verifier;

pub use axioms::{
    check_all, check_delta, check_rho, check_tau, check_v_axiom, check_warp,
    detect_reference_points, Axiom, Direction, ReferencePoint, Status, Verdict, Witness,
};
pub use correspondence::{ChoiceCorrespondence, ChoiceData};
pub use dataset::{ingest_dataset, CompletionPolicy, PartialChoiceDataset};
pub use error::{ChoiceError, Result};
pub use menu::Menu;
pub use relations::{
    rationalizes, strict_revealed, undominated, v_maximal, v_relation, weak_revealed,
    BinaryRelation,
};
pub use universe::Universe;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/choice-data.md")]
    mod choice_data {}
    #[doc = include_str!("../../../book/src/revealed-preference.md")]
    mod revealed_preference {}
    #[doc = include_str!("../../../book/src/tau-and-rho.md")]
    mod tau_and_rho {}
    #[doc = include_str!("../../../book/src/classical-axioms.md")]
    mod classical_axioms {}
    #[doc = include_str!("../../../book/src/reference-points.md")]
    mod reference_points {}
    #[doc = include_str!("../../../book/src/partial-data.md")]
    mod partial_data {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

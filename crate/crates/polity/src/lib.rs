//! A two-level model of polities.
//!
//! The observable level is a *formation*: a base of agents together with a
//! complex of coalitions. The explanatory level is a *site*: the same base
//! together with a ground of states and a profile assigning each agent its
//! aspiration set. The knit of a site collects the coalitions realized
//! exactly by some state, the nerve collects the coalitions whose members
//! share at least one state, and the canonical site rebuilds a site from
//! any formation. Around these sit six morphism classes with constructive
//! existence witnesses, functorial actions with naturality checks,
//! delegation analysis, and a brute-force oracle that verifies every
//! structural claim on exhaustively enumerated small instances.

pub mod canonical;
pub mod combinatorics;
pub mod delegation;
pub mod error;
pub mod fixtures;
pub mod functor;
pub mod io;
pub mod morphism;
pub mod oracle;
pub mod projection;
pub mod site;
pub mod voting;

pub use canonical::{canonical_site, canonical_with_nerve, is_canonical, subcanonical_site};
pub use combinatorics::{hat_extend, Base, BaseMap, Coalition, Complex, SimplicialComplex};
pub use error::Error;
pub use morphism::{Mode, PairMap, Verdict};
pub use site::{is_isotopy, Dimension, Ground, GroundMap, PSite, PartingTable, StateSet};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

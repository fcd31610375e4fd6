//! Power, cyclic, enhanced power and commuting graphs of finite semigroups.
//!
//! A [`Semigroup`] is a validated Cayley table over the ids `0..n`. From it
//! the crate builds the four graphs
//!
//! * power graph `Pow(S)`: `x ~ y` iff one is a positive power of the other,
//! * cyclic graph `Γ(S)`: `x ~ y` iff `<x, y>` is monogenic,
//! * enhanced power graph `P_e(S)`: `x ~ y` iff both lie in some `<z>`,
//! * commuting graph `P_c(S)`: `x ~ y` iff `xy = yx`,
//!
//! and decides, from the structure of `S` alone, when each graph is
//! complete and when any two of them coincide. [`characterizations::verify`]
//! compares those structural verdicts with the graphs, and
//! [`enumeration::fuzz_theorems`] does so over every semigroup of order up
//! to five and a set of named families.
//!
//! ```
//! use semigraphs::{constructors::make_monogenic, graphs, characterizations};
//!
//! let s = make_monogenic(3, 2).unwrap();
//! assert!(graphs::is_complete(&graphs::enhanced_power_graph(&s)));
//! assert!(!graphs::is_complete(&graphs::cyclic_graph(&s)));
//! assert!(!characterizations::gamma_complete_pred(&s));
//! ```

pub mod characterizations;
pub mod constructors;
pub mod element_set;
pub mod enumeration;
pub mod error;
pub mod graphs;
pub mod profile;
pub mod semigroup;
pub mod structure;

/// Element id, always below the order of its semigroup.
pub type Element = usize;

pub use characterizations::{verify, TheoremId, VerificationReport, Witness};
pub use constructors::FamilySpec;
pub use element_set::ElementSet;
pub use enumeration::CensusConfig;
pub use error::{Error, Result};
pub use graphs::{GraphKind, GraphSet, SimpleGraph};
pub use profile::{monogenic_profile, MonogenicProfile};
pub use semigroup::{validate_table, Semigroup, TableFile};
pub use structure::{
    cyclic_subgroups, generated, has_cpxcp_subgroup, idempotents, is_monogenic,
    maximal_subgroup_at, s_f_partition,
};

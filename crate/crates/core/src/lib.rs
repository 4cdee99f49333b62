//! Deterministic ω-automata over ultimately periodic words, studied modulo a
//! set `D` of don't-care words.
//!
//! - [`priority`] renumbers parity priorities so that as few as possible are
//!   used while acceptance outside `D` is unchanged, and builds automata on
//!   the D-congruence quotient ([`langops`]).
//! - [`learner`] learns a D-minimal weak Büchi automaton from membership and
//!   equivalence queries.
//! - [`hardness`] builds the graph colouring instances that make
//!   D-minimization of parity automata hard.
//! - [`io`] reads and writes a native text format, a fragment of HOA and
//!   graphs; [`cli`] is the `omega-dc` command line.
//!
//! ```
//! use omega_dontcare::{fixtures, priority::optimize_priorities};
//!
//! let a = fixtures::four_priority_dpa();
//! let opt = optimize_priorities(&a, Some(&fixtures::eventually_a())).unwrap();
//! assert_eq!((a.distinct_priorities(), opt.distinct_priorities()), (4, 3));
//! ```

pub mod alphabet;
pub mod automaton;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod hardness;
pub mod io;
pub mod langops;
pub mod learner;
pub mod priority;
pub mod product;
pub mod quotient;
pub mod random;
pub mod scc;
pub mod stateset;
pub mod ts;
pub mod word;

pub use alphabet::{Alphabet, Letter, Word};
pub use automaton::{Acceptance, AcceptanceKind, OmegaAutomaton, Priority};
pub use error::{Error, Result};
pub use stateset::StateSet;
pub use ts::{Homomorphism, State, TransitionSystem};
pub use word::UpWord;

//! Don't-care priority optimization and the minimization procedures built on
//! it.
//!
//! The central object is a subset-parity oracle: for a set `P'` of states of
//! a target transition system and a family (accepting or rejecting), it
//! returns the union of all infinity sets of that family contained in `P'`.
//! [`FamilyOracle`] answers these queries from a DPA, a don't-care DPA and a
//! homomorphism without listing the (possibly exponential) families.

mod bruteforce;
mod chain;
mod minimize;
mod oracle;

pub use bruteforce::{brute_force_consistent_parity, ExplicitFamilies};
pub use chain::{consistent_parity_within, optimal_consistent_parity, ChainAssignment, ChainNode, NotParity};
pub use minimize::{minimize_to_irc, minimize_wdba, optimize_on_quotient, optimize_priorities};
pub use oracle::{build_family_oracle, Family, FamilyOracle, SubsetParityOracle};

//! Deterministic state machines whose tables come from the modular
//! groupoids Z_n(t,u): semi-automata `(Z, A, δ)` and Mealy automata
//! `(Z, A, B, δ, λ)`, runs over flat and parenthesized input words,
//! closed-state-set enumeration, series/parallel composition, and a
//! brute-force division order.

pub mod builder;
pub mod error;
pub mod machine;
pub mod structure;
pub mod words;

pub use builder::{auto_from_groupoids, semi_from_groupoids};
pub use error::{Error, Result};
pub use machine::{Automaton, SemiAutomaton};
pub use structure::{
    automaton_divides, automaton_equivalent, closed_state_sets, parallel_compose, s_sub_semi_automata,
    series_compose, DIVISION_STATE_BOUND,
};
pub use words::{run_auto, run_free, run_semi, FreeWord, InputWord};

//! Census tables, theorem verification, and printed-table fixtures for the
//! modular groupoid laboratory.
//!
//! The heavy lifting — Cayley tables, law checks, substructure and
//! Smarandache detectors, automata — lives in `groupoid-core` and
//! `groupoid-automata`. This crate packages those primitives into:
//!
//! - a [`census`] over the coefficient classes with prediction/observation
//!   agreement columns and CSV / JSON-lines writers,
//! - a [`registry`] of verification entries that replay each catalogued
//!   characterization against brute force over a modulus range,
//! - an [`errata`] catalog of printed claims the oracles contradict, and
//! - a [`fixtures`] corpus of printed tables with their stated properties.

pub mod census;
pub mod errata;
pub mod error;
pub mod fixtures;
pub mod registry;

pub use census::{
    census, census_record, write_csv, write_jsonl, CensusRecord, CSV_COLUMNS,
    DEFAULT_MODULUS_BOUND, NOT_COMPUTED,
};
pub use errata::{erratum, Erratum, ERRATA};
pub use error::{Error, Result};
pub use fixtures::{fixture_check_all, fixture_names, load_fixture, ClaimResult, FixtureReport, LoadedFixture};
pub use registry::{registry_ids, theorem_entry, verify_theorem, Status, VerificationReport};

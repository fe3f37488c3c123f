//! Orchestration behind the `kleshchev` binary: campaign configuration,
//! per-multipartition classification, exhaustive level sweeps with the
//! proved inclusions asserted and the conjectured ones reported, and
//! deterministic JSON/DOT output.

pub mod campaign;
pub mod classify;
pub mod config;
pub mod report;

pub use campaign::{export_graph, find_counterexamples, run_campaign, Session};
pub use classify::{classify, Classification};
pub use config::{CampaignConfig, ConfigError};
pub use report::{ChargeReport, LevelReport, Report};

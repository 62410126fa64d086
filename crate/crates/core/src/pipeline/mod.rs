//! The classification pipeline as resumable stages over an append-only
//! record log.
//!
//! Stages: ingest, basic_filter, config_filter, decorate (per graph), then
//! r3_bigon, full_reduce, seifert, braid, conjugacy and certify (per
//! diagram, keyed by signature). A run writes `records.jsonl`,
//! `report.txt` and `report.json` into its output directory.

mod config;
mod record;
mod report;
mod run;

pub use config::{ConfigFilterOrder, PipelineConfig};
pub use record::{RecordStore, Stage, StageRecord, Status};
pub use report::{Outcome, Report};
pub use run::{run_pipeline, RunSummary, CHEN_WORD};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("input {0} does not exist")]
    MissingInput(String),
    #[error("record log line {line}: {msg}")]
    Record { line: usize, msg: String },
    #[error(transparent)]
    Polyhedra(#[from] crate::polyhedra::PolyhedraError),
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Exit status of a run or report: 0 complete, 2 unresolved survivors,
/// 3 search limits hit.
pub fn exit_code(r: &Report) -> i32 {
    if r.count(Outcome::Limit) > 0 {
        3
    } else if r.count(Outcome::Unresolved) > 0 {
        2
    } else {
        0
    }
}

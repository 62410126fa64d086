//! Stage records, one JSON object per line, appended by a single writer.
//! A trailing line without its newline is a torn write and is dropped when
//! the log is reopened.

use super::PipelineError;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Ingest,
    BasicFilter,
    ConfigFilter,
    Decorate,
    R3Bigon,
    FullReduce,
    Seifert,
    Braid,
    Conjugacy,
    Certify,
}

impl Stage {
    pub const ALL: [Stage; 10] = [
        Stage::Ingest,
        Stage::BasicFilter,
        Stage::ConfigFilter,
        Stage::Decorate,
        Stage::R3Bigon,
        Stage::FullReduce,
        Stage::Seifert,
        Stage::Braid,
        Stage::Conjugacy,
        Stage::Certify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Ingest => "ingest",
            Stage::BasicFilter => "basic_filter",
            Stage::ConfigFilter => "config_filter",
            Stage::Decorate => "decorate",
            Stage::R3Bigon => "r3_bigon",
            Stage::FullReduce => "full_reduce",
            Stage::Seifert => "seifert",
            Stage::Braid => "braid",
            Stage::Conjugacy => "conjugacy",
            Stage::Certify => "certify",
        }
    }

    /// Keyed by graph rather than by diagram.
    pub fn is_graph_stage(self) -> bool {
        self <= Stage::Decorate
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Excluded,
    Survivor,
    Trivial,
    ChenClass,
    MirrorChenClass,
    Limit,
}

impl Status {
    pub const ALL: [Status; 6] = [
        Status::Excluded,
        Status::Survivor,
        Status::Trivial,
        Status::ChenClass,
        Status::MirrorChenClass,
        Status::Limit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Status::Excluded => "excluded",
            Status::Survivor => "survivor",
            Status::Trivial => "trivial",
            Status::ChenClass => "chen_class",
            Status::MirrorChenClass => "mirror_chen_class",
            Status::Limit => "limit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub stage: Stage,
    /// Graph key for graph stages, signature hex for diagram stages.
    pub key: String,
    /// `<input stem>#<ordinal>`.
    pub graph: String,
    pub vertices: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub micros: u64,
}

/// Parses the complete lines of a log; returns their byte length.
fn parse_log(bytes: &[u8], out: &mut Vec<StageRecord>) -> Result<usize, PipelineError> {
    let complete = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
    let text = std::str::from_utf8(&bytes[..complete]).map_err(|e| PipelineError::Record { line: 0, msg: e.to_string() })?;
    for (i, l) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let r = serde_json::from_str(l).map_err(|e| PipelineError::Record { line: i + 1, msg: e.to_string() })?;
        out.push(r);
    }
    Ok(complete)
}

pub struct RecordStore {
    path: PathBuf,
    file: std::fs::File,
    records: Vec<StageRecord>,
    index: HashMap<(Stage, String), usize>,
}

impl RecordStore {
    pub fn open(path: &Path) -> Result<Self, PipelineError> {
        let mut records = Vec::new();
        if path.exists() {
            let bytes = std::fs::read(path)?;
            let complete = parse_log(&bytes, &mut records)?;
            if complete < bytes.len() {
                let f = std::fs::OpenOptions::new().write(true).open(path)?;
                f.set_len(complete as u64)?;
            }
        }
        let file = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
        let mut s = RecordStore { path: path.to_path_buf(), file, records: Vec::new(), index: HashMap::new() };
        for r in records {
            s.insert(r);
        }
        Ok(s)
    }

    /// Records of a log without modifying it, one per `(stage, key)`; a torn
    /// trailing line is ignored.
    pub fn read(path: &Path) -> Result<Vec<StageRecord>, PipelineError> {
        let mut records = Vec::new();
        parse_log(&std::fs::read(path)?, &mut records)?;
        let mut seen = std::collections::HashSet::new();
        records.retain(|r| seen.insert((r.stage, r.key.clone())));
        Ok(records)
    }

    fn insert(&mut self, r: StageRecord) -> bool {
        let k = (r.stage, r.key.clone());
        if self.index.contains_key(&k) {
            return false;
        }
        self.index.insert(k, self.records.len());
        self.records.push(r);
        true
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, stage: Stage, key: &str) -> Option<&StageRecord> {
        self.index.get(&(stage, key.to_string())).map(|&i| &self.records[i])
    }

    pub fn records(&self) -> &[StageRecord] {
        &self.records
    }

    /// Appends records whose `(stage, key)` is new, then flushes.
    pub fn append(&mut self, rs: impl IntoIterator<Item = StageRecord>) -> Result<(), PipelineError> {
        let mut buf = Vec::new();
        for r in rs {
            let line = serde_json::to_string(&r).expect("records serialize");
            if self.insert(r) {
                buf.extend_from_slice(line.as_bytes());
                buf.push(b'\n');
            }
        }
        if !buf.is_empty() {
            self.file.write_all(&buf)?;
            self.file.flush()?;
        }
        Ok(())
    }

    /// Rewrites the log with one record per `(stage, key)`, in first-seen order.
    pub fn compact(&mut self) -> Result<(), PipelineError> {
        let tmp = self.path.with_extension("compact");
        let mut out = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
        for r in &self.records {
            serde_json::to_writer(&mut out, r).map_err(std::io::Error::from)?;
            out.write_all(b"\n")?;
        }
        out.into_inner().map_err(|e| e.into_error())?.sync_all()?;
        std::fs::rename(&tmp, &self.path)?;
        self.file = std::fs::OpenOptions::new().append(true).open(&self.path)?;
        Ok(())
    }
}

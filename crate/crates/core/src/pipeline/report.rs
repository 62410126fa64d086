//! Summaries of a record log. Everything is sorted, and timings are left
//! out, so a log reached through any sequence of resumed runs gives the
//! same report bytes.

use super::{Stage, StageRecord, Status};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

/// Final verdict on one decorated diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Excluded by a reduction search, the Seifert filter or a late
    /// configuration filter.
    Reducible,
    Trivial,
    ChenClass,
    MirrorChenClass,
    Unresolved,
    Limit,
}

impl Outcome {
    pub const ALL: [Outcome; 6] = [
        Outcome::Reducible,
        Outcome::Trivial,
        Outcome::ChenClass,
        Outcome::MirrorChenClass,
        Outcome::Unresolved,
        Outcome::Limit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Outcome::Reducible => "reducible",
            Outcome::Trivial => "trivial",
            Outcome::ChenClass => "chen_class",
            Outcome::MirrorChenClass => "mirror_chen_class",
            Outcome::Unresolved => "unresolved",
            Outcome::Limit => "limit",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StageCounts {
    pub stage: String,
    pub counts: BTreeMap<String, usize>,
    pub total: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexRow {
    pub vertices: usize,
    pub ingested: usize,
    pub basic: usize,
    pub config_survivors: usize,
    pub diagrams: usize,
    pub after_r3_bigon: usize,
    pub after_full_reduce: usize,
    pub after_seifert: usize,
    /// Graphs carrying at least one diagram that passed the Seifert filter.
    pub seifert_polyhedra: usize,
    pub outcomes: BTreeMap<Outcome, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyhedronRow {
    pub graph: String,
    pub vertices: usize,
    pub diagrams: usize,
    pub after_seifert: usize,
    pub outcomes: BTreeMap<Outcome, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkRow {
    pub key: String,
    pub graph: String,
    pub vertices: usize,
    pub braid: Option<String>,
    pub outcome: Outcome,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub stages: Vec<StageCounts>,
    pub by_vertices: Vec<VertexRow>,
    pub polyhedra: Vec<PolyhedronRow>,
    /// Diagrams that reached the braid stage or hit a limit.
    pub links: Vec<LinkRow>,
    pub outcomes: BTreeMap<Outcome, usize>,
}

/// Orders `stem#12` after `stem#9`.
fn graph_order(g: &str) -> (String, usize) {
    match g.rsplit_once('#') {
        Some((s, n)) => (s.to_string(), n.parse().unwrap_or(usize::MAX)),
        None => (g.to_string(), 0),
    }
}

impl Report {
    pub fn count(&self, o: Outcome) -> usize {
        self.outcomes.get(&o).copied().unwrap_or(0)
    }

    pub fn from_records(records: &[StageRecord]) -> Report {
        let mut stages: Vec<StageCounts> = Stage::ALL
            .iter()
            .map(|s| StageCounts { stage: s.name().into(), ..Default::default() })
            .collect();
        let mut graph_recs: HashMap<(&str, Stage), &StageRecord> = HashMap::new();
        let mut diagrams: BTreeMap<(String, usize), BTreeMap<&str, Vec<&StageRecord>>> = BTreeMap::new();
        let mut vertices_of: HashMap<&str, usize> = HashMap::new();
        for r in records {
            let sc = &mut stages[r.stage as usize];
            *sc.counts.entry(r.status.name().into()).or_default() += 1;
            sc.total += 1;
            vertices_of.insert(&r.graph, r.vertices);
            if r.stage.is_graph_stage() {
                graph_recs.insert((&r.graph, r.stage), r);
            } else {
                let (s, n) = graph_order(&r.graph);
                diagrams.entry((s, n)).or_default().entry(&r.key).or_default().push(r);
            }
        }

        let mut rows: BTreeMap<usize, VertexRow> = BTreeMap::new();
        for r in records.iter().filter(|r| r.stage.is_graph_stage()) {
            let row = rows.entry(r.vertices).or_insert_with(|| VertexRow { vertices: r.vertices, ..Default::default() });
            let survived = r.status == Status::Survivor;
            match r.stage {
                Stage::Ingest => row.ingested += 1,
                Stage::BasicFilter if survived => row.basic += 1,
                Stage::ConfigFilter if survived => row.config_survivors += 1,
                _ => {}
            }
        }

        let mut report = Report { stages, ..Default::default() };
        let mut graphs: Vec<&str> = vertices_of.keys().copied().collect();
        graphs.sort_by_key(|g| graph_order(g));
        for g in graphs {
            let n = vertices_of[g];
            let late_excluded = graph_recs.get(&(g, Stage::ConfigFilter)).is_some_and(|r| r.status == Status::Excluded);
            let Some(ds) = diagrams.get(&graph_order(g)) else { continue };
            let row = rows.entry(n).or_insert_with(|| VertexRow { vertices: n, ..Default::default() });
            let mut poly = PolyhedronRow { graph: g.into(), vertices: n, diagrams: ds.len(), after_seifert: 0, outcomes: BTreeMap::new() };
            row.diagrams += ds.len();
            for (key, recs) in ds {
                let passed = |s: Stage| recs.iter().any(|r| r.stage == s && r.status == Status::Survivor);
                row.after_r3_bigon += usize::from(passed(Stage::R3Bigon));
                row.after_full_reduce += usize::from(passed(Stage::FullReduce));
                let seifert = passed(Stage::Seifert);
                row.after_seifert += usize::from(seifert);
                poly.after_seifert += usize::from(seifert);
                let last = recs.iter().max_by_key(|r| r.stage).expect("non-empty");
                let outcome = if recs.iter().any(|r| r.status == Status::Limit) {
                    Outcome::Limit
                } else {
                    match last.status {
                        Status::Excluded => Outcome::Reducible,
                        Status::Survivor if last.stage == Stage::Seifert && late_excluded => Outcome::Reducible,
                        Status::Survivor => Outcome::Unresolved,
                        Status::Trivial => Outcome::Trivial,
                        Status::ChenClass => Outcome::ChenClass,
                        Status::MirrorChenClass => Outcome::MirrorChenClass,
                        Status::Limit => Outcome::Limit,
                    }
                };
                *row.outcomes.entry(outcome).or_default() += 1;
                *poly.outcomes.entry(outcome).or_default() += 1;
                *report.outcomes.entry(outcome).or_default() += 1;
                let braid = recs.iter().find(|r| r.stage == Stage::Braid && r.status == Status::Survivor);
                if braid.is_some() || outcome == Outcome::Limit {
                    report.links.push(LinkRow {
                        key: key.to_string(),
                        graph: g.into(),
                        vertices: n,
                        braid: braid.and_then(|r| r.witness.clone()),
                        outcome,
                        note: last.witness.clone(),
                    });
                }
            }
            if poly.after_seifert > 0 {
                row.seifert_polyhedra += 1;
                report.polyhedra.push(poly);
            }
        }
        report.by_vertices = rows.into_values().collect();
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let statuses = Status::ALL.map(Status::name);
        let _ = writeln!(s, "stage counts");
        let _ = write!(s, "{:<14}", "stage");
        for st in statuses {
            let _ = write!(s, " {st:>17}");
        }
        let _ = writeln!(s, " {:>9}", "total");
        for sc in &self.stages {
            let _ = write!(s, "{:<14}", sc.stage);
            for st in statuses {
                let _ = write!(s, " {:>17}", sc.counts.get(st).copied().unwrap_or(0));
            }
            let _ = writeln!(s, " {:>9}", sc.total);
        }

        let _ = writeln!(s, "\nby vertex count");
        let _ = writeln!(
            s,
            "{:>8} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
            "vertices", "ingested", "basic", "config", "diagrams", "r3_bigon", "full", "seifert", "polyhedra"
        );
        for r in &self.by_vertices {
            let _ = writeln!(
                s,
                "{:>8} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
                r.vertices,
                r.ingested,
                r.basic,
                r.config_survivors,
                r.diagrams,
                r.after_r3_bigon,
                r.after_full_reduce,
                r.after_seifert,
                r.seifert_polyhedra
            );
        }

        let _ = writeln!(s, "\npolyhedra with Seifert survivors");
        for p in &self.polyhedra {
            let _ = write!(s, "{} ({} vertices): {} diagrams, {} after seifert;", p.graph, p.vertices, p.diagrams, p.after_seifert);
            for (o, c) in &p.outcomes {
                let _ = write!(s, " {} {c}", o.name());
            }
            let _ = writeln!(s);
        }

        let _ = writeln!(s, "\nclassification");
        for o in Outcome::ALL {
            let _ = writeln!(s, "{:<18} {}", o.name(), self.count(o));
        }
        let flagged: Vec<&LinkRow> = self.links.iter().filter(|l| l.outcome != Outcome::Trivial).collect();
        if !flagged.is_empty() {
            let _ = writeln!(s, "\nnon-trivial, unresolved and limited links");
            for l in flagged {
                let _ = writeln!(
                    s,
                    "{} {} {} [{}] {}",
                    l.outcome.name(),
                    l.graph,
                    &l.key[..l.key.len().min(16)],
                    l.braid.as_deref().unwrap_or("-"),
                    l.note.as_deref().unwrap_or("")
                );
            }
        }
        s
    }
}

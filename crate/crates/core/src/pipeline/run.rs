use super::report::Report;
use super::{exit_code, ConfigFilterOrder, PipelineConfig, PipelineError, RecordStore, Stage, StageRecord, Status};
use crate::braid::{format_braid, min_seifert_orientation, min_seifert_over_orientations, parse_braid, vogel_traczyk, braid_mirror, BraidWord};
use crate::burnside::{burnside3_order, free_burnside_exponent};
use crate::diagram::LinkDiagram;
use crate::groups::{braid_quotient_table, cache_dir, conjugacy_classes, CosetTable, EnumerationLimits};
use crate::invariants::jones_with;
use crate::parallel::Exec;
use crate::polyhedra::{
    check_basic, contains_config, decorate_with, load_config_catalog, parse_graphs, Action, ConfigPattern,
    DecorateOptions, PlaneQuarticGraph,
};
use crate::rewrite::{full_reduction_search, r3_bigon_search, SearchError, SearchLimits, SearchReport};
use std::path::Path;
use std::time::Instant;

/// The Chen link as a closed 5-braid.
pub const CHEN_WORD: &str = "n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4";

#[derive(Clone, Debug)]
pub struct RunSummary {
    pub report: Report,
    pub exit_code: i32,
}

/// `C_5` with the classes of the Chen link and its mirror.
struct Quotient {
    table: CosetTable,
    class_of: Vec<u32>,
    chen: u32,
    mirror: u32,
}

impl Quotient {
    fn new(cache: Option<&Path>) -> Result<Self, PipelineError> {
        let table = braid_quotient_table(5, &EnumerationLimits::default(), cache)?;
        let class_of = conjugacy_classes(&table)?.class_of;
        let chen = parse_braid(CHEN_WORD).expect("constant word");
        let class = |w: &BraidWord| class_of[table.act_word(0, w.letters()) as usize];
        let (chen, mirror) = (class(&chen), class(&braid_mirror(&chen)));
        Ok(Quotient { table, class_of, chen, mirror })
    }

    fn classify(&self, w: &BraidWord) -> (Status, Option<String>) {
        if w.index() != 5 {
            return (Status::Survivor, Some(format!("braid index {}", w.index())));
        }
        let c = self.class_of[self.table.act_word(0, w.letters()) as usize];
        let status = if c == self.chen {
            Status::ChenClass
        } else if c == self.mirror {
            Status::MirrorChenClass
        } else {
            Status::Trivial
        };
        (status, Some(format!("class {c}")))
    }
}

struct Ctx<'a> {
    cfg: &'a PipelineConfig,
    catalog: &'a [ConfigPattern],
    quotient: &'a Quotient,
    store: &'a RecordStore,
    graph: &'a str,
    vertices: usize,
}

impl Ctx<'_> {
    /// Reuses the stored record of `(stage, key)` or runs `f` and queues a
    /// new one.
    fn step(
        &self,
        out: &mut Vec<StageRecord>,
        stage: Stage,
        key: &str,
        f: impl FnOnce() -> (Status, Option<String>),
    ) -> (Status, Option<String>) {
        if let Some(r) = self.store.get(stage, key) {
            return (r.status, r.witness.clone());
        }
        let t = Instant::now();
        let (status, witness) = f();
        out.push(StageRecord {
            stage,
            key: key.to_string(),
            graph: self.graph.to_string(),
            vertices: self.vertices,
            status,
            witness: witness.clone(),
            micros: t.elapsed().as_micros() as u64,
        });
        (status, witness)
    }

    fn config_filter(&self, out: &mut Vec<StageRecord>, g: &PlaneQuarticGraph) -> Status {
        self.step(out, Stage::ConfigFilter, self.graph, || {
            let hits: Vec<&str> = self
                .catalog
                .iter()
                .filter(|p| p.action == Action::Reducible && contains_config(g, p, self.cfg.match_mode))
                .map(|p| p.name.as_str())
                .collect();
            if hits.is_empty() {
                (Status::Survivor, None)
            } else {
                (Status::Excluded, Some(hits.join(",")))
            }
        })
        .0
    }

    fn limits(&self, max_nodes: usize) -> SearchLimits {
        SearchLimits {
            max_extra_crossings: self.cfg.max_extra_crossings,
            max_nodes,
            max_depth: None,
            exec: Exec::Sequential,
        }
    }

    /// Reduction searches and the Seifert filter; true if the diagram survives.
    fn reduce(&self, out: &mut Vec<StageRecord>, key: &str, d: &LinkDiagram) -> bool {
        let (s, _) = self.step(out, Stage::R3Bigon, key, || {
            search_status(r3_bigon_search(d, &self.limits(self.cfg.r3_max_nodes)))
        });
        if s != Status::Survivor {
            return false;
        }
        let (s, _) = self.step(out, Stage::FullReduce, key, || {
            search_status(full_reduction_search(d, &self.limits(self.cfg.full_max_nodes)))
        });
        if s != Status::Survivor {
            return false;
        }
        let (s, _) = self.step(out, Stage::Seifert, key, || {
            let m = min_seifert_over_orientations(d);
            let status = if m < self.cfg.min_seifert { Status::Excluded } else { Status::Survivor };
            (status, Some(format!("{m} Seifert circles")))
        });
        s == Status::Survivor
    }

    /// Braid, conjugacy class in `C_5`, and the certificate.
    fn classify(&self, out: &mut Vec<StageRecord>, key: &str, d: &LinkDiagram) {
        let (_, oriented) = min_seifert_orientation(d);
        let (s, w) = self.step(out, Stage::Braid, key, || match vogel_traczyk(&oriented) {
            Ok(r) => (Status::Survivor, Some(format_braid(&r.word))),
            Err(e) => (Status::Limit, Some(e.to_string())),
        });
        let Some(word) = w.filter(|_| s == Status::Survivor).and_then(|w| parse_braid(&w).ok()) else {
            return;
        };
        let (class, _) = self.step(out, Stage::Conjugacy, key, || self.quotient.classify(&word));
        if class == Status::Survivor {
            return;
        }
        self.step(out, Stage::Certify, key, || certify(&oriented, class));
    }
}

fn search_status(r: Result<SearchReport, SearchError>) -> (Status, Option<String>) {
    match r {
        Ok(SearchReport { witness: Some(w), .. }) => {
            let moves: Vec<String> = w.moves.iter().map(|m| m.to_string()).collect();
            (Status::Excluded, Some(moves.join(" ")))
        }
        Ok(r) => (Status::Survivor, Some(format!("{} diagrams visited", r.visited))),
        Err(e) => (Status::Limit, Some(e.to_string())),
    }
}

fn is_free_exponent(e: usize) -> bool {
    (0..).map(free_burnside_exponent).take_while(|&f| f <= e).any(|f| f == e)
}

/// A trivial class must have the Burnside group of some trivial link; a
/// Chen class must not.
fn certify(d: &LinkDiagram, class: Status) -> (Status, Option<String>) {
    let b = match burnside3_order(d) {
        Ok(b) => b,
        Err(e) => return (Status::Limit, Some(e.to_string())),
    };
    let free = is_free_exponent(b.exponent);
    match class {
        Status::Trivial if free => (Status::Trivial, Some(format!("burnside 3^{}", b.exponent))),
        Status::ChenClass | Status::MirrorChenClass if !free => {
            let j = jones_with(d, Exec::Sequential).map(|j| j.to_string()).unwrap_or_else(|e| e.to_string());
            (class, Some(format!("burnside 3^{}; jones {j}", b.exponent)))
        }
        _ => (
            Status::Survivor,
            Some(format!("burnside 3^{} contradicts {}", b.exponent, class.name())),
        ),
    }
}

/// All stages for one graph; returns the new records.
fn process_graph(ctx: &Ctx, g: &PlaneQuarticGraph, exec: Exec) -> Result<Vec<StageRecord>, PipelineError> {
    let mut out = Vec::new();
    ctx.step(&mut out, Stage::Ingest, ctx.graph, || (Status::Survivor, None));
    let (basic, _) = ctx.step(&mut out, Stage::BasicFilter, ctx.graph, || {
        if check_basic(g) {
            (Status::Survivor, None)
        } else {
            (Status::Excluded, Some("not 4-edge- and 2-vertex-connected".into()))
        }
    });
    let early = ctx.cfg.config_filter == ConfigFilterOrder::Early;
    if basic != Status::Survivor || (early && ctx.config_filter(&mut out, g) != Status::Survivor) {
        return Ok(out);
    }
    let opts = DecorateOptions { prune_reducing_faces: ctx.cfg.prune_reducing_faces, exec };
    let decorations = decorate_with(g, &opts)?;
    ctx.step(&mut out, Stage::Decorate, ctx.graph, || {
        (Status::Survivor, Some(format!("{} diagrams", decorations.len())))
    });
    let keyed: Vec<(String, &LinkDiagram)> =
        decorations.iter().map(|d| (d.signature.to_string(), &d.diagram)).collect();
    let reduced = exec.map(&keyed, |(key, d)| {
        let mut out = Vec::new();
        let alive = ctx.reduce(&mut out, key, d);
        (out, alive)
    });
    let mut alive = Vec::new();
    for ((out_d, a), kd) in reduced.into_iter().zip(&keyed) {
        out.extend(out_d);
        if a {
            alive.push(kd);
        }
    }
    if !alive.is_empty() && !early && ctx.config_filter(&mut out, g) != Status::Survivor {
        alive.clear();
    }
    let classified = exec.map(&alive, |(key, d)| {
        let mut out = Vec::new();
        ctx.classify(&mut out, key, d);
        out
    });
    out.extend(classified.into_iter().flatten());
    Ok(out)
}

/// Runs every stage over every input graph, skipping `(stage, key)` pairs
/// already in the record log, then writes the reports.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<RunSummary, PipelineError> {
    for p in &cfg.inputs {
        if !p.exists() {
            return Err(PipelineError::MissingInput(p.display().to_string()));
        }
    }
    std::fs::create_dir_all(&cfg.output)?;
    let mut store = RecordStore::open(&cfg.output.join("records.jsonl"))?;
    let catalog = match &cfg.catalog {
        Some(p) => load_config_catalog(p)?,
        None => Vec::new(),
    };
    let cache = cfg.cache.clone().or_else(|| cache_dir().map(|d| d.join("c5.table")));
    let quotient = Quotient::new(cache.as_deref())?;
    let exec = if cfg.parallel { Exec::Parallel } else { Exec::Sequential };
    for input in &cfg.inputs {
        let stem = input.file_stem().map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned());
        let graphs = parse_graphs(&std::fs::read(input)?)?;
        for g in &graphs {
            let graph = format!("{stem}#{}", g.id());
            let ctx = Ctx {
                cfg,
                catalog: &catalog,
                quotient: &quotient,
                store: &store,
                graph: &graph,
                vertices: g.vertex_count(),
            };
            let out = process_graph(&ctx, g, exec)?;
            store.append(out)?;
        }
    }
    let report = Report::from_records(store.records());
    std::fs::write(cfg.output.join("report.txt"), report.to_text())?;
    std::fs::write(cfg.output.join("report.json"), report.to_json())?;
    Ok(RunSummary { exit_code: exit_code(&report), report })
}

use std::path::{Path, PathBuf};
use threemove::pipeline::{exit_code, run_pipeline, Outcome, PipelineConfig, PipelineError, RecordStore, Stage, Status};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn config(out: &Path, inputs: &[&str], parallel: bool) -> PipelineConfig {
    PipelineConfig {
        inputs: inputs.iter().map(|i| data(&format!("plantri/{i}"))).collect(),
        catalog: Some(data("catalog.txt")),
        output: out.to_path_buf(),
        cache: Some(out.parent().unwrap().join("c5.table")),
        parallel,
        ..Default::default()
    }
}

fn read(p: &Path) -> Vec<u8> {
    std::fs::read(p).unwrap()
}

#[test]
fn thirteen_and_fourteen_vertices_resolve() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let s = run_pipeline(&config(&out, &["c15.pc", "c16.pc"], true)).unwrap();
    assert_eq!(s.exit_code, 0);
    let r = &s.report;
    assert_eq!(r.count(Outcome::Unresolved) + r.count(Outcome::Limit), 0);
    let rows: Vec<_> = r.by_vertices.iter().map(|v| (v.vertices, v.ingested, v.basic, v.config_survivors)).collect();
    assert_eq!(rows, vec![(13, 19, 19, 1), (14, 64, 64, 3)]);
    // Every stage accounts for each of its inputs.
    for st in &r.stages {
        assert_eq!(st.counts.values().sum::<usize>(), st.total, "{}", st.stage);
    }
    let stage = |name: &str| r.stages.iter().find(|s| s.stage == name).unwrap();
    assert_eq!(stage("ingest").total, 83);
    assert_eq!(stage("basic_filter").total, 83);
    assert_eq!(stage("config_filter").total, 83);
    assert_eq!(stage("decorate").total, 4);
    let diagrams: usize = r.by_vertices.iter().map(|v| v.diagrams).sum();
    assert_eq!(stage("r3_bigon").total, diagrams);
    assert_eq!(r.outcomes.values().sum::<usize>(), diagrams);
    assert!(read(&out.join("report.txt")).starts_with(b"stage counts"));
}

#[test]
fn resume_is_idempotent_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let cfg = config(&a, &["c15.pc"], true);
    let first = run_pipeline(&cfg).unwrap();
    let (log, report) = (read(&a.join("records.jsonl")), read(&a.join("report.json")));
    let again = run_pipeline(&cfg).unwrap();
    assert_eq!(read(&a.join("records.jsonl")), log, "rerun appended records");
    assert_eq!(read(&a.join("report.json")), report);
    assert_eq!(first.report, again.report);

    // A sequential run from scratch produces the same report bytes.
    let b = dir.path().join("b");
    run_pipeline(&config(&b, &["c15.pc"], false)).unwrap();
    assert_eq!(read(&b.join("report.json")), report);
    assert_eq!(read(&b.join("report.txt")), read(&a.join("report.txt")));
}

#[test]
fn killed_run_resumes_to_identical_report() {
    let dir = tempfile::tempdir().unwrap();
    let full = dir.path().join("full");
    run_pipeline(&config(&full, &["c15.pc", "c16.pc"], true)).unwrap();
    let log = read(&full.join("records.jsonl"));
    let lines: Vec<usize> = log.iter().enumerate().filter(|(_, &b)| b == b'\n').map(|(i, _)| i + 1).collect();
    assert!(lines.len() > 10);
    for cut in [lines[lines.len() / 3], lines[lines.len() / 2] + 7, lines[lines.len() - 2] + 1] {
        let part = dir.path().join(format!("cut{cut}"));
        std::fs::create_dir_all(&part).unwrap();
        // The tail past `cut` is lost, the last line possibly torn.
        std::fs::write(part.join("records.jsonl"), &log[..cut]).unwrap();
        run_pipeline(&config(&part, &["c15.pc", "c16.pc"], true)).unwrap();
        assert_eq!(read(&part.join("report.json")), read(&full.join("report.json")), "cut at {cut}");
        assert_eq!(read(&part.join("report.txt")), read(&full.join("report.txt")), "cut at {cut}");
    }
}

#[test]
fn records_are_unique_and_refine_survivors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    run_pipeline(&config(&out, &["c15.pc", "c16.pc"], true)).unwrap();
    let store = RecordStore::open(&out.join("records.jsonl")).unwrap();
    let text = String::from_utf8(read(&out.join("records.jsonl"))).unwrap();
    assert_eq!(text.lines().count(), store.records().len());
    // A diagram stage runs only on survivors of the previous one.
    for r in store.records().iter().filter(|r| !r.stage.is_graph_stage() && r.stage != Stage::R3Bigon) {
        let prev = Stage::ALL[r.stage as usize - 1];
        let p = store.get(prev, &r.key).unwrap_or_else(|| panic!("{:?} without {:?}", r.stage, prev));
        assert!(p.status != Status::Excluded && p.status != Status::Limit, "{:?} after {:?}", r.stage, p.status);
    }
}

#[test]
fn without_catalog_index_six_links_stay_unresolved() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let cfg = PipelineConfig { catalog: None, ..config(&out, &["c15.pc"], true) };
    let s = run_pipeline(&cfg).unwrap();
    assert_eq!(s.report.count(Outcome::Unresolved), 2);
    assert_eq!(s.exit_code, 2);
    assert_eq!(exit_code(&s.report), 2);
    assert!(s.report.links.iter().filter(|l| l.outcome == Outcome::Unresolved).all(|l| l.note.as_deref() == Some("braid index 6")));
}

#[test]
fn node_limits_surface_as_limit_records() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let cfg = PipelineConfig { r3_max_nodes: 1, ..config(&out, &["c15.pc"], true) };
    let s = run_pipeline(&cfg).unwrap();
    assert!(s.report.count(Outcome::Limit) > 0);
    assert_eq!(s.exit_code, 3);
}

#[test]
fn missing_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(&dir.path().join("run"), &["c15.pc"], true);
    cfg.inputs.push(dir.path().join("absent.pc"));
    assert!(matches!(run_pipeline(&cfg), Err(PipelineError::MissingInput(_))));
}

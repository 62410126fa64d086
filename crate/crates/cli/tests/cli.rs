use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn threemove(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_threemove")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TREFOIL: &str = "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]";

#[test]
fn invariants_of_one_diagram() {
    let o = threemove(&["jones", TREFOIL]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "t + t^3 - t^4");

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("trefoil.pd");
    std::fs::write(&f, TREFOIL).unwrap();
    assert_eq!(stdout(&threemove(&["jones", "--pd", path(&f)])).trim(), "t + t^3 - t^4");

    let o = threemove(&["burnside", "n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4"]);
    assert!(stdout(&o).starts_with("3^10 "));
    let o = threemove(&["seifert", TREFOIL]);
    assert!(stdout(&o).ends_with("minimum 2\n"));
    assert_eq!(stdout(&threemove(&["braid", TREFOIL])).trim(), "n=2 1 1 1");
}

#[test]
fn groups_and_conjugacy() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c5.table");
    assert_eq!(stdout(&threemove(&["group", "--n", "3"])).trim(), "|C_3| = 24, 7 conjugacy classes");
    let o = threemove(&["conjugacy", "--cache", path(&cache), "n=5 1 -2 1 -3 -2 4 -3 -2 1 -2 4 -3 -2 1 -2 4 -3 -2 4 -3", "n=5 1 2 3 4"]);
    let s = stdout(&o);
    assert!(s.starts_with("|C_5| = 155520, 102 classes"), "{s}");
    assert!(s.contains("mirror_chen_class") && s.trim_end().ends_with("trivial"), "{s}");
    assert!(cache.exists());
}

#[test]
fn graph_stages() {
    let c15 = data("plantri/c15.pc");
    let dir = tempfile::tempdir().unwrap();
    let basic = dir.path().join("basic.pc");
    let o = threemove(&["ingest", "--input", path(&c15), "--output", path(&basic)]);
    assert_eq!(stdout(&o).trim(), "19 graphs, 19 basic polyhedra");
    let kept = dir.path().join("kept.pc");
    let o = threemove(&["filter", "--input", path(&basic), "--catalog", path(&data("catalog.txt")), "--output", path(&kept)]);
    assert!(stdout(&o).ends_with("1 of 19 graphs survive\n"), "{}", stdout(&o));
    let o = threemove(&["decorate", "--input", path(&kept)]);
    let lines = stdout(&o);
    assert!(!lines.is_empty() && lines.lines().all(|l| l.contains("PD[")));
}

#[test]
fn pipeline_run_report_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    let write = |catalog: bool, out: &str| {
        let cat = if catalog { format!("catalog = {}\n", path(&data("catalog.txt"))) } else { String::new() };
        std::fs::write(
            &cfg,
            format!("inputs = {}\n{cat}output = {out}\ncache = c5.table\n", path(&data("plantri/c15.pc"))),
        )
        .unwrap();
    };
    write(true, "with");
    let o = threemove(&["run", "--config", path(&cfg)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = dir.path().join("with");
    let report = threemove(&["report", "--output", path(&out)]);
    assert_eq!(report.status.code(), Some(0));
    assert_eq!(stdout(&report).as_bytes(), std::fs::read(out.join("report.txt")).unwrap());
    let json = threemove(&["report", "--output", path(&out), "--json"]);
    assert_eq!(json.stdout, std::fs::read(out.join("report.json")).unwrap());
    assert!(stdout(&threemove(&["compact", "--output", path(&out)])).ends_with(" records\n"));

    write(false, "without");
    assert_eq!(threemove(&["run", "--config", path(&cfg)]).status.code(), Some(2));
    assert_eq!(threemove(&["report", "--output", path(&dir.path().join("without"))]).status.code(), Some(2));
}

#[test]
fn errors_exit_with_one() {
    let o = threemove(&["jones", "PD[X[1,2,3]]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = threemove(&["ingest"]);
    assert_eq!(o.status.code(), Some(1));
    let o = threemove(&["run", "--config", "/nonexistent/run.conf"]);
    assert_eq!(o.status.code(), Some(1));
}

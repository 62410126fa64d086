use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::path::PathBuf;
use threemove::braid::{braid_closure, parse_braid};
use threemove::invariants::kauffman_bracket_with;
use threemove::parallel::Exec;
use threemove::polyhedra::{decorate_with, parse_graphs, DecorateOptions};
use threemove::rewrite::{full_reduction_search, SearchLimits};

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn bracket(c: &mut Criterion) {
    let mut g = c.benchmark_group("kauffman_bracket");
    g.sample_size(10);
    let d = braid_closure(&parse_braid("n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3").unwrap());
    for (name, exec) in POLICIES {
        g.bench_with_input(BenchmarkId::new(name, d.crossing_count()), &d, |b, d| {
            b.iter(|| kauffman_bracket_with(d, exec).unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("full_reduction_search");
    g.sample_size(10);
    let d = braid_closure(&parse_braid("n=4 1 -2 3 1 -2 3 1 -2 3").unwrap());
    for (name, exec) in POLICIES {
        let limits = SearchLimits { max_extra_crossings: 2, exec, ..Default::default() };
        g.bench_with_input(BenchmarkId::new(name, d.crossing_count()), &d, |b, d| {
            b.iter(|| full_reduction_search(d, &limits).unwrap())
        });
    }
    g.finish();
}

fn decorate(c: &mut Criterion) {
    let mut g = c.benchmark_group("decorate");
    g.sample_size(10);
    let graph = parse_graphs(&std::fs::read(data("plantri/c16.pc")).unwrap()).unwrap().remove(0);
    for (name, exec) in POLICIES {
        let opts = DecorateOptions { exec, ..Default::default() };
        g.bench_with_input(BenchmarkId::new(name, graph.vertex_count()), &graph, |b, graph| {
            b.iter(|| decorate_with(graph, &opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bracket, search, decorate);
criterion_main!(benches);

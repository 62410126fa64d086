//! `threemove`: stage-by-stage tools and the resumable pipeline.

use clap::{Args, Parser, Subcommand};
use std::error::Error;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use threemove::braid::{
    braid_closure, braid_mirror, format_braid, min_seifert_orientation, parse_braid, seifert_circles, vogel_traczyk,
};
use threemove::burnside::{burnside3_order, fox_coloring_dim, free_burnside_exponent};
use threemove::groups::{
    braid_quotient_table, cache_dir, conjugacy_classes, EnumerationLimits,
};
use threemove::invariants::{jones, palindromic};
use threemove::parallel::Exec;
use threemove::pipeline::{exit_code, run_pipeline, PipelineConfig, RecordStore, Report, CHEN_WORD};
use threemove::polyhedra::{
    check_basic, decorate_with, filter_polyhedra, load_config_catalog, parse_graphs, write_planar_code,
    DecorateOptions, MatchMode, PlaneQuarticGraph,
};
use threemove::rewrite::{full_reduction_search, r3_bigon_search, three_move_reduce, ReduceOutcome, SearchLimits};
use threemove::{format_pd, parse_pd, signature, LinkDiagram};

type Res<T> = Result<T, Box<dyn Error>>;

#[derive(Parser)]
#[command(name = "threemove", version, about = "Classify links modulo 3-moves")]
struct Cli {
    /// Run data-parallel loops sequentially.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

/// A diagram as `PD[...]`, a braid word `n=5 1 -2 ...`, or `-` for stdin.
#[derive(Args)]
struct DiagramArg {
    #[arg(required_unless_present = "pd", conflicts_with = "pd")]
    diagram: Option<String>,
    /// Read the diagram from a file instead.
    #[arg(long)]
    pd: Option<PathBuf>,
}

#[derive(Args)]
struct GraphInput {
    /// planar_code or plantri `-a` file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Run `plantri -adq -c2 <cells>` instead (binary from $PLANTRI or PATH).
    #[arg(long)]
    cells: Option<u32>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Read plane quartic graphs and count basic polyhedra.
    Ingest {
        #[command(flatten)]
        src: GraphInput,
        /// Write the basic polyhedra as planar_code.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Remove graphs containing a reducible catalog configuration.
    Filter {
        #[command(flatten)]
        src: GraphInput,
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        strict_planar: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the diagrams of each graph, one PD code per line.
    Decorate {
        #[command(flatten)]
        src: GraphInput,
        /// Only this graph ordinal.
        #[arg(long)]
        graph: Option<usize>,
        /// Keep diagrams with monogon or bigon faces.
        #[arg(long)]
        keep_reducible: bool,
    },
    /// Reduction searches on one diagram.
    Reduce {
        #[command(flatten)]
        d: DiagramArg,
        #[arg(long, default_value_t = 200_000)]
        max_nodes: usize,
        #[arg(long, default_value_t = 2)]
        extra_crossings: usize,
        /// Greedy 3-move reduction towards a trivial link.
        #[arg(long)]
        three_move: bool,
    },
    /// Seifert circle counts over all orientations.
    Seifert {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// Braid word from the first orientation with fewest Seifert circles.
    Braid {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// Conjugacy classes of 5-braids in C_5, relative to the Chen link.
    Conjugacy {
        /// Braid words `n=5 ...`.
        words: Vec<String>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Burnside and Jones certificates for one diagram.
    Certify {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// Run the pipeline from a `key = value` config file.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
    /// Summarize the records of a run directory.
    Report {
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a run's record log with one record per stage and key.
    Compact {
        #[arg(long)]
        output: PathBuf,
    },
    /// Order and class count of C_n = B_n / (σ1³).
    Group {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Order of the third Burnside group of a diagram.
    Burnside {
        #[command(flatten)]
        d: DiagramArg,
    },
    /// Jones polynomial of a diagram.
    Jones {
        #[command(flatten)]
        d: DiagramArg,
    },
}

fn read_diagram(arg: &DiagramArg) -> Res<LinkDiagram> {
    let mut text = match (&arg.diagram, &arg.pd) {
        (_, Some(p)) => std::fs::read_to_string(p)?,
        (Some(d), None) => d.clone(),
        (None, None) => unreachable!("clap requires one"),
    };
    if text == "-" {
        text.clear();
        std::io::stdin().read_to_string(&mut text)?;
    }
    let t = text.trim();
    if t.starts_with("n=") {
        Ok(braid_closure(&parse_braid(t)?))
    } else {
        Ok(parse_pd(t)?)
    }
}

fn read_graphs(src: &GraphInput) -> Res<Vec<PlaneQuarticGraph>> {
    let bytes = match (&src.input, src.cells) {
        (Some(p), None) => std::fs::read(p)?,
        (None, Some(cells)) => {
            let plantri = std::env::var("PLANTRI").unwrap_or_else(|_| "plantri".into());
            let out = Command::new(&plantri).args(["-adq", "-c2", &cells.to_string()]).output()?;
            if !out.status.success() {
                return Err(format!("{plantri} failed: {}", String::from_utf8_lossy(&out.stderr)).into());
            }
            out.stdout
        }
        _ => return Err("give exactly one of --input and --cells".into()),
    };
    Ok(parse_graphs(&bytes)?)
}

fn write_graphs(path: &Path, gs: &[PlaneQuarticGraph]) -> Res<()> {
    std::fs::write(path, write_planar_code(gs))?;
    Ok(())
}

fn c5_cache(cache: Option<PathBuf>) -> Option<PathBuf> {
    cache.or_else(|| cache_dir().map(|d| d.join("c5.table")))
}

fn run(cli: Cli) -> Res<ExitCode> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match cli.cmd {
        Cmd::Ingest { src, output } => {
            let gs = read_graphs(&src)?;
            let basic: Vec<PlaneQuarticGraph> = gs.iter().filter(|g| check_basic(g)).cloned().collect();
            println!("{} graphs, {} basic polyhedra", gs.len(), basic.len());
            if let Some(p) = output {
                write_graphs(&p, &basic)?;
            }
        }
        Cmd::Filter { src, catalog, strict_planar, output } => {
            let gs = read_graphs(&src)?;
            let cat = load_config_catalog(&catalog)?;
            let mode = if strict_planar { MatchMode::Strict } else { MatchMode::Abstract };
            let r = filter_polyhedra(&gs, &cat, mode, exec);
            for (p, hits) in cat.iter().zip(&r.pattern_hits) {
                println!("{:<32} {hits}", p.name);
            }
            println!("{} of {} graphs survive", r.survivors.len(), gs.len());
            if let Some(p) = output {
                let keep: Vec<PlaneQuarticGraph> = r.survivors.iter().map(|&i| gs[i].clone()).collect();
                write_graphs(&p, &keep)?;
            }
        }
        Cmd::Decorate { src, graph, keep_reducible } => {
            let opts = DecorateOptions { prune_reducing_faces: !keep_reducible, exec };
            for g in read_graphs(&src)?.iter().filter(|g| graph.is_none_or(|k| g.id() == k)) {
                for d in decorate_with(g, &opts)? {
                    println!("{} {} {}", g.id(), d.signature, format_pd(&d.diagram));
                }
            }
        }
        Cmd::Reduce { d, max_nodes, extra_crossings, three_move } => {
            let d = read_diagram(&d)?;
            let limits = SearchLimits { max_extra_crossings: extra_crossings, max_nodes, max_depth: None, exec };
            if three_move {
                match three_move_reduce(&d, &limits) {
                    ReduceOutcome::TrivialLink(k) => println!("trivial link of {k} components"),
                    ReduceOutcome::Stuck(s) => println!("stuck at {} crossings: {}", s.crossing_count(), format_pd(&s)),
                    ReduceOutcome::LimitHit => println!("limit hit"),
                }
                return Ok(ExitCode::SUCCESS);
            }
            for (name, r) in [("r3_bigon", r3_bigon_search(&d, &limits)), ("full_reduce", full_reduction_search(&d, &limits))] {
                match r {
                    Ok(rep) => match rep.witness {
                        Some(w) => {
                            println!("{name}: reducible after {} moves ({} diagrams visited)", w.len(), rep.visited);
                            print!("{w}");
                            println!("{}", format_pd(&w.diagram));
                            return Ok(ExitCode::SUCCESS);
                        }
                        None => println!("{name}: no reducing face ({} diagrams visited)", rep.visited),
                    },
                    Err(e) => {
                        println!("{name}: {e}");
                        return Ok(ExitCode::from(3));
                    }
                }
            }
            return Ok(ExitCode::from(2));
        }
        Cmd::Seifert { d } => {
            let d = read_diagram(&d)?;
            for (i, o) in d.enumerate_orientations().iter().enumerate() {
                println!("orientation {i}: {} Seifert circles", seifert_circles(o));
            }
            println!("minimum {}", min_seifert_orientation(&d).0);
        }
        Cmd::Braid { d } => {
            let (_, o) = min_seifert_orientation(&read_diagram(&d)?);
            let r = vogel_traczyk(&o)?;
            println!("{}", format_braid(&r.word));
            eprintln!("{} Vogel moves", r.vogel_moves);
        }
        Cmd::Conjugacy { words, cache } => {
            let t = braid_quotient_table(5, &EnumerationLimits::default(), c5_cache(cache).as_deref())?;
            let classes = conjugacy_classes(&t)?;
            let class = |w: &[i32]| classes.class_of[t.act_word(0, w) as usize];
            let chen = parse_braid(CHEN_WORD)?;
            let (c, m) = (class(chen.letters()), class(braid_mirror(&chen).letters()));
            println!("|C_5| = {}, {} classes; Chen class {c}, mirror class {m}", t.index(), classes.count());
            for w in words {
                let b = parse_braid(&w)?;
                if b.index() != 5 {
                    return Err(format!("`{w}` is not a 5-braid").into());
                }
                let k = class(b.letters());
                let verdict = if k == c {
                    "chen_class"
                } else if k == m {
                    "mirror_chen_class"
                } else {
                    "trivial"
                };
                println!("{w}: class {k} {verdict}");
            }
        }
        Cmd::Certify { d } => {
            let d = read_diagram(&d)?;
            let b = burnside3_order(&d)?;
            let j = jones(&d.oriented())?;
            let free = (0..).map(free_burnside_exponent).take_while(|&f| f <= b.exponent).find(|&f| f == b.exponent);
            println!("fox 3-coloring dimension {}", fox_coloring_dim(&d));
            println!("burnside order 3^{} (layers {:?})", b.exponent, b.layer_dims);
            println!("jones {j} (palindromic: {})", palindromic(&j));
            match free {
                Some(_) => println!("burnside order matches a trivial link"),
                None => println!("burnside order of no trivial link: not 3-move trivial"),
            }
        }
        Cmd::Run { config } => {
            let cfg = PipelineConfig::load(&config)?;
            let s = run_pipeline(&cfg)?;
            print!("{}", s.report.to_text());
            return Ok(ExitCode::from(s.exit_code as u8));
        }
        Cmd::Report { output, json } => {
            let r = Report::from_records(&RecordStore::read(&output.join("records.jsonl"))?);
            print!("{}", if json { r.to_json() } else { r.to_text() });
            return Ok(ExitCode::from(exit_code(&r) as u8));
        }
        Cmd::Compact { output } => {
            let mut store = RecordStore::open(&output.join("records.jsonl"))?;
            store.compact()?;
            println!("{} records", store.records().len());
        }
        Cmd::Group { n, cache } => {
            let cache = if n == 5 { c5_cache(cache) } else { cache };
            let t = braid_quotient_table(n, &EnumerationLimits::default(), cache.as_deref())?;
            let classes = conjugacy_classes(&t)?;
            println!("|C_{n}| = {}, {} conjugacy classes", t.index(), classes.count());
        }
        Cmd::Burnside { d } => {
            let b = burnside3_order(&read_diagram(&d)?)?;
            println!("3^{} {:?}", b.exponent, b.layer_dims);
        }
        Cmd::Jones { d } => {
            let d = read_diagram(&d)?;
            println!("{}", jones(&d.oriented())?);
            eprintln!("signature {}", signature(&d));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

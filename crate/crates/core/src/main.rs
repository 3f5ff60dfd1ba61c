use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use distbal::constructions::{
    build_complete_bipartite, build_cycle, build_hypercube, build_w_graph, WGraphSpec,
};
use distbal::decomposition::{
    analyze_minimal_2cut, build_layers, check_lemma_3_1, check_prop_4_1, classify_edges,
};
use distbal::error::Error;
use distbal::metric::all_pairs_distances;
use distbal::properties::{
    is_distance_balanced, is_partial_cube, is_strongly_distance_balanced, min_vertex_cut,
    vertex_connectivity,
};
use distbal::report::{analyze_graph, ScanReport};
use distbal::scan::{scan_stream, ScanOptions};
use distbal::{filter, graph6, verify};

const EXIT_USAGE: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "distbal",
    about = "Distance-balanced graph analysis and graph6 stream scanning"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one predicate on one graph6 record (argument or stdin).
    Check {
        /// graph6 record; read from stdin when absent
        record: Option<String>,
        #[arg(long, conflicts_with_all = ["sdb", "pcube", "connectivity"])]
        db: bool,
        #[arg(long, conflicts_with_all = ["pcube", "connectivity"])]
        sdb: bool,
        #[arg(long, conflicts_with = "connectivity")]
        pcube: bool,
        #[arg(long)]
        connectivity: bool,
    },
    /// Full decomposition report for one graph6 record.
    Analyze {
        /// graph6 record; read from stdin when absent
        record: Option<String>,
    },
    /// Emit a graph from one of the built-in families.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Block width for the w family
        #[arg(short, long)]
        m: Option<usize>,
        /// Ring parameter for the w family
        #[arg(long)]
        ell: Option<usize>,
        /// Cycle length
        #[arg(short, long)]
        n: Option<usize>,
        /// Hypercube dimension
        #[arg(short, long)]
        d: Option<usize>,
        /// First side of a complete bipartite graph
        #[arg(short, long)]
        p: Option<usize>,
        /// Second side of a complete bipartite graph
        #[arg(short, long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t = ConstructFormat::Graph6)]
        format: ConstructFormat,
    },
    /// Scan graph6 streams and emit one report per matching record.
    Scan {
        /// Input files; stdin when absent
        files: Vec<String>,
        /// Filter expression, e.g. "bipartite & db & conn=2 & !cycle"
        #[arg(long)]
        filter: Option<String>,
        /// Worker count; defaults to available parallelism
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Exit nonzero when malformed records were seen
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = ScanFormat::Jsonl)]
        format: ScanFormat,
    },
    /// Run the built-in theorem suite against the fixture corpus.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    W,
    Cycle,
    Hypercube,
    Kpq,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFormat {
    Jsonl,
    Table,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            // --help / --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::MalformedRecord(_)) | Some(Error::UnsupportedOrder(_, _)) => EXIT_MALFORMED,
        Some(Error::StructureViolation(_)) => EXIT_INTERNAL,
        Some(_) => EXIT_USAGE,
        None => EXIT_USAGE,
    }
}

fn read_record(arg: Option<String>) -> anyhow::Result<String> {
    match arg {
        Some(r) => Ok(r),
        None => {
            let mut line = String::new();
            io::stdin().lock().read_line(&mut line)?;
            if line.trim().is_empty() {
                anyhow::bail!("no graph6 record on stdin");
            }
            Ok(line.trim().to_string())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Check {
            record,
            db,
            sdb,
            pcube,
            connectivity,
        } => {
            let g = graph6::decode(&read_record(record)?)?;
            let dm = all_pairs_distances(&g);
            let out = if sdb {
                serde_json::json!({
                    "predicate": "strongly_distance_balanced",
                    "verdict": is_strongly_distance_balanced(&g, &dm)?,
                })
            } else if pcube {
                serde_json::json!({
                    "predicate": "partial_cube",
                    "verdict": is_partial_cube(&g, &dm)?,
                })
            } else if connectivity {
                serde_json::json!({
                    "predicate": "vertex_connectivity",
                    "vertex_connectivity": vertex_connectivity(&g)?,
                    "min_cut": min_vertex_cut(&g)?,
                })
            } else {
                let _ = db; // the default predicate
                serde_json::json!({
                    "predicate": "distance_balanced",
                    "verdict": is_distance_balanced(&g, &dm)?,
                })
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { record } => {
            let g = graph6::decode(&read_record(record)?)?;
            let report = analyze_graph(0, &g)?;
            let mut doc = serde_json::to_value(&report)?;
            if report.flags.connected && report.flags.bipartite
                && report.flags.vertex_connectivity == 2
            {
                let dm = all_pairs_distances(&g);
                let analysis = analyze_minimal_2cut(&g, &dm)?;
                doc["two_cut"] = serde_json::to_value(&analysis)?;
                if analysis.hypothesis_ok {
                    match build_layers(&g, &dm, &analysis) {
                        Ok(layers) => {
                            doc["layers"] = serde_json::to_value(&layers)?;
                            doc["lemma_3_1"] =
                                serde_json::json!(check_lemma_3_1(&dm, &analysis, &layers));
                            let classes = classify_edges(&g, &analysis)?;
                            doc["edge_classes"] = serde_json::to_value(&classes)?;
                            doc["prop_4_1"] = serde_json::to_value(check_prop_4_1(
                                &g, &dm, &analysis, &layers, &classes,
                            )?)?;
                        }
                        Err(e) => {
                            doc["layers_error"] = serde_json::json!(e.to_string());
                        }
                    }
                }
            }
            println!("{}", serde_json::to_string_pretty(&doc)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            family,
            m,
            ell,
            n,
            d,
            p,
            q,
            format,
        } => {
            let need = |opt: Option<usize>, name: &str| {
                opt.ok_or_else(|| anyhow::anyhow!("--{name} is required for this family"))
            };
            let g = match family {
                Family::W => build_w_graph(&WGraphSpec {
                    m: need(m, "m")?,
                    ell: need(ell, "ell")?,
                })?,
                Family::Cycle => build_cycle(need(n, "n")?)?,
                Family::Hypercube => build_hypercube(need(d, "d")?)?,
                Family::Kpq => build_complete_bipartite(need(p, "p")?, need(q, "q")?)?,
            };
            match format {
                ConstructFormat::Graph6 => println!("{}", graph6::encode(&g)?),
                ConstructFormat::Edgelist => {
                    println!("{} {}", g.order(), g.size());
                    for (u, v) in g.edges() {
                        println!("{u} {v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            files,
            filter: filter_expr,
            jobs,
            strict,
            format,
        } => {
            let opts = ScanOptions {
                filter: filter_expr.as_deref().map(filter::parse).transpose()?,
                jobs,
                strict,
            };
            let stdout = io::stdout();
            let mut out = io::BufWriter::new(stdout.lock());
            let mut diag = io::stderr();
            let mut total_malformed = 0usize;
            let mut run_one = |reader: Box<dyn BufRead + Send>| -> anyhow::Result<()> {
                match format {
                    ScanFormat::Jsonl => {
                        let outcome = scan_stream(reader, &mut out, &mut diag, &opts)?;
                        total_malformed += outcome.malformed;
                    }
                    ScanFormat::Table => {
                        let mut buf = Vec::new();
                        let outcome = scan_stream(reader, &mut buf, &mut diag, &opts)?;
                        total_malformed += outcome.malformed;
                        print_table(&buf, &mut out)?;
                    }
                }
                Ok(())
            };
            if files.is_empty() {
                run_one(Box::new(BufReader::new(io::stdin())))?;
            } else {
                for path in &files {
                    run_one(Box::new(BufReader::new(File::open(path)?)))?;
                }
            }
            out.flush()?;
            if strict && total_malformed > 0 {
                return Ok(ExitCode::from(EXIT_MALFORMED));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let mut all_ok = true;
            for check in verify::verify_suite() {
                let status = if check.passed { "PASS" } else { "FAIL" };
                all_ok &= check.passed;
                println!("{status} {}: {}", check.name, check.detail);
            }
            println!(
                "verify: {}",
                if all_ok { "all statements hold" } else { "FAILURES PRESENT" }
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_table(jsonl: &[u8], out: &mut dyn Write) -> anyhow::Result<()> {
    writeln!(
        out,
        "{:>6} {:>5} {:>5} {:>4} {:>3} {:>3} {:>3} {:>5} {:>7} {:>9}  graph6",
        "index", "order", "size", "conn", "bip", "db", "sdb", "pcube", "cutdist", "candidate"
    )?;
    for line in jsonl.split(|&b| b == b'\n').filter(|l| !l.is_empty()) {
        let r: ScanReport = serde_json::from_slice(line)?;
        let yn = |b: bool| if b { "y" } else { "n" };
        writeln!(
            out,
            "{:>6} {:>5} {:>5} {:>4} {:>3} {:>3} {:>3} {:>5} {:>7} {:>9}  {}",
            r.record_index,
            r.order,
            r.size,
            r.flags.vertex_connectivity,
            yn(r.flags.bipartite),
            yn(r.flags.distance_balanced),
            yn(r.flags.strongly_db),
            yn(r.flags.partial_cube),
            r.cut_distance.map_or("-".to_string(), |d| d.to_string()),
            yn(r.candidate),
            r.graph6,
        )?;
    }
    Ok(())
}

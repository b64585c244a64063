//! Command-line front end: classify triangle-free graphs, build witness
//! tournaments, run the exhaustive verification suite, and compute censuses.

mod formats;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use compgraph::enumerate::{census, Filter, Prune, MAX_UNIVERSE_EDGES};
use compgraph::error::ClassifyError;
use compgraph::families::{self, match_components, pattern_name, Witness};
use compgraph::verifier::{describe_form, VerificationReport};
use compgraph::{CheckRegistry, Graph, OrientationUniverse, PartiteShape, WitnessId};

use formats::GraphInput;

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "compgraph",
    version,
    about = "Competition graphs of multipartite tournaments: classification, witnesses, \
             exhaustive verification, and censuses",
    after_help = "Exit codes: 0 success, 1 parse/usage error, 2 domain rejection \
                  (not triangle-free / not realizable), 3 verification failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the report to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Graph6,
    Digraph6,
    Edgelist,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decide for which k the input is the competition graph of a k-partite
    /// tournament
    Classify {
        /// Input path or '-' for standard input (graph6 or edge-list text)
        input: String,
        /// Embed the witness tournaments (digraph6 and DOT) in the report
        #[arg(long)]
        witness: bool,
    },
    /// Build a witness tournament by family id (D1..D27, REG5) or realize a
    /// graph for a given k
    Witness {
        /// Family id, e.g. D14 or REG5
        id: Option<String>,
        /// Realize this graph (path or '-') instead of a fixed family
        #[arg(long, conflicts_with = "id")]
        graph: Option<String>,
        /// Number of partite sets when realizing a graph
        #[arg(long, requires = "graph")]
        k: Option<usize>,
        /// Parameter for the parameterized families (isolated-vertex count)
        #[arg(long)]
        param: Option<usize>,
    },
    /// Run exhaustive verification checks
    Verify {
        /// Check id; see --list
        check: Option<String>,
        /// Run every registered check
        #[arg(long, conflicts_with = "check")]
        all: bool,
        /// List the registered check ids
        #[arg(long, conflicts_with_all = ["check", "all"])]
        list: bool,
        /// Worker threads (defaults to available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Census of competition graphs over all orientations of a complete
    /// multipartite graph
    Census {
        /// Partite set sizes, e.g. 2,2,1
        #[arg(long)]
        shape: String,
        /// all | triangle-free | triangle-free-connected | triangle-free-disconnected
        #[arg(long, default_value = "all")]
        filter: String,
        /// Worker threads (defaults to available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Convert a graph between the supported formats
    Convert {
        /// Input path or '-' for standard input
        input: String,
        /// Output format
        #[arg(long, value_enum)]
        to: Target,
    },
}

struct Failure {
    exit: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { exit: EXIT_USAGE, message: message.into() }
}

fn domain(message: impl Into<String>) -> Failure {
    Failure { exit: EXIT_DOMAIN, message: message.into() }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.exit)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify { input, witness } => cmd_classify(&input, witness, cli.format, &cli.output),
        Command::Witness { id, graph, k, param } => {
            cmd_witness(id.as_deref(), graph.as_deref(), k, param, cli.format, &cli.output)
        }
        Command::Verify { check, all, list, jobs } => {
            cmd_verify(check.as_deref(), all, list, jobs, cli.format, &cli.output)
        }
        Command::Census { shape, filter, jobs } => {
            cmd_census(&shape, &filter, jobs, cli.format, &cli.output)
        }
        Command::Convert { input, to } => cmd_convert(&input, to, &cli.output),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }
}

fn emit(text: String, output: &Option<PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_doc(doc: &Map<String, Value>, format: Format, output: &Option<PathBuf>) -> Result<(), Failure> {
    let text = match format {
        Format::Machine => report::render_machine(doc),
        Format::Human => report::render_human(doc),
    };
    emit(text, output)
}

fn load_graph(path: &str) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    match formats::parse_input(&text).map_err(|e| usage(e.to_string()))? {
        GraphInput::Undirected(g) => Ok(g),
        GraphInput::Directed(_) => Err(usage("expected an undirected graph input")),
    }
}

fn init_pool(jobs: Option<usize>) {
    if let Some(n) = jobs {
        // Ignore failure: the global pool can only be initialized once.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn describe_graph(g: &Graph) -> String {
    match match_components(g) {
        Some((comps, iso)) => pattern_name(&comps, iso),
        None => format!("unrecognized(order {})", g.order()),
    }
}

fn witness_value(w: &Witness, embed: bool) -> Value {
    let mut v = Map::new();
    v.insert("family".into(), json!(w.label));
    v.insert("shape".into(), json!(w.shape().sizes()));
    v.insert("digraph6".into(), json!(formats::digraph6(&w.digraph)));
    if embed {
        v.insert("dot".into(), json!(formats::dot_digraph(&w.digraph, Some(&w.partition))));
        let c = w.digraph.competition_graph();
        v.insert(
            "competition".into(),
            json!({
                "graph6": formats::graph6(&c),
                "pattern": describe_graph(&c),
            }),
        );
    }
    Value::Object(v)
}

fn classify_failure(e: ClassifyError) -> Failure {
    match e {
        ClassifyError::NotTriangleFree => domain("input graph contains a triangle"),
        ClassifyError::OrderTooSmall(n) => {
            domain(format!("no k-partite tournament exists on {n} vertex(es)"))
        }
        other => domain(other.to_string()),
    }
}

fn cmd_classify(
    input: &str,
    embed_witness: bool,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, Failure> {
    let g = load_graph(input)?;
    let report = compgraph::classify(&g).map_err(classify_failure)?;
    let mut doc = report::document("classify");
    doc.insert("input".into(), json!({
        "graph6": formats::graph6(&g),
        "order": report.order,
        "edges": g.edge_count(),
        "pattern": describe_graph(&g),
    }));
    doc.insert(
        "input_canonical".into(),
        json!(formats::graph6(&report.input_canonical.to_graph().expect("graph form"))),
    );
    doc.insert("triangle_free".into(), json!(report.triangle_free));
    doc.insert("connected".into(), json!(report.connected));
    doc.insert("member_k".into(), json!(report.member_ks()));
    let mut verdicts = Map::new();
    for (k, v) in &report.verdicts {
        let mut entry = Map::new();
        entry.insert("member".into(), json!(v.member));
        if let Some(family) = &v.family {
            entry.insert("family".into(), json!(family));
        }
        if let Some(w) = &v.witness {
            entry.insert("witness".into(), witness_value(w, embed_witness));
        }
        verdicts.insert(k.to_string(), Value::Object(entry));
    }
    doc.insert("verdicts".into(), Value::Object(verdicts));
    emit_doc(&doc, format, output)?;
    Ok(0)
}

fn cmd_witness(
    id: Option<&str>,
    graph: Option<&str>,
    k: Option<usize>,
    param: Option<usize>,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, Failure> {
    let witness = match (id, graph) {
        (Some(id), None) => {
            let id: WitnessId = id.parse().map_err(|e: compgraph::FamilyError| usage(e.to_string()))?;
            families::witness(id, param).map_err(|e| usage(e.to_string()))?
        }
        (None, Some(path)) => {
            let g = load_graph(path)?;
            let k = k.ok_or_else(|| usage("--graph requires --k"))?;
            let verdict = compgraph::member(&g, k).map_err(classify_failure)?;
            match verdict.witness {
                Some(w) => w,
                None => {
                    return Err(domain(format!(
                        "{} is not the competition graph of any {k}-partite tournament",
                        describe_graph(&g)
                    )))
                }
            }
        }
        _ => return Err(usage("provide a family id (D1..D27, REG5) or --graph with --k")),
    };
    let mut doc = report::document("witness");
    doc.insert("witness".into(), witness_value(&witness, true));
    doc.insert("target".into(), json!(pattern_name(&witness.target.0, witness.target.1)));
    emit_doc(&doc, format, output)?;
    Ok(0)
}

fn report_value(r: &VerificationReport) -> Value {
    let census_rows: Option<Vec<Value>> = r.census.as_ref().map(|c| {
        c.counts()
            .iter()
            .map(|(form, count)| {
                json!({
                    "canonical": form.to_graph().map(|g| formats::graph6(&g)),
                    "description": describe_form(form),
                    "count": count,
                })
            })
            .collect()
    });
    let mut v = Map::new();
    v.insert("check_id".into(), json!(r.check_id));
    v.insert("summary".into(), json!(r.summary));
    v.insert("universe".into(), json!(r.universe));
    v.insert("universe_size".into(), json!(r.universe_size));
    v.insert("passed".into(), json!(r.passed));
    v.insert("details".into(), json!(r.details));
    v.insert(
        "counterexamples".into(),
        json!(r.counterexamples.iter().map(formats::digraph6).collect::<Vec<_>>()),
    );
    if let Some(rows) = census_rows {
        v.insert("census".into(), json!(rows));
    }
    Value::Object(v)
}

fn cmd_verify(
    check: Option<&str>,
    all: bool,
    list: bool,
    jobs: Option<usize>,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, Failure> {
    init_pool(jobs);
    let registry = CheckRegistry::standard();
    if list {
        let mut text = String::new();
        for id in registry.ids() {
            text.push_str(&format!("{id}: {}\n", registry.summary_of(id).unwrap_or("")));
        }
        emit(text, output)?;
        return Ok(0);
    }
    let reports = if all {
        registry.run_all(true)
    } else {
        let id = check.ok_or_else(|| usage("provide a check id or --all (see --list)"))?;
        vec![registry.run(id).map_err(|e| usage(e.to_string()))?]
    };
    let all_passed = reports.iter().all(|r| r.passed);
    match format {
        Format::Human => {
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!(
                    "{} {} (universe {}, {:.1?})\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.check_id,
                    r.universe_size,
                    r.elapsed
                ));
                for d in &r.details {
                    text.push_str(&format!("    {d}\n"));
                }
                for c in &r.counterexamples {
                    text.push_str(&format!("    counterexample: {}\n", formats::digraph6(c)));
                }
            }
            text.push_str(&format!(
                "{} of {} checks passed\n",
                reports.iter().filter(|r| r.passed).count(),
                reports.len()
            ));
            emit(text, output)?;
        }
        Format::Machine => {
            let mut doc = report::document("verify");
            doc.insert("all_passed".into(), json!(all_passed));
            doc.insert("results".into(), json!(reports.iter().map(report_value).collect::<Vec<_>>()));
            emit_doc(&doc, Format::Machine, output)?;
        }
    }
    Ok(if all_passed { 0 } else { EXIT_VERIFY })
}

fn cmd_census(
    shape_arg: &str,
    filter_arg: &str,
    jobs: Option<usize>,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<u8, Failure> {
    init_pool(jobs);
    let sizes: Vec<usize> = shape_arg
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("bad shape `{shape_arg}`; expected e.g. 2,2,1")))?;
    let shape = PartiteShape::new(sizes).map_err(|e| usage(e.to_string()))?;
    let filter = Filter::from_name(filter_arg)
        .ok_or_else(|| usage(format!("unknown filter `{filter_arg}`")))?;
    let universe = OrientationUniverse::new(&shape);
    if universe.edge_count() > MAX_UNIVERSE_EDGES {
        return Err(usage(format!(
            "universe too large: {} edges exceeds the 2^{MAX_UNIVERSE_EDGES} limit",
            universe.edge_count()
        )));
    }
    let prune = if filter.implies_triangle_free() { Prune::IndegreeLe2 } else { Prune::None };
    let result = census(&universe, filter, prune).map_err(|e| usage(e.to_string()))?;
    let mut doc = report::document("census");
    doc.insert("shape".into(), json!(shape.sizes()));
    doc.insert("filter".into(), json!(filter.name()));
    doc.insert("universe_size".into(), json!(result.universe_size()));
    doc.insert("matched".into(), json!(result.total_matched()));
    let rows: Vec<Value> = result
        .counts()
        .iter()
        .map(|(form, count)| {
            json!({
                "canonical": form.to_graph().map(|g| formats::graph6(&g)),
                "description": describe_form(form),
                "count": count,
            })
        })
        .collect();
    doc.insert("rows".into(), json!(rows));
    match format {
        Format::Human => {
            let mut text = format!(
                "census of K{shape} ({} orientations), filter {}: {} matched, {} classes\n",
                result.universe_size(),
                filter.name(),
                result.total_matched(),
                result.counts().len()
            );
            for (form, count) in result.counts() {
                let g6 = form.to_graph().map(|g| formats::graph6(&g)).unwrap_or_default();
                text.push_str(&format!("  {:<24} {:>8}  {}\n", describe_form(form), count, g6));
            }
            emit(text, output)?;
        }
        Format::Machine => emit_doc(&doc, Format::Machine, output)?,
    }
    Ok(0)
}

fn cmd_convert(input: &str, to: Target, output: &Option<PathBuf>) -> Result<u8, Failure> {
    let text = read_input(input)?;
    let parsed = formats::parse_input(&text).map_err(|e| usage(e.to_string()))?;
    let rendered = match (&parsed, to) {
        (GraphInput::Undirected(g), Target::Graph6) => formats::graph6(g) + "\n",
        (GraphInput::Undirected(g), Target::Edgelist) => formats::edge_list_graph(g),
        (GraphInput::Undirected(g), Target::Dot) => formats::dot_graph(g),
        (GraphInput::Directed(d), Target::Digraph6) => formats::digraph6(d) + "\n",
        (GraphInput::Directed(d), Target::Edgelist) => formats::edge_list_digraph(d),
        (GraphInput::Directed(d), Target::Dot) => formats::dot_digraph(d, None),
        (GraphInput::Undirected(_), Target::Digraph6) => {
            return Err(usage("cannot encode an undirected graph as digraph6"))
        }
        (GraphInput::Directed(_), Target::Graph6) => {
            return Err(usage("cannot encode a digraph as graph6"))
        }
    };
    emit(rendered, output)?;
    Ok(0)
}


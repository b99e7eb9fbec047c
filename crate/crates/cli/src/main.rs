//! `crt` — analyze chordal graphs: chordality checks, clique catalogs,
//! clique graphs and reduced clique graphs, clique trees via
//! maximum-weight spanning trees, structural verification suites,
//! instance generators, and induced-cycle search.
//!
//! Exit codes: 0 success/pass, 1 domain-negative (not chordal, check
//! failed, nothing found), 2 usage error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chordal_core::{
    build_clique_graph, graphs_isomorphic, induced_cycles, is_chordal, is_cycle_graph,
    max_weight_spanning_tree, maximal_cliques, reduced_subgraph, search_reduced_cycle,
    verify_theorem2_instance, verify_trichotomy, CliqueGraph, CliqueTree, CycleSearch,
    EnumerationBudget, Error, GeneratorSpec, Graph, VertexId, WeightingPolicy,
};

#[derive(Parser)]
#[command(name = "crt", version, about = "clique graphs and clique trees of chordal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Auto,
    Edgelist,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Theorem2,
    NoC5,
    Cycles,
    Trichotomy,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Fig2,
    #[value(alias = "wheel_host")]
    WheelHost,
    #[value(alias = "apex_path_join")]
    ApexPathJoin,
    #[value(alias = "join_product")]
    JoinProduct,
    Path,
    Wheel,
    #[value(alias = "random_chordal")]
    RandomChordal,
    #[value(alias = "exhaustive_chordal")]
    ExhaustiveChordal,
}

#[derive(Args)]
struct InputArg {
    /// Graph file; `-` or omitted reads stdin.
    input: Option<String>,
    /// Input format; `auto` sniffs JSON by a leading brace.
    #[arg(long = "input-format", value_enum, default_value = "auto")]
    format: GraphFormat,
}

#[derive(Args)]
struct PolicyArg {
    /// `cardinality` or `vertex-weights:<file>` with `vertex weight` lines.
    #[arg(long, default_value = "cardinality")]
    policy: String,
}

#[derive(Subcommand)]
enum Command {
    /// Decide chordality; exit 0 when chordal, 1 when not.
    Check(InputArg),
    /// Print the maximal cliques of a chordal graph.
    Cliques(InputArg),
    /// Emit the clique graph with separating flags and weights.
    Cg {
        #[command(flatten)]
        input: InputArg,
        #[arg(long = "format", value_enum, default_value = "json")]
        out: OutFormat,
        #[command(flatten)]
        policy: PolicyArg,
    },
    /// Emit the reduced clique graph (separating pairs only).
    Crg {
        #[command(flatten)]
        input: InputArg,
        #[arg(long = "format", value_enum, default_value = "json")]
        out: OutFormat,
        #[command(flatten)]
        policy: PolicyArg,
    },
    /// Build a clique tree as a maximum-weight spanning tree.
    Tree {
        #[command(flatten)]
        input: InputArg,
        #[arg(long = "format", value_enum, default_value = "text")]
        out: TreeFormat,
        #[command(flatten)]
        policy: PolicyArg,
    },
    /// Run structural verification suites on one graph.
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[command(flatten)]
        policy: PolicyArg,
        /// Worker threads for the induced-cycle sweep.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write a generator-family graph.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Primary size parameter (vertices, spokes, or edges).
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Secondary size parameter for two-parameter families.
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 0.35)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// `edgelist` or `json` graph output.
        #[arg(long = "format", value_enum, default_value = "edgelist")]
        out: GenFormat,
    },
    /// Hunt the random corpus for a chordal graph whose reduced clique
    /// graph has an induced cycle of length `k`.
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 200_000)]
        attempts: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the witness graph here as an edge list.
        #[arg(long)]
        out: Option<String>,
    },
    /// Exact isomorphism test between two small graph files.
    Iso { first: String, second: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Edgelist,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::InvalidArgument(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn read_graph(arg: &InputArg) -> Result<Graph, Error> {
    let text = match arg.input.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            buf
        }
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
        }
    };
    match arg.format {
        GraphFormat::Auto => Graph::parse_auto(&text),
        GraphFormat::Edgelist => Graph::parse_edge_list(&text),
        GraphFormat::Json => Graph::parse_json(&text),
    }
}

fn parse_policy(spec: &str) -> Result<WeightingPolicy, Error> {
    if spec == "cardinality" {
        return Ok(WeightingPolicy::Cardinality);
    }
    let Some(path) = spec.strip_prefix("vertex-weights:") else {
        return Err(Error::InvalidArgument(format!(
            "unknown policy {spec:?}; use `cardinality` or `vertex-weights:<file>`"
        )));
    };
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    let mut weights: BTreeMap<VertexId, u64> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(v), Some(w), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse(format!(
                "{path}:{}: expected `vertex weight`",
                lineno + 1
            )));
        };
        let v: VertexId = v
            .parse()
            .map_err(|_| Error::Parse(format!("{path}:{}: bad vertex id", lineno + 1)))?;
        let w: u64 = w
            .parse()
            .map_err(|_| Error::Parse(format!("{path}:{}: bad weight", lineno + 1)))?;
        if w == 0 {
            return Err(Error::IllegitimateWeighting(format!(
                "{path}:{}: vertex weights must be strictly positive",
                lineno + 1
            )));
        }
        weights.insert(v, w);
    }
    Ok(WeightingPolicy::VertexWeights(weights))
}

fn budget_from_env() -> EnumerationBudget {
    match std::env::var("CRT_BUDGET").ok().and_then(|s| s.parse().ok()) {
        Some(max_trees) => EnumerationBudget::with_max_trees(max_trees),
        None => EnumerationBudget::default(),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Check(input) => {
            let g = read_graph(&input)?;
            if is_chordal(&g) {
                println!("chordal");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not chordal");
                Ok(ExitCode::from(1))
            }
        }
        Command::Cliques(input) => {
            let g = read_graph(&input)?;
            let catalog = maximal_cliques(&g)?;
            for c in catalog.cliques() {
                println!("{c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cg { input, out, policy } => {
            let cg = build_cg(&input, &policy)?;
            print_clique_graph(&cg, out, false);
            Ok(ExitCode::SUCCESS)
        }
        Command::Crg { input, out, policy } => {
            let cg = build_cg(&input, &policy)?;
            print_clique_graph(&cg, out, true);
            Ok(ExitCode::SUCCESS)
        }
        Command::Tree { input, out, policy } => {
            let cg = build_cg(&input, &policy)?;
            let tree = max_weight_spanning_tree(&cg, true)?;
            print_tree(&cg, &tree, out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            suite,
            policy,
            jobs,
        } => run_verify(&input, suite, &policy, jobs),
        Command::Gen {
            family,
            n,
            m,
            density,
            seed,
            out,
        } => {
            let spec = match family {
                Family::Fig2 => GeneratorSpec::Fig2,
                Family::WheelHost => GeneratorSpec::WheelHost { n },
                Family::ApexPathJoin => GeneratorSpec::ApexPathJoin { m, n },
                Family::JoinProduct => GeneratorSpec::JoinProduct { m, n },
                Family::Path => GeneratorSpec::Path { edges: n },
                Family::Wheel => GeneratorSpec::Wheel { spokes: n },
                Family::RandomChordal => GeneratorSpec::RandomChordal { n, density, seed },
                Family::ExhaustiveChordal => GeneratorSpec::ExhaustiveChordal { n },
            };
            let graphs = spec.build()?;
            for (i, g) in graphs.iter().enumerate() {
                match out {
                    GenFormat::Edgelist => {
                        if graphs.len() > 1 {
                            println!("# graph {i}");
                        }
                        print!("{}", g.to_edge_list());
                        if graphs.len() > 1 {
                            println!();
                        }
                    }
                    GenFormat::Json => println!("{}", g.to_json()),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search {
            k,
            attempts,
            seed,
            jobs,
            out,
        } => {
            let mut params = CycleSearch::new(k);
            params.attempts = attempts;
            params.seed = seed;
            params.jobs = jobs;
            match search_reduced_cycle(&params)? {
                Some(w) => {
                    eprintln!(
                        "found at attempt {} (seed {}): {} vertices, cycle {:?}",
                        w.attempt,
                        w.seed,
                        w.graph.vertex_count(),
                        w.cycle.nodes()
                    );
                    let text = w.graph.to_edge_list();
                    match out {
                        Some(path) => fs::write(&path, text)
                            .map_err(|e| Error::Parse(format!("{path}: {e}")))?,
                        None => print!("{text}"),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprintln!("no witness within {attempts} attempts");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Iso { first, second } => {
            let g1 = read_graph(&InputArg {
                input: Some(first),
                format: GraphFormat::Auto,
            })?;
            let g2 = read_graph(&InputArg {
                input: Some(second),
                format: GraphFormat::Auto,
            })?;
            if graphs_isomorphic(&g1, &g2)? {
                println!("isomorphic");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not isomorphic");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn build_cg(input: &InputArg, policy: &PolicyArg) -> Result<CliqueGraph, Error> {
    let g = read_graph(input)?;
    let policy = parse_policy(&policy.policy)?;
    build_clique_graph(&g, policy)
}

fn print_clique_graph(cg: &CliqueGraph, out: OutFormat, reduced_only: bool) {
    match out {
        OutFormat::Json => println!("{}", cg.to_json(reduced_only)),
        OutFormat::Dot => print!("{}", cg.to_dot(reduced_only)),
    }
}

fn print_tree(cg: &CliqueGraph, tree: &CliqueTree, out: TreeFormat) {
    match out {
        TreeFormat::Text => {
            println!("clique tree, total weight {}", tree.total_weight());
            // Indented DFS from clique 0 over the tree edges.
            let pairs = tree.edge_pairs(cg);
            let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &(a, b) in &pairs {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
            let mut stack = vec![(0usize, 0usize, usize::MAX)];
            while let Some((node, depth, parent)) = stack.pop() {
                let label = cg.catalog().clique(node);
                let indent = "  ".repeat(depth + 1);
                match cg.edge_between(node, parent) {
                    Some(e) => println!(
                        "{indent}{label}  [via {}, weight {}]",
                        e.intersection, e.weight
                    ),
                    None => println!("{indent}{label}"),
                }
                for &next in adj.get(&node).into_iter().flatten().rev() {
                    if next != parent {
                        stack.push((next, depth + 1, node));
                    }
                }
            }
        }
        TreeFormat::Json => {
            let pairs = tree.edge_pairs(cg);
            let repr = serde_json::json!({
                "cliques": cg.catalog().cliques(),
                "tree_edges": pairs,
                "total_weight": tree.total_weight(),
            });
            println!("{}", serde_json::to_string_pretty(&repr).unwrap());
        }
        TreeFormat::Dot => {
            let mut outp = String::from("graph cliquetree {\n");
            for (i, c) in cg.catalog().cliques().iter().enumerate() {
                outp.push_str(&format!("  k{i} [label=\"{c}\"];\n"));
            }
            for &i in tree.edge_indices() {
                let e = cg.edge(i);
                outp.push_str(&format!("  k{} -- k{} [label=\"{}\"];\n", e.a, e.b, e.weight));
            }
            outp.push_str("}\n");
            print!("{outp}");
        }
    }
}

fn run_verify(
    input: &InputArg,
    suite: Suite,
    policy: &PolicyArg,
    jobs: usize,
) -> Result<ExitCode, Error> {
    let g = read_graph(input)?;
    let policy = parse_policy(&policy.policy)?;
    let budget = budget_from_env();
    let mut checks: Vec<(String, bool, Option<String>)> = Vec::new();

    if matches!(suite, Suite::Theorem2 | Suite::All) {
        let report = verify_theorem2_instance(&g, policy.clone(), &budget)?;
        for clause in &report.clauses {
            checks.push((
                format!("theorem2/{}", clause.name),
                clause.pass,
                clause.witness.clone(),
            ));
        }
    }
    if matches!(suite, Suite::NoC5 | Suite::Cycles | Suite::Trichotomy | Suite::All) {
        let cg = build_clique_graph(&g, policy)?;
        let crg = reduced_subgraph(&cg).as_graph();
        if matches!(suite, Suite::NoC5 | Suite::All) {
            let cycles = induced_cycles(&crg, 5)?;
            checks.push((
                "no-c5/reduced_clique_graph_has_no_induced_five_cycle".into(),
                cycles.is_empty(),
                cycles.first().map(|c| format!("{:?}", c.nodes())),
            ));
        }
        if matches!(suite, Suite::Cycles | Suite::All) {
            let full = cg.as_graph();
            let bad_full = is_cycle_graph(&full).filter(|&n| n >= 4);
            checks.push((
                "cycles/clique_graph_is_not_a_long_cycle".into(),
                bad_full.is_none(),
                bad_full.map(|n| format!("C(G) is a {n}-cycle")),
            ));
            let bad_red = is_cycle_graph(&crg).filter(|&n| n >= 4);
            checks.push((
                "cycles/reduced_clique_graph_is_not_a_long_cycle".into(),
                bad_red.is_none(),
                bad_red.map(|n| format!("C_R(G) is a {n}-cycle")),
            ));
        }
        if matches!(suite, Suite::Trichotomy | Suite::All) {
            let mut cycles = Vec::new();
            for k in 4..=cg.node_count() {
                cycles.extend(induced_cycles(&crg, k)?);
            }
            // Shard the verdicts over workers; the merge is by cycle
            // order, so job count never changes the report.
            let jobs = jobs.max(1).min(cycles.len().max(1));
            let outcomes: Vec<Option<String>> = std::thread::scope(|scope| {
                let chunk = cycles.len().div_ceil(jobs);
                let cg = &cg;
                let handles: Vec<_> = cycles
                    .chunks(chunk.max(1))
                    .map(|slice| {
                        scope.spawn(move || {
                            slice
                                .iter()
                                .map(|cycle| {
                                    verify_trichotomy(cg, cycle)
                                        .err()
                                        .map(|e| format!("{:?}: {e}", cycle.nodes()))
                                })
                                .collect::<Vec<_>>()
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("verify worker panicked"))
                    .collect()
            });
            let violations: Vec<String> = outcomes.into_iter().flatten().collect();
            checks.push((
                format!("trichotomy/all_{}_induced_cycles_classified", cycles.len()),
                violations.is_empty(),
                violations.first().cloned(),
            ));
        }
    }

    let pass = checks.iter().all(|(_, ok, _)| *ok);
    let report = serde_json::json!({
        "checks": checks
            .iter()
            .map(|(name, ok, witness)| {
                serde_json::json!({ "name": name, "pass": ok, "witness": witness })
            })
            .collect::<Vec<_>>(),
        "pass": pass,
    });
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use zerosum::decompositions::{hamilton_cycle_decomposition, hamilton_path_decomposition, PartKind};
use zerosum::extremal::{make_extremal_graph, verify_extremal, ConstructionId};
use zerosum::families::FamilyKind;
use zerosum::finders::{
    check_zero_sum_matching, find_zero_sum_diam3_tree, find_zero_sum_path_leq4,
    find_zero_sum_spanning_path, find_zero_sum_spanning_tree, FindKind, FindReport,
};
use zerosum::io::{parse_edge_list, write_edge_list};
use zerosum::oracle::{exhaustive_theorem_check, sampled_theorem_check, EnumerationBudget, TheoremId, TheoremReport};
use zerosum::thresholds::{self, master_verdict, MasterVerdict};
use zerosum::{ColoredGraph, Error, HostClass};

/// Masks per progress line in `verify`.
const SHARD_CHUNK: u64 = 1 << 18;

#[derive(Parser, Debug)]
#[command(name = "zerosum", version, about = "Zero-sum spanning subgraphs of +-1 edge colourings")]
struct Cli {
    /// Print JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Oracle budget for enumeration-backed commands.
    #[arg(long, global = true, env = "ZEROSUM_BUDGET", value_enum, default_value_t = BudgetChoice::Default)]
    budget: BudgetChoice,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BudgetChoice {
    Default,
    Extended,
}

impl BudgetChoice {
    fn budget(self) -> EnumerationBudget {
        match self {
            BudgetChoice::Default => EnumerationBudget::default(),
            BudgetChoice::Extended => EnumerationBudget::extended(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FindTarget {
    Tree,
    Path,
    Diam3,
    Connect,
    Matching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PartChoice {
    Paths,
    Cycles,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search a coloured graph for a zero-sum subgraph.
    Find {
        #[arg(value_enum)]
        target: FindTarget,
        /// Edge-list file, or `-` for standard input.
        input: String,
        /// Host class for `tree`: complete, triangle-free, <d>-tree or planar.
        #[arg(long, default_value = "complete")]
        class: String,
        /// Endpoints for `connect`.
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        pair: Option<Vec<usize>>,
    },
    /// Evaluate a threshold formula, or the sufficient conditions on a graph.
    ///
    /// Families and their numbers: path|tree|diam3|connect <n>;
    /// linear-forest|forest|star <n> <k>; triangle-free <k>; degenerate <k> <d>;
    /// planar <k>. With --graph, family is tree|path|diam3 and no numbers are read.
    Thresholds {
        family: String,
        values: Vec<usize>,
        /// Report the sufficient conditions for this edge-list file instead.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Emit a sharpness or Turán construction as an edge list.
    Extremal {
        construction: String,
        params: Vec<String>,
        /// Also confirm with the oracle; the verdict goes to stderr.
        #[arg(long)]
        verify: bool,
    },
    /// List a Walecki decomposition of K_n.
    Decompose {
        #[arg(value_enum)]
        parts: PartChoice,
        n: usize,
    },
    /// Check a theorem over every colouring of its host, or a random sample.
    Verify {
        /// tree, connected, diam3, path, path-decomposition, bipartite-tree, <d>-tree or planar-tree.
        theorem: String,
        n: usize,
        /// Half-open colouring mask range `a:b`.
        #[arg(long, conflicts_with = "sample")]
        shard: Option<String>,
        /// Check this many random colourings instead of all of them.
        #[arg(long, requires = "seed")]
        sample: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Outcome of a command before it is mapped to an exit code.
enum Outcome {
    Success,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("zerosum: {e}");
            let code = match e {
                Error::Budget { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let budget = cli.budget.budget();
    match &cli.command {
        Command::Find { target, input, class, pair } => {
            let g = read_graph(input)?;
            let report = find(&g, *target, class, pair.as_deref())?;
            if cli.json {
                emit_json(&report);
            } else {
                print_report(&report);
            }
            Ok(if report.found { Outcome::Success } else { Outcome::Negative })
        }
        Command::Thresholds { family, values, graph } => {
            match graph {
                Some(path) => {
                    let g = read_graph(path)?;
                    let kind = family_kind(family)?;
                    let verdict = master_verdict(&g, kind)?;
                    if cli.json {
                        emit_json(&verdict);
                    } else {
                        print_verdict(&verdict);
                    }
                }
                None => {
                    let value = threshold(family, values)?;
                    if cli.json {
                        emit_json(&serde_json::json!({ "family": family, "args": values, "value": value }));
                    } else {
                        println!("{value}");
                    }
                }
            }
            Ok(Outcome::Success)
        }
        Command::Extremal { construction, params, verify } => {
            let args: Vec<&str> = params.iter().map(String::as_str).collect();
            let id = ConstructionId::from_args(construction, &args)?;
            let g = make_extremal_graph(id)?;
            let mut comments = vec![format!("construction: {id}"), id.describe()];
            if let Some((x, y)) = id.designated_pair() {
                comments.push(format!("pair: {x} {y}"));
            }
            print!("{}", write_edge_list(&g, &comments));
            if *verify {
                let ok = verify_extremal(id, &budget)?;
                eprintln!("verified: {ok}");
                if !ok {
                    return Ok(Outcome::Negative);
                }
            }
            Ok(Outcome::Success)
        }
        Command::Decompose { parts, n } => {
            let d = match parts {
                PartChoice::Paths => hamilton_path_decomposition(*n)?,
                PartChoice::Cycles => hamilton_cycle_decomposition(*n)?,
            };
            if cli.json {
                emit_json(&d);
            } else {
                let what = match d.kind {
                    PartKind::HamiltonianPath => "Hamiltonian paths",
                    PartKind::HamiltonianCycle => "Hamiltonian cycles",
                };
                println!("# K_{} into {} {what}", d.n, d.parts.len());
                for part in &d.parts {
                    let seq: Vec<String> = part.iter().map(usize::to_string).collect();
                    println!("{}", seq.join(" "));
                }
            }
            Ok(Outcome::Success)
        }
        Command::Verify { theorem, n, shard, sample, seed } => {
            let theorem: TheoremId = theorem.parse()?;
            let report = match sample {
                Some(samples) => {
                    // clap enforces --seed alongside --sample
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or_default());
                    sampled_theorem_check(theorem, *n, *samples, &mut rng, &budget)?
                }
                None => {
                    let range = match shard {
                        Some(s) => parse_shard(s)?,
                        None => full_range(theorem, *n)?,
                    };
                    verify_range(theorem, *n, range, &budget)?
                }
            };
            for ce in &report.examples {
                emit_json(&serde_json::json!({ "counterexample": ce }));
            }
            emit_json(&serde_json::json!({ "report": report, "passed": report.passed() }));
            Ok(if report.passed() { Outcome::Success } else { Outcome::Negative })
        }
    }
}

fn read_graph(input: &str) -> Result<ColoredGraph, Error> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Input(format!("reading {input}: {e}")))?
    };
    parse_edge_list(&text)
}

fn parse_class(s: &str) -> Result<HostClass, Error> {
    Ok(match s {
        "complete" => HostClass::Complete,
        "triangle-free" => HostClass::TriangleFree,
        "planar" => HostClass::MaximalPlanarStacked,
        other => match other.strip_suffix("-tree").and_then(|d| d.parse().ok()) {
            Some(d) => HostClass::DTree(d),
            None => {
                return Err(Error::Input(format!(
                    "unknown host class `{other}`; expected complete, triangle-free, <d>-tree or planar"
                )))
            }
        },
    })
}

fn find(g: &ColoredGraph, target: FindTarget, class: &str, pair: Option<&[usize]>) -> Result<FindReport, Error> {
    let class = parse_class(class)?;
    if class != HostClass::Complete && target != FindTarget::Tree {
        return Err(Error::Input("--class only applies to `find tree`".into()));
    }
    Ok(match target {
        FindTarget::Tree => find_zero_sum_spanning_tree(g, class),
        FindTarget::Path => find_zero_sum_spanning_path(g),
        FindTarget::Diam3 => find_zero_sum_diam3_tree(g),
        FindTarget::Connect => {
            let [x, y] = pair
                .and_then(|p| <[usize; 2]>::try_from(p).ok())
                .ok_or_else(|| Error::Input("`find connect` needs --pair X Y".into()))?;
            find_zero_sum_path_leq4(g, x, y)?
        }
        FindTarget::Matching => check_zero_sum_matching(g)?,
    })
}

fn family_kind(name: &str) -> Result<FamilyKind, Error> {
    match name {
        "tree" => Ok(FamilyKind::SpanningTrees),
        "path" => Ok(FamilyKind::HamiltonianPaths),
        "diam3" => Ok(FamilyKind::Diam3Trees),
        other => Err(Error::Input(format!("--graph needs family tree|path|diam3, got `{other}`"))),
    }
}

fn threshold(family: &str, values: &[usize]) -> Result<usize, Error> {
    let arity = match family {
        "path" | "tree" | "diam3" | "connect" | "triangle-free" | "planar" => 1,
        "linear-forest" | "forest" | "star" | "degenerate" => 2,
        other => {
            return Err(Error::Input(format!(
                "unknown family `{other}`; expected path, tree, diam3, connect, linear-forest, forest, star, triangle-free, degenerate or planar"
            )))
        }
    };
    if values.len() != arity {
        return Err(Error::Input(format!("`{family}` takes {arity} number(s), got {}", values.len())));
    }
    let a = values[0];
    let b = values.get(1).copied().unwrap_or(0);
    match family {
        "path" => thresholds::spanning_path_threshold(a),
        "tree" => Ok(thresholds::spanning_tree_threshold(a)),
        "diam3" => thresholds::diam3_threshold(a),
        "connect" => Ok(thresholds::connectivity_threshold(a)),
        "linear-forest" => thresholds::ex_linear_forest(a, b),
        "forest" => thresholds::ex_forest(a, b),
        "star" => thresholds::ex_star(a, b),
        "triangle-free" => thresholds::forest_bound_triangle_free(a),
        "degenerate" => thresholds::forest_bound_degenerate(a, b),
        _ => thresholds::forest_bound_planar(a),
    }
}

fn parse_shard(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Input(format!("shard `{s}` is not of the form a:b with a < b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a >= b {
        return Err(bad());
    }
    Ok((a, b))
}

fn full_range(theorem: TheoremId, n: usize) -> Result<(u64, u64), Error> {
    let m = theorem.host(n)?.edge_count();
    if m >= 64 {
        return Err(Error::Budget {
            what: "colourings",
            required: 1u128 << m.min(127),
            limit: u64::MAX as u128,
        });
    }
    Ok((0, 1u64 << m))
}

/// Runs the range in chunks, printing a JSON progress line after each.
fn verify_range(
    theorem: TheoremId,
    n: usize,
    (start, end): (u64, u64),
    budget: &EnumerationBudget,
) -> Result<TheoremReport, Error> {
    let m = theorem.host(n)?.edge_count();
    if m < 64 && end > 1u64 << m {
        return Err(Error::Input(format!("shard end {end} exceeds 2^{m}")));
    }
    let total = (end - start) as u128;
    if total > budget.max_colorings {
        return Err(Error::Budget { what: "colourings", required: total, limit: budget.max_colorings });
    }
    let mut merged: Option<TheoremReport> = None;
    let mut lo = start;
    while lo < end {
        let hi = end.min(lo.saturating_add(SHARD_CHUNK));
        let part = exhaustive_theorem_check(theorem, n, Some((lo, hi)), budget)?;
        merged = Some(match merged {
            None => part,
            Some(r) => r.merge(part)?,
        });
        let r = merged.as_ref().unwrap();
        if hi < end {
            emit_json(&serde_json::json!({
                "progress": { "done": hi - start, "total": end - start, "counterexamples": r.counterexamples }
            }));
        }
        lo = hi;
    }
    Ok(merged.expect("non-empty range"))
}

fn emit_json<T: Serialize>(value: &T) {
    let mut out = io::stdout().lock();
    let _ = serde_json::to_writer(&mut out, value);
    let _ = writeln!(out);
    let _ = out.flush();
}

fn print_report(r: &FindReport) {
    println!("found: {}", r.found);
    println!("kind: {}", kind_name(r.kind));
    if r.found {
        println!("weight: {}", r.weight);
        let edges: Vec<String> = r.edges.iter().map(|e| format!("{}-{}", e.u(), e.v())).collect();
        println!("edges: {}", edges.join(" "));
        println!("chain replacements: {}", r.chain_replacements);
    }
    println!("certificate: {}", r.certificate);
}

fn kind_name(k: FindKind) -> &'static str {
    match k {
        FindKind::Tree => "tree",
        FindKind::Path => "path",
        FindKind::Diam3 => "diam3",
        FindKind::Connect => "connect",
        FindKind::Matching => "matching",
    }
}

fn print_verdict(v: &MasterVerdict) {
    println!("family: {}  n = {}  member edges = {}", v.family, v.n, v.m);
    println!(
        "census: e(-1) = {}, e(+1) = {}, total weight = {}",
        v.census.e_minus, v.census.e_plus, v.census.total_weight
    );
    let c1 = &v.condition1;
    println!(
        "condition 1: min = {} > {}{} -> {}",
        c1.min_census,
        c1.bound,
        if c1.exact { "" } else { " (upper bound)" },
        c1.holds
    );
    for (label, cond) in [("condition 2", &v.condition2), ("condition 3", &v.condition3)] {
        match cond {
            Some(c) => println!(
                "{label}: |f| = {} < {}/{} -> {}",
                c.abs_weight, c.numerator, c.denominator, c.holds
            ),
            None => println!("{label}: unavailable"),
        }
    }
}

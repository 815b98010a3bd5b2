//! `peo`: perfect elimination orderings of symmetric matrices from the
//! command line.
//!
//! Exit codes: 0 positive answer, 1 negative answer with a certificate,
//! 2 usage, I/O or parse error, 3 internal inconsistency.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use peo_core::classes::{
    check_power_corollary, classify_orderings, duchet_power_check, is_chordal, level_chordality, OrderingClass,
};
use peo_core::forbidden::{
    default_max_len, find_self_contained_pair_bruteforce, find_self_contained_walk_bruteforce, WALK_SEARCH_CAP,
};
use peo_core::report::{yes_no, FlatMap};
use peo_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXIT_POSITIVE: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

const MAX_LEN_LIMIT: usize = 250;
const DEFAULT_SEED: u64 = 0;

#[derive(Parser, Debug)]
#[command(name = "peo", version, about = "Perfect elimination orderings of symmetric matrices")]
struct Cli {
    /// How to read the input file (default: graph for `power`, matrix
    /// otherwise). A graph `G` is read as the matrix `-D_G`.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Print `key=value` lines instead of human-readable text.
    #[arg(long, global = true)]
    machine: bool,
    /// Length cap for the brute-force walk searches (default 2n+2).
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Matrix,
    Graph,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a perfect elimination ordering, or a forbidden pair of walks.
    Order { input: PathBuf },
    /// Check a given order against one ordering class.
    Check {
        input: PathBuf,
        /// 1-based order, separated by spaces or commas.
        #[arg(long)]
        order: String,
        #[arg(long, value_enum, default_value_t = ClassArg::Peo)]
        class: ClassArg,
    },
    /// Report ultrametricity, level chordality, cycles and orderings.
    Classify { input: PathBuf },
    /// Check the equivalences between -D_G, G and its powers (graph input).
    Power {
        input: PathBuf,
        /// Highest power to test for chordality (at least 3; default max(n, 3)).
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Cross-check the fast algorithms against the oracles on random matrices.
    Selfcheck {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Peo,
    Robinson,
    Interval,
    Cocomparability,
}

impl From<ClassArg> for OrderingClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Peo => OrderingClass::Peo,
            ClassArg::Robinson => OrderingClass::Robinson,
            ClassArg::Interval => OrderingClass::Interval,
            ClassArg::Cocomparability => OrderingClass::Cocomparability,
        }
    }
}

/// A failed command: exit code plus message for stderr.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Internal(_)) { EXIT_INTERNAL } else { EXIT_USAGE };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn internal(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INTERNAL, msg.into())
}

type CmdResult = std::result::Result<u8, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path, format: Option<Format>) -> std::result::Result<SymmetricMatrix, Failure> {
    let text = read(path)?;
    Ok(match format.unwrap_or(Format::Matrix) {
        Format::Matrix => parse_matrix(&text)?,
        Format::Graph => parse_graph(&text)?.distance_matrix().negated(),
    })
}

fn load_graph(path: &Path, format: Option<Format>) -> std::result::Result<Graph, Failure> {
    if format == Some(Format::Matrix) {
        return Err(usage("power expects a graph"));
    }
    Ok(parse_graph(&read(path)?)?)
}

fn max_len(cli: &Cli, n: usize) -> std::result::Result<usize, Failure> {
    match cli.max_len {
        None => Ok(default_max_len(n).min(MAX_LEN_LIMIT)),
        Some(l) if (3..=MAX_LEN_LIMIT).contains(&l) => Ok(l),
        Some(l) => Err(usage(format!("--max-len must be between 3 and {MAX_LEN_LIMIT}, got {l}"))),
    }
}

/// Prints `map` either as `key=value` or as `key: value` lines.
fn emit(cli: &Cli, map: &FlatMap) {
    if cli.machine {
        print!("{map}");
    } else {
        for (k, v) in map.entries() {
            println!("{}: {v}", k.replace('_', " "));
        }
    }
}

fn cmd_order(cli: &Cli, input: &Path) -> CmdResult {
    let a = load_matrix(input, cli.format)?;
    let cert = extract_certificate(&a)?;
    cert.validate(&a)?;
    match &cert {
        Certificate::Ordering(pi) => {
            if cli.machine {
                let mut m = FlatMap::new();
                m.insert("peo", "yes");
                m.insert("order", pi);
                print!("{m}");
            } else {
                println!("{cert}");
            }
            Ok(EXIT_POSITIVE)
        }
        Certificate::Forbidden(w1, w2) => {
            if cli.machine {
                let mut m = FlatMap::new();
                m.insert("peo", "no");
                m.insert("w1", w1);
                m.insert("w2", w2);
                print!("{m}");
            } else {
                println!("NO-PEO");
                println!("{cert}");
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_check(cli: &Cli, input: &Path, order: &str, class: ClassArg) -> CmdResult {
    let a = load_matrix(input, cli.format)?;
    let pi: LinearOrder = order.parse()?;
    let class = OrderingClass::from(class);
    let verdict = class.check(&a, &pi)?;
    let mut m = FlatMap::new();
    m.insert("class", class);
    m.insert("order", &pi);
    let code = match verdict.violation() {
        None => {
            m.insert("result", "ok");
            EXIT_POSITIVE
        }
        Some(t) => {
            m.insert("result", "violation");
            m.insert("triple", t);
            EXIT_NEGATIVE
        }
    };
    if cli.machine {
        print!("{m}");
    } else {
        match verdict.violation() {
            None => println!("OK"),
            Some(t) => println!("VIOLATION: {t}"),
        }
    }
    Ok(code)
}

fn cmd_classify(cli: &Cli, input: &Path) -> CmdResult {
    let a = load_matrix(input, cli.format)?;
    let n = a.n();
    let len = max_len(cli, n)?;
    let report = classify_orderings(&a)?;
    if !report.is_consistent() {
        return Err(internal(format!("ordering classes are inconsistent: {report:?}")));
    }
    let mut m = FlatMap::new();
    m.insert("n", n);
    m.insert("ultrametric", yes_no(report.ultrametric));
    let levels = level_chordality(&a);
    m.insert("levels", levels.len());
    let chordal = levels.iter().map(|&b| yes_no(b)).collect::<Vec<_>>().join("/");
    m.insert("levels_chordal", if chordal.is_empty() { "none".to_string() } else { chordal });
    let cycle = find_weighted_chordless_cycle(&a);
    if let Some(c) = &cycle {
        if !is_weighted_chordless_cycle(&a, c)? {
            return Err(internal(format!("cycle {c} does not validate")));
        }
    }
    m.insert("weighted_chordless_cycle", cycle.as_ref().map_or("none".to_string(), |c| c.to_string()));
    m.insert("simplicial", find_simplicial(&a).map_or("none".to_string(), |v| (v + 1).to_string()));
    let cert = extract_certificate(&a)?;
    cert.validate(&a)?;
    if cert.is_ordering() != report.peo.is_some() {
        return Err(internal("extraction and greedy elimination disagree"));
    }
    m.insert("peo", yes_no(cert.is_ordering()));
    m.insert("certificate", &cert);
    if cert.is_ordering() && cycle.is_some() {
        return Err(internal("a matrix with a PEO has a weighted chordless cycle"));
    }
    for (name, found) in [
        ("robinson", &report.robinson),
        ("interval", &report.interval),
        ("cocomparability", &report.cocomparability),
    ] {
        let value = match found {
            _ if !report.searched => "skipped".to_string(),
            Some(pi) => pi.to_string(),
            None => "none".to_string(),
        };
        m.insert(name, value);
    }
    if n <= WALK_SEARCH_CAP {
        m.insert("max_len", len);
        let single = find_self_contained_walk_bruteforce(&a, len)?;
        m.insert("single_walk", single.as_ref().map_or("none".to_string(), |w| w.to_string()));
        let pair = find_self_contained_pair_bruteforce(&a, len)?;
        if pair.is_some() && cert.is_ordering() {
            return Err(internal("a matrix with a PEO has a self-contained pair"));
        }
        m.insert("pair", pair.map_or("none".to_string(), |(w1, w2)| format!("{w1}; {w2}")));
    } else {
        m.insert("single_walk", "skipped");
        m.insert("pair", "skipped");
    }
    emit(cli, &m);
    Ok(EXIT_POSITIVE)
}

fn cmd_power(cli: &Cli, input: &Path, kmax: Option<usize>) -> CmdResult {
    let g = load_graph(input, cli.format)?;
    let kmax = kmax.unwrap_or(g.n().max(3));
    let report = check_power_corollary(&g);
    let powers = duchet_power_check(&g, kmax)?;
    let mut m = FlatMap::new();
    m.insert("n", g.n());
    m.insert("connected", yes_no(g.is_connected()));
    m.insert("peo", yes_no(report.peo));
    m.insert("no_weighted_chordless_cycle", yes_no(report.no_weighted_chordless_cycle));
    m.insert("levels_chordal", yes_no(report.levels_chordal));
    m.insert("graph_and_square_chordal", yes_no(report.graph_and_square_chordal));
    m.insert("graph_chordal", yes_no(is_chordal(&g).holds()));
    m.insert("powers_chordal", powers.chordal.iter().map(|&b| yes_no(b)).collect::<Vec<_>>().join("/"));
    m.insert("equivalent", yes_no(report.agree()));
    m.insert(
        "power_violations",
        if powers.violations.is_empty() {
            "none".to_string()
        } else {
            powers.violations.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
        },
    );
    emit(cli, &m);
    if !report.agree() || !powers.is_consistent() {
        eprintln!("error: equivalent assertions disagree");
        return Ok(EXIT_INTERNAL);
    }
    Ok(EXIT_POSITIVE)
}

fn cmd_selfcheck(cli: &Cli, count: usize, n: usize) -> CmdResult {
    if !(2..=WALK_SEARCH_CAP).contains(&n) {
        return Err(usage(format!("--n must be between 2 and {WALK_SEARCH_CAP}")));
    }
    let len = max_len(cli, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut orderable = 0;
    for k in 0..count {
        let levels = rng.gen_range(2..=4);
        let a = SymmetricMatrix::from_fn(n, |_, _| matrix::int(rng.gen_range(0..levels)))?;
        let greedy = greedy_peo(&a).is_some();
        let oracle = !all_peos_bruteforce(&a)?.is_empty();
        let cert = extract_certificate(&a)?;
        cert.validate(&a)?;
        let pair = find_self_contained_pair_bruteforce(&a, len)?.is_some();
        if greedy != oracle || oracle != cert.is_ordering() || (oracle && pair) || (!oracle && len >= default_max_len(n) && !pair) {
            return Err(internal(format!("instance {k} disagrees:\n{}", a.to_text())));
        }
        orderable += oracle as usize;
    }
    let mut m = FlatMap::new();
    m.insert("seed", cli.seed);
    m.insert("instances", count);
    m.insert("orderable", orderable);
    m.insert("disagreements", 0);
    emit(cli, &m);
    Ok(EXIT_POSITIVE)
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Order { input } => cmd_order(cli, input),
        Command::Check { input, order, class } => cmd_check(cli, input, order, *class),
        Command::Classify { input } => cmd_classify(cli, input),
        Command::Power { input, kmax } => cmd_power(cli, input, *kmax),
        Command::Selfcheck { count, n } => cmd_selfcheck(cli, *count, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

//! Command-line front end. [`run`] is pure apart from reading graph files,
//! which keeps it testable without spawning processes.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bipoly::format_poly;
use crate::corpus::{random_multigraphs, simple_graphs_with_edge_limit};
use crate::engine::{
    count_bruteforce, count_subset_expansion, BruteForceBudget, ChiEngine, ColoringParams, EngineConfig,
    SubsetBudget,
};
use crate::error::{Error, Result};
use crate::multigraph::{parse_graph, serialize_graph, KeyMode, MultiGraph, DEFAULT_CANONICAL_LIMIT};
use crate::sequences::{
    a_seq, b_seq, check_sneaky, format_rational, format_reports, hankel_det_b, minimal_recurrence,
    verify_identity, IdentityId, SeqParams,
};

#[derive(Debug, Parser)]
#[command(name = "wildcolor", version, about = "Exact (k,l)-coloring polynomials and generalized Fibonacci identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print chi_G(x,y) for a graph file, or its value at (K, L).
    Chi {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["K", "L"])]
        eval: Option<Vec<u64>>,
        #[command(flatten)]
        memo: MemoArgs,
    },
    /// Count proper (k,l)-colorings with one of the counting oracles.
    Count {
        file: PathBuf,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'l')]
        l: u32,
        #[arg(long, value_enum, default_value_t = Oracle::Brute)]
        oracle: Oracle,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print a_1..a_N (path) or b_1..b_N (cycle).
    Seq {
        #[arg(value_enum)]
        family: SeqFamily,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'l')]
        l: u32,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Mine the minimal linear recurrence of a_n or b_n.
    Recurrence {
        #[arg(value_enum)]
        family: SeqFamily,
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'l')]
        l: u32,
        #[arg(long, default_value_t = 12)]
        terms: usize,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
    /// Run verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
enum Suite {
    /// Check every identity over its index grid.
    Identities {
        #[arg(short = 'l')]
        l: u32,
        /// Largest left-hand subscript.
        #[arg(long)]
        max: u64,
        /// Proper colors for the identities valid at every k.
        #[arg(short = 'k', default_value_t = 1)]
        k: u32,
    },
    /// Compare symbolic chi against both counting oracles on a graph corpus.
    Oracle {
        #[arg(long, default_value_t = 5)]
        max_vertices: u32,
        #[arg(long, default_value_t = 10)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        kl_max: u32,
        /// Additional random multigraphs (loops and parallel edges allowed).
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Evaluate the chorded path five ways.
    Sneaky {
        #[arg(long, num_args = 3, value_names = ["R", "S", "T"])]
        rst: Vec<u32>,
        #[arg(short = 'l')]
        l: u32,
        #[arg(long, default_value_t = 12)]
        max_vertices: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Oracle {
    Brute,
    Subset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqFamily {
    Path,
    Cycle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Memo {
    Labeled,
    Canonical,
}

#[derive(Debug, Args)]
struct MemoArgs {
    #[arg(long, value_enum, default_value_t = Memo::Labeled)]
    memo: Memo,
    #[arg(long, default_value_t = DEFAULT_CANONICAL_LIMIT)]
    canonical_limit: usize,
}

impl MemoArgs {
    fn config(&self) -> EngineConfig {
        let memo = match self.memo {
            Memo::Labeled => KeyMode::Labeled,
            Memo::Canonical => KeyMode::Canonical { limit: self.canonical_limit },
        };
        EngineConfig { memo, ..EngineConfig::default() }
    }
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Brute force: largest vertex count.
    #[arg(long, default_value_t = 8)]
    brute_max_vertices: u32,
    /// Brute force: largest k+l.
    #[arg(long, default_value_t = 6)]
    brute_max_colors: u32,
    /// Subset expansion: largest vertex count.
    #[arg(long, default_value_t = 12)]
    subset_max_vertices: u32,
    /// Subset expansion: largest k.
    #[arg(long, default_value_t = 4)]
    subset_max_k: u32,
}

impl BudgetArgs {
    fn brute(&self) -> BruteForceBudget {
        BruteForceBudget { max_vertices: self.brute_max_vertices, max_colors: self.brute_max_colors }
    }

    fn subset(&self) -> SubsetBudget {
        SubsetBudget { max_vertices: self.subset_max_vertices, max_k: self.subset_max_k }
    }
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// 0 success, 1 verification failure, 2 input or usage error.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(stderr: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr }
    }
}

/// Parse `args` (program name first) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome::usage(e.to_string()),
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn read_graph(path: &PathBuf) -> Result<MultiGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn seq_params(k: u32, l: u32) -> Result<SeqParams> {
    SeqParams::new(k, l)
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Chi { file, eval, memo } => {
            let g = read_graph(&file)?;
            let chi = ChiEngine::new(memo.config()).chi(&g);
            let text = match eval.as_deref() {
                Some([k, l]) => chi.eval(*k, *l).to_string(),
                _ => format_poly(&chi),
            };
            Ok(Outcome::ok(text + "\n"))
        }
        Command::Count { file, k, l, oracle, budget } => {
            let g = read_graph(&file)?;
            let params = ColoringParams::new(k, l);
            let count = match oracle {
                Oracle::Brute => count_bruteforce(&g, params, budget.brute())?,
                Oracle::Subset => count_subset_expansion(&g, params, budget.subset())?,
            };
            Ok(Outcome::ok(format!("{count}\n")))
        }
        Command::Seq { family, k, l, n } => {
            let p = seq_params(k, l)?;
            if n == 0 {
                return Err(Error::Input("-n must be at least 1".into()));
            }
            let values = match family {
                SeqFamily::Path => a_seq(p, n).split_off(1),
                SeqFamily::Cycle => b_seq(p, n),
            };
            let line: Vec<String> = values.iter().map(ToString::to_string).collect();
            Ok(Outcome::ok(line.join(" ") + "\n"))
        }
        Command::Recurrence { family, k, l, terms, max_order } => {
            let p = seq_params(k, l)?;
            let values = match family {
                SeqFamily::Path => a_seq(p, terms).split_off(1),
                SeqFamily::Cycle => b_seq(p, terms),
            };
            let mut line = match minimal_recurrence(&values, max_order)? {
                Some(r) => {
                    let coeffs: Vec<String> = r.coeffs().iter().map(format_rational).collect();
                    format!("order={} coeffs={}", r.order(), coeffs.join(","))
                }
                None => format!("order=none max_order={max_order}"),
            };
            if family == SeqFamily::Cycle {
                line.push_str(&format!(" detB={}", hankel_det_b(p).numeric));
            }
            Ok(Outcome::ok(line + "\n"))
        }
        Command::Verify { suite } => match suite {
            Suite::Identities { l, max, k } => verify_identities(k, l, max),
            Suite::Oracle { max_vertices, max_edges, kl_max, random, seed, budget } => {
                verify_oracle(max_vertices, max_edges, kl_max, random, seed, &budget)
            }
            Suite::Sneaky { rst, l, max_vertices } => {
                let [r, s, t] = rst[..] else {
                    return Err(Error::Input("--rst takes exactly three values".into()));
                };
                let budget = BruteForceBudget { max_vertices, max_colors: l + 1 };
                let check = check_sneaky(r, s, t, l, budget, &mut ChiEngine::default())?;
                let passed = check.agrees();
                Ok(Outcome::verdict(passed, format!("{check}\nok={passed} checked=1 failed={}\n", u8::from(!passed))))
            }
        },
    }
}

fn verify_identities(k: u32, l: u32, max: u64) -> Result<Outcome> {
    let single = seq_params(1, l)?;
    let general = seq_params(k, l)?;
    let mut reports = Vec::new();
    for id in IdentityId::ALL {
        let p = if id.requires_k_one() { single } else { general };
        reports.push(verify_identity(id, p, max)?);
    }
    let passed = reports.iter().all(|r| r.passed());
    Ok(Outcome::verdict(passed, format_reports(&reports)))
}

fn verify_oracle(
    max_vertices: u32,
    max_edges: usize,
    kl_max: u32,
    random: usize,
    seed: u64,
    budget: &BudgetArgs,
) -> Result<Outcome> {
    if max_vertices > 16 {
        return Err(Error::Capacity("oracle corpus limited to 16 vertices".into()));
    }
    let mut corpus = simple_graphs_with_edge_limit(max_vertices, max_edges);
    let exhaustive = corpus.len();
    if random > 0 {
        corpus.extend(random_multigraphs(random, max_vertices.max(1), max_edges, seed));
    }
    let mut engine = ChiEngine::default();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for g in &corpus {
        let chi = engine.chi(g);
        for k in 0..=kl_max {
            for l in 0..=kl_max {
                if k + l == 0 {
                    continue;
                }
                let params = ColoringParams::new(k, l);
                let symbolic = chi.eval(k.into(), l.into());
                let brute = count_bruteforce(g, params, budget.brute())?;
                let subset = count_subset_expansion(g, params, budget.subset())?;
                checked += 1;
                if symbolic != brute || symbolic != subset {
                    failures.push(format!(
                        "FAIL oracle k={k} l={l} chi={symbolic} brute={brute} subset={subset} graph={}",
                        serialize_graph(g).trim_end().replace('\n', ";")
                    ));
                }
            }
        }
    }
    let mut out = String::new();
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "{verdict} oracle graphs={} exhaustive={exhaustive} random={random} kl_max={kl_max} cases={checked}\n",
        corpus.len()
    ));
    for f in &failures {
        out.push_str(f);
        out.push('\n');
    }
    out.push_str(&format!("ok={} checked={checked} failed={}\n", failures.is_empty(), failures.len()));
    Ok(Outcome::verdict(failures.is_empty(), out))
}

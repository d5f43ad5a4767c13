//! Command-line driver. Verdicts go to stdout, one machine-readable line first.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cover::Budget;
use crate::dichotomy::classify_h;
use crate::error::{Error, Result};
use crate::gadgets::{
    build_2p4_gadget, build_clawfree_gadget, build_even_ds_gadget, four_subdivide_gadget, CnfFormula, GadgetOutput,
    Promise,
};
use crate::generators::{complete, cycle, path, random_connected, star};
use crate::graph::Graph;
use crate::lemmas::{check_lemma, Lemma, LemmaParams};
use crate::oracle::{ct_gamma_t, decide_by_definition, gamma, gamma_t, CtResult};
use crate::poly::{decide_auto, decide_p4_kp3_free, decide_p5_free, ClassCheck};

#[derive(Debug, Parser)]
#[command(name = "tdcontract", version, about = "Can one edge contraction lower the total domination number?")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the total domination number.
    Gammat { file: PathBuf },
    /// Print the domination number.
    Gamma { file: PathBuf },
    /// Print YES if contracting one edge lowers the total domination number, else NO.
    Decide {
        file: PathBuf,
        /// auto, oracle, p5free or p4kp3=K
        #[arg(long, default_value = "auto")]
        method: MethodArg,
        /// A pattern graph the input is known to avoid as an induced subgraph.
        #[arg(long)]
        hint: Option<PathBuf>,
    },
    /// Print the least number of contractions that lowers the total domination number.
    Ct {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
    },
    /// Classify the problem restricted to H-free graphs.
    ClassifyH { file: PathBuf },
    /// Build a reduction instance; writes OUT and OUT.roles.
    Compile {
        #[command(subcommand)]
        gadget: GadgetCommand,
    },
    /// Check a structural fact on random samples.
    VerifyLemma {
        lemma: LemmaArg,
        #[command(flatten)]
        params: SampleArgs,
    },
    /// Print a named graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
}

#[derive(Debug, Subcommand)]
enum GadgetCommand {
    /// Even Dominating Set instance (edge list) to a contraction instance.
    EvenDs {
        #[arg(long)]
        ell: usize,
        /// Skip the exact check that the source has domination number at least 4.
        #[arg(long)]
        trust_promise: bool,
        input: PathBuf,
        output: PathBuf,
    },
    /// 3-CNF (DIMACS) to a 2P4-free instance.
    #[command(name = "sat-2p4")]
    Sat2p4 { input: PathBuf, output: PathBuf },
    /// Positive cubic 1-in-3 CNF (DIMACS) to a claw-free instance.
    #[command(name = "claw-1in3")]
    Claw1in3 { input: PathBuf, output: PathBuf },
    /// Subdivide every edge four times.
    Subdiv4 { input: PathBuf, output: PathBuf },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    Path { n: usize },
    Cycle { n: usize },
    /// K_{1,n}.
    Star { n: usize },
    Complete { n: usize },
    /// A connected G(n, p) sample.
    Random {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Search nodes allowed per exact computation.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LemmaArg {
    #[value(name = "p3-criterion", alias = "thm1")]
    Criterion,
    #[value(name = "even-ds", alias = "claim1")]
    EvenDs,
    #[value(name = "subdivision", alias = "claim9")]
    Subdivision,
    #[value(name = "contraction-bound", alias = "ct3")]
    Bound,
    #[value(name = "sat-gadget", alias = "gadget")]
    Sat,
}

impl From<LemmaArg> for Lemma {
    fn from(a: LemmaArg) -> Self {
        match a {
            LemmaArg::Criterion => Lemma::ContractionCriterion,
            LemmaArg::EvenDs => Lemma::EvenDsDomination,
            LemmaArg::Subdivision => Lemma::SubdivisionShift,
            LemmaArg::Bound => Lemma::ContractionBound,
            LemmaArg::Sat => Lemma::SatGadget,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Auto,
    Oracle,
    P5Free,
    P4kP3(usize),
}

impl FromStr for MethodArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(MethodArg::Auto),
            "oracle" => Ok(MethodArg::Oracle),
            "p5free" => Ok(MethodArg::P5Free),
            _ => s
                .strip_prefix("p4kp3=")
                .and_then(|k| k.parse().ok())
                .map(MethodArg::P4kP3)
                .ok_or_else(|| format!("unknown method '{s}'; expected auto, oracle, p5free or p4kp3=K")),
        }
    }
}

/// A failure plus the exit status it maps to.
struct Failure {
    code: i32,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let code = match error {
            Error::BudgetExceeded(_) => 1,
            _ => 2,
        };
        Failure { code, error }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        error: Error::InvalidParameter(format!("cannot read {}: {e}", path.display())),
    })
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure {
        code: 2,
        error: Error::InvalidParameter(format!("cannot write {}: {e}", path.display())),
    })
}

fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    Ok(Graph::parse_edge_list(&read(path)?)?)
}

fn read_formula(path: &Path) -> std::result::Result<CnfFormula, Failure> {
    Ok(CnfFormula::parse_dimacs(&read(path)?)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn decide(g: &Graph, method: MethodArg, hint: Option<&Graph>) -> Result<bool> {
    match method {
        MethodArg::Auto => decide_auto(g, hint),
        MethodArg::Oracle => decide_by_definition(g),
        MethodArg::P5Free => decide_p5_free(g, ClassCheck::Auto),
        MethodArg::P4kP3(k) => decide_p4_kp3_free(g, k, ClassCheck::Auto),
    }
}

fn emit_gadget(out: &GadgetOutput, path: &Path) -> std::result::Result<String, Failure> {
    write(path, &out.graph.to_edge_list())?;
    let mut roles = path.as_os_str().to_owned();
    roles.push(".roles");
    write(Path::new(&roles), &out.roles_text())?;
    Ok(format!("{}", out.graph.n()))
}

/// Returns `(stdout text, exit status)`.
fn execute(cmd: Command) -> std::result::Result<(String, i32), Failure> {
    let line = |s: String| Ok((s + "\n", 0));
    match cmd {
        Command::Gammat { file } => line(gamma_t(&read_graph(&file)?)?.to_string()),
        Command::Gamma { file } => line(gamma(&read_graph(&file)?).to_string()),
        Command::Decide { file, method, hint } => {
            let g = read_graph(&file)?;
            let h = hint.as_deref().map(read_graph).transpose()?;
            line(yes_no(decide(&g, method, h.as_ref())?).into())
        }
        Command::Ct { file, max_depth } => match ct_gamma_t(&read_graph(&file)?, max_depth)? {
            CtResult::Contractions(k) => line(k.to_string()),
            CtResult::Irreducible => line("irreducible".into()),
        },
        Command::ClassifyH { file } => {
            let c = classify_h(&read_graph(&file)?);
            line(format!("{}\n{}", c.summary(), c.explanation()))
        }
        Command::Compile { gadget } => {
            let (out, path) = match gadget {
                GadgetCommand::EvenDs {
                    ell,
                    trust_promise,
                    input,
                    output,
                } => {
                    let promise = if trust_promise { Promise::Trust } else { Promise::Check };
                    (build_even_ds_gadget(&read_graph(&input)?, ell, promise)?, output)
                }
                GadgetCommand::Sat2p4 { input, output } => (build_2p4_gadget(&read_formula(&input)?)?, output),
                GadgetCommand::Claw1in3 { input, output } => {
                    (build_clawfree_gadget(&read_formula(&input)?)?, output)
                }
                GadgetCommand::Subdiv4 { input, output } => (four_subdivide_gadget(&read_graph(&input)?)?, output),
            };
            line(emit_gadget(&out, &path)?)
        }
        Command::VerifyLemma { lemma, params } => {
            let params = LemmaParams {
                n: params.n,
                samples: params.samples,
                seed: params.seed,
                budget: Budget(params.budget),
            };
            let report = check_lemma(lemma.into(), &params)?;
            let mut text = format!("{report}\n");
            if let Some(c) = &report.counterexample {
                text.push_str(c);
            }
            Ok((text, if report.passed() { 0 } else { 1 }))
        }
        Command::Gen { family } => {
            let g = match family {
                GenCommand::Path { n } => path(n),
                GenCommand::Cycle { n } => cycle(n)?,
                GenCommand::Star { n } => star(n),
                GenCommand::Complete { n } => complete(n),
                GenCommand::Random { n, p, seed } => random_connected(n, p, seed)?,
            };
            Ok((g.to_edge_list(), 0))
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.error);
            f.code
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

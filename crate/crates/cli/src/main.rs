use std::process::ExitCode;

use chargen::characters::{demazure_character, weyl_character};
use chargen::demazure::{apply_poly, OpKind};
use chargen::posetgraph::{self, DescentRule};
use chargen::verify::{self, CheckResult};
use chargen::{genfun, Algebra, CharPoly, Error, GenSeries, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chargen", version, about = "Character generators of simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Built-in name (A1..A8, B2, C2, G2, ...) or path to a JSON Cartan file.
    #[arg(long, short)]
    algebra: String,
}

#[derive(Args)]
struct TruncArg {
    /// Keep terms of total L-degree at most N.
    #[arg(long, short, env = "CHARGEN_TRUNC", default_value_t = 3)]
    truncate: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharMethod {
    Weyl,
    Demazure,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenMethod {
    Def,
    Yz,
    Demazure,
    Graph,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible character of a dominant highest weight.
    Character {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Dynkin labels, comma separated.
        #[arg(long, short, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "weyl")]
        method: CharMethod,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Truncated character generator X(L, a).
    Generator {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        trunc: TruncArg,
        #[arg(long, value_enum, default_value = "def")]
        method: GenMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check every route and identity; exit 1 on any failure.
    Verify {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        trunc: TruncArg,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Random instances per operator identity.
        #[arg(long, default_value_t = verify::DEFAULT_CASES)]
        cases: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Orbit poset with witnesses, Hasse and extra edges.
    Poset {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generator read off the labelled graph, with its chain terms.
    GraphX {
        #[command(flatten)]
        alg: AlgebraArg,
        #[command(flatten)]
        trunc: TruncArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply an operator word to a monomial a^mu (rightmost letter first).
    DemazureApply {
        #[command(flatten)]
        alg: AlgebraArg,
        /// One of D, d, Dbar, dneg, r.
        #[arg(long)]
        op: String,
        /// Simple-root indices, e.g. 1,2,1.
        #[arg(long)]
        word: String,
        /// Exponent of the input monomial.
        #[arg(long, short, allow_hyphen_values = true)]
        monomial: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List the Weyl group: word, length, determinant, action matrix.
    Group {
        #[command(flatten)]
        alg: AlgebraArg,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnsupportedAlgebra(_)
            | Error::InvalidCartan(_)
            | Error::NotDominant(_)
            | Error::RankMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::NonReducedWord(_)
            | Error::Io(_)
            | Error::Json(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn parse_weight(alg: &Algebra, s: &str) -> Result<Weight, Error> {
    let w = Weight::parse(s)?;
    w.check_rank(alg.rank())?;
    Ok(w)
}

fn no_dot(format: Format) -> Result<(), Failure> {
    match format {
        Format::Dot => Err(Failure::Usage("--format dot is only available for `poset`".into())),
        _ => Ok(()),
    }
}

fn cmd_character(alg: &Algebra, weight: &str, method: CharMethod, format: Format) -> Outcome {
    no_dot(format)?;
    let lam = parse_weight(alg, weight)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam).into());
    }
    let (name, ch): (&str, CharPoly) = match method {
        CharMethod::Weyl => ("weyl", (*weyl_character(alg, &lam)?).clone()),
        CharMethod::Demazure => ("demazure", demazure_character(alg, &lam)?),
    };
    Ok(match format {
        Format::Text => format!("{ch}\n"),
        _ => pretty(json!({
            "schema": 1,
            "algebra": alg.name(),
            "weight": lam.0,
            "method": name,
            "dimension": chargen::poly::bigint_json(&ch.specialize_a_one()),
            "character": ch.to_json(),
        })),
    })
}

fn series_output(alg: &Algebra, n: u32, method: &str, s: &GenSeries, format: Format, extra: Option<(&str, Value)>) -> String {
    match format {
        Format::Text => format!("{s}\n"),
        _ => {
            let mut v = json!({
                "schema": 1,
                "algebra": alg.name(),
                "method": method,
                "truncate": n,
                "series": s.to_json(),
            });
            if let Some((k, x)) = extra {
                v[k] = x;
            }
            pretty(v)
        }
    }
}

fn cmd_generator(alg: &Algebra, n: u32, method: GenMethod, format: Format) -> Outcome {
    no_dot(format)?;
    let (name, s) = match method {
        GenMethod::Def => ("def", genfun::x_by_definition(alg, n)?),
        GenMethod::Yz => ("yz", genfun::x_via_yz(alg, n)?),
        GenMethod::Demazure => ("demazure", genfun::x_via_demazure(alg, n, None)?),
        GenMethod::Graph => ("graph", posetgraph::x_via_graph(alg, n)?),
    };
    Ok(series_output(alg, n, name, &s, format, None))
}

fn report_line(c: &CheckResult) -> String {
    let status = match (c.passed, c.advisory) {
        (true, _) => "PASS",
        (false, false) => "FAIL",
        (false, true) => "NOTE",
    };
    format!("{status} {}: {}\n", c.name, c.detail)
}

fn cmd_verify(alg: &Algebra, n: u32, seed: u64, cases: usize, format: Format) -> Result<(String, bool), Failure> {
    no_dot(format)?;
    let checks = verify::run_suite(alg, n, seed, cases)?;
    let ok = verify::all_passed(&checks);
    let out = match format {
        Format::Text => {
            let mut s: String = checks.iter().map(report_line).collect();
            let failed = checks.iter().filter(|c| !c.passed && !c.advisory).count();
            s.push_str(&format!(
                "{}: {} checks, {failed} failed (algebra {}, truncate {n}, seed {seed})\n",
                if ok { "OK" } else { "FAILED" },
                checks.len(),
                alg.name()
            ));
            s
        }
        _ => pretty(json!({
            "schema": 1,
            "algebra": alg.name(),
            "truncate": n,
            "seed": seed,
            "passed": ok,
            "checks": checks,
        })),
    };
    Ok((out, ok))
}

fn cmd_poset(alg: &Algebra, format: Format) -> Outcome {
    let graph = posetgraph::build_generator_graph(alg)?;
    Ok(match format {
        Format::Dot => posetgraph::export_dot(&graph),
        Format::Json => {
            let linking = posetgraph::default_linking(&graph)?;
            pretty(posetgraph::to_json(&graph, Some(&linking)))
        }
        Format::Text => {
            let mut s = String::new();
            for v in &graph.vertices {
                let word: String = v.witness.word.iter().map(|i| i.to_string()).collect();
                s.push_str(&format!(
                    "{} shape {} weight {} witness {}\n",
                    v.letter,
                    v.shape,
                    v.weight,
                    if word.is_empty() { "e" } else { &word }
                ));
            }
            for e in &graph.edges {
                let kind = match e.kind {
                    posetgraph::EdgeKind::Hasse => "hasse",
                    posetgraph::EdgeKind::Extra => "extra",
                };
                s.push_str(&format!("{} {kind} {}\n", graph.edge_name(e), e.label));
            }
            s
        }
    })
}

fn cmd_graph_x(alg: &Algebra, n: u32, format: Format) -> Outcome {
    no_dot(format)?;
    let graph = posetgraph::build_generator_graph(alg)?;
    let linking = posetgraph::default_linking(&graph)?;
    let terms = posetgraph::graph_terms(&graph, &linking, DescentRule::Refined);
    let s = posetgraph::evaluate_terms(&graph, &terms, n)?;
    Ok(match format {
        Format::Text => format!("X = {}\n  = {s}\n", posetgraph::render_terms(&graph, &terms)),
        _ => {
            let rendered: Vec<String> = terms.iter().map(|t| t.render(&graph)).collect();
            let extra = json!({ "link_minus": linking.describe(&graph), "chains": rendered });
            series_output(alg, n, "graph", &s, format, Some(("terms", extra)))
        }
    })
}

fn cmd_demazure_apply(alg: &Algebra, op: &str, word: &str, monomial: &str, format: Format) -> Outcome {
    no_dot(format)?;
    let kind: OpKind = op.parse()?;
    let letters: Vec<usize> = if word.trim().is_empty() {
        Vec::new()
    } else {
        word.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Failure::Usage(format!("word letter `{}`: {e}", t.trim()))))
            .collect::<Result<_, _>>()?
    };
    for &i in &letters {
        alg.spec.check_index(i)?;
    }
    let mu = parse_weight(alg, monomial)?;
    let p = letters.iter().rev().fold(CharPoly::monomial(mu.clone(), 1), |acc, &i| apply_poly(&alg.spec, kind, i, &acc));
    Ok(match format {
        Format::Text => format!("{p}\n"),
        _ => pretty(json!({
            "schema": 1,
            "algebra": alg.name(),
            "op": kind.to_string(),
            "word": letters,
            "monomial": mu.0,
            "result": p.to_json(),
        })),
    })
}

fn cmd_group(alg: &Algebra) -> Outcome {
    let elements: Vec<Value> =
        alg.group.elements().iter().map(|w| json!({ "word": w.word, "length": w.length, "det": w.det, "matrix": w.matrix })).collect();
    Ok(pretty(json!({
        "schema": 1,
        "algebra": alg.name(),
        "order": alg.group.order(),
        "sweep_word": alg.longest.sweep_word,
        "elements": elements,
    })))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let load = |a: &AlgebraArg| Algebra::resolve(&a.algebra).map_err(Failure::from);
    let done = |s: String| (s, true);
    match cli.command {
        Command::Character { alg, weight, method, format } => cmd_character(&load(&alg)?, &weight, method, format).map(done),
        Command::Generator { alg, trunc, method, format } => cmd_generator(&load(&alg)?, trunc.truncate, method, format).map(done),
        Command::Verify { alg, trunc, seed, cases, format } => cmd_verify(&load(&alg)?, trunc.truncate, seed, cases, format),
        Command::Poset { alg, dot, format } => cmd_poset(&load(&alg)?, if dot { Format::Dot } else { format }).map(done),
        Command::GraphX { alg, trunc, format } => cmd_graph_x(&load(&alg)?, trunc.truncate, format).map(done),
        Command::DemazureApply { alg, op, word, monomial, format } => {
            cmd_demazure_apply(&load(&alg)?, &op, &word, &monomial, format).map(done)
        }
        Command::Group { alg } => cmd_group(&load(&alg)?).map(done),
    }
}

/// Parse `args`, run the command, and return stdout, stderr and the exit code.
fn execute<I, T>(args: I) -> (String, String, u8)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, 2) };
        }
    };
    match run(cli) {
        Ok((out, ok)) => (out, String::new(), if ok { 0 } else { 1 }),
        Err(Failure::Usage(msg)) => (String::new(), format!("error: {msg}\n"), 2),
        Err(Failure::Compute(msg)) => (String::new(), format!("error: {msg}\n"), 1),
    }
}

fn main() -> ExitCode {
    let (out, err, code) = execute(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    ExitCode::from(code)
}

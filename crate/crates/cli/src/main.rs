mod input;

use std::collections::HashMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sweedler_rb::algebra::AlgebraId;
use sweedler_rb::catalog::{to_jsonl, Verification};
use sweedler_rb::rbcore::classify;
use sweedler_rb::search::{self, Matcher, SearchConfig, DEFAULT_PARAM_BOUND};
use sweedler_rb::{check_rb, AlgebraKind, AlgebraSpec, Catalog, Field, Fp, Rational, Scalar, Symbol};

use input::{parse_matrix, parse_scalar, read_matrix_source};

#[derive(Parser, Debug)]
#[command(name = "sweedler-rb", version, about = "Rota-Baxter operators on the Sweedler algebra and its adjoint algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Algebra the matrix or search refers to.
    #[arg(long, global = true, default_value = "h4minus")]
    algebra: AlgebraId,
    #[arg(long, global = true, value_enum, default_value = "Q", ignore_case = true)]
    field: FieldSel,
    /// Weight, parsed in the chosen field.
    #[arg(long, global = true, default_value = "1")]
    weight: String,
    #[arg(long, global = true, value_enum, default_value = "auto")]
    kind: KindSel,
    /// Worker threads for search commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify a catalog family symbolically or at its stored sample point.
    VerifyFamily {
        id: String,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
    },
    /// Check the Rota-Baxter identity for a concrete matrix.
    VerifyOperator {
        #[arg(long)]
        matrix: String,
    },
    /// Kernel, image and classification bucket of a Rota-Baxter operator.
    Classify {
        #[arg(long)]
        matrix: String,
    },
    /// Evaluate a family at parameter values given as `name=value`.
    Instantiate {
        id: String,
        #[arg(long = "set", value_parser = parse_assignment)]
        set: Vec<(String, String)>,
    },
    /// All Rota-Baxter operators over a prime field, as JSON lines.
    Search,
    /// Match a full search against the catalog.
    Coverage,
    /// Lie operators on H4(-) that fail the associative identity on H4.
    Compare,
    /// Export the catalog as one JSON document.
    Catalog,
    /// Discrepancy records of all failing families, as JSON lines.
    Discrepancies,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldSel {
    #[value(name = "Q")]
    Q,
    #[value(name = "F3")]
    F3,
    #[value(name = "F5")]
    F5,
    #[value(name = "F7")]
    F7,
}

impl FieldSel {
    fn name(self) -> &'static str {
        match self {
            FieldSel::Q => "Q",
            FieldSel::F3 => "F3",
            FieldSel::F5 => "F5",
            FieldSel::F7 => "F7",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindSel {
    Auto,
    Associative,
    Lie,
    Jordan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Sample,
}

fn parse_assignment(s: &str) -> Result<(String, String), String> {
    s.split_once('=')
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .ok_or_else(|| format!("expected name=value, got `{s}`"))
}

/// Whether the mathematical check succeeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail,
}

struct Output {
    out: Option<PathBuf>,
    timestamp: bool,
}

impl Output {
    fn write(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write `{}`", p.display())),
            None => {
                let mut o = std::io::stdout().lock();
                o.write_all(text.as_bytes())?;
                o.flush()?;
                Ok(())
            }
        }
    }

    fn document(&self, mut v: Value) -> Result<()> {
        if self.timestamp {
            let secs = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map_or(0, |d| d.as_secs());
            v["timestamp"] = json!(secs);
        }
        self.write(&format!("{}\n", serde_json::to_string_pretty(&v)?))
    }

    fn lines(&self, values: &[Value]) -> Result<()> {
        self.write(&to_jsonl(values))
    }
}

macro_rules! with_scalar {
    ($field:expr, $s:ident => $body:expr) => {
        match $field {
            FieldSel::Q => {
                type $s = Rational;
                $body
            }
            FieldSel::F3 => {
                type $s = Fp<3>;
                $body
            }
            FieldSel::F5 => {
                type $s = Fp<5>;
                $body
            }
            FieldSel::F7 => {
                type $s = Fp<7>;
                $body
            }
        }
    };
}

macro_rules! with_prime {
    ($field:expr, $p:ident => $body:expr) => {
        match $field {
            FieldSel::Q => bail!("this command enumerates over a prime field; pass --field F3, F5 or F7"),
            FieldSel::F3 => {
                const $p: u32 = 3;
                $body
            }
            FieldSel::F5 => {
                const $p: u32 = 5;
                $body
            }
            FieldSel::F7 => {
                const $p: u32 = 7;
                $body
            }
        }
    };
}

/// The algebra whose identity is checked, after applying `--kind`.
fn resolve_spec(algebra: AlgebraId, kind: KindSel) -> Result<AlgebraSpec> {
    let spec = algebra.spec();
    let own = spec.kind();
    Ok(match (kind, own) {
        (KindSel::Auto, _) => spec,
        (KindSel::Associative, AlgebraKind::Associative)
        | (KindSel::Lie, AlgebraKind::Lie)
        | (KindSel::Jordan, AlgebraKind::Jordan) => spec,
        (KindSel::Lie, AlgebraKind::Associative) => spec.adjoint_minus()?,
        (KindSel::Jordan, AlgebraKind::Associative) => spec.adjoint_plus()?,
        (k, o) => bail!("--kind {k:?} does not apply to the {o} algebra `{algebra}`"),
    })
}

fn weight<S: Scalar>(cli: &Cli) -> Result<S> {
    parse_scalar::<S>(&cli.weight).context("--weight")
}

fn verify_family(cli: &Cli, out: &Output, id: &str, mode: Mode) -> Result<Outcome> {
    let catalog = Catalog::builtin();
    let family = catalog.get(id)?;
    let basis = family.algebra().spec().basis().to_vec();
    match mode {
        Mode::Symbolic => {
            let (verdict, report, discrepancy) = match catalog.verify(id)? {
                Verification::Pass(r) => ("pass", r.to_json(&basis), Value::Null),
                Verification::Discrepancy(d) => ("fail", family.check_on(family.algebra())?.to_json(&basis), d.to_json()),
            };
            out.document(json!({
                "command": "verify-family",
                "family": id,
                "mode": "symbolic",
                "verdict": verdict,
                "report": report,
                "discrepancy": discrepancy,
            }))?;
            Ok(if verdict == "pass" { Outcome::Pass } else { Outcome::Fail })
        }
        Mode::Sample => with_scalar!(cli.field, S => sample_check::<S>(cli, out, id)),
    }
}

fn sample_check<S: Field>(cli: &Cli, out: &Output, id: &str) -> Result<Outcome> {
    let family = Catalog::builtin().get(id)?;
    let mut assignment: HashMap<Symbol, S> = HashMap::new();
    let mut shown = serde_json::Map::new();
    for (s, q) in family.sample() {
        let v = S::from_rational(&q).with_context(|| format!("sample value of `{s}` has no image in {}", cli.field.name()))?;
        shown.insert(s.name().to_string(), json!(v.to_string()));
        assignment.insert(s, v);
    }
    let basis = family.algebra().spec().basis().to_vec();
    let mut doc = json!({"command": "verify-family", "family": id, "mode": "sample", "field": cli.field.name(), "assignment": shown});
    let r = family
        .instantiate(&assignment)
        .with_context(|| format!("the sample point of `{id}` leaves the family's domain in {}", cli.field.name()))?;
    let lambda = assignment[&Symbol::lambda()].clone();
    let report = check_rb(&family.algebra().spec(), &r, &lambda)?;
    doc["matrix"] = json!(r.to_strings());
    doc["verdict"] = json!(if report.passed() { "pass" } else { "fail" });
    doc["report"] = report.to_json(&basis);
    out.document(doc)?;
    Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
}

fn verify_operator<S: Field>(cli: &Cli, out: &Output, matrix: &str) -> Result<Outcome> {
    let spec = resolve_spec(cli.algebra, cli.kind)?;
    let r = parse_matrix::<S>(&read_matrix_source(matrix)?, spec.dim())?;
    let w = weight::<S>(cli)?;
    let report = check_rb(&spec, &r, &w)?;
    out.document(json!({
        "command": "verify-operator",
        "algebra": cli.algebra,
        "kind": spec.kind().to_string(),
        "field": cli.field.name(),
        "weight": w.to_string(),
        "verdict": if report.passed() { "pass" } else { "fail" },
        "report": report.to_json(spec.basis()),
    }))?;
    Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
}

fn classify_operator<S: Field>(cli: &Cli, out: &Output, matrix: &str) -> Result<Outcome> {
    let spec = resolve_spec(cli.algebra, cli.kind)?;
    let r = parse_matrix::<S>(&read_matrix_source(matrix)?, spec.dim())?;
    let w = weight::<S>(cli)?;
    let report = check_rb(&spec, &r, &w)?;
    let mut doc = json!({"command": "classify", "algebra": cli.algebra, "field": cli.field.name(), "weight": w.to_string()});
    if !report.passed() {
        doc["verdict"] = json!("fail");
        doc["report"] = report.to_json(spec.basis());
        out.document(doc)?;
        return Ok(Outcome::Fail);
    }
    let c = classify(&spec, &r, &w)?;
    doc["verdict"] = json!("pass");
    doc["classification"] = c.to_json();
    out.document(doc)?;
    Ok(Outcome::Pass)
}

fn instantiate_family<S: Field>(cli: &Cli, out: &Output, id: &str, set: &[(String, String)]) -> Result<Outcome> {
    let family = Catalog::builtin().get(id)?;
    let mut assignment: HashMap<Symbol, S> = HashMap::new();
    for (k, v) in set {
        assignment.insert(Symbol::new(k), parse_scalar::<S>(v).with_context(|| format!("value of `{k}`"))?);
    }
    assignment.entry(Symbol::lambda()).or_insert(weight::<S>(cli)?);
    let mut doc = json!({"command": "instantiate", "family": id, "field": cli.field.name()});
    match family.instantiate(&assignment) {
        Ok(r) => {
            doc["matrix"] = json!(r.to_strings());
            out.document(doc)?;
            Ok(Outcome::Pass)
        }
        Err(sweedler_rb::CatalogError::Eval(sweedler_rb::EvalError::MissingSymbol(s))) => {
            bail!("no value given for parameter `{s}`")
        }
        Err(e) => {
            doc["error"] = json!(e.to_string());
            out.document(doc)?;
            Ok(Outcome::Fail)
        }
    }
}

fn config(cli: &Cli) -> SearchConfig {
    match cli.jobs {
        Some(j) => SearchConfig::with_jobs(j),
        None => SearchConfig::default(),
    }
}

fn prime_weight<const P: u32>(cli: &Cli) -> Result<Fp<P>> {
    let w = weight::<Fp<P>>(cli)?;
    if w.is_zero() {
        bail!("--weight must be nonzero in F{P}");
    }
    Ok(w)
}

fn search_cmd<const P: u32>(cli: &Cli, out: &Output) -> Result<Outcome> {
    let lambda = prime_weight::<P>(cli)?;
    let spec = cli.algebra.spec();
    let ops = search::enumerate_all(&spec, lambda, &config(cli))?;
    let matcher = Matcher::<P>::new(Catalog::builtin(), cli.algebra, lambda, DEFAULT_PARAM_BOUND)?;
    let lines: Vec<Value> = ops.iter().map(|r| search::operator_line(r, matcher.first_match(r))).collect();
    out.lines(&lines)?;
    Ok(Outcome::Pass)
}

fn coverage_cmd<const P: u32>(cli: &Cli, out: &Output) -> Result<Outcome> {
    let lambda = prime_weight::<P>(cli)?;
    let spec = cli.algebra.spec();
    let cfg = config(cli);
    let ops = search::enumerate_all(&spec, lambda, &cfg)?;
    let auts = search::automorphisms::<P>(&spec, &cfg)?;
    let matcher = Matcher::<P>::new(Catalog::builtin(), cli.algebra, lambda, DEFAULT_PARAM_BOUND)?;
    let report = search::coverage(&ops, &matcher, &auts);
    let mut doc = report.to_json();
    doc["command"] = json!("coverage");
    out.document(doc)?;
    Ok(Outcome::Pass)
}

fn compare_cmd<const P: u32>(cli: &Cli, out: &Output) -> Result<Outcome> {
    let lambda = prime_weight::<P>(cli)?;
    let found = search::compare_lie_vs_assoc(lambda, &config(cli))?;
    let lines: Vec<Value> = found.iter().map(|c| c.to_json()).collect();
    out.lines(&lines)?;
    Ok(Outcome::Pass)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let out = Output { out: cli.out.clone(), timestamp: !cli.no_timestamp };
    match &cli.command {
        Command::VerifyFamily { id, mode } => verify_family(cli, &out, id, *mode),
        Command::VerifyOperator { matrix } => with_scalar!(cli.field, S => verify_operator::<S>(cli, &out, matrix)),
        Command::Classify { matrix } => with_scalar!(cli.field, S => classify_operator::<S>(cli, &out, matrix)),
        Command::Instantiate { id, set } => with_scalar!(cli.field, S => instantiate_family::<S>(cli, &out, id, set)),
        Command::Search => with_prime!(cli.field, P => search_cmd::<P>(cli, &out)),
        Command::Coverage => with_prime!(cli.field, P => coverage_cmd::<P>(cli, &out)),
        Command::Compare => with_prime!(cli.field, P => compare_cmd::<P>(cli, &out)),
        Command::Catalog => {
            out.write(&format!("{}\n", serde_json::to_string_pretty(&Catalog::builtin().to_json())?))?;
            Ok(Outcome::Pass)
        }
        Command::Discrepancies => {
            let recs: Vec<Value> = Catalog::builtin().discrepancies()?.iter().map(|d| d.to_json()).collect();
            out.lines(&recs)?;
            Ok(Outcome::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

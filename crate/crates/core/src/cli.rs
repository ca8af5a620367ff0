//! Command-line surface. `run` never exits the process, so it can be driven
//! from tests; `main.rs` only forwards the outcome.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::class_fn::ClassFunction;
use crate::coxeter_euler::{lambda_main, lambda_orbit, phi, pi_two, EulerReport};
use crate::error::{Error, Result};
use crate::root_system::{BuildOptions, Family, RootSystem};
use crate::scalar::Scalar;
use crate::symn::characters::decompose;
use crate::symn::ring::CycleTypeFunction;
use crate::symn::typea::{lambda_typea, lambda_typea_inner, stembridge_series};
use crate::verify::{run_suite, Limits, Status, Suite, MAX_TYPEA_N};
use crate::weyl_group::WeylGroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "realtoric", version, about = "Equivariant Euler characteristics of real Coxeter toric varieties")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write output to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Root system family: A, B, C, D, E, F or G.
    #[arg(long = "type", value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    /// Allow E6 (51840 elements).
    #[arg(long)]
    pub enable_e6: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root system document: Cartan matrix, roots, simple root indices.
    Roots(TypeArgs),
    /// Order, class sizes and descent histogram of the Weyl group.
    Group(TypeArgs),
    /// Euler characteristics, Poincare polynomials and Lambda.
    Euler(TypeArgs),
    /// A single class function.
    Character {
        #[command(subcommand)]
        which: CharacterCommand,
    },
    /// Type-A generating series.
    Series {
        #[command(subcommand)]
        which: SeriesCommand,
    },
    /// Multiplicities of irreducible S_n characters.
    Decompose {
        #[command(subcommand)]
        which: DecomposeCommand,
    },
    /// Run identity checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum CharacterCommand {
    /// Lambda, by the alternating sum over parabolic subgroups.
    Lambda(TypeArgs),
    /// Lambda, by the torus orbit decomposition.
    LambdaOrbit(TypeArgs),
    /// Permutation character on N/2N.
    Pi(TypeArgs),
    /// Compactly supported Euler characteristic of the fixed real torus.
    Phi(TypeArgs),
    /// Lambda for S_n by cycle type, with its inner sums.
    LambdaA {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeriesCommand {
    /// Degree-n term of the equivariant Poincare series of the complex variety.
    Stembridge {
        #[arg(long)]
        n: usize,
        /// Substitute an integer for q.
        #[arg(long, allow_hyphen_values = true)]
        eval_q: Option<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum DecomposeCommand {
    /// Lambda for S_n and each of its inner sums.
    Lambda {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    #[arg(long, default_value_t = Limits::default().max_rank)]
    pub max_rank: usize,
    #[arg(long, default_value_t = Limits::default().max_n)]
    pub max_n: usize,
    #[arg(long, default_value_t = Limits::default().degree)]
    pub degree: usize,
    #[arg(long)]
    pub enable_e6: bool,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Finished invocation: what to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Rendered command result. `rows[0]` is the header for csv/table output.
struct Report {
    json: Value,
    rows: Vec<Vec<String>>,
    code: i32,
}

impl Report {
    fn new(json: Value, rows: Vec<Vec<String>>) -> Self {
        Self { json, rows, code: EXIT_OK }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => self.rows.iter().map(|r| r.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",") + "\n").collect(),
            Format::Table => table(&self.rows),
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|i| rows.iter().filter_map(|r| r.get(i)).map(|c| c.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for (k, row) in rows.iter().enumerate() {
        let line: Vec<String> = row.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = widths[i])).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if k == 0 {
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            out.push_str(&rule.join("  "));
            out.push('\n');
        }
    }
    out
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn key_value_rows(json: &Value) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["key".to_string(), "value".to_string()]];
    if let Value::Object(map) = json {
        rows.extend(map.iter().map(|(k, v)| vec![k.clone(), cell(v)]));
    }
    rows
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceCap { .. } => EXIT_RESOURCE_CAP,
        Error::UnsupportedType { .. } | Error::E6Disabled | Error::InvalidArgument(_) | Error::IndexOutOfRange { .. } => {
            EXIT_USAGE
        }
        _ => EXIT_VERIFY_FAILED,
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let report = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => return Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let text = report.render(cli.format);
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code: report.code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code: report.code, stdout: text, stderr: String::new() },
    }
}

fn system(args: &TypeArgs) -> Result<RootSystem> {
    RootSystem::build(args.family, args.rank, BuildOptions { enable_e6: args.enable_e6 })
}

fn group(args: &TypeArgs) -> Result<WeylGroup> {
    WeylGroup::enumerate(&system(args)?)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_TYPEA_N {
        return Err(Error::InvalidArgument(format!("--n must be between 1 and {MAX_TYPEA_N}")));
    }
    Ok(())
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Roots(args) => roots(args),
        Command::Group(args) => group_report(args),
        Command::Euler(args) => euler(args),
        Command::Character { which } => character(which),
        Command::Series { which: SeriesCommand::Stembridge { n, eval_q } } => stembridge(*n, *eval_q),
        Command::Decompose { which: DecomposeCommand::Lambda { n } } => decompose_lambda(*n),
        Command::Verify(args) => verify(args),
    }
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn roots(args: &TypeArgs) -> Result<Report> {
    let sys = system(args)?;
    let doc = to_value(&sys.document());
    let mut rows = vec![vec!["index".to_string(), "coefficients".to_string(), "vector".to_string(), "positive".to_string()]];
    for (i, v) in doc["roots"].as_array().into_iter().flatten().enumerate() {
        let coeffs: Vec<String> = sys.coefficients(i).iter().map(i64::to_string).collect();
        let vector: Vec<String> = v.as_array().into_iter().flatten().map(cell).collect();
        rows.push(vec![i.to_string(), coeffs.join(" "), vector.join(" "), sys.is_positive(i).to_string()]);
    }
    Ok(Report::new(doc, rows))
}

fn group_report(args: &TypeArgs) -> Result<Report> {
    let g = group(args)?;
    let json = json!({
        "order": g.order(),
        "num_classes": g.num_classes(),
        "class_sizes": g.class_sizes(),
        "descent_histogram": g.descent_histogram(),
    });
    let rows = key_value_rows(&json);
    Ok(Report::new(json, rows))
}

fn euler(args: &TypeArgs) -> Result<Report> {
    let g = group(args)?;
    let report = EulerReport::compute(&g)?;
    let doc = to_value(&report.document(&g)?);
    let mut rows = vec![vec!["key".to_string(), "value".to_string()]];
    if let Value::Object(map) = &doc {
        rows.extend(map.iter().filter(|(k, _)| *k != "lambda").map(|(k, v)| vec![k.clone(), cell(v)]));
    }
    for row in doc["lambda"]["classes"].as_array().into_iter().flatten() {
        rows.push(vec![format!("lambda({})", cell(&row["representative"])), cell(&row["value"])]);
    }
    let mut out = Report::new(doc, rows);
    if !report.inconsistencies().is_empty() {
        out.code = EXIT_VERIFY_FAILED;
    }
    Ok(out)
}

fn class_table<S: Scalar>(g: &WeylGroup, f: &ClassFunction<S>) -> Result<Report> {
    let t = f.table(g)?;
    let mut rows = vec![vec!["representative".to_string(), "size".to_string(), "value".to_string()]];
    rows.extend(t.classes.iter().map(|c| vec![c.representative.clone(), c.size.to_string(), cell(&c.value)]));
    Ok(Report::new(to_value(&t), rows))
}

fn partition_rows(values: &Value, header: &str) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["partition".to_string(), header.to_string()]];
    if let Value::Object(map) = values {
        rows.extend(map.iter().map(|(k, v)| vec![k.clone(), cell(v)]));
    }
    rows
}

fn character(which: &CharacterCommand) -> Result<Report> {
    match which {
        CharacterCommand::Lambda(args) => {
            let g = group(args)?;
            class_table(&g, &lambda_main(&g)?)
        }
        CharacterCommand::LambdaOrbit(args) => {
            let g = group(args)?;
            class_table(&g, &lambda_orbit(&g)?)
        }
        CharacterCommand::Pi(args) => {
            let g = group(args)?;
            class_table(&g, &pi_two(&g))
        }
        CharacterCommand::Phi(args) => {
            let g = group(args)?;
            class_table(&g, &phi(&g))
        }
        CharacterCommand::LambdaA { n } => {
            check_n(*n)?;
            let lambda = lambda_typea(*n);
            let inner: Vec<Value> =
                (1..=n / 2).map(|m| json!({"m": m, "values": lambda_typea_inner(*n, m).to_json()})).collect();
            let rows = partition_rows(&lambda.to_json(), "value");
            Ok(Report::new(json!({"n": n, "values": lambda.to_json(), "inner_sums": inner}), rows))
        }
    }
}

fn stembridge(n: usize, eval_q: Option<i64>) -> Result<Report> {
    check_n(n)?;
    let term = stembridge_series(n)?.term(n).clone();
    let values = match eval_q {
        Some(q) => term.eval_q(q).to_json(),
        None => term.to_json(),
    };
    let rows = match eval_q {
        Some(_) => partition_rows(&values, "value"),
        None => {
            let mut rows = vec![vec!["partition".to_string(), "value".to_string()]];
            rows.extend(term.iter().map(|(p, v)| vec![p.to_string(), v.to_string()]));
            rows
        }
    };
    Ok(Report::new(json!({"n": n, "eval_q": eval_q, "values": values}), rows))
}

fn multiplicities_json(f: &CycleTypeFunction<i64>) -> Result<Value> {
    let m = decompose(f)?;
    Ok(Value::Object(m.into_iter().map(|(p, k)| (p.to_string(), json!(k))).collect()))
}

fn decompose_lambda(n: usize) -> Result<Report> {
    check_n(n)?;
    let total = multiplicities_json(&lambda_typea(n))?;
    let mut inner = Vec::new();
    let mut rows = vec![vec!["component".to_string(), "shape".to_string(), "multiplicity".to_string()]];
    if let Value::Object(map) = &total {
        rows.extend(map.iter().map(|(k, v)| vec!["lambda".to_string(), k.clone(), cell(v)]));
    }
    for m in 1..=n / 2 {
        let mult = multiplicities_json(&lambda_typea_inner(n, m))?;
        if let Value::Object(map) = &mult {
            rows.extend(map.iter().map(|(k, v)| vec![format!("m={m}"), k.clone(), cell(v)]));
        }
        inner.push(json!({"m": m, "multiplicities": mult}));
    }
    Ok(Report::new(json!({"n": n, "multiplicities": total, "inner_sums": inner}), rows))
}

fn verify(args: &VerifyArgs) -> Result<Report> {
    let limits = Limits { max_rank: args.max_rank, max_n: args.max_n, degree: args.degree, enable_e6: args.enable_e6 };
    let results = run_suite(args.suite, &limits)?;
    let pass = results.iter().all(|r| r.pass);
    let mut rows = vec![["status", "suite", "check", "parameters", "lhs", "rhs"].map(String::from).to_vec()];
    for r in &results {
        for c in &r.checks {
            let status = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            rows.push(vec![status.into(), r.suite.clone(), c.name.clone(), c.parameters.clone(), cell(&c.lhs), cell(&c.rhs)]);
        }
    }
    let mut report = Report::new(json!({"pass": pass, "suites": results}), rows);
    report.code = if pass { EXIT_OK } else { EXIT_VERIFY_FAILED };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Value {
        let out = run(std::iter::once("realtoric").chain(args.iter().copied()));
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn group_and_euler_json() {
        let g = run_ok(&["group", "--type", "A", "--rank", "2"]);
        assert_eq!(g, json!({"order": 6, "num_classes": 3, "class_sizes": [1, 3, 2], "descent_histogram": [1, 4, 1]}));
        let e = run_ok(&["euler", "--type", "G", "--rank", "2"]);
        assert_eq!(e["chi"], -8);
        assert_eq!(e["consistent"], true);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["realtoric", "bogus"]).code, EXIT_USAGE);
        assert_eq!(run(["realtoric", "group", "--type", "E", "--rank", "6"]).code, EXIT_USAGE);
        assert_eq!(run(["realtoric", "group", "--type", "D", "--rank", "3"]).code, EXIT_USAGE);
        assert_eq!(run(["realtoric", "group", "--type", "A", "--rank", "9"]).code, EXIT_RESOURCE_CAP);
        assert_eq!(run(["realtoric", "verify", "--suite", "nope"]).code, EXIT_USAGE);
        assert_eq!(run(["realtoric", "verify", "--max-n", "11"]).code, EXIT_USAGE);
        assert_eq!(run(["realtoric", "character", "lambda-a", "--n", "0"]).code, EXIT_USAGE);
        assert_eq!(run(["realtoric", "--help"]).code, EXIT_OK);
    }

    #[test]
    fn csv_quoting_and_table_alignment() {
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
        assert_eq!(csv_cell("say \"x\""), "\"say \"\"x\"\"\"");
        let t = table(&[vec!["k".into(), "value".into()], vec!["long key".into(), "1".into()]]);
        assert_eq!(t, "k         value\n--------  -----\nlong key  1\n");
    }
}

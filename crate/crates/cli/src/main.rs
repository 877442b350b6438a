//! `gja`: evaluate expressions and run verification suites over A, H, C or a
//! custom structure-constant algebra.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gja_core::algebra::{load_algebra, AlgebraTable};
use gja_core::axioms::classify_assoc;
use gja_core::bracket::bracket_kind_of;
use gja_core::element::Element;
use gja_core::error::Error;
use gja_core::jacobi::{builtin_instances, commutator_variant, Mode};
use gja_core::parser::{self, ParseErrorKind};
use gja_core::rep::{left_matrix, right_matrix, SquareMatrix};
use gja_core::report::{AxiomReport, Expect, Status, SuiteReport};
use gja_core::verify::{run_suite, Suite};
use gja_core::word::{contract_traced, normalize};

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_ENGINE: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "gja",
    version,
    about = "Exact graded-algebra rewriting and verification"
)]
struct Cli {
    /// Built-in algebra (A, H, C) or path to a JSON algebra document
    #[arg(long, global = true, default_value = "A")]
    algebra: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Fito,
    Foti,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Variant {
    Commutator,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    Left,
    Right,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as `(a*b)*c`, `cbcb` or `<d,a>`
    Eval { expr: String },
    /// Totally contract a word such as `-3/2 cbcb`
    Contract {
        word: String,
        /// Print every intermediate word
        #[arg(long)]
        trace: bool,
    },
    /// Bring a word into normal order
    Normalize { word: String },
    /// Graded bracket <x,y> of two homogeneous elements
    Bracket { x: String, y: String },
    /// Evaluate the eight Jacobi identities of A
    Jacobi {
        #[arg(long, value_enum, default_value_t = ModeArg::Fito)]
        mode: ModeArg,
        /// Replace mixed-parity anticommutators by commutators in the first identity
        #[arg(long, value_enum)]
        variant: Option<Variant>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Associativity class with witnesses
    Classify,
    /// Multiplication table; row x, column y holds x∘y
    Table,
    /// Left/right multiplication matrices of an element
    Rep {
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}` (expected one of {})", names.join(", "))
    })
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_) | Error::Document(_) => EXIT_PARSE,
            _ => EXIT_ENGINE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Rendered output and whether the command's checks all came out as expected.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(EXIT_IO);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Parse failure with the input echoed and the offending span underlined.
fn parse_failure(input: &str, e: gja_core::parser::ParseError) -> Failure {
    let col = input[..e.span.start.min(input.len())].chars().count();
    let width = input
        .get(e.span.clone())
        .map(|t| t.chars().count())
        .unwrap_or(1)
        .max(1);
    Failure {
        code: EXIT_PARSE,
        message: format!(
            "{}\n  {input}\n  {}{}",
            e.message,
            " ".repeat(col),
            "^".repeat(width)
        ),
    }
}

fn load(source: &str) -> Result<Arc<AlgebraTable>, Failure> {
    match source {
        "A" | "H" | "C" => Ok(load_algebra(source)?),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure {
                code: EXIT_IO,
                message: format!("cannot read {path}: {e}"),
            })?;
            Ok(load_algebra(&text)?)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let alg = load(&cli.algebra)?;
    let f = cli.format;
    match &cli.command {
        Command::Eval { expr } => cmd_eval(&alg, expr, f),
        Command::Contract { word, trace } => cmd_contract(&alg, word, *trace, f),
        Command::Normalize { word } => cmd_normalize(&alg, word, f),
        Command::Bracket { x, y } => cmd_bracket(&alg, x, y, f),
        Command::Jacobi { mode, variant } => cmd_jacobi(&alg, *mode, *variant, f),
        Command::Verify { suite, jobs } => Ok(cmd_verify(&alg, *suite, *jobs, f)),
        Command::Classify => Ok(cmd_classify(&alg, f)),
        Command::Table => Ok(Output::ok(cmd_table(&alg, f))),
        Command::Rep { element, side } => cmd_rep(&alg, element, *side, f),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serialises");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn element_rows(x: &Element) -> Vec<Vec<String>> {
    x.terms()
        .map(|(i, c)| vec![x.algebra().generator(i).name.clone(), c.to_string()])
        .collect()
}

fn render_element(x: &Element, f: Format, extra: Value) -> String {
    match f {
        Format::Text => format!("{x}\n"),
        Format::Json => {
            let mut v = json!({ "value": x.to_json() });
            if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                m.extend(e);
            }
            json_text(&v)
        }
        Format::Csv => csv_text(&["generator", "coefficient"], element_rows(x)),
    }
}

fn cmd_eval(alg: &Arc<AlgebraTable>, expr: &str, f: Format) -> Result<Output, Failure> {
    let e = parser::parse(expr, alg).map_err(|e| parse_failure(expr, e))?;
    let r = parser::eval_with_warnings(&e, alg)?;
    for w in &r.warnings {
        eprintln!("warning: {w}");
    }
    Ok(Output::ok(render_element(
        &r.value,
        f,
        json!({ "expr": parser::print(&e, alg), "warnings": r.warnings }),
    )))
}

fn cmd_contract(
    alg: &Arc<AlgebraTable>,
    word: &str,
    trace: bool,
    f: Format,
) -> Result<Output, Failure> {
    let w = parser::parse_word(word, alg).map_err(|e| parse_failure(word, e))?;
    let c = contract_traced(alg, &w)?;
    let chain: Vec<String> = c.chain().iter().map(|w| w.render(alg)).collect();
    let text = match f {
        Format::Text if trace => {
            let mut s = String::new();
            for (k, step) in chain.iter().enumerate() {
                let _ = writeln!(s, "{}{step}", if k == 0 { "  " } else { "→ " });
            }
            let _ = writeln!(s, "= {}", c.value);
            s
        }
        Format::Text => format!("{}\n", c.value),
        Format::Json => {
            let steps: Vec<Value> = c
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "pair": [alg.generator(s.left).name, alg.generator(s.right).name],
                        "table-sign": s.table_sign,
                        "grade-factor": s.grade_factor,
                        "after": s.after.render(alg),
                    })
                })
                .collect();
            json_text(&json!({
                "word": w.render(alg),
                "normalized": c.normalized.render(alg),
                "chain": chain,
                "steps": steps,
                "value": c.value.to_json(),
            }))
        }
        Format::Csv => csv_text(&["generator", "coefficient"], element_rows(&c.value)),
    };
    Ok(Output::ok(text))
}

fn cmd_normalize(alg: &Arc<AlgebraTable>, word: &str, f: Format) -> Result<Output, Failure> {
    let w = parser::parse_word(word, alg).map_err(|e| parse_failure(word, e))?;
    let n = normalize(alg, &w)?;
    let text = match f {
        Format::Text => format!("{}\n", n.render(alg)),
        Format::Json => json_text(&json!({
            "word": w.render(alg),
            "normalized": n.render(alg),
            "coeff": n.coeff.to_string(),
            "letters": n.letters_str(alg),
        })),
        Format::Csv => csv_text(
            &["coeff", "letters"],
            [vec![n.coeff.to_string(), n.letters_str(alg)]],
        ),
    };
    Ok(Output::ok(text))
}

fn cmd_bracket(alg: &Arc<AlgebraTable>, x: &str, y: &str, f: Format) -> Result<Output, Failure> {
    let parse = |s: &str| parser::parse(s, alg).map_err(|e| parse_failure(s, e));
    let x = parser::eval(&parse(x)?, alg)?;
    let y = parser::eval(&parse(y)?, alg)?;
    let kind = bracket_kind_of(&x, &y)?;
    let v = gja_core::bracket::bracket(&x, &y)?;
    let kind = kind.map(|k| format!("{k:?}").to_lowercase());
    Ok(Output::ok(render_element(&v, f, json!({ "kind": kind }))))
}

fn cmd_jacobi(
    alg: &Arc<AlgebraTable>,
    mode: ModeArg,
    variant: Option<Variant>,
    f: Format,
) -> Result<Output, Failure> {
    if !alg.is_quaternion_deformation() {
        return Err(Error::RulesRequireA(alg.name().to_string()).into());
    }
    let mode = match mode {
        ModeArg::Fito => Mode::Fito,
        ModeArg::Foti => Mode::Foti,
    };
    let instances = match variant {
        Some(Variant::Commutator) => vec![commutator_variant()],
        None => builtin_instances(),
    };
    let mut rows = Vec::new();
    for inst in &instances {
        let v = inst.evaluate(mode)?;
        rows.push((inst.label.clone(), inst.render(), v));
    }
    let all_zero = rows.iter().all(|(_, _, v)| v.is_zero());
    let text = match f {
        Format::Text => {
            let width = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0);
            let mut s = String::new();
            for (label, expr, v) in &rows {
                let pad = width - expr.chars().count();
                let mark = if v.is_zero() { "zero" } else { "NONZERO" };
                let v = v.to_string();
                let _ = writeln!(s, "{label:<20} {expr}{} = {v:<10} {mark}", " ".repeat(pad));
            }
            let _ = writeln!(
                s,
                "mode {mode}: {}",
                if all_zero { "all zero" } else { "not all zero" }
            );
            s
        }
        Format::Json => json_text(&json!({
            "mode": mode.to_string(),
            "all-zero": all_zero,
            "identities": rows.iter().map(|(l, e, v)| json!({
                "identity": l,
                "expression": e,
                "value": v.to_json(),
                "zero": v.is_zero(),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_text(
            &["identity", "expression", "value", "zero"],
            rows.iter().map(|(l, e, v)| {
                vec![l.clone(), e.clone(), v.to_string(), v.is_zero().to_string()]
            }),
        ),
    };
    Ok(Output { text, ok: all_zero })
}

fn cmd_verify(alg: &Arc<AlgebraTable>, suite: Suite, jobs: usize, f: Format) -> Output {
    let report = run_suite(suite, alg, jobs);
    let text = match f {
        Format::Json => report.to_json(),
        Format::Csv => csv_text(
            &["id", "status", "expected", "value"],
            report.checks.iter().map(|c| {
                vec![
                    c.id.clone(),
                    c.status.as_str().to_string(),
                    expect_label(c.expect).to_string(),
                    c.value
                        .as_ref()
                        .map(ToString::to_string)
                        .unwrap_or_default(),
                ]
            }),
        ),
        Format::Text => verify_text(&report),
    };
    Output {
        text,
        ok: report.ok(),
    }
}

fn expect_label(e: Expect) -> &'static str {
    match e {
        Expect::Pass => "pass",
        Expect::Fail => "fail",
        Expect::Observe => "observe",
    }
}

fn verify_text(report: &SuiteReport) -> String {
    let mut s = String::new();
    let width = report.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in &report.checks {
        let mut line = format!("{:<13} {:<width$}", c.status.as_str(), c.id);
        if let Some(v) = &c.value {
            let _ = write!(line, "  = {v}");
        }
        if c.expect == Expect::Observe {
            line.push_str("  (observed)");
        } else if !c.ok() {
            line.push_str("  UNEXPECTED");
        }
        let _ = writeln!(s, "{}", line.trim_end());
    }
    let count = |st: Status| report.checks.iter().filter(|c| c.status == st).count();
    let unexpected = report.checks.iter().filter(|c| !c.ok()).count();
    let _ = writeln!(
        s,
        "{} checks on {}: {} pass, {} expected-fail, {} fail; {} unexpected",
        report.checks.len(),
        report.algebra,
        count(Status::Pass),
        count(Status::ExpectedFail),
        count(Status::Fail),
        unexpected
    );
    s
}

fn witness_lines(r: &AxiomReport) -> Vec<String> {
    r.witnesses()
        .map(|w| {
            let mut s = format!("({})", w.tuple.join(","));
            if let (Some(l), Some(rhs)) = (&w.lhs, &w.rhs) {
                let _ = write!(s, "  (xy)z = {l}, delta x(yz) = {rhs}");
            }
            s
        })
        .collect()
}

fn cmd_classify(alg: &Arc<AlgebraTable>, f: Format) -> Output {
    let c = classify_assoc(alg);
    let text = match f {
        Format::Text => {
            let mut s = format!("{}: {}\n", alg.name(), c.class);
            for (label, r) in [
                ("delta=+1", &c.associative),
                ("delta=-1", &c.antiassociative),
            ] {
                let lines = witness_lines(r);
                if lines.is_empty() {
                    let _ = writeln!(s, "{label}: holds on all triples");
                } else {
                    let _ = writeln!(s, "{label}: fails on {} triples", lines.len());
                    for l in lines {
                        let _ = writeln!(s, "  {l}");
                    }
                }
            }
            s
        }
        Format::Json => json_text(&json!({
            "algebra": alg.name(),
            "class": c.class.as_str(),
            "delta+1": serde_json::to_value(&c.associative).expect("serialises"),
            "delta-1": serde_json::to_value(&c.antiassociative).expect("serialises"),
        })),
        Format::Csv => csv_text(
            &["delta", "holds", "witnesses", "first"],
            [("+1", &c.associative), ("-1", &c.antiassociative)].map(|(d, r)| {
                vec![
                    d.to_string(),
                    r.passed().to_string(),
                    r.witnesses().count().to_string(),
                    r.witnesses()
                        .next()
                        .map(|w| w.tuple.join(" "))
                        .unwrap_or_default(),
                ]
            }),
        ),
    };
    Output::ok(text)
}

fn cmd_table(alg: &AlgebraTable, f: Format) -> String {
    let n = alg.dim();
    let names: Vec<&str> = alg.generators().iter().map(|g| g.name.as_str()).collect();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| alg.format_entry(i, j)).collect())
        .collect();
    match f {
        Format::Text => {
            let w = cells
                .iter()
                .flatten()
                .map(|c| c.chars().count())
                .chain(names.iter().map(|s| s.chars().count()))
                .max()
                .unwrap_or(1);
            let label_w = names.iter().map(|s| s.chars().count()).max().unwrap_or(1);
            let mut s = format!("{:>label_w$} |", "∘");
            for name in &names {
                let _ = write!(s, " {name:>w$}");
            }
            s.push('\n');
            let _ = writeln!(s, "{}+{}", "-".repeat(label_w + 1), "-".repeat((w + 1) * n));
            for (i, row) in cells.iter().enumerate() {
                let _ = write!(s, "{:>label_w$} |", names[i]);
                for c in row {
                    let _ = write!(s, " {c:>w$}");
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let doc = alg.to_document();
            json_text(&json!({
                "algebra": alg.name(),
                "generators": names,
                "parity": doc.parity,
                "rows": cells,
            }))
        }
        Format::Csv => {
            let mut header = vec!["∘"];
            header.extend(names.iter().copied());
            csv_text(
                &header,
                cells.iter().enumerate().map(|(i, row)| {
                    let mut r = vec![names[i].to_string()];
                    r.extend(row.iter().cloned());
                    r
                }),
            )
        }
    }
}

fn resolve_element(alg: &Arc<AlgebraTable>, s: &str) -> Result<Element, Failure> {
    match parser::parse(s, alg) {
        Ok(e) => Ok(parser::eval(&e, alg)?),
        Err(e)
            if e.kind == ParseErrorKind::UnknownLetter
                && s.trim().chars().all(char::is_alphanumeric) =>
        {
            Err(Error::UnknownElement(s.trim().to_string()).into())
        }
        Err(e) => Err(parse_failure(s, e)),
    }
}

fn cmd_rep(
    alg: &Arc<AlgebraTable>,
    element: &str,
    side: Side,
    f: Format,
) -> Result<Output, Failure> {
    let x = resolve_element(alg, element)?;
    let mut mats: Vec<(&str, SquareMatrix)> = Vec::new();
    if matches!(side, Side::Left | Side::Both) {
        mats.push(("left", left_matrix(&x)));
    }
    if matches!(side, Side::Right | Side::Both) {
        mats.push(("right", right_matrix(&x)));
    }
    let text = match f {
        Format::Text => {
            let mut s = String::new();
            for (k, (label, m)) in mats.iter().enumerate() {
                if k > 0 {
                    s.push('\n');
                }
                let op = if *label == "left" { "L" } else { "R" };
                let _ = writeln!(s, "{op}({x}):");
                let _ = write!(s, "{m}");
                if !s.ends_with('\n') {
                    s.push('\n');
                }
            }
            s
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("element".into(), json!(x.to_string()));
            obj.insert(
                "basis".into(),
                json!(alg
                    .generators()
                    .iter()
                    .map(|g| g.name.clone())
                    .collect::<Vec<_>>()),
            );
            for (label, m) in &mats {
                obj.insert(
                    (*label).into(),
                    serde_json::to_value(m).expect("serialises"),
                );
            }
            json_text(&Value::Object(obj))
        }
        Format::Csv => csv_text(
            &["side", "row", "entries"],
            mats.iter().flat_map(|(label, m)| {
                m.rows()
                    .into_iter()
                    .enumerate()
                    .map(move |(i, r)| vec![label.to_string(), i.to_string(), r.join(" ")])
            }),
        ),
    };
    Ok(Output::ok(text))
}

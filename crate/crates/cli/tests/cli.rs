use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gja(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_gja"))
        .args(args)
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn json(r: &Run) -> serde_json::Value {
    serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout))
}

#[test]
fn eval_products_and_brackets() {
    for (expr, want) in [
        ("a*b", "b"),
        ("b*c", "-d"),
        ("(b+c)*(b+c)", "0"),
        ("<a,c>", "c - d"),
        ("[a,b]", "0"),
        ("1/2 cbcb", "-1/2a"),
        ("c∘d", "-b"),
    ] {
        let r = gja(&["eval", expr]);
        assert_eq!((r.code, r.stdout.trim()), (0, want), "{expr}: {}", r.stderr);
    }
}

#[test]
fn forced_bracket_of_wrong_kind_warns() {
    let r = gja(&["eval", "{a,b}"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.trim(), "2b");
    assert!(r.stderr.contains("warning"), "{}", r.stderr);
}

#[test]
fn parse_errors_exit_2_with_caret() {
    let r = gja(&["eval", "a*b*c"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("parenthesise"), "{}", r.stderr);
    let caret_line = r.stderr.lines().find(|l| l.trim() == "^").unwrap();
    assert_eq!(caret_line.find('^'), Some(2 + 3));
    assert_eq!(gja(&["eval", "2a+x"]).code, 2);
    assert_eq!(gja(&["eval", "(a"]).code, 2);
    assert_eq!(gja(&["contract", "ab?"]).code, 2);
}

#[test]
fn contract_and_normalize() {
    let r = gja(&["contract", "cbcb", "--trace"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.stdout.lines().map(str::trim).collect();
    assert_eq!(lines, ["-ccbb", "→ +cca", "→ -cc", "→ -a", "= -a"]);
    assert_eq!(gja(&["contract", "bdbd"]).stdout.trim(), "a");
    assert_eq!(gja(&["normalize", "abd"]).stdout.trim(), "-db");
    let v = json(&gja(&["contract", "cbcb", "--format", "json"]));
    assert_eq!(v["value"], serde_json::json!({"a": "-1"}));
}

#[test]
fn jacobi_modes() {
    let fito = gja(&["jacobi"]);
    assert_eq!(fito.code, 0);
    assert_eq!(
        fito.stdout.lines().filter(|l| l.contains(" = 0 ")).count(),
        8
    );
    let foti = gja(&["jacobi", "--mode", "foti"]);
    assert_eq!(foti.code, 1);
    assert_eq!(foti.stdout.matches("NONZERO").count(), 4);
    let variant = gja(&["jacobi", "--variant", "commutator", "--format", "json"]);
    assert_eq!(variant.code, 1);
    assert!(variant.stdout.contains("\"-4\""), "{}", variant.stdout);
    assert_eq!(gja(&["--algebra", "H", "jacobi"]).code, 3);
}

#[test]
fn classify_and_table() {
    let r = gja(&["classify", "--format", "json"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("neither"), "{}", r.stdout);
    assert!(gja(&["--algebra", "H", "classify"])
        .stdout
        .starts_with("H: associative"));
    let csv = gja(&["table", "--format", "csv"]);
    assert_eq!(csv.stdout.lines().nth(2), Some("b,b,-a,-d,c"));
    let h = json(&gja(&["--algebra", "H", "table", "--format", "json"]));
    assert_eq!(h["rows"][1][2], "k");
}

#[test]
fn rep_matrices() {
    let r = gja(&[
        "--algebra",
        "H",
        "rep",
        "--element",
        "i",
        "--side",
        "left",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r);
    let text = v.to_string();
    assert!(text.contains("\"-1\""), "{text}");
    assert_eq!(gja(&["rep", "--element", "q"]).code, 3);
}

#[test]
fn verify_exit_codes_and_formats() {
    let r = gja(&["verify"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.lines().last().unwrap().contains("0 unexpected"));
    let v = json(&gja(&["verify", "--suite", "jacobi", "--format", "json"]));
    assert_eq!(v["suite"], "jacobi");
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["id"].as_str().unwrap().starts_with("jacobi/")));
    let csv = gja(&["verify", "--suite", "table", "--format", "csv"]);
    assert_eq!(csv.code, 0);
    assert!(csv.stdout.starts_with("id,status"), "{}", csv.stdout);
    for alg in ["H", "C"] {
        assert_eq!(gja(&["--algebra", alg, "verify"]).code, 0, "{alg}");
    }
}

#[test]
fn fixtures_and_loading_errors() {
    let t2 = fixture("t2.json");
    assert_eq!(gja(&["--algebra", &t2, "verify"]).code, 0);
    assert!(gja(&["--algebra", &t2, "classify"])
        .stdout
        .starts_with("T2: both"));
    assert_eq!(
        gja(&[
            "--algebra",
            &fixture("zero2.json"),
            "verify",
            "--suite",
            "axioms"
        ])
        .code,
        0
    );
    assert_eq!(
        gja(&["--algebra", &fixture("bad_parity.json"), "table"]).code,
        3
    );
    assert_eq!(
        gja(&["--algebra", "/definitely/missing.json", "table"]).code,
        4
    );
    let dir = std::env::temp_dir().join(format!("gja-cli-{}.json", std::process::id()));
    std::fs::write(&dir, "{ not json").unwrap();
    assert_eq!(gja(&["--algebra", dir.to_str().unwrap(), "table"]).code, 2);
    std::fs::remove_file(dir).unwrap();
}

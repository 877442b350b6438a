//! Verification suites. Each suite is a list of independent sections whose
//! checks are computed in parallel and assembled in a fixed order, so the
//! report does not depend on the thread count.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{quaternions, AlgebraTable, Parity};
use crate::axioms::{
    check_graded_bracket_axioms, check_idempotents_and_units, check_length4_vanish,
    check_nilpotency, check_parity_additivity, classify_assoc, AssocClass, Delta, Nilpotency,
};
use crate::bracket::{bracket, bracket_parity_check, graded_antisymmetry_check};
use crate::compare::compare_structures;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::jacobi::{builtin_instances, commutator_variant};
use crate::parser::eval_str;
use crate::rep::{
    check_even_subalgebra_iso_c, check_left_homomorphism, check_lr_commutation,
    check_right_antihomomorphism, correspondence_diff, left_matrix, right_matrix, signature,
};
use crate::report::{AxiomCheck, AxiomReport, Check, Expect, SuiteReport};
use crate::word::{
    contract, contract_superposition, contract_traced, normalize, Superposition, Word,
    RIGHT_IDENTITY,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Table,
    Words,
    Brackets,
    Jacobi,
    Axioms,
    Quaternion,
    Compare,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Table,
        Suite::Words,
        Suite::Brackets,
        Suite::Jacobi,
        Suite::Axioms,
        Suite::Quaternion,
        Suite::Compare,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Words => "words",
            Suite::Brackets => "brackets",
            Suite::Jacobi => "jacobi",
            Suite::Axioms => "axioms",
            Suite::Quaternion => "quaternion",
            Suite::Compare => "compare",
            Suite::All => "all",
        }
    }

    fn sections(self) -> Vec<(&'static str, Section)> {
        match self {
            Suite::Table => vec![("table", table_checks)],
            Suite::Words => vec![("words", word_goldens), ("words", word_sweeps)],
            Suite::Brackets => vec![("brackets", bracket_checks)],
            Suite::Jacobi => vec![("jacobi", jacobi_checks)],
            Suite::Axioms => vec![
                ("axioms", axiom_assoc),
                ("axioms", axiom_brackets),
                ("axioms", axiom_lemma),
            ],
            Suite::Quaternion => vec![("quaternion", quaternion_checks)],
            Suite::Compare => vec![("compare", compare_checks)],
            Suite::All => Suite::ALL[..7].iter().flat_map(|s| s.sections()).collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownElement(format!("suite {s}")))
    }
}

type Section = fn(&Arc<AlgebraTable>) -> Vec<Check>;

/// Runs a suite on `jobs` worker threads (at least one).
pub fn run_suite(suite: Suite, alg: &Arc<AlgebraTable>, jobs: usize) -> SuiteReport {
    let sections = suite.sections();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let parts: Vec<Vec<Check>> = pool.install(|| {
        sections
            .par_iter()
            .map(|(prefix, section)| {
                section(alg)
                    .into_iter()
                    .map(|mut c| {
                        c.id = format!("{prefix}/{}", c.id);
                        c
                    })
                    .collect()
            })
            .collect()
    });
    SuiteReport {
        suite: suite.name().to_string(),
        checks: parts.into_iter().flatten().collect(),
        algebra: alg.name().to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn same_structure(x: &AlgebraTable, y: &AlgebraTable) -> bool {
    x.dim() == y.dim()
        && x.generators() == y.generators()
        && (0..x.dim()).all(|i| (0..x.dim()).all(|j| x.entry(i, j) == y.entry(i, j)))
}

fn is_h(alg: &AlgebraTable) -> bool {
    same_structure(alg, &quaternions())
}

fn el(alg: &Arc<AlgebraTable>, s: &str) -> Element {
    eval_str(s, alg).unwrap_or_else(|e| panic!("fixed expression {s}: {e}"))
}

fn not_applicable(alg: &AlgebraTable, what: &str) -> Vec<Check> {
    vec![
        Check::new("not-applicable", true, Expect::Observe).with_witness(
            json!({ "detail": format!("{what} are defined for A only, not {}", alg.name()) }),
        ),
    ]
}

/// Turns an axiom check into a suite check; witnesses are kept.
fn from_axiom(c: &AxiomCheck, expect: Expect) -> Check {
    Check::new(c.axiom.clone(), c.passed, expect).with_witnesses(c.witnesses.iter())
}

fn from_report(r: &AxiomReport, expect: impl Fn(&str) -> Expect) -> Vec<Check> {
    r.checks
        .iter()
        .map(|c| from_axiom(c, expect(&c.axiom)))
        .collect()
}

fn equals(id: &str, got: Element, want: Element) -> Check {
    Check::new(id, got == want, Expect::Pass)
        .with_witness(json!({ "expected": want.to_json() }))
        .with_value(got)
}

// ---------------------------------------------------------------- table

const GOLDEN_A: [[&str; 4]; 4] = [
    ["a", "b", "-d", "-c"],
    ["b", "-a", "-d", "c"],
    ["c", "d", "a", "-b"],
    ["d", "-c", "b", "-a"],
];

const GOLDEN_H: [[&str; 4]; 4] = [
    ["1", "i", "j", "k"],
    ["i", "-1", "k", "-j"],
    ["j", "-k", "-1", "i"],
    ["k", "j", "-i", "-1"],
];

fn golden(id: &str, alg: &AlgebraTable, rows: &[[&str; 4]; 4]) -> Check {
    let mut bad = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            let got = alg.format_entry(i, j);
            if got != *want {
                bad.push(json!({
                    "cell": [alg.generator(i).name, alg.generator(j).name],
                    "got": got,
                    "expected": want,
                }));
            }
        }
    }
    Check::new(id, bad.is_empty(), Expect::Pass).with_witnesses(bad)
}

fn table_checks(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    let additive = check_parity_additivity(alg);
    if !alg.is_quaternion_deformation() {
        let expect = if is_h(alg) {
            Expect::Pass
        } else {
            Expect::Observe
        };
        let mut out = from_report(&additive, |_| expect);
        if is_h(alg) {
            out.push(golden("H-golden", alg, &GOLDEN_H));
        }
        return out;
    }
    let g: Vec<Element> = (0..4).map(|i| Element::basis(alg, i)).collect();
    let a = &g[0];
    let mul = |x: &Element, y: &Element| x.product(y).expect("A");
    let mut out = vec![golden("A-golden", alg, &GOLDEN_A)];

    let right: Vec<Value> = g
        .iter()
        .filter(|x| &mul(x, a) != *x)
        .map(|x| json!(x.to_string()))
        .collect();
    out.push(Check::new("right-identity-a", right.is_empty(), Expect::Pass).with_witnesses(right));
    let ac = mul(a, &g[2]);
    out.push(
        Check::new("a-not-left-identity", ac != g[2], Expect::Pass)
            .with_witness(json!({ "product": "a∘c", "value": ac.to_json() }))
            .with_value(ac),
    );

    let squares = [("a", "a"), ("b", "-a"), ("c", "a"), ("d", "-a")];
    let bad: Vec<Value> = squares
        .iter()
        .filter(|(x, want)| el(alg, &format!("{x}*{x}")) != el(alg, want))
        .map(|(x, _)| json!(x))
        .collect();
    out.push(Check::new("square-roots", bad.is_empty(), Expect::Pass).with_witnesses(bad));

    let mut bad = Vec::new();
    for i in 1..4 {
        for j in 1..4 {
            if i != j && mul(&g[i], &g[j]) != mul(&g[j], &g[i]).neg() {
                bad.push(json!([g[i].to_string(), g[j].to_string()]));
            }
        }
    }
    out.push(Check::new("bcd-anticommute", bad.is_empty(), Expect::Pass).with_witnesses(bad));
    out.push(Check::new(
        "ab-commute",
        mul(a, &g[1]) == mul(&g[1], a),
        Expect::Pass,
    ));

    for (id, n) in [("nilpotent-b+c", "b + c"), ("nilpotent-c+d", "c + d")] {
        let x = el(alg, n);
        let sq = mul(&x, &x);
        out.push(
            Check::new(id, sq.is_zero(), Expect::Pass)
                .with_witness(
                    json!({ "element": n, "parity": format!("{:?}", x.parity()).to_lowercase() }),
                )
                .with_value(sq),
        );
    }
    out.extend(from_report(&additive, |_| Expect::Pass));
    out.extend(from_report(&check_even_subalgebra_iso_c(alg), |_| {
        Expect::Pass
    }));
    out.push(golden("H-golden", &quaternions(), &GOLDEN_H));
    out
}

// ---------------------------------------------------------------- words

fn word(alg: &AlgebraTable, s: &str) -> Word {
    Word::from_letters(alg, s).expect("letters of A")
}

fn word_goldens(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    if !alg.is_quaternion_deformation() {
        return not_applicable(alg, "word rules");
    }
    let mut out = Vec::new();
    let traced = contract_traced(alg, &word(alg, "cbcb")).expect("A");
    let chain: Vec<String> = traced.chain().iter().map(|w| w.render(alg)).collect();
    let factors: Vec<Option<i32>> = traced.steps.iter().map(|s| s.grade_factor).collect();
    out.push(
        Check::new(
            "contract-cbcb",
            traced.value == el(alg, "-a") && chain == ["-ccbb", "+cca", "-cc", "-a"],
            Expect::Pass,
        )
        .with_witness(json!({ "chain": chain, "grade-factors": factors }))
        .with_value(traced.value.clone()),
    );
    for (w, want) in [
        ("bdbd", "a"),
        ("dba", "-c"),
        ("abd", "c"),
        ("adb", "-d"),
        ("dab", "-c"),
        ("d", "d"),
    ] {
        let got = contract(alg, &word(alg, w)).expect("A");
        out.push(equals(&format!("contract-{w}"), got, el(alg, want)));
    }
    for (w, want) in [
        ("cbcb", "-ccbb"),
        ("bdbd", "-ddbb"),
        ("dcba", "+dcba"),
        ("abd", "-db"),
        ("adb", "-cb"),
    ] {
        let got = normalize(alg, &word(alg, w)).expect("A").render(alg);
        out.push(
            Check::new(format!("normalize-{w}"), got == want, Expect::Pass)
                .with_witness(json!({ "got": got, "expected": want })),
        );
    }
    let cbcb = contract(alg, &word(alg, "cbcb")).expect("A");
    let bdbd = contract(alg, &word(alg, "bdbd")).expect("A");
    out.push(Check::new(
        "consistent-with-table",
        cbcb == el(alg, "d*d") && bdbd == el(alg, "c*c"),
        Expect::Pass,
    ));
    let mut s = Superposition::new();
    s.push(word(alg, "abd"));
    s.push(word(alg, "adb"));
    out.push(equals(
        "superposition-abd+adb",
        contract_superposition(alg, &s).expect("A"),
        el(alg, "c - d"),
    ));
    out.push(Check::new(
        "empty-word-rejected",
        contract(alg, &Word::new(1, Vec::new())) == Err(Error::EmptyWord),
        Expect::Pass,
    ));
    out
}

/// All words over `letters` of length `1..=max_len`, shortest first.
fn all_words(letters: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Bubble sort into descending order, counting adjacent swaps.
fn bubble_sign(letters: &[usize]) -> i32 {
    let mut v = letters.to_vec();
    let mut swaps = 0;
    for i in 0..v.len() {
        for j in 0..v.len().saturating_sub(1 + i) {
            if v[j] < v[j + 1] {
                v.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Rule 0(a) with the rightmost non-final `a` absorbed first.
fn absorb_rightmost_first(alg: &Arc<AlgebraTable>, w: &[usize]) -> Word {
    let mut coeff = crate::scalar::Scalar::one();
    let mut letters = w.to_vec();
    while let Some(pos) = letters[..letters.len().saturating_sub(1)]
        .iter()
        .rposition(|&l| l == RIGHT_IDENTITY)
    {
        let t = &alg.entry(RIGHT_IDENTITY, letters[pos + 1])[0];
        coeff = coeff * t.coeff.clone();
        letters.splice(pos..pos + 2, [t.index]);
    }
    Word::new(coeff, letters)
}

fn word_sweeps(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    if !alg.is_quaternion_deformation() {
        return Vec::new();
    }
    let words = all_words(&[0, 1, 2, 3], 6);
    let mut out = Vec::new();

    let bad: Vec<Value> = words
        .iter()
        .filter(|l| {
            let n = normalize(alg, &Word::new(1, (*l).clone())).expect("A");
            normalize(alg, &n).expect("A") != n
        })
        .take(5)
        .map(|l| json!(Word::new(1, l.clone()).letters_str(alg)))
        .collect();
    out.push(Check::new("normalize-idempotent", bad.is_empty(), Expect::Pass).with_witnesses(bad));

    let bad: Vec<Value> = all_words(&[1, 2, 3], 7)
        .iter()
        .filter(|l| {
            let n = normalize(alg, &Word::new(1, (*l).clone())).expect("A");
            n.coeff != i64::from(bubble_sign(l)).into()
        })
        .take(5)
        .map(|l| json!(Word::new(1, l.clone()).letters_str(alg)))
        .collect();
    out.push(Check::new("sort-sign-brute-force", bad.is_empty(), Expect::Pass).with_witnesses(bad));

    let mut bad = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let got = contract(alg, &Word::new(1, vec![i, j])).expect("A");
            let want = Element::basis(alg, i)
                .product(&Element::basis(alg, j))
                .expect("A");
            if got != want {
                bad.push(json!(Word::new(1, vec![i, j]).letters_str(alg)));
            }
        }
    }
    out.push(Check::new("length2-matches-table", bad.is_empty(), Expect::Pass).with_witnesses(bad));

    let bad: Vec<Value> = words
        .iter()
        .filter(|l| l.len() >= 3)
        .filter(|l| {
            let c = contract_traced(alg, &Word::new(1, (*l).clone())).expect("A");
            let last = c.steps.len().saturating_sub(1);
            c.steps.iter().enumerate().any(|(k, s)| {
                let mixed = alg.parity(s.left) != alg.parity(s.right);
                let want = if k == last && s.before.len() == 2 {
                    None
                } else {
                    Some(if mixed { -1 } else { 1 })
                };
                s.grade_factor != want
            })
        })
        .take(5)
        .map(|l| json!(Word::new(1, l.clone()).letters_str(alg)))
        .collect();
    out.push(Check::new("grade-factor-per-step", bad.is_empty(), Expect::Pass).with_witnesses(bad));

    let threes: Vec<&Vec<usize>> = words.iter().filter(|l| l.len() == 3).collect();
    let mut bad = Vec::new();
    for (n, x) in threes.iter().enumerate() {
        let y = threes[(n * 7 + 3) % threes.len()];
        let mut s = Superposition::new();
        s.push(Word::new(2, (*x).clone()));
        s.push(Word::new(-3, y.clone()));
        let lhs = contract_superposition(alg, &s).expect("A");
        let rhs = contract(alg, &Word::new(2, (*x).clone()))
            .expect("A")
            .add(&contract(alg, &Word::new(-3, y.clone())).expect("A"))
            .expect("A");
        if lhs != rhs {
            bad.push(json!([
                Word::new(1, (*x).clone()).letters_str(alg),
                Word::new(1, y.clone()).letters_str(alg)
            ]));
        }
    }
    out.push(Check::new("contraction-linear", bad.is_empty(), Expect::Pass).with_witnesses(bad));

    // absorption order is a documented choice; disagreement is reported only
    let mut disagreements = 0usize;
    let mut examples = Vec::new();
    for l in words.iter().filter(|l| l.len() <= 5) {
        let leftmost = normalize(alg, &Word::new(1, l.clone())).expect("A");
        let alt = absorb_rightmost_first(alg, l);
        let alt = normalize(alg, &alt).expect("A");
        if leftmost != alt {
            disagreements += 1;
            if examples.len() < 5 {
                examples.push(json!({
                    "word": Word::new(1, l.clone()).letters_str(alg),
                    "leftmost-first": leftmost.render(alg),
                    "rightmost-first": alt.render(alg),
                }));
            }
        }
    }
    out.push(
        Check::new(
            "absorption-order-independent",
            disagreements == 0,
            Expect::Observe,
        )
        .with_witness(json!({ "disagreements": disagreements }))
        .with_witnesses(examples),
    );
    out
}

// ---------------------------------------------------------------- brackets

fn bracket_checks(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    let graded = check_parity_additivity(alg).passed();
    let expect = if graded {
        Expect::Pass
    } else {
        Expect::Observe
    };
    let mut out = from_report(&bracket_parity_check(alg), |_| expect);
    out.extend(from_report(&graded_antisymmetry_check(alg), |_| expect));

    let even = (0..alg.dim()).find(|&i| alg.parity(i) == Parity::Even);
    let odd = (0..alg.dim()).find(|&i| alg.parity(i) == Parity::Odd);
    if let (Some(e), Some(o)) = (even, odd) {
        let mixed = Element::basis(alg, e)
            .add(&Element::basis(alg, o))
            .expect("same algebra");
        let r = bracket(&mixed, &Element::basis(alg, e));
        out.push(
            Check::new(
                "inhomogeneous-rejected",
                matches!(r, Err(Error::InhomogeneousOperand(_))),
                Expect::Pass,
            )
            .with_witness(json!({ "operand": mixed.to_string() })),
        );
    }

    if alg.is_quaternion_deformation() {
        for (id, expr, want) in [
            ("<d,a>", "<d,a>", "d - c"),
            ("<b,d>", "<b,d>", "0"),
            ("<d,d>", "<d,d>", "-2a"),
            ("<b,b>", "<b,b>", "0"),
            ("<a,c>", "<a,c>", "c - d"),
        ] {
            out.push(equals(id, el(alg, expr), el(alg, want)));
        }
    }
    out
}

// ---------------------------------------------------------------- jacobi

fn jacobi_checks(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    if !alg.is_quaternion_deformation() {
        return not_applicable(alg, "the eight Jacobi identities");
    }
    let mut out = Vec::new();
    let instances = builtin_instances();
    for inst in &instances {
        let v = inst.fito().expect("built-in instances evaluate");
        out.push(
            Check::new(format!("fito/{}", inst.label), v.is_zero(), Expect::Pass)
                .with_witness(json!({ "expression": inst.render() }))
                .with_value(v),
        );
    }
    for inst in &instances {
        let v = inst.foti().expect("built-in instances are over A");
        let expect = if FOTI_NONZERO.contains(&inst.label.as_str()) {
            Expect::Fail
        } else {
            Expect::Pass
        };
        out.push(
            Check::new(format!("foti/{}", inst.label), v.is_zero(), expect)
                .with_witness(json!({ "expansion": inst.foti_expansion().render(alg) }))
                .with_value(v),
        );
    }
    let inner3 = &instances[6];
    let mut expected = Superposition::new();
    for w in ["abd", "adb", "bda", "dab"] {
        expected.push(Word::new(2, word(alg, w).letters));
    }
    out.push(
        Check::new(
            "foti/inner-3-expansion",
            inner3.foti_expansion() == expected,
            Expect::Pass,
        )
        .with_witness(json!({ "expansion": inner3.foti_expansion().render(alg) })),
    );
    out.push(
        equals("foti/inner-3-value", inner3.foti().expect("A"), el(alg, "2c - 2d")).with_witness(json!({
            "note": "evaluating dab as d, as in the printed hand derivation, would give 2c; the rules give dab = -c",
        })),
    );
    let variant = commutator_variant();
    let v = variant.fito().expect("homogeneous");
    out.push(
        Check::new("commutator-variant", v.is_zero(), Expect::Fail)
            .with_witness(json!({ "expression": variant.render() }))
            .with_value(v.clone()),
    );
    out.push(equals("commutator-variant-value", v, el(alg, "-4a")));
    out
}

/// Identities whose foti evaluation is nonzero (regression baseline).
const FOTI_NONZERO: &[&str] = &["outer-3", "outer-4", "inner-3", "inner-4"];

// ---------------------------------------------------------------- axioms

/// Frozen outcomes for the built-in algebras; `None` means "derive the
/// expectation from the associativity class".
fn builtin_expect(alg: &AlgebraTable, id: &str) -> Option<Expect> {
    let table: &[(&str, bool)] = if alg.is_quaternion_deformation() {
        A_AXIOMS
    } else if is_h(alg) {
        H_AXIOMS
    } else {
        return None;
    };
    table
        .iter()
        .find(|(k, _)| *k == id)
        .map(|&(_, holds)| if holds { Expect::Pass } else { Expect::Fail })
}

const A_AXIOMS: &[(&str, bool)] = &[
    ("delta-associativity(+1)", false),
    ("delta-associativity(-1)", false),
    ("bracket(+1)/bracket-parity-closure", true),
    ("bracket(+1)/bracket-graded-antisymmetry", true),
    ("bracket(+1)/graded-jacobi-outer", false),
    ("bracket(+1)/graded-jacobi-inner", false),
    ("bracket(-1)/bracket-parity-closure", true),
    ("bracket(-1)/bracket-graded-antisymmetry", true),
    ("bracket(-1)/graded-jacobi-outer", false),
    ("bracket(-1)/graded-jacobi-inner", false),
    ("length4-vanish", false),
    ("nilpotency", false),
    ("no-idempotent", false),
    ("no-left-identity", true),
    ("no-right-identity", false),
    ("no-two-sided-identity", true),
    ("parity-additivity", true),
];

const H_AXIOMS: &[(&str, bool)] = &[
    ("delta-associativity(+1)", true),
    ("delta-associativity(-1)", false),
    ("bracket(+1)/bracket-parity-closure", true),
    ("bracket(+1)/bracket-graded-antisymmetry", true),
    ("bracket(+1)/graded-jacobi-outer", true),
    ("bracket(+1)/graded-jacobi-inner", true),
    ("bracket(-1)/bracket-parity-closure", true),
    ("bracket(-1)/bracket-graded-antisymmetry", true),
    ("bracket(-1)/graded-jacobi-outer", false),
    ("bracket(-1)/graded-jacobi-inner", false),
    ("length4-vanish", false),
    ("nilpotency", false),
    ("no-idempotent", false),
    ("no-left-identity", false),
    ("no-right-identity", false),
    ("no-two-sided-identity", false),
    ("parity-additivity", true),
];

fn theory_expect(class: AssocClass, graded: bool, id: &str) -> Expect {
    let assoc = class.is_associative();
    let anti = class.is_antiassociative();
    let when = |b: bool| if b { Expect::Pass } else { Expect::Observe };
    match id {
        "delta-associativity(+1)" => {
            if assoc {
                Expect::Pass
            } else {
                Expect::Fail
            }
        }
        "delta-associativity(-1)" => {
            if anti {
                Expect::Pass
            } else {
                Expect::Fail
            }
        }
        _ if id.starts_with("bracket(+1)/") => when(assoc && graded),
        _ if id.starts_with("bracket(-1)/") => when(anti && graded),
        "length4-vanish" | "nilpotency" | "no-idempotent" | "no-two-sided-identity" => when(anti),
        _ => Expect::Observe,
    }
}

fn axiom_expect(alg: &AlgebraTable, id: &str) -> Expect {
    builtin_expect(alg, id).unwrap_or_else(|| {
        let alg = Arc::new(alg.clone());
        let class = classify_assoc(&alg).class;
        let graded = check_parity_additivity(&alg).passed();
        theory_expect(class, graded, id)
    })
}

fn axiom_assoc(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    let class = classify_assoc(alg);
    let mut out = Vec::new();
    for r in [&class.associative, &class.antiassociative] {
        out.extend(from_report(r, |id| axiom_expect(alg, id)));
    }
    out.push(
        Check::new("classification", true, Expect::Observe)
            .with_witness(json!({ "class": class.class.as_str() })),
    );
    out.extend(from_report(&check_parity_additivity(alg), |id| {
        axiom_expect(alg, id)
    }));
    out
}

fn axiom_brackets(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    let mut out = Vec::new();
    for delta in [Delta::Plus, Delta::Minus] {
        let r = check_graded_bracket_axioms(alg, delta);
        for c in &r.checks {
            let id = format!("bracket({delta})/{}", c.axiom);
            let mut check = from_axiom(c, axiom_expect(alg, &id));
            check.id = id;
            out.push(check);
        }
    }
    out
}

fn axiom_lemma(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    let mut out = from_report(&check_length4_vanish(alg), |id| axiom_expect(alg, id));
    let nil = check_nilpotency(alg, 6);
    let holds = matches!(nil, Nilpotency::Index(k) if k <= 3);
    out.push(
        Check::new("nilpotency", holds, axiom_expect(alg, "nilpotency"))
            .with_witness(json!({ "index": nil.to_string(), "bound": 3 })),
    );
    let units = check_idempotents_and_units(alg);
    out.extend(from_report(&units, |id| axiom_expect(alg, id)));
    if let Some(s) = units.summary {
        out.push(
            Check::new("unit-search-scope", true, Expect::Observe)
                .with_witness(json!({ "detail": s })),
        );
    }
    out
}

// ---------------------------------------------------------------- quaternion

fn quaternion_checks(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    let class = classify_assoc(alg).class;
    let is_a = alg.is_quaternion_deformation();
    let expect = |id: &str| -> Expect {
        match id {
            "lr-commutator-vanishes" if class.is_associative() => Expect::Pass,
            "lr-anticommutator-vanishes" if class.is_antiassociative() => Expect::Pass,
            "left-homomorphism" | "right-antihomomorphism" if class.is_associative() => {
                Expect::Pass
            }
            "lr-commutator-vanishes"
            | "lr-anticommutator-vanishes"
            | "left-homomorphism"
            | "right-antihomomorphism"
                if is_a =>
            {
                Expect::Fail
            }
            _ => Expect::Observe,
        }
    };
    let mut out = Vec::new();
    let mut lr = check_lr_commutation(alg);
    let mut hom = check_left_homomorphism(alg);
    let mut anti = check_right_antihomomorphism(alg);
    // one witness is enough for the regression baseline of a known failure
    for r in [&mut lr, &mut hom, &mut anti] {
        if is_a {
            for c in &mut r.checks {
                c.witnesses.truncate(1);
            }
        }
    }
    out.extend(from_report(&lr, expect));
    out.extend(from_report(&hom, expect));
    out.extend(from_report(&anti, expect));

    let mut bad = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let (x, y) = (Element::basis(alg, i), Element::basis(alg, j));
            let xy = x.product(&y).expect("same algebra").coordinates();
            let yx = y.product(&x).expect("same algebra").coordinates();
            if left_matrix(&x).apply(&y.coordinates()) != xy
                || right_matrix(&x).apply(&y.coordinates()) != yx
            {
                bad.push(json!([alg.generator(i).name, alg.generator(j).name]));
            }
        }
    }
    out.push(
        Check::new("matrices-act-by-product", bad.is_empty(), Expect::Pass).with_witnesses(bad),
    );

    let baseline: Option<(&[i8], i64)> = if is_a {
        Some((&[1, -1, 1, -1], 0))
    } else if is_h(alg) {
        Some((&[1, -1, -1, -1], -2))
    } else {
        None
    };
    out.push(match (signature(alg), baseline) {
        (Ok(s), Some((signs, trace))) => Check::new(
            "signature",
            s.signs == signs && s.trace == trace,
            Expect::Pass,
        )
        .with_witness(json!({ "signature": s.to_string() })),
        (Ok(s), None) => Check::new("signature", true, Expect::Observe)
            .with_witness(json!({ "signature": s.to_string() })),
        (Err(e), _) => Check::new("signature", false, Expect::Observe)
            .with_witness(json!({ "detail": e.to_string() })),
    });

    if is_a {
        out.extend(from_report(&check_even_subalgebra_iso_c(alg), |_| {
            Expect::Pass
        }));
        let h = quaternions();
        let diff = correspondence_diff(alg, &h).expect("both four dimensional");
        let cells: Vec<(String, String)> = diff
            .iter()
            .map(|d| (d.row.clone(), d.col.clone()))
            .collect();
        let want: Vec<(String, String)> = CORRESPONDENCE_DIFF
            .iter()
            .map(|(r, c)| (r.to_string(), c.to_string()))
            .collect();
        out.push(
            Check::new("correspondence-diff-H", cells == want, Expect::Pass)
                .with_witnesses(diff.iter()),
        );
        let hc = check_lr_commutation(&h);
        out.push(
            from_axiom(
                hc.check("lr-commutator-vanishes").expect("present"),
                Expect::Pass,
            )
            .renamed("H-lr-commutator-vanishes"),
        );
        out.push(
            from_axiom(&check_left_homomorphism(&h).checks[0], Expect::Pass)
                .renamed("H-left-homomorphism"),
        );
        let sh = signature(&h).expect("H has a signature");
        out.push(
            Check::new(
                "H-signature",
                sh.signs == [1, -1, -1, -1] && sh.trace == -2,
                Expect::Pass,
            )
            .with_witness(json!({ "signature": sh.to_string() })),
        );
    }
    out
}

/// Cells where A differs from H under a↔1, b↔i, c↔j, d↔k.
const CORRESPONDENCE_DIFF: &[(&str, &str)] = &[
    ("a", "c"),
    ("a", "d"),
    ("b", "c"),
    ("b", "d"),
    ("c", "b"),
    ("c", "c"),
    ("c", "d"),
    ("d", "b"),
    ("d", "c"),
];

// ---------------------------------------------------------------- compare

fn compare_checks(alg: &Arc<AlgebraTable>) -> Vec<Check> {
    if !alg.is_quaternion_deformation() {
        return not_applicable(alg, "the structural comparison findings");
    }
    compare_structures()
        .findings
        .into_iter()
        .map(|f| {
            let expect = if f.id == "vi-beta-no-idempotents" {
                Expect::Fail
            } else {
                Expect::Pass
            };
            let mut c = Check::new(f.id, f.holds, expect)
                .with_witness(json!({ "claim": f.claim }))
                .with_witnesses(f.witnesses);
            c.value = f.value;
            c
        })
        .collect()
}

trait Renamed {
    fn renamed(self, id: &str) -> Self;
}

impl Renamed for Check {
    fn renamed(mut self, id: &str) -> Check {
        self.id = id.to_string();
        self
    }
}

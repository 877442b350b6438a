//! Generic δ-Jordan-Lie axiom checks over arbitrary structure-constant
//! algebras.
//!
//! Every check quantifies over basis tuples; by multilinearity that is the
//! same as quantifying over all homogeneous elements. Witnesses come out in
//! lexicographic order of their basis indices.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraTable, Parity};
use crate::element::{Element, ElementParity};
use crate::report::{AxiomCheck, AxiomReport, Witness};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Delta {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Delta {
    pub fn value(self) -> i64 {
        match self {
            Delta::Plus => 1,
            Delta::Minus => -1,
        }
    }

    pub fn scalar(self) -> Scalar {
        Scalar::from_int(self.value())
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Delta::Plus => "+1",
            Delta::Minus => "-1",
        })
    }
}

fn basis(alg: &Arc<AlgebraTable>) -> Vec<Element> {
    (0..alg.dim()).map(|i| Element::basis(alg, i)).collect()
}

fn mul(x: &Element, y: &Element) -> Element {
    x.product(y).expect("same algebra")
}

fn add(x: &Element, y: &Element) -> Element {
    x.add(y).expect("same algebra")
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k])))
}

/// `(x∘y)∘z = δ · x∘(y∘z)` over all basis triples.
pub fn check_delta_assoc(alg: &Arc<AlgebraTable>, delta: Delta) -> AxiomReport {
    let g = basis(alg);
    let d = delta.scalar();
    let violations = triples(alg.dim())
        .filter_map(|[i, j, k]| {
            let lhs = mul(&mul(&g[i], &g[j]), &g[k]);
            let rhs = mul(&g[i], &mul(&g[j], &g[k])).scale(&d);
            (lhs != rhs).then(|| Witness::new(alg, &[i, j, k]).sides(lhs, rhs))
        })
        .collect();
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations(
            format!("delta-associativity({delta})"),
            violations,
        )],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AssocClass {
    Associative,
    Antiassociative,
    Both,
    Neither,
}

impl AssocClass {
    pub fn as_str(self) -> &'static str {
        match self {
            AssocClass::Associative => "associative",
            AssocClass::Antiassociative => "antiassociative",
            AssocClass::Both => "both",
            AssocClass::Neither => "neither",
        }
    }

    pub fn is_associative(self) -> bool {
        matches!(self, AssocClass::Associative | AssocClass::Both)
    }

    pub fn is_antiassociative(self) -> bool {
        matches!(self, AssocClass::Antiassociative | AssocClass::Both)
    }
}

impl fmt::Display for AssocClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: AssocClass,
    pub associative: AxiomReport,
    pub antiassociative: AxiomReport,
}

pub fn classify_assoc(alg: &Arc<AlgebraTable>) -> Classification {
    let associative = check_delta_assoc(alg, Delta::Plus);
    let antiassociative = check_delta_assoc(alg, Delta::Minus);
    let class = match (associative.passed(), antiassociative.passed()) {
        (true, true) => AssocClass::Both,
        (true, false) => AssocClass::Associative,
        (false, true) => AssocClass::Antiassociative,
        (false, false) => AssocClass::Neither,
    };
    Classification {
        class,
        associative,
        antiassociative,
    }
}

/// `<x,y> = xy - δ(-1)^{π(x)π(y)} yx`, extended bilinearly from the basis.
pub fn graded_bracket(alg: &Arc<AlgebraTable>, delta: Delta, x: &Element, y: &Element) -> Element {
    let g = basis(alg);
    let mut out = Element::zero(alg);
    for (i, xi) in x.terms() {
        for (j, yj) in y.terms() {
            let sign = delta.value() * alg.parity(i).koszul_sign(alg.parity(j));
            let b = mul(&g[i], &g[j])
                .sub(&mul(&g[j], &g[i]).scale(&sign.into()))
                .expect("same algebra");
            out = add(&out, &b.scale(&(xi * yj)));
        }
    }
    out
}

/// Parity closure, graded antisymmetry and both graded Jacobi forms (with
/// their external `(-1)^{xz}`, `(-1)^{yx}`, `(-1)^{zy}` prefactors).
pub fn check_graded_bracket_axioms(alg: &Arc<AlgebraTable>, delta: Delta) -> AxiomReport {
    let g = basis(alg);
    let n = alg.dim();
    let br = |x: &Element, y: &Element| graded_bracket(alg, delta, x, y);
    let pi = |i: usize| alg.parity(i);
    let sgn = |i: usize, j: usize| Scalar::from_int(pi(i).koszul_sign(pi(j)));

    let mut closure = Vec::new();
    let mut antisym = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let xy = br(&g[i], &g[j]);
            let expected = pi(i) + pi(j);
            let ok = match xy.parity() {
                ElementParity::Zero => true,
                p => p.homogeneous() == Some(expected),
            };
            if !ok {
                closure.push(Witness::new(alg, &[i, j]).value(xy.clone()));
            }
            let factor = -delta.value() * pi(i).koszul_sign(pi(j));
            let rhs = br(&g[j], &g[i]).scale(&factor.into());
            if xy != rhs {
                antisym.push(Witness::new(alg, &[i, j]).sides(xy, rhs));
            }
        }
    }

    let zero = Element::zero(alg);
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for [x, y, z] in triples(n) {
        let lhs = [
            br(&br(&g[x], &g[y]), &g[z]).scale(&sgn(x, z)),
            br(&br(&g[y], &g[z]), &g[x]).scale(&sgn(y, x)),
            br(&br(&g[z], &g[x]), &g[y]).scale(&sgn(z, y)),
        ]
        .iter()
        .fold(zero.clone(), |acc, t| add(&acc, t));
        if !lhs.is_zero() {
            outer.push(Witness::new(alg, &[x, y, z]).sides(lhs, zero.clone()));
        }
        let rhs = [
            br(&g[x], &br(&g[y], &g[z])).scale(&sgn(x, z)),
            br(&g[y], &br(&g[z], &g[x])).scale(&sgn(y, x)),
            br(&g[z], &br(&g[x], &g[y])).scale(&sgn(z, y)),
        ]
        .iter()
        .fold(zero.clone(), |acc, t| add(&acc, t));
        if !rhs.is_zero() {
            inner.push(Witness::new(alg, &[x, y, z]).sides(rhs, zero.clone()));
        }
    }

    AxiomReport::new(
        alg,
        vec![
            AxiomCheck::from_violations("bracket-parity-closure", closure),
            AxiomCheck::from_violations("bracket-graded-antisymmetry", antisym),
            AxiomCheck::from_violations("graded-jacobi-outer", outer),
            AxiomCheck::from_violations("graded-jacobi-inner", inner),
        ],
    )
    .with_summary(format!("delta = {delta}"))
}

/// A full binary bracketing of a product of `n` factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Bracketing {
    Factor,
    Product(Box<Bracketing>, Box<Bracketing>),
}

impl Bracketing {
    pub fn arity(&self) -> usize {
        match self {
            Bracketing::Factor => 1,
            Bracketing::Product(l, r) => l.arity() + r.arity(),
        }
    }

    /// Every bracketing of `n ≥ 1` factors (Catalan many).
    pub fn all(n: usize) -> Vec<Bracketing> {
        assert!(n >= 1);
        if n == 1 {
            return vec![Bracketing::Factor];
        }
        let mut out = Vec::new();
        for k in 1..n {
            for l in Bracketing::all(k) {
                for r in Bracketing::all(n - k) {
                    out.push(Bracketing::Product(Box::new(l.clone()), Box::new(r)));
                }
            }
        }
        out
    }

    /// `((x1 x2) x3) … xn`
    pub fn left_nested(n: usize) -> Bracketing {
        (1..n).fold(Bracketing::Factor, |acc, _| {
            Bracketing::Product(Box::new(acc), Box::new(Bracketing::Factor))
        })
    }

    /// `x1 (x2 (… xn))`
    pub fn right_nested(n: usize) -> Bracketing {
        (1..n).fold(Bracketing::Factor, |acc, _| {
            Bracketing::Product(Box::new(Bracketing::Factor), Box::new(acc))
        })
    }

    pub fn evaluate(&self, factors: &[Element]) -> Element {
        assert_eq!(factors.len(), self.arity());
        match self {
            Bracketing::Factor => factors[0].clone(),
            Bracketing::Product(l, r) => {
                let k = l.arity();
                mul(&l.evaluate(&factors[..k]), &r.evaluate(&factors[k..]))
            }
        }
    }

    /// E.g. `((cb)c)b`.
    pub fn render(&self, names: &[&str]) -> String {
        match self {
            Bracketing::Factor => names[0].to_string(),
            Bracketing::Product(l, r) => {
                let k = l.arity();
                let wrap = |b: &Bracketing, ns: &[&str]| match b {
                    Bracketing::Factor => b.render(ns),
                    _ => format!("({})", b.render(ns)),
                };
                format!("{}{}", wrap(l, &names[..k]), wrap(r, &names[k..]))
            }
        }
    }
}

fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(k as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        t
    })
}

fn bracketings_for(k: usize) -> Vec<Bracketing> {
    if k <= 4 {
        Bracketing::all(k)
    } else {
        vec![Bracketing::left_nested(k), Bracketing::right_nested(k)]
    }
}

fn product_witness(
    alg: &Arc<AlgebraTable>,
    t: &[usize],
    b: &Bracketing,
    value: Element,
) -> Witness {
    let names: Vec<&str> = t.iter().map(|&i| alg.generator(i).name.as_str()).collect();
    Witness::new(alg, t).detail(b.render(&names)).value(value)
}

/// Every product of four basis elements vanishes, under all five bracketings.
pub fn check_length4_vanish(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let g = basis(alg);
    let shapes = Bracketing::all(4);
    let mut violations = Vec::new();
    for t in tuples(alg.dim(), 4) {
        let factors: Vec<Element> = t.iter().map(|&i| g[i].clone()).collect();
        for b in &shapes {
            let v = b.evaluate(&factors);
            if !v.is_zero() {
                violations.push(product_witness(alg, &t, b, v));
            }
        }
    }
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations("length4-vanish", violations)],
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Nilpotency {
    /// Smallest `k` such that every `k`-fold product vanishes.
    Index(usize),
    /// Some product of every length `k ≤ max_k` is nonzero.
    NoneUpTo(usize),
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Index(k) => write!(f, "{k}"),
            Nilpotency::NoneUpTo(k) => write!(f, "none <= {k}"),
        }
    }
}

/// Smallest `k` in `2..=max_k` for which all `k`-fold basis products vanish.
/// Lengths up to four use every bracketing; longer ones only the left- and
/// right-nested ones.
pub fn check_nilpotency(alg: &Arc<AlgebraTable>, max_k: usize) -> Nilpotency {
    assert!(max_k >= 2, "max_k must be at least 2");
    let g = basis(alg);
    for k in 2..=max_k {
        let shapes = bracketings_for(k);
        let all_zero = tuples(alg.dim(), k).all(|t| {
            let factors: Vec<Element> = t.iter().map(|&i| g[i].clone()).collect();
            shapes.iter().all(|b| b.evaluate(&factors).is_zero())
        });
        if all_zero {
            return Nilpotency::Index(k);
        }
    }
    Nilpotency::NoneUpTo(max_k)
}

/// Idempotents among `±g_i` and one-sided or two-sided identities among the
/// basis generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitScan {
    pub idempotents: Vec<Element>,
    pub left_identities: Vec<String>,
    pub right_identities: Vec<String>,
    pub two_sided_identities: Vec<String>,
}

pub const UNIT_SEARCH_SCOPE: &str = "search scope: +/- basis elements";

pub fn scan_idempotents_and_units(alg: &Arc<AlgebraTable>) -> UnitScan {
    let g = basis(alg);
    let mut idempotents = Vec::new();
    for x in &g {
        for cand in [x.clone(), x.neg()] {
            if mul(&cand, &cand) == cand {
                idempotents.push(cand);
            }
        }
    }
    let name = |i: usize| alg.generator(i).name.clone();
    let is_left = |e: usize| g.iter().all(|y| &mul(&g[e], y) == y);
    let is_right = |e: usize| g.iter().all(|y| &mul(y, &g[e]) == y);
    let n = alg.dim();
    UnitScan {
        idempotents,
        left_identities: (0..n).filter(|&e| is_left(e)).map(name).collect(),
        right_identities: (0..n).filter(|&e| is_right(e)).map(name).collect(),
        two_sided_identities: (0..n)
            .filter(|&e| is_left(e) && is_right(e))
            .map(name)
            .collect(),
    }
}

/// Each check passes when nothing is found; what is found is listed as
/// witnesses.
pub fn check_idempotents_and_units(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let scan = scan_idempotents_and_units(alg);
    let named = |v: &[String]| {
        v.iter()
            .map(|n| Witness::named(vec![n.clone()]))
            .collect::<Vec<_>>()
    };
    AxiomReport::new(
        alg,
        vec![
            AxiomCheck::from_violations(
                "no-idempotent",
                scan.idempotents
                    .iter()
                    .map(|e| Witness::named(vec![e.to_string()]).value(e.clone()))
                    .collect(),
            ),
            AxiomCheck::from_violations("no-left-identity", named(&scan.left_identities)),
            AxiomCheck::from_violations("no-right-identity", named(&scan.right_identities)),
            AxiomCheck::from_violations("no-two-sided-identity", named(&scan.two_sided_identities)),
        ],
    )
    .with_summary(UNIT_SEARCH_SCOPE)
}

/// Parity additivity of the product: every term of `g_i ∘ g_j` has parity
/// `π(g_i) + π(g_j)`.
pub fn check_parity_additivity(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let mut violations = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let expected: Parity = alg.parity(i) + alg.parity(j);
            if alg
                .entry(i, j)
                .iter()
                .any(|t| alg.parity(t.index) != expected)
            {
                let v = mul(&Element::basis(alg, i), &Element::basis(alg, j));
                violations.push(Witness::new(alg, &[i, j]).value(v));
            }
        }
    }
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations("parity-additivity", violations)],
    )
}

use std::sync::Arc;

use gja_core::algebra::{quaternion_deformation, quaternions, AlgebraTable, Parity};
use gja_core::bracket::bracket;
use gja_core::element::{Element, ElementParity};
use gja_core::parser::{eval, parse, print, BracketSyntax, Expr, ExprKind, ParseErrorKind};
use gja_core::rep::{left_matrix, right_matrix};
use gja_core::scalar::Scalar;
use gja_core::word::{contract, normalize, Word};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::new(n, d))
}

fn coords(dim: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(), dim)
}

fn element(alg: &Arc<AlgebraTable>, c: &[Scalar]) -> Element {
    Element::from_terms(alg, c.iter().cloned().enumerate())
}

fn homogeneous(alg: &Arc<AlgebraTable>, c: &[Scalar], parity: Parity) -> Element {
    Element::from_terms(
        alg,
        c.iter()
            .cloned()
            .enumerate()
            .filter(|(i, _)| alg.parity(*i) == parity),
    )
}

fn parity_strategy() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}

fn letters(max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..4, 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_is_bilinear(x in coords(4), y in coords(4), z in coords(4), k in scalar(), h in any::<bool>()) {
        let alg = if h { quaternions() } else { quaternion_deformation() };
        let (x, y, z) = (element(&alg, &x), element(&alg, &y), element(&alg, &z));
        let xy = x.add(&y.scale(&k)).unwrap();
        let left = xy.product(&z).unwrap();
        let want = x.product(&z).unwrap().add(&y.product(&z).unwrap().scale(&k)).unwrap();
        prop_assert_eq!(left, want);
        let right = z.product(&xy).unwrap();
        let want = z.product(&x).unwrap().add(&z.product(&y).unwrap().scale(&k)).unwrap();
        prop_assert_eq!(right, want);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(w in letters(10), k in scalar()) {
        let alg = quaternion_deformation();
        let word = Word::new(1, w.clone());
        let n = normalize(&alg, &word).unwrap();
        prop_assert_eq!(normalize(&alg, &n).unwrap(), n.clone());
        let scaled = normalize(&alg, &Word::new(k.clone(), w)).unwrap();
        prop_assert_eq!(scaled.letters, n.letters);
        prop_assert_eq!(scaled.coeff, &k * &n.coeff);
    }

    #[test]
    fn sort_sign_counts_inversions(w in prop::collection::vec(1usize..4, 1..=10)) {
        let alg = quaternion_deformation();
        let n = normalize(&alg, &Word::new(1, w.clone())).unwrap();
        let inversions = (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] < w[j])
            .count();
        let mut sorted = w.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(n.letters, sorted);
        prop_assert_eq!(n.coeff, Scalar::from_int(if inversions % 2 == 0 { 1 } else { -1 }));
    }

    #[test]
    fn contraction_is_linear_and_respects_normal_form(w in letters(8), k in scalar()) {
        let alg = quaternion_deformation();
        let word = Word::new(1, w.clone());
        let v = contract(&alg, &word).unwrap();
        prop_assert_eq!(contract(&alg, &Word::new(k.clone(), w)).unwrap(), v.scale(&k));
        prop_assert_eq!(contract(&alg, &normalize(&alg, &word).unwrap()).unwrap(), v.clone());
        // a word always contracts to a signed generator
        prop_assert_eq!(v.support_len(), 1);
    }

    #[test]
    fn contraction_parity_is_sum_of_letter_parities(w in letters(8)) {
        let alg = quaternion_deformation();
        let odd = w.iter().filter(|&&i| alg.parity(i) == Parity::Odd).count() % 2 == 1;
        let v = contract(&alg, &Word::new(1, w)).unwrap();
        let want = if odd { Parity::Odd } else { Parity::Even };
        prop_assert_eq!(v.parity().homogeneous(), Some(want));
    }

    #[test]
    fn length_two_contraction_is_the_table(x in 0usize..4, y in 0usize..4) {
        let alg = quaternion_deformation();
        let v = contract(&alg, &Word::new(1, vec![x, y])).unwrap();
        prop_assert_eq!(v, Element::basis(&alg, x).product(&Element::basis(&alg, y)).unwrap());
    }

    #[test]
    fn parity_is_additive(x in coords(4), y in coords(4), p in parity_strategy(), q in parity_strategy()) {
        let alg = quaternion_deformation();
        let (x, y) = (homogeneous(&alg, &x, p), homogeneous(&alg, &y, q));
        let v = x.product(&y).unwrap();
        if !v.is_zero() {
            prop_assert_eq!(v.parity().homogeneous(), Some(p + q));
        }
    }

    #[test]
    fn bracket_is_bilinear_antisymmetric_and_closed(
        x1 in coords(4), x2 in coords(4), y in coords(4), k in scalar(),
        p in parity_strategy(), q in parity_strategy(),
    ) {
        let alg = quaternion_deformation();
        let (x1, x2, y) = (homogeneous(&alg, &x1, p), homogeneous(&alg, &x2, p), homogeneous(&alg, &y, q));
        let x = x1.add(&x2.scale(&k)).unwrap();
        let got = bracket(&x, &y).unwrap();
        let want = bracket(&x1, &y).unwrap().add(&bracket(&x2, &y).unwrap().scale(&k)).unwrap();
        prop_assert_eq!(&got, &want);
        let swapped = bracket(&y, &x).unwrap();
        let commutator = p == Parity::Even && q == Parity::Even;
        let expected_swap = if commutator { got.neg() } else { got.clone() };
        if !x.is_zero() && !y.is_zero() {
            prop_assert_eq!(swapped, expected_swap);
            if !got.is_zero() {
                prop_assert_eq!(got.parity().homogeneous(), Some(p + q));
            }
        }
    }

    #[test]
    fn multiplication_operators(x in coords(4), y in coords(4), v in coords(4), k in scalar(), h in any::<bool>()) {
        let alg = if h { quaternions() } else { quaternion_deformation() };
        let (xe, ye, ve) = (element(&alg, &x), element(&alg, &y), element(&alg, &v));
        prop_assert_eq!(left_matrix(&xe).apply(&v), xe.product(&ve).unwrap().coordinates());
        prop_assert_eq!(right_matrix(&xe).apply(&v), ve.product(&xe).unwrap().coordinates());
        let comb = xe.add(&ye.scale(&k)).unwrap();
        prop_assert_eq!(left_matrix(&comb), left_matrix(&xe).add(&left_matrix(&ye).scale(&k)));
        prop_assert_eq!(right_matrix(&comb), right_matrix(&xe).add(&right_matrix(&ye).scale(&k)));
    }
}

fn node(kind: ExprKind) -> Expr {
    Expr { kind, span: 0..0 }
}

/// Syntax trees in the shape the parser produces.
fn expr() -> impl Strategy<Value = Expr> {
    let nonneg = (0i64..=9, 1i64..=3).prop_map(|(n, d)| Scalar::new(n, d));
    let leaf = prop_oneof![
        (0usize..4).prop_map(|i| node(ExprKind::Generator(i))),
        prop::collection::vec(0usize..4, 2..=5).prop_map(|w| node(ExprKind::WordLiteral(w))),
        nonneg
            .clone()
            .prop_map(|k| node(ExprKind::ScalarLiteral(k))),
    ];
    leaf.prop_recursive(4, 32, 3, move |inner| {
        let syntax = prop_oneof![
            Just(BracketSyntax::Square),
            Just(BracketSyntax::Brace),
            Just(BracketSyntax::Angle)
        ];
        let scaled_body = inner.clone().prop_filter("scalar body", |e| {
            !matches!(e.kind, ExprKind::ScalarLiteral(_))
        });
        prop_oneof![
            (syntax, inner.clone(), inner.clone()).prop_map(|(s, l, r)| node(ExprKind::Bracket(
                s,
                Box::new(l),
                Box::new(r)
            ))),
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| node(ExprKind::BinaryProduct(Box::new(l), Box::new(r)))),
            (nonneg.clone(), scaled_body).prop_map(|(k, e)| node(ExprKind::Scaled(k, Box::new(e)))),
            prop::collection::vec((any::<bool>(), inner), 1..=3)
                .prop_filter("single positive summand", |t| t.len() > 1 || t[0].0)
                .prop_map(|t| node(ExprKind::Sum(t))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_then_parse_round_trips(e in expr()) {
        let alg = quaternion_deformation();
        let text = print(&e, &alg);
        let back = parse(&text, &alg).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(print(&back, &alg), text);
        match (eval(&e, &alg), eval(&back, &alg)) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            other => prop_assert!(false, "evaluation differs: {:?}", other),
        }
    }

    #[test]
    fn error_points_at_inserted_character(e in expr(), at in any::<prop::sample::Index>(), bad in prop_oneof![Just('#'), Just('x'), Just('?')]) {
        let alg = quaternion_deformation();
        let text = print(&e, &alg);
        let boundaries: Vec<usize> = text.char_indices().map(|(i, _)| i).chain([text.len()]).collect();
        let pos = boundaries[at.index(boundaries.len())];
        let mut corrupted = text.clone();
        corrupted.insert(pos, bad);
        let err = parse(&corrupted, &alg).expect_err("corrupted input parses");
        prop_assert_eq!(err.span.start, pos, "{}", corrupted);
        let want = if bad == 'x' { ParseErrorKind::UnknownLetter } else { ParseErrorKind::Syntax };
        prop_assert_eq!(err.kind, want);
    }
}

#[test]
fn product_chains_need_parentheses() {
    let alg = quaternion_deformation();
    let err = parse("a*b*c", &alg).unwrap_err();
    assert_eq!(err.kind, ParseErrorKind::UnparenthesizedProductChain);
    assert_eq!(err.span, 3..4);
    assert!(parse("(a*b)*c", &alg).is_ok());
    assert!(parse("a*(b*c)", &alg).is_ok());
}

#[test]
fn inhomogeneous_bracket_operand_is_rejected() {
    let alg = quaternion_deformation();
    let x = Element::generator(&alg, "a")
        .unwrap()
        .add(&Element::generator(&alg, "c").unwrap())
        .unwrap();
    assert_eq!(x.parity(), ElementParity::Inhomogeneous);
    assert!(bracket(&x, &Element::generator(&alg, "b").unwrap()).is_err());
}

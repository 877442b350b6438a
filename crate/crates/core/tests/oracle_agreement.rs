mod oracle;

use std::sync::Arc;

use gja_core::algebra::{quaternion_deformation, AlgebraTable};
use gja_core::bracket::bracket;
use gja_core::element::Element;
use gja_core::jacobi::{builtin_instances, commutator_variant};
use gja_core::scalar::Scalar;
use gja_core::word::{contract, contract_traced, normalize, Word};

fn to_element(alg: &Arc<AlgebraTable>, v: oracle::Vec4) -> Element {
    Element::from_terms(
        alg,
        v.iter().enumerate().map(|(i, &c)| (i, Scalar::from_int(c))),
    )
}

fn all_words(max_len: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| oracle::LETTERS.iter().map(move |c| format!("{w}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn contraction_agrees_on_every_word_up_to_length_6() {
    let alg = quaternion_deformation();
    for w in all_words(6) {
        let word = Word::from_letters(&alg, &w).unwrap();
        let got = contract(&alg, &word).unwrap();
        assert_eq!(got, to_element(&alg, oracle::contract(1, &w)), "{w}");
    }
}

#[test]
fn normal_form_agrees_on_every_word_up_to_length_6() {
    let alg = quaternion_deformation();
    for w in all_words(6) {
        let n = normalize(&alg, &Word::from_letters(&alg, &w).unwrap()).unwrap();
        let (k, letters) = oracle::normalize(1, &w);
        assert_eq!(n.coeff, Scalar::from_int(k), "{w}");
        assert_eq!(n.letters_str(&alg), letters, "{w}");
    }
}

#[test]
fn chains_agree() {
    let alg = quaternion_deformation();
    for w in all_words(5) {
        let traced = contract_traced(&alg, &Word::from_letters(&alg, &w).unwrap()).unwrap();
        let ours: Vec<String> = traced.chain().iter().map(|x| x.render(&alg)).collect();
        assert_eq!(ours, oracle::contract_chain(1, &w).1, "{w}");
    }
}

#[test]
fn products_and_brackets_agree() {
    let alg = quaternion_deformation();
    for x in oracle::LETTERS {
        for y in oracle::LETTERS {
            let (ex, ey) = (
                Element::generator(&alg, &x.to_string()).unwrap(),
                Element::generator(&alg, &y.to_string()).unwrap(),
            );
            let (ox, oy) = (oracle::unit(x), oracle::unit(y));
            assert_eq!(
                ex.product(&ey).unwrap(),
                to_element(&alg, oracle::mul(ox, oy))
            );
            assert_eq!(
                bracket(&ex, &ey).unwrap(),
                to_element(&alg, oracle::graded_bracket(ox, oy)),
                "<{x},{y}>"
            );
        }
    }
}

#[test]
fn jacobi_values_agree() {
    let alg = quaternion_deformation();
    let ours = builtin_instances();
    let theirs = oracle::identities();
    assert_eq!(ours.len(), theirs.len());
    for (inst, (label, terms)) in ours.iter().zip(&theirs) {
        assert_eq!(inst.label, *label);
        assert_eq!(
            inst.fito().unwrap(),
            to_element(&alg, oracle::sum(terms)),
            "{label}"
        );
        assert_eq!(
            inst.foti().unwrap(),
            to_element(&alg, oracle::foti(terms)),
            "{label}"
        );
    }
    assert_eq!(
        commutator_variant().fito().unwrap(),
        to_element(&alg, oracle::sum(&oracle::commutator_variant()))
    );
}

#[test]
fn rendered_identities_match_printed_form() {
    let printed = [
        "[{d,c},a] + {{c,a},d} + {{a,d},c}",
        "[{d,c},b] + {{c,b},d} + {{b,d},c}",
        "{[a,b],d} + {{b,d},a} + {{d,a},b}",
        "{[a,b],c} + {{b,c},a} + {{c,a},b}",
        "{d,{c,a}} + {c,{a,d}} + [a,{d,c}]",
        "{d,{c,b}} + {c,{b,d}} + [b,{d,c}]",
        "{a,{b,d}} + {b,{d,a}} + {d,[a,b]}",
        "{a,{b,c}} + {b,{c,a}} + {c,[a,b]}",
    ];
    for (inst, want) in builtin_instances().iter().zip(printed) {
        assert_eq!(inst.render(), want);
    }
}

#[test]
fn commutator_variant_is_trilinear() {
    let alg = quaternion_deformation();
    let variant = commutator_variant();
    let base = variant.fito().unwrap();
    let two = Scalar::from_int(2);
    let doubled = variant
        .fito_with(&|i| Element::basis(&alg, i).scale(&two))
        .unwrap();
    // every term carries each of the three inputs once
    assert_eq!(doubled, base.scale(&Scalar::from_int(8)));
    assert_eq!(doubled.to_string(), "-32a");
    let oracle_doubled: oracle::Vec4 = oracle::sum(&oracle::commutator_variant()).map(|v| 8 * v);
    assert_eq!(doubled, to_element(&alg, oracle_doubled));
}

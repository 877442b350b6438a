//! Words over A: normal ordering (a-absorption plus signed sorting) and the
//! ordered, Z2-graded right-to-left total contraction.
//!
//! Letters are basis indices `a = 0, b = 1, c = 2, d = 3`, so the alphabet
//! order `d > c > b > a` is index order and a normal-ordered word has
//! non-increasing letters.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{AlgebraTable, Parity};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Index of the right identity `a`.
pub const RIGHT_IDENTITY: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub coeff: Scalar,
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(coeff: impl Into<Scalar>, letters: Vec<usize>) -> Word {
        Word {
            coeff: coeff.into(),
            letters,
        }
    }

    /// Unit-coefficient word from single-character generator names,
    /// e.g. `Word::from_letters(&alg, "cbcb")`.
    pub fn from_letters(alg: &AlgebraTable, letters: &str) -> Result<Word> {
        let letters = letters
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                alg.index_of(&c.to_string())
                    .ok_or_else(|| Error::UnknownElement(c.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::new(1, letters))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters_str(&self, alg: &AlgebraTable) -> String {
        self.letters
            .iter()
            .map(|&i| alg.generator(i).name.as_str())
            .collect()
    }

    /// Renders with an explicit sign, e.g. `-ccbb`, `+cca`, `+3/2 cb`.
    pub fn render(&self, alg: &AlgebraTable) -> String {
        let sign = if self.coeff.is_negative() { '-' } else { '+' };
        let mag = self.coeff.abs();
        let letters = self.letters_str(alg);
        if mag.is_one() {
            format!("{sign}{letters}")
        } else {
            format!("{sign}{mag} {letters}")
        }
    }
}

/// A linear combination of words; words with equal letters are merged.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Superposition {
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Superposition {
    pub fn new() -> Superposition {
        Superposition::default()
    }

    pub fn single(word: Word) -> Superposition {
        let mut s = Superposition::new();
        s.push(word);
        s
    }

    pub fn push(&mut self, word: Word) {
        if word.coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.letters.clone()).or_default();
        *slot += &word.coeff;
        if slot.is_zero() {
            self.terms.remove(&word.letters);
        }
    }

    pub fn extend(&mut self, other: &Superposition) {
        for w in other.words() {
            self.push(w);
        }
    }

    pub fn scale(&self, k: &Scalar) -> Superposition {
        let mut out = Superposition::new();
        for w in self.words() {
            out.push(Word::new(&w.coeff * k, w.letters));
        }
        out
    }

    /// Formal concatenation product: every word of `self` followed by every
    /// word of `rhs`.
    pub fn concat(&self, rhs: &Superposition) -> Superposition {
        let mut out = Superposition::new();
        for (l, x) in &self.terms {
            for (r, y) in &rhs.terms {
                let mut letters = l.clone();
                letters.extend_from_slice(r);
                out.push(Word::new(x * y, letters));
            }
        }
        out
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.terms
            .iter()
            .map(|(l, c)| Word::new(c.clone(), l.clone()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self, alg: &AlgebraTable) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, w) in self.words().enumerate() {
            let r = w.render(alg);
            if k == 0 {
                out.push_str(r.strip_prefix('+').unwrap_or(&r));
            } else {
                out.push(' ');
                out.push_str(&r[..1]);
                out.push(' ');
                out.push_str(&r[1..]);
            }
        }
        out
    }
}

/// `coeff · d^s c^r b^q a^p`, the shape of every normal-ordered word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub coeff: Scalar,
    pub s: usize,
    pub r: usize,
    pub q: usize,
    pub p: usize,
}

impl NormalForm {
    /// Reads the exponents off a word already in normal order.
    pub fn from_word(w: &Word) -> Option<NormalForm> {
        if w.letters.windows(2).any(|p| p[0] < p[1]) || w.letters.iter().any(|&l| l > 3) {
            return None;
        }
        let count = |l| w.letters.iter().filter(|&&x| x == l).count();
        Some(NormalForm {
            coeff: w.coeff.clone(),
            s: count(3),
            r: count(2),
            q: count(1),
            p: count(0),
        })
    }

    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.s + self.r + self.q + self.p);
        letters.extend(std::iter::repeat_n(3, self.s));
        letters.extend(std::iter::repeat_n(2, self.r));
        letters.extend(std::iter::repeat_n(1, self.q));
        letters.extend(std::iter::repeat_n(0, self.p));
        Word::new(self.coeff.clone(), letters)
    }
}

fn require_a(alg: &AlgebraTable, w: &Word) -> Result<()> {
    if !alg.is_quaternion_deformation() {
        return Err(Error::RulesRequireA(alg.name().to_string()));
    }
    if let Some(&bad) = w.letters.iter().find(|&&l| l >= alg.dim()) {
        return Err(Error::LetterOutOfRange {
            algebra: alg.name().to_string(),
            index: bad,
            dim: alg.dim(),
        });
    }
    Ok(())
}

/// `p ∘ q = sign · letter`; every entry of A is a single signed letter.
fn table_letter(alg: &AlgebraTable, p: usize, q: usize) -> (Scalar, usize) {
    let entry = alg.entry(p, q);
    debug_assert_eq!(entry.len(), 1);
    (entry[0].coeff.clone(), entry[0].index)
}

/// Number of pairs `i < j` with `letters[i] < letters[j]`, i.e. pairs out of
/// descending order. Equal letters contribute nothing.
fn descending_inversions(letters: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            if letters[i] < letters[j] {
                n += 1;
            }
        }
    }
    n
}

/// Brings a word into normal order.
///
/// First every `a` that is not the last letter is absorbed into its right
/// neighbour (leftmost first, to a fixpoint) using the table, with no grade
/// sign. Then the remaining letters are sorted into `d ≥ c ≥ b ≥ a` order,
/// picking up `(-1)^inversions`.
pub fn normalize(alg: &AlgebraTable, w: &Word) -> Result<Word> {
    require_a(alg, w)?;
    let mut coeff = w.coeff.clone();
    let mut letters = w.letters.clone();
    while let Some(pos) = letters[..letters.len().saturating_sub(1)]
        .iter()
        .position(|&l| l == RIGHT_IDENTITY)
    {
        let (sign, letter) = table_letter(alg, RIGHT_IDENTITY, letters[pos + 1]);
        coeff = coeff * sign;
        letters.splice(pos..pos + 2, [letter]);
    }
    if descending_inversions(&letters) % 2 == 1 {
        coeff = -coeff;
    }
    letters.sort_unstable_by(|x, y| y.cmp(x));
    Ok(Word::new(coeff, letters))
}

/// One pairwise contraction performed by [`contract_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStep {
    pub before: Word,
    pub left: usize,
    pub right: usize,
    /// Sign of the table entry `left ∘ right`.
    pub table_sign: i32,
    /// `(-1)^(π(left)+π(right))` for steps taken at length ≥ 3; `None` for the
    /// final two-letter product, which is read straight off the table.
    pub grade_factor: Option<i32>,
    pub after: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub normalized: Word,
    pub steps: Vec<ContractionStep>,
    pub value: Element,
}

impl Contraction {
    /// The word after normalization and after every step, ending with the
    /// single-letter result.
    pub fn chain(&self) -> Vec<Word> {
        std::iter::once(self.normalized.clone())
            .chain(self.steps.iter().map(|s| s.after.clone()))
            .collect()
    }
}

/// Totally contracts a word to a signed letter, recording every step.
pub fn contract_traced(alg: &Arc<AlgebraTable>, w: &Word) -> Result<Contraction> {
    let normalized = normalize(alg, w)?;
    if normalized.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut current = normalized.clone();
    let mut steps = Vec::new();
    while current.len() >= 2 {
        let n = current.len();
        let (left, right) = (current.letters[n - 2], current.letters[n - 1]);
        let (sign, letter) = table_letter(alg, left, right);
        let grade_factor = (n >= 3).then(|| {
            if alg.parity(left) + alg.parity(right) == Parity::Odd {
                -1
            } else {
                1
            }
        });
        let mut coeff = &current.coeff * &sign;
        if grade_factor == Some(-1) {
            coeff = -coeff;
        }
        let mut letters = current.letters[..n - 2].to_vec();
        letters.push(letter);
        let after = Word::new(coeff, letters);
        steps.push(ContractionStep {
            before: current,
            left,
            right,
            table_sign: sign.signum(),
            grade_factor,
            after: after.clone(),
        });
        current = after;
    }
    let value = Element::from_terms(alg, [(current.letters[0], current.coeff.clone())]);
    Ok(Contraction {
        normalized,
        steps,
        value,
    })
}

/// Total contraction of a word to an element of A.
pub fn contract(alg: &Arc<AlgebraTable>, w: &Word) -> Result<Element> {
    contract_traced(alg, w).map(|c| c.value)
}

/// Contracts every word of a superposition and sums the results.
pub fn contract_superposition(alg: &Arc<AlgebraTable>, s: &Superposition) -> Result<Element> {
    require_a(alg, &Word::new(1, Vec::new()))?;
    let mut total = Element::zero(alg);
    for w in s.words() {
        total = total.add(&contract(alg, &w)?)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quaternion_deformation, quaternions};

    fn w(s: &str) -> Word {
        Word::from_letters(&quaternion_deformation(), s).unwrap()
    }

    fn gen(name: &str) -> Element {
        Element::generator(&quaternion_deformation(), name).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let alg = quaternion_deformation();
        assert_eq!(
            normalize(&alg, &w("cbcb")).unwrap(),
            Word::new(-1, w("ccbb").letters)
        );
        assert_eq!(
            normalize(&alg, &w("bdbd")).unwrap(),
            Word::new(-1, w("ddbb").letters)
        );
        assert_eq!(normalize(&alg, &w("dcba")).unwrap(), w("dcba"));
        assert_eq!(
            normalize(&alg, &w("abd")).unwrap(),
            Word::new(-1, w("db").letters)
        );
        assert_eq!(
            normalize(&alg, &w("adb")).unwrap(),
            Word::new(-1, w("cb").letters)
        );
        assert_eq!(normalize(&alg, &w("")).unwrap(), w(""));
    }

    #[test]
    fn repeated_a_collapses() {
        let alg = quaternion_deformation();
        assert_eq!(normalize(&alg, &w("baaa")).unwrap(), w("ba"));
        assert_eq!(normalize(&alg, &w("aaaa")).unwrap(), w("a"));
        let nf = NormalForm::from_word(&normalize(&alg, &w("cabaa")).unwrap()).unwrap();
        assert!(nf.p <= 1);
    }

    #[test]
    fn contract_examples() {
        let alg = quaternion_deformation();
        assert_eq!(contract(&alg, &w("cbcb")).unwrap(), gen("a").neg());
        assert_eq!(contract(&alg, &w("bdbd")).unwrap(), gen("a"));
        assert_eq!(contract(&alg, &w("dba")).unwrap(), gen("c").neg());
        assert_eq!(contract(&alg, &w("abd")).unwrap(), gen("c"));
        assert_eq!(contract(&alg, &w("d")).unwrap(), gen("d"));
        assert_eq!(contract(&alg, &w("dab")).unwrap(), gen("c").neg());
        assert_eq!(contract(&alg, &w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn cbcb_chain() {
        let alg = quaternion_deformation();
        let c = contract_traced(&alg, &w("cbcb")).unwrap();
        let chain: Vec<String> = c.chain().iter().map(|x| x.render(&alg)).collect();
        assert_eq!(chain, ["-ccbb", "+cca", "-cc", "-a"]);
        let factors: Vec<_> = c.steps.iter().map(|s| s.grade_factor).collect();
        assert_eq!(factors, [Some(1), Some(-1), None]);
    }

    #[test]
    fn superpositions() {
        let alg = quaternion_deformation();
        let mut s = Superposition::single(w("abd"));
        s.push(w("adb"));
        assert_eq!(
            contract_superposition(&alg, &s).unwrap(),
            gen("c").sub(&gen("d")).unwrap()
        );
        assert!(contract_superposition(&alg, &Superposition::new())
            .unwrap()
            .is_zero());
        let mut cancel = Superposition::single(w("cbcb"));
        cancel.push(Word::new(-1, w("cbcb").letters));
        assert!(cancel.is_empty());
    }

    #[test]
    fn non_a_algebras_are_rejected() {
        let h = quaternions();
        let word = Word::new(1, vec![1, 2, 3]);
        assert!(matches!(normalize(&h, &word), Err(Error::RulesRequireA(_))));
        assert!(matches!(contract(&h, &word), Err(Error::RulesRequireA(_))));
    }

    #[test]
    fn normal_form_roundtrip() {
        let nf = NormalForm {
            coeff: Scalar::from_int(-2),
            s: 1,
            r: 2,
            q: 0,
            p: 1,
        };
        let word = nf.to_word();
        assert_eq!(word.letters, vec![3, 2, 2, 0]);
        assert_eq!(NormalForm::from_word(&word), Some(nf));
        assert_eq!(NormalForm::from_word(&w("bd")), None);
    }
}

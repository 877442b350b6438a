//! The eight super-Jacobi identities of A and their two contraction modes.
//!
//! *fito* (from inside to outside) evaluates inner brackets with the binary
//! table first and then the outer ones. *foti* (from outside to inside) opens
//! both bracket layers formally into words of length three and only then
//! totally contracts them with the word rules.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{quaternion_deformation, AlgebraTable, Parity};
use crate::bracket::{forced_bracket, BracketKind};
use crate::element::{Element, ElementParity};
use crate::error::{Error, Result};
use crate::word::{contract_superposition, Superposition, Word};

/// A bracket expression over generators with explicit bracket kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketTerm {
    Leaf(usize),
    Bracket(BracketKind, Box<BracketTerm>, Box<BracketTerm>),
}

fn leaf(i: usize) -> BracketTerm {
    BracketTerm::Leaf(i)
}

fn com(l: BracketTerm, r: BracketTerm) -> BracketTerm {
    BracketTerm::Bracket(BracketKind::Commutator, Box::new(l), Box::new(r))
}

fn anti(l: BracketTerm, r: BracketTerm) -> BracketTerm {
    BracketTerm::Bracket(BracketKind::Anticommutator, Box::new(l), Box::new(r))
}

impl BracketTerm {
    /// Parity by additivity, independent of the value (which may be zero).
    pub fn formal_parity(&self, alg: &AlgebraTable) -> Parity {
        match self {
            BracketTerm::Leaf(i) => alg.parity(*i),
            BracketTerm::Bracket(_, l, r) => l.formal_parity(alg) + r.formal_parity(alg),
        }
    }

    /// Every stored kind agrees with the kind the grading prescribes.
    pub fn kinds_match_grading(&self, alg: &AlgebraTable) -> bool {
        match self {
            BracketTerm::Leaf(_) => true,
            BracketTerm::Bracket(kind, l, r) => {
                *kind == BracketKind::for_parities(l.formal_parity(alg), r.formal_parity(alg))
                    && l.kinds_match_grading(alg)
                    && r.kinds_match_grading(alg)
            }
        }
    }

    /// Replaces every mixed-parity anticommutator by a commutator.
    pub fn with_mixed_as_commutator(&self, alg: &AlgebraTable) -> BracketTerm {
        match self {
            BracketTerm::Leaf(i) => BracketTerm::Leaf(*i),
            BracketTerm::Bracket(kind, l, r) => {
                let mixed = l.formal_parity(alg) != r.formal_parity(alg);
                let kind = if mixed {
                    BracketKind::Commutator
                } else {
                    *kind
                };
                BracketTerm::Bracket(
                    kind,
                    Box::new(l.with_mixed_as_commutator(alg)),
                    Box::new(r.with_mixed_as_commutator(alg)),
                )
            }
        }
    }

    fn leaves(&self, out: &mut Vec<usize>) {
        match self {
            BracketTerm::Leaf(i) => out.push(*i),
            BracketTerm::Bracket(_, l, r) => {
                l.leaves(out);
                r.leaves(out);
            }
        }
    }

    /// Inside-out evaluation with the binary product; leaves are replaced by
    /// `substitute(index)`.
    pub fn evaluate_inside_out(&self, substitute: &dyn Fn(usize) -> Element) -> Result<Element> {
        match self {
            BracketTerm::Leaf(i) => Ok(substitute(*i)),
            BracketTerm::Bracket(kind, l, r) => {
                let x = l.evaluate_inside_out(substitute)?;
                let y = r.evaluate_inside_out(substitute)?;
                for operand in [&x, &y] {
                    if operand.parity() == ElementParity::Inhomogeneous {
                        return Err(Error::InhomogeneousOperand(operand.to_string()));
                    }
                }
                forced_bracket(*kind, &x, &y)
            }
        }
    }

    /// Opens every bracket formally: `[x,y] ↦ xy - yx`, `{x,y} ↦ xy + yx`.
    pub fn expand(&self) -> Superposition {
        match self {
            BracketTerm::Leaf(i) => Superposition::single(Word::new(1, vec![*i])),
            BracketTerm::Bracket(kind, l, r) => {
                let (l, r) = (l.expand(), r.expand());
                let mut out = l.concat(&r);
                let swapped = r.concat(&l);
                match kind {
                    BracketKind::Commutator => out.extend(&swapped.scale(&(-1).into())),
                    BracketKind::Anticommutator => out.extend(&swapped),
                }
                out
            }
        }
    }

    pub fn render(&self, alg: &AlgebraTable) -> String {
        match self {
            BracketTerm::Leaf(i) => alg.generator(*i).name.clone(),
            BracketTerm::Bracket(kind, l, r) => format!(
                "{}{},{}{}",
                kind.open(),
                l.render(alg),
                r.render(alg),
                kind.close()
            ),
        }
    }
}

/// Which side carries the nested bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JacobiForm {
    /// `<<x,y>,z>`: the inner bracket is the left operand.
    OuterFirst,
    /// `<x,<y,z>>`: the inner bracket is the right operand.
    InnerFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Fito,
    Foti,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Fito => "fito",
            Mode::Foti => "foti",
        })
    }
}

/// A cyclic sum of three nested brackets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiInstance {
    pub label: String,
    pub form: JacobiForm,
    pub triple: [usize; 3],
    pub terms: [BracketTerm; 3],
    alg: Arc<AlgebraTable>,
}

impl JacobiInstance {
    /// Builds an instance whose printed bracket kinds must agree with the
    /// grading.
    pub fn new(
        alg: &Arc<AlgebraTable>,
        label: impl Into<String>,
        form: JacobiForm,
        terms: [BracketTerm; 3],
    ) -> Result<JacobiInstance> {
        let inst = JacobiInstance::unchecked(alg, label, form, terms);
        if inst.terms.iter().all(|t| t.kinds_match_grading(alg)) {
            Ok(inst)
        } else {
            Err(Error::BracketKindMismatch(inst.render()))
        }
    }

    /// Builds an instance without checking bracket kinds against the grading.
    pub fn unchecked(
        alg: &Arc<AlgebraTable>,
        label: impl Into<String>,
        form: JacobiForm,
        terms: [BracketTerm; 3],
    ) -> JacobiInstance {
        let mut leaves = Vec::new();
        terms[0].leaves(&mut leaves);
        // the first term lists the triple in order in either form
        assert_eq!(
            leaves.len(),
            3,
            "a Jacobi term nests exactly three generators"
        );
        let triple = [leaves[0], leaves[1], leaves[2]];
        JacobiInstance {
            label: label.into(),
            form,
            triple,
            terms,
            alg: alg.clone(),
        }
    }

    pub fn algebra(&self) -> &Arc<AlgebraTable> {
        &self.alg
    }

    pub fn render(&self) -> String {
        self.terms
            .iter()
            .map(|t| t.render(&self.alg))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The same identity with every mixed-parity bracket turned into a
    /// commutator.
    pub fn with_mixed_as_commutator(&self) -> JacobiInstance {
        let terms = self
            .terms
            .clone()
            .map(|t| t.with_mixed_as_commutator(&self.alg));
        JacobiInstance::unchecked(
            &self.alg,
            format!("{}-commutator", self.label),
            self.form,
            terms,
        )
    }

    pub fn fito(&self) -> Result<Element> {
        let alg = self.alg.clone();
        self.fito_with(&move |i| Element::basis(&alg, i))
    }

    /// fito with each generator leaf replaced by an arbitrary element.
    pub fn fito_with(&self, substitute: &dyn Fn(usize) -> Element) -> Result<Element> {
        let mut total = Element::zero(&self.alg);
        for t in &self.terms {
            total = total.add(&t.evaluate_inside_out(substitute)?)?;
        }
        Ok(total)
    }

    /// Formal expansion of all three terms into words of length three.
    pub fn foti_expansion(&self) -> Superposition {
        let mut s = Superposition::new();
        for t in &self.terms {
            s.extend(&t.expand());
        }
        s
    }

    pub fn foti(&self) -> Result<Element> {
        contract_superposition(&self.alg, &self.foti_expansion())
    }

    pub fn evaluate(&self, mode: Mode) -> Result<Element> {
        match mode {
            Mode::Fito => self.fito(),
            Mode::Foti => self.foti(),
        }
    }
}

pub fn jacobi_fito(instance: &JacobiInstance) -> Result<Element> {
    instance.fito()
}

pub fn jacobi_foti(instance: &JacobiInstance) -> Result<Element> {
    instance.foti()
}

/// The eight super-Jacobi identities of A: four in outer-first form
/// (`outer-1` … `outer-4`) followed by four in inner-first form
/// (`inner-1` … `inner-4`).
pub fn builtin_instances() -> Vec<JacobiInstance> {
    let alg = quaternion_deformation();
    let [a, b, c, d] = [0, 1, 2, 3].map(leaf);
    let outer = [
        [
            com(anti(d.clone(), c.clone()), a.clone()),
            anti(anti(c.clone(), a.clone()), d.clone()),
            anti(anti(a.clone(), d.clone()), c.clone()),
        ],
        [
            com(anti(d.clone(), c.clone()), b.clone()),
            anti(anti(c.clone(), b.clone()), d.clone()),
            anti(anti(b.clone(), d.clone()), c.clone()),
        ],
        [
            anti(com(a.clone(), b.clone()), d.clone()),
            anti(anti(b.clone(), d.clone()), a.clone()),
            anti(anti(d.clone(), a.clone()), b.clone()),
        ],
        [
            anti(com(a.clone(), b.clone()), c.clone()),
            anti(anti(b.clone(), c.clone()), a.clone()),
            anti(anti(c.clone(), a.clone()), b.clone()),
        ],
    ];
    let inner = [
        [
            anti(d.clone(), anti(c.clone(), a.clone())),
            anti(c.clone(), anti(a.clone(), d.clone())),
            com(a.clone(), anti(d.clone(), c.clone())),
        ],
        [
            anti(d.clone(), anti(c.clone(), b.clone())),
            anti(c.clone(), anti(b.clone(), d.clone())),
            com(b.clone(), anti(d.clone(), c.clone())),
        ],
        [
            anti(a.clone(), anti(b.clone(), d.clone())),
            anti(b.clone(), anti(d.clone(), a.clone())),
            anti(d.clone(), com(a.clone(), b.clone())),
        ],
        [
            anti(a.clone(), anti(b.clone(), c.clone())),
            anti(b.clone(), anti(c.clone(), a.clone())),
            anti(c.clone(), com(a.clone(), b.clone())),
        ],
    ];
    let mut out = Vec::with_capacity(8);
    for (k, terms) in outer.into_iter().enumerate() {
        out.push(
            JacobiInstance::new(
                &alg,
                format!("outer-{}", k + 1),
                JacobiForm::OuterFirst,
                terms,
            )
            .expect("built-in bracket kinds follow the grading"),
        );
    }
    for (k, terms) in inner.into_iter().enumerate() {
        out.push(
            JacobiInstance::new(
                &alg,
                format!("inner-{}", k + 1),
                JacobiForm::InnerFirst,
                terms,
            )
            .expect("built-in bracket kinds follow the grading"),
        );
    }
    out
}

/// The first outer-first identity with mixed brackets replaced by
/// commutators: `[{d,c},a] + {[c,a],d} + {[a,d],c}`.
pub fn commutator_variant() -> JacobiInstance {
    builtin_instances()[0].with_mixed_as_commutator()
}

/// fito value of [`commutator_variant`].
pub fn jacobi_commutator_variant() -> Element {
    commutator_variant()
        .fito()
        .expect("variant operands are homogeneous")
}

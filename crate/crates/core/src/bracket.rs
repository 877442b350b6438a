//! The parity-dispatched bracket: commutator on even pairs, anticommutator on
//! odd pairs and on mixed pairs.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraTable, Parity};
use crate::element::{Element, ElementParity};
use crate::error::{Error, Result};
use crate::report::{AxiomCheck, AxiomReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketKind {
    /// `[x, y] = xy - yx`
    Commutator,
    /// `{x, y} = xy + yx`
    Anticommutator,
}

impl BracketKind {
    /// Only an even-even pair gets the commutator.
    pub fn for_parities(x: Parity, y: Parity) -> BracketKind {
        if x == Parity::Even && y == Parity::Even {
            BracketKind::Commutator
        } else {
            BracketKind::Anticommutator
        }
    }

    /// The `δ` of `<x,y> = xy - δ(-1)^{π(x)π(y)} yx` that reproduces this
    /// grading's choice: `+1` for homogeneous pairs, `-1` for mixed ones.
    pub fn delta_for(x: Parity, y: Parity) -> i64 {
        if x == y {
            1
        } else {
            -1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BracketKind::Commutator => "commutator",
            BracketKind::Anticommutator => "anticommutator",
        }
    }

    pub fn open(self) -> char {
        match self {
            BracketKind::Commutator => '[',
            BracketKind::Anticommutator => '{',
        }
    }

    pub fn close(self) -> char {
        match self {
            BracketKind::Commutator => ']',
            BracketKind::Anticommutator => '}',
        }
    }
}

/// `xy ∓ yx` with the kind chosen by the caller; no grading constraints.
pub fn forced_bracket(kind: BracketKind, x: &Element, y: &Element) -> Result<Element> {
    let xy = x.product(y)?;
    let yx = y.product(x)?;
    match kind {
        BracketKind::Commutator => xy.sub(&yx),
        BracketKind::Anticommutator => xy.add(&yx),
    }
}

fn homogeneous(x: &Element) -> Result<Option<Parity>> {
    match x.parity() {
        ElementParity::Inhomogeneous => Err(Error::InhomogeneousOperand(x.to_string())),
        p => Ok(p.homogeneous()),
    }
}

/// The kind the grading prescribes for `<x, y>`, or `None` when an operand is
/// zero (either kind then gives zero).
pub fn bracket_kind_of(x: &Element, y: &Element) -> Result<Option<BracketKind>> {
    let px = homogeneous(x)?;
    let py = homogeneous(y)?;
    Ok(match (px, py) {
        (Some(p), Some(q)) => Some(BracketKind::for_parities(p, q)),
        _ => None,
    })
}

/// The graded bracket `<x, y>` of homogeneous operands.
pub fn bracket(x: &Element, y: &Element) -> Result<Element> {
    if !crate::element::same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::MixedAlgebra {
            left: x.algebra().name().to_string(),
            right: y.algebra().name().to_string(),
        });
    }
    match bracket_kind_of(x, y)? {
        Some(kind) => forced_bracket(kind, x, y),
        None => Ok(Element::zero(x.algebra())),
    }
}

fn basis_pairs(alg: &Arc<AlgebraTable>) -> impl Iterator<Item = (usize, usize)> {
    let n = alg.dim();
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// Every basis bracket lands in the parity `π(x) + π(y)` (or is zero).
pub fn bracket_parity_check(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let mut violations = Vec::new();
    for (i, j) in basis_pairs(alg) {
        let x = Element::basis(alg, i);
        let y = Element::basis(alg, j);
        let value = bracket(&x, &y).expect("basis elements are homogeneous");
        let expected = alg.parity(i) + alg.parity(j);
        let ok = match value.parity() {
            ElementParity::Zero => true,
            p => p.homogeneous() == Some(expected),
        };
        if !ok {
            violations.push(
                Witness::new(alg, &[i, j])
                    .value(value)
                    .detail(format!("expected parity {}", expected.bit())),
            );
        }
    }
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations("parity-closure", violations)],
    )
}

/// `<x,y> = -δ(-1)^{π(x)π(y)} <y,x>` over every basis pair, with `δ` chosen per
/// pair as in [`BracketKind::delta_for`].
pub fn graded_antisymmetry_check(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let mut violations = Vec::new();
    for (i, j) in basis_pairs(alg) {
        let x = Element::basis(alg, i);
        let y = Element::basis(alg, j);
        let (p, q) = (alg.parity(i), alg.parity(j));
        let factor = -BracketKind::delta_for(p, q) * p.koszul_sign(q);
        let lhs = bracket(&x, &y).expect("homogeneous");
        let rhs = bracket(&y, &x).expect("homogeneous").scale(&factor.into());
        if lhs != rhs {
            violations.push(Witness::new(alg, &[i, j]).sides(lhs, rhs));
        }
    }
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations(
            "graded-antisymmetry",
            violations,
        )],
    )
}

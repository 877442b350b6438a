//! Left and right self-representations of structure-constant algebras.
//!
//! Coordinates are column vectors and matrices act on the left: column `j`
//! of `L(x)` holds the coordinates of `x ∘ g_j`, column `j` of `R(x)` those of
//! `g_j ∘ x`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{complex_numbers, AlgebraTable};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::report::{AxiomCheck, AxiomReport, Witness};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn zero(dim: usize) -> SquareMatrix {
        SquareMatrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> SquareMatrix {
        let mut m = SquareMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Scalar::one();
        }
        m
    }

    pub fn from_columns(columns: &[Vec<Scalar>]) -> SquareMatrix {
        let dim = columns.len();
        let mut m = SquareMatrix::zero(dim);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim, "column {j} has the wrong length");
            for (i, v) in col.iter().enumerate() {
                m.entries[i * dim + j] = v.clone();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = SquareMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += &(a * rhs.get(k, j));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim);
        SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim);
        SquareMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> SquareMatrix {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).fold(Scalar::zero(), |acc, j| acc + self.get(i, j) * &v[j]))
            .collect()
    }

    /// Row-major rational strings.
    pub fn rows(&self) -> Vec<Vec<String>> {
        self.entries
            .chunks(self.dim)
            .map(|r| r.iter().map(Scalar::to_string).collect())
            .collect()
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, r) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", cells.join("  "))?;
        }
        Ok(())
    }
}

fn compact(m: &SquareMatrix) -> String {
    let rows: Vec<String> = m.rows().iter().map(|r| r.join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

/// `L(x)`, with `L(x)[y] = [x ∘ y]`.
pub fn left_matrix(x: &Element) -> SquareMatrix {
    let alg = x.algebra();
    let cols: Vec<Vec<Scalar>> = (0..alg.dim())
        .map(|j| {
            x.product(&Element::basis(alg, j))
                .expect("same algebra")
                .coordinates()
        })
        .collect();
    SquareMatrix::from_columns(&cols)
}

/// `R(x)`, with `R(x)[y] = [y ∘ x]`.
pub fn right_matrix(x: &Element) -> SquareMatrix {
    let alg = x.algebra();
    let cols: Vec<Vec<Scalar>> = (0..alg.dim())
        .map(|j| {
            Element::basis(alg, j)
                .product(x)
                .expect("same algebra")
                .coordinates()
        })
        .collect();
    SquareMatrix::from_columns(&cols)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// `[L(x), R(y)]` and `{L(x), R(y)}` over all basis pairs. Each check
/// passes when that combination vanishes identically.
pub fn check_lr_commutation(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let mut commutator = Vec::new();
    let mut anticommutator = Vec::new();
    for (i, j) in pairs(alg.dim()) {
        let l = left_matrix(&Element::basis(alg, i));
        let r = right_matrix(&Element::basis(alg, j));
        let (lr, rl) = (l.mul(&r), r.mul(&l));
        let com = lr.sub(&rl);
        let anti = lr.add(&rl);
        if !com.is_zero() {
            commutator.push(Witness::new(alg, &[i, j]).detail(compact(&com)));
        }
        if !anti.is_zero() {
            anticommutator.push(Witness::new(alg, &[i, j]).detail(compact(&anti)));
        }
    }
    AxiomReport::new(
        alg,
        vec![
            AxiomCheck::from_violations("lr-commutator-vanishes", commutator),
            AxiomCheck::from_violations("lr-anticommutator-vanishes", anticommutator),
        ],
    )
}

/// `L(x ∘ y) = L(x) L(y)` for all basis pairs.
pub fn check_left_homomorphism(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let mut violations = Vec::new();
    for (i, j) in pairs(alg.dim()) {
        let (x, y) = (Element::basis(alg, i), Element::basis(alg, j));
        let lhs = left_matrix(&x.product(&y).expect("same algebra"));
        let rhs = left_matrix(&x).mul(&left_matrix(&y));
        if lhs != rhs {
            violations.push(Witness::new(alg, &[i, j]).detail(format!(
                "L(xy) = {}, L(x)L(y) = {}",
                compact(&lhs),
                compact(&rhs)
            )));
        }
    }
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations("left-homomorphism", violations)],
    )
}

/// `R(x ∘ y) = R(y) R(x)` for all basis pairs.
pub fn check_right_antihomomorphism(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let mut violations = Vec::new();
    for (i, j) in pairs(alg.dim()) {
        let (x, y) = (Element::basis(alg, i), Element::basis(alg, j));
        let lhs = right_matrix(&x.product(&y).expect("same algebra"));
        let rhs = right_matrix(&y).mul(&right_matrix(&x));
        if lhs != rhs {
            violations.push(Witness::new(alg, &[i, j]).detail(format!(
                "R(xy) = {}, R(y)R(x) = {}",
                compact(&lhs),
                compact(&rhs)
            )));
        }
    }
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations(
            "right-antihomomorphism",
            violations,
        )],
    )
}

/// Signs of the diagonal self-products `g_i ∘ g_i = ±g_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureProfile {
    pub signs: Vec<i8>,
    pub trace: i64,
}

impl fmt::Display for SignatureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: Vec<&str> = self
            .signs
            .iter()
            .map(|&s| if s > 0 { "+" } else { "-" })
            .collect();
        write!(f, "({}) trace {}", signs.join(","), self.trace)
    }
}

pub fn signature(alg: &AlgebraTable) -> Result<SignatureProfile> {
    let mut signs = Vec::with_capacity(alg.dim());
    for i in 0..alg.dim() {
        let entry = alg.entry(i, i);
        match entry {
            [t] if t.index == 0 && t.coeff.abs().is_one() => {
                signs.push(if t.coeff.is_negative() { -1 } else { 1 });
            }
            _ => {
                let name = &alg.generator(i).name;
                return Err(Error::UndefinedSignature(format!(
                    "{name}∘{name} = {}",
                    alg.format_entry(i, i)
                )));
            }
        }
    }
    let trace = signs.iter().map(|&s| s as i64).sum();
    Ok(SignatureProfile { signs, trace })
}

/// Checks that `g_0 ↦ 1`, `g_1 ↦ i` carries the products of `span{g_0, g_1}`
/// onto those of the complex numbers.
pub fn check_even_subalgebra_iso_c(alg: &Arc<AlgebraTable>) -> AxiomReport {
    let c = complex_numbers();
    let mut violations = Vec::new();
    if alg.dim() < 2 {
        violations.push(Witness::named(vec![]).detail("algebra has fewer than two generators"));
    } else {
        for (i, j) in pairs(2) {
            let product = Element::basis(alg, i)
                .product(&Element::basis(alg, j))
                .expect("same algebra");
            let image = product
                .terms()
                .all(|(k, _)| k < 2)
                .then(|| Element::from_terms(&c, product.terms().map(|(k, v)| (k, v.clone()))));
            let expected = Element::basis(&c, i)
                .product(&Element::basis(&c, j))
                .expect("same algebra");
            if image.as_ref() != Some(&expected) {
                violations.push(
                    Witness::new(alg, &[i, j])
                        .value(product)
                        .detail(format!("expected image {expected}")),
                );
            }
        }
    }
    AxiomReport::new(
        alg,
        vec![AxiomCheck::from_violations(
            "even-subalgebra-iso-C",
            violations,
        )],
    )
}

/// A table cell where two equal-dimension tables differ once the basis of the
/// second is renamed onto the first index by index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub row: String,
    pub col: String,
    pub left: String,
    pub right: String,
}

/// Cell-by-cell comparison of `x` against `y` under `g_i(y) ↦ g_i(x)`.
pub fn correspondence_diff(x: &AlgebraTable, y: &AlgebraTable) -> Result<Vec<CellDiff>> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} has dim {}, {} has dim {}",
            x.name(),
            x.dim(),
            y.name(),
            y.dim()
        )));
    }
    let mut out = Vec::new();
    for i in 0..x.dim() {
        for j in 0..x.dim() {
            if x.entry(i, j) != y.entry(i, j) {
                out.push(CellDiff {
                    row: x.generator(i).name.clone(),
                    col: x.generator(j).name.clone(),
                    left: x.format_entry(i, j),
                    right: crate::algebra::format_terms(x, y.entry(i, j)),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quaternion_deformation, quaternions};

    fn h(name: &str) -> Element {
        Element::generator(&quaternions(), name).unwrap()
    }

    fn a(name: &str) -> Element {
        Element::generator(&quaternion_deformation(), name).unwrap()
    }

    #[test]
    fn left_and_right_examples() {
        assert_eq!(left_matrix(&h("1")), SquareMatrix::identity(4));
        assert_eq!(
            left_matrix(&h("i")).apply(&h("j").coordinates()),
            h("k").coordinates()
        );
        assert_eq!(
            left_matrix(&a("a")).apply(&a("c").coordinates()),
            a("d").neg().coordinates()
        );
        assert_eq!(right_matrix(&a("a")), SquareMatrix::identity(4));
        assert_eq!(
            right_matrix(&h("j")).apply(&h("i").coordinates()),
            h("k").coordinates()
        );
        assert!(right_matrix(&Element::zero(&quaternions())).is_zero());
    }

    #[test]
    fn signatures() {
        let sh = signature(&quaternions()).unwrap();
        assert_eq!(sh.signs, [1, -1, -1, -1]);
        assert_eq!(sh.trace, -2);
        let sa = signature(&quaternion_deformation()).unwrap();
        assert_eq!(sa.signs, [1, -1, 1, -1]);
        assert_eq!(sa.trace, 0);
        assert!(matches!(
            signature(&AlgebraTable::zero_algebra(2)),
            Err(Error::UndefinedSignature(_))
        ));
    }

    #[test]
    fn iso_c() {
        assert!(check_even_subalgebra_iso_c(&quaternion_deformation()).passed());
        let bad = Arc::new(
            quaternion_deformation()
                .with_entry(0, 1, vec![crate::algebra::Term::new(-1, 1)])
                .unwrap(),
        );
        let r = check_even_subalgebra_iso_c(&bad);
        assert!(!r.passed());
        assert_eq!(r.checks[0].witnesses[0].tuple, ["a", "b"]);
    }

    #[test]
    fn quaternion_maps() {
        let h = quaternions();
        assert!(check_left_homomorphism(&h).passed());
        assert!(check_right_antihomomorphism(&h).passed());
        let lr = check_lr_commutation(&h);
        assert!(lr.check("lr-commutator-vanishes").unwrap().passed);
    }
}

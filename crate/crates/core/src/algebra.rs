//! Structure-constant algebras: generators, parities and multiplication
//! tables, including the built-in tables for A, H and C.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Z2 degree of a homogeneous generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

/// Addition mod 2.
impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// `(-1)^(p*q)`, the sign used by graded brackets.
    pub fn koszul_sign(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub index: usize,
    pub parity: Parity,
}

/// One summand `coeff * g_index` of a table entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub coeff: Scalar,
    pub index: usize,
}

impl Term {
    pub fn new(coeff: impl Into<Scalar>, index: usize) -> Self {
        Term {
            coeff: coeff.into(),
            index,
        }
    }
}

/// A finite-dimensional algebra given by its structure constants.
///
/// Entry `(i, j)` of the table is the expansion of `g_i ∘ g_j`: rows are left
/// factors and columns are right factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraTable {
    name: String,
    generators: Vec<Generator>,
    table: Vec<Vec<Vec<Term>>>,
}

/// On-disk representation of a custom algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: i64,
    pub generators: Vec<String>,
    pub parity: Vec<i64>,
    pub table: Vec<Vec<Vec<TermDocument>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub c: String,
    pub i: i64,
}

impl AlgebraTable {
    /// Builds a table from raw parts, merging repeated indices and dropping
    /// zero coefficients in every entry.
    pub fn new(
        name: impl Into<String>,
        names: &[&str],
        parities: &[Parity],
        table: Vec<Vec<Vec<Term>>>,
    ) -> Result<AlgebraTable> {
        let name = name.into();
        let dim = names.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch(
                "dimension must be positive".into(),
            ));
        }
        if parities.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} parities for {dim} generators",
                parities.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in names {
            if n.is_empty() || n.chars().any(char::is_whitespace) {
                return Err(Error::Document(format!("invalid generator name {n:?}")));
            }
            if !seen.insert(*n) {
                return Err(Error::Document(format!("duplicate generator name {n:?}")));
            }
        }
        if table.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "table has {} rows, expected {dim}",
                table.len()
            )));
        }
        let mut canonical = Vec::with_capacity(dim);
        for (row, cols) in table.into_iter().enumerate() {
            if cols.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "table row {row} has {} columns, expected {dim}",
                    cols.len()
                )));
            }
            let mut out_row = Vec::with_capacity(dim);
            for (col, terms) in cols.into_iter().enumerate() {
                let mut merged: BTreeMap<usize, Scalar> = BTreeMap::new();
                for t in terms {
                    if t.index >= dim {
                        return Err(Error::BadIndex {
                            row,
                            col,
                            index: t.index as i64,
                        });
                    }
                    *merged.entry(t.index).or_default() += &t.coeff;
                }
                out_row.push(
                    merged
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(index, coeff)| Term { coeff, index })
                        .collect(),
                );
            }
            canonical.push(out_row);
        }
        let generators = names
            .iter()
            .zip(parities)
            .enumerate()
            .map(|(index, (n, p))| Generator {
                name: n.to_string(),
                index,
                parity: *p,
            })
            .collect();
        Ok(AlgebraTable {
            name,
            generators,
            table: canonical,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, index: usize) -> &Generator {
        &self.generators[index]
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.generators[index].parity
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// The expansion of `g_row ∘ g_col`.
    pub fn entry(&self, row: usize, col: usize) -> &[Term] {
        &self.table[row][col]
    }

    /// True when this table is the four-letter algebra A (names, grading and
    /// products), whatever it is called.
    pub fn is_quaternion_deformation(&self) -> bool {
        let a = quaternion_deformation();
        self.generators == a.generators && self.table == a.table
    }

    /// Renders a single table entry, e.g. `-d`, `0`, `b + 2c`.
    pub fn format_entry(&self, row: usize, col: usize) -> String {
        format_terms(self, self.entry(row, col))
    }

    pub fn from_document(doc: AlgebraDocument) -> Result<AlgebraTable> {
        if doc.dim <= 0 {
            return Err(Error::DimensionMismatch(format!(
                "dim must be positive, found {}",
                doc.dim
            )));
        }
        let dim = doc.dim as usize;
        if doc.generators.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} generator names for dim {dim}",
                doc.generators.len()
            )));
        }
        if doc.parity.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} parities for dim {dim}",
                doc.parity.len()
            )));
        }
        let mut parities = Vec::with_capacity(dim);
        for (index, &value) in doc.parity.iter().enumerate() {
            let p = u8::try_from(value)
                .ok()
                .and_then(Parity::from_bit)
                .ok_or(Error::BadParity { index, value })?;
            parities.push(p);
        }
        if doc.table.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "table has {} rows, expected {dim}",
                doc.table.len()
            )));
        }
        let mut table = Vec::with_capacity(dim);
        for (row, cols) in doc.table.into_iter().enumerate() {
            if cols.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "table row {row} has {} columns, expected {dim}",
                    cols.len()
                )));
            }
            let mut out_row = Vec::with_capacity(dim);
            for (col, terms) in cols.into_iter().enumerate() {
                let mut out = Vec::with_capacity(terms.len());
                for t in terms {
                    if t.i < 0 || t.i as usize >= dim {
                        return Err(Error::BadIndex {
                            row,
                            col,
                            index: t.i,
                        });
                    }
                    let coeff: Scalar = t.c.parse().map_err(|_| {
                        Error::Document(format!(
                            "bad rational {:?} in table entry ({row}, {col})",
                            t.c
                        ))
                    })?;
                    out.push(Term {
                        coeff,
                        index: t.i as usize,
                    });
                }
                out_row.push(out);
            }
            table.push(out_row);
        }
        let names: Vec<&str> = doc.generators.iter().map(String::as_str).collect();
        AlgebraTable::new(doc.name, &names, &parities, table)
    }

    pub fn from_json_str(text: &str) -> Result<AlgebraTable> {
        let doc: AlgebraDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        AlgebraTable::from_document(doc)
    }

    pub fn to_document(&self) -> AlgebraDocument {
        AlgebraDocument {
            name: self.name.clone(),
            dim: self.dim() as i64,
            generators: self.generators.iter().map(|g| g.name.clone()).collect(),
            parity: self
                .generators
                .iter()
                .map(|g| g.parity.bit() as i64)
                .collect(),
            table: self
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|terms| {
                            terms
                                .iter()
                                .map(|t| TermDocument {
                                    c: t.coeff.to_string(),
                                    i: t.index as i64,
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// A copy of this table with entry `(row, col)` replaced.
    pub fn with_entry(&self, row: usize, col: usize, terms: Vec<Term>) -> Result<AlgebraTable> {
        let mut table = self.table.clone();
        table[row][col] = terms;
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        let parities: Vec<Parity> = self.generators.iter().map(|g| g.parity).collect();
        AlgebraTable::new(format!("{}*", self.name), &names, &parities, table)
    }

    /// The algebra of the given dimension in which every product vanishes.
    pub fn zero_algebra(dim: usize) -> AlgebraTable {
        let names: Vec<String> = (1..=dim).map(|i| format!("e{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        AlgebraTable::new(
            format!("Zero{dim}"),
            &names,
            &vec![Parity::Even; dim],
            vec![vec![Vec::new(); dim]; dim],
        )
        .expect("zero algebra is well formed")
    }

    /// Two-dimensional antiassociative toy algebra: `e1 ∘ e1 = e2`, every
    /// other product zero. `e1` is odd so the grading is respected.
    pub fn toy_antiassociative() -> AlgebraTable {
        let mut table = vec![vec![Vec::new(); 2]; 2];
        table[0][0] = vec![Term::new(1, 1)];
        AlgebraTable::new("T2", &["e1", "e2"], &[Parity::Odd, Parity::Even], table)
            .expect("T2 is well formed")
    }
}

impl fmt::Display for AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Renders a linear combination of generators.
pub(crate) fn format_terms(alg: &AlgebraTable, terms: &[Term]) -> String {
    let iter = terms.iter().map(|t| (t.index, &t.coeff));
    format_combination(alg, iter)
}

pub(crate) fn format_combination<'a>(
    alg: &AlgebraTable,
    terms: impl Iterator<Item = (usize, &'a Scalar)>,
) -> String {
    let mut out = String::new();
    for (index, coeff) in terms {
        let name = &alg.generator(index).name;
        let negative = coeff.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = coeff.abs();
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            // numeric generator names such as `1` need a separator
            if !name.starts_with(|c: char| c.is_ascii_alphabetic()) {
                out.push(' ');
            }
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn signed_table(rows: [[(i64, usize); 4]; 4]) -> Vec<Vec<Vec<Term>>> {
    rows.iter()
        .map(|row| row.iter().map(|&(c, i)| vec![Term::new(c, i)]).collect())
        .collect()
}

/// The graded quaternion deformation A with basis `a, b, c, d`, even part
/// `span{a, b}` and odd part `span{c, d}`.
///
/// ```text
///  ∘ | a   b   c   d
/// ---+----------------
///  a | a   b  -d  -c
///  b | b  -a  -d   c
///  c | c   d   a  -b
///  d | d  -c   b  -a
/// ```
pub fn quaternion_deformation() -> Arc<AlgebraTable> {
    static A: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    A.get_or_init(|| {
        const A: usize = 0;
        const B: usize = 1;
        const C: usize = 2;
        const D: usize = 3;
        let table = signed_table([
            [(1, A), (1, B), (-1, D), (-1, C)],
            [(1, B), (-1, A), (-1, D), (1, C)],
            [(1, C), (1, D), (1, A), (-1, B)],
            [(1, D), (-1, C), (1, B), (-1, A)],
        ]);
        Arc::new(
            AlgebraTable::new(
                "A",
                &["a", "b", "c", "d"],
                &[Parity::Even, Parity::Even, Parity::Odd, Parity::Odd],
                table,
            )
            .expect("built-in table is well formed"),
        )
    })
    .clone()
}

/// The real quaternions with basis `1, i, j, k`, all even.
pub fn quaternions() -> Arc<AlgebraTable> {
    static H: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    H.get_or_init(|| {
        const ONE: usize = 0;
        const I: usize = 1;
        const J: usize = 2;
        const K: usize = 3;
        let table = signed_table([
            [(1, ONE), (1, I), (1, J), (1, K)],
            [(1, I), (-1, ONE), (1, K), (-1, J)],
            [(1, J), (-1, K), (-1, ONE), (1, I)],
            [(1, K), (1, J), (-1, I), (-1, ONE)],
        ]);
        Arc::new(
            AlgebraTable::new("H", &["1", "i", "j", "k"], &[Parity::Even; 4], table)
                .expect("built-in table is well formed"),
        )
    })
    .clone()
}

/// The complex numbers with basis `1, i`, both even.
pub fn complex_numbers() -> Arc<AlgebraTable> {
    static C: OnceLock<Arc<AlgebraTable>> = OnceLock::new();
    C.get_or_init(|| {
        let table = vec![
            vec![vec![Term::new(1, 0)], vec![Term::new(1, 1)]],
            vec![vec![Term::new(1, 1)], vec![Term::new(-1, 0)]],
        ];
        Arc::new(
            AlgebraTable::new("C", &["1", "i"], &[Parity::Even; 2], table)
                .expect("built-in table is well formed"),
        )
    })
    .clone()
}

/// Resolves a built-in identifier (`A`, `H`, `C`) or parses a JSON algebra
/// document.
pub fn load_algebra(source: &str) -> Result<Arc<AlgebraTable>> {
    match source.trim() {
        "A" => Ok(quaternion_deformation()),
        "H" => Ok(quaternions()),
        "C" => Ok(complex_numbers()),
        text => AlgebraTable::from_json_str(text).map(Arc::new),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_have_single_unit_terms() {
        for alg in [quaternion_deformation(), quaternions(), complex_numbers()] {
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let e = alg.entry(i, j);
                    assert_eq!(e.len(), 1, "{alg} ({i},{j})");
                    assert!(e[0].coeff.abs().is_one());
                }
            }
        }
    }

    #[test]
    fn builtin_identifiers_resolve() {
        assert!(load_algebra("A").unwrap().is_quaternion_deformation());
        assert_eq!(load_algebra("H").unwrap().name(), "H");
        assert_eq!(load_algebra("C").unwrap().dim(), 2);
        assert!(!quaternions().is_quaternion_deformation());
    }

    #[test]
    fn document_roundtrip() {
        let a = quaternion_deformation();
        let json = serde_json::to_string(&a.to_document()).unwrap();
        let back = AlgebraTable::from_json_str(&json).unwrap();
        assert_eq!(&back, a.as_ref());
        assert!(back.is_quaternion_deformation());
    }

    #[test]
    fn zero_table_loads() {
        let doc = r#"{"name":"Z","dim":2,"generators":["x","y"],"parity":[0,1],
                      "table":[[[],[]],[[],[]]]}"#;
        let z = load_algebra(doc).unwrap();
        assert_eq!(z.dim(), 2);
        assert!(z.entry(1, 1).is_empty());
    }

    #[test]
    fn document_validation_errors() {
        let base = |dim: &str, parity: &str, table: &str| {
            format!(
                r#"{{"name":"X","dim":{dim},"generators":["x","y"],"parity":{parity},"table":{table}}}"#
            )
        };
        let ok_table = r#"[[[],[]],[[],[]]]"#;
        assert!(matches!(
            load_algebra(&base("3", "[0,1]", ok_table)),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            load_algebra(&base("2", "[0,2]", ok_table)),
            Err(Error::BadParity { index: 1, value: 2 })
        ));
        assert!(matches!(
            load_algebra(&base("2", "[0,1]", r#"[[[{"c":"1","i":5}],[]],[[],[]]]"#)),
            Err(Error::BadIndex {
                row: 0,
                col: 0,
                index: 5
            })
        ));
        assert!(matches!(
            load_algebra(&base("2", "[0,1]", r#"[[[{"c":"1/0","i":0}],[]],[[],[]]]"#)),
            Err(Error::Document(_))
        ));
        assert!(matches!(
            load_algebra(&base("2", "[0,1]", r#"[[[],[]]]"#)),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(load_algebra("{not json"), Err(Error::Document(_))));
    }

    #[test]
    fn entries_are_canonicalised() {
        let t = AlgebraTable::new(
            "X",
            &["x"],
            &[Parity::Even],
            vec![vec![vec![Term::new(1, 0), Term::new(-1, 0)]]],
        )
        .unwrap();
        assert!(t.entry(0, 0).is_empty());
        assert_eq!(t.format_entry(0, 0), "0");
    }
}

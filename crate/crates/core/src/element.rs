//! Elements of a structure-constant algebra and the bilinear product.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::algebra::{format_combination, AlgebraTable, Parity};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A rational linear combination of basis generators. Zero coefficients are
/// never stored.
#[derive(Clone, Debug)]
pub struct Element {
    alg: Arc<AlgebraTable>,
    coeffs: BTreeMap<usize, Scalar>,
}

/// Grading class of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementParity {
    Zero,
    Even,
    Odd,
    Inhomogeneous,
}

impl ElementParity {
    /// The homogeneous parity, if any. Zero has none.
    pub fn homogeneous(self) -> Option<Parity> {
        match self {
            ElementParity::Even => Some(Parity::Even),
            ElementParity::Odd => Some(Parity::Odd),
            _ => None,
        }
    }
}

pub(crate) fn same_algebra(x: &Arc<AlgebraTable>, y: &Arc<AlgebraTable>) -> bool {
    Arc::ptr_eq(x, y) || x == y
}

impl Element {
    pub fn zero(alg: &Arc<AlgebraTable>) -> Element {
        Element {
            alg: alg.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis generator `g_index`. Panics if the index is out of range.
    pub fn basis(alg: &Arc<AlgebraTable>, index: usize) -> Element {
        assert!(index < alg.dim(), "basis index {index} out of range");
        Element::from_terms(alg, [(index, Scalar::one())])
    }

    /// Looks a generator up by name.
    pub fn generator(alg: &Arc<AlgebraTable>, name: &str) -> Result<Element> {
        alg.index_of(name)
            .map(|i| Element::basis(alg, i))
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Sums `(index, coeff)` pairs. Panics on an out-of-range index.
    pub fn from_terms(
        alg: &Arc<AlgebraTable>,
        terms: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Element {
        let mut e = Element::zero(alg);
        for (i, c) in terms {
            assert!(i < alg.dim(), "basis index {i} out of range");
            e.add_term(i, &c);
        }
        e
    }

    fn add_term(&mut self, index: usize, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(index).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn algebra(&self) -> &Arc<AlgebraTable> {
        &self.alg
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.coeffs.get(&index).cloned().unwrap_or_default()
    }

    /// Nonzero `(index, coeff)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coordinate vector in basis order.
    pub fn coordinates(&self) -> Vec<Scalar> {
        (0..self.alg.dim()).map(|i| self.coeff(i)).collect()
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(Error::MixedAlgebra {
                left: self.alg.name().to_string(),
                right: other.alg.name().to_string(),
            })
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        if k.is_zero() {
            return Element::zero(&self.alg);
        }
        Element {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|(i, c)| (*i, c * k)).collect(),
        }
    }

    /// Bilinear extension of the multiplication table.
    pub fn product(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let mut out = Element::zero(&self.alg);
        for (i, x) in self.terms() {
            for (j, y) in other.terms() {
                let xy = x * y;
                for t in self.alg.entry(i, j) {
                    out.add_term(t.index, &(&xy * &t.coeff));
                }
            }
        }
        Ok(out)
    }

    pub fn parity(&self) -> ElementParity {
        let mut seen: Option<Parity> = None;
        for i in self.coeffs.keys() {
            let p = self.alg.parity(*i);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return ElementParity::Inhomogeneous,
                _ => {}
            }
        }
        match seen {
            None => ElementParity::Zero,
            Some(Parity::Even) => ElementParity::Even,
            Some(Parity::Odd) => ElementParity::Odd,
        }
    }

    /// `{generator name: "p/q"}` with keys in sorted order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("element serialises")
    }
}

/// `x ∘ y` extended bilinearly from the table.
pub fn binary_product(x: &Element, y: &Element) -> Result<Element> {
    x.product(y)
}

pub fn parity_of(x: &Element) -> ElementParity {
    x.parity()
}

impl PartialEq for Element {
    fn eq(&self, other: &Element) -> bool {
        same_algebra(&self.alg, &other.alg) && self.coeffs == other.coeffs
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.alg, self.terms()))
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let sorted: BTreeMap<&str, String> = self
            .terms()
            .map(|(i, c)| (self.alg.generator(i).name.as_str(), c.to_string()))
            .collect();
        let mut map = serializer.serialize_map(Some(sorted.len()))?;
        for (k, v) in sorted {
            map.serialize_entry(k, &v)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quaternion_deformation, quaternions};

    fn a_gen(name: &str) -> Element {
        Element::generator(&quaternion_deformation(), name).unwrap()
    }

    #[test]
    fn b_times_c_is_minus_d() {
        assert_eq!(a_gen("b").product(&a_gen("c")).unwrap(), a_gen("d").neg());
    }

    #[test]
    fn a_is_right_identity_only() {
        let a = a_gen("a");
        for n in ["a", "b", "c", "d"] {
            assert_eq!(a_gen(n).product(&a).unwrap(), a_gen(n));
        }
        assert_eq!(a.product(&a_gen("c")).unwrap(), a_gen("d").neg());
    }

    #[test]
    fn nilpotent_superpositions() {
        let n1 = a_gen("b").add(&a_gen("c")).unwrap();
        let n2 = a_gen("c").add(&a_gen("d")).unwrap();
        assert!(n1.product(&n1).unwrap().is_zero());
        assert!(n2.product(&n2).unwrap().is_zero());
    }

    #[test]
    fn zero_annihilates() {
        let z = Element::zero(&quaternion_deformation());
        assert!(z.product(&a_gen("d")).unwrap().is_zero());
        assert!(a_gen("d").product(&z).unwrap().is_zero());
    }

    #[test]
    fn cross_algebra_is_an_error() {
        let i = Element::generator(&quaternions(), "i").unwrap();
        assert!(matches!(
            a_gen("a").product(&i),
            Err(Error::MixedAlgebra { .. })
        ));
        assert!(matches!(
            a_gen("a").add(&i),
            Err(Error::MixedAlgebra { .. })
        ));
        assert_ne!(a_gen("a"), Element::generator(&quaternions(), "1").unwrap());
    }

    #[test]
    fn parity_classes() {
        let alg = quaternion_deformation();
        let e = Element::from_terms(&alg, [(0, Scalar::one()), (1, Scalar::from_int(3))]);
        assert_eq!(e.parity(), ElementParity::Even);
        assert_eq!(
            a_gen("c").sub(&a_gen("d")).unwrap().parity(),
            ElementParity::Odd
        );
        assert_eq!(
            a_gen("b").add(&a_gen("c")).unwrap().parity(),
            ElementParity::Inhomogeneous
        );
        assert_eq!(Element::zero(&alg).parity(), ElementParity::Zero);
    }

    #[test]
    fn display_and_json() {
        let alg = quaternion_deformation();
        let e = Element::from_terms(&alg, [(2, Scalar::from_int(2)), (3, Scalar::new(-1, 2))]);
        assert_eq!(e.to_string(), "2c - 1/2d");
        assert_eq!(e.to_json().to_string(), r#"{"c":"2","d":"-1/2"}"#);
        assert_eq!(a_gen("a").neg().to_string(), "-a");
        assert_eq!(Element::zero(&alg).to_string(), "0");
        let h = quaternions();
        let two = Element::from_terms(&h, [(0, Scalar::from_int(2))]);
        assert_eq!(two.to_string(), "2 1");
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::rootsys::Root;

/// Names one basis vector. The root payload is always positive;
/// `Lower(r)` has weight `−r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorLabel {
    Cartan(Root),
    Raise(Root),
    Lower(Root),
}

impl GeneratorLabel {
    /// The root generator of weight `r` (raise for positive, lower for negative).
    pub fn for_root(r: Root) -> Self {
        if r.is_negative() {
            GeneratorLabel::Lower(-r)
        } else {
            GeneratorLabel::Raise(r)
        }
    }

    pub fn root(self) -> Root {
        match self {
            GeneratorLabel::Cartan(r) | GeneratorLabel::Raise(r) | GeneratorLabel::Lower(r) => r,
        }
    }

    pub fn weight(self) -> Root {
        match self {
            GeneratorLabel::Cartan(_) => Root::new(0, 0),
            GeneratorLabel::Raise(r) => r,
            GeneratorLabel::Lower(r) => -r,
        }
    }

    pub fn is_cartan(self) -> bool {
        matches!(self, GeneratorLabel::Cartan(_))
    }

    /// Opposite root generator; Cartan labels map to themselves.
    pub fn partner(self) -> Self {
        match self {
            GeneratorLabel::Cartan(r) => GeneratorLabel::Cartan(r),
            GeneratorLabel::Raise(r) => GeneratorLabel::Lower(r),
            GeneratorLabel::Lower(r) => GeneratorLabel::Raise(r),
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, r) = match self {
            GeneratorLabel::Cartan(r) => ('H', r),
            GeneratorLabel::Raise(r) => ('E', r),
            GeneratorLabel::Lower(r) => ('F', r),
        };
        write!(f, "{k}{r}")
    }
}

impl FromStr for GeneratorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownGenerator(s.to_string());
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let root: Root = chars.as_str().parse().map_err(|_| bad())?;
        if !root.is_positive() {
            return Err(bad());
        }
        match kind {
            'H' => Ok(GeneratorLabel::Cartan(root)),
            'E' | 'X' => Ok(GeneratorLabel::Raise(root)),
            'F' | 'Y' => Ok(GeneratorLabel::Lower(root)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for GeneratorLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GeneratorLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Finite linear combination of generators. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<GeneratorLabel, FieldElement>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(label: GeneratorLabel) -> Self {
        Element::term(label, FieldElement::one())
    }

    pub fn term(label: GeneratorLabel, coeff: FieldElement) -> Self {
        let mut e = Element::zero();
        e.add_term(label, coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GeneratorLabel, FieldElement)>) -> Self {
        let mut e = Element::zero();
        for (l, c) in terms {
            e.add_term(l, c);
        }
        e
    }

    pub fn add_term(&mut self, label: GeneratorLabel, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&label);
                }
            }
            None => {
                self.terms.insert(label, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: GeneratorLabel) -> FieldElement {
        self.terms.get(&label).cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (GeneratorLabel, &FieldElement)> {
        self.terms.iter().map(|(l, c)| (*l, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        Element::from_terms(self.terms.iter().map(|(l, c)| (*l, c * s)))
    }

    /// `Some(c)` when `self = c·label` (including `c = 0`).
    pub fn proportional_to(&self, label: GeneratorLabel) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(FieldElement::zero()),
            1 => self.terms.get(&label).cloned(),
            _ => None,
        }
    }

    /// The part of `self` supported on generators of weight `w`.
    pub fn weight_part(&self, w: Root) -> Self {
        Element {
            terms: self.terms.iter().filter(|(l, _)| l.weight() == w).map(|(l, c)| (*l, c.clone())).collect(),
        }
    }

    /// Replaces every label by `f(label)·label`.
    pub fn map_coeffs(&self, mut f: impl FnMut(GeneratorLabel, &FieldElement) -> FieldElement) -> Self {
        Element::from_terms(self.terms.iter().map(|(l, c)| (*l, f(*l, c))))
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(*l, c.clone());
        }
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(l, c)| (*l, -c)).collect() }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl From<GeneratorLabel> for Element {
    fn from(l: GeneratorLabel) -> Self {
        Element::basis(l)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{l}")?;
            } else if c.as_rational().is_some() {
                write!(f, "{c} {l}")?;
            } else {
                write!(f, "({c}) {l}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermRecord {
    pub label: GeneratorLabel,
    pub coeff: FieldElement,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (l, c) in &self.terms {
            seq.serialize_element(&TermRecord { label: *l, coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(d)?;
        Ok(Element::from_terms(recs.into_iter().map(|t| (t.label, t.coeff))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(m1: i32, m2: i32) -> GeneratorLabel {
        GeneratorLabel::Raise(Root::new(m1, m2))
    }

    #[test]
    fn label_text() {
        assert_eq!(e(1, 2).to_string(), "E[1,2]");
        assert_eq!("F[2,3]".parse::<GeneratorLabel>().unwrap(), GeneratorLabel::Lower(Root::new(2, 3)));
        assert_eq!("H[1,0]".parse::<GeneratorLabel>().unwrap(), GeneratorLabel::Cartan(Root::new(1, 0)));
        assert!("E[-1,0]".parse::<GeneratorLabel>().is_err());
        assert!("Q[1,0]".parse::<GeneratorLabel>().is_err());
        assert_eq!(GeneratorLabel::for_root(Root::new(-1, -1)), GeneratorLabel::Lower(Root::new(1, 1)));
    }

    #[test]
    fn label_order_groups_kinds() {
        let mut v = vec![GeneratorLabel::Lower(Root::new(1, 0)), e(0, 1), GeneratorLabel::Cartan(Root::new(0, 1)), e(1, 0)];
        v.sort();
        assert_eq!(v, vec![GeneratorLabel::Cartan(Root::new(0, 1)), e(1, 0), e(0, 1), GeneratorLabel::Lower(Root::new(1, 0))]);
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = Element::term(e(1, 0), FieldElement::sqrt2());
        let y = Element::term(e(1, 0), -FieldElement::sqrt2());
        assert!((&x + &y).is_zero());
        assert!(x.scale(&FieldElement::zero()).is_zero());
        assert_eq!(Element::zero().proportional_to(e(1, 0)), Some(FieldElement::zero()));
    }

    #[test]
    fn element_json_round_trip() {
        let x = Element::from_terms([(e(1, 0), FieldElement::frac(1, 2)), (e(0, 1), FieldElement::sqrt6())]);
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.contains("\"label\":\"E[1,0]\""));
        assert_eq!(serde_json::from_str::<Element>(&s).unwrap(), x);
    }
}

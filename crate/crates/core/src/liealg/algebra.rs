use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::label::{Element, GeneratorLabel};
use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::rootsys::{Root, RootSystem};

pub type Matrix = Vec<Vec<FieldElement>>;

/// A Lie algebra given by its bracket table on an ordered basis.
///
/// Only pairs `i < j` are stored; `[b_j, b_i] = −[b_i, b_j]` and
/// `[b_i, b_i] = 0` are implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    root_system: RootSystem,
    basis: Vec<GeneratorLabel>,
    index: HashMap<GeneratorLabel, usize>,
    table: Vec<Vec<Element>>,
}

/// Serialized table layout shared by emission and golden fixtures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub basis: Vec<GeneratorLabel>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub x: GeneratorLabel,
    pub y: GeneratorLabel,
    pub result: Element,
}

/// H by simple index, then raising generators by root order, then lowering.
pub fn standard_basis(rs: &RootSystem) -> Vec<GeneratorLabel> {
    let mut b = vec![GeneratorLabel::Cartan(Root::simple(1)), GeneratorLabel::Cartan(Root::simple(2))];
    b.extend(rs.positive_roots().iter().map(|&r| GeneratorLabel::Raise(r)));
    b.extend(rs.positive_roots().iter().map(|&r| GeneratorLabel::Lower(r)));
    b
}

impl LieAlgebra {
    /// Builds a table from `([x, y], value)` entries on the standard basis.
    /// Either orientation of a pair may be given; giving both is allowed only
    /// if they agree up to sign. Every unordered pair must be covered.
    pub fn from_entries(
        rs: RootSystem,
        entries: impl IntoIterator<Item = (GeneratorLabel, GeneratorLabel, Element)>,
    ) -> Result<Self> {
        let basis = standard_basis(&rs);
        let index: HashMap<_, _> = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let n = basis.len();
        let mut slots: Vec<Vec<Option<Element>>> = vec![vec![None; n]; n];
        for (x, y, value) in entries {
            let i = *index.get(&x).ok_or_else(|| Error::UnknownGenerator(x.to_string()))?;
            let j = *index.get(&y).ok_or_else(|| Error::UnknownGenerator(y.to_string()))?;
            for (l, _) in value.terms() {
                if !index.contains_key(&l) {
                    return Err(Error::UnknownGenerator(l.to_string()));
                }
            }
            if i == j {
                if !value.is_zero() {
                    return Err(Error::Antisymmetry(x.to_string(), y.to_string()));
                }
                continue;
            }
            let (a, b, v) = if i < j { (i, j, value) } else { (j, i, -value) };
            match &slots[a][b] {
                Some(old) if *old != v => {
                    return Err(Error::Antisymmetry(basis[a].to_string(), basis[b].to_string()));
                }
                _ => slots[a][b] = Some(v),
            }
        }
        let mut table = vec![vec![Element::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = slots[i][j]
                    .take()
                    .ok_or_else(|| Error::IncompleteTable(basis[i].to_string(), basis[j].to_string()))?;
                table[j][i] = -&v;
                table[i][j] = v;
            }
        }
        Ok(LieAlgebra { root_system: rs, basis, index, table })
    }

    pub fn from_doc(rs: RootSystem, doc: &TableDoc) -> Result<Self> {
        let expected = standard_basis(&rs);
        if doc.basis != expected {
            return Err(Error::Json("basis does not match the standard basis order".into()));
        }
        Self::from_entries(rs, doc.brackets.iter().map(|b| (b.x, b.y, b.result.clone())))
    }

    pub fn from_json(rs: RootSystem, text: &str) -> Result<Self> {
        let doc: TableDoc = serde_json::from_str(text)?;
        Self::from_doc(rs, &doc)
    }

    pub fn to_doc(&self) -> TableDoc {
        let mut brackets = Vec::new();
        for (i, &x) in self.basis.iter().enumerate() {
            for (j, &y) in self.basis.iter().enumerate().skip(i + 1) {
                brackets.push(BracketEntry { x, y, result: self.table[i][j].clone() });
            }
        }
        TableDoc { basis: self.basis.clone(), brackets }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("table serializes")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn basis(&self) -> &[GeneratorLabel] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, label: GeneratorLabel) -> Result<usize> {
        self.index.get(&label).copied().ok_or_else(|| Error::UnknownGenerator(label.to_string()))
    }

    /// Table lookup for two basis generators.
    pub fn bracket_basis(&self, x: GeneratorLabel, y: GeneratorLabel) -> Result<&Element> {
        Ok(&self.table[self.index_of(x)?][self.index_of(y)?])
    }

    pub(crate) fn entry(&self, i: usize, j: usize) -> &Element {
        &self.table[i][j]
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (a, ca) in x.terms() {
            let i = self.index_of(a)?;
            for (b, cb) in y.terms() {
                let j = self.index_of(b)?;
                let s = ca * cb;
                for (l, c) in self.table[i][j].terms() {
                    out.add_term(l, c * &s);
                }
            }
        }
        Ok(out)
    }

    /// Returns a copy with one entry (and its transpose) replaced.
    pub fn with_entry(&self, x: GeneratorLabel, y: GeneratorLabel, value: Element) -> Result<Self> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        if i == j {
            return Err(Error::Antisymmetry(x.to_string(), y.to_string()));
        }
        let mut out = self.clone();
        out.table[j][i] = -&value;
        out.table[i][j] = value;
        Ok(out)
    }

    /// Coordinates of `x` in basis order.
    pub fn coords(&self, x: &Element) -> Result<Vec<FieldElement>> {
        let mut v = vec![FieldElement::zero(); self.dim()];
        for (l, c) in x.terms() {
            v[self.index_of(l)?] = c.clone();
        }
        Ok(v)
    }

    /// Column `j` holds the coordinates of `[x, b_j]`.
    pub fn adjoint_matrix(&self, x: &Element) -> Result<Matrix> {
        let n = self.dim();
        let mut m = vec![vec![FieldElement::zero(); n]; n];
        for (j, &b) in self.basis.iter().enumerate() {
            let col = self.coords(&self.bracket(x, &Element::basis(b))?)?;
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        Ok(m)
    }

    /// The root generator of weight `r`.
    pub fn root_vector(&self, r: Root) -> Result<GeneratorLabel> {
        if !self.root_system.contains(r) {
            return Err(Error::NotARoot(r));
        }
        Ok(GeneratorLabel::for_root(r))
    }

    /// `H_γ = [gen γ, gen −γ]` as read from the table.
    pub fn cartan_element(&self, gamma: Root) -> Result<Element> {
        let e = self.root_vector(gamma)?;
        let f = self.root_vector(-gamma)?;
        Ok(self.bracket_basis(e, f)?.clone())
    }

    /// Expands a label into basis coordinates; non-simple Cartan labels go
    /// through [`cartan_element`](Self::cartan_element).
    pub fn resolve_label(&self, label: GeneratorLabel) -> Result<Element> {
        match label {
            GeneratorLabel::Cartan(r) if !self.index.contains_key(&label) => self.cartan_element(r),
            _ => {
                self.index_of(label)?;
                Ok(Element::basis(label))
            }
        }
    }

    /// The scalar λ with `[h, e] = λ·e`.
    pub fn eigenvalue_of(&self, h: &Element, e: GeneratorLabel) -> Result<FieldElement> {
        let v = self.bracket(h, &Element::basis(e))?;
        v.proportional_to(e).ok_or_else(|| Error::NotAnEigenvector(h.to_string(), e.to_string()))
    }

    /// `⟨β, H_α⟩` for this table's own `H_α`.
    pub fn pairing(&self, beta: Root, alpha: Root) -> Result<FieldElement> {
        let h = self.cartan_element(alpha)?;
        self.eigenvalue_of(&h, self.root_vector(beta)?)
    }

    /// `N_{a,b}`: coefficient of `gen(a+b)` in `[gen a, gen b]`.
    pub fn structure_constant(&self, a: Root, b: Root) -> Result<FieldElement> {
        let (x, y) = (self.root_vector(a)?, self.root_vector(b)?);
        let s = a + b;
        if s.is_zero() {
            return Err(Error::CartanPair(a, b));
        }
        if !self.root_system.contains(s) {
            return Ok(FieldElement::zero());
        }
        Ok(self.bracket_basis(x, y)?.coeff(GeneratorLabel::for_root(s)))
    }

    /// Diagonal change of basis `b_i ↦ c_i·b_i`: the table of the new
    /// generators is `[b'_i, b'_j] = c_i c_j Σ_k (t_k / c_k) b'_k`.
    /// Missing labels keep factor 1.
    pub fn rescale(&self, factors: &BTreeMap<GeneratorLabel, FieldElement>) -> Result<Self> {
        let one = FieldElement::one();
        let f = |l: GeneratorLabel| factors.get(&l).unwrap_or(&one);
        for l in &self.basis {
            if f(*l).is_zero() {
                return Err(Error::ZeroFactor(l.to_string()));
            }
        }
        let table = self
            .table
            .iter()
            .zip(&self.basis)
            .map(|(row, &x)| {
                row.iter()
                    .zip(&self.basis)
                    .map(|(e, &y)| {
                        let cxy = f(x) * f(y);
                        e.map_coeffs(|l, c| &(c * &cxy) / f(l))
                    })
                    .collect()
            })
            .collect();
        Ok(LieAlgebra { table, ..self.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_basis_layout() {
        let b = standard_basis(&RootSystem::g2());
        let names: Vec<String> = b.iter().map(|l| l.to_string()).collect();
        assert_eq!(names[..4], ["H[1,0]", "H[0,1]", "E[1,0]", "E[0,1]"]);
        assert_eq!(names[13], "F[2,3]");
    }

    #[test]
    fn incomplete_and_inconsistent_inputs() {
        let rs = RootSystem::g2();
        assert!(matches!(LieAlgebra::from_entries(rs.clone(), []), Err(Error::IncompleteTable(_, _))));
        let h1 = GeneratorLabel::Cartan(Root::new(1, 0));
        let e1 = GeneratorLabel::Raise(Root::new(1, 0));
        let two_e1 = Element::term(e1, FieldElement::from_int(2));
        let r = LieAlgebra::from_entries(rs.clone(), [(h1, e1, two_e1.clone()), (e1, h1, two_e1)]);
        assert!(matches!(r, Err(Error::Antisymmetry(_, _))));
        let bogus = GeneratorLabel::Raise(Root::new(3, 0));
        let r = LieAlgebra::from_entries(rs, [(h1, bogus, Element::zero())]);
        assert!(matches!(r, Err(Error::UnknownGenerator(_))));
    }
}

//! Diagonal isomorphisms `a_i ↦ f_i·b_i` between two tables on the same
//! root system.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::liealg::{AuditReport, Element, GeneratorLabel, LieAlgebra};
use crate::rootsys::Root;

/// Image factors. Keys may include Cartan labels of non-simple roots, which
/// are checked against `[gen γ, gen −γ]` in both tables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagonalMap(pub BTreeMap<GeneratorLabel, FieldElement>);

impl DiagonalMap {
    pub fn identity(alg: &LieAlgebra) -> Self {
        let mut m: BTreeMap<_, _> = alg.basis().iter().map(|&l| (l, FieldElement::one())).collect();
        for &r in alg.root_system().positive_roots() {
            m.insert(GeneratorLabel::Cartan(r), FieldElement::one());
        }
        DiagonalMap(m)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: DiagonalMap = serde_json::from_str(text)?;
        m.validate()?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("map serializes")
    }

    pub fn factor(&self, l: GeneratorLabel) -> Result<&FieldElement> {
        self.0.get(&l).ok_or_else(|| Error::IncompleteMap(l.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        match self.0.iter().find(|(_, v)| v.is_zero()) {
            Some((l, _)) => Err(Error::ZeroFactor(l.to_string())),
            None => Ok(()),
        }
    }

    /// `φ(x)` with basis labels mapped by their factors.
    pub fn image(&self, x: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (l, c) in x.terms() {
            out.add_term(l, c * self.factor(l)?);
        }
        Ok(out)
    }

    fn require_basis(&self, alg: &LieAlgebra) -> Result<()> {
        for &l in alg.basis() {
            self.factor(l)?;
        }
        self.validate()
    }

    /// Factor-wise product `m ∘ m`.
    pub fn compose(&self, other: &DiagonalMap) -> DiagonalMap {
        DiagonalMap(
            self.0.iter().filter_map(|(l, a)| other.0.get(l).map(|b| (*l, a * b))).collect(),
        )
    }
}

/// The table that `source` induces on the target labels `b_i = a_i / f_i`:
/// `[b_i, b_j] = φ([a_i, a_j]) / (f_i f_j)`.
pub fn apply_map(source: &LieAlgebra, map: &DiagonalMap, target_basis: &LieAlgebra) -> Result<LieAlgebra> {
    if source.basis() != target_basis.basis() || source.root_system() != target_basis.root_system() {
        return Err(Error::NoMap("source and target bases differ".into()));
    }
    map.require_basis(source)?;
    let inv: BTreeMap<_, _> = source.basis().iter().map(|&l| Ok((l, map.factor(l)?.inv()?))).collect::<Result<_>>()?;
    source.rescale(&inv)
}

/// `φ([x, y]) = [φ(x), φ(y)]` on every unordered basis pair.
pub fn verify_homomorphism(a: &LieAlgebra, b: &LieAlgebra, map: &DiagonalMap) -> Result<AuditReport> {
    map.require_basis(a)?;
    let mut rep = AuditReport::new();
    let basis = a.basis();
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i + 1..] {
            let lhs = map.image(a.bracket_basis(x, y)?)?;
            let fxy = map.factor(x)? * map.factor(y)?;
            let rhs = b.bracket_basis(x, y)?.scale(&fxy);
            rep.record("homomorphism", format!("[{x}, {y}]"), lhs, rhs);
        }
    }
    Ok(rep)
}

/// For every Cartan label of a non-simple root in the map: `φ(H_γ^A) = f·H_γ^B`.
pub fn check_cartan_factors(a: &LieAlgebra, b: &LieAlgebra, map: &DiagonalMap) -> Result<AuditReport> {
    let mut rep = AuditReport::new();
    for (&l, f) in &map.0 {
        if let GeneratorLabel::Cartan(r) = l {
            let lhs = map.image(&a.cartan_element(r)?)?;
            let rhs = b.cartan_element(r)?.scale(f);
            rep.record("cartan-factor", format!("{l}"), lhs, rhs);
        }
    }
    Ok(rep)
}

/// Factors for the two simple raising generators; everything else follows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugePin {
    pub simple_raise: [FieldElement; 2],
}

impl GaugePin {
    pub fn unit() -> Self {
        GaugePin { simple_raise: [FieldElement::one(), FieldElement::one()] }
    }

    /// `X′_{α₁} = √2 X_{α₁}`, `X′_{α₂} = −(1/√3) X_{α₂}`.
    pub fn published() -> Self {
        GaugePin { simple_raise: [FieldElement::sqrt2(), FieldElement::sqrt3().scale(&crate::exactfield::Rational::frac(-1, 3))] }
    }

    pub fn named(name: &str) -> Result<Self> {
        match name {
            "unit" => Ok(Self::unit()),
            "published" => Ok(Self::published()),
            other => Err(Error::UnknownFixture(other.to_string())),
        }
    }
}

fn ratio(num: &FieldElement, den: &FieldElement, what: &str) -> Result<FieldElement> {
    if den.is_zero() != num.is_zero() {
        return Err(Error::NoMap(format!("{what} vanishes on one side only")));
    }
    num.checked_div(den).map_err(|_| Error::NoMap(format!("{what} vanishes")))
}

/// Solves for `φ: A → B` given the simple raising factors.
pub fn solve_diagonal_map(a: &LieAlgebra, b: &LieAlgebra, pin: &GaugePin) -> Result<DiagonalMap> {
    if a.basis() != b.basis() || a.root_system() != b.root_system() {
        return Err(Error::NoMap("tables live on different bases".into()));
    }
    let rs = a.root_system();
    let mut f: BTreeMap<GeneratorLabel, FieldElement> = BTreeMap::new();
    let simple = [Root::simple(1), Root::simple(2)];
    for (k, &s) in simple.iter().enumerate() {
        f.insert(GeneratorLabel::Raise(s), pin.simple_raise[k].clone());
    }
    // [H_i, E_i] = λ E_i on both sides: f(H_i) = λ_A / λ_B
    for &s in &simple {
        let h = GeneratorLabel::Cartan(s);
        let e = GeneratorLabel::Raise(s);
        let la = a.eigenvalue_of(&Element::basis(h), e)?;
        let lb = b.eigenvalue_of(&Element::basis(h), e)?;
        f.insert(h, ratio(&la, &lb, &format!("[{h}, {e}]"))?);
    }
    // E_γ = [E_s, E_r] / N: f(E_γ) = f(E_s) f(E_r) N_B / N_A
    for &gamma in rs.positive_roots().iter().filter(|r| !r.is_simple()) {
        let (s, r) = simple
            .iter()
            .map(|&s| (s, gamma - s))
            .find(|(_, r)| r.is_positive() && rs.contains(*r))
            .ok_or_else(|| Error::NoMap(format!("{gamma} does not split")))?;
        let na = a.structure_constant(s, r)?;
        let nb = b.structure_constant(s, r)?;
        let v = &(&f[&GeneratorLabel::Raise(s)] * &f[&GeneratorLabel::Raise(r)]) * &ratio(&nb, &na, &format!("N({s}, {r})"))?;
        f.insert(GeneratorLabel::Raise(gamma), v);
    }
    // [E_γ, F_γ]: φ of the A-side Cartan element equals f(E_γ) f(F_γ) times the B-side one
    let hs: Vec<GeneratorLabel> = simple.iter().map(|&s| GeneratorLabel::Cartan(s)).collect();
    for &gamma in rs.positive_roots() {
        let (e, fl) = (GeneratorLabel::Raise(gamma), GeneratorLabel::Lower(gamma));
        let ha = a.bracket_basis(e, fl)?;
        let hb = b.bracket_basis(e, fl)?;
        let mapped = Element::from_terms(ha.terms().map(|(l, c)| (l, c * &f[&l])));
        let k = hs
            .iter()
            .find(|&&h| !hb.coeff(h).is_zero())
            .ok_or_else(|| Error::NoMap(format!("[{e}, {fl}] vanishes")))?;
        let prod = ratio(&mapped.coeff(*k), &hb.coeff(*k), &format!("[{e}, {fl}]"))?;
        let fy = ratio(&prod, &f[&e], &format!("factor of {e}"))?;
        f.insert(fl, fy);
        if !gamma.is_simple() {
            f.insert(GeneratorLabel::Cartan(gamma), prod);
        }
    }
    let map = DiagonalMap(f);
    let mut rep = verify_homomorphism(a, b, &map)?;
    rep.extend(check_cartan_factors(a, b, &map)?);
    if let Some(bad) = rep.failures().next() {
        return Err(Error::NoMap(format!("{} fails at {}: {} vs {}", bad.identity, bad.instance, bad.lhs, bad.rhs)));
    }
    Ok(map)
}

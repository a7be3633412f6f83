use std::fmt;

use serde::Serialize;

use super::algebra::LieAlgebra;
use super::label::{Element, GeneratorLabel};
use crate::error::Result;
use crate::exactfield::FieldElement;
use crate::rootsys::{ChainRecord, Root};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum AuditValue {
    Scalar(FieldElement),
    Element(Element),
}

impl fmt::Display for AuditValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditValue::Scalar(s) => write!(f, "{s}"),
            AuditValue::Element(e) => write!(f, "{e}"),
        }
    }
}

impl From<FieldElement> for AuditValue {
    fn from(s: FieldElement) -> Self {
        AuditValue::Scalar(s)
    }
}

impl From<Element> for AuditValue {
    fn from(e: Element) -> Self {
        AuditValue::Element(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub instance: String,
    pub lhs: AuditValue,
    pub rhs: AuditValue,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `lhs == rhs`.
    pub fn record(&mut self, identity: &str, instance: String, lhs: impl Into<AuditValue>, rhs: impl Into<AuditValue>) {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let pass = lhs == rhs;
        self.checks.push(Check { identity: identity.to_string(), instance, lhs, rhs, pass });
    }

    pub fn extend(&mut self, other: AuditReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn find(&self, instance: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.instance == instance)
    }

    pub fn summary(&self) -> String {
        format!("{} pass / {} fail", self.passed(), self.failed())
    }
}

fn pair(a: Root, b: Root) -> String {
    format!("({}, {})", a.pretty(), b.pretty())
}

fn basis_pair(x: GeneratorLabel, y: GeneratorLabel) -> String {
    format!("[{x}, {y}]")
}

/// `[x, y] + [y, x] = 0` on every ordered pair and `[x, x] = 0`.
pub fn check_antisymmetry(alg: &LieAlgebra) -> Result<AuditReport> {
    let mut rep = AuditReport::new();
    let b = alg.basis();
    for i in 0..b.len() {
        for j in i..b.len() {
            let (ex, ey) = (Element::basis(b[i]), Element::basis(b[j]));
            let fwd = alg.bracket(&ex, &ey)?;
            let rhs = if i == j { Element::zero() } else { -alg.bracket(&ey, &ex)? };
            rep.record("antisymmetry", basis_pair(b[i], b[j]), fwd, rhs);
        }
    }
    Ok(rep)
}

/// Every entry is supported on the weight `w(x) + w(y)`.
pub fn check_grading(alg: &LieAlgebra) -> AuditReport {
    let mut rep = AuditReport::new();
    let b = alg.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let v = alg.entry(i, j);
            let w = b[i].weight() + b[j].weight();
            rep.record("grading", basis_pair(b[i], b[j]), v.clone(), v.weight_part(w));
        }
    }
    rep
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on unordered basis triples.
pub fn check_jacobi(alg: &LieAlgebra) -> Result<AuditReport> {
    let mut rep = AuditReport::new();
    let b = alg.basis();
    let n = b.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (Element::basis(b[i]), Element::basis(b[j]), Element::basis(b[k]));
                let s = alg.bracket(alg.entry(i, j), &z)? + alg.bracket(alg.entry(j, k), &x)? + alg.bracket(alg.entry(k, i), &y)?;
                rep.record("jacobi", format!("({}, {}, {})", b[i], b[j], b[k]), s, Element::zero());
            }
        }
    }
    Ok(rep)
}

/// Antisymmetry, grading and the full Jacobi sweep.
pub fn check_antisymmetry_jacobi(alg: &LieAlgebra) -> Result<AuditReport> {
    let mut rep = check_antisymmetry(alg)?;
    rep.extend(check_grading(alg));
    rep.extend(check_jacobi(alg)?);
    Ok(rep)
}

/// `(ad E_i)^{1−a_ij} E_j = 0` and the lowering counterpart for `i ≠ j`.
pub fn check_serre(alg: &LieAlgebra) -> Result<AuditReport> {
    let mut rep = AuditReport::new();
    let cartan = *alg.root_system().cartan();
    for (i, j) in [(1, 2), (2, 1)] {
        let n = 1 - cartan.get(i, j);
        let (ai, aj) = (Root::simple(i), Root::simple(j));
        for (kind, gi, gj) in [
            ("E", GeneratorLabel::Raise(ai), GeneratorLabel::Raise(aj)),
            ("F", GeneratorLabel::Lower(ai), GeneratorLabel::Lower(aj)),
        ] {
            let mut v = Element::basis(gj);
            for _ in 0..n {
                v = alg.bracket(&Element::basis(gi), &v)?;
            }
            rep.record("serre", format!("(ad {kind}{ai})^{n} {kind}{aj}"), v, Element::zero());
        }
    }
    Ok(rep)
}

/// `N_{α,β} = −N_{−α,−β}` over all ordered composable pairs.
pub fn audit_identity_28(alg: &LieAlgebra) -> Result<AuditReport> {
    let mut rep = AuditReport::new();
    let rs = alg.root_system();
    for a in rs.roots() {
        for b in rs.roots() {
            if a + b == Root::new(0, 0) || a == b || !rs.contains(a + b) {
                continue;
            }
            let lhs = alg.structure_constant(a, b)?;
            let rhs = -alg.structure_constant(-a, -b)?;
            rep.record("prop28", pair(a, b), lhs, rhs);
        }
    }
    Ok(rep)
}

/// `N_{α,β} = N_{β,−α−β} = N_{−α−β,α}` on every zero-sum triple, as two
/// equalities per triple.
pub fn audit_identity_29(alg: &LieAlgebra) -> Result<AuditReport> {
    let mut rep = AuditReport::new();
    for [a, b, c] in alg.root_system().zero_sum_triples() {
        let inst = format!("({}, {}, {})", a.pretty(), b.pretty(), c.pretty());
        let nab = alg.structure_constant(a, b)?;
        let nbc = alg.structure_constant(b, c)?;
        let nca = alg.structure_constant(c, a)?;
        rep.record("prop29", inst.clone(), nab, nbc.clone());
        rep.record("prop29", inst, nbc, nca);
    }
    Ok(rep)
}

/// `N_{α,β} N_{−α,−β} = −½ q(p+1) ⟨α, H_α⟩` for each chain, with `⟨α, H_α⟩`
/// read from the algebra's own Cartan action.
pub fn audit_identity_211(alg: &LieAlgebra, chains: &[ChainRecord]) -> Result<AuditReport> {
    let mut rep = AuditReport::new();
    for ch in chains {
        let (a, b) = (ch.alpha, ch.beta);
        let lhs = &alg.structure_constant(a, b)? * &alg.structure_constant(-a, -b)?;
        let norm = alg.pairing(a, a)?;
        let k = FieldElement::frac(-(ch.q as i64) * (ch.p as i64 + 1), 2);
        let inst = format!("β={}, α={}, p={}, q={}", b.pretty(), a.pretty(), ch.p, ch.q);
        rep.record("prop211", inst, lhs, &k * &norm);
    }
    Ok(rep)
}

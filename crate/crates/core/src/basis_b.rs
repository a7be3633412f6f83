//! The cyclic construction: structure constants chosen to satisfy the cyclic
//! identity and the chain product identity, Cartan data completed by Jacobi.

use std::collections::{BTreeMap, VecDeque};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, Rational};
use crate::liealg::closure::Closure;
use crate::liealg::{Element, GeneratorLabel, LieAlgebra};
use crate::rootsys::{ChainRecord, Root, RootSystem};

/// `⟨α, H′_α⟩` per positive root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct NormalizationAssignment(pub BTreeMap<Root, FieldElement>);

impl NormalizationAssignment {
    /// Negative roots share the value of their positive.
    pub fn get(&self, r: Root) -> Option<&FieldElement> {
        self.0.get(&r.positive_part())
    }
}

/// `N′_{a,b}` for every ordered pair with `a + b` a root.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConstantAssignment(pub BTreeMap<(Root, Root), FieldElement>);

impl ConstantAssignment {
    pub fn get(&self, a: Root, b: Root) -> Option<&FieldElement> {
        self.0.get(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sets `N′_{x,y} = v` together with the cyclic and skew images over the
    /// triple `{x, y, −x−y}`. Returns false on a conflicting earlier value.
    fn assign(&mut self, x: Root, y: Root, v: FieldElement) -> bool {
        let z = -(x + y);
        let neg = -&v;
        for (a, b, val) in [(x, y, &v), (y, z, &v), (z, x, &v), (y, x, &neg), (z, y, &neg), (x, z, &neg)] {
            match self.0.get(&(a, b)) {
                Some(old) if old != val => return false,
                _ => {
                    self.0.insert((a, b), val.clone());
                }
            }
        }
        true
    }
}

#[derive(Serialize)]
struct ConstantRecord {
    a: Root,
    b: Root,
    value: FieldElement,
}

impl Serialize for ConstantAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|((a, b), v)| ConstantRecord { a: *a, b: *b, value: v.clone() }))
    }
}

/// The reversed chain: β-chain through α.
fn reversed(rs: &RootSystem, ch: &ChainRecord) -> Result<ChainRecord> {
    rs.alpha_chain(ch.alpha, ch.beta)
}

fn chain_weight(ch: &ChainRecord) -> Rational {
    Rational::frac(-(ch.q as i64) * (ch.p as i64 + 1), 2)
}

/// Each chain and its reverse give `−½q(p+1)·n(α) = −½q′(p′+1)·n(β)`; the
/// scale is fixed by `n(α₁) = 1`.
pub fn solve_normalizations(rs: &RootSystem, chains: &[ChainRecord]) -> Result<NormalizationAssignment> {
    // edges: n(target) = ratio · n(source)
    let mut edges: Vec<(Root, Root, Rational)> = Vec::new();
    for ch in chains {
        let rev = reversed(rs, ch)?;
        let (ka, kb) = (chain_weight(ch), chain_weight(&rev));
        if ka.is_zero() || kb.is_zero() {
            return Err(Error::NoSolution(format!("degenerate chain through {}", ch.beta)));
        }
        let (a, b) = (ch.alpha.positive_part(), ch.beta.positive_part());
        edges.push((a, b, &ka / &kb));
        edges.push((b, a, &kb / &ka));
    }
    let mut n: BTreeMap<Root, Rational> = BTreeMap::new();
    n.insert(Root::simple(1), Rational::one());
    let mut queue = VecDeque::from([Root::simple(1)]);
    while let Some(src) = queue.pop_front() {
        for (from, to, ratio) in edges.iter().filter(|e| e.0 == src) {
            let v = &n[from] * ratio;
            match n.get(to) {
                Some(old) if *old != v => {
                    return Err(Error::NoSolution(format!("normalization of {to} is both {old} and {v}")));
                }
                Some(_) => {}
                None => {
                    n.insert(*to, v);
                    queue.push_back(*to);
                }
            }
        }
    }
    if let Some(r) = rs.positive_roots().iter().find(|r| !n.contains_key(r)) {
        return Err(Error::NoSolution(format!("no chain constrains {r}")));
    }
    Ok(NormalizationAssignment(n.into_iter().map(|(r, v)| (r, FieldElement::from(v))).collect()))
}

/// Gauge: `N′_{a,b} = 1` for positive `a` before positive `b`. The remaining
/// constants follow from one chain product each, propagated through the
/// cyclic equalities.
pub fn solve_structure_constants(
    rs: &RootSystem,
    chains: &[ChainRecord],
    norms: &NormalizationAssignment,
) -> Result<ConstantAssignment> {
    let mut c = ConstantAssignment::default();
    let pos = rs.positive_roots();
    for (i, &a) in pos.iter().enumerate() {
        for &b in &pos[i + 1..] {
            if rs.contains(a + b) && c.get(a, b).is_none() && !c.assign(a, b, FieldElement::one()) {
                return Err(Error::NoSolution(format!("gauge pin on ({a}, {b}) clashes with the cyclic identity")));
            }
        }
    }
    loop {
        let mut progress = false;
        for ch in chains {
            let (a, b) = (ch.alpha, ch.beta);
            let na = norms.get(a).ok_or_else(|| Error::NoSolution(format!("no normalization for {a}")))?;
            let rhs = FieldElement::from(chain_weight(ch)) * na.clone();
            let known = (c.get(a, b).cloned(), c.get(-a, -b).cloned());
            let ok = match known {
                (Some(x), Some(y)) => &x * &y == rhs,
                (Some(x), None) => {
                    progress = true;
                    c.assign(-a, -b, rhs.checked_div(&x)?)
                }
                (None, Some(y)) => {
                    progress = true;
                    c.assign(a, b, rhs.checked_div(&y)?)
                }
                (None, None) => true,
            };
            if !ok {
                return Err(Error::NoSolution(format!("chain product through {} with α = {} is violated", b, a)));
            }
        }
        if !progress {
            break;
        }
    }
    let expected = rs.zero_sum_triples().len() * 6;
    if c.len() != expected {
        return Err(Error::NoSolution(format!("{} of {expected} constants determined", c.len())));
    }
    Ok(c)
}

fn gen(r: Root) -> GeneratorLabel {
    GeneratorLabel::for_root(r)
}

/// Assembles the table from the constants: `[X′_i, Y′_i] = H′_i`,
/// `[H′_i, X′_i] = n_i X′_i`, and all other Cartan data by Jacobi.
pub fn build_cyclic_algebra(
    rs: &RootSystem,
    norms: &NormalizationAssignment,
    consts: &ConstantAssignment,
) -> Result<LieAlgebra> {
    let mut cl = Closure::new(rs.clone());
    let basis = crate::liealg::standard_basis(rs);
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i + 1..] {
            let w = x.weight() + y.weight();
            if !w.is_zero() && !rs.contains(w) {
                cl.seed(x, y, Element::zero())?;
            }
        }
    }
    let (h1, h2) = (GeneratorLabel::Cartan(Root::simple(1)), GeneratorLabel::Cartan(Root::simple(2)));
    cl.seed(h1, h2, Element::zero())?;
    for ((a, b), v) in &consts.0 {
        cl.seed(gen(*a), gen(*b), Element::term(gen(*a + *b), v.clone()))?;
    }
    for i in 1..=2 {
        let s = Root::simple(i);
        let h = GeneratorLabel::Cartan(s);
        let n = norms.get(s).ok_or_else(|| Error::NoSolution(format!("no normalization for {s}")))?.clone();
        cl.seed(gen(s), gen(-s), Element::basis(h))?;
        cl.seed(h, gen(s), Element::term(gen(s), n.clone()))?;
        cl.seed(h, gen(-s), Element::term(gen(-s), -n))?;
        cl.decompose(h, FieldElement::one(), gen(s), gen(-s))?;
    }
    for &gamma in rs.positive_roots().iter().filter(|r| !r.is_simple()) {
        let (s, r) = [Root::simple(1), Root::simple(2)]
            .into_iter()
            .map(|s| (s, gamma - s))
            .find(|(_, r)| r.is_positive() && rs.contains(*r))
            .expect("non-simple roots split");
        for sign in [1, -1] {
            let (s, r, g) = (sign * s, sign * r, sign * gamma);
            let n = consts.get(s, r).ok_or_else(|| Error::NoSolution(format!("N′({s}, {r}) missing")))?;
            cl.decompose(gen(g), n.inv()?, gen(s), gen(r))?;
        }
    }
    cl.finish()
}

/// Chains, normalizations, constants and the assembled table.
pub fn build_cyclic_pipeline(rs: &RootSystem) -> Result<(NormalizationAssignment, ConstantAssignment, LieAlgebra)> {
    if !rs.is_g2() {
        return Err(Error::UnsupportedAlgebra("the cyclic construction is only supported for g2".into()));
    }
    let chains = rs.enumerate_chains();
    let norms = solve_normalizations(rs, &chains)?;
    let consts = solve_structure_constants(rs, &chains, &norms)?;
    let alg = build_cyclic_algebra(rs, &norms, &consts)?;
    Ok((norms, consts, alg))
}

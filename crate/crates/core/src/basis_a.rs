//! The hermitian construction: seed brackets from the Cartan matrix, raising
//! constants from su(2) ladder coefficients, lowering constants by
//! `N_{−α,−β} = −N_{α,β}`, everything else by Jacobi closure, then a
//! diagonal rescaling to integer structure constants.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{sqrt_in_field, FieldElement, Rational};
use crate::liealg::closure::Closure;
use crate::liealg::{Element, GeneratorLabel, LieAlgebra};
use crate::rootsys::{Root, RootSystem};

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger(i32);

impl HalfInteger {
    pub const fn from_twice(twice: i32) -> Self {
        HalfInteger(twice)
    }

    pub fn twice(self) -> i32 {
        self.0
    }

    pub fn to_rational(self) -> Rational {
        Rational::frac(self.0 as i64, 2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    Up,
    Down,
}

/// `⟨j, m±1| J_± |j, m⟩ = √((j ∓ m)(j ± m + 1))`; zero at the chain ends.
pub fn su2_ladder_coefficient(j: HalfInteger, m: HalfInteger, direction: Ladder) -> Result<FieldElement> {
    let (tj, tm) = (j.twice() as i64, m.twice() as i64);
    if tj < 0 || tm.abs() > tj || (tj - tm) % 2 != 0 {
        return Err(Error::UnsupportedRadical(format!("no state |{j}, {m}⟩")));
    }
    let four_sq = match direction {
        Ladder::Up => (tj - tm) * (tj + tm + 2),
        Ladder::Down => (tj + tm) * (tj - tm + 2),
    };
    sqrt_in_field(&Rational::frac(four_sq, 4))
}

/// A string of raising generators on which `ad E_acting = ladder_scale · J₊`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Su2ChainAssignment {
    pub members: Vec<GeneratorLabel>,
    pub spin: HalfInteger,
    pub acting: Root,
    pub ladder_scale: FieldElement,
}

impl Su2ChainAssignment {
    /// `[E_acting, members[k]] = ladder_scale · J₊(j, m_k) · members[k+1]`.
    pub fn links(&self) -> Result<Vec<(GeneratorLabel, GeneratorLabel, FieldElement)>> {
        let mut out = Vec::new();
        for k in 0..self.members.len().saturating_sub(1) {
            let m = HalfInteger::from_twice(2 * k as i32 - self.spin.twice());
            let c = su2_ladder_coefficient(self.spin, m, Ladder::Up)?;
            out.push((self.members[k], self.members[k + 1], &self.ladder_scale * &c));
        }
        Ok(out)
    }
}

fn root_string(rs: &RootSystem, start: Root, step: Root) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    let mut r = start;
    while rs.contains(r) {
        out.push(GeneratorLabel::Raise(r));
        r = r + step;
    }
    out
}

fn require_g2(rs: &RootSystem) -> Result<()> {
    if rs.is_g2() {
        Ok(())
    } else {
        Err(Error::UnsupportedAlgebra(format!("Cartan matrix {:?} is not g2", rs.cartan().entries())))
    }
}

/// The three raising-sector chains with the gauge signs of the integer table.
pub fn build_chain_assignments(rs: &RootSystem) -> Result<Vec<Su2ChainAssignment>> {
    require_g2(rs)?;
    let (a1, a2) = (Root::simple(1), Root::simple(2));
    let r32 = sqrt_in_field(&Rational::frac(3, 2))?;
    let specs = [
        (a1, a2, -r32.clone()),
        (a2, a1, sqrt_in_field(&Rational::frac(1, 2))?),
        (a1, Root::new(1, 3), r32),
    ];
    Ok(specs
        .into_iter()
        .map(|(acting, start, ladder_scale)| {
            let members = root_string(rs, start, acting);
            let spin = HalfInteger::from_twice(members.len() as i32 - 1);
            Su2ChainAssignment { members, spin, acting, ladder_scale }
        })
        .collect())
}

fn raise(r: Root) -> GeneratorLabel {
    GeneratorLabel::Raise(r)
}

fn lower(r: Root) -> GeneratorLabel {
    GeneratorLabel::Lower(r)
}

fn cartan(i: usize) -> GeneratorLabel {
    GeneratorLabel::Cartan(Root::simple(i))
}

/// Seeds every pair whose weights sum to neither zero nor a root.
fn seed_zero_pairs(cl: &mut Closure, basis: &[GeneratorLabel]) -> Result<()> {
    let rs = cl.root_system().clone();
    for (i, &x) in basis.iter().enumerate() {
        for &y in &basis[i + 1..] {
            let w = x.weight() + y.weight();
            if !w.is_zero() && !rs.contains(w) {
                cl.seed(x, y, Element::zero())?;
            }
        }
    }
    Ok(())
}

/// Splits a non-simple positive root as `s + (γ − s)` with `s` the first
/// simple root that works.
fn split(rs: &RootSystem, gamma: Root) -> Option<(Root, Root)> {
    [Root::simple(1), Root::simple(2)].into_iter().find(|&s| rs.contains(gamma - s) && (gamma - s).is_positive()).map(|s| (s, gamma - s))
}

/// The complete table in the E/F basis.
pub fn build_hermitian_algebra(rs: &RootSystem) -> Result<LieAlgebra> {
    let chains = build_chain_assignments(rs)?;
    let basis = crate::liealg::standard_basis(rs);
    let raising: Vec<GeneratorLabel> = basis.iter().copied().filter(|l| matches!(l, GeneratorLabel::Raise(_))).collect();

    // raising sector
    let mut cl = Closure::new(rs.clone());
    seed_zero_pairs(&mut cl, &basis)?;
    for ch in &chains {
        for (from, to, c) in ch.links()? {
            cl.seed(raise(ch.acting), from, Element::term(to, c))?;
        }
    }
    let n = |cl: &mut Closure, a: Root, b: Root| -> Result<FieldElement> {
        Ok(cl.bracket(raise(a), raise(b))?.coeff(raise(a + b)))
    };
    for &gamma in rs.positive_roots().iter().filter(|r| !r.is_simple()) {
        let (s, r) = split(rs, gamma).expect("non-simple roots split");
        let nsr = n(&mut cl, s, r)?;
        let inv = nsr.inv().map_err(|_| Error::ConstructionInconsistent(format!("N({s}, {r}) vanishes")))?;
        cl.decompose(raise(gamma), inv, raise(s), raise(r))?;
    }
    let mut ee = Vec::new();
    for (i, &x) in raising.iter().enumerate() {
        for &y in &raising[i + 1..] {
            ee.push((x, y, cl.bracket(x, y)?));
        }
    }

    // full algebra
    let mut cl = Closure::new(rs.clone());
    seed_zero_pairs(&mut cl, &basis)?;
    cl.seed(cartan(1), cartan(2), Element::zero())?;
    for (x, y, v) in &ee {
        cl.seed(*x, *y, v.clone())?;
        let (a, b) = (x.root(), y.root());
        let nab = v.coeff(raise(a + b));
        cl.seed(lower(a), lower(b), Element::term(lower(a + b), -nab))?;
    }
    for i in 1..=2 {
        for j in 1..=2 {
            let aij = FieldElement::from_int(rs.cartan().get(i, j) as i64);
            let sj = Root::simple(j);
            cl.seed(cartan(i), raise(sj), Element::term(raise(sj), aij.clone()))?;
            cl.seed(cartan(i), lower(sj), Element::term(lower(sj), -aij))?;
            let v = if i == j { Element::basis(cartan(i)) } else { Element::zero() };
            cl.seed(raise(Root::simple(i)), lower(sj), v)?;
        }
    }
    for &gamma in rs.positive_roots().iter().filter(|r| !r.is_simple()) {
        let (s, r) = split(rs, gamma).expect("non-simple roots split");
        let nsr = ee
            .iter()
            .find_map(|(x, y, v)| {
                if (x.root(), y.root()) == (s, r) {
                    Some(v.coeff(raise(gamma)))
                } else if (x.root(), y.root()) == (r, s) {
                    Some(-v.coeff(raise(gamma)))
                } else {
                    None
                }
            })
            .expect("raising sector complete");
        let inv = nsr.inv()?;
        cl.decompose(raise(gamma), inv.clone(), raise(s), raise(r))?;
        cl.decompose(lower(gamma), -inv, lower(s), lower(r))?;
    }
    cl.finish()
}

/// Per-generator scale factors of a diagonal change of basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RescalingMap(pub BTreeMap<GeneratorLabel, FieldElement>);

impl RescalingMap {
    pub fn get(&self, l: GeneratorLabel) -> Option<&FieldElement> {
        self.0.get(&l)
    }
}

/// `X_γ = c_γ E_γ` for the positive roots in order.
fn raise_factors() -> Result<[FieldElement; 6]> {
    let r = |n, d| sqrt_in_field(&Rational::frac(n, d));
    Ok([
        FieldElement::one(),
        FieldElement::one(),
        -r(3, 2)?,
        -r(3, 4)?,
        -r(2, 16)?,
        -r(3, 16)?,
    ])
}

/// Rescales the E/F table to the integer X/Y table. The lowering factors
/// are solved so that `⟨γ, [X_γ, Y_γ]⟩ = 2` on every positive root.
pub fn rescale_to_integer_basis(alg: &LieAlgebra) -> Result<(LieAlgebra, RescalingMap)> {
    let rs = alg.root_system();
    require_g2(rs)?;
    let mut map = BTreeMap::new();
    for i in 1..=2 {
        map.insert(cartan(i), FieldElement::one());
    }
    for (&gamma, c) in rs.positive_roots().iter().zip(raise_factors()?) {
        let h = alg.bracket_basis(raise(gamma), lower(gamma))?.clone();
        let kappa = alg.eigenvalue_of(&h, raise(gamma))?;
        let d = FieldElement::from_int(2).checked_div(&(&c * &kappa))?;
        map.insert(raise(gamma), c);
        map.insert(lower(gamma), d);
    }
    let scaled = alg.rescale(&map)?;
    Ok((scaled, RescalingMap(map)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i32) -> HalfInteger {
        HalfInteger::from_twice(t)
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(su2_ladder_coefficient(h(3), h(-3), Ladder::Up).unwrap(), FieldElement::sqrt3());
        assert_eq!(su2_ladder_coefficient(h(3), h(-1), Ladder::Up).unwrap(), FieldElement::from_int(2));
        assert_eq!(su2_ladder_coefficient(h(1), h(1), Ladder::Up).unwrap(), FieldElement::zero());
        assert_eq!(su2_ladder_coefficient(h(3), h(3), Ladder::Down).unwrap(), FieldElement::sqrt3());
        assert_eq!(su2_ladder_coefficient(h(1), h(-1), Ladder::Down).unwrap(), FieldElement::zero());
        assert!(su2_ladder_coefficient(h(4), h(0), Ladder::Up).is_ok());
        assert!(matches!(su2_ladder_coefficient(h(6), h(2), Ladder::Up), Err(Error::UnsupportedRadical(_))));
    }

    #[test]
    fn chain_assignments() {
        let ch = build_chain_assignments(&RootSystem::g2()).unwrap();
        assert_eq!(ch.len(), 3);
        let m: Vec<String> = ch[1].members.iter().map(|l| l.to_string()).collect();
        assert_eq!(m, ["E[1,0]", "E[1,1]", "E[1,2]", "E[1,3]"]);
        assert_eq!(ch[1].spin, h(3));
        assert_eq!(ch[0].spin, h(1));
        assert_eq!(ch[0].ladder_scale, -sqrt_in_field(&Rational::frac(3, 2)).unwrap());
        assert_eq!(ch[2].ladder_scale, sqrt_in_field(&Rational::frac(3, 2)).unwrap());
        let a2 = crate::rootsys::generate_root_system(crate::rootsys::CartanMatrix::preset("a2").unwrap()).unwrap();
        assert!(matches!(build_chain_assignments(&a2), Err(Error::UnsupportedAlgebra(_))));
    }
}

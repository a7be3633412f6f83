//! Completes a partial bracket table from seed brackets and from
//! decompositions `g = s·[a, b]`, using `ad u` as a derivation:
//! `[u, [a, b]] = [[u, a], b] + [a, [u, b]]`.

use std::collections::{HashMap, HashSet};

use super::algebra::{standard_basis, LieAlgebra};
use super::audit::{check_grading, check_jacobi};
use super::label::{Element, GeneratorLabel};
use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::rootsys::RootSystem;

struct Decomposition {
    scale: FieldElement,
    left: usize,
    right: usize,
}

pub struct Closure {
    rs: RootSystem,
    basis: Vec<GeneratorLabel>,
    index: HashMap<GeneratorLabel, usize>,
    seeds: HashMap<(usize, usize), Element>,
    decomp: HashMap<usize, Decomposition>,
    rank: Vec<u32>,
    memo: HashMap<(usize, usize), Element>,
    active: HashSet<(usize, usize)>,
}

impl Closure {
    pub fn new(rs: RootSystem) -> Self {
        let basis = standard_basis(&rs);
        let index = basis.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let rank = vec![0; basis.len()];
        Closure {
            rs,
            basis,
            index,
            seeds: HashMap::new(),
            decomp: HashMap::new(),
            rank,
            memo: HashMap::new(),
            active: HashSet::new(),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    fn idx(&self, l: GeneratorLabel) -> Result<usize> {
        self.index.get(&l).copied().ok_or_else(|| Error::UnknownGenerator(l.to_string()))
    }

    fn name(&self, i: usize, j: usize) -> String {
        format!("[{}, {}]", self.basis[i], self.basis[j])
    }

    /// Fixes `[x, y] = value`. Re-seeding with a different value is an error.
    pub fn seed(&mut self, x: GeneratorLabel, y: GeneratorLabel, value: Element) -> Result<()> {
        let (i, j) = (self.idx(x)?, self.idx(y)?);
        if i == j {
            return if value.is_zero() {
                Ok(())
            } else {
                Err(Error::ConstructionInconsistent(format!("nonzero seed for {}", self.name(i, j))))
            };
        }
        let (key, v) = if i < j { ((i, j), value) } else { ((j, i), -value) };
        if let Some(old) = self.seeds.get(&key) {
            if *old != v {
                return Err(Error::ConstructionInconsistent(format!(
                    "{} seeded as {old} and as {v}",
                    self.name(key.0, key.1)
                )));
            }
        }
        self.seeds.insert(key, v);
        self.memo.clear();
        Ok(())
    }

    /// Declares `g = scale·[left, right]`.
    pub fn decompose(&mut self, g: GeneratorLabel, scale: FieldElement, left: GeneratorLabel, right: GeneratorLabel) -> Result<()> {
        let (g, left, right) = (self.idx(g)?, self.idx(left)?, self.idx(right)?);
        self.rank[g] = self.rank[left].max(self.rank[right]) + 1;
        self.decomp.insert(g, Decomposition { scale, left, right });
        self.memo.clear();
        Ok(())
    }

    /// `[x, y]` from seeds and decompositions.
    pub fn bracket(&mut self, x: GeneratorLabel, y: GeneratorLabel) -> Result<Element> {
        let (i, j) = (self.idx(x)?, self.idx(y)?);
        self.resolve(i, j)
    }

    fn resolve(&mut self, i: usize, j: usize) -> Result<Element> {
        if i == j {
            return Ok(Element::zero());
        }
        if i > j {
            return Ok(-self.resolve(j, i)?);
        }
        if let Some(v) = self.seeds.get(&(i, j)) {
            return Ok(v.clone());
        }
        if let Some(v) = self.memo.get(&(i, j)) {
            return Ok(v.clone());
        }
        if !self.active.insert((i, j)) {
            return Err(Error::ConstructionInconsistent(format!("circular derivation of {}", self.name(i, j))));
        }
        let second_first = self.rank[j] >= self.rank[i];
        let order = if second_first { [(j, i, false), (i, j, true)] } else { [(i, j, true), (j, i, false)] };
        // a route can come back to [i, j] itself; the other argument may still work
        let mut outcome = Err(Error::ConstructionInconsistent(format!("no rule determines {}", self.name(i, j))));
        for (target, other, flip) in order {
            if !self.decomp.contains_key(&target) {
                continue;
            }
            outcome = self.derive(other, target).map(|v| if flip { -v } else { v });
            match &outcome {
                Err(Error::ConstructionInconsistent(_)) => continue,
                _ => break,
            }
        }
        self.active.remove(&(i, j));
        let v = outcome?;
        self.memo.insert((i, j), v.clone());
        Ok(v)
    }

    /// `[u, g]` for decomposed `g = s·[a, b]`.
    fn derive(&mut self, u: usize, g: usize) -> Result<Element> {
        let d = &self.decomp[&g];
        let (s, a, b) = (d.scale.clone(), d.left, d.right);
        let ua = self.resolve(u, a)?;
        let first = self.bracket_elem_left(&ua, b)?;
        let ub = self.resolve(u, b)?;
        let second = self.bracket_elem_right(a, &ub)?;
        Ok((first + second).scale(&s))
    }

    /// `[e, b]`.
    fn bracket_elem_left(&mut self, e: &Element, b: usize) -> Result<Element> {
        let mut out = Element::zero();
        for (l, c) in e.terms() {
            let k = self.idx(l)?;
            out = out + self.resolve(k, b)?.scale(c);
        }
        Ok(out)
    }

    /// `[a, e]`.
    fn bracket_elem_right(&mut self, a: usize, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (l, c) in e.terms() {
            let k = self.idx(l)?;
            out = out + self.resolve(a, k)?.scale(c);
        }
        Ok(out)
    }

    /// Resolves every pair and checks grading and the Jacobi identity.
    pub fn finish(mut self) -> Result<LieAlgebra> {
        let n = self.basis.len();
        let mut entries = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                entries.push((self.basis[i], self.basis[j], self.resolve(i, j)?));
            }
        }
        let alg = LieAlgebra::from_entries(self.rs.clone(), entries)?;
        let mut report = check_grading(&alg);
        report.extend(check_jacobi(&alg)?);
        if let Some(bad) = report.failures().next() {
            return Err(Error::ConstructionInconsistent(format!(
                "{} fails at {}: {} vs {}",
                bad.identity, bad.instance, bad.lhs, bad.rhs
            )));
        }
        Ok(alg)
    }
}

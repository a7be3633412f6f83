//! Rank-2 root systems generated from a Cartan matrix, and α-chains.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Roots never exceed height 5 in rank 2; anything past this bound is
/// treated as an infinite (non-finite-type) system.
pub const HEIGHT_BOUND: i32 = 12;

/// `m1·α₁ + m2·α₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub m1: i32,
    pub m2: i32,
}

impl Root {
    pub const fn new(m1: i32, m2: i32) -> Self {
        Root { m1, m2 }
    }

    pub fn simple(i: usize) -> Self {
        match i {
            1 => Root::new(1, 0),
            2 => Root::new(0, 1),
            _ => panic!("rank-2 simple root index must be 1 or 2"),
        }
    }

    pub fn height(self) -> i32 {
        self.m1 + self.m2
    }

    pub fn is_zero(self) -> bool {
        self.m1 == 0 && self.m2 == 0
    }

    pub fn is_positive(self) -> bool {
        !self.is_zero() && self.m1 >= 0 && self.m2 >= 0
    }

    pub fn is_negative(self) -> bool {
        (-self).is_positive()
    }

    pub fn is_simple(self) -> bool {
        self == Root::simple(1) || self == Root::simple(2)
    }

    /// The positive root among `±self`.
    pub fn positive_part(self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self
        }
    }

    pub fn coeff(self, i: usize) -> i32 {
        match i {
            1 => self.m1,
            2 => self.m2,
            _ => panic!("rank-2 simple root index must be 1 or 2"),
        }
    }

    /// Subscript form, `α₁+2α₂`.
    pub fn pretty(self) -> String {
        let mut out = String::new();
        let sign = if self.is_negative() { "−" } else { "" };
        let r = self.positive_part();
        out.push_str(sign);
        let term = |m: i32, name: &str| match m {
            0 => String::new(),
            1 => name.to_string(),
            m => format!("{m}{name}"),
        };
        let t1 = term(r.m1, "α₁");
        let t2 = term(r.m2, "α₂");
        match (t1.is_empty(), t2.is_empty()) {
            (false, false) => {
                out.push_str(&t1);
                out.push_str(if sign.is_empty() { "+" } else { "−" });
                out.push_str(&t2);
            }
            (false, true) => out.push_str(&t1),
            (true, false) => out.push_str(&t2),
            (true, true) => out.push('0'),
        }
        out
    }

    fn order_key(self) -> (bool, i32, i32) {
        let r = self.positive_part();
        // height first, ties by larger m1
        (self.is_negative(), r.height(), -r.m1)
    }
}

/// Canonical root order: positive roots before negative ones; within a sign,
/// ascending height with larger `m1` first. Negative roots follow the order
/// of their positives.
impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key()
            .cmp(&other.order_key())
            .then((self.m1, self.m2).cmp(&(other.m1, other.m2)))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Root {
    type Output = Root;
    fn add(self, o: Root) -> Root {
        Root::new(self.m1 + o.m1, self.m2 + o.m2)
    }
}

impl Sub for Root {
    type Output = Root;
    fn sub(self, o: Root) -> Root {
        Root::new(self.m1 - o.m1, self.m2 - o.m2)
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root::new(-self.m1, -self.m2)
    }
}

impl Mul<Root> for i32 {
    type Output = Root;
    fn mul(self, r: Root) -> Root {
        Root::new(self * r.m1, self * r.m2)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.m1, self.m2)
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRoot(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let m1 = a.trim().parse().map_err(|_| bad())?;
        let m2 = b.trim().parse().map_err(|_| bad())?;
        Ok(Root::new(m1, m2))
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `entries[i][j] = a_{i+1, j+1} = ⟨α_{j+1}, H_{α_{i+1}}⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[[i32; 2]; 2]", into = "[[i32; 2]; 2]")]
pub struct CartanMatrix {
    entries: [[i32; 2]; 2],
}

impl CartanMatrix {
    pub const PRESETS: [&'static str; 4] = ["g2", "a2", "b2", "a1a1"];

    pub fn new(entries: [[i32; 2]; 2]) -> Result<Self> {
        if entries[0][0] != 2 || entries[1][1] != 2 {
            return Err(Error::InvalidCartan("diagonal entries must be 2".into()));
        }
        let (a12, a21) = (entries[0][1], entries[1][0]);
        for a in [a12, a21] {
            if !(-3..=0).contains(&a) {
                return Err(Error::InvalidCartan(format!("off-diagonal entry {a} not in {{0,-1,-2,-3}}")));
            }
        }
        if (a12 == 0) != (a21 == 0) {
            return Err(Error::InvalidCartan("a_ij = 0 must imply a_ji = 0".into()));
        }
        Ok(CartanMatrix { entries })
    }

    pub fn g2() -> Self {
        CartanMatrix { entries: [[2, -1], [-3, 2]] }
    }

    pub fn preset(name: &str) -> Option<Self> {
        let entries = match name.to_ascii_lowercase().as_str() {
            "g2" => [[2, -1], [-3, 2]],
            "a2" => [[2, -1], [-1, 2]],
            "b2" => [[2, -2], [-1, 2]],
            "a1a1" | "a1xa1" => [[2, 0], [0, 2]],
            _ => return None,
        };
        Some(CartanMatrix { entries })
    }

    /// `a_ij` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i - 1][j - 1]
    }

    pub fn entries(&self) -> [[i32; 2]; 2] {
        self.entries
    }
}

impl TryFrom<[[i32; 2]; 2]> for CartanMatrix {
    type Error = Error;
    fn try_from(e: [[i32; 2]; 2]) -> Result<Self> {
        CartanMatrix::new(e)
    }
}

impl From<CartanMatrix> for [[i32; 2]; 2] {
    fn from(c: CartanMatrix) -> Self {
        c.entries
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<Root>,
}

/// The α-chain through β: `β − pα, …, β, …, β + qα`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainRecord {
    pub alpha: Root,
    pub beta: Root,
    pub p: u32,
    pub q: u32,
}

/// Builds Δ₊ level by level. For each root β of the current height and each
/// simple αᵢ, `p` is read off the roots already known and
/// `q = p − ⟨β, H_αᵢ⟩`; β + αᵢ is a root iff `q ≥ 1`.
pub fn generate_root_system(cartan: CartanMatrix) -> Result<RootSystem> {
    let simples = [Root::simple(1), Root::simple(2)];
    let mut known: BTreeSet<Root> = simples.iter().copied().collect();
    let mut level: Vec<Root> = simples.to_vec();
    let mut height = 1;
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for &beta in &level {
            for (i, &alpha) in simples.iter().enumerate() {
                if beta == alpha {
                    continue;
                }
                let mut p = 0;
                while known.contains(&(beta - (p + 1) * alpha)) {
                    p += 1;
                }
                let pairing = beta.m1 * cartan.get(i + 1, 1) + beta.m2 * cartan.get(i + 1, 2);
                if p - pairing >= 1 {
                    next.insert(beta + alpha);
                }
            }
        }
        height += 1;
        if !next.is_empty() && height > HEIGHT_BOUND {
            return Err(Error::NotFiniteType(HEIGHT_BOUND));
        }
        known.extend(next.iter().copied());
        level = next.into_iter().collect();
    }
    Ok(RootSystem { cartan, positive: known.into_iter().collect() })
}

impl RootSystem {
    pub fn g2() -> Self {
        generate_root_system(CartanMatrix::g2()).expect("g2 is finite type")
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn is_g2(&self) -> bool {
        self.cartan == CartanMatrix::g2()
    }

    /// Δ₊ in canonical order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Δ = Δ₊ followed by −Δ₊, in canonical order.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive.iter().copied().chain(self.positive.iter().map(|&r| -r))
    }

    pub fn contains(&self, r: Root) -> bool {
        self.positive.contains(&r.positive_part()) && !r.is_zero()
    }

    pub fn rank(&self) -> usize {
        2
    }

    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    fn require(&self, r: Root) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::NotARoot(r))
        }
    }

    /// `⟨β, H_αᵢ⟩ = Σⱼ mⱼ a_ij`.
    pub fn cartan_pairing(&self, beta: Root, i: usize) -> Result<i32> {
        if !(1..=2).contains(&i) {
            return Err(Error::SimpleIndex(i));
        }
        self.require(beta)?;
        Ok(beta.m1 * self.cartan.get(i, 1) + beta.m2 * self.cartan.get(i, 2))
    }

    /// Finds `(p, q)` by scanning membership of `β ± kα`.
    pub fn alpha_chain(&self, beta: Root, alpha: Root) -> Result<ChainRecord> {
        self.require(alpha)?;
        self.require(beta)?;
        if beta == alpha || beta == -alpha {
            return Err(Error::DegenerateChain { alpha, beta });
        }
        let mut p = 0;
        while self.contains(beta - (p as i32 + 1) * alpha) {
            p += 1;
        }
        let mut q = 0;
        while self.contains(beta + (q as i32 + 1) * alpha) {
            q += 1;
        }
        Ok(ChainRecord { alpha, beta, p, q })
    }

    /// One chain per unordered pair {α, β} with α + β ∈ Δ, identified up to
    /// overall negation. The representative has α + β positive and α before β
    /// in root order.
    pub fn enumerate_chains(&self) -> Vec<ChainRecord> {
        let mut out = Vec::new();
        for gamma in self.positive.iter().copied() {
            for alpha in self.roots() {
                let beta = gamma - alpha;
                if alpha < beta && self.contains(beta) {
                    out.push(self.alpha_chain(beta, alpha).expect("members are roots"));
                }
            }
        }
        out.sort_by_key(|c| (c.alpha + c.beta, c.alpha, c.beta));
        out
    }

    /// All triples {a, b, c} of roots with a + b + c = 0, each listed once
    /// with its members in root order.
    pub fn zero_sum_triples(&self) -> Vec<[Root; 3]> {
        let mut set = BTreeSet::new();
        for a in self.roots() {
            for b in self.roots() {
                let c = -(a + b);
                if a != b && self.contains(c) && c != a && c != b {
                    let mut t = [a, b, c];
                    t.sort();
                    set.insert(t);
                }
            }
        }
        set.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m1: i32, m2: i32) -> Root {
        Root::new(m1, m2)
    }

    #[test]
    fn g2_positive_roots_in_canonical_order() {
        let rs = RootSystem::g2();
        assert_eq!(rs.positive_roots(), &[r(1, 0), r(0, 1), r(1, 1), r(1, 2), r(1, 3), r(2, 3)]);
        assert_eq!(rs.roots().count(), 12);
        assert_eq!(rs.dimension(), 14);
    }

    #[test]
    fn small_presets() {
        let a1a1 = generate_root_system(CartanMatrix::preset("a1a1").unwrap()).unwrap();
        assert_eq!(a1a1.positive_roots(), &[r(1, 0), r(0, 1)]);
        let a2 = generate_root_system(CartanMatrix::preset("a2").unwrap()).unwrap();
        assert_eq!(a2.positive_roots(), &[r(1, 0), r(0, 1), r(1, 1)]);
        let b2 = generate_root_system(CartanMatrix::preset("b2").unwrap()).unwrap();
        assert_eq!(b2.positive_roots().len(), 4);
    }

    #[test]
    fn invalid_matrices() {
        assert!(matches!(CartanMatrix::new([[2, -1], [0, 2]]), Err(Error::InvalidCartan(_))));
        assert!(matches!(CartanMatrix::new([[3, -1], [-1, 2]]), Err(Error::InvalidCartan(_))));
        assert!(matches!(CartanMatrix::new([[2, -4], [-1, 2]]), Err(Error::InvalidCartan(_))));
        // affine and hyperbolic types pass the entry checks but never close
        for m in [[[2, -2], [-2, 2]], [[2, -3], [-3, 2]], [[2, -1], [-4 + 1, 2]]] {
            let res = generate_root_system(CartanMatrix::new(m).unwrap());
            assert_eq!(res.is_ok(), m[1][0] == -3 && m[0][1] == -1, "{m:?}");
        }
        assert_eq!(
            generate_root_system(CartanMatrix::new([[2, -2], [-2, 2]]).unwrap()),
            Err(Error::NotFiniteType(HEIGHT_BOUND))
        );
    }

    #[test]
    fn pairing_examples() {
        let rs = RootSystem::g2();
        assert_eq!(rs.cartan_pairing(r(1, 0), 1).unwrap(), 2);
        assert_eq!(rs.cartan_pairing(r(0, 1), 1).unwrap(), -1);
        assert_eq!(rs.cartan_pairing(r(1, 0), 2).unwrap(), -3);
        assert_eq!(rs.cartan_pairing(r(1, 3), 1).unwrap(), -1);
        assert_eq!(rs.cartan_pairing(r(3, 0), 1), Err(Error::NotARoot(r(3, 0))));
    }

    #[test]
    fn chain_examples() {
        let rs = RootSystem::g2();
        let pq = |b, a| {
            let c = rs.alpha_chain(b, a).unwrap();
            (c.p, c.q)
        };
        assert_eq!(pq(r(0, 1), r(1, 0)), (0, 1));
        assert_eq!(pq(r(1, 0), r(0, 1)), (0, 3));
        assert_eq!(pq(r(1, 2), r(0, 1)), (2, 1));
        assert!(matches!(rs.alpha_chain(r(1, 0), r(-1, 0)), Err(Error::DegenerateChain { .. })));
        assert!(matches!(rs.alpha_chain(r(2, 0), r(1, 0)), Err(Error::NotARoot(_))));
    }

    #[test]
    fn chain_counts() {
        assert_eq!(RootSystem::g2().enumerate_chains().len(), 15);
        let a1a1 = generate_root_system(CartanMatrix::preset("a1a1").unwrap()).unwrap();
        assert!(a1a1.enumerate_chains().is_empty());
        let a2 = generate_root_system(CartanMatrix::preset("a2").unwrap()).unwrap();
        assert!(a2.enumerate_chains().contains(&ChainRecord { alpha: r(1, 0), beta: r(0, 1), p: 0, q: 1 }));
    }

    #[test]
    fn g2_has_ten_zero_sum_triples() {
        assert_eq!(RootSystem::g2().zero_sum_triples().len(), 10);
    }

    #[test]
    fn root_text_forms() {
        assert_eq!(r(1, 2).to_string(), "[1,2]");
        assert_eq!("[ -2, 3]".parse::<Root>().unwrap(), r(-2, 3));
        assert_eq!(r(1, 2).pretty(), "α₁+2α₂");
        assert_eq!(r(-1, -1).pretty(), "−α₁−α₂");
        assert_eq!(r(0, -1).pretty(), "−α₂");
    }
}

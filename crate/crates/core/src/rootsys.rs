//! Cartan data of semisimple root systems under Bourbaki numbering.
//!
//! Simple roots are indexed from 0 inside the library; the textual and JSON
//! interfaces use 1-based labels. The one pairing convention used
//! everywhere is
//!
//! ```text
//! cartan[i][j] = (alpha_j, alpha_i^vee)
//! ```
//!
//! so that `(chi, alpha_i^vee) = sum_j chi[j] * cartan[i][j]` for a character
//! `chi` written in the simple-root basis.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("empty Dynkin type")]
    Empty,
    #[error("malformed Dynkin token {0:?}; expected a family letter A-G followed by a rank, e.g. \"A3\"")]
    MalformedToken(String),
    #[error("illegal rank {rank} for family {family}{}", hint.as_deref().map(|h| format!(" ({h})")).unwrap_or_default())]
    IllegalRank { family: Family, rank: usize, hint: Option<String> },
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("vector has length {got}, expected the rank {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("total rank {0} exceeds the supported maximum of {MAX_RANK}")]
    RankTooLarge(usize),
}

/// Largest total rank accepted; simple-root subsets are 64-bit masks.
pub const MAX_RANK: usize = 64;

pub type Result<T> = std::result::Result<T, RootSystemError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn check_rank(self, rank: usize) -> Result<()> {
        let ok = match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            return Ok(());
        }
        let hint = match (self, rank) {
            (Family::C, 2) => Some("C2 is the same root system as B2; use \"B2\"".to_string()),
            (Family::C, 1) | (Family::B, 1) => Some("use \"A1\"".to_string()),
            (Family::D, 3) => Some("D3 is A3; use \"A3\"".to_string()),
            (Family::D, 2) => Some("D2 is A1xA1; use \"A1xA1\"".to_string()),
            _ => None,
        };
        Err(RootSystemError::IllegalRank { family: self, rank, hint })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    /// Symmetrised Gram matrix of the simple roots (integer scaled).
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let bond = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for i in 1..n {
                    bond(&mut g, i - 1, i, -1);
                }
            }
            Family::B => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 4;
                }
                g[n - 1][n - 1] = 2;
                for i in 1..n {
                    bond(&mut g, i - 1, i, -2);
                }
            }
            Family::C => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 1..n - 1 {
                    bond(&mut g, i - 1, i, -1);
                }
                bond(&mut g, n - 2, n - 1, -2);
            }
            Family::D => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for i in 1..n - 1 {
                    bond(&mut g, i - 1, i, -1);
                }
                bond(&mut g, n - 3, n - 1, -1);
            }
            Family::E => {
                for (i, row) in g.iter_mut().enumerate() {
                    row[i] = 2;
                }
                // 1-3-4-5-6(-7(-8)) with 2 attached to 4
                bond(&mut g, 0, 2, -1);
                bond(&mut g, 1, 3, -1);
                for i in 3..n {
                    bond(&mut g, i - 1, i, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                bond(&mut g, 0, 1, -2);
                bond(&mut g, 1, 2, -2);
                bond(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                bond(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Ordered product of simple types, e.g. `B2xG2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinType {
    components: Vec<Component>,
}

impl DynkinType {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(RootSystemError::Empty);
        }
        for c in &components {
            c.family.check_rank(c.rank)?;
        }
        let total: usize = components.iter().map(|c| c.rank).sum();
        if total > MAX_RANK {
            return Err(RootSystemError::RankTooLarge(total));
        }
        Ok(DynkinType { components })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// Global index of the first simple root of each component.
    pub fn offsets(&self) -> Vec<usize> {
        self.components
            .iter()
            .scan(0, |acc, c| {
                let o = *acc;
                *acc += c.rank;
                Some(o)
            })
            .collect()
    }
}

impl FromStr for DynkinType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(RootSystemError::Empty);
        }
        let components = s
            .split(['x', 'X', '*'])
            .map(|tok| {
                let tok = tok.trim();
                let mut chars = tok.chars();
                let family = chars
                    .next()
                    .and_then(Family::from_char)
                    .ok_or_else(|| RootSystemError::MalformedToken(tok.to_string()))?;
                let digits = chars.as_str();
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(RootSystemError::MalformedToken(tok.to_string()));
                }
                let rank = digits.parse().map_err(|_| RootSystemError::MalformedToken(tok.to_string()))?;
                Ok(Component { family, rank })
            })
            .collect::<Result<Vec<_>>>()?;
        DynkinType::new(components)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DynkinType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn parse_dynkin(spec: &str) -> Result<DynkinType> {
    spec.parse()
}

/// Set of simple roots, as a bit mask over 0-based indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(u64);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn from_bits(bits: u64) -> Self {
        RootSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            RootSet(u64::MAX)
        } else {
            RootSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        RootSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 & (1u64 << i) != 0)
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "a{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// Integer vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub Vec<i64>);

impl Character {
    pub fn zero(rank: usize) -> Self {
        Character(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Character(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }

    pub fn scaled(&self, k: i64) -> Character {
        Character(self.0.iter().map(|c| c * k).collect())
    }

    pub fn plus(&self, other: &Character) -> Character {
        Character(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The simple root this character equals, if any.
    pub fn as_simple(&self) -> Option<usize> {
        let supp = self.support();
        match supp.as_slice() {
            [i] if self.0[*i] == 1 => Some(*i),
            _ => None,
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Nonnegative vector in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.iter().any(|&c| c < 0) {
            return Err(RootSystemError::NotDominant(coeffs));
        }
        Ok(DominantWeight(coeffs))
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        DominantWeight(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// `(self, alpha_i^vee)`, which is just the i-th coordinate.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn add_fundamental(&mut self, i: usize, k: i64) {
        self.0[i] += k;
        debug_assert!(self.0[i] >= 0);
    }
}

impl<'de> Deserialize<'de> for DominantWeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        DominantWeight::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "w{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    dtype: DynkinType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(dtype: DynkinType) -> Self {
        let n = dtype.rank();
        let mut gram = vec![vec![0i64; n]; n];
        for (c, off) in dtype.components().iter().zip(dtype.offsets()) {
            let g = c.gram();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    gram[off + i][off + j] = g[i][j];
                }
            }
        }
        let cartan = (0..n).map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect()).collect();
        RootSystem { dtype, cartan, gram }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        Ok(RootSystem::new(spec.parse()?))
    }

    pub fn dynkin_type(&self) -> &DynkinType {
        &self.dtype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `(alpha_j, alpha_i^vee)`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared length of a simple root on the integer scale used
    /// internally (short roots of a doubly laced component have 2).
    pub fn root_length(&self, i: usize) -> i64 {
        self.gram[i][i]
    }

    pub fn is_orthogonal(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn simple_root(&self, i: usize) -> Character {
        Character::simple(self.rank(), i)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(RootSystemError::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(RootSystemError::LengthMismatch { expected: self.rank(), got: len })
        }
    }

    /// `(chi, alpha_i^vee)`.
    pub fn pairing(&self, chi: &Character, i: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_len(chi.len())?;
        Ok(self.pair(chi, i))
    }

    /// Unchecked form of [`RootSystem::pairing`] for hot loops.
    pub(crate) fn pair(&self, chi: &Character, i: usize) -> i64 {
        chi.0.iter().zip(&self.cartan[i]).map(|(c, a)| c * a).sum()
    }

    /// Coordinates of `chi` in the fundamental-weight basis.
    pub fn to_fundamental_coords(&self, chi: &Character) -> Result<Vec<i64>> {
        self.check_len(chi.len())?;
        Ok((0..self.rank()).map(|i| self.pair(chi, i)).collect())
    }

    /// Simple roots orthogonal to `chi`.
    pub fn orthogonal_simple_roots(&self, chi: &Character) -> RootSet {
        (0..self.rank()).filter(|&i| self.pair(chi, i) == 0).collect()
    }

    /// Positive roots, sorted by height and then lexicographically.
    pub fn positive_roots(&self) -> Vec<Character> {
        let order: Vec<usize> = (0..self.rank()).collect();
        self.positive_roots_in_order(&order)
    }

    /// Root-string closure with simple roots visited in `order`.
    pub(crate) fn positive_roots_in_order(&self, order: &[usize]) -> Vec<Character> {
        let n = self.rank();
        let mut known: HashSet<Character> = HashSet::new();
        let mut layer: Vec<Character> = order.iter().map(|&i| self.simple_root(i)).collect();
        known.extend(layer.iter().cloned());
        let mut all = layer.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for &i in order {
                    if beta.as_simple() == Some(i) {
                        continue;
                    }
                    // length of the alpha_i-string below beta
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down.0[i] -= 1;
                        if down.0[i] < 0 || !known.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    if p - self.pair(beta, i) > 0 {
                        let mut up = beta.clone();
                        up.0[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        debug_assert!(all.iter().all(|r| r.len() == n));
        all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        all
    }

    /// `-w0(lam)`, via reflecting `-lam` until it is dominant.
    pub fn dual_dominant(&self, lam: &DominantWeight) -> Result<DominantWeight> {
        self.check_len(lam.0.len())?;
        Ok(self.antidominant_sweep(lam, |mu| mu.iter().position(|&x| x < 0)))
    }

    pub(crate) fn antidominant_sweep(
        &self,
        lam: &DominantWeight,
        pick: impl Fn(&[i64]) -> Option<usize>,
    ) -> DominantWeight {
        let mut mu: Vec<i64> = lam.0.iter().map(|x| -x).collect();
        while let Some(i) = pick(&mu) {
            // s_i(mu) = mu - mu_i alpha_i, and alpha_i = sum_j cartan[j][i] w_j
            let mi = mu[i];
            for (j, m) in mu.iter_mut().enumerate() {
                *m -= mi * self.cartan[j][i];
            }
        }
        DominantWeight(mu)
    }
}

pub fn build_root_system(dt: DynkinType) -> RootSystem {
    RootSystem::new(dt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let a1 = parse_dynkin("A1").unwrap();
        assert_eq!(a1.components(), &[Component { family: Family::A, rank: 1 }]);
        let a1a1 = parse_dynkin("A1xA1").unwrap();
        assert_eq!(a1a1.components().len(), 2);
        assert_eq!(a1a1.rank(), 2);
        assert_eq!(a1a1.offsets(), vec![0, 1]);
        assert_eq!(parse_dynkin("B2xG2").unwrap().to_string(), "B2xG2");
    }

    #[test]
    fn c2_rejected_with_hint() {
        let err = parse_dynkin("C2").unwrap_err();
        match &err {
            RootSystemError::IllegalRank { family: Family::C, rank: 2, hint: Some(h) } => {
                assert!(h.contains("B2"))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(err.to_string().contains("B2"));
    }

    #[test]
    fn illegal_and_malformed_tokens() {
        for bad in ["", "A0", "D3", "E9", "F3", "G3", "B1", "Q2", "A", "A-1", "A1x", "3A"] {
            assert!(parse_dynkin(bad).is_err(), "{bad} accepted");
        }
        for good in ["A1", "B2", "C3", "D4", "E6", "E7", "E8", "F4", "G2", "a2xb3"] {
            assert!(parse_dynkin(good).is_ok(), "{good} rejected");
        }
    }

    #[test]
    fn cartan_fixtures() {
        assert_eq!(rs("A2").cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
        let b2 = rs("B2");
        // (alpha1, alpha2^vee) = -2, (alpha2, alpha1^vee) = -1
        assert_eq!(b2.cartan(1, 0), -2);
        assert_eq!(b2.cartan(0, 1), -1);
        let g2 = rs("G2");
        assert_eq!(g2.cartan(0, 1), -3);
        assert_eq!(g2.cartan(1, 0), -1);
        let c3 = rs("C3");
        assert_eq!(c3.cartan(1, 2), -2);
        assert_eq!(c3.cartan(2, 1), -1);
        let f4 = rs("F4");
        assert_eq!(f4.cartan(2, 1), -2);
        assert_eq!(f4.cartan(1, 2), -1);
    }

    #[test]
    fn cartan_axioms_all_types() {
        for t in ["A1", "A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2", "A2xB3"] {
            let r = rs(t);
            for i in 0..r.rank() {
                assert_eq!(r.cartan(i, i), 2);
                for j in 0..r.rank() {
                    if i != j {
                        assert!(r.cartan(i, j) <= 0);
                        assert_eq!(r.cartan(i, j) == 0, r.cartan(j, i) == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.pairing(&Character(vec![1]), 0).unwrap(), 2);
        let b2 = rs("B2");
        assert_eq!(b2.pairing(&Character(vec![1, 1]), 1).unwrap(), 0);
        let g2 = rs("G2");
        assert_eq!(g2.pairing(&Character(vec![4, 2]), 0).unwrap(), 2);
        assert!(matches!(
            a1.pairing(&Character(vec![1]), 1),
            Err(RootSystemError::IndexOutOfRange { index: 1, rank: 1 })
        ));
        assert!(a1.pairing(&Character(vec![1, 0]), 0).is_err());
    }

    #[test]
    fn fundamental_coords_examples() {
        assert_eq!(rs("A2").to_fundamental_coords(&Character(vec![1, 0])).unwrap(), vec![2, -1]);
        assert_eq!(rs("A1").to_fundamental_coords(&Character(vec![2])).unwrap(), vec![4]);
        assert_eq!(rs("B2").to_fundamental_coords(&Character(vec![1, 1])).unwrap(), vec![1, 0]);
    }

    #[test]
    fn positive_root_counts() {
        let expect = [
            ("A1", 1),
            ("A3", 6),
            ("A5", 15),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("C3", 9),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
        ];
        for (t, n) in expect {
            let r = rs(t);
            let roots = r.positive_roots();
            assert_eq!(roots.len(), n, "{t}");
            let rev: Vec<usize> = (0..r.rank()).rev().collect();
            let mut other = r.positive_roots_in_order(&rev);
            other.sort();
            let mut sorted = roots.clone();
            sorted.sort();
            assert_eq!(sorted, other, "{t}");
        }
    }

    #[test]
    fn positive_roots_g2_listing() {
        let got: Vec<Vec<i64>> = rs("G2").positive_roots().into_iter().map(|c| c.0).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]);
    }

    #[test]
    fn dual_dominant_examples() {
        let w = |v: Vec<i64>| DominantWeight::new(v).unwrap();
        assert_eq!(rs("A1").dual_dominant(&w(vec![1])).unwrap(), w(vec![1]));
        assert_eq!(rs("A2").dual_dominant(&w(vec![1, 0])).unwrap(), w(vec![0, 1]));
        assert_eq!(rs("B2").dual_dominant(&w(vec![1, 0])).unwrap(), w(vec![1, 0]));
    }

    #[test]
    fn dual_dominant_diagram_automorphisms() {
        let w = |v: Vec<i64>| DominantWeight::new(v).unwrap();
        let d5 = rs("D5");
        assert_eq!(d5.dual_dominant(&w(vec![0, 0, 0, 1, 0])).unwrap(), w(vec![0, 0, 0, 0, 1]));
        let d4 = rs("D4");
        assert_eq!(d4.dual_dominant(&w(vec![0, 0, 1, 0])).unwrap(), w(vec![0, 0, 1, 0]));
        let e6 = rs("E6");
        assert_eq!(e6.dual_dominant(&w(vec![1, 0, 0, 0, 0, 0])).unwrap(), w(vec![0, 0, 0, 0, 0, 1]));
        assert_eq!(e6.dual_dominant(&w(vec![0, 1, 0, 0, 0, 0])).unwrap(), w(vec![0, 1, 0, 0, 0, 0]));
        let a4 = rs("A4");
        assert_eq!(a4.dual_dominant(&w(vec![0, 1, 0, 0])).unwrap(), w(vec![0, 0, 1, 0]));
    }

    #[test]
    fn sweep_order_irrelevant() {
        for t in ["A4", "B3", "C3", "D5", "E6", "F4", "G2"] {
            let r = rs(t);
            for i in 0..r.rank() {
                let lam = DominantWeight::fundamental(r.rank(), i);
                let first = r.dual_dominant(&lam).unwrap();
                let last = r.antidominant_sweep(&lam, |mu| mu.iter().rposition(|&x| x < 0));
                assert_eq!(first, last, "{t} w{}", i + 1);
            }
        }
    }

    #[test]
    fn character_display() {
        assert_eq!(Character(vec![1, 2, 0]).to_string(), "a1+2a2");
        assert_eq!(Character(vec![0, -1]).to_string(), "-a2");
        assert_eq!(Character(vec![0, 0]).to_string(), "0");
    }
}

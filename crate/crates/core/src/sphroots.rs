//! The spherical roots of a root system.
//!
//! Every catalogue shape is a coefficient pattern on a small Dynkin diagram.
//! Instances are found by matching that diagram as an induced subdiagram of
//! the ambient one, Cartan entry for Cartan entry, so bond multiplicities
//! and the short/long orientation are respected for every ambient type.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::rootsys::{Character, Component, DynkinType, Family, RootSet, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphRootError {
    #[error("{0} is not a spherical root of this group")]
    NotInCatalogue(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// `a1` on an A1.
    A1,
    /// `2a1` on an A1.
    TwoA1,
    /// `a1 + a1'` on two orthogonal simple roots.
    A1xA1,
    /// `a1 + 2a2 + a3` on an A3.
    A3Middle,
    /// `a1 + ... + an` on an An, n >= 2.
    ASum,
    /// `a1 + 2a2 + 3a3` on a B3.
    B3Special,
    /// `a1 + ... + an` on a Bn, n >= 2.
    BSum,
    /// `2(a1 + ... + an)` on a Bn, n >= 2.
    BDouble,
    /// `a1 + 2a2 + ... + 2a(n-1) + an` on a Cn, n >= 3.
    C,
    /// `2a1 + ... + 2a(n-2) + a(n-1) + an` on a Dn, n >= 4.
    D,
    /// `a1 + 2a2 + 3a3 + 2a4` on F4.
    F4,
    /// `a1 + a2` on G2.
    G2Short,
    /// `2a1 + a2` on G2.
    G2Mixed,
    /// `4a1 + 2a2` on G2.
    G2Double,
}

impl Shape {
    pub const ALL: [Shape; 14] = [
        Shape::A1,
        Shape::TwoA1,
        Shape::A1xA1,
        Shape::A3Middle,
        Shape::ASum,
        Shape::B3Special,
        Shape::BSum,
        Shape::BDouble,
        Shape::C,
        Shape::D,
        Shape::F4,
        Shape::G2Short,
        Shape::G2Mixed,
        Shape::G2Double,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Shape::A1 => "A1",
            Shape::TwoA1 => "2A1",
            Shape::A1xA1 => "A1xA1",
            Shape::A3Middle => "A3-middle",
            Shape::ASum => "An-sum",
            Shape::B3Special => "B3-special",
            Shape::BSum => "Bn-sum",
            Shape::BDouble => "Bn-double",
            Shape::C => "Cn",
            Shape::D => "Dn",
            Shape::F4 => "F4",
            Shape::G2Short => "G2-short",
            Shape::G2Mixed => "G2-mixed",
            Shape::G2Double => "G2-double",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Shape> {
        Shape::ALL.into_iter().find(|s| s.tag() == tag)
    }

    /// Local ranks at which the shape is instantiated, capped at `max`.
    fn local_ranks(self, max: usize) -> std::ops::RangeInclusive<usize> {
        let (lo, hi) = match self {
            Shape::A1 | Shape::TwoA1 => (1, 1),
            Shape::A1xA1 | Shape::G2Short | Shape::G2Mixed | Shape::G2Double => (2, 2),
            Shape::A3Middle | Shape::B3Special => (3, 3),
            Shape::F4 => (4, 4),
            Shape::ASum | Shape::BSum | Shape::BDouble => (2, max),
            Shape::C => (3, max),
            Shape::D => (4, max),
        };
        lo..=hi.min(max)
    }

    fn local_type(self, n: usize) -> DynkinType {
        let comp = |family, rank| Component { family, rank };
        let comps = match self {
            Shape::A1 | Shape::TwoA1 => vec![comp(Family::A, 1)],
            Shape::A1xA1 => vec![comp(Family::A, 1), comp(Family::A, 1)],
            Shape::A3Middle | Shape::ASum => vec![comp(Family::A, n)],
            Shape::B3Special | Shape::BSum | Shape::BDouble => vec![comp(Family::B, n)],
            Shape::C => vec![comp(Family::C, n)],
            Shape::D => vec![comp(Family::D, n)],
            Shape::F4 => vec![comp(Family::F, 4)],
            Shape::G2Short | Shape::G2Mixed | Shape::G2Double => vec![comp(Family::G, 2)],
        };
        DynkinType::new(comps).expect("catalogue shapes use legal local types")
    }

    /// Coefficients in the local Bourbaki basis.
    fn pattern(self, n: usize) -> Vec<i64> {
        match self {
            Shape::A1 => vec![1],
            Shape::TwoA1 => vec![2],
            Shape::A1xA1 => vec![1, 1],
            Shape::A3Middle => vec![1, 2, 1],
            Shape::ASum | Shape::BSum => vec![1; n],
            Shape::BDouble => vec![2; n],
            Shape::B3Special => vec![1, 2, 3],
            Shape::C => {
                let mut v = vec![2; n];
                v[0] = 1;
                v[n - 1] = 1;
                v
            }
            Shape::D => {
                let mut v = vec![2; n];
                v[n - 2] = 1;
                v[n - 1] = 1;
                v
            }
            Shape::F4 => vec![1, 2, 3, 2],
            Shape::G2Short => vec![1, 1],
            Shape::G2Mixed => vec![2, 1],
            Shape::G2Double => vec![4, 2],
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SphericalRoot {
    pub chi: Character,
    pub shape: Shape,
    /// Global simple-root index of each local Bourbaki index.
    pub embedding: Vec<usize>,
}

impl SphericalRoot {
    pub fn support(&self) -> RootSet {
        self.embedding.iter().copied().collect()
    }

    /// The simple root this spherical root equals, if any.
    pub fn as_simple(&self) -> Option<usize> {
        match self.shape {
            Shape::A1 => Some(self.embedding[0]),
            _ => None,
        }
    }
}

impl fmt::Display for SphericalRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.chi, self.shape)
    }
}

/// `S^pp(sigma) <= S^p <= S^p(sigma)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompatibilityInterval {
    pub spp: RootSet,
    pub sp_sigma: RootSet,
}

impl CompatibilityInterval {
    pub fn admits(&self, sp: RootSet) -> bool {
        self.spp.is_subset(sp) && sp.is_subset(self.sp_sigma)
    }
}

/// All injective maps of `local`'s simple roots into `global`'s that
/// preserve every Cartan entry.
pub fn subdiagram_embeddings(local: &RootSystem, global: &RootSystem) -> Vec<Vec<usize>> {
    let k = local.rank();
    // visit local nodes so that each one after the first in its component
    // is adjacent to an earlier one
    let mut order = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    for start in 0..k {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && local.is_adjacent(i, j) {
                    *s = true;
                    queue.push_back(j);
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; global.rank()];
    extend(local, global, &order, 0, &mut assign, &mut used, &mut out);
    out.sort();
    out
}

fn extend(
    local: &RootSystem,
    global: &RootSystem,
    order: &[usize],
    depth: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if depth == order.len() {
        out.push(assign.clone());
        return;
    }
    let i = order[depth];
    for g in 0..global.rank() {
        if used[g] {
            continue;
        }
        let fits = order[..depth].iter().all(|&j| {
            let h = assign[j];
            global.cartan(g, h) == local.cartan(i, j) && global.cartan(h, g) == local.cartan(j, i)
        });
        if !fits {
            continue;
        }
        used[g] = true;
        assign[i] = g;
        extend(local, global, order, depth + 1, assign, used, out);
        assign[i] = usize::MAX;
        used[g] = false;
    }
}

/// Spherical roots of a root system, with lookup by character.
#[derive(Debug, Clone)]
pub struct Catalogue {
    rs: RootSystem,
    roots: Vec<SphericalRoot>,
    index: HashMap<Character, usize>,
}

impl Catalogue {
    pub fn new(rs: &RootSystem) -> Self {
        let mut best: HashMap<Character, SphericalRoot> = HashMap::new();
        for shape in Shape::ALL {
            for n in shape.local_ranks(rs.rank()) {
                let local = RootSystem::new(shape.local_type(n));
                let pattern = shape.pattern(n);
                for emb in subdiagram_embeddings(&local, rs) {
                    let mut chi = Character::zero(rs.rank());
                    for (&c, &g) in pattern.iter().zip(&emb) {
                        chi.0[g] += c;
                    }
                    let cand = SphericalRoot { chi: chi.clone(), shape, embedding: emb };
                    match best.get(&chi) {
                        Some(cur) if (cur.shape.tag(), &cur.embedding) <= (cand.shape.tag(), &cand.embedding) => {}
                        _ => {
                            best.insert(chi, cand);
                        }
                    }
                }
            }
        }
        let mut roots: Vec<SphericalRoot> = best.into_values().collect();
        roots.sort_by(|a, b| a.chi.height().cmp(&b.chi.height()).then_with(|| b.chi.cmp(&a.chi)));
        let index = roots.iter().enumerate().map(|(i, r)| (r.chi.clone(), i)).collect();
        Catalogue { rs: rs.clone(), roots, index }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn roots(&self) -> &[SphericalRoot] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn position(&self, chi: &Character) -> Option<usize> {
        self.index.get(chi).copied()
    }

    pub fn lookup(&self, chi: &Character) -> Option<&SphericalRoot> {
        self.position(chi).map(|i| &self.roots[i])
    }

    /// The catalogue entry for `sigma`, checked by character and shape.
    fn resolve<'a>(&'a self, sigma: &SphericalRoot) -> Result<&'a SphericalRoot, SphRootError> {
        match self.lookup(&sigma.chi) {
            Some(r) if r.shape == sigma.shape => Ok(r),
            _ => Err(SphRootError::NotInCatalogue(sigma.chi.to_string())),
        }
    }

    /// The catalogue entry equal to `2 * sigma`, if there is one.
    pub fn double_of(&self, sigma: &SphericalRoot) -> Option<&SphericalRoot> {
        self.lookup(&sigma.chi.scaled(2))
    }

    pub fn compatibility_interval(&self, sigma: &SphericalRoot) -> Result<CompatibilityInterval, SphRootError> {
        let sigma = self.resolve(sigma)?;
        Ok(self.interval_of(sigma))
    }

    pub(crate) fn interval_of(&self, sigma: &SphericalRoot) -> CompatibilityInterval {
        let sp_sigma = self.rs.orthogonal_simple_roots(&sigma.chi);
        let mut spp = sp_sigma.intersection(sigma.support());
        match sigma.shape {
            Shape::BSum => spp.remove(*sigma.embedding.last().expect("nonempty embedding")),
            Shape::C => spp.remove(sigma.embedding[0]),
            _ => {}
        }
        CompatibilityInterval { spp, sp_sigma }
    }

    pub fn is_compatible(&self, sp: RootSet, sigma: &SphericalRoot) -> Result<bool, SphRootError> {
        Ok(self.compatibility_interval(sigma)?.admits(sp))
    }

    /// `sigma` is not simple, `2 sigma` is a spherical root, and every
    /// `S'` compatible with `2 sigma` is compatible with `sigma`. Since both
    /// share `S^p(sigma)`, that is `S^pp(sigma) <= S^pp(2 sigma)`.
    pub fn is_loose(&self, sigma: &SphericalRoot) -> Result<bool, SphRootError> {
        let sigma = self.resolve(sigma)?;
        if sigma.chi.as_simple().is_some() {
            return Ok(false);
        }
        let Some(double) = self.double_of(sigma) else {
            return Ok(false);
        };
        Ok(self.interval_of(sigma).spp.is_subset(self.interval_of(double).spp))
    }

    pub fn loose_roots(&self) -> Vec<&SphericalRoot> {
        self.roots.iter().filter(|r| self.is_loose(r).unwrap_or(false)).collect()
    }
}

pub fn spherical_roots_of(rs: &RootSystem) -> Vec<SphericalRoot> {
    Catalogue::new(rs).roots
}

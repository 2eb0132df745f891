//! Exhaustive enumeration of the spherical systems of a small root system.
//!
//! Systems come out in a fixed order: `S^p` by bitmask, then `Sigma` by size
//! and then lexicographically in catalogue order, then `A` in mixed-radix
//! order over the entries sorted by `(alpha, sigma)` with `a^+` ascending.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::colors;
use crate::rootsys::{RootSet, RootSystem};
use crate::sphroots::{Catalogue, SphericalRoot};
use crate::system::{self, AMatrix, APair, SphericalSystem};

/// Largest total rank accepted by the enumerator.
pub const MAX_ENUM_RANK: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("rank {rank} exceeds the enumeration limit of {MAX_ENUM_RANK}")]
    RankTooLarge { rank: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumOptions {
    pub closed_only: bool,
    pub max_sigma: Option<usize>,
    /// Report on stderr after every this many candidate `(S^p, Sigma)` pairs.
    pub progress: Option<usize>,
}

/// Caller-pulled stream of spherical systems.
pub struct SystemStream {
    cat: Catalogue,
    opts: EnumOptions,
    next_mask: u64,
    end_mask: u64,
    sp: RootSet,
    sigmas: Vec<Vec<usize>>,
    sigma_pos: usize,
    pending: Option<Assignments>,
    visited: usize,
}

struct Assignments {
    sigma: Vec<SphericalRoot>,
    keys: Vec<(usize, usize)>,
    // (lowest a^+, pairing) per key
    ranges: Vec<(i64, i64)>,
    digits: Vec<i64>,
    done: bool,
}

impl Assignments {
    fn new(cat: &Catalogue, sigma: Vec<SphericalRoot>) -> Self {
        let rs = cat.root_system();
        let simple: Vec<usize> = sigma.iter().filter_map(|s| s.as_simple()).collect();
        let mut keys = Vec::new();
        let mut ranges = Vec::new();
        let mut sorted = simple.clone();
        sorted.sort();
        for &alpha in &sorted {
            for (j, s) in sigma.iter().enumerate() {
                let p = rs.pair(&s.chi, alpha);
                keys.push((alpha, j));
                ranges.push((p - 1, p));
            }
        }
        let digits = ranges.iter().map(|&(lo, _)| lo).collect();
        Assignments { sigma, keys, ranges, digits, done: false }
    }

    fn next(&mut self) -> Option<SphericalSystem> {
        if self.done {
            return None;
        }
        let amat: AMatrix = self
            .keys
            .iter()
            .zip(self.ranges.iter().zip(&self.digits))
            .map(|(&k, (&(_, p), &plus))| (k, APair::new(plus, p - plus)))
            .collect();
        let sys = SphericalSystem::new(RootSet::EMPTY, self.sigma.clone(), amat);
        // advance, least significant digit last
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.digits[i] < 1 {
                self.digits[i] += 1;
                break;
            }
            self.digits[i] = self.ranges[i].0;
        }
        Some(sys)
    }
}

impl SystemStream {
    fn load_sp(&mut self) -> bool {
        if self.next_mask >= self.end_mask {
            return false;
        }
        self.sp = RootSet::from_bits(self.next_mask);
        self.next_mask += 1;
        self.sigmas = sigma_candidates(&self.cat, self.sp, self.opts.max_sigma);
        self.sigma_pos = 0;
        true
    }
}

impl Iterator for SystemStream {
    type Item = SphericalSystem;

    fn next(&mut self) -> Option<SphericalSystem> {
        loop {
            if let Some(assign) = &mut self.pending {
                if let Some(candidate) = assign.next() {
                    let sys = SphericalSystem::new(self.sp, candidate.sigma().to_vec(), candidate.amat().clone());
                    let ok = system::validate(&self.cat, &sys).is_ok_and(|r| r.is_valid());
                    if ok && (!self.opts.closed_only || system::closure_witness(&self.cat, &sys).is_none()) {
                        return Some(sys);
                    }
                    continue;
                }
                self.pending = None;
            }
            if self.sigma_pos < self.sigmas.len() {
                let picked = &self.sigmas[self.sigma_pos];
                self.sigma_pos += 1;
                self.visited += 1;
                if let Some(n) = self.opts.progress.filter(|&n| n > 0) {
                    if self.visited.is_multiple_of(n) {
                        eprintln!("enumerate: {} candidate (S^p, Sigma) pairs visited", self.visited);
                    }
                }
                let sigma = picked.iter().map(|&i| self.cat.roots()[i].clone()).collect();
                self.pending = Some(Assignments::new(&self.cat, sigma));
                continue;
            }
            if !self.load_sp() {
                return None;
            }
        }
    }
}

/// Subsets of catalogue positions, compatible with `sp`, pairwise passing
/// the `S1`/`S2` conditions and linearly independent, by size then lex.
fn sigma_candidates(cat: &Catalogue, sp: RootSet, max_sigma: Option<usize>) -> Vec<Vec<usize>> {
    let usable: Vec<usize> = (0..cat.len()).filter(|&i| cat.interval_of(&cat.roots()[i]).admits(sp)).collect();
    let ok_pair = |i: usize, j: usize| {
        let sys = SphericalSystem::new(sp, vec![cat.roots()[i].clone(), cat.roots()[j].clone()], AMatrix::new());
        pair_conditions_hold(cat, &sys)
    };
    let n = usable.len();
    let mut friends = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let ok = ok_pair(usable[a], usable[b]);
            friends[a][b] = ok;
            friends[b][a] = ok;
        }
    }
    let cap = max_sigma.unwrap_or(n).min(n);
    let mut out = Vec::new();
    for size in 0..=cap {
        let mut current = Vec::new();
        extend(cat, &usable, &friends, size, 0, &mut current, &mut out);
    }
    out
}

fn extend(
    cat: &Catalogue,
    usable: &[usize],
    friends: &[Vec<bool>],
    size: usize,
    start: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        let sigma: Vec<SphericalRoot> = current.iter().map(|&a| cat.roots()[usable[a]].clone()).collect();
        if system::sigma_independent(&sigma).unwrap_or(false) {
            out.push(current.iter().map(|&a| usable[a]).collect());
        }
        return;
    }
    for a in start..usable.len() {
        if current.iter().all(|&b| friends[a][b]) {
            current.push(a);
            extend(cat, usable, friends, size, a + 1, current, out);
            current.pop();
        }
    }
}

/// `S1` and `S2` only involve two roots at a time.
fn pair_conditions_hold(cat: &Catalogue, sys: &SphericalSystem) -> bool {
    let rs = cat.root_system();
    let rank = rs.rank();
    for alpha in sys.doubled_simple().iter() {
        let twice = crate::rootsys::Character::simple(rank, alpha).scaled(2);
        for s in sys.sigma() {
            let v = rs.pair(&s.chi, alpha);
            if s.chi != twice && (v > 0 || v % 2 != 0) {
                return false;
            }
        }
    }
    sys.orthogonal_sum_pairs(cat)
        .into_iter()
        .all(|(a, b)| sys.sigma().iter().all(|s| rs.pair(&s.chi, a) == rs.pair(&s.chi, b)))
}

/// Streams every spherical system of `rs` passing the axioms.
pub fn enumerate_systems(rs: &RootSystem, opts: EnumOptions) -> Result<SystemStream, EnumError> {
    let rank = rs.rank();
    if rank > MAX_ENUM_RANK {
        return Err(EnumError::RankTooLarge { rank });
    }
    Ok(SystemStream {
        cat: Catalogue::new(rs),
        opts,
        next_mask: 0,
        end_mask: 1u64 << rank,
        sp: RootSet::EMPTY,
        sigmas: Vec::new(),
        sigma_pos: 0,
        pending: None,
        visited: 0,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub total: usize,
    pub closed: usize,
    /// Number of systems by `|Sigma|`.
    pub by_sigma: BTreeMap<usize, usize>,
    /// Number of systems by `|Delta|`.
    pub by_colors: BTreeMap<usize, usize>,
}

pub fn census(rs: &RootSystem, opts: EnumOptions) -> Result<Census, EnumError> {
    let stream = enumerate_systems(rs, opts)?;
    let cat = Catalogue::new(rs);
    let mut c = Census::default();
    for sys in stream {
        c.total += 1;
        if system::closure_witness(&cat, &sys).is_none() {
            c.closed += 1;
        }
        *c.by_sigma.entry(sys.sigma().len()).or_default() += 1;
        let ncolors = colors::color_set(&cat, &sys).map_or(0, |d| d.len());
        *c.by_colors.entry(ncolors).or_default() += 1;
    }
    Ok(c)
}

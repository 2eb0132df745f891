//! The tangent-space weight window `Sigma(Delta)` and the profile of the
//! invariant Hilbert scheme of a spherically closed system.
//!
//! Only the window `Sigma <= Sigma(Delta) <= Sigma + {a + a'}` is reported;
//! which extras `a + a'` are actually weights is left undetermined.

use serde::Serialize;
use thiserror::Error;

use crate::colors::{self, ColorError, ColorTable};
use crate::rootsys::Character;
use crate::sphroots::Catalogue;
use crate::system::{self, SphericalSystem, SystemError};
use crate::zlinalg::{self, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangentError {
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("not spherically closed: 2({0}) is a compatible spherical root")]
    NotClosed(String),
    #[error(transparent)]
    Color(#[from] ColorError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("membership tests disagree on {0}")]
    MembershipMismatch(String),
}

type Result<T> = std::result::Result<T, TangentError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowExtra {
    pub chi: Character,
    /// Simple roots `a < a'` with `chi = a + a'`.
    pub roots: (usize, usize),
    /// Both summands are spherical roots of the system.
    pub by_criterion: bool,
    /// `(chi, 0)` lies in the span of the `lambda_D`.
    pub by_lattice: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentWindow {
    pub must: Vec<Character>,
    pub may: Vec<WindowExtra>,
}

/// `-sigma`, kept as `sigma` with the sign recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentWeight {
    #[serde(rename = "coeffs")]
    pub sigma: Character,
    pub negated: bool,
}

impl TangentWeight {
    pub fn value(&self) -> Character {
        if self.negated {
            self.sigma.scaled(-1)
        } else {
            self.sigma.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbProfile {
    pub dimension: usize,
    pub weights: Vec<TangentWeight>,
}

fn ensure_closed(cat: &Catalogue, sys: &SphericalSystem) -> Result<()> {
    system::ensure_valid(cat, sys)?;
    match system::closure_witness(cat, sys) {
        Some(j) => Err(TangentError::NotClosed(sys.sigma()[j].chi.to_string())),
        None => Ok(()),
    }
}

/// Whether `(gamma, chi)` is an integer combination of the `lambda_D`,
/// with `chi` in the Smith coordinates of `Xi(C)`.
pub fn in_z_delta(cat: &Catalogue, table: &ColorTable, gamma: &Character, chi: &[i64]) -> Result<bool> {
    let rs = cat.root_system();
    let width = table.cgroup.rank + table.cgroup.torsion.len();
    if chi.len() != width {
        return Err(LinalgError::DimensionMismatch { expected: width, got: chi.len() }.into());
    }
    let mut v = rs
        .to_fundamental_coords(gamma)
        .map_err(|_| LinalgError::DimensionMismatch { expected: rs.rank(), got: gamma.len() })?;
    v.extend_from_slice(chi);
    let mut gens = table.lambda_vectors();
    // torsion coordinates are residues, so d * e_t is zero in Xi(C)
    for (t, &d) in table.cgroup.torsion.iter().enumerate() {
        let mut g = vec![0; v.len()];
        g[rs.rank() + table.cgroup.rank + t] = d;
        gens.push(g);
    }
    Ok(zlinalg::in_lattice(&v, &gens)?)
}

/// `must = Sigma`, and `may` lists the sums of adjacent simple roots that
/// are both in `Sigma` while their sum is not.
pub fn sigma_delta_window(cat: &Catalogue, sys: &SphericalSystem) -> Result<TangentWindow> {
    ensure_closed(cat, sys)?;
    let rs = cat.root_system();
    let table = colors::lambda_weights(cat, sys)?;
    let width = table.cgroup.rank + table.cgroup.torsion.len();
    let simple: Vec<usize> = sys.sigma_simple().iter().collect();
    let mut may = Vec::new();
    for (i, &a) in simple.iter().enumerate() {
        for &b in &simple[i + 1..] {
            if !rs.is_adjacent(a, b) {
                continue;
            }
            let chi = rs.simple_root(a).plus(&rs.simple_root(b));
            if sys.sigma().iter().any(|s| s.chi == chi) {
                continue;
            }
            let by_lattice = in_z_delta(cat, &table, &chi, &vec![0; width])?;
            let by_criterion = sys.position_of_simple(a).is_some() && sys.position_of_simple(b).is_some();
            if by_lattice != by_criterion {
                return Err(TangentError::MembershipMismatch(chi.to_string()));
            }
            may.push(WindowExtra { chi, roots: (a, b), by_criterion, by_lattice });
        }
    }
    Ok(TangentWindow { must: sys.sigma().iter().map(|s| s.chi.clone()).collect(), may })
}

/// The weights `-sigma` of the tangent space at the most degenerate point.
pub fn tangent_weights(cat: &Catalogue, sys: &SphericalSystem) -> Result<Vec<Character>> {
    ensure_closed(cat, sys)?;
    Ok(sys.sigma().iter().map(|s| s.chi.scaled(-1)).collect())
}

/// `Hilb(S)` is an affine space of dimension `|Sigma|`.
pub fn hilb_profile(cat: &Catalogue, sys: &SphericalSystem) -> Result<HilbProfile> {
    ensure_closed(cat, sys)?;
    let weights: Vec<TangentWeight> =
        sys.sigma().iter().map(|s| TangentWeight { sigma: s.chi.clone(), negated: true }).collect();
    Ok(HilbProfile { dimension: weights.len(), weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{RootSet, RootSystem};
    use crate::sphroots::SphericalRoot;
    use crate::system::{AMatrix, APair};

    fn cat(t: &str) -> Catalogue {
        Catalogue::new(&RootSystem::parse(t).unwrap())
    }

    fn root(c: &Catalogue, coeffs: &[i64]) -> SphericalRoot {
        c.lookup(&Character(coeffs.to_vec())).unwrap().clone()
    }

    /// `((alpha, sigma), (a^+, a^-))`
    type Entry = ((usize, usize), (i64, i64));

    fn amat(entries: &[Entry]) -> AMatrix {
        entries.iter().map(|&(k, (p, m))| (k, APair::new(p, m))).collect()
    }

    #[test]
    fn a1_simple_root() {
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1])], amat(&[((0, 0), (1, 1))]));
        let w = sigma_delta_window(&c, &sys).unwrap();
        assert_eq!(w.must, vec![Character(vec![1])]);
        assert!(w.may.is_empty());
        assert_eq!(tangent_weights(&c, &sys).unwrap(), vec![Character(vec![-1])]);
        let h = hilb_profile(&c, &sys).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.weights[0].value(), Character(vec![-1]));
    }

    #[test]
    fn empty_sigma() {
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![], AMatrix::new());
        assert_eq!(hilb_profile(&c, &sys).unwrap().dimension, 0);
        assert!(tangent_weights(&c, &sys).unwrap().is_empty());
    }

    #[test]
    fn a2_merged_window() {
        let c = cat("A2");
        let sys = SphericalSystem::new(
            RootSet::EMPTY,
            vec![root(&c, &[1, 0]), root(&c, &[0, 1])],
            amat(&[((0, 0), (1, 1)), ((0, 1), (1, -2)), ((1, 0), (1, -2)), ((1, 1), (1, 1))]),
        );
        let w = sigma_delta_window(&c, &sys).unwrap();
        assert_eq!(w.must.len(), 2);
        assert_eq!(w.may.len(), 1);
        assert_eq!(w.may[0].chi, Character(vec![1, 1]));
        assert!(w.may[0].by_lattice && w.may[0].by_criterion);
    }

    #[test]
    fn a1xa1_sum_window() {
        let c = cat("A1xA1");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1, 1])], AMatrix::new());
        let w = sigma_delta_window(&c, &sys).unwrap();
        assert_eq!(w.must, vec![Character(vec![1, 1])]);
        assert!(w.may.is_empty());
    }

    #[test]
    fn a2_sum_root_profile() {
        let c = cat("A2");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1, 1])], AMatrix::new());
        let h = hilb_profile(&c, &sys).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.weights[0].value(), Character(vec![-1, -1]));
        let table = colors::lambda_weights(&c, &sys).unwrap();
        assert!(!in_z_delta(&c, &table, &Character(vec![1, 0]), &[0]).unwrap());
        assert!(in_z_delta(&c, &table, &Character(vec![1, 1]), &[0]).unwrap());
    }

    #[test]
    fn torsion_is_respected() {
        // Xi(C) = Z/2 for 2a1 in A1, and lambda_D = (2 w1, 1) = (a1, 1)
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[2])], AMatrix::new());
        let table = colors::lambda_weights(&c, &sys).unwrap();
        assert!(in_z_delta(&c, &table, &Character(vec![2]), &[0]).unwrap());
        assert!(in_z_delta(&c, &table, &Character(vec![1]), &[1]).unwrap());
        assert!(!in_z_delta(&c, &table, &Character(vec![1]), &[0]).unwrap());
        assert!(!in_z_delta(&c, &table, &Character(vec![0]), &[1]).unwrap());
    }

    #[test]
    fn non_closed_is_refused() {
        let c = cat("B3");
        let sys = SphericalSystem::new([1, 2].into_iter().collect(), vec![root(&c, &[1, 1, 1])], AMatrix::new());
        assert!(matches!(tangent_weights(&c, &sys), Err(TangentError::NotClosed(_))));
        assert!(matches!(hilb_profile(&c, &sys), Err(TangentError::NotClosed(_))));
        assert!(matches!(sigma_delta_window(&c, &sys), Err(TangentError::NotClosed(_))));
    }
}

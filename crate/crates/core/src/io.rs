//! JSON formats: the system file read by the CLI and the reports it writes.
//!
//! Simple roots are numbered from 1 as in Bourbaki; positions in `Sigma`
//! are numbered from 0.

use std::collections::BTreeMap;
use std::path::Path;

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colors::ColorTable;
use crate::enumerate::Census;
use crate::rootsys::{Character, RootSet, RootSystem, RootSystemError};
use crate::sphroots::{Catalogue, SphericalRoot};
use crate::system::{AMatrix, APair, SphericalSystem, ValidationReport};
use crate::tangent::{HilbProfile, TangentWindow};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed system file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Dynkin(#[from] RootSystemError),
    #[error("simple root {index} out of range 1..={rank}")]
    RootIndex { index: usize, rank: usize },
    #[error("sigma position {index} out of range ({len} spherical roots)")]
    SigmaIndex { index: usize, len: usize },
    #[error("{0:?} is not a spherical root of this group")]
    UnknownRoot(Vec<i64>),
    #[error("{coeffs:?} has shape {actual}, not {given}")]
    ShapeMismatch { coeffs: Vec<i64>, given: String, actual: String },
    #[error("a-entry for (alpha {alpha}, sigma {sigma}) given twice")]
    DuplicateEntry { alpha: usize, sigma: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct SigmaEntry {
    pub coeffs: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct AEntry {
    /// Simple root, numbered from 1.
    pub alpha: usize,
    /// Position in `sigma`, numbered from 0.
    pub sigma: usize,
    pub plus: i64,
    pub minus: i64,
}

/// A spherical system on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub dynkin: String,
    /// `S^p`, simple roots numbered from 1.
    #[serde(default)]
    pub sp: Vec<usize>,
    #[serde(default)]
    pub sigma: Vec<SigmaEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<AEntry>,
}

impl SystemFile {
    pub fn from_system(rs: &RootSystem, sys: &SphericalSystem) -> Self {
        SystemFile {
            dynkin: rs.dynkin_type().to_string(),
            sp: sys.sp().iter().map(|i| i + 1).collect(),
            sigma: sys.sigma().iter().map(|s| SigmaEntry { coeffs: s.chi.0.clone(), shape: None }).collect(),
            a: sys
                .amat()
                .iter()
                .map(|(&(alpha, sigma), p)| AEntry { alpha: alpha + 1, sigma, plus: p.plus, minus: p.minus })
                .collect(),
        }
    }

    /// Resolves the file against the catalogue of its group.
    pub fn to_system(&self) -> Result<(Catalogue, SphericalSystem), InputError> {
        let rs = RootSystem::parse(&self.dynkin)?;
        let cat = Catalogue::new(&rs);
        let rank = rs.rank();
        let index = |i: usize| -> Result<usize, InputError> {
            if i == 0 || i > rank {
                Err(InputError::RootIndex { index: i, rank })
            } else {
                Ok(i - 1)
            }
        };
        let mut sp = RootSet::EMPTY;
        for &i in &self.sp {
            sp.insert(index(i)?);
        }
        let mut sigma = Vec::new();
        for entry in &self.sigma {
            let root = cat
                .lookup(&Character(entry.coeffs.clone()))
                .ok_or_else(|| InputError::UnknownRoot(entry.coeffs.clone()))?;
            if let Some(given) = &entry.shape {
                if given != root.shape.tag() {
                    return Err(InputError::ShapeMismatch {
                        coeffs: entry.coeffs.clone(),
                        given: given.clone(),
                        actual: root.shape.tag().to_string(),
                    });
                }
            }
            sigma.push(root.clone());
        }
        let mut amat = AMatrix::new();
        for e in &self.a {
            let alpha = index(e.alpha)?;
            if e.sigma >= sigma.len() {
                return Err(InputError::SigmaIndex { index: e.sigma, len: sigma.len() });
            }
            if amat.insert((alpha, e.sigma), APair::new(e.plus, e.minus)).is_some() {
                return Err(InputError::DuplicateEntry { alpha: e.alpha, sigma: e.sigma });
            }
        }
        Ok((cat, SphericalSystem::new(sp, sigma, amat)))
    }
}

pub fn parse_system(text: &str) -> Result<(Catalogue, SphericalSystem), InputError> {
    serde_json::from_str::<SystemFile>(text)?.to_system()
}

pub fn load_system(path: &Path) -> Result<(Catalogue, SphericalSystem), InputError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
    parse_system(&text)
}

fn one_based(set: impl IntoIterator<Item = usize>) -> Vec<usize> {
    set.into_iter().map(|i| i + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct RootsReport {
    pub dynkin: String,
    pub count: usize,
    /// Positive roots in simple-root coordinates.
    pub roots: Vec<Vec<i64>>,
}

impl RootsReport {
    pub fn new(rs: &RootSystem) -> Self {
        let roots: Vec<Vec<i64>> = rs.positive_roots().into_iter().map(|c| c.0).collect();
        RootsReport { dynkin: rs.dynkin_type().to_string(), count: roots.len(), roots }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct SphericalRootOut {
    pub coeffs: Vec<i64>,
    pub shape: String,
    /// Simple roots in the support, numbered from 1.
    pub support: Vec<usize>,
}

impl From<&SphericalRoot> for SphericalRootOut {
    fn from(s: &SphericalRoot) -> Self {
        SphericalRootOut {
            coeffs: s.chi.0.clone(),
            shape: s.shape.tag().to_string(),
            support: one_based(s.support().iter()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct CatalogueReport {
    pub dynkin: String,
    pub count: usize,
    pub roots: Vec<SphericalRootOut>,
}

impl CatalogueReport {
    pub fn new(cat: &Catalogue) -> Self {
        let roots: Vec<SphericalRootOut> = cat.roots().iter().map(SphericalRootOut::from).collect();
        CatalogueReport { dynkin: cat.root_system().dynkin_type().to_string(), count: roots.len(), roots }
    }
}

/// How looseness is decided.
pub const LOOSE_CONVENTION: &str =
    "sigma is loose when sigma is not simple, 2sigma is a spherical root, and (S', sigma) is \
     compatible whenever (S', 2sigma) is; since S^p(sigma) = S^p(2sigma) this means S^pp(sigma) <= S^pp(2sigma)";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct LooseReport {
    pub dynkin: String,
    pub convention: String,
    pub loose: Vec<SphericalRootOut>,
}

impl LooseReport {
    pub fn new(cat: &Catalogue) -> Self {
        LooseReport {
            dynkin: cat.root_system().dynkin_type().to_string(),
            convention: LOOSE_CONVENTION.to_string(),
            loose: cat.loose_roots().into_iter().map(SphericalRootOut::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct ViolationOut {
    pub axiom: String,
    /// Simple roots involved, numbered from 1.
    pub alphas: Vec<usize>,
    /// Positions in `sigma` involved.
    pub sigmas: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct DiagnosticOut {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct ValidationOut {
    pub valid: bool,
    pub violations: Vec<ViolationOut>,
    pub diagnostics: Vec<DiagnosticOut>,
}

impl From<&ValidationReport> for ValidationOut {
    fn from(r: &ValidationReport) -> Self {
        ValidationOut {
            valid: r.is_valid(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationOut {
                    axiom: v.axiom.id().to_string(),
                    alphas: one_based(v.alphas.iter().copied()),
                    sigmas: v.sigmas.clone(),
                    message: v.message.clone(),
                })
                .collect(),
            diagnostics: r
                .diagnostics
                .iter()
                .map(|d| DiagnosticOut { kind: d.kind.id().to_string(), message: d.message.clone() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct ClosureReport {
    pub valid: bool,
    /// Absent when the system is not valid.
    pub spherically_closed: Option<bool>,
    /// A spherical root whose double is compatible with `S^p`.
    pub witness: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct ColorOut {
    pub kind: String,
    /// Merged symbols such as `D+(a1)`.
    pub members: Vec<String>,
    /// Simple roots of the members, numbered from 1.
    pub roots: Vec<usize>,
    /// `omega_D` in fundamental-weight coordinates.
    pub omega: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct GroupOut {
    pub rank: usize,
    pub torsion: Vec<i64>,
    pub invariant_factors: Vec<i64>,
    /// `chi_D` in coordinates of the free part followed by torsion residues.
    pub chi: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct LambdaOut {
    pub omega: Vec<i64>,
    pub chi: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct ColorReport {
    pub colors: Vec<ColorOut>,
    /// `a[sigma][D]`, one row per spherical root.
    pub amatrix: Vec<Vec<i64>>,
    pub cgroup: GroupOut,
    pub lambdas: Vec<LambdaOut>,
    pub warnings: Vec<String>,
}

impl From<&ColorTable> for ColorReport {
    fn from(t: &ColorTable) -> Self {
        ColorReport {
            colors: t
                .colors
                .iter()
                .map(|c| ColorOut {
                    kind: c.kind.name().to_string(),
                    members: c.members.iter().map(|m| m.to_string()).collect(),
                    roots: one_based(c.roots()),
                    omega: c.omega.coeffs().to_vec(),
                })
                .collect(),
            amatrix: t.amatrix.to_rows(),
            cgroup: GroupOut {
                rank: t.cgroup.rank,
                torsion: t.cgroup.torsion.clone(),
                invariant_factors: t.cgroup.invariant_factors().to_vec(),
                chi: t.cgroup.chi.clone(),
            },
            lambdas: t
                .lambdas
                .iter()
                .map(|l| LambdaOut { omega: l.omega.coeffs().to_vec(), chi: l.chi.clone() })
                .collect(),
            warnings: t.warnings.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct LatticeReport {
    /// The character `gamma` in simple-root coordinates.
    pub vector: Vec<i64>,
    /// Component in `Xi(C)`, Smith coordinates.
    pub chi: Vec<i64>,
    pub in_lattice: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct ExtraOut {
    pub coeffs: Vec<i64>,
    /// The two adjacent simple roots, numbered from 1.
    pub roots: Vec<usize>,
    pub by_criterion: bool,
    pub by_lattice: bool,
    /// Whether the extra is a weight of the tangent space is not decided.
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct WindowOut {
    pub must: Vec<Vec<i64>>,
    pub may: Vec<ExtraOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct WeightOut {
    pub coeffs: Vec<i64>,
    pub negated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct ProfileOut {
    pub dimension: usize,
    pub weights: Vec<WeightOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct TangentReport {
    pub window: WindowOut,
    pub profile: ProfileOut,
}

impl TangentReport {
    pub fn new(w: &TangentWindow, h: &HilbProfile) -> Self {
        TangentReport {
            window: WindowOut {
                must: w.must.iter().map(|c| c.0.clone()).collect(),
                may: w
                    .may
                    .iter()
                    .map(|e| ExtraOut {
                        coeffs: e.chi.0.clone(),
                        roots: vec![e.roots.0 + 1, e.roots.1 + 1],
                        by_criterion: e.by_criterion,
                        by_lattice: e.by_lattice,
                        status: "undetermined".to_string(),
                    })
                    .collect(),
            },
            profile: ProfileOut {
                dimension: h.dimension,
                weights: h
                    .weights
                    .iter()
                    .map(|t| WeightOut { coeffs: t.sigma.0.clone(), negated: t.negated })
                    .collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct EnumerationReport {
    pub dynkin: String,
    pub count: usize,
    pub systems: Vec<SystemFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, JsonSchema)]
pub struct CensusReport {
    pub dynkin: String,
    pub closed_only: bool,
    pub max_sigma: Option<usize>,
    pub total: usize,
    pub closed: usize,
    /// Keyed by `|Sigma|`.
    pub by_sigma: BTreeMap<String, usize>,
    /// Keyed by `|Delta|`.
    pub by_colors: BTreeMap<String, usize>,
}

impl CensusReport {
    pub fn new(rs: &RootSystem, closed_only: bool, max_sigma: Option<usize>, c: &Census) -> Self {
        let keyed = |m: &BTreeMap<usize, usize>| m.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        CensusReport {
            dynkin: rs.dynkin_type().to_string(),
            closed_only,
            max_sigma,
            total: c.total,
            closed: c.closed,
            by_sigma: keyed(&c.by_sigma),
            by_colors: keyed(&c.by_colors),
        }
    }
}

/// JSON schemas of the system file and of every report, by name.
pub fn schemas() -> BTreeMap<&'static str, schemars::Schema> {
    BTreeMap::from([
        ("system", schemars::schema_for!(SystemFile)),
        ("roots", schemars::schema_for!(RootsReport)),
        ("sroots", schemars::schema_for!(CatalogueReport)),
        ("loose", schemars::schema_for!(LooseReport)),
        ("validate", schemars::schema_for!(ValidationOut)),
        ("closure", schemars::schema_for!(ClosureReport)),
        ("colors", schemars::schema_for!(ColorReport)),
        ("lattice", schemars::schema_for!(LatticeReport)),
        ("tangent", schemars::schema_for!(TangentReport)),
        ("enumerate", schemars::schema_for!(EnumerationReport)),
        ("census", schemars::schema_for!(CensusReport)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_file_round_trip() {
        let text = r#"{"dynkin":"B3","sp":[2,3],"sigma":[{"coeffs":[1,1,1]}]}"#;
        let (cat, sys) = parse_system(text).unwrap();
        assert_eq!(sys.sp().iter().collect::<Vec<_>>(), vec![1, 2]);
        let file = SystemFile::from_system(cat.root_system(), &sys);
        assert_eq!(serde_json::to_string(&file).unwrap(), text);
    }

    #[test]
    fn a_entries_are_read() {
        let text = r#"{"dynkin":"A1","sigma":[{"coeffs":[1]}],"a":[{"alpha":1,"sigma":0,"plus":1,"minus":1}]}"#;
        let (_, sys) = parse_system(text).unwrap();
        assert_eq!(sys.a(0, 0), Some(APair::new(1, 1)));
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(parse_system(r#"{"dynkin":"C2"}"#), Err(InputError::Dynkin(_))));
        assert!(matches!(parse_system(r#"{"dynkin":"A1","sp":[0]}"#), Err(InputError::RootIndex { .. })));
        assert!(matches!(parse_system(r#"{"dynkin":"A1","sigma":[{"coeffs":[3]}]}"#), Err(InputError::UnknownRoot(_))));
        assert!(matches!(parse_system(r#"{"dynkin":"A1","bogus":1}"#), Err(InputError::Json(_))));
        assert!(matches!(
            parse_system(r#"{"dynkin":"A1","sigma":[{"coeffs":[1],"shape":"2A1"}]}"#),
            Err(InputError::ShapeMismatch { .. })
        ));
        assert!(matches!(
            parse_system(r#"{"dynkin":"A1","sigma":[],"a":[{"alpha":1,"sigma":0,"plus":1,"minus":1}]}"#),
            Err(InputError::SigmaIndex { .. })
        ));
    }
}

//! Spherical systems `(S^p, Sigma, A)`, their axioms and spherical closure.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::rootsys::{Character, RootSet};
use crate::sphroots::{Catalogue, SphericalRoot};
use crate::zlinalg::{self, IntMatrix, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("{0} is not a spherical root of this group")]
    UnknownSphericalRoot(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    RootIndexOutOfRange { index: usize, rank: usize },
    #[error("spherical root position {index} out of range ({len} roots)")]
    SigmaIndexOutOfRange { index: usize, len: usize },
    #[error("not a spherical system: {0}")]
    Invalid(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `(a^+, a^-)` for one pair `(alpha, sigma)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct APair {
    pub plus: i64,
    pub minus: i64,
}

impl APair {
    pub fn new(plus: i64, minus: i64) -> Self {
        APair { plus, minus }
    }

    pub fn get(self, sign: Sign) -> i64 {
        match sign {
            Sign::Plus => self.plus,
            Sign::Minus => self.minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Keyed by (simple root index, position of sigma in `Sigma`).
pub type AMatrix = BTreeMap<(usize, usize), APair>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SphericalSystem {
    sp: RootSet,
    sigma: Vec<SphericalRoot>,
    amat: AMatrix,
}

impl SphericalSystem {
    pub fn new(sp: RootSet, sigma: Vec<SphericalRoot>, amat: AMatrix) -> Self {
        SphericalSystem { sp, sigma, amat }
    }

    pub fn sp(&self) -> RootSet {
        self.sp
    }

    pub fn sigma(&self) -> &[SphericalRoot] {
        &self.sigma
    }

    pub fn amat(&self) -> &AMatrix {
        &self.amat
    }

    pub fn a(&self, alpha: usize, sigma: usize) -> Option<APair> {
        self.amat.get(&(alpha, sigma)).copied()
    }

    /// Simple roots that are themselves in `Sigma`.
    pub fn sigma_simple(&self) -> RootSet {
        self.sigma.iter().filter_map(|s| s.as_simple()).collect()
    }

    /// Position in `Sigma` of the simple root `alpha`.
    pub fn position_of_simple(&self, alpha: usize) -> Option<usize> {
        self.sigma.iter().position(|s| s.as_simple() == Some(alpha))
    }

    /// `S^a`: simple roots whose double is in `Sigma`.
    pub fn doubled_simple(&self) -> RootSet {
        self.sigma
            .iter()
            .filter_map(|s| {
                let supp = s.chi.support();
                match supp.as_slice() {
                    [i] if s.chi.0[*i] == 2 => Some(*i),
                    _ => None,
                }
            })
            .collect()
    }

    /// Orthogonal pairs `(alpha, beta)`, `alpha < beta`, whose sum is in `Sigma`.
    pub fn orthogonal_sum_pairs(&self, cat: &Catalogue) -> Vec<(usize, usize)> {
        let rs = cat.root_system();
        self.sigma
            .iter()
            .filter_map(|s| {
                let supp = s.chi.support();
                match supp.as_slice() {
                    [a, b] if s.chi.0[*a] == 1 && s.chi.0[*b] == 1 && rs.is_orthogonal(*a, *b) => Some((*a, *b)),
                    _ => None,
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    A1,
    A2,
    A3,
    Sigma1,
    Sigma2,
    S,
    /// The `a^+_{alpha,beta} = 1` entries must pair up into shared colors.
    ASharing,
    /// `Sigma` is linearly independent over `Q`. The other axioms do not
    /// imply it: `{a1+a2, 2a1+2a2}` with `S^p = {a2}` in B2 passes them all.
    Independence,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::A1 => "A1",
            Axiom::A2 => "A2",
            Axiom::A3 => "A3",
            Axiom::Sigma1 => "S1",
            Axiom::Sigma2 => "S2",
            Axiom::S => "S",
            Axiom::ASharing => "A-sharing",
            Axiom::Independence => "independence",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// Simple roots involved (0-based).
    pub alphas: Vec<usize>,
    /// Positions in `Sigma` involved.
    pub sigmas: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagnosticKind {
    LinearlyDependent,
    DuplicateRoot,
    CrossSignSharing,
    LargeClass,
}

impl DiagnosticKind {
    pub fn id(self) -> &'static str {
        match self {
            DiagnosticKind::LinearlyDependent => "linearly-dependent",
            DiagnosticKind::DuplicateRoot => "duplicate-root",
            DiagnosticKind::CrossSignSharing => "cross-sign-sharing",
            DiagnosticKind::LargeClass => "large-class",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_diagnostic(&self, kind: DiagnosticKind) -> bool {
        self.diagnostics.iter().any(|d| d.kind == kind)
    }

    fn violate(&mut self, axiom: Axiom, alphas: Vec<usize>, sigmas: Vec<usize>, message: String) {
        self.violations.push(Violation { axiom, alphas, sigmas, message });
    }
}

/// Symbols `(alpha, sign)` of the roots in `Sigma ∩ S`, grouped into the
/// colors they share.
///
/// `(alpha, e)` and `(beta, e')` are glued when `a^e_{alpha,beta} = 1` and
/// `a^{e'}_{beta,alpha} = 1`; the classes are the transitive closure.
#[derive(Debug, Clone)]
pub(crate) struct SharingClasses {
    pub classes: Vec<Vec<(usize, Sign)>>,
    pub problems: Vec<(Vec<usize>, String)>,
}

pub(crate) fn sharing_classes(sys: &SphericalSystem) -> SharingClasses {
    let simple: Vec<usize> = sys.sigma_simple().iter().collect();
    let symbols: Vec<(usize, Sign)> = simple.iter().flat_map(|&a| Sign::BOTH.map(|s| (a, s))).collect();
    let pos = |sym: (usize, Sign)| symbols.iter().position(|&x| x == sym).expect("known symbol");
    let mut parent: Vec<usize> = (0..symbols.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut problems = Vec::new();
    let entry =
        |alpha: usize, beta: usize| -> Option<APair> { sys.position_of_simple(beta).and_then(|j| sys.a(alpha, j)) };
    for &alpha in &simple {
        for &beta in &simple {
            if alpha == beta {
                continue;
            }
            for sign in Sign::BOTH {
                if entry(alpha, beta).map(|p| p.get(sign)) != Some(1) {
                    continue;
                }
                let partner = Sign::BOTH.into_iter().find(|&s2| entry(beta, alpha).map(|p| p.get(s2)) == Some(1));
                match partner {
                    Some(s2) => {
                        let (x, y) = (find(&mut parent, pos((alpha, sign))), find(&mut parent, pos((beta, s2))));
                        if x != y {
                            parent[x.max(y)] = x.min(y);
                        }
                    }
                    None => problems.push((
                        vec![alpha, beta],
                        format!(
                            "a^{sign}(a{}, a{}) = 1 but neither a^+(a{}, a{}) nor a^-(a{}, a{}) is 1",
                            alpha + 1,
                            beta + 1,
                            beta + 1,
                            alpha + 1,
                            beta + 1,
                            alpha + 1
                        ),
                    )),
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<(usize, Sign)>> = BTreeMap::new();
    for (k, &sym) in symbols.iter().enumerate() {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(sym);
    }
    let classes: Vec<Vec<(usize, Sign)>> = groups.into_values().collect();
    for class in &classes {
        let mut roots: Vec<usize> = class.iter().map(|&(a, _)| a).collect();
        roots.sort();
        if roots.windows(2).any(|w| w[0] == w[1]) {
            problems
                .push((roots.clone(), "a color would stand for both D^+ and D^- of the same simple root".to_string()));
            continue;
        }
        let row = |(a, s): (usize, Sign)| -> Vec<Option<i64>> {
            (0..sys.sigma.len()).map(|j| sys.a(a, j).map(|p| p.get(s))).collect()
        };
        let first = row(class[0]);
        if class.iter().skip(1).any(|&sym| row(sym) != first) {
            problems.push((roots, "shared color has unequal a-rows".to_string()));
        }
    }
    SharingClasses { classes, problems }
}

/// Checks every axiom of a spherical system, in order A1, A2, A3, S1, S2,
/// S, then the consistency of shared colors and the independence of `Sigma`.
pub fn validate(cat: &Catalogue, sys: &SphericalSystem) -> Result<ValidationReport, SystemError> {
    let rs = cat.root_system();
    let rank = rs.rank();
    if let Some(i) = sys.sp.iter().find(|&i| i >= rank) {
        return Err(SystemError::RootIndexOutOfRange { index: i, rank });
    }
    for s in &sys.sigma {
        if s.chi.len() != rank || cat.lookup(&s.chi).is_none_or(|c| c.shape != s.shape) {
            return Err(SystemError::UnknownSphericalRoot(s.chi.to_string()));
        }
    }
    for &(alpha, j) in sys.amat.keys() {
        if alpha >= rank {
            return Err(SystemError::RootIndexOutOfRange { index: alpha, rank });
        }
        if j >= sys.sigma.len() {
            return Err(SystemError::SigmaIndexOutOfRange { index: j, len: sys.sigma.len() });
        }
    }

    let mut report = ValidationReport::default();
    let simple = sys.sigma_simple();
    let n_sigma = sys.sigma.len();

    // A1: the domain is exactly (Sigma ∩ S) x Sigma
    let mut a1_ok = true;
    for alpha in simple.iter() {
        for j in 0..n_sigma {
            if !sys.amat.contains_key(&(alpha, j)) {
                a1_ok = false;
                report.violate(
                    Axiom::A1,
                    vec![alpha],
                    vec![j],
                    format!("missing a^±(a{}, {})", alpha + 1, sys.sigma[j].chi),
                );
            }
        }
    }
    for &(alpha, j) in sys.amat.keys() {
        if !simple.contains(alpha) {
            a1_ok = false;
            report.violate(
                Axiom::A1,
                vec![alpha],
                vec![j],
                format!("a^±(a{}, {}) given but a{} is not in Sigma", alpha + 1, sys.sigma[j].chi, alpha + 1),
            );
        }
    }

    // A2
    for (&(alpha, j), p) in &sys.amat {
        if !simple.contains(alpha) {
            continue;
        }
        for sign in Sign::BOTH {
            let v = p.get(sign);
            if v > 1 {
                report.violate(
                    Axiom::A2,
                    vec![alpha],
                    vec![j],
                    format!("a^{sign}(a{}, {}) = {v} > 1", alpha + 1, sys.sigma[j].chi),
                );
            } else if v == 1 && sys.sigma[j].as_simple().is_none() {
                report.violate(
                    Axiom::A2,
                    vec![alpha],
                    vec![j],
                    format!(
                        "a^{sign}(a{}, {}) = 1 but {} is not a simple root",
                        alpha + 1,
                        sys.sigma[j].chi,
                        sys.sigma[j].chi
                    ),
                );
            }
        }
    }

    // A3
    for (&(alpha, j), p) in &sys.amat {
        if !simple.contains(alpha) {
            continue;
        }
        let pairing = rs.pair(&sys.sigma[j].chi, alpha);
        if p.plus + p.minus != pairing {
            report.violate(
                Axiom::A3,
                vec![alpha],
                vec![j],
                format!("a^+ + a^- = {} but ({}, a{}^vee) = {pairing}", p.plus + p.minus, sys.sigma[j].chi, alpha + 1),
            );
        }
    }

    // S1
    for alpha in sys.doubled_simple().iter() {
        let twice = Character::simple(rank, alpha).scaled(2);
        for (j, s) in sys.sigma.iter().enumerate() {
            if s.chi == twice {
                continue;
            }
            let v = rs.pair(&s.chi, alpha);
            if v > 0 || v % 2 != 0 {
                report.violate(
                    Axiom::Sigma1,
                    vec![alpha],
                    vec![j],
                    format!("2a{} in Sigma but ({}, a{}^vee) = {v} is not in 2Z<=0", alpha + 1, s.chi, alpha + 1),
                );
            }
        }
    }

    // S2
    for (a, b) in sys.orthogonal_sum_pairs(cat) {
        for (j, s) in sys.sigma.iter().enumerate() {
            let (x, y) = (rs.pair(&s.chi, a), rs.pair(&s.chi, b));
            if x != y {
                report.violate(
                    Axiom::Sigma2,
                    vec![a, b],
                    vec![j],
                    format!(
                        "a{}+a{} in Sigma but ({}, a{}^vee) = {x} != {y} = ({}, a{}^vee)",
                        a + 1,
                        b + 1,
                        s.chi,
                        a + 1,
                        s.chi,
                        b + 1
                    ),
                );
            }
        }
    }

    // S
    for (j, s) in sys.sigma.iter().enumerate() {
        let interval = cat.interval_of(s);
        if !interval.admits(sys.sp) {
            report.violate(
                Axiom::S,
                sys.sp.iter().collect(),
                vec![j],
                format!(
                    "(S^p, {}) not compatible: need {} <= S^p <= {}, S^p = {}",
                    s.chi, interval.spp, interval.sp_sigma, sys.sp
                ),
            );
        }
    }

    if a1_ok {
        let sharing = sharing_classes(sys);
        for (alphas, message) in sharing.problems {
            report.violate(Axiom::ASharing, alphas, vec![], message);
        }
        for class in &sharing.classes {
            if class.iter().any(|&(_, s)| s != class[0].1) {
                report.diagnostics.push(Diagnostic {
                    kind: DiagnosticKind::CrossSignSharing,
                    message: format!(
                        "a D^+ and a D^- of different simple roots coincide: {}",
                        class.iter().map(|(a, s)| format!("D^{s}(a{})", a + 1)).collect::<Vec<_>>().join(" = ")
                    ),
                });
            }
        }
    }

    for j in 0..n_sigma {
        for k in j + 1..n_sigma {
            if sys.sigma[j].chi == sys.sigma[k].chi {
                report.diagnostics.push(Diagnostic {
                    kind: DiagnosticKind::DuplicateRoot,
                    message: format!("{} listed twice", sys.sigma[j].chi),
                });
            }
        }
    }
    if !sigma_independent(&sys.sigma)? {
        let message = "spherical roots are linearly dependent over Q".to_string();
        report.violate(Axiom::Independence, vec![], (0..n_sigma).collect(), message.clone());
        report.diagnostics.push(Diagnostic { kind: DiagnosticKind::LinearlyDependent, message });
    }
    Ok(report)
}

pub(crate) fn sigma_independent(sigma: &[SphericalRoot]) -> Result<bool, LinalgError> {
    if sigma.is_empty() {
        return Ok(true);
    }
    let rows: Vec<&[i64]> = sigma.iter().map(|s| s.chi.coeffs()).collect();
    Ok(zlinalg::rank(&IntMatrix::from_rows(&rows)?)? == sigma.len())
}

/// Fails with [`SystemError::Invalid`] unless `sys` passes [`validate`].
pub fn ensure_valid(cat: &Catalogue, sys: &SphericalSystem) -> Result<(), SystemError> {
    let report = validate(cat, sys)?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(SystemError::Invalid(format!("axiom {}: {}", v.axiom, v.message))),
    }
}

/// No `sigma` outside `S` has a double `2 sigma` compatible with `S^p`.
pub fn is_spherically_closed(cat: &Catalogue, sys: &SphericalSystem) -> Result<bool, SystemError> {
    ensure_valid(cat, sys)?;
    Ok(closure_witness(cat, sys).is_none())
}

/// A root of `Sigma` that breaks spherical closure, if any.
pub(crate) fn closure_witness(cat: &Catalogue, sys: &SphericalSystem) -> Option<usize> {
    sys.sigma
        .iter()
        .position(|s| s.as_simple().is_none() && cat.double_of(s).is_some_and(|d| cat.interval_of(d).admits(sys.sp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

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
    fn a1_simple_root_system_is_valid() {
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1])], amat(&[((0, 0), (1, 1))]));
        let r = validate(&c, &sys).unwrap();
        assert!(r.is_valid(), "{r:?}");
        assert!(r.diagnostics.is_empty());
        assert!(is_spherically_closed(&c, &sys).unwrap());
    }

    #[test]
    fn a1_forced_a_values() {
        let c = cat("A1");
        for (p, m) in [(2, 0), (0, 2), (1, 0), (1, 2)] {
            let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1])], amat(&[((0, 0), (p, m))]));
            assert!(!validate(&c, &sys).unwrap().is_valid(), "({p},{m}) accepted");
        }
    }

    #[test]
    fn a1_both_roots_violate_sigma1() {
        let c = cat("A1");
        let sys = SphericalSystem::new(
            RootSet::EMPTY,
            vec![root(&c, &[1]), root(&c, &[2])],
            amat(&[((0, 0), (1, 1)), ((0, 1), (2, 2))]),
        );
        let r = validate(&c, &sys).unwrap();
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::Sigma1 && v.sigmas == vec![0]));
        assert!(r.has_diagnostic(DiagnosticKind::LinearlyDependent));
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::Independence));
    }

    #[test]
    fn b2_root_and_its_double_are_rejected() {
        let c = cat("B2");
        let sys =
            SphericalSystem::new(RootSet::singleton(1), vec![root(&c, &[1, 1]), root(&c, &[2, 2])], AMatrix::new());
        let r = validate(&c, &sys).unwrap();
        let axioms: Vec<Axiom> = r.violations.iter().map(|v| v.axiom).collect();
        assert_eq!(axioms, vec![Axiom::Independence]);
        assert!(r.has_diagnostic(DiagnosticKind::LinearlyDependent));
    }

    #[test]
    fn missing_and_extra_a_entries() {
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1])], AMatrix::new());
        let r = validate(&c, &sys).unwrap();
        assert_eq!(r.violations[0].axiom, Axiom::A1);
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[2])], amat(&[((0, 0), (2, 2))]));
        let r = validate(&c, &sys).unwrap();
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::A1));
    }

    #[test]
    fn b3_example_valid_but_not_closed() {
        let c = cat("B3");
        let sys = SphericalSystem::new([1, 2].into_iter().collect(), vec![root(&c, &[1, 1, 1])], AMatrix::new());
        assert!(validate(&c, &sys).unwrap().is_valid());
        assert!(!is_spherically_closed(&c, &sys).unwrap());
        let sys = SphericalSystem::new(RootSet::singleton(1), vec![root(&c, &[1, 1, 1])], AMatrix::new());
        assert!(validate(&c, &sys).unwrap().is_valid());
        assert!(is_spherically_closed(&c, &sys).unwrap());
        let sys = SphericalSystem::new(RootSet::singleton(2), vec![root(&c, &[1, 1, 1])], AMatrix::new());
        let r = validate(&c, &sys).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].axiom, Axiom::S);
    }

    #[test]
    fn doubled_simple_root_is_closed() {
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[2])], AMatrix::new());
        assert!(is_spherically_closed(&c, &sys).unwrap());
    }

    #[test]
    fn closure_refuses_invalid() {
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::singleton(0), vec![root(&c, &[2])], AMatrix::new());
        assert!(matches!(is_spherically_closed(&c, &sys), Err(SystemError::Invalid(_))));
    }

    #[test]
    fn sigma2_on_orthogonal_sum() {
        // in A3, a1+a3 with a2: (a1+a3, a1^vee) = 2 = (a1+a3, a3^vee)
        let c = cat("A3");
        let ok = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1, 0, 1])], AMatrix::new());
        assert!(validate(&c, &ok).unwrap().is_valid());
        // adding a1+a2 breaks S2: (a1+a2, a1^vee) = 1, (a1+a2, a3^vee) = -1
        let bad =
            SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1, 0, 1]), root(&c, &[1, 1, 0])], AMatrix::new());
        let r = validate(&c, &bad).unwrap();
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::Sigma2 && v.sigmas == vec![1]));
    }

    #[test]
    fn a2_shared_color_is_consistent() {
        let c = cat("A2");
        let sys = SphericalSystem::new(
            RootSet::EMPTY,
            vec![root(&c, &[1, 0]), root(&c, &[0, 1])],
            amat(&[((0, 0), (1, 1)), ((0, 1), (1, -2)), ((1, 0), (1, -2)), ((1, 1), (1, 1))]),
        );
        let r = validate(&c, &sys).unwrap();
        assert!(r.is_valid(), "{r:?}");
        let sharing = sharing_classes(&sys);
        assert_eq!(sharing.classes.len(), 3);
    }

    #[test]
    fn a2_one_sided_sharing_rejected() {
        let c = cat("A2");
        let sys = SphericalSystem::new(
            RootSet::EMPTY,
            vec![root(&c, &[1, 0]), root(&c, &[0, 1])],
            amat(&[((0, 0), (1, 1)), ((0, 1), (1, -2)), ((1, 0), (0, -1)), ((1, 1), (1, 1))]),
        );
        let r = validate(&c, &sys).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].axiom, Axiom::ASharing);
    }

    #[test]
    fn out_of_range_inputs_are_errors() {
        let c = cat("A1");
        let sys = SphericalSystem::new(RootSet::singleton(3), vec![], AMatrix::new());
        assert!(matches!(validate(&c, &sys), Err(SystemError::RootIndexOutOfRange { .. })));
        let other = cat("A2");
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&other, &[1, 1])], AMatrix::new());
        assert!(matches!(validate(&c, &sys), Err(SystemError::UnknownSphericalRoot(_))));
        let sys = SphericalSystem::new(RootSet::EMPTY, vec![root(&c, &[1])], amat(&[((0, 4), (1, 1))]));
        assert!(matches!(validate(&c, &sys), Err(SystemError::SigmaIndexOutOfRange { .. })));
    }
}

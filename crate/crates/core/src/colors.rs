//! Colors of a spherical system: the set `Delta`, the weights `omega_D`,
//! the matrix `a_{sigma,D}`, the group `Xi(C)` with the characters `chi_D`,
//! and the pairs `lambda_D = (omega_D, chi_D)`.
//!
//! `Delta` is read with colors merged: the symbols `D^e_alpha` and
//! `D^{e'}_beta` (with `beta != alpha`) are the same color when
//! `a^e_{alpha,beta} = 1 = a^{e'}_{beta,alpha}`. Kept as formal symbols, the
//! identity `(sigma, 0) = sum_D a_{sigma,D} lambda_D` fails as soon as some
//! `a^+_{alpha,beta} = 1` with `alpha != beta`; with the merge it holds.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::rootsys::{DominantWeight, RootSet};
use crate::sphroots::Catalogue;
use crate::system::{self, Sign, SphericalSystem, SystemError};
use crate::zlinalg::{self, Cokernel, IntMatrix, LinalgError, Smith};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error(transparent)]
    System(#[from] SystemError),
    #[error("inconsistent A-sharing: {0}")]
    InconsistentSharing(String),
    #[error("odd pairing at 2alpha-color: ({sigma}, a{}^vee) = {value}", .alpha + 1)]
    OddPairing { alpha: usize, sigma: String, value: i64 },
    #[error("pairing of {sigma} differs across the class of D_a{}", .alpha + 1)]
    IllDefinedClass { alpha: usize, sigma: String },
    #[error("sigma identity failure: {0}")]
    SigmaIdentity(String),
    #[error("freeness failure: {0}")]
    Freeness(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

type Result<T> = std::result::Result<T, ColorError>;

/// Kinds in canonical order: plus < minus < twoalpha < bclass < singleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorKind {
    Plus,
    Minus,
    TwoAlpha,
    BClass,
    Single,
}

impl ColorKind {
    pub fn name(self) -> &'static str {
        match self {
            ColorKind::Plus => "plus",
            ColorKind::Minus => "minus",
            ColorKind::TwoAlpha => "twoalpha",
            ColorKind::BClass => "bclass",
            ColorKind::Single => "single",
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(self, ColorKind::Plus | ColorKind::Minus)
    }
}

/// One of the symbols merged into a color; `sign` is set for `D^±_alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSymbol {
    pub alpha: usize,
    pub sign: Option<Sign>,
}

impl fmt::Display for ColorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(s) => write!(f, "D{s}(a{})", self.alpha + 1),
            None => write!(f, "D(a{})", self.alpha + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Color {
    pub kind: ColorKind,
    /// Sorted; the first member is the representative.
    pub members: Vec<ColorSymbol>,
    pub omega: DominantWeight,
}

impl Color {
    pub fn representative(&self) -> ColorSymbol {
        self.members[0]
    }

    /// Simple roots of the members, ascending.
    pub fn roots(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.members.iter().map(|m| m.alpha).collect();
        r.sort();
        r.dedup();
        r
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        f.write_str(&names.join("="))
    }
}

/// `Xi(C)`: `Z^Delta` modulo the rows of the `a`-matrix.
#[derive(Debug, Clone)]
pub struct GroupPresentation {
    pub ngens: usize,
    pub relations: IntMatrix,
    pub snf: Smith,
    pub rank: usize,
    pub torsion: Vec<i64>,
    /// `chi_D` in Smith coordinates, one per color.
    pub chi: Vec<Vec<i64>>,
    coker: Cokernel,
}

impl GroupPresentation {
    pub fn invariant_factors(&self) -> &[i64] {
        &self.coker.invariant_factors
    }

    /// Class of `sum_D n_D eps_D`.
    pub fn project(&self, n: &[i64]) -> std::result::Result<Vec<i64>, LinalgError> {
        self.coker.project(n)
    }

    /// Linear forms giving the free coordinates of a class.
    pub fn free_forms(&self) -> &[Vec<i64>] {
        self.coker.free_forms()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda {
    pub omega: DominantWeight,
    pub chi: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct ColorTable {
    pub colors: Vec<Color>,
    /// `a[sigma][D]`, rows indexed like `Sigma`.
    pub amatrix: IntMatrix,
    pub cgroup: GroupPresentation,
    pub lambdas: Vec<Lambda>,
    pub warnings: Vec<String>,
}

impl ColorTable {
    /// `lambda_D` as integer vectors: fundamental coordinates of `omega_D`
    /// followed by the Smith coordinates of `chi_D`.
    pub fn lambda_vectors(&self) -> Vec<Vec<i64>> {
        self.lambdas.iter().map(|l| l.omega.coeffs().iter().chain(&l.chi).copied().collect()).collect()
    }

    /// `omega_D` for every color, with repetitions.
    pub fn omegas(&self) -> Vec<&DominantWeight> {
        self.colors.iter().map(|c| &c.omega).collect()
    }
}

/// `S^b`: simple roots outside `S^p`, `Sigma` and `S^a`.
fn s_b(sys: &SphericalSystem, rank: usize) -> RootSet {
    RootSet::full(rank).difference(sys.sp()).difference(sys.sigma_simple()).difference(sys.doubled_simple())
}

/// Builds `Delta` with the weights `omega_D`, in canonical order.
pub fn color_set(cat: &Catalogue, sys: &SphericalSystem) -> Result<Vec<Color>> {
    Ok(colors_with_warnings(cat, sys)?.0)
}

fn colors_with_warnings(cat: &Catalogue, sys: &SphericalSystem) -> Result<(Vec<Color>, Vec<String>)> {
    let rank = cat.root_system().rank();
    let sharing = system::sharing_classes(sys);
    if let Some((_, msg)) = sharing.problems.first() {
        return Err(ColorError::InconsistentSharing(msg.clone()));
    }
    system::ensure_valid(cat, sys)?;
    let mut warnings = Vec::new();
    let mut colors = Vec::new();

    for class in sharing.classes {
        let mut members: Vec<ColorSymbol> =
            class.iter().map(|&(alpha, s)| ColorSymbol { alpha, sign: Some(s) }).collect();
        members.sort();
        let rep = members[0];
        let sign = rep.sign.expect("signed symbol");
        if members.iter().any(|m| m.sign != rep.sign) {
            warnings.push(format!(
                "{} merges a D+ with a D- of another simple root",
                members.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("=")
            ));
        }
        let mut omega = DominantWeight::zero(rank);
        for (j, s) in sys.sigma().iter().enumerate() {
            if let (Some(beta), Some(p)) = (s.as_simple(), sys.a(rep.alpha, j)) {
                if p.get(sign) == 1 {
                    omega.add_fundamental(beta, 1);
                }
            }
        }
        let kind = match sign {
            Sign::Plus => ColorKind::Plus,
            Sign::Minus => ColorKind::Minus,
        };
        colors.push(Color { kind, members, omega });
    }

    for alpha in sys.doubled_simple().iter() {
        let mut omega = DominantWeight::zero(rank);
        omega.add_fundamental(alpha, 2);
        colors.push(Color { kind: ColorKind::TwoAlpha, members: vec![ColorSymbol { alpha, sign: None }], omega });
    }

    let sb = s_b(sys, rank);
    let pairs = sys.orthogonal_sum_pairs(cat);
    let mut parent: BTreeMap<usize, usize> = sb.iter().map(|a| (a, a)).collect();
    fn find(parent: &BTreeMap<usize, usize>, mut x: usize) -> usize {
        while parent[&x] != x {
            x = parent[&x];
        }
        x
    }
    for (a, b) in pairs {
        if sb.contains(a) && sb.contains(b) {
            let (x, y) = (find(&parent, a), find(&parent, b));
            if x != y {
                parent.insert(x.max(y), x.min(y));
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in sb.iter() {
        classes.entry(find(&parent, a)).or_default().push(a);
    }
    for class in classes.into_values() {
        let mut omega = DominantWeight::zero(rank);
        for &a in &class {
            omega.add_fundamental(a, 1);
        }
        let kind = if class.len() == 1 { ColorKind::Single } else { ColorKind::BClass };
        if class.len() > 2 {
            warnings.push(format!(
                "class {{{}}} has more than two roots; omega is the sum of their fundamental weights",
                class.iter().map(|a| format!("a{}", a + 1)).collect::<Vec<_>>().join(",")
            ));
        }
        let members = class.into_iter().map(|alpha| ColorSymbol { alpha, sign: None }).collect();
        colors.push(Color { kind, members, omega });
    }

    colors.sort_by_key(|c| (c.kind, c.members.iter().map(|m| m.alpha).min()));
    Ok((colors, warnings))
}

/// `omega_D` for each color of [`color_set`], in the same order.
pub fn omega_table(cat: &Catalogue, sys: &SphericalSystem) -> Result<Vec<DominantWeight>> {
    Ok(color_set(cat, sys)?.into_iter().map(|c| c.omega).collect())
}

fn amatrix_for(cat: &Catalogue, sys: &SphericalSystem, colors: &[Color]) -> Result<IntMatrix> {
    let rs = cat.root_system();
    let mut m = IntMatrix::zeros(sys.sigma().len(), colors.len());
    for (j, s) in sys.sigma().iter().enumerate() {
        for (k, c) in colors.iter().enumerate() {
            let rep = c.representative();
            let value = match c.kind {
                ColorKind::Plus | ColorKind::Minus => {
                    let sign = rep.sign.expect("signed symbol");
                    sys.a(rep.alpha, j).expect("validated domain").get(sign)
                }
                ColorKind::TwoAlpha => {
                    let p = rs.pair(&s.chi, rep.alpha);
                    if p % 2 != 0 {
                        return Err(ColorError::OddPairing { alpha: rep.alpha, sigma: s.chi.to_string(), value: p });
                    }
                    p / 2
                }
                ColorKind::BClass | ColorKind::Single => {
                    let p = rs.pair(&s.chi, rep.alpha);
                    if c.members.iter().any(|m| rs.pair(&s.chi, m.alpha) != p) {
                        return Err(ColorError::IllDefinedClass { alpha: rep.alpha, sigma: s.chi.to_string() });
                    }
                    p
                }
            };
            m[(j, k)] = value;
        }
    }
    Ok(m)
}

/// The matrix `a[sigma][D]`, rows in `Sigma` order and columns in color order.
pub fn a_coefficients(cat: &Catalogue, sys: &SphericalSystem) -> Result<IntMatrix> {
    let colors = color_set(cat, sys)?;
    amatrix_for(cat, sys, &colors)
}

fn group_for(amatrix: &IntMatrix) -> Result<GroupPresentation> {
    let snf = zlinalg::smith_normal_form(amatrix)?;
    let coker = zlinalg::cokernel_presentation(amatrix)?;
    let n = amatrix.cols();
    let chi = (0..n)
        .map(|d| {
            let mut e = vec![0; n];
            e[d] = 1;
            coker.project(&e)
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(GroupPresentation {
        ngens: n,
        relations: amatrix.clone(),
        snf,
        rank: coker.rank,
        torsion: coker.torsion.clone(),
        chi,
        coker,
    })
}

/// `Xi(C)` presented as a cokernel, with `chi_D` for every color.
pub fn c_character_group(cat: &Catalogue, sys: &SphericalSystem) -> Result<GroupPresentation> {
    group_for(&a_coefficients(cat, sys)?)
}

/// Assembles the full table and verifies the sigma identity and freeness.
pub fn lambda_weights(cat: &Catalogue, sys: &SphericalSystem) -> Result<ColorTable> {
    let (colors, warnings) = colors_with_warnings(cat, sys)?;
    let amatrix = amatrix_for(cat, sys, &colors)?;
    let cgroup = group_for(&amatrix)?;
    let lambdas =
        colors.iter().zip(&cgroup.chi).map(|(c, chi)| Lambda { omega: c.omega.clone(), chi: chi.clone() }).collect();
    let table = ColorTable { colors, amatrix, cgroup, lambdas, warnings };
    checks::sigma_identity(cat, sys, &table).map_err(ColorError::SigmaIdentity)?;
    checks::freeness(&table).map_err(ColorError::Freeness)?;
    Ok(table)
}

/// Properties of a [`ColorTable`], each returning a description of the
/// first failure.
pub mod checks {
    use super::*;

    /// `sigma = sum_D a[sigma][D] omega_D` in fundamental coordinates and
    /// `sum_D a[sigma][D] chi_D = 0` in `Xi(C)`.
    pub fn sigma_identity(
        cat: &Catalogue,
        sys: &SphericalSystem,
        table: &ColorTable,
    ) -> std::result::Result<(), String> {
        let rs = cat.root_system();
        for (j, s) in sys.sigma().iter().enumerate() {
            let want = rs.to_fundamental_coords(&s.chi).map_err(|e| e.to_string())?;
            let mut got = vec![0i64; rs.rank()];
            let mut chi = vec![0i64; table.cgroup.chi.first().map_or(0, |c| c.len())];
            for (k, l) in table.lambdas.iter().enumerate() {
                let a = table.amatrix[(j, k)];
                for (g, w) in got.iter_mut().zip(l.omega.coeffs()) {
                    *g += a * w;
                }
                for (c, x) in chi.iter_mut().zip(&l.chi) {
                    *c += a * x;
                }
            }
            if got != want {
                return Err(format!("{}: sum a*omega = {got:?}, expected {want:?}", s.chi));
            }
            let reduced: Vec<i64> = chi
                .iter()
                .enumerate()
                .map(|(i, &x)| match i.checked_sub(table.cgroup.rank) {
                    Some(t) => x.rem_euclid(table.cgroup.torsion[t]),
                    None => x,
                })
                .collect();
            if reduced.iter().any(|&x| x != 0) {
                return Err(format!("{}: sum a*chi = {reduced:?} is not zero", s.chi));
            }
        }
        Ok(())
    }

    /// `n -> sum_D n_D lambda_D` is injective on `Z^Delta`.
    ///
    /// A kernel element has `sum n_D omega_D = 0` and lies in the relation
    /// lattice, so its free coordinates vanish. Torsion coordinates cannot
    /// rescue a nonzero integer kernel vector, so injectivity is full column
    /// rank of the `omega` rows stacked on the free forms.
    pub fn freeness(table: &ColorTable) -> std::result::Result<(), String> {
        let n = table.colors.len();
        if n == 0 {
            return Ok(());
        }
        let rank = table.lambdas[0].omega.coeffs().len();
        let mut rows: Vec<Vec<i64>> =
            (0..rank).map(|i| table.lambdas.iter().map(|l| l.omega.coeffs()[i]).collect()).collect();
        rows.extend(table.cgroup.free_forms().iter().cloned());
        let m = IntMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
        let r = zlinalg::rank(&m).map_err(|e| e.to_string())?;
        if r == n {
            Ok(())
        } else {
            Err(format!("the lambda_D span a lattice of rank {r} < {n}"))
        }
    }

    /// Every `omega` value occurs at most twice among plus/minus colors.
    pub fn omega_multiplicity(table: &ColorTable) -> std::result::Result<(), String> {
        let mut count: BTreeMap<&[i64], usize> = BTreeMap::new();
        for c in table.colors.iter().filter(|c| c.kind.is_signed()) {
            *count.entry(c.omega.coeffs()).or_default() += 1;
        }
        match count.into_iter().find(|&(_, k)| k > 2) {
            Some((w, k)) => Err(format!("omega {w:?} occurs {k} times")),
            None => Ok(()),
        }
    }

    fn distinct_weights(table: &ColorTable) -> Vec<&DominantWeight> {
        let mut ws = table.omegas();
        ws.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        ws.dedup();
        ws
    }

    /// One item of the list of weight properties, evaluated literally over
    /// the set of distinct weights `{omega_D}`.
    ///
    /// Item 1: `(l, a^vee) <= 2`. Item 2: `(l, a^vee) = 2` forces `l = 2 w_a`
    /// and every other weight orthogonal to `a`. Item 3: if `l` meets both
    /// `a != a'` then some `l'` (possibly `l`) misses one of them. Item 4: if
    /// `l != l'` both meet `a` then some `a'` meets `l` but not `l'`.
    pub fn weight_property(table: &ColorTable, item: u8) -> std::result::Result<(), String> {
        let ws = distinct_weights(table);
        let rank = table.lambdas.first().map_or(0, |l| l.omega.coeffs().len());
        match item {
            1 => {
                for w in &ws {
                    for a in 0..rank {
                        if w.pairing(a) > 2 {
                            return Err(format!("({w}, a{}^vee) = {} > 2", a + 1, w.pairing(a)));
                        }
                    }
                }
            }
            2 => {
                for w in &ws {
                    for a in 0..rank {
                        if w.pairing(a) != 2 {
                            continue;
                        }
                        let mut twice = DominantWeight::zero(rank);
                        twice.add_fundamental(a, 2);
                        if **w != twice {
                            return Err(format!("({w}, a{}^vee) = 2 but {w} != 2w{}", a + 1, a + 1));
                        }
                        if let Some(o) = ws.iter().find(|o| **o != *w && o.pairing(a) != 0) {
                            return Err(format!("({w}, a{}^vee) = 2 but {o} is not orthogonal to a{}", a + 1, a + 1));
                        }
                    }
                }
            }
            3 => {
                for w in &ws {
                    for a in 0..rank {
                        for b in a + 1..rank {
                            if w.pairing(a) * w.pairing(b) == 0 {
                                continue;
                            }
                            if !ws.iter().any(|o| o.pairing(a) * o.pairing(b) == 0) {
                                return Err(format!("every weight meets both a{} and a{} (e.g. {w})", a + 1, b + 1));
                            }
                        }
                    }
                }
            }
            4 => {
                for w in &ws {
                    for o in &ws {
                        if w == o {
                            continue;
                        }
                        for a in 0..rank {
                            if w.pairing(a) * o.pairing(a) == 0 {
                                continue;
                            }
                            if !(0..rank).any(|b| w.pairing(b) != 0 && o.pairing(b) == 0) {
                                return Err(format!(
                                    "{w} and {o} both meet a{}, and every root meeting {w} meets {o}",
                                    a + 1
                                ));
                            }
                        }
                    }
                }
            }
            _ => return Err(format!("no weight property {item}")),
        }
        Ok(())
    }

    /// Item 3 read as uniqueness: for `a != a'`, at most one weight meets
    /// both.
    pub fn unique_joint_weight(table: &ColorTable) -> std::result::Result<(), String> {
        let ws = distinct_weights(table);
        let rank = table.lambdas.first().map_or(0, |l| l.omega.coeffs().len());
        for a in 0..rank {
            for b in a + 1..rank {
                let both: Vec<_> = ws.iter().filter(|w| w.pairing(a) * w.pairing(b) != 0).collect();
                if both.len() > 1 {
                    return Err(format!("{} and {} both meet a{} and a{}", both[0], both[1], a + 1, b + 1));
                }
            }
        }
        Ok(())
    }

    /// Item 4 read symmetrically: two distinct weights meeting the same
    /// simple root are not orthogonal to the same set of simple roots.
    pub fn distinct_supports(table: &ColorTable) -> std::result::Result<(), String> {
        let ws = distinct_weights(table);
        let rank = table.lambdas.first().map_or(0, |l| l.omega.coeffs().len());
        let meets = |w: &DominantWeight| -> Vec<bool> { (0..rank).map(|b| w.pairing(b) != 0).collect() };
        for (i, w) in ws.iter().enumerate() {
            for o in &ws[i + 1..] {
                if (0..rank).any(|a| w.pairing(a) * o.pairing(a) != 0) && meets(w) == meets(o) {
                    return Err(format!("{w} and {o} meet exactly the same simple roots"));
                }
            }
        }
        Ok(())
    }

    /// For pairwise distinct `a, a', d, d'` outside `S^p` with `a` adjacent
    /// to `a'`, `d` adjacent to `d'` and `d` orthogonal to `a`: if there are
    /// more than two weights, one of them is orthogonal to `a + a'`.
    pub fn adjacency_property(
        cat: &Catalogue,
        sys: &SphericalSystem,
        table: &ColorTable,
    ) -> std::result::Result<(), String> {
        let rs = cat.root_system();
        let ws = distinct_weights(table);
        if ws.len() <= 2 {
            return Ok(());
        }
        let free: Vec<usize> = RootSet::full(rs.rank()).difference(sys.sp()).iter().collect();
        for &a in &free {
            for &a2 in &free {
                if a2 == a || !rs.is_adjacent(a, a2) {
                    continue;
                }
                let hypothesis = free.iter().any(|&d| {
                    d != a
                        && d != a2
                        && rs.is_orthogonal(d, a)
                        && free.iter().any(|&d2| d2 != a && d2 != a2 && d2 != d && rs.is_adjacent(d, d2))
                });
                if hypothesis && !ws.iter().any(|w| w.pairing(a) == 0 && w.pairing(a2) == 0) {
                    return Err(format!("no weight is orthogonal to a{}+a{}", a + 1, a2 + 1));
                }
            }
        }
        Ok(())
    }

    /// When no simple root is a spherical root, the `omega_D` are linearly
    /// independent. Vacuous otherwise.
    pub fn saturated_independence(sys: &SphericalSystem, table: &ColorTable) -> std::result::Result<(), String> {
        if !sys.sigma_simple().is_empty() || table.colors.is_empty() {
            return Ok(());
        }
        let rows: Vec<&[i64]> = table.colors.iter().map(|c| c.omega.coeffs()).collect();
        let m = IntMatrix::from_rows(&rows).map_err(|e| e.to_string())?;
        let r = zlinalg::rank(&m).map_err(|e| e.to_string())?;
        if r == rows.len() {
            Ok(())
        } else {
            Err(format!("the omega_D have rank {r} < {}", rows.len()))
        }
    }
}

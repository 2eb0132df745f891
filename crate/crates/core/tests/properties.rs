//! Property tests for the integer linear algebra, the root data and the
//! spherical-system pipeline.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use sphsys::enumerate::{enumerate_systems, EnumOptions};
use sphsys::io::{self, SystemFile};
use sphsys::rootsys::{DominantWeight, RootSystem};
use sphsys::sphroots::Catalogue;
use sphsys::system::{self, AMatrix, SphericalSystem};
use sphsys::zlinalg::{self, IntMatrix};

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-bound..=bound, c), r))
}

fn is_identity(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m.row(i)[j] == i64::from(i == j)))
}

/// Every integer vector `sum c_i g_i` with `|c_i| <= bound`.
fn small_combinations(gens: &[Vec<i64>], dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; dim]];
    for g in gens {
        out = out
            .iter()
            .flat_map(|v| (-bound..=bound).map(move |c| v.iter().zip(g).map(|(x, y)| x + c * y).collect()))
            .collect();
    }
    out
}

const TYPES: [&str; 7] = ["A1", "A2", "B2", "G2", "A1xA1", "A3", "B3"];

fn corpus() -> &'static Vec<(Catalogue, SphericalSystem)> {
    static CORPUS: OnceLock<Vec<(Catalogue, SphericalSystem)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        TYPES
            .iter()
            .flat_map(|t| {
                let rs = RootSystem::parse(t).unwrap();
                let cat = Catalogue::new(&rs);
                enumerate_systems(&rs, EnumOptions::default()).unwrap().map(move |s| (cat.clone(), s))
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_form_recomposes(rows in matrix(5, 6)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let snf = zlinalg::smith_normal_form(&m).unwrap();
        prop_assert_eq!(snf.u.mul(&m).unwrap().mul(&snf.v).unwrap(), snf.s.clone());
        prop_assert!(is_identity(&snf.u.mul(&snf.u_inv).unwrap()));
        prop_assert!(is_identity(&snf.v.mul(&snf.v_inv).unwrap()));
        let d = snf.diagonal();
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                prop_assert!(i == j || snf.s.row(i)[j] == 0);
            }
        }
        let nonzero: Vec<i64> = d.iter().copied().filter(|&x| x != 0).collect();
        prop_assert!(nonzero.iter().all(|&x| x > 0));
        prop_assert!(nonzero.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert_eq!(nonzero.len(), zlinalg::rank(&m).unwrap());
    }

    #[test]
    fn lattice_membership_matches_search(
        gens in (1usize..=3).prop_flat_map(|dim| (Just(dim), prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 1..=3))),
        coeffs in prop::collection::vec(-2i64..=2, 3),
        noise in prop::collection::vec(-1i64..=1, 3),
    ) {
        let (dim, gens) = gens;
        let mut v = vec![0; dim];
        for (g, c) in gens.iter().zip(&coeffs) {
            for (x, y) in v.iter_mut().zip(g) {
                *x += c * y;
            }
        }
        prop_assert!(zlinalg::in_lattice(&v, &gens).unwrap());
        let shifted: Vec<i64> = v.iter().zip(&noise).map(|(x, n)| x + n).collect();
        if !zlinalg::in_lattice(&shifted, &gens).unwrap() {
            prop_assert!(!small_combinations(&gens, dim, 4).contains(&shifted));
        }
    }

    #[test]
    fn dual_dominant_is_an_involution(t in prop::sample::select(&["A1", "A3", "A4", "B3", "C3", "D4", "D5", "E6", "F4", "G2", "A2xB2"][..]), seed in prop::collection::vec(0i64..=3, 8)) {
        let rs = RootSystem::parse(t).unwrap();
        let lam = DominantWeight::new(seed[..rs.rank()].to_vec()).unwrap();
        let dual = rs.dual_dominant(&lam).unwrap();
        prop_assert_eq!(rs.dual_dominant(&dual).unwrap(), lam);
    }

    #[test]
    fn validity_ignores_sigma_order(pick in any::<prop::sample::Index>(), perm_seed in any::<prop::sample::Index>()) {
        let (cat, sys) = &corpus()[pick.index(corpus().len())];
        let n = sys.sigma().len();
        prop_assume!(n > 1);
        let shift = perm_seed.index(n - 1) + 1;
        let new_pos = |j: usize| (j + shift) % n;
        let mut sigma = sys.sigma().to_vec();
        sigma.rotate_right(shift);
        let amat: AMatrix = sys.amat().iter().map(|(&(a, j), &p)| ((a, new_pos(j)), p)).collect();
        let moved = SphericalSystem::new(sys.sp(), sigma, amat);
        prop_assert!(system::validate(cat, &moved).unwrap().is_valid());
        prop_assert_eq!(
            system::is_spherically_closed(cat, &moved).unwrap(),
            system::is_spherically_closed(cat, sys).unwrap()
        );
    }

    #[test]
    fn enumerated_systems_round_trip_through_json(pick in any::<prop::sample::Index>()) {
        let (cat, sys) = &corpus()[pick.index(corpus().len())];
        let text = serde_json::to_string(&SystemFile::from_system(cat.root_system(), sys)).unwrap();
        let (_, back) = io::parse_system(&text).unwrap();
        prop_assert_eq!(&back, sys);
    }
}

#[test]
fn enumeration_order_is_stable() {
    for t in TYPES {
        let rs = RootSystem::parse(t).unwrap();
        let first: Vec<_> = enumerate_systems(&rs, EnumOptions::default()).unwrap().collect();
        let second: Vec<_> = enumerate_systems(&rs, EnumOptions::default()).unwrap().collect();
        assert_eq!(first, second, "{t}");
        let closed: Vec<_> =
            enumerate_systems(&rs, EnumOptions { closed_only: true, ..Default::default() }).unwrap().collect();
        let cat = Catalogue::new(&rs);
        let filtered: Vec<_> =
            first.iter().filter(|s| system::is_spherically_closed(&cat, s).unwrap()).cloned().collect();
        assert_eq!(closed, filtered, "{t}");
        let mut by_size: BTreeMap<usize, usize> = BTreeMap::new();
        for s in &first {
            *by_size.entry(s.sigma().len()).or_default() += 1;
        }
        let capped = enumerate_systems(&rs, EnumOptions { max_sigma: Some(1), ..Default::default() }).unwrap().count();
        assert_eq!(capped, by_size.get(&0).unwrap_or(&0) + by_size.get(&1).unwrap_or(&0), "{t}");
    }
}

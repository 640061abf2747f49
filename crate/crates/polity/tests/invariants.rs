//! Module-level invariants beyond the acceptance criteria: the rest of
//! the verification catalog at its declared bounds, a brute-force check
//! of the isomorphism search, and property tests for the closure algebra
//! and the file formats.

use polity::combinatorics::{Base, BaseMap, Coalition, Complex};
use polity::io;
use polity::morphism::{are_pair_isomorphic, check_pair_map, Mode, PairMap};
use polity::oracle::{
    enumerate_functions, enumerate_sites, random_site, small_base, small_ground,
    verify_proposition, OracleBounds,
};
use polity::site::GroundMap;
use proptest::prelude::*;

const SEED: u64 = 97;

fn run(id: &str, bounds: &OracleBounds) {
    let report = verify_proposition(id, bounds).unwrap();
    assert!(
        report.passed(),
        "{id} failed after {} instances: {:?}",
        report.instances,
        report.first_counterexample
    );
}

#[test]
fn closure_and_maximal_element_laws() {
    run(
        "DOWN_CLOSURE",
        &OracleBounds {
            max_base: 6,
            max_ground: 0,
            trials: 1000,
            seed: SEED,
        },
    );
    run(
        "MAX_ELEMENTS",
        &OracleBounds {
            max_base: 4,
            max_ground: 0,
            trials: 0,
            seed: SEED,
        },
    );
}

#[test]
fn fiber_partition_exhaustive_and_random() {
    run(
        "FIBER_PARTITION",
        &OracleBounds {
            max_base: 3,
            max_ground: 3,
            trials: 500,
            seed: SEED,
        },
    );
}

#[test]
fn effective_site_preserves_nerve() {
    run(
        "EFFECTIVE_SITE",
        &OracleBounds {
            max_base: 5,
            max_ground: 12,
            trials: 1000,
            seed: SEED,
        },
    );
}

#[test]
fn sandwiched_canonical_sites() {
    run(
        "CANON_BETWEEN",
        &OracleBounds {
            max_base: 4,
            max_ground: 0,
            trials: 0,
            seed: SEED,
        },
    );
}

#[test]
fn composition_stays_in_class() {
    run(
        "COMPOSE_CLOSED",
        &OracleBounds {
            max_base: 3,
            max_ground: 4,
            trials: 500,
            seed: SEED,
        },
    );
}

#[test]
fn knit_undoes_canon() {
    run(
        "KNIT_CANON_ID",
        &OracleBounds {
            max_base: 4,
            max_ground: 0,
            trials: 0,
            seed: SEED,
        },
    );
}

#[test]
fn equivalence_witnesses_on_random_sites() {
    run(
        "EQUIV_WITNESS",
        &OracleBounds {
            max_base: 5,
            max_ground: 12,
            trials: 1000,
            seed: SEED,
        },
    );
}

#[test]
fn delegation_facts() {
    let bounds = OracleBounds {
        max_base: 4,
        max_ground: 3,
        trials: 0,
        seed: SEED,
    };
    run("FACT1A", &bounds);
    run("FACT1B", &bounds);
    run(
        "FOUNDATION",
        &OracleBounds {
            max_base: 3,
            max_ground: 3,
            trials: 0,
            seed: SEED,
        },
    );
}

/// The isomorphism search agrees with brute force over all bijections and
/// all ground maps on tiny universes.
#[test]
fn pair_isomorphism_matches_brute_force() {
    let base = small_base(2);
    for n_a in 0..=2usize {
        for n_b in 0..=2usize {
            let left = enumerate_sites(&base, &small_ground(n_a)).unwrap();
            let right = enumerate_sites(&base, &small_ground(n_b)).unwrap();
            for a in &left {
                for b in &right {
                    for mode in [Mode::B, Mode::S] {
                        let found = are_pair_isomorphic(mode, a, b).unwrap();
                        let brute = [vec![0usize, 1], vec![1, 0]].iter().any(|perm| {
                            let phi =
                                BaseMap::new(a.base().clone(), b.base().clone(), perm.clone())
                                    .unwrap();
                            let psi = phi.inverse().unwrap();
                            let forward = enumerate_functions(n_a, n_b).unwrap().any(|f| {
                                let m = PairMap::new(
                                    phi.clone(),
                                    GroundMap::new(a.ground().clone(), b.ground().clone(), f)
                                        .unwrap(),
                                );
                                check_pair_map(mode, &m, a, b).unwrap().holds
                            });
                            let backward = enumerate_functions(n_b, n_a).unwrap().any(|g| {
                                let m = PairMap::new(
                                    psi.clone(),
                                    GroundMap::new(b.ground().clone(), a.ground().clone(), g)
                                        .unwrap(),
                                );
                                check_pair_map(mode, &m, b, a).unwrap().holds
                            });
                            forward && backward
                        });
                        assert_eq!(
                            found.is_some(),
                            brute,
                            "isomorphism search disagreed on {a:?} vs {b:?}"
                        );
                        if let Some((phi, psi)) = found {
                            assert_eq!(psi.compose(&phi).unwrap(), BaseMap::identity(a.base()));
                        }
                    }
                }
            }
        }
    }
}

/// The worked polity example, pushed through the pieces the smaller unit
/// tests cannot reach: collapse maps, the effective restriction, the
/// projection's morphism class, and the isomorphism search.
mod gallopolis {
    use super::*;
    use polity::canonical::canonical_site;
    use polity::fixtures;
    use polity::functor::{knit_collapse, nerve_collapse};
    use polity::morphism::{check_g_map, right_inverse_bg};
    use polity::projection::{drop_dimension_map, project_site};
    use polity::site::PartingTable;
    use polity::PSite;

    #[test]
    fn effective_ground_keeps_sixteen_states() {
        let a = fixtures::gallopolis();
        assert_eq!(a.effective_site().ground().len(), 16);
    }

    #[test]
    fn collapse_maps_have_the_right_shapes() {
        let a = fixtures::gallopolis();
        let pi = knit_collapse(&a).unwrap();
        assert_eq!(pi.domain().len(), 27);
        assert_eq!(pi.codomain().len(), 9);
        let ca = canonical_site(&a.knit()).unwrap();
        assert!(check_g_map(Mode::B, &pi, &a, &ca).unwrap().holds);

        let pis = nerve_collapse(&a).unwrap();
        assert_eq!(pis.domain().len(), 16);
        assert_eq!(pis.codomain().len(), 9);
        let can = canonical_site(&a.nerve().into_complex()).unwrap();
        assert!(
            check_g_map(Mode::B, &pis, &a.effective_site(), &can)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn dimension_drop_is_an_sg_map_only() {
        // The coordinate projection lands on the direct image as an
        // SG-map; aspiration boxes are not unions of projection fibers,
        // so the BG reading fails.
        let a = fixtures::gallopolis();
        let p = drop_dimension_map(a.ground(), "S").unwrap();
        let b = project_site(&a, "S").unwrap();
        assert!(check_g_map(Mode::S, &p, &a, &b).unwrap().holds);
        assert!(!check_g_map(Mode::B, &p, &a, &b).unwrap().holds);
    }

    #[test]
    fn parting_collapse_of_a_simple_site_right_inverts() {
        // The left triangle site is simple, so its collapse is a
        // bijective BG-map and the right inverse is its inverse.
        let a = fixtures::triangle_left();
        assert!(a.is_simple());
        let pi = knit_collapse(&a).unwrap();
        let ca = canonical_site(&a.knit()).unwrap();
        let g = right_inverse_bg(&pi, &a, &ca).unwrap();
        assert_eq!(g, pi.inverse().unwrap());
        assert!(check_g_map(Mode::B, &g, &ca, &a).unwrap().holds);
    }

    #[test]
    fn relabeled_copy_is_found_by_the_isomorphism_search() {
        let a = fixtures::gallopolis();
        // Present the same polity under permuted party names: the old
        // RIGHT slot now carries the name of the old LEFT and so on.
        let renamed = Base::new(["RIGHT", "CONS", "SOCD", "LEFT", "LIBER"]).unwrap();
        let table = PartingTable::new(
            (0..a.ground().len())
                .map(|x| {
                    Coalition::from_indices(a.parting(x).members().map(|i| match i {
                        0 => 3, // LEFT keeps its role under the name at slot 3
                        1 => 2,
                        2 => 1,
                        3 => 4,
                        4 => 0,
                        _ => unreachable!(),
                    }))
                })
                .collect(),
        );
        let b = PSite::from_parting(renamed, a.ground().clone(), &table).unwrap();
        let (phi, psi) = are_pair_isomorphic(Mode::B, &a, &b).unwrap().unwrap();
        assert_eq!(phi.assignment(), &[3, 2, 1, 4, 0]);
        assert_eq!(psi.compose(&phi).unwrap(), BaseMap::identity(a.base()));
        // And a site with a different knit shape is rejected.
        let lopsided = polity::oracle::random_site(4, 5, 27).unwrap();
        let c = PSite::from_parting(
            a.base().clone(),
            a.ground().clone(),
            &lopsided.parting_table(),
        )
        .unwrap();
        assert!(are_pair_isomorphic(Mode::B, &a, &c).unwrap().is_none());
    }
}

fn complex_from_mask(n_agents: usize, mask: u64) -> Complex {
    let base = Base::new((1..=n_agents).map(|k| k.to_string())).unwrap();
    let subsets = 1u64 << n_agents;
    let coalitions = (0..subsets)
        .filter(|j| mask & (1u64 << j) != 0)
        .map(Coalition::from_bits);
    Complex::new(base, coalitions).unwrap()
}

proptest! {
    /// Closure is idempotent, monotone, and lands in simplicial complexes.
    #[test]
    fn closure_laws(n in 1usize..=6, mask in any::<u64>(), extra in any::<u64>()) {
        let relevant = if n == 6 { u64::MAX } else { (1u64 << (1 << n)) - 1 };
        let k = complex_from_mask(n, mask & relevant);
        let l = complex_from_mask(n, (mask | extra) & relevant);
        let closed = k.downward_closure();
        prop_assert!(closed.complex().is_simplicial());
        prop_assert_eq!(closed.complex().downward_closure(), closed.clone());
        prop_assert!(closed.complex().is_subset_of(l.downward_closure().complex()));
    }

    /// Sites survive the round trip through their file format.
    #[test]
    fn site_file_round_trip(seed in any::<u64>(), n_i in 1usize..=5, n_a in 0usize..=10) {
        let site = random_site(seed, n_i, n_a).unwrap();
        let text = io::render_site(&site);
        let reloaded = io::parse_site(&text).unwrap();
        prop_assert_eq!(&reloaded, &site);
        prop_assert_eq!(io::render_site(&reloaded), text);
    }

    /// Formations survive the round trip too.
    #[test]
    fn formation_file_round_trip(n in 1usize..=4, mask in any::<u64>()) {
        let relevant = (1u64 << (1 << n)) - 1;
        let k = complex_from_mask(n, mask & relevant);
        let text = io::render_formation(&k);
        let reloaded = io::parse_formation(&text).unwrap();
        prop_assert_eq!(&reloaded, &k);
        prop_assert_eq!(io::render_formation(&reloaded), text);
    }
}

//! Acceptance suite: every criterion as one test, printing a pass line.
//!
//! Exact values come from the bundled example polities; the structural
//! criteria run the verification catalog at its declared bounds with a
//! fixed seed. Run with `cargo test --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use polity::combinatorics::{Coalition, Complex};
use polity::delegation::{
    check_withdrawal_equivalences, friendly_foundation_witness, is_friendly_delegation,
    is_simplicial_delegation, Delegation,
};
use polity::fixtures;
use polity::morphism::{are_g_isomorphic, c_image, Mode};
use polity::oracle::{verify_proposition, OracleBounds};
use polity::projection::project_site;
use polity::voting::winning_viable;
use polity::Base;

const SEED: u64 = 20260810;

fn coalition(base: &Base, labels: &[&str]) -> Coalition {
    base.coalition(labels.iter().copied()).unwrap()
}

fn assert_catalog_passes(id: &str, bounds: &OracleBounds) -> u64 {
    let report = verify_proposition(id, bounds).unwrap();
    assert_eq!(
        report.failures, 0,
        "{id} found a counterexample: {:?}",
        report.first_counterexample
    );
    report.instances
}

#[test]
fn criterion_01_gallopolis_nerve() {
    let a = fixtures::gallopolis();
    let base = a.base().clone();
    let expected = Complex::new(
        base.clone(),
        [
            coalition(&base, &["LEFT"]),
            coalition(&base, &["SOCD"]),
            coalition(&base, &["CONS"]),
            coalition(&base, &["LIBER"]),
            coalition(&base, &["RIGHT"]),
            coalition(&base, &["LEFT", "SOCD"]),
            coalition(&base, &["SOCD", "CONS"]),
            coalition(&base, &["CONS", "LIBER"]),
            coalition(&base, &["CONS", "RIGHT"]),
        ],
    )
    .unwrap();
    let nerve = a.nerve();
    assert_eq!(nerve.len(), 9);
    assert_eq!(*nerve.complex(), expected);
    println!("criterion 01 PASS: nerve is the 9-simplex path-with-fork, exactly");
}

#[test]
fn criterion_02_gallopolis_knit() {
    let a = fixtures::gallopolis();
    let knit = a.knit();
    assert_eq!(knit.len(), 9);
    assert!(knit.contains(Coalition::EMPTY));
    let nerve = a.nerve();
    let missing: Vec<Coalition> = nerve.coalitions().filter(|c| !knit.contains(*c)).collect();
    assert_eq!(missing, vec![coalition(a.base(), &["RIGHT"])]);
    println!("criterion 02 PASS: knit has 9 members with the empty coalition; only RIGHT's singleton is missing");
}

#[test]
fn criterion_03_gallopolis_parting_values() {
    let a = fixtures::gallopolis();
    let base = a.base().clone();
    assert_eq!(
        a.parting_of("2,l,gamma").unwrap(),
        coalition(&base, &["LEFT", "SOCD"])
    );
    assert_eq!(
        a.parting_of("2,n,beta").unwrap(),
        coalition(&base, &["SOCD", "CONS"])
    );
    assert_eq!(
        a.parting_of("1,c,beta").unwrap(),
        coalition(&base, &["CONS"])
    );
    assert_eq!(a.parting_of("1,c,gamma").unwrap(), Coalition::EMPTY);
    println!("criterion 03 PASS: spot parting values match");
}

#[test]
fn criterion_04_scenario_projections() {
    let a = fixtures::gallopolis();
    let base = a.base().clone();

    // Dropping the societal axis opens the right-wing triangle, meeting
    // exactly at (1, alpha).
    let s3 = project_site(&a, "S").unwrap();
    let triangle = coalition(&base, &["CONS", "LIBER", "RIGHT"]);
    assert!(s3.nerve().contains(triangle));
    assert_eq!(
        s3.common_states(triangle).labels(s3.ground()),
        vec!["1,alpha"]
    );

    // Dropping the economic axis makes the broad coalition viable at
    // (l, gamma).
    let s2 = project_site(&a, "E").unwrap();
    let broad = coalition(&base, &["LEFT", "SOCD", "LIBER"]);
    assert!(s2.nerve().contains(broad));
    assert_eq!(s2.common_states(broad).labels(s2.ground()), vec!["l,gamma"]);

    // Dropping the openness axis reproduces the original configuration.
    let s1 = project_site(&a, "O").unwrap();
    assert_eq!(s1.nerve().complex(), a.nerve().complex());

    // Seats: the triangle wins in scenario 3; nothing wins in scenario 1.
    let w = fixtures::gallopolis_weights();
    assert!(winning_viable(&s3, &w).unwrap().contains(&triangle));
    assert!(winning_viable(&s1, &w).unwrap().is_empty());
    println!("criterion 04 PASS: the three scenario projections match the figures");
}

#[test]
fn criterion_05_triangle_example() {
    let left = fixtures::triangle_left();
    let right = fixtures::triangle_right();
    let base = left.base().clone();
    let boundary = Complex::new(
        base.clone(),
        [
            coalition(&base, &["1"]),
            coalition(&base, &["2"]),
            coalition(&base, &["3"]),
            coalition(&base, &["1", "2"]),
            coalition(&base, &["1", "3"]),
            coalition(&base, &["2", "3"]),
        ],
    )
    .unwrap();
    assert!(left.is_perfect());
    assert_eq!(left.knit(), boundary);
    assert_eq!(left.nerve().complex(), &boundary);

    let pairs = Complex::new(
        base.clone(),
        [
            coalition(&base, &["1", "2"]),
            coalition(&base, &["1", "3"]),
            coalition(&base, &["2", "3"]),
        ],
    )
    .unwrap();
    assert_eq!(right.knit(), pairs);
    assert_eq!(right.nerve().complex(), &boundary);
    assert!(!right.is_perfect());

    assert!(are_g_isomorphic(Mode::S, &left, &right).unwrap());
    assert!(!are_g_isomorphic(Mode::B, &left, &right).unwrap());
    println!("criterion 05 PASS: one nerve, two knits, S-isomorphic but not B-isomorphic");
}

#[test]
fn criterion_06_profile_parting_inversion() {
    let bounds = OracleBounds {
        max_base: 2,
        max_ground: 2,
        trials: 512,
        seed: SEED,
    };
    let instances = assert_catalog_passes("PI_GAMMA", &bounds);
    // All 16 two-by-two profiles plus the smaller degenerate ones, plus
    // the 512 random cases.
    assert!(instances >= 16 + 512);
    println!("criterion 06 PASS: profile/parting inversion on {instances} instances");
}

#[test]
fn criterion_07_nerve_generated_by_knit() {
    let bounds = OracleBounds {
        max_base: 5,
        max_ground: 12,
        trials: 1000,
        seed: SEED,
    };
    let instances = assert_catalog_passes("NERVE_GEN", &bounds);
    assert_eq!(instances, 1000);
    println!("criterion 07 PASS: nerve equals the closed knit on 1000 seeded sites");
}

#[test]
fn criterion_08_witness_existence() {
    let bounds = OracleBounds {
        max_base: 2,
        max_ground: 3,
        trials: 0,
        seed: SEED,
    };
    let bg = assert_catalog_passes("BG_EXISTS", &bounds);
    let sg = assert_catalog_passes("SG_EXISTS", &bounds);
    let bs = assert_catalog_passes("BS_EXISTS", &bounds);
    println!(
        "criterion 08 PASS: witness construction matches exhaustive search ({} + {} + {} instances)",
        bg, sg, bs
    );
}

#[test]
fn criterion_09_characterization_agreement() {
    let bounds = OracleBounds {
        max_base: 3,
        max_ground: 3,
        trials: 500,
        seed: SEED,
    };
    let a = assert_catalog_passes("BG_CHAR", &bounds);
    let b = assert_catalog_passes("PAIR_CHAR", &bounds);
    let c = assert_catalog_passes("BMAP1", &bounds);
    let d = assert_catalog_passes("SMAP1", &bounds);
    let e = assert_catalog_passes("IMAGE2", &bounds);
    println!(
        "criterion 09 PASS: all characterizations agree ({} instances)",
        a + b + c + d + e
    );
}

#[test]
fn criterion_10_canonical_round_trips() {
    let bounds = OracleBounds {
        max_base: 4,
        max_ground: 3,
        trials: 0,
        seed: SEED,
    };
    let knit_side = assert_catalog_passes("CANON_KNIT", &bounds);
    // Exhaustive over the 2^16 complexes on four agents, plus the
    // smaller bases, each also exercising the isotopy witness.
    assert!(knit_side >= 2 * (1 << 16));
    let nerve_side = assert_catalog_passes("CANON_NERVE", &bounds);
    println!(
        "criterion 10 PASS: canonical knit and nerve round trips ({} + {} instances)",
        knit_side, nerve_side
    );
}

#[test]
fn criterion_11_functor_and_naturality_suites() {
    let functor = assert_catalog_passes(
        "FUNCTOR_LAWS",
        &OracleBounds {
            max_base: 3,
            max_ground: 4,
            trials: 500,
            seed: SEED,
        },
    );
    let naturality = assert_catalog_passes(
        "NATURALITY",
        &OracleBounds {
            max_base: 3,
            max_ground: 4,
            trials: 500,
            seed: SEED,
        },
    );
    let category = assert_catalog_passes(
        "CATEGORY_LAWS",
        &OracleBounds {
            max_base: 3,
            max_ground: 4,
            trials: 200,
            seed: SEED,
        },
    );
    assert_eq!(category, 200);
    println!(
        "criterion 11 PASS: functor laws, collapse squares, category laws ({} + {} + {} instances)",
        functor, naturality, category
    );
}

#[test]
fn criterion_12_delegation() {
    // The triangle counterexample: simplicial yet not friendly, image
    // exactly the part avoiding the delegator.
    let i = Base::new(["1", "2", "3"]).unwrap();
    let e = Complex::from_labels(
        i.clone(),
        [
            vec!["1", "2"],
            vec!["1", "3"],
            vec!["2", "3"],
            vec!["1"],
            vec!["2"],
            vec!["3"],
        ],
    )
    .unwrap()
    .downward_closure();
    let d = Delegation::new(i.clone(), "1", "2").unwrap();
    assert!(is_simplicial_delegation(&e, &d).unwrap().holds);
    assert!(!is_friendly_delegation(&e, &d).unwrap().holds);
    let image = c_image(&d.function(), e.complex()).unwrap();
    let expected = Complex::from_labels(i.clone(), [vec!["2"], vec!["3"], vec!["2", "3"]]).unwrap();
    assert_eq!(image, expected);

    // The friendly four-party example, with its canonical foundation.
    let structure = fixtures::delegation_structure();
    let d42 = Delegation::new(structure.base().clone(), "4", "2").unwrap();
    assert!(is_friendly_delegation(&structure, &d42).unwrap().holds);
    let witness = friendly_foundation_witness(&structure, &d42)
        .unwrap()
        .expect("friendly delegations are founded");
    assert_eq!(witness, fixtures::delegation_site());
    assert_eq!(witness.nerve(), structure);
    assert!(witness.aspirations(3).is_subset_of(witness.aspirations(1)));
    assert!(check_withdrawal_equivalences(&witness, &d42).unwrap().holds);

    // Exhaustive agreement of the characterizations.
    let char_instances = assert_catalog_passes(
        "DELEG_CHAR",
        &OracleBounds {
            max_base: 4,
            max_ground: 3,
            trials: 0,
            seed: SEED,
        },
    );
    let withdrawal_instances = assert_catalog_passes(
        "SCDELTA",
        &OracleBounds {
            max_base: 3,
            max_ground: 3,
            trials: 0,
            seed: SEED,
        },
    );
    println!(
        "criterion 12 PASS: delegation examples and exhaustive characterizations ({} + {} instances)",
        char_instances, withdrawal_instances
    );
}

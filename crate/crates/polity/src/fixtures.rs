//! Bundled example data: the Gallopolis polity, the two-sites-one-nerve
//! triangle, and the four-party delegation example.

use std::path::{Path, PathBuf};

use crate::combinatorics::{Base, Complex, SimplicialComplex};
use crate::error::Error;
use crate::io;
use crate::site::{Dimension, Ground, PSite, PartingTable};
use crate::voting::WeightProfile;
use crate::Result;

/// Five parties over a three-dimensional political space.
pub fn gallopolis() -> PSite {
    let base = Base::new(["LEFT", "SOCD", "CONS", "LIBER", "RIGHT"]).unwrap();
    let ground = Ground::product(vec![
        Dimension::new("E", ["1", "2", "3"]).unwrap(),
        Dimension::new("S", ["l", "n", "c"]).unwrap(),
        Dimension::new("O", ["alpha", "beta", "gamma"]).unwrap(),
    ])
    .unwrap();
    let left = ground
        .box_set(&[
            ("E", vec!["2", "3"]),
            ("S", vec!["l"]),
            ("O", vec!["gamma"]),
        ])
        .unwrap();
    let socd = ground
        .box_set(&[
            ("E", vec!["2"]),
            ("S", vec!["l", "n"]),
            ("O", vec!["beta", "gamma"]),
        ])
        .unwrap();
    let cons = ground
        .box_set(&[
            ("E", vec!["1", "2"]),
            ("S", vec!["n", "c"]),
            ("O", vec!["alpha", "beta"]),
        ])
        .unwrap();
    let liber = ground
        .box_set(&[
            ("E", vec!["1"]),
            ("S", vec!["l"]),
            ("O", vec!["alpha", "beta", "gamma"]),
        ])
        .unwrap()
        .union(
            &ground
                .box_set(&[
                    ("E", vec!["1"]),
                    ("S", vec!["n"]),
                    ("O", vec!["beta", "gamma"]),
                ])
                .unwrap(),
        );
    let right = ground
        .box_set(&[
            ("E", vec!["1", "2"]),
            ("S", vec!["c"]),
            ("O", vec!["alpha"]),
        ])
        .unwrap();
    PSite::new(base, ground, vec![left, socd, cons, liber, right]).unwrap()
}

/// Seat distribution after the deadlock election: the outgoing CONS/LIBER
/// coalition falls short of the quota.
pub fn gallopolis_weights() -> WeightProfile {
    WeightProfile::new(
        [
            ("LEFT", 18u64),
            ("SOCD", 16),
            ("CONS", 22),
            ("LIBER", 17),
            ("RIGHT", 27),
        ],
        51,
    )
    .unwrap()
}

fn triangle_from_partings(partings: &[&[usize]]) -> PSite {
    let base = Base::new(["1", "2", "3"]).unwrap();
    let ground = Ground::flat(["u1", "u2", "u3", "u4", "u5", "u6"]).unwrap();
    let table = PartingTable::new(
        partings
            .iter()
            .map(|members| crate::combinatorics::Coalition::from_indices(members.iter().copied()))
            .collect(),
    );
    PSite::from_parting(base, ground, &table).unwrap()
}

/// Six states realizing every vertex and edge of the triangle exactly
/// once: knit = nerve, a perfect and simple site.
pub fn triangle_left() -> PSite {
    triangle_from_partings(&[&[1, 2], &[2], &[1], &[0, 2], &[0, 1], &[0]])
}

/// Six states realizing each edge of the triangle twice: same nerve as
/// the left site, but the knit keeps only the edges.
pub fn triangle_right() -> PSite {
    triangle_from_partings(&[&[1, 2], &[0, 2], &[0, 1], &[1, 2], &[0, 2], &[0, 1]])
}

/// The four-party structure generated by the edges 12, 23, 13, 24.
pub fn delegation_structure() -> SimplicialComplex {
    let base = Base::new(["1", "2", "3", "4"]).unwrap();
    Complex::from_labels(
        base,
        [
            vec!["1", "2"],
            vec!["2", "3"],
            vec!["1", "3"],
            vec!["2", "4"],
        ],
    )
    .unwrap()
    .downward_closure()
}

/// The canonical site over the maximal coalitions of the delegation
/// structure; the foundation on which delegating 4 to 2 is a withdrawal.
pub fn delegation_site() -> PSite {
    crate::canonical::canonical_site(&delegation_structure().max_elements()).unwrap()
}

/// Writes the named fixture set into `dir` and returns the paths.
pub fn write_demo(name: &str, dir: &Path) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let mut emit = |file: &str, contents: String| -> Result<()> {
        let path = dir.join(file);
        std::fs::write(&path, contents)?;
        written.push(path);
        Ok(())
    };
    match name {
        "gallopolis" => {
            emit("gallopolis.site.json", io::render_site(&gallopolis()))?;
            emit(
                "gallopolis.weights.json",
                io::render_weights(&gallopolis_weights()),
            )?;
        }
        "triangle" => {
            emit("triangle_left.site.json", io::render_site(&triangle_left()))?;
            emit(
                "triangle_right.site.json",
                io::render_site(&triangle_right()),
            )?;
        }
        "delegation" => {
            emit(
                "delegation.formation.json",
                io::render_formation(delegation_structure().complex()),
            )?;
            emit("delegation.site.json", io::render_site(&delegation_site()))?;
        }
        other => return Err(Error::UnknownDemo(other.to_string())),
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Coalition;

    #[test]
    fn gallopolis_has_the_documented_shape() {
        let a = gallopolis();
        assert_eq!(a.base().len(), 5);
        assert_eq!(a.ground().len(), 27);
        // Aspiration box sizes: 2, 4, 8, 5, 2.
        let sizes: Vec<usize> = (0..5).map(|i| a.aspirations(i).len()).collect();
        assert_eq!(sizes, vec![2, 4, 8, 5, 2]);
        // RIGHT sits inside CONS.
        assert!(a.aspirations(4).is_subset_of(a.aspirations(2)));
    }

    #[test]
    fn gallopolis_spot_values() {
        let a = gallopolis();
        let base = a.base().clone();
        // CONS and RIGHT agree on exactly the two strict states.
        let cr = base.coalition(["CONS", "RIGHT"]).unwrap();
        assert_eq!(
            a.common_states(cr).labels(a.ground()),
            vec!["1,c,alpha", "2,c,alpha"]
        );
        // No state is desired by RIGHT alone.
        let right = base.coalition(["RIGHT"]).unwrap();
        assert!(a.exact_fiber(right).is_empty());
        // The empty coalition pulls in the whole ground.
        assert_eq!(a.common_states(Coalition::EMPTY), a.ground().full_set());
        // The knit misses RIGHT's singleton, but RIGHT still reaches the
        // carrier through the CONS-RIGHT pair. The knit is no simplicial
        // complex (the empty coalition is a member), unlike the nerve.
        let knit = a.knit();
        assert!(!knit.contains(right));
        assert_eq!(knit.carrier(), base.full_coalition());
        assert!(!knit.is_simplicial());
        assert!(a.nerve().complex().is_simplicial());
    }

    #[test]
    fn right_can_withdraw_behind_cons() {
        let a = gallopolis();
        let d = crate::delegation::Delegation::new(a.base().clone(), "RIGHT", "CONS").unwrap();
        assert!(
            crate::delegation::check_withdrawal_equivalences(&a, &d)
                .unwrap()
                .holds
        );
        // Not the other way around.
        let reversed =
            crate::delegation::Delegation::new(a.base().clone(), "CONS", "RIGHT").unwrap();
        assert!(
            !crate::delegation::check_withdrawal_equivalences(&a, &reversed)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn triangle_sites_share_the_boundary_nerve() {
        let left = triangle_left();
        let right = triangle_right();
        assert_eq!(left.nerve(), right.nerve());
        assert_eq!(left.nerve().len(), 6);
        assert!(left.is_perfect());
        assert!(!right.is_perfect());
        assert_eq!(right.knit().len(), 3);
        assert!(right.knit().coalitions().all(|c| c.len() == 2));
    }

    #[test]
    fn delegation_site_matches_the_inclusion() {
        let a = delegation_site();
        let g4 = a.aspirations(3);
        let g2 = a.aspirations(1);
        assert!(g4.is_subset_of(g2));
        assert_eq!(a.nerve(), delegation_structure());
        assert_eq!(
            a.knit().max_elements().coalitions().collect::<Vec<_>>(),
            vec![
                Coalition::from_indices([0, 1]),
                Coalition::from_indices([0, 2]),
                Coalition::from_indices([1, 2]),
                Coalition::from_indices([1, 3]),
            ]
        );
    }
}

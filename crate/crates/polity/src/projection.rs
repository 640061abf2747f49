//! Dropping one dimension of a product ground.
//!
//! Disregarding an axis is the ground shift induced by the coordinate
//! projection; the projected site is the direct image, so the projection
//! is an SG-map onto it by construction.

use crate::error::Error;
use crate::morphism::direct_g_image;
use crate::site::{Ground, GroundMap, PSite};
use crate::Result;

/// The coordinate-erasing map from a product ground onto the product of
/// the remaining dimensions. At least two dimensions must remain.
pub fn drop_dimension_map(ground: &Ground, dim: &str) -> Result<GroundMap> {
    let dims = ground
        .dimensions()
        .ok_or_else(|| Error::Precondition("projection requires a product ground".into()))?;
    let k = dims
        .iter()
        .position(|d| d.name() == dim)
        .ok_or_else(|| Error::UnknownDimension(dim.to_string()))?;
    if dims.len() < 3 {
        return Err(Error::Precondition(
            "projection must leave at least two dimensions".into(),
        ));
    }
    let remaining: Vec<_> = dims
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, d)| d.clone())
        .collect();
    let codomain = Ground::product(remaining)?;
    let assignment = (0..ground.len())
        .map(|x| {
            let digits = ground.digits_of(x).expect("product ground");
            let kept: Vec<usize> = digits
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &d)| d)
                .collect();
            // Recompose the mixed-radix index over the remaining dims.
            codomain
                .dimensions()
                .expect("codomain is a product")
                .iter()
                .zip(&kept)
                .fold(0usize, |acc, (d, &v)| acc * d.values().len() + v)
        })
        .collect();
    GroundMap::new(ground.clone(), codomain, assignment)
}

/// The site after disregarding one dimension: the direct image under the
/// coordinate projection.
pub fn project_site(a: &PSite, dim: &str) -> Result<PSite> {
    let p = drop_dimension_map(a.ground(), dim)?;
    direct_g_image(&p, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Base;
    use crate::morphism::{check_g_map, Mode};
    use crate::site::Dimension;

    fn product_site() -> PSite {
        let ground = Ground::product(vec![
            Dimension::new("E", ["1", "2"]).unwrap(),
            Dimension::new("S", ["l", "c"]).unwrap(),
            Dimension::new("O", ["a", "b"]).unwrap(),
        ])
        .unwrap();
        let base = Base::new(["p", "q"]).unwrap();
        let p_set = ground
            .box_set(&[("E", vec!["1"]), ("S", vec!["l"])])
            .unwrap();
        let q_set = ground
            .box_set(&[("S", vec!["l"]), ("O", vec!["b"])])
            .unwrap();
        PSite::new(base, ground, vec![p_set, q_set]).unwrap()
    }

    #[test]
    fn projection_indexing_is_consistent() {
        let a = product_site();
        let p = drop_dimension_map(a.ground(), "S").unwrap();
        for x in 0..a.ground().len() {
            let full = a.ground().state(x);
            let projected = p.codomain().state(p.apply(x));
            let mut parts: Vec<&str> = full.split(',').collect();
            parts.remove(1);
            assert_eq!(projected, parts.join(","));
        }
    }

    #[test]
    fn projection_is_a_direct_image() {
        let a = product_site();
        let p = drop_dimension_map(a.ground(), "O").unwrap();
        let b = project_site(&a, "O").unwrap();
        assert!(check_g_map(Mode::S, &p, &a, &b).unwrap().holds);
        assert_eq!(b.aspirations(0).labels(b.ground()), vec!["1,l"]);
        assert_eq!(b.aspirations(1).labels(b.ground()), vec!["1,l", "2,l"]);
    }

    #[test]
    fn projecting_boxes_equals_projecting_pointwise() {
        // Dropping a coordinate from each box and unioning matches the
        // pointwise direct image.
        let a = product_site();
        let b = project_site(&a, "E").unwrap();
        let g = b.ground();
        let p_box = g.box_set(&[("S", vec!["l"])]).unwrap();
        let q_box = g.box_set(&[("S", vec!["l"]), ("O", vec!["b"])]).unwrap();
        assert_eq!(*b.aspirations(0), p_box);
        assert_eq!(*b.aspirations(1), q_box);
    }

    #[test]
    fn projection_preconditions() {
        let a = product_site();
        assert!(project_site(&a, "Z").is_err());
        let flat = PSite::from_labels(
            Base::new(["p"]).unwrap(),
            Ground::flat(["x"]).unwrap(),
            &[&["x"]],
        )
        .unwrap();
        assert!(project_site(&flat, "E").is_err());
        // Two dimensions only: dropping one would leave a single axis.
        let thin = Ground::product(vec![
            Dimension::new("E", ["1"]).unwrap(),
            Dimension::new("S", ["l"]).unwrap(),
        ])
        .unwrap();
        let thin_site = PSite::new(
            Base::new(["p"]).unwrap(),
            thin.clone(),
            vec![thin.empty_set()],
        )
        .unwrap();
        assert!(project_site(&thin_site, "E").is_err());
    }
}

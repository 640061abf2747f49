//! Functorial actions between the site level and the formation level.
//!
//! A B-class pair map descends to a map of knits, an S-class pair map to a
//! map of nerves, and a formation map lifts to a pair map between the
//! canonical sites. The corestricted parting maps tie a site to the
//! canonical site of its knit (resp. of its nerve, on the effective part);
//! the checks here verify the resulting squares on concrete instances.
//!
//! The square for the knit collapse commutes strictly. For the nerve
//! collapse only the inclusion form of the square holds on genuine S-maps
//! (the strict form already fails when a single state gains an agent), so
//! mode `S` checks pointwise containment of the two composites, upgrading
//! to equality when the morphism is in fact a B-map.

use crate::canonical::{canonical_site, coalition_ground, decode_coalition, encode_coalition};
use crate::combinatorics::{BaseMap, Coalition, Complex};
use crate::error::Error;
use crate::morphism::{
    check_pair_map, compose_pair, restrict_to_effective, Mode, PairMap, Verdict, Witness,
};
use crate::site::{GroundMap, PSite};
use crate::Result;

/// A base map together with the formations it connects, produced by the
/// knit and nerve actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormationMorphism {
    pub map: BaseMap,
    pub domain: Complex,
    pub codomain: Complex,
}

/// Descends a B-class pair map to the map of knit formations it induces.
pub fn knit_on_morphism(m: &PairMap, a: &PSite, b: &PSite) -> Result<FormationMorphism> {
    let verdict = check_pair_map(Mode::B, m, a, b)?;
    if !verdict.holds {
        return Err(Error::Precondition(
            "the knit action is only defined on B-maps".into(),
        ));
    }
    Ok(FormationMorphism {
        map: m.base_map().clone(),
        domain: a.knit(),
        codomain: b.knit(),
    })
}

/// Descends an S-class pair map to the simplicial map of nerves it
/// induces.
pub fn nerve_on_morphism(m: &PairMap, a: &PSite, b: &PSite) -> Result<FormationMorphism> {
    let verdict = check_pair_map(Mode::S, m, a, b)?;
    if !verdict.holds {
        return Err(Error::Precondition(
            "the nerve action is only defined on S-maps".into(),
        ));
    }
    Ok(FormationMorphism {
        map: m.base_map().clone(),
        domain: a.nerve().into_complex(),
        codomain: b.nerve().into_complex(),
    })
}

/// Lifts a formation map `phi: x -> y` (image inclusion required) to the
/// pair map between the canonical sites whose ground component carries
/// each coalition-state to its image.
pub fn canon_on_morphism(
    phi: &BaseMap,
    x: &Complex,
    y: &Complex,
) -> Result<(PairMap, PSite, PSite)> {
    let verdict = crate::morphism::check_c_map(Mode::S, phi, x, y)?;
    if !verdict.holds {
        return Err(Error::Precondition(
            "the canon action needs the image inside the codomain complex".into(),
        ));
    }
    let ca_x = canonical_site(x)?;
    let ca_y = canonical_site(y)?;
    let y_index: Vec<Coalition> = y.coalitions().collect();
    let assignment = x
        .coalitions()
        .map(|s| {
            let image = phi.image_unchecked(s);
            y_index
                .iter()
                .position(|&t| t == image)
                .expect("image inclusion was just checked")
        })
        .collect();
    let ground = GroundMap::new(ca_x.ground().clone(), ca_y.ground().clone(), assignment)?;
    Ok((PairMap::new(phi.clone(), ground), ca_x, ca_y))
}

/// The corestricted parting map of `a`: each state goes to its parting
/// coalition, read as a state of the canonical site of the knit. A BG-map
/// `a -> ca(knit a)`.
pub fn knit_collapse(a: &PSite) -> Result<GroundMap> {
    let knit = a.knit();
    let ground = coalition_ground(&knit)?;
    let assignment = (0..a.ground().len())
        .map(|x| {
            let label = encode_coalition(a.base(), a.parting(x));
            ground
                .require(&label)
                .expect("parting values are knit states")
        })
        .collect();
    GroundMap::new(a.ground().clone(), ground, assignment)
}

/// The parting map on the effective part of `a`, landing in the canonical
/// site of the nerve. A BG-map `effective(a) -> ca(nerve a)`.
pub fn nerve_collapse(a: &PSite) -> Result<GroundMap> {
    let effective = a.effective_site();
    let nerve = a.nerve().into_complex();
    let ground = coalition_ground(&nerve)?;
    let assignment = (0..effective.ground().len())
        .map(|x| {
            let label = encode_coalition(a.base(), effective.parting(x));
            ground
                .require(&label)
                .expect("nonempty parting values are nerve simplexes")
        })
        .collect();
    GroundMap::new(effective.ground().clone(), ground, assignment)
}

fn pair_maps_equal_verdict(lhs: &PairMap, rhs: &PairMap) -> Verdict {
    if lhs.base_map() != rhs.base_map() {
        let domain = lhs.base_map().domain();
        let bad = (0..domain.len()).find(|&i| lhs.base_map().apply(i) != rhs.base_map().apply(i));
        return Verdict::fail(
            Witness::Agent(bad.map_or_else(String::new, |i| domain.agent(i).to_string())),
            "base components of the two composites disagree",
        );
    }
    let domain = lhs.ground_map().domain();
    if let Some(x) =
        (0..domain.len()).find(|&x| lhs.ground_map().apply(x) != rhs.ground_map().apply(x))
    {
        return Verdict::fail(
            Witness::State(domain.state(x).to_string()),
            "ground components of the two composites disagree",
        );
    }
    Verdict::ok()
}

/// Verifies the collapse square at one morphism.
///
/// Mode `B`: lifting the knit action of `m` and composing with the knit
/// collapses gives literally equal pair maps. Mode `S`: on the effective
/// part, the composite through the nerve action is pointwise contained in
/// the composite through `m`, with equality whenever `m` is also a B-map.
pub fn check_naturality(mode: Mode, m: &PairMap, a: &PSite, b: &PSite) -> Result<Verdict> {
    let verdict = check_pair_map(mode, m, a, b)?;
    if !verdict.holds {
        return Err(Error::Precondition(
            "naturality is checked at valid morphisms only".into(),
        ));
    }
    match mode {
        Mode::B => {
            let (lifted, _ca_a, _ca_b) = canon_on_morphism(m.base_map(), &a.knit(), &b.knit())?;
            let into_a = PairMap::new(BaseMap::identity(a.base()), knit_collapse(a)?);
            let into_b = PairMap::new(BaseMap::identity(b.base()), knit_collapse(b)?);
            let lhs = compose_pair(&lifted, &into_a)?;
            let rhs = compose_pair(&into_b, m)?;
            Ok(pair_maps_equal_verdict(&lhs, &rhs))
        }
        Mode::S => {
            let (m_eff, a_eff, _b_eff) = restrict_to_effective(m, a, b)?;
            let (lifted, _ca_a, ca_b) = canon_on_morphism(
                m.base_map(),
                &a.nerve().into_complex(),
                &b.nerve().into_complex(),
            )?;
            let into_a = PairMap::new(BaseMap::identity(a.base()), nerve_collapse(a)?);
            let into_b = PairMap::new(BaseMap::identity(b.base()), nerve_collapse(b)?);
            let lhs = compose_pair(&lifted, &into_a)?;
            let rhs = compose_pair(&into_b, &m_eff)?;
            if lhs.base_map() != rhs.base_map() {
                return Ok(pair_maps_equal_verdict(&lhs, &rhs));
            }
            // Both composites must at least be S-maps into ca(nerve b).
            for composite in [&lhs, &rhs] {
                let ok = check_pair_map(Mode::S, composite, &a_eff, &ca_b)?;
                if !ok.holds {
                    return Ok(ok);
                }
            }
            let decode_b: Vec<Coalition> = ca_b
                .ground()
                .states()
                .iter()
                .map(|s| {
                    decode_coalition(b.base(), s)
                        .expect("canonical grounds decode over their own base")
                })
                .collect();
            let strict = check_pair_map(Mode::B, m, a, b)?.holds;
            for x in 0..a_eff.ground().len() {
                let through_nerve = decode_b[lhs.ground_map().apply(x)];
                let through_map = decode_b[rhs.ground_map().apply(x)];
                let bad = if strict {
                    through_nerve != through_map
                } else {
                    !through_nerve.is_subset_of(through_map)
                };
                if bad {
                    return Ok(Verdict::fail(
                        Witness::State(a_eff.ground().state(x).to_string()),
                        "collapse square does not close over this state",
                    ));
                }
            }
            Ok(Verdict::ok())
        }
    }
}

/// Identity absorption and associativity of pair-map composition, checked
/// on one composable triple `m3 . m2 . m1`.
pub fn check_category_laws(m1: &PairMap, m2: &PairMap, m3: &PairMap) -> Result<Verdict> {
    let id_dom = PairMap::new(
        BaseMap::identity(m1.base_map().domain()),
        GroundMap::identity(m1.ground_map().domain()),
    );
    let id_cod = PairMap::new(
        BaseMap::identity(m1.base_map().codomain()),
        GroundMap::identity(m1.ground_map().codomain()),
    );
    let left = compose_pair(&id_cod, m1)?;
    let verdict = pair_maps_equal_verdict(&left, m1);
    if !verdict.holds {
        return Ok(verdict);
    }
    let right = compose_pair(m1, &id_dom)?;
    let verdict = pair_maps_equal_verdict(&right, m1);
    if !verdict.holds {
        return Ok(verdict);
    }
    let assoc_left = compose_pair(&compose_pair(m3, m2)?, m1)?;
    let assoc_right = compose_pair(m3, &compose_pair(m2, m1)?)?;
    Ok(pair_maps_equal_verdict(&assoc_left, &assoc_right))
}

/// The equivalence data carried by one site.
///
/// Mode `B`: the site and the canonical site of its knit have equal knits
/// and the knit collapse is a BG-map between them. Mode `S`: the
/// effective site and the canonical site of the nerve have equal nerves
/// and the nerve collapse is a BG-map between them.
pub fn check_equivalence_witness(mode: Mode, a: &PSite) -> Result<Verdict> {
    match mode {
        Mode::B => {
            let ca = canonical_site(&a.knit())?;
            if !crate::morphism::are_g_isomorphic(Mode::B, a, &ca)? {
                return Ok(Verdict::fail(
                    Witness::Coalition(vec![]),
                    "knit changed while passing to the canonical site",
                ));
            }
            let collapse = knit_collapse(a)?;
            crate::morphism::check_g_map(Mode::B, &collapse, a, &ca)
        }
        Mode::S => {
            let effective = a.effective_site();
            let ca = canonical_site(&a.nerve().into_complex())?;
            if !crate::morphism::are_g_isomorphic(Mode::S, &effective, &ca)? {
                return Ok(Verdict::fail(
                    Witness::Coalition(vec![]),
                    "nerve changed while passing to the canonical site",
                ));
            }
            let collapse = nerve_collapse(a)?;
            crate::morphism::check_g_map(Mode::B, &collapse, &effective, &ca)
        }
    }
}

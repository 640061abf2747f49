//! The six morphism classes between formations and sites.
//!
//! Everything comes in two flavours: the B class asks for equality of the
//! transported structure, the S class for inclusion. On formations the
//! carrier is a base map (BC/SC); on sites it is a base map with the
//! ground fixed (BP/SP), a ground map with the base fixed (BG/SG), or a
//! pair of both (B/S). The same-universe classes are checked through the
//! general pair check with an identity component, which is sound because
//! all characterizations of a pair map agree; the agreement itself is one
//! of the verified propositions in [`crate::oracle`].

use itertools::Itertools;
use serde::Serialize;

use crate::combinatorics::{Base, BaseMap, Coalition, Complex};
use crate::error::Error;
use crate::site::{GroundMap, PSite};
use crate::Result;

/// Cap on base size for the isomorphism search over base bijections.
pub const MAX_ISO_SEARCH: usize = 8;

/// The two morphism flavours: `B` demands equality of transported
/// structure, `S` inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    B,
    S,
}

/// The offending item of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Agent(String),
    State(String),
    Coalition(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(flatten)]
    pub witness: Witness,
    pub detail: String,
}

/// Outcome of a morphism check: a boolean with the first counterexample
/// in canonical iteration order (agents, then states, then coalitions in
/// display order) when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn ok() -> Self {
        Verdict {
            holds: true,
            counterexample: None,
        }
    }

    pub fn fail(witness: Witness, detail: impl Into<String>) -> Self {
        Verdict {
            holds: false,
            counterexample: Some(Counterexample {
                witness,
                detail: detail.into(),
            }),
        }
    }
}

/// A base map together with a ground map, the carrier of a general
/// transformation of sites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMap {
    base_map: BaseMap,
    ground_map: GroundMap,
}

impl PairMap {
    pub fn new(base_map: BaseMap, ground_map: GroundMap) -> Self {
        PairMap {
            base_map,
            ground_map,
        }
    }

    pub fn identity(a: &PSite) -> Self {
        PairMap {
            base_map: BaseMap::identity(a.base()),
            ground_map: GroundMap::identity(a.ground()),
        }
    }

    pub fn base_map(&self) -> &BaseMap {
        &self.base_map
    }

    pub fn ground_map(&self) -> &GroundMap {
        &self.ground_map
    }
}

/// True when `t` is a simplex of the nerve of `b`, decided without
/// materializing the nerve.
pub(crate) fn nerve_contains(b: &PSite, t: Coalition) -> bool {
    !t.is_empty() && !b.common_states(t).is_empty()
}

fn require_complex_over(x: &Complex, base: &Base, side: &str) -> Result<()> {
    if x.base() != base {
        return Err(Error::BaseMismatch(format!(
            "{side} complex is not over the map's {side}"
        )));
    }
    Ok(())
}

/// Checks whether `phi` carries formation `x` to formation `y`: image
/// equality in mode `B`, image inclusion in mode `S`.
pub fn check_c_map(mode: Mode, phi: &BaseMap, x: &Complex, y: &Complex) -> Result<Verdict> {
    require_complex_over(x, phi.domain(), "domain")?;
    require_complex_over(y, phi.codomain(), "codomain")?;
    for s in x.coalitions() {
        let image = phi.image_unchecked(s);
        if !y.contains(image) {
            return Ok(Verdict::fail(
                Witness::Coalition(s.labels(x.base()).iter().map(|l| l.to_string()).collect()),
                format!(
                    "image {:?} of this coalition is missing from the codomain",
                    image.labels(y.base())
                ),
            ));
        }
    }
    if mode == Mode::B {
        let image = c_image(phi, x)?;
        for t in y.coalitions() {
            if !image.contains(t) {
                return Ok(Verdict::fail(
                    Witness::Coalition(t.labels(y.base()).iter().map(|l| l.to_string()).collect()),
                    "codomain coalition is not the image of any domain coalition",
                ));
            }
        }
    }
    Ok(Verdict::ok())
}

/// The image formation: the unique codomain making `phi` a B-class map on
/// formations, and the smallest making it an S-class one.
pub fn c_image(phi: &BaseMap, x: &Complex) -> Result<Complex> {
    require_complex_over(x, phi.domain(), "domain")?;
    Complex::new(
        phi.codomain().clone(),
        x.coalitions().map(|s| phi.image_unchecked(s)),
    )
}

/// Checks a base map between two sites sharing one ground (the BP/SP
/// classes). Verdict via the pair characterization; a failing B check
/// names the codomain agent whose aspiration union is off, a failing S
/// check the agent whose union overflows.
pub fn check_p_map(mode: Mode, phi: &BaseMap, a: &PSite, b: &PSite) -> Result<Verdict> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch(
            "BP/SP maps require sites on the same ground".into(),
        ));
    }
    let pair = PairMap::new(phi.clone(), GroundMap::identity(a.ground()));
    let verdict = check_pair_map(mode, &pair, a, b)?;
    if verdict.holds {
        return Ok(verdict);
    }
    // Re-derive the witness from the definitional per-agent form.
    for j in 0..b.base().len() {
        let mut union = a.ground().empty_set();
        for i in 0..a.base().len() {
            if phi.apply(i) == j {
                union = union.union(a.aspirations(i));
            }
        }
        let target = b.aspirations(j);
        let bad = match mode {
            Mode::B => union != *target,
            Mode::S => !union.is_subset_of(target),
        };
        if bad {
            return Ok(Verdict::fail(
                Witness::Agent(b.base().agent(j).to_string()),
                "merged aspirations of the parents disagree with this agent's profile",
            ));
        }
    }
    Err(Error::Internal(
        "pair check and per-agent check disagree".into(),
    ))
}

/// The image site of `a` under a recomposition of the base: same ground,
/// each codomain agent aspiring to the union over its parents. The unique
/// codomain making `phi` a BP-map and the finest making it an SP-map.
pub fn p_image(phi: &BaseMap, a: &PSite) -> Result<PSite> {
    if phi.domain() != a.base() {
        return Err(Error::BaseMismatch(
            "image under a base map not defined on this site's base".into(),
        ));
    }
    let profile = (0..phi.codomain().len())
        .map(|j| {
            let mut union = a.ground().empty_set();
            for i in 0..a.base().len() {
                if phi.apply(i) == j {
                    union = union.union(a.aspirations(i));
                }
            }
            union
        })
        .collect();
    PSite::new(phi.codomain().clone(), a.ground().clone(), profile)
}

/// Checks a ground map between two sites sharing one base (the BG/SG
/// classes): parting preservation in mode `B`, parting growth in mode `S`.
pub fn check_g_map(mode: Mode, f: &GroundMap, a: &PSite, b: &PSite) -> Result<Verdict> {
    if a.base() != b.base() {
        return Err(Error::BaseMismatch(
            "BG/SG maps require sites on the same base".into(),
        ));
    }
    let pair = PairMap::new(BaseMap::identity(a.base()), f.clone());
    check_pair_map(mode, &pair, a, b)
}

/// The site pulled back along `f`: each agent aspiring to the preimage of
/// its aspirations in `b`. The unique domain making `f` a BG-map into `b`.
pub fn inverse_g_image(f: &GroundMap, b: &PSite) -> Result<PSite> {
    if f.codomain() != b.ground() {
        return Err(Error::GroundMismatch(
            "inverse image requires the map's codomain to be the site's ground".into(),
        ));
    }
    let profile = (0..b.base().len())
        .map(|j| f.preimage_set(b.aspirations(j)))
        .collect();
    PSite::new(b.base().clone(), f.domain().clone(), profile)
}

/// The site pushed forward along `f`: each agent aspiring to the image of
/// its aspirations. The finest codomain cover making `f` an SG-map.
pub fn direct_g_image(f: &GroundMap, a: &PSite) -> Result<PSite> {
    if f.domain() != a.ground() {
        return Err(Error::GroundMismatch(
            "direct image requires the map's domain to be the site's ground".into(),
        ));
    }
    let profile = (0..a.base().len())
        .map(|i| f.image_set(a.aspirations(i)))
        .collect();
    PSite::new(a.base().clone(), f.codomain().clone(), profile)
}

/// Checks a general pair map `(phi, f): a -> b` through the parting
/// equation: transported parting equals (mode `B`) or is contained in
/// (mode `S`) the parting of the image state, for every state.
pub fn check_pair_map(mode: Mode, m: &PairMap, a: &PSite, b: &PSite) -> Result<Verdict> {
    if m.base_map().domain() != a.base() || m.base_map().codomain() != b.base() {
        return Err(Error::BaseMismatch(
            "pair map's base component does not span the two bases".into(),
        ));
    }
    if m.ground_map().domain() != a.ground() || m.ground_map().codomain() != b.ground() {
        return Err(Error::GroundMismatch(
            "pair map's ground component does not span the two grounds".into(),
        ));
    }
    for x in 0..a.ground().len() {
        let sent = m.base_map().image_unchecked(a.parting(x));
        let received = b.parting(m.ground_map().apply(x));
        let bad = match mode {
            Mode::B => sent != received,
            Mode::S => !sent.is_subset_of(received),
        };
        if bad {
            return Ok(Verdict::fail(
                Witness::State(a.ground().state(x).to_string()),
                format!(
                    "parting {:?} is carried to {:?}, but the image state parts to {:?}",
                    a.parting(x).labels(a.base()),
                    sent.labels(b.base()),
                    received.labels(b.base()),
                ),
            ));
        }
    }
    Ok(Verdict::ok())
}

/// Composes two pair maps, `m2` after `m1`.
pub fn compose_pair(m2: &PairMap, m1: &PairMap) -> Result<PairMap> {
    Ok(PairMap::new(
        m2.base_map().compose(m1.base_map())?,
        m2.ground_map().compose(m1.ground_map())?,
    ))
}

fn require_spanning(phi: &BaseMap, a: &PSite, b: &PSite) -> Result<()> {
    if phi.domain() != a.base() || phi.codomain() != b.base() {
        return Err(Error::BaseMismatch(
            "base map does not span the two sites' bases".into(),
        ));
    }
    Ok(())
}

/// Whether some ground map completes `phi` to a mode map, decided from
/// the knit (mode `B`) or nerve (mode `S`) inclusion condition alone.
pub fn ground_witness_exists(mode: Mode, phi: &BaseMap, a: &PSite, b: &PSite) -> Result<bool> {
    require_spanning(phi, a, b)?;
    match mode {
        Mode::B => {
            let knit_b = b.knit();
            Ok(a.parting_values()
                .iter()
                .all(|&t| knit_b.contains(phi.image_unchecked(t))))
        }
        Mode::S => {
            // No functions exist into an empty ground.
            if b.ground().is_empty() && !a.ground().is_empty() {
                return Ok(false);
            }
            // Image-nerve inclusion, tested on the knit generators.
            Ok(a.parting_values()
                .iter()
                .filter(|t| !t.is_empty())
                .all(|&t| nerve_contains(b, phi.image_unchecked(t))))
        }
    }
}

/// Constructs a ground map completing `phi` to a mode map, when one
/// exists. Deterministic: a state is sent to the least-indexed state of
/// the exact fiber (mode `B`) or common-state set (mode `S`) of its
/// transported parting; states desired by nobody go to the least-indexed
/// eligible state.
pub fn find_ground_witness(
    mode: Mode,
    phi: &BaseMap,
    a: &PSite,
    b: &PSite,
) -> Result<Option<GroundMap>> {
    if !ground_witness_exists(mode, phi, a, b)? {
        return Ok(None);
    }
    let mut assignment = Vec::with_capacity(a.ground().len());
    for x in 0..a.ground().len() {
        let t = phi.image_unchecked(a.parting(x));
        let target = match mode {
            Mode::B => b.exact_fiber(t).min(),
            Mode::S => {
                if t.is_empty() {
                    Some(0)
                } else {
                    b.common_states(t).min()
                }
            }
        };
        match target {
            Some(y) => assignment.push(y),
            None => {
                return Err(Error::Internal(
                    "existence condition held but no target state found".into(),
                ))
            }
        }
    }
    Ok(Some(GroundMap::new(
        a.ground().clone(),
        b.ground().clone(),
        assignment,
    )?))
}

/// Right inverse of a surjective BG-map: `g` with `f . g = id`, picking
/// the least-indexed preimage. The result is itself a BG-map `b -> a`.
pub fn right_inverse_bg(f: &GroundMap, a: &PSite, b: &PSite) -> Result<GroundMap> {
    let verdict = check_g_map(Mode::B, f, a, b)?;
    if !verdict.holds {
        return Err(Error::Precondition("map is not a BG-map".into()));
    }
    if !f.is_surjective() {
        return Err(Error::Precondition("map is not surjective".into()));
    }
    let assignment = (0..b.ground().len())
        .map(|y| {
            (0..a.ground().len())
                .find(|&x| f.apply(x) == y)
                .expect("surjectivity")
        })
        .collect();
    GroundMap::new(b.ground().clone(), a.ground().clone(), assignment)
}

/// Whether two same-base sites are linked by mode maps in both
/// directions: knit equality in mode `B`, nerve equality in mode `S`.
pub fn are_g_isomorphic(mode: Mode, a: &PSite, b: &PSite) -> Result<bool> {
    if a.base() != b.base() {
        return Err(Error::BaseMismatch(
            "ground-level isomorphism requires sites on the same base".into(),
        ));
    }
    match mode {
        Mode::B => Ok(a.knit() == b.knit()),
        Mode::S => {
            let forward = a
                .parting_values()
                .iter()
                .filter(|t| !t.is_empty())
                .all(|&t| nerve_contains(b, t));
            let backward = b
                .parting_values()
                .iter()
                .filter(|t| !t.is_empty())
                .all(|&t| nerve_contains(a, t));
            Ok(forward && backward)
        }
    }
}

/// Searches base bijections `phi` such that ground witnesses exist for
/// `phi` and its inverse; returns the first such pair in lexicographic
/// order. Refuses bases larger than [`MAX_ISO_SEARCH`].
pub fn are_pair_isomorphic(mode: Mode, a: &PSite, b: &PSite) -> Result<Option<(BaseMap, BaseMap)>> {
    if a.base().len() > MAX_ISO_SEARCH || b.base().len() > MAX_ISO_SEARCH {
        return Err(Error::SizeLimit(format!(
            "isomorphism search caps at {MAX_ISO_SEARCH} agents"
        )));
    }
    if a.base().len() != b.base().len() {
        return Ok(None);
    }
    let n = a.base().len();
    for perm in (0..n).permutations(n) {
        let phi = BaseMap::new(a.base().clone(), b.base().clone(), perm)?;
        let psi = phi.inverse().expect("permutations are bijective");
        if ground_witness_exists(mode, &phi, a, b)? && ground_witness_exists(mode, &psi, b, a)? {
            return Ok(Some((phi, psi)));
        }
    }
    Ok(None)
}

/// Whether two S-maps `a -> b` agree as transformations: equal base
/// components and equal ground components on every state desired by at
/// least one agent.
pub fn s_equivalent(m1: &PairMap, m2: &PairMap, a: &PSite, b: &PSite) -> Result<bool> {
    for m in [m1, m2] {
        let verdict = check_pair_map(Mode::S, m, a, b)?;
        if !verdict.holds {
            return Err(Error::Precondition(
                "equivalence is only defined between S-maps".into(),
            ));
        }
    }
    if m1.base_map() != m2.base_map() {
        return Ok(false);
    }
    let effective = a.effective_states();
    let agree = effective
        .iter()
        .all(|x| m1.ground_map().apply(x) == m2.ground_map().apply(x));
    Ok(agree)
}

/// Restricts an S-map to the effective sites on both ends.
pub fn restrict_to_effective(m: &PairMap, a: &PSite, b: &PSite) -> Result<(PairMap, PSite, PSite)> {
    let verdict = check_pair_map(Mode::S, m, a, b)?;
    if !verdict.holds {
        return Err(Error::Precondition(
            "only S-maps restrict to effective sites".into(),
        ));
    }
    let a_eff = a.effective_site();
    let b_eff = b.effective_site();
    let restricted = (0..a_eff.ground().len())
        .map(|x| {
            let original = a
                .ground()
                .require(a_eff.ground().state(x))
                .expect("effective states come from the original ground");
            let image = m.ground_map().apply(original);
            b_eff
                .ground()
                .require(b.ground().state(image))
                .expect("images of desired states are desired")
        })
        .collect();
    let ground_map = GroundMap::new(a_eff.ground().clone(), b_eff.ground().clone(), restricted)?;
    Ok((PairMap::new(m.base_map().clone(), ground_map), a_eff, b_eff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_site;
    use crate::combinatorics::SimplicialComplex;
    use crate::site::{Ground, StateSet};

    fn base(labels: &[&str]) -> Base {
        Base::new(labels.iter().copied()).unwrap()
    }

    fn cx(base: &Base, families: &[&[&str]]) -> Complex {
        Complex::from_labels(base.clone(), families.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn triangle_boundary(i: &Base) -> Complex {
        cx(
            i,
            &[
                &["1"],
                &["2"],
                &["3"],
                &["1", "2"],
                &["1", "3"],
                &["2", "3"],
            ],
        )
    }

    fn delta12(i: &Base) -> BaseMap {
        BaseMap::new(i.clone(), i.clone(), vec![1, 1, 2]).unwrap()
    }

    #[test]
    fn simplicial_delegation_is_an_s_map_of_formations() {
        let i = base(&["1", "2", "3"]);
        let e = triangle_boundary(&i);
        let delta = delta12(&i);
        assert!(check_c_map(Mode::S, &delta, &e, &e).unwrap().holds);
        let image = cx(&i, &[&["2"], &["3"], &["2", "3"]]);
        assert!(check_c_map(Mode::B, &delta, &e, &image).unwrap().holds);
        let id = BaseMap::identity(&i);
        assert!(check_c_map(Mode::B, &id, &e, &e).unwrap().holds);
        assert!(check_c_map(Mode::S, &id, &e, &e).unwrap().holds);
        // Dropping a coalition from the codomain breaks the B direction
        // with a coalition witness.
        let verdict = check_c_map(Mode::B, &delta, &e, &cx(&i, &[&["2"], &["2", "3"]])).unwrap();
        assert!(!verdict.holds);
        assert!(matches!(
            verdict.counterexample.unwrap().witness,
            Witness::Coalition(_)
        ));
    }

    #[test]
    fn image_formation_examples() {
        let i = base(&["1", "2", "3"]);
        let e = triangle_boundary(&i);
        assert_eq!(
            c_image(&delta12(&i), &e).unwrap(),
            cx(&i, &[&["2"], &["3"], &["2", "3"]])
        );
        assert_eq!(
            c_image(&delta12(&i), &Complex::empty(i.clone())).unwrap(),
            Complex::empty(i.clone())
        );
        // Appendix delegation image: closure{12,23,13,24} maps onto
        // closure{12,23,13}.
        let j = base(&["1", "2", "3", "4"]);
        let e4 = cx(&j, &[&["1", "2"], &["2", "3"], &["1", "3"], &["2", "4"]]).downward_closure();
        let delta42 = BaseMap::new(j.clone(), j.clone(), vec![0, 1, 2, 1]).unwrap();
        let expected = cx(&j, &[&["1", "2"], &["2", "3"], &["1", "3"]]).downward_closure();
        assert_eq!(
            c_image(&delta42, e4.complex()).unwrap(),
            expected.into_complex()
        );
    }

    fn appendix_site() -> (Base, PSite, BaseMap) {
        let i = base(&["1", "2", "3", "4"]);
        let gens = cx(&i, &[&["1", "2"], &["2", "3"], &["1", "3"], &["2", "4"]]);
        let a = canonical_site(&gens).unwrap();
        let delta = BaseMap::new(i.clone(), i.clone(), vec![0, 1, 2, 1]).unwrap();
        (i, a, delta)
    }

    #[test]
    fn base_recomposition_checks() {
        let (_, a, delta) = appendix_site();
        let id = BaseMap::identity(a.base());
        assert!(check_p_map(Mode::B, &id, &a, &a).unwrap().holds);

        let image = p_image(&delta, &a).unwrap();
        assert!(check_p_map(Mode::B, &delta, &a, &image).unwrap().holds);
        assert!(check_p_map(Mode::S, &delta, &a, &image).unwrap().holds);

        // Coarsen one aspiration set: the B check fails with an agent.
        let mut profile: Vec<StateSet> = image.profile().to_vec();
        profile[1] = image.ground().full_set();
        let coarser = PSite::new(image.base().clone(), image.ground().clone(), profile).unwrap();
        let verdict = check_p_map(Mode::B, &delta, &a, &coarser).unwrap();
        assert!(!verdict.holds);
        assert!(matches!(
            verdict.counterexample.unwrap().witness,
            Witness::Agent(agent) if agent == "2"
        ));
        // The S direction only grew, so it still holds.
        assert!(check_p_map(Mode::S, &delta, &a, &coarser).unwrap().holds);
    }

    #[test]
    fn image_site_merges_parents() {
        let (i, a, delta) = appendix_site();
        let image = p_image(&delta, &a).unwrap();
        // Agent 2 inherits the union of agents 2 and 4; agent 4 is silenced.
        assert_eq!(
            image.aspirations(1).labels(image.ground()),
            vec!["1|2", "2|3", "2|4"]
        );
        assert!(image.aspirations(3).is_empty());

        assert_eq!(p_image(&BaseMap::identity(&i), &a).unwrap(), a);

        // A constant map pools every aspiration set on the target agent.
        let j = base(&["j"]);
        let constant = BaseMap::new(i.clone(), j.clone(), vec![0, 0, 0, 0]).unwrap();
        let pooled = p_image(&constant, &a).unwrap();
        assert_eq!(*pooled.aspirations(0), a.effective_states());
    }

    fn two_state_sites() -> (PSite, PSite, GroundMap) {
        // a: two states, partings {1} and {2}; b: one state, parting {1,2}.
        let i = base(&["1", "2"]);
        let ga = Ground::flat(["x", "y"]).unwrap();
        let gb = Ground::flat(["z"]).unwrap();
        let a = PSite::from_labels(i.clone(), ga.clone(), &[&["x"], &["y"]]).unwrap();
        let b = PSite::from_labels(i, gb.clone(), &[&["z"], &["z"]]).unwrap();
        let f = GroundMap::new(ga, gb, vec![0, 0]).unwrap();
        (a, b, f)
    }

    #[test]
    fn ground_shift_checks() {
        let (a, b, f) = two_state_sites();
        // Merging two differently parted states grows the parting: an
        // S-map but not a B-map.
        assert!(!check_g_map(Mode::B, &f, &a, &b).unwrap().holds);
        assert!(check_g_map(Mode::S, &f, &a, &b).unwrap().holds);

        // Identity into a site with one aspiration set enlarged.
        let i = a.base().clone();
        let enlarged = PSite::from_labels(i, a.ground().clone(), &[&["x", "y"], &["y"]]).unwrap();
        let id = GroundMap::identity(a.ground());
        assert!(!check_g_map(Mode::B, &id, &a, &enlarged).unwrap().holds);
        assert!(check_g_map(Mode::S, &id, &a, &enlarged).unwrap().holds);
    }

    #[test]
    fn ground_images() {
        let (a, b, f) = two_state_sites();
        let pulled = inverse_g_image(&f, &b).unwrap();
        // The pullback makes f a BG-map into b.
        assert!(check_g_map(Mode::B, &f, &pulled, &b).unwrap().holds);
        assert_eq!(*pulled.aspirations(0), a.ground().full_set());

        let pushed = direct_g_image(&f, &a).unwrap();
        assert_eq!(pushed, b);
        assert!(check_g_map(Mode::S, &f, &a, &pushed).unwrap().holds);

        let id = GroundMap::identity(b.ground());
        assert_eq!(inverse_g_image(&id, &b).unwrap(), b);
        assert_eq!(direct_g_image(&id, &b).unwrap(), b);
    }

    #[test]
    fn pair_map_between_canonical_sites() {
        let i = base(&["1", "2", "3"]);
        let e = triangle_boundary(&i);
        let delta = delta12(&i);
        let image = c_image(&delta, &e).unwrap();
        let a = canonical_site(&e).unwrap();
        let b = canonical_site(&image).unwrap();
        // The ground component carries each coalition-state to its image.
        let assignment = e
            .coalitions()
            .map(|s| {
                let lbl = crate::canonical::encode_coalition(&i, delta.image_unchecked(s));
                b.ground().require(&lbl).unwrap()
            })
            .collect();
        let f = GroundMap::new(a.ground().clone(), b.ground().clone(), assignment).unwrap();
        let m = PairMap::new(delta, f);
        assert!(check_pair_map(Mode::B, &m, &a, &b).unwrap().holds);

        let id = PairMap::identity(&a);
        assert!(check_pair_map(Mode::B, &id, &a, &a).unwrap().holds);
    }

    #[test]
    fn pair_map_failure_names_a_state() {
        let (a, b, _) = two_state_sites();
        // Send x across fibers inconsistently: parting {1} cannot land on
        // parting {1,2} in mode B.
        let f = GroundMap::new(a.ground().clone(), b.ground().clone(), vec![0, 0]).unwrap();
        let m = PairMap::new(BaseMap::identity(a.base()), f);
        let verdict = check_pair_map(Mode::B, &m, &a, &b).unwrap();
        assert!(!verdict.holds);
        assert!(matches!(
            verdict.counterexample.unwrap().witness,
            Witness::State(s) if s == "x"
        ));
    }

    #[test]
    fn composition_of_pairs() {
        let (a, b, f) = two_state_sites();
        let m = PairMap::new(BaseMap::identity(a.base()), f);
        let composed = compose_pair(&PairMap::identity(&b), &m).unwrap();
        assert_eq!(composed, m);
        let composed = compose_pair(&m, &PairMap::identity(&a)).unwrap();
        assert_eq!(composed, m);
    }

    #[test]
    fn witness_construction() {
        let (a, b, _) = two_state_sites();
        let id_base = BaseMap::identity(a.base());

        // knit(a) = {{1},{2}}, knit(b) = {{1,2}}: no B witness, and the
        // nerve of b misses the singletons seen in a... check: nerve(b)
        // is the closure of {1,2}, which does contain the singletons.
        assert!(find_ground_witness(Mode::B, &id_base, &a, &b)
            .unwrap()
            .is_none());
        let s_witness = find_ground_witness(Mode::S, &id_base, &a, &b)
            .unwrap()
            .unwrap();
        let m = PairMap::new(id_base.clone(), s_witness);
        assert!(check_pair_map(Mode::S, &m, &a, &b).unwrap().holds);

        // In the other direction nothing exists: {1,2} is neither a
        // parting value of a nor a simplex of a's nerve.
        assert!(find_ground_witness(Mode::B, &id_base, &b, &a)
            .unwrap()
            .is_none());
        assert!(find_ground_witness(Mode::S, &id_base, &b, &a)
            .unwrap()
            .is_none());

        // Identity always admits itself.
        let w = find_ground_witness(Mode::B, &id_base, &a, &a)
            .unwrap()
            .unwrap();
        let m = PairMap::new(id_base, w);
        assert!(check_pair_map(Mode::B, &m, &a, &a).unwrap().holds);
    }

    #[test]
    fn witness_into_empty_ground() {
        let i = base(&["1"]);
        let ga = Ground::flat(["x"]).unwrap();
        let gb = Ground::flat(Vec::<String>::new()).unwrap();
        // Agent desires nothing, so both nerves are empty, but there is
        // no function from one state to zero states.
        let a = PSite::from_labels(i.clone(), ga, &[&[]]).unwrap();
        let b = PSite::new(i.clone(), gb.clone(), vec![gb.empty_set()]).unwrap();
        let id = BaseMap::identity(&i);
        assert!(find_ground_witness(Mode::S, &id, &a, &b).unwrap().is_none());
        assert!(find_ground_witness(Mode::B, &id, &a, &b).unwrap().is_none());
        // The empty domain direction admits the empty map.
        assert!(find_ground_witness(Mode::S, &id, &b, &a).unwrap().is_some());
    }

    #[test]
    fn right_inverse_of_a_collapse() {
        // Two states with equal parting collapse onto one: a surjective
        // BG-map whose right inverse picks the least preimage.
        let i = base(&["1"]);
        let ga = Ground::flat(["x", "y"]).unwrap();
        let gb = Ground::flat(["z"]).unwrap();
        let a = PSite::from_labels(i.clone(), ga.clone(), &[&["x", "y"]]).unwrap();
        let b = PSite::from_labels(i, gb.clone(), &[&["z"]]).unwrap();
        let f = GroundMap::new(ga, gb, vec![0, 0]).unwrap();
        let g = right_inverse_bg(&f, &a, &b).unwrap();
        assert_eq!(g.assignment(), &[0]);
        assert!(check_g_map(Mode::B, &g, &b, &a).unwrap().holds);
        assert_eq!(f.compose(&g).unwrap(), GroundMap::identity(b.ground()));

        // A bijective BG-map right-inverts to its inverse.
        let swap = GroundMap::new(a.ground().clone(), a.ground().clone(), vec![1, 0]).unwrap();
        let g = right_inverse_bg(&swap, &a, &a).unwrap();
        assert_eq!(g, swap.inverse().unwrap());
    }

    #[test]
    fn right_inverse_preconditions() {
        let (a, b, f) = two_state_sites();
        // f is not a BG-map a -> b.
        assert!(right_inverse_bg(&f, &a, &b).is_err());
        // Not surjective: map both states of a onto x.
        let i = a.base().clone();
        let g = GroundMap::new(a.ground().clone(), a.ground().clone(), vec![0, 0]).unwrap();
        let collapsed = inverse_g_image(&g, &a).unwrap();
        assert_eq!(collapsed.base(), &i);
        assert!(right_inverse_bg(&g, &collapsed, &a).is_err());
    }

    #[test]
    fn ground_level_isomorphism_is_knit_or_nerve_equality() {
        let (a, b, _) = two_state_sites();
        assert!(are_g_isomorphic(Mode::B, &a, &a).unwrap());
        assert!(are_g_isomorphic(Mode::S, &a, &a).unwrap());
        assert!(!are_g_isomorphic(Mode::B, &a, &b).unwrap());
        // Nerves differ too: b's states realize the pair {1,2}.
        assert!(!are_g_isomorphic(Mode::S, &a, &b).unwrap());

        // A site and the canonical site of its knit are B-isomorphic.
        let ca = canonical_site(&a.knit()).unwrap();
        assert!(are_g_isomorphic(Mode::B, &a, &ca).unwrap());
    }

    #[test]
    fn pair_isomorphism_search() {
        let (a, _, _) = two_state_sites();
        let (phi, psi) = are_pair_isomorphic(Mode::B, &a, &a).unwrap().unwrap();
        assert_eq!(phi, BaseMap::identity(a.base()));
        assert_eq!(psi, BaseMap::identity(a.base()));

        // An asymmetric site: agent 2 dominates, so only the role-crossing
        // bijection matches a copy where agent "one" dominates.
        let i = base(&["1", "2"]);
        let asym = PSite::from_labels(
            i.clone(),
            Ground::flat(["x", "y"]).unwrap(),
            &[&["x"], &["x", "y"]],
        )
        .unwrap();
        let j = base(&["one", "two"]);
        let relabeled =
            PSite::from_labels(j, Ground::flat(["u", "v"]).unwrap(), &[&["u", "v"], &["u"]])
                .unwrap();
        let (phi, psi) = are_pair_isomorphic(Mode::B, &asym, &relabeled)
            .unwrap()
            .unwrap();
        assert_eq!(phi.assignment(), &[1, 0]);
        assert_eq!(psi.assignment(), &[1, 0]);

        // Different knit shapes under every bijection: no isomorphism.
        let lopsided =
            PSite::from_labels(i, Ground::flat(["x", "y"]).unwrap(), &[&["x", "y"], &[]]).unwrap();
        assert!(are_pair_isomorphic(Mode::B, &a, &lopsided)
            .unwrap()
            .is_none());
    }

    #[test]
    fn pair_isomorphism_refuses_large_bases() {
        let labels: Vec<String> = (0..9).map(|k| format!("a{k}")).collect();
        let i = Base::new(labels).unwrap();
        let g = Ground::flat(["x"]).unwrap();
        let profile = vec![g.empty_set(); 9];
        let a = PSite::new(i, g, profile).unwrap();
        assert!(matches!(
            are_pair_isomorphic(Mode::B, &a, &a),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn s_equivalence_ignores_undesired_states() {
        // One uncovered state: maps differing only there are equivalent.
        let i = base(&["1"]);
        let g = Ground::flat(["x", "y"]).unwrap();
        let a = PSite::from_labels(i.clone(), g.clone(), &[&["x"]]).unwrap();
        let m1 = PairMap::new(
            BaseMap::identity(&i),
            GroundMap::new(g.clone(), g.clone(), vec![0, 0]).unwrap(),
        );
        let m2 = PairMap::new(
            BaseMap::identity(&i),
            GroundMap::new(g.clone(), g.clone(), vec![0, 1]).unwrap(),
        );
        assert!(s_equivalent(&m1, &m1, &a, &a).unwrap());
        assert!(s_equivalent(&m1, &m2, &a, &a).unwrap());
        let m3 = PairMap::new(
            BaseMap::identity(&i),
            GroundMap::new(g.clone(), g.clone(), vec![1, 1]).unwrap(),
        );
        // m3 moves the covered state x onto y, which nobody desires: not
        // even an S-map, so comparison is rejected.
        assert!(s_equivalent(&m1, &m3, &a, &a).is_err());

        // Differences on a covered state separate honest S-maps.
        let b = PSite::from_labels(i.clone(), g.clone(), &[&["x", "y"]]).unwrap();
        let n1 = PairMap::new(
            BaseMap::identity(&i),
            GroundMap::new(g.clone(), g.clone(), vec![0, 0]).unwrap(),
        );
        let n2 = PairMap::new(
            BaseMap::identity(&i),
            GroundMap::new(g.clone(), g.clone(), vec![1, 0]).unwrap(),
        );
        assert!(!s_equivalent(&n1, &n2, &a, &b).unwrap());
    }

    #[test]
    fn nerve_membership_shortcut_matches_materialized_nerve() {
        let (a, b, _) = two_state_sites();
        for site in [&a, &b] {
            let nerve = site.nerve();
            for mask in 0u64..4 {
                let c = Coalition::from_bits(mask);
                assert_eq!(nerve_contains(site, c), nerve.contains(c));
            }
        }
        let empty = SimplicialComplex::empty(a.base().clone());
        assert!(!empty.contains(Coalition::EMPTY));
    }
}

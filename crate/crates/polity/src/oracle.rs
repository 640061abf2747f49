//! Brute-force verification engine.
//!
//! Exhaustively enumerates functions, complexes, profiles, and small
//! sites, plus seeded random generators for everything larger, and runs a
//! catalog of proposition checks against the library implementations. A
//! counterexample from any check is an implementation bug and fails the
//! build.
//!
//! Random generation is pinned to the ChaCha8 stream cipher seeded with
//! the caller's word, so failures replay bit-exactly across machines.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canonical::{canonical_site, canonical_with_nerve};
use crate::combinatorics::{Base, BaseMap, Coalition, Complex, SimplicialComplex};
use crate::delegation::{
    check_withdrawal_equivalences, implication_filter, is_friendly_delegation,
    is_simplicial_delegation, without_agent, Delegation,
};
use crate::error::Error;
use crate::functor::{
    canon_on_morphism, check_category_laws, check_equivalence_witness, check_naturality,
    knit_collapse, knit_on_morphism, nerve_on_morphism,
};
use crate::morphism::{
    check_g_map, check_p_map, check_pair_map, compose_pair, find_ground_witness, p_image, Mode,
    PairMap,
};
use crate::site::{Ground, GroundMap, PSite};
use crate::Result;

/// Cap on the number of functions one enumeration may produce.
pub const MAX_ENUMERATED_FUNCTIONS: u64 = 10_000_000;

/// Size and effort levels for the proposition checks. Exhaustive passes
/// clamp `max_base`/`max_ground` to each check's own ceiling; randomized
/// passes draw `trials` instances from the seeded generator.
#[derive(Debug, Clone, Copy)]
pub struct OracleBounds {
    pub max_base: usize,
    pub max_ground: usize,
    pub trials: u64,
    pub seed: u64,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_base: 3,
            max_ground: 3,
            trials: 500,
            seed: 0,
        }
    }
}

/// Outcome of one proposition check.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub id: String,
    pub instances: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<String>,
}

impl Report {
    fn new(id: &str) -> Self {
        Report {
            id: id.to_string(),
            instances: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
        ok
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Every proposition id the engine knows.
pub const CATALOG: &[&str] = &[
    "DOWN_CLOSURE",
    "MAX_ELEMENTS",
    "PI_GAMMA",
    "FIBER_PARTITION",
    "NERVE_GEN",
    "EFFECTIVE_SITE",
    "CANON_KNIT",
    "CANON_NERVE",
    "CANON_BETWEEN",
    "BG_CHAR",
    "BMAP1",
    "SMAP1",
    "PAIR_CHAR",
    "IMAGE2",
    "BG_EXISTS",
    "SG_EXISTS",
    "BS_EXISTS",
    "COMPOSE_CLOSED",
    "FUNCTOR_LAWS",
    "KNIT_CANON_ID",
    "NATURALITY",
    "CATEGORY_LAWS",
    "EQUIV_WITNESS",
    "FACT1A",
    "FACT1B",
    "DELEG_CHAR",
    "SCDELTA",
    "FOUNDATION",
];

/// Runs one cataloged check.
pub fn verify_proposition(id: &str, bounds: &OracleBounds) -> Result<Report> {
    match id {
        "DOWN_CLOSURE" => down_closure(bounds),
        "MAX_ELEMENTS" => max_elements_vs_closure(bounds),
        "PI_GAMMA" => pi_gamma(bounds),
        "FIBER_PARTITION" => fiber_partition(bounds),
        "NERVE_GEN" => nerve_generated(bounds),
        "EFFECTIVE_SITE" => effective_site_props(bounds),
        "CANON_KNIT" => canon_knit(bounds),
        "CANON_NERVE" => canon_nerve(bounds),
        "CANON_BETWEEN" => canon_between(bounds),
        "BG_CHAR" => recomposition_characterization(bounds),
        "BMAP1" => ground_shift_characterization_b(bounds),
        "SMAP1" => ground_shift_characterization_s(bounds),
        "PAIR_CHAR" => pair_characterization(bounds),
        "IMAGE2" => image_consequences(bounds),
        "BG_EXISTS" => witness_existence_same_base(Mode::B, bounds),
        "SG_EXISTS" => witness_existence_same_base(Mode::S, bounds),
        "BS_EXISTS" => witness_existence_pairs(bounds),
        "COMPOSE_CLOSED" => composition_closure(bounds),
        "FUNCTOR_LAWS" => functor_laws(bounds),
        "KNIT_CANON_ID" => knit_after_canon(bounds),
        "NATURALITY" => naturality_squares(bounds),
        "CATEGORY_LAWS" => category_laws(bounds),
        "EQUIV_WITNESS" => equivalence_witnesses(bounds),
        "FACT1A" => removal_is_fixed(bounds),
        "FACT1B" => friendly_implies_simplicial(bounds),
        "DELEG_CHAR" => delegation_characterizations(bounds),
        "SCDELTA" => withdrawal_equivalences(bounds),
        "FOUNDATION" => friendly_foundation(bounds),
        other => Err(Error::UnknownProposition(other.to_string())),
    }
}

// ---------------------------------------------------------------------
// Universes and enumeration.

/// A base with agents labeled `1..=n`.
pub fn small_base(n: usize) -> Base {
    Base::new((1..=n).map(|k| k.to_string())).expect("numeric labels are distinct")
}

/// A ground with single-letter states, `s{k}` past `z`.
pub fn small_ground(n: usize) -> Ground {
    let labels = (0..n).map(|k| {
        if k < 26 {
            ((b'a' + k as u8) as char).to_string()
        } else {
            format!("s{k}")
        }
    });
    Ground::flat(labels).expect("generated labels are distinct")
}

/// All total functions from a domain of `domain` points to a codomain of
/// `codomain` points, as index vectors in lexicographic order.
pub fn enumerate_functions(domain: usize, codomain: usize) -> Result<FunctionEnumeration> {
    let count = (codomain as u64).checked_pow(domain as u32);
    match count {
        Some(c) if c <= MAX_ENUMERATED_FUNCTIONS => Ok(FunctionEnumeration {
            domain,
            codomain,
            next: if domain == 0 || codomain > 0 {
                Some(vec![0; domain])
            } else {
                None
            },
        }),
        _ => Err(Error::SizeLimit(format!(
            "{codomain}^{domain} functions exceed the enumeration cap"
        ))),
    }
}

pub struct FunctionEnumeration {
    domain: usize,
    codomain: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for FunctionEnumeration {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        // Odometer increment from the last coordinate.
        let mut following = current.clone();
        for k in (0..self.domain).rev() {
            following[k] += 1;
            if following[k] < self.codomain {
                self.next = Some(following);
                break;
            }
            following[k] = 0;
        }
        Some(current)
    }
}

/// All complexes over `base`; the base may carry at most four agents.
pub fn enumerate_complexes(base: &Base) -> Result<Vec<Complex>> {
    if base.len() > 4 {
        return Err(Error::SizeLimit(
            "complex enumeration caps at four agents".into(),
        ));
    }
    let subsets = 1u64 << base.len();
    let mut out = Vec::with_capacity(1 << subsets);
    for mask in 0u64..(1 << subsets) {
        let coalitions = (0..subsets)
            .filter(|j| mask & (1 << j) != 0)
            .map(Coalition::from_bits);
        out.push(Complex::new(base.clone(), coalitions)?);
    }
    Ok(out)
}

/// All simplicial complexes over `base`.
pub fn enumerate_simplicial(base: &Base) -> Result<Vec<SimplicialComplex>> {
    Ok(enumerate_complexes(base)?
        .into_iter()
        .filter(|c| c.is_simplicial())
        .map(|c| SimplicialComplex::new(c).expect("just checked"))
        .collect())
}

/// All sites over the given universes; `agents * states` may not exceed
/// 24 bits.
pub fn enumerate_sites(base: &Base, ground: &Ground) -> Result<Vec<PSite>> {
    let bits = base.len() * ground.len();
    if bits > 24 {
        return Err(Error::SizeLimit(
            "site enumeration caps at 2^24 profiles".into(),
        ));
    }
    let mut out = Vec::with_capacity(1 << bits);
    for mask in 0u64..(1 << bits) {
        let profile = (0..base.len())
            .map(|i| {
                let mut set = ground.empty_set();
                for x in 0..ground.len() {
                    if mask & (1 << (i * ground.len() + x)) != 0 {
                        set.insert(x);
                    }
                }
                set
            })
            .collect();
        out.push(PSite::new(base.clone(), ground.clone(), profile)?);
    }
    Ok(out)
}

/// A reproducible random site: every (agent, state) membership is an
/// independent fair coin from the seeded ChaCha8 stream.
pub fn random_site(seed: u64, n_agents: usize, n_states: usize) -> Result<PSite> {
    // Construct the universes through the checked paths so oversized
    // requests error instead of panicking.
    Base::new((1..=n_agents).map(|k| k.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ground = small_ground_checked(n_states)?;
    Ok(random_site_with_ground(&mut rng, n_agents, &ground))
}

fn small_ground_checked(n: usize) -> Result<Ground> {
    Ground::flat((0..n).map(|k| {
        if k < 26 {
            ((b'a' + k as u8) as char).to_string()
        } else {
            format!("s{k}")
        }
    }))
}

fn random_site_with(rng: &mut ChaCha8Rng, n_agents: usize, n_states: usize) -> PSite {
    let ground = small_ground(n_states);
    random_site_with_ground(rng, n_agents, &ground)
}

fn random_site_with_ground(rng: &mut ChaCha8Rng, n_agents: usize, ground: &Ground) -> PSite {
    let base = small_base(n_agents);
    let profile = (0..n_agents)
        .map(|_| {
            let mut set = ground.empty_set();
            for x in 0..ground.len() {
                if rng.gen_bool(0.5) {
                    set.insert(x);
                }
            }
            set
        })
        .collect();
    PSite::new(base, ground.clone(), profile).expect("generated profile is valid")
}

fn random_complex(rng: &mut ChaCha8Rng, base: &Base) -> Complex {
    let subsets = 1u64 << base.len();
    let coalitions = (0..subsets)
        .filter(|_| rng.gen_bool(0.3))
        .map(Coalition::from_bits);
    Complex::new(base.clone(), coalitions).expect("masks fit the base")
}

fn random_coalition(rng: &mut ChaCha8Rng, n: usize) -> Coalition {
    Coalition::from_indices((0..n).filter(|_| rng.gen_bool(0.5)))
}

/// A random B-map out of `a`: the codomain site is the canonical site of
/// the pushed knit padded with noise states, and the ground component
/// sends each state onto its pushed parting.
fn random_b_map(rng: &mut ChaCha8Rng, a: &PSite) -> (PairMap, PSite) {
    let n_j = rng.gen_range(1..=3);
    let target = small_base(n_j);
    let assignment = (0..a.base().len()).map(|_| rng.gen_range(0..n_j)).collect();
    let phi = BaseMap::new(a.base().clone(), target.clone(), assignment)
        .expect("random assignment is total");
    let pushed = p_image(&phi, a).expect("bases line up");
    let knit = pushed.knit();
    let core: Vec<Coalition> = knit.coalitions().collect();
    let extras = rng.gen_range(0..3usize);
    let labels: Vec<String> = core
        .iter()
        .map(|c| crate::canonical::encode_coalition(&target, *c))
        .chain((0..extras).map(|k| format!("noise{k}")))
        .collect();
    let ground = Ground::flat(labels).expect("knit labels are distinct");
    let mut parting = core.clone();
    for _ in 0..extras {
        parting.push(random_coalition(rng, n_j));
    }
    let b = PSite::from_parting(
        target,
        ground.clone(),
        &crate::site::PartingTable::new(parting),
    )
    .expect("parting table is total");
    let f_assignment = (0..a.ground().len())
        .map(|x| {
            let t = phi.image_unchecked(a.parting(x));
            core.iter()
                .position(|&c| c == t)
                .expect("pushed partings are knit states")
        })
        .collect();
    let f = GroundMap::new(a.ground().clone(), ground, f_assignment).expect("assignment is total");
    (PairMap::new(phi, f), b)
}

/// A random S-map out of `a`: a B-map whose codomain partings are then
/// enlarged at random, which preserves the inclusion but usually breaks
/// the equality.
fn random_s_map(rng: &mut ChaCha8Rng, a: &PSite) -> (PairMap, PSite) {
    let (m, b) = random_b_map(rng, a);
    let n_j = b.base().len();
    let enlarged = (0..b.ground().len())
        .map(|y| b.parting(y).union(random_coalition(rng, n_j)))
        .collect();
    let b2 = PSite::from_parting(
        b.base().clone(),
        b.ground().clone(),
        &crate::site::PartingTable::new(enlarged),
    )
    .expect("parting table is total");
    (m, b2)
}

// ---------------------------------------------------------------------
// Complex algebra.

fn down_closure(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("DOWN_CLOSURE");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let cap = bounds.max_base.clamp(1, 6);
    for _ in 0..bounds.trials {
        let base = small_base(rng.gen_range(1..=cap));
        let k = random_complex(&mut rng, &base);
        let extra = random_complex(&mut rng, &base);
        let l = Complex::new(base.clone(), k.coalitions().chain(extra.coalitions()))?;
        let once = k.downward_closure();
        let ok = report.check(
            once.complex().downward_closure() == once
                && once.complex().is_simplicial()
                && once.complex().is_subset_of(l.downward_closure().complex()),
            || format!("closure laws failed on {:?}", k.label_lists()),
        );
        if !ok {
            return Ok(report);
        }
    }
    Ok(report)
}

fn max_elements_vs_closure(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("MAX_ELEMENTS");
    for n in 0..=bounds.max_base.min(4) {
        let base = small_base(n);
        for k in enumerate_complexes(&base)? {
            if k.contains(Coalition::EMPTY) {
                continue;
            }
            let ok = report.check(
                k.max_elements().downward_closure() == k.downward_closure(),
                || format!("maximal elements do not regenerate {:?}", k.label_lists()),
            );
            if !ok {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------
// Sites.

fn profile_table_round_trip(a: &PSite) -> bool {
    let table = a.parting_table();
    let back = PSite::from_parting(a.base().clone(), a.ground().clone(), &table);
    match back {
        Ok(site) => site == *a && site.parting_table() == table,
        Err(_) => false,
    }
}

fn pi_gamma(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("PI_GAMMA");
    for n_i in 0..=bounds.max_base.min(3) {
        for n_a in 0..=bounds.max_ground.min(3) {
            let base = small_base(n_i);
            let ground = small_ground(n_a);
            // Profile direction: every profile survives the round trip.
            for a in enumerate_sites(&base, &ground)? {
                if !report.check(profile_table_round_trip(&a), || {
                    format!("round trip failed on {a:?}")
                }) {
                    return Ok(report);
                }
            }
            // Table direction: every assignment of a coalition to every
            // state is realized by exactly the site it induces.
            for values in enumerate_functions(n_a, 1 << n_i)? {
                let table = crate::site::PartingTable::new(
                    values
                        .iter()
                        .map(|&m| Coalition::from_bits(m as u64))
                        .collect(),
                );
                let a = PSite::from_parting(base.clone(), ground.clone(), &table)?;
                if !report.check(a.parting_table() == table, || {
                    format!("table direction failed on {table:?}")
                }) {
                    return Ok(report);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=6);
        let n_states = rng.gen_range(0..=12);
        let a = random_site_with(&mut rng, n_agents, n_states);
        if !report.check(profile_table_round_trip(&a), || {
            format!("round trip failed on {a:?}")
        }) {
            return Ok(report);
        }
    }
    Ok(report)
}

fn fibers_partition(a: &PSite) -> bool {
    let n = a.base().len();
    if n > 6 {
        return false;
    }
    let mut seen = 0usize;
    for mask in 0u64..(1 << n) {
        let s = Coalition::from_bits(mask);
        let fiber = a.exact_fiber(s);
        seen += fiber.len();
        // The common-state set splits into the fibers above it.
        let mut union = a.ground().empty_set();
        let mut total = 0usize;
        for sup in 0u64..(1 << n) {
            let t = Coalition::from_bits(sup);
            if s.is_subset_of(t) {
                let part = a.exact_fiber(t);
                total += part.len();
                union = union.union(&part);
            }
        }
        if union != a.common_states(s) || total != union.len() {
            return false;
        }
    }
    seen == a.ground().len()
}

fn fiber_partition(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("FIBER_PARTITION");
    for n_i in 0..=bounds.max_base.min(3) {
        for n_a in 0..=bounds.max_ground.min(3) {
            for a in enumerate_sites(&small_base(n_i), &small_ground(n_a))? {
                if !report.check(fibers_partition(&a), || format!("fibers broken on {a:?}")) {
                    return Ok(report);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=5);
        let n_states = rng.gen_range(0..=12);
        let a = random_site_with(&mut rng, n_agents, n_states);
        if !report.check(fibers_partition(&a), || format!("fibers broken on {a:?}")) {
            return Ok(report);
        }
    }
    Ok(report)
}

fn definitional_nerve(a: &PSite) -> SimplicialComplex {
    let n = a.base().len();
    let members = (1u64..(1 << n))
        .map(Coalition::from_bits)
        .filter(|&s| !a.common_states(s).is_empty());
    SimplicialComplex::new(Complex::new(a.base().clone(), members).expect("masks fit"))
        .expect("common-state families are downward closed")
}

fn nerve_generated(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("NERVE_GEN");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=bounds.max_base.clamp(1, 5));
        let n_states = rng.gen_range(0..=bounds.max_ground.clamp(1, 12));
        let a = random_site_with(&mut rng, n_agents, n_states);
        if !report.check(a.nerve() == definitional_nerve(&a), || {
            format!("nerve is not the closure of the knit on {a:?}")
        }) {
            return Ok(report);
        }
    }
    Ok(report)
}

fn effective_site_props(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("EFFECTIVE_SITE");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=5);
        let n_states = rng.gen_range(0..=12);
        let a = random_site_with(&mut rng, n_agents, n_states);
        let eff = a.effective_site();
        let mut expected_knit: Vec<Coalition> =
            a.knit().coalitions().filter(|c| !c.is_empty()).collect();
        expected_knit.sort();
        let mut got: Vec<Coalition> = eff.knit().coalitions().collect();
        got.sort();
        let ok = report.check(
            eff.nerve() == a.nerve() && got == expected_knit && eff.effective_site() == eff,
            || format!("effective restriction broken on {a:?}"),
        );
        if !ok {
            return Ok(report);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------
// Canonical sites.

fn canon_knit(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("CANON_KNIT");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for n in 0..=bounds.max_base.min(4) {
        let base = small_base(n);
        for complex in enumerate_complexes(&base)? {
            let site = canonical_site(&complex)?;
            if !report.check(site.knit() == complex, || {
                format!(
                    "knit of the canonical site is not {:?}",
                    complex.label_lists()
                )
            }) {
                return Ok(report);
            }
            // A ground-permuted copy is simple, and the corestricted
            // parting map is an isotopy back onto the canonical site.
            let m = site.ground().len();
            let mut perm: Vec<usize> = (0..m).collect();
            for k in (1..m).rev() {
                perm.swap(k, rng.gen_range(0..=k));
            }
            let shuffled_ground =
                Ground::flat((0..m).map(|k| site.ground().state(perm[k]).to_string()))?;
            let table =
                crate::site::PartingTable::new((0..m).map(|k| site.parting(perm[k])).collect());
            let shuffled = PSite::from_parting(base.clone(), shuffled_ground, &table)?;
            let collapse = knit_collapse(&shuffled)?;
            let target = canonical_site(&shuffled.knit())?;
            let ok = report.check(
                shuffled.is_simple() && crate::site::is_isotopy(&collapse, &shuffled, &target)?,
                || {
                    format!(
                        "parting collapse is not an isotopy for {:?}",
                        complex.label_lists()
                    )
                },
            );
            if !ok {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn canon_nerve(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("CANON_NERVE");
    for n in 0..=bounds.max_base.min(4) {
        for e in enumerate_simplicial(&small_base(n))? {
            let site = canonical_site(e.complex())?;
            let ok = report.check(site.nerve() == e && site.is_perfect(), || {
                format!(
                    "canonical site of {:?} is not a perfect realization",
                    e.complex().label_lists()
                )
            });
            if !ok {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn canon_between(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("CANON_BETWEEN");
    for n in 0..=bounds.max_base.min(4) {
        for e in enumerate_simplicial(&small_base(n))? {
            let solutions = canonical_with_nerve(&e)?;
            let free = e.len() - e.max_elements().len();
            if !report.check(solutions.len() == 1 << free, || {
                format!("wrong solution count for {:?}", e.complex().label_lists())
            }) {
                return Ok(report);
            }
            for s in solutions {
                let site = canonical_site(&s)?;
                if !report.check(site.nerve() == e, || {
                    format!(
                        "sandwiched complex {:?} does not regenerate the nerve",
                        s.label_lists()
                    )
                }) {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------
// Morphism characterizations.

fn recomposition_characterization(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("BG_CHAR");
    let cap_base = bounds.max_base.min(3);
    let cap_ground = bounds.max_ground.min(3);
    for n_a in 0..=cap_ground {
        let ground = small_ground(n_a);
        for n_i in 1..=cap_base {
            for n_j in 1..=cap_base {
                let dom_sites = enumerate_sites(&small_base(n_i), &ground)?;
                let cod_sites = enumerate_sites(&small_base(n_j), &ground)?;
                for phi_vec in enumerate_functions(n_i, n_j)? {
                    let phi = BaseMap::new(small_base(n_i), small_base(n_j), phi_vec.clone())?;
                    for a in &dom_sites {
                        let pushed = p_image(&phi, a)?;
                        for b in &cod_sites {
                            // Definitional per-agent reading.
                            let def_b = pushed.profile() == b.profile();
                            let def_s = pushed
                                .profile()
                                .iter()
                                .zip(b.profile())
                                .all(|(u, v)| u.is_subset_of(v));
                            // Parting characterization through the
                            // library's single code path.
                            let lib_b = check_p_map(Mode::B, &phi, a, b)?.holds;
                            let lib_s = check_p_map(Mode::S, &phi, a, b)?.holds;
                            let ok = report.check(def_b == lib_b && def_s == lib_s, || {
                                format!(
                                    "characterization split on phi={phi_vec:?}, a={a:?}, b={b:?}"
                                )
                            });
                            if !ok {
                                return Ok(report);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn ground_shift_characterization_b(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("BMAP1");
    let cap_base = bounds.max_base.min(3);
    let cap_ground = bounds.max_ground.min(3);
    for n_i in 1..=cap_base {
        let base = small_base(n_i);
        let subsets: Vec<Coalition> = (0u64..(1 << n_i)).map(Coalition::from_bits).collect();
        for n_a in 0..=cap_ground {
            for n_b in 0..=cap_ground {
                let dom_sites = enumerate_sites(&base, &small_ground(n_a))?;
                let cod_sites = enumerate_sites(&base, &small_ground(n_b))?;
                for f_vec in enumerate_functions(n_a, n_b)? {
                    for a in &dom_sites {
                        for b in &cod_sites {
                            let f = GroundMap::new(
                                a.ground().clone(),
                                b.ground().clone(),
                                f_vec.clone(),
                            )?;
                            // (i) profile equality through preimages.
                            let c1 = (0..n_i)
                                .all(|i| f.preimage_set(b.aspirations(i)) == *a.aspirations(i));
                            // (ii) fibers pull back to fibers.
                            let c2 = subsets
                                .iter()
                                .all(|&s| f.preimage_set(&b.exact_fiber(s)) == a.exact_fiber(s));
                            // (iii) fibers push into fibers.
                            let c3 = subsets.iter().all(|&s| {
                                f.image_set(&a.exact_fiber(s))
                                    .is_subset_of(&b.exact_fiber(s))
                            });
                            // (iv) parting equation.
                            let c4 = (0..n_a).all(|x| a.parting(x) == b.parting(f.apply(x)));
                            let lib = check_g_map(Mode::B, &f, a, b)?.holds;
                            let ok = report
                                .check(c1 == c2 && c2 == c3 && c3 == c4 && c4 == lib, || {
                                    format!("BG readings split on f={f_vec:?}, a={a:?}, b={b:?}")
                                });
                            if !ok {
                                return Ok(report);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn ground_shift_characterization_s(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("SMAP1");
    let cap_base = bounds.max_base.min(3);
    let cap_ground = bounds.max_ground.min(3);
    for n_i in 1..=cap_base {
        let base = small_base(n_i);
        let nonempty: Vec<Coalition> = (1u64..(1 << n_i)).map(Coalition::from_bits).collect();
        for n_a in 0..=cap_ground {
            for n_b in 0..=cap_ground {
                let dom_sites = enumerate_sites(&base, &small_ground(n_a))?;
                let cod_sites = enumerate_sites(&base, &small_ground(n_b))?;
                for f_vec in enumerate_functions(n_a, n_b)? {
                    for a in &dom_sites {
                        for b in &cod_sites {
                            let f = GroundMap::new(
                                a.ground().clone(),
                                b.ground().clone(),
                                f_vec.clone(),
                            )?;
                            let c1 = (0..n_i).all(|i| {
                                f.image_set(a.aspirations(i)).is_subset_of(b.aspirations(i))
                            });
                            let c2 = nonempty.iter().all(|&s| {
                                f.image_set(&a.common_states(s))
                                    .is_subset_of(&b.common_states(s))
                            });
                            let c3 = nonempty.iter().all(|&s| {
                                a.common_states(s)
                                    .is_subset_of(&f.preimage_set(&b.common_states(s)))
                            });
                            let c4 =
                                (0..n_a).all(|x| a.parting(x).is_subset_of(b.parting(f.apply(x))));
                            let lib = check_g_map(Mode::S, &f, a, b)?.holds;
                            let ok = report
                                .check(c1 == c2 && c2 == c3 && c3 == c4 && c4 == lib, || {
                                    format!("SG readings split on f={f_vec:?}, a={a:?}, b={b:?}")
                                });
                            if !ok {
                                return Ok(report);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The five readings of a pair map agree on one instance.
fn pair_readings_agree(
    mode: Mode,
    phi: &BaseMap,
    f: &GroundMap,
    a: &PSite,
    b: &PSite,
) -> Result<bool> {
    let m = PairMap::new(phi.clone(), f.clone());
    // (i) definitional: merged aspirations against pulled-back ones.
    let merged = p_image(phi, a)?;
    let pulled = crate::morphism::inverse_g_image(f, b)?;
    let definitional = match mode {
        Mode::B => merged.profile() == pulled.profile(),
        Mode::S => merged
            .profile()
            .iter()
            .zip(pulled.profile())
            .all(|(u, v)| u.is_subset_of(v)),
    };
    // (ii) ground component out of the merged site.
    let via_image = check_g_map(mode, f, &merged, b)?.holds;
    // (iii) base component into the pulled-back site.
    let via_preimage = check_p_map(mode, phi, a, &pulled)?.holds;
    // (iv) identity between the two reductions.
    let central = match mode {
        Mode::B => merged == pulled,
        Mode::S => merged
            .profile()
            .iter()
            .zip(pulled.profile())
            .all(|(u, v)| u.is_subset_of(v)),
    };
    // (v) the parting equation.
    let parting = check_pair_map(mode, &m, a, b)?.holds;
    Ok(definitional == via_image
        && via_image == via_preimage
        && via_preimage == central
        && central == parting)
}

fn pair_characterization(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("PAIR_CHAR");
    // Exhaustive miniature pass.
    for n_i in 1..=bounds.max_base.min(2) {
        for n_j in 1..=bounds.max_base.min(2) {
            for n_a in 0..=bounds.max_ground.min(2) {
                for n_b in 0..=bounds.max_ground.min(2) {
                    let dom_sites = enumerate_sites(&small_base(n_i), &small_ground(n_a))?;
                    let cod_sites = enumerate_sites(&small_base(n_j), &small_ground(n_b))?;
                    for phi_vec in enumerate_functions(n_i, n_j)? {
                        let phi = BaseMap::new(small_base(n_i), small_base(n_j), phi_vec)?;
                        for f_vec in enumerate_functions(n_a, n_b)? {
                            let f = GroundMap::new(small_ground(n_a), small_ground(n_b), f_vec)?;
                            for a in &dom_sites {
                                for b in &cod_sites {
                                    for mode in [Mode::B, Mode::S] {
                                        if !report.check(
                                            pair_readings_agree(mode, &phi, &f, a, b)?,
                                            || format!("pair readings split on {a:?} -> {b:?}"),
                                        ) {
                                            return Ok(report);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // Random larger pass.
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=3);
        let n_states = rng.gen_range(1..=3);
        let a = random_site_with(&mut rng, n_agents, n_states);
        let n_agents = rng.gen_range(1..=3);
        let n_states = rng.gen_range(1..=3);
        let b = random_site_with(&mut rng, n_agents, n_states);
        let phi = BaseMap::new(
            a.base().clone(),
            b.base().clone(),
            (0..a.base().len())
                .map(|_| rng.gen_range(0..b.base().len()))
                .collect(),
        )?;
        let f = GroundMap::new(
            a.ground().clone(),
            b.ground().clone(),
            (0..a.ground().len())
                .map(|_| rng.gen_range(0..b.ground().len()))
                .collect(),
        )?;
        for mode in [Mode::B, Mode::S] {
            if !report.check(pair_readings_agree(mode, &phi, &f, &a, &b)?, || {
                format!("pair readings split on {a:?} -> {b:?}")
            }) {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn image_consequences(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("IMAGE2");
    let cap_base = bounds.max_base.min(3);
    let cap_ground = bounds.max_ground.min(3);
    for n_a in 0..=cap_ground {
        let ground = small_ground(n_a);
        for n_i in 1..=cap_base {
            for n_j in 1..=cap_base {
                let dom_sites = enumerate_sites(&small_base(n_i), &ground)?;
                let cod_sites = enumerate_sites(&small_base(n_j), &ground)?;
                for phi_vec in enumerate_functions(n_i, n_j)? {
                    let phi = BaseMap::new(small_base(n_i), small_base(n_j), phi_vec)?;
                    for a in &dom_sites {
                        // The B-image carries knit and nerve forward.
                        let b = p_image(&phi, a)?;
                        let knit_image = crate::morphism::c_image(&phi, &a.knit())?;
                        let nerve_image = crate::morphism::c_image(&phi, a.nerve().complex())?;
                        let ok = report.check(
                            b.knit() == knit_image
                                && nerve_image == b.nerve().clone().into_complex(),
                            || format!("B-image consequences failed on {a:?}"),
                        );
                        if !ok {
                            return Ok(report);
                        }
                        // S consequences on every verified SP pair.
                        for c in &cod_sites {
                            if !check_p_map(Mode::S, &phi, a, c)?.holds {
                                continue;
                            }
                            let forward = a.parting_values().iter().all(|&s| {
                                s.is_empty()
                                    || crate::morphism::nerve_contains(c, phi.image_unchecked(s))
                            });
                            // The witnessing knit element may be empty:
                            // any state of the shared ground provides one.
                            let backward = c.parting_values().iter().all(|&t| {
                                a.parting_values()
                                    .iter()
                                    .any(|&s| phi.image_unchecked(s).is_subset_of(t))
                            });
                            if !report.check(forward && backward, || {
                                format!("S-image consequences failed on {a:?} -> {c:?}")
                            }) {
                                return Ok(report);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------
// Existence witnesses.

fn witness_existence_same_base(mode: Mode, bounds: &OracleBounds) -> Result<Report> {
    let id = match mode {
        Mode::B => "BG_EXISTS",
        Mode::S => "SG_EXISTS",
    };
    let mut report = Report::new(id);
    let cap_base = bounds.max_base.min(2);
    let cap_ground = bounds.max_ground.min(3);
    for n_i in 1..=cap_base {
        let base = small_base(n_i);
        let phi = BaseMap::identity(&base);
        for n_a in 0..=cap_ground {
            for n_b in 0..=cap_ground {
                let dom_sites = enumerate_sites(&base, &small_ground(n_a))?;
                let cod_sites = enumerate_sites(&base, &small_ground(n_b))?;
                for a in &dom_sites {
                    for b in &cod_sites {
                        let witness = find_ground_witness(mode, &phi, a, b)?;
                        let brute = enumerate_functions(n_a, n_b)?.any(|f_vec| {
                            let f = GroundMap::new(a.ground().clone(), b.ground().clone(), f_vec)
                                .expect("enumerated function is total");
                            check_g_map(mode, &f, a, b)
                                .expect("same base by construction")
                                .holds
                        });
                        let consistent = match &witness {
                            Some(f) => brute && check_g_map(mode, f, a, b)?.holds,
                            None => !brute,
                        };
                        if !report
                            .check(consistent, || format!("witness mismatch on {a:?} -> {b:?}"))
                        {
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn witness_existence_pairs(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("BS_EXISTS");
    let cap_base = bounds.max_base.min(2);
    let cap_ground = bounds.max_ground.min(3);
    for n_i in 1..=cap_base {
        for n_j in 1..=cap_base {
            for n_a in 0..=cap_ground {
                for n_b in 0..=cap_ground {
                    let dom_sites = enumerate_sites(&small_base(n_i), &small_ground(n_a))?;
                    let cod_sites = enumerate_sites(&small_base(n_j), &small_ground(n_b))?;
                    for phi_vec in enumerate_functions(n_i, n_j)? {
                        let phi = BaseMap::new(small_base(n_i), small_base(n_j), phi_vec)?;
                        for a in &dom_sites {
                            for b in &cod_sites {
                                for mode in [Mode::B, Mode::S] {
                                    let witness = find_ground_witness(mode, &phi, a, b)?;
                                    let brute = enumerate_functions(n_a, n_b)?.any(|f_vec| {
                                        let f = GroundMap::new(
                                            a.ground().clone(),
                                            b.ground().clone(),
                                            f_vec,
                                        )
                                        .expect("total");
                                        let m = PairMap::new(phi.clone(), f);
                                        check_pair_map(mode, &m, a, b)
                                            .expect("universes line up")
                                            .holds
                                    });
                                    let consistent = match &witness {
                                        Some(f) => {
                                            let m = PairMap::new(phi.clone(), f.clone());
                                            brute && check_pair_map(mode, &m, a, b)?.holds
                                        }
                                        None => !brute,
                                    };
                                    if !report.check(consistent, || {
                                        format!("pair witness mismatch on {a:?} -> {b:?}")
                                    }) {
                                        return Ok(report);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------
// Composition, functors, naturality.

fn composition_closure(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("COMPOSE_CLOSED");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=3);
        let n_states = rng.gen_range(1..=4);
        let a = random_site_with(&mut rng, n_agents, n_states);
        let (m1, b) = random_b_map(&mut rng, &a);
        let (m2, c) = random_b_map(&mut rng, &b);
        let composite = compose_pair(&m2, &m1)?;
        if !report.check(check_pair_map(Mode::B, &composite, &a, &c)?.holds, || {
            format!("B composite failed out of {a:?}")
        }) {
            return Ok(report);
        }
        let (s1, b2) = random_s_map(&mut rng, &a);
        let (s2, c2) = random_s_map(&mut rng, &b2);
        let composite = compose_pair(&s2, &s1)?;
        if !report.check(check_pair_map(Mode::S, &composite, &a, &c2)?.holds, || {
            format!("S composite failed out of {a:?}")
        }) {
            return Ok(report);
        }
    }
    Ok(report)
}

fn functor_laws(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("FUNCTOR_LAWS");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=3);
        let n_states = rng.gen_range(1..=4);
        let a = random_site_with(&mut rng, n_agents, n_states);

        // Knit action: identity and composition.
        let id = PairMap::identity(&a);
        let knit_id = knit_on_morphism(&id, &a, &a)?;
        if !report.check(
            knit_id.map == BaseMap::identity(a.base()) && knit_id.domain == a.knit(),
            || "knit action breaks the identity law".to_string(),
        ) {
            return Ok(report);
        }
        let (m1, b) = random_b_map(&mut rng, &a);
        let (m2, c) = random_b_map(&mut rng, &b);
        let composite = compose_pair(&m2, &m1)?;
        let k1 = knit_on_morphism(&m1, &a, &b)?;
        let k2 = knit_on_morphism(&m2, &b, &c)?;
        let k12 = knit_on_morphism(&composite, &a, &c)?;
        if !report.check(
            k12.map == k2.map.compose(&k1.map)?
                && k12.domain == k1.domain
                && k12.codomain == k2.codomain
                && k1.codomain == k2.domain,
            || "knit action breaks the composition law".to_string(),
        ) {
            return Ok(report);
        }

        // Nerve action on S-chains.
        let (s1, b2) = random_s_map(&mut rng, &a);
        let (s2, c2) = random_s_map(&mut rng, &b2);
        let s12 = compose_pair(&s2, &s1)?;
        let n1 = nerve_on_morphism(&s1, &a, &b2)?;
        let n2 = nerve_on_morphism(&s2, &b2, &c2)?;
        let n12 = nerve_on_morphism(&s12, &a, &c2)?;
        if !report.check(
            n12.map == n2.map.compose(&n1.map)? && n1.codomain == n2.domain,
            || "nerve action breaks the composition law".to_string(),
        ) {
            return Ok(report);
        }

        // Canon action: lift formation maps and compose.
        let x = a.knit();
        let y = b.knit();
        let z = c.knit();
        let phi1 = m1.base_map();
        let phi2 = m2.base_map();
        let (c1, ca_x, _) = canon_on_morphism(phi1, &x, &y)?;
        let (c2m, _, ca_z) = canon_on_morphism(phi2, &y, &z)?;
        let (c12, ca_x2, ca_z2) = canon_on_morphism(&phi2.compose(phi1)?, &x, &z)?;
        let composed = compose_pair(&c2m, &c1)?;
        if !report.check(c12 == composed && ca_x == ca_x2 && ca_z == ca_z2, || {
            "canon action breaks the composition law".to_string()
        }) {
            return Ok(report);
        }
        let (cid, ca_x3, _) = canon_on_morphism(&BaseMap::identity(x.base()), &x, &x)?;
        if !report.check(cid == PairMap::identity(&ca_x3), || {
            "canon action breaks the identity law".to_string()
        }) {
            return Ok(report);
        }
    }
    Ok(report)
}

fn knit_after_canon(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("KNIT_CANON_ID");
    for n in 0..=bounds.max_base.min(4) {
        let base = small_base(n);
        for complex in enumerate_complexes(&base)? {
            let site = canonical_site(&complex)?;
            if !report.check(site.knit() == complex, || {
                format!(
                    "knit after canon is not the identity on {:?}",
                    complex.label_lists()
                )
            }) {
                return Ok(report);
            }
        }
    }
    // Morphism half on tiny universes: lifting then descending gives the
    // map back.
    for n_i in 1..=bounds.max_base.min(2) {
        for n_j in 1..=bounds.max_base.min(2) {
            let dom = enumerate_complexes(&small_base(n_i))?;
            let cod = enumerate_complexes(&small_base(n_j))?;
            for phi_vec in enumerate_functions(n_i, n_j)? {
                let phi = BaseMap::new(small_base(n_i), small_base(n_j), phi_vec)?;
                for x in &dom {
                    for y in &cod {
                        if !crate::morphism::check_c_map(Mode::S, &phi, x, y)?.holds {
                            continue;
                        }
                        let (lifted, ca_x, ca_y) = canon_on_morphism(&phi, x, y)?;
                        let descended = knit_on_morphism(&lifted, &ca_x, &ca_y)?;
                        let ok = report.check(
                            descended.map == phi
                                && descended.domain == *x
                                && descended.codomain == *y,
                            || format!("knit does not undo canon on {:?}", x.label_lists()),
                        );
                        if !ok {
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn naturality_squares(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("NATURALITY");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=3);
        let n_states = rng.gen_range(1..=4);
        let a = random_site_with(&mut rng, n_agents, n_states);
        let (m, b) = random_b_map(&mut rng, &a);
        // A B-map supports both squares, the S one strictly.
        if !report.check(check_naturality(Mode::B, &m, &a, &b)?.holds, || {
            format!("B square failed out of {a:?}")
        }) {
            return Ok(report);
        }
        if !report.check(check_naturality(Mode::S, &m, &a, &b)?.holds, || {
            format!("S square failed on a B-map out of {a:?}")
        }) {
            return Ok(report);
        }
        let (s, b2) = random_s_map(&mut rng, &a);
        if !report.check(check_naturality(Mode::S, &s, &a, &b2)?.holds, || {
            format!("S square failed out of {a:?}")
        }) {
            return Ok(report);
        }
    }
    Ok(report)
}

fn category_laws(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("CATEGORY_LAWS");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=3);
        let n_states = rng.gen_range(1..=4);
        let a = random_site_with(&mut rng, n_agents, n_states);
        let (m1, b) = random_b_map(&mut rng, &a);
        let (m2, c) = random_b_map(&mut rng, &b);
        let (m3, _) = random_b_map(&mut rng, &c);
        if !report.check(check_category_laws(&m1, &m2, &m3)?.holds, || {
            format!("category laws failed out of {a:?}")
        }) {
            return Ok(report);
        }
    }
    Ok(report)
}

fn equivalence_witnesses(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("EQUIV_WITNESS");
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trials {
        let n_agents = rng.gen_range(1..=5);
        let n_states = rng.gen_range(0..=12);
        let a = random_site_with(&mut rng, n_agents, n_states);
        let b_side = check_equivalence_witness(Mode::B, &a)?.holds;
        let s_side = check_equivalence_witness(Mode::S, &a)?.holds;
        if !report.check(b_side && s_side, || {
            format!("equivalence witness failed on {a:?}")
        }) {
            return Ok(report);
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------
// Delegation.

fn all_delegations(base: &Base) -> Vec<Delegation> {
    let mut out = Vec::new();
    for i in 0..base.len() {
        for j in 0..base.len() {
            if i != j {
                out.push(
                    Delegation::new(base.clone(), base.agent(i), base.agent(j))
                        .expect("distinct agents"),
                );
            }
        }
    }
    out
}

fn removal_is_fixed(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("FACT1A");
    for n in 2..=bounds.max_base.min(4) {
        let base = small_base(n);
        let structures = enumerate_simplicial(&base)?;
        for d in all_delegations(&base) {
            let delta = d.function();
            for e in &structures {
                let reduced = without_agent(e, d.delegating());
                let image = crate::morphism::c_image(&delta, reduced.complex())?;
                if !report.check(image == *reduced.complex(), || {
                    format!("removal not fixed on {:?}", e.complex().label_lists())
                }) {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn friendly_implies_simplicial(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("FACT1B");
    for n in 2..=bounds.max_base.min(4) {
        let base = small_base(n);
        let structures = enumerate_simplicial(&base)?;
        for d in all_delegations(&base) {
            for e in &structures {
                let friendly = is_friendly_delegation(e, &d)?.holds;
                let simplicial = is_simplicial_delegation(e, &d)?.holds;
                if !report.check(!friendly || simplicial, || {
                    format!(
                        "friendly but not simplicial on {:?}",
                        e.complex().label_lists()
                    )
                }) {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn delegation_characterizations(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("DELEG_CHAR");
    for n in 2..=bounds.max_base.min(4) {
        let base = small_base(n);
        let structures = enumerate_simplicial(&base)?;
        for d in all_delegations(&base) {
            for e in &structures {
                // Three independent readings of friendliness.
                let definitional = e
                    .coalitions()
                    .all(|s| !s.contains(d.delegating()) || e.contains(s.with(d.delegate())));
                let filtered = implication_filter(e, d.delegating(), d.delegate());
                let by_closure = filtered.downward_closure() == *e;
                let by_max = e.max_elements().coalitions().all(|s| filtered.contains(s));
                let lib = is_friendly_delegation(e, &d)?.holds;
                let ok = report.check(
                    definitional == by_closure && by_closure == by_max && by_max == lib,
                    || {
                        format!(
                            "friendliness readings split on {:?}",
                            e.complex().label_lists()
                        )
                    },
                );
                if !ok {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn withdrawal_equivalences(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("SCDELTA");
    for n_i in 2..=bounds.max_base.min(3) {
        let base = small_base(n_i);
        for n_a in 0..=bounds.max_ground.min(3) {
            let sites = enumerate_sites(&base, &small_ground(n_a))?;
            for d in all_delegations(&base) {
                for a in &sites {
                    // The library call errors if its four readings split.
                    let verdict = check_withdrawal_equivalences(a, &d)?;
                    let nested = a
                        .aspirations(d.delegating())
                        .is_subset_of(a.aspirations(d.delegate()));
                    if !report.check(verdict.holds == nested, || {
                        format!("withdrawal equivalences split on {a:?}")
                    }) {
                        return Ok(report);
                    }
                }
            }
        }
    }
    Ok(report)
}

fn friendly_foundation(bounds: &OracleBounds) -> Result<Report> {
    let mut report = Report::new("FOUNDATION");
    for n in 2..=bounds.max_base.min(3) {
        let base = small_base(n);
        let structures = enumerate_simplicial(&base)?;
        // Sites over grounds up to the bound, for the search direction.
        let mut family: Vec<PSite> = Vec::new();
        for n_a in 0..=bounds.max_ground.min(3) {
            family.extend(enumerate_sites(&base, &small_ground(n_a))?);
        }
        for d in all_delegations(&base) {
            for e in &structures {
                let friendly = is_friendly_delegation(e, &d)?.holds;
                let witness = crate::delegation::friendly_foundation_witness(e, &d)?;
                let found = family.iter().any(|a| {
                    a.nerve() == *e
                        && a.aspirations(d.delegating())
                            .is_subset_of(a.aspirations(d.delegate()))
                });
                let consistent = if friendly {
                    witness.is_some() && found
                } else {
                    witness.is_none() && !found
                };
                if !report.check(consistent, || {
                    format!("foundation mismatch on {:?}", e.complex().label_lists())
                }) {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

//! Canonical and subcanonical sites: grounds whose states are coalitions.
//!
//! The canonical site of a formation takes the complex itself as ground
//! and gives each agent the coalitions it belongs to; its parting map is
//! then the inclusion, so its knit is the original complex. This is the
//! left inverse the functor machinery in [`crate::functor`] is built on.

use crate::combinatorics::{Base, Coalition, Complex, SimplicialComplex};
use crate::error::Error;
use crate::site::{Ground, PSite};
use crate::Result;

/// Label of the empty coalition in coalition-encoded grounds.
pub const EMPTY_COALITION_LABEL: &str = "∅";

/// Cap on `|E \ E^max|` for [`canonical_with_nerve`].
pub const MAX_FREE_SIMPLEXES: usize = 20;

/// Encodes a coalition as a ground-state label: member labels joined by
/// `|` in base order, `∅` for the empty coalition.
pub fn encode_coalition(base: &Base, c: Coalition) -> String {
    if c.is_empty() {
        EMPTY_COALITION_LABEL.to_string()
    } else {
        c.labels(base).join("|")
    }
}

/// Strict inverse of [`encode_coalition`]: members must be known agents,
/// listed in base order, without repetition.
pub fn decode_coalition(base: &Base, label: &str) -> Result<Coalition> {
    if label == EMPTY_COALITION_LABEL {
        return Ok(Coalition::EMPTY);
    }
    let mut c = Coalition::EMPTY;
    let mut last = None;
    for part in label.split('|') {
        let i = base
            .index_of(part)
            .ok_or_else(|| Error::CoalitionLabel(label.to_string()))?;
        if last.is_some_and(|p| p >= i) {
            return Err(Error::CoalitionLabel(label.to_string()));
        }
        last = Some(i);
        c = c.with(i);
    }
    Ok(c)
}

/// A ground whose states are the coalitions of `complex`, in display
/// order. Fails if two coalitions encode to the same label, which can
/// only happen when agent labels themselves contain `|`.
pub fn coalition_ground(complex: &Complex) -> Result<Ground> {
    Ground::flat(
        complex
            .coalitions()
            .map(|c| encode_coalition(complex.base(), c)),
    )
}

/// The canonical site of a formation: ground = the complex itself, each
/// agent aspiring to the coalitions containing it.
pub fn canonical_site(complex: &Complex) -> Result<PSite> {
    let base = complex.base().clone();
    let ground = coalition_ground(complex)?;
    let profile = (0..base.len())
        .map(|i| {
            let mut set = ground.empty_set();
            for (x, c) in complex.coalitions().enumerate() {
                if c.contains(i) {
                    set.insert(x);
                }
            }
            set
        })
        .collect();
    PSite::new(base, ground, profile)
}

/// The subcanonical site with ground `ground_complex` and effective part
/// `effective`: states in `effective` part to themselves, the others to
/// nobody.
pub fn subcanonical_site(ground_complex: &Complex, effective: &Complex) -> Result<PSite> {
    if ground_complex.base() != effective.base() {
        return Err(Error::BaseMismatch(
            "ground complex and effective part live on different bases".into(),
        ));
    }
    if effective.contains(Coalition::EMPTY) {
        return Err(Error::Precondition(
            "effective part may not contain the empty coalition".into(),
        ));
    }
    if !effective.is_subset_of(ground_complex) {
        return Err(Error::Precondition(
            "effective part must be a subset of the ground complex".into(),
        ));
    }
    let base = ground_complex.base().clone();
    let ground = coalition_ground(ground_complex)?;
    let profile = (0..base.len())
        .map(|i| {
            let mut set = ground.empty_set();
            for (x, c) in ground_complex.coalitions().enumerate() {
                if effective.contains(c) && c.contains(i) {
                    set.insert(x);
                }
            }
            set
        })
        .collect();
    PSite::new(base, ground, profile)
}

/// True when the ground is coalition-encoded over the site's base and the
/// parting of every state is the coalition it encodes. Undecodable labels
/// yield `false`, not an error.
pub fn is_canonical(a: &PSite) -> bool {
    (0..a.ground().len())
        .all(|x| decode_coalition(a.base(), a.ground().state(x)).is_ok_and(|c| c == a.parting(x)))
}

/// All complexes sandwiched between the maximal elements of `nerve` and
/// `nerve` itself; each is the knit of some canonical site whose nerve is
/// `nerve`, and the full complex is the unique perfect one. Ordered by
/// which optional simplexes are present, optional simplexes in display
/// order.
pub fn canonical_with_nerve(nerve: &SimplicialComplex) -> Result<Vec<Complex>> {
    let max = nerve.max_elements();
    let free: Vec<Coalition> = nerve.coalitions().filter(|c| !max.contains(*c)).collect();
    if free.len() > MAX_FREE_SIMPLEXES {
        return Err(Error::SizeLimit(format!(
            "{} optional simplexes, cap is {MAX_FREE_SIMPLEXES}",
            free.len()
        )));
    }
    let mut out = Vec::with_capacity(1 << free.len());
    for pick in 0u64..(1 << free.len()) {
        let chosen = max.coalitions().chain(
            free.iter()
                .enumerate()
                .filter(|(k, _)| pick & (1 << k) != 0)
                .map(|(_, c)| *c),
        );
        out.push(Complex::new(nerve.base().clone(), chosen)?);
    }
    Ok(out)
}

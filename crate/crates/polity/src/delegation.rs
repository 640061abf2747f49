//! Delegation analysis: one agent hands its role to another.
//!
//! A delegation induces a base self-map fixing everyone except the
//! delegating agent. On a structure it is *simplicial* when it maps the
//! complex into itself and *friendly* when adding the delegate to any
//! coalition containing the delegator stays inside the complex. On a
//! site, the delegation amounts to the withdrawal of the delegating agent
//! exactly when its aspirations are contained in the delegate's.

use crate::combinatorics::{Base, BaseMap, Complex, SimplicialComplex};
use crate::error::Error;
use crate::morphism::{check_p_map, p_image, Mode, Verdict, Witness};
use crate::site::PSite;
use crate::Result;

/// A delegation within one base: `delegating` hands its role to
/// `delegate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delegation {
    base: Base,
    delegating: usize,
    delegate: usize,
}

impl Delegation {
    pub fn new(base: Base, delegating: &str, delegate: &str) -> Result<Self> {
        let i0 = base.require(delegating)?;
        let j0 = base.require(delegate)?;
        if i0 == j0 {
            return Err(Error::Precondition(
                "an agent cannot delegate to itself".into(),
            ));
        }
        Ok(Delegation {
            base,
            delegating: i0,
            delegate: j0,
        })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn delegating(&self) -> usize {
        self.delegating
    }

    pub fn delegate(&self) -> usize {
        self.delegate
    }

    /// The base self-map: the delegating agent goes to the delegate,
    /// everyone else stays put.
    pub fn function(&self) -> BaseMap {
        let map = (0..self.base.len())
            .map(|i| {
                if i == self.delegating {
                    self.delegate
                } else {
                    i
                }
            })
            .collect();
        BaseMap::new(self.base.clone(), self.base.clone(), map)
            .expect("delegation assignment is total and in range")
    }
}

pub fn delegation_fn(d: &Delegation) -> BaseMap {
    d.function()
}

fn require_same_base(e: &SimplicialComplex, d: &Delegation) -> Result<()> {
    if e.base() != d.base() {
        return Err(Error::BaseMismatch(
            "delegation and structure live on different bases".into(),
        ));
    }
    Ok(())
}

/// The coalitions avoiding one agent. Always simplicial again.
pub fn without_agent(e: &SimplicialComplex, agent: usize) -> SimplicialComplex {
    let kept = e.coalitions().filter(|s| !s.contains(agent));
    SimplicialComplex::new(Complex::new(e.base().clone(), kept).expect("filtering preserves fit"))
        .expect("removing a vertex star keeps downward closure")
}

/// The coalitions where the delegator's presence forces the delegate's.
/// A plain filter; not simplicial in general.
pub fn implication_filter(e: &SimplicialComplex, delegating: usize, delegate: usize) -> Complex {
    let kept = e
        .coalitions()
        .filter(|s| !s.contains(delegating) || s.contains(delegate));
    Complex::new(e.base().clone(), kept).expect("filtering preserves fit")
}

/// Whether the delegation maps the structure into itself. Also recomputes
/// the closed-form image (everything avoiding the delegator) and reports
/// disagreement between the two routes as a failure.
pub fn is_simplicial_delegation(e: &SimplicialComplex, d: &Delegation) -> Result<Verdict> {
    require_same_base(e, d)?;
    let delta = d.function();
    for s in e.coalitions() {
        let image = delta.image_unchecked(s);
        if !e.contains(image) {
            return Ok(Verdict::fail(
                Witness::Coalition(s.labels(e.base()).iter().map(|l| l.to_string()).collect()),
                "image of this coalition leaves the structure",
            ));
        }
    }
    // Closed form: the image complex is exactly the part avoiding the
    // delegating agent.
    let image = crate::morphism::c_image(&delta, e.complex())?;
    if image != without_agent(e, d.delegating()).into_complex() {
        return Err(Error::Internal(
            "membership route and image route disagree on simpliciality".into(),
        ));
    }
    Ok(Verdict::ok())
}

/// Whether adding the delegate to any coalition containing the delegator
/// stays inside the structure. Cross-checked against both closed forms:
/// the implication filter generates the structure, and every maximal
/// coalition passes the implication filter.
pub fn is_friendly_delegation(e: &SimplicialComplex, d: &Delegation) -> Result<Verdict> {
    require_same_base(e, d)?;
    let mut verdict = Verdict::ok();
    for s in e.coalitions() {
        if s.contains(d.delegating()) && !e.contains(s.with(d.delegate())) {
            verdict = Verdict::fail(
                Witness::Coalition(s.labels(e.base()).iter().map(|l| l.to_string()).collect()),
                "joining the delegate to this coalition leaves the structure",
            );
            break;
        }
    }
    let filtered = implication_filter(e, d.delegating(), d.delegate());
    let by_closure = filtered.downward_closure() == *e;
    let by_max = e.max_elements().coalitions().all(|s| filtered.contains(s));
    if by_closure != verdict.holds || by_max != verdict.holds {
        return Err(Error::Internal(
            "friendliness characterizations disagree".into(),
        ));
    }
    Ok(verdict)
}

/// The site after one agent withdraws: its aspirations are emptied,
/// everything else untouched.
pub fn withdrawal_site(a: &PSite, agent: usize) -> Result<PSite> {
    if agent >= a.base().len() {
        return Err(Error::UnknownAgent(format!("index {agent}")));
    }
    let profile = (0..a.base().len())
        .map(|i| {
            if i == agent {
                a.ground().empty_set()
            } else {
                a.aspirations(i).clone()
            }
        })
        .collect();
    PSite::new(a.base().clone(), a.ground().clone(), profile)
}

/// Evaluates the four equivalent readings of "the delegation results in a
/// plain withdrawal" and returns their common verdict:
/// the delegation is a B-recomposition onto the withdrawal site, its
/// image site is the withdrawal site, the delegator's aspirations sit
/// inside the delegate's, and the delegation is an S-recomposition of
/// the site into itself.
pub fn check_withdrawal_equivalences(a: &PSite, d: &Delegation) -> Result<Verdict> {
    if a.base() != d.base() {
        return Err(Error::BaseMismatch(
            "delegation and site live on different bases".into(),
        ));
    }
    let delta = d.function();
    let withdrawn = withdrawal_site(a, d.delegating())?;
    let as_b_map = check_p_map(Mode::B, &delta, a, &withdrawn)?.holds;
    let image_is_withdrawal = p_image(&delta, a)? == withdrawn;
    let aspirations_nested = a
        .aspirations(d.delegating())
        .is_subset_of(a.aspirations(d.delegate()));
    let as_s_selfmap = check_p_map(Mode::S, &delta, a, a)?.holds;
    let votes = [
        as_b_map,
        image_is_withdrawal,
        aspirations_nested,
        as_s_selfmap,
    ];
    if votes.iter().any(|&v| v != votes[0]) {
        return Err(Error::Internal("withdrawal equivalences disagree".into()));
    }
    if votes[0] {
        Ok(Verdict::ok())
    } else {
        Ok(Verdict::fail(
            Witness::Agent(a.base().agent(d.delegating()).to_string()),
            "this agent's aspirations are not contained in the delegate's",
        ))
    }
}

/// The constructive foundation of a friendly delegation: the canonical
/// site over the maximal coalitions. Its nerve is the original structure
/// and the delegator's aspirations sit inside the delegate's. Empty when
/// the delegation is not friendly.
pub fn friendly_foundation_witness(e: &SimplicialComplex, d: &Delegation) -> Result<Option<PSite>> {
    if !is_friendly_delegation(e, d)?.holds {
        return Ok(None);
    }
    let site = crate::canonical::canonical_site(&e.max_elements())?;
    if site.nerve() != *e {
        return Err(Error::Internal(
            "foundation witness does not generate the structure back".into(),
        ));
    }
    if !site
        .aspirations(d.delegating())
        .is_subset_of(site.aspirations(d.delegate()))
    {
        return Err(Error::Internal(
            "foundation witness does not nest the delegator's aspirations".into(),
        ));
    }
    Ok(Some(site))
}

//! Winning viable coalitions under a seat distribution.
//!
//! The selection mechanism is institutional data, not structure: viability
//! comes from the nerve, winning from seats against a quota.

use std::collections::BTreeMap;

use crate::combinatorics::Coalition;
use crate::error::Error;
use crate::site::PSite;
use crate::Result;

/// Seats per agent plus the quota a coalition must reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    weights: BTreeMap<String, u64>,
    quota: u64,
}

impl WeightProfile {
    pub fn new<I, S>(weights: I, quota: u64) -> Result<Self>
    where
        I: IntoIterator<Item = (S, u64)>,
        S: Into<String>,
    {
        let weights: BTreeMap<String, u64> =
            weights.into_iter().map(|(k, v)| (k.into(), v)).collect();
        if quota == 0 {
            return Err(Error::Precondition("quota must be positive".into()));
        }
        let total: u64 = weights.values().sum();
        if quota > total {
            return Err(Error::Precondition(format!(
                "quota {quota} exceeds the total weight {total}"
            )));
        }
        Ok(WeightProfile { weights, quota })
    }

    pub fn quota(&self) -> u64 {
        self.quota
    }

    pub fn weights(&self) -> &BTreeMap<String, u64> {
        &self.weights
    }

    pub fn weight_of(&self, agent: &str) -> Option<u64> {
        self.weights.get(agent).copied()
    }
}

/// Total seats of a coalition; every member must carry a weight.
pub fn coalition_weight(a: &PSite, w: &WeightProfile, c: Coalition) -> Result<u64> {
    c.members().try_fold(0u64, |acc, i| {
        let label = a.base().agent(i);
        w.weight_of(label)
            .map(|seats| acc + seats)
            .ok_or_else(|| Error::PartialMap(label.to_string()))
    })
}

/// The maximal viable coalitions that reach the quota, heaviest first,
/// display order breaking ties.
pub fn winning_viable(a: &PSite, w: &WeightProfile) -> Result<Vec<Coalition>> {
    for agent in a.base().agents() {
        if w.weight_of(agent).is_none() {
            return Err(Error::PartialMap(agent.clone()));
        }
    }
    let mut winners: Vec<(u64, Coalition)> = Vec::new();
    for c in a.nerve().max_elements().coalitions() {
        let seats = coalition_weight(a, w, c)?;
        if seats >= w.quota() {
            winners.push((seats, c));
        }
    }
    winners.sort_by(|(wa, ca), (wb, cb)| wb.cmp(wa).then_with(|| ca.cmp(cb)));
    Ok(winners.into_iter().map(|(_, c)| c).collect())
}

//! Sites: a base of agents, a ground of states, and a profile assigning an
//! aspiration set to each agent.
//!
//! A site is equivalently described by its parting table, the dual map
//! sending each state to the coalition of agents that desire it. The two
//! presentations determine each other; the table is computed once at
//! construction and cached, the profile stays the source of truth.
//! Everything is immutable after construction.

use std::collections::BTreeSet;
use std::fmt;

use crate::combinatorics::{Base, Coalition, Complex, SimplicialComplex};
use crate::error::Error;
use crate::Result;

/// Hard cap on ground size.
pub const MAX_STATES: usize = 4096;
/// Caps for product-structured grounds.
pub const MAX_DIMENSIONS: usize = 6;
pub const MAX_DIMENSION_VALUES: usize = 8;

/// One named axis of a product ground.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dimension {
    name: String,
    values: Vec<String>,
}

impl Dimension {
    pub fn new<S, I, V>(name: S, values: I) -> Result<Self>
    where
        S: Into<String>,
        I: IntoIterator<Item = V>,
        V: Into<String>,
    {
        let name = name.into();
        let values: Vec<String> = values.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(Error::Precondition(format!(
                "dimension `{name}` has no values"
            )));
        }
        if values.len() > MAX_DIMENSION_VALUES {
            return Err(Error::SizeLimit(format!(
                "dimension `{name}` has {} values, cap is {MAX_DIMENSION_VALUES}",
                values.len()
            )));
        }
        for (k, v) in values.iter().enumerate() {
            if values[..k].contains(v) {
                return Err(Error::DuplicateLabel(format!("{name}:{v}")));
            }
        }
        Ok(Dimension { name, values })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }
}

/// The ordered set of states relevant to a polity.
///
/// A ground is either flat (an explicit state list) or the cartesian
/// product of named dimensions, in which case each state label is the
/// dimension values joined by `,` in dimension order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ground {
    states: Vec<String>,
    dimensions: Option<Vec<Dimension>>,
}

impl Ground {
    pub fn flat<I, S>(states: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        if states.len() > MAX_STATES {
            return Err(Error::SizeLimit(format!(
                "ground has {} states, cap is {MAX_STATES}",
                states.len()
            )));
        }
        for (k, s) in states.iter().enumerate() {
            if states[..k].contains(s) {
                return Err(Error::DuplicateLabel(s.clone()));
            }
        }
        Ok(Ground {
            states,
            dimensions: None,
        })
    }

    pub fn product(dimensions: Vec<Dimension>) -> Result<Self> {
        if dimensions.is_empty() {
            return Err(Error::Precondition(
                "product ground has no dimensions".into(),
            ));
        }
        if dimensions.len() > MAX_DIMENSIONS {
            return Err(Error::SizeLimit(format!(
                "{} dimensions, cap is {MAX_DIMENSIONS}",
                dimensions.len()
            )));
        }
        for (k, d) in dimensions.iter().enumerate() {
            if dimensions[..k].iter().any(|e| e.name == d.name) {
                return Err(Error::DuplicateLabel(d.name.clone()));
            }
        }
        let total: usize = dimensions.iter().map(|d| d.values.len()).product();
        if total > MAX_STATES {
            return Err(Error::SizeLimit(format!(
                "product ground has {total} states, cap is {MAX_STATES}"
            )));
        }
        // States enumerate the full cartesian product, rightmost dimension
        // fastest, so a state index is a mixed-radix numeral.
        let mut states = Vec::with_capacity(total);
        let mut digits = vec![0usize; dimensions.len()];
        for _ in 0..total {
            let label = digits
                .iter()
                .zip(&dimensions)
                .map(|(&v, d)| d.values[v].as_str())
                .collect::<Vec<_>>()
                .join(",");
            states.push(label);
            for k in (0..digits.len()).rev() {
                digits[k] += 1;
                if digits[k] < dimensions[k].values.len() {
                    break;
                }
                digits[k] = 0;
            }
        }
        Ok(Ground {
            states,
            dimensions: Some(dimensions),
        })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state(&self, index: usize) -> &str {
        &self.states[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.states.iter().position(|s| s == label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownState(label.to_string()))
    }

    pub fn dimensions(&self) -> Option<&[Dimension]> {
        self.dimensions.as_deref()
    }

    /// Decomposes a product-ground state index into per-dimension value
    /// indices.
    pub fn digits_of(&self, index: usize) -> Option<Vec<usize>> {
        let dims = self.dimensions.as_ref()?;
        let mut rest = index;
        let mut digits = vec![0usize; dims.len()];
        for k in (0..dims.len()).rev() {
            digits[k] = rest % dims[k].values.len();
            rest /= dims[k].values.len();
        }
        Some(digits)
    }

    /// An empty state set sized for this ground.
    pub fn empty_set(&self) -> StateSet {
        StateSet::empty(self.len())
    }

    /// The set of all states of this ground.
    pub fn full_set(&self) -> StateSet {
        StateSet::full(self.len())
    }

    /// Builds a state set from labels.
    pub fn state_set<'a, I>(&self, labels: I) -> Result<StateSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = self.empty_set();
        for l in labels {
            set.insert(self.require(l)?);
        }
        Ok(set)
    }

    /// States of a product ground whose coordinates lie in the given
    /// per-dimension value lists; dimensions left out of `selection`
    /// range over all their values.
    pub fn box_set(&self, selection: &[(&str, Vec<&str>)]) -> Result<StateSet> {
        let dims = self
            .dimensions
            .as_ref()
            .ok_or_else(|| Error::Precondition("box notation requires a product ground".into()))?;
        let mut allowed: Vec<Option<Vec<bool>>> = vec![None; dims.len()];
        for (name, values) in selection {
            let k = dims
                .iter()
                .position(|d| d.name == *name)
                .ok_or_else(|| Error::UnknownDimension(name.to_string()))?;
            let mut mask = vec![false; dims[k].values.len()];
            for v in values {
                let vi = dims[k]
                    .values
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownState(format!("{name}:{v}")))?;
                mask[vi] = true;
            }
            allowed[k] = Some(mask);
        }
        let mut set = self.empty_set();
        for x in 0..self.len() {
            let digits = self.digits_of(x).expect("product ground");
            let inside = digits
                .iter()
                .zip(&allowed)
                .all(|(&d, mask)| mask.as_ref().is_none_or(|m| m[d]));
            if inside {
                set.insert(x);
            }
        }
        Ok(set)
    }
}

/// A subset of a ground, stored as a bitset over state indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = StateSet::empty(universe);
        for b in &mut set.blocks {
            *b = u64::MAX;
        }
        set.trim();
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.blocks[index / 64] & (1 << (index % 64)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < self.universe);
        self.blocks[index / 64] |= 1 << (index % 64);
    }

    pub fn remove(&mut self, index: usize) {
        self.blocks[index / 64] &= !(1 << (index % 64));
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        debug_assert_eq!(self.universe, other.universe);
        StateSet {
            universe: self.universe,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        debug_assert_eq!(self.universe, other.universe);
        StateSet {
            universe: self.universe,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn complement(&self) -> StateSet {
        let mut out = StateSet {
            universe: self.universe,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &StateSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    /// The least member, if any.
    pub fn min(&self) -> Option<usize> {
        for (k, &b) in self.blocks.iter().enumerate() {
            if b != 0 {
                return Some(k * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn labels<'a>(&self, ground: &'a Ground) -> Vec<&'a str> {
        self.iter().map(|i| ground.state(i)).collect()
    }

    fn trim(&mut self) {
        let extra = self.blocks.len() * 64 - self.universe;
        if extra > 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A total map between grounds, the carrier of every ground shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundMap {
    domain: Ground,
    codomain: Ground,
    map: Vec<usize>,
}

impl GroundMap {
    pub fn new(domain: Ground, codomain: Ground, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.len() {
            return Err(Error::PartialMap(format!(
                "ground map covers {} of {} states",
                map.len(),
                domain.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= codomain.len()) {
            return Err(Error::UnknownState(format!("index {bad} out of codomain")));
        }
        Ok(GroundMap {
            domain,
            codomain,
            map,
        })
    }

    pub fn from_pairs<'a, I>(domain: Ground, codomain: Ground, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut map = vec![usize::MAX; domain.len()];
        for (from, to) in pairs {
            let i = domain.require(from)?;
            if map[i] != usize::MAX {
                return Err(Error::DuplicateLabel(from.to_string()));
            }
            map[i] = codomain.require(to)?;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            return Err(Error::PartialMap(domain.state(i).to_string()));
        }
        GroundMap::new(domain, codomain, map)
    }

    pub fn identity(ground: &Ground) -> Self {
        GroundMap {
            domain: ground.clone(),
            codomain: ground.clone(),
            map: (0..ground.len()).collect(),
        }
    }

    pub fn domain(&self) -> &Ground {
        &self.domain
    }

    pub fn codomain(&self) -> &Ground {
        &self.codomain
    }

    pub fn apply(&self, index: usize) -> usize {
        self.map[index]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.map
    }

    pub fn image_set(&self, set: &StateSet) -> StateSet {
        let mut out = StateSet::empty(self.codomain.len());
        for i in set.iter() {
            out.insert(self.map[i]);
        }
        out
    }

    pub fn preimage_set(&self, set: &StateSet) -> StateSet {
        let mut out = StateSet::empty(self.domain.len());
        for (i, &j) in self.map.iter().enumerate() {
            if set.contains(j) {
                out.insert(i);
            }
        }
        out
    }

    /// `self` after `earlier`: the composite `self . earlier`.
    pub fn compose(&self, earlier: &GroundMap) -> Result<GroundMap> {
        if earlier.codomain != self.domain {
            return Err(Error::GroundMismatch(
                "composition chain mismatch on grounds".into(),
            ));
        }
        GroundMap::new(
            earlier.domain.clone(),
            self.codomain.clone(),
            earlier.map.iter().map(|&j| self.map[j]).collect(),
        )
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain.len()];
        for &j in &self.map {
            seen[j] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.len() == self.codomain.len() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<GroundMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.domain.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(GroundMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            map: inv,
        })
    }
}

/// The dual presentation of a profile: one coalition per state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartingTable {
    values: Vec<Coalition>,
}

impl PartingTable {
    pub fn new(values: Vec<Coalition>) -> Self {
        PartingTable { values }
    }

    pub fn values(&self) -> &[Coalition] {
        &self.values
    }

    pub fn get(&self, state: usize) -> Coalition {
        self.values[state]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A polity site: base, ground, and a profile of aspiration sets.
#[derive(Debug, Clone)]
pub struct PSite {
    base: Base,
    ground: Ground,
    profile: Vec<StateSet>,
    // Cached dual of the profile, computed eagerly at construction.
    parting: Vec<Coalition>,
}

impl PartialEq for PSite {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.ground == other.ground && self.profile == other.profile
    }
}

impl Eq for PSite {}

impl PSite {
    pub fn new(base: Base, ground: Ground, profile: Vec<StateSet>) -> Result<Self> {
        if profile.len() != base.len() {
            return Err(Error::PartialMap(format!(
                "profile covers {} of {} agents",
                profile.len(),
                base.len()
            )));
        }
        if let Some(bad) = profile.iter().position(|s| s.universe() != ground.len()) {
            return Err(Error::GroundMismatch(format!(
                "aspiration set of `{}` is not over the declared ground",
                base.agent(bad)
            )));
        }
        let parting = (0..ground.len())
            .map(|x| Coalition::from_indices((0..base.len()).filter(|&i| profile[i].contains(x))))
            .collect();
        Ok(PSite {
            base,
            ground,
            profile,
            parting,
        })
    }

    /// Builds the unique site whose parting table is `table`.
    pub fn from_parting(base: Base, ground: Ground, table: &PartingTable) -> Result<Self> {
        if table.len() != ground.len() {
            return Err(Error::PartialMap(format!(
                "parting table covers {} of {} states",
                table.len(),
                ground.len()
            )));
        }
        if let Some(bad) = table.values().iter().find(|c| !c.fits(&base)) {
            return Err(Error::BaseMismatch(format!(
                "parting value {bad:?} does not fit a base of {} agents",
                base.len()
            )));
        }
        let profile = (0..base.len())
            .map(|i| {
                let mut set = ground.empty_set();
                for (x, c) in table.values().iter().enumerate() {
                    if c.contains(i) {
                        set.insert(x);
                    }
                }
                set
            })
            .collect();
        PSite::new(base, ground, profile)
    }

    /// Convenience constructor from labeled aspiration sets, in base order.
    pub fn from_labels(base: Base, ground: Ground, aspirations: &[&[&str]]) -> Result<Self> {
        if aspirations.len() != base.len() {
            return Err(Error::PartialMap("aspiration list length".into()));
        }
        let profile = aspirations
            .iter()
            .map(|states| ground.state_set(states.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        PSite::new(base, ground, profile)
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn profile(&self) -> &[StateSet] {
        &self.profile
    }

    /// The aspiration set of one agent.
    pub fn aspirations(&self, agent: usize) -> &StateSet {
        &self.profile[agent]
    }

    /// The coalition of agents that desire state `x`.
    pub fn parting(&self, state: usize) -> Coalition {
        self.parting[state]
    }

    /// Parting of a state given by label.
    pub fn parting_of(&self, label: &str) -> Result<Coalition> {
        Ok(self.parting[self.ground.require(label)?])
    }

    pub fn parting_table(&self) -> PartingTable {
        PartingTable::new(self.parting.clone())
    }

    pub fn parting_values(&self) -> &[Coalition] {
        &self.parting
    }

    /// The states desired by every member of `s`; the whole ground when
    /// `s` is empty.
    pub fn common_states(&self, s: Coalition) -> StateSet {
        let mut acc = self.ground.full_set();
        for i in s.members() {
            acc = acc.intersection(&self.profile[i]);
        }
        acc
    }

    /// The exact fiber of `s`: states whose parting is exactly `s`.
    pub fn exact_fiber(&self, s: Coalition) -> StateSet {
        let mut out = self.ground.empty_set();
        for (x, &c) in self.parting.iter().enumerate() {
            if c == s {
                out.insert(x);
            }
        }
        out
    }

    /// The knit: the image of the parting map. Contains the empty
    /// coalition exactly when some state is desired by nobody.
    pub fn knit(&self) -> Complex {
        let set: BTreeSet<Coalition> = self.parting.iter().copied().collect();
        Complex::new(self.base.clone(), set).expect("parting values fit the base")
    }

    /// The nerve: nonempty coalitions whose members share a state. Always
    /// simplicial; equal to the downward closure of the knit.
    pub fn nerve(&self) -> SimplicialComplex {
        self.knit().downward_closure()
    }

    /// States desired by at least one agent.
    pub fn effective_states(&self) -> StateSet {
        self.profile
            .iter()
            .fold(self.ground.empty_set(), |acc, s| acc.union(s))
    }

    /// Restricts the ground to the effective states. The nerve is
    /// untouched; the knit loses exactly the empty coalition. A fully
    /// covered site is returned unchanged.
    pub fn effective_site(&self) -> PSite {
        let covered = self.effective_states();
        if covered.len() == self.ground.len() {
            return self.clone();
        }
        let kept: Vec<usize> = covered.iter().collect();
        let ground = Ground::flat(kept.iter().map(|&x| self.ground.state(x).to_string()))
            .expect("restriction of distinct labels stays distinct");
        let profile = self
            .profile
            .iter()
            .map(|set| {
                let mut out = StateSet::empty(kept.len());
                for (new, &old) in kept.iter().enumerate() {
                    if set.contains(old) {
                        out.insert(new);
                    }
                }
                out
            })
            .collect();
        PSite::new(self.base.clone(), ground, profile).expect("restricted profile is valid")
    }

    /// True when the parting map is injective.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.parting.iter().all(|c| seen.insert(*c))
    }

    /// True when knit and nerve coincide.
    pub fn is_perfect(&self) -> bool {
        self.knit() == self.nerve().into_complex()
    }
}

/// True when `f` is a bijection carrying each aspiration set of `a` onto
/// the corresponding one of `b`.
pub fn is_isotopy(f: &GroundMap, a: &PSite, b: &PSite) -> Result<bool> {
    if a.base() != b.base() {
        return Err(Error::BaseMismatch(
            "isotopy requires sites on the same base".into(),
        ));
    }
    if f.domain() != a.ground() || f.codomain() != b.ground() {
        return Err(Error::GroundMismatch(
            "isotopy map must span the two grounds".into(),
        ));
    }
    if !f.is_bijective() {
        return Ok(false);
    }
    Ok((0..a.base().len()).all(|i| f.image_set(a.aspirations(i)) == *b.aspirations(i)))
}

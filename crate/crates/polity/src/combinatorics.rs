//! Subset and complex algebra over a finite base of agents.
//!
//! Coalitions are stored as bit masks over the base's declaration order, so
//! membership, subset tests, and unions are single word operations. Bases
//! are capped at 64 agents; the exhaustive verification machinery stays far
//! below that.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::Result;

/// Hard cap on base size imposed by the mask representation.
pub const MAX_AGENTS: usize = 64;

/// An ordered set of distinctly labeled agents.
///
/// The declaration order is stable and drives every canonical ordering in
/// the crate (coalition display, file output, witness tie-breaks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Base {
    agents: Vec<String>,
}

impl Base {
    pub fn new<I, S>(agents: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let agents: Vec<String> = agents.into_iter().map(Into::into).collect();
        if agents.len() > MAX_AGENTS {
            return Err(Error::SizeLimit(format!(
                "base has {} agents, cap is {MAX_AGENTS}",
                agents.len()
            )));
        }
        for (k, a) in agents.iter().enumerate() {
            if agents[..k].contains(a) {
                return Err(Error::DuplicateLabel(a.clone()));
            }
        }
        Ok(Base { agents })
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn agents(&self) -> &[String] {
        &self.agents
    }

    pub fn agent(&self, index: usize) -> &str {
        &self.agents[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.agents.iter().position(|a| a == label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownAgent(label.to_string()))
    }

    /// The coalition of every agent in the base.
    pub fn full_coalition(&self) -> Coalition {
        Coalition::full(self.agents.len())
    }

    /// Builds a coalition from agent labels.
    pub fn coalition<'a, I>(&self, labels: I) -> Result<Coalition>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut c = Coalition::EMPTY;
        for l in labels {
            c = c.with(self.require(l)?);
        }
        Ok(c)
    }
}

/// A set of agents of some base, stored as a bit mask over agent indices.
///
/// A `Coalition` does not carry its base; operations that need labels take
/// the base explicitly, and operations on masks check the index range.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Coalition(u64);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u64) -> Self {
        Coalition(bits)
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < MAX_AGENTS);
        Coalition(1 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut c = Coalition::EMPTY;
        for i in indices {
            c = c.with(i);
        }
        c
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < MAX_AGENTS && self.0 & (1 << index) != 0
    }

    #[must_use]
    pub fn with(&self, index: usize) -> Self {
        debug_assert!(index < MAX_AGENTS);
        Coalition(self.0 | (1 << index))
    }

    #[must_use]
    pub fn without(&self, index: usize) -> Self {
        Coalition(self.0 & !(1 << index))
    }

    pub fn union(&self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(&self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn difference(&self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member indices in ascending order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_AGENTS).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Member labels in base order.
    pub fn labels<'a>(&self, base: &'a Base) -> Vec<&'a str> {
        self.members().map(|i| base.agent(i)).collect()
    }

    /// True when every member index is a valid index of `base`.
    pub fn fits(&self, base: &Base) -> bool {
        let n = base.len();
        n >= MAX_AGENTS || self.0 >> n == 0
    }

    fn full(n: usize) -> Coalition {
        if n >= MAX_AGENTS {
            Coalition(u64::MAX)
        } else {
            Coalition((1u64 << n) - 1)
        }
    }
}

// Display ordering: cardinality first, then the ascending member lists
// compared lexicographically. This is the ordering used everywhere a
// complex is printed or serialized.
impl Ord for Coalition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            if self.0 == other.0 {
                return std::cmp::Ordering::Equal;
            }
            // Equal size: the coalition owning the smallest non-shared
            // agent precedes the other.
            let low = (self.0 ^ other.0).trailing_zeros();
            if self.0 & (1 << low) != 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A total map between bases, the carrier of every recomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseMap {
    domain: Base,
    codomain: Base,
    map: Vec<usize>,
}

impl BaseMap {
    pub fn new(domain: Base, codomain: Base, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.len() {
            return Err(Error::PartialMap(format!(
                "base map covers {} of {} agents",
                map.len(),
                domain.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= codomain.len()) {
            return Err(Error::UnknownAgent(format!("index {bad} out of codomain")));
        }
        Ok(BaseMap {
            domain,
            codomain,
            map,
        })
    }

    /// Builds the map from `(from, to)` label pairs; every domain agent
    /// must appear exactly once.
    pub fn from_pairs<'a, I>(domain: Base, codomain: Base, pairs: I) -> Result<Self>
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
            return Err(Error::PartialMap(domain.agent(i).to_string()));
        }
        BaseMap::new(domain, codomain, map)
    }

    pub fn identity(base: &Base) -> Self {
        BaseMap {
            domain: base.clone(),
            codomain: base.clone(),
            map: (0..base.len()).collect(),
        }
    }

    pub fn domain(&self) -> &Base {
        &self.domain
    }

    pub fn codomain(&self) -> &Base {
        &self.codomain
    }

    pub fn apply(&self, index: usize) -> usize {
        self.map[index]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.map
    }

    /// Elementwise image of a coalition, the extension of the map to
    /// subsets of its domain.
    pub fn image(&self, s: Coalition) -> Result<Coalition> {
        if !s.fits(&self.domain) {
            return Err(Error::BaseMismatch(format!(
                "coalition {s:?} does not fit a base of {} agents",
                self.domain.len()
            )));
        }
        Ok(self.image_unchecked(s))
    }

    pub(crate) fn image_unchecked(&self, s: Coalition) -> Coalition {
        let mut out = Coalition::EMPTY;
        for i in s.members() {
            out = out.with(self.map[i]);
        }
        out
    }

    /// `self` after `earlier`: the composite `self . earlier`.
    pub fn compose(&self, earlier: &BaseMap) -> Result<BaseMap> {
        if earlier.codomain != self.domain {
            return Err(Error::BaseMismatch(
                "composition chain mismatch on bases".into(),
            ));
        }
        BaseMap::new(
            earlier.domain.clone(),
            self.codomain.clone(),
            earlier.map.iter().map(|&j| self.map[j]).collect(),
        )
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain.len() != self.codomain.len() {
            return false;
        }
        let mut seen = vec![false; self.codomain.len()];
        for &j in &self.map {
            if seen[j] {
                return false;
            }
            seen[j] = true;
        }
        true
    }

    pub fn inverse(&self) -> Option<BaseMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.domain.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(BaseMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            map: inv,
        })
    }
}

/// Extension of a base map to a coalition: the set of images of members.
pub fn hat_extend(map: &BaseMap, s: Coalition) -> Result<Coalition> {
    map.image(s)
}

/// A finite family of coalitions over one base. The empty coalition is a
/// legal member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    base: Base,
    coalitions: BTreeSet<Coalition>,
}

impl Complex {
    pub fn new<I: IntoIterator<Item = Coalition>>(base: Base, coalitions: I) -> Result<Self> {
        let coalitions: BTreeSet<Coalition> = coalitions.into_iter().collect();
        if let Some(bad) = coalitions.iter().find(|c| !c.fits(&base)) {
            return Err(Error::BaseMismatch(format!(
                "coalition {bad:?} does not fit a base of {} agents",
                base.len()
            )));
        }
        Ok(Complex { base, coalitions })
    }

    pub fn empty(base: Base) -> Self {
        Complex {
            base,
            coalitions: BTreeSet::new(),
        }
    }

    /// Builds a complex from lists of agent labels; `[]` is the empty
    /// coalition.
    pub fn from_labels<'a, I, J>(base: Base, coalitions: I) -> Result<Self>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = &'a str>,
    {
        let sets = coalitions
            .into_iter()
            .map(|c| base.coalition(c))
            .collect::<Result<Vec<_>>>()?;
        Complex::new(base, sets)
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn coalitions(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.coalitions.iter().copied()
    }

    pub fn contains(&self, c: Coalition) -> bool {
        self.coalitions.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.coalitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coalitions.is_empty()
    }

    pub fn is_subset_of(&self, other: &Complex) -> bool {
        self.coalitions.is_subset(&other.coalitions)
    }

    /// Union of all member coalitions.
    pub fn carrier(&self) -> Coalition {
        self.coalitions
            .iter()
            .fold(Coalition::EMPTY, |acc, c| acc.union(*c))
    }

    /// Members not strictly contained in another member.
    pub fn max_elements(&self) -> Complex {
        let maximal = self
            .coalitions
            .iter()
            .filter(|c| {
                !self
                    .coalitions
                    .iter()
                    .any(|d| *c != d && c.is_subset_of(*d))
            })
            .copied()
            .collect::<Vec<_>>();
        Complex {
            base: self.base.clone(),
            coalitions: maximal.into_iter().collect(),
        }
    }

    /// The smallest simplicial complex containing every nonempty member:
    /// all nonempty subsets of members. The empty coalition never appears
    /// in the result.
    pub fn downward_closure(&self) -> SimplicialComplex {
        let mut closed = BTreeSet::new();
        for m in self.max_elements().coalitions() {
            // Enumerate nonempty submasks of m.
            let full = m.bits();
            if full == 0 {
                continue;
            }
            let mut sub = full;
            loop {
                closed.insert(Coalition(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & full;
                if sub == 0 {
                    break;
                }
            }
        }
        SimplicialComplex(Complex {
            base: self.base.clone(),
            coalitions: closed,
        })
    }

    /// True when the complex is free of the empty coalition and closed
    /// under nonempty subsets.
    pub fn is_simplicial(&self) -> bool {
        if self.coalitions.contains(&Coalition::EMPTY) {
            return false;
        }
        self.coalitions
            .iter()
            .all(|s| s.len() < 2 || s.members().all(|i| self.coalitions.contains(&s.without(i))))
    }

    /// Member coalitions as label lists, in display order.
    pub fn label_lists(&self) -> Vec<Vec<&str>> {
        self.coalitions
            .iter()
            .map(|c| c.labels(&self.base))
            .collect()
    }
}

/// A complex that is free of the empty coalition and downward closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex(Complex);

impl SimplicialComplex {
    pub fn new(complex: Complex) -> Result<Self> {
        if !complex.is_simplicial() {
            return Err(Error::Precondition(
                "complex is not simplicial (empty member or missing face)".into(),
            ));
        }
        Ok(SimplicialComplex(complex))
    }

    pub fn empty(base: Base) -> Self {
        SimplicialComplex(Complex::empty(base))
    }

    pub fn complex(&self) -> &Complex {
        &self.0
    }

    pub fn into_complex(self) -> Complex {
        self.0
    }

    pub fn base(&self) -> &Base {
        self.0.base()
    }

    pub fn coalitions(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.0.coalitions()
    }

    pub fn contains(&self, c: Coalition) -> bool {
        self.0.contains(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn carrier(&self) -> Coalition {
        self.0.carrier()
    }

    pub fn max_elements(&self) -> Complex {
        self.0.max_elements()
    }
}

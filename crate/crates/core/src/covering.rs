//! Universes, subsets, coverings and neighborhoods.
//!
//! A [`Universe`] fixes an element order once; every vector and matrix in
//! the crate is indexed by it. A [`Covering`] is a list of distinct nonempty
//! blocks whose union is the universe. The neighborhood of `x` is the
//! intersection of all blocks that contain `x`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::boolmat::{BoolMatrix, BoolVector};
use crate::error::{Error, Result};

#[derive(Debug)]
struct UniverseInner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Ordered finite set of named elements. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Universe(Arc<UniverseInner>);

pub(crate) fn valid_element_name(name: &str) -> bool {
    !name.is_empty()
        && !name.starts_with('#')
        && !name
            .chars()
            .any(|c| c.is_whitespace() || c == ',' || c == '{' || c == '}')
}

impl Universe {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut ordered = Vec::new();
        let mut index = HashMap::new();
        for name in names {
            let name = name.as_ref();
            if !valid_element_name(name) {
                return Err(Error::InvalidElementName(name.to_owned()));
            }
            if index.insert(name.to_owned(), ordered.len()).is_some() {
                return Err(Error::DuplicateElement(name.to_owned()));
            }
            ordered.push(name.to_owned());
        }
        if ordered.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        Ok(Self(Arc::new(UniverseInner {
            names: ordered,
            index,
        })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    /// Always false; a universe has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet {
            universe: self.clone(),
            bits: BoolVector::zeros(self.len()),
        }
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet {
            universe: self.clone(),
            bits: BoolVector::ones(self.len()),
        }
    }

    /// The subset named by `names`.
    pub fn set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<ElementSet> {
        let mut s = self.empty_set();
        for n in names {
            let i = self.index_of(n.as_ref())?;
            s.bits.set(i, true);
        }
        Ok(s)
    }

    pub fn set_from_indices(&self, indices: impl IntoIterator<Item = usize>) -> ElementSet {
        ElementSet {
            universe: self.clone(),
            bits: BoolVector::from_indices(self.len(), indices),
        }
    }

    /// Subset whose bit `i` is bit `i` of `mask`. Requires `len() <= 64`.
    pub fn set_from_mask(&self, mask: u64) -> ElementSet {
        assert!(self.len() <= 64, "mask subsets need |U| <= 64");
        self.set_from_indices((0..self.len()).filter(|i| mask >> i & 1 == 1))
    }

    fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

/// A subset of a universe, stored as its characteristic vector.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementSet {
    universe: Universe,
    bits: BoolVector,
}

impl ElementSet {
    pub fn from_vector(universe: Universe, bits: BoolVector) -> Result<Self> {
        if bits.len() != universe.len() {
            return Err(Error::DimensionMismatch {
                left: format!("vector of length {}", bits.len()),
                right: format!("universe of size {}", universe.len()),
            });
        }
        Ok(Self { universe, bits })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn bits(&self) -> &BoolVector {
        &self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn contains_name(&self, name: &str) -> Result<bool> {
        Ok(self.bits.get(self.universe.index_of(name)?))
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones_iter()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.indices().map(|i| self.universe.name(i))
    }

    pub fn complement(&self) -> Self {
        Self {
            universe: self.universe.clone(),
            bits: self.bits.complement(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.assert_same_universe(other);
        Self {
            universe: self.universe.clone(),
            bits: self.bits.or(&other.bits),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.assert_same_universe(other);
        Self {
            universe: self.universe.clone(),
            bits: self.bits.and(&other.bits),
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.assert_same_universe(other);
        self.bits.intersects(&other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.assert_same_universe(other);
        self.bits.is_subset(&other.bits)
    }

    pub(crate) fn check_universe(&self, universe: &Universe) -> Result<()> {
        if &self.universe == universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn assert_same_universe(&self, other: &Self) {
        assert!(
            self.universe == other.universe,
            "set operation across different universes"
        );
    }
}

/// `{a, b, c}` in universe order, `{}` for the empty set.
impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, name) in self.names().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(name)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A validated covering of a universe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Covering {
    universe: Universe,
    blocks: Vec<ElementSet>,
}

/// Validates raw blocks given by element name and builds a covering.
///
/// Duplicate blocks are dropped, keeping the first occurrence.
pub fn build_covering<B, S>(universe: &Universe, raw_blocks: impl IntoIterator<Item = B>) -> Result<Covering>
where
    B: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let blocks = raw_blocks
        .into_iter()
        .map(|b| universe.set(b))
        .collect::<Result<Vec<_>>>()?;
    Covering::from_sets(universe, blocks)
}

impl Covering {
    pub fn from_sets(universe: &Universe, raw_blocks: Vec<ElementSet>) -> Result<Self> {
        let mut blocks: Vec<ElementSet> = Vec::with_capacity(raw_blocks.len());
        let mut union = universe.empty_set();
        for (index, b) in raw_blocks.into_iter().enumerate() {
            b.check_universe(universe)?;
            if b.is_empty() {
                return Err(Error::EmptyBlock { index });
            }
            union = union.union(&b);
            if !blocks.contains(&b) {
                blocks.push(b);
            }
        }
        let uncovered = union.complement();
        if !uncovered.is_empty() {
            return Err(Error::NotACovering {
                uncovered: uncovered.names().map(str::to_owned).collect(),
            });
        }
        Ok(Self {
            universe: universe.clone(),
            blocks,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    /// Intersection of the blocks containing element `i`.
    pub fn neighborhood_at(&self, i: usize) -> ElementSet {
        neighborhood_in(&self.universe, &self.blocks, i)
    }

    pub fn neighborhoods(&self) -> NeighborhoodSystem {
        NeighborhoodSystem::new(self)
    }
}

fn neighborhood_in(universe: &Universe, blocks: &[ElementSet], i: usize) -> ElementSet {
    blocks
        .iter()
        .filter(|b| b.contains(i))
        .fold(universe.full_set(), |acc, b| acc.intersection(b))
}

/// `N(x)` for the named element.
pub fn neighborhood(cov: &Covering, x: &str) -> Result<ElementSet> {
    let i = cov.universe.index_of(x)?;
    Ok(cov.neighborhood_at(i))
}

/// The covering made of the distinct neighborhoods, in order of first
/// appearance along the universe.
pub fn induced_covering(cov: &Covering) -> Covering {
    let nbhds = cov.neighborhoods().into_sets();
    Covering::from_sets(&cov.universe, nbhds).expect("neighborhoods always cover the universe")
}

/// Neighborhood of `x` computed inside the induced covering.
pub fn star_neighborhood(cov: &Covering, x: &str) -> Result<ElementSet> {
    neighborhood(&induced_covering(cov), x)
}

/// `n × m` matrix with entry `(i, j)` set iff `x_i ∈ C_j`.
pub fn membership_matrix(cov: &Covering) -> BoolMatrix {
    let n = cov.universe.len();
    BoolMatrix::from_fn(n, cov.blocks.len(), |i, j| cov.blocks[j].contains(i))
}

/// The map `x ↦ N(x)`, one entry per element in universe order.
#[derive(Clone, Debug)]
pub struct NeighborhoodSystem {
    sets: Vec<ElementSet>,
}

impl NeighborhoodSystem {
    pub fn new(cov: &Covering) -> Self {
        Self {
            sets: (0..cov.universe.len()).map(|i| cov.neighborhood_at(i)).collect(),
        }
    }

    pub fn get(&self, i: usize) -> &ElementSet {
        &self.sets[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementSet> + '_ {
        self.sets.iter()
    }

    /// Per-element neighborhoods, duplicates kept. This is the multiset
    /// view of the induced covering, matching the rows of `Π`.
    pub fn as_slice(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn into_sets(self) -> Vec<ElementSet> {
        self.sets
    }
}

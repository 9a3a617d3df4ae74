//! Universes, blocks and coverings.
//!
//! A [`Universe`] fixes the bit position of every element label. A [`Block`]
//! is a subset of a universe packed into one machine word, and a [`Covering`]
//! is a validated, duplicate-free family of nonempty blocks whose union is the
//! whole universe. Blocks inside a covering are kept in canonical order
//! (ascending by their bit pattern read as an unsigned integer, element 0 in
//! the lowest bit), so everything derived from a covering is deterministic.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest universe the single-word block representation can hold.
pub const MAX_UNIVERSE: usize = u64::BITS as usize;

/// An ordered, finite, nonempty set of distinct element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = labels.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if names.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: names.len(),
                max: MAX_UNIVERSE,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        Ok(Universe { names, index })
    }

    /// The universe `{1, 2, ..., n}` with labels written in decimal.
    pub fn numbered(n: usize) -> Result<Self> {
        Universe::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false for a constructed universe.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: Element) -> &str {
        &self.names[element.0]
    }

    pub fn element(&self, label: &str) -> Result<Element> {
        self.index
            .get(label)
            .map(|&i| Element(i))
            .ok_or_else(|| Error::UnknownElement(label.to_owned()))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.names.len()).map(Element)
    }

    /// The block containing every element.
    pub fn full_block(&self) -> Block {
        Block::full(self.len())
    }

    /// Labels of `block` in universe order.
    pub fn labels<'a>(&'a self, block: Block) -> impl Iterator<Item = &'a str> + 'a {
        block.elements().map(move |e| self.name(e))
    }

    /// Builds a block from element labels. An empty label list gives the
    /// empty bit pattern, which callers must reject where blocks have to be
    /// nonempty.
    pub fn block<S: AsRef<str>>(&self, labels: &[S]) -> Result<Block> {
        let mut bits = 0u64;
        for label in labels {
            let e = self.element(label.as_ref())?;
            bits |= 1 << e.0;
        }
        Ok(Block(bits))
    }

    /// Renders a block as `{a,b,c}`.
    pub fn show(&self, block: Block) -> String {
        let inner: Vec<&str> = self.labels(block).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// Position of an element inside its universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Anything that names an element of a universe: a label or a position.
pub trait ElementRef {
    fn resolve(&self, universe: &Universe) -> Result<Element>;
}

impl ElementRef for Element {
    fn resolve(&self, universe: &Universe) -> Result<Element> {
        if self.0 < universe.len() {
            Ok(*self)
        } else {
            Err(Error::UnknownElement(format!("#{}", self.0)))
        }
    }
}

impl ElementRef for str {
    fn resolve(&self, universe: &Universe) -> Result<Element> {
        universe.element(self)
    }
}

impl ElementRef for String {
    fn resolve(&self, universe: &Universe) -> Result<Element> {
        universe.element(self)
    }
}

impl<T: ElementRef + ?Sized> ElementRef for &T {
    fn resolve(&self, universe: &Universe) -> Result<Element> {
        (**self).resolve(universe)
    }
}

/// A subset of a universe of at most [`MAX_UNIVERSE`] elements.
///
/// Ordering is the canonical block order: the bit pattern compared as an
/// unsigned integer.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block(u64);

impl Block {
    pub const EMPTY: Block = Block(0);

    pub const fn from_bits(bits: u64) -> Self {
        Block(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        if n >= MAX_UNIVERSE {
            Block(u64::MAX)
        } else {
            Block((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: Element) -> Self {
        Block(1 << e.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: Element) -> bool {
        e.0 < MAX_UNIVERSE && self.0 >> e.0 & 1 == 1
    }

    pub fn union(self, other: Block) -> Block {
        Block(self.0 | other.0)
    }

    pub fn intersection(self, other: Block) -> Block {
        Block(self.0 & other.0)
    }

    pub fn is_subset(self, other: Block) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Block) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn is_disjoint(self, other: Block) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in ascending index order.
    pub fn elements(self) -> impl Iterator<Item = Element> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(Element(i))
        })
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements().map(|e| e.0)).finish()
    }
}

impl FromIterator<Element> for Block {
    fn from_iter<T: IntoIterator<Item = Element>>(iter: T) -> Self {
        Block(iter.into_iter().fold(0, |acc, e| acc | 1 << e.0))
    }
}

/// Union of a family of blocks; empty for an empty family.
pub fn union_of<I: IntoIterator<Item = Block>>(blocks: I) -> Block {
    blocks.into_iter().fold(Block::EMPTY, Block::union)
}

/// A covering of a finite universe.
///
/// Immutable once built. Two coverings are equal when they share a universe
/// (label for label) and have the same set of blocks.
#[derive(Clone, PartialEq, Eq)]
pub struct Covering {
    universe: Arc<Universe>,
    blocks: Vec<Block>,
}

impl Covering {
    /// Validates `subsets` against `universe` and builds a covering with its
    /// blocks in canonical order. Duplicate subsets are rejected.
    pub fn new<S: AsRef<str>>(universe: Universe, subsets: &[Vec<S>]) -> Result<Self> {
        Covering::with_shared(Arc::new(universe), subsets)
    }

    pub fn with_shared<S: AsRef<str>>(universe: Arc<Universe>, subsets: &[Vec<S>]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(subsets.len());
        for (i, subset) in subsets.iter().enumerate() {
            let block = universe.block(subset).map_err(|e| match e {
                Error::UnknownElement(label) => Error::UnknownElementInBlock { block: i, label },
                other => other,
            })?;
            if block.is_empty() {
                return Err(Error::EmptyBlock { block: i });
            }
            blocks.push(block);
        }
        Covering::from_blocks(universe, blocks)
    }

    /// Builds a covering from raw blocks, applying the same validation as
    /// [`Covering::new`]. Error indices refer to positions in `blocks`.
    pub fn from_blocks(universe: Arc<Universe>, blocks: Vec<Block>) -> Result<Self> {
        let full = universe.full_block();
        let mut seen: HashMap<Block, usize> = HashMap::with_capacity(blocks.len());
        for (i, &block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock { block: i });
            }
            if !block.is_subset(full) {
                let stray = block.intersection(Block(!full.0));
                let e = stray.elements().next().expect("nonempty");
                return Err(Error::UnknownElementInBlock {
                    block: i,
                    label: format!("#{}", e.0),
                });
            }
            if let Some(first) = seen.insert(block, i) {
                return Err(Error::DuplicateBlock { first, second: i });
            }
        }
        let covered = union_of(blocks.iter().copied());
        if covered != full {
            let missing = full
                .intersection(Block(!covered.0))
                .elements()
                .map(|e| universe.name(e).to_owned())
                .collect();
            return Err(Error::NotACover { missing });
        }
        let mut blocks = blocks;
        blocks.sort_unstable();
        Ok(Covering { universe, blocks })
    }

    /// Builds a covering from blocks already known to be valid, nonempty,
    /// distinct and in canonical order.
    pub(crate) fn from_canonical_unchecked(universe: Arc<Universe>, blocks: Vec<Block>) -> Self {
        debug_assert!(blocks.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(union_of(blocks.iter().copied()), universe.full_block());
        Covering { universe, blocks }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn shared_universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Blocks in canonical order.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Always false; a covering has at least one block.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains_block(&self, block: Block) -> bool {
        self.blocks.binary_search(&block).is_ok()
    }

    /// True when the blocks are pairwise disjoint.
    pub fn is_partition(&self) -> bool {
        // Disjoint blocks have sizes summing to the universe size exactly.
        self.blocks.iter().map(|b| b.len()).sum::<usize>() == self.universe.len()
    }

    /// Blocks containing `x`, in canonical order. Never empty.
    pub fn blocks_containing(&self, x: impl ElementRef) -> Result<Vec<Block>> {
        let x = x.resolve(&self.universe)?;
        Ok(self.blocks_containing_at(x).collect())
    }

    pub(crate) fn blocks_containing_at(&self, x: Element) -> impl Iterator<Item = Block> + '_ {
        self.blocks.iter().copied().filter(move |b| b.contains(x))
    }

    /// Labels of every block, in canonical block order and universe order
    /// within each block.
    pub fn labelled_blocks(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|&b| self.universe.labels(b).map(str::to_owned).collect())
            .collect()
    }

    pub fn show_block(&self, block: Block) -> String {
        self.universe.show(block)
    }

    pub fn to_file(&self) -> CoveringFile {
        CoveringFile {
            universe: self.universe.names().to_vec(),
            blocks: self.labelled_blocks(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("string-only document")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CoveringFile = serde_json::from_str(text)?;
        file.into_covering()
    }
}

impl fmt::Debug for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, &b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.universe.show(b))?;
        }
        f.write_str("}")
    }
}

/// Convenience wrapper for [`Covering::new`].
pub fn make_covering<S: AsRef<str>>(universe: Universe, subsets: &[Vec<S>]) -> Result<Covering> {
    Covering::new(universe, subsets)
}

/// On-disk covering document:
/// `{"universe": ["1","2","3"], "blocks": [["1"],["1","2"],["3"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringFile {
    pub universe: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

impl CoveringFile {
    pub fn into_covering(self) -> Result<Covering> {
        let universe = Universe::new(self.universe)?;
        Covering::new(universe, &self.blocks)
    }
}

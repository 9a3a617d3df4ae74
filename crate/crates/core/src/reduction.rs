//! Reducible elements, reducts and invariable coverings.
//!
//! A block is reducible when it is the union of other blocks of the covering.
//! Only blocks strictly inside `K` can take part in such a union, so `K` is
//! reducible exactly when the union of its proper-subset blocks is `K`
//! itself; no subfamily search is needed.
//!
//! A covering is invariable when it is irreducible and every element has a
//! core block. Invariable coverings are precisely the fixed points of `Cov`.

use crate::degrees::CoreBlockAssignment;
use crate::error::{Error, Result};
use crate::setsys::{union_of, Block, Covering, Element};

/// Proper-subset blocks of `k` among `blocks`, when their union is `k`.
pub(crate) fn witness_in(blocks: &[Block], k: Block) -> Option<Vec<Block>> {
    let parts: Vec<Block> = blocks
        .iter()
        .copied()
        .filter(|b| b.is_proper_subset(k))
        .collect();
    (union_of(parts.iter().copied()) == k).then_some(parts)
}

/// A witness family of other blocks whose union is `k`, or `None` when `k`
/// is irreducible.
pub fn is_reducible_element(c: &Covering, k: Block) -> Result<Option<Vec<Block>>> {
    if !c.contains_block(k) {
        return Err(Error::BlockNotInCovering);
    }
    Ok(witness_in(c.blocks(), k))
}

pub fn is_irreducible(c: &Covering) -> bool {
    c.blocks()
        .iter()
        .all(|&k| witness_in(c.blocks(), k).is_none())
}

/// Reducibility status of one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockStatus {
    Irreducible,
    Reducible { witness: Vec<Block> },
}

impl BlockStatus {
    pub fn witness(&self) -> Option<&[Block]> {
        match self {
            BlockStatus::Irreducible => None,
            BlockStatus::Reducible { witness } => Some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibilityReport {
    /// One entry per block, in canonical block order.
    pub per_block: Vec<(Block, BlockStatus)>,
    pub is_irreducible_covering: bool,
}

impl ReducibilityReport {
    pub fn new(c: &Covering) -> Self {
        let per_block: Vec<(Block, BlockStatus)> = c
            .blocks()
            .iter()
            .map(|&k| {
                let status = match witness_in(c.blocks(), k) {
                    Some(witness) => BlockStatus::Reducible { witness },
                    None => BlockStatus::Irreducible,
                };
                (k, status)
            })
            .collect();
        let is_irreducible_covering = per_block
            .iter()
            .all(|(_, s)| *s == BlockStatus::Irreducible);
        ReducibilityReport {
            per_block,
            is_irreducible_covering,
        }
    }

    pub fn reducible_blocks(&self) -> impl Iterator<Item = Block> + '_ {
        self.per_block
            .iter()
            .filter(|(_, s)| s.witness().is_some())
            .map(|(b, _)| *b)
    }
}

/// Removes reducible blocks one at a time, lowest canonical position first,
/// until none remain. `Cov` of the result equals `Cov` of the input.
pub fn reduct(c: &Covering) -> Covering {
    let mut blocks = c.blocks().to_vec();
    while let Some(pos) = blocks
        .iter()
        .position(|&k| witness_in(&blocks, k).is_some())
    {
        blocks.remove(pos);
    }
    // Removing a reducible block leaves the union and the order unchanged.
    Covering::from_canonical_unchecked(c.shared_universe().clone(), blocks)
}

/// Outcome of the invariable-covering test, with the reasons it failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariableVerdict {
    pub reducible_blocks: Vec<Block>,
    pub elements_without_core: Vec<Element>,
}

impl InvariableVerdict {
    pub fn is_invariable(&self) -> bool {
        self.reducible_blocks.is_empty() && self.elements_without_core.is_empty()
    }
}

/// Irreducible, and every element has a core block.
pub fn is_invariable(c: &Covering) -> InvariableVerdict {
    let reducible_blocks = ReducibilityReport::new(c).reducible_blocks().collect();
    let elements_without_core = CoreBlockAssignment::new(c)
        .elements_without_core()
        .collect();
    InvariableVerdict {
        reducible_blocks,
        elements_without_core,
    }
}

//! Neighborhoods induced by a covering.
//!
//! `N(x)` is the intersection of every block containing `x`; `Cov(C)` is the
//! set of all neighborhoods. `Cov` is idempotent, and a covering is the
//! neighborhoods of some covering exactly when it is a fixed point of `Cov`.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::reduction;
use crate::setsys::{Block, Covering, Element, ElementRef};

/// Per-element neighborhoods together with the deduplicated family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodMap {
    covering: Covering,
    per_element: Vec<Block>,
    family: Covering,
}

impl NeighborhoodMap {
    pub fn new(c: &Covering) -> Self {
        let per_element: Vec<Block> = c
            .universe()
            .elements()
            .map(|x| neighborhood_at(c, x))
            .collect();
        let mut family = per_element.clone();
        family.sort_unstable();
        family.dedup();
        NeighborhoodMap {
            covering: c.clone(),
            per_element,
            family: Covering::from_canonical_unchecked(c.shared_universe().clone(), family),
        }
    }

    /// The covering the neighborhoods were computed from.
    pub fn covering(&self) -> &Covering {
        &self.covering
    }

    /// `N(x)` for every element, indexed by element position.
    pub fn per_element(&self) -> &[Block] {
        &self.per_element
    }

    pub fn get(&self, x: Element) -> Block {
        self.per_element[x.index()]
    }

    /// `Cov(C)`.
    pub fn family(&self) -> &Covering {
        &self.family
    }

    pub fn into_family(self) -> Covering {
        self.family
    }
}

pub(crate) fn neighborhood_at(c: &Covering, x: Element) -> Block {
    c.blocks_containing_at(x)
        .fold(c.universe().full_block(), Block::intersection)
}

/// Intersection of all blocks of `c` containing `x`.
pub fn neighborhood(c: &Covering, x: impl ElementRef) -> Result<Block> {
    let x = x.resolve(c.universe())?;
    Ok(neighborhood_at(c, x))
}

/// The neighborhoods `Cov(C)` as a covering of the same universe.
pub fn cov(c: &Covering) -> Covering {
    NeighborhoodMap::new(c).into_family()
}

/// True when `Cov(C) = C`, i.e. `c` is the neighborhoods of some covering.
pub fn is_cov_fixed_point(c: &Covering) -> bool {
    // Canonical order makes list equality set equality.
    let per_element = c.universe().elements().map(|x| neighborhood_at(c, x));
    let mut seen: Vec<Block> = per_element.collect();
    seen.sort_unstable();
    seen.dedup();
    seen == c.blocks()
}

/// A necessary condition for being a neighborhoods that `c` fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum RejectReason {
    /// More blocks than elements.
    TooManyBlocks { blocks: usize, elements: usize },
    /// Some block is a union of other blocks.
    ReducibleBlock {
        #[serde(skip)]
        block: Block,
    },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::TooManyBlocks { blocks, elements } => {
                write!(f, "too many blocks ({blocks} blocks, {elements} elements)")
            }
            RejectReason::ReducibleBlock { .. } => {
                f.write_str("a block is a union of other blocks")
            }
        }
    }
}

/// Cheap necessary-condition screen run before computing `Cov`.
///
/// Checks the block count first, then reducibility; reports only the first
/// failing condition. Returning a reason implies `c` is not a fixed point.
pub fn quick_reject_neighborhoods(c: &Covering) -> Option<RejectReason> {
    let blocks = c.len();
    let elements = c.universe().len();
    if blocks > elements {
        return Some(RejectReason::TooManyBlocks { blocks, elements });
    }
    c.blocks()
        .iter()
        .copied()
        .find(|&k| reduction::witness_in(c.blocks(), k).is_some())
        .map(|block| RejectReason::ReducibleBlock { block })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setsys::{make_covering, Universe};

    fn cover(n: usize, subsets: &[&[&str]]) -> Covering {
        let subsets: Vec<Vec<&str>> = subsets.iter().map(|s| s.to_vec()).collect();
        make_covering(Universe::numbered(n).unwrap(), &subsets).unwrap()
    }

    fn blk(c: &Covering, labels: &[&str]) -> Block {
        c.universe().block(labels).unwrap()
    }

    #[test]
    fn example3_neighborhoods() {
        let c = cover(3, &[&["1"], &["1", "2"], &["3"]]);
        assert_eq!(neighborhood(&c, "1").unwrap(), blk(&c, &["1"]));
        assert_eq!(neighborhood(&c, "2").unwrap(), blk(&c, &["1", "2"]));
        assert_eq!(neighborhood(&c, "3").unwrap(), blk(&c, &["3"]));
        assert_eq!(cov(&c), c);
        assert!(is_cov_fixed_point(&c));
        assert_eq!(quick_reject_neighborhoods(&c), None);
    }

    #[test]
    fn partition_neighborhood_is_its_block() {
        let c = cover(4, &[&["1", "3"], &["2"], &["4"]]);
        assert_eq!(neighborhood(&c, "3").unwrap(), blk(&c, &["1", "3"]));
        assert!(is_cov_fixed_point(&c));
    }

    #[test]
    fn example20_is_not_a_fixed_point() {
        let c = cover(3, &[&["1", "2"], &["2", "3"]]);
        assert_eq!(neighborhood(&c, "2").unwrap(), blk(&c, &["2"]));
        assert!(!is_cov_fixed_point(&c));
        assert_eq!(cov(&c), cover(3, &[&["1", "2"], &["2"], &["2", "3"]]));
    }

    #[test]
    fn cov_of_examples_12_and_14() {
        let c14 = cover(3, &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        assert_eq!(cov(&c14), cover(3, &[&["1"], &["2"], &["3"]]));
        let c12 = cover(4, &[&["1", "2"], &["1", "2", "3"], &["3", "4"]]);
        assert_eq!(cov(&c12), cover(4, &[&["1", "2"], &["3"], &["3", "4"]]));
    }

    #[test]
    fn neighborhood_map_keeps_per_element_values() {
        let c = cover(3, &[&["1", "2"], &["2", "3"]]);
        let map = NeighborhoodMap::new(&c);
        assert_eq!(map.per_element().len(), 3);
        assert_eq!(map.get(Element(0)), blk(&c, &["1", "2"]));
        assert_eq!(map.family().len(), 3);
    }

    #[test]
    fn unknown_element() {
        let c = cover(2, &[&["1", "2"]]);
        assert!(neighborhood(&c, "x").is_err());
    }

    #[test]
    fn quick_reject_reasons() {
        let c19 = cover(3, &[&["1"], &["2"], &["3"], &["1", "2"]]);
        assert_eq!(
            quick_reject_neighborhoods(&c19),
            Some(RejectReason::TooManyBlocks {
                blocks: 4,
                elements: 3
            })
        );
        // Both conditions fail here; the count is reported.
        let both = cover(2, &[&["1"], &["2"], &["1", "2"]]);
        assert!(matches!(
            quick_reject_neighborhoods(&both),
            Some(RejectReason::TooManyBlocks {
                blocks: 3,
                elements: 2
            })
        ));
        let reducible = cover(3, &[&["1"], &["2"], &["1", "2", "3"]]);
        // {1,2,3} is not a union of {1},{2}; irreducible and 3 blocks.
        assert_eq!(quick_reject_neighborhoods(&reducible), None);
        let reducible = cover(4, &[&["1"], &["2"], &["1", "2"], &["3", "4"]]);
        assert_eq!(
            quick_reject_neighborhoods(&reducible),
            Some(RejectReason::ReducibleBlock {
                block: blk(&reducible, &["1", "2"])
            })
        );
    }
}

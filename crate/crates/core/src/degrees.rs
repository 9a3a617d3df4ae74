//! Repeat degrees and core blocks.
//!
//! The membership repeat degree of `x` counts the blocks containing `x`; the
//! common block repeat degree of `(x, y)` counts the blocks containing both.
//! A core block of `x` is a block `K` with `x ∈ K` such that every `y ∈ K`
//! shares all of `x`'s blocks. It exists at most once per element and, when
//! it exists, equals the intersection of all blocks containing `x`.

use crate::error::Result;
use crate::neighborhoods::neighborhood_at;
use crate::setsys::{Block, Covering, Element, ElementRef};

/// Number of blocks of `c` containing `x`. At least 1.
pub fn membership_repeat_degree(c: &Covering, x: impl ElementRef) -> Result<usize> {
    let x = x.resolve(c.universe())?;
    Ok(membership_at(c, x))
}

/// Number of blocks of `c` containing both `x` and `y`. Equal to the
/// membership degree when `x == y`.
pub fn common_block_repeat_degree(
    c: &Covering,
    x: impl ElementRef,
    y: impl ElementRef,
) -> Result<usize> {
    let x = x.resolve(c.universe())?;
    let y = y.resolve(c.universe())?;
    Ok(common_at(c, x, y))
}

pub(crate) fn membership_at(c: &Covering, x: Element) -> usize {
    c.blocks_containing_at(x).count()
}

pub(crate) fn common_at(c: &Covering, x: Element, y: Element) -> usize {
    let pair = Block::singleton(x).union(Block::singleton(y));
    c.blocks().iter().filter(|b| pair.is_subset(**b)).count()
}

/// The core block of `x`, if `x` has one.
pub fn core_block(c: &Covering, x: impl ElementRef) -> Result<Option<Block>> {
    let x = x.resolve(c.universe())?;
    Ok(core_block_at(c, x))
}

pub(crate) fn core_block_at(c: &Covering, x: Element) -> Option<Block> {
    let meet = neighborhood_at(c, x);
    c.contains_block(meet).then_some(meet)
}

/// Blocks that are the core block of no element, in canonical order.
pub fn non_core_blocks(c: &Covering) -> Vec<Block> {
    let cores = CoreBlockAssignment::new(c);
    c.blocks()
        .iter()
        .copied()
        .filter(|b| !cores.is_core(*b))
        .collect()
}

/// `∂` for every element and the full symmetric `λ` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    membership: Vec<usize>,
    common: Vec<Vec<usize>>,
}

impl DegreeProfile {
    pub fn new(c: &Covering) -> Self {
        let n = c.universe().len();
        let membership = (0..n).map(|i| membership_at(c, Element(i))).collect();
        let mut common = vec![vec![0; n]; n];
        for &b in c.blocks() {
            for x in b.elements() {
                for y in b.elements() {
                    common[x.index()][y.index()] += 1;
                }
            }
        }
        DegreeProfile { membership, common }
    }

    pub fn membership(&self, x: Element) -> usize {
        self.membership[x.index()]
    }

    pub fn common(&self, x: Element, y: Element) -> usize {
        self.common[x.index()][y.index()]
    }

    pub fn membership_degrees(&self) -> &[usize] {
        &self.membership
    }

    /// Row-major `λ` matrix indexed by element position.
    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.common
    }
}

/// The core block of each element, and the set of blocks that are the core
/// block of at least one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreBlockAssignment {
    per_element: Vec<Option<Block>>,
    core_blocks: Vec<Block>,
}

impl CoreBlockAssignment {
    pub fn new(c: &Covering) -> Self {
        let per_element: Vec<Option<Block>> = c
            .universe()
            .elements()
            .map(|x| core_block_at(c, x))
            .collect();
        let mut core_blocks: Vec<Block> = per_element.iter().flatten().copied().collect();
        core_blocks.sort_unstable();
        core_blocks.dedup();
        CoreBlockAssignment {
            per_element,
            core_blocks,
        }
    }

    pub fn get(&self, x: Element) -> Option<Block> {
        self.per_element[x.index()]
    }

    pub fn per_element(&self) -> &[Option<Block>] {
        &self.per_element
    }

    /// Distinct core blocks in canonical order.
    pub fn core_blocks(&self) -> &[Block] {
        &self.core_blocks
    }

    pub fn is_core(&self, block: Block) -> bool {
        self.core_blocks.binary_search(&block).is_ok()
    }

    /// Elements whose core block is `block`, in universe order.
    pub fn elements_with_core(&self, block: Block) -> impl Iterator<Item = Element> + '_ {
        self.per_element
            .iter()
            .enumerate()
            .filter(move |(_, b)| **b == Some(block))
            .map(|(i, _)| Element(i))
    }

    pub fn elements_without_core(&self) -> impl Iterator<Item = Element> + '_ {
        self.per_element
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_none())
            .map(|(i, _)| Element(i))
    }

    pub fn every_element_has_core(&self) -> bool {
        self.per_element.iter().all(Option::is_some)
    }
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
    fn example4_membership() {
        let c = cover(3, &[&["1", "2"], &["2", "3"]]);
        assert_eq!(membership_repeat_degree(&c, "1").unwrap(), 1);
        assert_eq!(membership_repeat_degree(&c, "2").unwrap(), 2);
        assert_eq!(membership_repeat_degree(&c, "3").unwrap(), 1);
    }

    #[test]
    fn example12_membership_of_3() {
        let c = cover(4, &[&["1", "2"], &["1", "2", "3"], &["3", "4"]]);
        assert_eq!(membership_repeat_degree(&c, "3").unwrap(), 2);
    }

    #[test]
    fn partition_membership_is_one() {
        let c = cover(4, &[&["1", "4"], &["2", "3"]]);
        for x in c.universe().elements() {
            assert_eq!(membership_repeat_degree(&c, x).unwrap(), 1);
        }
    }

    #[test]
    fn example5_common_degrees() {
        let c = cover(4, &[&["1", "2"], &["2", "3", "4"], &["3", "4"]]);
        let lam = |x, y| common_block_repeat_degree(&c, x, y).unwrap();
        assert_eq!(lam("1", "2"), 1);
        assert_eq!(lam("2", "3"), 1);
        assert_eq!(lam("2", "4"), 1);
        assert_eq!(lam("1", "3"), 0);
        assert_eq!(lam("1", "4"), 0);
        assert_eq!(lam("3", "4"), 2);
        assert_eq!(lam("2", "2"), 2);
        let profile = DegreeProfile::new(&c);
        assert_eq!(profile.common(Element(2), Element(3)), 2);
        assert_eq!(profile.membership_degrees(), &[1, 2, 2, 2]);
    }

    #[test]
    fn example12_core_blocks() {
        let c = cover(4, &[&["1", "2"], &["1", "2", "3"], &["3", "4"]]);
        let k1 = blk(&c, &["1", "2"]);
        let k3 = blk(&c, &["3", "4"]);
        assert_eq!(core_block(&c, "1").unwrap(), Some(k1));
        assert_eq!(core_block(&c, "2").unwrap(), Some(k1));
        assert_eq!(core_block(&c, "3").unwrap(), None);
        assert_eq!(core_block(&c, "4").unwrap(), Some(k3));
        assert_eq!(non_core_blocks(&c), vec![blk(&c, &["1", "2", "3"])]);
        let cores = CoreBlockAssignment::new(&c);
        assert_eq!(
            cores.elements_with_core(k1).collect::<Vec<_>>(),
            vec![Element(0), Element(1)]
        );
        assert_eq!(
            cores.elements_without_core().collect::<Vec<_>>(),
            vec![Element(2)]
        );
    }

    #[test]
    fn example14_has_no_core_blocks() {
        let c = cover(3, &[&["1", "2"], &["2", "3"], &["1", "3"]]);
        assert_eq!(non_core_blocks(&c), c.blocks().to_vec());
        assert!(c
            .universe()
            .elements()
            .all(|x| core_block(&c, x).unwrap().is_none()));
    }

    #[test]
    fn example20_element_2_lacks_a_core_block() {
        let c = cover(3, &[&["1", "2"], &["2", "3"]]);
        assert_eq!(core_block(&c, "1").unwrap(), Some(blk(&c, &["1", "2"])));
        assert_eq!(core_block(&c, "2").unwrap(), None);
        assert_eq!(core_block(&c, "3").unwrap(), Some(blk(&c, &["2", "3"])));
    }

    #[test]
    fn partitions_have_no_non_core_blocks() {
        let c = cover(5, &[&["1", "2"], &["3"], &["4", "5"]]);
        assert!(non_core_blocks(&c).is_empty());
    }

    #[test]
    fn unknown_elements_are_errors() {
        let c = cover(2, &[&["1", "2"]]);
        assert!(membership_repeat_degree(&c, "3").is_err());
        assert!(common_block_repeat_degree(&c, "1", "3").is_err());
        assert!(core_block(&c, Element(9)).is_err());
    }
}

//! Randomized checks on universes larger than the exhaustive range.

use proptest::prelude::*;
use rough_cover::oracle::{check_laws, CensusRow};
use rough_cover::{
    core_block, cov, is_cov_fixed_point, is_invariable, neighborhood, quick_reject_neighborhoods,
    reduct, Block, Covering, Universe,
};
use std::sync::Arc;

/// Random covering of `{1..n}`: random blocks plus singletons for any
/// element left uncovered.
fn covering(max_n: usize) -> impl Strategy<Value = Covering> {
    (1..=max_n).prop_flat_map(|n| {
        let full = (1u64 << n) - 1;
        prop::collection::vec(1..=full, 1..12).prop_map(move |masks| {
            let mut blocks: Vec<Block> = masks.into_iter().map(Block::from_bits).collect();
            let covered = blocks.iter().fold(0, |acc, b| acc | b.bits());
            let mut rest = full & !covered;
            while rest != 0 {
                blocks.push(Block::from_bits(rest & rest.wrapping_neg()));
                rest &= rest - 1;
            }
            blocks.sort_unstable();
            blocks.dedup();
            Covering::from_blocks(Arc::new(Universe::numbered(n).unwrap()), blocks).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn file_round_trip(c in covering(10)) {
        let back = Covering::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn input_order_does_not_matter(c in covering(8), seed in any::<u64>()) {
        let mut doc = c.to_file();
        let len = doc.blocks.len();
        doc.blocks.rotate_left(seed as usize % len);
        doc.blocks.reverse();
        prop_assert_eq!(doc.into_covering().unwrap(), c);
    }

    #[test]
    fn every_element_is_covered(c in covering(10)) {
        for x in c.universe().elements() {
            prop_assert!(!c.blocks_containing(x).unwrap().is_empty());
        }
    }

    #[test]
    fn neighborhoods_nest(c in covering(10)) {
        for x in c.universe().elements() {
            let nx = neighborhood(&c, x).unwrap();
            prop_assert!(nx.contains(x));
            for y in nx.elements() {
                prop_assert!(neighborhood(&c, y).unwrap().is_subset(nx));
            }
        }
    }

    #[test]
    fn cov_is_idempotent(c in covering(10)) {
        let image = cov(&c);
        prop_assert!(is_cov_fixed_point(&image));
        prop_assert_eq!(cov(&image), image);
    }

    #[test]
    fn invariable_iff_fixed_point(c in covering(10)) {
        prop_assert_eq!(is_invariable(&c).is_invariable(), is_cov_fixed_point(&c));
        if quick_reject_neighborhoods(&c).is_some() {
            prop_assert!(!is_cov_fixed_point(&c));
        }
    }

    #[test]
    fn reduct_keeps_neighborhoods(c in covering(10)) {
        let r = reduct(&c);
        prop_assert_eq!(cov(&r), cov(&c));
        prop_assert!(r.blocks().iter().all(|b| c.contains_block(*b)));
    }

    #[test]
    fn core_block_is_the_neighborhood(c in covering(10)) {
        for x in c.universe().elements() {
            if let Some(core) = core_block(&c, x).unwrap() {
                prop_assert_eq!(core, neighborhood(&c, x).unwrap());
            }
        }
    }

    #[test]
    fn full_law_set_on_six_elements(c in covering(6)) {
        let failed = check_laws(&CensusRow::new(c));
        prop_assert!(failed.is_empty(), "{:?}", failed);
    }
}

#[test]
fn law_checker_flags_a_corrupted_row() {
    let c = Covering::from_json(r#"{"universe":["1","2","3"],"blocks":[["1","2"],["2","3"]]}"#)
        .unwrap();
    let mut row = CensusRow::new(c);
    assert!(check_laws(&row).is_empty());
    row.is_invariable = true;
    let laws: Vec<_> = check_laws(&row).into_iter().map(|(law, _)| law).collect();
    assert!(
        laws.contains(&rough_cover::oracle::Law::InvariableIffFixedPoint),
        "{laws:?}"
    );
    assert!(
        laws.contains(&rough_cover::oracle::Law::InvariableByCoreBlocks),
        "{laws:?}"
    );
}

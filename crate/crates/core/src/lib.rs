//! Covering-based rough sets on finite universes.
//!
//! Coverings are families of nonempty subsets whose union is the universe.
//! This crate computes the neighborhood of each element (the intersection of
//! the blocks containing it), repeat degrees, core blocks and reducible
//! blocks, decides when a covering equals its own neighborhoods, and checks
//! all of this exhaustively on small universes.
//!
//! ```
//! use rough_cover::{cov, is_cov_fixed_point, Covering};
//!
//! let c = Covering::from_json(r#"{"universe":["1","2","3"],"blocks":[["1"],["1","2"],["3"]]}"#)?;
//! assert!(!c.is_partition());
//! assert!(is_cov_fixed_point(&c));
//! assert_eq!(cov(&c), c);
//! # Ok::<(), rough_cover::Error>(())
//! ```

pub mod cli;
pub mod degrees;
mod error;
pub mod neighborhoods;
pub mod oracle;
pub mod reduction;
pub mod setsys;

pub use degrees::{
    common_block_repeat_degree, core_block, membership_repeat_degree, non_core_blocks,
    CoreBlockAssignment, DegreeProfile,
};
pub use error::{Error, Result};
pub use neighborhoods::{
    cov, is_cov_fixed_point, neighborhood, quick_reject_neighborhoods, NeighborhoodMap,
    RejectReason,
};
pub use oracle::{enumerate_coverings, preimages, verify_laws, CensusRow, VerificationSummary};
pub use reduction::{
    is_invariable, is_reducible_element, reduct, InvariableVerdict, ReducibilityReport,
};
pub use setsys::{make_covering, Block, Covering, CoveringFile, Element, ElementRef, Universe};

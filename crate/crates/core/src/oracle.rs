//! Exhaustive checking on small universes.
//!
//! Every covering of an `n`-element universe is a family of nonempty subsets
//! whose union is the universe. With the `2^n - 1` nonempty subsets numbered
//! by their own bit pattern minus one, a family is an integer mask and the
//! coverings are exactly the masks whose selected subsets union to the full
//! block. [`enumerate_coverings`] walks those masks in ascending order.
//!
//! [`verify_laws`] runs every structural law over that stream and reports
//! counts plus any counterexample found. [`preimages`] answers the inverse
//! question: which coverings have a given family as their neighborhoods.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::degrees::{CoreBlockAssignment, DegreeProfile};
use crate::error::{Error, Result};
use crate::neighborhoods::{cov, quick_reject_neighborhoods, NeighborhoodMap};
use crate::reduction::{is_invariable, reduct, witness_in, ReducibilityReport};
use crate::setsys::{union_of, Block, Covering, Element, Universe};

/// Largest universe [`enumerate_coverings`] accepts.
pub const MAX_ENUMERATION_SIZE: usize = 5;
/// Largest universe [`verify_laws`] runs on without `allow_large`.
pub const MAX_VERIFY_SIZE: usize = 4;
/// Largest universe [`preimages`] searches.
pub const MAX_PREIMAGE_SIZE: usize = 4;

/// Families with more blocks than this skip the subfamily-union check.
const NO_UNION_LIMIT: usize = 12;

fn too_large(size: usize, max: usize) -> Error {
    Error::UniverseTooLarge { size, max }
}

/// Stream of every covering of a universe, ordered by family mask.
pub struct CoveringEnumerator {
    universe: Arc<Universe>,
    full: u64,
    next: u64,
    end: u64,
}

impl CoveringEnumerator {
    fn new(universe: Arc<Universe>, start: u64, end: u64) -> Self {
        let full = universe.full_block().bits();
        CoveringEnumerator {
            universe,
            full,
            next: start,
            end,
        }
    }

    fn family_count(n: usize) -> u64 {
        1u64 << ((1u64 << n) - 1)
    }
}

impl Iterator for CoveringEnumerator {
    type Item = Covering;

    fn next(&mut self) -> Option<Covering> {
        while self.next < self.end {
            let family = self.next;
            self.next += 1;
            if family_union(family) == self.full {
                return Some(family_covering(&self.universe, family));
            }
        }
        None
    }
}

/// Subset with bit pattern `b` sits at position `b - 1` of a family mask.
fn family_union(family: u64) -> u64 {
    let mut rest = family;
    let mut acc = 0;
    while rest != 0 {
        acc |= rest.trailing_zeros() as u64 + 1;
        rest &= rest - 1;
    }
    acc
}

fn family_blocks(family: u64) -> impl Iterator<Item = Block> {
    let mut rest = family;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let b = rest.trailing_zeros() as u64 + 1;
        rest &= rest - 1;
        Some(Block::from_bits(b))
    })
}

fn family_covering(universe: &Arc<Universe>, family: u64) -> Covering {
    Covering::from_canonical_unchecked(universe.clone(), family_blocks(family).collect())
}

/// Family mask of a covering over a universe of at most five elements.
fn family_key(c: &Covering) -> u64 {
    c.blocks()
        .iter()
        .fold(0, |acc, b| acc | 1 << (b.bits() - 1))
}

/// All coverings of `{1, ..., n}`, `1 ≤ n ≤ 5`.
pub fn enumerate_coverings(n: usize) -> Result<CoveringEnumerator> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(too_large(n, MAX_ENUMERATION_SIZE));
    }
    enumerate_coverings_of(Arc::new(Universe::numbered(n)?))
}

/// All coverings of the given universe, at most five elements.
pub fn enumerate_coverings_of(universe: Arc<Universe>) -> Result<CoveringEnumerator> {
    let n = universe.len();
    if n > MAX_ENUMERATION_SIZE {
        return Err(too_large(n, MAX_ENUMERATION_SIZE));
    }
    let end = CoveringEnumerator::family_count(n);
    Ok(CoveringEnumerator::new(universe, 1, end))
}

/// One covering with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub covering: Covering,
    pub is_partition: bool,
    pub is_irreducible: bool,
    pub is_invariable: bool,
    pub is_cov_fixed_point: bool,
    pub cov_image: Covering,
}

impl CensusRow {
    pub fn new(covering: Covering) -> Self {
        let cov_image = cov(&covering);
        let invariable = is_invariable(&covering);
        CensusRow {
            is_partition: covering.is_partition(),
            is_irreducible: invariable.reducible_blocks.is_empty(),
            is_invariable: invariable.is_invariable(),
            is_cov_fixed_point: cov_image == covering,
            cov_image,
            covering,
        }
    }
}

/// Classified rows for every covering of `{1, ..., n}`.
pub fn census(n: usize) -> Result<impl Iterator<Item = CensusRow>> {
    Ok(enumerate_coverings(n)?.map(CensusRow::new))
}

/// A law checked by [`verify_laws`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// Enumerated families pass covering validation.
    EnumerationValid,
    /// `x ∈ N(x)`.
    Reflexivity,
    /// `y ∈ N(x) ⟹ N(y) ⊆ N(x)`, and mutual membership gives equality.
    MonotoneNesting,
    /// No block of `Cov(C)` is a union of other blocks of `Cov(C)`.
    NoUnion,
    /// `Cov(Cov(C)) = Cov(C)`.
    CovIdempotent,
    /// A family has a preimage under `Cov` iff it is a fixed point.
    PreimageIffFixedPoint,
    /// A quick rejection implies not a fixed point.
    QuickRejectSound,
    /// `∂(x) ≥ 1` and `λ(x,x) = ∂(x)`.
    DegreeBasics,
    /// `λ` is symmetric and bounded by `min(∂(x), ∂(y))`.
    CommonDegreeBound,
    /// `∂(x) = λ(x,y)` iff the blocks containing `x` all contain `y`.
    DegreeEquivalence,
    /// At most one block satisfies the core block definition.
    CoreBlockUnique,
    /// Definitional and intersection routes to the core block agree.
    CoreBlockIntersection,
    /// The core block lies inside every block containing its element.
    CoreBlockMinimal,
    /// Non-core blocks have size > 1 and only elements of degree > 1.
    NonCoreStructure,
    /// A core block equals the element's neighborhood.
    CoreBlockIsNeighborhood,
    /// Reducible blocks are not core blocks.
    ReducibleNotCore,
    /// With every element having a core block, non-core blocks are reducible.
    NonCoreReducible,
    /// Invariable iff every element has a core block and every block is one.
    InvariableByCoreBlocks,
    /// Invariable iff `Cov(C) = C`.
    InvariableIffFixedPoint,
    /// Partitions are fixed points.
    PartitionFixedPoint,
    /// `Cov(reduct(C)) = Cov(C)`.
    ReductPreservesCov,
    /// Every removal order of reducible blocks ends at the same covering.
    ReductOrderIndependent,
}

impl Law {
    pub const ALL: [Law; 22] = [
        Law::EnumerationValid,
        Law::Reflexivity,
        Law::MonotoneNesting,
        Law::NoUnion,
        Law::CovIdempotent,
        Law::PreimageIffFixedPoint,
        Law::QuickRejectSound,
        Law::DegreeBasics,
        Law::CommonDegreeBound,
        Law::DegreeEquivalence,
        Law::CoreBlockUnique,
        Law::CoreBlockIntersection,
        Law::CoreBlockMinimal,
        Law::NonCoreStructure,
        Law::CoreBlockIsNeighborhood,
        Law::ReducibleNotCore,
        Law::NonCoreReducible,
        Law::InvariableByCoreBlocks,
        Law::InvariableIffFixedPoint,
        Law::PartitionFixedPoint,
        Law::ReductPreservesCov,
        Law::ReductOrderIndependent,
    ];
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

/// A covering on which a law failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(serialize_with = "serialize_blocks")]
    pub covering: Covering,
    pub law: Law,
    pub detail: String,
}

fn serialize_blocks<S: Serializer>(c: &Covering, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.labelled_blocks().serialize(s)
}

/// Counts and counterexamples from one exhaustive run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    #[serde(rename = "n")]
    pub universe_size: usize,
    #[serde(rename = "total")]
    pub total_coverings: u64,
    pub partitions: u64,
    pub irreducible: u64,
    pub invariable: u64,
    pub fixed_points: u64,
    pub violations: Vec<Violation>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn absorb(&mut self, other: Partial) {
        self.total_coverings += other.total;
        self.partitions += other.partitions;
        self.irreducible += other.irreducible;
        self.invariable += other.invariable;
        self.fixed_points += other.fixed_points;
        self.violations.extend(other.violations);
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Split the family range across worker threads.
    pub parallel: bool,
    /// Permit a five-element universe. Takes hours.
    pub allow_large: bool,
}

#[derive(Default)]
struct Partial {
    total: u64,
    partitions: u64,
    irreducible: u64,
    invariable: u64,
    fixed_points: u64,
    violations: Vec<Violation>,
    images: BTreeSet<u64>,
    fixed: BTreeSet<u64>,
}

/// Runs every [`Law`] over all coverings of `{1, ..., n}`, single-threaded.
pub fn verify_laws(n: usize) -> Result<VerificationSummary> {
    verify_laws_with(n, VerifyOptions::default())
}

pub fn verify_laws_with(n: usize, options: VerifyOptions) -> Result<VerificationSummary> {
    let max = if options.allow_large {
        MAX_ENUMERATION_SIZE
    } else {
        MAX_VERIFY_SIZE
    };
    if n > max {
        return Err(too_large(n, max));
    }
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    let universe = Arc::new(Universe::numbered(n)?);
    let end = CoveringEnumerator::family_count(n);
    let chunk = (end / 64).max(1);
    let ranges: Vec<(u64, u64)> = (0..end.div_ceil(chunk))
        .map(|i| ((i * chunk).max(1), ((i + 1) * chunk).min(end)))
        .collect();
    let run = |&(start, stop): &(u64, u64)| check_range(&universe, start, stop);
    // Partials stay in range order either way, so output is deterministic.
    let partials: Vec<Partial> = if options.parallel {
        ranges.par_iter().map(run).collect()
    } else {
        ranges.iter().map(run).collect()
    };

    let mut summary = VerificationSummary {
        universe_size: n,
        ..Default::default()
    };
    let mut images = BTreeSet::new();
    let mut fixed = BTreeSet::new();
    for mut p in partials {
        images.append(&mut p.images);
        fixed.append(&mut p.fixed);
        summary.absorb(p);
    }
    for &key in images.symmetric_difference(&fixed) {
        let covering = family_covering(&universe, key);
        let detail = if images.contains(&key) {
            "is the neighborhoods of some covering but not a fixed point".to_owned()
        } else {
            "is a fixed point but no covering induces it".to_owned()
        };
        summary.violations.push(Violation {
            covering,
            law: Law::PreimageIffFixedPoint,
            detail,
        });
    }
    Ok(summary)
}

fn check_range(universe: &Arc<Universe>, start: u64, stop: u64) -> Partial {
    let mut partial = Partial::default();
    for c in CoveringEnumerator::new(universe.clone(), start, stop) {
        let row = CensusRow::new(c);
        partial.total += 1;
        partial.partitions += row.is_partition as u64;
        partial.irreducible += row.is_irreducible as u64;
        partial.invariable += row.is_invariable as u64;
        partial.fixed_points += row.is_cov_fixed_point as u64;
        partial.images.insert(family_key(&row.cov_image));
        if row.is_cov_fixed_point {
            partial.fixed.insert(family_key(&row.covering));
        }
        for (law, detail) in check_laws(&row) {
            partial.violations.push(Violation {
                covering: row.covering.clone(),
                law,
                detail,
            });
        }
    }
    partial
}

/// Blocks satisfying the core block definition for `x`, found by scanning
/// every block and comparing repeat degrees.
pub fn core_blocks_by_definition(c: &Covering, degrees: &DegreeProfile, x: Element) -> Vec<Block> {
    c.blocks()
        .iter()
        .copied()
        .filter(|k| {
            k.contains(x)
                && k.elements()
                    .all(|y| degrees.common(x, y) == degrees.membership(x))
        })
        .collect()
}

/// Every per-covering law, evaluated on one census row. Returns the failed
/// laws with a short description.
pub fn check_laws(row: &CensusRow) -> Vec<(Law, String)> {
    let c = &row.covering;
    let uni = c.universe();
    let mut failed = Vec::new();
    let mut fail = |law: Law, detail: String| failed.push((law, detail));

    if let Err(e) = Covering::from_blocks(c.shared_universe().clone(), c.blocks().to_vec()) {
        fail(Law::EnumerationValid, e.to_string());
    }

    let nbhd = NeighborhoodMap::new(c);
    let degrees = DegreeProfile::new(c);
    let cores = CoreBlockAssignment::new(c);
    let reducibility = ReducibilityReport::new(c);
    let image = nbhd.family();

    for x in uni.elements() {
        let nx = nbhd.get(x);
        if !nx.contains(x) {
            fail(
                Law::Reflexivity,
                format!("{} not in N({})", uni.name(x), uni.name(x)),
            );
        }
        for y in nx.elements() {
            let ny = nbhd.get(y);
            if !ny.is_subset(nx) {
                fail(
                    Law::MonotoneNesting,
                    format!("N({}) ⊄ N({})", uni.name(y), uni.name(x)),
                );
            }
            if ny.contains(x) && ny != nx {
                fail(
                    Law::MonotoneNesting,
                    format!("N({}) ≠ N({})", uni.name(x), uni.name(y)),
                );
            }
        }
    }

    if image.len() <= NO_UNION_LIMIT {
        let blocks = image.blocks();
        for (i, &k) in blocks.iter().enumerate() {
            let others: Vec<Block> = blocks.iter().copied().filter(|&b| b != k).collect();
            let hit = (1u32..1 << others.len()).any(|sub| {
                union_of(
                    others
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| sub >> j & 1 == 1)
                        .map(|(_, b)| *b),
                ) == k
            });
            if hit {
                fail(
                    Law::NoUnion,
                    format!("block {i} of Cov(C) is a union of others"),
                );
            }
        }
    }

    if cov(image) != *image {
        fail(Law::CovIdempotent, format!("Cov(Cov(C)) ≠ {image}"));
    }

    if quick_reject_neighborhoods(c).is_some() && row.is_cov_fixed_point {
        fail(Law::QuickRejectSound, "rejected a fixed point".into());
    }

    for x in uni.elements() {
        let dx = degrees.membership(x);
        if dx < 1 || degrees.common(x, x) != dx {
            fail(Law::DegreeBasics, format!("∂({}) = {dx}", uni.name(x)));
        }
        let containing_x: Vec<Block> = c
            .blocks()
            .iter()
            .copied()
            .filter(|b| b.contains(x))
            .collect();
        for y in uni.elements() {
            let lxy = degrees.common(x, y);
            if lxy != degrees.common(y, x) || lxy > dx.min(degrees.membership(y)) {
                fail(
                    Law::CommonDegreeBound,
                    format!("λ({},{})", uni.name(x), uni.name(y)),
                );
            }
            let containing_both: Vec<Block> = containing_x
                .iter()
                .copied()
                .filter(|b| b.contains(y))
                .collect();
            if (dx == lxy) != (containing_x == containing_both) {
                fail(
                    Law::DegreeEquivalence,
                    format!("pair ({},{})", uni.name(x), uni.name(y)),
                );
            }
        }

        let by_definition = core_blocks_by_definition(c, &degrees, x);
        if by_definition.len() > 1 {
            fail(
                Law::CoreBlockUnique,
                format!("{} has {} core blocks", uni.name(x), by_definition.len()),
            );
        }
        let by_intersection = cores.get(x);
        if by_definition.first().copied() != by_intersection {
            fail(
                Law::CoreBlockIntersection,
                format!("routes disagree for {}", uni.name(x)),
            );
        }
        if let Some(core) = by_intersection {
            if !containing_x.iter().all(|k| core.is_subset(*k)) {
                fail(
                    Law::CoreBlockMinimal,
                    format!("Γ({}) not minimal", uni.name(x)),
                );
            }
            if core != nbhd.get(x) {
                fail(
                    Law::CoreBlockIsNeighborhood,
                    format!("Γ({}) ≠ N({})", uni.name(x), uni.name(x)),
                );
            }
        }
    }

    let non_core: Vec<Block> = c
        .blocks()
        .iter()
        .copied()
        .filter(|b| !cores.is_core(*b))
        .collect();
    for &k in &non_core {
        if k.len() <= 1 || k.elements().any(|y| degrees.membership(y) <= 1) {
            fail(
                Law::NonCoreStructure,
                format!("non-core block {}", uni.show(k)),
            );
        }
    }

    for k in reducibility.reducible_blocks() {
        if cores.is_core(k) {
            fail(
                Law::ReducibleNotCore,
                format!("{} is reducible and a core block", uni.show(k)),
            );
        }
    }

    let all_have_core = cores.every_element_has_core();
    if all_have_core {
        for &k in &non_core {
            if witness_in(c.blocks(), k).is_none() {
                fail(
                    Law::NonCoreReducible,
                    format!("{} is irreducible", uni.show(k)),
                );
            }
        }
    }

    let by_core_blocks = all_have_core && non_core.is_empty();
    if row.is_invariable != by_core_blocks {
        fail(
            Law::InvariableByCoreBlocks,
            format!("invariable = {}", row.is_invariable),
        );
    }
    if row.is_invariable != row.is_cov_fixed_point {
        fail(
            Law::InvariableIffFixedPoint,
            format!("invariable = {}", row.is_invariable),
        );
    }
    if row.is_partition && !row.is_cov_fixed_point {
        fail(
            Law::PartitionFixedPoint,
            "partition is not a fixed point".into(),
        );
    }

    let reduced = reduct(c);
    if cov(&reduced) != row.cov_image {
        fail(
            Law::ReductPreservesCov,
            format!("reduct {reduced} changes Cov"),
        );
    }
    let ends = removal_endpoints(c.blocks());
    if ends.len() != 1 || ends[0] != reduced.blocks() {
        fail(
            Law::ReductOrderIndependent,
            format!("{} distinct end states", ends.len()),
        );
    }

    failed
}

/// Every irreducible family reachable by removing reducible blocks one at a
/// time in any order.
fn removal_endpoints(blocks: &[Block]) -> Vec<Vec<Block>> {
    let mut seen: BTreeSet<Vec<Block>> = BTreeSet::new();
    let mut ends: BTreeSet<Vec<Block>> = BTreeSet::new();
    let mut stack = vec![blocks.to_vec()];
    while let Some(state) = stack.pop() {
        if !seen.insert(state.clone()) {
            continue;
        }
        let mut terminal = true;
        for (i, &k) in state.iter().enumerate() {
            if witness_in(&state, k).is_some() {
                terminal = false;
                let mut next = state.clone();
                next.remove(i);
                stack.push(next);
            }
        }
        if terminal {
            ends.insert(state);
        }
    }
    ends.into_iter().collect()
}

/// Coverings `C` of `d`'s universe with `Cov(C) = d`, in enumeration order,
/// stopping after `limit` results when given.
pub fn preimages(d: &Covering, limit: Option<usize>) -> Result<Vec<Covering>> {
    let n = d.universe().len();
    if n > MAX_PREIMAGE_SIZE {
        return Err(too_large(n, MAX_PREIMAGE_SIZE));
    }
    let found = enumerate_coverings_of(d.shared_universe().clone())?.filter(|c| cov(c) == *d);
    Ok(match limit {
        Some(k) => found.take(k).collect(),
        None => found.collect(),
    })
}

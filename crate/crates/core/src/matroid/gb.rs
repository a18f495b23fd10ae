//! Minors generated by deletions and butterfly contractions.
//!
//! An element is *butterfly-contractible* when some signed cocircuit has
//! it as its entire negative (or entire positive) side; contracting such
//! an element cannot create new directed circuits out of undirected ones,
//! which is what makes this restricted minor order useful for evenness
//! questions. We call the minors reachable by deletions and butterfly
//! contractions *GB-minors*.
//!
//! Exploration runs on signed circuit and cocircuit families alone: the
//! families of a minor follow combinatorially from the host families, so
//! a full representation is only materialised for the reported minors.
//! Contractibility is always judged in the minor the element currently
//! lives in, not in the original host.

use std::collections::{HashSet, VecDeque};

use crate::error::Result;
use crate::matroid::{MinorMap, OrientedMatroid};

use super::enumerate::{compress_family, minor_family};
use super::signed::{ElemSet, SignedSet};

/// A minor reachable by deletions and butterfly contractions, together
/// with how it sits inside its host.
#[derive(Clone, Debug)]
pub struct GbMinor {
    /// The minor itself.
    pub matroid: OrientedMatroid,
    /// Positions of the minor mapped back to host positions.
    pub map: MinorMap,
    /// Host positions removed by deletion.
    pub deleted: ElemSet,
    /// Host positions removed by butterfly contraction.
    pub contracted: ElemSet,
}

/// Return a witnessing signed cocircuit if `e` is butterfly-contractible,
/// oriented so that `e` is its entire negative side.
pub fn is_butterfly_contractible(
    m: &OrientedMatroid,
    e: usize,
) -> Result<Option<SignedSet>> {
    if e >= m.n_elements() {
        return Err(crate::error::Error::ElementOutOfRange {
            element: e,
            elements: m.n_elements(),
        });
    }
    Ok(butterfly_witness(m.cocircuits()?, e))
}

/// Find a cocircuit in `cocircuits` whose positive or negative side is
/// exactly `{e}`; normalise the witness so `{e}` is the negative side.
fn butterfly_witness(cocircuits: &[SignedSet], e: usize) -> Option<SignedSet> {
    let single = ElemSet::singleton(e);
    for &z in cocircuits {
        if z.negative() == single {
            return Some(z);
        }
        if z.positive() == single {
            return Some(z.negate());
        }
    }
    None
}

/// Enumerate all GB-minors of `m` with at least `min_size` elements,
/// including `m` itself. Minors are deduplicated by their remaining host
/// positions together with their signed circuit family, so each returned
/// entry is a genuinely distinct sub-object.
pub fn gb_minors(m: &OrientedMatroid, min_size: usize) -> Result<Vec<GbMinor>> {
    let explorer = GbExplorer::from_matroid(m)?;
    let mut states: Vec<(ElemSet, ElemSet, Vec<SignedSet>)> = Vec::new();
    explorer.explore(min_size, |deleted, contracted, circuits| {
        states.push((deleted, contracted, circuits.to_vec()));
        false
    });

    let mut seen: HashSet<(ElemSet, Vec<SignedSet>)> = HashSet::new();
    let mut out = Vec::new();
    for (deleted, contracted, circuits) in states {
        let remaining = (m.ground() - deleted) - contracted;
        let key = (remaining, compress_family(&circuits, remaining));
        if !seen.insert(key) {
            continue;
        }
        let (after_del, del_map) = m.delete(deleted)?;
        let (minor, con_map) = after_del.contract(del_map.restrict_from_parent(contracted))?;
        let map = MinorMap::compose(&del_map, &con_map);
        debug_assert_eq!(map.lift_set(minor.ground()), remaining);
        out.push(GbMinor {
            matroid: minor,
            map,
            deleted,
            contracted,
        });
    }
    Ok(out)
}

/// Breadth-first search over (deleted, contracted) states, working purely
/// on signed families. Shared by [`gb_minors`] and callers that only need
/// to scan minors without materialising them.
pub(crate) struct GbExplorer {
    ground: ElemSet,
    circuits: Vec<SignedSet>,
    cocircuits: Vec<SignedSet>,
}

impl GbExplorer {
    pub(crate) fn from_matroid(m: &OrientedMatroid) -> Result<Self> {
        Ok(GbExplorer {
            ground: m.ground(),
            circuits: m.circuits()?.to_vec(),
            cocircuits: m.cocircuits()?.to_vec(),
        })
    }

    /// Visit every reachable state with at least `min_size` remaining
    /// elements. `visit` receives (deleted, contracted, minor circuits)
    /// and may return `true` to stop the search; the return value says
    /// whether any visit did. A state is visited once even when several
    /// deletion/contraction orders reach it: the resulting minor depends
    /// only on the two sets, not on the order.
    pub(crate) fn explore<F>(&self, min_size: usize, mut visit: F) -> bool
    where
        F: FnMut(ElemSet, ElemSet, &[SignedSet]) -> bool,
    {
        let mut visited: HashSet<(ElemSet, ElemSet)> = HashSet::new();
        let mut queue: VecDeque<(ElemSet, ElemSet)> = VecDeque::new();
        visited.insert((ElemSet::EMPTY, ElemSet::EMPTY));
        queue.push_back((ElemSet::EMPTY, ElemSet::EMPTY));

        while let Some((deleted, contracted)) = queue.pop_front() {
            let remaining = (self.ground - deleted) - contracted;
            if remaining.len() >= min_size {
                let circuits = minor_family(&self.circuits, deleted, contracted);
                if visit(deleted, contracted, &circuits) {
                    return true;
                }
            }
            if remaining.len() <= min_size {
                continue;
            }
            for e in remaining.iter() {
                let next = (deleted.with(e), contracted);
                if !visited.contains(&next) {
                    visited.insert(next);
                    queue.push_back(next);
                }
            }
            // Contractibility in the current minor: its cocircuits are the
            // host cocircuits that avoid the contracted part, restricted
            // away from the deleted part (deletion and contraction swap
            // under duality).
            let cocircuits = minor_family(&self.cocircuits, contracted, deleted);
            for e in remaining.iter() {
                let next = (deleted, contracted.with(e));
                if visited.contains(&next) {
                    continue;
                }
                if butterfly_witness(&cocircuits, e).is_some() {
                    visited.insert(next);
                    queue.push_back(next);
                }
            }
        }
        false
    }
}

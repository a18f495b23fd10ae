//! Exhaustive orientation sweep of a fixed ten-element regular matroid:
//! every orientation of it that contains no forbidden cographic GB-minor
//! (a bond matroid of a complete one-direction with sides `m, n ≥ 2` and
//! `m + n` odd) is non-even.
//!
//! Orientations are generated as column sign flips of one reference
//! representation — regular matroids have a single reorientation class,
//! so the `2^10` flips cover every orientation. Circuit and cocircuit
//! families are enumerated once on the reference and carried through
//! each flip combinatorially; the GB-minor search then runs purely on
//! signed families.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::digraph::{bond_matroid, family::build_one_direction};
use crate::error::{Error, Result};
use crate::evenness::non_even_bruteforce;
use crate::linalg::TUMatrix;
use crate::matroid::{compress_family, signed_families_isomorphic};
use crate::matroid::{ElemSet, GbExplorer, OrientedMatroid, SignedSet};

/// Ceiling on host size for the forbidden-minor search.
pub const FORBIDDEN_SEARCH_BOUND: usize = 12;

/// The reference representation: `[I₅ | B]` with the signed cyclic block
/// `B`, rank 5 on 10 elements, totally unimodular.
pub fn r10_reference() -> OrientedMatroid {
    let rows: [[i8; 10]; 5] = [
        [1, 0, 0, 0, 0, -1, 1, 0, 0, 1],
        [0, 1, 0, 0, 0, 1, -1, 1, 0, 0],
        [0, 0, 1, 0, 0, 0, 1, -1, 1, 0],
        [0, 0, 0, 1, 0, 0, 0, 1, -1, 1],
        [0, 0, 0, 0, 1, 1, 0, 0, 1, -1],
    ];
    let rows: Vec<Vec<i8>> = rows.iter().map(|r| r.to_vec()).collect();
    let rep = TUMatrix::from_rows(&rows).expect("reference entries are in range");
    OrientedMatroid::from_rep(rep).expect("reference fits the element bound")
}

/// Signed circuit families of the forbidden cographic targets that fit
/// into twelve elements: sides (2,3), (2,5) and (3,4). Swapped sides
/// give the same oriented matroid (reversing every edge negates all
/// incidence columns), so one of each pair suffices.
fn forbidden_targets() -> Result<&'static [(usize, Vec<SignedSet>)]> {
    static TARGETS: OnceLock<Vec<(usize, Vec<SignedSet>)>> = OnceLock::new();
    if let Some(t) = TARGETS.get() {
        return Ok(t);
    }
    let mut built = Vec::new();
    for (m, n) in [(2usize, 3usize), (2, 5), (3, 4)] {
        let target = bond_matroid(&build_one_direction(m, n))?;
        built.push((target.n_elements(), target.circuits()?.to_vec()));
    }
    Ok(TARGETS.get_or_init(|| built))
}

/// Does the host contain a GB-minor isomorphic to a forbidden cographic
/// target? Only minors whose size matches a target are tested; the
/// search walks deletion/butterfly-contraction states breadth-first and
/// stops at the first hit.
pub fn has_forbidden_cographic_gbminor(m: &OrientedMatroid) -> Result<bool> {
    if m.n_elements() > FORBIDDEN_SEARCH_BOUND {
        return Err(Error::EnumerationBoundExceeded {
            elements: m.n_elements(),
            bound: FORBIDDEN_SEARCH_BOUND,
        });
    }
    let targets: Vec<&(usize, Vec<SignedSet>)> = forbidden_targets()?
        .iter()
        .filter(|(size, _)| *size <= m.n_elements())
        .collect();
    let Some(min_size) = targets.iter().map(|(size, _)| *size).min() else {
        return Ok(false);
    };
    let ground = m.ground();
    let explorer = GbExplorer::from_matroid(m)?;
    Ok(explorer.explore(min_size, |deleted, contracted, circuits| {
        let remaining = (ground - deleted) - contracted;
        targets.iter().any(|(size, family)| {
            *size == remaining.len()
                && signed_families_isomorphic(*size, &compress_family(circuits, remaining), family)
        })
    }))
}

/// Outcome of the full orientation sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R10Report {
    /// Number of sign vectors examined (always `2^10`).
    pub orientations_checked: usize,
    /// Orientations that are non-even.
    pub noneven_count: usize,
    /// Orientations without a forbidden cographic GB-minor.
    pub forbidden_free_count: usize,
    /// Sign masks that are forbidden-free yet not non-even; the verified
    /// claim is that none exist.
    pub counterexamples: Vec<u64>,
}

/// Sweep all `2^10` column sign flips of the reference: for each
/// orientation, decide non-evenness by brute force and search for
/// forbidden cographic GB-minors, then cross-check the two directions.
/// A non-even orientation containing a forbidden minor would contradict
/// minor-closure and is reported as an internal error; a forbidden-free
/// orientation that is not non-even lands in `counterexamples`.
pub fn verify_conjecture_on_r10() -> Result<R10Report> {
    let reference = r10_reference();
    // Prime both family caches so every flip reuses them.
    reference.circuits()?;
    reference.cocircuits()?;

    let per_mask: Vec<(u64, bool, bool)> = (0u64..1 << 10)
        .into_par_iter()
        .map(|mask| -> Result<(u64, bool, bool)> {
            let oriented = reference.reorient(ElemSet::from_bits(mask));
            let noneven = non_even_bruteforce(&oriented)?.is_some();
            let forbidden = has_forbidden_cographic_gbminor(&oriented)?;
            if noneven && forbidden {
                return Err(Error::invariant(format!(
                    "orientation {mask:#b} is non-even yet contains a forbidden minor"
                )));
            }
            Ok((mask, noneven, forbidden))
        })
        .collect::<Result<_>>()?;

    let mut report = R10Report {
        orientations_checked: per_mask.len(),
        noneven_count: 0,
        forbidden_free_count: 0,
        counterexamples: Vec::new(),
    };
    for (mask, noneven, forbidden) in per_mask {
        if noneven {
            report.noneven_count += 1;
        }
        if !forbidden {
            report.forbidden_free_count += 1;
            if !noneven {
                report.counterexamples.push(mask);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{check_tu, TuVerdict};

    #[test]
    fn reference_has_the_documented_shape() {
        let m = r10_reference();
        assert_eq!(m.n_elements(), 10);
        assert_eq!(m.rank(), 5);
        let entries: Vec<i64> = (0..5)
            .flat_map(|r| (0..10).map(move |c| (r, c)))
            .map(|(r, c)| i64::from(m.rep().get(r, c)))
            .collect();
        assert_eq!(check_tu(5, 10, &entries, 5), TuVerdict::Verified);
    }

    #[test]
    fn reorientation_is_an_involution() {
        let m = r10_reference();
        let s = ElemSet::from_bits(0b1011001);
        let twice = m.reorient(s).reorient(s);
        assert_eq!(twice.circuits().unwrap(), m.circuits().unwrap());
        assert_eq!(twice.rep(), m.rep());
    }

    #[test]
    fn forbidden_targets_cover_three_sizes() {
        let sizes: Vec<usize> = forbidden_targets()
            .unwrap()
            .iter()
            .map(|(size, _)| *size)
            .collect();
        assert_eq!(sizes, vec![6, 10, 12]);
    }

    #[test]
    fn smallest_target_contains_itself() {
        let host = bond_matroid(&build_one_direction(2, 3)).unwrap();
        assert!(has_forbidden_cographic_gbminor(&host).unwrap());
    }

    #[test]
    fn an_even_sided_one_direction_is_clean() {
        let host = bond_matroid(&build_one_direction(2, 2)).unwrap();
        assert!(!has_forbidden_cographic_gbminor(&host).unwrap());
    }

    #[test]
    fn hosts_above_the_bound_are_refused() {
        let host = bond_matroid(&build_one_direction(1, 13)).unwrap();
        assert_eq!(
            has_forbidden_cographic_gbminor(&host),
            Err(Error::EnumerationBoundExceeded {
                elements: 13,
                bound: FORBIDDEN_SEARCH_BOUND
            })
        );
    }

    /// Spot-check two orientations for the claim the full sweep makes:
    /// forbidden-free implies non-even (the acceptance run covers all
    /// 1024 masks).
    #[test]
    fn spot_orientations_satisfy_the_implication() {
        let reference = r10_reference();
        reference.circuits().unwrap();
        reference.cocircuits().unwrap();
        for mask in [0u64, 0b1000110101] {
            let oriented = reference.reorient(ElemSet::from_bits(mask));
            let noneven = non_even_bruteforce(&oriented).unwrap().is_some();
            let forbidden = has_forbidden_cographic_gbminor(&oriented).unwrap();
            assert!(
                forbidden || noneven,
                "mask {mask:#b} is forbidden-free yet not non-even"
            );
            assert!(
                !(forbidden && noneven),
                "mask {mask:#b} is non-even yet contains a forbidden minor"
            );
        }
    }
}

//! Isomorphism of oriented matroids, decided on signed circuit families.
//!
//! A ground bijection is an isomorphism when it maps the circuit family
//! onto the circuit family with each image matching a stored circuit
//! either exactly or with both sign classes swapped (families store one
//! representative per `{X, -X}` pair). The search is straightforward
//! backtracking over element images, pruned by per-element invariants.

use std::collections::HashMap;

use crate::error::Result;
use crate::matroid::OrientedMatroid;

use super::signed::{ElemSet, SignedSet};

/// Decide isomorphism of two oriented matroids.
///
/// Runs on the enumerated circuit families, so both ground sets must be
/// within the enumeration bound.
pub fn is_isomorphic(a: &OrientedMatroid, b: &OrientedMatroid) -> Result<bool> {
    if a.n_elements() != b.n_elements() {
        return Ok(false);
    }
    let fa = a.circuits()?;
    let fb = b.circuits()?;
    Ok(signed_families_isomorphic(a.n_elements(), fa, fb))
}

/// Backtracking isomorphism test on two canonical signed-circuit families
/// over dense ground positions `0..n`.
pub(crate) fn signed_families_isomorphic(
    n: usize,
    fa: &[SignedSet],
    fb: &[SignedSet],
) -> bool {
    if fa.len() != fb.len() {
        return false;
    }
    if family_invariant(fa) != family_invariant(fb) {
        return false;
    }

    let prof_a = element_profiles(n, fa);
    let prof_b = element_profiles(n, fb);
    {
        let mut sa = prof_a.clone();
        let mut sb = prof_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }

    // Index the target family by support for O(1) image lookup.
    let by_support: HashMap<u64, SignedSet> = fb
        .iter()
        .map(|&x| (x.support().bits(), x))
        .collect();

    // Assign rare elements first: fewer candidate images, earlier cuts.
    let mut order: Vec<usize> = (0..n).collect();
    let mut freq: HashMap<&Vec<(usize, bool)>, usize> = HashMap::new();
    for p in &prof_a {
        *freq.entry(p).or_insert(0) += 1;
    }
    order.sort_by_key(|&e| (freq[&prof_a[e]], e));

    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut used = ElemSet::EMPTY;
    backtrack(
        &order,
        0,
        &mut image,
        &mut used,
        fa,
        &by_support,
        &prof_a,
        &prof_b,
    )
}

/// Sign-invariant global fingerprint: multiset of (size, directedness).
fn family_invariant(f: &[SignedSet]) -> Vec<(usize, bool)> {
    let mut v: Vec<(usize, bool)> = f.iter().map(|x| (x.size(), x.is_directed())).collect();
    v.sort_unstable();
    v
}

/// Per-element fingerprint: sorted multiset of (size, directedness) over
/// the circuits through the element. Directedness is preserved by whole
/// sign flips, so the fingerprint is invariant under any relabelling that
/// the matcher would accept.
fn element_profiles(n: usize, f: &[SignedSet]) -> Vec<Vec<(usize, bool)>> {
    let mut profiles = vec![Vec::new(); n];
    for x in f {
        for e in x.support().iter() {
            profiles[e].push((x.size(), x.is_directed()));
        }
    }
    for p in &mut profiles {
        p.sort_unstable();
    }
    profiles
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    order: &[usize],
    depth: usize,
    image: &mut Vec<Option<usize>>,
    used: &mut ElemSet,
    fa: &[SignedSet],
    by_support: &HashMap<u64, SignedSet>,
    prof_a: &[Vec<(usize, bool)>],
    prof_b: &[Vec<(usize, bool)>],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let e = order[depth];
    let n = image.len();
    for cand in 0..n {
        if used.contains(cand) || prof_a[e] != prof_b[cand] {
            continue;
        }
        image[e] = Some(cand);
        *used = used.with(cand);
        if consistent_so_far(e, image, fa, by_support)
            && backtrack(order, depth + 1, image, used, fa, by_support, prof_a, prof_b)
        {
            return true;
        }
        *used = used.without(cand);
        image[e] = None;
    }
    false
}

/// Check every circuit of `fa` whose support became fully mapped when `e`
/// was assigned: its image must be a target circuit with matching or
/// fully flipped signs.
fn consistent_so_far(
    e: usize,
    image: &[Option<usize>],
    fa: &[SignedSet],
    by_support: &HashMap<u64, SignedSet>,
) -> bool {
    let assigned: ElemSet = (0..image.len()).filter(|&i| image[i].is_some()).collect();
    for x in fa {
        if !x.support().contains(e) || !x.support().is_subset(assigned) {
            continue;
        }
        let map = |s: ElemSet| -> ElemSet {
            s.iter().map(|i| image[i].expect("assigned")).collect()
        };
        let pos = map(x.positive());
        let neg = map(x.negative());
        let Some(y) = by_support.get(&(pos | neg).bits()) else {
            return false;
        };
        let matches = (pos == y.positive() && neg == y.negative())
            || (pos == y.negative() && neg == y.positive());
        if !matches {
            return false;
        }
    }
    true
}

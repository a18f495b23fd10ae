//! Signed circuit enumeration and combinatorial minor families.
//!
//! Dependence tests run on a GF(2) shadow of the representation: for a
//! totally unimodular matrix, reading the entries modulo two represents
//! the same matroid, so a column set is rationally dependent exactly when
//! it is dependent over GF(2). That keeps the subset sweep on `u64`
//! bitmasks; exact rational arithmetic is only needed once per discovered
//! circuit, to read off its signs.

use crate::error::{Error, Result};
use crate::linalg::TUMatrix;

use super::signed::{ElemSet, SignedSet};

/// Deterministic family order: by support size, then support bits, then
/// positive-part bits.
pub(crate) fn sort_family(family: &mut [SignedSet]) {
    family.sort_by_key(|x| (x.size(), x.support().bits(), x.positive().bits()));
}

/// Enumerate all signed circuits of a TU representation, one canonical
/// representative per `{X, -X}` pair, sorted by [`sort_family`].
///
/// Support candidates are swept in increasing size with superset pruning:
/// a dependent set none of whose proper subsets is dependent is exactly a
/// circuit, so the first dependence hit at each support is decisive.
pub(crate) fn enumerate_signed_circuits(rep: &TUMatrix) -> Result<Vec<SignedSet>> {
    let n = rep.n_cols();
    let col_masks: Vec<u64> = (0..n).map(|c| column_mask(rep, c)).collect();
    let max_size = mask_rank(&col_masks) + 1;

    let mut found_supports: Vec<u64> = Vec::new();
    let mut out: Vec<SignedSet> = Vec::new();
    let mut combo: Vec<usize> = Vec::new();

    for size in 1..=max_size.min(n) {
        combinations(n, size, &mut combo, &mut |subset| {
            let mask: u64 = subset.iter().map(|&i| 1u64 << i).sum();
            if found_supports.iter().any(|&f| f & !mask == 0) {
                return Ok(()); // contains an already-found circuit
            }
            if columns_dependent(&col_masks, subset) {
                let support = ElemSet::from_bits(mask);
                out.push(signed_circuit_on_support(rep, support)?);
                found_supports.push(mask);
            }
            Ok(())
        })?;
    }
    sort_family(&mut out);
    Ok(out)
}

/// The signed circuit supported on exactly `support`, as the canonical
/// representative. Errors unless the support carries a one-dimensional
/// kernel with full support — i.e. unless it really is a circuit.
pub(crate) fn signed_circuit_on_support(rep: &TUMatrix, support: ElemSet) -> Result<SignedSet> {
    let cols = support.to_vec();
    let sub = rep.select_columns(&cols);
    let kernel = sub.kernel_basis()?;
    if kernel.n_rows() != 1 {
        return Err(Error::invariant(format!(
            "support {support:?} carries a kernel of dimension {}, not 1",
            kernel.n_rows()
        )));
    }
    let mut pos = ElemSet::EMPTY;
    let mut neg = ElemSet::EMPTY;
    for (i, &v) in kernel.row(0).iter().enumerate() {
        match v {
            1 => pos = pos.with(cols[i]),
            -1 => neg = neg.with(cols[i]),
            _ => {
                return Err(Error::invariant(format!(
                    "support {support:?} is not minimal: kernel vector vanishes at {}",
                    cols[i]
                )))
            }
        }
    }
    // kernel_basis normalises the first nonzero entry to +1, and the
    // columns are selected in ascending order, so this is canonical.
    Ok(SignedSet::new(pos, neg))
}

/// Circuits of the minor `M − deleted / contracted`, derived from the
/// circuits of `M` itself, in host positions:
/// keep the circuits avoiding `deleted`, strip `contracted` from the
/// rest, and retain the minimal nonempty supports.
///
/// By duality the same derivation yields cocircuits of a minor from host
/// cocircuits with the roles of the two sets swapped.
pub(crate) fn minor_family(
    family: &[SignedSet],
    deleted: ElemSet,
    contracted: ElemSet,
) -> Vec<SignedSet> {
    let mut spans: Vec<SignedSet> = family
        .iter()
        .filter(|x| x.support().is_disjoint(deleted))
        .map(|x| x.minus(contracted))
        .filter(|x| !x.support().is_empty())
        .collect();
    sort_family(&mut spans);

    let mut kept_supports: Vec<u64> = Vec::new();
    let mut out: Vec<SignedSet> = Vec::new();
    'next: for x in spans {
        let s = x.support().bits();
        for &t in &kept_supports {
            if t & s == t {
                continue 'next; // a kept support is contained in this one
            }
        }
        kept_supports.push(s);
        out.push(x.canonical());
    }
    out
}

/// Re-index a family living on a sparse ground mask to dense positions
/// `0..ground.len()`, preserving order of elements and of the family.
pub(crate) fn compress_family(family: &[SignedSet], ground: ElemSet) -> Vec<SignedSet> {
    let mut new_of = [usize::MAX; 64];
    for (new, old) in ground.iter().enumerate() {
        new_of[old] = new;
    }
    let remap = |s: ElemSet| -> ElemSet { s.iter().map(|old| new_of[old]).collect() };
    family
        .iter()
        .map(|x| {
            debug_assert!(x.support().is_subset(ground));
            SignedSet::new(remap(x.positive()), remap(x.negative()))
        })
        .collect()
}

fn column_mask(rep: &TUMatrix, col: usize) -> u64 {
    let mut mask = 0u64;
    for r in 0..rep.n_rows() {
        if rep.get(r, col) != 0 {
            mask |= 1 << r;
        }
    }
    mask
}

/// GF(2) rank of a list of column masks.
fn mask_rank(masks: &[u64]) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for &m in masks {
        let v = reduce(m, &pivots);
        if v != 0 {
            insert_pivot(&mut pivots, v);
        }
    }
    pivots.len()
}

/// Are the selected columns linearly dependent over GF(2)?
fn columns_dependent(masks: &[u64], idxs: &[usize]) -> bool {
    let mut pivots: Vec<u64> = Vec::new();
    for &i in idxs {
        let v = reduce(masks[i], &pivots);
        if v == 0 {
            return true;
        }
        insert_pivot(&mut pivots, v);
    }
    false
}

/// Reduce a vector by pivots kept in decreasing leading-bit order; a
/// single pass suffices because an elimination step only ever introduces
/// bits strictly below the lead it clears.
fn reduce(mut v: u64, pivots: &[u64]) -> u64 {
    for &p in pivots {
        let lead = 1u64 << (63 - p.leading_zeros());
        if v & lead != 0 {
            v ^= p;
        }
    }
    v
}

/// Insert a fully reduced, nonzero pivot keeping decreasing lead order.
fn insert_pivot(pivots: &mut Vec<u64>, v: u64) {
    let lead = 63 - v.leading_zeros();
    let at = pivots.partition_point(|&p| 63 - p.leading_zeros() > lead);
    pivots.insert(at, v);
}

/// Visit all k-combinations of `0..n` in lexicographic order.
fn combinations(
    n: usize,
    k: usize,
    scratch: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if k > n {
        return Ok(());
    }
    scratch.clear();
    scratch.extend(0..k);
    loop {
        visit(scratch)?;
        // Advance.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if scratch[i] != i + n - k {
                break;
            }
        }
        scratch[i] += 1;
        for j in i + 1..k {
            scratch[j] = scratch[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(rows: &[&[i8]]) -> TUMatrix {
        TUMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    /// Brute-force oracle: enumerate circuits by definition, using
    /// rational rank only — dependent set, every proper subset
    /// independent. Signs via the kernel of the support columns.
    fn oracle_circuits(m: &TUMatrix) -> Vec<SignedSet> {
        let n = m.n_cols();
        let mut out = Vec::new();
        for mask in 1u64..(1 << n) {
            let support = ElemSet::from_bits(mask);
            let cols = support.to_vec();
            let dependent = m.select_columns(&cols).rank() < cols.len();
            if !dependent {
                continue;
            }
            let minimal = cols.iter().all(|&skip| {
                let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != skip).collect();
                m.select_columns(&rest).rank() == rest.len()
            });
            if minimal {
                out.push(signed_circuit_on_support(m, support).unwrap());
            }
        }
        sort_family(&mut out);
        out
    }

    #[test]
    fn enumeration_matches_the_rank_oracle_on_small_cases() {
        let cases = vec![
            rep(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]), // directed triangle
            rep(&[&[1, 1, 0, 1], &[0, 1, 1, 0]]),
            rep(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1]]),
            rep(&[&[0, 0], &[0, 0]]),                      // two loops
            TUMatrix::identity(4),
        ];
        for m in cases {
            let fast = enumerate_signed_circuits(&m).unwrap();
            let slow = oracle_circuits(&m);
            assert_eq!(fast, slow, "mismatch for {m:?}");
        }
    }

    #[test]
    fn loops_are_singleton_circuits() {
        let m = rep(&[&[0, 1], &[0, 0]]);
        let circuits = enumerate_signed_circuits(&m).unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0].support(), ElemSet::singleton(0));
        assert!(circuits[0].is_directed());
    }

    #[test]
    fn parallel_and_antiparallel_columns_form_digon_circuits() {
        // Columns 0, 1 parallel; column 2 antiparallel to them.
        let m = rep(&[&[1, 1, -1], &[1, 1, -1]]);
        let circuits = enumerate_signed_circuits(&m).unwrap();
        assert_eq!(circuits.len(), 3);
        // {0,1} with opposite signs, {0,2} and {1,2} directed.
        let directed: Vec<_> = circuits.iter().filter(|c| c.is_directed()).collect();
        assert_eq!(directed.len(), 2);
    }

    #[test]
    fn minor_family_matches_pivot_contraction() {
        // Bidirected triangle: 6 columns (each edge and its reverse).
        let m = rep(&[
            &[-1, 1, 0, 0, 1, -1],
            &[1, -1, -1, 1, 0, 0],
            &[0, 0, 1, -1, -1, 1],
        ]);
        let host = enumerate_signed_circuits(&m).unwrap();

        // Contract column 0 via the formula…
        let derived = minor_family(&host, ElemSet::EMPTY, ElemSet::singleton(0));

        // …and via an actual pivot on the representation.
        let pivoted = m.pivot_unit_column(0).unwrap();
        let keep: Vec<usize> = (1..m.n_cols()).collect();
        let contracted_rows: Vec<Vec<i8>> = (1..pivoted.n_rows())
            .map(|r| keep.iter().map(|&c| pivoted.get(r, c)).collect())
            .collect();
        let contracted = TUMatrix::from_rows(&contracted_rows).unwrap();
        let enumerated = enumerate_signed_circuits(&contracted).unwrap();

        // Re-index the derived family (host positions 1..6 → 0..5).
        let compressed = compress_family(&derived, ElemSet::from_bits(0b111110));
        let mut sorted = compressed;
        sort_family(&mut sorted);
        assert_eq!(sorted, enumerated);
    }

    #[test]
    fn minor_family_deletion_just_filters() {
        let m = rep(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]);
        let host = enumerate_signed_circuits(&m).unwrap();
        assert_eq!(minor_family(&host, ElemSet::singleton(2), ElemSet::EMPTY), vec![]);
        assert_eq!(minor_family(&host, ElemSet::EMPTY, ElemSet::EMPTY), host);
    }

    #[test]
    fn compress_family_remaps_to_dense_positions() {
        let x = SignedSet::new(
            [1usize, 5].into_iter().collect(),
            [3usize].into_iter().collect(),
        );
        let ground: ElemSet = [1usize, 3, 5].into_iter().collect();
        let c = compress_family(&[x], ground);
        assert_eq!(c[0].positive().to_vec(), vec![0, 2]);
        assert_eq!(c[0].negative().to_vec(), vec![1]);
    }
}

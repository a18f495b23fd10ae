//! Directed circuit bases, parity covers, and the two reductions that tie
//! even-directed-circuit detection to non-evenness.
//!
//! A totally cyclic oriented regular matroid carries a *directed circuit
//! basis*: `|E| - rank` directed circuits whose incidence vectors are
//! independent over GF(2), so every circuit has a unique GF(2) expansion
//! over the basis. Alongside the basis a *parity cover* is built: a set
//! `J` meeting every basis member an odd number of times. The matroid is
//! *non-even* when some set meets every *directed* circuit an odd number
//! of times; the constructed cover is such a witness exactly when the
//! matroid is non-even.
//!
//! Both constructions run by minor recursion over Farkas certificates and
//! never enumerate the circuit family. On top of them sit two oracle
//! reductions: an even-directed-circuit test from a non-evenness oracle,
//! and a non-evenness test from an even-directed-circuit oracle (via
//! series duplication of the elements outside the cover).

use crate::error::{Error, Result};
use crate::farkas;
use crate::linalg::{check_tu, gf2_rank, gf2_solve, GF2Matrix, GF2Vector, TUMatrix, TuVerdict};
use crate::matroid::{ElemSet, MinorMap, OrientedMatroid, MAX_ELEMENTS};

/// A GF(2)-independent family of directed circuits spanning the circuit
/// space, in the deterministic order produced by the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedCircuitBasis {
    /// Circuit supports as position sets of the host.
    pub circuits: Vec<ElemSet>,
}

impl DirectedCircuitBasis {
    /// Number of members (`|E| - rank` for the host).
    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }
}

/// A set of elements meeting each basis member an odd number of times.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityCover {
    /// Cover as a position set of the host.
    pub elements: ElemSet,
}

impl ParityCover {
    /// Parity test against one circuit support.
    pub fn hits_oddly(&self, circuit: ElemSet) -> bool {
        self.elements.odd_overlap(circuit)
    }
}

/// Four independently evaluated characterisations of non-evenness for a
/// totally cyclic host. All four agree on every input; a disagreement
/// would expose a bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Some set meets every directed circuit oddly (exhaustive parity
    /// system over the enumerated directed circuits).
    pub non_even: bool,
    /// No odd-cardinality multiset of directed circuits sums to zero over
    /// GF(2).
    pub no_odd_empty_sum: bool,
    /// Every directed circuit's unique expansion over the directed
    /// circuit basis uses an odd number of members.
    pub expansions_all_odd: bool,
    /// The cover built next to the basis meets every directed circuit
    /// oddly.
    pub cover_hits_all_directed_odd: bool,
}

impl EquivalenceReport {
    /// True when all four answers coincide.
    pub fn all_agree(&self) -> bool {
        self.non_even == self.no_odd_empty_sum
            && self.non_even == self.expansions_all_odd
            && self.non_even == self.cover_hits_all_directed_odd
    }
}

/// First element lying in no directed circuit, if any.
fn first_acyclic_element(m: &OrientedMatroid) -> Result<Option<usize>> {
    for e in 0..m.n_elements() {
        if !farkas::in_directed_circuit(m, e)? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// Error out unless every element lies in a directed circuit.
fn require_totally_cyclic(m: &OrientedMatroid) -> Result<()> {
    match first_acyclic_element(m)? {
        Some(element) => Err(Error::NotTotallyCyclic { element }),
        None => Ok(()),
    }
}

/// Incidence matrix of circuit supports: one row per set, one column per
/// element of a ground set with `n` positions.
fn incidence_rows(sets: &[ElemSet], n: usize) -> GF2Matrix {
    let rows: Vec<GF2Vector> = sets
        .iter()
        .map(|s| GF2Vector::from_indices(n, s.iter()))
        .collect();
    GF2Matrix::from_rows(rows, n)
}

/// Core recursion building the basis and cover of a totally cyclic host.
///
/// The least element `e` is split on: when `m - e` stays totally cyclic,
/// the directed circuit through `e` joins the basis ahead of the deletion
/// minor's basis, and `e` joins the cover if needed to fix that circuit's
/// parity. Otherwise `m / e` is recursed on and every member is lifted to
/// the unique directed circuit of `m` over its support or the support
/// plus `e`.
fn basis_recursion(m: &OrientedMatroid) -> Result<(Vec<ElemSet>, ElemSet)> {
    if m.n_elements() == 0 {
        return Ok((Vec::new(), ElemSet::EMPTY));
    }
    let e = 0usize;
    let (deleted, del_map) = m.delete(ElemSet::singleton(e))?;
    if farkas::is_totally_cyclic(&deleted)? {
        let c_e = farkas::directed_circuit_through(m, e)?;
        let (sub_basis, sub_cover) = basis_recursion(&deleted)?;
        let mut circuits = Vec::with_capacity(sub_basis.len() + 1);
        circuits.push(c_e);
        circuits.extend(sub_basis.into_iter().map(|c| del_map.lift_set(c)));
        let lifted = del_map.lift_set(sub_cover);
        // The lifted cover avoids `e` and already fixes every lifted
        // member; only the parity on the new circuit may need `e`.
        let cover = if lifted.odd_overlap(c_e) {
            lifted
        } else {
            lifted.with(e)
        };
        Ok((circuits, cover))
    } else {
        debug_assert!(!m.is_loop(e), "a loop's deletion keeps total cyclicity");
        let (contracted, con_map) = m.contract(ElemSet::singleton(e))?;
        let (sub_basis, sub_cover) = basis_recursion(&contracted)?;
        let circuits = sub_basis
            .into_iter()
            .map(|c| {
                let lifted = con_map.lift_set(c);
                if m.rep().indicator_image(lifted).iter().all(|&v| v == 0) {
                    lifted
                } else {
                    let with_e = lifted.with(e);
                    debug_assert!(
                        m.rep().indicator_image(with_e).iter().all(|&v| v == 0),
                        "contraction lift must stay directed"
                    );
                    with_e
                }
            })
            .collect();
        // The lift adds only `e`, which cannot enter the cover of the
        // contraction minor, so every parity is preserved as-is.
        Ok((circuits, con_map.lift_set(sub_cover)))
    }
}

/// Post-hoc verification shared by the basis constructions: the family
/// has the right cardinality, is GF(2)-independent, every member is a
/// directed circuit, and (when given) the cover meets every member oddly.
fn verify_basis(
    m: &OrientedMatroid,
    circuits: &[ElemSet],
    cover: Option<ElemSet>,
) -> Result<()> {
    let expected = m.n_elements() - m.rank();
    if circuits.len() != expected {
        return Err(Error::invariant(format!(
            "directed circuit basis has {} members, expected {}",
            circuits.len(),
            expected
        )));
    }
    if gf2_rank(&incidence_rows(circuits, m.n_elements())) != circuits.len() {
        return Err(Error::invariant(
            "directed circuit basis is GF(2)-dependent".to_string(),
        ));
    }
    for &c in circuits {
        if !m.verify_directed_circuit(c) {
            return Err(Error::invariant(format!(
                "basis member {:?} is not a directed circuit",
                c.to_vec()
            )));
        }
    }
    if let Some(j) = cover {
        for &c in circuits {
            if !j.odd_overlap(c) {
                return Err(Error::invariant(format!(
                    "cover misses basis member {:?} oddly",
                    c.to_vec()
                )));
            }
        }
    }
    Ok(())
}

/// Directed circuit basis and parity cover of a totally cyclic host.
///
/// Runs the delete/contract recursion (no circuit enumeration), then
/// re-verifies every claim against the representation before returning.
/// Fails with [`Error::NotTotallyCyclic`] naming the first element that
/// lies in no directed circuit.
pub fn directed_basis_and_cover(
    m: &OrientedMatroid,
) -> Result<(DirectedCircuitBasis, ParityCover)> {
    require_totally_cyclic(m)?;
    let (circuits, elements) = basis_recursion(m)?;
    verify_basis(m, &circuits, Some(elements))?;
    Ok((DirectedCircuitBasis { circuits }, ParityCover { elements }))
}

/// Is the set coindependent, i.e. does deleting it preserve the rank?
pub fn is_coindependent(m: &OrientedMatroid, set: ElemSet) -> Result<bool> {
    if !set.is_subset(m.ground()) {
        let offender = (set - m.ground()).min_element().unwrap_or(0);
        return Err(Error::ElementOutOfRange {
            element: offender,
            elements: m.n_elements(),
        });
    }
    let kept: Vec<usize> = (m.ground() - set).to_vec();
    Ok(m.rep().select_columns(&kept).rank() == m.rank())
}

/// Directed circuit basis in which every element of `marked` lies in
/// exactly one member.
///
/// Requires `marked` coindependent and `m - marked` totally cyclic. Each
/// marked element `x` contributes the directed circuit through `x` of
/// `m - (marked \ {x})`; the rest of the basis comes from `m - marked`.
pub fn basis_with_marked_set(
    m: &OrientedMatroid,
    marked: ElemSet,
) -> Result<DirectedCircuitBasis> {
    if !is_coindependent(m, marked)? {
        return Err(Error::NotCoindependent);
    }
    let (rest, rest_map) = m.delete(marked)?;
    if let Some(e) = first_acyclic_element(&rest)? {
        return Err(Error::NotTotallyCyclic {
            element: rest_map.parent_position(e),
        });
    }
    let mut circuits = Vec::with_capacity(m.n_elements() - m.rank());
    for x in marked.iter() {
        let (minor, map) = m.delete(marked.without(x))?;
        let pos = map
            .restrict_from_parent(ElemSet::singleton(x))
            .min_element()
            .expect("x survives deleting the other marked elements");
        let c = farkas::directed_circuit_through(&minor, pos)?;
        circuits.push(map.lift_set(c));
    }
    let (rest_basis, _) = directed_basis_and_cover(&rest)?;
    circuits.extend(
        rest_basis
            .circuits
            .into_iter()
            .map(|c| rest_map.lift_set(c)),
    );
    verify_basis(m, &circuits, None)?;
    for x in marked.iter() {
        let through = circuits.iter().filter(|c| c.contains(x)).count();
        if through != 1 {
            return Err(Error::invariant(format!(
                "marked element {x} lies in {through} basis members, expected 1"
            )));
        }
    }
    Ok(DirectedCircuitBasis { circuits })
}

/// Exhaustive non-evenness decision: enumerate the directed circuits and
/// solve the parity system "meet each one oddly" over GF(2).
///
/// Returns a verified cover when the host is non-even, `None` otherwise.
/// Subject to the host's enumeration bound; no total cyclicity is
/// required (elements in no directed circuit simply appear in no
/// equation).
pub fn non_even_bruteforce(m: &OrientedMatroid) -> Result<Option<ParityCover>> {
    let directed: Vec<ElemSet> = m
        .circuits()?
        .iter()
        .filter(|c| c.is_directed())
        .map(|c| c.support())
        .collect();
    let system = incidence_rows(&directed, m.n_elements());
    let rhs = GF2Vector::from_indices(directed.len(), 0..directed.len());
    let Some(solution) = gf2_solve(&system, &rhs) else {
        return Ok(None);
    };
    let elements: ElemSet = solution.ones().collect();
    for &c in &directed {
        if !elements.odd_overlap(c) {
            return Err(Error::invariant(format!(
                "parity cover misses directed circuit {:?}",
                c.to_vec()
            )));
        }
    }
    Ok(Some(ParityCover { elements }))
}

/// Evaluate four characterisations of non-evenness independently on a
/// totally cyclic host (within the enumeration bound) and report them
/// side by side.
pub fn equivalence_suite(m: &OrientedMatroid) -> Result<EquivalenceReport> {
    require_totally_cyclic(m)?;
    let directed: Vec<ElemSet> = m
        .circuits()?
        .iter()
        .filter(|c| c.is_directed())
        .map(|c| c.support())
        .collect();
    let n = m.n_elements();

    let non_even = non_even_bruteforce(m)?.is_some();

    // Odd empty sums: one unknown per directed circuit, one zero-sum
    // equation per element, one equation forcing odd cardinality.
    let mut rows: Vec<GF2Vector> = (0..n)
        .map(|e| {
            GF2Vector::from_indices(
                directed.len(),
                directed
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.contains(e))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    rows.push(GF2Vector::from_indices(directed.len(), 0..directed.len()));
    let system = GF2Matrix::from_rows(rows, directed.len());
    let mut rhs = GF2Vector::zeros(n + 1);
    rhs.set(n, true);
    let no_odd_empty_sum = gf2_solve(&system, &rhs).is_none();

    let (basis, cover) = directed_basis_and_cover(m)?;
    let expansion_columns = incidence_transpose(&basis.circuits, n);
    let expansions_all_odd = directed.iter().try_fold(true, |acc, &c| {
        let target = GF2Vector::from_indices(n, c.iter());
        let weights = gf2_solve(&expansion_columns, &target).ok_or_else(|| {
            Error::invariant(format!(
                "directed circuit {:?} has no expansion over the basis",
                c.to_vec()
            ))
        })?;
        Ok::<bool, Error>(acc && weights.count_ones() % 2 == 1)
    })?;

    let cover_hits_all_directed_odd = directed.iter().all(|&c| cover.hits_oddly(c));

    Ok(EquivalenceReport {
        non_even,
        no_odd_empty_sum,
        expansions_all_odd,
        cover_hits_all_directed_odd,
    })
}

/// Element-by-member incidence: one row per element, one column per set,
/// so `A x = 1_C` solves for expansion weights `x`.
fn incidence_transpose(sets: &[ElemSet], n: usize) -> GF2Matrix {
    let rows: Vec<GF2Vector> = (0..n)
        .map(|e| {
            GF2Vector::from_indices(
                sets.len(),
                sets.iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(e))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    GF2Matrix::from_rows(rows, sets.len())
}

/// Find a directed circuit of odd size without enumerating circuits.
///
/// Restricts to the totally cyclic part, builds the directed circuit
/// basis, and returns the first odd member (lifted to host positions).
/// When every member is even, all directed circuit sizes are even and
/// `None` is sound.
pub fn find_odd_directed_circuit(m: &OrientedMatroid) -> Result<Option<ElemSet>> {
    let (tc, map) = farkas::totally_cyclic_part(m)?;
    if tc.n_elements() == 0 {
        return Ok(None);
    }
    let (basis, _) = directed_basis_and_cover(&tc)?;
    for c in basis.circuits {
        if c.len() % 2 == 1 {
            let lifted = map.lift_set(c);
            if !m.verify_directed_circuit(lifted) {
                return Err(Error::invariant(format!(
                    "lifted odd circuit {:?} failed re-verification",
                    lifted.to_vec()
                )));
            }
            return Ok(Some(lifted));
        }
    }
    Ok(None)
}

/// Decide whether the host has an even directed circuit by consulting a
/// non-evenness oracle on its totally cyclic part.
///
/// When every basis member is odd, circuit size mod 2 equals expansion
/// weight mod 2, so an even directed circuit exists exactly when some
/// expansion is even — that is, exactly when the totally cyclic part is
/// *not* non-even. An even basis member short-circuits the oracle.
pub fn detect_even_circuit_via_noneven_oracle<F>(
    m: &OrientedMatroid,
    mut noneven_oracle: F,
) -> Result<bool>
where
    F: FnMut(&OrientedMatroid) -> Result<bool>,
{
    let (tc, _) = farkas::totally_cyclic_part(m)?;
    if tc.n_elements() == 0 {
        return Ok(false);
    }
    let (basis, _) = directed_basis_and_cover(&tc)?;
    if basis.circuits.iter().any(|c| c.len() % 2 == 0) {
        return Ok(true);
    }
    Ok(!noneven_oracle(&tc)?)
}

/// Decide non-evenness by consulting an even-directed-circuit oracle on
/// a series duplication of the totally cyclic part.
///
/// Duplicating every element *outside* the constructed cover `J` shifts
/// each directed circuit's size to `|C ∩ J| (mod 2)`, so the duplicated
/// matroid has no even directed circuit exactly when `J` meets every
/// directed circuit oddly — exactly when the host is non-even.
pub fn decide_noneven_via_even_oracle<F>(m: &OrientedMatroid, mut even_oracle: F) -> Result<bool>
where
    F: FnMut(&OrientedMatroid) -> Result<bool>,
{
    let (tc, _) = farkas::totally_cyclic_part(m)?;
    if tc.n_elements() == 0 {
        return Ok(true);
    }
    let (_, cover) = directed_basis_and_cover(&tc)?;
    let (duplicated, _) = series_duplicate(&tc, tc.ground() - cover.elements)?;
    Ok(!even_oracle(&duplicated)?)
}

/// Series-duplicate each element of `z`: the new matroid gains one copy
/// per duplicated element, and every circuit through an original passes
/// through its copy with the same sign.
///
/// The representation appends, per duplicated element `e`, one row with
/// `+1` at `e` and `-1` at the copy's fresh column. Copies receive fresh
/// labels above the host's maximum, in ascending order of `z`. The
/// returned map sends each position of the result to the host position
/// it descends from (copies map to their originals). Total unimodularity
/// is preserved by construction and additionally spot-checked to order 3.
pub fn series_duplicate(
    m: &OrientedMatroid,
    z: ElemSet,
) -> Result<(OrientedMatroid, MinorMap)> {
    if !z.is_subset(m.ground()) {
        let offender = (z - m.ground()).min_element().unwrap_or(0);
        return Err(Error::ElementOutOfRange {
            element: offender,
            elements: m.n_elements(),
        });
    }
    let n = m.n_elements();
    let r = m.rep().n_rows();
    let k = z.len();
    if n + k > MAX_ELEMENTS || r + k > MAX_ELEMENTS {
        return Err(Error::RepresentationTooLarge {
            rows: r + k,
            cols: n + k,
            max: MAX_ELEMENTS,
        });
    }

    let mut rows: Vec<Vec<i8>> = Vec::with_capacity(r + k);
    for i in 0..r {
        let mut row = m.rep().row(i).to_vec();
        row.resize(n + k, 0);
        rows.push(row);
    }
    for (i, e) in z.iter().enumerate() {
        let mut row = vec![0i8; n + k];
        row[e] = 1;
        row[n + i] = -1;
        rows.push(row);
    }
    let rep = if rows.is_empty() {
        TUMatrix::zeros(0, n + k)
    } else {
        TUMatrix::from_rows(&rows)?
    };

    let entries: Vec<i64> = (0..rep.n_rows())
        .flat_map(|i| (0..rep.n_cols()).map(move |j| (i, j)))
        .map(|(i, j)| i64::from(rep.get(i, j)))
        .collect();
    if let TuVerdict::Refuted(_) = check_tu(rep.n_rows(), rep.n_cols(), &entries, 3) {
        return Err(Error::NotTotallyUnimodular {
            stage: "series duplication",
        });
    }

    let fresh = m.labels().iter().copied().max().map_or(0, |l| l + 1);
    let mut labels = m.labels().to_vec();
    labels.extend((0..k as u32).map(|i| fresh + i));
    let result = OrientedMatroid::from_rep_with_labels(rep, labels)?
        .with_enumeration_bound(m.enumeration_bound());
    let map = MinorMap::from_positions((0..n).chain(z.iter()).collect());
    Ok((result, map))
}

//! Oriented matroids of totally unimodular matrices.
//!
//! An [`OrientedMatroid`] wraps a `{-1, 0, 1}` representative matrix whose
//! columns are the ground-set elements. Signed circuits are the
//! minimal-support nonzero kernel vectors of the matrix (signs read off
//! the vector entries); signed cocircuits are the signed circuits of the
//! dual, represented by a kernel basis of the primal. Elements carry
//! opaque labels that survive minors, so certificates computed deep in a
//! reduction can always be reported in the caller's terms.

mod enumerate;
mod gb;
mod iso;
mod signed;

pub use gb::{gb_minors, is_butterfly_contractible, GbMinor};
pub use iso::is_isomorphic;
pub use signed::{ElemSet, SignedSet, MAX_ELEMENTS};

pub(crate) use enumerate::compress_family;
pub(crate) use gb::GbExplorer;
pub(crate) use iso::signed_families_isomorphic;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::TUMatrix;

/// Default refusal threshold for whole-family enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// An oriented matroid represented by a totally unimodular matrix.
///
/// Construction validates dimensions and entry range; total
/// unimodularity itself is the caller's contract (use
/// [`crate::linalg::check_tu`] for external input). Circuit and cocircuit
/// families, the rank, and the dual representation are computed lazily
/// and cached.
#[derive(Clone)]
pub struct OrientedMatroid {
    rep: TUMatrix,
    labels: Vec<u32>,
    enum_bound: usize,
    rank_cache: OnceLock<usize>,
    circuits_cache: OnceLock<Vec<SignedSet>>,
    cocircuits_cache: OnceLock<Vec<SignedSet>>,
    dual_rep_cache: OnceLock<TUMatrix>,
}

impl OrientedMatroid {
    /// Wrap a representative matrix; elements are labelled `0..n` in
    /// column order.
    pub fn from_rep(rep: TUMatrix) -> Result<Self> {
        let labels = (0..rep.n_cols() as u32).collect();
        Self::from_rep_with_labels(rep, labels)
    }

    /// Wrap a representative matrix with explicit element labels.
    pub fn from_rep_with_labels(rep: TUMatrix, labels: Vec<u32>) -> Result<Self> {
        if rep.n_cols() > MAX_ELEMENTS || rep.n_rows() > MAX_ELEMENTS {
            return Err(Error::RepresentationTooLarge {
                rows: rep.n_rows(),
                cols: rep.n_cols(),
                max: MAX_ELEMENTS,
            });
        }
        assert_eq!(labels.len(), rep.n_cols(), "one label per column");
        Ok(OrientedMatroid {
            rep,
            labels,
            enum_bound: DEFAULT_ENUMERATION_BOUND,
            rank_cache: OnceLock::new(),
            circuits_cache: OnceLock::new(),
            cocircuits_cache: OnceLock::new(),
            dual_rep_cache: OnceLock::new(),
        })
    }

    /// Internal constructor that pre-fills caches (used where families
    /// are derived combinatorially instead of re-enumerated).
    pub(crate) fn from_parts(
        rep: TUMatrix,
        labels: Vec<u32>,
        enum_bound: usize,
        circuits: Option<Vec<SignedSet>>,
        cocircuits: Option<Vec<SignedSet>>,
    ) -> Self {
        let m = OrientedMatroid {
            rep,
            labels,
            enum_bound,
            rank_cache: OnceLock::new(),
            circuits_cache: OnceLock::new(),
            cocircuits_cache: OnceLock::new(),
            dual_rep_cache: OnceLock::new(),
        };
        if let Some(c) = circuits {
            let _ = m.circuits_cache.set(c);
        }
        if let Some(c) = cocircuits {
            let _ = m.cocircuits_cache.set(c);
        }
        m
    }

    /// Replace the enumeration refusal bound (default
    /// [`DEFAULT_ENUMERATION_BOUND`]).
    pub fn with_enumeration_bound(mut self, bound: usize) -> Self {
        self.enum_bound = bound;
        self
    }

    pub fn enumeration_bound(&self) -> usize {
        self.enum_bound
    }

    /// Number of ground-set elements.
    pub fn n_elements(&self) -> usize {
        self.rep.n_cols()
    }

    /// The full ground set as a position mask.
    pub fn ground(&self) -> ElemSet {
        ElemSet::full(self.n_elements())
    }

    /// The representative matrix.
    pub fn rep(&self) -> &TUMatrix {
        &self.rep
    }

    /// Element labels by position.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Label of the element at a position.
    pub fn label_of(&self, pos: usize) -> u32 {
        self.labels[pos]
    }

    /// Position of a label, if present.
    pub fn position_of(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Translate a position set to sorted labels.
    pub fn labels_of(&self, set: ElemSet) -> Vec<u32> {
        let mut v: Vec<u32> = set.iter().map(|p| self.labels[p]).collect();
        v.sort_unstable();
        v
    }

    /// True when the element's column is all-zero.
    pub fn is_loop(&self, pos: usize) -> bool {
        assert!(pos < self.n_elements(), "position out of range");
        (0..self.rep.n_rows()).all(|r| self.rep.get(r, pos) == 0)
    }

    /// Matroid rank (rational rank of the representation), cached.
    pub fn rank(&self) -> usize {
        *self.rank_cache.get_or_init(|| self.rep.rank())
    }

    /// All signed circuits, one canonical representative per `{X, -X}`
    /// pair, in a fixed deterministic order.
    ///
    /// Refuses with [`Error::EnumerationBoundExceeded`] when the ground
    /// set exceeds the configured bound.
    pub fn circuits(&self) -> Result<&[SignedSet]> {
        if let Some(c) = self.circuits_cache.get() {
            return Ok(c);
        }
        self.check_enum_bound()?;
        let c = enumerate::enumerate_signed_circuits(&self.rep)?;
        Ok(self.circuits_cache.get_or_init(|| c))
    }

    /// All signed cocircuits (signed circuits of the dual), canonical and
    /// deterministic, subject to the same enumeration bound.
    pub fn cocircuits(&self) -> Result<&[SignedSet]> {
        if let Some(c) = self.cocircuits_cache.get() {
            return Ok(c);
        }
        self.check_enum_bound()?;
        let dual_rep = self.dual_rep()?.clone();
        let c = enumerate::enumerate_signed_circuits(&dual_rep)?;
        Ok(self.cocircuits_cache.get_or_init(|| c))
    }

    /// The dual oriented matroid, represented by a kernel basis of this
    /// representation. Labels are preserved; computed families carry over
    /// (circuits of the dual are this matroid's cocircuits).
    pub fn dual(&self) -> Result<OrientedMatroid> {
        let rep = self.dual_rep()?.clone();
        Ok(Self::from_parts(
            rep,
            self.labels.clone(),
            self.enum_bound,
            self.cocircuits_cache.get().cloned(),
            self.circuits_cache.get().cloned(),
        ))
    }

    /// Kernel-basis representation of the dual, cached.
    pub(crate) fn dual_rep(&self) -> Result<&TUMatrix> {
        if let Some(r) = self.dual_rep_cache.get() {
            return Ok(r);
        }
        let k = self.rep.kernel_basis()?;
        Ok(self.dual_rep_cache.get_or_init(|| k))
    }

    /// Delete a set of elements. Returns the minor and the position map
    /// into this matroid.
    pub fn delete(&self, z: ElemSet) -> Result<(OrientedMatroid, MinorMap)> {
        self.check_in_ground(z)?;
        let keep: Vec<usize> = (self.ground() - z).to_vec();
        let rep = self.rep.select_columns(&keep);
        let labels = keep.iter().map(|&p| self.labels[p]).collect();
        let minor = Self::from_rep_with_labels(rep, labels)?.with_enumeration_bound(self.enum_bound);
        Ok((minor, MinorMap { to_parent: keep }))
    }

    /// Contract a set of elements, one pivot per non-loop element (loops
    /// contract as deletions). Returns the minor and the position map.
    pub fn contract(&self, z: ElemSet) -> Result<(OrientedMatroid, MinorMap)> {
        self.check_in_ground(z)?;
        let mut rep = self.rep.clone();
        let mut keep: Vec<usize> = (0..self.n_elements()).collect();
        for p in z.iter() {
            let idx = keep
                .iter()
                .position(|&q| q == p)
                .expect("contract positions are tracked");
            let is_zero = (0..rep.n_rows()).all(|r| rep.get(r, idx) == 0);
            rep = if is_zero {
                drop_column(&rep, idx)
            } else {
                let pivoted = rep.pivot_unit_column(idx)?;
                drop_first_row_and_column(&pivoted, idx)
            };
            keep.remove(idx);
        }
        let labels = keep.iter().map(|&p| self.labels[p]).collect();
        let minor = Self::from_rep_with_labels(rep, labels)?.with_enumeration_bound(self.enum_bound);
        Ok((minor, MinorMap { to_parent: keep }))
    }

    /// Reorient: negate the columns of `s`. Cached families are carried
    /// over by flipping signs inside `s`, re-canonicalising and
    /// re-sorting, so a reorientation never forces re-enumeration.
    pub fn reorient(&self, s: ElemSet) -> OrientedMatroid {
        assert!(s.is_subset(self.ground()), "reorientation set out of range");
        let mut rep = self.rep.clone();
        for c in s.iter() {
            rep = rep.negate_column(c);
        }
        let flip = |family: &Vec<SignedSet>| -> Vec<SignedSet> {
            let mut flipped: Vec<SignedSet> =
                family.iter().map(|x| x.reorient(s).canonical()).collect();
            enumerate::sort_family(&mut flipped);
            flipped
        };
        let m = Self::from_parts(
            rep,
            self.labels.clone(),
            self.enum_bound,
            self.circuits_cache.get().map(flip),
            self.cocircuits_cache.get().map(flip),
        );
        if let Some(&r) = self.rank_cache.get() {
            let _ = m.rank_cache.set(r);
        }
        m
    }

    /// The unique signed circuit (canonical representative) whose support
    /// is exactly the given set; errors when the support does not carry a
    /// one-dimensional kernel.
    pub fn signed_circuit_on_support(&self, support: ElemSet) -> Result<SignedSet> {
        self.check_in_ground(support)?;
        enumerate::signed_circuit_on_support(&self.rep, support)
    }

    /// Re-verification helper: is this set the support of a circuit?
    /// Checked from scratch against the representation (rational rank),
    /// not against any cached family.
    pub fn verify_circuit_support(&self, support: ElemSet) -> bool {
        if support.is_empty() || self.check_in_ground(support).is_err() {
            return false;
        }
        let cols = support.to_vec();
        let sub = self.rep.select_columns(&cols);
        if sub.rank() != cols.len() - 1 {
            return false;
        }
        // Minimality: every one-element-removed subset is independent.
        cols.iter().all(|&skip| {
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != skip).collect();
            self.rep.select_columns(&rest).rank() == rest.len()
        })
    }

    /// Re-verification helper: is this set the support of a *directed*
    /// circuit?
    pub fn verify_directed_circuit(&self, support: ElemSet) -> bool {
        self.verify_circuit_support(support)
            && matches!(
                enumerate::signed_circuit_on_support(&self.rep, support),
                Ok(x) if x.is_directed()
            )
    }

    /// Re-verification helper: is this set the support of a directed
    /// cocircuit?
    pub fn verify_directed_cocircuit(&self, support: ElemSet) -> bool {
        match self.dual() {
            Ok(d) => d.verify_directed_circuit(support),
            Err(_) => false,
        }
    }

    fn check_enum_bound(&self) -> Result<()> {
        if self.n_elements() > self.enum_bound {
            return Err(Error::EnumerationBoundExceeded {
                elements: self.n_elements(),
                bound: self.enum_bound,
            });
        }
        Ok(())
    }

    fn check_in_ground(&self, z: ElemSet) -> Result<()> {
        if !z.is_subset(self.ground()) {
            let offender = (z - self.ground()).min_element().unwrap_or(0);
            return Err(Error::ElementOutOfRange {
                element: offender,
                elements: self.n_elements(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for OrientedMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "OrientedMatroid(n={}, labels={:?}, rep={:?})",
            self.n_elements(),
            self.labels,
            self.rep
        )
    }
}

/// Position map from a minor (or other derived matroid) back to its
/// parent: entry `i` is the parent position of the derived element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorMap {
    to_parent: Vec<usize>,
}

impl MinorMap {
    /// Identity map on `n` positions.
    pub fn identity(n: usize) -> Self {
        MinorMap {
            to_parent: (0..n).collect(),
        }
    }

    pub(crate) fn from_positions(to_parent: Vec<usize>) -> Self {
        MinorMap { to_parent }
    }

    /// Parent position of a derived position.
    pub fn parent_position(&self, pos: usize) -> usize {
        self.to_parent[pos]
    }

    /// All parent positions, indexed by derived position.
    pub fn to_parent(&self) -> &[usize] {
        &self.to_parent
    }

    /// Number of derived positions.
    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }

    /// Lift a derived-position set into parent positions.
    pub fn lift_set(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|p| self.to_parent[p]).collect()
    }

    /// Lift a signed set into parent positions.
    pub fn lift_signed(&self, x: SignedSet) -> SignedSet {
        SignedSet::new(self.lift_set(x.positive()), self.lift_set(x.negative()))
    }

    /// Push a parent-position set down to derived positions (elements not
    /// present in the minor are dropped).
    pub fn restrict_from_parent(&self, parent_set: ElemSet) -> ElemSet {
        self.to_parent
            .iter()
            .enumerate()
            .filter(|&(_, &p)| parent_set.contains(p))
            .map(|(i, _)| i)
            .collect()
    }

    /// Compose: `second` maps into `first`'s domain, the result maps
    /// `second`'s positions straight to `first`'s parent.
    pub fn compose(first: &MinorMap, second: &MinorMap) -> MinorMap {
        MinorMap {
            to_parent: second
                .to_parent
                .iter()
                .map(|&mid| first.to_parent[mid])
                .collect(),
        }
    }
}

fn drop_column(m: &TUMatrix, col: usize) -> TUMatrix {
    let keep: Vec<usize> = (0..m.n_cols()).filter(|&c| c != col).collect();
    m.select_columns(&keep)
}

fn drop_first_row_and_column(m: &TUMatrix, col: usize) -> TUMatrix {
    let mut rows: Vec<Vec<i8>> = Vec::with_capacity(m.n_rows().saturating_sub(1));
    for r in 1..m.n_rows() {
        let row: Vec<i8> = m
            .row(r)
            .iter()
            .enumerate()
            .filter(|&(c, _)| c != col)
            .map(|(_, &v)| v)
            .collect();
        rows.push(row);
    }
    if rows.is_empty() {
        return TUMatrix::zeros(0, m.n_cols() - 1);
    }
    TUMatrix::from_rows(&rows).expect("filtered rows stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::TUMatrix;

    fn triangle() -> OrientedMatroid {
        let rep = TUMatrix::from_rows(&[
            vec![-1, 0, 1],
            vec![1, -1, 0],
            vec![0, 1, -1],
        ])
        .unwrap();
        OrientedMatroid::from_rep(rep).unwrap()
    }

    #[test]
    fn triangle_has_one_directed_circuit() {
        let m = triangle();
        let circuits = m.circuits().unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0].support(), ElemSet::full(3));
        assert!(circuits[0].is_directed());
    }

    #[test]
    fn rank_is_cached_and_correct() {
        let m = triangle();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn free_matroid_has_no_circuits_and_loop_dual() {
        let m = OrientedMatroid::from_rep(TUMatrix::identity(3)).unwrap();
        assert!(m.circuits().unwrap().is_empty());
        // Dual of the free matroid: every element is a loop, giving three
        // singleton circuits.
        let d = m.dual().unwrap();
        assert_eq!(d.rep().n_rows(), 0);
        let dc = d.circuits().unwrap();
        assert_eq!(dc.len(), 3);
        assert!(dc.iter().all(|c| c.size() == 1 && c.is_directed()));
    }

    #[test]
    fn dual_involution_preserves_circuits() {
        let m = triangle();
        let dd = m.dual().unwrap().dual().unwrap();
        assert_eq!(m.circuits().unwrap(), dd.circuits().unwrap());
        assert_eq!(m.cocircuits().unwrap(), dd.cocircuits().unwrap());
    }

    #[test]
    fn cocircuits_of_free_matroid_are_singletons() {
        let m = OrientedMatroid::from_rep(TUMatrix::identity(4)).unwrap();
        let cc = m.cocircuits().unwrap();
        assert_eq!(cc.len(), 4);
        for (i, c) in cc.iter().enumerate() {
            assert_eq!(c.support(), ElemSet::singleton(i));
        }
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let m = triangle().with_enumeration_bound(2);
        assert!(matches!(
            m.circuits(),
            Err(Error::EnumerationBoundExceeded { elements: 3, bound: 2 })
        ));
    }

    #[test]
    fn delete_nothing_is_identity() {
        let m = triangle();
        let (d, map) = m.delete(ElemSet::EMPTY).unwrap();
        assert_eq!(d.rep(), m.rep());
        assert_eq!(map.to_parent(), &[0, 1, 2]);
    }

    #[test]
    fn delete_breaks_the_triangle() {
        let m = triangle();
        let (d, map) = m.delete(ElemSet::singleton(1)).unwrap();
        assert!(d.circuits().unwrap().is_empty());
        assert_eq!(map.to_parent(), &[0, 2]);
        assert_eq!(d.labels(), &[0, 2]);
    }

    #[test]
    fn contract_triangle_edge_leaves_a_digon() {
        let m = triangle();
        let (c, map) = m.contract(ElemSet::singleton(0)).unwrap();
        assert_eq!(c.n_elements(), 2);
        assert_eq!(map.to_parent(), &[1, 2]);
        let circuits = c.circuits().unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0].support(), ElemSet::full(2));
        assert!(circuits[0].is_directed());
    }

    #[test]
    fn contracting_a_loop_deletes_it() {
        // One loop (zero column) next to a coloop.
        let rep = TUMatrix::from_rows(&[vec![0, 1]]).unwrap();
        let m = OrientedMatroid::from_rep(rep).unwrap();
        let (c, map) = m.contract(ElemSet::singleton(0)).unwrap();
        assert_eq!(c.n_elements(), 1);
        assert_eq!(map.to_parent(), &[1]);
        assert_eq!(c.rank(), 1);
    }

    #[test]
    fn contract_then_delete_commutes_with_delete_then_contract() {
        let m = triangle();
        let (a, _) = m.contract(ElemSet::singleton(0)).unwrap();
        let (ad, _) = a.delete(ElemSet::singleton(0)).unwrap(); // position of old 1
        let (b, _) = m.delete(ElemSet::singleton(1)).unwrap();
        let (bc, _) = b.contract(ElemSet::singleton(0)).unwrap();
        assert_eq!(ad.labels(), bc.labels());
        assert_eq!(ad.circuits().unwrap(), bc.circuits().unwrap());
    }

    #[test]
    fn reorient_flips_cached_families_consistently() {
        let m = triangle();
        let _ = m.circuits().unwrap();
        let s = ElemSet::singleton(1);
        let r = m.reorient(s);
        // Against a fresh enumeration of the negated representation.
        let fresh = OrientedMatroid::from_rep(r.rep().clone()).unwrap();
        assert_eq!(r.circuits().unwrap(), fresh.circuits().unwrap());
        // Reorienting the full ground set fixes every circuit family.
        let full = m.reorient(m.ground());
        assert_eq!(full.circuits().unwrap(), m.circuits().unwrap());
    }

    #[test]
    fn minor_map_composition_and_lifting() {
        let map1 = MinorMap::from_positions(vec![0, 2, 3]);
        let map2 = MinorMap::from_positions(vec![1, 2]);
        let composed = MinorMap::compose(&map1, &map2);
        assert_eq!(composed.to_parent(), &[2, 3]);
        assert_eq!(
            map1.lift_set([1usize, 2].into_iter().collect()),
            [2usize, 3].into_iter().collect()
        );
        assert_eq!(
            map1.restrict_from_parent([2usize, 1].into_iter().collect()),
            ElemSet::singleton(1)
        );
    }

    #[test]
    fn verify_circuit_support_checks_minimality() {
        let m = triangle();
        assert!(m.verify_circuit_support(ElemSet::full(3)));
        assert!(!m.verify_circuit_support([0usize, 1].into_iter().collect()));
        assert!(!m.verify_circuit_support(ElemSet::EMPTY));
        assert!(m.verify_directed_circuit(ElemSet::full(3)));
    }

    #[test]
    fn labels_survive_minor_chains() {
        let m = triangle();
        let (a, _) = m.delete(ElemSet::singleton(0)).unwrap();
        let (b, map) = a.contract(ElemSet::singleton(0)).unwrap();
        assert_eq!(b.labels(), &[2]);
        assert_eq!(map.to_parent(), &[1]);
    }
}

//! Certificate searches that avoid circuit enumeration.
//!
//! Every element of an oriented regular matroid lies in a directed circuit
//! or in a directed cocircuit, never both. The circuit side reduces to an
//! exact conical feasibility question on the representation's columns:
//! `e` lies in a directed circuit exactly when `-x_e` is a non-negative
//! combination of the other columns. The cocircuit side is the same
//! search on the dual representation. On top of the dichotomy sit the
//! total-cyclicity test and the totally cyclic part `TC`, the largest
//! deletion minor in which every element lies in a directed circuit.

use crate::error::{Error, Result};
use crate::linalg::{conical_feasibility, Rational};
use crate::matroid::{ElemSet, MinorMap, OrientedMatroid};

use num_traits::Zero;

/// Outcome of the circuit/cocircuit dichotomy for one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FarkasCertificate {
    /// The element lies in this directed circuit.
    DirectedCircuit { element: usize, circuit: ElemSet },
    /// The element lies in this directed cocircuit.
    DirectedCocircuit { element: usize, cocircuit: ElemSet },
}

impl FarkasCertificate {
    /// The queried element.
    pub fn element(&self) -> usize {
        match *self {
            FarkasCertificate::DirectedCircuit { element, .. } => element,
            FarkasCertificate::DirectedCocircuit { element, .. } => element,
        }
    }

    /// The carried circuit or cocircuit.
    pub fn support(&self) -> ElemSet {
        match *self {
            FarkasCertificate::DirectedCircuit { circuit, .. } => circuit,
            FarkasCertificate::DirectedCocircuit { cocircuit, .. } => cocircuit,
        }
    }

    /// Whether the circuit branch was taken.
    pub fn is_circuit(&self) -> bool {
        matches!(self, FarkasCertificate::DirectedCircuit { .. })
    }
}

/// Columns of `rep` restricted to `support \ {e}`, paired with their
/// positions, plus the negated column of `e`.
fn feasibility_data(
    m: &OrientedMatroid,
    support: ElemSet,
    e: usize,
) -> (Vec<usize>, Vec<Vec<i8>>, Vec<i8>) {
    let positions: Vec<usize> = support.without(e).iter().collect();
    let cols: Vec<Vec<i8>> = positions.iter().map(|&f| m.rep().column(f)).collect();
    let target: Vec<i8> = m.rep().column(e).iter().map(|&v| -v).collect();
    (positions, cols, target)
}

/// Feasibility of `-x_e` over the cone of the columns in `support \ {e}`.
fn cone_feasible(m: &OrientedMatroid, support: ElemSet, e: usize) -> Option<Vec<Rational>> {
    let (_, cols, target) = feasibility_data(m, support, e);
    conical_feasibility(&cols, &target)
}

/// Does `e` lie in a directed circuit? A loop answers `true` through the
/// empty conical combination; a coloop's column is outside the span of
/// the rest and answers `false`.
pub fn in_directed_circuit(m: &OrientedMatroid, e: usize) -> Result<bool> {
    check_element(m, e)?;
    Ok(cone_feasible(m, m.ground(), e).is_some())
}

/// The directed circuit through `e` produced by the greedy removal loop:
/// starting from the whole ground set, repeatedly drop the first element
/// (in increasing order) whose removal keeps a directed circuit through
/// `e`, until no element can be dropped.
///
/// Candidates the current feasible combination does not use are dropped
/// without a fresh feasibility query — the restricted combination itself
/// witnesses feasibility, so the decision matches the literal loop.
pub fn directed_circuit_through(m: &OrientedMatroid, e: usize) -> Result<ElemSet> {
    check_element(m, e)?;
    let mut support = m.ground();
    let Some(mut alpha) = cone_feasible(m, support, e) else {
        return Err(Error::NoDirectedCircuit { element: e });
    };

    'shrink: loop {
        let others: Vec<usize> = support.without(e).iter().collect();
        for (i, &f) in others.iter().enumerate() {
            if alpha[i].is_zero() {
                support = support.without(f);
                alpha.remove(i);
                continue 'shrink;
            }
            if let Some(next) = cone_feasible(m, support.without(f), e) {
                support = support.without(f);
                alpha = next;
                continue 'shrink;
            }
        }
        break;
    }

    if !support.contains(e) || !m.verify_directed_circuit(support) {
        return Err(Error::invariant(format!(
            "greedy removal at element {e} ended on {support:?}, which is not a directed circuit"
        )));
    }
    Ok(support)
}

/// Decide the dichotomy for `e`: a directed circuit through `e`, or —
/// exactly when none exists — a directed cocircuit through `e`, found as
/// a directed circuit of the dual.
pub fn farkas_dichotomy(m: &OrientedMatroid, e: usize) -> Result<FarkasCertificate> {
    check_element(m, e)?;
    if in_directed_circuit(m, e)? {
        let circuit = directed_circuit_through(m, e)?;
        return Ok(FarkasCertificate::DirectedCircuit { element: e, circuit });
    }
    let dual = m.dual()?;
    let cocircuit = directed_circuit_through(&dual, e).map_err(|err| match err {
        Error::NoDirectedCircuit { element } => Error::invariant(format!(
            "element {element} lies in no directed circuit and no directed cocircuit"
        )),
        other => other,
    })?;
    Ok(FarkasCertificate::DirectedCocircuit { element: e, cocircuit })
}

/// Does every element lie in a directed circuit?
///
/// Answered by one feasibility query instead of one per element: a kernel
/// vector with every coordinate at least one exists exactly when every
/// element lies in a directed circuit (split such a vector into directed
/// circuits; conversely sum one circuit per element). Substituting
/// `y = 1 + s` turns it into conical feasibility of `A·s = -A·1`.
pub fn is_totally_cyclic(m: &OrientedMatroid) -> Result<bool> {
    let image = m.rep().indicator_image(m.ground());
    let target: Vec<i8> = image
        .iter()
        .map(|&v| {
            i8::try_from(-v).expect("row sums of a representation fit in i8")
        })
        .collect();
    let cols: Vec<Vec<i8>> = (0..m.n_elements()).map(|c| m.rep().column(c)).collect();
    Ok(conical_feasibility(&cols, &target).is_some())
}

/// The totally cyclic part: delete every element whose dichotomy answers
/// with a cocircuit. One deletion pass suffices — directed circuits are
/// disjoint from directed cocircuits, so they survive intact.
pub fn totally_cyclic_part(m: &OrientedMatroid) -> Result<(OrientedMatroid, MinorMap)> {
    let mut acyclic = ElemSet::EMPTY;
    for e in 0..m.n_elements() {
        if !in_directed_circuit(m, e)? {
            acyclic = acyclic.with(e);
        }
    }
    let (minor, map) = m.delete(acyclic)?;
    debug_assert!(is_totally_cyclic(&minor)?);
    Ok((minor, map))
}

fn check_element(m: &OrientedMatroid, e: usize) -> Result<()> {
    if e >= m.n_elements() {
        return Err(Error::ElementOutOfRange {
            element: e,
            elements: m.n_elements(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::TUMatrix;

    fn om(rows: &[&[i8]]) -> OrientedMatroid {
        let rep =
            TUMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap();
        OrientedMatroid::from_rep(rep).unwrap()
    }

    /// Oracle: is `e` in some enumerated directed circuit?
    fn oracle_in_directed(m: &OrientedMatroid, e: usize) -> bool {
        m.circuits()
            .unwrap()
            .iter()
            .any(|x| x.is_directed() && x.support().contains(e))
    }

    #[test]
    fn loops_lie_in_their_own_directed_circuit() {
        let m = om(&[&[0, 1]]);
        assert!(in_directed_circuit(&m, 0).unwrap());
        assert_eq!(directed_circuit_through(&m, 0).unwrap(), ElemSet::singleton(0));
    }

    #[test]
    fn coloops_lie_in_no_directed_circuit() {
        let m = om(&[&[1, 0], &[0, 1]]);
        assert!(!in_directed_circuit(&m, 0).unwrap());
        assert!(matches!(
            directed_circuit_through(&m, 0),
            Err(Error::NoDirectedCircuit { element: 0 })
        ));
    }

    #[test]
    fn directed_triangle_is_one_circuit() {
        let m = om(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]);
        for e in 0..3 {
            assert!(in_directed_circuit(&m, e).unwrap());
            assert_eq!(
                directed_circuit_through(&m, e).unwrap(),
                ElemSet::full(3),
                "unique circuit through {e}"
            );
        }
    }

    #[test]
    fn parallel_pair_answers_cocircuit() {
        let m = om(&[&[1, 1]]);
        for e in 0..2 {
            let cert = farkas_dichotomy(&m, e).unwrap();
            assert!(!cert.is_circuit());
            assert_eq!(cert.support(), ElemSet::full(2));
            assert!(m.verify_directed_cocircuit(cert.support()));
        }
    }

    #[test]
    fn antiparallel_pair_answers_circuit() {
        let m = om(&[&[1, -1]]);
        let cert = farkas_dichotomy(&m, 1).unwrap();
        assert!(cert.is_circuit());
        assert_eq!(cert.support(), ElemSet::full(2));
    }

    #[test]
    fn acyclic_path_yields_cocircuits() {
        // Incidence columns of a -> b -> c.
        let m = om(&[&[-1, 0], &[1, -1], &[0, 1]]);
        assert!(!is_totally_cyclic(&m).unwrap());
        for e in 0..2 {
            let cert = farkas_dichotomy(&m, e).unwrap();
            assert!(!cert.is_circuit());
            assert!(cert.support().contains(e));
            assert!(m.verify_directed_cocircuit(cert.support()));
        }
        let (tc, _) = totally_cyclic_part(&m).unwrap();
        assert_eq!(tc.n_elements(), 0);
    }

    #[test]
    fn triangle_with_pendant_keeps_only_the_triangle() {
        // Directed triangle on rows a,b,c plus a pendant edge c -> d.
        let m = om(&[
            &[-1, 0, 1, 0],
            &[1, -1, 0, 0],
            &[0, 1, -1, -1],
            &[0, 0, 0, 1],
        ]);
        assert!(!is_totally_cyclic(&m).unwrap());
        let (tc, map) = totally_cyclic_part(&m).unwrap();
        assert_eq!(map.to_parent(), &[0, 1, 2]);
        assert!(is_totally_cyclic(&tc).unwrap());
        let (tc2, map2) = totally_cyclic_part(&tc).unwrap();
        assert_eq!(tc2.n_elements(), tc.n_elements());
        assert_eq!(map2.to_parent(), &[0, 1, 2]);
    }

    #[test]
    fn dichotomy_matches_enumeration_on_small_hosts() {
        let hosts = [
            om(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]),
            om(&[&[1, 1]]),
            om(&[&[1, -1]]),
            om(&[&[0, 1, -1, 0], &[0, 0, 1, -1]]),
            om(&[&[1, 0, -1, 1], &[0, 1, 1, -1]]),
        ];
        for m in &hosts {
            for e in 0..m.n_elements() {
                let lp = in_directed_circuit(m, e).unwrap();
                assert_eq!(lp, oracle_in_directed(m, e));
                let cert = farkas_dichotomy(m, e).unwrap();
                assert_eq!(cert.is_circuit(), lp);
                assert!(cert.support().contains(e));
                if cert.is_circuit() {
                    assert!(m.verify_directed_circuit(cert.support()));
                } else {
                    assert!(m.verify_directed_cocircuit(cert.support()));
                }
            }
        }
    }

    #[test]
    fn total_cyclicity_agrees_with_per_element_queries() {
        let hosts = [
            om(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]),
            om(&[&[1, 1]]),
            om(&[&[1, -1]]),
            om(&[&[1, 0], &[0, 1]]),
            om(&[&[0, 0]]),
        ];
        for m in &hosts {
            let all = (0..m.n_elements())
                .all(|e| in_directed_circuit(m, e).unwrap());
            assert_eq!(is_totally_cyclic(m).unwrap(), all);
        }
    }

    #[test]
    fn empty_matroid_is_totally_cyclic() {
        let m = OrientedMatroid::from_rep(TUMatrix::zeros(1, 0)).unwrap();
        assert!(is_totally_cyclic(&m).unwrap());
    }

    #[test]
    fn greedy_circuit_is_deterministic_and_minimal() {
        // Two directed triangles sharing no elements: the circuit through
        // element 0 must be the first triangle only.
        let m = om(&[
            &[-1, 0, 1, 0, 0, 0],
            &[1, -1, 0, 0, 0, 0],
            &[0, 1, -1, 0, 0, 0],
            &[0, 0, 0, -1, 0, 1],
            &[0, 0, 0, 1, -1, 0],
            &[0, 0, 0, 0, 1, -1],
        ]);
        let c = directed_circuit_through(&m, 0).unwrap();
        assert_eq!(c, ElemSet::full(3));
        assert_eq!(directed_circuit_through(&m, 0).unwrap(), c);
        let c2 = directed_circuit_through(&m, 4).unwrap();
        assert_eq!(c2, ElemSet::from_iter(3..6));
    }

    #[test]
    fn out_of_range_elements_are_rejected() {
        let m = om(&[&[1]]);
        assert!(in_directed_circuit(&m, 1).is_err());
        assert!(farkas_dichotomy(&m, 7).is_err());
    }
}

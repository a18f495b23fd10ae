//! Graph–matroid correspondences and digraph minor closure, checked
//! exhaustively on seeded random digraphs: edge deletion and contraction
//! in a digraph must match element deletion and contraction in its
//! graphic matroid, with the two operations swapping under duality, and
//! odd-dijoin existence must survive every cut-minor step.

mod common;

use common::{delete_edge, random_digraph, seeded_rng};
use regmat::digraph::{
    apply_cut_minor, bond_matroid, graphic_matroid, is_minimal_obstruction, odd_dijoin,
    one_step_cut_minors, CutMinorStep, Digraph,
};
use regmat::digraph::family::{build_d, build_one_direction};
use regmat::ElemSet;

fn contract_edge(d: &Digraph, e: usize) -> Digraph {
    apply_cut_minor(d, &[CutMinorStep::ContractEdges(ElemSet::singleton(e))])
        .unwrap()
        .digraph
}

#[test]
fn graphic_and_bond_matroids_track_digraph_minors() {
    let mut rng = seeded_rng(100);
    for _ in 0..150 {
        let edges = rand::Rng::gen_range(&mut rng, 1..=8);
        let d = random_digraph(&mut rng, 5, edges, true);
        let graphic = graphic_matroid(&d).unwrap();
        let dual = bond_matroid(&d).unwrap();
        for e in 0..d.n_edges() {
            let one = ElemSet::singleton(e);
            let without = delete_edge(&d, e);
            let merged = contract_edge(&d, e);

            assert_eq!(
                graphic.delete(one).unwrap().0.circuits().unwrap(),
                graphic_matroid(&without).unwrap().circuits().unwrap(),
                "deleting edge {e} must commute with the graphic matroid"
            );
            assert_eq!(
                graphic.contract(one).unwrap().0.circuits().unwrap(),
                graphic_matroid(&merged).unwrap().circuits().unwrap(),
                "contracting edge {e} must commute with the graphic matroid"
            );
            assert_eq!(
                dual.delete(one).unwrap().0.circuits().unwrap(),
                bond_matroid(&merged).unwrap().circuits().unwrap(),
                "bond-matroid deletion must match digraph contraction at edge {e}"
            );
            assert_eq!(
                dual.contract(one).unwrap().0.circuits().unwrap(),
                bond_matroid(&without).unwrap().circuits().unwrap(),
                "bond-matroid contraction must match digraph deletion at edge {e}"
            );
        }
    }
}

/// Odd-dijoin existence is closed under cut minors: walk two levels of
/// one-step minors from every host that has a join.
#[test]
fn odd_dijoins_survive_cut_minors() {
    let mut rng = seeded_rng(101);
    let mut hosts_with_join = 0usize;
    for _ in 0..80 {
        let edges = rand::Rng::gen_range(&mut rng, 0..=6);
        let d = random_digraph(&mut rng, 5, edges, true);
        if odd_dijoin(&d).unwrap().is_none() {
            continue;
        }
        hosts_with_join += 1;
        for (_, first) in one_step_cut_minors(&d).unwrap() {
            assert!(
                odd_dijoin(&first).unwrap().is_some(),
                "one-step minor lost the odd dijoin"
            );
            for (_, second) in one_step_cut_minors(&first).unwrap() {
                assert!(
                    odd_dijoin(&second).unwrap().is_some(),
                    "two-step minor lost the odd dijoin"
                );
            }
        }
    }
    assert!(hosts_with_join >= 40, "the sample must mostly carry joins");
}

#[test]
fn known_minimal_obstructions_are_recognised() {
    assert!(is_minimal_obstruction(&build_d(1, 2, 2)).unwrap());
    assert!(is_minimal_obstruction(&build_one_direction(2, 3)).unwrap());
    assert!(is_minimal_obstruction(&build_one_direction(2, 5)).unwrap());
    assert!(!is_minimal_obstruction(&build_one_direction(2, 2)).unwrap());
    assert!(!is_minimal_obstruction(&build_d(1, 2, 1)).unwrap());
}

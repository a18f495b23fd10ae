//! Shared generators and brute-force oracles for the integration suites.
//!
//! Everything random is seeded, so failures reproduce exactly; every
//! oracle here recomputes its answer from first principles (full circuit
//! enumeration) rather than reusing the code paths under test.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use regmat::digraph::family::{build_bicycle, build_d, build_one_direction};
use regmat::digraph::{bond_matroid, graphic_matroid, Digraph};
use regmat::linalg::{check_tu, TuVerdict};
use regmat::{ElemSet, OrientedMatroid, Result, TUMatrix};

/// Deterministic RNG; vary `salt` per suite so they draw distinct cases.
pub fn seeded_rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + salt)
}

/// A random digraph with up to `max_vertices` vertices and exactly
/// `n_edges` edges; parallel and anti-parallel edges always allowed,
/// loops only when `loops` is set.
pub fn random_digraph(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    n_edges: usize,
    loops: bool,
) -> Digraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut d = Digraph::new();
    for v in 0..n {
        d.add_vertex(format!("v{v}"));
    }
    for _ in 0..n_edges {
        let tail = rng.gen_range(0..n);
        let head = loop {
            let h = rng.gen_range(0..n);
            if loops || h != tail || n == 1 {
                break h;
            }
        };
        d.add_edge_auto(tail, head);
    }
    d
}

/// Rejection-sample a totally unimodular `{-1,0,1}` matrix, verified by
/// exhaustive minor check. Falls back to a digraph incidence matrix
/// (always TU) if sampling keeps missing.
pub fn random_tu_matrix(rng: &mut ChaCha8Rng, max_rows: usize, max_cols: usize) -> TUMatrix {
    for _ in 0..200 {
        let rows = rng.gen_range(1..=max_rows);
        let cols = rng.gen_range(1..=max_cols);
        let entries: Vec<i64> = (0..rows * cols)
            .map(|_| match rng.gen_range(0..4) {
                0 => -1,
                1 => 1,
                _ => 0,
            })
            .collect();
        if check_tu(rows, cols, &entries, rows.min(cols)) == TuVerdict::Verified {
            let as_i8: Vec<i8> = entries.iter().map(|&v| v as i8).collect();
            return TUMatrix::new(rows, cols, as_i8).unwrap();
        }
    }
    let d = random_digraph(rng, max_rows + 1, max_cols, false);
    let m = graphic_matroid(&d).unwrap();
    m.rep().clone()
}

/// A random oriented regular matroid with at most `max_elements`
/// elements: graphic, cographic or plain TU-sampled, in rotation.
pub fn random_host(rng: &mut ChaCha8Rng, max_elements: usize) -> OrientedMatroid {
    loop {
        let host = match rng.gen_range(0..4) {
            0 => {
                let edges = rng.gen_range(0..=max_elements);
                graphic_matroid(&random_digraph(rng, 5, edges, true)).unwrap()
            }
            1 => {
                let edges = rng.gen_range(0..=max_elements);
                bond_matroid(&random_digraph(rng, 5, edges, true)).unwrap()
            }
            _ => {
                let rep = random_tu_matrix(rng, 4, max_elements);
                OrientedMatroid::from_rep(rep).unwrap()
            }
        };
        if host.n_elements() <= max_elements {
            return host;
        }
    }
}

/// Remove one edge, keeping vertex set and the order of the other edges.
pub fn delete_edge(d: &Digraph, e: usize) -> Digraph {
    let mut out = Digraph::new();
    for name in d.vertex_names() {
        out.add_vertex(name.clone());
    }
    for (i, edge) in d.edges().iter().enumerate() {
        if i != e {
            out.add_edge(edge.tail, edge.head, edge.id.clone());
        }
    }
    out
}

/// A fixed roster of small named hosts, each at most 12 elements, mixing
/// graphic, cographic and hand-written representations.
pub fn named_hosts() -> Vec<(&'static str, OrientedMatroid)> {
    let from_rows = |rows: &[Vec<i8>]| {
        OrientedMatroid::from_rep(TUMatrix::from_rows(rows).unwrap()).unwrap()
    };
    let directed_cycle = |k: usize| {
        let mut d = Digraph::new();
        for v in 0..k {
            d.add_vertex(format!("v{v}"));
        }
        for v in 0..k {
            d.add_edge_auto(v, (v + 1) % k);
        }
        d
    };
    let mut hosts: Vec<(&'static str, OrientedMatroid)> = vec![
        ("single loop", from_rows(&[vec![0]])),
        ("coloop", from_rows(&[vec![1]])),
        (
            "directed triangle",
            graphic_matroid(&directed_cycle(3)).unwrap(),
        ),
        (
            "directed 4-cycle",
            graphic_matroid(&directed_cycle(4)).unwrap(),
        ),
        (
            "directed 5-cycle",
            graphic_matroid(&directed_cycle(5)).unwrap(),
        ),
        (
            "triangle with pendant",
            from_rows(&[
                vec![1, 0, -1, 1],
                vec![-1, 1, 0, 0],
                vec![0, -1, 1, 0],
            ]),
        ),
        (
            "directed path",
            from_rows(&[vec![1, 0], vec![-1, 1], vec![0, -1]]),
        ),
        (
            "disjoint 3- and 4-cycles",
            from_rows(&[
                vec![1, 0, -1, 0, 0, 0, 0],
                vec![-1, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0, -1],
                vec![0, 0, 0, -1, 1, 0, 0],
                vec![0, 0, 0, 0, -1, 1, 0],
            ]),
        ),
    ];
    for k in [3usize, 4, 5, 6] {
        let name: &'static str = match k {
            3 => "bicycle of length 3",
            4 => "bicycle of length 4",
            5 => "bicycle of length 5",
            _ => "bicycle of length 6",
        };
        hosts.push((name, graphic_matroid(&build_bicycle(k)).unwrap()));
    }
    hosts.push((
        "bond matroid of K(2,3) one-direction",
        bond_matroid(&build_one_direction(2, 3)).unwrap(),
    ));
    hosts.push((
        "bond matroid of K(3,4) one-direction",
        bond_matroid(&build_one_direction(3, 4)).unwrap(),
    ));
    hosts.push((
        "graphic matroid of D(1,2,2)",
        graphic_matroid(&build_d(1, 2, 2)).unwrap(),
    ));
    hosts.push((
        "bond matroid of D(1,2,2)",
        bond_matroid(&build_d(1, 2, 2)).unwrap(),
    ));
    hosts.push(("ten-element reference", regmat::r10::r10_reference()));
    hosts
}

/// Supports of every directed circuit, straight from full enumeration.
pub fn directed_circuit_supports(m: &OrientedMatroid) -> Result<Vec<ElemSet>> {
    Ok(m.circuits()?
        .iter()
        .filter(|c| c.is_directed())
        .map(|c| c.support())
        .collect())
}

/// Does some directed circuit have even support size?
pub fn has_even_directed_circuit(m: &OrientedMatroid) -> Result<bool> {
    Ok(directed_circuit_supports(m)?
        .iter()
        .any(|c| c.len() % 2 == 0))
}

/// Does some directed circuit have odd support size?
pub fn has_odd_directed_circuit(m: &OrientedMatroid) -> Result<bool> {
    Ok(directed_circuit_supports(m)?
        .iter()
        .any(|c| c.len() % 2 == 1))
}

/// All simple digraphs (no loops, no repeated ordered pair) on at most
/// `max_n` vertices, one representative per isomorphism class.
pub fn all_simple_digraphs_up_to_iso(max_n: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let index_of = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
        let perms = permutations(n);
        'mask: for mask in 0u64..(1u64 << pairs.len()) {
            for perm in &perms {
                let mut remapped = 0u64;
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        remapped |= 1 << index_of(perm[i], perm[j]);
                    }
                }
                if remapped < mask {
                    continue 'mask;
                }
            }
            let mut d = Digraph::new();
            for v in 0..n {
                d.add_vertex(format!("v{v}"));
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    d.add_edge_auto(i, j);
                }
            }
            out.push(d);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for shorter in permutations(n - 1) {
        for slot in 0..n {
            let mut perm = shorter.clone();
            perm.insert(slot, n - 1);
            out.push(perm);
        }
    }
    out
}

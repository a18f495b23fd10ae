//! Labelled multidigraphs and their cut structure: oriented graphic and
//! bond matroids, bonds and directed bonds, odd dijoins, T-joins of the
//! underlying multigraph, and cut minors (edge-set contraction, deletion
//! of deletable edges, removal of isolated vertices).
//!
//! A digraph may have loops and multiple parallel or anti-parallel edges.
//! Vertices and edges are addressed by index; both carry stable string
//! names that survive the text format. An *odd dijoin* is an edge set
//! meeting every directed bond an odd number of times — it exists exactly
//! when the bond matroid is non-even.

pub mod family;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::{gf2_solve, GF2Matrix, GF2Vector, TUMatrix};
use crate::matroid::{ElemSet, OrientedMatroid};

/// Default refusal threshold for bond enumeration (vertex count).
pub const DEFAULT_VERTEX_BOUND: usize = 14;

/// Ceiling for is_minimal_obstruction's exhaustive minor sweep.
pub const OBSTRUCTION_EDGE_BOUND: usize = 12;

/// One directed edge; loops (`tail == head`) are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    /// Unique id, kept verbatim through the text format.
    pub id: String,
}

/// A labelled multidigraph.
#[derive(Clone, Debug)]
pub struct Digraph {
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    vertex_bound: usize,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_names == other.vertex_names && self.edges == other.edges
    }
}

impl Eq for Digraph {}

impl Default for Digraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Digraph {
    /// An empty digraph.
    pub fn new() -> Self {
        Digraph {
            vertex_names: Vec::new(),
            edges: Vec::new(),
            vertex_bound: DEFAULT_VERTEX_BOUND,
        }
    }

    /// Replace the bond-enumeration refusal bound (default
    /// [`DEFAULT_VERTEX_BOUND`]).
    pub fn with_vertex_bound(mut self, bound: usize) -> Self {
        self.vertex_bound = bound;
        self
    }

    pub fn vertex_bound(&self) -> usize {
        self.vertex_bound
    }

    /// Add a vertex with a fresh name. Names must be unique, non-empty
    /// and whitespace-free (the text format is token-based).
    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        assert!(
            !name.is_empty() && !name.contains(char::is_whitespace),
            "vertex names must be non-empty and whitespace-free"
        );
        assert!(
            self.vertex_index(&name).is_none(),
            "duplicate vertex name `{name}`"
        );
        self.vertex_names.push(name);
        self.vertex_names.len() - 1
    }

    /// Index of an existing vertex, or a freshly added one.
    pub fn ensure_vertex(&mut self, name: &str) -> usize {
        self.vertex_index(name)
            .unwrap_or_else(|| self.add_vertex(name))
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    /// Add an edge with an explicit unique id.
    pub fn add_edge(&mut self, tail: usize, head: usize, id: impl Into<String>) -> usize {
        let id = id.into();
        assert!(
            tail < self.n_vertices() && head < self.n_vertices(),
            "edge endpoints must be existing vertices"
        );
        assert!(
            !id.is_empty() && !id.contains(char::is_whitespace),
            "edge ids must be non-empty and whitespace-free"
        );
        assert!(
            self.edges.iter().all(|e| e.id != id),
            "duplicate edge id `{id}`"
        );
        self.edges.push(Edge { tail, head, id });
        self.edges.len() - 1
    }

    /// Add an edge with the generated id `e<index>`.
    pub fn add_edge_auto(&mut self, tail: usize, head: usize) -> usize {
        let id = format!("e{}", self.edges.len());
        self.add_edge(tail, head, id)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_loop_edge(&self, i: usize) -> bool {
        self.edges[i].tail == self.edges[i].head
    }

    /// Vertices with no incident edge (loops count as incident).
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n_vertices())
            .filter(|&v| self.edges.iter().all(|e| e.tail != v && e.head != v))
            .collect()
    }

    /// Parse the plain-text digraph format: a `digraph` header line, one
    /// line per edge (`tail head` or `tail head id`), and optional
    /// `vertex name` lines for isolated vertices. `#` starts a comment,
    /// blank lines are skipped, vertices register on first appearance.
    pub fn from_text(text: &str) -> Result<Digraph> {
        let mut d = Digraph::new();
        let mut saw_header = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let data = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = data.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if !saw_header {
                if tokens != ["digraph"] {
                    return Err(Error::parse(line, "expected `digraph` header"));
                }
                saw_header = true;
                continue;
            }
            match tokens.as_slice() {
                ["vertex", name] => {
                    d.ensure_vertex(name);
                }
                ["vertex", ..] => {
                    return Err(Error::parse(line, "expected `vertex name`"));
                }
                [tail, head] => {
                    let (t, h) = (d.ensure_vertex(tail), d.ensure_vertex(head));
                    d.add_edge_auto(t, h);
                }
                [tail, head, id] => {
                    if d.edges.iter().any(|e| e.id == *id) {
                        return Err(Error::parse(line, format!("duplicate edge id `{id}`")));
                    }
                    let (t, h) = (d.ensure_vertex(tail), d.ensure_vertex(head));
                    d.add_edge(t, h, *id);
                }
                _ => {
                    return Err(Error::parse(
                        line,
                        "expected `tail head [id]` or `vertex name`",
                    ));
                }
            }
        }
        if !saw_header {
            return Err(Error::parse(1, "empty input: expected `digraph` header"));
        }
        Ok(d)
    }

    /// Render in the same plain-text format accepted by [`from_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::from("digraph\n");
        for e in &self.edges {
            out.push_str(&format!(
                "{} {} {}\n",
                self.vertex_names[e.tail], self.vertex_names[e.head], e.id
            ));
        }
        for v in self.isolated_vertices() {
            out.push_str(&format!("vertex {}\n", self.vertex_names[v]));
        }
        out
    }

    /// Undirected adjacency lists in edge-index order: `adj[v]` holds
    /// `(other endpoint, edge index)` pairs, loops excluded.
    fn underlying_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n_vertices()];
        for (i, e) in self.edges.iter().enumerate() {
            if e.tail != e.head {
                adj[e.tail].push((e.head, i));
                adj[e.head].push((e.tail, i));
            }
        }
        adj
    }

    /// Weakly connected components as sorted vertex lists, ordered by
    /// least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.underlying_adjacency();
        let mut seen = vec![false; self.n_vertices()];
        let mut comps = Vec::new();
        for start in 0..self.n_vertices() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Oriented graphic matroid: the vertex–edge incidence matrix with `+1`
/// at the head, `-1` at the tail, and zero columns for loops. Signed
/// circuits are the oriented cycles of the digraph.
pub fn graphic_matroid(d: &Digraph) -> Result<OrientedMatroid> {
    let mut rows = vec![vec![0i8; d.n_edges()]; d.n_vertices()];
    for (j, e) in d.edges.iter().enumerate() {
        if e.tail != e.head {
            rows[e.head][j] = 1;
            rows[e.tail][j] = -1;
        }
    }
    let rep = if rows.is_empty() {
        TUMatrix::zeros(0, d.n_edges())
    } else {
        TUMatrix::from_rows(&rows)?
    };
    OrientedMatroid::from_rep(rep)
}

/// Oriented bond matroid: the dual of the graphic matroid. Signed
/// circuits are the oriented bonds of the digraph.
pub fn bond_matroid(d: &Digraph) -> Result<OrientedMatroid> {
    graphic_matroid(d)?.dual()
}

/// A minimal non-empty cut, stored with its defining vertex side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bond {
    /// The side containing the least vertex of its component.
    pub side: ElemSet,
    /// The cut edges, as edge-index positions.
    pub edges: ElemSet,
}

impl Bond {
    /// A bond is directed when all of its edges cross the same way: no
    /// edge enters the side, or no edge leaves it.
    pub fn is_directed(&self, d: &Digraph) -> bool {
        let entering = self
            .edges
            .iter()
            .filter(|&i| self.side.contains(d.edges[i].head))
            .count();
        entering == 0 || entering == self.edges.len()
    }
}

fn check_bond_scale(d: &Digraph) -> Result<()> {
    if d.n_vertices() > d.vertex_bound {
        return Err(Error::VertexBoundExceeded {
            vertices: d.n_vertices(),
            bound: d.vertex_bound,
        });
    }
    if d.n_edges() > crate::matroid::MAX_ELEMENTS || d.n_vertices() > crate::matroid::MAX_ELEMENTS
    {
        return Err(Error::RepresentationTooLarge {
            rows: d.n_vertices(),
            cols: d.n_edges(),
            max: crate::matroid::MAX_ELEMENTS,
        });
    }
    Ok(())
}

/// Is the vertex set connected in the underlying multigraph induced on it?
fn induced_connected(adj: &[Vec<(usize, usize)>], verts: ElemSet) -> bool {
    let Some(start) = verts.min_element() else {
        return false;
    };
    let mut seen = ElemSet::singleton(start);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in &adj[v] {
            if verts.contains(w) && !seen.contains(w) {
                seen = seen.with(w);
                queue.push_back(w);
            }
        }
    }
    seen == verts
}

/// All bonds, by subset enumeration per weak component: a proper
/// non-empty vertex side whose both halves induce connected subgraphs.
/// Deterministic: components by least vertex, sides by ascending mask
/// over the component, the canonical side containing the component's
/// least vertex.
pub fn bonds(d: &Digraph) -> Result<Vec<Bond>> {
    check_bond_scale(d)?;
    let adj = d.underlying_adjacency();
    let mut out = Vec::new();
    for comp in d.components() {
        if comp.len() < 2 {
            continue;
        }
        // The least component vertex stays on the canonical side; the
        // remaining vertices range over all subsets.
        let rest = &comp[1..];
        for mask in 0..(1u64 << rest.len()) {
            let mut side = ElemSet::singleton(comp[0]);
            for (bit, &v) in rest.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    side = side.with(v);
                }
            }
            let other: ElemSet = comp.iter().copied().filter(|&v| !side.contains(v)).collect();
            if other.is_empty() {
                continue;
            }
            if !induced_connected(&adj, side) || !induced_connected(&adj, other) {
                continue;
            }
            let edges: ElemSet = d
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| side.contains(e.tail) != side.contains(e.head))
                .map(|(i, _)| i)
                .collect();
            debug_assert!(!edges.is_empty(), "a split of a component cuts something");
            out.push(Bond { side, edges });
        }
    }
    Ok(out)
}

/// Edge sets of the directed bonds, sorted by size then position mask.
pub fn directed_bonds(d: &Digraph) -> Result<Vec<ElemSet>> {
    let mut out: Vec<ElemSet> = bonds(d)?
        .into_iter()
        .filter(|b| b.is_directed(d))
        .map(|b| b.edges)
        .collect();
    out.sort_unstable_by_key(|s| (s.len(), s.bits()));
    out.dedup();
    Ok(out)
}

/// An edge set meeting every directed bond an odd number of times, if
/// one exists: the GF(2) parity system over the directed bonds, solved
/// deterministically and re-verified before returning.
pub fn odd_dijoin(d: &Digraph) -> Result<Option<ElemSet>> {
    let bonds = directed_bonds(d)?;
    let rows: Vec<GF2Vector> = bonds
        .iter()
        .map(|b| GF2Vector::from_indices(d.n_edges(), b.iter()))
        .collect();
    let system = GF2Matrix::from_rows(rows, d.n_edges());
    let rhs = GF2Vector::from_indices(bonds.len(), 0..bonds.len());
    let Some(solution) = gf2_solve(&system, &rhs) else {
        return Ok(None);
    };
    let join: ElemSet = solution.ones().collect();
    for &b in &bonds {
        if !join.odd_overlap(b) {
            return Err(Error::invariant(format!(
                "odd dijoin misses directed bond {:?}",
                b.to_vec()
            )));
        }
    }
    Ok(Some(join))
}

/// T-join of the underlying multigraph: an edge set whose odd-degree
/// vertices are exactly `t`. Exists iff every component contains an even
/// number of `t`-vertices. Deterministic: `t` is paired consecutively in
/// ascending order per component and joined along breadth-first shortest
/// paths with least-index tie-breaking.
pub fn t_join(d: &Digraph, t: ElemSet) -> Option<ElemSet> {
    assert!(
        t.is_subset(ElemSet::full(d.n_vertices().min(crate::matroid::MAX_ELEMENTS))),
        "t-set out of vertex range"
    );
    let adj = d.underlying_adjacency();
    let mut join = ElemSet::EMPTY;
    for comp in d.components() {
        let marked: Vec<usize> = comp.iter().copied().filter(|&v| t.contains(v)).collect();
        if marked.len() % 2 == 1 {
            return None;
        }
        for pair in marked.chunks(2) {
            join = symmetric_difference(join, bfs_path_edges(&adj, pair[0], pair[1]));
        }
    }
    debug_assert!((0..d.n_vertices()).all(|v| {
        let degree = join
            .iter()
            .filter(|&i| {
                let e = &d.edges[i];
                e.tail != e.head && (e.tail == v || e.head == v)
            })
            .count();
        (degree % 2 == 1) == t.contains(v)
    }));
    Some(join)
}

fn symmetric_difference(a: ElemSet, b: ElemSet) -> ElemSet {
    (a - b) | (b - a)
}

/// Edge set of the breadth-first shortest path between two vertices of
/// one component.
fn bfs_path_edges(adj: &[Vec<(usize, usize)>], from: usize, to: usize) -> ElemSet {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, i) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((v, i));
                queue.push_back(w);
            }
        }
    }
    let mut edges = ElemSet::EMPTY;
    let mut v = to;
    while v != from {
        let (prev, i) = parent[v].expect("endpoints share a component");
        edges = edges.with(i);
        v = prev;
    }
    edges
}

/// Is the edge deletable: a loop, or a non-loop with a directed path
/// from its tail to its head that avoids it?
pub fn is_deletable(d: &Digraph, edge: usize) -> Result<bool> {
    if edge >= d.n_edges() {
        return Err(Error::EdgeOutOfRange {
            edge,
            edges: d.n_edges(),
        });
    }
    let e = &d.edges[edge];
    if e.tail == e.head {
        return Ok(true);
    }
    let mut seen = vec![false; d.n_vertices()];
    seen[e.tail] = true;
    let mut queue = VecDeque::from([e.tail]);
    while let Some(v) = queue.pop_front() {
        for (i, f) in d.edges.iter().enumerate() {
            if i != edge && f.tail == v && !seen[f.head] {
                if f.head == e.head {
                    return Ok(true);
                }
                seen[f.head] = true;
                queue.push_back(f.head);
            }
        }
    }
    Ok(false)
}

/// One legal cut-minor operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutMinorStep {
    /// Contract an edge set: each weak component of the selected
    /// subgraph collapses to one vertex; selected edges vanish (loops
    /// among them per the contraction-deletes-loops convention),
    /// unselected edges keep their endpoints' images.
    ContractEdges(ElemSet),
    /// Delete one deletable edge.
    DeleteDeletable(usize),
    /// Remove one isolated vertex.
    DropIsolated(usize),
}

/// A cut minor together with provenance maps back to the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutMinorOutcome {
    pub digraph: Digraph,
    /// Host vertex → its image, `None` when dropped.
    pub vertex_map: Vec<Option<usize>>,
    /// Host edge → its image, `None` when contracted or deleted.
    pub edge_map: Vec<Option<usize>>,
}

/// Apply a sequence of cut-minor steps; each deletion's legality is
/// judged against the digraph it is applied to.
pub fn apply_cut_minor(d: &Digraph, steps: &[CutMinorStep]) -> Result<CutMinorOutcome> {
    let mut current = d.clone();
    let mut vertex_map: Vec<Option<usize>> = (0..d.n_vertices()).map(Some).collect();
    let mut edge_map: Vec<Option<usize>> = (0..d.n_edges()).map(Some).collect();
    for step in steps {
        let (next, vstep, estep) = apply_one_step(&current, step)?;
        for slot in vertex_map.iter_mut() {
            *slot = slot.and_then(|v| vstep[v]);
        }
        for slot in edge_map.iter_mut() {
            *slot = slot.and_then(|e| estep[e]);
        }
        current = next;
    }
    Ok(CutMinorOutcome {
        digraph: current,
        vertex_map,
        edge_map,
    })
}

type StepMaps = (Digraph, Vec<Option<usize>>, Vec<Option<usize>>);

fn apply_one_step(d: &Digraph, step: &CutMinorStep) -> Result<StepMaps> {
    match *step {
        CutMinorStep::ContractEdges(set) => contract_edges(d, set),
        CutMinorStep::DeleteDeletable(edge) => {
            if !is_deletable(d, edge)? {
                return Err(Error::NotDeletable { edge });
            }
            let mut next = d.clone();
            next.edges.remove(edge);
            let emap = (0..d.n_edges())
                .map(|i| match i.cmp(&edge) {
                    std::cmp::Ordering::Less => Some(i),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(i - 1),
                })
                .collect();
            let vmap = (0..d.n_vertices()).map(Some).collect();
            Ok((next, vmap, emap))
        }
        CutMinorStep::DropIsolated(vertex) => {
            assert!(vertex < d.n_vertices(), "vertex index out of range");
            if d.edges.iter().any(|e| e.tail == vertex || e.head == vertex) {
                return Err(Error::NotIsolated { vertex });
            }
            let mut next = d.clone();
            next.vertex_names.remove(vertex);
            let vmap: Vec<Option<usize>> = (0..d.n_vertices())
                .map(|v| match v.cmp(&vertex) {
                    std::cmp::Ordering::Less => Some(v),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(v - 1),
                })
                .collect();
            for e in next.edges.iter_mut() {
                e.tail = vmap[e.tail].expect("no incident edges");
                e.head = vmap[e.head].expect("no incident edges");
            }
            let emap = (0..d.n_edges()).map(Some).collect();
            Ok((next, vmap, emap))
        }
    }
}

fn contract_edges(d: &Digraph, set: ElemSet) -> Result<StepMaps> {
    if let Some(bad) = set.iter().find(|&i| i >= d.n_edges()) {
        return Err(Error::EdgeOutOfRange {
            edge: bad,
            edges: d.n_edges(),
        });
    }
    // Union-find over vertices, merging along each selected edge.
    let mut root: Vec<usize> = (0..d.n_vertices()).collect();
    fn find(root: &mut Vec<usize>, v: usize) -> usize {
        if root[v] != v {
            let r = find(root, root[v]);
            root[v] = r;
        }
        root[v]
    }
    for i in set.iter() {
        let e = &d.edges[i];
        let (a, b) = (find(&mut root, e.tail), find(&mut root, e.head));
        // Merge into the smaller index so class names stay canonical.
        root[a.max(b)] = a.min(b);
    }
    let roots: Vec<usize> = (0..d.n_vertices())
        .map(|v| find(&mut root, v))
        .collect();
    let mut class_order: Vec<usize> = roots.clone();
    class_order.sort_unstable();
    class_order.dedup();
    let vmap: Vec<Option<usize>> = roots
        .iter()
        .map(|r| Some(class_order.binary_search(r).expect("root is listed")))
        .collect();

    let mut next = Digraph::new().with_vertex_bound(d.vertex_bound);
    for &r in &class_order {
        next.add_vertex(d.vertex_names[r].clone());
    }
    let mut emap: Vec<Option<usize>> = vec![None; d.n_edges()];
    for (i, e) in d.edges.iter().enumerate() {
        if set.contains(i) {
            continue;
        }
        let (t, h) = (vmap[e.tail].unwrap(), vmap[e.head].unwrap());
        emap[i] = Some(next.add_edge(t, h, e.id.clone()));
    }
    Ok((next, vmap, emap))
}

/// Every single-step cut minor: each single-edge contraction, each
/// deletable-edge deletion, each isolated-vertex removal.
pub fn one_step_cut_minors(d: &Digraph) -> Result<Vec<(CutMinorStep, Digraph)>> {
    let mut out = Vec::new();
    for e in 0..d.n_edges() {
        let step = CutMinorStep::ContractEdges(ElemSet::singleton(e));
        let (next, _, _) = apply_one_step(d, &step)?;
        out.push((step, next));
    }
    for e in 0..d.n_edges() {
        if is_deletable(d, e)? {
            let step = CutMinorStep::DeleteDeletable(e);
            let (next, _, _) = apply_one_step(d, &step)?;
            out.push((step, next));
        }
    }
    for v in d.isolated_vertices() {
        let step = CutMinorStep::DropIsolated(v);
        let (next, _, _) = apply_one_step(d, &step)?;
        out.push((step, next));
    }
    Ok(out)
}

/// Is the digraph a minimal obstruction: no odd dijoin itself, while
/// every single-step cut minor has one? Single steps suffice because odd
/// dijoins persist under cut minors, so any failure deeper down already
/// shows one step in.
pub fn is_minimal_obstruction(d: &Digraph) -> Result<bool> {
    if d.n_edges() > OBSTRUCTION_EDGE_BOUND {
        return Err(Error::EnumerationBoundExceeded {
            elements: d.n_edges(),
            bound: OBSTRUCTION_EDGE_BOUND,
        });
    }
    if odd_dijoin(d)?.is_some() {
        return Ok(false);
    }
    for (_, minor) in one_step_cut_minors(d)? {
        if odd_dijoin(&minor)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Even-connections with respect to an edge multiset, the colon graph they
//! generate, and the orientation-based partition of a pivot endpoint's
//! neighborhood.
//!
//! A walk p0 p1 ... p_{2k+1} witnesses that p0 and p_{2k+1} are
//! even-connected when every consecutive pair is an edge, the odd-indexed
//! steps p_{2l+1} p_{2l+2} are drawn from the multiset without exceeding any
//! multiplicity, and k >= 0 (k = 0 is an ordinary edge). The colon graph
//! joins all even-connected pairs; a vertex even-connected to itself picks
//! up a pendant shadow vertex, matching what polarization does to squares.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, EdgeMultiset, Graph, MULTISET_GUARD};

/// A certificate walk. `path` has length `2k + 2` as a vertex list;
/// `assignment[l]` is the index into the original multiset used at odd step
/// `l`, each index used at most once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenConnection {
    pub path: Vec<usize>,
    pub assignment: Vec<usize>,
}

impl EvenConnection {
    pub fn k(&self) -> usize {
        self.assignment.len()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.path[0], *self.path.last().unwrap())
    }

    /// Re-checks the four conditions of the definition against `g` and `e`.
    pub fn validate(&self, g: &Graph, e: &EdgeMultiset) -> Result<()> {
        let k = self.k();
        if self.path.len() != 2 * k + 2 {
            return Err(Error::domain("path length must be 2k + 2"));
        }
        for w in self.path.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::domain(format!(
                    "consecutive pair ({}, {}) is not an edge",
                    w[0], w[1]
                )));
            }
        }
        let mut used = vec![false; e.s()];
        for l in 0..k {
            let idx = self.assignment[l];
            if idx >= e.s() || used[idx] {
                return Err(Error::domain("assignment reuses a multiset entry"));
            }
            used[idx] = true;
            let (a, b) = (self.path[2 * l + 1], self.path[2 * l + 2]);
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if e.edges()[idx] != (u, v) {
                return Err(Error::domain(format!(
                    "odd step {l} does not match assigned multiset edge"
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "path": self.path,
            "assignment": self.assignment,
            "k": self.k(),
        })
        .to_string()
    }
}

/// The colon graph G' of a graph and edge multiset, together with the map
/// from G' vertices back to base vertices. `shadow[i]` is true for the
/// pendant copies created by self-even-connections.
#[derive(Clone, Debug)]
pub struct ColonGraph {
    pub graph: Graph,
    pub to_base: Vec<usize>,
    pub shadow: Vec<bool>,
    /// Shortest certificates keyed by base pairs (u <= v) that are
    /// even-connected, including k = 0 entries for plain edges.
    pub certificates: Vec<((usize, usize), EvenConnection)>,
}

impl ColonGraph {
    /// Index of base vertex `v` of G inside G'.
    pub fn vertex_of_base(&self, v: usize) -> usize {
        self.to_base
            .iter()
            .enumerate()
            .find(|&(i, &b)| b == v && !self.shadow[i])
            .map(|(i, _)| i)
            .unwrap()
    }

    pub fn shadow_of_base(&self, v: usize) -> Option<usize> {
        self.to_base
            .iter()
            .enumerate()
            .find(|&(i, &b)| b == v && self.shadow[i])
            .map(|(i, _)| i)
    }

    pub fn certificate_for(&self, u: usize, v: usize) -> Option<&EvenConnection> {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.certificates
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, c)| c)
    }
}

// Search state: current vertex, remaining multiplicities, and whether the
// walk currently sits at an odd position (just finished a plain edge).
type State = (usize, Vec<u8>, bool);

struct Search<'a> {
    g: &'a Graph,
    distinct: Vec<(usize, usize)>,
    mult: Vec<u8>,
    orig: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, e: &EdgeMultiset) -> Result<Self> {
        if e.s() > MULTISET_GUARD {
            return Err(Error::Resource {
                what: "edge multiset size",
                value: e.s(),
                limit: MULTISET_GUARD,
            });
        }
        let mut distinct = Vec::new();
        let mut mult = Vec::new();
        let mut orig: Vec<Vec<usize>> = Vec::new();
        for (i, &edge) in e.edges().iter().enumerate() {
            match distinct.iter().position(|&d| d == edge) {
                Some(j) => {
                    mult[j] += 1;
                    orig[j].push(i);
                }
                None => {
                    distinct.push(edge);
                    mult.push(1);
                    orig.push(vec![i]);
                }
            }
        }
        Ok(Search {
            g,
            distinct,
            mult,
            orig,
        })
    }

    /// Breadth-first search over (vertex, remaining, parity) states from
    /// `u`; returns predecessor links for path reconstruction.
    fn bfs(&self, u: usize) -> HashMap<State, Option<(State, Option<usize>)>> {
        let start: State = (u, self.mult.clone(), false);
        let mut prev: HashMap<State, Option<(State, Option<usize>)>> = HashMap::new();
        prev.insert(start.clone(), None);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        while let Some(state) = queue.pop_front() {
            let (v, rem, at_odd) = state.clone();
            if at_odd {
                // take a multiset edge, in either orientation
                for (j, &(a, b)) in self.distinct.iter().enumerate() {
                    if rem[j] == 0 {
                        continue;
                    }
                    let next_v = if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        continue;
                    };
                    let mut next_rem = rem.clone();
                    next_rem[j] -= 1;
                    let next: State = (next_v, next_rem, false);
                    prev.entry(next.clone()).or_insert_with(|| {
                        queue.push_back(next.clone());
                        Some((state.clone(), Some(j)))
                    });
                }
            } else {
                // take any edge of G
                for w in bits(self.g.neighbors_mask(v)) {
                    let next: State = (w, rem.clone(), true);
                    prev.entry(next.clone()).or_insert_with(|| {
                        queue.push_back(next.clone());
                        Some((state.clone(), None))
                    });
                }
            }
        }
        prev
    }

    fn reconstruct(
        &self,
        prev: &HashMap<State, Option<(State, Option<usize>)>>,
        accept: &State,
    ) -> EvenConnection {
        let mut path = vec![accept.0];
        let mut steps: Vec<Option<usize>> = Vec::new();
        let mut cur = accept.clone();
        while let Some(Some((p, step))) = prev.get(&cur) {
            path.push(p.0);
            steps.push(*step);
            cur = p.clone();
        }
        path.reverse();
        steps.reverse();
        // hand out distinct original indices per odd step
        let mut used_count = vec![0usize; self.distinct.len()];
        let mut assignment = Vec::new();
        for step in steps.into_iter().flatten() {
            assignment.push(self.orig[step][used_count[step]]);
            used_count[step] += 1;
        }
        EvenConnection { path, assignment }
    }

    /// Shortest certificate ending at `v` among reachable odd-position
    /// states, ties broken by path contents for determinism.
    fn best_for_target(
        &self,
        prev: &HashMap<State, Option<(State, Option<usize>)>>,
        v: usize,
    ) -> Option<EvenConnection> {
        let mut best: Option<EvenConnection> = None;
        let mut states: Vec<&State> = prev
            .keys()
            .filter(|(w, _, at_odd)| *w == v && *at_odd)
            .collect();
        states.sort();
        for s in states {
            let cand = self.reconstruct(prev, s);
            match &best {
                Some(b) if (b.path.len(), &b.path) <= (cand.path.len(), &cand.path) => {}
                _ => best = Some(cand),
            }
        }
        best
    }
}

/// Searches for a shortest even-connection certificate between `u` and `v`
/// (which may coincide) with respect to the multiset `e`.
pub fn find_even_connection(
    g: &Graph,
    e: &EdgeMultiset,
    u: usize,
    v: usize,
) -> Result<Option<EvenConnection>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let search = Search::new(g, e)?;
    let prev = search.bfs(u);
    Ok(search.best_for_target(&prev, v))
}

/// Builds the colon graph: the edges of G, one edge per even-connected pair
/// of distinct vertices, and a pendant shadow for every self-even-connected
/// vertex. Vertices are ordered base-major with each shadow directly after
/// its base, matching the polarization ordering.
pub fn colon_graph(g: &Graph, e: &EdgeMultiset) -> Result<ColonGraph> {
    if e.is_empty() {
        return Err(Error::domain("edge multiset must be non-empty"));
    }
    colon_graph_allow_empty(g, e)
}

/// Same as `colon_graph` but treats an empty multiset as the trivial colon,
/// returning G itself. The structural lemma checks need this because the
/// surviving multiset of an induced subgraph can vanish.
pub fn colon_graph_allow_empty(g: &Graph, e: &EdgeMultiset) -> Result<ColonGraph> {
    let n = g.n();
    let search = Search::new(g, e)?;
    let mut new_pairs: Vec<(usize, usize)> = Vec::new();
    let mut self_connected = vec![false; n];
    let mut certificates = Vec::new();
    for u in 0..n {
        let prev = search.bfs(u);
        for v in u..n {
            if let Some(cert) = search.best_for_target(&prev, v) {
                if u == v {
                    self_connected[u] = true;
                } else if !g.has_edge(u, v) {
                    new_pairs.push((u, v));
                }
                certificates.push(((u, v), cert));
            }
        }
    }

    let mut to_base = Vec::new();
    let mut shadow = Vec::new();
    let mut names = Vec::new();
    let mut base_pos = vec![0usize; n];
    for v in 0..n {
        base_pos[v] = to_base.len();
        to_base.push(v);
        shadow.push(false);
        names.push(g.name(v));
        if self_connected[v] {
            to_base.push(v);
            shadow.push(true);
            names.push(format!("{}^(2)", g.name(v)));
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (base_pos[u], base_pos[v]))
        .collect();
    for (u, v) in new_pairs {
        edges.push((base_pos[u], base_pos[v]));
    }
    for v in 0..n {
        if self_connected[v] {
            edges.push((base_pos[v], base_pos[v] + 1));
        }
    }
    let graph = Graph::from_edges(to_base.len(), &edges)?.with_names(names)?;
    Ok(ColonGraph {
        graph,
        to_base,
        shadow,
        certificates,
    })
}

/// Which clause of the even-connection trichotomy a witness satisfies with
/// respect to an oriented pivot edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// pivot never used as an odd step
    PivotUnused,
    /// pivot used oriented y -> x at some odd step
    PivotUsedTowardX,
    /// every odd-step use of the pivot is oriented x -> y
    PivotUsedTowardYOnly,
}

#[derive(Clone, Debug)]
pub struct ClassifiedNeighbor {
    /// Vertex index in the colon graph.
    pub vertex: usize,
    pub name: String,
    pub clause: Clause,
    pub witness: EvenConnection,
}

/// The partition of N_{G'}[y] induced by how certificates to `y` use the
/// pivot edge {x, y}: X1 collects vertices with a witness avoiding the pivot
/// or crossing it toward x, X2 the rest. The endpoint y itself (and its
/// shadow) appears only when y is self-even-connected.
#[derive(Clone, Debug)]
pub struct NeighborClassification {
    pub pivot_index: usize,
    pub x: usize,
    pub y: usize,
    pub colon: ColonGraph,
    pub x1: Vec<ClassifiedNeighbor>,
    pub x2: Vec<ClassifiedNeighbor>,
}

// Flagged state for the classification search: tracks whether the pivot
// value has been crossed y->x and/or x->y anywhere along the walk.
type FlagState = (usize, Vec<u8>, bool, bool, bool);

fn classify_bfs(
    search: &Search,
    u: usize,
    pivot_edge: (usize, usize),
    x: usize,
    y: usize,
) -> HashMap<FlagState, Option<(FlagState, Option<usize>)>> {
    let start: FlagState = (u, search.mult.clone(), false, false, false);
    let mut prev: HashMap<FlagState, Option<(FlagState, Option<usize>)>> = HashMap::new();
    prev.insert(start.clone(), None);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        let (v, rem, at_odd, used_yx, used_xy) = state.clone();
        if at_odd {
            for (j, &(a, b)) in search.distinct.iter().enumerate() {
                if rem[j] == 0 {
                    continue;
                }
                let next_v = if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    continue;
                };
                let mut next_rem = rem.clone();
                next_rem[j] -= 1;
                let is_pivot = search.distinct[j] == pivot_edge;
                let yx = used_yx || (is_pivot && v == y && next_v == x);
                let xy = used_xy || (is_pivot && v == x && next_v == y);
                let next: FlagState = (next_v, next_rem, false, yx, xy);
                prev.entry(next.clone()).or_insert_with(|| {
                    queue.push_back(next.clone());
                    Some((state.clone(), Some(j)))
                });
            }
        } else {
            for w in bits(search.g.neighbors_mask(v)) {
                let next: FlagState = (w, rem.clone(), true, used_yx, used_xy);
                prev.entry(next.clone()).or_insert_with(|| {
                    queue.push_back(next.clone());
                    Some((state.clone(), None))
                });
            }
        }
    }
    prev
}

fn reconstruct_flagged(
    search: &Search,
    prev: &HashMap<FlagState, Option<(FlagState, Option<usize>)>>,
    accept: &FlagState,
) -> EvenConnection {
    let mut path = vec![accept.0];
    let mut steps: Vec<Option<usize>> = Vec::new();
    let mut cur = accept.clone();
    while let Some(Some((p, step))) = prev.get(&cur) {
        path.push(p.0);
        steps.push(*step);
        cur = p.clone();
    }
    path.reverse();
    steps.reverse();
    let mut used_count = vec![0usize; search.distinct.len()];
    let mut assignment = Vec::new();
    for step in steps.into_iter().flatten() {
        assignment.push(search.orig[step][used_count[step]]);
        used_count[step] += 1;
    }
    EvenConnection { path, assignment }
}

/// Classifies every member of N_{G'}[y] by the clause its certificates to y
/// can satisfy, where the pivot is multiset entry `pivot_index` = {x, y}.
pub fn classify_neighbors(
    g: &Graph,
    e: &EdgeMultiset,
    pivot_index: usize,
    y: usize,
) -> Result<NeighborClassification> {
    if pivot_index >= e.s() {
        return Err(Error::domain(format!(
            "pivot index {pivot_index} out of range for multiset of size {}",
            e.s()
        )));
    }
    let (a, b) = e.edges()[pivot_index];
    let x = if y == a {
        b
    } else if y == b {
        a
    } else {
        return Err(Error::domain(format!(
            "vertex {y} is not an endpoint of multiset entry {pivot_index}"
        )));
    };
    let colon = colon_graph(g, e)?;
    let gp = colon.graph.clone();
    let y_in_gp = colon.vertex_of_base(y);
    let mut members: Vec<usize> = bits(gp.neighbors_mask(y_in_gp));
    members.push(y_in_gp);
    members.sort_unstable();

    let search = Search::new(g, e)?;
    let pivot_edge = e.edges()[pivot_index];
    let mut bfs_cache: HashMap<usize, HashMap<FlagState, Option<(FlagState, Option<usize>)>>> =
        HashMap::new();

    let mut x1 = Vec::new();
    let mut x2 = Vec::new();
    for m in members {
        // A shadow adjacent to y can only be y's own copy; classify it by
        // the self-connections of y, like y itself.
        let source = colon.to_base[m];
        let prev = bfs_cache
            .entry(source)
            .or_insert_with(|| classify_bfs(&search, source, pivot_edge, x, y));
        let mut accepting: Vec<FlagState> = prev
            .keys()
            .filter(|(v, _, at_odd, _, _)| *v == y && *at_odd)
            .cloned()
            .collect();
        accepting.sort();
        if accepting.is_empty() {
            continue; // y itself with no self-connection: outside the partition
        }
        let favourable: Vec<FlagState> = accepting
            .iter()
            .filter(|(_, _, _, used_yx, used_xy)| !*used_xy || *used_yx)
            .cloned()
            .collect();
        let pick_shortest = |cands: &[FlagState]| -> (EvenConnection, Clause) {
            let mut best: Option<(EvenConnection, Clause)> = None;
            for s in cands {
                let cert = reconstruct_flagged(&search, prev, s);
                let clause = if !s.3 && !s.4 {
                    Clause::PivotUnused
                } else if s.3 {
                    Clause::PivotUsedTowardX
                } else {
                    Clause::PivotUsedTowardYOnly
                };
                match &best {
                    Some((b, _)) if (b.path.len(), &b.path) <= (cert.path.len(), &cert.path) => {}
                    _ => best = Some((cert, clause)),
                }
            }
            best.unwrap()
        };
        if !favourable.is_empty() {
            let (witness, clause) = pick_shortest(&favourable);
            x1.push(ClassifiedNeighbor {
                vertex: m,
                name: gp.name(m),
                clause,
                witness,
            });
        } else {
            let (witness, clause) = pick_shortest(&accepting);
            x2.push(ClassifiedNeighbor {
                vertex: m,
                name: gp.name(m),
                clause,
                witness,
            });
        }
    }
    Ok(NeighborClassification {
        pivot_index,
        x,
        y,
        colon,
        x1,
        x2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_multisets, enumerate_graphs};
    use crate::monomial::{Monomial, MonomialIdeal};

    #[test]
    fn c5_chord_certificate() {
        // C5 on x0..x4, multiset {x1x2}: x0 and x3 become even-connected
        // through the path x0 x1 x2 x3.
        let c5 = Graph::cycle(5).unwrap();
        let e = EdgeMultiset::new(&c5, &[(1, 2)]).unwrap();
        let cert = find_even_connection(&c5, &e, 0, 3).unwrap().unwrap();
        assert_eq!(cert.path, vec![0, 1, 2, 3]);
        assert_eq!(cert.k(), 1);
        cert.validate(&c5, &e).unwrap();
    }

    #[test]
    fn trivial_certificate_for_edges() {
        let c5 = Graph::cycle(5).unwrap();
        let e = EdgeMultiset::new(&c5, &[(2, 3)]).unwrap();
        let cert = find_even_connection(&c5, &e, 0, 1).unwrap().unwrap();
        assert_eq!(cert.k(), 0);
        assert_eq!(cert.path, vec![0, 1]);
    }

    #[test]
    fn different_components_not_connected() {
        let g = Graph::cycle(3)
            .unwrap()
            .disjoint_union(&Graph::cycle(3).unwrap())
            .unwrap();
        let e = EdgeMultiset::new(&g, &[(0, 1)]).unwrap();
        assert!(find_even_connection(&g, &e, 0, 4).unwrap().is_none());
        assert!(find_even_connection(&g, &e, 0, 9).is_err());
    }

    #[test]
    fn k3_self_connection() {
        // K3 on x0, x1, x2 with multiset {x0x1}: x2 walks x2-x0-x1-x2, so
        // x2^2 lands in the colon ideal.
        let k3 = Graph::complete(3).unwrap();
        let e = EdgeMultiset::new(&k3, &[(0, 1)]).unwrap();
        let cert = find_even_connection(&k3, &e, 2, 2).unwrap().unwrap();
        assert_eq!(cert.k(), 1);
        assert_eq!(cert.path.len(), 4);
        assert_eq!(cert.path[0], 2);
        assert_eq!(cert.path[3], 2);
        cert.validate(&k3, &e).unwrap();
        // x0 and x1 are not self-connected with respect to {x0x1}
        assert!(find_even_connection(&k3, &e, 0, 0).unwrap().is_none());
        assert!(find_even_connection(&k3, &e, 1, 1).unwrap().is_none());
    }

    #[test]
    fn colon_graph_c5_gains_one_chord() {
        let c5 = Graph::cycle(5).unwrap();
        let e = EdgeMultiset::new(&c5, &[(1, 2)]).unwrap();
        let cg = colon_graph(&c5, &e).unwrap();
        assert_eq!(cg.graph.n(), 5);
        assert_eq!(cg.graph.edge_count(), 6);
        assert!(cg.graph.has_edge(0, 3));
    }

    #[test]
    fn colon_graph_k3_shadow_at_third_vertex_only() {
        let k3 = Graph::complete(3).unwrap();
        let e = EdgeMultiset::new(&k3, &[(0, 1)]).unwrap();
        let cg = colon_graph(&k3, &e).unwrap();
        assert_eq!(cg.graph.n(), 4);
        assert_eq!(cg.shadow.iter().filter(|&&s| s).count(), 1);
        let sh = cg.shadow_of_base(2).unwrap();
        assert_eq!(cg.graph.name(sh), "x2^(2)");
        assert_eq!(cg.graph.degree(sh), 1);
        assert!(cg.shadow_of_base(0).is_none());
        assert!(cg.shadow_of_base(1).is_none());
    }

    #[test]
    fn whisker_edge_leaves_ideal_unchanged() {
        // pendant edge {0, 3} on a triangle; the colon graph is G itself
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let e = EdgeMultiset::new(&g, &[(0, 3)]).unwrap();
        let cg = colon_graph(&g, &e).unwrap();
        assert_eq!(cg.graph.n(), 4);
        assert_eq!(cg.graph.edges(), g.edges());
    }

    fn oracle_colon(g: &Graph, e: &EdgeMultiset) -> MonomialIdeal {
        let i = MonomialIdeal::edge_ideal(g);
        let mut m = Monomial::one(g.n());
        for &(u, v) in e.edges() {
            m = m
                .mul(&Monomial::variable(g.n(), u))
                .mul(&Monomial::variable(g.n(), v));
        }
        let (pol, _) = i.power(e.s() + 1).colon(&m).polarize();
        pol
    }

    #[test]
    fn oracle_equivalence_small() {
        // all graphs on <= 4 vertices without isolated vertices, s <= 2
        for n in 2..=4 {
            for g in enumerate_graphs(n, true).unwrap() {
                for s in 1..=2 {
                    for e in edge_multisets(&g, s) {
                        let cg = colon_graph(&g, &e).unwrap();
                        let lhs = MonomialIdeal::edge_ideal(&cg.graph);
                        let rhs = oracle_colon(&g, &e);
                        assert!(
                            lhs.eq_by_names(&rhs),
                            "mismatch for {} with {:?}: {} vs {}",
                            g.to_graph6(),
                            e.edges(),
                            lhs,
                            rhs
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classification_on_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let e = EdgeMultiset::new(&c5, &[(1, 2)]).unwrap();
        // pivot {x1, x2}, endpoint y = x2: x3 is a plain neighbor, clause (1)
        let cls = classify_neighbors(&c5, &e, 0, 2).unwrap();
        assert_eq!(cls.x, 1);
        let x3 = cls.colon.vertex_of_base(3);
        assert!(cls.x1.iter().any(|c| c.vertex == x3));
        for c in &cls.x1 {
            assert!(!cls.x2.iter().any(|d| d.vertex == c.vertex));
        }
        // plain G-neighbors always land in X1
        for w in [1usize, 3] {
            let wv = cls.colon.vertex_of_base(w);
            assert!(cls.x1.iter().any(|c| c.vertex == wv));
        }
    }

    #[test]
    fn classification_partition_property() {
        for g in enumerate_graphs(4, true).unwrap() {
            for e in edge_multisets(&g, 2) {
                for pivot in 0..e.s() {
                    let (a, b) = e.edges()[pivot];
                    for y in [a, b] {
                        let cls = classify_neighbors(&g, &e, pivot, y).unwrap();
                        let ids1: std::collections::HashSet<usize> =
                            cls.x1.iter().map(|c| c.vertex).collect();
                        let ids2: std::collections::HashSet<usize> =
                            cls.x2.iter().map(|c| c.vertex).collect();
                        assert!(ids1.is_disjoint(&ids2));
                        for c in cls.x1.iter().chain(&cls.x2) {
                            c.witness.validate(&g, &e).unwrap();
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classify_rejects_bad_pivot() {
        let c5 = Graph::cycle(5).unwrap();
        let e = EdgeMultiset::new(&c5, &[(1, 2)]).unwrap();
        assert!(classify_neighbors(&c5, &e, 5, 2).is_err());
        assert!(classify_neighbors(&c5, &e, 0, 4).is_err());
    }
}

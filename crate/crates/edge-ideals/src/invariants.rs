//! Exact combinatorial invariants: matching numbers, star packings and
//! zeta, co-chordal cover number, and vertex decomposability.

use std::collections::HashMap;

use crate::complex::maximal_independent_sets;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Guard on the vertex count for vertex decomposability.
pub const VD_GUARD: usize = 12;
/// Guard on the edge count for the co-chordal cover search.
pub const COCHORD_GUARD: usize = 20;
/// Guard on the vertex count for exhaustive star-packing enumeration.
pub const PACKING_GUARD: usize = 12;

fn degree_in(g: &Graph, mask: u64, v: usize) -> usize {
    (g.neighbors_mask(v) & mask).count_ones() as usize
}

fn edges_in(g: &Graph, mask: u64) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
        .collect()
}

fn drop_isolated(g: &Graph, mask: u64) -> u64 {
    let mut out = mask;
    for v in bits(mask) {
        if g.neighbors_mask(v) & mask == 0 {
            out &= !(1 << v);
        }
    }
    out
}

// ---------------------------------------------------------------- matchings

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, mask: u64) -> usize {
        let live = drop_isolated(g, mask);
        let Some(&v) = bits(live).first() else { return 0 };
        // v stays unmatched, or v is matched to one of its neighbors
        let mut best = rec(g, live & !(1 << v));
        for u in bits(g.neighbors_mask(v) & live) {
            best = best.max(1 + rec(g, live & !(1 << v) & !(1 << u)));
        }
        best
    }
    rec(g, g.full_mask())
}

/// Largest induced matching: chosen edges are pairwise disjoint and no edge
/// of G joins two of them.
pub fn induced_matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, mask: u64) -> usize {
        let live = drop_isolated(g, mask);
        let Some(&v) = bits(live).first() else { return 0 };
        let mut best = rec(g, live & !(1 << v));
        for u in bits(g.neighbors_mask(v) & live) {
            // taking edge {v, u} removes their whole closed neighborhoods
            let kill = (1u64 << v) | (1 << u) | g.neighbors_mask(v) | g.neighbors_mask(u);
            best = best.max(1 + rec(g, live & !kill));
        }
        best
    }
    rec(g, g.full_mask())
}

/// Minimum size of a maximal matching.
pub fn min_max_matching(g: &Graph) -> usize {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    let mut best = usize::MAX;
    fn rec(
        g: &Graph,
        edges: &[(usize, usize)],
        idx: usize,
        matched: u64,
        size: usize,
        best: &mut usize,
    ) {
        if size >= *best {
            return;
        }
        if idx == edges.len() {
            // maximal iff no edge has both endpoints unmatched
            if edges
                .iter()
                .all(|&(u, v)| matched & (1 << u) != 0 || matched & (1 << v) != 0)
            {
                *best = size;
            }
            return;
        }
        let (u, v) = edges[idx];
        if matched & (1 << u) == 0 && matched & (1 << v) == 0 {
            rec(g, edges, idx + 1, matched | (1 << u) | (1 << v), size + 1, best);
        }
        rec(g, edges, idx + 1, matched, size, best);
    }
    rec(g, &edges, 0, 0, 0, &mut best);
    best
}

// ------------------------------------------------------------------ cochord

fn is_cochordal_edge_subset(g: &Graph, edges: &[(usize, usize)], mask: u32) -> bool {
    // complement taken on the support vertex set of the chosen edges
    let mut support = 0u64;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask & (1 << i) != 0 {
            support |= (1 << u) | (1 << v);
        }
    }
    let verts = bits(support);
    let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let chosen: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, &(u, v))| (pos[&u], pos[&v]))
        .collect();
    let sub = Graph::from_edges(verts.len(), &chosen).unwrap();
    sub.complement().is_chordal()
}

/// Minimum number of co-chordal subgraphs covering the edge set, computed as
/// an exact set cover over the maximal co-chordal edge subsets.
pub fn cochordal_cover_number(g: &Graph) -> Result<usize> {
    cochordal_cover_number_guarded(g, false)
}

pub fn cochordal_cover_number_guarded(g: &Graph, override_guard: bool) -> Result<usize> {
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return Ok(0);
    }
    if m > COCHORD_GUARD && !override_guard {
        return Err(Error::Resource {
            what: "edge count for cochordal cover",
            value: m,
            limit: COCHORD_GUARD,
        });
    }
    if m > 24 {
        return Err(Error::Resource {
            what: "edge count for cochordal cover (hard cap)",
            value: m,
            limit: 24,
        });
    }
    let total: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut cochordal = vec![false; 1 << m];
    for mask in 1..=total {
        cochordal[mask as usize] = is_cochordal_edge_subset(g, &edges, mask);
    }
    // maximal co-chordal subsets are enough: covers may overlap, so any part
    // can be extended to a maximal one
    let mut maximal: Vec<u32> = Vec::new();
    'outer: for mask in 1..=total {
        if !cochordal[mask as usize] {
            continue;
        }
        for b in 0..m {
            if mask & (1 << b) == 0 && cochordal[(mask | (1 << b)) as usize] {
                continue 'outer;
            }
        }
        maximal.push(mask);
    }
    // exact minimum cover, branching on the lowest uncovered edge
    let mut memo: HashMap<u32, usize> = HashMap::new();
    fn cover(uncovered: u32, maximal: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if uncovered == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&uncovered) {
            return r;
        }
        let e = uncovered.trailing_zeros();
        let mut best = usize::MAX;
        for &s in maximal {
            if s & (1 << e) != 0 {
                best = best.min(1 + cover(uncovered & !s, maximal, memo));
            }
        }
        memo.insert(uncovered, best);
        best
    }
    Ok(cover(total, &maximal, &mut memo))
}

// ------------------------------------------------------------ star packings

/// A star packing: closed stars around the listed centers are removed one at
/// a time (isolated vertices dropped after each removal) until no vertex of
/// degree two remains; whatever disjoint edges are left form the residual.
/// The weight is centers.len() + residual_edges.len().
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPacking {
    pub centers: Vec<usize>,
    pub residual_edges: Vec<(usize, usize)>,
    /// Vertex sets of the intermediate graphs H_1 ... H_k.
    pub stages: Vec<Vec<usize>>,
}

impl StarPacking {
    pub fn weight(&self) -> usize {
        self.centers.len() + self.residual_edges.len()
    }
}

/// Checks the structural invariants of a packing against its graph.
pub fn validate_star_packing(g: &Graph, p: &StarPacking) -> Result<()> {
    let mut mask = drop_isolated(g, g.full_mask());
    for (i, &c) in p.centers.iter().enumerate() {
        if degree_in(g, mask, c) < 2 {
            return Err(Error::domain(format!(
                "center {c} has degree < 2 at stage {i}"
            )));
        }
        mask = drop_isolated(g, mask & !g.closed_neighborhood_mask(1 << c));
        let stage: Vec<usize> = bits(mask);
        if p.stages.get(i) != Some(&stage) {
            return Err(Error::domain(format!("stage {i} does not match trace")));
        }
    }
    if bits(mask).iter().any(|&v| degree_in(g, mask, v) >= 2) {
        return Err(Error::domain("process stopped while a degree-2 vertex remains"));
    }
    let mut residual = edges_in(g, mask);
    residual.sort_unstable();
    let mut claimed = p.residual_edges.clone();
    claimed.sort_unstable();
    if residual != claimed {
        return Err(Error::domain("residual edges do not match"));
    }
    Ok(())
}

struct ZetaSearch<'a> {
    g: &'a Graph,
    memo: HashMap<u64, (usize, Option<usize>)>,
}

impl<'a> ZetaSearch<'a> {
    // best weight achievable from this (isolated-free) vertex mask, plus the
    // chosen center (None once only residual edges remain)
    fn best(&mut self, mask: u64) -> (usize, Option<usize>) {
        if let Some(&r) = self.memo.get(&mask) {
            return r;
        }
        let candidates: Vec<usize> = bits(mask)
            .into_iter()
            .filter(|&v| degree_in(self.g, mask, v) >= 2)
            .collect();
        let result = if candidates.is_empty() {
            (edges_in(self.g, mask).len(), None)
        } else {
            let mut best = (0, None);
            for v in candidates {
                let next = drop_isolated(
                    self.g,
                    mask & !self.g.closed_neighborhood_mask(1 << v),
                );
                let (w, _) = self.best(next);
                if 1 + w > best.0 || best.1.is_none() {
                    best = (1 + w, Some(v));
                }
            }
            best
        };
        self.memo.insert(mask, result);
        result
    }
}

/// zeta(G): the maximum weight of a star packing, with a witness. Isolated
/// vertices are dropped first; a graph that is already a disjoint union of
/// edges gets the empty packing with all edges residual.
pub fn zeta(g: &Graph) -> (usize, StarPacking) {
    let mut search = ZetaSearch {
        g,
        memo: HashMap::new(),
    };
    let start = drop_isolated(g, g.full_mask());
    let (weight, _) = search.best(start);
    // replay the optimal choices to build the witness
    let mut centers = Vec::new();
    let mut stages = Vec::new();
    let mut mask = start;
    loop {
        let (_, choice) = search.best(mask);
        match choice {
            Some(v) => {
                centers.push(v);
                mask = drop_isolated(g, mask & !g.closed_neighborhood_mask(1 << v));
                stages.push(bits(mask));
            }
            None => break,
        }
    }
    let packing = StarPacking {
        centers,
        residual_edges: edges_in(g, mask),
        stages,
    };
    debug_assert_eq!(packing.weight(), weight);
    (weight, packing)
}

/// Every star packing of `g`, enumerating all admissible center choices.
pub fn all_star_packings(g: &Graph) -> Result<Vec<StarPacking>> {
    if g.n() > PACKING_GUARD {
        return Err(Error::Resource {
            what: "vertex count for packing enumeration",
            value: g.n(),
            limit: PACKING_GUARD,
        });
    }
    let mut out = Vec::new();
    fn rec(
        g: &Graph,
        mask: u64,
        centers: &mut Vec<usize>,
        stages: &mut Vec<Vec<usize>>,
        out: &mut Vec<StarPacking>,
    ) {
        let candidates: Vec<usize> = bits(mask)
            .into_iter()
            .filter(|&v| degree_in(g, mask, v) >= 2)
            .collect();
        if candidates.is_empty() {
            out.push(StarPacking {
                centers: centers.clone(),
                residual_edges: edges_in(g, mask),
                stages: stages.clone(),
            });
            return;
        }
        for v in candidates {
            let next = drop_isolated(g, mask & !g.closed_neighborhood_mask(1 << v));
            centers.push(v);
            stages.push(bits(next));
            rec(g, next, centers, stages, out);
            centers.pop();
            stages.pop();
        }
    }
    rec(
        g,
        drop_isolated(g, g.full_mask()),
        &mut Vec::new(),
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

// ------------------------------------------------- vertex decomposability

/// x is a shedding vertex of the induced subgraph on `mask` when every
/// maximal independent set of G\x meets N(x); equivalently, no independent
/// set of G\N[x] is maximal in G\x.
fn is_shedding(g: &Graph, mask: u64, x: usize) -> bool {
    let without_x = mask & !(1 << x);
    let sub = g.induced_mask(without_x);
    let verts = bits(without_x);
    let nx = g.neighbors_mask(x);
    for mis in maximal_independent_sets(&sub) {
        let mut original = 0u64;
        for i in bits(mis) {
            original |= 1 << verts[i];
        }
        if original & nx == 0 {
            return false;
        }
    }
    true
}

fn is_vd_mask(g: &Graph, mask: u64, memo: &mut HashMap<u64, bool>) -> bool {
    let live = drop_isolated(g, mask);
    if edges_in(g, live).is_empty() {
        return true;
    }
    if let Some(&r) = memo.get(&live) {
        return r;
    }
    let mut result = false;
    for x in bits(live) {
        if !is_shedding(g, live, x) {
            continue;
        }
        let minus_x = live & !(1 << x);
        let minus_nx = live & !g.closed_neighborhood_mask(1 << x);
        if is_vd_mask(g, minus_x, memo) && is_vd_mask(g, minus_nx, memo) {
            result = true;
            break;
        }
    }
    memo.insert(live, result);
    result
}

/// Vertex decomposability of the independence complex, via the recursive
/// deletion/neighborhood-deletion characterization. Isolated vertices are
/// dropped first (they cone the complex).
pub fn is_vertex_decomposable(g: &Graph) -> Result<bool> {
    is_vertex_decomposable_guarded(g, false)
}

pub fn is_vertex_decomposable_guarded(g: &Graph, override_guard: bool) -> Result<bool> {
    if g.n() > VD_GUARD && !override_guard {
        return Err(Error::Resource {
            what: "vertex count for vertex decomposability",
            value: g.n(),
            limit: VD_GUARD,
        });
    }
    let mut memo = HashMap::new();
    Ok(is_vd_mask(g, g.full_mask(), &mut memo))
}

/// Certificate that a vertex sheds: the two subgraphs of the recursion.
#[derive(Clone, Debug)]
pub struct SheddingCertificate {
    pub vertex: usize,
    pub deletion: Vec<usize>,
    pub neighborhood_deletion: Vec<usize>,
}

impl SheddingCertificate {
    /// Re-verifies the shedding condition by enumerating maximal
    /// independent sets.
    pub fn verify(&self, g: &Graph) -> bool {
        is_shedding(g, g.full_mask(), self.vertex)
    }
}

pub fn shedding_certificate(g: &Graph, x: usize) -> Result<Option<SheddingCertificate>> {
    g.check_vertex(x)?;
    if !is_shedding(g, g.full_mask(), x) {
        return Ok(None);
    }
    Ok(Some(SheddingCertificate {
        vertex: x,
        deletion: bits(g.full_mask() & !(1 << x)),
        neighborhood_deletion: bits(g.full_mask() & !g.closed_neighborhood_mask(1 << x)),
    }))
}

/// S(G): the shedding vertices x for which G\x stays vertex decomposable.
/// Nonempty whenever G itself is vertex decomposable with an edge.
pub fn shedding_set(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > VD_GUARD {
        return Err(Error::Resource {
            what: "vertex count for shedding set",
            value: g.n(),
            limit: VD_GUARD,
        });
    }
    let mut memo = HashMap::new();
    let live = drop_isolated(g, g.full_mask());
    let mut out = Vec::new();
    for x in bits(live) {
        if is_shedding(g, live, x) && is_vd_mask(g, live & !(1 << x), &mut memo) {
            out.push(x);
        }
    }
    Ok(out)
}

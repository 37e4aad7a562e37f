//! Finite simple graphs on at most 62 vertices, with graph6 I/O, standard
//! constructions, structural predicates and isomorphism-free enumeration.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// graph6 short form stops at 62 vertices; everything here inherits that cap.
pub const MAX_VERTICES: usize = 62;
/// Default guard for isomorphism-free enumeration.
pub const ENUMERATE_GUARD: usize = 8;
/// Default guard on multiset size for even-connection searches.
pub const MULTISET_GUARD: usize = 8;

/// An immutable finite simple graph. Vertices are labelled `0..n`; adjacency
/// is one bitset per vertex. Optional human names are carried along so that
/// derived objects (ideals, colon graphs) stay readable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    names: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Resource {
                what: "vertex count",
                value: n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            names: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::domain(format!(
                "expected {} names, got {}",
                self.n,
                names.len()
            )));
        }
        let distinct: HashSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::domain("vertex names must be unique"));
        }
        self.names = Some(names);
        Ok(self)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::domain(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::domain(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(ns) => ns[v].clone(),
            None => format!("x{v}"),
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.n).map(|v| self.name(v)).collect()
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.n > 0 && self.min_degree() == 0
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            t += (self.adj[u] & self.adj[v]).count_ones() as usize;
        }
        t / 3
    }

    // ----- constructions -----

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union; the second block is relabelled to `n1..n1+n2`.
    /// Custom names are dropped to keep labels unique.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let mut g = Graph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.insert_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    /// Adds one pendant vertex to each vertex in `s`. New vertices are
    /// appended after the existing ones, in the sorted order of `s`.
    pub fn add_whiskers(&self, s: &[usize]) -> Result<Self> {
        let mut centers: Vec<usize> = s.to_vec();
        centers.sort_unstable();
        centers.dedup();
        for &v in &centers {
            self.check_vertex(v)?;
        }
        let mut g = Graph::new(self.n + centers.len())?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v)?;
        }
        for (i, &v) in centers.iter().enumerate() {
            g.insert_edge(v, self.n + i)?;
        }
        if let Some(ns) = &self.names {
            let mut names = ns.clone();
            for &v in &centers {
                names.push(format!("z_{}", self.name(v)));
            }
            g = g.with_names(names)?;
        }
        Ok(g)
    }

    // ----- subgraphs -----

    /// Induced subgraph on the given vertices (sorted, deduplicated);
    /// vertex `keep[i]` becomes vertex `i`. Names are carried over.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self> {
        let mut ks: Vec<usize> = keep.to_vec();
        ks.sort_unstable();
        ks.dedup();
        for &v in &ks {
            self.check_vertex(v)?;
        }
        let mut mask = 0u64;
        for &v in &ks {
            mask |= 1 << v;
        }
        Ok(self.induced_mask(mask))
    }

    /// Induced subgraph on the vertices in `mask`, relabelled contiguously
    /// in increasing label order.
    pub fn induced_mask(&self, mask: u64) -> Self {
        let verts = bits(mask & self.full_mask());
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph {
            n: verts.len(),
            adj: vec![0; verts.len()],
            names: self
                .names
                .as_ref()
                .map(|ns| verts.iter().map(|&v| ns[v].clone()).collect()),
        };
        for (i, &v) in verts.iter().enumerate() {
            for w in bits(self.adj[v] & mask) {
                g.adj[i] |= 1 << pos[w];
            }
        }
        g
    }

    pub fn delete_vertices(&self, del: &[usize]) -> Result<Self> {
        for &v in del {
            self.check_vertex(v)?;
        }
        let mut mask = self.full_mask();
        for &v in del {
            mask &= !(1 << v);
        }
        Ok(self.induced_mask(mask))
    }

    /// N[u1,...,ur]: the listed vertices together with all their neighbors.
    pub fn closed_neighborhood(&self, us: &[usize]) -> Result<Vec<usize>> {
        let mut mask = 0u64;
        for &u in us {
            self.check_vertex(u)?;
            mask |= 1 << u;
            mask |= self.adj[u];
        }
        Ok(bits(mask))
    }

    pub fn closed_neighborhood_mask(&self, us_mask: u64) -> u64 {
        let mut out = us_mask;
        for v in bits(us_mask & self.full_mask()) {
            out |= self.adj[v];
        }
        out
    }

    pub fn complement(&self) -> Self {
        let full = self.full_mask();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1 << v);
        }
        g
    }

    // ----- predicates -----

    /// Chordality via maximum cardinality search: build the ordering, then
    /// verify it is a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return true;
        }
        let mut weight = vec![0usize; n];
        let mut picked = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !picked[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            picked[v] = true;
            order.push(v);
            for w in bits(self.adj[v]) {
                if !picked[w] {
                    weight[w] += 1;
                }
            }
        }
        // Reverse MCS order is the candidate elimination order.
        order.reverse();
        let mut rank = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<usize> = bits(self.adj[v]).into_iter().filter(|&w| rank[w] > i).collect();
            for (a_i, &a) in later.iter().enumerate() {
                for &b in &later[a_i + 1..] {
                    if !self.has_edge(a, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in bits(self.adj[v]) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn same_component(&self, u: usize, v: usize) -> bool {
        self.components().iter().any(|c| c.contains(&u) && c.contains(&v))
    }

    /// True if some 5 vertices induce a 5-cycle.
    pub fn has_induced_c5(&self) -> bool {
        let n = self.n;
        if n < 5 {
            return false;
        }
        let mut sel = [0usize; 5];
        fn rec(g: &Graph, sel: &mut [usize; 5], k: usize, start: usize) -> bool {
            if k == 5 {
                let sub = g.induced_subgraph(&sel[..]).unwrap();
                return sub.edge_count() == 5 && sub.min_degree() == 2 && sub.is_connected();
            }
            for v in start..g.n() {
                sel[k] = v;
                if rec(g, sel, k + 1, v + 1) {
                    return true;
                }
            }
            false
        }
        rec(self, &mut sel, 0, 0)
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::domain("permutation length mismatch"));
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    // ----- graph6 -----

    pub fn to_graph6(&self) -> String {
        debug_assert!(self.n <= MAX_VERTICES);
        let mut out = vec![(self.n as u8) + 63];
        let mut acc: u8 = 0;
        let mut nbits = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc <<= 1;
                if self.has_edge(i, j) {
                    acc |= 1;
                }
                nbits += 1;
                if nbits == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push((acc << (6 - nbits)) + 63);
        }
        String::from_utf8(out).unwrap()
    }

    pub fn from_graph6(s: &str) -> Result<Self> {
        let b = s.trim_end_matches(['\n', '\r']).as_bytes();
        if b.is_empty() {
            return Err(Error::Graph6 {
                offset: 0,
                reason: "empty string".into(),
            });
        }
        if b[0] == 126 {
            return Err(Error::Graph6 {
                offset: 0,
                reason: "long-form header (n > 62) not supported".into(),
            });
        }
        if b[0] < 63 || b[0] > 125 {
            return Err(Error::Graph6 {
                offset: 0,
                reason: format!("illegal header byte {}", b[0]),
            });
        }
        let n = (b[0] - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if b.len() < 1 + nbytes {
            return Err(Error::Graph6 {
                offset: b.len(),
                reason: format!("truncated: need {} data bytes, got {}", nbytes, b.len() - 1),
            });
        }
        if b.len() > 1 + nbytes {
            return Err(Error::Graph6 {
                offset: 1 + nbytes,
                reason: "trailing data".into(),
            });
        }
        let mut g = Graph::new(n)?;
        let mut bit_index = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = b[1 + bit_index / 6];
                if byte < 63 || byte > 126 {
                    return Err(Error::Graph6 {
                        offset: 1 + bit_index / 6,
                        reason: format!("illegal character {byte}"),
                    });
                }
                let val = byte - 63;
                if val & (1 << (5 - bit_index % 6)) != 0 {
                    g.insert_edge(i, j)?;
                }
                bit_index += 1;
            }
        }
        // Padding bits must be zero for a canonical encoding.
        if nbits % 6 != 0 {
            let last = b[b.len() - 1];
            if last < 63 || last > 126 {
                return Err(Error::Graph6 {
                    offset: b.len() - 1,
                    reason: format!("illegal character {last}"),
                });
            }
            let pad = 6 - nbits % 6;
            if (last - 63) & ((1 << pad) - 1) != 0 {
                return Err(Error::Graph6 {
                    offset: b.len() - 1,
                    reason: "nonzero padding bits".into(),
                });
            }
        }
        for (i, &byte) in b.iter().enumerate().skip(1) {
            if byte < 63 || byte > 126 {
                return Err(Error::Graph6 {
                    offset: i,
                    reason: format!("illegal character {byte}"),
                });
            }
        }
        Ok(g)
    }

    // ----- JSON adjacency -----

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            n: self.n,
            edges: self.edges(),
        })
        .unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let gj: GraphJson = serde_json::from_str(s)?;
        Graph::from_edges(gj.n, &gj.edges)
    }

    // ----- canonical form and enumeration -----

    /// Lexicographically minimal column-major upper-triangle encoding over
    /// all relabelings, found by a pruned exhaustive search over vertex
    /// placements. Earlier bits are more significant.
    pub fn canonical_form(&self) -> u128 {
        let n = self.n;
        assert!(n * n.saturating_sub(1) / 2 <= 128, "canonical_form needs n <= 16");
        if n <= 1 {
            return 0;
        }
        let total_bits = n * (n - 1) / 2;
        let mut best: Option<u128> = None;
        let mut placed: Vec<usize> = Vec::with_capacity(n);
        self.canon_rec(0, 0, 0, &mut placed, &mut best, total_bits, false);
        best.unwrap()
    }

    #[allow(clippy::too_many_arguments)]
    fn canon_rec(
        &self,
        level: usize,
        prefix: u128,
        prefix_len: usize,
        placed: &mut Vec<usize>,
        best: &mut Option<u128>,
        total_bits: usize,
        strictly_less: bool,
    ) {
        let n = self.n;
        if level == n {
            if strictly_less || best.is_none() {
                *best = Some(prefix);
            }
            return;
        }
        // Candidates ordered by the bits they would contribute, so cheap
        // prefixes are tried first and pruning kicks in early.
        let mut cands: Vec<(u128, usize)> = Vec::new();
        'outer: for c in 0..n {
            for &p in placed.iter() {
                if p == c {
                    continue 'outer;
                }
            }
            let mut bitsval: u128 = 0;
            for &p in placed.iter() {
                bitsval <<= 1;
                if self.has_edge(p, c) {
                    bitsval |= 1;
                }
            }
            cands.push((bitsval, c));
        }
        cands.sort_unstable();
        for (bitsval, c) in cands {
            let new_prefix = (prefix << level) | bitsval;
            let new_len = prefix_len + level;
            let (mut less, mut prune) = (strictly_less, false);
            if !less {
                if let Some(b) = *best {
                    let bprefix = b >> (total_bits - new_len);
                    if new_prefix > bprefix {
                        prune = true;
                    } else if new_prefix < bprefix {
                        less = true;
                    }
                }
            }
            if prune {
                continue;
            }
            placed.push(c);
            self.canon_rec(level + 1, new_prefix, new_len, placed, best, total_bits, less);
            placed.pop();
        }
    }

    /// Rebuilds the graph encoded by `canonical_form` bits.
    pub fn from_canonical_bits(n: usize, bits_val: u128) -> Result<Self> {
        let total = n * n.saturating_sub(1) / 2;
        let mut g = Graph::new(n)?;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bits_val & (1 << (total - 1 - idx)) != 0 {
                    g.insert_edge(i, j)?;
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    pub fn canonical_graph(&self) -> Graph {
        Graph::from_canonical_bits(self.n, self.canonical_form()).unwrap()
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        let names: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}{}", self.name(u), self.name(v)))
            .collect();
        write!(f, "{{{}}})", names.join(", "))
    }
}

pub fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, built by augmenting the classes on `n-1` vertices. With
/// `no_isolated`, only graphs of minimum degree >= 1 are returned.
pub fn enumerate_graphs(n: usize, no_isolated: bool) -> Result<Vec<Graph>> {
    enumerate_graphs_guarded(n, no_isolated, false)
}

pub fn enumerate_graphs_guarded(n: usize, no_isolated: bool, override_guard: bool) -> Result<Vec<Graph>> {
    if n > ENUMERATE_GUARD && !override_guard {
        return Err(Error::Resource {
            what: "enumeration vertex count",
            value: n,
            limit: ENUMERATE_GUARD,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::new(0)?]);
    }
    let mut level: HashSet<u128> = HashSet::new();
    level.insert(0); // the single graph on one vertex
    for k in 2..=n {
        let mut next: HashSet<u128> = HashSet::new();
        for &bits_val in &level {
            let base = Graph::from_canonical_bits(k - 1, bits_val)?;
            for mask in 0u64..(1 << (k - 1)) {
                let mut g = Graph::new(k)?;
                for (u, v) in base.edges() {
                    g.insert_edge(u, v)?;
                }
                for v in bits(mask) {
                    g.insert_edge(v, k - 1)?;
                }
                next.insert(g.canonical_form());
            }
        }
        level = next;
    }
    let mut vals: Vec<u128> = level.into_iter().collect();
    vals.sort_unstable();
    let mut out = Vec::new();
    for v in vals {
        let g = Graph::from_canonical_bits(n, v)?;
        if no_isolated && g.has_isolated_vertex() {
            continue;
        }
        out.push(g);
    }
    Ok(out)
}

/// A multiset of edges of a fixed graph: the exponents live in the order the
/// pairs were given after normalization. Total multiplicity is `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMultiset {
    edges: Vec<(usize, usize)>,
}

impl EdgeMultiset {
    pub fn new(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !g.has_edge(u, v) {
                return Err(Error::domain(format!(
                    "pair ({a}, {b}) is not an edge of the graph"
                )));
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        Ok(EdgeMultiset { edges })
    }

    pub fn s(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Distinct edges with multiplicities, in sorted edge order.
    pub fn distinct(&self) -> Vec<((usize, usize), usize)> {
        let mut out: Vec<((usize, usize), usize)> = Vec::new();
        for &e in &self.edges {
            match out.last_mut() {
                Some((d, m)) if *d == e => *m += 1,
                _ => out.push((e, 1)),
            }
        }
        out
    }

    /// The multiset with one copy of entry `i` removed.
    pub fn without_index(&self, i: usize) -> Result<Self> {
        if i >= self.edges.len() {
            return Err(Error::domain(format!("multiset index {i} out of range")));
        }
        let mut edges = self.edges.clone();
        edges.remove(i);
        Ok(EdgeMultiset { edges })
    }

    /// Keeps only the copies whose edge survives in the given graph mask
    /// (both endpoints inside `mask`).
    pub fn restrict_to_mask(&self, mask: u64) -> Self {
        EdgeMultiset {
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
                .collect(),
        }
    }

    pub fn describe(&self, g: &Graph) -> String {
        self.edges
            .iter()
            .map(|&(u, v)| format!("{}{}", g.name(u), g.name(v)))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// All multisets of size `s` over the edges of `g`, in lexicographic order.
pub fn edge_multisets(g: &Graph, s: usize) -> Vec<EdgeMultiset> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut cur: Vec<(usize, usize)> = Vec::with_capacity(s);
    fn rec(
        edges: &[(usize, usize)],
        start: usize,
        s: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<EdgeMultiset>,
    ) {
        if cur.len() == s {
            out.push(EdgeMultiset { edges: cur.clone() });
            return;
        }
        for i in start..edges.len() {
            cur.push(edges[i]);
            rec(edges, i, s, cur, out);
            cur.pop();
        }
    }
    rec(&edges, 0, s, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_single_vertex() {
        let g = Graph::from_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.to_graph6(), "@");
    }

    #[test]
    fn graph6_k2_roundtrip() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.to_graph6(), "A_");
        let back = Graph::from_graph6("A_").unwrap();
        assert_eq!(back, k2);
    }

    #[test]
    fn graph6_illegal_character() {
        let err = Graph::from_graph6("A\u{1}").unwrap_err();
        match err {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 1),
            other => panic!("expected graph6 error, got {other}"),
        }
        let err = Graph::from_graph6("\u{10}").unwrap_err();
        match err {
            Error::Graph6 { offset, .. } => assert_eq!(offset, 0),
            other => panic!("expected graph6 error, got {other}"),
        }
    }

    #[test]
    fn graph6_truncated() {
        // C5 needs 2 data bytes.
        let full = Graph::cycle(5).unwrap().to_graph6();
        let err = Graph::from_graph6(&full[..2]).unwrap_err();
        assert!(matches!(err, Error::Graph6 { .. }));
    }

    #[test]
    fn whiskers_on_triangle() {
        let k3 = Graph::complete(3).unwrap();
        let w = k3.add_whiskers(&[0, 1, 2]).unwrap();
        assert_eq!(w.n(), 6);
        assert_eq!(w.edge_count(), 6);
        assert_eq!((3..6).filter(|&v| w.degree(v) == 1).count(), 3);
    }

    #[test]
    fn disjoint_union_edge_count() {
        let c5 = Graph::cycle(5).unwrap();
        let c7 = Graph::cycle(7).unwrap();
        let u = c5.disjoint_union(&c7).unwrap();
        assert_eq!(u.edge_count(), 12);
        assert_eq!(u.n(), 12);
    }

    #[test]
    fn cycle_degrees() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.degree_sequence(), vec![2; 5]);
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn pentagon_minus_closed_star_is_edge() {
        let c5 = Graph::cycle(5).unwrap();
        for x in 0..5 {
            let nbhd = c5.closed_neighborhood(&[x]).unwrap();
            assert_eq!(nbhd.len(), 3);
            let rest = c5.delete_vertices(&nbhd).unwrap();
            assert_eq!(rest.n(), 2);
            assert_eq!(rest.edge_count(), 1);
        }
    }

    #[test]
    fn complement_of_c4_is_matching() {
        let c4 = Graph::cycle(4).unwrap();
        let c = c4.complement();
        assert_eq!(c.edge_count(), 2);
        assert_eq!(c.degree_sequence(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn chordal_examples() {
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
        assert!(Graph::new(4).unwrap().is_chordal());
        assert!(!Graph::cycle(7).unwrap().complement().is_chordal());
        assert!(Graph::path(6).unwrap().is_chordal());
    }

    /// Brute-force chordality: no subset of >= 4 vertices induces a cycle.
    fn chordal_brute(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() < 4 {
                continue;
            }
            let sub = g.induced_mask(mask);
            if sub.edge_count() == sub.n() && sub.min_degree() == 2 && sub.is_connected() {
                return false;
            }
        }
        true
    }

    #[test]
    fn chordal_agrees_with_brute_force() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                assert_eq!(g.is_chordal(), chordal_brute(&g), "mismatch on {}", g.to_graph6());
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(2, true).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(4, false).unwrap().len(), 11);
        assert_eq!(enumerate_graphs(5, true).unwrap().len(), 23);
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn enumeration_yields_non_isomorphic() {
        let gs = enumerate_graphs(5, false).unwrap();
        assert_eq!(gs.len(), 34);
        let mut fps: Vec<(Vec<usize>, usize, usize)> = gs
            .iter()
            .map(|g| (g.degree_sequence(), g.triangle_count(), g.edge_count()))
            .collect();
        let forms: HashSet<u128> = gs.iter().map(|g| g.canonical_form()).collect();
        assert_eq!(forms.len(), gs.len());
        fps.dedup();
        assert!(fps.len() > 20, "fingerprints should mostly distinguish classes");
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let perm = [3, 0, 4, 1, 5, 2];
        let h = g.relabel(&perm).unwrap();
        assert_eq!(g.canonical_form(), h.canonical_form());
        assert!(g.is_isomorphic(&h));
    }

    #[test]
    fn induced_subgraph_identity() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn multiset_validation() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(EdgeMultiset::new(&c5, &[(0, 2)]).is_err());
        let e = EdgeMultiset::new(&c5, &[(1, 0), (0, 1), (2, 3)]).unwrap();
        assert_eq!(e.s(), 3);
        assert_eq!(e.distinct(), vec![((0, 1), 2), ((2, 3), 1)]);
    }

    #[test]
    fn multiset_enumeration_counts() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(edge_multisets(&c4, 1).len(), 4);
        assert_eq!(edge_multisets(&c4, 2).len(), 10);
    }

    #[test]
    fn json_roundtrip() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 4)]).unwrap();
        let s = g.to_json();
        assert_eq!(Graph::from_json(&s).unwrap(), g);
    }
}

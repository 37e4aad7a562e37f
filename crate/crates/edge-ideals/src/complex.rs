//! Simplicial complexes on a small ground set, stored by their facets.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::monomial::MonomialIdeal;

/// Guard on the ground set size for homology computations.
pub const GROUND_GUARD: usize = 24;

/// A simplicial complex on ground set `0..ground`. Facets form an antichain;
/// ground elements absent from every facet are non-faces (the complex still
/// knows about them). The void complex has no facets at all, while the
/// complex `{{}}` is represented by the single facet 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    pub fn from_facets(ground: usize, facets: Vec<u32>) -> Result<Self> {
        if ground > 32 {
            return Err(Error::Resource {
                what: "ground set size",
                value: ground,
                limit: 32,
            });
        }
        let mask = if ground == 32 { u32::MAX } else { (1u32 << ground) - 1 };
        for &f in &facets {
            if f & !mask != 0 {
                return Err(Error::domain("facet outside ground set"));
            }
        }
        let mut antichain: Vec<u32> = Vec::new();
        for f in facets {
            if antichain.iter().any(|&g| f & !g == 0) {
                continue; // already under some facet (or equal)
            }
            antichain.retain(|&g| g & !f != 0);
            antichain.push(f);
        }
        antichain.sort_unstable();
        Ok(SimplicialComplex {
            ground,
            facets: antichain,
        })
    }

    pub fn void(ground: usize) -> Self {
        SimplicialComplex { ground, facets: vec![] }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, or None for the void complex. The complex `{{}}` has
    /// dimension -1.
    pub fn dim(&self) -> Option<i32> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i32 - 1)
            .max()
    }

    pub fn is_face(&self, f: u32) -> bool {
        self.facets.iter().any(|&g| f & !g == 0)
    }

    /// Every face, including the empty face for non-void complexes.
    pub fn faces(&self) -> Vec<u32> {
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut out: Vec<u32> = seen.into_iter().collect();
        out.sort_unstable_by_key(|m| (m.count_ones(), *m));
        out
    }

    /// link_Delta(F) = { F' : F' disjoint from F, F' union F a face }.
    pub fn link(&self, face: u32) -> Result<Self> {
        if !self.is_face(face) {
            return Err(Error::domain("link of a non-face"));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face)
            .collect();
        SimplicialComplex::from_facets(self.ground, facets)
    }

    /// Restriction to a vertex subset.
    pub fn restrict(&self, w: u32) -> Self {
        SimplicialComplex::from_facets(self.ground, self.facets.iter().map(|&f| f & w).collect())
            .expect("restriction stays inside ground set")
    }

    /// True when some ground element lies in every facet.
    pub fn is_cone(&self) -> bool {
        if self.facets.is_empty() {
            return false;
        }
        self.facets.iter().fold(u32::MAX, |acc, &f| acc & f) != 0
    }
}

/// The independence complex of a graph: faces are the independent sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let facets = maximal_independent_sets(g)
        .into_iter()
        .map(|m| m as u32)
        .collect();
    SimplicialComplex::from_facets(g.n(), facets).expect("graphs stay under the ground cap")
}

/// All maximal independent sets of `g`, as masks, sorted.
pub fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    // branch on the lowest undecided vertex: include it and drop its
    // neighborhood, or exclude it (then a chosen neighbor must justify it)
    fn rec(g: &Graph, chosen: u64, candidates: u64, excluded: u64, out: &mut Vec<u64>) {
        if candidates == 0 {
            for v in bits(excluded) {
                if g.neighbors_mask(v) & chosen == 0 {
                    return;
                }
            }
            out.push(chosen);
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        rec(
            g,
            chosen | vbit,
            candidates & !vbit & !g.neighbors_mask(v),
            excluded | (candidates & g.neighbors_mask(v)),
            out,
        );
        rec(g, chosen, candidates & !vbit, excluded | vbit, out);
    }
    let mut out = Vec::new();
    rec(g, 0, g.full_mask(), 0, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// The Stanley-Reisner complex of a squarefree monomial ideal: faces are the
/// variable subsets containing no generator support.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::domain("Stanley-Reisner complex needs a squarefree ideal"));
    }
    let n = ideal.ctx().len();
    if n > 32 {
        return Err(Error::Resource {
            what: "variable count",
            value: n,
            limit: 32,
        });
    }
    if ideal.is_unit() {
        return Ok(SimplicialComplex::void(n));
    }
    let supports: Vec<u32> = ideal.generators().iter().map(|g| g.support_mask()).collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // peel one vertex of a violated support at a time
    let mut facets: Vec<u32> = Vec::new();
    let mut stack = vec![full];
    let mut seen = std::collections::HashSet::new();
    while let Some(cand) = stack.pop() {
        match supports.iter().find(|&&s| s & !cand == 0) {
            None => facets.push(cand),
            Some(&s) => {
                for v in bits(s as u64) {
                    let next = cand & !(1u32 << v);
                    if seen.insert(next) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    SimplicialComplex::from_facets(n, facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn independence_complex_of_k2_is_two_points() {
        let d = independence_complex(&Graph::complete(2).unwrap());
        assert_eq!(d.facets(), &[0b01, 0b10]);
        assert_eq!(d.dim(), Some(0));
    }

    #[test]
    fn independence_complex_of_c5_is_pentagon() {
        let d = independence_complex(&Graph::cycle(5).unwrap());
        assert_eq!(d.facets().len(), 5);
        assert!(d.facets().iter().all(|f| f.count_ones() == 2));
        assert_eq!(d.faces().len(), 1 + 5 + 5);
    }

    #[test]
    fn independence_complex_of_empty_graph_is_simplex() {
        let d = independence_complex(&Graph::new(4).unwrap());
        assert_eq!(d.facets(), &[0b1111]);
    }

    #[test]
    fn link_and_restrict() {
        let d = independence_complex(&Graph::new(4).unwrap());
        // link of a vertex in the full simplex is the full simplex on the rest
        let l = d.link(0b0001).unwrap();
        assert_eq!(l.facets(), &[0b1110]);
        // link of the empty face is the complex itself
        assert_eq!(d.link(0).unwrap(), d);

        let pent = independence_complex(&Graph::cycle(5).unwrap());
        // four consecutive vertices of the pentagon restrict to a path
        let r = pent.restrict(0b01111);
        assert_eq!(r.dim(), Some(1));
        assert_eq!(r.facets().iter().filter(|f| f.count_ones() == 2).count(), 3);
        // the pair {0, 2} is a face (independent), {0, 1} is not
        assert!(pent.is_face(0b101));
        assert!(!pent.is_face(0b011));
        assert!(pent.link(0b011).is_err());
    }

    #[test]
    fn stanley_reisner_of_edge_ideal_is_independence_complex() {
        for g in crate::graph::enumerate_graphs(5, true).unwrap() {
            let i = crate::monomial::MonomialIdeal::edge_ideal(&g);
            assert_eq!(stanley_reisner(&i).unwrap(), independence_complex(&g));
        }
    }

    #[test]
    fn cone_detection() {
        let d = independence_complex(&Graph::new(3).unwrap());
        assert!(d.is_cone());
        let pent = independence_complex(&Graph::cycle(5).unwrap());
        assert!(!pent.is_cone());
    }
}

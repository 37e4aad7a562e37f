//! Exact Castelnuovo-Mumford regularity of monomial ideals at desk scale.
//!
//! For a squarefree ideal the regularity is read off restricted reduced
//! homology: reg(I) = max { d + 2 : H~_d of the Stanley-Reisner complex
//! restricted to W is nonzero for some variable subset W }. Arbitrary
//! monomial ideals go through polarization first, which preserves
//! regularity. The convention throughout is reg(I) = reg(R/I) + 1; reports
//! carry both numbers plus the witnessing subset and dimension.
//!
//! The subset loop skips any W whose restriction is a cone (some member of W
//! lies in no generator support inside W); restrictions are enumerated
//! face-by-face from the generator supports and collapsed before any matrix
//! rank is taken.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::even_connection::colon_graph;
use crate::graph::{edge_multisets, EdgeMultiset, Graph};
use crate::homology::{homology_of_faces, Field, HomologyRanks};
use crate::monomial::MonomialIdeal;

/// Guard on the number of variables in a squarefree regularity computation.
pub const SR_VARS_GUARD: usize = 20;

/// Computation policy: primary field, optional cross-check field (a
/// disagreement is an error, never silently resolved), and guard override.
#[derive(Clone, Copy, Debug)]
pub struct Engine {
    pub field: Field,
    pub crosscheck: Option<Field>,
    pub override_guards: bool,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            field: Field::QQ,
            crosscheck: None,
            override_guards: false,
        }
    }
}

impl Engine {
    pub fn checked() -> Self {
        Engine {
            field: Field::QQ,
            crosscheck: Some(Field::GFp(32003)),
            override_guards: false,
        }
    }

    pub fn with_override(mut self) -> Self {
        self.override_guards = true;
        self
    }

    fn ranks(&self, faces: &[u32]) -> Result<HomologyRanks> {
        let primary = homology_of_faces(faces, self.field);
        if let Some(other) = self.crosscheck {
            let second = homology_of_faces(faces, other);
            if primary != second {
                return Err(Error::FieldMismatch(format!(
                    "ranks over {} are {:?} but over {} are {:?} ({} cells)",
                    self.field,
                    primary.ranks,
                    other,
                    second.ranks,
                    faces.len()
                )));
            }
        }
        Ok(primary)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    #[serde(rename = "W")]
    pub subset: Vec<usize>,
    pub dim: i32,
}

/// The regularity of an ideal with its provenance. `reg` follows the ideal
/// convention (reg(R/I) + 1 for nonzero proper ideals); zero and unit ideals
/// are flagged degenerate with both values 0.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub reg: usize,
    pub reg_mod: usize,
    pub witness: Option<Witness>,
    pub field: String,
    pub degenerate: bool,
}

impl RegularityReport {
    fn degenerate(engine: &Engine) -> Self {
        RegularityReport {
            reg: 0,
            reg_mod: 0,
            witness: None,
            field: engine.field.to_string(),
            degenerate: true,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }
}

/// All faces of the Stanley-Reisner restriction to `w`: subsets of `w`
/// containing no generator support. Includes the empty face.
fn faces_of_restriction(supports: &[u32], supports_by_var: &[Vec<u32>], w: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let verts: Vec<u32> = (0..32).filter(|i| w & (1 << i) != 0).collect();
    fn rec(
        verts: &[u32],
        from: usize,
        cur: u32,
        supports_by_var: &[Vec<u32>],
        out: &mut Vec<u32>,
    ) {
        out.push(cur);
        for idx in from..verts.len() {
            let v = verts[idx];
            let cand = cur | (1 << v);
            // adding v may complete a support
            if supports_by_var[v as usize].iter().all(|&s| s & !cand != 0) {
                rec(verts, idx + 1, cand, supports_by_var, out);
            }
        }
    }
    rec(&verts, 0, 0, supports_by_var, &mut out);
    out.sort_unstable_by_key(|m| (m.count_ones(), *m));
    out
}

/// Exact regularity of a squarefree monomial ideal via restricted homology.
pub fn regularity_squarefree(ideal: &MonomialIdeal, engine: &Engine) -> Result<RegularityReport> {
    if !ideal.is_squarefree() {
        return Err(Error::domain(
            "ideal is not squarefree; use regularity() to polarize first",
        ));
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(RegularityReport::degenerate(engine));
    }
    let n = ideal.ctx().len();
    if n > SR_VARS_GUARD && !engine.override_guards {
        return Err(Error::Resource {
            what: "squarefree variable count",
            value: n,
            limit: SR_VARS_GUARD,
        });
    }
    if n > 25 {
        return Err(Error::Resource {
            what: "squarefree variable count (hard cap)",
            value: n,
            limit: 25,
        });
    }
    let supports: Vec<u32> = ideal.generators().iter().map(|g| g.support_mask()).collect();
    let mut supports_by_var: Vec<Vec<u32>> = vec![Vec::new(); 32];
    for &s in &supports {
        for v in crate::graph::bits(s as u64) {
            supports_by_var[v].push(s);
        }
    }

    // Iterate subsets in (size, value) order; a subset survives only if each
    // of its members lies in some support fully inside it (otherwise the
    // restriction is a cone and contributes nothing).
    let total: u64 = 1 << n;
    let chunk = 1u64 << n.min(12);
    let best = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|block| -> Result<Option<(usize, (u32, u32), i32)>> {
            let mut local: Option<(usize, (u32, u32), i32)> = None;
            for w in block * chunk..((block + 1) * chunk).min(total) {
                let w = w as u32;
                let covered = (0..n as u32).all(|v| {
                    w & (1 << v) == 0
                        || supports_by_var[v as usize].iter().any(|&s| s & !w == 0)
                });
                if !covered {
                    continue;
                }
                let faces = faces_of_restriction(&supports, &supports_by_var, w);
                let ranks = engine.ranks(&faces)?;
                if let Some(d) = ranks.top_nonzero() {
                    let value = (d + 2) as usize;
                    let key = (w.count_ones(), w);
                    let cand = (value, key, d);
                    local = Some(match local {
                        None => cand,
                        Some(cur) => {
                            // larger value wins; ties go to the earliest subset
                            if cand.0 > cur.0 || (cand.0 == cur.0 && cand.1 < cur.1) {
                                cand
                            } else {
                                cur
                            }
                        }
                    });
                }
            }
            Ok(local)
        })
        .try_reduce(
            || None,
            |a, b| {
                Ok(match (a, b) {
                    (None, x) | (x, None) => x,
                    (Some(x), Some(y)) => {
                        if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
                            Some(y)
                        } else {
                            Some(x)
                        }
                    }
                })
            },
        )?;

    let (value, (_, wmask), d) = best.expect("W = {} always contributes H~_{-1}");
    Ok(RegularityReport {
        reg: value,
        reg_mod: value - 1,
        witness: Some(Witness {
            subset: crate::graph::bits(wmask as u64),
            dim: d,
        }),
        field: engine.field.to_string(),
        degenerate: false,
    })
}

/// Regularity of an arbitrary monomial ideal: polarize, then use the
/// squarefree engine. Zero and unit ideals are flagged degenerate.
pub fn regularity(ideal: &MonomialIdeal, engine: &Engine) -> Result<RegularityReport> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(RegularityReport::degenerate(engine));
    }
    let (pol, _) = ideal.polarize();
    if pol.ctx().len() > SR_VARS_GUARD && !engine.override_guards {
        return Err(Error::Resource {
            what: "polarized variable count",
            value: pol.ctx().len(),
            limit: SR_VARS_GUARD,
        });
    }
    regularity_squarefree(&pol, engine)
}

/// reg(I(G)^q) computed exactly through polarization.
pub fn power_regularity(g: &Graph, q: usize, engine: &Engine) -> Result<RegularityReport> {
    if q == 0 {
        return Err(Error::domain("power exponent must be at least 1"));
    }
    regularity(&MonomialIdeal::edge_ideal(g).power(q), engine)
}

/// reg of the colon of I(G)^{s+1} by the product of the multiset, computed
/// on the colon graph's edge ideal (squarefree by construction).
pub fn colon_regularity(g: &Graph, e: &EdgeMultiset, engine: &Engine) -> Result<RegularityReport> {
    let cg = colon_graph(g, e)?;
    regularity_squarefree(&MonomialIdeal::edge_ideal(&cg.graph), engine)
}

/// Upper bound on reg(I(G)^q) by one step of the colon recursion: the max of
/// reg(I^{q-1}) and every colon regularity shifted by 2(q-1), over all
/// (q-1)-fold edge products up to multiset equality.
pub fn banerjee_bound(g: &Graph, q: usize, engine: &Engine) -> Result<usize> {
    if q < 2 {
        return Err(Error::domain("banerjee_bound needs q >= 2"));
    }
    let base = power_regularity(g, q - 1, engine)?.reg;
    let mut best = base;
    for e in edge_multisets(g, q - 1) {
        let creg = colon_regularity(g, &e, engine)?.reg;
        best = best.max(creg + 2 * (q - 1));
    }
    Ok(best)
}

/// Froeberg's criterion, used as a cross-oracle between the homology engine
/// and the chordality test: reg(I(G)) = 2 iff the complement is chordal,
/// for graphs with at least one edge.
pub fn froeberg_agrees(g: &Graph, engine: &Engine) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::domain("needs at least one edge"));
    }
    let reg = regularity_squarefree(&MonomialIdeal::edge_ideal(g), engine)?.reg;
    Ok((reg == 2) == g.complement().is_chordal())
}

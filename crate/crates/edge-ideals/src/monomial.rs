//! Monomials, monomial ideals with minimal-generator antichains, powers,
//! colon ideals and polarization.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One variable of a polynomial ring. Polarization shadows remember which
/// base variable they came from and at which level; level 1 is the base
/// variable itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Var {
    pub name: String,
    pub base: usize,
    pub level: u32,
}

/// An ordered list of variables. Names are unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableContext {
    vars: Vec<Var>,
}

impl VariableContext {
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(Error::domain(format!("duplicate variable name {n}")));
            }
        }
        Ok(VariableContext {
            vars: names
                .into_iter()
                .enumerate()
                .map(|(i, name)| Var { name, base: i, level: 1 })
                .collect(),
        })
    }

    pub fn for_graph(g: &Graph) -> Self {
        VariableContext::new(g.names()).expect("graph names are unique")
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn var(&self, i: usize) -> &Var {
        &self.vars[i]
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    fn shadow_name(base: &str, level: u32) -> String {
        if level == 1 {
            base.to_string()
        } else {
            format!("{base}^({level})")
        }
    }
}

/// An exponent vector over a fixed context.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// self / gcd(self, other): the generator of the principal colon.
    pub fn colon_by(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_mask(&self) -> u32 {
        let mut m = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    pub fn format(&self, ctx: &VariableContext) -> String {
        if self.degree() == 0 {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ctx.name(i).to_string()),
                _ => parts.push(format!("{}^{}", ctx.name(i), e)),
            }
        }
        parts.join("*")
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    vars: Vec<String>,
    gens: Vec<Vec<u32>>,
}

/// A monomial ideal given by its minimal generators. The generator list is
/// always an antichain under divisibility, sorted by (degree, exponents).
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ctx: Arc<VariableContext>,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.gens == other.gens
    }
}
impl Eq for MonomialIdeal {}

impl MonomialIdeal {
    pub fn new(ctx: Arc<VariableContext>, gens: Vec<Monomial>) -> Self {
        let mut ideal = MonomialIdeal { ctx, gens: Vec::new() };
        for g in gens {
            ideal.insert_reduce(g);
        }
        ideal.sort();
        ideal
    }

    pub fn zero(ctx: Arc<VariableContext>) -> Self {
        MonomialIdeal { ctx, gens: Vec::new() }
    }

    pub fn unit(ctx: Arc<VariableContext>) -> Self {
        let n = ctx.len();
        MonomialIdeal {
            ctx,
            gens: vec![Monomial::one(n)],
        }
    }

    fn insert_reduce(&mut self, m: Monomial) {
        if self.gens.iter().any(|g| g.divides(&m)) {
            return;
        }
        self.gens.retain(|g| !m.divides(g));
        self.gens.push(m);
    }

    fn sort(&mut self) {
        self.gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.exps.cmp(&b.exps)));
    }

    pub fn ctx(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// The edge ideal I(G): one squarefree quadric per edge.
    pub fn edge_ideal(g: &Graph) -> Self {
        let ctx = Arc::new(VariableContext::for_graph(g));
        let n = ctx.len();
        let gens = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let mut m = Monomial::one(n);
                m.exps[u] = 1;
                m.exps[v] = 1;
                m
            })
            .collect();
        MonomialIdeal::new(ctx, gens)
    }

    /// Minimal generators of I^q. `q = 0` yields the unit ideal.
    pub fn power(&self, q: usize) -> Self {
        if q == 0 {
            return MonomialIdeal::unit(self.ctx.clone());
        }
        if self.gens.is_empty() {
            return MonomialIdeal::zero(self.ctx.clone());
        }
        let mut out = MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: Vec::new(),
        };
        // Multisets of generator indices; reduce as we go to bound blowup.
        let nv = self.ctx.len();
        let mut stack: Vec<(usize, usize, Monomial)> = vec![(0, q, Monomial::one(nv))];
        while let Some((start, left, acc)) = stack.pop() {
            if left == 0 {
                out.insert_reduce(acc);
                continue;
            }
            for i in start..self.gens.len() {
                stack.push((i, left - 1, acc.mul(&self.gens[i])));
            }
        }
        out.sort();
        out
    }

    /// Minimal generators of (I : m).
    pub fn colon(&self, m: &Monomial) -> Self {
        MonomialIdeal::new(
            self.ctx.clone(),
            self.gens.iter().map(|g| g.colon_by(m)).collect(),
        )
    }

    /// Standard polarization. Returns the squarefree ideal and, for each new
    /// variable, the index of its base variable in the old context. Shadow
    /// variables are ordered base-major, level-minor.
    pub fn polarize(&self) -> (MonomialIdeal, Vec<usize>) {
        let n = self.ctx.len();
        let mut max_exp = vec![1u32; n];
        for g in &self.gens {
            for (i, &e) in g.exps.iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut vars = Vec::new();
        let mut to_base = Vec::new();
        let mut slot = vec![0usize; n]; // index of level-1 copy of each base var
        for (i, &me) in max_exp.iter().enumerate() {
            slot[i] = vars.len();
            for level in 1..=me {
                vars.push(Var {
                    name: VariableContext::shadow_name(self.ctx.name(i), level),
                    base: i,
                    level,
                });
                to_base.push(i);
            }
        }
        let new_ctx = Arc::new(VariableContext { vars });
        let nv = new_ctx.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Monomial::one(nv);
                for (i, &e) in g.exps.iter().enumerate() {
                    for level in 0..e {
                        m.exps[slot[i] + level as usize] = 1;
                    }
                }
                m
            })
            .collect();
        (MonomialIdeal::new(new_ctx, gens), to_base)
    }

    /// Undoes a polarization by sending every shadow back to its base
    /// variable. Only meaningful on a context produced by `polarize`.
    pub fn depolarize(&self, base_ctx: Arc<VariableContext>) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = Monomial::one(base_ctx.len());
                for (i, &e) in g.exps.iter().enumerate() {
                    m.exps[self.ctx.var(i).base] += e;
                }
                m
            })
            .collect();
        MonomialIdeal::new(base_ctx, gens)
    }

    /// The graph whose edges are the (squarefree, degree-2) generators.
    /// Vertices are the support variables in context order, keeping names.
    pub fn graph_of_quadratic_ideal(&self) -> Result<Graph> {
        for g in &self.gens {
            if !g.is_squarefree() || g.degree() != 2 {
                return Err(Error::domain(format!(
                    "generator {} is not a squarefree quadric",
                    g.format(&self.ctx)
                )));
            }
        }
        let mut support: Vec<usize> = Vec::new();
        for g in &self.gens {
            for v in g.support() {
                if !support.contains(&v) {
                    support.push(v);
                }
            }
        }
        support.sort_unstable();
        let pos: std::collections::HashMap<usize, usize> =
            support.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .gens
            .iter()
            .map(|g| {
                let s = g.support();
                (pos[&s[0]], pos[&s[1]])
            })
            .collect();
        Graph::from_edges(support.len(), &edges)?
            .with_names(support.iter().map(|&v| self.ctx.name(v).to_string()).collect())
    }

    /// Generators as sets of (variable name, exponent) pairs; lets ideals
    /// over different contexts be compared by content.
    pub fn generators_by_name(&self) -> std::collections::BTreeSet<Vec<(String, u32)>> {
        self.gens
            .iter()
            .map(|g| {
                g.exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (self.ctx.name(i).to_string(), e))
                    .collect()
            })
            .collect()
    }

    pub fn eq_by_names(&self, other: &MonomialIdeal) -> bool {
        self.generators_by_name() == other.generators_by_name()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&IdealJson {
            vars: self.ctx.names(),
            gens: self.gens.iter().map(|g| g.exps.clone()).collect(),
        })
        .unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let ij: IdealJson = serde_json::from_str(s)?;
        let ctx = Arc::new(VariableContext::new(ij.vars)?);
        let n = ctx.len();
        for g in &ij.gens {
            if g.len() != n {
                return Err(Error::domain("generator length != variable count"));
            }
        }
        Ok(MonomialIdeal::new(
            ctx,
            ij.gens.into_iter().map(Monomial::from_exps).collect(),
        ))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.format(&self.ctx)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ctx(names: &[&str]) -> Arc<VariableContext> {
        Arc::new(VariableContext::new(names.iter().map(|s| s.to_string()).collect()).unwrap())
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn edge_ideal_examples() {
        let k2 = MonomialIdeal::edge_ideal(&Graph::complete(2).unwrap());
        assert_eq!(k2.num_generators(), 1);
        assert_eq!(k2.to_string(), "(x0*x1)");

        let c5 = MonomialIdeal::edge_ideal(&Graph::cycle(5).unwrap());
        assert_eq!(c5.num_generators(), 5);
        assert!(c5.generators().iter().all(|g| g.degree() == 2));

        let empty = MonomialIdeal::edge_ideal(&Graph::new(3).unwrap());
        assert!(empty.is_zero());
    }

    #[test]
    fn power_of_principal_quadric() {
        let i = MonomialIdeal::new(ctx(&["x", "y"]), vec![mono(&[1, 1])]);
        let sq = i.power(2);
        assert_eq!(sq.generators(), &[mono(&[2, 2])]);
        assert!(i.power(0).is_unit());
    }

    #[test]
    fn power_of_path_ideal() {
        // I(P3) = (xy, yz); the square has exactly three minimal generators.
        let i = MonomialIdeal::new(ctx(&["x", "y", "z"]), vec![mono(&[1, 1, 0]), mono(&[0, 1, 1])]);
        let sq = i.power(2);
        assert_eq!(
            sq.generators(),
            &[mono(&[0, 2, 2]), mono(&[1, 2, 1]), mono(&[2, 2, 0])]
        );
    }

    /// Naive oracle: expand all products, then do a full pairwise reduction.
    fn power_naive(i: &MonomialIdeal, q: usize) -> Vec<Monomial> {
        let mut products: Vec<Monomial> = vec![Monomial::one(i.ctx().len())];
        for _ in 0..q {
            let mut next = Vec::new();
            for p in &products {
                for g in i.generators() {
                    next.push(p.mul(g));
                }
            }
            next.sort();
            next.dedup();
            products = next;
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        for p in &products {
            if !products.iter().any(|q2| q2 != p && q2.divides(p)) {
                minimal.push(p.clone());
            }
        }
        minimal.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.exps().cmp(b.exps())));
        minimal
    }

    #[test]
    fn power_matches_naive_expansion() {
        let c5 = MonomialIdeal::edge_ideal(&Graph::cycle(5).unwrap());
        assert_eq!(c5.power(2).num_generators(), 15);
        for q in 1..=3 {
            assert_eq!(c5.power(q).generators(), power_naive(&c5, q).as_slice());
        }
        let k4 = MonomialIdeal::edge_ideal(&Graph::complete(4).unwrap());
        for q in 1..=2 {
            assert_eq!(k4.power(q).generators(), power_naive(&k4, q).as_slice());
        }
    }

    #[test]
    fn colon_examples() {
        let i = MonomialIdeal::new(ctx(&["x", "y", "z"]), vec![mono(&[1, 1, 0]), mono(&[0, 1, 1])]);
        let c = i.power(2).colon(&mono(&[1, 1, 0]));
        assert_eq!(c.generators(), &[mono(&[0, 1, 1]), mono(&[1, 1, 0])]);

        // (I : 1) = I
        let id = i.colon(&Monomial::one(3));
        assert_eq!(id, i);

        // (I(K3)^2 : xy) contains z^2
        let k3 = MonomialIdeal::edge_ideal(&Graph::complete(3).unwrap());
        let c2 = k3.power(2).colon(&mono(&[1, 1, 0]));
        assert!(c2.generators().contains(&mono(&[0, 0, 2])));
        assert!(c2.contains(&mono(&[0, 0, 2])));
    }

    #[test]
    fn antichain_after_operations() {
        let k3 = MonomialIdeal::edge_ideal(&Graph::complete(3).unwrap());
        for q in 1..=3 {
            let p = k3.power(q);
            for (a, g) in p.generators().iter().enumerate() {
                for (b, h) in p.generators().iter().enumerate() {
                    if a != b {
                        assert!(!g.divides(h), "antichain violated in power {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn power_associativity_small() {
        for g in crate::graph::enumerate_graphs(4, true).unwrap() {
            let i = MonomialIdeal::edge_ideal(&g);
            assert_eq!(i.power(2).power(2), i.power(4));
        }
    }

    #[test]
    fn polarize_examples() {
        let i = MonomialIdeal::new(ctx(&["x", "y"]), vec![mono(&[2, 2])]);
        let (p, to_base) = i.polarize();
        assert_eq!(p.ctx().names(), vec!["x", "x^(2)", "y", "y^(2)"]);
        assert_eq!(to_base, vec![0, 0, 1, 1]);
        assert_eq!(p.generators(), &[mono(&[1, 1, 1, 1])]);

        // squarefree ideals polarize to themselves
        let sf = MonomialIdeal::edge_ideal(&Graph::cycle(4).unwrap());
        let (psf, map) = sf.polarize();
        assert!(psf.eq_by_names(&sf));
        assert_eq!(map, vec![0, 1, 2, 3]);

        // I(P3)^2 polarizes to 3 generators over 6 variables
        let p3 = MonomialIdeal::new(ctx(&["x", "y", "z"]), vec![mono(&[1, 1, 0]), mono(&[0, 1, 1])]);
        let (pp, _) = p3.power(2).polarize();
        assert_eq!(pp.num_generators(), 3);
        assert_eq!(pp.ctx().len(), 6);
    }

    #[test]
    fn depolarize_roundtrip() {
        for g in crate::graph::enumerate_graphs(4, true).unwrap() {
            let i = MonomialIdeal::edge_ideal(&g).power(2);
            let (p, _) = i.polarize();
            assert_eq!(p.depolarize(i.ctx().clone()), i);
        }
    }

    #[test]
    fn graph_of_quadratic() {
        let i = MonomialIdeal::new(ctx(&["x", "y", "z"]), vec![mono(&[1, 1, 0]), mono(&[0, 1, 1])]);
        let g = i.graph_of_quadratic_ideal().unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);

        // edge_ideal then graph_of_quadratic_ideal is the identity when
        // there are no isolated vertices
        let c5 = Graph::cycle(5).unwrap();
        let back = MonomialIdeal::edge_ideal(&c5).graph_of_quadratic_ideal().unwrap();
        assert_eq!(back.edges(), c5.edges());

        let bad = MonomialIdeal::new(ctx(&["x", "y"]), vec![mono(&[2, 1])]);
        assert!(bad.graph_of_quadratic_ideal().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let i = MonomialIdeal::edge_ideal(&Graph::cycle(5).unwrap()).power(2);
        let s = i.to_json();
        let back = MonomialIdeal::from_json(&s).unwrap();
        assert_eq!(back, i);
    }
}

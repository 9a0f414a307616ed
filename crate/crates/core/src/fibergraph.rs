//! Fiber graphs `G_b(J)`: vertices are the monomials of `M_J` in degree `b`,
//! edges join monomials with a common factor whose removal leaves a binomial
//! of `J`. Their components decide minimal generators and indispensability.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{Binomial, ExponentVector, VarNames};
use crate::grobner::{membership, BinomialIdeal, GroebnerBasis};
use crate::intlat::{finest_grading, Grading};
use crate::semigroup::fiber_with;

pub type Degree = Vec<i64>;

/// How condition (b) of the edge definition is witnessed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EdgeRule {
    /// Only single variables `x_k` dividing the gcd are tried.
    #[default]
    SingleVariable,
    /// Every monomial `w != 1` dividing the gcd is tried.
    AllDivisors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberGraph {
    degree: Degree,
    vertices: Vec<ExponentVector>,
    // vertices with equal class id differ by a binomial of J
    classes: Vec<usize>,
    edges: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

impl FiberGraph {
    pub fn degree(&self) -> &[i64] {
        &self.degree
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Components as sorted vertex index lists, ordered by least vertex.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Number of classes of vertices modulo `J`.
    pub fn class_count(&self) -> usize {
        self.classes.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn vertex_index(&self, u: &ExponentVector) -> Option<usize> {
        self.vertices.iter().position(|v| v == u)
    }

    pub fn component_of(&self, u: &ExponentVector) -> Option<usize> {
        let i = self.vertex_index(u)?;
        self.components.iter().position(|c| c.contains(&i))
    }

    /// Components as monomial sets.
    pub fn component_monomials(&self) -> Vec<Vec<ExponentVector>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|&i| self.vertices[i].clone()).collect())
            .collect()
    }

    pub fn is_two_singletons(&self) -> bool {
        self.components.len() == 2 && self.components.iter().all(|c| c.len() == 1)
    }

    /// Binomials needed in this degree by any minimal generating set: the
    /// components of each class joined in a star around the least one.
    pub fn spanning_binomials(&self) -> Vec<Binomial> {
        let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, comp) in self.components.iter().enumerate() {
            by_class.entry(self.classes[comp[0]]).or_default().push(k);
        }
        let mut out = Vec::new();
        for comps in by_class.values() {
            let root = &self.vertices[self.components[comps[0]][0]];
            for &k in &comps[1..] {
                let v = &self.vertices[self.components[k][0]];
                out.push(Binomial::new_unchecked(root.clone(), v.clone()).normalized());
            }
        }
        out
    }

    pub fn generator_count(&self) -> usize {
        self.component_count() - self.class_count()
    }

    /// Every class split into several components is split into exactly two
    /// singletons, so the binomials of this degree in a minimal system are
    /// forced.
    pub fn forced_generators(&self) -> bool {
        let mut by_class: BTreeMap<usize, Vec<&Vec<usize>>> = BTreeMap::new();
        for comp in &self.components {
            by_class
                .entry(self.classes[comp[0]])
                .or_default()
                .push(comp);
        }
        by_class
            .values()
            .all(|cs| cs.len() == 1 || (cs.len() == 2 && cs.iter().all(|c| c.len() == 1)))
    }
}

impl fmt::Display for FiberGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = VarNames::plain(self.vertices.first().map_or(0, ExponentVector::len));
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let ms: Vec<String> = c
                    .iter()
                    .map(|&i| names.monomial(&self.vertices[i]))
                    .collect();
                format!("{{{}}}", ms.join(", "))
            })
            .collect();
        write!(f, "{}", comps.join(" "))
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }
}

pub(crate) fn components_of(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = uf.find(i);
        groups.entry(r).or_default().push(i);
    }
    let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
    comps.sort_by_key(|c| c[0]);
    comps
}

/// A positive grading for `j`: the attached one, or the finest grading.
pub fn grading_of(j: &BinomialIdeal) -> Result<Grading> {
    if let Some(g) = j.grading() {
        if g.is_positive() {
            return Ok(g.clone());
        }
        return Err(Error::NonPositiveGrading);
    }
    if j.generators().is_empty() {
        return Err(Error::Empty);
    }
    let g = finest_grading(j.generators(), j.n())?;
    if !g.is_positive() {
        return Err(Error::NonPositiveGrading);
    }
    Ok(g)
}

/// All monomials of multidegree `b`, in ascending lexicographic order.
pub fn graded_fiber(g: &Grading, b: &[i64]) -> Result<Vec<ExponentVector>> {
    if b.len() != g.d() {
        return Err(Error::LengthMismatch {
            expected: g.d(),
            found: b.len(),
        });
    }
    let w = g.weights().ok_or(Error::NonPositiveGrading)?;
    let Some(target) = g.weight_of_degree(b) else {
        return Ok(Vec::new());
    };
    Ok(fiber_with(w, target, |u| g.degree(u) == b))
}

/// Decides `x^u - x^v in J` for monomials of a common degree.
struct Oracle {
    toric: bool,
    gb: Option<std::sync::Arc<GroebnerBasis>>,
}

impl Oracle {
    fn new(j: &BinomialIdeal) -> Result<Oracle> {
        let gb = if j.is_toric() && j.grading().is_some() {
            None
        } else {
            Some(j.default_basis()?)
        };
        Ok(Oracle {
            toric: gb.is_none(),
            gb,
        })
    }

    fn key(&self, u: &[u32]) -> Vec<u32> {
        match &self.gb {
            Some(gb) => gb.normal_form(&u.to_vec().into()).into_vec(),
            None => Vec::new(),
        }
    }

    fn same(&self, u: &[u32], v: &[u32]) -> bool {
        self.toric || self.key(u) == self.key(v)
    }
}

fn witness(oracle: &Oracle, u: &[u32], v: &[u32], rule: EdgeRule) -> bool {
    let g: Vec<u32> = u.iter().zip(v).map(|(a, b)| *a.min(b)).collect();
    if g.iter().all(|&e| e == 0) {
        return false;
    }
    let shift = |w: &[u32]| -> (Vec<u32>, Vec<u32>) {
        (
            u.iter().zip(w).map(|(a, b)| a - b).collect(),
            v.iter().zip(w).map(|(a, b)| a - b).collect(),
        )
    };
    match rule {
        EdgeRule::SingleVariable => (0..g.len()).filter(|&k| g[k] > 0).any(|k| {
            let mut w = vec![0; g.len()];
            w[k] = 1;
            let (a, b) = shift(&w);
            oracle.same(&a, &b)
        }),
        EdgeRule::AllDivisors => {
            let mut w = vec![0u32; g.len()];
            loop {
                // odometer over 0 <= w <= g
                let mut k = 0;
                while k < g.len() {
                    if w[k] < g[k] {
                        w[k] += 1;
                        break;
                    }
                    w[k] = 0;
                    k += 1;
                }
                if k == g.len() {
                    return false;
                }
                let (a, b) = shift(&w);
                if oracle.same(&a, &b) {
                    return true;
                }
            }
        }
    }
}

fn build(g: &Grading, oracle: &Oracle, b: &[i64], rule: EdgeRule) -> Result<FiberGraph> {
    let fib = graded_fiber(g, b)?;
    let (vertices, classes) = if oracle.toric {
        if fib.len() >= 2 {
            let k = fib.len();
            (fib, vec![0; k])
        } else {
            (Vec::new(), Vec::new())
        }
    } else {
        let keys: Vec<Vec<u32>> = fib.iter().map(|u| oracle.key(u.as_slice())).collect();
        let mut count: HashMap<&[u32], usize> = HashMap::new();
        for k in &keys {
            *count.entry(k).or_default() += 1;
        }
        let mut ids: HashMap<&[u32], usize> = HashMap::new();
        let mut vs = Vec::new();
        let mut cs = Vec::new();
        for (u, k) in fib.iter().zip(&keys) {
            if count[k.as_slice()] >= 2 {
                let next = ids.len();
                cs.push(*ids.entry(k).or_insert(next));
                vs.push(u.clone());
            }
        }
        (vs, cs)
    };
    let mut edges = Vec::new();
    for p in 0..vertices.len() {
        for q in p + 1..vertices.len() {
            if witness(oracle, vertices[p].as_slice(), vertices[q].as_slice(), rule) {
                edges.push((p, q));
            }
        }
    }
    let components = components_of(vertices.len(), &edges);
    Ok(FiberGraph {
        degree: b.to_vec(),
        vertices,
        classes,
        edges,
        components,
    })
}

/// Monomials of `M_J` of degree `b`.
pub fn m_j_vertices(j: &BinomialIdeal, b: &[i64]) -> Result<Vec<ExponentVector>> {
    Ok(fiber_graph(j, b)?.vertices)
}

pub fn fiber_graph(j: &BinomialIdeal, b: &[i64]) -> Result<FiberGraph> {
    fiber_graph_with(j, b, EdgeRule::SingleVariable)
}

pub fn fiber_graph_with(j: &BinomialIdeal, b: &[i64], rule: EdgeRule) -> Result<FiberGraph> {
    let g = grading_of(j)?;
    let oracle = Oracle::new(j)?;
    build(&g, &oracle, b, rule)
}

fn require_member(j: &BinomialIdeal, f: &Binomial) -> Result<()> {
    if membership(j, f)? {
        Ok(())
    } else {
        Err(Error::NotInIdeal(VarNames::plain(f.n()).binomial(f)))
    }
}

/// Whether `f` belongs to some minimal generating set: its monomials lie in
/// different components of the fiber graph of its degree.
pub fn is_minimal_generator(j: &BinomialIdeal, f: &Binomial) -> Result<bool> {
    require_member(j, f)?;
    let g = grading_of(j)?;
    let graph = fiber_graph(j, &g.degree(f.lhs().as_slice()))?;
    Ok(graph.component_of(f.lhs()) != graph.component_of(f.rhs()))
}

pub fn indispensable_monomial(j: &BinomialIdeal, u: &ExponentVector) -> Result<bool> {
    let g = grading_of(j)?;
    let graph = fiber_graph(j, &g.degree(u.as_slice()))?;
    let k = graph
        .component_of(u)
        .ok_or_else(|| Error::NotInMonomialIdeal(VarNames::plain(u.len()).monomial(u)))?;
    Ok(graph.components[k].len() == 1)
}

/// Exact for toric ideals; for other ideals only the two-singleton
/// sufficient condition and the same-component obstruction are decisive.
pub fn indispensable_binomial(j: &BinomialIdeal, f: &Binomial) -> Result<Verdict> {
    require_member(j, f)?;
    let g = grading_of(j)?;
    let graph = fiber_graph(j, &g.degree(f.lhs().as_slice()))?;
    if graph.is_two_singletons() {
        return Ok(Verdict::Yes);
    }
    if j.is_toric() || graph.component_of(f.lhs()) == graph.component_of(f.rhs()) {
        return Ok(Verdict::No);
    }
    Ok(Verdict::Unknown)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiEntry {
    pub degree: Degree,
    pub components: usize,
    pub generators: Vec<Binomial>,
}

/// Fiber graphs of the candidate degrees with the generators they force.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<Degree, BettiEntry>,
    graphs: BTreeMap<Degree, FiberGraph>,
}

impl BettiTable {
    pub fn entries(&self) -> impl Iterator<Item = &BettiEntry> {
        self.entries.values()
    }

    pub fn graph(&self, b: &[i64]) -> Option<&FiberGraph> {
        self.graphs.get(b)
    }

    pub fn graphs(&self) -> impl Iterator<Item = &FiberGraph> {
        self.graphs.values()
    }

    /// Degrees carrying at least one minimal generator, with counts.
    pub fn betti_degrees(&self) -> Vec<(Degree, usize)> {
        self.entries
            .values()
            .filter(|e| !e.generators.is_empty())
            .map(|e| (e.degree.clone(), e.generators.len()))
            .collect()
    }

    pub fn generators(&self) -> Vec<Binomial> {
        self.entries
            .values()
            .flat_map(|e| e.generators.iter().cloned())
            .collect()
    }

    pub fn mu(&self) -> usize {
        self.entries.values().map(|e| e.generators.len()).sum()
    }
}

/// A minimal generating set, degree by degree. Candidate degrees are the
/// degrees of the given generators.
pub fn minimal_generating_set(j: &BinomialIdeal) -> Result<BettiTable> {
    let g = grading_of(j)?;
    let oracle = Oracle::new(j)?;
    let degrees: BTreeSet<Degree> = j
        .generators()
        .iter()
        .map(|f| g.degree(f.lhs().as_slice()))
        .collect();
    let built: Vec<FiberGraph> = degrees
        .into_par_iter()
        .map(|b| build(&g, &oracle, &b, EdgeRule::SingleVariable))
        .collect::<Result<_>>()?;
    let mut table = BettiTable::default();
    for graph in built {
        let entry = BettiEntry {
            degree: graph.degree.clone(),
            components: graph.component_count(),
            generators: graph.spanning_binomials(),
        };
        table.entries.insert(graph.degree.clone(), entry);
        table.graphs.insert(graph.degree.clone(), graph);
    }
    Ok(table)
}

/// Exact uniqueness of the minimal system of a toric ideal: every Betti
/// degree has a fiber graph made of two singletons.
pub fn unique_minimal_system(j: &BinomialIdeal) -> Result<bool> {
    Ok(uniqueness(j)? == Verdict::Yes)
}

/// Decides uniqueness of the minimal binomial system of any positively
/// graded pure-difference ideal from the classes modulo `J`.
pub fn unique_by_classes(j: &BinomialIdeal) -> Result<bool> {
    Ok(minimal_generating_set(j)?
        .graphs()
        .all(FiberGraph::forced_generators))
}

/// Uniqueness verdict; for non-toric ideals a negative answer is reported
/// as unknown.
pub fn uniqueness(j: &BinomialIdeal) -> Result<Verdict> {
    let table = minimal_generating_set(j)?;
    let ok = table
        .graphs()
        .filter(|gr| gr.generator_count() > 0)
        .all(FiberGraph::is_two_singletons);
    Ok(match (ok, j.is_toric()) {
        (true, _) => Verdict::Yes,
        (false, true) => Verdict::No,
        (false, false) => Verdict::Unknown,
    })
}

//! Binomial edge ideals `J_G = <x_i y_j - x_j y_i : ij in E(G)>`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exponents::{Binomial, ExponentVector};
use crate::fibergraph::{components_of, fiber_graph, graded_fiber};
use crate::grobner::{lawrence_grading, BinomialIdeal};

/// Simple undirected graph on vertices `0..n`, edges stored with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<SimpleGraph> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {} {} out of range",
                    i + 1,
                    j + 1
                )));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", i + 1)));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} {}",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        SimpleGraph::new(n, edges).expect("simple")
    }

    pub fn path(n: usize) -> SimpleGraph {
        SimpleGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        let e: Vec<(usize, usize)> = self.edges().collect();
        self.n > 0 && components_of(self.n, &e).len() == 1
    }

    /// Relabeling-invariant form: least sorted edge list over all vertex
    /// permutations.
    pub fn canonical_form(&self) -> Vec<(usize, usize)> {
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            let mut e: Vec<(usize, usize)> = self
                .edges()
                .map(|(i, j)| {
                    let (p, q) = (perm[i], perm[j]);
                    (p.min(q), p.max(q))
                })
                .collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap_or_default()
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {}", self.n)?;
        for (i, j) in self.edges() {
            writeln!(f, "{} {}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Parses `graph n` followed by one 1-based `i j` edge per line.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| Error::InvalidGraph(msg.to_string()).at_line(k + 1);
        match (n, words.as_slice()) {
            (None, ["graph", m]) => {
                n = Some(m.parse().map_err(|_| bad("expected a vertex count"))?);
            }
            (None, _) => return Err(bad("expected header `graph n`")),
            (Some(m), [i, j]) => {
                let parse = |w: &str| -> Result<usize> {
                    match w.parse::<usize>() {
                        Ok(v) if (1..=m).contains(&v) => Ok(v - 1),
                        _ => Err(bad(&format!("bad vertex `{w}`"))),
                    }
                };
                edges.push((parse(i)?, parse(j)?, k + 1));
            }
            (Some(_), _) => return Err(bad("expected an edge `i j`")),
        }
    }
    let n = n.ok_or(Error::Empty)?;
    let mut seen = BTreeSet::new();
    for &(i, j, line) in &edges {
        if i == j || !seen.insert((i.min(j), i.max(j))) {
            return Err(Error::InvalidGraph(format!("bad edge {} {}", i + 1, j + 1)).at_line(line));
        }
    }
    SimpleGraph::new(n, edges.into_iter().map(|(i, j, _)| (i, j)))
}

pub fn edge_binomial(n: usize, i: usize, j: usize) -> Binomial {
    let mut u = vec![0u32; 2 * n];
    let mut v = vec![0u32; 2 * n];
    u[i] = 1;
    u[n + j] = 1;
    v[j] = 1;
    v[n + i] = 1;
    Binomial::new(ExponentVector::new(u), ExponentVector::new(v)).expect("distinct")
}

/// `J_G` in `x_1..x_n, y_1..y_n`, graded by the Lawrence lifting of
/// `(1, ..., 1)`.
pub fn edge_ideal(g: &SimpleGraph) -> Result<BinomialIdeal> {
    let n = g.n();
    let gens = g.edges().map(|(i, j)| edge_binomial(n, i, j)).collect();
    BinomialIdeal::new(2 * n, gens)?.with_grading(lawrence_grading(&vec![1; n])?)
}

/// Every edge binomial sits in a degree whose fiber is `{x_i y_j, x_j y_i}`
/// and whose fiber graph is two singletons.
pub fn verify_unique_generation(g: &SimpleGraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let j = edge_ideal(g)?;
    let grading = j.grading().expect("graded").clone();
    for f in j.generators() {
        let b = grading.degree(f.lhs().as_slice());
        let fib = graded_fiber(&grading, &b)?;
        if fib.len() != 2 || !fiber_graph(&j, &b)?.is_two_singletons() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Connected simple graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let forms: BTreeSet<Vec<(usize, usize)>> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let e = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p);
            let g = SimpleGraph::new(n, e).expect("simple");
            g.is_connected().then(|| g.canonical_form())
        })
        .collect();
    forms
        .into_iter()
        .map(|e| SimpleGraph::new(n, e).expect("simple"))
        .collect()
}

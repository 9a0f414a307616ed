//! Minimal systems `S ∪ I ∪ R` of monomial curves in 4-space and the
//! uniqueness classification built on them.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::critical::{
    classify_critical_case, critical_unique_for, need4, CaseLabel, CriticalCase,
};
use crate::error::{Error, Result};
use crate::exponents::{canonical_binomial_cmp, Binomial, ExponentVector, VarNames};
use crate::fibergraph::{minimal_generating_set, FiberGraph};
use crate::graver::semi_primitive_orientation;
use crate::grobner::{curve_ideal, BinomialIdeal};
use crate::semigroup::{fiber_with, NumericalSemigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub case: CriticalCase,
    pub s: Vec<Binomial>,
    pub i: Vec<Binomial>,
    pub r: Vec<Binomial>,
    pub mu_ia: usize,
    pub betti: Vec<(u64, usize)>,
    /// Exact uniqueness of the minimal system of `I_A` from its fiber graphs.
    pub exact_unique: bool,
}

struct Ctx<'a> {
    a: &'a [u64],
    c: &'a [u32],
    perm: &'a [usize],
    label: CaseLabel,
    ia: &'a BinomialIdeal,
}

impl Ctx<'_> {
    /// Orientation with `x_1, x_2` (in case labels) on the left, if the
    /// binomial has that shape.
    fn pair_oriented(&self, f: &Binomial) -> Option<Binomial> {
        let left = [self.perm[0], self.perm[1]];
        for g in [f.clone(), f.negated()] {
            let l = g.lhs().support();
            if g.has_full_support() && l.len() == 2 && l.iter().all(|k| left.contains(k)) {
                return Some(g);
            }
        }
        None
    }

    fn r_shape(&self, f: &Binomial) -> Result<bool> {
        let Some(g) = self.pair_oriented(f) else {
            return Ok(false);
        };
        let p = self.perm;
        let (u, v) = (g.lhs(), g.rhs());
        match self.label {
            CaseLabel::TwoB | CaseLabel::FourB => {
                Ok(u[p[0]] <= self.c[p[0]]
                    && crate::fibergraph::indispensable_monomial(self.ia, v)?)
            }
            CaseLabel::TwoC => {
                let bounded = u[p[0]] <= self.c[p[0]] || v[p[2]] <= self.c[p[2]];
                Ok(bounded
                    && !self.shift_has_proper_divisor(u, p[0], p[1])
                    && !self.shift_has_proper_divisor(v, p[2], p[3]))
            }
            _ => Ok(false),
        }
    }

    /// Whether some `x_i^{u_i + α c_i} x_j^{u_j - α c_j}` is properly divided
    /// by the full-support side `x_i^v_i x_j^v_j` of a binomial in `I_A`.
    fn shift_has_proper_divisor(&self, u: &ExponentVector, i: usize, j: usize) -> bool {
        let (a, c) = (self.a, self.c);
        let others: Vec<usize> = (0..4).filter(|&k| k != i && k != j).collect();
        let mut alpha = 0u32;
        while alpha * c[j] <= u[j] {
            let mi = u[i] + alpha * c[i];
            let mj = u[j] - alpha * c[j];
            for vi in 1..=mi {
                for vj in 1..=mj {
                    if (vi, vj) == (mi, mj) {
                        continue;
                    }
                    let d = vi as u64 * a[i] + vj as u64 * a[j];
                    let hit = !fiber_with(a, d, |w| {
                        w[i] == 0 && w[j] == 0 && w[others[0]] > 0 && w[others[1]] > 0
                    })
                    .is_empty();
                    if hit {
                        return true;
                    }
                }
            }
            alpha += 1;
        }
        false
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Rank {
    Indispensable,
    Remaining,
    FullSupport,
    Other,
}

fn ranked_cmp(x: &(Rank, Binomial), y: &(Rank, Binomial)) -> Ordering {
    x.0.cmp(&y.0)
        .then_with(|| canonical_binomial_cmp(&x.1.normalized(), &y.1.normalized()))
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Spanning choice in one Betti degree: the members of `S` first, then
/// cross-component pairs ranked by shape.
fn span_degree(
    ctx: &Ctx<'_>,
    graph: &FiberGraph,
    s: &[Binomial],
    out_i: &mut Vec<Binomial>,
    out_r: &mut Vec<Binomial>,
) -> Result<()> {
    let comps = graph.components();
    let mut parent: Vec<usize> = (0..comps.len()).collect();
    let comp_of = |u: &ExponentVector| graph.component_of(u);
    for f in s {
        let (Some(p), Some(q)) = (comp_of(f.lhs()), comp_of(f.rhs())) else {
            continue;
        };
        let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
        if rp == rq {
            return Err(Error::Inconsistent(format!(
                "{} is redundant in S",
                VarNames::plain(4).binomial(f)
            )));
        }
        parent[rp] = rq;
    }
    let verts = graph.vertices();
    let mut cands = Vec::new();
    for (ci, cp) in comps.iter().enumerate() {
        for cq in &comps[ci + 1..] {
            for &p in cp {
                for &q in cq {
                    let f = Binomial::new(verts[p].clone(), verts[q].clone())?;
                    let (rank, g) = if let Some(g) = semi_primitive_orientation(ctx.ia, ctx.c, &f)?
                    {
                        (Rank::Indispensable, g)
                    } else if ctx.r_shape(&f)? {
                        (Rank::Remaining, ctx.pair_oriented(&f).unwrap())
                    } else if f.has_full_support() {
                        (
                            Rank::FullSupport,
                            ctx.pair_oriented(&f).unwrap_or_else(|| f.normalized()),
                        )
                    } else {
                        (Rank::Other, f.normalized())
                    };
                    cands.push((rank, g));
                }
            }
        }
    }
    cands.sort_by(ranked_cmp);
    for (rank, g) in cands {
        let p = comp_of(g.lhs()).expect("vertex");
        let q = comp_of(g.rhs()).expect("vertex");
        let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
        if rp == rq {
            continue;
        }
        parent[rp] = rq;
        match rank {
            Rank::Indispensable => out_i.push(g),
            Rank::Remaining | Rank::FullSupport => out_r.push(g),
            Rank::Other => {
                return Err(Error::Inconsistent(format!(
                    "{} outside S lacks full support",
                    VarNames::plain(4).binomial(&g)
                )))
            }
        }
    }
    Ok(())
}

/// Splits a minimal system of `I_A` into the critical part `S`, the
/// indispensable full-support part `I` and the remainder `R`.
pub fn decompose_minimal_system(a: &[u64]) -> Result<Decomposition> {
    need4(a)?;
    let case = classify_critical_case(a)?;
    let ia = curve_ideal(a)?;
    let table = minimal_generating_set(&ia)?;
    let ctx = Ctx {
        a,
        c: case.set.c(),
        perm: &case.permutation,
        label: case.label,
        ia: &ia,
    };
    let weight = |f: &Binomial| f.lhs().weighted_degree(a);
    for f in &case.s {
        if table.graph(&[weight(f) as i64]).is_none() {
            return Err(Error::Inconsistent(format!(
                "{} is not in a Betti degree",
                VarNames::plain(4).binomial(f)
            )));
        }
    }
    let (mut i, mut r) = (Vec::new(), Vec::new());
    for graph in table.graphs() {
        let b = graph.degree()[0] as u64;
        let s_here: Vec<Binomial> = case.s.iter().filter(|f| weight(f) == b).cloned().collect();
        span_degree(&ctx, graph, &s_here, &mut i, &mut r)?;
    }
    let mu_ia = table.mu();
    if case.s.len() + i.len() + r.len() != mu_ia {
        return Err(Error::Inconsistent(format!(
            "|S|+|I|+|R| = {} but mu(I_A) = {mu_ia}",
            case.s.len() + i.len() + r.len()
        )));
    }
    let betti = table
        .betti_degrees()
        .into_iter()
        .map(|(d, k)| (d[0] as u64, k))
        .collect();
    let exact_unique = table.graphs().all(FiberGraph::forced_generators);
    Ok(Decomposition {
        s: case.s.clone(),
        case,
        i,
        r,
        mu_ia,
        betti,
        exact_unique,
    })
}

mod binomial_strings {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exponents::{parse_binomial, Binomial, VarNames};

    pub fn serialize<S: Serializer>(v: &[Binomial], s: S) -> Result<S::Ok, S::Error> {
        let names = VarNames::plain(4);
        s.collect_seq(v.iter().map(|f| names.binomial(f)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Binomial>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| parse_binomial(t, 4).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Keys are declared in sorted order so the JSON form is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    #[serde(rename = "A")]
    pub a: Vec<u64>,
    #[serde(rename = "I", with = "binomial_strings")]
    pub i: Vec<Binomial>,
    #[serde(rename = "R", with = "binomial_strings")]
    pub r: Vec<Binomial>,
    #[serde(rename = "S", with = "binomial_strings")]
    pub s: Vec<Binomial>,
    pub betti: Vec<(u64, usize)>,
    pub c: Vec<u32>,
    pub case: CaseLabel,
    pub complete_intersection: bool,
    pub critical_unique: bool,
    pub exact_unique: bool,
    pub gorenstein: bool,
    #[serde(rename = "mu_CA")]
    pub mu_ca: usize,
    #[serde(rename = "mu_IA")]
    pub mu_ia: usize,
    /// One-based: entry `k` is the variable playing `x_{k+1}` in the case table.
    pub permutation: Vec<usize>,
    pub unique: bool,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<ClassificationReport> {
        serde_json::from_str(s).map_err(|e| Error::Syntax {
            pos: e.column(),
            msg: e.to_string(),
        })
    }
}

pub fn classify(a: &[u64]) -> Result<ClassificationReport> {
    let d = decompose_minimal_system(a)?;
    let ia = curve_ideal(a)?;
    let critical_unique = critical_unique_for(a, &d.case, &ia)?;
    Ok(ClassificationReport {
        a: a.to_vec(),
        i: d.i,
        r: d.r.clone(),
        s: d.s,
        betti: d.betti,
        c: d.case.set.c().to_vec(),
        case: d.case.label,
        complete_intersection: d.mu_ia == 3,
        critical_unique,
        exact_unique: d.exact_unique,
        gorenstein: NumericalSemigroup::new(a)?.is_symmetric(),
        mu_ca: d.case.mu_ca,
        mu_ia: d.mu_ia,
        permutation: d.case.permutation.iter().map(|k| k + 1).collect(),
        unique: critical_unique && d.r.is_empty(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BresinskyForm {
    /// Variables in the order realizing the cyclic pattern.
    Matches(Vec<usize>),
    NoMatch,
}

/// Looks for critical binomials `x_1^c_1 - x_3 x_4`, `x_2^c_2 - x_1 x_4`,
/// `x_3^c_3 - x_1 x_2`, `x_4^c_4 - x_2 x_3` (all exponents positive) after
/// some relabeling; on a match the minimal system must be unique.
pub fn verify_bresinsky_form(a: &[u64]) -> Result<BresinskyForm> {
    need4(a)?;
    let set = crate::critical::CriticalSet::new(a)?;
    const TAILS: [[usize; 2]; 4] = [[2, 3], [0, 3], [0, 1], [1, 2]];
    for sigma in permutations4() {
        let ok = (0..4).all(|k| {
            let mut want = [sigma[TAILS[k][0]], sigma[TAILS[k][1]]];
            want.sort_unstable();
            set.of(sigma[k]).iter().any(|f| f.rhs().support() == want)
        });
        if ok {
            let ia = curve_ideal(a)?;
            if !crate::fibergraph::unique_minimal_system(&ia)? {
                return Err(Error::Inconsistent(
                    "cyclic critical pattern without a unique minimal system".into(),
                ));
            }
            return Ok(BresinskyForm::Matches(
                sigma.iter().map(|k| k + 1).collect(),
            ));
        }
    }
    Ok(BresinskyForm::NoMatch)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for p in 0..4 {
        for q in (0..4).filter(|&q| q != p) {
            for r in (0..4).filter(|&r| r != p && r != q) {
                let s = 6 - p - q - r;
                out.push([p, q, r, s]);
            }
        }
    }
    out
}

//! Buchberger's algorithm specialised to pure-difference binomials,
//! saturation by variables, toric ideals and Graver bases via the Lawrence
//! lifting.
//!
//! Normal forms of monomials modulo a binomial Gröbner basis are monomials,
//! so a binomial `x^u - x^v` reduces to zero exactly when `x^u` and `x^v`
//! have the same normal form.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::exponents::{canonical_binomial_cmp, Binomial, ExponentVector, TermOrder};
use crate::intlat::{finest_grading, kernel_lattice, Grading};

#[derive(Clone)]
struct Elem {
    lead: Vec<u32>,
    tail: Vec<u32>,
    mask: u64,
}

fn support_mask(u: &[u32]) -> u64 {
    u.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// `m / d * t` for `d | m`.
fn replace(m: &[u32], d: &[u32], t: &[u32]) -> Vec<u32> {
    m.iter()
        .zip(d)
        .zip(t)
        .map(|((a, b), c)| a - b + c)
        .collect()
}

impl Elem {
    fn new(a: Vec<u32>, b: Vec<u32>, order: &TermOrder) -> Option<Elem> {
        let (lead, tail) = match order.cmp_slices(&a, &b) {
            Ordering::Greater => (a, b),
            Ordering::Less => (b, a),
            Ordering::Equal => return None,
        };
        let mask = support_mask(&lead);
        Some(Elem { lead, tail, mask })
    }
}

fn find_reducer<'a>(elems: &'a [Elem], m: &[u32], mask: u64) -> Option<&'a Elem> {
    elems
        .iter()
        .find(|e| e.mask & !mask == 0 && divides(&e.lead, m))
}

fn normal_form_in(elems: &[Elem], m: &[u32]) -> Vec<u32> {
    let mut cur = m.to_vec();
    loop {
        let mask = support_mask(&cur);
        match find_reducer(elems, &cur, mask) {
            Some(e) => cur = replace(&cur, &e.lead, &e.tail),
            None => return cur,
        }
    }
}

/// A reduced Gröbner basis of a binomial ideal. Each element is stored with
/// its leading monomial on the left.
#[derive(Clone)]
pub struct GroebnerBasis {
    order: TermOrder,
    elems: Vec<Elem>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Elements as binomials `lead - tail`.
    pub fn elements(&self) -> Vec<Binomial> {
        self.elems
            .iter()
            .map(|e| Binomial::new_unchecked(e.lead.clone().into(), e.tail.clone().into()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.elems.iter().map(|e| e.lead.clone().into()).collect()
    }

    pub fn normal_form(&self, u: &ExponentVector) -> ExponentVector {
        normal_form_in(&self.elems, u.as_slice()).into()
    }

    /// Normal form of `f`; `None` means `f` reduces to zero.
    pub fn reduce(&self, f: &Binomial) -> Option<Binomial> {
        let l = normal_form_in(&self.elems, f.lhs().as_slice());
        let r = normal_form_in(&self.elems, f.rhs().as_slice());
        (l != r).then(|| Binomial::new_unchecked(l.into(), r.into()))
    }

    pub fn contains(&self, f: &Binomial) -> bool {
        self.reduce(f).is_none()
    }

    /// Whether `f` or `-f` is an element of the basis.
    pub fn has_element(&self, f: &Binomial) -> bool {
        self.elems.iter().any(|e| {
            (e.lead == f.lhs().as_slice() && e.tail == f.rhs().as_slice())
                || (e.lead == f.rhs().as_slice() && e.tail == f.lhs().as_slice())
        })
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements()).finish()
    }
}

fn check_order(order: &TermOrder, n: usize) -> Result<()> {
    if order.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: order.n(),
        });
    }
    if !order.is_global() {
        return Err(Error::NonPositiveGrading);
    }
    Ok(())
}

/// Normal form of `f` with respect to the binomials `g`, each oriented by
/// `order`. `None` is the zero binomial.
pub fn reduce(f: &Binomial, g: &[Binomial], order: &TermOrder) -> Result<Option<Binomial>> {
    check_order(order, f.n())?;
    let elems: Vec<Elem> = g
        .iter()
        .filter_map(|b| {
            Elem::new(
                b.lhs().as_slice().to_vec(),
                b.rhs().as_slice().to_vec(),
                order,
            )
        })
        .collect();
    let l = normal_form_in(&elems, f.lhs().as_slice());
    let r = normal_form_in(&elems, f.rhs().as_slice());
    Ok((l != r).then(|| Binomial::new_unchecked(l.into(), r.into())))
}

struct Pair {
    deg: u64,
    lcm: Vec<u32>,
    i: usize,
    j: usize,
}

impl PartialEq for Pair {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Pair {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.deg, &self.lcm, self.i, self.j).cmp(&(o.deg, &o.lcm, o.i, o.j))
    }
}

fn pair_degree(order: &TermOrder, m: &[u32]) -> u64 {
    order.degree(m)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Binomial], order: &TermOrder) -> Result<GroebnerBasis> {
    let n = order.n();
    for g in gens {
        if g.n() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: g.n(),
            });
        }
    }
    check_order(order, n)?;

    let mut st = State {
        order,
        elems: Vec::new(),
        active: Vec::new(),
        pairs: BTreeSet::new(),
    };
    for g in gens {
        let l = st.normal_form(g.lhs().as_slice());
        let r = st.normal_form(g.rhs().as_slice());
        if let Some(e) = Elem::new(l, r, order) {
            st.update(e);
        }
    }
    while let Some(p) = st.pairs.pop_first() {
        let (ei, ej) = (&st.elems[p.i], &st.elems[p.j]);
        let a = replace(&p.lcm, &ei.lead, &ei.tail);
        let b = replace(&p.lcm, &ej.lead, &ej.tail);
        let a = st.normal_form(&a);
        let b = st.normal_form(&b);
        if let Some(e) = Elem::new(a, b, order) {
            st.update(e);
        }
    }
    let State { elems, active, .. } = st;
    let kept = elems
        .into_iter()
        .zip(active)
        .filter_map(|(e, a)| a.then_some(e))
        .collect();
    Ok(interreduce(kept, order))
}

struct State<'a> {
    order: &'a TermOrder,
    elems: Vec<Elem>,
    active: Vec<bool>,
    pairs: BTreeSet<Pair>,
}

impl State<'_> {
    fn normal_form(&self, m: &[u32]) -> Vec<u32> {
        let mut cur = m.to_vec();
        'outer: loop {
            let mask = support_mask(&cur);
            for (e, &a) in self.elems.iter().zip(&self.active) {
                if a && e.mask & !mask == 0 && divides(&e.lead, &cur) {
                    cur = replace(&cur, &e.lead, &e.tail);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Gebauer-Möller installation of a new element.
    fn update(&mut self, e: Elem) {
        let h = self.elems.len();
        let hl = e.lead.clone();
        let cands: Vec<(usize, Vec<u32>, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let gl = &self.elems[g].lead;
                (g, lcm(gl, &hl), coprime(gl, &hl))
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for (k, (_, l, cop)) in cands.iter().enumerate() {
            let dominated = !cop
                && (cands[k + 1..].iter().any(|(_, l2, _)| divides(l2, l))
                    || kept.iter().any(|&d| divides(&cands[d].1, l)));
            if !dominated {
                kept.push(k);
            }
        }
        let order = self.order;
        let elems = &self.elems;
        self.pairs.retain(|p| {
            !(divides(&hl, &p.lcm)
                && lcm(&elems[p.i].lead, &hl) != p.lcm
                && lcm(&elems[p.j].lead, &hl) != p.lcm)
        });
        for k in kept {
            let (g, l, cop) = &cands[k];
            if !cop {
                self.pairs.insert(Pair {
                    deg: pair_degree(order, l),
                    lcm: l.clone(),
                    i: *g,
                    j: h,
                });
            }
        }
        for g in 0..h {
            if self.active[g] && divides(&hl, &self.elems[g].lead) {
                self.active[g] = false;
            }
        }
        self.elems.push(e);
        self.active.push(true);
    }
}

/// Minimalizes and tail-reduces a Gröbner basis.
fn interreduce(mut elems: Vec<Elem>, order: &TermOrder) -> GroebnerBasis {
    // smaller leads first so a divisor is always kept before its multiples
    elems.sort_by(|a, b| order.cmp_slices(&a.lead, &b.lead));
    let mut minimal: Vec<Elem> = Vec::new();
    for e in elems {
        if !minimal
            .iter()
            .any(|m| m.mask & !e.mask == 0 && divides(&m.lead, &e.lead))
        {
            minimal.push(e);
        }
    }
    let snapshot = minimal.clone();
    let mut out: Vec<Elem> = minimal
        .into_iter()
        .map(|mut e| {
            e.tail = normal_form_in(&snapshot, &e.tail);
            e
        })
        .collect();
    out.sort_by(|a, b| {
        let x = Binomial::new_unchecked(a.lead.clone().into(), a.tail.clone().into());
        let y = Binomial::new_unchecked(b.lead.clone().into(), b.tail.clone().into());
        canonical_binomial_cmp(&x, &y)
    });
    GroebnerBasis {
        order: order.clone(),
        elems: out,
    }
}

/// An ideal generated by pure-difference binomials, with memoized reduced
/// Gröbner bases.
pub struct BinomialIdeal {
    n: usize,
    generators: Vec<Binomial>,
    grading: Option<Grading>,
    toric: bool,
    gb_cache: RwLock<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for BinomialIdeal {
    fn clone(&self) -> Self {
        BinomialIdeal {
            n: self.n,
            generators: self.generators.clone(),
            grading: self.grading.clone(),
            toric: self.toric,
            gb_cache: RwLock::new(self.gb_cache.read().unwrap().clone()),
        }
    }
}

impl fmt::Debug for BinomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinomialIdeal")
            .field("n", &self.n)
            .field("generators", &self.generators)
            .field("grading", &self.grading)
            .field("toric", &self.toric)
            .finish()
    }
}

impl BinomialIdeal {
    pub fn new(n: usize, generators: Vec<Binomial>) -> Result<BinomialIdeal> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
        }
        Ok(BinomialIdeal {
            n,
            generators,
            grading: None,
            toric: false,
            gb_cache: RwLock::new(HashMap::new()),
        })
    }

    /// Attaches a grading; every generator must be homogeneous.
    pub fn with_grading(mut self, grading: Grading) -> Result<BinomialIdeal> {
        if grading.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: grading.n(),
            });
        }
        if let Some(g) = self.generators.iter().find(|g| !grading.is_homogeneous(g)) {
            return Err(Error::Inconsistent(format!("{g} is not homogeneous")));
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn is_toric(&self) -> bool {
        self.toric
    }

    /// Weighted graded reverse lex by the positive grading when one is
    /// known, plain graded reverse lex otherwise.
    pub fn default_order(&self) -> TermOrder {
        match self.grading.as_ref().and_then(|g| g.weights()) {
            Some(w) => TermOrder::weighted_grevlex(w.to_vec()),
            None => TermOrder::grevlex(self.n),
        }
    }

    pub fn groebner_basis(&self, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.gb_cache.read().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.generators, order)?);
        self.gb_cache
            .write()
            .unwrap()
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn default_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis(&self.default_order())
    }

    pub fn contains(&self, f: &Binomial) -> Result<bool> {
        membership(self, f)
    }

    /// Normal form of a monomial under the default order.
    pub fn normal_form(&self, u: &ExponentVector) -> Result<ExponentVector> {
        Ok(self.default_basis()?.normal_form(u))
    }

    fn insert_basis(&self, gb: GroebnerBasis) {
        self.gb_cache
            .write()
            .unwrap()
            .insert(gb.order.clone(), Arc::new(gb));
    }
}

/// Whether `f` lies in `j`. Toric ideals decide by comparing degrees.
pub fn membership(j: &BinomialIdeal, f: &Binomial) -> Result<bool> {
    if f.n() != j.n {
        return Err(Error::LengthMismatch {
            expected: j.n,
            found: f.n(),
        });
    }
    if j.toric {
        if let Some(g) = &j.grading {
            return Ok(g.is_homogeneous(f));
        }
    }
    Ok(j.default_basis()?.contains(f))
}

fn saturation_weights(ideal: &BinomialIdeal) -> Result<Vec<u64>> {
    if let Some(w) = ideal.grading.as_ref().and_then(|g| g.weights()) {
        return Ok(w.to_vec());
    }
    if ideal.generators.is_empty() {
        return Ok(vec![1; ideal.n]);
    }
    let g = finest_grading(&ideal.generators, ideal.n)?;
    g.weights()
        .map(<[u64]>::to_vec)
        .ok_or(Error::NonPositiveGrading)
}

/// Gröbner basis of `(I : x_i^oo)` from a basis of `I` under graded reverse
/// lex with `x_i` cheapest: divide each element by the largest power of
/// `x_i` dividing it.
fn saturate_step(gens: &[Binomial], weights: &[u64], i: usize) -> Result<GroebnerBasis> {
    let n = weights.len();
    let order = TermOrder::cheapest_last(Some(weights.to_vec()), n, i);
    let gb = buchberger(gens, &order)?;
    let divided: Vec<Elem> = gb
        .elems
        .into_iter()
        .filter_map(|e| {
            let k = e.lead[i].min(e.tail[i]);
            let mut l = e.lead;
            let mut t = e.tail;
            l[i] -= k;
            t[i] -= k;
            Elem::new(l, t, &order)
        })
        .collect();
    Ok(interreduce(divided, &order))
}

/// Generators of `(I : x_i^oo)`. Requires a positive grading under which
/// `I` is homogeneous; the finest grading is used when none is attached.
pub fn saturate_by_variable(ideal: &BinomialIdeal, i: usize) -> Result<BinomialIdeal> {
    if i >= ideal.n {
        return Err(Error::IndexOutOfRange {
            index: i,
            n: ideal.n,
        });
    }
    let w = saturation_weights(ideal)?;
    let gb = saturate_step(&ideal.generators, &w, i)?;
    let out = BinomialIdeal {
        n: ideal.n,
        generators: gb.elements(),
        grading: ideal.grading.clone(),
        toric: ideal.toric,
        gb_cache: RwLock::new(HashMap::new()),
    };
    out.insert_basis(gb);
    Ok(out)
}

/// `(I : (x_1 ... x_n)^oo)` by saturating one variable at a time.
pub fn saturate_all(ideal: &BinomialIdeal) -> Result<BinomialIdeal> {
    let w = saturation_weights(ideal)?;
    saturate_gens(
        ideal.n,
        ideal.generators.clone(),
        &w,
        ideal.grading.clone(),
        ideal.toric,
    )
}

fn saturate_gens(
    n: usize,
    mut gens: Vec<Binomial>,
    w: &[u64],
    grading: Option<Grading>,
    toric: bool,
) -> Result<BinomialIdeal> {
    let mut last = None;
    for i in 0..n {
        let gb = saturate_step(&gens, w, i)?;
        gens = gb.elements();
        last = Some(gb);
    }
    let out = BinomialIdeal {
        n,
        generators: gens,
        grading,
        toric,
        gb_cache: RwLock::new(HashMap::new()),
    };
    if let Some(gb) = last {
        out.insert_basis(gb);
    }
    Ok(out)
}

/// Generating set of the toric ideal of a positive grading: binomials of a
/// kernel lattice basis, saturated by every variable.
pub fn toric_ideal(a: &Grading) -> Result<BinomialIdeal> {
    let w = a.weights().ok_or(Error::NonPositiveGrading)?.to_vec();
    let n = a.n();
    let kernel = kernel_lattice(&a.to_int_matrix()).to_i64_rows()?;
    let gens = kernel
        .iter()
        .map(|row| Binomial::from_difference(row))
        .collect::<Result<Vec<_>>>()?;
    saturate_gens(n, gens, &w, Some(a.clone()), true)
}

/// Toric ideal of a monomial curve `(t^a_1, ..., t^a_n)`.
pub fn curve_ideal(a: &[u64]) -> Result<BinomialIdeal> {
    crate::semigroup::check_generators(a)?;
    toric_ideal(&Grading::curve(a)?)
}

/// Lawrence lifting of a one-row grading: rows `(A | 0)` and `(I | I)`.
pub fn lawrence_grading(a: &[u64]) -> Result<Grading> {
    let n = a.len();
    let mut rows = Vec::with_capacity(n + 1);
    let mut top: Vec<i64> = a.iter().map(|&x| x as i64).collect();
    top.extend(std::iter::repeat_n(0, n));
    rows.push(top);
    for i in 0..n {
        let mut r = vec![0i64; 2 * n];
        r[i] = 1;
        r[n + i] = 1;
        rows.push(r);
    }
    Grading::from_matrix(rows)
}

/// Toric ideal of the Lawrence lifting of `a`, in variables
/// `x_1..x_n, y_1..y_n`.
pub fn lawrence_ideal(a: &[u64]) -> Result<BinomialIdeal> {
    crate::semigroup::check_generators(a)?;
    let n = a.len();
    let grading = lawrence_grading(a)?;
    // weights (a_i + 1) on x_i and 1 on y_i certify positivity
    let mut w: Vec<u64> = a.iter().map(|&x| x + 1).collect();
    w.extend(std::iter::repeat_n(1, n));
    // lifting generators of the toric ideal instead of a bare lattice basis
    // keeps the intermediate bases small
    let base = curve_ideal(a)?;
    let gens = base
        .generators()
        .iter()
        .map(|g| {
            let mut lifted = g.difference();
            lifted.extend(g.difference().iter().map(|x| -x));
            Binomial::from_difference(&lifted)
        })
        .collect::<Result<Vec<_>>>()?;
    saturate_gens(2 * n, gens, &w, Some(grading), true)
}

/// Graver basis of a monomial curve: the reduced Gröbner basis of the
/// Lawrence ideal, mapped back by `x^u y^v - x^v y^u -> x^u - x^v`.
pub fn graver_basis(a: &[u64]) -> Result<Vec<Binomial>> {
    crate::semigroup::check_generators(a)?;
    let n = a.len();
    let lawrence = lawrence_ideal(a)?;
    let gb = lawrence.default_basis()?;
    let out = gb
        .elements()
        .into_iter()
        .map(|b| {
            let u = b.lhs().as_slice()[..n].to_vec();
            let v = b.rhs().as_slice()[..n].to_vec();
            Binomial::from_vecs(u, v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(crate::exponents::canonical_set(out))
}

/// Graver elements of minimal degree.
pub fn min_graver_degree_filter(a: &[u64]) -> Result<Vec<Binomial>> {
    let gr = graver_basis(a)?;
    let min = gr.iter().map(|b| b.lhs().weighted_degree(a)).min();
    Ok(gr
        .into_iter()
        .filter(|b| Some(b.lhs().weighted_degree(a)) == min)
        .collect())
}

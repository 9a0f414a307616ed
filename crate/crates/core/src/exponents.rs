//! Monomials, pure-difference binomials, term orders and the text grammar.
//!
//! Variables are indexed from zero internally and named `x1..xn` in text.
//! In a Lawrence ring with `2n` variables the upper half is written `y1..yn`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector `u` of the monomial `x^u`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The variable `x_i` (zero-based `i`) raised to `exp`.
    pub fn power(n: usize, i: usize, exp: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = exp;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Zero-based indices of the variables occurring in `x^u`.
    pub fn support(&self) -> Vec<usize> {
        support(self)
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `A`-degree `sum u_i a_i` for a one-row grading.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        weighted_degree(&self.0, weights)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&VarNames::plain(self.len()).monomial(self))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

pub(crate) fn weighted_degree(u: &[u32], weights: &[u64]) -> u64 {
    u.iter().zip(weights).fold(0u64, |acc, (&e, &w)| {
        (e as u64)
            .checked_mul(w)
            .and_then(|t| acc.checked_add(t))
            .expect("weighted degree overflows u64")
    })
}

pub fn support(u: &ExponentVector) -> Vec<usize> {
    u.0.iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, _)| i)
        .collect()
}

/// Componentwise minimum of two exponent vectors.
pub fn monomial_gcd(u: &ExponentVector, v: &ExponentVector) -> Result<ExponentVector> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(ExponentVector(
        u.0.iter().zip(&v.0).map(|(a, b)| *a.min(b)).collect(),
    ))
}

/// Tie-break order used for canonical binomial orientation: total degree,
/// then lexicographic on exponents.
pub fn canonical_cmp(u: &ExponentVector, v: &ExponentVector) -> Ordering {
    u.total_degree()
        .cmp(&v.total_degree())
        .then_with(|| u.0.cmp(&v.0))
}

/// Sign relating a binomial to its canonical orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The pure-difference binomial `x^lhs - x^rhs`, with `lhs != rhs`.
///
/// A binomial keeps the orientation it was built with, so that critical
/// binomials print as `x_i^{c_i} - x^u`. [`Binomial::normalized`] gives the
/// canonical orientation (greater term first under [`canonical_cmp`]); sets
/// of binomials are deduplicated on that form since `f` and `-f` are the
/// same generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    lhs: ExponentVector,
    rhs: ExponentVector,
}

impl Binomial {
    pub fn new(lhs: ExponentVector, rhs: ExponentVector) -> Result<Binomial> {
        if lhs.len() != rhs.len() {
            return Err(Error::LengthMismatch {
                expected: lhs.len(),
                found: rhs.len(),
            });
        }
        if lhs == rhs {
            return Err(Error::ZeroBinomial);
        }
        Ok(Binomial { lhs, rhs })
    }

    pub(crate) fn new_unchecked(lhs: ExponentVector, rhs: ExponentVector) -> Binomial {
        debug_assert!(lhs != rhs && lhs.len() == rhs.len());
        Binomial { lhs, rhs }
    }

    /// Builds `x^u - x^v` in canonical orientation, returning the sign that
    /// relates it to the requested orientation.
    pub fn canonical(u: ExponentVector, v: ExponentVector) -> Result<(Binomial, Sign)> {
        let b = Binomial::new(u, v)?;
        if b.is_canonical() {
            Ok((b, Sign::Plus))
        } else {
            Ok((b.negated(), Sign::Minus))
        }
    }

    pub fn from_vecs(lhs: Vec<u32>, rhs: Vec<u32>) -> Result<Binomial> {
        Binomial::new(ExponentVector(lhs), ExponentVector(rhs))
    }

    /// Binomial `x^{w+} - x^{w-}` of an integer vector `w`.
    pub fn from_difference(w: &[i64]) -> Result<Binomial> {
        let pos = w.iter().map(|&e| e.max(0) as u32).collect();
        let neg = w.iter().map(|&e| (-e).max(0) as u32).collect();
        Binomial::new(ExponentVector(pos), ExponentVector(neg))
    }

    pub fn lhs(&self) -> &ExponentVector {
        &self.lhs
    }

    pub fn rhs(&self) -> &ExponentVector {
        &self.rhs
    }

    pub fn n(&self) -> usize {
        self.lhs.len()
    }

    pub fn negated(&self) -> Binomial {
        Binomial {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        canonical_cmp(&self.lhs, &self.rhs) == Ordering::Greater
    }

    pub fn normalized(&self) -> Binomial {
        if self.is_canonical() {
            self.clone()
        } else {
            self.negated()
        }
    }

    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || (self.lhs == other.rhs && self.rhs == other.lhs)
    }

    /// `lhs - rhs` as an integer vector.
    pub fn difference(&self) -> Vec<i64> {
        self.lhs
            .0
            .iter()
            .zip(&self.rhs.0)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.n())
            .filter(|&i| self.lhs[i] != 0 || self.rhs[i] != 0)
            .collect();
        s.dedup();
        s
    }

    pub fn has_full_support(&self) -> bool {
        (0..self.n()).all(|i| self.lhs[i] != 0 || self.rhs[i] != 0)
    }

    /// Whether both monomials have degree `b` under the one-row grading.
    pub fn is_homogeneous(&self, weights: &[u64]) -> bool {
        self.lhs.weighted_degree(weights) == self.rhs.weighted_degree(weights)
    }

    /// Applies a variable permutation: variable `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Binomial {
        Binomial {
            lhs: permute(&self.lhs, perm),
            rhs: permute(&self.rhs, perm),
        }
    }
}

/// Moves entry `i` of `u` to position `perm[i]`.
pub fn permute(u: &ExponentVector, perm: &[usize]) -> ExponentVector {
    let mut out = vec![0; u.len()];
    for (i, &e) in u.0.iter().enumerate() {
        out[perm[i]] = e;
    }
    ExponentVector(out)
}

impl fmt::Debug for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&VarNames::plain(self.n()).binomial(self))
    }
}

/// Sorts canonically oriented binomials and removes duplicates up to sign.
pub fn canonical_set(binomials: impl IntoIterator<Item = Binomial>) -> Vec<Binomial> {
    let mut out: Vec<Binomial> = binomials.into_iter().map(|b| b.normalized()).collect();
    out.sort_by(canonical_binomial_cmp);
    out.dedup();
    out
}

/// Canonical ordering of binomials: by leading term, then trailing term,
/// both under [`canonical_cmp`].
pub fn canonical_binomial_cmp(a: &Binomial, b: &Binomial) -> Ordering {
    canonical_cmp(&a.lhs, &b.lhs).then_with(|| canonical_cmp(&a.rhs, &b.rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GradedReverseLex,
    Lex,
}

/// A monomial order.
///
/// `priority` lists variable indices from most to least expensive. For
/// graded reverse lex the (weighted) degree is compared first and ties are
/// broken at the last differing variable in priority order, where the larger
/// exponent gives the smaller monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    weight: Option<Vec<u64>>,
    priority: Vec<usize>,
}

impl TermOrder {
    pub fn grevlex(n: usize) -> TermOrder {
        TermOrder {
            kind: OrderKind::GradedReverseLex,
            weight: None,
            priority: (0..n).collect(),
        }
    }

    pub fn weighted_grevlex(weight: Vec<u64>) -> TermOrder {
        let n = weight.len();
        TermOrder {
            kind: OrderKind::GradedReverseLex,
            weight: Some(weight),
            priority: (0..n).collect(),
        }
    }

    pub fn lex(n: usize) -> TermOrder {
        TermOrder {
            kind: OrderKind::Lex,
            weight: None,
            priority: (0..n).collect(),
        }
    }

    /// Replaces the variable priority. `priority` must be a permutation of
    /// `0..n`.
    pub fn with_priority(mut self, priority: Vec<usize>) -> Result<TermOrder> {
        let n = self.priority.len();
        if priority.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: priority.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &priority {
            if p >= n || seen[p] {
                return Err(Error::IndexOutOfRange { index: p, n });
            }
            seen[p] = true;
        }
        self.priority = priority;
        Ok(self)
    }

    /// Graded reverse lex order with `cheap` as the cheapest variable and
    /// the remaining variables in ascending index order.
    pub fn cheapest_last(weight: Option<Vec<u64>>, n: usize, cheap: usize) -> TermOrder {
        let mut priority: Vec<usize> = (0..n).filter(|&k| k != cheap).collect();
        priority.push(cheap);
        TermOrder {
            kind: OrderKind::GradedReverseLex,
            weight,
            priority,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn weight(&self) -> Option<&[u64]> {
        self.weight.as_deref()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn n(&self) -> usize {
        self.priority.len()
    }

    /// Whether `1` is the least monomial, i.e. the order is a well-order.
    pub fn is_global(&self) -> bool {
        match &self.weight {
            Some(w) => w.iter().all(|&x| x > 0),
            None => true,
        }
    }

    pub fn compare(&self, u: &ExponentVector, v: &ExponentVector) -> Result<Ordering> {
        for w in [u, v] {
            if w.len() != self.n() {
                return Err(Error::LengthMismatch {
                    expected: self.n(),
                    found: w.len(),
                });
            }
        }
        Ok(self.cmp_slices(u.as_slice(), v.as_slice()))
    }

    pub(crate) fn degree(&self, u: &[u32]) -> u64 {
        match &self.weight {
            Some(w) => weighted_degree(u, w),
            None => u.iter().map(|&e| e as u64).sum(),
        }
    }

    pub(crate) fn cmp_slices(&self, u: &[u32], v: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match u[i].cmp(&v[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GradedReverseLex => {
                let du = self.degree(u);
                let dv = self.degree(v);
                if du != dv {
                    return du.cmp(&dv);
                }
                for &i in self.priority.iter().rev() {
                    match u[i].cmp(&v[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Free function form of [`TermOrder::compare`].
pub fn compare(order: &TermOrder, u: &ExponentVector, v: &ExponentVector) -> Result<Ordering> {
    order.compare(u, v)
}

/// Variable naming for text I/O.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarNames {
    /// Total number of variables in the ring.
    pub n: usize,
    /// Lawrence ring: `x1..x(n/2), y1..y(n/2)`.
    pub lawrence: bool,
}

impl VarNames {
    pub fn plain(n: usize) -> VarNames {
        VarNames { n, lawrence: false }
    }

    pub fn lawrence(base: usize) -> VarNames {
        VarNames {
            n: 2 * base,
            lawrence: true,
        }
    }

    fn name(&self, i: usize) -> String {
        if self.lawrence && i >= self.n / 2 {
            format!("y{}", i - self.n / 2 + 1)
        } else {
            format!("x{}", i + 1)
        }
    }

    pub fn monomial(&self, u: &ExponentVector) -> String {
        let factors: Vec<String> = u
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.name(i)
                } else {
                    format!("{}^{}", self.name(i), e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn binomial(&self, b: &Binomial) -> String {
        format!("{} - {}", self.monomial(b.lhs()), self.monomial(b.rhs()))
    }
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.syntax(format!("expected '{}'", c as char))),
        }
    }

    fn number(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            if self.bytes.get(self.pos) == Some(&b'-') {
                return Err(Error::NonPositiveExponent { pos: start });
            }
            return Err(self.syntax("expected a number".into()));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let value = s.parse::<u64>().map_err(|_| Error::Syntax {
            pos: start,
            msg: "number too large".into(),
        })?;
        Ok((start, value))
    }

    fn syntax(&self, msg: String) -> Error {
        Error::Syntax { pos: self.pos, msg }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// A factor `x_i^e` or `y_i^e` as parsed, before the ring is fixed.
#[derive(Debug, Clone, Copy)]
struct Factor {
    y: bool,
    index: usize,
    exp: u32,
    pos: usize,
}

fn parse_term(lx: &mut Lexer<'_>) -> Result<Vec<Factor>> {
    let mut factors = vec![parse_factor(lx)?];
    while lx.peek() == Some(b'*') {
        lx.pos += 1;
        factors.push(parse_factor(lx)?);
    }
    Ok(factors)
}

fn parse_factor(lx: &mut Lexer<'_>) -> Result<Factor> {
    let y = match lx.peek() {
        Some(b'x') => false,
        Some(b'y') => true,
        _ => return Err(lx.syntax("expected a variable 'x<i>' or 'y<i>'".into())),
    };
    let pos = lx.pos;
    lx.pos += 1;
    let (ipos, index) = lx.number()?;
    if index == 0 {
        return Err(Error::IndexOutOfRange { index: 0, n: 0 }).map_err(|_| Error::Syntax {
            pos: ipos,
            msg: "variable indices start at 1".into(),
        });
    }
    let exp = if lx.peek() == Some(b'^') {
        lx.pos += 1;
        let (epos, e) = lx.number()?;
        if e == 0 {
            return Err(Error::NonPositiveExponent { pos: epos });
        }
        u32::try_from(e).map_err(|_| Error::Syntax {
            pos: epos,
            msg: "exponent too large".into(),
        })?
    } else {
        1
    };
    Ok(Factor {
        y,
        index: index as usize,
        exp,
        pos,
    })
}

fn materialize(factors: &[Factor], vars: &VarNames) -> Result<ExponentVector> {
    let mut u = vec![0u32; vars.n];
    let half = vars.n / 2;
    for f in factors {
        let i = if f.y {
            if !vars.lawrence {
                return Err(Error::Syntax {
                    pos: f.pos,
                    msg: "y variables require a Lawrence ring".into(),
                });
            }
            if f.index > half {
                return Err(Error::IndexOutOfRange {
                    index: f.index,
                    n: half,
                });
            }
            half + f.index - 1
        } else {
            let limit = if vars.lawrence { half } else { vars.n };
            if f.index > limit {
                return Err(Error::IndexOutOfRange {
                    index: f.index,
                    n: limit,
                });
            }
            f.index - 1
        };
        u[i] = u[i].checked_add(f.exp).ok_or(Error::Syntax {
            pos: f.pos,
            msg: "exponent too large".into(),
        })?;
    }
    Ok(ExponentVector(u))
}

fn parse_binomial_factors(text: &str) -> Result<(Vec<Factor>, Vec<Factor>)> {
    let mut lx = Lexer::new(text);
    let lhs = parse_term(&mut lx)?;
    lx.expect(b'-')?;
    let rhs = parse_term(&mut lx)?;
    if !lx.at_end() {
        return Err(lx.syntax("unexpected trailing input".into()));
    }
    Ok((lhs, rhs))
}

/// Parses `term - term` in the plain ring with `n` variables.
pub fn parse_binomial(text: &str, n: usize) -> Result<Binomial> {
    parse_binomial_in(text, &VarNames::plain(n))
}

pub fn parse_binomial_in(text: &str, vars: &VarNames) -> Result<Binomial> {
    let (l, r) = parse_binomial_factors(text)?;
    Binomial::new(materialize(&l, vars)?, materialize(&r, vars)?)
}

pub fn parse_monomial_in(text: &str, vars: &VarNames) -> Result<ExponentVector> {
    let mut lx = Lexer::new(text);
    let t = parse_term(&mut lx)?;
    if !lx.at_end() {
        return Err(lx.syntax("unexpected trailing input".into()));
    }
    materialize(&t, vars)
}

/// Contents of an ideal file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: VarNames,
    pub generators: Vec<Binomial>,
}

/// Parses an ideal file: one binomial per line, `#` comments, blank lines
/// ignored. The first non-comment line may be `vars n` (or `lawrence n` for
/// the `2n`-variable Lawrence ring); otherwise the variable count is the
/// largest index used.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut header: Option<VarNames> = None;
    let mut parsed: Vec<(usize, Vec<Factor>, Vec<Factor>)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = lineno + 1;
        let mut words = line.split_whitespace();
        let first = words.next().unwrap();
        if first == "vars" || first == "lawrence" {
            if header.is_some() || !parsed.is_empty() {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: "ring declaration must be the first line".into(),
                }
                .at_line(lineno));
            }
            let n: usize = words
                .next()
                .and_then(|w| w.parse().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| {
                    Error::Syntax {
                        pos: first.len(),
                        msg: "expected a positive variable count".into(),
                    }
                    .at_line(lineno)
                })?;
            if words.next().is_some() {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: "unexpected trailing input".into(),
                }
                .at_line(lineno));
            }
            header = Some(if first == "vars" {
                VarNames::plain(n)
            } else {
                VarNames::lawrence(n)
            });
            continue;
        }
        let (l, r) = parse_binomial_factors(line).map_err(|e| e.at_line(lineno))?;
        parsed.push((lineno, l, r));
    }
    if parsed.is_empty() {
        return Err(Error::Empty);
    }
    let vars = match header {
        Some(v) => v,
        None => {
            let mut n = 0;
            for (lineno, l, r) in &parsed {
                for f in l.iter().chain(r) {
                    if f.y {
                        return Err(Error::Syntax {
                            pos: f.pos,
                            msg: "y variables require a 'lawrence n' declaration".into(),
                        }
                        .at_line(*lineno));
                    }
                    n = n.max(f.index);
                }
            }
            VarNames::plain(n)
        }
    };
    let generators = parsed
        .iter()
        .map(|(lineno, l, r)| {
            let lhs = materialize(l, &vars).map_err(|e| e.clone().at_line(*lineno))?;
            let rhs = materialize(r, &vars).map_err(|e| e.at_line(*lineno))?;
            Binomial::new(lhs, rhs).map_err(|e| e.at_line(*lineno))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealFile { vars, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&ev(&[2, 3, 0, 0])), vec![0, 1]);
        assert!(support(&ev(&[0, 0, 0, 0])).is_empty());
        assert_eq!(support(&ev(&[1, 0, 1, 1])), vec![0, 2, 3]);
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            monomial_gcd(&ev(&[2, 3, 0, 0]), &ev(&[6, 0, 0, 0])).unwrap(),
            ev(&[2, 0, 0, 0])
        );
        assert_eq!(
            monomial_gcd(&ev(&[1, 1, 0, 0]), &ev(&[0, 0, 1, 1])).unwrap(),
            ev(&[0, 0, 0, 0])
        );
        assert_eq!(
            monomial_gcd(&ev(&[2, 2, 2, 2]), &ev(&[1, 3, 1, 3])).unwrap(),
            ev(&[1, 2, 1, 2])
        );
        assert!(matches!(
            monomial_gcd(&ev(&[1]), &ev(&[1, 2])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn compare_examples() {
        let o = TermOrder::weighted_grevlex(vec![6, 8, 17, 19]);
        let c = o.compare(&ev(&[4, 0, 0, 0]), &ev(&[0, 3, 0, 0])).unwrap();
        assert_ne!(c, Ordering::Equal);
        // last variable in priority order is x2: larger exponent there is smaller
        assert_eq!(c, Ordering::Greater);
        assert_eq!(
            TermOrder::lex(2)
                .compare(&ev(&[1, 0]), &ev(&[0, 1]))
                .unwrap(),
            Ordering::Greater
        );
        let u = ev(&[3, 1, 4]);
        assert_eq!(
            TermOrder::grevlex(3).compare(&u, &u).unwrap(),
            Ordering::Equal
        );
        assert!(TermOrder::grevlex(3).compare(&u, &ev(&[1])).is_err());
    }

    #[test]
    fn priority_must_be_permutation() {
        assert!(TermOrder::grevlex(3).with_priority(vec![0, 0, 1]).is_err());
        assert!(TermOrder::grevlex(3).with_priority(vec![0, 1]).is_err());
        assert!(TermOrder::grevlex(3).with_priority(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn parse_examples() {
        let b = parse_binomial("x1^2*x2^3 - x3*x4", 4).unwrap();
        assert_eq!(b.lhs(), &ev(&[2, 3, 0, 0]));
        assert_eq!(b.rhs(), &ev(&[0, 0, 1, 1]));
        let b = parse_binomial("x1 - x2", 4).unwrap();
        assert_eq!((b.lhs(), b.rhs()), (&ev(&[1, 0, 0, 0]), &ev(&[0, 1, 0, 0])));
        assert!(matches!(
            parse_binomial("x1^0 - x2", 4),
            Err(Error::NonPositiveExponent { .. })
        ));
        assert!(matches!(
            parse_binomial("x1^-2 - x2", 4),
            Err(Error::NonPositiveExponent { .. })
        ));
        assert!(matches!(
            parse_binomial("x5 - x2", 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_binomial("x1 x2 - x3", 4),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_binomial("x1 - x1", 4),
            Err(Error::ZeroBinomial)
        ));
        assert!(parse_binomial("y1 - x2", 4).is_err());
    }

    #[test]
    fn lawrence_names() {
        let vars = VarNames::lawrence(3);
        let b = parse_binomial_in("x1*y2 - x2*y1", &vars).unwrap();
        assert_eq!(b.lhs(), &ev(&[1, 0, 0, 0, 1, 0]));
        assert_eq!(vars.binomial(&b), "x1*y2 - x2*y1");
    }

    #[test]
    fn ideal_file() {
        let text = "# demo\nvars 4\n\nx1 - x2  # first\nx3 - x4\nx2^2 - x2*x4\n";
        let f = parse_ideal_file(text).unwrap();
        assert_eq!(f.vars, VarNames::plain(4));
        assert_eq!(f.generators.len(), 3);
        let f = parse_ideal_file("x1 - x3\n").unwrap();
        assert_eq!(f.vars.n, 3);
        let err = parse_ideal_file("vars 2\nx1 - x2\nx1 ^ - x2\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 3, .. }), "{err}");
        assert!(matches!(parse_ideal_file("# nothing\n"), Err(Error::Empty)));
    }

    #[test]
    fn canonical_orientation() {
        let (b, s) = Binomial::canonical(ev(&[0, 3]), ev(&[4, 0])).unwrap();
        assert_eq!(s, Sign::Minus);
        assert_eq!(b.lhs(), &ev(&[4, 0]));
        assert!(b.is_canonical());
        assert!(b.same_up_to_sign(&b.negated()));
    }

    fn vec_strategy(n: usize) -> impl Strategy<Value = ExponentVector> {
        proptest::collection::vec(0u32..6, n).prop_map(ExponentVector::new)
    }

    fn order_strategy() -> impl Strategy<Value = TermOrder> {
        (
            proptest::sample::select(vec![0u8, 1, 2]),
            Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
            proptest::collection::vec(1u64..20, 4),
        )
            .prop_map(|(k, p, w)| {
                let base = match k {
                    0 => TermOrder::grevlex(4),
                    1 => TermOrder::lex(4),
                    _ => TermOrder::weighted_grevlex(w),
                };
                base.with_priority(p).unwrap()
            })
    }

    proptest! {
        #[test]
        fn gcd_laws(u in vec_strategy(4), v in vec_strategy(4), w in vec_strategy(4)) {
            let uv = monomial_gcd(&u, &v).unwrap();
            prop_assert_eq!(&uv, &monomial_gcd(&v, &u).unwrap());
            prop_assert_eq!(
                monomial_gcd(&uv, &w).unwrap(),
                monomial_gcd(&u, &monomial_gcd(&v, &w).unwrap()).unwrap()
            );
            prop_assert_eq!(monomial_gcd(&u, &u).unwrap(), u.clone());
            prop_assert!(uv.divides(&u) && uv.divides(&v));
        }

        #[test]
        fn order_is_total_and_multiplicative(
            o in order_strategy(),
            u in vec_strategy(4), v in vec_strategy(4), w in vec_strategy(4)
        ) {
            let uv = o.compare(&u, &v).unwrap();
            prop_assert_eq!(uv, o.compare(&v, &u).unwrap().reverse());
            prop_assert_eq!(uv == Ordering::Equal, u == v);
            if uv == Ordering::Less && o.compare(&v, &w).unwrap() == Ordering::Less {
                prop_assert_eq!(o.compare(&u, &w).unwrap(), Ordering::Less);
            }
            prop_assert_eq!(o.compare(&u.mul(&w), &v.mul(&w)).unwrap(), uv);
            prop_assert_ne!(o.compare(&ExponentVector::zeros(4), &u.mul(&ExponentVector::power(4, 0, 1))).unwrap(), Ordering::Greater);
        }

        #[test]
        fn print_parse_identity(u in vec_strategy(5), v in vec_strategy(5)) {
            prop_assume!(u != v && !u.is_one() && !v.is_one());
            let b = Binomial::new(u, v).unwrap();
            let text = b.to_string();
            let back = parse_binomial(&text, 5).unwrap();
            prop_assert_eq!(&back, &b);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}

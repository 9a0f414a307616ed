//! Critical binomials `x_i^{c_i} - x^v`, the critical ideal `C_A`, its
//! minimal systems for curves in 4-space, and circuits.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponents::{canonical_set, Binomial, ExponentVector, TermOrder, VarNames};
use crate::fibergraph::{self, indispensable_monomial, minimal_generating_set, Verdict};
use crate::grobner::{buchberger, curve_ideal, BinomialIdeal};
use crate::intlat::Grading;
use crate::semigroup::{
    check_generators, critical_exponents, fiber, fiber_with, NumericalSemigroup,
};

fn power(n: usize, i: usize, e: u32) -> ExponentVector {
    ExponentVector::power(n, i, e)
}

/// All critical binomials with respect to `x_i`, left monomial `x_i^{c_i}`.
pub fn critical_binomials(a: &[u64], i: usize) -> Result<Vec<Binomial>> {
    let c = critical_exponents(a)?;
    if i >= a.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            n: a.len(),
        });
    }
    Ok(critical_with(a, &c, i))
}

fn critical_with(a: &[u64], c: &[u32], i: usize) -> Vec<Binomial> {
    let n = a.len();
    let lead = power(n, i, c[i]);
    fiber_with(a, c[i] as u64 * a[i], |u| u[i] == 0)
        .into_iter()
        .map(|v| Binomial::new(lead.clone(), v).expect("distinct monomials"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSet {
    a: Vec<u64>,
    c: Vec<u32>,
    per_variable: Vec<Vec<Binomial>>,
}

impl CriticalSet {
    pub fn new(a: &[u64]) -> Result<CriticalSet> {
        let c = critical_exponents(a)?;
        let per_variable = (0..a.len()).map(|i| critical_with(a, &c, i)).collect();
        Ok(CriticalSet {
            a: a.to_vec(),
            c,
            per_variable,
        })
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn c(&self) -> &[u32] {
        &self.c
    }

    pub fn of(&self, i: usize) -> &[Binomial] {
        &self.per_variable[i]
    }

    /// The degrees `c_i a_i`.
    pub fn degrees(&self) -> Vec<u64> {
        (0..self.a.len())
            .map(|i| self.c[i] as u64 * self.a[i])
            .collect()
    }

    /// Partition of the variables by equal `c_i a_i`, blocks ascending.
    pub fn pattern(&self) -> Vec<Vec<usize>> {
        let d = self.degrees();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..d.len() {
            match blocks.iter_mut().find(|b| d[b[0]] == d[i]) {
                Some(b) => b.push(i),
                None => blocks.push(vec![i]),
            }
        }
        blocks
    }

    /// Every critical binomial, up to sign, in canonical order.
    pub fn all(&self) -> Vec<Binomial> {
        canonical_set(self.per_variable.iter().flatten().cloned())
    }

    /// Whether `f` (either orientation) is critical with respect to `x_i`.
    pub fn is_critical_for(&self, f: &Binomial, i: usize) -> bool {
        self.per_variable[i].iter().any(|g| g.same_up_to_sign(f))
    }

    pub fn is_critical(&self, f: &Binomial) -> bool {
        (0..self.a.len()).any(|i| self.is_critical_for(f, i))
    }

    /// Critical tails of `x_i` other than pure powers `x_j^{c_j}`.
    fn proper_tails(&self, i: usize) -> Vec<&Binomial> {
        self.per_variable[i]
            .iter()
            .filter(|f| !self.is_circuit_tail(f.rhs()))
            .collect()
    }

    fn is_circuit_tail(&self, v: &ExponentVector) -> bool {
        let s = v.support();
        s.len() == 1 && v[s[0]] == self.c[s[0]]
    }

    /// Preferred tail: support of size at least two, then least in lex.
    fn preferred(&self, i: usize) -> Option<Binomial> {
        let tails = self.proper_tails(i);
        tails
            .iter()
            .find(|f| f.rhs().support().len() >= 2)
            .or(tails.first())
            .map(|f| (*f).clone())
    }

    fn circuit(&self, i: usize, j: usize) -> Binomial {
        let n = self.a.len();
        Binomial::new(power(n, i, self.c[i]), power(n, j, self.c[j])).expect("distinct")
    }
}

/// The ideal generated by all critical binomials, graded by `A`.
pub fn critical_ideal(a: &[u64]) -> Result<BinomialIdeal> {
    let set = CriticalSet::new(a)?;
    BinomialIdeal::new(a.len(), set.all())?.with_grading(Grading::curve(a)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "2c")]
    TwoC,
    #[serde(rename = "2d")]
    TwoD,
    #[serde(rename = "3")]
    Three,
    #[serde(rename = "4a")]
    FourA,
    #[serde(rename = "4b")]
    FourB,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::One => "1",
            CaseLabel::TwoA => "2a",
            CaseLabel::TwoB => "2b",
            CaseLabel::TwoC => "2c",
            CaseLabel::TwoD => "2d",
            CaseLabel::Three => "3",
            CaseLabel::FourA => "4a",
            CaseLabel::FourB => "4b",
        }
    }

    /// The only cases where the critical ideal can have a unique system.
    pub fn may_be_unique(self) -> bool {
        matches!(self, CaseLabel::One | CaseLabel::TwoC | CaseLabel::FourB)
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalCase {
    pub label: CaseLabel,
    /// `permutation[k]` is the original index of the variable playing the
    /// role of `x_{k+1}` in the normal form.
    pub permutation: Vec<usize>,
    /// Minimal system of `C_A` in the original variables.
    pub s: Vec<Binomial>,
    pub mu_ca: usize,
    pub set: CriticalSet,
    /// Uniqueness of the minimal system of `C_A`, read off its fiber graphs.
    pub exact_unique: bool,
}

impl CriticalCase {
    /// Tails of `S` that are not pure powers `x_j^{c_j}`.
    pub fn non_circuit_tails(&self) -> Vec<ExponentVector> {
        self.s
            .iter()
            .filter(|f| !self.set.is_circuit_tail(f.rhs()))
            .map(|f| f.rhs().clone())
            .collect()
    }
}

pub(crate) fn need4(a: &[u64]) -> Result<()> {
    check_generators(a)?;
    if a.len() != 4 {
        return Err(Error::Arity {
            expected: 4,
            found: a.len(),
        });
    }
    Ok(())
}

/// Case of the normal form of a minimal system of `C_A` with `S` chosen as
/// in the case table; `|S|` is checked against `mu(C_A)` from the fiber
/// graphs of `C_A`, and `S` against the full critical set.
pub fn classify_critical_case(a: &[u64]) -> Result<CriticalCase> {
    need4(a)?;
    let set = CriticalSet::new(a)?;
    let ca = critical_ideal(a)?;
    let table = minimal_generating_set(&ca)?;
    let mu_ca = table.mu();
    let exact_unique = table
        .graphs()
        .all(fibergraph::FiberGraph::forced_generators);
    let pattern = set.pattern();
    let mut sizes: Vec<usize> = pattern.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let tail = |i: usize| -> Result<Binomial> {
        set.preferred(i)
            .ok_or_else(|| Error::Inconsistent(format!("no tail for x{}", i + 1)))
    };
    let (label, permutation, s) = match sizes.as_slice() {
        [1, 1, 1, 1] => {
            let s = (0..4).map(tail).collect::<Result<Vec<_>>>()?;
            (CaseLabel::One, vec![0, 1, 2, 3], s)
        }
        [2, 2] => {
            let (p, q) = (&pattern[0], &pattern[1]);
            let tailed = |b: &Vec<usize>| !set.proper_tails(b[0]).is_empty();
            let (label, first, second) = match mu_ca {
                4 => (CaseLabel::TwoA, p, q),
                3 => {
                    if tailed(p) && !tailed(q) {
                        (CaseLabel::TwoB, q, p)
                    } else {
                        (CaseLabel::TwoB, p, q)
                    }
                }
                _ => (CaseLabel::TwoC, p, q),
            };
            let perm = vec![first[0], first[1], second[0], second[1]];
            let mut s = vec![set.circuit(perm[0], perm[1])];
            if label == CaseLabel::TwoA {
                s.push(tail(perm[1])?);
            }
            s.push(set.circuit(perm[2], perm[3]));
            if label != CaseLabel::TwoC {
                s.push(tail(perm[3])?);
            }
            (label, perm, s)
        }
        [4] => {
            let s = (0..3).map(|k| set.circuit(k, k + 1)).collect();
            (CaseLabel::TwoD, vec![0, 1, 2, 3], s)
        }
        [1, 3] => {
            let triple = pattern.iter().find(|b| b.len() == 3).unwrap();
            let single = pattern.iter().find(|b| b.len() == 1).unwrap()[0];
            let perm = vec![triple[0], triple[1], triple[2], single];
            let s = vec![
                set.circuit(perm[0], perm[1]),
                set.circuit(perm[1], perm[2]),
                tail(single)?,
            ];
            (CaseLabel::Three, perm, s)
        }
        [1, 1, 2] => {
            let pair = pattern.iter().find(|b| b.len() == 2).unwrap();
            let rest: Vec<usize> = pattern
                .iter()
                .filter(|b| b.len() == 1)
                .map(|b| b[0])
                .collect();
            let perm = vec![pair[0], pair[1], rest[0], rest[1]];
            let label = if mu_ca == 4 {
                CaseLabel::FourA
            } else {
                CaseLabel::FourB
            };
            let mut s = vec![set.circuit(perm[0], perm[1])];
            if label == CaseLabel::FourA {
                s.push(tail(perm[1])?);
            }
            s.push(tail(perm[2])?);
            s.push(tail(perm[3])?);
            (label, perm, s)
        }
        _ => unreachable!("partitions of four"),
    };
    if s.len() != mu_ca {
        return Err(Error::Inconsistent(format!(
            "case {label}: |S| = {} but mu(C_A) = {mu_ca}",
            s.len()
        )));
    }
    let gb = buchberger(&s, &TermOrder::weighted_grevlex(a.to_vec()))?;
    if let Some(f) = set.all().iter().find(|f| !gb.contains(f)) {
        return Err(Error::Inconsistent(format!(
            "case {label}: S does not generate {}",
            VarNames::plain(4).binomial(f)
        )));
    }
    Ok(CriticalCase {
        label,
        permutation,
        s,
        mu_ca,
        set,
        exact_unique,
    })
}

/// `C_A` has a unique minimal system: the case allows it and every tail
/// of `S` that is not a pure power is an indispensable monomial of `I_A`.
pub fn critical_unique(a: &[u64]) -> Result<bool> {
    let case = classify_critical_case(a)?;
    critical_unique_for(a, &case, &curve_ideal(a)?)
}

pub(crate) fn critical_unique_for(
    a: &[u64],
    case: &CriticalCase,
    ia: &BinomialIdeal,
) -> Result<bool> {
    let _ = a;
    if !case.label.may_be_unique() {
        return Ok(false);
    }
    for u in case.non_circuit_tails() {
        if !indispensable_monomial(ia, &u)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indispensability of a critical binomial in `I_A`, which agrees with
/// its indispensability in `C_A`.
pub fn indispensable_critical(a: &[u64], f: &Binomial) -> Result<bool> {
    let set = CriticalSet::new(a)?;
    if f.n() != a.len() || !set.is_critical(f) {
        return Err(Error::NotCritical(VarNames::plain(f.n()).binomial(f)));
    }
    let ia = curve_ideal(a)?;
    let exact = fibergraph::indispensable_binomial(&ia, f)? == Verdict::Yes;
    let ca = critical_ideal(a)?;
    if fibergraph::indispensable_binomial(&ca, f)? == Verdict::Yes && !exact {
        return Err(Error::Inconsistent(format!(
            "{} is indispensable in C_A only",
            VarNames::plain(f.n()).binomial(f)
        )));
    }
    Ok(exact)
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// The circuit `x_i^{a_j/g} - x_j^{a_i/g}` of a pair.
pub fn circuit(a: &[u64], i: usize, j: usize) -> Result<Binomial> {
    let n = a.len();
    for k in [i, j] {
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
    }
    if a.contains(&0) {
        return Err(Error::NonPositiveGenerator);
    }
    let g = gcd(a[i], a[j]);
    let e =
        |x: u64| u32::try_from(x / g).map_err(|_| Error::Inconsistent("exponent overflow".into()));
    Binomial::new(power(n, i, e(a[j])?), power(n, j, e(a[i])?))
}

pub fn circuits(a: &[u64]) -> Result<Vec<Binomial>> {
    let n = a.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(circuit(a, i, j)?);
        }
    }
    Ok(out)
}

/// The circuit of `(i, j)` is indispensable iff `lcm(a_i, a_j) - a_k` is
/// outside the semigroup for every other `k`.
pub fn circuit_indispensable(a: &[u64], i: usize, j: usize) -> Result<bool> {
    circuit(a, i, j)?;
    let s = NumericalSemigroup::new(a)?;
    let l = a[i] / gcd(a[i], a[j]) * a[j];
    Ok((0..a.len())
        .filter(|&k| k != i && k != j)
        .all(|k| !s.contains(l as i64 - a[k] as i64)))
}

/// Graded reverse lex by `A` where every other variable is cheaper than
/// `x_i` and `x_j`.
pub fn order_ij(a: &[u64], i: usize, j: usize) -> Result<TermOrder> {
    let mut prio = vec![i, j];
    prio.extend((0..a.len()).filter(|&k| k != i && k != j));
    TermOrder::weighted_grevlex(a.to_vec()).with_priority(prio)
}

pub fn circuit_in_reduced_gb(a: &[u64], i: usize, j: usize) -> Result<bool> {
    circuit_in_reduced_gb_of(&curve_ideal(a)?, a, i, j)
}

pub(crate) fn circuit_in_reduced_gb_of(
    ia: &BinomialIdeal,
    a: &[u64],
    i: usize,
    j: usize,
) -> Result<bool> {
    let f = circuit(a, i, j)?;
    let gb = ia.groebner_basis(&order_ij(a, i, j)?)?;
    Ok(gb.has_element(&f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainCheck {
    AppliesAndVerified,
    NotApplicable,
}

/// When every critical binomial is a pure-power binomial in one common
/// degree, the chain `x_1^{c_1} - x_2^{c_2}, ..., x_{n-1}^{c_{n-1}} - x_n^{c_n}`
/// generates `I_A`; this is checked by reduction.
pub fn chain_implies_toric(a: &[u64]) -> Result<ChainCheck> {
    let set = CriticalSet::new(a)?;
    let n = a.len();
    let d = set.degrees();
    let applies = d.iter().all(|&x| x == d[0]) && fiber(a, d[0]).len() == n;
    if !applies {
        return Ok(ChainCheck::NotApplicable);
    }
    let chain: Vec<Binomial> = (0..n - 1).map(|k| set.circuit(k, k + 1)).collect();
    let ia = curve_ideal(a)?;
    let table = minimal_generating_set(&ia)?;
    if table.mu() != n - 1 {
        return Err(Error::Inconsistent(format!(
            "chain: mu(I_A) = {}",
            table.mu()
        )));
    }
    let gb = buchberger(&chain, &TermOrder::weighted_grevlex(a.to_vec()))?;
    if table.generators().iter().any(|f| !gb.contains(f)) {
        return Err(Error::Inconsistent("chain does not generate I_A".into()));
    }
    Ok(ChainCheck::AppliesAndVerified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::parse_binomial;

    fn b(s: &str) -> Binomial {
        parse_binomial(s, 4).unwrap()
    }

    #[test]
    fn critical_binomial_examples() {
        let a = [6, 8, 17, 19];
        let x4 = critical_binomials(&a, 3).unwrap();
        assert_eq!(x4, vec![b("x4^2 - x1*x2^4"), b("x4^2 - x1^5*x2")]);
        assert_eq!(critical_binomials(&a, 0).unwrap(), vec![b("x1^4 - x2^3")]);
        let f = critical_binomials(&[2, 3], 0).unwrap();
        assert_eq!(f, vec![parse_binomial("x1^3 - x2^2", 2).unwrap()]);
    }

    #[test]
    fn critical_ideal_examples() {
        let set = CriticalSet::new(&[25, 30, 57, 76]).unwrap();
        assert_eq!(set.all().len(), 2);
        assert!(set.is_critical(&b("x1^6 - x2^5")));
        assert!(set.is_critical(&b("x3^4 - x4^3")));

        let ca = critical_ideal(&[4, 6, 3, 5]).unwrap();
        assert!(ca.contains(&b("x4^2 - x1*x2")).unwrap());
        assert!(ca.contains(&b("x4^2 - x1*x3^2")).unwrap());
    }

    #[test]
    fn case_examples() {
        let k = classify_critical_case(&[6, 8, 17, 19]).unwrap();
        assert_eq!(k.label, CaseLabel::FourB);
        assert_eq!(k.mu_ca, 3);
        assert_eq!(k.s[0], b("x1^4 - x2^3"));
        assert!(k.s.contains(&b("x4^2 - x1*x2^4")));
        assert!(!critical_unique(&[6, 8, 17, 19]).unwrap());

        let k = classify_critical_case(&[25, 30, 57, 76]).unwrap();
        assert_eq!(k.label, CaseLabel::TwoC);
        assert_eq!(k.mu_ca, 2);
        assert!(critical_unique(&[25, 30, 57, 76]).unwrap());

        assert!(!critical_unique(&[4, 6, 3, 5]).unwrap());
        assert!(classify_critical_case(&[2, 3]).is_err());
    }

    #[test]
    fn critical_indispensability() {
        let a = [6, 8, 17, 19];
        assert!(indispensable_critical(&a, &b("x1^4 - x2^3")).unwrap());
        assert!(!indispensable_critical(&a, &b("x4^2 - x1*x2^4")).unwrap());
        assert!(matches!(
            indispensable_critical(&a, &b("x1^2*x2^3 - x3*x4")),
            Err(Error::NotCritical(_))
        ));
        let f = parse_binomial("x1^3 - x2^2", 2).unwrap();
        assert!(indispensable_critical(&[2, 3], &f).unwrap());
    }

    #[test]
    fn circuit_examples() {
        let a = [6, 8, 17, 19];
        assert_eq!(circuit(&a, 0, 1).unwrap(), b("x1^4 - x2^3"));
        assert_eq!(circuit(&a, 2, 3).unwrap(), b("x3^19 - x4^17"));
        assert_eq!(circuits(&[2, 3]).unwrap().len(), 1);
        assert!(circuit_indispensable(&a, 0, 1).unwrap());
        assert!(!circuit_indispensable(&a, 2, 3).unwrap());
        assert!(circuit_indispensable(&[2, 3], 0, 1).unwrap());
        assert!(circuit_in_reduced_gb(&a, 0, 1).unwrap());
        assert!(!circuit_in_reduced_gb(&a, 2, 3).unwrap());
        assert!(circuit_in_reduced_gb(&[2, 3], 0, 1).unwrap());
    }

    #[test]
    fn chain_examples() {
        assert_eq!(
            chain_implies_toric(&[2, 3]).unwrap(),
            ChainCheck::AppliesAndVerified
        );
        assert_eq!(
            chain_implies_toric(&[105, 70, 42, 30]).unwrap(),
            ChainCheck::AppliesAndVerified
        );
        assert_eq!(
            chain_implies_toric(&[6, 8, 17, 19]).unwrap(),
            ChainCheck::NotApplicable
        );
        let k = classify_critical_case(&[105, 70, 42, 30]).unwrap();
        assert_eq!(k.label, CaseLabel::TwoD);
    }
}

//! Numerical semigroups: membership, Apéry sets, Frobenius number,
//! symmetry, critical exponents and fiber enumeration.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;

/// The semigroup generated by relatively prime positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
}

/// Checks that `a` is a nonempty list of positive integers with gcd one.
pub fn check_generators(a: &[u64]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    if a.contains(&0) {
        return Err(Error::NonPositiveGenerator);
    }
    if a.iter().fold(0u64, |g, &x| g.gcd(&x)) != 1 {
        return Err(Error::GcdNotOne(a.to_vec()));
    }
    Ok(())
}

impl NumericalSemigroup {
    pub fn new(generators: &[u64]) -> Result<NumericalSemigroup> {
        check_generators(generators)?;
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let apery = apery_by_dijkstra(&gens, gens[0]);
        let frobenius = *apery.iter().max().unwrap() as i64 - gens[0] as i64;
        Ok(NumericalSemigroup {
            generators: gens,
            apery,
            frobenius,
        })
    }

    /// Sorted, deduplicated generators.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn contains(&self, b: i64) -> bool {
        if b < 0 {
            return false;
        }
        let b = b as u64;
        b >= self.apery[(b % self.multiplicity()) as usize]
    }

    /// Apéry set with respect to the least generator.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Apéry set with respect to the generator `m`: entry `r` is the least
    /// element congruent to `r` modulo `m`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if !self.generators.contains(&m) {
            return Err(Error::Inconsistent(format!("{m} is not a generator")));
        }
        Ok(apery_by_dijkstra(&self.generators, m))
    }

    /// Largest integer not in the semigroup, `-1` when it is all of N.
    pub fn frobenius_number(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..=self.frobenius.max(-1))
            .filter(|&z| !self.contains(z))
            .map(|z| z as u64)
            .collect()
    }

    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }
}

/// Shortest paths over residues modulo `m` with the generators as steps.
fn apery_by_dijkstra(gens: &[u64], m: u64) -> Vec<u64> {
    let m_us = m as usize;
    let mut dist = vec![u64::MAX; m_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            if g == m {
                continue;
            }
            let nd = d + g;
            let nr = ((r as u64 + g) % m) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

pub fn contains(s: &NumericalSemigroup, b: i64) -> bool {
    s.contains(b)
}

pub fn apery_set(s: &NumericalSemigroup, m: u64) -> Result<Vec<u64>> {
    s.apery_set(m)
}

pub fn frobenius_number(s: &NumericalSemigroup) -> i64 {
    s.frobenius_number()
}

pub fn is_symmetric(s: &NumericalSemigroup) -> bool {
    s.is_symmetric()
}

/// Critical exponents: `c_i` is the least `k >= 1` with `k a_i` in the
/// semigroup generated by the other entries. Membership is decided by a
/// dynamic program over the actual remaining generators, whose gcd may
/// exceed one.
pub fn critical_exponents(a: &[u64]) -> Result<Vec<u32>> {
    if a.len() < 2 {
        return Err(Error::Arity {
            expected: 2,
            found: a.len(),
        });
    }
    check_generators(a)?;
    (0..a.len())
        .map(|i| {
            // c_i <= a_j / gcd(a_i, a_j) for any j != i
            let bound = (0..a.len())
                .filter(|&j| j != i)
                .map(|j| a[j] / a[i].gcd(&a[j]))
                .min()
                .unwrap();
            let others: Vec<u64> = (0..a.len()).filter(|&j| j != i).map(|j| a[j]).collect();
            let reach = representable_up_to(&others, bound * a[i]);
            let k = (1..=bound)
                .find(|&k| reach[(k * a[i]) as usize])
                .expect("bound is attained");
            u32::try_from(k)
                .map_err(|_| Error::Inconsistent("critical exponent exceeds u32".into()))
        })
        .collect()
}

/// `reach[b]` is true when `b` is a nonnegative combination of `gens`.
pub(crate) fn representable_up_to(gens: &[u64], limit: u64) -> Vec<bool> {
    let limit = limit as usize;
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for &g in gens {
        let g = g as usize;
        for b in g..=limit {
            if reach[b - g] {
                reach[b] = true;
            }
        }
    }
    reach
}

/// All `u` with `sum u_i a_i = b`, in ascending lexicographic order.
pub fn fiber(a: &[u64], b: u64) -> Vec<ExponentVector> {
    fiber_with(a, b, |_| true)
}

/// Fiber enumeration keeping only vectors accepted by `keep`.
pub fn fiber_with(a: &[u64], b: u64, mut keep: impl FnMut(&[u32]) -> bool) -> Vec<ExponentVector> {
    let n = a.len();
    if a.contains(&0) {
        panic!("fiber enumeration needs positive weights");
    }
    // suffix gcds prune remainders that the tail cannot reach
    let mut suffix_gcd = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix_gcd[i] = suffix_gcd[i + 1].gcd(&a[i]);
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(
        i: usize,
        rem: u64,
        a: &[u64],
        g: &[u64],
        cur: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
        keep: &mut dyn FnMut(&[u32]) -> bool,
    ) {
        let n = a.len();
        if i == n {
            if rem == 0 && keep(cur) {
                out.push(ExponentVector::new(cur.clone()));
            }
            return;
        }
        if g[i] == 0 || !rem.is_multiple_of(g[i]) {
            return;
        }
        if i == n - 1 {
            cur[i] = (rem / a[i]) as u32;
            rec(i + 1, 0, a, g, cur, out, keep);
            cur[i] = 0;
            return;
        }
        let max = rem / a[i];
        for e in 0..=max {
            cur[i] = e as u32;
            rec(i + 1, rem - e * a[i], a, g, cur, out, keep);
        }
        cur[i] = 0;
    }
    rec(0, b, a, &suffix_gcd, &mut cur, &mut out, &mut keep);
    out
}

/// Number of elements of a fiber without materializing it.
pub fn fiber_size(a: &[u64], b: u64) -> u64 {
    let limit = b as usize;
    let mut ways = vec![0u64; limit + 1];
    ways[0] = 1;
    for &g in a {
        let g = g as usize;
        for x in g..=limit {
            ways[x] = ways[x].saturating_add(ways[x - g]);
        }
    }
    ways[limit]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gap_scan_contains(a: &[u64], b: u64) -> bool {
        representable_up_to(a, b)[b as usize]
    }

    #[test]
    fn membership_examples() {
        let s = NumericalSemigroup::new(&[6, 8, 17, 19]).unwrap();
        assert!(s.contains(24));
        assert!(!s.contains(7));
        let t = NumericalSemigroup::new(&[5, 6, 7, 8]).unwrap();
        assert!(!t.contains(9));
        assert!(!gap_scan_contains(&[5, 6, 7, 8], 9));
    }

    #[test]
    fn apery_examples() {
        let s = NumericalSemigroup::new(&[6, 8, 17, 19]).unwrap();
        let ap = s.apery_set(6).unwrap();
        assert_eq!(ap, vec![0, 19, 8, 27, 16, 17]);
        for &w in &ap {
            assert!(gap_scan_contains(&[6, 8, 17, 19], w));
            assert!(w < 6 || !gap_scan_contains(&[6, 8, 17, 19], w - 6));
        }
        assert_eq!(NumericalSemigroup::new(&[2, 3]).unwrap().apery(), &[0, 3]);
        assert_eq!(NumericalSemigroup::new(&[1]).unwrap().apery(), &[0]);
        assert!(s.apery_set(7).is_err());
    }

    #[test]
    fn frobenius_and_symmetry() {
        let s = NumericalSemigroup::new(&[5, 6, 7, 8]).unwrap();
        assert_eq!(s.frobenius_number(), 9);
        let scan_max = (0..=20u64)
            .filter(|&b| !gap_scan_contains(&[5, 6, 7, 8], b))
            .max();
        assert_eq!(scan_max, Some(9));
        assert!(s.is_symmetric());
        assert_eq!(s.genus(), 5);
        assert_eq!(
            NumericalSemigroup::new(&[2, 3]).unwrap().frobenius_number(),
            1
        );
        assert!(NumericalSemigroup::new(&[2, 3]).unwrap().is_symmetric());
        assert_eq!(
            NumericalSemigroup::new(&[1]).unwrap().frobenius_number(),
            -1
        );
        let t = NumericalSemigroup::new(&[6, 8, 17, 19]).unwrap();
        let f = t.frobenius_number();
        let scan = (0..=f).all(|z| {
            gap_scan_contains(&[6, 8, 17, 19], z as u64)
                != gap_scan_contains(&[6, 8, 17, 19], (f - z) as u64)
        });
        assert_eq!(t.is_symmetric(), scan);
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(matches!(
            NumericalSemigroup::new(&[4, 6]),
            Err(Error::GcdNotOne(_))
        ));
        assert!(matches!(
            NumericalSemigroup::new(&[0, 1]),
            Err(Error::NonPositiveGenerator)
        ));
        assert!(matches!(NumericalSemigroup::new(&[]), Err(Error::Empty)));
    }

    #[test]
    fn critical_exponent_examples() {
        assert_eq!(
            critical_exponents(&[6, 8, 17, 19]).unwrap(),
            vec![4, 3, 2, 2]
        );
        assert_eq!(
            critical_exponents(&[25, 30, 57, 76]).unwrap(),
            vec![6, 5, 4, 3]
        );
        assert_eq!(critical_exponents(&[1, 1]).unwrap(), vec![1, 1]);
        assert_eq!(
            critical_exponents(&[105, 70, 42, 30]).unwrap(),
            vec![2, 3, 5, 7]
        );
    }

    #[test]
    fn fiber_examples() {
        let f = fiber(&[6, 8, 17, 19], 36);
        let want: Vec<ExponentVector> = [[0, 0, 1, 1], [2, 3, 0, 0], [6, 0, 0, 0]]
            .iter()
            .map(|v| ExponentVector::new(v.to_vec()))
            .collect();
        assert_eq!(f, want);
        let f = fiber(&[15, 16, 81, 82, 83, 84], 165);
        for v in [[11, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 1], [0, 0, 0, 1, 1, 0]] {
            assert!(f.contains(&ExponentVector::new(v.to_vec())));
        }
        assert_eq!(fiber(&[3, 5], 0), vec![ExponentVector::zeros(2)]);
        assert_eq!(fiber_size(&[6, 8, 17, 19], 36), 3);
    }

    fn quad() -> impl Strategy<Value = Vec<u64>> {
        proptest::collection::vec(2u64..40, 2..5)
            .prop_filter("gcd one", |a| a.iter().fold(0u64, |g, &x| g.gcd(&x)) == 1)
    }

    proptest! {
        #[test]
        fn contains_matches_dp(a in quad()) {
            let s = NumericalSemigroup::new(&a).unwrap();
            let limit = (s.frobenius_number() + 2 * *a.iter().max().unwrap() as i64) as u64;
            let reach = representable_up_to(&a, limit);
            for b in 0..=limit {
                prop_assert_eq!(s.contains(b as i64), reach[b as usize]);
            }
            prop_assert_eq!(s.is_symmetric(), 2 * s.genus() as i64 == s.frobenius_number() + 1);
        }

        #[test]
        fn critical_minimality(a in quad()) {
            let c = critical_exponents(&a).unwrap();
            for i in 0..a.len() {
                let without: Vec<u64> = (0..a.len()).filter(|&j| j != i).map(|j| a[j]).collect();
                let ci = c[i] as u64;
                prop_assert!(!fiber(&without, ci * a[i]).is_empty());
                prop_assert!(fiber(&without, (ci - 1) * a[i]).is_empty() || ci == 1);
            }
        }

        #[test]
        fn fiber_degrees(a in quad(), b in 0u64..120) {
            let f = fiber(&a, b);
            for u in &f {
                prop_assert_eq!(u.weighted_degree(&a), b);
            }
            prop_assert_eq!(f.len() as u64, fiber_size(&a, b));
            prop_assert!(f.windows(2).all(|w| w[0] < w[1]));
            let mut more = a.clone();
            more.push(7);
            prop_assert!(fiber_size(&more, b) >= f.len() as u64);
        }
    }
}

//! Slow, direct reference computations used to cross-check the library.

#![allow(dead_code)]

use toric_core::exponents::TermOrder;
use toric_core::exponents::{Binomial, ExponentVector};
use toric_core::grobner::{buchberger, curve_ideal};

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Membership table of the semigroup up to `limit` by direct scanning.
pub fn representable(a: &[u64], limit: u64) -> Vec<bool> {
    let mut r = vec![false; limit as usize + 1];
    r[0] = true;
    for x in 1..=limit as usize {
        r[x] = a.iter().any(|&g| g as usize <= x && r[x - g as usize]);
    }
    r
}

/// Frobenius number and symmetry from the gaps.
pub fn gap_scan(a: &[u64]) -> (i64, bool) {
    let m = *a.iter().min().unwrap();
    let limit = m * a.iter().max().unwrap() * 2 + 2;
    let r = representable(a, limit);
    let frob = (0..=limit as i64)
        .rev()
        .find(|&x| !r[x as usize])
        .unwrap_or(-1);
    if frob < 0 {
        return (-1, true);
    }
    let gaps = (0..=frob).filter(|&x| !r[x as usize]).count() as i64;
    (frob, 2 * gaps == frob + 1)
}

/// Every exponent vector of weighted degree `b`, by nested loops.
pub fn brute_fiber(a: &[u64], b: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; a.len()];
    fn go(a: &[u64], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == a.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left / a[i] {
            cur[i] = e as u32;
            go(a, i + 1, left - e * a[i], cur, out);
        }
        cur[i] = 0;
    }
    go(a, 0, b, &mut cur, &mut out);
    out.sort();
    out
}

/// Least `c` with `c a_i` a combination of the other generators.
pub fn brute_critical(a: &[u64]) -> Vec<u32> {
    (0..a.len())
        .map(|i| {
            let others: Vec<u64> = (0..a.len()).filter(|&k| k != i).map(|k| a[k]).collect();
            let mut c = 1u64;
            loop {
                let r = representable(&others, c * a[i]);
                if r[(c * a[i]) as usize] {
                    return c as u32;
                }
                c += 1;
            }
        })
        .collect()
}

/// Kernel basis of the row `a` by unimodular column operations.
pub fn kernel_basis(a: &[u64]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut row: Vec<i64> = a.iter().map(|&x| x as i64).collect();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    loop {
        let nz: Vec<usize> = (0..n).filter(|&j| row[j] != 0).collect();
        if nz.len() <= 1 {
            break;
        }
        let p = *nz.iter().min_by_key(|&&j| row[j].abs()).unwrap();
        for &j in &nz {
            if j != p {
                let q = row[j] / row[p];
                row[j] -= q * row[p];
                let col = u[p].clone();
                for (x, y) in u[j].iter_mut().zip(col) {
                    *x -= q * y;
                }
            }
        }
    }
    (0..n)
        .filter(|&j| row[j] == 0)
        .map(|j| u[j].clone())
        .collect()
}

fn conformal(g: &[i64], s: &[i64]) -> bool {
    g.iter()
        .zip(s)
        .all(|(&x, &y)| x * y >= 0 && x.abs() <= y.abs())
}

/// Graver basis by the completion procedure on a lattice generating set,
/// each element normalized so its first nonzero entry is positive.
pub fn graver_completion(a: &[u64]) -> Vec<Vec<i64>> {
    let basis = kernel_basis(a);
    let mut g: Vec<Vec<i64>> = Vec::new();
    for b in &basis {
        g.push(b.clone());
        g.push(b.iter().map(|x| -x).collect());
    }
    let add = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(p, q)| p + q).collect() };
    let mut todo: Vec<Vec<i64>> = Vec::new();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            todo.push(add(&g[i], &g[j]));
        }
    }
    while let Some(mut s) = todo.pop() {
        loop {
            let hit = g
                .iter()
                .find(|h| conformal(h, &s) && h.iter().any(|&x| x != 0));
            match hit {
                Some(h) => s = s.iter().zip(h).map(|(p, q)| p - q).collect(),
                None => break,
            }
        }
        if s.iter().all(|&x| x == 0) {
            continue;
        }
        for h in &g {
            todo.push(add(&s, h));
        }
        g.push(s);
    }
    let mut out: Vec<Vec<i64>> = g
        .iter()
        .filter(|x| !g.iter().any(|y| y != *x && conformal(y, x)))
        .map(|x| {
            let neg = x.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0);
            if neg {
                x.iter().map(|v| -v).collect()
            } else {
                x.clone()
            }
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn normalized_difference(f: &Binomial) -> Vec<i64> {
    let d = f.difference();
    if d.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
        d.iter().map(|v| -v).collect()
    } else {
        d
    }
}

/// Minimal number of generators by greedy pruning of the reduced
/// Gröbner basis in increasing degree.
pub fn nakayama_mu(a: &[u64]) -> usize {
    let ia = curve_ideal(a).unwrap();
    let mut gb = ia.default_basis().unwrap().elements();
    gb.sort_by_key(|f| f.lhs().weighted_degree(a).max(f.rhs().weighted_degree(a)));
    let order = TermOrder::weighted_grevlex(a.to_vec());
    let mut kept: Vec<Binomial> = Vec::new();
    for f in gb {
        let redundant = !kept.is_empty() && buchberger(&kept, &order).unwrap().contains(&f);
        if !redundant {
            kept.push(f);
        }
    }
    kept.len()
}

/// Components of the fiber graph of `I_A` in degree `b` with edges
/// between monomials sharing a variable.
pub fn brute_components(a: &[u64], b: u64) -> usize {
    let fib = brute_fiber(a, b);
    let n = fib.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = root(p, p[x]);
            p[x] = r;
            r
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if fib[i].iter().zip(&fib[j]).any(|(&x, &y)| x > 0 && y > 0) {
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    (0..n).filter(|&i| root(&mut parent, i) == i).count()
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

/// Deterministic gcd-one quadruples in `[lo, hi]`.
pub fn quadruples(count: usize, lo: u64, hi: u64, seed: u64) -> Vec<Vec<u64>> {
    toric_core::cli::sample(lo, hi, count, seed)
}

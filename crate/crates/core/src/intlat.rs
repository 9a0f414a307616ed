//! Exact integer linear algebra: Hermite and Smith normal forms, integer
//! kernels, lattice saturation and the finest grading of a binomial ideal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exponents::Binomial;

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows<T: Into<BigInt> + Copy>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| x.into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rows as `i64`, failing if an entry does not fit.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| {
                        x.to_i64().ok_or_else(|| {
                            Error::Inconsistent(format!("entry {x} exceeds 64 bits"))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> IntMatrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for i in idx {
            data.extend_from_slice(self.row(i));
            rows += 1;
        }
        IntMatrix {
            rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row_a <- p*row_a + q*row_b, row_b <- r*row_a + s*row_b.
    fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            self[(a, j)] = p * &x + q * &y;
            self[(b, j)] = r * &x + s * &y;
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for i in 0..self.rows {
            let x = self[(i, a)].clone();
            let y = self[(i, b)].clone();
            self[(i, a)] = p * &x + q * &y;
            self[(i, b)] = r * &x + s * &y;
        }
    }

    /// row_a <- row_a + k*row_b
    fn add_row_multiple(&mut self, a: usize, b: usize, k: &BigInt) {
        for j in 0..self.cols {
            let t = k * &self[(b, j)];
            self[(a, j)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(a, j)]);
            self[(a, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Unimodular 2x2 transform `(p, q, r, s)` sending `(a, b)` to `(g, 0)`
/// with `g = gcd(a, b)` up to sign; plain elimination when `a | b`.
fn eliminator(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt, BigInt) {
    if b.is_multiple_of(a) {
        return (BigInt::one(), BigInt::zero(), -(b / a), BigInt::one());
    }
    let e = a.extended_gcd(b);
    let g = e.gcd;
    (e.x, e.y, -(b / &g), a / &g)
}

/// Row Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U * M = H`. Pivots are positive and entries above a pivot lie in
/// `[0, pivot)`; zero rows come last.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for j in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !h[(i, j)].is_zero()) else {
            continue;
        };
        h.swap_rows(p, r);
        u.swap_rows(p, r);
        for i in r + 1..m.rows {
            if h[(i, j)].is_zero() {
                continue;
            }
            let a = h[(r, j)].clone();
            let b = h[(i, j)].clone();
            let (p, q, rr, ss) = eliminator(&a, &b);
            h.combine_rows(r, i, &p, &q, &rr, &ss);
            u.combine_rows(r, i, &p, &q, &rr, &ss);
        }
        if h[(r, j)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h[(r, j)].clone();
        for i in 0..r {
            let q = -h[(i, j)].div_floor(&pivot);
            if !q.is_zero() {
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Rank of the row space, read off the Hermite form.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows)
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .count()
}

/// Canonical basis of the row lattice: the nonzero rows of the HNF.
pub fn lattice_hnf(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_normal_form(m);
    let nz: Vec<usize> = (0..h.rows)
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    h.select_rows(nz)
}

/// Smith normal form: `(D, P, Q)` with `P * M * Q = D`, `D` diagonal with
/// nonnegative entries each dividing the next, `P`, `Q` unimodular.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = m.clone();
    let mut p = IntMatrix::identity(m.rows);
    let mut q = IntMatrix::identity(m.cols);
    let k = m.rows.min(m.cols);
    for t in 0..k {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                if !d[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        d.swap_rows(bi, t);
        p.swap_rows(bi, t);
        d.swap_cols(bj, t);
        q.swap_cols(bj, t);
        loop {
            for i in t + 1..m.rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let a = d[(t, t)].clone();
                let b = d[(i, t)].clone();
                let (x, y, z, w) = eliminator(&a, &b);
                d.combine_rows(t, i, &x, &y, &z, &w);
                p.combine_rows(t, i, &x, &y, &z, &w);
            }
            for j in t + 1..m.cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let a = d[(t, t)].clone();
                let b = d[(t, j)].clone();
                let (x, y, z, w) = eliminator(&a, &b);
                d.combine_cols(t, j, &x, &y, &z, &w);
                q.combine_cols(t, j, &x, &y, &z, &w);
            }
            let col_clear = (t + 1..m.rows).all(|i| d[(i, t)].is_zero());
            let row_clear = (t + 1..m.cols).all(|j| d[(t, j)].is_zero());
            if !(col_clear && row_clear) {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let bad = (t + 1..m.rows)
                .find(|&i| (t + 1..m.cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    p.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
    }
    (d, p, q)
}

/// Invariant factors (nonzero diagonal entries of the Smith form).
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let (d, _, _) = smith_normal_form(m);
    (0..d.rows.min(d.cols))
        .map(|i| d[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect()
}

/// Basis (as rows, in Hermite form) of `{u in Z^n : A u = 0}`.
pub fn kernel_lattice(a: &IntMatrix) -> IntMatrix {
    let n = a.cols;
    let (h, u) = hermite_normal_form(&a.transpose());
    let zero_rows: Vec<usize> = (0..n)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    lattice_hnf(&u.select_rows(zero_rows))
}

/// Basis (rows, Hermite form) of the saturation of the row lattice of `l`
/// inside `Z^n`.
pub fn saturate_lattice(l: &IntMatrix, n: usize) -> Result<IntMatrix> {
    if l.cols != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: l.cols,
        });
    }
    if l.rows == 0 || l.is_zero() {
        return Ok(IntMatrix::zeros(0, n));
    }
    let (d, _, q) = smith_normal_form(l);
    let r = (0..d.rows.min(d.cols))
        .filter(|&i| !d[(i, i)].is_zero())
        .count();
    let (_, qinv) = hermite_normal_form(&q);
    Ok(lattice_hnf(&qinv.select_rows(0..r)))
}

/// A grading matrix whose columns are the degrees of the variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    matrix: Vec<Vec<i64>>,
    positive: bool,
    weights: Option<Vec<u64>>,
    // row combination producing `weights`
    certificate: Option<Vec<BigRational>>,
}

impl Grading {
    /// Grading of a monomial curve: one row of positive integers.
    pub fn curve(a: &[u64]) -> Result<Grading> {
        if a.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let row = a
            .iter()
            .map(|&x| i64::try_from(x).map_err(|_| Error::NonPositiveGenerator))
            .collect::<Result<Vec<_>>>()?;
        Ok(Grading {
            matrix: vec![row],
            positive: true,
            weights: Some(a.to_vec()),
            certificate: Some(vec![BigRational::one()]),
        })
    }

    /// Wraps a matrix and decides positivity by an exact search for a
    /// rational row combination taking values at least one on every column.
    pub fn from_matrix(matrix: Vec<Vec<i64>>) -> Result<Grading> {
        let n = matrix.first().map_or(0, Vec::len);
        if let Some(r) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: r.len(),
            });
        }
        let (certificate, weights) = positive_weights(&matrix, n).unzip();
        Ok(Grading {
            positive: weights.is_some(),
            matrix,
            weights,
            certificate,
        })
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn d(&self) -> usize {
        self.matrix.len()
    }

    pub fn n(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// Positive integer weights `c * A` certifying positivity, if any.
    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    /// The weighted degree `c . b` of any monomial of multidegree `b`.
    pub fn weight_of_degree(&self, b: &[i64]) -> Option<u64> {
        let c = self.certificate.as_ref()?;
        let v: BigRational = c
            .iter()
            .zip(b)
            .map(|(x, &y)| x * BigRational::from_integer(BigInt::from(y)))
            .sum();
        if !v.is_integer() {
            return None;
        }
        v.to_integer().to_u64()
    }

    pub fn degree(&self, u: &[u32]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(u).map(|(&a, &e)| a * e as i64).sum())
            .collect()
    }

    pub fn is_homogeneous(&self, b: &Binomial) -> bool {
        self.degree(b.lhs().as_slice()) == self.degree(b.rhs().as_slice())
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.n(), &self.matrix).expect("rectangular")
    }
}

impl fmt::Debug for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grading{:?}", self.matrix)
    }
}

/// Fourier-Motzkin search for `c` with `c . col_i >= 1` for all columns;
/// returns the integer weights `c . col_i` scaled to clear denominators.
fn positive_weights(matrix: &[Vec<i64>], n: usize) -> Option<(Vec<BigRational>, Vec<u64>)> {
    let d = matrix.len();
    if n == 0 {
        return Some((vec![BigRational::zero(); d], Vec::new()));
    }
    if d == 0 {
        return None;
    }
    if let Some(k) = matrix.iter().position(|r| r.iter().all(|&x| x > 0)) {
        let mut c = vec![BigRational::zero(); d];
        c[k] = BigRational::one();
        return Some((c, matrix[k].iter().map(|&x| x as u64).collect()));
    }
    type Ineq = (Vec<BigRational>, BigRational);
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut levels: Vec<Vec<Ineq>> = Vec::with_capacity(d + 1);
    let initial: Vec<Ineq> = (0..n)
        .map(|i| {
            (
                (0..d).map(|k| q(matrix[k][i])).collect(),
                BigRational::one(),
            )
        })
        .collect();
    levels.push(initial);
    for var in 0..d {
        let cur = levels.last().unwrap();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut next: Vec<Ineq> = Vec::new();
        for ineq in cur {
            let c = &ineq.0[var];
            if c.is_positive() {
                pos.push(ineq);
            } else if c.is_negative() {
                neg.push(ineq);
            } else {
                next.push(ineq.clone());
            }
        }
        for p in &pos {
            for m in &neg {
                let sp = p.0[var].clone();
                let sm = -m.0[var].clone();
                let coeffs: Vec<BigRational> =
                    (0..d).map(|k| &p.0[k] / &sp + &m.0[k] / &sm).collect();
                let rhs = &p.1 / &sp + &m.1 / &sm;
                let ineq = (coeffs, rhs);
                if !next.contains(&ineq) {
                    next.push(ineq);
                }
            }
        }
        levels.push(next);
    }
    if levels[d].iter().any(|(_, rhs)| rhs.is_positive()) {
        return None;
    }
    // back substitution, last eliminated variable first
    let mut c = vec![BigRational::zero(); d];
    for var in (0..d).rev() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for (coeffs, rhs) in &levels[var] {
            let a = &coeffs[var];
            if a.is_zero() {
                continue;
            }
            let rest: BigRational = (var + 1..d).map(|k| &coeffs[k] * &c[k]).sum();
            let bound = (rhs - rest) / a;
            if a.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l: BigRational| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h: BigRational| h.min(bound)));
            }
        }
        c[var] = match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => h,
            (None, None) => BigRational::zero(),
        };
    }
    let vals: Vec<BigRational> = (0..n)
        .map(|i| (0..d).map(|k| &c[k] * q(matrix[k][i])).sum())
        .collect();
    let den = vals.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let weights = vals
        .iter()
        .map(|v| (v.numer() * (&den / v.denom())).to_u64().filter(|&x| x > 0))
        .collect::<Option<Vec<u64>>>()?;
    let scale = BigRational::from_integer(den);
    Some((c.into_iter().map(|x| x * &scale).collect(), weights))
}

/// Finest grading of the ideal generated by `gens`: the columns are the
/// images of the unit vectors in `Z^n / Sat(L)` where `L` is spanned by the
/// exponent differences. The matrix is returned in Hermite form.
pub fn finest_grading(gens: &[Binomial], n: usize) -> Result<Grading> {
    if gens.is_empty() {
        return Err(Error::Empty);
    }
    let rows: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| {
            if g.n() != n {
                Err(Error::LengthMismatch {
                    expected: n,
                    found: g.n(),
                })
            } else {
                Ok(g.difference())
            }
        })
        .collect::<Result<_>>()?;
    let l = IntMatrix::from_rows(n, &rows)?;
    let (dm, _, q) = smith_normal_form(&l);
    let r = (0..dm.rows.min(dm.cols))
        .filter(|&i| !dm[(i, i)].is_zero())
        .count();
    let d = n - r;
    let mut g = IntMatrix::zeros(d, n);
    for k in 0..d {
        for i in 0..n {
            g[(k, i)] = q[(i, r + k)].clone();
        }
    }
    let h = lattice_hnf(&g);
    Grading::from_matrix(h.to_i64_rows()?)
}

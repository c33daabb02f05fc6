//! Exact dense integer linear algebra: fraction-free elimination (Bareiss),
//! characteristic polynomials, and PSD/rank certificates.

use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// Dense square matrix over the integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * &k).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `x I - self` for an integer shift `x`.
    pub fn shifted_identity(&self, x: &BigInt) -> Self {
        let mut m = IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        };
        for i in 0..self.n {
            let v = m.get(i, i) + x;
            m.set(i, i, v);
        }
        m
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        if let Some(d) = self.det_i128() {
            return d;
        }
        bareiss_det_big(&mut self.entries.clone(), self.n)
    }

    /// Exact `det(xI - self)` at an integer point.
    pub fn det_shifted(&self, x: &BigInt) -> BigInt {
        self.shifted_identity(x).det()
    }

    /// Exact rank by fraction-free elimination with full pivoting.
    pub fn rank(&self) -> usize {
        if let Some(r) = self.rank_i128() {
            return r;
        }
        bareiss_rank_big(&mut self.entries.clone(), self.n)
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        // Fast path only when entries are small enough that Hadamard-bounded
        // minors provably fit in i128.
        let mut out = Vec::with_capacity(self.entries.len());
        let mut max: i128 = 0;
        for e in &self.entries {
            let v = e.to_i128()?;
            out.push(v);
            max = max.max(v.abs());
        }
        let n = self.n as f64;
        if n == 0.0 {
            return Some(out);
        }
        // log2 |minor| <= n/2 log2(n) + n log2(max); keep a wide safety margin.
        let bits = 0.5 * n * n.log2().max(1.0) + n * ((max.max(1)) as f64).log2().max(1.0) + 4.0;
        if bits < 120.0 {
            Some(out)
        } else {
            None
        }
    }

    fn det_i128(&self) -> Option<BigInt> {
        let mut m = self.to_i128()?;
        bareiss_det_i128(&mut m, self.n).map(BigInt::from)
    }

    fn rank_i128(&self) -> Option<usize> {
        let mut m = self.to_i128()?;
        bareiss_rank_i128(&mut m, self.n)
    }

    /// Characteristic polynomial `det(xI - M)`, exact and monic.
    ///
    /// Symmetric matrices take a fraction-free route specialized to this
    /// problem family: the multiplicities of the eigenvalues 2 and -1 are read
    /// off exact ranks of `M - 2I` and `M + I`, and the deflated factor is
    /// recovered by interpolating Bareiss determinants. General matrices use
    /// the division-free Faddeev-LeVerrier recurrence.
    pub fn char_poly(&self) -> IntPolynomial {
        if self.n == 0 {
            return IntPolynomial::one();
        }
        if self.is_symmetric() {
            self.char_poly_symmetric()
        } else {
            self.char_poly_faddeev_leverrier()
        }
    }

    /// Division-free Faddeev-LeVerrier characteristic polynomial.
    pub fn char_poly_faddeev_leverrier(&self) -> IntPolynomial {
        let n = self.n;
        if n == 0 {
            return IntPolynomial::one();
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut b = IntMatrix::identity(n);
        for k in 1..=n {
            let c = self.mul(&b);
            let ck_num = -c.trace();
            let (ck, rem) = num_integer::div_rem(ck_num, BigInt::from(k));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier trace division");
            coeffs[n - k] = ck.clone();
            if k < n {
                b = c;
                for i in 0..n {
                    let v = b.get(i, i) + &ck;
                    b.set(i, i, v);
                }
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// Fraction-free characteristic polynomial for symmetric matrices.
    fn char_poly_symmetric(&self) -> IntPolynomial {
        let n = self.n;
        let two = BigInt::from(2);
        let minus_one = BigInt::from(-1);
        let p = n - self.shifted_identity(&two).rank();
        let q = n - self.shifted_identity(&minus_one).rank();
        let d = n - p - q;
        // Evaluation points avoiding the deflated roots 2 and -1.
        let points: Vec<i64> = (0..)
            .filter(|&x| x != 2)
            .take(d + 1)
            .collect();
        let mut values = Vec::with_capacity(d + 1);
        for &x in &points {
            let xb = BigInt::from(x);
            let full = self.det_shifted(&xb);
            let den = pow_big(&(&xb - &two), p) * pow_big(&(&xb + BigInt::one()), q);
            let (g, rem) = num_integer::div_rem(full, den);
            assert!(rem.is_zero(), "deflated determinant must divide exactly");
            values.push(g);
        }
        let g = interpolate_integer_poly(&points, &values);
        assert_eq!(g.degree(), d, "residual degree mismatch");
        assert!(g.is_monic(), "residual must be monic");
        let mut out = g;
        let x_minus_2 = IntPolynomial::linear(2);
        let x_plus_1 = IntPolynomial::linear(-1);
        for _ in 0..p {
            out = out.mul(&x_minus_2);
        }
        for _ in 0..q {
            out = out.mul(&x_plus_1);
        }
        out
    }

    /// Exact PSD decision plus rank.
    ///
    /// PSD is decided by fraction-free symmetric elimination with diagonal
    /// pivoting: the pivots are leading principal minors of a symmetric
    /// permutation, so their signs settle definiteness without tolerances.
    pub fn psd_rank_certificate(&self) -> Result<(bool, usize), MatrixError> {
        if !self.is_symmetric() {
            return Err(MatrixError::NotSymmetric);
        }
        let n = self.n;
        let mut m = self.entries.clone();
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for step in 0..n {
            // Any negative reduced diagonal certifies indefiniteness.
            let mut pivot_row = None;
            for i in step..n {
                let d = &m[i * n + i];
                if d.is_negative() {
                    return Ok((false, self.rank()));
                }
                if pivot_row.is_none() && d.is_positive() {
                    pivot_row = Some(i);
                }
            }
            let Some(pr) = pivot_row else {
                // All remaining diagonals are zero: PSD iff the whole block is zero.
                for i in step..n {
                    for j in step..n {
                        if !m[i * n + j].is_zero() {
                            return Ok((false, self.rank()));
                        }
                    }
                }
                return Ok((true, rank));
            };
            if pr != step {
                for j in 0..n {
                    m.swap(step * n + j, pr * n + j);
                }
                for i in 0..n {
                    m.swap(i * n + step, i * n + pr);
                }
            }
            let pivot = m[step * n + step].clone();
            for i in (step + 1)..n {
                for j in (step + 1)..n {
                    let v = (&pivot * &m[i * n + j] - &m[i * n + step] * &m[step * n + j]) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + step] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        Ok((true, rank))
    }
}

fn pow_big(base: &BigInt, exp: usize) -> BigInt {
    let mut out = BigInt::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// Lagrange interpolation through integer points, asserting an integer result.
fn interpolate_integer_poly(points: &[i64], values: &[BigInt]) -> IntPolynomial {
    assert_eq!(points.len(), values.len());
    let k = points.len();
    let mut acc = vec![BigRational::zero(); k];
    for (j, &xj) in points.iter().enumerate() {
        // basis_j(x) = prod_{i != j} (x - x_i) / (x_j - x_i)
        let mut num = vec![BigRational::one()];
        let mut den = BigRational::one();
        for (i, &xi) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = mul_linear(&num, xi);
            den *= BigRational::from(BigInt::from(xj - xi));
        }
        let y = BigRational::from(values[j].clone()) / den;
        for (t, c) in num.iter().enumerate() {
            acc[t] += c * &y;
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolation must produce integers");
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Multiplies a rational polynomial (ascending coefficients) by `(x - r)`.
fn mul_linear(p: &[BigRational], r: i64) -> Vec<BigRational> {
    let rb = BigRational::from(BigInt::from(r));
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (t, c) in p.iter().enumerate() {
        out[t + 1] += c;
        out[t] -= c * &rb;
    }
    out
}

fn bareiss_det_big(m: &mut [BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let mut found = None;
            for r in (k + 1)..n {
                if !m[r * n + k].is_zero() {
                    found = Some(r);
                    break;
                }
            }
            let Some(r) = found else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, r * n + j);
            }
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[k * n + k] * &m[i * n + j] - &m[i * n + k] * &m[k * n + j]) / &prev;
                m[i * n + j] = v;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = m[k * n + k].clone();
    }
    let d = m[n * n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn bareiss_rank_big(m: &mut [BigInt], n: usize) -> usize {
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for step in 0..n {
        // full pivot search
        let mut found = None;
        'search: for i in step..n {
            for j in step..n {
                if !m[i * n + j].is_zero() {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else {
            break;
        };
        if pi != step {
            for c in 0..n {
                m.swap(step * n + c, pi * n + c);
            }
        }
        if pj != step {
            for r in 0..n {
                m.swap(r * n + step, r * n + pj);
            }
        }
        for i in (step + 1)..n {
            for j in (step + 1)..n {
                let v =
                    (&m[step * n + step] * &m[i * n + j] - &m[i * n + step] * &m[step * n + j])
                        / &prev;
                m[i * n + j] = v;
            }
            m[i * n + step] = BigInt::zero();
        }
        prev = m[step * n + step].clone();
        rank += 1;
    }
    rank
}

fn bareiss_det_i128(m: &mut [i128], n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            let mut found = None;
            for r in (k + 1)..n {
                if m[r * n + k] != 0 {
                    found = Some(r);
                    break;
                }
            }
            let Some(r) = found else {
                return Some(0);
            };
            for j in 0..n {
                m.swap(k * n + j, r * n + j);
            }
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let a = m[k * n + k].checked_mul(m[i * n + j])?;
                let b = m[i * n + k].checked_mul(m[k * n + j])?;
                m[i * n + j] = a.checked_sub(b)?.checked_div(prev)?;
            }
            m[i * n + k] = 0;
        }
        prev = m[k * n + k];
    }
    Some(sign * m[n * n - 1])
}

fn bareiss_rank_i128(m: &mut [i128], n: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0usize;
    for step in 0..n {
        let mut found = None;
        'search: for i in step..n {
            for j in step..n {
                if m[i * n + j] != 0 {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else {
            break;
        };
        if pi != step {
            for c in 0..n {
                m.swap(step * n + c, pi * n + c);
            }
        }
        if pj != step {
            for r in 0..n {
                m.swap(r * n + step, r * n + pj);
            }
        }
        for i in (step + 1)..n {
            for j in (step + 1)..n {
                let a = m[step * n + step].checked_mul(m[i * n + j])?;
                let b = m[i * n + step].checked_mul(m[step * n + j])?;
                m[i * n + j] = a.checked_sub(b)?.checked_div(prev)?;
            }
            m[i * n + step] = 0;
        }
        prev = m[step * n + step];
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::factor_spectrum;

    fn k_n_adjacency(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m.set(i, j, BigInt::one());
                }
            }
        }
        m
    }

    #[test]
    fn char_poly_k3() {
        let a = k_n_adjacency(3);
        let p = a.char_poly();
        assert_eq!(p, IntPolynomial::from_i64(&[-2, -3, 0, 1]));
        let fl = a.char_poly_faddeev_leverrier();
        assert_eq!(p, fl);
    }

    #[test]
    fn char_poly_1x1_zero() {
        let m = IntMatrix::zeros(1);
        assert_eq!(m.char_poly(), IntPolynomial::x());
    }

    #[test]
    fn char_poly_section4_quotient() {
        // type (v) quotient at a=2, b=9 vanishes at x=2
        let q = IntMatrix::from_rows_i64(&[vec![1, 9, 2], vec![2, 8, 0], vec![2, 0, 1]]);
        let p = q.char_poly();
        assert!(p.eval_i64(2).is_zero());
        assert!(p.is_monic());
    }

    #[test]
    fn symmetric_route_matches_fl() {
        let mats = [
            IntMatrix::from_rows_i64(&[vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![1, 0, 0, 1], vec![0, 1, 1, 0]]),
            IntMatrix::from_rows_i64(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            k_n_adjacency(5),
            IntMatrix::from_rows_i64(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]),
        ];
        for m in &mats {
            assert_eq!(m.char_poly(), m.char_poly_faddeev_leverrier());
        }
    }

    #[test]
    fn det_and_rank() {
        let m = IntMatrix::from_rows_i64(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]);
        assert_eq!(m.det(), BigInt::from(24));
        assert_eq!(m.rank(), 3);
        let s = IntMatrix::from_rows_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 1, 1]]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.det(), BigInt::zero());
    }

    #[test]
    fn psd_certificates() {
        // eigenvalues of J3 are {3, 0, 0}: PSD rank 1
        let j3 = IntMatrix::from_rows_i64(&[vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]);
        assert_eq!(j3.psd_rank_certificate().unwrap(), (true, 1));
        // [[-1,1],[1,2]] has a negative leading minor
        let neg = IntMatrix::from_rows_i64(&[vec![-1, 1], vec![1, 2]]);
        assert_eq!(neg.psd_rank_certificate().unwrap(), (false, 2));
        // zero diagonal with nonzero off-diagonal is indefinite
        let off = IntMatrix::from_rows_i64(&[vec![0, 5], vec![5, 0]]);
        assert_eq!(off.psd_rank_certificate().unwrap(), (false, 2));
        // the zero matrix is PSD with rank 0
        assert_eq!(IntMatrix::zeros(3).psd_rank_certificate().unwrap(), (true, 0));
        let asym = IntMatrix::from_rows_i64(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(asym.psd_rank_certificate(), Err(MatrixError::NotSymmetric));
    }

    #[test]
    fn psd_of_a2_minus_a_minus_2i_for_k4() {
        // A^2 - A - 2I for K4 has eigenvalues {4, 0, 0, 0}
        let a = k_n_adjacency(4);
        let m = a.mul(&a).sub(&a).sub(&IntMatrix::identity(4).scale_i64(2));
        assert_eq!(m.psd_rank_certificate().unwrap(), (true, 1));
    }

    #[test]
    fn char_poly_random_point_cross_check() {
        // char_poly evaluated at integers equals Bareiss det(xI - M)
        let m = IntMatrix::from_rows_i64(&[
            vec![0, 1, 1, 1, 0],
            vec![1, 0, 1, 0, 0],
            vec![1, 1, 0, 1, 1],
            vec![1, 0, 1, 0, 1],
            vec![0, 0, 1, 1, 0],
        ]);
        let p = m.char_poly();
        for x in [-3i64, -1, 0, 1, 2, 5, 7] {
            let xb = BigInt::from(x);
            assert_eq!(p.eval(&xb), m.det_shifted(&xb));
        }
    }

    #[test]
    fn spectrum_factorization_of_k4() {
        let s = factor_spectrum(&k_n_adjacency(4).char_poly());
        assert_eq!(s.mult_two, 0);
        assert_eq!(s.mult_minus_one, 3);
        assert_eq!(s.residual, IntPolynomial::from_i64(&[-3, 1]));
    }
}

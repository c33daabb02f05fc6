//! Exact integer polynomials: arithmetic, Sturm sequences, real-root
//! isolation, and the `(x-2)^p (x+1)^q g(x)` spectrum factorization.

use num_bigint::BigInt;
use num_bigint::Sign;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
///
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}", mag)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl IntPolynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - r`.
    pub fn linear(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    /// `x^2 - t*x + d`.
    pub fn quadratic(t: i64, d: i64) -> Self {
        Self::from_i64(&[d, -t, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Sign of `p(num/den)` for `den > 0`, evaluated homogeneously so the
    /// arithmetic never leaves the integers.
    pub fn sign_at_rational(&self, num: &BigInt, den: &BigInt) -> i32 {
        debug_assert!(den.is_positive());
        if self.is_zero() {
            return 0;
        }
        let n = self.coeffs.len();
        // sum c_i num^i den^(n-1-i)
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        let mut den_pows = Vec::with_capacity(n);
        let mut d = BigInt::one();
        for _ in 0..n {
            den_pows.push(d.clone());
            d *= den;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &num_pow * &den_pows[n - 1 - i];
            num_pow *= num;
        }
        match acc.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn neg(&self) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPolynomial::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPolynomial::new(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Division with remainder by a monic divisor: `self = q * div + r`.
    ///
    /// # Panics
    /// Panics if `div` is not monic.
    pub fn div_rem_monic(&self, div: &Self) -> (Self, Self) {
        assert!(div.is_monic(), "divisor must be monic");
        let d = div.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (j, b) in div.coeffs.iter().take(d).enumerate() {
                rem[i - d + j] -= &q * b;
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        (IntPolynomial::new(quot), IntPolynomial::new(rem))
    }

    /// Exact division by a monic divisor; `None` when the remainder is nonzero.
    pub fn div_exact_monic(&self, div: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(div);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Positive gcd of all coefficients (content); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Divides out the content; sign normalized so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divides out the positive content, preserving the sign of every coefficient.
    fn div_content(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Polynomial gcd via a primitive pseudo-remainder sequence,
    /// normalized primitive with positive leading coefficient.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = rhs.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Square-free part: `self / gcd(self, self')`, primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.degree() == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive_part();
        }
        // exact by construction
        div_exact_general(&self.primitive_part(), &g)
    }

    /// Square-free factorization `self = lc * prod f_i^i` (Yun's algorithm);
    /// returns the list of `(f_i, i)` with nontrivial `f_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let p = self.primitive_part();
        if p.degree() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let mut a = p.gcd(&dp);
        let mut b = div_exact_general(&p, &a);
        let mut c = div_exact_general(&dp, &a);
        let mut out = Vec::new();
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if b.degree() == 0 {
                break;
            }
            a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = div_exact_general(&b, &a);
            c = div_exact_general(&d, &a);
            i += 1;
        }
        out
    }

    /// Cauchy root bound: every real root has |x| < bound (returned as BigInt ceil).
    pub fn cauchy_bound(&self) -> BigInt {
        if self.coeffs.len() <= 1 {
            return BigInt::one();
        }
        let lc = self.leading().abs();
        let mut m = BigInt::zero();
        for c in self.coeffs.iter().take(self.coeffs.len() - 1) {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        // 1 + ceil(max|c_i| / |lc|)
        BigInt::from(2) + m / lc
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`
    /// (rational endpoints `a = an/ad`, `b = bn/bd`, denominators positive),
    /// counted without multiplicity via Sturm's theorem on the square-free part.
    pub fn count_distinct_roots_in(
        &self,
        an: &BigInt,
        ad: &BigInt,
        bn: &BigInt,
        bd: &BigInt,
    ) -> usize {
        let sf = self.squarefree_part();
        let chain = sturm_chain(&sf);
        let va = sign_variations(&chain, an, ad);
        let vb = sign_variations(&chain, bn, bd);
        va.saturating_sub(vb)
    }

    /// Isolates all real roots with multiplicity; each root reported with a
    /// certified enclosure of width at most `tol * max(1, |root|)`.
    pub fn real_roots(&self, tol: f64) -> Vec<RealRoot> {
        let mut out = Vec::new();
        for (factor, mult) in self.squarefree_decomposition() {
            for (value, error) in isolate_squarefree_roots(&factor, tol) {
                out.push(RealRoot {
                    value,
                    error,
                    multiplicity: mult,
                });
            }
        }
        out.sort_by(|a, b| b.value.partial_cmp(&a.value).unwrap());
        out
    }
}

/// One isolated real root: certified numeric enclosure plus multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub error: f64,
    pub multiplicity: usize,
}

/// Pseudo-remainder of `a` by `b`, scaled by a positive power of `lc(b)^2`
/// so the sign pattern at any point matches the true remainder.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!b.is_zero());
    let d = b.degree();
    if d == 0 {
        return IntPolynomial::zero();
    }
    let lc = b.leading();
    let lc2 = &lc * &lc;
    let mut r = a.clone();
    while !r.is_zero() && r.degree() >= d {
        let k = r.degree() - d;
        let rl = r.leading();
        // r <- lc^2 * r - lc * rl * x^k * b; the leading terms cancel exactly.
        let mut shifted = vec![BigInt::zero(); k];
        shifted.extend(b.coeffs().iter().map(|c| c * &lc * &rl));
        let shifted = IntPolynomial::new(shifted);
        r = r.scale(&lc2).sub(&shifted);
    }
    r
}

/// Exact division for non-monic divisors, via rational-safe scaling.
/// Panics if the division is not exact.
fn div_exact_general(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return IntPolynomial::zero();
    }
    assert!(a.degree() >= b.degree(), "inexact polynomial division");
    let lc = b.leading();
    let mut rem = a.coeffs().to_vec();
    let n = rem.len();
    let d = b.degree();
    let mut quot = vec![BigInt::zero(); n - d];
    for i in (d..n).rev() {
        let (q, r) = num_integer::div_rem(rem[i].clone(), lc.clone());
        assert!(r.is_zero(), "inexact polynomial division");
        rem[i] = BigInt::zero();
        if q.is_zero() {
            continue;
        }
        for (j, c) in b.coeffs().iter().take(d).enumerate() {
            rem[i - d + j] -= &q * c;
        }
        quot[i - d] = q;
    }
    for c in rem {
        assert!(c.is_zero(), "inexact polynomial division");
    }
    IntPolynomial::new(quot)
}

/// Sturm chain of a square-free polynomial.
fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(p.clone());
    let dp = p.derivative();
    if dp.is_zero() {
        return chain;
    }
    chain.push(dp);
    loop {
        let n = chain.len();
        let r = pseudo_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        // Content removal must keep the sign, otherwise variation counts break.
        chain.push(r.neg().div_content());
        if chain.last().unwrap().degree() == 0 {
            break;
        }
    }
    chain
}

fn sign_variations(chain: &[IntPolynomial], num: &BigInt, den: &BigInt) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for p in chain {
        let s = p.sign_at_rational(num, den);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Root isolation + bisection refinement for a square-free primitive polynomial.
/// Returns `(value, error)` pairs.
fn isolate_squarefree_roots(p: &IntPolynomial, tol: f64) -> Vec<(f64, f64)> {
    if p.degree() == 0 {
        return Vec::new();
    }
    if p.degree() == 1 {
        // c0 + c1 x = 0
        let c0 = p.coeff(0);
        let c1 = p.coeff(1);
        let (q, r) = num_integer::div_rem(-c0.clone(), c1.clone());
        if r.is_zero() {
            return vec![(q.to_f64().unwrap(), 0.0)];
        }
        let v = big_ratio_to_f64(&-c0, &c1);
        return vec![(v, f64::EPSILON * v.abs().max(1.0))];
    }
    if p.degree() == 2 {
        if let Some(pair) = quadratic_roots_closed_form(p) {
            return pair;
        }
    }
    let chain = sturm_chain(p);
    let bound = p.cauchy_bound();
    let one = BigInt::one();
    let mut intervals = vec![(-bound.clone(), one.clone(), bound.clone(), one.clone())];
    let mut isolated: Vec<(BigInt, BigInt, BigInt, BigInt)> = Vec::new();
    // Bisect (a, b] until each piece holds at most one distinct root.
    while let Some((an, ad, bn, bd)) = intervals.pop() {
        let count = {
            let va = sign_variations(&chain, &an, &ad);
            let vb = sign_variations(&chain, &bn, &bd);
            va.saturating_sub(vb)
        };
        match count {
            0 => {}
            1 => isolated.push((an, ad, bn, bd)),
            _ => {
                // midpoint (an*bd + bn*ad) / (2 ad bd)
                let mn = &an * &bd + &bn * &ad;
                let md = BigInt::from(2) * &ad * &bd;
                let (mn, md) = reduce_fraction(mn, md);
                intervals.push((an, ad, mn.clone(), md.clone()));
                intervals.push((mn, md, bn, bd));
            }
        }
    }
    let mut out: Vec<(f64, f64)> = isolated
        .into_iter()
        .map(|iv| refine_root(p, iv, tol))
        .collect();
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    out
}

/// Closed-form roots of a square-free integer quadratic when the
/// coefficients are small enough that f64 keeps the arithmetic faithful.
fn quadratic_roots_closed_form(p: &IntPolynomial) -> Option<Vec<(f64, f64)>> {
    let limit = BigInt::from(1i64 << 50);
    if p.coeffs().iter().any(|c| c.abs() > limit) {
        return None;
    }
    let a = p.coeff(2).to_f64()?;
    let b = p.coeff(1).to_f64()?;
    let c = p.coeff(0).to_f64()?;
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Some(Vec::new());
    }
    let s = disc.sqrt();
    // the root of larger magnitude first, the other via c/(a r1)
    let r1 = (-b - b.signum() * s) / (2.0 * a);
    let r2 = if r1 == 0.0 { -b / a } else { c / (a * r1) };
    let mut out = vec![r1, r2];
    out.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Some(
        out.into_iter()
            .map(|r| (r, 1e-13 * r.abs().max(1.0)))
            .collect(),
    )
}

fn reduce_fraction(n: BigInt, d: BigInt) -> (BigInt, BigInt) {
    let g = num_integer::gcd(n.clone(), d.clone());
    if g.is_zero() || g.is_one() {
        (n, d)
    } else {
        (n / &g, d / g)
    }
}

fn big_ratio_to_f64(n: &BigInt, d: &BigInt) -> f64 {
    num_rational::BigRational::new(n.clone(), d.clone())
        .to_f64()
        .unwrap_or(f64::NAN)
}

/// Shrinks an isolating interval `(a, b]` (exactly one simple root inside)
/// by sign bisection until its width is below `tol * max(1, |root|)`.
fn refine_root(
    p: &IntPolynomial,
    (mut an, mut ad, mut bn, mut bd): (BigInt, BigInt, BigInt, BigInt),
    tol: f64,
) -> (f64, f64) {
    // The root lies in (a, b]; check the right endpoint for an exact hit.
    if p.sign_at_rational(&bn, &bd) == 0 {
        return (big_ratio_to_f64(&bn, &bd), 0.0);
    }
    let sb = p.sign_at_rational(&bn, &bd);
    loop {
        let af = big_ratio_to_f64(&an, &ad);
        let bf = big_ratio_to_f64(&bn, &bd);
        let width = bf - af;
        let scale = af.abs().max(bf.abs()).max(1.0);
        if width <= tol * scale {
            let mid = 0.5 * (af + bf);
            return (mid, (width * 0.5).max(f64::EPSILON * scale));
        }
        let mn = &an * &bd + &bn * &ad;
        let md = BigInt::from(2) * &ad * &bd;
        let (mn, md) = reduce_fraction(mn, md);
        let sm = p.sign_at_rational(&mn, &md);
        if sm == 0 {
            return (big_ratio_to_f64(&mn, &md), 0.0);
        }
        if sm == sb {
            bn = mn;
            bd = md;
        } else {
            an = mn;
            ad = md;
        }
    }
}

/// Exact factorization of a characteristic polynomial as
/// `(x-2)^p (x+1)^q g(x)` with `g(2) != 0`, `g(-1) != 0`.
#[derive(Clone, Debug)]
pub struct ExactSpectrum {
    pub mult_two: usize,
    pub mult_minus_one: usize,
    pub residual: IntPolynomial,
    pub residual_roots: Vec<RealRoot>,
}

impl ExactSpectrum {
    /// Degree of the source polynomial (matrix dimension).
    pub fn n(&self) -> usize {
        self.mult_two + self.mult_minus_one + self.residual.degree()
    }

    pub fn exceptional_count(&self) -> usize {
        self.residual.degree()
    }

    /// Rebuilds `(x-2)^p (x+1)^q g(x)`.
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut p = self.residual.clone();
        let x_minus_2 = IntPolynomial::linear(2);
        let x_plus_1 = IntPolynomial::linear(-1);
        for _ in 0..self.mult_two {
            p = p.mul(&x_minus_2);
        }
        for _ in 0..self.mult_minus_one {
            p = p.mul(&x_plus_1);
        }
        p
    }

    /// `(T, D)` of a monic quadratic residual `x^2 - T x + D`, if applicable.
    pub fn residual_quadratic(&self) -> Option<(BigInt, BigInt)> {
        if self.residual.degree() == 2 && self.residual.is_monic() {
            Some((-self.residual.coeff(1), self.residual.coeff(0)))
        } else {
            None
        }
    }

    /// For a monic quadratic residual: true iff its roots straddle the band,
    /// i.e. r > 2 and s < -1 (equivalent to g(2) < 0 and g(-1) < 0).
    pub fn straddles_band(&self) -> bool {
        self.residual.degree() == 2
            && self.residual.is_monic()
            && self.residual.eval_i64(2).is_negative()
            && self.residual.eval_i64(-1).is_negative()
    }

    /// Full eigenvalue multiset as floats, sorted descending.
    pub fn eigenvalues_f64(&self) -> Vec<f64> {
        let mut v = Vec::with_capacity(self.n());
        v.extend(std::iter::repeat_n(2.0, self.mult_two));
        v.extend(std::iter::repeat_n(-1.0, self.mult_minus_one));
        for r in &self.residual_roots {
            for _ in 0..r.multiplicity {
                v.push(r.value);
            }
        }
        v.sort_by(|a, b| b.partial_cmp(a).unwrap());
        v
    }
}

/// Default root-refinement tolerance.
pub const ROOT_TOL: f64 = 1e-12;

/// Exact deflation at the distinguished roots: multiplicities of 2 and -1
/// plus the residual with `g(2) != 0`, `g(-1) != 0`. No root isolation.
///
/// # Panics
/// Panics if `p` is not monic.
pub fn deflate_at_band(p: &IntPolynomial) -> (usize, usize, IntPolynomial) {
    assert!(p.is_monic(), "deflation requires a monic polynomial");
    let mut g = p.clone();
    let x_minus_2 = IntPolynomial::linear(2);
    let x_plus_1 = IntPolynomial::linear(-1);
    let mut mult_two = 0usize;
    while g.eval_i64(2).is_zero() {
        g = g.div_exact_monic(&x_minus_2).expect("exact deflation at 2");
        mult_two += 1;
    }
    let mut mult_minus_one = 0usize;
    while g.eval_i64(-1).is_zero() {
        g = g.div_exact_monic(&x_plus_1).expect("exact deflation at -1");
        mult_minus_one += 1;
    }
    (mult_two, mult_minus_one, g)
}

/// Factors a monic polynomial as `(x-2)^p (x+1)^q g(x)` by exact deflation,
/// isolating the real roots of the residual.
///
/// The reconstruction `(x-2)^p (x+1)^q g == input` is re-checked on every call.
///
/// # Panics
/// Panics if `p` is not monic.
pub fn factor_spectrum(p: &IntPolynomial) -> ExactSpectrum {
    let (mult_two, mult_minus_one, g) = deflate_at_band(p);
    let residual_roots = if g.degree() == 0 {
        Vec::new()
    } else {
        g.real_roots(ROOT_TOL)
    };
    let spec = ExactSpectrum {
        mult_two,
        mult_minus_one,
        residual: g,
        residual_roots,
    };
    assert_eq!(&spec.reconstruct(), p, "factor_spectrum round-trip");
    spec
}

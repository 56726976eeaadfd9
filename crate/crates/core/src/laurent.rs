//! Laurent polynomials in `δ` with arbitrary-precision integer coefficients,
//! exact determinants and rational-root extraction.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `δ`.
    pub fn delta() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `δ^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; fails unless the division is exact.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidInput("division by zero".into()));
        }
        let mut terms = BTreeMap::new();
        for (&e, x) in &self.terms {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return Err(Error::Violation(format!("{x} is not divisible by {c}")));
            }
            terms.insert(e, q);
        }
        Ok(LaurentPoly { terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `δ ↦ δ²`.
    pub fn substitute_square(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (2 * e, c.clone())).collect(),
        }
    }

    /// Value at a rational point. Negative exponents at `x = 0` are rejected.
    pub fn eval(&self, x: &ExactRational) -> Result<ExactRational> {
        if x.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::InvalidInput("negative power of δ evaluated at 0".into()));
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let base = if e < 0 { x.recip() } else { x.clone() };
            let term = num_traits::pow(base, e.unsigned_abs() as usize) * BigRational::from_integer(c.clone());
            acc += term;
        }
        Ok(acc)
    }

    /// Distinct rational roots in ascending order.
    pub fn rational_roots(&self) -> Result<Vec<ExactRational>> {
        let lo = self
            .min_exp()
            .ok_or_else(|| Error::InvalidInput("the zero polynomial has no finite root set".into()))?;
        let mut roots = BTreeSet::new();
        if lo > 0 {
            roots.insert(BigRational::zero());
        }
        let dense = dense::from_laurent(self, lo);
        let sqfree = dense::squarefree(&dense);
        for r in dense::isolate_rational_roots(&sqfree) {
            roots.insert(r);
        }
        Ok(roots.into_iter().collect())
    }

    fn fmt_term(f: &mut fmt::Formatter<'_>, first: bool, e: i64, c: &BigInt) -> fmt::Result {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else if neg {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        if e == 0 {
            return write!(f, "{abs}");
        }
        if !abs.is_one() {
            write!(f, "{abs}")?;
        }
        if e == 1 {
            f.write_str("δ")
        } else {
            write!(f, "δ^{e}")
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().enumerate() {
            Self::fmt_term(f, k == 0, e, c)?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
    }
    Ok(n)
}

/// Determinant of a square matrix of Laurent polynomials.
///
/// Rows and columns with a single nonzero entry are expanded first; the rest
/// is handled by Bareiss elimination over `Z[δ]` after each row has been
/// multiplied by the power of `δ` that clears its negative exponents.
pub fn det(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let (factor, rest) = strip_singletons(m);
    if factor.is_zero() {
        return Ok(factor);
    }
    let k = rest.len();
    if k == 0 {
        return Ok(factor);
    }
    let mut shift = 0i64;
    let mut dense_rows = Vec::with_capacity(k);
    for row in &rest {
        let lo = match row.iter().filter_map(LaurentPoly::min_exp).min() {
            Some(lo) => lo,
            None => return Ok(LaurentPoly::zero()),
        };
        shift += lo;
        dense_rows.push(row.iter().map(|p| dense::from_laurent(p, lo)).collect::<Vec<_>>());
    }
    let d = dense::bareiss(dense_rows);
    Ok(&factor * &dense::to_laurent(&d).shift(shift))
}

/// Determinant of `m / den`, where every entry of `m` is understood to be
/// divided by the common denominator `den`.
pub fn det_scaled(m: &[Vec<LaurentPoly>], den: &BigInt) -> Result<LaurentPoly> {
    let n = check_square(m)?;
    let d = det(m)?;
    d.div_exact_scalar(&num_traits::pow(den.clone(), n))
}

/// Repeatedly expands along rows or columns that have exactly one nonzero
/// entry. Returns the accumulated factor (with sign) and the remaining minor.
fn strip_singletons(m: &[Vec<LaurentPoly>]) -> (LaurentPoly, Vec<Vec<LaurentPoly>>) {
    let n = m.len();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut factor = LaurentPoly::one();
    loop {
        let mut hit = None;
        for (ri, &r) in rows.iter().enumerate() {
            let nz: Vec<usize> = (0..cols.len()).filter(|&ci| !m[r][cols[ci]].is_zero()).collect();
            if nz.is_empty() {
                return (LaurentPoly::zero(), Vec::new());
            }
            if nz.len() == 1 {
                hit = Some((ri, nz[0]));
                break;
            }
        }
        if hit.is_none() {
            for ci in 0..cols.len() {
                let nz: Vec<usize> =
                    (0..rows.len()).filter(|&ri| !m[rows[ri]][cols[ci]].is_zero()).collect();
                if nz.is_empty() {
                    return (LaurentPoly::zero(), Vec::new());
                }
                if nz.len() == 1 {
                    hit = Some((nz[0], ci));
                    break;
                }
            }
        }
        let Some((ri, ci)) = hit else { break };
        let entry = &m[rows[ri]][cols[ci]];
        factor = &factor * entry;
        if (ri + ci) % 2 == 1 {
            factor = -factor;
        }
        rows.remove(ri);
        cols.remove(ci);
        if rows.is_empty() {
            break;
        }
    }
    let rest = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    (factor, rest)
}

/// Determinant over the rationals by Gaussian elimination.
pub fn det_rational(m: &[Vec<ExactRational>]) -> Result<ExactRational> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<ExactRational>> = m.to_vec();
    let mut acc = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k {
            a.swap(p, k);
            acc = -acc;
        }
        let pivot = a[k][k].clone();
        acc *= &pivot;
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..n {
                let delta = &f * &a[k][c];
                a[r][c] -= delta;
            }
        }
    }
    Ok(acc)
}

/// Cofactor expansion, exponential time; used to cross-check [`det`].
pub fn det_cofactor(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut acc = LaurentPoly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &det_cofactor(&minor)?;
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    Ok(acc)
}

/// Dense univariate polynomials over `Z` and `Q` used internally.
mod dense {
    use super::*;

    /// Ascending coefficients; no trailing zeros except for the zero
    /// polynomial, which is empty.
    pub type Poly = Vec<BigInt>;
    pub type QPoly = Vec<BigRational>;

    pub fn trim<T: Zero>(p: &mut Vec<T>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    pub fn from_laurent(p: &LaurentPoly, lo: i64) -> Poly {
        let Some(hi) = p.max_exp() else { return Vec::new() };
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in p.terms() {
            out[(e - lo) as usize] = c.clone();
        }
        out
    }

    pub fn to_laurent(p: &Poly) -> LaurentPoly {
        LaurentPoly::from_terms(p.iter().enumerate().map(|(e, c)| (e as i64, c.clone())))
    }

    fn mul(a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        trim(&mut out);
        out
    }

    fn sub(a: &Poly, b: &Poly) -> Poly {
        let mut out = vec![BigInt::zero(); a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    /// Exact division `a / b`; panics if the remainder is nonzero, which
    /// cannot happen for Bareiss minors.
    fn div_exact(a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() {
            return Vec::new();
        }
        let db = b.len() - 1;
        let lead = &b[db];
        let mut rem = a.clone();
        let mut q = vec![BigInt::zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let c = &rem[k + db];
            if c.is_zero() {
                continue;
            }
            let (qk, r) = c.div_rem(lead);
            assert!(r.is_zero(), "inexact polynomial division in Bareiss step");
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &qk * bj;
            }
            q[k] = qk;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division in Bareiss step");
        trim(&mut q);
        q
    }

    pub fn bareiss(mut a: Vec<Vec<Poly>>) -> Poly {
        let n = a.len();
        let mut negate = false;
        let mut prev: Poly = vec![BigInt::one()];
        for k in 0..n {
            // Prefer the pivot of lowest degree to keep intermediate growth small.
            let pivot_row = (k..n)
                .filter(|&r| !a[r][k].is_empty())
                .min_by_key(|&r| a[r][k].len());
            let Some(p) = pivot_row else { return Vec::new() };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = mul(&a[i][j], &a[k][k]);
                    let rhs = mul(&a[i][k], &a[k][j]);
                    let num = sub(&lhs, &rhs);
                    a[i][j] = if k == 0 { num } else { div_exact(&num, &prev) };
                }
                a[i][k] = Vec::new();
            }
            prev = a[k][k].clone();
        }
        let mut d = a[n - 1][n - 1].clone();
        if negate {
            for c in &mut d {
                *c = -c.clone();
            }
        }
        d
    }

    fn content(p: &Poly) -> BigInt {
        p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn primitive(p: &Poly) -> Poly {
        let g = content(p);
        if g.is_zero() {
            return p.clone();
        }
        let mut out: Poly = p.iter().map(|c| c / &g).collect();
        if out.last().is_some_and(|c| c.is_negative()) {
            for c in &mut out {
                *c = -c.clone();
            }
        }
        out
    }

    fn derivative(p: &Poly) -> Poly {
        let mut out: Poly = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        trim(&mut out);
        out
    }

    /// Pseudo-remainder of `a` by `b`.
    fn prem(a: &Poly, b: &Poly) -> Poly {
        let mut r = a.clone();
        let db = b.len() - 1;
        let lead = b[db].clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let c = r[dr].clone();
            for x in r.iter_mut() {
                *x *= &lead;
            }
            for (j, bj) in b.iter().enumerate() {
                r[dr - db + j] -= &c * bj;
            }
            trim(&mut r);
        }
        r
    }

    fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (primitive(a), primitive(b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = prem(&x, &y);
            x = y;
            y = primitive(&r);
        }
        primitive(&x)
    }

    /// Squarefree part, primitive with positive leading coefficient.
    pub fn squarefree(p: &Poly) -> Poly {
        let p = primitive(p);
        if p.len() <= 2 {
            return p;
        }
        let g = gcd(&p, &derivative(&p));
        if g.len() <= 1 {
            return p;
        }
        primitive(&divide_q(&p, &g))
    }

    fn to_q(p: &Poly) -> QPoly {
        p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }

    /// Division over `Q` with the result scaled back to an integer polynomial.
    fn divide_q(a: &Poly, b: &Poly) -> Poly {
        let (q, _) = qdivrem(&to_q(a), &to_q(b));
        let den = q.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        q.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect()
    }

    fn qdivrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
        let mut r = a.clone();
        let db = b.len() - 1;
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db] / &b[db];
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let t = &c * bj;
                r[k + j] -= t;
            }
            q[k] = c;
        }
        trim(&mut r);
        trim(&mut q);
        (q, r)
    }

    fn qeval(p: &QPoly, x: &BigRational) -> BigRational {
        p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn sign_changes(seq: &[QPoly], x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in seq {
            let v = qeval(p, x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Simplest rational (smallest denominator) in the closed interval `[a, b]`.
    fn simplest_between(a: &BigRational, b: &BigRational) -> BigRational {
        if !a.is_positive() && !b.is_negative() {
            return BigRational::zero();
        }
        if b.is_negative() {
            return -simplest_between(&-b, &-a);
        }
        let fl = a.floor();
        if &fl == a {
            return fl;
        }
        let next = &fl + BigRational::one();
        if &next <= b {
            return next;
        }
        let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
        fl + inner.recip()
    }

    /// Rational roots of a squarefree integer polynomial with nonzero
    /// constant term, via Sturm isolation. Two distinct rationals whose
    /// denominators divide the leading coefficient `l` differ by at least
    /// `1/l²`, so once an isolating interval is shorter than that the only
    /// candidate is the simplest rational inside it.
    pub fn isolate_rational_roots(p: &Poly) -> Vec<BigRational> {
        if p.len() <= 1 {
            return Vec::new();
        }
        let lead = p.last().unwrap().abs();
        let qp = to_q(p);
        let mut seq = vec![qp.clone(), to_q(&derivative(p))];
        loop {
            let n = seq.len();
            let (_, r) = qdivrem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(r.into_iter().map(|c| -c).collect());
        }
        let lq = BigRational::from_integer(lead.clone());
        let bound = p[..p.len() - 1]
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lq)
            .fold(BigRational::zero(), |m, v| if v > m { v } else { m })
            + BigRational::one();
        let width = BigRational::new(BigInt::one(), BigInt::from(2) * &lead * &lead);

        let mut found = BTreeSet::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            let count = sign_changes(&seq, &a) - sign_changes(&seq, &b);
            if count == 0 {
                continue;
            }
            if count == 1 && &b - &a < width {
                let s = simplest_between(&a, &b);
                if qeval(&qp, &s).is_zero() {
                    found.insert(s);
                }
                continue;
            }
            // Split at a point that is not itself a root; a root hit this way
            // is recorded directly.
            let mut k = 2i64;
            let c = loop {
                let c = &a + (&b - &a) * BigRational::new(BigInt::one(), BigInt::from(k));
                if qeval(&qp, &c).is_zero() {
                    found.insert(c);
                    k += 1;
                } else {
                    break c;
                }
            };
            stack.push((a, c.clone()));
            stack.push((c, b));
        }
        found.into_iter().collect()
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        fn p(cs: &[i64]) -> Poly {
            cs.iter().map(|&c| BigInt::from(c)).collect()
        }

        #[test]
        fn squarefree_drops_repeats() {
            // (x - 1)^2 (x + 2) = x^3 - 3x + 2
            assert_eq!(squarefree(&p(&[2, -3, 0, 1])), p(&[-2, 1, 1]));
        }

        #[test]
        fn simplest_rational() {
            let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
            assert_eq!(simplest_between(&r(1, 3), &r(1, 2)), r(1, 2));
            assert_eq!(simplest_between(&r(3, 10), &r(4, 10)), r(1, 3));
            assert_eq!(simplest_between(&r(-7, 5), &r(-6, 5)), r(-4, 3));
        }

        #[test]
        fn isolates_fractional_roots() {
            // (3x - 2)(2x + 5)(x - 7) = 6x^3 - 31x^2 - 87x + 70
            let roots = isolate_rational_roots(&p(&[70, -87, -31, 6]));
            let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
            assert_eq!(roots, vec![r(-5, 2), r(2, 3), r(7, 1)]);
        }
    }
}

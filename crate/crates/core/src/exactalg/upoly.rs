//! Dense univariate polynomials over the integers in the grid variable `u`,
//! where `q = u^2`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::HalfInt;

/// Integer polynomial in `u`. Coefficient `i` belongs to `u^i`; trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UPoly {
    coeffs: Vec<BigInt>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * u^exp`.
    pub fn monomial(exp: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        UPoly { coeffs }
    }

    /// `q^k = u^(2k)`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(2 * k, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    /// Builds a q-polynomial from small coefficients of `q^0, q^1, ...`.
    pub fn from_q_coeffs(q_coeffs: &[i64]) -> Self {
        let mut coeffs = vec![BigInt::zero(); 2 * q_coeffs.len()];
        for (i, &c) in q_coeffs.iter().enumerate() {
            coeffs[2 * i] = BigInt::from(c);
        }
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from sparse `(q_exponent, coefficient)` pairs, where
    /// the exponent may be a half-integer.
    pub fn from_q_terms(terms: &[(HalfInt, i64)]) -> Result<Self> {
        let mut acc = Self::zero();
        for &(e, c) in terms {
            let e = usize::try_from(e.twice())
                .map_err(|_| Error::InvalidParameter("negative exponent"))?;
            acc += &Self::monomial(e, c);
        }
        Ok(acc)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree in `u`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// True when every `u`-exponent is even, i.e. the polynomial lives in `Z[q]`.
    pub fn is_q_poly(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Coefficients with respect to `q`; fails on odd `u`-exponents.
    pub fn q_coeffs(&self) -> Result<Vec<BigInt>> {
        if !self.is_q_poly() {
            return Err(Error::OddUExponent);
        }
        Ok(self.coeffs.iter().step_by(2).cloned().collect())
    }

    pub fn from_q_bigcoeffs(q: Vec<BigInt>) -> Self {
        let mut coeffs = vec![BigInt::zero(); 2 * q.len()];
        for (i, c) in q.into_iter().enumerate() {
            coeffs[2 * i] = c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    /// Division by `u^k`; the caller guarantees `k <= valuation`.
    pub fn unshift(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        UPoly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer content (gcd of coefficients), always non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lead().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact quotient `self / d`.
    ///
    /// When the division leaves a remainder the error carries it, provided the
    /// leading coefficient of `d` is `±1` (otherwise the remainder would not be
    /// integral and only the failure is reported).
    pub fn div_exact(&self, d: &UPoly) -> Result<UPoly> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(sd) = self.degree() else {
            return Ok(Self::zero());
        };
        let unit_lead = d.coeffs[dd].abs().is_one();
        if sd < dd {
            return Err(Error::NotDivisible {
                remainder: Some(self.clone()),
            });
        }
        if let (Some(vs), Some(vd)) = (self.valuation(), d.valuation()) {
            if vs < vd && !unit_lead {
                return Err(Error::NotDivisible { remainder: None });
            }
        }
        let lc = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            if rem[i + dd].is_zero() {
                continue;
            }
            let (qq, r) = rem[i + dd].div_rem(lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible { remainder: None });
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &qq * dc;
                }
            }
            quo[i] = qq;
        }
        let rem = Self::from_coeffs(rem);
        if !rem.is_zero() {
            return Err(Error::NotDivisible {
                remainder: Some(rem),
            });
        }
        Ok(Self::from_coeffs(quo))
    }

    /// Pseudo-remainder of `self` by `d` (scaled by powers of the leading coefficient of `d`).
    fn pseudo_rem(&self, d: &UPoly) -> UPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.lead().unwrap().clone();
            r = &r.scale(&lc) - &d.shift(rd - dd).scale(&lr);
        }
        r
    }

    /// Greatest common divisor over `Z[u]`, normalized to positive leading coefficient.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&cont)
    }

    /// Exact evaluation at a rational value of `u`.
    pub fn eval_u(&self, u: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact evaluation at a rational value of `q`; requires a q-polynomial.
    pub fn eval_q(&self, q: &BigRational) -> Result<BigRational> {
        let qc = self.q_coeffs()?;
        let mut acc = BigRational::zero();
        for c in qc.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    pub fn eval_q_int(&self, q: i64) -> Result<BigRational> {
        self.eval_q(&BigRational::from_integer(BigInt::from(q)))
    }

    /// Formal derivative with respect to `q`; requires a q-polynomial.
    pub fn derivative_q(&self) -> Result<UPoly> {
        let qc = self.q_coeffs()?;
        let d: Vec<BigInt> = qc
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Ok(Self::from_q_bigcoeffs(d))
    }

    /// Formal derivative with respect to `u`.
    pub fn derivative_u(&self) -> UPoly {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `q -> -q`; requires a q-polynomial.
    pub fn negate_q(&self) -> Result<UPoly> {
        let mut qc = self.q_coeffs()?;
        for c in qc.iter_mut().skip(1).step_by(2) {
            *c = -core::mem::take(c);
        }
        Ok(Self::from_q_bigcoeffs(qc))
    }

    /// `u^e -> u^(e*k)` for a positive integer `k`.
    pub fn stretch(&self, k: usize) -> UPoly {
        assert!(k > 0);
        if k == 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (e, c) in self.terms() {
            coeffs[e * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// `q -> q^k` for a positive half-integer `k`, acting on `u`-exponents as `e -> e*k`.
    /// Fails when some `e*k` is not an integer.
    pub fn subst_q_power_pos(&self, k: HalfInt) -> Result<UPoly> {
        let twice = k.twice();
        if twice <= 0 {
            return Err(Error::InvalidParameter("power must be positive"));
        }
        let twice = twice as usize;
        if twice.is_multiple_of(2) {
            return Ok(self.stretch(twice / 2));
        }
        if self.terms().any(|(e, _)| !(e * twice).is_multiple_of(2)) {
            return Err(Error::OddUExponent);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * twice / 2 + 1];
        for (e, c) in self.terms() {
            coeffs[e * twice / 2] = c.clone();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    fn small_coeffs(&self) -> Option<(Vec<i64>, u64)> {
        let mut max = 0u64;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let v = c.to_i64()?;
            max = max.max(v.unsigned_abs());
            out.push(v);
        }
        Some((out, max))
    }
}

fn mul_polys(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_zero() || b.is_zero() {
        return UPoly::zero();
    }
    let n = a.coeffs.len() + b.coeffs.len() - 1;
    if let (Some((sa, ma)), Some((sb, mb))) = (a.small_coeffs(), b.small_coeffs()) {
        let len = a.coeffs.len().min(b.coeffs.len()) as u128;
        let bound = (ma as u128)
            .checked_mul(mb as u128)
            .and_then(|p| p.checked_mul(len));
        if bound.is_some_and(|b| b < i128::MAX as u128) {
            let mut out = vec![0i128; n];
            for (i, &x) in sa.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let x = x as i128;
                for (o, &y) in out[i..].iter_mut().zip(sb.iter()) {
                    *o += x * y as i128;
                }
            }
            return UPoly::from_coeffs(out.into_iter().map(BigInt::from).collect());
        }
    }
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    UPoly::from_coeffs(out)
}

impl AddAssign<&UPoly> for UPoly {
    fn add_assign(&mut self, rhs: &UPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&UPoly> for UPoly {
    fn sub_assign(&mut self, rhs: &UPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        mul_polys(self, rhs)
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(mut self, rhs: UPoly) -> UPoly {
        self += &rhs;
        self
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(mut self, rhs: UPoly) -> UPoly {
        self -= &rhs;
        self
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        mul_polys(&self, &rhs)
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -self.clone()
    }
}

impl From<i64> for UPoly {
    fn from(c: i64) -> Self {
        UPoly::constant(c)
    }
}

/// Writes `q^(e/2)` for `u^e`, ascending in `q`.
pub(crate) fn fmt_q_power(f: &mut fmt::Formatter<'_>, e: usize) -> fmt::Result {
    match e {
        0 => Ok(()),
        2 => f.write_str("q"),
        e if e % 2 == 0 => write!(f, "q^{}", e / 2),
        e => write!(f, "q^({}/2)", e),
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                fmt_q_power(f, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_q_coeffs(c)
    }

    #[test]
    fn ring_examples() {
        // (1 - q) + q = 1
        assert_eq!(&q(&[1, 0, 0]) + &UPoly::zero(), UPoly::one());
        assert_eq!(&q(&[1, -1]) + &q(&[0, 1]), UPoly::one());
        assert_eq!(&q(&[1, 1]) * &q(&[1, -1]), q(&[1, 0, -1]));
        // (1-q)(1-q^3) = 1 - q - q^3 + q^4
        assert_eq!(&q(&[1, -1]) * &q(&[1, 0, 0, -1]), q(&[1, -1, 0, -1, 1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(q(&[1, 0, -1]).div_exact(&q(&[1, -1])).unwrap(), q(&[1, 1]));
        assert_eq!(
            q(&[1, -1, 0, 0, 1, -1]).div_exact(&q(&[1, -1])).unwrap(),
            q(&[1, 0, 0, 0, 1])
        );
        match q(&[1, 0, -1]).div_exact(&q(&[1, 0, 1])) {
            Err(Error::NotDivisible { remainder: Some(r) }) => assert_eq!(r, UPoly::constant(2)),
            other => panic!("{:?}", other),
        }
        assert_eq!(
            UPoly::one().div_exact(&UPoly::zero()),
            Err(Error::DivisionByZero)
        );
        // non-unit leading coefficient with a fractional quotient
        assert!(matches!(
            UPoly::constant(3).div_exact(&UPoly::constant(2)),
            Err(Error::NotDivisible { remainder: None })
        ));
    }

    #[test]
    fn evaluation() {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        assert_eq!(q(&[1, 1, 1]).eval_q_int(1).unwrap(), r(3));
        assert_eq!(q(&[1, -1, 0, -1, 1]).eval_q_int(-1).unwrap(), r(4));
        assert_eq!(
            UPoly::from_coeffs(vec![1.into(), 1.into()]).eval_q_int(1),
            Err(Error::OddUExponent)
        );
        assert_eq!(
            UPoly::from_coeffs(vec![1.into(), 1.into()]).eval_u(&r(1)),
            r(2)
        );
    }

    #[test]
    fn q_power_substitution() {
        assert_eq!(
            q(&[1, 1]).subst_q_power_pos(HalfInt::int(2)).unwrap(),
            q(&[1, 0, 1])
        );
        let half = q(&[1, 1])
            .subst_q_power_pos(HalfInt::from_twice(1))
            .unwrap();
        assert_eq!(half, UPoly::from_coeffs(vec![1.into(), 1.into()]));
        assert_eq!(half.subst_q_power_pos(HalfInt::int(2)).unwrap(), q(&[1, 1]));
    }

    #[test]
    fn gcd_of_products() {
        let a = &q(&[1, -1]) * &q(&[1, 1, 1]);
        let b = &q(&[1, -1]) * &q(&[1, 1]);
        assert_eq!(a.gcd(&b), q(&[-1, 1]).primitive_part());
        assert_eq!(q(&[2, 4]).gcd(&q(&[6])), UPoly::constant(2));
    }

    #[test]
    fn negate_q_and_derivative() {
        assert_eq!(q(&[1, 1, 1]).negate_q().unwrap(), q(&[1, -1, 1]));
        assert_eq!(q(&[1, 1, 1]).derivative_q().unwrap(), q(&[1, 2]));
    }
}

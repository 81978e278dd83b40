//! Sparse polynomials in `s`, `t`, `x` whose coefficients are [`UPoly`]s in `u`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::UPoly;

/// One of the three symbols carried by [`MPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    S,
    T,
    X,
}

impl Sym {
    pub const ALL: [Sym; 3] = [Sym::S, Sym::T, Sym::X];

    pub const fn index(self) -> usize {
        match self {
            Sym::S => 0,
            Sym::T => 1,
            Sym::X => 2,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Sym::S => "s",
            Sym::T => "t",
            Sym::X => "x",
        }
    }
}

/// Exponents of `(s, t, x)`.
pub type Exps = [u32; 3];

/// Exponents of `(u, s, t, x)`, possibly negative. Used for Laurent monomials.
pub type LExps = [i64; 4];

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MPoly {
    terms: BTreeMap<Exps, UPoly>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from(UPoly::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from(UPoly::constant(c))
    }

    pub fn sym(s: Sym) -> Self {
        let mut e = [0; 3];
        e[s.index()] = 1;
        Self::monomial(e, UPoly::one())
    }

    pub fn monomial(exps: Exps, coeff: UPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MPoly { terms }
    }

    /// `c * u^ue * s^es * t^et * x^ex`.
    pub fn term(c: impl Into<BigInt>, ue: usize, exps: Exps) -> Self {
        Self::monomial(exps, UPoly::monomial(ue, c))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, UPoly)>) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn add_term(&mut self, e: Exps, c: &UPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &UPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exps) -> Option<&UPoly> {
        self.terms.get(e)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Number of `(u-exponent, monomial)` pairs with a nonzero coefficient.
    pub fn num_scalar_terms(&self) -> usize {
        self.terms.values().map(|c| c.num_terms()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).is_some_and(|c| c.is_one())
    }

    /// True when no symbol occurs.
    pub fn is_upoly(&self) -> bool {
        self.terms.keys().all(|k| *k == [0, 0, 0])
    }

    pub fn to_upoly(&self) -> Result<UPoly> {
        if !self.is_upoly() {
            return Err(Error::InvalidParameter(
                "expression still contains s, t or x",
            ));
        }
        Ok(self.terms.get(&[0, 0, 0]).cloned().unwrap_or_default())
    }

    pub fn degree(&self, s: Sym) -> Option<u32> {
        self.terms.keys().map(|k| k[s.index()]).max()
    }

    /// Degree in `u` over all coefficients.
    pub fn u_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.degree()).max()
    }

    /// Leading term in lexicographic `(s, t, x)` order.
    pub fn lead(&self) -> Option<(&Exps, &UPoly)> {
        self.terms.iter().next_back()
    }

    /// Largest monomial `u^a s^b t^c x^d` dividing every term.
    pub fn monomial_content(&self) -> [u32; 4] {
        let mut out = [u32::MAX; 4];
        for (k, c) in &self.terms {
            out[0] = out[0].min(c.valuation().unwrap_or(0) as u32);
            for i in 0..3 {
                out[i + 1] = out[i + 1].min(k[i]);
            }
        }
        if self.terms.is_empty() {
            return [0; 4];
        }
        out
    }

    /// Gcd of all integer coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            for (_, x) in c.terms() {
                g = g.gcd(x);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    pub fn mul_monomial(&self, m: [u32; 4]) -> Self {
        if m == [0; 4] {
            return self.clone();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    (
                        [k[0] + m[1], k[1] + m[2], k[2] + m[3]],
                        c.shift(m[0] as usize),
                    )
                })
                .collect(),
        }
    }

    /// Divides by a monomial that is known to divide every term.
    pub fn div_monomial(&self, m: [u32; 4]) -> Self {
        if m == [0; 4] {
            return self.clone();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    (
                        [k[0] - m[1], k[1] - m[2], k[2] - m[3]],
                        c.unshift(m[0] as usize),
                    )
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v.scale(c))).collect(),
        }
    }

    /// Divides every integer coefficient by `c`, which must divide them exactly.
    pub fn div_int(&self, c: &BigInt) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    (
                        *k,
                        UPoly::from_coeffs(v.coeffs().iter().map(|x| x / c).collect()),
                    )
                })
                .collect(),
        }
    }

    pub fn scale_upoly(&self, c: &UPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
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

    /// Sign of the leading integer coefficient.
    pub fn lead_is_negative(&self) -> bool {
        self.lead()
            .and_then(|(_, c)| c.lead())
            .is_some_and(|l| l.is_negative())
    }

    /// Exact quotient `self / d` in `Z[u][s, t, x]`, or `None` when `d` does
    /// not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (dk, dc) = d.lead()?;
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if d.terms.len() == 1 {
            let mut out = BTreeMap::new();
            for (k, c) in &self.terms {
                if (0..3).any(|i| k[i] < dk[i]) {
                    return None;
                }
                let q = c.div_exact(dc).ok()?;
                out.insert([k[0] - dk[0], k[1] - dk[1], k[2] - dk[2]], q);
            }
            return Some(MPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        while let Some((rk, rc)) = rem.lead() {
            if (0..3).any(|i| rk[i] < dk[i]) {
                return None;
            }
            let qk = [rk[0] - dk[0], rk[1] - dk[1], rk[2] - dk[2]];
            let qc = rc.div_exact(dc).ok()?;
            for (k, c) in &d.terms {
                let e = [k[0] + qk[0], k[1] + qk[1], k[2] + qk[2]];
                rem.add_term(e, &-(c * &qc));
            }
            quo.terms.insert(qk, qc);
        }
        Some(quo)
    }

    /// Applies a term-wise map to a Laurent polynomial.
    ///
    /// `f` sends the term `u^e * m` (with unit coefficient) to a multiplier and
    /// new Laurent exponents `(u, s, t, x)`. The result is returned as a
    /// polynomial together with the monomial it must be divided by.
    pub fn transform(
        &self,
        mut f: impl FnMut(usize, &Exps) -> Result<(BigInt, LExps)>,
    ) -> Result<(MPoly, [u32; 4])> {
        let mut acc: BTreeMap<LExps, BigInt> = BTreeMap::new();
        for (k, c) in &self.terms {
            for (e, x) in c.terms() {
                let (m, ne) = f(e, k)?;
                if m.is_zero() {
                    continue;
                }
                let v = acc.entry(ne).or_insert_with(BigInt::zero);
                *v += x * m;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        let mut low = [0i64; 4];
        for k in acc.keys() {
            for i in 0..4 {
                low[i] = low[i].min(k[i]);
            }
        }
        let mut by_key: BTreeMap<Exps, Vec<(usize, BigInt)>> = BTreeMap::new();
        for (k, v) in acc {
            let ue = (k[0] - low[0]) as usize;
            let key = [
                (k[1] - low[1]) as u32,
                (k[2] - low[2]) as u32,
                (k[3] - low[3]) as u32,
            ];
            by_key.entry(key).or_default().push((ue, v));
        }
        let mut terms = BTreeMap::new();
        for (key, list) in by_key {
            let deg = list.iter().map(|(e, _)| *e).max().unwrap_or(0);
            let mut coeffs = alloc::vec![BigInt::zero(); deg + 1];
            for (e, v) in list {
                coeffs[e] = v;
            }
            terms.insert(key, UPoly::from_coeffs(coeffs));
        }
        let shift = [
            (-low[0]) as u32,
            (-low[1]) as u32,
            (-low[2]) as u32,
            (-low[3]) as u32,
        ];
        Ok((MPoly { terms }, shift))
    }

    /// Splits by powers of one symbol: `self = sum_k c_k * sym^k`.
    pub fn collect(&self, s: Sym) -> BTreeMap<u32, MPoly> {
        let i = s.index();
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let mut k2 = *k;
            k2[i] = 0;
            out.entry(k[i]).or_default().terms.insert(k2, c.clone());
        }
        out
    }

    /// Parity of the exponents of `s`: `Some(0)` all even, `Some(1)` all odd,
    /// `None` mixed. The zero polynomial counts as even.
    pub fn parity(&self, s: Sym) -> Option<u32> {
        let mut p = None;
        for k in self.terms.keys() {
            let e = k[s.index()] % 2;
            match p {
                None => p = Some(e),
                Some(q) if q != e => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }
}

impl From<UPoly> for MPoly {
    fn from(c: UPoly) -> Self {
        Self::monomial([0, 0, 0], c)
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c);
        }
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let mut out = MPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let k = [ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]];
                out.add_term(k, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, k: &Exps) -> fmt::Result {
    let mut first = true;
    for s in Sym::ALL {
        let e = k[s.index()];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(s.name())?;
        } else {
            write!(f, "{}^{}", s.name(), e)?;
        }
    }
    Ok(())
}

/// Descending in `s` (then `t`, `x`), each coefficient ascending in `q`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if *k == [0, 0, 0] {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                fmt_monomial(f, k)?;
            } else {
                write!(f, "({})*", c)?;
                fmt_monomial(f, k)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> MPoly {
        MPoly::sym(Sym::S)
    }

    fn qp(c: &[i64]) -> MPoly {
        MPoly::from(UPoly::from_q_coeffs(c))
    }

    #[test]
    fn product_and_division() {
        // (1 - s)(1 - q s) = 1 - (1 + q) s + q s^2
        let a = &MPoly::one() - &s();
        let b = &MPoly::one() - &s().scale_upoly(&UPoly::q_pow(1));
        let p = &a * &b;
        let expect = &(&MPoly::one() - &s().scale_upoly(&UPoly::from_q_coeffs(&[1, 1])))
            + &s().pow(2).scale_upoly(&UPoly::q_pow(1));
        assert_eq!(p, expect);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(p.div_exact(&(&MPoly::one() + &s())), None);
    }

    #[test]
    fn division_by_pure_q_factor() {
        let a = &qp(&[1, -1]) * &(&s() + &qp(&[0, 1]));
        assert_eq!(a.div_exact(&qp(&[1, -1])), Some(&s() + &qp(&[0, 1])));
        assert_eq!(a.div_exact(&qp(&[1, 1])), None);
    }

    #[test]
    fn laurent_transform_reports_shift() {
        // s -> 1/s applied to 1 + s + s^2 gives (s^2 + s + 1)/s^2
        let p = &(&MPoly::one() + &s()) + &s().pow(2);
        let (r, shift) = p
            .transform(|e, k| Ok((BigInt::one(), [e as i64, -(k[0] as i64), 0, 0])))
            .unwrap();
        assert_eq!(r, p);
        assert_eq!(shift, [0, 2, 0, 0]);
    }

    #[test]
    fn contents() {
        let p = MPoly::term(6, 4, [2, 1, 0]) + MPoly::term(-4, 2, [1, 1, 0]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.monomial_content(), [2, 1, 1, 0]);
        assert_eq!(p.parity(Sym::T), Some(1));
        assert_eq!(p.parity(Sym::S), None);
    }
}

//! Rational functions in `u, s, t, x` with a factored denominator.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

use super::{HalfInt, LExps, MPoly, QRat, Sym, UPoly};

/// `scalar * u^a s^b t^c x^d * prod atom^e`. Atoms are primitive, free of
/// monomial factors and have a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Denom {
    scalar: BigInt,
    mono: [u32; 4],
    atoms: BTreeMap<MPoly, u32>,
}

impl Denom {
    pub fn one() -> Self {
        Denom {
            scalar: BigInt::one(),
            mono: [0; 4],
            atoms: BTreeMap::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.mono == [0; 4] && self.atoms.is_empty()
    }

    pub fn scalar(&self) -> &BigInt {
        &self.scalar
    }

    pub fn monomial(&self) -> [u32; 4] {
        self.mono
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&MPoly, u32)> {
        self.atoms.iter().map(|(a, e)| (a, *e))
    }

    /// True when only `u` occurs in the denominator.
    pub fn is_q_only(&self) -> bool {
        self.mono[1..] == [0, 0, 0] && self.atoms.keys().all(|a| a.is_upoly())
    }

    pub fn to_mpoly(&self) -> MPoly {
        let mut out = mono_mpoly(self.mono).scale(&self.scalar);
        for (a, e) in &self.atoms {
            out = &out * &a.pow(*e);
        }
        out
    }

    fn mul(&self, other: &Denom) -> Denom {
        let mut atoms = self.atoms.clone();
        for (a, e) in &other.atoms {
            *atoms.entry(a.clone()).or_insert(0) += e;
        }
        Denom {
            scalar: &self.scalar * &other.scalar,
            mono: add4(self.mono, other.mono),
            atoms,
        }
    }

    /// Common multiple taking the larger exponent of every factor.
    pub fn lcm_with(&self, other: &Denom) -> Denom {
        self.lcm(other)
    }

    fn lcm(&self, other: &Denom) -> Denom {
        let mut atoms = self.atoms.clone();
        for (a, e) in &other.atoms {
            let v = atoms.entry(a.clone()).or_insert(0);
            *v = (*v).max(*e);
        }
        let mono = core::array::from_fn(|i| self.mono[i].max(other.mono[i]));
        Denom {
            scalar: self.scalar.lcm(&other.scalar),
            mono,
            atoms,
        }
    }

    /// `self / sub` as a polynomial; `sub` must divide `self` factor-wise.
    fn cofactor(&self, sub: &Denom) -> MPoly {
        let mono = core::array::from_fn(|i| self.mono[i] - sub.mono[i]);
        let mut out = mono_mpoly(mono).scale(&(&self.scalar / &sub.scalar));
        for (a, e) in &self.atoms {
            let d = e - sub.atoms.get(a).copied().unwrap_or(0);
            if d > 0 {
                out = &out * &a.pow(d);
            }
        }
        out
    }
}

fn add4(a: [u32; 4], b: [u32; 4]) -> [u32; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub(crate) fn mono_mpoly(m: [u32; 4]) -> MPoly {
    MPoly::term(1, m[0] as usize, [m[1], m[2], m[3]])
}

/// Coefficients of the `d`-th cyclotomic polynomial.
pub fn cyclotomic(d: u32) -> Vec<BigInt> {
    assert!(d > 0);
    let mut num = UPoly::one();
    let mut den = UPoly::one();
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        let f = &UPoly::monomial(e as usize, 1) - &UPoly::one();
        match mobius(d / e) {
            1 => num = &num * &f,
            -1 => den = &den * &f,
            _ => {}
        }
    }
    num.div_exact(&den)
        .expect("cyclotomic division is exact")
        .into_coeffs()
}

fn mobius(mut n: u32) -> i32 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// `Y^phi(d) * Phi_d(X / Y)` for monomials `X`, `Y` given by exponents on `(u, s, t, x)`.
fn homogeneous_cyclotomic(d: u32, x: [u32; 4], y: [u32; 4]) -> MPoly {
    let c = cyclotomic(d);
    let phi = (c.len() - 1) as u32;
    let mut out = MPoly::zero();
    for (i, ci) in c.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let i = i as u32;
        let mut m = [0u32; 4];
        for j in 0..4 {
            m[j] = x[j] * i + y[j] * (phi - i);
        }
        out += &MPoly::term(ci.clone(), m[0] as usize, [m[1], m[2], m[3]]);
    }
    out
}

fn sign_normalize(p: MPoly) -> (bool, MPoly) {
    if p.lead_is_negative() {
        (true, -p)
    } else {
        (false, p)
    }
}

/// Splits a nonzero polynomial as `scalar * monomial * prod atoms`.
///
/// Binomials `a*M + b*N` with `|a| = |b|` are split into homogeneous
/// cyclotomic factors; everything else becomes a single atom.
fn atomize(p: &MPoly) -> (BigInt, [u32; 4], Vec<MPoly>) {
    debug_assert!(!p.is_zero());
    let mono = p.monomial_content();
    let mut scalar = p.content();
    let mut rest = p.div_monomial(mono).div_int(&scalar);
    let mut atoms = Vec::new();
    if rest.is_upoly() && rest.to_upoly().is_ok_and(|c| c.is_constant()) {
        if rest.lead_is_negative() {
            scalar = -scalar;
        }
        return (scalar, mono, atoms);
    }
    let mut neg;
    let scalar_terms: Vec<([u32; 4], BigInt)> = rest
        .terms()
        .flat_map(|(k, c)| {
            c.terms()
                .map(move |(e, v)| ([e as u32, k[0], k[1], k[2]], v.clone()))
        })
        .collect();
    if scalar_terms.len() == 2
        && scalar_terms[0].1.abs().is_one()
        && scalar_terms[1].1.abs().is_one()
    {
        let (e1, c1) = &scalar_terms[0];
        let (e2, c2) = &scalar_terms[1];
        let mut g = 0u32;
        for v in e1.iter().chain(e2.iter()) {
            g = g.gcd(v);
        }
        let x = e1.map(|v| v / g);
        let y = e2.map(|v| v / g);
        let same = c1 == c2;
        neg = c1.is_negative();
        let divs: Vec<u32> = if same {
            (1..=2 * g)
                .filter(|d| (2 * g).is_multiple_of(*d) && !g.is_multiple_of(*d))
                .collect()
        } else {
            (1..=g).filter(|d| g.is_multiple_of(*d)).collect()
        };
        // X^g - Y^g = prod_{d | g} Phi_d(X, Y); X^g + Y^g = prod over d | 2g, d not dividing g
        for d in divs {
            let (n, f) = sign_normalize(homogeneous_cyclotomic(d, x, y));
            neg ^= n;
            atoms.push(f);
        }
    } else {
        let (n, f) = sign_normalize(core::mem::take(&mut rest));
        neg = n;
        atoms.push(f);
    }
    if neg {
        scalar = -scalar;
    }
    (scalar, mono, atoms)
}

/// A rational function `num / den` in `u, s, t, x` with `q = u^2`.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: MPoly,
    den: Denom,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn {
            num: MPoly::zero(),
            den: Denom::one(),
        }
    }

    pub fn one() -> Self {
        RatFn {
            num: MPoly::one(),
            den: Denom::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RatFn {
            num: MPoly::constant(c),
            den: Denom::one(),
        }
    }

    pub fn sym(s: Sym) -> Self {
        RatFn::from(MPoly::sym(s))
    }

    pub fn s() -> Self {
        Self::sym(Sym::S)
    }

    pub fn t() -> Self {
        Self::sym(Sym::T)
    }

    pub fn x() -> Self {
        Self::sym(Sym::X)
    }

    /// `q^k` for an integer or half-integer `k`.
    pub fn q_pow(k: impl Into<HalfInt>) -> Self {
        Self::monomial(1, [k.into().twice(), 0, 0, 0])
    }

    /// `q^k` for an integer `k`.
    pub fn q(k: i64) -> Self {
        Self::q_pow(HalfInt::int(k))
    }

    /// `c * u^a s^b t^c x^d` with integer (possibly negative) exponents.
    pub fn monomial(c: impl Into<BigInt>, e: LExps) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let pos = e.map(|v| v.max(0) as u32);
        let neg = e.map(|v| (-v).max(0) as u32);
        let num = MPoly::term(c, pos[0] as usize, [pos[1], pos[2], pos[3]]);
        RatFn {
            num,
            den: Denom {
                scalar: BigInt::one(),
                mono: neg,
                atoms: BTreeMap::new(),
            },
        }
        .reduced()
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &Denom {
        &self.den
    }

    pub fn den_expanded(&self) -> MPoly {
        self.den.to_mpoly()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_mpoly(&self) -> Result<MPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial)
        }
    }

    pub fn to_upoly(&self) -> Result<UPoly> {
        self.to_mpoly()?.to_upoly()
    }

    /// Value in `Q(q)` when no symbol occurs.
    pub fn to_qrat(&self) -> Result<QRat> {
        let num = self.num.to_upoly()?;
        let den = self.den.to_mpoly().to_upoly()?;
        QRat::new(num, den)
    }

    fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    fn reduce_cheap(&mut self) {
        if self.num.is_zero() {
            self.den = Denom::one();
            return;
        }
        let nm = self.num.monomial_content();
        let mut c = [0u32; 4];
        for i in 0..4 {
            c[i] = nm[i].min(self.den.mono[i]);
            self.den.mono[i] -= c[i];
        }
        self.num = self.num.div_monomial(c);
        let g = self.num.content().gcd(&self.den.scalar);
        if !g.is_one() {
            self.num = self.num.div_int(&g);
            self.den.scalar /= &g;
        }
    }

    fn reduce(&mut self) {
        self.reduce_cheap();
        if self.num.is_zero() || self.den.atoms.is_empty() {
            return;
        }
        let mut atoms = core::mem::take(&mut self.den.atoms);
        for (a, e) in atoms.iter_mut() {
            while *e > 0 {
                if self.num.cannot_divide_by(a) {
                    break;
                }
                match self.num.div_exact(a) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        atoms.retain(|_, e| *e > 0);
        self.den.atoms = atoms;
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (scalar, mono, atoms) = atomize(&self.num);
        let mut num = self.den.to_mpoly();
        if scalar.is_negative() {
            num = -num;
        }
        let mut den = Denom {
            scalar: scalar.abs(),
            mono,
            atoms: BTreeMap::new(),
        };
        for a in atoms {
            *den.atoms.entry(a).or_insert(0) += 1;
        }
        Ok(RatFn { num, den }.reduced())
    }

    pub fn div(&self, other: &RatFn) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut den = Denom::one();
        let n = e.unsigned_abs();
        den.scalar = Pow::pow(&base.den.scalar, n);
        den.mono = base.den.mono.map(|v| v * n);
        den.atoms = base
            .den
            .atoms
            .iter()
            .map(|(a, k)| (a.clone(), k * n))
            .collect();
        Ok(RatFn {
            num: base.num.pow(n),
            den,
        })
    }

    /// Builds `p / (u^a s^b t^c x^d)` from a transformed Laurent polynomial.
    fn from_laurent(p: MPoly, shift: [u32; 4]) -> Self {
        RatFn {
            num: p,
            den: Denom {
                scalar: BigInt::one(),
                mono: shift,
                atoms: BTreeMap::new(),
            },
        }
        .reduced()
    }

    /// Applies a polynomial-level map to the numerator and to every factor of
    /// the denominator, then reassembles the quotient.
    pub fn map_parts(&self, mut f: impl FnMut(&MPoly) -> Result<RatFn>) -> Result<RatFn> {
        let num = f(&self.num)?;
        if num.is_zero() {
            return Ok(num);
        }
        let mut den = RatFn::from_int(self.den.scalar.clone());
        if self.den.mono != [0; 4] {
            den = &den * &f(&mono_mpoly(self.den.mono))?;
        }
        for (a, e) in &self.den.atoms {
            let fa = f(a)?;
            if fa.is_zero() {
                return Err(Error::DivisionByZero);
            }
            den = &den * &fa.pow(*e as i32)?;
        }
        num.div(&den)
    }

    /// Substitutes `sym := c * u^a s^b t^c x^d` (exponents may be negative,
    /// `c` may be zero).
    pub fn subst_monomial(&self, sym: Sym, c: impl Into<BigInt>, e: LExps) -> Result<RatFn> {
        let c: BigInt = c.into();
        let i = sym.index();
        self.map_parts(|p| {
            let (r, shift) = p.transform(|ue, k| {
                let n = k[i];
                let mult = Pow::pow(&c, n);
                let mut out = [ue as i64, k[0] as i64, k[1] as i64, k[2] as i64];
                out[i + 1] = 0;
                for j in 0..4 {
                    out[j] += n as i64 * e[j];
                }
                Ok((mult, out))
            })?;
            Ok(RatFn::from_laurent(r, shift))
        })
    }

    /// Substitutes an integer value for a symbol.
    pub fn subst_int(&self, sym: Sym, c: impl Into<BigInt>) -> Result<RatFn> {
        self.subst_monomial(sym, c, [0; 4])
    }

    /// `q -> q^k` for a nonzero integer or half-integer `k`.
    pub fn subst_q_power(&self, k: HalfInt) -> Result<RatFn> {
        if k.is_zero() {
            return Err(Error::InvalidParameter("power must be nonzero"));
        }
        let tw = k.twice();
        self.map_parts(|p| {
            let (r, shift) = p.transform(|ue, key| {
                let scaled = ue as i64 * tw;
                if scaled % 2 != 0 {
                    return Err(Error::OddUExponent);
                }
                Ok((
                    BigInt::one(),
                    [scaled / 2, key[0] as i64, key[1] as i64, key[2] as i64],
                ))
            })?;
            Ok(RatFn::from_laurent(r, shift))
        })
    }

    /// `q -> -q`; every power of `u` must be even.
    pub fn negate_q(&self) -> Result<RatFn> {
        self.map_parts(|p| {
            let (r, shift) = p.transform(|ue, key| {
                if ue % 2 != 0 {
                    return Err(Error::OddUExponent);
                }
                let m = if (ue / 2) % 2 == 1 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
                Ok((m, [ue as i64, key[0] as i64, key[1] as i64, key[2] as i64]))
            })?;
            Ok(RatFn::from_laurent(r, shift))
        })
    }

    /// Rewrites an expression that is even in `sym` by `sym^2 -> sign * sym`.
    /// An odd numerator over an odd denominator is accepted as well.
    pub fn subst_even(&self, sym: Sym, sign: i8) -> Result<RatFn> {
        let i = sym.index();
        // maps p(sym^2) -> p(sign * sym), after pulling out one power of sym when p is odd
        let halve = |p: &MPoly| -> Result<(RatFn, i64)> {
            let (p, odd) = match p.parity(sym) {
                Some(0) => (p.clone(), 0),
                Some(_) => {
                    let mut m = [0u32; 4];
                    m[i + 1] = 1;
                    (p.div_monomial(m), 1)
                }
                None => return Err(Error::NotEven),
            };
            let (r, shift) = p.transform(|ue, key| {
                let n = key[i] / 2;
                let mult = if sign < 0 && n % 2 == 1 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
                let mut out = [ue as i64, key[0] as i64, key[1] as i64, key[2] as i64];
                out[i + 1] = n as i64;
                Ok((mult, out))
            })?;
            Ok((RatFn::from_laurent(r, shift), odd))
        };
        let (num, mut extra) = halve(&self.num)?;
        let mut den = RatFn::from(mono_mpoly(self.den.mono)).scale_int(self.den.scalar.clone());
        let (dm, dodd) = halve(&mono_mpoly(self.den.mono))?;
        if self.den.mono[i + 1] > 0 {
            den = dm.scale_int(self.den.scalar.clone());
            extra -= dodd;
        }
        for (a, e) in &self.den.atoms {
            let (h, odd) = halve(a)?;
            extra -= odd * *e as i64;
            den = &den * &h.pow(*e as i32)?;
        }
        if extra % 2 != 0 {
            return Err(Error::NotEven);
        }
        let mut ke = [0i64; 4];
        ke[i + 1] = extra / 2;
        let ksign = if sign < 0 && (extra / 2).rem_euclid(2) == 1 {
            -1
        } else {
            1
        };
        (&num * &RatFn::monomial(ksign, ke)).div(&den)
    }

    /// Substitutes an arbitrary rational function for a symbol.
    pub fn subst(&self, sym: Sym, value: &RatFn) -> Result<RatFn> {
        let horner = |p: &MPoly| -> Result<RatFn> {
            let parts = p.collect(sym);
            let top = match parts.keys().next_back() {
                Some(t) => *t,
                None => return Ok(RatFn::zero()),
            };
            let mut acc = RatFn::zero();
            for k in (0..=top).rev() {
                acc = &acc * value;
                if let Some(c) = parts.get(&k) {
                    acc = &acc + &RatFn::from(c.clone());
                }
            }
            Ok(acc)
        };
        self.map_parts(horner)
    }

    /// Coefficient of `sym^k` for an expression whose denominator is free of `sym`.
    pub fn coeff_of(&self, sym: Sym, k: u32) -> Result<RatFn> {
        if self
            .den
            .atoms
            .keys()
            .any(|a| a.degree(sym).unwrap_or(0) > 0)
            || self.den.mono[sym.index() + 1] > 0
        {
            return Err(Error::NotPolynomial);
        }
        let c = self.num.collect(sym).remove(&k).unwrap_or_default();
        Ok(RatFn {
            num: c,
            den: self.den.clone(),
        }
        .reduced())
    }

    /// Degree in a symbol of an expression whose denominator is free of it.
    pub fn degree_in(&self, sym: Sym) -> Option<u32> {
        self.num.degree(sym)
    }

    pub fn scale_int(&self, c: impl Into<BigInt>) -> RatFn {
        let c = c.into();
        RatFn {
            num: self.num.scale(&c),
            den: self.den.clone(),
        }
        .reduced()
    }
}

impl MPoly {
    /// Cheap test that `d` cannot divide `self`, by comparing degrees.
    fn cannot_divide_by(&self, d: &MPoly) -> bool {
        for s in Sym::ALL {
            if d.degree(s).unwrap_or(0) > self.degree(s).unwrap_or(0) {
                return true;
            }
        }
        d.u_degree().unwrap_or(0) > self.u_degree().unwrap_or(0) && d.is_upoly()
    }
}

impl From<MPoly> for RatFn {
    fn from(p: MPoly) -> Self {
        RatFn {
            num: p,
            den: Denom::one(),
        }
    }
}

impl From<UPoly> for RatFn {
    fn from(p: UPoly) -> Self {
        RatFn::from(MPoly::from(p))
    }
}

impl From<QRat> for RatFn {
    fn from(r: QRat) -> Self {
        let num = RatFn::from(r.num().clone());
        if r.den().is_one() {
            return num;
        }
        num.div(&RatFn::from(r.den().clone()))
            .expect("nonzero denominator")
    }
}

impl From<i64> for RatFn {
    fn from(c: i64) -> Self {
        RatFn::from_int(c)
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &RatFn) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        (self - other).is_zero()
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .reduced();
        }
        let l = self.den.lcm(&rhs.den);
        let a = &self.num * &l.cofactor(&self.den);
        let b = &rhs.num * &l.cofactor(&rhs.den);
        RatFn {
            num: &a + &b,
            den: l,
        }
        .reduced()
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        // cancel crosswise first so the product of numerators stays small
        let a = RatFn {
            num: self.num.clone(),
            den: rhs.den.clone(),
        }
        .reduced();
        let b = RatFn {
            num: rhs.num.clone(),
            den: self.den.clone(),
        }
        .reduced();
        let mut out = RatFn {
            num: &a.num * &b.num,
            den: a.den.mul(&b.den),
        };
        out.reduce_cheap();
        out
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        &self - &rhs
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        &self * &rhs
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den.to_mpoly())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> RatFn {
        RatFn::q(k)
    }

    fn one() -> RatFn {
        RatFn::one()
    }

    #[test]
    fn cyclotomic_table() {
        let c = |d| {
            cyclotomic(d)
                .into_iter()
                .map(|v| i64::try_from(v).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(c(1), [-1, 1]);
        assert_eq!(c(2), [1, 1]);
        assert_eq!(c(6), [1, -1, 1]);
        assert_eq!(c(12), [1, 0, -1, 0, 1]);
    }

    #[test]
    fn binomials_split_into_cyclotomic_factors() {
        // 1 - q^2 = -(u - 1)(u + 1)(u^2 + 1)
        let (sc, mono, atoms) = atomize(&MPoly::from(UPoly::from_q_coeffs(&[1, 0, -1])));
        assert_eq!(sc, BigInt::from(-1));
        assert_eq!(mono, [0; 4]);
        assert_eq!(atoms.len(), 3);
        // s^2 - q^2 t^2 = (s - q t)(s + q t)
        let p = MPoly::term(1, 0, [2, 0, 0]) - MPoly::term(1, 4, [0, 2, 0]);
        let (_, _, atoms) = atomize(&p);
        assert_eq!(atoms.len(), 2);
    }

    #[test]
    fn sums_cancel_over_shared_factors() {
        // 1/(1-q) - q/(1-q) = 1
        let a = one().div(&(&one() - &q(1))).unwrap();
        let b = q(1).div(&(&one() - &q(1))).unwrap();
        let d = &a - &b;
        assert!(d.is_polynomial());
        assert_eq!(d, one());
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
        let c = &a + &one().div(&(&one() + &q(1))).unwrap();
        assert_eq!(c, RatFn::from_int(2).div(&(&one() - &q(2))).unwrap());
    }

    #[test]
    fn laurent_monomials_and_substitution() {
        let s = RatFn::s();
        // (1 + s)/(1 + q t) with t := 0 is 1 + s
        let h1 = (&one() + &s)
            .div(&(&one() + &(&q(1) * &RatFn::t())))
            .unwrap();
        assert_eq!(h1.subst_int(Sym::T, 0).unwrap(), &one() + &s);
        // s := q^-1 in 1 + s gives (q + 1)/q
        let v = (&one() + &s)
            .subst_monomial(Sym::S, 1, [-2, 0, 0, 0])
            .unwrap();
        assert_eq!(v, (&q(1) + &one()).div(&q(1)).unwrap());
        assert!(h1.subst_monomial(Sym::T, -1, [-2, 0, 0, 0]).is_err());
    }

    #[test]
    fn q_power_substitution_round_trip() {
        let e = (&one() + &q(1))
            .div(&(&one() - &(&q(2) * &RatFn::s())))
            .unwrap();
        let there = e.subst_q_power(HalfInt::int(-1)).unwrap();
        assert_eq!(there.subst_q_power(HalfInt::int(-1)).unwrap(), e);
        let half = e.subst_q_power(HalfInt::from_twice(1)).unwrap();
        assert_eq!(half.subst_q_power(HalfInt::int(2)).unwrap(), e);
    }

    #[test]
    fn even_substitution() {
        // (1 + s^2)/s^2 with s^2 -> -s is (1 - s)/(-s)
        let s = RatFn::s();
        let e = (&one() + &s.pow(2).unwrap())
            .div(&s.pow(2).unwrap())
            .unwrap();
        let r = e.subst_even(Sym::S, -1).unwrap();
        assert_eq!(r, (&one() - &s).div(&-&s).unwrap());
        // odd over odd: s/(s^3 + s) = 1/(s^2 + 1) -> 1/(1 + s)
        let o = s.div(&(&s.pow(3).unwrap() + &s)).unwrap();
        assert_eq!(
            o.subst_even(Sym::S, 1).unwrap(),
            one().div(&(&one() + &s)).unwrap()
        );
        assert_eq!((&one() + &s).subst_even(Sym::S, 1), Err(Error::NotEven));
    }

    #[test]
    fn general_substitution() {
        // x := (s + 1/s) in x^2 gives s^2 + 2 + s^-2
        let x2 = RatFn::x().pow(2).unwrap();
        let v = &RatFn::s() + &RatFn::s().inv().unwrap();
        let r = x2.subst(Sym::X, &v).unwrap();
        let expect =
            &(&RatFn::s().pow(2).unwrap() + &RatFn::from_int(2)) + &RatFn::s().pow(-2).unwrap();
        assert_eq!(r, expect);
    }
}

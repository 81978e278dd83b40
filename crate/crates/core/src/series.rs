//! Truncated power series in `z` with rational-function coefficients, the
//! three q-exponentials and a catalog of generating-function identities.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::exactalg::{HalfInt, RatFn, UPoly};
use crate::normalized::{big_h_general, h_general};
use crate::qfun::{qpoch, qpoch_u};
use crate::rogers::{rs_at, rs_sym};

const Q: HalfInt = HalfInt::ONE;
const Q2: HalfInt = HalfInt::int(2);

/// Coefficients of `z^0 .. z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    coeffs: Vec<RatFn>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![RatFn::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatFn::one();
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs(mut coeffs: Vec<RatFn>, order: usize) -> Self {
        coeffs.resize(order + 1, RatFn::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatFn {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RatFn] {
        &self.coeffs
    }

    pub fn scale(&self, c: &RatFn) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be 1.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0] != RatFn::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let n = self.order();
        let mut out = vec![RatFn::zero(); n + 1];
        out[0] = RatFn::one();
        for k in 1..=n {
            let mut acc = RatFn::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !out[k - i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[k - i]);
                }
            }
            out[k] = -acc;
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Smallest `k` where the coefficients of `z^k` differ.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![RatFn::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        TruncSeries { coeffs: out }
    }
}

/// The three q-exponentials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpKind {
    /// `exp(z) = sum z^n / [n]!`.
    Exp,
    /// `Exp(z) = sum q^{C(n,2)} z^n / [n]!`.
    BigExp,
    /// `e(z) = sum z^n / (q;q)_n`.
    E,
}

/// `[n]!` in base `q^base`.
pub fn q_factorial(n: usize, base: HalfInt) -> UPoly {
    let mut out = UPoly::one();
    for j in 1..=n {
        let qj = UPoly::from_q_coeffs(&vec![1; j])
            .subst_q_power_pos(base)
            .expect("integer exponents");
        out = &out * &qj;
    }
    out
}

/// The q-exponential of kind `kind` in base `q^base`, evaluated at `c z^power`.
pub fn q_exp_series(
    kind: ExpKind,
    base: HalfInt,
    c: &RatFn,
    power: usize,
    order: usize,
) -> TruncSeries {
    assert!(power > 0);
    let mut out = TruncSeries::zero(order);
    let mut cn = RatFn::one();
    for n in 0..=order / power {
        let den = match kind {
            ExpKind::Exp | ExpKind::BigExp => q_factorial(n, base),
            ExpKind::E => qpoch_u(1, base, base, n),
        };
        let mut v = cn.div(&RatFn::from(den)).expect("nonzero");
        if kind == ExpKind::BigExp {
            v = &v * &RatFn::q_pow(base * (n * n.saturating_sub(1) / 2) as i64);
        }
        out.coeffs[n * power] = v;
        cn = &cn * c;
    }
    out
}

/// `e_{q^base}(c z^power)`.
pub fn e_series(base: HalfInt, c: &RatFn, power: usize, order: usize) -> TruncSeries {
    q_exp_series(ExpKind::E, base, c, power, order)
}

/// Generating-function identities, each compared coefficient by coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfIdentity {
    /// `exp(z) Exp(-z) = 1`.
    ExpInverse,
    /// `e_{q^2}(z^2) = e_q(-z) e_q(z)`.
    SquareSplit,
    /// `sum r_n(s,q) z^n / (q;q)_n = e_q(z) e_q(sz)`.
    RsGf,
    /// `sum (s;q)_n z^n / (q;q)_n = e_q(z) / e_q(sz)`.
    QBinomialTheorem,
    /// `exp(z) exp(-z) = sum (q;q^2)_n z^{2n} / [2n]!`.
    GaussGf,
    /// `e_{q^2}(qz) e_{q^2}(z) = e_q(z)`.
    HalfBaseProduct,
    /// Negative control: `e_{q^2}(q^2 z) e_{q^2}(z)` against `e_q(z)`.
    HalfBaseProductShifted,
    /// `sum r_{2n}(s,q) z^n / (q^2;q^2)_n = e_{q^2}(s^2 z) e_{q^2}(z) / e_q(-sz)`.
    EvenRsGf,
    /// `sum r_{2n+1}(s,q) z^n / (q^2;q^2)_n = (1+s) e_{q^2}(s^2 z) e_{q^2}(z) / e_q(-qsz)`.
    OddRsGf,
    /// `sum r_n(s,q^2) z^n / (q;q)_n = e_q(sz) e_q(z) / e_{q^2}(qsz^2)`.
    RsSquareBaseGf,
    /// `sum h(n,s,t,q) (-qt;q)_n z^n / (q;q)_n = e_q(sz) e_q(z) / e_{q^2}(qstz^2)`.
    HGf,
    /// `sum H(n,s,t,q) (qt^2;q^2)_n z^n / (q^2;q^2)_n = e_{q^2}(s^2 z) e_{q^2}(z) / e_q(stz)`.
    BigHGf,
    /// Negative control: the `h` series without the `(-qt;q)_n` factor.
    HGfUnweighted,
    /// Negative control: the `H` series without the `(qt^2;q^2)_n` factor.
    BigHGfUnweighted,
}

/// Outcome of a coefficient-wise series comparison.
#[derive(Clone, Debug)]
pub struct GfReport {
    pub id: &'static str,
    pub order: usize,
    pub pass: bool,
    pub first_failing_order: Option<usize>,
    pub lhs_coeff: Option<RatFn>,
    pub rhs_coeff: Option<RatFn>,
}

impl GfIdentity {
    pub const ALL: [GfIdentity; 14] = [
        GfIdentity::ExpInverse,
        GfIdentity::SquareSplit,
        GfIdentity::RsGf,
        GfIdentity::QBinomialTheorem,
        GfIdentity::GaussGf,
        GfIdentity::HalfBaseProduct,
        GfIdentity::HalfBaseProductShifted,
        GfIdentity::EvenRsGf,
        GfIdentity::OddRsGf,
        GfIdentity::RsSquareBaseGf,
        GfIdentity::HGf,
        GfIdentity::BigHGf,
        GfIdentity::HGfUnweighted,
        GfIdentity::BigHGfUnweighted,
    ];

    pub fn id(self) -> &'static str {
        match self {
            GfIdentity::ExpInverse => "exp-inverse",
            GfIdentity::SquareSplit => "square-split",
            GfIdentity::RsGf => "rs-gf",
            GfIdentity::QBinomialTheorem => "q-binomial-theorem",
            GfIdentity::GaussGf => "gauss-gf",
            GfIdentity::HalfBaseProduct => "half-base-product",
            GfIdentity::HalfBaseProductShifted => "half-base-product-shifted",
            GfIdentity::EvenRsGf => "even-rs-gf",
            GfIdentity::OddRsGf => "odd-rs-gf",
            GfIdentity::RsSquareBaseGf => "rs-square-base-gf",
            GfIdentity::HGf => "h-gf",
            GfIdentity::BigHGf => "big-h-gf",
            GfIdentity::HGfUnweighted => "h-gf-unweighted",
            GfIdentity::BigHGfUnweighted => "big-h-gf-unweighted",
        }
    }

    /// True for the deliberately broken entries.
    pub fn is_negative_control(self) -> bool {
        matches!(
            self,
            GfIdentity::HalfBaseProductShifted
                | GfIdentity::HGfUnweighted
                | GfIdentity::BigHGfUnweighted
        )
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    /// Left and right series through `z^order`.
    pub fn sides(self, order: usize) -> (TruncSeries, TruncSeries) {
        let one = RatFn::one();
        let m1 = RatFn::from_int(-1);
        let s = RatFn::s();
        let t = RatFn::t();
        let s2 = s.pow(2).expect("power");
        let q = RatFn::q(1);
        let e = |base: HalfInt, c: &RatFn, p: usize| e_series(base, c, p, order);
        let inv = |x: TruncSeries| x.reciprocal().expect("unit constant term");
        let from_fn = |f: &dyn Fn(usize) -> RatFn| {
            TruncSeries::from_coeffs((0..=order).map(f).collect(), order)
        };
        match self {
            GfIdentity::ExpInverse => {
                let a = q_exp_series(ExpKind::Exp, Q, &one, 1, order);
                let b = q_exp_series(ExpKind::BigExp, Q, &m1, 1, order);
                (&a * &b, TruncSeries::one(order))
            }
            GfIdentity::SquareSplit => (e(Q2, &one, 2), &e(Q, &m1, 1) * &e(Q, &one, 1)),
            GfIdentity::RsGf => {
                let lhs = from_fn(&|n| {
                    rs_sym(n as i64, Q)
                        .div(&RatFn::from(qpoch_u(1, Q, Q, n)))
                        .expect("nonzero")
                });
                (lhs, &e(Q, &one, 1) * &e(Q, &s, 1))
            }
            GfIdentity::QBinomialTheorem => {
                let lhs = from_fn(&|n| {
                    qpoch(&s, Q, n)
                        .div(&RatFn::from(qpoch_u(1, Q, Q, n)))
                        .expect("nonzero")
                });
                (lhs, &e(Q, &one, 1) * &inv(e(Q, &s, 1)))
            }
            GfIdentity::GaussGf => {
                let a = q_exp_series(ExpKind::Exp, Q, &one, 1, order);
                let b = q_exp_series(ExpKind::Exp, Q, &m1, 1, order);
                let rhs = from_fn(&|k| {
                    if k % 2 == 1 {
                        return RatFn::zero();
                    }
                    RatFn::from(qpoch_u(1, Q, Q2, k / 2))
                        .div(&RatFn::from(q_factorial(k, Q)))
                        .expect("nonzero")
                });
                (&a * &b, rhs)
            }
            GfIdentity::HalfBaseProduct => (&e(Q2, &q, 1) * &e(Q2, &one, 1), e(Q, &one, 1)),
            GfIdentity::HalfBaseProductShifted => {
                (&e(Q2, &RatFn::q(2), 1) * &e(Q2, &one, 1), e(Q, &one, 1))
            }
            GfIdentity::EvenRsGf => {
                let lhs = from_fn(&|n| {
                    rs_sym(2 * n as i64, Q)
                        .div(&RatFn::from(qpoch_u(1, Q2, Q2, n)))
                        .expect("nonzero")
                });
                let rhs = &(&e(Q2, &s2, 1) * &e(Q2, &one, 1)) * &inv(e(Q, &s.scale_int(-1), 1));
                (lhs, rhs)
            }
            GfIdentity::OddRsGf => {
                let lhs = from_fn(&|n| {
                    rs_sym(2 * n as i64 + 1, Q)
                        .div(&RatFn::from(qpoch_u(1, Q2, Q2, n)))
                        .expect("nonzero")
                });
                let rhs =
                    &(&e(Q2, &s2, 1) * &e(Q2, &one, 1)) * &inv(e(Q, &(&q * &s).scale_int(-1), 1));
                (lhs, rhs.scale(&(&one + &s)))
            }
            GfIdentity::RsSquareBaseGf => {
                let lhs = from_fn(&|n| {
                    rs_at(n as i64, Q2, &s)
                        .div(&RatFn::from(qpoch_u(1, Q, Q, n)))
                        .expect("nonzero")
                });
                let rhs = &(&e(Q, &s, 1) * &e(Q, &one, 1)) * &inv(e(Q2, &(&q * &s), 2));
                (lhs, rhs)
            }
            GfIdentity::HGf | GfIdentity::HGfUnweighted => {
                let weighted = self == GfIdentity::HGf;
                let lhs = from_fn(&|n| {
                    let mut v = h_general(n as i64);
                    if weighted {
                        v = &v * &qpoch(&(&q * &t).scale_int(-1), Q, n);
                    }
                    v.div(&RatFn::from(qpoch_u(1, Q, Q, n))).expect("nonzero")
                });
                let rhs = &(&e(Q, &s, 1) * &e(Q, &one, 1)) * &inv(e(Q2, &(&q * &(&s * &t)), 2));
                (lhs, rhs)
            }
            GfIdentity::BigHGf | GfIdentity::BigHGfUnweighted => {
                let weighted = self == GfIdentity::BigHGf;
                let qt2 = &q * &t.pow(2).expect("power");
                let lhs = from_fn(&|n| {
                    let mut v = big_h_general(n as i64);
                    if weighted {
                        v = &v * &qpoch(&qt2, Q2, n);
                    }
                    v.div(&RatFn::from(qpoch_u(1, Q2, Q2, n))).expect("nonzero")
                });
                let rhs = &(&e(Q2, &s2, 1) * &e(Q2, &one, 1)) * &inv(e(Q, &(&s * &t), 1));
                (lhs, rhs)
            }
        }
    }

    pub fn verify(self, order: usize) -> GfReport {
        let (lhs, rhs) = self.sides(order);
        let first = lhs.first_difference(&rhs);
        GfReport {
            id: self.id(),
            order,
            pass: first.is_none(),
            first_failing_order: first,
            lhs_coeff: first.map(|k| lhs.coeff(k).clone()),
            rhs_coeff: first.map(|k| rhs.coeff(k).clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> RatFn {
        RatFn::from(UPoly::from_q_coeffs(c))
    }

    #[test]
    fn e_series_coefficients() {
        let e = e_series(Q, &RatFn::one(), 1, 2);
        assert_eq!(e.coeff(1), &q(&[1, -1]).inv().unwrap());
        assert_eq!(e.coeff(2), &(&q(&[1, -1]) * &q(&[1, 0, -1])).inv().unwrap());
        let big = q_exp_series(ExpKind::BigExp, Q, &RatFn::one(), 1, 2);
        assert_eq!(big.coeff(2), &RatFn::q(1).div(&q(&[1, 1])).unwrap());
        let sq = e_series(Q2, &RatFn::one(), 2, 2);
        assert!(sq.coeff(1).is_zero());
        assert_eq!(sq.coeff(2), &q(&[1, 0, -1]).inv().unwrap());
    }

    #[test]
    fn arithmetic() {
        let e = e_series(Q, &RatFn::one(), 1, 8);
        assert_eq!(&e * &e.reciprocal().unwrap(), TruncSeries::one(8));
        let p = TruncSeries::from_coeffs(vec![RatFn::one(), RatFn::one(), RatFn::one()], 2);
        let want = TruncSeries::from_coeffs(vec![RatFn::one(), RatFn::from_int(-1)], 2);
        assert_eq!(p.reciprocal().unwrap(), want);
        let bad = TruncSeries::from_coeffs(vec![RatFn::from_int(2)], 2);
        assert_eq!(bad.reciprocal().unwrap_err(), Error::NonUnitConstantTerm);
    }

    #[test]
    fn shift_law() {
        let n = 10;
        let lhs = e_series(Q, &RatFn::q(1), 1, n);
        let one_minus_z = TruncSeries::from_coeffs(vec![RatFn::one(), RatFn::from_int(-1)], n);
        assert_eq!(lhs, &one_minus_z * &e_series(Q, &RatFn::one(), 1, n));
    }

    #[test]
    fn cheap_catalog_entries() {
        for id in [
            GfIdentity::ExpInverse,
            GfIdentity::SquareSplit,
            GfIdentity::RsGf,
            GfIdentity::QBinomialTheorem,
            GfIdentity::GaussGf,
            GfIdentity::HalfBaseProduct,
        ] {
            assert!(id.verify(8).pass, "{}", id.id());
        }
        let r = GfIdentity::HalfBaseProductShifted.verify(8);
        assert!(!r.pass);
        assert_eq!(r.first_failing_order, Some(1));
    }

    #[test]
    fn family_generating_functions() {
        for id in [
            GfIdentity::EvenRsGf,
            GfIdentity::OddRsGf,
            GfIdentity::RsSquareBaseGf,
            GfIdentity::HGf,
            GfIdentity::BigHGf,
        ] {
            assert!(id.verify(4).pass, "{}", id.id());
        }
        assert!(!GfIdentity::HGfUnweighted.verify(4).pass);
        assert!(!GfIdentity::BigHGfUnweighted.verify(4).pass);
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(
            GfIdentity::from_id("bogus"),
            Err(Error::UnknownIdentity(_))
        ));
    }
}

//! Rogers-Szegö polynomials `r_n(s, q) = sum_j [n, j]_q s^j` and their classical identities.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::Comparison;
use crate::error::{Error, Result};
use crate::exactalg::{HalfInt, MPoly, RatFn, Sym, UPoly};
use crate::qfun::{gauss, gauss_binomial, gauss_ratfn, gauss_row, qpoch, qpoch_u};

const Q: HalfInt = HalfInt::ONE;
const Q2: HalfInt = HalfInt::int(2);

fn binom_c2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `r_n(s, q^base)` as a polynomial in `s`, for a positive `base`.
pub fn rs(n: usize, base: HalfInt) -> MPoly {
    let row = gauss_row(n);
    MPoly::from_terms(row.into_iter().enumerate().map(|(j, g)| {
        let g = g.subst_q_power_pos(base).expect("integer exponents");
        ([j as u32, 0, 0], g)
    }))
}

/// `r_n(value, q^base)` for any nonzero `base` and any value of `s`.
pub fn rs_at(n: i64, base: HalfInt, value: &RatFn) -> RatFn {
    if n < 0 {
        return RatFn::zero();
    }
    let mut acc = RatFn::zero();
    let mut pow = RatFn::one();
    for j in 0..=n {
        let g = gauss_ratfn(n, j, base).expect("nonzero base");
        acc = &acc + &(&g * &pow);
        pow = &pow * value;
    }
    acc
}

/// `r_n(s, q^base)` as a rational function in `s`.
pub fn rs_sym(n: i64, base: HalfInt) -> RatFn {
    rs_at(n, base, &RatFn::s())
}

/// Bivariate form `r_n(x, s, q) = x^n r_n(s/x, q)`.
pub fn rs_bivariate(n: usize) -> MPoly {
    let row = gauss_row(n);
    MPoly::from_terms(
        row.into_iter()
            .enumerate()
            .map(|(j, g)| ([j as u32, 0, (n - j) as u32], g)),
    )
}

/// One step of `r_n = (1+s) r_{n-1} + (q^{n-1} - 1) s r_{n-2}`.
pub fn rs_recurrence_step(n: usize, prev: &MPoly, prev2: &MPoly) -> Result<MPoly> {
    check_degree(prev, n as i64 - 1)?;
    check_degree(prev2, n as i64 - 2)?;
    let one_s = &MPoly::one() + &MPoly::sym(Sym::S);
    let c = &UPoly::q_pow(n - 1) - &UPoly::one();
    Ok(&(&one_s * prev) + &(&MPoly::sym(Sym::S) * prev2).scale_upoly(&c))
}

/// One step of `r_n = (1 + (1+q)q^{n-2}s + s^2) r_{n-2} - (1-q^{n-3})(1-q^{n-2}) s^2 r_{n-4}`, for `n >= 2`.
pub fn rs_two_step(n: usize, prev2: &MPoly, prev4: &MPoly) -> Result<MPoly> {
    if n < 2 {
        return Err(Error::InvalidParameter("two-step recurrence needs n >= 2"));
    }
    check_degree(prev2, n as i64 - 2)?;
    check_degree(prev4, n as i64 - 4)?;
    let s = MPoly::sym(Sym::S);
    let mid = MPoly::monomial([1, 0, 0], UPoly::from_q_coeffs(&[1, 1]).shift(2 * (n - 2)));
    let a = &(&MPoly::one() + &mid) + &s.pow(2);
    let one = UPoly::one();
    // q^{n-3} with n = 2 is q^{-1}: then (1-q^{-1})(1-q^0) = 0 anyway
    let c = if n >= 3 {
        &(&one - &UPoly::q_pow(n - 3)) * &(&one - &UPoly::q_pow(n - 2))
    } else {
        UPoly::zero()
    };
    Ok(&(&a * prev2) - &(&s.pow(2) * prev4).scale_upoly(&c))
}

fn check_degree(p: &MPoly, want: i64) -> Result<()> {
    let found = p.degree(Sym::S).map(|d| d as i64).unwrap_or(-1);
    if want < 0 && p.is_zero() || found == want {
        return Ok(());
    }
    Err(Error::DegreeMismatch {
        expected: want.max(0) as usize,
        found: found.max(0) as usize,
    })
}

/// `r_0, ..., r_{n_max}` built by the one-step recurrence.
pub fn rs_by_recurrence(n_max: usize) -> Vec<MPoly> {
    let mut out: Vec<MPoly> = vec![MPoly::one()];
    for n in 1..=n_max {
        let prev2 = if n >= 2 {
            out[n - 2].clone()
        } else {
            MPoly::zero()
        };
        let next = rs_recurrence_step(n, &out[n - 1], &prev2).expect("consistent degrees");
        out.push(next);
    }
    out
}

/// `r_0, ..., r_{n_max}` built by the two-step recurrence from `r_0 .. r_3`.
pub fn rs_by_two_step(n_max: usize) -> Vec<MPoly> {
    let mut out: Vec<MPoly> = (0..=n_max.min(3)).map(|n| rs(n, Q)).collect();
    for n in 4..=n_max {
        let next = rs_two_step(n, &out[n - 2], &out[n - 4]).expect("consistent degrees");
        out.push(next);
    }
    out
}

/// Closed-form evaluations of Rogers-Szegö polynomials at special points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialValue {
    /// `r_{2n}(-1, q) = (q; q^2)_n`.
    GaussEven,
    /// `r_{2n+1}(-1, q) = 0`.
    GaussOdd,
    /// `r_n(-q, q) = (q; q^2)_{floor((n+1)/2)}`.
    NegQ,
    /// `r_n(q, q^2) = (-q; q)_n`.
    QBaseQ2,
    /// Negative control: `r_n(-q, q)` against `(q; q^2)_{floor(n/2)}`.
    NegQFloor,
}

impl SpecialValue {
    pub const ALL: [SpecialValue; 5] = [
        SpecialValue::GaussEven,
        SpecialValue::GaussOdd,
        SpecialValue::NegQ,
        SpecialValue::QBaseQ2,
        SpecialValue::NegQFloor,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SpecialValue::GaussEven => "gauss-even",
            SpecialValue::GaussOdd => "gauss-odd",
            SpecialValue::NegQ => "neg-q",
            SpecialValue::QBaseQ2 => "q-base-q2",
            SpecialValue::NegQFloor => "neg-q-floor",
        }
    }

    pub fn is_negative_control(self) -> bool {
        self == SpecialValue::NegQFloor
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    /// Both sides: the substituted polynomial and the closed form.
    pub fn compare(self, n: usize) -> Comparison {
        let (lhs, rhs) = match self {
            SpecialValue::GaussEven => (alt_sum(2 * n), qpoch_u(1, Q, Q2, n)),
            SpecialValue::GaussOdd => (alt_sum(2 * n + 1), UPoly::zero()),
            SpecialValue::NegQ | SpecialValue::NegQFloor => {
                let row = gauss_row(n);
                let v = row.iter().enumerate().fold(UPoly::zero(), |acc, (j, g)| {
                    let t = g.shift(2 * j);
                    if j % 2 == 0 {
                        &acc + &t
                    } else {
                        &acc - &t
                    }
                });
                let len = if self == SpecialValue::NegQ {
                    n.div_ceil(2)
                } else {
                    n / 2
                };
                (v, qpoch_u(1, Q, Q2, len))
            }
            SpecialValue::QBaseQ2 => {
                let row = gauss_row(n);
                let v = row.iter().enumerate().fold(UPoly::zero(), |acc, (j, g)| {
                    &acc + &g.stretch(2).shift(2 * j)
                });
                (v, qpoch_u(-1, Q, Q, n))
            }
        };
        Comparison::new(RatFn::from(lhs), RatFn::from(rhs))
    }

    /// The closed-form side, after asserting that it equals the substituted polynomial.
    pub fn value(self, n: usize) -> Result<UPoly> {
        let c = self.compare(n);
        if !c.holds() {
            return Err(Error::IdentityViolated(format!("{} at n={}", self.id(), n)));
        }
        c.rhs.to_upoly()
    }
}

fn alt_sum(n: usize) -> UPoly {
    gauss_row(n)
        .iter()
        .enumerate()
        .fold(
            UPoly::zero(),
            |acc, (j, g)| if j % 2 == 0 { &acc + g } else { &acc - g },
        )
}

/// Expansions of `r_{2n}`, `r_{2n+1}` and `r_n(s, q^2)` in terms of each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// `r_{2n}(s,q) = sum_k (-q;q)_k q^{C(k,2)} s^k [n,k]_{q^2} r_{n-k}(s^2,q^2)`.
    EvenSquareBase,
    /// `r_{2n+1}(s,q) = (1+s) sum_k (-q;q)_k q^{C(k+1,2)} s^k [n,k]_{q^2} r_{n-k}(s^2,q^2)`.
    OddSquareBase,
    /// `r_{2n}(s,q) = sum_k s^{2k} (-q/s;q^2)_k (-s;q^2)_{n-k} [n,k]_{q^2}`.
    EvenShiftedProducts,
    /// Both product forms of `r_{2n+1}(s,q)`.
    OddShiftedProducts,
    /// `r_n(s,q^2) = sum_j (-1)^j q^{j^2} (q;q^2)_j [n,2j] s^j r_{n-2j}(s,q)`.
    SquareBaseAlternating,
    /// `r_n(s,q^2) = sum_j [n,2j] (q;q^2)_j (qs;q^2)_j s^{n-2j} (-1/s;q)_{n-2j}`.
    SquareBaseProducts,
    /// `sum_k (-1)^k (-s;q)_k [N,k] r_{N-k}(s,q^2)` is `(q;q^2)_n (qs;q^2)_n` for `N = 2n`, zero for odd `N`.
    SquareBaseInverse,
}

impl Expansion {
    pub const ALL: [Expansion; 7] = [
        Expansion::EvenSquareBase,
        Expansion::OddSquareBase,
        Expansion::EvenShiftedProducts,
        Expansion::OddShiftedProducts,
        Expansion::SquareBaseAlternating,
        Expansion::SquareBaseProducts,
        Expansion::SquareBaseInverse,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Expansion::EvenSquareBase => "even-square-base",
            Expansion::OddSquareBase => "odd-square-base",
            Expansion::EvenShiftedProducts => "even-shifted-products",
            Expansion::OddShiftedProducts => "odd-shifted-products",
            Expansion::SquareBaseAlternating => "square-base-alternating",
            Expansion::SquareBaseProducts => "square-base-products",
            Expansion::SquareBaseInverse => "square-base-inverse",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn compare(self, n: i64) -> Comparison {
        let s = RatFn::s();
        let s2 = s.pow(2).expect("power");
        let one = RatFn::one();
        let g2 = |a: i64, b: i64| RatFn::from(gauss_binomial(a, b, Q2).expect("base q^2"));
        let g = |a: i64, b: i64| RatFn::from(gauss(a, b));
        match self {
            Expansion::EvenSquareBase | Expansion::OddSquareBase => {
                let odd = self == Expansion::OddSquareBase;
                let mut sum = RatFn::zero();
                for k in 0..=n {
                    let e = if odd { binom_c2(k + 1) } else { binom_c2(k) };
                    let t = &(&RatFn::from(qpoch_u(-1, Q, Q, k as usize)) * &RatFn::q(e))
                        * &(&s.pow(k as i32).expect("power") * &g2(n, k));
                    sum = &sum + &(&t * &rs_at(n - k, Q2, &s2));
                }
                if odd {
                    sum = &(&one + &s) * &sum;
                }
                let lhs = rs_sym(if odd { 2 * n + 1 } else { 2 * n }, Q);
                Comparison::new(lhs, sum)
            }
            Expansion::EvenShiftedProducts => {
                let lhs = rs_sym(2 * n, Q);
                Comparison::new(lhs, shifted_products(n, n, &s, RatFn::s().scale_int(-1)))
            }
            Expansion::OddShiftedProducts => {
                let lhs = rs_sym(2 * n + 1, Q);
                let first = shifted_products(n, n + 1, &s, RatFn::s().scale_int(-1));
                let second =
                    &(&one + &s) * &shifted_products(n, n, &s, &RatFn::q(2) * &s.scale_int(-1));
                // the two closed forms must agree with each other as well as with r_{2n+1}
                if first != second {
                    return Comparison::new(lhs, first);
                }
                Comparison::new(lhs, second)
            }
            Expansion::SquareBaseAlternating => {
                let mut sum = RatFn::zero();
                for j in 0..=n / 2 {
                    let c = &RatFn::from(qpoch_u(1, Q, Q2, j as usize)) * &RatFn::q(j * j);
                    let t = &(&c * &g(n, 2 * j)) * &s.pow(j as i32).expect("power");
                    sum = &sum + &(&t * &rs_sym(n - 2 * j, Q)).scale_int(sign(j));
                }
                Comparison::new(rs_sym(n, Q2), sum)
            }
            Expansion::SquareBaseProducts => {
                let mut sum = RatFn::zero();
                let minus_inv_s = s.inv().expect("nonzero").scale_int(-1);
                for j in 0..=n / 2 {
                    let a = &(&g(n, 2 * j) * &RatFn::from(qpoch_u(1, Q, Q2, j as usize)))
                        * &qpoch(&(&RatFn::q(1) * &s), Q2, j as usize);
                    let b = &s.pow((n - 2 * j) as i32).expect("power")
                        * &qpoch(&minus_inv_s, Q, (n - 2 * j) as usize);
                    sum = &sum + &(&a * &b);
                }
                Comparison::new(rs_sym(n, Q2), sum)
            }
            Expansion::SquareBaseInverse => {
                let mut sum = RatFn::zero();
                for k in 0..=n {
                    let t = &qpoch(&s.scale_int(-1), Q, k as usize) * &g(n, k);
                    sum = &sum + &(&t * &rs_sym(n - k, Q2)).scale_int(sign(k));
                }
                let rhs = if n % 2 == 0 {
                    let h = (n / 2) as usize;
                    &RatFn::from(qpoch_u(1, Q, Q2, h)) * &qpoch(&(&RatFn::q(1) * &s), Q2, h)
                } else {
                    RatFn::zero()
                };
                Comparison::new(sum, rhs)
            }
        }
    }
}

/// `sum_k s^{2k} (-q/s;q^2)_k (b;q^2)_{len-k} [n,k]_{q^2}` with `len - n` fixed by the caller.
fn shifted_products(n: i64, len: i64, s: &RatFn, b: RatFn) -> RatFn {
    let a = &RatFn::q(1) * &s.inv().expect("nonzero").scale_int(-1);
    let mut sum = RatFn::zero();
    for k in 0..=n {
        let t = &(&s.pow(2 * k as i32).expect("power") * &qpoch(&a, Q2, k as usize))
            * &qpoch(&b, Q2, (len - k) as usize);
        sum = &sum + &(&t * &RatFn::from(gauss_binomial(n, k, Q2).expect("base q^2")));
    }
    sum
}

/// `r_n(q^2 x) = (1 - qx) r_n(qx) + q^{n+1} x r_n(x)`, with `x` the variable.
pub fn shift_identity(n: i64) -> Comparison {
    let x = RatFn::x();
    let at = |c: i64| rs_at(n, Q, &(&RatFn::q(c) * &x));
    let lhs = at(2);
    let rhs =
        &(&(&RatFn::one() - &(&RatFn::q(1) * &x)) * &at(1)) + &(&(&RatFn::q(n + 1) * &x) * &at(0));
    Comparison::new(lhs, rhs)
}

/// With `H_n = s^{-n} r_n(s^2, q)` and `2x = s + 1/s`, checks
/// `2x H_n = H_{n+1} + (1 - q^n) H_{n-1}` for `n >= 1`.
pub fn hermite_bridge(n: i64) -> Comparison {
    let s = RatFn::s();
    let s2 = s.pow(2).expect("power");
    let h = |k: i64| &rs_at(k, Q, &s2) * &s.pow(-k as i32).expect("nonzero");
    let two_x = &s + &s.inv().expect("nonzero");
    let lhs = &two_x * &h(n);
    let rhs = &h(n + 1) + &(&RatFn::from(&UPoly::one() - &UPoly::q_pow(n as usize)) * &h(n - 1));
    Comparison::new(lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_q_coeffs(c)
    }

    #[test]
    fn small_polynomials() {
        let r2 = MPoly::from_terms([
            ([0, 0, 0], UPoly::one()),
            ([1, 0, 0], q(&[1, 1])),
            ([2, 0, 0], UPoly::one()),
        ]);
        assert_eq!(rs(2, Q), r2);
        let r3 = MPoly::from_terms([
            ([0, 0, 0], UPoly::one()),
            ([1, 0, 0], q(&[1, 1, 1])),
            ([2, 0, 0], q(&[1, 1, 1])),
            ([3, 0, 0], UPoly::one()),
        ]);
        assert_eq!(rs(3, Q), r3);
        assert_eq!(rs(0, Q), MPoly::one());
    }

    #[test]
    fn constructions_agree() {
        let a = rs_by_recurrence(15);
        let b = rs_by_two_step(15);
        for n in 0..=15 {
            let d = rs(n, Q);
            assert_eq!(a[n], d, "one-step n={}", n);
            assert_eq!(b[n], d, "two-step n={}", n);
            assert_eq!(d.degree(Sym::S), Some(n as u32));
        }
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let r = rs_recurrence_step(3, &rs(1, Q), &rs(1, Q));
        assert!(matches!(r, Err(Error::DegreeMismatch { .. })));
        assert_eq!(
            rs_recurrence_step(1, &MPoly::one(), &MPoly::zero()).unwrap(),
            rs(1, Q)
        );
    }

    #[test]
    fn classical_limit() {
        for n in 0..=12 {
            let at1 = RatFn::from(rs(n, Q)).subst_int(Sym::S, 1).unwrap();
            let v = at1.to_upoly().unwrap().eval_q_int(1).unwrap();
            assert_eq!(
                v,
                BigRational::from_integer(num_bigint::BigInt::from(1) << n)
            );
            // coefficient of s^j at q=1 is binom(n, j)
            for (e, c) in rs(n, Q).terms() {
                let v = c.eval_q_int(1).unwrap();
                assert_eq!(
                    v,
                    BigRational::from_integer(crate::qfun::binomial(n as i64, e[0] as i64))
                );
            }
        }
    }

    #[test]
    fn special_values() {
        assert_eq!(
            SpecialValue::GaussEven.value(2).unwrap(),
            &q(&[1, -1]) * &q(&[1, 0, 0, -1])
        );
        assert!(SpecialValue::GaussOdd.value(1).unwrap().is_zero());
        assert_eq!(
            SpecialValue::QBaseQ2.value(2).unwrap(),
            &q(&[1, 1]) * &q(&[1, 0, 1])
        );
        for v in SpecialValue::ALL {
            for n in 0..=15 {
                let expect = !(v.is_negative_control() && n % 2 == 1);
                assert_eq!(v.compare(n).holds(), expect, "{} n={}", v.id(), n);
            }
        }
    }

    #[test]
    fn expansions_small() {
        for e in Expansion::ALL {
            for n in 0..=6 {
                assert!(e.compare(n).holds(), "{} n={}", e.id(), n);
            }
        }
    }

    #[test]
    fn shift_and_hermite() {
        for n in 0..=6 {
            assert!(shift_identity(n).holds());
        }
        for n in 1..=8 {
            assert!(hermite_bridge(n).holds());
        }
    }

    #[test]
    fn bivariate_homogeneity() {
        let b = RatFn::from(rs_bivariate(4)).subst_int(Sym::X, 1).unwrap();
        assert_eq!(b, RatFn::from(rs(4, Q)));
    }
}

//! Exact limits at `q = 1` and `q = -1` by division by the vanishing linear
//! factor, and the alternating-sum limit theorems built on them.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{HalfInt, UPoly};
use crate::qfun::{gauss_binomial, qpoch_u};

const Q: HalfInt = HalfInt::ONE;
const Q2: HalfInt = HalfInt::int(2);

/// Divides `coeffs` (low degree first) by `(x - root)`; `None` if the remainder is nonzero.
fn div_linear(coeffs: &[BigInt], root: i64) -> Option<Vec<BigInt>> {
    if coeffs.is_empty() {
        return Some(Vec::new());
    }
    let r = BigInt::from(root);
    let mut out = alloc::vec![BigInt::zero(); coeffs.len() - 1];
    let mut carry = BigInt::zero();
    for i in (0..coeffs.len()).rev() {
        let v = &coeffs[i] + &carry * &r;
        if i == 0 {
            return if v.is_zero() { Some(out) } else { None };
        }
        out[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// Coefficients in the variable the point lives in: `u` for `q -> 1`
/// (the branch `u -> 1`), `q` for `q -> -1`.
fn point_coeffs(p: &UPoly, point: i64) -> Result<Vec<BigInt>> {
    match point {
        1 => Ok(p.coeffs().to_vec()),
        -1 => p.q_coeffs(),
        _ => Err(Error::InvalidParameter("limit point must be 1 or -1")),
    }
}

fn strip(mut c: Vec<BigInt>, point: i64, times: usize) -> Vec<BigInt> {
    for _ in 0..times {
        c = div_linear(&c, point).expect("order already measured");
    }
    c
}

fn eval(c: &[BigInt], point: i64) -> BigInt {
    c.iter()
        .rev()
        .fold(BigInt::zero(), |acc, x| acc * point + x)
}

/// Multiplicity of the root `q = point`. At `q = 1` this is measured on the
/// branch `u = 1`, which agrees with the `(1-q)`-order for q-polynomials.
pub fn vanishing_order(p: &UPoly, point: i64) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut c = point_coeffs(p, point)?;
    let mut e = 0;
    while let Some(next) = div_linear(&c, point) {
        c = next;
        e += 1;
    }
    Ok(e)
}

/// A quotient of polynomials whose limit at `q = point` is wanted.
#[derive(Clone, Debug)]
pub struct LimitProblem {
    pub numerator: UPoly,
    pub denominator: UPoly,
    pub point: i64,
}

impl LimitProblem {
    pub fn new(numerator: UPoly, denominator: UPoly, point: i64) -> Self {
        LimitProblem {
            numerator,
            denominator,
            point,
        }
    }

    pub fn limit(&self) -> Result<BigRational> {
        exact_limit(&self.numerator, &self.denominator, self.point)
    }
}

/// `lim num/den` at `q = point`, by stripping the common linear factor.
pub fn exact_limit(num: &UPoly, den: &UPoly, point: i64) -> Result<BigRational> {
    let ed = vanishing_order(den, point)?;
    if num.is_zero() {
        return Ok(BigRational::zero());
    }
    let en = vanishing_order(num, point)?;
    if en < ed {
        return Err(Error::OrderDeficit {
            numerator: en,
            denominator: ed,
        });
    }
    let n = strip(point_coeffs(num, point)?, point, ed);
    let d = strip(point_coeffs(den, point)?, point, ed);
    Ok(BigRational::new(eval(&n, point), eval(&d, point)))
}

/// `sum_{j<=n} sign^j q^{r j^2 + m j} [n, j]_{q^base}` with `sign = -1` when `alternating`.
pub fn weighted_sum(n: i64, r: HalfInt, m: HalfInt, base: HalfInt, alternating: bool) -> UPoly {
    let mut acc = UPoly::zero();
    for j in 0..=n {
        let g = gauss_binomial(n, j, base).expect("positive base");
        let e = r * (j * j) + m * j;
        assert!(e.twice() >= 0, "negative exponent");
        let mut term = g.shift(e.twice() as usize);
        if alternating && j % 2 == 1 {
            term = -term;
        }
        acc = &acc + &term;
    }
    acc
}

/// `f(n, r, m, k) = sum_j (-1)^j q^{r j^2 + m j} [n, j]_{q^k}`.
pub fn f_sum(n: i64, r: HalfInt, m: HalfInt, k: HalfInt) -> UPoly {
    weighted_sum(n, r, m, k, true)
}

/// `(q^{k/2+m}; q^k)_n`, the product form of `f(n, k/2, m, k)`.
pub fn half_quad_product(n: usize, m: HalfInt, k: HalfInt) -> UPoly {
    let half = HalfInt::from_twice(k.twice() / 2);
    qpoch_u(1, half + m, k, n)
}

/// Parameters of a limit instance. Unused slots are ignored; for the prime
/// ids `k` holds the prime `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LimitParams {
    pub n: i64,
    pub m: i64,
    pub k: i64,
    pub r: i64,
}

/// The limit theorems. Sums with `q -> -1` run to the full index `2n` or
/// `2n+1` in base `q^{2k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitId {
    /// `sum_{j<=2n} (-1)^j q^{mj} [2n, j]_{q^k} / (q;q^2)_n -> k^n` at `q = 1`.
    AltEven,
    /// `sum_{j<=2n+1} (-1)^j q^{mj} [2n+1, j]_{q^k} / (q;q^2)_{n+1} -> m k^n` at `q = 1`.
    AltOdd,
    /// `sum_{j<=2n} q^{(2m+1)j} [2n, j]_{q^{2k}} / (-q;q^2)_n -> (2k)^n` at `q = -1`.
    NegEven,
    /// `sum_{j<=2n+1} q^{(2m+1)j} [2n+1, j]_{q^{2k}} / (-q;q^2)_{n+1} -> (2k)^n (2m+1)` at `q = -1`.
    NegOdd,
    /// `sum_{j<=2n} (-1)^j q^{rj^2+mj} [2n, j]_{q^k} / (q;q^2)_n -> (k-2r)^n` at `q = 1`.
    QuadEven,
    /// `sum_{j<=2n+1} (-1)^j q^{rj^2+mj} [2n+1, j]_{q^k} / (q;q^2)_{n+1} -> ((2n+1)r+m)(k-2r)^n` at `q = 1`.
    QuadOdd,
    /// `sum_{j<=2n} q^{rj^2+mj} [2n, j]_{q^{2k}} / (-q;q)_{2n} -> (k-r)^n` at `q = -1`, `r+m` odd.
    NegQuadEven,
    /// `sum_{j<=2n+1} q^{rj^2+mj} [2n+1, j]_{q^{2k}} / (-q;q)_{2n+1} -> ((2n+1)r+m)(k-r)^n` at `q = -1`, `r+m` odd.
    NegQuadOdd,
    /// `sum_{j<=2n} q^{(2m+1)j} [2n, j]_{q^{2p}} / (-q;q)_{2n} -> p^n` at `q = -1`.
    PrimeEven,
    /// `sum_{j<=2n+1} q^{(2m+1)j} [2n+1, j]_{q^{2p}} / (-q;q)_{2n+1} -> p^n (2m+1)` at `q = -1`.
    PrimeOdd,
    /// `f(2n, k/2, m, k) / (q;q^2)_n -> [n = 0]` at `q = 1`.
    HalfQuad,
    /// Negative control: the quadratic even limit claimed as `(k+2r)^n`.
    QuadEvenSignFlip,
}

impl LimitId {
    pub const ALL: [LimitId; 12] = [
        LimitId::AltEven,
        LimitId::AltOdd,
        LimitId::NegEven,
        LimitId::NegOdd,
        LimitId::QuadEven,
        LimitId::QuadOdd,
        LimitId::NegQuadEven,
        LimitId::NegQuadOdd,
        LimitId::PrimeEven,
        LimitId::PrimeOdd,
        LimitId::HalfQuad,
        LimitId::QuadEvenSignFlip,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LimitId::AltEven => "alt-even",
            LimitId::AltOdd => "alt-odd",
            LimitId::NegEven => "neg-even",
            LimitId::NegOdd => "neg-odd",
            LimitId::QuadEven => "quad-even",
            LimitId::QuadOdd => "quad-odd",
            LimitId::NegQuadEven => "neg-quad-even",
            LimitId::NegQuadOdd => "neg-quad-odd",
            LimitId::PrimeEven => "prime-even",
            LimitId::PrimeOdd => "prime-odd",
            LimitId::HalfQuad => "half-quad",
            LimitId::QuadEvenSignFlip => "quad-even-sign-flip",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn is_negative_control(self) -> bool {
        self == LimitId::QuadEvenSignFlip
    }

    /// Whether `p` lies in the stated parameter range.
    pub fn admits(self, p: &LimitParams) -> bool {
        if p.n < 0 || p.m < 0 || p.k < 1 || p.r < 0 {
            return false;
        }
        match self {
            LimitId::QuadEven | LimitId::QuadOdd | LimitId::QuadEvenSignFlip => p.k > 2 * p.r,
            LimitId::NegQuadEven | LimitId::NegQuadOdd => (p.r + p.m) % 2 == 1,
            LimitId::PrimeEven | LimitId::PrimeOdd => padic(p.k as u64, 1).is_ok(),
            _ => true,
        }
    }

    /// The limit problem for `p`: numerator, denominator and point.
    pub fn problem(self, p: &LimitParams) -> Result<LimitProblem> {
        if !self.admits(p) {
            return Err(Error::InvalidParameter(
                "parameters outside the stated range",
            ));
        }
        let (n, m, k, r) = (p.n, p.m, p.k, p.r);
        let hi = HalfInt::int;
        let nu = n as usize;
        let odd_m = hi(2 * m + 1);
        Ok(match self {
            LimitId::AltEven => LimitProblem::new(
                weighted_sum(2 * n, hi(0), hi(m), hi(k), true),
                qpoch_u(1, Q, Q2, nu),
                1,
            ),
            LimitId::AltOdd => LimitProblem::new(
                weighted_sum(2 * n + 1, hi(0), hi(m), hi(k), true),
                qpoch_u(1, Q, Q2, nu + 1),
                1,
            ),
            LimitId::NegEven => LimitProblem::new(
                weighted_sum(2 * n, hi(0), odd_m, hi(2 * k), false),
                qpoch_u(-1, Q, Q2, nu),
                -1,
            ),
            LimitId::NegOdd => LimitProblem::new(
                weighted_sum(2 * n + 1, hi(0), odd_m, hi(2 * k), false),
                qpoch_u(-1, Q, Q2, nu + 1),
                -1,
            ),
            LimitId::QuadEven | LimitId::QuadEvenSignFlip => LimitProblem::new(
                weighted_sum(2 * n, hi(r), hi(m), hi(k), true),
                qpoch_u(1, Q, Q2, nu),
                1,
            ),
            LimitId::QuadOdd => LimitProblem::new(
                weighted_sum(2 * n + 1, hi(r), hi(m), hi(k), true),
                qpoch_u(1, Q, Q2, nu + 1),
                1,
            ),
            LimitId::NegQuadEven => LimitProblem::new(
                weighted_sum(2 * n, hi(r), hi(m), hi(2 * k), false),
                qpoch_u(-1, Q, Q, 2 * nu),
                -1,
            ),
            LimitId::NegQuadOdd => LimitProblem::new(
                weighted_sum(2 * n + 1, hi(r), hi(m), hi(2 * k), false),
                qpoch_u(-1, Q, Q, 2 * nu + 1),
                -1,
            ),
            LimitId::PrimeEven => LimitProblem::new(
                weighted_sum(2 * n, hi(0), odd_m, hi(2 * k), false),
                qpoch_u(-1, Q, Q, 2 * nu),
                -1,
            ),
            LimitId::PrimeOdd => LimitProblem::new(
                weighted_sum(2 * n + 1, hi(0), odd_m, hi(2 * k), false),
                qpoch_u(-1, Q, Q, 2 * nu + 1),
                -1,
            ),
            LimitId::HalfQuad => {
                let half = HalfInt::from_twice(k);
                LimitProblem::new(
                    weighted_sum(2 * n, half, hi(m), hi(k), true),
                    qpoch_u(1, Q, Q2, nu),
                    1,
                )
            }
        })
    }

    /// The closed-form value.
    pub fn expected(self, p: &LimitParams) -> BigInt {
        let (n, m, k, r) = (p.n, p.m, p.k, p.r);
        let pw = |b: i64| BigInt::from(b).pow(n as u32);
        match self {
            LimitId::AltEven => pw(k),
            LimitId::AltOdd => BigInt::from(m) * pw(k),
            LimitId::NegEven => pw(2 * k),
            LimitId::NegOdd => pw(2 * k) * (2 * m + 1),
            LimitId::QuadEven => pw(k - 2 * r),
            LimitId::QuadOdd => BigInt::from((2 * n + 1) * r + m) * pw(k - 2 * r),
            LimitId::NegQuadEven => pw(k - r),
            LimitId::NegQuadOdd => BigInt::from((2 * n + 1) * r + m) * pw(k - r),
            LimitId::PrimeEven => pw(k),
            LimitId::PrimeOdd => pw(k) * (2 * m + 1),
            LimitId::HalfQuad => BigInt::from(i64::from(n == 0)),
            LimitId::QuadEvenSignFlip => pw(k + 2 * r),
        }
    }

    pub fn check(self, p: &LimitParams) -> Result<LimitReport> {
        let computed = self.problem(p)?.limit();
        let expected = BigRational::from_integer(self.expected(p));
        let pass = computed.as_ref().is_ok_and(|c| *c == expected);
        Ok(LimitReport {
            id: self.id(),
            params: *p,
            expected,
            computed,
            pass,
        })
    }
}

#[derive(Clone, Debug)]
pub struct LimitReport {
    pub id: &'static str,
    pub params: LimitParams,
    pub expected: BigRational,
    /// An `OrderDeficit` here means the limit does not exist.
    pub computed: Result<BigRational>,
    pub pass: bool,
}

impl LimitReport {
    pub fn describe(&self) -> alloc::string::String {
        format!(
            "{} {:?}: expected {}, computed {:?}",
            self.id, self.params, self.expected, self.computed
        )
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `(v_p(x), p^{v_p(x)})`.
pub fn padic(p: u64, x: u64) -> Result<(u32, BigInt)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x == 0 {
        return Err(Error::InvalidParameter("valuation of zero"));
    }
    let mut v = 0;
    let mut y = x;
    while y.is_multiple_of(p) {
        y /= p;
        v += 1;
    }
    Ok((v, BigInt::from(p).pow(v)))
}

/// `v_p(n!)` by Legendre's formula.
pub fn v_factorial(p: u64, n: u64) -> u64 {
    let mut acc = 0;
    let mut pk = p;
    while pk <= n {
        acc += n / pk;
        pk = match pk.checked_mul(p) {
            Some(v) => v,
            None => break,
        };
    }
    acc
}

/// `c_p(2m+1, n, -1)`: `p^{h + v_p((2h)!) - v_p(h!)}` for `n = 2h`, and
/// `(2m+1) p^{h + v_p((2h+1)!) - v_p(h!)}` for `n = 2h+1`.
pub fn c_p_minus1(p: u64, m: u64, n: u64) -> Result<BigInt> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotPrime(p));
    }
    let h = n / 2;
    let e = h + v_factorial(p, n) - v_factorial(p, h);
    let base = BigInt::from(p).pow(e as u32);
    Ok(if n.is_odd() { base * (2 * m + 1) } else { base })
}

/// Limit by repeated differentiation: the first non-vanishing derivative of the
/// denominator at `q = point` decides the order. Independent of [`exact_limit`].
pub fn lhospital_limit(num: &UPoly, den: &UPoly, point: i64) -> Result<BigRational> {
    let mut a = num.clone();
    let mut b = den.clone();
    loop {
        if b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let bv = b.eval_q_int(point)?;
        let av = a.eval_q_int(point)?;
        if !bv.is_zero() {
            return Ok(av / bv);
        }
        if !av.is_zero() {
            return Err(Error::OrderDeficit {
                numerator: 0,
                denominator: 1,
            });
        }
        a = a.derivative_q()?;
        b = b.derivative_q()?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_q_coeffs(c)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn orders() {
        assert_eq!(vanishing_order(&qpoch_u(1, Q, Q2, 2), 1).unwrap(), 2);
        assert_eq!(vanishing_order(&up(&[1, 1]), 1).unwrap(), 0);
        assert_eq!(vanishing_order(&up(&[1, 1]), -1).unwrap(), 1);
        assert_eq!(
            vanishing_order(&f_sum(2, HalfInt::ONE, HalfInt::ZERO, HalfInt::int(4)), 1).unwrap(),
            1
        );
        assert_eq!(
            vanishing_order(&UPoly::zero(), 1),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn limits() {
        assert_eq!(
            exact_limit(&up(&[1, 0, 0, -1]), &up(&[1, 0, -1]), 1).unwrap(),
            rat(3, 2)
        );
        let num = f_sum(2, HalfInt::ZERO, HalfInt::ONE, HalfInt::int(2));
        assert_eq!(exact_limit(&num, &up(&[1, -1]), 1).unwrap(), rat(2, 1));
        let sq = &up(&[1, -1]) * &up(&[1, -1]);
        assert!(matches!(
            exact_limit(&up(&[1, 0, -1]), &sq, 1),
            Err(Error::OrderDeficit { .. })
        ));
    }

    #[test]
    fn product_form() {
        assert_eq!(
            f_sum(2, HalfInt::ONE, HalfInt::ZERO, HalfInt::int(2)),
            qpoch_u(1, Q, Q2, 2)
        );
        assert_eq!(
            f_sum(0, HalfInt::int(3), HalfInt::int(2), HalfInt::int(5)),
            UPoly::one()
        );
        assert_eq!(
            f_sum(2, HalfInt::ZERO, HalfInt::ZERO, HalfInt::ONE),
            up(&[1, -1])
        );
        for n in 0..=6 {
            for m in 0..=3 {
                for k in 1..=5 {
                    let mm = HalfInt::int(m);
                    let kk = HalfInt::int(k);
                    let lhs = f_sum(n, HalfInt::from_twice(k), mm, kk);
                    assert_eq!(
                        lhs,
                        half_quad_product(n as usize, mm, kk),
                        "{} {} {}",
                        n,
                        m,
                        k
                    );
                }
            }
        }
    }

    #[test]
    fn worked_instances() {
        let p = LimitParams {
            n: 1,
            m: 1,
            k: 2,
            r: 0,
        };
        assert!(LimitId::AltEven.check(&p).unwrap().pass);
        let p = LimitParams {
            n: 1,
            m: 0,
            k: 4,
            r: 1,
        };
        let rep = LimitId::QuadEven.check(&p).unwrap();
        assert_eq!(rep.computed.unwrap(), rat(2, 1));
        let p = LimitParams {
            n: 0,
            m: 2,
            k: 5,
            r: 1,
        };
        assert_eq!(
            LimitId::QuadOdd.check(&p).unwrap().computed.unwrap(),
            rat(3, 1)
        );
        let p = LimitParams {
            n: 1,
            m: 0,
            k: 1,
            r: 0,
        };
        assert_eq!(
            LimitId::NegEven.check(&p).unwrap().computed.unwrap(),
            rat(2, 1)
        );
    }

    #[test]
    fn theorem_grid() {
        for n in 0..=3 {
            for m in 0..=4 {
                for k in 1..=4 {
                    let p = LimitParams { n, m, k, r: 0 };
                    for id in [
                        LimitId::AltEven,
                        LimitId::AltOdd,
                        LimitId::NegEven,
                        LimitId::NegOdd,
                    ] {
                        let rep = id.check(&p).unwrap();
                        assert!(rep.pass, "{}", rep.describe());
                    }
                }
            }
        }
        for n in 0..=3 {
            for r in 0..=3 {
                for m in 0..=3 {
                    for k in 1..=6 {
                        let p = LimitParams { n, m, k, r };
                        for id in [
                            LimitId::QuadEven,
                            LimitId::QuadOdd,
                            LimitId::NegQuadEven,
                            LimitId::NegQuadOdd,
                        ] {
                            if id.admits(&p) {
                                let rep = id.check(&p).unwrap();
                                assert!(rep.pass, "{}", rep.describe());
                            }
                        }
                    }
                }
            }
        }
        for k in [3, 5] {
            for n in 0..=3 {
                for m in 0..=3 {
                    let p = LimitParams { n, m, k, r: 0 };
                    assert!(LimitId::PrimeEven.check(&p).unwrap().pass);
                    assert!(LimitId::PrimeOdd.check(&p).unwrap().pass);
                }
            }
        }
        for n in 0..=3 {
            for m in 0..=3 {
                for k in 1..=4 {
                    let p = LimitParams { n, m, k, r: 0 };
                    assert!(LimitId::HalfQuad.check(&p).unwrap().pass);
                }
            }
        }
    }

    #[test]
    fn negative_control_fails() {
        let p = LimitParams {
            n: 1,
            m: 0,
            k: 4,
            r: 1,
        };
        assert!(!LimitId::QuadEvenSignFlip.check(&p).unwrap().pass);
    }

    #[test]
    fn prime_and_square_base_agree() {
        // p^n from the (-q;q)_{2n} form equals (2p)^n / 2^n from the (-q;q^2)_n form
        for p in [3, 5] {
            for n in 0..=3 {
                let prm = LimitParams {
                    n,
                    m: 1,
                    k: p,
                    r: 0,
                };
                let a = LimitId::PrimeEven.check(&prm).unwrap().computed.unwrap();
                let b = LimitId::NegEven.check(&prm).unwrap().computed.unwrap();
                assert_eq!(
                    a * BigRational::from_integer(BigInt::from(2).pow(n as u32)),
                    b
                );
            }
        }
        for n in 0..=4usize {
            let r = exact_limit(&qpoch_u(-1, Q, Q, 2 * n), &qpoch_u(-1, Q, Q2, n), -1).unwrap();
            assert_eq!(r, BigRational::from_integer(BigInt::from(2).pow(n as u32)));
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(padic(3, 18).unwrap(), (2, BigInt::from(9)));
        assert_eq!(padic(3, 5).unwrap(), (0, BigInt::from(1)));
        assert_eq!(padic(2, 8).unwrap(), (3, BigInt::from(8)));
        assert_eq!(padic(4, 8), Err(Error::NotPrime(4)));
        assert_eq!(v_factorial(3, 9), 4);
    }

    #[test]
    fn c3_list() {
        let want = [1, 5, 3, 45, 27, 135, 81, 405, 243, 5 * 3i64.pow(7)];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(c_p_minus1(3, 2, n as u64).unwrap(), BigInt::from(*w));
        }
        assert_eq!(c_p_minus1(3, 0, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn division_matches_differentiation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let order = rng.gen_range(0..=3);
            let mut num = UPoly::one();
            let mut den = UPoly::one();
            for _ in 0..order {
                num = &num * &up(&[1, -1]);
                den = &den * &up(&[1, -1]);
            }
            let extra = rng.gen_range(0..=1);
            for _ in 0..extra {
                num = &num * &up(&[1, -1]);
            }
            let cof = |rng: &mut ChaCha8Rng| {
                let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-3..=3)).collect();
                let p = up(&c);
                if p.eval_q_int(1).unwrap().is_zero() {
                    &p + &UPoly::one()
                } else {
                    p
                }
            };
            num = &num * &cof(&mut rng);
            den = &den * &cof(&mut rng);
            if num.is_zero() || den.is_zero() {
                continue;
            }
            assert_eq!(
                exact_limit(&num, &den, 1).unwrap(),
                lhospital_limit(&num, &den, 1).unwrap()
            );
        }
    }
}

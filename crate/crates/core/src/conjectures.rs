//! Divisibility scans for alternating and non-alternating Rogers-Szegö
//! values at prime-power bases. A failed division is a result, not an error.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::check::Comparison;
use crate::error::{Error, Result};
use crate::exactalg::{HalfInt, RatFn, UPoly};
use crate::limits::{c_p_minus1, padic, weighted_sum};
use crate::normalized::alt_power_sum;
use crate::qfun::qpoch_u;

const Q: HalfInt = HalfInt::ONE;
const Q2: HalfInt = HalfInt::int(2);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// `r_n(-q^m, q^{2^k})` is divisible by `(q;q^2)_{floor((n+1)/2)}`.
    PowerOfTwoBase,
    /// `sum_j (-1)^j q^{mj} [n,j]_{q^p}` is divisible by
    /// `prod_{j=1}^{floor((n+1)/2)} (1 - q^{(2j-1)/V_p(2j-1)})`.
    PrimeBase,
    /// `r_n(q^{2m+1}, q^{2p}) = prod_{k=1}^n (1 + q^{k/V_p(k)}) c_p(2m+1, n, q)` with integral `c_p`.
    OddPrimeProduct,
    /// Negative control: the power-of-two case with one more factor, `(q;q^2)_{floor((n+1)/2)+1}`.
    PowerOfTwoBaseOverreach,
}

impl Conjecture {
    pub const ALL: [Conjecture; 4] = [
        Conjecture::PowerOfTwoBase,
        Conjecture::PrimeBase,
        Conjecture::OddPrimeProduct,
        Conjecture::PowerOfTwoBaseOverreach,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Conjecture::PowerOfTwoBase => "power-of-two-base",
            Conjecture::PrimeBase => "prime-base",
            Conjecture::OddPrimeProduct => "odd-prime-product",
            Conjecture::PowerOfTwoBaseOverreach => "power-of-two-base-overreach",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn is_negative_control(self) -> bool {
        self == Conjecture::PowerOfTwoBaseOverreach
    }

    /// Rejects a base parameter outside the conjecture's statement: `k` must be a
    /// small non-negative integer, `p` a prime (an odd one for the product form).
    pub fn check_parameter(self, a: i64) -> Result<()> {
        match self {
            Conjecture::PowerOfTwoBase | Conjecture::PowerOfTwoBaseOverreach => {
                if (0..=30).contains(&a) {
                    Ok(())
                } else {
                    Err(Error::InvalidParameter("k must lie in 0..=30"))
                }
            }
            _ if a < 2 || (a == 2 && self == Conjecture::OddPrimeProduct) => {
                Err(Error::NotPrime(a.max(0) as u64))
            }
            _ => padic(a as u64, 1).map(|_| ()),
        }
    }

    /// Target polynomial and divisor. `a` is `k` for the power-of-two cases and `p` otherwise.
    pub fn target_and_divisor(self, n: i64, m: i64, a: i64) -> Result<(UPoly, UPoly)> {
        if n < 0 || m < 0 {
            return Err(Error::InvalidParameter(
                "scan parameters must be non-negative",
            ));
        }
        self.check_parameter(a)?;
        let half = ((n + 1) / 2) as usize;
        Ok(match self {
            Conjecture::PowerOfTwoBase | Conjecture::PowerOfTwoBaseOverreach => {
                let extra = usize::from(self == Conjecture::PowerOfTwoBaseOverreach);
                let base = HalfInt::int(1i64 << a);
                (alt_power_sum(n, m, base), qpoch_u(1, Q, Q2, half + extra))
            }
            Conjecture::PrimeBase => {
                let mut d = UPoly::one();
                for j in 1..=half as u64 {
                    let (_, v) = padic(a as u64, 2 * j - 1)?;
                    let e = (BigInt::from(2 * j - 1) / v)
                        .try_into()
                        .expect("small exponent");
                    d = &d * &(&UPoly::one() - &UPoly::q_pow(e));
                }
                (alt_power_sum(n, m, HalfInt::int(a)), d)
            }
            Conjecture::OddPrimeProduct => {
                let mut d = UPoly::one();
                for k in 1..=n as u64 {
                    let (_, v) = padic(a as u64, k)?;
                    let e: usize = (BigInt::from(k) / v).try_into().expect("small exponent");
                    d = &d * &(&UPoly::one() + &UPoly::q_pow(e));
                }
                (
                    weighted_sum(
                        n,
                        HalfInt::ZERO,
                        HalfInt::int(2 * m + 1),
                        HalfInt::int(2 * a),
                        false,
                    ),
                    d,
                )
            }
        })
    }

    pub fn test(self, n: i64, m: i64, a: i64) -> Result<ScanResult> {
        let (target, divisor) = self.target_and_divisor(n, m, a)?;
        let (cofactor, remainder) = match target.div_exact(&divisor) {
            Ok(c) => (Some(c), None),
            Err(Error::NotDivisible { remainder }) => {
                (None, Some(remainder.unwrap_or_else(|| target.clone())))
            }
            Err(e) => return Err(e),
        };
        let eval = |q: i64| cofactor.as_ref().map(|c| c.eval_q_int(q)).transpose();
        let at_one = eval(1)?;
        let at_minus_one = eval(-1)?;
        let expected_at_minus_one = match (self, &cofactor) {
            (Conjecture::OddPrimeProduct, Some(_)) => {
                Some(c_p_minus1(a as u64, m as u64, n as u64)?)
            }
            _ => None,
        };
        Ok(ScanResult {
            conjecture: self.id(),
            n,
            m,
            a,
            holds: cofactor.is_some(),
            cofactor,
            remainder,
            at_one,
            at_minus_one,
            expected_at_minus_one,
        })
    }

    /// All tuples `n <= n_max`, `m <= m_max`, `a` in `values`, in that nesting order.
    pub fn scan(self, n_max: i64, m_max: i64, values: &[i64]) -> Result<Vec<ScanResult>> {
        let mut out = Vec::new();
        for &a in values {
            for m in 0..=m_max {
                for n in 0..=n_max {
                    out.push(self.test(n, m, a)?);
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    pub conjecture: &'static str,
    pub n: i64,
    pub m: i64,
    /// `k` for the power-of-two cases, the prime `p` otherwise.
    pub a: i64,
    pub holds: bool,
    pub cofactor: Option<UPoly>,
    pub remainder: Option<UPoly>,
    pub at_one: Option<BigRational>,
    pub at_minus_one: Option<BigRational>,
    /// The closed-form value of the cofactor at `q = -1`, for the product conjecture.
    pub expected_at_minus_one: Option<BigInt>,
}

impl ScanResult {
    /// Division held and, for the product conjecture, the cofactor takes the
    /// values `1` at `q = 1` and the closed form at `q = -1`.
    pub fn consistent(&self) -> bool {
        if !self.holds {
            return false;
        }
        match &self.expected_at_minus_one {
            None => true,
            Some(e) => {
                self.at_one == Some(BigRational::from_integer(1.into()))
                    && self.at_minus_one == Some(BigRational::from_integer(e.clone()))
            }
        }
    }
}

/// `(q; -q)_n = prod_{j<n} (1 - (-1)^j q^{j+1})`.
pub fn qpoch_minus_q(n: usize) -> UPoly {
    let mut out = UPoly::one();
    for j in 0..n {
        let sign = if j % 2 == 0 { -1 } else { 1 };
        out = &out * &(&UPoly::one() + &UPoly::q_pow(j + 1).scale(&BigInt::from(sign)));
    }
    out
}

/// Factorizations and divisibility facts relating the bases `q`, `-q` and `q^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nesting {
    /// `(q;-q)_n = (q;q^2)_{floor((n+1)/2)} (-q^2;q^2)_{floor(n/2)}`.
    MinusQSplit,
    /// `(q^2;q^4)_h = (q;q^2)_h (-q;q^2)_h`.
    SquareSplit,
    /// `sum_j (-1)^j q^{(2m+1)j} [n,j]_{q^2}` is divisible by `(q;-q)_n`.
    OddExponentMinusQ,
    /// `sum_j (-1)^j q^{mj} [n,j]_{q^2}` is divisible by `(q;q^2)_{floor((n+1)/2)}`.
    SquareBaseAlternating,
}

impl Nesting {
    pub const ALL: [Nesting; 4] = [
        Nesting::MinusQSplit,
        Nesting::SquareSplit,
        Nesting::OddExponentMinusQ,
        Nesting::SquareBaseAlternating,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Nesting::MinusQSplit => "minus-q-split",
            Nesting::SquareSplit => "square-pochhammer-split",
            Nesting::OddExponentMinusQ => "odd-exponent-minus-q",
            Nesting::SquareBaseAlternating => "square-base-alternating",
        }
    }

    /// Both products for the splits; target and divisor for the divisibility entries.
    pub fn sides(self, n: i64, m: i64) -> (UPoly, UPoly) {
        let nu = n as usize;
        let half = nu.div_ceil(2);
        match self {
            Nesting::MinusQSplit => (
                qpoch_minus_q(nu),
                &qpoch_u(1, Q, Q2, half) * &qpoch_u(-1, Q2, Q2, nu / 2),
            ),
            Nesting::SquareSplit => (
                qpoch_u(1, Q2, HalfInt::int(4), nu),
                &qpoch_u(1, Q, Q2, nu) * &qpoch_u(-1, Q, Q2, nu),
            ),
            Nesting::OddExponentMinusQ => (alt_power_sum(n, 2 * m + 1, Q2), qpoch_minus_q(nu)),
            Nesting::SquareBaseAlternating => (alt_power_sum(n, m, Q2), qpoch_u(1, Q, Q2, half)),
        }
    }

    pub fn holds(self, n: i64, m: i64) -> bool {
        let (a, b) = self.sides(n, m);
        match self {
            Nesting::MinusQSplit | Nesting::SquareSplit => a == b,
            _ => a.div_exact(&b).is_ok(),
        }
    }

    /// The splits as comparisons, for uniform reporting.
    pub fn compare(self, n: i64, m: i64) -> Option<Comparison> {
        match self {
            Nesting::MinusQSplit | Nesting::SquareSplit => {
                let (a, b) = self.sides(n, m);
                Some(Comparison::new(RatFn::from(a), RatFn::from(b)))
            }
            _ => None,
        }
    }
}

/// `c_p(2m+1, n, q)` by exact division.
pub fn c_p(p: i64, m: i64, n: i64) -> Result<UPoly> {
    let (t, d) = Conjecture::OddPrimeProduct.target_and_divisor(n, m, p)?;
    t.div_exact(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_q_coeffs(c)
    }

    #[test]
    fn worked_divisions() {
        let r = Conjecture::PowerOfTwoBase.test(2, 0, 0).unwrap();
        assert_eq!(r.cofactor, Some(UPoly::one()));
        let r = Conjecture::PowerOfTwoBase.test(3, 1, 0).unwrap();
        assert_eq!(r.cofactor, Some(UPoly::one()));
        let r = Conjecture::PowerOfTwoBase.test(2, 1, 1).unwrap();
        assert_eq!(r.cofactor, Some(up(&[1, 0, 1])));
        let r = Conjecture::PowerOfTwoBase.test(2, 1, 2).unwrap();
        assert_eq!(r.cofactor, Some(up(&[1, 0, 1, 1, 1])));
        let (_, d) = Conjecture::PrimeBase.target_and_divisor(3, 1, 3).unwrap();
        assert_eq!(d, &up(&[1, -1]) * &up(&[1, -1]));
        assert!(Conjecture::PrimeBase.test(3, 1, 3).unwrap().holds);
        assert!(Conjecture::PrimeBase.test(1, 5, 3).unwrap().holds);
    }

    #[test]
    fn p3_example() {
        assert_eq!(c_p(3, 2, 0).unwrap(), UPoly::one());
        assert_eq!(c_p(3, 2, 1).unwrap(), up(&[1, -1, 1, -1, 1]));
        assert_eq!(c_p(3, 2, 2).unwrap(), up(&[1, -1, 0, 0, 1, 0, -1, 0, 1]));
        let third =
            &up(&[1, -1, 1, -1, 1]) * &up(&[1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 1, 0, 0, -1, 1]);
        assert_eq!(c_p(3, 2, 3).unwrap(), third);
        let want = [1, 5, 3, 45, 27, 135, 81, 405, 243, 5 * 3i64.pow(7)];
        for (n, w) in want.iter().enumerate() {
            let c = c_p(3, 2, n as i64).unwrap();
            assert_eq!(
                c.eval_q_int(1).unwrap(),
                BigRational::from_integer(1.into())
            );
            assert_eq!(
                c.eval_q_int(-1).unwrap(),
                BigRational::from_integer((*w).into())
            );
        }
    }

    #[test]
    fn default_grid_holds() {
        for r in Conjecture::PowerOfTwoBase
            .scan(12, 6, &[0, 1, 2, 3])
            .unwrap()
        {
            assert!(r.consistent(), "{:?}", (r.n, r.m, r.a));
        }
        for r in Conjecture::PrimeBase.scan(12, 6, &[2, 3, 5, 7]).unwrap() {
            assert!(r.consistent(), "{:?}", (r.n, r.m, r.a));
        }
        for r in Conjecture::OddPrimeProduct.scan(10, 3, &[3, 5, 7]).unwrap() {
            assert!(r.consistent(), "{:?}", (r.n, r.m, r.a));
        }
    }

    #[test]
    fn holds_round_trips() {
        for r in Conjecture::PrimeBase.scan(6, 2, &[3]).unwrap() {
            let (t, d) = Conjecture::PrimeBase
                .target_and_divisor(r.n, r.m, r.a)
                .unwrap();
            assert_eq!(&d * r.cofactor.as_ref().unwrap(), t);
        }
    }

    #[test]
    fn overreach_fails_with_remainder() {
        let r = Conjecture::PowerOfTwoBaseOverreach.test(2, 0, 0).unwrap();
        assert!(!r.holds);
        assert!(r.remainder.as_ref().is_some_and(|x| !x.is_zero()));
        let scan = Conjecture::PowerOfTwoBaseOverreach
            .scan(6, 2, &[1])
            .unwrap();
        assert!(scan.iter().any(|r| !r.holds));
    }

    #[test]
    fn nesting() {
        for n in 0..=12 {
            for m in 0..=6 {
                for id in Nesting::ALL {
                    assert!(id.holds(n, m), "{} {} {}", id.id(), n, m);
                }
            }
        }
    }

    #[test]
    fn odd_prime_only() {
        assert_eq!(
            Conjecture::OddPrimeProduct.test(2, 0, 2).unwrap_err(),
            Error::NotPrime(2)
        );
        assert_eq!(
            Conjecture::PrimeBase.test(2, 0, 4).unwrap_err(),
            Error::NotPrime(4)
        );
        assert_eq!(
            Conjecture::PrimeBase.test(0, 0, 9).unwrap_err(),
            Error::NotPrime(9)
        );
        assert!(Conjecture::PrimeBase.check_parameter(-3).is_err());
        assert!(Conjecture::PowerOfTwoBase.check_parameter(31).is_err());
        assert!(Conjecture::OddPrimeProduct.check_parameter(7).is_ok());
    }
}

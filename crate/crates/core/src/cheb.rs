//! q-Chebyshev polynomials `T`, `U`, `V` in `(x, s)` and their links to
//! alternating Rogers-Szegö values.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::check::Comparison;
use crate::error::{Error, Result};
use crate::exactalg::{HalfInt, MPoly, RatFn, Sym, UPoly};
use crate::normalized::{big_f_at, f_at};
use crate::qfun::{gauss, q_int, qpoch_u};
use crate::rogers::rs_at;

const Q: HalfInt = HalfInt::ONE;
const Q2: HalfInt = HalfInt::int(2);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebKind {
    /// First kind: `T_m = (1+q^{m-1}) x T_{m-1} + q^{m-1} s T_{m-2}`, `T_0 = 1`, `T_1 = x`.
    T,
    /// Second kind: `U_m = (1+q^m) x U_{m-1} + q^{m-1} s U_{m-2}`, `U_{-1} = 0`, `U_0 = 1`.
    U,
    /// Third kind: `V_m = (1+q^{2m-1}) x V_{m-1} - q^{2m-1} s^2 V_{m-2}`, `V_0 = 1`, `V_1 = (1+q)x + qs`.
    V,
}

impl ChebKind {
    pub const ALL: [ChebKind; 3] = [ChebKind::T, ChebKind::U, ChebKind::V];

    pub fn name(self) -> &'static str {
        match self {
            ChebKind::T => "T",
            ChebKind::U => "U",
            ChebKind::V => "V",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
    }
}

fn qm(k: usize) -> UPoly {
    UPoly::q_pow(k)
}

fn x() -> MPoly {
    MPoly::sym(Sym::X)
}

fn s() -> MPoly {
    MPoly::sym(Sym::S)
}

/// The whole sequence `P_0 .. P_{m_max}` of one kind, built by its recurrence.
pub fn cheb_sequence(kind: ChebKind, m_max: usize) -> Vec<MPoly> {
    let mut out: Vec<MPoly> = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let next = match (kind, m) {
            (_, 0) => MPoly::one(),
            (ChebKind::T, 1) => x(),
            (ChebKind::U, 1) => x().scale_upoly(&UPoly::from_q_coeffs(&[1, 1])),
            (ChebKind::V, 1) => {
                &x().scale_upoly(&UPoly::from_q_coeffs(&[1, 1])) + &s().scale_upoly(&qm(1))
            }
            (ChebKind::T, _) => {
                let a = &x() * &out[m - 1];
                let b = &s() * &out[m - 2];
                &a.scale_upoly(&(&UPoly::one() + &qm(m - 1))) + &b.scale_upoly(&qm(m - 1))
            }
            (ChebKind::U, _) => {
                let a = &x() * &out[m - 1];
                let b = &s() * &out[m - 2];
                &a.scale_upoly(&(&UPoly::one() + &qm(m))) + &b.scale_upoly(&qm(m - 1))
            }
            (ChebKind::V, _) => {
                let a = &x() * &out[m - 1];
                let b = &s().pow(2) * &out[m - 2];
                &a.scale_upoly(&(&UPoly::one() + &qm(2 * m - 1))) - &b.scale_upoly(&qm(2 * m - 1))
            }
        };
        out.push(next);
    }
    out
}

/// `P_m(x, s, q)`; `U_{-1} = 0`.
pub fn cheb(kind: ChebKind, m: i64) -> Result<MPoly> {
    if m < 0 {
        return match (kind, m) {
            (ChebKind::U, -1) => Ok(MPoly::zero()),
            _ => Err(Error::InvalidParameter("negative Chebyshev index")),
        };
    }
    Ok(cheb_sequence(kind, m as usize).pop().expect("nonempty"))
}

/// The explicit sums for `T` and `U`:
///
/// `U_n = sum_k q^{k^2} [n-k, k] (-q^{k+1};q)_{n-2k} s^k x^{n-2k}`,
/// `T_n = sum_k q^{k^2} [n]/[n-k] [n-k, k] (-q;q)_{n-1} / ((-q;q)_k (-q^{n-k};q)_k) s^k x^{n-2k}`.
pub fn closed_sum(kind: ChebKind, n: usize) -> Result<MPoly> {
    let mut acc = RatFn::zero();
    for k in 0..=n / 2 {
        let coeff = match kind {
            ChebKind::U => {
                let g = gauss((n - k) as i64, k as i64);
                RatFn::from(&g * &qpoch_u(-1, HalfInt::int(k as i64 + 1), Q, n - 2 * k))
            }
            ChebKind::T => {
                if n == 0 {
                    RatFn::one()
                } else {
                    let num =
                        &(&q_int(n) * &gauss((n - k) as i64, k as i64)) * &qpoch_u(-1, Q, Q, n - 1);
                    let den = &(&q_int(n - k) * &qpoch_u(-1, Q, Q, k))
                        * &qpoch_u(-1, HalfInt::int((n - k) as i64), Q, k);
                    RatFn::from(num).div(&RatFn::from(den))?
                }
            }
            ChebKind::V => {
                return Err(Error::InvalidParameter(
                    "no explicit sum for the third kind",
                ))
            }
        };
        let mono = RatFn::monomial(1, [2 * (k * k) as i64, k as i64, 0, (n - 2 * k) as i64]);
        acc = &acc + &(&coeff * &mono);
    }
    acc.to_mpoly()
}

/// Integer coefficient list in `x` of `P_m(x, -1, 1)`.
pub fn at_classical_point(kind: ChebKind, m: usize) -> Result<Vec<BigInt>> {
    let p = RatFn::from(cheb(kind, m as i64)?).subst_int(Sym::S, -1)?;
    let mut out = vec![BigInt::from(0); m + 1];
    for (e, c) in p.to_mpoly()?.terms() {
        let v = c.eval_q_int(1)?;
        out[e[2] as usize] += v.to_integer();
    }
    Ok(out)
}

/// Classical Chebyshev polynomials by `P_m = 2x P_{m-1} - P_{m-2}`, as coefficient lists in `x`.
/// The kinds differ only in `P_1`: `x`, `2x` and `2x - 1`.
pub fn classical(kind: ChebKind, m: usize) -> Vec<BigInt> {
    let p1: Vec<i64> = match kind {
        ChebKind::T => vec![0, 1],
        ChebKind::U => vec![0, 2],
        ChebKind::V => vec![-1, 2],
    };
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    let mut cur: Vec<BigInt> = p1.into_iter().map(BigInt::from).collect();
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_m(1, value, q)`; for `V` the base is `-q`, with `value` read in the original `q`.
pub fn eval_at_one(kind: ChebKind, m: i64, value: &RatFn) -> Result<RatFn> {
    let mut p = RatFn::from(cheb(kind, m)?);
    if kind == ChebKind::V {
        p = p.negate_q()?;
    }
    p.subst_int(Sym::X, 1)?.subst(Sym::S, value)
}

/// Factorizations of alternating Rogers-Szegö values through the Chebyshev families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factorization {
    /// `r_{2n}(-q^m, q) = (q;q^2)_n T_m(1, -q^{2n}, q)`.
    EvenT,
    /// `r_{2n-1}(-q^m, q) = (q;q^2)_n U_{m-1}(1, -q^{2n}, q)`, `n >= 1`.
    OddU,
    /// `r_n(q^{2m+1}, q^2) = (-q;q)_n V_m(1, -q^n, -q)`.
    SquareBaseV,
    /// Negative control: the even factorization with `T_{m+1}` in place of `T_m`.
    EvenTShifted,
}

impl Factorization {
    pub const ALL: [Factorization; 4] = [
        Factorization::EvenT,
        Factorization::OddU,
        Factorization::SquareBaseV,
        Factorization::EvenTShifted,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Factorization::EvenT => "even-T",
            Factorization::OddU => "odd-U",
            Factorization::SquareBaseV => "square-base-V",
            Factorization::EvenTShifted => "even-T-shifted",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn is_negative_control(self) -> bool {
        self == Factorization::EvenTShifted
    }

    /// Parameter ranges on which the factorization is stated.
    pub fn admits(self, n: i64, m: i64) -> bool {
        m >= 0 && n >= i64::from(self == Factorization::OddU)
    }

    pub fn compare(self, n: i64, m: i64) -> Result<Comparison> {
        if n < 0 || m < 0 {
            return Err(Error::InvalidParameter("factorizations need n, m >= 0"));
        }
        let neg_qm = RatFn::q(m).scale_int(-1);
        let neg_q2n = RatFn::q(2 * n).scale_int(-1);
        Ok(match self {
            Factorization::EvenT | Factorization::EvenTShifted => {
                let mm = if self == Factorization::EvenT {
                    m
                } else {
                    m + 1
                };
                let lhs = rs_at(2 * n, Q, &neg_qm);
                let rhs = &RatFn::from(qpoch_u(1, Q, Q2, n as usize))
                    * &eval_at_one(ChebKind::T, mm, &neg_q2n)?;
                Comparison::new(lhs, rhs)
            }
            Factorization::OddU => {
                if n < 1 {
                    return Err(Error::InvalidParameter("odd factorization needs n >= 1"));
                }
                let lhs = rs_at(2 * n - 1, Q, &neg_qm);
                let rhs = &RatFn::from(qpoch_u(1, Q, Q2, n as usize))
                    * &eval_at_one(ChebKind::U, m - 1, &neg_q2n)?;
                Comparison::new(lhs, rhs)
            }
            Factorization::SquareBaseV => {
                let lhs = rs_at(n, Q2, &RatFn::q(2 * m + 1));
                let rhs = &RatFn::from(qpoch_u(-1, Q, Q, n as usize))
                    * &eval_at_one(ChebKind::V, m, &RatFn::q(n).scale_int(-1))?;
                Comparison::new(lhs, rhs)
            }
        })
    }

    pub fn check(self, n: i64, m: i64) -> Result<()> {
        let c = self.compare(n, m)?;
        if c.holds() {
            Ok(())
        } else {
            Err(Error::IdentityViolated(format!(
                "{} at n={}, m={}",
                self.id(),
                n,
                m
            )))
        }
    }
}

/// Linear recurrences in `m` satisfied by the normalized values at powers of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bridge {
    /// `F(2n, q^m) = (1+q^{m-1}) F(2n, q^{m-1}) - q^{m-1} q^{2n} F(2n, q^{m-2})`, `m >= 2`.
    EvenF,
    /// `F(2n-1, q^m) = (1+q^{m-1}) F(2n-1, q^{m-1}) - q^{m-1} q^{2n-1} F(2n-1, q^{m-2})`, `n, m >= 1`.
    OddF,
    /// `f(n, q^{2m+1}) = (1-q^{2m-1}) f(n, q^{2m-1}) + q^{2n+2m-1} f(n, q^{2m-3})`, `m >= 1`.
    SquareBase,
}

impl Bridge {
    pub const ALL: [Bridge; 3] = [Bridge::EvenF, Bridge::OddF, Bridge::SquareBase];

    pub fn id(self) -> &'static str {
        match self {
            Bridge::EvenF => "F-even-bridge",
            Bridge::OddF => "F-odd-bridge",
            Bridge::SquareBase => "f-bridge",
        }
    }

    /// Parameter ranges on which the recurrence is stated.
    pub fn admits(self, n: i64, m: i64) -> bool {
        match self {
            Bridge::EvenF => m >= 2 && n >= 0,
            Bridge::OddF => m >= 2 && n >= 1,
            Bridge::SquareBase => m >= 1 && n >= 0,
        }
    }

    pub fn compare(self, n: i64, m: i64) -> Result<Comparison> {
        let one = RatFn::one();
        Ok(match self {
            Bridge::EvenF | Bridge::OddF => {
                let (idx, shift) = if self == Bridge::EvenF {
                    (2 * n, 2 * n)
                } else {
                    (2 * n - 1, 2 * n - 1)
                };
                if m < 2 || idx < 0 {
                    return Err(Error::InvalidParameter(
                        "bridge needs m >= 2 and a non-negative index",
                    ));
                }
                let f = |k: i64| big_f_at(idx, &RatFn::q(k));
                let rhs = &(&(&one + &RatFn::q(m - 1)) * &f(m - 1))
                    - &(&RatFn::q(m - 1 + shift) * &f(m - 2));
                Comparison::new(f(m), rhs)
            }
            Bridge::SquareBase => {
                if m < 1 || n < 0 {
                    return Err(Error::InvalidParameter("bridge needs m >= 1"));
                }
                let f = |k: i64| f_at(n, &RatFn::q(k));
                let rhs = &(&(&one - &RatFn::q(2 * m - 1)) * &f(2 * m - 1))
                    + &(&RatFn::q(2 * n + 2 * m - 1) * &f(2 * m - 3));
                Comparison::new(f(2 * m + 1), rhs)
            }
        })
    }

    /// The two starting values of the recurrence in `m`.
    pub fn initial_values(self, n: i64) -> [Comparison; 2] {
        match self {
            Bridge::EvenF => [
                Comparison::new(big_f_at(2 * n, &RatFn::one()), RatFn::one()),
                Comparison::new(big_f_at(2 * n, &RatFn::q(1)), RatFn::one()),
            ],
            Bridge::OddF => [
                Comparison::new(big_f_at(2 * n - 1, &RatFn::one()), RatFn::zero()),
                Comparison::new(big_f_at(2 * n - 1, &RatFn::q(1)), RatFn::one()),
            ],
            Bridge::SquareBase => [
                Comparison::new(f_at(n, &RatFn::q(-1)), RatFn::q(-n)),
                Comparison::new(f_at(n, &RatFn::q(1)), RatFn::one()),
            ],
        }
    }
}

/// `f(n, -1/q, q)` against `q^{-n}`, the uncorrected initial value.
pub fn uncorrected_square_base_start(n: i64) -> Comparison {
    Comparison::new(f_at(n, &RatFn::q(-1).scale_int(-1)), RatFn::q(-n))
}

/// Exact value at `q = q_sign` (`+1` or `-1`) of `P_m(1, -q^e, q)`; for `V` the base is `-q`.
pub fn boundary_value(kind: ChebKind, m: i64, e: i64, q_sign: i64) -> Result<BigRational> {
    let p = eval_at_one(kind, m, &RatFn::q(e).scale_int(-1))?;
    p.to_upoly()?.eval_q_int(q_sign)
}

/// Boundary points `-q^e` with a stated value: `e >= 0`, even for `T` and `U`.
pub fn boundary_admits(kind: ChebKind, e: i64) -> bool {
    e >= 0 && (kind == ChebKind::V || e % 2 == 0)
}

/// The boundary values as measured from the recurrences.
pub fn boundary_formula(kind: ChebKind, m: i64, e: i64, q_sign: i64) -> BigInt {
    let v = match (kind, q_sign) {
        (ChebKind::T, _) => 1,
        (ChebKind::U, 1) => m + 1,
        (ChebKind::U, _) => i64::from(m % 2 == 0),
        (ChebKind::V, 1) => 1,
        (ChebKind::V, _) => {
            if e % 2 == 0 {
                1
            } else {
                2 * m + 1
            }
        }
    };
    BigInt::from(v)
}

/// The uncorrected boundary values, for comparison with [`boundary_formula`]:
/// `T -> 1`, `U(q=1) -> 1`, `U(q=-1) -> (-1)^{C(m+1,2) floor(m/2)}`,
/// `V(q=1)` is `2m+1` for odd `e` and `1` otherwise, `V(q=-1), e even -> 1`.
pub fn uncorrected_boundary(kind: ChebKind, m: i64, e: i64, q_sign: i64) -> Option<BigInt> {
    let v = match (kind, q_sign) {
        (ChebKind::T, _) => 1,
        (ChebKind::U, 1) => 1,
        (ChebKind::U, _) => {
            if ((m * (m + 1) / 2) * (m / 2)) % 2 == 0 {
                1
            } else {
                -1
            }
        }
        (ChebKind::V, 1) => {
            if e % 2 == 1 {
                2 * m + 1
            } else {
                1
            }
        }
        (ChebKind::V, _) => {
            if e % 2 == 0 {
                1
            } else {
                return None;
            }
        }
    };
    Some(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_q_coeffs(c)
    }

    #[test]
    fn first_polynomials() {
        assert_eq!(cheb(ChebKind::T, 1).unwrap(), x());
        let v1 = &x().scale_upoly(&up(&[1, 1])) + &s().scale_upoly(&up(&[0, 1]));
        assert_eq!(cheb(ChebKind::V, 1).unwrap(), v1);
        let u2 = &x().pow(2).scale_upoly(&(&up(&[1, 1]) * &up(&[1, 0, 1])))
            + &s().scale_upoly(&up(&[0, 1]));
        assert_eq!(cheb(ChebKind::U, 2).unwrap(), u2);
        assert!(cheb(ChebKind::U, -1).unwrap().is_zero());
        assert!(cheb(ChebKind::T, -1).is_err());
        for kind in ChebKind::ALL {
            for m in 0..6 {
                assert_eq!(cheb(kind, m).unwrap().degree(Sym::X), Some(m as u32));
            }
        }
    }

    #[test]
    fn explicit_sums_match_recurrences() {
        for kind in [ChebKind::T, ChebKind::U] {
            let seq = cheb_sequence(kind, 10);
            for (m, p) in seq.iter().enumerate() {
                assert_eq!(&closed_sum(kind, m).unwrap(), p, "{} {}", kind.name(), m);
            }
        }
        assert!(closed_sum(ChebKind::V, 2).is_err());
    }

    #[test]
    fn classical_limits() {
        for kind in ChebKind::ALL {
            for m in 0..=5 {
                assert_eq!(at_classical_point(kind, m).unwrap(), classical(kind, m));
            }
        }
        // T_4 = 8x^4 - 8x^2 + 1, V_2 = 4x^2 - 2x - 1
        let t4: Vec<BigInt> = [1, 0, -8, 0, 8].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(classical(ChebKind::T, 4), t4);
        let v2: Vec<BigInt> = [-1, -2, 4].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(classical(ChebKind::V, 2), v2);
    }

    #[test]
    fn worked_factorizations() {
        // T_2(1, -q^2, q) = 1 + q - q^3
        let t2 = eval_at_one(ChebKind::T, 2, &RatFn::q(2).scale_int(-1)).unwrap();
        assert_eq!(t2.to_upoly().unwrap(), up(&[1, 1, 0, -1]));
        assert_eq!(
            rs_at(2, Q, &RatFn::q(2).scale_int(-1)).to_upoly().unwrap(),
            up(&[1, 0, -1, -1, 1])
        );
        let v1 = eval_at_one(ChebKind::V, 1, &RatFn::q(1).scale_int(-1)).unwrap();
        assert_eq!(v1.to_upoly().unwrap(), up(&[1, -1, 1]));
    }

    #[test]
    fn factorizations() {
        for n in 0..=8 {
            for m in 0..=8 {
                Factorization::EvenT.check(n, m).unwrap();
                Factorization::SquareBaseV.check(n, m).unwrap();
                if n >= 1 {
                    Factorization::OddU.check(n, m).unwrap();
                }
            }
        }
        assert!(!Factorization::EvenTShifted.compare(1, 2).unwrap().holds());
    }

    #[test]
    fn bridges() {
        for n in 0..=4 {
            for m in 2..=8 {
                assert!(Bridge::EvenF.compare(n, m).unwrap().holds());
                if n >= 1 {
                    assert!(Bridge::OddF.compare(n, m).unwrap().holds());
                }
            }
            for m in 1..=4 {
                assert!(Bridge::SquareBase.compare(n, m).unwrap().holds());
            }
            for b in Bridge::ALL {
                if b == Bridge::OddF && n == 0 {
                    continue;
                }
                assert!(
                    b.initial_values(n).iter().all(Comparison::holds),
                    "{} {}",
                    b.id(),
                    n
                );
            }
        }
        assert!(!uncorrected_square_base_start(1).holds());
    }

    #[test]
    fn boundary_values() {
        for kind in ChebKind::ALL {
            for m in 0..=8 {
                for n in 0..=4 {
                    for q_sign in [1, -1] {
                        let e = match kind {
                            ChebKind::V => n,
                            _ => 2 * n,
                        };
                        let got = boundary_value(kind, m, e, q_sign).unwrap();
                        assert_eq!(
                            got,
                            BigRational::from_integer(boundary_formula(kind, m, e, q_sign))
                        );
                    }
                }
            }
        }
        // uncorrected values that disagree with the measured ones
        assert_ne!(
            uncorrected_boundary(ChebKind::U, 2, 2, 1),
            Some(boundary_formula(ChebKind::U, 2, 2, 1))
        );
        assert_ne!(
            uncorrected_boundary(ChebKind::V, 2, 3, 1),
            Some(boundary_formula(ChebKind::V, 2, 3, 1))
        );
        assert_eq!(boundary_formula(ChebKind::V, 2, 3, -1), BigInt::from(5));
    }
}

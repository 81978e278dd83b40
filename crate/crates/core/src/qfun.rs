//! q-numbers, Gaussian binomials and q-Pochhammer symbols.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{HalfInt, QRat, RatFn, UPoly};

/// `[m] = (1 - q^m)/(1 - q)`.
pub fn q_number(m: i64) -> QRat {
    if m >= 0 {
        return QRat::from(UPoly::from_q_coeffs(&vec![1; m as usize]));
    }
    // [-k] = -q^{-k} [k]
    let k = m.unsigned_abs() as usize;
    QRat::new(-UPoly::from_q_coeffs(&vec![1; k]), UPoly::q_pow(k)).expect("nonzero denominator")
}

/// `[m]` as a polynomial in `q`, for `m >= 0`.
pub fn q_int(m: usize) -> UPoly {
    UPoly::from_q_coeffs(&vec![1; m])
}

/// Rows of Gaussian binomials in base `q`, grown on demand by
/// `[n+1, k] = q^k [n, k] + [n, k-1]`.
#[derive(Clone, Debug, Default)]
pub struct BinomialTable {
    rows: Vec<Vec<UPoly>>,
}

impl BinomialTable {
    pub fn new() -> Self {
        BinomialTable {
            rows: vec![vec![UPoly::one()]],
        }
    }

    pub fn row(&mut self, n: usize) -> &[UPoly] {
        if self.rows.is_empty() {
            self.rows.push(vec![UPoly::one()]);
        }
        while self.rows.len() <= n {
            let next = pascal_step(self.rows.last().expect("nonempty"));
            self.rows.push(next);
        }
        &self.rows[n]
    }

    pub fn get(&mut self, n: i64, j: i64) -> UPoly {
        if n < 0 || j < 0 || j > n {
            return UPoly::zero();
        }
        self.row(n as usize)[j as usize].clone()
    }
}

fn pascal_step(prev: &[UPoly]) -> Vec<UPoly> {
    let n = prev.len();
    (0..=n)
        .map(|k| {
            let mut v = if k < n {
                prev[k].shift(2 * k)
            } else {
                UPoly::zero()
            };
            if k > 0 {
                v = &v + &prev[k - 1];
            }
            v
        })
        .collect()
}

/// All `[n, j]_q` for `0 <= j <= n`.
pub fn gauss_row(n: usize) -> Vec<UPoly> {
    let mut row = vec![UPoly::one()];
    for _ in 0..n {
        row = pascal_step(&row);
    }
    row
}

/// `[n, j]_q`; zero outside `0 <= j <= n`.
pub fn gauss(n: i64, j: i64) -> UPoly {
    if n < 0 || j < 0 || j > n {
        return UPoly::zero();
    }
    let j = j.min(n - j) as usize;
    // only the first j+1 entries of each row are needed
    let mut row = vec![UPoly::one()];
    for m in 0..n as usize {
        let width = (m + 2).min(j + 1);
        let next: Vec<UPoly> = (0..width)
            .map(|k| {
                let mut v = if k < row.len() && k <= m {
                    row[k].shift(2 * k)
                } else {
                    UPoly::zero()
                };
                if k > 0 {
                    v = &v + &row[k - 1];
                }
                v
            })
            .collect();
        row = next;
    }
    row[j].clone()
}

/// `[n, j]` in the variable `q^base` for a positive integer or half-integer `base`.
pub fn gauss_binomial(n: i64, j: i64, base: HalfInt) -> Result<UPoly> {
    if base.twice() <= 0 {
        return Err(Error::InvalidParameter("binomial base must be positive"));
    }
    gauss(n, j).subst_q_power_pos(base)
}

/// `[n, j]` in the variable `q^base` for any nonzero `base`.
pub fn gauss_ratfn(n: i64, j: i64, base: HalfInt) -> Result<RatFn> {
    if base.is_zero() {
        return Err(Error::InvalidParameter("binomial base must be nonzero"));
    }
    if base.twice() > 0 {
        return Ok(RatFn::from(gauss_binomial(n, j, base)?));
    }
    // [n, j]_{1/q} = q^{-j(n-j)} [n, j]_q
    let g = RatFn::from(gauss_binomial(n, j, -base)?);
    Ok(&g * &RatFn::q_pow(base * (j * (n - j))))
}

/// `(a; q^base)_n = prod_{j<n} (1 - q^{base j} a)`.
pub fn qpoch(a: &RatFn, base: HalfInt, n: usize) -> RatFn {
    let mut out = RatFn::one();
    for j in 0..n as i64 {
        out = &out * &(&RatFn::one() - &(&RatFn::q_pow(base * j) * a));
    }
    out
}

/// `(sign q^e; q^base)_n` as a polynomial, for `e, base >= 0`.
pub fn qpoch_u(sign: i64, e: HalfInt, base: HalfInt, n: usize) -> UPoly {
    assert!(
        e.twice() >= 0 && base.twice() >= 0,
        "exponents must be non-negative"
    );
    let mut out = UPoly::one();
    for j in 0..n as i64 {
        let ex = (e + base * j).twice() as usize;
        let f = &UPoly::one() - &UPoly::monomial(ex, sign);
        out = &out * &f;
    }
    out
}

/// `(sign q^e; q^base)_n` with integer exponents, possibly negative.
pub fn qpoch_q(sign: i64, e: HalfInt, base: HalfInt, n: usize) -> RatFn {
    qpoch(&RatFn::q_pow(e).scale_int(sign), base, n)
}

/// `(q; q)_n`.
pub fn qfact(n: usize) -> UPoly {
    qpoch_u(1, HalfInt::ONE, HalfInt::ONE, n)
}

/// `binom(n, k)` as a big integer; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Closed form of `d/dq [n, j]_{q^k}` at `q = 1`: `C(j+1, 2) C(n, j+1) k`.
pub fn q_binomial_derivative_at_1(n: i64, j: i64, k: i64) -> BigInt {
    binomial(j + 1, 2) * binomial(n, j + 1) * BigInt::from(k)
}

/// The same derivative computed by formal differentiation of the polynomial.
pub fn q_binomial_derivative_symbolic(n: i64, j: i64, k: i64) -> Result<BigRational> {
    let g = gauss_binomial(n, j, HalfInt::int(k))?;
    g.derivative_q()?.eval_q_int(1)
}

/// Checks both Pascal-type recurrences for all `0 <= k <= n <= n_max`.
pub fn pascal_recurrences_hold(n_max: i64) -> bool {
    let mut t = BinomialTable::new();
    for n in 0..n_max {
        for k in 0..=n + 1 {
            let lhs = t.get(n + 1, k);
            let first = &t.get(n, k).shift(2 * k as usize) + &t.get(n, k - 1);
            if lhs != first {
                return false;
            }
            let e = n + 1 - k;
            let second = if e >= 0 {
                &t.get(n, k) + &t.get(n, k - 1).shift(2 * e as usize)
            } else {
                t.get(n, k)
            };
            if lhs != second {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Sym;

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_q_coeffs(c)
    }

    #[test]
    fn q_numbers() {
        assert_eq!(q_number(3), QRat::from(q(&[1, 1, 1])));
        assert!(q_number(0).is_zero());
        assert_eq!(
            q_number(-1),
            QRat::new(UPoly::constant(-1), q(&[0, 1])).unwrap()
        );
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gauss(3, 1), q(&[1, 1, 1]));
        assert_eq!(gauss(4, 2), q(&[1, 1, 2, 1, 1]));
        assert_eq!(
            gauss_binomial(2, 1, HalfInt::int(2)).unwrap(),
            q(&[1, 0, 1])
        );
        assert!(gauss(3, 4).is_zero());
        assert!(gauss(3, -1).is_zero());
        // product formula oracle
        for n in 0..9 {
            for j in 0..=n {
                let mut num = UPoly::one();
                let mut den = UPoly::one();
                for i in 0..j {
                    num = &num * &(&UPoly::one() - &UPoly::q_pow((n - i) as usize));
                    den = &den * &(&UPoly::one() - &UPoly::q_pow((i + 1) as usize));
                }
                assert_eq!(gauss(n, j), num.div_exact(&den).unwrap());
                assert_eq!(gauss(n, j), gauss_row(n as usize)[j as usize]);
            }
        }
    }

    #[test]
    fn recurrences_and_symmetry() {
        assert!(pascal_recurrences_hold(15));
        for n in 0..=12 {
            let row = gauss_row(n);
            let mut sum = BigRational::zero();
            for j in 0..=n {
                assert_eq!(row[j], row[n - j]);
                sum += row[j].eval_q_int(1).unwrap();
            }
            assert_eq!(sum, BigRational::from_integer(BigInt::one() << n));
        }
    }

    #[test]
    fn pochhammer_values() {
        let s = RatFn::s();
        let a = qpoch(&s, HalfInt::ONE, 2);
        let want = &(&RatFn::one() - &(&RatFn::from(q(&[1, 1])) * &s))
            + &(&RatFn::q(1) * &s.pow(2).unwrap());
        assert_eq!(a, want);
        assert_eq!(
            qpoch_u(1, HalfInt::ONE, HalfInt::int(2), 2),
            &q(&[1, -1]) * &q(&[1, 0, 0, -1])
        );
        assert_eq!(
            qpoch_u(-1, HalfInt::ONE, HalfInt::ONE, 2),
            &q(&[1, 1]) * &q(&[1, 0, 1])
        );
        assert_eq!(qpoch_u(1, HalfInt::ONE, HalfInt::ONE, 0), UPoly::one());
    }

    #[test]
    fn pochhammer_binomial_expansion() {
        for n in 0..=12i64 {
            let mut sum = RatFn::zero();
            for k in 0..=n {
                let c = gauss(n, k).shift((k * (k - 1)) as usize);
                let term = &RatFn::from(c)
                    * &RatFn::monomial(if k % 2 == 0 { 1 } else { -1 }, [0, k, 0, 0]);
                sum = &sum + &term;
            }
            assert_eq!(sum, qpoch(&RatFn::s(), HalfInt::ONE, n as usize));
            assert_eq!(sum.degree_in(Sym::S), Some(n as u32));
        }
    }

    #[test]
    fn derivative_at_one() {
        assert_eq!(q_binomial_derivative_at_1(2, 1, 1), BigInt::from(1));
        assert_eq!(q_binomial_derivative_at_1(4, 0, 3), BigInt::zero());
        assert_eq!(q_binomial_derivative_at_1(3, 2, 2), BigInt::from(6));
        for n in 0..8 {
            for j in 0..=n {
                for k in 1..4 {
                    assert_eq!(
                        q_binomial_derivative_symbolic(n, j, k).unwrap(),
                        BigRational::from_integer(q_binomial_derivative_at_1(n, j, k))
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_base() {
        let g = gauss_ratfn(3, 1, HalfInt::int(-1)).unwrap();
        let want = RatFn::from(q(&[1, 1, 1]))
            .subst_q_power(HalfInt::int(-1))
            .unwrap();
        assert_eq!(g, want);
    }
}

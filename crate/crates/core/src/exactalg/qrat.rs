use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{HalfInt, UPoly};

/// A reduced quotient of two polynomials in `u`: an element of `Q(u)`, which
/// contains `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: UPoly,
    den: UPoly,
}

impl QRat {
    /// Builds `num/den` in lowest terms with a positive leading coefficient in
    /// the denominator.
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = UPoly::from_coeffs(num.coeffs().iter().map(|x| x / &c).collect());
            den = UPoly::from_coeffs(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(QRat { num, den })
    }

    pub fn zero() -> Self {
        QRat {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRat {
            num: UPoly::one(),
            den: UPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QRat {
            num: UPoly::constant(c),
            den: UPoly::one(),
        }
    }

    /// `q^k` for any integer or half-integer `k`.
    pub fn q_pow(k: HalfInt) -> Self {
        let t = k.twice();
        if t >= 0 {
            QRat {
                num: UPoly::monomial(t as usize, 1),
                den: UPoly::one(),
            }
        } else {
            QRat {
                num: UPoly::one(),
                den: UPoly::monomial(t.unsigned_abs() as usize, 1),
            }
        }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_upoly(&self) -> Result<UPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial)
        }
    }

    pub fn inv(&self) -> Result<Self> {
        QRat::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(QRat {
            num: base.num.pow(e.unsigned_abs()),
            den: base.den.pow(e.unsigned_abs()),
        })
    }

    /// Exact value at a rational `q`; both parts must be q-polynomials.
    pub fn eval_q(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_q(q)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_q(q)? / d)
    }

    /// `q -> q^k` for a nonzero integer or half-integer `k`. Negative powers
    /// move into the denominator.
    pub fn subst_q_power(&self, k: HalfInt) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::InvalidParameter("power must be nonzero"));
        }
        let pos = if k.twice() > 0 { k } else { -k };
        let num = self.num.subst_q_power_pos(pos)?;
        let den = self.den.subst_q_power_pos(pos)?;
        if k.twice() > 0 {
            return QRat::new(num, den);
        }
        // u^e -> u^{-e}: reverse both and rebalance with the degree difference
        let (dn, dd) = (num.degree().unwrap_or(0), den.degree().unwrap_or(0));
        let rn = UPoly::from_coeffs(num.coeffs().iter().rev().cloned().collect());
        let rd = UPoly::from_coeffs(den.coeffs().iter().rev().cloned().collect());
        if dn >= dd {
            QRat::new(rn, rd.shift(dn - dd))
        } else {
            QRat::new(rn.shift(dd - dn), rd)
        }
    }
}

impl From<UPoly> for QRat {
    fn from(p: UPoly) -> Self {
        QRat {
            num: p,
            den: UPoly::one(),
        }
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.den == rhs.den {
            return QRat::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        QRat::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for &QRat {
    type Output = Result<QRat>;
    fn div(self, rhs: &QRat) -> Result<QRat> {
        QRat::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for QRat {
    type Output = QRat;
    fn add(self, rhs: QRat) -> QRat {
        &self + &rhs
    }
}

impl Sub for QRat {
    type Output = QRat;
    fn sub(self, rhs: QRat) -> QRat {
        &self - &rhs
    }
}

impl Mul for QRat {
    type Output = QRat;
    fn mul(self, rhs: QRat) -> QRat {
        &self * &rhs
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> UPoly {
        UPoly::from_q_coeffs(c)
    }

    #[test]
    fn canonical_form() {
        let a = QRat::new(q(&[2, -2]), q(&[-4, 0, 4])).unwrap();
        // (2 - 2q)/(4q^2 - 4) = -1/(2 + 2q)
        assert_eq!(a.num(), &UPoly::constant(-1));
        assert_eq!(a.den(), &q(&[2, 2]));
    }

    #[test]
    fn inverse_power_substitution() {
        let a = QRat::from(q(&[1, 1, 1]))
            .subst_q_power(HalfInt::int(-1))
            .unwrap();
        assert_eq!(a, QRat::new(q(&[1, 1, 1]), q(&[0, 0, 1])).unwrap());
        let b = QRat::from(q(&[1, 1]))
            .subst_q_power(HalfInt::from_twice(1))
            .unwrap();
        assert_eq!(
            b.num(),
            &UPoly::from_coeffs(alloc::vec![1.into(), 1.into()])
        );
    }

    #[test]
    fn field_operations() {
        let a = QRat::new(UPoly::one(), q(&[1, -1])).unwrap();
        let b = QRat::new(q(&[0, 1]), q(&[1, -1])).unwrap();
        assert_eq!(&a - &b, QRat::one());
        assert_eq!((&a / &a).unwrap(), QRat::one());
        assert!((&a / &QRat::zero()).is_err());
    }
}

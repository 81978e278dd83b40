//! Hankel determinants of moment sequences, Favard recurrences, moment
//! tables and the closed determinant formulas for the Rogers-Szegö family
//! and its normalizations.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::Comparison;
use crate::error::{Error, Result};
use crate::exactalg::{det_ratfn, HalfInt, MPoly, RatFn, Sym, UPoly};
use crate::normalized::{big_f_at, big_f_norm, big_h_at, f_at, h_at};
use crate::qfun::{gauss, gauss_binomial, qpoch, qpoch_u};
use crate::rogers::rs_at;

const Q: HalfInt = HalfInt::ONE;
const Q2: HalfInt = HalfInt::int(2);

fn q(k: i64) -> RatFn {
    RatFn::q(k)
}

fn one() -> RatFn {
    RatFn::one()
}

fn s() -> RatFn {
    RatFn::s()
}

fn c2(k: i64) -> i64 {
    k * (k - 1) / 2
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn prod(items: impl IntoIterator<Item = RatFn>) -> RatFn {
    items.into_iter().fold(one(), |acc, x| &acc * &x)
}

fn pw(x: &RatFn, e: i64) -> RatFn {
    x.pow(e as i32).expect("nonzero base")
}

/// `1 - c q^k x` for a rational function `x`.
fn one_minus(c: i64, k: i64, x: &RatFn) -> RatFn {
    &one() - &(&q(k) * x).scale_int(c)
}

/// A polynomial in `x`, lowest degree first.
pub type XPoly = Vec<RatFn>;

fn xp_trim(mut p: XPoly) -> XPoly {
    while p.last().is_some_and(RatFn::is_zero) {
        p.pop();
    }
    p
}

fn xp_add(a: &XPoly, b: &XPoly) -> XPoly {
    let n = a.len().max(b.len());
    let z = RatFn::zero();
    xp_trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn xp_scale(a: &XPoly, c: &RatFn) -> XPoly {
    xp_trim(a.iter().map(|x| x * c).collect())
}

fn xp_mul(a: &XPoly, b: &XPoly) -> XPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RatFn::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    xp_trim(out)
}

/// `x - c`.
fn xp_linear(c: &RatFn) -> XPoly {
    xp_trim(vec![-c.clone(), one()])
}

/// Converts an expression polynomial in `x` into coefficient form.
pub fn xp_from_ratfn(p: &RatFn) -> Result<XPoly> {
    let d = p.degree_in(Sym::X).unwrap_or(0);
    let mut out = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        out.push(p.coeff_of(Sym::X, k)?);
    }
    Ok(xp_trim(out))
}

/// The moment functional `x^k -> moments[k]`, extended linearly.
pub fn functional(moments: &[RatFn], p: &XPoly) -> Result<RatFn> {
    if p.len() > moments.len() {
        return Err(Error::InvalidParameter("not enough moments"));
    }
    let mut acc = RatFn::zero();
    for (c, m) in p.iter().zip(moments) {
        if !c.is_zero() {
            acc = &acc + &(c * m);
        }
    }
    Ok(acc)
}

/// Moment sequences with a Favard recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `r_n(s, q)`.
    Rs,
    /// `h(n, s, t, q)`; `t = 1` gives `f(n, s, q)`.
    SmallH,
    /// `H(n, s, t, q)`; `t = 1` gives `F(2n, s, q)` and `t = q` gives `(1-q)/(1-s) F(2n+1, s, q)`.
    BigH,
    /// `F(n, s, q)`, with recurrence coefficients split by parity.
    BigF,
}

/// A family together with its value of `t` (ignored by `Rs` and `BigF`).
#[derive(Clone, Debug, PartialEq)]
pub struct RecSystem {
    pub family: Family,
    pub t: RatFn,
}

impl RecSystem {
    pub fn rs() -> Self {
        RecSystem {
            family: Family::Rs,
            t: RatFn::zero(),
        }
    }

    pub fn small_f() -> Self {
        RecSystem {
            family: Family::SmallH,
            t: one(),
        }
    }

    pub fn small_h() -> Self {
        RecSystem {
            family: Family::SmallH,
            t: RatFn::t(),
        }
    }

    pub fn big_h(t: RatFn) -> Self {
        RecSystem {
            family: Family::BigH,
            t,
        }
    }

    pub fn big_f() -> Self {
        RecSystem {
            family: Family::BigF,
            t: RatFn::zero(),
        }
    }

    /// `rs`, `f`, `h`, `H` (symbolic `t`) or `F`.
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "rs" => Self::rs(),
            "f" => Self::small_f(),
            "h" => Self::small_h(),
            "H" => Self::big_h(RatFn::t()),
            "F" => Self::big_f(),
            _ => return Err(Error::UnknownFamily(name.to_string())),
        })
    }

    pub fn moment(&self, n: usize) -> RatFn {
        let n = n as i64;
        match self.family {
            Family::Rs => rs_at(n, Q, &s()),
            Family::SmallH => h_at(n, &s(), &self.t),
            Family::BigH => big_h_at(n, &s(), &self.t),
            Family::BigF => big_f_norm(n),
        }
    }

    pub fn moments(&self, n_max: usize) -> Vec<RatFn> {
        (0..=n_max).map(|n| self.moment(n)).collect()
    }

    /// `sigma(n)` as stated for each family.
    pub fn sigma(&self, n: i64) -> RatFn {
        let t = &self.t;
        match self.family {
            Family::Rs => &q(n) * &(&one() + &s()),
            Family::SmallH => {
                // q^n (1+s) (1 + q^{n-1}(1+q)t - q^{2n}t) / ((1+q^{2n-1}t)(1+q^{2n+1}t))
                let num = &(&(&one() + &(&(&q(n - 1) + &q(n)) * t)) - &(&q(2 * n) * t))
                    * &(&one() + &s());
                let den = &one_minus(-1, 2 * n - 1, t) * &one_minus(-1, 2 * n + 1, t);
                (&q(n) * &num).div(&den).expect("nonzero")
            }
            Family::BigH => {
                let t2 = pw(t, 2);
                let s2 = pw(&s(), 2);
                let a = &(&(&one() + &s2) * &q(2))
                    * &(&(&(&one() - &(&q(2 * n - 1) * &t2)) - &(&q(2 * n - 3) * &t2))
                        + &(&q(4 * n - 1) * &t2));
                let b = &(&(&s() * t) * &(&one() + &q(1)))
                    * &(&(&(&one() - &q(2 * n)) - &q(2 * n + 2)) + &(&q(4 * n - 1) * &t2));
                let den = &one_minus(1, 4 * n + 1, &t2) * &one_minus(1, 4 * n - 3, &t2);
                (&q(2 * n - 2) * &(&a + &b)).div(&den).expect("nonzero")
            }
            Family::BigF => {
                let one_s = &one() - &s();
                let (u, v) = big_f_uv(n);
                let num = &(&pw(&one_s, 2) * &u) + &(&s() * &v);
                let den = prod([
                    one_s,
                    one_minus(1, 2 * n - 1, &one()),
                    one_minus(1, 2 * n + 1, &one()),
                ]);
                num.div(&den).expect("nonzero").scale_int(sign(n))
            }
        }
    }

    /// `tau(n)` as stated for each family.
    pub fn tau(&self, n: i64) -> RatFn {
        let t = &self.t;
        match self.family {
            Family::Rs => &(&q(n) * &s()) * &(&q(n + 1) - &one()),
            Family::SmallH => {
                let num = prod([
                    q(n),
                    one_minus(-1, n, t),
                    one_minus(1, n + 1, &one()),
                    &s() - &(&q(2 * n + 1) * t),
                    one_minus(1, 2 * n + 1, &(&s() * t)),
                ]);
                let den = prod([
                    one_minus(-1, 2 * n, t),
                    pw(&one_minus(-1, 2 * n + 1, t), 2),
                    one_minus(-1, 2 * n + 2, t),
                ]);
                num.div(&den).expect("nonzero").scale_int(-1)
            }
            Family::BigH => {
                let st = &s() * t;
                let factors = prod([
                    &s() - &(&q(2 * n) * t),
                    &s() - &(&q(2 * n + 1) * t),
                    one_minus(1, 2 * n, &st),
                    one_minus(1, 2 * n + 1, &st),
                ]);
                &big_h_tau_base(n, t) * &factors
            }
            Family::BigF => {
                let one_s = &one() - &s();
                let h = n.div_euclid(2);
                if n % 2 == 0 {
                    let num = prod([
                        q(4 * h + 1),
                        one_minus(1, -2 * h, &s()),
                        one_minus(1, -2 * h - 1, &s()),
                        one_minus(1, 2 * h, &s()),
                        one_minus(1, 2 * h + 1, &s()),
                    ]);
                    let den = &pw(&one_s, 2) * &pw(&one_minus(1, 4 * h + 1, &one()), 2);
                    num.div(&den).expect("nonzero").scale_int(-1)
                } else {
                    let num = prod([
                        pw(&one_s, 2),
                        q(2 * h + 2),
                        one_minus(1, 2 * h + 1, &one()),
                        one_minus(1, 2 * h + 2, &one()),
                    ]);
                    num.div(&pw(&one_minus(1, 4 * h + 3, &one()), 2))
                        .expect("nonzero")
                }
            }
        }
    }

    /// `prod_{i=1}^n prod_{j<i} tau(j)`.
    pub fn tau_product(&self, n: usize) -> RatFn {
        prod((0..n as i64).map(|j| pw(&self.tau(j), n as i64 - j)))
    }

    /// `a(n, j)` for `j <= n <= n_max` by the moment recurrence.
    pub fn moment_table(&self, n_max: usize) -> MomentTable {
        let sig: Vec<RatFn> = (0..=n_max as i64).map(|j| self.sigma(j)).collect();
        let tau: Vec<RatFn> = (0..=n_max as i64).map(|j| self.tau(j)).collect();
        let mut rows: Vec<Vec<RatFn>> = vec![vec![one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let get = |j: usize| prev.get(j).cloned().unwrap_or_else(RatFn::zero);
            let mut row = Vec::with_capacity(n + 1);
            for j in 0..=n {
                let mut v = &sig[j] * &get(j);
                if j > 0 {
                    v = &v + &get(j - 1);
                }
                if j < n - 1 {
                    v = &v + &(&tau[j] * &get(j + 1));
                }
                row.push(v);
            }
            rows.push(row);
        }
        MomentTable { rows }
    }

    /// The stated closed forms of `a(n, k)`: `r_{n-k} [n,k]`, `[n,k] h(n-k, s, q^{2k} t)` and
    /// `[n,k]_{q^2} H(n-k, s, q^{2k} t)`. `None` for `F`.
    pub fn guessed_moment(&self, n: i64, k: i64) -> Option<RatFn> {
        let t = &self.t;
        match self.family {
            Family::Rs => Some(&rs_at(n - k, Q, &s()) * &RatFn::from(gauss(n, k))),
            Family::SmallH => {
                Some(&RatFn::from(gauss(n, k)) * &h_at(n - k, &s(), &(&q(2 * k) * t)))
            }
            Family::BigH => Some(
                &RatFn::from(gauss_binomial(n, k, Q2).expect("base"))
                    * &big_h_at(n - k, &s(), &(&q(2 * k) * t)),
            ),
            Family::BigF => None,
        }
    }

    /// Monic polynomials `p_0 .. p_{n_max}` from `p_n = (x - sigma(n-1)) p_{n-1} - tau(n-2) p_{n-2}`.
    pub fn orth_polys(&self, n_max: usize) -> Vec<XPoly> {
        let mut out: Vec<XPoly> = vec![vec![one()]];
        for n in 1..=n_max {
            let mut p = xp_mul(&xp_linear(&self.sigma(n as i64 - 1)), &out[n - 1]);
            if n >= 2 {
                p = xp_add(
                    &p,
                    &xp_scale(&out[n - 2], &self.tau(n as i64 - 2).scale_int(-1)),
                );
            }
            out.push(p);
        }
        out
    }

    /// The explicit orthogonal polynomials, in the power form (`second = false`)
    /// or the product form (`second = true`). `None` for `F`.
    pub fn explicit_orth(&self, n: i64, second: bool) -> Option<Result<XPoly>> {
        let t = &self.t;
        let r = match (self.family, second) {
            (Family::Rs, false) => {
                let mut p = Vec::new();
                for j in 0..=n {
                    let c = &RatFn::from(gauss(n, j)) * &rs_at(j, HalfInt::int(-1), &s());
                    p.push((n - j, (&c * &q(c2(j))).scale_int(sign(j))));
                }
                Ok(from_terms(p))
            }
            (Family::Rs, true) => {
                // Al-Salam-Carlitz form: sum_k [n,k] (-1)^k q^{C(k,2)} s^k prod_{j<n-k} (x - q^j)
                let mut acc: XPoly = Vec::new();
                for k in 0..=n {
                    let c =
                        prod([RatFn::from(gauss(n, k)), q(c2(k)), pw(&s(), k)]).scale_int(sign(k));
                    acc = xp_add(&acc, &xp_scale(&x_product(n - k, Q), &c));
                }
                Ok(acc)
            }
            (Family::SmallH, false) => (|| {
                let mut p = Vec::new();
                for j in 0..=n {
                    let hj = h_at(j, &s(), &RatFn::t())
                        .subst_q_power(HalfInt::int(-1))?
                        .subst(Sym::T, &(&q(2 * n) * t))?;
                    let c = prod([RatFn::from(gauss(n, j)), q(c2(j)), hj]).scale_int(sign(j));
                    p.push((n - j, c));
                }
                Ok(from_terms(p))
            })(),
            (Family::SmallH, true) => (|| {
                let mut acc: XPoly = Vec::new();
                for j in 0..=n {
                    let num = prod((0..n - j).map(|i| &(&q(2 * j + 2 * i + 1) * t) - &s()));
                    let den = qpoch(&(&q(n + j) * t).scale_int(-1), Q, (n - j) as usize);
                    let c = prod([RatFn::from(gauss(n, j)), q(c2(n - j)), num.div(&den)?]);
                    acc = xp_add(&acc, &xp_scale(&x_product(j, Q), &c));
                }
                Ok(acc)
            })(),
            (Family::BigH, false) => (|| {
                let mut p = Vec::new();
                for j in 0..=n {
                    let hj = big_h_at(j, &s(), &RatFn::t())
                        .subst_q_power(HalfInt::int(-1))?
                        .subst(Sym::T, &(&q(2 * n - 1) * t))?;
                    let g = RatFn::from(gauss_binomial(n, j, Q2)?);
                    p.push((n - j, prod([g, q(2 * c2(j)), hj]).scale_int(sign(j))));
                }
                Ok(from_terms(p))
            })(),
            (Family::BigH, true) => (|| {
                let mut acc: XPoly = Vec::new();
                for j in 0..=n {
                    let num = prod((0..2 * (n - j)).map(|i| &s() - &(&q(2 * j + i) * t)));
                    let den = qpoch(&(&q(2 * n - 1 + 2 * j) * &pw(t, 2)), Q2, (n - j) as usize);
                    let g = RatFn::from(gauss_binomial(n, j, Q2)?);
                    let c = prod([g, q(2 * c2(n - j)), num.div(&den)?]).scale_int(sign(n - j));
                    acc = xp_add(&acc, &xp_scale(&x_product(j, Q2), &c));
                }
                Ok(acc)
            })(),
            (Family::BigF, _) => return None,
        };
        Some(r)
    }
}

/// `u(n)` and `v(n)` in the numerator of `sigma` for `F`.
fn big_f_uv(n: i64) -> (RatFn, RatFn) {
    let h = n.div_euclid(2);
    let om = |k: i64| one_minus(1, k, &one());
    if n % 2 == 0 {
        let u = &q(2 * h) * &(&(&(&one() - &q(2 * h - 1)) + &q(2 * h + 1)) - &q(4 * h + 1));
        let v = prod([om(4 * h - 1), om(2 * h + 1), om(2 * h)]);
        (u, v)
    } else {
        let u = &q(2 * h + 2) * &(&(&(&one() - &q(4 * h + 1)) + &q(2 * h - 1)) - &q(2 * h + 1));
        let v = prod([om(4 * h + 3), om(2 * h + 1), om(2 * h)]);
        (u, v)
    }
}

/// `tau(n, 0, t)` for `H`.
fn big_h_tau_base(n: i64, t: &RatFn) -> RatFn {
    let t2 = pw(t, 2);
    let num = prod([
        q(2 * n),
        one_minus(1, 2 * n - 1, &t2),
        one_minus(1, 2 * n + 2, &one()),
    ]);
    let den = prod([
        one_minus(1, 4 * n - 1, &t2),
        pw(&one_minus(1, 4 * n + 1, &t2), 2),
        one_minus(1, 4 * n + 3, &t2),
    ]);
    num.div(&den).expect("nonzero").scale_int(-1)
}

fn from_terms(terms: Vec<(i64, RatFn)>) -> XPoly {
    let d = terms.iter().map(|(e, _)| *e).max().unwrap_or(0) as usize;
    let mut out = vec![RatFn::zero(); d + 1];
    for (e, c) in terms {
        out[e as usize] = &out[e as usize] + &c;
    }
    xp_trim(out)
}

/// `prod_{i<j} (x - q^{base i})`.
fn x_product(j: i64, base: HalfInt) -> XPoly {
    let mut acc: XPoly = vec![one()];
    for i in 0..j {
        acc = xp_mul(&acc, &xp_linear(&RatFn::q_pow(base * i)));
    }
    acc
}

#[derive(Clone, Debug)]
pub struct MomentTable {
    /// `rows[n][j] = a(n, j)` for `j <= n`.
    pub rows: Vec<Vec<RatFn>>,
}

impl MomentTable {
    pub fn get(&self, n: usize, j: usize) -> RatFn {
        self.rows
            .get(n)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(RatFn::zero)
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }
}

/// `det(moments[i+j])_{i,j<=n}`.
pub fn hankel_det(moments: &[RatFn], n: usize) -> RatFn {
    let rows: Vec<Vec<RatFn>> = (0..=n)
        .map(|i| (0..=n).map(|j| moments[i + j].clone()).collect())
        .collect();
    det_ratfn(&rows)
}

/// `p_n` as the bordered Hankel determinant divided by the Hankel determinant of order `n-1`.
pub fn bordered(moments: &[RatFn], n: usize) -> Result<XPoly> {
    if n == 0 {
        return Ok(vec![one()]);
    }
    let base = hankel_det(moments, n - 1);
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        // cofactor of the entry x^k in the last column
        let minor: Vec<Vec<RatFn>> = (0..=n)
            .filter(|&i| i != k)
            .map(|i| (0..n).map(|j| moments[i + j].clone()).collect())
            .collect();
        let c = det_ratfn(&minor).scale_int(sign((k + n) as i64));
        out.push(c.div(&base)?);
    }
    Ok(xp_trim(out))
}

/// Recurrence coefficients recovered from moments alone:
/// `sigma(n) = L(x p_n^2)/L(p_n^2)` and `tau(n) = L(p_{n+1}^2)/L(p_n^2)`.
pub fn favard_from_moments(moments: &[RatFn], n_max: usize) -> Result<(Vec<RatFn>, Vec<RatFn>)> {
    let mut sig = Vec::new();
    let mut tau = Vec::new();
    let mut p_prev: XPoly = Vec::new();
    let mut p: XPoly = vec![one()];
    let mut h_prev = RatFn::zero();
    for n in 0..=n_max {
        let p2 = xp_mul(&p, &p);
        let h = functional(moments, &p2)?;
        if h.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if n > 0 {
            tau.push(h.div(&h_prev)?);
        }
        let mut xp2 = vec![RatFn::zero()];
        xp2.extend(p2);
        let sg = functional(moments, &xp2)?.div(&h)?;
        let mut next = xp_mul(&xp_linear(&sg), &p);
        if n > 0 {
            next = xp_add(&next, &xp_scale(&p_prev, &tau[n - 1].scale_int(-1)));
        }
        sig.push(sg);
        p_prev = core::mem::replace(&mut p, next);
        h_prev = h;
    }
    Ok((sig, tau))
}

/// Determinants with a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelId {
    /// `det(r_{i+j}(s,q)) = q^{C(n+1,3)} (-s)^{C(n+1,2)} prod_{j=1}^n (q;q)_j`.
    Rs,
    /// `det(f(i+j,s,q)) = q^{n^2(n+1)/2} prod_j (s/q^{2j-1};q^2)_{2j} prod_j (q;q)_j / prod_j (-q;q)_{j+n}`.
    SmallF,
    /// `det(F(2i+2j,s,q)) = D_0(n,0,q) prod_j ((s-q^{2j})(s-q^{2j+1})(s-q^{-2j})(s-q^{-2j-1}))^{n-j}`.
    FEven,
    /// `det(F(2i+2j+1,s,q)) = D_1(n,0,q) (1-s)^{n+1} prod_j ((s-q^{2j+2})(s-q^{2j+1})(s-q^{-2j-2})(s-q^{-2j-1}))^{n-j}`.
    FOdd,
    /// `det(F(i+j,s,q))`, with the `s`-dependence over `(1-s)^{2 floor((n+1)/2)}` and the stated `D(n,0,q)`.
    BigF,
    /// Negative control: the Rogers-Szegö formula with `q^{C(n+2,3)}`.
    RsShifted,
}

impl HankelId {
    pub const ALL: [HankelId; 6] = [
        HankelId::Rs,
        HankelId::SmallF,
        HankelId::FEven,
        HankelId::FOdd,
        HankelId::BigF,
        HankelId::RsShifted,
    ];

    pub fn id(self) -> &'static str {
        match self {
            HankelId::Rs => "rs",
            HankelId::SmallF => "f",
            HankelId::FEven => "F-even",
            HankelId::FOdd => "F-odd",
            HankelId::BigF => "F",
            HankelId::RsShifted => "rs-shifted",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.id() == id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
    }

    pub fn is_negative_control(self) -> bool {
        self == HankelId::RsShifted
    }

    pub fn moments(self, n_max: usize) -> Vec<RatFn> {
        (0..=n_max as i64)
            .map(|k| match self {
                HankelId::Rs | HankelId::RsShifted => rs_at(k, Q, &s()),
                HankelId::SmallF => f_at(k, &s()),
                HankelId::FEven => big_f_norm(2 * k),
                HankelId::FOdd => big_f_norm(2 * k + 1),
                HankelId::BigF => big_f_norm(k),
            })
            .collect()
    }

    pub fn direct(self, n: usize) -> RatFn {
        hankel_det(&self.moments(2 * n), n)
    }

    pub fn tau_product(self, n: usize) -> RatFn {
        match self {
            HankelId::Rs | HankelId::RsShifted => RecSystem::rs().tau_product(n),
            HankelId::SmallF => RecSystem::small_f().tau_product(n),
            HankelId::FEven => RecSystem::big_h(one()).tau_product(n),
            HankelId::FOdd => {
                let scale = (&one() - &s())
                    .div(&one_minus(1, 1, &one()))
                    .expect("nonzero");
                &pw(&scale, n as i64 + 1) * &RecSystem::big_h(q(1)).tau_product(n)
            }
            HankelId::BigF => RecSystem::big_f().tau_product(n),
        }
    }

    pub fn closed(self, n: usize) -> RatFn {
        let ni = n as i64;
        match self {
            HankelId::Rs | HankelId::RsShifted => {
                let e = if self == HankelId::Rs { ni + 1 } else { ni + 2 };
                let c3 = e * (e - 1) * (e - 2) / 6;
                let c2n = (ni + 1) * ni / 2;
                prod([
                    q(c3),
                    pw(&s().scale_int(-1), c2n),
                    prod((1..=n).map(|j| RatFn::from(qpoch_u(1, Q, Q, j)))),
                ])
            }
            HankelId::SmallF => {
                let num =
                    prod((0..=ni).map(|j| qpoch(&(&s() * &q(1 - 2 * j)), Q2, 2 * j as usize)));
                let qq = prod((0..=n).map(|j| RatFn::from(qpoch_u(1, Q, Q, j))));
                let den = prod((0..=n).map(|j| RatFn::from(qpoch_u(-1, Q, Q, j + n))));
                prod([q(ni * ni * (ni + 1) / 2), num, qq])
                    .div(&den)
                    .expect("nonzero")
            }
            HankelId::FEven | HankelId::FOdd => {
                let odd = self == HankelId::FOdd;
                let off = i64::from(odd);
                let base = self
                    .tau_product(n)
                    .subst_int(Sym::S, 0)
                    .expect("defined at s = 0");
                let lin = |e: i64| &s() - &q(e);
                let factors = prod((0..=ni).map(|j| {
                    let f = prod([
                        lin(2 * j + 2 * off),
                        lin(2 * j + 1),
                        lin(-2 * j - 2 * off),
                        lin(-2 * j - 1),
                    ]);
                    pw(&f, ni - j)
                }));
                let mut out = &base * &factors;
                if odd {
                    out = &out * &pw(&(&one() - &s()), ni + 1);
                }
                out
            }
            HankelId::BigF => {
                let num = prod((0..=ni / 2).map(|j| {
                    let f = prod([
                        one_minus(1, 2 * j, &s()),
                        one_minus(1, 2 * j + 1, &s()),
                        one_minus(1, -2 * j, &s()),
                        one_minus(1, -2 * j - 1, &s()),
                    ]);
                    pw(&f, ni - 2 * j)
                }));
                let den = pw(&(&one() - &s()), 2 * ((ni + 1) / 2));
                &big_f_base(n) * &num.div(&den).expect("nonzero")
            }
        }
    }

    /// `(direct, tau_product, closed)`.
    pub fn three_way(self, n: usize) -> HankelReport {
        let direct = self.direct(n);
        let product = self.tau_product(n);
        let closed = self.closed(n);
        let pass = direct == product && product == closed;
        HankelReport {
            id: self.id(),
            n,
            direct,
            product,
            closed,
            pass,
        }
    }
}

/// `D(n, 0, q) = (-1)^{floor((n+1)^2/4)} q^{n^2 + n sum_{j<n} floor(j/2)}
/// prod_{j <= (n-1)/2} (1-q^{4j+1})^{-(2n-2j)} ((1-q^{2j+1})(1-q^{2j+2})/(1-q^{4j+3})^2)^{n-1-2j}`.
pub fn big_f_base(n: usize) -> RatFn {
    let ni = n as i64;
    let sgn = sign((ni + 1) * (ni + 1) / 4);
    let e = ni * ni + ni * (1..ni).map(|j| j / 2).sum::<i64>();
    let om = |k: i64| one_minus(1, k, &one());
    let mut acc = q(e).scale_int(sgn);
    if n >= 1 {
        for j in 0..=(ni - 1) / 2 {
            let a = pw(&om(4 * j + 1), -(2 * ni - 4 * j));
            let b = (&om(2 * j + 1) * &om(2 * j + 2))
                .div(&pw(&om(4 * j + 3), 2))
                .expect("nonzero");
            acc = prod([acc, a, pw(&b, ni - 1 - 2 * j)]);
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct HankelReport {
    pub id: &'static str,
    pub n: usize,
    pub direct: RatFn,
    pub product: RatFn,
    pub closed: RatFn,
    pub pass: bool,
}

/// `det(f(i+j, q^{2m+1}, q))_{i,j<=n}`; `m` may be negative.
pub fn small_f_det_at_power(n: usize, m: i64) -> RatFn {
    let v = q(2 * m + 1);
    let moms: Vec<RatFn> = (0..=2 * n as i64).map(|k| f_at(k, &v)).collect();
    hankel_det(&moms, n)
}

/// `det(F(i+j, q^m, q))_{i,j<=n}`.
pub fn big_f_det_at_power(n: usize, m: i64) -> RatFn {
    let v = q(m);
    let moms: Vec<RatFn> = (0..=2 * n as i64).map(|k| big_f_at(k, &v)).collect();
    hankel_det(&moms, n)
}

/// Smallest `n <= n_max` where the determinant vanishes, together with
/// whether it stays zero up to `n_max`.
pub fn first_vanishing(det: impl Fn(usize) -> RatFn, n_max: usize) -> Option<(usize, bool)> {
    let first = (0..=n_max).find(|&n| det(n).is_zero())?;
    let stays = (first..=n_max).all(|n| det(n).is_zero());
    Some((first, stays))
}

/// `det(F(2i+2j+parity, q^m, q))_{i,j<=n}`.
pub fn big_f_parity_det_at_power(n: usize, m: i64, parity: i64) -> RatFn {
    let v = q(m);
    let moms: Vec<RatFn> = (0..=2 * n as i64)
        .map(|k| big_f_at(2 * k + parity, &v))
        .collect();
    hankel_det(&moms, n)
}

/// First `n` with `d(n, q^{2m+1}, q) = 0`: `m+1` for `m >= 0`, `-m` otherwise.
pub fn small_f_vanishing_order(m: i64) -> usize {
    if m >= 0 {
        m as usize + 1
    } else {
        (-m) as usize
    }
}

/// First `n` with `D(n, q^m, q) = 0`: 2 for `m = 0`, `|m|` for odd `m`, `|m|+1` for even `m != 0`.
pub fn big_f_vanishing_order(m: i64) -> usize {
    let m = m.unsigned_abs() as usize;
    if m == 0 {
        2
    } else if m % 2 == 1 {
        m
    } else {
        m + 1
    }
}

/// First `n` with `D_0(n, q^m, q) = 0` (`parity = 0`) or `D_1(n, q^m, q) = 0` (`parity = 1`).
pub fn big_f_parity_vanishing_order(m: i64, parity: i64) -> usize {
    let m = m.unsigned_abs() as usize;
    if parity == 0 {
        m / 2 + 1
    } else {
        m.div_ceil(2)
    }
}

/// `sum_{j<=m+1} (-1)^j q^{C(j,2)} [m+1, j] f(n-j, q^{2m+1}, q)`, which vanishes for `n >= m+1`.
pub fn f_recurrence_residual(m: i64, n: i64) -> RatFn {
    let v = q(2 * m + 1);
    let mut acc = RatFn::zero();
    for j in 0..=m + 1 {
        let term = prod([RatFn::from(gauss(m + 1, j)), q(c2(j)), f_at(n - j, &v)]);
        acc = &acc + &term.scale_int(sign(j));
    }
    acc
}

/// Divides out linear factors `(s - q^e)` and `(1 - q^e s)` for `e` in `exps`
/// until no `s` remains in numerator or denominator. True if that succeeds.
pub fn roots_in(det: &RatFn, exps: &[i64]) -> bool {
    let mut num = det.num().clone();
    let mut den = det.den_expanded();
    for p in [&mut num, &mut den] {
        'outer: while p.degree(Sym::S).unwrap_or(0) > 0 {
            for &e in exps {
                let f = if e >= 0 {
                    &MPoly::sym(Sym::S) - &MPoly::from(UPoly::q_pow(e as usize))
                } else {
                    &MPoly::one() - &MPoly::sym(Sym::S).scale_upoly(&UPoly::q_pow((-e) as usize))
                };
                if let Some(qq) = p.div_exact(&f) {
                    *p = qq;
                    continue 'outer;
                }
            }
            return false;
        }
    }
    true
}

/// Recurrence coefficients of the monic big q-Jacobi polynomials in base `q^base`:
/// `(A_n, C_n)`.
pub fn big_q_jacobi(a: &RatFn, b: &RatFn, c: &RatFn, base: HalfInt, n: i64) -> (RatFn, RatFn) {
    let qb = |k: i64| RatFn::q_pow(base * k);
    let om = |x: &RatFn, k: i64| &one() - &(&qb(k) * x);
    let ab = a * b;
    let big_a = prod([om(a, n + 1), om(&ab, n + 1), om(c, n + 1)])
        .div(&(&om(&ab, 2 * n + 1) * &om(&ab, 2 * n + 2)))
        .expect("nonzero");
    let abc = ab.div(c).expect("nonzero");
    let big_c = prod([
        (a * c).scale_int(-1),
        qb(n + 1),
        om(&one(), n),
        om(&abc, n),
        om(b, n),
    ])
    .div(&(&om(&ab, 2 * n) * &om(&ab, 2 * n + 1)))
    .expect("nonzero");
    (big_a, big_c)
}

/// Links between big q-Jacobi recurrences and the `f`/`F` families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiBridge {
    /// Parameters `(-1/(s sqrt q), s/sqrt q, -s/sqrt q; q)`, rescaled by `r = -s/sqrt q`,
    /// then `s^2 -> s`: the `f` family.
    Hermite,
    /// Parameters `(-1/(q s^2), -s^2/q^2, -s^2/q; q^2)`, `r = -s^2/q`, then `s^2 -> -s`:
    /// the `H` family at `t = 1`.
    EvenSquare,
    /// Parameters `(-1/s^2, -s^2/q, -s^2; q^2)`, `r = -s^2/q^2`, then `s^2 -> -s`:
    /// the `H` family at `t = q`.
    OddSquare,
}

impl JacobiBridge {
    pub const ALL: [JacobiBridge; 3] = [
        JacobiBridge::Hermite,
        JacobiBridge::EvenSquare,
        JacobiBridge::OddSquare,
    ];

    pub fn id(self) -> &'static str {
        match self {
            JacobiBridge::Hermite => "jacobi-f",
            JacobiBridge::EvenSquare => "jacobi-F-even",
            JacobiBridge::OddSquare => "jacobi-F-odd",
        }
    }

    fn setup(self) -> ([RatFn; 3], HalfInt, RatFn, i8, RecSystem) {
        let sv = s();
        let s2 = pw(&sv, 2);
        let half = RatFn::q_pow(HalfInt::from_twice(1));
        let inv = |x: &RatFn| x.inv().expect("nonzero");
        match self {
            JacobiBridge::Hermite => (
                [
                    inv(&(&sv * &half)).scale_int(-1),
                    sv.div(&half).unwrap(),
                    sv.div(&half).unwrap().scale_int(-1),
                ],
                Q,
                sv.div(&half).unwrap().scale_int(-1),
                1,
                RecSystem::small_f(),
            ),
            JacobiBridge::EvenSquare => (
                [
                    inv(&(&q(1) * &s2)).scale_int(-1),
                    (&s2 * &q(-2)).scale_int(-1),
                    (&s2 * &q(-1)).scale_int(-1),
                ],
                Q2,
                (&s2 * &q(-1)).scale_int(-1),
                -1,
                RecSystem::big_h(one()),
            ),
            JacobiBridge::OddSquare => (
                [
                    inv(&s2).scale_int(-1),
                    (&s2 * &q(-1)).scale_int(-1),
                    s2.scale_int(-1),
                ],
                Q2,
                (&s2 * &q(-2)).scale_int(-1),
                -1,
                RecSystem::big_h(q(1)),
            ),
        }
    }

    /// Rescaled `sigma` and `tau` against the family's stated values.
    pub fn compare(self, n: i64) -> Result<[Comparison; 2]> {
        let ([a, b, c], base, r, sgn, sys) = self.setup();
        let (an, cn) = big_q_jacobi(&a, &b, &c, base, n);
        let (_, c_next) = big_q_jacobi(&a, &b, &c, base, n + 1);
        let sigma = (&r * &(&(&one() - &an) - &cn)).subst_even(Sym::S, sgn)?;
        let tau = (&pw(&r, 2) * &(&an * &c_next)).subst_even(Sym::S, sgn)?;
        Ok([
            Comparison::new(sigma, sys.sigma(n)),
            Comparison::new(tau, sys.tau(n)),
        ])
    }
}

/// `A_n C_{n+1}` and `1 - (A_n + C_n)` for the first parameter set against their closed forms.
pub fn hermite_displayed(n: i64) -> [Comparison; 2] {
    let ([a, b, c], base, _, _, _) = JacobiBridge::Hermite.setup();
    let (an, cn) = big_q_jacobi(&a, &b, &c, base, n);
    let (_, c_next) = big_q_jacobi(&a, &b, &c, base, n + 1);
    let s2 = pw(&s(), 2);
    let product = prod([
        q(n + 1),
        one_minus(-1, n, &one()),
        one_minus(1, n + 1, &one()),
        one_minus(1, 2 * n + 1, &s2),
        &q(2 * n + 1) - &s2,
    ])
    .div(&prod([
        s2.clone(),
        one_minus(-1, 2 * n, &one()),
        pw(&one_minus(-1, 2 * n + 1, &one()), 2),
        one_minus(-1, 2 * n + 2, &one()),
    ]))
    .expect("nonzero");
    let shape = (&(&(&one() + &q(n - 1)) + &q(n)) - &q(2 * n))
        .div(&(&one_minus(-1, 2 * n - 1, &one()) * &one_minus(-1, 2 * n + 1, &one())))
        .expect("nonzero");
    let sum = prod([
        (&one() + &s2).div(&s()).unwrap(),
        RatFn::q_pow(HalfInt::from_twice(2 * n + 1)),
        shape,
    ])
    .scale_int(-1);
    [
        Comparison::new(&an * &c_next, product),
        Comparison::new(&one() - &(&an + &cn), sum),
    ]
}

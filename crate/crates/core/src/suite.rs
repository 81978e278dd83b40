//! Report rows for each check family. A row records whether the identity
//! held; negative controls are expected not to.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cheb::{self, Bridge, ChebKind, Factorization};
use crate::check::Comparison;
use crate::conjectures::Conjecture;
use crate::error::{Error, Result};
use crate::exactalg::{RatFn, Sym, UPoly};
use crate::hankel::{self, HankelId, RecSystem};
use crate::limits::{LimitId, LimitParams};
use crate::normalized::{ClosedForm, GeneralCheck, NormExpansion, Specialization};
use crate::rogers::{self, Expansion, SpecialValue};
use crate::series::GfIdentity;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Absent,
    Expr(RatFn),
    Rational(BigRational),
    Integer(BigInt),
}

impl From<RatFn> for Value {
    fn from(r: RatFn) -> Self {
        Value::Expr(r)
    }
}

impl From<UPoly> for Value {
    fn from(p: UPoly) -> Self {
        Value::Expr(RatFn::from(p))
    }
}

#[derive(Clone, Debug)]
pub struct Row {
    pub id: String,
    pub params: Vec<(&'static str, i64)>,
    /// Set for deliberately perturbed identities.
    pub control: bool,
    pub holds: bool,
    pub expected: Value,
    pub computed: Value,
    pub witness: Option<String>,
    /// Further named values, such as the tau-product of a Hankel row.
    pub aux: Vec<(&'static str, Value)>,
}

impl Row {
    fn compare(id: &str, params: Vec<(&'static str, i64)>, control: bool, c: Comparison) -> Row {
        let holds = c.holds();
        Row {
            id: id.to_string(),
            params,
            control,
            holds,
            expected: c.rhs.into(),
            computed: c.lhs.into(),
            witness: None,
            aux: Vec::new(),
        }
    }

    fn error(id: &str, params: Vec<(&'static str, i64)>, control: bool, e: Error) -> Row {
        Row {
            id: id.to_string(),
            params,
            control,
            holds: false,
            expected: Value::Absent,
            computed: Value::Absent,
            witness: Some(e.to_string()),
            aux: Vec::new(),
        }
    }

    /// The outcome matches what the row is for: identities hold, controls fail.
    pub fn pass(&self) -> bool {
        self.holds != self.control
    }
}

/// Every identity passes and every control fails at least once.
pub fn all_pass(rows: &[Row]) -> bool {
    let mut controls: Vec<(&str, bool)> = Vec::new();
    for r in rows {
        if r.control {
            match controls.iter_mut().find(|(id, _)| *id == r.id) {
                Some(entry) => entry.1 |= !r.holds,
                None => controls.push((&r.id, !r.holds)),
            }
        } else if !r.holds {
            return false;
        }
    }
    controls.iter().all(|(_, failed)| *failed)
}

fn from_result(
    id: &str,
    params: Vec<(&'static str, i64)>,
    control: bool,
    c: Result<Comparison>,
) -> Row {
    match c {
        Ok(c) => Row::compare(id, params, control, c),
        Err(e) => Row::error(id, params, control, e),
    }
}

/// Generating functions compared coefficientwise up to `order`.
pub fn gf(ids: &[GfIdentity], order: usize) -> Vec<Row> {
    ids.iter()
        .map(|g| {
            let rep = g.verify(order);
            let (expected, computed) = match (&rep.lhs_coeff, &rep.rhs_coeff) {
                (Some(l), Some(r)) => (Value::Expr(r.clone()), Value::Expr(l.clone())),
                _ => (Value::Absent, Value::Absent),
            };
            Row {
                id: rep.id.to_string(),
                params: vec![("order", order as i64)],
                control: g.is_negative_control(),
                holds: rep.pass,
                expected,
                computed,
                witness: rep
                    .first_failing_order
                    .map(|k| format!("coefficients differ at z^{k}")),
                aux: Vec::new(),
            }
        })
        .collect()
}

/// Ids accepted by [`rs`].
pub const RS_IDS: [&str; 13] = [
    "gauss-even",
    "gauss-odd",
    "neg-q",
    "q-base-q2",
    "neg-q-floor",
    "even-square-base",
    "odd-square-base",
    "even-shifted-products",
    "odd-shifted-products",
    "square-base-alternating",
    "square-base-products",
    "square-base-inverse",
    "shift-identity",
];

/// Special values, expansions and the `x`-shift identity of `r_n`.
pub fn rs(id: &str, ns: RangeInclusive<i64>) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    if let Ok(v) = SpecialValue::from_id(id) {
        for n in ns.filter(|n| *n >= 0) {
            rows.push(Row::compare(
                id,
                vec![("n", n)],
                v.is_negative_control(),
                v.compare(n as usize),
            ));
        }
    } else if let Ok(e) = Expansion::from_id(id) {
        for n in ns.filter(|n| *n >= 0) {
            rows.push(Row::compare(id, vec![("n", n)], false, e.compare(n)));
        }
    } else if id == "shift-identity" {
        for n in ns.filter(|n| *n >= 0) {
            rows.push(Row::compare(
                id,
                vec![("n", n)],
                false,
                rogers::shift_identity(n),
            ));
        }
    } else {
        return Err(Error::UnknownIdentity(id.to_string()));
    }
    Ok(rows)
}

/// Expansions, recurrences and specializations of the normalized families.
pub fn norm(id: &str, ns: RangeInclusive<i64>) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    if let Ok(e) = NormExpansion::from_id(id) {
        for n in ns.filter(|n| *n >= 0) {
            rows.push(Row::compare(
                id,
                vec![("n", n)],
                e.is_negative_control(),
                e.compare(n),
            ));
        }
    } else if let Ok(g) = GeneralCheck::from_id(id) {
        for n in ns.filter(|n| g.admits(*n)) {
            rows.push(Row::compare(id, vec![("n", n)], false, g.compare(n)));
        }
    } else if let Some(sp) = Specialization::ALL.into_iter().find(|sp| sp.id() == id) {
        for n in ns.filter(|n| *n >= 0) {
            rows.push(Row::compare(id, vec![("n", n)], false, sp.compare(n)));
        }
    } else {
        return Err(Error::UnknownIdentity(id.to_string()));
    }
    Ok(rows)
}

/// Closed forms of `f` and `F` at powers of `q`, for `n, m` in the grid.
pub fn closed_forms(
    id: &str,
    ns: RangeInclusive<i64>,
    ms: RangeInclusive<i64>,
) -> Result<Vec<Row>> {
    let c = ClosedForm::from_id(id)?;
    let mut rows = Vec::new();
    for n in ns {
        for m in ms.clone().filter(|m| c.admits(n, *m)) {
            rows.push(from_result(
                id,
                vec![("n", n), ("m", m)],
                false,
                c.compare(n, m),
            ));
        }
    }
    Ok(rows)
}

/// `f(n, q^3, q) = 1 - q + q^{n+1}`.
pub fn f_at_q_cubed(ns: RangeInclusive<i64>) -> Vec<Row> {
    ns.filter(|n| *n >= 0)
        .map(|n| {
            let expected = &(&UPoly::one() - &UPoly::q_pow(1)) + &UPoly::q_pow(n as usize + 1);
            let c = ClosedForm::FOddPower
                .direct(n, 1)
                .map(|d| Comparison::new(d.into(), expected.into()));
            from_result("f-at-q-cubed", vec![("n", n)], false, c)
        })
        .collect()
}

/// Chebyshev factorizations, closed sums, bridges and boundary values.
pub fn cheb(id: &str, ns: RangeInclusive<i64>, ms: RangeInclusive<i64>) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    if let Ok(f) = Factorization::from_id(id) {
        for n in ns {
            for m in ms.clone().filter(|m| f.admits(n, *m)) {
                rows.push(from_result(
                    id,
                    vec![("n", n), ("m", m)],
                    f.is_negative_control(),
                    f.compare(n, m),
                ));
            }
        }
    } else if let Some(b) = Bridge::ALL.into_iter().find(|b| b.id() == id) {
        for n in ns {
            for m in ms.clone().filter(|m| b.admits(n, *m)) {
                rows.push(from_result(
                    id,
                    vec![("n", n), ("m", m)],
                    false,
                    b.compare(n, m),
                ));
            }
        }
    } else if let Some(kind) = id
        .strip_suffix("-closed-sum")
        .and_then(|k| ChebKind::from_name(k).ok())
    {
        for m in ms.filter(|m| *m >= 0) {
            let c = cheb::closed_sum(kind, m as usize)
                .and_then(|sum| Ok(Comparison::new(sum.into(), cheb::cheb(kind, m)?.into())));
            rows.push(from_result(id, vec![("m", m)], false, c));
        }
    } else if let Some(kind) = id
        .strip_suffix("-boundary")
        .and_then(|k| ChebKind::from_name(k).ok())
    {
        for e in ns.filter(|e| cheb::boundary_admits(kind, *e)) {
            for m in ms.clone().filter(|m| *m >= 0) {
                for q_sign in [1, -1] {
                    let params = vec![("e", e), ("m", m), ("q", q_sign)];
                    let expected = cheb::boundary_formula(kind, m, e, q_sign);
                    match cheb::boundary_value(kind, m, e, q_sign) {
                        Ok(v) => {
                            let holds = v == BigRational::from_integer(expected.clone());
                            rows.push(Row {
                                id: id.to_string(),
                                params,
                                control: false,
                                holds,
                                expected: Value::Integer(expected),
                                computed: Value::Rational(v),
                                witness: None,
                                aux: Vec::new(),
                            });
                        }
                        Err(err) => rows.push(Row::error(id, params, false, err)),
                    }
                }
            }
        }
    } else {
        return Err(Error::UnknownIdentity(id.to_string()));
    }
    Ok(rows)
}

/// Limit theorems over a grid; tuples not admitted by an id are skipped.
pub fn limits(
    id: LimitId,
    ns: RangeInclusive<i64>,
    ms: RangeInclusive<i64>,
    ks: RangeInclusive<i64>,
    rs: RangeInclusive<i64>,
) -> Vec<Row> {
    let mut rows = Vec::new();
    for n in ns {
        for m in ms.clone() {
            for k in ks.clone() {
                for r in rs.clone() {
                    let p = LimitParams { n, m, k, r };
                    if !id.admits(&p) {
                        continue;
                    }
                    let params = vec![("n", n), ("m", m), ("k", k), ("r", r)];
                    let expected = Value::Integer(id.expected(&p));
                    let row = match id.check(&p) {
                        Ok(rep) => Row {
                            id: id.id().to_string(),
                            params,
                            control: id.is_negative_control(),
                            holds: rep.pass,
                            expected,
                            computed: rep
                                .computed
                                .as_ref()
                                .map_or(Value::Absent, |v| Value::Rational(v.clone())),
                            witness: rep.computed.err().map(|e| e.to_string()),
                            aux: Vec::new(),
                        },
                        Err(e) => Row::error(id.id(), params, id.is_negative_control(), e),
                    };
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Divisibility scans, ordered by `(a, m, n)`.
pub fn scan(
    c: Conjecture,
    ns: RangeInclusive<i64>,
    ms: RangeInclusive<i64>,
    values: &[i64],
) -> Vec<Row> {
    let mut rows = Vec::new();
    for &a in values {
        for m in ms.clone() {
            for n in ns.clone() {
                let label = if matches!(
                    c,
                    Conjecture::PowerOfTwoBase | Conjecture::PowerOfTwoBaseOverreach
                ) {
                    "k"
                } else {
                    "p"
                };
                let params = vec![("n", n), ("m", m), (label, a)];
                let row = match c.test(n, m, a) {
                    Ok(res) => {
                        let holds = res.consistent();
                        let witness = match (&res.remainder, &res.at_minus_one) {
                            (Some(rem), _) if !res.holds => Some(format!("remainder {rem}")),
                            (_, Some(v)) => Some(format!("cofactor at q=-1: {v}")),
                            _ => None,
                        };
                        Row {
                            id: c.id().to_string(),
                            params,
                            control: c.is_negative_control(),
                            holds,
                            expected: res
                                .expected_at_minus_one
                                .map_or(Value::Absent, Value::Integer),
                            computed: res.cofactor.map_or(Value::Absent, Value::from),
                            witness,
                            aux: Vec::new(),
                        }
                    }
                    Err(e) => Row::error(c.id(), params, c.is_negative_control(), e),
                };
                rows.push(row);
            }
        }
    }
    rows
}

/// Families accepted by [`hankel`].
pub const HANKEL_FAMILIES: [&str; 8] = ["rs", "f", "h", "H", "F", "F-even", "F-odd", "rs-shifted"];

/// Direct determinant, tau-product and (where one exists) closed form, with `s`
/// and `t` optionally specialized afterwards.
pub fn hankel(family: &str, n: usize, s_val: Option<&RatFn>, t_val: Option<&RatFn>) -> Result<Row> {
    let (direct, product, closed, control) = match family {
        "h" | "H" => {
            let sys = RecSystem::from_name(family)?;
            let sys = match t_val {
                Some(t) => RecSystem {
                    t: t.clone(),
                    ..sys
                },
                None => sys,
            };
            let moms = sys.moments(2 * n);
            (
                hankel::hankel_det(&moms, n),
                sys.tau_product(n),
                None,
                false,
            )
        }
        _ => {
            let id = match family {
                "f" => HankelId::SmallF,
                other => {
                    HankelId::from_id(other).map_err(|_| Error::UnknownFamily(other.to_string()))?
                }
            };
            (
                id.direct(n),
                id.tau_product(n),
                Some(id.closed(n)),
                id.is_negative_control(),
            )
        }
    };
    let specialize = |r: RatFn| -> Result<RatFn> {
        match s_val {
            Some(v) => r.subst(Sym::S, v),
            None => Ok(r),
        }
    };
    let direct = specialize(direct)?;
    let product = specialize(product)?;
    let closed = closed.map(specialize).transpose()?;
    let holds = direct == product && closed.as_ref().is_none_or(|c| *c == direct);
    let witness = if holds {
        None
    } else if direct != product {
        Some("determinant differs from the tau-product".to_string())
    } else {
        Some("closed form differs from the determinant".to_string())
    };
    Ok(Row {
        id: family.to_string(),
        params: vec![("n", n as i64)],
        control,
        holds,
        expected: closed.map_or_else(|| Value::Expr(product.clone()), Value::Expr),
        computed: Value::Expr(direct),
        witness,
        aux: vec![("product", Value::Expr(product))],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_and_controls() {
        let rows = rs("neg-q-floor", 0..=3).unwrap();
        assert!(!rows[1].holds && rows[1].pass());
        assert!(all_pass(&rows));
        assert!(all_pass(&rs("gauss-even", 0..=5).unwrap()));
        assert!(!all_pass(&rs("neg-q-floor", 0..=0).unwrap()));
        assert!(rs("bogus", 0..=1).is_err());
    }

    #[test]
    fn hankel_rows() {
        let r = hankel("rs", 3, None, None).unwrap();
        assert!(r.holds);
        let r = hankel("F", 0, None, None).unwrap();
        assert_eq!(r.computed, Value::Expr(RatFn::one()));
        let r = hankel("f", 2, Some(&RatFn::q(3)), None).unwrap();
        assert!(r.holds);
        assert_eq!(r.computed, Value::Expr(RatFn::zero()));
        assert!(!hankel("rs-shifted", 1, None, None).unwrap().holds);
        assert!(hankel("h", 1, None, Some(&RatFn::q(2))).unwrap().holds);
        assert!(hankel("nope", 1, None, None).is_err());
    }

    #[test]
    fn scans_and_limits() {
        let rows = scan(Conjecture::OddPrimeProduct, 0..=9, 2..=2, &[3]);
        assert_eq!(rows.len(), 10);
        assert!(all_pass(&rows));
        let rows = limits(LimitId::AltEven, 0..=1, 1..=2, 1..=2, 0..=0);
        assert_eq!(rows.len(), 8);
        assert!(all_pass(&rows));
        assert!(scan(
            Conjecture::PrimeBase,
            RangeInclusive::new(0, -1),
            0..=0,
            &[3]
        )
        .is_empty());
    }
}

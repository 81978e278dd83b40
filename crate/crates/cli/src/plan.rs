//! Turns command-line selections into ordered lists of independent jobs.
//! Each job covers one parameter tuple; results are concatenated in job order.

use std::ops::RangeInclusive;

use qszego::cheb::{Bridge, Factorization};
use qszego::conjectures::Conjecture;
use qszego::limits::{LimitId, LimitParams};
use qszego::normalized::{ClosedForm, GeneralCheck, NormExpansion, Specialization};
use qszego::rogers::{Expansion, SpecialValue};
use qszego::series::GfIdentity;
use qszego::suite::{self, Row};
use qszego::RatFn;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grid::Grid;

pub type Job = Box<dyn Fn() -> Result<Vec<Row>, String> + Send + Sync>;

/// Axis overrides shared by the identity suites.
#[derive(Debug, Default)]
pub struct Axes {
    pub n: Option<RangeInclusive<i64>>,
    pub m: Option<RangeInclusive<i64>>,
    pub k: Option<Vec<i64>>,
    pub r: Option<RangeInclusive<i64>>,
}

impl Axes {
    pub fn from_grid(grid: &Grid) -> Result<Axes, String> {
        Ok(Axes {
            n: grid.range("n")?,
            m: grid.range("m")?,
            k: grid.values("k")?,
            r: grid.range("r")?,
        })
    }

    fn n(&self, default: RangeInclusive<i64>) -> RangeInclusive<i64> {
        self.n.clone().unwrap_or(default)
    }

    fn m(&self, default: RangeInclusive<i64>) -> RangeInclusive<i64> {
        self.m.clone().unwrap_or(default)
    }
}

fn err(e: qszego::Error) -> String {
    e.to_string()
}

fn pick(ids: &[String], all: Vec<&'static str>) -> Vec<String> {
    if ids.is_empty() {
        all.into_iter().map(String::from).collect()
    } else {
        ids.to_vec()
    }
}

/// Runs a suite function for id validation only.
fn no_tuples() -> RangeInclusive<i64> {
    RangeInclusive::new(1, 0)
}

fn grid2(ns: RangeInclusive<i64>, ms: RangeInclusive<i64>) -> Vec<(i64, i64)> {
    ns.flat_map(|n| ms.clone().map(move |m| (n, m))).collect()
}

pub fn gf(ids: &[String], order: usize) -> Result<Vec<Job>, String> {
    let ids = pick(ids, GfIdentity::ALL.iter().map(|g| g.id()).collect());
    let mut jobs: Vec<Job> = Vec::new();
    for id in ids {
        let g = GfIdentity::from_id(&id).map_err(err)?;
        jobs.push(Box::new(move || Ok(suite::gf(&[g], order))));
    }
    Ok(jobs)
}

pub fn rs(ids: &[String], axes: &Axes) -> Result<Vec<Job>, String> {
    let mut jobs: Vec<Job> = Vec::new();
    for id in pick(ids, suite::RS_IDS.to_vec()) {
        suite::rs(&id, no_tuples()).map_err(err)?;
        let default = if SpecialValue::from_id(&id).is_ok() {
            0..=15
        } else {
            0..=10
        };
        for n in axes.n(default) {
            let id = id.clone();
            jobs.push(Box::new(move || suite::rs(&id, n..=n).map_err(err)));
        }
    }
    Ok(jobs)
}

pub fn norm(ids: &[String], axes: &Axes) -> Result<Vec<Job>, String> {
    let all = NormExpansion::ALL
        .iter()
        .map(|e| e.id())
        .chain(GeneralCheck::ALL.iter().map(|g| g.id()))
        .chain(Specialization::ALL.iter().map(|s| s.id()))
        .collect();
    let mut jobs: Vec<Job> = Vec::new();
    for id in pick(ids, all) {
        suite::norm(&id, no_tuples()).map_err(err)?;
        let default = if NormExpansion::from_id(&id).is_ok() {
            0..=10
        } else {
            0..=8
        };
        for n in axes.n(default) {
            let id = id.clone();
            jobs.push(Box::new(move || suite::norm(&id, n..=n).map_err(err)));
        }
    }
    Ok(jobs)
}

pub fn closed(ids: &[String], axes: &Axes) -> Result<Vec<Job>, String> {
    let mut all: Vec<&str> = ClosedForm::ALL.iter().map(|c| c.id()).collect();
    all.push("f-at-q-cubed");
    let mut jobs: Vec<Job> = Vec::new();
    for id in pick(ids, all) {
        if id == "f-at-q-cubed" {
            for n in axes.n(0..=12) {
                jobs.push(Box::new(move || Ok(suite::f_at_q_cubed(n..=n))));
            }
            continue;
        }
        suite::closed_forms(&id, no_tuples(), no_tuples()).map_err(err)?;
        for (n, m) in grid2(axes.n(0..=8), axes.m(0..=8)) {
            let id = id.clone();
            jobs.push(Box::new(move || {
                suite::closed_forms(&id, n..=n, m..=m).map_err(err)
            }));
        }
    }
    Ok(jobs)
}

pub fn cheb(ids: &[String], axes: &Axes) -> Result<Vec<Job>, String> {
    let mut all: Vec<&str> = Factorization::ALL.iter().map(|f| f.id()).collect();
    all.extend(Bridge::ALL.iter().map(|b| b.id()));
    all.extend([
        "T-closed-sum",
        "U-closed-sum",
        "T-boundary",
        "U-boundary",
        "V-boundary",
    ]);
    let mut jobs: Vec<Job> = Vec::new();
    for id in pick(ids, all) {
        suite::cheb(&id, no_tuples(), no_tuples()).map_err(err)?;
        let tuples = if id.ends_with("-closed-sum") {
            axes.m(0..=10).map(|m| (0, m)).collect()
        } else if id.ends_with("-boundary") {
            // the n axis carries the exponent e of the boundary point -q^e
            grid2(axes.n(-3..=3), axes.m(0..=6))
        } else if Bridge::ALL.iter().any(|b| b.id() == id) {
            grid2(axes.n(0..=6), axes.m(0..=8))
        } else {
            grid2(axes.n(0..=8), axes.m(0..=8))
        };
        for (n, m) in tuples {
            let id = id.clone();
            jobs.push(Box::new(move || {
                suite::cheb(&id, n..=n, m..=m).map_err(err)
            }));
        }
    }
    Ok(jobs)
}

/// Per-theorem default grid `(n, m, k, r)`.
fn limit_defaults(
    id: LimitId,
) -> (
    RangeInclusive<i64>,
    RangeInclusive<i64>,
    Vec<i64>,
    RangeInclusive<i64>,
) {
    match id {
        LimitId::AltEven
        | LimitId::AltOdd
        | LimitId::NegEven
        | LimitId::NegOdd
        | LimitId::HalfQuad => (0..=3, 0..=4, (1..=4).collect(), 0..=0),
        LimitId::PrimeEven | LimitId::PrimeOdd => (0..=3, 0..=3, vec![3, 5], 0..=0),
        _ => (0..=3, 0..=3, (1..=6).collect(), 0..=3),
    }
}

pub fn limits(ids: &[String], axes: &Axes) -> Result<Vec<Job>, String> {
    let mut jobs: Vec<Job> = Vec::new();
    for id in pick(ids, LimitId::ALL.iter().map(|l| l.id()).collect()) {
        let id = LimitId::from_id(&id).map_err(err)?;
        let (dn, dm, dk, dr) = limit_defaults(id);
        let ks = axes.k.clone().unwrap_or(dk);
        let rs = axes.r.clone().unwrap_or(dr);
        for n in axes.n(dn) {
            for m in axes.m(dm.clone()) {
                for &k in &ks {
                    for r in rs.clone() {
                        if id.admits(&LimitParams { n, m, k, r }) {
                            jobs.push(Box::new(move || {
                                Ok(suite::limits(id, n..=n, m..=m, k..=k, r..=r))
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(jobs)
}

/// The scan axis beside `n` and `m`: `k` for the power-of-two bases, `p` otherwise.
pub fn scan_axis(c: Conjecture) -> &'static str {
    match c {
        Conjecture::PowerOfTwoBase | Conjecture::PowerOfTwoBaseOverreach => "k",
        _ => "p",
    }
}

pub fn scan_defaults(c: Conjecture) -> (RangeInclusive<i64>, RangeInclusive<i64>, Vec<i64>) {
    match c {
        Conjecture::PowerOfTwoBase => (0..=12, 0..=6, vec![0, 1, 2, 3]),
        Conjecture::PrimeBase => (0..=12, 0..=6, vec![2, 3, 5, 7]),
        Conjecture::OddPrimeProduct => (0..=10, 0..=3, vec![3, 5, 7]),
        Conjecture::PowerOfTwoBaseOverreach => (0..=6, 0..=2, vec![1]),
    }
}

pub fn scan(
    c: Conjecture,
    ns: RangeInclusive<i64>,
    ms: RangeInclusive<i64>,
    values: &[i64],
) -> Result<Vec<Job>, String> {
    for &a in values {
        c.check_parameter(a)
            .map_err(|e| format!("{} = {a}: {e}", scan_axis(c)))?;
    }
    let mut jobs: Vec<Job> = Vec::new();
    for &a in values {
        for m in ms.clone() {
            for n in ns.clone() {
                jobs.push(Box::new(move || Ok(suite::scan(c, n..=n, m..=m, &[a]))));
            }
        }
    }
    Ok(jobs)
}

pub fn hankel(
    family: &str,
    ns: RangeInclusive<i64>,
    s_val: Option<RatFn>,
    t_val: Option<RatFn>,
) -> Result<Vec<Job>, String> {
    if !suite::HANKEL_FAMILIES.contains(&family) {
        return Err(format!(
            "unknown family `{family}`; expected one of {}",
            suite::HANKEL_FAMILIES.join(", ")
        ));
    }
    if *ns.start() < 0 {
        return Err("hankel order must be nonnegative".to_string());
    }
    let mut jobs: Vec<Job> = Vec::new();
    for n in ns {
        let (family, s_val, t_val) = (family.to_string(), s_val.clone(), t_val.clone());
        jobs.push(Box::new(move || {
            suite::hankel(&family, n as usize, s_val.as_ref(), t_val.as_ref())
                .map(|r| vec![r])
                .map_err(err)
        }));
    }
    Ok(jobs)
}

/// Randomly drawn identity instances. The draw depends only on the seed, so a
/// report can be replayed exactly.
pub fn props(seed: u64, cases: usize) -> Vec<Job> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut jobs: Vec<Job> = Vec::new();
    for _ in 0..cases {
        jobs.push(match rng.gen_range(0..9) {
            0 => {
                let v = *SpecialValue::ALL
                    .iter()
                    .copied()
                    .filter(|v| !v.is_negative_control())
                    .collect::<Vec<_>>()
                    .choose(&mut rng)
                    .unwrap();
                let n = rng.gen_range(0..=15);
                Box::new(move || suite::rs(v.id(), n..=n).map_err(err))
            }
            1 => {
                let e = *Expansion::ALL.choose(&mut rng).unwrap();
                let n = rng.gen_range(0..=10);
                Box::new(move || suite::rs(e.id(), n..=n).map_err(err))
            }
            2 => {
                let e = *NormExpansion::ALL
                    .iter()
                    .copied()
                    .filter(|e| !e.is_negative_control())
                    .collect::<Vec<_>>()
                    .choose(&mut rng)
                    .unwrap();
                let n = rng.gen_range(0..=10);
                Box::new(move || suite::norm(e.id(), n..=n).map_err(err))
            }
            3 => {
                let c = *ClosedForm::ALL.choose(&mut rng).unwrap();
                let (n, m) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
                Box::new(move || suite::closed_forms(c.id(), n..=n, m..=m).map_err(err))
            }
            4 => {
                let f = *Factorization::ALL
                    .iter()
                    .copied()
                    .filter(|f| !f.is_negative_control())
                    .collect::<Vec<_>>()
                    .choose(&mut rng)
                    .unwrap();
                let (n, m) = loop {
                    let (n, m) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
                    if f.admits(n, m) {
                        break (n, m);
                    }
                };
                Box::new(move || suite::cheb(f.id(), n..=n, m..=m).map_err(err))
            }
            5 => {
                let id = *LimitId::ALL
                    .iter()
                    .copied()
                    .filter(|l| !l.is_negative_control())
                    .collect::<Vec<_>>()
                    .choose(&mut rng)
                    .unwrap();
                let p = loop {
                    let p = LimitParams {
                        n: rng.gen_range(0..=3),
                        m: rng.gen_range(0..=3),
                        k: rng.gen_range(1..=6),
                        r: rng.gen_range(0..=3),
                    };
                    if id.admits(&p) {
                        break p;
                    }
                };
                Box::new(move || {
                    Ok(suite::limits(
                        id,
                        p.n..=p.n,
                        p.m..=p.m,
                        p.k..=p.k,
                        p.r..=p.r,
                    ))
                })
            }
            6 => {
                let c = *[
                    Conjecture::PowerOfTwoBase,
                    Conjecture::PrimeBase,
                    Conjecture::OddPrimeProduct,
                ]
                .choose(&mut rng)
                .unwrap();
                let (ns, ms, values) = scan_defaults(c);
                let n = rng.gen_range(ns);
                let m = rng.gen_range(ms);
                let a = *values.choose(&mut rng).unwrap();
                Box::new(move || Ok(suite::scan(c, n..=n, m..=m, &[a])))
            }
            7 => {
                let family = *["rs", "f", "F"].choose(&mut rng).unwrap();
                let n = rng.gen_range(0..=3);
                Box::new(move || {
                    suite::hankel(family, n, None, None)
                        .map(|r| vec![r])
                        .map_err(err)
                })
            }
            _ => {
                let g = *GfIdentity::ALL
                    .iter()
                    .copied()
                    .filter(|g| !g.is_negative_control())
                    .collect::<Vec<_>>()
                    .choose(&mut rng)
                    .unwrap();
                let order = rng.gen_range(1..=12);
                Box::new(move || Ok(suite::gf(&[g], order)))
            }
        });
    }
    jobs
}

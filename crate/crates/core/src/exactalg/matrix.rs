use alloc::vec::Vec;

use super::{Denom, MPoly, RatFn};

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact.
pub fn det_mpoly(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return MPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a matrix of rational functions: each row is cleared by
/// the common multiple of its denominators, the polynomial determinant is
/// taken, and the row factors are divided back out.
pub fn det_ratfn(rows: &[Vec<RatFn>]) -> RatFn {
    let mut polys = Vec::with_capacity(rows.len());
    let mut scale = RatFn::one();
    for row in rows {
        let mut l = Denom::one();
        for e in row {
            l = l.lcm_with(e.den());
        }
        let lp = RatFn::from(l.to_mpoly());
        polys.push(
            row.iter()
                .map(|e| (e * &lp).to_mpoly().expect("row cleared"))
                .collect(),
        );
        scale = &scale * &lp;
    }
    RatFn::from(det_mpoly(polys))
        .div(&scale)
        .expect("nonzero row factor")
}

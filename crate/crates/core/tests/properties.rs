use num_bigint::BigInt;
use proptest::prelude::*;
use qszego::conjectures::Conjecture;
use qszego::hankel::RecSystem;
use qszego::limits::{c_p_minus1, LimitId, LimitParams};
use qszego::qfun::{binomial, gauss, pascal_recurrences_hold};
use qszego::rogers::rs;
use qszego::{HalfInt, MPoly, QRat, RatFn, UPoly};

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-6i64..=6, 0..7)
        .prop_map(|c| UPoly::from_coeffs(c.into_iter().map(BigInt::from).collect()))
}

fn nonzero_upoly() -> impl Strategy<Value = UPoly> {
    upoly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Polynomials in `q` alone, so every `u`-exponent is even.
fn q_poly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| UPoly::from_q_coeffs(&c))
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-4i64..=4, 0usize..4, 0u32..3, 0u32..2, 0u32..2), 0..5).prop_map(
        |terms| {
            terms
                .into_iter()
                .fold(MPoly::zero(), |acc, (c, ue, s, t, x)| {
                    &acc + &MPoly::term(c, ue, [s, t, x])
                })
        },
    )
}

fn nonzero_mpoly() -> impl Strategy<Value = MPoly> {
    mpoly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn upoly_ring(a in upoly(), b in upoly(), c in upoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn mpoly_ring(a in mpoly(), b in mpoly(), c in mpoly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn exact_division_inverts_product(a in upoly(), b in nonzero_upoly(), c in mpoly(), d in nonzero_mpoly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        prop_assert_eq!((&c * &d).div_exact(&d), Some(c));
    }

    #[test]
    fn q_power_substitution_round_trip(num in q_poly(), den in q_poly().prop_filter("nonzero", |p| !p.is_zero()), k in prop::sample::select(vec![1i64, -1, 2, -2])) {
        let r = QRat::new(num, den).unwrap();
        let inverse = if k.abs() == 2 { HalfInt::from_twice(k.signum()) } else { HalfInt::int(k) };
        let there = r.subst_q_power(HalfInt::int(k)).unwrap();
        prop_assert_eq!(there.subst_q_power(inverse).unwrap(), r.clone());
        // q -> q^{1/2} stays on the grid for polynomials in q
        let half = r.subst_q_power(HalfInt::from_twice(1)).unwrap();
        prop_assert_eq!(half.subst_q_power(HalfInt::int(2)).unwrap(), r);
    }

    #[test]
    fn qrat_normal_form(a in upoly(), b in nonzero_upoly(), c in nonzero_upoly(), scale in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        let plain = QRat::new(a.clone(), b.clone()).unwrap();
        let scaled = QRat::new((&a * &c).scale(&scale.into()), (&b * &c).scale(&scale.into())).unwrap();
        prop_assert_eq!(scaled.num(), plain.num());
        prop_assert_eq!(scaled.den(), plain.den());
    }

    #[test]
    fn gauss_symmetry_and_row_sums(n in 0i64..=15) {
        let mut total = BigInt::from(0);
        for j in 0..=n {
            prop_assert_eq!(gauss(n, j), gauss(n, n - j));
            let at_one = gauss(n, j).eval_q_int(1).unwrap();
            prop_assert_eq!(at_one.to_integer(), binomial(n, j));
            total += at_one.to_integer();
        }
        prop_assert_eq!(total, BigInt::from(1u64 << n));
    }

    #[test]
    fn rogers_szego_at_q_one(n in 0usize..=12) {
        let p = rs(n, HalfInt::ONE);
        for j in 0..=n as u32 {
            let c = p.coeff(&[j, 0, 0]).cloned().unwrap_or_else(UPoly::zero);
            prop_assert_eq!(c.eval_q_int(1).unwrap().to_integer(), binomial(n as i64, j as i64));
        }
        prop_assert_eq!(p.degree(qszego::Sym::S), Some(n as u32));
    }

    #[test]
    fn scan_verdicts_round_trip(
        c in prop::sample::select(vec![Conjecture::PowerOfTwoBase, Conjecture::PrimeBase, Conjecture::OddPrimeProduct]),
        n in 0i64..=10,
        m in 0i64..=4,
        pick in 0usize..4,
    ) {
        let a = match c {
            Conjecture::PowerOfTwoBase => [0, 1, 2, 3][pick],
            Conjecture::PrimeBase => [2, 3, 5, 7][pick],
            _ => [3, 5, 7, 3][pick],
        };
        let res = c.test(n, m, a).unwrap();
        prop_assert!(res.holds);
        let (target, divisor) = c.target_and_divisor(n, m, a).unwrap();
        prop_assert_eq!(&divisor * res.cofactor.as_ref().unwrap(), target);
        if c == Conjecture::OddPrimeProduct {
            prop_assert_eq!(res.at_one.unwrap().to_integer(), BigInt::from(1));
            let want = c_p_minus1(a as u64, m as u64, n as u64).unwrap();
            prop_assert_eq!(res.at_minus_one.unwrap().to_integer(), want);
        }
    }

    #[test]
    fn limits_equal_closed_values(
        id in prop::sample::select(LimitId::ALL.iter().copied().filter(|l| !l.is_negative_control()).collect::<Vec<_>>()),
        n in 0i64..=3,
        m in 0i64..=3,
        k in 1i64..=6,
        r in 0i64..=3,
    ) {
        let p = LimitParams { n, m, k, r };
        prop_assume!(id.admits(&p));
        let rep = id.check(&p).unwrap();
        prop_assert!(rep.pass, "{} {:?}", id.id(), rep.computed);
    }

    #[test]
    fn moment_table_top_row(family in prop::sample::select(vec!["rs", "f", "h", "F"]), n in 0usize..=8) {
        let sys = RecSystem::from_name(family).unwrap();
        let table = sys.moment_table(n);
        prop_assert_eq!(table.get(n, 0), sys.moment(n));
    }
}

#[test]
fn pascal_rows() {
    assert!(pascal_recurrences_hold(15));
}

#[test]
fn rs_taus_never_vanish() {
    let sys = RecSystem::rs();
    for j in 0..=10 {
        assert!(!sys.tau(j).is_zero(), "tau({j})");
    }
    assert_eq!(sys.tau_product(0), RatFn::one());
}

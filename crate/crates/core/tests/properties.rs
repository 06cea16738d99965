use proptest::prelude::*;

use riordan_core::catalog::fuss_series;
use riordan_core::quasi::QuasiRiordan;
use riordan_core::riordan::{reconstruct_from_az, RiordanPair};
use riordan_core::series::{int, Rational, Series};

const P: usize = 14;

fn series_from(v: &[i64], prec: usize) -> Series {
    let mut c: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
    c.resize(prec + 1, int(0));
    c.truncate(prec + 1);
    Series::new(c)
}

fn any_series() -> impl Strategy<Value = Series> {
    prop::collection::vec(-4i64..=4, 1..8).prop_map(|v| series_from(&v, P))
}

fn unit() -> impl Strategy<Value = Series> {
    (
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(-3)],
        prop::collection::vec(-4i64..=4, 0..7),
    )
        .prop_map(|(c0, rest)| {
            let mut v = vec![c0];
            v.extend(rest);
            series_from(&v, P)
        })
}

fn g_series() -> impl Strategy<Value = Series> {
    prop::collection::vec(-3i64..=3, 0..6).prop_map(|rest| {
        let mut v = vec![1];
        v.extend(rest);
        series_from(&v, P)
    })
}

fn f_series() -> impl Strategy<Value = Series> {
    (
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2)],
        prop::collection::vec(-3i64..=3, 0..5),
    )
        .prop_map(|(f1, rest)| {
            let mut v = vec![0, f1];
            v.extend(rest);
            series_from(&v, P)
        })
}

fn pair() -> impl Strategy<Value = RiordanPair> {
    (g_series(), f_series()).prop_map(|(g, f)| RiordanPair::new(g, f).unwrap())
}

fn quasi() -> impl Strategy<Value = QuasiRiordan> {
    (g_series(), f_series()).prop_map(|(g, f)| QuasiRiordan::new(g, f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in any_series(), b in any_series(), c in any_series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Series::zero(P));
        prop_assert_eq!(&a * &Series::one(P), a.clone());
    }

    #[test]
    fn reciprocal_round_trip(u in unit()) {
        let r = u.reciprocal().unwrap();
        prop_assert_eq!(&u * &r, Series::one(P));
    }

    #[test]
    fn composition_is_associative(a in any_series(), b in f_series(), c in f_series()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn compositional_inverse_round_trip(f in f_series()) {
        let fbar = f.compositional_inverse().unwrap();
        prop_assert_eq!(f.compose(&fbar).unwrap(), Series::t(P));
        prop_assert_eq!(fbar.compose(&f).unwrap(), Series::t(P));
    }

    #[test]
    fn riordan_group_axioms(a in pair(), b in pair(), c in pair()) {
        let id = RiordanPair::identity(P);
        prop_assert_eq!(a.mul(&id).unwrap(), a.clone());
        prop_assert_eq!(id.mul(&a).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), id.clone());
        prop_assert_eq!(a.inverse().unwrap().mul(&a).unwrap(), id);
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn product_matches_matrix_product(a in pair(), b in pair()) {
        let n = P + 1;
        let lhs = a.mul(&b).unwrap().triangle(n).unwrap();
        let rhs = a.triangle(n).unwrap().mul(&b.triangle(n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_matches_matrix(a in pair(), h in any_series()) {
        let via_series = a.apply(&h).unwrap();
        let via_matrix = a.triangle(P + 1).unwrap().apply(h.coeffs()).unwrap();
        prop_assert_eq!(via_series.coeffs(), via_matrix.as_slice());
    }

    #[test]
    fn az_round_trip(a in pair()) {
        let az = a.az().unwrap();
        let n = P + 1;
        prop_assert_eq!(reconstruct_from_az(&az, n).unwrap(), a.triangle(n).unwrap());
    }

    #[test]
    fn semidirect_split_recombines(a in pair()) {
        let (appell, lagrange) = a.semidirect_split();
        prop_assert_eq!(appell.mul(&lagrange).unwrap(), a);
    }

    #[test]
    fn quasi_group_axioms(a in quasi(), b in quasi(), c in quasi()) {
        let id = QuasiRiordan::identity(P);
        prop_assert_eq!(a.mul(&id).unwrap(), a.clone());
        prop_assert_eq!(id.mul(&a).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), id.clone());
        prop_assert_eq!(a.inverse().unwrap().mul(&a).unwrap(), id);
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn quasi_product_matches_matrix_product(a in quasi(), b in quasi()) {
        let n = P + 1;
        let lhs = a.mul(&b).unwrap().matrix(n).unwrap();
        let rhs = a.matrix(n).unwrap().mul(&b.matrix(n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quasi_conjugation_keeps_f(a in quasi(), by in quasi()) {
        let c = a.conjugate(&by).unwrap();
        prop_assert_eq!(c.f(), a.f());
    }
}

#[test]
fn compositional_inverse_at_high_precision() {
    let prec = 48;
    let f = series_from(&[0, 1, -1, 2, 0, 1], prec);
    let fbar = f.compositional_inverse().unwrap();
    assert_eq!(fbar.prec(), prec);
    assert_eq!(f.compose(&fbar).unwrap(), Series::t(prec));
    assert_eq!(fbar.compose(&f).unwrap(), Series::t(prec));
}

#[test]
fn fuss_functional_equation() {
    let prec = 40;
    for m in 1..=5 {
        let f = fuss_series(m, prec).unwrap();
        let rhs = &Series::one(prec) + &f.pow(m).mul_t_pow(1);
        assert!(rhs.agrees_with(&f), "m = {m}");
    }
}

use fibonomial::umbral::{basic_sequence, verify_binomial_type};
use fibonomial::{xhat_apply, DeltaOperator, OperatorSeries, Polynomial, Rational, SequenceSpec};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

const FIB: SequenceSpec = SequenceSpec::Fibonacci;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn polynomial(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Polynomial::from_coeffs)
}

fn series(order: usize) -> impl Strategy<Value = OperatorSeries> {
    prop::collection::vec(rational(), order + 1)
        .prop_map(move |c| OperatorSeries::new(FIB, order, c).unwrap())
}

fn delta(order: usize) -> impl Strategy<Value = DeltaOperator> {
    series(order)
        .prop_filter("needs c_1 != 0", |s| !s.coeff(1).is_zero())
        .prop_map(move |s| {
            let mut c = s.coeffs().to_vec();
            c[0] = Rational::zero();
            DeltaOperator::new(OperatorSeries::new(FIB, order, c).unwrap()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in polynomial(8), q in polynomial(8), r in polynomial(8)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!((&p + &q) + &r, &p + (&q + &r));
        prop_assert_eq!((&p * &q) * &r, &p * (&q * &r));
        prop_assert_eq!(&p * (&q + &r), &p * &q + &p * &r);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn eval_is_a_homomorphism(p in polynomial(8), q in polynomial(8), a in rational()) {
        prop_assert_eq!((&p * &q).eval(&a), p.eval(&a) * q.eval(&a));
        prop_assert_eq!((&p + &q).eval(&a), p.eval(&a) + q.eval(&a));
    }

    #[test]
    fn rendering_round_trips(p in polynomial(8)) {
        let back: Polynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn multiply_commutes_and_associates(a in series(10), b in series(10), c in series(10)) {
        prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        prop_assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn product_is_fibonomial_convolution(t in series(10), s in series(10)) {
        let a = t.divided_coeffs().unwrap();
        let b = s.divided_coeffs().unwrap();
        let c = t.multiply(&s).unwrap().divided_coeffs().unwrap();
        for k in 0..=10 {
            let mut conv = Rational::zero();
            for l in 0..=k {
                conv += FIB.fibonomial(k, l).unwrap() * &a[l] * &b[k - l];
            }
            prop_assert_eq!(&c[k], &conv);
        }
    }

    #[test]
    fn inverse_is_involutive(t in series(8)) {
        prop_assume!(t.is_invertible());
        let u = t.invert().unwrap();
        prop_assert_eq!(t.multiply(&u).unwrap(), OperatorSeries::identity(FIB, 8));
        prop_assert_eq!(u.invert().unwrap(), t);
    }

    #[test]
    fn pincherle_leibniz(t in series(10), s in series(10)) {
        // (TS)' = T'S + TS'
        let lhs = t.multiply(&s).unwrap().pincherle();
        let (t9, s9) = (t.truncate(9).unwrap(), s.truncate(9).unwrap());
        let rhs = t.pincherle().multiply(&s9).unwrap()
            .try_add(&t9.multiply(&s.pincherle()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pincherle_power_rule(s in series(10), n in 1i64..=6) {
        let lhs = s.power(n).unwrap().pincherle();
        let rhs = s.pincherle()
            .multiply(&s.truncate(9).unwrap().power(n - 1).unwrap()).unwrap()
            .scale(&Rational::from_integer(n.into()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_invariance(t in series(8), y in rational(), p in polynomial(8)) {
        let e = OperatorSeries::translation(FIB, &y, 8).unwrap();
        prop_assert_eq!(
            t.apply(&e.apply(&p).unwrap()).unwrap(),
            e.apply(&t.apply(&p).unwrap()).unwrap()
        );
    }

    #[test]
    fn delta_lowers_degree_by_one(q in delta(8), p in polynomial(8)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let d = p.degree().unwrap();
        prop_assert_eq!(q.apply(&p).unwrap().degree(), Some(d - 1));
        prop_assert!(q.apply(&Polynomial::constant(p.coeff(0))).unwrap().is_zero());
    }

    #[test]
    fn commutator_is_identity(p in polynomial(9)) {
        let d = OperatorSeries::monomial(FIB, 10, 1);
        let lhs = d.apply(&xhat_apply(&FIB, &p).unwrap()).unwrap()
            - xhat_apply(&FIB, &d.apply(&p).unwrap()).unwrap();
        prop_assert_eq!(lhs, p);
    }

    #[test]
    fn random_delta_basic_sequences(q in delta(7), y in rational()) {
        let seq = basic_sequence(&q, 6).unwrap();
        for (n, qn) in seq.polys().iter().enumerate().skip(1) {
            prop_assert!(qn.eval(&Rational::zero()).is_zero());
            prop_assert_eq!(
                q.apply(qn).unwrap(),
                seq.polys()[n - 1].scale(&FIB.term_ratio(n).unwrap())
            );
        }
        prop_assert!(verify_binomial_type(&seq, &y).unwrap().holds());
    }
}

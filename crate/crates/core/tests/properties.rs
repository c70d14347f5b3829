//! Randomized checks of the exact kernel against independent oracles.

use idforge_core::binomial::{binom, binom_int, gauss_binom};
use idforge_core::enumeration::compositions;
use idforge_core::{Assignment, Monomial, Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (0i64..=3, 0i64..=2, -2i64..=2)
        .prop_map(|(x, y, q)| Monomial::new([("x", x), ("y", y), ("q", q)]).unwrap())
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((small_rational(), monomial()), 0..5).prop_map(Polynomial::from_terms)
}

fn point() -> impl Strategy<Value = Assignment> {
    (small_rational(), small_rational(), small_rational().prop_filter("q nonzero", |q| !q.is_zero())).prop_map(
        |(x, y, q)| [("x".to_string(), x), ("y".to_string(), y), ("q".to_string(), q)].into_iter().collect(),
    )
}

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Polynomial::one()), a.clone());
        prop_assert!(a.mul(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in polynomial(), b in polynomial(), p in point()) {
        let (ea, eb) = (a.eval(&p).unwrap(), b.eval(&p).unwrap());
        prop_assert_eq!(a.add(&b).eval(&p).unwrap(), &ea + &eb);
        prop_assert_eq!(a.mul(&b).eval(&p).unwrap(), &ea * &eb);
        prop_assert_eq!(a.pow(3).eval(&p).unwrap(), &(&ea * &ea) * &ea);
    }

    #[test]
    fn canonical_text_round_trips(a in polynomial()) {
        let back: Polynomial = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn pascal_rule(a in -6i64..=6, k in 0i64..=6) {
        // C(x+a, k) = C(x+a-1, k) + C(x+a-1, k-1) as polynomials in x
        let p = Polynomial::var("x").unwrap().add(&Polynomial::constant(a));
        let below = p.sub(&Polynomial::one());
        prop_assert_eq!(binom(&p, k), binom(&below, k).add(&binom(&below, k - 1)));
    }

    #[test]
    fn q_pascal_rule(n in -5i64..=8, k in 0i64..=6) {
        // [n, k] = [n-1, k-1] + q^k [n-1, k]
        let lhs = gauss_binom(n, k).unwrap();
        let rhs = gauss_binom(n - 1, k - 1).unwrap().add(&Polynomial::q_power(k).mul(&gauss_binom(n - 1, k).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chu_vandermonde_on_integers(x in -8i64..=8, y in -8i64..=8, n in 0i64..=7) {
        let lhs = (0..=n).fold(Rational::zero(), |acc, k| &acc + &(&binom_int(x, k) * &binom_int(y, n - k)));
        prop_assert_eq!(lhs, binom_int(x + y, n));
    }
}

/// Normalized `p/q` from raw big integers.
fn reduce(p: BigInt, q: BigInt) -> (BigInt, BigInt) {
    let g = p.gcd(&q);
    let (mut p, mut q) = (p / &g, q / &g);
    if q < BigInt::zero() {
        p = -p;
        q = -q;
    }
    (p, q)
}

#[test]
fn rational_arithmetic_matches_integer_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x01df_049e);
    for _ in 0..10_000 {
        let mut draw = || {
            let n: i64 = rng.gen_range(-1_000_000..=1_000_000);
            let d: i64 = rng.gen_range(1..=1_000_000);
            (BigInt::from(n), BigInt::from(d))
        };
        let ((a, b), (c, d)) = (draw(), draw());
        let x = Rational::new(a.clone(), b.clone()).unwrap();
        let y = Rational::new(c.clone(), d.clone()).unwrap();

        let check = |r: Rational, (p, q): (BigInt, BigInt)| {
            assert_eq!((r.numer().clone(), r.denom().clone()), (p, q));
        };
        check(&x * &y, reduce(&a * &c, &b * &d));
        check(&x + &y, reduce(&a * &d + &c * &b, &b * &d));
        check(&x - &y, reduce(&a * &d - &c * &b, &b * &d));
        if !c.is_zero() {
            check(x.checked_div(&y).unwrap(), reduce(&a * &d, &b * &c));
        }
    }
}

#[test]
fn negative_upper_index() {
    // C(-a, k) = (-1)^k C(a+k-1, k)
    for a in -5..=5i64 {
        for k in 0..=6i64 {
            let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            assert_eq!(binom_int(-a, k), &sign * &binom_int(a + k - 1, k), "a={a} k={k}");
        }
    }
}

#[test]
fn gauss_at_one_is_binomial() {
    let at_one: Assignment = [("q".to_string(), Rational::one())].into_iter().collect();
    for alpha in -4..=6i64 {
        for k in 0..=5i64 {
            let g = gauss_binom(alpha, k).unwrap();
            assert_eq!(g.eval(&at_one).unwrap(), binom_int(alpha, k), "alpha={alpha} k={k}");
        }
    }
}

#[test]
fn composition_counts_match_binomials() {
    for n in 0..=8i64 {
        for s in 1..=5usize {
            let count = compositions(n, s).unwrap().count() as i64;
            assert_eq!(Rational::from(count), binom_int(n + s as i64 - 1, s as i64 - 1));
        }
    }
}

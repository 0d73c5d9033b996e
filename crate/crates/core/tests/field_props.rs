use edone_core::arith::{gcd, totient};
use edone_core::fields::spec::normalized_cyclotomic_index;
use edone_core::fields::{
    build_realization, ConcreteField, FieldElem, FieldSpec, FqField, Requirements,
};
use num_rational::BigRational;
use proptest::prelude::*;

const SMALL_FIELDS: [(u64, u32); 10] = [
    (2, 1),
    (2, 3),
    (2, 4),
    (3, 1),
    (3, 2),
    (5, 1),
    (5, 2),
    (7, 1),
    (7, 2),
    (13, 1),
];

fn fin_field() -> impl Strategy<Value = (u64, u32)> {
    proptest::sample::select(SMALL_FIELDS.to_vec())
}

fn number_field() -> impl Strategy<Value = ConcreteField> {
    proptest::sample::select(vec![3u64, 5, 7, 8, 12, 15]).prop_flat_map(|m| {
        prop_oneof![
            Just(ConcreteField::cyclotomic(m)),
            Just(ConcreteField::real_cyclotomic(m))
        ]
    })
}

fn nf_elem(f: &ConcreteField, raw: &[(i64, i64)]) -> FieldElem {
    let d = f.absolute_degree() as usize;
    let coeffs: Vec<BigRational> = raw
        .iter()
        .take(d)
        .map(|&(a, b)| BigRational::new(a.into(), b.max(1).into()))
        .collect();
    f.from_coeffs(&coeffs).unwrap()
}

proptest! {
    #[test]
    fn finite_field_axioms((p, k) in fin_field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = FqField::new(p, k).unwrap();
        let q = f.order() as u32;
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.pow(a, f.order() - 1), 1);
        }
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }

    #[test]
    fn number_field_axioms(f in number_field(), a in prop::collection::vec((-5i64..6, 1i64..4), 8),
                           b in prop::collection::vec((-5i64..6, 1i64..4), 8),
                           c in prop::collection::vec((-5i64..6, 1i64..4), 8)) {
        let (a, b, c) = (nf_elem(&f, &a), nf_elem(&f, &b), nf_elem(&f, &c));
        prop_assert_eq!(f.mul(&a, &f.mul(&b, &c)), f.mul(&f.mul(&a, &b), &c));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
    }

    #[test]
    fn realization_is_minimal(p in proptest::sample::select(vec![2u64, 3, 5, 7]),
                              zetas in prop::collection::vec(1u64..20, 0..2),
                              etas in prop::collection::vec(1u64..20, 0..2),
                              deg in 0u32..4) {
        let zetas: Vec<u64> = zetas.into_iter().filter(|n| n % p != 0).collect();
        let etas: Vec<u64> = etas.into_iter().filter(|n| n % p != 0).collect();
        let mut req = Requirements::new(p).fp_degree(deg);
        for &n in &zetas { req = req.zeta(n); }
        for &n in &etas { req = req.eta(n); }
        let k = req.minimal_finite_degree().unwrap();
        prop_assume!(p.checked_pow(k).is_some_and(|q| q <= 1 << 16));
        let meets = |k: u32| {
            let spec = FieldSpec::finite(p, k).unwrap();
            zetas.iter().all(|&n| spec.contains_zeta(n))
                && etas.iter().all(|&n| spec.contains_zeta_plus(n).unwrap())
                && spec.fp_degree_at_least(deg).unwrap()
        };
        prop_assert!(meets(k));
        for smaller in 1..k {
            prop_assert!(!meets(smaller), "F_{}^{} already suffices", p, smaller);
        }
        let f = build_realization(&req).unwrap();
        prop_assert_eq!(f.order(), Some(p.pow(k)));
        for &n in &zetas { prop_assert!(f.primitive_nth_root(n).is_some()); }
        for &n in &etas { prop_assert!(f.eta(n).is_some()); }
    }
}

/// `ζ_n + ζ_n⁻¹` has the same conductor as `ζ_n` once `φ(n) > 2`.
fn eta_in_cyclotomic_oracle(n: u64, m: u64) -> bool {
    totient(n) <= 2 || normalized_cyclotomic_index(m).is_multiple_of(normalized_cyclotomic_index(n))
}

#[test]
fn galois_predicates_match_conductor_oracle() {
    for m in 1..=24 {
        for n in 1..=24 {
            let cyc = FieldSpec::Cyclotomic(m);
            let real = FieldSpec::RealCyclotomic(m);
            let oracle = eta_in_cyclotomic_oracle(n, m);
            assert_eq!(cyc.contains_zeta_plus(n), Ok(oracle), "Q(zeta:{m}) eta {n}");
            assert_eq!(real.contains_zeta_plus(n), Ok(oracle), "Q(eta:{m}) eta {n}");
            assert_eq!(
                cyc.contains_zeta(n),
                normalized_cyclotomic_index(m).is_multiple_of(n),
                "Q(zeta:{m}) zeta {n}"
            );
            assert_eq!(real.contains_zeta(n), n <= 2);
        }
    }
}

#[test]
fn cyclotomic_and_eta_elements() {
    for n in 1..=60u64 {
        let f = ConcreteField::cyclotomic(n);
        let z = f.primitive_nth_root(n).unwrap();
        assert_eq!(f.mult_order(&z), Ok(n), "zeta_{n}");
        let eta = f.eta(n).unwrap();
        let zi = f.inv(&z).unwrap();
        // η is ζ^a + ζ^-a for some unit a
        let hit = (1..=n)
            .filter(|&a| gcd(a, n) == 1)
            .any(|a| f.add(&f.pow(&z, a), &f.pow(&zi, a)) == eta);
        assert!(hit, "eta_{n}");
        if totient(n) > 2 {
            let r = ConcreteField::real_cyclotomic(n);
            assert_eq!(r.absolute_degree() as u64, totient(n) / 2, "Q(eta:{n})");
            assert!(r.eta(n).is_some());
        }
    }
}

/// Brute force over `F_q` and `F_{q²}`.
#[test]
fn finite_predicates_match_brute_force() {
    for (p, k) in [
        (2u64, 1u32),
        (2, 2),
        (2, 3),
        (3, 1),
        (3, 2),
        (5, 1),
        (7, 1),
        (2, 5),
        (11, 1),
        (13, 1),
    ] {
        let big = FqField::new(p, 2 * k).unwrap();
        let q = p.pow(k);
        let spec = FieldSpec::finite(p, k).unwrap();
        for n in 1..=40u64 {
            let zeta_oracle = n % p != 0
                && big
                    .elements_lex()
                    .any(|x| x != 0 && big.mult_order(x) == Some(n) && big.in_subfield(x, k));
            assert_eq!(
                spec.contains_zeta(n),
                zeta_oracle || n == 1,
                "F_{q} zeta {n}"
            );
            if n % p == 0 {
                assert!(spec.contains_zeta_plus(n).is_err());
                continue;
            }
            // η ∈ F_q forces q ≡ ±1 (mod n), which puts ζ_n in F_{q²}
            let order = edone_core::arith::mult_order_mod(q, n).unwrap();
            let eta_oracle = if order <= 2 {
                big.elements_lex().any(|x| {
                    x != 0
                        && big.mult_order(x) == Some(n)
                        && big.in_subfield(big.add(x, big.inv(x).unwrap()), k)
                })
            } else {
                false
            };
            assert_eq!(spec.contains_zeta_plus(n), Ok(eta_oracle), "F_{q} eta {n}");
        }
    }
}

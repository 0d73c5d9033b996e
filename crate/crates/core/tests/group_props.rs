use edone_core::fields::{ConcreteField, FieldElem};
use edone_core::groups::{
    are_isomorphic, check_gnpr_presentation, close_generated, gnpr_degree_s, make_abstract,
    make_gnpr_abstract_labeled, make_gnpr_matrix, recognize_gnpr, GroupDescriptor,
};
use edone_core::mat2::{moebius_apply, pgl_order, projective_line, Mat2};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = ConcreteField> {
    proptest::sample::select(vec![
        (2u64, 1u32),
        (2, 2),
        (3, 1),
        (3, 2),
        (5, 1),
        (7, 1),
        (2, 3),
    ])
    .prop_map(|(p, k)| ConcreteField::finite(p, k).unwrap())
}

fn mat(f: &ConcreteField, raw: [u32; 4]) -> Mat2 {
    let q = f.order().unwrap() as u32;
    let [a, b, c, d] = raw.map(|x| FieldElem::Fin(x % q));
    Mat2::new(a, b, c, d)
}

proptest! {
    #[test]
    fn pgl_order_is_class_invariant(f in fields(), raw in any::<[[u32; 4]; 2]>(), s in 1u32..1000) {
        let (m, g) = (mat(&f, raw[0]), mat(&f, raw[1]));
        prop_assume!(m.is_invertible(&f) && g.is_invertible(&f));
        let q = f.order().unwrap() as u32;
        let scalar = FieldElem::Fin(1 + s % (q - 1).max(1));
        let base = pgl_order(&f, &m, 10_000).unwrap();
        prop_assert_eq!(pgl_order(&f, &m.scale(&f, &scalar), 10_000).unwrap(), base);
        let conj = g.mul(&f, &m).mul(&f, &g.inv(&f).unwrap());
        prop_assert_eq!(pgl_order(&f, &conj, 10_000).unwrap(), base);
        // the order kills m projectively and nothing smaller does
        prop_assert!(m.pow(&f, base).is_scalar(&f));
        for e in 1..base {
            prop_assert!(!m.pow(&f, e).is_scalar(&f));
        }
    }

    #[test]
    fn moebius_is_an_action(f in fields(), raw in any::<[[u32; 4]; 2]>()) {
        let (a, b) = (mat(&f, raw[0]), mat(&f, raw[1]));
        prop_assume!(a.is_invertible(&f) && b.is_invertible(&f));
        let ab = a.mul(&f, &b);
        for pt in projective_line(&f).unwrap() {
            let lhs = moebius_apply(&f, &ab, &pt).unwrap();
            let rhs = moebius_apply(&f, &a, &moebius_apply(&f, &b, &pt).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn kernel_of_action_is_scalars(f in fields(), raws in prop::collection::vec(any::<[u32; 4]>(), 1..3)) {
        let gens: Vec<Mat2> = raws.into_iter().map(|r| mat(&f, r)).filter(|m| m.is_invertible(&f)).collect();
        prop_assume!(!gens.is_empty());
        let Ok(mg) = close_generated(&f, &gens, 2000) else { return Ok(()) };
        let line = projective_line(&f).unwrap();
        let kernel: Vec<u32> = (0..mg.order() as u32)
            .filter(|&i| {
                let m = &mg.elements()[i as usize];
                line.iter().all(|pt| moebius_apply(&f, m, pt).unwrap() == *pt)
            })
            .collect();
        prop_assert_eq!(kernel, mg.scalar_members());
    }

    #[test]
    fn inverse_round_trip(f in fields(), m in any::<[u32; 4]>()) {
        let m = mat(&f, m);
        prop_assume!(m.is_invertible(&f));
        prop_assert!(m.mul(&f, &m.inv(&f).unwrap()).is_identity(&f));
    }
}

fn valid_triples(max_order: u64) -> Vec<(u64, u64, u32)> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13] {
        for n in 1..=max_order {
            let Ok(s) = gnpr_degree_s(n, p) else { continue };
            let mut r = s;
            while p
                .checked_pow(r)
                .and_then(|pr| pr.checked_mul(n))
                .is_some_and(|o| o <= max_order)
            {
                out.push((n, p, r));
                r += s;
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn gnpr_models_agree(t in proptest::sample::select(valid_triples(200))) {
        let (n, p, r) = t;
        let (g, labels) = make_gnpr_abstract_labeled(n, p, r).unwrap();
        prop_assert_eq!(g.order() as u64, n * p.pow(r));
        prop_assert!(check_gnpr_presentation(&g, &labels));
        prop_assert_eq!(recognize_gnpr(&g, p), Some((n, r)));
        // a field holding ζ_n with degree at least r
        let d = edone_core::arith::mult_order_mod(p, n).unwrap() as u32;
        let f = ConcreteField::finite(p, edone_core::arith::lcm(d as u64, r as u64) as u32).unwrap();
        let mg = make_gnpr_matrix(n, p, r, &f, &f.zero()).unwrap();
        prop_assert!(are_isomorphic(&mg.abstract_group(), &g, 512).unwrap());
        prop_assert_eq!(make_abstract(&GroupDescriptor::Gnpr { n, p, r }).unwrap().order(), g.order());
    }
}

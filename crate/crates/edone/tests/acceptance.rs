//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always reach stdout; exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use edone_core::arith::{checked_pow, gcd, is_prime, mult_order_mod, prime_power};
use edone_core::classify::{atlas, enumerate_subgroups};
use edone_core::edone::{build_certificate, decide, verify, Verdict};
use edone_core::fields::{ConcreteField, FieldElem, FieldSpec, FqField, Requirements};
use edone_core::groups::{
    are_isomorphic, check_gnpr_presentation, close_generated, find_unipotent_elem_abelian,
    make_abstract, make_gnpr_abstract_labeled, make_gnpr_matrix_labeled, recognize_gnpr,
    FiniteGroup, GroupDescriptor,
};
use edone_core::mat2::{pgl_order, projective_trace_invariant, Mat2};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verdict(field: &str, d: GroupDescriptor) -> Result<Verdict, String> {
    let spec = edone::parse_field_spec(field).map_err(|e| e.to_string())?;
    decide(&spec, &d).map_err(|e| format!("{field} {d}: {e}"))
}

fn expect_verdicts(cases: &[(&str, GroupDescriptor, &str)]) -> Outcome {
    for &(field, d, want) in cases {
        let got = verdict(field, d)?;
        ensure(got.name() == want, || {
            format!("{field} {d}: expected {want}, got {got}")
        })?;
    }
    Ok(format!("{} verdicts match", cases.len()))
}

fn a4_a5_over_f2_f4() -> Outcome {
    use GroupDescriptor::{Alt4, Alt5};
    expect_verdicts(&[
        ("F:2", Alt4, "EdAtLeastTwo"),
        ("F:4", Alt4, "EdOne"),
        ("F:2", Alt5, "EdAtLeastTwo"),
        ("F:4", Alt5, "EdOne"),
    ])
}

fn small_cyclic_applications() -> Outcome {
    use GroupDescriptor::Cyclic;
    expect_verdicts(&[
        ("Q", Cyclic(4), "EdAtLeastTwo"),
        ("Q(zeta:4)", Cyclic(4), "EdOne"),
        ("F:2", Cyclic(4), "EdAtLeastTwo"),
        ("Q", Cyclic(5), "EdAtLeastTwo"),
        ("Q", Cyclic(6), "EdAtLeastTwo"),
    ])
}

fn algebraically_closed_char_zero() -> Outcome {
    let mut count = 0;
    for n in 2..=30 {
        let v = verdict("closure:0", GroupDescriptor::Cyclic(n))?;
        ensure(v.is_ed_one(), || format!("C:{n}: {v}"))?;
        count += 1;
    }
    for m in 1..=15 {
        let v = verdict("closure:0", GroupDescriptor::Dihedral(m))?;
        ensure(v.is_ed_one() == (m % 2 == 1), || format!("D:{m}: {v}"))?;
        count += 1;
    }
    Ok(format!("{count} verdicts match"))
}

fn certify_and_verify(spec: &FieldSpec, d: GroupDescriptor) -> Result<bool, String> {
    match decide(spec, &d).map_err(|e| format!("{spec} {d}: {e}"))? {
        Verdict::EdOne(pos) => {
            let cert = build_certificate(&pos).map_err(|e| format!("{spec} {d}: {e}"))?;
            let report = verify(&cert).map_err(|e| format!("{spec} {d}: {e}"))?;
            ensure(report.all_ok(), || format!("{spec} {d}: {report:?}"))?;
            Ok(true)
        }
        _ => Ok(false),
    }
}

/// The first of `Q`, `Q(ζ_n)⁺`, `Q(ζ_n)` over which the verdict is positive.
fn minimal_char_zero_field(d: GroupDescriptor, n: u64) -> Result<Option<FieldSpec>, String> {
    let candidates = [
        FieldSpec::Rational,
        FieldSpec::real_cyclotomic(n).unwrap(),
        FieldSpec::cyclotomic(n).unwrap(),
    ];
    for spec in candidates {
        if decide(&spec, &d).map_err(|e| e.to_string())?.is_ed_one() {
            return Ok(Some(spec));
        }
    }
    Ok(None)
}

fn certificate_soundness() -> Outcome {
    let mut certified = 0;
    // C:1 is trivial, so its verdict is EdZero
    for n in 2..=30 {
        let d = GroupDescriptor::Cyclic(n);
        let spec = minimal_char_zero_field(d, n)?.ok_or(format!("C:{n} never positive"))?;
        certified += certify_and_verify(&spec, d)? as usize;
    }
    for n in (1..=15).step_by(2) {
        let d = GroupDescriptor::Dihedral(n);
        let spec = minimal_char_zero_field(d, n)?.ok_or(format!("D:{n} never positive"))?;
        certified += certify_and_verify(&spec, d)? as usize;
    }
    let mut gnpr = 0;
    for p in [2u64, 3, 5] {
        for r in 1u32.. {
            let Some(pr) = checked_pow(p, r).filter(|&pr| pr <= 2000) else {
                break;
            };
            for n in 1..=2000 / pr {
                let d = GroupDescriptor::Gnpr { n, p, r };
                if d.validate().is_err() {
                    continue;
                }
                let k = Requirements::new(p)
                    .zeta(n)
                    .fp_degree(r)
                    .minimal_finite_degree()
                    .map_err(|e| e.to_string())?;
                let spec = FieldSpec::finite(p, k).map_err(|e| e.to_string())?;
                let positive = certify_and_verify(&spec, d)?;
                ensure(positive == (n % 2 == 1), || {
                    format!("{d} over {spec}: unexpected verdict")
                })?;
                certified += positive as usize;
                gnpr += positive as usize;
            }
        }
    }
    for q in [2u64, 4, 8] {
        let d = GroupDescriptor::SL2(q);
        for field in [format!("F:{q}"), "closure:2".to_string()] {
            let spec = edone::parse_field_spec(&field).map_err(|e| e.to_string())?;
            ensure(certify_and_verify(&spec, d)?, || {
                format!("{d} over {field} not positive")
            })?;
            certified += 1;
        }
    }
    Ok(format!(
        "{certified} certificates verified ({gnpr} of type G(n,p^r))"
    ))
}

/// Subgroups generated by at most two elements, grouped into conjugacy
/// classes; returns `(order, class size)` per class.
fn brute_force_classes(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let n = g.order() as u32;
    let mut subgroups: BTreeSet<Vec<u32>> = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            subgroups.insert(g.generated(&[a, b]).iter().collect());
        }
    }
    let mut classes: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for s in &subgroups {
        let canonical = (0..n)
            .map(|x| {
                let mut c: Vec<u32> = s.iter().map(|&y| g.conj(x, y)).collect();
                c.sort_unstable();
                c
            })
            .min()
            .unwrap();
        *classes.entry(canonical).or_default() += 1;
    }
    let mut out: Vec<(usize, usize)> = classes.iter().map(|(k, &c)| (k.len(), c)).collect();
    out.sort_unstable();
    out
}

fn dickson_atlas() -> Outcome {
    let mut summary = Vec::new();
    for (q, expected) in [(2u64, Some(4)), (3, Some(7)), (4, Some(9)), (5, None)] {
        let a = atlas(q, 1024).map_err(|e| format!("q={q}: {e}"))?;
        let (sl2, classes) = enumerate_subgroups(q, 1024).map_err(|e| e.to_string())?;
        let mut ours: Vec<(usize, usize)> =
            classes.iter().map(|c| (c.order, c.conjugates)).collect();
        ours.sort_unstable();
        let oracle = brute_force_classes(&sl2.abstract_group());
        ensure(ours == oracle, || {
            format!("q={q}: classes {ours:?} vs oracle {oracle:?}")
        })?;
        ensure(a.classes.len() == oracle.len(), || {
            format!("q={q}: atlas has {} classes", a.classes.len())
        })?;
        if let Some(e) = expected {
            ensure(oracle.len() == e, || {
                format!("q={q}: {} classes, expected {e}", oracle.len())
            })?;
        }
        summary.push(format!("q={q}:{}", oracle.len()));
    }
    Ok(format!("class counts {}", summary.join(" ")))
}

/// Representatives of `PGL2(F_q)`.
fn pgl2_elements(f: &ConcreteField) -> Vec<Mat2> {
    let elems = f.elements().unwrap();
    let mut reps = BTreeSet::new();
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    let m = Mat2::new(a.clone(), b.clone(), c.clone(), d.clone());
                    if m.is_invertible(f) {
                        reps.insert(m.projective_normal_form(f));
                    }
                }
            }
        }
    }
    reps.into_iter().collect()
}

fn pgl2_sweeps() -> Outcome {
    let mut total = 0;
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let (p, k) = prime_power(q).unwrap();
        let f = ConcreteField::finite(p, k).unwrap();
        let small = f.as_finite().unwrap();
        let big = FqField::new(p, 2 * k).unwrap();
        let embed = small.embedding_into(&big).unwrap();
        let elems = pgl2_elements(&f);
        ensure(elems.len() as u64 == q * (q * q - 1), || {
            format!("q={q}: |PGL2| = {}", elems.len())
        })?;
        for m in &elems {
            let n = pgl_order(&f, m, 1000).map_err(|e| e.to_string())?;
            ensure(gcd(n, p) == 1 || n == p, || {
                format!("q={q}: order {n} for {}", m.display(&f))
            })?;
            if n % p == 0 {
                continue;
            }
            let FieldElem::Fin(inv) = projective_trace_invariant(&f, m).unwrap() else {
                unreachable!()
            };
            let target = big.sub(embed[inv as usize], big.from_int(2));
            let zeta = big
                .primitive_root_of_unity(n)
                .ok_or(format!("q={q}: no ζ_{n} in F_{{q^2}}"))?;
            let hit = (1..=n).filter(|&a| gcd(a, n) == 1).any(|a| {
                let z = big.pow(zeta, a);
                big.add(z, big.inv(z).unwrap()) == target
            });
            ensure(hit, || {
                format!(
                    "q={q}: invariant of {} is not ζ+ζ⁻¹+2 for n={n}",
                    m.display(&f)
                )
            })?;
        }
        total += elems.len();
    }
    Ok(format!("{total} elements checked"))
}

fn unipotent_embeddings() -> Outcome {
    let mut cases = 0;
    for p in (2u64..=16).filter(|&p| is_prime(p)) {
        for r in (1u32..).take_while(|&r| p.pow(r) <= 16) {
            for k in (1u32..).take_while(|&k| p.pow(k) <= 64) {
                let f = ConcreteField::finite(p, k).unwrap();
                let found = find_unipotent_elem_abelian(&f, r).map_err(|e| e.to_string())?;
                ensure(found.is_some() == (r <= k), || {
                    format!("(Z/{p})^{r} into PGL2(F_{}): {found:?}", p.pow(k))
                })?;
                if let Some(gens) = found {
                    let mg = close_generated(&f, &gens, 1 << 12).map_err(|e| e.to_string())?;
                    let g = mg.abstract_group();
                    ensure(
                        mg.order() as u64 == p.pow(r)
                            && g.is_abelian()
                            && g.elements().skip(1).all(|x| g.elem_order(x) == p)
                            && mg.scalar_members() == vec![0],
                        || format!("(Z/{p})^{r} in F_{}: bad witness", p.pow(k)),
                    )?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (p^r, q) pairs"))
}

fn zeta_q_plus_one_over_f2() -> Outcome {
    for r in 1u32..=6 {
        let q = 1u64 << r;
        let f = FqField::new(2, 2 * r).unwrap();
        let zeta = f
            .primitive_root_of_unity(q + 1)
            .ok_or(format!("no ζ_{}", q + 1))?;
        let eta = f.add(zeta, f.inv(zeta).unwrap());
        ensure(f.mult_order(zeta) == Some(q + 1), || {
            format!("q={q}: order of ζ")
        })?;
        ensure(mult_order_mod(2, q + 1) == Some(2 * r as u64), || {
            format!("q={q}: ord_(q+1)(2)")
        })?;
        ensure(f.element_degree(zeta) == 2 * r, || {
            format!("q={q}: [F2(ζ):F2] = {}", f.element_degree(zeta))
        })?;
        ensure(f.in_subfield(eta, r) && f.element_degree(eta) == r, || {
            format!("q={q}: F2(η) ≠ F_q")
        })?;
    }
    Ok("q = 2..64: degree 2r, F2(η) = F_q".into())
}

fn gnpr_coherence() -> Outcome {
    let mut triples = 0;
    for p in (2u64..=512).filter(|&p| is_prime(p)) {
        for r in (1u32..).take_while(|&r| checked_pow(p, r).is_some_and(|x| x <= 512)) {
            for n in 1..=512 / p.pow(r) {
                let d = GroupDescriptor::Gnpr { n, p, r };
                if d.validate().is_err() {
                    continue;
                }
                let order = (n * p.pow(r)) as usize;
                let err = |what: &str| format!("{d}: {what}");
                let (g, labels) =
                    make_gnpr_abstract_labeled(n, p, r).map_err(|e| err(&e.to_string()))?;
                ensure(
                    g.order() == order && check_gnpr_presentation(&g, &labels),
                    || err("abstract presentation"),
                )?;
                ensure(recognize_gnpr(&g, p) == Some((n, r)), || {
                    err("recognition of abstract model")
                })?;
                ensure(
                    make_abstract(&d).map_err(|e| e.to_string())?.order() == order,
                    || err("catalog order"),
                )?;

                let k = edone_core::arith::lcm(mult_order_mod(p, n).unwrap(), r as u64) as u32;
                let f = ConcreteField::finite(p, k).map_err(|e| err(&e.to_string()))?;
                let a_values: Vec<FieldElem> = if n <= 2 {
                    vec![f.zero()]
                } else {
                    f.elements().unwrap().into_iter().take(4).collect()
                };
                for a in &a_values {
                    let (mg, ml) = make_gnpr_matrix_labeled(n, p, r, &f, a, order)
                        .map_err(|e| err(&e.to_string()))?;
                    let h = mg.abstract_group();
                    ensure(
                        mg.order() == order && check_gnpr_presentation(&h, &ml),
                        || err("matrix presentation"),
                    )?;
                    ensure(recognize_gnpr(&h, p) == Some((n, r)), || {
                        err("recognition of matrix model")
                    })?;
                    ensure(
                        are_isomorphic(&g, &h, 1 << 20).map_err(|e| e.to_string())?,
                        || {
                            err(&format!(
                                "matrix model with a = {} not isomorphic",
                                f.format_elem(a)
                            ))
                        },
                    )?;
                }
                triples += 1;
            }
        }
    }
    Ok(format!("{triples} parameter triples"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "A4, A5 over F2 and F4",
            limit: Duration::from_secs(1),
            run: a4_a5_over_f2_f4,
        },
        Criterion {
            id: 2,
            name: "C4, C5, C6 over Q, Q(i), F2",
            limit: Duration::from_secs(1),
            run: small_cyclic_applications,
        },
        Criterion {
            id: 3,
            name: "cyclic and dihedral over closure:0",
            limit: Duration::from_secs(5),
            run: algebraically_closed_char_zero,
        },
        Criterion {
            id: 4,
            name: "certificate soundness sweep",
            limit: Duration::from_secs(120),
            run: certificate_soundness,
        },
        Criterion {
            id: 5,
            name: "SL2(F_q) subgroup atlas, q <= 5",
            limit: Duration::from_secs(180),
            run: dickson_atlas,
        },
        Criterion {
            id: 6,
            name: "PGL2(F_q) order and trace sweeps",
            limit: Duration::from_secs(60),
            run: pgl2_sweeps,
        },
        Criterion {
            id: 7,
            name: "(Z/p)^r embedding search",
            limit: Duration::from_secs(120),
            run: unipotent_embeddings,
        },
        Criterion {
            id: 8,
            name: "zeta_(q+1) over F2",
            limit: Duration::from_secs(10),
            run: zeta_q_plus_one_over_f2,
        },
        Criterion {
            id: 9,
            name: "G(n,p^r) model coherence",
            limit: Duration::from_secs(60),
            run: gnpr_coherence,
        },
    ];
    let only: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for c in criteria
        .iter()
        .filter(|c| only.is_empty() || only.contains(&c.id))
    {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        failed += !ok as u32;
        println!(
            "criterion {} {}: {} ({:.2}s of {}s) {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}

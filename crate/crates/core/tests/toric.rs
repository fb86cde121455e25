use std::sync::Arc;

use proptest::prelude::*;

use symlab::catalog;
use symlab::containment::{hh_scan, lemma_equiv_check, ustp_scan, check_containment, ContainmentQuery, Target};
use symlab::{Cone, FacePrime, LatticePoint, Limits, PolyMonomialIdeal, SemigroupRing, Status, SumPrime, TensorRing, VariablePrime};

fn ring(c: Cone) -> Arc<SemigroupRing> {
    Arc::new(SemigroupRing::new(c, Limits::default()).unwrap())
}

fn catalog_rings() -> Vec<Arc<SemigroupRing>> {
    vec![
        ring(catalog::a1()),
        ring(catalog::whitney(3).unwrap()),
        ring(catalog::quadric()),
        ring(catalog::quadrant(3).unwrap()),
    ]
}

/// `b ∈ P^n` by peeling off one generator at a time; knows nothing of facets beyond cone membership.
fn naive_power(p: &FacePrime, b: &LatticePoint, n: u32) -> bool {
    if n == 0 {
        return p.ring().cone().contains(b);
    }
    p.gens().iter().any(|g| {
        let rest = b.sub(g);
        p.ring().cone().contains(&rest) && naive_power(p, &rest, n - 1)
    })
}

/// `b ∈ P^(n)` as `∃ u` on the face with `u b ∈ P^n`, trying `u` up to degree `u_max`.
fn naive_saturation(p: &FacePrime, b: &LatticePoint, n: u32, u_max: i64) -> bool {
    let ring = p.ring();
    ring.points_upto(u_max)
        .unwrap()
        .into_iter()
        .filter(|u| !p.contains_monomial(u))
        .any(|u| naive_power(p, &b.add(&u), n))
}

#[test]
fn ordinary_powers_sit_inside_symbolic_powers() {
    for r in catalog_rings() {
        let pts = r.points_upto(8).unwrap();
        for p in FacePrime::all(&r) {
            for b in &pts {
                let ord = p.symbolic_order(b).unwrap();
                for n in 0..=4 {
                    let sym = p.symbolic_power_member(b, n).unwrap();
                    assert_eq!(sym, ord >= n, "{b} order {ord} n {n}");
                    if p.ordinary_power_member(b, n).unwrap() {
                        assert!(sym, "{b} ∈ P^{n} but not P^({n})");
                    }
                }
                assert_eq!(p.contains_monomial(b), ord >= 1);
            }
        }
    }
}

#[test]
fn ordinary_oracle_matches_naive_peeling() {
    for r in catalog_rings() {
        let pts = r.points_upto(6).unwrap();
        for p in FacePrime::all(&r) {
            for b in &pts {
                for n in 0..=3 {
                    assert_eq!(p.ordinary_power_member(b, n).unwrap(), naive_power(&p, b, n), "{b} n={n}");
                }
            }
        }
    }
}

#[test]
fn symbolic_oracle_matches_saturation_on_a1_and_quadric() {
    for (r, d, u_max) in [(ring(catalog::a1()), 10, 16), (ring(catalog::quadric()), 6, 8)] {
        let pts = r.points_upto(d).unwrap();
        for p in FacePrime::all(&r) {
            for b in &pts {
                for n in 1..=3 {
                    assert_eq!(
                        p.symbolic_power_member(b, n).unwrap(),
                        naive_saturation(&p, b, n, u_max),
                        "{b} n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn height_one_primes_are_valuations() {
    for r in catalog_rings() {
        let pts = r.points_upto(6).unwrap();
        for p in FacePrime::all(&r).into_iter().filter(|p| p.height() == 1) {
            for b in &pts {
                for n in 0..=5 {
                    assert_eq!(p.valuation_member(b, n).unwrap(), p.symbolic_power_member(b, n).unwrap());
                }
            }
        }
    }
}

#[test]
fn quadrant_primes_have_no_gap() {
    let r = ring(catalog::quadrant(3).unwrap());
    for p in FacePrime::all(&r) {
        let support: Vec<usize> = (0..3)
            .filter(|&i| p.gens().contains(&LatticePoint::unit(3, i)))
            .collect();
        let poly = VariablePrime::new(support).unwrap().ideal(3);
        for b in r.points_upto(6).unwrap() {
            for n in 1..=4 {
                let sym = p.symbolic_power_member(&b, n).unwrap();
                assert_eq!(sym, p.ordinary_power_member(&b, n).unwrap());
                assert_eq!(sym, poly.power(n).member(&b).unwrap());
            }
        }
    }
}

#[test]
fn symbolic_orders_are_superadditive() {
    for r in catalog_rings() {
        let pts = r.points_upto(4).unwrap();
        for p in FacePrime::all(&r) {
            for b in &pts {
                for c in &pts {
                    let sum = p.symbolic_order(&b.add(c)).unwrap();
                    assert!(sum >= p.symbolic_order(b).unwrap() + p.symbolic_order(c).unwrap());
                }
            }
        }
    }
}

#[test]
fn flat_extension_preserves_symbolic_powers() {
    let a1 = ring(catalog::a1());
    for other in [ring(catalog::quadrant(1).unwrap()), ring(catalog::a1())] {
        for (first, ordering) in [(true, vec![Arc::clone(&a1), Arc::clone(&other)]), (false, vec![Arc::clone(&other), Arc::clone(&a1)])] {
            let t = TensorRing::new(ordering, Limits::default()).unwrap();
            let slot = if first { 0 } else { 1 };
            for p in FacePrime::all(&a1) {
                let e = t.expand(&p, slot).unwrap();
                assert_eq!(e.height(), p.height());
                for b in t.product().points_upto(6).unwrap() {
                    let blk = t.block(&b, slot).unwrap();
                    for n in 0..=3 {
                        assert_eq!(
                            e.symbolic_power_member(&b, n).unwrap(),
                            p.symbolic_power_member(&blk, n).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn sum_primes_are_invariant_under_factor_swap() {
    let a1 = ring(catalog::a1());
    let q2 = ring(catalog::quadrant(2).unwrap());
    let ab = Arc::new(TensorRing::new(vec![Arc::clone(&a1), Arc::clone(&q2)], Limits::default()).unwrap());
    let ba = Arc::new(TensorRing::new(vec![Arc::clone(&q2), Arc::clone(&a1)], Limits::default()).unwrap());
    for p in FacePrime::all(&a1) {
        for q in FacePrime::all(&q2) {
            let s = SumPrime::new(Arc::clone(&ab), vec![p.clone(), q.clone()]).unwrap();
            let t = SumPrime::new(Arc::clone(&ba), vec![q.clone(), p.clone()]).unwrap();
            assert_eq!(s.height(), p.height() + q.height());
            assert_eq!(s.height(), t.height());
            for b in ab.product().points_upto(5).unwrap() {
                let swapped = LatticePoint::new(
                    b.coords()[2..].iter().chain(&b.coords()[..2]).copied().collect(),
                );
                for n in 0..=3 {
                    let x = s.rhs_member(&b, n).unwrap();
                    assert_eq!(x, t.rhs_member(&swapped, n).unwrap());
                    assert_eq!(
                        s.as_face_prime().symbolic_power_member(&b, n).unwrap(),
                        t.as_face_prime().symbolic_power_member(&swapped, n).unwrap()
                    );
                    if n > 0 && x {
                        assert!(s.rhs_member(&b, n - 1).unwrap());
                    }
                }
            }
        }
    }
}

fn a1_prime() -> FacePrime {
    FacePrime::from_normals(ring(catalog::a1()), &[0]).unwrap()
}

#[test]
fn a1_lemma_examples() {
    let t = Target::Face(a1_prime());
    let rep = lemma_equiv_check(&t, 2, 8, 4, 8).unwrap();
    assert_eq!((rep.a_holds, rep.b_holds, rep.window_artifact), (Some(true), Some(true), false));
    let rep = lemma_equiv_check(&t, 1, 8, 4, 8).unwrap();
    assert_eq!((rep.a_holds, rep.b_holds, rep.window_artifact), (Some(false), Some(false), false));
    let z = LatticePoint::new(vec![1, 2]);
    assert!(rep.a_verdicts.iter().any(|v| v.status == Status::Counterexample(z.clone())));
    assert_eq!(rep.b_verdicts[1].status, Status::Counterexample(z));
}

#[test]
fn verdicts_re_verify_against_the_oracles() {
    for r in catalog_rings() {
        for p in FacePrime::all(&r) {
            let target = Target::Face(p.clone());
            for (a, rr) in [(1, 1), (2, 2), (3, 2), (2, 1), (4, 3)] {
                let v = check_containment(&ContainmentQuery {
                    target: &target,
                    symbolic_exponent: a,
                    ordinary_exponent: rr,
                    degree_bound: 6,
                })
                .unwrap();
                match &v.status {
                    Status::Counterexample(b) => {
                        assert!(p.symbolic_power_member(b, a).unwrap());
                        assert!(!p.ordinary_power_member(b, rr).unwrap());
                        // no smaller window can hide the witness, and larger ones keep it
                        let deg = r.degree(b);
                        for d in [deg, deg + 2] {
                            let again = check_containment(&ContainmentQuery {
                                target: &target,
                                symbolic_exponent: a,
                                ordinary_exponent: rr,
                                degree_bound: d,
                            })
                            .unwrap();
                            assert_eq!(again.status, v.status);
                        }
                    }
                    Status::VerifiedUpToDegree(6) => {
                        for d in 0..6 {
                            let smaller = check_containment(&ContainmentQuery {
                                target: &target,
                                symbolic_exponent: a,
                                ordinary_exponent: rr,
                                degree_bound: d,
                            })
                            .unwrap();
                            assert_eq!(smaller.status, Status::VerifiedUpToDegree(d));
                        }
                    }
                    other => panic!("unexpected {other:?}"),
                }
            }
        }
    }
}

#[test]
fn hh_success_implies_uniform_success() {
    for r in catalog_rings() {
        for p in FacePrime::all(&r) {
            let t = Target::Face(p);
            for e in 1..=3 {
                let hh = hh_scan(&t, e, 3, 6).unwrap();
                let us = ustp_scan(&t, e, 3, 6).unwrap();
                for (h, u) in hh.iter().zip(&us) {
                    if h.status.holds() {
                        assert!(u.status.holds());
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn squarefree_containment_chain(masks in prop::collection::vec(1u32..16, 1..=5), a in 1u32..=6, r in 1u32..=3) {
        let gens = masks
            .into_iter()
            .map(|m| LatticePoint::new((0..4).map(|i| i64::from(m >> i & 1)).collect()))
            .collect();
        let i = PolyMonomialIdeal::minimalize(4, gens).unwrap();
        let t = Target::Squarefree(i.clone());
        let q = |a, r| check_containment(&ContainmentQuery { target: &t, symbolic_exponent: a, ordinary_exponent: r, degree_bound: 0 }).unwrap().status;
        let here = q(a, r);
        if here.holds() {
            prop_assert!(q(a + 1, r).holds());
            if r > 1 {
                prop_assert!(q(a, r - 1).holds());
            }
        }
        if let Status::Counterexample(g) = &here {
            prop_assert!(i.symbolic_power(a).unwrap().member(g).unwrap());
            prop_assert!(!i.power(r).member(g).unwrap());
        }
        // big height bound always holds
        let h = i.big_height().unwrap() as u32;
        prop_assert_eq!(q(h * (r - 1) + 1, r), Status::ExactContained);
    }
}

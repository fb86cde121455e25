use proptest::prelude::*;
use std::collections::BTreeSet;

use symlab::catalog;
use symlab::lattice::{enumerate_points, faces_all, hilbert_basis, certified_degree_bound, Cone, Face};
use symlab::linalg::rank;
use symlab::LatticePoint;

fn lp(v: &[i64]) -> LatticePoint {
    LatticePoint::new(v.to_vec())
}

/// Pointed cones in dimension 2 or 3 from a few small generators with a positive last coordinate.
fn small_cone() -> impl Strategy<Value = Cone> {
    prop_oneof![
        prop::collection::vec((-3i64..=3, 1i64..=3), 2..=4).prop_map(|v| v
            .into_iter()
            .map(|(a, b)| vec![a, b])
            .collect::<Vec<_>>()),
        prop::collection::vec((-2i64..=2, -2i64..=2, 1i64..=2), 3..=5).prop_map(|v| v
            .into_iter()
            .map(|(a, b, c)| vec![a, b, c])
            .collect::<Vec<_>>()),
    ]
    .prop_filter_map("not full dimensional", |rays| Cone::from_rays(rays, 4).ok())
}

/// Every lattice point of degree ≤ d reachable as a sum of basis elements, by dynamic programming.
fn generated(points: &[LatticePoint], basis: &[LatticePoint]) -> bool {
    let mut reach: BTreeSet<LatticePoint> = BTreeSet::new();
    for p in points {
        if p.is_zero() || basis.iter().any(|h| reach.contains(&p.sub(h)) || p.sub(h).is_zero()) {
            reach.insert(p.clone());
        } else {
            return false;
        }
    }
    true
}

#[test]
fn catalog_hilbert_bases() {
    let a1 = catalog::a1();
    let w = a1.default_weight();
    let hb = hilbert_basis(&a1, &w, certified_degree_bound(&a1, &w), 10_000).unwrap();
    assert!(hb.complete);
    assert_eq!(hb.elements, vec![lp(&[1, 0]), lp(&[1, 1]), lp(&[1, 2])]);

    let q = catalog::quadric();
    let w = q.default_weight();
    let hb = hilbert_basis(&q, &w, certified_degree_bound(&q, &w), 10_000).unwrap();
    let mut rays = q.rays().to_vec();
    rays.sort();
    let mut got = hb.elements.clone();
    got.sort();
    assert_eq!(got, rays);

    for m in 1..=4 {
        let c = catalog::quadrant(m).unwrap();
        let w = c.default_weight();
        let hb = hilbert_basis(&c, &w, certified_degree_bound(&c, &w), 10_000).unwrap();
        let mut got = hb.elements.clone();
        got.sort();
        let mut units: Vec<_> = (0..m).map(|i| LatticePoint::unit(m, i)).collect();
        units.sort();
        assert_eq!(got, units);
    }
}

#[test]
fn whitney_basis_is_the_segment() {
    for k in 1..=5 {
        let c = catalog::whitney(k).unwrap();
        let w = c.default_weight();
        let hb = hilbert_basis(&c, &w, certified_degree_bound(&c, &w), 10_000).unwrap();
        let expected: Vec<_> = (0..=k).map(|j| lp(&[1, j])).collect();
        let mut got = hb.elements.clone();
        got.sort();
        assert_eq!(got, expected, "k = {k}");
    }
}

#[test]
fn quadric_faces_match_the_square_pyramid() {
    let q = catalog::quadric();
    let faces = faces_all(&q);
    let mut by_dim = [0usize; 4];
    for f in &faces {
        by_dim[f.dim()] += 1;
    }
    assert_eq!(by_dim, [1, 4, 4, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_of_dual_is_identity(cone in small_cone()) {
        let normals: Vec<Vec<i64>> = cone.facet_normals().iter().map(|n| n.coords().to_vec()).collect();
        let dual = Cone::from_rays(normals, 4).unwrap();
        prop_assert_eq!(dual.facet_normals(), cone.rays());
        let back: Vec<Vec<i64>> = dual.facet_normals().iter().map(|n| n.coords().to_vec()).collect();
        let again = Cone::from_rays(back, 4).unwrap();
        prop_assert_eq!(&again, &cone);
    }

    #[test]
    fn double_description_validates(cone in small_cone()) {
        let rays = cone.rays().iter().map(|r| r.coords().to_vec()).collect();
        let normals = cone.facet_normals().iter().map(|n| n.coords().to_vec()).collect();
        prop_assert_eq!(Cone::new(rays, normals).unwrap(), cone);
    }

    #[test]
    fn hilbert_basis_generates_and_is_minimal(cone in small_cone()) {
        let w = cone.default_weight();
        let bound = certified_degree_bound(&cone, &w);
        let hb = hilbert_basis(&cone, &w, bound, 200_000).unwrap();
        prop_assert!(hb.complete);
        // A larger cap finds nothing new.
        let wider = hilbert_basis(&cone, &w, bound + 2, 400_000).unwrap();
        prop_assert_eq!(&wider.elements, &hb.elements);
        // Every ray is a basis element.
        for r in cone.rays() {
            prop_assert!(hb.elements.contains(r));
        }
        let pts = enumerate_points(&cone, &w, bound, 200_000).unwrap();
        prop_assert!(generated(&pts, &hb.elements));
        for h in &hb.elements {
            let hd = h.pairing(w.coords());
            let split = pts.iter().any(|q| {
                !q.is_zero() && q.pairing(w.coords()) < hd && cone.contains(&h.sub(q))
            });
            prop_assert!(!split, "{} decomposes", h);
        }
    }

    #[test]
    fn enumeration_is_exact_on_a_box(cone in small_cone(), d in 0i64..6) {
        let w = cone.default_weight();
        let pts = enumerate_points(&cone, &w, d, 200_000).unwrap();
        let m = cone.dim();
        // Rays have entries of size ≤ 3 and degree ≥ 1, so a point of degree ≤ 5 has entries ≤ 15.
        let span = 16i64;
        let mut brute = Vec::new();
        let mut cur = vec![-span; m];
        loop {
            let p = LatticePoint::new(cur.clone());
            if cone.contains(&p) && p.pairing(w.coords()) <= d {
                brute.push(p);
            }
            let mut i = 0;
            while i < m {
                cur[i] += 1;
                if cur[i] <= span { break; }
                cur[i] = -span;
                i += 1;
            }
            if i == m { break; }
        }
        let mut sorted = pts.clone();
        sorted.sort();
        brute.sort();
        prop_assert_eq!(sorted, brute);
        for pair in pts.windows(2) {
            let (a, b) = (pair[0].pairing(w.coords()), pair[1].pairing(w.coords()));
            prop_assert!(a < b || (a == b && pair[0] < pair[1]));
        }
    }

    #[test]
    fn faces_are_canonical(cone in small_cone()) {
        let faces = faces_all(&cone);
        let k = cone.facet_normals().len();
        // Euler characteristic of the face lattice of a pointed cone is zero.
        let euler: i64 = faces.iter().map(|f| if f.dim() % 2 == 0 { 1 } else { -1 }).sum();
        prop_assert_eq!(euler, 0);
        prop_assert_eq!(faces.iter().filter(|f| f.dim() + 1 == cone.dim()).count(), k);
        prop_assert_eq!(faces.iter().filter(|f| f.dim() == 1).count(), cone.rays().len());
        for f in &faces {
            prop_assert_eq!(&Face::from_normals(&cone, f.normal_indices()).unwrap(), f);
            let x = f.interior_point(&cone);
            let tight: Vec<usize> = (0..k)
                .filter(|&i| x.pairing(cone.facet_normals()[i].coords()) == 0)
                .collect();
            prop_assert_eq!(tight.as_slice(), f.normal_indices());
            let rays: Vec<&[i64]> = f.ray_indices().iter().map(|&r| cone.rays()[r].coords()).collect();
            prop_assert_eq!(rank(&rays), f.dim());
        }
        for mask in 0u32..(1 << k.min(6)) {
            let idx: Vec<usize> = (0..k.min(6)).filter(|i| mask >> i & 1 == 1).collect();
            let f = Face::from_normals(&cone, &idx).unwrap();
            prop_assert!(faces.contains(&f));
        }
    }
}

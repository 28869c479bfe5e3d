use std::collections::HashSet;

use tridom::embedding::{check_skeletal, plane_code, sphere_code};
use tridom::generators::{
    edge_rooted, family, is_sporadic, is_two_connected, k4, min_degree, near_triangulations,
    octahedron, plane_triangulations, polygon_triangulations, random_polygon_triangulation,
    random_triangulation, skeletal_graphs, sphere_triangulations, sporadic, vertex_rooted,
    FamilyKind, FamilySpec, Sporadic,
};
use tridom::oracle::{domination_number, outerplanar};
use tridom::penalty::phi_half;

#[test]
fn sphere_triangulation_counts() {
    let counts: Vec<usize> = (4..=9).map(|n| sphere_triangulations(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 5, 14, 50]);
    for g in sphere_triangulations(8) {
        assert_eq!(g.m(), 3 * 8 - 6);
    }
}

#[test]
fn plane_triangulations_have_triangular_outer_faces() {
    for n in 4..=8 {
        let gs = plane_triangulations(n);
        let codes: HashSet<_> = gs.iter().map(plane_code).collect();
        assert_eq!(codes.len(), gs.len(), "duplicates at n = {n}");
        for g in &gs {
            assert_eq!(g.m(), 3 * n - 6);
            assert_eq!(g.outer_face().len(), 3);
        }
        // every sphere triangulation shows up
        let spheres: HashSet<_> = gs.iter().map(sphere_code).collect();
        assert_eq!(spheres.len(), sphere_triangulations(n).len());
    }
}

#[test]
fn polygon_triangulations_are_labelled_catalan() {
    let counts: Vec<usize> = (3..=9).map(|n| polygon_triangulations(n).len()).collect();
    assert_eq!(counts, [1, 2, 5, 14, 42, 132, 429]);
    for g in polygon_triangulations(8) {
        assert!(outerplanar::applies(&g));
        assert_eq!(g.m(), 2 * 8 - 3);
    }
}

#[test]
fn near_triangulations_are_two_connected() {
    for g in near_triangulations(7) {
        assert!(is_two_connected(&g));
        assert!(check_skeletal(&g, None));
    }
}

#[test]
fn skeletal_corpus_is_skeletal() {
    let gs = skeletal_graphs(7);
    assert_eq!(gs.len(), 112);
    let codes: HashSet<_> = gs.iter().map(plane_code).collect();
    assert_eq!(codes.len(), gs.len());
    for g in &gs {
        assert!(check_skeletal(g, None));
        assert!(min_degree(g) >= 2);
    }
    // graphs with cut vertices are in there too
    assert!(gs.iter().any(|g| !is_two_connected(g)));
}

#[test]
fn rooted_corpora_root_on_the_boundary() {
    for (g, u) in vertex_rooted(6) {
        assert!(g.boundary_flags()[u as usize]);
    }
    for (g, u, v) in edge_rooted(6) {
        assert!(g
            .outer_face()
            .iter()
            .any(|d| (d.0, d.1) == (u, v) || (d.1, d.0) == (u, v)));
    }
}

#[test]
fn random_triangulations_are_deterministic() {
    for n in [4, 10, 57, 200] {
        let a = random_triangulation(n, 42);
        let b = random_triangulation(n, 42);
        assert_eq!(a.rotations(), b.rotations());
        assert_eq!(a.n(), n);
        assert_eq!(a.m(), 3 * n - 6);
        assert_eq!(a.outer_face().len(), 3);
        assert!(check_skeletal(&a, None));
    }
    assert_ne!(
        plane_code(&random_triangulation(60, 1)),
        plane_code(&random_triangulation(60, 2))
    );
}

#[test]
fn random_polygon_triangulations() {
    for n in [3, 8, 50] {
        let g = random_polygon_triangulation(n, 5);
        assert_eq!(g.n(), n);
        assert_eq!(g.m(), 2 * n - 3);
        assert!(outerplanar::applies(&g));
        assert_eq!(
            random_polygon_triangulation(n, 5).rotations(),
            g.rotations()
        );
    }
}

#[test]
fn family_contracts_hold_where_the_oracle_reaches() {
    for kind in FamilyKind::ALL {
        for k in 1..=2 {
            let spec = FamilySpec::new(kind, k);
            if kind == FamilyKind::Deg2Cut && k == 1 {
                assert!(family(spec).is_err());
                continue;
            }
            let g = family(spec).unwrap();
            let (n, gamma) = spec.contract().unwrap();
            assert_eq!(g.n(), n, "{} k = {k}", kind.name());
            assert!(check_skeletal(&g, None), "{} k = {k}", kind.name());
            if n <= 24 {
                assert_eq!(
                    domination_number(&g).unwrap(),
                    gamma,
                    "{} k = {k}",
                    kind.name()
                );
            }
        }
    }
}

#[test]
fn family_names_round_trip() {
    for kind in FamilyKind::ALL {
        assert_eq!(FamilyKind::from_name(kind.name()), Some(kind));
    }
    assert_eq!(FamilyKind::from_name("nope"), None);
}

#[test]
fn families_grow_linearly() {
    for kind in [
        FamilyKind::Gadget7,
        FamilyKind::Gadget10,
        FamilyKind::MtOuterplanar,
    ] {
        let g = family(FamilySpec::new(kind, 6)).unwrap();
        assert_eq!(g.n(), FamilySpec::new(kind, 6).contract().unwrap().0);
    }
}

#[test]
fn sporadic_examples_need_one_more_than_the_bound() {
    for s in Sporadic::ALL {
        let g = sporadic(s);
        assert_eq!(is_sporadic(&g), Some(s));
        assert_eq!(Sporadic::from_name(s.name()), Some(s));
        let bound = (phi_half(&g) / 7) as usize;
        assert_eq!(domination_number(&g).unwrap(), bound + 1, "{}", s.name());
    }
    assert_eq!(is_sporadic(&k4()), None);
    let mut mirrored = octahedron();
    mirrored.mirror();
    assert_eq!(is_sporadic(&mirrored), Some(Sporadic::Octahedron));
}

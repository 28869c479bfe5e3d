use tridom::embedding::{check_skeletal, Roots};
use tridom::gadgets::{
    all_gadgets, gadget, insert, pull_back, red_vertex_holds, verify_entries, Acts, GadgetKind,
    Insert, PullBackError,
};
use tridom::generators::{k4, near_triangulations, octahedron, random_triangulation};
use tridom::oracle::{
    acts_as_edge, acts_as_vertex, is_dominating, min_dominating_set, neatify, DomConstraints,
    VertexActs,
};
use tridom::penalty::{penalty, phi_half};

#[test]
fn catalog_has_every_kind_once() {
    let kinds: Vec<GadgetKind> = all_gadgets().iter().map(|g| g.kind).collect();
    assert_eq!(kinds, GadgetKind::ALL);
    for g in all_gadgets() {
        assert!(
            check_skeletal(&g.graph, None) || g.graph.vertices().any(|v| g.graph.degree(v) == 1)
        );
        assert_eq!(
            g.kind.is_vertex_rooted(),
            matches!(g.roots, Roots::Vertex(_))
        );
    }
}

#[test]
fn entries_match_their_signatures() {
    let rep = verify_entries(all_gadgets());
    assert!(rep.mismatches.is_empty(), "{:?}", rep.mismatches);
    assert_eq!(rep.checked, 14);
    for g in all_gadgets() {
        let (s, phi, acts) = g.kind.signature();
        assert_eq!((g.s, g.phi_half), (s, phi));
        let got = match g.roots {
            Roots::Vertex(u) => Acts::Vertex(acts_as_vertex(&g.graph, u).unwrap().acts),
            Roots::Edge(u, v) => Acts::Edge(acts_as_edge(&g.graph, u, v).unwrap().acts),
            Roots::None => unreachable!(),
        };
        assert_eq!(got, acts, "{}", g.kind);
    }
}

#[test]
fn signature_table_values() {
    let half = |k: GadgetKind| (k.signature().0, k.signature().1);
    assert_eq!(half(GadgetKind::SmallOr), (1, 3));
    assert_eq!(half(GadgetKind::SmallA), (1, 5));
    assert_eq!(half(GadgetKind::SmallAPlusB), (2, 10));
    assert_eq!(half(GadgetKind::SmallAnd), (1, 7));
    assert_eq!(half(GadgetKind::SmallOcta), (1, 8));
    assert_eq!(half(GadgetKind::SmallLOrR), (1, 9));
    assert_eq!(half(GadgetKind::SmallNone), (1, 10));
    // vertex-rooted ones sit on their tight bounds
    assert_eq!(half(GadgetKind::SmallAB), (1, 5));
    assert_eq!(half(GadgetKind::SmallLR), (1, 7));
    assert_eq!(half(GadgetKind::SmallNope), (1, 10));
}

#[test]
fn corrupted_entry_is_reported() {
    let mut bad = gadget(GadgetKind::SmallOcta).clone();
    bad.phi_half += 1;
    let rep = verify_entries(&[bad]);
    assert!(!rep.mismatches.is_empty());
    assert!(!rep.passed());
}

#[test]
fn only_small_a_and_b_carry_a_red_vertex() {
    for g in all_gadgets() {
        let want = matches!(g.kind, GadgetKind::SmallA | GadgetKind::SmallB);
        assert_eq!(g.red.is_some(), want, "{}", g.kind);
        if let Some(r) = g.red {
            assert!(red_vertex_holds(&g.graph, g.roots, r));
        }
    }
}

#[test]
fn fuse_phi_is_rooted_host_plus_gadget_plus_one() {
    for kind in [
        GadgetKind::SmallAB,
        GadgetKind::SmallLR,
        GadgetKind::SmallNope,
    ] {
        for host in [k4(), octahedron(), random_triangulation(15, 2)] {
            for u in host.outer_walk() {
                let mut g = host.clone();
                let before = penalty(&g, Roots::Vertex(u)).half_units;
                insert(&mut g, Insert::Fuse(kind, u)).unwrap();
                assert_eq!(
                    phi_half(&g),
                    before + gadget(kind).phi_half + 2,
                    "{kind} at {u}"
                );
            }
        }
    }
}

#[test]
fn attach_phi_is_rooted_host_plus_gadget_plus_two() {
    let edge_kinds: Vec<GadgetKind> = GadgetKind::ALL
        .into_iter()
        .filter(|k| !k.is_vertex_rooted())
        .collect();
    let mut hosts = near_triangulations(6);
    hosts.push(random_triangulation(14, 5));
    for host in &hosts {
        for d in host.outer_face() {
            for &kind in &edge_kinds {
                let mut g = host.clone();
                let before = penalty(&g, Roots::Edge(d.0, d.1)).half_units;
                insert(&mut g, Insert::Attach(kind, d.0, d.1)).unwrap();
                assert_eq!(
                    phi_half(&g),
                    before + gadget(kind).phi_half + 4,
                    "{kind} on {d:?}"
                );
            }
        }
    }
}

#[test]
fn small_or_on_k4() {
    // 2 for the rooted host, 1.5 for the gadget, 2 for the attach
    let mut g = k4();
    let d = g.outer_dart();
    assert_eq!(penalty(&g, Roots::Edge(d.0, d.1)).half_units, 4);
    insert(&mut g, Insert::Attach(GadgetKind::SmallOr, d.0, d.1)).unwrap();
    assert_eq!(phi_half(&g), 11);
}

#[test]
fn neat_sets_contain_the_red_vertex() {
    for kind in [GadgetKind::SmallA, GadgetKind::SmallB] {
        let host = random_triangulation(12, 9);
        for d in host.outer_face() {
            let mut g = host.clone();
            let tag = insert(&mut g, Insert::Attach(kind, d.0, d.1)).unwrap();
            assert_eq!(tag.forced, Some(d.0));
            let set = neatify(
                &g,
                &min_dominating_set(&g, &DomConstraints::default()).unwrap(),
            );
            assert!(set.contains(&d.0), "{kind} on {d:?}: {set:?}");
        }
    }
}

#[test]
fn pull_back_drops_gadget_vertices() {
    let host = random_triangulation(12, 4);
    let d = host.outer_dart();
    let mut g = host.clone();
    let tag = insert(&mut g, Insert::Attach(GadgetKind::SmallA, d.0, d.1)).unwrap();
    let set = neatify(
        &g,
        &min_dominating_set(&g, &DomConstraints::default()).unwrap(),
    );
    let (back, exposed) = pull_back(std::slice::from_ref(&tag), &set).unwrap();
    assert!(exposed.is_empty());
    assert!(back.iter().all(|x| !tag.added.contains(x)));
    assert!(is_dominating(&host, &back, &[]));
    assert_eq!(
        pull_back(&[tag], &[]),
        Err(PullBackError::ForcedMissing(d.0))
    );
}

#[test]
fn pull_back_reports_lr_fuse_points() {
    let host = k4();
    let u = host.outer_walk()[0];
    let mut g = host.clone();
    let tag = insert(&mut g, Insert::Fuse(GadgetKind::SmallLR, u)).unwrap();
    assert_eq!(
        acts_as_vertex(
            &gadget(GadgetKind::SmallLR).graph,
            gadget(GadgetKind::SmallLR).roots.list()[0]
        )
        .unwrap()
        .acts,
        VertexActs::LR
    );
    let set = min_dominating_set(&g, &DomConstraints::default()).unwrap();
    let (_, exposed) = pull_back(std::slice::from_ref(&tag), &set).unwrap();
    assert_eq!(exposed, vec![u]);
    assert!(matches!(
        pull_back(&[tag], &[u]),
        Err(PullBackError::EmptyCover(_))
    ));
}

#[test]
fn wrong_root_kind_is_rejected() {
    let mut g = k4();
    let d = g.outer_dart();
    assert!(insert(&mut g, Insert::Attach(GadgetKind::SmallAB, d.0, d.1)).is_err());
    assert!(insert(&mut g, Insert::Fuse(GadgetKind::SmallOr, d.0)).is_err());
}

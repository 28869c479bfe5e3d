use tridom::embedding::{plane_code, sphere_code, PlaneGraph};
use tridom::error::FormatError;
use tridom::generators::{
    k4, load_corpus, octahedron, polygon_triangulations, random_triangulation, skeletal_graphs,
    special_heptagon, sphere_triangulations, triangle,
};
use tridom::io::{
    decode_planar_code, encode_planar_code, export_svg, read_graphs, read_text, set_outer_cycle,
    write_text,
};

fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

#[test]
fn planar_code_round_trip_keeps_outer_face() {
    let mut gs = vec![
        triangle(),
        k4(),
        octahedron(),
        special_heptagon(),
        random_triangulation(60, 3),
    ];
    gs.extend(skeletal_graphs(7));
    gs.extend(polygon_triangulations(7));
    let bytes = encode_planar_code(&gs).unwrap();
    let back = decode_planar_code(&bytes).unwrap();
    assert_eq!(back.len(), gs.len());
    for (a, b) in gs.iter().zip(&back) {
        assert_eq!(plane_code(a), plane_code(b));
    }
}

#[test]
fn planar_code_rejects_graphs_over_255_vertices() {
    let g = random_triangulation(256, 1);
    assert!(matches!(
        encode_planar_code([&g]),
        Err(FormatError::TooLarge(256))
    ));
}

#[test]
fn bundled_six_vertex_file_holds_both_triangulations() {
    let gs = load_corpus(&data("sphere6.pc")).unwrap();
    assert_eq!(gs.len(), 2);
    let mut want: Vec<_> = sphere_triangulations(6).iter().map(sphere_code).collect();
    let mut got: Vec<_> = gs.iter().map(sphere_code).collect();
    want.sort();
    got.sort();
    assert_eq!(got, want);
    assert!(got.contains(&sphere_code(&octahedron())));
}

#[test]
fn planar_code_errors() {
    assert!(matches!(
        decode_planar_code(b">>planar_cod<<\x03"),
        Err(FormatError::BadHeader)
    ));
    assert!(matches!(
        decode_planar_code(b">>planar_code<<\x03\x02\x03\x00\x01"),
        Err(FormatError::Truncated)
    ));
    assert!(matches!(
        decode_planar_code(b">>planar_code<<\x03\x02\x04\x00\x01\x03\x00\x01\x02\x00"),
        Err(FormatError::IndexOutOfRange { index: 4, n: 3 })
    ));
    assert!(matches!(
        decode_planar_code(b">>planar_code<<\x00"),
        Err(FormatError::EmptyRecord)
    ));
    assert!(decode_planar_code(b">>planar_code<<").unwrap().is_empty());
}

#[test]
fn text_round_trip() {
    for g in [triangle(), k4(), octahedron(), random_triangulation(300, 2)] {
        let s = write_text(&g);
        let back = read_text(&s).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(plane_code(&g), plane_code(&back[0]));
    }
    let two = format!("{}# second\n{}", write_text(&k4()), write_text(&triangle()));
    assert_eq!(read_graphs(two.as_bytes()).unwrap().len(), 2);
}

#[test]
fn text_asymmetric_rotation_names_both_vertices() {
    let src = "3\n0: 1 2\n1: 2\n2: 0 1\nouter: 0 1 2\n";
    match read_text(src) {
        Err(FormatError::Parse { line, msg }) => {
            assert_eq!(line, 2);
            assert!(msg.contains('0') && msg.contains('1'), "{msg}");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn text_errors_carry_line_numbers() {
    let cases = [
        ("x\n", 1),
        ("3\n0: 1 2\n1: 2 0\n2: 0 1\n", 4),
        ("3\n0: 1 2\n1: 2 0\nouter: 0 1 2\n", 4),
        ("3\n0: 1 2\n0: 1 2\n", 3),
        ("3\n0: 1 z\n", 2),
        ("3\n0: 1 2\n1: 2 0\n2: 0 1\nouter: 0 1 3\n", 5),
        ("3\n7: 1 2\n", 2),
    ];
    for (src, want) in cases {
        match read_text(src) {
            Err(FormatError::Parse { line, .. }) => assert_eq!(line, want, "{src:?}"),
            other => panic!("{src:?}: expected a parse error, got {other:?}"),
        }
    }
}

#[test]
fn outer_face_can_be_chosen() {
    let mut g = k4();
    let inner = g
        .vertices()
        .find(|&v| !g.outer_walk().contains(&v))
        .unwrap();
    let others: Vec<u32> = g.vertices().filter(|&v| v != inner).take(2).collect();
    set_outer_cycle(&mut g, &[inner, others[0], others[1]]).unwrap();
    assert!(g.outer_walk().contains(&inner));
    assert!(set_outer_cycle(&mut g, &[0, 1]).is_err());
}

type Seg = ((f64, f64), (f64, f64));

fn attr(tag: &str, name: &str) -> f64 {
    let key = format!(" {name}=\"");
    let i = tag.find(&key).unwrap() + key.len();
    tag[i..].split('"').next().unwrap().parse().unwrap()
}

fn cross(p: (f64, f64), q: (f64, f64), r: (f64, f64)) -> f64 {
    (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
}

fn near(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

fn crosses(a: Seg, b: Seg) -> bool {
    if near(a.0, b.0) || near(a.0, b.1) || near(a.1, b.0) || near(a.1, b.1) {
        return false;
    }
    let d1 = cross(b.0, b.1, a.0);
    let d2 = cross(b.0, b.1, a.1);
    let d3 = cross(a.0, a.1, b.0);
    let d4 = cross(a.0, a.1, b.1);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn svg_parts(doc: &str) -> (usize, Vec<Seg>) {
    let marks = doc.matches("<circle").count();
    let segs = doc
        .lines()
        .filter(|l| l.starts_with("<line"))
        .map(|l| {
            (
                (attr(l, "x1"), attr(l, "y1")),
                (attr(l, "x2"), attr(l, "y2")),
            )
        })
        .collect();
    (marks, segs)
}

fn assert_drawing_is_plane(g: &PlaneGraph) {
    let (marks, segs) = svg_parts(&export_svg(g, &[]));
    assert_eq!(marks, g.n());
    assert_eq!(segs.len(), g.m());
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            assert!(!crosses(segs[i], segs[j]), "edges {i} and {j} cross");
        }
    }
}

#[test]
fn octahedron_drawing_has_no_crossings() {
    let g = octahedron();
    let (marks, segs) = svg_parts(&export_svg(&g, &[0]));
    assert_eq!((marks, segs.len()), (6, 12));
    assert_drawing_is_plane(&g);
}

#[test]
fn drawings_of_triangulations_are_plane() {
    for g in sphere_triangulations(8).iter().take(20) {
        assert_drawing_is_plane(g);
    }
    assert_drawing_is_plane(&random_triangulation(40, 5));
}

#[test]
fn drawing_highlights_the_set() {
    let doc = export_svg(&k4(), &[1, 2]);
    assert_eq!(doc.matches("fill=\"#d33\"").count(), 2);
}

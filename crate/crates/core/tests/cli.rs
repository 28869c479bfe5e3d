use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tridom::embedding::PlaneGraph;
use tridom::generators::{
    is_sporadic, k4, plane_triangulations, polygon_triangulations, skeletal_graphs, triangle,
};
use tridom::io::{encode_planar_code, write_text};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tridom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_pc(dir: &Path, name: &str, g: &PlaneGraph) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, encode_planar_code([g]).unwrap()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_reports_sporadic_octahedron() {
    let dir = tempfile::tempdir().unwrap();
    let oct = dir.path().join("octahedron.pc");
    assert_eq!(
        code(&run(&["generate", "sporadic", "octahedron", "-o", s(&oct)])),
        0
    );
    let o = run(&["solve", s(&oct)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("size 2"), "{out}");
    assert!(out.contains("bound 1"), "{out}");
    assert!(out.contains("sporadic: true"), "{out}");
}

#[test]
fn solve_writes_svg_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.pc");
    assert_eq!(
        code(&run(&[
            "generate",
            "random",
            "--n",
            "40",
            "--seed",
            "9",
            "-o",
            s(&g)
        ])),
        0
    );
    let svg = dir.path().join("g.svg");
    let o = run(&["solve", s(&g), "--svg", s(&svg), "--stats"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("calls "), "{out}");
    assert!(out.lines().any(|l| l.starts_with("case ")), "{out}");
    let doc = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(doc.matches("<circle").count(), 40);
}

#[test]
fn verify_interior_vertex_of_k4() {
    let dir = tempfile::tempdir().unwrap();
    let g = k4();
    let p = write_pc(dir.path(), "k4.pc", &g);
    // ids are those of the decoded file
    let dec = tridom::io::read_file(&p).unwrap().remove(0);
    let inner = dec
        .vertices()
        .find(|v| !dec.outer_walk().contains(v))
        .unwrap();
    let o = run(&["verify", s(&p), "--set", &inner.to_string()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("ok"));
}

#[test]
fn verify_flags_violations() {
    let dir = tempfile::tempdir().unwrap();
    let oct = dir.path().join("oct.pc");
    run(&["generate", "sporadic", "octahedron", "-o", s(&oct)]);
    // one vertex misses its antipode
    assert_eq!(code(&run(&["verify", s(&oct), "--set", "0"])), 1);
    // a dominating pair still exceeds floor(6 / 3.5) = 1
    let o = run(&["solve", s(&oct)]);
    let set = stdout(&o)
        .lines()
        .find_map(|l| l.strip_prefix("set: ").map(str::to_string))
        .unwrap();
    assert_eq!(code(&run(&["verify", s(&oct), "--set", &set])), 1);
    assert_eq!(code(&run(&["verify", s(&oct), "--set", "99"])), 2);
    assert_eq!(code(&run(&["verify", s(&oct), "--set", "a,b"])), 2);
}

#[test]
fn phi_of_triangle_and_rooted_variants() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_pc(dir.path(), "tri.pc", &triangle());
    let o = run(&["phi", s(&p)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "3.5");
    assert_eq!(
        stdout(&run(&["phi", s(&p), "--root-edge", "0", "1"])).trim(),
        "1.5"
    );
    assert_eq!(stdout(&run(&["phi", s(&p), "--root", "0"])).trim(), "2.5");
    let k = write_pc(dir.path(), "k4.pc", &k4());
    let o = run(&["phi", s(&k), "--explain"]);
    assert!(stdout(&o).starts_with("4\n"), "{}", stdout(&o));
    assert_eq!(
        code(&run(&[
            "phi",
            s(&k),
            "--root",
            "0",
            "--root-edge",
            "0",
            "1"
        ])),
        2
    );
}

#[test]
fn gamma_with_constraints() {
    let dir = tempfile::tempdir().unwrap();
    let oct = dir.path().join("oct.pc");
    run(&["generate", "sporadic", "octahedron", "-o", s(&oct)]);
    let o = run(&["gamma", s(&oct)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("gamma 2"));
    let o = run(&["gamma", s(&oct), "--force", "0", "--exempt", "1,2,3,4,5"]);
    assert!(stdout(&o).contains("gamma 1"), "{}", stdout(&o));
    assert_eq!(code(&run(&["gamma", s(&oct), "--force", "17"])), 2);
}

#[test]
fn acts_as_on_roots() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_pc(dir.path(), "tri.pc", &triangle());
    let o = run(&["acts-as", s(&p), "--root-edge", "0", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("acts as Or"), "{}", stdout(&o));
    let oct = dir.path().join("oct.pc");
    run(&["generate", "sporadic", "octahedron", "-o", s(&oct)]);
    let dec = tridom::io::read_file(&oct).unwrap().remove(0);
    let u = dec.outer_walk()[0];
    let o = run(&["acts-as", s(&oct), "--root", &u.to_string()]);
    assert!(stdout(&o).contains("acts as Nope"), "{}", stdout(&o));
    assert_eq!(code(&run(&["acts-as", s(&oct)])), 2);
}

#[test]
fn validate_reports_kinds_and_rejects_paths() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("two.txt");
    std::fs::write(
        &p,
        format!("{}{}", write_text(&k4()), write_text(&triangle())),
    )
    .unwrap();
    let o = run(&["validate", s(&p)]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("graph 0: n=4 m=6 Triangulation"), "{out}");
    assert!(out.contains("graph 1: n=3 m=3 Triangulation"), "{out}");
    let path = dir.path().join("path.txt");
    std::fs::write(&path, "3\n0: 1\n1: 0 2\n2: 1\nouter: 0 1 2 1\n").unwrap();
    assert_eq!(code(&run(&["validate", s(&path)])), 2);
    assert_eq!(
        code(&run(&["validate", s(&dir.path().join("missing.pc"))])),
        2
    );
}

#[test]
fn generate_formats_and_families() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "generate", "family", "gadget7", "--k", "2", "--format", "text",
    ]);
    assert_eq!(code(&o), 0);
    let gs = tridom::io::read_text(&stdout(&o)).unwrap();
    assert_eq!(gs[0].n(), 14);
    let p = dir.path().join("poly.pc");
    assert_eq!(
        code(&run(&[
            "generate",
            "random",
            "--n",
            "12",
            "--polygon",
            "--seed",
            "4",
            "-o",
            s(&p)
        ])),
        0
    );
    assert_eq!(tridom::io::read_file(&p).unwrap()[0].n(), 12);
    assert_eq!(code(&run(&["generate", "family", "nosuch", "--k", "1"])), 2);
    assert_eq!(code(&run(&["generate", "sporadic", "cube"])), 2);
    assert_eq!(code(&run(&["generate", "random", "--n", "3"])), 2);
}

#[test]
fn bench_emits_csv_within_bound() {
    let o = run(&[
        "bench",
        "--sizes",
        "20,40",
        "--seeds",
        "1,2",
        "--workers",
        "2",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,seed,phi,size,bound,seconds"));
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    for r in rows {
        let size: usize = r[3].parse().unwrap();
        let bound: usize = r[4].parse().unwrap();
        assert!(size <= bound);
    }
    assert_eq!(code(&run(&["bench", "--sizes", "3"])), 2);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["solve"],
        &["solve", "x.pc", "--bogus"],
        &[],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(
            String::from_utf8_lossy(&o.stderr).contains("Usage"),
            "{args:?}"
        );
    }
}

#[test]
fn index_selects_graph() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("two.pc");
    std::fs::write(&p, encode_planar_code([&k4(), &triangle()]).unwrap()).unwrap();
    assert_eq!(stdout(&run(&["phi", s(&p), "--index", "1"])).trim(), "3.5");
    assert_eq!(code(&run(&["phi", s(&p), "--index", "2"])), 2);
    assert_eq!(code(&run(&["phi", s(&p), "--outer", "0,1"])), 2);
}

#[test]
fn solve_piped_to_verify_passes_on_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let mut gs: Vec<PlaneGraph> = (4..=7).flat_map(plane_triangulations).collect();
    gs.extend(skeletal_graphs(6));
    gs.extend(polygon_triangulations(8));
    gs.retain(|g| is_sporadic(g).is_none());
    for (i, g) in gs.iter().enumerate() {
        let p = write_pc(dir.path(), &format!("g{i}.pc"), g);
        let solved = run(&["solve", s(&p)]);
        assert_eq!(code(&solved), 0);
        let mut child = bin()
            .args(["verify", s(&p), "--set", "-"])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .take()
            .unwrap()
            .write_all(&solved.stdout)
            .unwrap();
        let o = child.wait_with_output().unwrap();
        assert_eq!(code(&o), 0, "graph {i}: {}", stdout(&solved));
    }
}

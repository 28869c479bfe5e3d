use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tridom::batch::{solve_batch, BatchRow};
use tridom::embedding::{validate, Kind, PlaneGraph, Roots, Vid};
use tridom::generators::{
    family, random_polygon_triangulation, random_triangulation, sporadic, FamilyKind, FamilySpec,
    Sporadic,
};
use tridom::io::{encode_planar_code, export_svg, read_file, set_outer_cycle, write_text};
use tridom::oracle::{
    acts_as_edge, acts_as_vertex, min_dominating_set_capped, undominated, DomConstraints,
};
use tridom::penalty::{bound, penalty, phi_half};
use tridom::solver::{solve_graph, SolverConfig};

/// Dominating sets of skeletal plane triangulations. Vertex ids are
/// 0-based; entry i of a planar-code record is vertex i-1.
#[derive(Parser)]
#[command(name = "tridom", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    /// Planar-code or text file.
    file: PathBuf,
    /// Which graph of the file to use.
    #[arg(long, default_value_t = 0)]
    index: usize,
    /// Outer face given by its vertex cycle, e.g. 0,1,2.
    #[arg(long, value_delimiter = ',')]
    outer: Option<Vec<Vid>>,
}

#[derive(Args)]
struct RootArgs {
    #[arg(long, conflicts_with = "root_edge")]
    root: Option<Vid>,
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    root_edge: Option<Vec<Vid>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every graph in a file and report its kind.
    Validate {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        outer: Option<Vec<Vid>>,
    },
    /// Penalty in units of one vertex, optionally rooted.
    Phi {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        roots: RootArgs,
        /// Also list the counted configurations.
        #[arg(long)]
        explain: bool,
    },
    /// Dominating set within floor(phi / 3.5).
    Solve {
        #[command(flatten)]
        input: Input,
        /// Write a drawing with the set highlighted.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print solver counters and how often each case fired.
        #[arg(long)]
        stats: bool,
    },
    /// Exact minimum dominating set.
    Gamma {
        #[command(flatten)]
        input: Input,
        /// Vertices the set must contain.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        force: Vec<Vid>,
        /// Vertices that need not be dominated.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        exempt: Vec<Vid>,
    },
    /// Rooted optimum and how the rooted graph acts.
    ActsAs {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        roots: RootArgs,
    },
    /// Check a set: it must dominate and fit floor(phi / 3.5). `--set -`
    /// reads the output of `solve` from stdin.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        set: String,
    },
    /// Write a generated graph.
    Generate {
        #[command(subcommand)]
        what: Gen,
        #[arg(long, value_enum, default_value_t = Format::Pc, global = true)]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Solve random triangulations and print CSV timings.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5")]
        seeds: Vec<u64>,
        /// Worker threads; 0 lets the pool decide.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// mt_outerplanar, k4_chain, gadget10, gadget7, deg2cut, threeconn11, eulerian_quarter
    Family {
        name: String,
        #[arg(long)]
        k: usize,
    },
    /// octahedron, 3-bifan, special-heptagon
    Sporadic { name: String },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Triangulated polygon instead of a triangulation.
        #[arg(long)]
        polygon: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pc,
    Text,
}

enum Fail {
    Input(String),
    Violation(String),
}

type Res = Result<(), Fail>;

fn input<E: std::fmt::Display>(e: E) -> Fail {
    Fail::Input(e.to_string())
}

fn load(path: &Path, outer: Option<&[Vid]>) -> Result<Vec<PlaneGraph>, Fail> {
    let mut gs = read_file(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
    if let Some(c) = outer {
        for g in &mut gs {
            set_outer_cycle(g, c).map_err(input)?;
        }
    }
    Ok(gs)
}

fn pick(inp: &Input) -> Result<PlaneGraph, Fail> {
    let gs = load(&inp.file, inp.outer.as_deref())?;
    let k = gs.len();
    gs.into_iter().nth(inp.index).ok_or_else(|| {
        Fail::Input(format!(
            "index {} out of range, file has {k} graphs",
            inp.index
        ))
    })
}

fn check_vertices(g: &PlaneGraph, vs: &[Vid]) -> Res {
    match vs
        .iter()
        .find(|&&v| v as usize >= g.capacity() || !g.is_alive(v))
    {
        Some(v) => Err(Fail::Input(format!("no vertex {v}"))),
        None => Ok(()),
    }
}

fn roots_of(g: &PlaneGraph, r: &RootArgs) -> Result<Roots, Fail> {
    let roots = match (&r.root, &r.root_edge) {
        (Some(u), _) => Roots::Vertex(*u),
        (None, Some(e)) => Roots::Edge(e[0], e[1]),
        (None, None) => Roots::None,
    };
    check_vertices(g, &roots.list())?;
    validate(g, Kind::Skeletal, roots).map_err(input)?;
    Ok(roots)
}

fn halves(h: u64) -> String {
    if h.is_multiple_of(2) {
        format!("{}", h / 2)
    } else {
        format!("{}.5", h / 2)
    }
}

fn list(vs: &[Vid]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn strongest_kind(g: &PlaneGraph) -> Result<Kind, Fail> {
    for kind in [Kind::Triangulation, Kind::NearTriangulation] {
        if validate(g, kind, Roots::None).is_ok() {
            return Ok(kind);
        }
    }
    validate(g, Kind::Skeletal, Roots::None)
        .map(|_| Kind::Skeletal)
        .map_err(input)
}

fn run(cli: Cli) -> Res {
    let out = &mut std::io::stdout().lock();
    match cli.cmd {
        Cmd::Validate { file, outer } => {
            let gs = load(&file, outer.as_deref())?;
            let mut bad = 0;
            for (i, g) in gs.iter().enumerate() {
                match strongest_kind(g) {
                    Ok(kind) => writeln!(out, "graph {i}: n={} m={} {kind:?}", g.n(), g.m()),
                    Err(Fail::Input(e) | Fail::Violation(e)) => {
                        bad += 1;
                        writeln!(out, "graph {i}: {e}")
                    }
                }
                .map_err(input)?;
            }
            if bad > 0 {
                return Err(Fail::Input(format!(
                    "{bad} of {} graphs are not skeletal",
                    gs.len()
                )));
            }
        }
        Cmd::Phi {
            input: inp,
            roots,
            explain,
        } => {
            let g = pick(&inp)?;
            let roots = roots_of(&g, &roots)?;
            let rep = penalty(&g, roots);
            writeln!(out, "{}", halves(rep.half_units)).map_err(input)?;
            if explain {
                writeln!(
                    out,
                    "n {} e {} f {} r {}",
                    rep.n_term, rep.e_count, rep.f_count, rep.r_flag
                )
                .map_err(input)?;
                for c in &rep.configurations {
                    writeln!(out, "{c:?}").map_err(input)?;
                }
            }
        }
        Cmd::Solve {
            input: inp,
            svg,
            stats,
        } => {
            let g = pick(&inp)?;
            validate(&g, Kind::Skeletal, Roots::None).map_err(input)?;
            let o = solve_graph(&g, &SolverConfig::default())
                .map_err(|e| Fail::Violation(format!("solver failed: {e}")))?;
            let trace: Vec<String> = o.trace.iter().map(|c| c.to_string()).collect();
            writeln!(out, "size {}", o.set.len()).map_err(input)?;
            writeln!(out, "bound {}", o.bound).map_err(input)?;
            writeln!(out, "sporadic: {}", o.sporadic).map_err(input)?;
            writeln!(out, "set: {}", list(&o.set)).map_err(input)?;
            writeln!(out, "trace: {}", trace.join(" ")).map_err(input)?;
            if stats {
                let s = &o.stats;
                writeln!(
                    out,
                    "calls {} rejected {} fallbacks {} backtracks {}",
                    s.calls, s.rejected, s.fallbacks, s.backtracks
                )
                .map_err(input)?;
                let mut per: BTreeMap<String, usize> = BTreeMap::new();
                for c in &trace {
                    *per.entry(c.clone()).or_default() += 1;
                }
                for (c, k) in per {
                    writeln!(out, "case {c} {k}").map_err(input)?;
                }
            }
            if let Some(p) = svg {
                std::fs::write(&p, export_svg(&g, &o.set))
                    .map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?;
            }
        }
        Cmd::Gamma {
            input: inp,
            force,
            exempt,
        } => {
            let g = pick(&inp)?;
            check_vertices(&g, &force)?;
            check_vertices(&g, &exempt)?;
            let c = DomConstraints {
                must: force,
                exempt,
                forbid: vec![],
            };
            let set = min_dominating_set_capped(&g, &c, 64).map_err(input)?;
            writeln!(out, "gamma {}", set.len()).map_err(input)?;
            writeln!(out, "set: {}", list(&set)).map_err(input)?;
        }
        Cmd::ActsAs { input: inp, roots } => {
            let g = pick(&inp)?;
            let (s, acts) = match roots_of(&g, &roots)? {
                Roots::Vertex(u) => acts_as_vertex(&g, u).map(|r| (r.s, format!("{:?}", r.acts))),
                Roots::Edge(u, v) => acts_as_edge(&g, u, v).map(|r| (r.s, format!("{:?}", r.acts))),
                Roots::None => {
                    return Err(Fail::Input("acts-as needs --root or --root-edge".into()))
                }
            }
            .map_err(input)?;
            writeln!(out, "s {s}").map_err(input)?;
            writeln!(out, "acts as {acts}").map_err(input)?;
        }
        Cmd::Verify { input: inp, set } => {
            let g = pick(&inp)?;
            validate(&g, Kind::Skeletal, Roots::None).map_err(input)?;
            let text = if set == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(input)?;
                s.lines()
                    .find_map(|l| l.strip_prefix("set:"))
                    .map(str::to_string)
                    .unwrap_or(s)
            } else {
                set
            };
            let set: Vec<Vid> = text
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Fail::Input(format!("bad vertex id {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            check_vertices(&g, &set)?;
            let b = bound(phi_half(&g));
            let missed = undominated(&g, &set);
            writeln!(out, "size {} bound {b}", set.len()).map_err(input)?;
            if !missed.is_empty() {
                return Err(Fail::Violation(format!("undominated: {}", list(&missed))));
            }
            if set.len() > b {
                return Err(Fail::Violation(format!(
                    "size {} exceeds the bound {b}",
                    set.len()
                )));
            }
            writeln!(out, "ok").map_err(input)?;
        }
        Cmd::Generate {
            what,
            format,
            out: path,
        } => {
            let g = match what {
                Gen::Family { name, k } => {
                    let kind = FamilyKind::from_name(&name)
                        .ok_or_else(|| Fail::Input(format!("unknown family {name:?}")))?;
                    family(FamilySpec::new(kind, k)).map_err(input)?
                }
                Gen::Sporadic { name } => sporadic(
                    Sporadic::from_name(&name)
                        .ok_or_else(|| Fail::Input(format!("unknown sporadic graph {name:?}")))?,
                ),
                Gen::Random { n, seed, polygon } => {
                    let least = if polygon { 3 } else { 4 };
                    if n < least {
                        return Err(Fail::Input(format!("n must be at least {least}")));
                    }
                    if polygon {
                        random_polygon_triangulation(n, seed)
                    } else {
                        random_triangulation(n, seed)
                    }
                }
            };
            let bytes = match format {
                Format::Pc => encode_planar_code([&g]).map_err(input)?,
                Format::Text => write_text(&g).into_bytes(),
            };
            match path {
                Some(p) => std::fs::write(&p, bytes)
                    .map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?,
                None => out.write_all(&bytes).map_err(input)?,
            }
        }
        Cmd::Bench {
            sizes,
            seeds,
            workers,
        } => {
            if let Some(&n) = sizes.iter().find(|&&n| n < 4) {
                return Err(Fail::Input(format!("size {n} is below 4")));
            }
            let jobs: Vec<(usize, u64)> = sizes
                .iter()
                .flat_map(|&n| seeds.iter().map(move |&s| (n, s)))
                .collect();
            let graphs: Vec<PlaneGraph> = jobs
                .iter()
                .map(|&(n, s)| random_triangulation(n, s))
                .collect();
            let rows = in_pool(workers, || solve_batch(&graphs, &SolverConfig::default()))?;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "seed", "phi", "size", "bound", "seconds"])
                .map_err(input)?;
            let mut bad = 0;
            for ((n, seed), row) in jobs.iter().zip(rows) {
                let row: BatchRow =
                    row.map_err(|e| Fail::Violation(format!("n={n} seed={seed}: {e}")))?;
                bad += usize::from(!row.ok);
                w.write_record([
                    n.to_string(),
                    seed.to_string(),
                    halves(row.phi_half),
                    row.size.to_string(),
                    row.bound.to_string(),
                    format!("{:.6}", row.seconds),
                ])
                .map_err(input)?;
            }
            w.flush().map_err(input)?;
            if bad > 0 {
                return Err(Fail::Violation(format!("{bad} rows exceed the bound")));
            }
        }
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, Fail> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(input)?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
fn in_pool<T>(_workers: usize, f: impl FnOnce() -> T) -> Result<T, Fail> {
    Ok(f())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

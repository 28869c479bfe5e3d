//! Many independent solves. With the `parallel` feature the work is spread
//! over rayon's pool; without it [`solve_batch`] runs in order.

use std::time::Instant;

use crate::embedding::PlaneGraph;
use crate::oracle::is_dominating;
use crate::penalty::phi_half;
use crate::solver::{solve_graph, SolveError, SolverConfig};

#[derive(Clone, Debug, PartialEq)]
pub struct BatchRow {
    pub n: usize,
    pub phi_half: u64,
    pub size: usize,
    pub bound: usize,
    pub seconds: f64,
    /// The set dominates and fits the bound (or the graph is sporadic).
    pub ok: bool,
}

pub fn solve_one(g: &PlaneGraph, cfg: &SolverConfig) -> Result<BatchRow, SolveError> {
    let t = Instant::now();
    let out = solve_graph(g, cfg)?;
    let seconds = t.elapsed().as_secs_f64();
    let ok = is_dominating(g, &out.set, &[]) && (out.set.len() <= out.bound || out.sporadic);
    Ok(BatchRow {
        n: g.n(),
        phi_half: phi_half(g),
        size: out.set.len(),
        bound: out.bound,
        seconds,
        ok,
    })
}

pub fn solve_batch_sequential(
    graphs: &[PlaneGraph],
    cfg: &SolverConfig,
) -> Vec<Result<BatchRow, SolveError>> {
    graphs.iter().map(|g| solve_one(g, cfg)).collect()
}

#[cfg(feature = "parallel")]
pub fn solve_batch(graphs: &[PlaneGraph], cfg: &SolverConfig) -> Vec<Result<BatchRow, SolveError>> {
    use rayon::prelude::*;
    graphs.par_iter().map(|g| solve_one(g, cfg)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn solve_batch(graphs: &[PlaneGraph], cfg: &SolverConfig) -> Vec<Result<BatchRow, SolveError>> {
    solve_batch_sequential(graphs, cfg)
}

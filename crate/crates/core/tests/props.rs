use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tridom::embedding::{check_skeletal, plane_code, PlaneGraph, Roots, Vid};
use tridom::generators::{random_polygon_triangulation, random_triangulation};
use tridom::io::{decode_planar_code, encode_planar_code, read_text, write_text};
use tridom::oracle::{is_dominating, is_neat, neatify, undominated};
use tridom::penalty::{penalty, phi_half};
use tridom::solver::{guess_acts_as, solve_graph, Rooting, SolverConfig};

/// A random triangulation with outer vertices peeled off while it stays skeletal.
fn carved(n: usize, seed: u64) -> PlaneGraph {
    let mut g = random_triangulation(n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let target = rng.gen_range(0..=n / 3);
    let mut removed = 0;
    for _ in 0..20 * n {
        if removed == target {
            break;
        }
        let walk = g.outer_walk();
        let v = walk[rng.gen_range(0..walk.len())];
        let mut h = g.clone();
        h.delete_vertex(v);
        if check_skeletal(&h, None) {
            g = h;
            removed += 1;
        }
    }
    g.compacted().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planar_code_round_trip(n in 4usize..120, seed in any::<u64>()) {
        let g = random_triangulation(n, seed);
        let back = decode_planar_code(&encode_planar_code([&g]).unwrap()).unwrap();
        prop_assert_eq!(plane_code(&back[0]), plane_code(&g));
    }

    #[test]
    fn text_round_trip(n in 4usize..60, seed in any::<u64>()) {
        let g = carved(n, seed);
        let back = read_text(&write_text(&g)).unwrap();
        prop_assert_eq!(plane_code(&back[0]), plane_code(&g));
    }

    #[test]
    fn solve_output_is_valid(n in 4usize..90, seed in any::<u64>()) {
        let g = carved(n, seed);
        let out = solve_graph(&g, &SolverConfig::default()).unwrap();
        prop_assert!(is_dominating(&g, &out.set, &[]));
        prop_assert!(out.set.len() <= out.bound + out.sporadic as usize);
    }

    #[test]
    fn solve_output_is_valid_with_small_cutoff(n in 4usize..40, seed in any::<u64>()) {
        let g = carved(n, seed);
        let cfg = SolverConfig { oracle_cutoff: 4, fallback_oracle: 22 };
        let out = solve_graph(&g, &cfg).unwrap();
        prop_assert!(is_dominating(&g, &out.set, &[]));
        prop_assert!(out.set.len() <= out.bound + out.sporadic as usize);
    }

    #[test]
    fn polygon_solutions_meet_the_bound(n in 3usize..80, seed in any::<u64>()) {
        let g = random_polygon_triangulation(n, seed);
        let out = solve_graph(&g, &SolverConfig::default()).unwrap();
        prop_assert!(is_dominating(&g, &out.set, &[]));
        prop_assert!(out.set.len() <= out.bound);
    }

    #[test]
    fn neatify_invariants(n in 4usize..40, seed in any::<u64>(), density in 0.05f64..0.6) {
        let g = carved(n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut set: Vec<Vid> = g.vertices().filter(|_| rng.gen_bool(density)).collect();
        set.extend(undominated(&g, &set));
        let neat = neatify(&g, &set);
        prop_assert!(is_dominating(&g, &neat, &[]));
        prop_assert!(is_neat(&g, &neat));
        prop_assert!(neat.len() <= set.len());
        prop_assert_eq!(neatify(&g, &neat), neat);
    }

    #[test]
    fn rooting_lowers_phi_by_one_to_one_and_a_half(n in 4usize..40, seed in any::<u64>(), pick in any::<usize>()) {
        let g = carved(n, seed);
        let walk = g.outer_walk();
        let u = walk[pick % walk.len()];
        let d = phi_half(&g) as i64 - penalty(&g, Roots::Vertex(u)).half_units as i64;
        prop_assert!(d == 2 || d == 3, "drop {}", d);
    }

    #[test]
    fn edge_guess_intervals_partition(half in 0u64..10_000) {
        let (s, g) = guess_acts_as(half, Rooting::Edge);
        let base = 7 * s as i64;
        let (lo, hi) = match g {
            tridom::solver::Guess::Or => (base - 4, base - 2),
            tridom::solver::Guess::AOrB => (base - 2, base),
            tridom::solver::Guess::LOrR => (base, base + 1),
            tridom::solver::Guess::LorR => (base + 1, base + 3),
            other => return Err(TestCaseError::fail(format!("{other:?}"))),
        };
        prop_assert!(lo <= half as i64 && (half as i64) < hi);
    }
}

//! Property tests for the graph, resolver, solver, and theory invariants.

use proptest::prelude::*;

use metridim_core::graph::UNREACHABLE;
use metridim_core::solvers::Budget;
use metridim_core::*;

/// Seeded random graph; p chosen high enough that most samples connect.
fn sample_graph(n: usize, p: f64, seed: u64) -> Graph {
    gnp(GnpParams { n, p, seed })
}

fn connected_sample(n: usize, p: f64, seed: u64) -> Option<Graph> {
    let g = sample_graph(n, p, seed);
    g.is_connected().then_some(g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn distance_symmetry_and_triangle(n in 3usize..10, p in 0.25f64..0.9, seed in any::<u64>()) {
        let Some(g) = connected_sample(n, p, seed) else { return Ok(()) };
        let dm = g.all_pairs_distances();
        for u in 0..n as Vertex {
            for v in 0..n as Vertex {
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                for w in 0..n as Vertex {
                    prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                }
            }
        }
        prop_assert_eq!(g.diameter().unwrap(), dm.max_entry());
    }

    #[test]
    fn adjacent_rows_are_lipschitz(n in 3usize..10, p in 0.25f64..0.9, seed in any::<u32>()) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let dm = g.all_pairs_distances();
        for (u, v) in g.edges() {
            for w in 0..n as Vertex {
                let du = dm.get(u, w) as i64;
                let dv = dm.get(v, w) as i64;
                prop_assert!((du - dv).abs() <= 1);
            }
        }
    }

    #[test]
    fn resolving_iff_masks_cover(
        n in 3usize..9,
        p in 0.25f64..0.85,
        seed in any::<u32>(),
        set_bits in any::<u16>(),
    ) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let set: Vec<Vertex> = (0..n as Vertex).filter(|v| set_bits >> v & 1 == 1).collect();
        if set.is_empty() { return Ok(()) }
        let direct = is_resolving(&g, &set).unwrap();
        let instance = build_pair_cover(&g).unwrap();
        prop_assert_eq!(direct.resolving, instance.covers(&set));
    }

    #[test]
    fn masks_contain_own_pairs_and_full_set_covers(
        n in 3usize..9,
        p in 0.25f64..0.85,
        seed in any::<u32>(),
    ) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let instance = build_pair_cover(&g).unwrap();
        // v always distinguishes pairs containing v (0 vs >= 1), and the
        // whole vertex set covers the universe.
        for v in 0..n as Vertex {
            for other in 0..n as Vertex {
                if other != v {
                    prop_assert!(instance.distinguishes(v, v, other));
                }
            }
        }
        let all: Vec<Vertex> = (0..n as Vertex).collect();
        prop_assert!(instance.covers(&all));
    }

    #[test]
    fn full_set_and_cosingletons_resolve(n in 3usize..10, p in 0.3f64..0.9, seed in any::<u32>()) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let all: Vec<Vertex> = (0..n as Vertex).collect();
        prop_assert!(is_resolving(&g, &all).unwrap().resolving);
        for z in 0..n as Vertex {
            let co: Vec<Vertex> = all.iter().copied().filter(|&v| v != z).collect();
            prop_assert!(is_resolving(&g, &co).unwrap().resolving);
        }
    }

    #[test]
    fn superset_of_resolving_set_resolves(
        n in 4usize..10,
        p in 0.3f64..0.9,
        seed in any::<u32>(),
        extra in any::<u16>(),
    ) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let base = greedy_resolving(&g).unwrap().witness;
        let mut sup = base.clone();
        sup.extend((0..n as Vertex).filter(|v| extra >> v & 1 == 1));
        sup.sort_unstable();
        sup.dedup();
        prop_assert!(is_resolving(&g, &sup).unwrap().resolving);
    }

    #[test]
    fn relabeling_preserves_resolving(
        n in 3usize..9,
        p in 0.3f64..0.85,
        seed in any::<u32>(),
        perm_seed in any::<u32>(),
    ) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let set = greedy_resolving(&g).unwrap().witness;

        // Fisher-Yates permutation of vertex ids from a seeded stream.
        use rand::{RngExt, SeedableRng};
        let mut rng = rand_pcg::Pcg64::seed_from_u64(perm_seed as u64);
        let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i as u64) as usize;
            perm.swap(i, j);
        }

        let edges: Vec<(Vertex, Vertex)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        let h = Graph::build(n, &edges).unwrap();
        let mapped: Vec<Vertex> = set.iter().map(|&v| perm[v as usize]).collect();

        let orig = is_resolving(&g, &set).unwrap().resolving;
        let moved = is_resolving(&h, &mapped).unwrap().resolving;
        prop_assert_eq!(orig, moved);

        // Also check a deliberately non-resolving set when one exists.
        if n >= 4 {
            let single = vec![0 as Vertex];
            let orig = is_resolving(&g, &single).unwrap().resolving;
            let moved = is_resolving(&h, &[perm[0]]).unwrap().resolving;
            prop_assert_eq!(orig, moved);
        }
    }

    #[test]
    fn exact_matches_exhaustive_oracle(n in 3usize..8, p in 0.3f64..0.85, seed in any::<u32>()) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let oracle = exhaustive_beta(&g).unwrap();
        let exact = exact_beta(&g, &Budget::default()).unwrap();
        prop_assert_eq!(oracle.beta_estimate, exact.beta_estimate);
        prop_assert!(exact.certified);
    }

    #[test]
    fn greedy_within_logarithmic_guarantee(n in 3usize..8, p in 0.3f64..0.85, seed in any::<u32>()) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let beta = exhaustive_beta(&g).unwrap().beta_estimate as f64;
        let greedy = greedy_resolving(&g).unwrap().beta_estimate as f64;
        let pairs = (n * (n - 1) / 2) as f64;
        prop_assert!(beta <= greedy);
        prop_assert!(greedy <= beta * (pairs.ln() + 1.0));
    }

    #[test]
    fn no_subset_below_beta_means_sampler_never_finds(
        n in 4usize..8,
        p in 0.3f64..0.85,
        seed in any::<u32>(),
    ) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let beta = exhaustive_beta(&g).unwrap().beta_estimate;
        if beta < 2 { return Ok(()) }
        // The oracle proved no (beta-1)-subset resolves, so the sampler must
        // report NotFound for every seed at that size.
        for s in 0..4u64 {
            let res = random_resolving(&g, beta - 1, 8, s).unwrap();
            prop_assert_eq!(res, RandomOutcome::NotFound { attempts: 8 });
        }
    }

    #[test]
    fn sampled_solver_outputs_are_deterministic(
        n in 5usize..12,
        p in 0.3f64..0.8,
        seed in any::<u32>(),
    ) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let a = random_resolving(&g, 3, 5, 17).unwrap();
        let b = random_resolving(&g, 3, 5, 17).unwrap();
        match (a, b) {
            (RandomOutcome::Found(x), RandomOutcome::Found(y)) => {
                prop_assert_eq!(x.witness, y.witness);
                prop_assert_eq!(x.nodes_explored, y.nodes_explored);
            }
            (x, y) => prop_assert_eq!(x, y),
        }
    }

    #[test]
    fn balls_grow_until_saturation(n in 3usize..12, p in 0.25f64..0.9, seed in any::<u32>()) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let diam = g.diameter().unwrap();
        for v in 0..n as Vertex {
            let spheres = sphere_sizes(&g, v, diam).unwrap();
            let mut ball = 0usize;
            let mut prev = 0usize;
            for s in &spheres {
                ball += s;
                prop_assert!(ball > prev || ball == n);
                prev = ball;
            }
            prop_assert_eq!(ball, n);
        }
    }

    #[test]
    fn excluded_sphere_never_exceeds_plain(
        n in 5usize..12,
        p in 0.3f64..0.8,
        seed in any::<u32>(),
        x in 0u32..5,
        l in 0u32..5,
    ) {
        let Some(g) = connected_sample(n, p, seed as u64) else { return Ok(()) };
        let x = x % n as u32;
        let l = l % n as u32;
        if x == l { return Ok(()) }
        for radius in 0..3 {
            let plain = sphere_sizes(&g, x, radius).unwrap()[radius as usize];
            let excl = sphere_excluding_landmarks(&g, x, &[l], radius).unwrap();
            prop_assert!(excl <= plain);
        }
    }

    #[test]
    fn regime_q_and_eta_invariants(n in 64usize..20_000, p in 0.0005f64..0.6) {
        let Ok(r) = compute_regime(n, p) else { return Ok(()) };
        prop_assert!(r.q > 0.0 && r.q < 1.0);
        if r.dense {
            prop_assert!(r.q >= 0.5);
        } else {
            prop_assert!(r.q > 0.5 - 1e-12);
        }
        if r.c >= 1.0 {
            // ln n = (i+1) ln d - ln c <= (i+1) ln d makes this exact.
            let bound = f64::from(r.i) / f64::from(r.i + 1);
            prop_assert!(r.eta >= bound - 1e-12);
        }
    }

    #[test]
    fn diameter_prediction_nonincreasing_in_p(n in 500usize..5000, seed in any::<u32>()) {
        let _ = seed;
        let mut last = u32::MAX;
        for &p in &[0.002, 0.01, 0.05, 0.15, 0.4] {
            if let Ok(DiameterPrediction::Definite(d)) = predict_diameter(n, p, 0.0) {
                prop_assert!(d <= last);
                last = d;
            }
        }
    }
}

#[test]
fn unreachable_sentinel_is_reserved() {
    // A 200-vertex path has finite distances well below the sentinel.
    let g = path(200).unwrap();
    let dm = g.all_pairs_distances();
    assert!(dm.max_entry() < UNREACHABLE);
}

#[test]
fn structured_family_diameters() {
    for n in 2..40 {
        assert_eq!(path(n).unwrap().diameter().unwrap() as usize, n - 1);
    }
    for n in 3..40 {
        assert_eq!(cycle(n).unwrap().diameter().unwrap() as usize, n / 2);
        assert_eq!(complete(n).unwrap().diameter().unwrap(), 1);
    }
}

#[test]
fn zigzag_vanishes_at_reciprocals_and_has_integer_slopes() {
    for k in 1..=20 {
        assert_eq!(zigzag_f(1.0 / k as f64).unwrap(), 0.0, "k={k}");
    }
    // f is affine with slope -k on (1/(k+1), 1/k).
    for k in 1..=12u32 {
        let lo = 1.0 / f64::from(k + 1);
        let hi = 1.0 / f64::from(k);
        let x1 = lo + (hi - lo) * 0.3;
        let x2 = lo + (hi - lo) * 0.7;
        let slope = (zigzag_f(x2).unwrap() - zigzag_f(x1).unwrap()) / (x2 - x1);
        assert!((slope + f64::from(k)).abs() < 1e-9, "k={k} slope={slope}");
    }
}

#[test]
fn sparse_q_two_forms_agree() {
    // e^(-2c) + (1-e^(-c))^2 is algebraically (e^(-c))^2 + (1-e^(-c))^2.
    let mut c: f64 = 0.1;
    while c <= 20.0 {
        let compact = (-2.0 * c).exp() + (1.0 - (-c).exp()).powi(2);
        let expanded = (-c).exp().powi(2) + (1.0 - (-c).exp()).powi(2);
        assert!((compact - expanded).abs() < 1e-12, "c={c}");
        c += 0.1;
    }
}

#[test]
fn matched_case_formulas_agree_for_large_c() {
    // e^c ln n vs 2 ln n / ln(1/q): relative gap at most 2/e^c for c >= 5.
    let ln_n = 10_000f64.ln();
    for c in [5.0f64, 6.0, 8.0, 12.0, 16.0] {
        let em = (-c).exp();
        let q = em * em + (1.0 - em) * (1.0 - em);
        let via_q = 2.0 * ln_n / (1.0 / q).ln();
        let via_exp = c.exp() * ln_n;
        assert!((via_exp / via_q - 1.0).abs() <= 2.0 * em, "c={c}");
    }
}

#[test]
fn distant_landmarks_leave_sphere_intact() {
    // On a long path, a landmark beyond distance 2i+1 excludes nothing.
    let g = path(30).unwrap();
    for i in 0..4u32 {
        let plain = sphere_sizes(&g, 0, i).unwrap()[i as usize];
        let excl = sphere_excluding_landmarks(&g, 0, &[29], i).unwrap();
        assert_eq!(plain, excl, "radius {i}");
    }
}

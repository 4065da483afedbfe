use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use randic_core::chvatal::{chvatal_bipartite, chvatal_k_hamiltonian};
use randic_core::conditions::{regime, Checker, Regime, Verdict};
use randic_core::extremal::{bipartite_deleted, kite, split_extremal, ExtremalSpec};
use randic_core::graph6::emit_graph6;
use randic_core::indices::zeroth_order_randic;
use randic_core::oracle::{hamiltonian_backtrack, hamiltonian_cycle, is_k_hamiltonian, is_valid_cycle};
use randic_core::search::{random_connected, soundness_search, SearchMode, SearchParams};
use randic_core::thresholds::{f0, f1, q1, q2, q3};
use randic_core::{Alpha, Graph};

const ALPHAS: [f64; 7] = [-1.0, -0.5, 0.5, 1.0, 2.0, 2.5, 3.0];

fn alpha(a: f64) -> Alpha {
    Alpha::new(a).unwrap()
}

/// Labeled graph on `n` vertices whose edge set is the bit pattern `code`.
fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut b = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> b & 1 == 1 {
                edges.push((u, v));
            }
            b += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Every claim the checkers make on `g`, checked against the oracle.
fn violations(g: &Graph) -> Vec<String> {
    let n = g.order();
    let checker = Checker::default();
    let mut out = Vec::new();
    let mut k_ham = vec![None; n - 2];
    let mut holds = |k: usize| *k_ham[k].get_or_insert_with(|| is_k_hamiltonian(g, k).unwrap());
    for k in 0..=2.min(n - 3) {
        if chvatal_k_hamiltonian(&g.degree_sequence(), k).unwrap().passed && !holds(k) {
            out.push(format!("chvatal k={k} on {}", emit_graph6(g)));
        }
        for a in ALPHAS {
            let r = checker.check_k_hamiltonian(g, k, alpha(a)).unwrap();
            if r.is_guaranteed() && !holds(k) {
                out.push(format!("{} a={a} k={k} on {}", r.theorem_tag, emit_graph6(g)));
            }
            let r = checker.check_large_n(g, k, alpha(a)).unwrap();
            if r.is_guaranteed() && !holds(k) {
                out.push(format!("{} a={a} k={k} on {}", r.theorem_tag, emit_graph6(g)));
            }
        }
    }
    for a in ALPHAS {
        let r = checker.check_regime(g, alpha(a)).unwrap();
        if r.is_guaranteed() && !holds(0) {
            out.push(format!("regime a={a} on {}", emit_graph6(g)));
        }
        let r = checker.check_bipartite(g, alpha(a)).unwrap();
        if r.is_guaranteed() && !holds(0) {
            out.push(format!("{} a={a} on {}", r.theorem_tag, emit_graph6(g)));
        }
    }
    out
}

#[test]
fn exhaustive_soundness_up_to_order_seven() {
    for n in 3..=7usize {
        let pairs = n * (n - 1) / 2;
        let bad: Vec<String> = (0..1u64 << pairs)
            .into_par_iter()
            .map(|code| decode(n, code))
            .filter(Graph::is_connected)
            .flat_map_iter(|g| violations(&g))
            .collect();
        assert!(bad.is_empty(), "n={n}: {:?}", &bad[..bad.len().min(10)]);
    }
}

#[test]
fn exhaustive_bipartite_chvatal_up_to_four_per_side() {
    for half in 2..=4usize {
        let cells = half * half;
        let bad: Vec<String> = (0..1u64 << cells)
            .into_par_iter()
            .filter_map(|code| {
                let edges: Vec<(usize, usize)> = (0..cells)
                    .filter(|b| code >> b & 1 == 1)
                    .map(|b| (b / half, half + b % half))
                    .collect();
                let g = Graph::from_edge_list(2 * half, &edges).unwrap();
                let passed = chvatal_bipartite(&g.degree_sequence(), half).unwrap().passed;
                (passed && !hamiltonian_cycle(&g).unwrap().hamiltonian).then(|| emit_graph6(&g))
            })
            .collect();
        assert!(bad.is_empty(), "half={half}: {bad:?}");
    }
}

#[test]
fn random_soundness_orders_eight_to_ten() {
    let mut runs = Vec::new();
    for n in 8..=10usize {
        for (k, a, p) in [(0, 2.0, 0.5), (0, -0.5, 0.6), (0, 1.0, 0.7), (1, 2.0, 0.7), (2, 3.0, 0.8), (1, -1.0, 0.8)] {
            runs.push(SearchParams {
                mode: SearchMode::General,
                n,
                k,
                alpha: a,
                samples: 20_000,
                edge_prob: p,
                seed: n as u64 * 100 + k as u64,
            });
        }
    }
    for half in 5..=6usize {
        for a in [1.0, -0.5, -1.0, -2.0] {
            runs.push(SearchParams {
                mode: SearchMode::Bipartite,
                n: half,
                k: 0,
                alpha: a,
                samples: 20_000,
                edge_prob: 0.8,
                seed: half as u64,
            });
        }
    }
    for p in runs {
        let r = soundness_search(&p).unwrap();
        assert_eq!(r.violation_count(), 0, "{p:?}: {:?}", r.violations);
    }
}

#[test]
fn dp_agrees_with_backtracking() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..10_000 {
        let n = 3 + i % 6;
        let p = [0.3, 0.45, 0.6, 0.8][i % 4];
        let g = random_connected(&mut rng, n, p).unwrap();
        let r = hamiltonian_cycle(&g).unwrap();
        assert_eq!(r.hamiltonian, hamiltonian_backtrack(&g), "{}", emit_graph6(&g));
        assert_eq!(r.hamiltonian, is_k_hamiltonian(&g, 0).unwrap());
        if let Some(c) = &r.cycle {
            assert!(is_valid_cycle(&g, g.vertex_mask(), c));
        }
    }
}

#[test]
fn extremal_graphs_are_not_hamiltonian() {
    for n in 5..=12usize {
        for k in 0..=(n - 3).min(3) {
            for g in [kite(n, k).unwrap(), split_extremal(n, k).unwrap()] {
                assert!(!is_k_hamiltonian(&g, k).unwrap(), "n={n} k={k} {}", emit_graph6(&g));
            }
        }
    }
    for half in 2..=6usize {
        for s in 1..half {
            assert!(!hamiltonian_cycle(&bipartite_deleted(half, s).unwrap()).unwrap().hamiltonian);
        }
    }
}

#[test]
fn extremal_indices_match_bounds() {
    for n in 3..=20usize {
        for k in 0..=n - 3 {
            for spec in [ExtremalSpec::kite(n, k), ExtremalSpec::split(n, k)] {
                let g = spec.build().unwrap();
                assert!(g.is_connected());
                for a in [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0] {
                    let index = zeroth_order_randic(&g, alpha(a)).unwrap();
                    let bound = spec.bound(alpha(a)).unwrap();
                    assert!((index - bound).abs() <= 1e-9 * bound.abs(), "{spec:?} a={a}");
                }
            }
        }
    }
    for half in 2..=10usize {
        for s in 1..half {
            let spec = ExtremalSpec::bipartite_deleted(half, s);
            let g = spec.build().unwrap();
            for a in [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0] {
                let index = zeroth_order_randic(&g, alpha(a)).unwrap();
                let bound = q3(s as f64, half, alpha(a)).unwrap();
                assert!((index - bound).abs() <= 1e-9 * bound.abs(), "{spec:?} a={a}");
            }
        }
    }
}

/// The construction attaining the binding bound reports `tight`; neither
/// end construction is ever `Guaranteed`.
#[test]
fn binding_construction_is_tight() {
    let checker = Checker::default();
    for n in 5..=12usize {
        for k in 0..=2.min(n - 3) {
            let far = ((n - k - 1) / 2) as f64;
            for a in [0.5, 1.0, 2.0, 3.0] {
                let (near_q, far_q) = (q1(1.0, n, k, alpha(a)).unwrap(), q1(far, n, k, alpha(a)).unwrap());
                let kite_r = checker.check_k_hamiltonian(&kite(n, k).unwrap(), k, alpha(a)).unwrap();
                let split_r = checker.check_k_hamiltonian(&split_extremal(n, k).unwrap(), k, alpha(a)).unwrap();
                assert!(!kite_r.is_guaranteed() && !split_r.is_guaranteed());
                let binding = if near_q >= far_q { &kite_r } else { &split_r };
                assert!(binding.tight, "n={n} k={k} a={a}: {binding:?}");
                assert_eq!(binding.verdict, Verdict::Inconclusive);
            }
        }
    }
}

#[test]
fn regime_picks_the_larger_end() {
    for a in [2.0, 2.5, 3.0, 5.0, 10.0] {
        let (p, q) = (f0(alpha(a)).unwrap(), f1(alpha(a)).unwrap());
        for n in 5..=60usize {
            let r = regime(n, alpha(a)).unwrap();
            let near = q2(1.0, n, alpha(a)).unwrap();
            let far = q2(((n - 1) / 2) as f64, n, alpha(a)).unwrap();
            assert_eq!(r.threshold, match r.regime {
                Regime::Regime1 => near,
                Regime::Regime2 => far,
                Regime::Regime3 => near.max(far),
            });
            assert_eq!(r.regime == Regime::Regime1, n as f64 >= p);
            assert_eq!(r.regime == Regime::Regime2, (n as f64) < p && n as f64 <= q);
            // for odd n beyond n0 the near end binds
            if n % 2 == 1 && n as f64 >= p {
                assert!(near >= far, "a={a} n={n}");
            }
        }
    }
}

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Run with
//! `cargo test -p randic-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use randic_core::extremal::{bipartite_deleted, kite, split_extremal};
use randic_core::indices::zeroth_order_randic;
use randic_core::oracle::{hamiltonian_cycle, is_k_hamiltonian};
use randic_core::search::{soundness_search, SearchMode, SearchParams};
use randic_core::thresholds::{
    asymptotics, conjecture_scan, f0, lemma41_triple, q1, q3, threshold_table, SCAN_STEP,
};
use randic_core::Alpha;

const TABLE_TOL_SMALL_ALPHA: f64 = 1e-3;
const TABLE_TOL_LARGE_ALPHA: f64 = 5e-2;
const TABLE_BUDGET: Duration = Duration::from_secs(5);
const TIGHT_REL_TOL: f64 = 1e-9;
const TIGHTNESS_BUDGET: Duration = Duration::from_secs(60);
const SOUNDNESS_BUDGET: Duration = Duration::from_secs(600);
const F4_REL_TOL: f64 = 1e-9;
const ASYMPTOTIC_RATIO_TOL: f64 = 1e-3;
const ASYMPTOTIC_GAP_TOL: f64 = 1e-2;
const CONVEXITY_REL_TOL: f64 = 1e-12;
/// Slack on `x0 − x1 ≥ 1` matching the bisection tolerance of both roots.
const ROOT_GAP_SLACK: f64 = 1e-8;

/// `(α, x0, x1, n0, n1, f0, f1)`.
const TABLE: [(f64, f64, f64, u64, u64, f64, f64); 10] = [
    (2.0, 5.0, 4.0, 5, 4, 5.7749, 0.0),
    (3.0, 5.4928, 4.0, 7, 4, 6.7301, 2.0),
    (5.0, 7.4880, 4.8211, 9, 6, 9.0596, 4.4142),
    (10.0, 14.3938, 12.6134, 15, 14, 15.9531, 11.6071),
    (20.0, 28.8596, 27.2923, 29, 28, 30.3568, 26.0292),
    (50.0, 72.1725, 70.6865, 73, 72, 73.6359, 69.3079),
    (100.0, 144.317, 142.854, 145, 144, 145.770, 141.442),
    (500.0, 721.403, 719.956, 723, 720, 722.848, 718.520),
    (1000.0, 1442.751, 1441.307, 1443, 1442, 1444.195, 1439.867),
    (10000.0, 14427.008, 14425.565, 14429, 14426, 14428.450, 14424.122),
];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, summary: String) -> Self {
        if failures.is_empty() {
            Outcome { passed: true, detail: summary }
        } else {
            let shown: Vec<&str> = failures.iter().take(6).map(String::as_str).collect();
            Outcome {
                passed: false,
                detail: format!("{summary}; {} failure(s): {}", failures.len(), shown.join("; ")),
            }
        }
    }
}

fn alpha(a: f64) -> Alpha {
    Alpha::new(a).expect("nonzero finite alpha")
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let alphas: Vec<f64> = TABLE.iter().map(|r| r.0).collect();
    let rows = match threshold_table(&alphas) {
        Ok(rows) => rows,
        Err(e) => return Outcome { passed: false, detail: e.to_string() },
    };
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    for (row, &(a, x0, x1, n0, n1, p, q)) in rows.iter().zip(TABLE.iter()) {
        let tol = if a <= 100.0 { TABLE_TOL_SMALL_ALPHA } else { TABLE_TOL_LARGE_ALPHA };
        for (name, got, want) in
            [("x0", row.x0, x0), ("x1", row.x1, x1), ("f0", Some(row.f0), p), ("f1", Some(row.f1), q)]
        {
            let Some(got) = got else {
                failures.push(format!("alpha={a} {name} has no root"));
                continue;
            };
            if (got - want).abs() > tol {
                failures.push(format!("alpha={a} {name}={got} expected {want}"));
            }
        }
        if row.n0 != Some(n0) || row.n1 != Some(n1) {
            failures.push(format!("alpha={a} (n0,n1)=({:?},{:?}) expected ({n0},{n1})", row.n0, row.n1));
        }
    }
    if elapsed > TABLE_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    Outcome::from_failures(failures, format!("10 rows in {elapsed:.2?}"))
}

fn tightness_suite() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 5..=12usize {
        for k in 0..=2.min(n - 3) {
            let far = ((n - k - 1) / 2) as f64;
            let graphs = [("kite", kite(n, k).unwrap(), 1.0), ("split", split_extremal(n, k).unwrap(), far)];
            for (name, g, i) in &graphs {
                for a in [0.5, 1.0, 2.0, 3.0] {
                    cases += 1;
                    let index = zeroth_order_randic(g, alpha(a)).unwrap();
                    let bound = q1(*i, n, k, alpha(a)).unwrap();
                    if !rel_close(index, bound, TIGHT_REL_TOL) {
                        failures.push(format!("{name}({n},{k}) alpha={a}: index {index} vs Q1 {bound}"));
                    }
                }
                if is_k_hamiltonian(g, k).unwrap() {
                    failures.push(format!("{name}({n},{k}) is {k}-Hamiltonian"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > TIGHTNESS_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    Outcome::from_failures(failures, format!("{cases} index checks in {elapsed:.2?}"))
}

fn soundness_suite() -> Outcome {
    let start = Instant::now();
    let runs = [
        SearchParams { mode: SearchMode::General, n: 8, k: 0, alpha: 2.0, samples: 100_000, edge_prob: 0.5, seed: 42 },
        SearchParams { mode: SearchMode::General, n: 8, k: 1, alpha: 2.0, samples: 10_000, edge_prob: 0.7, seed: 7 },
        SearchParams { mode: SearchMode::General, n: 10, k: 0, alpha: -0.5, samples: 10_000, edge_prob: 0.5, seed: 5 },
        SearchParams { mode: SearchMode::Bipartite, n: 6, k: 0, alpha: 1.0, samples: 10_000, edge_prob: 0.85, seed: 3 },
    ];
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for p in &runs {
        match soundness_search(p) {
            Ok(report) => {
                let guaranteed: Vec<String> = report
                    .per_checker
                    .iter()
                    .map(|c| format!("{:?}={}", c.checker, c.tally.guaranteed))
                    .collect();
                summary.push(format!("{:?} n={} k={} a={}: {}", p.mode, p.n, p.k, p.alpha, guaranteed.join(",")));
                for v in &report.violations {
                    failures.push(format!("{:?} n={} k={}: {:?} on {}", p.mode, p.n, p.k, v.checker, v.graph6));
                }
            }
            Err(e) => failures.push(format!("{:?} n={}: {e}", p.mode, p.n)),
        }
    }
    let elapsed = start.elapsed();
    if elapsed > SOUNDNESS_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    Outcome::from_failures(failures, format!("guaranteed [{}] in {elapsed:.2?}", summary.join(" | ")))
}

fn lemma_signs() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for a in [2.0f64, 2.5, 3.0, 4.0, 6.0] {
        let lo = (13.25 * a).ceil() as usize;
        for n in lo..=lo + 50 {
            for k in [0, 1, n - 6, n - 3] {
                cases += 1;
                let l = lemma41_triple(n, k, alpha(a)).unwrap();
                if !(l.f2 > 0.0) {
                    let note = if k + 1 == n - 2 { " (k+1 = n-2)" } else { "" };
                    failures.push(format!("f2({n},k={k},a={a}) = {}{note}", l.f2));
                }
                if !(l.f3 < 0.0) {
                    failures.push(format!("f3({n},k={k},a={a}) = {}", l.f3));
                }
                let zero = l.f4.abs() <= F4_REL_TOL * l.f4_scale;
                if l.f4 < 0.0 && !zero {
                    failures.push(format!("f4({n},a={a}) = {} < 0", l.f4));
                }
                if zero != (a == 2.0) {
                    failures.push(format!("f4({n},a={a}) = {} zero={zero}", l.f4));
                }
            }
        }
    }
    Outcome::from_failures(failures, format!("{cases} (n,k,alpha) cases"))
}

fn asymptotic_check() -> Outcome {
    let r = asymptotics(alpha(10_000.0)).unwrap();
    let inv_ln2 = 1.0 / std::f64::consts::LN_2;
    let mut failures = Vec::new();
    if (r.f0_over_alpha - inv_ln2).abs() > ASYMPTOTIC_RATIO_TOL {
        failures.push(format!("f0/alpha = {}", r.f0_over_alpha));
    }
    if (r.f1_over_alpha - inv_ln2).abs() > ASYMPTOTIC_RATIO_TOL {
        failures.push(format!("f1/alpha = {}", r.f1_over_alpha));
    }
    if (r.gap - 3.0 * inv_ln2).abs() > ASYMPTOTIC_GAP_TOL {
        failures.push(format!("f0 - f1 = {}", r.gap));
    }
    Outcome::from_failures(
        failures,
        format!("f0/a={:.6} f1/a={:.6} gap={:.4}", r.f0_over_alpha, r.f1_over_alpha, r.gap),
    )
}

fn bipartite_equality() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for half in 2..=6usize {
        for s in 1..half {
            let g = bipartite_deleted(half, s).unwrap();
            for a in [-2.0, -1.0, -0.5, 1.0, 2.0] {
                cases += 1;
                let index = zeroth_order_randic(&g, alpha(a)).unwrap();
                let bound = q3(s as f64, half, alpha(a)).unwrap();
                if !rel_close(index, bound, TIGHT_REL_TOL) {
                    failures.push(format!("({half},{s}) alpha={a}: index {index} vs Q3 {bound}"));
                }
                if a == -1.0 && index != 3.0 {
                    failures.push(format!("({half},{s}) alpha=-1: index {index} is not exactly 3"));
                }
            }
            if hamiltonian_cycle(&g).unwrap().hamiltonian {
                failures.push(format!("({half},{s}) is Hamiltonian"));
            }
        }
    }
    Outcome::from_failures(failures, format!("{cases} index checks"))
}

fn convexity_grid() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 3..=30usize {
        for k in 0..=n - 3 {
            let far = (n - k - 1) / 2;
            if far < 1 {
                continue;
            }
            for a in [0.5, 1.0, 2.0, 3.0] {
                let a = alpha(a);
                let end = q1(1.0, n, k, a).unwrap().max(q1(far as f64, n, k, a).unwrap());
                for i in 1..=far {
                    cases += 1;
                    let v = q1(i as f64, n, k, a).unwrap();
                    if v > end * (1.0 + CONVEXITY_REL_TOL) {
                        failures.push(format!("Q1({i},{n},{k},{}) = {v} > {end}", a.value()));
                    }
                }
            }
        }
    }
    Outcome::from_failures(failures, format!("{cases} interior values"))
}

fn conjecture_report() -> Outcome {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for a in [2.0, 3.0, 5.0, 10.0] {
        let n_max = 10.0 * f0(alpha(a)).unwrap();
        match conjecture_scan(alpha(a), n_max, SCAN_STEP) {
            Ok(r) => counts.push(format!("a={a}: g0 {} g1 {}", r.g0.count, r.g1.count)),
            Err(e) => failures.push(format!("scan alpha={a}: {e}")),
        }
    }
    let alphas: Vec<f64> = TABLE.iter().map(|r| r.0).collect();
    for row in threshold_table(&alphas).unwrap() {
        match row.x0_minus_x1 {
            Some(d) if d >= 1.0 - ROOT_GAP_SLACK => {}
            d => failures.push(format!("alpha={}: x0 - x1 = {d:?}", row.alpha)),
        }
    }
    Outcome::from_failures(failures, format!("sign changes [{}]", counts.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("threshold table reproduction", table_reproduction),
        ("extremal tightness", tightness_suite),
        ("oracle soundness search", soundness_suite),
        ("large-order lemma signs", lemma_signs),
        ("threshold asymptotics", asymptotic_check),
        ("bipartite equality", bipartite_equality),
        ("convexity consequence", convexity_grid),
        ("sign-change scan", conjecture_report),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        all &= outcome.passed;
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {} {status} {name}: {}", i + 1, outcome.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use landau_wehrl::cli::fig1_table;
use landau_wehrl::entropy::*;
use landau_wehrl::phase_space::*;
use landau_wehrl::quadrature::QuadratureSpec;
use landau_wehrl::statistics::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Tracks the worst error and failures of a batch of tolerance checks.
#[derive(Default)]
struct Batch {
    count: usize,
    failures: Vec<String>,
    worst: f64,
}

impl Batch {
    fn check(&mut self, label: impl FnOnce() -> String, err: f64, tol: f64) {
        self.count += 1;
        self.worst = self.worst.max(err);
        if err.is_nan() || err > tol {
            self.failures.push(format!("{} err={err:.3e}", label()));
        }
    }

    fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn summary(&self) -> String {
        let mut s = format!("{} checks, worst err {:.2e}", self.count, self.worst);
        if !self.failures.is_empty() {
            s += &format!(
                ", {} failed: {}",
                self.failures.len(),
                self.failures.join("; ")
            );
        }
        s
    }
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn th(beta: f64) -> ThermalParams {
    ThermalParams::new(beta).unwrap()
}

fn density(kind: DensityKind) -> RadialDensity {
    make_density(kind).unwrap()
}

fn normalization() -> Outcome {
    let start = Instant::now();
    let mut b = Batch::default();
    for m in 0..=12 {
        for j in 0..=12 {
            let v = density(DensityKind::Pure { m, j })
                .normalization(&spec())
                .unwrap()
                .value;
            b.check(|| format!("pure({m},{j})"), (v - 1.0).abs(), 1e-10);
        }
    }
    for m in 0..=8 {
        for beta in [0.25, 1.0, 4.0] {
            let v = density(DensityKind::Thermal { m, beta })
                .normalization(&spec())
                .unwrap()
                .value;
            b.check(|| format!("thermal({m},{beta})"), (v - 1.0).abs(), 1e-10);
        }
    }
    let t = start.elapsed();
    outcome(
        b.ok() && t < Duration::from_secs(5),
        format!("{}; {:.2?}", b.summary(), t),
    )
}

fn overlap_equivalence() -> Outcome {
    let start = Instant::now();
    let mut b = Batch::default();
    for m in 0..=6 {
        for j in 0..=6 {
            for bf in [0.5, 1.0, 2.0] {
                for (x, y) in [(0.3, 0.0), (1.0, 1.0), (-0.5, 2.0)] {
                    let o = overlap_oracle(m, j, bf, x, y, 1e-12).unwrap();
                    let q = husimi_pure(m, j, lambda_of(bf, x, y).unwrap());
                    b.check(|| format!("({m},{j},{bf},{x},{y})"), (o - q).abs(), 1e-8);
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        b.ok() && t < Duration::from_secs(10),
        format!("{}; {:.2?}", b.summary(), t),
    )
}

const US: [f64; 5] = [-2.0, -0.5, 0.3, 1.0, 5.0];

fn pure_moments_and_cf() -> Outcome {
    let mut b = Batch::default();
    for m in 0..=10 {
        for j in 0..=10 {
            let q = moments_quadrature(&density(DensityKind::Pure { m, j }), &spec()).unwrap();
            let (mf, jf) = (m as f64, j as f64);
            b.check(
                || format!("mean({m},{j})"),
                (q.mean - (mf + jf + 1.0)).abs(),
                1e-8,
            );
            b.check(
                || format!("var({m},{j})"),
                (q.variance - (2.0 * mf * jf + mf + jf + 1.0)).abs(),
                1e-8,
            );
        }
    }
    for m in 0..=6 {
        for j in 0..=6 {
            let d = density(DensityKind::Pure { m, j });
            for u in US {
                let e = (cf_pure(m, j, u) - cf_quadrature(&d, u, &spec()).unwrap()).norm();
                b.check(|| format!("cf({m},{j},{u})"), e, 1e-8);
            }
        }
    }
    outcome(b.ok(), b.summary())
}

fn thermal_series() -> Outcome {
    let mut b = Batch::default();
    for m in 1..=8 {
        for beta in [0.25, 1.0, 4.0] {
            for lam in [0.1, 1.0, 10.0] {
                let t = th(beta);
                let s = husimi_thermal_series(m, &t, lam, 1e-15).unwrap().value;
                b.check(
                    || format!("({m},{beta},{lam})"),
                    (husimi_thermal(m, &t, lam) - s).abs(),
                    1e-10,
                );
            }
        }
    }
    outcome(b.ok() && b.count == 72, b.summary())
}

fn thermal_cf_and_variance() -> Outcome {
    let mut b = Batch::default();
    let mut stated_ok = true;
    let mut notes = Vec::new();
    for m in 0..=6 {
        for beta in [0.5, 1.0, 2.0] {
            let t = th(beta);
            let d = density(DensityKind::Thermal { m, beta });
            for u in US {
                let e = (cf_thermal(m, &t, u) - cf_quadrature(&d, u, &spec()).unwrap()).norm();
                b.check(|| format!("cf({m},{beta},{u})"), e, 1e-8);
            }
            let q = moments_quadrature(&d, &spec()).unwrap();
            let c = moments_thermal(m, &t);
            b.check(
                || format!("mean({m},{beta})"),
                (q.mean - c.mean).abs(),
                1e-8,
            );
            b.check(
                || format!("cumulant var({m},{beta})"),
                (q.variance - c.variance).abs(),
                1e-8,
            );
            if m <= 3 {
                let stated = paper_stated_variance(m, &t);
                let diff = (stated - q.variance).abs();
                let eta = t.eta();
                let predicted = (m as f64 - 1.0).abs() * (-2.0 * beta).exp() / (eta * eta);
                let flagged = diff > 1e-8;
                stated_ok &= flagged == (m != 1) && (diff - predicted).abs() < 1e-8;
                if beta == 1.0 {
                    notes.push(format!(
                        "m={m}:{}",
                        if flagged { "discrepancy" } else { "pass" }
                    ));
                }
            }
        }
    }
    outcome(
        b.ok() && stated_ok,
        format!(
            "{}; stated variance at beta=1 {}",
            b.summary(),
            notes.join(" ")
        ),
    )
}

fn log_mgf_limit_at_large_m() -> Outcome {
    let mut b = Batch::default();
    for beta in [0.5, 1.0] {
        let t = th(beta);
        for u in [-1.0, 0.3, 0.9 * t.eta()] {
            let gap = (finite_m_log_mgf(200, &t, u).unwrap() - log_mgf_limit(&t, u).unwrap()).abs();
            b.check(|| format!("(beta={beta},u={u:.4})"), gap, 5e-3);
        }
    }
    outcome(b.ok(), b.summary())
}

fn thermal_rate() -> Outcome {
    let mut b = Batch::default();
    for beta in [0.5, 1.0, 2.0] {
        let t = th(beta);
        for xi in [0.5, 1.0, 2.0, 5.0] {
            let e = rate_thermal(&t, xi).unwrap();
            let n = rate_thermal_numeric(&t, xi).unwrap();
            b.check(
                || format!("u*({beta},{xi})"),
                (e.u_star - n.u_star).abs(),
                1e-8,
            );
        }
        b.check(
            || format!("rate at mean ({beta})"),
            rate_thermal(&t, 1.0).unwrap().value.abs(),
            1e-10,
        );
        let stated = paper_u_xi(&t, 1.0);
        b.check(
            || format!("stated maximizer at xi=1 ({beta})"),
            (stated + t.eta() / 2.0).abs(),
            1e-14,
        );
    }
    let stated = paper_u_xi(&th(1.0), 1.0);
    outcome(
        b.ok(),
        format!(
            "{}; stated maximizer at xi=1, beta=1: {stated:.6} (recorded discrepancy)",
            b.summary()
        ),
    )
}

fn pure_limit_rate() -> Outcome {
    let mut b = Batch::default();
    for xi in [0.5, 1.0, 2.0, std::f64::consts::E] {
        let e = rate_pure_limit(xi).unwrap();
        b.check(
            || format!("xi={xi}"),
            (e - rate_pure_limit_numeric(xi).unwrap()).abs(),
            1e-10,
        );
        b.check(
            || format!("closed xi={xi}"),
            (e - (xi - 1.0 - xi.ln())).abs(),
            1e-15,
        );
    }
    outcome(b.ok(), b.summary())
}

fn photon_counts() -> Outcome {
    let mut b = Batch::default();
    for (lam, beta) in [(0.0, 1.0), (1.0, 1.0), (2.0, 0.5), (5.0, 2.0)] {
        let t = th(beta);
        let s: f64 = pmf_table(|m| pmf_y(m as u32, lam, &t), 0)
            .unwrap()
            .iter()
            .sum();
        b.check(|| format!("sum({lam},{beta})"), (s - 1.0).abs(), 1e-10);
    }
    let t = th(1.0);
    let n = t.mean_photons();
    for m in 0..=20 {
        let be = n.powi(m) / (1.0 + n).powi(m + 1);
        b.check(
            || format!("bose-einstein m={m}"),
            (pmf_y(m as u32, 0.0, &t) - be).abs(),
            1e-15,
        );
    }
    let cold = ThermalParams::from_temperature(0.05).unwrap();
    let tv = 0.5
        * (0..60u32)
            .map(|m| (pmf_y(m, 1.0, &cold) - pmf_x(0, 1.0, m)).abs())
            .sum::<f64>();
    b.check(|| "total variation".into(), tv, 1e-2);

    let pmf = |m: usize| pmf_y(m as u32, 1.0, &t);
    let table = pmf_table(pmf, 0).unwrap();
    let mean: f64 = table.iter().enumerate().map(|(k, p)| k as f64 * p).sum();
    let var: f64 = table
        .iter()
        .enumerate()
        .map(|(k, p)| (k as f64 - mean).powi(2) * p)
        .sum();
    let n_draws = 100_000;
    let draws = sample_pmf(pmf, n_draws, 7).unwrap();
    let emp = draws.iter().sum::<usize>() as f64 / n_draws as f64;
    let sigma = (var / n_draws as f64).sqrt();
    b.check(|| "sampler mean".into(), (emp - mean).abs(), 4.0 * sigma);
    outcome(
        b.ok(),
        format!(
            "{}; TV={tv:.2e}, z={:.2}",
            b.summary(),
            (emp - mean) / sigma
        ),
    )
}

fn ground_level_entropies() -> Outcome {
    let mut b = Batch::default();
    for j in 0..=8 {
        let s = wehrl_numeric(&density(DensityKind::Pure { m: 0, j }), &spec()).unwrap();
        b.check(|| format!("j={j}"), (s - wehrl_pure_m0(j)).abs(), 1e-8);
    }
    let s0 = wehrl_numeric(&density(DensityKind::Pure { m: 0, j: 0 }), &spec()).unwrap();
    b.check(|| "equality case".into(), (s0 - 1.0).abs(), 1e-8);
    outcome(b.ok(), b.summary())
}

fn large_index_trend() -> Outcome {
    let mut gaps = Vec::new();
    let mut lieb = true;
    for m in [6u32, 10, 14] {
        let s = wehrl_numeric(&density(DensityKind::Pure { m, j: m }), &spec()).unwrap();
        lieb &= s >= 1.0 - 1e-9;
        gaps.push((s - wehrl_pure_asymptotic(m, m).unwrap().0).abs());
    }
    let monotone = gaps.windows(2).all(|w| w[1] <= w[0]);
    outcome(
        monotone && lieb,
        format!(
            "gaps at m=j=6,10,14: {:.4} {:.4} {:.4}",
            gaps[0], gaps[1], gaps[2]
        ),
    )
}

fn thermal_entropy_closed_form() -> Outcome {
    let mut b = Batch::default();
    for beta in [0.25, 1.0, 4.0] {
        let r = wehrl_thermal_verify(0, &th(beta), &spec()).unwrap();
        b.check(|| format!("m=0 beta={beta}"), r.abs_diff.unwrap(), 1e-6);
    }
    let mut recorded = Vec::new();
    for m in [1u32, 2] {
        let r = wehrl_thermal_verify(m, &th(10.0), &spec()).unwrap();
        b.check(
            || format!("ground-state anchor m={m}"),
            (r.numeric_value - wehrl_pure_m0(m)).abs(),
            1e-3,
        );
        let d = r.abs_diff.unwrap();
        if d <= 1e-6 {
            b.failures
                .push(format!("closed form unexpectedly agrees at m={m}"));
        }
        recorded.push(format!("m={m} abs_diff={d:.4}"));
    }
    outcome(
        b.ok(),
        format!(
            "{}; closed form at beta=10: {} (recorded discrepancy)",
            b.summary(),
            recorded.join(", ")
        ),
    )
}

fn entropy_minimum() -> Outcome {
    let mut b = Batch::default();
    for m in 1..=50 {
        let s = min_entropy(m).unwrap();
        b.check(|| format!("residual m={m}"), s.cubic_residual, 1e-10);
        b.check(
            || format!("roots m={m}"),
            (s.tau_closed_form - s.tau_newton).abs(),
            1e-10,
        );
        b.check(
            || format!("golden m={m}"),
            (s.beta_golden - s.beta_min).abs(),
            1e-8,
        );
    }
    let one = min_entropy(1).unwrap();
    b.check(|| "tau_1".into(), (one.tau_closed_form - 0.5).abs(), 1e-12);
    b.check(
        || "S_min(1)".into(),
        (one.s_min - (1.0 + 2.0 * 2.0f64.ln() + 0.25)).abs(),
        1e-12,
    );
    outcome(b.ok(), b.summary())
}

fn renyi() -> Outcome {
    let mut b = Batch::default();
    let d00 = density(DensityKind::Pure { m: 0, j: 0 });
    b.check(
        || "order 2".into(),
        (renyi_numeric(&d00, 2.0, &spec()).unwrap() - 2.0f64.ln()).abs(),
        1e-10,
    );
    let d12 = density(DensityKind::Pure { m: 1, j: 2 });
    let lim = (renyi_numeric(&d12, 1.001, &spec()).unwrap()
        - wehrl_numeric(&d12, &spec()).unwrap())
    .abs();
    b.check(|| "q -> 1".into(), lim, 1e-2);

    let (mut agree, mut disagree, mut no_value, mut total) = (0, 0, 0, 0);
    let mut worst = (0.0f64, String::new());
    for m in 0..=4 {
        for j in 0..=4 {
            for q in [1.5, 2.0, 3.0] {
                total += 1;
                match renyi_compare(m, j, q, &spec()) {
                    Ok(c) => match c.abs_diff {
                        Some(d) if d <= 1e-6 => agree += 1,
                        Some(d) => {
                            disagree += 1;
                            if d > worst.0 {
                                worst = (d, format!("({m},{j},q={q})"));
                            }
                        }
                        None => no_value += 1,
                    },
                    Err(e) => b.failures.push(format!("({m},{j},{q}): {e}")),
                }
            }
        }
    }
    outcome(
        b.ok(),
        format!(
            "{}; Bell series vs quadrature over {total} cases: {agree} agree, {disagree} differ \
             (largest {:.3} at {}), {no_value} non-positive sums (recorded)",
            b.summary(),
            worst.0,
            worst.1
        ),
    )
}

fn von_neumann_and_figure() -> Outcome {
    let mut b = Batch::default();
    for m in 0..=4 {
        for beta in [0.5, 1.0, 2.0] {
            let s = wehrl_numeric(&density(DensityKind::Thermal { m, beta }), &spec()).unwrap();
            b.check(
                || format!("({m},{beta})"),
                (von_neumann_thermal(&th(beta)) - s).max(0.0),
                1e-8,
            );
        }
    }
    b.check(
        || "beta=40".into(),
        von_neumann_thermal(&th(40.0)).abs(),
        1e-12,
    );

    let temps = landau_wehrl::cli::parse_grid("0.05:20:400").unwrap();
    let table = fig1_table(8, &temps).unwrap();
    let s0 = table.column("S_m0").unwrap();
    if !s0.windows(2).all(|w| w[1] > w[0]) {
        b.failures.push("m=0 column not increasing in T".into());
    }
    for m in 1..=8u32 {
        let col = table.column(&format!("S_m{m}")).unwrap();
        let (k, _) =
            col.iter().enumerate().fold(
                (0, f64::INFINITY),
                |a, (i, &v)| if v < a.1 { (i, v) } else { a },
            );
        let t_min = min_entropy(m).unwrap().t_min;
        let step = temps[1] - temps[0];
        if k == 0 || k == temps.len() - 1 || (temps[k] - t_min).abs() > step {
            b.failures.push(format!(
                "m={m}: grid minimum at T={} vs T_min={t_min}",
                temps[k]
            ));
        }
    }
    let lowest = table
        .rows()
        .iter()
        .flat_map(|r| r[1..].iter().copied())
        .fold(f64::INFINITY, f64::min);
    b.check(|| "figure values >= 1".into(), (1.0 - lowest).max(0.0), 0.0);
    outcome(b.ok(), b.summary())
}

fn full_verification() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_landau-wehrl"))
        .env_remove("LANDAU_WEHRL_OUT_DIR")
        .args(["verify", "--suite", "all", "--strict"])
        .output()
        .unwrap();
    let t = start.elapsed();
    let recs: Vec<serde_json::Value> = match serde_json::from_slice(&out.stdout) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("unreadable report: {e}")),
    };
    let mut expected: Vec<&str> = recs
        .iter()
        .filter(|r| r["verdict"] == "discrepancy" && r["expected_discrepancy"] == true)
        .map(|r| r["claim_id"].as_str().unwrap())
        .collect();
    expected.sort();
    expected.dedup();
    let unexpected = recs
        .iter()
        .filter(|r| r["verdict"] == "discrepancy" && r["expected_discrepancy"] == false)
        .count();
    let ok = out.status.code() == Some(0)
        && expected.len() == 3
        && unexpected == 0
        && t < Duration::from_secs(120);
    outcome(
        ok,
        format!(
            "{} records, expected discrepancies {:?}, {unexpected} unexpected, exit {:?}, {:.2?}",
            recs.len(),
            expected,
            out.status.code(),
            t
        ),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 16] = [
        ("density normalization", normalization),
        ("wavefunction overlap equivalence", overlap_equivalence),
        (
            "pure-state moments and characteristic function",
            pure_moments_and_cf,
        ),
        ("thermal density vs truncated series", thermal_series),
        (
            "thermal characteristic function and variance",
            thermal_cf_and_variance,
        ),
        (
            "finite-m log-MGF vs its limit at m=200",
            log_mgf_limit_at_large_m,
        ),
        ("thermal rate function", thermal_rate),
        ("pure-limit rate function", pure_limit_rate),
        ("thermal photon-count law", photon_counts),
        ("ground-level Wehrl entropies", ground_level_entropies),
        ("large-index Wehrl trend", large_index_trend),
        (
            "thermal Wehrl entropy closed form",
            thermal_entropy_closed_form,
        ),
        ("entropy minimum over temperature", entropy_minimum),
        ("Renyi entropies", renyi),
        (
            "von Neumann comparison and figure data",
            von_neumann_and_figure,
        ),
        ("full verification run", full_verification),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.ok);
        println!(
            "criterion {:2} {} {name}: {}",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("{} of 16 criteria passed", 16 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

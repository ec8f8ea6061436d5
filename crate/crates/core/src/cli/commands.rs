use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::json;

use super::args::*;
use super::parse::{parse_grid, parse_index_range, parse_list_or_grid};
use super::CliError;
use crate::entropy::{
    min_entropy, wehrl_numeric, wehrl_pure_asymptotic, wehrl_pure_m0, wehrl_pure_report,
    wehrl_thermal_paper, wehrl_thermal_verify, MinimumSolution,
};
use crate::phase_space::{
    husimi_pure, husimi_thermal, lambda_of, make_density, DensityKind, ThermalParams,
};
use crate::quadrature::QuadratureSpec;
use crate::report::{run_suite, SweepTable, Verdict};
use crate::statistics::{
    paper_u_xi, pmf_table, pmf_x, pmf_y, rate_pure_limit, rate_pure_limit_numeric, rate_thermal,
    rate_thermal_numeric, sample_pmf,
};

type CliResult = Result<(), CliError>;

/// Agreement threshold used when reporting paper-vs-numeric entropies.
const ENTROPY_AGREEMENT_TOL: f64 = 1e-6;
const SUP_CONFIRM_TOL: f64 = 1e-8;

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let ctx = Context {
        out_dir: cli.out_dir.clone(),
    };
    match &cli.command {
        Command::Husimi(a) => husimi(&ctx, a, out),
        Command::Entropy(a) => entropy(a, out),
        Command::MinEntropy(a) => min_entropy_cmd(&ctx, a, out),
        Command::Fig1(a) => fig1(&ctx, a),
        Command::Dist(a) => dist(&ctx, a, out),
        Command::Rate(a) => rate(&ctx, a, out),
        Command::Verify(a) => verify(&ctx, a, out),
    }
}

struct Context {
    out_dir: Option<PathBuf>,
}

impl Context {
    fn resolve(&self, p: &Path) -> PathBuf {
        match &self.out_dir {
            Some(dir) if p.is_relative() => dir.join(p),
            _ => p.to_path_buf(),
        }
    }

    fn write_file(&self, p: &Path, contents: &str) -> Result<PathBuf, CliError> {
        let path = self.resolve(p);
        if let Some(parent) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, contents)?;
        Ok(path)
    }

    /// Writes `contents` to `dest` if given, else to `out`.
    fn emit(&self, dest: Option<&PathBuf>, contents: &str, out: &mut dyn Write) -> CliResult {
        match dest {
            Some(p) => {
                let path = self.write_file(p, contents)?;
                eprintln!("wrote {}", path.display());
            }
            None => out.write_all(contents.as_bytes())?,
        }
        Ok(())
    }
}

fn thermal(t: &Temperature) -> Result<Option<ThermalParams>, CliError> {
    Ok(match (t.beta, t.temperature) {
        (Some(b), None) => Some(ThermalParams::new(b)?),
        (None, Some(temp)) => Some(ThermalParams::from_temperature(temp)?),
        (None, None) => None,
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--beta and --temperature are exclusive".into(),
            ))
        }
    })
}

fn state(m: u32, j: Option<u32>, t: &Temperature) -> Result<DensityKind, CliError> {
    match (j, thermal(t)?) {
        (Some(j), None) => Ok(DensityKind::Pure { m, j }),
        (None, Some(th)) => Ok(DensityKind::Thermal { m, beta: th.beta() }),
        _ => Err(CliError::Usage(
            "give exactly one of --j, --beta, --temperature".into(),
        )),
    }
}

fn density_value(kind: DensityKind, lambda: f64) -> Result<f64, CliError> {
    if !(lambda >= 0.0) {
        return Err(CliError::Usage(format!("lambda = {lambda} must be >= 0")));
    }
    Ok(match kind {
        DensityKind::Pure { m, j } => husimi_pure(m, j, lambda),
        DensityKind::Thermal { m, beta } => husimi_thermal(m, &ThermalParams::new(beta)?, lambda),
    })
}

fn husimi(ctx: &Context, a: &HusimiArgs, out: &mut dyn Write) -> CliResult {
    let kind = state(a.m, a.j, &a.temp)?;
    let formula = match kind {
        DensityKind::Pure { .. } => "husimi_pure",
        DensityKind::Thermal { .. } => "husimi_thermal",
    };
    let lambdas = match (&a.grid, a.lambda, a.x) {
        (Some(g), None, None) => parse_grid(g)?,
        (None, Some(l), None) => vec![l],
        (None, None, Some(x)) => {
            let (y, b) = (a.y.unwrap_or(0.0), a.b_field.unwrap_or(1.0));
            vec![lambda_of(b, x, y)?]
        }
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --lambda, --x/--y/--b-field, --grid".into(),
            ))
        }
    };
    let mut table =
        SweepTable::new(vec!["lambda".into(), "value".into()]).with_provenance("value", formula);
    for &l in &lambdas {
        table.push(vec![l, density_value(kind, l)?])?;
    }
    let text = match (a.format, a.grid.is_some()) {
        (Format::Plain, false) => format!("{}\n", table.rows()[0][1]),
        (Format::Json, false) => {
            let v = json!({ "state": kind, "lambda": lambdas[0], "value": table.rows()[0][1] });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        (Format::Json, true) => format!("{}\n", table.to_json_string()),
        _ => table.to_csv_string(),
    };
    ctx.emit(a.out.as_ref(), &text, out)
}

fn paper_entropy(kind: DensityKind) -> Result<f64, CliError> {
    Ok(match kind {
        DensityKind::Pure { m, j } if m.min(j) == 0 => wehrl_pure_m0(m.max(j)),
        DensityKind::Pure { m, j } => wehrl_pure_asymptotic(m, j)?.0,
        DensityKind::Thermal { m, beta } => wehrl_thermal_paper(m, &ThermalParams::new(beta)?),
    })
}

fn entropy(a: &EntropyArgs, out: &mut dyn Write) -> CliResult {
    let kind = state(a.m, a.j, &a.temp)?;
    let spec = QuadratureSpec::default();
    match a.method {
        Method::Paper => writeln!(out, "{}", paper_entropy(kind)?)?,
        Method::Numeric => writeln!(out, "{}", wehrl_numeric(&make_density(kind)?, &spec)?)?,
        Method::Both => {
            let report = match kind {
                DensityKind::Pure { m, j } => wehrl_pure_report(m, j, &spec)?,
                DensityKind::Thermal { m, beta } => {
                    wehrl_thermal_verify(m, &ThermalParams::new(beta)?, &spec)?
                }
            };
            let discrepancy = report.abs_diff.is_some_and(|d| d > ENTROPY_AGREEMENT_TOL);
            let mut v = serde_json::to_value(&report).expect("json");
            v["discrepancy"] = json!(discrepancy);
            v["agreement_tolerance"] = json!(ENTROPY_AGREEMENT_TOL);
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
    }
    Ok(())
}

fn min_entropy_cmd(ctx: &Context, a: &MinEntropyArgs, out: &mut dyn Write) -> CliResult {
    let ms: Vec<u32> = match (a.m, a.max_m) {
        (Some(m), None) => vec![m],
        (None, Some(n)) => (1..=n).collect(),
        _ => return Err(CliError::Usage("give exactly one of --m, --max-m".into())),
    };
    let sols: Vec<MinimumSolution> = ms
        .par_iter()
        .map(|&m| min_entropy(m))
        .collect::<Result<_, _>>()?;
    let cols = [
        "m",
        "tau",
        "beta_min",
        "T_min",
        "S_min",
        "cubic_residual",
        "tau_closed_form",
        "tau_newton",
    ];
    let mut table = SweepTable::new(cols.iter().map(|s| s.to_string()).collect())
        .with_provenance("tau", "cubic root, safeguarded Newton")
        .with_provenance("tau_closed_form", "Cardano-type closed form")
        .with_provenance("S_min", "wehrl_thermal_paper");
    for s in &sols {
        table.push(vec![
            s.m as f64,
            s.tau,
            s.beta_min,
            s.t_min,
            s.s_min,
            s.cubic_residual,
            s.tau_closed_form,
            s.tau_newton,
        ])?;
    }
    ctx.emit(a.out.as_ref(), &table.to_csv_string(), out)?;
    if let Some(bad) = sols.iter().find(|s| !s.consistent) {
        return Err(CliError::Numerical(format!(
            "closed-form and Newton roots disagree at m = {}: {} vs {}",
            bad.m, bad.tau_closed_form, bad.tau_newton
        )));
    }
    Ok(())
}

/// Closed-form thermal entropy for `m = 0..=m_max` over a temperature grid.
pub fn fig1_table(m_max: u32, temps: &[f64]) -> Result<SweepTable, CliError> {
    let mut cols = vec!["T".to_string()];
    cols.extend((0..=m_max).map(|m| format!("S_m{m}")));
    let mut table = SweepTable::new(cols.clone());
    for c in &cols[1..] {
        table = table.with_provenance(c, "wehrl_thermal_paper");
    }
    let rows: Vec<Vec<f64>> = temps
        .par_iter()
        .map(|&t| {
            let th = ThermalParams::from_temperature(t)?;
            let mut row = vec![t];
            row.extend((0..=m_max).map(|m| wehrl_thermal_paper(m, &th)));
            Ok(row)
        })
        .collect::<Result<_, CliError>>()?;
    for r in rows {
        table.push(r)?;
    }
    Ok(table)
}

fn fig1(ctx: &Context, a: &Fig1Args) -> CliResult {
    let table = fig1_table(a.m_max, &parse_grid(&a.t_grid)?)?;
    let path = ctx.write_file(&a.out, &table.to_csv_string())?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn dist(ctx: &Context, a: &DistArgs, out: &mut dyn Write) -> CliResult {
    if !(a.lambda >= 0.0) {
        return Err(CliError::Usage(format!(
            "lambda = {} must be >= 0",
            a.lambda
        )));
    }
    let range = a.m.as_deref().map(parse_index_range).transpose()?;
    let th = thermal(&a.temp)?;
    let lambda = a.lambda;
    let (pmf, floor, index_name): (Box<dyn Fn(usize) -> f64 + Sync>, usize, &str) = match a.law {
        Law::X => {
            let level = match &range {
                Some(r) if r.start() == r.end() => *r.start(),
                _ => return Err(CliError::Usage("law x needs a single level --m".into())),
            };
            if th.is_some() {
                return Err(CliError::Usage("law x takes no temperature".into()));
            }
            (
                Box::new(move |j| pmf_x(level, lambda, j as u32)),
                level as usize,
                "j",
            )
        }
        Law::Y => {
            let th =
                th.ok_or_else(|| CliError::Usage("law y needs --beta or --temperature".into()))?;
            (Box::new(move |m| pmf_y(m as u32, lambda, &th)), 0, "m")
        }
    };

    if let Some(n) = a.sample {
        if n == 0 {
            return Err(CliError::Usage("--sample must be positive".into()));
        }
        let table = pmf_table(&pmf, floor)?;
        let mean: f64 = table.iter().enumerate().map(|(k, p)| k as f64 * p).sum();
        let second: f64 = table
            .iter()
            .enumerate()
            .map(|(k, p)| (k * k) as f64 * p)
            .sum();
        let draws = sample_pmf(&pmf, n, a.seed)?;
        let emp = draws.iter().sum::<usize>() as f64 / n as f64;
        let se = ((second - mean * mean).max(0.0) / n as f64).sqrt();
        let z = if se > 0.0 {
            (emp - mean) / se
        } else if emp == mean {
            0.0
        } else {
            f64::INFINITY
        };
        let v = json!({
            "law": if a.law == Law::X { "x" } else { "y" },
            "lambda": lambda,
            "beta": th.map(|t| t.beta()),
            "samples": n,
            "seed": a.seed,
            "exact_mean": mean,
            "empirical_mean": emp,
            "std_error": se,
            "z_score": z,
            "within_4_sigma": z.abs() <= 4.0,
        });
        return ctx.emit(
            a.out.as_ref(),
            &format!("{}\n", serde_json::to_string_pretty(&v).expect("json")),
            out,
        );
    }

    let indices: Vec<usize> = match (a.law, &range) {
        (Law::Y, Some(r)) => r.clone().map(|k| k as usize).collect(),
        _ => (0..pmf_table(&pmf, floor)?.len()).collect(),
    };
    let mut table = SweepTable::new(vec![index_name.into(), "pmf".into()])
        .with_provenance("pmf", if a.law == Law::X { "pmf_x" } else { "pmf_y" });
    for k in indices {
        table.push(vec![k as f64, pmf(k)])?;
    }
    ctx.emit(a.out.as_ref(), &table.to_csv_string(), out)
}

fn rate(ctx: &Context, a: &RateArgs, out: &mut dyn Write) -> CliResult {
    let xis = parse_list_or_grid(&a.xi_grid)?;
    let table = if a.pure_limit {
        let rows: Vec<Vec<f64>> = xis
            .par_iter()
            .map(|&xi| {
                let exact = rate_pure_limit(xi)?;
                let num = rate_pure_limit_numeric(xi)?;
                let ok = (exact - num).abs() <= SUP_CONFIRM_TOL;
                Ok(vec![xi, exact, num, ok as u8 as f64])
            })
            .collect::<Result<_, CliError>>()?;
        let mut t = SweepTable::new(
            ["xi", "rate", "numeric_rate", "confirmed"]
                .map(String::from)
                .to_vec(),
        )
        .with_provenance("rate", "xi - 1 - ln xi")
        .with_provenance(
            "numeric_rate",
            "golden-section Legendre transform of -ln(1-u)",
        );
        for r in rows {
            t.push(r)?;
        }
        t
    } else {
        let th = thermal(&a.temp)?
            .ok_or_else(|| CliError::Usage("give --beta, --temperature or --pure-limit".into()))?;
        let rows: Vec<Vec<f64>> = xis
            .par_iter()
            .map(|&xi| {
                let exact = rate_thermal(&th, xi)?;
                let num = rate_thermal_numeric(&th, xi)?;
                let ok = (exact.u_star - num.u_star).abs() <= SUP_CONFIRM_TOL
                    && (exact.value - num.value).abs() <= SUP_CONFIRM_TOL;
                Ok(vec![
                    xi,
                    exact.u_star,
                    exact.value,
                    paper_u_xi(&th, xi),
                    num.u_star,
                    num.value,
                    ok as u8 as f64,
                ])
            })
            .collect::<Result<_, CliError>>()?;
        let cols = [
            "xi",
            "u_star",
            "rate",
            "paper_u_xi",
            "numeric_u_star",
            "numeric_rate",
            "confirmed",
        ];
        let mut t = SweepTable::new(cols.map(String::from).to_vec())
            .with_provenance("u_star", "smaller root of the stationarity quadratic")
            .with_provenance("paper_u_xi", "stated closed-form maximizer")
            .with_provenance("numeric_u_star", "golden-section maximizer");
        for r in rows {
            t.push(r)?;
        }
        t
    };
    ctx.emit(a.out.as_ref(), &table.to_csv_string(), out)
}

fn verify(ctx: &Context, a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let records = run_suite(a.suite)?;
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&records).expect("json")
    );
    ctx.emit(a.out.as_ref(), &text, out)?;

    let pass = records
        .iter()
        .filter(|r| r.verdict == Verdict::Pass)
        .count();
    let expected: Vec<&str> = {
        let mut ids: Vec<&str> = records
            .iter()
            .filter(|r| r.verdict == Verdict::Discrepancy && r.expected_discrepancy)
            .map(|r| r.claim_id.as_str())
            .collect();
        ids.dedup();
        ids
    };
    let unexpected: Vec<_> = records.iter().filter(|r| r.is_unexpected()).collect();
    eprintln!(
        "{} records: {} pass, {} expected discrepancies ({}), {} unexpected",
        records.len(),
        pass,
        records.len() - pass - unexpected.len(),
        expected.join(", "),
        unexpected.len()
    );
    for r in &unexpected {
        eprintln!(
            "  unexpected: {} [{}] paper={} oracle={} err={:e}",
            r.claim_id, r.params, r.paper_value, r.oracle_value, r.abs_err
        );
    }
    if a.strict && !unexpected.is_empty() {
        return Err(CliError::Discrepancy(unexpected.len()));
    }
    Ok(())
}

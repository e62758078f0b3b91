//! Command implementations behind the `walshkit` binary.
//!
//! Everything here is pure string-in/string-out so the commands can be
//! tested byte-for-byte; `main` only handles files and exit codes.
//! Reports are deterministic for a fixed parameter set including the
//! seed.

use std::fmt;

use serde::Serialize;
use walshkit::dyadic::{bit_reverse, gray};
use walshkit::embedding::l1_delta_seed;
use walshkit::kernels::LebesgueTable;
use walshkit::linalg::Mat;
use walshkit::martingale::{mu_exact_euclidean, mu_lower_search_seeded};
use walshkit::norms::{
    delta_max_seeded, delta_norm_seeded, AscentConfig, NormEstimate, OperatorSpec, Witness,
};
use walshkit::scalar::rat;
use walshkit::spaces::NormedSpace;
use walshkit::step::StepFunction;
use walshkit::verify::{run_suite, Suite, SuiteParams};
use walshkit::walsh::WalshCoefficients;
use walshkit::Scalar;
use walshkit::{fwht, ifwht, DyadicGrid};

/// Errors surfaced to the command line with context.
#[derive(Debug)]
pub enum CliError {
    Core(walshkit::Error),
    Data(String),
    OperatorFile(String),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Data(msg) => write!(f, "data file: {msg}"),
            CliError::OperatorFile(msg) => write!(f, "operator file: {msg}"),
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<walshkit::Error> for CliError {
    fn from(e: walshkit::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Output of one command: the rendered text and whether every asserted
/// relation passed (drives the exit status).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub text: String,
    pub ok: bool,
}

/// Walsh-function enumeration for transform I/O.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Paley,
    Natural,
    Sequency,
}

impl Order {
    pub fn parse(s: &str) -> CliResult<Order> {
        match s {
            "paley" => Ok(Order::Paley),
            "natural" => Ok(Order::Natural),
            "sequency" => Ok(Order::Sequency),
            other => Err(CliError::Usage(format!(
                "unknown order '{other}' (expected paley, natural or sequency)"
            ))),
        }
    }

    /// Paley index of the function that sits at `idx` in this order.
    fn paley_index(&self, idx: usize, q: u32) -> usize {
        match self {
            Order::Paley => idx,
            Order::Natural => bit_reverse(idx, q),
            Order::Sequency => gray(idx),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    PlotData,
}

impl OutputFormat {
    pub fn parse(s: &str) -> CliResult<OutputFormat> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "plot-data" => Ok(OutputFormat::PlotData),
            other => Err(CliError::Usage(format!(
                "unknown format '{other}' (expected text, csv, json or plot-data)"
            ))),
        }
    }
}

/// Parse a data file: one sample per line, blank lines and `#`
/// comments ignored.
pub fn parse_samples(text: &str) -> CliResult<Vec<f64>> {
    let mut samples = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: f64 = trimmed.parse().map_err(|_| {
            CliError::Data(format!(
                "line {}: cannot parse '{trimmed}' as a number",
                lineno + 1
            ))
        })?;
        if !value.is_finite() {
            return Err(CliError::Data(format!(
                "line {}: non-finite sample",
                lineno + 1
            )));
        }
        samples.push(value);
    }
    if samples.is_empty() {
        return Err(CliError::Data("no samples found".into()));
    }
    Ok(samples)
}

/// Forward or inverse Walsh–Hadamard transform of a data file, with
/// coefficients read or written in the requested enumeration.
pub fn run_wht(input: &str, order: Order, inverse: bool) -> CliResult<CommandOutcome> {
    let samples = parse_samples(input)?;
    let len = samples.len();
    if !len.is_power_of_two() {
        return Err(CliError::Data(format!(
            "sample count {len} is not a power of two"
        )));
    }
    let q = len.trailing_zeros();
    let grid = DyadicGrid::new(q)?;
    let output: Vec<f64> = if inverse {
        // Reorder the coefficients into Paley order, then resynthesize.
        let mut coeffs = vec![0.0f64; len];
        for (idx, v) in samples.iter().enumerate() {
            coeffs[order.paley_index(idx, q)] = *v;
        }
        ifwht(&WalshCoefficients::new(grid, coeffs)?).into_values()
    } else {
        let f = StepFunction::new(grid, samples)?;
        let coeffs = fwht(&f);
        (0..len)
            .map(|idx| coeffs.coeffs()[order.paley_index(idx, q)])
            .collect()
    };
    let mut text = String::new();
    let kind = if inverse { "samples" } else { "coefficients" };
    let order_name = match order {
        Order::Paley => "paley",
        Order::Natural => "natural",
        Order::Sequency => "sequency",
    };
    text.push_str(&format!(
        "# walshkit wht {kind} order={order_name} n={len}\n"
    ));
    for v in &output {
        text.push_str(&format!("{v}\n"));
    }
    Ok(CommandOutcome { text, ok: true })
}

#[derive(Serialize)]
struct LebesgueRow {
    n: usize,
    exact: String,
    decimal: f64,
    running_max: String,
}

#[derive(Serialize)]
struct LebesgueJson {
    p: u32,
    rows: Vec<LebesgueRow>,
    max: String,
    argmax: usize,
    lemma_lower: String,
    lemma_upper: String,
    lemma_holds: bool,
}

/// Lebesgue constants `L_1 … L_{2^p}` as exact fractions with the
/// two-sided growth verdict.
pub fn run_lebesgue(p: u32, format: OutputFormat) -> CliResult<CommandOutcome> {
    if p == 0 || p > 14 {
        return Err(CliError::Usage(format!("--p must be in 1..=14, got {p}")));
    }
    let table = LebesgueTable::new(DyadicGrid::new(p)?);
    let (max, argmax) = table.max();
    let lower = rat(p as i64, 8);
    let upper = rat(p as i64, 1);
    let holds = lower <= max && max <= upper;

    let rows: Vec<LebesgueRow> = (1..=table.len())
        .map(|n| LebesgueRow {
            n,
            exact: table.constant(n).to_string(),
            decimal: table.constant(n).to_f64(),
            running_max: table.running_max(n).to_string(),
        })
        .collect();

    let text = match format {
        OutputFormat::Json => {
            let doc = LebesgueJson {
                p,
                rows,
                max: max.to_string(),
                argmax,
                lemma_lower: lower.to_string(),
                lemma_upper: upper.to_string(),
                lemma_holds: holds,
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        OutputFormat::PlotData => {
            let mut out = String::from("# n L_n running_max\n");
            for row in &rows {
                out.push_str(&format!("{} {} {}\n", row.n, row.decimal, row.running_max));
            }
            out.push_str(&format!(
                "# growth bound {}/8 <= {} <= {}: {}\n",
                p,
                max,
                p,
                if holds { "PASS" } else { "FAIL" }
            ));
            out
        }
        _ => {
            let mut out = String::from("n,L_n,L_n_decimal,L_max\n");
            for row in &rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    row.n, row.exact, row.decimal, row.running_max
                ));
            }
            out.push_str(&format!(
                "# growth bound: {}/8 <= {} <= {}: {}\n",
                p,
                max,
                p,
                if holds { "PASS" } else { "FAIL" }
            ));
            out
        }
    };
    Ok(CommandOutcome { text, ok: holds })
}

#[derive(Serialize)]
struct VerifyCheckJson {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyJson {
    suite: String,
    q: u32,
    p: u32,
    seed: u64,
    tol: f64,
    budget: usize,
    passed: bool,
    checks: Vec<VerifyCheckJson>,
}

/// Run one verification suite and render its report.
pub fn run_verify(
    suite_name: &str,
    params: &SuiteParams,
    format: OutputFormat,
) -> CliResult<CommandOutcome> {
    let suite = Suite::parse(suite_name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown suite '{suite_name}' (expected identities, kernels, theorem, corollary3 or convergence)"
        ))
    })?;
    if params.tol <= 0.0 {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let report = run_suite(suite, params)?;
    let ok = report.all_passed();
    let text = match format {
        OutputFormat::Json => {
            let doc = VerifyJson {
                suite: report.suite.to_string(),
                q: report.q,
                p: report.p,
                seed: report.seed,
                tol: report.tol,
                budget: report.budget,
                passed: ok,
                checks: report
                    .checks
                    .iter()
                    .map(|c| VerifyCheckJson {
                        name: c.name.clone(),
                        passed: c.passed,
                        detail: c.detail.clone(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from("suite,check,passed,detail\n");
            for c in &report.checks {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    report.suite,
                    c.name.replace(',', ";"),
                    c.passed,
                    c.detail.replace(',', ";")
                ));
            }
            out
        }
        OutputFormat::PlotData => {
            let mut out = String::from("# index passed\n");
            for (i, c) in report.checks.iter().enumerate() {
                out.push_str(&format!("{} {}\n", i, u8::from(c.passed)));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "suite {} (q={} p={} seed={} tol={:e} budget={})\n",
                report.suite, report.q, report.p, report.seed, report.tol, report.budget
            );
            for c in &report.checks {
                out.push_str(&format!(
                    "{} {} -- {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            out.push_str(&format!("result: {}\n", if ok { "PASS" } else { "FAIL" }));
            out
        }
    };
    Ok(CommandOutcome { text, ok })
}

/// Norm-estimation modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMode {
    Delta,
    DeltaMax,
    Mu,
}

impl NormMode {
    pub fn parse(s: &str) -> CliResult<NormMode> {
        match s {
            "delta" => Ok(NormMode::Delta),
            "delta-max" => Ok(NormMode::DeltaMax),
            "mu" => Ok(NormMode::Mu),
            other => Err(CliError::Usage(format!(
                "unknown mode '{other}' (expected delta, delta-max or mu)"
            ))),
        }
    }
}

/// Parse the operator file: JSON with keys `dims` (`[domain,
/// codomain]`), `domain`, `codomain` (norm tags, weights mandatory for
/// `l1_weighted`) and `matrix` (row-major, codomain × domain).
pub fn parse_operator(text: &str) -> CliResult<OperatorSpec<f64>> {
    #[derive(serde::Deserialize)]
    struct NormSpec {
        norm: String,
        #[serde(default)]
        weights: Option<Vec<f64>>,
    }
    #[derive(serde::Deserialize)]
    struct OperatorFile {
        dims: [usize; 2],
        domain: NormSpec,
        codomain: NormSpec,
        matrix: Vec<Vec<f64>>,
    }

    let file: OperatorFile =
        serde_json::from_str(text).map_err(|e| CliError::OperatorFile(format!("{e}")))?;
    let [dx, dy] = file.dims;

    let build_space = |spec: &NormSpec, dim: usize, which: &str| -> CliResult<NormedSpace<f64>> {
        match spec.norm.as_str() {
            "euclidean" => Ok(NormedSpace::euclidean(dim)),
            "linf" => Ok(NormedSpace::linf(dim)),
            "l1_weighted" => {
                let weights = spec.weights.clone().ok_or_else(|| {
                    CliError::OperatorFile(format!(
                        "field '{which}': l1_weighted requires a 'weights' array"
                    ))
                })?;
                if weights.len() != dim {
                    return Err(CliError::OperatorFile(format!(
                        "field '{which}': expected {dim} weights, got {}",
                        weights.len()
                    )));
                }
                NormedSpace::l1_weighted(weights)
                    .map_err(|e| CliError::OperatorFile(format!("field '{which}': {e}")))
            }
            other => Err(CliError::OperatorFile(format!(
                "field '{which}': unknown norm tag '{other}'"
            ))),
        }
    };

    let domain = build_space(&file.domain, dx, "domain")?;
    let codomain = build_space(&file.codomain, dy, "codomain")?;

    if file.matrix.len() != dy {
        return Err(CliError::OperatorFile(format!(
            "field 'matrix': expected {dy} rows, got {}",
            file.matrix.len()
        )));
    }
    let mut data = Vec::with_capacity(dx * dy);
    for (i, row) in file.matrix.iter().enumerate() {
        if row.len() != dx {
            return Err(CliError::OperatorFile(format!(
                "field 'matrix', row {i}: expected {dx} entries, got {}",
                row.len()
            )));
        }
        data.extend_from_slice(row);
    }
    let matrix = Mat::new(dy, dx, data).map_err(CliError::Core)?;
    OperatorSpec::new(domain, codomain, matrix).map_err(CliError::Core)
}

/// FNV-1a over the witness's rendered values; stable across runs.
fn witness_digest(witness: &Witness) -> String {
    let rendered = match witness {
        Witness::Function(f) => {
            let vals: Vec<String> = f.values().iter().map(|v| format!("{v}")).collect();
            format!("fn:{}", vals.join(","))
        }
        Witness::MartingaleTransform { final_level, signs } => {
            let vals: Vec<String> = final_level
                .values()
                .iter()
                .map(|v| format!("{v}"))
                .collect();
            let sgn: Vec<String> = signs.iter().map(|s| s.to_string()).collect();
            format!("mt:{}|{}", vals.join(","), sgn.join(","))
        }
    };
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in rendered.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}

#[derive(Serialize)]
struct NormsJson {
    mode: String,
    n: Option<usize>,
    p: Option<u32>,
    q: u32,
    seed: u64,
    budget: usize,
    lower: f64,
    upper: f64,
    method: String,
    certified: String,
    witness_digest: Option<String>,
}

/// Parameters for [`run_norms`].
#[derive(Debug, Clone)]
pub struct NormsRequest {
    pub mode: NormMode,
    pub n: Option<usize>,
    pub p: Option<u32>,
    pub q: Option<u32>,
    pub seed: u64,
    pub tol: f64,
    pub budget: usize,
}

/// Estimate δ, δ^max or μ for the operator in `op_text`.
pub fn run_norms(
    op_text: &str,
    request: &NormsRequest,
    format: OutputFormat,
) -> CliResult<CommandOutcome> {
    if request.tol <= 0.0 {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let op = parse_operator(op_text)?;
    let cfg = AscentConfig {
        restarts: request.budget,
        seed: request.seed,
        ..Default::default()
    };

    let (estimate, n_used, p_used, q_used): (NormEstimate, Option<usize>, Option<u32>, u32) =
        match request.mode {
            NormMode::Delta | NormMode::DeltaMax => {
                let n = request.n.ok_or_else(|| {
                    CliError::Usage("modes delta and delta-max require --n".into())
                })?;
                if n == 0 {
                    return Err(CliError::Usage("--n must be at least 1".into()));
                }
                let min_q = usize::BITS - (n - 1).leading_zeros();
                let q = request.q.unwrap_or(min_q.max(1));
                let grid = DyadicGrid::new(q)?;
                let domain = op.domain().clone();
                let seeds = move |k: usize| {
                    l1_delta_seed(&domain, grid, k)
                        .into_iter()
                        .collect::<Vec<_>>()
                };
                let est = match request.mode {
                    NormMode::Delta => delta_norm_seeded(&op, n, grid, &cfg, &seeds(n))?,
                    _ => delta_max_seeded(&op, n, grid, &cfg, &seeds)?,
                };
                (est, Some(n), None, q)
            }
            NormMode::Mu => {
                let p = request
                    .p
                    .ok_or_else(|| CliError::Usage("mode mu requires --p".into()))?;
                let est = if op.is_euclidean_pair() {
                    mu_exact_euclidean(&op, p)?
                } else {
                    let grid = DyadicGrid::new(p)?;
                    let domain = op.domain().clone();
                    let seeds = move |k: usize| {
                        l1_delta_seed(&domain, grid, k)
                            .into_iter()
                            .collect::<Vec<_>>()
                    };
                    mu_lower_search_seeded(&op, p, &cfg, &seeds)?
                };
                (est, None, Some(p), p)
            }
        };

    let certified = if estimate.is_tight(request.tol) {
        "exact"
    } else {
        "interval"
    };
    let digest = estimate.witness.as_ref().map(witness_digest);
    let mode_name = match request.mode {
        NormMode::Delta => "delta",
        NormMode::DeltaMax => "delta-max",
        NormMode::Mu => "mu",
    };

    let text = match format {
        OutputFormat::Json => {
            let doc = NormsJson {
                mode: mode_name.to_string(),
                n: n_used,
                p: p_used,
                q: q_used,
                seed: request.seed,
                budget: request.budget,
                lower: estimate.lower,
                upper: estimate.upper,
                method: estimate.method.clone(),
                certified: certified.to_string(),
                witness_digest: digest,
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        OutputFormat::PlotData => format!("{:.12e} {:.12e}\n", estimate.lower, estimate.upper),
        OutputFormat::Csv => {
            let mut out = String::from("key,value\n");
            out.push_str(&format!("mode,{mode_name}\n"));
            if let Some(n) = n_used {
                out.push_str(&format!("n,{n}\n"));
            }
            if let Some(p) = p_used {
                out.push_str(&format!("p,{p}\n"));
            }
            out.push_str(&format!("q,{q_used}\n"));
            out.push_str(&format!("seed,{}\n", request.seed));
            out.push_str(&format!("lower,{:.12e}\n", estimate.lower));
            out.push_str(&format!("upper,{:.12e}\n", estimate.upper));
            out.push_str(&format!("method,{}\n", estimate.method.replace(',', ";")));
            out.push_str(&format!("certified,{certified}\n"));
            out.push_str(&format!(
                "witness_digest,{}\n",
                digest.as_deref().unwrap_or("-")
            ));
            out
        }
        OutputFormat::Text => {
            let mut out = format!("mode {mode_name}");
            if let Some(n) = n_used {
                out.push_str(&format!(" n={n}"));
            }
            if let Some(p) = p_used {
                out.push_str(&format!(" p={p}"));
            }
            out.push_str(&format!(" q={q_used} seed={}\n", request.seed));
            out.push_str(&format!(
                "estimate [{:.12}, {:.12}] ({certified})\nmethod {}\n",
                estimate.lower, estimate.upper, estimate.method
            ));
            if let Some(d) = &digest {
                out.push_str(&format!("witness digest {d}\n"));
            }
            out
        }
    };
    Ok(CommandOutcome { text, ok: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wht_impulse_in_all_orders() {
        // The impulse has constant Paley coefficients, so every order
        // shows the same file.
        let input = "# impulse\n1\n0\n0\n0\n";
        for order in [Order::Paley, Order::Natural, Order::Sequency] {
            let out = run_wht(input, order, false).unwrap();
            let values: Vec<&str> = out.text.lines().filter(|l| !l.starts_with('#')).collect();
            assert_eq!(values, vec!["0.25"; 4]);
        }
    }

    #[test]
    fn wht_constant_gives_impulse() {
        let input = "2.5\n2.5\n2.5\n2.5\n";
        let out = run_wht(input, Order::Paley, false).unwrap();
        let values = parse_samples(&out.text).unwrap();
        assert_eq!(values, vec![2.5, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn wht_round_trips() {
        let input = "0.5\n-1.25\n3\n0.125\n2\n-0.5\n0\n1\n";
        for order in [Order::Paley, Order::Natural, Order::Sequency] {
            let forward = run_wht(input, order, false).unwrap();
            let back = run_wht(&forward.text, order, true).unwrap();
            let original = parse_samples(input).unwrap();
            let recovered = parse_samples(&back.text).unwrap();
            for (a, b) in original.iter().zip(&recovered) {
                assert!((a - b).abs() <= 1e-12, "{order:?}");
            }
        }
    }

    #[test]
    fn wht_rejects_bad_input() {
        assert!(run_wht("1\n2\n3\n", Order::Paley, false).is_err());
        assert!(run_wht("1\nx\n", Order::Paley, false).is_err());
        assert!(run_wht("", Order::Paley, false).is_err());
    }

    #[test]
    fn lebesgue_table_has_example_row_and_footer() {
        let out = run_lebesgue(2, OutputFormat::Csv).unwrap();
        assert!(out.ok);
        assert!(out.text.contains("3,3/2,1.5,3/2"), "{}", out.text);
        assert!(out.text.contains("PASS"));
        // Power-of-two rows all have L = 1.
        assert!(out.text.contains("4,1,1,3/2"));
    }

    #[test]
    fn lebesgue_other_formats() {
        let json = run_lebesgue(2, OutputFormat::Json).unwrap();
        assert!(json.ok);
        assert!(json.text.contains("\"max\": \"3/2\""), "{}", json.text);
        assert!(json.text.contains("\"lemma_holds\": true"));
        let plot = run_lebesgue(2, OutputFormat::PlotData).unwrap();
        assert!(plot.text.contains("3 1.5 3/2"), "{}", plot.text);
        assert!(run_lebesgue(0, OutputFormat::Csv).is_err());
        assert!(run_lebesgue(15, OutputFormat::Csv).is_err());
    }

    #[test]
    fn operator_file_diagnostics() {
        let good = r#"{
            "dims": [2, 2],
            "domain": {"norm": "euclidean"},
            "codomain": {"norm": "euclidean"},
            "matrix": [[2.0, 0.0], [0.0, 1.0]]
        }"#;
        assert!(parse_operator(good).is_ok());

        let missing_weights = r#"{
            "dims": [2, 2],
            "domain": {"norm": "l1_weighted"},
            "codomain": {"norm": "euclidean"},
            "matrix": [[1.0, 0.0], [0.0, 1.0]]
        }"#;
        let err = parse_operator(missing_weights).unwrap_err();
        assert!(format!("{err}").contains("weights"));

        let bad_row = r#"{
            "dims": [2, 2],
            "domain": {"norm": "euclidean"},
            "codomain": {"norm": "euclidean"},
            "matrix": [[1.0], [0.0, 1.0]]
        }"#;
        let err = parse_operator(bad_row).unwrap_err();
        assert!(format!("{err}").contains("row 0"));

        let invalid_json = "{ nope";
        let err = parse_operator(invalid_json).unwrap_err();
        assert!(format!("{err}").contains("line"));
    }

    #[test]
    fn norms_scalar_identity_mu_is_exact_one() {
        let op = r#"{
            "dims": [1, 1],
            "domain": {"norm": "euclidean"},
            "codomain": {"norm": "euclidean"},
            "matrix": [[1.0]]
        }"#;
        let request = NormsRequest {
            mode: NormMode::Mu,
            n: None,
            p: Some(4),
            q: None,
            seed: walshkit::DEFAULT_SEED,
            tol: 1e-9,
            budget: 8,
        };
        let out = run_norms(op, &request, OutputFormat::Json).unwrap();
        assert!(out.text.contains("\"certified\": \"exact\""));
        assert!(out.text.contains("\"lower\": 1.0"));
        assert!(out.text.contains("\"upper\": 1.0"));
    }

    #[test]
    fn verify_reports_are_byte_identical_across_runs() {
        let params = SuiteParams {
            q: 4,
            p: 2,
            ..Default::default()
        };
        for suite in [
            "identities",
            "kernels",
            "theorem",
            "corollary3",
            "convergence",
        ] {
            let a = run_verify(suite, &params, OutputFormat::Json).unwrap();
            let b = run_verify(suite, &params, OutputFormat::Json).unwrap();
            assert_eq!(a, b, "suite {suite}");
            assert!(a.ok, "suite {suite}");
        }
    }
}

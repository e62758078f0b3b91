//! Verification suites: executable property checks for every layer,
//! shared between the test suites and the CLI.
//!
//! Each suite runs a fixed list of checks for the given parameters and
//! reports one pass/fail line per check. Reports are fully
//! deterministic for a fixed parameter set, including the seed, so two
//! runs are byte-identical.

use crate::dyadic::DyadicGrid;
use crate::embedding::{corollary_witness, embed};
use crate::error::{Error, Result};
use crate::kernels::{
    dirichlet, dirichlet_factored_with, kernel_partial_sum, lebesgue_constant, DirichletPowers,
    LebesgueTable,
};
use crate::linalg::Mat;
use crate::martingale::theorem_check;
use crate::norms::{AscentConfig, OperatorSpec};
use crate::scalar::{rat, Rat, Scalar};
use crate::spaces::{NormedSpace, VectorStepFunction};
use crate::step::StepFunction;
use crate::walsh::{
    conditional_expectation, fwht, haar_scaled, partial_sum, walsh_eval, walsh_signs,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The five verification suites exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Translation invariance, multiplicativity, span equivalence,
    /// transform oracle, Parseval, orthonormality, factorization.
    Identities,
    /// Kernel identities, Lebesgue tables and the two-sided growth
    /// estimate.
    Kernels,
    /// The δ/μ sandwich on the two canonical operators.
    Theorem,
    /// The L_1 embedding identities and the exact Lebesgue quotients.
    Corollary3,
    /// Finite-resolution mean-convergence probe.
    Convergence,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Kernels => "kernels",
            Suite::Theorem => "theorem",
            Suite::Corollary3 => "corollary3",
            Suite::Convergence => "convergence",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "identities" => Some(Suite::Identities),
            "kernels" => Some(Suite::Kernels),
            "theorem" => Some(Suite::Theorem),
            "corollary3" => Some(Suite::Corollary3),
            "convergence" => Some(Suite::Convergence),
            _ => None,
        }
    }
}

/// Parameters shared by all suites; unused ones are ignored by a
/// given suite.
#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub q: u32,
    pub p: u32,
    pub seed: u64,
    pub tol: f64,
    /// Restart budget for norm searches.
    pub budget: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            q: 6,
            p: 3,
            seed: crate::DEFAULT_SEED,
            tol: 1e-9,
            budget: 32,
        }
    }
}

/// One verified property.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub q: u32,
    pub p: u32,
    pub seed: u64,
    pub tol: f64,
    pub budget: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    if params.q > 14 {
        return Err(Error::IndexOutOfRange {
            what: "suite resolution q",
            index: params.q as usize,
            limit: 14,
        });
    }
    if params.p > 14 {
        return Err(Error::IndexOutOfRange {
            what: "suite depth p",
            index: params.p as usize,
            limit: 14,
        });
    }
    let checks = match suite {
        Suite::Identities => identities_checks(params)?,
        Suite::Kernels => kernels_checks(params)?,
        Suite::Theorem => theorem_checks(params)?,
        Suite::Corollary3 => corollary3_checks(params)?,
        Suite::Convergence => convergence_checks(params)?,
    };
    Ok(SuiteReport {
        suite: suite.name(),
        q: params.q,
        p: params.p,
        seed: params.seed,
        tol: params.tol,
        budget: params.budget,
        checks,
    })
}

fn random_rat_step(grid: DyadicGrid, rng: &mut ChaCha8Rng) -> StepFunction<Rat> {
    StepFunction::new(
        grid,
        (0..grid.cells())
            .map(|_| rat(rng.gen_range(-16i64..=16), 1 + rng.gen_range(0i64..8)))
            .collect(),
    )
    .expect("length matches")
}

fn identities_checks(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut checks = Vec::new();

    // Multiplicativity on cells: w_n(s ⊕ t) = w_n(s) w_n(t),
    // exhaustively.
    {
        let q = params.q.min(6);
        let grid = DyadicGrid::new(q)?;
        let cells = grid.cells();
        let mut failures = 0usize;
        for n in 0..cells {
            let w = walsh_signs(n, grid)?;
            for s in 0..cells {
                for t in 0..cells {
                    if w[s ^ t] != w[s] * w[t] {
                        failures += 1;
                    }
                }
            }
        }
        checks.push(CheckResult::new(
            format!("multiplicativity w_n(s+t) = w_n(s) w_n(t), exhaustive q={q}"),
            failures == 0,
            format!("{} triples, {failures} failures", cells * cells * cells),
        ));
    }

    // Translation invariance of integrals on random step functions.
    {
        let q = params.q.min(8);
        let grid = DyadicGrid::new(q)?;
        let mut failures = 0usize;
        for _ in 0..100 {
            let f = random_rat_step(grid, &mut rng);
            let t = rng.gen_range(0..grid.cells());
            let g = f.translate(t)?;
            if g.integral() != f.integral()
                || g.l1_norm() != f.l1_norm()
                || g.l2_norm_sq() != f.l2_norm_sq()
                || g.translate(t)? != f
            {
                failures += 1;
            }
        }
        checks.push(CheckResult::new(
            format!("translation invariance of integrals, 100 random f at q={q}"),
            failures == 0,
            format!("{failures} failures"),
        ));
    }

    // Span equivalence: E_i = S_{2^i} exactly.
    {
        let q_top = params.q.min(8);
        let mut failures = 0usize;
        let mut cases = 0usize;
        for q in 0..=q_top {
            let grid = DyadicGrid::new(q)?;
            let f = random_rat_step(grid, &mut rng);
            for i in 0..=q {
                cases += 1;
                if conditional_expectation(&f, i)? != partial_sum(&f, 1 << i)? {
                    failures += 1;
                }
            }
        }
        checks.push(CheckResult::new(
            format!("span equivalence E_i = S_2^i, exact, q<= {q_top}"),
            failures == 0,
            format!("{cases} levels, {failures} failures"),
        ));
    }

    // Fast transform against the definitional inner products, and
    // Parseval.
    {
        let q = params.q.min(8);
        let grid = DyadicGrid::new(q)?;
        let f = StepFunction::new(
            grid,
            (0..grid.cells())
                .map(|_| rng.gen_range(-1.0f64..1.0))
                .collect(),
        )?;
        let coeffs = fwht(&f);
        let mut max_dev = 0.0f64;
        for n in 0..grid.cells() {
            let w: StepFunction<f64> = walsh_eval(n, grid)?;
            let naive = f.inner_product(&w)?;
            max_dev = max_dev.max((naive - coeffs.coeffs()[n]).abs());
        }
        checks.push(CheckResult::new(
            format!("fwht matches naive inner-product oracle at q={q}"),
            max_dev <= 1e-12,
            format!("max deviation {max_dev:.3e}"),
        ));
        let energy: f64 = coeffs.energy();
        let norm_sq = f.l2_norm_sq();
        let dev = (energy - norm_sq).abs();
        checks.push(CheckResult::new(
            format!("parseval sum of squared coefficients = ||f||^2 at q={q}"),
            dev <= 1e-12 * norm_sq.max(1.0),
            format!("deviation {dev:.3e}"),
        ));
    }

    // Orthonormality of both systems, exact.
    {
        let q = params.q.min(6);
        let grid = DyadicGrid::new(q)?;
        let mut failures = 0usize;
        for i in 0..grid.cells() {
            let wi: StepFunction<Rat> = walsh_eval(i, grid)?;
            for j in 0..=i {
                let wj: StepFunction<Rat> = walsh_eval(j, grid)?;
                let ip = wi.inner_product(&wj)?;
                let expected = if i == j { rat(1, 1) } else { rat(0, 1) };
                if ip != expected {
                    failures += 1;
                }
            }
        }
        for i in 0..grid.cells() {
            let (pi, ei) = haar_scaled(i, grid)?;
            for j in 0..=i {
                let (pj, _) = haar_scaled(j, grid)?;
                let ip = pi.inner_product(&pj)?;
                let expected = if i == j {
                    rat(1, 1i64 << ei)
                } else {
                    rat(0, 1)
                };
                if ip != expected {
                    failures += 1;
                }
            }
        }
        checks.push(CheckResult::new(
            format!("orthonormality of walsh and haar systems, exact, q={q}"),
            failures == 0,
            format!("{failures} failures"),
        ));
    }

    // Kernel factorization (the identity also guards this suite).
    {
        let q = params.q.min(8);
        let grid = DyadicGrid::new(q)?;
        let powers = DirichletPowers::new(grid);
        let mut failures = 0usize;
        for n in 1..grid.cells() {
            if dirichlet_factored_with(&powers, n)? != dirichlet(n, grid)? {
                failures += 1;
            }
        }
        checks.push(CheckResult::new(
            format!("kernel factorization D_n = w_n sum(D_2^i+1 - D_2^i), exhaustive q={q}"),
            failures == 0,
            format!("{} orders, {failures} failures", grid.cells() - 1),
        ));
    }

    Ok(checks)
}

fn kernels_checks(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut checks = Vec::new();

    // Exhaustive factorization at the requested resolution.
    {
        let grid = DyadicGrid::new(params.q)?;
        let powers = DirichletPowers::new(grid);
        let mut failures = 0usize;
        for n in 1..grid.cells() {
            if dirichlet_factored_with(&powers, n)? != dirichlet(n, grid)? {
                failures += 1;
            }
        }
        checks.push(CheckResult::new(
            format!(
                "factorization equals direct kernel for all n < 2^{}",
                params.q
            ),
            failures == 0,
            format!("{} orders, {failures} failures", grid.cells() - 1),
        ));
    }

    // ∫ D_n = 1 and 1 ≤ L_n ≤ n from one incremental table.
    {
        let q = params.q.min(10);
        let grid = DyadicGrid::new(q)?;
        let table = LebesgueTable::new(grid);
        let mut integral_failures = 0usize;
        let mut bound_failures = 0usize;
        for n in 1..=grid.cells() {
            if dirichlet(n, grid)?.integral() != rat(1, 1) {
                integral_failures += 1;
            }
            let l = table.constant(n);
            if *l < rat(1, 1) || *l > rat(n as i64, 1) {
                bound_failures += 1;
            }
        }
        checks.push(CheckResult::new(
            format!("kernel integral = 1 for all n <= 2^{q}"),
            integral_failures == 0,
            format!("{integral_failures} failures"),
        ));
        checks.push(CheckResult::new(
            format!("1 <= L_n <= n for all n <= 2^{q}"),
            bound_failures == 0,
            format!("{bound_failures} failures"),
        ));
    }

    // Convolution form of the partial sum against the transform form.
    {
        let q = params.q.min(6);
        let grid = DyadicGrid::new(q)?;
        let f = random_rat_step(grid, &mut rng);
        let mut failures = 0usize;
        for n in 1..=grid.cells() {
            if kernel_partial_sum(&f, n)? != partial_sum(&f, n)? {
                failures += 1;
            }
        }
        checks.push(CheckResult::new(
            format!("kernel-form partial sum equals transform form, q={q}"),
            failures == 0,
            format!("{} orders, {failures} failures", grid.cells()),
        ));
    }

    // Resolution independence of the Lebesgue constants.
    {
        let q = params.q.min(6);
        let mut failures = 0usize;
        for n in 1..=(1usize << q) {
            let coarse = lebesgue_constant(n, DyadicGrid::new(q)?)?;
            let fine = lebesgue_constant(n, DyadicGrid::new(q + 1)?)?;
            if coarse != fine {
                failures += 1;
            }
        }
        checks.push(CheckResult::new(
            format!("L_n independent of resolution, n <= 2^{q}"),
            failures == 0,
            format!("{failures} failures"),
        ));
    }

    // The two-sided growth estimate p/8 <= Lmax_{2^p} <= p.
    {
        let mut failures = 0usize;
        let mut detail = String::new();
        let mut prev = rat(0, 1);
        for p in 1..=params.p.max(1) {
            let table = LebesgueTable::new(DyadicGrid::new(p)?);
            let (value, argmax) = table.max();
            let ok = rat(p as i64, 8) <= value && value <= rat(p as i64, 1) && value >= prev;
            if !ok {
                failures += 1;
            }
            prev = value.clone();
            if p == params.p.max(1) {
                detail = format!("Lmax_2^{p} = {value} (argmax n={argmax})");
            }
        }
        checks.push(CheckResult::new(
            format!("p/8 <= Lmax_2^p <= p for p = 1..={}", params.p.max(1)),
            failures == 0,
            detail,
        ));
    }

    Ok(checks)
}

fn theorem_checks(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let cfg = AscentConfig {
        restarts: params.budget,
        seed: params.seed,
        ..Default::default()
    };
    let p = params.p.clamp(1, 6);
    let mut checks = Vec::new();

    // Exact regime: the default Euclidean operator diag(2, 1).
    {
        let e2 = NormedSpace::<f64>::euclidean(2);
        let t = OperatorSpec::new(e2.clone(), e2, Mat::new(2, 2, vec![2.0, 0.0, 0.0, 1.0])?)?;
        let report = theorem_check(&t, p, &cfg, params.tol)?;
        let sandwich = format!(
            "sandwich: {:.9} <= {:.9} <= {:.9}",
            report.delta_max.upper,
            report.mu.upper,
            2.0 * report.delta_max.upper
        );
        for r in &report.relations {
            checks.push(CheckResult::new(
                format!("euclidean diag(2,1), p={p}: {}", r.name),
                r.passed,
                format!("{:.9} vs {:.9}; {sandwich}", r.lhs, r.rhs),
            ));
        }
    }

    // Estimated regime: the identity on discretized L_1.
    {
        let space = NormedSpace::<f64>::l1_discretized(p);
        let id = OperatorSpec::identity(space);
        let report = theorem_check(&id, p, &cfg, params.tol)?;
        for r in &report.relations {
            checks.push(CheckResult::new(
                format!("l1-discretized identity, p={p}: {}", r.name),
                r.passed,
                format!("{:.9} vs {:.9}", r.lhs, r.rhs),
            ));
        }
        let (lmax, _) = LebesgueTable::new(DyadicGrid::new(p)?).max();
        let lmax = lmax.to_f64();
        checks.push(CheckResult::new(
            format!("l1-discretized identity, p={p}: witnessed mu lower >= Lmax"),
            report.mu.lower >= lmax * (1.0 - params.tol),
            format!("mu lower {:.9}, Lmax {:.9}", report.mu.lower, lmax),
        ));
        checks.push(CheckResult::new(
            format!("l1-discretized identity, p={p}: delta interval pinned at Lmax"),
            (report.delta_max.lower - lmax).abs() <= params.tol * lmax
                && (report.delta_max.upper - lmax).abs() <= params.tol * lmax,
            format!(
                "delta in [{:.9}, {:.9}]",
                report.delta_max.lower, report.delta_max.upper
            ),
        ));
    }

    Ok(checks)
}

fn corollary3_checks(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let p = params.p.clamp(1, 8);
    let mut checks = Vec::new();

    // Exact quotient = Lebesgue constant for every order.
    {
        let table = LebesgueTable::new(DyadicGrid::new(p)?);
        let mut matches = 0usize;
        let total = (1usize << p) - 1;
        for n in 1..=total {
            let (_, ratio) = corollary_witness(p, n)?;
            if &ratio == table.constant(n) {
                matches += 1;
            }
        }
        checks.push(CheckResult::new(
            format!("embedded witness quotient equals L_n exactly, all n < 2^{p}"),
            matches == total,
            format!("{matches}/{total} exact matches"),
        ));
    }

    // The three embedding identities on random functions.
    {
        let pe = p.min(4);
        let grid = DyadicGrid::new(pe)?;
        let mut failures = 0usize;
        for _ in 0..10 {
            let f = random_rat_step(grid, &mut rng);
            let embedded = embed(&f)?;
            let f_coeffs = fwht(&f);
            // (a) coefficient identity.
            for s in 0..grid.cells() {
                let coeffs = fwht(&embedded.coordinate(s)?);
                for j in 0..grid.cells() {
                    let w = rat(walsh_signs(j, grid)?[s] as i64, 1);
                    if coeffs.coeffs()[j] != f_coeffs.coeffs()[j].clone() * w {
                        failures += 1;
                    }
                }
            }
            // (b) isometry.
            let l1 = f.l1_norm();
            if embedded.l2x_norm_sq() != l1.clone() * l1 {
                failures += 1;
            }
            // (c) partial-sum isometry.
            for n in 0..=grid.cells() {
                let lhs = embedded.partial_sum(n)?.l2x_norm_sq();
                let rhs = partial_sum(&f, n)?.l1_norm();
                if lhs != rhs.clone() * rhs {
                    failures += 1;
                }
            }
        }
        checks.push(CheckResult::new(
            format!("embedding identities (coefficients, isometry, partial sums) at p={pe}"),
            failures == 0,
            format!("{failures} failures"),
        ));
    }

    // Powers of two give quotient exactly 1.
    {
        let mut failures = 0usize;
        for k in 0..p {
            let (_, ratio) = corollary_witness(p, 1 << k)?;
            if ratio != rat(1, 1) {
                failures += 1;
            }
        }
        checks.push(CheckResult::new(
            format!("quotient is 1 at every power of two below 2^{p}"),
            failures == 0,
            format!("{failures} failures"),
        ));
    }

    Ok(checks)
}

/// Exact mean-convergence probe for one space: random rational `f`,
/// all partial sums incrementally, envelope and uniform bound.
fn convergence_probe(
    label: &str,
    space: NormedSpace<Rat>,
    grid: DyadicGrid,
    delta_interval: (Rat, Rat),
    rng: &mut ChaCha8Rng,
) -> Result<Vec<CheckResult>> {
    let dim = space.dim();
    let values: Vec<Rat> = (0..grid.cells() * dim)
        .map(|_| rat(rng.gen_range(-8i64..=8), 1 + rng.gen_range(0i64..4)))
        .collect();
    let f = VectorStepFunction::new(grid, space.clone(), values)?;
    let f_norm_sq = f.l2x_norm_sq();

    // Walsh coefficients of every coordinate, then one incremental
    // pass over the orders.
    let coeffs: Vec<Vec<Rat>> = (0..dim)
        .map(|j| Ok(fwht(&f.coordinate(j)?).coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let mut running = VectorStepFunction::zero(grid, space.clone());
    let mut sup_ratio_sq = rat(0, 1);
    let mut envelope = Vec::with_capacity(grid.cells() + 1);
    let mut current_min: Option<Rat> = None;
    let mut final_error_sq = rat(0, 1);
    for n in 0..=grid.cells() {
        if n > 0 {
            let signs = walsh_signs(n - 1, grid)?;
            for (k, &sign) in signs.iter().enumerate() {
                let cell = running.cell_mut(k);
                for (j, slot) in cell.iter_mut().enumerate() {
                    let term = coeffs[j][n - 1].clone();
                    *slot = if sign > 0 {
                        slot.clone() + term
                    } else {
                        slot.clone() - term
                    };
                }
            }
        }
        let error_sq = f.sub(&running)?.l2x_norm_sq();
        let sum_sq = running.l2x_norm_sq();
        if !f_norm_sq.is_zero() {
            let ratio_sq = sum_sq.div(&f_norm_sq);
            if ratio_sq > sup_ratio_sq {
                sup_ratio_sq = ratio_sq;
            }
        }
        let env = match &current_min {
            Some(m) if *m < error_sq => m.clone(),
            _ => error_sq.clone(),
        };
        current_min = Some(env.clone());
        envelope.push(env);
        if n == grid.cells() {
            final_error_sq = error_sq;
        }
    }

    let monotone = envelope.windows(2).all(|w| w[1] <= w[0]);
    let (lo, hi) = delta_interval;
    let sup_ratio = sup_ratio_sq.to_f64().sqrt();
    let mut checks = Vec::new();
    checks.push(CheckResult::new(
        format!("{label}: ||f - S_n f|| envelope is non-increasing"),
        monotone,
        format!("{} orders", envelope.len()),
    ));
    checks.push(CheckResult::new(
        format!("{label}: ||f - S_n f|| reaches exactly 0 at n = 2^q"),
        final_error_sq.is_zero(),
        format!("final squared error {final_error_sq}"),
    ));
    let hi_sq = hi.clone() * hi.clone();
    checks.push(CheckResult::new(
        format!("{label}: sup ||S_n f|| / ||f|| within the delta-max interval"),
        sup_ratio_sq <= hi_sq,
        format!(
            "observed {sup_ratio:.9}, interval [{:.9}, {:.9}]",
            lo.to_f64(),
            hi.to_f64()
        ),
    ));
    Ok(checks)
}

fn convergence_checks(params: &SuiteParams) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let q = params.q.min(8);
    let grid = DyadicGrid::new(q)?;
    let mut checks = Vec::new();

    // Euclidean probe: the identity has delta-max exactly 1.
    checks.extend(convergence_probe(
        "euclidean d=2",
        NormedSpace::<Rat>::euclidean(2),
        grid,
        (rat(1, 1), rat(1, 1)),
        &mut rng,
    )?);

    // Discretized-L_1 probe: certified interval
    // [Lmax_{2^p'} (embedding witnesses), Lmax_{2^q} (kernel bound)].
    let p_space = params.p.clamp(1, 4);
    let lower = LebesgueTable::new(DyadicGrid::new(p_space)?).max().0;
    let upper = LebesgueTable::new(grid).max().0;
    checks.extend(convergence_probe(
        &format!("l1-discretized dim 2^{p_space}"),
        NormedSpace::<Rat>::l1_discretized(p_space),
        grid,
        (lower, upper),
        &mut rng,
    )?);

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_default_parameters() {
        let params = SuiteParams {
            q: 5,
            p: 3,
            ..Default::default()
        };
        for suite in [
            Suite::Identities,
            Suite::Kernels,
            Suite::Theorem,
            Suite::Corollary3,
            Suite::Convergence,
        ] {
            let report = run_suite(suite, &params).unwrap();
            for check in &report.checks {
                assert!(
                    check.passed,
                    "{}: {} [{}]",
                    report.suite, check.name, check.detail
                );
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let params = SuiteParams {
            q: 4,
            p: 2,
            ..Default::default()
        };
        let a = run_suite(Suite::Convergence, &params).unwrap();
        let b = run_suite(Suite::Convergence, &params).unwrap();
        assert_eq!(a.checks, b.checks);
        let a = run_suite(Suite::Theorem, &params).unwrap();
        let b = run_suite(Suite::Theorem, &params).unwrap();
        assert_eq!(a.checks, b.checks);
    }

    #[test]
    fn suite_parse_round_trips() {
        for suite in [
            Suite::Identities,
            Suite::Kernels,
            Suite::Theorem,
            Suite::Corollary3,
            Suite::Convergence,
        ] {
            assert_eq!(Suite::parse(suite.name()), Some(suite));
        }
        assert_eq!(Suite::parse("bogus"), None);
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        let params = SuiteParams {
            q: 15,
            ..Default::default()
        };
        assert!(run_suite(Suite::Identities, &params).is_err());
    }
}

//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured quantities. Every tolerance is pinned here, in
//! code; the exact-arithmetic criteria run at zero tolerance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use walshkit::dyadic::DyadicGrid;
use walshkit::embedding::corollary_witness;
use walshkit::kernels::{dirichlet, dirichlet_factored_with, DirichletPowers, LebesgueTable};
use walshkit::linalg::Mat;
use walshkit::martingale::{
    mu_exact_euclidean, mu_lower_search_seeded, theorem_check, witness_to_martingale,
    witness_to_walsh, DyadicMartingale,
};
use walshkit::norms::{delta_norm, delta_quotient, AscentConfig, OperatorSpec, Witness};
use walshkit::scalar::{rat, Rat, Scalar};
use walshkit::spaces::{NormedSpace, VectorStepFunction};
use walshkit::verify::{run_suite, Suite, SuiteParams};

const SEED: u64 = walshkit::DEFAULT_SEED;

fn grid(q: u32) -> DyadicGrid {
    DyadicGrid::new(q).unwrap()
}

#[test]
fn criterion_01_kernel_factorization_exhaustive_q10() {
    let g = grid(10);
    let powers = DirichletPowers::new(g);
    for n in 1..g.cells() {
        let factored = dirichlet_factored_with(&powers, n).unwrap();
        let direct = dirichlet(n, g).unwrap();
        assert_eq!(
            factored.values(),
            direct.values(),
            "kernel mismatch at n={n}"
        );
    }
    println!("criterion 1 PASS: factorization exact for all 1 <= n < 1024 at q=10");
}

#[test]
fn criterion_02_lebesgue_growth_sandwich_p_up_to_12() {
    let mut last = String::new();
    for p in 1..=12u32 {
        let table = LebesgueTable::new(grid(p));
        let (value, argmax) = table.max();
        let lower = rat(p as i64, 8);
        let upper = rat(p as i64, 1);
        assert!(lower <= value, "p={p}: Lmax {value} below p/8");
        assert!(value <= upper, "p={p}: Lmax {value} above p");
        last = format!("Lmax_2^{p} = {value} (argmax n={argmax})");
    }
    println!("criterion 2 PASS: p/8 <= Lmax_2^p <= p exactly for p = 1..=12; {last}");
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Mat<f64> {
    Mat::new(
        rows,
        cols,
        (0..rows * cols).map(|_| rng.gen_range(-2.0..2.0)).collect(),
    )
    .unwrap()
}

fn random_weights(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    (0..dim).map(|_| rng.gen_range(0.25..2.0)).collect()
}

#[test]
fn criterion_03_delta_at_powers_of_two_equals_operator_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x03);

    // Euclidean: exact equality, cross-checked by Rayleigh probes.
    for case in 0..6u32 {
        let d = 1 + (case as usize % 4);
        let p = 1 + case % 6;
        let space = NormedSpace::<f64>::euclidean(d);
        let t =
            OperatorSpec::new(space.clone(), space.clone(), random_matrix(&mut rng, d, d)).unwrap();
        let g = grid(p);
        let est = delta_norm(&t, 1 << p, g, &AscentConfig::with_seed(SEED)).unwrap();
        let op_norm = t.operator_norm().unwrap();
        assert_eq!(est.lower, est.upper);
        assert!(
            (est.upper - op_norm).abs() <= 1e-12 * op_norm,
            "case {case}"
        );
        // The certified witness attains the value; random probes never
        // exceed it.
        if let Some(Witness::Function(f)) = &est.witness {
            let quot = delta_quotient(&t, f, 1 << p).unwrap();
            assert!(
                (quot - op_norm).abs() <= 1e-9 * op_norm,
                "witness quotient, case {case}"
            );
        } else {
            panic!("missing witness");
        }
        for _ in 0..200 {
            let values: Vec<f64> = (0..g.cells() * d)
                .map(|_| rng.gen_range(-1.0..1.0))
                .collect();
            let f = VectorStepFunction::new(g, space.clone(), values).unwrap();
            assert!(delta_quotient(&t, &f, 1 << p).unwrap() <= op_norm * (1.0 + 1e-9));
        }
    }

    // l1/linf pairs: witness lower and kernel upper agree within 1e-6
    // at n = 2^p.
    for case in 0..10u32 {
        let dx = 2 + (case as usize % 3);
        let dy = 2 + ((case as usize / 3) % 3);
        let p = 1 + case % 3;
        let domain = if case % 2 == 0 {
            NormedSpace::l1_weighted(random_weights(&mut rng, dx)).unwrap()
        } else {
            NormedSpace::<f64>::linf(dx)
        };
        let codomain = if (case / 2) % 2 == 0 {
            NormedSpace::l1_weighted(random_weights(&mut rng, dy)).unwrap()
        } else {
            NormedSpace::<f64>::linf(dy)
        };
        let t = OperatorSpec::new(domain, codomain, random_matrix(&mut rng, dy, dx)).unwrap();
        let est = delta_norm(
            &t,
            1 << p,
            grid(p),
            &AscentConfig::with_seed(SEED ^ case as u64),
        )
        .unwrap();
        assert!(
            est.upper - est.lower <= 1e-6 * est.upper,
            "case {case}: [{}, {}]",
            est.lower,
            est.upper
        );
        let op_norm = t.operator_norm().unwrap();
        assert!(
            (est.upper - op_norm).abs() <= 1e-9 * op_norm,
            "upper is ||T||, case {case}"
        );
    }
    println!("criterion 3 PASS: delta(T|W_2^p) = ||T|| exactly (euclidean) and to 1e-6 (l1/linf)");
}

#[test]
fn criterion_04_embedding_witness_reproduces_lebesgue_constants() {
    for p in 2..=4u32 {
        let table = LebesgueTable::new(grid(p));
        for n in 1..(1usize << p) {
            let (_, ratio) = corollary_witness(p, n).unwrap();
            assert_eq!(&ratio, table.constant(n), "p={p} n={n}");
        }
    }
    println!("criterion 4 PASS: ||S_n F|| / ||F|| = L_n exactly for p = 2,3,4 and all n < 2^p");
}

#[test]
fn criterion_05_subset_conversion_identity_per_norm_tag() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x05);
    for tag in 0..3usize {
        let mut worst: f64 = 0.0;
        for case in 0..1000usize {
            let p = 1 + (case % 6) as u32;
            let g = grid(p);
            let dx = 1 + case % 3;
            let dy = 1 + (case / 3) % 3;
            let domain = match tag {
                0 => NormedSpace::<f64>::euclidean(dx),
                1 => NormedSpace::l1_weighted(random_weights(&mut rng, dx)).unwrap(),
                _ => NormedSpace::<f64>::linf(dx),
            };
            let codomain = match tag {
                0 => NormedSpace::<f64>::euclidean(dy),
                1 => NormedSpace::l1_weighted(random_weights(&mut rng, dy)).unwrap(),
                _ => NormedSpace::<f64>::linf(dy),
            };
            let t = OperatorSpec::new(domain.clone(), codomain, random_matrix(&mut rng, dy, dx))
                .unwrap();
            let values: Vec<f64> = (0..g.cells() * dx)
                .map(|_| rng.gen_range(-1.0..1.0))
                .collect();
            let final_level = VectorStepFunction::new(g, domain, values).unwrap();
            let m = DyadicMartingale::from_final(&final_level, p).unwrap();
            let mask: u64 = rng.gen_range(0..(1u64 << p));
            let subset: Vec<u32> = (0..p).filter(|i| mask & (1 << i) != 0).collect();
            let conv = witness_to_walsh(&t, &m, &subset).unwrap();
            let lhs = conv.martingale_side_sq.sqrt();
            let rhs = conv.walsh_side_sq.sqrt();
            let dev = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0);
            worst = worst.max(dev);
            assert!(dev <= 1e-12, "tag {tag} case {case}: deviation {dev:e}");
            assert!(conv.identity_holds(1e-12));
        }
        println!("criterion 5 tag {tag}: 1000 cases, worst relative deviation {worst:.3e}");
    }
    println!("criterion 5 PASS: subset-sum norm = ||T S_n(M_p w_n)|| to 1e-12, 1000 cases/tag");
}

#[test]
fn criterion_06_sandwich_exact_regime_20_euclidean_operators() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x06);
    for case in 0..20u32 {
        let dx = 1 + (case as usize % 4);
        let dy = 1 + ((case as usize / 4) % 4);
        // Depth up to 6, kept where the assembled operator stays at
        // desk scale (dims <= 4, p <= 6 per the exact regime).
        let p = match dx.max(dy) {
            1 => 1 + case % 6,
            2 => 1 + case % 6,
            3 => 1 + case % 5,
            _ => 1 + case % 4,
        };
        let domain = NormedSpace::<f64>::euclidean(dx);
        let codomain = NormedSpace::<f64>::euclidean(dy);
        let t = OperatorSpec::new(domain, codomain, random_matrix(&mut rng, dy, dx)).unwrap();
        let report =
            theorem_check(&t, p, &AscentConfig::with_seed(SEED ^ case as u64), 1e-9).unwrap();
        let op_norm = t.operator_norm().unwrap();
        assert!(report.exact_regime);
        for r in &report.relations {
            assert!(
                r.passed,
                "case {case} (dx={dx} dy={dy} p={p}): {} [{} vs {}]",
                r.name, r.lhs, r.rhs
            );
        }
        assert!(
            (report.delta_max.upper - op_norm).abs() <= 1e-9 * op_norm,
            "case {case}"
        );
        assert!(
            (report.mu.upper - op_norm).abs() <= 1e-9 * op_norm,
            "case {case}"
        );
        assert!(
            report.delta_max.upper <= report.mu.lower * (1.0 + 1e-9),
            "case {case}"
        );
        assert!(
            report.mu.upper <= 2.0 * report.delta_max.lower * (1.0 + 1e-9),
            "case {case}"
        );
    }
    println!("criterion 6 PASS: delta-max = mu_p = ||T|| and the sandwich, 20 euclidean operators");
}

#[test]
fn criterion_07_sandwich_estimated_regime_l1_identity() {
    // Exact route: rational witness conversions for the discretized-L1
    // identity at p = 4.
    let p = 4u32;
    let table = LebesgueTable::new(grid(p));
    let (lmax, _) = table.max();
    let lmax_sq = lmax.clone() * lmax.clone();
    let id = OperatorSpec::<Rat>::identity(NormedSpace::<Rat>::l1_discretized(p));
    let mut best_sq = rat(0, 1);
    for n in 1..(1usize << p) {
        let (witness, ratio) = corollary_witness(p, n).unwrap();
        assert_eq!(&ratio, table.constant(n));
        let converted = witness_to_martingale(&id, &witness, n).unwrap();
        assert!(converted.splitting_holds(0.0), "n={n}");
        // Each conversion certifies at least its own Lebesgue constant
        // (the denominator is a power-of-two partial sum, norm one on
        // this witness).
        assert!(
            converted.bound_sq >= ratio.clone() * ratio.clone(),
            "n={n}: certified bound below L_n"
        );
        // Righthand falsifier: every certified bound is <= 2 Lmax.
        assert!(
            converted.bound_sq <= rat(4, 1) * lmax_sq.clone(),
            "n={n}: certified bound exceeds 2 Lmax"
        );
        if converted.bound_sq > best_sq {
            best_sq = converted.bound_sq.clone();
        }
    }
    // Lefthand realized constructively: the best conversion reaches
    // Lmax exactly.
    assert!(
        best_sq >= lmax_sq,
        "witnessed mu lower bound misses Lmax: {best_sq} < {lmax_sq}"
    );

    // Float route: the seeded search agrees within 1e-9.
    let idf = OperatorSpec::<f64>::identity(NormedSpace::<f64>::l1_discretized(p));
    let g = grid(p);
    let domain = idf.domain().clone();
    let seeds = move |n: usize| {
        walshkit::embedding::l1_delta_seed(&domain, g, n)
            .into_iter()
            .collect::<Vec<_>>()
    };
    let est =
        mu_lower_search_seeded(&idf, p, &AscentConfig::with_seed(SEED ^ 0x07), &seeds).unwrap();
    let lmax_f = lmax.to_f64();
    assert!(
        est.lower >= lmax_f * (1.0 - 1e-9),
        "search lower {} < Lmax {}",
        est.lower,
        lmax_f
    );
    assert!(est.lower <= 2.0 * lmax_f * (1.0 + 1e-9));
    assert!(est.upper <= 2.0 * lmax_f * (1.0 + 1e-9));

    // Growth corollary for p = 2, 3, 4: p/8 <= mu_p(L_1) <= 2p via the
    // same certificates, in exact arithmetic.
    for pp in 2..=4u32 {
        let tbl = LebesgueTable::new(grid(pp));
        let (lm, _) = tbl.max();
        let idp = OperatorSpec::<Rat>::identity(NormedSpace::<Rat>::l1_discretized(pp));
        let mut best = rat(0, 1);
        for n in 1..(1usize << pp) {
            let (witness, _) = corollary_witness(pp, n).unwrap();
            let conv = witness_to_martingale(&idp, &witness, n).unwrap();
            if conv.bound_sq > best {
                best = conv.bound_sq.clone();
            }
        }
        let lower = rat(pp as i64, 8);
        assert!(best >= lower.clone() * lower, "p={pp}: mu lower below p/8");
        assert!(
            rat(2, 1) * lm <= rat(2 * pp as i64, 1),
            "p={pp}: mu upper above 2p"
        );
    }
    println!("criterion 7 PASS: Lmax <= witnessed mu_4 <= 2 Lmax (l1 identity), p/8 <= mu_p <= 2p for p=2,3,4");
}

#[test]
fn criterion_08_identity_suite_q8() {
    let params = SuiteParams {
        q: 8,
        p: 3,
        seed: SEED,
        ..Default::default()
    };
    let report = run_suite(Suite::Identities, &params).unwrap();
    for check in &report.checks {
        assert!(check.passed, "{} [{}]", check.name, check.detail);
        println!("criterion 8 check: {} -- {}", check.name, check.detail);
    }
    println!("criterion 8 PASS: identity suite at q=8");
}

#[test]
fn criterion_09_convergence_probe_q8() {
    let params = SuiteParams {
        q: 8,
        p: 4,
        seed: SEED,
        ..Default::default()
    };
    let report = run_suite(Suite::Convergence, &params).unwrap();
    for check in &report.checks {
        assert!(check.passed, "{} [{}]", check.name, check.detail);
        println!("criterion 9 check: {} -- {}", check.name, check.detail);
    }
    println!("criterion 9 PASS: ||f - S_n f|| hits exactly 0 at n=2^8; sup ratio inside the delta-max interval");
}

#[test]
fn criterion_06_supplement_mu_exact_is_depth_monotone() {
    // Monotonicity of mu_p in p for a fixed operator, part of the
    // exact-regime contract.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x66);
    let e2 = NormedSpace::<f64>::euclidean(2);
    let t = OperatorSpec::new(e2.clone(), e2, random_matrix(&mut rng, 2, 2)).unwrap();
    let mut prev = 0.0f64;
    for p in 0..=5u32 {
        let est = mu_exact_euclidean(&t, p).unwrap();
        assert!(est.upper >= prev - 1e-12, "p={p}");
        prev = est.upper;
    }
    println!("criterion 6 supplement PASS: mu_p non-decreasing in p");
}

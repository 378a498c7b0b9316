//! Acceptance suite: one test per criterion. Each prints a PASS/FAIL line
//! with its runtime and fails if the check fails or exceeds its budget.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qcumulant::freepoisson::{
    poisson_cumulants_log, poisson_cumulants_mobius, poisson_cumulants_tutte, poisson_moments,
};
use qcumulant::graphs::{
    count_root_connected, count_uniquesource_acyclic, normalized_partition_sum, partition_sum_u,
    spanning_tree_count, Multigraph, RootedMultigraph, TutteEngine, TutteEvaluator,
};
use qcumulant::qsemicircular::{
    cumulants_log, cumulants_mobius, cumulants_tutte, free_cumulants_connected,
    free_cumulants_recursion, lassalle_sequence, moments_cf, moments_matchings, pyramid_count,
    verify_q2,
};
use qcumulant::verify::{graph_population, verify_all};
use qcumulant::IntPoly;

type Outcome = Result<(), String>;

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn known_values() -> Outcome {
    let m = moments_matchings(4);
    expect_eq("m_4", m.get(4), &poly(&[2, 1]))?;
    expect_eq(
        "m_4 (continued fraction)",
        moments_cf(4).get(4),
        &poly(&[2, 1]),
    )?;
    for t in [
        cumulants_log(8).map_err(|e| e.to_string())?,
        cumulants_mobius(8).map_err(|e| e.to_string())?,
    ] {
        expect_eq("k_2", t.k(2), &IntPoly::one())?;
        expect_eq("k_4", t.k(4), &poly(&[-1, 1]))?;
        expect_eq("k_6", t.k(6), &poly(&[5, -9, 3, 1]))?;
        expect_eq("k~_2", t.k_tilde(2), &IntPoly::one())?;
        expect_eq("k~_4", t.k_tilde(4), &IntPoly::one())?;
        expect_eq("k~_6", t.k_tilde(6), &poly(&[5, 1]))?;
        expect_eq("k~_8", t.k_tilde(8), &poly(&[56, 28, 7, 1]))?;
    }
    for c in [
        free_cumulants_connected(6).map_err(|e| e.to_string())?,
        free_cumulants_recursion(6).map_err(|e| e.to_string())?,
    ] {
        expect_eq("c_2", &c[2], &IntPoly::one())?;
        expect_eq("c_4", &c[4], &poly(&[0, 1]))?;
        expect_eq("c_6", &c[6], &poly(&[0, 0, 3, 1]))?;
    }
    Ok(())
}

fn cumulant_tutte_theorem() -> Outcome {
    let log = cumulants_log(12).map_err(|e| e.to_string())?;
    let graph = cumulants_tutte(12).map_err(|e| e.to_string())?;
    for n in (2..=12).step_by(2) {
        expect_eq(&format!("k~_{n}"), log.k_tilde(n), &graph[n])?;
        if !graph[n].is_nonnegative() {
            return Err(format!("k~_{n} = {} has a negative coefficient", graph[n]));
        }
    }
    expect_eq("k~_10", &graph[10], &poly(&[1092, 918, 450, 165, 45, 9, 1]))?;
    expect_eq(
        "k~_12",
        &graph[12],
        &poly(&[32670, 39105, 28017, 15697, 7337, 2937, 1001, 286, 66, 11, 1]),
    )
}

fn population() -> Vec<Multigraph> {
    graph_population(0)
}

fn partition_sum_oracle() -> Outcome {
    let engine = TutteEngine::new();
    let graphs = population();
    let connected = graphs.iter().filter(|g| g.is_connected()).count();
    if connected < 1000 || graphs.len() - connected < 100 {
        return Err(format!(
            "population too thin: {} graphs, {connected} connected",
            graphs.len()
        ));
    }
    for g in &graphs {
        if g.is_connected() {
            let t = engine.tutte_1q(g).map_err(|e| e.to_string())?;
            let w = normalized_partition_sum(g).map_err(|e| format!("{g:?}: {e}"))?;
            expect_eq(&format!("{g:?}"), w, t)?;
        } else {
            expect_eq(
                &format!("{g:?}"),
                partition_sum_u(g).map_err(|e| e.to_string())?,
                IntPoly::zero(),
            )?;
        }
    }
    Ok(())
}

fn orientation_theorems() -> Outcome {
    let engine = TutteEngine::new();
    for g in population().iter().filter(|g| g.is_connected()) {
        let t = engine.tutte_1q(g).map_err(|e| e.to_string())?;
        for root in 0..g.n_vertices() {
            let rg = RootedMultigraph::new(g.clone(), root).map_err(|e| e.to_string())?;
            let acyclic = count_uniquesource_acyclic(&rg).map_err(|e| e.to_string())?;
            expect_eq(
                &format!("T(1,0) of {g:?} root {root}"),
                BigInt::from(acyclic),
                t.eval_int(0),
            )?;
            let reach = count_root_connected(&rg).map_err(|e| e.to_string())?;
            expect_eq(
                &format!("T(1,2) of {g:?} root {root}"),
                BigInt::from(reach),
                t.eval_int(2),
            )?;
        }
        expect_eq(
            &format!("T(1,1) of {g:?}"),
            BigInt::from(spanning_tree_count(g)),
            t.eval_int(1),
        )?;
    }
    Ok(())
}

fn lassalle() -> Outcome {
    let counted = lassalle_sequence(4).map_err(|e| e.to_string())?;
    expect_eq("orientation counts", counted, vec![1, 1, 5, 56])?;
    let t = cumulants_log(12).map_err(|e| e.to_string())?;
    let at_zero: Vec<BigInt> = (1..=6).map(|n| t.k_tilde(2 * n).eval_int(0)).collect();
    let want: Vec<BigInt> = [1, 1, 5, 56, 1092, 32670].map(BigInt::from).to_vec();
    expect_eq("k~(0)", at_zero.clone(), want)?;
    if at_zero.windows(2).any(|w| w[0] > w[1]) {
        return Err(format!("not monotone: {at_zero:?}"));
    }
    for n in 1..=5 {
        let x = pyramid_count(n).map_err(|e| e.to_string())?;
        expect_eq(
            &format!("pyramids n={n}"),
            BigInt::from(x),
            &at_zero[n - 1] * BigInt::from(n),
        )?;
    }
    Ok(())
}

fn q2_formula() -> Outcome {
    let rows = verify_q2(4).map_err(|e| e.to_string())?;
    if rows.len() != 20 {
        return Err(format!("expected 20 rows, got {}", rows.len()));
    }
    match rows.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(()),
    }
}

fn free_poisson() -> Outcome {
    let log = poisson_cumulants_log(8).map_err(|e| e.to_string())?;
    expect_eq(
        "mobius route",
        poisson_cumulants_mobius(8).map_err(|e| e.to_string())?,
        log.clone(),
    )?;
    expect_eq(
        "tutte route",
        poisson_cumulants_tutte(8).map_err(|e| e.to_string())?,
        log.clone(),
    )?;
    let lam = poly(&[0, 1]);
    expect_eq(
        "k_1..k_4",
        &log[1..=4],
        &[lam.clone(), lam.clone(), lam, poly(&[0, 1, -1])][..],
    )?;
    let m = poisson_moments(10);
    let catalan: Vec<BigInt> = (0..=10).map(|n| m.get(n).eval_int(1)).collect();
    let want: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
        .map(BigInt::from)
        .to_vec();
    expect_eq("m_n(1)", catalan, want)
}

fn determinism() -> Outcome {
    let run = |threads: usize| -> Result<String, String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        let report = pool
            .install(|| verify_all(8, 11))
            .map_err(|e| e.to_string())?;
        if !report.passed {
            return Err(format!("verify failed with {threads} threads"));
        }
        serde_json::to_string(&report).map_err(|e| e.to_string())
    };
    let one = run(1)?;
    for threads in [4, 1, 4] {
        if run(threads)? != one {
            return Err(format!("report with {threads} threads differs"));
        }
    }
    Ok(())
}

/// Runs one criterion, prints its PASS/FAIL line and fails the test on FAIL.
fn run(name: &str, check: fn() -> Outcome, budget_secs: u64) {
    let start = Instant::now();
    let outcome = check();
    let took = start.elapsed();
    let outcome = outcome.and_then(|()| {
        if took > Duration::from_secs(budget_secs) {
            Err(format!("took {took:?}, budget {budget_secs}s"))
        } else {
            Ok(())
        }
    });
    match outcome {
        Ok(()) => println!("PASS criterion {name} ({:.2}s)", took.as_secs_f64()),
        Err(msg) => {
            println!("FAIL criterion {name} ({:.2}s): {msg}", took.as_secs_f64());
            panic!("criterion {name} failed: {msg}");
        }
    }
}

#[test]
fn criterion_1_known_values() {
    run("1 known small values", known_values, 10);
}

#[test]
fn criterion_2_cumulants_as_tutte_sums() {
    run(
        "2 cumulants as Tutte sums, 2n <= 12",
        cumulant_tutte_theorem,
        300,
    );
}

#[test]
fn criterion_3_partition_sum_oracle() {
    run(
        "3 partition-sum oracle on the graph population",
        partition_sum_oracle,
        120,
    );
}

#[test]
fn criterion_4_orientation_counts() {
    run(
        "4 orientation counts vs T(1,0), T(1,2), T(1,1)",
        orientation_theorems,
        120,
    );
}

#[test]
fn criterion_5_lassalle_and_pyramids() {
    run("5 Lassalle sequence and pyramids", lassalle, 180);
}

#[test]
fn criterion_6_q2_exponential_formula() {
    run("6 q = 2 exponential formula, 2n <= 8", q2_formula, 120);
}

#[test]
fn criterion_7_free_poisson() {
    run(
        "7 free Poisson routes and Catalan moments",
        free_poisson,
        300,
    );
}

#[test]
fn criterion_8_determinism() {
    run("8 determinism across thread counts", determinism, 600);
}

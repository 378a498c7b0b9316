//! Runs every identity the library knows about and collects one report row
//! per identity and size. Rows appear in a fixed order and parallel work is
//! merged in index order, so a report depends only on its configuration.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinat::enumerate_matchings;
use crate::exactpoly::IntPoly;
use crate::freepoisson::{
    poisson_cumulants_log, poisson_cumulants_mobius, poisson_cumulants_tutte_with, poisson_moments,
    poisson_moments_nc,
};
use crate::graphs::{
    count_root_connected, count_uniquesource_acyclic, crossing_graph, normalized_partition_sum,
    partition_sum_u, population, spanning_tree_count, Multigraph, RootedMultigraph, TutteEngine,
    TutteEvaluator,
};
use crate::qsemicircular::{
    cumulants_log, cumulants_mobius, cumulants_tutte_with, free_cumulants_connected,
    free_cumulants_recursion, lassalle_sequence, moments_cf, moments_matchings, pyramid_count,
    verify_q2_with, w_of_matching,
};
use crate::report::{CheckRow, Report};
use crate::{Error, Result};

/// Vertex and edge-slot bounds of the exhaustive graph population.
pub const EXHAUSTIVE_VERTICES: usize = 4;
pub const EXHAUSTIVE_EDGES: usize = 6;
/// Size and bounds of the seeded random graph population.
pub const RANDOM_GRAPHS: usize = 200;
pub const RANDOM_VERTICES: usize = 6;
pub const RANDOM_EDGES: usize = 9;
/// Default cap for routes that sum over the partition lattice.
pub const LATTICE_DEFAULT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest number of points for matching-based identities.
    pub max_n: usize,
    /// Largest number of points for lattice-sum identities.
    pub lattice_max_n: usize,
    /// Seed of the random graph population.
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(max_n: usize, seed: u64) -> Self {
        VerifyConfig {
            max_n,
            lattice_max_n: max_n.min(LATTICE_DEFAULT),
            seed,
        }
    }
}

/// The full suite with the default Tutte engine.
pub fn verify_all(max_n: usize, seed: u64) -> Result<Report> {
    verify_with(&VerifyConfig::new(max_n, seed), &TutteEngine::new())
}

pub fn verify_with(config: &VerifyConfig, tutte: &dyn TutteEvaluator) -> Result<Report> {
    if config.max_n < 2 {
        return Err(Error::OrderTooSmall {
            min: 2,
            got: config.max_n,
        });
    }
    let mut rows = Vec::new();
    semicircular_rows(config, tutte, &mut rows)?;
    graph_rows(&graph_population(config.seed), tutte, &mut rows)?;
    poisson_rows(config, tutte, &mut rows)?;
    Ok(Report::new(rows))
}

fn even_up_to(n: usize) -> impl Iterator<Item = usize> {
    (1..=n / 2).map(|i| 2 * i)
}

fn semicircular_rows(
    config: &VerifyConfig,
    tutte: &dyn TutteEvaluator,
    rows: &mut Vec<CheckRow>,
) -> Result<()> {
    let max_n = config.max_n;
    let lattice_n = config.lattice_max_n.max(2);

    let m = moments_cf(max_n);
    let m_brute = moments_matchings(max_n);
    for n in even_up_to(max_n) {
        rows.push(CheckRow::compare(
            "moments-cf-vs-matchings",
            n,
            m.get(n),
            m_brute.get(n),
        ));
        let half = n / 2;
        rows.push(CheckRow::compare(
            "moments-degree",
            n,
            &m.get(n).degree().unwrap_or(0),
            &(half * (half - 1) / 2),
        ));
    }

    let k = cumulants_log(max_n)?;
    let k_lattice = cumulants_mobius(lattice_n)?;
    for n in 1..=lattice_n {
        rows.push(CheckRow::compare(
            "cumulants-mobius-vs-log",
            n,
            k_lattice.k(n),
            k.k(n),
        ));
    }
    for n in even_up_to(max_n) {
        let expect = BigInt::from((n == 2) as i32);
        rows.push(CheckRow::compare(
            "gaussian-limit",
            n,
            &k.k(n).eval_int(1),
            &expect,
        ));
    }

    let k_graph = cumulants_tutte_with(max_n, tutte)?;
    for n in even_up_to(max_n) {
        rows.push(CheckRow::compare(
            "cumultutte",
            n,
            k.k_tilde(n),
            &k_graph[n],
        ));
        rows.push(CheckRow::new(
            "cumultutte-nonnegative",
            n,
            k_graph[n].is_nonnegative(),
            k_graph[n].to_string(),
            "nonnegative coefficients".to_string(),
        ));
    }

    for n in even_up_to(lattice_n) {
        let sigmas: Vec<_> = enumerate_matchings(n)?.collect();
        let per: Vec<(IntPoly, IntPoly)> = sigmas
            .par_iter()
            .map(|s| Ok((w_of_matching(s), partition_sum_u(&crossing_graph(s).graph)?)))
            .collect::<Result<_>>()?;
        let bad = sigmas.iter().zip(&per).find(|(_, (w, u))| w != u);
        rows.push(match bad {
            None => CheckRow::new(
                "w-vs-graph-sum",
                n,
                true,
                format!("{} matchings", sigmas.len()),
                format!("{} matchings", sigmas.len()),
            ),
            Some((s, (w, u))) => CheckRow::new(
                "w-vs-graph-sum",
                n,
                false,
                format!("{s}: {w}"),
                u.to_string(),
            ),
        });
        let total: IntPoly = per.into_iter().map(|(w, _)| w).sum();
        rows.push(CheckRow::compare("w-sum-vs-cumulant", n, &total, k.k(n)));
    }

    let c = free_cumulants_connected(max_n)?;
    let c_rec = free_cumulants_recursion(max_n)?;
    for n in 1..=max_n {
        rows.push(CheckRow::compare(
            "free-cumulants-connected-vs-recursion",
            n,
            &c[n],
            &c_rec[n],
        ));
    }

    let half = max_n / 2;
    let lassalle = lassalle_sequence(half)?;
    for (i, &x) in lassalle.iter().enumerate() {
        let n = 2 * (i + 1);
        let at_zero = k.k_tilde(n).eval_int(0);
        rows.push(CheckRow::compare(
            "lassalle-orientations",
            n,
            &BigInt::from(x),
            &at_zero,
        ));
        if i > 0 {
            let prev = BigInt::from(lassalle[i - 1]);
            rows.push(CheckRow::new(
                "lassalle-monotone",
                n,
                prev <= at_zero,
                prev.to_string(),
                at_zero.to_string(),
            ));
        }
        let pyramids = BigInt::from(pyramid_count(i + 1)?);
        rows.push(CheckRow::compare(
            "pyramid-count",
            n,
            &pyramids,
            &(at_zero * BigInt::from(i + 1)),
        ));
    }

    rows.extend(verify_q2_with(half, tutte)?);
    Ok(())
}

/// Exhaustive small multigraphs followed by the seeded random ones.
pub fn graph_population(seed: u64) -> Vec<Multigraph> {
    let mut graphs = population::exhaustive(EXHAUSTIVE_VERTICES, EXHAUSTIVE_EDGES);
    graphs.extend(population::random(
        seed,
        RANDOM_GRAPHS,
        RANDOM_VERTICES,
        RANDOM_EDGES,
    ));
    graphs
}

/// Outcome of the graph identities on one graph: the first mismatch per
/// identity, rendered.
#[derive(Default)]
struct GraphOutcome {
    partition_sum: Option<(String, String)>,
    acyclic: Option<(String, String)>,
    root_connected: Option<(String, String)>,
    spanning: Option<(String, String)>,
}

fn render(g: &Multigraph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

fn check_graph(g: &Multigraph, tutte: &dyn TutteEvaluator) -> Result<GraphOutcome> {
    let mut out = GraphOutcome::default();
    if !g.is_connected() {
        let u = partition_sum_u(g)?;
        if !u.is_zero() {
            out.partition_sum = Some((format!("{}: {u}", render(g)), "0".to_string()));
        }
        return Ok(out);
    }
    let t = tutte.tutte_1q(g)?;
    let normalized = normalized_partition_sum(g);
    if normalized.as_ref() != Ok(&t) {
        let lhs = match normalized {
            Ok(p) => p.to_string(),
            Err(e) => e.to_string(),
        };
        out.partition_sum = Some((format!("{}: {lhs}", render(g)), t.to_string()));
    }
    let (t0, t2) = (t.eval_int(0), t.eval_int(2));
    for root in 0..g.n_vertices() {
        let rg = RootedMultigraph::new(g.clone(), root)?;
        let a = BigInt::from(count_uniquesource_acyclic(&rg)?);
        if a != t0 && out.acyclic.is_none() {
            out.acyclic = Some((format!("{} root {root}: {a}", render(g)), t0.to_string()));
        }
        let r = BigInt::from(count_root_connected(&rg)?);
        if r != t2 && out.root_connected.is_none() {
            out.root_connected = Some((format!("{} root {root}: {r}", render(g)), t2.to_string()));
        }
    }
    let trees = BigInt::from(spanning_tree_count(g));
    let t1 = t.eval_int(1);
    if trees != t1 {
        out.spanning = Some((format!("{}: {trees}", render(g)), t1.to_string()));
    }
    Ok(out)
}

fn graph_rows(
    graphs: &[Multigraph],
    tutte: &dyn TutteEvaluator,
    rows: &mut Vec<CheckRow>,
) -> Result<()> {
    let outcomes: Vec<GraphOutcome> = graphs
        .par_iter()
        .map(|g| check_graph(g, tutte))
        .collect::<Result<_>>()?;
    let max_v = graphs.iter().map(Multigraph::n_vertices).max().unwrap_or(0);
    type Pick = fn(&GraphOutcome) -> &Option<(String, String)>;
    let identities: [(&str, Pick, bool); 4] = [
        ("graph-partition-sum", |o| &o.partition_sum, false),
        ("graph-acyclic-vs-t10", |o| &o.acyclic, true),
        ("graph-root-connected-vs-t12", |o| &o.root_connected, true),
        ("graph-spanning-trees-vs-t11", |o| &o.spanning, true),
    ];
    for (name, pick, connected_only) in identities {
        for v in 1..=max_v {
            let idx: Vec<usize> = (0..graphs.len())
                .filter(|&i| {
                    graphs[i].n_vertices() == v && (!connected_only || graphs[i].is_connected())
                })
                .collect();
            let summary = format!("{} graphs", idx.len());
            rows.push(
                match idx.iter().find_map(|&i| pick(&outcomes[i]).as_ref()) {
                    None => CheckRow::new(name, v, true, summary.clone(), summary),
                    Some((lhs, rhs)) => CheckRow::new(name, v, false, lhs.clone(), rhs.clone()),
                },
            );
        }
    }
    Ok(())
}

fn poisson_rows(
    config: &VerifyConfig,
    tutte: &dyn TutteEvaluator,
    rows: &mut Vec<CheckRow>,
) -> Result<()> {
    let max_n = config.max_n;
    let lattice_n = config.lattice_max_n.max(1);
    let m = poisson_moments(max_n);
    let m_nc = poisson_moments_nc(max_n);
    let mut catalan = BigInt::from(1);
    for n in 1..=max_n {
        rows.push(CheckRow::compare(
            "poisson-narayana-vs-noncrossing",
            n,
            m.get(n),
            m_nc.get(n),
        ));
        // C_n = C_{n-1} * 2(2n-1) / (n+1)
        catalan = catalan * BigInt::from(2 * (2 * n - 1)) / BigInt::from(n + 1);
        rows.push(CheckRow::compare(
            "poisson-catalan",
            n,
            &m.get(n).eval_int(1),
            &catalan,
        ));
    }
    let log = poisson_cumulants_log(max_n)?;
    let mobius = poisson_cumulants_mobius(lattice_n)?;
    let graph = poisson_cumulants_tutte_with(lattice_n, tutte)?;
    for n in 1..=lattice_n {
        rows.push(CheckRow::compare(
            "poisson-log-vs-mobius",
            n,
            &log[n],
            &mobius[n],
        ));
        rows.push(CheckRow::compare(
            "poisson-log-vs-tutte",
            n,
            &log[n],
            &graph[n],
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphError;
    use crate::report::Status;

    /// Adds 1 to every answer of the real engine.
    struct OffByOne;

    impl TutteEvaluator for OffByOne {
        fn tutte_1q(&self, g: &Multigraph) -> Result<IntPoly, GraphError> {
            Ok(&TutteEngine::uncached().tutte_1q(g)? + &IntPoly::one())
        }
    }

    #[test]
    fn suite_passes_at_six() {
        let report = verify_all(6, 1).unwrap();
        for r in &report.rows {
            assert!(r.passed(), "{r}");
        }
        assert!(report.passed);
    }

    #[test]
    fn depth_gating() {
        let report = verify_all(4, 1).unwrap();
        assert!(report
            .rows
            .iter()
            .any(|r| r.check == "q2-bijection" && r.n == 4));
        assert!(!report
            .rows
            .iter()
            .any(|r| r.check.starts_with("q2") && r.n > 4));
        assert!(!report
            .rows
            .iter()
            .any(|r| r.check == "cumultutte" && r.n > 4));
    }

    #[test]
    fn corrupted_engine_is_caught() {
        let report = verify_with(&VerifyConfig::new(6, 1), &OffByOne).unwrap();
        assert!(!report.passed);
        let bad: Vec<_> = report
            .rows
            .iter()
            .filter(|r| r.check == "cumultutte" && r.status == Status::Fail)
            .collect();
        assert_eq!(bad.len(), 3);
        let six = bad.iter().find(|r| r.n == 6).unwrap();
        assert_eq!(six.lhs, "5 + q");
        // four connected matchings, each off by one
        assert_eq!(six.rhs, "9 + q");
    }

    #[test]
    fn too_small() {
        assert!(matches!(
            verify_all(1, 0),
            Err(Error::OrderTooSmall { min: 2, got: 1 })
        ));
    }
}

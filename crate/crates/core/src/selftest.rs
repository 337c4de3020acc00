//! Seeded property suites, runnable from the command line.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::completion::{complete, decompose_2stars, Outcome};
use crate::design::{binomial2, design_exists, is_admissible, threshold_u, PartialDesign};
use crate::extremal::{check_blocked_edge, gen_uncompletable};
use crate::graph::Graph;
use crate::oracle::{has_completion, Answer, DEFAULT_BUDGET};
use crate::precentral::delta_t;
use crate::random::{random_graph, random_partial_design, random_precentral, trim_to_multiple};
use crate::realization::{realize, subset_check, verify_decomposition, Realization, SubsetCheck, SUBSET_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub k_max: usize,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Default)]
pub struct Suite {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, ..Default::default() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub suites: Vec<Suite>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        for s in &self.suites {
            let status = if s.failures.is_empty() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {:<16} {} checks", s.name, s.checked)?;
            for msg in s.failures.iter().take(5) {
                writeln!(f, "     {msg}")?;
            }
        }
        Ok(())
    }
}

/// `u(ak+b, k)` from the quotient/remainder form with `b ∈ {1,…,k}`.
fn threshold_by_parts(n: usize, k: usize) -> i64 {
    let a = ((n - 1) / k) as i64;
    let b = n - (n - 1) / k * k;
    if b == 1 {
        2 * a - 2
    } else {
        2 * a - 1
    }
}

fn orders(k: usize, lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo.max(2)..=hi).filter(move |&n| is_admissible(n, k))
}

pub fn run(cfg: &Config) -> Report {
    let mut report = Report::default();
    if cfg.trials == 0 {
        report.warnings.push("trials = 0: randomized suites check nothing".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ks = 2..=cfg.k_max.max(2);

    let mut s = Suite::new("threshold");
    for k in ks.clone() {
        for n in orders(k, 2, cfg.n_max) {
            let u = threshold_u(n, k);
            s.check(u == threshold_by_parts(n, k), || format!("u({n},{k}) forms disagree"));
            if n >= 2 * k {
                s.check(u >= 1 && (k as i64) * u < binomial2(n) as i64, || format!("u({n},{k}) = {u} out of range"));
            }
        }
    }
    report.suites.push(s);

    let mut s = Suite::new("completion");
    for k in ks.clone() {
        for n in orders(k, 2 * k, cfg.n_max) {
            let u = threshold_u(n, k) as usize;
            for _ in 0..cfg.trials {
                let m = rng.gen_range(0..=u);
                let d = random_partial_design(n, k, m, &mut rng).expect("below threshold a star always fits");
                s.check(completes(&d), || format!("no completion for {}", d.to_json().replace('\n', "")));
            }
        }
    }
    report.suites.push(s);

    let mut s = Suite::new("tightness");
    for k in ks.clone() {
        for n in orders(k, 2, cfg.n_max) {
            let d = gen_uncompletable(n, k).expect("admissible order");
            let ok = d.validate().is_ok()
                && d.stars.len() as i64 == threshold_u(n, k) + 1
                && check_blocked_edge(&d).is_ok_and(|c| c.is_some());
            s.check(ok, || format!("gen_uncompletable({n},{k}) not certified"));
        }
    }
    report.suites.push(s);

    let mut s = Suite::new("realizability");
    for _ in 0..cfg.trials {
        let k = rng.gen_range(ks.clone());
        let n = rng.gen_range(2..=10);
        let g = trim_to_multiple(&random_graph(n, rng.gen_range(0.2..0.9), &mut rng), k, &mut rng);
        let p = random_precentral(&g, k, &mut rng);
        let flow = realize(&g, k, &p).expect("precentral by construction");
        let cut = subset_check(&g, k, &p, SUBSET_LIMIT).expect("small order");
        let ok = match (&flow, &cut) {
            (Realization::Realized(d), SubsetCheck::Pass) => verify_decomposition(&g, k, d, Some(&p)),
            (Realization::Infeasible { witness }, SubsetCheck::Fails(_)) => {
                delta_t(&g, k, &p, witness).is_ok_and(|d| d < 0)
            }
            _ => false,
        };
        s.check(ok, || format!("flow and subset check disagree on {:?} p={p:?}", g.edges()));
    }
    report.suites.push(s);

    let mut s = Suite::new("two-stars");
    for _ in 0..cfg.trials {
        let n = rng.gen_range(2..=12.min(cfg.n_max.max(2)));
        let g = random_connected_graph(n, &mut rng);
        let even = g.edge_count() % 2 == 0;
        let ok = match decompose_2stars(&g) {
            Ok(d) => even && verify_decomposition(&g, 2, &d, None),
            Err(_) => !even,
        };
        s.check(ok, || format!("2-star decomposition wrong for {:?}", g.edges()));
    }
    report.suites.push(s);

    let mut s = Suite::new("oracle");
    let reach = [(3, 9), (4, 8)];
    for (k, n_top) in reach {
        if k > cfg.k_max {
            continue;
        }
        for n in orders(k, 2, n_top.min(cfg.n_max)) {
            if n > 1 {
                let d = gen_uncompletable(n, k).expect("admissible");
                s.check(agrees(&d), || format!("oracle disagrees on gen_uncompletable({n},{k})"));
            }
            if !design_exists(n, k) {
                continue;
            }
            let u = threshold_u(n, k) as usize;
            for _ in 0..cfg.trials.min(20) {
                let m = rng.gen_range(0..=u);
                let d = random_partial_design(n, k, m, &mut rng).expect("below threshold");
                s.check(agrees(&d), || format!("oracle disagrees on {}", d.to_json().replace('\n', "")));
            }
        }
    }
    report.suites.push(s);

    report
}

fn completes(d: &PartialDesign) -> bool {
    match complete(d).map(|r| r.outcome) {
        Ok(Outcome::Completed(full)) => {
            full.validate().is_ok()
                && full.leftover().is_ok_and(|l| l.edge_count() == 0)
                && full.stars[..d.stars.len()] == d.canonical().stars[..]
        }
        _ => false,
    }
}

fn agrees(d: &PartialDesign) -> bool {
    let ours = complete(d).map(|r| r.outcome);
    match (ours, has_completion(d, DEFAULT_BUDGET)) {
        (Ok(Outcome::Completed(_)), Answer::Yes(_)) => true,
        (Ok(Outcome::Impossible(_)), Answer::No) => true,
        _ => false,
    }
}

/// A random spanning tree plus random extra edges.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    let density = rng.gen_range(0.0..0.6);
    for x in 0..n {
        for y in x + 1..n {
            if rng.gen_bool(density) {
                edges.insert((x, y));
            }
        }
    }
    Graph::from_sorted_unique(n, edges.into_iter().collect())
}

//! Executable checks tying each result on licci monomial ideals to a
//! computation. Tasks are independent and run in parallel; outcomes are
//! ordered by task number.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{
    betti_table, invariants, reg_artinian_socle, taylor_oracle, BettiTable, Invariants, TAYLOR_GENERATOR_LIMIT,
};
use crate::corpus::{complementary_corpus, random_squarefree, suspension_grid, NamedGraph};
use crate::error::{Error, Result};
use crate::exactfield::FieldSpec;
use crate::graphs::{Graph, GraphClass, GraphKind};
use crate::licci::{audit, classify, licci_bound_check, suspension_verdict, LicciVerdict, RuleId, Status};
use crate::linkage::{verify_suspension_chain, Report};
use crate::monomial::{Monomial, MonomialIdeal, Ring};
use crate::polar::depolarize_suspension;
use crate::sqfree::alexander_dual;

type Ideal = MonomialIdeal<u16>;

const Q: FieldSpec = FieldSpec::Rationals;
const F2: FieldSpec = FieldSpec::PrimeField(2);
/// Failing instances listed per check.
const WITNESS_LIMIT: usize = 8;
const RANDOM_SQUAREFREE_COUNT: usize = 200;
const RANDOM_SQUAREFREE_VARS: usize = 7;

/// A task's identity and the result it exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TaskInfo {
    pub id: &'static str,
    pub name: &'static str,
    pub citation: &'static str,
}

/// Reported observations that never affect pass/fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    pub label: String,
    pub lines: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskOutcome {
    pub id: String,
    pub name: String,
    pub citation: String,
    pub pass: bool,
    pub report: Report,
    pub probes: Vec<Probe>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub seed: u64,
    pub outcomes: Vec<TaskOutcome>,
}

impl Summary {
    pub fn pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }
}

type TaskFn = fn(u64) -> Result<(Report, Vec<Probe>)>;

const TASKS: [(TaskInfo, TaskFn); 18] = [
    (
        TaskInfo {
            id: "T1",
            name: "hu-example",
            citation: "Huneke-Ulrich iteration on (x1^2, x2^2, x3^2, x1x2, x2x3) reaches S after (x1, x2, x3)",
        },
        t1_hu_example,
    ),
    (
        TaskInfo {
            id: "T2",
            name: "cycle-invariants",
            citation: "pd and reg of S/P_t(C_n) with n = (t+1)q + d (Alilooee-Faridi)",
        },
        t2_cycle_invariants,
    ),
    (
        TaskInfo {
            id: "T3",
            name: "cycle-licci",
            citation: "P_t(C_n) is licci iff n in {t, t+1, 2t+1}",
        },
        t3_cycle_licci,
    ),
    (
        TaskInfo {
            id: "T4",
            name: "cycle-gorenstein",
            citation: "S/P_t(C_{2t+1}) is Gorenstein of height 3 with last total Betti number 1",
        },
        t4_cycle_gorenstein,
    ),
    (
        TaskInfo {
            id: "T5",
            name: "complementary-cm",
            citation: "I_c(G) without isolated vertices is Cohen-Macaulay iff G is complete or a forest (Ficarra-Moradi)",
        },
        t5_complementary_cm,
    ),
    (
        TaskInfo {
            id: "T6",
            name: "complementary-licci",
            citation: "I_c(G) is licci iff G is a triangle or a forest",
        },
        t6_complementary_licci,
    ),
    (
        TaskInfo {
            id: "T7",
            name: "complementary-linear",
            citation: "I_c(K_n) has height 3 and a linear resolution, so it is not licci for n >= 4",
        },
        t7_complementary_linear,
    ),
    (
        TaskInfo {
            id: "T8",
            name: "suspension-reg-dichotomy",
            citation: "reg T/P_t(suspension of G) > (t-1)n - t iff G is a star with possible isolated vertices",
        },
        t8_suspension_reg,
    ),
    (
        TaskInfo {
            id: "T9",
            name: "suspension-licci",
            citation: "P_t(suspension of G) is licci for t = 2 and a star, or t > 2 and at most one edge; never for a non-star",
        },
        t9_suspension_licci,
    ),
    (
        TaskInfo {
            id: "T10",
            name: "link-chain",
            citation: "linkage ladder from the suspension path ideal of an edge plus isolated vertices to a complete intersection",
        },
        t10_link_chain,
    ),
    (
        TaskInfo {
            id: "T11",
            name: "terai",
            citation: "Alexander duality: involution, alpha/height exchange, and reg(S/I) = pd(S/I^dual) - 1 (Terai)",
        },
        t11_terai,
    ),
    (
        TaskInfo {
            id: "T12",
            name: "bicm",
            citation: "a bi-Cohen-Macaulay squarefree ideal is licci iff height <= 2 or it is generated by variables",
        },
        t12_bicm,
    ),
    (
        TaskInfo {
            id: "T13",
            name: "bound",
            citation: "a licci squarefree ideal has height <= floor(n / alpha) + 1",
        },
        t13_bound,
    ),
    (
        TaskInfo {
            id: "T14",
            name: "tree-corollary",
            citation: "P_t of a tree is licci iff the tree is a path of length t-1 or 2t-1",
        },
        t14_tree_corollary,
    ),
    (
        TaskInfo {
            id: "T15",
            name: "polarization-invariance",
            citation: "depolarization preserves pd, reg and the Cohen-Macaulay property (Herzog-Hibi)",
        },
        t15_polarization,
    ),
    (
        TaskInfo {
            id: "T16",
            name: "depol-artinian",
            citation: "x_i^t lies in the depolarized suspension path ideal, which is therefore Artinian",
        },
        t16_depol_artinian,
    ),
    (
        TaskInfo {
            id: "T17",
            name: "socle-reg",
            citation: "reg of an Artinian quotient is the top socle degree (Eisenbud); the star socle element",
        },
        t17_socle_reg,
    ),
    (
        TaskInfo {
            id: "T18",
            name: "claim-cycles",
            citation: "(t-1)q >= d and (t-1)pd - t >= reg for cycles with n not in {t+1, 2t+1}",
        },
        t18_claim_cycles,
    ),
];

pub fn list() -> Vec<TaskInfo> {
    TASKS.iter().map(|(info, _)| *info).collect()
}

/// Runs the selected tasks (all when empty). A selection entry is a task id
/// such as `T3` or a name such as `cycle-licci`.
pub fn verify(selection: &[String], seed: u64) -> Result<Summary> {
    let mut chosen: Vec<usize> = Vec::new();
    for s in selection {
        let k = TASKS
            .iter()
            .position(|(info, _)| info.id.eq_ignore_ascii_case(s) || info.name == s)
            .ok_or_else(|| Error::Parse(format!("unknown task `{s}`")))?;
        if !chosen.contains(&k) {
            chosen.push(k);
        }
    }
    if chosen.is_empty() {
        chosen = (0..TASKS.len()).collect();
    }
    chosen.sort_unstable();
    let outcomes = chosen
        .par_iter()
        .map(|&k| {
            let (info, run) = TASKS[k];
            let (report, probes) = run(seed).unwrap_or_else(|e| {
                let mut r = Report::default();
                r.push("task ran", false, vec![e.to_string()]);
                (r, vec![])
            });
            TaskOutcome {
                id: info.id.into(),
                name: info.name.into(),
                citation: info.citation.into(),
                pass: report.pass() && !report.checks.is_empty(),
                report,
                probes,
            }
        })
        .collect();
    Ok(Summary { seed, outcomes })
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for o in &self.outcomes {
            let verdict = if o.pass { "PASS" } else { "FAIL" };
            writeln!(f, "{} {}: {verdict} ({} checks)", o.id, o.name, o.report.checks.len())?;
            writeln!(f, "  cites: {}", o.citation)?;
            for c in o.report.failures() {
                writeln!(f, "  failed: {}", c.name)?;
                for w in &c.witnesses {
                    writeln!(f, "    {w}")?;
                }
            }
            for p in &o.probes {
                writeln!(f, "  probe: {}", p.label)?;
                for line in &p.lines {
                    writeln!(f, "    {line}")?;
                }
            }
        }
        let passed = self.outcomes.iter().filter(|o| o.pass).count();
        writeln!(f, "{passed}/{} tasks passed", self.outcomes.len())
    }
}

/// Collects failing instances for one aggregated check.
struct Tally {
    name: String,
    total: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            total: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    fn finish(self, report: &mut Report) {
        let failed = self.failures.len();
        let mut witnesses: Vec<String> = self.failures.into_iter().take(WITNESS_LIMIT).collect();
        if failed > WITNESS_LIMIT {
            witnesses.push(format!("... {} more", failed - WITNESS_LIMIT));
        }
        witnesses.insert(0, format!("{} instances, {failed} failing", self.total));
        report.push(self.name, failed == 0 && self.total > 0, witnesses);
    }
}

fn table_and_invariants(ideal: &Ideal, field: FieldSpec) -> Result<(BettiTable, Invariants)> {
    let table = betti_table(ideal, field)?;
    let inv = invariants(&table, ideal)?;
    Ok((table, inv))
}

/// `C_2` is read as its underlying simple graph, a single edge.
fn cycle(n: usize) -> Result<Graph> {
    if n == 2 {
        Graph::build(&GraphKind::Path(2))
    } else {
        Graph::build(&GraphKind::Cycle(n))
    }
}

fn cycle_grid() -> Vec<(usize, usize)> {
    (2..=4).flat_map(|t| (t..=10).map(move |n| (t, n))).collect()
}

/// `(pd, reg)` of `S/P_t(C_n)` from `n = (t+1)q + d`.
pub fn cycle_formula(n: usize, t: usize) -> (usize, usize) {
    let (q, d) = (n / (t + 1), n % (t + 1));
    if d == 0 {
        (2 * q, (t - 1) * q)
    } else {
        (2 * q + 1, (t - 1) * q + d - 1)
    }
}

fn cycle_ideal(n: usize, t: usize) -> Result<Ideal> {
    cycle(n)?.path_ideal(t)
}

fn table_differences(a: &BettiTable, b: &BettiTable) -> Vec<String> {
    let keys: std::collections::BTreeSet<(usize, usize)> = a.entries().chain(b.entries()).map(|(k, _)| k).collect();
    keys.into_iter()
        .filter(|&(i, j)| a.get(i, j) != b.get(i, j))
        .map(|(i, j)| format!("beta_{{{i},{j}}}: {} vs {}", a.get(i, j), b.get(i, j)))
        .collect()
}

fn same_entries(a: &BettiTable, b: &BettiTable) -> bool {
    a.entries().eq(b.entries())
}

fn t1_hu_example(_: u64) -> Result<(Report, Vec<Probe>)> {
    let ring = Ring::standard(3);
    let ideal = Ideal::parse("x1^2, x2^2, x3^2, x1*x2, x2*x3", &ring)?;
    let v = classify(&ideal, Q)?;
    let mut r = Report::default();
    r.push(
        "status is licci",
        v.status == Status::Licci,
        vec![format!("{:?}", v.status)],
    );
    r.push(
        "decided by the iteration",
        v.deciding_rule() == Some(RuleId::R6),
        vec![format!("{:?}", v.deciding_rule())],
    );
    let trace = v.hu_trace.clone().unwrap_or_default();
    let lines: Vec<String> = trace
        .iter()
        .map(|s| format!("k={}: {} [{}]", s.k, s.ideal, s.summary))
        .collect();
    r.push("trace has two steps", trace.len() == 2, lines.clone());
    r.push(
        "I^{1} = (x1, x2, x3)",
        trace
            .first()
            .is_some_and(|s| s.k == 1 && s.ideal == Ideal::maximal(ring.clone())),
        lines.clone(),
    );
    r.push(
        "I^{2} = S",
        trace.get(1).is_some_and(|s| s.k == 2 && s.ideal.is_unit()),
        lines,
    );
    Ok((r, vec![]))
}

fn t2_cycle_invariants(_: u64) -> Result<(Report, Vec<Probe>)> {
    let rows = cycle_grid()
        .into_par_iter()
        .map(|(t, n)| {
            let ideal = cycle_ideal(n, t)?;
            let q = betti_table(&ideal, Q)?;
            let f2 = betti_table(&ideal, F2)?;
            Ok((t, n, q, f2))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut pd = Tally::new("pd matches (t+1)q + d formula");
    let mut reg = Tally::new("reg matches (t+1)q + d formula");
    let mut probes = Vec::new();
    for (t, n, q, f2) in &rows {
        let (epd, ereg) = cycle_formula(*n, *t);
        pd.record(q.pd() == epd, || format!("t={t} n={n}: pd {} expected {epd}", q.pd()));
        reg.record(q.reg() == ereg, || {
            format!("t={t} n={n}: reg {} expected {ereg}", q.reg())
        });
        let diff = table_differences(q, f2);
        if !diff.is_empty() {
            probes.push(Probe {
                label: format!("F2 differs from Q for P_{t}(C_{n})"),
                lines: diff,
            });
        }
    }
    let mut r = Report::default();
    pd.finish(&mut r);
    reg.finish(&mut r);
    if probes.is_empty() {
        probes.push(Probe {
            label: "F2 re-run".into(),
            lines: vec![format!("{} tables agree with Q", rows.len())],
        });
    }
    Ok((r, probes))
}

fn t3_cycle_licci(_: u64) -> Result<(Report, Vec<Probe>)> {
    let rows = cycle_grid()
        .into_par_iter()
        .map(|(t, n)| {
            let ideal = cycle_ideal(n, t)?;
            let v = classify(&ideal, Q)?;
            let bound = licci_bound_check(&ideal, &v)?;
            let last = betti_table(&ideal, Q)?.total(3);
            Ok((t, n, v, bound, last))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut status = Tally::new("licci iff n in {t, t+1, 2t+1}");
    let mut gor = Tally::new("n = 2t+1 certified by Gorenstein height 3 with last total Betti 1");
    let mut bound = Tally::new("licci verdicts satisfy the height bound");
    for (t, n, v, b, last) in &rows {
        let expect = [*t, t + 1, 2 * t + 1].contains(n);
        let expected = if expect { Status::Licci } else { Status::NotLicci };
        status.record(v.status == expected, || {
            format!("t={t} n={n}: {:?} via {:?}", v.status, v.deciding_rule())
        });
        if *n == 2 * t + 1 {
            gor.record(v.deciding_rule() == Some(RuleId::R4) && *last == 1, || {
                format!("t={t} n={n}: rule {:?}, last total {last}", v.deciding_rule())
            });
        }
        bound.record(*b, || format!("t={t} n={n}"));
    }
    let mut r = Report::default();
    status.finish(&mut r);
    gor.finish(&mut r);
    bound.finish(&mut r);
    Ok((r, vec![]))
}

fn t4_cycle_gorenstein(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut g = Tally::new("S/P_t(C_{2t+1}) Gorenstein, height 3, pd 3, last total Betti 1");
    for t in 2..=5 {
        let n = 2 * t + 1;
        let ideal = cycle_ideal(n, t)?;
        let (table, inv) = table_and_invariants(&ideal, Q)?;
        g.record(
            inv.is_gorenstein && inv.height == 3 && inv.pd == 3 && table.total(3) == 1,
            || format!("t={t}: {inv:?}"),
        );
    }
    let mut r = Report::default();
    g.finish(&mut r);
    Ok((r, vec![]))
}

struct ComplementaryRow {
    graph: Graph,
    class: GraphClass,
    inv: Invariants,
    verdict: LicciVerdict<u16>,
    bound: bool,
}

fn complementary_rows() -> Result<&'static [ComplementaryRow]> {
    static ROWS: OnceLock<std::result::Result<Vec<ComplementaryRow>, Error>> = OnceLock::new();
    let rows = ROWS.get_or_init(|| {
        complementary_corpus()
            .into_par_iter()
            .map(|graph| {
                let ideal: Ideal = graph.complementary_edge_ideal()?;
                let (_, inv) = table_and_invariants(&ideal, Q)?;
                let verdict = classify(&ideal, Q)?;
                let bound = licci_bound_check(&ideal, &verdict)?;
                Ok(ComplementaryRow {
                    class: graph.classify(),
                    graph,
                    inv,
                    verdict,
                    bound,
                })
            })
            .collect()
    });
    rows.as_deref().map_err(Clone::clone)
}

fn t5_complementary_cm(_: u64) -> Result<(Report, Vec<Probe>)> {
    let rows = complementary_rows()?;
    let mut cm = Tally::new("CM iff complete or forest");
    let mut h2 = Tally::new("height 2 for non-complete CM graphs");
    let mut h3 = Tally::new("height 3 for K_n, n >= 4");
    for row in rows {
        let (c, inv) = (&row.class, &row.inv);
        cm.record(inv.is_cm == (c.is_complete || c.is_forest), || {
            format!("{}: {inv:?}", row.graph)
        });
        if inv.is_cm && !c.is_complete {
            h2.record(inv.height == 2, || format!("{}: height {}", row.graph, inv.height));
        }
        if c.is_complete && row.graph.n() >= 4 {
            h3.record(inv.height == 3, || format!("{}: height {}", row.graph, inv.height));
        }
    }
    let mut r = Report::default();
    cm.finish(&mut r);
    h2.finish(&mut r);
    h3.finish(&mut r);
    Ok((r, vec![]))
}

fn t6_complementary_licci(_: u64) -> Result<(Report, Vec<Probe>)> {
    let rows = complementary_rows()?;
    let mut status = Tally::new("licci iff K3 or forest");
    let mut bound = Tally::new("licci verdicts satisfy the height bound");
    for row in rows {
        let c = &row.class;
        let triangle = c.is_complete && row.graph.n() == 3;
        let expected = if triangle || c.is_forest {
            Status::Licci
        } else {
            Status::NotLicci
        };
        status.record(row.verdict.status == expected, || {
            format!(
                "{}: {:?} via {:?}",
                row.graph,
                row.verdict.status,
                row.verdict.deciding_rule()
            )
        });
        bound.record(row.bound, || row.graph.to_string());
    }
    let mut r = Report::default();
    status.finish(&mut r);
    bound.finish(&mut r);
    Ok((r, vec![]))
}

fn t7_complementary_linear(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut r = Report::default();
    for n in 4..=6 {
        let ideal: Ideal = Graph::build(&GraphKind::Complete(n))?.complementary_edge_ideal()?;
        let (_, inv) = table_and_invariants(&ideal, Q)?;
        let v = classify(&ideal, Q)?;
        r.push(
            format!("I_c(K_{n}) linear resolution of height 3"),
            inv.has_linear_resolution && inv.height == 3,
            vec![format!("{inv:?}")],
        );
        r.push(
            format!("I_c(K_{n}) not licci by the regularity obstruction"),
            v.status == Status::NotLicci && v.deciding_rule() == Some(RuleId::R5),
            vec![format!("{:?} via {:?}", v.status, v.deciding_rule())],
        );
    }
    Ok((r, vec![]))
}

/// One instance of the suspension grid with `t` in {2, 3}.
struct SuspensionRow {
    name: String,
    graph: Graph,
    t: usize,
    /// Table of `T/P_t(Σ_t G)` over Q and F2.
    table: BettiTable,
    table_f2: BettiTable,
    height: usize,
    depol: Ideal,
    /// Table of `R/depol`, from the Taylor oracle when small enough.
    depol_table: BettiTable,
    depol_by_oracle: bool,
}

fn suspension_rows() -> Result<&'static [SuspensionRow]> {
    static ROWS: OnceLock<std::result::Result<Vec<SuspensionRow>, Error>> = OnceLock::new();
    let rows = ROWS.get_or_init(|| {
        let jobs: Vec<(NamedGraph, usize)> = suspension_grid()
            .into_iter()
            .flat_map(|g| [2, 3].map(|t| (g.clone(), t)))
            .collect();
        jobs.into_par_iter()
            .map(|(NamedGraph { name, graph }, t)| {
                let paths: Ideal = graph.suspension(t)?.path_ideal(t)?;
                let depol: Ideal = depolarize_suspension(&graph, t)?;
                let depol_by_oracle = depol.num_gens() <= TAYLOR_GENERATOR_LIMIT;
                let depol_table = if depol_by_oracle {
                    taylor_oracle(&depol, Q)?
                } else {
                    betti_table(&depol, Q)?
                };
                Ok(SuspensionRow {
                    name,
                    t,
                    table: betti_table(&paths, Q)?,
                    table_f2: betti_table(&paths, F2)?,
                    height: paths.height()?,
                    graph,
                    depol,
                    depol_table,
                    depol_by_oracle,
                })
            })
            .collect()
    });
    rows.as_deref().map_err(Clone::clone)
}

fn t8_suspension_reg(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut d = Tally::new("reg > (t-1)n - t iff star plus isolated vertices");
    for row in suspension_rows()? {
        let (n, t) = (row.graph.n() as i64, row.t as i64);
        let star = row.graph.classify().is_star_plus_isolated;
        let reg = row.table.reg() as i64;
        d.record((reg > (t - 1) * n - t) == star, || {
            format!(
                "{} t={t}: reg {reg}, (t-1)n-t = {}, star {star}",
                row.name,
                (t - 1) * n - t
            )
        });
    }
    let mut r = Report::default();
    d.finish(&mut r);
    Ok((r, vec![]))
}

fn t9_suspension_licci(_: u64) -> Result<(Report, Vec<Probe>)> {
    let jobs: Vec<(NamedGraph, usize)> = suspension_grid()
        .into_iter()
        .flat_map(|g| [2, 3, 4].map(|t| (g.clone(), t)))
        .collect();
    let rows = jobs
        .into_par_iter()
        .map(|(g, t)| Ok((suspension_verdict::<u16>(&g.graph, t)?, g, t)))
        .collect::<Result<Vec<_>>>()?;
    let mut star2 = Tally::new("t = 2 stars are licci");
    let mut one_edge = Tally::new("t in {3, 4} with at most one edge is licci");
    let mut non_star = Tally::new("non-stars are not licci");
    let mut probes = Vec::new();
    for (v, g, t) in &rows {
        let class = g.graph.classify();
        let witness = || format!("{} t={t}: {:?}", g.name, v.status);
        if !class.is_star_plus_isolated {
            non_star.record(v.status == Status::NotLicci, witness);
        } else if *t == 2 {
            star2.record(v.status == Status::Licci, witness);
        } else if class.edge_count <= 1 {
            one_edge.record(v.status == Status::Licci, witness);
        } else {
            let mut lines = vec![format!("status {:?}", v.status)];
            for s in v.hu_trace.iter().flatten() {
                lines.push(format!("k={}: {} [{}]", s.k, s.ideal, s.summary));
            }
            probes.push(Probe {
                label: format!("t={t} star {}", g.name),
                lines,
            });
        }
    }
    let mut r = Report::default();
    star2.finish(&mut r);
    one_edge.finish(&mut r);
    non_star.finish(&mut r);
    Ok((r, probes))
}

fn t10_link_chain(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut r = Report::default();
    for (n, t) in [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)] {
        r.absorb(&format!("(n,t)=({n},{t}) "), verify_suspension_chain(n, t)?);
    }
    Ok((r, vec![]))
}

fn random_corpus(seed: u64) -> Vec<Ideal> {
    random_squarefree(seed, RANDOM_SQUAREFREE_COUNT, RANDOM_SQUAREFREE_VARS)
}

struct DualRow {
    ideal: Ideal,
    dual: Ideal,
    inv: Invariants,
    dual_inv: Invariants,
}

fn dual_rows(ideals: Vec<Ideal>) -> Result<Vec<DualRow>> {
    ideals
        .into_par_iter()
        .map(|ideal| {
            let dual = alexander_dual(&ideal)?;
            let (_, inv) = table_and_invariants(&ideal, Q)?;
            let (_, dual_inv) = table_and_invariants(&dual, Q)?;
            Ok(DualRow {
                ideal,
                dual,
                inv,
                dual_inv,
            })
        })
        .collect()
}

fn t11_terai(seed: u64) -> Result<(Report, Vec<Probe>)> {
    let rows = dual_rows(random_corpus(seed))?;
    let mut inv = Tally::new("dual of dual is the ideal");
    let mut ah = Tally::new("alpha(dual) = height and height(dual) = alpha");
    let mut terai = Tally::new("reg(S/I) = pd(S/dual) - 1");
    for row in &rows {
        let back = alexander_dual(&row.dual)?;
        inv.record(back == row.ideal, || format!("{} -> {} -> {back}", row.ideal, row.dual));
        ah.record(
            row.dual_inv.alpha == row.inv.height && row.dual_inv.height == row.inv.alpha,
            || format!("{}: {:?} / {:?}", row.ideal, row.inv, row.dual_inv),
        );
        terai.record(row.inv.reg + 1 == row.dual_inv.pd, || {
            format!("{}: reg {}, pd of dual {}", row.ideal, row.inv.reg, row.dual_inv.pd)
        });
    }
    let mut r = Report::default();
    inv.finish(&mut r);
    ah.finish(&mut r);
    terai.finish(&mut r);
    Ok((r, vec![]))
}

fn t12_bicm(seed: u64) -> Result<(Report, Vec<Probe>)> {
    let mut ideals = random_corpus(seed);
    for n in 3..=6 {
        ideals.push(Graph::build(&GraphKind::Complete(n))?.complementary_edge_ideal()?);
        ideals.push(Graph::build(&GraphKind::Path(n))?.complementary_edge_ideal()?);
    }
    let rows = dual_rows(ideals)?;
    let mut bicm = Tally::new("bi-CM: licci iff height <= 2 or generated by variables");
    let mut contradictions = Tally::new("no two cascade rules disagree");
    for row in rows.iter().filter(|r| r.inv.is_cm && r.dual_inv.is_cm) {
        let v = classify(&row.ideal, Q)?;
        let expect = row.inv.height <= 2 || row.ideal.is_generated_by_variables();
        let expected = if expect { Status::Licci } else { Status::NotLicci };
        bicm.record(v.status == expected, || {
            format!(
                "{}: {:?} via {:?}, height {}",
                row.ideal,
                v.status,
                v.deciding_rule(),
                row.inv.height
            )
        });
        let a = audit(&row.ideal, Q)?;
        contradictions.record(!a.contradiction(), || format!("{}: {:?}", row.ideal, a.fired));
    }
    let mut r = Report::default();
    bicm.finish(&mut r);
    contradictions.finish(&mut r);
    Ok((r, vec![]))
}

fn t13_bound(seed: u64) -> Result<(Report, Vec<Probe>)> {
    let mut ideals = random_corpus(seed);
    for (t, n) in cycle_grid() {
        ideals.push(cycle_ideal(n, t)?);
    }
    let checked = ideals
        .into_par_iter()
        .map(|ideal| {
            let v = classify(&ideal, Q)?;
            let bound = licci_bound_check(&ideal, &v)?;
            let contradiction = audit(&ideal, Q)?.contradiction();
            Ok((ideal, v.status, bound, contradiction))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut bound = Tally::new("licci verdicts satisfy height <= floor(n/alpha) + 1");
    let mut audit_ok = Tally::new("audit finds no contradiction");
    for (ideal, status, b, c) in &checked {
        if *status == Status::Licci {
            bound.record(*b, || ideal.to_string());
        }
        audit_ok.record(!c, || ideal.to_string());
    }
    for row in complementary_rows()? {
        if row.verdict.status == Status::Licci {
            bound.record(row.bound, || row.graph.to_string());
        }
    }
    let mut r = Report::default();
    bound.finish(&mut r);
    audit_ok.finish(&mut r);
    Ok((r, vec![]))
}

fn t14_tree_corollary(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut spot = Tally::new("paths on t and 2t vertices are licci");
    let mut sweep = Tally::new("P_t of the path on m vertices is licci iff m in {t, 2t}");
    for t in 2..=4 {
        for m in t..=2 * t + 2 {
            let ideal: Ideal = Graph::build(&GraphKind::Path(m))?.path_ideal(t)?;
            let v = classify(&ideal, Q)?;
            let expect = m == t || m == 2 * t;
            if expect {
                spot.record(v.status == Status::Licci, || format!("t={t} m={m}: {:?}", v.status));
            }
            let expected = if expect { Status::Licci } else { Status::NotLicci };
            sweep.record(v.status == expected, || {
                format!("t={t} m={m}: {:?} via {:?}", v.status, v.deciding_rule())
            });
        }
    }
    let ideal: Ideal = Graph::build(&GraphKind::Path(5))?.path_ideal(3)?;
    let v = classify(&ideal, Q)?;
    let mut r = Report::default();
    spot.finish(&mut r);
    sweep.finish(&mut r);
    r.push(
        "P_3 of the path on 5 vertices is not licci",
        v.status == Status::NotLicci,
        vec![format!("{:?} via {:?}", v.status, v.deciding_rule())],
    );
    Ok((r, vec![]))
}

fn t15_polarization(_: u64) -> Result<(Report, Vec<Probe>)> {
    let rows = suspension_rows()?;
    let mut tables = Tally::new("depolarization has the same Betti numbers");
    let mut cm = Tally::new("both quotients Cohen-Macaulay");
    let mut oracle = 0;
    let mut probes = Vec::new();
    for row in rows {
        oracle += usize::from(row.depol_by_oracle);
        tables.record(same_entries(&row.table, &row.depol_table), || {
            format!(
                "{} t={}: {}",
                row.name,
                row.t,
                table_differences(&row.table, &row.depol_table).join("; ")
            )
        });
        let paths_cm = row.table.pd() == row.height;
        let depol_cm = row.depol_table.pd() == row.depol.height()?;
        cm.record(paths_cm && depol_cm, || format!("{} t={}", row.name, row.t));
        let diff = table_differences(&row.table, &row.table_f2);
        if !diff.is_empty() {
            probes.push(Probe {
                label: format!("F2 differs from Q for {} t={}", row.name, row.t),
                lines: diff,
            });
        }
    }
    let mut r = Report::default();
    tables.finish(&mut r);
    cm.finish(&mut r);
    probes.push(Probe {
        label: "depolarized tables".into(),
        lines: vec![format!(
            "{oracle} of {} from the Taylor oracle, the rest by Hochster",
            rows.len()
        )],
    });
    if probes.len() == 1 {
        probes.insert(
            0,
            Probe {
                label: "F2 re-run".into(),
                lines: vec![format!("{} tables agree with Q", rows.len())],
            },
        );
    }
    Ok((r, probes))
}

fn t16_depol_artinian(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut pure = Tally::new("x_i^t in depolarization for every vertex");
    let mut art = Tally::new("depolarization is Artinian with radical the maximal ideal");
    for g in suspension_grid() {
        for t in 2..=4 {
            let depol: Ideal = depolarize_suspension(&g.graph, t)?;
            let n = g.graph.n();
            let exp = u16::try_from(t).map_err(|_| Error::ExponentOverflow(t as u64))?;
            let missing: Vec<usize> = (0..n)
                .filter(|&i| !depol.contains(&Monomial::pure_power(n, i, exp)))
                .collect();
            pure.record(missing.is_empty(), || format!("{} t={t}: missing {missing:?}", g.name));
            art.record(
                depol.is_artinian() && depol.radical() == Ideal::maximal(g.graph.ring()),
                || format!("{} t={t}: {depol}", g.name),
            );
        }
    }
    let mut r = Report::default();
    pure.finish(&mut r);
    art.finish(&mut r);
    Ok((r, vec![]))
}

fn t17_socle_reg(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut reg = Tally::new("top socle degree of the depolarization equals reg of the path ideal");
    let mut socle = Tally::new("stars: prod over non-centers of x_i^(t-1) is a socle element above (t-1)n - t");
    for row in suspension_rows()? {
        let s = reg_artinian_socle(&row.depol)?;
        reg.record(s == row.table.reg(), || {
            format!("{} t={}: socle {s}, Betti reg {}", row.name, row.t, row.table.reg())
        });
        if row.graph.classify().is_star_plus_isolated {
            let n = row.graph.n();
            let e = (row.t - 1) as u16;
            let center = (0..n)
                .max_by_key(|&v| (row.graph.degree(v), std::cmp::Reverse(v)))
                .unwrap_or(0);
            let m = (0..n)
                .filter(|&i| i != center)
                .fold(Monomial::one(n), |m, i| m.with_exponent(i, e));
            let in_socle = !row.depol.contains(&m) && (0..n).all(|j| row.depol.contains(&m.mul(&Monomial::var(n, j))));
            let above = (m.degree() as i64) > (row.t as i64 - 1) * n as i64 - row.t as i64;
            socle.record(in_socle && above, || {
                format!("{} t={}: {}", row.name, row.t, m.display(row.depol.ring()))
            });
        }
    }
    let mut r = Report::default();
    reg.finish(&mut r);
    socle.finish(&mut r);
    Ok((r, vec![]))
}

fn t18_claim_cycles(_: u64) -> Result<(Report, Vec<Probe>)> {
    let mut claim = Tally::new("(t-1)q >= d");
    let mut ineq = Tally::new("reg <= (t-1)pd - t by the cycle formulas");
    for t in 2..=10usize {
        for n in t + 2..=60 {
            if n == 2 * t + 1 {
                continue;
            }
            let (q, d) = (n / (t + 1), n % (t + 1));
            claim.record((t - 1) * q >= d, || format!("t={t} n={n}: q={q} d={d}"));
            let (pd, reg) = cycle_formula(n, t);
            ineq.record((reg as i64) <= (t as i64 - 1) * pd as i64 - t as i64, || {
                format!("t={t} n={n}: pd {pd} reg {reg}")
            });
        }
    }
    let mut r = Report::default();
    claim.finish(&mut r);
    ineq.finish(&mut r);
    Ok((r, vec![]))
}

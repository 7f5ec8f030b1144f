//! Monomial direct links and the linkage ladder for suspensions of a single
//! edge plus isolated vertices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{suspension_index, Graph};
use crate::monomial::{Exponent, Monomial, MonomialIdeal};

/// One named check with its witnesses in text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

/// A list of checks; passes iff every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, witnesses: Vec<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            witnesses,
        });
    }

    /// Appends `other`, prefixing its check names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{prefix}{}", c.name),
                ..c
            });
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Nonconstant monomials with pairwise disjoint supports.
pub fn is_monomial_regular_sequence<E: Exponent>(ms: &[Monomial<E>]) -> bool {
    if ms.is_empty() {
        return false;
    }
    let mut seen = 0u64;
    for m in ms {
        let s = m.support();
        if s == 0 || seen & s != 0 {
            return false;
        }
        seen |= s;
    }
    true
}

fn height_of<E: Exponent>(i: &MonomialIdeal<E>) -> Option<usize> {
    i.height().ok()
}

/// Checks that `regseq` directly links `i1` and `i2`.
pub fn verify_direct_link<E: Exponent>(
    i1: &MonomialIdeal<E>,
    i2: &MonomialIdeal<E>,
    regseq: &[Monomial<E>],
) -> Result<Report> {
    let n = i1.nvars();
    if i2.nvars() != n {
        return Err(Error::AmbientMismatch(n, i2.nvars()));
    }
    if let Some(m) = regseq.iter().find(|m| m.nvars() != n) {
        return Err(Error::AmbientMismatch(n, m.nvars()));
    }
    let ring = i1.ring().clone();
    let c = MonomialIdeal::new(ring, regseq.iter().cloned());
    let mut report = Report::default();
    let seq: Vec<String> = regseq.iter().map(|m| m.display(c.ring()).to_string()).collect();
    report.push(
        "regular sequence",
        is_monomial_regular_sequence(regseq) && c.num_gens() == regseq.len(),
        vec![seq.join(", ")],
    );
    report.push(
        "sequence inside both ideals",
        c.is_subset_of(i1) && c.is_subset_of(i2),
        vec![c.to_string()],
    );
    for (name, target, by) in [("c : I2 = I1", i1, i2), ("c : I1 = I2", i2, i1)] {
        match c.colon(by) {
            Ok(q) => report.push(name, &q == target, vec![q.to_string()]),
            Err(e) => report.push(name, false, vec![e.to_string()]),
        }
    }
    let heights = [height_of(&c), height_of(i1), height_of(i2)];
    let text = |h: Option<usize>| h.map_or("undefined".to_string(), |h| h.to_string());
    report.push(
        "heights agree",
        heights[0].is_some() && heights.iter().all(|h| *h == heights[0]),
        vec![format!(
            "c: {}, I1: {}, I2: {}",
            text(heights[0]),
            text(heights[1]),
            text(heights[2])
        )],
    );
    Ok(report)
}

/// The ideals of the ladder in the suspension ring of a single edge
/// `{x1, x2}` plus `n - 2` isolated vertices.
struct Ladder {
    n: usize,
    t: usize,
    graph: Graph,
    nvars: usize,
}

impl Ladder {
    fn var(&self, i: usize, j: usize) -> usize {
        suspension_index(self.n, self.t, i, j)
    }

    /// `∏_{j in js} x_{i j}` (vertices zero-based).
    fn prod(&self, i: usize, js: std::ops::Range<usize>) -> Monomial<u16> {
        let mask = js.fold(0u64, |m, j| m | 1 << self.var(i, j));
        Monomial::from_mask(self.nvars, mask)
    }

    fn ideal(&self, gens: impl IntoIterator<Item = Monomial<u16>>) -> MonomialIdeal<u16> {
        MonomialIdeal::new(self.graph.ring(), gens)
    }

    fn whiskers(&self) -> Vec<Monomial<u16>> {
        (2..self.n).map(|i| self.prod(i, 0..self.t)).collect()
    }

    fn mixed(&self, a: std::ops::Range<usize>, b: std::ops::Range<usize>) -> Monomial<u16> {
        self.prod(0, a).mul(&self.prod(1, b))
    }

    /// `I_k`: the paths of the edge block truncated to `k` vertices.
    fn i_k(&self, k: usize) -> MonomialIdeal<u16> {
        let edge = (0..=k).map(|l| self.mixed(0..l, 0..k - l));
        self.ideal(edge.chain(self.whiskers()))
    }

    /// `(∏_{j<k} x_{1j}, ∏_{j<k} x_{2j})` plus the whisker block.
    fn j_k_gens(&self, k: usize) -> Vec<Monomial<u16>> {
        let mut g = vec![self.prod(0, 0..k), self.prod(1, 0..k)];
        g.extend(self.whiskers());
        g
    }

    /// Middle generators of `I_k` with `x_{10} x_{20}` removed.
    fn m2(&self, k: usize) -> MonomialIdeal<u16> {
        self.ideal((1..k).map(|l| self.mixed(1..l, 1..k - l)))
    }

    fn i_prime(&self, k: usize) -> MonomialIdeal<u16> {
        self.m2(k).sum(&self.ideal(self.whiskers()))
    }

    fn j_prime_gens(&self, k: usize) -> Vec<Monomial<u16>> {
        let mut g = vec![self.prod(0, 1..k), self.prod(1, 1..k)];
        g.extend(self.whiskers());
        g
    }

    /// Cyclic shift `x_{ij} -> x_{i,j-1}` on the two edge blocks.
    fn shift_map(&self) -> Vec<usize> {
        let mut map: Vec<usize> = (0..self.nvars).collect();
        for i in 0..2 {
            for j in 0..self.t {
                map[self.var(i, j)] = self.var(i, (j + self.t - 1) % self.t);
            }
        }
        map
    }
}

fn ci_inside(report: &mut Report, name: &str, gens: &[Monomial<u16>], ideal: &MonomialIdeal<u16>) {
    let c = MonomialIdeal::new(ideal.ring().clone(), gens.iter().cloned());
    let ok = is_monomial_regular_sequence(gens) && c.is_subset_of(ideal) && c.height().ok() == ideal.height().ok();
    report.push(name, ok, vec![c.to_string(), ideal.to_string()]);
}

fn equal(report: &mut Report, name: &str, a: &MonomialIdeal<u16>, b: &MonomialIdeal<u16>) {
    report.push(name, a == b, vec![a.to_string(), b.to_string()]);
}

/// Verifies every rung `I_k ~ L_k ~ I'_k ≅ I_{k-2}` from `k = t` down to
/// `k ∈ {1, 2}`, then both terminal cases.
pub fn verify_suspension_chain(n: usize, t: usize) -> Result<Report> {
    if n < 2 || t < 3 {
        return Err(Error::InvalidGraph(format!(
            "linkage ladder needs n >= 2 and t >= 3, got n = {n}, t = {t}"
        )));
    }
    let base = Graph::with_standard_labels(n, [(0, 1)])?;
    let graph = base.suspension(t)?;
    let nvars = graph.n();
    let lad = Ladder { n, t, graph, nvars };
    let mut report = Report::default();

    let paths: MonomialIdeal<u16> = lad.graph.path_ideal(t)?;
    equal(&mut report, "I_t = P_t(suspension)", &lad.i_k(t), &paths);

    let x10x20 = lad.mixed(0..1, 0..1);
    let shift = lad.shift_map();
    let mut k = t;
    while k >= 3 {
        let p = format!("k={k}: ");
        let i = lad.i_k(k);
        let j_gens = lad.j_k_gens(k);
        let j = lad.ideal(j_gens.iter().cloned());
        let ip = lad.i_prime(k);
        let jp_gens = lad.j_prime_gens(k);
        let jp = lad.ideal(jp_gens.iter().cloned());
        let m2 = lad.m2(k);
        let m1 = lad.ideal((1..k).map(|l| lad.mixed(0..l, 0..k - l)));

        ci_inside(&mut report, &format!("{p}J complete intersection in I"), &j_gens, &i);
        ci_inside(
            &mut report,
            &format!("{p}J' complete intersection in I'"),
            &jp_gens,
            &ip,
        );

        let j_i = j.colon(&i)?;
        let j_m1 = j.colon(&m1)?;
        equal(&mut report, &format!("{p}J : I = J : M1"), &j_i, &j_m1);
        equal(
            &mut report,
            &format!("{p}M1 = x10 x20 M2"),
            &m1,
            &m2.mul_monomial(&x10x20),
        );
        equal(
            &mut report,
            &format!("{p}J : x10 x20 = J'"),
            &j.colon_monomial(&x10x20),
            &jp,
        );
        let jp_m2 = jp.colon(&m2)?;
        equal(&mut report, &format!("{p}J : M1 = J' : M2"), &j_m1, &jp_m2);
        let jp_ip = jp.colon(&ip)?;
        equal(&mut report, &format!("{p}J' : M2 = J' : I'"), &jp_m2, &jp_ip);

        report.absorb(&format!("{p}I ~ J : I: "), verify_direct_link(&i, &j_i, &j_gens)?);
        report.absorb(
            &format!("{p}I' ~ J' : I': "),
            verify_direct_link(&ip, &jp_ip, &jp_gens)?,
        );

        let relabeled = ip.map_variables(lad.graph.ring(), &shift);
        equal(
            &mut report,
            &format!("{p}I' relabels to I_{}", k - 2),
            &relabeled,
            &lad.i_k(k - 2),
        );
        k -= 2;
    }

    let i1 = lad.i_k(1);
    report.push(
        "I_1 complete intersection",
        i1.is_complete_intersection(),
        vec![i1.to_string()],
    );
    let i2 = lad.i_k(2);
    let mut c_gens = vec![lad.prod(0, 0..2), lad.prod(1, 0..2)];
    c_gens.extend(lad.whiskers());
    let c = lad.ideal(c_gens.iter().cloned());
    let target = lad.ideal([lad.prod(0, 1..2), lad.prod(1, 1..2)].into_iter().chain(lad.whiskers()));
    let c_i2 = c.colon(&i2)?;
    equal(&mut report, "c : I_2 = c : x10 x20", &c_i2, &c.colon_monomial(&x10x20));
    equal(&mut report, "c : I_2 = (x11, x21) + whiskers", &c_i2, &target);
    report.push(
        "(x11, x21) + whiskers complete intersection",
        target.is_complete_intersection(),
        vec![target.to_string()],
    );
    report.absorb("I_2 ~ CI: ", verify_direct_link(&i2, &target, &c_gens)?);
    Ok(report)
}

//! Licci decisions: the Huneke-Ulrich iteration for Artinian monomial
//! ideals, the regularity obstruction, and a rule cascade whose verdicts
//! carry their citations and witnesses.
//!
//! Cascade order: R1 not Cohen-Macaulay, R2 principal or complete
//! intersection, R3 Cohen-Macaulay of height at most two, R4 Gorenstein of
//! height three, R5 regularity obstruction, R6 Huneke-Ulrich iteration
//! (Artinian inputs), R7 bi-Cohen-Macaulay squarefree inputs. R6 and R7 never
//! both apply: an Artinian squarefree ideal is generated by variables, which
//! R2 already settles.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, invariants, BettiTable, Invariants};
use crate::error::{Error, Result};
use crate::exactfield::FieldSpec;
use crate::graphs::Graph;
use crate::monomial::{Exponent, MonomialIdeal};
use crate::polar::depolarize_suspension;
use crate::sqfree::alexander_dual;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Licci,
    NotLicci,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Licci => "licci",
            Status::NotLicci => "not licci",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    /// Transfer between a squarefree ideal and its depolarization.
    Bridge,
}

impl RuleId {
    pub const CASCADE: [RuleId; 7] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
    ];

    pub fn citation(self) -> &'static str {
        match self {
            RuleId::R1 => "licci ideals are Cohen-Macaulay (Peskine-Szpiro)",
            RuleId::R2 => "principal ideals and complete intersections are licci",
            RuleId::R3 => {
                "Cohen-Macaulay ideals of height two are licci (Apery-Gaeta); \
                 Cohen-Macaulay height one ideals are principal"
            }
            RuleId::R4 => "Gorenstein ideals of height three are licci (Watanabe)",
            RuleId::R5 => {
                "Huneke-Ulrich obstruction: a Cohen-Macaulay S/I with \
                 reg <= (alpha - 1) pd - alpha is not licci"
            }
            RuleId::R6 => {
                "Huneke-Ulrich criterion: an Artinian monomial ideal is licci \
                 iff its iterated ideals reach S"
            }
            RuleId::R7 => {
                "bi-Cohen-Macaulay squarefree ideals are licci iff height <= 2 \
                 or generated by variables (obstruction combined with Terai's formula)"
            }
            RuleId::Bridge => {
                "over an infinite field a squarefree ideal is licci iff its \
                 depolarization is; the verdict below is for the depolarization"
            }
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Bridge => f.write_str("bridge"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleEntry {
    pub id: RuleId,
    pub citation: String,
    pub witnesses: Vec<String>,
}

impl RuleEntry {
    pub fn new(id: RuleId, witnesses: Vec<String>) -> Self {
        RuleEntry {
            id,
            citation: id.citation().to_string(),
            witnesses,
        }
    }
}

/// `ideal` is the iterated ideal `I^{k}`; `summary` says how it arose.
#[derive(Clone, Debug)]
pub struct TraceStep<E = u16> {
    pub k: usize,
    pub ideal: MonomialIdeal<E>,
    pub summary: String,
}

impl<E: Exponent> PartialEq for TraceStep<E> {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.ideal == other.ideal && self.summary == other.summary
    }
}

/// A licci or not-licci status always carries at least one rule; the trace
/// is present exactly when the Huneke-Ulrich rule decided.
#[derive(Clone, Debug)]
pub struct LicciVerdict<E = u16> {
    pub status: Status,
    pub rules: Vec<RuleEntry>,
    pub hu_trace: Option<Vec<TraceStep<E>>>,
}

impl<E: Exponent> PartialEq for LicciVerdict<E> {
    fn eq(&self, other: &Self) -> bool {
        self.status == other.status && self.rules == other.rules && self.hu_trace == other.hu_trace
    }
}

impl<E: Exponent> LicciVerdict<E> {
    fn unknown() -> Self {
        LicciVerdict {
            status: Status::Unknown,
            rules: vec![],
            hu_trace: None,
        }
    }

    /// The rule that decided the status.
    pub fn deciding_rule(&self) -> Option<RuleId> {
        self.rules.iter().map(|r| r.id).find(|&id| id != RuleId::Bridge)
    }
}

pub const SUMMARY_COMPLETE_INTERSECTION: &str = "complete intersection: next ideal is S";
pub const SUMMARY_PRINCIPAL_SHARP: &str = "principal sharp part, K = (1): next ideal is S";
pub const SUMMARY_FIXPOINT: &str = "fixpoint: gcd of sharp part is 1";

/// One application of `I -> I^{1}`.
#[derive(Clone, Debug)]
pub enum HuStep<E = u16> {
    Next(MonomialIdeal<E>),
    /// `I^{1} = S`, either because `I` is a complete intersection or
    /// because its sharp part is principal.
    Unit,
    /// `I^{1} = I`: the sharp part has no common factor.
    Fixpoint,
}

fn require_artinian_proper<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_artinian() {
        let missing = (0..ideal.nvars())
            .find(|&v| {
                !ideal
                    .gens()
                    .iter()
                    .any(|g| matches!(g.as_pure_power(), Some((w, _)) if w == v))
            })
            .map(|v| ideal.ring().name(v).to_string())
            .unwrap_or_default();
        return Err(Error::NotArtinian(missing));
    }
    Ok(())
}

pub fn hu_step<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<HuStep<E>> {
    Ok(hu_step_with_summary(ideal)?.0)
}

fn hu_step_with_summary<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<(HuStep<E>, String)> {
    require_artinian_proper(ideal)?;
    if ideal.is_complete_intersection() {
        return Ok((HuStep::Unit, SUMMARY_COMPLETE_INTERSECTION.to_string()));
    }
    let sf = ideal.standard_form()?;
    if sf.b.is_one() {
        return Ok((HuStep::Fixpoint, SUMMARY_FIXPOINT.to_string()));
    }
    if sf.k_ideal.is_unit() {
        return Ok((HuStep::Unit, format!("{}; {}", sf.summary(), SUMMARY_PRINCIPAL_SHARP)));
    }
    let n = ideal.nvars();
    let powers = (0..n).map(|v| {
        let e = sf.a[v] - sf.b.exponent(v);
        crate::monomial::Monomial::pure_power(n, v, e)
    });
    let next = MonomialIdeal::new(ideal.ring().clone(), powers.chain(sf.k_ideal.gens().iter().cloned()));
    Ok((HuStep::Next(next), sf.summary()))
}

/// Iterates [`hu_step`] until the unit ideal or a fixpoint.
pub fn hu_decide<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<LicciVerdict<E>> {
    require_artinian_proper(ideal)?;
    let mut trace = Vec::new();
    let mut current = ideal.clone();
    let mut k = 1;
    let status = loop {
        let (step, summary) = hu_step_with_summary(&current)?;
        match step {
            HuStep::Unit => {
                trace.push(TraceStep {
                    k,
                    ideal: MonomialIdeal::unit(ideal.ring().clone()),
                    summary,
                });
                break Status::Licci;
            }
            HuStep::Fixpoint => {
                trace.push(TraceStep {
                    k,
                    ideal: current.clone(),
                    summary,
                });
                break Status::NotLicci;
            }
            HuStep::Next(next) => {
                trace.push(TraceStep {
                    k,
                    ideal: next.clone(),
                    summary,
                });
                current = next;
                k += 1;
            }
        }
    };
    let last = trace.last().expect("at least one step");
    let witnesses = vec![
        format!("steps={}", trace.len()),
        format!("I^{{{}}}={}", last.k, last.ideal),
    ];
    Ok(LicciVerdict {
        status,
        rules: vec![RuleEntry::new(RuleId::R6, witnesses)],
        hu_trace: Some(trace),
    })
}

/// Whether `reg <= (alpha - 1) pd - alpha`. Only meaningful for
/// Cohen-Macaulay quotients.
pub fn obstruction_not_licci(inv: &Invariants) -> Result<bool> {
    if !inv.is_cm {
        return Err(Error::NotCohenMacaulay);
    }
    let (reg, pd, alpha) = (inv.reg as i64, inv.pd as i64, inv.alpha as i64);
    Ok(reg <= (alpha - 1) * pd - alpha)
}

struct Context<'a, E> {
    ideal: &'a MonomialIdeal<E>,
    inv: Invariants,
    field: FieldSpec,
}

struct Outcome<E> {
    status: Status,
    entry: RuleEntry,
    trace: Option<Vec<TraceStep<E>>>,
}

impl<E> Outcome<E> {
    fn new(status: Status, id: RuleId, witnesses: Vec<String>) -> Self {
        Outcome {
            status,
            entry: RuleEntry::new(id, witnesses),
            trace: None,
        }
    }
}

fn evaluate<E: Exponent>(rule: RuleId, ctx: &Context<'_, E>) -> Result<Option<Outcome<E>>> {
    let inv = &ctx.inv;
    let ideal = ctx.ideal;
    let ph = || vec![format!("pd={}", inv.pd), format!("height={}", inv.height)];
    Ok(match rule {
        RuleId::R1 if !inv.is_cm => Some(Outcome::new(Status::NotLicci, rule, ph())),
        RuleId::R2 if ideal.is_principal() => Some(Outcome::new(Status::Licci, rule, vec!["principal".into()])),
        RuleId::R2 if ideal.is_complete_intersection() => Some(Outcome::new(
            Status::Licci,
            rule,
            vec![format!("complete intersection of {} generators", ideal.num_gens())],
        )),
        RuleId::R3 if inv.is_cm && inv.height <= 2 => Some(Outcome::new(Status::Licci, rule, ph())),
        RuleId::R4 if inv.is_gorenstein && inv.height == 3 => {
            let mut w = ph();
            w.push("last total Betti number=1".into());
            Some(Outcome::new(Status::Licci, rule, w))
        }
        RuleId::R5 if inv.is_cm && obstruction_not_licci(inv)? => {
            let w = vec![
                format!("reg={}", inv.reg),
                format!("pd={}", inv.pd),
                format!("alpha={}", inv.alpha),
                format!("{} <= ({} - 1)*{} - {}", inv.reg, inv.alpha, inv.pd, inv.alpha),
            ];
            Some(Outcome::new(Status::NotLicci, rule, w))
        }
        RuleId::R6 if ideal.is_artinian() => {
            let v = hu_decide(ideal)?;
            Some(Outcome {
                status: v.status,
                entry: v.rules.into_iter().next().expect("R6 entry"),
                trace: v.hu_trace,
            })
        }
        RuleId::R7 if ideal.is_squarefree() && inv.is_cm => {
            let dual = alexander_dual(ideal)?;
            let dual_table = betti_table(&dual, ctx.field)?;
            let dual_inv = invariants(&dual_table, &dual)?;
            if !dual_inv.is_cm {
                None
            } else {
                let by_vars = ideal.is_generated_by_variables();
                let status = if inv.height <= 2 || by_vars {
                    Status::Licci
                } else {
                    Status::NotLicci
                };
                let w = vec![
                    format!("height={}", inv.height),
                    format!("dual pd={} height={}", dual_inv.pd, dual_inv.height),
                    format!("generated by variables={by_vars}"),
                ];
                Some(Outcome::new(status, rule, w))
            }
        }
        _ => None,
    })
}

fn context<'a, E: Exponent>(ideal: &'a MonomialIdeal<E>, field: FieldSpec) -> Result<(Context<'a, E>, BettiTable)> {
    let table = betti_table(ideal, field)?;
    let inv = invariants(&table, ideal)?;
    Ok((Context { ideal, inv, field }, table))
}

/// Runs the cascade; the first rule that fires decides.
pub fn classify<E: Exponent>(ideal: &MonomialIdeal<E>, field: FieldSpec) -> Result<LicciVerdict<E>> {
    let (ctx, _) = context(ideal, field)?;
    for rule in RuleId::CASCADE {
        if let Some(out) = evaluate(rule, &ctx)? {
            return Ok(LicciVerdict {
                status: out.status,
                rules: vec![out.entry],
                hu_trace: out.trace,
            });
        }
    }
    Ok(LicciVerdict::unknown())
}

/// Every rule of the cascade that applies, with its status.
#[derive(Clone, Debug)]
pub struct Audit {
    pub fired: Vec<(RuleEntry, Status)>,
}

impl Audit {
    /// Some rule says licci while another says not licci.
    pub fn contradiction(&self) -> bool {
        let says = |s| self.fired.iter().any(|(_, t)| *t == s);
        says(Status::Licci) && says(Status::NotLicci)
    }
}

pub fn audit<E: Exponent>(ideal: &MonomialIdeal<E>, field: FieldSpec) -> Result<Audit> {
    let (ctx, _) = context(ideal, field)?;
    let mut fired = Vec::new();
    for rule in RuleId::CASCADE {
        if let Some(out) = evaluate(rule, &ctx)? {
            fired.push((out.entry, out.status));
        }
    }
    Ok(Audit { fired })
}

/// For a licci verdict, whether `height <= floor(n / alpha) + 1`; other
/// verdicts pass trivially. A false return flags an unsound verdict.
pub fn licci_bound_check<E: Exponent>(ideal: &MonomialIdeal<E>, verdict: &LicciVerdict<E>) -> Result<bool> {
    if verdict.status != Status::Licci {
        return Ok(true);
    }
    let n = ideal.nvars();
    Ok(ideal.height()? <= n / ideal.alpha()? + 1)
}

/// Licci verdict for `P_t(Σ_t G)` through the Huneke-Ulrich iteration on its
/// depolarization.
pub fn suspension_verdict<E: Exponent>(g: &Graph, t: usize) -> Result<LicciVerdict<E>> {
    let depol: MonomialIdeal<E> = depolarize_suspension(g, t)?;
    let mut v = hu_decide(&depol)?;
    v.rules.insert(
        0,
        RuleEntry::new(
            RuleId::Bridge,
            vec![format!("G={g}"), format!("t={t}"), format!("depolarization={depol}")],
        ),
    );
    Ok(v)
}

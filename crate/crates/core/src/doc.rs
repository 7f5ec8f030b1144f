//! JSON documents for ideals, graphs, Betti tables, verdicts and reports.
//!
//! Every document round-trips: `from_doc(to_doc(x)) == x`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::betti::{BettiTable, Invariants};
use crate::error::{Error, Result};
use crate::exactfield::FieldSpec;
use crate::graphs::Graph;
use crate::licci::{LicciVerdict, RuleEntry, Status, TraceStep};
use crate::monomial::{Exponent, Monomial, MonomialIdeal, Ring};

/// `{"vars": [...], "gens": [[exponents], ...]}`; no generators is the zero
/// ideal, a single all-zero vector the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<u64>>,
}

impl IdealDoc {
    pub fn from_ideal<E: Exponent>(ideal: &MonomialIdeal<E>) -> Self {
        IdealDoc {
            vars: ideal.ring().names().to_vec(),
            gens: ideal.gens().iter().map(Monomial::exponents_u64).collect(),
        }
    }

    pub fn to_ideal<E: Exponent>(&self) -> Result<MonomialIdeal<E>> {
        let ring = Ring::try_new(self.vars.iter().cloned())?;
        let n = ring.nvars();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                if g.len() != n {
                    return Err(Error::Parse(format!(
                        "exponent vector of length {} in a ring of {n} variables",
                        g.len()
                    )));
                }
                Monomial::from_u64s(g)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::new(ring, gens))
    }
}

/// `{"n": 4, "labels": [...], "edges": [[1, 2], ...]}` with 1-based
/// endpoints; `labels` defaults to `x1..xn` and is omitted when standard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        let standard = g.labels().iter().enumerate().all(|(i, l)| *l == format!("x{}", i + 1));
        GraphDoc {
            n: g.n(),
            labels: (!standard).then(|| g.labels().to_vec()),
            edges: g.edges().map(|(a, b)| [a + 1, b + 1]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let labels = match &self.labels {
            Some(l) if l.len() != self.n => {
                return Err(Error::InvalidGraph(format!(
                    "{} labels for {} vertices",
                    l.len(),
                    self.n
                )))
            }
            Some(l) => l.clone(),
            None => (1..=self.n).map(|i| format!("x{i}")).collect(),
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[a, b] in &self.edges {
            if a == 0 || b == 0 {
                return Err(Error::InvalidGraph("edge endpoints are 1-based".into()));
            }
            edges.push((a - 1, b - 1));
        }
        Graph::new(labels, edges)
    }
}

/// `{"n_vars": 3, "field": "q", "entries": [[i, j, rank], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiDoc {
    pub n_vars: usize,
    pub field: String,
    pub entries: Vec<[usize; 3]>,
}

impl BettiDoc {
    pub fn from_table(t: &BettiTable) -> Self {
        BettiDoc {
            n_vars: t.n_vars(),
            field: t.field().to_string(),
            entries: t.entries().map(|((i, j), r)| [i, j, r]).collect(),
        }
    }

    pub fn to_table(&self) -> Result<BettiTable> {
        let field: FieldSpec = self.field.parse()?;
        if let Some(e) = self.entries.iter().find(|e| e[1] < e[0] || e[2] == 0) {
            return Err(Error::Parse(format!("invalid Betti entry {e:?}")));
        }
        Ok(BettiTable::new(
            self.n_vars,
            field,
            self.entries.iter().map(|e| ((e[0], e[1]), e[2])),
        ))
    }
}

/// Output of the `betti` command: the table plus derived invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReportDoc {
    pub table: BettiDoc,
    pub invariants: Invariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDoc {
    pub k: usize,
    pub ideal: IdealDoc,
    pub summary: String,
}

/// `{"status": "Licci", "rules": [...], "trace": [...]}`; `trace` is absent
/// unless the Huneke-Ulrich iteration decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictDoc {
    pub status: Status,
    pub rules: Vec<RuleEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceDoc>>,
}

impl VerdictDoc {
    pub fn from_verdict<E: Exponent>(v: &LicciVerdict<E>) -> Self {
        VerdictDoc {
            status: v.status,
            rules: v.rules.clone(),
            trace: v.hu_trace.as_ref().map(|steps| {
                steps
                    .iter()
                    .map(|s| TraceDoc {
                        k: s.k,
                        ideal: IdealDoc::from_ideal(&s.ideal),
                        summary: s.summary.clone(),
                    })
                    .collect()
            }),
        }
    }

    pub fn to_verdict<E: Exponent>(&self) -> Result<LicciVerdict<E>> {
        let trace = match &self.trace {
            None => None,
            Some(steps) => Some(
                steps
                    .iter()
                    .map(|s| {
                        Ok(TraceStep {
                            k: s.k,
                            ideal: s.ideal.to_ideal()?,
                            summary: s.summary.clone(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(LicciVerdict {
            status: self.status,
            rules: self.rules.clone(),
            hu_trace: trace,
        })
    }
}

/// Indented JSON with a trailing newline. Arrays holding no objects or
/// arrays stay on one line, so exponent vectors and Betti entries read as rows.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|v| !v.is_array() && !v.is_object())
}

fn write_value(value: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize, out: &mut String| out.extend(std::iter::repeat_n("  ", d));
    match value {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if is_flat(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                pad(depth + 1, out);
                write_value(item, depth + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                pad(depth + 1, out);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(item, depth + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(depth, out);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_table;
    use crate::graphs::GraphKind;
    use crate::licci::{classify, hu_decide};
    use crate::linkage::verify_suspension_chain;
    use crate::linkage::Report;
    use proptest::prelude::*;

    type Ideal = MonomialIdeal<u16>;

    #[test]
    fn ideal_document_layout() {
        let r = Ring::standard(2);
        let i = Ideal::parse("x1^2, x1*x2", &r).unwrap();
        let json = to_json(&IdealDoc::from_ideal(&i));
        assert_eq!(
            json,
            "{\n  \"vars\": [\"x1\", \"x2\"],\n  \"gens\": [\n    [2, 0],\n    [1, 1]\n  ]\n}\n"
        );
        let compact: IdealDoc = from_json(&json).unwrap();
        assert_eq!(compact.gens, vec![vec![2, 0], vec![1, 1]]);
        let zero = IdealDoc::from_ideal(&Ideal::zero(r.clone()));
        assert!(zero.gens.is_empty());
        assert!(zero.to_ideal::<u16>().unwrap().is_zero());
        let unit = IdealDoc::from_ideal(&Ideal::unit(r));
        assert!(unit.to_ideal::<u16>().unwrap().is_unit());
    }

    #[test]
    fn malformed_documents() {
        assert!(from_json::<IdealDoc>("{\"vars\": [\"x\"]}").is_err());
        assert!(from_json::<IdealDoc>("{\"vars\": [\"x\"], \"gens\": [], \"extra\": 1}").is_err());
        let bad = IdealDoc {
            vars: vec!["x".into()],
            gens: vec![vec![1, 2]],
        };
        assert!(bad.to_ideal::<u16>().is_err());
        let big = IdealDoc {
            vars: vec!["x".into()],
            gens: vec![vec![300]],
        };
        assert!(matches!(big.to_ideal::<u8>(), Err(Error::ExponentOverflow(300))));
        let dup = IdealDoc {
            vars: vec!["x".into(), "x".into()],
            gens: vec![],
        };
        assert!(dup.to_ideal::<u16>().is_err());
        let g = GraphDoc {
            n: 2,
            labels: None,
            edges: vec![[0, 1]],
        };
        assert!(g.to_graph().is_err());
        let b = BettiDoc {
            n_vars: 1,
            field: "fp:4".into(),
            entries: vec![],
        };
        assert!(matches!(b.to_table(), Err(Error::NotPrime(4))));
    }

    #[test]
    fn graph_documents() {
        let g = Graph::build(&GraphKind::Cycle(4)).unwrap();
        let d = GraphDoc::from_graph(&g);
        assert!(d.labels.is_none());
        assert_eq!(d.edges, vec![[1, 2], [1, 4], [2, 3], [3, 4]]);
        assert_eq!(d.to_graph().unwrap(), g);
        let s = g.suspension(2).unwrap();
        let d = GraphDoc::from_graph(&s);
        assert!(d.labels.is_some());
        assert_eq!(from_json::<GraphDoc>(&to_json(&d)).unwrap().to_graph().unwrap(), s);
    }

    #[test]
    fn verdict_and_report_documents() {
        let r = Ring::standard(3);
        let i = Ideal::parse("x1^2, x2^2, x3^2, x1*x2, x2*x3", &r).unwrap();
        for v in [
            hu_decide(&i).unwrap(),
            classify(&Ideal::maximal(r.clone()), FieldSpec::Rationals).unwrap(),
        ] {
            let doc = VerdictDoc::from_verdict(&v);
            let back: VerdictDoc = from_json(&to_json(&doc)).unwrap();
            assert_eq!(back.to_verdict::<u16>().unwrap(), v);
        }
        let rep = verify_suspension_chain(2, 3).unwrap();
        assert_eq!(from_json::<Report>(&to_json(&rep)).unwrap(), rep);
    }

    fn ideal_strategy() -> impl Strategy<Value = Ideal> {
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0u16..=4, n), 0..=5)
                .prop_map(move |g| Ideal::new(Ring::standard(n), g.into_iter().map(Monomial::new)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ideals_round_trip(i in ideal_strategy()) {
            let json = to_json(&IdealDoc::from_ideal(&i));
            let back: Ideal = from_json::<IdealDoc>(&json).unwrap().to_ideal().unwrap();
            prop_assert_eq!(back.ring().names(), i.ring().names());
            prop_assert_eq!(back, i);
        }

        #[test]
        fn tables_round_trip(i in ideal_strategy(), two in any::<bool>()) {
            prop_assume!(i.is_proper() && !i.is_zero());
            let field = if two { FieldSpec::PrimeField(2) } else { FieldSpec::Rationals };
            let t = betti_table(&i, field).unwrap();
            let back = from_json::<BettiDoc>(&to_json(&BettiDoc::from_table(&t))).unwrap();
            prop_assert_eq!(back.to_table().unwrap(), t);
        }

        #[test]
        fn graphs_round_trip(mask in 0u32..1 << 10) {
            let pairs: Vec<(usize, usize)> =
                (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p);
            let g = Graph::with_standard_labels(5, edges).unwrap();
            let back = from_json::<GraphDoc>(&to_json(&GraphDoc::from_graph(&g))).unwrap();
            prop_assert_eq!(back.to_graph().unwrap(), g);
        }

        #[test]
        fn verdicts_round_trip(i in ideal_strategy()) {
            prop_assume!(i.is_proper() && !i.is_zero());
            let v = classify(&i, FieldSpec::Rationals).unwrap();
            let back = from_json::<VerdictDoc>(&to_json(&VerdictDoc::from_verdict(&v))).unwrap();
            prop_assert_eq!(back.to_verdict::<u16>().unwrap(), v);
        }
    }
}

//! Seeded random ideals and the curated graph lists used by the harness.
//! Every corpus is a pure function of its seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graphs::{Graph, GraphKind};
use crate::monomial::{Monomial, MonomialIdeal, Ring};

pub const DEFAULT_SEED: u64 = 1729;

/// Proper nonzero squarefree ideals on 2 to `max_vars` variables with 1 to
/// 5 generators.
pub fn random_squarefree(seed: u64, count: usize, max_vars: usize) -> Vec<MonomialIdeal<u16>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_vars);
            let k = rng.gen_range(1..=5);
            let gens = (0..k).map(|_| Monomial::from_mask(n, rng.gen_range(1..1u64 << n)));
            MonomialIdeal::new(Ring::standard(n), gens.collect::<Vec<_>>())
        })
        .collect()
}

/// Proper nonzero monomial ideals on 1 to 6 variables with 1 to 6 generators
/// and exponents at most 3.
pub fn random_monomial(seed: u64, count: usize) -> Vec<MonomialIdeal<u16>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            let k = rng.gen_range(1..=6);
            let gens: Vec<Monomial<u16>> = (0..k)
                .map(|_| loop {
                    let exps: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
                    if exps.iter().any(|&e| e > 0) {
                        break Monomial::new(exps);
                    }
                })
                .collect();
            MonomialIdeal::new(Ring::standard(n), gens)
        })
        .collect()
}

/// A named graph of the curated suspension grid.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

/// `K3`, the path on three vertices, `C4`, two disjoint edges, and the stars
/// `K_{1,k}` for `k <= 3` with up to two isolated vertices.
pub fn suspension_grid() -> Vec<NamedGraph> {
    let mut out = vec![
        NamedGraph {
            name: "K3".into(),
            graph: Graph::build(&GraphKind::Complete(3)).expect("valid"),
        },
        NamedGraph {
            name: "P3".into(),
            graph: Graph::build(&GraphKind::Path(3)).expect("valid"),
        },
        NamedGraph {
            name: "C4".into(),
            graph: Graph::build(&GraphKind::Cycle(4)).expect("valid"),
        },
        NamedGraph {
            name: "2K2".into(),
            graph: Graph::with_standard_labels(4, [(0, 1), (2, 3)]).expect("valid"),
        },
    ];
    for edges in 1..=3 {
        for isolated in 0..=2 {
            out.push(NamedGraph {
                name: format!("K1,{edges}+{isolated}"),
                graph: Graph::build(&GraphKind::Star { edges, isolated }).expect("valid"),
            });
        }
    }
    out
}

/// Every labeled simple graph on `n` vertices, in edge-mask order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p);
        Graph::with_standard_labels(n, edges).expect("valid")
    })
}

/// Labeled graphs on 3 to 6 vertices without isolated vertices.
pub fn complementary_corpus() -> Vec<Graph> {
    (3..=6)
        .flat_map(|n| labeled_graphs(n).filter(|g| !g.has_isolated_vertex()))
        .collect()
}

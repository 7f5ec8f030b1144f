//! Finite simple graphs and the ideals built from them.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{Exponent, Monomial, MonomialIdeal, Ring};

/// A labeled simple graph; edges are stored as `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

/// Named graph families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Cycle(usize),
    Complete(usize),
    /// Path on this many vertices.
    Path(usize),
    /// Center `x1` joined to `edges` leaves, plus isolated vertices.
    Star {
        edges: usize,
        isolated: usize,
    },
    /// Zero-based edge list on `n` vertices.
    EdgeList {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl FromStr for GraphKind {
    type Err = Error;

    /// `cycle:5`, `complete:4`, `path:3`, `star:3`, `star:3+2` (two isolated),
    /// `edges:4:1-2,1-3` (one-based).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown graph builder `{s}`"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "cycle" => Ok(GraphKind::Cycle(num(rest)?)),
            "complete" => Ok(GraphKind::Complete(num(rest)?)),
            "path" => Ok(GraphKind::Path(num(rest)?)),
            "star" => {
                let (k, m) = rest.split_once('+').unwrap_or((rest, "0"));
                Ok(GraphKind::Star {
                    edges: num(k)?,
                    isolated: num(m)?,
                })
            }
            "edges" => {
                let (n, list) = rest.split_once(':').unwrap_or((rest, ""));
                let n = num(n)?;
                let mut edges = Vec::new();
                for e in list.split(',').filter(|e| !e.trim().is_empty()) {
                    let (a, b) = e.split_once('-').ok_or_else(bad)?;
                    let (a, b) = (num(a)?, num(b)?);
                    if a == 0 || b == 0 {
                        return Err(Error::Parse("edge endpoints are 1-based".into()));
                    }
                    edges.push((a - 1, b - 1));
                }
                Ok(GraphKind::EdgeList { n, edges })
            }
            _ => Err(bad()),
        }
    }
}

/// Structural predicates of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub is_forest: bool,
    pub is_tree: bool,
    pub is_complete: bool,
    pub is_cycle: bool,
    /// All edges share one vertex (true for edgeless graphs).
    pub is_star_plus_isolated: bool,
    pub has_two_disjoint_edges: bool,
    pub has_triangle: bool,
    pub edge_count: usize,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Ring::try_new(labels.iter().cloned()).map_err(|e| Error::InvalidGraph(e.to_string()))?;
        let n = labels.len();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", a + 1)));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {}-{} outside {n} vertices",
                    a + 1,
                    b + 1
                )));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("repeated edge {}-{}", a + 1, b + 1)));
            }
        }
        Ok(Graph { labels, edges: set })
    }

    /// Vertices labeled `x1, ..., xn`.
    pub fn with_standard_labels(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), edges)
    }

    pub fn build(kind: &GraphKind) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidGraph(msg.to_string()));
        match *kind {
            GraphKind::Cycle(n) => {
                if n < 3 {
                    return invalid("a cycle needs at least 3 vertices");
                }
                Self::with_standard_labels(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            GraphKind::Complete(n) => {
                if n == 0 {
                    return invalid("a complete graph needs a vertex");
                }
                Self::with_standard_labels(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            }
            GraphKind::Path(n) => {
                if n == 0 {
                    return invalid("a path needs a vertex");
                }
                Self::with_standard_labels(n, (1..n).map(|i| (i - 1, i)))
            }
            GraphKind::Star { edges, isolated } => {
                Self::with_standard_labels(1 + edges + isolated, (1..=edges).map(|i| (0, i)))
            }
            GraphKind::EdgeList { n, ref edges } => {
                if n == 0 {
                    return invalid("a graph needs a vertex");
                }
                Self::with_standard_labels(n, edges.iter().copied())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn ring(&self) -> Ring {
        Ring::new(self.labels.iter().cloned())
    }

    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n()];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n()).any(|v| self.degree(v) == 0)
    }

    pub fn components(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = 0u64;
        let mut count = 0;
        for v in 0..self.n() {
            if seen >> v & 1 == 1 {
                continue;
            }
            count += 1;
            let mut stack = vec![v];
            seen |= 1 << v;
            while let Some(u) = stack.pop() {
                let mut next = adj[u] & !seen;
                seen |= next;
                while next != 0 {
                    stack.push(next.trailing_zeros() as usize);
                    next &= next - 1;
                }
            }
        }
        count
    }

    pub fn classify(&self) -> GraphClass {
        let n = self.n();
        let m = self.edge_count();
        let components = self.components();
        let is_forest = m + components == n;
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let is_star_plus_isolated = edges.is_empty() || (0..n).any(|v| edges.iter().all(|&(a, b)| a == v || b == v));
        let has_two_disjoint_edges = edges.iter().enumerate().any(|(k, &(a, b))| {
            edges[k + 1..]
                .iter()
                .any(|&(c, d)| a != c && a != d && b != c && b != d)
        });
        let adj = self.adjacency();
        let has_triangle = edges.iter().any(|&(a, b)| adj[a] & adj[b] != 0);
        GraphClass {
            is_forest,
            is_tree: is_forest && components == 1,
            is_complete: m == n * n.saturating_sub(1) / 2,
            is_cycle: n >= 3 && components == 1 && (0..n).all(|v| self.degree(v) == 2),
            is_star_plus_isolated,
            has_two_disjoint_edges,
            has_triangle,
            edge_count: m,
        }
    }

    /// Vertex masks of the simple paths on `t` vertices (each path once).
    pub fn path_supports(&self, t: usize) -> Vec<u64> {
        let adj = self.adjacency();
        let mut found = HashSet::new();
        fn walk(adj: &[u64], t: usize, last: usize, mask: u64, len: usize, out: &mut HashSet<u64>) {
            if len == t {
                out.insert(mask);
                return;
            }
            let mut next = adj[last] & !mask;
            while next != 0 {
                let v = next.trailing_zeros() as usize;
                walk(adj, t, v, mask | 1 << v, len + 1, out);
                next &= next - 1;
            }
        }
        if t >= 1 {
            for v in 0..self.n() {
                walk(&adj, t, v, 1 << v, 1, &mut found);
            }
        }
        let mut out: Vec<u64> = found.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// The ideal generated by the edges.
    pub fn edge_ideal<E: Exponent>(&self) -> MonomialIdeal<E> {
        self.path_ideal(2).expect("t = 2 is valid")
    }

    /// The `t`-path ideal: one squarefree generator per simple path on `t`
    /// vertices; the zero ideal when no such path exists.
    pub fn path_ideal<E: Exponent>(&self, t: usize) -> Result<MonomialIdeal<E>> {
        if t < 2 {
            return Err(Error::InvalidGraph(format!("path length t = {t} must be at least 2")));
        }
        let n = self.n();
        Ok(MonomialIdeal::new(
            self.ring(),
            self.path_supports(t).into_iter().map(|m| Monomial::from_mask(n, m)),
        ))
    }

    /// Generated by `x_1...x_n / (x_i x_j)` over the edges `{i, j}`.
    pub fn complementary_edge_ideal<E: Exponent>(&self) -> Result<MonomialIdeal<E>> {
        let n = self.n();
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "complementary edge ideals need at least 3 vertices, got {n}"
            )));
        }
        if self.edges.is_empty() {
            return Err(Error::InvalidGraph(
                "complementary edge ideal of an edgeless graph".into(),
            ));
        }
        let all = crate::sqfree::full_mask(n);
        Ok(MonomialIdeal::new(
            self.ring(),
            self.edges
                .iter()
                .map(|&(a, b)| Monomial::from_mask(n, all & !(1 << a) & !(1 << b))),
        ))
    }

    /// Attaches a pendant path `x_i - x_i_1 - ... - x_i_{t-1}` at every
    /// vertex. Vertex `x_i_j` has index `n + i*(t-1) + (j-1)`.
    pub fn suspension(&self, t: usize) -> Result<Graph> {
        if t < 2 {
            return Err(Error::InvalidGraph(format!(
                "suspension length t = {t} must be at least 2"
            )));
        }
        let n = self.n();
        let mut labels = self.labels.clone();
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        for i in 0..n {
            for j in 1..t {
                labels.push(format!("{}_{}", self.labels[i], j));
                let here = suspension_index(n, t, i, j);
                let prev = if j == 1 { i } else { suspension_index(n, t, i, j - 1) };
                edges.push((prev, here));
            }
        }
        Graph::new(labels, edges)
    }
}

/// Index of the pendant vertex `x_{ij}` (`j >= 1`) inside the suspension;
/// `j = 0` is the base vertex itself.
pub fn suspension_index(n: usize, t: usize, i: usize, j: usize) -> usize {
    if j == 0 {
        i
    } else {
        n + i * (t - 1) + (j - 1)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices {{", self.n())?;
        for (k, (a, b)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", self.labels[a], self.labels[b])?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Ideal = MonomialIdeal<u16>;

    fn example_graph() -> Graph {
        Graph::build(&"edges:4:1-2,1-3,2-3,1-4".parse().unwrap()).unwrap()
    }

    #[test]
    fn builders() {
        let c3 = Graph::build(&GraphKind::Cycle(3)).unwrap();
        let k3 = Graph::build(&GraphKind::Complete(3)).unwrap();
        assert_eq!(c3, k3);
        let star = Graph::build(&GraphKind::Star { edges: 1, isolated: 0 }).unwrap();
        assert_eq!(star.n(), 2);
        assert_eq!(star.edge_count(), 1);
        assert_eq!(example_graph().edge_count(), 4);
        assert!(Graph::build(&GraphKind::Cycle(2)).is_err());
        assert!(Graph::with_standard_labels(2, [(0, 0)]).is_err());
        assert!(Graph::with_standard_labels(2, [(0, 1), (1, 0)]).is_err());
        assert!("wheel:5".parse::<GraphKind>().is_err());
        assert_eq!(
            "star:3+2".parse::<GraphKind>().unwrap(),
            GraphKind::Star { edges: 3, isolated: 2 }
        );
    }

    #[test]
    fn classification() {
        let c4 = Graph::build(&GraphKind::Cycle(4)).unwrap().classify();
        assert!(!c4.is_forest && c4.is_cycle && !c4.has_triangle && c4.has_two_disjoint_edges);
        let k3 = Graph::build(&GraphKind::Complete(3)).unwrap().classify();
        assert!(k3.has_triangle && k3.is_complete && !k3.is_star_plus_isolated);
        let two = Graph::with_standard_labels(4, [(0, 1), (2, 3)]).unwrap().classify();
        assert!(two.is_forest && !two.is_tree && two.has_two_disjoint_edges);
        assert!(!two.is_star_plus_isolated);
        let empty = Graph::with_standard_labels(3, []).unwrap().classify();
        assert!(empty.is_star_plus_isolated && empty.is_forest);
    }

    #[test]
    fn path_ideals() {
        let k3 = Graph::build(&GraphKind::Complete(3)).unwrap();
        let p3: Ideal = k3.path_ideal(3).unwrap();
        assert_eq!(p3, Ideal::parse("x1*x2*x3", &k3.ring()).unwrap());

        let s2 = k3.suspension(2).unwrap();
        let expected = Ideal::parse(
            "x1*x2*x3, x1*x2*x1_1, x1*x3*x1_1, x1*x2*x2_1, x1*x3*x3_1, x2*x3*x2_1, x2*x3*x3_1",
            &s2.ring(),
        )
        .unwrap();
        assert_eq!(s2.path_ideal::<u16>(3).unwrap(), expected);

        for t in 3..7 {
            let c = Graph::build(&GraphKind::Cycle(t)).unwrap();
            let p: Ideal = c.path_ideal(t).unwrap();
            assert_eq!(p.num_gens(), 1);
            assert_eq!(p.gens()[0].degree(), t);
        }
        // no path on 4 vertices in a triangle
        assert!(k3.path_ideal::<u16>(4).unwrap().is_zero());
        assert!(k3.path_ideal::<u16>(1).is_err());
    }

    #[test]
    fn complementary_ideals() {
        let g = example_graph();
        let ic: Ideal = g.complementary_edge_ideal().unwrap();
        assert_eq!(ic, Ideal::parse("x3*x4, x2*x4, x2*x3, x1*x4", &g.ring()).unwrap());
        let k3 = Graph::build(&GraphKind::Complete(3)).unwrap();
        assert_eq!(k3.complementary_edge_ideal::<u16>().unwrap(), Ideal::maximal(k3.ring()));
        let path = Graph::build(&GraphKind::Path(3)).unwrap();
        assert_eq!(
            path.complementary_edge_ideal::<u16>().unwrap(),
            Ideal::parse("x3, x1", &path.ring()).unwrap()
        );
        assert!(Graph::build(&GraphKind::Path(2))
            .unwrap()
            .complementary_edge_ideal::<u16>()
            .is_err());
        assert!(Graph::with_standard_labels(3, [])
            .unwrap()
            .complementary_edge_ideal::<u16>()
            .is_err());
    }

    #[test]
    fn suspensions() {
        let k3 = Graph::build(&GraphKind::Complete(3)).unwrap();
        let s2 = k3.suspension(2).unwrap();
        assert_eq!((s2.n(), s2.edge_count()), (6, 6));
        let s3 = k3.suspension(3).unwrap();
        assert_eq!((s3.n(), s3.edge_count()), (9, 9));
        let dot = Graph::with_standard_labels(1, []).unwrap();
        for t in 2..6 {
            let s = dot.suspension(t).unwrap().classify();
            assert!(s.is_tree && s.edge_count == t - 1);
        }
    }

    /// Every labeled graph on `n` vertices.
    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        (0u32..1 << pairs.len()).map(move |s| {
            Graph::with_standard_labels(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| s >> k & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .unwrap()
        })
    }

    #[test]
    fn star_iff_no_two_disjoint_edges_or_triangle() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                let c = g.classify();
                assert_eq!(
                    c.is_star_plus_isolated,
                    !(c.has_two_disjoint_edges || c.has_triangle),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn construction_invariants() {
        for n in 1..=5 {
            for g in all_graphs(n).step_by(3) {
                assert_eq!(g.path_ideal::<u16>(2).unwrap(), g.edge_ideal::<u16>());
                for t in 2..=4 {
                    let p: Ideal = g.path_ideal(t).unwrap();
                    assert!(p.gens().iter().all(|m| m.degree() == t));
                    let s = g.suspension(t).unwrap();
                    assert_eq!(s.n(), n * t);
                    assert_eq!(s.edge_count(), g.edge_count() + n * (t - 1));
                }
                if n >= 3 && g.edge_count() > 0 {
                    let ic: Ideal = g.complementary_edge_ideal().unwrap();
                    assert!(ic.gens().iter().all(|m| m.degree() == n - 2));
                }
            }
        }
    }
}

//! Squarefree monomial ideals: Stanley-Reisner complexes, reduced homology,
//! minimal primes and Alexander duality.
//!
//! Faces are bitmasks over the ambient variables.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactfield::{rank_of_rows, FieldSpec, SparseRow};
use crate::monomial::{Exponent, Monomial, MonomialIdeal, Ring};

/// A simplicial complex on vertices `0..n`. The void complex has no faces;
/// the irrelevant complex has only the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<u64>,
}

fn face_order(a: &u64, b: &u64) -> std::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then(a.cmp(b))
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, faces: vec![] }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, faces: vec![0] }
    }

    /// The full simplex on all `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets(n, [full_mask(n)])
    }

    /// Builds a complex from a face list, which must be closed under subsets.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut faces: Vec<u64> = faces.into_iter().collect();
        faces.sort_by(face_order);
        faces.dedup();
        let set: HashSet<u64> = faces.iter().copied().collect();
        for &f in &faces {
            if f & !full_mask(n) != 0 {
                return Err(Error::Parse(format!("face {f:#b} uses unknown vertices")));
            }
            let mut bits = f;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                if !set.contains(&(f & !low)) {
                    return Err(Error::Parse(format!("face {f:#b} has a missing subface")));
                }
                bits &= bits - 1;
            }
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// Downward closure of the given facets.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = u64>) -> Self {
        let mut set = HashSet::new();
        for facet in facets {
            let mut sub = facet;
            loop {
                set.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let mut faces: Vec<u64> = set.into_iter().collect();
        faces.sort_by(face_order);
        SimplicialComplex { n, faces }
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces.binary_search_by(|f| face_order(f, &face)).is_ok()
    }

    /// `None` for the void complex, `Some(-1)` for the irrelevant one.
    pub fn dim(&self) -> Option<isize> {
        self.faces.last().map(|f| f.count_ones() as isize - 1)
    }

    /// The restriction to the vertex set `mask`.
    pub fn induced(&self, mask: u64) -> Self {
        SimplicialComplex {
            n: self.n,
            faces: self.faces.iter().copied().filter(|f| f & !mask == 0).collect(),
        }
    }

    fn by_size(&self) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = Vec::new();
        for &f in &self.faces {
            let k = f.count_ones() as usize;
            if out.len() <= k {
                out.resize(k + 1, Vec::new());
            }
            out[k].push(f);
        }
        out
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Reduced homology dimensions over `field`; entry `k` is the dimension of
/// `H_{k-1}`, so the vector starts at degree -1. The void complex yields an
/// empty vector (all homology vanishes).
pub fn reduced_homology_dims(c: &SimplicialComplex, field: FieldSpec) -> Vec<usize> {
    homology_by_size(&c.by_size(), field)
}

/// Same as [`reduced_homology_dims`] for faces already grouped by size, each
/// group sorted ascending.
pub(crate) fn homology_by_size(groups: &[Vec<u64>], field: FieldSpec) -> Vec<usize> {
    if groups.is_empty() || groups[0].is_empty() {
        return vec![];
    }
    let top = groups.len();
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        let lower = &groups[k - 1];
        let rows: Vec<SparseRow<i64>> = groups[k]
            .iter()
            .map(|&f| {
                let mut row: SparseRow<i64> = Vec::with_capacity(k);
                let mut bits = f;
                let mut pos = 0;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    let idx = lower
                        .binary_search(&(f & !low))
                        .expect("complex is closed under subsets");
                    row.push((idx as u32, if pos % 2 == 0 { 1 } else { -1 }));
                    pos += 1;
                    bits &= bits - 1;
                }
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        ranks[k] = rank_of_rows(lower.len(), rows, field);
    }
    (0..top).map(|k| groups[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// All subsets of `within` containing no mask from `nonfaces`, grouped by
/// size and sorted within each group.
pub(crate) fn faces_avoiding(within: u64, nonfaces: &[u64]) -> Vec<Vec<u64>> {
    let relevant: Vec<u64> = nonfaces.iter().copied().filter(|g| g & !within == 0).collect();
    let vertices: Vec<u64> = (0..64).map(|i| 1u64 << i).filter(|v| within & v != 0).collect();
    let mut groups: Vec<Vec<u64>> = vec![vec![0]];
    fn extend(face: u64, start: usize, size: usize, vertices: &[u64], nonfaces: &[u64], groups: &mut Vec<Vec<u64>>) {
        for (i, &v) in vertices.iter().enumerate().skip(start) {
            let g = face | v;
            if nonfaces.iter().any(|&m| m & v != 0 && m & !g == 0) {
                continue;
            }
            if groups.len() <= size + 1 {
                groups.push(Vec::new());
            }
            groups[size + 1].push(g);
            extend(g, i + 1, size + 1, vertices, nonfaces, groups);
        }
    }
    extend(0, 0, 0, &vertices, &relevant, &mut groups);
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

pub(crate) fn squarefree_masks<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<Vec<u64>> {
    ideal
        .gens()
        .iter()
        .map(|g| {
            if g.is_squarefree() {
                Ok(g.support())
            } else {
                Err(Error::NotSquarefree(g.display(ideal.ring()).to_string()))
            }
        })
        .collect()
}

fn require_proper_nonzero<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// The complex whose faces are the sets `F` with `x_F` outside the ideal.
pub fn stanley_reisner<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<SimplicialComplex> {
    let masks = squarefree_masks(ideal)?;
    let n = ideal.nvars();
    if ideal.is_unit() {
        return Ok(SimplicialComplex::void(n));
    }
    let faces = faces_avoiding(full_mask(n), &masks).into_iter().flatten();
    SimplicialComplex::from_faces(n, faces)
}

/// The squarefree ideal generated by the minimal non-faces of `c`.
pub fn stanley_reisner_ideal<E: Exponent>(c: &SimplicialComplex, ring: Ring) -> MonomialIdeal<E> {
    let n = c.nvertices();
    assert_eq!(ring.nvars(), n);
    let nonfaces = (0..=full_mask(n))
        .filter(|&s| !c.contains(s))
        .map(|s| Monomial::from_mask(n, s));
    MonomialIdeal::new(ring, nonfaces)
}

/// Minimal transversals of a clutter, by Berge's incremental construction.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut tr = vec![0u64];
    for &e in edges {
        let mut next: Vec<u64> = Vec::new();
        for &t in &tr {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut bits = e;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    next.push(t | v);
                    bits &= bits - 1;
                }
            }
        }
        next.sort_by(face_order);
        next.dedup();
        let mut kept: Vec<u64> = Vec::with_capacity(next.len());
        for t in next {
            if !kept.iter().any(|&k| k & !t == 0) {
                kept.push(t);
            }
        }
        tr = kept;
    }
    tr.sort_by(face_order);
    tr
}

/// Minimal primes of a squarefree ideal, as sorted variable index lists.
pub fn minimal_primes<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<Vec<Vec<usize>>> {
    require_proper_nonzero(ideal)?;
    let masks = squarefree_masks(ideal)?;
    Ok(minimal_transversals(&masks)
        .into_iter()
        .map(|t| (0..ideal.nvars()).filter(|i| t >> i & 1 == 1).collect())
        .collect())
}

/// The Alexander dual: generated by `x_F` over the minimal primes `(x_i : i in F)`.
pub fn alexander_dual<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<MonomialIdeal<E>> {
    require_proper_nonzero(ideal)?;
    let masks = squarefree_masks(ideal)?;
    let n = ideal.nvars();
    Ok(MonomialIdeal::new(
        ideal.ring().clone(),
        minimal_transversals(&masks)
            .into_iter()
            .map(|t| Monomial::from_mask(n, t)),
    ))
}

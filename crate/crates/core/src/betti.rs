//! Graded Betti tables of `S/I`.
//!
//! [`betti_table`] polarizes, then applies Hochster's formula
//! `β_{i,σ} = dim H̃_{|σ|-i-1}(Δ_σ)` over every `σ` in the lcm-closure of the
//! generator supports. [`taylor_oracle`] is an independent route through the
//! degree strands of the Taylor complex.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{rank_of_rows, FieldSpec, SparseRow};
use crate::monomial::{Exponent, Monomial, MonomialIdeal};
use crate::polar::polarize;
use crate::sqfree::{faces_avoiding, homology_by_size, squarefree_masks};

/// Largest generator count accepted by [`taylor_oracle`].
pub const TAYLOR_GENERATOR_LIMIT: usize = 14;

/// Nonzero graded Betti numbers `β_{i,j}(S/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n_vars: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    /// Zero ranks are dropped; repeated positions add up.
    pub fn new(n_vars: usize, field: FieldSpec, entries: impl IntoIterator<Item = ((usize, usize), usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (pos, r) in entries {
            if r > 0 {
                *map.entry(pos).or_insert(0) += r;
            }
        }
        BettiTable {
            n_vars,
            field,
            entries: map,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Entries `((i, j), rank)` in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Projective dimension.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|(&(k, _), _)| k == i).map(|(_, &v)| v).sum()
    }

    /// Largest `j - pd` with `β_{pd,j} ≠ 0`.
    pub fn last_column_reg(&self) -> usize {
        let pd = self.pd();
        self.entries
            .keys()
            .filter(|&&(i, _)| i == pd)
            .map(|&(i, j)| j - i)
            .max()
            .unwrap_or(0)
    }
}

/// Rows are indexed by `j - i`, columns by `i`; zeros print as `.`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.pd();
        let reg = self.reg();
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain((0..=pd).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap_or(1);
        let label = 7usize.max(reg.to_string().len() + 1);
        write!(f, "{:>label$}", "")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in 0..=reg {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for i in 0..=pd {
                match self.get(i, i + r) {
                    0 => write!(f, " {:>width$}", ".")?,
                    v => write!(f, " {:>width$}", v)?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
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

/// All unions of subsets of `masks`, including the empty union, ascending.
fn lcm_closure(masks: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::from([0]);
    let mut list = vec![0u64];
    for &g in masks {
        let fresh: Vec<u64> = list.iter().map(|&s| s | g).filter(|&u| seen.insert(u)).collect();
        list.extend(fresh);
    }
    list.sort_unstable();
    list
}

/// Betti table of `S/I` for a proper nonzero monomial ideal.
pub fn betti_table<E: Exponent>(ideal: &MonomialIdeal<E>, field: FieldSpec) -> Result<BettiTable> {
    require_proper_nonzero(ideal)?;
    let polarized = polarize(ideal)?;
    let masks = squarefree_masks(&polarized)?;
    let degrees = lcm_closure(&masks);
    let strands: Vec<(usize, Vec<usize>)> = degrees
        .par_iter()
        .map(|&sigma| {
            let groups = faces_avoiding(sigma, &masks);
            (sigma.count_ones() as usize, homology_by_size(&groups, field))
        })
        .collect();
    let mut entries = Vec::new();
    for (size, dims) in strands {
        // dims[k] = dim H̃_{k-1}, contributing to i = |σ| - k
        for (k, dim) in dims.into_iter().enumerate() {
            entries.push(((size - k, size), dim));
        }
    }
    Ok(BettiTable::new(ideal.nvars(), field, entries))
}

/// Betti table from the Taylor complex: the strand of multidegree `m` has a
/// basis of generator subsets with lcm `m`, and a boundary term survives only
/// when deleting the generator keeps the lcm.
pub fn taylor_oracle<E: Exponent>(ideal: &MonomialIdeal<E>, field: FieldSpec) -> Result<BettiTable> {
    require_proper_nonzero(ideal)?;
    let gens = ideal.gens();
    let g = gens.len();
    if g > TAYLOR_GENERATOR_LIMIT {
        return Err(Error::TooManyGenerators {
            count: g,
            limit: TAYLOR_GENERATOR_LIMIT,
        });
    }
    let n = ideal.nvars();
    let mut lcm: Vec<Monomial<E>> = Vec::with_capacity(1 << g);
    lcm.push(Monomial::one(n));
    for subset in 1usize..1 << g {
        let low = subset.trailing_zeros() as usize;
        let prev = lcm[subset & (subset - 1)].clone();
        lcm.push(prev.lcm(&gens[low]));
    }
    let mut strands: HashMap<&Monomial<E>, Vec<usize>> = HashMap::new();
    for (subset, m) in lcm.iter().enumerate() {
        strands.entry(m).or_default().push(subset);
    }
    let mut strands: Vec<(&Monomial<E>, Vec<usize>)> = strands.into_iter().collect();
    strands.sort_by(|a, b| a.0.exponents().cmp(b.0.exponents()));

    let results: Vec<(usize, Vec<(usize, usize)>)> = strands
        .par_iter()
        .map(|(m, subsets)| {
            let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); g + 1];
            for &s in subsets {
                by_size[s.count_ones() as usize].push(s);
            }
            // ranks[k] = rank of the strand differential from size k to k-1
            let mut ranks = vec![0usize; g + 2];
            for k in 1..=g {
                if by_size[k].is_empty() || by_size[k - 1].is_empty() {
                    continue;
                }
                let lower = &by_size[k - 1];
                let rows: Vec<SparseRow<i64>> = by_size[k]
                    .iter()
                    .map(|&a| {
                        let mut row = Vec::new();
                        let mut pos = 0;
                        let mut bits = a;
                        while bits != 0 {
                            let low = bits & bits.wrapping_neg();
                            let b = a & !low;
                            if lcm[b] == **m {
                                let idx = lower.binary_search(&b).expect("same strand");
                                row.push((idx as u32, if pos % 2 == 0 { 1 } else { -1 }));
                            }
                            pos += 1;
                            bits &= bits - 1;
                        }
                        row.sort_unstable_by_key(|e: &(u32, i64)| e.0);
                        row
                    })
                    .collect();
                ranks[k] = rank_of_rows(lower.len(), rows, field);
            }
            let betti: Vec<(usize, usize)> = (0..=g)
                .map(|k| (k, by_size[k].len() - ranks[k] - ranks[k + 1]))
                .filter(|&(_, b)| b > 0)
                .collect();
            (m.degree(), betti)
        })
        .collect();

    let entries = results
        .into_iter()
        .flat_map(|(deg, betti)| betti.into_iter().map(move |(i, b)| ((i, deg), b)));
    Ok(BettiTable::new(n, field, entries))
}

/// Homological invariants of `S/I` read off a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub pd: usize,
    pub reg: usize,
    pub depth: usize,
    pub height: usize,
    pub is_cm: bool,
    pub is_gorenstein: bool,
    pub has_linear_resolution: bool,
    pub alpha: usize,
}

/// `table` must be the Betti table of `S/ideal`.
pub fn invariants<E: Exponent>(table: &BettiTable, ideal: &MonomialIdeal<E>) -> Result<Invariants> {
    let pd = table.pd();
    let reg = table.reg();
    let height = ideal.height()?;
    let alpha = ideal.alpha()?;
    let is_cm = pd == height;
    let equigenerated = ideal.gens().iter().all(|g| g.degree() == alpha);
    Ok(Invariants {
        pd,
        reg,
        depth: table.n_vars() - pd,
        height,
        is_cm,
        is_gorenstein: is_cm && table.total(pd) == 1,
        has_linear_resolution: equigenerated && reg + 1 == alpha,
        alpha,
    })
}

/// Regularity of `S/I` for Artinian `I`: the top degree of the socle.
pub fn reg_artinian_socle<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<usize> {
    require_proper_nonzero(ideal)?;
    ideal
        .socle_monomials()?
        .iter()
        .map(Monomial::degree)
        .max()
        .ok_or(Error::UnitIdeal)
}

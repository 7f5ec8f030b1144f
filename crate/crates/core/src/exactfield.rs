//! Exact ranks of sparse integer matrices over the rationals and prime fields.
//!
//! Elimination is generic over an [`EliminationDomain`]. Integer domains are
//! fraction-free: a target row `r` is replaced by `s*r - u*p` with
//! `s = pivot/g`, `u = entry/g`, `g = gcd(pivot, entry)`, and every reduced row
//! is divided by its content. Row scaling never changes the rank over the
//! fraction field, so the count of pivots is the rank over the rationals.

use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, FromPrimitive, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field for homology and Betti computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}` (expected q or fp:<p>)")))?;
        let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad prime in `{s}`")))?;
        FieldSpec::prime(p)
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A sparse integer matrix given by its nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    /// Builds a matrix, dropping explicit zeros. Out-of-range or repeated
    /// positions are rejected.
    pub fn new(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> Result<Self> {
        let mut entries: Vec<_> = entries.into_iter().filter(|e| e.2 != 0).collect();
        for &(r, c, _) in &entries {
            if r >= rows || c >= cols {
                return Err(Error::InvalidMatrix(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
        }
        entries.sort_unstable();
        if let Some(w) = entries.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::InvalidMatrix(format!(
                "duplicate entry at ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(SparseMatrix { rows, cols, entries })
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, 1)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect();
        entries.sort_unstable();
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    fn to_rows(&self) -> Vec<SparseRow<i64>> {
        let mut rows: Vec<SparseRow<i64>> = vec![Vec::new(); self.rows];
        for &(r, c, v) in &self.entries {
            rows[r].push((c as u32, v));
        }
        rows
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        rank_of_rows(self.cols, self.to_rows(), field)
    }
}

/// Rank of a matrix over the given field.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    m.rank(field)
}

/// A row as `(column, value)` pairs sorted by column, without zeros.
pub type SparseRow<T> = Vec<(u32, T)>;

/// Arithmetic needed by the sparse eliminator.
pub trait EliminationDomain: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn embed(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// Returns `(s, u)` such that `s*entry - u*pivot == 0`.
    fn cancel(&self, pivot: &Self::Elem, entry: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// `s*x - u*y`, or `None` if the representation overflows.
    fn mul_sub(&self, s: &Self::Elem, x: &Self::Elem, u: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem>;
    fn mul(&self, s: &Self::Elem, x: &Self::Elem) -> Option<Self::Elem>;
    fn neg_mul(&self, u: &Self::Elem, y: &Self::Elem) -> Option<Self::Elem>;
    fn normalize(&self, _row: &mut SparseRow<Self::Elem>) {}
}

/// Fraction-free integer elimination over any signed integer type.
pub struct Integers<T>(PhantomData<fn() -> T>);

impl<T> Default for Integers<T> {
    fn default() -> Self {
        Integers(PhantomData)
    }
}

impl<T> EliminationDomain for Integers<T>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub + FromPrimitive + fmt::Debug + Send + Sync,
{
    type Elem = T;

    fn embed(&self, v: i64) -> T {
        T::from_i64(v).expect("i64 embeds in every supported integer type")
    }

    fn is_zero(&self, x: &T) -> bool {
        x.is_zero()
    }

    fn cancel(&self, pivot: &T, entry: &T) -> (T, T) {
        let g = pivot.gcd(entry);
        (pivot.div_floor(&g), entry.div_floor(&g))
    }

    fn mul_sub(&self, s: &T, x: &T, u: &T, y: &T) -> Option<T> {
        s.checked_mul(x)?.checked_sub(&u.checked_mul(y)?)
    }

    fn mul(&self, s: &T, x: &T) -> Option<T> {
        s.checked_mul(x)
    }

    fn neg_mul(&self, u: &T, y: &T) -> Option<T> {
        T::zero().checked_sub(&u.checked_mul(y)?)
    }

    fn normalize(&self, row: &mut SparseRow<T>) {
        let mut g = T::zero();
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
        if !g.is_zero() {
            for (_, v) in row.iter_mut() {
                *v = v.div_floor(&g);
            }
        }
    }
}

/// Arithmetic modulo a word-sized prime.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn inverse(&self, x: u64) -> u64 {
        debug_assert!(!x.is_multiple_of(self.p));
        pow_mod(x, self.p - 2, self.p)
    }
}

impl EliminationDomain for PrimeField {
    type Elem = u64;

    fn embed(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn cancel(&self, pivot: &u64, entry: &u64) -> (u64, u64) {
        (1, mul_mod(*entry, self.inverse(*pivot), self.p))
    }

    fn mul_sub(&self, s: &u64, x: &u64, u: &u64, y: &u64) -> Option<u64> {
        let a = mul_mod(*s, *x, self.p);
        let b = mul_mod(*u, *y, self.p);
        Some(if a >= b { a - b } else { a + (self.p - b) })
    }

    fn mul(&self, s: &u64, x: &u64) -> Option<u64> {
        Some(mul_mod(*s, *x, self.p))
    }

    fn neg_mul(&self, u: &u64, y: &u64) -> Option<u64> {
        let b = mul_mod(*u, *y, self.p);
        Some(if b == 0 { 0 } else { self.p - b })
    }
}

/// `s*x - u*y` for sorted sparse rows.
fn combine<D: EliminationDomain>(
    d: &D,
    s: &D::Elem,
    x: &SparseRow<D::Elem>,
    u: &D::Elem,
    y: &SparseRow<D::Elem>,
) -> Option<SparseRow<D::Elem>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let next = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, vy))) if cx == cy => {
                i += 1;
                j += 1;
                (*cx, d.mul_sub(s, vx, u, vy)?)
            }
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, d.mul(s, vx)?)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, d.mul(s, vx)?)
            }
            (_, Some((cy, vy))) => {
                j += 1;
                (*cy, d.neg_mul(u, vy)?)
            }
            (None, None) => unreachable!(),
        };
        if !d.is_zero(&next.1) {
            out.push(next);
        }
    }
    Some(out)
}

/// Rank of the row space spanned by `rows`, each with columns below `cols`.
/// Returns `None` when the element type overflows.
pub fn rank_over<D: EliminationDomain>(
    d: &D,
    cols: usize,
    rows: impl IntoIterator<Item = SparseRow<D::Elem>>,
) -> Option<usize> {
    // pivot row stored under its last (largest) column
    let mut pivots: Vec<Option<SparseRow<D::Elem>>> = vec![None; cols];
    let mut rank = 0;
    for mut row in rows {
        row.retain(|(_, v)| !d.is_zero(v));
        loop {
            let Some((c, v)) = row.last().cloned() else {
                break;
            };
            match &pivots[c as usize] {
                None => {
                    d.normalize(&mut row);
                    pivots[c as usize] = Some(row);
                    rank += 1;
                    break;
                }
                Some(p) => {
                    let pv = &p.last().expect("pivot rows are nonempty").1;
                    let (s, u) = d.cancel(pv, &v);
                    row = combine(d, &s, &row, &u, p)?;
                    d.normalize(&mut row);
                }
            }
        }
    }
    Some(rank)
}

pub(crate) fn rank_of_rows(cols: usize, rows: Vec<SparseRow<i64>>, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => {
            if let Some(r) = rank_over(&Integers::<i64>::default(), cols, rows.iter().cloned()) {
                return r;
            }
            let wide = Integers::<i128>::default();
            let lift = |r: &SparseRow<i64>| -> SparseRow<i128> { r.iter().map(|&(c, v)| (c, v as i128)).collect() };
            if let Some(r) = rank_over(&wide, cols, rows.iter().map(lift)) {
                return r;
            }
            let big = Integers::<BigInt>::default();
            rank_over(
                &big,
                cols,
                rows.iter()
                    .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()),
            )
            .expect("arbitrary precision never overflows")
        }
        FieldSpec::PrimeField(p) => {
            let fp = PrimeField::new(p).expect("FieldSpec holds a prime");
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, fp.embed(v))).collect());
            rank_over(&fp, cols, rows).expect("modular arithmetic never overflows")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent rank oracle: largest k with a nonzero k x k minor, with
    /// minors computed by Leibniz expansion over the integers.
    fn brute_rank(m: &[Vec<i64>], p: Option<i64>) -> usize {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..(1 << n))
                .filter(|s| s.count_ones() as usize == k)
                .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
                .collect()
        }
        fn det(a: &[Vec<i64>]) -> i64 {
            fn perms(n: usize) -> Vec<Vec<usize>> {
                if n == 0 {
                    return vec![vec![]];
                }
                let mut out = Vec::new();
                for p in perms(n - 1) {
                    for pos in 0..n {
                        let mut q = p.clone();
                        q.insert(pos, n - 1);
                        out.push(q);
                    }
                }
                out
            }
            let n = a.len();
            perms(n)
                .into_iter()
                .map(|p| {
                    let inv = (0..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    let prod: i64 = (0..n).map(|i| a[i][p[i]]).product();
                    if inv % 2 == 0 {
                        prod
                    } else {
                        -prod
                    }
                })
                .sum()
        }
        for k in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                    let d = det(&sub);
                    let nonzero = match p {
                        None => d != 0,
                        Some(p) => d.rem_euclid(p) != 0,
                    };
                    if nonzero {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn from_dense(m: &[Vec<i64>]) -> SparseMatrix {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let entries = m
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v)))
            .collect();
        SparseMatrix::new(rows, cols, entries).unwrap()
    }

    #[test]
    fn empty_and_identity() {
        let empty = SparseMatrix::new(0, 0, vec![]).unwrap();
        assert_eq!(rank(&empty, FieldSpec::Rationals), 0);
        assert_eq!(rank(&SparseMatrix::identity(2), FieldSpec::Rationals), 2);
    }

    #[test]
    fn triangle_edge_boundary_has_rank_two() {
        // edges 01, 02, 12 as rows; vertices as columns
        let d1 = vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]];
        assert_eq!(brute_rank(&d1, None), 2);
        assert_eq!(rank(&from_dense(&d1), FieldSpec::Rationals), 2);
    }

    #[test]
    fn characteristic_matters() {
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&from_dense(&m), FieldSpec::Rationals), 2);
        assert_eq!(rank(&from_dense(&m), FieldSpec::PrimeField(2)), 1);
        assert_eq!(rank(&from_dense(&m), FieldSpec::PrimeField(3)), 2);
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(SparseMatrix::new(1, 1, vec![(1, 0, 3)]).is_err());
        assert!(SparseMatrix::new(2, 2, vec![(0, 0, 3), (0, 0, 1)]).is_err());
        let m = SparseMatrix::new(2, 2, vec![(0, 0, 0)]).unwrap();
        assert!(m.entries().is_empty());
    }

    #[test]
    fn large_entries_fall_back_to_wider_integers() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, big - 1, 3], vec![big - 7, big, 5], vec![1, 2, big]];
        assert_eq!(rank(&from_dense(&m), FieldSpec::Rationals), 3);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("fp:32749".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(32749));
        assert!("fp:32748".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
        assert!(is_prime(2) && is_prime(4_294_967_291) && !is_prime(1) && !is_prime(561));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn dense() -> impl Strategy<Value = Vec<Vec<i64>>> {
            (0usize..5, 0usize..5)
                .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
        }

        proptest! {
            #[test]
            fn matches_minor_oracle(m in dense()) {
                let s = from_dense(&m);
                let r = rank(&s, FieldSpec::Rationals);
                prop_assert_eq!(r, brute_rank(&m, None));
                prop_assert!(r <= s.rows().min(s.cols()));
                prop_assert_eq!(r, rank(&s.transpose(), FieldSpec::Rationals));
                for p in [2u64, 3, 5] {
                    prop_assert_eq!(rank(&s, FieldSpec::PrimeField(p)), brute_rank(&m, Some(p as i64)));
                }
            }
        }
    }
}

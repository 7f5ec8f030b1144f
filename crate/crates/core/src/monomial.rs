//! Monomials and monomial ideals over a fixed, ordered set of variables.
//!
//! Ideals always hold their minimal generating set in a canonical order
//! (degree, then lexicographically decreasing exponents), so structural
//! equality is ideal equality. Variable names are display metadata only.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use num_traits::{PrimInt, Unsigned};

use crate::error::{Error, Result};

/// Unsigned integer types usable as exponents.
pub trait Exponent: PrimInt + Unsigned + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn as_u64(self) -> u64 {
        num_traits::ToPrimitive::to_u64(&self).expect("unsigned exponent fits u64")
    }

    fn try_from_u64(v: u64) -> Result<Self> {
        <Self as num_traits::NumCast>::from(v).ok_or(Error::ExponentOverflow(v))
    }
}

impl<T> Exponent for T where T: PrimInt + Unsigned + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

/// Environment variable overriding [`variable_cap`].
pub const VAR_CAP_ENV: &str = "LICCI_VAR_CAP";
pub const DEFAULT_VAR_CAP: usize = 24;

/// Largest ambient (after polarization) accepted by the Betti engine.
/// Face sets are bitmasks, so the cap never exceeds [`Ring::MAX_VARS`].
pub fn variable_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(VAR_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(Ring::MAX_VARS))
            .unwrap_or(DEFAULT_VAR_CAP)
    })
}

pub fn check_variable_cap(count: usize) -> Result<()> {
    let cap = variable_cap();
    if count > cap {
        Err(Error::VariableCap { count, cap })
    } else {
        Ok(())
    }
}

/// An ordered list of variable names.
#[derive(Clone, Debug)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub const MAX_VARS: usize = 64;

    pub fn try_new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > Self::MAX_VARS {
            return Err(Error::VariableCap {
                count: names.len(),
                cap: Self::MAX_VARS,
            });
        }
        let mut seen = HashSet::new();
        for n in &names {
            if n.is_empty() || !seen.insert(n.as_str()) {
                return Err(Error::Parse(format!("bad or repeated variable name `{n}`")));
            }
        }
        Ok(Ring { names: names.into() })
    }

    /// # Panics
    /// On more than [`Ring::MAX_VARS`] variables or repeated names.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Self::try_new(names).expect("valid ring")
    }

    /// Variables `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars()
    }
}

impl Eq for Ring {}

/// A monomial as an exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<E = u16> {
    exps: Vec<E>,
}

impl<E: Exponent> Monomial<E> {
    pub fn new(exps: Vec<E>) -> Self {
        Monomial { exps }
    }

    pub fn from_u64s(exps: &[u64]) -> Result<Self> {
        exps.iter()
            .map(|&e| E::try_from_u64(e))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::new)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![E::zero(); nvars],
        }
    }

    /// `x_var^e`.
    pub fn pure_power(nvars: usize, var: usize, e: E) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = e;
        m
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::pure_power(nvars, var, E::one())
    }

    /// The squarefree monomial `x_F` for the bit set `mask`.
    pub fn from_mask(nvars: usize, mask: u64) -> Self {
        let mut m = Self::one(nvars);
        for i in 0..nvars {
            if mask >> i & 1 == 1 {
                m.exps[i] = E::one();
            }
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[E] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> E {
        self.exps[i]
    }

    pub fn exponents_u64(&self) -> Vec<u64> {
        self.exps.iter().map(|e| e.as_u64()).collect()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|e| e.as_u64() as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// # Panics
    /// If an exponent overflows `E`.
    pub fn mul(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }

    /// `self / gcd(self, other)`, the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Self) -> Self {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| if a > b { *a - *b } else { E::zero() })
                .collect(),
        }
    }

    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|e| *e <= E::one())
    }

    /// `Some((var, e))` if this is `x_var^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, E)> {
        let mut found = None;
        for (i, e) in self.exps.iter().enumerate() {
            if !e.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((i, *e));
            }
        }
        found
    }

    pub fn with_exponent(mut self, var: usize, e: E) -> Self {
        self.exps[var] = e;
        self
    }

    /// Renders the monomial with the ring's names, e.g. `x1^2*x3`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        DisplayMonomial { m: self, ring }
    }
}

struct DisplayMonomial<'a, E> {
    m: &'a Monomial<E>,
    ring: &'a Ring,
}

impl<E: Exponent> fmt::Display for DisplayMonomial<'_, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.m.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.name(i))?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn canonical_cmp<E: Exponent>(a: &Monomial<E>, b: &Monomial<E>) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.exps.cmp(&a.exps))
}

/// The divisibility-minimal subset of `gens`, in canonical order.
pub fn minimalize<E: Exponent>(gens: impl IntoIterator<Item = Monomial<E>>) -> Vec<Monomial<E>> {
    let mut gens: Vec<Monomial<E>> = gens.into_iter().collect();
    gens.sort_by(canonical_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial<E>> = Vec::with_capacity(gens.len());
    for g in gens {
        // anything dividing g has degree <= deg g and was seen earlier
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal, stored by its minimal generators.
#[derive(Clone, Debug)]
pub struct MonomialIdeal<E = u16> {
    ring: Ring,
    gens: Vec<Monomial<E>>,
}

impl<E: Exponent> PartialEq for MonomialIdeal<E> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl<E: Exponent> Eq for MonomialIdeal<E> {}

impl<E: Exponent> Hash for MonomialIdeal<E> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.nvars().hash(state);
        self.gens.hash(state);
    }
}

/// The decomposition `I = (x_1^a_1, ..., x_n^a_n) + x^B * K` of an Artinian
/// monomial ideal. `K` is the unit ideal when the non-pure-power part is
/// principal and the zero ideal when it is empty.
#[derive(Clone, Debug)]
pub struct StandardForm<E = u16> {
    pub a: Vec<E>,
    pub sharp: MonomialIdeal<E>,
    pub b: Monomial<E>,
    pub k_ideal: MonomialIdeal<E>,
}

impl<E: Exponent> PartialEq for StandardForm<E> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.sharp == other.sharp && self.b == other.b && self.k_ideal == other.k_ideal
    }
}

impl<E: Exponent> Eq for StandardForm<E> {}

impl<E: Exponent> StandardForm<E> {
    pub fn summary(&self) -> String {
        let ring = self.sharp.ring();
        let a: Vec<String> = self.a.iter().map(|e| e.to_string()).collect();
        format!(
            "a=({}) sharp={} x^B={} K={}",
            a.join(","),
            self.sharp,
            self.b.display(ring),
            self.k_ideal
        )
    }

    /// Reassembles `(x_i^a_i) + x^B * K`.
    pub fn reassemble(&self) -> MonomialIdeal<E> {
        let ring = self.sharp.ring().clone();
        let n = ring.nvars();
        let powers = self.a.iter().enumerate().map(|(i, &e)| Monomial::pure_power(n, i, e));
        let rest = self.k_ideal.gens().iter().map(|k| k.mul(&self.b));
        MonomialIdeal::new(ring, powers.chain(rest))
    }
}

impl<E: Exponent> MonomialIdeal<E> {
    /// # Panics
    /// If a generator has the wrong number of variables.
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Monomial<E>>) -> Self {
        let gens: Vec<Monomial<E>> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.nvars(), ring.nvars(), "generator outside the ambient ring");
        }
        MonomialIdeal {
            gens: minimalize(gens),
            ring,
        }
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn unit(ring: Ring) -> Self {
        let one = Monomial::one(ring.nvars());
        MonomialIdeal { ring, gens: vec![one] }
    }

    /// The ideal generated by the listed variables.
    pub fn variables(ring: Ring, vars: impl IntoIterator<Item = usize>) -> Self {
        let n = ring.nvars();
        Self::new(ring, vars.into_iter().map(|v| Monomial::var(n, v)))
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: Ring) -> Self {
        let n = ring.nvars();
        Self::variables(ring, 0..n)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Monomial<E>] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Generated by a subset of the variables.
    pub fn is_generated_by_variables(&self) -> bool {
        !self.is_zero() && self.gens.iter().all(|g| g.degree() == 1)
    }

    pub fn with_ring(&self, ring: Ring) -> Self {
        assert_eq!(ring.nvars(), self.nvars());
        MonomialIdeal {
            ring,
            gens: self.gens.clone(),
        }
    }

    fn same_ambient(&self, other: &Self) {
        assert_eq!(self.nvars(), other.nvars(), "ideals must share the ambient ring");
    }

    pub fn contains(&self, m: &Monomial<E>) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `I ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.same_ambient(other);
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.same_ambient(other);
        Self::new(self.ring.clone(), self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn mul_monomial(&self, m: &Monomial<E>) -> Self {
        Self::new(self.ring.clone(), self.gens.iter().map(|g| g.mul(m)))
    }

    pub fn product(&self, other: &Self) -> Self {
        self.same_ambient(other);
        Self::new(
            self.ring.clone(),
            self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))),
        )
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: usize) -> Self {
        let mut acc = Self::unit(self.ring.clone());
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.same_ambient(other);
        Self::new(
            self.ring.clone(),
            self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))),
        )
    }

    /// `I : (m)`.
    pub fn colon_monomial(&self, m: &Monomial<E>) -> Self {
        Self::new(self.ring.clone(), self.gens.iter().map(|g| g.colon(m)))
    }

    /// `I : J`, the intersection of `I : (g)` over the generators of `J`.
    pub fn colon(&self, by: &Self) -> Result<Self> {
        self.same_ambient(by);
        let mut gens = by.gens.iter();
        let first = gens.next().ok_or(Error::ZeroIdeal)?;
        let mut acc = self.colon_monomial(first);
        for g in gens {
            if acc.is_zero() {
                break;
            }
            acc = acc.intersection(&self.colon_monomial(g));
        }
        Ok(acc)
    }

    pub fn radical(&self) -> Self {
        let n = self.nvars();
        Self::new(
            self.ring.clone(),
            self.gens.iter().map(|g| Monomial::from_mask(n, g.support())),
        )
    }

    pub(crate) fn support_masks(&self) -> Vec<u64> {
        self.gens.iter().map(Monomial::support).collect()
    }

    /// Minimum number of variables meeting every generator's support.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(min_transversal_size(&self.radical().support_masks()))
    }

    /// Minimum generator degree.
    pub fn alpha(&self) -> Result<usize> {
        self.gens.iter().map(Monomial::degree).min().ok_or(Error::ZeroIdeal)
    }

    /// Every variable has a pure power among the generators.
    pub fn is_artinian(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let mut seen = 0u64;
        for g in &self.gens {
            if let Some((v, _)) = g.as_pure_power() {
                seen |= 1 << v;
            }
        }
        seen.count_ones() as usize == self.nvars()
    }

    fn first_missing_pure_power(&self) -> Option<usize> {
        (0..self.nvars()).find(|&v| {
            !self
                .gens
                .iter()
                .any(|g| matches!(g.as_pure_power(), Some((w, _)) if w == v))
        })
    }

    fn require_artinian(&self) -> Result<()> {
        match self.first_missing_pure_power() {
            Some(v) if !self.is_unit() => Err(Error::NotArtinian(self.ring.name(v).to_string())),
            _ => Ok(()),
        }
    }

    /// Minimal generators have pairwise disjoint supports. The zero ideal is
    /// generated by the empty sequence; the unit ideal is not a complete
    /// intersection.
    pub fn is_complete_intersection(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let mut seen = 0u64;
        for s in self.support_masks() {
            if seen & s != 0 {
                return false;
            }
            seen |= s;
        }
        true
    }

    pub fn standard_form(&self) -> Result<StandardForm<E>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        self.require_artinian()?;
        let n = self.nvars();
        let mut a = vec![E::zero(); n];
        let mut sharp = Vec::new();
        for g in &self.gens {
            match g.as_pure_power() {
                Some((v, e)) => a[v] = e,
                None => sharp.push(g.clone()),
            }
        }
        let b = sharp
            .iter()
            .skip(1)
            .fold(sharp.first().cloned().unwrap_or_else(|| Monomial::one(n)), |acc, g| {
                acc.gcd(g)
            });
        let k_ideal = if sharp.is_empty() {
            Self::zero(self.ring.clone())
        } else {
            Self::new(
                self.ring.clone(),
                sharp.iter().map(|g| g.checked_div(&b).expect("gcd divides")),
            )
        };
        Ok(StandardForm {
            a,
            sharp: Self::new(self.ring.clone(), sharp),
            b,
            k_ideal,
        })
    }

    /// Monomials outside `I` that every variable multiplies into `I`.
    pub fn socle_monomials(&self) -> Result<Vec<Monomial<E>>> {
        self.require_artinian()?;
        if self.is_unit() {
            return Ok(vec![]);
        }
        let n = self.nvars();
        let bound: Vec<u64> = (0..n)
            .map(|v| {
                self.gens
                    .iter()
                    .filter_map(|g| match g.as_pure_power() {
                        Some((w, e)) if w == v => Some(e.as_u64() - 1),
                        _ => None,
                    })
                    .min()
                    .expect("Artinian")
            })
            .collect();
        let mut out = Vec::new();
        let mut cur = vec![0u64; n];
        loop {
            let m = Monomial::from_u64s(&cur)?;
            if !self.contains(&m)
                && (0..n).all(|v| {
                    let up = m.clone().with_exponent(v, m.exponent(v) + E::one());
                    self.contains(&up)
                })
            {
                out.push(m);
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_by(canonical_cmp);
                    return Ok(out);
                }
                if cur[i] < bound[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// Relabels variables into `ring`, sending variable `i` to `map[i]`.
    /// Variables sharing a target multiply together.
    pub fn map_variables(&self, ring: Ring, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars());
        let m = ring.nvars();
        let gens = self.gens.iter().map(|g| {
            let mut exps = vec![E::zero(); m];
            for (i, e) in g.exponents().iter().enumerate() {
                exps[map[i]] = exps[map[i]].checked_add(e).expect("exponent overflow");
            }
            Monomial::new(exps)
        });
        Self::new(ring, gens)
    }

    /// Parses the text form `x1^2*x2, x3` (optionally parenthesized),
    /// `0` for the zero ideal and `1` for the unit ideal.
    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        let body = text.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() || body == "0" {
            return Ok(Self::zero(ring.clone()));
        }
        let n = ring.nvars();
        let mut gens = Vec::new();
        for term in body.split(',') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty generator in `{text}`")));
            }
            let mut exps = vec![0u64; n];
            if term != "1" {
                for factor in term.split('*') {
                    let (name, e) = parse_factor(factor)?;
                    let v = ring
                        .index_of(name)
                        .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                    exps[v] += e;
                }
            }
            gens.push(Monomial::from_u64s(&exps)?);
        }
        Ok(Self::new(ring.clone(), gens))
    }
}

fn parse_factor(factor: &str) -> Result<(&str, u64)> {
    let factor = factor.trim();
    let (name, e) = match factor.split_once('^') {
        Some((name, e)) => (
            name.trim(),
            e.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
        ),
        None => (factor, 1),
    };
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(Error::Parse(format!("bad variable in `{factor}`")));
    }
    Ok((name, e))
}

/// Variable names appearing in a text-form ideal, in natural order
/// (`x2` before `x10`).
pub fn variable_names_in(text: &str) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for term in text.trim().trim_start_matches('(').trim_end_matches(')').split(',') {
        let term = term.trim();
        if term.is_empty() || term == "0" || term == "1" {
            continue;
        }
        for factor in term.split('*') {
            let (name, _) = parse_factor(factor)?;
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
    }
    names.sort_by_key(|a| natural_key(a));
    Ok(names)
}

fn natural_key(s: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            let mut num = 0u64;
            while let Some(&d) = chars.peek() {
                let Some(v) = d.to_digit(10) else { break };
                num = num.saturating_mul(10).saturating_add(v as u64);
                chars.next();
            }
            out.push((std::mem::take(&mut text), num));
        } else {
            text.push(c);
            chars.next();
        }
    }
    if !text.is_empty() {
        out.push((text, u64::MAX));
    }
    out
}

impl<E: Exponent> fmt::Display for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        write!(f, ")")
    }
}

/// Size of a smallest set meeting every mask (vertex cover number of the
/// clutter). Empty masks cannot be met and are ignored.
pub(crate) fn min_transversal_size(edges: &[u64]) -> usize {
    let mut edges: Vec<u64> = edges.iter().copied().filter(|&e| e != 0).collect();
    edges.sort_by_key(|e| e.count_ones());
    edges.dedup();
    let mut best = edges.iter().fold(0u64, |a, e| a | e).count_ones() as usize;
    fn search(edges: &[u64], chosen: u64, count: usize, best: &mut usize) {
        let Some(&open) = edges.iter().find(|&&e| e & chosen == 0) else {
            *best = (*best).min(count);
            return;
        };
        if count + 1 >= *best {
            return;
        }
        let mut bits = open;
        while bits != 0 {
            let v = bits & bits.wrapping_neg();
            search(edges, chosen | v, count + 1, best);
            bits &= bits - 1;
        }
    }
    search(&edges, 0, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    type Ideal = MonomialIdeal<u16>;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names.iter().copied())
    }

    fn ideal(text: &str, r: &Ring) -> Ideal {
        Ideal::parse(text, r).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let r = ring(&["x", "y"]);
        assert_eq!(ideal("x^2, x^3, x*y", &r), ideal("x^2, x*y", &r));
        assert_eq!(ideal("x^2, x^3, x*y", &r).num_gens(), 2);
        let r3 = Ring::standard(3);
        assert_eq!(ideal("x1*x2*x3", &r3).num_gens(), 1);
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"]);
        let i = ideal("x^2, x*y", &r);
        assert!(i.contains(&Monomial::from_u64s(&[2, 1]).unwrap()));
        let r3 = Ring::standard(3);
        assert!(!ideal("x1*x2*x3", &r3).contains(&Monomial::from_u64s(&[1, 1, 0]).unwrap()));
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x10", "x11", "x20", "x21"]);
        let i = ideal("x10*x11, x20*x21", &r);
        let by = ideal("x10*x20", &r);
        assert_eq!(i.colon(&by).unwrap(), ideal("x11, x21", &r));
        assert_eq!(i.colon(&Ideal::unit(r.clone())).unwrap(), i);
        assert_eq!(i.colon(&Ideal::zero(r.clone())), Err(Error::ZeroIdeal));
    }

    /// Oracle for `I : J`: scan all monomials up to a degree bound.
    fn brute_colon(i: &Ideal, j: &Ideal, max_deg: u64) -> Vec<Monomial<u16>> {
        let n = i.nvars();
        let mut out = Vec::new();
        let mut cur = vec![0u64; n];
        loop {
            if cur.iter().sum::<u64>() <= max_deg {
                let m = Monomial::<u16>::from_u64s(&cur).unwrap();
                if j.gens().iter().all(|g| i.contains(&m.mul(g))) {
                    out.push(m);
                }
            }
            let mut k = 0;
            loop {
                if k == n {
                    return minimalize(out);
                }
                if cur[k] < max_deg {
                    cur[k] += 1;
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn colon_matches_scan() {
        let r = ring(&["x", "y"]);
        let i = ideal("x^3, x^2*y, y^3", &r);
        let j = ideal("x*y", &r);
        let expected = brute_colon(&i, &j, 4);
        assert_eq!(expected, ideal("x, y^2", &r).gens().to_vec());
        assert_eq!(i.colon(&j).unwrap(), ideal("x, y^2", &r));
    }

    #[test]
    fn sums_products_powers() {
        let r = ring(&["x", "y"]);
        assert_eq!(ideal("x", &r).sum(&ideal("y", &r)), ideal("x, y", &r));
        assert_eq!(ideal("x, y", &r).power(2), ideal("x^2, x*y, y^2", &r));
        assert_eq!(ideal("x, y", &r).power(0), Ideal::unit(r.clone()));
        assert!(ideal("x^2", &r).is_subset_of(&ideal("x", &r)));
        assert!(!ideal("x", &r).is_subset_of(&ideal("x^2", &r)));
    }

    #[test]
    fn radical_height_alpha() {
        let r = ring(&["x", "y"]);
        assert_eq!(ideal("x^2*y^3", &r).radical(), ideal("x*y", &r));
        assert_eq!(ideal("x^2, x*y, y^3", &r).radical(), ideal("x, y", &r));
        let r5 = Ring::standard(5);
        let c5 = ideal("x1*x2, x2*x3, x3*x4, x4*x5, x1*x5", &r5);
        assert_eq!(c5.height().unwrap(), 3);
        assert_eq!(c5.alpha().unwrap(), 2);
        assert_eq!(Ideal::maximal(r5.clone()).height().unwrap(), 5);
        assert_eq!(Ideal::zero(r5.clone()).height(), Err(Error::ZeroIdeal));
        assert_eq!(Ideal::unit(r5.clone()).height(), Err(Error::UnitIdeal));
        assert_eq!(Ideal::zero(r5).alpha(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn height_matches_subset_scan() {
        // all vertex subsets of C5 meeting every edge
        let edges: Vec<u64> = (0..5).map(|i| 1 << i | 1 << ((i + 1) % 5)).collect();
        let brute = (0u64..32)
            .filter(|s| edges.iter().all(|e| e & s != 0))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap();
        assert_eq!(brute, 3);
        assert_eq!(min_transversal_size(&edges), brute);
    }

    #[test]
    fn artinian_and_standard_form() {
        let r = Ring::standard(3);
        let i = ideal("x1^2, x2^2, x3^2, x1*x2, x2*x3", &r);
        assert!(i.is_artinian());
        let sf = i.standard_form().unwrap();
        assert_eq!(sf.a, vec![2, 2, 2]);
        assert_eq!(sf.sharp, ideal("x1*x2, x2*x3", &r));
        assert_eq!(sf.b, Monomial::from_u64s(&[0, 1, 0]).unwrap());
        assert_eq!(sf.k_ideal, ideal("x1, x3", &r));
        assert_eq!(sf.reassemble(), i);

        let r2 = Ring::standard(2);
        let ci = ideal("x1, x2", &r2).standard_form().unwrap();
        assert_eq!(ci.a, vec![1, 1]);
        assert!(ci.sharp.is_zero() && ci.k_ideal.is_zero());

        // principal sharp part: x^B is the whole generator and K = (1)
        let rxy = ring(&["x", "y"]);
        let p = ideal("x^3, y^3, x^2*y^2", &rxy).standard_form().unwrap();
        assert_eq!(p.b, Monomial::from_u64s(&[2, 2]).unwrap());
        assert!(p.k_ideal.is_unit());

        let c4 = ideal("x1*x2, x2*x3", &r);
        assert!(!c4.is_artinian());
        assert!(matches!(c4.standard_form(), Err(Error::NotArtinian(_))));
        assert_eq!(Ideal::unit(r).standard_form(), Err(Error::UnitIdeal));
    }

    #[test]
    fn complete_intersections() {
        let r = Ring::standard(3);
        assert!(ideal("x1, x2*x3", &r).is_complete_intersection());
        assert!(!ideal("x1*x2, x2*x3", &r).is_complete_intersection());
        assert!(Ideal::maximal(r).is_complete_intersection());
    }

    #[test]
    fn socles() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            ideal("x^2, y^2", &r).socle_monomials().unwrap(),
            vec![Monomial::from_u64s(&[1, 1]).unwrap()]
        );
        // scan of the box below (3, 2): x^2 and xy are the only socle elements
        let got = ideal("x^3, x^2*y, y^2", &r).socle_monomials().unwrap();
        let want = vec![
            Monomial::from_u64s(&[2, 0]).unwrap(),
            Monomial::from_u64s(&[1, 1]).unwrap(),
        ];
        assert_eq!(got, want);
        assert!(ideal("x*y", &r).socle_monomials().is_err());
    }

    #[test]
    fn parse_and_display() {
        let names = variable_names_in("x10*x2^3, x1").unwrap();
        assert_eq!(names, vec!["x1", "x2", "x10"]);
        let r = Ring::new(names);
        let i = ideal("(x10*x2^3, x1)", &r);
        assert_eq!(i.to_string(), "(x1, x2^3*x10)");
        assert_eq!(ideal("0", &r).to_string(), "0");
        assert_eq!(ideal("1", &r).to_string(), "(1)");
        assert!(Ideal::parse("x1, , x2", &r).is_err());
        assert!(Ideal::parse("y", &r).is_err());
    }

    #[test]
    fn narrow_exponents_work() {
        let r = ring(&["x", "y"]);
        let i = MonomialIdeal::<u8>::parse("x^2, y^2", &r).unwrap();
        assert_eq!(i.socle_monomials().unwrap().len(), 1);
        assert!(MonomialIdeal::<u8>::parse("x^300", &r).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn ideal_strategy(n: usize) -> impl Strategy<Value = Ideal> {
            proptest::collection::vec(proptest::collection::vec(0u64..4, n), 1..6).prop_map(move |gens| {
                Ideal::new(
                    Ring::standard(n),
                    gens.into_iter().map(|g| Monomial::from_u64s(&g).unwrap()),
                )
            })
        }

        fn artinian_strategy(n: usize) -> impl Strategy<Value = Ideal> {
            (proptest::collection::vec(1u64..5, n), ideal_strategy(n)).prop_map(move |(a, i)| {
                let powers = Ideal::new(
                    Ring::standard(n),
                    a.iter().enumerate().map(|(v, &e)| Monomial::pure_power(n, v, e as u16)),
                );
                powers.sum(&i)
            })
        }

        proptest! {
            #[test]
            fn colon_laws(i in ideal_strategy(3), j in ideal_strategy(3)) {
                let c = i.colon(&j).unwrap();
                prop_assert!(i.is_subset_of(&c));
                prop_assert!(c.product(&j).is_subset_of(&i));
                // absorbing a member of I does not change the colon
                if let Some(f) = i.gens().first() {
                    let bigger = j.sum(&Ideal::new(Ring::standard(3), [f.clone()]));
                    prop_assert_eq!(i.colon(&bigger).unwrap(), c);
                }
            }

            #[test]
            fn height_of_radical(i in ideal_strategy(4)) {
                if i.is_proper() {
                    prop_assert_eq!(i.height().unwrap(), i.radical().height().unwrap());
                }
            }

            #[test]
            fn standard_form_round_trips(i in artinian_strategy(3)) {
                if i.is_proper() {
                    let sf = i.standard_form().unwrap();
                    prop_assert_eq!(sf.reassemble(), i.clone());
                    for (v, a) in sf.a.iter().enumerate() {
                        prop_assert!(sf.b.exponent(v) < *a);
                    }
                    if sf.k_ideal.num_gens() > 1 {
                        prop_assert!(sf.k_ideal.height().unwrap() >= 2);
                    }
                }
            }

            #[test]
            fn complete_intersection_height(i in ideal_strategy(4)) {
                if i.is_proper() && i.is_complete_intersection() {
                    prop_assert_eq!(i.height().unwrap(), i.num_gens());
                }
            }
        }
    }
}

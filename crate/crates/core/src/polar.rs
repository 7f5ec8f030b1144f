//! Polarization, and the depolarization of suspension path ideals.

use crate::error::Result;
use crate::graphs::Graph;
use crate::monomial::{check_variable_cap, Exponent, Monomial, MonomialIdeal, Ring};

/// A polarized ideal together with the origin `(variable, j)` of each new
/// variable `x_{variable, j}`.
#[derive(Clone, Debug)]
pub struct Polarization<E = u16> {
    pub ideal: MonomialIdeal<E>,
    pub origin: Vec<(usize, usize)>,
}

/// Replaces `x_i^e` by `x_{i,0} x_{i,1} ... x_{i,e-1}`. Variable `x_i`
/// contributes as many new variables as its largest exponent.
pub fn polarize_with_origin<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<Polarization<E>> {
    let n = ideal.nvars();
    let widths: Vec<usize> = (0..n)
        .map(|v| {
            ideal
                .gens()
                .iter()
                .map(|g| g.exponent(v).as_u64() as usize)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let total: usize = widths.iter().sum();
    check_variable_cap(total)?;
    let mut origin = Vec::with_capacity(total);
    let mut names = Vec::with_capacity(total);
    let mut offset = Vec::with_capacity(n);
    for (v, &w) in widths.iter().enumerate() {
        offset.push(origin.len());
        for j in 0..w {
            origin.push((v, j));
            names.push(format!("{}_{}", ideal.ring().name(v), j));
        }
    }
    let ring = Ring::try_new(names)?;
    let gens = ideal.gens().iter().map(|g| {
        let mut mask = 0u64;
        for (v, &start) in offset.iter().enumerate() {
            for j in 0..g.exponent(v).as_u64() as usize {
                mask |= 1 << (start + j);
            }
        }
        Monomial::from_mask(total, mask)
    });
    Ok(Polarization {
        ideal: MonomialIdeal::new(ring, gens),
        origin,
    })
}

pub fn polarize<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<MonomialIdeal<E>> {
    Ok(polarize_with_origin(ideal)?.ideal)
}

/// The image of `P_t(Σ_t G)` under `x_{ij} -> x_i`, in the ring of `G`.
pub fn depolarize_suspension<E: Exponent>(g: &Graph, t: usize) -> Result<MonomialIdeal<E>> {
    let s = g.suspension(t)?;
    let paths: MonomialIdeal<E> = s.path_ideal(t)?;
    let n = g.n();
    let map: Vec<usize> = (0..s.n()).map(|v| if v < n { v } else { (v - n) / (t - 1) }).collect();
    Ok(paths.map_variables(g.ring(), &map))
}

//! `Tor_1` and `Tor_2` against cyclic modules `A/I`, from presentations.
//!
//! For `X = F_0 / K` over `A = P/Q` (with `K ⊇ Q F_0` lifted to `P`),
//! `Tor_1(A/I, X) ≅ (K ∩ (I + Q) F_0) / (I K + Q F_0)`. This is the
//! intrinsic formula over `A`, so the result is Tor over the quotient ring,
//! not over the ambient polynomial ring.

use crate::error::{Error, Result};
use crate::groebner::{default_module_order, relation_vectors, FreeModuleElem, Submodule, Vector};
use crate::idealops::{ideal_intersection, GradedDims, IdealHandle, ModulePresentation, Subquotient};

#[cfg(test)]
mod tests;

#[derive(Clone, Debug)]
pub struct TorResult {
    pub index: u8,
    /// The Tor module as a subquotient of `A^k`, `k` the number of
    /// generators used for the second argument.
    pub presentation: ModulePresentation,
    pub is_zero: bool,
    /// Graded dimensions in degrees `0..=dmax` (empty for inhomogeneous
    /// input).
    pub graded_dims: GradedDims,
    pub homogeneous: bool,
}

/// `Tor_1(A/I, X)` as a subquotient of `P^k` over the ambient ring.
pub(crate) fn tor1_subquotient(i: &IdealHandle, x: &Subquotient) -> Option<Subquotient> {
    let pres = x.present();
    let k = pres.rank();
    if k == 0 {
        return None;
    }
    let nvars = x.nvars();
    let ord = default_module_order();
    let ring_rel: Vec<Vector> = i.lifted().gens().to_vec();
    let ideal_vecs: Vec<Vector> = i.generator_vectors();
    let mut iq_free = Vec::new();
    for f in &ring_rel {
        for j in 0..k {
            iq_free.push(f.map_positions(|_| j, &ord));
        }
    }
    let iq_free = Submodule::new(nvars, k, iq_free);
    let top = pres.kernel.intersect(&iq_free);
    let mut bottom_gens = pres.kernel.times_ideal(&ideal_vecs).gens().to_vec();
    let q_only: Vec<Vector> = ring_rel[ideal_vecs.len()..].to_vec();
    for f in &q_only {
        for j in 0..k {
            bottom_gens.push(f.map_positions(|_| j, &ord));
        }
    }
    let bottom = Submodule::new(nvars, k, bottom_gens);
    Some(Subquotient::from_parts(pres.shifts, top, bottom))
}

fn to_result(
    index: u8,
    i: &IdealHandle,
    sq: Option<Subquotient>,
    homogeneous: bool,
    dmax: i64,
) -> Result<TorResult> {
    let ring = i.ring();
    let Some(sq) = sq else {
        return Ok(TorResult {
            index,
            presentation: ModulePresentation::submodule(ring, 1, Vec::new())?,
            is_zero: true,
            graded_dims: GradedDims::new(),
            homogeneous,
        });
    };
    let is_zero = sq.is_zero();
    let graded_dims = if homogeneous && !is_zero { sq.graded_dims(dmax) } else { GradedDims::new() };
    let elems = |v: &[Vector]| -> Vec<FreeModuleElem> {
        v.iter().map(|g| FreeModuleElem::from_vector(ring, sq.rank(), g)).collect()
    };
    let ord = default_module_order();
    let q_rows = relation_vectors(ring, sq.rank(), &ord);
    let bottom: Vec<Vector> =
        sq.bottom().gens().iter().filter(|g| !q_rows.contains(g)).cloned().collect();
    let mut gens = elems(sq.top().gens());
    gens.retain(|g| !g.reduce_mod_ring().is_zero());
    let presentation = ModulePresentation::new(ring, sq.rank(), gens, elems(&bottom))?
        .with_shifts(sq.shifts().to_vec())?;
    Ok(TorResult { index, presentation, is_zero, graded_dims, homogeneous })
}

fn check_ring(i: &IdealHandle, x: &ModulePresentation) -> Result<()> {
    if i.ring() != x.ring() {
        return Err(Error::RingMismatch("ideal and module over different rings".into()));
    }
    Ok(())
}

/// `Tor_1(A/I, X)`.
pub fn tor1(i: &IdealHandle, x: &ModulePresentation, dmax: i64) -> Result<TorResult> {
    check_ring(i, x)?;
    let homogeneous = i.is_homogeneous() && x.is_homogeneous();
    to_result(1, i, tor1_subquotient(i, &x.subquotient()), homogeneous, dmax)
}

/// `Tor_2(A/I, A/J) ≅ Tor_1(A/J, I)`, with `I` presented as a submodule
/// of `A`.
pub fn tor2_cyclic(i: &IdealHandle, j: &IdealHandle, dmax: i64) -> Result<TorResult> {
    if i.ring() != j.ring() {
        return Err(Error::RingMismatch("ideals over different rings".into()));
    }
    let as_module = ModulePresentation::from_ideal(i);
    let homogeneous = i.is_homogeneous() && j.is_homogeneous();
    to_result(2, j, tor1_subquotient(j, &as_module.subquotient()), homogeneous, dmax)
}

/// Graded dimensions of `(I ∩ J) / IJ`, an independent route to
/// `Tor_1(A/I, A/J)`.
pub fn tor1_shortcut_oracle(i: &IdealHandle, j: &IdealHandle, dmax: i64) -> Result<GradedDims> {
    i.check_homogeneous()?;
    j.check_homogeneous()?;
    let inter = ideal_intersection(i, j)?;
    let prod = i.product(j)?;
    let mut bottom = prod.generator_vectors();
    bottom.extend(relation_vectors(i.ring(), 1, &default_module_order()));
    let sq = Subquotient::new(i.ring().nvars(), 1, vec![0], inter.generator_vectors(), bottom);
    Ok(sq.graded_dims(dmax))
}

/// `Tor_1(A/I, A/J)`, the cyclic case of [`tor1`].
pub fn tor1_cyclic(i: &IdealHandle, j: &IdealHandle, dmax: i64) -> Result<TorResult> {
    tor1(i, &ModulePresentation::quotient_by(j), dmax)
}

//! Uniform Artin–Rees numbers, probed up to a bound, and relation types at
//! sampled rational maximal ideals.

use crate::error::{Error, Result};
use crate::groebner::{FreeModuleElem, Submodule, Vector};
use crate::idealops::{ideal_power, IdealHandle, ModulePresentation};
use crate::polycore::{Polynomial, Rational, Ring};
use crate::reeslab::relation_type;
use crate::transcheck::times_gens;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[cfg(test)]
mod tests;

/// Per-`n` data of an Artin–Rees probe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArRow {
    pub n: u32,
    /// Fingerprint of the reduced basis of `m^n M ∩ N`.
    pub intersection: String,
    /// Fingerprint of `m^{n-s}(m^s M ∩ N)` for the reported `s` (absent
    /// below `s` or when no `s` was found).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_from_s: Option<String>,
    /// `m^n M ∩ N ⊆ m^{n-s} N` (absent when there is no `s`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weak_containment: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArResult {
    /// Smallest valid start index, `None` meaning "not found up to `nmax`".
    pub s: Option<u32>,
    pub nmax: u32,
    /// `[s, nmax]`, the range on which the equality was verified.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified_range: Option<(u32, u32)>,
    pub weak_ar_holds: bool,
    pub table: Vec<ArRow>,
}

impl ArResult {
    pub fn describe(&self) -> String {
        match self.s {
            Some(s) => format!("s = {s} (uniform up to nmax = {}, verified on [{s}, {}])", self.nmax, self.nmax),
            None => format!("NOT_FOUND_UP_TO({})", self.nmax),
        }
    }
}

/// SHA-256 of the canonical text of a reduced Gröbner basis.
fn fingerprint(ring: &Ring, module: &Submodule) -> String {
    let mut text = String::new();
    for g in module.gb() {
        text.push_str(&FreeModuleElem::from_vector(ring, module.rank(), g).to_string());
        text.push(';');
    }
    hex(&Sha256::digest(text.as_bytes()))
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// The data of a probe: `m^n M ∩ N` for `n ≤ nmax`, all lifted to `P^r`.
struct Probe {
    ring: Ring,
    nvars: usize,
    rank: usize,
    rels: Vec<Vector>,
    n_sub: Submodule,
    powers: Vec<IdealHandle>,
    inter: Vec<Submodule>,
    nmax: u32,
}

impl Probe {
    fn new(m: &IdealHandle, big: &ModulePresentation, small: &ModulePresentation, nmax: u32) -> Result<Probe> {
        if m.ring() != big.ring() || m.ring() != small.ring() {
            return Err(Error::RingMismatch("ideal and modules over different rings".into()));
        }
        if big.rank() != small.rank() {
            return Err(Error::Dimension(format!("A^{} vs A^{}", big.rank(), small.rank())));
        }
        if nmax < 1 {
            return Err(Error::InvalidArgument("nmax must be at least 1".into()));
        }
        let ring = m.ring().clone();
        let nvars = ring.nvars();
        let rank = big.rank();
        let mut rels: Vec<Vector> = big.relation_vectors();
        for r in small.relation_vectors() {
            if !rels.contains(&r) {
                rels.push(r);
            }
        }
        let g_m = big.generator_vectors();
        let mut probe = Probe {
            ring,
            nvars,
            rank,
            n_sub: Submodule::zero(nvars, rank),
            rels,
            powers: (0..=nmax).into_par_iter().map(|n| ideal_power(m, n)).collect(),
            inter: Vec::new(),
            nmax,
        };
        probe.n_sub = probe.span(small.generator_vectors());
        if !probe.span(g_m.clone()).contains_sub(&probe.n_sub) {
            return Err(Error::Containment("N is not contained in M".into()));
        }
        probe.inter = (0..=nmax)
            .into_par_iter()
            .map(|n| {
                let l = probe.span(times_gens(&probe.powers[n as usize], &g_m)).intersect(&probe.n_sub);
                l.gb();
                l
            })
            .collect();
        Ok(probe)
    }

    fn span(&self, mut v: Vec<Vector>) -> Submodule {
        v.extend(self.rels.iter().cloned());
        Submodule::new(self.nvars, self.rank, v)
    }

    /// `m^{n-s} · from` (plus relations).
    fn shifted(&self, s: u32, n: u32, from: &Submodule) -> Submodule {
        self.span(times_gens(&self.powers[(n - s) as usize], from.gens()))
    }

    fn valid(&self, s: u32) -> bool {
        (s..=self.nmax)
            .into_par_iter()
            .all(|n| self.inter[n as usize].equals(&self.shifted(s, n, &self.inter[s as usize])))
    }
}

/// Whether `m^n M ∩ N = m^{n-s}(m^s M ∩ N)` for every `s ≤ n ≤ nmax`.
pub fn start_index_valid(
    m: &IdealHandle,
    big: &ModulePresentation,
    small: &ModulePresentation,
    s: u32,
    nmax: u32,
) -> Result<bool> {
    if s < 1 || s > nmax {
        return Err(Error::InvalidArgument(format!("start index {s} outside 1..={nmax}")));
    }
    Ok(Probe::new(m, big, small, nmax)?.valid(s))
}

/// Smallest `s` in `1..nmax` with `m^n M ∩ N = m^{n-s}(m^s M ∩ N)` for
/// every `s ≤ n ≤ nmax`. `s = nmax` would hold vacuously and is not
/// reported. `M` and `N` are taken inside a common free module: their
/// generators and relations are lifted to `P^r`.
pub fn strong_uniform_number(
    m: &IdealHandle,
    big: &ModulePresentation,
    small: &ModulePresentation,
    nmax: u32,
) -> Result<ArResult> {
    let probe = Probe::new(m, big, small, nmax)?;
    let s = (1..nmax).find(|&s| probe.valid(s));
    let rows: Vec<ArRow> = (1..=nmax)
        .into_par_iter()
        .map(|n| {
            let intersection = fingerprint(&probe.ring, &probe.inter[n as usize]);
            let (reduced_from_s, weak_containment) = match s {
                Some(s) if n >= s => (
                    Some(fingerprint(&probe.ring, &probe.shifted(s, n, &probe.inter[s as usize]))),
                    Some(probe.shifted(s, n, &probe.n_sub).contains_sub(&probe.inter[n as usize])),
                ),
                _ => (None, None),
            };
            ArRow { n, intersection, reduced_from_s, weak_containment }
        })
        .collect();
    let weak_ar_holds = rows.iter().all(|r| r.weak_containment != Some(false));
    Ok(ArResult { s, nmax, verified_range: s.map(|s| (s, nmax)), weak_ar_holds, table: rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRt {
    pub point: Vec<String>,
    pub rt: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleResult {
    pub points: Vec<PointRt>,
    pub max: u32,
}

/// The maximal ideal `(x_1 - a_1, ..., x_k - a_k)` of a rational point,
/// which must lie on the variety of the ring relations.
pub fn point_ideal(ring: &Ring, point: &[Rational]) -> Result<IdealHandle> {
    if point.len() != ring.nvars() {
        return Err(Error::Dimension(format!(
            "point with {} coordinates in {} variables",
            point.len(),
            ring.nvars()
        )));
    }
    let amb = ring.ambient();
    let values: Vec<Polynomial> = point.iter().map(|a| Polynomial::constant(&amb, a.clone())).collect();
    for rel in ring.relations() {
        if !rel.substitute(&values)?.is_zero() {
            return Err(Error::InvalidArgument(format!("the point does not satisfy the relation {rel}")));
        }
    }
    let gens = point
        .iter()
        .enumerate()
        .map(|(i, a)| Polynomial::var(ring, i).checked_sub(&Polynomial::constant(ring, a.clone())))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(ring, gens)
}

/// `rt(m; M)` at the maximal ideal of each point, and the sample maximum.
pub fn sample_maximal_rt(
    ring: &Ring,
    m: Option<&ModulePresentation>,
    points: &[Vec<Rational>],
) -> Result<SampleResult> {
    let out = points
        .par_iter()
        .map(|pt| {
            let ideal = point_ideal(ring, pt)?;
            let rt = relation_type(&ideal, m)?.rt;
            Ok(PointRt { point: pt.iter().map(|a| a.to_string()).collect(), rt })
        })
        .collect::<Result<Vec<_>>>()?;
    let max = out.iter().map(|p| p.rt).max().unwrap_or(1);
    Ok(SampleResult { points: out, max })
}

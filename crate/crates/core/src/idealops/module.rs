use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{
    default_module_order, relation_vectors, syzygy_vectors, FreeModuleElem, Submodule, Vector,
};
use crate::polycore::{Polynomial, Ring};

use super::{GradedDims, IdealHandle};

/// A finitely generated module `(⟨generators⟩ + ⟨relations⟩) / ⟨relations⟩`
/// inside `A^rank`. Basis vector `i` has degree `shifts[i]`.
#[derive(Clone)]
pub struct ModulePresentation {
    ring: Ring,
    rank: usize,
    generators: Vec<FreeModuleElem>,
    relations: Vec<FreeModuleElem>,
    shifts: Vec<i64>,
}

impl ModulePresentation {
    pub fn new(
        ring: &Ring,
        rank: usize,
        generators: Vec<FreeModuleElem>,
        relations: Vec<FreeModuleElem>,
    ) -> Result<Self> {
        let m = ModulePresentation::unchecked(ring, rank, generators, relations)?;
        if !m.relations.is_empty() {
            let sq = m.subquotient();
            let span = Submodule::new(
                ring.nvars(),
                rank,
                m.generators
                    .iter()
                    .map(|g| g.to_vector(&default_module_order()))
                    .chain(relation_vectors(ring, rank, &default_module_order()))
                    .collect(),
            );
            if !span.contains_sub(sq.bottom()) {
                return Err(Error::Containment("relations outside the span of the generators".into()));
            }
        }
        Ok(m)
    }

    fn unchecked(
        ring: &Ring,
        rank: usize,
        generators: Vec<FreeModuleElem>,
        relations: Vec<FreeModuleElem>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Dimension("free module of rank 0".into()));
        }
        let clean = |v: Vec<FreeModuleElem>| -> Result<Vec<FreeModuleElem>> {
            let mut out = Vec::new();
            for g in v {
                if g.rank() != rank {
                    return Err(Error::Dimension(format!(
                        "element of rank {} in a module inside A^{rank}",
                        g.rank()
                    )));
                }
                if g.ring().variables() != ring.variables() {
                    return Err(Error::RingMismatch(format!("element {g} is not over {ring}")));
                }
                let g = FreeModuleElem::new(ring, g.components().to_vec())?.reduce_mod_ring();
                if !g.is_zero() && !out.contains(&g) {
                    out.push(g);
                }
            }
            Ok(out)
        };
        let generators = clean(generators)?;
        let relations = clean(relations)?;
        Ok(ModulePresentation { ring: ring.clone(), rank, generators, relations, shifts: vec![0; rank] })
    }

    /// The submodule of `A^rank` generated by `generators`.
    pub fn submodule(ring: &Ring, rank: usize, generators: Vec<FreeModuleElem>) -> Result<Self> {
        ModulePresentation::unchecked(ring, rank, generators, Vec::new())
    }

    /// `A^rank / ⟨relations⟩`.
    pub fn cokernel(ring: &Ring, rank: usize, relations: Vec<FreeModuleElem>) -> Result<Self> {
        let units = (0..rank).map(|i| FreeModuleElem::unit(ring, rank, i)).collect();
        ModulePresentation::unchecked(ring, rank, units, relations)
    }

    pub fn free(ring: &Ring, rank: usize) -> Result<Self> {
        ModulePresentation::cokernel(ring, rank, Vec::new())
    }

    /// The ideal as a submodule of `A`.
    pub fn from_ideal(ideal: &IdealHandle) -> Self {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| FreeModuleElem::new(ideal.ring(), vec![g.clone()]).expect("same ring"))
            .collect();
        ModulePresentation::submodule(ideal.ring(), 1, gens).expect("rank 1")
    }

    /// `A / I` as a cyclic module.
    pub fn quotient_by(ideal: &IdealHandle) -> Self {
        let rels = ideal
            .generators()
            .iter()
            .map(|g| FreeModuleElem::new(ideal.ring(), vec![g.clone()]).expect("same ring"))
            .collect();
        ModulePresentation::cokernel(ideal.ring(), 1, rels).expect("rank 1")
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Result<Self> {
        if shifts.len() != self.rank {
            return Err(Error::Dimension(format!(
                "{} degree shifts for A^{}",
                shifts.len(),
                self.rank
            )));
        }
        self.shifts = shifts;
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeModuleElem] {
        &self.generators
    }

    pub fn relations(&self) -> &[FreeModuleElem] {
        &self.relations
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// True when the module is given as a submodule of `A^r`.
    pub fn is_submodule(&self) -> bool {
        self.relations.is_empty()
    }

    fn is_cokernel(&self) -> bool {
        self.generators.len() == self.rank
            && self
                .generators
                .iter()
                .enumerate()
                .all(|(i, g)| *g == FreeModuleElem::unit(&self.ring, self.rank, i))
    }

    pub(crate) fn generator_vectors(&self) -> Vec<Vector> {
        let ord = default_module_order();
        self.generators.iter().map(|g| g.to_vector(&ord)).collect()
    }

    /// Relations lifted to `P^r`, quotient relations of the ring included.
    pub(crate) fn relation_vectors(&self) -> Vec<Vector> {
        let ord = default_module_order();
        let mut out: Vec<Vector> = self.relations.iter().map(|g| g.to_vector(&ord)).collect();
        out.extend(relation_vectors(&self.ring, self.rank, &ord));
        out
    }

    pub fn subquotient(&self) -> Subquotient {
        let bottom = self.relation_vectors();
        Subquotient::new(self.ring.nvars(), self.rank, self.shifts.clone(), self.generator_vectors(), bottom)
    }

    pub fn is_zero(&self) -> bool {
        self.subquotient().is_zero()
    }

    pub fn is_homogeneous(&self) -> bool {
        let ord = default_module_order();
        self.ring.relations().iter().all(Polynomial::is_homogeneous)
            && self
                .generators
                .iter()
                .chain(&self.relations)
                .all(|g| g.to_vector(&ord).is_homogeneous(&self.shifts))
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NotHomogeneous(format!("module {self}")))
        }
    }

    /// `I · M`, same relations.
    pub fn times_ideal(&self, ideal: &IdealHandle) -> Result<Self> {
        if ideal.ring() != &self.ring {
            return Err(Error::RingMismatch("ideal and module over different rings".into()));
        }
        let mut gens = Vec::new();
        for f in ideal.generators() {
            for g in &self.generators {
                let comps = g
                    .components()
                    .iter()
                    .map(|c| c.checked_mul(f))
                    .collect::<Result<Vec<_>>>()?;
                gens.push(FreeModuleElem::new(&self.ring, comps)?);
            }
        }
        let mut m = ModulePresentation::unchecked(&self.ring, self.rank, gens, self.relations.clone())?;
        m.shifts = self.shifts.clone();
        Ok(m)
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[FreeModuleElem]| -> String {
            v.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
        };
        if self.is_cokernel() {
            write!(f, "cokernel(A^{}; {})", self.rank, list(&self.relations))?;
        } else if self.relations.is_empty() {
            write!(f, "submodule(A^{}; {})", self.rank, list(&self.generators))?;
        } else {
            write!(
                f,
                "subquotient(A^{}; {} / {})",
                self.rank,
                list(&self.generators),
                list(&self.relations)
            )?;
        }
        if self.shifts.iter().any(|&s| s != 0) {
            let s: Vec<String> = self.shifts.iter().map(|d| d.to_string()).collect();
            write!(f, " shifts [{}]", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `U / V` for submodules `V ⊆ U` of `P^rank` over the ambient polynomial
/// ring. Quotient-ring computations put the ring relations into `V`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    nvars: usize,
    rank: usize,
    shifts: Vec<i64>,
    top: Submodule,
    bottom: Submodule,
}

impl Subquotient {
    /// `top` is generated by `top_gens` together with `bottom_gens`.
    pub fn new(
        nvars: usize,
        rank: usize,
        shifts: Vec<i64>,
        top_gens: Vec<Vector>,
        bottom_gens: Vec<Vector>,
    ) -> Self {
        let bottom = Submodule::new(nvars, rank, bottom_gens);
        let top = bottom.add_gens(&top_gens);
        Subquotient { nvars, rank, shifts, top, bottom }
    }

    pub fn from_parts(shifts: Vec<i64>, top: Submodule, bottom: Submodule) -> Self {
        let top = top.sum(&bottom);
        Subquotient { nvars: top.nvars(), rank: top.rank(), shifts, top, bottom }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn top(&self) -> &Submodule {
        &self.top
    }

    pub fn bottom(&self) -> &Submodule {
        &self.bottom
    }

    pub fn is_zero(&self) -> bool {
        self.bottom.contains_sub(&self.top)
    }

    /// Graded dimensions in degrees `0..=maxdeg` (homogeneous data only).
    pub fn dims(&self, maxdeg: i64) -> Vec<u64> {
        let lo = self.bottom.quotient_dims(&self.shifts, maxdeg);
        let hi = self.top.quotient_dims(&self.shifts, maxdeg);
        lo.iter()
            .zip(&hi)
            .map(|(a, b)| a.checked_sub(*b).expect("top contains bottom"))
            .collect()
    }

    pub fn graded_dims(&self, maxdeg: i64) -> GradedDims {
        GradedDims::from_values(&self.dims(maxdeg))
    }

    /// A generating set of `top` modulo `bottom`, chosen greedily by degree;
    /// minimal when the data is homogeneous.
    pub fn minimal_generators(&self) -> Vec<Vector> {
        let mut cands: Vec<Vector> = self.top.gens().to_vec();
        cands.sort_by_key(|g| g.degree(&self.shifts).unwrap_or(0));
        let mut kept: Vec<Vector> = Vec::new();
        let mut span = self.bottom.clone();
        for g in cands {
            if !span.contains(&g) {
                kept.push(g.clone());
                span = span.add_gens(&[g]);
            }
        }
        kept
    }

    /// A presentation `P^k / K` of this module: returns the generators used
    /// (their degrees are the shifts of `P^k`) and the relation module `K`.
    pub fn present(&self) -> Presentation {
        let gens = self.minimal_generators();
        let shifts: Vec<i64> = gens.iter().map(|g| g.degree(&self.shifts).unwrap_or(0)).collect();
        let k = syzygy_vectors(self.nvars, self.rank, &gens, self.bottom.gens());
        let kernel = Submodule::new(self.nvars, gens.len().max(1), k);
        Presentation { shifts, gens, kernel }
    }
}

/// `P^k / kernel`, with `gens` the images of the basis vectors.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub shifts: Vec<i64>,
    pub gens: Vec<Vector>,
    pub kernel: Submodule,
}

impl Presentation {
    pub fn rank(&self) -> usize {
        self.gens.len()
    }
}

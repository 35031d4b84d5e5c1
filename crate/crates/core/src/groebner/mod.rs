//! Normal forms, reduced Gröbner bases of ideals and submodules, syzygies.
//!
//! Quotient rings are handled by lifting: a computation over `P/Q` runs in
//! `P` with the relations `Q` (times every basis vector, for modules)
//! appended to the generators.

pub mod engine;
pub(crate) mod hilbert;
mod submodule;
mod vector;

use std::fmt;

pub use engine::{is_groebner, CancelToken};
pub use submodule::{default_module_order, eliminate_top, Submodule};
pub use vector::{ModuleOrder, Term, Vector};

use crate::error::{Error, Result};
use crate::idealops::ModulePresentation;
use crate::polycore::{Polynomial, Ring, TermOrder};

/// Element of the free module `A^r`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModuleElem {
    ring: Ring,
    components: Vec<Polynomial>,
}

impl FreeModuleElem {
    pub fn new(ring: &Ring, components: Vec<Polynomial>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Dimension("free module of rank 0".into()));
        }
        for c in &components {
            if c.ring().variables() != ring.variables() {
                return Err(Error::RingMismatch("component over a different ring".into()));
            }
        }
        let components = components
            .into_iter()
            .map(|c| c.in_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeModuleElem { ring: ring.clone(), components })
    }

    pub fn unit(ring: &Ring, rank: usize, i: usize) -> Self {
        let components = (0..rank)
            .map(|j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) })
            .collect();
        FreeModuleElem { ring: ring.clone(), components }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn to_vector(&self, ord: &ModuleOrder) -> Vector {
        let mut terms = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            terms.extend(c.terms().iter().map(|(m, a)| (Term::new(m.clone(), i), a.clone())));
        }
        Vector::from_unsorted(terms, ord)
    }

    pub fn from_vector(ring: &Ring, rank: usize, v: &Vector) -> Self {
        let components = (0..rank)
            .map(|i| Polynomial::from_map_unchecked(ring, v.component(i)))
            .collect();
        FreeModuleElem { ring: ring.clone(), components }
    }

    pub fn reduce_mod_ring(&self) -> Self {
        FreeModuleElem {
            ring: self.ring.clone(),
            components: self.components.iter().map(Polynomial::reduce_mod_ring).collect(),
        }
    }
}

impl fmt::Display for FreeModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for FreeModuleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A reduced Gröbner basis of an ideal (rank 1) or of a submodule of `A^r`,
/// over the ambient polynomial ring of `ring` (quotient relations included).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    rank: usize,
    order: ModuleOrder,
    elements: Vec<Vector>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn reduced(&self) -> bool {
        true
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.rank == 1
            && self
                .elements
                .iter()
                .any(|e| e.lead_term().is_some_and(|t| t.mono.is_one()))
    }

    /// Elements as polynomials over the ring's ambient polynomial ring.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        let amb = self.ring.ambient();
        self.elements
            .iter()
            .map(|v| Polynomial::from_map_unchecked(&amb, v.component(0)))
            .collect()
    }

    pub fn module_elements(&self) -> Vec<FreeModuleElem> {
        let amb = self.ring.ambient();
        self.elements
            .iter()
            .map(|v| FreeModuleElem::from_vector(&amb, self.rank, v))
            .collect()
    }

    pub fn satisfies_buchberger_criterion(&self) -> bool {
        is_groebner(&self.elements, &self.order)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.rank == 1 {
            self.polynomials().iter().map(|p| p.to_string()).collect()
        } else {
            self.module_elements().iter().map(|p| p.to_string()).collect()
        };
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Lift of ring relations to `P^rank`: every relation times every basis vector.
pub(crate) fn relation_vectors(ring: &Ring, rank: usize, ord: &ModuleOrder) -> Vec<Vector> {
    let mut out = Vec::new();
    for r in ring.relations() {
        for i in 0..rank {
            out.push(Vector::from_component(r.terms(), i, ord));
        }
    }
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens` (over a common
/// ring; quotient relations appended) under `ord`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], ord: &TermOrder) -> Result<GroebnerBasis> {
    buchberger_with_cancel(ring, gens, ord, None)
}

pub fn buchberger_with_cancel(
    ring: &Ring,
    gens: &[Polynomial],
    ord: &TermOrder,
    cancel: Option<&CancelToken>,
) -> Result<GroebnerBasis> {
    let mord = ModuleOrder::pot(ord.clone());
    let mut vecs = Vec::new();
    for g in gens {
        if g.ring().variables() != ring.variables() {
            return Err(Error::RingMismatch(format!("generator {g} not in {ring}")));
        }
        vecs.push(Vector::from_component(g.terms(), 0, &mord));
    }
    vecs.extend(relation_vectors(ring, 1, &mord));
    let elements = engine::buchberger(&vecs, &mord, &[], cancel)?;
    Ok(GroebnerBasis { ring: ring.clone(), rank: 1, order: mord, elements })
}

/// Reduced Gröbner basis of the submodule of `A^r` generated by `gens`.
pub fn buchberger_module(
    ring: &Ring,
    rank: usize,
    gens: &[FreeModuleElem],
    ord: &ModuleOrder,
) -> Result<GroebnerBasis> {
    let mut vecs = Vec::new();
    for g in gens {
        if g.rank() != rank {
            return Err(Error::Dimension(format!("element of rank {} in A^{rank}", g.rank())));
        }
        vecs.push(g.to_vector(ord));
    }
    vecs.extend(relation_vectors(ring, rank, ord));
    let elements = engine::buchberger(&vecs, ord, &[], None)?;
    Ok(GroebnerBasis { ring: ring.clone(), rank, order: ord.clone(), elements })
}

/// Normal form of a polynomial against a rank-1 basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if gb.rank != 1 {
        return Err(Error::Dimension(format!("polynomial against a basis in A^{}", gb.rank)));
    }
    if f.ring().variables() != gb.ring.variables() {
        return Err(Error::RingMismatch(format!("{f} is not over {}", gb.ring)));
    }
    let v = Vector::from_component(f.terms(), 0, &gb.order);
    let r = engine::reduce(&v, &gb.elements, &gb.order);
    Ok(Polynomial::from_map_unchecked(f.ring(), r.component(0)))
}

/// Normal form of a free-module element against a basis of the same rank.
pub fn normal_form_elem(f: &FreeModuleElem, gb: &GroebnerBasis) -> Result<FreeModuleElem> {
    if f.rank() != gb.rank {
        return Err(Error::Dimension(format!(
            "element of rank {} against a basis in A^{}",
            f.rank(),
            gb.rank
        )));
    }
    let r = engine::reduce(&f.to_vector(&gb.order), &gb.elements, &gb.order);
    Ok(FreeModuleElem::from_vector(f.ring(), gb.rank, &r))
}

/// Reduced basis of the ideal of a polynomial ring (no quotient handling).
pub(crate) fn ideal_basis(gens: &[Polynomial], ord: &TermOrder) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().ambient();
    buchberger(&ring, gens, ord).expect("ambient ring").polynomials()
}

/// Normal form of `f` with respect to the polynomials `basis` (assumed to be
/// a Gröbner basis under `ord`).
pub(crate) fn reduce_poly(f: &Polynomial, basis: &[Polynomial], ord: &TermOrder) -> Polynomial {
    let mord = ModuleOrder::pot(ord.clone());
    let b: Vec<Vector> = basis
        .iter()
        .map(|g| Vector::from_component(g.terms(), 0, &mord))
        .collect();
    let r = engine::reduce(&Vector::from_component(f.terms(), 0, &mord), &b, &mord);
    Polynomial::from_map_unchecked(f.ring(), r.component(0))
}

/// Kernel of `P^k → P^r / ⟨extra⟩`, `e_i ↦ gens[i]`: all relations
/// `Σ c_i gens[i] ∈ ⟨extra⟩`, as a reduced basis (default order) in `P^k`.
pub fn syzygy_vectors(nvars: usize, rank: usize, gens: &[Vector], extra: &[Vector]) -> Vec<Vector> {
    let ord = default_module_order();
    let mut rows = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        rows.push((g.resort(&ord), Vector::unit(nvars, i)));
    }
    for e in extra {
        rows.push((e.resort(&ord), Vector::zero()));
    }
    eliminate_top(rank, &rows, &ord)
}

/// First syzygies over `A` of the list `gens ⊂ A^r`: the submodule of
/// `A^k` (k = number of generators) of all relations among them.
pub fn syzygy_module(ring: &Ring, gens: &[FreeModuleElem]) -> Result<ModulePresentation> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidArgument("syzygies of an empty list".into()));
    };
    let rank = first.rank();
    if gens.iter().any(|g| g.rank() != rank) {
        return Err(Error::Dimension("generators of different ranks".into()));
    }
    let ord = default_module_order();
    let vecs: Vec<Vector> = gens.iter().map(|g| g.to_vector(&ord)).collect();
    let extra = relation_vectors(ring, rank, &ord);
    let syz = syzygy_vectors(ring.nvars(), rank, &vecs, &extra);
    let k = gens.len();
    let elems: Vec<FreeModuleElem> = syz
        .iter()
        .map(|v| FreeModuleElem::from_vector(ring, k, v).reduce_mod_ring())
        .filter(|e| !e.is_zero())
        .collect();
    ModulePresentation::submodule(ring, k, elems)
}

/// Syzygies of a list of polynomials (rank-1 case).
pub fn polynomial_syzygies(ring: &Ring, gens: &[Polynomial]) -> Result<ModulePresentation> {
    let elems = gens
        .iter()
        .map(|g| FreeModuleElem::new(ring, vec![g.clone()]))
        .collect::<Result<Vec<_>>>()?;
    syzygy_module(ring, &elems)
}

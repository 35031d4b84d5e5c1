//! Ideal and submodule algebra over polynomial rings and their quotients:
//! sums, products, powers, intersections, colons, equality, membership and
//! Hilbert functions.

mod dims;
mod module;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

pub use dims::GradedDims;
pub use module::{ModulePresentation, Presentation, Subquotient};

use crate::error::{Error, Result};
use crate::groebner::{
    self, default_module_order, engine, syzygy_vectors, CancelToken, GroebnerBasis, ModuleOrder,
    Submodule, Vector,
};
use crate::polycore::{Monomial, Polynomial, Rational, Ring, TermOrder};

/// An ideal of a (quotient) polynomial ring given by generators, with
/// Gröbner bases cached per term order.
///
/// Generators are stored reduced modulo the ring relations; zero and
/// repeated generators are dropped.
#[derive(Clone)]
pub struct IdealHandle {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb_cache: Arc<Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>>,
}

impl IdealHandle {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            if g.ring().variables() != ring.variables() {
                return Err(Error::RingMismatch(format!("generator {g} is not over {ring}")));
            }
            let g = g.in_ring(ring)?.reduce_mod_ring();
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(IdealHandle { ring: ring.clone(), generators: gens, gb_cache: Arc::default() })
    }

    pub fn parse(ring: &Ring, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        IdealHandle::new(ring, gens)
    }

    pub fn unit(ring: &Ring) -> Self {
        IdealHandle::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn zero(ring: &Ring) -> Self {
        IdealHandle::new(ring, Vec::new()).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis of `I + Q` over the ambient ring, cached.
    pub fn groebner(&self, ord: &TermOrder) -> Arc<GroebnerBasis> {
        self.groebner_with_cancel(ord, None).expect("no cancellation token")
    }

    pub fn groebner_with_cancel(
        &self,
        ord: &TermOrder,
        cancel: Option<&CancelToken>,
    ) -> Result<Arc<GroebnerBasis>> {
        let mut cache = self.gb_cache.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(gb) = cache.get(ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner::buchberger_with_cancel(&self.ring, &self.generators, ord, cancel)?);
        cache.insert(ord.clone(), gb.clone());
        Ok(gb)
    }

    pub fn gb(&self) -> Arc<GroebnerBasis> {
        self.groebner(self.ring.default_order())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.ring.relations().iter().all(Polynomial::is_homogeneous)
            && self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NotHomogeneous(format!("ideal {self}")))
        }
    }

    fn check_same_ring(&self, other: &IdealHandle) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealHandle::new(&self.ring, gens)
    }

    pub fn product(&self, other: &IdealHandle) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.checked_mul(g)?);
            }
        }
        IdealHandle::new(&self.ring, gens)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        membership(f, self)
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        self.check_same_ring(other)?;
        for g in &other.generators {
            if !membership(g, self)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I + Q` as a submodule of `P^1` (default module order).
    pub(crate) fn lifted(&self) -> Submodule {
        let ord = default_module_order();
        let mut gens: Vec<Vector> = self.generator_vectors();
        gens.extend(groebner::relation_vectors(&self.ring, 1, &ord));
        Submodule::new(self.ring.nvars(), 1, gens)
    }

    pub(crate) fn generator_vectors(&self) -> Vec<Vector> {
        let ord = default_module_order();
        self.generators.iter().map(|g| Vector::from_component(g.terms(), 0, &ord)).collect()
    }

    pub fn min_generator_degree(&self) -> Option<u32> {
        self.generators.iter().filter_map(Polynomial::degree).min()
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `I^p`, generated by all `p`-fold products of the generators. By
/// convention `I^0` is the unit ideal.
pub fn ideal_power(ideal: &IdealHandle, p: u32) -> IdealHandle {
    let ring = &ideal.ring;
    if p == 0 {
        return IdealHandle::unit(ring);
    }
    let gens = &ideal.generators;
    let mut out = Vec::new();
    // Multisets of generator indices, nondecreasing.
    let mut idx = vec![0usize; p as usize];
    if gens.is_empty() {
        return IdealHandle::zero(ring);
    }
    loop {
        let mut prod = Polynomial::one(ring);
        for &i in &idx {
            prod = prod.checked_mul(&gens[i]).expect("same ring").reduce_mod_ring();
        }
        out.push(prod);
        let mut k = idx.len();
        loop {
            if k == 0 {
                return IdealHandle::new(ring, out).expect("same ring");
            }
            k -= 1;
            if idx[k] + 1 < gens.len() {
                let v = idx[k] + 1;
                for j in &mut idx[k..] {
                    *j = v;
                }
                break;
            }
        }
    }
}

pub fn ideal_sum(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.sum(j)
}

pub fn ideal_product(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.product(j)
}

/// `I ∩ J` by eliminating a tag variable `t` from `t·I + (1 − t)·J + Q`.
pub fn ideal_intersection(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.check_same_ring(j)?;
    let ring = &i.ring;
    let n = ring.nvars();
    let ord = ModuleOrder::pot(TermOrder::BlockElimination(1));
    let embed = |p: &Polynomial| -> Vector {
        Vector::from_component(p.terms(), 0, &ord).map_monomials(|m| m.embed(1, n + 1), &ord)
    };
    let one = crate::polycore::rational(1, 1);
    let t_map: BTreeMap<Monomial, Rational> = [(Monomial::var(n + 1, 0), one.clone())].into();
    let one_minus_t: BTreeMap<Monomial, Rational> =
        [(Monomial::one(n + 1), one.clone()), (Monomial::var(n + 1, 0), -one)].into();
    let mut gens = Vec::new();
    for f in &i.generators {
        gens.push(embed(f).mul_poly(&t_map, &ord));
    }
    for g in &j.generators {
        gens.push(embed(g).mul_poly(&one_minus_t, &ord));
    }
    for q in ring.relations() {
        gens.push(embed(q));
    }
    let gb = engine::buchberger(&gens, &ord, &[], None)?;
    let amb = ring.ambient();
    let out: Vec<Polynomial> = gb
        .iter()
        .filter(|g| g.terms().iter().all(|(tm, _)| tm.mono.exponents()[0] == 0))
        .map(|g| {
            let terms = g.component(0).into_iter().map(|(m, c)| (m.restrict(1..n + 1), c)).collect();
            Polynomial::from_map_unchecked(&amb, terms)
        })
        .map(|p| p.in_ring(ring).expect("same variables"))
        .collect();
    IdealHandle::new(ring, out)
}

/// `U ∩ V` for two submodules of `A^r`.
pub fn module_intersection(
    u: &ModulePresentation,
    v: &ModulePresentation,
) -> Result<ModulePresentation> {
    if u.ring() != v.ring() {
        return Err(Error::RingMismatch("modules over different rings".into()));
    }
    if u.rank() != v.rank() {
        return Err(Error::Dimension(format!("A^{} vs A^{}", u.rank(), v.rank())));
    }
    if !u.is_submodule() || !v.is_submodule() {
        return Err(Error::Unsupported(
            "intersection is defined for submodules of a free module only".into(),
        ));
    }
    let su = u.subquotient().top().clone();
    let sv = v.subquotient().top().clone();
    let inter = su.intersect(&sv);
    let gens = inter
        .gb()
        .iter()
        .map(|g| groebner::FreeModuleElem::from_vector(u.ring(), u.rank(), g))
        .collect();
    ModulePresentation::submodule(u.ring(), u.rank(), gens)?.with_shifts(u.shifts().to_vec())
}

/// `(I : f) = { g : g·f ∈ I }`, read off the syzygies of `f` against the
/// generators of `I` and the ring relations.
pub fn ideal_colon(i: &IdealHandle, f: &Polynomial) -> Result<IdealHandle> {
    if f.ring().variables() != i.ring.variables() {
        return Err(Error::RingMismatch(format!("{f} is not over {}", i.ring)));
    }
    let f = f.in_ring(&i.ring)?.reduce_mod_ring();
    if f.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero element".into()));
    }
    let ord = default_module_order();
    let fv = Vector::from_component(f.terms(), 0, &ord);
    let extra: Vec<Vector> = i.lifted().gens().to_vec();
    let syz = syzygy_vectors(i.ring.nvars(), 1, &[fv], &extra);
    let amb = i.ring.ambient();
    let gens = syz
        .iter()
        .map(|v| Polynomial::from_map_unchecked(&amb, v.component(0)).in_ring(&i.ring))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(&i.ring, gens)
}

pub fn ideal_equal(i: &IdealHandle, j: &IdealHandle) -> Result<bool> {
    i.check_same_ring(j)?;
    let ord = i.ring.default_order().clone();
    Ok(i.groebner(&ord).vectors() == j.groebner(&ord).vectors())
}

pub fn membership(f: &Polynomial, i: &IdealHandle) -> Result<bool> {
    let gb = i.gb();
    Ok(groebner::normal_form(f, &gb)?.is_zero())
}

/// Objects with a graded quotient whose Hilbert function can be counted.
pub trait HilbertSource {
    fn graded_subquotient(&self) -> Result<Subquotient>;
}

impl HilbertSource for IdealHandle {
    /// `A / I`.
    fn graded_subquotient(&self) -> Result<Subquotient> {
        self.check_homogeneous()?;
        ModulePresentation::quotient_by(self).graded_subquotient()
    }
}

impl HilbertSource for ModulePresentation {
    fn graded_subquotient(&self) -> Result<Subquotient> {
        self.check_homogeneous()?;
        Ok(self.subquotient())
    }
}

/// Dimensions of the graded pieces of `A/I` (for an ideal) or of the
/// module itself, in degrees `0..=max_degree`.
pub fn hilbert_dims<X: HilbertSource + ?Sized>(x: &X, max_degree: i64) -> Result<GradedDims> {
    if max_degree < 0 {
        return Err(Error::InvalidArgument("negative degree bound".into()));
    }
    Ok(x.graded_subquotient()?.graded_dims(max_degree))
}

#[cfg(test)]
mod tests;

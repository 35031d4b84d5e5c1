//! Defining ideals of Rees, multi-Rees and associated graded algebras and
//! modules, relation type and effective relations.
//!
//! An ideal `I = (f_1..f_k)` of `A = P/Q` gives the extended polynomial ring
//! `S = ℚ[x, T_1..T_k]`. The Rees algebra is `S / 𝒬` where `𝒬` is the kernel
//! of `T_i ↦ f_i s`; it contains `Q` in T-degree 0. Each `T_i` carries the
//! internal degree `deg f_i - min_j deg f_j`, so for generators of one
//! degree the T-variables have internal degree 0.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::groebner::{engine, CancelToken, FreeModuleElem, ModuleOrder, Submodule, Term, Vector};
use crate::idealops::{GradedDims, IdealHandle, ModulePresentation};
use crate::polycore::{rational, Monomial, Polynomial, Ring, TermOrder};

#[cfg(test)]
mod tests;

/// The extended ring `ℚ[x, T-blocks]` with its grading data.
#[derive(Clone, Debug)]
pub struct Grading {
    base_ring: Ring,
    ext_ring: Ring,
    blocks: Vec<Range<usize>>,
    internal: Vec<i64>,
}

impl Grading {
    fn new(base: &Ring, blocks: &[(&str, &[Polynomial])]) -> Result<Self> {
        let n = base.nvars();
        let mut names: Vec<String> = base.variables().to_vec();
        let mut ranges = Vec::new();
        let mut internal = vec![1i64; n];
        for (prefix, gens) in blocks {
            let start = names.len();
            let min_deg = gens.iter().filter_map(Polynomial::degree).min().unwrap_or(0) as i64;
            for (i, g) in gens.iter().enumerate() {
                let mut name = format!("{prefix}{}", i + 1);
                while names.contains(&name) {
                    name.push('_');
                }
                names.push(name);
                internal.push(g.degree().unwrap_or(0) as i64 - min_deg);
            }
            ranges.push(start..names.len());
        }
        Ok(Grading { base_ring: base.clone(), ext_ring: Ring::polynomial(&names)?, blocks: ranges, internal })
    }

    pub fn base_ring(&self) -> &Ring {
        &self.base_ring
    }

    pub fn ext_ring(&self) -> &Ring {
        &self.ext_ring
    }

    /// Variable ranges of the T-blocks inside the extended ring.
    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn t_range(&self) -> Range<usize> {
        let start = self.base_ring.nvars();
        start..self.ext_ring.nvars()
    }

    pub fn t_variables(&self) -> &[String] {
        &self.ext_ring.variables()[self.t_range()]
    }

    pub fn internal_weights(&self) -> &[i64] {
        &self.internal
    }

    /// Per-variable weight vectors `(internal, block_1, block_2, ...)`.
    pub fn weights(&self) -> Vec<Vec<i64>> {
        (0..self.ext_ring.nvars())
            .map(|v| {
                let mut w = vec![self.internal[v]];
                w.extend(self.blocks.iter().map(|b| i64::from(b.contains(&v))));
                w
            })
            .collect()
    }

    /// Total T-degree of a monomial of the extended ring.
    pub fn t_degree(&self, m: &Monomial) -> u32 {
        m.partial_degree(self.t_range())
    }

    fn t_first_order(&self) -> TermOrder {
        let r = self.t_range();
        TermOrder::WeightedTDegreeFirst { start: r.start, end: r.end }
    }
}

/// An ideal of the extended ring, homogeneous in the T-grading(s).
#[derive(Clone)]
pub struct BigradedIdealHandle {
    grading: Grading,
    defining_ideal: IdealHandle,
}

impl BigradedIdealHandle {
    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn base_ring(&self) -> &Ring {
        &self.grading.base_ring
    }

    pub fn t_variables(&self) -> &[String] {
        self.grading.t_variables()
    }

    pub fn defining_ideal(&self) -> &IdealHandle {
        &self.defining_ideal
    }

    /// Generators of the defining ideal sorted by (T-degree, polynomial text).
    pub fn generators_by_t_degree(&self) -> Vec<(u32, Polynomial)> {
        let mut v: Vec<(u32, Polynomial)> = self
            .defining_ideal
            .generators()
            .iter()
            .map(|g| (g.terms().keys().map(|m| self.grading.t_degree(m)).max().unwrap_or(0), g.clone()))
            .collect();
        v.sort_by_key(|(d, p)| (*d, p.to_string()));
        v
    }

    /// Bigraded Hilbert function of `S / defining ideal`: keys are
    /// `(T-degree, internal degree)` for `n ≤ nmax`, `d ≤ dmax`. Single
    /// T-block only.
    pub fn hilbert_dims(&self, nmax: i64, dmax: i64) -> Result<GradedDims> {
        let sub = ideal_submodule(&self.defining_ideal, &ModuleOrder::pot(TermOrder::DegRevLex));
        bigraded_quotient_dims(&self.grading, &sub, &[0], nmax, dmax)
    }
}

impl fmt::Display for BigradedIdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.generators_by_t_degree().iter().map(|(_, p)| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A Rees or associated graded module presented as `S^k / K`; basis vector
/// `j` stands for the `j`-th generator of `M` in T-degree 0.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub grading: Grading,
    pub presentation: ModulePresentation,
}

impl GradedModule {
    pub fn relation_vectors(&self, ord: &ModuleOrder) -> Vec<Vector> {
        self.presentation.relations().iter().map(|r| r.to_vector(ord)).collect()
    }

    pub fn hilbert_dims(&self, nmax: i64, dmax: i64) -> Result<GradedDims> {
        let ord = ModuleOrder::pot(TermOrder::DegRevLex);
        let sub = Submodule::with_order(
            self.grading.ext_ring.nvars(),
            self.presentation.rank(),
            ord.clone(),
            self.relation_vectors(&ord),
        );
        bigraded_quotient_dims(&self.grading, &sub, self.presentation.shifts(), nmax, dmax)
    }
}

/// Result of a relation type computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTypeResult {
    pub rt: u32,
    /// T-degrees of a minimal generating set of the defining ideal/module
    /// (generators in T-degree 0 included).
    pub minimal_generator_t_degrees: Vec<u32>,
    /// `E_n` dimensions keyed by `(n, internal degree)` for `1 ≤ n ≤ rt + 2`;
    /// empty for inhomogeneous input.
    pub effective_dims: GradedDims,
}

/// Internal-degree bound used for the effective dimensions attached to a
/// [`RelationTypeResult`].
pub const EFFECTIVE_DMAX: i64 = 10;

fn ideal_submodule(i: &IdealHandle, ord: &ModuleOrder) -> Submodule {
    let gens = i
        .generators()
        .iter()
        .map(|g| Vector::from_component(g.terms(), 0, ord))
        .collect();
    Submodule::with_order(i.ring().nvars(), 1, ord.clone(), gens)
}

fn embed_poly(p: &Polynomial, pos: usize, offset: usize, nvars: usize, ord: &ModuleOrder) -> Vector {
    Vector::from_unsorted(
        p.terms()
            .iter()
            .map(|(m, c)| (Term::new(m.embed(offset, nvars), pos), c.clone()))
            .collect(),
        ord,
    )
}

fn embed_vector(v: &Vector, offset: usize, nvars: usize, pos_offset: usize, ord: &ModuleOrder) -> Vector {
    Vector::from_unsorted(
        v.terms()
            .iter()
            .map(|(t, c)| (Term::new(t.mono.embed(offset, nvars), t.pos + pos_offset), c.clone()))
            .collect(),
        ord,
    )
}

/// Polynomials `T_i - f_i * tag` over `ℚ[tags, x, T]`, for one block.
fn tag_relations(
    gens: &[Polynomial],
    tag: usize,
    t_start: usize,
    ntags: usize,
    total: usize,
    ord: &ModuleOrder,
) -> Vec<Vector> {
    gens.iter()
        .enumerate()
        .map(|(i, f)| {
            let mut terms: Vec<(Term, crate::polycore::Rational)> = f
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = m.embed(ntags, total).exponents().to_vec();
                    e[tag] += 1;
                    (Term::new(Monomial::from_exponents(e), 0), -c.clone())
                })
                .collect();
            terms.push((Term::new(Monomial::var(total, ntags + t_start + i), 0), rational(1, 1)));
            Vector::from_unsorted(terms, ord)
        })
        .collect()
}

/// Eliminate the first `ntags` variables: the elements of the reduced basis
/// free of them, with the tag slots removed.
fn eliminate_tags(
    gens: &[Vector],
    ntags: usize,
    total: usize,
    ord: &ModuleOrder,
    cancel: Option<&CancelToken>,
) -> Result<Vec<Vector>> {
    let gb = engine::buchberger(gens, ord, &[], cancel)?;
    Ok(gb
        .into_iter()
        .filter(|g| g.terms().iter().all(|(t, _)| t.mono.partial_degree(0..ntags) == 0))
        .map(|g| g.map_monomials(|m| m.restrict(ntags..total), ord))
        .collect())
}

/// Defining ideal of the Rees algebra `A[It]`.
pub fn rees_ideal(i: &IdealHandle) -> Result<BigradedIdealHandle> {
    rees_ideal_with_cancel(i, None)
}

pub fn rees_ideal_with_cancel(i: &IdealHandle, cancel: Option<&CancelToken>) -> Result<BigradedIdealHandle> {
    let base = i.ring();
    let gens = i.generators();
    let grading = Grading::new(base, &[("T", gens)])?;
    let n = base.nvars();
    let total = 1 + grading.ext_ring.nvars();
    let ord = ModuleOrder::pot(TermOrder::BlockElimination(1));
    let mut rows = tag_relations(gens, 0, n, 1, total, &ord);
    for q in base.relations() {
        rows.push(embed_poly(q, 0, 1, total, &ord));
    }
    let kept = eliminate_tags(&rows, 1, total, &ord, cancel)?;
    let ext = grading.ext_ring.clone();
    let polys = kept
        .iter()
        .map(|v| Polynomial::from_map_unchecked(&ext, v.component(0)))
        .collect();
    Ok(BigradedIdealHandle { grading, defining_ideal: IdealHandle::new(&ext, polys)? })
}

/// Defining ideal of the multi-Rees algebra `A[Iu, Jv]`, bigraded by the
/// `U`- and `V`-blocks.
pub fn multi_rees_ideal(i: &IdealHandle, j: &IdealHandle) -> Result<BigradedIdealHandle> {
    if i.ring() != j.ring() {
        return Err(Error::RingMismatch("ideals over different rings".into()));
    }
    let base = i.ring();
    let grading = Grading::new(base, &[("U", i.generators()), ("V", j.generators())])?;
    let n = base.nvars();
    let total = 2 + grading.ext_ring.nvars();
    let ord = ModuleOrder::pot(TermOrder::BlockElimination(2));
    let mut rows = tag_relations(i.generators(), 0, n, 2, total, &ord);
    rows.extend(tag_relations(j.generators(), 1, n + i.generators().len(), 2, total, &ord));
    for q in base.relations() {
        rows.push(embed_poly(q, 0, 2, total, &ord));
    }
    let kept = eliminate_tags(&rows, 2, total, &ord, None)?;
    let ext = grading.ext_ring.clone();
    let polys = kept
        .iter()
        .map(|v| Polynomial::from_map_unchecked(&ext, v.component(0)))
        .collect();
    Ok(BigradedIdealHandle { grading, defining_ideal: IdealHandle::new(&ext, polys)? })
}

fn check_same_ring(i: &IdealHandle, m: &ModulePresentation) -> Result<()> {
    if i.ring() != m.ring() {
        return Err(Error::RingMismatch("ideal and module over different rings".into()));
    }
    Ok(())
}

/// Presentation of the Rees module `⊕ I^n M t^n` over `S`: the kernel of
/// `S^k → (P^r / N)[s]`, `e_j ↦ g_j`, `T_i ↦ f_i s`, where `g_j` are the
/// generators of `M` and `N` its relations (ring relations included).
///
/// The kernel is computed exactly, by eliminating `s` with an order that
/// puts the `P^r` block first and compares terms of the `S^k` block by
/// monomial (s-elimination) before position.
pub fn rees_module_ideal(i: &IdealHandle, m: &ModulePresentation) -> Result<GradedModule> {
    rees_module_with_cancel(i, m, None)
}

pub fn rees_module_with_cancel(
    i: &IdealHandle,
    m: &ModulePresentation,
    cancel: Option<&CancelToken>,
) -> Result<GradedModule> {
    check_same_ring(i, m)?;
    let base = i.ring();
    let grading = Grading::new(base, &[("T", i.generators())])?;
    let n = base.nvars();
    let total = 1 + grading.ext_ring.nvars();
    let r = m.rank();
    let mgens = m.generator_vectors();
    let k = mgens.len();
    let ext = grading.ext_ring.clone();
    if k == 0 {
        let presentation = ModulePresentation::cokernel(&ext, 1, vec![FreeModuleElem::unit(&ext, 1, 0)])?;
        return Ok(GradedModule { grading, presentation });
    }
    let ord = ModuleOrder {
        mono: TermOrder::BlockElimination(1),
        block_starts: vec![r],
        pot: false,
    };
    let mut rows: Vec<Vector> = Vec::new();
    for (j, g) in mgens.iter().enumerate() {
        let mut v = embed_vector(g, 1, total, 0, &ord);
        v = v.add(&Vector::from_unsorted(vec![(Term::new(Monomial::one(total), r + j), rational(1, 1))], &ord), &ord);
        rows.push(v);
    }
    for rel in m.relation_vectors() {
        rows.push(embed_vector(&rel, 1, total, 0, &ord));
    }
    let tags = tag_relations(i.generators(), 0, n, 1, total, &ord);
    for t in &tags {
        let tm = t.component(0);
        for pos in 0..r {
            rows.push(Vector::from_component(&tm, pos, &ord));
        }
    }
    let gb = engine::buchberger(&rows, &ord, &[], cancel)?;
    let kernel: Vec<FreeModuleElem> = gb
        .into_iter()
        .filter(|g| g.lead_term().is_some_and(|t| t.pos >= r))
        .filter(|g| g.terms().iter().all(|(t, _)| t.mono.exponents()[0] == 0))
        .map(|g| {
            let v = g.map_monomials(|mm| mm.restrict(1..total), &ord).map_positions(|p| p - r, &ord);
            FreeModuleElem::from_vector(&ext, k, &v)
        })
        .collect();
    let shifts: Vec<i64> = mgens
        .iter()
        .map(|g| g.degree(m.shifts()).unwrap_or(0))
        .collect();
    let presentation = ModulePresentation::cokernel(&ext, k, kernel)?.with_shifts(shifts)?;
    Ok(GradedModule { grading, presentation })
}

/// Least `r ≥ 1` such that the T-homogeneous submodule generated by `gens`
/// in `S^rank` is generated by its elements of T-degree `≤ r`, together
/// with the T-degrees of a minimal generating set.
///
/// A reduced basis for an order comparing T-degree first has the property
/// that its elements of T-degree `≤ d` generate every element of T-degree
/// `≤ d`: reducing such an element only ever uses basis elements of no
/// larger T-degree. So it suffices to scan that basis by T-degree.
pub fn t_generation_degree(grading: &Grading, rank: usize, gens: &[Vector]) -> (u32, Vec<u32>) {
    let ord = ModuleOrder::top(grading.t_first_order());
    let nvars = grading.ext_ring.nvars();
    let sub = Submodule::with_order(nvars, rank, ord.clone(), gens.to_vec());
    let tdeg = |v: &Vector| v.lead_term().map_or(0, |t| grading.t_degree(&t.mono));
    let mut basis: Vec<Vector> = sub.gb().to_vec();
    basis.sort_by_key(|v| tdeg(v));
    let mut kept: Vec<Vector> = Vec::new();
    let mut degrees = Vec::new();
    let mut span = Submodule::with_order(nvars, rank, ord.clone(), Vec::new());
    for g in basis {
        if !span.contains(&g) {
            degrees.push(tdeg(&g));
            kept.push(g);
            span = Submodule::with_order(nvars, rank, ord.clone(), kept.clone());
        }
    }
    let rt = degrees.iter().copied().max().unwrap_or(0).max(1);
    (rt, degrees)
}

/// Dimensions of `E_n = 𝒬_n / ⟨𝒬_{<n}⟩_n` for the relation module `gens`
/// of `S^rank` (basis shifts `shifts`), keyed by internal degree.
fn effective_dims(
    grading: &Grading,
    rank: usize,
    shifts: &[i64],
    gens: &[Vector],
    n: u32,
    dmax: i64,
) -> GradedDims {
    let ord = ModuleOrder::top(grading.t_first_order());
    let nvars = grading.ext_ring.nvars();
    let full = Submodule::with_order(nvars, rank, ord.clone(), gens.to_vec());
    let tdeg = |v: &Vector| v.lead_term().map_or(0, |t| grading.t_degree(&t.mono));
    let lower: Vec<Vector> = full.gb().iter().filter(|v| tdeg(v) < n).cloned().collect();
    let lower = Submodule::with_order(nvars, rank, ord, lower);
    let weights = single_block_weights(grading);
    let pos: Vec<Vec<i64>> = shifts.iter().map(|&s| vec![s, 0]).collect();
    let mut out = GradedDims::new();
    for d in 0..=dmax {
        let target = [d, n as i64];
        let a = lower.quotient_dim_weighted(&weights, pos.clone(), &target);
        let b = full.quotient_dim_weighted(&weights, pos.clone(), &target);
        out.insert(vec![d], a - b);
    }
    out
}

fn single_block_weights(grading: &Grading) -> Vec<Vec<i64>> {
    let t = grading.t_range();
    (0..grading.ext_ring.nvars())
        .map(|v| vec![grading.internal[v], i64::from(t.contains(&v))])
        .collect()
}

fn bigraded_quotient_dims(
    grading: &Grading,
    sub: &Submodule,
    shifts: &[i64],
    nmax: i64,
    dmax: i64,
) -> Result<GradedDims> {
    if grading.blocks.len() != 1 {
        return Err(Error::Unsupported("Hilbert function of a multi-block grading".into()));
    }
    let weights = single_block_weights(grading);
    let pos: Vec<Vec<i64>> = shifts.iter().map(|&s| vec![s, 0]).collect();
    let mut out = GradedDims::new();
    for n in 0..=nmax {
        for d in 0..=dmax {
            out.insert(vec![n, d], sub.quotient_dim_weighted(&weights, pos.clone(), &[d, n]));
        }
    }
    Ok(out)
}

fn bihomogeneous(grading: &Grading, shifts: &[i64], gens: &[Vector]) -> bool {
    let w = single_block_weights(grading);
    let internal: Vec<i64> = w.iter().map(|v| v[0]).collect();
    let tw: Vec<i64> = w.iter().map(|v| v[1]).collect();
    gens.iter().all(|g| g.is_weighted_homogeneous(&internal, shifts) && g.is_weighted_homogeneous(&tw, &[]))
}

fn relation_type_of(grading: &Grading, rank: usize, shifts: &[i64], gens: &[Vector]) -> RelationTypeResult {
    let (rt, mut degrees) = t_generation_degree(grading, rank, gens);
    degrees.sort_unstable();
    let mut effective = GradedDims::new();
    if bihomogeneous(grading, shifts, gens) {
        for n in 1..=rt + 2 {
            for (k, v) in effective_dims(grading, rank, shifts, gens, n, EFFECTIVE_DMAX).entries() {
                effective.insert(vec![n as i64, k[0]], *v);
            }
        }
    }
    RelationTypeResult { rt, minimal_generator_t_degrees: degrees, effective_dims: effective }
}

/// `rt(I; M)` (with `M = A` when `m` is `None`).
pub fn relation_type(i: &IdealHandle, m: Option<&ModulePresentation>) -> Result<RelationTypeResult> {
    relation_type_with_cancel(i, m, None)
}

pub fn relation_type_with_cancel(
    i: &IdealHandle,
    m: Option<&ModulePresentation>,
    cancel: Option<&CancelToken>,
) -> Result<RelationTypeResult> {
    match m {
        None => {
            let rees = rees_ideal_with_cancel(i, cancel)?;
            let ord = ModuleOrder::pot(TermOrder::DegRevLex);
            let gens = ideal_submodule(&rees.defining_ideal, &ord).gens().to_vec();
            Ok(relation_type_of(&rees.grading, 1, &[0], &gens))
        }
        Some(m) => {
            let rees = rees_module_with_cancel(i, m, cancel)?;
            let ord = ModuleOrder::pot(TermOrder::DegRevLex);
            let gens = rees.relation_vectors(&ord);
            Ok(relation_type_of(&rees.grading, rees.presentation.rank(), rees.presentation.shifts(), &gens))
        }
    }
}

/// Defining data of `gr_I(A)`: the Rees ideal plus `I·S`.
pub fn assoc_graded_ideal(i: &IdealHandle) -> Result<BigradedIdealHandle> {
    let rees = rees_ideal(i)?;
    let ext = rees.grading.ext_ring.clone();
    let mut gens = rees.defining_ideal.generators().to_vec();
    for f in i.generators() {
        gens.push(f.in_ring(&i.ring().ambient())?.extend_to(&ext)?);
    }
    Ok(BigradedIdealHandle { grading: rees.grading, defining_ideal: IdealHandle::new(&ext, gens)? })
}

/// Presentation of `gr_I(M) = ⊕ I^n M / I^{n+1} M` over `S`.
pub fn assoc_graded_module(i: &IdealHandle, m: &ModulePresentation) -> Result<GradedModule> {
    let rees = rees_module_ideal(i, m)?;
    let ext = rees.grading.ext_ring.clone();
    let k = rees.presentation.rank();
    let mut rels = rees.presentation.relations().to_vec();
    for f in i.generators() {
        let fe = f.in_ring(&i.ring().ambient())?.extend_to(&ext)?;
        for j in 0..k {
            let mut comps = vec![Polynomial::zero(&ext); k];
            comps[j] = fe.clone();
            rels.push(FreeModuleElem::new(&ext, comps)?);
        }
    }
    let presentation = ModulePresentation::cokernel(&ext, k, rels)?
        .with_shifts(rees.presentation.shifts().to_vec())?;
    Ok(GradedModule { grading: rees.grading, presentation })
}

/// Result of [`assoc_graded_presentation`].
#[derive(Clone)]
pub enum AssocGraded {
    Ring(BigradedIdealHandle),
    Module(GradedModule),
}

pub fn assoc_graded_presentation(i: &IdealHandle, m: Option<&ModulePresentation>) -> Result<AssocGraded> {
    match m {
        None => Ok(AssocGraded::Ring(assoc_graded_ideal(i)?)),
        Some(m) => Ok(AssocGraded::Module(assoc_graded_module(i, m)?)),
    }
}

/// Relation type of `gr_I(A)` (or `gr_I(M)`) read off its presentation.
pub fn relation_type_of_graded(g: &AssocGraded) -> RelationTypeResult {
    let ord = ModuleOrder::pot(TermOrder::DegRevLex);
    match g {
        AssocGraded::Ring(h) => {
            let gens = ideal_submodule(&h.defining_ideal, &ord).gens().to_vec();
            relation_type_of(&h.grading, 1, &[0], &gens)
        }
        AssocGraded::Module(gm) => {
            let gens = gm.relation_vectors(&ord);
            relation_type_of(&gm.grading, gm.presentation.rank(), gm.presentation.shifts(), &gens)
        }
    }
}

/// Graded dimensions of `E(I; M)_n` in internal degrees `0..=dmax`.
pub fn effective_relations_dims(
    i: &IdealHandle,
    m: Option<&ModulePresentation>,
    n: u32,
    dmax: i64,
) -> Result<GradedDims> {
    if n == 0 {
        return Err(Error::InvalidArgument("effective relations start at n = 1".into()));
    }
    i.check_homogeneous()?;
    if let Some(m) = m {
        m.check_homogeneous()?;
    }
    let ord = ModuleOrder::pot(TermOrder::DegRevLex);
    let (grading, rank, shifts, gens) = match m {
        None => {
            let rees = rees_ideal(i)?;
            let gens = ideal_submodule(&rees.defining_ideal, &ord).gens().to_vec();
            (rees.grading, 1, vec![0], gens)
        }
        Some(m) => {
            let rees = rees_module_ideal(i, m)?;
            let gens = rees.relation_vectors(&ord);
            let rank = rees.presentation.rank();
            (rees.grading, rank, rees.presentation.shifts().to_vec(), gens)
        }
    };
    Ok(effective_dims(&grading, rank, &shifts, &gens, n, dmax))
}

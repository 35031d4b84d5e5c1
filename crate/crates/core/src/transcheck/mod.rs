//! Bounded decision procedures for normal transversality and related
//! conditions.
//!
//! The maps compared here (`π̄`, `σ̄`, `φ̄`) are natural graded surjections
//! with finite-dimensional pieces, so each is an isomorphism in a given
//! range exactly when source and target have the same graded dimensions
//! there. The maps are never built. Every "for all p, q" statement is
//! truncated at explicit bounds carried in the verdict.

mod verdict;


pub use verdict::{Bounds, CheckVerdict, EvidenceRow, EvidenceTable, Status, Witness};

use crate::error::{Error, Result};
use crate::groebner::{default_module_order, eliminate_top, relation_vectors, Submodule, Vector};
use crate::idealops::{ideal_colon, ideal_equal, ideal_power, IdealHandle, ModulePresentation, Subquotient};
use crate::polycore::{Polynomial, Ring};
use crate::reeslab::relation_type;
use crate::torlab::tor1_subquotient;
use rayon::prelude::*;
use serde::Serialize;

pub const DEFAULT_PMAX: u32 = 3;
pub const DEFAULT_QMAX: u32 = 3;
pub const DEFAULT_NMAX: u32 = 6;
pub const DEFAULT_DMAX: i64 = 10;

/// Precomputed powers and the module data lifted to the ambient ring.
struct Ctx {
    ring: Ring,
    nvars: usize,
    rank: usize,
    shifts: Vec<i64>,
    gens: Vec<Vector>,
    rels: Vec<Vector>,
    ip: Vec<IdealHandle>,
    jp: Vec<IdealHandle>,
    sp: Vec<IdealHandle>,
    dmax: i64,
}

impl Ctx {
    fn new(
        i: &IdealHandle,
        j: &IdealHandle,
        m: &ModulePresentation,
        (pmax, qmax, smax): (u32, u32, u32),
        dmax: i64,
    ) -> Result<Ctx> {
        if i.ring() != j.ring() || i.ring() != m.ring() {
            return Err(Error::RingMismatch("ideals and module over different rings".into()));
        }
        let sum = i.sum(j)?;
        let (ip, (jp, sp)) = rayon::join(
            || (0..=pmax).map(|p| ideal_power(i, p)).collect(),
            || {
                rayon::join(
                    || (0..=qmax).map(|q| ideal_power(j, q)).collect(),
                    || (0..=smax).map(|n| ideal_power(&sum, n)).collect(),
                )
            },
        );
        Ok(Ctx {
            ring: i.ring().clone(),
            nvars: i.ring().nvars(),
            rank: m.rank(),
            shifts: m.shifts().to_vec(),
            gens: m.generator_vectors(),
            rels: m.relation_vectors(),
            ip,
            jp,
            sp,
            dmax,
        })
    }

    /// Generators of `ideal · G` for the module generators `G`.
    fn times(&self, ideal: &IdealHandle) -> Vec<Vector> {
        times_gens(ideal, &self.gens)
    }

    fn with_rels(&self, mut v: Vec<Vector>) -> Vec<Vector> {
        v.extend(self.rels.iter().cloned());
        v
    }

    fn ij(&self, p: u32, q: u32) -> IdealHandle {
        self.ip[p as usize].product(&self.jp[q as usize]).expect("same ring")
    }

    /// `I^p J^q M / (I+J) I^p J^q M`.
    fn multi_piece(&self, p: u32, q: u32) -> Subquotient {
        let mut bottom = self.times(&self.ij(p + 1, q));
        bottom.extend(self.times(&self.ij(p, q + 1)));
        Subquotient::new(
            self.nvars,
            self.rank,
            self.shifts.clone(),
            self.times(&self.ij(p, q)),
            self.with_rels(bottom),
        )
    }

    /// `(I+J)^n M / (I+J)^{n+1} M`.
    fn gr_piece(&self, n: u32) -> Subquotient {
        Subquotient::new(
            self.nvars,
            self.rank,
            self.shifts.clone(),
            self.times(&self.sp[n as usize]),
            self.with_rels(self.times(&self.sp[n as usize + 1])),
        )
    }

    /// `J^q M / J^{q+1} M`.
    fn gr_j_piece(&self, q: u32) -> Subquotient {
        Subquotient::new(
            self.nvars,
            self.rank,
            self.shifts.clone(),
            self.times(&self.jp[q as usize]),
            self.with_rels(self.times(&self.jp[q as usize + 1])),
        )
    }

    /// `J^q M` as a subquotient `(J^q G + N) / N`.
    fn j_power_module(&self, q: u32) -> Subquotient {
        Subquotient::new(
            self.nvars,
            self.rank,
            self.shifts.clone(),
            self.times(&self.jp[q as usize]),
            self.rels.clone(),
        )
    }

    fn zeros(&self) -> Vec<u64> {
        vec![0; self.dmax as usize + 1]
    }

    /// Graded dimensions of `gr_I(A)_p ⊗_A gr_J(M)_q`.
    ///
    /// With `I^p/I^{p+1} = P^a / K` (generators `a_i` of degree `e_i`) and
    /// `gr_J(M)_q = U / V` inside `P^r`, the tensor product is
    /// `U^a / (V^a + K·U)` inside `P^{ra}`, block `i` shifted by `e_i`.
    fn tensor_dims(&self, p: u32, q: u32) -> Vec<u64> {
        let ord = default_module_order();
        let f = Subquotient::new(
            self.nvars,
            1,
            vec![0],
            self.ip[p as usize].generator_vectors(),
            {
                let mut b = self.ip[p as usize + 1].generator_vectors();
                b.extend(relation_vectors(&self.ring, 1, &ord));
                b
            },
        );
        let fp = f.present();
        let a = fp.rank();
        let x = self.gr_j_piece(q);
        let xg = x.minimal_generators();
        if a == 0 || xg.is_empty() {
            return self.zeros();
        }
        let r = self.rank;
        let place = |v: &Vector, i: usize| v.map_positions(|m| i * r + m, &ord);
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        for i in 0..a {
            top.extend(xg.iter().map(|g| place(g, i)));
            bottom.extend(x.bottom().gens().iter().map(|g| place(g, i)));
        }
        for kappa in fp.kernel.gens() {
            for g in &xg {
                let mut acc = Vector::zero();
                for i in 0..a {
                    let c = kappa.component(i);
                    if !c.is_empty() {
                        acc = acc.add(&place(&g.mul_poly(&c, &ord), i), &ord);
                    }
                }
                if !acc.is_zero() {
                    bottom.push(acc);
                }
            }
        }
        let fshifts = &fp.shifts;
        let shifts: Vec<i64> =
            (0..a).flat_map(|i| self.shifts.iter().map(move |s| fshifts[i] + s)).collect();
        Subquotient::new(self.nvars, r * a, shifts, top, bottom).dims(self.dmax)
    }
}

/// Tor dimensions of one cell, by internal degree: Tor_1 and Tor_2.
type DimPair = (Vec<u64>, Vec<u64>);

pub(crate) fn times_gens(ideal: &IdealHandle, gens: &[Vector]) -> Vec<Vector> {
    let ord = default_module_order();
    let mut out: Vec<Vector> = Vec::new();
    for f in ideal.generators() {
        for g in gens {
            let v = g.mul_poly(f.terms(), &ord);
            if !v.is_zero() && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

fn check_homogeneous(i: &IdealHandle, j: &IdealHandle, m: &ModulePresentation) -> Result<()> {
    i.check_homogeneous()?;
    j.check_homogeneous()?;
    m.check_homogeneous()
}

fn first_diff(a: &[u64], b: &[u64]) -> Option<i64> {
    a.iter().zip(b).position(|(x, y)| x != y).map(|d| d as i64)
}

fn add_dims(acc: &mut [u64], v: &[u64]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

fn default_module(i: &IdealHandle, m: Option<&ModulePresentation>) -> ModulePresentation {
    match m {
        Some(m) => m.clone(),
        None => ModulePresentation::free(i.ring(), 1).expect("rank 1"),
    }
}

fn cells(pmin: u32, pmax: u32, qmin: u32, qmax: u32) -> Vec<(u32, u32)> {
    (pmin..=pmax).flat_map(|p| (qmin..=qmax).map(move |q| (p, q))).collect()
}

/// `I^p M ∩ J^q M = I^p J^q M` for `1 ≤ p ≤ pmax`, `1 ≤ q ≤ qmax`.
pub fn check_intersection_condition(
    i: &IdealHandle,
    j: &IdealHandle,
    m: Option<&ModulePresentation>,
    pmax: u32,
    qmax: u32,
) -> Result<CheckVerdict> {
    let m = default_module(i, m);
    let ctx = Ctx::new(i, j, &m, (pmax, qmax, 0), 0)?;
    let grid = cells(1, pmax, 1, qmax);
    let results: Vec<bool> = grid
        .par_iter()
        .map(|&(p, q)| {
            let a = Submodule::new(ctx.nvars, ctx.rank, ctx.with_rels(ctx.times(&ctx.ip[p as usize])));
            let b = Submodule::new(ctx.nvars, ctx.rank, ctx.with_rels(ctx.times(&ctx.jp[q as usize])));
            let target = Submodule::new(ctx.nvars, ctx.rank, ctx.with_rels(ctx.times(&ctx.ij(p, q))));
            target.contains_sub(&a.intersect(&b))
        })
        .collect();
    let mut table = EvidenceTable::new("intersection", &["equal"]);
    let mut witness = None;
    for (&(p, q), &ok) in grid.iter().zip(&results) {
        table.push(vec![p, q], vec![vec![ok as u64]]);
        if !ok && witness.is_none() {
            witness = Some(Witness {
                p: Some(p),
                q: Some(q),
                description: "I^p M ∩ J^q M is strictly larger than I^p J^q M".into(),
                ..Witness::default()
            });
        }
    }
    let bounds = Bounds { pmax: Some(pmax), qmax: Some(qmax), ..Bounds::default() };
    Ok(CheckVerdict::from_witness(bounds, witness, vec![table]))
}

fn sigma_table(ctx: &Ctx, nmax: u32) -> (EvidenceTable, Option<Witness>) {
    let grid: Vec<(u32, u32)> = cells(0, nmax, 0, nmax).into_iter().filter(|(p, q)| p + q <= nmax).collect();
    let (multi, gr): (Vec<Vec<u64>>, Vec<Vec<u64>>) = rayon::join(
        || grid.par_iter().map(|&(p, q)| ctx.multi_piece(p, q).dims(ctx.dmax)).collect(),
        || (0..=nmax).into_par_iter().map(|n| ctx.gr_piece(n).dims(ctx.dmax)).collect(),
    );
    let mut table = EvidenceTable::new("sigma", &["multigraded", "graded"]);
    let mut witness = None;
    for n in 0..=nmax {
        let mut left = ctx.zeros();
        for (k, &(p, q)) in grid.iter().enumerate() {
            if p + q == n {
                add_dims(&mut left, &multi[k]);
            }
        }
        let right = gr[n as usize].clone();
        if witness.is_none() {
            if let Some(d) = first_diff(&left, &right) {
                witness = Some(Witness {
                    n: Some(n),
                    degree: Some(d),
                    description: format!(
                        "sum over p+q={n} of dim I^pJ^qM/(I+J)I^pJ^qM is {}, dim (I+J)^nM/(I+J)^(n+1)M is {}",
                        left[d as usize], right[d as usize]
                    ),
                    ..Witness::default()
                });
            }
        }
        table.push(vec![n], vec![left, right]);
    }
    (table, witness)
}

fn pi_table(ctx: &Ctx, pmax: u32, qmax: u32) -> (EvidenceTable, Option<Witness>) {
    let grid = cells(0, pmax, 0, qmax);
    let rows: Vec<(Vec<u64>, Vec<u64>)> = grid
        .par_iter()
        .map(|&(p, q)| rayon::join(|| ctx.tensor_dims(p, q), || ctx.multi_piece(p, q).dims(ctx.dmax)))
        .collect();
    let mut table = EvidenceTable::new("pi", &["tensor", "multigraded"]);
    let mut witness = None;
    for (&(p, q), (left, right)) in grid.iter().zip(rows) {
        if witness.is_none() {
            if let Some(d) = first_diff(&left, &right) {
                witness = Some(Witness {
                    p: Some(p),
                    q: Some(q),
                    degree: Some(d),
                    description: format!(
                        "dim of gr_I(A)_p ⊗ gr_J(M)_q is {}, dim of I^pJ^qM/(I+J)I^pJ^qM is {}",
                        left[d as usize], right[d as usize]
                    ),
                    ..Witness::default()
                });
            }
        }
        table.push(vec![p, q], vec![left, right]);
    }
    (table, witness)
}

/// `σ̄ : gr_{I,J}(M) → gr_{I+J}(M)` compared in total degrees `n ≤ nmax`.
pub fn check_sigma_iso(
    i: &IdealHandle,
    j: &IdealHandle,
    m: Option<&ModulePresentation>,
    nmax: u32,
    dmax: i64,
) -> Result<CheckVerdict> {
    let m = default_module(i, m);
    check_homogeneous(i, j, &m)?;
    let ctx = Ctx::new(i, j, &m, (nmax + 1, nmax + 1, nmax + 1), dmax)?;
    let (table, witness) = sigma_table(&ctx, nmax);
    let bounds = Bounds { nmax: Some(nmax), dmax: Some(dmax), ..Bounds::default() };
    Ok(CheckVerdict::from_witness(bounds, witness, vec![table]))
}

/// `π̄ : gr_I(A) ⊗ gr_J(M) → gr_{I,J}(M)` compared in bidegrees
/// `p ≤ pmax`, `q ≤ qmax`.
pub fn check_pi_iso(
    i: &IdealHandle,
    j: &IdealHandle,
    m: Option<&ModulePresentation>,
    pmax: u32,
    qmax: u32,
    dmax: i64,
) -> Result<CheckVerdict> {
    let m = default_module(i, m);
    check_homogeneous(i, j, &m)?;
    let ctx = Ctx::new(i, j, &m, (pmax + 1, qmax + 1, 0), dmax)?;
    let (table, witness) = pi_table(&ctx, pmax, qmax);
    let bounds = Bounds { pmax: Some(pmax), qmax: Some(qmax), dmax: Some(dmax), ..Bounds::default() };
    Ok(CheckVerdict::from_witness(bounds, witness, vec![table]))
}

/// The two sides of the transversality equivalence, computed independently.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem1Report {
    /// `φ̄ = σ̄ ∘ π̄` is an isomorphism.
    pub condition_i: CheckVerdict,
    /// `Tor_1(A/I^p, J^q M) = 0` and `Tor_1(A/I^p, J^q M / J^{q+1} M) = 0`.
    pub condition_ii: CheckVerdict,
    pub agree: bool,
}

fn condition_i(ctx: &Ctx, pmax: u32, qmax: u32) -> CheckVerdict {
    let nmax = pmax.min(qmax);
    let ((pi, wpi), (sigma, wsigma)) = rayon::join(|| pi_table(ctx, pmax, qmax), || sigma_table(ctx, nmax));
    let bounds = Bounds { pmax: Some(pmax), qmax: Some(qmax), nmax: Some(nmax), dmax: Some(ctx.dmax) };
    CheckVerdict::from_witness(bounds, wpi.or(wsigma), vec![pi, sigma])
}

fn condition_ii(ctx: &Ctx, pmax: u32, qmax: u32) -> CheckVerdict {
    let grid = cells(1, pmax, 0, qmax);
    let rows: Vec<(Vec<u64>, Vec<u64>)> = grid
        .par_iter()
        .map(|&(p, q)| {
            let ideal = &ctx.ip[p as usize];
            let dims = |x: Subquotient| match tor1_subquotient(ideal, &x) {
                Some(t) => t.dims(ctx.dmax),
                None => ctx.zeros(),
            };
            rayon::join(|| dims(ctx.j_power_module(q)), || dims(ctx.gr_j_piece(q)))
        })
        .collect();
    let mut table = EvidenceTable::new("tor1", &["tor1(A/I^p, J^q M)", "tor1(A/I^p, gr_J(M)_q)"]);
    let mut witness = None;
    for (&(p, q), (a, b)) in grid.iter().zip(rows) {
        if witness.is_none() {
            let which = if a.iter().any(|&v| v > 0) {
                Some(("Tor_1(A/I^p, J^q M)", &a))
            } else if b.iter().any(|&v| v > 0) {
                Some(("Tor_1(A/I^p, J^q M/J^(q+1) M)", &b))
            } else {
                None
            };
            if let Some((name, dims)) = which {
                let d = dims.iter().position(|&v| v > 0).unwrap();
                witness = Some(Witness {
                    p: Some(p),
                    q: Some(q),
                    degree: Some(d as i64),
                    description: format!("{name} has dimension {} in this degree", dims[d]),
                    ..Witness::default()
                });
            }
        }
        table.push(vec![p, q], vec![a, b]);
    }
    let bounds = Bounds { pmax: Some(pmax), qmax: Some(qmax), dmax: Some(ctx.dmax), ..Bounds::default() };
    CheckVerdict::from_witness(bounds, witness, vec![table])
}

/// Both sides of the transversality equivalence for `(I, J, M)`.
pub fn check_theorem1(
    i: &IdealHandle,
    j: &IdealHandle,
    m: Option<&ModulePresentation>,
    pmax: u32,
    qmax: u32,
    dmax: i64,
) -> Result<Theorem1Report> {
    let m = default_module(i, m);
    check_homogeneous(i, j, &m)?;
    let ctx = Ctx::new(i, j, &m, (pmax + 1, qmax + 1, pmax.min(qmax) + 1), dmax)?;
    let (condition_i, condition_ii) =
        rayon::join(|| condition_i(&ctx, pmax, qmax), || condition_ii(&ctx, pmax, qmax));
    let agree = condition_i.holds() == condition_ii.holds();
    Ok(Theorem1Report { condition_i, condition_ii, agree })
}

/// The cyclic case: `Tor_1(A/I^p, A/J^q) = Tor_2(A/I^p, A/J^q) = 0` for
/// `1 ≤ p ≤ pmax`, `1 ≤ q ≤ qmax`, against `gr_I(A) ⊗ gr_J(A) ≅ gr_{I+J}(A)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tor2ClauseReport {
    pub tor_side: CheckVerdict,
    pub iso_side: CheckVerdict,
    pub agree: bool,
}

pub fn check_tor2_clause(
    i: &IdealHandle,
    j: &IdealHandle,
    pmax: u32,
    qmax: u32,
    dmax: i64,
) -> Result<Tor2ClauseReport> {
    let m = default_module(i, None);
    check_homogeneous(i, j, &m)?;
    let ctx = Ctx::new(i, j, &m, (pmax + 1, qmax + 1, pmax.min(qmax) + 1), dmax)?;
    let grid = cells(1, pmax, 1, qmax);
    let (rows, iso_side): (Vec<DimPair>, CheckVerdict) = rayon::join(
        || {
            grid.par_iter()
                .map(|&(p, q)| {
                    let ip = &ctx.ip[p as usize];
                    let jq = &ctx.jp[q as usize];
                    let cyclic = Subquotient::new(ctx.nvars, 1, vec![0], vec![Vector::unit(ctx.nvars, 0)], {
                        let mut b = jq.generator_vectors();
                        b.extend(ctx.rels.iter().cloned());
                        b
                    });
                    let ideal = Subquotient::new(ctx.nvars, 1, vec![0], ip.generator_vectors(), ctx.rels.clone());
                    let dims = |t: Option<Subquotient>| t.map(|t| t.dims(dmax)).unwrap_or_else(|| ctx.zeros());
                    rayon::join(
                        || dims(tor1_subquotient(ip, &cyclic)),
                        || dims(tor1_subquotient(jq, &ideal)),
                    )
                })
                .collect()
        },
        || condition_i(&ctx, pmax, qmax),
    );
    let mut table = EvidenceTable::new("tor", &["tor1(A/I^p, A/J^q)", "tor2(A/I^p, A/J^q)"]);
    let mut witness = None;
    for (&(p, q), (a, b)) in grid.iter().zip(rows) {
        if witness.is_none() {
            for (name, dims) in [("Tor_1", &a), ("Tor_2", &b)] {
                if let Some(d) = dims.iter().position(|&v| v > 0) {
                    witness = Some(Witness {
                        p: Some(p),
                        q: Some(q),
                        degree: Some(d as i64),
                        description: format!("{name}(A/I^p, A/J^q) has dimension {} in this degree", dims[d]),
                        ..Witness::default()
                    });
                    break;
                }
            }
        }
        table.push(vec![p, q], vec![a, b]);
    }
    let bounds = Bounds { pmax: Some(pmax), qmax: Some(qmax), dmax: Some(dmax), ..Bounds::default() };
    let tor_side = CheckVerdict::from_witness(bounds, witness, vec![table]);
    let agree = tor_side.holds() == iso_side.holds();
    Ok(Tor2ClauseReport { tor_side, iso_side, agree })
}

/// `rt(I+J; M) ≤ max(rt(I), rt(J; M))`, under the transversality
/// hypothesis checked up to the bounds.
pub fn check_rt_tensor_bound(
    i: &IdealHandle,
    j: &IdealHandle,
    m: Option<&ModulePresentation>,
    bounds: Bounds,
) -> Result<CheckVerdict> {
    let pmax = bounds.pmax.unwrap_or(DEFAULT_PMAX);
    let qmax = bounds.qmax.unwrap_or(DEFAULT_QMAX);
    let dmax = bounds.dmax.unwrap_or(DEFAULT_DMAX);
    let bounds = Bounds { pmax: Some(pmax), qmax: Some(qmax), dmax: Some(dmax), nmax: None };
    let hyp = check_theorem1(i, j, m, pmax, qmax, dmax)?;
    if !(hyp.condition_i.holds() && hyp.condition_ii.holds()) {
        let mut v = CheckVerdict::from_witness(bounds, None, Vec::new());
        v.status = Status::HypothesisViolated;
        v.witness = hyp.condition_i.witness.clone().or(hyp.condition_ii.witness.clone());
        v.evidence = hyp.condition_i.evidence.into_iter().chain(hyp.condition_ii.evidence).collect();
        return Ok(v.detail("hypothesis", "transversality condition"));
    }
    let sum = i.sum(j)?;
    let rt_sum = relation_type(&sum, m)?.rt;
    let rt_i = relation_type(i, None)?.rt;
    let rt_j = relation_type(j, m)?.rt;
    let witness = (rt_sum > rt_i.max(rt_j)).then(|| Witness {
        description: format!("rt(I+J; M) = {rt_sum} exceeds max(rt(I), rt(J; M)) = {}", rt_i.max(rt_j)),
        ..Witness::default()
    });
    Ok(CheckVerdict::from_witness(bounds, witness, hyp.condition_i.evidence)
        .detail("rt_i", rt_i)
        .detail("rt_j", rt_j)
        .detail("rt_sum", rt_sum))
}

/// Whether `K ⊆ (p + Q) P^k` for a presentation `P^k / K` of a module
/// killed by `p`, i.e. whether the module is free over `A/p` (given
/// minimal generators of homogeneous data).
fn free_over_quotient(sq: &Subquotient, p_vecs: &[Vector], ring: &Ring) -> bool {
    let pres = sq.present();
    let k = pres.rank();
    if k == 0 {
        return true;
    }
    let ord = default_module_order();
    let mut gens = Vec::new();
    for f in p_vecs.iter().chain(relation_vectors(ring, 1, &ord).iter()) {
        for j in 0..k {
            gens.push(f.map_positions(|_| j, &ord));
        }
    }
    Submodule::new(sq.nvars(), k, gens).contains_sub(&pres.kernel)
}

/// Hypotheses and conclusion of the flatness criterion for `gr_{(x)}`
/// against `gr_p`: `p^g/p^{g+1}` and `p^g M/p^{g+1} M` free over `A/p`
/// (for `g ≤ pmax`, a bounded proxy) and `x` regular on `A/p`; then the
/// transversality check of `(x)` against `p`.
pub fn check_flatness_criterion(
    p: &IdealHandle,
    x: &[Polynomial],
    m: Option<&ModulePresentation>,
    bounds: Bounds,
) -> Result<CheckVerdict> {
    let pmax = bounds.pmax.unwrap_or(DEFAULT_PMAX);
    let qmax = bounds.qmax.unwrap_or(DEFAULT_QMAX);
    let dmax = bounds.dmax.unwrap_or(DEFAULT_DMAX);
    let bounds = Bounds { pmax: Some(pmax), qmax: Some(qmax), dmax: Some(dmax), nmax: None };
    let ring = p.ring().clone();
    let xi = IdealHandle::new(&ring, x.to_vec())?;
    let mm = default_module(p, m);
    check_homogeneous(p, &xi, &mm)?;
    let ctx = Ctx::new(p, p, &mm, (pmax + 1, 0, 0), dmax)?;
    let a = default_module(p, None);
    let actx = Ctx::new(p, p, &a, (pmax + 1, 0, 0), dmax)?;
    let p_vecs = p.generator_vectors();
    let piece = |c: &Ctx, g: u32| {
        Subquotient::new(
            c.nvars,
            c.rank,
            c.shifts.clone(),
            c.times(&c.ip[g as usize]),
            c.with_rels(c.times(&c.ip[g as usize + 1])),
        )
    };
    let free: Vec<(bool, bool)> = (0..=pmax)
        .into_par_iter()
        .map(|g| {
            rayon::join(
                || free_over_quotient(&piece(&actx, g), &p_vecs, &ring),
                || free_over_quotient(&piece(&ctx, g), &p_vecs, &ring),
            )
        })
        .collect();
    let mut table = EvidenceTable::new("freeness_proxy", &["gr_p(A)_g free", "gr_p(M)_g free"]);
    let mut failed: Option<String> = None;
    for (g, &(fa, fm)) in free.iter().enumerate() {
        table.push(vec![g as u32], vec![vec![fa as u64], vec![fm as u64]]);
        if failed.is_none() && !fa {
            failed = Some(format!("freeness proxy: p^{g}/p^{} is not free over A/p", g + 1));
        } else if failed.is_none() && !fm {
            failed = Some(format!("freeness proxy: p^{g}M/p^{}M is not free over A/p", g + 1));
        }
    }
    if failed.is_none() {
        let mut acc = p.clone();
        for (k, f) in x.iter().enumerate() {
            let next = acc.sum(&IdealHandle::new(&ring, vec![f.clone()])?)?;
            let regular = !f.reduce_mod_ring().is_zero()
                && !next.is_unit()
                && ideal_equal(&ideal_colon(&acc, f)?, &acc)?;
            if !regular {
                failed = Some(format!("regular sequence: x{} is not regular on A/(p, x1..x{k})", k + 1));
                break;
            }
            acc = next;
        }
    }
    if let Some(reason) = failed {
        let mut v = CheckVerdict::from_witness(bounds, None, vec![table]);
        v.status = Status::HypothesisViolated;
        return Ok(v.detail("hypothesis", reason));
    }
    let concl = check_theorem1(&xi, p, m, pmax, qmax, dmax)?;
    let witness = concl.condition_i.witness.clone().or(concl.condition_ii.witness.clone());
    let mut evidence = vec![table];
    evidence.extend(concl.condition_i.evidence);
    Ok(CheckVerdict::from_witness(bounds, witness, evidence)
        .detail("hypothesis", "hypotheses hold (freeness checked by a bounded proxy)"))
}

/// Graded dimensions of `IM ∩ JM` computed as the kernel of the degree-one
/// part of `σ`, `IM ⊕ JM → (I+J)M`: `dim IM + dim JM - dim (I+J)M`.
pub fn sigma1_kernel_dims(
    i: &IdealHandle,
    j: &IdealHandle,
    m: Option<&ModulePresentation>,
    dmax: i64,
) -> Result<Vec<u64>> {
    let m = default_module(i, m);
    check_homogeneous(i, j, &m)?;
    let ctx = Ctx::new(i, j, &m, (1, 1, 1), dmax)?;
    let dims = |id: &IdealHandle| {
        Subquotient::new(ctx.nvars, ctx.rank, ctx.shifts.clone(), ctx.times(id), ctx.rels.clone()).dims(dmax)
    };
    let (a, b, c) = (dims(&ctx.ip[1]), dims(&ctx.jp[1]), dims(&ctx.sp[1]));
    Ok((0..a.len()).map(|d| a[d] + b[d] - c[d]).collect())
}

/// Whether multiplication by `x` is injective on `U / W` (`W ⊆ U ⊆ P^r`,
/// given by generators): every `u ∈ U` with `x u ∈ W` lies in `W`.
fn nonzerodivisor_on(x: &Polynomial, nvars: usize, rank: usize, u: &[Vector], w: &[Vector]) -> bool {
    let ord = default_module_order();
    let mut rows: Vec<(Vector, Vector)> = u.iter().map(|g| (g.mul_poly(x.terms(), &ord), g.clone())).collect();
    rows.extend(w.iter().map(|g| (g.clone(), Vector::zero())));
    let pre = eliminate_top(rank, &rows, &ord);
    let w = Submodule::new(nvars, rank, w.to_vec());
    pre.iter().all(|g| w.contains(g))
}

/// Whether `x` is a nonzero divisor on `M` (hence on the Rees module
/// `⊕ J^q M`) and on `J^q M / J^{q+1} M` for `q ≤ qmax`.
pub fn nonzerodivisor_on_rees_and_graded(
    x: &Polynomial,
    j: &IdealHandle,
    m: Option<&ModulePresentation>,
    qmax: u32,
) -> Result<bool> {
    let m = default_module(j, m);
    let x = x.in_ring(j.ring())?.reduce_mod_ring();
    let ctx = Ctx::new(j, j, &m, (0, qmax + 1, 0), 0)?;
    if !nonzerodivisor_on(&x, ctx.nvars, ctx.rank, &ctx.with_rels(ctx.gens.clone()), &ctx.rels) {
        return Ok(false);
    }
    Ok((0..=qmax).into_par_iter().all(|q| {
        let piece = ctx.gr_j_piece(q);
        nonzerodivisor_on(&x, ctx.nvars, ctx.rank, piece.top().gens(), piece.bottom().gens())
    }))
}

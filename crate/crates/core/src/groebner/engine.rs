//! Buchberger's algorithm for submodules of free modules over ℚ[x], with the
//! normal selection strategy and the Gebauer–Möller installation of pairs.

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use num_traits::One;

use super::vector::{ModuleOrder, Term, Vector};
use crate::error::{Error, Result};
use crate::polycore::Rational;

/// Cooperative cancellation flag, polled between pair reductions.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        CancelToken::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, AtomicOrdering::SeqCst);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(AtomicOrdering::SeqCst)
    }
}

/// Full normal form of `f` with respect to `basis` (all terms reduced).
pub fn reduce(f: &Vector, basis: &[Vector], ord: &ModuleOrder) -> Vector {
    let refs: Vec<&Vector> = basis.iter().collect();
    reduce_refs(f, &refs, ord)
}

fn reduce_refs(f: &Vector, basis: &[&Vector], ord: &ModuleOrder) -> Vector {
    let mut p = f.clone();
    let mut rem: Vec<(Term, Rational)> = Vec::new();
    while let Some((t, c)) = p.lead().cloned() {
        let reducer = basis
            .iter()
            .find(|g| g.lead_term().is_some_and(|l| l.divides(&t)));
        match reducer {
            Some(g) => {
                let (lt, lc) = g.lead().expect("nonzero reducer");
                let q = lt.mono.quotient_of(&t.mono).expect("divides");
                p = p.sub_mul(&(c / lc), &q, g, ord);
            }
            None => rem.push(p.pop_lead().expect("nonzero")),
        }
    }
    rem.reverse();
    Vector::from_sorted_unchecked(rem)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    deg: i64,
}

fn s_vector(f: &Vector, g: &Vector, lcm: &Term, ord: &ModuleOrder) -> Vector {
    let (lf, cf) = f.lead().expect("nonzero");
    let (lg, cg) = g.lead().expect("nonzero");
    let mf = lf.mono.quotient_of(&lcm.mono).expect("lcm");
    let mg = lg.mono.quotient_of(&lcm.mono).expect("lcm");
    let a = f.mul_monomial(&mf, &(Rational::one() / cf));
    a.sub_mul(&(Rational::one() / cg), &mg, g, ord)
}

struct State<'a> {
    ord: &'a ModuleOrder,
    shifts: &'a [i64],
    ideal_case: bool,
    basis: Vec<Vector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn active_basis(&self) -> Vec<&Vector> {
        self.basis
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(g, _)| g)
            .collect()
    }

    fn coprime(&self, a: &Term, b: &Term) -> bool {
        self.ideal_case && a.mono.is_coprime(&b.mono)
    }

    /// Gebauer–Möller update with the new element `h`.
    fn update(&mut self, h: Vector) {
        let k = self.basis.len();
        let lh = h.lead_term().expect("nonzero").clone();
        let mut cands: Vec<(usize, Term)> = Vec::new();
        for (j, g) in self.basis.iter().enumerate() {
            if !self.active[j] {
                continue;
            }
            if let Some(l) = g.lead_term().and_then(|lg| lg.lcm(&lh)) {
                cands.push((j, l));
            }
        }
        // criterion M / F on the new pairs
        let mut kept: Vec<(usize, Term, bool)> = Vec::new();
        let mut rest = cands.clone();
        while let Some((j, l)) = (!rest.is_empty()).then(|| rest.remove(0)) {
            let lj = self.basis[j].lead_term().expect("nonzero").clone();
            let cop = self.coprime(&lh, &lj);
            let dominated = rest.iter().any(|(_, l2)| l2.divides(&l))
                || kept.iter().any(|(_, l2, _)| l2.divides(&l));
            if cop || !dominated {
                kept.push((j, l, cop));
            }
        }
        // criterion B on the old pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lead_term().expect("nonzero").lcm(&lh);
            let lj = basis[p.j].lead_term().expect("nonzero").lcm(&lh);
            li.as_ref() == Some(&p.lcm) || lj.as_ref() == Some(&p.lcm)
        });
        for (j, l, cop) in kept {
            if cop {
                continue;
            }
            let deg = l.degree(self.shifts);
            self.pairs.push(Pair { i: j, j: k, lcm: l, deg });
        }
        for (j, g) in self.basis.iter().enumerate() {
            if self.active[j] && g.lead_term().is_some_and(|lg| lh.divides(lg)) {
                self.active[j] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }

    fn select(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.deg
                .cmp(&q.deg)
                .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(idx))
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
/// increasing leading term. Every input must be sorted for `ord`.
pub fn buchberger(
    gens: &[Vector],
    ord: &ModuleOrder,
    shifts: &[i64],
    cancel: Option<&CancelToken>,
) -> Result<Vec<Vector>> {
    let ideal_case = gens
        .iter()
        .all(|g| g.terms().iter().all(|(t, _)| t.pos == 0));
    let mut st = State {
        ord,
        shifts,
        ideal_case,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let mut inputs: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
    // lower degree first helps the pair queue
    inputs.sort_by(|a, b| {
        a.degree(shifts)
            .cmp(&b.degree(shifts))
            .then_with(|| ord.cmp(a.lead_term().unwrap(), b.lead_term().unwrap()))
    });
    for g in inputs {
        if cancel.is_some_and(CancelToken::is_cancelled) {
            return Err(Error::Cancelled);
        }
        let h = reduce_refs(g, &st.active_basis(), ord);
        if !h.is_zero() {
            st.update(h.monic());
        }
    }
    while let Some(pair) = st.select() {
        if cancel.is_some_and(CancelToken::is_cancelled) {
            return Err(Error::Cancelled);
        }
        let s = s_vector(&st.basis[pair.i], &st.basis[pair.j], &pair.lcm, ord);
        let h = reduce_refs(&s, &st.active_basis(), ord);
        if !h.is_zero() {
            st.update(h.monic());
        }
    }
    let active = st.active_basis().into_iter().cloned().collect();
    Ok(interreduce(active, ord))
}

/// Turn a Gröbner basis with antichain leading terms into the reduced one.
fn interreduce(mut g: Vec<Vector>, ord: &ModuleOrder) -> Vec<Vector> {
    g.sort_by(|a, b| ord.cmp(a.lead_term().unwrap(), b.lead_term().unwrap()));
    // drop elements whose leading term is divisible by another's
    let leads: Vec<Term> = g.iter().map(|v| v.lead_term().unwrap().clone()).collect();
    let mut keep: Vec<Vector> = Vec::new();
    for (i, v) in g.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, l)| j != i && l.divides(&leads[i]) && (l != &leads[i] || j < i));
        if !redundant {
            keep.push(v.clone());
        }
    }
    let mut out: Vec<Vector> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Vector> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let r = reduce(&keep[i], &others, ord).monic();
        out.push(r);
    }
    out.sort_by(|a, b| ord.cmp(a.lead_term().unwrap(), b.lead_term().unwrap()));
    out
}

/// Check the Buchberger criterion: every S-vector of `basis` reduces to 0.
pub fn is_groebner(basis: &[Vector], ord: &ModuleOrder) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (Some(li), Some(lj)) = (basis[i].lead_term(), basis[j].lead_term()) else {
                continue;
            };
            if let Some(l) = li.lcm(lj) {
                let s = s_vector(&basis[i], &basis[j], &l, ord);
                if !reduce(&s, basis, ord).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
